# Borromean rings bounding a C-complex with four clasps.
# Component 1 meets all four clasps; components 2 and 3 meet two each.
components 3
clasp p 1 2 +
clasp q 1 2 -
clasp r 1 3 +
clasp s 1 3 -
order 1 s p r q
order 2 q p
order 3 s r
