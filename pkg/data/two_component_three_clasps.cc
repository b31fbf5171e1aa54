# A two-component link with linking number 1, presented wastefully:
# two positive clasps and one negative, so three clasps where a single
# clasp suffices.
components 2
clasp c1 1 2 +
clasp c2 1 2 +
clasp c3 1 2 -
order 1 c1 c2 c3
order 2 c1 c3 c2
