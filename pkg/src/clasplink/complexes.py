"""Combinatorial C-complexes: signed clasps between components plus the
order in which each component's boundary meets its clasps.

Only the incidence data is modeled; surfaces, genus and embeddings are
not.  Every invariant computed downstream consumes nothing but the clasp
words derived here.

File format (line oriented, ``#`` comments, case-sensitive keywords):

    components <n>
    clasp <id> <a> <b> <+|->     one line per clasp, a and b component indices
    order <k> <id> <id> ...      one line per component; may be empty

The ``order k`` line lists the clasp ids met along component k starting
from its basepoint; rotating the list is a basepoint change.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .words import ClaspWord, SignedLetter


class ComplexFormatError(ValueError):
    """Raised when a complex file cannot be parsed."""


@dataclass(frozen=True)
class Clasp:
    """A signed clasp joining components a and b, stored with a <= b."""

    id: str
    a: int
    b: int
    sign: int

    def __post_init__(self) -> None:
        if not self.id or any(ch.isspace() for ch in self.id):
            raise ValueError(f"clasp id must be a nonempty token without whitespace, got {self.id!r}")
        for endpoint in (self.a, self.b):
            if not isinstance(endpoint, int) or endpoint < 1:
                raise ValueError(f"clasp endpoints must be positive integers, got {endpoint!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"clasp sign must be +1 or -1, got {self.sign!r}")
        if self.a > self.b:
            lo, hi = self.b, self.a
            object.__setattr__(self, "a", lo)
            object.__setattr__(self, "b", hi)

    def other_end(self, k: int) -> int:
        if k == self.a:
            return self.b
        if k == self.b:
            return self.a
        raise ValueError(f"clasp {self.id!r} is not incident to component {k}")


@dataclass(frozen=True)
class CComplex:
    """n components, a tuple of clasps, and one traversal order per component."""

    n: int
    clasps: tuple[Clasp, ...]
    orders: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"component count must be a nonnegative integer, got {self.n!r}")
        if len(self.orders) != self.n:
            raise ValueError(f"expected {self.n} traversal orders, got {len(self.orders)}")


def validate(F: CComplex) -> list[str]:
    """Check every structural invariant; returns a list of violations.

    An empty list means F is well formed.  Violations are descriptions,
    not exceptions, so malformed data can be reported in full.
    """
    violations: list[str] = []
    if F.n < 1:
        violations.append(f"component count must be at least 1, got {F.n}")

    seen: dict[str, Clasp] = {}
    for c in F.clasps:
        if c.id in seen:
            violations.append(f"duplicate clasp id {c.id!r}")
            continue
        seen[c.id] = c
        if c.a == c.b:
            violations.append(f"clasp {c.id!r} is a self-clasp (both ends on component {c.a})")
        for endpoint in (c.a, c.b):
            if endpoint > F.n:
                violations.append(f"clasp {c.id!r} references unknown component {endpoint}")

    well_formed = {
        c.id: c for c in seen.values()
        if c.a != c.b and c.a <= F.n and c.b <= F.n
    }
    for k in range(1, F.n + 1):
        expected = {cid for cid, c in well_formed.items() if k in (c.a, c.b)}
        listed: set[str] = set()
        for cid in F.orders[k - 1]:
            if cid in listed:
                violations.append(f"order for component {k} repeats clasp id {cid!r}")
                continue
            listed.add(cid)
            if cid not in seen:
                violations.append(f"order for component {k} references unknown clasp id {cid!r}")
            elif cid not in expected:
                violations.append(f"order for component {k} lists non-incident clasp {cid!r}")
        for cid in sorted(expected - listed):
            violations.append(f"order for component {k} is incomplete: missing clasp id {cid!r}")
    return violations


def _require_valid(F: CComplex) -> None:
    violations = validate(F)
    if violations:
        raise ValueError("invalid complex: " + "; ".join(violations))


def clasp_word(F: CComplex, k: int) -> ClaspWord:
    """The word read along component k: one letter per clasp met, whose
    index is the component at the clasp's other end and whose sign is the
    clasp's sign."""
    _require_valid(F)
    if not 1 <= k <= F.n:
        raise ValueError(f"component {k} is not a component of this complex (n={F.n})")
    by_id = {c.id: c for c in F.clasps}
    return ClaspWord(tuple(
        SignedLetter(by_id[cid].other_end(k), by_id[cid].sign)
        for cid in F.orders[k - 1]
    ))


def total_clasps(F: CComplex) -> int:
    """Number of clasps; twice this equals the summed clasp word lengths."""
    _require_valid(F)
    return len(F.clasps)


def with_rotated_order(F: CComplex, k: int, r: int) -> CComplex:
    """Move component k's basepoint: rotate its traversal order left by r."""
    if not 1 <= k <= F.n:
        raise ValueError(f"component {k} is not a component of this complex (n={F.n})")
    order = F.orders[k - 1]
    if order:
        r %= len(order)
        order = order[r:] + order[:r]
    orders = F.orders[: k - 1] + (order,) + F.orders[k:]
    return replace(F, orders=orders)


def generate_brn(n: int) -> CComplex:
    """The n-fold generalized Borromean complex: 4n clasps, all pairwise
    linking numbers zero, triple linking number n^2.

    Component 1 meets n negative then n positive clasps with component 3
    and n positive then n negative clasps with component 2, interleaved so
    its word is x3^-n x2^n x3^n x2^-n; components 2 and 3 read x1^n x1^-n
    and (x1 x1^-1)^n respectively.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    p = [f"p{m}" for m in range(1, n + 1)]  # 1-2 positive
    q = [f"q{m}" for m in range(1, n + 1)]  # 1-2 negative
    r = [f"r{m}" for m in range(1, n + 1)]  # 1-3 positive
    s = [f"s{m}" for m in range(1, n + 1)]  # 1-3 negative
    clasps = tuple(
        [Clasp(cid, 1, 2, 1) for cid in p]
        + [Clasp(cid, 1, 2, -1) for cid in q]
        + [Clasp(cid, 1, 3, 1) for cid in r]
        + [Clasp(cid, 1, 3, -1) for cid in s]
    )
    order1 = tuple(s + p + r + q)
    order2 = tuple(p + q)
    order3 = tuple(x for pair in zip(r, s) for x in pair)
    return CComplex(3, clasps, (order1, order2, order3))


def parse_complex(text: str) -> CComplex:
    """Parse the line-oriented complex format.

    Raises :class:`ComplexFormatError` with a line number on syntax
    problems.  Semantic problems (self-clasps, incomplete orders, ...) are
    left for :func:`validate` to report.
    """
    n: int | None = None
    clasps: list[Clasp] = []
    orders: dict[int, tuple[str, ...]] = {}

    def fail(line_no: int, message: str) -> ComplexFormatError:
        return ComplexFormatError(f"line {line_no}: {message}")

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        keyword = fields[0]
        if keyword == "components":
            if n is not None:
                raise fail(line_no, "duplicate components line")
            if len(fields) != 2 or not fields[1].isdigit():
                raise fail(line_no, "expected: components <n>")
            n = int(fields[1])
        elif keyword == "clasp":
            if n is None:
                raise fail(line_no, "clasp line before components line")
            if len(fields) != 5:
                raise fail(line_no, "expected: clasp <id> <a> <b> <+|->")
            cid, a_text, b_text, sign_text = fields[1:]
            try:
                a, b = int(a_text), int(b_text)
            except ValueError:
                raise fail(line_no, f"clasp endpoints must be integers, got {a_text!r} {b_text!r}") from None
            if sign_text not in ("+", "-"):
                raise fail(line_no, f"clasp sign must be + or -, got {sign_text!r}")
            try:
                clasps.append(Clasp(cid, a, b, 1 if sign_text == "+" else -1))
            except ValueError as exc:
                raise fail(line_no, str(exc)) from None
        elif keyword == "order":
            if n is None:
                raise fail(line_no, "order line before components line")
            if len(fields) < 2 or not fields[1].isdigit():
                raise fail(line_no, "expected: order <k> <id> ...")
            k = int(fields[1])
            if not 1 <= k <= n:
                raise fail(line_no, f"order refers to component {k}, but there are {n} components")
            if k in orders:
                raise fail(line_no, f"duplicate order line for component {k}")
            orders[k] = tuple(fields[2:])
        else:
            raise fail(line_no, f"unknown keyword {keyword!r}")

    if n is None:
        raise ComplexFormatError("missing components line")
    return CComplex(n, tuple(clasps), tuple(orders.get(k, ()) for k in range(1, n + 1)))


def print_complex(F: CComplex) -> str:
    """Canonical text form: clasps sorted by (a, b, first appearance),
    then one order line per component.  Round-trips through
    :func:`parse_complex`."""
    lines = [f"components {F.n}"]
    ranked = sorted(range(len(F.clasps)), key=lambda idx: (F.clasps[idx].a, F.clasps[idx].b, idx))
    for idx in ranked:
        c = F.clasps[idx]
        lines.append(f"clasp {c.id} {c.a} {c.b} {'+' if c.sign == 1 else '-'}")
    for k in range(1, F.n + 1):
        lines.append(" ".join(["order", str(k), *F.orders[k - 1]]))
    return "\n".join(lines) + "\n"
