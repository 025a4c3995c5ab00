"""Finite binary relations on ``{0, ..., n-1}``.

A :class:`Relation` stores one bitmask per row: bit ``y`` of ``rows[x]``
is set iff ``(x, y)`` is in the relation.  Composition is left-first:
``(x, z)`` is in ``compose(R, S)`` iff some ``y`` has ``(x, y)`` in ``R``
and ``(y, z)`` in ``S``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import CarrierMismatch, ParseError, ValidationError


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Relation:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("carrier size must be at least 1")
        if len(self.rows) != self.n:
            raise ValidationError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        if any(r & ~full for r in self.rows):
            raise ValidationError("row bitmask exceeds carrier")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Relation":
        rows = [0] * n
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise ValidationError(f"pair ({x},{y}) outside carrier of size {n}")
            rows[x] |= 1 << y
        return cls(n, tuple(rows))

    @classmethod
    def diagonal(cls, n: int) -> "Relation":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def full(cls, n: int) -> "Relation":
        return cls(n, ((1 << n) - 1,) * n)

    @classmethod
    def empty(cls, n: int) -> "Relation":
        return cls(n, (0,) * n)

    def __contains__(self, pair) -> bool:
        x, y = pair
        return bool(self.rows[x] >> y & 1)

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in bits(self.rows[x])]

    def __len__(self) -> int:
        return sum(bin(r).count("1") for r in self.rows)

    def __iter__(self):
        return iter(self.pairs())

    def __repr__(self) -> str:
        return f"Relation({format_relation(self)!r})"

    def sort_key(self):
        """Canonical order: more pairs first, then by rows."""
        return (-len(self), self.rows)


def _same_size(r: Relation, s: Relation) -> None:
    if r.n != s.n:
        raise CarrierMismatch(f"relations on carriers of size {r.n} and {s.n}")


def compose(r: Relation, s: Relation) -> Relation:
    _same_size(r, s)
    rows = []
    for row in r.rows:
        acc = 0
        for y in bits(row):
            acc |= s.rows[y]
        rows.append(acc)
    return Relation(r.n, tuple(rows))


def inverse(r: Relation) -> Relation:
    rows = [0] * r.n
    for x, row in enumerate(r.rows):
        for y in bits(row):
            rows[y] |= 1 << x
    return Relation(r.n, tuple(rows))


def intersect(r: Relation, s: Relation) -> Relation:
    _same_size(r, s)
    return Relation(r.n, tuple(a & b for a, b in zip(r.rows, s.rows)))


def union(r: Relation, s: Relation) -> Relation:
    _same_size(r, s)
    return Relation(r.n, tuple(a | b for a, b in zip(r.rows, s.rows)))


def is_subset(r: Relation, s: Relation) -> bool:
    _same_size(r, s)
    return all(a & ~b == 0 for a, b in zip(r.rows, s.rows))


def equals(r: Relation, s: Relation) -> bool:
    _same_size(r, s)
    return r.rows == s.rows


def contains_diagonal(r: Relation) -> bool:
    return all(row >> x & 1 for x, row in enumerate(r.rows))


is_reflexive = contains_diagonal


def is_transitive(r: Relation) -> bool:
    return is_subset(compose(r, r), r)


def is_preorder(r: Relation) -> bool:
    return contains_diagonal(r) and is_transitive(r)


def is_symmetric(r: Relation) -> bool:
    return r.rows == inverse(r).rows


def is_equivalence(r: Relation) -> bool:
    return is_preorder(r) and is_symmetric(r)


def is_antisymmetric(r: Relation) -> bool:
    sym = intersect(r, inverse(r))
    return sym.rows == Relation.diagonal(r.n).rows


def _check_point(r: Relation, x: int) -> None:
    if not 0 <= x < r.n:
        raise ValidationError(f"point {x} outside carrier of size {r.n}")


def image_mask(r: Relation, x: int) -> int:
    _check_point(r, x)
    return r.rows[x]


def image(r: Relation, x: int) -> frozenset[int]:
    """``{y : (x, y) in r}``, the row of ``x``."""
    return frozenset(bits(image_mask(r, x)))


def preimage(r: Relation, y: int) -> frozenset[int]:
    """``{x : (x, y) in r}``, the column of ``y``."""
    _check_point(r, y)
    return frozenset(x for x in range(r.n) if r.rows[x] >> y & 1)


def equivalence_classes(r: Relation) -> list[frozenset[int]]:
    """Blocks of an equivalence relation, ordered by least element."""
    if not is_equivalence(r):
        raise ValidationError("not an equivalence relation")
    seen = 0
    out = []
    for x in range(r.n):
        if not seen >> x & 1:
            out.append(frozenset(bits(r.rows[x])))
            seen |= r.rows[x]
    return out


_LITERAL = re.compile(r"^\s*n\s*=\s*(\d+)\s*;(.*)$")
_PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_relation(text: str) -> Relation:
    """Parse ``n=3; (0,1) (1,2)``."""
    m = _LITERAL.match(text)
    if not m:
        raise ParseError(f"bad relation literal {text!r}")
    n = int(m.group(1))
    body = m.group(2)
    pairs = [(int(a), int(b)) for a, b in _PAIR.findall(body)]
    if _PAIR.sub("", body).strip():
        raise ParseError(f"junk in relation literal {text!r}")
    try:
        return Relation.from_pairs(n, pairs)
    except ValidationError as exc:
        raise ParseError(str(exc)) from None


def format_relation(r: Relation) -> str:
    body = " ".join(f"({x},{y})" for x, y in r.pairs())
    return f"n={r.n}; {body}" if body else f"n={r.n};"
