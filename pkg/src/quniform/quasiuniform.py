"""Quasi-uniform filter bases on a finite carrier.

A :class:`FilterBase` is a finite nonempty list of relations.  Its members
are expected to contain the diagonal, to be down-directed and to satisfy
property (P) (each member contains ``V o V`` for some member ``V``), but
the constructor does not enforce this; :func:`is_quasi_uniform_base`
checks it and reports witnesses.

On a finite carrier every such filter is principal: it is the set of
oversets of its least member, which is a preorder.  Filter-level
comparisons therefore reduce to comparing minima.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .continuity import ContinuitySpace, distinct_entourages
from .errors import CarrierMismatch, FilterBaseError, ParseError, ValidationError
from .relations import (
    Relation,
    bits,
    compose,
    contains_diagonal,
    format_relation,
    intersect,
    inverse,
    is_preorder,
    is_subset,
    parse_relation,
)
from .report import Report


@dataclass(frozen=True)
class FilterBase:
    n: int
    relations: tuple[Relation, ...]
    points: tuple[str, ...] = ()

    def __post_init__(self):
        rels = tuple(self.relations)
        if not rels:
            raise ValidationError("a filter base needs at least one relation")
        if any(r.n != self.n for r in rels):
            raise CarrierMismatch(f"every member must live on a carrier of size {self.n}")
        pts = tuple(self.points) or tuple(str(i) for i in range(self.n))
        if len(pts) != self.n:
            raise ValidationError("point names do not match carrier size")
        object.__setattr__(self, "relations", rels)
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, relations: Sequence[Relation], points=()) -> "FilterBase":
        return cls(relations[0].n, tuple(relations), tuple(points))

    def __len__(self):
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)


def _dedup_sorted(rels) -> tuple[Relation, ...]:
    seen = {}
    for r in rels:
        seen.setdefault(r.rows, r)
    return tuple(sorted(seen.values(), key=Relation.sort_key))


def from_continuity_space(space: ContinuitySpace) -> FilterBase:
    return FilterBase(space.n, tuple(distinct_entourages(space)), space.points)


def _pair(base: FilterBase, x: int, y: int) -> str:
    return f"({base.points[x]},{base.points[y]})"


def is_quasi_uniform_base(base: FilterBase) -> Report:
    """Check diagonal containment, down-directedness and property (P)."""
    rels = base.relations
    rep = Report("quasi-uniform-base")

    bad = next((i for i, u in enumerate(rels) if not contains_diagonal(u)), None)
    if bad is None:
        rep.add("diagonal", True)
    else:
        x = next(x for x in range(base.n) if not rels[bad].rows[x] >> x & 1)
        rep.add("diagonal", False, {"member": bad, "missing": _pair(base, x, x)})

    # A finite family is down-directed iff the intersection of all members
    # is itself a member; the pairwise search only runs to find a witness.
    least = reduce(intersect, rels)
    least_idx = next((i for i, u in enumerate(rels) if u.rows == least.rows), None)
    if least_idx is not None:
        rep.add("down_directed", True)
    else:
        by_size = sorted(rels, key=len)
        bad = next(
            (
                (i, j)
                for i, u1 in enumerate(rels)
                for j, u2 in enumerate(rels)
                if j > i and not any(is_subset(v, intersect(u1, u2)) for v in by_size)
            ),
            None,
        )
        rep.add("down_directed", bad is None, bad and {"members": list(bad)})

    # When the least member is transitive it serves as V for every U.
    if least_idx is not None and is_subset(compose(least, least), least):
        rep.add("property_P", True)
        return rep
    order = sorted(range(len(rels)), key=lambda k: len(rels[k]))
    squares = {k: compose(rels[k], rels[k]) for k in order}
    bad = next(
        (i for i, u in enumerate(rels) if not any(is_subset(squares[k], u) for k in order)),
        None,
    )
    if bad is None:
        rep.add("property_P", True)
    else:
        u = rels[bad]
        # witness against the smallest V, whose square is the best candidate
        vv = squares[order[0]]
        x = next(x for x in range(base.n) if vv.rows[x] & ~u.rows[x])
        y = bits(vv.rows[x] & ~u.rows[x])[0]
        rep.add("property_P", False, {"member": bad, "V": order[0], "pair": _pair(base, x, y)})
    return rep


def require_valid(base: FilterBase) -> None:
    rep = is_quasi_uniform_base(base)
    if not rep.passed:
        c = rep.failures()[0]
        raise FilterBaseError(f"not a quasi-uniform base: {c.name} fails at {c.witness}")


def satisfies_S(base: FilterBase) -> bool:
    """Symmetry at the filter level: each inverse member contains a member."""
    rels = base.relations
    least = reduce(intersect, rels)
    if any(u.rows == least.rows for u in rels):
        # every U^-1 contains least^-1, and least^-1 must contain a member
        # that in turn contains least: this holds iff least is symmetric
        return least.rows == inverse(least).rows
    return all(any(is_subset(v, inverse(u)) for v in rels) for u in rels)


def inverse_base(base: FilterBase) -> FilterBase:
    return FilterBase(base.n, tuple(inverse(u) for u in base.relations), base.points)


def symmetrize(base: FilterBase) -> FilterBase:
    """The base ``{U & V^-1 : U, V in base}``, deduplicated."""
    inv = [inverse(v) for v in base.relations]
    return FilterBase(
        base.n,
        _dedup_sorted(intersect(u, vi) for u in base.relations for vi in inv),
        base.points,
    )


def symmetrize_diagonal(base: FilterBase) -> FilterBase:
    """The smaller base ``{U & U^-1}``; generates the same filter as :func:`symmetrize`."""
    return FilterBase(
        base.n, _dedup_sorted(intersect(u, inverse(u)) for u in base.relations), base.points
    )


def filter_minimum(base: FilterBase) -> Relation:
    """Least member of the generated filter; must be attained and a preorder."""
    least = reduce(intersect, base.relations)
    if not any(u.rows == least.rows for u in base.relations):
        raise FilterBaseError("intersection of the base is not a member: base is not down-directed")
    if not is_preorder(least):
        raise FilterBaseError("least member is not a preorder: base violates (P) or the diagonal clause")
    return least


def same_filter(b1: FilterBase, b2: FilterBase) -> bool:
    if b1.n != b2.n:
        raise CarrierMismatch(f"bases on carriers of size {b1.n} and {b2.n}")
    return filter_minimum(b1).rows == filter_minimum(b2).rows


def parse_base(text: str) -> FilterBase:
    n = None
    rels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            head = line.replace(" ", "")
            if not head.startswith("n=") or not head[2:].isdigit():
                raise ParseError("first line must be n=<k>", lineno)
            n = int(head[2:])
            continue
        try:
            r = parse_relation(line)
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
        if r.n != n:
            raise ParseError(f"relation size {r.n} does not match n={n}", lineno)
        rels.append(r)
    if n is None:
        raise ParseError("missing n=<k> line")
    if not rels:
        raise ParseError("a base file needs at least one relation")
    return FilterBase(n, tuple(rels))


def format_base(base: FilterBase) -> str:
    return "\n".join([f"n={base.n}"] + [format_relation(r) for r in base.relations]) + "\n"
