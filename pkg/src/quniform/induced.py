"""Topologies induced by a quasi-uniformity, and finite topologies in general.

Open sets are bitmasks over point indices.  The left topology takes the
rows ``U(x)`` of the members as neighborhoods of ``x``; the right topology
takes the columns ``U^-1(y)``.  The row of ``x`` in a preorder is the
minimal neighborhood of ``x``, so Alexandrov opens are the sets closed
under taking rows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CarrierMismatch, CarrierTooLarge, ParseError, ValidationError
from .quasiuniform import FilterBase, filter_minimum, inverse_base
from .relations import Relation, bits, is_preorder, mask_of
from .report import Report

MAX_INDUCE = 16
MAX_ENUMERATE = 4


@dataclass(frozen=True)
class Topology:
    points: tuple[str, ...]
    opens: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "opens", frozenset(self.opens))
        if not self.points:
            raise ValidationError("a topology needs at least one point")

    @classmethod
    def from_sets(cls, points: Sequence[str], sets: Iterable[Iterable]) -> "Topology":
        """Build from open sets given as point names or indices."""
        points = tuple(points)
        opens = []
        for s in sets:
            idx = []
            for p in s:
                if isinstance(p, str):
                    if p not in points:
                        raise ValidationError(f"unknown point {p!r}")
                    idx.append(points.index(p))
                else:
                    idx.append(p)
            opens.append(mask_of(idx))
        return cls(points, frozenset(opens))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def sorted_opens(self) -> list[int]:
        return sorted(self.opens, key=lambda m: (bin(m).count("1"), bits(m)))

    def open_sets(self) -> list[frozenset[str]]:
        return [frozenset(self.points[i] for i in bits(m)) for m in self.sorted_opens()]

    def canonical_key(self) -> tuple[int, ...]:
        return tuple(sorted(self.opens))

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(self.points[i] for i in bits(m)) + "}" for m in self.sorted_opens())
        return f"Topology([{body}])"


def is_topology(t: Topology) -> Report:
    full = t.full
    if any(m < 0 or m & ~full for m in t.opens):
        raise ValidationError("open set refers to a point outside the carrier")
    rep = Report("topology")

    def show(m):
        return "{" + ",".join(t.points[i] for i in bits(m)) + "}"

    rep.add("contains_empty", 0 in t.opens, {"missing": "{}"})
    rep.add("contains_full", full in t.opens, {"missing": show(full)})
    opens = sorted(t.opens)
    bad = next(((a, b) for a, b in itertools.combinations(opens, 2) if a | b not in t.opens), None)
    rep.add("closed_under_union", bad is None, bad and {"A": show(bad[0]), "B": show(bad[1])})
    bad = next(((a, b) for a, b in itertools.combinations(opens, 2) if a & b not in t.opens), None)
    rep.add("closed_under_intersection", bad is None, bad and {"A": show(bad[0]), "B": show(bad[1])})
    return rep


def _guard(n: int) -> None:
    if n > MAX_INDUCE:
        raise CarrierTooLarge(f"carrier of size {n} exceeds exhaustive limit {MAX_INDUCE}")


def _opens_from_neighborhoods(n: int, nbhds: list[set[int]]) -> frozenset[int]:
    """Sets ``O`` such that each ``x`` in ``O`` has some neighborhood inside ``O``."""
    opens = []
    for o in range(1 << n):
        if all(any(m & ~o == 0 for m in nbhds[x]) for x in bits(o)):
            opens.append(o)
    return frozenset(opens)


def left_topology(base: FilterBase) -> Topology:
    _guard(base.n)
    nbhds = [{u.rows[x] for u in base.relations} for x in range(base.n)]
    return Topology(base.points, _opens_from_neighborhoods(base.n, nbhds))


def right_topology(base: FilterBase) -> Topology:
    return left_topology(inverse_base(base))


def alexandrov_from_preorder(r: Relation, points: Sequence[str] = ()) -> Topology:
    """Opens are the sets containing the row of each of their points."""
    if not is_preorder(r):
        raise ValidationError("not a preorder")
    _guard(r.n)
    pts = tuple(points) or tuple(str(i) for i in range(r.n))
    opens = frozenset(
        o for o in range(1 << r.n) if all(r.rows[x] & ~o == 0 for x in bits(o))
    )
    return Topology(pts, opens)


def specialization_preorder(base: FilterBase) -> Relation:
    return filter_minimum(base)


def partition_topology(points: Sequence[str], classes: Sequence[Iterable[int]]) -> Topology:
    """Opens are all unions of the given blocks."""
    blocks = [mask_of(c) for c in classes]
    covered = 0
    for b in blocks:
        if b & covered:
            raise ValidationError("blocks overlap")
        covered |= b
    if covered != (1 << len(points)) - 1:
        raise ValidationError("blocks do not cover the carrier")
    opens = set()
    for choice in itertools.product((0, 1), repeat=len(blocks)):
        opens.add(mask_of(i for b, c in zip(blocks, choice) if c for i in bits(b)))
    return Topology(tuple(points), frozenset(opens))


def topology_equal(t1: Topology, t2: Topology) -> bool:
    if t1.points != t2.points:
        raise CarrierMismatch("topologies on different point sets")
    return t1.opens == t2.opens


def _closed(family: int, n_sub: int) -> bool:
    members = [s for s in range(n_sub) if family >> s & 1]
    for a, b in itertools.combinations(members, 2):
        if not (family >> (a | b) & 1 and family >> (a & b) & 1):
            return False
    return True


def _enumerate_bruteforce(n: int) -> list[frozenset[int]]:
    """Test every family of subsets; feasible for n <= 3 (2**8 families)."""
    n_sub = 1 << n
    full = n_sub - 1
    out = []
    for family in range(1 << n_sub):
        if family & 1 and family >> full & 1 and _closed(family, n_sub):
            out.append(frozenset(bits(family)))
    return out


def _close(opens: set[int]) -> frozenset[int]:
    opens = set(opens)
    while True:
        new = {a | b for a in opens for b in opens} | {a & b for a in opens for b in opens}
        if new <= opens:
            return frozenset(opens)
        opens |= new


def _enumerate_by_closure(n: int) -> list[frozenset[int]]:
    """Search from the indiscrete topology, adjoining one subset at a time.

    Every topology is reached because adding its opens one by one to
    ``{0, X}`` and closing never leaves it.
    """
    full = (1 << n) - 1
    start = frozenset({0, full})
    seen = {start}
    stack = [start]
    while stack:
        fam = stack.pop()
        for s in range(1, full):
            if s in fam:
                continue
            nxt = _close(fam | {s})
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return list(seen)


def enumerate_topologies(n: int) -> list[Topology]:
    """All topologies on ``n`` points (1 <= n <= 4) in canonical order."""
    if not 1 <= n <= MAX_ENUMERATE:
        raise ValidationError(f"n must be in 1..{MAX_ENUMERATE}, got {n}")
    fams = _enumerate_bruteforce(n) if n <= 3 else _enumerate_by_closure(n)
    points = tuple(str(i) for i in range(n))
    return sorted((Topology(points, f) for f in fams), key=Topology.canonical_key)


def parse_topology(text: str) -> Topology:
    points = None
    sets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", lineno)
        if key == "points":
            if points is not None:
                raise ParseError("duplicate points line", lineno)
            points = tuple(rest.split())
            if not points or len(set(points)) != len(points):
                raise ParseError("points must be nonempty and distinct", lineno)
        elif key == "open":
            if points is None:
                raise ParseError("open line before points line", lineno)
            names = rest.split()
            unknown = [p for p in names if p not in points]
            if unknown:
                raise ParseError(f"unknown point {unknown[0]!r}", lineno)
            sets.append(mask_of(points.index(p) for p in names))
        else:
            raise ParseError(f"unknown key {key!r}", lineno)
    if points is None:
        raise ParseError("missing points line")
    full = (1 << len(points)) - 1
    if 0 not in sets:
        raise ParseError("the empty open set line is mandatory")
    if full not in sets:
        raise ParseError("the full open set line is mandatory")
    return Topology(points, frozenset(sets))


def format_topology(t: Topology) -> str:
    lines = ["points: " + " ".join(t.points)]
    for m in t.sorted_opens():
        names = " ".join(t.points[i] for i in bits(m))
        lines.append(f"open: {names}" if names else "open:")
    return "\n".join(lines) + "\n"


def format_open_sets(t: Topology) -> list[str]:
    return ["{" + ",".join(t.points[i] for i in bits(m)) + "}" for m in t.sorted_opens()]
