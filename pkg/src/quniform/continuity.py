"""Continuity spaces: a finite point set with a distance into a value semigroup.

Distances need not be symmetric.  For each positive ``r`` the entourage
``U(r) = {(x, y) : ball_lt(d(x, y), r)}`` contains the diagonal, and
``U(r/2) o U(r/2)`` is contained in ``U(r)``; these two facts are what make
the entourages a quasi-uniform filter base.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import CarrierMismatch, ParseError, ValidationError
from .relations import Relation, bits, compose, equals, is_subset
from .report import Report
from .values import EREAL, INF, ExtRational, ValueSemigroup, ZeroInfFn, semigroup_from_header

FULL = "full"
MINIMUM_ONLY = "minimum-only"


@dataclass(frozen=True)
class ContinuitySpace:
    points: tuple[str, ...]
    semigroup: ValueSemigroup
    d: tuple[tuple, ...]

    def __post_init__(self):
        n = len(self.points)
        if n < 1:
            raise ValidationError("a space needs at least one point")
        if len(set(self.points)) != n:
            raise ValidationError("point names must be distinct")
        if len(self.d) != n or any(len(row) != n for row in self.d):
            raise ValidationError(f"distance matrix must be {n}x{n}")
        rows = tuple(tuple(self.semigroup.coerce(a) for a in row) for row in self.d)
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "d", rows)

    @classmethod
    def from_matrix(cls, matrix, semigroup: ValueSemigroup = EREAL, points=None) -> "ContinuitySpace":
        n = len(matrix)
        if points is None:
            points = [str(i) for i in range(n)]
        return cls(tuple(points), semigroup, tuple(tuple(row) for row in matrix))

    @property
    def n(self) -> int:
        return len(self.points)

    def index(self, name: str) -> int:
        try:
            return self.points.index(name)
        except ValueError:
            raise ValidationError(f"unknown point {name!r}") from None


@dataclass(frozen=True)
class EntourageSample:
    positives: tuple
    guarantee: str


def check_axioms(space: ContinuitySpace) -> Report:
    """Check ``d(x,x) = 0`` and the triangle inequality over all triples."""
    sg, d, names = space.semigroup, space.d, space.points
    rep = Report("continuity-axioms")
    bad = next((x for x in range(space.n) if d[x][x] != sg.zero), None)
    rep.add(
        "diagonal_zero",
        bad is None,
        None if bad is None else {"x": names[bad], "d(x,x)": sg.format(d[bad][bad])},
    )
    bad = next(
        (
            (x, y, z)
            for x in range(space.n)
            for y in range(space.n)
            for z in range(space.n)
            if not sg.leq(d[x][z], sg.add(d[x][y], d[y][z]))
        ),
        None,
    )
    if bad is None:
        rep.add("triangle", True)
    else:
        x, y, z = bad
        rep.add(
            "triangle",
            False,
            {
                "x": names[x],
                "y": names[y],
                "z": names[z],
                "d(x,z)": sg.format(d[x][z]),
                "d(x,y)+d(y,z)": sg.format(sg.add(d[x][y], d[y][z])),
            },
        )
    return rep


def require_valid(space: ContinuitySpace) -> None:
    rep = check_axioms(space)
    if not rep.passed:
        c = rep.failures()[0]
        raise ValidationError(f"not a continuity space: {c.name} fails at {c.witness}")


def metric_closure(matrix: Sequence[Sequence]) -> list[list]:
    """Min-plus transitive closure (Floyd-Warshall) of an ExtRational matrix."""
    n = len(matrix)
    m = [[EREAL.coerce(a) for a in row] for row in matrix]
    if any(len(row) != n for row in m):
        raise ValidationError("matrix must be square")
    if any(m[i][i] != 0 for i in range(n)):
        raise ValidationError("diagonal must be zero")
    for k in range(n):
        mk = m[k]
        for i in range(n):
            dik = m[i][k]
            if dik is INF:
                continue
            mi = m[i]
            for j in range(n):
                via = EREAL.add(dik, mk[j])
                if via < mi[j]:
                    mi[j] = via
    return m


def entourage(space: ContinuitySpace, r) -> Relation:
    sg = space.semigroup
    r = sg.coerce(r)
    if not sg.is_positive(r):
        raise ValidationError(f"{sg.format(r)} is not a positive")
    return Relation(
        space.n,
        tuple(
            sum(1 << y for y in range(space.n) if sg.ball_lt(row[y], r))
            for row in space.d
        ),
    )


def canonical_sample(space: ContinuitySpace) -> EntourageSample:
    """A finite set of positives that realizes the entourages that matter.

    For ExtRational the entourage ``{d < r}`` only changes at the distinct
    entries, so those thresholds plus one value past the largest realize
    every distinct entourage.  For ZeroInfFn the sample is the zero
    element, each distinct infinity set of the matrix and their union;
    that realizes the least entourage but not necessarily every one.
    """
    sg = space.semigroup
    if isinstance(sg, ExtRational):
        vals = sorted({a for row in space.d for a in row if a is not INF and a != 0})
        if not vals:
            return EntourageSample((Fraction(1),), FULL)
        return EntourageSample(tuple(vals) + (vals[-1] + 1,), FULL)
    if isinstance(sg, ZeroInfFn):
        sets = sorted({a for row in space.d for a in row if a}, key=lambda s: (len(s), sorted(s)))
        top = frozenset().union(*sets) if sets else frozenset()
        out = [frozenset()] + sets
        if top not in out:
            out.append(top)
        return EntourageSample(tuple(out), MINIMUM_ONLY)
    raise ValidationError(f"no canonical sample for {sg!r}")


def distinct_entourages(space: ContinuitySpace) -> list[Relation]:
    require_valid(space)
    seen = {}
    for r in canonical_sample(space).positives:
        u = entourage(space, r)
        seen.setdefault(u.rows, u)
    return sorted(seen.values(), key=Relation.sort_key)


def min_entourage(space: ContinuitySpace) -> Relation:
    ents = distinct_entourages(space)
    least = ents[-1]
    if not all(is_subset(least, u) for u in ents):
        raise ValidationError("sampled entourages have no least element")
    return least


def same_quasi_uniformity(s1: ContinuitySpace, s2: ContinuitySpace) -> bool:
    """Equality of generated filters, decided by the least entourages.

    Over a finite carrier the filter is principal, so two filters agree
    exactly when their least members do.
    """
    if s1.points != s2.points:
        raise CarrierMismatch("spaces have different point sets")
    return equals(min_entourage(s1), min_entourage(s2))


def halving_failures(space: ContinuitySpace) -> list[dict]:
    """Sampled ``r`` where ``U(r/2) o U(r/2)`` escapes ``U(r)``, with a pair."""
    sg = space.semigroup
    out = []
    for r in canonical_sample(space).positives:
        h = entourage(space, sg.half(r))
        hh = compose(h, h)
        u = entourage(space, r)
        for x in range(space.n):
            extra = hh.rows[x] & ~u.rows[x]
            if extra:
                y = bits(extra)[0]
                out.append({"r": sg.format(r), "pair": f"({space.points[x]},{space.points[y]})"})
                break
    return out


def random_space(rng: random.Random, n: int, inf_rate: float = 0.1) -> ContinuitySpace:
    """A random ExtRational continuity space repaired by metric closure.

    Off-diagonal entries are drawn from small rationals with a few zeros
    and infinities mixed in, so minima are often nontrivial.
    """
    dens = (1, 2, 3, 4)
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            u = rng.random()
            if u < inf_rate:
                m[i][j] = INF
            elif u < inf_rate + 0.15:
                m[i][j] = Fraction(0)
            else:
                m[i][j] = Fraction(rng.randint(1, 12), rng.choice(dens))
    return ContinuitySpace.from_matrix(metric_closure(m))


def parse_space(text: str) -> ContinuitySpace:
    sg = None
    points = None
    entries: dict[tuple[str, str], str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", lineno)
        key, rest = key.strip(), rest.strip()
        if key == "semigroup":
            if sg is not None:
                raise ParseError("duplicate semigroup line", lineno)
            sg = semigroup_from_header(rest)
        elif key == "points":
            if points is not None:
                raise ParseError("duplicate points line", lineno)
            points = rest.split()
            if not points or len(set(points)) != len(points):
                raise ParseError("points must be nonempty and distinct", lineno)
        elif key == "d":
            if points is None:
                raise ParseError("d line before points line", lineno)
            parts = rest.split(None, 2)
            if len(parts) != 3:
                raise ParseError(f"expected 'd: x y value', got {line!r}", lineno)
            x, y, val = parts
            if x not in points or y not in points:
                raise ParseError(f"unknown point in {line!r}", lineno)
            if (x, y) in entries:
                raise ParseError(f"duplicate entry for ({x},{y})", lineno)
            entries[(x, y)] = val
        else:
            raise ParseError(f"unknown key {key!r}", lineno)
    if sg is None:
        raise ParseError("missing semigroup line")
    if points is None:
        raise ParseError("missing points line")
    missing = [(x, y) for x in points for y in points if (x, y) not in entries]
    if missing:
        raise ParseError(f"missing entry for ({missing[0][0]},{missing[0][1]})")
    d = tuple(tuple(sg.parse(entries[(x, y)]) for y in points) for x in points)
    return ContinuitySpace(tuple(points), sg, d)


def format_space(space: ContinuitySpace, header: Sequence[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines.append(f"semigroup: {space.semigroup.header()}")
    lines.append("points: " + " ".join(space.points))
    for i, x in enumerate(space.points):
        for j, y in enumerate(space.points):
            lines.append(f"d: {x} {y} {space.semigroup.format(space.d[i][j])}")
    return "\n".join(lines) + "\n"

