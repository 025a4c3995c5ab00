"""Realizing finite topologies by generalized metrics, and related witnesses.

Given a topology with open-set family Omega, the distance from ``x`` to
``y`` is the {0, inf}-valued function on Omega that is infinite exactly on
the opens containing ``x`` but not ``y``.  Its least entourage is then the
specialization preorder of the topology, so the induced topology is the
original one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .continuity import (
    ContinuitySpace,
    check_axioms,
    format_space,
    min_entourage,
    same_quasi_uniformity,
)
from .errors import ParseError, ValidationError
from .induced import Topology, is_topology, left_topology, topology_equal
from .quasiuniform import FilterBase, from_continuity_space, symmetrize
from .relations import Relation, bits, format_relation, intersect
from .report import Report
from .values import EREAL, INF, ZeroInfFn, as_fraction, format_rational, parse_rational, scale


@dataclass(frozen=True)
class RealizationResult:
    space: ContinuitySpace
    omega_index: tuple[int, ...]

    def header(self) -> list[str]:
        pts = self.space.points
        lines = ["realization of a finite topology; omega index -> open set"]
        for i, m in enumerate(self.omega_index):
            lines.append(f"omega {i} = {{" + ",".join(pts[j] for j in bits(m)) + "}")
        return lines

    def to_text(self) -> str:
        return format_space(self.space, self.header())


def _require_topology(t: Topology) -> None:
    rep = is_topology(t)
    if not rep.passed:
        c = rep.failures()[0]
        raise ValidationError(f"not a topology: {c.name} fails at {c.witness}")


def realize(t: Topology) -> RealizationResult:
    _require_topology(t)
    omega = t.sorted_opens()
    sg = ZeroInfFn(len(omega))
    d = tuple(
        tuple(
            frozenset(i for i, o in enumerate(omega) if o >> x & 1 and not o >> y & 1)
            for y in range(t.n)
        )
        for x in range(t.n)
    )
    return RealizationResult(ContinuitySpace(t.points, sg, d), tuple(omega))


def roundtrip_check(t: Topology) -> bool:
    space = realize(t).space
    return topology_equal(left_topology(from_continuity_space(space)), t)


def symmetrized_realization_topology(t: Topology) -> Topology:
    return left_topology(symmetrize(from_continuity_space(realize(t).space)))


def weil_entourage(values: Sequence, a) -> Relation:
    """``{(x, y) : |f(x) - f(y)| < a}`` for ``f`` given by its values."""
    vals = [as_fraction(v) for v in values]
    a = as_fraction(a)
    if a <= 0:
        raise ValidationError(f"threshold must be positive, got {format_rational(a)}")
    n = len(vals)
    return Relation.from_pairs(n, ((x, y) for x in range(n) for y in range(n) if abs(vals[x] - vals[y]) < a))


def _halving_chain(values: Sequence[Fraction], a: Fraction) -> list[Relation]:
    """``U_{f,a}, U_{f,a/2}, ...`` until the threshold drops below every nonzero gap."""
    gaps = [abs(p - q) for p in values for q in values if p != q]
    floor = min(gaps) if gaps else None
    out = [weil_entourage(values, a)]
    while floor is not None and a > floor:
        a /= 2
        out.append(weil_entourage(values, a))
    return out


def weil_base(points: Sequence[str], family: Sequence[tuple[Sequence, object]]) -> FilterBase:
    """Uniformity base generated by real-valued functions with thresholds.

    Each ``(f, a)`` contributes ``U_{f,a}`` and its halvings ``U_{f,a/2^k}``
    (which stabilize on a finite carrier); the base is every intersection
    taking one member per function.  Since ``U_{f,a/2} o U_{f,a/2}`` lies in
    ``U_{f,a}`` this satisfies (P), and every member is symmetric.
    """
    if not family:
        raise ValidationError("function family must be nonempty")
    points = tuple(points)
    chains = []
    for values, a in family:
        vals = [as_fraction(v) for v in values]
        if len(vals) != len(points):
            raise ValidationError(f"function has {len(vals)} values for {len(points)} points")
        a = as_fraction(a)
        if a <= 0:
            raise ValidationError(f"threshold must be positive, got {format_rational(a)}")
        chains.append(_halving_chain(vals, a))
    seen = {}
    for combo in itertools.product(*chains):
        r = reduce(intersect, combo)
        seen.setdefault(r.rows, r)
    rels = tuple(sorted(seen.values(), key=Relation.sort_key))
    return FilterBase(len(points), rels, points)


def scaling_witness(space: ContinuitySpace, c) -> Report:
    """Witness that distinct continuity spaces can give the same quasi-uniformity.

    Builds the space with every distance multiplied by ``c`` and reports
    that the matrices differ while the generated filters coincide.
    """
    if space.semigroup != EREAL:
        raise ValidationError("scaling witness needs an ExtRational space")
    c = as_fraction(c)
    if c <= 0 or c == 1:
        raise ValidationError(f"factor must be positive and different from 1, got {format_rational(c)}")
    if not any(a is not INF and a != 0 for row in space.d for a in row):
        raise ValidationError("space has no finite nonzero entry, so scaling cannot change it")
    axioms = check_axioms(space)
    if not axioms.passed:
        c0 = axioms.failures()[0]
        raise ValidationError(f"not a continuity space: {c0.name} fails at {c0.witness}")
    scaled = ContinuitySpace(space.points, EREAL, tuple(tuple(scale(a, c) for a in row) for row in space.d))
    fmt = EREAL.format
    rep = Report("witness-scaling")
    rep.add("matrices_differ", scaled.d != space.d, {"note": "scaled matrix equals input"})
    rep.add(
        "same_quasi_uniformity",
        same_quasi_uniformity(space, scaled),
        {"min": format_relation(min_entourage(space)), "scaled_min": format_relation(min_entourage(scaled))},
    )
    rep.details["factor"] = format_rational(c)
    rep.details["points"] = " ".join(space.points)
    rep.details["d"] = [" ".join(fmt(a) for a in row) for row in space.d]
    rep.details["scaled_d"] = [" ".join(fmt(a) for a in row) for row in scaled.d]
    rep.details["min_entourage"] = format_relation(min_entourage(space))
    rep.details["scaled_min_entourage"] = format_relation(min_entourage(scaled))
    return rep


def parse_functions(text: str) -> tuple[tuple[str, ...], list[tuple[str, list[Fraction], Fraction]]]:
    """Parse a functions file: ``points:`` then ``f: <name> <q0> ... ; a=<t>`` lines."""
    points = None
    funcs = []
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
        elif key == "f":
            if points is None:
                raise ParseError("f line before points line", lineno)
            body, semi, thr = rest.partition(";")
            thr = thr.strip()
            if not semi or not thr.startswith("a="):
                raise ParseError("expected '; a=<threshold>'", lineno)
            parts = body.split()
            if len(parts) != len(points) + 1:
                raise ParseError(f"expected a name and {len(points)} values", lineno)
            try:
                vals = [parse_rational(v) for v in parts[1:]]
                a = parse_rational(thr[2:])
            except ParseError as exc:
                raise ParseError(str(exc), lineno) from None
            if a <= 0:
                raise ParseError("threshold must be positive", lineno)
            funcs.append((parts[0], vals, a))
        else:
            raise ParseError(f"unknown key {key!r}", lineno)
    if points is None:
        raise ParseError("missing points line")
    if not funcs:
        raise ParseError("at least one f line is required")
    return points, funcs
