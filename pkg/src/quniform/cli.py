"""Command-line front end.

Exit codes: 0 when every clause passes, 1 when some clause fails (the
witness is printed), 2 when an input cannot be parsed or violates a
precondition.  Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from pathlib import Path

from .continuity import (
    ContinuitySpace,
    canonical_sample,
    check_axioms,
    distinct_entourages,
    halving_failures,
    min_entourage,
    parse_space,
)
from .errors import ValidationError
from .induced import (
    MAX_ENUMERATE,
    alexandrov_from_preorder,
    enumerate_topologies,
    format_open_sets,
    is_topology,
    left_topology,
    parse_topology,
    partition_topology,
    right_topology,
    specialization_preorder,
    topology_equal,
)
from .kopperman import (
    parse_functions,
    realize,
    roundtrip_check,
    scaling_witness,
    weil_base,
    weil_entourage,
)
from .quasiuniform import (
    filter_minimum,
    from_continuity_space,
    inverse_base,
    is_quasi_uniform_base,
    satisfies_S,
    symmetrize,
)
from .relations import (
    Relation,
    compose,
    equivalence_classes,
    format_relation,
    is_equivalence,
    is_preorder,
    is_subset,
    is_symmetric,
)
from .report import Report
from .values import parse_rational


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None


def _load_space(path: str) -> ContinuitySpace:
    return parse_space(_read(path))


def _space_ok(rep: Report, space: ContinuitySpace) -> bool:
    axioms = check_axioms(space)
    rep.extend(axioms, "space.")
    return axioms.passed


def _blocks(points, classes) -> list[str]:
    return ["{" + ",".join(points[i] for i in sorted(c)) + "}" for c in classes]


def cmd_verify(path: str) -> Report:
    space = _load_space(path)
    rep = Report("verify")
    if not _space_ok(rep, space):
        return rep
    base = from_continuity_space(space)
    rep.extend(is_quasi_uniform_base(base), "base.")
    bad = halving_failures(space)
    rep.add("halving_composition", not bad, bad[0] if bad else None)
    sample = canonical_sample(space)
    rep.details["sample"] = " ".join(space.semigroup.format(r) for r in sample.positives)
    rep.details["guarantee"] = sample.guarantee
    rep.details["entourages"] = len(base)
    return rep


def cmd_entourages(path: str) -> Report:
    space = _load_space(path)
    rep = Report("entourages")
    if not _space_ok(rep, space):
        return rep
    sample = canonical_sample(space)
    rep.details["points"] = " ".join(space.points)
    rep.details["sample"] = " ".join(space.semigroup.format(r) for r in sample.positives)
    rep.details["guarantee"] = sample.guarantee
    rep.details["entourages"] = [format_relation(u) for u in distinct_entourages(space)]
    rep.details["minimum"] = format_relation(min_entourage(space))
    return rep


def cmd_topology(path: str, dual: bool = False) -> Report:
    space = _load_space(path)
    rep = Report("topology")
    if not _space_ok(rep, space):
        return rep
    base = from_continuity_space(space)
    topo = right_topology(base) if dual else left_topology(base)
    rep.extend(is_topology(topo), "topology.")
    pre = specialization_preorder(inverse_base(base) if dual else base)
    rep.add(
        "alexandrov_agrees",
        topology_equal(alexandrov_from_preorder(pre, space.points), topo),
        {"preorder": format_relation(pre)},
    )
    rep.details["side"] = "right" if dual else "left"
    rep.details["points"] = " ".join(space.points)
    rep.details["opens"] = format_open_sets(topo)
    rep.details["specialization_preorder"] = format_relation(specialization_preorder(base))
    return rep


def cmd_symmetrize(path: str) -> Report:
    space = _load_space(path)
    rep = Report("symmetrize")
    if not _space_ok(rep, space):
        return rep
    sym = symmetrize(from_continuity_space(space))
    rep.extend(is_quasi_uniform_base(sym), "base.")
    rep.add("property_S", satisfies_S(sym))
    least = filter_minimum(sym)
    rep.add("minimum_is_equivalence", is_equivalence(least), {"minimum": format_relation(least)})
    topo = left_topology(sym)
    classes = equivalence_classes(least) if is_equivalence(least) else []
    rep.add(
        "partition_topology",
        bool(classes) and topology_equal(topo, partition_topology(space.points, classes)),
        {"opens": format_open_sets(topo)},
    )
    rep.details["points"] = " ".join(space.points)
    rep.details["members"] = [format_relation(u) for u in sym]
    rep.details["minimum"] = format_relation(least)
    rep.details["classes"] = _blocks(space.points, classes)
    rep.details["opens"] = format_open_sets(topo)
    return rep


def _topology_ok(rep: Report, topo) -> bool:
    check = is_topology(topo)
    rep.extend(check, "topology.")
    return check.passed


def cmd_realize(path: str, out: str | None = None) -> Report:
    topo = parse_topology(_read(path))
    rep = Report("realize")
    if not _topology_ok(rep, topo):
        return rep
    result = realize(topo)
    rep.extend(check_axioms(result.space), "space.")
    text = result.to_text()
    if out is None:
        rep.details["space"] = text.rstrip("\n").split("\n")
    else:
        Path(out).write_text(text, encoding="utf-8")
        rep.artifacts.append(out)
    return rep


def cmd_roundtrip(path: str) -> Report:
    topo = parse_topology(_read(path))
    rep = Report("roundtrip")
    if not _topology_ok(rep, topo):
        return rep
    space = realize(topo).space
    rep.extend(check_axioms(space), "space.")
    induced = left_topology(from_continuity_space(space))
    rep.add("roundtrip", roundtrip_check(topo), {"induced": format_open_sets(induced)})
    rep.details["points"] = " ".join(topo.points)
    rep.details["input_opens"] = format_open_sets(topo)
    rep.details["induced_opens"] = format_open_sets(induced)
    return rep


def _preorders(n: int) -> list[Relation]:
    out = []
    for rows in itertools.product(range(1 << n), repeat=n):
        r = Relation(n, rows)
        if is_preorder(r):
            out.append(r)
    return out


def cmd_enumerate(n: int, listing: bool = False) -> Report:
    if not 1 <= n <= MAX_ENUMERATE:
        raise ValidationError(f"n must be in 1..{MAX_ENUMERATE}, got {n}")
    tops = enumerate_topologies(n)
    rep = Report("enumerate")
    bad = next((t for t in tops if not is_topology(t).passed), None)
    rep.add("all_valid", bad is None, bad and {"opens": format_open_sets(bad)})
    if n <= 3:
        pres = _preorders(n)
        images = {alexandrov_from_preorder(r).opens for r in pres}
        rep.add(
            "preorder_bijection",
            images == {t.opens for t in tops} and len(images) == len(pres),
            {"preorders": len(pres), "topologies": len(tops)},
        )
    rep.details["count"] = f"{len(tops)} topologies"
    if listing:
        rep.details["topologies"] = [" ".join(format_open_sets(t)) for t in tops]
    return rep


def cmd_witness_scaling(path: str, factor: str) -> Report:
    space = _load_space(path)
    return scaling_witness(space, parse_rational(factor))


def cmd_weil(path: str) -> Report:
    points, funcs = parse_functions(_read(path))
    base = weil_base(points, [(vals, a) for _, vals, a in funcs])
    rep = Report("weil")
    rep.extend(is_quasi_uniform_base(base), "base.")
    rep.add("property_S", satisfies_S(base))
    asym = next((u for u in base if not is_symmetric(u)), None)
    rep.add("members_symmetric", asym is None, asym and {"member": format_relation(asym)})
    bad = None
    for name, vals, a in funcs:
        half = weil_entourage(vals, a / 2)
        if not is_subset(compose(half, half), weil_entourage(vals, a)):
            bad = {"function": name}
            break
    rep.add("halving_inclusion", bad is None, bad)
    rep.details["points"] = " ".join(points)
    rep.details["functions"] = [f"{name}: a={a}" for name, _, a in funcs]
    rep.details["members"] = [format_relation(u) for u in base]
    rep.details["minimum"] = format_relation(filter_minimum(base))
    return rep


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")

    p = argparse.ArgumentParser(
        prog="quniform",
        description="Verify continuity spaces, quasi-uniformities and finite topologies.",
    )
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_ in (
        ("verify", "space axioms, filter-base axioms and the halving inclusion"),
        ("entourages", "distinct entourages and the least one"),
        ("symmetrize", "symmetrized base and its partition topology"),
    ):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("space")
    s = sub.add_parser("topology", parents=[common], help="induced topology and specialization preorder")
    s.add_argument("space")
    s.add_argument("--dual", action="store_true", help="right topology (columns) instead of left")
    s = sub.add_parser("realize", parents=[common], help="realize a topology by a {0,inf} metric")
    s.add_argument("topology")
    s.add_argument("--out", help="write the space file here")
    s = sub.add_parser("roundtrip", parents=[common], help="realize, induce, compare")
    s.add_argument("topology")
    s = sub.add_parser("enumerate", parents=[common], help="all topologies on n <= 4 points")
    s.add_argument("n", type=int)
    s.add_argument("--list", action="store_true", dest="listing")
    s = sub.add_parser("witness-scaling", parents=[common], help="d and c*d give the same filter")
    s.add_argument("space")
    s.add_argument("--factor", required=True)
    s = sub.add_parser("weil", parents=[common], help="uniformity base from rational functions")
    s.add_argument("functions")
    return p


def run(args: argparse.Namespace) -> Report:
    if args.command == "verify":
        return cmd_verify(args.space)
    if args.command == "entourages":
        return cmd_entourages(args.space)
    if args.command == "topology":
        return cmd_topology(args.space, args.dual)
    if args.command == "symmetrize":
        return cmd_symmetrize(args.space)
    if args.command == "realize":
        return cmd_realize(args.topology, args.out)
    if args.command == "roundtrip":
        return cmd_roundtrip(args.topology)
    if args.command == "enumerate":
        return cmd_enumerate(args.n, args.listing)
    if args.command == "witness-scaling":
        return cmd_witness_scaling(args.space, args.factor)
    if args.command == "weil":
        return cmd_weil(args.functions)
    raise AssertionError(args.command)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rep = run(args)
    except ValidationError as exc:
        print(f"quniform: {exc}", file=sys.stderr)
        rep = Report(args.command, error=str(exc))
    out = rep.to_machine() if args.format == "machine" else rep.to_text()
    sys.stdout.write(out)
    if rep.error is not None:
        return 2
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
