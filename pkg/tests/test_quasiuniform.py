import itertools
import random

import pytest

from oracles import pairs_of, preorders_bruteforce
from quniform.continuity import ContinuitySpace, random_space
from quniform.errors import CarrierMismatch, FilterBaseError, ParseError, ValidationError
from quniform.quasiuniform import (
    FilterBase,
    filter_minimum,
    format_base,
    from_continuity_space,
    inverse_base,
    is_quasi_uniform_base,
    parse_base,
    same_filter,
    satisfies_S,
    symmetrize,
    symmetrize_diagonal,
)
from quniform.relations import Relation, intersect, inverse, is_equivalence, is_preorder
from quniform.values import ZeroInfFn

P = Relation.from_pairs
LINE = [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
SIER_MIN = P(2, [(0, 0), (1, 1), (1, 0)])


def sierpinski_space():
    e, one = frozenset(), frozenset({1})
    return ContinuitySpace(("a", "b"), ZeroInfFn(3), ((e, one), (e, e)))


def test_from_space_examples():
    b = from_continuity_space(ContinuitySpace.from_matrix(LINE))
    assert len(b) == 3 and is_quasi_uniform_base(b).passed
    assert from_continuity_space(ContinuitySpace.from_matrix([[0, 0], [0, 0]])).relations == (Relation.full(2),)
    sb = from_continuity_space(sierpinski_space())
    assert SIER_MIN in sb.relations and sb.points == ("a", "b")


def test_empty_base_rejected():
    with pytest.raises(ValidationError):
        FilterBase(2, ())


def test_base_size_mismatch_rejected():
    with pytest.raises(CarrierMismatch):
        FilterBase(2, (Relation.diagonal(3),))


def test_qu_examples():
    pre = P(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)])
    assert is_quasi_uniform_base(FilterBase.of([pre])).passed
    assert is_quasi_uniform_base(FilterBase.of([Relation.full(2)])).passed
    rep = is_quasi_uniform_base(FilterBase.of([P(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)])]))
    c = rep.clause("property_P")
    assert not c.passed and c.witness["pair"] == "(0,2)"


def test_qu_diagonal_and_directedness_failures():
    rep = is_quasi_uniform_base(FilterBase.of([P(2, [(0, 0)])]))
    assert rep.clause("diagonal").witness == {"member": 0, "missing": "(1,1)"}
    a = P(2, [(0, 0), (1, 1), (0, 1)])
    b = P(2, [(0, 0), (1, 1), (1, 0)])
    rep = is_quasi_uniform_base(FilterBase.of([a, b]))
    assert rep.clause("down_directed").witness == {"members": [0, 1]}
    assert rep.clause("property_P").passed


def test_satisfies_S_examples():
    sym = [Relation.full(3), P(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0)])]
    assert satisfies_S(FilterBase.of(sym))
    assert not satisfies_S(from_continuity_space(sierpinski_space()))
    assert satisfies_S(FilterBase.of([Relation.diagonal(2)]))


def test_symmetrize_examples():
    assert symmetrize(FilterBase.of([SIER_MIN])).relations == (Relation.diagonal(2),)
    sym = FilterBase.of([Relation.full(3), P(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0)])])
    assert same_filter(symmetrize(sym), sym)
    b = from_continuity_space(ContinuitySpace.from_matrix([[0, 0], [1, 0]]))
    assert filter_minimum(b) == P(2, [(0, 0), (1, 1), (0, 1)])
    assert filter_minimum(symmetrize(b)) == Relation.diagonal(2)


def test_filter_minimum_examples():
    b = from_continuity_space(ContinuitySpace.from_matrix(LINE))
    assert filter_minimum(b) == Relation.diagonal(3)
    pre = P(2, [(0, 0), (1, 1), (0, 1)])
    assert filter_minimum(FilterBase.of([pre])) == pre
    assert is_equivalence(filter_minimum(symmetrize(from_continuity_space(sierpinski_space()))))


def test_filter_minimum_attainment_failure():
    a = P(2, [(0, 0), (1, 1), (0, 1)])
    b = P(2, [(0, 0), (1, 1), (1, 0)])
    with pytest.raises(FilterBaseError):
        filter_minimum(FilterBase.of([a, b]))
    with pytest.raises(FilterBaseError):
        filter_minimum(FilterBase.of([P(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)])]))


def test_same_filter_examples():
    b = from_continuity_space(ContinuitySpace.from_matrix(LINE))
    assert same_filter(b, FilterBase.of([filter_minimum(b)]))
    b2 = from_continuity_space(ContinuitySpace.from_matrix([[2 * a for a in r] for r in LINE]))
    assert same_filter(b, b2)
    sb = from_continuity_space(sierpinski_space())
    assert not same_filter(sb, symmetrize(sb))
    with pytest.raises(CarrierMismatch):
        same_filter(b, sb)


def _bases():
    rng = random.Random(99)
    out = [from_continuity_space(random_space(rng, rng.randint(1, 6))) for _ in range(40)]
    out.append(from_continuity_space(sierpinski_space()))
    return out


@pytest.mark.parametrize("b", _bases())
def test_symmetrization_properties(b):
    assert is_quasi_uniform_base(b).passed
    s = symmetrize(b)
    assert is_quasi_uniform_base(s).passed
    assert satisfies_S(s)
    assert all(any(intersect(u, v) == u for v in b) for u in s)
    m = filter_minimum(b)
    assert is_preorder(m)
    assert filter_minimum(s) == intersect(m, inverse(m))
    assert is_equivalence(filter_minimum(s))
    assert same_filter(symmetrize(s), s)
    assert same_filter(symmetrize_diagonal(b), s)


@pytest.mark.parametrize("b", _bases())
def test_inverse_base_minimum(b):
    assert filter_minimum(inverse_base(b)) == inverse(filter_minimum(b))


def test_principal_iff_preorder_n2():
    for rows in itertools.product(range(4), repeat=2):
        r = Relation(2, rows)
        assert is_quasi_uniform_base(FilterBase.of([r])).passed == is_preorder(r)


def test_principal_preorders_n3():
    pres = preorders_bruteforce(3)
    assert len(pres) == 29
    for p in pres:
        assert is_quasi_uniform_base(FilterBase.of([Relation.from_pairs(3, p)])).passed
    # every non-preorder singleton fails
    for rows in itertools.product(range(8), repeat=3):
        r = Relation(3, rows)
        if frozenset(pairs_of(r)) not in set(pres):
            assert not is_quasi_uniform_base(FilterBase.of([r])).passed


def test_base_file_roundtrip():
    b = from_continuity_space(ContinuitySpace.from_matrix(LINE))
    text = format_base(b)
    assert text.splitlines()[0] == "n=3"
    again = parse_base(text)
    assert again.relations == b.relations


@pytest.mark.parametrize(
    "text",
    ["", "n=2\n", "n=2\nn=3; (0,0)\n", "x=2\nn=2; (0,0)\n", "n=2\nn=2; (0,5)\n"],
)
def test_base_file_errors(text):
    with pytest.raises(ParseError):
        parse_base(text)


def _naive_clauses(rels, n):
    """Definitions read literally, with pair sets."""
    sets = [pairs_of(r) for r in rels]
    diag = {(x, x) for x in range(n)}
    comp = lambda a, b: {(x, z) for (x, y) in a for (y2, z) in b if y == y2}  # noqa: E731
    inv = lambda a: {(y, x) for (x, y) in a}  # noqa: E731
    return {
        "diagonal": all(diag <= u for u in sets),
        "down_directed": all(any(v <= u1 & u2 for v in sets) for u1 in sets for u2 in sets),
        "property_P": all(any(comp(v, v) <= u for v in sets) for u in sets),
        "S": all(any(v <= inv(u) for v in sets) for u in sets),
    }


def test_checks_agree_with_literal_definitions():
    rng = random.Random(17)
    for _ in range(1500):
        n = rng.randint(1, 3)
        full = (1 << n) - 1
        k = rng.randint(1, 4)
        rels = []
        for _ in range(k):
            rows = [rng.randint(0, full) for _ in range(n)]
            if rng.random() < 0.8:
                rows = [r | 1 << x for x, r in enumerate(rows)]
            rels.append(Relation(n, tuple(rows)))
        b = FilterBase.of(rels)
        want = _naive_clauses(rels, n)
        rep = is_quasi_uniform_base(b)
        for name in ("diagonal", "down_directed", "property_P"):
            assert rep.clause(name).passed == want[name], (name, rels)
        assert satisfies_S(b) == want["S"], rels
