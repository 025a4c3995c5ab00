"""
From a generalized metric to a quasi-uniformity
===============================================

A continuity space has d(x, x) = 0 and the triangle inequality, but no
symmetry.  Its entourages U(r) = {(x, y) : d(x, y) < r} form a filter base,
and U(r/2) o U(r/2) sits inside U(r).
"""

import random

from quniform import (
    ContinuitySpace,
    canonical_sample,
    check_axioms,
    compose,
    distinct_entourages,
    entourage,
    metric_closure,
    random_space,
)
from quniform.relations import format_relation, is_subset

# A one-way street: going from b to a costs 1, going from a to b is free.
space = ContinuitySpace.from_matrix([[0, 0, 1], [1, 0, 1], [2, 1, 0]], points=["a", "b", "c"])
print(check_axioms(space))

for r in canonical_sample(space).positives:
    half = entourage(space, r / 2)
    inside = is_subset(compose(half, half), entourage(space, r))
    print(f"r={r}: U(r)={format_relation(entourage(space, r))}  U(r/2)^2 inside: {inside}")

print("distinct entourages, largest first:")
for u in distinct_entourages(space):
    print("  ", format_relation(u))

# A matrix that violates the triangle inequality is repaired by min-plus closure.
print(metric_closure([[0, 1, 5], [1, 0, 1], [5, 1, 0]]))

# Random fixtures are built that way.
print(check_axioms(random_space(random.Random(0), 5)).verdict)
