"""
Two topologies, one preorder, and symmetrization
================================================

A quasi-uniformity that is not symmetric induces two topologies: one from
the rows U(x) and one from the columns U^-1(y).  On a finite carrier both
are Alexandrov topologies of the least entourage (and its inverse).
Symmetrizing gives a uniformity whose topology is a partition topology.
"""

from quniform import (
    ContinuitySpace,
    alexandrov_from_preorder,
    filter_minimum,
    from_continuity_space,
    left_topology,
    right_topology,
    satisfies_S,
    symmetrize,
)
from quniform.relations import format_relation

space = ContinuitySpace.from_matrix([[0, 0, 1], [1, 0, 1], [2, 1, 0]], points=["a", "b", "c"])
base = from_continuity_space(space)

print("left topology: ", left_topology(base))
print("right topology:", right_topology(base))
least = filter_minimum(base)
print("specialization preorder:", format_relation(least))
print("Alexandrov topology of it:", alexandrov_from_preorder(least, space.points))

sym = symmetrize(base)
print("symmetric?", satisfies_S(base), "->", satisfies_S(sym))
print("symmetrized minimum:", format_relation(filter_minimum(sym)))
print("symmetrized topology:", left_topology(sym))
