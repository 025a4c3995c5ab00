"""
Value semigroups and exact halving
==================================

Distances take values in a commutative monoid with a "ball" relation and a
set of positives that can be halved exactly.  Two instances ship.
"""

from fractions import Fraction

from quniform import EREAL, INF, ZeroInfFn, check_value_axioms, scale

# Extended nonnegative rationals: r/2 + r/2 == r holds exactly, never approximately.
rep = check_value_axioms(EREAL, [0, Fraction(1, 2), 1, INF], [Fraction(1, 2), 1, 3])
print(rep)

# {0, inf}-valued functions on a 2-element index set: addition is union,
# and every element is its own half.
zi = ZeroInfFn(2)
print(check_value_axioms(zi, zi.elements(), zi.elements()))

print(scale(Fraction(3, 2), 2), scale(INF, 2))
