"""
Uniformities from functions, and a non-injectivity witness
==========================================================

Entourages {(x, y) : |f(x) - f(y)| < a} for rational-valued f generate a
uniformity.  Separately, scaling a distance by any c > 0 changes the space
but not the quasi-uniformity it generates.
"""

from fractions import Fraction

from quniform import ContinuitySpace, is_quasi_uniform_base, satisfies_S, scaling_witness, weil_base
from quniform.relations import format_relation

base = weil_base(["x0", "x1", "x2"], [([0, 1, 2], Fraction(3, 2)), ([0, 0, 1], Fraction(1, 2))])
for u in base:
    print(format_relation(u))
print(is_quasi_uniform_base(base).verdict, "S:", satisfies_S(base))

line = ContinuitySpace.from_matrix([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
print(scaling_witness(line, 3))
