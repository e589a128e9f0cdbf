"""Polar-type factorization exp(tZ) = exp(X_-(t)) exp(X_+(t)) for a 3x3 rational matrix."""
from fractions import Fraction

import numpy as np

from bchfactor import format_lie
from bchfactor.polar import instantiate, polar_series, recomposition_residual, split_matrix

ORDER = 4
symbolic_minus, symbolic_plus = polar_series(order=ORDER)
for k, (m, p) in enumerate(zip(symbolic_minus, symbolic_plus), start=1):
    print(f"t^{k}:  X_- = {format_lie(m)}")
    print(f"       X_+ = {format_lie(p)}")

Z = np.array([[Fraction(v) for v in row] for row in [[1, 2, 0], [-1, 0, 3], [1, 1, -2]]], dtype=object)
X_minus, X_plus = polar_series(Z, order=ORDER)
print("\nrecomposition exact through t^4:", recomposition_residual(Z, X_minus, X_plus, ORDER).is_zero())
parts = split_matrix(Z)
print("symbolic terms instantiate to the matrix terms:",
      all((instantiate(s, parts) == m).all() for s, m in zip(symbolic_minus + symbolic_plus,
                                                            X_minus + X_plus)))
print("X_+ coefficient of t^3:")
for row in X_plus[2]:
    print("  " + "  ".join(f"{str(v):>7}" for v in row))
