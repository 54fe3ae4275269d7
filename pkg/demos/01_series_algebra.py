# Truncated power-series algebra
# ==============================
#
# A PowerSeries is the polynomial a0 + sum_{k=n}^{N} a_k z^k.  The index n
# marks the first coefficient past the constant that may be nonzero;
# indices 1..n-1 are structurally zero and never stored.  This demo walks
# through evaluation, differentiation, reciprocation and the exponential.

import math

import numpy as np

from diskextrema import PowerSeries, exp_series, invert_series

# A series starting at z^2: 0.8 + z^2 + z^4.
s = PowerSeries(0.8, 2, [1.0, 0.0, 1.0])
print("series:", s.dense_coefficients().real.tolist())
print("value at 0.5i:", s(0.5j))  # 0.8 - 0.25 + 0.0625 = 0.6125
print("value at 0:   ", s(0j), "(always exactly a0)")

# Termwise derivative: 2z + 4z^3.
d = s.differentiate()
print("derivative:", d.dense_coefficients().real.tolist())

# Reciprocal, truncated at order 8.  The reciprocal of a series whose
# first non-constant term sits at z^2 again has nothing at z^1: the class
# structure survives reciprocation, which is the whole point of the
# minimum-modulus duality.
g = invert_series(s, 8)
print("\nreciprocal coefficients:", np.round(g.dense_coefficients(8).real, 6).tolist())

prod = np.convolve(s.dense_coefficients(8), g.dense_coefficients(8))[:9]
print("s * (1/s):", np.round(np.abs(prod), 15).tolist(), "(= 1 up to rounding)")

# exp of a series with zero constant term.  exp never vanishes, so this is
# the standard way to manufacture zero-free functions for the sweeps.
h = PowerSeries(0.0, 1, [1.0])
e = exp_series(h, 6)
print("\nexp(z) coefficients:", np.round(e.dense_coefficients().real, 8).tolist())
print("1/k! for comparison:", [round(1.0 / math.factorial(k), 8) for k in range(7)])
