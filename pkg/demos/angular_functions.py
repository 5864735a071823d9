"""Angular Mathieu functions: characteristic values, shapes, normalization.

Run with ``python demos/angular_functions.py``.
"""

import math

import numpy as np

from mathieu import Category, cpm, eig_spm, npm, order_lookup, spm

q = 5.0

# One eigen-solve per class gives every order at once.
for cat in Category:
    spec = eig_spm(cat, q)
    pairs = ", ".join(f"t={t}: {a:.10f}" for t, a in zip(spec.true_orders[:4], spec.char_values))
    print(f"{cat.name:<10} {pairs}")

# Even functions equal 1 at v = 0; the normalization factor N is the
# integral of S**2 over a period.
spec = eig_spm(Category.EVEN_EVEN, q)
a, coeffs = order_lookup(spec, 2)
print(f"\nce_2-like function at q={q}: a = {a:.12f}")
print("leading Fourier coefficients:", np.array2string(coeffs[:5], precision=6))
print("S(0) =", spm(spec, 0.0, 2)[1])

v = 2 * math.pi * np.arange(512) / 512
s = spm(spec, v, 3)
print("N from coefficients:", npm(spec, 3))
print("N from quadrature:  ", 2 * math.pi * (s ** 2).mean(axis=0))

# Functions of the same class at different q overlap only partially.
other = eig_spm(Category.EVEN_EVEN, 10.0)
c = cpm(spec, other, 3)
print("correlation C(5, 10) / sqrt(N N'):", c / np.sqrt(npm(spec, 3) * npm(other, 3)))
