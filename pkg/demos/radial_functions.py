"""Radial Mathieu functions of the first and second kind.

Run with ``python demos/radial_functions.py``.
"""

import math

from mathieu import Category, djpm, dypm, eig_spm, gpm, hpm, jpm, spm_hyperbolic, ypm

q = 10.0
spec = eig_spm(Category.EVEN_EVEN, q)
nmax = 3

print(f"even-even, q = {q}, orders t = {spec.true_orders[:nmax].tolist()}")
print(f"{'u':>5} {'J':>12} {'Y':>12} {'Wronskian':>12}")
for u in (0.2, 0.5, 1.0, 2.0):
    j, y = jpm(spec, u, nmax), ypm(spec, u, nmax)
    w = j * dypm(spec, u, nmax) - y * djpm(spec, u, nmax)
    print(f"{u:5.1f} {j[0]:12.8f} {y[0]:12.8f} {w[0]:12.9f}")

# Joining factors tie the radial functions to the angular series
# continued to imaginary argument; both routes agree closely near u = 0.
u = 0.5
via_bessel = math.sqrt(2 * math.pi) * gpm(spec, nmax) * jpm(spec, u, nmax)
print("\nS(iu) directly:       ", spm_hyperbolic(spec, u, nmax))
print("sqrt(2 pi) g J(u):    ", via_bessel)

# Outgoing-wave combination J + iY.
print("\nH1 at u = 1:", hpm(3, spec, 1.0, nmax))
