"""Elliptic cylinder coordinates and the parameter q of a guided wave.

Run with ``python demos/elliptic_geometry.py``.
"""

import math

import numpy as np

from mathieu import (EllipticGeometry, elliptic_to_cartesian, scale_factors,
                     separation_parameters)

# An elliptical waveguide with semiaxes 5 and 3 has its foci at +-4.
geom = EllipticGeometry.from_semiaxes(5.0, 3.0)
print(f"semifocal distance f = {geom.f}, eccentricity = {geom.eccentricity}")

# The wall is the coordinate line u = atanh(y0 / x0).
u_wall = math.atanh(3.0 / 5.0)
v = np.linspace(0, math.pi / 2, 4)
x, y = elliptic_to_cartesian(geom, u_wall, v)
for vi, xi, yi in zip(v, x, y):
    print(f"v = {vi:.3f}: ({xi:.4f}, {yi:.4f})")

print("scale factors at xi = cosh(u_wall), eta = 0.5:",
      scale_factors(geom, math.cosh(u_wall), 0.5))

# Wavenumber k with axial component k_z fixes q = k_tau^2 f^2 / 4.
params = separation_parameters(geom, k=1.2, k_z=0.5)
print(f"k_tau = {params.k_tau:.6f}, q = {params.q:.6f}")
