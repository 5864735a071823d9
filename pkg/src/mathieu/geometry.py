"""Elliptic cylinder coordinates and the separation parameter ``q``.

Cartesian points relate to ``(u, v)`` by ``x = f cosh u cos v`` and
``y = f sinh u sin v``, with ``f`` the semifocal distance.  The algebraic
form uses ``xi = cosh u`` and ``eta = cos v``.

Separating the Helmholtz equation leaves an axial factor ``exp(i k_z z)``,
which is not provided here, and the angular and radial Mathieu equations,
both parametrized by ``q = k_tau**2 f**2 / 4``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "EllipticGeometry",
    "WaveParams",
    "SingularCoordinateError",
    "elliptic_to_cartesian",
    "algebraic_to_cartesian",
    "scale_factors",
    "separation_parameters",
]


class SingularCoordinateError(ZeroDivisionError):
    """Scale factors diverge on the focal segment and the ``eta = +-1`` rays."""


@dataclass(frozen=True)
class EllipticGeometry:
    """Semifocal distance, optionally with the ellipse semiaxes it came from."""

    f: float
    x0: float | None = None
    y0: float | None = None

    def __post_init__(self):
        if not self.f > 0.0:
            raise ValueError(f"semifocal distance must be positive, got {self.f}")
        if (self.x0 is None) != (self.y0 is None):
            raise ValueError("give both semiaxes or neither")
        if self.x0 is not None:
            if not self.x0 > self.y0 > 0.0:
                raise ValueError("semiaxes must satisfy x0 > y0 > 0")
            if not math.isclose(self.f ** 2, self.x0 ** 2 - self.y0 ** 2, rel_tol=1e-12):
                raise ValueError("f**2 must equal x0**2 - y0**2")

    @classmethod
    def from_semiaxes(cls, x0: float, y0: float) -> "EllipticGeometry":
        if not x0 > y0 > 0.0:
            raise ValueError("semiaxes must satisfy x0 > y0 > 0")
        return cls(math.sqrt(x0 * x0 - y0 * y0), x0, y0)

    @property
    def eccentricity(self) -> float:
        if self.x0 is None:
            raise ValueError("eccentricity needs the semiaxes")
        return self.f / self.x0


@dataclass(frozen=True)
class WaveParams:
    k: float
    k_z: float
    k_tau: float
    q: float


def elliptic_to_cartesian(geom: EllipticGeometry, u, v):
    """Cartesian ``(x, y)`` of the point ``(u, v)``; arrays broadcast."""
    u = np.asarray(u, dtype=float)
    if np.any(u < 0):
        raise ValueError("radial coordinate u must be >= 0")
    v = np.asarray(v, dtype=float)
    return geom.f * np.cosh(u) * np.cos(v), geom.f * np.sinh(u) * np.sin(v)


def algebraic_to_cartesian(geom: EllipticGeometry, xi, eta):
    """Cartesian ``(x, y)`` from ``xi = cosh u``, ``eta = cos v``.

    The square root picks ``y >= 0``, i.e. the ``0 <= v <= pi`` half plane.
    """
    xi = np.asarray(xi, dtype=float)
    eta = np.asarray(eta, dtype=float)
    return geom.f * xi * eta, geom.f * np.sqrt((xi ** 2 - 1.0) * (1.0 - eta ** 2))


def scale_factors(geom: EllipticGeometry, xi: float, eta: float):
    """Metric scale factors ``(h_xi, h_eta, h_z)`` at ``(xi, eta)``.

    Raises
    ------
    ValueError
        If ``xi < 1`` or ``|eta| > 1``.
    SingularCoordinateError
        If ``xi == 1`` or ``|eta| == 1``.
    """
    if xi < 1.0 or abs(eta) > 1.0:
        raise ValueError(f"need xi >= 1 and |eta| <= 1, got xi={xi}, eta={eta}")
    if xi == 1.0 or abs(eta) == 1.0:
        raise SingularCoordinateError(f"scale factors diverge at xi={xi}, eta={eta}")
    common = geom.f * math.sqrt(xi * xi - eta * eta)
    return common / math.sqrt(xi * xi - 1.0), common / math.sqrt(1.0 - eta * eta), 1.0


def separation_parameters(geom: EllipticGeometry, k: float, k_z: float = 0.0) -> WaveParams:
    """Transverse wavenumber and elliptical parameter for a guided wave.

    Raises
    ------
    ValueError
        If ``k <= 0`` or ``|k_z| > k`` (evanescent, negative ``q``).
    """
    if not k > 0.0:
        raise ValueError(f"wavenumber must be positive, got {k}")
    if abs(k_z) > k:
        raise ValueError(f"|k_z| > k gives an evanescent wave (q < 0), k={k}, k_z={k_z}")
    k_tau = math.sqrt(k * k - k_z * k_z)
    return WaveParams(k, k_z, k_tau, k_tau * k_tau * geom.f * geom.f / 4.0)
