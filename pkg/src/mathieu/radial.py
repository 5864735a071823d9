r"""Radial Mathieu functions of the four kinds and the joining factors.

All radial functions are Bessel-product series over the same Fourier
coefficients as the angular functions, with arguments
:math:`v_1 = \sqrt{q} e^{-u}` and :math:`v_2 = \sqrt{q} e^{u}`.  The second
kind is the first kind with every Bessel factor at :math:`v_2` replaced by
the Bessel function of the second kind.

The direct substitution ``v -> iu`` in the angular series
(:func:`spm_hyperbolic`) is kept as a cross-check only; it loses accuracy
quickly as ``|u|`` grows.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from .angular import Category, SpectralData, dspm, spm
from .bessel import bessel_j_sequence, bessel_y_sequence

__all__ = [
    "Kind",
    "RadialArgs",
    "RadialEval",
    "gpm",
    "jpm",
    "djpm",
    "ypm",
    "dypm",
    "hpm",
    "dhpm",
    "radial_eval",
    "spm_hyperbolic",
]

_SQRT_HALF_PI = math.sqrt(0.5 * math.pi)


class Kind(enum.IntEnum):
    """Kind of radial function: J, Y, and the two Hankel-like combinations."""

    FIRST = 1
    SECOND = 2
    THIRD = 3
    FOURTH = 4


@dataclass(frozen=True)
class RadialArgs:
    """Radial coordinate together with the two Bessel arguments."""

    u: float
    q: float

    def __post_init__(self):
        if not self.q > 0.0:
            raise ValueError(f"radial functions need q > 0, got {self.q}")
        if not self.u >= 0.0:
            raise ValueError(f"radial coordinate must satisfy u >= 0, got {self.u}")

    @property
    def v1(self) -> float:
        return math.sqrt(self.q) * math.exp(-self.u)

    @property
    def v2(self) -> float:
        return math.sqrt(self.q) * math.exp(self.u)


@dataclass(frozen=True)
class RadialEval:
    """Radial function values and their ``u``-derivatives, one entry per order."""

    value: np.ndarray
    derivative: np.ndarray


@functools.lru_cache(maxsize=64)
def _bessel_tables(u: float, q: float, order_max: int):
    args = RadialArgs(u, q)
    j1 = bessel_j_sequence(args.v1, order_max).values
    j2 = bessel_j_sequence(args.v2, order_max).values
    y2 = bessel_y_sequence(args.v2, order_max).values
    for arr in (j1, j2, y2):
        arr.setflags(write=False)
    return args, j1, j2, y2


def _tables(spectral: SpectralData, u: float):
    return _bessel_tables(float(u), float(spectral.q), spectral.dim + 1)


def _prefactor(spectral: SpectralData, nmax: int) -> np.ndarray:
    t = spectral.true_orders[:nmax]
    r = t // 2  # t/2 for even t, (t-1)/2 for odd t
    lead = spectral.coeffs[0, :nmax]
    if np.any(np.abs(lead) < 1e-300):
        raise ArithmeticError("leading expansion coefficient vanishes")
    return _SQRT_HALF_PI * np.where(r % 2 == 0, 1.0, -1.0) / lead


def _product_terms(category: Category, dim: int, u: float, v1: float, v2: float,
                   z1: np.ndarray, z2: np.ndarray, derivative: bool) -> np.ndarray:
    """Per-coefficient Bessel products, before the alternating sign.

    ``z1`` holds J at ``v1``; ``z2`` holds J or Y at ``v2``.
    """
    j = np.arange(dim)
    if category is Category.EVEN_EVEN:
        if not derivative:
            return z1[j] * z2[j]
        return v1 * z1[j + 1] * z2[j] - v2 * z1[j] * z2[j + 1]
    if category is Category.EVEN_ODD:
        if not derivative:
            return z1[j] * z2[j + 1] + z2[j] * z1[j + 1]
        return ((v2 - v1) * (z1[j] * z2[j] - z1[j + 1] * z2[j + 1])
                + (2 * j + 1) * (z1[j + 1] * z2[j] - z1[j] * z2[j + 1]))
    if category is Category.ODD_EVEN:
        # coefficient row i carries the harmonic 2(i+1)
        if not derivative:
            k = j + 1
            return -(z1[k - 1] * z2[k + 1] - z2[k - 1] * z1[k + 1])
        return -(4 * j + 4) * (
            z1[j] * z2[j]
            + math.cosh(2.0 * u) * z1[j + 1] * z2[j + 1]
            - (j + 1) * (z1[j + 1] * z2[j] / v1 + z1[j] * z2[j + 1] / v2)
        )
    if not derivative:
        return z1[j] * z2[j + 1] - z2[j] * z1[j + 1]
    return ((v1 + v2) * (z1[j] * z2[j] + z1[j + 1] * z2[j + 1])
            - (2 * j + 1) * (z1[j + 1] * z2[j] + z1[j] * z2[j + 1]))


def _radial_series(spectral: SpectralData, u: float, nmax, second: bool,
                   derivative: bool) -> np.ndarray:
    nmax = spectral._nmax(nmax)
    args, j1, j2, y2 = _tables(spectral, u)
    z2 = y2 if second else j2
    terms = _product_terms(spectral.category, spectral.dim, args.u,
                           args.v1, args.v2, j1, z2, derivative)
    sign = np.where(np.arange(spectral.dim) % 2 == 0, 1.0, -1.0)
    sums = (sign * terms) @ spectral.coeffs[:, :nmax]
    return _prefactor(spectral, nmax) * sums


def gpm(spectral: SpectralData, nmax: int | None = None) -> np.ndarray:
    """Joining factors ``g`` linking ``S(iu)`` to ``sqrt(2 pi) g J(u)``.

    Raises
    ------
    ValueError
        If ``q <= 0``.
    ArithmeticError
        If the leading coefficient of some order vanishes.
    """
    q = spectral.q
    if not q > 0.0:
        raise ValueError(f"joining factors need q > 0, got {q}")
    nmax = spectral._nmax(nmax)
    cat = spectral.category
    lead = spectral.coeffs[0, :nmax]
    if np.any(np.abs(lead) < 1e-300):
        raise ArithmeticError("leading expansion coefficient vanishes")
    r = spectral.true_orders[:nmax] // 2
    sign = np.where(r % 2 == 0, 1.0, -1.0)
    half_pi = 0.5 * math.pi
    if cat is Category.EVEN_EVEN:
        return sign * spm(spectral, half_pi, nmax) / (math.pi * lead)
    if cat is Category.EVEN_ODD:
        return -sign * dspm(spectral, half_pi, nmax) / (math.pi * math.sqrt(q) * lead)
    if cat is Category.ODD_EVEN:
        return sign * dspm(spectral, half_pi, nmax) / (math.pi * q * lead)
    return sign * spm(spectral, half_pi, nmax) / (math.pi * math.sqrt(q) * lead)


def jpm(spectral: SpectralData, u: float, nmax: int | None = None) -> np.ndarray:
    """Radial Mathieu functions of the first kind at ``u``."""
    return _radial_series(spectral, u, nmax, second=False, derivative=False)


def djpm(spectral: SpectralData, u: float, nmax: int | None = None) -> np.ndarray:
    """``u``-derivatives of the first-kind radial functions."""
    return _radial_series(spectral, u, nmax, second=False, derivative=True)


def ypm(spectral: SpectralData, u: float, nmax: int | None = None) -> np.ndarray:
    """Radial Mathieu functions of the second kind at ``u``."""
    return _radial_series(spectral, u, nmax, second=True, derivative=False)


def dypm(spectral: SpectralData, u: float, nmax: int | None = None) -> np.ndarray:
    """``u``-derivatives of the second-kind radial functions."""
    return _radial_series(spectral, u, nmax, second=True, derivative=True)


def _hankel_sign(kind) -> float:
    kind = Kind(kind)
    if kind is Kind.THIRD:
        return 1.0
    if kind is Kind.FOURTH:
        return -1.0
    raise ValueError(f"hpm/dhpm need the third or fourth kind, got {kind.name}")


def hpm(kind, spectral: SpectralData, u: float, nmax: int | None = None) -> np.ndarray:
    """Third (``J + iY``) or fourth (``J - iY``) kind radial functions."""
    s = _hankel_sign(kind)
    return jpm(spectral, u, nmax) + s * 1j * ypm(spectral, u, nmax)


def dhpm(kind, spectral: SpectralData, u: float, nmax: int | None = None) -> np.ndarray:
    """``u``-derivatives of :func:`hpm`."""
    s = _hankel_sign(kind)
    return djpm(spectral, u, nmax) + s * 1j * dypm(spectral, u, nmax)


def radial_eval(kind, spectral: SpectralData, u: float, nmax: int | None = None) -> RadialEval:
    """Values and derivatives of one radial kind bundled together."""
    kind = Kind(kind)
    if kind is Kind.FIRST:
        return RadialEval(jpm(spectral, u, nmax), djpm(spectral, u, nmax))
    if kind is Kind.SECOND:
        return RadialEval(ypm(spectral, u, nmax), dypm(spectral, u, nmax))
    return RadialEval(hpm(kind, spectral, u, nmax), dhpm(kind, spectral, u, nmax))


def spm_hyperbolic(spectral: SpectralData, u, nmax: int | None = None) -> np.ndarray:
    """Angular series continued to imaginary argument ``v = iu``.

    Returns ``S(iu)`` for the even classes and ``-i S(iu)`` for the odd
    ones; both are real.  Only trustworthy for small ``|u|`` (about 3 at
    most with 25 coefficients).
    """
    nmax = spectral._nmax(nmax)
    u = np.asarray(u, dtype=float)
    arg = u[..., None] * spectral.harmonics
    basis = np.cosh(arg) if spectral.category.is_even else np.sinh(arg)
    return basis @ spectral.coeffs[:, :nmax]
