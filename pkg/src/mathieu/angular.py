r"""Angular Mathieu functions of the four periodic parity classes.

For a given elliptical parameter ``q`` each class has a sequence of
characteristic values ``a`` and Fourier coefficient vectors.  These come
from a truncated tridiagonal eigenproblem (:func:`eig_spm`), after which
every evaluator here and in :mod:`mathieu.radial` works from the returned
:class:`SpectralData`.

Normalization follows Stratton: even functions equal 1 at ``v = 0``, odd
functions have unit slope there.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .tridiag import TridiagonalSystem, eigen_decompose, symmetrize

__all__ = [
    "Category",
    "SpectralData",
    "DEFAULT_DIM",
    "DegenerateNormalizationError",
    "OrderLookupError",
    "build_matrix",
    "eig_spm",
    "spm",
    "dspm",
    "npm",
    "cpm",
    "order_lookup",
    "order_index",
    "extract_one_value",
]

#: Number of Fourier coefficients kept per function.
DEFAULT_DIM = 25


class Category(enum.IntEnum):
    """Parity class of a periodic Mathieu function (the function code KF)."""

    EVEN_EVEN = 1
    EVEN_ODD = 2
    ODD_EVEN = 3
    ODD_ODD = 4

    @property
    def is_even(self) -> bool:
        """True for the cosine series (even in ``v``)."""
        return self in (Category.EVEN_EVEN, Category.EVEN_ODD)

    @property
    def short(self) -> str:
        return {1: "ee", 2: "eo", 3: "oe", 4: "oo"}[int(self)]

    def harmonics(self, dim: int) -> np.ndarray:
        """Harmonic index multiplying ``v`` for each stored coefficient."""
        i = np.arange(dim)
        return {
            Category.EVEN_EVEN: 2 * i,
            Category.EVEN_ODD: 2 * i + 1,
            Category.ODD_EVEN: 2 * i + 2,
            Category.ODD_ODD: 2 * i + 1,
        }[self]

    def true_order(self, n):
        """True order ``t`` of the ``n``-th function (0-based ``n``)."""
        return 2 * np.asarray(n) + (0, 0, 1, 2, 1)[int(self)]

    def normalization_weights(self, dim: int) -> np.ndarray:
        """Weights ``w`` such that ``sum(w * A) = 1`` fixes the scale."""
        if self.is_even:
            return np.ones(dim)
        return self.harmonics(dim).astype(float)


def _category(kf) -> Category:
    try:
        return Category(kf)
    except ValueError:
        raise ValueError(f"unknown function code {kf!r}, expected 1..4") from None


class DegenerateNormalizationError(ArithmeticError):
    """A coefficient column cannot be normalized (its weighted sum vanishes)."""


class OrderLookupError(LookupError):
    """Requested true order is absent or has the wrong parity."""


@dataclass(frozen=True)
class SpectralData:
    """Characteristic values and normalized coefficients for one ``(category, q)``.

    Attributes
    ----------
    category : Category
    q : float
    char_values : ndarray, shape (dim,)
        Characteristic values, ascending.
    coeffs : ndarray, shape (dim, dim)
        Column ``n`` holds the Fourier coefficients of the ``n``-th function.
    true_orders : ndarray of int, shape (dim,)
    """

    category: Category
    q: float
    char_values: np.ndarray
    coeffs: np.ndarray
    true_orders: np.ndarray

    @property
    def dim(self) -> int:
        return self.char_values.size

    @property
    def harmonics(self) -> np.ndarray:
        return self.category.harmonics(self.dim)

    def _nmax(self, nmax) -> int:
        if nmax is None:
            return self.dim
        nmax = int(nmax)
        if not 0 <= nmax <= self.dim:
            raise ValueError(f"nmax must lie in [0, {self.dim}], got {nmax}")
        return nmax


def build_matrix(category, q: float, dim: int = DEFAULT_DIM) -> TridiagonalSystem:
    """Tridiagonal matrix ``B`` with ``B @ A = a * A`` for one category.

    Raises
    ------
    ValueError
        If ``q < 0`` or ``dim < 2``.
    """
    category = _category(category)
    q = float(q)
    if not q >= 0.0:
        raise ValueError(f"elliptical parameter must satisfy q >= 0, got {q}")
    if dim < 2:
        raise ValueError("dim must be >= 2")
    diag = category.harmonics(dim).astype(float) ** 2
    if category is Category.EVEN_ODD:
        diag[0] += q
    elif category is Category.ODD_ODD:
        diag[0] -= q
    upper = np.full(dim - 1, q)
    lower = upper.copy()
    if category is Category.EVEN_EVEN:
        lower[0] = 2.0 * q
    return TridiagonalSystem(diag, upper, lower)


def eig_spm(category, q: float, dim: int = DEFAULT_DIM) -> SpectralData:
    """Characteristic values and expansion coefficients.

    Each eigenvector is rescaled so that the endpoint normalization holds
    exactly: ``sum A = 1`` for the even classes, ``sum h A = 1`` with ``h``
    the harmonic index for the odd ones.

    Parameters
    ----------
    category : Category or int
        Function code 1..4.
    q : float
        Elliptical parameter, ``q >= 0``.
    dim : int
        Truncation size of the eigenproblem.

    Returns
    -------
    SpectralData
    """
    category = _category(category)
    system = build_matrix(category, q, dim)
    sym, scaling = symmetrize(system)
    dec = eigen_decompose(sym)
    vecs = dec.eigenvectors / scaling[:, None]
    sums = category.normalization_weights(dim) @ vecs
    bad = np.flatnonzero(np.abs(sums) < 1e-13)
    if bad.size:
        raise DegenerateNormalizationError(
            f"normalization sum vanishes for {category.name} q={q}, orders {bad.tolist()}"
        )
    coeffs = vecs / sums
    for arr in (dec.eigenvalues, coeffs):
        arr.setflags(write=False)
    true_orders = category.true_order(np.arange(dim))
    true_orders.setflags(write=False)
    return SpectralData(category, float(q), dec.eigenvalues, coeffs, true_orders)


def _series(spectral: SpectralData, v, nmax, derivative: bool) -> np.ndarray:
    nmax = spectral._nmax(nmax)
    v = np.asarray(v, dtype=float)
    h = spectral.harmonics.astype(float)
    arg = v[..., None] * h
    even = spectral.category.is_even
    if not derivative:
        basis = np.cos(arg) if even else np.sin(arg)
    elif even:
        basis = -h * np.sin(arg)
    else:
        basis = h * np.cos(arg)
    return basis @ spectral.coeffs[:, :nmax]


def spm(spectral: SpectralData, v, nmax: int | None = None) -> np.ndarray:
    """Angular Mathieu functions ``S(v)`` for the first ``nmax`` orders.

    ``v`` may be a scalar or an array; the order axis is appended last.
    The full stored coefficient column is summed for every order.
    """
    return _series(spectral, v, nmax, derivative=False)


def dspm(spectral: SpectralData, v, nmax: int | None = None) -> np.ndarray:
    """Derivatives ``dS/dv``, same layout as :func:`spm`."""
    return _series(spectral, v, nmax, derivative=True)


def _weighted_overlap(a: np.ndarray, b: np.ndarray, category: Category) -> np.ndarray:
    out = math.pi * np.sum(a * b, axis=0)
    if category is Category.EVEN_EVEN:
        out += math.pi * a[0] * b[0]
    return out


def npm(spectral: SpectralData, nmax: int | None = None) -> np.ndarray:
    """Normalization factors, i.e. the integral of ``S**2`` over a period 2*pi."""
    nmax = spectral._nmax(nmax)
    c = spectral.coeffs[:, :nmax]
    return _weighted_overlap(c, c, spectral.category)


def cpm(spectral: SpectralData, spectral_other: SpectralData,
        nmax: int | None = None) -> np.ndarray:
    """Correlation factors between same-class functions at two values of q.

    Order ``n`` of ``spectral`` is paired with order ``n`` of
    ``spectral_other``.

    Raises
    ------
    ValueError
        If the categories or truncation sizes differ.
    """
    if spectral.category is not spectral_other.category:
        raise ValueError(
            f"category mismatch: {spectral.category.name} vs {spectral_other.category.name}"
        )
    if spectral.dim != spectral_other.dim:
        raise ValueError("both coefficient sets must have the same dimension")
    nmax = spectral._nmax(nmax)
    return _weighted_overlap(
        spectral.coeffs[:, :nmax], spectral_other.coeffs[:, :nmax], spectral.category
    )


def order_index(category, t: int) -> int:
    """Position ``n`` in the ascending sequence for true order ``t``."""
    category = _category(category)
    t = int(t)
    offset = int(category.true_order(0))
    if t < offset or (t - offset) % 2:
        raise OrderLookupError(f"t={t} is not a valid order for {category.name}")
    return (t - offset) // 2


def order_lookup(spectral: SpectralData, t: int) -> tuple[float, np.ndarray]:
    """Characteristic value and coefficient column of true order ``t``."""
    n = order_index(spectral.category, t)
    if n >= spectral.dim:
        raise OrderLookupError(f"t={t} exceeds the stored orders (dim={spectral.dim})")
    return float(spectral.char_values[n]), spectral.coeffs[:, n]


def extract_one_value(category, t: int, values) -> float:
    """Pick the entry of an order-indexed vector belonging to true order ``t``."""
    n = order_index(category, t)
    values = np.asarray(values)
    if n >= values.shape[-1]:
        raise OrderLookupError(f"t={t} is beyond the {values.shape[-1]} computed orders")
    return values[..., n]
