"""Real tridiagonal eigenproblems.

The coefficient matrices of the periodic Mathieu functions are tridiagonal
and symmetric except for one entry of the even-even case.  That case is
brought to symmetric form with a diagonal similarity transform and then
handed to an implicit-shift QL solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "TridiagonalSystem",
    "EigenDecomposition",
    "InvalidSystemError",
    "ConvergenceError",
    "symmetrize",
    "eigen_decompose",
    "MAX_SWEEPS",
]

#: Maximum implicit-shift sweeps spent on a single eigenvalue.
MAX_SWEEPS = 50


class InvalidSystemError(ValueError):
    """The tridiagonal system violates its structural invariants."""


class ConvergenceError(ArithmeticError):
    """The QL iteration did not converge.

    Attributes
    ----------
    index : int
        Position of the eigenvalue that failed to converge.
    """

    def __init__(self, index: int):
        super().__init__(f"QL iteration did not converge for eigenvalue {index}")
        self.index = index


@dataclass(frozen=True)
class TridiagonalSystem:
    """Tridiagonal matrix stored by bands.

    ``upper[i]`` is entry ``(i, i+1)`` and ``lower[i]`` is entry ``(i+1, i)``.
    Only index 0 may differ between the two off-diagonals.
    """

    diag: np.ndarray
    upper: np.ndarray
    lower: np.ndarray

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        lower = np.asarray(self.lower, dtype=float)
        if diag.ndim != 1 or diag.size < 2:
            raise InvalidSystemError("need a diagonal of length >= 2")
        if upper.shape != (diag.size - 1,) or lower.shape != (diag.size - 1,):
            raise InvalidSystemError("off-diagonals must have length M - 1")
        if not np.array_equal(upper[1:], lower[1:]):
            raise InvalidSystemError("off-diagonals may differ only at index 0")
        for name, arr in (("diag", diag), ("upper", upper), ("lower", lower)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def size(self) -> int:
        return self.diag.size

    @property
    def is_symmetric(self) -> bool:
        return self.upper[0] == self.lower[0]

    def dense(self) -> np.ndarray:
        """Return the full ``M x M`` matrix."""
        return (
            np.diag(self.diag)
            + np.diag(self.upper, 1)
            + np.diag(self.lower, -1)
        )

    def matvec(self, x: np.ndarray) -> np.ndarray:
        """Multiply by a vector (or the columns of a matrix)."""
        x = np.asarray(x, dtype=float)
        y = self.diag.reshape((-1,) + (1,) * (x.ndim - 1)) * x
        off_u = self.upper.reshape((-1,) + (1,) * (x.ndim - 1))
        off_l = self.lower.reshape((-1,) + (1,) * (x.ndim - 1))
        y[:-1] += off_u * x[1:]
        y[1:] += off_l * x[:-1]
        return y


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues in ascending order, eigenvectors as matching columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def symmetrize(system: TridiagonalSystem) -> tuple[TridiagonalSystem, np.ndarray]:
    """Symmetrize a tridiagonal system by diagonal similarity.

    With ``D = diag(d0, 1, ..., 1)`` and ``d0 = sqrt(lower[0] / upper[0])``
    the matrix ``D B D^-1`` is symmetric with off-diagonal entry
    ``sqrt(upper[0] * lower[0])`` at index 0.  Eigenvalues are unchanged.

    Parameters
    ----------
    system : TridiagonalSystem

    Returns
    -------
    symmetric : TridiagonalSystem
    scaling : ndarray
        The diagonal of ``D``.  An eigenvector ``y`` of the symmetric
        system maps back to ``x = y / scaling`` for the original one.

    Raises
    ------
    InvalidSystemError
        If ``upper[0] * lower[0] < 0``, or exactly one of them vanishes.
    """
    scaling = np.ones(system.size)
    if system.is_symmetric:
        return system, scaling
    u0, l0 = float(system.upper[0]), float(system.lower[0])
    # compare signs instead of the product, which can underflow
    if u0 == 0.0 or l0 == 0.0 or (u0 < 0.0) != (l0 < 0.0):
        raise InvalidSystemError(
            f"cannot symmetrize with real scaling: upper[0]={u0}, lower[0]={l0}"
        )
    scaling[0] = math.sqrt(l0 / u0)
    off = system.upper.copy()
    off[0] = math.copysign(math.sqrt(abs(u0)) * math.sqrt(abs(l0)), u0)
    return TridiagonalSystem(system.diag.copy(), off, off.copy()), scaling


def eigen_decompose(system: TridiagonalSystem) -> EigenDecomposition:
    """Eigen-decompose a symmetric tridiagonal system with implicit QL.

    Parameters
    ----------
    system : TridiagonalSystem
        Must be symmetric (``upper == lower``).

    Returns
    -------
    EigenDecomposition
        Ascending eigenvalues and orthonormal eigenvectors.  Ties keep the
        order in which the iteration delivered them.

    Raises
    ------
    InvalidSystemError
        If the system is not symmetric.
    ConvergenceError
        If an eigenvalue needs more than ``MAX_SWEEPS`` sweeps.
    """
    if not system.is_symmetric:
        raise InvalidSystemError("eigen_decompose needs a symmetric system")

    n = system.size
    d = system.diag.astype(float)
    e = np.zeros(n)
    e[:-1] = system.upper
    # rows of zt are eigenvector components; rotating rows keeps numpy slices contiguous
    zt = np.eye(n)
    eps = np.finfo(float).eps

    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            if sweeps == MAX_SWEEPS:
                raise ConvergenceError(l)
            sweeps += 1

            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                zi = zt[i].copy()
                zt[i] = c * zi - s * zt[i + 1]
                zt[i + 1] = s * zi + c * zt[i + 1]
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0

    order = np.argsort(d, kind="stable")
    vectors = zt[order].T.copy()
    return EigenDecomposition(d[order], vectors)
