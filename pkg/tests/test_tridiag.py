import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mathieu import tridiag
from mathieu.angular import Category, build_matrix
from mathieu.tridiag import (ConvergenceError, InvalidSystemError,
                             TridiagonalSystem, eigen_decompose, symmetrize)

from common import Q_GRID
from oracles import sturm_eigenvalues, symmetric_eigh


def _solve(system):
    sym, scaling = symmetrize(system)
    dec = eigen_decompose(sym)
    return dec.eigenvalues, dec.eigenvectors / scaling[:, None]


class TestSymmetrize:
    def test_already_symmetric_is_identity(self):
        s = TridiagonalSystem([1.0, 2.0, 3.0], [0.5, 0.5], [0.5, 0.5])
        sym, scaling = symmetrize(s)
        assert sym is s
        np.testing.assert_array_equal(scaling, 1.0)

    def test_even_even_q5(self):
        sym, scaling = symmetrize(build_matrix(Category.EVEN_EVEN, 5.0, 6))
        assert sym.is_symmetric
        assert sym.upper[0] == pytest.approx(math.sqrt(50.0), rel=1e-15)
        assert scaling[0] == pytest.approx(math.sqrt(2.0), rel=1e-15)
        np.testing.assert_array_equal(scaling[1:], 1.0)

    def test_similarity_preserves_spectrum(self):
        s = build_matrix(Category.EVEN_EVEN, 7.0, 8)
        sym, scaling = symmetrize(s)
        d = np.diag(scaling)
        np.testing.assert_allclose(d @ s.dense() @ np.linalg.inv(d), sym.dense(), atol=1e-13)

    def test_subnormal_off_diagonal(self):
        # the product u0 * l0 underflows to zero here
        sym, scaling = symmetrize(build_matrix(Category.EVEN_EVEN, 2.2250738585e-313, 4))
        assert sym.upper[0] > 0.0
        assert scaling[0] == pytest.approx(math.sqrt(2.0), rel=1e-12)

    @pytest.mark.parametrize("u0,l0", [(1.0, -1.0), (0.0, 1.0), (1.0, 0.0)])
    def test_rejects_unsymmetrizable(self, u0, l0):
        s = TridiagonalSystem([1.0, 2.0, 3.0], [u0, 1.0], [l0, 1.0])
        with pytest.raises(InvalidSystemError):
            symmetrize(s)


class TestSystemValidation:
    def test_too_small(self):
        with pytest.raises(InvalidSystemError):
            TridiagonalSystem([1.0], [], [])

    def test_band_lengths(self):
        with pytest.raises(InvalidSystemError):
            TridiagonalSystem([1.0, 2.0, 3.0], [1.0], [1.0, 1.0])

    def test_off_diagonals_differ_beyond_first(self):
        with pytest.raises(InvalidSystemError):
            TridiagonalSystem([1.0, 2.0, 3.0], [1.0, 1.0], [1.0, 2.0])

    def test_read_only(self):
        s = TridiagonalSystem([1.0, 2.0], [1.0], [1.0])
        with pytest.raises(ValueError):
            s.diag[0] = 5.0

    def test_matvec_matches_dense(self):
        s = build_matrix(Category.EVEN_EVEN, 3.0, 6)
        x = np.arange(6.0) - 2.5
        np.testing.assert_allclose(s.matvec(x), s.dense() @ x)

    def test_decompose_rejects_nonsymmetric(self):
        with pytest.raises(InvalidSystemError):
            eigen_decompose(build_matrix(Category.EVEN_EVEN, 1.0, 4))


class TestEigenDecompose:
    def test_diagonal(self):
        dec = eigen_decompose(TridiagonalSystem([3.0, 1.0, 2.0], [0.0, 0.0], [0.0, 0.0]))
        np.testing.assert_array_equal(dec.eigenvalues, [1.0, 2.0, 3.0])
        np.testing.assert_allclose(np.abs(dec.eigenvectors), np.eye(3)[:, [1, 2, 0]])

    def test_two_by_two_closed_form(self):
        q = 2.0
        dec = eigen_decompose(TridiagonalSystem([1.0 + q, 9.0], [q], [q]))
        mean, half = (10.0 + q) / 2, math.hypot((1.0 + q - 9.0) / 2, q)
        np.testing.assert_allclose(dec.eigenvalues, [mean - half, mean + half], rtol=1e-15)

    @pytest.mark.parametrize("cat,q,expected", [
        (Category.EVEN_EVEN, 5.0, -5.8000460208515),
        (Category.EVEN_ODD, 10.0, -2.3991424000363),
    ])
    def test_smallest_characteristic_value(self, cat, q, expected):
        vals, _ = _solve(build_matrix(cat, q, 25))
        assert vals[0] == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("q", Q_GRID)
    def test_residual_and_orthonormality(self, category, q):
        system = build_matrix(category, q, 25)
        sym, _ = symmetrize(system)
        dec = eigen_decompose(sym)
        lam, z = dec.eigenvalues, dec.eigenvectors
        scale = max(1.0, np.abs(lam).max())
        res = np.abs(sym.matvec(z) - z * lam).max()
        assert res <= 1e-12 * scale
        np.testing.assert_allclose(z.T @ z, np.eye(25), atol=1e-13)
        # the original, non-symmetric system too
        vals, x = _solve(system)
        assert np.abs(system.matvec(x) - x * vals).max() <= 1e-12 * scale * np.abs(x).max()

    @pytest.mark.parametrize("q", Q_GRID)
    @pytest.mark.parametrize("size", [2, 5, 8])
    def test_against_bisection(self, category, q, size):
        system = build_matrix(category, q, size)
        expected = sturm_eigenvalues(system.diag, system.upper, system.lower)
        vals, _ = _solve(system)
        np.testing.assert_allclose(vals, expected, rtol=1e-10, atol=1e-10)

    @pytest.mark.parametrize("q", [5.0, 25.0])
    def test_against_lapack(self, category, q):
        sym, _ = symmetrize(build_matrix(category, q, 25))
        ref_vals, ref_vecs = symmetric_eigh(sym.diag, sym.upper)
        dec = eigen_decompose(sym)
        np.testing.assert_allclose(dec.eigenvalues, ref_vals, rtol=1e-13, atol=1e-12)
        # eigenvectors agree up to sign
        signs = np.sign(np.sum(dec.eigenvectors * ref_vecs, axis=0))
        np.testing.assert_allclose(dec.eigenvectors * signs, ref_vecs, atol=1e-12)

    @pytest.mark.parametrize("q", [0.5, 5.0, 25.0])
    def test_strictly_increasing(self, category, q):
        vals, _ = _solve(build_matrix(category, q, 25))
        assert np.all(np.diff(vals) > 0)

    def test_sweep_budget_exhausted(self, monkeypatch):
        monkeypatch.setattr(tridiag, "MAX_SWEEPS", 0)
        sym, _ = symmetrize(build_matrix(Category.EVEN_EVEN, 5.0, 6))
        with pytest.raises(ConvergenceError) as info:
            eigen_decompose(sym)
        assert info.value.index == 0


@st.composite
def symmetric_systems(draw):
    m = draw(st.integers(2, 30))
    elems = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)
    diag = np.array(draw(st.lists(elems, min_size=m, max_size=m)))
    off = np.array(draw(st.lists(elems, min_size=m - 1, max_size=m - 1)))
    return TridiagonalSystem(diag, off, off)


@settings(max_examples=60, deadline=None)
@given(symmetric_systems())
def test_random_symmetric_systems(system):
    dec = eigen_decompose(system)
    lam, z = dec.eigenvalues, dec.eigenvectors
    norm = max(1.0, np.abs(system.dense()).sum(axis=1).max())
    assert np.all(np.diff(lam) >= 0)
    assert np.abs(system.matvec(z) - z * lam).max() <= 1e-11 * norm
    np.testing.assert_allclose(z.T @ z, np.eye(system.size), atol=1e-11)
    np.testing.assert_allclose(lam.sum(), system.diag.sum(), atol=1e-11 * norm * system.size)
