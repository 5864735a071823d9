import math

import mpmath as mp
import numpy as np
import pytest

from mathieu.angular import Category, npm, order_index, spm
from mathieu.radial import (Kind, RadialArgs, dhpm, djpm, dypm, gpm, hpm, jpm,
                            radial_eval, spm_hyperbolic, ypm)

from common import CATEGORIES, spectral

EE, EO, OE, OO = CATEGORIES
SQRT_2PI = math.sqrt(2 * math.pi)


def low_orders(spec, tmax=9):
    return int(np.sum(spec.true_orders <= tmax))


def fd5_second(f, u, h=1e-3):
    return (-f(u + 2 * h) + 16 * f(u + h) - 30 * f(u) + 16 * f(u - h) - f(u - 2 * h)) / (12 * h * h)


def gamma(spec, n):
    return math.sqrt(math.pi / npm(spec)[n])


class TestJoiningFactors:
    def test_small_q_limit(self):
        spec = spectral(EE, 1e-10)
        assert gpm(spec, 1)[0] == pytest.approx(1 / math.pi, rel=1e-9)

    def test_nonpositive_q(self):
        with pytest.raises(ValueError):
            gpm(spectral(EE, 0.0))

    @pytest.mark.parametrize("tmax,tol", [(6, 1e-12), (9, 1e-9)])
    @pytest.mark.parametrize("q", [5.0, 10.0, 20.0])
    def test_even_endpoint(self, q, tmax, tol):
        for cat in (EE, EO):
            spec = spectral(cat, q)
            n = low_orders(spec, tmax)
            np.testing.assert_allclose(jpm(spec, 0.0, n) * SQRT_2PI * gpm(spec, n), 1.0,
                                       rtol=tol)
            np.testing.assert_allclose(djpm(spec, 0.0, n), 0.0, atol=1e-12)

    @pytest.mark.parametrize("tmax,tol", [(6, 1e-12), (9, 1e-9)])
    @pytest.mark.parametrize("q", [5.0, 10.0, 20.0])
    def test_odd_endpoint(self, q, tmax, tol):
        for cat in (OE, OO):
            spec = spectral(cat, q)
            n = low_orders(spec, tmax)
            np.testing.assert_allclose(jpm(spec, 0.0, n), 0.0, atol=1e-12)
            np.testing.assert_allclose(djpm(spec, 0.0, n) * SQRT_2PI * gpm(spec, n), 1.0,
                                       rtol=tol)


class TestFirstKind:
    @pytest.mark.parametrize("cat,q,t,expected", [
        (EE, 5.0, 0, -0.019325304910071),
        (OO, 10.0, 1, 0.000750806874015),
    ])
    def test_tabulated(self, cat, q, t, expected):
        spec = spectral(cat, q)
        n = order_index(cat, t)
        got = gamma(spec, n) * SQRT_2PI * gpm(spec)[n] * jpm(spec, 0.5)[n]
        assert got == pytest.approx(expected, abs=1e-13)

    def test_derivative_finite_difference(self, category):
        spec = spectral(category, 10.0)
        n, u, h = low_orders(spec), 0.7, 1e-5
        for f, df in ((jpm, djpm), (ypm, dypm)):
            fd = (f(spec, u + h, n) - f(spec, u - h, n)) / (2 * h)
            np.testing.assert_allclose(df(spec, u, n), fd, rtol=1e-7, atol=1e-7)
        fd = (hpm(3, spec, u + h, n) - hpm(3, spec, u - h, n)) / (2 * h)
        np.testing.assert_allclose(dhpm(3, spec, u, n), fd, rtol=1e-7, atol=1e-7)

    def test_q_must_be_positive(self):
        with pytest.raises(ValueError):
            jpm(spectral(EE, 0.0), 0.5)
        with pytest.raises(ValueError):
            RadialArgs(-0.1, 5.0)

    def test_truncation_insensitive(self, category):
        a, b = spectral(category, 25.0), spectral(category, 25.0, 40)
        n = low_orders(a)
        for u in (0.2, 1.0, 2.0):
            for f in (jpm, ypm):
                ref = f(b, u, n)
                np.testing.assert_allclose(f(a, u, n), ref, rtol=1e-12,
                                           atol=1e-13 * np.abs(ref).max())


def independent_y_ee0(q, u, terms=50):
    """Second-kind even-even radial function, order 0, from scratch.

    Coefficients from a dense eigen-solve of the unsymmetrized matrix,
    Bessel values from mpmath.
    """
    h = 2 * np.arange(terms)
    b = np.diag(h.astype(float) ** 2) + q * (np.eye(terms, k=1) + np.eye(terms, k=-1))
    b[1, 0] = 2 * q
    w, v = np.linalg.eig(b)
    k = np.argmin(w.real)
    coef = v[:, k].real
    coef = coef / coef.sum()
    v1, v2 = math.sqrt(q) * math.exp(-u), math.sqrt(q) * math.exp(u)
    with mp.workdps(30):
        total = mp.fsum((-1) ** j * coef[j] * mp.besselj(j, v1) * mp.bessely(j, v2)
                        for j in range(terms))
    return float(math.sqrt(math.pi / 2) * total / coef[0])


class TestSecondKind:
    def test_against_independent_series(self):
        got = ypm(spectral(EE, 5.0), 0.5, 1)[0]
        assert got == pytest.approx(independent_y_ee0(5.0, 0.5), rel=1e-11)

    @pytest.mark.parametrize("q", [5.0, 25.0])
    @pytest.mark.parametrize("kind", list(Kind))
    def test_radial_equation(self, category, q, kind):
        spec = spectral(category, q)
        n = low_orders(spec)
        a = spec.char_values[:n]
        for u in (0.5, 1.0, 2.0):
            def f(x):
                return radial_eval(kind, spec, x, n).value
            d2 = fd5_second(f, u)
            pot = (a - 2 * q * math.cosh(2 * u)) * f(u)
            scale = np.maximum(np.abs(d2), np.abs(pot))
            assert np.all(np.abs(d2 - pot) <= 1e-6 * scale)

    @pytest.mark.parametrize("q", [5.0, 25.0])
    def test_wronskian(self, category, q):
        spec = spectral(category, q)
        n = low_orders(spec)
        w = np.array([jpm(spec, u, n) * dypm(spec, u, n) - ypm(spec, u, n) * djpm(spec, u, n)
                      for u in (0.2, 0.5, 1.0, 2.0)])
        np.testing.assert_allclose(w, np.broadcast_to(w[0], w.shape), rtol=1e-9)
        np.testing.assert_allclose(w, 1.0, rtol=1e-9)


class TestHankelKinds:
    def test_definitions(self, category):
        spec = spectral(category, 10.0)
        u = 0.8
        j, y = jpm(spec, u), ypm(spec, u)
        np.testing.assert_array_equal(hpm(Kind.THIRD, spec, u), j + 1j * y)
        np.testing.assert_array_equal(hpm(Kind.FOURTH, spec, u), j - 1j * y)
        np.testing.assert_array_equal(dhpm(4, spec, u), np.conj(dhpm(3, spec, u)))
        np.testing.assert_array_equal(dhpm(3, spec, u), djpm(spec, u) + 1j * dypm(spec, u))

    @pytest.mark.parametrize("kind", [Kind.FIRST, Kind.SECOND])
    def test_rejects_real_kinds(self, kind):
        with pytest.raises(ValueError):
            hpm(kind, spectral(EE, 5.0), 0.5)
        with pytest.raises(ValueError):
            dhpm(kind, spectral(EE, 5.0), 0.5)

    def test_radial_eval_bundles(self):
        spec = spectral(OE, 5.0)
        ev = radial_eval(Kind.SECOND, spec, 1.0, 3)
        np.testing.assert_array_equal(ev.value, ypm(spec, 1.0, 3))
        np.testing.assert_array_equal(ev.derivative, dypm(spec, 1.0, 3))


def test_high_orders_lose_digits():
    # the product series divides by a leading coefficient that shrinks
    # rapidly with the order; past t ~ 10 at small u digits are lost
    spec = spectral(EE, 5.0)
    bessel = SQRT_2PI * gpm(spec, 10) * jpm(spec, 0.5, 10)
    rel = np.abs(spm_hyperbolic(spec, 0.5, 10) - bessel) / np.abs(bessel)
    assert rel[:5].max() < 1e-11
    assert rel[9] > 1e-6


class TestHyperbolicSeries:
    def test_tabulated(self):
        spec = spectral(OE, 5.0)
        n = order_index(OE, 2)
        assert gamma(spec, n) * spm_hyperbolic(spec, 0.5)[n] == pytest.approx(
            0.238342768735937, abs=1e-14)

    def test_at_zero(self, category):
        spec = spectral(category, 5.0)
        expected = spm(spec, 0.0)
        np.testing.assert_allclose(spm_hyperbolic(spec, 0.0), expected, atol=1e-14)

    @pytest.mark.parametrize("q", [5.0, 10.0, 20.0])
    def test_agrees_with_bessel_products(self, category, q):
        spec = spectral(category, q)
        n = low_orders(spec, 6)
        bessel = SQRT_2PI * gpm(spec, n) * jpm(spec, 0.5, n)
        diff = np.abs(spm_hyperbolic(spec, 0.5, n) - bessel)
        assert diff.max() < 7.5e-12
