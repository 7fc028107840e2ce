"""Complex polynomial and exponential-power term arithmetic."""

import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phasenu.errors import BranchPointError, DegreeError
from phasenu.numeric import ExpPowerTerm, Poly, quadratic_roots

unit_coeff = st.complex_numbers(
    min_magnitude=0.0, max_magnitude=1.0, allow_nan=False, allow_infinity=False
)


class TestPoly:
    def test_zero_poly(self):
        p = Poly(())
        assert p.is_zero
        assert p.degree == -1
        assert p(5.0) == 0j

    def test_horner_at_root(self):
        p = Poly((4.0, -1.0))
        assert p(4.0) == 0j

    def test_horner_radial_coefficients(self):
        p = Poly((0.0, 2.0, -0.25))
        assert p(2.0) == pytest.approx(3.0)

    def test_trailing_trim_relative_to_peak(self):
        assert Poly((1.0, 1e-20)).degree == 0
        assert Poly((1e-20,)).coefficient(0) == 1e-20 + 0j

    def test_trim_idempotent(self):
        p = Poly((1.0, 2.0, 1e-16, 3e-15))
        again = Poly(tuple(p))
        assert tuple(again) == tuple(p)

    def test_arithmetic_preserves_tiny_leading_coefficients(self):
        """Sums and products drop only exact-zero tails.

        A leading coefficient far below the peak is meaningful when it was
        computed, not typed: high-order Rodrigues outputs carry such
        coefficients and dividing them away would change the degree.
        """
        tiny = Poly((0j, 1e-20))
        assert (Poly((1.0,)) + tiny).degree == 1
        assert (Poly((1.0,)) * tiny).degree == 1

    def test_exact_cancellation_drops_tail(self):
        p = Poly((1.0, 2.0))
        assert (p - p).is_zero
        assert (Poly((1.0, 2.0)) - Poly((0.0, 2.0))).degree == 0

    def test_derivative_linear(self):
        assert tuple(Poly((4.0, -1.0)).derivative()) == (-1 + 0j,)

    def test_derivative_constant_is_zero(self):
        assert Poly((7.0,)).derivative().is_zero

    def test_derivative_square(self):
        assert tuple(Poly((0.0, 0.0, 1.0)).derivative()) == (0j, 2 + 0j)

    def test_ring_operations(self):
        p = Poly((1.0, 1.0))
        q = Poly((-1.0, 1.0))
        assert tuple(p * q) == (-1 + 0j, 0j, 1 + 0j)
        assert tuple(p + q) == (0j, 2 + 0j)
        assert tuple(-p) == (-1 + 0j, -1 + 0j)
        assert tuple(2.0 * p) == (2 + 0j, 2 + 0j)
        assert tuple(p.shifted_up()) == (0j, 1 + 0j, 1 + 0j)

    def test_coefficient_out_of_range(self):
        assert Poly((1.0,)).coefficient(3) == 0j

    @given(st.lists(unit_coeff, min_size=1, max_size=9), unit_coeff)
    @settings(max_examples=60, deadline=None)
    def test_derivative_matches_central_difference(self, coeffs, z):
        p = Poly(coeffs)
        h = 1e-5
        fd = (p(z + h) - p(z - h)) / (2.0 * h)
        exact = p.derivative()(z)
        assert abs(exact - fd) <= 1e-6 * (1.0 + abs(exact))


class TestQuadraticRoots:
    def test_symmetric_real_pair(self):
        assert quadratic_roots(Poly((-1.0, 0.0, 1.0))) == (-1 + 0j, 1 + 0j)

    def test_linear_root_twice(self):
        assert quadratic_roots(Poly((4.0, 2.0))) == (-2 + 0j, -2 + 0j)

    def test_double_root(self):
        r = quadratic_roots(Poly((1.0, -2.0, 1.0)))
        assert r == (1 + 0j, 1 + 0j)

    def test_imaginary_pair_ordering(self):
        assert quadratic_roots(Poly((1.0, 0.0, 1.0))) == (-1j, 1j)

    def test_degree_bounds(self):
        with pytest.raises(DegreeError):
            quadratic_roots(Poly((3.0,)))
        with pytest.raises(DegreeError):
            quadratic_roots(Poly((0.0, 0.0, 0.0, 1.0)))

    @given(
        st.complex_numbers(min_magnitude=1e-3, max_magnitude=10, allow_nan=False),
        st.complex_numbers(max_magnitude=10, allow_nan=False),
        st.complex_numbers(max_magnitude=10, allow_nan=False),
    )
    @settings(max_examples=80, deadline=None)
    def test_roots_reconstruct_the_quadratic(self, a, b, c):
        r1, r2 = quadratic_roots(Poly((c, b, a)))
        scale = max(abs(b / a), abs(c / a), 1.0)
        assert abs((r1 + r2) + b / a) <= 1e-12 * scale
        assert abs(r1 * r2 - c / a) <= 1e-12 * scale


class TestExpPowerTerm:
    def test_leading_zero_folds_into_power(self):
        t = ExpPowerTerm(Poly((0.0, 1.0)), rate=-2.0, power=0.0)
        assert tuple(t.poly) == (1 + 0j,)
        assert t.power == 0j + 1.0

    def test_zero_poly_normalizes_to_zero_term(self):
        t = ExpPowerTerm(Poly(()), rate=3.0, power=1.5)
        assert t.is_zero
        assert t.rate == 0j
        assert t.power == 0j

    def test_derivative_of_constant_is_zero(self):
        assert ExpPowerTerm(Poly((1.0,)), 0.0, 0.0).derivative().is_zero

    def test_derivative_hydrogen_weight_step(self):
        t = ExpPowerTerm(Poly((1.0,)), rate=-1.0 / 3.0, power=4.0 / 3.0)
        d = t.derivative()
        assert d.rate == pytest.approx(-1.0 / 3.0)
        assert d.power == pytest.approx(1.0 / 3.0)
        assert d.poly.coefficient(0) == pytest.approx(4.0 / 3.0)
        assert d.poly.coefficient(1) == pytest.approx(-1.0 / 3.0)

    def test_pure_exponential_derivative_twice(self):
        t = ExpPowerTerm(Poly((1.0,)), rate=2.0, power=0.0)
        dd = t.derivative().derivative()
        assert dd.power == 0j
        assert dd.rate == pytest.approx(2.0)
        assert dd.poly.coefficient(0) == pytest.approx(4.0)

    def test_evaluate_at_one(self):
        t = ExpPowerTerm(Poly((1.0,)), rate=-1.0 / 6.0, power=1.0 / 3.0)
        assert t.evaluate(1.0) == pytest.approx(math.exp(-1.0 / 6.0))

    def test_real_on_positive_axis(self):
        t = ExpPowerTerm(Poly((2.0, -1.0)), rate=-0.4, power=0.25)
        v = t.evaluate(1.7)
        assert v.imag == pytest.approx(0.0, abs=1e-15)

    def test_branch_point_rejected(self):
        t = ExpPowerTerm(Poly((1.0,)), rate=0.0, power=0.5)
        with pytest.raises(BranchPointError):
            t.evaluate(0.0)
        neg = ExpPowerTerm(Poly((1.0,)), rate=0.0, power=-1.0)
        with pytest.raises(BranchPointError):
            neg.evaluate(0.0)

    def test_integer_power_at_origin(self):
        assert ExpPowerTerm(Poly((3.0,)), 1.0, 0.0).evaluate(0.0) == 3 + 0j
        assert ExpPowerTerm(Poly((3.0,)), 1.0, 2.0).evaluate(0.0) == 0j

    def test_times_poly_and_scaled(self):
        t = ExpPowerTerm(Poly((1.0,)), rate=-1.0, power=0.5)
        grown = t.times_poly(Poly((0.0, 2.0)))
        assert grown.power == pytest.approx(1.5)
        assert grown.poly.coefficient(0) == pytest.approx(2.0)
        assert t.scaled(3.0).poly.coefficient(0) == pytest.approx(3.0)

    def test_derivative_matches_central_difference_on_annulus(self):
        t = ExpPowerTerm(Poly((1.0, 0.5)), rate=-0.3 + 0.1j, power=1.0 / 3.0)
        d = t.derivative()
        rng_points = [
            cmath.rect(0.5 + 2.5 * (i / 19.0), -1.2 + 2.4 * ((7 * i) % 20) / 19.0)
            for i in range(20)
        ]
        h = 1e-6
        for z in rng_points:
            fd = (t.evaluate(z + h) - t.evaluate(z - h)) / (2.0 * h)
            assert abs(d.evaluate(z) - fd) <= 1e-6 * (1.0 + abs(fd))
