#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of the
#   csmpy Project.
# License: MIT


# =============================================================================
# IMPORTS
# =============================================================================

from fractions import Fraction

import pytest

import numpy as np

from numpy.testing import assert_, assert_equal, assert_almost_equal

from csmpy import scalars, validators as vlds
from csmpy.scalars import Branch, Coupling, CouplingFunction


# =============================================================================
# COUPLING FUNCTION
# =============================================================================

class Test_coupling_function:

    def setup_method(self, *args):
        self.A = CouplingFunction.symbol()
        self.one = CouplingFunction.constant(1)

    def test_str(self):
        assert_equal(str(CouplingFunction.from_coeffs([4, 2])), "4+2A")
        assert_equal(str(self.A), "A")
        assert_equal(str(CouplingFunction.constant(0)), "0")

    def test_canonical_form(self):
        f = (self.A + 1) * self.A / (self.A + 1)
        assert_(f == self.A)
        assert_equal(f.den_coeffs, [Fraction(1)])

    def test_promotion(self):
        assert_(self.A - self.A == 0)
        assert_(2 * self.A == self.A + self.A)
        assert_(1 - self.A == CouplingFunction.from_coeffs([1, -1]))
        assert_(CouplingFunction.constant(3) == 3)
        assert_equal(hash(CouplingFunction.constant(3)), hash(3))

    def test_power(self):
        assert_(self.A ** 2 == self.A * self.A)
        assert_(self.A ** -1 == self.one / self.A)

    def test_evaluate(self):
        inv = self.one / self.A
        assert_equal(inv.evaluate(2), Fraction(1, 2))
        assert_equal((self.A * 3 + 4).evaluate(Fraction(1, 3)), 5)

    def test_evaluate_pole(self):
        with pytest.raises(vlds.DivisionByZero):
            (self.one / self.A).evaluate(0)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            self.A / 0

    def test_rational_roots(self):
        f = CouplingFunction.from_coeffs([-1, -1, 2])
        assert_equal(f.rational_roots(), [Fraction(-1, 2), Fraction(1)])
        assert_equal(CouplingFunction.constant(5).rational_roots(), [])

    def test_limits(self):
        f = 1 + self.one / self.A
        assert_equal(f.limit("inf"), 1)
        assert_(f.limit(0) is None)
        g = self.A / (self.A + 1)
        assert_equal(g.limit(0), 0)
        assert_equal(g.limit("inf"), 1)
        with pytest.raises(ValueError):
            g.limit(1)

    def test_json(self):
        f = (self.A * 2 + 1) / (self.A + 3)
        assert_equal(f.to_json(), {"num": ["1", "2"], "den": ["3", "1"]})
        assert_(CouplingFunction.from_json(f.to_json()) == f)

    @pytest.mark.parametrize("at", [
        -7, -2, Fraction(-1, 3), 0, Fraction(1, 2), 1, Fraction(5, 2), 9])
    def test_evaluation_homomorphism(self, at):
        f = (2 * self.A + 1) / (self.A + 3)
        g = self.A ** 2 - Fraction(1, 7)
        fx, gx = f.evaluate(at), g.evaluate(at)
        assert_equal((f + g).evaluate(at), fx + gx)
        assert_equal((f - g).evaluate(at), fx - gx)
        assert_equal((f * g).evaluate(at), fx * gx)
        assert_equal((g / f).evaluate(at), gx / fx)
        assert_equal((f / g).evaluate(at), fx / gx)
        assert_equal((f ** 3).evaluate(at), fx ** 3)
        assert_equal(
            (Fraction(2, 3) * f - 4).evaluate(at), Fraction(2, 3) * fx - 4)


# =============================================================================
# SCALAR HELPERS
# =============================================================================

def test_scalar_arithmetic_rational():
    assert_equal(
        scalars.scalar_arithmetic(Fraction(1, 2), 1, "add"), Fraction(3, 2))
    assert_equal(scalars.scalar_arithmetic(3, 4, "div"), Fraction(3, 4))


def test_scalar_arithmetic_mixed():
    with pytest.raises(vlds.MixedScalarMode):
        scalars.scalar_arithmetic(
            Fraction(1), CouplingFunction.symbol(), "add")


def test_scalar_arithmetic_zero_division():
    with pytest.raises(vlds.DivisionByZero):
        scalars.scalar_arithmetic(1, 0, "div")


def test_scalar_arithmetic_invalid_operation():
    with pytest.raises(ValueError, match=r".*Options are*"):
        scalars.scalar_arithmetic(1, 2, "pow")


def test_scalar_arithmetic_rejects_float():
    with pytest.raises(TypeError):
        scalars.scalar_arithmetic(0.5, 1, "add")


def test_scalar_to_string():
    assert_equal(scalars.scalar_to_string(Fraction(6, 4)), "3/2")
    assert_equal(scalars.scalar_to_string(4), "4")
    assert_equal(
        scalars.scalar_to_string(CouplingFunction.from_coeffs([2, 2])),
        "2+2A")


def test_scalar_json():
    f = CouplingFunction.from_coeffs([0, 1], [1, 1])
    assert_(scalars.scalar_from_json(scalars.scalar_to_json(f)) == f)
    assert_equal(scalars.scalar_from_json(
        scalars.scalar_to_json(Fraction(-2, 3))), Fraction(-2, 3))


# =============================================================================
# LAMBDA MAP
# =============================================================================

def test_coupling_from_lambda_plus():
    A, beta = scalars.coupling_from_lambda(1., Branch.PLUS)
    assert_almost_equal(A, 2.)
    assert_almost_equal(beta, 0.)


def test_coupling_from_lambda_minus():
    A, beta = scalars.coupling_from_lambda(1., Branch.MINUS)
    assert_almost_equal(A, -1.)
    assert_almost_equal(beta, -3.)


def test_coupling_from_lambda_zero():
    assert_equal(scalars.coupling_from_lambda(0., Branch.MINUS), (0., 0.))
    assert_equal(scalars.coupling_from_lambda(0., Branch.PLUS), (1., 1.))


def test_coupling_from_lambda_relation():
    lam = np.linspace(-5, 5, 100)
    for branch in Branch:
        A, beta = scalars.coupling_from_lambda(lam, branch)
        np.testing.assert_allclose(A, 2 * lam + beta, rtol=0, atol=1e-12)


def test_coupling_from_lambda_branch_required():
    with pytest.raises(TypeError):
        scalars.coupling_from_lambda(1., "plus")


def test_coupling_from_lambda_not_finite():
    with pytest.raises(ValueError):
        scalars.coupling_from_lambda(np.inf, Branch.PLUS)


# =============================================================================
# COUPLING
# =============================================================================

class Test_coupling:

    def test_parse(self):
        assert_equal(Coupling.parse("1/2").value, Fraction(1, 2))
        assert_(Coupling.parse("symbolic").is_symbolic)
        assert_(Coupling.parse(" A ").is_symbolic)

    def test_parse_invalid(self):
        with pytest.raises(ValueError, match=r".*expected a rational*"):
            Coupling.parse("one half")

    def test_fixed_rejects_float(self):
        with pytest.raises(TypeError):
            Coupling.fixed(0.5)

    def test_from_lambda_exact(self):
        c = Coupling.from_lambda(1., Branch.PLUS)
        assert_equal(c.value, 2)
        assert_(not c.approximate)
        assert_(c.branch is Branch.PLUS)

    def test_from_lambda_approximate(self):
        c = Coupling.from_lambda(0.5, Branch.PLUS)
        assert_(c.approximate)
        assert_almost_equal(float(c.value), (1 + np.sqrt(3)) / 2, decimal=6)
        assert_("approximate" in str(c))

    def test_scalar_modes(self):
        assert_(scalars.is_symbolic(Coupling.symbolic().scalar()))
        assert_equal(Coupling.fixed(3).scalar(), 3)
        assert_(scalars.is_symbolic(Coupling.symbolic().one()))
        assert_equal(Coupling.fixed(3).zero(), 0)

    def test_inverse(self):
        assert_equal(Coupling.fixed(4).inverse(), Fraction(1, 4))
        inv = Coupling.symbolic().inverse()
        assert_equal(inv.evaluate(4), Fraction(1, 4))

    def test_zero_coupling(self):
        with pytest.raises(vlds.ZeroCoupling):
            Coupling.fixed(0).inverse()

    def test_coerce_mixed(self):
        with pytest.raises(vlds.MixedScalarMode):
            Coupling.fixed(2).coerce(CouplingFunction.symbol())
