#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of the
#   csmpy Project.
# License: MIT


# =============================================================================
# IMPORTS
# =============================================================================

import itertools
from fractions import Fraction

import pytest

from numpy.testing import assert_, assert_equal

from csmpy import partitions as parts, symfunc, validators as vlds
from csmpy.scalars import Coupling, CouplingFunction
from csmpy.symfunc import Mode, SymFunc


A = CouplingFunction.symbol()

P = parts.make_partition


# =============================================================================
# BASIS CHANGE
# =============================================================================

def test_transition_weight_two():
    tr = symfunc.monomial_to_powersum(2)
    assert_equal([k.parts for k in tr.partitions], [(2,), (1, 1)])
    assert_equal(tr.psum_to_mono, ((1, 0), (1, 2)))
    assert_equal(tr.mono_to_psum,
                 ((1, 0), (Fraction(-1, 2), Fraction(1, 2))))


def test_transition_inverse():
    tr = symfunc.monomial_to_powersum(4)
    size = len(tr)
    for i in range(size):
        for j in range(size):
            value = sum(tr.psum_to_mono[i][n] * tr.mono_to_psum[n][j]
                        for n in range(size))
            assert_equal(value, int(i == j))


def test_powersum_to_monomial():
    f = SymFunc.powersum([1, 1]).to_monomial()
    assert_(f.coeffs == {P([2]): 1, P([1, 1]): 2})
    assert_(f.to_powersum().coeffs == {P([1, 1]): 1})


def test_symfunc_weight_mismatch():
    with pytest.raises(vlds.WeightMismatch):
        SymFunc(weight=3, coeffs={P([2]): 1})


def test_inner_product_powersums():
    c = Coupling.fixed(2)
    p11 = SymFunc.powersum([1, 1])
    assert_equal(symfunc.inner_product_psum(p11, p11, c), Fraction(1, 2))
    p2 = SymFunc.powersum([2])
    assert_equal(symfunc.inner_product_psum(p2, p11, c), 0)


def test_inner_product_weight_mismatch():
    with pytest.raises(vlds.WeightMismatch):
        symfunc.inner_product_psum(
            SymFunc.monomial([2]), SymFunc.monomial([1]), Coupling.fixed(1))


def test_gram_matrix_symmetric():
    gram = symfunc.gram_matrix(3, Coupling.fixed(Fraction(1, 2)))
    for (a, b), v in gram.items():
        assert_equal(gram[(b, a)], v)


# =============================================================================
# JACK POLYNOMIALS
# =============================================================================

class Test_jack:

    def test_two_symbolic(self):
        jack = symfunc.jack_gram_schmidt([2], Coupling.symbolic())
        assert_(jack.coefficient([2]) == 1 + 1 / A)
        assert_(jack.coefficient([1, 1]) == 2)

    def test_two_one_symbolic(self):
        jack = symfunc.jack_gram_schmidt([2, 1], Coupling.symbolic())
        assert_(jack.coefficient([2, 1]) == (1 + 2 * A) / A)
        assert_(jack.coefficient([1, 1, 1]) == 6)
        assert_(jack.coefficient([3]) == 0)

    def test_two_one_fixed(self):
        jack = symfunc.jack_gram_schmidt([2, 1], Coupling.fixed(
            Fraction(1, 2)))
        assert_(jack.coeffs == {P([2, 1]): 4, P([1, 1, 1]): 6})

    def test_at(self):
        jack = symfunc.jack_gram_schmidt([2, 1], Coupling.symbolic())
        fixed = jack.at(Fraction(1, 2))
        assert_(fixed.coeffs == {P([2, 1]): 4, P([1, 1, 1]): 6})

    def test_monic(self):
        jack = symfunc.jack_gram_schmidt([2], Coupling.fixed(1))
        assert_(jack.monic() == {P([2]): 1, P([1, 1]): 1})

    def test_empty(self):
        jack = symfunc.jack_gram_schmidt([], Coupling.fixed(3))
        assert_equal(jack.leading, 1)

    def test_zero_coupling(self):
        with pytest.raises(vlds.ZeroCoupling):
            symfunc.jack_gram_schmidt([2], Coupling.fixed(0))

    def test_orthogonal(self):
        c = Coupling.fixed(Fraction(2, 3))
        labels = list(parts.partitions_of(4))
        jacks = [symfunc.jack_gram_schmidt(k, c).to_symfunc()
                 for k in labels]
        for i in range(len(jacks)):
            for j in range(i + 1, len(jacks)):
                assert_equal(
                    symfunc.inner_product_psum(jacks[i], jacks[j], c), 0)

    @pytest.mark.slow
    @pytest.mark.parametrize("weight", range(1, 9))
    def test_norm_is_hook_product(self, weight):
        c = Coupling.symbolic()
        for k in parts.partitions_of(weight):
            norm = symfunc.jack_norm(k, c)
            assert_(norm == parts.hook_products(k, c).norm)

    def test_norm_positive(self):
        for value in (Fraction(1, 3), 1, 2, 5):
            c = Coupling.fixed(value)
            for k in parts.partitions_of(4):
                assert_(symfunc.jack_norm(k, c) > 0)

    def test_norm_fixed(self):
        assert_equal(symfunc.jack_norm([2], Coupling.fixed(1)), 4)

    def test_from_eigenvector(self):
        c = Coupling.fixed(Fraction(3, 2))
        for k in parts.partitions_of(3):
            eig = symfunc.jack_from_eigenvector(k, c, 3)
            gs = symfunc.jack_gram_schmidt(k, c)
            assert_(eig.coeffs == gs.coeffs)

    @pytest.mark.slow
    @pytest.mark.parametrize("weight", range(1, 9))
    def test_from_eigenvector_symbolic(self, weight):
        c = Coupling.symbolic()
        for k in parts.partitions_of(weight):
            eig = symfunc.jack_from_eigenvector(k, c, weight)
            gs = symfunc.jack_gram_schmidt(k, c)
            assert_(eig.coeffs == gs.coeffs)

    @pytest.mark.slow
    @pytest.mark.parametrize("weight", range(1, 7))
    def test_from_eigenvector_stable_in_n(self, weight):
        c = Coupling.symbolic()
        for k in parts.partitions_of(weight):
            eig = symfunc.jack_from_eigenvector(k, c, weight)
            wide = symfunc.jack_from_eigenvector(k, c, weight + 2)
            assert_(wide.coeffs == eig.coeffs)

    def test_from_eigenvector_fewer_particles(self):
        c = Coupling.fixed(1)
        eig = symfunc.jack_from_eigenvector([2], c, 1)
        assert_(eig.coeffs == {P([2]): 2})

    def test_from_eigenvector_n_too_small(self):
        with pytest.raises(vlds.NTooSmall):
            symfunc.jack_from_eigenvector([1, 1, 1], Coupling.fixed(1), 2)

    def test_to_laurent(self):
        jack = symfunc.jack_gram_schmidt([1, 1], Coupling.fixed(1))
        poly = jack.to_laurent(2)
        assert_equal(poly.coefficient((1, 1)), 2)
        assert_equal(len(poly.terms), 1)
        with pytest.raises(vlds.MixedScalarMode):
            symfunc.jack_gram_schmidt(
                [1, 1], Coupling.symbolic()).to_laurent(2)

    def test_json(self):
        data = symfunc.jack_gram_schmidt([2], Coupling.fixed(1)).to_json()
        assert_equal(data["coeffs"], {"(2)": "2", "(1,1)": "2"})
        assert_equal(data["normalization"], "J")


# =============================================================================
# REFERENCE FUNCTIONS AND SPECIALIZATIONS
# =============================================================================

def test_schur_function():
    s = symfunc.schur_function([2, 1], 3)
    assert_(s.coeffs == {P([2, 1]): 1, P([1, 1, 1]): 2})


def test_schur_function_default_variables():
    s = symfunc.schur_function([2, 1])
    assert_(s.coeffs == {P([2, 1]): 1})
    s = symfunc.schur_function([2, 2])
    assert_(s.coeffs == {P([2, 2]): 1})
    wide = symfunc.schur_function([2, 2], 4)
    assert_(wide.coeffs == {
        P([2, 2]): 1, P([2, 1, 1]): 1, P([1, 1, 1, 1]): 2})


def test_elementary():
    e = symfunc.elementary([1, 1])
    assert_(e.coeffs == {P([2]): 1, P([1, 1]): 2})


def test_specialize_schur():
    report = symfunc.specialize([2, 1], "schur")
    assert_(report.match)
    assert_equal(report.constant, 3)


@pytest.mark.parametrize("weight", range(1, 7))
def test_specialize_schur_all(weight):
    for k in parts.partitions_of(weight):
        hooks = parts.hook_products(k, Coupling.fixed(1)).lower
        for n_vars in (None, weight):
            report = symfunc.specialize(k, Mode.SCHUR, n_vars=n_vars)
            assert_(report.match)
            assert_equal(report.constant, hooks)


def test_specialize_zonal():
    report = symfunc.specialize([2], Mode.ZONAL)
    assert_(report.coeffs == {P([2]): Fraction(3, 2), P([1, 1]): 2})
    assert_(report.match is None)


def test_specialize_limits():
    for k in parts.partitions_of(4):
        assert_(symfunc.specialize(k, "monomial").match)
        assert_(symfunc.specialize(k, "elementary").match)


def test_specialize_json():
    data = symfunc.specialize([2], "elementary").to_json()
    assert_equal(data["mode"], "elementary")
    assert_equal(data["coeffs"], {"(2)": "1", "(1,1)": "2"})


# =============================================================================
# TORUS
# =============================================================================

def test_torus_norm_closed_form():
    assert_equal(symfunc.torus_norm([1], 1, 2), 1)
    assert_equal(symfunc.torus_norm([1], 2, 2), Fraction(2, 3))
    assert_equal(symfunc.torus_norm([2], 1, 2), 4)
    assert_equal(symfunc.torus_norm([], 3, 2), 1)


def test_torus_orthogonality_diagonal():
    report = symfunc.verify_torus_orthogonality([1], [1], 2, 2)
    assert_equal(report.lhs, Fraction(2, 3))
    assert_(report.match)
    report = symfunc.verify_torus_orthogonality([2, 1], [2, 1], 1, 2)
    assert_equal(report.lhs, 9)
    assert_(report.match)


def test_torus_orthogonality_off_diagonal():
    report = symfunc.verify_torus_orthogonality([2], [1, 1], 1, 2)
    assert_equal(report.lhs, 0)
    assert_(report.to_json()["match"])


@pytest.mark.slow
@pytest.mark.parametrize("n_particles", [2, 3])
@pytest.mark.parametrize("coupling", [1, 2])
def test_torus_grid(coupling, n_particles):
    for w in range(5):
        labels = list(parts.partitions_of(w, max_length=n_particles))
        for k, n in itertools.combinations_with_replacement(labels, 2):
            report = symfunc.verify_torus_orthogonality(
                k, n, coupling, n_particles)
            assert_(report.match)
            if k == n:
                assert_(report.lhs > 0)
            else:
                assert_equal(report.lhs, 0)


@pytest.mark.parametrize("n_particles", [2, 3])
@pytest.mark.parametrize("coupling", [1, 2])
def test_torus_empty_partition(coupling, n_particles):
    report = symfunc.verify_torus_orthogonality(
        [], [], coupling, n_particles)
    assert_equal(report.lhs, 1)
    assert_equal(report.rhs, 1)


def test_torus_non_integer():
    with pytest.raises(vlds.NonIntegerCoupling):
        symfunc.verify_torus_orthogonality([1], [1], Fraction(1, 2), 2)


def test_torus_weight_mismatch():
    with pytest.raises(vlds.WeightMismatch):
        symfunc.verify_torus_orthogonality([2], [1], 1, 2)


def test_torus_n_too_small():
    with pytest.raises(vlds.NTooSmall):
        symfunc.verify_torus_orthogonality([1, 1, 1], [2, 1], 1, 2)


# =============================================================================
# SUITE
# =============================================================================

def test_verify_weight():
    checks = symfunc.verify_weight(3, Coupling.fixed(1), n_particles=2)
    assert_(all(c.passed for c in checks))
    names = {c.name for c in checks}
    assert_equal(names, {"support", "normalization", "hook-norm",
                         "eigenvector", "orthogonality", "torus"})


def test_verify_weight_symbolic():
    checks = symfunc.verify_weight(2, Coupling.symbolic())
    assert_(all(c.passed for c in checks))
    assert_("torus" not in {c.name for c in checks})
