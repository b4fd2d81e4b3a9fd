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

import numpy as np

from numpy.testing import assert_, assert_equal

from csmpy import (
    hamiltonian as ham, oracle, partitions as parts, states as sts,
    validators as vlds)
from csmpy.oracle import LaurentPoly


# =============================================================================
# LAURENT POLYNOMIALS
# =============================================================================

class Test_laurent_poly:

    def setup_method(self, *args):
        self.w1 = LaurentPoly.variable(0, 2)
        self.w2 = LaurentPoly.variable(1, 2)

    def test_zero_terms_dropped(self):
        p = LaurentPoly(n_vars=2, terms={(1, 0): 0, (0, 1): 2})
        assert_equal(p.terms, {(0, 1): Fraction(2)})
        assert_((self.w1 - self.w1).is_zero)

    def test_wrong_exponent_length(self):
        with pytest.raises(ValueError):
            LaurentPoly(n_vars=2, terms={(1, 0, 0): 1})

    def test_mixed_sizes(self):
        with pytest.raises(ValueError):
            self.w1 + LaurentPoly.variable(0, 3)

    def test_arithmetic(self):
        p = (self.w1 + self.w2) ** 2
        assert_equal(p.coefficient((1, 1)), 2)
        assert_equal(p.coefficient((2, 0)), 1)
        assert_equal(p.degrees(), {2})
        assert_equal((3 * self.w1).coefficient((1, 0)), 3)
        assert_equal((1 - self.w1).coefficient((0, 0)), 1)

    def test_negative_power(self):
        with pytest.raises(ValueError):
            self.w1 ** -1

    def test_conj(self):
        p = (self.w1 * self.w1 + 2).conj()
        assert_equal(p.coefficient((-2, 0)), 1)
        assert_equal(p.coefficient((0, 0)), 2)

    def test_symmetric(self):
        assert_((self.w1 + self.w2).is_symmetric())
        assert_(not (self.w1 + 2 * self.w2).is_symmetric())

    def test_dump(self):
        assert_equal((2 * self.w1 + 1).dump(), "2 * w1^1\n1 * 1")


# =============================================================================
# EXPANSIONS
# =============================================================================

def test_expand_state_counts_repeats():
    ket = oracle.expand_state(sts.make_state((1, 1, 0)))
    assert_equal(ket.coefficient((1, 1, 0)), 2)
    assert_equal(ket.coefficient((0, 1, 1)), 2)
    assert_equal(len(ket.terms), 3)


def test_expand_monomial():
    m = oracle.expand_monomial([2, 1], 0, 3)
    assert_equal(len(m.terms), 6)
    assert_(all(c == 1 for c in m.terms.values()))
    shifted = oracle.expand_monomial([1], -1, 2)
    assert_equal(set(shifted.terms), {(0, -1), (-1, 0)})


def test_expand_state_monomial():
    s = sts.make_state((1, -1))
    m = oracle.expand_state_monomial(s)
    assert_equal(set(m.terms), {(1, -1), (-1, 1)})


def test_expand_too_many_particles():
    with pytest.raises(vlds.TooManyParticles):
        oracle.expand_monomial([1], 0, oracle.MAX_PARTICLES + 1)


def test_expand_length_exceeds():
    with pytest.raises(vlds.LengthExceedsN):
        oracle.expand_monomial([1, 1, 1], 0, 2)


# =============================================================================
# OPERATORS
# =============================================================================

def test_apply_h0():
    m = oracle.expand_monomial([2, 1], 0, 2)
    h0 = oracle.decompose_in_monomials(oracle.apply_h0(m))
    assert_equal(h0, {sts.make_state((2, 1)): 5})


def test_divide_by_difference():
    w1, w2 = LaurentPoly.variable(0, 2), LaurentPoly.variable(1, 2)
    q = oracle.divide_by_difference(w1 ** 3 - w2 ** 3, 0, 1)
    assert_equal(q, w1 ** 2 + w1 * w2 + w2 ** 2)


def test_divide_by_difference_inexact():
    w1 = LaurentPoly.variable(0, 2)
    with pytest.raises(vlds.InexactDivision):
        oracle.divide_by_difference(w1 ** 2, 0, 1)


def test_apply_h1_two_particles():
    m = oracle.expand_monomial([2], 0, 2)
    h1 = oracle.decompose_in_monomials(oracle.apply_h1(m))
    assert_equal(h1, {sts.make_state((2, 0)): 2, sts.make_state((1, 1)): 4})


def test_apply_h1_three_units():
    m = oracle.expand_monomial([3], 0, 2)
    h1 = oracle.decompose_in_monomials(oracle.apply_h1(m))
    assert_equal(h1, {sts.make_state((3, 0)): 3, sts.make_state((2, 1)): 6})


def test_apply_h1_shift_invariant():
    plain = oracle.decompose_in_monomials(
        oracle.apply_h1(oracle.expand_monomial([2], 0, 2)))
    shifted = oracle.decompose_in_monomials(
        oracle.apply_h1(oracle.expand_monomial([2], -1, 2)))
    assert_equal(
        {s.shape: c for s, c in plain.items()},
        {s.shape: c for s, c in shifted.items()})


def test_apply_h1_not_symmetric():
    with pytest.raises(vlds.NotSymmetric):
        oracle.apply_h1(LaurentPoly.variable(0, 2))


def test_apply_h1_equal_parts():
    m = oracle.expand_monomial([1, 1], 0, 2)
    assert_(oracle.apply_h1(m).is_zero)


@pytest.mark.parametrize("n_vars", [1, 2, 3, 4])
def test_operators_preserve_symmetry_and_degree(n_vars):
    for w in range(9):
        for k in parts.partitions_of(w, max_length=n_vars):
            m = oracle.expand_monomial(k, 0, n_vars)
            for h in (oracle.apply_h0(m), oracle.apply_h1(m)):
                assert_(h.is_symmetric())
                assert_(h.is_zero or h.degrees() == {w})


@pytest.mark.parametrize("n_vars", [1, 2, 3, 4])
def test_apply_h1_diagonal_is_gap_sum(n_vars):
    for w in range(9):
        for k in parts.partitions_of(w, max_length=n_vars):
            state = sts.state_from_partition(k, n_vars)
            h1 = oracle.decompose_in_monomials(
                oracle.apply_h1(oracle.expand_state_monomial(state)))
            gaps = sum(
                a - b for a, b in itertools.combinations(
                    state.quantum_numbers, 2))
            assert_equal(h1.get(state, Fraction(0)), gaps)
            assert_equal(ham.gap_sum(state), gaps)


def test_decompose_recompose():
    coeffs = {sts.make_state((2, 1, 0)): Fraction(3, 2),
              sts.make_state((1, 1, 1)): Fraction(-1)}
    assert_equal(oracle.decompose_in_monomials(oracle.recompose(coeffs)),
                 coeffs)


def test_recompose_empty():
    with pytest.raises(ValueError):
        oracle.recompose({})


# =============================================================================
# TORUS
# =============================================================================

def test_constant_term():
    w1 = LaurentPoly.variable(0, 2)
    p = w1 * w1.conj() + w1 + 3
    assert_equal(oracle.constant_term(p), 4)


def test_dyson_normalisation():
    assert_equal(oracle.dyson_normalisation(1, 2), Fraction(1, 2))
    assert_equal(oracle.dyson_normalisation(2, 2), Fraction(1, 6))
    with pytest.raises(vlds.NonIntegerCoupling):
        oracle.dyson_normalisation(Fraction(1, 2), 2)


def test_torus_unit():
    one = LaurentPoly.constant(1, 3)
    assert_equal(oracle.torus_inner_product(one, one, 2, 3), 1)


def test_torus_m1():
    m1 = oracle.expand_monomial([1], 0, 2)
    assert_equal(oracle.torus_inner_product(m1, m1, 1, 2), 1)
    assert_equal(oracle.torus_inner_product(m1, m1, 2, 2), Fraction(2, 3))


def _weight(n_vars, coupling):
    weight = LaurentPoly.constant(1, n_vars)
    for i, j in itertools.combinations(range(n_vars), 2):
        diff = LaurentPoly.variable(i, n_vars) - LaurentPoly.variable(
            j, n_vars)
        weight = weight * (diff * diff.conj()) ** coupling
    return weight


@pytest.mark.parametrize("n_vars", [2, 3])
@pytest.mark.parametrize("coupling", [0, 1, 2])
def test_norm_positivity(n_vars, coupling):
    random = np.random.RandomState(42 + 10 * n_vars + coupling)
    labels = [
        k for w in range(4)
        for k in parts.partitions_of(w, max_length=n_vars)]
    weight = _weight(n_vars, coupling)
    for _ in range(5):
        coeffs = random.randint(-3, 4, size=len(labels))
        if not coeffs.any():
            continue
        f = LaurentPoly.zero(n_vars)
        for k, c in zip(labels, coeffs):
            f = f + oracle.expand_monomial(k, 0, n_vars).scale(
                Fraction(int(c), 2))
        assert_(f.is_symmetric())
        assert_(oracle.constant_term(f.conj() * f * weight) > 0)
        if coupling:
            assert_(oracle.torus_inner_product(f, f, coupling, n_vars) > 0)
