#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of the
#   csmpy Project.
# License: MIT

# =============================================================================
# DOCS
# =============================================================================

"""Symbolic ground truth: Laurent polynomials and the differential operators.

Everything here acts on explicit polynomials in the variables
``w_j = exp(i pi x_j / L)``, so the coefficients produced are independent
of any formula for matrix elements. The Hamiltonian splits into

- ``H0 = sum_j (w_j d/dw_j)^2``, and
- ``H1 = sum_{j<k} (w_j + w_k) / (w_j - w_k) (w_j d/dw_j - w_k d/dw_k)``,

and torus integrals reduce to constant terms.

"""

# =============================================================================
# IMPORTS
# =============================================================================

import collections
import functools
import itertools
import logging
from fractions import Fraction

import attr

from scipy.special import factorial

from sympy.utilities.iterables import multiset_permutations

from . import partitions as parts, states, validators as vlds


# =============================================================================
# CONSTANTS
# =============================================================================

logger = logging.getLogger(__name__)

MAX_PARTICLES = 8


# =============================================================================
# LAURENT POLYNOMIAL
# =============================================================================

def _clean(terms):
    return {
        tuple(e): Fraction(c) for e, c in dict(terms).items() if c != 0}


@attr.s(frozen=True, repr=False)
class LaurentPoly:
    """Sparse Laurent polynomial in N variables over the rationals.

    Parameters
    ----------
    n_vars: int
        Number of variables N.
    terms: dict
        Exponent tuple (length N, integers of any sign) -> coefficient.
        Zero coefficients are dropped.

    """

    n_vars = attr.ib()
    terms = attr.ib(converter=_clean)

    @terms.validator
    def _validate_terms(self, attribute, value):
        for e in value:
            if len(e) != self.n_vars:
                raise ValueError(
                    "LaurentPoly: exponent {} does not have {} entries".format(
                        e, self.n_vars))

    # =========================================================================
    # CONSTRUCTORS
    # =========================================================================

    @classmethod
    def zero(cls, n_vars):
        """The zero polynomial."""
        return cls(n_vars=n_vars, terms={})

    @classmethod
    def constant(cls, value, n_vars):
        """The constant ``value``."""
        return cls(n_vars=n_vars, terms={(0,) * n_vars: value})

    @classmethod
    def monomial(cls, exps, coeff=1):
        """``coeff * prod w_j^exps_j``."""
        exps = tuple(exps)
        return cls(n_vars=len(exps), terms={exps: coeff})

    @classmethod
    def variable(cls, j, n_vars, power=1):
        """``w_j^power`` (0-based ``j``)."""
        exps = [0] * n_vars
        exps[j] = power
        return cls.monomial(exps)

    # =========================================================================
    # ARITHMETIC
    # =========================================================================

    def _check_other(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly.constant(other, self.n_vars)
        if other.n_vars != self.n_vars:
            raise ValueError(
                "LaurentPoly: {} and {} variables do not mix".format(
                    self.n_vars, other.n_vars))
        return other

    def __add__(self, other):
        other = self._check_other(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(n_vars=self.n_vars, terms=terms)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-self._check_other(other))

    def __rsub__(self, other):
        return self._check_other(other) - self

    def scale(self, factor):
        """Multiply every coefficient by the rational ``factor``."""
        return LaurentPoly(
            n_vars=self.n_vars,
            terms={e: c * factor for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        other = self._check_other(other)
        terms = collections.defaultdict(Fraction)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                terms[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return LaurentPoly(n_vars=self.n_vars, terms=terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        vlds.validate_int(exponent, "Exponent")
        if exponent < 0:
            raise ValueError("LaurentPoly: negative powers are not supported")
        result = LaurentPoly.constant(1, self.n_vars)
        for _ in range(exponent):
            result = result * self
        return result

    # =========================================================================
    # QUERIES
    # =========================================================================

    @property
    def is_zero(self):
        """True for the zero polynomial."""
        return not self.terms

    def coefficient(self, exps):
        """Coefficient of the monomial with exponents ``exps``."""
        return self.terms.get(tuple(exps), Fraction(0))

    def degrees(self):
        """Set of total degrees of the terms."""
        return {sum(e) for e in self.terms}

    def conj(self):
        """Replace every ``w_j`` by ``1 / w_j`` (complex conjugation on the
        torus for rational coefficients)."""
        return LaurentPoly(
            n_vars=self.n_vars,
            terms={tuple(-x for x in e): c for e, c in self.terms.items()})

    def is_symmetric(self):
        """Invariance under every exchange of two variables."""
        for e, c in self.terms.items():
            for i in range(self.n_vars - 1):
                if e[i] == e[i + 1]:
                    continue
                swapped = e[:i] + (e[i + 1], e[i]) + e[i + 2:]
                if self.terms.get(swapped) != c:
                    return False
        return True

    def dump(self):
        """Sorted ``"coeff * w1^a w2^b"`` debug lines."""
        lines = []
        for e in sorted(self.terms, reverse=True):
            mono = " ".join(
                "w{}^{}".format(j + 1, x) for j, x in enumerate(e) if x != 0)
            lines.append("{} * {}".format(self.terms[e], mono or "1"))
        return "\n".join(lines)

    def __repr__(self):
        return "LaurentPoly(n_vars={}, {} terms)".format(
            self.n_vars, len(self.terms))


def _require_symmetric(f):
    if not f.is_symmetric():
        raise vlds.NotSymmetric(
            "LaurentPoly: the polynomial is not symmetric:\n{}".format(
                f.dump()))


# =============================================================================
# BASIS EXPANSIONS
# =============================================================================

def _guard_n(n):
    vlds.validate_n_particles(n)
    if n > MAX_PARTICLES:
        raise vlds.TooManyParticles(
            "Oracle: at most {} variables are expanded. Got {}".format(
                MAX_PARTICLES, n))


def expand_state(state):
    """Ket ``|n_1 ... n_N⟩``: sum over all N! permutations.

    Repeated quantum numbers give repeated terms, so the result is
    ``prod_i m_i(n)! * m_n``.

    """
    n = state.quantum_numbers
    _guard_n(len(n))
    terms = collections.Counter(itertools.permutations(n))
    return LaurentPoly(n_vars=len(n), terms=terms)


def expand_monomial(k, shift, n_particles):
    """Monomial symmetric function: sum over distinct permutations.

    Exponents are ``k_j + shift`` with ``k`` padded with zeros to N.

    Raises
    ------
    LengthExceedsN

    """
    k = parts.make_partition(k)
    _guard_n(n_particles)
    exps = tuple(p + shift for p in k.padded(n_particles))
    return LaurentPoly(
        n_vars=n_particles,
        terms={tuple(e): 1 for e in multiset_permutations(list(exps))})


def expand_state_monomial(state):
    """Monomial symmetric function labelled by a sector state."""
    return expand_monomial(state.shape, state.shift, state.n_particles)


# =============================================================================
# OPERATORS
# =============================================================================

def apply_h0(f):
    """Euler operator ``sum_j (w_j d/dw_j)^2`` termwise."""
    return LaurentPoly(
        n_vars=f.n_vars,
        terms={e: c * sum(x * x for x in e) for e, c in f.terms.items()})


def divide_by_difference(g, j, k):
    """Exact quotient of ``g`` by ``(w_j - w_k)``.

    ``w_j - w_k`` is homogeneous in the pair, so terms are grouped by the
    remaining exponents and by ``e_j + e_k``; each group is a univariate
    problem in ``w_j`` solved by synthetic division from the top degree.

    Raises
    ------
    InexactDivision

    """
    groups = collections.defaultdict(dict)
    for e, c in g.terms.items():
        rest = tuple(x for i, x in enumerate(e) if i not in (j, k))
        groups[(rest, e[j] + e[k])][e[j]] = c

    quotient = {}
    for (rest, d), column in groups.items():
        running = Fraction(0)
        top, bottom = max(column), min(column)
        for ej in range(top, bottom - 1, -1):
            running += column.get(ej, 0)
            if running != 0:
                # q_{ej-1} w_j^{ej-1} w_k^{d-ej}
                e = list(rest)
                lo, hi = sorted((j, k))
                vals = {j: ej - 1, k: d - ej}
                e.insert(lo, vals[lo])
                e.insert(hi, vals[hi])
                quotient[tuple(e)] = running
        if running != 0:
            raise vlds.InexactDivision(
                "Oracle: w{} - w{} does not divide the group {}".format(
                    j + 1, k + 1, column))
    return LaurentPoly(n_vars=g.n_vars, terms=quotient)


def _pair_term(f, j, k):
    # (w_j + w_k) * (w_j d_j - w_k d_k) f
    g = collections.defaultdict(Fraction)
    for e, c in f.terms.items():
        factor = c * (e[j] - e[k])
        if factor == 0:
            continue
        ej = list(e)
        ej[j] += 1
        g[tuple(ej)] += factor
        ek = list(e)
        ek[k] += 1
        g[tuple(ek)] += factor
    return divide_by_difference(LaurentPoly(n_vars=f.n_vars, terms=g), j, k)


def apply_h1(f):
    """Interaction operator applied literally, pair by pair.

    For each ``j < k`` the product ``(w_j + w_k)(w_j d_j - w_k d_k) f`` is
    divided exactly by ``(w_j - w_k)``; the pair contributions are summed in
    fixed pair order.

    Raises
    ------
    NotSymmetric
        If ``f`` is not symmetric (the division would not be exact).

    """
    _require_symmetric(f)
    result = LaurentPoly.zero(f.n_vars)
    for j, k in itertools.combinations(range(f.n_vars), 2):
        result = result + _pair_term(f, j, k)
    return result


def decompose_in_monomials(f):
    """Coefficients of ``f`` in the monomial symmetric basis.

    Returns
    -------
    dict
        SectorState -> Fraction, one entry per orbit with a nonzero
        coefficient.

    Raises
    ------
    NotSymmetric

    """
    _require_symmetric(f)
    out = {}
    for e, c in f.terms.items():
        if all(a >= b for a, b in zip(e, e[1:])):
            out[states.make_state(e)] = c
    return out


def recompose(coeffs):
    """Inverse of :func:`decompose_in_monomials`."""
    coeffs = dict(coeffs)
    if not coeffs:
        raise ValueError("Recompose: need at least one state to fix N")
    n = next(iter(coeffs)).n_particles
    result = LaurentPoly.zero(n)
    for s, c in coeffs.items():
        result = result + expand_state_monomial(s).scale(c)
    return result


# =============================================================================
# TORUS INTEGRALS
# =============================================================================

def constant_term(f):
    """Coefficient of the all-zeros exponent: the normalised torus integral
    of ``f``."""
    return f.coefficient((0,) * f.n_vars)


@functools.lru_cache(maxsize=32)
def _vandermonde_weight(n_vars, coupling):
    weight = LaurentPoly.constant(1, n_vars)
    for i, j in itertools.combinations(range(n_vars), 2):
        diff = LaurentPoly.variable(i, n_vars) - LaurentPoly.variable(
            j, n_vars)
        weight = weight * (diff * diff.conj()) ** coupling
    return weight


def dyson_normalisation(coupling, n_vars):
    """``Gamma(1+A)^N / Gamma(1+AN)`` for a positive integer A."""
    a = vlds.validate_positive_integer_coupling(coupling)
    num = int(factorial(a, exact=True)) ** n_vars
    return Fraction(num, int(factorial(a * n_vars, exact=True)))


def torus_inner_product(f, g, coupling, n_vars):
    """Normalised torus pairing of two symmetric Laurent polynomials.

    ``C_N^2 L'^N CT(conj(f) g prod_{i<j} |w_i - w_j|^{2A})`` with
    ``C_N^2 L'^N = Gamma(1+A)^N / Gamma(1+AN)``, so the length scale
    drops out and ``<1, 1> = 1``.

    Parameters
    ----------
    f, g: LaurentPoly
        Symmetric polynomials in ``n_vars`` variables.
    coupling: int or Fraction
        A, which must be a positive integer.
    n_vars: int
        N.

    Raises
    ------
    NonIntegerCoupling, NotSymmetric

    """
    a = vlds.validate_positive_integer_coupling(coupling)
    _guard_n(n_vars)
    for h in (f, g):
        if h.n_vars != n_vars:
            raise ValueError(
                "Torus: polynomial in {} variables, expected {}".format(
                    h.n_vars, n_vars))
        _require_symmetric(h)
    prod = f.conj() * g
    weight = _vandermonde_weight(n_vars, a)
    ct = Fraction(0)
    for e, c in prod.terms.items():
        w = weight.terms.get(tuple(-x for x in e))
        if w is not None:
            ct += c * w
    return dyson_normalisation(a, n_vars) * ct
