#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of the
#   csmpy Project.
# License: MIT

# =============================================================================
# DOCS
# =============================================================================

"""Symmetric functions, the deformed scalar product and Jack polynomials.

Functions live in the ring of symmetric functions of a given weight, with
no number of variables attached. Coefficients are kept either in the
monomial basis ``m_k`` or in the power-sum basis ``p_k``. The scalar
product at coupling A is

    <p_k, p_n> = delta_{k,n} z_k A^{-l(k)}

and the Jack polynomials ``J_k`` are the dominance-triangular basis
orthogonal for it, normalised so that the coefficient of ``m_(1^p)`` is
``p!``.

"""

# =============================================================================
# IMPORTS
# =============================================================================

import enum
import functools
import itertools
import logging
from fractions import Fraction

import attr

from scipy.special import factorial

import sympy
from sympy.combinatorics import Permutation

from . import (
    hamiltonian as ham, oracle, partitions as parts, scalars,
    spectrum, states as sts, validators as vlds)


# =============================================================================
# CONSTANTS
# =============================================================================

logger = logging.getLogger(__name__)


class Basis(enum.Enum):
    """Basis a :class:`SymFunc` is expressed in."""

    MONOMIAL = "monomial"
    POWERSUM = "powersum"


class Mode(enum.Enum):
    """Special couplings and limits handled by :func:`specialize`."""

    SCHUR = "schur"
    ZONAL = "zonal"
    ZONAL_HALF = "zonal-half"
    MONOMIAL = "monomial"
    ELEMENTARY = "elementary"


SPECIAL_COUPLINGS = {
    Mode.SCHUR: Fraction(1),
    Mode.ZONAL: Fraction(2),
    Mode.ZONAL_HALF: Fraction(1, 2)}

LIMITS = {Mode.MONOMIAL: 0, Mode.ELEMENTARY: "inf"}


# =============================================================================
# BASIS CHANGE
# =============================================================================

def _psum_in_monomials(lam, mu):
    """Coefficient of ``m_mu`` in ``p_lam``.

    Number of ways to send every part of ``lam`` to a position of ``mu``
    so that the parts landing on a position add up to it.

    """
    @functools.lru_cache(maxsize=None)
    def _count(i, remaining):
        if i == len(lam):
            return int(not any(remaining))
        total = 0
        for j, r in enumerate(remaining):
            if r >= lam[i]:
                total += _count(
                    i + 1, remaining[:j] + (r - lam[i],) + remaining[j + 1:])
        return total

    return _count(0, tuple(mu))


@attr.s(frozen=True)
class Transition:
    """Change of basis between monomials and power sums at one weight.

    Attributes
    ----------
    weight: int
    partitions: tuple of Partition
        Dominant first.
    psum_to_mono: tuple of tuple of Fraction
        Row ``i`` holds the monomial coefficients of ``p_(partitions[i])``.
    mono_to_psum: tuple of tuple of Fraction
        Row ``i`` holds the power-sum coefficients of ``m_(partitions[i])``.

    """

    weight = attr.ib()
    partitions = attr.ib(converter=tuple)
    psum_to_mono = attr.ib()
    mono_to_psum = attr.ib()

    def index(self, k):
        """Position of the partition ``k``."""
        return self.partitions.index(parts.make_partition(k))

    def __len__(self):
        return len(self.partitions)


@functools.lru_cache(maxsize=None)
def monomial_to_powersum(weight):
    """Exact transition matrices between ``m_k`` and ``p_k``.

    Parameters
    ----------
    weight: int
        Non-negative weight.

    Returns
    -------
    Transition

    """
    vlds.validate_int(weight, "Weight")
    if weight < 0:
        raise ValueError("Weight: must be non negative. Got {}".format(weight))
    plist = tuple(parts.partitions_of(weight))
    forward = [
        [_psum_in_monomials(lam.parts, mu.parts) for mu in plist]
        for lam in plist]
    inverse = sympy.Matrix(forward).inv()
    backward = tuple(
        tuple(Fraction(str(inverse[i, j])) for j in range(len(plist)))
        for i in range(len(plist)))
    return Transition(
        weight=weight, partitions=plist,
        psum_to_mono=tuple(tuple(Fraction(x) for x in row) for row in forward),
        mono_to_psum=backward)


# =============================================================================
# SYMMETRIC FUNCTIONS
# =============================================================================

def _check_weight(coeffs, weight):
    for k in coeffs:
        if k.weight != weight:
            raise vlds.WeightMismatch(
                "SymFunc: {} does not have weight {}".format(k, weight))


@attr.s(frozen=True)
class SymFunc:
    """Homogeneous symmetric function.

    Parameters
    ----------
    weight: int
    coeffs: dict
        Partition -> scalar, zeros dropped.
    basis: Basis

    """

    weight = attr.ib()
    coeffs = attr.ib(converter=lambda c: {
        parts.make_partition(k): v for k, v in dict(c).items()
        if not scalars.is_zero(v)})
    basis = attr.ib(default=Basis.MONOMIAL)

    @coeffs.validator
    def _validate_coeffs(self, attribute, value):
        _check_weight(value, self.weight)

    @classmethod
    def monomial(cls, k):
        """``m_k``."""
        k = parts.make_partition(k)
        return cls(weight=k.weight, coeffs={k: Fraction(1)})

    @classmethod
    def powersum(cls, k):
        """``p_k``."""
        k = parts.make_partition(k)
        return cls(weight=k.weight, coeffs={k: Fraction(1)},
                   basis=Basis.POWERSUM)

    def _convert(self, rows, target):
        tr = monomial_to_powersum(self.weight)
        out = {}
        for k, c in self.coeffs.items():
            row = rows(tr)[tr.index(k)]
            for j, x in enumerate(row):
                if x != 0:
                    n = tr.partitions[j]
                    out[n] = out.get(n, 0) + c * x
        return SymFunc(weight=self.weight, coeffs=out, basis=target)

    def to_powersum(self):
        """The same function in the power-sum basis."""
        if self.basis is Basis.POWERSUM:
            return self
        return self._convert(lambda tr: tr.mono_to_psum, Basis.POWERSUM)

    def to_monomial(self):
        """The same function in the monomial basis."""
        if self.basis is Basis.MONOMIAL:
            return self
        return self._convert(lambda tr: tr.psum_to_mono, Basis.MONOMIAL)

    def to_json(self):
        """``{"weight", "basis", "coeffs"}`` with exact strings."""
        return {
            "weight": self.weight,
            "basis": self.basis.value,
            "coeffs": {
                str(k): scalars.scalar_to_string(v)
                for k, v in sorted(self.coeffs.items(), reverse=True,
                                   key=lambda kv: kv[0].parts)}}


def inner_product_psum(f, g, coupling):
    """Deformed scalar product ``<f, g>`` at coupling A.

    ``sum_k f_k g_k z_k A^{-l(k)}`` over the power-sum coefficients.

    Raises
    ------
    WeightMismatch, ZeroCoupling

    """
    if f.weight != g.weight:
        raise vlds.WeightMismatch(
            "Scalar product: weights {} and {} differ".format(
                f.weight, g.weight))
    inv = coupling.inverse()
    fp, gp = f.to_powersum().coeffs, g.to_powersum().coeffs
    total = coupling.zero()
    for k, c in fp.items():
        if k in gp:
            total = total + coupling.coerce(parts.z_factor(k)) * c * gp[k] * \
                inv ** k.length
    return total


@functools.lru_cache(maxsize=64)
def gram_matrix(weight, coupling):
    """``<m_i, m_j>`` for every pair of partitions of ``weight``.

    Returns
    -------
    dict
        ``(Partition, Partition) -> scalar``.

    """
    tr = monomial_to_powersum(weight)
    inv = coupling.inverse()
    size = len(tr)
    pairing = [
        coupling.coerce(parts.z_factor(k)) * inv ** k.length
        for k in tr.partitions]
    out = {}
    for i, j in itertools.combinations_with_replacement(range(size), 2):
        value = coupling.zero()
        for n in range(size):
            a, b = tr.mono_to_psum[i][n], tr.mono_to_psum[j][n]
            if a != 0 and b != 0:
                value = value + pairing[n] * (a * b)
        ki, kj = tr.partitions[i], tr.partitions[j]
        out[(ki, kj)] = out[(kj, ki)] = value
    return out


# =============================================================================
# JACK POLYNOMIALS
# =============================================================================

@attr.s(frozen=True)
class JackPoly:
    """Jack polynomial in the monomial basis, J normalisation.

    Parameters
    ----------
    label: Partition
    coeffs: dict
        Partition -> scalar, dominant first.
    coupling: Coupling

    """

    label = attr.ib(converter=parts.make_partition)
    coeffs = attr.ib(converter=lambda c: dict(sorted(
        ((parts.make_partition(k), v) for k, v in dict(c).items()
         if not scalars.is_zero(v)),
        key=lambda kv: kv[0].parts, reverse=True)))
    coupling = attr.ib()
    normalization = attr.ib(default="J")

    def coefficient(self, k):
        """Coefficient of ``m_k``."""
        return self.coeffs.get(
            parts.make_partition(k), self.coupling.zero())

    @property
    def leading(self):
        """Coefficient of ``m_label``."""
        return self.coefficient(self.label)

    def to_symfunc(self):
        """As a :class:`SymFunc` in the monomial basis."""
        return SymFunc(weight=self.label.weight, coeffs=self.coeffs)

    def monic(self):
        """Coefficients divided by the leading one."""
        lead = self.leading
        return {k: v / lead for k, v in self.coeffs.items()}

    def at(self, value):
        """Evaluate symbolic coefficients at the rational A = ``value``."""
        fixed = scalars.Coupling.fixed(value)
        return JackPoly(
            label=self.label, coupling=fixed,
            coeffs={k: scalars.evaluate(v, fixed.value)
                    for k, v in self.coeffs.items()})

    def to_laurent(self, n_vars):
        """Realisation in ``n_vars`` variables (longer partitions vanish).

        Needs a fixed rational coupling.

        """
        if self.coupling.is_symbolic:
            raise vlds.MixedScalarMode(
                "JackPoly: evaluate the coupling before expanding")
        result = oracle.LaurentPoly.zero(n_vars)
        for k, c in self.coeffs.items():
            if k.length <= n_vars:
                result = result + oracle.expand_monomial(k, 0, n_vars).scale(c)
        return result

    def to_json(self):
        """``{"label", "coupling", "normalization", "coeffs"}``."""
        return {
            "label": self.label.to_json(),
            "coupling": str(self.coupling),
            "normalization": self.normalization,
            "coeffs": {
                str(k): scalars.scalar_to_string(v)
                for k, v in self.coeffs.items()}}


def _singular(coupling, k, what):
    return vlds.SingularGram(
        "Gram-Schmidt: {} of {} vanishes at A={}".format(
            what, k, coupling.value))


@functools.lru_cache(maxsize=64)
def _monic_family(weight, coupling):
    """Monic Jack polynomials and their norms, lower partitions first."""
    gram = gram_matrix(weight, coupling)
    ascending = list(reversed(monomial_to_powersum(weight).partitions))
    done = []
    for k in ascending:
        vec = {k: coupling.one()}
        for n, pvec, norm in done:
            proj = coupling.zero()
            for mu, c in pvec.items():
                proj = proj + c * gram[(k, mu)]
            if scalars.is_zero(proj):
                continue
            if scalars.is_zero(norm):
                raise _singular(coupling, n, "the norm")
            factor = proj / norm
            for mu, c in pvec.items():
                vec[mu] = vec.get(mu, coupling.zero()) - factor * c
        vec = {mu: c for mu, c in vec.items() if not scalars.is_zero(c)}
        norm = coupling.zero()
        for a, ca in vec.items():
            for b, cb in vec.items():
                norm = norm + ca * cb * gram[(a, b)]
        done.append((k, vec, norm))
        logger.debug("Monic Jack %s: %d terms", k, len(vec))
    return {k: (vec, norm) for k, vec, norm in done}


def _j_scale(label, coupling):
    """Factor turning the monic polynomial into the J normalisation."""
    if label.is_empty:
        return coupling.one()
    return parts.hook_products(label, coupling).lower


def jack_gram_schmidt(label, coupling):
    """Jack polynomial ``J_label`` by Gram-Schmidt.

    Partitions of the weight are orthogonalised in ascending order of the
    total order extending dominance, so ``J_label`` is ``m_label`` minus
    its projections on every lower Jack polynomial, rescaled so that the
    coefficient of ``m_(1^p)`` is ``p!``.

    Parameters
    ----------
    label: Partition
    coupling: Coupling
        Nonzero.

    Returns
    -------
    JackPoly

    Raises
    ------
    SingularGram
        A norm or the normalisation vanishes at a fixed coupling.
    ZeroCoupling

    """
    label = parts.make_partition(label)
    coupling.inverse()
    if label.is_empty:
        return JackPoly(
            label=label, coeffs={label: coupling.one()}, coupling=coupling)
    vec, _ = _monic_family(label.weight, coupling)[label]
    column = parts.Partition((1,) * label.weight)
    bottom = vec.get(column, coupling.zero())
    if scalars.is_zero(bottom):
        raise _singular(coupling, label, "the m_(1^p) coefficient")
    scale = coupling.coerce(
        int(factorial(label.weight, exact=True))) / bottom
    return JackPoly(
        label=label, coupling=coupling,
        coeffs={k: c * scale for k, c in vec.items()})


def jack_from_eigenvector(label, coupling, n_particles):
    """Jack polynomial from the Hamiltonian eigenvector of ``label``.

    The eigenvector of the sub-family of ``label`` with N particles has
    leading coefficient 1; it is multiplied by the lower hook product
    ``prod(l(s) + 1 + a(s)/A)`` to reach the J normalisation.

    Raises
    ------
    NTooSmall
        If N is smaller than the length of ``label``.

    """
    label = parts.make_partition(label)
    vlds.validate_n_particles(n_particles)
    if label.length > n_particles:
        raise vlds.NTooSmall(
            "Jack: {} needs at least {} particles. Got {}".format(
                label, label.length, n_particles))
    root = sts.state_from_partition(label, n_particles)
    matrix = ham.h_matrix(sts.sector_of(root), coupling)
    pair = spectrum.eigenvector(matrix, root)
    scale = _j_scale(label, coupling)
    return JackPoly(
        label=label, coupling=coupling,
        coeffs={s.partition(): v * scale for s, v in pair.vector.items()})


def jack_norm(label, coupling):
    """``<J_label, J_label>`` at coupling A."""
    jack = jack_gram_schmidt(label, coupling)
    if jack.label.is_empty:
        return coupling.one()
    f = jack.to_symfunc()
    return inner_product_psum(f, f, coupling)


# =============================================================================
# REFERENCE FUNCTIONS
# =============================================================================

def _alternant(exps):
    n = len(exps)
    terms = {}
    for perm in itertools.permutations(range(n)):
        e = [0] * n
        for i, p in enumerate(perm):
            e[p] = exps[i]
        terms[tuple(e)] = Permutation(list(perm)).signature()
    return oracle.LaurentPoly(n_vars=n, terms=terms)


def schur_function(label, n_vars=None):
    """Schur function ``s_label`` by the ratio of alternants.

    ``a_(label + delta) / a_delta`` in ``n_vars`` variables, divided
    exactly by each factor of the Vandermonde product and decomposed in
    monomials. The default is the length of ``label``; monomials with more
    parts than ``n_vars`` vanish, the others do not depend on ``n_vars``.

    Returns
    -------
    SymFunc

    """
    label = parts.make_partition(label)
    n_vars = max(label.length, 1) if n_vars is None else n_vars
    padded = label.padded(n_vars)
    poly = _alternant([p + n_vars - 1 - i for i, p in enumerate(padded)])
    for i, j in itertools.combinations(range(n_vars), 2):
        poly = oracle.divide_by_difference(poly, i, j)
    coeffs = {
        s.partition(): c
        for s, c in oracle.decompose_in_monomials(poly).items()}
    return SymFunc(weight=label.weight, coeffs=coeffs)


def elementary(label):
    """``e_label`` in the monomial basis."""
    label = parts.make_partition(label)
    n_vars = max(label.weight, 1)
    poly = oracle.LaurentPoly.constant(1, n_vars)
    for r in label:
        poly = poly * oracle.expand_monomial((1,) * r, 0, n_vars)
    coeffs = {
        s.partition(): c
        for s, c in oracle.decompose_in_monomials(poly).items()}
    return SymFunc(weight=label.weight, coeffs=coeffs)


@attr.s(frozen=True)
class SpecializationReport:
    """A Jack polynomial at a special coupling and its reference."""

    label = attr.ib()
    mode = attr.ib()
    coeffs = attr.ib()
    reference = attr.ib(default=None)
    constant = attr.ib(default=None)
    match = attr.ib(default=None)

    def to_json(self):
        """Exact strings."""
        def _dump(c):
            return None if c is None else {
                str(k): "diverges" if v is None else str(v)
                for k, v in c.items()}

        return {
            "label": self.label.to_json(),
            "mode": self.mode.value,
            "coeffs": _dump(self.coeffs),
            "reference": _dump(self.reference),
            "constant": None if self.constant is None else str(
                self.constant),
            "match": self.match}


def _proportional(coeffs, reference, label, max_length):
    ratio = coeffs.get(label, Fraction(0)) / reference[label]
    keys = {k for k in set(coeffs) | set(reference) if k.length <= max_length}
    same = all(
        coeffs.get(k, Fraction(0)) == ratio * reference.get(k, Fraction(0))
        for k in keys)
    return ratio, same


def specialize(label, mode, n_vars=None):
    """Jack polynomial at a special coupling or in a limit.

    Modes
    -----
    schur
        A = 1, compared with :func:`schur_function` in ``n_vars``
        variables (default: the length of ``label``) on the monomials
        with at most ``n_vars`` parts; the proportionality constant is
        reported.
    zonal, zonal-half
        A = 2 and A = 1/2, coefficients only.
    monomial, elementary
        Limits A -> 0 and A -> infinity of the monic polynomial, compared
        with ``m_label`` and ``e_label'``.

    Returns
    -------
    SpecializationReport

    """
    label = parts.make_partition(label)
    mode = Mode(mode)
    if mode in SPECIAL_COUPLINGS:
        jack = jack_gram_schmidt(
            label, scalars.Coupling.fixed(SPECIAL_COUPLINGS[mode]))
        if mode is not Mode.SCHUR:
            return SpecializationReport(
                label=label, mode=mode, coeffs=jack.coeffs)
        n_vars = max(label.length, 1) if n_vars is None else n_vars
        reference = schur_function(label, n_vars).coeffs
        constant, same = _proportional(
            jack.coeffs, reference, label, n_vars)
        return SpecializationReport(
            label=label, mode=mode, coeffs=jack.coeffs, reference=reference,
            constant=constant, match=same)

    jack = jack_gram_schmidt(label, scalars.Coupling.symbolic())
    coeffs = {k: v.limit(LIMITS[mode]) for k, v in jack.monic().items()}
    if mode is Mode.MONOMIAL:
        reference = {label: Fraction(1)}
    else:
        reference = elementary(label.conjugate()).coeffs
    keys = set(coeffs) | set(reference)
    match = all(
        coeffs.get(k, Fraction(0)) == reference.get(k, Fraction(0))
        for k in keys)
    return SpecializationReport(
        label=label, mode=mode, coeffs=coeffs, reference=reference,
        constant=Fraction(1), match=match)


# =============================================================================
# TORUS ORTHOGONALITY
# =============================================================================

@attr.s(frozen=True)
class TorusReport:
    """Both sides of the torus pairing of two Jack polynomials."""

    k = attr.ib()
    n = attr.ib()
    coupling = attr.ib()
    n_particles = attr.ib()
    lhs = attr.ib()
    rhs = attr.ib()

    @property
    def difference(self):
        """``lhs - rhs``."""
        return self.lhs - self.rhs

    @property
    def match(self):
        """True when both sides agree exactly."""
        return self.difference == 0

    def to_json(self):
        """Exact strings."""
        return {
            "k": self.k.to_json(), "n": self.n.to_json(),
            "A": str(self.coupling), "N": self.n_particles,
            "lhs": str(self.lhs), "rhs": str(self.rhs),
            "difference": str(self.difference), "match": self.match}


def torus_norm(k, coupling, n_particles):
    """Closed form of ``<J_k | J_k>`` on the torus with N variables.

    ``j_k prod_s (N + a'(s)/A - l'(s)) / (N + (a'(s)+1)/A - (l'(s)+1))``
    with the normalisation that gives 1 for the empty partition.

    """
    k = parts.make_partition(k)
    fixed = scalars.Coupling.fixed(coupling)
    if k.is_empty:
        return Fraction(1)
    inv = fixed.inverse()
    value = parts.hook_products(k, fixed).norm
    for i, j in parts.cells(k):
        s = parts.cell_stats(k, i, j)
        value *= (n_particles + s.arm_colength * inv - s.leg_colength) / (
            n_particles + (s.arm_colength + 1) * inv - (s.leg_colength + 1))
    return value


def verify_torus_orthogonality(k, n, coupling, n_particles):
    """Compare the constant-term pairing of ``J_k`` and ``J_n`` with the
    closed form.

    Parameters
    ----------
    k, n: Partition
        Same weight.
    coupling: int or Fraction
        Positive integer A.
    n_particles: int
        At least the length of both labels.

    Returns
    -------
    TorusReport

    Raises
    ------
    NonIntegerCoupling, WeightMismatch, NTooSmall

    """
    k, n = parts.make_partition(k), parts.make_partition(n)
    a = vlds.validate_positive_integer_coupling(coupling)
    vlds.validate_n_particles(n_particles)
    if k.weight != n.weight:
        raise vlds.WeightMismatch(
            "Torus: {} and {} have different weights".format(k, n))
    if max(k.length, n.length) > n_particles:
        raise vlds.NTooSmall(
            "Torus: {} variables are too few for {} and {}".format(
                n_particles, k, n))
    fixed = scalars.Coupling.fixed(a)
    fk = jack_gram_schmidt(k, fixed).to_laurent(n_particles)
    fn = jack_gram_schmidt(n, fixed).to_laurent(n_particles)
    lhs = oracle.torus_inner_product(fk, fn, a, n_particles)
    rhs = torus_norm(k, a, n_particles) if k == n else Fraction(0)
    report = TorusReport(
        k=k, n=n, coupling=a, n_particles=n_particles, lhs=lhs, rhs=rhs)
    if not report.match:
        logger.warning(
            "Torus pairing of %s and %s at A=%s, N=%d: %s != %s",
            k, n, a, n_particles, lhs, rhs)
    return report


# =============================================================================
# VERIFICATION SUITE
# =============================================================================

@attr.s(frozen=True)
class Check:
    """Outcome of one verification."""

    name = attr.ib()
    subject = attr.ib()
    passed = attr.ib()
    detail = attr.ib(default="")

    def to_json(self):
        """Plain dict."""
        return attr.asdict(self)


def verify_weight(weight, coupling, n_particles=None):
    """Run the Jack checks for every partition of ``weight``.

    Orthogonality, dominance support, the ``m_(1^p)`` normalisation, the
    hook-norm product and agreement with the Hamiltonian eigenvector
    (N = weight). With ``n_particles`` and an integer coupling the torus
    pairings of every pair are checked too.

    Returns
    -------
    list of Check

    """
    checks = []
    labels = list(parts.partitions_of(weight))
    jacks = {k: jack_gram_schmidt(k, coupling) for k in labels}
    for k in labels:
        jk = jacks[k]
        support = all(parts.dominates(k, mu) for mu in jk.coeffs)
        checks.append(Check("support", str(k), support))
        bottom = jk.coefficient((1,) * weight) if weight else jk.leading
        checks.append(Check(
            "normalization", str(k),
            bottom == coupling.coerce(int(factorial(weight, exact=True))),
            scalars.scalar_to_string(bottom)))
        norm = jack_norm(k, coupling)
        hook = parts.hook_products(k, coupling).norm if weight else \
            coupling.one()
        checks.append(Check(
            "hook-norm", str(k), norm == hook,
            "{} vs {}".format(scalars.scalar_to_string(norm),
                              scalars.scalar_to_string(hook))))
        eig = jack_from_eigenvector(k, coupling, max(weight, 1))
        checks.append(Check(
            "eigenvector", str(k), eig.coeffs == jk.coeffs))
    for k, n in itertools.combinations(labels, 2):
        value = inner_product_psum(
            jacks[k].to_symfunc(), jacks[n].to_symfunc(), coupling)
        checks.append(Check(
            "orthogonality", "{} {}".format(k, n), scalars.is_zero(value),
            scalars.scalar_to_string(value)))
    if n_particles is not None:
        for k, n in itertools.combinations_with_replacement(labels, 2):
            if max(k.length, n.length) > n_particles:
                continue
            report = verify_torus_orthogonality(
                k, n, coupling.value, n_particles)
            checks.append(Check(
                "torus", "{} {}".format(k, n), report.match,
                "{} vs {}".format(report.lhs, report.rhs)))
    failed = [c for c in checks if not c.passed]
    logger.info(
        "Verification of weight %d at A=%s: %d checks, %d failed",
        weight, coupling, len(checks), len(failed))
    return checks
