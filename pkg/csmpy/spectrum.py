#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of the
#   csmpy Project.
# License: MIT

# =============================================================================
# DOCS
# =============================================================================

"""Eigenvalues, eigenvectors, pseudo-momenta and the gauge prefactor."""

# =============================================================================
# IMPORTS
# =============================================================================

import itertools
import logging
import numbers
from fractions import Fraction

import attr

import numpy as np

from . import hamiltonian as ham, scalars, states as sts, validators as vlds


# =============================================================================
# CONSTANTS
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# EIGENPAIRS
# =============================================================================

def _state_key(state):
    return ",".join(str(n) for n in state.quantum_numbers)


@attr.s(frozen=True)
class EigenPair:
    """Eigenvalue and monomial-basis eigenvector of a sector matrix.

    Parameters
    ----------
    label: SectorState
        The state whose diagonal entry is the eigenvalue.
    energy: Fraction or CouplingFunction
        Units pi^2/L^2.
    vector: dict
        SectorState -> scalar, ``vector[label] == 1``.

    """

    label = attr.ib()
    energy = attr.ib()
    vector = attr.ib(converter=dict)

    def residual(self, matrix):
        """``H v - E v`` as a dict of the nonzero components."""
        image = matrix.apply(self.vector)
        out = {}
        for s in set(image) | set(self.vector):
            diff = image.get(s, matrix.coupling.zero()) - \
                self.energy * self.vector.get(s, matrix.coupling.zero())
            if not scalars.is_zero(diff):
                out[s] = diff
        return out

    def to_json(self):
        """``{"state", "energy", "vector"}`` with exact strings."""
        return {
            "state": self.label.to_json(),
            "energy": scalars.scalar_to_string(self.energy),
            "vector": {
                _state_key(s): scalars.scalar_to_string(v)
                for s, v in self.vector.items()}}


def eigenvalues(matrix):
    """Diagonal of ``matrix`` paired with the basis states, in basis order."""
    return list(zip(matrix.basis, matrix.diagonal))


def is_below(state, label):
    """True iff ``state`` is weakly dominated by ``label``.

    Both states must share N and the total, which makes the prefix sums of
    their quantum numbers comparable even when shifts differ.

    """
    ps = itertools.accumulate(state.quantum_numbers)
    pl = itertools.accumulate(label.quantum_numbers)
    return all(a <= b for a, b in zip(ps, pl))


def _symbolic_pivot(label, state):
    sym = scalars.Coupling.symbolic()
    return ham.diagonal_energy(label, sym) - ham.diagonal_energy(state, sym)


def pivot_roots(matrix, label):
    """Rational A values where a back-substitution pivot of ``label``
    vanishes.

    Returns
    -------
    dict
        SectorState -> sorted list of Fraction, for every state strictly
        below ``label`` in the basis.

    Raises
    ------
    StructuralDegeneracy
        If a pivot vanishes identically in A.

    """
    start = matrix.basis.index(label)
    out = {}
    for state in matrix.basis.states[start + 1:]:
        if not is_below(state, label):
            continue
        pivot = _symbolic_pivot(label, state)
        if pivot.is_zero:
            raise vlds.StructuralDegeneracy(
                "Pivot E0({}) - E0({}) vanishes for every A".format(
                    label, state), pair=(label, state))
        out[state] = pivot.rational_roots()
    return out


def eigenvector(matrix, label):
    """Solve ``H v = E0(label) v`` by substitution down the basis.

    ``v[label] = 1``; states before ``label`` get 0; for every later state
    ``r``, ``v[r] = sum_c m[r, c] v[c] / (E0(label) - E0(r))``.

    Parameters
    ----------
    matrix: TriMatrix
    label: SectorState

    Returns
    -------
    EigenPair

    Raises
    ------
    DegenerateDiagonal
        Fixed coupling with a vanishing pivot; carries the pair and the
        rational A values where it vanishes.
    StructuralDegeneracy
        The pivot vanishes identically in A.

    """
    coupling = matrix.coupling
    start = matrix.basis.index(label)
    energy = matrix.diagonal[start]
    v = {start: coupling.one()}
    for r in range(start + 1, len(matrix)):
        state = matrix.basis[r]
        if not is_below(state, label):
            continue
        acc = coupling.zero()
        for c, value in matrix.row(r).items():
            if c in v:
                acc = acc + value * v[c]
        pivot = energy - matrix.diagonal[r]
        if scalars.is_zero(pivot):
            symbolic = _symbolic_pivot(label, state)
            if symbolic.is_zero:
                raise vlds.StructuralDegeneracy(
                    "Pivot E0({}) - E0({}) vanishes for every A".format(
                        label, state), pair=(label, state))
            roots = symbolic.rational_roots()
            raise vlds.DegenerateDiagonal(
                "E0({}) = E0({}) at A={}; roots of the pivot: {}".format(
                    label, state, coupling.value,
                    ", ".join(str(x) for x in roots)),
                pair=(label, state), roots=roots)
        value = acc / pivot
        if not scalars.is_zero(value):
            v[r] = value
    logger.debug("Eigenvector of %s: %d components", label, len(v))
    return EigenPair(
        label=label, energy=energy,
        vector={matrix.basis[i]: x for i, x in sorted(v.items())})


# =============================================================================
# PSEUDO-MOMENTA
# =============================================================================

def _exact(value, name):
    if isinstance(value, (numbers.Integral, Fraction)) and not isinstance(
            value, bool):
        return Fraction(value)
    if isinstance(value, numbers.Real):
        return float(value)
    raise TypeError(
        "{}: Argument must be a real number. Got instead type {}".format(
            name, type(value)))


@attr.s(frozen=True)
class PseudoMomenta:
    """Pseudo-momenta of a state.

    Attributes
    ----------
    state: SectorState
    coupling: Fraction or float
    I: tuple
        Half-odd (or integer, for odd N) numbers ``n_j + (N+1-2j)/2``.
    k: tuple
        Pseudo-momenta in units pi/L.
    energy: Fraction or float
        ``sum k_j^2`` in units pi^2/L^2.
    length: float
        The ring length L.

    """

    state = attr.ib()
    coupling = attr.ib()
    I = attr.ib(converter=tuple)  # noqa
    k = attr.ib(converter=tuple)
    energy = attr.ib()
    length = attr.ib(default=1.)

    def physical_k(self):
        """``k_j`` in inverse length units, as floats."""
        return np.asarray([float(x) for x in self.k]) * np.pi / self.length

    def to_json(self):
        """Exact strings, except for a float coupling."""
        return {
            "state": self.state.to_json(),
            "A": str(self.coupling),
            "I": [str(x) for x in self.I],
            "k": [str(x) for x in self.k],
            "energy": str(self.energy)}


def pseudo_momenta(state, coupling, length=1.):
    """Pseudo-momenta of ``state`` at coupling A.

    The sgn sum over the other momenta is resolved by assuming ``k`` is
    ordered like ``I``, which gives ``k_j L / pi = I_j + (A - 1)(N + 1 -
    2j) / 2``. The assumption is checked afterwards; equal neighbours are
    accepted (they occur at A = 0).

    Parameters
    ----------
    state: SectorState
    coupling: int, Fraction or float
        A. Exact input gives exact output.
    length: float
        L, only used by :meth:`PseudoMomenta.physical_k`.

    Raises
    ------
    SgnInconsistent
        If the resulting ``k`` is not non-increasing.

    """
    a = _exact(coupling, "A")
    n = state.quantum_numbers
    size = len(n)
    half = [Fraction(size + 1 - 2 * j, 2) for j in range(1, size + 1)]
    I = [nj + c for nj, c in zip(n, half)]  # noqa
    k = [i + (a - 1) * c for i, c in zip(I, half)]
    for j in range(size - 1):
        if k[j] < k[j + 1]:
            raise vlds.SgnInconsistent(
                "Pseudo-momenta of {} at A={}: k_{} = {} < k_{} = {}".format(
                    state, coupling, j + 1, k[j], j + 2, k[j + 1]))
    energy = sum(x * x for x in k)
    return PseudoMomenta(
        state=state, coupling=a, I=I, k=k, energy=energy, length=length)


def zero_point_offset(n_particles, coupling):
    """``sum_j (A (N + 1 - 2j) / 2)^2``."""
    a = _exact(coupling, "A")
    return sum(
        (a * Fraction(n_particles + 1 - 2 * j, 2)) ** 2
        for j in range(1, n_particles + 1))


@attr.s(frozen=True)
class OffsetReport:
    """``E_pseudo - E0`` over a set of states at fixed N and A."""

    n_particles = attr.ib()
    coupling = attr.ib()
    offsets = attr.ib(converter=dict)
    expected = attr.ib()

    @property
    def constant(self):
        """True when every state has the same offset."""
        return len(set(self.offsets.values())) <= 1

    @property
    def value(self):
        """The common offset, ``None`` if it varies."""
        if not self.offsets or not self.constant:
            return None
        return next(iter(self.offsets.values()))

    @property
    def matches_expected(self):
        """True when constant and equal to the zero-point offset."""
        return self.constant and all(
            d == self.expected for d in self.offsets.values())

    def to_json(self):
        """Exact strings."""
        return {
            "N": self.n_particles,
            "A": str(self.coupling),
            "constant": self.constant,
            "value": None if self.value is None else str(self.value),
            "expected": str(self.expected),
            "matches_expected": self.matches_expected,
            "offsets": {
                _state_key(s): str(d) for s, d in self.offsets.items()}}


def compare_pseudomomentum_energy(bases, coupling):
    """Offsets between pseudo-momentum and diagonal energies.

    Parameters
    ----------
    bases: SectorBasis or iterable of SectorBasis
        Sectors sharing N.
    coupling: int or Fraction
        Fixed A >= 0.

    Returns
    -------
    OffsetReport

    """
    if isinstance(bases, sts.SectorBasis):
        bases = [bases]
    bases = list(bases)
    vlds.validate_rational(coupling, "A")
    fixed = scalars.Coupling.fixed(coupling)
    sizes = {b.n_particles for b in bases}
    if len(sizes) != 1:
        raise ValueError(
            "Offsets: all sectors must share N. Got {}".format(sorted(sizes)))
    n_particles = sizes.pop()
    offsets = {}
    for basis in bases:
        for state in basis:
            pm = pseudo_momenta(state, fixed.value)
            offsets[state] = pm.energy - ham.diagonal_energy(state, fixed)
    report = OffsetReport(
        n_particles=n_particles, coupling=fixed.value, offsets=offsets,
        expected=zero_point_offset(n_particles, fixed.value))
    if not report.matches_expected:
        logger.warning(
            "Pseudo-momentum offset at N=%d, A=%s is not the zero-point "
            "value %s: %s", n_particles, fixed.value, report.expected,
            sorted(set(str(d) for d in offsets.values())))
    return report


# =============================================================================
# GAUGE PREFACTOR
# =============================================================================

def _pair_factors(x, length):
    w = np.exp(1j * np.pi * x / length)
    j, k = np.triu_indices(len(x), k=1)
    ratio = w[j] / w[k]
    # on the unit circle: 2i sin and 2 cos - 2
    odd = 1j * (ratio - 1. / ratio).imag
    even = (ratio + 1. / ratio).real - 2.
    return odd, even


def gauge_prefactor_eval(x, lam, branch, length=1.):
    """Prefactor turning a symmetric eigenpolynomial into the wavefunction.

    ``prod_{j<k} (w_j/w_k - w_k/w_j)^lambda
    (w_j/w_k + w_k/w_j - 2)^(beta/2)`` with ``w_j = exp(i pi x_j / L)``,
    principal branch complex powers and beta taken from
    :func:`csmpy.scalars.coupling_from_lambda`. The result is a float
    approximation.

    Parameters
    ----------
    x: array_like, shape (N,)
        Positions in ``[0, L)``.
    lam: float
    branch: Branch
    length: float

    Returns
    -------
    complex

    Raises
    ------
    CoincidentPositions

    """
    x = vlds.validate_positions(x, length)
    _, beta = scalars.coupling_from_lambda(lam, branch)
    odd, even = _pair_factors(x, length)
    factors = np.power(odd.astype(complex), lam) * np.power(
        even.astype(complex), beta / 2.)
    return complex(np.prod(factors))


def prefactor_modulus(x, lam, branch, length=1.):
    """Branch independent ``|prefactor|``."""
    x = vlds.validate_positions(x, length)
    _, beta = scalars.coupling_from_lambda(lam, branch)
    odd, even = _pair_factors(x, length)
    return float(np.prod(np.abs(odd) ** lam * np.abs(even) ** (beta / 2.)))
