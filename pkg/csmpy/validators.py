#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of the
#   csmpy Project.
# License: MIT


"""Functions and exceptions to validate csmpy input parameters."""

import numbers
from fractions import Fraction

import numpy as np


# =============================================================================
# EXCEPTIONS
# =============================================================================

class CSMError(ValueError):
    """Base class of every csmpy domain error."""


class DivisionByZero(CSMError, ZeroDivisionError):
    """Division of an exact scalar by zero."""


class MixedScalarMode(CSMError):
    """Rational and symbolic scalars combined where one mode is required."""


class NotNonIncreasing(CSMError):
    """A sequence that should be a partition is not non-increasing."""


class NegativePart(CSMError):
    """A partition part is negative."""


class UnequalWeight(CSMError):
    """Two partitions of different weight were compared."""


class WeightMismatch(CSMError):
    """Symmetric functions of different weight were paired."""


class CellOutOfDiagram(CSMError):
    """A cell (i, j) is not inside the Young diagram."""


class ZeroCoupling(CSMError):
    """The coupling A is zero where 1/A is needed."""


class InvalidRoot(CSMError):
    """A sector root is inconsistent with the requested sector."""


class SqueezeOutOfRange(CSMError):
    """A squeeze would break the ordering of the quantum numbers."""


class NotSymmetric(CSMError):
    """A Laurent polynomial is not symmetric in its variables."""


class InexactDivision(CSMError):
    """Division by (w_j - w_k) left a remainder (implementation bug)."""


class LengthExceedsN(CSMError):
    """A partition has more parts than there are particles."""


class NTooSmall(CSMError):
    """The number of particles is too small for the requested label."""


class TooManyParticles(CSMError):
    """The permutation expansion is refused beyond the desk-scale guard."""


class NonIntegerCoupling(CSMError):
    """A computation needs a positive integer coupling."""


class BasisNotClosed(CSMError):
    """The Hamiltonian generated a state outside the basis."""


class NotTriangular(CSMError):
    """The Hamiltonian has an entry below the diagonal in the basis order."""


class NodeNotInGraph(CSMError):
    """A state is not a node of the squeeze graph."""


class DegenerateDiagonal(CSMError):
    """A back-substitution pivot vanishes.

    Attributes
    ----------
    pair: tuple
        The label and the lower state with colliding diagonal energies.
    roots: list of Fraction
        Rational values of A at which the pivot vanishes.

    """

    def __init__(self, message, pair=(), roots=()):
        super().__init__(message)
        self.pair = tuple(pair)
        self.roots = list(roots)


class StructuralDegeneracy(DegenerateDiagonal):
    """A pivot vanishes identically as a polynomial in A."""


class SgnInconsistent(CSMError):
    """The ordering assumed to resolve the sgn sum is violated."""


class CoincidentPositions(CSMError):
    """Two particle positions coincide."""


class SingularGram(CSMError):
    """Gram-Schmidt met a vanishing norm at the given coupling."""


# =============================================================================
# VALIDATORS
# =============================================================================

def validate_int(value, name):
    """Check if integer (bools excluded)."""
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError(
            "{}: Argument must be an integer. "
            "Got instead type {}".format(name, type(value)))


def validate_n_particles(n):
    """Validate the number of particles: integer higher than 0."""
    validate_int(n, "N")
    if n < 1:
        raise ValueError(
            "N: Argument must be higher than 0. Got instead {}".format(n))


def validate_parts(values):
    """Validate a sequence of integers meant to become a partition."""
    values = tuple(values)
    for v in values:
        validate_int(v, "Partition")
    if any(v < 0 for v in values):
        raise NegativePart(
            "Partition: parts must be non negative. Got {}".format(values))
    if any(a < b for a, b in zip(values, values[1:])):
        raise NotNonIncreasing(
            "Partition: parts must be in non-increasing order. "
            "Got {}".format(values))
    return values


def validate_quantum_numbers(values):
    """Validate non-increasing integers, negative values allowed."""
    values = tuple(values)
    for v in values:
        validate_int(v, "Quantum numbers")
    if len(values) == 0:
        raise ValueError("Quantum numbers: at least one particle is needed")
    if any(a < b for a, b in zip(values, values[1:])):
        raise NotNonIncreasing(
            "Quantum numbers: must be in non-increasing order. "
            "Got {}".format(values))
    return values


def validate_rational(value, name):
    """Check if an exact rational number (int or Fraction)."""
    if isinstance(value, bool) or not isinstance(
            value, (numbers.Integral, Fraction)):
        raise TypeError(
            "{}: Argument must be an int or a Fraction. "
            "Got instead type {}".format(name, type(value)))


def validate_positive_integer_coupling(value):
    """Torus integrals need A to be a positive integer."""
    if isinstance(value, bool) or not isinstance(
            value, (numbers.Integral, Fraction)):
        raise NonIntegerCoupling(
            "Coupling: a positive integer is required. "
            "Got instead {!r}".format(value))
    if Fraction(value).denominator != 1 or value < 1:
        raise NonIntegerCoupling(
            "Coupling: a positive integer is required. "
            "Got instead {}".format(value))
    return int(value)


def validate_positions(x, length):
    """Validate particle positions on the ring."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or len(x) == 0:
        raise ValueError(
            "Positions: Array has the wrong shape. Expected shape of (N,), "
            "got instead {}".format(x.shape))
    if not np.isfinite(x).all():
        raise ValueError("Positions: Array must have real numbers")
    if not np.isscalar(length) or not length > 0:
        raise ValueError(
            "Length: Must be a positive number. Got {}".format(length))
    if len(np.unique(np.mod(x, length))) != len(x):
        raise CoincidentPositions(
            "Positions: the gauge prefactor is singular at coincident "
            "positions. Got {}".format(x.tolist()))
    return x
