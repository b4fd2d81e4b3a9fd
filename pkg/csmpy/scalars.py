#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of the
#   csmpy Project.
# License: MIT

# =============================================================================
# DOCS
# =============================================================================

"""Exact scalars and the coupling parameter.

Two interchangeable scalar modes flow through the package:

- ``fractions.Fraction``: an exact rational, used when the coupling A is
  fixed to a rational value.
- :class:`CouplingFunction`: a reduced rational function of the formal
  coupling symbol A with rational coefficients, used in symbolic mode.

The coupling itself is described by :class:`Coupling`. The maps from the
original interaction strength lambda to A and beta are irrational in
general, so they are only provided in floating point
(:func:`coupling_from_lambda`); the exact pipeline always takes A itself.

"""

# =============================================================================
# IMPORTS
# =============================================================================

import enum
import logging
import numbers
import operator as op
from fractions import Fraction

import attr

import numpy as np

import sympy

from . import validators as vlds


# =============================================================================
# CONSTANTS
# =============================================================================

logger = logging.getLogger(__name__)

A_SYMBOL = sympy.Symbol("A")

OPERATIONS = {
    "add": op.add,
    "sub": op.sub,
    "mul": op.mul,
    "div": op.truediv}


# =============================================================================
# COEFFICIENT CONVERSION
# =============================================================================

def _to_sympy(value):
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value):
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _poly_from_coeffs(coeffs):
    """Build a poly in A from coefficients ordered low to high degree."""
    coeffs = [_to_sympy(c) for c in coeffs] or [sympy.Integer(0)]
    return sympy.Poly.from_list(
        list(reversed(coeffs)), A_SYMBOL, domain=sympy.QQ)


_ZERO_POLY = _poly_from_coeffs([0])
_ONE_POLY = _poly_from_coeffs([1])


def _format_coeff(c, power):
    if power == 0:
        return str(c)
    if c == 1:
        head = ""
    elif c == -1:
        head = "-"
    elif c.denominator == 1:
        head = str(c)
    else:
        head = "({})".format(c)
    return head + ("A" if power == 1 else "A^{}".format(power))


def _format_poly(coeffs):
    terms = [
        _format_coeff(c, power) for power, c in enumerate(coeffs) if c != 0]
    if not terms:
        return "0"
    text = terms[0]
    for term in terms[1:]:
        text += term if term.startswith("-") else "+" + term
    return text


# =============================================================================
# SYMBOLIC SCALAR
# =============================================================================

@attr.s(frozen=True, eq=False, repr=False)
class CouplingFunction:
    """Reduced rational function of the coupling symbol A over QQ.

    Instances are always stored in canonical form: the numerator and
    denominator share no common factor and the denominator is monic.
    Plain ``int`` and ``Fraction`` operands are promoted to constant
    functions in the arithmetic operators.

    Parameters
    ----------
    num: sympy.Poly
        Numerator polynomial in :data:`A_SYMBOL` over QQ.
    den: sympy.Poly
        Denominator polynomial in :data:`A_SYMBOL` over QQ.

    """

    num = attr.ib()
    den = attr.ib()

    # =========================================================================
    # CONSTRUCTORS
    # =========================================================================

    @classmethod
    def from_polys(cls, num, den):
        """Create the canonical form of ``num / den``."""
        if den.is_zero:
            raise vlds.DivisionByZero("CouplingFunction: zero denominator")
        if num.is_zero:
            return cls(num=_ZERO_POLY, den=_ONE_POLY)
        if den.degree() > 0:
            g = num.gcd(den)
            if g.degree() > 0:
                num, den = num.exquo(g), den.exquo(g)
        lc = den.LC()
        if lc != 1:
            num, den = num.quo_ground(lc), den.quo_ground(lc)
        return cls(num=num, den=den)

    @classmethod
    def from_coeffs(cls, num, den=(1,)):
        """Create from coefficient lists ordered low to high degree."""
        return cls.from_polys(_poly_from_coeffs(num), _poly_from_coeffs(den))

    @classmethod
    def constant(cls, value):
        """Constant function equal to the rational ``value``."""
        return cls(num=_poly_from_coeffs([value]), den=_ONE_POLY)

    @classmethod
    def symbol(cls):
        """Return the coupling symbol A itself."""
        return cls(num=_poly_from_coeffs([0, 1]), den=_ONE_POLY)

    # =========================================================================
    # PROPERTIES
    # =========================================================================

    @property
    def is_zero(self):
        """True for the zero function."""
        return self.num.is_zero

    @property
    def is_constant(self):
        """True when the function does not depend on A."""
        return self.num.degree() <= 0 and self.den.degree() == 0

    @property
    def num_coeffs(self):
        """Numerator coefficients as Fractions, low to high degree."""
        return [_to_fraction(c) for c in reversed(self.num.all_coeffs())]

    @property
    def den_coeffs(self):
        """Denominator coefficients as Fractions, low to high degree."""
        return [_to_fraction(c) for c in reversed(self.den.all_coeffs())]

    def constant_value(self):
        """Return the Fraction value of a constant function."""
        if not self.is_constant:
            raise ValueError("CouplingFunction: {} is not constant".format(
                self))
        return _to_fraction(self.num.LC()) if not self.is_zero else Fraction(0)

    # =========================================================================
    # ARITHMETIC
    # =========================================================================

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, CouplingFunction):
            return other
        if isinstance(other, (numbers.Integral, Fraction)) and not isinstance(
                other, bool):
            return cls.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return self.from_polys(self.num + other.num, self.den)
        return self.from_polys(
            self.num * other.den + other.num * self.den,
            self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return CouplingFunction(num=-self.num, den=self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.constant(0)
        return self.from_polys(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise vlds.DivisionByZero(
                "CouplingFunction: division of {} by zero".format(self))
        return self.from_polys(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        vlds.validate_int(exponent, "Exponent")
        if exponent < 0:
            return self.constant(1) / (self ** -exponent)
        return CouplingFunction(
            num=self.num ** exponent, den=self.den ** exponent)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self.is_constant:
            return hash(self.constant_value())
        return hash((tuple(self.num_coeffs), tuple(self.den_coeffs)))

    # =========================================================================
    # EVALUATION
    # =========================================================================

    def evaluate(self, value):
        """Evaluate at the rational ``value`` of A, exactly."""
        vlds.validate_rational(value, "A")
        den = self.den.eval(_to_sympy(value))
        if den == 0:
            raise vlds.DivisionByZero(
                "CouplingFunction: {} has a pole at A={}".format(self, value))
        return _to_fraction(self.num.eval(_to_sympy(value))) / _to_fraction(
            den)

    def rational_roots(self):
        """Rational values of A where the function vanishes, ascending."""
        if self.is_zero:
            raise ValueError("CouplingFunction: the zero function")
        if self.num.degree() <= 0:
            return []
        return sorted(_to_fraction(r) for r in self.num.ground_roots())

    def limit(self, at):
        """Limit as A tends to ``0`` or to ``"inf"``.

        Returns ``None`` when the limit diverges.

        """
        num, den = self.num_coeffs, self.den_coeffs
        if at == "inf":
            if len(num) > len(den):
                return None
            if len(num) < len(den) or self.is_zero:
                return Fraction(0)
            return num[-1] / den[-1]
        if at == 0:
            n_low = next((i for i, c in enumerate(num) if c != 0), None)
            if n_low is None:
                return Fraction(0)
            d_low = next(i for i, c in enumerate(den) if c != 0)
            if n_low < d_low:
                return None
            if n_low > d_low:
                return Fraction(0)
            return num[n_low] / den[d_low]
        raise ValueError("Limit: 'at' must be 0 or 'inf'. Got {!r}".format(at))

    # =========================================================================
    # REPRESENTATION
    # =========================================================================

    def __str__(self):
        num = _format_poly(self.num_coeffs)
        if self.den.degree() == 0:
            return num
        den = _format_poly(self.den_coeffs)
        if len([c for c in self.num_coeffs if c != 0]) > 1 or "/" in num:
            num = "({})".format(num)
        return "{}/({})".format(num, den)

    def __repr__(self):
        return "CouplingFunction({})".format(self)

    def to_json(self):
        """Serialize as ``{"num": [...], "den": [...]}``."""
        return {
            "num": [str(c) for c in self.num_coeffs],
            "den": [str(c) for c in self.den_coeffs]}

    @classmethod
    def from_json(cls, data):
        """Inverse of :meth:`to_json`."""
        return cls.from_coeffs(
            [Fraction(c) for c in data["num"]],
            [Fraction(c) for c in data["den"]])


# =============================================================================
# SCALAR HELPERS
# =============================================================================

def is_symbolic(value):
    """True for a :class:`CouplingFunction` scalar."""
    return isinstance(value, CouplingFunction)


def is_zero(value):
    """Exact zero test valid in both scalar modes."""
    return value.is_zero if is_symbolic(value) else value == 0


def scalar_arithmetic(a, b, operation):
    """Exact ``a <op> b`` for two scalars of the same mode.

    Parameters
    ----------
    a, b: Fraction or CouplingFunction
        Operands. ``int`` is accepted as a rational.
    operation: str
        One of ``"add"``, ``"sub"``, ``"mul"`` and ``"div"``.

    Raises
    ------
    MixedScalarMode
        If one operand is rational and the other symbolic.
    DivisionByZero
        On division by an exact zero.

    """
    if operation not in OPERATIONS:
        raise ValueError(
            "Operation: Got an invalid name: '{}'. "
            "Options are: {}".format(operation, list(OPERATIONS)))
    if is_symbolic(a) != is_symbolic(b):
        raise vlds.MixedScalarMode(
            "Scalars: cannot combine {!r} and {!r}".format(a, b))
    if not is_symbolic(a):
        vlds.validate_rational(a, "Scalar")
        vlds.validate_rational(b, "Scalar")
        a, b = Fraction(a), Fraction(b)
        if operation == "div" and b == 0:
            raise vlds.DivisionByZero("Scalars: division of {} by 0".format(a))
    return OPERATIONS[operation](a, b)


def evaluate(value, at):
    """Evaluate a scalar at the rational coupling ``at``."""
    if is_symbolic(value):
        return value.evaluate(at)
    return Fraction(value)


def scalar_to_string(value):
    """Exact string form: ``"p/q"`` for rationals, ``"2A/(1+A)"`` style."""
    return str(value) if is_symbolic(value) else str(Fraction(value))


def scalar_to_json(value):
    """JSON form of a scalar."""
    if is_symbolic(value):
        return value.to_json()
    return str(Fraction(value))


def scalar_from_json(data):
    """Inverse of :func:`scalar_to_json`."""
    if isinstance(data, dict):
        return CouplingFunction.from_json(data)
    return Fraction(data)


# =============================================================================
# COUPLING
# =============================================================================

class Branch(enum.Enum):
    """Sign choice of the square root in the lambda maps."""

    PLUS = "plus"
    MINUS = "minus"

    @property
    def sign(self):
        """+1 or -1."""
        return 1 if self is Branch.PLUS else -1


def coupling_from_lambda(lam, branch):
    """Map the interaction strength lambda to the couplings (A, beta).

    ``A = (1 +/- sqrt(1 + 8 lambda^2)) / 2`` and
    ``beta = (1 - 4 lambda +/- sqrt(1 + 8 lambda^2)) / 2``, with the same
    sign, so that ``A = 2 lambda + beta``. Works element-wise on arrays.

    Parameters
    ----------
    lam: float or ndarray
        Finite interaction strength.
    branch: Branch
        Sign of the square root. Never defaulted.

    Returns
    -------
    A, beta: float or ndarray

    """
    if not isinstance(branch, Branch):
        raise TypeError(
            "Branch: Argument must be a Branch. "
            "Got instead type {}".format(type(branch)))
    lam = np.asarray(lam, dtype=float)
    if not np.isfinite(lam).all():
        raise ValueError("Lambda: must be a finite real number")
    root = branch.sign * np.sqrt(1. + 8. * lam ** 2)
    A = 0.5 * (1. + root)
    beta = 0.5 * (1. - 4. * lam + root)
    if A.ndim == 0:
        return float(A), float(beta)
    return A, beta


def _exact_or_none(value):
    if value is None:
        return None
    vlds.validate_rational(value, "Coupling")
    return Fraction(value)


@attr.s(frozen=True)
class Coupling:
    """The coupling A, either a fixed rational or the formal symbol.

    Parameters
    ----------
    value: Fraction or None
        The fixed rational value of A. ``None`` means symbolic mode.
    branch: Branch or None
        Branch of the lambda map this coupling came from, if any.
    lam: float or None
        The lambda the coupling was derived from, if any.
    approximate: bool
        True when ``value`` is a rational approximation of an irrational
        A(lambda).

    """

    value = attr.ib(default=None, converter=_exact_or_none)
    branch = attr.ib(default=None)
    lam = attr.ib(default=None)
    approximate = attr.ib(default=False)

    @classmethod
    def symbolic(cls):
        """The symbolic coupling."""
        return cls()

    @classmethod
    def fixed(cls, value):
        """A fixed rational coupling."""
        return cls(value=value)

    @classmethod
    def from_lambda(cls, lam, branch, max_denominator=10 ** 6):
        """Rational approximation of A(lambda), flagged approximate."""
        a_float, _ = coupling_from_lambda(lam, branch)
        value = Fraction(a_float).limit_denominator(max_denominator)
        logger.info(
            "Coupling from lambda=%s (%s branch): A~%s", lam,
            branch.value, value)
        return cls(value=value, branch=branch, lam=float(lam),
                   approximate=float(value) != a_float)

    @classmethod
    def parse(cls, text):
        """Parse ``"symbolic"`` or a rational string like ``"1/2"``."""
        text = str(text).strip()
        if text.lower() in ("symbolic", "a", "sym"):
            return cls.symbolic()
        try:
            return cls.fixed(Fraction(text))
        except (ValueError, ZeroDivisionError):
            raise ValueError(
                "Coupling: expected a rational like '1/2' or 'symbolic'. "
                "Got {!r}".format(text))

    @property
    def is_symbolic(self):
        """True in symbolic mode."""
        return self.value is None

    def scalar(self):
        """A as a scalar of this coupling's mode."""
        if self.is_symbolic:
            return CouplingFunction.symbol()
        return self.value

    def coerce(self, value):
        """Promote an exact rational to this coupling's scalar mode."""
        if self.is_symbolic:
            return value if is_symbolic(value) else \
                CouplingFunction.constant(value)
        if is_symbolic(value):
            raise vlds.MixedScalarMode(
                "Coupling: fixed A={} got symbolic {}".format(
                    self.value, value))
        return Fraction(value)

    def zero(self):
        """Zero in this coupling's scalar mode."""
        return self.coerce(0)

    def one(self):
        """One in this coupling's scalar mode."""
        return self.coerce(1)

    def inverse(self):
        """1/A in this coupling's scalar mode."""
        if not self.is_symbolic and self.value == 0:
            raise vlds.ZeroCoupling("Coupling: 1/A needs A != 0")
        return self.one() / self.scalar()

    def __str__(self):
        text = "symbolic" if self.is_symbolic else str(self.value)
        if self.branch is not None:
            text += " (lambda={}, {} branch{})".format(
                self.lam, self.branch.value,
                ", approximate" if self.approximate else "")
        return text
