#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of the
#   csmpy Project.
# License: MIT

# =============================================================================
# DOCS
# =============================================================================

"""Partitions, dominance order and Young diagram statistics."""

# =============================================================================
# IMPORTS
# =============================================================================

import collections
import enum
import itertools

import attr

from scipy.special import comb, factorial

from . import validators as vlds


# =============================================================================
# CONSTANTS
# =============================================================================

GLYPH = "■"


class Dominance(enum.Enum):
    """Result of comparing two partitions of equal weight."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


# =============================================================================
# PARTITION
# =============================================================================

@attr.s(frozen=True, repr=False)
class Partition:
    """Non-increasing sequence of positive integers.

    Use :func:`make_partition` to build one from arbitrary input; the
    constructor assumes the parts are already valid. Weight, length and the
    conjugate are computed once.

    Parameters
    ----------
    parts: tuple of int
        Positive, non-increasing parts. Trailing zeros are never stored.

    """

    parts = attr.ib(converter=tuple)

    weight = attr.ib(init=False, eq=False)
    length = attr.ib(init=False, eq=False)
    _conjugate = attr.ib(init=False, eq=False, default=None)

    def __attrs_post_init__(self):
        object.__setattr__(self, "weight", sum(self.parts))
        object.__setattr__(self, "length", len(self.parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return self.length

    def __getitem__(self, idx):
        return self.parts[idx]

    def __repr__(self):
        return "Partition{}".format(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    @property
    def is_empty(self):
        """True for the empty partition."""
        return self.length == 0

    def part(self, i):
        """1-based part ``k_i``, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= self.length else 0

    def conjugate(self):
        """Cached conjugate partition."""
        if self._conjugate is None:
            object.__setattr__(self, "_conjugate", conjugate(self))
        return self._conjugate

    def multiplicities(self):
        """Mapping part value -> number of parts with that value."""
        return collections.Counter(self.parts)

    def padded(self, n):
        """The parts padded with zeros to length ``n``."""
        if n < self.length:
            raise vlds.LengthExceedsN(
                "Partition {} has more than {} parts".format(self, n))
        return self.parts + (0,) * (n - self.length)

    def to_json(self):
        """JSON array of the parts."""
        return list(self.parts)


EMPTY = Partition(())


# =============================================================================
# CONSTRUCTION
# =============================================================================

def make_partition(values):
    """Create a partition from a non-increasing sequence of integers.

    Zeros are stripped. Unsorted input is rejected, use
    :func:`sort_to_partition` to sort explicitly.

    Raises
    ------
    NotNonIncreasing, NegativePart

    """
    if isinstance(values, Partition):
        return values
    values = vlds.validate_parts(values)
    return Partition(tuple(v for v in values if v != 0))


def sort_to_partition(values):
    """Sort non-negative integers into a partition."""
    return make_partition(sorted(values, reverse=True))


def partitions_of(n, max_length=None, max_part=None):
    """Generate every partition of ``n`` in descending lexicographic order.

    Parameters
    ----------
    n: int
        The weight.
    max_length: int, optional
        Only partitions with at most this many parts.
    max_part: int, optional
        Only partitions with parts not larger than this.

    """
    vlds.validate_int(n, "Weight")
    if n < 0:
        return
    max_part = n if max_part is None else min(max_part, n)
    max_length = n if max_length is None else max_length

    def _gen(remain, largest, slots):
        if remain == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remain, largest), 0, -1):
            if first * slots < remain:
                break
            for rest in _gen(remain - first, first, slots - 1):
                yield (first,) + rest

    for parts in _gen(n, max_part, max_length):
        yield Partition(parts)


def conjugate(k):
    """Transpose the Young diagram: ``k'_j = #{i : k_i >= j}``."""
    k = make_partition(k)
    if k.is_empty:
        return EMPTY
    return Partition(
        sum(1 for p in k.parts if p >= j) for j in range(1, k.parts[0] + 1))


# =============================================================================
# ORDERING
# =============================================================================

def _prefix_sums(parts, n):
    padded = tuple(parts) + (0,) * (n - len(parts))
    return tuple(itertools.accumulate(padded))


def dominance_compare(a, b):
    """Compare two partitions of equal weight in dominance order.

    ``a <= b`` iff every prefix sum of ``a`` is at most the matching
    prefix sum of ``b``.

    Returns
    -------
    Dominance

    Raises
    ------
    UnequalWeight

    """
    a, b = make_partition(a), make_partition(b)
    if a.weight != b.weight:
        raise vlds.UnequalWeight(
            "Dominance: partitions {} and {} have different weights".format(
                a, b))
    if a == b:
        return Dominance.EQUAL
    n = max(a.length, b.length)
    sa, sb = _prefix_sums(a.parts, n), _prefix_sums(b.parts, n)
    if all(x <= y for x, y in zip(sa, sb)):
        return Dominance.LESS
    if all(x >= y for x, y in zip(sa, sb)):
        return Dominance.GREATER
    return Dominance.INCOMPARABLE


def dominates(a, b):
    """True iff ``a >= b`` in dominance order (equal weights)."""
    return dominance_compare(a, b) in (Dominance.GREATER, Dominance.EQUAL)


def order_key(parts):
    """Sort key of the total order extending dominance.

    Descending lexicographic order on the (zero padded) parts is a linear
    extension of dominance, so ``sorted(..., key=order_key, reverse=True)``
    lists dominant partitions first and breaks ties between incomparable
    ones lexicographically.

    """
    return tuple(parts)


# =============================================================================
# YOUNG DIAGRAM
# =============================================================================

@attr.s(frozen=True)
class CellStats:
    """Arm, leg and their co-lengths of one cell."""

    arm = attr.ib()
    arm_colength = attr.ib()
    leg = attr.ib()
    leg_colength = attr.ib()


def cells(k):
    """Iterate the 1-based cells ``(i, j)`` of the Young diagram row by row."""
    k = make_partition(k)
    for i, row in enumerate(k.parts, start=1):
        for j in range(1, row + 1):
            yield i, j


def cell_stats(k, i, j):
    """Arm, arm co-length, leg and leg co-length of cell ``(i, j)``.

    Raises
    ------
    CellOutOfDiagram

    """
    k = make_partition(k)
    if not (1 <= i <= k.length and 1 <= j <= k.part(i)):
        raise vlds.CellOutOfDiagram(
            "Cell ({}, {}) is not in the diagram of {}".format(i, j, k))
    return CellStats(
        arm=k.part(i) - j,
        arm_colength=j - 1,
        leg=k.conjugate().part(j) - i,
        leg_colength=i - 1)


@attr.s(frozen=True)
class HookProducts:
    """Products of upper and lower hook lengths and the Jack norm."""

    upper = attr.ib()
    lower = attr.ib()
    norm = attr.ib()


def hook_products(k, coupling, literal=False):
    """Upper and lower hook-length products of ``k`` at coupling A.

    ``upper = prod(l(s) + (1 + a(s)) / A)`` and
    ``lower = prod(l(s) + 1 + a(s) / A)``, and ``norm = upper * lower``
    equals the Jack norm. With ``literal=True`` the lower hook uses the leg
    co-length ``l'(s)`` instead of ``l(s)``; the two agree on one-row
    partitions only.

    Raises
    ------
    ZeroCoupling
        If A is the fixed value 0.

    """
    k = make_partition(k)
    inv = coupling.inverse()
    upper, lower = coupling.one(), coupling.one()
    for i, j in cells(k):
        s = cell_stats(k, i, j)
        leg = s.leg_colength if literal else s.leg
        upper = upper * (s.leg + (1 + s.arm) * inv)
        lower = lower * (leg + 1 + s.arm * inv)
    return HookProducts(upper=upper, lower=lower, norm=upper * lower)


def young_diagram(k, glyph=GLYPH):
    """ASCII Young diagram: one left-justified row of glyphs per part."""
    k = make_partition(k)
    return "\n".join(glyph * row for row in k.parts)


# =============================================================================
# COUNTING
# =============================================================================

def conjugation_identity(k):
    """Both sides of ``sum (i-1) k_i == sum C(k'_i, 2)``."""
    k = make_partition(k)
    lhs = sum((i - 1) * p for i, p in enumerate(k.parts, start=1))
    rhs = sum(int(comb(p, 2, exact=True)) for p in k.conjugate().parts)
    return lhs, rhs


def z_factor(k):
    """``z_k = prod i^{m_i} m_i!`` over the part multiplicities."""
    k = make_partition(k)
    z = 1
    for value, mult in k.multiplicities().items():
        z *= value ** mult * int(factorial(mult, exact=True))
    return z


def ket_factor(values):
    """``prod m_i!`` over the multiplicities of every value (zeros too)."""
    f = 1
    for mult in collections.Counter(values).values():
        f *= int(factorial(mult, exact=True))
    return f
