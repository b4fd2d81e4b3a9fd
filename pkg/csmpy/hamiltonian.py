#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of the
#   csmpy Project.
# License: MIT

# =============================================================================
# DOCS
# =============================================================================

"""Exact triangular matrix of the gauge transformed Hamiltonian.

``H = H0 + A H1`` is assembled on a sector basis of monomial symmetric
functions. Matrix entries always come from the polynomial oracle; the
closed form action on permutation-sum kets and the path-weight formula
are kept next to it for comparison only.

Matrix convention: ``entries[(r, c)]`` is the coefficient of ``basis[r]``
in ``H basis[c]``. The basis lists dominant states first, so every nonzero
entry has ``r >= c``: a state only feeds states at or below it in the
order.

"""

# =============================================================================
# IMPORTS
# =============================================================================

import logging
import time
from fractions import Fraction

import attr

from . import oracle, scalars, states as sts, validators as vlds
from .partitions import ket_factor, order_key


# =============================================================================
# CONSTANTS
# =============================================================================

logger = logging.getLogger(__name__)

__all__ = [
    "TriMatrix", "diagonal_energy", "offdiagonal_energy",
    "h1_literal_action", "h_matrix", "path_weight_offdiag",
    "literal_audit", "ket_factor"]


# =============================================================================
# ENERGIES
# =============================================================================

def gap_sum(state):
    """``sum_{j<k} (n_j - n_k)``."""
    n = state.quantum_numbers
    size = len(n)
    return sum(v * (size - 1 - 2 * j) for j, v in enumerate(n))


def diagonal_energy(state, coupling):
    """``E0 = sum n_j^2 + A sum_{j<k} (n_j - n_k)`` in units pi^2/L^2.

    Parameters
    ----------
    state: SectorState
    coupling: Coupling

    Returns
    -------
    Fraction or CouplingFunction
        In the scalar mode of ``coupling``.

    """
    free = sum(v * v for v in state.quantum_numbers)
    return coupling.coerce(free) + coupling.scalar() * gap_sum(state)


def offdiagonal_energy(state, coupling):
    """``E1 = 2 A sum_{j<k} (n_j - n_k)``."""
    return coupling.scalar() * (2 * gap_sum(state))


# =============================================================================
# MATRIX
# =============================================================================

@attr.s(frozen=True, repr=False)
class TriMatrix:
    """Sparse triangular matrix of H over a sector basis.

    Column ``c`` holds the image of ``basis[c]``: ``entries[(r, c)]`` is
    the coefficient of ``basis[r]`` in ``H basis[c]``. Since H only
    squeezes, every nonzero off-diagonal entry has ``r > c`` (the row
    state is dominance-below the column state).

    Parameters
    ----------
    basis: SectorBasis
        Dominant states first.
    entries: dict
        ``(r, c) -> scalar`` for ``r > c``, zeros omitted.
    diagonal: tuple
        ``E0`` of every basis state.
    coupling: Coupling
        The coupling the scalars belong to.

    """

    basis = attr.ib()
    entries = attr.ib(converter=dict)
    diagonal = attr.ib(converter=tuple)
    coupling = attr.ib()
    buildtime = attr.ib(default=0., eq=False)

    @entries.validator
    def _validate_entries(self, attribute, value):
        for (r, c) in value:
            if r <= c:
                raise vlds.NotTriangular(
                    "TriMatrix: entry ({}, {}) is not below the "
                    "diagonal".format(r, c))

    def __len__(self):
        return len(self.basis)

    def __getitem__(self, rc):
        r, c = rc
        if r == c:
            return self.diagonal[r]
        return self.entries.get((r, c), self.coupling.zero())

    def column(self, c):
        """Mapping row -> nonzero entry of column ``c`` (diagonal included)."""
        out = {c: self.diagonal[c]}
        out.update({r: v for (r, cc), v in self.entries.items() if cc == c})
        return {
            r: v for r, v in sorted(out.items()) if not scalars.is_zero(v)}

    def row(self, r):
        """Mapping column -> nonzero off-diagonal entry of row ``r``."""
        return {c: v for (rr, c), v in sorted(self.entries.items())
                if rr == r}

    def apply(self, vector):
        """Image under H of a combination ``{state: scalar}``."""
        out = {}
        for state, coeff in vector.items():
            c = self.basis.index(state)
            for r, v in self.column(c).items():
                target = self.basis[r]
                out[target] = out.get(target, self.coupling.zero()) + \
                    v * coeff
        return {s: v for s, v in out.items() if not scalars.is_zero(v)}

    def to_json(self):
        """``{"basis": [...], "entries": [{"r", "c", "value"}]}``."""
        items = [
            {"r": r, "c": r, "value": scalars.scalar_to_string(d)}
            for r, d in enumerate(self.diagonal)]
        items += [
            {"r": r, "c": c, "value": scalars.scalar_to_string(v)}
            for (r, c), v in sorted(self.entries.items())]
        items.sort(key=lambda e: (e["c"], e["r"]))
        return {
            "basis": self.basis.to_json(),
            "coupling": str(self.coupling),
            "entries": items}

    def to_text(self):
        """Aligned triangular dump, one row per basis state."""
        cells = [
            [scalars.scalar_to_string(self[r, c]) if c <= r else ""
             for c in range(len(self))]
            for r in range(len(self))]
        labels = [str(s) for s in self.basis]
        width = max([len(x) for row in cells for x in row] + [1])
        lwidth = max(len(x) for x in labels) if labels else 0
        lines = []
        for label, row in zip(labels, cells):
            lines.append(label.ljust(lwidth) + "  " + " ".join(
                x.rjust(width) for x in row))
        return "\n".join(lines)

    def __repr__(self):
        return "TriMatrix(size={}, nonzero={}, coupling={})".format(
            len(self), len(self.entries) + len(self.diagonal),
            self.coupling)


def _column(state, coupling):
    mono = oracle.expand_state_monomial(state)
    h0 = oracle.decompose_in_monomials(oracle.apply_h0(mono))
    h1 = oracle.decompose_in_monomials(oracle.apply_h1(mono))
    a = coupling.scalar()
    out = {}
    for s in set(h0) | set(h1):
        value = coupling.coerce(h0.get(s, 0)) + a * h1.get(s, Fraction(0))
        if not scalars.is_zero(value):
            out[s] = value
    return out


def h_matrix(basis, coupling):
    """Assemble ``H0 + A H1`` on ``basis`` through the oracle.

    Each column is the monomial decomposition of ``H`` applied to the
    monomial symmetric function of one basis state.

    Parameters
    ----------
    basis: SectorBasis
        Closed under squeezing, dominant states first.
    coupling: Coupling

    Returns
    -------
    TriMatrix

    Raises
    ------
    BasisNotClosed
        If a generated monomial is not in the basis.
    NotTriangular
        If a state feeds a state placed before it.

    """
    t0 = time.time()
    entries = {}
    diagonal = [coupling.zero()] * len(basis)
    for c, state in enumerate(basis):
        column = _column(state, coupling)
        logger.debug("Column %d (%s): %d entries", c, state, len(column))
        for s, value in column.items():
            r = basis.index(s)
            if r < c:
                raise vlds.NotTriangular(
                    "H maps {} onto {} which precedes it in the "
                    "basis".format(state, s))
            if r == c:
                diagonal[c] = value
            else:
                entries[(r, c)] = value
    buildtime = time.time() - t0
    logger.info(
        "H matrix of %d states (%s): %d off-diagonal entries (%.3fs)",
        len(basis), coupling, len(entries), buildtime)
    return TriMatrix(
        basis=basis, entries=entries, diagonal=diagonal, coupling=coupling,
        buildtime=buildtime)


# =============================================================================
# CLOSED FORMS
# =============================================================================

def h1_literal_action(state):
    """The closed form action of H1 on a permutation-sum ket, as printed.

    ``H1 |n> = sum_{j<k} (n_j - n_k) (|n> + 2 sum_{p=1}^{n_j-n_k-1}
    |..., n_j - p, ..., n_k + p, ...>)``, every ket re-sorted. No
    multiplicity correction is applied.

    Returns
    -------
    dict
        SectorState -> int coefficient over kets.

    """
    n = state.quantum_numbers
    out = {}
    for j in range(len(n)):
        for k in range(j + 1, len(n)):
            gap = n[j] - n[k]
            if gap == 0:
                continue
            out[state] = out.get(state, 0) + gap
            for p in range(1, gap):
                m = list(n)
                m[j] -= p
                m[k] += p
                target = sts.make_state(sorted(m, reverse=True))
                out[target] = out.get(target, 0) + 2 * gap
    return {s: c for s, c in out.items() if c != 0}


@attr.s(frozen=True)
class AuditRow:
    """Literal versus oracle coefficient of one monomial in ``H1 m_n``."""

    source = attr.ib()
    target = attr.ib()
    literal = attr.ib()
    oracle = attr.ib()

    @property
    def agrees(self):
        """True when both coefficients coincide."""
        return self.literal == self.oracle

    @property
    def factor(self):
        """``literal / oracle``, ``None`` when the oracle value is 0."""
        return None if self.oracle == 0 else \
            Fraction(self.literal) / self.oracle


def literal_audit(state):
    """Compare the closed form of H1 with the oracle on ``m_state``.

    Ket coefficients are converted to the monomial basis with
    ``|n> = ket_factor(n) m_n``.

    Returns
    -------
    list of AuditRow
        One row per monomial appearing on either side, dominant first.

    """
    literal = {
        s: Fraction(c * ket_factor(s.quantum_numbers),
                    ket_factor(state.quantum_numbers))
        for s, c in h1_literal_action(state).items()}
    exact = oracle.decompose_in_monomials(
        oracle.apply_h1(oracle.expand_state_monomial(state)))
    targets = sorted(
        set(literal) | set(exact),
        key=lambda s: order_key(s.quantum_numbers), reverse=True)
    rows = [
        AuditRow(source=state, target=s, literal=literal.get(s, Fraction(0)),
                 oracle=exact.get(s, Fraction(0)))
        for s in targets]
    for row in rows:
        if not row.agrees:
            logger.warning(
                "Literal H1 on %s: %s on %s, oracle gives %s",
                state, row.literal, row.target, row.oracle)
    return rows


def path_weight_offdiag(graph, source, target, coupling):
    """Path-weight value of an off-diagonal element.

    Sum over every directed path from ``source`` to ``target`` of the
    product of the edge weights, times ``E1`` of the source. Zero when the
    target is not on a strictly lower level. For ``source == target`` the
    bare ``E1`` is returned. Experimental: compare with :func:`h_matrix`.

    Raises
    ------
    NodeNotInGraph

    """
    i, j = graph.index(source), graph.index(target)
    e1 = offdiagonal_energy(source, coupling)
    if i == j:
        return e1
    if graph.labels[j][0] >= graph.labels[i][0]:
        return coupling.zero()
    total = 0
    for path in graph.paths(source, target):
        w = 1
        for edge in path:
            w *= edge.weight
        total += w
    return e1 * total
