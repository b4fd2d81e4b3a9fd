#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of the
#   csmpy Project.
# License: MIT

# =============================================================================
# DOCS
# =============================================================================

"""csmpy core class."""

# =============================================================================
# IMPORTS
# =============================================================================

import time
import datetime
import logging
from fractions import Fraction

import attr

from . import (
    hamiltonian as ham, scalars, spectrum, states as sts,
    validators as vlds)


# =============================================================================
# CONSTANTS
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
#  TIME CLASS
# =============================================================================

@attr.s(frozen=True)
class BuildStats:
    """Statistics about the sector construction.

    Attributes
    ----------
    buildtime: float
        The number of seconds expended building the graph and the matrix.
    coupling_set_at: datetime.datetime
        The date and time when the coupling was set.
    datetime: datetime.datetime
        The date and time of build.
    """

    buildtime = attr.ib()
    coupling_set_at = attr.ib()
    datetime = attr.ib()


# =============================================================================
# CONVERTERS
# =============================================================================

def _to_state(value):
    if isinstance(value, sts.SectorState):
        return value
    return sts.make_state(value)


def _to_coupling(value):
    if isinstance(value, scalars.Coupling):
        return value
    if isinstance(value, str):
        return scalars.Coupling.parse(value)
    return scalars.Coupling.fixed(value)


# =============================================================================
# MAIN CLASS
# =============================================================================

@attr.s
class CSMSector(object):
    """Sector of the anti-periodic Calogero-Sutherland model.

    The family of a root state is organised as a squeeze graph, the
    gauge transformed Hamiltonian is built on it as an exact triangular
    matrix and its eigenpairs are solved on demand.

    Parameters
    ----------
    root: SectorState or sequence of int
        The highest level mother state, e.g. ``(6, 4, 3, 1)``.
    coupling: Coupling, str, int or Fraction, optional
        The coupling A. Strings are parsed with
        :meth:`csmpy.scalars.Coupling.parse`. Default: symbolic.
    full_sector: bool, optional
        Use every state of the same N and total instead of the family of
        ``root``. Default: False

    Attributes
    ----------
    graph_: csmpy.states.SqueezeGraph
        The squeeze graph of ``root``.
    basis_: csmpy.states.SectorBasis
        The basis the matrix is built on: graph order for a family, the
        dominance-extending total order for a full sector.
    matrix_: csmpy.hamiltonian.TriMatrix
        The Hamiltonian.
    time_: csmpy.core.BuildStats
        Object containing the building time and the date of build.

    """

    root = attr.ib(converter=_to_state)
    coupling = attr.ib(factory=scalars.Coupling.symbolic,
                       converter=_to_coupling)
    full_sector = attr.ib(
        default=False, validator=attr.validators.instance_of(bool))

    graph_ = attr.ib(init=False, repr=False)
    basis_ = attr.ib(init=False, repr=False)
    matrix_ = attr.ib(init=False, repr=False)
    time_ = attr.ib(init=False, repr=False)

    # =========================================================================
    # ATTRS INITIALIZATION
    # =========================================================================

    def __attrs_post_init__(self):
        """Build the graph, the basis and the matrix."""
        t0 = time.time()

        self.graph_ = sts.build_squeeze_graph(self.root)
        if self.full_sector:
            self.basis_ = sts.enumerate_sector(
                self.root.n_particles, self.root.total)
        else:
            self.basis_ = self.graph_.basis()
        self.matrix_ = ham.h_matrix(self.basis_, self.coupling)

        now = datetime.datetime.now()
        self.time_ = BuildStats(
            buildtime=time.time() - t0, coupling_set_at=now, datetime=now)

    def __len__(self):
        """Number of basis states."""
        return len(self.basis_)

    # =========================================================================
    # COUPLING
    # =========================================================================

    def with_coupling(self, coupling, inplace=False):
        """Change the coupling and rebuild the matrix.

        The graph does not depend on the coupling and is kept.

        Parameters
        ----------
        coupling: Coupling, str, int or Fraction
        inplace: boolean, optional (default=False)
            If its True, set the coupling on the current instance and return
            None. Otherwise a new instance is created and returned.

        """
        coupling = _to_coupling(coupling)
        if inplace:
            t0 = time.time()
            self.coupling = coupling
            self.matrix_ = ham.h_matrix(self.basis_, coupling)
            self.time_ = BuildStats(
                buildtime=self.time_.buildtime + time.time() - t0,
                datetime=self.time_.datetime,
                coupling_set_at=datetime.datetime.now())
        else:
            return CSMSector(
                root=self.root, coupling=coupling,
                full_sector=self.full_sector)

    # =========================================================================
    # SPECTRUM API
    # =========================================================================

    def eigenvalues(self):
        """``(state, E0)`` pairs in basis order."""
        return spectrum.eigenvalues(self.matrix_)

    def eigenvector(self, label=None):
        """Eigenpair of ``label`` (default: the root).

        Raises
        ------
        DegenerateDiagonal, StructuralDegeneracy

        """
        label = self.root if label is None else _to_state(label)
        return spectrum.eigenvector(self.matrix_, label)

    def eigenpairs(self, skip_degenerate=False):
        """Eigenpairs of every basis state.

        Parameters
        ----------
        skip_degenerate: bool, optional
            Log and skip labels with a vanishing pivot instead of raising.

        Returns
        -------
        list of EigenPair

        """
        pairs = []
        for state in self.basis_:
            try:
                pairs.append(spectrum.eigenvector(self.matrix_, state))
            except vlds.DegenerateDiagonal as err:
                if not skip_degenerate:
                    raise
                logger.warning("Unsolved eigenvector of %s: %s", state, err)
        return pairs

    def pivot_roots(self, label=None):
        """Rational couplings where the solve of ``label`` degenerates."""
        label = self.root if label is None else _to_state(label)
        return spectrum.pivot_roots(self.matrix_, label)

    def pseudo_momenta(self, label=None, length=1.):
        """Pseudo-momenta of ``label`` (default: the root).

        Needs a fixed coupling.

        """
        if self.coupling.is_symbolic:
            raise vlds.MixedScalarMode(
                "Pseudo-momenta need a fixed coupling")
        label = self.root if label is None else _to_state(label)
        return spectrum.pseudo_momenta(label, self.coupling.value, length)

    def offset_report(self):
        """Pseudo-momentum versus diagonal energies over the basis."""
        if self.coupling.is_symbolic:
            raise vlds.MixedScalarMode(
                "Pseudo-momentum offsets need a fixed coupling")
        return spectrum.compare_pseudomomentum_energy(
            self.basis_, Fraction(self.coupling.value))
