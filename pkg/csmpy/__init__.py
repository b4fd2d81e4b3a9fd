#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of the
#   csmpy Project.
# License: MIT

"""Exact spectra of the anti-periodic Calogero-Sutherland model.

csmpy builds the gauge transformed Hamiltonian of N particles on a ring on
the squeeze graph of a root state, solves its triangular eigenproblem
exactly (at a rational coupling or symbolically in A) and checks the
eigenvectors against Jack polynomials.
"""

__all__ = [
    "CSMSector", "Coupling", "CouplingFunction", "Branch", "Partition",
    "SectorState", "make_partition", "make_state", "build_squeeze_graph",
    "jack_gram_schmidt", "CSMError"]


__version__ = "0.1.0"


# =============================================================================
# IMPORTS
# =============================================================================

from .core import CSMSector  # noqa
from .partitions import Partition, make_partition  # noqa
from .scalars import Branch, Coupling, CouplingFunction  # noqa
from .states import SectorState, build_squeeze_graph, make_state  # noqa
from .symfunc import jack_gram_schmidt  # noqa
from .validators import CSMError  # noqa
