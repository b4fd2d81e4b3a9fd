#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of the
#   csmpy Project.
# License: MIT

# =============================================================================
# DOCS
# =============================================================================

"""Sector states and the squeezing (mother/daughter) graph.

A sector state is an ordered set of N bosonic quantum numbers
``n_1 >= ... >= n_N``. Squeezing a pair of distinct values ``a > b`` with
``a - b >= 2`` into ``a - 1, b + 1`` lowers the state in dominance order
and produces a daughter. The daughters reachable from a root form its
family, organised in levels of mutually unreachable states.

"""

# =============================================================================
# IMPORTS
# =============================================================================

import collections
import enum
import logging
import time
import datetime

import attr

from . import partitions as parts, validators as vlds


# =============================================================================
# CONSTANTS
# =============================================================================

logger = logging.getLogger(__name__)


class Irreducibility(enum.Enum):
    """Classification of childless states."""

    REDUCIBLE = "reducible"
    TYPE1 = "type1"
    TYPE2 = "type2"


# =============================================================================
# STATES
# =============================================================================

@attr.s(frozen=True, repr=False)
class SectorState:
    """N quantum numbers stored as a shape plus a Galilean shift.

    The canonical form has ``shift = min(n)`` so the shape's smallest part
    (padded with zeros up to N) is 0. Galilean copies of the same
    excitation share a shape.

    Parameters
    ----------
    shape: Partition
        ``n_j - shift`` with the zeros stripped.
    shift: int
        The Galilean offset.
    n_particles: int
        N, at least 1 and at least the length of the shape.

    """

    shape = attr.ib(validator=attr.validators.instance_of(parts.Partition))
    shift = attr.ib()
    n_particles = attr.ib()

    @n_particles.validator
    def _validate_n_particles(self, attribute, value):
        vlds.validate_n_particles(value)
        if self.shape.length > value:
            raise vlds.LengthExceedsN(
                "SectorState: shape {} has more than {} parts".format(
                    self.shape, value))

    @property
    def quantum_numbers(self):
        """The N quantum numbers ``n_1 >= ... >= n_N``."""
        return tuple(p + self.shift for p in self.shape.padded(
            self.n_particles))

    @property
    def total(self):
        """Sum of the quantum numbers."""
        return self.shape.weight + self.shift * self.n_particles

    def partition(self):
        """The quantum numbers as a partition (they must be >= 0)."""
        return parts.make_partition(self.quantum_numbers)

    def __repr__(self):
        return "SectorState({})".format(str(self))

    def __str__(self):
        return "|" + ",".join(str(n) for n in self.quantum_numbers) + "⟩"

    def to_json(self):
        """The quantum numbers as a JSON array."""
        return list(self.quantum_numbers)


def make_state(values):
    """Create the canonical state of non-increasing integers ``values``."""
    values = vlds.validate_quantum_numbers(values)
    shift = values[-1]
    return SectorState(
        shape=parts.Partition(tuple(v - shift for v in values if v != shift)),
        shift=shift, n_particles=len(values))


def state_from_partition(k, n_particles, shift=0):
    """State with quantum numbers ``k_j + shift``, ``k`` padded to N."""
    k = parts.make_partition(k)
    vlds.validate_n_particles(n_particles)
    return make_state(tuple(p + shift for p in k.padded(n_particles)))


def _state_key(state):
    return parts.order_key(state.quantum_numbers)


@attr.s(frozen=True)
class SectorBasis:
    """Totally ordered states of fixed N and fixed total.

    The order must extend dominance (dominant states first) for the
    Hamiltonian to be upper triangular.

    """

    states = attr.ib(converter=tuple)
    n_particles = attr.ib()
    total = attr.ib()
    _index = attr.ib(init=False, repr=False, eq=False)

    def __attrs_post_init__(self):
        object.__setattr__(
            self, "_index", {s: i for i, s in enumerate(self.states)})
        for s in self.states:
            if s.n_particles != self.n_particles or s.total != self.total:
                raise vlds.InvalidRoot(
                    "SectorBasis: {} does not belong to the sector N={}, "
                    "total={}".format(s, self.n_particles, self.total))

    def __len__(self):
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __getitem__(self, idx):
        return self.states[idx]

    def __contains__(self, state):
        return state in self._index

    def index(self, state):
        """Position of ``state`` in the basis."""
        try:
            return self._index[state]
        except KeyError:
            raise vlds.BasisNotClosed(
                "SectorBasis: {} is not in the basis".format(state))

    def to_json(self):
        """List of quantum-number arrays."""
        return [s.to_json() for s in self.states]


# =============================================================================
# SQUEEZING
# =============================================================================

def squeeze(state, j, k, p=1):
    """Move ``p`` units from ``n_j`` to ``n_k`` and re-sort.

    Indices are 0-based positions in the quantum numbers, ``j < k``, and
    ``1 <= p <= n_j - n_k - 1``.

    Raises
    ------
    SqueezeOutOfRange

    """
    n = list(state.quantum_numbers)
    if not (0 <= j < k < len(n)):
        raise vlds.SqueezeOutOfRange(
            "Squeeze: need 0 <= j < k < {}. Got j={}, k={}".format(
                len(n), j, k))
    if not 1 <= p <= n[j] - n[k] - 1:
        raise vlds.SqueezeOutOfRange(
            "Squeeze: p={} not in [1, {}] for {}".format(
                p, n[j] - n[k] - 1, state))
    n[j] -= p
    n[k] += p
    return make_state(sorted(n, reverse=True))


@attr.s(frozen=True)
class Daughter:
    """One squeeze edge: the daughter, its weight and the value pair."""

    state = attr.ib()
    weight = attr.ib()
    pair = attr.ib()
    multiplicities = attr.ib()


def daughters(state):
    """All one-unit squeezes of pairs of distinct values.

    Every pair of values ``a > b`` with ``a - b >= 2`` contributes one
    edge of weight ``nu(a) * nu(b)``, ``nu`` being the multiplicity of a
    value in the mother. Edges are listed by ascending daughter
    (lexicographic), then by pair.

    Returns
    -------
    list of Daughter

    """
    counts = collections.Counter(state.quantum_numbers)
    values = sorted(counts, reverse=True)
    out = []
    for ia, a in enumerate(values):
        for b in values[ia + 1:]:
            if a - b < 2:
                continue
            new = collections.Counter(counts)
            new[a] -= 1
            new[b] -= 1
            new[a - 1] += 1
            new[b + 1] += 1
            n = sorted(new.elements(), reverse=True)
            out.append(Daughter(
                state=make_state(n), weight=counts[a] * counts[b],
                pair=(a, b), multiplicities=(counts[a], counts[b])))
    out.sort(key=lambda d: (_state_key(d.state), d.pair))
    return out


def classify_irreducible(state):
    """Reducible, or one of the two childless types.

    Type 1: all quantum numbers equal. Type 2: exactly two values ``m``
    and ``m - 1``.

    """
    values = set(state.quantum_numbers)
    if len(values) == 1:
        return Irreducibility.TYPE1
    if len(values) == 2 and max(values) - min(values) == 1:
        return Irreducibility.TYPE2
    return Irreducibility.REDUCIBLE


def _family(root):
    seen = {root}
    queue = collections.deque([root])
    while queue:
        for d in daughters(queue.popleft()):
            if d.state not in seen:
                seen.add(d.state)
                queue.append(d.state)
    return seen


def enumerate_sector(n_particles, total, root=None):
    """States of a sector, dominant first.

    Parameters
    ----------
    n_particles: int
        N.
    total: int
        Sum of the quantum numbers.
    root: SectorState, optional
        If given, only the root and its squeeze descendants are returned.
        Otherwise every non-increasing N-tuple of non-negative integers
        with the given sum.

    Returns
    -------
    SectorBasis

    Raises
    ------
    InvalidRoot

    """
    vlds.validate_n_particles(n_particles)
    vlds.validate_int(total, "Total")
    if root is not None:
        if root.n_particles != n_particles or root.total != total:
            raise vlds.InvalidRoot(
                "Sector: root {} is not in the sector N={}, total={}".format(
                    root, n_particles, total))
        states = _family(root)
    else:
        states = [
            state_from_partition(k, n_particles)
            for k in parts.partitions_of(total, max_length=n_particles)]
    states = sorted(states, key=_state_key, reverse=True)
    return SectorBasis(states=states, n_particles=n_particles, total=total)


def sector_of(root):
    """The sub-family basis generated by ``root``."""
    return enumerate_sector(root.n_particles, root.total, root=root)


# =============================================================================
# GRAPH
# =============================================================================

@attr.s(frozen=True)
class Edge:
    """Directed squeeze edge between two node indices."""

    source = attr.ib()
    target = attr.ib()
    weight = attr.ib()
    pair = attr.ib()
    multiplicities = attr.ib()


@attr.s(frozen=True)
class SqueezeGraph:
    """Family of a root organised in levels.

    Attributes
    ----------
    root: SectorState
        The highest level mother state.
    nodes: tuple of SectorState
        Levels descending; inside a level by the index ``mu``.
    labels: tuple of (int, int)
        The ``(u, mu)`` label of every node.
    edges: tuple of Edge
        Squeeze edges between node indices.
    buildtime: float
        Seconds spent building the graph.

    """

    root = attr.ib()
    nodes = attr.ib(converter=tuple)
    labels = attr.ib(converter=tuple)
    edges = attr.ib(converter=tuple)
    buildtime = attr.ib(default=0., eq=False, repr=False)
    built_at = attr.ib(default=None, eq=False, repr=False)

    _index = attr.ib(init=False, repr=False, eq=False)

    def __attrs_post_init__(self):
        object.__setattr__(
            self, "_index", {s: i for i, s in enumerate(self.nodes)})

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, state):
        return state in self._index

    def index(self, state):
        """Node index of ``state``."""
        try:
            return self._index[state]
        except KeyError:
            raise vlds.NodeNotInGraph(
                "SqueezeGraph: {} is not in the family of {}".format(
                    state, self.root))

    def label(self, state):
        """The ``(u, mu)`` label of a node."""
        return self.labels[self.index(state)]

    def label_str(self, state):
        """``|u⟩_mu`` text of a node."""
        return "|{}⟩_{}".format(*self.label(state))

    def levels(self):
        """Mapping level -> list of states, highest level first."""
        out = collections.OrderedDict()
        for state, (u, _) in zip(self.nodes, self.labels):
            out.setdefault(u, []).append(state)
        return out

    def children(self, state):
        """Outgoing edges of ``state``."""
        i = self.index(state)
        return [e for e in self.edges if e.source == i]

    def paths(self, source, target):
        """Every directed path from ``source`` to ``target`` as edge lists."""
        i, j = self.index(source), self.index(target)
        out_edges = collections.defaultdict(list)
        for e in self.edges:
            out_edges[e.source].append(e)

        def _walk(node):
            if node == j:
                yield []
                return
            for e in out_edges[node]:
                for rest in _walk(e.target):
                    yield [e] + rest

        if i == j:
            return [[]]
        return list(_walk(i))

    def basis(self):
        """The nodes as a :class:`SectorBasis` in graph order."""
        return SectorBasis(
            states=self.nodes, n_particles=self.root.n_particles,
            total=self.root.total)

    # =========================================================================
    # OUTPUT
    # =========================================================================

    def to_json(self):
        """``{"nodes": [...], "edges": [...]}``."""
        return {
            "nodes": [
                {"state": s.to_json(), "level": u, "index": mu}
                for s, (u, mu) in zip(self.nodes, self.labels)],
            "edges": [
                {"from": e.source, "to": e.target, "w": e.weight}
                for e in self.edges]}

    @classmethod
    def from_json(cls, data):
        """Inverse of :meth:`to_json` (pairs are recomputed)."""
        nodes = [make_state(n["state"]) for n in data["nodes"]]
        labels = [(n["level"], n["index"]) for n in data["nodes"]]
        edges = []
        for e in data["edges"]:
            mother = nodes[e["from"]]
            match = [
                d for d in daughters(mother)
                if d.state == nodes[e["to"]] and d.weight == e["w"]]
            d = match[0]
            edges.append(Edge(
                source=e["from"], target=e["to"], weight=e["w"],
                pair=d.pair, multiplicities=d.multiplicities))
        return cls(root=nodes[0], nodes=nodes, labels=labels, edges=edges)

    def render(self):
        """Indented ASCII rendering of the levels and their arrows."""
        lines = []
        for u, states in self.levels().items():
            lines.append("level {}:".format(u))
            for s in states:
                lines.append("  {} = {}".format(self.label_str(s), s))
                for e in self.children(s):
                    lines.append("      -> {} = {}  W={}".format(
                        self.label_str(self.nodes[e.target]),
                        self.nodes[e.target], e.weight))
        return "\n".join(lines)

    def mother_daughter_rows(self):
        """``(mother, daughter)`` text rows of the association table."""
        rows = []
        for i, s in enumerate(self.nodes):
            for e in (e for e in self.edges if e.source == i):
                d = self.nodes[e.target]
                rows.append((
                    "{} = {}".format(s, self.label_str(s)),
                    "{} = {}".format(d, self.label_str(d))))
        return rows

    def transition_rows(self):
        """``(transition, weight)`` text rows of the weights table."""
        rows = []
        for e in self.edges:
            a, b = e.multiplicities
            rows.append((
                "{} -> {}".format(
                    self.label_str(self.nodes[e.source]),
                    self.label_str(self.nodes[e.target])),
                "{}·{} = {}".format(a, b, e.weight)))
        return rows


def build_squeeze_graph(root):
    """Family of ``root`` with level labels and weighted edges.

    Levels come from the longest path from the root: a node at depth d
    sits at level ``D + 1 - d`` with D the largest depth, so the root has
    the highest level and every edge goes strictly down. Inside a level
    nodes are numbered by first discovery, visiting parents in graph order
    and each parent's daughters in ascending lexicographic order.

    Returns
    -------
    SqueezeGraph

    """
    t0 = time.time()

    family = sorted(_family(root), key=_state_key, reverse=True)
    kids = {s: daughters(s) for s in family}

    depth = {s: 0 for s in family}
    for s in family:
        for d in kids[s]:
            depth[d.state] = max(depth[d.state], depth[s] + 1)
    top = max(depth.values()) + 1
    level = {s: top - depth[s] for s in family}

    by_level = collections.defaultdict(list)
    by_level[top].append(root)
    for u in range(top, 0, -1):
        for s in by_level[u]:
            for d in kids[s]:
                bucket = by_level[level[d.state]]
                if d.state not in bucket:
                    bucket.append(d.state)

    nodes, labels = [], []
    for u in range(top, 0, -1):
        for mu, s in enumerate(by_level[u], start=1):
            nodes.append(s)
            labels.append((u, mu))
    index = {s: i for i, s in enumerate(nodes)}

    edges = [
        Edge(source=index[s], target=index[d.state], weight=d.weight,
             pair=d.pair, multiplicities=d.multiplicities)
        for s in nodes for d in kids[s]]
    edges.sort(key=lambda e: (e.source, e.target))

    buildtime = time.time() - t0
    logger.info(
        "Squeeze graph of %s: %d nodes, %d edges, %d levels (%.3fs)",
        root, len(nodes), len(edges), top, buildtime)
    return SqueezeGraph(
        root=root, nodes=nodes, labels=labels, edges=edges,
        buildtime=buildtime, built_at=datetime.datetime.now())
