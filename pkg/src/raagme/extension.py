"""Finite balls of the extension graph of a right-angled Artin group.

The extension graph has one vertex per cyclic parabolic subgroup (all
conjugates of the vertex subgroups), with edges between commuting ones.  A
ball of radius L collects the canonical handles whose conjugator has word
length at most L; the radius-0 slice is a copy of the defining graph.  The
untransvectable restriction keeps the nodes whose type vertex is
untransvectable.

Structural facts about the infinite graph are exposed as finite-scale
checks: removing the star of a node separates each remaining node from its
translate under the node's subgroup, and (for groups with finite outer
automorphism group) removing a proper subset of a star that is not exactly
the link leaves everything connected.  Assertions are made on interior nodes
(conjugator length at most L-1) only; boundary observations are reported but
are not violations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InputError
from .combinatorics import has_finite_out, untransvectable_vertices
from .words import NormalFormWord, canonical_parabolic, enumerate_cyclic_handles


@dataclass(frozen=True)
class ExtNode:
    """A canonical cyclic parabolic handle inside a ball."""

    conjugator: tuple
    vertex: str
    length: int
    untransvectable: bool

    def key(self):
        return (self.conjugator, self.vertex)

    def sort_key(self):
        return (self.length, self.vertex, self.conjugator)


class ExtBall:
    """Radius-L truncation of the extension graph of a RAAG presentation."""

    def __init__(self, presentation, L, nodes, adjacency):
        self.presentation = presentation
        self.L = L
        self.nodes = tuple(nodes)
        self.adjacency = tuple(frozenset(a) for a in adjacency)
        self._index = {node.key(): i for i, node in enumerate(self.nodes)}

    @property
    def n_nodes(self):
        return len(self.nodes)

    @property
    def n_edges(self):
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self):
        return sorted((i, j) for i in range(self.n_nodes)
                      for j in self.adjacency[i] if i < j)

    def node_index(self, conjugator, vertex):
        try:
            return self._index[(tuple(conjugator), vertex)]
        except KeyError:
            raise InputError(f"no node {conjugator!r} . <{vertex}> in this ball") from None

    def standard_node(self, vertex):
        return self.node_index((), vertex)

    def star_of(self, i):
        return self.adjacency[i] | {i}

    def interior(self):
        """Indices of nodes with conjugator length at most L-1."""
        return frozenset(i for i, n in enumerate(self.nodes) if n.length <= self.L - 1)

    def handle(self, i):
        node = self.nodes[i]
        return canonical_parabolic(self.presentation, node.conjugator, {node.vertex})


def build_ext_ball(p, L):
    """All canonical cyclic handles of conjugator length <= L, with commutation edges."""
    if L < 0:
        raise InputError("ball radius must be >= 0")
    if not p.is_unit_rank():
        raise InputError("extension graph defined for RAAG presentations (all ranks 1)")
    g = p.graph
    untrans = set(untransvectable_vertices(g)) if g.n_vertices else set()
    handles = enumerate_cyclic_handles(p, g.vertices, g.vertices, L)
    nodes = []
    for h in handles:
        nodes.append(ExtNode(
            conjugator=h.conjugator,
            vertex=h.type_vertex,
            length=h.conjugator_length,
            untransvectable=h.type_vertex in untrans,
        ))
    nodes.sort(key=ExtNode.sort_key)
    gens = [canonical_parabolic(p, n.conjugator, {n.vertex}).generator_word()
            for n in nodes]
    inverses = [w.inverse() for w in gens]
    adjacency = [set() for _ in nodes]
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            commutator = gens[i] * gens[j] * inverses[i] * inverses[j]
            if commutator.is_identity():
                adjacency[i].add(j)
                adjacency[j].add(i)
    return ExtBall(p, L, nodes, adjacency)


def ue_restriction(b):
    """Full subgraph of the ball on the untransvectable nodes."""
    keep = [i for i, n in enumerate(b.nodes) if n.untransvectable]
    renum = {old: new for new, old in enumerate(keep)}
    nodes = [b.nodes[i] for i in keep]
    adjacency = [frozenset(renum[j] for j in b.adjacency[i] if j in renum) for i in keep]
    return ExtBall(b.presentation, b.L, nodes, adjacency)


def ball_graph(b, prefix="n"):
    """The ball as a plain SimpleGraph with synthetic deterministic labels."""
    from .graphs import SimpleGraph
    width = len(str(max(b.n_nodes - 1, 0)))
    labels = [f"{prefix}{i:0{width}d}" for i in range(b.n_nodes)]
    edges = [(labels[i], labels[j]) for i, j in b.edges()]
    return SimpleGraph(labels, edges)


def _components(b, removed):
    """Connected components of the ball minus a set of node indices."""
    alive = [i for i in range(b.n_nodes) if i not in removed]
    comp = {}
    label = 0
    for root in alive:
        if root in comp:
            continue
        stack = [root]
        comp[root] = label
        while stack:
            i = stack.pop()
            for j in b.adjacency[i]:
                if j not in removed and j not in comp:
                    comp[j] = label
                    stack.append(j)
        label += 1
    return comp, label


def translate_index(b, v_index, w_index):
    """Index of the conjugate of node w by the generator of node v, or None.

    The translate is the canonical handle of g_v (w subgroup) g_v^-1 where
    g_v is the generator of the cyclic subgroup at v; None when it falls
    outside the ball.
    """
    p = b.presentation
    gv = b.handle(v_index).generator_word()
    w = b.nodes[w_index]
    conj = gv * NormalFormWord(p, w.conjugator)
    h = canonical_parabolic(p, conj, {w.vertex})
    return b._index.get((h.conjugator, w.vertex))


@dataclass(frozen=True)
class SeparationEntry:
    node: int
    translate: int
    same_component: bool
    interior: bool


@dataclass(frozen=True)
class SeparationReport:
    """Outcome of the star-removal separation check at one node.

    For every node outside the closed star of v whose translate under the
    subgroup at v also lies in the ball (and outside the star), the entry
    records whether node and translate fall in the same component of the
    ball minus the star.  Entries with both endpoints interior and
    same_component True are violations; there must be none.
    """

    center: int
    component_count: int
    entries: tuple
    skipped_outside_ball: int

    @property
    def violations(self):
        return tuple(e for e in self.entries if e.same_component and e.interior)


def star_separation_check(b, v_index):
    if not 0 <= v_index < b.n_nodes:
        raise InputError(f"node index {v_index} not in the ball")
    if b.presentation.graph.n_vertices <= 1:
        raise DomainError("star separation requires a non-cyclic ambient group")
    removed = b.star_of(v_index)
    comp, count = _components(b, removed)
    interior = b.interior()
    entries = []
    skipped = 0
    for w in range(b.n_nodes):
        if w in removed:
            continue
        t = translate_index(b, v_index, w)
        if t is None:
            skipped += 1
            continue
        if t in removed:  # cannot happen: the star of v is invariant
            skipped += 1
            continue
        entries.append(SeparationEntry(
            node=w,
            translate=t,
            same_component=comp[w] == comp[t],
            interior=w in interior and t in interior,
        ))
    return SeparationReport(v_index, count, tuple(entries), skipped)


@dataclass(frozen=True)
class ConnectivityReport:
    """Outcome of the star-complement connectivity check.

    ``interior_connected`` states that all interior nodes outside the
    removed set lie in a single component of the punctured ball; components
    made of boundary nodes only are counted separately and are not
    violations.
    """

    center: int
    removed: tuple
    interior_connected: bool
    component_count: int
    boundary_only_components: int


def star_complement_connectivity_check(b, v_index, x_indices):
    if not 0 <= v_index < b.n_nodes:
        raise InputError(f"node index {v_index} not in the ball")
    if not has_finite_out(b.presentation.graph):
        raise DomainError(
            "hypothesis violated: Out of the ambient group must be finite "
            "(the defining graph admits a transvection or a partial conjugation)")
    x = frozenset(x_indices)
    stv = b.star_of(v_index)
    lkv = b.adjacency[v_index]
    if not x <= stv or x == stv:
        raise DomainError("hypothesis violated: the removed set must be a proper subset "
                          "of the star of the node")
    if x == lkv:
        raise DomainError("hypothesis violated: the removed set must differ from the link "
                          "of the node")
    comp, count = _components(b, x)
    interior = b.interior() - x
    interior_labels = {comp[i] for i in interior}
    boundary_only = count - len(set(comp.values()) & interior_labels)
    return ConnectivityReport(
        center=v_index,
        removed=tuple(sorted(x)),
        interior_connected=len(interior_labels) <= 1,
        component_count=count,
        boundary_only_components=boundary_only,
    )


def ball_json(b):
    """Node/edge document for export; deterministic ordering."""
    nodes = []
    for i, n in enumerate(b.nodes):
        nodes.append({
            "id": i,
            "conjugator": [[v, e] for v, e in n.conjugator],
            "type": n.vertex,
            "length": n.length,
            "untransvectable": n.untransvectable,
        })
    return {
        "L": b.L,
        "node_count": b.n_nodes,
        "edge_count": b.n_edges,
        "nodes": nodes,
        "edges": [[i, j] for i, j in b.edges()],
    }
