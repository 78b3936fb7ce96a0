"""Finite simple graphs and the defining-graph operations everything else consumes.

A vertex is identified by its (non-empty, printable) string label.  Graphs are
immutable; all operations below are pure functions, so values can be shared
freely between concurrent tasks.  Orderings are deterministic everywhere:
whenever a collection of vertices or components is returned as a sequence, it
is sorted by label (components by their smallest label).
"""

from __future__ import annotations

from .errors import InputError


class SimpleGraph:
    """A finite simple graph: no loop edges, no multiple edges.

    >>> g = SimpleGraph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    >>> sorted(g.neighbors("b"))
    ['a', 'c']
    >>> g.has_edge("a", "c")
    False
    """

    __slots__ = ("_adj", "_hash")

    def __init__(self, vertices, edges=()):
        adj = {}
        for v in vertices:
            if not isinstance(v, str) or not v:
                raise InputError(f"vertex label must be a non-empty string, got {v!r}")
            if v in adj:
                raise InputError(f"duplicate vertex {v!r}")
            adj[v] = set()
        for e in edges:
            try:
                u, w = e
            except (TypeError, ValueError):
                raise InputError(f"edge must be a pair of vertices, got {e!r}") from None
            if u not in adj:
                raise InputError(f"unknown vertex {u!r} in edge {e!r}")
            if w not in adj:
                raise InputError(f"unknown vertex {w!r} in edge {e!r}")
            if u == w:
                raise InputError(f"loop edge at {u!r} not allowed in a simple graph")
            adj[u].add(w)
            adj[w].add(u)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._hash = None

    @property
    def vertices(self):
        return frozenset(self._adj)

    def sorted_vertices(self):
        return sorted(self._adj)

    def neighbors(self, v):
        try:
            return self._adj[v]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    def has_vertex(self, v):
        return v in self._adj

    def has_edge(self, u, w):
        return w in self.neighbors(u)

    def edges(self):
        """Sorted list of edges, each as a sorted pair."""
        out = []
        for v in sorted(self._adj):
            for w in self._adj[v]:
                if v < w:
                    out.append((v, w))
        return sorted(out)

    @property
    def n_vertices(self):
        return len(self._adj)

    @property
    def n_edges(self):
        return sum(len(ns) for ns in self._adj.values()) // 2

    def degree(self, v):
        return len(self.neighbors(v))

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._adj.items()))
        return self._hash

    def __repr__(self):
        return f"SimpleGraph({self.n_vertices} vertices, {self.n_edges} edges)"


def _check_subset(g, s):
    s = frozenset(s)
    for v in s:
        if not g.has_vertex(v):
            raise InputError(f"unknown vertex {v!r}")
    return s


def full_subgraph(g, s):
    """The full (induced) subgraph of g spanned by the vertex set s.

    Two vertices of the result are adjacent exactly when they are adjacent
    in g.
    """
    s = _check_subset(g, s)
    edges = [(u, w) for (u, w) in g.edges() if u in s and w in s]
    return SimpleGraph(sorted(s), edges)


def link(g, v):
    """All vertices adjacent to v."""
    return g.neighbors(v)


def star(g, v):
    """v together with all vertices adjacent to it."""
    return g.neighbors(v) | {v}


def link_and_star(g, v):
    """The pair (link, star) of a vertex."""
    lk = g.neighbors(v)
    return lk, lk | {v}


def perp(g, s):
    """Vertices outside s that are adjacent to every vertex of s.

    For a singleton {v} this is exactly the link of v.  Equals the
    intersection of the links of the members of s, minus s itself.
    """
    s = _check_subset(g, s)
    out = set(g.vertices) - s
    for v in s:
        out &= g.neighbors(v)
    return frozenset(out)


def opposite_graph(g):
    """The complement graph on the same vertex set (an involution)."""
    verts = g.sorted_vertices()
    edges = []
    for i, u in enumerate(verts):
        nbrs = g.neighbors(u)
        for w in verts[i + 1:]:
            if w not in nbrs:
                edges.append((u, w))
    return SimpleGraph(verts, edges)


def connected_components(g):
    """Components as a list of frozensets, ordered by smallest label."""
    seen = set()
    comps = []
    for root in g.sorted_vertices():
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def join_factors(g):
    """The unique maximal join decomposition of a non-empty graph.

    Returns the partition of the vertex set into the connected components of
    the complement graph, ordered by smallest label.  Any two vertices lying
    in distinct factors are adjacent in g, and no factor splits further as a
    join.
    """
    if g.n_vertices == 0:
        raise InputError("join decomposition is undefined for the empty graph")
    return connected_components(opposite_graph(g))


def is_complete(g):
    n = g.n_vertices
    return g.n_edges == n * (n - 1) // 2


# -- small constructors, mostly for tests and fixtures ------------------------

def path_graph(labels):
    labels = list(labels)
    return SimpleGraph(labels, list(zip(labels, labels[1:])))


def cycle_graph(labels):
    labels = list(labels)
    if len(labels) < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return SimpleGraph(labels, list(zip(labels, labels[1:])) + [(labels[-1], labels[0])])


def complete_graph(labels):
    labels = list(labels)
    return SimpleGraph(labels, [(u, w) for i, u in enumerate(labels) for w in labels[i + 1:]])


def edgeless_graph(labels):
    return SimpleGraph(list(labels))
