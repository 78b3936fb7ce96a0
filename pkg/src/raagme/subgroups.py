"""Finite-index RAAG subgroups obtained by gluing copies of the graph along a star.

Sending one vertex generator to 1 in Z/k and every other generator to 0
defines a surjection whose kernel is again a right-angled Artin group, of
index k; its defining graph consists of k copies of the original graph glued
along the closed star of the chosen vertex.  Closing under this construction
(up to composition depth and vertex budget) enumerates a family of
finite-index subgroups; the search makes no completeness claim, so consumers
must treat exhaustion as "unknown", never as "no".
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InputError
from .graphs import SimpleGraph, star
from .combinatorics import has_finite_out
from .isomorphism import canonical_form


def star_gluing_kernel(g, v, k):
    """Defining graph of the index-k kernel at vertex v.

    k disjoint copies of g are identified along st(v); unshared vertices of
    copy i >= 2 are relabeled "c<i>.<label>".  The vertex count is
    k * |V| - (k-1) * |st(v)|.
    """
    if not g.has_vertex(v):
        raise InputError(f"unknown vertex {v!r}")
    if not isinstance(k, int) or k < 2:
        raise InputError(f"gluing multiplicity must be an integer >= 2, got {k!r}")
    shared = star(g, v)
    verts = list(g.sorted_vertices())
    edges = g.edges()
    new_vertices = list(verts)
    new_edges = set(edges)
    for i in range(2, k + 1):
        def name(x, i=i):
            return x if x in shared else f"c{i}.{x}"
        for x in verts:
            if x not in shared:
                fresh = name(x)
                if g.has_vertex(fresh):
                    raise InputError(
                        f"fresh label {fresh!r} collides with an existing vertex")
                new_vertices.append(fresh)
        for x, y in edges:
            nx, ny = name(x), name(y)
            new_edges.add((min(nx, ny), max(nx, ny)))
    return SimpleGraph(new_vertices, sorted(new_edges))


@dataclass(frozen=True)
class FiniteIndexWitness:
    """A chain of star gluings from the base graph, with its total index."""

    chain: tuple          # ((vertex, k), ...) applied left to right
    index: int            # product of the k's
    graph: SimpleGraph

    def replay(self, base):
        """Re-apply the chain from the base graph; must reproduce graph."""
        g = base
        for v, k in self.chain:
            g = star_gluing_kernel(g, v, k)
        return g

    def chain_json(self):
        return [{"vertex": v, "k": k} for v, k in self.chain]


@dataclass(frozen=True)
class EnumerationResult:
    witnesses: tuple
    truncated: bool

    def graphs(self):
        return [w.graph for w in self.witnesses]


def enumerate_findex_graphs(g, max_vertices, max_steps):
    """Isomorphism classes of graphs reachable by composed star gluings.

    Requires the base group to have finite outer automorphism group.
    Breadth-first closure of {g} under star_gluing_kernel at every vertex
    and every multiplicity whose result stays within ``max_vertices``, to
    composition depth ``max_steps``; de-duplicated up to isomorphism, each
    class keeping the first witness found (smallest depth, deterministic
    order).  ``truncated`` is set when either bound cut the search, so an
    unmatched target means "not found within budget", not "does not exist".
    """
    if max_vertices < 0 or max_steps < 0:
        raise InputError("enumeration bounds must be >= 0")
    if not has_finite_out(g):
        raise DomainError(
            "hypothesis violated: Out of the base group must be finite "
            "(the defining graph admits a transvection or a partial conjugation)")
    base = FiniteIndexWitness((), 1, g)
    seen = {canonical_form(g).key: base}
    witnesses = [base]
    frontier = [base]
    # Size-pruned gluings only ever lead to graphs above the vertex budget
    # (the vertex count never shrinks along a chain), so the search is only
    # genuinely cut short when the depth limit leaves a frontier unexplored.
    truncated = g.n_vertices > max_vertices
    for _ in range(max_steps):
        if not frontier:
            break
        nxt = []
        for w in frontier:
            cur = w.graph
            n = cur.n_vertices
            for v in cur.sorted_vertices():
                st_size = len(star(cur, v))
                if st_size == n:
                    # gluing along the whole graph returns the same graph
                    # for every k; a single k is enough for iso classes
                    ks = [2] if n <= max_vertices else []
                else:
                    ks = []
                    k = 2
                    while k * n - (k - 1) * st_size <= max_vertices:
                        ks.append(k)
                        k += 1
                for k in ks:
                    child = star_gluing_kernel(cur, v, k)
                    key = canonical_form(child).key
                    if key in seen:
                        continue
                    cw = FiniteIndexWitness(w.chain + ((v, k),), w.index * k, child)
                    seen[key] = cw
                    witnesses.append(cw)
                    nxt.append(cw)
        frontier = nxt
    if frontier:
        truncated = True
    return EnumerationResult(tuple(witnesses), truncated)
