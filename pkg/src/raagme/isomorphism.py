"""Graph isomorphism via canonical labeling.

Canonical forms are computed by iterated color refinement plus
individualization with backtracking, so repeated calls agree and isomorphism
answers are reproducible byte for byte.  Vertices may carry arbitrary
mutually-comparable color tags (rank-colored presentations reuse this).  The
search is exponential in the worst case; the intended scale is defining
graphs and extension-graph balls of at most a few dozen vertices.
"""

from __future__ import annotations

import hashlib

from .errors import InputError


def _refine(n, adj, colors):
    """Stable 1-dimensional color refinement, canonically re-indexed."""
    while True:
        sigs = []
        for i in range(n):
            sigs.append((colors[i], tuple(sorted(colors[j] for j in adj[i]))))
        palette = {s: c for c, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


class _Canonizer:
    """Individualization-refinement search for the minimal labeling.

    The canonical key of a graph is the minimum, over all leaves of the
    search tree, of (refinement trace, leaf encoding).  Branches whose
    partial trace already exceeds the best known trace are pruned, and at
    every node the target-cell vertices are explored one per orbit of the
    automorphisms discovered so far that fix the individualized prefix
    pointwise (equivalent vertices span identical subtrees).
    """

    def __init__(self, verts, adj, init_colors):
        self.n = len(verts)
        self.verts = verts
        self.adj = adj
        self.init_colors = init_colors
        self.best = None          # (trace, key, order)
        self.automorphisms = []   # permutations as vertex->vertex lists

    def _leaf(self, colors, trace):
        order = sorted(range(self.n), key=lambda i: colors[i])
        pos = {v: p for p, v in enumerate(order)}
        rows = tuple(tuple(sorted(pos[j] for j in self.adj[v])) for v in order)
        key = (tuple(self.init_colors[v] for v in order), rows)
        if self.best is None or (trace, key) < (self.best[0], self.best[1]):
            self.best = (trace, key, order)
        elif (trace, key) == (self.best[0], self.best[1]):
            # two labelings with the same key differ by an automorphism
            other = self.best[2]
            sigma = [0] * self.n
            for a, b in zip(order, other):
                sigma[a] = b
            self.automorphisms.append(sigma)

    def _cell_orbits(self, cell, prefix):
        """Union-find roots of the cell under prefix-fixing automorphisms."""
        parent = {u: u for u in cell}

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        for sigma in self.automorphisms:
            if any(sigma[p] != p for p in prefix):
                continue
            for u in cell:
                v = sigma[u]
                if v in parent:
                    ru, rv = find(u), find(v)
                    if ru != rv:
                        parent[ru] = rv
        return find

    def _search(self, colors, trace, depth, prefix):
        colors = _refine(self.n, self.adj, colors)
        trace = trace + (tuple(sorted(colors)),)
        if self.best is not None:
            bt = self.best[0]
            k = len(trace)
            if trace[:k] > bt[:k]:
                return
        if len(set(colors)) == self.n:
            self._leaf(colors, trace)
            return
        # smallest color value with a non-singleton cell
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [i for i in range(self.n) if colors[i] == target]
        fresh = self.n + depth
        explored = []
        find = None
        known_auts = -1
        while True:
            # recompute orbits only when automorphisms found in an earlier
            # branch of this very node can prune the remaining candidates
            if len(self.automorphisms) != known_auts:
                known_auts = len(self.automorphisms)
                find = self._cell_orbits(cell, prefix) if known_auts else None
            if find is None:
                candidates = [u for u in cell if u not in explored]
            else:
                done = {find(e) for e in explored}
                candidates = [u for u in cell if find(u) not in done]
            if not candidates:
                return
            u = candidates[0]
            explored.append(u)
            child = list(colors)
            child[u] = fresh
            self._search(child, trace, depth + 1, prefix + (u,))

    def run(self):
        self._search(list(self.init_colors), (), 0, ())
        return self.best


def _prepare(g, colors):
    verts = g.sorted_vertices()
    index = {v: i for i, v in enumerate(verts)}
    adj = [sorted(index[w] for w in g.neighbors(v)) for v in verts]
    if colors is None:
        init = [0] * len(verts)
        palette_tags = ()
    else:
        tags = []
        for v in verts:
            if v not in colors:
                raise InputError(f"vertex {v!r} missing from the coloring")
            tags.append(colors[v])
        try:
            distinct = sorted(set(tags))
        except TypeError:
            raise InputError("color tags must be mutually comparable") from None
        palette = {t: c for c, t in enumerate(distinct)}
        init = [palette[t] for t in tags]
        palette_tags = tuple(distinct)
    return verts, adj, init, palette_tags


class CanonicalForm:
    """Canonical key plus the vertex ordering that realizes it."""

    __slots__ = ("key", "order")

    def __init__(self, key, order):
        self.key = key
        self.order = order  # tuple of vertex labels, canonical positions 0..n-1

    def mapping(self):
        return {v: p for p, v in enumerate(self.order)}

    def hexdigest(self):
        return hashlib.sha256(repr(self.key).encode("ascii")).hexdigest()


def canonical_form(g, colors=None):
    """Canonical form of a (possibly vertex-colored) graph.

    Two graphs have equal canonical keys if and only if there is a
    color-preserving isomorphism between them.
    """
    verts, adj, init, palette_tags = _prepare(g, colors)
    if not verts:
        return CanonicalForm((palette_tags, (), ()), ())
    _, key, order = _Canonizer(verts, adj, init).run()
    return CanonicalForm((palette_tags,) + key, tuple(verts[i] for i in order))


def canonical_hash(g, colors=None):
    """Deterministic hex digest of the canonical form."""
    return canonical_form(g, colors).hexdigest()


def find_isomorphism(g, h, colors_g=None, colors_h=None):
    """A color-preserving isomorphism g -> h as a dict, or None.

    Deterministic: the map is read off the two canonical labelings, so
    repeated calls agree, and the maps found for (g, h) and (h, g) are
    mutually inverse.
    """
    cg = canonical_form(g, colors_g)
    ch = canonical_form(h, colors_h)
    if cg.key != ch.key:
        return None
    iso = dict(zip(cg.order, ch.order))
    for u, w in g.edges():
        if not h.has_edge(iso[u], iso[w]):  # pragma: no cover - sanity guard
            raise AssertionError("canonical forms agreed but edge map failed")
    return iso


def are_isomorphic(g, h, colors_g=None, colors_h=None):
    return find_isomorphism(g, h, colors_g, colors_h) is not None


def automorphism_count(g, colors=None):
    """Order of the (color-preserving) automorphism group.

    Plain backtracking over refinement-compatible images; meant for small
    defining graphs, not for large highly symmetric inputs.
    """
    verts, adj, init, _ = _prepare(g, colors)
    n = len(verts)
    if n == 0:
        return 1
    colors_r = _refine(n, adj, list(init))
    adjsets = [frozenset(a) for a in adj]
    candidates = [[j for j in range(n) if colors_r[j] == colors_r[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: len(candidates[i]))
    image = [-1] * n
    used = [False] * n
    count = 0

    def extend(k):
        nonlocal count
        if k == n:
            count += 1
            return
        i = order[k]
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for t in range(k):
                a = order[t]
                if (a in adjsets[i]) != (image[a] in adjsets[j]):
                    ok = False
                    break
            if ok:
                image[i] = j
                used[j] = True
                extend(k + 1)
                used[j] = False
        image[i] = -1

    extend(0)
    return count
