"""Shared fixtures-adjacent tools: small-graph atlas and independent oracles.

Everything here is deliberately naive: these are the brute-force reference
implementations the library is checked against, written straight from the
definitions with no shared code paths beyond the SimpleGraph container.
"""

from __future__ import annotations

import itertools

from raagme.graphs import SimpleGraph
from raagme.isomorphism import canonical_form


def graph_atlas(max_n):
    """One representative per isomorphism class, for 1..max_n vertices.

    Built by extending each (n-1)-vertex representative with a new vertex
    attached to every subset of the old ones, deduplicating canonically.
    """
    atlas = {1: [SimpleGraph(["v1"])]}
    for n in range(2, max_n + 1):
        out = {}
        new = f"v{n}"
        for g in atlas[n - 1]:
            verts = g.sorted_vertices()
            edges = g.edges()
            for mask in range(1 << (n - 1)):
                extra = [(verts[i], new) for i in range(n - 1) if mask >> i & 1]
                h = SimpleGraph(verts + [new], edges + extra)
                key = canonical_form(h).key
                if key not in out:
                    out[key] = h
        atlas[n] = list(out.values())
    return atlas


# known counts of simple graphs up to isomorphism on 1..7 vertices
ATLAS_SIZES = [1, 2, 4, 11, 34, 156, 1044]


# -- brute-force automorphism-inventory oracle --------------------------------

def brute_link(g, v):
    return set(g.neighbors(v))


def brute_star(g, v):
    return set(g.neighbors(v)) | {v}


def brute_transvections(g):
    verts = g.sorted_vertices()
    out = []
    for v in verts:
        for w in verts:
            if v != w and brute_link(g, v) <= brute_star(g, w):
                out.append((v, w))
    return out


def brute_components(g, keep):
    keep = set(keep)
    comps = []
    while keep:
        root = min(keep)
        comp = {root}
        frontier = [root]
        while frontier:
            x = frontier.pop()
            for y in g.neighbors(x):
                if y in keep and y not in comp:
                    comp.add(y)
                    frontier.append(y)
        keep -= comp
        comps.append(frozenset(comp))
    return sorted(comps, key=min)


def brute_pc_sites(g):
    out = []
    for v in g.sorted_vertices():
        rest = set(g.vertices) - brute_star(g, v)
        comps = brute_components(g, rest)
        if len(comps) >= 2:
            out.extend((v, c) for c in comps)
    return out


def brute_automorphism_count(g):
    verts = g.sorted_vertices()
    count = 0
    for perm in itertools.permutations(verts):
        img = dict(zip(verts, perm))
        if all((img[u] in g.neighbors(img[w])) == (u in g.neighbors(w))
               for u in verts for w in verts if u != w):
            count += 1
    return count


# -- shuffle-closure word oracle ----------------------------------------------

def shuffle_oracle_nf(adjacency, syllables):
    """Canonical form by exhaustive search over shuffle and merge moves.

    States are syllable tuples; moves swap adjacent commuting syllables or
    merge adjacent same-vertex syllables (dropping zero exponents).  The
    result is the lexicographically least state of minimal length.
    """
    start = tuple(syllables)
    seen = {start}
    stack = [start]
    while stack:
        w = stack.pop()
        for i in range(len(w) - 1):
            (v1, e1), (v2, e2) = w[i], w[i + 1]
            if v1 == v2:
                m = e1 + e2
                mid = ((v1, m),) if m != 0 else ()
                nxt = w[:i] + mid + w[i + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
            elif v2 in adjacency[v1]:
                nxt = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    best_len = min(len(w) for w in seen)
    return min(w for w in seen if len(w) == best_len)


# -- stepwise clique-reduction oracle ------------------------------------------

def merge_pair(graph, ranks, x, y):
    """Merge two adjacent vertices with equal closed stars into min(x, y)."""
    keep, drop = min(x, y), max(x, y)
    verts = [v for v in graph.sorted_vertices() if v != drop]
    edges = set()
    for u, w in graph.edges():
        u2 = keep if u == drop else u
        w2 = keep if w == drop else w
        if u2 != w2:
            edges.add((min(u2, w2), max(u2, w2)))
    new_ranks = {v: r for v, r in ranks.items() if v != drop}
    new_ranks[keep] = ranks[x] + ranks[y]
    return SimpleGraph(verts, sorted(edges)), new_ranks


def mergeable_pairs(graph):
    verts = graph.sorted_vertices()
    out = []
    for i, x in enumerate(verts):
        for y in verts[i + 1:]:
            if y in graph.neighbors(x) and \
                    brute_star(graph, x) == brute_star(graph, y):
                out.append((x, y))
    return out


def all_merge_results(graph, ranks):
    """Every fully-merged (graph, ranks) reachable by stepwise pair merges."""
    results = []
    seen = set()

    def rec(g, r):
        pairs = mergeable_pairs(g)
        if not pairs:
            key = (canonical_form(g, r).key,)
            if key not in seen:
                seen.add(key)
                results.append((g, r))
            return
        for x, y in pairs:
            rec(*merge_pair(g, r, x, y))

    rec(graph, dict(ranks))
    return results
