"""Normal forms and parabolic-subgroup arithmetic in graph products.

Elements are words of syllables (vertex, exponent); for a rank-1 vertex the
exponent is a non-zero integer, for a rank-n vertex group a non-zero integer
vector of length n.  A word is reduced when no two syllables on the same
vertex can be brought together by shuffling across pairwise-commuting
syllables; reduction is performed by left-greedy piling.  Among all
shufflings of a reduced word we keep the lexicographically least (by vertex
label), which makes equality a tuple comparison.

Parabolic subgroups conjugate to a standard one are represented by canonical
handles: the conjugator is replaced by the shortlex-least representative of
its right coset modulo the normalizer of the standard subgroup, so two
handles are equal exactly when the subgroups are.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InputError
from .graphs import link, perp, star
from .combinatorics import is_transvectable_vertex, untransvectable_vertices
from .presentation import GraphProductPresentation


def _validate_syllable(p, syl):
    v, e = syl
    if not p.graph.has_vertex(v):
        raise InputError(f"generator {v!r} not in the presentation")
    r = p.rank(v)
    if r == 1:
        if not isinstance(e, int) or e == 0:
            raise InputError(f"exponent of {v!r} must be a non-zero integer, got {e!r}")
        return (v, e)
    try:
        e = tuple(e)
    except TypeError:
        raise InputError(
            f"exponent of {v!r} must be a non-zero integer vector of length {r}") from None
    if len(e) != r or not all(isinstance(c, int) for c in e) or not any(e):
        raise InputError(
            f"exponent of {v!r} must be a non-zero integer vector of length {r}")
    return (v, e)


def _merge_exponents(a, b):
    if isinstance(a, int):
        return a + b
    return tuple(x + y for x, y in zip(a, b))


def _is_zero(e):
    return e == 0 if isinstance(e, int) else not any(e)


def _negate(e):
    if isinstance(e, int):
        return -e
    return tuple(-x for x in e)


def _push(adj, pile, v, e):
    """Append one syllable to a reduced pile, keeping it reduced.

    Walks back over syllables commuting with v; merges into an earlier
    syllable on v if one is reachable, dropping it when the exponent
    cancels.  Dropping cannot create new mergeable pairs: every syllable
    right of the dropped position commutes with v, so v never was the
    blocker of a pair straddling it.
    """
    i = len(pile) - 1
    while i >= 0:
        u, f = pile[i]
        if u == v:
            m = _merge_exponents(f, e)
            if _is_zero(m):
                del pile[i]
            else:
                pile[i] = (v, m)
            return
        if v not in adj[u]:
            break
        i -= 1
    pile.append((v, e))


def _reduce(adj, syllables):
    pile = []
    for v, e in syllables:
        _push(adj, pile, v, e)
    return pile


def _lex_order(adj, reduced):
    """Lexicographically least shuffle of a reduced word (by vertex label)."""
    rest = list(reduced)
    out = []
    while rest:
        seen = set()
        best = None
        for i, (v, _) in enumerate(rest):
            if v not in seen and all(u in adj[v] for u in seen):
                if best is None or v < rest[best][0]:
                    best = i
            seen.add(v)
        out.append(rest.pop(best))
    return tuple(out)


def _adj_map(p):
    # the graph's internal label -> frozenset(neighbors) mapping, shared read-only
    return p.graph._adj


def normalize_syllables(p, syllables):
    adj = _adj_map(p)
    syls = [_validate_syllable(p, s) for s in syllables]
    return _lex_order(adj, _reduce(adj, syls))


@dataclass(frozen=True)
class NormalFormWord:
    """A group element in normal form over a fixed presentation.

    Two words over the same presentation are equal in the group if and only
    if their syllable tuples are identical.
    """

    presentation: GraphProductPresentation
    syllables: tuple

    @classmethod
    def from_syllables(cls, p, syllables):
        return cls(p, normalize_syllables(p, syllables))

    @classmethod
    def identity(cls, p):
        return cls(p, ())

    def is_identity(self):
        return not self.syllables

    @property
    def syllable_length(self):
        return len(self.syllables)

    @property
    def word_length(self):
        """Total letter length: the sum of the L1 norms of the exponents."""
        total = 0
        for _, e in self.syllables:
            total += abs(e) if isinstance(e, int) else sum(abs(c) for c in e)
        return total

    def support(self):
        return frozenset(v for v, _ in self.syllables)

    def inverse(self):
        inv = tuple((v, _negate(e)) for v, e in reversed(self.syllables))
        return NormalFormWord(self.presentation, inv)

    def __mul__(self, other):
        return multiply_and_normalize(self.presentation, self, other)

    def __repr__(self):
        if not self.syllables:
            return "<identity>"
        parts = []
        for v, e in self.syllables:
            parts.append(f"{v}^{e}" if (isinstance(e, int) and e != 1) or not isinstance(e, int)
                         else v)
        return " ".join(parts)


def _coerce(p, w):
    if isinstance(w, NormalFormWord):
        if w.presentation != p:
            raise InputError("word belongs to a different presentation")
        return w.syllables
    return tuple(_validate_syllable(p, s) for s in w)


def multiply_and_normalize(p, w1, w2):
    """Normal form of the product of two words over the presentation p."""
    adj = _adj_map(p)
    syls = _reduce(adj, _coerce(p, w1))
    for v, e in _coerce(p, w2):
        _push(adj, pile=syls, v=v, e=e)
    return NormalFormWord(p, _lex_order(adj, syls))


def word(p, syllables):
    """Convenience constructor for a normal-form word."""
    return NormalFormWord.from_syllables(p, syllables)


def _strip_to_coset_rep(adj, reduced, members):
    """Minimal representative of (reduced word) * G_members, lex ordered.

    Repeatedly deletes a syllable whose vertex lies in ``members`` and whose
    following syllables all commute with it (scanning from the right), which
    peels a right factor in the standard subgroup; the remainder is the
    unique shortest element of the coset.
    """
    syls = list(reduced)
    changed = True
    while changed:
        changed = False
        for i in range(len(syls) - 1, -1, -1):
            v = syls[i][0]
            if v in members and all(u in adj[v] for u, _ in syls[i + 1:]):
                del syls[i]
                syls = _reduce(adj, syls)
                changed = True
                break
    return _lex_order(adj, syls)


@dataclass(frozen=True)
class ParabolicHandle:
    """Canonical representative of a parabolic subgroup g G_T g^-1.

    The conjugator is the shortlex-least word in its coset modulo the
    normalizer G_T x G_{T^perp}, so equal subgroups yield identical handles.
    """

    presentation: GraphProductPresentation
    conjugator: tuple
    type_vertices: frozenset

    @property
    def type_vertex(self):
        if len(self.type_vertices) != 1:
            raise InputError("not a cyclic parabolic handle")
        return next(iter(self.type_vertices))

    @property
    def conjugator_length(self):
        total = 0
        for _, e in self.conjugator:
            total += abs(e) if isinstance(e, int) else sum(abs(c) for c in e)
        return total

    def conjugator_word(self):
        return NormalFormWord(self.presentation, self.conjugator)

    def generator_word(self, power=1):
        """The element conj * v^power * conj^-1 for a cyclic handle."""
        v = self.type_vertex
        e = power if self.presentation.rank(v) == 1 else \
            tuple(power if i == 0 else 0 for i in range(self.presentation.rank(v)))
        c = self.conjugator_word()
        return c * NormalFormWord(self.presentation, ((v, e),)) * c.inverse()

    def key(self):
        return (self.conjugator, tuple(sorted(self.type_vertices)))

    def __repr__(self):
        t = ",".join(sorted(self.type_vertices))
        c = NormalFormWord(self.presentation, self.conjugator)
        return f"<{t}>" if not self.conjugator else f"{c!r}.<{t}>"


def canonical_parabolic(p, conjugator, type_vertices):
    """Canonical handle of (conjugator) G_type (conjugator)^-1."""
    type_vertices = frozenset(type_vertices)
    for v in type_vertices:
        if not p.graph.has_vertex(v):
            raise InputError(f"unknown vertex {v!r} in parabolic type")
    adj = _adj_map(p)
    members = type_vertices | perp(p.graph, type_vertices)
    reduced = _reduce(adj, _coerce(p, conjugator))
    return ParabolicHandle(p, _strip_to_coset_rep(adj, reduced, members), type_vertices)


def parabolics_commute(h1, h2):
    """Whether two cyclic parabolic subgroups commute elementwise."""
    if h1.presentation != h2.presentation:
        raise InputError("handles belong to different presentations")
    if len(h1.type_vertices) != 1 or len(h2.type_vertices) != 1:
        raise InputError("commutation test expects cyclic parabolic handles")
    a = h1.generator_word()
    b = h2.generator_word()
    return (a * b * a.inverse() * b.inverse()).is_identity()


def normalizes(h, x):
    """Whether the element x normalizes the cyclic parabolic subgroup of h.

    Decided by membership: x g <v> g^-1 x^-1 = g <v> g^-1 exactly when
    g^-1 x g lies in the standard normalizer G_st(v).
    """
    p = h.presentation
    v = h.type_vertex
    c = h.conjugator_word()
    if not isinstance(x, NormalFormWord):
        x = NormalFormWord.from_syllables(p, x)
    conj = c.inverse() * x * c
    return conj.support() <= star(p.graph, v)


def conjugate_handle(h, x):
    """Canonical handle of x (h subgroup) x^-1."""
    p = h.presentation
    if not isinstance(x, NormalFormWord):
        x = NormalFormWord.from_syllables(p, x)
    new_conj = x * h.conjugator_word()
    return canonical_parabolic(p, new_conj, h.type_vertices)


def _letters(p, vertices):
    out = []
    for v in sorted(vertices):
        if p.rank(v) == 1:
            out.append((v, 1))
            out.append((v, -1))
        else:
            r = p.rank(v)
            for i in range(r):
                unit = tuple(1 if j == i else 0 for j in range(r))
                out.append((v, unit))
                out.append((v, tuple(-c for c in unit)))
    return out


def enumerate_cyclic_handles(p, types, letter_vertices, length_bound):
    """Canonical cyclic handles with conjugator letters from given vertices.

    Breadth-first over conjugator word length with canonical deduplication;
    every handle whose canonical conjugator is a word of length at most
    ``length_bound`` over the letter vertices appears exactly once.
    """
    letters = _letters(p, letter_vertices)
    handles = {}
    frontier = []
    for v in sorted(types):
        h = canonical_parabolic(p, (), {v})
        handles[h.key()] = h
        frontier.append(h)
    for _ in range(length_bound):
        nxt = []
        for h in frontier:
            for letter in letters:
                h2 = canonical_parabolic(
                    p, (letter,) + h.conjugator, h.type_vertices)
                if h2.key() not in handles:
                    handles[h2.key()] = h2
                    nxt.append(h2)
        frontier = nxt
    return [handles[k] for k in sorted(handles)]


def strong_untransvectability_oracle(g, v, conj_len_bound=4):
    """Bounded word-level test for strong untransvectability of <v>.

    Enumerates the untransvectable cyclic parabolic subgroups commuting with
    <v> whose canonical conjugator has length at most the bound (they all
    have a conjugator in the star subgroup of v, so letters are drawn from
    lk(v)), then asks whether some generator indexed by lk(v) normalizes all
    of them.  If none does the answer True is definitive; an answer False
    only certifies that the enumerated sub-collection has a common
    normalizer bigger than <v>, so it is relative to the bound.
    """
    if not g.has_vertex(v):
        raise InputError(f"unknown vertex {v!r}")
    if is_transvectable_vertex(g, v):
        raise DomainError(
            "strong untransvectability defined only for untransvectable vertices")
    if conj_len_bound < 0:
        raise InputError("conjugator length bound must be >= 0")
    p = GraphProductPresentation(g)
    lk = sorted(link(g, v))
    stv = star(g, v)
    untrans = set(untransvectable_vertices(g))
    types = sorted(w for w in stv if w in untrans)
    collection = enumerate_cyclic_handles(p, types, lk, conj_len_bound)
    for x in lk:
        witness = NormalFormWord(p, ((x, 1),))
        if all(normalizes(h, witness) for h in collection):
            return False
    return True
