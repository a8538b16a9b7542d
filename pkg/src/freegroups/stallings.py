"""Labeled digraphs carrying finitely generated subgroups of free groups.

A graph here is a finite digraph whose edges are labeled by generator
indices; traversing an edge against its direction reads the inverse
letter.  A subgroup H of F(X) is carried by the folded core graph whose
reduced base-to-base path labels are exactly the elements of H.  The
main operations: building the graph from generators (wedge + fold +
core), membership, intersection via the labeled product, conjugacy via
type graphs, and extraction of a free basis from a spanning tree.

Graphs are immutable after construction; all functions are pure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .words import (
    Alphabet,
    AlphabetMismatchError,
    Letter,
    Word,
    cyclic_reduce,
    free_reduce,
)


class GraphFormatError(ValueError):
    """Malformed graph text."""


class NotFoldedError(ValueError):
    """An operation that requires a folded graph received an unfolded one."""


@dataclass(frozen=True)
class XDigraph(object):
    """A generator-labeled digraph.

    Edges are (origin, terminus, label) triples over dense vertex
    indices 0..vertex_count-1; parallel duplicates are allowed (folding
    removes them).  The edge list is stored sorted by (origin, label,
    terminus), which fixes the serialization and all traversal orders.
    """

    rank: int
    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]
    base: int | None = None

    def __post_init__(self) -> None:
        edges = tuple(sorted((tuple(e) for e in self.edges), key=lambda e: (e[0], e[2], e[1])))
        object.__setattr__(self, "edges", edges)
        for o, t, l in edges:
            if not (0 <= o < self.vertex_count and 0 <= t < self.vertex_count):
                raise ValueError("edge %r endpoint out of range" % ((o, t, l),))
            if not 0 <= l < self.rank:
                raise ValueError("edge label %d out of range" % l)
        if self.base is not None and not 0 <= self.base < self.vertex_count:
            raise ValueError("base vertex %r out of range" % (self.base,))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        # Degree in the symmetrized graph: loops count twice.
        deg = [0] * self.vertex_count
        for o, t, _ in self.edges:
            deg[o] += 1
            deg[t] += 1
        return tuple(deg)

    @cached_property
    def is_folded(self) -> bool:
        seen_out: set[tuple[int, int]] = set()
        seen_in: set[tuple[int, int]] = set()
        for o, t, l in self.edges:
            if (o, l) in seen_out or (t, l) in seen_in:
                return False
            seen_out.add((o, l))
            seen_in.add((t, l))
        return True

    @cached_property
    def _steps(self) -> dict[tuple[int, int, int], int]:
        # (vertex, label, sign) -> next vertex; folded graphs only.
        if not self.is_folded:
            raise NotFoldedError("graph is not folded")
        table: dict[tuple[int, int, int], int] = {}
        for o, t, l in self.edges:
            table[(o, l, 1)] = t
            table[(t, l, -1)] = o
        return table

    def step(self, v: int, letter: Letter) -> int | None:
        """Follow one letter from v (inverse letters walk edges backwards)."""
        return self._steps.get((v, letter.gen, letter.sign))

    def arcs_from(self, v: int) -> list[tuple[Letter, int, int]]:
        """All arcs leaving v in the symmetrized graph, sorted by letter.

        Returns (letter, head, edge index) triples; a loop contributes
        one positive and one negative arc.
        """
        out = []
        for eid, (o, t, l) in enumerate(self.edges):
            if o == v:
                out.append((Letter(l, 1), t, eid))
            if t == v:
                out.append((Letter(l, -1), o, eid))
        out.sort(key=lambda a: (a[0].key, a[1], a[2]))
        return out

    def components(self) -> list[list[int]]:
        seen = [False] * self.vertex_count
        neighbors: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for o, t, _ in self.edges:
            neighbors[o].append(t)
            neighbors[t].append(o)
        comps = []
        for start in range(self.vertex_count):
            if seen[start]:
                continue
            comp = [start]
            seen[start] = True
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in neighbors[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def with_base(self, v: int | None) -> "XDigraph":
        return XDigraph(self.rank, self.vertex_count, self.edges, v)


def _restrict(g: XDigraph, keep: Iterable[int], base: int | None) -> XDigraph:
    """Induced subgraph on `keep`, renumbered densely in old-index order."""
    keep_sorted = sorted(set(keep))
    index = {v: i for i, v in enumerate(keep_sorted)}
    edges = tuple(
        (index[o], index[t], l) for o, t, l in g.edges if o in index and t in index
    )
    new_base = index[base] if base is not None and base in index else None
    return XDigraph(g.rank, len(keep_sorted), edges, new_base)


class _UnionFind(object):
    """Union-find with path compression; the smallest member leads its class."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, v: int) -> int:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra


def fold(g: XDigraph) -> XDigraph:
    """Merge edges with equal label and a shared endpoint until folded.

    Identifying the two far endpoints of a same-labeled pair can create
    new coincidences, so scan to a fixpoint.  The result is independent
    of merge order; the scan order below just fixes the vertex
    numbering, which is by first appearance (smallest original index in
    each merged class).
    """
    uf = _UnionFind(g.vertex_count)
    while True:
        out_of: dict[tuple[int, int], int] = {}
        in_of: dict[tuple[int, int], int] = {}
        merge: tuple[int, int] | None = None
        for o, t, l in g.edges:
            ro, rt = uf.find(o), uf.find(t)
            if (ro, l) in out_of and out_of[(ro, l)] != rt:
                merge = (out_of[(ro, l)], rt)
                break
            out_of[(ro, l)] = rt
            if (rt, l) in in_of and in_of[(rt, l)] != ro:
                merge = (in_of[(rt, l)], ro)
                break
            in_of[(rt, l)] = ro
        if merge is None:
            break
        uf.union(*merge)
    reps = sorted({uf.find(v) for v in range(g.vertex_count)})
    index = {r: i for i, r in enumerate(reps)}
    edges = {(index[uf.find(o)], index[uf.find(t)], l) for o, t, l in g.edges}
    base = index[uf.find(g.base)] if g.base is not None else None
    return XDigraph(g.rank, len(reps), tuple(edges), base)


def core(g: XDigraph, v: int) -> XDigraph:
    """The union of reduced v-to-v paths in g.

    For a folded graph this is the connected component of v with
    degree-at-most-one vertices other than v repeatedly peeled off.
    The base of the result is v.
    """
    if not 0 <= v < g.vertex_count:
        raise ValueError("core base %d out of range" % v)
    alive = set(range(g.vertex_count))
    while True:
        deg = {u: 0 for u in alive}
        for o, t, _ in g.edges:
            if o in alive and t in alive:
                deg[o] += 1
                deg[t] += 1
        drop = [u for u in alive if u != v and deg[u] <= 1]
        if not drop:
            break
        alive.difference_update(drop)
    trimmed = _restrict(g, alive, v)
    for comp in trimmed.components():
        if trimmed.base in comp:
            return _restrict(trimmed, comp, trimmed.base)
    raise AssertionError("base lost its component")


@dataclass(frozen=True)
class Subgroup(object):
    """A subgroup carried by a folded core graph with a base vertex.

    Construction verifies the folded and core certificates, so holding
    a Subgroup is proof that both hold.
    """

    graph: XDigraph
    alphabet: Alphabet

    def __post_init__(self) -> None:
        g = self.graph
        if g.base is None:
            raise ValueError("subgroup graph needs a base vertex")
        if g.rank != self.alphabet.rank:
            raise ValueError("graph rank %d does not match alphabet" % g.rank)
        if not g.is_folded:
            raise NotFoldedError("subgroup graph must be folded")
        if not _is_core(g):
            raise ValueError("subgroup graph must be a core graph at its base")

    @property
    def folded(self) -> bool:
        return True

    @property
    def is_core(self) -> bool:
        return True

    @property
    def base(self) -> int:
        return self.graph.base  # type: ignore[return-value]

    @property
    def free_rank(self) -> int:
        """Edges minus vertices plus one: the rank of the carried subgroup."""
        return len(self.graph.edges) - self.graph.vertex_count + 1

    @property
    def is_trivial(self) -> bool:
        return not self.graph.edges


def _is_core(g: XDigraph) -> bool:
    # Folded + connected + no degree-<=1 vertex besides the base.
    if g.base is None:
        return False
    if len(g.components()) != 1:
        return False
    return all(d >= 2 for v, d in enumerate(g.degrees) if v != g.base)


def build_subgroup(generators: Sequence[Word], alphabet: Alphabet) -> Subgroup:
    """Wedge subdivided generator loops at a base, fold, and take the core."""
    for w in generators:
        if w.alphabet != alphabet:
            raise AlphabetMismatchError("generator over a different alphabet")
    edges: list[tuple[int, int, int]] = []
    n_vertices = 1
    for w in generators:
        if w.is_trivial:
            continue
        prev = 0
        for i, letter in enumerate(w.letters):
            nxt = 0 if i == len(w.letters) - 1 else n_vertices
            if nxt != 0:
                n_vertices += 1
            if letter.sign > 0:
                edges.append((prev, nxt, letter.gen))
            else:
                edges.append((nxt, prev, letter.gen))
            prev = nxt
    wedge = XDigraph(alphabet.rank, n_vertices, tuple(edges), base=0)
    folded = fold(wedge)
    assert folded.base is not None
    return Subgroup(core(folded, folded.base), alphabet)


def contains(h: Subgroup, w: Word) -> bool:
    """Trace w letter by letter from the base; membership iff it closes up."""
    if w.alphabet != h.alphabet:
        raise AlphabetMismatchError("word over a different alphabet")
    v = h.base
    for letter in w.letters:
        nxt = h.graph.step(v, letter)
        if nxt is None:
            return False
        v = nxt
    return v == h.base


def contains_conjugate(h: Subgroup, w: Word) -> bool:
    """Is some conjugate of w an element of h?

    A conjugate of w lands in h exactly when a cyclic rotation of the
    cyclic reduction of w closes up at some vertex of the core graph.
    """
    if w.alphabet != h.alphabet:
        raise AlphabetMismatchError("word over a different alphabet")
    cyc, _ = cyclic_reduce(w)
    if cyc.is_trivial:
        return True
    g = h.graph
    for rot in cyc.rotations():
        for u in range(g.vertex_count):
            v: int | None = u
            for letter in rot:
                v = g.step(v, letter)  # type: ignore[arg-type]
                if v is None:
                    break
            if v == u:
                return True
    return False


def conjugator_into(h: Subgroup, w: Word) -> "Word | None":
    """A word x with x w x^-1 in h, or None if no conjugate of w lies in h.

    Same search as contains_conjugate, but the closing vertex and the
    rotation offset are kept so the conjugator can be assembled from the
    base path.
    """
    if w.alphabet != h.alphabet:
        raise AlphabetMismatchError("word over a different alphabet")
    letters = w.letters
    i, j = 0, len(letters)
    while i < j - 1 and letters[i] == letters[j - 1].inverse():
        i += 1
        j -= 1
    strip = Word(w.alphabet, letters[:i])  # w = strip * r0 * strip^-1
    r0 = letters[i:j]
    if not r0:
        return Word(w.alphabet)
    g = h.graph
    for r in range(len(r0)):
        rot = r0[r:] + r0[:r]  # rot = prefix^-1 * r0 * prefix
        prefix = Word(w.alphabet, r0[:r])
        for u in range(g.vertex_count):
            v: int | None = u
            for letter in rot:
                v = g.step(v, letter)  # type: ignore[arg-type]
                if v is None:
                    break
            if v == u:
                p = path_word(g, h.base, u, h.alphabet)
                return p * ~prefix * ~strip
    return None


def type_graph(h: Subgroup) -> XDigraph:
    """The conjugacy invariant of h: its graph with the hanging base path
    removed (equivalently, the intersection of the cores at every vertex).

    If the base has degree other than one there is nothing to remove.
    The result carries no base.
    """
    g = h.graph
    if g.degrees[h.base] != 1:
        return g.with_base(None)
    alive = set(range(g.vertex_count))
    while True:
        deg = {u: 0 for u in alive}
        for o, t, _ in g.edges:
            if o in alive and t in alive:
                deg[o] += 1
                deg[t] += 1
        drop = [u for u in alive if deg[u] <= 1]
        if not drop:
            break
        alive.difference_update(drop)
    return _restrict(g, alive, None)


def product(g: XDigraph, h: XDigraph) -> XDigraph:
    """The label-matched product: edges ((o,o'),(t,t'),l) for every pair
    of same-labeled edges.  Only vertex pairs incident to a product edge
    are materialized."""
    return _product(g, h, ())[0]


def _product(
    g: XDigraph, h: XDigraph, designated: tuple[tuple[int, int], ...]
) -> tuple[XDigraph, dict[tuple[int, int], int]]:
    if g.rank != h.rank:
        raise ValueError("product of graphs over different ranks")
    index: dict[tuple[int, int], int] = {}

    def at(pair: tuple[int, int]) -> int:
        if pair not in index:
            index[pair] = len(index)
        return index[pair]

    for pair in designated:
        at(pair)
    by_label: dict[int, list[tuple[int, int]]] = {}
    for o, t, l in h.edges:
        by_label.setdefault(l, []).append((o, t))
    edges = []
    for o1, t1, l in g.edges:
        for o2, t2 in by_label.get(l, ()):
            edges.append((at((o1, o2)), at((t1, t2)), l))
    base = index[designated[0]] if designated else None
    return XDigraph(g.rank, len(index), tuple(edges), base), index


def intersect(h: Subgroup, k: Subgroup) -> Subgroup:
    """The subgroup on the core of the product at the pair of bases."""
    if h.alphabet != k.alphabet:
        raise AlphabetMismatchError("subgroups over different alphabets")
    prod, _ = _product(h.graph, k.graph, ((h.base, k.base),))
    assert prod.base is not None
    return Subgroup(core(prod, prod.base), h.alphabet)


def conjugate_subgroups(h: Subgroup, k: Subgroup) -> bool:
    """Conjugacy test: the type graphs must be isomorphic as labeled digraphs."""
    if h.alphabet != k.alphabet:
        raise AlphabetMismatchError("subgroups over different alphabets")
    return digraph_isomorphic(type_graph(h), type_graph(k))


def digraph_isomorphic(
    g: XDigraph, h: XDigraph, bases: tuple[int, int] | None = None
) -> bool:
    """Label-and-direction-preserving isomorphism of folded connected graphs.

    Folded rigidity: a seed pair determines the whole map, so try vertex
    0 of g against every vertex of h (or just the given base pair) and
    propagate deterministically.
    """
    for graph in (g, h):
        if not graph.is_folded:
            raise NotFoldedError("isomorphism test requires folded graphs")
        if len(graph.components()) > 1:
            raise ValueError("isomorphism test requires connected graphs")
    if g.vertex_count != h.vertex_count or len(g.edges) != len(h.edges):
        return False
    if g.vertex_count == 0:
        return True
    seed = bases[0] if bases is not None else 0
    candidates = [bases[1]] if bases is not None else list(range(h.vertex_count))
    for cand in candidates:
        if _propagate(g, h, seed, cand):
            return True
    return False


def _propagate(g: XDigraph, h: XDigraph, seed: int, cand: int) -> bool:
    mapping = {seed: cand}
    queue = deque([seed])
    while queue:
        v = queue.popleft()
        for letter, to, _ in g.arcs_from(v):
            image = h.step(mapping[v], letter)
            if image is None:
                return False
            if to in mapping:
                if mapping[to] != image:
                    return False
            else:
                mapping[to] = image
                queue.append(to)
    if len(mapping) != g.vertex_count:
        return False  # g not connected from seed; caller rejects earlier
    return len(set(mapping.values())) == h.vertex_count


def spanning_tree_basis(h: Subgroup) -> list[Word]:
    """A free basis of h: one word per positive edge outside a breadth-first
    spanning tree, reading tree path + edge + tree path back.

    The tree explores arcs in (discovery order, label, sign) order, so
    the output is deterministic; its length is edges - vertices + 1.
    """
    g = h.graph
    parent: dict[int, tuple[int, Letter] | None] = {h.base: None}
    tree_edges: set[int] = set()
    queue = deque([h.base])
    while queue:
        v = queue.popleft()
        for letter, to, eid in g.arcs_from(v):
            if to not in parent:
                parent[to] = (v, letter)
                tree_edges.add(eid)
                queue.append(to)

    def path_from_base(v: int) -> list[Letter]:
        letters: list[Letter] = []
        while True:
            up = parent[v]
            if up is None:
                return letters[::-1]
            v, letter = up[0], up[1]
            letters.append(letter)

    basis = []
    for eid, (o, t, l) in enumerate(g.edges):
        if eid in tree_edges:
            continue
        down = path_from_base(o)
        back = [x.inverse() for x in reversed(path_from_base(t))]
        basis.append(free_reduce(down + [Letter(l, 1)] + back, h.alphabet))
    return basis


def has_cycle(g: XDigraph) -> bool:
    """Does some connected component contain at least as many edges as
    vertices?  (Equivalently: the symmetrized graph is not a forest.)"""
    count: dict[int, int] = {}
    comp_of: dict[int, int] = {}
    for i, comp in enumerate(g.components()):
        for v in comp:
            comp_of[v] = i
        count[i] = -len(comp)
    for o, _, _ in g.edges:
        count[comp_of[o]] += 1
    return any(c >= 0 for c in count.values())


def find_cycle(g: XDigraph) -> tuple[tuple[Letter, ...], int] | None:
    """The first cycle discovered by depth-first search, as (label word,
    anchor vertex).  The word is a nontrivial cyclically reduced label of
    a closed path at the anchor.  None when the graph is a forest."""
    visited: set[int] = set()
    for start in range(g.vertex_count):
        if start in visited:
            continue
        # Stack entries: (vertex, arc iterator, entering edge id, entering letter)
        on_stack = {start: 0}
        order = [(start, None)]  # (vertex, letter that entered it)
        stack = [(start, iter(g.arcs_from(start)), -1)]
        visited.add(start)
        while stack:
            v, arcs, enter_eid = stack[-1]
            advanced = False
            for letter, to, eid in arcs:
                if eid == enter_eid:
                    continue
                if to in on_stack:
                    depth = on_stack[to]
                    letters = tuple(l for _, l in order[depth + 1 :]) + (letter,)
                    return letters, to
                if to in visited:
                    continue
                visited.add(to)
                on_stack[to] = len(order)
                order.append((to, letter))
                stack.append((to, iter(g.arcs_from(to)), eid))
                advanced = True
                break
            if not advanced:
                stack.pop()
                del on_stack[v]
                order.pop()
    return None


def path_word(g: XDigraph, u: int, v: int, alphabet: Alphabet) -> Word:
    """The label of a shortest u-to-v path in the symmetrized graph."""
    parent: dict[int, tuple[int, Letter] | None] = {u: None}
    queue = deque([u])
    while queue and v not in parent:
        x = queue.popleft()
        for letter, to, _ in g.arcs_from(x):
            if to not in parent:
                parent[to] = (x, letter)
                queue.append(to)
    if v not in parent:
        raise ValueError("no path between %d and %d" % (u, v))
    letters: list[Letter] = []
    walk = v
    while parent[walk] is not None:
        walk, letter = parent[walk]  # type: ignore[misc]
        letters.append(letter)
    return free_reduce(letters[::-1], alphabet)


def graph_to_text(g: XDigraph, alphabet: Alphabet) -> str:
    """Line-oriented serialization: vertex count, optional base, then edges
    sorted by (origin, label, terminus)."""
    if alphabet.rank != g.rank:
        raise ValueError("alphabet rank does not match graph")
    lines = ["v %d" % g.vertex_count]
    if g.base is not None:
        lines.append("base %d" % g.base)
    for o, t, l in g.edges:
        lines.append("e %d %d %s" % (o, t, alphabet.symbols[l]))
    return "\n".join(lines) + "\n"


def graph_from_text(text: str, alphabet: Alphabet) -> XDigraph:
    vertex_count: int | None = None
    base: int | None = None
    edges: list[tuple[int, int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "v" and len(parts) == 2:
                vertex_count = int(parts[1])
            elif parts[0] == "base" and len(parts) == 2:
                base = int(parts[1])
            elif parts[0] == "e" and len(parts) == 4:
                edges.append((int(parts[1]), int(parts[2]), alphabet.index(parts[3])))
            else:
                raise GraphFormatError("unrecognized graph line %r" % line)
        except ValueError as exc:
            raise GraphFormatError("bad graph line %r: %s" % (line, exc)) from None
    if vertex_count is None:
        raise GraphFormatError("missing 'v <count>' line")
    try:
        return XDigraph(alphabet.rank, vertex_count, tuple(edges), base)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def graph_to_dot(g: XDigraph, alphabet: Alphabet) -> str:
    """A dot rendering for inspection; the base vertex is doubly circled."""
    lines = ["digraph stallings {"]
    for v in range(g.vertex_count):
        shape = "doublecircle" if v == g.base else "circle"
        lines.append('  v%d [shape=%s label="%d"];' % (v, shape, v))
    for o, t, l in g.edges:
        lines.append('  v%d -> v%d [label="%s"];' % (o, t, alphabet.symbols[l]))
    lines.append("}")
    return "\n".join(lines) + "\n"
