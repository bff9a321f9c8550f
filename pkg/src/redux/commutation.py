"""Commutation classes C(w), the flip graph G(w), and small-graph utilities."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .permcore import Perm, check_perm
from .redwords import (
    DEFAULT_MAX_LENGTH,
    DEFAULT_MAX_WORDS,
    BudgetError,
    Word,
    apply_long_move,
    apply_short_move,
    braid_moves,
    enumerate_R,
    format_word,
)

GRAPH_ISO_VERTEX_CAP = 64


@dataclass(frozen=True)
class CommutationClass:
    """A commutation class, keyed by its lexicographically least word."""

    representative: Word
    words: frozenset[Word]

    @property
    def size(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class FlipGraph:
    """A graph on an ordered vertex list; edges are index pairs (a < b)."""

    vertices: tuple
    edges: frozenset[tuple[int, int]]
    labels: tuple[str, ...] = field(default=(), compare=False)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in self.vertices]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency()]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def classes(
    w: Perm,
    max_length: int = DEFAULT_MAX_LENGTH,
    max_words: int = DEFAULT_MAX_WORDS,
    override: bool = False,
) -> list[CommutationClass]:
    """Partition R(w) into commutation classes, sorted by representative.

    Words are joined when they differ by a single short braid move; the
    partition is computed with union-find over those neighbor pairs.
    """
    words = enumerate_R(w, max_length=max_length, max_words=max_words, override=override)
    index = {word: i for i, word in enumerate(words)}
    uf = _UnionFind(len(words))
    for word, i in index.items():
        for pos in braid_moves(word)[0]:
            uf.union(i, index[apply_short_move(word, pos)])
    groups: dict[int, list[Word]] = {}
    for word, i in index.items():
        groups.setdefault(uf.find(i), []).append(word)
    cls = [CommutationClass(min(g), frozenset(g)) for g in groups.values()]
    return sorted(cls, key=lambda c: c.representative)


def class_of(word: Word, cls: list[CommutationClass]) -> int:
    for i, c in enumerate(cls):
        if word in c.words:
            return i
    raise ValueError(f"word {format_word(word)} is in no class")


def graph(
    w: Perm,
    max_length: int = DEFAULT_MAX_LENGTH,
    max_words: int = DEFAULT_MAX_WORDS,
    override: bool = False,
) -> FlipGraph:
    """The graph G(w): vertices C(w), edges between classes one long braid
    move apart."""
    cls = classes(w, max_length=max_length, max_words=max_words, override=override)
    index: dict[Word, int] = {}
    for i, c in enumerate(cls):
        for word in c.words:
            index[word] = i
    edges = set()
    for word, i in index.items():
        for pos in braid_moves(word)[1]:
            j = index[apply_long_move(word, pos)]
            if i != j:
                edges.add((min(i, j), max(i, j)))
    g = FlipGraph(
        vertices=tuple(cls),
        edges=frozenset(edges),
        labels=tuple(format_word(c.representative) for c in cls),
    )
    # The paper guarantees both; a violation means the construction is broken.
    assert is_connected(g), "G(w) must be connected"
    assert is_bipartite(g), "G(w) must be bipartite"
    return g


def is_connected(g: FlipGraph) -> bool:
    if g.vertex_count == 0:
        return True
    adj = g.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        for nbr in adj[stack.pop()]:
            if nbr not in seen:
                seen.add(nbr)
                stack.append(nbr)
    return len(seen) == g.vertex_count


def is_bipartite(g: FlipGraph) -> bool:
    adj = g.adjacency()
    color: dict[int, int] = {}
    for start in range(g.vertex_count):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for nbr in adj[v]:
                if nbr not in color:
                    color[nbr] = 1 - color[v]
                    stack.append(nbr)
                elif color[nbr] == color[v]:
                    return False
    return True


def is_tree(g: FlipGraph) -> bool:
    return is_connected(g) and len(g.edges) == g.vertex_count - 1


def is_path(g: FlipGraph) -> bool:
    return is_tree(g) and all(d <= 2 for d in g.degrees())


def simple_cycles_of_length(g: FlipGraph, target: int) -> list[frozenset[tuple[int, int]]]:
    """All simple cycles with exactly ``target`` edges, as canonical edge sets."""
    adj = g.adjacency()
    found: set[frozenset[tuple[int, int]]] = set()

    def extend(path: list[int]) -> None:
        v = path[-1]
        for nbr in adj[v]:
            if nbr == path[0] and len(path) == target:
                if path[1] < path[-1]:  # each cycle once, not once per direction
                    found.add(
                        frozenset(
                            (min(a, b), max(a, b))
                            for a, b in zip(path, path[1:] + path[:1])
                        )
                    )
            elif nbr > path[0] and nbr not in path and len(path) < target:
                extend(path + [nbr])

    for start in range(g.vertex_count):
        extend([start])
    return sorted(found, key=sorted)


def gf2_rank(vectors: list[int]) -> int:
    """Rank over GF(2) of int-encoded bit vectors."""
    basis: list[int] = []
    for vec in vectors:
        for b in basis:
            vec = min(vec, vec ^ b)
        if vec:
            basis.append(vec)
            basis.sort(reverse=True)
    return len(basis)


def cycle_space_generated_by_4_8_cycles(g: FlipGraph) -> bool:
    """Do the 4- and 8-cycles span the full GF(2) cycle space of ``g``?"""
    assert is_connected(g)
    edge_index = {e: i for i, e in enumerate(sorted(g.edges))}
    cycles = simple_cycles_of_length(g, 4) + simple_cycles_of_length(g, 8)
    vectors = [
        sum(1 << edge_index[e] for e in cycle) for cycle in cycles
    ]
    dim = len(g.edges) - g.vertex_count + 1
    return gf2_rank(vectors) == dim


def _iso_backtrack(adj1: list[set[int]], adj2: list[set[int]]) -> bool:
    n = len(adj1)
    deg1 = [len(a) for a in adj1]
    deg2 = [len(a) for a in adj2]
    if sorted(deg1) != sorted(deg2):
        return False
    order = sorted(range(n), key=lambda v: -deg1[v])
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def place(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for cand in range(n):
            if cand in used or deg2[cand] != deg1[v]:
                continue
            ok = all(
                (u2 in adj2[cand]) == (u1 in adj1[v])
                for u1, u2 in mapping.items()
            )
            if ok:
                mapping[v] = cand
                used.add(cand)
                if place(idx + 1):
                    return True
                del mapping[v]
                used.remove(cand)
        return False

    return place(0)


def graphs_isomorphic(g1: FlipGraph, g2: FlipGraph) -> bool:
    """Exact isomorphism test by backtracking; capped at 64 vertices."""
    if max(g1.vertex_count, g2.vertex_count) > GRAPH_ISO_VERTEX_CAP:
        raise BudgetError(
            f"graph isomorphism is capped at {GRAPH_ISO_VERTEX_CAP} vertices"
        )
    if g1.vertex_count != g2.vertex_count or len(g1.edges) != len(g2.edges):
        return False
    return _iso_backtrack(g1.adjacency(), g2.adjacency())


def reverse(w: Perm) -> Perm:
    """w^R: the one-line notation read backwards; |C(w)| is invariant."""
    return tuple(reversed(check_perm(w)))


def _mod_n(value: int, n: int) -> int:
    r = value % n
    return r if r != 0 else n


def rotate_prefix(w: Perm, i: int) -> Perm:
    """w^{(i)} for w starting n, n-1, ..., n+1-i; preserves |C| and G."""
    w = check_perm(w)
    n = len(w)
    if not 1 <= i <= n or any(w[t] != n - t for t in range(i)):
        raise ValueError(f"w must start with n, n-1, ..., n+1-{i}")
    head = [_mod_n(w[t] + i, n) for t in range(i, n)]
    return tuple(head + list(range(i, 0, -1)))


def rotate_suffix(w: Perm, j: int) -> Perm:
    """w_{(j)} for w ending j, j-1, ..., 1; preserves |C| and G."""
    w = check_perm(w)
    n = len(w)
    if not 1 <= j <= n or any(w[n - 1 - t] != t + 1 for t in range(j)):
        raise ValueError(f"w must end with {j}, ..., 2, 1")
    tail = [_mod_n(w[t] - j, n) for t in range(n - j)]
    return tuple(list(range(n, n - j, -1)) + tail)


def graph_to_dot(g: FlipGraph) -> str:
    labels = g.labels or tuple(str(i) for i in range(g.vertex_count))
    lines = ["graph G {"]
    for i, label in enumerate(labels):
        lines.append(f'  v{i} [label="{label}"];')
    for a, b in sorted(g.edges):
        lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: FlipGraph) -> str:
    labels = g.labels or tuple(str(i) for i in range(g.vertex_count))
    payload = {
        "schema": 1,
        "vertices": list(labels),
        "edges": [[a, b] for a, b in sorted(g.edges)],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
