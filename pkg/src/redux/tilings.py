"""Elnitsky's polygon, its rhombic and zonotopal tilings, and the tiling poset.

Coordinates are combinatorial: a grid point is the set of edge labels crossed
on the way down from the top vertex, so point and edge identity are exact set
comparisons and tilings deduplicate without any geometry.  Planar coordinates
enter only when rendering.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .commutation import FlipGraph, class_of, classes, gf2_rank
from .patterns import Occurrence, is_freely_braided, occurrences
from .permcore import Perm, check_perm, format_perm, identity, length, right_mult_adjacent
from .redwords import (
    DEFAULT_MAX_LENGTH,
    BudgetError,
    Word,
    check_reduced,
    format_word,
)

Point = frozenset  # of labels in 1..n
Edge = tuple  # (Point, label): the unit edge from P to P | {label}


@dataclass(frozen=True)
class Tile:
    """A centrally symmetric 2k-gon tile, k = len(labels) >= 2.

    ``anchor`` is the top vertex; going down the right side the labels are
    added in decreasing order, down the left side in increasing order.
    """

    labels: frozenset
    anchor: frozenset

    def __post_init__(self):
        assert len(self.labels) >= 2 and not (self.labels & self.anchor)

    @property
    def order(self) -> int:
        return len(self.labels)

    def edges(self) -> frozenset:
        out = set()
        for side in (sorted(self.labels, reverse=True), sorted(self.labels)):
            at = self.anchor
            for label in side:
                out.add((at, label))
                at = at | {label}
        return frozenset(out)

    def pairs(self) -> frozenset:
        """The unit cells covered: all unordered label pairs of the tile."""
        return frozenset(frozenset(pq) for pq in combinations(self.labels, 2))


def boundary_edges(w: Perm) -> frozenset:
    n = len(w)
    out = set()
    left: Point = frozenset()
    right: Point = frozenset()
    for j in range(1, n + 1):
        out.add((left, j))
        out.add((right, w[j - 1]))
        left = left | {j}
        right = right | {w[j - 1]}
    return frozenset(out)


@dataclass(frozen=True)
class Tiling:
    """A zonotopal tiling of X(w); rhombic when every tile has order 2."""

    w: Perm
    tiles: frozenset

    def __post_init__(self):
        covered: set = set()
        for t in self.tiles:
            ps = t.pairs()
            assert not (covered & ps), "tiles overlap"
            covered |= ps
        inv = {frozenset(pq) for pq in _inversion_pairs(self.w)}
        assert covered == inv, "tiles must cover X(w) exactly"

    @cached_property
    def edge_set(self) -> frozenset:
        out = set(boundary_edges(self.w))
        for t in self.tiles:
            out |= t.edges()
        return frozenset(out)

    def is_rhombic(self) -> bool:
        return all(t.order == 2 for t in self.tiles)

    def shape_profile(self) -> tuple[int, ...]:
        """Sorted tile orders, e.g. (2, 2, 3) = two rhombi and a hexagon."""
        return tuple(sorted(t.order for t in self.tiles))

    def key(self):
        """Deterministic sort key (tilings of the same w only)."""
        return tuple(
            sorted(
                (tuple(sorted(t.labels)), tuple(sorted(t.anchor)))
                for t in self.tiles
            )
        )

    def leq(self, other: "Tiling") -> bool:
        """Reverse edge inclusion: finer tilings are smaller."""
        assert self.w == other.w
        return self.edge_set >= other.edge_set


def _inversion_pairs(w: Perm):
    n = len(w)
    return [
        (w[j], w[i])
        for i in range(n)
        for j in range(i + 1, n)
        if w[i] > w[j]
    ]


def _prefix_sets(u: Perm) -> list:
    """Q_j(u) = {u(1), ..., u(j)} for j = 0..n, as the right-boundary points."""
    out = [frozenset()]
    for v in u:
        out.append(out[-1] | {v})
    return out


# ---------------------------------------------------------------------------
# Polygon realization (used only for rendering)


@dataclass(frozen=True)
class Polygon:
    w: Perm

    @property
    def n(self) -> int:
        return len(self.w)

    def boundary_label_cycle(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1)) + tuple(reversed(self.w))

    def direction(self, label: int) -> tuple[float, float]:
        """Unit step for an edge with this label, screen coordinates (y down)."""
        theta = -math.pi / 2 + (math.pi / 2) * (2 * label - self.n - 1) / (self.n + 1)
        return (math.cos(theta), -math.sin(theta))

    def locate(self, point: Point) -> tuple[float, float]:
        x = sum(self.direction(label)[0] for label in point)
        y = sum(self.direction(label)[1] for label in point)
        return (x, y)

    def is_degenerate(self) -> bool:
        return self.w == identity(self.n)


def build_polygon(w: Perm) -> Polygon:
    return Polygon(check_perm(w))


# ---------------------------------------------------------------------------
# Enumeration by right-boundary peeling


def _check_budget(w: Perm, max_length: int, override: bool) -> None:
    if not override and length(w) > max_length:
        raise BudgetError(
            f"length(w) = {length(w)} exceeds the limit {max_length}; "
            "raise --max-length to override"
        )


def _reverse_window(u: Perm, j: int, m: int) -> Perm:
    """Sort the descending window u(j..j+m-1) ascending (0-based j is j-1)."""
    window = u[j - 1 : j - 1 + m]
    assert all(window[t] > window[t + 1] for t in range(m - 1))
    return u[: j - 1] + tuple(reversed(window)) + u[j - 1 + m :]


def enumerate_rhombic(
    w: Perm, max_length: int = DEFAULT_MAX_LENGTH, override: bool = False
) -> tuple[Tiling, ...]:
    """All rhombic tilings T(w), sorted deterministically.

    Peels a rhombus off the right boundary at every descent, recursively;
    memoization on the boundary permutation deduplicates shared subproblems.
    """
    w = check_perm(w)
    _check_budget(w, max_length, override)
    memo: dict[Perm, frozenset] = {}

    def rec(u: Perm) -> frozenset:
        if u not in memo:
            prefixes = _prefix_sets(u)
            out = set()
            if length(u) == 0:
                out.add(frozenset())
            for j in range(1, len(u)):
                if u[j - 1] > u[j]:
                    tile = Tile(frozenset({u[j - 1], u[j]}), prefixes[j - 1])
                    for rest in rec(right_mult_adjacent(u, j)):
                        out.add(rest | {tile})
            memo[u] = frozenset(out)
        return memo[u]

    return tuple(sorted((Tiling(w, ts) for ts in rec(w)), key=Tiling.key))


def enumerate_zonotopal(
    w: Perm, max_length: int = DEFAULT_MAX_LENGTH, override: bool = False
) -> tuple[Tiling, ...]:
    """All zonotopal tilings Z(w): peel any 2m-gon (m >= 2) whose right half
    is a descending run on the current right boundary."""
    w = check_perm(w)
    _check_budget(w, max_length, override)
    memo: dict[Perm, frozenset] = {}

    def rec(u: Perm) -> frozenset:
        if u not in memo:
            prefixes = _prefix_sets(u)
            out = set()
            if length(u) == 0:
                out.add(frozenset())
            for j in range(1, len(u)):
                m = 2
                while j - 1 + m <= len(u) and all(
                    u[t] > u[t + 1] for t in range(j - 1, j - 2 + m)
                ):
                    tile = Tile(frozenset(u[j - 1 : j - 1 + m]), prefixes[j - 1])
                    for rest in rec(_reverse_window(u, j, m)):
                        out.add(rest | {tile})
                    m += 1
            memo[u] = frozenset(out)
        return memo[u]

    return tuple(sorted((Tiling(w, ts) for ts in rec(w)), key=Tiling.key))


# ---------------------------------------------------------------------------
# The Elnitsky bijection


def peel_word(t: Tiling) -> Word:
    """The reduced word produced by the deterministic peel (topmost eligible
    tile first); reading the peel sequence right-to-left gives the word."""
    u = t.w
    remaining = set(t.tiles)
    letters = []
    while remaining:
        prefixes = _prefix_sets(u)
        for j in range(1, len(u)):
            m = 2
            hit = None
            while j - 1 + m <= len(u) and all(
                u[a] > u[a + 1] for a in range(j - 1, j - 2 + m)
            ):
                tile = Tile(frozenset(u[j - 1 : j - 1 + m]), prefixes[j - 1])
                if tile in remaining:
                    hit = (tile, m)
                    break
                m += 1
            if hit is not None:
                break
        else:
            raise AssertionError("no tile on the right boundary; not a tiling")
        tile, m = hit
        remaining.discard(tile)
        # a 2m-gon contributes a reduced word reversing the descending window
        for r in range(1, m):
            for a in range(r, 0, -1):
                pos = j - 1 + a
                assert u[pos - 1] > u[pos]
                letters.append(pos)
                u = right_mult_adjacent(u, pos)
    assert length(u) == 0
    return tuple(reversed(letters))


def tiling_from_word(word: Word, n: int) -> Tiling:
    """The rhombic tiling whose peel sequence reads ``word`` right-to-left.

    >>> tiling_from_word((), 3).tiles
    frozenset()
    """
    word = tuple(word)
    w = check_reduced(word, n)
    u = w
    tiles = set()
    for letter in reversed(word):
        prefixes = _prefix_sets(u)
        tiles.add(Tile(frozenset({u[letter - 1], u[letter]}), prefixes[letter - 1]))
        u = right_mult_adjacent(u, letter)
    return Tiling(w, frozenset(tiles))


def eln(t: Tiling):
    """The commutation class corresponding to a rhombic tiling."""
    if not t.is_rhombic():
        raise ValueError("eln requires a rhombic tiling")
    word = peel_word(t)
    cls = classes(t.w)
    return cls[class_of(word, cls)]


# ---------------------------------------------------------------------------
# Flips and the flip graph


def _flip_templates(a: int, b: int, c: int, S: Point):
    variant_a = frozenset(
        {
            Tile(frozenset({b, c}), S),
            Tile(frozenset({a, c}), S | {b}),
            Tile(frozenset({a, b}), S),
        }
    )
    variant_b = frozenset(
        {
            Tile(frozenset({a, b}), S | {c}),
            Tile(frozenset({a, c}), S),
            Tile(frozenset({b, c}), S | {a}),
        }
    )
    return variant_a, variant_b


def sub_hexagons(t: Tiling) -> list:
    """All flippable sub-hexagons, as (labels {a,b,c}, anchor, tile triple)."""
    out = []
    tiles = t.tiles
    for tile in tiles:
        if tile.order != 2:
            continue
        a, b = sorted(tile.labels)
        S = tile.anchor
        for c in range(b + 1, len(t.w) + 1):
            if c in S:
                continue
            va, vb = _flip_templates(a, b, c, S)
            if va <= tiles:
                out.append((frozenset({a, b, c}), S, va))
        # tile may be the {a, c} rhombus of variant B
        for mid in range(a + 1, b):
            if mid in S:
                continue
            va, vb = _flip_templates(a, mid, b, S)
            if vb <= tiles:
                out.append((frozenset({a, mid, b}), S, vb))
    return out


def flip_neighbors(t: Tiling) -> list:
    out = []
    for labels, S, triple in sub_hexagons(t):
        a, b, c = sorted(labels)
        va, vb = _flip_templates(a, b, c, S)
        other = vb if triple == va else va
        out.append(Tiling(t.w, (t.tiles - triple) | other))
    return out


def flip_graph_from_tilings(
    w: Perm, max_length: int = DEFAULT_MAX_LENGTH, override: bool = False
) -> FlipGraph:
    """The flip graph on T(w); vertices in deterministic order."""
    tilings = enumerate_rhombic(w, max_length=max_length, override=override)
    index = {t.key(): i for i, t in enumerate(tilings)}
    edges = set()
    for i, t in enumerate(tilings):
        for nbr in flip_neighbors(t):
            j = index[nbr.key()]
            edges.add((min(i, j), max(i, j)))
    return FlipGraph(
        vertices=tuple(tilings),
        edges=frozenset(edges),
        labels=tuple(format_word(peel_word(t)) for t in tilings),
    )


# ---------------------------------------------------------------------------
# MONO: lifting a tiling of the pattern polygon


def _sort_window(u: Perm, r: int, s: int, tiles: list) -> Perm:
    """Sort positions r..s ascending by peeling rhombi (topmost descent first)."""
    while True:
        j = next(
            (j for j in range(r, s) if u[j - 1] > u[j]),
            None,
        )
        if j is None:
            return u
        tiles.append(Tile(frozenset({u[j - 1], u[j]}), _prefix_sets(u)[j - 1]))
        u = right_mult_adjacent(u, j)


def mono(w: Perm, occ: Occurrence, t: Tiling) -> Tiling:
    """Replay a rhombic tiling of X(p) through the occurrence of p in w.

    Each pattern tile, taken in peel order, sorts the corresponding window of
    w (the two pattern entries and everything between them); the window
    differences and the final leftover region are tiled by rhombi
    deterministically.
    """
    w = check_perm(w)
    p = occ.pattern
    if tuple(w[i - 1] for i in occ.positions) != occ.values:
        raise ValueError("occurrence does not match the permutation")
    if t.w != p or not t.is_rhombic():
        raise ValueError("t must be a rhombic tiling of the pattern's polygon")
    amb = occ.roles()  # amb[v - 1] plays the pattern value v
    u, pcur = w, p
    remaining = set(t.tiles)
    tiles: list = []
    while remaining:
        prefixes = _prefix_sets(pcur)
        j, tile = next(
            (j, tile)
            for j in range(1, len(pcur))
            if pcur[j - 1] > pcur[j]
            and (tile := Tile(frozenset({pcur[j - 1], pcur[j]}), prefixes[j - 1]))
            in remaining
        )
        remaining.discard(tile)
        r = u.index(amb[pcur[j - 1] - 1]) + 1
        s = u.index(amb[pcur[j] - 1]) + 1
        assert r < s
        u = _sort_window(u, r, s, tiles)
        pcur = right_mult_adjacent(pcur, j)
    assert pcur == tuple(sorted(pcur))
    u = _sort_window(u, 1, len(u), tiles)
    assert u == identity(len(w))
    return Tiling(w, frozenset(tiles))


# ---------------------------------------------------------------------------
# Decreasing patterns and uniform tilings


def _decreasing_subsequence_sets(w: Perm) -> set:
    n = len(w)
    out: set = set()
    for size in range(2, n + 1):
        for pos in combinations(range(n), size):
            values = [w[i] for i in pos]
            if all(values[t] > values[t + 1] for t in range(size - 1)):
                out.add(frozenset(values))
    return out


def decreasing_tile_check(
    w: Perm, max_length: int = DEFAULT_MAX_LENGTH, override: bool = False
) -> bool:
    """Tiles appearing across Z(w) are exactly the decreasing subsequences.

    Both directions: every tile's label set {i_1 < ... < i_k} occurs as the
    decreasing subsequence i_k ... i_1 in w, and every decreasing subsequence
    of length >= 2 is the label set of a tile in some zonotopal tiling.
    """
    tile_sets = {
        t.labels
        for z in enumerate_zonotopal(w, max_length=max_length, override=override)
        for t in z.tiles
    }
    return tile_sets == _decreasing_subsequence_sets(check_perm(w))


def uniform_2k_tiling_exists(n: int, k: int) -> bool:
    """Is there a tiling of X(n n-1 ... 1) consisting entirely of 2k-gons?

    >>> [uniform_2k_tiling_exists(4, k) for k in (2, 3, 4)]
    [True, False, True]
    """
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    memo: dict[Perm, bool] = {}

    def rec(u: Perm) -> bool:
        if u not in memo:
            memo[u] = False  # guards cycles; peeling only shortens, so unused
            if length(u) == 0:
                memo[u] = True
            else:
                memo[u] = any(
                    rec(_reverse_window(u, j, k))
                    for j in range(1, len(u) - k + 2)
                    if all(u[t] > u[t + 1] for t in range(j - 1, j - 2 + k))
                )
        return memo[u]

    from .permcore import longest_element

    return rec(longest_element(n))


# ---------------------------------------------------------------------------
# The poset P(w)


@dataclass(frozen=True)
class TilingPoset:
    """Z(w) ordered by reverse edge inclusion (rhombic tilings are minimal)."""

    w: Perm
    elements: tuple

    @cached_property
    def leq(self) -> tuple:
        n = len(self.elements)
        return tuple(
            tuple(self.elements[i].leq(self.elements[j]) for j in range(n))
            for i in range(n)
        )

    @cached_property
    def hasse(self) -> frozenset:
        """Cover pairs (i, j) with element i covered by element j."""
        n = len(self.elements)
        covers = set()
        for i in range(n):
            for j in range(n):
                if i != j and self.leq[i][j]:
                    if not any(
                        k != i and k != j and self.leq[i][k] and self.leq[k][j]
                        for k in range(n)
                    ):
                        covers.add((i, j))
        return frozenset(covers)

    def minimal_indices(self) -> list[int]:
        return [
            j
            for j in range(len(self.elements))
            if not any(i != j and self.leq[i][j] for i in range(len(self.elements)))
        ]

    def maximal_indices(self) -> list[int]:
        return [
            i
            for i in range(len(self.elements))
            if not any(j != i and self.leq[i][j] for j in range(len(self.elements)))
        ]

    def down_set(self, j: int) -> list[int]:
        return [i for i in range(len(self.elements)) if i != j and self.leq[i][j]]


def poset(
    w: Perm, max_length: int = DEFAULT_MAX_LENGTH, override: bool = False
) -> TilingPoset:
    elements = enumerate_zonotopal(w, max_length=max_length, override=override)
    p = TilingPoset(check_perm(w), elements)
    minimal = {elements[i].key() for i in p.minimal_indices()}
    rhombic = {t.key() for t in enumerate_rhombic(w, max_length=max_length, override=override)}
    assert minimal == rhombic, "minimal elements must be the rhombic tilings"
    return p


def has_unique_max(p: TilingPoset) -> bool:
    return len(p.maximal_indices()) == 1


def maximal_cover_minimal(p: TilingPoset) -> bool:
    """Every element strictly below a maximal element is minimal (height <= 1)."""
    minimal = set(p.minimal_indices())
    return all(
        set(p.down_set(i)) <= minimal for i in p.maximal_indices()
    )


def level2_cycle_correspondence(
    w: Perm, max_length: int = DEFAULT_MAX_LENGTH, override: bool = False
) -> bool:
    """Level-2 poset elements are rhombi+2 hexagons or rhombi+1 octagon, and
    their induced cycles span the GF(2) cycle space of the flip graph."""
    p = poset(w, max_length=max_length, override=override)
    minimal = p.minimal_indices()
    graph = flip_graph_from_tilings(w, max_length=max_length, override=override)
    vertex_index = {t.key(): i for i, t in enumerate(graph.vertices)}

    edge_level = set()
    for i, j in p.hasse:
        if i in minimal:
            edge_level.add(j)
    for j in edge_level:
        profile = p.elements[j].shape_profile()
        if [o for o in profile if o > 2] != [3]:
            return False
    level2 = {j for i, j in p.hasse if i in edge_level}

    cycle_vectors = []
    edge_index = {e: i for i, e in enumerate(sorted(graph.edges))}
    adj = graph.adjacency()
    for j in level2:
        profile = [o for o in p.elements[j].shape_profile() if o > 2]
        if profile not in ([3, 3], [4]):
            return False
        below = [vertex_index[p.elements[i].key()] for i in p.down_set(j) if i in minimal]
        expected = 4 if profile == [3, 3] else 8
        if len(below) != expected:
            return False
        cycle_edges = {
            (min(a, b), max(a, b))
            for a in below
            for b in adj[a]
            if b in below
        }
        if len(cycle_edges) != expected or any(
            sum(1 for b in adj[a] if b in below) != 2 for a in below
        ):
            return False
        cycle_vectors.append(sum(1 << edge_index[e] for e in cycle_edges))

    dim = len(graph.edges) - graph.vertex_count + 1
    return gf2_rank(cycle_vectors) == dim


def chain_equivalences(
    w: Perm, max_length: int = DEFAULT_MAX_LENGTH, override: bool = False
) -> tuple[bool, bool, bool, bool]:
    """(flip graph is a tree, is a path, maximal covers minimal in P(w),
    w avoids 4321 and all 321-patterns pairwise intersect at least twice)."""
    from .commutation import is_path, is_tree
    from .patterns import avoids

    g = flip_graph_from_tilings(w, max_length=max_length, override=override)
    p = poset(w, max_length=max_length, override=override)
    occs = occurrences(w, (3, 2, 1))
    pattern_cond = avoids(w, (4, 3, 2, 1)) and all(
        len(set(a.positions) & set(b.positions)) >= 2
        for a, b in combinations(occs, 2)
    )
    return (is_tree(g), is_path(g), maximal_cover_minimal(p), pattern_cond)


# ---------------------------------------------------------------------------
# Freely braided permutations


def hypercube_graph(k: int) -> FlipGraph:
    vertices = tuple(range(2**k))
    edges = frozenset(
        (v, v | (1 << b))
        for v in vertices
        for b in range(k)
        if not v & (1 << b)
    )
    return FlipGraph(vertices=vertices, edges=edges, labels=tuple(map(str, vertices)))


def cube_face_lattice_minus_bottom(k: int) -> tuple:
    """(elements, leq matrix) for the faces of the k-cube ordered by inclusion,
    without the empty face.  Faces are words over {0, 1, 2}, 2 meaning free."""
    elements = []

    def gen(prefix):
        if len(prefix) == k:
            elements.append(tuple(prefix))
            return
        for c in (0, 1, 2):
            gen(prefix + [c])

    gen([])

    def face_leq(f, g):
        return all(gc == 2 or gc == fc for fc, gc in zip(f, g))

    leq = tuple(
        tuple(face_leq(f, g) for g in elements) for f in elements
    )
    return tuple(elements), leq


def posets_isomorphic(leq1: tuple, leq2: tuple) -> bool:
    """Exact poset isomorphism by backtracking on comparability profiles."""
    n = len(leq1)
    if n != len(leq2):
        return False

    def profile(leq, i):
        down = sum(leq[j][i] for j in range(n)) - 1
        up = sum(leq[i][j] for j in range(n)) - 1
        return (down, up)

    prof1 = [profile(leq1, i) for i in range(n)]
    prof2 = [profile(leq2, i) for i in range(n)]
    if sorted(prof1) != sorted(prof2):
        return False
    order = sorted(range(n), key=lambda i: prof1[i])
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def place(idx: int) -> bool:
        if idx == n:
            return True
        i = order[idx]
        for cand in range(n):
            if cand in used or prof2[cand] != prof1[i]:
                continue
            if all(
                leq2[cand][c2] == leq1[i][i2] and leq2[c2][cand] == leq1[i2][i]
                for i2, c2 in mapping.items()
            ):
                mapping[i] = cand
                used.add(cand)
                if place(idx + 1):
                    return True
                del mapping[i]
                used.remove(cand)
        return False

    return place(0)


@dataclass(frozen=True)
class FreelyBraidedReport:
    k: int
    class_count_ok: bool
    graph_is_kcube: bool
    poset_size: int
    poset_is_cube_face_lattice_minus_bottom: bool
    hexagons_ok: bool

    def all_ok(self) -> bool:
        return (
            self.class_count_ok
            and self.graph_is_kcube
            and self.poset_size == 3**self.k
            and self.poset_is_cube_face_lattice_minus_bottom
            and self.hexagons_ok
        )


def freely_braided_structure(
    w: Perm, max_length: int = DEFAULT_MAX_LENGTH, override: bool = False
) -> FreelyBraidedReport:
    """Structure report for a freely braided permutation: |C(w)| = 2^k, flip
    graph = k-cube, P(w) = face lattice of the k-cube minus its bottom, and
    every rhombic tiling has exactly k pairwise disjoint sub-hexagons."""
    w = check_perm(w)
    if not is_freely_braided(w):
        raise ValueError("w is not freely braided")
    k = len(occurrences(w, (3, 2, 1)))
    cls = classes(w, max_length=max_length, override=override)
    graph = flip_graph_from_tilings(w, max_length=max_length, override=override)
    from .commutation import graphs_isomorphic

    p = poset(w, max_length=max_length, override=override)
    _, reference_leq = cube_face_lattice_minus_bottom(k)
    hexagons_ok = True
    for t in graph.vertices:
        hexes = sub_hexagons(t)
        disjoint = all(
            not (h1[2] & h2[2]) for h1, h2 in combinations(hexes, 2)
        )
        if len(hexes) != k or not disjoint:
            hexagons_ok = False
    return FreelyBraidedReport(
        k=k,
        class_count_ok=len(cls) == 2**k,
        graph_is_kcube=graphs_isomorphic(graph, hypercube_graph(k)),
        poset_size=len(p.elements),
        poset_is_cube_face_lattice_minus_bottom=posets_isomorphic(
            p.leq, reference_leq
        ),
        hexagons_ok=hexagons_ok,
    )


# ---------------------------------------------------------------------------
# Rendering and serialization


def _fmt(value: float) -> str:
    out = f"{value + 0:.4f}"
    return "0.0000" if out == "-0.0000" else out


def _svg_header(points: list) -> tuple[str, float, float]:
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    pad = 20.0
    x0, y0 = min(xs) - pad, min(ys) - pad
    width, height = max(xs) - x0 + pad, max(ys) - y0 + pad
    header = (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    return header, x0, y0


def polygon_svg(w: Perm, scale: float = 40.0) -> str:
    poly = build_polygon(w)
    n = poly.n
    if poly.is_degenerate():
        return (
            '<svg xmlns="http://www.w3.org/2000/svg" width="200" height="40">'
            '<text x="10" y="25">degenerate polygon (identity permutation)</text>'
            "</svg>\n"
        )
    left = [frozenset(range(1, j + 1)) for j in range(n + 1)]
    right = _prefix_sets(w)
    cycle = left + list(reversed(right[1:-1]))
    points = [
        tuple(scale * c for c in poly.locate(pt)) for pt in cycle
    ]
    header, x0, y0 = _svg_header(points)
    shifted = [(x - x0, y - y0) for x, y in points]
    path = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in shifted)
    lines = [header]
    lines.append(
        f'<polygon points="{path}" fill="none" stroke="black" stroke-width="1"/>'
    )
    # labels midway along each boundary edge
    labels = list(range(1, n + 1)) + list(reversed(w))
    ring = shifted + [shifted[0]]
    for (a, b), lab in zip(zip(ring, ring[1:]), labels):
        mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
        lines.append(
            f'<text x="{_fmt(mx)}" y="{_fmt(my)}" font-size="10">{lab}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def tiling_svg(t: Tiling, scale: float = 40.0) -> str:
    poly = build_polygon(t.w)
    if poly.is_degenerate():
        return polygon_svg(t.w, scale)
    all_points = [
        tuple(scale * c for c in poly.locate(pt))
        for tile in t.tiles
        for pt in _tile_cycle(tile)
    ] or [tuple(scale * c for c in poly.locate(frozenset()))]
    boundary = [frozenset(range(1, j + 1)) for j in range(len(t.w) + 1)]
    all_points += [tuple(scale * c for c in poly.locate(pt)) for pt in boundary]
    header, x0, y0 = _svg_header(all_points)
    lines = [header]
    for tile in sorted(t.tiles, key=lambda s: (sorted(s.labels), sorted(s.anchor))):
        pts = [
            tuple(scale * c for c in poly.locate(pt)) for pt in _tile_cycle(tile)
        ]
        path = " ".join(f"{_fmt(x - x0)},{_fmt(y - y0)}" for x, y in pts)
        fill = "#cce5ff" if tile.order == 2 else "#ffd9b3"
        lines.append(
            f'<polygon points="{path}" fill="{fill}" stroke="black" stroke-width="1"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _tile_cycle(tile: Tile) -> list:
    down = [tile.anchor]
    for label in sorted(tile.labels, reverse=True):
        down.append(down[-1] | {label})
    up = [tile.anchor]
    for label in sorted(tile.labels):
        up.append(up[-1] | {label})
    return down + list(reversed(up[1:-1]))


def tiling_to_json(t: Tiling) -> str:
    payload = {
        "schema": 1,
        "w": list(t.w),
        "tiles": sorted(
            (
                {"labels": sorted(tile.labels), "anchor": sorted(tile.anchor)}
                for tile in t.tiles
            ),
            key=lambda d: (d["labels"], d["anchor"]),
        ),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def poset_to_json(p: TilingPoset) -> str:
    payload = {
        "schema": 1,
        "w": list(p.w),
        "elements": [
            {
                "tiles": sorted(
                    (
                        {"labels": sorted(t.labels), "anchor": sorted(t.anchor)}
                        for t in elt.tiles
                    ),
                    key=lambda d: (d["labels"], d["anchor"]),
                )
            }
            for elt in p.elements
        ],
        "hasse": sorted([i, j] for i, j in p.hasse),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def poset_to_dot(p: TilingPoset) -> str:
    lines = ["digraph P {", "  rankdir=BT;"]
    for i, elt in enumerate(p.elements):
        profile = ",".join(str(o) for o in elt.shape_profile()) or "empty"
        lines.append(f'  z{i} [label="{profile}"];')
    for i, j in sorted(p.hasse):
        lines.append(f"  z{i} -> z{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
