"""Pattern containment, vexillarity, obstructions, and 321-pattern analysis."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .permcore import Perm, check_perm, inversions, position


@dataclass(frozen=True)
class Occurrence:
    """An occurrence of ``pattern`` in some ambient permutation.

    ``positions`` are the 1-based indices i_1 < ... < i_k and ``values`` the
    entries at those indices, in position order.  ``value_of_role(m)`` is the
    ambient value playing the pattern value ``m`` (the paper-style bracket
    notation: role m is the m-th smallest value of the occurrence).
    """

    pattern: Perm
    positions: tuple[int, ...]
    values: tuple[int, ...]

    def value_of_role(self, m: int) -> int:
        return sorted(self.values)[m - 1]

    def roles(self) -> tuple[int, ...]:
        """All occurrence values ordered by role: increasing."""
        return tuple(sorted(self.values))


def _same_relative_order(values: tuple[int, ...], p: Perm) -> bool:
    k = len(p)
    return all(
        (values[h] < values[j]) == (p[h] < p[j])
        for h in range(k)
        for j in range(h + 1, k)
    )


def occurrences(w: Perm, p: Perm) -> list[Occurrence]:
    """All occurrences of the pattern ``p`` in ``w``, lexicographic by positions.

    >>> [o.values for o in occurrences((2, 1, 4, 3), (2, 1, 4, 3))]
    [(2, 1, 4, 3)]
    """
    w, p = check_perm(w), check_perm(p)
    if len(p) > len(w):
        return []
    out = []
    for pos in combinations(range(1, len(w) + 1), len(p)):
        values = tuple(w[i - 1] for i in pos)
        if _same_relative_order(values, p):
            out.append(Occurrence(pattern=p, positions=pos, values=values))
    return out


def contains(w: Perm, p: Perm) -> bool:
    if len(p) > len(w):
        return False
    return next(iter(occurrences(w, p)), None) is not None


def avoids(w: Perm, p: Perm) -> bool:
    return not contains(w, p)


def is_vexillary(w: Perm) -> bool:
    """2143-avoidance.

    >>> is_vexillary((3, 6, 4, 1, 5, 7, 2))
    True
    >>> is_vexillary((2, 1, 4, 3))
    False
    """
    return avoids(w, (2, 1, 4, 3))


def is_vexillary_by_rows(w: Perm) -> bool:
    """Vexillarity via total ordering of the rows of the inversion set.

    Independent cross-check for :func:`is_vexillary`.
    """
    n = len(w)
    rows = [frozenset(j for (i, j) in inversions(w) if i == r) for r in range(1, n + 1)]
    rows = [r for r in rows if r]
    return all(a <= b or b <= a for a, b in combinations(rows, 2))


FREELY_BRAIDED_FORBIDDEN = ((4, 3, 2, 1), (4, 2, 3, 1), (4, 3, 1, 2), (3, 4, 2, 1))


def is_freely_braided(w: Perm) -> bool:
    """True iff w avoids 4321, 4231, 4312, and 3421.

    >>> is_freely_braided((3, 5, 2, 1, 4))
    False
    >>> is_freely_braided((5, 2, 1, 4, 3))
    True
    """
    return all(avoids(w, p) for p in FREELY_BRAIDED_FORBIDDEN)


def is_freely_braided_by_intersections(w: Perm) -> bool:
    """Defining condition: distinct 321-patterns meet in at most one position."""
    occs = occurrences(w, (3, 2, 1))
    return all(
        len(set(a.positions) & set(b.positions)) <= 1 for a, b in combinations(occs, 2)
    )


@dataclass(frozen=True)
class ObstructionReport:
    x: int
    m: int
    a: int
    b: int
    obstructed_left: bool
    obstructed_right: bool


def obstruction(w: Perm, occ: Occurrence, x: int) -> ObstructionReport:
    """Obstruction data for the inside entry ``x`` of the occurrence.

    Requires role m with <m> < x < <m+1> to exist and the values
    {<m>, x, <m+1>} to appear in increasing order in ``w``; obstruction is
    undefined otherwise and a ValueError is raised.
    """
    roles = occ.roles()
    k = len(roles)
    if x in roles:
        raise ValueError(f"{x} is a pattern entry, not inside the pattern")
    lo, hi = min(occ.positions), max(occ.positions)
    px = position(w, x)
    if not lo < px < hi:
        raise ValueError(f"{x} is not inside the pattern")
    m = next((m for m in range(1, k) if roles[m - 1] < x < roles[m]), None)
    if m is None:
        raise ValueError(f"no role m with <m> < {x} < <m+1>")
    if not position(w, roles[m - 1]) < px < position(w, roles[m]):
        raise ValueError("values <m>, x, <m+1> do not appear in increasing order")
    a, b = _extents(w, roles, m, px)
    left_end, right_end = roles[m - 1 - a], roles[m + b]
    obstructed_left = any(
        roles[j] < left_end and position(w, left_end) < position(w, roles[j]) < px
        for j in range(k)
    )
    obstructed_right = any(
        roles[j] > right_end and px < position(w, roles[j]) < position(w, right_end)
        for j in range(k)
    )
    return ObstructionReport(x, m, a, b, obstructed_left, obstructed_right)


def _extents(w: Perm, roles: tuple[int, ...], m: int, px: int) -> tuple[int, int]:
    """Maximal a, b with <m-a>, ..., <m>, x, <m+1>, ..., <m+1+b> increasing in w."""
    k = len(roles)
    a = 0
    while m - 1 - (a + 1) >= 0 and position(w, roles[m - 1 - (a + 1)]) < position(
        w, roles[m - 1 - a]
    ):
        a += 1
    b = 0
    while m + (b + 1) <= k - 1 and position(w, roles[m + b]) < position(
        w, roles[m + (b + 1)]
    ):
        b += 1
    return a, b


def analyze_321(w: Perm) -> tuple[int, bool, int | None]:
    """(count of 321-occurrences, whether all share max and min, unique middle).

    The middle value is reported only when the occurrence is unique.

    >>> analyze_321((5, 2, 3, 4, 1))
    (3, True, None)
    """
    occs = occurrences(w, (3, 2, 1))
    k = len(occs)
    shared = (
        len({o.value_of_role(3) for o in occs}) <= 1
        and len({o.value_of_role(1) for o in occs}) <= 1
    )
    middle = occs[0].value_of_role(2) if k == 1 else None
    return k, shared, middle


def in_U_n(w: Perm) -> bool:
    """Membership in U_n: every 321-pattern shares its maximal and minimal value."""
    _, shared, _ = analyze_321(w)
    return shared


def in_U_n_j(w: Perm, j: int) -> bool:
    """Membership in U_n(j): a unique 321-pattern whose middle value is j+1."""
    k, _, middle = analyze_321(w)
    return k == 1 and middle == j + 1
