"""Reduced decompositions: evaluation, enumeration, shifts, braid moves, factors.

A reduced word is a tuple of letters in ``1..n-1``; the word ``(i_1, ..., i_l)``
stands for the product ``s_{i_1} ... s_{i_l}``.
"""

from __future__ import annotations

from functools import lru_cache

from .permcore import Perm, check_perm, descents, identity, length, right_mult_adjacent

Word = tuple[int, ...]

DEFAULT_MAX_LENGTH = 16
DEFAULT_MAX_WORDS = 5_000_000


class BudgetError(RuntimeError):
    """Raised when an enumeration exceeds its configured budget."""


def parse_word(text: str) -> Word:
    text = text.strip()
    if "," in text or " " in text:
        return tuple(int(p) for p in text.replace(",", " ").split())
    return tuple(int(ch) for ch in text)


def format_word(word: Word) -> str:
    """Concatenated digits when every letter is < 10, comma-separated otherwise."""
    if not word:
        return "e"
    if max(word) <= 9:
        return "".join(str(a) for a in word)
    return ",".join(str(a) for a in word)


def evaluate(letters, n: int) -> tuple[Perm, bool]:
    """Evaluate the word as a product of adjacent transpositions in S_n.

    Returns the product and whether the word is reduced (every letter
    lengthens the product).

    >>> evaluate((1, 2, 1), 3)
    ((3, 2, 1), True)
    >>> evaluate((1, 1), 3)
    ((1, 2, 3), False)
    """
    word = tuple(letters)
    if any(not 1 <= a <= n - 1 for a in word):
        raise ValueError(f"letters must lie in 1..{n - 1}: {word!r}")
    u = identity(n)
    reduced = True
    for a in word:
        if u[a - 1] > u[a]:
            reduced = False
        u = right_mult_adjacent(u, a)
    return u, reduced


def check_reduced(word, n: int) -> Perm:
    w, reduced = evaluate(word, n)
    if not reduced:
        raise ValueError(f"word {format_word(tuple(word))} is not reduced")
    return w


@lru_cache(maxsize=None)
def count_R(w: Perm) -> int:
    """|R(w)| by descent recursion (cheap; used for budget checks)."""
    if not descents(w):
        return 1
    return sum(count_R(right_mult_adjacent(w, i)) for i in descents(w))


def enumerate_R(
    w: Perm,
    max_length: int = DEFAULT_MAX_LENGTH,
    max_words: int = DEFAULT_MAX_WORDS,
    override: bool = False,
) -> tuple[Word, ...]:
    """All reduced decompositions of ``w``, sorted lexicographically.

    >>> [format_word(j) for j in enumerate_R((3, 2, 1))]
    ['121', '212']
    """
    w = check_perm(w)
    if not override:
        if length(w) > max_length:
            raise BudgetError(
                f"length(w) = {length(w)} exceeds the limit {max_length}; "
                "raise --max-length to override"
            )
        if count_R(w) > max_words:
            raise BudgetError(
                f"|R(w)| = {count_R(w)} exceeds the limit {max_words}; "
                "raise --max-words to override"
            )
    memo: dict[Perm, tuple[Word, ...]] = {}

    def rec(u: Perm) -> tuple[Word, ...]:
        ds = descents(u)
        if not ds:
            return ((),)
        cached = memo.get(u)
        if cached is None:
            cached = tuple(
                prefix + (i,) for i in ds for prefix in rec(right_mult_adjacent(u, i))
            )
            memo[u] = cached
        return cached

    return tuple(sorted(rec(w)))


def shift(word: Word, M: int, new_n: int) -> Word:
    """Add M to every letter; the result must fit in S_{new_n}.

    >>> shift((1, 2), 1, 4)
    (2, 3)
    """
    if M < 0:
        raise ValueError("shift must be nonnegative")
    if word and max(word) + M > new_n - 1:
        raise ValueError(f"shift by {M} leaves letters outside 1..{new_n - 1}")
    return tuple(a + M for a in word)


def find_shift_factor(
    word: Word, pattern_words
) -> tuple[int, int, Word] | None:
    """First (start, M, pattern_word) with word[start : start+len] a shift.

    Positions are 1-based; scanning is by start position, then by pattern
    word in sorted order.  Returns None if no shifted factor occurs.
    """
    pats = sorted(set(map(tuple, pattern_words)))
    for start in range(1, len(word) + 2):
        for pat in pats:
            if not pat:
                return start, 0, pat
            factor = word[start - 1 : start - 1 + len(pat)]
            if len(factor) < len(pat):
                continue
            M = factor[0] - pat[0]
            if M >= 0 and all(f - p == M for f, p in zip(factor, pat)):
                return start, M, pat
    return None


def braid_moves(word: Word) -> tuple[list[int], list[int]]:
    """(short, long) braid move positions, 1-based.

    Short: positions a with |word[a] - word[a+1]| > 1.  Long: positions a
    where word[a .. a+2] has the form j (j+-1) j.

    >>> braid_moves((1, 2, 3, 2, 1, 2))
    ([], [2, 4])
    """
    short = [a for a in range(1, len(word)) if abs(word[a - 1] - word[a]) > 1]
    long = [
        a
        for a in range(1, len(word) - 1)
        if word[a - 1] == word[a + 1] and abs(word[a - 1] - word[a]) == 1
    ]
    return short, long


def apply_short_move(word: Word, pos: int) -> Word:
    a, b = word[pos - 1], word[pos]
    assert abs(a - b) > 1
    return word[: pos - 1] + (b, a) + word[pos + 1 :]


def apply_long_move(word: Word, pos: int) -> Word:
    a, b = word[pos - 1], word[pos]
    assert word[pos + 1] == a and abs(a - b) == 1
    return word[: pos - 1] + (b, a, b) + word[pos + 2 :]


def is_isolated(word: Word, start: int, factor_len: int, M: int, k: int, n: int) -> bool:
    """Whether the designated factor is isolated for the window {1+M, ..., k+M}.

    The prefix before the factor must keep the positions 1+M..k+M increasing,
    and the suffix after it must keep the values 1+M..k+M in increasing order.
    """
    factor = word[start - 1 : start - 1 + factor_len]
    allowed = set(range(1 + M, k + M))
    if not set(factor) <= allowed:
        raise ValueError(f"factor letters {factor} not all in {sorted(allowed)}")
    u, _ = evaluate(word[: start - 1], n)
    v, _ = evaluate(word[start - 1 + factor_len :], n)
    window = range(1 + M, k + M + 1)
    positions_increasing = all(u[i - 1] < u[i] for i in window if i + 1 in window)
    values_increasing = all(
        v.index(i) < v.index(i + 1) for i in window if i + 1 in window
    )
    return positions_increasing and values_increasing
