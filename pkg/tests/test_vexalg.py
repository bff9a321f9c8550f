"""The constructive embedding machine and the non-vexillary witness."""

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redux.patterns import is_vexillary, occurrences
from redux.permcore import left_mult_adjacent, length, right_mult_adjacent
from redux.redwords import enumerate_R, evaluate, find_shift_factor
from redux.vexalg import (
    embed_reduced_word,
    lex_least_reduced_word,
    nonvex_witness,
    verify_characterization,
    vex,
)

perms5 = st.permutations((1, 2, 3, 4, 5)).map(tuple)
vex_patterns3 = st.sampled_from(
    [p for p in map(tuple, permutations((1, 2, 3))) if len(p) == 3]
)


def _occ(w, p, values):
    return [o for o in occurrences(w, p) if o.values == values][0]


def test_vex_golden_trace():
    w = (3, 1, 4, 6, 5, 2)
    res = vex(w, _occ(w, (2, 3, 1), (3, 6, 2)))
    assert res.prefix_letters == (5,)
    assert res.suffix_letters == (1, 5, 4)
    assert res.M == 1
    assert res.pattern_positions == (2, 3, 4)
    # w_tilde = s5 w s1 s5 s4, applied in recorded order
    u = left_mult_adjacent(w, 5)
    for i in (1, 5, 4):
        u = right_mult_adjacent(u, i)
    assert res.w_tilde == u
    assert length(res.w_tilde) == length(w) - 4


def test_embed_golden():
    w = (3, 1, 4, 6, 5, 2)
    word = embed_reduced_word(w, _occ(w, (2, 3, 1), (3, 6, 2)), (1, 2))
    assert word == (5, 2, 3, 4, 5, 1)


def test_vex_rejects_bad_input():
    w = (2, 1, 4, 3)
    with pytest.raises(ValueError):
        vex(w, _occ(w, (2, 1, 4, 3), (2, 1, 4, 3)))  # pattern not vexillary
    with pytest.raises(ValueError):
        embed_reduced_word((3, 2, 1), _occ((3, 2, 1), (2, 1), (3, 2)), (1, 2))


def test_nonvex_witness_golden():
    assert nonvex_witness((2, 1, 4, 3)) == (2, 1, 3, 5, 4)
    with pytest.raises(ValueError):
        nonvex_witness((3, 2, 1))  # vexillary


def test_witness_has_no_shifted_factor_S4():
    for p in map(tuple, permutations((1, 2, 3, 4))):
        if is_vexillary(p):
            continue
        witness = nonvex_witness(p)
        assert occurrences(witness, p)
        pattern_words = enumerate_R(p)
        assert all(
            find_shift_factor(word, pattern_words) is None
            for word in enumerate_R(witness)
        ), p


def test_lex_least_reduced_word():
    for w in map(tuple, permutations((1, 2, 3, 4))):
        word = lex_least_reduced_word(w)
        assert word == min(enumerate_R(w))


@settings(max_examples=60)
@given(perms5, vex_patterns3, st.integers(0, 10**6))
def test_vex_invariants(w, p, pick):
    occs = occurrences(w, p)
    if not occs or not is_vexillary(p):
        return
    occ = occs[pick % len(occs)]
    res = vex(w, occ)
    k = len(p)
    # the occurrence sits in consecutive positions M+1 .. M+k of w_tilde
    window = res.w_tilde[res.M : res.M + k]
    ranks = tuple(sorted(window).index(v) + 1 for v in window)
    assert ranks == p
    # each multiplier removes an inversion
    moves = len(res.prefix_letters) + len(res.suffix_letters)
    assert length(res.w_tilde) == length(w) - moves
    # reconstruct w_tilde from the recorded multipliers
    u = w
    for v in reversed(res.prefix_letters):
        u = left_mult_adjacent(u, v)
    for i in res.suffix_letters:
        u = right_mult_adjacent(u, i)
    assert u == res.w_tilde


@settings(max_examples=40, deadline=None)
@given(perms5, vex_patterns3, st.integers(0, 10**6))
def test_embed_output_is_verified(w, p, pick):
    occs = occurrences(w, p)
    if not occs:
        return
    occ = occs[pick % len(occs)]
    words = enumerate_R(p)
    word = words[pick % len(words)]
    out = embed_reduced_word(w, occ, word)
    assert evaluate(out, len(w)) == (w, True)
    assert find_shift_factor(out, [word]) is not None


def test_verify_characterization():
    assert verify_characterization((3, 2, 1), 4)
    assert verify_characterization((2, 1, 4, 3), 4)
