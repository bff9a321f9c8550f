"""The theorem sweep harness (small sizes; the full gate runs in
test_acceptance)."""

import pytest

from redux.verify import THEOREMS, VerifyResult, run


def test_known_theorems():
    assert set(THEOREMS) == {
        "vexthm",
        "1lbm",
        "monotone",
        "elthm",
        "2kgon",
        "2ktiles",
        "chainthm",
        "maxelt",
        "ssv",
        "fb",
        "syt",
    }


def test_unknown_theorem():
    with pytest.raises(KeyError):
        run("nope", 4)


def test_summary_formatting():
    ok = VerifyResult("elthm", True, 24)
    assert ok.summary() == "elthm: PASS (24 checked)"
    bad = VerifyResult("elthm", False, 3, "321")
    assert bad.summary() == "elthm: FAIL at 321"


@pytest.mark.parametrize("theorem", sorted(THEOREMS))
def test_small_sweeps_pass(theorem):
    result = run(theorem, 4)
    assert result.ok, result.summary()
    assert result.checked > 0
    assert result.counterexample is None
