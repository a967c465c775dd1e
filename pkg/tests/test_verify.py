from fractions import Fraction

import pytest

from src.verify import SUITES, CheckResult, Tally, check_increasing_frequencies, nu_test_set, run_verify

QUICK_SUITES = ["dual_cauchy", "determinantal", "g_maps", "volume", "minors", "prelimit", "bounds"]
SLOW_SUITES = [name for name in SUITES if name not in QUICK_SUITES]


def test_tally_keeps_the_first_witness():
    tally = Tally("demo")
    tally.check(True, lambda: "unused")
    tally.check(False, lambda: "first")
    tally.check(False, lambda: "second")
    result = tally.result("detail")
    assert result == CheckResult("demo", "fail", 3, "detail", "first")
    assert result.failed


def test_flags_do_not_fail():
    tally = Tally("demo")
    tally.check(True, lambda: "unused")
    tally.flag("borderline")
    result = tally.result()
    assert result.status == "flag"
    assert not result.failed


def test_nu_test_set():
    assert [str(nu) for nu in nu_test_set()] == [";0", ";1", "0;1", "0;2", "1;3", "0 1;3"]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_verify("nothing")


def test_spent_budget_skips_everything():
    results = run_verify("all", budget_ms=-1)
    assert [r.suite for r in results] == list(SUITES)
    assert all(r.status == "skip" for r in results)


@pytest.mark.parametrize("name", QUICK_SUITES)
def test_quick_suites_pass(name):
    (result,) = run_verify(name, seed=7)
    assert result.status == "pass", result.witness
    assert result.checks > 0


@pytest.mark.slow
@pytest.mark.parametrize("name", SLOW_SUITES)
def test_slow_suites_do_not_fail(name):
    (result,) = run_verify(name, seed=7)
    assert not result.failed, result.witness


def test_suite_inputs_are_reproducible():
    first = run_verify("determinantal", seed=11)
    second = run_verify("determinantal", seed=11)
    assert first[0].checks == second[0].checks


def test_increasing_frequencies_pass():
    tally = Tally("sampling")
    frequencies = [Fraction(1, 2), Fraction(3, 5), Fraction(7, 10)]
    check_increasing_frequencies(tally, (6, 10, 14), frequencies, frequencies, 10000)
    assert tally.result().status == "pass"
    assert tally.checks == 2


def test_small_dip_in_sampled_frequencies_is_flagged():
    tally = Tally("sampling")
    check_increasing_frequencies(tally, (6, 10), [Fraction(50, 100), Fraction(495, 1000)],
                                 [Fraction(1, 2), Fraction(1, 2)], 10000)
    assert tally.result().status == "flag"


def test_large_drop_in_sampled_frequencies_fails():
    tally = Tally("sampling")
    check_increasing_frequencies(tally, (6, 10), [Fraction(9, 10), Fraction(1, 2)],
                                 [Fraction(9, 10), Fraction(19, 20)], 10000)
    result = tally.result()
    assert result.failed
    assert "up to N=10" in result.witness


def test_certain_frequencies_must_not_drop():
    tally = Tally("sampling")
    check_increasing_frequencies(tally, (6, 10), [Fraction(1), Fraction(99, 100)],
                                 [Fraction(1), Fraction(1)], 10000)
    assert tally.result().failed
