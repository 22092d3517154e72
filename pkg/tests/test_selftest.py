import time

import pytest

from kcalc.exceptions import InvalidParameterError, SuiteNotFoundError
from kcalc.ktheory.selftest import SUITES, _Suite, run_suites, summary_frame


class BrokenSuite(_Suite):
    name = 'broken'

    def register(self) -> None:
        def always_one() -> int:
            return 1

        def false_claim() -> int:
            if 1 + 1 != 3:
                raise AssertionError("1 + 1 != 3")
            return 1

        def domain_failure() -> int:
            raise InvalidParameterError("paramètre refusé", parameter='n')

        self.check('always_one', always_one)
        self.check('false_claim', false_claim)
        self.check('domain_failure', domain_failure)


def test_every_suite_is_registered():
    assert set(SUITES) == {
        'snf', 'grothendieck', 'symfun', 'charclass', 'toeplitz', 'clutching', 'ktables', 'hopf', 'whitehead',
    }


@pytest.mark.parametrize('tag', ['snf', 'grothendieck', 'symfun', 'ktables', 'hopf', 'whitehead'])
def test_exact_suites_pass(numerics_config, tag):
    checks = run_suites(tag, seed=0, numerics_config=numerics_config)
    assert checks
    assert all(c.passed for c in checks), [c.detail for c in checks if not c.passed]
    assert {c.suite for c in checks} == {tag}


def test_all_suites_pass_within_a_minute(numerics_config):
    start = time.perf_counter()
    checks = run_suites('all', seed=0, numerics_config=numerics_config)
    elapsed = time.perf_counter() - start
    assert {c.suite for c in checks} == set(SUITES)
    assert [c for c in checks if not c.passed] == []
    assert elapsed < 60


def test_runs_are_reproducible(numerics_config):
    first = [(c.name, c.passed, c.cases) for c in run_suites('grothendieck', 3, numerics_config)]
    second = [(c.name, c.passed, c.cases) for c in run_suites('grothendieck', 3, numerics_config)]
    assert first == second


def test_unknown_suite():
    with pytest.raises(SuiteNotFoundError) as info:
        run_suites('nope')
    assert info.value.extra['suite'] == 'nope'


def test_failures_are_captured(numerics_config):
    checks = BrokenSuite(numerics_config).run(0)
    assert [c.passed for c in checks] == [True, False, False]
    assert checks[1].detail == "1 + 1 != 3"
    assert 'paramètre refusé' in checks[2].detail


def test_summary_frame(numerics_config):
    frame = summary_frame(BrokenSuite(numerics_config).run(0))
    row = frame.iloc[0]
    assert row['suite'] == 'broken'
    assert row['properties'] == 3
    assert row['failed'] == 2
    assert summary_frame([]).empty
