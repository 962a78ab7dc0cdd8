import numpy as np
import pytest

from gatss.conformance import (
    SuiteResult,
    run_all,
    suite_commutators,
    suite_homomorphism,
)


class TestRunAll:
    def test_all_suites_pass(self):
        results = run_all(seed=42, count=100)
        assert [r.name for r in results] == [
            "homomorphism",
            "associativity",
            "commutators",
            "rabi_triangle",
        ]
        for r in results:
            assert isinstance(r, SuiteResult)
            assert r.passed, f"{r.name} failed with worst={r.worst:.3e}"
            assert r.worst <= r.tol

    def test_deterministic_per_seed(self):
        a = run_all(seed=7, count=50)
        b = run_all(seed=7, count=50)
        assert a == b

    def test_seed_changes_stream(self):
        a = run_all(seed=1, count=50)
        b = run_all(seed=2, count=50)
        assert [r.worst for r in a] != [r.worst for r in b]

    def test_count_validation(self):
        with pytest.raises(ValueError):
            run_all(seed=0, count=0)


class TestIndividualSuites:
    def test_commutators_exact(self):
        r = suite_commutators()
        assert r.passed and r.worst == 0.0 and r.count == 9

    def test_homomorphism_counts(self):
        r = suite_homomorphism(np.random.default_rng(0), 25)
        assert r.count == 25 and r.passed
