from hnpkit.checks import check_hnp
from hnpkit.fixtures import catalog_entries
from hnpkit.suite import corrupt, populations, run_suite


def test_corrupt_breaks_hnp():
    A = catalog_entries(0)[0].algebra
    assert check_hnp(A).passed and not check_hnp(corrupt(A)).passed


def test_populations_are_deterministic_and_deduplicated():
    first = populations(0, 2)
    second = populations(0, 2)
    assert [[m.algebra for m in level] for level in first] == [[m.algebra for m in level] for level in second]
    algebras = [m.algebra for level in first for m in level]
    assert len(algebras) == len(set(algebras))
    assert all(check_hnp(A).passed for A in algebras)


def test_run_suite_depth_one():
    result = run_suite(0, 1)
    assert result.passed and result.total >= 200
    assert result.population_sizes == [len(catalog_entries(0))]
    assert "all passed" in result.summary()


def test_run_suite_reports_fault():
    result = run_suite(0, 1, fault=True)
    assert not result.passed
    worst = result.minimal_failure()
    assert worst.theorem == "hnp" and worst.witness is not None
    assert result.to_dict()["failures"][0]["witness"]["identity"]
