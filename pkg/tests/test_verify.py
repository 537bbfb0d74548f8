from eigdisp.verify import SUITES, run_suite


def test_suite_names():
    assert set(SUITES) == {"bounds", "oracle", "product", "clustering"}


def test_bounds_suite_up_to_5():
    checks = run_suite("bounds", n_max=5)
    assert checks and all(c.passed for c in checks)


def test_oracle_suite_small_sizes():
    checks = run_suite("oracle", sizes=(3, 10))
    assert all(c.passed for c in checks), [c for c in checks if not c.passed]


def test_product_suite():
    assert all(c.passed for c in run_suite("product", trials=5))


def test_clustering_suite():
    assert all(c.passed for c in run_suite("clustering", n_max=5))
