import pytest

import partprod


def test_partition_numbers():
    assert partprod.p(0) == 1
    assert partprod.p(14) == 135
    assert partprod.p(100) == 190569292
    assert len(partprod.partitions(5)) == 7
    assert partprod.partitions(4)[1] == [3, 1]
    assert partprod.p_extended([6, 4, 4]) == 275


def test_inequality_engine():
    assert partprod.compare_products(2, 7)["outcome"] == "EQUAL"
    sets = partprod.scan_exceptional(200)
    assert sets["failures"] == [[2, 2], [2, 3], [2, 4], [2, 5], [3, 3], [3, 5]]
    assert sets["equalities"] == [[2, 6], [2, 7], [3, 4]]
    assert float(partprod.lambda_threshold(2)["lambda"]) == pytest.approx(57.0817, abs=1e-4)
    assert partprod.gap(9, 1.0) > 0 > partprod.gap(8, 1.0)


def test_analytic_bounds():
    lo, hi = partprod.sandwich_log_bounds(50)
    assert lo < partprod.log_p(50) < hi
    assert partprod.mu(1) == pytest.approx(2.5110915135822645)
    assert partprod.sandwich_sweep(2, 200)["passed"]


def test_maximizers():
    assert partprod.maxp(19) == 1925
    assert partprod.canonical_max_partition(19) == [6, 5, 4, 4]
    result = partprod.maxp_bruteforce(7)
    assert result["argmax"] == ["7", "4,3"]
    with pytest.raises(ValueError):
        partprod.canonical_max_partition(7)
    assert partprod.normalize([15]) == [6, 5, 4]
    assert partprod.verify_theorem2(20)["passed"]


def test_parse_errors_surface_as_value_error():
    assert partprod.parse_partition("3,4,4") == [4, 4, 3]
    with pytest.raises(ValueError):
        partprod.parse_partition("4,0")
