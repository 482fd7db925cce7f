"""Property suite wiring and its sensitivity to injected errors."""

from coopnoma.bessel import bessel_k1
from coopnoma.cli import main
from coopnoma.validate import (
    check_k1_accuracy,
    check_oracle_equivalence,
    format_report,
    run_all,
)


def test_all_properties_pass():
    results = run_all()
    failed = [r for r in results if not r.passed]
    assert not failed, "\n" + format_report(results)


def test_report_format_lists_measurements():
    results = run_all()
    report = format_report(results)
    assert "diversity-order-slope" in report
    assert "slope = -1.0" in report
    assert report.strip().endswith("properties passed")


def test_perturbed_k1_detected():
    # a 1e-6 relative drift of K1 must trip the oracle-equivalence check
    perturbed = lambda x: bessel_k1(x) * (1.0 + 1e-6)
    assert not check_oracle_equivalence(perturbed).passed
    assert not check_k1_accuracy(perturbed).passed


def test_cli_validate_exit_code():
    assert main(["validate"]) == 0
