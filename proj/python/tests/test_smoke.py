"""Smoke tests for the python bindings: session execution, the doubling
construction, and the property suites, pinned to known values."""

import doublekit


def test_double_of_principal_ideal():
    gens = doublekit.double_module_gens(["x"], ["(x)"])
    assert gens == ["(x, y)", "(0, (y - x)*y)"]


def test_double_of_full_module():
    gens = doublekit.double_module_gens(["x"], ["(1)"])
    assert gens == ["(1, 1)", "(0, y - x)"]


def test_session_roundtrip():
    text = (
        "ring R vars x;\n"
        "module M in R^1 gens [(x)];\n"
        "double M;\n"
        "member M_D (x^2, y^2);\n"
    )
    output, error, code = doublekit.run_session(text)
    assert error == ""
    assert code == 0
    assert output == "(x, y)\n(0, (y - x)*y)\ntrue\n"


def test_session_error_reports_position():
    output, error, code = doublekit.run_session("ring R vars x;\nring R vars y;\n")
    assert code == 1
    assert "error: 2:" in error
    assert "name already bound: R" in error


def test_verify_deterministic():
    first = doublekit.verify("P3.4-a", trials=10, seed=7)
    second = doublekit.verify("P3.4-a", trials=10, seed=7)
    assert first["passed"] is True
    assert first["summary"] == "PROP P3.4-a trials=10 failures=0"
    assert first == second


def test_catalog_contains_core_properties():
    ids = {entry["id"] for entry in doublekit.catalog()}
    assert {"P3.4-a", "RANK-EVEN", "T3.21", "Q4-rep"} <= ids
