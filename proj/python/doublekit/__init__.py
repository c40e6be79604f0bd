"""Doubled-module computations over multivariate rational polynomial rings.

Thin wrapper over the compiled extension; see ``run_session`` for the
session grammar and ``catalog`` for the property suites.
"""

from _doublekit import (
    catalog,
    double_module_gens,
    run_session,
    run_session_file,
    verify,
)

__all__ = [
    "catalog",
    "double_module_gens",
    "run_session",
    "run_session_file",
    "verify",
]
