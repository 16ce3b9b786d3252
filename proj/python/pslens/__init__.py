"""Partial-state lenses: i-poset checks, update spaces and the task sync session."""

from ._pslens import (
    Error,
    ParseError,
    Session,
    check_conditions,
    check_duplicable,
    fixture_suite_names,
    generated_iposet,
    get_plain,
    normalize_iposet,
    normalize_tasks,
    put_plain,
    run_laws,
    verify_iposet,
)

__all__ = [
    "Error",
    "ParseError",
    "Session",
    "check_conditions",
    "check_duplicable",
    "fixture_suite_names",
    "generated_iposet",
    "get_plain",
    "normalize_iposet",
    "normalize_tasks",
    "put_plain",
    "run_laws",
    "verify_iposet",
]
