"""Exact computations in gl2(C_q)~ and its free-field module."""

from ._qeala import (
    Scalar,
    bracket,
    form,
    gram,
    omega,
    pi_apply,
    positivity,
    run_command,
)

__all__ = [
    "Scalar",
    "bracket",
    "form",
    "gram",
    "omega",
    "pi_apply",
    "positivity",
    "run_command",
]
