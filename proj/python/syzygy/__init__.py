"""Syzygies of modules over finite-dimensional algebras given by quivers with relations."""

import json

from ._core import (
    Algebra,
    Module,
    SyzygyError,
    findim,
    pdim,
    repetition_index,
    syzygy_dims,
)
from ._core import run as _run


def run(*args):
    """Run a command-line subcommand and return (exit_code, report dict)."""
    code, text = _run([str(a) for a in args])
    return code, json.loads(text)


__all__ = [
    "Algebra",
    "Module",
    "SyzygyError",
    "findim",
    "pdim",
    "repetition_index",
    "run",
    "syzygy_dims",
]
