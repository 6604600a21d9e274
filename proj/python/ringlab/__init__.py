"""Ideal classification and theorem verification over finite and arithmetic rings."""

import json

from ._core import (
    Ring,
    classify,
    ideals,
    parse_ring,
    run_cli,
    theorem_ids,
)
from . import _core


def verify(theorems=(), corpus=None, jobs=1):
    """Run the registry and return one dict per report record."""
    return [json.loads(line) for line in _core.verify(list(theorems), corpus, jobs).splitlines()]


def hunt(theorem, drop, corpus=None):
    """Re-run one theorem with the named hypotheses unenforced."""
    return [json.loads(line) for line in _core.hunt(theorem, list(drop), corpus).splitlines()]


__all__ = ["Ring", "classify", "hunt", "ideals", "parse_ring", "run_cli", "theorem_ids", "verify"]
