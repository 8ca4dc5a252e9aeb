"""Levi reductions of tensor product multiplicities.

Weights are sequences of integers in fundamental-weight coordinates unless
``mode="gl"`` is passed, in which case they are weakly decreasing partitions
of length rank + 1. Weyl words are strings such as ``"s4 s3"`` (1-based).
"""

import json
import os

from . import _core
from ._core import (
    InputError,
    InternalError,
    ResourceLimit,
    gl_to_sl,
    intersection_number,
    schubert_product,
    tensor_decompose,
    weyl_dimension,
)

__all__ = [
    "InputError",
    "InternalError",
    "ResourceLimit",
    "check_face",
    "generate_rules",
    "gl_to_sl",
    "intersection_number",
    "multiplicity",
    "reduce",
    "replay_corpus",
    "run",
    "schubert_product",
    "tensor_decompose",
    "weyl_dimension",
]

_EXIT_ERRORS = {2: InputError, 3: ResourceLimit}


def run(command, group, **fields):
    """Run a CLI command and return ``(report, exit_code)``."""
    text, code = _core.run_command(command, group, **fields)
    return json.loads(text), code


def _checked(command, group, **fields):
    report, code = run(command, group, **fields)
    if code in _EXIT_ERRORS:
        raise _EXIT_ERRORS[code](report.get("error", {}).get("message", command + " failed"))
    return report


def multiplicity(group, factors, target, mode="sl"):
    """mult(V_target, V_f1 x ... x V_fk)."""
    if mode == "sl":
        return _core.multiplicity(group, [list(f) for f in factors], list(target))
    return _checked("mult", group, mode=mode, factors=[list(f) for f in factors], target=list(target))["mult_big"]


def check_face(group, I, words, w, factors=(), target=None, mode="sl", samples=0, seed=1):
    """Face conditions for (I, words, w); adds ``on_face`` when weights are given."""
    return _checked(
        "check-face", group, mode=mode, factors=[list(f) for f in factors],
        target=None if target is None else list(target), I=list(I), words=list(words), w=w,
        samples=samples, seed=seed,
    )


def reduce(group, factors, target, I, words, w, mode="sl"):
    """Restrict a problem to the Levi of I and compute both multiplicities."""
    return _checked(
        "reduce", group, mode=mode, factors=[list(f) for f in factors], target=list(target),
        I=list(I), words=list(words), w=w,
    )


def generate_rules(group, words, w):
    """One reduction rule per subset of simple roots."""
    return _checked("gen-rules", group, words=list(words), w=w)["rules"]


def replay_corpus(filter="", path=None):
    """Replay the bundled worked examples; returns the summary report."""
    if path is None:
        bundled = os.path.join(os.path.dirname(__file__), "corpus.txt")
        path = bundled if os.path.exists(bundled) else _core.default_corpus_path
    text, _ = _core.replay_corpus(path, filter)
    return json.loads(text)
