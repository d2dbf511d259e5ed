"""Finite-truncation calculator for weighted-mean sequence spaces.

Thin wrapper over the compiled ``_seqspace`` module: value-returning
operations come back as lists of floats, report-returning operations as
dicts decoded from the CLI's deterministic JSON.
"""

import json as _json

from _seqspace import (
    EvalError,
    SpecParseError,
    ValidationError,
    inverse,
    run,
    soperator,
    transform,
)
import _seqspace as _core

__all__ = [
    "transform",
    "inverse",
    "soperator",
    "paranorm",
    "member",
    "dual",
    "condition",
    "classify",
    "run",
    "SpecParseError",
    "EvalError",
    "ValidationError",
]


def paranorm(x, p, N, lam="", p_bound=0.0):
    """Paranorm report for x (ell_lambda when ``lam`` given, else ellp)."""
    return _json.loads(_core.paranorm_json(x=x, lam=lam, p=p, p_bound=p_bound, N=N))


def member(space, x, p, N, lam="", p_bound=0.0):
    """Membership report for x in ellp / ell_lambda / c0_lambda."""
    return _json.loads(_core.member_json(space=space, x=x, lam=lam, p=p, p_bound=p_bound, N=N))


def dual(which, a, lam, p, N, p_bound=0.0):
    """Alpha/beta/gamma dual membership report for the sequence a."""
    return _json.loads(_core.dual_json(which=which, a=a, lam=lam, p=p, p_bound=p_bound, N=N))


def condition(id, A, lam, p, q, N, p_bound=0.0, q_bound=0.0):
    """One mapping condition (4.6 .. 4.21) over the aligned matrix."""
    return _json.loads(
        _core.condition_json(id=id, A=A, lam=lam, p=p, p_bound=p_bound, q=q, q_bound=q_bound, N=N)
    )


def classify(target, A, lam, p, q, N, p_bound=0.0, q_bound=0.0):
    """All conditions for a target space (lq | c0q | cq | linfq), combined."""
    return _json.loads(
        _core.classify_json(
            target=target, A=A, lam=lam, p=p, p_bound=p_bound, q=q, q_bound=q_bound, N=N
        )
    )
