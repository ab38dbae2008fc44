"""Good-partition certificates and numeric checks for f_n(v) <= 2^floor((n+1)/2).

Sign patterns are sequences of +1 / -1. Reports come back as plain dicts.
"""

import json

from . import _pohst
from ._pohst import (
    CertificateFormatError,
    ConstructionFailure,
    certify,
    check_certificate,
    compare_bounds,
    enumerate_maximizers,
    eval_f,
    hermite_constant,
    noncanonical_set,
    theorem_bound,
)

__all__ = [
    "CertificateFormatError",
    "ConstructionFailure",
    "build_partition",
    "certify",
    "check_certificate",
    "compare_bounds",
    "enumerate_maximizers",
    "eval_f",
    "hermite_constant",
    "maximize",
    "noncanonical_set",
    "sample_domination",
    "sweep",
    "theorem_bound",
]


def build_partition(pattern):
    """Certificate for `pattern` as a dict."""
    return json.loads(certify(list(pattern)))


def sweep(n, jobs=1):
    return json.loads(_pohst.sweep(n, jobs))


def maximize(n, grid_step=0.25, refine_iters=3, starts=64, seed=42):
    return json.loads(_pohst.maximize(n, grid_step, refine_iters, starts, seed))


def sample_domination(n, samples=100000, seed=42, blockwise=False):
    return json.loads(_pohst.sample_domination(n, samples, seed, blockwise))
