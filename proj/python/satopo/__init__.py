"""Certified topology of plane semi-algebraic sets.

Polynomials are strings such as "x*(x*y - 1)"; rationals are strings
such as "-1/2". Reports come back as plain dicts following the JSON
report schema of the CLI.
"""

import json

from ._satopo import (
    DegenerateInput,
    Error,
    HypothesisViolation,
    branches,
    chi,
    critical,
    deg_inf,
    gauss_bonnet,
    identities,
    lambda_set,
    link_chi,
    plot,
)
from . import _satopo

__all__ = [
    "DegenerateInput", "Error", "HypothesisViolation", "branches", "chi", "critical", "deg_inf",
    "gauss_bonnet", "identities", "lambda_set", "link_chi", "plot", "verify", "run_corpus",
]


def verify(identity, poly="", *, region="", curve="", alpha=None, v=None, seed=0, mode="sampled", n=64, tol="1/100"):
    """One identity report as a dict."""
    if alpha is not None:
        alpha = str(alpha)
    return json.loads(_satopo.verify_json(identity, poly, region, curve, alpha, v, seed, mode, n, str(tol)))


def run_corpus(text):
    """Verify a corpus given as text; returns reports, summary and exit_code."""
    return json.loads(_satopo.corpus_json(text))
