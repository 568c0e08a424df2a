"""Private states, repeater-rate bounds and memory-overhead planning for hub networks."""

import json as _json

from ._privnet import *  # noqa: F401,F403
from ._privnet import PrivnetError, plan_json, scheme_json, verify_json


def scheme(spec, delta=1, mode="two-way"):
    """Evaluate a scheme spec (pbit-omega:<d_s>, private:<file>, params:<d_k,d_s,eps>)."""
    return _json.loads(scheme_json(spec, delta, mode))


def plan(gap, d_k=2, family="pbit-omega"):
    """Smallest shield reaching `gap` under `family`, with all families side by side."""
    return _json.loads(plan_json(gap, d_k, family))


def verify(seed=42, trials=50, checks=()):
    """Run the verification suites; returns a list of check reports."""
    return _json.loads(verify_json(seed, trials, list(checks)))
