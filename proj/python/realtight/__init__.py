"""Exact combinatorics of real tight contact structures on solid tori and lens spaces."""

import json as _json

from ._realtight import (
    DomainError,
    Slope,
    catalan,
    farey_distance,
    farey_walk,
    honda_count_lens,
    honda_count_solid_torus,
    lens_from_chain,
    neg_cf_eval,
    neg_cf_expand,
    run_cli,
    tb,
    tb_singularity_link,
)
from . import _realtight as _ext


def disk_matchings(m):
    return _json.loads(_ext.disk_matchings(m))


def annulus_systems(n_in, n_out):
    return _json.loads(_ext.annulus_systems(n_in, n_out))


def replay_proof(name):
    return _json.loads(_ext.replay_proof(name))


def count_real_tight(kind, slope, gamma_count=2):
    return _json.loads(_ext.count_real_tight(kind, slope, gamma_count))


def bounds_table(p_min, p_max):
    return _json.loads(_ext.bounds_table(p_min, p_max))


__all__ = [
    "DomainError",
    "Slope",
    "annulus_systems",
    "bounds_table",
    "catalan",
    "count_real_tight",
    "disk_matchings",
    "farey_distance",
    "farey_walk",
    "honda_count_lens",
    "honda_count_solid_torus",
    "lens_from_chain",
    "neg_cf_eval",
    "neg_cf_expand",
    "replay_proof",
    "run_cli",
    "tb",
    "tb_singularity_link",
]
