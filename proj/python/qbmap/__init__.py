"""Quadrangulations with a boundary: sampling, bijections and scaling experiments."""

import json

from . import _qbmap
from ._qbmap import (
    InvalidInput,
    bridge_to_pm1,
    facial_sequence,
    pm1_to_bridge,
    rng_identifier,
    sample_bridge,
    vervaat,
)

__version__ = _qbmap.__version__


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def sample_quadrangulation(n, sigma, seed, stream=0):
    """Uniform pointed quadrangulation as a map dict."""
    return json.loads(_qbmap.sample_quadrangulation(n, sigma, seed, stream))


def sample_encoding(n, sigma, seed, stream=0):
    """Uniform (forest, bridge) pair as a dict."""
    return json.loads(_qbmap.sample_encoding(n, sigma, seed, stream))


def bdg_forward(encoding):
    return json.loads(_qbmap.bdg_forward(_dump(encoding)))


def bdg_inverse(pointed_map):
    return json.loads(_qbmap.bdg_inverse(_dump(pointed_map)))


def quadrangulation_to_saw(boundary_map):
    return json.loads(_qbmap.quadrangulation_to_saw(_dump(boundary_map)))


def saw_to_quadrangulation(saw):
    return json.loads(_qbmap.saw_to_quadrangulation(_dump(saw)))


def contour_pair(encoding):
    return _qbmap.contour_pair(_dump(encoding))


def shifted_labels(encoding):
    return _qbmap.shifted_labels(_dump(encoding))


def bfs_distances(boundary_map, source):
    return _qbmap.bfs_distances(_dump(boundary_map), source)


def canonical_code(boundary_map):
    return _qbmap.canonical_code(_dump(boundary_map))


def count_formula(kind, n, sigma):
    """Exact count as a Python int; kind is 'F', 'B' or 'Q'."""
    return int(_qbmap.count_formula(kind, n, sigma))


def enumerate_count(kind, n, sigma):
    return _qbmap.enumerate_count(kind, n, sigma)


def run_experiment(name, n, sigma_rule="sqrt:1", replicas=10, seed=1, threads=1):
    if isinstance(n, int):
        n = [n]
    return json.loads(_qbmap.run_experiment(name, list(n), sigma_rule, replicas, seed, threads))
