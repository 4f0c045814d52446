"""Koszul cohomology of Veronese embeddings (thin wrapper over the C++ core)."""

import json

from . import _vsl
from ._vsl import GenericityError, ResourceLimitError, PINNED_PRIMES, dense_kpq

__all__ = [
    "PINNED_PRIMES", "GenericityError", "ResourceLimitError", "binom", "h0", "bounds", "kpq", "betti",
    "verify", "ev_map", "theorem_chain", "twist_identification", "duality", "selftest", "cache_stats",
    "cache_gc", "dense_kpq",
]


def _field(prime):
    return "auto" if prime is None else str(prime)


def binom(a, k):
    return int(_vsl.binom(a, k))


def h0(n, m):
    return int(_vsl.h0(n, m))


def bounds(n, d, b=0, q=-1):
    return json.loads(_vsl.bounds_json(n, d, b, q))


def kpq(n, d, p, q, b=0, prime=None):
    return json.loads(_vsl.kpq_json(n, d, b, p, q, _field(prime)))


def betti(n, d, b=0, p_min=0, p_max=-1, q_min=0, q_max=-1, prime=None, certify=False, threads=1,
          cache_dir="", max_block_dim=0):
    return json.loads(_vsl.betti_json(n, d, b, p_min, p_max, q_min, q_max, _field(prime), certify, threads,
                                      str(cache_dir), max_block_dim))


def verify(n, d, b=0, strands=(), p_max=-1, prime=None):
    return json.loads(_vsl.verify_json(n, d, b, list(strands), p_max, _field(prime)))


def ev_map(n, d, p, seed=1, prime=0, samples=100):
    return json.loads(_vsl.ev_map_json(n, d, p, seed, prime, samples))


def theorem_chain(n, d, p, prime=None):
    return json.loads(_vsl.chain_json(n, d, p, _field(prime)))


def twist_identification(n, d, p, prime=None):
    return json.loads(_vsl.twist_identification_json(n, d, p, _field(prime)))


def duality(n, d, p, q, b=0, prime=None):
    return json.loads(_vsl.duality_json(n, d, b, p, q, _field(prime)))


def selftest(mutate_sign=False):
    return json.loads(_vsl.selftest_json(mutate_sign))


def cache_stats(path):
    return json.loads(_vsl.cache_stats_json(str(path)))


def cache_gc(path, drop_unpinned=False):
    return json.loads(_vsl.cache_gc_json(str(path), drop_unpinned))
