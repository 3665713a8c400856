"""Python (numpy) implementations of the hot kernels.

This is the fallback lane used when the compiled extension is not built.
Signatures and results match ``farey_lt._kernels.native`` exactly: every
kernel consumes and produces integers only, so backend choice can never
change a reported value. See benchmarks/bench_backends.py for the speed gap.
"""

from __future__ import annotations

import math

import numpy as np


def chi_table(p: int) -> np.ndarray:
    """Quadratic character mod p as an int8 array: chi[0]=0, squares +1, rest -1."""
    chi = np.full(p, -1, dtype=np.int8)
    z = np.arange(p, dtype=np.int64)
    chi[(z * z) % p] = 1
    chi[0] = 0
    return chi


def trace_batch(p: int, a4s, a6s) -> np.ndarray:
    """Frobenius traces -sum_x chi(x^3 + a4 x + a6) for many curves mod one p."""
    a4s = np.asarray(a4s, dtype=np.int64) % p
    a6s = np.asarray(a6s, dtype=np.int64) % p
    chi = chi_table(p).astype(np.int64)
    x = np.arange(p, dtype=np.int64)
    cubes = (x * x % p) * x % p
    out = np.empty(len(a4s), dtype=np.int64)
    for j in range(len(a4s)):
        vals = (cubes + a4s[j] * x + a6s[j]) % p
        out[j] = -int(chi[vals].sum())
    return out


def _spf_table(n: int) -> np.ndarray:
    spf = np.arange(n + 1, dtype=np.int64)
    for i in range(2, math.isqrt(n) + 1):
        if spf[i] == i:
            idx = np.arange(i * i, n + 1, i)
            untouched = spf[idx] == idx
            spf[idx[untouched]] = i
    return spf


def coprime_histogram(t_order: int, p: int, beta_lo: int, beta_hi: int) -> np.ndarray:
    """Counts of coprime pairs (alpha, beta) by alpha * beta^(-1) mod p.

    Covers 1 <= alpha <= t_order and beta_lo <= beta < beta_hi, skipping
    p | beta. Coprimality is sieved per beta from its distinct prime factors.
    """
    counts = np.zeros(p, dtype=np.int64)
    spf = _spf_table(t_order)
    inv = np.zeros(p, dtype=np.int64)
    if p >= 2:
        inv[1] = 1
    for i in range(2, p):
        inv[i] = (p - (p // i) * inv[p % i] % p) % p
    mask = np.ones(t_order + 1, dtype=bool)
    for beta in range(beta_lo, beta_hi):
        if beta % p == 0:
            continue
        binv = int(inv[beta % p])
        mask[:] = True
        b = beta
        while b > 1:
            q = int(spf[b])
            mask[q::q] = False
            while b % q == 0:
                b //= q
        alphas = np.flatnonzero(mask[1:]).astype(np.int64) + 1
        counts += np.bincount((alphas * binv) % p, minlength=p)
    return counts


def congruence_pair_counts(w: int, p: int) -> np.ndarray:
    """M[v] = #{(alpha, beta): 1 <= alpha, beta <= w, p not | beta, alpha = v beta mod p}.

    Grouping beta by residue class collapses the sum to at most w mod p
    column lookups per v, so the cost is O(p * (w mod p)) independent of w.
    """
    g = np.zeros(p, dtype=np.int64)  # g[c] = #{1 <= alpha <= w : alpha = c mod p}
    g[0] = w // p
    c = np.arange(1, p, dtype=np.int64)
    g[1:] = np.where(c <= w, (w - c) // p + 1, 0)
    q, s = divmod(w, p)
    out = np.empty(p, dtype=np.int64)
    out[0] = (w // p) * (w - w // p)
    v = np.arange(p, dtype=np.int64)
    acc = np.full(p, q * (w - w // p), dtype=np.int64)
    for r in range(1, s + 1):
        acc += g[(v * r) % p]
    out[1:] = acc[1:]
    return out
