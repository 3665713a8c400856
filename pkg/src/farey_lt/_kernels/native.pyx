# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot inner loops.

Mirrors farey_lt._kernels.pyloops result for result; the long loops run
without the GIL so thread pools get real parallelism.
"""

from libc.stdint cimport int8_t, int64_t

import numpy as np


def chi_table(long p):
    """Quadratic character mod p as an int8 array: chi[0]=0, squares +1, rest -1."""
    out = np.full(p, -1, dtype=np.int8)
    cdef int8_t[::1] chi = out
    cdef int64_t z
    with nogil:
        for z in range(1, p):
            chi[(z * z) % p] = 1
        chi[0] = 0
    return out


def trace_batch(long p, a4s_obj, a6s_obj):
    """Frobenius traces -sum_x chi(x^3 + a4 x + a6) for many curves mod one p."""
    a4s_arr = np.ascontiguousarray(a4s_obj, dtype=np.int64) % p
    a6s_arr = np.ascontiguousarray(a6s_obj, dtype=np.int64) % p
    cdef int64_t[::1] a4s = a4s_arr
    cdef int64_t[::1] a6s = a6s_arr
    cdef Py_ssize_t n = a4s.shape[0]
    out_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    chi_arr = chi_table(p)
    cdef int8_t[::1] chi = chi_arr
    cube_arr = np.empty(p, dtype=np.int64)
    cdef int64_t[::1] cube = cube_arr
    cdef int64_t x, a4, a6, s, acc, val
    cdef Py_ssize_t j
    with nogil:
        for x in range(p):
            cube[x] = (x * x % p) * x % p
        for j in range(n):
            a4 = a4s[j]
            a6 = a6s[j]
            s = 0
            acc = 0  # a4 * x mod p, maintained incrementally
            for x in range(p):
                val = cube[x] + acc + a6  # < 3p; reduce branch-free
                val -= p * (val >= p)
                val -= p * (val >= p)
                s += chi[val]
                acc += a4
                acc -= p * (acc >= p)
            out[j] = -s
    return out_arr


def coprime_histogram(long t_order, long p, long beta_lo, long beta_hi):
    """Counts of coprime pairs (alpha, beta) by alpha * beta^(-1) mod p.

    Covers 1 <= alpha <= t_order and beta_lo <= beta < beta_hi, skipping
    p | beta. Coprimality is sieved per beta from its distinct prime factors
    using a stamp array, so nothing is cleared between betas.
    """
    counts_arr = np.zeros(p, dtype=np.int64)
    cdef int64_t[::1] counts = counts_arr
    spf_arr = np.empty(t_order + 1, dtype=np.int64)
    cdef int64_t[::1] spf = spf_arr
    mark_arr = np.zeros(t_order + 1, dtype=np.int64)
    cdef int64_t[::1] mark = mark_arr
    inv_arr = np.zeros(p, dtype=np.int64)
    cdef int64_t[::1] inv = inv_arr
    cdef int64_t i, j, beta, alpha, b, q, binv, idx
    cdef int64_t stamp = 0
    with nogil:
        for i in range(t_order + 1):
            spf[i] = i
        i = 2
        while i * i <= t_order:
            if spf[i] == i:
                j = i * i
                while j <= t_order:
                    if spf[j] == j:
                        spf[j] = i
                    j += i
            i += 1
        if p >= 2:
            inv[1] = 1
        for i in range(2, p):
            inv[i] = (p - (p // i) * inv[p % i] % p) % p
        for beta in range(beta_lo, beta_hi):
            if beta % p == 0:
                continue
            binv = inv[beta % p]
            stamp += 1
            b = beta
            while b > 1:
                q = spf[b]
                j = q
                while j <= t_order:
                    mark[j] = stamp
                    j += q
                while b % q == 0:
                    b //= q
            idx = 0  # alpha * binv mod p, maintained incrementally
            for alpha in range(1, t_order + 1):
                idx += binv
                if idx >= p:
                    idx -= p
                if mark[alpha] != stamp:
                    counts[idx] += 1
    return counts_arr


def congruence_pair_counts(long w, long p):
    """M[v] = #{(alpha, beta): 1 <= alpha, beta <= w, p not | beta, alpha = v beta mod p}.

    Same residue-class grouping as the fallback: O(p * (w mod p)) time.
    """
    out_arr = np.zeros(p, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    g_arr = np.zeros(p, dtype=np.int64)
    cdef int64_t[::1] g = g_arr
    cdef int64_t q = w // p
    cdef int64_t s = w % p
    cdef int64_t base, acc, c, v, r, idx
    with nogil:
        g[0] = q
        for c in range(1, p):
            g[c] = (w - c) // p + 1 if c <= w else 0
        out[0] = q * (w - q)
        base = q * (w - q)
        for v in range(1, p):
            acc = base
            idx = 0  # v * r mod p, maintained incrementally
            for r in range(1, s + 1):
                idx += v
                if idx >= p:
                    idx -= p
                acc += g[idx]
            out[v] = acc
    return out_arr
