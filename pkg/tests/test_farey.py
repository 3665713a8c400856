import math

import pytest

from farey_lt import arith, farey
from farey_lt.farey import CoprimePair


# -- independent oracles --------------------------------------------------------


def brute_count_pairs(t):
    return sum(
        1
        for a in range(1, t + 1)
        for b in range(1, t + 1)
        if math.gcd(a, b) == 1
    )


def brute_m_count(w, p, d, v):
    total = 0
    for alpha in range(1, w + 1):
        for beta in range(1, w + 1):
            if alpha % d or beta % d or beta % p == 0:
                continue
            if (alpha - v * beta) % p == 0:
                total += 1
    return total


# -- count / enumerate ------------------------------------------------------------


def test_count_examples():
    assert farey.count_coprime_pairs(1) == 1
    assert farey.count_coprime_pairs(3) == 7
    assert farey.count_coprime_pairs(10) == 63


def test_count_against_brute_force():
    for t in range(1, 41):
        assert farey.count_coprime_pairs(t) == brute_count_pairs(t), t


def test_enumerate_examples():
    assert [(c.alpha, c.beta) for c in farey.enumerate_coprime_pairs(1)] == [(1, 1)]
    assert [(c.alpha, c.beta) for c in farey.enumerate_coprime_pairs(2)] == [
        (1, 1),
        (2, 1),
        (1, 2),
    ]
    assert sum(1 for _ in farey.enumerate_coprime_pairs(10)) == 63


def test_enumerate_order_and_uniqueness():
    pairs = [(c.alpha, c.beta) for c in farey.enumerate_coprime_pairs(12)]
    assert len(pairs) == len(set(pairs)) == farey.count_coprime_pairs(12)
    assert pairs == sorted(pairs, key=lambda ab: (ab[1], ab[0]))


def test_coprime_pair_validation():
    with pytest.raises(ValueError):
        CoprimePair(2, 4)
    with pytest.raises(ValueError):
        CoprimePair(0, 1)


# -- residue_histogram ---------------------------------------------------------------


def test_histogram_examples():
    assert farey.residue_histogram(3, 5).counts == (0, 1, 2, 2, 2)
    assert farey.residue_histogram(1, 3).counts == (0, 1, 0)
    assert farey.residue_histogram(2, 2).counts == (1, 1)


def test_oracle_examples():
    assert farey.residue_histogram_oracle(3, 5).counts == (0, 1, 2, 2, 2)
    assert farey.residue_histogram_oracle(1, 3).counts == (0, 1, 0)


def test_histogram_matches_oracle_small_grid():
    for p in (2, 3, 5, 7, 11):
        for t in range(1, 26):
            assert (
                farey.residue_histogram(t, p).counts
                == farey.residue_histogram_oracle(t, p).counts
            ), (t, p)


def test_histogram_total_counts_pairs_with_unit_denominator():
    for p in (2, 3, 5, 7, 11):
        for t in (1, 7, 20, 40):
            hist = farey.residue_histogram(t, p)
            expected = sum(
                1 for c in farey.enumerate_coprime_pairs(t) if c.beta % p != 0
            )
            assert sum(hist.counts) == expected
            assert all(c >= 0 for c in hist.counts)


def test_histogram_thread_count_does_not_matter():
    base = farey.residue_histogram(200, 17)
    for threads in (2, 3, 8):
        assert farey.residue_histogram(200, 17, threads=threads) == base


def test_histogram_rejects_bad_arguments():
    with pytest.raises(ValueError):
        farey.residue_histogram(0, 5)
    with pytest.raises(ValueError):
        farey.residue_histogram(3, 4)


def test_oracle_refuses_large_t():
    with pytest.raises(ValueError):
        farey.residue_histogram_oracle(10_001, 5)


# -- m_count ----------------------------------------------------------------------


def test_m_count_vanishes_when_p_divides_d():
    for v in range(5):
        assert farey.m_count(10, 5, 10, v) == 0


def test_m_count_examples():
    assert farey.m_count(3, 5, 1, 2) == 2  # pairs (2,1) and (1,3)
    assert farey.m_count(4, 5, 2, 1) == 2  # pairs (2,2) and (4,4)
    assert farey.m_count(4, 5, 2, 1) == farey.m_count(2, 5, 1, 1)


def test_m_count_against_brute_force():
    for p in (2, 3, 5, 7):
        for w in (0, 1, 2, 5, 9, 12):
            for d in (1, 2, 3, 10):
                if d % p == 0:
                    continue
                for v in range(p):
                    assert farey.m_count(w, p, d, v) == brute_m_count(w, p, d, v), (
                        w,
                        p,
                        d,
                        v,
                    )


def test_m_count_scaling_identity():
    for p in (3, 5, 7, 11):
        for w in (4, 9, 17, 30):
            for d in (1, 2, 3, 4, 5):
                if d % p == 0:
                    continue
                for v in range(p):
                    assert farey.m_count(w, p, d, v) == farey.m_count(w // d, p, 1, v)


def test_mobius_identity_recovers_histogram():
    for p in (2, 3, 5, 7):
        for t in (1, 5, 12, 20, 30):
            mu = arith.mobius_table(t).values
            hist = farey.residue_histogram(t, p)
            for v in range(p):
                total = sum(
                    mu[d] * farey.m_count(t, p, d, v)
                    for d in range(1, t + 1)
                    if d % p != 0
                )
                assert total == hist.counts[v], (t, p, v)


# -- discrepancies -------------------------------------------------------------------


def test_l1_example_exact():
    assert farey.l1_discrepancy(1, 3) == 1.0


def test_l1_example_approx():
    assert farey.l1_discrepancy(3, 5) == pytest.approx(2.8115, abs=1e-3)


def test_l1_zero_on_synthetic_flat_histogram():
    main = 1.75
    assert farey._l1_sum((0.0, main, main, main), main) == 0.0


def test_l2_examples():
    assert farey.l2_m_deviation(1, 3) == pytest.approx(5 / 9, rel=1e-12)
    assert farey.l2_m_deviation(1, 2) == pytest.approx(0.25, rel=1e-12)


def test_l2_matches_direct_m_count_sum():
    for p in (3, 5, 11, 13):
        for w in (1, 4, 10, 25):
            direct = sum(
                (farey.m_count(w, p, 1, v) - w * w / p) ** 2 for v in range(1, p)
            )
            assert farey.l2_m_deviation(w, p) == pytest.approx(direct, rel=1e-12)


def test_l2_scaling_diagnostic():
    # diagnostic from the contract: value / W^2 stays small at desk scale
    for w, p in ((100, 101), (1000, 101)):
        assert farey.l2_m_deviation(w, p) / w**2 <= 10.0
