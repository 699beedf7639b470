"""rank-engine: modular and fraction-free ranks, certificates."""

import random
from fractions import Fraction

import pytest

from prymgauss import (BadPrimeError, FIELD_PRIMES, GaussMatrix, assemble_matrix,
                       build_curve, certify, rank_exact, rank_mod_p, seeded_params)

P = FIELD_PRIMES[0]


def frac_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def naive_rank(rows):
    """Independent oracle: plain Gaussian elimination over Fraction."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][c]
        for r in range(rank + 1, nrows):
            f = m[r][c] / pv
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def test_identity_rank():
    eye = frac_rows([[1 if i == j else 0 for j in range(5)] for i in range(5)])
    for p in FIELD_PRIMES[:3]:
        assert rank_mod_p(eye, p) == 5
    assert rank_exact(eye) == 5


def test_zero_matrix_rank():
    zero = frac_rows([[0] * 4 for _ in range(3)])
    assert rank_mod_p(zero, P) == 0
    assert rank_exact(zero) == 0


def test_proportional_rows():
    m = frac_rows([[1, 2], [2, 4]])
    assert rank_exact(m) == 1
    assert rank_mod_p(m, P) == 1


def test_rank_with_rational_entries():
    m = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(5)], [Fraction(2), Fraction(4, 3)]]
    # row3 = 4 * row1, row2 independent
    assert rank_exact(m) == 2
    assert rank_mod_p(m, P) == 2


def test_bad_prime_detection():
    m = [[Fraction(1, P), Fraction(1)]]
    with pytest.raises(BadPrimeError):
        rank_mod_p(m, P)
    # the next prime is fine
    assert rank_mod_p(m, FIELD_PRIMES[1]) == 1


def test_certify_skips_bad_primes():
    m = [[Fraction(1, P), Fraction(1)], [Fraction(0), Fraction(2)]]
    cert = certify(m, seed=0)
    assert cert.rank == 2 and cert.is_maximal
    assert P not in cert.primes_used


def test_genus8_injectivity_rank():
    a1, a2 = seeded_params(8, 4)
    m = assemble_matrix(build_curve(8, a1, a2))
    assert rank_exact(m) == 21                       # C(7,2)
    for p in FIELD_PRIMES[:3]:
        assert rank_mod_p(m, p) == 21


def test_modular_bounded_by_exact_on_seeded_matrices():
    rng = random.Random(7)
    for _ in range(25):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        target_rank = rng.randint(0, min(nrows, ncols))
        # build a matrix of known rank as a product of random factors
        left = [[Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(target_rank)]
                for _ in range(nrows)]
        right = [[Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(ncols)]
                 for _ in range(target_rank)]
        m = [[sum((left[i][t] * right[t][j] for t in range(target_rank)), Fraction(0))
              for j in range(ncols)] for i in range(nrows)]
        exact = rank_exact(m)
        assert exact == naive_rank(m) <= target_rank
        assert rank_mod_p(m, P) <= exact <= min(nrows, ncols)


def test_exact_matches_naive_oracle_on_random_matrices():
    rng = random.Random(99)
    for _ in range(30):
        nrows, ncols = rng.randint(1, 7), rng.randint(1, 7)
        m = [[Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(ncols)]
             for _ in range(nrows)]
        assert rank_exact(m) == naive_rank(m)


def test_modular_agreement_on_small_matrices():
    # on matrices with rows*cols <= 2500, the exact rank should agree with
    # the modular rank at 2 of 3 distinct good primes (probabilistic sanity)
    for genus, seed in ((5, 0), (6, 1), (7, 2), (8, 3), (9, 4)):
        a1, a2 = seeded_params(genus, seed)
        m = assemble_matrix(build_curve(genus, a1, a2))
        assert m.rows * m.cols <= 2500
        exact = rank_exact(m)
        agreement = sum(1 for p in FIELD_PRIMES[:3] if rank_mod_p(m, p) == exact)
        assert agreement >= 2, (genus, seed, agreement)


def test_certificate_fast_policy_maximal():
    a1, a2 = seeded_params(7, 11)
    matrix = assemble_matrix(build_curve(7, a1, a2))
    cert = certify(matrix, policy="fast", seed=3)
    assert cert.genus == 7
    assert cert.rank == cert.max_possible == 15
    assert cert.is_maximal and cert.method == "modular"
    assert cert.primes_used and all(p in FIELD_PRIMES for p in cert.primes_used)


def test_certificate_exact_policy():
    a1, a2 = seeded_params(6, 2)
    matrix = assemble_matrix(build_curve(6, a1, a2))
    cert = certify(matrix, policy="exact")
    assert cert.method == "bareiss"
    assert cert.primes_used == ()
    assert cert.rank == 10 and cert.is_maximal


def test_certificate_on_deficient_matrix():
    a1, a2 = seeded_params(6, 5)
    m = assemble_matrix(build_curve(6, a1, a2))
    rows = list(m.entries)
    rows[3] = rows[0]                               # duplicate a row
    deficient = GaussMatrix(genus=6, convention=m.convention, entries=tuple(rows))
    cert = certify(deficient, policy="fast", seed=0)
    assert not cert.is_maximal
    assert cert.method == "both"                    # modular first, exact fallback
    assert cert.rank == 9 == rank_exact(deficient)


def test_certificates_are_deterministic():
    a1, a2 = seeded_params(6, 8)
    matrix = assemble_matrix(build_curve(6, a1, a2))
    a = certify(matrix, policy="fast", seed=5)
    b = certify(matrix, policy="fast", seed=5)
    assert (a.rank, a.max_possible, a.is_maximal, a.method, a.primes_used) == \
           (b.rank, b.max_possible, b.is_maximal, b.method, b.primes_used)
    # a different seed starts at a different prime offset
    c = certify(matrix, policy="fast", seed=6)
    assert c.primes_used != a.primes_used


def test_certificate_json_fields():
    a1, a2 = seeded_params(5, 1)
    cert = certify(assemble_matrix(build_curve(5, a1, a2)))
    data = cert.to_json_dict()
    assert set(data) == {"genus", "rank", "max_possible", "is_maximal", "method",
                         "primes_used", "elapsed_ms"}
    assert set(cert.to_json_dict(with_timing=False)) == {
        "genus", "rank", "max_possible", "is_maximal", "method", "primes_used"}


def test_invalid_policy_rejected():
    with pytest.raises(ValueError):
        certify(frac_rows([[1]]), policy="guess")
