import random
from fractions import Fraction

import pytest

from arrinv.linalg import (
    EXACT_COLUMN_LIMIT,
    _is_probable_prime,
    _modular_primes,
    capture_verification,
    exact_only,
    rank,
    rank_exact,
    rank_modular,
    reduced_echelon,
    smith_diagonal,
)

from oracles import fraction_rank, sympy_invariant_factors, sympy_rank


def random_sparse_rows(rng, nrows, ncols, density=0.4, lo=-5, hi=5):
    rows = []
    for _ in range(nrows):
        row = {}
        for c in range(ncols):
            if rng.random() < density:
                v = rng.randint(lo, hi)
                if v:
                    row[c] = v
        rows.append(row)
    return rows


def test_rank_exact_matches_oracles():
    rng = random.Random(11)
    for _ in range(40):
        ncols = rng.randrange(1, 10)
        rows = random_sparse_rows(rng, rng.randrange(0, 12), ncols)
        assert rank_exact(rows) == sympy_rank(rows, ncols) == fraction_rank(rows, ncols)


def test_rank_exact_handles_fractions():
    rows = [
        {0: Fraction(1, 2), 1: Fraction(1, 3)},
        {0: Fraction(3, 2), 1: Fraction(1, 1)},
        {0: Fraction(2), 1: Fraction(4, 3)},
    ]
    assert rank_exact(rows) == sympy_rank(rows, 2)


def test_rank_exact_edge_cases():
    assert rank_exact([]) == 0
    assert rank_exact([{}, {}]) == 0
    assert rank_exact([{0: 7}]) == 1


def test_rank_modular_agrees_with_exact():
    rng = random.Random(23)
    for _ in range(25):
        ncols = rng.randrange(1, 14)
        rows = random_sparse_rows(rng, rng.randrange(0, 16), ncols, lo=-40, hi=40)
        assert rank_modular(rows, ncols) == rank_exact(rows)


def test_rank_dispatch_records_modular_use():
    ncols = EXACT_COLUMN_LIMIT + 10
    rows = [{i: 1, (i + 1) % ncols: -1} for i in range(ncols)]
    with capture_verification() as log:
        wide = rank(rows, ncols)
    assert wide == ncols - 1
    assert log.modular_only

    with capture_verification() as log:
        assert rank([{0: 1}], 3) == 1
    assert not log.modular_only

    with capture_verification() as log:
        with exact_only():
            assert rank(rows, ncols) == ncols - 1
    assert not log.modular_only


def test_reduced_echelon_preserves_row_space():
    rng = random.Random(7)
    for _ in range(20):
        ncols = rng.randrange(1, 8)
        rows = random_sparse_rows(rng, rng.randrange(1, 9), ncols)
        ech = reduced_echelon(rows)
        assert len(ech) == rank_exact(rows)
        # appending the original rows must not grow the rank
        assert rank_exact(list(ech) + rows) == len(ech)
        # pivots are unit and alone in their column
        pivots = [min(r) for r in ech]
        assert pivots == sorted(pivots)
        for r, p in zip(ech, pivots):
            assert r[p] == 1
            assert all(other.get(p, 0) == 0 for other in ech if other is not r)


def test_prime_pool_is_deterministic_and_prime():
    a = _modular_primes(6)
    b = _modular_primes(6)
    assert a == b
    assert len(set(a)) == 6
    for p in a:
        assert p > 2**30 and _is_probable_prime(p)


def test_smith_diagonal_known_matrices():
    # diag(2, 6) is already in normal form
    assert smith_diagonal([{0: 2}, {1: 6}], 2) == [2, 6]
    # swapped divisibility gets repaired
    assert smith_diagonal([{0: 6}, {1: 4}], 2) == [2, 12]
    rows = [{0: 2, 1: 4, 2: 4}, {0: -6, 1: 6, 2: 12}, {0: 10, 1: 4, 2: 16}]
    assert smith_diagonal(rows, 3) == [2, 2, 156]


def test_smith_diagonal_matches_sympy():
    rng = random.Random(31)
    for _ in range(30):
        ncols = rng.randrange(1, 7)
        rows = random_sparse_rows(rng, rng.randrange(0, 8), ncols, density=0.6)
        got = smith_diagonal(rows, ncols)
        want = sympy_invariant_factors(rows, ncols)
        assert got == want
        for a, b in zip(got, got[1:]):
            assert b % a == 0


def test_smith_diagonal_unit_heavy_matrix():
    # mostly unit pivots plus a torsion core, the fast path must split off
    rows = [{i: 1, i + 1: 5} for i in range(6)]
    rows.append({6: 4})
    rows.append({7: 6, 8: 9})
    got = smith_diagonal(rows, 9)
    assert got == sympy_invariant_factors(rows, 9)


def test_smith_torsion_appears_for_nondiagonal_input():
    rows = [{0: 2, 1: 0}, {0: 0, 1: 2}, {0: 1, 1: 1}]
    assert smith_diagonal(rows, 2) == [1, 2]


def test_modular_disagreement_is_survivable():
    # entries divisible by one pool prime must not fool the consensus
    p0 = _modular_primes(1)[0]
    rows = [{0: p0}, {1: 1}]
    assert rank_modular(rows, 2) == 2


@pytest.mark.parametrize("n", [2, 3, 5, 7, 561, 1105, 2**31 - 1])
def test_probable_prime_spot_checks(n):
    import sympy

    assert _is_probable_prime(n) == sympy.isprime(n)
