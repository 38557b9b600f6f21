"""Degree <= 3 Orlik-Solomon algebra over the rationals.

The exterior algebra E on one degree-1 generator per hyperplane surjects
onto the cohomology of the complement; the kernel in degree 2 is spanned
by the boundaries d(e_i e_j e_k) of triples lying in a common rank-2 flat.
This module builds that quadratic piece I2, checks its rank against the
Moebius-sum second Betti number, and computes the nullity of the
multiplication map E1 (x) I2 -> E3, which equals the degree-3 rank of the
holonomy Lie algebra and serves as its independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .arrangement import Arrangement, L2Lattice, compute_l2
from .linalg import rank, rank_exact, reduced_echelon


def pair_index(n: int):
    """Column index of e_i^e_j (i < j) in the lexicographic Lambda^2 basis."""
    idx = {}
    for c, (i, j) in enumerate(combinations(range(n), 2)):
        idx[i, j] = c
    return idx


def triple_index(n: int):
    """Column index of e_i^e_j^e_k (i < j < k) in the Lambda^3 basis."""
    idx = {}
    for c, t in enumerate(combinations(range(n), 3)):
        idx[t] = c
    return idx


@dataclass(frozen=True)
class OSQuadraticIdeal:
    """Degree-2 piece of the Orlik-Solomon ideal, as sparse Lambda^2 rows."""

    n: int
    generators: tuple
    rank: int


def i2_basis(lat: L2Lattice) -> OSQuadraticIdeal:
    """Generators d(e_i e_j e_k) over all triples inside a flat, with rank.

    Each generator is e_j^e_k - e_i^e_k + e_i^e_j; the rank is computed by
    exact row reduction and must equal binom(n,2) - b2.
    """
    n = lat.n
    pidx = pair_index(n)
    gens = []
    for flat in lat:
        for i, j, k in combinations(flat.members, 3):
            gens.append({pidx[j, k]: 1, pidx[i, k]: -1, pidx[i, j]: 1})
    gens = tuple(gens)
    return OSQuadraticIdeal(n, gens, rank_exact(list(gens)))


def falk_phi3(arr: Arrangement) -> int:
    """Nullity of the multiplication map E1 (x) I2 -> Lambda^3."""
    n = arr.n
    ideal = i2_basis(compute_l2(arr))
    basis = reduced_echelon(list(ideal.generators))
    tidx = triple_index(n)
    rows = []
    for h in range(n):
        for g in basis:
            row = {}
            for c, v in g.items():
                i, j = _unrank_pair(c, n)
                if h == i or h == j:
                    continue
                # e_h ^ e_i ^ e_j, sorted with a sign
                if h < i:
                    row[tidx[h, i, j]] = row.get(tidx[h, i, j], 0) + v
                elif h < j:
                    row[tidx[i, h, j]] = row.get(tidx[i, h, j], 0) - v
                else:
                    row[tidx[i, j, h]] = row.get(tidx[i, j, h], 0) + v
            rows.append({c: v for c, v in row.items() if v})
    domain = n * len(basis)
    return domain - rank(rows, len(tidx))


def _unrank_pair(c: int, n: int) -> tuple[int, int]:
    # inverse of the lexicographic pair order used by pair_index
    i = 0
    block = n - 1
    while c >= block:
        c -= block
        i += 1
        block -= 1
    return i, i + 1 + c
