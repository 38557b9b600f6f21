"""Batch cross-oracle consistency suite backing the `check` subcommand.

Every check pits two independent routes against each other: closed-form
formulas against the Lie presentation ranks, the quadratic OS ideal
against the degree-3 holonomy computation, per-flat against per-character
Milnor accounting.  Randomized inputs are driven by a caller-supplied
seed so failures reproduce.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb, gcd

from .arrangement import (
    Arrangement,
    MultiArrangement,
    _proportional,
    arrangement_rank,
    compute_l2,
    make_arrangement,
)
from .catalog import builtin
from .formulas import chen_ranks_decomposable, lcs_ranks_decomposable, witt_rank
from .holonomy import holonomy_rank, infinitesimal_alexander_dims, is_decomposable
from .jumploci import chen_ranks_from_resonance
from .lyndon import lyndon_words
from .milnor import _local_spectrum
from .osalgebra import falk_phi3, i2_basis


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def random_rank3_arrangement(rng: random.Random, max_n: int = 8) -> Arrangement:
    """Random essential rank-3 arrangement with small integer normals."""
    n = rng.randrange(3, max_n + 1)
    while True:
        normals: list[tuple[int, int, int]] = []
        while len(normals) < n:
            v = tuple(rng.randrange(-2, 3) for _ in range(3))
            if not any(v):
                continue
            if any(_proportional(v, w) for w in normals):
                continue
            normals.append(v)
        arr = make_arrangement(normals)
        if arrangement_rank(arr) == 3:
            return arr


def random_multiplicities(rng: random.Random, n: int, top: int = 4) -> tuple[int, ...]:
    while True:
        m = tuple(rng.randrange(1, top + 1) for _ in range(n))
        if gcd(*m) == 1:
            return m


def _catalog_samples() -> list[tuple[str, Arrangement]]:
    return [
        ("x3", builtin("x3")),
        ("x2", builtin("x2")),
        ("nonpappus", builtin("nonpappus")),
        ("pappus", builtin("pappus")),
        ("braid:3", builtin("braid", [3])),
        ("split_solvable:2,3", builtin("split_solvable", [2, 3])),
    ]


def check_pair_cover(arrs) -> CheckResult:
    for name, arr in arrs:
        lat = compute_l2(arr)
        covered = sum(comb(len(f), 2) for f in lat)
        if covered != comb(arr.n, 2):
            return CheckResult("pair-cover", False, "%s misses pairs" % name)
    return CheckResult("pair-cover", True, "%d arrangements" % len(arrs))


def check_degree2(arrs) -> CheckResult:
    for name, arr in arrs:
        lat = compute_l2(arr)
        phi2 = holonomy_rank(arr, 2)
        local = sum(comb(f.mobius, 2) for f in lat)
        ideal = i2_basis(lat).rank
        b2 = sum(f.mobius for f in lat)
        if not (phi2 == local == ideal and comb(arr.n, 2) - ideal == b2):
            return CheckResult(
                "degree-2-chain",
                False,
                "%s: phi2=%d local=%d ideal=%d b2=%d" % (name, phi2, local, ideal, b2),
            )
    return CheckResult("degree-2-chain", True, "%d arrangements" % len(arrs))


def check_falk_vs_holonomy(arrs) -> CheckResult:
    for name, arr in arrs:
        a, b = falk_phi3(arr), holonomy_rank(arr, 3)
        if a != b:
            return CheckResult(
                "falk-vs-holonomy", False, "%s: OS gives %d, Lie gives %d" % (name, a, b)
            )
    return CheckResult("falk-vs-holonomy", True, "%d arrangements" % len(arrs))


def check_lcs_formula(arrs, kmax: int = 4) -> CheckResult:
    tried = 0
    for name, arr in arrs:
        if not is_decomposable(arr)["rational"]:
            continue
        tried += 1
        table = lcs_ranks_decomposable(arr, kmax)
        for k in range(2, kmax + 1):
            got = holonomy_rank(arr, k)
            if table[k] != got:
                return CheckResult(
                    "lcs-product-formula",
                    False,
                    "%s k=%d: formula %d, holonomy %d" % (name, k, table[k], got),
                )
    return CheckResult("lcs-product-formula", True, "%d decomposable" % tried)


def check_chen_consistency(arrs, kmax: int = 4) -> CheckResult:
    tried = 0
    for name, arr in arrs:
        if not is_decomposable(arr)["rational"]:
            continue
        tried += 1
        dims = infinitesimal_alexander_dims(arr, kmax - 2)
        for k in range(2, kmax + 1):
            formula = chen_ranks_decomposable(arr, k)
            resonance = chen_ranks_from_resonance(arr, k)
            if not (formula == resonance == dims[k - 2]):
                return CheckResult(
                    "chen-three-ways",
                    False,
                    "%s k=%d: formula %d, resonance %d, alexander %d"
                    % (name, k, formula, resonance, dims[k - 2]),
                )
    return CheckResult("chen-three-ways", True, "%d decomposable" % tried)


def _per_character_spectrum(ma: MultiArrangement) -> dict[int, int]:
    # independent route: test every residue against every flat directly
    arr, m, total = ma.arrangement, ma.multiplicities, ma.total
    out = {j: 0 for j in range(1, total)}
    for j in range(1, total):
        for f in compute_l2(arr).multiple_flats():
            members = set(f.members)
            if any((j * m[h]) % total for h in range(arr.n) if h not in members):
                continue
            if (j * sum(m[h] for h in members)) % total:
                continue
            out[j] += f.mobius - 1
    return out


def check_milnor_double_count(rng, cases: int = 8) -> CheckResult:
    names = ["x3", "nonpappus", "split_solvable:2,3"]
    pool = [(n, a) for n, a in _catalog_samples() if n in names]
    for _ in range(cases):
        name, arr = pool[rng.randrange(len(pool))]
        ma = MultiArrangement(arr, random_multiplicities(rng, arr.n))
        if _local_spectrum(ma) != _per_character_spectrum(ma):
            return CheckResult(
                "milnor-double-count", False, "%s m=%s" % (name, ma.multiplicities)
            )
    return CheckResult("milnor-double-count", True, "%d multiplicity vectors" % cases)


def check_witt_identity(n_max: int = 6, k_max: int = 6) -> CheckResult:
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1):
            total = sum(d * witt_rank(n, d) for d in range(1, k + 1) if k % d == 0)
            if total != n**k:
                return CheckResult("witt-necklace", False, "n=%d k=%d" % (n, k))
            if n <= 4 and len(lyndon_words(n, k)) != witt_rank(n, k):
                return CheckResult("witt-necklace", False, "lyndon n=%d k=%d" % (n, k))
    return CheckResult("witt-necklace", True, "n<=%d k<=%d" % (n_max, k_max))


def run_all_checks(seed: int = 0, samples: int = 10) -> list[CheckResult]:
    """Run the full cross-oracle suite; every result carries a verdict."""
    rng = random.Random(seed)
    arrs = _catalog_samples()
    arrs += [
        ("random-%d" % i, random_rank3_arrangement(rng)) for i in range(samples)
    ]
    results = [
        check_pair_cover(arrs),
        check_degree2(arrs),
        check_falk_vs_holonomy(arrs),
        check_lcs_formula(arrs),
        check_chen_consistency([(n, a) for n, a in arrs if n in ("x3", "x2")]),
        check_milnor_double_count(rng),
        check_witt_identity(),
    ]
    return results
