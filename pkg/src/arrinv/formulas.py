"""Closed-form rank formulas for LCS and Chen ranks.

Everything here is exact integer arithmetic.  The lower central series
ranks of a decomposable arrangement group are extracted from the product
formula

    prod_N (1 - t^N)^{phi_N}  =  (1 - t)^a * prod_X (1 - mu(X) t),

with a = n - sum mu(X), by Mobius inversion:

    N * phi_N = sum_{d | N} mobius(d) * (a + sum_X mu(X)^{N/d}).

The same kernel serves graphic arrangements of K4-free graphs; general
graphs go through the explicit clique/Witt double sum instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .arrangement import Arrangement, SimpleGraph, compute_l2
from .errors import DomainError, HypothesisError
from .holonomy import is_decomposable
from .lyndon import divisors, number_mobius, witt_count


@dataclass(frozen=True)
class RankTable:
    """Integer rank table indexed by degree, starting at 1."""

    kind: str  # "lcs" or "chen"
    values: dict[int, int]
    hypothesis: str = "none"

    def __post_init__(self):
        if self.kind not in ("lcs", "chen"):
            raise ValueError("unknown table kind %r" % (self.kind,))
        if self.hypothesis not in ("none", "q_decomposable", "graphic"):
            raise ValueError("unknown hypothesis %r" % (self.hypothesis,))
        degrees = sorted(self.values)
        if degrees != list(range(1, len(degrees) + 1)):
            raise ValueError("degrees must be contiguous from 1")
        if any(v < 0 for v in self.values.values()):
            raise ValueError("ranks are nonnegative")

    def __getitem__(self, degree: int) -> int:
        return self.values[degree]

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.values[k] for k in range(1, len(self.values) + 1))


def witt_rank(n: int, k: int) -> int:
    """Rank of the degree-k layer of the free Lie algebra on n letters."""
    if n < 1 or k < 1:
        raise DomainError("witt_rank needs n >= 1 and k >= 1")
    return witt_count(n, k)


def free_chen(n: int, k: int) -> int:
    """Chen rank theta_k of the free group on n generators."""
    if n < 1 or k < 1:
        raise DomainError("free_chen needs n >= 1 and k >= 1")
    if k == 1:
        return n
    return (k - 1) * comb(n + k - 2, k)


def chen_lower_bound(arr: Arrangement, k: int) -> int:
    """Sum of local free-group Chen ranks over the multiple rank-2 flats.

    Always a lower bound for the Chen ranks of the arrangement group;
    exact when the arrangement is decomposable.
    """
    if k < 2:
        raise DomainError("the local Chen bound is defined for k >= 2")
    lat = compute_l2(arr)
    return (k - 1) * sum(comb(f.mobius + k - 2, k) for f in lat.multiple_flats())


def _require_rational(arr: Arrangement, what: str):
    if not is_decomposable(arr)["rational"]:
        raise HypothesisError(
            "%s assumes a rationally decomposable arrangement; "
            "is_decomposable reports rational=false" % (what,)
        )


def chen_ranks_decomposable(arr: Arrangement, k: int) -> int:
    """Chen rank theta_k under the decomposability hypothesis."""
    if k < 1:
        raise DomainError("Chen ranks are indexed by k >= 1")
    _require_rational(arr, "chen_ranks_decomposable")
    if k == 1:
        return arr.n
    return chen_lower_bound(arr, k)


def _phi_from_product(a: int, mus, degree: int) -> int:
    # Mobius inversion of the product formula; valid for every degree >= 1
    # (degree 1 recovers a + sum mu = n).
    total = 0
    for d in divisors(degree):
        total += number_mobius(d) * (a + sum(m ** (degree // d) for m in mus))
    quot, rem = divmod(total, degree)
    assert rem == 0, "product formula gave a non-integer rank"
    return quot


def lcs_ranks_decomposable(arr: Arrangement, kmax: int) -> RankTable:
    """LCS ranks phi_1..phi_kmax under the decomposability hypothesis."""
    if kmax < 1:
        raise DomainError("need kmax >= 1")
    _require_rational(arr, "lcs_ranks_decomposable")
    mus = [f.mobius for f in compute_l2(arr)]
    a = arr.n - sum(mus)
    values = {k: _phi_from_product(a, mus, k) for k in range(1, kmax + 1)}
    return RankTable("lcs", values, hypothesis="q_decomposable")


def clique_counts(g: SimpleGraph) -> list[int]:
    """kappa_s = number of complete subgraphs on s+1 vertices, s < |V|."""
    adj = [set() for _ in range(g.vertices)]
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    counts = [0] * g.vertices

    def extend(size, candidates):
        for v in candidates:
            counts[size] += 1
            extend(size + 1, [w for w in candidates if w > v and w in adj[v]])

    extend(0, list(range(g.vertices)))
    return counts


def graphic_lcs(g: SimpleGraph, kmax: int) -> RankTable:
    """LCS ranks of the graphic arrangement group of g."""
    if kmax < 1:
        raise DomainError("need kmax >= 1")
    kappa = clique_counts(g)
    values: dict[int, int] = {}
    if len(kappa) < 4 or kappa[3] == 0:
        # K4-free: the group decomposes, so the shared product-formula
        # kernel applies.  Flats: one mu=2 flat per triangle, mu=1 for
        # every edge pair not inside a triangle.
        edges = kappa[1] if len(kappa) > 1 else 0
        triangles = kappa[2] if len(kappa) > 2 else 0
        mus = [2] * triangles + [1] * (comb(edges, 2) - 3 * triangles)
        a = edges - sum(mus)
        for k in range(1, kmax + 1):
            values[k] = _phi_from_product(a, mus, k)
    else:
        for k in range(1, kmax + 1):
            total = 0
            for j in range(1, k + 1):
                coeff = sum(
                    (-1) ** (s - j) * comb(s, j) * kappa[s]
                    for s in range(j, min(k, len(kappa) - 1) + 1)
                )
                total += coeff * witt_count(j, k)
            values[k] = total
    return RankTable("lcs", values, hypothesis="graphic")
