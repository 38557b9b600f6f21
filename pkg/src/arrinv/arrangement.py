"""Central arrangements and their rank-2 intersection data.

An arrangement is a finite set of hyperplanes through the origin of C^d,
each recorded by a defining normal vector with rational entries.  All the
invariants in this package depend only on the rank-2 part of the
intersection lattice: the partition of the hyperplane pairs into maximal
pencils (flats of codimension 2), each weighted by its Moebius value
mu = (number of members) - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd

from .errors import DomainError
from .linalg import rank_exact


def _coerce_scalar(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise DomainError("coefficients must be integers, fractions or 'p/q' strings")


@dataclass(frozen=True)
class Arrangement:
    """A central arrangement, as an ordered tuple of normal vectors."""

    ambient_dim: int
    normals: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.normals)

    def __len__(self) -> int:
        return len(self.normals)


def make_arrangement(normals, labels=None, ambient_dim=None) -> Arrangement:
    """Validate and freeze an arrangement from any iterable of normals.

    Rejects empty input, zero normals, ragged rows and pairs of
    proportional normals (the same hyperplane listed twice).
    """
    rows = [tuple(_coerce_scalar(v) for v in row) for row in normals]
    if not rows:
        raise DomainError("an arrangement needs at least one hyperplane")
    d = ambient_dim if ambient_dim is not None else len(rows[0])
    if d < 1:
        raise DomainError("ambient dimension must be positive")
    for row in rows:
        if len(row) != d:
            raise DomainError("all normals must have length %d" % d)
        if not any(row):
            raise DomainError("zero vector is not a hyperplane normal")
    for i, j in combinations(range(len(rows)), 2):
        if _proportional(rows[i], rows[j]):
            raise DomainError(
                "normals %d and %d define the same hyperplane" % (i, j)
            )
    if labels is None:
        labels = tuple("H%d" % i for i in range(len(rows)))
    else:
        labels = tuple(str(s) for s in labels)
        if len(labels) != len(rows):
            raise DomainError("need exactly one label per hyperplane")
    return Arrangement(d, tuple(rows), labels)


def _proportional(a, b) -> bool:
    # cross-multiply every 2x2 minor of the two rows
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if a[i] * b[j] != a[j] * b[i]:
                return False
    return True


@dataclass(frozen=True)
class Flat2:
    """A rank-2 flat: the set of hyperplanes containing a codim-2 subspace."""

    members: tuple[int, ...]

    @property
    def mobius(self) -> int:
        return len(self.members) - 1

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class L2Lattice:
    """All rank-2 flats of an arrangement, ordered by member tuple."""

    flats: tuple[Flat2, ...]
    n: int

    def __iter__(self):
        return iter(self.flats)

    def __len__(self) -> int:
        return len(self.flats)

    def multiple_flats(self) -> tuple[Flat2, ...]:
        """The flats with three or more members (mu >= 2)."""
        return tuple(f for f in self.flats if len(f) >= 3)


def _span_rank(rows) -> int:
    return rank_exact([{i: v for i, v in enumerate(r) if v} for r in rows])


@lru_cache(maxsize=None)
def compute_l2(arr: Arrangement) -> L2Lattice:
    """Group the hyperplane pairs of ``arr`` into maximal rank-2 flats.

    Two hyperplanes lie in the same flat iff their common intersection has
    codimension 2 and every other member contains it; this is detected by
    rank tests on the normals alone, so it works in any ambient dimension.
    """
    n = arr.n
    normals = arr.normals
    assigned: set[tuple[int, int]] = set()
    flats: list[Flat2] = []
    for i, j in combinations(range(n), 2):
        if (i, j) in assigned:
            continue
        members = [i, j]
        base = [normals[i], normals[j]]
        for k in range(n):
            if k == i or k == j:
                continue
            if _span_rank(base + [normals[k]]) == 2:
                members.append(k)
        members.sort()
        for a, b in combinations(members, 2):
            assigned.add((a, b))
        flats.append(Flat2(tuple(members)))
    flats.sort(key=lambda f: f.members)
    lat = L2Lattice(tuple(flats), n)
    # every pair of hyperplanes lies in exactly one flat
    pairs = sum(len(f) * (len(f) - 1) // 2 for f in lat)
    if pairs != n * (n - 1) // 2:
        raise AssertionError("rank-2 flats do not partition the pairs")
    return lat


def mobius2(f: Flat2) -> int:
    """Moebius value of a rank-2 flat: one less than its member count."""
    return f.mobius


def arrangement_rank(arr: Arrangement) -> int:
    """Rank of the arrangement: codimension of the common intersection."""
    return _span_rank(arr.normals)


def betti(arr: Arrangement) -> tuple[int, int]:
    """(b1, b2) of the complement: n and the sum of the Moebius values."""
    return arr.n, sum(f.mobius for f in compute_l2(arr))


def product(a: Arrangement, b: Arrangement) -> Arrangement:
    """Product arrangement in the direct sum of the two ambient spaces."""
    da, db = a.ambient_dim, b.ambient_dim
    zero_a = (Fraction(0),) * da
    zero_b = (Fraction(0),) * db
    normals = [row + zero_b for row in a.normals]
    normals += [zero_a + row for row in b.normals]
    labels = tuple(s + "'" for s in a.labels) + tuple(s + "''" for s in b.labels)
    return Arrangement(da + db, tuple(normals), labels)


def localization(arr: Arrangement, f) -> Arrangement:
    """Sub-arrangement of the hyperplanes of one rank-2 flat.

    ``f`` may be a Flat2 or a bare member tuple; it must belong to the
    rank-2 lattice of ``arr``.
    """
    members = f.members if isinstance(f, Flat2) else tuple(f)
    key = tuple(sorted(members))
    if key not in {g.members for g in compute_l2(arr)}:
        raise DomainError("%r is not a rank-2 flat of this arrangement" % (key,))
    return Arrangement(
        arr.ambient_dim,
        tuple(arr.normals[i] for i in key),
        tuple(arr.labels[i] for i in key),
    )


@dataclass(frozen=True)
class SimpleGraph:
    """A simple graph on vertices 0..v-1, edges as sorted pairs."""

    vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for a, b in self.edges:
            if not (0 <= a < self.vertices and 0 <= b < self.vertices):
                raise DomainError("edge endpoint out of range")
            if a >= b:
                raise DomainError("edges must be sorted pairs (a, b) with a < b")
            if (a, b) in seen:
                raise DomainError("duplicate edge %r" % ((a, b),))
            seen.add((a, b))


def graphic_arrangement(graph: SimpleGraph) -> Arrangement:
    """The arrangement {x_a = x_b} over the edges of a simple graph."""
    if not graph.edges:
        raise DomainError("graphic arrangement needs at least one edge")
    edges = sorted(graph.edges)
    normals = []
    labels = []
    for a, b in edges:
        row = [Fraction(0)] * graph.vertices
        row[a] = Fraction(1)
        row[b] = Fraction(-1)
        normals.append(tuple(row))
        labels.append("x%d-x%d" % (a, b))
    return Arrangement(graph.vertices, tuple(normals), tuple(labels))


@dataclass(frozen=True)
class MultiArrangement:
    """An arrangement with a positive integer multiplicity per hyperplane."""

    arrangement: Arrangement
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        m = self.multiplicities
        if len(m) != self.arrangement.n:
            raise DomainError("need one multiplicity per hyperplane")
        if any(v < 1 for v in m):
            raise DomainError("multiplicities must be positive integers")
        g = 0
        for v in m:
            g = gcd(g, v)
        if g != 1:
            raise DomainError(
                "multiplicities must have gcd 1; divide out the common factor"
            )

    @property
    def total(self) -> int:
        return sum(self.multiplicities)


def _fraction_str(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else "%d/%d" % (
        v.numerator,
        v.denominator,
    )


def default_variables(d: int) -> tuple[str, ...]:
    """Coordinate names: x, y, z in low dimension, x1..xd above."""
    if d <= 3:
        return ("x", "y", "z")[:d]
    return tuple("x%d" % (i + 1) for i in range(d))


def arrangement_to_json(arr: Arrangement) -> dict:
    """JSON-ready description of an arrangement (fractions as 'p/q')."""
    return {
        "variables": list(default_variables(arr.ambient_dim)),
        "normals": [[_fraction_str(v) for v in row] for row in arr.normals],
        "labels": list(arr.labels),
    }


def l2_to_json(arr: Arrangement) -> dict:
    """JSON-ready rank-2 lattice summary."""
    lat = compute_l2(arr)
    b1, b2 = betti(arr)
    return {
        "n": arr.n,
        "rank": arrangement_rank(arr),
        "betti": [b1, b2],
        "flats": [
            {
                "members": list(f.members),
                "labels": [arr.labels[i] for i in f.members],
                "mobius": f.mobius,
            }
            for f in lat
        ],
    }
