"""Lyndon words and the Lyndon basis of the free Lie algebra.

Words over the alphabet 0..n-1 are tuples of ints.  A Lyndon word is
strictly smaller than each of its proper cyclic rotations; the bracketings
of the Lyndon words of length k form a basis of the degree-k part of the
free Lie algebra on n generators (Lyndon basis).  ``lyndon_product``
rewrites the bracket of two basis elements in this basis; the rewriting is
classical: a "standard pair" is already a basis word, everything else is
reduced by the Jacobi identity through the standard factorization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import DomainError, ResourceError

Word = tuple[int, ...]

# Default cap on dim Lie_k(n) before a computation refuses to start.
DEFAULT_WORD_CEILING = 200_000


def lyndon_words(n: int, k: int) -> list[Word]:
    """All Lyndon words of length exactly k over 0..n-1, lexicographic."""
    if n < 1 or k < 1:
        return []
    if n == 1:
        return [(0,)] if k == 1 else []
    out: list[Word] = []
    w = [0]
    while True:
        if len(w) == k:
            out.append(tuple(w))
        w = (w * (k // len(w) + 1))[:k]
        while w and w[-1] == n - 1:
            w.pop()
        if not w:
            break
        w[-1] += 1
    return out


@lru_cache(maxsize=None)
def standard_factorization(w: Word) -> tuple[Word, Word]:
    """Split a Lyndon word of length >= 2 as uv with v the least proper suffix."""
    if len(w) < 2:
        raise ValueError("standard factorization needs length >= 2")
    v = min(w[i:] for i in range(1, len(w)))
    return w[: len(w) - len(v)], v


def standard_bracketing(w: Word):
    """Nested-pair form of the basis bracket of a Lyndon word."""
    if len(w) == 1:
        return w[0]
    u, v = standard_factorization(w)
    return (standard_bracketing(u), standard_bracketing(v))


def _negate(d: dict[Word, int]) -> dict[Word, int]:
    return {w: -c for w, c in d.items()}


def _add_into(acc: dict[Word, int], d: dict[Word, int], scale: int) -> None:
    for w, c in d.items():
        nv = acc.get(w, 0) + scale * c
        if nv:
            acc[w] = nv
        else:
            acc.pop(w, None)


@lru_cache(maxsize=None)
def lyndon_product(u: Word, v: Word) -> dict[Word, int]:
    """[u, v] expanded over the Lyndon basis, for Lyndon words u and v."""
    if u == v:
        return {}
    if v < u:
        return _negate(lyndon_product(v, u))
    # now u < v, so uv is Lyndon
    if len(u) == 1 or standard_factorization(u)[1] >= v:
        return {u + v: 1}
    u1, u2 = standard_factorization(u)
    # Jacobi: [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
    acc: dict[Word, int] = {}
    for w, c in lyndon_product(u2, v).items():
        _add_into(acc, lyndon_product(u1, w), c)
    for w, c in lyndon_product(u1, v).items():
        _add_into(acc, lyndon_product(u2, w), -c)
    return acc


def expand_bracket(expr, n: int, k: int) -> dict[Word, int]:
    """Expand a nested bracket expression over the degree-k Lyndon basis.

    Leaves are generator indices; pairs are brackets.  The expression must
    involve exactly k leaves, each below n.
    """

    def walk(e) -> tuple[dict[Word, int], int]:
        if isinstance(e, int):
            if not 0 <= e < n:
                raise DomainError("generator index %d out of range" % e)
            return {(e,): 1}, 1
        if not (isinstance(e, tuple) and len(e) == 2):
            raise DomainError("bracket expression must be an int or a pair")
        left, dl = walk(e[0])
        right, dr = walk(e[1])
        acc: dict[Word, int] = {}
        for wu, cu in left.items():
            for wv, cv in right.items():
                _add_into(acc, lyndon_product(wu, wv), cu * cv)
        return acc, dl + dr

    coords, deg = walk(expr)
    if deg != k:
        raise DomainError("expression has degree %d, expected %d" % (deg, k))
    return coords


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def number_mobius(n: int) -> int:
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    if n > 1:
        out = -out
    return out


def witt_count(n: int, k: int) -> int:
    """Number of Lyndon words of length k over n letters (necklace formula)."""
    if k < 1:
        raise DomainError("degree must be positive")
    total = sum(number_mobius(d) * n ** (k // d) for d in divisors(k))
    return total // k


@dataclass(frozen=True)
class LyndonBasis:
    """The degree-k Lyndon basis over n generators, with index lookup."""

    n: int
    degree: int
    words: tuple[Word, ...]
    index: dict[Word, int] = field(compare=False, repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(
            self, "index", {w: i for i, w in enumerate(self.words)}
        )

    def __len__(self) -> int:
        return len(self.words)

    def bracketing(self, w: Word):
        """Standard factorization tree of a basis word."""
        if w not in self.index:
            raise DomainError("%r is not a degree-%d basis word" % (w, self.degree))
        return standard_bracketing(w)


def lyndon_basis(n: int, k: int, ceiling: int = DEFAULT_WORD_CEILING) -> LyndonBasis:
    size = witt_count(n, k) if k >= 1 else 0
    if size > ceiling:
        raise ResourceError(
            "degree-%d basis on %d generators has %d words, above the "
            "ceiling of %d" % (k, n, size, ceiling)
        )
    return LyndonBasis(n, k, tuple(lyndon_words(n, k)))
