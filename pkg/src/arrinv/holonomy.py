"""Holonomy Lie algebra ranks, degree-3 torsion, and decomposability.

The holonomy Lie algebra of an arrangement has one degree-1 generator per
hyperplane and, for every rank-2 flat X and hyperplane H in X, the relator
[x_H, sum of x_K over K in X].  The relators of one flat sum to zero, so
the one with the largest hyperplane index is dropped; this changes neither
the rational span nor the integer span (the dependency has unit
coefficients).

Degree-k ranks come from the ideal propagation J_{k+1} = [L_1, J_k]: the
ideal is generated in degree 2 and the ambient free Lie algebra in degree
1, so left-bracketing a raw generating set by the generators again yields
a raw generating set.  Rows are kept raw (no echelonization between
degrees); rank is taken once per degree, exactly for narrow matrices and
by two-prime modular agreement for wide ones.

Everything degree-3: the quotient of the integral degree-3 piece by J_3 is
reported with its torsion via Smith normal form, which decides integral
decomposability; rational decomposability compares ranks only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .arrangement import Arrangement, compute_l2
from .errors import DomainError, ResourceError
from .linalg import (
    capture_verification,
    note_modular_use,
    rank,
    reduced_echelon,
    smith_diagonal,
)
from .lyndon import (
    DEFAULT_WORD_CEILING,
    Word,
    lyndon_basis,
    lyndon_product,
    lyndon_words,
    witt_count,
)

Vector = tuple[tuple[Word, int], ...]


@dataclass(frozen=True)
class Relator:
    """[x_h, sum of x_k over the flat], expanded in the degree-2 basis."""

    h: int
    members: tuple[int, ...]
    vector: Vector


@dataclass(frozen=True)
class HolonomyPresentation:
    n: int
    relators: tuple[Relator, ...]


@dataclass(frozen=True)
class AbelianGroupReport:
    """Rank and invariant-factor torsion of a finitely generated group."""

    rank: int
    torsion: tuple[int, ...]


@dataclass(frozen=True)
class GradedSubspace:
    """A degree-homogeneous subspace, rows in reduced echelon form."""

    degree: int
    ambient_dim: int
    basis_rows: tuple[tuple[tuple[int, Fraction], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis_rows)


def _bracket_rows(row: Vector, i: int) -> dict[Word, int]:
    """[x_i, row] over the Lyndon basis one degree up."""
    acc: dict[Word, int] = {}
    for w, c in row:
        for w2, c2 in lyndon_product((i,), w).items():
            nv = acc.get(w2, 0) + c * c2
            if nv:
                acc[w2] = nv
            else:
                acc.pop(w2, None)
    return acc


@lru_cache(maxsize=None)
def holonomy_relators(arr: Arrangement) -> HolonomyPresentation:
    """One expanded relator per (hyperplane, flat) pair, largest index dropped."""
    relators = []
    for flat in compute_l2(arr):
        members = flat.members
        for h in members[:-1]:
            acc: dict[Word, int] = {}
            for k in members:
                if k == h:
                    continue
                for w, c in lyndon_product((h,), (k,)).items():
                    acc[w] = acc.get(w, 0) + c
            vec = tuple(sorted((w, c) for w, c in acc.items() if c))
            relators.append(Relator(h, members, vec))
    return HolonomyPresentation(arr.n, tuple(relators))


@lru_cache(maxsize=None)
def _jk_word_rows(arr: Arrangement, k: int) -> tuple[Vector, ...]:
    """Raw generating rows of J_k, deduplicated, as degree-k basis vectors."""
    if k == 2:
        return tuple(r.vector for r in holonomy_relators(arr).relators)
    out: list[Vector] = []
    seen: set[frozenset] = set()
    for row in _jk_word_rows(arr, k - 1):
        for i in range(arr.n):
            acc = _bracket_rows(row, i)
            if not acc:
                continue
            key = frozenset(acc.items())
            if key in seen:
                continue
            seen.add(key)
            out.append(tuple(sorted(acc.items())))
    return tuple(out)


def _int_rows(word_rows, basis) -> list[dict[int, int]]:
    return [{basis.index[w]: c for w, c in row} for row in word_rows]


def _guard(n: int, k: int, ceiling: int) -> None:
    size = witt_count(n, k)
    if size > ceiling:
        raise ResourceError(
            "degree-%d computation needs %d basis words, above the ceiling "
            "of %d" % (k, size, ceiling)
        )


@lru_cache(maxsize=None)
def _jk_rank(arr: Arrangement, k: int) -> tuple[int, bool]:
    basis = lyndon_basis(arr.n, k)
    rows = _int_rows(_jk_word_rows(arr, k), basis)
    with capture_verification() as log:
        r = rank(rows, len(basis))
    return r, log.modular_only


def holonomy_rank(arr: Arrangement, k: int, ceiling: int = DEFAULT_WORD_CEILING) -> int:
    """dim of the degree-k piece of the holonomy Lie algebra over Q."""
    if k < 1:
        raise DomainError("degree must be positive")
    if k == 1:
        return arr.n
    _guard(arr.n, k, ceiling)
    r, modular = _jk_rank(arr, k)
    if modular:
        note_modular_use()
    return witt_count(arr.n, k) - r


@lru_cache(maxsize=None)
def h3_group(arr: Arrangement, ceiling: int = DEFAULT_WORD_CEILING) -> AbelianGroupReport:
    """The degree-3 piece of the integral holonomy Lie algebra."""
    _guard(arr.n, 3, ceiling)
    basis = lyndon_basis(arr.n, 3)
    rows = _int_rows(_jk_word_rows(arr, 3), basis)
    diag = smith_diagonal(rows, len(basis))
    torsion = tuple(d for d in diag if d > 1)
    return AbelianGroupReport(len(basis) - len(diag), torsion)


def local_h3_rank(arr: Arrangement) -> int:
    """Degree-3 rank contributed by the local pencils alone."""
    return 2 * sum(comb(f.mobius + 1, 3) for f in compute_l2(arr))


def is_decomposable(arr: Arrangement, ceiling: int = DEFAULT_WORD_CEILING) -> dict:
    """Compare h_3 with its local part, rationally and integrally.

    The comparison map onto the local part is surjective, so rational
    decomposability is the rank equality, and integral decomposability
    additionally needs the degree-3 group torsion-free.
    """
    rational = holonomy_rank(arr, 3, ceiling) == local_h3_rank(arr)
    if not rational:
        return {"rational": False, "integral": False}
    report = h3_group(arr, ceiling)
    return {"rational": True, "integral": not report.torsion}


@lru_cache(maxsize=None)
def _derived_word_rows(n: int, j: int) -> tuple[Vector, ...]:
    """Brackets [u, v] of basis elements with deg u, deg v >= 2 summing to j."""
    out: list[Vector] = []
    for p in range(2, j - 1):
        q = j - p
        if p > q:
            break
        us = lyndon_words(n, p)
        vs = lyndon_words(n, q) if q != p else us
        for ui, u in enumerate(us):
            start = ui + 1 if p == q else 0
            for v in vs[start:]:
                acc = lyndon_product(u, v)
                if acc:
                    out.append(tuple(sorted(acc.items())))
    return tuple(out)


@lru_cache(maxsize=None)
def _bk_rank(arr: Arrangement, j: int) -> tuple[int, bool]:
    basis = lyndon_basis(arr.n, j)
    rows = _int_rows(_jk_word_rows(arr, j), basis)
    rows += _int_rows(_derived_word_rows(arr.n, j), basis)
    with capture_verification() as log:
        r = rank(rows, len(basis))
    return r, log.modular_only


def infinitesimal_alexander_dims(
    arr: Arrangement, kmax: int, ceiling: int = DEFAULT_WORD_CEILING
) -> list[int]:
    """Dimensions of the graded infinitesimal Alexander invariant, 0..kmax.

    The degree-k piece is Lie_{k+2} modulo the ideal together with all
    brackets of two elements of degree >= 2 (the derived span), so its
    dimension is dim Lie_{k+2} - rank(J_{k+2} + D_{k+2}).  The Chen rank
    of the arrangement group in degree k is the (k-2)-nd entry.
    """
    if kmax < 0:
        raise DomainError("kmax must be nonnegative")
    _guard(arr.n, kmax + 2, ceiling)
    out = []
    for k in range(kmax + 1):
        r, modular = _bk_rank(arr, k + 2)
        if modular:
            note_modular_use()
        out.append(witt_count(arr.n, k + 2) - r)
    return out


def _echelon_subspace(word_rows, basis) -> GradedSubspace:
    rows = reduced_echelon(_int_rows(word_rows, basis))
    frozen = tuple(tuple(sorted(r.items())) for r in rows)
    return GradedSubspace(basis.degree, len(basis), frozen)


def holonomy_ideal_subspace(
    arr: Arrangement, k: int, ceiling: int = DEFAULT_WORD_CEILING
) -> GradedSubspace:
    """Reduced echelon basis of J_k (exact; meant for small degrees)."""
    if k < 2:
        raise DomainError("the ideal starts in degree 2")
    _guard(arr.n, k, ceiling)
    return _echelon_subspace(_jk_word_rows(arr, k), lyndon_basis(arr.n, k))


def derived_subspace(n: int, k: int, ceiling: int = DEFAULT_WORD_CEILING) -> GradedSubspace:
    """Reduced echelon basis of the derived span D_k of the free Lie algebra."""
    if n < 1 or k < 1:
        raise DomainError("need n >= 1 and k >= 1")
    _guard(n, k, ceiling)
    return _echelon_subspace(_derived_word_rows(n, k), lyndon_basis(n, k))
