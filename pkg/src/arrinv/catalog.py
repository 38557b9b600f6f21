"""Named arrangements used throughout the examples and tests.

All catalog entries are built from explicit defining polynomials (or, for
the graphic family, an edge list), so the parser is the single source of
normals and labels.  The split_solvable family replaces the classical
root-of-unity slopes with distinct integers 1..m; this keeps every normal
rational and leaves the rank-2 lattice unchanged, which is all the
invariants here depend on.
"""

from __future__ import annotations

from functools import lru_cache

from .arrangement import Arrangement, SimpleGraph, graphic_arrangement
from .errors import CatalogError
from .parsing import parse_arrangement

# fixed small arrangements, by their defining polynomials
_POLYNOMIALS = {
    "x3": "xyz(x+y)(x+z)(y+z)",
    "x2": "xyz(y-z)(x-z)(x+y)(x+y-2z)",
    "nonpappus": "xyz(x+y)(y+z)(x+3z)(x+2y+z)(x+2y+3z)(2x+3y+3z)",
    # a realization of the (9_3)_1 configuration: nine lines, nine triple
    # points, same Moebius multiset as nonpappus but a different lattice
    "pappus": "[x,y,z] y(y-z)(x-y)(x+y-z)(x-3y)(x+2y-2z)(x-2y-z)(x+y-2z)(x+7y-4z)",
}

CATALOG_NAMES = ("braid", "x3", "x2", "nonpappus", "pappus", "split_solvable", "graphic")


def _braid_polynomial(n: int) -> str:
    names = ("x", "y", "z") if n == 3 else tuple("x%d" % (i + 1) for i in range(n))
    parts = []
    for i in range(n):
        for j in range(i + 1, n):
            parts.append("(%s+%s)(%s-%s)" % (names[i], names[j], names[i], names[j]))
    return "".join(parts)


def _split_solvable_polynomial(ms: tuple[int, ...]) -> str:
    parts = ["z0"]
    for i, m in enumerate(ms, start=1):
        for q in range(1, m + 1):
            coef = "" if q == 1 else str(q)
            parts.append("(z0-%sz%d)" % (coef, i))
    return "".join(parts)


def _int_params(params) -> tuple[int, ...]:
    out = []
    for p in params:
        if isinstance(p, bool) or not isinstance(p, int):
            raise CatalogError("parameters must be integers, got %r" % (p,))
        out.append(p)
    return tuple(out)


def _edge_params(params) -> SimpleGraph:
    edges = []
    for e in params:
        try:
            a, b = e
        except (TypeError, ValueError):
            raise CatalogError("graphic parameters must be edge pairs") from None
        edges.append((min(a, b), max(a, b)))
    if not edges:
        raise CatalogError("graphic needs at least one edge")
    vertices = 1 + max(max(e) for e in edges)
    try:
        return SimpleGraph(vertices, tuple(sorted(edges)))
    except Exception as e:
        raise CatalogError("bad edge list: %s" % e) from None


@lru_cache(maxsize=None)
def _builtin_cached(name: str, params: tuple) -> Arrangement:
    if name == "braid":
        (n,) = params if len(params) == 1 else (None,)
        if not isinstance(n, int) or n < 3:
            raise CatalogError("braid takes one integer parameter n >= 3")
        return parse_arrangement(_braid_polynomial(n))
    if name == "split_solvable":
        ms = params
        if not ms or any(m < 2 for m in ms):
            raise CatalogError(
                "split_solvable takes multiplicities m1..mr, each >= 2"
            )
        return parse_arrangement(_split_solvable_polynomial(ms))
    if name in _POLYNOMIALS:
        if params:
            raise CatalogError("%s takes no parameters" % name)
        return parse_arrangement(_POLYNOMIALS[name])
    raise CatalogError(
        "unknown arrangement %r; known: %s" % (name, ", ".join(CATALOG_NAMES))
    )


def builtin(name: str, params=()) -> Arrangement:
    """Look up a catalog arrangement by name and parameter list."""
    if name == "graphic":
        return graphic_arrangement(_edge_params(params))
    return _builtin_cached(name, _int_params(params))
