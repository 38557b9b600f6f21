"""Exact and modular linear algebra kernels.

Matrices are given as lists of sparse rows; a row maps column index to an
integer or Fraction value.  Ranks over the rationals are computed two ways:

* exact fraction-free sparse elimination, used for narrow matrices and
  always available on demand;
* dense elimination modulo two independent random 31-bit primes, used for
  wide matrices where exact elimination is too slow.  The rank mod p never
  exceeds the rational rank, so the answer is accepted only when two primes
  agree on the maximum observed value.  Use of this path is recorded in the
  active verification log so reports can state whether every number was
  confirmed exactly.

Smith normal form diagonals are always computed exactly over the integers.
"""

from __future__ import annotations

import random
from contextlib import contextmanager
from contextvars import ContextVar
from fractions import Fraction
from math import gcd, lcm

import numpy as np

# Widest matrix still eliminated exactly by default.  Every degree-2 matrix,
# the degree-3 matrices of the shipped catalog and all Orlik-Solomon matrices
# fall below this, so those ranks are always exact.
EXACT_COLUMN_LIMIT = 250

# Fixed seed for prime selection: repeated runs see identical primes.
_PRIME_SEED = 0x5EED

_MODULAR_BITS = 31


class VerificationLog:
    """Records whether any rank in scope skipped exact confirmation."""

    def __init__(self) -> None:
        self.modular_only = False


_ACTIVE_LOG: ContextVar[VerificationLog | None] = ContextVar(
    "arrinv_verification_log", default=None
)
_FORCE_EXACT: ContextVar[bool] = ContextVar("arrinv_force_exact", default=False)


@contextmanager
def capture_verification():
    """Collect modular-use information for every rank computed in the body."""
    log = VerificationLog()
    token = _ACTIVE_LOG.set(log)
    try:
        yield log
    finally:
        _ACTIVE_LOG.reset(token)


@contextmanager
def exact_only():
    """Force exact elimination regardless of width (may be very slow)."""
    token = _FORCE_EXACT.set(True)
    try:
        yield
    finally:
        _FORCE_EXACT.reset(token)


def note_modular_use() -> None:
    """Mark the active verification log, if any, as not fully exact."""
    log = _ACTIVE_LOG.get()
    if log is not None:
        log.modular_only = True


def _intify(row) -> dict[int, int]:
    """Clear denominators and drop zeros; returns an integer row."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {}
    for c, v in row.items():
        iv = int(v * den)
        if iv:
            out[c] = iv
    return out


def _normalize(row: dict[int, int]) -> dict[int, int]:
    # divide by the content so entries stay small during elimination
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def rank_exact(rows) -> int:
    """Rank over Q by sparse fraction-free elimination."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = _normalize(_intify(row))
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                break
            a = r.pop(c)
            lead = p[c]
            nr = {k: lead * v for k, v in r.items()}
            for k, v in p.items():
                if k == c:
                    continue
                w = nr.get(k, 0) - a * v
                if w:
                    nr[k] = w
                else:
                    nr.pop(k, None)
            r = _normalize(nr)
    return len(pivots)


def reduced_echelon(rows) -> list[dict[int, Fraction]]:
    """Reduced row echelon basis of the row span, ordered by pivot column.

    Each returned row has value 1 at its pivot column and zeros at every
    other pivot column, so rows stay sparse when the corank is small.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                a = r.pop(c)
                newp = {c: Fraction(1)}
                for k, v in r.items():
                    newp[k] = v / a
                # clear later pivot columns from the new row first, so the
                # invariant "pivot rows touch no other pivot column" holds
                for pc, prow in pivots.items():
                    coef = newp.pop(pc, None)
                    if coef:
                        for k, v in prow.items():
                            if k == pc:
                                continue
                            w = newp.get(k, Fraction(0)) - coef * v
                            if w:
                                newp[k] = w
                            else:
                                newp.pop(k, None)
                for prow in pivots.values():
                    coef = prow.pop(c, None)
                    if coef:
                        for k, v in newp.items():
                            if k == c:
                                continue
                            w = prow.get(k, Fraction(0)) - coef * v
                            if w:
                                prow[k] = w
                            else:
                                prow.pop(k, None)
                pivots[c] = newp
                break
            a = r.pop(c)
            for k, v in p.items():
                if k == c:
                    continue
                w = r.get(k, Fraction(0)) - a * v
                if w:
                    r[k] = w
                else:
                    r.pop(k, None)
    return [pivots[c] for c in sorted(pivots)]


def _is_probable_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 3.3e24 with the first twelve primes
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _modular_primes(count: int, seed: int = _PRIME_SEED) -> list[int]:
    rng = random.Random(seed)
    out: list[int] = []
    while len(out) < count:
        cand = rng.randrange(1 << (_MODULAR_BITS - 1), 1 << _MODULAR_BITS) | 1
        if cand not in out and _is_probable_prime(cand):
            out.append(cand)
    return out


def _to_triplets(rows):
    ris: list[int] = []
    cis: list[int] = []
    vals: list[int] = []
    nrows = 0
    for row in rows:
        for c, v in row.items():
            if v:
                ris.append(nrows)
                cis.append(c)
                vals.append(int(v))
        nrows += 1
    return nrows, np.array(ris, dtype=np.int64), np.array(cis, dtype=np.int64), vals


def _rank_mod_p(nrows, ris, cis, vals, ncols, p) -> int:
    M = np.zeros((nrows, ncols), dtype=np.int64)
    M[ris, cis] = np.array([v % p for v in vals], dtype=np.int64)
    R, C = M.shape
    r = 0
    for c in range(C):
        if r == R:
            break
        col = M[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r, c:] = M[r, c:] * inv % p
        below = M[r + 1 :, c]
        idx = np.nonzero(below)[0]
        if idx.size:
            tgt = idx + r + 1
            M[tgt, c + 1 :] = (
                M[tgt, c + 1 :] - np.multiply.outer(M[tgt, c], M[r, c + 1 :])
            ) % p
            M[tgt, c] = 0
        r += 1
    return r


def rank_modular(rows, ncols: int, max_primes: int = 6) -> int:
    """Rank over Q via agreement of eliminations mod independent primes.

    A prime can only undercount the rank, so the maximum observed value is
    accepted once two primes report it.
    """
    nrows, ris, cis, vals = _to_triplets(rows)
    if nrows == 0 or ncols == 0:
        return 0
    seen: list[int] = []
    for p in _modular_primes(max_primes):
        seen.append(_rank_mod_p(nrows, ris, cis, vals, ncols, p))
        if len(seen) >= 2 and seen.count(max(seen)) >= 2:
            return max(seen)
    raise RuntimeError("modular ranks failed to stabilize: %r" % (seen,))


def rank(rows, ncols: int) -> int:
    """Rank over Q; exact when narrow, two-prime modular when wide."""
    rows = rows if isinstance(rows, list) else list(rows)
    if not rows or ncols == 0:
        return 0
    if ncols <= EXACT_COLUMN_LIMIT or _FORCE_EXACT.get():
        return rank_exact(rows)
    note_modular_use()
    return rank_modular(rows, ncols)


def smith_diagonal(rows, ncols: int) -> list[int]:
    """Invariant factors of an integer matrix, positive, each dividing the next.

    Always exact.  A sparse sweep first eliminates unit pivots (which
    contribute invariant factor 1 and, once their row and column are
    cleared, split off); the leftover core, usually tiny, goes through
    dense integer reduction with smallest-pivot selection and the
    classical divisibility push.
    """
    sparse: list[dict[int, int]] = []
    for row in rows:
        r = {}
        for c, v in row.items():
            iv = int(v)
            if iv != v:
                raise ValueError("smith_diagonal requires integer entries")
            if iv:
                r[c] = iv
        if r:
            sparse.append(r)
    units = 0
    while True:
        pivot = None
        for idx, r in enumerate(sparse):
            for c, v in r.items():
                if v == 1 or v == -1:
                    pivot = (idx, c, v)
                    break
            if pivot:
                break
        if pivot is None:
            break
        idx, c, s = pivot
        prow = sparse.pop(idx)
        units += 1
        for other in sparse:
            coef = other.pop(c, 0)
            if not coef:
                continue
            scale = coef * s
            for k, v in prow.items():
                if k == c:
                    continue
                w = other.get(k, 0) - scale * v
                if w:
                    other[k] = w
                else:
                    other.pop(k, None)
        sparse = [r for r in sparse if r]
    if not sparse:
        return [1] * units
    used = sorted({c for r in sparse for c in r})
    remap = {c: i for i, c in enumerate(used)}
    core = [{remap[c]: v for c, v in r.items()} for r in sparse]
    return [1] * units + _smith_dense(core, len(used))


def _smith_dense(rows, ncols: int) -> list[int]:
    mat: list[list[int]] = []
    for row in rows:
        dense = [0] * ncols
        for c, v in row.items():
            dense[c] = v
        mat.append(dense)
    R = len(mat)
    d: list[int] = []
    t = 0
    while t < R and t < ncols:
        # locate the smallest-magnitude nonzero entry of the trailing block
        best = None
        for i in range(t, R):
            mi = mat[i]
            for j in range(t, ncols):
                v = mi[j]
                if v:
                    a = -v if v < 0 else v
                    if best is None or a < best[0]:
                        best = (a, i, j)
                        if a == 1:
                            break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            mat[t], mat[pi] = mat[pi], mat[t]
        if pj != t:
            for rowv in mat:
                rowv[t], rowv[pj] = rowv[pj], rowv[t]
        while True:
            # clear column t by row operations (gcd descent via remainders)
            moved = False
            while True:
                piv = mat[t][t]
                swapped = False
                for i in range(t + 1, R):
                    if mat[i][t] == 0:
                        continue
                    q = mat[i][t] // piv
                    if q:
                        mi, mt = mat[i], mat[t]
                        for j in range(t, ncols):
                            mi[j] -= q * mt[j]
                    if mat[i][t]:
                        mat[t], mat[i] = mat[i], mat[t]
                        swapped = True
                        break
                if not swapped:
                    break
                moved = True
            # clear row t by column operations; column t is clean below t,
            # so each column op only changes the row-t entry
            piv = mat[t][t]
            for j in range(t + 1, ncols):
                v = mat[t][j]
                if v == 0:
                    continue
                q = v // piv
                if q:
                    mat[t][j] -= q * piv
                if mat[t][j]:
                    for rowv in mat:
                        rowv[t], rowv[j] = rowv[j], rowv[t]
                    moved = True
                    break
            if moved:
                continue
            # pivot must divide the rest of the block
            piv = abs(mat[t][t])
            bad = None
            for i in range(t + 1, R):
                mi = mat[i]
                for j in range(t + 1, ncols):
                    if mi[j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            mb, mt = mat[bad], mat[t]
            for j in range(t, ncols):
                mt[j] += mb[j]
        d.append(abs(mat[t][t]))
        t += 1
    return d
