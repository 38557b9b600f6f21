"""Milnor fiber first Betti numbers via exact character enumeration.

A multiplicity vector m on an arrangement of n hyperplanes defines a
cyclic cover of the projective complement of order N = sum(m).  Its first
Betti number is n - 1 (the identity character) plus, for every nonzero
residue j mod N, the depth of the character t_j = (j*m_H mod N)_H inside
the characteristic variety.  For a rationally decomposable arrangement
whose Alexander invariant is separated, that variety is the union of the
local subtori T_X, so membership reduces to congruences:

    t_j in T_X  iff  j*m_H = 0 mod N for every H outside X
                and  j*sum(m_H, H in X) = 0 mod N,

and a nontrivial character lies in at most one T_X because two rank-2
flats share at most one hyperplane.  Everything is residue arithmetic;
no floating-point roots of unity appear anywhere.

Without the decomposability and separatedness hypotheses the same
enumeration still counts characters lying in the local subtori, which
always sit inside the characteristic variety; the result is then only a
lower bound and is reported as an advisory, never as b1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arrangement import MultiArrangement, arrangement_rank, compute_l2
from .errors import HypothesisError, RefusalError
from .holonomy import is_decomposable


@dataclass(frozen=True)
class MilnorReport:
    N: int
    b1: int
    eigen_multiplicities: dict[int, int]
    trivial_monodromy: bool
    hypotheses: dict

    def __post_init__(self):
        assert self.b1 == sum(self.eigen_multiplicities.values())
        assert sorted(self.eigen_multiplicities) == list(range(self.N))


def _local_spectrum(ma: MultiArrangement) -> dict[int, int]:
    """Depth contributions of the local subtori, per nonzero residue.

    For each multiple flat X the characters t_j lying in T_X are exactly
    the j divisible by N/d with d = gcd(N, the off-flat multiplicities,
    and the in-flat multiplicity sum); each contributes mu(X) - 1.
    """
    arr = ma.arrangement
    m = ma.multiplicities
    N = ma.total
    spectrum = {j: 0 for j in range(1, N)}
    for flat in compute_l2(arr).multiple_flats():
        members = set(flat.members)
        d = N
        for h in range(arr.n):
            if h not in members:
                d = gcd(d, m[h])
        d = gcd(d, sum(m[h] for h in members))
        step = N // d
        for j in range(step, N, step):
            # distinct flats never claim the same nontrivial character
            assert spectrum[j] == 0
            spectrum[j] += flat.mobius - 1
    return spectrum


def local_b1_lower_bound(ma: MultiArrangement) -> int:
    """Unconditional lower bound for b1 from the local subtori alone."""
    return (ma.arrangement.n - 1) + sum(_local_spectrum(ma).values())


def milnor_b1(ma: MultiArrangement, *, separated: bool = False) -> MilnorReport:
    """First Betti number of the Milnor fiber of a multi-arrangement.

    Needs the arrangement rationally decomposable and the caller's
    assertion that the Alexander invariant is separated.
    """
    arr = ma.arrangement
    if not is_decomposable(arr)["rational"]:
        raise HypothesisError(
            "the character enumeration computes b1 only for rationally "
            "decomposable arrangements; this one is not "
            "(advisory: local subtori give b1 >= %d)" % local_b1_lower_bound(ma)
        )
    if not separated:
        raise RefusalError(
            "refusing to compute b1: separatedness of the Alexander "
            "invariant cannot be checked from the input; pass "
            "separated=True (--assert-separated) to assert it"
        )
    N = ma.total
    eigen = {0: arr.n - 1}
    eigen.update(_local_spectrum(ma))
    return MilnorReport(
        N=N,
        b1=sum(eigen.values()),
        eigen_multiplicities=eigen,
        trivial_monodromy=all(eigen[j] == 0 for j in range(1, N)),
        hypotheses={"q_decomposable": True, "separated": "asserted"},
    )


def monodromy_trivial_criterion(ma: MultiArrangement) -> bool:
    """Checkable hypotheses under which the algebraic monodromy is trivial.

    True when the arrangement has rank at least 3 and is rationally
    decomposable.  The separatedness hypothesis is not decided here.
    """
    arr = ma.arrangement
    return arrangement_rank(arr) >= 3 and is_decomposable(arr)["rational"]
