"""Tautological and normal bundle expressions on the planar-locus fibre G(2,d).

Everything on the fibre is written in the Schur basis of the dual quotient
bundle alone: the quotient bundle itself is S(0,-1), its dual is S(1,0).
The restricted normal bundle N' is the rank-4 irreducible S(2,-1)
(equivalently the third symmetric power of the dual quotient, twisted by
the determinant of the quotient).  It sits in the split short exact
sequence  0 -> S(1,0) -> S(0,-1) (x) Sym^2 S(1,0) -> N' -> 0, which does
not depend on the ambient dimension d.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .partitions import Weight
from .rep_ring import RepElement, ext_power, sym_power, tensor


class RouteDisagreementError(RuntimeError):
    """Two independent computations of the same bundle disagree (a bug, never expected)."""


FIBRE_RANK = 2

#: the dual quotient bundle Q^v
Q_DUAL = RepElement.schur(FIBRE_RANK, (1, 0))
#: the quotient bundle Q, as a Schur functor of Q^v
Q = RepElement.schur(FIBRE_RANK, (0, -1))
#: the restricted normal bundle N'
NPRIME = RepElement.schur(FIBRE_RANK, (2, -1))
#: sub term of the defining short exact sequence
SES_SUB = Q_DUAL
#: middle term Q (x) Sym^2 Q^v of the defining short exact sequence
SES_MIDDLE = tensor(Q, sym_power(Q_DUAL, 2))


def middle_split() -> tuple[RepElement, RepElement]:
    """Decomposition of the middle term into N' = S(2,-1) and Q^v = S(1,0)."""
    return (NPRIME, Q_DUAL)


@lru_cache(maxsize=None)
def _wedge_middle(q: int) -> RepElement:
    return ext_power(SES_MIDDLE, q)


@lru_cache(maxsize=None)
def _wedge_sub(q: int) -> RepElement:
    return ext_power(SES_SUB, q)


@lru_cache(maxsize=None)
def wedge_nprime(q: int) -> RepElement:
    """Exterior power of the restricted normal bundle, computed two ways.

    Route one applies the character oracle directly to N'.  Route two
    solves the lambda-ring filtration identity of the defining sequence,
    wedge^q(middle) = sum_i wedge^i(sub) (x) wedge^{q-i}(N'), for the
    highest term.  Both must agree and be effective.
    """
    if not 0 <= q <= 4:
        raise ValueError(f"N' has rank 4; wedge power {q} out of range")
    direct = ext_power(NPRIME, q)
    from_ses = _wedge_middle(q)
    for i in range(1, min(q, 2) + 1):
        from_ses = from_ses - tensor(_wedge_sub(i), wedge_nprime(q - i))
    if direct != from_ses or not direct.is_effective():
        raise RouteDisagreementError(
            f"wedge^{q} N': direct route {direct} vs filtration route {from_ses}"
        )
    return direct


def wedge2_middle() -> RepElement:
    """Second exterior power of Q (x) Sym^2 Q^v via the Cauchy identity.

    wedge^2(E (x) F) = Sym^2 E (x) wedge^2 F + wedge^2 E (x) Sym^2 F with
    E = Sym^2 Q^v and F = Q.
    """
    sym2qdual = sym_power(Q_DUAL, 2)
    out = tensor(sym_power(sym2qdual, 2), ext_power(Q, 2))
    out = out + tensor(ext_power(sym2qdual, 2), sym_power(Q, 2))
    return out


def planar_rank_identity(d: int, l: int) -> int:
    """Fibre dimension d + (l^2 - l)/2 of the conormal data of a planar ideal.

    Cross-checked against the two-summand derivation: d - l linear forms
    plus the binom(l+1, 2) surviving quadratic monomials.
    """
    if not 1 <= l <= d:
        raise ValueError(f"need 1 <= l <= d, got l={l}, d={d}")
    value = d + (l * l - l) // 2
    assert value == (d - l) + comb(l + 1, 2)
    return value


class NormalBundleModel:
    """The restricted normal bundle together with its defining sequence."""

    def __init__(self, d: int):
        if d < 3:
            raise ValueError("the splitting requires ambient dimension d >= 3")
        self.d = d
        self.nprime = NPRIME
        self.ses = (SES_SUB, SES_MIDDLE, NPRIME)

    def wedge(self, q: int) -> RepElement:
        return wedge_nprime(q)

    def rank(self) -> int:
        return self.nprime.dimension()
