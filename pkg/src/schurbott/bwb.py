"""Borel-Weil-Bott for GL_d on the Grassmannian G(k,d) of k-dimensional quotients.

The d-tuple fed to the dotted Weyl group action is (K-weight || Q-dual-weight),
so a line-bundle-type weight on G(2,d) reads (0,...,0,a,b).  Add the Weyl
vector (d,...,1); a repeated entry kills all cohomology, otherwise sorting
with the unique permutation sigma puts the cohomology of the bundle in the
single degree l(sigma) where it equals the irreducible of highest weight
sigma(alpha+rho)-rho, viewed as a Schur functor of the dual ambient space.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .partitions import Weight, trivial
from .rep_ring import RepElement, dual as _rep_dual, tensor as _rep_tensor, weyl_dim


@dataclass(frozen=True)
class BWBOutcome:
    """Cohomology of a single irreducible homogeneous bundle.

    Either zero (with the repeated dotted-weight value as a witness), or
    concentrated in one degree with an irreducible GL_d weight for the
    dual ambient space.
    """

    degree: int | None = None
    weight: Weight | None = None
    multiplicity: int = 1
    repeated_value: int | None = None

    @property
    def is_zero(self) -> bool:
        return self.degree is None

    def dimension(self) -> int:
        if self.is_zero:
            return 0
        return self.multiplicity * weyl_dim(self.weight)

    def to_json(self) -> dict:
        if self.is_zero:
            return {"kind": "zero", "repeated_value": self.repeated_value}
        return {
            "kind": "nonzero",
            "degree": self.degree,
            "beta": list(self.weight.entries),
            "dim": self.dimension(),
        }

    def __str__(self) -> str:
        if self.is_zero:
            return f"Zero (repeat at value {self.repeated_value})"
        return f"degree {self.degree}: S{self.weight} (dim {self.dimension()})"


def _as_entries(w, expected_rank: int, what: str) -> tuple[int, ...]:
    entries = tuple(w.entries) if isinstance(w, Weight) else tuple(int(e) for e in w)
    if len(entries) != expected_rank:
        raise ValueError(f"{what} must have {expected_rank} entries, got {entries}")
    if any(a < b for a, b in zip(entries, entries[1:])):
        raise ValueError(f"{what} must be non-increasing: {entries}")
    return entries


def bwb_single(d: int, k: int, gamma, delta) -> BWBOutcome:
    """Cohomology of Sigma^gamma K tensor Sigma^delta Q-dual on G(k,d).

    gamma has d-k entries (empty for k = d), delta has k entries.
    """
    if not 1 <= k <= d - 1:
        raise ValueError(f"need 1 <= k <= d-1, got k={k}, d={d}")
    g = _as_entries(gamma, d - k, "K-weight")
    q = _as_entries(delta, k, "Q-dual weight")
    alpha = g + q
    rho = tuple(range(d, 0, -1))
    dotted = [a + r for a, r in zip(alpha, rho)]
    if len(set(dotted)) < d:
        seen: set[int] = set()
        repeat = next(v for v in dotted if v in seen or seen.add(v))
        return BWBOutcome(repeated_value=repeat)
    inversions = sum(
        1
        for i in range(d)
        for j in range(i + 1, d)
        if dotted[i] < dotted[j]
    )
    beta = tuple(v - r for v, r in zip(sorted(dotted, reverse=True), rho))
    return BWBOutcome(degree=inversions, weight=Weight(beta))


@dataclass
class BundleExpr:
    """Integer combination of bundles Sigma^gamma K tensor Sigma^delta Q-dual on G(k,d)."""

    d: int
    k: int
    terms: dict[tuple[Weight, Weight], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.d - 1:
            raise ValueError(f"need 1 <= k <= d-1, got k={self.k}, d={self.d}")
        clean: dict[tuple[Weight, Weight], int] = {}
        for (g, q), c in self.terms.items():
            if g.rank != self.d - self.k or q.rank != self.k:
                raise ValueError(f"term ({g},{q}) does not match G({self.k},{self.d})")
            if c != 0:
                clean[(g, q)] = clean.get((g, q), 0) + c
        self.terms = {key: c for key, c in clean.items() if c != 0}

    @classmethod
    def from_qdual(cls, d: int, k: int, element: RepElement) -> "BundleExpr":
        """Lift a Schur expression in Q-dual alone (trivial K-part)."""
        if element.rank != k:
            raise ValueError("element rank must equal the quotient rank k")
        g0 = trivial(d - k)
        return cls(d, k, {(g0, w): c for w, c in element.terms.items()})

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def rank_of_bundle(self) -> int:
        return sum(c * weyl_dim(g) * weyl_dim(q) for (g, q), c in self.terms.items())

    def tensor(self, other: "BundleExpr") -> "BundleExpr":
        if (self.d, self.k) != (other.d, other.k):
            raise ValueError("bundles live on different Grassmannians")
        out: dict[tuple[Weight, Weight], int] = {}
        for (g1, q1), c1 in self.terms.items():
            for (g2, q2), c2 in other.terms.items():
                gprod = _rep_tensor(RepElement.schur(g1.rank, g1), RepElement.schur(g2.rank, g2))
                qprod = _rep_tensor(RepElement.schur(q1.rank, q1), RepElement.schur(q2.rank, q2))
                for g, cg in gprod.terms.items():
                    for q, cq in qprod.terms.items():
                        key = (g, q)
                        out[key] = out.get(key, 0) + c1 * c2 * cg * cq
        return BundleExpr(self.d, self.k, out)

    def dual(self) -> "BundleExpr":
        out: dict[tuple[Weight, Weight], int] = {}
        for (g, q), c in self.terms.items():
            gd = next(iter(_rep_dual(RepElement.schur(g.rank, g)).terms))
            qd = next(iter(_rep_dual(RepElement.schur(q.rank, q)).terms))
            out[(gd, qd)] = out.get((gd, qd), 0) + c
        return BundleExpr(self.d, self.k, out)


class GradedCohomology:
    """Finitely supported map degree -> effective RepElement of GL_d weights."""

    def __init__(self, d: int, groups: dict[int, RepElement] | None = None):
        self.d = d
        self.groups = {
            p: g for p, g in (groups or {}).items() if not g.is_zero()
        }

    def dimension(self, degree: int) -> int:
        g = self.groups.get(degree)
        return g.dimension() if g is not None else 0

    def dimensions(self) -> dict[int, int]:
        return {p: g.dimension() for p, g in sorted(self.groups.items())}

    def is_zero(self) -> bool:
        return not self.groups

    def euler_characteristic(self) -> int:
        return sum((-1) ** p * g.dimension() for p, g in self.groups.items())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GradedCohomology)
            and self.d == other.d
            and self.groups == other.groups
        )

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return "; ".join(f"H^{p} = {g}" for p, g in sorted(self.groups.items()))

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "groups": {str(p): g.to_json() for p, g in sorted(self.groups.items())},
            "dims": {str(p): v for p, v in self.dimensions().items()},
        }


def cohomology(expr: BundleExpr) -> GradedCohomology:
    """Termwise Borel-Weil-Bott, grouped by cohomological degree."""
    if not expr.is_effective():
        raise ValueError("cohomology of a virtual bundle expression is undefined")
    groups: dict[int, RepElement] = {}
    for (g, q), c in expr.terms.items():
        outcome = bwb_single(expr.d, expr.k, g, q)
        if outcome.is_zero:
            continue
        acc = groups.setdefault(outcome.degree, RepElement.zero(expr.d))
        groups[outcome.degree] = acc + RepElement.schur(expr.d, outcome.weight).scaled(c)
    return GradedCohomology(expr.d, groups)
