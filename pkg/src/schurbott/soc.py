"""Verification layer: Ext decompositions, exceptionality, fully-faithfulness,
semi-orthogonality, enumeration of the admissible labels and the Kummer count.

All checks reduce questions about the kernels S^alpha Q^v on the fibre
Grassmannian G(2,d) to sheaf cohomology of twisted Schur bundles, computed
term by term through the Borel-Weil-Bott module.  The checkers record a
full witness trace: one (q, summand weight, outcome) triple per bundle
summand that had to vanish (or survive).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .bundle_calculus import wedge_nprime
from .bwb import BWBOutcome, BundleExpr, GradedCohomology, bwb_single, cohomology
from .partitions import Weight, sort_key, precedes, trivial
from .rep_ring import RepElement, dual, tensor


@dataclass(frozen=True)
class FunctorLabel:
    """A kernel partition alpha inscribed in the 2 x (d-2) box."""

    alpha: Weight
    d: int

    def __post_init__(self) -> None:
        a1, a2 = self._pair()
        if not (0 <= a2 <= a1 <= self.d - 2):
            raise ValueError(
                f"label {self.alpha} not inscribed in the 2x{self.d - 2} box"
            )

    def _pair(self) -> tuple[int, int]:
        if self.alpha.rank != 2:
            raise ValueError("labels are rank-2 weights")
        return self.alpha.entries  # type: ignore[return-value]

    @property
    def width(self) -> int:
        """The row difference alpha_1 - alpha_2 controlling the vanishing bound."""
        a1, a2 = self._pair()
        return a1 - a2

    def __str__(self) -> str:
        return str(self.alpha)


@dataclass
class ConditionRecord:
    q: int
    weight: tuple[int, ...]
    outcome: BWBOutcome
    required_zero: bool = True

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "weight": list(self.weight),
            "required_zero": self.required_zero,
            "outcome": self.outcome.to_json(),
        }


@dataclass
class VerificationReport:
    """Pass/fail verdict with the full cohomology witness trace."""

    verdict: bool
    d: int
    alpha: Weight
    beta: Weight | None = None
    conditions: list[ConditionRecord] = field(default_factory=list)
    hom_dimension: int = 0
    kind: str = ""

    def to_json(self) -> dict:
        data = {
            "verdict": "pass" if self.verdict else "fail",
            "kind": self.kind,
            "d": self.d,
            "alpha": list(self.alpha.entries),
            "hom_dimension": self.hom_dimension,
            "conditions": [c.to_json() for c in self.conditions],
        }
        if self.beta is not None:
            data["beta"] = list(self.beta.entries)
        return data

    def failures(self) -> list[ConditionRecord]:
        return [c for c in self.conditions if c.required_zero and not c.outcome.is_zero]


def _as_label_weight(alpha) -> Weight:
    w = alpha if isinstance(alpha, Weight) else Weight(tuple(alpha))
    if w.rank != 2 or not w.is_partition():
        raise ValueError(f"expected a rank-2 partition, got {w}")
    return w


def ext_decomposition(alpha, beta) -> RepElement:
    """Schur expansion of S^alpha Q^v (x) (S^beta Q^v)^v on the rank-2 fibre.

    Closed form: sum over g = 0..min(width(alpha), width(beta)) of
    S(alpha_1 - beta_2 - g, alpha_2 - beta_1 + g).  Asserted against the
    Littlewood-Richardson route through the representation ring.
    """
    a = _as_label_weight(alpha)
    b = _as_label_weight(beta)
    a1, a2 = a.entries
    b1, b2 = b.entries
    terms: dict[Weight, int] = {}
    for g in range(min(a1 - a2, b1 - b2) + 1):
        w = Weight((a1 - b2 - g, a2 - b1 + g))
        terms[w] = terms.get(w, 0) + 1
    closed = RepElement(2, terms)
    via_ring = tensor(RepElement.schur(2, a), dual(RepElement.schur(2, b)))
    assert closed == via_ring, (closed, via_ring)
    return closed


def _trace_cohomology(
    d: int, q: int, element: RepElement, conditions: list[ConditionRecord]
) -> GradedCohomology:
    """BWB on every summand of a Q^v-expression, recording one triple each."""
    groups: dict[int, RepElement] = {}
    for w, c in sorted(element.terms.items(), key=lambda t: tuple(-e for e in t[0].entries)):
        outcome = bwb_single(d, 2, trivial(d - 2), w)
        for _ in range(c):
            conditions.append(ConditionRecord(q, w.entries, outcome))
        if not outcome.is_zero:
            acc = groups.setdefault(outcome.degree, RepElement.zero(d))
            groups[outcome.degree] = acc + RepElement.schur(d, outcome.weight).scaled(c)
    return GradedCohomology(d, groups)


def _mark_expected_hom(conditions: list[ConditionRecord]) -> None:
    """The trivial q = 0 summand carries the identity; it must survive."""
    for c in conditions:
        if c.q == 0 and all(e == 0 for e in c.weight):
            c.required_zero = False


def check_exceptional(alpha, d: int) -> VerificationReport:
    """Self-Exts of S^alpha Q^v on G(2,d): pass iff End = k in degree 0 only."""
    a = FunctorLabel(_as_label_weight(alpha), d).alpha
    conditions: list[ConditionRecord] = []
    coh = _trace_cohomology(d, 0, ext_decomposition(a, a), conditions)
    _mark_expected_hom(conditions)
    hom_dim = coh.dimension(0)
    verdict = coh.dimensions() == {0: 1}
    return VerificationReport(
        verdict, d, a, conditions=conditions, hom_dimension=hom_dim, kind="exceptional"
    )


def check_fully_faithful(alpha, d: int) -> VerificationReport:
    """Fibrewise fully-faithfulness conditions for the kernel S^alpha Q^v.

    Requires End = k in degree 0 (q = 0) and total vanishing of the
    cohomology of wedge^q N' (x) End for q = 1..4.  Guaranteed to pass
    when width(alpha) <= d-5; for wider labels the trace records whatever
    fails, with no claim of a converse.
    """
    if d < 5:
        raise ValueError("fully-faithfulness check requires d >= 5")
    a = FunctorLabel(_as_label_weight(alpha), d).alpha
    ends = ext_decomposition(a, a)
    conditions: list[ConditionRecord] = []
    coh0 = _trace_cohomology(d, 0, ends, conditions)
    _mark_expected_hom(conditions)
    hom_dim = coh0.dimension(0)
    ok = coh0.dimensions() == {0: 1}
    for q in range(1, 5):
        twisted = tensor(wedge_nprime(q), ends)
        coh = _trace_cohomology(d, q, twisted, conditions)
        ok = ok and coh.is_zero()
    return VerificationReport(
        ok, d, a, conditions=conditions, hom_dimension=hom_dim, kind="fully_faithful"
    )


def check_semiorthogonal(alpha, beta, d: int) -> VerificationReport:
    """No morphisms from the beta-block to the alpha-block, fibrewise.

    Requires alpha strictly before beta in the partition order; passes iff
    the cohomology of wedge^q N' (x) S^alpha Q^v (x) (S^beta Q^v)^v
    vanishes entirely for q = 0..4.
    """
    if d < 5:
        raise ValueError("semi-orthogonality check requires d >= 5")
    a = FunctorLabel(_as_label_weight(alpha), d).alpha
    b = FunctorLabel(_as_label_weight(beta), d).alpha
    if not precedes(a, b):
        raise ValueError(f"{a} does not precede {b} in the partition order")
    ext = ext_decomposition(a, b)
    conditions: list[ConditionRecord] = []
    ok = True
    for q in range(5):
        twisted = ext if q == 0 else tensor(wedge_nprime(q), ext)
        coh = _trace_cohomology(d, q, twisted, conditions)
        ok = ok and coh.is_zero()
    return VerificationReport(
        ok, d, a, beta=b, conditions=conditions, hom_dimension=0, kind="semiorthogonal"
    )


def enumerate_ff(d: int) -> list[FunctorLabel]:
    """All labels in the 2 x (d-2) box with width <= d-5, in the partition order."""
    if d < 5:
        raise ValueError("enumeration requires d >= 5")
    labels = [
        FunctorLabel(Weight((a1, a2)), d)
        for a1 in range(d - 1)
        for a2 in range(a1 + 1)
        if a1 - a2 <= d - 5
    ]
    labels.sort(key=lambda lab: sort_key(lab.alpha))
    expected = comb(d - 3, 2) + 3 * (d - 4)
    assert len(labels) == expected, (len(labels), expected)
    return labels


def enumerate_sos(d: int) -> list[FunctorLabel]:
    """The fully-faithful labels with alpha_2 >= 3: the semi-orthogonal sequence."""
    labels = [lab for lab in enumerate_ff(d) if lab.alpha.entries[1] >= 3]
    assert len(labels) == comb(d - 3, 2), (len(labels), comb(d - 3, 2))
    for i, first in enumerate(labels):
        for second in labels[i + 1 :]:
            # every ordered pair satisfies the vanishing bound by construction
            assert first.alpha.entries[0] - second.alpha.entries[1] <= d - 5
    return labels


def kummer_count(d: int) -> int:
    """Length of the induced exceptional sequence on the third Kummer fibre."""
    if d < 5:
        raise ValueError("the count requires d >= 5")
    count = comb(d - 3, 2) * 3 ** (2 * d)
    assert count == len(enumerate_sos(d)) * 3 ** (2 * d)
    return count


def check_cotangent_simple(k: int, d: int) -> VerificationReport:
    """Self-Exts of the cotangent bundle K (x) Q^v of G(k,d).

    For 2 <= k <= d-2 the answer is exactly k in degree 0 and the
    traceless adjoint weight (1,0,...,0,-1) in degree 1; in every case the
    degree-0 part must be one-dimensional.
    """
    if not 1 <= k <= d - 1:
        raise ValueError(f"need 1 <= k <= d-1, got k={k}, d={d}")
    gamma = Weight((1,) + (0,) * (d - k - 1)) if d - k > 1 else Weight((1,))
    delta = Weight((1,) + (0,) * (k - 1)) if k > 1 else Weight((1,))
    omega = BundleExpr(d, k, {(gamma, delta): 1})
    ends = omega.tensor(omega.dual())
    conditions: list[ConditionRecord] = []
    groups: dict[int, RepElement] = {}
    adjoint_pair = (1,) + (0,) * (d - k - 2) + (-1,) if d - k >= 2 else None
    adjoint_qpair = (1,) + (0,) * (k - 2) + (-1,) if k >= 2 else None
    for (g, q), c in sorted(ends.terms.items(), key=lambda t: (t[0][0].entries, t[0][1].entries)):
        outcome = bwb_single(d, k, g, q)
        concatenated = g.entries + q.entries
        expected_survivor = all(e == 0 for e in concatenated) or (
            g.entries == adjoint_pair and q.entries == adjoint_qpair
        )
        conditions.append(
            ConditionRecord(0, concatenated, outcome, required_zero=not expected_survivor)
        )
        if not outcome.is_zero:
            acc = groups.setdefault(outcome.degree, RepElement.zero(d))
            groups[outcome.degree] = acc + RepElement.schur(d, outcome.weight).scaled(c)
    coh = GradedCohomology(d, groups)
    hom_dim = coh.dimension(0)
    verdict = hom_dim == 1
    if 2 <= k <= d - 2:
        adjoint = RepElement.schur(d, (1,) + (0,) * (d - 2) + (-1,))
        expected = {0: RepElement.one(d), 1: adjoint}
        verdict = verdict and coh.groups == expected
    return VerificationReport(
        verdict,
        d,
        delta,
        conditions=conditions,
        hom_dimension=hom_dim,
        kind="cotangent_simple",
    )
