"""Batch verification suite: every headline identity checked at desk scale.

Each check returns a CheckResult; run_all drives them with a configurable
upper bound on the ambient dimension.  All arithmetic is exact, so every
check is a strict equality with zero tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator

from . import bundle_calculus as bc
from . import rep_ring as rr
from . import soc
from .bwb import bwb_single
from .partitions import Weight


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "verdict": "pass" if self.passed else "fail", "detail": self.detail}


def _box_partitions(d: int) -> list[Weight]:
    """All partitions inscribed in the 2 x (d-2) box, in the enumeration order."""
    from .partitions import sort_key

    out = [Weight((a1, a2)) for a1 in range(d - 1) for a2 in range(a1 + 1)]
    out.sort(key=sort_key)
    return out


def check_counting(d_max: int = 12) -> CheckResult:
    for d in range(5, min(12, d_max) + 1):
        n_ff = len(soc.enumerate_ff(d))
        n_sos = len(soc.enumerate_sos(d))
        if n_ff != comb(d - 3, 2) + 3 * (d - 4) or n_ff != (d * d - d - 12) // 2:
            return CheckResult("counting", False, f"d={d}: ff count {n_ff}")
        if n_sos != comb(d - 3, 2):
            return CheckResult("counting", False, f"d={d}: sos count {n_sos}")
    return CheckResult("counting", True, f"label counts match for d = 5..{min(12, d_max)}")


def check_kummer(d_max: int = 12) -> CheckResult:
    if soc.kummer_count(5) != 59049:
        return CheckResult("kummer-count", False, "d=5 count != 3^10")
    for d in range(5, min(12, d_max) + 1):
        if soc.kummer_count(d) != comb(d - 3, 2) * 3 ** (2 * d):
            return CheckResult("kummer-count", False, f"d={d} mismatch")
    return CheckResult("kummer-count", True, f"exact big-integer counts for d = 5..{min(12, d_max)}")


def check_fully_faithful(d_max: int = 9) -> CheckResult:
    total = 0
    for d in range(5, min(9, d_max) + 1):
        for label in soc.enumerate_ff(d):
            report = soc.check_fully_faithful(label.alpha, d)
            total += 1
            if not report.verdict:
                return CheckResult(
                    "fully-faithful", False, f"d={d}, alpha={label.alpha} failed"
                )
    return CheckResult("fully-faithful", True, f"{total} narrow labels pass, d = 5..{min(9, d_max)}")


def _bounded_pairs(d: int) -> Iterator[tuple[Weight, Weight]]:
    labels = _box_partitions(d)
    for i, a in enumerate(labels):
        for b in labels[i + 1 :]:
            if a.entries[0] - b.entries[1] <= d - 5:
                yield a, b


def check_semiorthogonal(d_max: int = 9) -> CheckResult:
    total = 0
    for d in range(5, min(9, d_max) + 1):
        sos = {lab.alpha for lab in soc.enumerate_sos(d)}
        seen_sos_pairs = 0
        for a, b in _bounded_pairs(d):
            report = soc.check_semiorthogonal(a, b, d)
            total += 1
            if a in sos and b in sos:
                seen_sos_pairs += 1
            if not report.verdict:
                return CheckResult(
                    "semi-orthogonality", False, f"d={d}, {a} before {b} failed"
                )
        if seen_sos_pairs != comb(len(sos), 2):
            return CheckResult(
                "semi-orthogonality", False, f"d={d}: sequence pairs not all covered"
            )
    return CheckResult("semi-orthogonality", True, f"{total} ordered pairs pass, d = 5..{min(9, d_max)}")


def check_exceptional_collection(d_max: int = 8) -> CheckResult:
    total = 0
    for d in range(3, min(8, d_max) + 1):
        labels = _box_partitions(d)
        for a in labels:
            if not soc.check_exceptional(a, d).verdict:
                return CheckResult("exceptional-collection", False, f"d={d}, alpha={a}")
        for i, a in enumerate(labels):
            for b in labels[i + 1 :]:
                for w in soc.ext_decomposition(a, b).terms:
                    outcome = bwb_single(d, 2, (0,) * (d - 2), w)
                    if not outcome.is_zero:
                        return CheckResult(
                            "exceptional-collection",
                            False,
                            f"d={d}: backward Ext {a} before {b} survives at {w}",
                        )
                total += 1
    return CheckResult(
        "exceptional-collection", True, f"{total} backward pairs vanish, d = 3..{min(8, d_max)}"
    )


def check_normal_bundle(d_max: int = 12) -> CheckResult:
    del d_max  # fibre expressions are dimension-independent
    ok = (
        bc.wedge_nprime(3) == rr.RepElement.schur(2, (3, 0))
        and bc.wedge_nprime(4) == rr.RepElement.schur(2, (2, 2))
        and bc.wedge2_middle()
        == rr.RepElement(
            2, {Weight((3, -1)): 2, Weight((1, 1)): 2, Weight((2, 0)): 1}
        )
        and bc.wedge2_middle() == rr.ext_power(bc.SES_MIDDLE, 2)
        and bc.wedge_nprime(3)
        == rr.tensor(bc.wedge_nprime(4), rr.dual(bc.NPRIME))
        and all(bc.wedge_nprime(q).dimension() == comb(4, q) for q in range(5))
    )
    return CheckResult("normal-bundle-wedges", ok, "wedge powers and filtration agree" if ok else "mismatch")


def check_cotangent(d_max: int = 8) -> CheckResult:
    total = 0
    for d in range(4, min(8, d_max) + 1):
        for k in range(2, d - 1):
            report = soc.check_cotangent_simple(k, d)
            total += 1
            if not report.verdict:
                return CheckResult("cotangent-simplicity", False, f"G({k},{d}) failed")
            degree1 = [c for c in report.conditions if not c.outcome.is_zero and c.outcome.degree == 1]
            if sum(c.outcome.dimension() for c in degree1) != d * d - 1:
                return CheckResult("cotangent-simplicity", False, f"G({k},{d}): bad Ext^1 dim")
    return CheckResult("cotangent-simplicity", True, f"{total} Grassmannians, d <= {min(8, d_max)}")


def _partitions_up_to(n_max: int, rows: int) -> list[tuple[int, ...]]:
    out = [()]
    def rec(prefix: list[int], remaining_rows: int, cap: int):
        if remaining_rows == 0:
            return
        for v in range(1, cap + 1):
            if sum(prefix) + v > n_max:
                break
            prefix.append(v)
            out.append(tuple(prefix))
            rec(prefix, remaining_rows - 1, v)
            prefix.pop()
    rec([], rows, n_max)
    return out


def check_oracle_equivalence(d_max: int = 12) -> CheckResult:
    del d_max
    rank = 3
    shapes = _partitions_up_to(6, rank)
    pairs = 0
    for pa in shapes:
        a = rr.RepElement.schur(rank, tuple(pa) + (0,) * (rank - len(pa)))
        ca = rr.char_of(a)
        for pb in shapes:
            b = rr.RepElement.schur(rank, tuple(pb) + (0,) * (rank - len(pb)))
            product = rr.tensor(a, b)
            if rr.char_of(product).coeffs != (ca * rr.char_of(b)).coeffs:
                return CheckResult("oracle-equivalence", False, f"LR vs character at {pa} x {pb}")
            pairs += 1
    # Bott's formula on projective spaces of quotients (k = 1)
    for d in range(2, 7):
        n = d - 1  # dimension of the projective space
        for m in range(-12, 13):
            outcome = bwb_single(d, 1, (0,) * (d - 1), (m,))
            dims = {} if outcome.is_zero else {outcome.degree: outcome.dimension()}
            expected = {}
            if m <= 0:
                expected[0] = comb(d - 1 - m, d - 1)
            elif m >= d:
                expected[n] = comb(m - 1, d - 1)
            expected = {p: v for p, v in expected.items() if v}
            if dims != expected:
                return CheckResult(
                    "oracle-equivalence", False, f"Bott mismatch on P^{n}, twist {m}: {dims} vs {expected}"
                )
    return CheckResult("oracle-equivalence", True, f"{pairs} LR/character pairs and Bott on P^1..P^5")


def check_pieri(d_max: int = 12) -> CheckResult:
    del d_max
    a = rr.RepElement.schur(3, (2, 1, 0))
    sym = rr.tensor(a, rr.RepElement.schur(3, (2, 0, 0)))
    ext = rr.tensor(a, rr.RepElement.schur(3, (1, 1, 0)))
    exp_sym = rr.RepElement(
        3,
        {Weight((4, 1, 0)): 1, Weight((3, 2, 0)): 1, Weight((3, 1, 1)): 1, Weight((2, 2, 1)): 1},
    )
    exp_ext = rr.RepElement(
        3, {Weight((3, 2, 0)): 1, Weight((3, 1, 1)): 1, Weight((2, 2, 1)): 1}
    )
    ok = sym == exp_sym and ext == exp_ext
    return CheckResult("pieri", ok, "golden decompositions reproduced" if ok else "mismatch")


def check_rank_identity(d_max: int = 12) -> CheckResult:
    for d in range(1, min(12, d_max) + 1):
        for l in range(1, d + 1):
            value = bc.planar_rank_identity(d, l)
            if value != (d - l) + comb(l + 1, 2):
                return CheckResult("rank-identity", False, f"(d={d}, l={l})")
    return CheckResult("rank-identity", True, f"all 1 <= l <= d <= {min(12, d_max)}")


ALL_CHECKS: list[Callable[[int], CheckResult]] = [
    check_counting,
    check_kummer,
    check_fully_faithful,
    check_semiorthogonal,
    check_exceptional_collection,
    check_normal_bundle,
    check_cotangent,
    check_oracle_equivalence,
    check_pieri,
    check_rank_identity,
]


def run_all(d_max: int = 12) -> list[CheckResult]:
    return [check(d_max) for check in ALL_CHECKS]
