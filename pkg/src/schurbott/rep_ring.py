"""The representation ring of GL_r in the Schur basis.

Products are computed by the Littlewood-Richardson rule (negative entries
are routed through a determinant shift).  Symmetric/exterior powers and
general plethysms go through an independent character-polynomial oracle:
expand into a multiset of weight monomials, apply the elementary or
complete symmetric function, and peel the result back into Schur terms.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping

from .partitions import Weight, trivial


class DecompositionError(ValueError):
    """A claimed character failed to peel into non-negative Schur multiplicities."""


def weyl_dim(w: Weight) -> int:
    """Dimension of the irreducible GL_r representation of highest weight w.

    Weyl dimension formula: prod over i<j of (w_i - w_j + j - i)/(j - i).
    """
    e = w.entries
    r = len(e)
    value = Fraction(1)
    for i in range(r):
        for j in range(i + 1, r):
            value *= Fraction(e[i] - e[j] + j - i, j - i)
    assert value.denominator == 1
    return int(value)


# ---------------------------------------------------------------------------
# Littlewood-Richardson multiplication
# ---------------------------------------------------------------------------

def _horizontal_strips(shape: tuple[int, ...], m: int, max_rows: int) -> Iterator[tuple[int, ...]]:
    """All shapes obtained from ``shape`` by adding m boxes, no two in a column.

    A strip can open at most one new row; shapes longer than max_rows are
    pruned (they die as GL_{max_rows} representations anyway).
    """
    base = list(shape) + ([0] if len(shape) < max_rows else [])
    n = len(base)

    def rec(j: int, remaining: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if j == n:
            if remaining == 0:
                out = list(acc)
                while out and out[-1] == 0:
                    out.pop()
                yield tuple(out)
            return
        # mu_j <= lambda_{j-1} keeps the added boxes in distinct columns
        upper = remaining if j == 0 else base[j - 1] - base[j]
        for add in range(min(upper, remaining) + 1):
            acc.append(base[j] + add)
            yield from rec(j + 1, remaining - add, acc)
            acc.pop()

    yield from rec(0, m, [])


def _is_ballot(rows: list[list[int]], n_letters: int) -> bool:
    """Reverse reading word condition: every prefix has #i >= #(i+1)."""
    counts = [0] * (n_letters + 1)
    for row in rows:
        for letter in reversed(row):
            counts[letter] += 1
            if letter > 1 and counts[letter] > counts[letter - 1]:
                return False
    return True


@lru_cache(maxsize=None)
def lr_coefficients(alpha: tuple[int, ...], beta: tuple[int, ...], max_rows: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Littlewood-Richardson expansion of s_alpha * s_beta, rows capped at max_rows.

    Both inputs are partitions without trailing zeros.  Returns pairs
    (nu, N_{alpha beta nu}); shapes with more than max_rows rows are dropped
    (they vanish as GL_{max_rows} representations).
    """
    if sum(beta) > sum(alpha):
        alpha, beta = beta, alpha  # symmetric; iterate over the smaller factor
    results: Counter[tuple[int, ...]] = Counter()
    n_letters = len(beta)

    def place(letter: int, shape: tuple[int, ...], rows: list[list[int]]) -> None:
        if letter > n_letters:
            if _is_ballot(rows, n_letters):
                results[shape] += 1
            return
        for new_shape in _horizontal_strips(shape, beta[letter - 1], max_rows):
            added = [
                new_shape[j] - (shape[j] if j < len(shape) else 0)
                for j in range(len(new_shape))
            ]
            for j, a in enumerate(added):
                while len(rows) <= j:
                    rows.append([])
                rows[j].extend([letter] * a)
            place(letter + 1, new_shape, rows)
            for j, a in enumerate(added):
                if a:
                    del rows[j][-a:]

    place(1, alpha, [])
    return tuple(sorted(results.items()))


# ---------------------------------------------------------------------------
# Ring elements
# ---------------------------------------------------------------------------

class RepElement:
    """Finite integer combination of Weights of a common rank.

    Negative coefficients are allowed (virtual K-theory elements); zero
    coefficients are never stored.  Instances are immutable in spirit:
    all operations return fresh elements.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Weight, int] | None = None):
        if rank < 1:
            raise ValueError("rank must be positive")
        self.rank = rank
        clean: dict[Weight, int] = {}
        for w, c in (terms or {}).items():
            if w.rank != rank:
                raise ValueError(f"weight {w} has rank {w.rank}, element has rank {rank}")
            if c != 0:
                clean[w] = clean.get(w, 0) + c
        self.terms = {w: c for w, c in clean.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def schur(cls, rank: int, entries) -> "RepElement":
        w = entries if isinstance(entries, Weight) else Weight(tuple(entries))
        if w.rank > rank:
            return cls(rank)
        return cls(rank, {w.padded(rank): 1})

    @classmethod
    def one(cls, rank: int) -> "RepElement":
        return cls(rank, {trivial(rank): 1})

    @classmethod
    def zero(cls, rank: int) -> "RepElement":
        return cls(rank)

    # -- basic structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def dimension(self) -> int:
        return sum(c * weyl_dim(w) for w, c in self.terms.items())

    def __add__(self, other: "RepElement") -> "RepElement":
        self._check(other)
        merged = dict(self.terms)
        for w, c in other.terms.items():
            merged[w] = merged.get(w, 0) + c
        return RepElement(self.rank, merged)

    def __sub__(self, other: "RepElement") -> "RepElement":
        return self + other.scaled(-1)

    def scaled(self, n: int) -> "RepElement":
        return RepElement(self.rank, {w: n * c for w, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RepElement)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.rank, frozenset(self.terms.items())))

    def _check(self, other: "RepElement") -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def sorted_terms(self) -> list[tuple[Weight, int]]:
        return sorted(self.terms.items(), key=lambda t: tuple(-e for e in t[0].entries))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            head = "" if c == 1 else f"{c}*"
            parts.append(f"{head}S{w}")
        return " + ".join(parts)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [
                {"weight": list(w.entries), "coeff": c} for w, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RepElement":
        terms = {Weight(tuple(t["weight"])): int(t["coeff"]) for t in data["terms"]}
        return cls(int(data["rank"]), terms)


def tensor(a: RepElement, b: RepElement) -> RepElement:
    """Bilinear extension of the Littlewood-Richardson product.

    Weights with negative entries are shifted into partitions, multiplied,
    and twisted back; shapes with more than ``rank`` rows vanish.
    """
    a._check(b)
    rank = a.rank
    out: dict[Weight, int] = {}
    for wa, ca in a.terms.items():
        ma = -min(0, wa.entries[-1])
        pa = tuple(e + ma for e in wa.entries)
        pa = pa[: len(pa) - _trailing_zeros(pa)]
        for wb, cb in b.terms.items():
            mb = -min(0, wb.entries[-1])
            pb = tuple(e + mb for e in wb.entries)
            pb = pb[: len(pb) - _trailing_zeros(pb)]
            shift = ma + mb
            for nu, mult in lr_coefficients(pa, pb, rank):
                w = Weight(tuple(nu) + (0,) * (rank - len(nu))).shifted(-shift)
                out[w] = out.get(w, 0) + ca * cb * mult
    return RepElement(rank, out)


def _trailing_zeros(entries: tuple[int, ...]) -> int:
    n = 0
    for e in reversed(entries):
        if e != 0:
            break
        n += 1
    return n


def dual(a: RepElement) -> RepElement:
    """Linear extension of Sigma^alpha -> Sigma^{-alpha}, reversing the entries."""
    return RepElement(
        a.rank,
        {Weight(tuple(-e for e in reversed(w.entries))): c for w, c in a.terms.items()},
    )


def det_twist(a: RepElement, m: int) -> RepElement:
    """Tensor with the m-th power of the determinant: add m boxes in each row."""
    return RepElement(a.rank, {w.shifted(m): c for w, c in a.terms.items()})


# ---------------------------------------------------------------------------
# Character oracle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharPoly:
    """Symmetric integer Laurent polynomial in ``rank`` variables.

    Stored as exponent-vector -> coefficient; the exponent vectors are the
    weights of the representation, so symmetry under permuting the
    variables is automatic for genuine characters.
    """

    rank: int
    coeffs: tuple[tuple[tuple[int, ...], int], ...]

    @classmethod
    def from_counter(cls, rank: int, counts: Mapping[tuple[int, ...], int]) -> "CharPoly":
        return cls(rank, tuple(sorted((e, c) for e, c in counts.items() if c != 0)))

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.coeffs)

    def __mul__(self, other: "CharPoly") -> "CharPoly":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        out: Counter[tuple[int, ...]] = Counter()
        for ea, ca in self.coeffs:
            for eb, cb in other.coeffs:
                out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
        return CharPoly.from_counter(self.rank, out)

    def __add__(self, other: "CharPoly") -> "CharPoly":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        out = Counter(dict(self.coeffs))
        for e, c in other.coeffs:
            out[e] += c
        return CharPoly.from_counter(self.rank, out)

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate_at_ones(self) -> int:
        return sum(c for _, c in self.coeffs)

    def monomials(self) -> list[tuple[int, ...]]:
        """Multiset of exponent vectors; requires non-negative coefficients."""
        out = []
        for e, c in self.coeffs:
            if c < 0:
                raise ValueError("negative coefficient; not a genuine character")
            out.extend([e] * c)
        return out


@lru_cache(maxsize=None)
def _schur_monomials(shape: tuple[int, ...], rank: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Weight multiset of s_shape(x_1..x_rank) via semistandard tableaux."""
    rows = [r for r in shape if r > 0]
    if len(rows) > rank:
        return ()
    if not rows:
        return (((0,) * rank, 1),)
    counts: Counter[tuple[int, ...]] = Counter()

    def rows_iter(i: int, above: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == len(rows):
            yield ()
            return
        length = rows[i]

        def row_fill(j: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
            if j == length:
                yield tuple(acc)
                return
            lo = acc[-1] if acc else 1
            if j < len(above):
                lo = max(lo, above[j] + 1)
            for v in range(lo, rank + 1):
                acc.append(v)
                yield from row_fill(j + 1, acc)
                acc.pop()

        for row in row_fill(0, []):
            for rest in rows_iter(i + 1, row):
                yield (row,) + rest

    for tab in rows_iter(0, ()):
        content = [0] * rank
        for row in tab:
            for v in row:
                content[v - 1] += 1
        counts[tuple(content)] += 1
    return tuple(sorted(counts.items()))


def schur_char(w: Weight, rank: int | None = None) -> CharPoly:
    """Character of Sigma^w as a Laurent polynomial (determinant shift for negatives)."""
    rank = rank or w.rank
    if w.rank != rank:
        raise ValueError("rank mismatch")
    m = -min(0, w.entries[-1])
    shape = tuple(e + m for e in w.entries)
    mons = _schur_monomials(tuple(e for e in shape if e > 0), rank)
    shifted = {tuple(x - m for x in e): c for e, c in mons}
    return CharPoly.from_counter(rank, shifted)


def char_of(a: RepElement) -> CharPoly:
    out: Counter[tuple[int, ...]] = Counter()
    for w, c in a.terms.items():
        for e, mult in schur_char(w).coeffs:
            out[e] += c * mult
    return CharPoly.from_counter(a.rank, out)


def decompose(c: CharPoly, require_effective: bool = False) -> RepElement:
    """Invert char_of by greedy highest-weight peeling.

    Repeatedly subtracts the Schur character of the lexicographically
    largest remaining exponent vector.  For a genuine character this
    terminates with the (unique) Schur expansion.
    """
    remaining = Counter(dict(c.coeffs))
    terms: dict[Weight, int] = {}
    while True:
        remaining = Counter({e: v for e, v in remaining.items() if v != 0})
        if not remaining:
            break
        top = max(remaining)
        if any(a < b for a, b in zip(top, top[1:])):
            raise DecompositionError(
                f"leading exponent {top} is not dominant; not a character"
            )
        mult = remaining[top]
        if require_effective and mult < 0:
            raise DecompositionError(
                f"peeling produced negative multiplicity {mult} at weight {top}"
            )
        w = Weight(top)
        terms[w] = terms.get(w, 0) + mult
        for e, k in schur_char(w).coeffs:
            remaining[e] -= mult * k
    return RepElement(c.rank, terms)


# ---------------------------------------------------------------------------
# Plethysm via the oracle
# ---------------------------------------------------------------------------

def _eigenvalues(a: RepElement) -> list[tuple[int, ...]]:
    if not a.is_effective():
        raise ValueError("plethysm of a non-effective element is undefined")
    return char_of(a).monomials()

def ext_power(a: RepElement, m: int) -> RepElement:
    """Exterior power: elementary symmetric function of the weight monomials."""
    if m < 0:
        raise ValueError("negative exterior power")
    if m == 0:
        return RepElement.one(a.rank)
    mons = _eigenvalues(a)
    if m > len(mons):
        return RepElement.zero(a.rank)
    counts: Counter[tuple[int, ...]] = Counter()
    for combo in itertools.combinations(mons, m):
        counts[tuple(map(sum, zip(*combo)))] += 1
    return decompose(CharPoly.from_counter(a.rank, counts), require_effective=True)


def sym_power(a: RepElement, m: int) -> RepElement:
    """Symmetric power: complete homogeneous symmetric function of the monomials."""
    if m < 0:
        raise ValueError("negative symmetric power")
    if m == 0:
        return RepElement.one(a.rank)
    distinct = sorted(Counter(_eigenvalues(a)).items())
    counts: Counter[tuple[int, ...]] = Counter()
    for combo in _multisets(distinct, m):
        counts[combo] += 1
    return decompose(CharPoly.from_counter(a.rank, counts), require_effective=True)


def _multisets(distinct: list[tuple[tuple[int, ...], int]], m: int) -> Iterator[tuple[int, ...]]:
    """Exponent sums over degree-m multisets of eigenvalues (with multiplicity)."""
    flat: list[tuple[int, ...]] = []
    for e, c in distinct:
        flat.extend([e] * c)
    for combo in itertools.combinations_with_replacement(flat, m):
        yield tuple(map(sum, zip(*combo)))
