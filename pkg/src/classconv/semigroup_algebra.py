"""The semigroup algebra B_n = Q[P_n] with exact rational coefficients.

Elements are sparse maps from partial permutations to Fractions inside a
fixed ambient bound n.  The module also provides the evaluation
homomorphisms phi_x into group algebras of subsets, the central
projections epsilon_d, the truncation homomorphisms theta_m, the
support-forgetting map psi onto Q[S_n], and the center-dimension count.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Mapping

from .partial_perm import PartialPermutation, enumerate_class
from .partitions import Partition, partition_count

Coeff = int | Fraction


def _clean(terms: Mapping[PartialPermutation, Coeff]) -> dict[PartialPermutation, Fraction]:
    out = {}
    for pp, c in terms.items():
        c = Fraction(c)
        if c:
            out[pp] = c
    return out


class SemigroupAlgebraElement:
    """A finite rational combination of partial permutations in P_n."""

    __slots__ = ("terms", "n")

    def __init__(self, terms: Mapping[PartialPermutation, Coeff], n: int) -> None:
        self.terms = _clean(terms)
        self.n = n
        full = frozenset(range(1, n + 1))
        for pp in self.terms:
            if not pp.support <= full:
                raise ValueError(f"support of {pp} exceeds ambient bound {n}")

    @classmethod
    def zero(cls, n: int) -> "SemigroupAlgebraElement":
        return cls({}, n)

    @classmethod
    def unit(cls, n: int) -> "SemigroupAlgebraElement":
        return cls({PartialPermutation(): Fraction(1)}, n)

    @classmethod
    def basis(cls, pp: PartialPermutation, n: int) -> "SemigroupAlgebraElement":
        return cls({pp: Fraction(1)}, n)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SemigroupAlgebraElement") -> "SemigroupAlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for pp, c in other.terms.items():
            out[pp] = out.get(pp, Fraction(0)) + c
        return SemigroupAlgebraElement(out, self.n)

    def __sub__(self, other: "SemigroupAlgebraElement") -> "SemigroupAlgebraElement":
        return self + (-1) * other

    def __rmul__(self, scalar: Coeff) -> "SemigroupAlgebraElement":
        return SemigroupAlgebraElement(
            {pp: Fraction(scalar) * c for pp, c in self.terms.items()}, self.n)

    def __mul__(self, other: "SemigroupAlgebraElement") -> "SemigroupAlgebraElement":
        return multiply(self, other)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SemigroupAlgebraElement)
                and self.n == other.n and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted((str(k), v) for k, v in self.terms.items()))))

    def _check(self, other: "SemigroupAlgebraElement") -> None:
        if self.n != other.n:
            raise ValueError(f"ambient mismatch: {self.n} vs {other.n}")

    def phi_x(self, x: Iterable[int]) -> "GroupAlgebraElement":
        return phi_x(self, x)

    def truncate(self, m: int) -> "SemigroupAlgebraElement":
        return truncate(self, m)

    def forget_support(self) -> "GroupAlgebraElement":
        return forget_support(self)

    def dump(self) -> list[tuple[tuple[int, ...], str, Fraction]]:
        """Structured record list sorted by (support size, support, cycle form)."""
        rows = []
        for pp, c in self.terms.items():
            sup = tuple(sorted(pp.support))
            cyc = "".join("(" + ",".join(map(str, cy)) + ")" for cy in pp.cycles())
            rows.append((sup, cyc, c))
        rows.sort(key=lambda r: (len(r[0]), r[0], r[1]))
        return rows

    def __repr__(self) -> str:
        return f"SemigroupAlgebraElement({len(self.terms)} terms, n={self.n})"


class GroupAlgebraElement:
    """A rational combination of total permutations of a fixed ground set.

    Keys are PartialPermutation values whose support equals the domain, so
    the group product is the restriction of the semigroup product.
    """

    __slots__ = ("terms", "domain")

    def __init__(self, terms: Mapping[PartialPermutation, Coeff],
                 domain: Iterable[int]) -> None:
        self.domain = frozenset(domain)
        self.terms = _clean(terms)
        for pp in self.terms:
            if pp.support != self.domain:
                raise ValueError("keys must be total permutations of the domain")

    @classmethod
    def zero(cls, domain: Iterable[int]) -> "GroupAlgebraElement":
        return cls({}, domain)

    @classmethod
    def unit(cls, domain: Iterable[int]) -> "GroupAlgebraElement":
        dom = frozenset(domain)
        return cls({PartialPermutation.identity(dom): Fraction(1)}, dom)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if self.domain != other.domain:
            raise ValueError("domain mismatch")
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return GroupAlgebraElement(out, self.domain)

    def __rmul__(self, scalar: Coeff) -> "GroupAlgebraElement":
        return GroupAlgebraElement(
            {w: Fraction(scalar) * c for w, c in self.terms.items()}, self.domain)

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if self.domain != other.domain:
            raise ValueError("domain mismatch")
        out: dict[PartialPermutation, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                out[w] = out.get(w, Fraction(0)) + c1 * c2
        return GroupAlgebraElement(out, self.domain)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GroupAlgebraElement)
                and self.domain == other.domain and self.terms == other.terms)

    def __repr__(self) -> str:
        return f"GroupAlgebraElement({len(self.terms)} terms, |domain|={len(self.domain)})"


def multiply(a: SemigroupAlgebraElement, b: SemigroupAlgebraElement) -> SemigroupAlgebraElement:
    """Bilinear extension of the semigroup product."""
    a._check(b)
    out: dict[PartialPermutation, Fraction] = {}
    for p1, c1 in a.terms.items():
        for p2, c2 in b.terms.items():
            p = p1 * p2
            out[p] = out.get(p, Fraction(0)) + c1 * c2
    return SemigroupAlgebraElement(out, a.n)


def phi_x(b: SemigroupAlgebraElement, x: Iterable[int]) -> GroupAlgebraElement:
    """Evaluation homomorphism B_n -> Q[S_x]: keep terms with support in x."""
    dom = frozenset(x)
    if not dom <= frozenset(range(1, b.n + 1)):
        raise ValueError("x must be a subset of the ambient set")
    out: dict[PartialPermutation, Fraction] = {}
    for pp, c in b.terms.items():
        if pp.support <= dom:
            ext = PartialPermutation({p: pp(p) for p in dom})
            out[ext] = out.get(ext, Fraction(0)) + c
    return GroupAlgebraElement(out, dom)


def forget_support(b: SemigroupAlgebraElement) -> GroupAlgebraElement:
    """psi: (d, w) -> identical extension of w to the full ambient set."""
    return phi_x(b, range(1, b.n + 1))


def truncate(b: SemigroupAlgebraElement, m: int) -> SemigroupAlgebraElement:
    """theta_m: keep terms supported inside {1..m}."""
    if m > b.n:
        raise ValueError("truncation level exceeds ambient bound")
    cut = frozenset(range(1, m + 1))
    return SemigroupAlgebraElement(
        {pp: c for pp, c in b.terms.items() if pp.support <= cut}, m)


def epsilon(d: Iterable[int], n: int) -> SemigroupAlgebraElement:
    """The central projection: alternating sum of identities over supersets of d."""
    base = frozenset(d)
    if not base <= frozenset(range(1, n + 1)):
        raise ValueError("d must be a subset of the ambient set")
    rest = sorted(frozenset(range(1, n + 1)) - base)
    terms: dict[PartialPermutation, Fraction] = {}
    for k in range(len(rest) + 1):
        for extra in combinations(rest, k):
            y = base | set(extra)
            terms[PartialPermutation.identity(y)] = Fraction(-1) ** k
    return SemigroupAlgebraElement(terms, n)


def class_element(rho: Partition, n: int) -> SemigroupAlgebraElement:
    """A_{rho;n} as an explicit sum of basis partial permutations."""
    return SemigroupAlgebraElement(
        {pp: Fraction(1) for pp in enumerate_class(rho, n)}, n)


def center_dimension(n: int) -> int:
    """dim Z(B_n) = sum_k C(n,k) p(k)."""
    return sum(comb(n, k) * partition_count(k) for k in range(n + 1))


def center_dimension_by_pairs(n: int) -> int:
    """Independent count of pairs (d, lambda |- |d|) with d inside {1..n}."""
    count = 0
    for k in range(n + 1):
        for _d in combinations(range(1, n + 1), k):
            count += partition_count(k)
    return count
