"""The invariant class algebra: structure constants, products, polynomials.

Basis elements A_rho are indexed by partitions of arbitrary size; the
structure constants g count pairs of partial permutations multiplying to
a fixed representative.  The fast engine enumerates one factor class and
derives the other factor by composition, reducing the second support
choice to a single binomial coefficient.  A naive double enumeration and
a brute-force group-algebra convolution stay available as independent
verification routes and are never consulted by the fast path.

All values are immutable and the memo caches only grow, so concurrent
readers are safe; inserts are plain dict assignments (atomic under the
GIL).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterable, Mapping

from .partial_perm import permutations_of_type
from .partitions import EMPTY, Partition, enumerate_partitions, partitions_up_to

Coeff = int | Fraction

ORACLE_DEFAULT_BOUND = 7

# ---------------------------------------------------------------------------
# permutations as image tuples over {1..r}


def _canonical_images(parts: tuple[int, ...], r: int) -> tuple[int, ...]:
    """Image tuple of the canonical representative with consecutive cycles."""
    w = list(range(1, r + 1))
    start = 1
    for part in parts:
        for i in range(part):
            w[start + i - 1] = start + (i + 1) % part
        start += part
    return tuple(w)


def _cycle_type_tuple(w: tuple[int, ...], r: int) -> tuple[int, ...]:
    seen = 0
    parts = []
    for i in range(r):
        if (seen >> i) & 1:
            continue
        ln = 0
        x = i + 1
        while not (seen >> (x - 1)) & 1:
            seen |= 1 << (x - 1)
            ln += 1
            x = w[x - 1]
        parts.append(ln)
    parts.sort(reverse=True)
    return tuple(parts)


def _nontrivial_type(w: tuple[int, ...], r: int) -> tuple[tuple[int, ...], int]:
    """Cycle lengths >= 2 (sorted decreasingly) and the non-fixed-point mask."""
    seen = 0
    mask = 0
    parts = []
    for i in range(r):
        if w[i] == i + 1 or (seen >> i) & 1:
            continue
        ln = 0
        x = i + 1
        while not (seen >> (x - 1)) & 1:
            seen |= 1 << (x - 1)
            mask |= 1 << (x - 1)
            ln += 1
            x = w[x - 1]
        parts.append(ln)
    parts.sort(reverse=True)
    return tuple(parts), mask


@lru_cache(maxsize=None)
def _class_tuples(parts: tuple[int, ...], r: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """All of A_{parts;r} as (support mask, image tuple over {1..r}) pairs."""
    s = sum(parts)
    rho = Partition(parts)
    out = []
    for d in combinations(range(1, r + 1), s):
        mask = 0
        for p in d:
            mask |= 1 << (p - 1)
        for m in permutations_of_type(d, rho):
            w = list(range(1, r + 1))
            for a, b in m.items():
                w[a - 1] = b
            out.append((mask, tuple(w)))
    return tuple(out)


@lru_cache(maxsize=None)
def _reps_inv(parts: tuple[int, ...], r: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Like _class_tuples but storing the inverse image tuple."""
    out = []
    for mask, w in _class_tuples(parts, r):
        inv = [0] * r
        for i in range(r):
            inv[w[i] - 1] = i + 1
        out.append((mask, tuple(inv)))
    return tuple(out)


def _rep_count(parts: tuple[int, ...], r: int) -> int:
    s = sum(parts)
    return comb(r, s) * factorial(s) // Partition(parts).centralizer_size()


# ---------------------------------------------------------------------------
# the structure-constant engine

_PAIR_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...]], dict[Partition, int]] = {}


def _buckets(reps, w_rho: tuple[int, ...], r: int, enum_is_first: bool) -> dict:
    """One pass over an enumerated factor class against a fixed target.

    Buckets count enumerated elements by (nontrivial type of the derived
    cofactor, size of its forced support core); the cofactor support then
    varies only through a binomial choice of extra fixed points.
    """
    full = (1 << r) - 1
    out: dict[tuple[tuple[int, ...], int], int] = {}
    rng = range(r)
    for mask, inv in reps:
        if enum_is_first:
            w = tuple(inv[w_rho[i] - 1] for i in rng)
        else:
            w = tuple(w_rho[inv[i] - 1] for i in rng)
        nt, nonfixed = _nontrivial_type(w, r)
        forced = nonfixed | (full & ~mask)
        key = (nt, forced.bit_count())
        out[key] = out.get(key, 0) + 1
    return out


def _g_from_buckets(buckets: Mapping, r: int, obar: tuple[int, ...], osize: int) -> int:
    g = 0
    for (nt, fs), count in buckets.items():
        if nt == obar and osize >= fs:
            g += count * comb(r - fs, osize - fs)
    return g


def _expand_pair(sigma: Partition, tau: Partition, side: str = "auto") -> dict[Partition, int]:
    """All nonzero g_{sigma,tau}^rho, enumerating the cheaper factor class.

    `side` forces which tensor factor is enumerated ("first"/"second");
    both give the same ordered-pair count, so "auto" picks by cost.
    """
    s, t = sigma.size(), tau.size()
    out: dict[Partition, int] = {}
    for r in range(max(s, t), s + t + 1):
        if side == "auto":
            use_first = _rep_count(sigma.parts, r) <= _rep_count(tau.parts, r)
        elif side == "first":
            use_first = True
        elif side == "second":
            use_first = False
        else:
            raise ValueError(f"unknown side {side!r}")
        enum_parts = sigma if use_first else tau
        other = tau if use_first else sigma
        reps = _reps_inv(enum_parts.parts, r)
        obar = other.strip_ones().parts
        osize = other.size()
        for rho in enumerate_partitions(r):
            w_rho = _canonical_images(rho.parts, r)
            g = _g_from_buckets(_buckets(reps, w_rho, r, use_first), r, obar, osize)
            if g:
                out[rho] = g
    return out


def product_expansion(sigma: Partition, tau: Partition) -> dict[Partition, int]:
    """Nonzero g_{sigma,tau}^rho for all rho, cached per unordered pair.

    The cache key is order-normalized; the commutativity this relies on is
    exercised by the test suite through forced-side raw expansions.
    """
    a, b = sorted((sigma.parts, tau.parts))
    key = (a, b)
    hit = _PAIR_CACHE.get(key)
    if hit is None:
        hit = _expand_pair(Partition(a), Partition(b))
        _PAIR_CACHE[key] = hit
    return hit


def g_constant(sigma: Partition, tau: Partition, rho: Partition, method: str = "fast") -> int:
    """The structure constant g_{sigma,tau}^rho.

    Counts pairs of partial permutations of types sigma, tau whose product
    is the canonical representative of rho; zero unless
    max(|sigma|,|tau|) <= |rho| <= |sigma|+|tau|.
    """
    if method == "naive":
        return g_constant_naive(sigma, tau, rho)
    if rho.size() > sigma.size() + tau.size():
        return 0
    return product_expansion(sigma, tau).get(rho, 0)


def g_constant_naive(sigma: Partition, tau: Partition, rho: Partition) -> int:
    """Guard route: full double enumeration over both factor classes."""
    r = rho.size()
    full = (1 << r) - 1
    w_rho = _canonical_images(rho.parts, r)
    count = 0
    if sigma.size() > r or tau.size() > r:
        return 0
    pairs_b = _class_tuples(tau.parts, r)
    for m1, w1 in _class_tuples(sigma.parts, r):
        for m2, w2 in pairs_b:
            if (m1 | m2) == full and all(w1[w2[i] - 1] == w_rho[i] for i in range(r)):
                count += 1
    return count


def g_table(bound: int) -> dict[tuple[Partition, Partition], dict[Partition, int]]:
    """All expansions for |sigma|, |tau| <= bound, batching shared passes.

    For a fixed enumerated class and target representative, one bucket
    pass serves every cofactor partition at once; this is what makes the
    bound-5 filtration scan cheap.  Results prime the pair cache.
    """
    parts_all = partitions_up_to(bound)

    def cost_key(p: Partition, r: int) -> tuple:
        return (_rep_count(p.parts, r), p.sort_key())

    for enum in parts_all:
        targets = []
        for tau in parts_all:
            key = tuple(sorted((enum.parts, tau.parts)))
            if key in _PAIR_CACHE:
                continue
            r_top = enum.size() + tau.size()
            if cost_key(enum, r_top) <= cost_key(tau, r_top):
                targets.append(tau)
        if not targets:
            continue
        results: dict[Partition, dict[Partition, int]] = {tau: {} for tau in targets}
        r_min = min(max(enum.size(), tau.size()) for tau in targets)
        r_max = max(enum.size() + tau.size() for tau in targets)
        for r in range(r_min, r_max + 1):
            relevant = [tau for tau in targets
                        if max(enum.size(), tau.size()) <= r <= enum.size() + tau.size()]
            if not relevant:
                continue
            reps = _reps_inv(enum.parts, r)
            for rho in enumerate_partitions(r):
                w_rho = _canonical_images(rho.parts, r)
                buckets = _buckets(reps, w_rho, r, True)
                for tau in relevant:
                    g = _g_from_buckets(buckets, r, tau.strip_ones().parts, tau.size())
                    if g:
                        results[tau][rho] = g
        for tau, exp in results.items():
            key = tuple(sorted((enum.parts, tau.parts)))
            _PAIR_CACHE[key] = exp

    table = {}
    for i, a in enumerate(parts_all):
        for b in parts_all[i:]:
            key = tuple(sorted((a.parts, b.parts)))
            table[(Partition(key[0]), Partition(key[1]))] = _PAIR_CACHE[key]
    return table


# ---------------------------------------------------------------------------
# class vectors


class ClassVector:
    """Sparse rational combination of basis partitions.

    `level` is the truncation: when present every key satisfies
    |rho| <= level and the vector lives in A_level; when absent the vector
    is stable (valid in every A_n with n >= the largest key).  Equality
    compares coefficients only.
    """

    __slots__ = ("terms", "level")

    def __init__(self, terms: Mapping[Partition, Coeff], level: int | None = None) -> None:
        self.terms = {p: Fraction(c) for p, c in terms.items() if c}
        self.level = level
        if level is not None:
            for p in self.terms:
                if p.size() > level:
                    raise ValueError(f"|{p}| exceeds truncation level {level}")

    @classmethod
    def unit(cls, level: int | None = None) -> "ClassVector":
        return cls({EMPTY: Fraction(1)}, level)

    @classmethod
    def basis(cls, rho: Partition, level: int | None = None) -> "ClassVector":
        return cls({rho: Fraction(1)}, level)

    def coefficient(self, rho: Partition) -> Fraction:
        return self.terms.get(rho, Fraction(0))

    def support(self) -> list[Partition]:
        return sorted(self.terms, key=Partition.sort_key)

    def items(self) -> list[tuple[Partition, Fraction]]:
        return [(p, self.terms[p]) for p in self.support()]

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "ClassVector") -> "ClassVector":
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, Fraction(0)) + c
        lv = [x for x in (self.level, other.level) if x is not None]
        return ClassVector(out, min(lv) if lv else None)

    def __rmul__(self, scalar: Coeff) -> "ClassVector":
        return ClassVector({p: Fraction(scalar) * c for p, c in self.terms.items()},
                           self.level)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ClassVector) and self.terms == other.terms

    def __repr__(self) -> str:
        body = " + ".join(f"{c} A({p})" for p, c in self.items())
        return f"ClassVector({body or '0'}, level={self.level})"


def multiply(u: ClassVector, v: ClassVector, n: int | None = None) -> ClassVector:
    """Bilinear product via the structure constants, truncated at n if given."""
    levels = [x for x in (n, u.level, v.level) if x is not None]
    eff = min(levels) if levels else None
    out: dict[Partition, Fraction] = {}
    for sigma, cu in u.terms.items():
        for tau, cv in v.terms.items():
            scale = cu * cv
            for rho, g in product_expansion(sigma, tau).items():
                if eff is not None and rho.size() > eff:
                    continue
                out[rho] = out.get(rho, Fraction(0)) + scale * g
    return ClassVector(out, eff)


def f_constant(sigma: Partition, tau: Partition, rho: Partition) -> int:
    """Structure constant in the rescaled basis a_rho = z_rho A_rho."""
    g = g_constant(sigma, tau, rho)
    num = sigma.centralizer_size() * tau.centralizer_size() * g
    den = rho.centralizer_size()
    if num % den:
        raise RuntimeError(
            f"non-integral f constant for {sigma}, {tau} -> {rho}: internal bug")
    return num // den


def product_expansion_a(sigma: Partition, tau: Partition) -> dict[Partition, int]:
    """Expansion of a_sigma a_tau in the a basis (all nonzero f constants)."""
    zz = sigma.centralizer_size() * tau.centralizer_size()
    out = {}
    for rho, g in product_expansion(sigma, tau).items():
        num = zz * g
        den = rho.centralizer_size()
        if num % den:
            raise RuntimeError(
                f"non-integral f constant for {sigma}, {tau} -> {rho}: internal bug")
        out[rho] = num // den
    return out


def psi_image(rho: Partition, n: int) -> tuple[int, Partition]:
    """Image of A_{rho;n} under support forgetting: a binomial times C_{rho;n}."""
    r = rho.size()
    if r > n:
        raise ValueError(f"|rho|={r} exceeds n={n}")
    m1 = rho.multiplicity(1)
    return comb(n - r + m1, m1), rho


# ---------------------------------------------------------------------------
# polynomials in the binomial basis


class BinomialPolynomial:
    """q(n) = sum_k c_k * C(n - |base|, k) with integer coefficients c_k."""

    __slots__ = ("base", "coeffs")

    def __init__(self, base: Partition, coeffs: Iterable[int]) -> None:
        cl = [int(c) for c in coeffs]
        while cl and cl[-1] == 0:
            cl.pop()
        self.base = base
        self.coeffs = tuple(cl)

    def degree(self) -> int:
        """Degree in n; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def evaluate(self, n: int) -> int:
        r = self.base.size()
        if n < r:
            raise ValueError(f"evaluation point {n} below |base|={r}")
        return sum(c * comb(n - r, k) for k, c in enumerate(self.coeffs))

    def monomial_coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients in ascending powers of n (exact rationals)."""
        r = self.base.size()
        total = [Fraction(0)] * (len(self.coeffs) + 1)
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            poly = [Fraction(1)]
            for j in range(k):
                shift = Fraction(r + j)
                new = [Fraction(0)] * (len(poly) + 1)
                for d, a in enumerate(poly):
                    new[d + 1] += a
                    new[d] -= a * shift
                poly = new
            scale = Fraction(c, factorial(k))
            for d, a in enumerate(poly):
                total[d] += scale * a
        while total and not total[-1]:
            total.pop()
        return tuple(total)

    def monomial_string(self, var: str = "n") -> str:
        mc = self.monomial_coeffs()
        if not mc:
            return "0"
        chunks = []
        for d in range(len(mc) - 1, -1, -1):
            c = mc[d]
            if not c:
                continue
            sign = "-" if c < 0 else ("+" if chunks else "")
            c = abs(c)
            p, q = c.numerator, c.denominator
            if d == 0:
                body = str(p) if q == 1 else f"{p}/{q}"
            else:
                vp = var if d == 1 else f"{var}^{d}"
                head = "" if p == 1 else str(p)
                body = f"{head}{vp}" if q == 1 else f"{head}{vp}/{q}"
            chunks.append(sign + body)
        return "".join(chunks)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, BinomialPolynomial)
                and self.base == other.base and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        return f"BinomialPolynomial(base={self.base!r}, coeffs={list(self.coeffs)})"


def q_polynomial(sigma: Partition, tau: Partition, rho: Partition) -> BinomialPolynomial:
    """Coefficient polynomial of C_{rho;n} in C_{sigma;n} * C_{tau;n}.

    All three partitions must be proper; coefficient c_k is the structure
    constant for rho with k unit parts adjoined, k bounded by the support
    inequality.
    """
    for p in (sigma, tau, rho):
        if not p.is_proper():
            raise ValueError(f"partition {p or '()'} has unit parts")
    exp = product_expansion(sigma, tau)
    kmax = sigma.size() + tau.size() - rho.size()
    coeffs = [exp.get(rho.pad(rho.size() + k), 0) for k in range(max(kmax + 1, 0))]
    return BinomialPolynomial(rho, coeffs)


def convolve_C_classes(sigma: Partition, tau: Partition, n: int) -> ClassVector:
    """Convolution of conjugacy classes of S_n in the proper-class basis."""
    if not sigma.is_proper() or not tau.is_proper():
        raise ValueError("inputs must be proper partitions")
    if sigma.size() > n or tau.size() > n:
        raise ValueError(f"class empty in S_{n}")
    grouped: dict[Partition, dict[int, int]] = {}
    for rho, g in product_expansion(sigma, tau).items():
        bar = rho.strip_ones()
        grouped.setdefault(bar, {})[rho.size() - bar.size()] = g
    out: dict[Partition, Fraction] = {}
    for bar, ks in grouped.items():
        if bar.size() > n:
            continue
        val = sum(g * comb(n - bar.size(), k) for k, g in ks.items())
        if val:
            out[bar] = Fraction(val)
    return ClassVector(out, n)


def to_C_basis(v: ClassVector, n: int) -> ClassVector:
    """Rewrite an A-basis vector over the proper-class basis of Z(Q[S_n])."""
    out: dict[Partition, Fraction] = {}
    for rho, c in v.terms.items():
        if rho.size() > n:
            continue
        m1 = rho.multiplicity(1)
        b = comb(n - rho.size() + m1, m1)
        bar = rho.strip_ones()
        out[bar] = out.get(bar, Fraction(0)) + c * b
    return ClassVector(out, n)


# ---------------------------------------------------------------------------
# brute-force convolution oracle


@lru_cache(maxsize=None)
def _full_class_tuples(padded: tuple[int, ...], n: int) -> tuple[tuple[int, ...], ...]:
    rho = Partition(padded)
    return tuple(
        tuple(m[i] for i in range(1, n + 1))
        for m in permutations_of_type(range(1, n + 1), rho))


def oracle_convolve(sigma: Partition, tau: Partition, n: int,
                    bound: int = ORACLE_DEFAULT_BOUND) -> ClassVector:
    """Convolve the psi images by explicit enumeration over S_n.

    Independent of the structure-constant engine: builds both class sums
    as explicit permutation lists, multiplies term by term, buckets the
    result by cycle type, and reads off proper-class coefficients.  Cost
    is the product of the two class sizes, so n is capped.
    """
    if n > bound:
        raise ValueError(
            f"oracle bound exceeded: n={n} > {bound} (cost grows like n! per factor)")
    if sigma.size() > n or tau.size() > n:
        return ClassVector({}, n)
    c1 = _full_class_tuples(sigma.pad(n).parts, n)
    c2 = _full_class_tuples(tau.pad(n).parts, n)
    b1, _ = psi_image(sigma, n)
    b2, _ = psi_image(tau, n)
    conv: dict[tuple[int, ...], int] = {}
    for w1 in c1:
        for w2 in c2:
            w = tuple(w1[x - 1] for x in w2)
            conv[w] = conv.get(w, 0) + 1
    per_type: dict[tuple[int, ...], int] = {}
    hits: dict[tuple[int, ...], int] = {}
    for w, c in conv.items():
        lam = _cycle_type_tuple(w, n)
        if lam in per_type:
            if per_type[lam] != c:
                raise RuntimeError("oracle produced a non-central element")
            hits[lam] += 1
        else:
            per_type[lam] = c
            hits[lam] = 1
    out: dict[Partition, Fraction] = {}
    for lam, c in per_type.items():
        size = factorial(n) // Partition(lam).centralizer_size()
        if hits[lam] != size:
            raise RuntimeError("oracle produced a non-central element")
        bar = Partition(tuple(x for x in lam if x != 1))
        out[bar] = Fraction(b1 * b2 * c)
    return ClassVector(out, n)
