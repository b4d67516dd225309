"""Partial permutations: pairs (support, bijection of the support onto itself).

The product unites supports and composes the identical extensions, with
the single global convention that the right factor acts first:
(w1 * w2)(x) = w1(w2(x)).  Values are immutable and all operations are
pure, so everything here is safe to use concurrently.
"""

from __future__ import annotations

from itertools import combinations, permutations as _itertools_perms
from typing import Iterable, Iterator, Mapping

from .partitions import Partition


class PartialPermutation:
    """An arbitrary finite support set together with a bijection of it."""

    __slots__ = ("_map", "_key")

    def __init__(self, mapping: Mapping[int, int] | Iterable[tuple[int, int]] = ()) -> None:
        m = dict(mapping)
        for x in m:
            if not isinstance(x, int) or x < 1:
                raise ValueError(f"support points must be positive integers, got {x!r}")
        if set(m.values()) != set(m):
            raise ValueError("mapping is not a bijection of its support")
        self._map = m
        self._key = tuple(sorted(m.items()))

    @classmethod
    def identity(cls, points: Iterable[int]) -> "PartialPermutation":
        return cls({x: x for x in points})

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]],
                    fixed: Iterable[int] = ()) -> "PartialPermutation":
        """Build from a list of cycles plus extra fixed support points."""
        m: dict[int, int] = {x: x for x in fixed}
        seen: set[int] = set()
        for cyc in cycles:
            c = list(cyc)
            if not c:
                continue
            for x in c:
                if x in seen or (x in m and len(c) > 1):
                    raise ValueError(f"point {x} appears in more than one cycle")
            for i, x in enumerate(c):
                m[x] = c[(i + 1) % len(c)]
            seen.update(c)
        return cls(m)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self._map)

    @property
    def degree(self) -> int:
        return len(self._map)

    def __call__(self, x: int) -> int:
        """The identical extension: image of x, fixing points off the support."""
        return self._map.get(x, x)

    def __mul__(self, other: "PartialPermutation") -> "PartialPermutation":
        return product(self, other)

    def inverse(self) -> "PartialPermutation":
        return PartialPermutation({v: k for k, v in self._map.items()})

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycle decomposition on the support, fixed points as singletons.

        Each cycle starts at its smallest element; cycles are sorted by
        smallest element.
        """
        seen: set[int] = set()
        out: list[tuple[int, ...]] = []
        for start in sorted(self._map):
            if start in seen:
                continue
            cyc = [start]
            x = self._map[start]
            while x != start:
                cyc.append(x)
                x = self._map[x]
            seen.update(cyc)
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_type(self) -> Partition:
        return Partition(sorted((len(c) for c in self.cycles()), reverse=True))

    def conjugate(self, v: "PartialPermutation") -> "PartialPermutation":
        """Relabel by a permutation v of {1..n}: (d, w) -> (v d, v w v^-1)."""
        if not self.support <= v.support:
            raise ValueError("conjugating permutation does not cover the support")
        return PartialPermutation({v(x): v(y) for x, y in self._map.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PartialPermutation) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"PartialPermutation({self._map!r})"

    def __str__(self) -> str:
        sup = "{" + ",".join(str(x) for x in sorted(self._map)) + "}"
        cyc = "".join("(" + ",".join(str(x) for x in c) + ")" for c in self.cycles())
        return sup + ":" + cyc

    @classmethod
    def from_string(cls, text: str) -> "PartialPermutation":
        """Parse the "{1,3,5}:(1,3)(5)" form."""
        text = text.strip()
        if ":" not in text or not text.startswith("{"):
            raise ValueError(f"malformed partial permutation {text!r}")
        sup_text, _, cyc_text = text.partition(":")
        sup_text = sup_text.strip()[1:-1].strip()
        support = {int(t) for t in sup_text.split(",")} if sup_text else set()
        cycles = []
        rest = cyc_text.strip()
        while rest:
            if not rest.startswith("("):
                raise ValueError(f"malformed cycle list {cyc_text!r}")
            close = rest.index(")")
            inner = rest[1:close].strip()
            if inner:
                cycles.append([int(t) for t in inner.split(",")])
            rest = rest[close + 1:].strip()
        pp = cls.from_cycles(cycles)
        if pp.support != frozenset(support):
            raise ValueError("support does not match the cycle decomposition")
        return pp


def product(a: PartialPermutation, b: PartialPermutation) -> PartialPermutation:
    """(d1 u d2, w1 w2) with the right factor applied first."""
    sup = a.support | b.support
    return PartialPermutation({x: a(b(x)) for x in sup})


def cycle_type(a: PartialPermutation) -> Partition:
    return a.cycle_type()


def conjugate(a: PartialPermutation, v: PartialPermutation) -> PartialPermutation:
    return a.conjugate(v)


def canonical_rep(rho: Partition) -> PartialPermutation:
    """The fixed representative on {1..|rho|} with consecutive cycles."""
    m: dict[int, int] = {}
    start = 1
    for part in rho:
        for i in range(part):
            m[start + i] = start + (i + 1) % part
        start += part
    return PartialPermutation(m)


def permutations_of_type(points: Iterable[int], rho: Partition) -> Iterator[dict[int, int]]:
    """All bijections of `points` with cycle type rho, as point->image dicts.

    The point set must have exactly |rho| elements; each permutation is
    produced exactly once (the smallest unused point anchors each cycle).
    """
    pts = tuple(sorted(points))
    if len(pts) != rho.size():
        raise ValueError("support size does not match the partition")
    mult: dict[int, int] = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1

    def gen(remaining: tuple[int, ...], mult: dict[int, int]) -> Iterator[dict[int, int]]:
        if not remaining:
            yield {}
            return
        x = remaining[0]
        rest = remaining[1:]
        for k in list(mult):
            if mult[k] == 0:
                continue
            mult[k] -= 1
            for others in _itertools_perms(rest, k - 1):
                cyc = (x,) + others
                head = {cyc[i]: cyc[(i + 1) % k] for i in range(k)}
                left = tuple(p for p in rest if p not in head)
                for tail in gen(left, mult):
                    tail.update(head)
                    yield tail
            mult[k] += 1

    return gen(pts, mult)


def enumerate_class(rho: Partition, n: int) -> Iterator[PartialPermutation]:
    """All partial permutations in P_n with support size |rho| and type rho."""
    r = rho.size()
    if r > n:
        return
    for d in combinations(range(1, n + 1), r):
        for m in permutations_of_type(d, rho):
            yield PartialPermutation(m)


def enumerate_semigroup(n: int) -> Iterator[PartialPermutation]:
    """Every element of P_n: all supports, all bijections."""
    for k in range(n + 1):
        for d in combinations(range(1, n + 1), k):
            for images in _itertools_perms(d):
                yield PartialPermutation(dict(zip(d, images)))


def semigroup_size(n: int) -> int:
    """|P_n| = sum_k C(n,k) k!, via the recurrence s_n = n s_{n-1} + 1."""
    s = 1
    for k in range(1, n + 1):
        s = k * s + 1
    return s
