"""Degree functions on the class algebra and filtration verification.

A degree function theta is a filtration when theta(rho) never exceeds
theta(sigma) + theta(tau) on triples with nonzero structure constant.
The additive ones are determined by their values gamma_k on one-cycle
partitions; this module evaluates the standard examples, scans computed
structure constants for violations, checks the numbered gamma
inequalities, and reports the finite-K proxy for the limit ratio.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .class_algebra import g_table
from .partitions import Partition

FILTRATION_DEFAULT_MAX_BOUND = 5


class DegreeFunction:
    """One of the supported degree rules on partitions."""

    __slots__ = ("kind", "J", "gamma")

    def __init__(self, kind: str, J: frozenset[int] | None = None,
                 gamma: tuple[int, ...] | None = None) -> None:
        self.kind = kind
        self.J = J
        self.gamma = gamma

    @classmethod
    def deg1(cls) -> "DegreeFunction":
        """Size of the partition."""
        return cls("deg1")

    @classmethod
    def deg2(cls) -> "DegreeFunction":
        """Size plus the number of unit parts."""
        return cls("deg2")

    @classmethod
    def deg3(cls) -> "DegreeFunction":
        """Cayley length: size minus number of parts."""
        return cls("deg3")

    @classmethod
    def theta_J(cls, J) -> "DegreeFunction":
        """Size plus the multiplicities of part lengths in J."""
        return cls("theta_J", J=frozenset(int(k) for k in J))

    @classmethod
    def additive(cls, gamma: Sequence[int]) -> "DegreeFunction":
        """theta(rho) = sum_k gamma_k m_k(rho) with gamma_k = gamma[k-1]."""
        return cls("additive", gamma=tuple(int(g) for g in gamma))

    def __call__(self, rho: Partition) -> int:
        if self.kind == "deg1":
            return rho.size()
        if self.kind == "deg2":
            return rho.size() + rho.multiplicity(1)
        if self.kind == "deg3":
            return rho.size() - rho.length()
        if self.kind == "theta_J":
            return rho.size() + sum(1 for part in rho if part in self.J)
        if self.kind == "additive":
            total = 0
            for part in rho:
                if part > len(self.gamma):
                    raise ValueError(
                        f"gamma list too short: need index {part}, have {len(self.gamma)}")
                total += self.gamma[part - 1]
            return total
        raise ValueError(f"unknown degree kind {self.kind!r}")

    def label(self) -> str:
        if self.kind == "theta_J":
            return "theta_J{" + ",".join(str(k) for k in sorted(self.J)) + "}"
        if self.kind == "additive":
            return "additive(" + ",".join(str(g) for g in self.gamma) + ")"
        return self.kind

    def __repr__(self) -> str:
        return f"DegreeFunction({self.label()})"


def degree(theta: DegreeFunction, rho: Partition) -> int:
    return theta(rho)


@dataclass(frozen=True)
class Violation:
    sigma: Partition
    tau: Partition
    rho: Partition
    theta_rho: int
    theta_bound: int

    def line(self) -> str:
        return (f"sigma={self.sigma} tau={self.tau} rho={self.rho} "
                f"theta_rho={self.theta_rho} bound={self.theta_bound}")


def check_filtration(theta: DegreeFunction, bound: int = 5, *,
                     max_bound: int = FILTRATION_DEFAULT_MAX_BOUND,
                     allow_large: bool = False) -> list[Violation]:
    """Scan all sigma, tau up to the size bound for filtration violations.

    Consumes the cached structure-constant table; every rho with a nonzero
    constant is tested against theta(sigma) + theta(tau).
    """
    if bound > max_bound and not allow_large:
        raise ValueError(
            f"scan bound {bound} exceeds configured maximum {max_bound}; "
            "pass allow_large to override")
    out = []
    for (sigma, tau), expansion in sorted(
            g_table(bound).items(),
            key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key())):
        cap = theta(sigma) + theta(tau)
        for rho in sorted(expansion, key=Partition.sort_key):
            t = theta(rho)
            if t > cap:
                out.append(Violation(sigma, tau, rho, t, cap))
    return out


def render_report(violations: list[Violation]) -> list[str]:
    lines = [v.line() for v in violations]
    lines.append(f"violations: {len(violations)}")
    return lines


@dataclass(frozen=True)
class GammaViolation:
    rule: str
    indices: tuple[int, ...]
    lhs: int
    rhs: int

    def line(self) -> str:
        idx = ",".join(str(i) for i in self.indices)
        return f"rule {self.rule} at ({idx}): {self.lhs} > {self.rhs}"


def check_gamma_inequalities(gamma: Sequence[int], K: int) -> list[GammaViolation]:
    """Check the numbered inequality families on gamma_1..gamma_K.

    Rules: monotonicity and nonnegativity; the two-cycle splitting bound
    gamma_{i+j+1} <= gamma_{i+1} + gamma_{j+1}; the inverse-cycle bound
    k gamma_1 <= 2 gamma_k; the transposition-chain bound
    gamma_{k+1} <= k gamma_2; and its doubling special case
    gamma_{2k+1} <= 2 gamma_{k+1}.
    """
    g = [int(x) for x in gamma]
    if len(g) < K:
        raise ValueError(f"need at least K={K} entries, got {len(g)}")

    def gam(k: int) -> int:
        return g[k - 1]

    out = []
    if gam(1) < 0:
        out.append(GammaViolation("nonneg", (1,), 0, gam(1)))
    for k in range(1, K):
        if gam(k) > gam(k + 1):
            out.append(GammaViolation("monotone", (k,), gam(k), gam(k + 1)))
    for i in range(0, K):
        for j in range(0, K):
            if i + j + 1 > K or i + 1 > K or j + 1 > K:
                continue
            if gam(i + j + 1) > gam(i + 1) + gam(j + 1):
                out.append(GammaViolation("split", (i, j),
                                          gam(i + j + 1), gam(i + 1) + gam(j + 1)))
    for k in range(1, K + 1):
        if k * gam(1) > 2 * gam(k):
            out.append(GammaViolation("inverse", (k,), k * gam(1), 2 * gam(k)))
    for k in range(1, K):
        if gam(k + 1) > k * gam(2):
            out.append(GammaViolation("chain", (k,), gam(k + 1), k * gam(2)))
    for k in range(1, (K - 1) // 2 + 1):
        if gam(2 * k + 1) > 2 * gam(k + 1):
            out.append(GammaViolation("double", (k,), gam(2 * k + 1), 2 * gam(k + 1)))
    return out


def limit_ratio(gamma: Sequence[int], K: int) -> Fraction:
    """Finite-K proxy min_{k<=K} gamma_{k+1}/k for the limit ratio.

    Only a proxy: the true quantity is the infimum over all k, which this
    artifact never claims to reach.
    """
    g = [int(x) for x in gamma]
    if K < 1:
        raise ValueError("K must be at least 1")
    if len(g) < K + 1:
        raise ValueError(f"need at least K+1={K + 1} entries, got {len(g)}")
    return min(Fraction(g[k], k) for k in range(1, K + 1))


def gamma_deg1(length: int) -> tuple[int, ...]:
    """gamma_k = k."""
    return tuple(range(1, length + 1))


def gamma_deg2(length: int) -> tuple[int, ...]:
    """gamma_1 = 2, gamma_k = k for k >= 2."""
    return (2,) + tuple(range(2, length + 1))


def gamma_deg3(length: int) -> tuple[int, ...]:
    """gamma_k = k - 1."""
    return tuple(range(length))
