"""Loader for the checked-in product tables used by the verify suites.

The fixtures are plain text, one product per line:

    a(3)*a(2) = 1 a(3,2) + 6 a(4) + 6 a(2,1)
    A(2)*A(2) @ 3 = 1 A(1,1) + 3 A(3)
    q C(3)*C(3) -> C(3) = [1,3]

The "@ n" suffix marks a truncated product, the "q" prefix a coefficient
polynomial in the binomial basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .partitions import Partition


@dataclass(frozen=True)
class ProductRow:
    basis: str
    sigma: Partition
    tau: Partition
    truncation: int | None
    terms: dict[Partition, int]


@dataclass(frozen=True)
class PolynomialRow:
    sigma: Partition
    tau: Partition
    rho: Partition
    coeffs: tuple[int, ...]


def _read(name: str) -> list[str]:
    text = resources.files("classconv.data").joinpath(name).read_text()
    return [line.strip() for line in text.splitlines()
            if line.strip() and not line.startswith("#")]


def _parse_labelled(token: str) -> tuple[str, Partition]:
    basis, _, rest = token.partition("(")
    if not rest.endswith(")"):
        raise ValueError(f"malformed basis term {token!r}")
    return basis.strip(), Partition.from_string(rest[:-1])


def _parse_product_line(line: str) -> ProductRow:
    lhs, _, rhs = line.partition("=")
    lhs = lhs.strip()
    truncation = None
    if "@" in lhs:
        lhs, _, level = lhs.partition("@")
        truncation = int(level.strip())
    left, right = lhs.strip().split("*")
    basis, sigma = _parse_labelled(left.strip())
    basis2, tau = _parse_labelled(right.strip())
    if basis != basis2:
        raise ValueError(f"mixed bases in {line!r}")
    terms = {}
    for chunk in rhs.split("+"):
        coeff_text, _, term = chunk.strip().partition(" ")
        tb, rho = _parse_labelled(term.strip())
        if tb != basis:
            raise ValueError(f"mixed bases in {line!r}")
        terms[rho] = int(coeff_text)
    return ProductRow(basis, sigma, tau, truncation, terms)


def _parse_polynomial_line(line: str) -> PolynomialRow:
    head, _, coeff_text = line.partition("=")
    head = head.strip()[1:].strip()
    prod, _, target = head.partition("->")
    left, right = prod.strip().split("*")
    _, sigma = _parse_labelled(left.strip())
    _, tau = _parse_labelled(right.strip())
    _, rho = _parse_labelled(target.strip())
    inner = coeff_text.strip()[1:-1].strip()
    coeffs = tuple(int(t) for t in inner.split(",")) if inner else ()
    return PolynomialRow(sigma, tau, rho, coeffs)


def load_section6() -> list[ProductRow]:
    return [_parse_product_line(line) for line in _read("section6.txt")]


def load_section11_a() -> list[ProductRow]:
    return [_parse_product_line(line) for line in _read("section11_a.txt")]


def load_section11_C() -> tuple[list[ProductRow], list[PolynomialRow]]:
    products, polys = [], []
    for line in _read("section11_C.txt"):
        if line.startswith("q "):
            polys.append(_parse_polynomial_line(line[2:]))
        else:
            products.append(_parse_product_line(line))
    return products, polys
