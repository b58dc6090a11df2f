"""Polynomials - exact Laurent polynomials in q with integer coefficients."""

from collections.abc import Iterable, Mapping
from functools import lru_cache

import msgspec


class LaurentPolynomial(msgspec.Struct, frozen=True):
    """Σ c_e q^e stored as (e, c) pairs, e ascending, no zero coefficients."""

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        exponents = [e for e, _ in self.terms]
        if exponents != sorted(set(exponents)):
            raise ValueError("exponents must be sorted and unique")
        if any(c == 0 for _, c in self.terms):
            raise ValueError("zero coefficients are not stored")

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "LaurentPolynomial":
        return cls(tuple((e, c) for e, c in sorted(mapping.items()) if c))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls.from_mapping({exponent: coefficient})

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls(((0, 1),))

    @classmethod
    def sum_of_powers(cls, exponents: Iterable[int]) -> "LaurentPolynomial":
        """Σ q^e over ``exponents``, repeats accumulating."""
        tally: dict[int, int] = {}
        for exponent in exponents:
            tally[exponent] = tally.get(exponent, 0) + 1
        return cls.from_mapping(tally)

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def coefficient(self, exponent: int) -> int:
        return self.as_dict().get(exponent, 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        total = self.as_dict()
        for e, c in other.terms:
            total[e] = total.get(e, 0) + c
        return LaurentPolynomial.from_mapping(total)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial.from_mapping({e: c * other for e, c in self.terms})
        product: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial.from_mapping(product)

    __rmul__ = __mul__

    def shift(self, exponent: int) -> "LaurentPolynomial":
        """Multiply by q^exponent."""
        return LaurentPolynomial(tuple((e + exponent, c) for e, c in self.terms))

    def at_one(self) -> int:
        return sum(c for _, c in self.terms)

    def lines(self) -> list[str]:
        """Terms as "q^e: c" lines, e ascending."""
        return [f"q^{e}: {c}" for e, c in self.terms]


@lru_cache(maxsize=4096)
def _gaussian(top: int, bottom: int) -> LaurentPolynomial:
    if bottom < 0 or bottom > top:
        return LaurentPolynomial.zero()
    if bottom in (0, top):
        return LaurentPolynomial.one()
    # q-Pascal: [N, k] = [N-1, k-1] + q^k [N-1, k]
    return _gaussian(top - 1, bottom - 1) + _gaussian(top - 1, bottom).shift(bottom)


def q_binomial(m: int, p: int) -> LaurentPolynomial:
    """[m + p choose m]_q, the generating function of partitions in an m × p box.

    Zero when p < 0 and m > 0; one when m = 0.
    """
    if m < 0:
        raise ValueError(f"part count must be nonnegative, got {m}")
    if m == 0:
        return LaurentPolynomial.one()
    if p < 0:
        return LaurentPolynomial.zero()
    return _gaussian(m + p, m)
