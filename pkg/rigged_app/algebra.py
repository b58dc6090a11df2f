"""Algebra - Cartan data and weights for simply-laced types.

Node labels are 1-based throughout.

    A_n  chain 1 - 2 - ... - n
    D_n  chain 1 - 2 - ... - (n-2), with the fork nodes n-1 and n both attached to n-2
    E_n  Bourbaki labeling: chain 1 - 3 - 4 - 5 - ... - n, with node 2 attached to 4
"""

from functools import lru_cache

import msgspec
import sympy

FAMILIES = ("A", "D", "E")


@lru_cache(maxsize=64)
def _edges(family: str, rank: int) -> frozenset[tuple[int, int]]:
    if family == "A":
        return frozenset((a, a + 1) for a in range(1, rank))
    if family == "D":
        chain = {(a, a + 1) for a in range(1, rank - 2)}
        return frozenset(chain | {(rank - 2, rank - 1), (rank - 2, rank)})
    chain = {(1, 3)} | {(a, a + 1) for a in range(3, rank)}
    return frozenset(chain | {(2, 4)})


@lru_cache(maxsize=64)
def _cartan(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    edges = _edges(family, rank)
    rows = []
    for a in range(1, rank + 1):
        row = []
        for b in range(1, rank + 1):
            if a == b:
                row.append(2)
            elif (a, b) in edges or (b, a) in edges:
                row.append(-1)
            else:
                row.append(0)
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=64)
def _cartan_inverse(family: str, rank: int) -> sympy.Matrix:
    return sympy.Matrix(_cartan(family, rank)).inv()


class AlgebraData(msgspec.Struct, frozen=True):
    """A simply-laced finite type ``family`` of rank ``rank``."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unsupported family {self.family!r}, expected one of {FAMILIES}")
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        if self.family == "D" and self.rank < 4:
            raise ValueError(f"type D needs rank >= 4, got {self.rank}")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise ValueError(f"type E needs rank 6, 7 or 8, got {self.rank}")

    def __str__(self) -> str:
        return f"{self.family}_{self.rank}"

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    @property
    def is_type_a(self) -> bool:
        return self.family == "A"

    @property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        return _cartan(self.family, self.rank)

    @property
    def cartan_inverse(self) -> sympy.Matrix:
        """Exact rational inverse of the Cartan matrix."""
        return _cartan_inverse(self.family, self.rank)

    def pairing(self, a: int, b: int) -> int:
        """(α_a | α_b), the Cartan matrix entry A_ab."""
        return _cartan(self.family, self.rank)[a - 1][b - 1]

    def neighbors(self, a: int) -> tuple[int, ...]:
        return tuple(b for b in self.nodes if b != a and self.pairing(a, b))

    def check_node(self, a: int) -> None:
        if not 1 <= a <= self.rank:
            raise ValueError(f"node {a} is not a node of {self}")


def cartan_matrix(alg: AlgebraData) -> tuple[tuple[int, ...], ...]:
    """Return the Cartan matrix of ``alg`` as a tuple of rows."""
    return alg.cartan


class Weight(msgspec.Struct, frozen=True, order=True):
    """Λ = Σ μ_a Λ_a stored as its fundamental-weight coordinates (μ_1, ..., μ_n)."""

    coords: tuple[int, ...]

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def of(cls, *coords: int) -> "Weight":
        return cls(tuple(int(c) for c in coords))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def __add__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(x + y for x, y in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(x - y for x, y in zip(self.coords, other.coords, strict=True)))

    def _check_rank(self, other: "Weight") -> None:
        if len(self.coords) != len(other.coords):
            raise ValueError(f"weights of different rank: {self} and {other}")

    def pairing(self, a: int) -> int:
        """⟨h_a, Λ⟩."""
        return self.coords[a - 1]

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)


def simple_root(alg: AlgebraData, a: int) -> Weight:
    """α_a in fundamental-weight coordinates, the a-th column of the Cartan matrix."""
    alg.check_node(a)
    return Weight(tuple(alg.pairing(b, a) for b in alg.nodes))


def highest_root(alg: AlgebraData) -> Weight:
    """θ = α_1 + ... + α_n for type A."""
    if not alg.is_type_a:
        raise ValueError(f"highest_root is only provided for type A, got {alg}")
    total = Weight.zero(alg.rank)
    for a in alg.nodes:
        total = total + simple_root(alg, a)
    return total


def reflect_weight(alg: AlgebraData, weight: Weight, a: int) -> Weight:
    """s_a(Λ) = Λ - ⟨h_a, Λ⟩ α_a."""
    root = simple_root(alg, a)
    shift = weight.pairing(a)
    return Weight(tuple(c - shift * r for c, r in zip(weight.coords, root.coords, strict=True)))


class TypeATuple(msgspec.Struct, frozen=True):
    """λ = (λ_1, ..., λ_n) for the ambient type A_{n-1}.

    Tuples that differ by a constant shift give the same Weight, so the tuple is
    carried explicitly wherever the lower-bound tableaux depend on it.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) < 2:
            raise ValueError(f"type-A tuple needs at least two entries, got {self.values}")
        if any(v < 0 for v in self.values):
            raise ValueError(f"type-A tuple entries must be nonnegative, got {self.values}")

    @classmethod
    def of(cls, *values: int) -> "TypeATuple":
        return cls(tuple(int(v) for v in values))

    @classmethod
    def from_weight(cls, weight: Weight, total: int) -> "TypeATuple":
        """The tuple with entry sum ``total`` and differences λ_a - λ_{a+1} = μ_a."""
        n = len(weight.coords) + 1
        # Σλ = n·λ_n + Σ_b b·μ_b
        offset = total - sum(b * mu for b, mu in enumerate(weight.coords, start=1))
        if offset % n:
            raise ValueError(f"weight {weight} is not reachable with {total} boxes")
        last = offset // n
        values = [last]
        for mu in reversed(weight.coords):
            values.append(values[-1] + mu)
        values.reverse()
        if any(v < 0 for v in values):
            raise ValueError(f"weight {weight} with {total} boxes gives negative entries {values}")
        return cls(tuple(values))

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def algebra(self) -> AlgebraData:
        return AlgebraData("A", self.n - 1)

    @property
    def total(self) -> int:
        return sum(self.values)

    def to_weight(self) -> Weight:
        return Weight(tuple(self.values[a] - self.values[a + 1] for a in range(self.n - 1)))

    def column_lengths(self) -> tuple[int, ...]:
        """(c_0, c_1, ..., c_{n-1}) with c_k = λ_{k+1} + ... + λ_n and c_0 := c_1."""
        tails = [sum(self.values[k:]) for k in range(1, self.n)]
        return (tails[0], *tails)

    def rotate(self) -> "TypeATuple":
        """(λ_n, λ_1, ..., λ_{n-1})."""
        return TypeATuple((self.values[-1], *self.values[:-1]))

    def rotate_back(self) -> "TypeATuple":
        """(λ_2, ..., λ_n, λ_1)."""
        return TypeATuple((*self.values[1:], self.values[0]))

    def check_matches(self, weight: Weight, total: int | None = None) -> None:
        if self.to_weight() != weight:
            raise ValueError(f"λ={self} corresponds to {self.to_weight()}, not {weight}")
        if total is not None and self.total != total:
            raise ValueError(f"λ={self} has {self.total} boxes, expected {total}")
