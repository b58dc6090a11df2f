"""Paths - type-A Kirillov-Reshetikhin crystals as rectangular tableaux.

B^{r,s} of A_{n-1} is the set of r × s semistandard tableaux with entries in {1..n}.
A tensor path b_k ⊗ ... ⊗ b_1 is read as one word: each factor row by row from the
bottom row up, left to right, factors in written order. For color a the letters a and
a+1 become + and -; adjacent "- +" pairs cancel until the word reads + ... + - ... -.
f_a turns the rightmost surviving + into a+1, e_a the leftmost surviving - into a.

With this convention 121 -f_1-> 221 and 121 -f_2-> 131 in (B^{1,1})^{⊗3}.
"""

import itertools
import logging
from collections.abc import Iterator

import msgspec

from rigged_app.algebra import Weight
from rigged_app.crystal import CrystalGraph, closure_graph

logger = logging.getLogger(__name__)


class RectTableau(msgspec.Struct, frozen=True, order=True):
    """Rows of a semistandard rectangular tableau."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise ValueError("tableau must have at least one box")
        width = len(self.rows[0])
        if any(len(row) != width for row in self.rows):
            raise ValueError(f"rows {self.rows} do not form a rectangle")
        for row in self.rows:
            if any(left > right for left, right in itertools.pairwise(row)):
                raise ValueError(f"row {row} is not weakly increasing")
        for upper, lower in itertools.pairwise(self.rows):
            if any(top >= bottom for top, bottom in zip(upper, lower, strict=True)):
                raise ValueError(f"columns of {self.rows} are not strictly increasing")

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def s(self) -> int:
        return len(self.rows[0])

    def reading_word(self) -> list[int]:
        return [entry for row in reversed(self.rows) for entry in row]

    def positions(self) -> list[tuple[int, int]]:
        """(row, column) of each reading-word letter."""
        return [(r, c) for r in range(self.r - 1, -1, -1) for c in range(self.s)]

    def label(self) -> str:
        return "/".join("".join(str(x) for x in row) for row in self.rows)


class TensorPath(msgspec.Struct, frozen=True, order=True):
    """Factors in written order b_k ⊗ ... ⊗ b_1."""

    factors: tuple[RectTableau, ...]

    def reading_word(self) -> list[int]:
        return [x for factor in self.factors for x in factor.reading_word()]

    def label(self) -> str:
        if all(f.r == 1 and f.s == 1 for f in self.factors):
            return "".join(str(f.rows[0][0]) for f in self.factors)
        return " ⊗ ".join(f.label() for f in self.factors)

    def content(self, n: int) -> tuple[int, ...]:
        word = self.reading_word()
        return tuple(word.count(letter) for letter in range(1, n + 1))

    def _replace(self, index: int, letter: int) -> "TensorPath":
        for number, factor in enumerate(self.factors):
            size = factor.r * factor.s
            if index < size:
                row, col = factor.positions()[index]
                rows = [list(r) for r in factor.rows]
                rows[row][col] = letter
                changed = RectTableau(tuple(tuple(r) for r in rows))
                return TensorPath(self.factors[:number] + (changed,) + self.factors[number + 1 :])
            index -= size
        raise IndexError(index)


# ============================================
# Signature rule
# ============================================


def _signature(word: list[int], a: int) -> tuple[list[int], list[int]]:
    """Positions of uncanceled + and uncanceled - letters."""
    pluses: list[int] = []
    minuses: list[int] = []
    for position, letter in enumerate(word):
        if letter == a + 1:
            minuses.append(position)
        elif letter == a:
            if minuses:
                minuses.pop()
            else:
                pluses.append(position)
    return pluses, minuses


def path_phi(b: TensorPath, a: int) -> int:
    return len(_signature(b.reading_word(), a)[0])


def path_eps(b: TensorPath, a: int) -> int:
    return len(_signature(b.reading_word(), a)[1])


def path_f(b: TensorPath, a: int) -> TensorPath | None:
    pluses, _ = _signature(b.reading_word(), a)
    if not pluses:
        return None
    return b._replace(pluses[-1], a + 1)


def path_e(b: TensorPath, a: int) -> TensorPath | None:
    _, minuses = _signature(b.reading_word(), a)
    if not minuses:
        return None
    return b._replace(minuses[0], a)


def path_weight(b: TensorPath, n: int) -> Weight:
    """Fundamental-weight coordinates of the content: μ_a = c_a - c_{a+1}."""
    content = b.content(n)
    return Weight(tuple(content[a] - content[a + 1] for a in range(n - 1)))


# ============================================
# Enumeration
# ============================================


def _fillings(shape: tuple[int, ...], n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard fillings of ``shape`` with entries <= n, by backtracking cell by cell."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]

    def place(index: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if index == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[index]
        low = 1
        if c > 0:
            low = max(low, grid[r][c - 1])
        if r > 0:
            low = max(low, grid[r - 1][c] + 1)
        for value in range(low, n + 1):
            grid[r][c] = value
            yield from place(index + 1)
        grid[r][c] = 0

    yield from place(0)


def ssyt_count(shape: tuple[int, ...], n: int) -> int:
    """Number of semistandard tableaux of ``shape`` with entries in {1..n}."""
    shape = tuple(part for part in shape if part)
    if len(shape) > n:
        return 0
    return sum(1 for _ in _fillings(shape, n))


def kr_vertices(r: int, s: int, n: int) -> list[RectTableau]:
    """B^{r,s} of A_{n-1}: every r × s semistandard tableau."""
    if not 1 <= r <= n - 1:
        raise ValueError(f"row count {r} out of range 1..{n - 1}")
    if s < 1:
        raise ValueError(f"width must be positive, got {s}")
    return [RectTableau(rows) for rows in _fillings((s,) * r, n)]


def enumerate_paths(
    factors: list[tuple[int, int]], lam: tuple[int, ...] | None, n: int
) -> list[TensorPath]:
    """P(B, λ) for B = ⊗ B^{r,s} over ``factors``; every path when ``lam`` is None."""
    choices = [kr_vertices(r, s, n) for r, s in factors]
    paths = []
    for combo in itertools.product(*choices):
        path = TensorPath(tuple(combo))
        if lam is None or path.content(n) == tuple(lam):
            paths.append(path)
    return paths


def highest_weight_paths(factors: list[tuple[int, int]], n: int) -> list[TensorPath]:
    return [
        b
        for b in enumerate_paths(factors, None, n)
        if all(path_e(b, a) is None for a in range(1, n))
    ]


def path_component(seed: TensorPath, n: int, *, limit: int | None = None) -> CrystalGraph:
    """Closure of ``seed`` under path_e and path_f, vertices weighted."""
    return closure_graph(
        [seed],
        range(1, n),
        path_f,
        path_e,
        annotate=lambda b: (path_weight(b, n), None),
        limit=limit,
    )


def shape_of(weight: Weight) -> tuple[int, ...]:
    """Partition with λ_k - λ_{k+1} = μ_k and last part 0."""
    parts = [sum(weight.coords[k:]) for k in range(len(weight.coords))]
    return tuple(part for part in parts if part)
