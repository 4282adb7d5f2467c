"""Semistandard Young tableaux and their crystal structure.

The crystal data come from the far-eastern reading (columns right to left,
each column top to bottom) followed by pair cancellation between the letters
i and i+1.  A second, column-scanning implementation of the cancellation is
provided and must induce identical data; the verification suite checks the
two against each other exhaustively at desk scale.

Cells are addressed by 1-based (row, column) pairs throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Sequence

from .core import Partition, ShapeError, Weight, as_partition


class TableauError(ValueError):
    """A filling violates the semistandard conditions."""


class RowOrderError(TableauError):
    """A row is not weakly increasing."""


class ColumnOrderError(TableauError):
    """A column is not strictly increasing."""


class AlphabetError(TableauError):
    """A letter lies outside 1..n."""


@dataclass(frozen=True)
class Tableau:
    """Immutable semistandard tableau; construct via ``validate_tableau``."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def cell(self, r: int, c: int) -> int:
        return self.rows[r - 1][c - 1]

    def compact(self) -> str:
        """Single-line form, rows slash-separated, e.g. ``1,1,2/2``; ``-`` when empty."""
        if not self.rows:
            return "-"
        return "/".join(",".join(str(x) for x in row) for row in self.rows)

    def pretty(self) -> str:
        """Grid form, one row per line."""
        if not self.rows:
            return "(empty)"
        width = max(len(str(x)) for row in self.rows for x in row)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows)

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "shape": list(self.shape), "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Tableau":
        if not isinstance(data, dict) or set(data) != {"n", "shape", "rows"}:
            raise ShapeError("tableau document must have exactly the keys 'n', 'shape' and 'rows'")
        return validate_tableau(data["n"], data["shape"], data["rows"])


def validate_tableau(n: int, shape: Sequence[int], rows: Any) -> Tableau:
    """Validate a filling against a shape and return the tableau.

    Raises ShapeError on a shape/filling mismatch, AlphabetError for letters
    outside 1..n, RowOrderError and ColumnOrderError for ordering violations,
    each reporting the first offending cell.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ShapeError(f"alphabet bound must be a positive integer, got {n!r}")
    shape = as_partition(shape)
    rows = tuple(tuple(r) for r in rows)
    if tuple(len(row) for row in rows) != shape:
        raise ShapeError(f"row lengths {tuple(len(r) for r in rows)} do not match shape {shape}")
    for r, row in enumerate(rows, start=1):
        for c, x in enumerate(row, start=1):
            if not isinstance(x, int) or isinstance(x, bool):
                raise ShapeError(f"letters must be integers, got {x!r} at ({r},{c})")
            if not 1 <= x <= n:
                raise AlphabetError(f"letter {x} at ({r},{c}) outside 1..{n}")
    for r, row in enumerate(rows, start=1):
        for c in range(1, len(row)):
            if row[c - 1] > row[c]:
                raise RowOrderError(f"row {r} decreases at ({r},{c + 1}): {row[c - 1]} > {row[c]}")
    for r in range(1, len(rows)):
        for c in range(1, len(rows[r]) + 1):
            if rows[r - 1][c - 1] >= rows[r][c - 1]:
                raise ColumnOrderError(
                    f"column {c} does not increase at ({r + 1},{c}): {rows[r - 1][c - 1]} >= {rows[r][c - 1]}"
                )
    return Tableau(n, rows)


@dataclass(frozen=True)
class ReadingWord:
    """Letters in far-eastern order with the originating cell of each letter."""

    letters: tuple[int, ...]
    origin: tuple[tuple[int, int], ...]


def far_east_reading(tableau: Tableau) -> ReadingWord:
    """Read columns right to left, each column top to bottom."""
    shape = tableau.shape
    letters: list[int] = []
    origin: list[tuple[int, int]] = []
    width = shape[0] if shape else 0
    for c in range(width, 0, -1):
        for r in range(1, len(shape) + 1):
            if shape[r - 1] >= c:
                letters.append(tableau.cell(r, c))
                origin.append((r, c))
    return ReadingWord(tuple(letters), tuple(origin))


def far_east_inverse(n: int, shape: Partition, letters: Sequence[int]) -> Tableau:
    """Rebuild the tableau of the given shape whose far-eastern reading is ``letters``."""
    shape = as_partition(shape)
    if sum(shape) != len(letters):
        raise ShapeError(f"shape {shape} has {sum(shape)} cells but the word has {len(letters)} letters")
    grid = [[0] * part for part in shape]
    width = shape[0] if shape else 0
    pos = 0
    for c in range(width, 0, -1):
        for r in range(1, len(shape) + 1):
            if shape[r - 1] >= c:
                grid[r - 1][c - 1] = letters[pos]
                pos += 1
    return validate_tableau(n, shape, grid)


def match_positions(letters: Sequence[int], i: int) -> frozenset[int]:
    """Crossed-out 1-based positions of the i-cancellation of a word.

    Single pass: each letter i opens, each letter i+1 closes the most recent
    unmatched opener; matched pairs are crossed out.  Equals the fixpoint of
    repeatedly crossing the rightmost i that still has an i+1 to its right
    together with the leftmost such i+1.
    """
    crossed: set[int] = set()
    stack: list[int] = []
    for pos, letter in enumerate(letters, start=1):
        if letter == i:
            stack.append(pos)
        elif letter == i + 1 and stack:
            crossed.add(stack.pop())
            crossed.add(pos)
    return frozenset(crossed)


@dataclass(frozen=True)
class Bracketing:
    """Result of the i-cancellation on a reading word.

    The uncrossed letters from {i, i+1} always form the subsequence
    (i+1)^eps i^phi of the word.
    """

    word: ReadingWord
    i: int
    crossed: frozenset[int]

    def uncrossed(self, letter: int) -> tuple[int, ...]:
        """Positions (1-based, increasing) of uncrossed occurrences of ``letter``."""
        return tuple(
            pos
            for pos, x in enumerate(self.word.letters, start=1)
            if x == letter and pos not in self.crossed
        )


def bracket_word(word: ReadingWord, i: int) -> Bracketing:
    """The i-cancellation of a reading word."""
    return Bracketing(word, i, match_positions(word.letters, i))


def _check_label(tableau: Tableau, i: int) -> None:
    if not 1 <= i <= tableau.n - 1:
        raise IndexError(f"label {i} out of range 1..{tableau.n - 1}")


def phi_ssyt(tableau: Tableau, i: int) -> int:
    """Number of uncrossed letters i after the i-cancellation."""
    _check_label(tableau, i)
    return len(bracket_word(far_east_reading(tableau), i).uncrossed(i))


def epsilon_ssyt(tableau: Tableau, i: int) -> int:
    """Number of uncrossed letters i+1 after the i-cancellation."""
    _check_label(tableau, i)
    return len(bracket_word(far_east_reading(tableau), i).uncrossed(i + 1))


def _with_cell_changed(tableau: Tableau, r: int, c: int, letter: int) -> Tableau:
    rows = [list(row) for row in tableau.rows]
    rows[r - 1][c - 1] = letter
    try:
        return validate_tableau(tableau.n, tableau.shape, rows)
    except TableauError as exc:
        raise RuntimeError(f"crystal operator produced an invalid tableau at ({r},{c}): {exc}") from exc


def lower_ssyt(tableau: Tableau, i: int) -> Optional[Tableau]:
    """Lowering operator: change the leftmost uncrossed i in the reading word
    to i+1; None when no uncrossed i exists."""
    _check_label(tableau, i)
    word = far_east_reading(tableau)
    spots = bracket_word(word, i).uncrossed(i)
    if not spots:
        return None
    r, c = word.origin[spots[0] - 1]
    return _with_cell_changed(tableau, r, c, i + 1)


def raise_ssyt(tableau: Tableau, i: int) -> Optional[Tableau]:
    """Raising operator: change the rightmost uncrossed i+1 in the reading
    word to i; None when no uncrossed i+1 exists."""
    _check_label(tableau, i)
    word = far_east_reading(tableau)
    spots = bracket_word(word, i).uncrossed(i + 1)
    if not spots:
        return None
    r, c = word.origin[spots[-1] - 1]
    return _with_cell_changed(tableau, r, c, i)


def weight_ssyt(tableau: Tableau) -> Weight:
    """Letter multiplicities as an n-tuple."""
    counts = [0] * tableau.n
    for row in tableau.rows:
        for x in row:
            counts[x - 1] += 1
    return tuple(counts)


def bracket_columns(tableau: Tableau, i: int) -> frozenset[tuple[int, int]]:
    """Crossed cells of the column-scan i-cancellation.

    Scan columns left to right; when a column contains the letter i and some
    unbracketed i+1 sits in the same column or further left, cross that i
    together with the rightmost such i+1.  A column holds at most one of
    each letter, so cells are identified by column position.
    """
    _check_label(tableau, i)
    shape = tableau.shape
    width = shape[0] if shape else 0
    crossed: set[tuple[int, int]] = set()
    open_upper: list[tuple[int, int]] = []  # unbracketed cells holding i+1, ordered by column
    for c in range(1, width + 1):
        cell_i = None
        cell_i1 = None
        for r in range(1, len(shape) + 1):
            if shape[r - 1] >= c:
                if tableau.cell(r, c) == i:
                    cell_i = (r, c)
                elif tableau.cell(r, c) == i + 1:
                    cell_i1 = (r, c)
        if cell_i1 is not None:
            open_upper.append(cell_i1)
        if cell_i is not None and open_upper:
            crossed.add(cell_i)
            crossed.add(open_upper.pop())
    return frozenset(crossed)


def _uncrossed_cells(tableau: Tableau, i: int, letter: int) -> list[tuple[int, int]]:
    crossed = bracket_columns(tableau, i)
    cells = [
        (r, c)
        for r, row in enumerate(tableau.rows, start=1)
        for c, x in enumerate(row, start=1)
        if x == letter and (r, c) not in crossed
    ]
    return sorted(cells, key=lambda cell: cell[1])


def phi_columns(tableau: Tableau, i: int) -> int:
    """Lowering string length from the column-scan cancellation."""
    return len(_uncrossed_cells(tableau, i, i))


def epsilon_columns(tableau: Tableau, i: int) -> int:
    """Raising string length from the column-scan cancellation."""
    return len(_uncrossed_cells(tableau, i, i + 1))


def lower_columns(tableau: Tableau, i: int) -> Optional[Tableau]:
    """Lowering operator from the column-scan cancellation: change the
    rightmost (largest column) unbracketed i to i+1."""
    cells = _uncrossed_cells(tableau, i, i)
    if not cells:
        return None
    r, c = cells[-1]
    return _with_cell_changed(tableau, r, c, i + 1)


def raise_columns(tableau: Tableau, i: int) -> Optional[Tableau]:
    """Raising operator from the column-scan cancellation: change the
    leftmost (smallest column) unbracketed i+1 to i."""
    cells = _uncrossed_cells(tableau, i, i + 1)
    if not cells:
        return None
    r, c = cells[0]
    return _with_cell_changed(tableau, r, c, i)


def highest_weight_tableau(n: int, lam: Partition) -> Tableau:
    """The tableau with every row r filled by the letter r."""
    lam = as_partition(lam)
    if len(lam) > n:
        raise ShapeError(f"shape {lam} has more than {n} rows")
    return validate_tableau(n, lam, tuple((r,) * lam[r - 1] for r in range(1, len(lam) + 1)))


def enumerate_tableaux(n: int, lam: Partition) -> list[Tableau]:
    """All semistandard tableaux of the given shape with letters in 1..n.

    Order: lexicographically increasing on the concatenation of rows read
    top-down, left-to-right.  Cells are filled row-major; each cell ranges
    from the larger of its left neighbor and one more than its upper
    neighbor (also at least its 1-based row index) up to n.
    """
    lam = as_partition(lam)
    if len(lam) > n:
        raise ShapeError(f"shape {lam} has more than {n} rows")
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]
    grid = [[0] * part for part in lam]
    results: list[Tableau] = []

    def fill(k: int) -> None:
        if k == len(cells):
            results.append(Tableau(n, tuple(tuple(row) for row in grid)))
            return
        r, c = cells[k]
        low = r + 1
        if c > 0:
            low = max(low, grid[r][c - 1])
        if r > 0:
            low = max(low, grid[r - 1][c] + 1)
        for value in range(low, n + 1):
            grid[r][c] = value
            fill(k + 1)
        grid[r][c] = 0

    fill(0)
    return results
