"""The natural bijection between patterns and tableaux.

A pattern maps to the tableau obtained by filling, for each letter i, the
skew cells between the shapes of rows i-1 and i with the letter i.  The
inverse records the shape left after deleting letters larger than i, padded
with zeros to i entries.
"""

from __future__ import annotations

from .core import skew_cells
from .gtpattern import GTPattern, validate_pattern
from .ssyt import Tableau, validate_tableau


def pattern_to_tableau(pattern: GTPattern) -> Tableau:
    """Fill skew layers bottom-up: letter i occupies the cells row i adds over row i-1."""
    n = pattern.n
    grid: list[list[int]] = []
    for i in range(1, n + 1):
        outer = tuple(pattern.entry(i, k) for k in range(1, i + 1))
        inner = tuple(pattern.entry(i - 1, k) for k in range(1, i))
        for r, _c in skew_cells(outer, inner).cells:
            while len(grid) < r:
                grid.append([])
            grid[r - 1].append(i)
    try:
        return validate_tableau(n, tuple(len(row) for row in grid), grid)
    except ValueError as exc:
        raise RuntimeError(f"bijection produced an invalid tableau: {exc}") from exc


def tableau_to_pattern(tableau: Tableau) -> GTPattern:
    """Row i of the pattern is the shape of the letters at most i, padded to i entries.

    Rows weakly increase, so the count per row is a prefix length.
    """
    n = tableau.n
    rows = []
    for i in range(n, 0, -1):
        shape_i = [sum(1 for x in row if x <= i) for row in tableau.rows]
        shape_i = [count for count in shape_i if count > 0]
        rows.append(tuple(shape_i) + (0,) * (i - len(shape_i)))
    return validate_pattern(n, rows)


def letter_count_in_row(pattern: GTPattern, i: int, k: int) -> int:
    """Multiplicity of the letter i in row k of the corresponding tableau:
    entry(i, k) - entry(i-1, k)."""
    if not 1 <= i <= pattern.n:
        raise IndexError(f"letter {i} out of range 1..{pattern.n}")
    if not 1 <= k <= pattern.n:
        raise IndexError(f"row {k} out of range 1..{pattern.n}")
    return pattern.entry(i, k) - pattern.entry(i - 1, k)
