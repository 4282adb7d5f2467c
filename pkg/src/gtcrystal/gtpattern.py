"""Gelfand-Tsetlin patterns and their closed-form crystal data.

A pattern with n rows is a triangular array of non-negative integers where
row i has i entries and consecutive rows interleave.  The crystal data
(weight, string lengths, raising and lowering operators) are computed from
max-plus expressions in the pattern entries: signed sums around diamonds of
four adjacent entries, partial sums of those, and maxima of the partial sums.

Indexing convention used everywhere in this package: ``entry(i, j)`` is the
j-th entry of the row with i entries, both 1-based, and reads 0 whenever
(i, j) falls outside the triangle.  Internally rows are stored in display
order (``rows[0]`` is the n-entry top row), which is private to this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Any, Optional

from .core import Partition, ShapeError, Weight, as_partition, pad


class NonNegativityError(ValueError):
    """A pattern entry is negative."""


class InterleaveError(ValueError):
    """Two consecutive pattern rows fail to interleave."""

    def __init__(self, i: int, j: int, message: str):
        super().__init__(message)
        self.i = i
        self.j = j


@dataclass(frozen=True)
class GTPattern:
    """Immutable Gelfand-Tsetlin pattern; construct via ``validate_pattern``."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        """Entry j of row i (1-based); 0 outside the triangle 1 <= j <= i <= n."""
        if 1 <= j <= i <= self.n:
            return self.rows[self.n - i][j - 1]
        return 0

    def row(self, i: int) -> tuple[int, ...]:
        """Row i as a tuple of i entries, 1 <= i <= n."""
        if not 1 <= i <= self.n:
            raise IndexError(f"row index {i} out of range 1..{self.n}")
        return self.rows[self.n - i]

    @property
    def top_row(self) -> Partition:
        """The fixed top row as a canonical partition."""
        return as_partition(self.rows[0])

    def row_sum(self, i: int) -> int:
        """Sum of row i; 0 for i = 0."""
        if i == 0:
            return 0
        return sum(self.row(i))

    def compact(self) -> str:
        """Single-line form, rows top-down and slash-separated, e.g. ``3,1,0/3,1/2``."""
        return "/".join(",".join(str(x) for x in row) for row in self.rows)

    def pretty(self) -> str:
        """Multi-line centered triangle, rows top-down."""
        width = max(len(str(x)) for row in self.rows for x in row)
        sep = " " * (width + 2)
        lines = []
        for k, row in enumerate(self.rows):
            indent = " " * (k * (width + 1))
            lines.append(indent + sep.join(str(x).rjust(width) for x in row))
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "GTPattern":
        if not isinstance(data, dict) or set(data) != {"n", "rows"}:
            raise ShapeError("pattern document must have exactly the keys 'n' and 'rows'")
        return validate_pattern(data["n"], data["rows"])


def validate_pattern(n: int, rows: Any) -> GTPattern:
    """Validate a triangular array (rows top-down) and return the pattern.

    Errors identify the first violation, scanning row pairs top-down and
    positions left to right: a malformed triangle raises ShapeError, a
    negative entry NonNegativityError, and a broken interleaving inequality
    InterleaveError carrying the (i, j) coordinates of the offending entry.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ShapeError(f"row count must be a positive integer, got {n!r}")
    rows = tuple(tuple(r) for r in rows)
    if len(rows) != n:
        raise ShapeError(f"expected {n} rows, got {len(rows)}")
    for k, row in enumerate(rows):
        if len(row) != n - k:
            raise ShapeError(f"row with {n - k} slots has {len(row)} entries")
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ShapeError(f"entries must be integers, got {x!r}")
    pattern = GTPattern(n, rows)
    for i in range(n, 0, -1):
        for j in range(1, i + 1):
            if pattern.entry(i, j) < 0:
                raise NonNegativityError(f"entry ({i},{j}) = {pattern.entry(i, j)} is negative")
    for i in range(n - 1, 0, -1):
        for j in range(1, i + 1):
            upper = pattern.entry(i + 1, j)
            mid = pattern.entry(i, j)
            lower = pattern.entry(i + 1, j + 1)
            if mid > upper:
                raise InterleaveError(i, j, f"entry ({i},{j}) = {mid} exceeds entry ({i+1},{j}) = {upper}")
            if mid < lower:
                raise InterleaveError(i, j, f"entry ({i},{j}) = {mid} is below entry ({i+1},{j+1}) = {lower}")
    return pattern


def _check_label(pattern: GTPattern, i: int) -> None:
    if not 1 <= i <= pattern.n - 1:
        raise IndexError(f"label {i} out of range 1..{pattern.n - 1}")


def _a(p: GTPattern, i: int, j: int) -> int:
    # Signed diamond sum anchored at entry (i, j); zero by convention for j > i.
    if j > i:
        return 0
    return p.entry(i, j) - p.entry(i - 1, j) + p.entry(i, j + 1) - p.entry(i + 1, j + 1)


def _b(p: GTPattern, i: int, j: int) -> int:
    # Mirrored diamond sum; zero by convention for j > i + 1.
    if j > i + 1:
        return 0
    return -p.entry(i, j) + p.entry(i - 1, j - 1) - p.entry(i, j - 1) + p.entry(i + 1, j)


def diamond_a(pattern: GTPattern, i: int, j: int) -> int:
    """Diamond number a_j at level i: entry(i,j) - entry(i-1,j) + entry(i,j+1) - entry(i+1,j+1).

    Defined for 1 <= i <= n-1 and any j; entries outside the triangle read
    as 0, and the value is 0 for j > i.
    """
    _check_label(pattern, i)
    return _a(pattern, i, j)


def diamond_b(pattern: GTPattern, i: int, j: int) -> int:
    """Diamond number b_j at level i: -entry(i,j) + entry(i-1,j-1) - entry(i,j-1) + entry(i+1,j).

    Defined for 1 <= i <= n-1 and any j; the value is 0 for j > i + 1.
    Satisfies b_j = -a_{j-1} for 1 <= j <= i + 1.
    """
    _check_label(pattern, i)
    return _b(pattern, i, j)


def sum_a(pattern: GTPattern, i: int, j: int) -> int:
    """Partial diamond sum A_j at level i: sum of a_k for k from j to i.

    Domain 0 <= j <= i + 1; the sum at j = i + 1 is empty and equals 0.
    """
    _check_label(pattern, i)
    if not 0 <= j <= i + 1:
        raise IndexError(f"start index {j} out of range 0..{i + 1}")
    return sum(_a(pattern, i, k) for k in range(j, i + 1))


def sum_b(pattern: GTPattern, i: int, j: int) -> int:
    """Partial diamond sum B_j at level i: sum of b_k for k from 1 to j.

    Domain 0 <= j <= i + 1; the sum at j = 0 is empty and equals 0.
    """
    _check_label(pattern, i)
    if not 0 <= j <= i + 1:
        raise IndexError(f"end index {j} out of range 0..{i + 1}")
    return sum(_b(pattern, i, k) for k in range(1, j + 1))


def weight_gtp(pattern: GTPattern) -> Weight:
    """Weight of a pattern: coordinate j is row_sum(j) - row_sum(j-1).

    Coordinate j counts the letter j in the corresponding tableau, so the
    tuple is the canonical representative of the weight.
    """
    return tuple(pattern.row_sum(j) - pattern.row_sum(j - 1) for j in range(1, pattern.n + 1))


def weight_expressions(pattern: GTPattern) -> tuple[Weight, Weight, Weight]:
    """The weight computed three ways, as raw gl_n coordinate tuples.

    Returns (row-sum differences, A-form, B-form).  The A-form accumulates
    the full diamond sums A_0 at levels 1..n over fundamental-weight
    coordinates; the B-form does the same with -B_{i+1}.  The weight lattice
    is a quotient by the all-ones vector, so the A- and B-forms agree with
    the first tuple up to adding a constant to every coordinate (the
    constant is the pattern size); the A- and B-forms agree exactly.
    """
    n = pattern.n
    first = weight_gtp(pattern)
    a0 = [sum(_a(pattern, i, k) for k in range(0, i + 1)) for i in range(1, n + 1)]
    b_top = [sum(_b(pattern, i, k) for k in range(1, i + 2)) for i in range(1, n + 1)]
    # omega_i has coordinates 1 in positions 1..i, so coordinate k sums levels i >= k.
    a_form = tuple(sum(a0[i - 1] for i in range(k, n + 1)) for k in range(1, n + 1))
    b_form = tuple(-sum(b_top[i - 1] for i in range(k, n + 1)) for k in range(1, n + 1))
    return first, a_form, b_form


def phi_gtp(pattern: GTPattern, i: int) -> int:
    """Lowering string length: max of A_1 .. A_i at level i."""
    _check_label(pattern, i)
    value = max(sum_a(pattern, i, j) for j in range(1, i + 1))
    assert value >= 0, f"negative lowering string length {value} indicates a bug"
    return value


def epsilon_gtp(pattern: GTPattern, i: int) -> int:
    """Raising string length: max of B_1 .. B_i at level i (the range ends at i)."""
    _check_label(pattern, i)
    value = max(sum_b(pattern, i, j) for j in range(1, i + 1))
    assert value >= 0, f"negative raising string length {value} indicates a bug"
    return value


def _with_entry_changed(pattern: GTPattern, i: int, j: int, delta: int) -> GTPattern:
    rows = [list(row) for row in pattern.rows]
    rows[pattern.n - i][j - 1] += delta
    try:
        return validate_pattern(pattern.n, rows)
    except (NonNegativityError, InterleaveError) as exc:
        raise RuntimeError(f"crystal operator produced an invalid pattern at ({i},{j}): {exc}") from exc


def lower_gtp(pattern: GTPattern, i: int) -> Optional[GTPattern]:
    """Lowering operator: decrement entry (i, l) where l is the largest
    index in 1..i at which A_l attains the maximum; None when the string
    length is 0.  The result always interleaves, so revalidation failing is
    an internal error."""
    phi = phi_gtp(pattern, i)
    if phi == 0:
        return None
    ell = max(j for j in range(1, i + 1) if sum_a(pattern, i, j) == phi)
    return _with_entry_changed(pattern, i, ell, -1)


def raise_gtp(pattern: GTPattern, i: int) -> Optional[GTPattern]:
    """Raising operator: increment entry (i, l) where l is the smallest
    index in 1..i at which B_l attains the maximum; None when the string
    length is 0."""
    eps = epsilon_gtp(pattern, i)
    if eps == 0:
        return None
    ell = min(j for j in range(1, i + 1) if sum_b(pattern, i, j) == eps)
    return _with_entry_changed(pattern, i, ell, +1)


def highest_weight_pattern(n: int, lam: Partition) -> GTPattern:
    """The pattern whose row i repeats the first i parts of ``lam``.

    Every raising string length vanishes on it, making it the unique source
    vertex of the crystal graph.
    """
    lam = as_partition(lam)
    padded = pad(lam, n)
    return validate_pattern(n, tuple(padded[:i] for i in range(n, 0, -1)))


def enumerate_patterns(n: int, lam: Partition) -> list[GTPattern]:
    """All patterns with n rows and top row ``lam``, each exactly once.

    Order: lexicographically increasing on the concatenation of rows read
    top-down, left-to-right.  Rows are generated from the fixed top row
    downward; entry j of the row below row ``upper`` ranges over the closed
    interval [upper[j+1], upper[j]], so no candidate is ever filtered out.
    """
    lam = as_partition(lam)
    top = pad(lam, n)

    def extend(stack: list[tuple[int, ...]]) -> None:
        upper = stack[-1]
        if len(upper) == 1:
            results.append(GTPattern(n, tuple(stack)))
            return
        ranges = [range(upper[j + 1], upper[j] + 1) for j in range(len(upper) - 1)]
        for row in product(*ranges):
            stack.append(row)
            extend(stack)
            stack.pop()

    results: list[GTPattern] = []
    extend([top])
    return results


def reduced_long_word(n: int) -> tuple[int, ...]:
    """The fixed reduced word (1, 2,1, 3,2,1, ..., n-1,...,1) for n letters."""
    word: list[int] = []
    for k in range(1, n):
        word.extend(range(k, 0, -1))
    return tuple(word)


@dataclass(frozen=True)
class StringDatum:
    """Table of string exponents d[i,j] for 1 <= i < j <= n.

    ``entries`` holds (i, j, value) triples sorted by (i, j).  The value at
    (i, j) is the number of boxes the prefix rows gain between levels j-1
    and j, truncated at column j - i; see ``string_datum``.
    """

    n: int
    entries: tuple[tuple[int, int, int], ...]

    def value(self, i: int, j: int) -> int:
        for a, b, v in self.entries:
            if (a, b) == (i, j):
                return v
        raise IndexError(f"no entry ({i},{j}) in a table for n={self.n}")

    def in_word_order(self) -> tuple[int, ...]:
        """Values aligned with ``reduced_long_word(n)``.

        The word splits into blocks (k, k-1, ..., 1) for k = 1..n-1; the
        position carrying letter l within block k corresponds to the table
        entry (k+1-l, k+1).  Read along the word, the values are the exact
        numbers of times the raising operator with the letter's label
        applies maximally, left to right (confirmed by exhaustive iteration
        at desk scale; see the verification suite).
        """
        out: list[int] = []
        for k in range(1, self.n):
            for letter in range(k, 0, -1):
                out.append(self.value(k + 1 - letter, k + 1))
        return tuple(out)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "entries": [{"i": i, "j": j, "value": v} for i, j, v in self.entries],
            "word": list(reduced_long_word(self.n)),
            "along_word": list(self.in_word_order()),
        }


def string_datum(pattern: GTPattern) -> StringDatum:
    """Closed-form string exponents: d[i,j] = sum over m = 1..j-i of
    (entry(j, m) - entry(j-1, m)).

    Every value is non-negative because consecutive rows interleave.
    """
    entries = []
    for i in range(1, pattern.n + 1):
        for j in range(i + 1, pattern.n + 1):
            value = sum(pattern.entry(j, m) - pattern.entry(j - 1, m) for m in range(1, j - i + 1))
            assert value >= 0, f"negative string exponent d[{i},{j}] = {value} indicates a bug"
            entries.append((i, j, value))
    return StringDatum(pattern.n, tuple(entries))
