"""Foundational value types: partitions, weights, skew cells, dimension oracle.

Partitions and weights are plain integer tuples.  A partition is stored in
canonical form with no trailing zeros; padding to a declared length is always
an explicit operation.  All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Partition = tuple[int, ...]
Weight = tuple[int, ...]


class ShapeError(ValueError):
    """A sequence is not a valid partition, or two shapes are incompatible."""


class LengthError(ValueError):
    """A partition has more parts than the declared length allows."""


def as_partition(parts: Iterable[int]) -> Partition:
    """Canonicalize a sequence into a partition (trailing zeros stripped).

    Raises ShapeError if the sequence is not weakly decreasing or contains a
    negative or non-integer entry.
    """
    seq = tuple(parts)
    for x in seq:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ShapeError(f"partition entries must be integers, got {x!r}")
        if x < 0:
            raise ShapeError(f"partition entries must be non-negative, got {x}")
    for k in range(len(seq) - 1):
        if seq[k] < seq[k + 1]:
            raise ShapeError(f"parts must be weakly decreasing, got {seq[k]} < {seq[k+1]} at position {k+1}")
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    return seq


def pad(parts: Partition, n: int) -> tuple[int, ...]:
    """Extend a partition with zeros to length n (trailing zeros do not count as parts)."""
    parts = as_partition(parts)
    if len(parts) > n:
        raise LengthError(f"partition has {len(parts)} parts, more than n={n}")
    return parts + (0,) * (n - len(parts))


@dataclass(frozen=True)
class SkewCells:
    """The cell set of a skew diagram outer/inner, cells in row-major order.

    Cells are 1-based (row, column) pairs: inner.parts[r] < c <= outer.parts[r].
    """

    outer: Partition
    inner: Partition
    cells: tuple[tuple[int, int], ...]


def skew_cells(outer: Partition, inner: Partition) -> SkewCells:
    """Cells of the diagram of ``outer`` not in ``inner``, row-major."""
    outer = as_partition(outer)
    inner = as_partition(inner)
    if len(inner) > len(outer) or any(inner[k] > outer[k] for k in range(len(inner))):
        raise ShapeError(f"inner shape {inner} is not contained in outer shape {outer}")
    padded_inner = inner + (0,) * (len(outer) - len(inner))
    cells = tuple(
        (r + 1, c)
        for r in range(len(outer))
        for c in range(padded_inner[r] + 1, outer[r] + 1)
    )
    return SkewCells(outer, inner, cells)


def weyl_dimension(n: int, lam: Partition) -> int:
    """Dimension of the irreducible gl_n module with highest weight ``lam``.

    Product over pairs 1 <= i < j <= n of (lam_i - lam_j + j - i) / (j - i),
    computed as an exact integer quotient.  Used only as an independent
    counting oracle for pattern enumeration.
    """
    lam = as_partition(lam)
    padded = pad(lam, n)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= padded[i] - padded[j] + j - i
            den *= j - i
    assert num % den == 0, "Weyl quotient must be exact"
    return num // den


def coroot_pairing(weight: Weight, i: int) -> int:
    """Pairing of a weight with the i-th simple coroot: coords[i] - coords[i+1], 1-based."""
    if not 1 <= i <= len(weight) - 1:
        raise IndexError(f"coroot index {i} out of range 1..{len(weight) - 1}")
    return weight[i - 1] - weight[i]


def partitions_up_to(max_size: int, max_parts: int) -> list[Partition]:
    """All partitions with at most ``max_parts`` parts and size at most ``max_size``.

    Includes the empty partition.  Ordered by size, then descending
    lexicographically within each size.
    """

    def gen(remaining: int, bound: int, parts_left: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        if parts_left == 0:
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in gen(remaining - first, first, parts_left - 1):
                yield (first,) + rest

    out: list[Partition] = []
    for total in range(max_size + 1):
        out.extend(gen(total, total, max_parts))
    return out
