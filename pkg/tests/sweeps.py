"""Shared desk-scale sweep domains and reference oracles for the test suite."""

from gtcrystal import partitions_up_to

MAX_BOXES = 6
MAX_RANK = 4
SPOT_RANK_5_SHAPES = ((1,), (2, 1), (1, 1, 1, 1, 1), (3, 2, 1))


def shape_sweep(max_boxes=MAX_BOXES, max_rank=MAX_RANK):
    """Every (n, shape) pair with n <= max_rank and |shape| <= max_boxes."""
    pairs = []
    for n in range(1, max_rank + 1):
        for lam in partitions_up_to(max_boxes, n):
            pairs.append((n, lam))
    return pairs


def recursive_crossing(letters, i):
    """Literal fixpoint oracle for the i-cancellation of a word.

    Repeatedly cross out the rightmost i that still has an uncrossed i+1
    somewhere to its right, together with the leftmost such i+1, until no
    uncrossed i precedes an uncrossed i+1.  Returns 1-based positions.
    """
    crossed = set()
    while True:
        found = None
        for pos in range(len(letters), 0, -1):
            if pos in crossed or letters[pos - 1] != i:
                continue
            partner = next(
                (q for q in range(pos + 1, len(letters) + 1) if q not in crossed and letters[q - 1] == i + 1),
                None,
            )
            if partner is not None:
                found = (pos, partner)
                break
        if found is None:
            return frozenset(crossed)
        crossed.update(found)


def letter_count(tableau, letter, row):
    """Multiplicity of a letter in one 1-based row; 0 outside the tableau."""
    if not 1 <= row <= len(tableau.rows):
        return 0
    return sum(1 for x in tableau.rows[row - 1] if x == letter)
