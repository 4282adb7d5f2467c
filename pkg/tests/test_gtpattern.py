import pytest
from hypothesis import given

from conftest import pattern_st
from gtcrystal import (
    GTPattern,
    InterleaveError,
    NonNegativityError,
    ShapeError,
    coroot_pairing,
    diamond_a,
    diamond_b,
    enumerate_patterns,
    epsilon_gtp,
    highest_weight_pattern,
    lower_gtp,
    phi_gtp,
    raise_gtp,
    reduced_long_word,
    string_datum,
    sum_a,
    sum_b,
    validate_pattern,
    weight_expressions,
    weight_gtp,
)
from sweeps import shape_sweep


@pytest.fixture
def worked():
    """The running example pattern: top (3,1,0), middle (3,1), bottom (2)."""
    return validate_pattern(3, [[3, 1, 0], [3, 1], [2]])


def test_validate_accepts_worked_example(worked):
    assert worked.rows == ((3, 1, 0), (3, 1), (2,))
    assert worked.entry(3, 1) == 3
    assert worked.entry(1, 1) == 2
    assert worked.entry(2, 3) == 0  # outside the triangle
    assert worked.entry(0, 1) == 0


def test_validate_rejects_interleave_violation():
    with pytest.raises(InterleaveError) as err:
        validate_pattern(3, [[3, 1, 0], [3, 2], [2]])
    assert (err.value.i, err.value.j) == (2, 2)


def test_validate_rejects_negative_entry():
    with pytest.raises(NonNegativityError):
        validate_pattern(3, [[3, 1, 0], [3, 1], [-1]])


def test_validate_rejects_malformed_triangle():
    with pytest.raises(ShapeError):
        validate_pattern(3, [[3, 1, 0], [3, 1]])
    with pytest.raises(ShapeError):
        validate_pattern(2, [[2, 0], [1, 1]])
    with pytest.raises(ShapeError):
        validate_pattern(2, [[2.5, 0], [1]])


def test_diamond_a_worked_example(worked):
    assert diamond_a(worked, 1, 1) == 1  # 2 - 0 + 0 - 1
    assert diamond_a(worked, 2, 1) == 1
    assert diamond_a(worked, 2, 2) == 1
    assert diamond_a(worked, 2, 5) == 0  # zero beyond the row


def test_diamond_b_worked_example(worked):
    assert diamond_b(worked, 1, 1) == 1  # -2 + 0 - 0 + 3
    assert diamond_b(worked, 2, 2) == -1
    assert diamond_b(worked, 2, 9) == 0


def test_diamond_label_range(worked):
    with pytest.raises(IndexError):
        diamond_a(worked, 3, 1)
    with pytest.raises(IndexError):
        diamond_b(worked, 0, 1)


def test_sums_worked_example(worked):
    assert sum_a(worked, 1, 1) == 1
    assert sum_a(worked, 2, 1) == 2
    assert sum_a(worked, 2, 2) == 1
    assert sum_b(worked, 1, 1) == 1
    assert sum_b(worked, 2, 1) == 0
    assert sum_b(worked, 2, 2) == -1
    with pytest.raises(IndexError):
        sum_a(worked, 2, 4)
    with pytest.raises(IndexError):
        sum_b(worked, 2, -1)


def test_weight_worked_example(worked):
    assert weight_gtp(worked) == (2, 2, 0)


def test_weight_degenerate():
    single = validate_pattern(1, [[5]])
    assert weight_gtp(single) == (5,)
    hw = highest_weight_pattern(3, (3, 1))
    assert weight_gtp(hw) == (3, 1, 0)


def test_string_lengths_worked_example(worked):
    assert phi_gtp(worked, 1) == 1
    assert phi_gtp(worked, 2) == 2
    assert epsilon_gtp(worked, 1) == 1
    assert epsilon_gtp(worked, 2) == 0
    with pytest.raises(IndexError):
        phi_gtp(worked, 3)


def test_string_lengths_highest_weight():
    hw = highest_weight_pattern(4, (5, 3, 2))
    padded = (5, 3, 2, 0)
    for i in range(1, 4):
        assert phi_gtp(hw, i) == padded[i - 1] - padded[i]
        assert epsilon_gtp(hw, i) == 0
        assert raise_gtp(hw, i) is None


def test_lower_worked_example(worked):
    assert lower_gtp(worked, 1).rows == ((3, 1, 0), (3, 1), (1,))
    assert lower_gtp(worked, 2).rows == ((3, 1, 0), (2, 1), (2,))


def test_raise_inverts_worked_example(worked):
    assert raise_gtp(lower_gtp(worked, 2), 2) == worked
    assert raise_gtp(validate_pattern(3, [[3, 1, 0], [3, 1], [1]]), 1) == worked


def test_lower_on_empty_crystal():
    zero = validate_pattern(2, [[0, 0], [0]])
    assert lower_gtp(zero, 1) is None
    assert raise_gtp(zero, 1) is None


def test_lowering_tie_break_takes_largest_index():
    # ties among the partial sums: the decremented entry is the rightmost one
    hw = highest_weight_pattern(3, (3, 1))
    assert lower_gtp(hw, 2).rows == ((3, 1, 0), (3, 0), (3,))
    tied = validate_pattern(3, [[3, 2, 0], [3, 1], [2]])
    assert sum_a(tied, 2, 1) == sum_a(tied, 2, 2) == 1
    assert lower_gtp(tied, 2).rows == ((3, 2, 0), (3, 0), (2,))


def test_raising_tie_break_takes_smallest_index():
    tied = validate_pattern(3, [[3, 2, 0], [2, 1], [1]])
    assert sum_b(tied, 2, 1) == sum_b(tied, 2, 2) == 1
    assert raise_gtp(tied, 2).rows == ((3, 2, 0), (3, 1), (1,))


def test_highest_weight_pattern_shape():
    assert highest_weight_pattern(3, (3, 1)).rows == ((3, 1, 0), (3, 1), (3,))
    assert highest_weight_pattern(2, (2,)).rows == ((2, 0), (2,))
    assert highest_weight_pattern(1, (4,)).rows == ((4,),)


def test_enumerate_counts():
    assert len(enumerate_patterns(2, (2,))) == 3
    assert len(enumerate_patterns(3, (3, 1))) == 15
    assert len(enumerate_patterns(3, (2, 1))) == 8
    assert len(enumerate_patterns(3, ())) == 1
    assert len(enumerate_patterns(1, (4,))) == 1


def test_enumerate_order_is_lexicographic_on_concatenation():
    flat = [sum(p.rows, ()) for p in enumerate_patterns(3, (2, 1))]
    assert flat == sorted(flat)
    assert [p.rows for p in enumerate_patterns(2, (2,))] == [
        ((2, 0), (0,)),
        ((2, 0), (1,)),
        ((2, 0), (2,)),
    ]


def test_enumerate_yields_distinct_valid_patterns():
    seen = set()
    for p in enumerate_patterns(4, (2, 2, 1)):
        validate_pattern(p.n, p.rows)
        assert p not in seen
        seen.add(p)


@given(p=pattern_st())
def test_negated_diamond_identity(p):
    for i in range(1, p.n):
        for j in range(1, i + 2):
            assert diamond_b(p, i, j) == -diamond_a(p, i, j - 1)


@given(p=pattern_st())
def test_boundary_diamond_signs(p):
    for i in range(1, p.n):
        assert diamond_a(p, i, 0) <= 0
        assert diamond_b(p, i, i + 1) <= 0


@given(p=pattern_st())
def test_partial_sum_relation(p):
    for i in range(1, p.n):
        base = sum_a(p, i, 0)
        assert base == -sum_b(p, i, i + 1)
        for j in range(0, i + 2):
            assert sum_a(p, i, j) - sum_b(p, i, j) == base


@given(p=pattern_st())
def test_weight_expressions_agree_in_the_quotient(p):
    first, a_form, b_form = weight_expressions(p)
    assert a_form == b_form
    shifts = {a_form[k] - first[k] for k in range(p.n)}
    assert shifts == {sum(first)}
    for i in range(1, p.n):
        assert coroot_pairing(first, i) == coroot_pairing(a_form, i)


@given(p=pattern_st())
def test_pairing_axiom_on_random_patterns(p):
    wt = weight_gtp(p)
    for i in range(1, p.n):
        assert phi_gtp(p, i) - epsilon_gtp(p, i) == coroot_pairing(wt, i)


@given(p=pattern_st())
def test_operator_round_trip_on_random_patterns(p):
    for i in range(1, p.n):
        down = lower_gtp(p, i)
        if down is not None:
            assert raise_gtp(down, i) == p
        up = raise_gtp(p, i)
        if up is not None:
            assert lower_gtp(up, i) == p


def test_string_lengths_count_operator_applications():
    for n, lam in shape_sweep(max_boxes=5, max_rank=3):
        for p in enumerate_patterns(n, lam):
            for i in range(1, n):
                steps = 0
                current = p
                while (nxt := lower_gtp(current, i)) is not None:
                    current = nxt
                    steps += 1
                assert steps == phi_gtp(p, i)
                steps = 0
                current = p
                while (nxt := raise_gtp(current, i)) is not None:
                    current = nxt
                    steps += 1
                assert steps == epsilon_gtp(p, i)


def test_reduced_long_word():
    assert reduced_long_word(1) == ()
    assert reduced_long_word(2) == (1,)
    assert reduced_long_word(3) == (1, 2, 1)
    assert reduced_long_word(4) == (1, 2, 1, 3, 2, 1)


def test_string_datum_worked_example(worked):
    datum = string_datum(worked)
    assert datum.value(1, 2) == 1
    assert datum.value(1, 3) == 0
    assert datum.value(2, 3) == 0
    assert datum.in_word_order() == (1, 0, 0)


def test_string_datum_highest_weight_vanishes():
    datum = string_datum(highest_weight_pattern(4, (4, 2, 1)))
    assert all(v == 0 for _i, _j, v in datum.entries)


def test_string_datum_two_row_case():
    datum = string_datum(validate_pattern(2, [[2, 0], [0]]))
    assert datum.value(1, 2) == 2


@given(p=pattern_st())
def test_string_datum_non_negative(p):
    assert all(v >= 0 for _i, _j, v in string_datum(p).entries)


def test_pattern_serialization_round_trip(worked):
    assert GTPattern.from_dict(worked.to_dict()) == worked
    with pytest.raises(ShapeError):
        GTPattern.from_dict({"n": 3})


def test_pretty_renders_triangle(worked):
    lines = worked.pretty().splitlines()
    assert len(lines) == 3
    assert lines[0].split() == ["3", "1", "0"]
    assert lines[2].strip() == "2"


def test_degenerate_rank_one():
    p = validate_pattern(1, [[3]])
    assert enumerate_patterns(1, (3,)) == [p]
    with pytest.raises(IndexError):
        phi_gtp(p, 1)
