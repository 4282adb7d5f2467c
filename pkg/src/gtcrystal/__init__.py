"""Crystal structures on Gelfand-Tsetlin patterns and semistandard tableaux."""

from .bijection import letter_count_in_row, pattern_to_tableau, tableau_to_pattern
from .core import (
    LengthError,
    Partition,
    ShapeError,
    SkewCells,
    Weight,
    as_partition,
    coroot_pairing,
    pad,
    partitions_up_to,
    skew_cells,
    weyl_dimension,
)
from .crystal import (
    ClosureError,
    CrystalGraph,
    CrystalModel,
    Report,
    build_graph,
    build_graph_from_sources,
    connectivity,
    highest_weight_elements,
    pattern_model,
    tableau_model,
    verify_axioms,
    verify_isomorphism,
)
from .gtpattern import (
    GTPattern,
    InterleaveError,
    NonNegativityError,
    StringDatum,
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
from .ssyt import (
    AlphabetError,
    Bracketing,
    ColumnOrderError,
    ReadingWord,
    RowOrderError,
    Tableau,
    TableauError,
    bracket_columns,
    bracket_word,
    enumerate_tableaux,
    epsilon_columns,
    epsilon_ssyt,
    far_east_inverse,
    far_east_reading,
    highest_weight_tableau,
    lower_columns,
    lower_ssyt,
    match_positions,
    phi_columns,
    phi_ssyt,
    raise_columns,
    raise_ssyt,
    validate_tableau,
    weight_ssyt,
)
