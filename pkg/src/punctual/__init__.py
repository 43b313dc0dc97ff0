"""Gröbner cells of the punctual Hilbert scheme Hilb^n(k[[x,y]]) via canonical Hilbert-Burch matrices."""
from .combinatorics import (
    HilbertFunction,
    Partition,
    bounded_partition_count,
    hilbert_function_of_staircase,
    lex_segment_of,
    max_jump,
    partitions,
)
from .decomposition import (
    Cell,
    betti_numbers_punctual,
    cell,
    cellular_decomposition,
    fibration_check,
    one_dimensional_socle_stratum,
    plausibility_check,
    verify_conjecture,
)
from .fields import GF, QQ
from .localsb import leading_term_ideal, mora_normal_form, standard_basis

__version__ = "0.1.0"
