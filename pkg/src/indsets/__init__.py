"""Independent subsets of powers of paths and cycles: exact counting formulas,
brute-force enumeration, and the Hasse diagrams of their inclusion posets."""
from .cycles import (
    conjecture_scan,
    m_edges_closed,
    m_edges_conjecture,
    m_edges_weighted,
    q_count,
    q_total,
    q_total_rec,
)
from .graphs import (
    CapacityError,
    ContractError,
    GraphFamily,
    GraphSpec,
    build_graph,
    build_hamming_cube,
    build_hasse,
    check_cube_correspondence,
    count_independent_by_size,
    enum_fibonacci_strings,
    enum_independent,
    enum_lucas_strings,
)
from .paths import (
    h_edges_conv,
    h_edges_via_t,
    h_edges_weighted,
    p_count,
    p_total,
    p_total_rec,
    pbar_count,
    pbar_total,
    t_coeff,
)
from .report import VerificationReport
from .sequences import Family, SequenceSpec, binom, convolve, h_fibonacci, h_lucas

__version__ = "0.1.0"
