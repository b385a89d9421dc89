"""Algebraic invariants of convex and stack polyominoes."""

from .errors import (
    BadParameters,
    ConsistencyError,
    DecompositionFailed,
    DisconnectedCells,
    DisconnectedResult,
    EmptyInput,
    EmptyResult,
    GroebnerUnverified,
    IsRectangle,
    MalformedGrid,
    NotAFacet,
    NotConvex,
    NotPure,
    NotStack,
    PolyominoError,
    TooLarge,
)
from .polyomino import (
    Polyomino,
    cells_at_or_above,
    corners,
    delete_cell,
    heights,
    is_column_convex,
    is_convex,
    is_rectangle,
    is_row_convex,
    is_stack,
    has_monotone_paths,
    mirror,
    parse,
    serialize,
    transpose,
)
from .bigraph import (
    BipartiteGraph,
    DirectedCut,
    MixedSubset,
    SideSubset,
    all_directed_cuts,
    build_graph,
    column_cuts,
    delta_minus,
    delta_plus,
    directed_cut,
    hall_violator,
    has_perfect_matching,
    induced_connected,
    is_directed_cut,
    is_neighbor_horizontal_interval,
    is_neighbor_vertical_interval,
    is_two_connected,
    max_disjoint_directed_cuts,
    max_matching,
    neighbors_x,
    neighbors_y,
    row_cuts,
)
from .gorenstein import (
    Certificate,
    GorensteinVerdict,
    SubsetProfile,
    Violation,
    is_gorenstein_convex,
    is_gorenstein_stack_corners,
    is_gorenstein_stack_subsets,
    subset_profile,
)
from .toric import (
    InitialIdeal,
    InnerMinor,
    VarOrder,
    initial_ideal,
    inner_minors,
    leading_term,
    variable_order,
    verify_groebner,
)
from .srcomplex import (
    FlagComplex,
    build_complex,
    invariants_from_complex,
    deletion_facets,
    f_vector,
    facets,
    hilbert_numerator,
    link_decompose,
    link_facets,
    transport_facet,
    transport_facet_inverse,
)
from .invariants import (
    Decomposition,
    InvariantReport,
    a_invariant_stack,
    decompose,
    distinguished_vertex,
    full_report,
    ladder_polyomino,
    multiplicity_ladder,
    multiplicity_pk,
    multiplicity_recursive,
    multiplicity_rectangle,
    pk_polyomino,
    regularity_stack,
)
from .generate import convex_polyominoes, fixed_polyominoes, stack_polyominoes
from . import fixtures

__version__ = "0.1.0"
