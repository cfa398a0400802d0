"""Graph burnings, their configuration complexes, and exact burning homology."""

from .graphs import (
    Graph,
    GraphError,
    GraphMap,
    GraphMapError,
    StructureReport,
    Subgraph,
    build_named,
    classify,
    closed_neighborhood,
    complement,
    complete_bipartite_graph,
    complete_graph,
    compose_graph_maps,
    cube_graph,
    cycle_graph,
    disjoint_union,
    distances,
    edgeless_graph,
    identity_map,
    induced_subgraph,
    induced_union,
    iterated_sum,
    parse_graph_text,
    path_graph,
    validate_graph_map,
    whole_graph,
)
from .burning import (
    Burning,
    BurningError,
    BurningMorphism,
    ExtremalPathReport,
    FiltrationState,
    IncompleteBurning,
    MorphismError,
    PrefixMismatch,
    SizeGuardExceeded,
    SourceTooEarly,
    TauIllDefined,
    TauNotGraphMap,
    admits_extension,
    burning_map,
    burning_number,
    compose_morphisms,
    enumerate_burnings,
    extremal_path_report,
    filtration,
    identity_morphism,
    is_b_burned,
    is_burning_extension,
    minimal_b_burned_subgraphs,
    validate_burning,
    validate_morphism,
)
from .complexes import (
    ComplexError,
    SimplicialComplex,
    SimplicialMap,
    SimplicialMapError,
    are_isomorphic,
    compose_simplicial_maps,
    cone,
    configuration_space,
    faces,
    from_generators,
    graph_as_complex,
    identity_simplicial_map,
    one_skeleton_graph,
    skeleton,
    suspension,
    validate_simplicial_map,
)
from .homology import (
    ChainComplexZ,
    HomologyGroup,
    chain_complex,
    euler_characteristic,
    homology,
    induced_map,
    matrix_rank_over,
)
from .exactlinalg import SmithForm, smith_normal_form

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
