"""Exact cluster-algebra engine for finite types built from Coxeter elements."""

from .cartan import (
    CartanMatrix,
    InvalidCartanMatrix,
    bipartition,
    cartan_from_label,
    cartan_from_matrix_text,
    cartan_from_text,
    direct_sum,
    validate,
)
from .weyl import (
    Root,
    Weight,
    apply_word,
    fundamental_weight,
    reflect_root,
    reflect_weight,
    root_to_weight_coords,
    simple_root,
    weight_as_root,
    weight_to_root_coords,
)
from .coxeter import (
    CoxeterElement,
    InternalCheckError,
    InvalidCoxeterWord,
    InvalidMove,
    PiLabel,
    PrimitiveRelation,
    all_coxeter_elements,
    b_matrix,
    beta_roots,
    bipartite_element,
    bipartition_of,
    clusters,
    compatibility_degree,
    component_coxeter_number,
    coxeter_element,
    coxeter_number,
    cyclical_move,
    h_vector,
    label_weight,
    move_graph,
    pi_set,
    precedes,
    primitive_relations,
    psi_bipartite,
    psi_move,
    root_compat,
    sources,
    tau,
    tau_inverse,
    weight_label,
)
from .poly import InexactDivision, LaurentPoly, PolyRing
from .algebra import (
    CapExceeded,
    ClusterVariableRecord,
    ExchangeGraph,
    MoveReport,
    Seed,
    SemifieldMap,
    TropMonomial,
    explore,
    extract_record,
    label_variables,
    mutate,
    principal_seed,
    principal_specialization_map,
    records_for,
    specialize,
    universal_primitive_relations,
    universal_seed,
    verify_move_isomorphism,
)
from . import typea

__all__ = [name for name in dir() if not name.startswith("_")]
