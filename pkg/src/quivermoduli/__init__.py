"""Exact-arithmetic toolkit for quiver moduli spaces.

Quivers with dimension vectors and weights; vertex doubling down to bipartite
shape; generic subrepresentations and numerical stability; local models of
moduli spaces with smooth/singular verdicts; toric presentations of thin
quotients.  All arithmetic is exact (integers and fractions), and every
verdict carries the rule or certificate that produced it.
"""

from .doubling import (
    DoublingMap,
    GroupElement,
    Representation,
    act,
    bipartify,
    double_vertex,
    group_element,
    hom_dim,
    iota,
    is_balanced,
    lift_dimension,
    lift_weight,
    phi,
    psi,
    representation,
    restrict_dimension,
    sufficient_n,
)
from .linalg import (
    Mat,
    SingularMatrixError,
    adjugate,
    det,
    from_rows,
    identity,
    mat_inv,
    mat_mul,
)
from .local import (
    LocalSetting,
    RepType,
    SingularWitness,
    local_setting,
    moduli_smooth,
    rep_types,
    setting_smooth,
    singular_witness,
)
from .quiver import (
    Arrow,
    GraphClass,
    ParseError,
    Quiver,
    QuiverError,
    ValidationError,
    classify,
    components,
    dump_quiver,
    euler_form,
    is_connected,
    load_quiver,
    normalize_weight,
    quiver,
    quiver_to_dict,
    symmetric_gram,
    tits_form,
    vector_from_mapping,
    vector_to_mapping,
)
from .stability import (
    enumerate_semistable_dims,
    enumerate_stable_dims,
    generic_ext,
    generic_hom,
    generic_subdims,
    is_generic_subdim,
    is_schur_root,
    is_semistable_dim,
    is_stable_dim,
    thin_rep_semistable,
    verify_doubling,
)
from .toric import (
    FlowMonomial,
    Presentation,
    SmoothVerdict,
    UnboundedFlowError,
    flow_monomial,
    flow_sections,
    lift_flow_monomial,
    lifted_weight,
    monomial_str,
    presentation,
    simple_cycles,
    toric_smooth,
)

__version__ = "0.1.0"

__all__ = [
    "Arrow",
    "DoublingMap",
    "FlowMonomial",
    "GraphClass",
    "GroupElement",
    "LocalSetting",
    "Mat",
    "ParseError",
    "Presentation",
    "Quiver",
    "QuiverError",
    "RepType",
    "Representation",
    "SingularMatrixError",
    "SingularWitness",
    "SmoothVerdict",
    "UnboundedFlowError",
    "ValidationError",
    "act",
    "adjugate",
    "bipartify",
    "classify",
    "components",
    "det",
    "double_vertex",
    "dump_quiver",
    "enumerate_semistable_dims",
    "enumerate_stable_dims",
    "euler_form",
    "flow_monomial",
    "flow_sections",
    "from_rows",
    "generic_ext",
    "generic_hom",
    "generic_subdims",
    "group_element",
    "hom_dim",
    "identity",
    "iota",
    "is_balanced",
    "is_connected",
    "is_generic_subdim",
    "is_schur_root",
    "is_semistable_dim",
    "is_stable_dim",
    "lift_dimension",
    "lift_flow_monomial",
    "lift_weight",
    "lifted_weight",
    "load_quiver",
    "local_setting",
    "mat_inv",
    "mat_mul",
    "moduli_smooth",
    "monomial_str",
    "normalize_weight",
    "phi",
    "presentation",
    "psi",
    "quiver",
    "quiver_to_dict",
    "rep_types",
    "representation",
    "restrict_dimension",
    "setting_smooth",
    "simple_cycles",
    "singular_witness",
    "sufficient_n",
    "symmetric_gram",
    "thin_rep_semistable",
    "tits_form",
    "toric_smooth",
    "vector_from_mapping",
    "vector_to_mapping",
    "verify_doubling",
]
