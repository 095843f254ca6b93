"""Tilting combinatorics of Nakayama algebras given by Kupisch series.

The package computes, exactly and over any base field:

* the homological calculus of uniserial modules (Hom, Ext, syzygies,
  Auslander-Reiten translates, projective/injective dimensions),
* classical tilting modules with mutation, the Gen order and the
  exchange graph,
* support tau-tilting pairs via quotient algebras,
* Auslander algebras of radical-square-zero Nakayama algebras with the
  bijection from their tilting modules onto support tau-tilting pairs,
* an independent matrix-level oracle over the rationals used by the test
  suite to validate every closed form.
"""

from .algebra import (
    Algebra,
    AlgebraError,
    IndecModule,
    ModuleSet,
    QuotientAlgebra,
    algebra_from_json,
    algebra_to_json,
    iter_algebras,
    iter_kupisch_series,
    load_algebra,
    make_rsz_nakayama,
    module_literal,
    parse_module,
    quotient_algebra,
    validate_kupisch,
)
from .homology import (
    INFINITE,
    GorensteinProfile,
    cosyzygy,
    ext1_dim,
    ext1_total,
    ext_dim,
    global_dimension,
    gorenstein_profile,
    hom_dim,
    inj_dim,
    proj_dim,
    regular_i0,
    regular_i1,
    regular_module,
    syzygy,
    tau,
    tau_inv,
)
from .tilting import (
    ExchangeGraph,
    ProjMutation,
    SummandFlags,
    TiltingError,
    TiltingRecord,
    enumerate_tilting,
    exchange_graph,
    exchange_graph_dot,
    generates,
    is_tilting,
    leq_gen,
    minimal_tilting,
    mutation_at,
    mutation_closure,
    proj_mutation_sequence,
    summand_shape_check,
    tilting_record,
)
from .tau_tilting import (
    SupportPair,
    enumerate_sttilt,
    enumerate_sttilt_over,
    enumerate_tau_rigid_sets,
    enumerate_tau_tilting,
    is_sttilt_pair,
    is_tau_rigid,
)
from .auslander import (
    AuslanderResult,
    BijectionReport,
    CountReport,
    auslander_algebra,
    thm25_map,
    verify_bijection,
    verify_counts,
)
from .oracle import (
    OracleError,
    check_relations,
    end_algebra,
    ext1_space_dim,
    hom_space_dim,
    identity_coords,
    quiver_of,
    syzygy_oracle,
    tau_via_dtr,
    to_representation,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgebraError",
    "AuslanderResult",
    "BijectionReport",
    "CountReport",
    "ExchangeGraph",
    "GorensteinProfile",
    "INFINITE",
    "IndecModule",
    "ModuleSet",
    "OracleError",
    "ProjMutation",
    "QuotientAlgebra",
    "SummandFlags",
    "SupportPair",
    "TiltingError",
    "TiltingRecord",
    "algebra_from_json",
    "algebra_to_json",
    "auslander_algebra",
    "check_relations",
    "cosyzygy",
    "end_algebra",
    "enumerate_sttilt",
    "enumerate_sttilt_over",
    "enumerate_tau_rigid_sets",
    "enumerate_tau_tilting",
    "enumerate_tilting",
    "exchange_graph",
    "exchange_graph_dot",
    "ext1_dim",
    "ext1_space_dim",
    "ext1_total",
    "ext_dim",
    "generates",
    "global_dimension",
    "gorenstein_profile",
    "hom_dim",
    "hom_space_dim",
    "identity_coords",
    "inj_dim",
    "is_sttilt_pair",
    "is_tau_rigid",
    "is_tilting",
    "iter_algebras",
    "iter_kupisch_series",
    "leq_gen",
    "load_algebra",
    "make_rsz_nakayama",
    "minimal_tilting",
    "module_literal",
    "mutation_at",
    "mutation_closure",
    "parse_module",
    "proj_dim",
    "proj_mutation_sequence",
    "quiver_of",
    "quotient_algebra",
    "regular_i0",
    "regular_i1",
    "regular_module",
    "summand_shape_check",
    "syzygy",
    "syzygy_oracle",
    "tau",
    "tau_inv",
    "tau_via_dtr",
    "thm25_map",
    "tilting_record",
    "to_representation",
    "validate_kupisch",
    "verify_bijection",
    "verify_counts",
]
