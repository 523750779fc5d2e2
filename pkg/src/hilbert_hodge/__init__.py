"""Exact mixed-Hodge-structure tables for cohomology of non-trivial local
systems on Hilbert modular varieties, cross-validated against a brute-force
chain-complex homology oracle."""

from .errors import (
    BadDegree,
    BadHodgeIndex,
    ConfigError,
    DictionaryMiss,
    DoubleTwist,
    HilbertHodgeError,
    InconsistentInvariants,
    IncompatibleRank,
    OracleSizeExceeded,
    TrivialSystem,
)
from .higgs import (
    HiggsBasisElement,
    HiggsChainComplex,
    HomologyResult,
    build_higgs_bundle,
    build_log_higgs_complex,
    full_homology,
    homology,
)
from .kunneth import (
    SheafMatrix,
    cohomology_sheaf_closed_form,
    count_N,
    kunneth_product,
    single_factor_matrix,
    unit_matrix,
    weight_counts,
)
from .model import (
    LineBundleMonomial,
    LocalSystemSpec,
    SheafCohomologyLabel,
    VarietyInvariants,
    monomial_mul,
    validate_spec,
)
from .consistency import (
    CheckReport,
    CheckResult,
    SweepBounds,
    check_euler_ih,
    check_hrr,
    check_oracle_equivalence,
    check_table_identities,
    run_verification,
)
from .tables import (
    EisensteinDatum,
    IhTable,
    MhsRow,
    MhsTable,
    eisenstein_data,
    gr_F_labels,
    ih_table,
    mhs_table,
    sheaf_cohomology_dim,
)

__version__ = "0.1.0"

__all__ = [
    "BadDegree",
    "BadHodgeIndex",
    "CheckReport",
    "CheckResult",
    "ConfigError",
    "DictionaryMiss",
    "DoubleTwist",
    "EisensteinDatum",
    "HiggsBasisElement",
    "HiggsChainComplex",
    "HilbertHodgeError",
    "HomologyResult",
    "IhTable",
    "InconsistentInvariants",
    "IncompatibleRank",
    "LineBundleMonomial",
    "LocalSystemSpec",
    "MhsRow",
    "MhsTable",
    "OracleSizeExceeded",
    "SheafCohomologyLabel",
    "SheafMatrix",
    "SweepBounds",
    "TrivialSystem",
    "VarietyInvariants",
    "build_higgs_bundle",
    "build_log_higgs_complex",
    "check_euler_ih",
    "check_hrr",
    "check_oracle_equivalence",
    "check_table_identities",
    "cohomology_sheaf_closed_form",
    "count_N",
    "eisenstein_data",
    "full_homology",
    "gr_F_labels",
    "homology",
    "ih_table",
    "kunneth_product",
    "mhs_table",
    "monomial_mul",
    "run_verification",
    "sheaf_cohomology_dim",
    "single_factor_matrix",
    "unit_matrix",
    "validate_spec",
    "weight_counts",
]
