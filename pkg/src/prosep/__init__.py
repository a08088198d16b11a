"""prosep: pro-p separability machinery for finite and polycyclic groups.

The package computes pro-p completions and subgroup embeddability in
finite groups, verifies the nilpotency/embeddability equivalence over its
built-in catalog, runs constructive separability and residual-p witness
searches in polycyclic groups through p-lower-central quotient towers, and
computes lower-central fingerprints of finitely presented groups via free
nilpotent groups on Hall bases.
"""

from .catalog import catalog, catalog_entry, catalog_names, finite_catalog
from .freenil import FreeNilpotentGroup, free_nilpotent
from .hall import HallBasis, witt_rank
from .nq import (
    ComparisonReport,
    Fingerprint,
    NqResult,
    RelatorReport,
    fingerprint_compare,
    nq,
    relator_analysis,
)
from .pcgroup import PcElement, PcPresentation, consistency_check
from .pcquot import PcQuotient, kernel_of_restriction, quotient_by
from .pcsub import (
    InducedPresentation,
    PcSubgroup,
    induced_subgroup,
    membership,
    normal_closure as pc_normal_closure,
    relative_index,
    subgroup_index,
    whole_group,
)
from .pcseries import (
    NotNilpotentWithinBound,
    WitnessReport,
    layer_invariants,
    lower_central_series_pc,
    p_quotient,
    residually_p_witness,
    separability_witness,
    torsion_primes,
)
from .perm import (
    FiniteGroup,
    Permutation,
    SubgroupHandle,
    all_subgroups,
    center,
    commutator_subgroup,
    compose,
    direct_product,
    inverse,
    is_nilpotent,
    is_normal,
    lower_central_series,
    normal_closure,
    quotient,
    semidirect_product,
    subgroup,
    sylow,
)
from .presentations import FpPresentation, parse_presentation, serialize_presentation
from .propfinite import (
    CVerdict,
    PResidual,
    embeddability_witness,
    is_pro_p_embeddable,
    p_lower_central_series,
    p_radical_finite,
    p_residual,
    pro_p_completion,
    theorem_c_verify,
)
from .radical import p_radical_nilpotent
from .report import emit_report
from .snf import AbelianInvariants, smith_normal_form
from .words import Word, parse_word, serialize_word

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
