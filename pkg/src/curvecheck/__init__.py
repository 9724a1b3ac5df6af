"""Partition forms of real plane curve schemes and the Arnold-Viro type prohibitions."""
from .catalog import SingularityType, catalog_form, catalog_milnor, catalog_morsification
from .checker import InequalityReport, check_petrovskii, check_theorem_a
from .local import (
    MorsifiedLocalScheme,
    ResolutionGraph,
    SectorSideAssignment,
    build_tilde_form,
    compute_qp,
    is_q_singularity,
    omega_twist,
)
from .qform import (
    InertiaTriple,
    RationalSymmetricForm,
    add_scaled_identity,
    direct_sum,
    inertia,
    restrict,
    schur_project,
)
from .scheme import CurveScheme, assemble_partition_form, chi_xr, load_scheme, total_milnor

__version__ = "0.1.0"

__all__ = [
    "SingularityType", "catalog_form", "catalog_milnor", "catalog_morsification",
    "InequalityReport", "check_petrovskii", "check_theorem_a",
    "MorsifiedLocalScheme", "ResolutionGraph", "SectorSideAssignment",
    "build_tilde_form", "compute_qp", "is_q_singularity", "omega_twist",
    "InertiaTriple", "RationalSymmetricForm", "add_scaled_identity", "direct_sum",
    "inertia", "restrict", "schur_project",
    "CurveScheme", "assemble_partition_form", "chi_xr", "load_scheme", "total_milnor",
]
