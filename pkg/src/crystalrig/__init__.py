"""Crystal bijection between marginally large tableaux and rigged configurations
for B(infinity) in type A_n, routed through cascading sequences."""

from .bijection import psi, rc_from_lanes, seq_from_rc
from .cascading import CascadingSequence, LowerSubinterval, form_lanes, phi, phi_inverse
from .growth import GrowthRejection, enumerate_next, is_valid, validate
from .rigged import RiggedConfiguration, RiggedPartition, empty_rc
from .tableaux import MarginallyLargeTableau, highest_weight

__all__ = [
    "CascadingSequence",
    "LowerSubinterval",
    "form_lanes",
    "phi",
    "phi_inverse",
    "RiggedConfiguration",
    "RiggedPartition",
    "empty_rc",
    "MarginallyLargeTableau",
    "highest_weight",
    "rc_from_lanes",
    "seq_from_rc",
    "psi",
    "GrowthRejection",
    "validate",
    "is_valid",
    "enumerate_next",
]
