"""Exact enumeration and certification of moduli components of rank-2
semistable sheaves on P^3 obtained by elementary transformations of
reflexive sheaves along curves and collections of points.

All arithmetic is exact (arbitrary-precision rationals); every closed-form
formula is cross-checked against an independent route, and disagreements
are reported rather than repaired.
"""

from .atlas import (
    Atlas,
    EnumerationOptions,
    VerificationSummary,
    curve_families_of_degree,
    enumerate_components,
    solve_sabc,
    verify_atlas,
)
from .curvecoh import CompleteIntersection, CurveCohomology, RationalCurve
from .exactpoly import HilbertPolynomial, Rational
from .families import ExtProfile, IdealExtension, SplitResolution
from .p3rr import ChernData, chern_from_hp, chi_o_p3, h0_o_p3, hp_from_chern
from .transform import (
    ComponentDescriptor,
    ComponentReport,
    ConditionStatus,
    ConditionVerdict,
    ErratumNote,
    InadmissibleDescriptor,
    SingularitySignature,
    build_report,
)

__version__ = "0.1.0"

__all__ = [
    "Atlas",
    "ChernData",
    "CompleteIntersection",
    "ComponentDescriptor",
    "ComponentReport",
    "ConditionStatus",
    "ConditionVerdict",
    "CurveCohomology",
    "EnumerationOptions",
    "ErratumNote",
    "ExtProfile",
    "HilbertPolynomial",
    "IdealExtension",
    "InadmissibleDescriptor",
    "Rational",
    "RationalCurve",
    "SingularitySignature",
    "SplitResolution",
    "VerificationSummary",
    "build_report",
    "chern_from_hp",
    "chi_o_p3",
    "curve_families_of_degree",
    "enumerate_components",
    "h0_o_p3",
    "hp_from_chern",
    "solve_sabc",
    "verify_atlas",
]
