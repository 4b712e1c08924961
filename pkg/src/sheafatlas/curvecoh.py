"""Cohomology and Hilbert-scheme dimensions for the two curve families.

The curves along which the elementary transformations happen are either
smooth irreducible rational space curves of degree d, or smooth complete
intersections of surfaces of degrees (d1, d2).  Everything here is a closed
formula: line bundles on a rational curve pull back to P^1, and complete
intersections are projectively normal, so sections of O_C(a) come from the
Koszul resolution of the ideal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .p3rr import chi_o_p3, h0_o_p3

# (1,1) is a line and (1,2) a conic; both are rational and belong to the
# other family.
_EXCLUDED_CI = {(1, 1), (1, 2)}


@dataclass(frozen=True)
class RationalCurve:
    """Smooth irreducible rational curve of degree d in P^3."""

    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("degree must be positive")

    @property
    def degree(self) -> int:
        return self.d


@dataclass(frozen=True)
class CompleteIntersection:
    """Smooth complete intersection of surfaces of degrees d1 <= d2."""

    d1: int
    d2: int

    def __post_init__(self):
        if self.d1 < 1 or self.d2 < 1:
            raise ValueError("surface degrees must be positive")
        if self.d1 > self.d2:
            raise ValueError("require d1 <= d2")
        if (self.d1, self.d2) in _EXCLUDED_CI:
            raise ValueError(
                "(%d, %d) is rational and excluded from the complete-"
                "intersection family" % (self.d1, self.d2)
            )

    @property
    def degree(self) -> int:
        return self.d1 * self.d2


CurveFamily = RationalCurve | CompleteIntersection


@dataclass(frozen=True)
class CurveCohomology:
    h0: int
    h1: int

    @property
    def chi(self) -> int:
        return self.h0 - self.h1


def degree(curve: CurveFamily) -> int:
    return curve.degree


def genus(curve: CurveFamily) -> int:
    """Arithmetic genus: 0 for rational curves, 1 + d1*d2*(d1+d2-4)/2 else."""
    if isinstance(curve, RationalCurve):
        return 0
    prod = curve.d1 * curve.d2 * (curve.d1 + curve.d2 - 4)
    assert prod % 2 == 0
    g = 1 + prod // 2
    assert g >= 0
    return g


def canonical_twist(curve: CurveFamily) -> int:
    """The twist e with omega_C = O_C(e); adjunction gives e = d1 + d2 - 4.

    Rational curves are rejected: their canonical bundle is not the
    restriction of a line bundle on P^3, and the degree bookkeeping that
    needs omega_C handles them separately.
    """
    if isinstance(curve, RationalCurve):
        raise ValueError("rational curves have no canonical twist on P^3")
    return curve.d1 + curve.d2 - 4


def chi_oc(curve: CurveFamily, a: int) -> int:
    """chi(O_C(a)) = a * deg(C) + 1 - g by Riemann-Roch."""
    return a * curve.degree + 1 - genus(curve)


def cohomology_oc(curve: CurveFamily, a: int) -> CurveCohomology:
    """Exact (h0, h1) of O_C(a).

    Rational curve of degree d: O_C(a) pulls back to O_P1(a*d).  Complete
    intersection: projective normality plus the Koszul resolution of I_C
    give h0 = h0(O(a)) - h0(O(a-d1)) - h0(O(a-d2)) + h0(O(a-d1-d2)); the
    same expression degenerates to 0 for a < 0, where the bundle has
    negative degree on an irreducible curve.  h1 follows from chi.
    """
    chi = chi_oc(curve, a)
    if isinstance(curve, RationalCurve):
        h0 = max(0, a * curve.d + 1)
    else:
        h0 = (
            h0_o_p3(a)
            - h0_o_p3(a - curve.d1)
            - h0_o_p3(a - curve.d2)
            + h0_o_p3(a - curve.d1 - curve.d2)
        )
    h1 = h0 - chi
    assert h0 >= 0 and h1 >= 0
    return CurveCohomology(h0, h1)


def h0_normal(curve: CurveFamily) -> int:
    """Sections of the normal bundle N_{C/P^3}.

    For a general rational curve of degree d, chi(N) = 4d and h1(N) = 0, so
    h0(N) = 4d; the whole construction restricts to general curves, and the
    same genericity convention is used here.  For a complete intersection,
    N_C = O_C(d1) + O_C(d2).
    """
    if isinstance(curve, RationalCurve):
        return 4 * curve.d
    return cohomology_oc(curve, curve.d1).h0 + cohomology_oc(curve, curve.d2).h0


def h1_normal(curve: CurveFamily) -> int:
    """h1 of the normal bundle; nonzero only for large complete intersections.

    Reports expose this value so that the tangent-space reading of the
    Hilbert-scheme dimension is visible whenever obstructions could matter.
    """
    if isinstance(curve, RationalCurve):
        return 0
    return cohomology_oc(curve, curve.d1).h1 + cohomology_oc(curve, curve.d2).h1


def dim_hilb(curve: CurveFamily) -> int:
    """Dimension of the Hilbert scheme at the curve (tangent-space reading).

    This is h0(N_{C/P^3}) by deformation theory; see h1_normal for the
    obstruction data.
    """
    return h0_normal(curve)
