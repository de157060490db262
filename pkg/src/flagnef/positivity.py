"""Positivity of the tautological class and the relative anticanonical test.

The sign of the threshold invariant decides everything for the tautological
class on a Grassmann bundle: positive means ample, zero means nef but not
ample, negative means not nef.  The relative anticanonical class is nef
exactly when the type is semistable (a single piece), and never lies in the
interior of the nef cone.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .cones import NSClassGr, grassmann_nef_cone, is_nef_gr
from .hn import CHAR_ZERO, FieldContext, HNType
from .theta import _require_quotient_rank, theta


class PositivityClass(enum.Enum):
    """Trichotomy for a line bundle class."""

    AMPLE = "ample"
    NEF_NOT_AMPLE = "nef_not_ample"
    NOT_NEF = "not_nef"


def classify_tautological(h: HNType, r: int, ctx: FieldContext = CHAR_ZERO) -> PositivityClass:
    """Positivity class of the tautological line bundle on the rank-r
    Grassmann bundle.

    Total in the sign of the invariant; since Frobenius and cover pullbacks
    scale the invariant by positive factors, the verdict does not depend on
    the chosen stabilization exponent.
    """
    value = theta(h, r, ctx).theta
    if value > 0:
        return PositivityClass.AMPLE
    if value == 0:
        return PositivityClass.NEF_NOT_AMPLE
    return PositivityClass.NOT_NEF


def relative_anticanonical_class(h: HNType, r: int) -> NSClassGr:
    """Class of the relative anticanonical bundle of the rank-r Grassmann
    bundle: n * O(1) - r * deg * L, with n and deg the rank and degree of the
    bundle the type describes.

    This is det of the relative tangent bundle Hom(S, Q); for a single
    semistable piece it reduces to the classical O(n) twisted down by r
    copies of the determinant.
    """
    _require_quotient_rank(h, r)
    return NSClassGr(Fraction(h.rank), Fraction(-r * h.degree))


def anticanonical_is_nef(h: HNType, r: int, ctx: FieldContext = CHAR_ZERO) -> bool:
    """Nef test for the relative anticanonical class; true exactly when the
    type has a single piece (the bundle is semistable, strongly so in
    characteristic p).

    The class is built from the degrees of ``h`` itself, so membership is
    tested in the cone normalized for that bundle: any Frobenius steps are
    already folded into ``h`` and the normalization factor is 1.
    """
    base_ctx = FieldContext(ctx.p, 0) if ctx.is_char_p else CHAR_ZERO
    cone = grassmann_nef_cone(h, r, base_ctx)
    return is_nef_gr(relative_anticanonical_class(h, r), cone)
