"""Weighted-projective invariants of a sextic model and the absolute triple.

The five invariants [J2 : J4 : J6 : J8 : J10] carry weights (2,4,6,8,10);
J8 is recovered from 4*J8 = J2*J6 - J4^2, valid in odd characteristic.  The
absolute triple (g1, g2, g3) is a complete weight-0 coordinate system on the
smooth locus, so equality of points is tested through it.
"""

from dataclasses import dataclass, field as dfield

from .errors import SingularPoint
from .field import Fq
from .forms import SexticForm
from .poly import eval_table, load_tables


@dataclass(frozen=True)
class IgusaPoint:
    j2: Fq
    j4: Fq
    j6: Fq
    j8: Fq
    j10: Fq

    def as_tuple(self):
        return (self.j2, self.j4, self.j6, self.j8, self.j10)


@dataclass(frozen=True)
class G2Triple:
    g1: Fq
    g2: Fq
    g3: Fq
    branch: int = dfield(default=0, compare=False)  # 1..3, diagnostics only

    def as_tuple(self):
        return (self.g1, self.g2, self.g3)


def igusa_invariants(form):
    """The Igusa point of a model; singular models are allowed (J10 = 0)."""
    tables = load_tables()
    j2 = eval_table(tables["J2"], form)
    j4 = eval_table(tables["J4"], form)
    j6 = eval_table(tables["J6"], form)
    j10 = eval_table(tables["J10"], form)
    inv4 = form.ctx.from_int(4).inv()
    j8 = (j2 * j6 - j4 * j4) * inv4
    return IgusaPoint(j2, j4, j6, j8, j10)


def g2_invariants(point):
    """Absolute invariants of a smooth Igusa point (three-case definition)."""
    j2, j4, j6, _, j10 = point.as_tuple()
    if j10.is_zero():
        raise SingularPoint("absolute invariants need J10 != 0")
    zero = j10.ctx.zero()
    inv10 = j10.inv()
    if not j2.is_zero():
        return G2Triple(j2 ** 5 * inv10, j2 ** 3 * j4 * inv10,
                        j2 ** 2 * j6 * inv10, branch=1)
    if not j4.is_zero():
        return G2Triple(zero, j4 ** 5 * inv10 * inv10, j4 * j6 * inv10, branch=2)
    return G2Triple(zero, zero, j6 ** 5 * inv10 ** 3, branch=3)


def g2_of_form(form):
    return g2_invariants(igusa_invariants(form))


def weighted_equal(P, Q):
    """Same point of the weighted projective space (smooth points only)."""
    if P.j10.is_zero() or Q.j10.is_zero():
        raise SingularPoint("weighted equality is defined on the smooth locus")
    return g2_invariants(P) == g2_invariants(Q)


def is_smooth(form):
    """J10(f) != 0, the discriminant criterion for the model."""
    return not eval_table(load_tables()["J10"], form).is_zero()


def smooth_or_raise(form):
    from .errors import SingularCurve
    if not is_smooth(form):
        raise SingularCurve(f"J10 = 0: {form!r} does not define a smooth curve")


__all__ = ["IgusaPoint", "G2Triple", "igusa_invariants", "g2_invariants",
           "g2_of_form", "weighted_equal", "is_smooth", "SexticForm"]
