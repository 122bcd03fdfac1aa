"""Cartier-Manin matrix, its semilinear powers, and the p-rank classification.

For y^2 = f(x) of genus 2, write h = f^((p-1)/2) with coefficients h_i.
The Cartier-Manin matrix is

    A0 = [[h_{p-1}, h_{p-2}], [h_{2p-1}, h_{2p-2}]]

(in characteristic 3 this is [[c2, c1], [c5, c4]] of f itself), A1 is the
entrywise p-th power, and the product M = A1*A0 determines the p-rank as
rank(M); the a-number is 2 - rank(A0).  Conventions for these names differ
in the literature; here A0 is called the Cartier-Manin matrix and M the
Hasse-Witt product.
"""

from dataclasses import dataclass

from .errors import SingularCurve
from .field import frobenius
from .forms import SexticForm
from .poly import Poly, half_power

ORDINARY = "ordinary"
NON_ORDINARY = "non_ordinary"
SUPERSINGULAR = "supersingular"
SUPERSPECIAL = "superspecial"

STRATUM_BY_RANKS = {
    (2, 0): ORDINARY,
    (1, 1): NON_ORDINARY,
    (0, 1): SUPERSINGULAR,
    (0, 2): SUPERSPECIAL,
}


@dataclass(frozen=True)
class CartierData:
    a0: tuple
    a1: tuple
    m: tuple
    p_rank: int
    a_number: int
    stratum: str


def cartier_matrix(form):
    """A0 of the model, read from the half power of f."""
    h = half_power(Poly(form.ctx, form.c))
    p = form.ctx.p
    return ((h.coeff(p - 1), h.coeff(p - 2)),
            (h.coeff(2 * p - 1), h.coeff(2 * p - 2)))


def semilinear_power(matrix, ell):
    """Entrywise p^ell-th power (the twisted factors A_ell)."""
    return tuple(tuple(frobenius(x, ell) for x in row) for row in matrix)


def mat_mul(a, b):
    return ((a[0][0] * b[0][0] + a[0][1] * b[1][0],
             a[0][0] * b[0][1] + a[0][1] * b[1][1]),
            (a[1][0] * b[0][0] + a[1][1] * b[1][0],
             a[1][0] * b[0][1] + a[1][1] * b[1][1]))


def rank2x2(m):
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if not det.is_zero():
        return 2
    if all(x.is_zero() for row in m for x in row):
        return 0
    return 1


def classify(form, *, validate=False):
    """Full Cartier data of a smooth model.

    The enumeration hot path filters J10 != 0 before calling, so smoothness
    is only re-checked when validate=True.
    """
    if validate:
        from .igusa import smooth_or_raise
        smooth_or_raise(form)
    a0 = cartier_matrix(form)
    a1 = semilinear_power(a0, 1)
    m = mat_mul(a1, a0)
    p_rank = rank2x2(m)
    a_number = 2 - rank2x2(a0)
    stratum = STRATUM_BY_RANKS.get((p_rank, a_number))
    if stratum is None:
        # rank(A1*A0) <= rank(A0) and det(A1) = det(A0)^p rule these out
        raise AssertionError(f"impossible rank pair {(p_rank, a_number)} for {form!r}")
    return CartierData(a0, a1, m, p_rank, a_number, stratum)


__all__ = ["CartierData", "SexticForm", "cartier_matrix", "semilinear_power",
           "classify", "rank2x2", "mat_mul", "SingularCurve",
           "ORDINARY", "NON_ORDINARY", "SUPERSINGULAR", "SUPERSPECIAL",
           "STRATUM_BY_RANKS"]
