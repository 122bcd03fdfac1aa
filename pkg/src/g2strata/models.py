"""Explicit curve families in characteristic 3 and the GL2 action on sextics."""

from dataclasses import dataclass

from .cartier import NON_ORDINARY, classify
from .errors import (BadKind, SingularMatrix, UnsupportedSize, WrongCharacteristic,
                     ZeroG2)
from .field import Fq, cube_root, embed, make_field, sqrt
from .forms import SexticForm
from .igusa import g2_of_form


@dataclass(frozen=True)
class GL2Elt:
    a: Fq
    b: Fq
    c: Fq
    d: Fq

    def det(self):
        return self.a * self.d - self.b * self.c

    def __post_init__(self):
        if self.det().is_zero():
            raise SingularMatrix("GL2 element must have nonzero determinant")

    def compose(self, other):
        """Matrix product self * other."""
        return GL2Elt(self.a * other.a + self.b * other.c,
                      self.a * other.b + self.b * other.d,
                      self.c * other.a + self.d * other.c,
                      self.c * other.b + self.d * other.d)


def _linear_power(u, v, n, ctx):
    """Coefficients of (u*X + v*Z)^n in X^k Z^(n-k), index k."""
    out = [ctx.one()]
    for _ in range(n):
        nxt = [ctx.zero()] * (len(out) + 1)
        for k, t in enumerate(out):
            nxt[k] = nxt[k] + t * v
            nxt[k + 1] = nxt[k + 1] + t * u
        out = nxt
    return out


def gl2_transform(form, mat):
    """Coefficients of F(a*X' + b*Z', c*X' + d*Z') for the homogenized model.

    Expands the substitution symbolically, so the result is exact over every
    field, including the small ones where interpolation at 7 points is not
    available.
    """
    ctx = form.ctx
    if mat.det().is_zero():
        raise SingularMatrix("transform requires an invertible matrix")
    top = [_linear_power(mat.a, mat.b, i, ctx) for i in range(7)]
    bot = [_linear_power(mat.c, mat.d, i, ctx) for i in range(7)]
    out = [ctx.zero()] * 7
    for i, ci in enumerate(form.c):
        if ci.is_zero():
            continue
        first, second = top[i], bot[6 - i]
        for k1, t1 in enumerate(first):
            if t1.is_zero():
                continue
            v = ci * t1
            for k2, t2 in enumerate(second):
                out[k1 + k2] = out[k1 + k2] + v * t2
    return SexticForm(ctx, out)


def howe_supersingular(g3, ctx):
    """The supersingular family member with absolute invariants (0, 0, g3)."""
    if ctx.p != 3:
        raise WrongCharacteristic("the supersingular family lives in characteristic 3")
    if g3.is_zero():
        return SexticForm(ctx, [1, 0, 0, 0, 0, 1, 0])  # x^5 + 1
    one = ctx.one()
    zero = ctx.zero()
    return SexticForm(ctx, [g3 ** 4, g3 ** 3, zero, g3 ** 2, zero, zero, one])


def construct_nonordinary(g2, g3, ctx):
    """A non-ordinary model with absolute invariants (0, g2, g3), g2 != 0.

    Returns (form, field of definition): the cube roots always exist in F_q,
    but the needed square root may only exist in F_{q^2}, in which case the
    model is returned over the quadratic extension with embedded coefficients.
    """
    if ctx.p != 3:
        raise WrongCharacteristic("constructor is specific to characteristic 3")
    if g2.is_zero():
        raise ZeroG2("g2 must be a unit")
    one = ctx.one()
    c2 = cube_root(g2)
    s = cube_root(one + g2 - g2 * g3)
    c3 = sqrt(s)
    if c3 is not None:
        home = ctx
    else:
        try:
            home = make_field(ctx.p, 2 * ctx.r)
        except UnsupportedSize as exc:
            raise UnsupportedSize(
                f"quadratic extension of F_{ctx.q} is outside the registry") from exc
        c2 = embed(ctx, home, c2)
        c3 = sqrt(embed(ctx, home, s))
        assert c3 is not None  # every element of F_q is a square in F_{q^2}
    zero = home.zero()
    form = SexticForm(home, [home.one(), zero, c2, c3, zero, zero, home.one()])
    return form, home


def verify_nonordinary_contract(g2, g3, ctx):
    """Check the constructor's postcondition; returns (form, extended flag)."""
    form, home = construct_nonordinary(g2, g3, ctx)
    data = classify(form, validate=True)
    triple = g2_of_form(form)
    want = (home.zero(), embed(ctx, home, g2), embed(ctx, home, g3))
    ok = data.stratum == NON_ORDINARY and triple.as_tuple() == want
    return form, home.key() != ctx.key(), ok


SEVEN_FAMILY_PARAMS = {
    1: ("c3", "c2", "c0"),
    2: ("c4", "c3", "c0"),
    3: ("c5", "c3", "c2", "c0"),
    4: ("c4", "c3", "c1", "c0"),
    5: ("c3", "c2", "c0"),
    6: ("c5", "c3", "c0"),
    7: ("c5", "c3", "c2", "c0"),
}


def seven_family(kind, params, d, ctx):
    """One of the seven rank-one model shapes, twisted by the unit d.

    params lists the free coefficients in the order named by
    SEVEN_FAMILY_PARAMS[kind]; the twist multiplies the whole coefficient
    vector, which leaves invariants and classification unchanged.
    """
    if ctx.p != 3:
        raise WrongCharacteristic("the seven model shapes are characteristic-3 forms")
    if kind not in SEVEN_FAMILY_PARAMS:
        raise BadKind(f"kind must be 1..7, got {kind}")
    if d.is_zero():
        raise ValueError("twist scalar d must be a unit")
    names = SEVEN_FAMILY_PARAMS[kind]
    if len(params) != len(names):
        raise BadKind(f"kind {kind} takes parameters {names}")
    v = dict(zip(names, params))
    zero = ctx.zero()
    g = v.get
    c0, c1, c2 = g("c0", zero), g("c1", zero), g("c2", zero)
    c3, c4, c5 = g("c3", zero), g("c4", zero), g("c5", zero)
    one = ctx.one()
    if kind == 1:
        c = [c0, zero, c2, c3, zero, zero, one]
    elif kind == 2:
        c = [c0, zero, zero, c3, c4, zero, one]
    elif kind == 3:
        c = [c0, zero, c2, c3, zero, c5, one]
    elif kind == 4:
        c = [c0, c1, zero, c3, c4, zero, one]
    elif kind == 5:
        c = [c0, c2, c2, c3, zero, zero, one]
    elif kind == 6:
        c = [c0, zero, zero, c3, c5, c5, one]
    else:
        c = [c0, c2, c2, c3, c5, c5, one]
    return SexticForm(ctx, [d * x for x in c])
