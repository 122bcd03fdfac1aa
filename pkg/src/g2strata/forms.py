"""The sextic model y^2 = f(x) of a genus-2 curve."""

from .errors import WrongCharacteristic


class SexticForm:
    """Coefficient vector (c0..c6) of a degree-5 or degree-6 model over F_q."""

    __slots__ = ("c", "ctx")

    def __init__(self, ctx, coeffs):
        c = list(coeffs)
        if len(c) != 7:
            raise ValueError("a sextic form needs exactly 7 coefficients c0..c6")
        c = [x if hasattr(x, "ctx") else ctx.from_int(x) for x in c]
        for x in c:
            if x.ctx.key() != ctx.key():
                raise WrongCharacteristic("coefficient from a different field")
        if c[5].is_zero() and c[6].is_zero():
            raise ValueError("degree must be 5 or 6 (c5, c6 not both zero)")
        self.c = tuple(c)
        self.ctx = ctx

    def degree(self):
        return 6 if not self.c[6].is_zero() else 5

    def scaled(self, lam):
        """The quadratic twist model lam * f (same invariants, same strata)."""
        return SexticForm(self.ctx, [lam * x for x in self.c])

    def __eq__(self, other):
        return (isinstance(other, SexticForm) and self.ctx == other.ctx
                and self.c == other.c)

    def __hash__(self):
        return hash((self.ctx.key(), self.c))

    def __repr__(self):
        terms = []
        for i in range(6, -1, -1):
            ci = self.c[i]
            if ci.is_zero():
                continue
            coeff = str(ci)
            if "+" in coeff:
                coeff = f"({coeff})"
            if i == 0:
                terms.append(coeff)
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if coeff == "1" else f"{coeff}*{x}")
        return " + ".join(terms) if terms else "0"
