"""Dense univariate polynomials over F_q and the invariant tables.

Degrees stay small (at most 3(p-1) for the half power of a sextic), so
schoolbook multiplication is all we need.  The invariant tables are integer
polynomials in the model coefficients c0..c6, shipped as a data file and
checked for isobaricity at load.
"""

from importlib import resources

from .errors import CtxMismatch, TableNotLoaded

TABLE_DEGREES = {"J2": (2, 6), "J4": (4, 12), "J6": (6, 18),
                 "J10": (10, 30), "DISC6": (10, 30)}

_tables_cache = None


class Poly:
    """Polynomial with Fq coefficients; index = degree of term; normalized."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @classmethod
    def from_ints(cls, ctx, ints):
        return cls(ctx, [ctx.from_int(n) for n in ints])

    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        """Coefficient of x^i, zero beyond the degree."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ctx.zero()

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ctx == other.ctx
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ctx.key(), self.coeffs))

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.ctx, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __mul__(self, other):
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.ctx, [])
        out = [self.ctx.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.ctx, out)

    def __pow__(self, e):
        result = Poly(self.ctx, [self.ctx.one()])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scaled(self, lam):
        return Poly(self.ctx, [lam * c for c in self.coeffs])

    def derivative(self):
        return Poly(self.ctx, [self.ctx.from_int(i) * c
                               for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero():
            return self
        inv = self.coeffs[-1].inv()
        return self.scaled(inv)

    def __mod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree()
        inv = other.coeffs[-1].inv()
        while len(rem) - 1 >= d and rem:
            c = rem[-1] * inv
            shift = len(rem) - 1 - d
            for j in range(d + 1):
                rem[shift + j] = rem[shift + j] - c * other.coeffs[j]
            rem.pop()
        return Poly(self.ctx, rem)

    def _check(self, other):
        if self.ctx.key() != other.ctx.key():
            raise CtxMismatch("polynomials over different fields")

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        parts = [f"({c})x^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return "Poly(" + " + ".join(parts) + ")"


def poly_gcd(f, g):
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def poly_mul(f, g):
    return f * g


def half_power(f):
    """f^((p-1)/2), the expansion whose coefficients feed the Cartier matrix."""
    return f ** ((f.ctx.p - 1) // 2)


def coeff(f, i):
    return f.coeff(i)


class IntPolyTable:
    """Integer polynomial in c0..c6: a list of (coefficient, exponent vector)."""

    __slots__ = ("name", "terms", "_modp_cache")

    def __init__(self, name, terms):
        if not terms:
            raise TableNotLoaded(f"table {name} has no terms")
        degree, weight = TABLE_DEGREES.get(name, (None, None))
        if degree is None:
            raise TableNotLoaded(f"unknown table name {name}")
        for coef, expo in terms:
            if sum(expo) != degree or sum(i * e for i, e in enumerate(expo)) != weight:
                raise TableNotLoaded(
                    f"table {name}: term {expo} breaks isobaricity "
                    f"(need degree {degree}, weight {weight})")
        self.name = name
        self.terms = tuple(terms)
        self._modp_cache = {}

    def coeffs_mod_p(self, p):
        cached = self._modp_cache.get(p)
        if cached is None:
            cached = tuple(c % p for c, _ in self.terms)
            self._modp_cache[p] = cached
        return cached


def parse_tables(text):
    groups = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 9:
            raise TableNotLoaded(f"malformed table line: {line!r}")
        name = parts[0]
        coef = int(parts[1])
        expo = tuple(int(x) for x in parts[2:])
        groups.setdefault(name, []).append((coef, expo))
    return {name: IntPolyTable(name, terms) for name, terms in groups.items()}


def load_tables(path=None):
    """The shipped invariant tables (or a replacement file for cross-checks)."""
    global _tables_cache
    if path is not None:
        with open(path) as fh:
            return parse_tables(fh.read())
    if _tables_cache is None:
        text = resources.files("g2strata.data").joinpath("igusa_tables.txt").read_text()
        tables = parse_tables(text)
        for name in TABLE_DEGREES:
            if name not in tables:
                raise TableNotLoaded(f"shipped table file is missing {name}")
        _tables_cache = tables
    return _tables_cache


def eval_table(table, form):
    """Evaluate an integer invariant table at a sextic form, in its field."""
    ctx = form.ctx
    p = ctx.p
    coeffs = table.coeffs_mod_p(p)
    acc = ctx.zero()
    for cmodp, (_, expo) in zip(coeffs, table.terms):
        if cmodp == 0:
            continue
        term = ctx.from_int(cmodp)
        for cj, ej in zip(form.c, expo):
            if ej:
                if cj.is_zero():
                    term = None
                    break
                term = term * cj ** ej
        if term is not None:
            acc = acc + term
    return acc
