"""Arithmetic in F_{p^r} for odd p, with a canonical element encoding.

Elements are coordinate vectors in the power basis of a fixed defining
polynomial.  The index of an element is sum(coeffs[i] * p^i), a bijection
onto [0, q) used everywhere results must be reproducible (table cells,
result files, root choices).
"""

from importlib import resources

from .errors import (CompositeP, DivisionByZero, IndexOutOfRange, NonResidue,
                     NotASubfield, ReducibleModulus, UnsupportedSize,
                     WrongCharacteristic)

# A stratification table needs q^3 one-byte cells; refuse fields beyond this.
DEFAULT_MAX_CELLS = 2 ** 31

_registry_cache = None
_embed_root_cache = {}


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def load_registry():
    """Shipped table of defining polynomials, {(p, r): coefficient tuple}."""
    global _registry_cache
    if _registry_cache is None:
        reg = {}
        text = resources.files("g2strata.data").joinpath("modulus_registry.txt").read_text()
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = [int(x) for x in line.split()]
            reg[(parts[0], parts[1])] = tuple(parts[2:])
        _registry_cache = reg
    return _registry_cache


class FieldCtx:
    """A concrete finite field F_{p^r}, p odd, with its defining modulus."""

    __slots__ = ("p", "r", "q", "modulus", "_red", "_sqrt_table")

    def __init__(self, p, r, modulus):
        self.p = p
        self.r = r
        self.q = p ** r
        self.modulus = tuple(c % p for c in modulus)
        # t^k for k = r .. 2r-2, reduced to vectors of length r
        red = []
        prev = [(-c) % p for c in self.modulus[:r]]  # t^r
        red.append(tuple(prev))
        for _ in range(r - 2):
            nxt = [0] + prev[:-1]
            top = prev[-1]
            if top:
                for i in range(r):
                    nxt[i] = (nxt[i] - top * self.modulus[i]) % p
            red.append(tuple(nxt))
            prev = nxt
        self._red = tuple(red)
        self._sqrt_table = None

    # -- element construction --------------------------------------------

    def element(self, coeffs):
        """Element from a coefficient sequence (length <= r) or an int."""
        if isinstance(coeffs, int):
            return self.from_int(coeffs)
        c = list(coeffs) + [0] * (self.r - len(coeffs))
        return Fq(self, tuple(x % self.p for x in c[: self.r]))

    def from_index(self, i):
        if not 0 <= i < self.q:
            raise IndexOutOfRange(f"index {i} outside [0, {self.q})")
        c = []
        for _ in range(self.r):
            c.append(i % self.p)
            i //= self.p
        return Fq(self, tuple(c))

    def from_int(self, n):
        """The image of the integer n under Z -> F_p ⊂ F_q."""
        return Fq(self, (n % self.p,) + (0,) * (self.r - 1))

    def zero(self):
        return Fq(self, (0,) * self.r)

    def one(self):
        return self.from_int(1)

    def gen(self):
        """The power-basis generator t (equals 0 for r = 1)."""
        if self.r == 1:
            return self.zero()
        return Fq(self, (0, 1) + (0,) * (self.r - 2))

    def elements(self):
        for i in range(self.q):
            yield self.from_index(i)

    # -- identity ----------------------------------------------------------

    def key(self):
        return (self.p, self.r, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"FieldCtx(p={self.p}, r={self.r})"


class Fq:
    """Immutable element of a FieldCtx, coordinates in the power basis."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    @property
    def index(self):
        i = 0
        for c in reversed(self.coeffs):
            i = i * self.ctx.p + c
        return i

    def is_zero(self):
        return not any(self.coeffs)

    def _check(self, other):
        if self.ctx.key() != other.ctx.key():
            raise WrongCharacteristic(
                f"elements of {self.ctx!r} and {other.ctx!r} cannot be combined")

    def __add__(self, other):
        self._check(other)
        p = self.ctx.p
        return Fq(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        p = self.ctx.p
        return Fq(self.ctx, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.ctx.p
        return Fq(self.ctx, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        ctx = self.ctx
        p = ctx.p
        r = ctx.r
        if r == 1:
            return Fq(ctx, ((self.coeffs[0] * other.coeffs[0]) % p,))
        conv = [0] * (2 * r - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    conv[i + j] += a * b
        out = conv[:r]
        for k in range(r, 2 * r - 1):
            c = conv[k]
            if c:
                row = ctx._red[k - r]
                for i in range(r):
                    out[i] += c * row[i]
        return Fq(ctx, tuple(v % p for v in out))

    def inv(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return self ** (self.ctx.q - 2)

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, Fq) and self.ctx.key() == other.ctx.key()
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ctx.key(), self.coeffs))

    def __repr__(self):
        return f"Fq({self})"

    def __str__(self):
        if self.ctx.r == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                t = "t" if i == 1 else f"t^{i}"
                terms.append(t if c == 1 else f"{c}*{t}")
        return "+".join(terms) if terms else "0"


# -- construction --------------------------------------------------------------


def _modulus_has_factor(modulus, p):
    """Reducibility of a monic polynomial of degree <= 4 over F_p."""
    r = len(modulus) - 1
    if r == 1:
        return False
    for x in range(p):
        acc = 0
        for c in reversed(modulus):
            acc = (acc * x + c) % p
        if acc == 0:
            return True
    if r <= 3:
        return False
    # degree 4, no roots: reducible iff a product of two irreducible quadratics,
    # detected by x^(p^2) == x mod f on some factor: gcd(x^(p^2) - x, f) != 1
    from .tools_poly import powmod_x, poly_gcd  # local, tiny helpers
    xe = powmod_x(p ** 2, list(modulus), p)
    diff = list(xe)
    diff[1] = (diff[1] - 1) % p
    return len(poly_gcd(list(modulus), diff, p)) > 1


def make_field(p, r=1, modulus=None, *, max_cells=DEFAULT_MAX_CELLS):
    """Construct F_{p^r}, validating the (registry or given) modulus.

    Raises CompositeP / WrongCharacteristic / ReducibleModulus /
    UnsupportedSize.  With modulus=None the shipped registry supplies the
    defining polynomial so runs are reproducible.
    """
    if p == 2:
        raise WrongCharacteristic("characteristic 2 is not supported")
    if not _is_prime(p):
        raise CompositeP(f"p = {p} is not prime")
    if not 1 <= r <= 4:
        raise UnsupportedSize(f"extension degree r = {r} outside 1..4")
    q = p ** r
    if max_cells is not None and q ** 3 > max_cells:
        raise UnsupportedSize(
            f"q^3 = {q ** 3} cells exceed the configured budget of {max_cells}")
    if modulus is None:
        try:
            modulus = load_registry()[(p, r)]
        except KeyError:
            raise UnsupportedSize(f"no registry modulus for (p={p}, r={r})") from None
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != r + 1 or modulus[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {r}")
    if _modulus_has_factor(modulus, p):
        raise ReducibleModulus(f"modulus {list(modulus)} factors over F_{p}")
    return FieldCtx(p, r, modulus)


# -- named operations ----------------------------------------------------------


def frobenius(a, ell):
    """a^(p^ell), computed as iterated p-th powers."""
    for _ in range(ell):
        a = a ** a.ctx.p
    return a


def sqrt(a, *, require=False):
    """Some x with x^2 = a, or None; the smallest-index root is returned."""
    ctx = a.ctx
    if ctx._sqrt_table is None:
        table = {}
        for i in range(ctx.q):
            x = ctx.from_index(i)
            k = (x * x).index
            table.setdefault(k, i)
        ctx._sqrt_table = table
    j = ctx._sqrt_table.get(a.index)
    if j is None:
        if require:
            raise NonResidue(f"{a} is not a square in F_{ctx.q}")
        return None
    root = ctx.from_index(j)
    assert root * root == a
    return root


def cube_root(a):
    """The unique cube root in characteristic 3 (cubing is bijective)."""
    if a.ctx.p != 3:
        raise WrongCharacteristic("cube roots are total only in characteristic 3")
    root = frobenius(a, a.ctx.r - 1)
    assert root ** 3 == a
    return root


def sixth_root(a):
    """sqrt(cube_root(a)) in characteristic 3, or None if the sqrt fails."""
    return sqrt(cube_root(a))


def roots(a, kind):
    """Dispatcher: kind in {'sqrt', 'cube_root', 'sixth_root'}."""
    if kind == "sqrt":
        return sqrt(a)
    if kind == "cube_root":
        return cube_root(a)
    if kind == "sixth_root":
        return sixth_root(a)
    raise ValueError(f"unknown root kind {kind!r}")


def embed(src, dst, a):
    """The ring embedding F_{p^r} -> F_{p^s} sending t to a fixed root.

    The root of src.modulus in dst is located by an exhaustive scan once per
    (src, dst) pair and cached, so embeddings are deterministic within a run.
    """
    if a.ctx.key() != src.key():
        raise WrongCharacteristic("element does not belong to the source field")
    if src.p != dst.p or dst.r % src.r != 0:
        raise NotASubfield(f"F_{src.q} is not a subfield of F_{dst.q}")
    if src.key() == dst.key():
        return a
    cache_key = (src.key(), dst.key())
    rho = _embed_root_cache.get(cache_key)
    if rho is None:
        for i in range(dst.q):
            x = dst.from_index(i)
            acc = dst.zero()
            for c in reversed(src.modulus):
                acc = acc * x + dst.from_int(c)
            if acc.is_zero():
                rho = x
                break
        else:
            raise NotASubfield(f"modulus of F_{src.q} has no root in F_{dst.q}")
        _embed_root_cache[cache_key] = rho
    out = dst.zero()
    for c in reversed(a.coeffs):
        out = out * rho + dst.from_int(c)
    return out


def element_index(a):
    """Canonical integer encoding of an element (base-p positional)."""
    return a.index


def element_from_index(ctx, i):
    return ctx.from_index(i)
