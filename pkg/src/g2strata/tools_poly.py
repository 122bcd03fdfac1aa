"""Tiny helpers for polynomials over F_p as plain int lists (degree <= 4).

Used by modulus validation; the Poly class in poly.py is the real
polynomial type for curve work.
"""


def mulmod(a, b, mod, p):
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    r = len(mod) - 1
    for i in range(len(prod) - 1, r - 1, -1):
        c = prod[i]
        if c:
            for j in range(r + 1):
                prod[i - r + j] = (prod[i - r + j] - c * mod[j]) % p
    out = prod[:r]
    return out + [0] * (r - len(out))


def powmod_x(e, mod, p):
    """x^e modulo the monic polynomial mod, as a length-(deg mod) list."""
    r = len(mod) - 1
    result = [1] + [0] * (r - 1)
    if r > 1:
        base = [0, 1] + [0] * (r - 2)
    else:
        base = [(-mod[0]) % p]
    while e:
        if e & 1:
            result = mulmod(result, base, mod, p)
        base = mulmod(base, base, mod, p)
        e >>= 1
    return result


def poly_gcd(a, b, p):
    a, b = a[:], b[:]
    while True:
        while a and a[-1] == 0:
            a.pop()
        while b and b[-1] == 0:
            b.pop()
        if not b:
            break
        if len(a) < len(b):
            a, b = b, a
            continue
        inv = pow(b[-1], p - 2, p)
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for j in range(len(b)):
            a[shift + j] = (a[shift + j] - c * b[j]) % p
        a.pop()
    return a
