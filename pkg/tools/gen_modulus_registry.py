#!/usr/bin/env python3
"""Generate the defining-polynomial registry for all supported fields.

For every odd prime p <= 139 and degree r in 1..4, picks the first monic
irreducible polynomial of degree r over F_p, ordering candidates by their
coefficient vector (c_0, ..., c_{r-1}) lexicographically.  Writes
src/g2strata/data/modulus_registry.txt with lines

    p r c_0 c_1 ... c_r

(constant term first, leading coefficient 1).
"""

from itertools import product
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "g2strata" / "data" / "modulus_registry.txt"

PRIMES = [p for p in range(3, 140)
          if all(p % d for d in range(2, int(p ** 0.5) + 1))]


def poly_mulmod(a, b, mod, p):
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce modulo the monic polynomial `mod`
    r = len(mod) - 1
    for i in range(len(prod) - 1, r - 1, -1):
        c = prod[i]
        if c:
            for j in range(r + 1):
                prod[i - r + j] = (prod[i - r + j] - c * mod[j]) % p
    out = prod[:r]
    return out + [0] * (r - len(out))


def poly_powmod_x(e, mod, p):
    """x^e modulo the monic polynomial `mod`, coefficients mod p."""
    r = len(mod) - 1
    result = [1] + [0] * (r - 1)
    base = ([0, 1] + [0] * (r - 2))[:r] if r > 1 else [(-mod[0]) % p]
    while e:
        if e & 1:
            result = poly_mulmod(result, base, mod, p)
        base = poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def poly_gcd(a, b, p):
    a, b = a[:], b[:]
    while any(b):
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
        shift = len(a) - len(b)
        c = a[-1] * inv % p
        for j in range(len(b)):
            a[shift + j] = (a[shift + j] - c * b[j]) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def has_root(coeffs, p):
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            return True
    return False


def is_irreducible(coeffs, p):
    """Irreducibility of the monic polynomial `coeffs` over F_p (deg <= 4)."""
    r = len(coeffs) - 1
    if r == 1:
        return True
    if coeffs[0] == 0 or has_root(coeffs, p):
        return False
    if r <= 3:
        return True  # no linear factor suffices for degrees 2 and 3
    # degree 4: rule out a split into two irreducible quadratics (Rabin)
    xq = poly_powmod_x(p ** r, coeffs, p)
    x = [0, 1] + [0] * (r - 2)
    if xq != x:
        return False
    xe = poly_powmod_x(p ** (r // 2), coeffs, p)
    diff = [(a - b) % p for a, b in zip(xe, x)]
    return len(poly_gcd(coeffs[:], diff, p)) <= 1


def first_irreducible(p, r):
    if r == 1:
        return [0, 1]  # x itself, the lex-first monic linear polynomial
    for c0 in range(1, p):  # c0 = 0 is divisible by x
        for rest in product(range(p), repeat=r - 1):
            coeffs = [c0, *rest, 1]
            if is_irreducible(coeffs, p):
                return coeffs
    raise AssertionError(f"no irreducible polynomial found for p={p} r={r}")


def main():
    lines = ["# Defining polynomials: p r c_0 c_1 ... c_r (constant first, monic).",
             "# First irreducible in lexicographic coefficient order.",
             "# Generated by tools/gen_modulus_registry.py; do not edit by hand."]
    for p in PRIMES:
        for r in (1, 2, 3, 4):
            coeffs = first_irreducible(p, r)
            lines.append(f"{p} {r} " + " ".join(str(c) for c in coeffs))
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {OUT} ({len(PRIMES) * 4} entries)")


if __name__ == "__main__":
    main()
