#!/usr/bin/env python3
"""Generate the integer invariant tables for binary sextic forms.

Builds the degree-2/4/6 invariants of the generic binary sextic via
transvectants over Q, and the degree-10 invariant from the polynomial
discriminant.  Each invariant is normalized to a primitive integer
polynomial in the coefficients c0..c6, with signs fixed so that on the
reference family

    x^6 + c3*x^3 + c2*x^2 + c0        (characteristic 3)

the tables reduce to

    J2  = 0
    J4  = c2^3
    J6  = -c0^3 - c0*c2^3 + c3^6
    J10 = -c0*c2^6          (all mod 3)

The DISC6 table is 2^12 * J10, so the discriminant identity holds by
construction in every odd characteristic.

Writes src/g2strata/data/igusa_tables.txt.  Run from the repo root:

    python tools/gen_igusa_tables.py
"""

import sys
from functools import reduce
from math import gcd
from pathlib import Path

import sympy as sp
from sympy import Rational, binomial, factorial

X, Z = sp.symbols("X Z")
C = sp.symbols("c0:7")

OUT = Path(__file__).resolve().parent.parent / "src" / "g2strata" / "data" / "igusa_tables.txt"


def transvectant(F, G, m, n, k):
    """k-th transvectant of binary forms F (order m) and G (order n)."""
    pre = Rational(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n))
    s = sp.Integer(0)
    for j in range(k + 1):
        s += ((-1) ** j * binomial(k, j)
              * sp.diff(F, X, k - j, Z, j)
              * sp.diff(G, X, j, Z, k - j))
    return sp.expand(pre * s)


def as_terms(expr):
    """Poly terms as {exponent 7-tuple over c0..c6: Rational}."""
    poly = sp.Poly(expr, *C)
    return {tuple(int(e) for e in mono): coeff for mono, coeff in poly.terms()}


def primitive(terms):
    """Scale a rational-coefficient table to primitive integer form."""
    denoms = [Rational(c).q for c in terms.values()]
    L = reduce(sp.lcm, denoms, 1)
    ints = {e: int(c * L) for e, c in terms.items()}
    g = reduce(gcd, (abs(v) for v in ints.values()))
    return {e: v // g for e, v in ints.items()}


def check_isobaric(name, terms, degree, weight):
    for e in terms:
        assert sum(e) == degree, (name, e, "degree")
        assert sum(i * ei for i, ei in enumerate(e)) == weight, (name, e, "weight")


def restrict_family_mod3(terms):
    """Set c6=1, c5=c4=c1=0, reduce coefficients mod 3; drop zero terms."""
    out = {}
    for e, c in terms.items():
        if e[5] or e[4] or e[1]:
            continue
        key = (e[0], e[2], e[3])  # exponents of c0, c2, c3
        out[key] = (out.get(key, 0) + c) % 3
    return {k: v for k, v in out.items() if v % 3}


def fix_sign(name, terms, target_mod3):
    """Pick s in {+1,-1} so the family restriction matches target mod 3."""
    got = restrict_family_mod3(terms)
    want = {k: v % 3 for k, v in target_mod3.items() if v % 3}
    if got == want:
        return terms
    flipped = restrict_family_mod3({e: -c for e, c in terms.items()})
    if flipped == want:
        return {e: -c for e, c in terms.items()}
    raise SystemExit(f"{name}: family restriction {got} matches neither sign of {want}")


def main():
    f = sum(C[i] * X**i * Z ** (6 - i) for i in range(7))

    print("transvectants ...")
    A = transvectant(f, f, 6, 6, 6)        # invariant, degree 2
    i4 = transvectant(f, f, 6, 6, 4)       # order-4 covariant, degree 2
    B = transvectant(i4, i4, 4, 4, 4)      # invariant, degree 4
    delta = transvectant(i4, i4, 4, 4, 2)  # order-4 covariant, degree 4
    Cinv = transvectant(i4, delta, 4, 4, 4)  # invariant, degree 6
    assert sp.diff(A, X) == 0 and sp.diff(A, Z) == 0
    assert sp.diff(B, X) == 0 and sp.diff(B, Z) == 0
    assert sp.diff(Cinv, X) == 0 and sp.diff(Cinv, Z) == 0

    print("discriminant ...")
    disc = sp.discriminant(f.subs(Z, 1), X)

    J2 = primitive(as_terms(A))
    J4 = primitive(as_terms(B))
    J6 = primitive(as_terms(Cinv))
    J10 = primitive(as_terms(disc))

    check_isobaric("J2", J2, 2, 6)
    check_isobaric("J4", J4, 4, 12)
    check_isobaric("J6", J6, 6, 18)
    check_isobaric("J10", J10, 10, 30)

    # Sign conventions.  J2 is not pinned by the reference family (it
    # restricts to 0 mod 3); orient it so the c0*c6 coefficient is positive.
    if J2[(1, 0, 0, 0, 0, 0, 1)] < 0:
        J2 = {e: -c for e, c in J2.items()}
    assert restrict_family_mod3(J2) == {}, "J2 must vanish mod 3 on the family"

    J4 = fix_sign("J4", J4, {(0, 3, 0): 1})
    J6 = fix_sign("J6", J6, {(3, 0, 0): -1, (1, 3, 0): -1, (0, 0, 6): 1})
    J10 = fix_sign("J10", J10, {(1, 6, 0): -1})

    DISC6 = {e: 4096 * c for e, c in J10.items()}

    tables = [("J2", J2), ("J4", J4), ("J6", J6), ("J10", J10), ("DISC6", DISC6)]
    lines = ["# Invariant tables for the binary sextic c6*x^6 + ... + c1*x + c0.",
             "# Format: NAME coeff e0 e1 e2 e3 e4 e5 e6",
             "# Generated by tools/gen_igusa_tables.py; do not edit by hand."]
    for name, terms in tables:
        for e in sorted(terms, reverse=True):
            lines.append(f"{name} {terms[e]} " + " ".join(str(x) for x in e))
        print(f"{name}: {len(terms)} terms")
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    sys.exit(main())
