"""Vectorized field arithmetic and block classification for the enumerator.

Elements are carried as canonical indices (the base-p positional encoding of
field.py).  Prime fields use direct modular arithmetic; extension fields use
precomputed q x q index tables, which stay cache-resident for every field in
scope.  The stratification enumerates monic models on a (c2, c1, c0) grid per
outer (c4, c3) pair, so invariant tables are evaluated in three Horner-like
stages, one grid axis at a time, and everything that depends only on outer
coefficients is folded into per-pair scalars up front.
"""

import numpy as np

from .poly import load_tables

MAX_TABLE_EXP = 12
# elements per scratch block; bounds the slab of c2 values processed at once
BLOCK_ELEMS = 1 << 24


class VecField:
    """Index-encoded arithmetic over one field, vectorized with numpy."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.p = ctx.p
        self.r = ctx.r
        self.q = ctx.q
        self.prime = ctx.r == 1
        q, p, r = self.q, self.p, self.r
        self.arange = np.arange(q, dtype=np.int32)
        if self.prime:
            self.MUL = self.ADD = self.PPOW = None
            self.NEG = ((-self.arange) % p).astype(np.int32)
        else:
            digits = np.empty((q, r), dtype=np.int64)
            idx = np.arange(q, dtype=np.int64)
            for k in range(r):
                digits[:, k] = idx % p
                idx //= p
            pvec = p ** np.arange(r, dtype=np.int64)
            self.ADD = (((digits[:, None, :] + digits[None, :, :]) % p)
                        @ pvec).astype(np.int32)
            conv = np.zeros((q, q, 2 * r - 1), dtype=np.int64)
            for i in range(r):
                for j in range(r):
                    conv[:, :, i + j] += digits[:, None, i] * digits[None, :, j]
            out = conv[:, :, :r].copy()
            for k in range(r, 2 * r - 1):
                row = ctx._red[k - r]
                for t in range(r):
                    if row[t]:
                        out[:, :, t] += conv[:, :, k] * row[t]
            self.MUL = ((out % p) @ pvec).astype(np.int32)
            self.NEG = (((-digits) % p) @ pvec).astype(np.int32)
            self.PPOW = self.pow_all(self.arange, p)
        self.INV = self.pow_all(self.arange, q - 2)
        self.INV[0] = 0
        pow_table = np.empty((MAX_TABLE_EXP + 1, q), dtype=np.int32)
        pow_table[0] = 1
        for e in range(1, MAX_TABLE_EXP + 1):
            pow_table[e] = self.mul(pow_table[e - 1], self.arange)
        self.POW = pow_table

    # -- elementwise operations (indices in, indices out) -------------------

    def mul(self, a, b):
        if self.prime:
            return (a * b) % self.p
        return self.MUL[a, b]

    def add(self, a, b):
        if self.prime:
            return (a + b) % self.p
        return self.ADD[a, b]

    def sub(self, a, b):
        if self.prime:
            return (a - b) % self.p
        return self.ADD[a, self.NEG[b]]

    def neg(self, a):
        return self.NEG[a]

    def inv0(self, a):
        """Inverse with the convention inv(0) = 0 (callers mask zeros)."""
        return self.INV[a]

    def pw(self, a):
        """Entrywise p-th power (identity on prime fields)."""
        if self.prime:
            return a
        return self.PPOW[a]

    def pow_all(self, base, e):
        result = np.ones_like(np.asarray(base), dtype=np.int32)
        base = np.asarray(base, dtype=np.int32)
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def lincomb(self, weights, rows):
        """sum_k weights[k] * rows[k] with field semantics; rows is (k, n)."""
        if self.prime:
            return (weights.astype(np.int64)[:, None] * rows).sum(axis=0) % self.p
        acc = self.mul(weights[0], rows[0])
        for k in range(1, len(weights)):
            acc = self.add(acc, self.mul(weights[k], rows[k]))
        return acc


# -- invariant tables folded for grid evaluation --------------------------------


def fold_branch(vf, c6val, c5val):
    """Fold c6, c5 (0/1) and the outer (c4, c3) plane into the tables.

    Returns {name: [(e2, [(e1, E0, W), ...]), ...]} where W is (k, q^2) of
    folded coefficients indexed by pair = c4_index * q + c3_index.
    """
    tables = load_tables()
    q = vf.q
    i4 = np.repeat(vf.arange, q)
    i3 = np.tile(vf.arange, q)
    out = {}
    for name in ("J2", "J4", "J6", "J10"):
        table = tables[name]
        buckets = {}
        for cmodp, (_, expo) in zip(table.coeffs_mod_p(vf.p), table.terms):
            if cmodp == 0:
                continue
            e0, e1, e2, e3, e4, e5, e6 = expo
            if (e6 and not c6val) or (e5 and not c5val):
                continue
            w = vf.mul(vf.POW[e4][i4], vf.POW[e3][i3])
            if cmodp != 1:
                w = vf.mul(np.int32(cmodp), w)
            key = (e2, e1, e0)
            buckets[key] = w if key not in buckets else vf.add(buckets[key], w)
        tree = {}
        for (e2, e1, e0), w in buckets.items():
            tree.setdefault(e2, {}).setdefault(e1, []).append((e0, w))
        groups = []
        for e2 in sorted(tree):
            sub = []
            for e1 in sorted(tree[e2]):
                items = sorted(tree[e2][e1], key=lambda t: t[0])
                e0s = np.array([e for e, _ in items], dtype=np.int32)
                w = np.stack([arr for _, arr in items])
                sub.append((e1, e0s, w))
            groups.append((e2, sub))
        out[name] = groups
    return out


def eval_folded(vf, groups, pair, c2lo, c2hi):
    """Table value on the (c2 slab, c1, c0) grid for one outer pair."""
    pow_t = vf.POW
    v = None
    for e2, sub in groups:
        s = None
        for e1, e0s, w in sub:
            rvec = vf.lincomb(w[:, pair], pow_t[e0s])
            t = vf.mul(pow_t[e1][:, None], rvec[None, :])
            s = t if s is None else vf.add(s, t)
        t3 = vf.mul(pow_t[e2][c2lo:c2hi, None, None], s[None, :, :])
        v = t3 if v is None else vf.add(v, t3)
    if v is None:
        v = np.zeros((c2hi - c2lo, vf.q, vf.q), dtype=np.int32)
    return v


# -- Cartier classification on blocks -------------------------------------------


def _rank_code(vf, m00, m01, m10, m11):
    det = vf.sub(vf.mul(m00, m11), vf.mul(m01, m10))
    allzero = np.equal(m00, 0) & np.equal(m01, 0) & np.equal(m10, 0) & np.equal(m11, 0)
    return np.where(det != 0, 2, np.where(allzero, 0, 1))


def classify_bytes(vf, coeffs):
    """Stratum bytes (p_rank | a_number << 2) for broadcastable coefficient
    arrays c0..c6; shapes follow numpy broadcasting."""
    p = vf.p
    m = (p - 1) // 2
    if m == 1:
        hp1, hp2, h2p1, h2p2 = coeffs[2], coeffs[1], coeffs[5], coeffs[4]
    else:
        cap = 2 * p
        shape = np.broadcast_shapes(*(np.shape(c) for c in coeffs))
        h = np.zeros(shape + (min(7, cap),), dtype=np.int32)
        for j in range(min(7, cap)):
            h[..., j] = coeffs[j]
        length = min(7, cap)
        for _ in range(m - 1):
            new_len = min(length + 6, cap)
            hn = np.zeros(shape + (new_len,), dtype=np.int64 if vf.prime else np.int32)
            for j in range(7):
                cj = coeffs[j]
                if isinstance(cj, int) and cj == 0:
                    continue
                seg = min(length, new_len - j)
                if seg <= 0:
                    continue
                if vf.prime:
                    hn[..., j:j + seg] += np.asarray(cj)[..., None] * h[..., :seg] \
                        if np.ndim(cj) else cj * h[..., :seg]
                else:
                    hn[..., j:j + seg] = vf.add(
                        hn[..., j:j + seg],
                        vf.mul(np.asarray(cj)[..., None] if np.ndim(cj) else cj,
                               h[..., :seg]))
            if vf.prime:
                hn %= p
            h = hn.astype(np.int32)
            length = new_len
        hp1, hp2 = h[..., p - 1], h[..., p - 2]
        h2p1, h2p2 = h[..., 2 * p - 1], h[..., 2 * p - 2]
    a00, a01, a10, a11 = hp1, hp2, h2p1, h2p2
    b00, b01, b10, b11 = vf.pw(a00), vf.pw(a01), vf.pw(a10), vf.pw(a11)
    m00 = vf.add(vf.mul(b00, a00), vf.mul(b01, a10))
    m01 = vf.add(vf.mul(b00, a01), vf.mul(b01, a11))
    m10 = vf.add(vf.mul(b10, a00), vf.mul(b11, a10))
    m11 = vf.add(vf.mul(b10, a01), vf.mul(b11, a11))
    p_rank = _rank_code(vf, m00, m01, m10, m11)
    a_number = 2 - _rank_code(vf, a00, a01, a10, a11)
    return (p_rank | (a_number << 2)).astype(np.uint8)


# -- absolute invariants on blocks ----------------------------------------------


def g2_columns(vf, j2, j4, j6, j10):
    """Index triples (g1, g2, g3) per the three-case chart; garbage where
    j10 = 0 (callers mask by smoothness)."""
    inv10 = vf.inv0(j10)
    sq2 = vf.mul(j2, j2)
    p5_2 = vf.mul(vf.mul(sq2, sq2), j2)
    g1_1 = vf.mul(p5_2, inv10)
    g2_1 = vf.mul(vf.mul(vf.mul(sq2, j2), j4), inv10)
    g3_1 = vf.mul(vf.mul(sq2, j6), inv10)
    inv10_2 = vf.mul(inv10, inv10)
    sq4 = vf.mul(j4, j4)
    g2_2 = vf.mul(vf.mul(vf.mul(sq4, sq4), j4), inv10_2)
    g3_2 = vf.mul(vf.mul(j4, j6), inv10)
    sq6 = vf.mul(j6, j6)
    g3_3 = vf.mul(vf.mul(vf.mul(sq6, sq6), j6), vf.mul(inv10_2, inv10))
    b1 = j2 != 0
    b2 = j4 != 0
    zero = np.int32(0)
    g1 = np.where(b1, g1_1, zero)
    g2 = np.where(b1, g2_1, np.where(b2, g2_2, zero))
    g3 = np.where(b1, g3_1, np.where(b2, g3_2, g3_3))
    return g1, g2, g3


# -- scattered batches (property tests and spot checks) --------------------------


def batch_pow_pyramid(vf, col, max_e):
    out = [np.ones_like(col)]
    for _ in range(max_e):
        out.append(vf.mul(out[-1], col))
    return out


def batch_eval_table(vf, table, cols):
    """Direct per-term evaluation of one invariant table on (N,) columns."""
    max_e = max(max(expo) for _, expo in table.terms)
    pyr = [batch_pow_pyramid(vf, np.asarray(c, dtype=np.int32), max_e) for c in cols]
    acc = np.zeros_like(np.asarray(cols[0], dtype=np.int32))
    for cmodp, (_, expo) in zip(table.coeffs_mod_p(vf.p), table.terms):
        if cmodp == 0:
            continue
        term = None
        for j, e in enumerate(expo):
            if e:
                term = pyr[j][e] if term is None else vf.mul(term, pyr[j][e])
        term = np.full_like(acc, cmodp) if term is None else (
            vf.mul(np.int32(cmodp), term) if cmodp != 1 else term)
        acc = vf.add(acc, term)
    return acc


def batch_igusa(vf, cols):
    tables = load_tables()
    return tuple(batch_eval_table(vf, tables[n], cols)
                 for n in ("J2", "J4", "J6", "J10"))
