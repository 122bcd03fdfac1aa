"""Exhaustive stratification of the genus-2 moduli space over F_q.

The enumeration covers (i) monic degree-6 models with c5 in {0, 1} and
(ii) monic degree-5 models: 3*q^5 forms.  Every curve over F_q (q odd) has
a model y^2 = c*g(x) with g monic of degree 5 or 6; dropping c is a
quadratic twist with the same invariants and classification, and for
degree 6 the substitution x -> lambda*x, y -> lambda^3*y rescales c5 to 0
or 1.  So the stream reaches every moduli point, roughly q^2 times over -
redundancy that powers the write-once consistency check.

Cells are one byte each: 255 = uncovered, otherwise p_rank | a_number << 2,
at index g1 + q*g2 + q^2*g3 in the canonical element encoding.
"""

import json
import struct
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernel
from .cartier import STRATUM_BY_RANKS
from .errors import (ConsistencyViolation, IncompleteCoverage, ShardMismatch,
                     TheoremViolation, WrongCharacteristic, CorruptResultFile)
from .field import FieldCtx, make_field
from .forms import SexticForm

UNCOVERED = 255

BYTE_ORDINARY = 2        # p_rank 2, a_number 0
BYTE_NON_ORDINARY = 5    # p_rank 1, a_number 1
BYTE_SUPERSINGULAR = 4   # p_rank 0, a_number 1
BYTE_SUPERSPECIAL = 8    # p_rank 0, a_number 2

_BRANCHES = ((1, 0), (1, 1), (0, 1))  # (c6, c5): monic sextics, then quintics


@dataclass
class StrataCounts:
    """Stratum sizes over one field plus the deviations from q, q(q-1), q^2(q-1)."""
    q: int
    S: int
    N: int
    O: int
    SP: int

    def __post_init__(self):
        if self.S + self.N + self.O != self.q ** 3:
            raise ConsistencyViolation(
                f"S + N + O = {self.S + self.N + self.O} != q^3 = {self.q ** 3}")
        if self.delta0 + self.delta1 + self.delta2 != 0:
            raise ConsistencyViolation("delta identities violated")

    @property
    def delta0(self):
        return self.S - self.q

    @property
    def delta1(self):
        return self.N - self.q * (self.q - 1)

    @property
    def delta2(self):
        return self.O - self.q ** 2 * (self.q - 1)


class StrataTable:
    """Dense q^3 map from invariant triples to (covered, p_rank, a_number)."""

    def __init__(self, ctx, cells=None, forms_scanned=0, singular_skipped=0,
                 shards=1, shard_id=None):
        q3 = ctx.q ** 3
        self.ctx = ctx
        self.cells = (np.full(q3, UNCOVERED, dtype=np.uint8)
                      if cells is None else cells)
        assert self.cells.shape == (q3,)
        self.forms_scanned = forms_scanned
        self.singular_skipped = singular_skipped
        self.conflicts = 0  # a nonzero value never survives; kept for reports
        self.shards = shards
        self.shard_id = shard_id

    def cell(self, g1, g2, g3):
        q = self.ctx.q
        idx = tuple(x if isinstance(x, int) else x.index for x in (g1, g2, g3))
        b = int(self.cells[idx[0] + q * idx[1] + q * q * idx[2]])
        if b == UNCOVERED:
            return (False, None, None)
        return (True, b & 3, b >> 2)

    def coverage_complete(self):
        return not (self.cells == UNCOVERED).any()

    def counts(self):
        if not self.coverage_complete():
            missing = np.flatnonzero(self.cells == UNCOVERED)
            raise IncompleteCoverage(
                f"{missing.size} uncovered triples, first: "
                f"{[_decode_triple(self.ctx.q, int(i)) for i in missing[:5]]}")
        hist = np.bincount(self.cells, minlength=256)
        return StrataCounts(
            q=self.ctx.q,
            S=int(hist[BYTE_SUPERSINGULAR] + hist[BYTE_SUPERSPECIAL]),
            N=int(hist[BYTE_NON_ORDINARY]),
            O=int(hist[BYTE_ORDINARY]),
            SP=int(hist[BYTE_SUPERSPECIAL]),
        )


def _decode_triple(q, flat):
    return (flat % q, (flat // q) % q, flat // (q * q))


def enumerate_models(ctx):
    """The deterministic 3*q^5 stream of monic models (degree 6 then 5)."""
    q = ctx.q
    elems = [ctx.from_index(i) for i in range(q)]
    for c6v, c5v in _BRANCHES:
        c6 = elems[c6v]
        c5 = elems[c5v]
        for i4 in range(q):
            for i3 in range(q):
                for i2 in range(q):
                    for i1 in range(q):
                        for i0 in range(q):
                            yield SexticForm(ctx, (elems[i0], elems[i1],
                                                   elems[i2], elems[i3],
                                                   elems[i4], c5, c6))


def _raise_conflict(ctx, q, branch, pair, c2lo, smooth, cells_flat, vals,
                    table, positions):
    flat_grid = np.flatnonzero(smooth.ravel())
    pos = int(positions[0])
    grid_flat = int(flat_grid[pos])
    qq = q * q
    i2 = c2lo + grid_flat // qq
    i1 = (grid_flat // q) % q
    i0 = grid_flat % q
    i4, i3 = divmod(pair, q)
    c6v, c5v = branch
    model = (i0, i1, i2, i3, i4, c5v, c6v)
    cell = _decode_triple(q, int(cells_flat[pos]))
    raise ConsistencyViolation(
        f"moduli cell {cell} already classified as byte "
        f"{int(table[int(cells_flat[pos])])} but model c={model} over "
        f"F_{ctx.q} gives byte {int(vals[pos])}")


def stratify_field(ctx, shards=1, shard_id=0):
    """Classify every smooth model whose (c4, c3) pair falls in this shard.

    Returns a partial StrataTable; ConsistencyViolation aborts on the first
    moduli point that two models classify differently (always a bug: p-rank
    and a-number are geometric invariants).
    """
    if not 0 <= shard_id < shards:
        raise ShardMismatch(f"shard_id {shard_id} outside 0..{shards - 1}")
    vf = _kernel.VecField(ctx)
    q = vf.q
    table = np.full(q ** 3, UNCOVERED, dtype=np.uint8)
    scanned = 0
    skipped = 0
    pairs = range(shard_id, q * q, shards)
    c0b = vf.arange.reshape(1, 1, q)
    c1b = vf.arange.reshape(1, q, 1)
    slab = max(1, min(q, _kernel.BLOCK_ELEMS // (q * q * max(2 * vf.p, 8))))
    for branch in _BRANCHES:
        c6v, c5v = branch
        folded = _kernel.fold_branch(vf, c6v, c5v)
        for pair in pairs:
            i4, i3 = divmod(pair, q)
            for c2lo in range(0, q, slab):
                c2hi = min(q, c2lo + slab)
                j2 = _kernel.eval_folded(vf, folded["J2"], pair, c2lo, c2hi)
                j4 = _kernel.eval_folded(vf, folded["J4"], pair, c2lo, c2hi)
                j6 = _kernel.eval_folded(vf, folded["J6"], pair, c2lo, c2hi)
                j10 = _kernel.eval_folded(vf, folded["J10"], pair, c2lo, c2hi)
                smooth = j10 != 0
                n = smooth.size
                scanned += n
                n_smooth = int(np.count_nonzero(smooth))
                skipped += n - n_smooth
                if n_smooth == 0:
                    continue
                coeffs = (c0b, c1b, vf.arange[c2lo:c2hi].reshape(-1, 1, 1),
                          i3, i4, c5v, c6v)
                byte = np.broadcast_to(_kernel.classify_bytes(vf, coeffs),
                                       smooth.shape)
                g1, g2, g3 = _kernel.g2_columns(vf, j2, j4, j6, j10)
                cell = (g1.astype(np.int64)
                        + q * g2.astype(np.int64)
                        + q * q * g3.astype(np.int64))
                idx = cell[smooth]
                val = byte[smooth]
                prev = table[idx]
                bad = (prev != UNCOVERED) & (prev != val)
                if bad.any():
                    _raise_conflict(ctx, q, branch, pair, c2lo, smooth, idx,
                                    val, table, np.flatnonzero(bad))
                table[idx] = val
                bad = table[idx] != val
                if bad.any():
                    _raise_conflict(ctx, q, branch, pair, c2lo, smooth, idx,
                                    val, table, np.flatnonzero(bad))
    return StrataTable(ctx, table, scanned, skipped, shards, shard_id)


def merge_and_report(parts):
    """Merge partial tables, enforce write-once consistency and coverage."""
    if not parts:
        raise ShardMismatch("nothing to merge")
    ctx = parts[0].ctx
    shards = parts[0].shards
    seen = set()
    for part in parts:
        if part.ctx.key() != ctx.key() or part.shards != shards:
            raise ShardMismatch("partial tables come from different runs")
        if part.shard_id in seen:
            raise ShardMismatch(f"duplicate shard {part.shard_id}")
        seen.add(part.shard_id)
    if seen != set(range(shards)):
        raise ShardMismatch(f"missing shards: {sorted(set(range(shards)) - seen)}")
    merged = np.full(ctx.q ** 3, UNCOVERED, dtype=np.uint8)
    scanned = skipped = 0
    for part in sorted(parts, key=lambda t: t.shard_id):
        cells = part.cells
        both = (merged != UNCOVERED) & (cells != UNCOVERED)
        disagree = both & (merged != cells)
        if disagree.any():
            flat = int(np.flatnonzero(disagree)[0])
            raise ConsistencyViolation(
                f"shards disagree at cell {_decode_triple(ctx.q, flat)}: "
                f"{int(merged[flat])} vs {int(cells[flat])}")
        np.copyto(merged, cells, where=(cells != UNCOVERED))
        scanned += part.forms_scanned
        skipped += part.singular_skipped
    out = StrataTable(ctx, merged, scanned, skipped, shards=shards)
    return out, out.counts()


def _shard_worker(args):
    p, r, modulus, shards, shard_id = args
    ctx = make_field(p, r, modulus)
    part = stratify_field(ctx, shards=shards, shard_id=shard_id)
    return (shard_id, part.cells.tobytes(), part.forms_scanned,
            part.singular_skipped)


def run_stratification(ctx, threads=1, shards=None):
    """Full stratification across worker processes; deterministic merge."""
    if shards is None:
        shards = threads
    shards = max(1, min(shards, ctx.q ** 2))
    if threads <= 1 or shards == 1:
        parts = [stratify_field(ctx, shards=shards, shard_id=s)
                 for s in range(shards)]
    else:
        args = [(ctx.p, ctx.r, ctx.modulus, shards, s) for s in range(shards)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            raw = list(pool.map(_shard_worker, args))
        parts = [StrataTable(ctx, np.frombuffer(cells, dtype=np.uint8).copy(),
                             scanned, skipped, shards=shards, shard_id=sid)
                 for sid, cells, scanned, skipped in raw]
    return merge_and_report(parts)


# -- theorem checks --------------------------------------------------------------


@dataclass
class TheoremReport:
    description: str
    checked: int
    ok: bool
    counterexamples: list


def verify_theorem1(ctx, table):
    """non-ordinary <=> (g1 = 0, g2 != 0); also the ordinary and supersingular
    descriptions.  Characteristic 3 only."""
    if ctx.p != 3:
        raise WrongCharacteristic("classification is proved in characteristic 3")
    q = ctx.q
    cells = table.cells
    if not table.coverage_complete():
        raise IncompleteCoverage("verify_theorem1 needs a completed table")
    idx = np.arange(q ** 3, dtype=np.int64)
    g1 = idx % q
    g2 = (idx // q) % q
    bad = np.flatnonzero(
        ((cells == BYTE_NON_ORDINARY) != ((g1 == 0) & (g2 != 0)))
        | ((cells == BYTE_ORDINARY) != (g1 != 0))
        | (((cells == BYTE_SUPERSINGULAR) | (cells == BYTE_SUPERSPECIAL))
           != ((g1 == 0) & (g2 == 0))))
    examples = [_decode_triple(q, int(i)) for i in bad[:10]]
    report = TheoremReport(
        "non-ordinary iff g1 = 0 and g2 != 0 (plus ordinary/supersingular loci)",
        checked=q ** 3, ok=bad.size == 0, counterexamples=examples)
    if not report.ok:
        raise TheoremViolation(f"classification failed at {examples}")
    return report


def verify_strata_formulas(counts, p):
    """Assert the exact strata sizes in characteristic 3; report deltas otherwise."""
    deltas = (counts.delta0, counts.delta1, counts.delta2)
    if p == 3:
        ok = deltas == (0, 0, 0)
        report = TheoremReport("S = q, N = q(q-1), O = q^2(q-1)",
                               checked=counts.q ** 3, ok=ok,
                               counterexamples=[] if ok else [deltas])
        if not ok:
            raise TheoremViolation(f"strata sizes off by {deltas}")
        return report
    return TheoremReport(f"delta row for p = {p} (no assertion)",
                         checked=counts.q ** 3, ok=True,
                         counterexamples=[])


def superspecial_report(table):
    """All cells with a-number 2, as index triples, plus the count."""
    flats = np.flatnonzero(table.cells == BYTE_SUPERSPECIAL)
    triples = [_decode_triple(table.ctx.q, int(i)) for i in flats]
    return triples, len(triples)


# -- persistence ------------------------------------------------------------------

MAGIC = b"PRK2"
VERSION = 1


def write_result(path, table):
    ctx = table.ctx
    head = struct.pack("<4sHIHH", MAGIC, VERSION, ctx.p, ctx.r, len(ctx.modulus))
    head += struct.pack(f"<{len(ctx.modulus)}I", *ctx.modulus)
    head += struct.pack("<Q", ctx.q)
    body = table.cells.tobytes()
    crc = zlib.crc32(head + body) & 0xFFFFFFFF
    with open(path, "wb") as fh:
        fh.write(head)
        fh.write(body)
        fh.write(struct.pack("<I", crc))


def read_result(path):
    with open(path, "rb") as fh:
        blob = fh.read()
    if len(blob) < 18 or blob[:4] != MAGIC:
        raise CorruptResultFile(f"{path}: bad magic")
    crc = struct.unpack("<I", blob[-4:])[0]
    if zlib.crc32(blob[:-4]) & 0xFFFFFFFF != crc:
        raise CorruptResultFile(f"{path}: checksum mismatch")
    magic, version, p, r, nmod = struct.unpack_from("<4sHIHH", blob)
    off = struct.calcsize("<4sHIHH")
    modulus = struct.unpack_from(f"<{nmod}I", blob, off)
    off += 4 * nmod
    q = struct.unpack_from("<Q", blob, off)[0]
    off += 8
    cells = np.frombuffer(blob[off:-4], dtype=np.uint8).copy()
    ctx = make_field(p, r, modulus)
    if ctx.q != q or cells.size != q ** 3:
        raise CorruptResultFile(f"{path}: inconsistent sizes")
    return StrataTable(ctx, cells)


def summary_dict(table, counts, wall_seconds):
    ctx = table.ctx
    return {
        "p": ctx.p, "r": ctx.r, "q": ctx.q, "modulus": list(ctx.modulus),
        "S": counts.S, "N": counts.N, "O": counts.O, "SP": counts.SP,
        "delta0": counts.delta0, "delta1": counts.delta1,
        "delta2": counts.delta2,
        "forms_scanned": table.forms_scanned,
        "singular_skipped": table.singular_skipped,
        "wall_seconds": wall_seconds,
    }


def write_summary(path, table, counts, wall_seconds):
    with open(path, "w") as fh:
        json.dump(summary_dict(table, counts, wall_seconds), fh, indent=2)
        fh.write("\n")


__all__ = ["StrataCounts", "StrataTable", "enumerate_models", "stratify_field",
           "merge_and_report", "run_stratification", "verify_theorem1",
           "verify_strata_formulas", "superspecial_report", "write_result",
           "read_result", "write_summary", "summary_dict", "TheoremReport",
           "UNCOVERED", "STRATUM_BY_RANKS"]
