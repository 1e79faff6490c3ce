"""Spectrum scans: classify whole families of curves and histogram S.

Exhaustive mode sweeps every (f != 0, a, b, c); sample mode draws tuples from
a self-contained xorshift64* generator so runs are reproducible from the seed
alone, with no dependence on interpreter or library RNG state.  The d
dimension is covered either by two representatives {0, delta} with
Tr(delta) = 1 (the character sum only feels Tr(d)) or in full.

Every curve is checked against the quadratic-form prediction; any curve whose
S falls outside the admissible set, disagrees with the predicted |S|, or has
an impossible radical dimension lands in ``violations``.  A clean run is the
executable containment statement for the spectrum theorem.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import backend
from .curves import CSV_COLUMNS, CurveParams, SpectrumRecord, spectrum_values
from .errors import FieldTooLargeError, InvalidParamsError
from .field import FieldSpec, make_field

EXHAUSTIVE_DEFAULT_MAX_N = 7
SCAN_MAX_N = 21

_MASK64 = (1 << 64) - 1
_XS_MULT = 0x2545F4914F6CDD1D
_SEED_FALLBACK = 0x9E3779B97F4A7C15


class Xorshift64Star:
    """xorshift64* with the (12, 25, 27) shift triple; n-bit draws take the
    top n bits of the 64-bit output."""

    def __init__(self, seed: int):
        self.state = (seed & _MASK64) or _SEED_FALLBACK

    def next64(self) -> int:
        s = self.state
        s ^= s >> 12
        s ^= (s << 25) & _MASK64
        s ^= s >> 27
        self.state = s
        return (s * _XS_MULT) & _MASK64

    def bits(self, n: int) -> int:
        return self.next64() >> (64 - n)


def draw_coefficients(seed: int, count: int, n: int) -> list[tuple[int, int, int, int]]:
    """``count`` uniform (f, a, b, c) tuples with f != 0 (rejection on f)."""
    rng = Xorshift64Star(seed)
    out = []
    for _ in range(count):
        f = rng.bits(n)
        while f == 0:
            f = rng.bits(n)
        out.append((f, rng.bits(n), rng.bits(n), rng.bits(n)))
    return out


@dataclass
class ScanConfig:
    n: int
    mode: str = "exhaustive"
    sample_size: int = 0
    d_policy: str = "two_representatives"
    workers: int = 1
    output_path: str | None = None
    out_format: str = "csv"
    seed: int = 1
    modulus: int | None = None
    allow_large: bool = False


@dataclass
class ScanSummary:
    n: int
    mode: str
    d_policy: str
    seed: int | None
    curves_scanned: int
    spectrum: dict[int, int]
    violations: list[SpectrumRecord]
    consistency_failures: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "d_policy": self.d_policy,
            "seed": self.seed,
            "curves_scanned": self.curves_scanned,
            "spectrum": {str(k): self.spectrum[k] for k in sorted(self.spectrum)},
            "violations": [r.to_json_dict() for r in self.violations],
            "consistency_failures": self.consistency_failures,
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)


def tr1_representative(field: FieldSpec) -> int:
    """The first basis element with trace 1 (exists: the trace is onto)."""
    low = field.trace_mask & -field.trace_mask
    return low


def _w_ok(n: int, w) -> np.ndarray | bool:
    w_arr = np.asarray(w)
    if n >= 7:
        return np.isin(w_arr, (1, 3, 5))
    return (w_arr % 2 == 1) & (w_arr <= n)


def _record_line(fmt, f, a, b, c, d, S, N, w, vanish, consistent):
    if fmt == "csv":
        return (f"{f:#x},{a:#x},{b:#x},{c:#x},{d:#x},{S},{N},{w},"
                f"{'true' if vanish else 'false'},"
                f"{'true' if consistent else 'false'}")
    return json.dumps({
        "f": hex(f), "a": hex(a), "b": hex(b), "c": hex(c), "d": hex(d),
        "S": int(S), "N": str(N), "w": int(w),
        "q_vanishes_on_W": bool(vanish), "consistent": bool(consistent),
    })


class _Partial:
    """Accumulator shared by the worker bodies."""

    def __init__(self, want_records: bool):
        self.spectrum: Counter = Counter()
        self.consistency_failures = 0
        self.violations: list[tuple] = []
        self.curves = 0
        self.records: list[str] | None = [] if want_records else None


def _aggregate(part: _Partial, n, q, fs, as_, bs, cs, ws, vanish, S0,
               d_values, d_traces, fmt):
    """Fold per-curve kernel output (parallel arrays over curves) into the
    accumulator, expanding the d dimension."""
    t5 = np.asarray(spectrum_values(n), dtype=np.int64)
    S0 = np.asarray(S0, dtype=np.int64)
    ws_arr = np.asarray(ws, dtype=np.int64)
    van = np.asarray(vanish, dtype=np.uint8).astype(bool)
    expected = np.where(van, np.left_shift(1, (n + ws_arr) // 2), 0)
    ok_pred = np.abs(S0) == expected
    ok_t5 = np.isin(S0, t5)
    ok_w = _w_ok(n, ws_arr)
    ok = ok_pred & ok_t5 & ok_w

    n_tr0 = sum(1 for t in d_traces if t == 0)
    n_tr1 = len(d_traces) - n_tr0
    values, counts = np.unique(S0, return_counts=True)
    for v, cnt in zip(values, counts):
        if n_tr0:
            part.spectrum[int(v)] += int(cnt) * n_tr0
        if n_tr1:
            part.spectrum[int(-v)] += int(cnt) * n_tr1
    part.curves += len(S0) * len(d_values)
    part.consistency_failures += int((~ok_pred).sum()) * len(d_values)

    bad = np.nonzero(~ok)[0]
    for i in bad:
        i = int(i)
        for d, trd in zip(d_values, d_traces):
            S = -int(S0[i]) if trd else int(S0[i])
            part.violations.append(
                (fs[i], as_[i], bs[i], cs[i], d, S, int(ws_arr[i]),
                 bool(van[i]), bool(ok_pred[i] and ok_t5[i]))
            )

    if part.records is not None:
        for i in range(len(S0)):
            s0 = int(S0[i])
            w = int(ws_arr[i])
            v = bool(van[i])
            cons = bool(ok_pred[i] and ok_t5[i])
            for d, trd in zip(d_values, d_traces):
                S = -s0 if trd else s0
                part.records.append(_record_line(
                    fmt, fs[i], as_[i], bs[i], cs[i], d, S, q + 1 + S, w, v,
                    cons))


def _exhaustive_worker(args):
    (n, modulus, tmask, f_values, d_values, d_traces, want_records, fmt) = args
    q = 1 << n
    ctx = backend.active.make_scan_context(n, modulus, tmask)
    part = _Partial(want_records)
    cs = list(range(q))
    for f in f_values:
        for a in range(q):
            for b in range(q):
                w, vanish, S0 = backend.active.scan_block(ctx, f, a, b)
                _aggregate(part, n, q, [f] * q, [a] * q, [b] * q, cs,
                           [w] * q, vanish, S0, d_values, d_traces, fmt)
    return (dict(part.spectrum), part.consistency_failures, part.violations,
            part.curves, part.records)


def _sample_worker(args):
    (n, modulus, tmask, tuples, d_values, d_traces, want_records, fmt) = args
    q = 1 << n
    ctx = backend.active.make_scan_context(n, modulus, tmask)
    part = _Partial(want_records)
    if tuples:
        fs = [t[0] for t in tuples]
        as_ = [t[1] for t in tuples]
        bs = [t[2] for t in tuples]
        cs = [t[3] for t in tuples]
        S0, ws, vanish = backend.active.classify_many(ctx, fs, as_, bs, cs)
        _aggregate(part, n, q, fs, as_, bs, cs, ws, vanish, S0,
                   d_values, d_traces, fmt)
    return (dict(part.spectrum), part.consistency_failures, part.violations,
            part.curves, part.records)


def _merge(parent_field: FieldSpec, results, want_records):
    spectrum: Counter = Counter()
    cons_fail = 0
    viol_tuples: list[tuple] = []
    curves = 0
    records: list[str] = []
    for spec_dict, cf, viols, cur, recs in results:
        spectrum.update(spec_dict)
        cons_fail += cf
        viol_tuples.extend(viols)
        curves += cur
        if want_records and recs is not None:
            records.extend(recs)
    viol_tuples.sort(key=lambda t: t[:5])
    violations = []
    q = parent_field.q
    for f, a, b, c, d, S, w, van, cons in viol_tuples:
        violations.append(SpectrumRecord(
            params=CurveParams(parent_field, f, a, b, c, d),
            S=S, N=q + 1 + S, w=w, q_vanishes_on_W=van, consistent=cons,
        ))
    return spectrum, cons_fail, violations, curves, records


def run_scan(cfg: ScanConfig) -> ScanSummary:
    if cfg.mode not in ("exhaustive", "sample"):
        raise InvalidParamsError(f"unknown scan mode {cfg.mode!r}")
    if cfg.d_policy not in ("two_representatives", "full"):
        raise InvalidParamsError(f"unknown d policy {cfg.d_policy!r}")
    if cfg.out_format not in ("csv", "jsonl"):
        raise InvalidParamsError(f"unknown output format {cfg.out_format!r}")
    if cfg.workers < 1:
        raise InvalidParamsError("workers must be >= 1")
    if cfg.n > SCAN_MAX_N:
        raise FieldTooLargeError(
            f"scans are capped at n <= {SCAN_MAX_N}, got {cfg.n}"
        )
    if cfg.mode == "exhaustive" and cfg.n > EXHAUSTIVE_DEFAULT_MAX_N \
            and not cfg.allow_large:
        raise FieldTooLargeError(
            f"exhaustive scans default to n <= {EXHAUSTIVE_DEFAULT_MAX_N}; "
            "pass allow_large=True (--force-large) to override"
        )
    if cfg.mode == "sample" and cfg.sample_size <= 0:
        raise InvalidParamsError("sample mode needs sample_size > 0")

    field = make_field(cfg.n, cfg.modulus)
    q = field.q
    if cfg.d_policy == "two_representatives":
        d_values = [0, tr1_representative(field)]
    else:
        d_values = list(range(q))
    d_traces = [field.trace(d) for d in d_values]
    want_records = cfg.output_path is not None

    if cfg.mode == "exhaustive":
        f_all = list(range(1, q))
        chunks = [f_all[k::cfg.workers] for k in range(cfg.workers)]
        args = [(cfg.n, field.modulus, field.trace_mask, chunk, d_values,
                 d_traces, want_records, cfg.out_format)
                for chunk in chunks if chunk]
        worker = _exhaustive_worker
        seed: int | None = None
    else:
        tuples = draw_coefficients(cfg.seed, cfg.sample_size, cfg.n)
        step = (len(tuples) + cfg.workers - 1) // cfg.workers
        chunks = [tuples[i:i + step] for i in range(0, len(tuples), step)]
        args = [(cfg.n, field.modulus, field.trace_mask, chunk, d_values,
                 d_traces, want_records, cfg.out_format)
                for chunk in chunks if chunk]
        worker = _sample_worker
        seed = cfg.seed

    if len(args) <= 1 or cfg.workers == 1:
        results = [worker(a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(worker, args))
    spectrum, cons_fail, violations, curves, records = _merge(
        field, results, want_records)

    if want_records:
        if cfg.mode == "exhaustive" and cfg.workers > 1:
            records.sort(key=_record_sort_key(cfg.out_format))
        with open(cfg.output_path, "w") as fh:
            if cfg.out_format == "csv":
                fh.write(",".join(CSV_COLUMNS) + "\n")
            for line in records:
                fh.write(line + "\n")

    return ScanSummary(
        n=cfg.n,
        mode=cfg.mode,
        d_policy=cfg.d_policy,
        seed=seed,
        curves_scanned=curves,
        spectrum=dict(spectrum),
        violations=violations,
        consistency_failures=cons_fail,
    )


def _record_sort_key(fmt):
    if fmt == "csv":
        def key(line):
            parts = line.split(",", 5)
            return tuple(int(p, 16) for p in parts[:5])
    else:
        def key(line):
            d = json.loads(line)
            return tuple(int(d[k], 16) for k in ("f", "a", "b", "c", "d"))
    return key
