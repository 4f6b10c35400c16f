"""Census of connected graphs: enumeration, graph6 ingestion, statistics.

The built-in enumerator sweeps every edge mask on up to 7 vertices and keeps
the masks that are minimal over all vertex relabelings (canonical forms), so
each isomorphism class appears exactly once.  Larger orders come either from
graph6 files or from extend_census, which grows an order-m census to order
m+1 by attaching a new vertex in every possible way (complete, because every
connected graph has a non-cut vertex).

run_census streams any graph source through a batched eigensolve and merges
per-chunk moment accumulators in a fixed order, so results are identical for
any thread count.
"""

from __future__ import annotations

import csv
import itertools
import logging
import math
import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import eigen, graph6
from .graphs import Graph, is_connected, pair_count
from .indices import INDEX_NAMES, IndexStats, StatsSummary, indices_batch

log = logging.getLogger(__name__)

ENUM_MAX_ORDER = 7
CANON_MAX_ORDER = 8
HIST_BIN_WIDTH = 0.1

# connected graphs per order, for reporting and self-checks (OEIS A001349)
KNOWN_CONNECTED_COUNTS = {
    1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853,
    8: 11117, 9: 261080, 10: 11716571,
}


class OrderTooLargeError(ValueError):
    """Exhaustive work was requested beyond its supported order."""


class MixedOrdersError(ValueError):
    """A census source produced graphs of different orders."""


class EmptySourceError(ValueError):
    """A census source produced no graphs."""


class Graph6FileError(ValueError):
    """A graph6 file line failed to decode; message carries file:line."""


# ---------------------------------------------------------------------------
# canonical forms via permutation bit-action tables

def _perm_targets(m: int, perms: Sequence[Sequence[int]]) -> np.ndarray:
    """(n_perms, n_pairs) array: where each pair bit lands under each perm."""
    pairs = [(i, j) for j in range(1, m) for i in range(j)]
    arr = np.asarray(perms, dtype=np.int64)
    ii = arr[:, [i for i, _ in pairs]]
    jj = arr[:, [j for _, j in pairs]]
    lo = np.minimum(ii, jj)
    hi = np.maximum(ii, jj)
    return hi * (hi - 1) // 2 + lo


class _BitActionTables:
    """Permutation action on edge bitsets, 7 payload bits per lookup chunk.

    tables[c][t, v] is the image of chunk value v (bits 7c..7c+6) under
    permutation t, as a full-width mask; OR-ing chunk images gives the image
    of a whole bitset.  Widths up to 31 pair bits fit uint32 (order <= 8).
    """

    def __init__(self, m: int, perms: Sequence[Sequence[int]]) -> None:
        n_pairs = pair_count(m)
        if n_pairs > 31:
            raise OrderTooLargeError("bit-action tables support order <= 8")
        targets = _perm_targets(m, perms)
        self.n_perms = targets.shape[0]
        self.n_chunks = max(1, (n_pairs + 6) // 7)
        self.tables: list[np.ndarray] = []
        one = np.uint32(1)
        for c in range(self.n_chunks):
            width = min(7, n_pairs - 7 * c)
            tbl = np.zeros((self.n_perms, 128), dtype=np.uint32)
            contrib = [
                np.left_shift(one, targets[:, 7 * c + s].astype(np.uint32))
                for s in range(width)
            ]
            for v in range(1, 128):
                s = (v & -v).bit_length() - 1
                rest = v & (v - 1)
                if s < width:
                    tbl[:, v] = tbl[:, rest] | contrib[s]
                else:
                    tbl[:, v] = tbl[:, rest]
            self.tables.append(tbl)

    def apply_one(self, t: int, masks: np.ndarray) -> np.ndarray:
        """Image of an array of bitsets under permutation t."""
        out = self.tables[0][t][masks & 127]
        for c in range(1, self.n_chunks):
            out |= self.tables[c][t][(masks >> np.uint32(7 * c)) & 127]
        return out

    def orbit_min_batch(self, masks: np.ndarray) -> np.ndarray:
        """Minimum over all permutations, per mask (vectorized)."""
        acc = self.tables[0][:, masks & 127]
        for c in range(1, self.n_chunks):
            acc |= self.tables[c][:, (masks >> np.uint32(7 * c)) & 127]
        return acc.min(axis=0)


_FULL_TABLES: dict[int, _BitActionTables] = {}
_TRANS_TABLES: dict[int, _BitActionTables] = {}


def _full_tables(m: int) -> _BitActionTables:
    if m not in _FULL_TABLES:
        if m > CANON_MAX_ORDER:
            raise OrderTooLargeError(
                f"canonical forms are supported up to order {CANON_MAX_ORDER}"
            )
        _FULL_TABLES[m] = _BitActionTables(
            m, list(itertools.permutations(range(m)))
        )
    return _FULL_TABLES[m]


def _transposition_tables(m: int) -> _BitActionTables:
    if m not in _TRANS_TABLES:
        perms = []
        for a in range(m):
            for b in range(a + 1, m):
                p = list(range(m))
                p[a], p[b] = b, a
                perms.append(p)
        _TRANS_TABLES[m] = _BitActionTables(m, perms)
    return _TRANS_TABLES[m]


def canonical_bits(g: Graph) -> int:
    """Smallest edge bitset over all relabelings of g (order <= 8)."""
    if g.order == 1:
        return 0
    tables = _full_tables(g.order)
    return int(tables.orbit_min_batch(np.asarray([g.bits], dtype=np.uint32))[0])


def _canonical_of_masks(m: int, masks: np.ndarray, batch: int = 256) -> np.ndarray:
    tables = _full_tables(m)
    out = np.empty_like(masks)
    for start in range(0, masks.size, batch):
        sl = masks[start:start + batch]
        out[start:start + batch] = tables.orbit_min_batch(sl)
    return out


def enumerate_connected(m: int) -> list[Graph]:
    """All connected graphs on m vertices, one canonical graph per class.

    Returned in ascending bitset order.  Capped at order 7 (2^21 edge masks);
    larger orders must come from files or extend_census.
    """
    if m < 1:
        raise ValueError("order must be positive")
    if m > ENUM_MAX_ORDER:
        raise OrderTooLargeError(
            f"exhaustive enumeration is capped at order {ENUM_MAX_ORDER}"
        )
    if m == 1:
        return [Graph(1, 0)]

    masks = np.arange(1 << pair_count(m), dtype=np.uint32)
    trans = _transposition_tables(m)
    keep = np.ones(masks.size, dtype=bool)
    for t in range(trans.n_perms):
        np.logical_and(keep, masks <= trans.apply_one(t, masks), out=keep)
    cand = masks[keep]
    canon = cand[_canonical_of_masks(m, cand) == cand]
    graphs = (Graph(m, int(b)) for b in canon)
    return [g for g in graphs if is_connected(g)]


def extend_census(graphs: Sequence[Graph]) -> list[Graph]:
    """Grow a complete order-m census to order m+1 (canonical, connected).

    Attaches a new highest-numbered vertex to every nonempty neighborhood of
    every input graph, then canonicalizes and dedupes.  Complete because
    deleting a non-cut vertex of any connected graph lands back in the
    order-m census.
    """
    if not graphs:
        raise EmptySourceError("no graphs to extend")
    m = graphs[0].order
    if any(g.order != m for g in graphs):
        raise MixedOrdersError("extend_census needs a single-order census")
    if m + 1 > CANON_MAX_ORDER:
        raise OrderTooLargeError(
            f"extension needs canonical forms beyond order {CANON_MAX_ORDER}"
        )
    base = pair_count(m)
    cands = np.asarray(
        [
            g.bits | (attach << base)
            for g in graphs
            for attach in range(1, 1 << m)
        ],
        dtype=np.uint32,
    )
    canon = np.unique(_canonical_of_masks(m + 1, cands))
    return [Graph(m + 1, int(b)) for b in canon]


# ---------------------------------------------------------------------------
# graph6 file ingestion

class Graph6Source:
    """Iterable over the connected graphs of a graph6 file.

    Disconnected entries are skipped and counted in rejected_disconnected;
    malformed lines raise Graph6FileError with the file name and line number.
    """

    def __init__(self, path: str | os.PathLike[str]) -> None:
        self.path = os.fspath(path)
        self.read = 0
        self.rejected_disconnected = 0

    def __iter__(self) -> Iterator[Graph]:
        self.read = 0
        self.rejected_disconnected = 0
        header = graph6.HEADER.encode()
        with open(self.path, "rb") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if line.startswith(header):
                    line = line[len(header):]
                if not line:
                    continue
                try:
                    g = graph6.decode(line)
                except graph6.Graph6Error as exc:
                    raise Graph6FileError(f"{self.path}:{lineno}: {exc}") from exc
                self.read += 1
                if is_connected(g):
                    yield g
                else:
                    self.rejected_disconnected += 1
        if self.rejected_disconnected:
            log.warning(
                "%s: skipped %d disconnected graph(s)",
                self.path, self.rejected_disconnected,
            )


# ---------------------------------------------------------------------------
# the census pipeline

class Histogram:
    """Fixed-width value histogram; bin k covers [k*w, (k+1)*w)."""

    __slots__ = ("width", "counts")

    def __init__(self, width: float = HIST_BIN_WIDTH) -> None:
        self.width = width
        self.counts: dict[int, int] = {}

    def update_many(self, values: np.ndarray) -> None:
        bins = np.floor(np.asarray(values, dtype=float) / self.width).astype(np.int64)
        uniq, cnt = np.unique(bins, return_counts=True)
        for b, c in zip(uniq.tolist(), cnt.tolist()):
            self.counts[b] = self.counts.get(b, 0) + c

    def absorb(self, other: "Histogram") -> None:
        for b, c in other.counts.items():
            self.counts[b] = self.counts.get(b, 0) + c

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def rows(self) -> list[tuple[float, float, int]]:
        return [
            (b * self.width, (b + 1) * self.width, self.counts[b])
            for b in sorted(self.counts)
        ]


@dataclass
class CensusReport:
    """Aggregated spectral-index statistics over one census."""

    order: int
    count: int
    stats: dict[str, IndexStats]
    histograms: dict[str, Histogram]
    rejected_disconnected: int = 0

    def summaries(self) -> dict[str, StatsSummary]:
        return {name: self.stats[name].finalize() for name in INDEX_NAMES}


def _adjacency_stack(graphs: Sequence[Graph]) -> np.ndarray:
    m = graphs[0].order
    n_pairs = pair_count(m)
    n = len(graphs)
    mats = np.zeros((n, m, m))
    pairs = [(i, j) for j in range(1, m) for i in range(j)]
    iu = np.asarray([i for i, _ in pairs])
    ju = np.asarray([j for _, j in pairs])
    if n_pairs <= 63:
        bits = np.asarray([g.bits for g in graphs], dtype=np.uint64)
        cols = (bits[:, None] >> np.arange(n_pairs, dtype=np.uint64)) & np.uint64(1)
        cols = cols.astype(float)
    else:  # huge orders: plain per-graph fill
        cols = np.zeros((n, n_pairs))
        for r, g in enumerate(graphs):
            rest = g.bits
            while rest:
                low = rest & -rest
                cols[r, low.bit_length() - 1] = 1.0
                rest &= rest - 1
    mats[:, iu, ju] = cols
    mats[:, ju, iu] = cols
    return mats


def _chunk_payload(graphs: list[Graph], zero_tol: float | None):
    vals = eigen.spectra_batch(_adjacency_stack(graphs))
    per_index = indices_batch(vals, zero_tol)
    g6_cache: dict[int, str] = {}

    def witness(i: int) -> str:
        if i not in g6_cache:
            g6_cache[i] = graph6.encode(graphs[i])
        return g6_cache[i]

    stats = {}
    hists = {}
    for name in INDEX_NAMES:
        st = IndexStats()
        st.update_many(per_index[name], witness)
        stats[name] = st
        h = Histogram()
        h.update_many(per_index[name])
        hists[name] = h
    return len(graphs), stats, hists


def _chunked(source: Iterable[Graph], size: int) -> Iterator[list[Graph]]:
    buf: list[Graph] = []
    order: int | None = None
    for g in source:
        if order is None:
            order = g.order
        elif g.order != order:
            raise MixedOrdersError(
                f"census mixes orders {order} and {g.order}"
            )
        buf.append(g)
        if len(buf) >= size:
            yield buf
            buf = []
    if buf:
        yield buf


def run_census(source: Iterable[Graph], zero_tol: float | None = None,
               threads: int = 1, chunk_size: int = 2048) -> CensusReport:
    """Stream a single-order graph source into a CensusReport.

    Chunks are eigensolved in batch; per-chunk accumulators merge in chunk
    order, so the report is identical for any thread count.
    """
    stats = {name: IndexStats() for name in INDEX_NAMES}
    hists = {name: Histogram() for name in INDEX_NAMES}
    count = 0
    order = 0

    def merge(chunk_result) -> None:
        nonlocal count
        n, st, hs = chunk_result
        count += n
        for name in INDEX_NAMES:
            stats[name].absorb(st[name])
            hists[name].absorb(hs[name])

    chunks = _chunked(source, chunk_size)
    if threads <= 1:
        for chunk in chunks:
            order = chunk[0].order
            merge(_chunk_payload(chunk, zero_tol))
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            window: deque = deque()
            for chunk in chunks:
                order = chunk[0].order
                window.append(pool.submit(_chunk_payload, chunk, zero_tol))
                if len(window) >= threads + 2:
                    merge(window.popleft().result())
            while window:
                merge(window.popleft().result())

    if count == 0:
        raise EmptySourceError("census source yielded no graphs")
    return CensusReport(
        order=order,
        count=count,
        stats=stats,
        histograms=hists,
        rejected_disconnected=getattr(source, "rejected_disconnected", 0),
    )


# ---------------------------------------------------------------------------
# extremal queries and the classical extreme-value checks

@dataclass(frozen=True)
class ExtremalResult:
    index: str
    direction: str
    value: float
    witnesses: tuple[str, ...]
    overflow: int
    count: int


def extremal(source: Iterable[Graph], index: str, direction: str,
             zero_tol: float | None = None) -> ExtremalResult:
    """Extreme value of one index over a source, with graph6 witnesses."""
    if index not in INDEX_NAMES:
        raise ValueError(f"unknown index {index!r}; expected one of {INDEX_NAMES}")
    if direction not in ("min", "max"):
        raise ValueError("direction must be 'min' or 'max'")
    report = run_census(source, zero_tol)
    summary = report.stats[index].finalize()
    if direction == "min":
        value, wits, over = summary.minimum, summary.min_witnesses, summary.min_overflow
    else:
        value, wits, over = summary.maximum, summary.max_witnesses, summary.max_overflow
    assert value is not None  # count >= 1 guaranteed by run_census
    return ExtremalResult(
        index=index, direction=direction, value=value,
        witnesses=wits, overflow=over, count=report.count,
    )


def _is_complete(g: Graph) -> bool:
    return g.bits == (1 << pair_count(g.order)) - 1


def _is_path(g: Graph) -> bool:
    if g.order == 1:
        return True
    degs = sorted(g.degrees())
    return (is_connected(g)
            and degs == [1, 1] + [2] * (g.order - 2))


def _is_star(g: Graph) -> bool:
    if g.order <= 2:
        return _is_complete(g)
    degs = sorted(g.degrees())
    return degs == [1] * (g.order - 1) + [g.order - 1]


def _is_balanced_complete_bipartite(g: Graph) -> bool:
    from .graphs import detect_complete_multipartite

    parts = detect_complete_multipartite(g)
    m = g.order
    return parts == tuple(sorted((m // 2, m - m // 2)))


@dataclass(frozen=True)
class ClassicalCheck:
    name: str
    expected: float
    actual: float
    value_ok: bool
    witness_ok: bool
    counterexample: str | None

    @property
    def ok(self) -> bool:
        return self.value_ok and self.witness_ok


@dataclass(frozen=True)
class ClassicalReport:
    order: int
    checks: tuple[ClassicalCheck, ...]

    @property
    def holds(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_classical_extremes(m: int, graphs: Iterable[Graph] | None = None,
                              tol: float = 1e-8) -> ClassicalReport:
    """Check the textbook extreme values over a full order-m census.

    Each check pins the extreme value, requires the unique witness the
    classical result names, and reports the first offending graph6 string
    otherwise.  ``graphs`` defaults to the built-in enumeration.
    """
    if graphs is None:
        graphs = enumerate_connected(m)
    report = run_census(graphs)
    if report.order != m:
        raise MixedOrdersError(f"census order {report.order}, expected {m}")

    specs = [
        ("max lambda_max", "lambda_max", "max", float(m - 1), _is_complete),
        ("min lambda_max", "lambda_max", "min",
         2.0 * math.cos(math.pi / (m + 1.0)), _is_path),
        ("min lambda_min", "lambda_min", "min",
         -math.sqrt((m // 2) * (m - m // 2)), _is_balanced_complete_bipartite),
        ("max lambda_min", "lambda_min", "max", -1.0, _is_complete),
        ("min pow", "pow", "min", 2.0 * math.sqrt(m - 1.0), _is_star),
    ]
    checks = []
    for name, index, direction, expected, predicate in specs:
        summary = report.stats[index].finalize()
        if direction == "max":
            actual, wits, over = (summary.maximum, summary.max_witnesses,
                                  summary.max_overflow)
        else:
            actual, wits, over = (summary.minimum, summary.min_witnesses,
                                  summary.min_overflow)
        value_ok = actual is not None and abs(actual - expected) <= tol
        counterexample = None
        witness_ok = len(wits) == 1 and over == 0
        if not witness_ok and wits:
            counterexample = wits[-1]
        elif witness_ok and not predicate(graph6.decode(wits[0])):
            witness_ok = False
            counterexample = wits[0]
        checks.append(ClassicalCheck(
            name=name,
            expected=expected,
            actual=actual if actual is not None else math.nan,
            value_ok=value_ok,
            witness_ok=witness_ok,
            counterexample=counterexample,
        ))
    return ClassicalReport(order=m, checks=tuple(checks))


# ---------------------------------------------------------------------------
# CSV output

def _fmt(value: float | None) -> str:
    if value is None:
        return ""
    out = f"{value:.6f}"
    return "0.000000" if out == "-0.000000" else out


def write_stats_csv(report: CensusReport, path: str | os.PathLike[str]) -> None:
    """One row per index: moments, extremes, and extreme witnesses."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["index", "count", "mean", "std", "skewness", "kurtosis",
                    "min", "max", "argmin_g6", "argmax_g6"])
        for name in INDEX_NAMES:
            s = report.stats[name].finalize()
            w.writerow([
                name, s.count, _fmt(s.mean), _fmt(s.std), _fmt(s.skewness),
                _fmt(s.kurtosis), _fmt(s.minimum), _fmt(s.maximum),
                ";".join(s.min_witnesses), ";".join(s.max_witnesses),
            ])


def write_histogram_csvs(report: CensusReport,
                         out_dir: str | os.PathLike[str]) -> list[str]:
    """One hist_<index>.csv per index; returns the written paths."""
    paths = []
    for name in INDEX_NAMES:
        path = os.path.join(os.fspath(out_dir), f"hist_{name}.csv")
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["bin_lo", "bin_hi", "count"])
            for lo, hi, cnt in report.histograms[name].rows():
                w.writerow([f"{lo:.6f}", f"{hi:.6f}", cnt])
        paths.append(path)
    return paths
