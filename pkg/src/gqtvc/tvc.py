"""The t-vertex condition: exhaustive pair fingerprinting, anchored
type counting with backtracking, reduced-mode checking, distinguisher
search, and the K4,4 per-edge invariant.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .graph import (CanonicalCode, Graph, bits_of, min_bits_pair_fixed,
                    rows_from_bits)
from .gtypes import GraphType, enumerate_types, pair_fixing_aut_order
from .regularity import check_isoregular, srg_parameters, SrgParams


class BudgetExceeded(Exception):
    pass


class PreconditionError(ValueError):
    pass


def _check_deadline(deadline):
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceeded()


@dataclass(frozen=True)
class Fingerprint:
    """Census of the induced order-t subgraphs through one ordered pair,
    keyed by canonical type code."""

    pair_class: str  # "edge" or "non-edge"
    counts: tuple  # sorted ((CanonicalCode, count), ...)

    def as_dict(self) -> dict:
        return dict(self.counts)

    def total(self) -> int:
        return sum(c for _, c in self.counts)


@dataclass
class TvcWitness:
    graph_type: GraphType
    pair_a: tuple[int, int]
    count_a: int
    pair_b: tuple[int, int]
    count_b: int


@dataclass
class TvcVerdict:
    t: int
    status: str  # "satisfied" | "violated" | "inconclusive"
    witness: TvcWitness | None = None
    mode: str = "exhaustive"

    @property
    def satisfied(self) -> bool:
        return self.status == "satisfied"


# -- exhaustive fingerprinting --------------------------------------------

class _CodeMemo:
    """Maps labelled non-pair adjacency bits of an order-t subgraph with
    its pair in slots 0,1 to the canonical code bits, both for the given
    orientation and for the swapped one."""

    def __init__(self, t: int):
        self.t = t
        self.table: dict[int, tuple[int, int]] = {}
        # positions of the non-pair upper-triangle bits under slot swap
        from .graph import _bit_positions
        pos = _bit_positions(t, True)
        swap_map = {}
        for (i, j), p in pos.items():
            si = 1 if i == 0 else 0 if i == 1 else i
            sj = 1 if j == 0 else 0 if j == 1 else j
            a, b = min(si, sj), max(si, sj)
            swap_map[p] = pos[(a, b)]
        self.swap_map = swap_map

    def swap_bits(self, bits: int) -> int:
        out = 0
        for p, sp in self.swap_map.items():
            if (bits >> p) & 1:
                out |= 1 << sp
        return out

    def canon(self, bits: int) -> tuple[int, int]:
        got = self.table.get(bits)
        if got is None:
            rows = rows_from_bits(bits, self.t, skip01=True)
            fwd = min_bits_pair_fixed(rows, self.t)
            swapped = self.swap_bits(bits)
            rows_sw = rows_from_bits(swapped, self.t, skip01=True)
            bwd = min_bits_pair_fixed(rows_sw, self.t)
            got = (fwd, bwd)
            self.table[bits] = got
            if swapped != bits:
                self.table[swapped] = (bwd, fwd)
        return got


def _labelled_tallies(g: Graph, t: int, x: int, y: int,
                      deadline=None) -> dict[int, int]:
    """Tallies of labelled non-pair adjacency patterns over all
    (t-2)-subsets of V minus {x, y}, with x, y in slots 0, 1."""
    rest = [v for v in range(g.n) if v not in (x, y)]
    rows = g.rows
    tallies: dict[int, int] = {}
    k = t - 2
    # bit position layout for skip01: first the (0, j) bits j >= 2, then
    # (1, j), then pairs among the added vertices
    from .graph import _bit_positions
    pos = _bit_positions(t, True)
    xpos = [pos[(0, j)] for j in range(2, t)]
    ypos = [pos[(1, j)] for j in range(2, t)]
    ppos = [[pos[(i + 2, j + 2)] for j in range(i + 1, k)] for i in range(k)]
    rx = rows[x]
    ry = rows[y]
    counter = 0
    for subset in itertools.combinations(rest, k):
        bits = 0
        for a in range(k):
            va = subset[a]
            if (rx >> va) & 1:
                bits |= 1 << xpos[a]
            if (ry >> va) & 1:
                bits |= 1 << ypos[a]
            ra = rows[va]
            pa = ppos[a]
            for b in range(a + 1, k):
                if (ra >> subset[b]) & 1:
                    bits |= 1 << pa[b - a - 1]
        tallies[bits] = tallies.get(bits, 0) + 1
        counter += 1
        if counter & 0x3FFF == 0:
            _check_deadline(deadline)
    return tallies


def pair_fingerprint(g: Graph, t: int, pair: tuple[int, int],
                     deadline=None, memo: _CodeMemo | None = None) -> Fingerprint:
    """Exhaustive census of induced order-t subgraphs containing the
    ordered pair, classified by type."""
    x, y = pair
    if x == y:
        raise ValueError("pair must consist of distinct vertices")
    if not 3 <= t <= 7:
        raise ValueError("exhaustive fingerprints support 3 <= t <= 7")
    memo = memo or _CodeMemo(t)
    adj = g.has_edge(x, y)
    tallies = _labelled_tallies(g, t, x, y, deadline)
    counts: dict[CanonicalCode, int] = {}
    for bits, cnt in tallies.items():
        fwd, _ = memo.canon(bits)
        code = CanonicalCode(t, fwd, adj)
        counts[code] = counts.get(code, 0) + cnt
    return Fingerprint("edge" if adj else "non-edge",
                       tuple(sorted(counts.items())))


def _canonical_counts(tallies: dict[int, int], memo: _CodeMemo):
    fwd: dict[int, int] = {}
    bwd: dict[int, int] = {}
    for bits, cnt in tallies.items():
        f, b = memo.canon(bits)
        fwd[f] = fwd.get(f, 0) + cnt
        bwd[b] = bwd.get(b, 0) + cnt
    return fwd, bwd


def _exhaustive_scan_chunk(g: Graph, t: int, pairs, refs, memo, deadline):
    """Compare the fingerprints of the given unordered pairs against the
    per-class references.  Returns None or a mismatch description."""
    for x, y in pairs:
        _check_deadline(deadline)
        adj = g.has_edge(x, y)
        tallies = _labelled_tallies(g, t, x, y, deadline)
        fwd, bwd = _canonical_counts(tallies, memo)
        ref = refs[adj]
        for counts, pair in ((fwd, (x, y)), (bwd, (y, x))):
            if counts != ref[0]:
                return (pair, ref[1], counts)
    return None


def _mismatch_witness(t, mismatch, ref_counts, counts):
    """Pick one differing code and build a concrete witness."""
    keys = set(ref_counts) | set(counts)
    for key in sorted(keys):
        a = ref_counts.get(key, 0)
        b = counts.get(key, 0)
        if a != b:
            rows = rows_from_bits(key, t, skip01=True)
            return key, a, b, rows
    raise AssertionError("mismatching fingerprints without differing code")


def check_tvc(g: Graph, t: int, mode: str = "exhaustive", k: int | None = None,
              budget_seconds: float | None = None, threads: int = 1,
              deadline: float | None = None) -> TvcVerdict:
    """Decide the t-vertex condition.

    ``mode='exhaustive'`` scans every (t-2)-subset through every pair.
    ``mode='reduced'`` requires the graph to be k-isoregular and uses
    only types whose additional vertices have valency >= k+1; the
    (t-1)-level condition is established recursively first.
    """
    if deadline is None and budget_seconds is not None:
        deadline = time.monotonic() + budget_seconds
    if t == 2:
        from .regularity import check_regular
        ok = check_regular(g) is not None
        return TvcVerdict(2, "satisfied" if ok else "violated", mode=mode)
    if t == 3:
        params = srg_parameters(g)
        ok = params is not None
        return TvcVerdict(3, "satisfied" if ok else "violated", mode=mode)
    try:
        if mode == "exhaustive":
            return _check_tvc_exhaustive(g, t, deadline, threads)
        if mode == "reduced":
            if k is None:
                raise PreconditionError("reduced mode needs an isoregularity level")
            return _check_tvc_reduced(g, t, k, deadline)
    except BudgetExceeded:
        return TvcVerdict(t, "inconclusive", mode=mode)
    raise ValueError(f"unknown mode {mode!r}")


def _pair_lists(g: Graph):
    edges = list(g.edges())
    non_edges = list(g.non_edges())
    return edges, non_edges


def _check_tvc_exhaustive(g: Graph, t: int, deadline, threads=1) -> TvcVerdict:
    edges, non_edges = _pair_lists(g)
    memo = _CodeMemo(t)
    refs = {}
    for adj, pairs in ((True, edges), (False, non_edges)):
        if not pairs:
            refs[adj] = ({}, None)
            continue
        x, y = pairs[0]
        tallies = _labelled_tallies(g, t, x, y, deadline)
        fwd, bwd = _canonical_counts(tallies, memo)
        if fwd != bwd:
            # the reference pair itself is orientation-asymmetric
            key, a, b, rows = _mismatch_witness(t, None, fwd, bwd)
            ty = GraphType(t, rows, g.has_edge(x, y))
            return TvcVerdict(t, "violated",
                              TvcWitness(ty, (x, y), a, (y, x), b))
        refs[adj] = (fwd, (x, y))

    all_pairs = edges + non_edges
    if threads > 1:
        result = _parallel_scan(g, t, all_pairs, refs, deadline, threads)
    else:
        result = _exhaustive_scan_chunk(g, t, all_pairs, refs, memo, deadline)
    if result is None:
        return TvcVerdict(t, "satisfied")
    pair, ref_pair, counts = result
    ref_counts = refs[g.has_edge(*pair)][0]
    key, a, b, rows = _mismatch_witness(t, None, ref_counts, counts)
    ty = GraphType(t, rows, g.has_edge(*pair))
    return TvcVerdict(t, "violated", TvcWitness(ty, ref_pair, a, pair, b))


# -- process-pool support for the exhaustive scan -------------------------

_WORKER_STATE: dict = {}


def _worker_init(g, t, refs):
    _WORKER_STATE["g"] = g
    _WORKER_STATE["t"] = t
    _WORKER_STATE["refs"] = refs
    _WORKER_STATE["memo"] = _CodeMemo(t)


def _worker_scan(pairs):
    return _exhaustive_scan_chunk(_WORKER_STATE["g"], _WORKER_STATE["t"],
                                  pairs, _WORKER_STATE["refs"],
                                  _WORKER_STATE["memo"], None)


def _parallel_scan(g, t, pairs, refs, deadline, threads):
    from concurrent.futures import ProcessPoolExecutor
    chunk = max(1, len(pairs) // (threads * 8))
    chunks = [pairs[i:i + chunk] for i in range(0, len(pairs), chunk)]
    with ProcessPoolExecutor(max_workers=threads, initializer=_worker_init,
                             initargs=(g, t, refs)) as pool:
        # results consumed in submission order keeps the verdict
        # independent of scheduling
        for result in pool.map(_worker_scan, chunks):
            _check_deadline(deadline)
            if result is not None:
                return result
    return None


# -- anchored counting and reduced mode -----------------------------------

def count_type_anchored(g: Graph, ty: GraphType, pair: tuple[int, int],
                        deadline=None) -> int:
    """Number of vertex subsets containing the ordered pair whose
    induced subgraph is of the given type (fixed vertices mapped to the
    pair in order)."""
    x, y = pair
    adj = g.has_edge(x, y)
    if ty.pair_adjacent is not None and ty.pair_adjacent != adj:
        raise PreconditionError("pair adjacency does not match the type")
    trows = ty.effective_rows(adj)
    t = ty.order
    rows = g.rows
    full = g.full_mask
    not_rows = tuple((full & ~(rows[v] | (1 << v))) for v in range(g.n))

    # place highly-connected additional slots first
    order: list[int] = []
    placed = [0, 1]
    remaining = list(range(2, t))
    while remaining:
        remaining.sort(key=lambda v: (-sum((trows[v] >> w) & 1 for w in placed),
                                      -trows[v].bit_count(), v))
        nxt = remaining.pop(0)
        order.append(nxt)
        placed.append(nxt)
    # per placement step: (slot, [(earlier slot position, adjacent?)])
    steps = []
    for d, slot in enumerate(order):
        cons = [(0, bool((trows[slot] >> 0) & 1)), (1, bool((trows[slot] >> 1) & 1))]
        for e in range(d):
            cons.append((2 + e, bool((trows[slot] >> order[e]) & 1)))
        steps.append(cons)

    images = [x, y] + [0] * (t - 2)
    used = (1 << x) | (1 << y)
    total = 0
    node_budget = [0]

    def rec(d, used):
        nonlocal total
        if d == t - 2:
            total += 1
            return
        m = full & ~used
        for spos, is_adj in steps[d]:
            img = images[spos]
            m &= rows[img] if is_adj else not_rows[img]
            if not m:
                return
        node_budget[0] += 1
        if node_budget[0] & 0x3FF == 0:
            _check_deadline(deadline)
        for v in bits_of(m):
            images[2 + d] = v
            rec(d + 1, used | (1 << v))

    rec(0, used)
    aut = pair_fixing_aut_order(t, ty.rows)
    assert total % aut == 0
    return total // aut


def _reduced_level(g: Graph, t: int, k: int, deadline) -> TvcVerdict:
    """One reduced-mode level, assuming the (t-1)-level already holds."""
    mismatch = _scan_types_for_mismatch(g, enumerate_types(t, k + 1), deadline)
    if mismatch is None:
        return TvcVerdict(t, "satisfied", mode="reduced")
    return TvcVerdict(t, "violated", mismatch, mode="reduced")


def _scan_types_for_mismatch(g: Graph, types, deadline) -> TvcWitness | None:
    edges, non_edges = _pair_lists(g)
    for ty in types:
        for adj, pairs in ((True, edges), (False, non_edges)):
            if not pairs:
                continue
            cty = ty.concrete(adj)
            ref = None
            ref_pair = None
            for x, y in pairs:
                for pair in ((x, y), (y, x)):
                    c = count_type_anchored(g, cty, pair, deadline)
                    if ref is None:
                        ref = c
                        ref_pair = pair
                    elif c != ref:
                        return TvcWitness(cty, ref_pair, ref, pair, c)
    return None


def _check_tvc_reduced(g: Graph, t: int, k: int, deadline) -> TvcVerdict:
    report = check_isoregular(g, k)
    if not report.ok:
        raise PreconditionError(f"graph is not {k}-isoregular")
    # establish the chain (k+2)..t-1 first; below level 4 the condition
    # is equivalent to strong regularity, which k-isoregularity covers
    for level in range(max(4, 4), t):
        verdict = _reduced_level(g, level, k, deadline)
        if not verdict.satisfied:
            raise PreconditionError(
                f"the {level}-vertex condition fails; reduced mode at "
                f"level {t} is not applicable")
    return _reduced_level(g, t, k, deadline)


def find_distinguisher(g: Graph, t: int, k: int,
                       budget_seconds: float | None = None,
                       deadline: float | None = None) -> GraphType | None:
    """First type (in enumeration order) of order t, additional valency
    >= k+1, whose anchored counts are non-constant on edges or
    non-edges; None if every such type is constant, in which case the
    t-vertex condition holds."""
    if deadline is None and budget_seconds is not None:
        deadline = time.monotonic() + budget_seconds
    report = check_isoregular(g, k)
    if not report.ok:
        raise PreconditionError(f"graph is not {k}-isoregular")
    for level in range(4, t):
        verdict = _reduced_level(g, level, k, deadline)
        if not verdict.satisfied:
            raise PreconditionError(f"the {level}-vertex condition fails")
    mismatch = _scan_types_for_mismatch(g, enumerate_types(t, k + 1), deadline)
    return None if mismatch is None else mismatch.graph_type


# -- the K4,4 edge invariant ----------------------------------------------

def count_k44_per_edge(g: Graph, stop_after_values: int | None = None,
                       max_edges: int | None = None,
                       deadline=None) -> dict[tuple[int, int], int]:
    """For each edge (x, y), the number of induced K4,4 subgraphs with x
    and y on opposite sides.

    ``stop_after_values`` ends the scan once that many distinct counts
    have been seen; ``max_edges`` caps the number of edges scanned.
    """
    out: dict[tuple[int, int], int] = {}
    values: set[int] = set()
    rows = g.rows
    full = g.full_mask
    not_rows = tuple((full & ~(rows[v] | (1 << v))) for v in range(g.n))
    for x, y in g.edges():
        _check_deadline(deadline)
        count = 0
        # side B = {y, b2, b3, b4}: independent, inside N(x)
        bcand = rows[x] & not_rows[y]
        for b2 in bits_of(bcand):
            acand2 = rows[y] & rows[b2] & not_rows[x]
            if acand2.bit_count() < 3:
                continue
            c2 = bcand & not_rows[b2] & ~((1 << (b2 + 1)) - 1)
            for b3 in bits_of(c2):
                acand3 = acand2 & rows[b3]
                if acand3.bit_count() < 3:
                    continue
                c3 = c2 & not_rows[b3] & ~((1 << (b3 + 1)) - 1)
                for b4 in bits_of(c3):
                    acand = acand3 & rows[b4]
                    if acand.bit_count() < 3:
                        continue
                    # count independent triples {a2, a3, a4} in acand
                    for a2 in bits_of(acand):
                        d2 = acand & not_rows[a2] & ~((1 << (a2 + 1)) - 1)
                        for a3 in bits_of(d2):
                            d3 = d2 & not_rows[a3] & ~((1 << (a3 + 1)) - 1)
                            count += d3.bit_count()
        out[(x, y)] = count
        values.add(count)
        if stop_after_values is not None and len(values) >= stop_after_values:
            break
        if max_edges is not None and len(out) >= max_edges:
            break
    return out
