"""Dense undirected graphs with bit-vector adjacency rows.

Every counting kernel in this package works on neighbourhood
intersections, so adjacency is stored as one Python int bitmask per
vertex.  Graphs are immutable after construction and safe to share
between workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

MAX_CANON_ORDER = 10


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``rows[i]`` has bit j set iff i and j are adjacent.  The adjacency
    is symmetric with a zero diagonal.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise GraphError("row count must equal vertex count")
        mask = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r & ~mask:
                raise GraphError(f"row {i} has bits outside 0..{self.n - 1}")
            if (r >> i) & 1:
                raise GraphError(f"loop at vertex {i}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if ((self.rows[i] >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise GraphError(f"adjacency not symmetric at ({i},{j})")

    # -- basic accessors -------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1) and i != j

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self):
        for i in range(self.n):
            r = self.rows[i] >> (i + 1)
            j = i + 1
            while r:
                if r & 1:
                    yield (i, j)
                r >>= 1
                j += 1

    def non_edges(self):
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if not (self.rows[i] >> j) & 1:
                    yield (i, j)


def bits_of(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def graph_from_edges(n: int, edges) -> Graph:
    rows = [0] * n
    for i, j in edges:
        if i == j:
            raise GraphError(f"loop pair ({i},{j})")
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"endpoint out of range in ({i},{j})")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    mask = g.full_mask
    return Graph(g.n, tuple((mask & ~r) & ~(1 << i) for i, r in enumerate(g.rows)))


def induced_subgraph(g: Graph, vs) -> Graph:
    vs = list(vs)
    if len(set(vs)) != len(vs):
        raise GraphError("duplicate vertex in induced subgraph")
    rows = []
    for u in vs:
        r = 0
        for b, w in enumerate(vs):
            if u != w and (g.rows[u] >> w) & 1:
                r |= 1 << b
        rows.append(r)
    return Graph(len(vs), tuple(rows))


def common_neighbors_mask(g: Graph, vertices) -> int:
    m = g.full_mask
    for v in vertices:
        m &= g.rows[v]
    return m


def common_neighbors(g: Graph, vertices) -> frozenset[int]:
    """Vertices adjacent to every member of ``vertices`` (all of V if empty)."""
    return frozenset(bits_of(common_neighbors_mask(g, vertices)))


# -- canonical forms for small graphs ------------------------------------

@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Canonical form of a graph of order <= 10.

    ``bits`` is the lexicographically least upper-triangle adjacency
    bitmask over the allowed relabelings.  When a distinguished pair is
    present it occupies slots 0 and 1, the bit for the pair itself is
    kept out of ``bits`` and recorded in ``pair_flag``.
    """

    order: int
    bits: int
    pair_flag: bool | None = None


@lru_cache(maxsize=None)
def _bit_positions(t: int, skip01: bool) -> dict[tuple[int, int], int]:
    pos = {}
    idx = 0
    for i in range(t):
        for j in range(i + 1, t):
            if skip01 and i == 0 and j == 1:
                continue
            pos[(i, j)] = idx
            idx += 1
    return pos


def upper_bits(rows, t: int, skip01: bool = False) -> int:
    """Pack the upper adjacency triangle of ``rows`` into an int."""
    pos = _bit_positions(t, skip01)
    bits = 0
    for (i, j), p in pos.items():
        if (rows[i] >> j) & 1:
            bits |= 1 << p
    return bits


def rows_from_bits(bits: int, t: int, skip01: bool = False) -> tuple[int, ...]:
    rows = [0] * t
    for (i, j), p in _bit_positions(t, skip01).items():
        if (bits >> p) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return tuple(rows)


def _block_perms(blocks):
    """All orderings obtained by permuting each invariant block internally."""
    for parts in itertools.product(*[itertools.permutations(b) for b in blocks]):
        yield tuple(v for part in parts for v in part)


def _min_bits_over(rows, t: int, orderings, skip01: bool) -> int:
    pos = _bit_positions(t, skip01)
    items = tuple(pos.items())
    best = None
    for perm in orderings:
        bits = 0
        for (i, j), p in items:
            if (rows[perm[i]] >> perm[j]) & 1:
                bits |= 1 << p
        if best is None or bits < best:
            best = bits
    return best


def _grouped(vertices, key):
    """Partition ``vertices`` into blocks of equal ``key``, sorted by key."""
    groups: dict = {}
    for v in vertices:
        groups.setdefault(key(v), []).append(v)
    return [groups[k] for k in sorted(groups)]


def min_bits_pair_fixed(rows, t: int, swap_ok: bool = False) -> int:
    """Least non-pair upper-triangle bits over isomorphisms keeping the
    distinguished pair in slots 0,1 (pointwise, or setwise if ``swap_ok``)."""
    def inv(v):
        return ((rows[v] >> 0) & 1, (rows[v] >> 1) & 1, rows[v].bit_count())

    blocks = _grouped(range(2, t), inv)
    orderings = [(0, 1) + tail for tail in _block_perms(blocks)]
    if swap_ok:
        def inv_sw(v):
            return ((rows[v] >> 1) & 1, (rows[v] >> 0) & 1, rows[v].bit_count())

        blocks_sw = _grouped(range(2, t), inv_sw)
        orderings += [(1, 0) + tail for tail in _block_perms(blocks_sw)]
    return _min_bits_over(rows, t, orderings, skip01=True)


def min_bits_free(rows, t: int) -> int:
    blocks = _grouped(range(t), lambda v: rows[v].bit_count())
    return _min_bits_over(rows, t, _block_perms(blocks), skip01=False)


def canonical_code(g: Graph, pair: tuple[int, int] | None = None) -> CanonicalCode:
    """Canonical code of a small graph, optionally with a distinguished
    ordered pair (first slot stays first, second stays second).
    """
    if g.n > MAX_CANON_ORDER:
        raise GraphError(f"canonical form limited to order {MAX_CANON_ORDER}")
    if pair is None:
        return CanonicalCode(g.n, min_bits_free(g.rows, g.n), None)
    u, v = pair
    order = [u, v] + [w for w in range(g.n) if w not in (u, v)]
    h = induced_subgraph(g, order)
    bits = min_bits_pair_fixed(h.rows, g.n)
    return CanonicalCode(g.n, bits, g.has_edge(u, v))


# -- graph6 serialization -------------------------------------------------

def to_graph6(g: Graph) -> str:
    """Encode in McKay's graph6 format (printable ASCII, offset 63)."""
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise GraphError("graph too large for graph6 encoding")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append((g.rows[i] >> j) & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return "".join(chr(c) for c in head + body)


def from_graph6(line: str) -> Graph:
    data = [ord(c) - 63 for c in line.strip()]
    if not data:
        raise GraphError("empty graph6 string")
    if any(c < 0 or c > 63 for c in data):
        raise GraphError("invalid graph6 character")
    if data[0] == 63:  # 126 - 63
        if len(data) < 4:
            raise GraphError("truncated graph6 header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    nbits = n * (n - 1) // 2
    if len(data) != (nbits + 5) // 6:
        raise GraphError("graph6 body has wrong length")
    bits = []
    for val in data:
        for k in range(5, -1, -1):
            bits.append((val >> k) & 1)
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))


def write_graph6_file(path, graphs):
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")


def read_graph6_file(path) -> list[Graph]:
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(from_graph6(line))
    return out
