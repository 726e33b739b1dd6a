"""Partial linear spaces and generalised quadrangles.

Provides validation of the PLS and GQ axioms, point/line duality, point
graphs, and four construction families: the symplectic quadrangle W(q),
the elliptic quadric quadrangle Q-(5,q), the hyperoval quadrangle
T2*(O) over GF(4), and flock quadrangles built from q-clans.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import AlgebraError, Field, Matrix2, anisotropic_difference_check, field_make
from .graph import Graph

INF = "inf"  # q-clan index for the special member of the 4-gonal family


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class PartialLinearSpace:
    """Points 0..num_points-1 and lines as sorted point-index tuples."""

    num_points: int
    lines: tuple[tuple[int, ...], ...]
    order: tuple[int, int] | None = None

    @staticmethod
    def make(num_points, lines, order=None) -> "PartialLinearSpace":
        norm = sorted({tuple(sorted(line)) for line in lines})
        return PartialLinearSpace(num_points, tuple(norm), order)


@dataclass(frozen=True)
class PlsResult:
    ok: bool
    order: tuple[int, int] | None = None
    witness: object = None

    def __bool__(self):
        return self.ok


def validate_pls(pls: PartialLinearSpace) -> PlsResult:
    """Check the partial linear space axioms.

    Returns the order (s, t) on success, otherwise a witness: two lines
    sharing two points, or a line/point with a deviant count.
    """
    if pls.num_points < 1:
        return PlsResult(False, witness=("no points",))
    line_sizes = set()
    pair_seen: dict[tuple[int, int], int] = {}
    point_deg = [0] * pls.num_points
    for li, line in enumerate(pls.lines):
        if len(line) < 2:
            return PlsResult(False, witness=("short line", li, line))
        if len(set(line)) != len(line):
            return PlsResult(False, witness=("repeated point", li, line))
        for p in line:
            if not 0 <= p < pls.num_points:
                return PlsResult(False, witness=("point out of range", li, p))
            point_deg[p] += 1
        line_sizes.add(len(line))
        for a in range(len(line)):
            for b in range(a + 1, len(line)):
                key = (line[a], line[b])
                if key in pair_seen:
                    return PlsResult(False, witness=("lines share two points",
                                                     pair_seen[key], li, key))
                pair_seen[key] = li
    if len(line_sizes) != 1:
        return PlsResult(False, witness=("line sizes differ", sorted(line_sizes)))
    if len(set(point_deg)) != 1:
        lo = point_deg.index(min(point_deg))
        hi = point_deg.index(max(point_deg))
        return PlsResult(False, witness=("point degrees differ", lo, hi))
    s = line_sizes.pop() - 1
    t = point_deg[0] - 1
    if t < 0:
        return PlsResult(False, witness=("isolated points",))
    if pls.order is not None and pls.order != (s, t):
        return PlsResult(False, witness=("declared order mismatch", pls.order, (s, t)))
    return PlsResult(True, order=(s, t))


def _line_masks(pls: PartialLinearSpace) -> list[int]:
    masks = []
    for line in pls.lines:
        m = 0
        for p in line:
            m |= 1 << p
        masks.append(m)
    return masks


def point_graph(pls: PartialLinearSpace) -> Graph:
    """Collinearity graph on the points."""
    rows = [0] * pls.num_points
    for line in pls.lines:
        m = 0
        for p in line:
            m |= 1 << p
        for p in line:
            rows[p] |= m & ~(1 << p)
    return Graph(pls.num_points, tuple(rows))


def check_gq_axiom(pls: PartialLinearSpace) -> PlsResult:
    """Check the generalised quadrangle axiom: every point off a line is
    collinear with exactly one of its points.  Witness: (point, line
    index, count)."""
    res = validate_pls(pls)
    if not res:
        return res
    g = point_graph(pls)
    masks = _line_masks(pls)
    for li, lmask in enumerate(masks):
        for p in range(pls.num_points):
            if (lmask >> p) & 1:
                continue
            c = (g.rows[p] & lmask).bit_count()
            if c != 1:
                return PlsResult(False, order=res.order, witness=(p, li, c))
    return PlsResult(True, order=res.order)


def dualize(pls: PartialLinearSpace) -> PartialLinearSpace:
    """Swap points and lines.  New point i is old line i; new lines are
    the old points' pencils, listed in old point order, so applying the
    map twice reproduces the input exactly."""
    res = validate_pls(pls)
    if not res:
        raise GeometryError(f"dualize on invalid geometry: {res.witness}")
    s, t = res.order
    pencils = [[] for _ in range(pls.num_points)]
    for li, line in enumerate(pls.lines):
        for p in line:
            pencils[p].append(li)
    return PartialLinearSpace(len(pls.lines),
                              tuple(tuple(pen) for pen in pencils),
                              (t, s))


def export_incidence(pls: PartialLinearSpace) -> str:
    out = [f"p {pls.num_points} l {len(pls.lines)}"]
    for line in pls.lines:
        out.append(" ".join(str(p) for p in line))
    return "\n".join(out) + "\n"


def parse_incidence(text: str) -> PartialLinearSpace:
    lines_iter = iter(text.strip().splitlines())
    head = next(lines_iter).split()
    if len(head) != 4 or head[0] != "p" or head[2] != "l":
        raise GeometryError("bad incidence header")
    np_, nl = int(head[1]), int(head[3])
    lines = [tuple(int(x) for x in ln.split()) for ln in lines_iter]
    if len(lines) != nl:
        raise GeometryError("line count mismatch in incidence file")
    return PartialLinearSpace.make(np_, lines)


# -- classical constructions ----------------------------------------------

def _projective_points(field: Field, dim: int) -> list[tuple[int, ...]]:
    """Projective points of PG(dim-1, q), normalized so the first
    nonzero coordinate is 1, in lexicographic order."""
    pts = []

    def rec(prefix):
        k = len(prefix)
        if k == dim:
            return
        # first nonzero coordinate at position k
        tail_len = dim - k - 1
        for tail in _all_vectors(field, tail_len):
            pts.append(tuple(prefix) + (1,) + tail)
        rec(prefix + [0])

    rec([])
    return sorted(pts)


def _all_vectors(field: Field, k: int):
    if k == 0:
        yield ()
        return
    for head in field.elements():
        for tail in _all_vectors(field, k - 1):
            yield (head,) + tail


def _scale(field: Field, v, c):
    return tuple(field.mul[x][c] for x in v)


def _vadd(field: Field, u, v):
    return tuple(field.add[x][y] for x, y in zip(u, v))


def _normalize(field: Field, v):
    for x in v:
        if x:
            return _scale(field, v, field.inv[x])
    raise GeometryError("zero vector has no projective class")


def _span_line(field: Field, p, r) -> frozenset:
    pts = {p, r}
    for lam in field.elements():
        if lam:
            pts.add(_normalize(field, _vadd(field, p, _scale(field, r, lam))))
    return frozenset(pts)


@lru_cache(maxsize=None)
def build_symplectic_gq(q: int) -> PartialLinearSpace:
    """W(q): points of PG(3,q), lines the totally isotropic lines of the
    standard symplectic form; a GQ of order (q, q)."""
    field = _field_for(q)
    pts = _projective_points(field, 4)
    index = {p: i for i, p in enumerate(pts)}

    def form(u, v):
        f = field
        a = f.sub(f.mul[u[0]][v[1]], f.mul[u[1]][v[0]])
        b = f.sub(f.mul[u[2]][v[3]], f.mul[u[3]][v[2]])
        return f.add[a][b]

    lines = set()
    for i, p in enumerate(pts):
        for r in pts[i + 1:]:
            if form(p, r) == 0:
                lines.add(frozenset(index[x] for x in _span_line(field, p, r)))
    return PartialLinearSpace.make(len(pts), [tuple(sorted(l)) for l in lines], (q, q))


@lru_cache(maxsize=None)
def _field_for(q: int) -> Field:
    for p in range(2, q + 1):
        if is_prime_power_of(q, p):
            e = 0
            qq = q
            while qq > 1:
                qq //= p
                e += 1
            return field_make(p, e)
    raise GeometryError(f"{q} is not a prime power")


def is_prime_power_of(q: int, p: int) -> bool:
    from .algebra import is_prime
    if not is_prime(p):
        return False
    while q % p == 0:
        q //= p
    return q == 1


@lru_cache(maxsize=None)
def build_elliptic_gq(q: int) -> PartialLinearSpace:
    """Q-(5,q): singular points and totally singular lines of an
    elliptic quadric in PG(5,q); a GQ of order (q, q^2)."""
    field = _field_for(q)
    alpha, beta = _least_irreducible_quadratic(field)

    def quad(v):
        f = field
        t = f.add[f.mul[v[0]][v[1]]][f.mul[v[2]][v[3]]]
        t = f.add[t][f.mul[v[4]][v[4]]]
        t = f.add[t][f.mul[f.mul[alpha][v[4]]][v[5]]]
        return f.add[t][f.mul[f.mul[beta][v[5]]][v[5]]]

    pts = [p for p in _projective_points(field, 6) if quad(p) == 0]
    index = {p: i for i, p in enumerate(pts)}
    ptset = set(pts)
    lines = set()
    for i, p in enumerate(pts):
        for r in pts[i + 1:]:
            span = _span_line(field, p, r)
            if span <= ptset:
                lines.add(frozenset(index[x] for x in span))
    return PartialLinearSpace.make(len(pts), [tuple(sorted(l)) for l in lines],
                                   (q, q * q))


def _least_irreducible_quadratic(field: Field) -> tuple[int, int]:
    """Least (alpha, beta) such that z^2 + alpha z + beta has no root."""
    for alpha in field.elements():
        for beta in field.elements():
            if all(field.add[field.add[field.mul[z][z]][field.mul[alpha][z]]][beta] != 0
                   for z in field.elements()):
                return alpha, beta
    raise GeometryError("no irreducible quadratic found")


@lru_cache(maxsize=None)
def build_t2star_gq() -> PartialLinearSpace:
    """T2*(O) over GF(4): points AG(3,4), lines the affine lines whose
    direction lies in a fixed hyperoval of the plane at infinity; a GQ
    of order (3, 5)."""
    field = field_make(2, 2)
    # hyperoval: conic {(1, t, t^2)} plus (0,1,0) and (0,0,1)
    hyperoval = [(1, t, field.mul[t][t]) for t in field.elements()]
    hyperoval += [(0, 1, 0), (0, 0, 1)]
    points = [(a, b, c) for a in field.elements()
              for b in field.elements() for c in field.elements()]
    index = {p: i for i, p in enumerate(points)}
    lines = set()
    for p in points:
        for d in hyperoval:
            line = frozenset(index[_vadd(field, p, _scale(field, d, lam))]
                             for lam in field.elements())
            lines.add(line)
    return PartialLinearSpace.make(len(points), [tuple(sorted(l)) for l in lines],
                                   (3, 5))


def hyperoval_is_arc() -> bool:
    """No three directions of the fixed hyperoval are collinear in PG(2,4)."""
    field = field_make(2, 2)
    pts = [_normalize(field, (1, t, field.mul[t][t])) for t in field.elements()]
    pts += [(0, 1, 0), (0, 0, 1)]
    import itertools as it
    for a, b, c in it.combinations(pts, 3):
        if c in _span_line(field, a, b):
            return False
    return True


# -- flock quadrangles from q-clans ---------------------------------------

@dataclass(frozen=True)
class QClan:
    """A set of q 2x2 matrices over GF(q) indexed by the field elements,
    with anisotropic pairwise differences."""

    field: Field
    matrices: tuple[Matrix2, ...]

    def __post_init__(self):
        if len(self.matrices) != self.field.q:
            raise AlgebraError("need one matrix per field element")
        if not anisotropic_difference_check(list(self.matrices)):
            raise AlgebraError("pairwise differences are not anisotropic")


def payne_qclan() -> QClan:
    """The q-clan {[[t, 3t^2], [0, 3t^3]] : t in GF(5)}."""
    f = field_make(5)
    mats = []
    for t in f.elements():
        t2 = f.mul[t][t]
        t3 = f.mul[t2][t]
        mats.append(Matrix2(f, t, f.mul[3][t2], 0, f.mul[3][t3]))
    return QClan(f, tuple(mats))


def build_flock_gq(clan: QClan) -> PartialLinearSpace:
    """Coset-geometry GQ of order (q^2, q) from a q-clan.

    The group has elements (alpha, c, beta) with alpha, beta in GF(q)^2
    and c in GF(q), multiplied by (a,c,b)(a',c',b') =
    (a+a', c+c'+b.a', b+b').  The 4-gonal family consists of
    A(t) = {(a, a A_t a^T, a (A_t + A_t^T))} and A(inf) = {(0,0,b)}.
    The construction is validated by the GQ axiom checker downstream;
    a failed axiom check signals an error in these conventions.
    """
    f = clan.field
    q = f.q

    def gmul(g, h):
        a0, a1, c, b0, b1 = g
        x0, x1, z, y0, y1 = h
        dot = f.add[f.mul[b0][x0]][f.mul[b1][x1]]
        return (f.add[a0][x0], f.add[a1][x1],
                f.add[f.add[c][z]][dot],
                f.add[b0][y0], f.add[b1][y1])

    elements = [(a0, a1, c, b0, b1)
                for a0 in f.elements() for a1 in f.elements()
                for c in f.elements()
                for b0 in f.elements() for b1 in f.elements()]
    eindex = {g: i for i, g in enumerate(elements)}

    members = {}          # t -> list of elements of A(t)
    star_members = {}     # t -> list of elements of A*(t)
    for ti, mat in enumerate(clan.matrices):
        mt_b = f.add[mat.b][mat.c]  # A_t + A_t^T off-diagonal entries
        mem = []
        for a0 in f.elements():
            for a1 in f.elements():
                qa = (f.add[f.add[f.mul[f.mul[a0][a0]][mat.a]]
                            [f.mul[f.mul[a0][a1]][mt_b]]]
                      [f.mul[f.mul[a1][a1]][mat.d]])
                # a (A_t + A_t^T): diagonal 2a, 2d; off-diagonal b+c
                two_a = f.add[mat.a][mat.a]
                two_d = f.add[mat.d][mat.d]
                b0 = f.add[f.mul[a0][two_a]][f.mul[a1][mt_b]]
                b1 = f.add[f.mul[a0][mt_b]][f.mul[a1][two_d]]
                mem.append((a0, a1, qa, b0, b1))
        members[ti] = mem
        # A*(t) frees the centre coordinate
        star_members[ti] = [(m[0], m[1], c, m[3], m[4])
                            for m in mem for c in f.elements()]
    members[INF] = [(0, 0, 0, b0, b1) for b0 in f.elements() for b1 in f.elements()]
    star_members[INF] = [(0, 0, c, b0, b1) for c in f.elements()
                         for b0 in f.elements() for b1 in f.elements()]

    tags = list(range(q)) + [INF]

    # right cosets of A(t) and A*(t); canonical representative = least element
    def cosets(subgroup):
        seen = set()
        out = []
        for g in elements:
            if g in seen:
                continue
            coset = sorted(gmul(h, g) for h in subgroup)
            out.append(tuple(coset))
            seen.update(coset)
        return out

    acosets = {t: cosets(members[t]) for t in tags}
    scosets = {t: cosets(star_members[t]) for t in tags}

    # points: group elements, then A*(t)-cosets, then the symbol point
    npts = len(elements)
    star_index = {}
    for t in tags:
        for coset in scosets[t]:
            star_index[(t, coset[0])] = npts
            npts += 1
    star_lookup = {}
    for t in tags:
        for coset in scosets[t]:
            for g in coset:
                star_lookup[(t, g)] = star_index[(t, coset[0])]
    infinity = npts
    npts += 1

    lines = []
    for t in tags:
        for coset in acosets[t]:
            pts = [eindex[g] for g in coset]
            pts.append(star_lookup[(t, coset[0])])
            lines.append(tuple(sorted(pts)))
        # the symbol line [A(t)]: all A*(t)-cosets plus the symbol point
        sym = [star_index[(t, coset[0])] for coset in scosets[t]]
        sym.append(infinity)
        lines.append(tuple(sorted(sym)))

    return PartialLinearSpace.make(npts, lines, (q * q, q))
