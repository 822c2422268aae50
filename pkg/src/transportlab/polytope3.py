"""Three-way transportation polytopes: axial (1-margin) and planar (2-margin).

Vertex enumeration reduces to the basic-solution search in linalg. The two
reductions live here as well: the margin construction that embeds an axial
program into a planar one a size up, and the two-step encoding that realizes
the solution set of an arbitrary rational system as a face of an axial
polytope.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    AxialMargins,
    PlanarMargins,
    Table3,
    as_rational,
    build_constraint_system,
    cells_3way,
)
from .errors import (
    BoundViolated,
    Infeasible,
    InvalidMargins,
    NotInPolytope,
    TooLarge,
)
from .linalg import enumerate_basic_feasible, int_matrix_rank, matrix_rank

CELL_GUARD_3WAY = 27


def axial_feasible(m: AxialMargins) -> bool:
    t = sum(m.u, Fraction(0))
    return t == sum(m.v, Fraction(0)) and t == sum(m.w, Fraction(0))


def axial_nw_corner(m: AxialMargins) -> Table3:
    """Lexicographic greedy fill; exhausts all three margin vectors exactly."""
    if not axial_feasible(m):
        raise Infeasible("margin totals differ")
    p, q, s = m.p, m.q, m.s
    ru, rv, rw = list(m.u), list(m.v), list(m.w)
    x = [[[Fraction(0)] * s for _ in range(q)] for _ in range(p)]
    for i in range(p):
        for j in range(q):
            for k in range(s):
                t = min(ru[i], rv[j], rw[k])
                if t > 0:
                    x[i][j][k] = t
                    ru[i] -= t
                    rv[j] -= t
                    rw[k] -= t
    if any(ru) or any(rv) or any(rw):
        raise Infeasible("greedy fill left residual margin mass")
    return Table3(tuple(tuple(tuple(r) for r in plane) for plane in x))


def planar_syzygies_hold(m: PlanarMargins) -> bool:
    """Necessary consistency: the three 2-margin families share their 1-margins."""
    p, q, s = m.p, m.q, m.s
    for k in range(s):
        if sum(m.U[j][k] for j in range(q)) != sum(m.V[i][k] for i in range(p)):
            return False
    for j in range(q):
        if sum(m.U[j][k] for k in range(s)) != sum(m.W[i][j] for i in range(p)):
            return False
    for i in range(p):
        if sum(m.V[i][k] for k in range(s)) != sum(m.W[i][j] for j in range(q)):
            return False
    return True


def planar_feasible(m: PlanarMargins) -> bool:
    """Exact feasibility: syzygies, then a vertex must exist (guarded size)."""
    if not planar_syzygies_hold(m):
        return False
    return len(enumerate_vertices_3way("planar", m)) > 0


def enumerate_vertices_3way(kind: str, margins) -> list:
    """All vertices of the axial or planar polytope, as Table3, sorted."""
    p, q, s = margins.p, margins.q, margins.s
    if p * q * s > CELL_GUARD_3WAY:
        raise TooLarge(f"{p}x{q}x{s} exceeds the 3-way enumeration guard")
    if kind == "axial" and not axial_feasible(margins):
        return []
    cs = build_constraint_system(kind, (p, q, s), margins)
    flats = enumerate_basic_feasible(cs.rows, cs.rhs)
    out = []
    for f in flats:
        cube = tuple(
            tuple(tuple(f[(i * q + j) * s + k] for k in range(s)) for j in range(q))
            for i in range(p)
        )
        out.append(Table3(cube))
    return out


def is_vertex_3way(x: Table3, kind: str) -> bool:
    """Vertex of its own margin polytope iff support columns are independent."""
    cs = build_constraint_system(kind, (x.p, x.q, x.s))
    sup = x.support()
    cols = [cs.column_of(c) for c in sup]
    sub = [[row[c] for row in cs.rows] for c in cols]
    return int_matrix_rank(sub) == len(cols)


def adjacent_3way(x: Table3, y: Table3, kind: str) -> bool:
    """Vertices are adjacent iff the union support leaves a one-dimensional kernel."""
    sup = sorted(set(x.support()) | set(y.support()))
    if set(x.support()) == set(y.support()):
        return False
    cs = build_constraint_system(kind, (x.p, x.q, x.s))
    cols = [cs.column_of(c) for c in sup]
    sub = [[row[c] for row in cs.rows] for c in cols]
    return int_matrix_rank(sub) == len(cols) - 1


def polytope_graph_3way(kind: str, margins):
    from .polytope2 import PolytopeGraph

    verts = enumerate_vertices_3way(kind, margins)
    n = len(verts)
    cs = build_constraint_system(kind, (margins.p, margins.q, margins.s))
    sups = [set(v.support()) for v in verts]
    cols_cache = {}

    def rank_of(sup):
        key = tuple(sorted(sup))
        if key not in cols_cache:
            cols = [cs.column_of(c) for c in key]
            sub = [[row[c] for row in cs.rows] for c in cols]
            cols_cache[key] = int_matrix_rank(sub)
        return cols_cache[key]

    adj = [[] for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            un = sups[a] | sups[b]
            if sups[a] != sups[b] and rank_of(un) == len(un) - 1:
                adj[a].append(b)
                adj[b].append(a)
    return PolytopeGraph(n=n, adjacency=tuple(tuple(r) for r in adj), vertices=tuple(verts))


def generalized_birkhoff_axial(p: int, q: int, s: int) -> AxialMargins:
    return AxialMargins((q * s,) * p, (p * s,) * q, (p * q,) * s)


def generalized_birkhoff_planar(p: int, q: int, s: int) -> PlanarMargins:
    return PlanarMargins(
        tuple((p,) * s for _ in range(q)),
        tuple((q,) * s for _ in range(p)),
        tuple((s,) * q for _ in range(p)),
    )


def latin_square_vertices(p: int) -> list:
    """0/1 vertices of the p x p x p all-ones 2-margin polytope.

    x[i][j][k] = 1 exactly when cell (i, j) of a Latin square holds symbol k.
    """
    if p > 4:
        raise TooLarge("latin square enumeration is guarded at p <= 4")
    out = []
    cols = [[False] * p for _ in range(p)]  # cols[j][k]: symbol k used in column j

    def rec(i, rows):
        if i == p:
            cube = tuple(
                tuple(
                    tuple(1 if rows[a][b] == c else 0 for c in range(p))
                    for b in range(p)
                )
                for a in range(p)
            )
            out.append(Table3(cube))
            return
        for perm in itertools.permutations(range(p)):
            if any(cols[j][perm[j]] for j in range(p)):
                continue
            for j in range(p):
                cols[j][perm[j]] = True
            rec(i + 1, rows + [perm])
            for j in range(p):
                cols[j][perm[j]] = False

    rec(0, [])
    return out


def spectrum(x: Table3) -> tuple:
    """Distinct positive entry values, largest first."""
    vals = {e for plane in x.entries for row in plane for e in row if e != 0}
    return tuple(sorted(vals, reverse=True))


# ---------------------------------------------------------------------------
# Axial-to-planar reduction. A p x q x s axial program with cost c becomes a
# (p+1) x (q+1) x (s+1) planar program whose in-range block carries c and
# whose out-of-range cells price margin slack: with beta the largest 1-margin
# entry and M large, any feasible planar table y satisfies
#     cost(y) = c . x(y) + 3*M*beta + 3*M*excess(y)
# where x(y) is the in-range block and excess(y) >= 0 vanishes exactly when
# x(y) meets the axial margins. Pricing the one-excess cells 2M and the
# corner 3M is what makes the identity exact; pricing only the corner would
# let excess hide in the two-out cells free of charge.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AxialProblem:
    margins: AxialMargins
    cost: tuple | None = None

    def __post_init__(self):
        if self.cost is not None:
            c = tuple(
                tuple(tuple(as_rational(e) for e in row) for row in plane)
                for plane in self.cost
            )
            object.__setattr__(self, "cost", c)
            p, q, s = self.margins.p, self.margins.q, self.margins.s
            if len(c) != p or len(c[0]) != q or len(c[0][0]) != s:
                raise InvalidMargins("cost shape does not match margins")


@dataclass(frozen=True)
class PlanarProblem:
    margins: PlanarMargins
    cost: tuple | None = None


@dataclass(frozen=True)
class JungingerReduction:
    source: AxialProblem
    planar: PlanarProblem
    beta: Fraction
    big_m: Fraction

    @property
    def offset(self) -> Fraction:
        return 3 * self.big_m * self.beta


def junginger_reduce(problem: AxialProblem, big_m=None) -> JungingerReduction:
    m = problem.margins
    if not axial_feasible(m):
        raise Infeasible("margin totals differ")
    p, q, s = m.p, m.q, m.s
    beta = max(max(m.u), max(m.v), max(m.w))
    if big_m is None:
        csum = Fraction(0)
        if problem.cost is not None:
            csum = sum(
                (abs(e) for plane in problem.cost for row in plane for e in row),
                Fraction(0),
            )
        big_m = 1 + csum * sum(m.u, Fraction(0))
    big_m = as_rational(big_m)

    U = [
        [beta if (j < q and k < s) else None for k in range(s + 1)] for j in range(q + 1)
    ]
    for k in range(s):
        U[q][k] = p * beta - m.w[k]
    for j in range(q):
        U[j][s] = p * beta - m.v[j]
    U[q][s] = beta

    V = [
        [beta if (i < p and k < s) else None for k in range(s + 1)] for i in range(p + 1)
    ]
    for k in range(s):
        V[p][k] = q * beta - m.w[k]
    for i in range(p):
        V[i][s] = q * beta - m.u[i]
    V[p][s] = beta

    W = [
        [beta if (i < p and j < q) else None for j in range(q + 1)] for i in range(p + 1)
    ]
    for j in range(q):
        W[p][j] = s * beta - m.v[j]
    for i in range(p):
        W[i][q] = s * beta - m.u[i]
    W[p][q] = beta

    def chat(i, j, k):
        inside = (i < p) + (j < q) + (k < s)
        if inside == 3:
            if problem.cost is None:
                return Fraction(0)
            return problem.cost[i][j][k]
        if inside == 2:
            return Fraction(0)
        if inside == 1:
            return 2 * big_m
        return 3 * big_m

    cost = tuple(
        tuple(tuple(chat(i, j, k) for k in range(s + 1)) for j in range(q + 1))
        for i in range(p + 1)
    )
    planar = PlanarProblem(
        margins=PlanarMargins(
            tuple(tuple(r) for r in U),
            tuple(tuple(r) for r in V),
            tuple(tuple(r) for r in W),
        ),
        cost=cost,
    )
    return JungingerReduction(source=problem, planar=planar, beta=beta, big_m=big_m)


def junginger_lift(x: Table3, red: JungingerReduction) -> Table3:
    """Embed an axial-feasible table: slack planes soak beta, excess cells stay 0."""
    m = red.source.margins
    p, q, s = m.p, m.q, m.s
    if x.axial_margins() != m:
        raise NotInPolytope("table does not satisfy the source margins")
    beta = red.beta
    y = [[[Fraction(0)] * (s + 1) for _ in range(q + 1)] for _ in range(p + 1)]
    for i in range(p):
        for j in range(q):
            for k in range(s):
                y[i][j][k] = x.entries[i][j][k]
    for i in range(p):
        for j in range(q):
            y[i][j][s] = beta - sum(
                (x.entries[i][j][k] for k in range(s)), Fraction(0)
            )
    for i in range(p):
        for k in range(s):
            y[i][q][k] = beta - sum(
                (x.entries[i][j][k] for j in range(q)), Fraction(0)
            )
    for j in range(q):
        for k in range(s):
            y[p][j][k] = beta - sum(
                (x.entries[i][j][k] for i in range(p)), Fraction(0)
            )
    y[p][q][s] = beta
    return Table3(tuple(tuple(tuple(r) for r in plane) for plane in y))


def junginger_restrict(y: Table3, red: JungingerReduction) -> Table3:
    m = red.source.margins
    p, q, s = m.p, m.q, m.s
    if y.p != p + 1 or y.q != q + 1 or y.s != s + 1:
        raise InvalidMargins("table shape does not match the reduction")
    block = tuple(
        tuple(tuple(y.entries[i][j][k] for k in range(s)) for j in range(q))
        for i in range(p)
    )
    return Table3(block)


def table_cost(x: Table3, cost) -> Fraction:
    return sum(
        (
            x.entries[i][j][k] * cost[i][j][k]
            for i in range(x.p)
            for j in range(x.q)
            for k in range(x.s)
        ),
        Fraction(0),
    )


# ---------------------------------------------------------------------------
# Universality encoding, step 1: rewrite Ay = b, y >= 0 with coefficients in
# {0, +-1, +-2} by splitting each variable into a doubling chain
# x_{j,s+1} = 2 x_{j,s} and selecting chain links by binary digits.
# ---------------------------------------------------------------------------


def universality_step1(a_matrix, b):
    a = [[int(e) for e in row] for row in a_matrix]
    bvec = [int(e) for e in b]
    if len(a) != len(bvec):
        raise ValueError("matrix and right side disagree on equation count")
    m = len(a)
    n = len(a[0]) if m else 0
    chain_len = [
        max((abs(a[i][j]).bit_length() - 1 for i in range(m) if a[i][j] != 0), default=0)
        for j in range(n)
    ]
    offsets = []
    total = 0
    for j in range(n):
        offsets.append(total)
        total += chain_len[j] + 1
    rows = []
    d = []
    for j in range(n):
        for t in range(chain_len[j]):
            row = [0] * total
            row[offsets[j] + t] = 2
            row[offsets[j] + t + 1] = -1
            rows.append(row)
            d.append(0)
    for i in range(m):
        row = [0] * total
        for j in range(n):
            coeff = a[i][j]
            if coeff == 0:
                continue
            sgn = 1 if coeff > 0 else -1
            mag = abs(coeff)
            t = 0
            while mag:
                if mag & 1:
                    row[offsets[j] + t] = sgn
                mag >>= 1
                t += 1
        rows.append(row)
        d.append(bvec[i])
    return tuple(tuple(r) for r in rows), tuple(d)


# ---------------------------------------------------------------------------
# Universality encoding, step 2: realize {y : Cy = d, 0 <= y <= U} as a face
# of an axial r x r x (m+1) polytope. Variable j owns a block of r_j
# consecutive rows and columns; each block row holds a y-cell on the block
# diagonal and a complement cell one column over (cyclically), so rows and
# columns force all of a block's y-cells to share one value. Layers are
# equations: a coefficient C[k][j] = t > 0 sends t of the block's y-cells to
# layer k, a negative coefficient sends |t| complement cells there, and
# whatever remains lands on the slack layer. Every unplaced cell of the cube
# is forbidden (zeroed); the face is the whole polytope minus those columns.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UniversalityEncoding:
    c_matrix: tuple
    d_vector: tuple
    bound: int
    shape: tuple
    margins: AxialMargins
    allowed_cells: tuple
    forbidden_cells: tuple
    boxes: tuple
    var_cells: tuple
    source_a: tuple | None = None
    source_b: tuple | None = None
    source_var_cells: tuple | None = None


def universality_step2(c_matrix, d, bound=None) -> UniversalityEncoding:
    c = [[int(e) for e in row] for row in c_matrix]
    dvec = [as_rational(e) for e in d]
    m = len(c)
    n = len(c[0]) if m else 0
    if m == 0 or n == 0:
        raise ValueError("empty system")
    box_size = []
    for j in range(n):
        pos = sum(c[i][j] for i in range(m) if c[i][j] > 0)
        neg = sum(-c[i][j] for i in range(m) if c[i][j] < 0)
        if pos == 0 and neg == 0:
            raise ValueError(f"variable {j} appears in no equation")
        box_size.append(max(pos, neg))
    r = sum(box_size)
    offsets = []
    acc = 0
    for j in range(n):
        offsets.append(acc)
        acc += box_size[j]
    if bound is None:
        bound = max(1, int(sum(abs(e) for e in dvec)))
    bound = int(bound)
    slack = m  # 0-based layer index of the slack layer; layers 0..m-1 are equations

    y_layer = {}
    ybar_layer = {}
    for j in range(n):
        rows = list(range(box_size[j]))
        nxt = 0
        for k in range(m):
            if c[k][j] > 0:
                for _ in range(c[k][j]):
                    y_layer[(j, rows[nxt])] = k
                    nxt += 1
        while nxt < box_size[j]:
            y_layer[(j, rows[nxt])] = slack
            nxt += 1
        nxt = 0
        for k in range(m):
            if c[k][j] < 0:
                for _ in range(-c[k][j]):
                    ybar_layer[(j, rows[nxt])] = k
                    nxt += 1
        while nxt < box_size[j]:
            ybar_layer[(j, rows[nxt])] = slack
            nxt += 1

    allowed = []
    var_cells = []
    for j in range(n):
        for t in range(box_size[j]):
            g = offsets[j] + t
            ycell = (g, g, y_layer[(j, t)])
            ybarcell = (g, offsets[j] + (t + 1) % box_size[j], ybar_layer[(j, t)])
            allowed.append(ycell)
            allowed.append(ybarcell)
            if t == 0:
                var_cells.append(ycell)
    allowed_set = set(allowed)
    if len(allowed_set) != len(allowed):
        raise AssertionError("cell placement collided")
    forbidden = tuple(
        c3 for c3 in cells_3way(r, r, m + 1) if c3 not in allowed_set
    )

    u = (Fraction(bound),) * r
    w = []
    for k in range(m):
        neg_mass = sum(-c[k][j] for j in range(n) if c[k][j] < 0)
        w.append(dvec[k] + bound * neg_mass)
    w.append(r * Fraction(bound) - sum(w, Fraction(0)))
    if any(e < 0 for e in w):
        raise BoundViolated("a layer margin came out negative; increase the bound")
    margins = AxialMargins(u, u, tuple(w))

    enc = UniversalityEncoding(
        c_matrix=tuple(tuple(row) for row in c),
        d_vector=tuple(dvec),
        bound=bound,
        shape=(r, r, m + 1),
        margins=margins,
        allowed_cells=tuple(sorted(allowed_set)),
        forbidden_cells=forbidden,
        boxes=tuple((offsets[j], box_size[j]) for j in range(n)),
        var_cells=tuple(var_cells),
    )
    _validate_bound(enc)
    return enc


def _validate_bound(enc: UniversalityEncoding):
    """The face parameterizes {y : Cy=d, 0<=y<=U}; demand P itself fits in the box."""
    c, dvec = enc.c_matrix, enc.d_vector
    n = len(c[0])
    ray_rows = [list(row) + [0] for row in c]
    ray_rows.append([1] * n + [0])
    ray_rhs = [Fraction(0)] * len(c) + [Fraction(1)]
    rays = enumerate_basic_feasible(
        [r[:-1] for r in ray_rows], ray_rhs
    )
    if rays:
        raise BoundViolated("the encoded polytope is unbounded")
    verts = enumerate_basic_feasible([list(r) for r in c], list(dvec))
    for v in verts:
        if any(e > enc.bound for e in v):
            raise BoundViolated("a vertex exceeds the entry bound; raise it")


def encode_universality(a_matrix, b, bound=None) -> UniversalityEncoding:
    """Both steps composed; the coordinate map lands on the original variables."""
    c, d = universality_step1(a_matrix, b)
    enc = universality_step2(c, d, bound=bound)
    a = [[int(e) for e in row] for row in a_matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    chain_len = [
        max((abs(a[i][j]).bit_length() - 1 for i in range(m) if a[i][j] != 0), default=0)
        for j in range(n)
    ]
    source_cells = []
    pos = 0
    for j in range(n):
        source_cells.append(enc.var_cells[pos])
        pos += chain_len[j] + 1
    return UniversalityEncoding(
        c_matrix=enc.c_matrix,
        d_vector=enc.d_vector,
        bound=enc.bound,
        shape=enc.shape,
        margins=enc.margins,
        allowed_cells=enc.allowed_cells,
        forbidden_cells=enc.forbidden_cells,
        boxes=enc.boxes,
        var_cells=enc.var_cells,
        source_a=tuple(tuple(row) for row in a),
        source_b=tuple(int(e) for e in b),
        source_var_cells=tuple(source_cells),
    )


def enumerate_face_vertices(enc: UniversalityEncoding) -> list:
    """Vertices of the face: zero out forbidden columns and enumerate."""
    r, _, layers = enc.shape
    cs = build_constraint_system("axial", enc.shape, enc.margins)
    allowed_cols = [cs.column_of(c3) for c3 in enc.allowed_cells]
    rows = [[row[c] for c in allowed_cols] for row in cs.rows]
    flats = enumerate_basic_feasible(rows, list(cs.rhs))
    out = []
    for f in flats:
        cube = [[[Fraction(0)] * layers for _ in range(r)] for _ in range(r)]
        for val, (i, j, k) in zip(f, enc.allowed_cells):
            cube[i][j][k] = val
        out.append(Table3(tuple(tuple(tuple(row) for row in plane) for plane in cube)))
    return out


def enumerate_face_integer_points(enc: UniversalityEncoding) -> list:
    """Integer tables on the face, by direct search over allowed cells."""
    r, _, layers = enc.shape
    m = enc.margins
    if any(e.denominator != 1 for e in m.u + m.v + m.w):
        return []
    cells = sorted(enc.allowed_cells)
    ru = [int(e) for e in m.u]
    rv = [int(e) for e in m.v]
    rw = [int(e) for e in m.w]
    # cells after position t that can still feed each margin line
    feed_u = [[0] * (len(cells) + 1) for _ in range(r)]
    feed_v = [[0] * (len(cells) + 1) for _ in range(r)]
    feed_w = [[0] * (len(cells) + 1) for _ in range(layers)]
    for t in range(len(cells) - 1, -1, -1):
        i, j, k = cells[t]
        for arr, idx in ((feed_u, i), (feed_v, j), (feed_w, k)):
            for line in range(len(arr)):
                arr[line][t] = arr[line][t + 1]
        feed_u[i][t] += 1
        feed_v[j][t] += 1
        feed_w[k][t] += 1
    out = []
    assign = [0] * len(cells)
    bound = enc.bound

    def rec(t):
        if t == len(cells):
            if not any(ru) and not any(rv) and not any(rw):
                cube = [[[0] * layers for _ in range(r)] for _ in range(r)]
                for val, (i, j, k) in zip(assign, cells):
                    cube[i][j][k] = val
                out.append(
                    Table3(tuple(tuple(tuple(row) for row in plane) for plane in cube))
                )
            return
        i, j, k = cells[t]
        hi = min(ru[i], rv[j], rw[k], bound)
        lo = 0
        # if this is the last feeder of a line, it must close the line exactly
        need = []
        if feed_u[i][t + 1] == 0:
            need.append(ru[i])
        if feed_v[j][t + 1] == 0:
            need.append(rv[j])
        if feed_w[k][t + 1] == 0:
            need.append(rw[k])
        if need:
            if len(set(need)) > 1 or need[0] > hi:
                return
            lo = hi = need[0]
        for val in range(lo, hi + 1):
            assign[t] = val
            ru[i] -= val
            rv[j] -= val
            rw[k] -= val
            rec(t + 1)
            ru[i] += val
            rv[j] += val
            rw[k] += val
        assign[t] = 0

    rec(0)
    return out


def enumerate_system_vertices(a_matrix, b) -> list:
    """Vertices of {y >= 0 : Ay = b}, as coordinate tuples."""
    return enumerate_basic_feasible(
        [list(row) for row in a_matrix], [as_rational(e) for e in b]
    )


def enumerate_system_integer_points(a_matrix, b, bound: int) -> list:
    """Integer points of {0 <= y <= bound : Ay = b} by bounded search."""
    a = [[int(e) for e in row] for row in a_matrix]
    bvec = [as_rational(e) for e in b]
    m = len(a)
    n = len(a[0]) if m else 0
    out = []
    point = [0] * n

    def rec(j, residual):
        if j == n:
            if all(e == 0 for e in residual):
                out.append(tuple(point))
            return
        for val in range(bound + 1):
            point[j] = val
            nr = [residual[i] - a[i][j] * val for i in range(m)]
            # remaining variables are bounded, so prune when no mass can fix a row
            rec(j + 1, nr)
        point[j] = 0

    rec(0, list(bvec))
    return out


def verify_representation(enc: UniversalityEncoding, system_points, face_points) -> bool:
    """Coordinate projection must biject the face points onto the system points."""
    cells = enc.source_var_cells if enc.source_var_cells is not None else enc.var_cells
    proj = [tuple(fp[c3] for c3 in cells) for fp in face_points]
    if len(set(proj)) != len(proj):
        return False
    return set(proj) == {tuple(as_rational(e) for e in pt) for pt in system_points}
