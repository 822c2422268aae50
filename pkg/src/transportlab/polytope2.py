"""Classical p x q transportation polytopes with exact arithmetic.

Vertices are enumerated through spanning trees of the complete bipartite
support graph, so every vertex solve is a leaf-stripping pass and never a
general linear solve. Genericity of margins is an exact subset-sum check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .core import Margins2, SupportGraph, Table2, support_graph
from .errors import (
    Degenerate,
    Infeasible,
    InvalidAlpha,
    InvalidMargins,
    LemmaOutOfRange,
    NotGeneric,
    NotInPolytope,
    TooLarge,
    TooLargeForExactCheck,
    WalkBudgetExceeded,
)
from .linalg import affine_rank

VERTEX_CELL_GUARD = 36
GENERIC_NODE_GUARD = 24


def is_feasible(m: Margins2) -> bool:
    """Nonnegative margins with equal totals; that is all it takes."""
    return sum(m.u, Fraction(0)) == sum(m.v, Fraction(0))


def dimension2(m: Margins2) -> int:
    if not is_feasible(m):
        raise Infeasible("margin totals differ")
    return (m.p - 1) * (m.q - 1)


def northwest_corner(m: Margins2) -> Table2:
    """Greedy northwest-corner vertex: always feasible to build when totals agree."""
    if not is_feasible(m):
        raise Infeasible("margin totals differ")
    p, q = m.p, m.q
    row = list(m.u)
    col = list(m.v)
    x = [[Fraction(0)] * q for _ in range(p)]
    i = j = 0
    while i < p and j < q:
        t = min(row[i], col[j])
        x[i][j] = t
        row[i] -= t
        col[j] -= t
        if row[i] == 0 and i < p - 1:
            i += 1
        elif col[j] == 0 and j < q - 1:
            j += 1
        else:
            if row[i] == 0:
                i += 1
            else:
                j += 1
    return Table2(tuple(tuple(r) for r in x))


def is_generic(m: Margins2) -> bool:
    """No nonempty subset-sum of u meets one of v, full-against-full excluded."""
    p, q = m.p, m.q
    if p + q > GENERIC_NODE_GUARD:
        raise TooLargeForExactCheck(f"2^{p} * 2^{q} subset pairs refused")
    return _generic_check(m.u, m.v)


def _generic_check(u, v) -> bool:
    p, q = len(u), len(v)
    sums_u = {}
    for mask in range(1, 1 << p):
        s = sum((u[i] for i in range(p) if mask >> i & 1), Fraction(0))
        sums_u.setdefault(s, []).append(mask)
    full_u = (1 << p) - 1
    full_v = (1 << q) - 1
    for mask in range(1, 1 << q):
        s = sum((v[j] for j in range(q) if mask >> j & 1), Fraction(0))
        if s in sums_u:
            for mu in sums_u[s]:
                if not (mu == full_u and mask == full_v):
                    return False
    return True


def is_vertex(x: Table2, m: Margins2) -> bool:
    """Margins must match exactly; then vertex iff the support graph is a forest."""
    if any(e <= 0 for e in m.u + m.v):
        raise InvalidMargins("strictly positive margins required")
    mm = x.margins()
    if mm.u != m.u or mm.v != m.v:
        raise NotInPolytope("table does not satisfy the margins")
    return support_graph(x).is_forest()


@dataclass(frozen=True)
class VertexSet2:
    margins: Margins2
    vertices: tuple
    degenerate_flag: bool

    def __len__(self):
        return len(self.vertices)


def _all_spanning_trees(p: int, q: int):
    """Yield edge-index lists of spanning trees of K_{p,q}.

    Include/exclude recursion over the lexicographic edge list with a
    union-find that supports rollback; the count prune keeps dead branches
    shallow.
    """
    n = p + q
    edges = [(i, p + j) for i in range(p) for j in range(q)]
    m = len(edges)
    parent = list(range(n))
    rank = [0] * n

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    chosen = []

    def rec(eidx, joined):
        if joined == n - 1:
            yield list(chosen)
            return
        if m - eidx < n - 1 - joined:
            return
        a, b = edges[eidx]
        ra, rb = find(a), find(b)
        if ra != rb:
            if rank[ra] < rank[rb]:
                ra, rb = rb, ra
            parent[rb] = ra
            bumped = rank[ra] == rank[rb]
            if bumped:
                rank[ra] += 1
            chosen.append(eidx)
            yield from rec(eidx + 1, joined + 1)
            chosen.pop()
            parent[rb] = rb
            if bumped:
                rank[ra] -= 1
        yield from rec(eidx + 1, joined)

    yield from rec(0, 0)


def _tree_solve(p, q, tree, u, v):
    """值 on a spanning tree by leaf stripping; None if any value is negative."""
    n = p + q
    edges = [(i, p + j) for i in range(p) for j in range(q)]
    adj = [[] for _ in range(n)]
    for eidx in tree:
        a, b = edges[eidx]
        adj[a].append((eidx, b))
        adj[b].append((eidx, a))
    rem = list(u) + list(v)
    deg = [len(adj[x]) for x in range(n)]
    used = [False] * len(edges)
    val = {}
    stack = [x for x in range(n) if deg[x] == 1]
    while stack:
        x = stack.pop()
        if deg[x] != 1:
            continue
        eidx, other = next((e, o) for e, o in adj[x] if not used[e])
        t = rem[x]
        if t < 0:
            return None
        val[eidx] = t
        used[eidx] = True
        rem[x] = 0
        rem[other] -= t
        deg[x] -= 1
        deg[other] -= 1
        if deg[other] == 1:
            stack.append(other)
    if any(t < 0 for t in val.values()):
        return None
    flat = [0] * (p * q)
    for eidx, t in val.items():
        flat[eidx] = t
    return tuple(flat)


def enumerate_vertices(m: Margins2) -> VertexSet2:
    """All vertices, via spanning trees of K_{p,q}; duplicates collapse.

    degenerate_flag is set when some vertex has support smaller than p+q-1.
    """
    p, q = m.p, m.q
    if p * q > VERTEX_CELL_GUARD:
        raise TooLarge(f"{p}x{q} exceeds the vertex enumeration guard")
    if any(e <= 0 for e in m.u + m.v):
        raise InvalidMargins("strictly positive margins required")
    if not is_feasible(m):
        raise Infeasible("margin totals differ")
    u, v = list(m.u), list(m.v)
    seen = set()
    for tree in _all_spanning_trees(p, q):
        flat = _tree_solve(p, q, tree, u, v)
        if flat is not None:
            seen.add(flat)
    verts = sorted(seen)
    need = p + q - 1
    degenerate = any(sum(1 for e in f if e != 0) < need for f in verts)
    tables = tuple(
        Table2(tuple(tuple(f[i * q + j] for j in range(q)) for i in range(p))) for f in verts
    )
    return VertexSet2(margins=m, vertices=tables, degenerate_flag=degenerate)


def adjacent(x: Table2, y: Table2) -> bool:
    """Vertices are adjacent iff the union of their supports holds a unique cycle."""
    ex = set(x.support())
    ey = set(y.support())
    if ex == ey:
        return False
    p, q = x.p, x.q
    edges = ex | ey
    parent = list(range(p + q))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comps = p + q
    for (i, j) in edges:
        ra, rb = find(i), find(p + j)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return len(edges) - (p + q) + comps == 1


@dataclass(frozen=True)
class PolytopeGraph:
    n: int
    adjacency: tuple
    vertices: tuple

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2


def polytope_graph(m: Margins2) -> PolytopeGraph:
    vs = enumerate_vertices(m)
    tabs = vs.vertices
    n = len(tabs)
    supports = [set(t.support()) for t in tabs]
    adj = [[] for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if _adjacent_supports(supports[a], supports[b], m.p, m.q):
                adj[a].append(b)
                adj[b].append(a)
    return PolytopeGraph(n=n, adjacency=tuple(tuple(r) for r in adj), vertices=tabs)


def _adjacent_supports(ex, ey, p, q) -> bool:
    if ex == ey:
        return False
    edges = ex | ey
    parent = list(range(p + q))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comps = p + q
    for (i, j) in edges:
        ra, rb = find(i), find(p + j)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return len(edges) - (p + q) + comps == 1


def bfs_distances(g: PolytopeGraph, source: int):
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for a in frontier:
            for b in g.adjacency[a]:
                if dist[b] < 0:
                    dist[b] = dist[a] + 1
                    nxt.append(b)
        frontier = nxt
    return dist


def diameter(g: PolytopeGraph) -> int:
    if g.n == 0:
        raise Infeasible("empty graph has no diameter")
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if min(dist) < 0:
            raise AssertionError("polytope graph must be connected")
        best = max(best, max(dist))
    return best


def facet_indicator(m: Margins2, i: int, j: int) -> bool:
    """x_ij = 0 cuts a facet iff u_i + v_j falls short of the total."""
    p, q = m.p, m.q
    if p * q <= 4:
        raise LemmaOutOfRange("facet characterization needs p*q > 4")
    if not (0 <= i < p and 0 <= j < q):
        raise InvalidMargins(f"cell ({i},{j}) out of range")
    if not is_feasible(m):
        raise Infeasible("margin totals differ")
    if any(e <= 0 for e in m.u + m.v):
        raise InvalidMargins("strictly positive margins required")
    return m.u[i] + m.v[j] < m.total


def facet_count(m: Margins2) -> int:
    return sum(
        1 for i in range(m.p) for j in range(m.q) if facet_indicator(m, i, j)
    )


def birkhoff_margins(p: int) -> Margins2:
    return Margins2((Fraction(1),) * p, (Fraction(1),) * p)


def central_margins(p: int, q: int) -> Margins2:
    return Margins2((Fraction(q),) * p, (Fraction(p),) * q)


def birkhoff_degree(p: int) -> int:
    """Vertex degree in the Birkhoff polytope graph (all vertices alike)."""
    return sum(comb(p, k) * factorial(p - k - 1) for k in range(p - 1))


def pak_cost(p: int, alpha) -> tuple:
    """Geometric cost vector alpha^(i*p+j) over cells of a p x p table."""
    a = Fraction(alpha)
    if not (0 < a < Fraction(1, p)):
        raise InvalidAlpha(f"alpha must lie strictly between 0 and 1/{p}")
    return tuple(a ** (i * p + j) for i in range(p) for j in range(p))


def longest_decreasing_path(g: PolytopeGraph, cost) -> int:
    """Longest path in the orientation by strictly decreasing cost, in edges."""
    cost = tuple(Fraction(c) for c in cost)
    vals = [sum(c * e for c, e in zip(cost, t.flat())) for t in g.vertices]
    order = sorted(range(g.n), key=lambda a: vals[a])
    best = [0] * g.n
    for a in order:  # increasing value: all out-neighbors (smaller) already done
        for b in g.adjacency[a]:
            if vals[b] < vals[a]:
                best[a] = max(best[a], best[b] + 1)
    return max(best, default=0)


def perturb_margins(m: Margins2, seed=None) -> Margins2:
    """Degenerate in, generic out: nudge the northwest vertex by distinct
    powers of a small epsilon and read off the new margins. The result is
    re-checked exactly and epsilon shrinks until the check passes."""
    if not is_feasible(m):
        raise Infeasible("margin totals differ")
    p, q = m.p, m.q
    den = 1
    for e in m.u + m.v:
        den = den * e.denominator
    base = northwest_corner(m)
    scale = 2 * p * q * den + 1
    while True:
        eps = Fraction(1, scale)
        x = [
            [base.entries[i][j] + eps ** (i * q + j + 1) for j in range(q)]
            for i in range(p)
        ]
        mm = Table2(tuple(tuple(r) for r in x)).margins()
        if is_generic(mm):
            return mm
        scale *= 2


# ---------------------------------------------------------------------------
# Pivot walk between two vertices of a generic instance.
#
# The walk runs from y to x in phases. Each phase picks the node with the
# most leaf neighbors in the target tree restricted to active nodes, makes
# each such leaf edge present, strips the leaf's other active edges by
# pivots that enter alongside a larger-valued neighbor edge, and then
# freezes the leaf. Each leaf costs at most a couple of pivots; the budget
# 4(p+q-2) is asserted, never silently exceeded.
# ---------------------------------------------------------------------------


def hurkens_walk(m: Margins2, x: Table2, y: Table2):
    """Pivot path from vertex y to vertex x; list of tables, y first, x last."""
    p, q = m.p, m.q
    if any(e <= 0 for e in m.u + m.v):
        raise InvalidMargins("strictly positive margins required")
    if not is_generic(m):
        raise Degenerate("margins are degenerate; perturb first")
    _require_nondegenerate_vertex(m, x)
    _require_nondegenerate_vertex(m, y)
    budget = 4 * (p + q - 2)
    if x.entries == y.entries:
        return [y]

    target = {(i, p + j): x.entries[i][j] for (i, j) in x.support()}
    cur = {(i, p + j): y.entries[i][j] for (i, j) in y.support()}
    active = [set(range(p)), set(range(p, p + q))]
    path = [y]
    pivots = 0

    def cur_table():
        t = [[Fraction(0)] * q for _ in range(p)]
        for (a, b), t_val in cur.items():
            t[a][b - p] = t_val
        return Table2(tuple(tuple(r) for r in t))

    def neighbors(node, tree):
        return [b if a == node else a for (a, b) in tree if node in (a, b)]

    def do_pivot(enter):
        nonlocal pivots
        cyc_edges, signs = _fundamental_cycle(cur, enter)
        theta = None
        leaving = None
        ties = 0
        for e, sgn in zip(cyc_edges, signs):
            if sgn < 0:
                t_val = cur[e]
                if theta is None or t_val < theta:
                    theta, leaving, ties = t_val, e, 1
                elif t_val == theta:
                    ties += 1
        if theta is None or theta <= 0 or ties != 1:
            raise Degenerate("pivot hit a tie or a zero edge; instance not generic")
        cur[enter] = Fraction(0)
        for e, sgn in zip(cyc_edges, signs):
            if sgn < 0:
                cur[e] -= theta
            else:
                cur[e] += theta
        del cur[leaving]
        pivots += 1
        if pivots > budget:
            raise WalkBudgetExceeded(f"exceeded {budget} pivots for {p}x{q}")
        path.append(cur_table())

    while set(cur) != set(target):
        center, leaves, side = _pick_phase(target, active, p)
        for leaf in leaves:
            edge_cl = _norm_edge(center, leaf, p)
            if edge_cl not in cur:
                do_pivot(edge_cl)
            while True:
                rivals = sorted(
                    o
                    for o in neighbors(leaf, cur)
                    if o != center and o in active[side]
                )
                if not rivals:
                    break
                rival = rivals[0]
                edge_rl = _norm_edge(rival, leaf, p)
                # neighbors of center in the current tree, outside this
                # phase's leaf set, not already touching the rival
                hats = [
                    h
                    for h in neighbors(center, cur)
                    if h != leaf
                    and h in active[1 - side]
                    and h not in leaves
                    and _norm_edge(rival, h, p) not in cur
                ]
                if hats:
                    bigger = [h for h in hats if cur[_norm_edge(center, h, p)] > cur[edge_rl]]
                    if bigger:
                        h = min(bigger)
                    else:
                        h = max(hats, key=lambda t: (cur[_norm_edge(center, t, p)], -t))
                    do_pivot(_norm_edge(rival, h, p))
                else:
                    _strip_fallback(cur, edge_cl, edge_rl, active, p, do_pivot)
            active[1 - side].discard(leaf)
        if not active[0] or not active[1]:
            break

    assert set(cur) == set(target) and all(cur[e] == target[e] for e in cur)
    return path


def _require_nondegenerate_vertex(m: Margins2, t: Table2):
    mm = t.margins()
    if mm.u != m.u or mm.v != m.v:
        raise NotInPolytope("table does not satisfy the margins")
    g = support_graph(t)
    if not g.is_forest():
        raise NotInPolytope("support has a cycle; not a vertex")
    if len(g.edges) != m.p + m.q - 1:
        raise Degenerate("vertex support is not a spanning tree")


def _norm_edge(a, b, p):
    return (a, b) if a < p else (b, a)


def _pick_phase(target, active, p):
    """Center with the most target-tree leaves among active nodes.

    The supply side is tried first; roles transpose only when no supply has
    a leaf demand. Ties go to the smallest index.
    """
    for side in (0, 1):
        centers, others = active[side], active[1 - side]
        best = None
        for c in sorted(centers):
            leaves = [
                o
                for o in sorted(others)
                if _norm_edge(c, o, p) in target
                and sum(1 for c2 in centers if _norm_edge(c2, o, p) in target) == 1
            ]
            if leaves and (best is None or len(leaves) > len(best[1])):
                best = (c, leaves)
        if best is not None:
            return best[0], best[1], side
    raise AssertionError("no leaf found in an active target forest")


def _fundamental_cycle(cur, enter):
    """Edges and signs of the cycle closed by `enter` in the tree `cur`."""
    a0, b0 = enter
    adj = {}
    for (a, b) in cur:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    parent = {a0: None}
    stack = [a0]
    while stack:
        n = stack.pop()
        if n == b0:
            break
        for o in adj.get(n, ()):
            if o not in parent:
                parent[o] = n
                stack.append(o)
    if b0 not in parent:
        raise AssertionError("entering edge endpoints lie in different components")
    seq = [b0]
    while seq[-1] != a0:
        seq.append(parent[seq[-1]])
    edges = [enter]
    signs = [1]
    sgn = -1
    for t in range(len(seq) - 1):
        a, b = seq[t], seq[t + 1]
        edges.append((a, b) if (a, b) in cur else (b, a))
        signs.append(sgn)
        sgn = -sgn
    return edges, signs


def _strip_fallback(cur, keep_edge, drop_edge, active, p, do_pivot):
    """General entering-edge search: remove drop_edge without touching keep_edge."""
    cand_enter = []
    for a in sorted(active[0]):
        for b in sorted(active[1]):
            e = _norm_edge(a, b, p)
            if e in cur:
                continue
            edges, signs = _fundamental_cycle(cur, e)
            es = dict(zip(edges, signs))
            if es.get(drop_edge, 0) >= 0:
                continue
            if es.get(keep_edge, 0) < 0:
                continue
            theta = min(cur[t] for t, sgn in es.items() if sgn < 0 and t != e)
            if theta == cur[drop_edge]:
                do_pivot(e)
                return
            cand_enter.append(e)
    if not cand_enter:
        raise Degenerate("no pivot can remove a rival edge; instance not generic")
    do_pivot(cand_enter[0])


# ---------------------------------------------------------------------------
# Hyperplane slices of the 0/1 cube. A p x 2 instance with margins (u, v)
# maps onto the slice of [0,1]^p by sum_i u_i y_i = v_1 via y_i = x_i1 / u_i.
# ---------------------------------------------------------------------------

SLICE_DIM_GUARD = 20


@dataclass(frozen=True)
class CubeSlice:
    a: tuple
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Fraction(e) for e in self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @property
    def d(self) -> int:
        return len(self.a)


def _cube_vertex_on_plane(sl: CubeSlice) -> bool:
    """Meet-in-the-middle subset-sum test: does a 0/1 point hit the plane?"""
    d = sl.d
    half = d // 2
    left = sl.a[:half]
    right = sl.a[half:]
    sums = set()
    for mask in range(1 << len(left)):
        sums.add(sum((left[i] for i in range(len(left)) if mask >> i & 1), Fraction(0)))
    for mask in range(1 << len(right)):
        s = sum((right[i] for i in range(len(right)) if mask >> i & 1), Fraction(0))
        if sl.b - s in sums:
            return True
    return False


def _require_generic_slice(sl: CubeSlice):
    if sl.d > SLICE_DIM_GUARD:
        raise TooLarge(f"cube dimension {sl.d} exceeds the guard")
    if _cube_vertex_on_plane(sl):
        raise NotGeneric("hyperplane passes through a cube vertex")


def slice_vertices(sl: CubeSlice) -> tuple:
    """Vertices of the slice: one per cube edge crossed in its interior."""
    _require_generic_slice(sl)
    d = sl.d
    out = set()
    for j in range(d):
        if sl.a[j] == 0:
            continue
        rest = [t for t in range(d) if t != j]
        for mask in range(1 << (d - 1)):
            z = {rest[t]: Fraction(mask >> t & 1) for t in range(d - 1)}
            s = sum((sl.a[t] * z[t] for t in rest), Fraction(0))
            t_val = (sl.b - s) / sl.a[j]
            if 0 < t_val < 1:
                pt = tuple(t_val if t == j else z[t] for t in range(d))
                out.add(pt)
    return tuple(sorted(out))


def side_signature(point, sl: CubeSlice) -> str:
    """Characters 0, 1 for tight cube facets, * for a strictly interior coordinate."""
    pt = tuple(Fraction(e) for e in point)
    if len(pt) != sl.d:
        raise ValueError("point dimension mismatch")
    if sum(a * e for a, e in zip(sl.a, pt)) != sl.b:
        raise NotInPolytope("point is not on the hyperplane")
    if any(e < 0 or e > 1 for e in pt):
        raise NotInPolytope("point is outside the cube")
    return "".join("0" if e == 0 else "1" if e == 1 else "*" for e in pt)


def hamming(s1: str, s2: str) -> int:
    if len(s1) != len(s2):
        raise ValueError("signatures have different lengths")
    return sum(1 for a, b in zip(s1, s2) if a != b)


def slice_adjacent(v, w, sl: CubeSlice) -> bool:
    """Two slice vertices are adjacent iff they share a 2-face of the cube."""
    sv = side_signature(v, sl)
    sw = side_signature(w, sl)
    if sv == sw:
        return False
    i = sv.index("*")
    j = sw.index("*")
    if i == j:
        return hamming(sv, sw) == 1
    return all(sv[t] == sw[t] for t in range(len(sv)) if t not in (i, j))


def signature_pivot_walk(sl: CubeSlice, v, w):
    """Shortest pivot path from v to w, steered by signature distance.

    Breadth-first search over slice edges, expanding distance-decreasing
    pivots first so the result follows signatures whenever it can. The path
    length is at most hamm(v, w) whenever a signature-monotone route exists;
    rare vertex pairs have graph distance hamm + 1 and get the true shortest
    path instead (two vertices at signature distance two need not share a
    common neighbor).
    """
    verts = slice_vertices(sl)
    v = tuple(Fraction(e) for e in v)
    w = tuple(Fraction(e) for e in w)
    if v not in verts or w not in verts:
        raise NotInPolytope("endpoints must be slice vertices")
    if v == w:
        return [v]
    sigs = {x: side_signature(x, sl) for x in verts}
    sig_w = sigs[w]
    parent = {v: None}
    frontier = [v]
    while frontier and w not in parent:
        nxt = []
        for cur in frontier:
            h = hamming(sigs[cur], sig_w)
            nbrs = [n for n in verts if n not in parent and slice_adjacent(cur, n, sl)]
            nbrs.sort(key=lambda n: (hamming(sigs[n], sig_w) >= h, n))
            for n in nbrs:
                if n not in parent:
                    parent[n] = cur
                    nxt.append(n)
        frontier = nxt
    if w not in parent:
        raise AssertionError("slice pivot graph is disconnected")
    path = [w]
    while path[-1] != v:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def slice_facet_count(sl: CubeSlice) -> int:
    """Count cube facets whose intersection with the slice has full facet rank."""
    verts = slice_vertices(sl)
    dim = affine_rank(verts)
    count = 0
    for j in range(sl.d):
        for c in (0, 1):
            on = [p for p in verts if p[j] == c]
            if on and affine_rank(on) == dim - 1:
                count += 1
    return count


def margins_to_slice(m: Margins2) -> CubeSlice:
    if m.q != 2:
        raise InvalidMargins("slice form requires exactly two columns")
    if any(e <= 0 for e in m.u + m.v):
        raise InvalidMargins("strictly positive margins required")
    return CubeSlice(a=m.u, b=m.v[0])


def slice_point_to_table(m: Margins2, point) -> Table2:
    """Inverse of the p x 2 correspondence: y_i = x_i0 / u_i."""
    if m.q != 2:
        raise InvalidMargins("slice form requires exactly two columns")
    rows = tuple(
        (m.u[i] * Fraction(point[i]), m.u[i] * (1 - Fraction(point[i])))
        for i in range(m.p)
    )
    return Table2(rows)


def table_to_slice_point(m: Margins2, x: Table2) -> tuple:
    if m.q != 2:
        raise InvalidMargins("slice form requires exactly two columns")
    return tuple(x.entries[i][0] / m.u[i] for i in range(m.p))
