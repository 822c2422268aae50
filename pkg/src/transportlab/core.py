"""Shared types: margins, tables, support graphs, constraint systems, JSON I/O.

All arithmetic is exact. Values are fractions.Fraction throughout; floats are
never used in any decision. Cells are indexed 0-based and ordered
lexicographically, (i, j) for 2-way and (i, j, k) for 3-way tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidMargins

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce an int, string 'a/b', or Fraction to an exact Fraction.

    Floats are rejected: they have no place in exact margin data.
    """
    if isinstance(value, bool):
        raise InvalidMargins(f"not a rational value: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidMargins(f"bad rational literal {value!r}") from exc
    raise InvalidMargins(f"not a rational value: {value!r}")


def rational_to_obj(x: Fraction):
    """Serialize a Fraction as a JSON scalar: int when integral, else 'a/b'."""
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


def _check_margin_vector(name: str, vec: tuple) -> None:
    if len(vec) == 0:
        raise InvalidMargins(f"{name} is empty")
    for e in vec:
        if e < 0:
            raise InvalidMargins(f"{name} has a negative entry: {e}")


@dataclass(frozen=True)
class Margins2:
    """Row sums u (length p) and column sums v (length q) of a 2-way table."""

    u: tuple
    v: tuple

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(as_rational(e) for e in self.u))
        object.__setattr__(self, "v", tuple(as_rational(e) for e in self.v))
        _check_margin_vector("u", self.u)
        _check_margin_vector("v", self.v)

    @property
    def p(self) -> int:
        return len(self.u)

    @property
    def q(self) -> int:
        return len(self.v)

    @property
    def total(self) -> Fraction:
        return sum(self.u, Fraction(0))


@dataclass(frozen=True)
class AxialMargins:
    """1-margins of a p x q x s table: axis sums u, v, w."""

    u: tuple
    v: tuple
    w: tuple

    def __post_init__(self):
        for name in ("u", "v", "w"):
            vec = tuple(as_rational(e) for e in getattr(self, name))
            object.__setattr__(self, name, vec)
            _check_margin_vector(name, vec)

    @property
    def p(self) -> int:
        return len(self.u)

    @property
    def q(self) -> int:
        return len(self.v)

    @property
    def s(self) -> int:
        return len(self.w)

    @property
    def total(self) -> Fraction:
        return sum(self.u, Fraction(0))


@dataclass(frozen=True)
class PlanarMargins:
    """2-margins of a p x q x s table.

    U[j][k] = sum over i, V[i][k] = sum over j, W[i][j] = sum over k.
    U is q x s, V is p x s, W is p x q.
    """

    U: tuple
    V: tuple
    W: tuple

    def __post_init__(self):
        for name in ("U", "V", "W"):
            mat = tuple(tuple(as_rational(e) for e in row) for row in getattr(self, name))
            object.__setattr__(self, name, mat)
            if len(mat) == 0 or any(len(r) == 0 for r in mat):
                raise InvalidMargins(f"{name} is empty")
            if len({len(r) for r in mat}) != 1:
                raise InvalidMargins(f"{name} is ragged")
            for row in mat:
                for e in row:
                    if e < 0:
                        raise InvalidMargins(f"{name} has a negative entry: {e}")
        p, q, s = len(self.V), len(self.U), len(self.U[0])
        if len(self.V[0]) != s or len(self.W) != p or len(self.W[0]) != q:
            raise InvalidMargins(
                f"inconsistent shapes: U is {len(self.U)}x{len(self.U[0])}, "
                f"V is {len(self.V)}x{len(self.V[0])}, W is {len(self.W)}x{len(self.W[0])}"
            )

    @property
    def p(self) -> int:
        return len(self.V)

    @property
    def q(self) -> int:
        return len(self.U)

    @property
    def s(self) -> int:
        return len(self.U[0])

    @property
    def total(self) -> Fraction:
        return sum((e for row in self.W for e in row), Fraction(0))


@dataclass(frozen=True)
class Table2:
    """A p x q array of nonnegative rationals, stored row-major."""

    entries: tuple

    def __post_init__(self):
        mat = tuple(tuple(as_rational(e) for e in row) for row in self.entries)
        object.__setattr__(self, "entries", mat)
        if len(mat) == 0 or any(len(r) != len(mat[0]) for r in mat):
            raise InvalidMargins("table is empty or ragged")
        for row in mat:
            for e in row:
                if e < 0:
                    raise InvalidMargins(f"table has a negative entry: {e}")

    @property
    def p(self) -> int:
        return len(self.entries)

    @property
    def q(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, cell):
        i, j = cell
        return self.entries[i][j]

    def margins(self) -> Margins2:
        u = tuple(sum(row, Fraction(0)) for row in self.entries)
        v = tuple(sum(col, Fraction(0)) for col in zip(*self.entries))
        return Margins2(u, v)

    def flat(self) -> tuple:
        return tuple(e for row in self.entries for e in row)

    def support(self) -> tuple:
        return tuple(
            (i, j)
            for i, row in enumerate(self.entries)
            for j, e in enumerate(row)
            if e != 0
        )


@dataclass(frozen=True)
class Table3:
    """A p x q x s array of nonnegative rationals, entries[i][j][k]."""

    entries: tuple

    def __post_init__(self):
        cube = tuple(
            tuple(tuple(as_rational(e) for e in row) for row in plane)
            for plane in self.entries
        )
        object.__setattr__(self, "entries", cube)
        if len(cube) == 0 or len(cube[0]) == 0 or len(cube[0][0]) == 0:
            raise InvalidMargins("table is empty")
        q, s = len(cube[0]), len(cube[0][0])
        for plane in cube:
            if len(plane) != q or any(len(row) != s for row in plane):
                raise InvalidMargins("table is ragged")
            for row in plane:
                for e in row:
                    if e < 0:
                        raise InvalidMargins(f"table has a negative entry: {e}")

    @property
    def p(self) -> int:
        return len(self.entries)

    @property
    def q(self) -> int:
        return len(self.entries[0])

    @property
    def s(self) -> int:
        return len(self.entries[0][0])

    def __getitem__(self, cell):
        i, j, k = cell
        return self.entries[i][j][k]

    def axial_margins(self) -> AxialMargins:
        p, q, s = self.p, self.q, self.s
        u = tuple(
            sum((self.entries[i][j][k] for j in range(q) for k in range(s)), Fraction(0))
            for i in range(p)
        )
        v = tuple(
            sum((self.entries[i][j][k] for i in range(p) for k in range(s)), Fraction(0))
            for j in range(q)
        )
        w = tuple(
            sum((self.entries[i][j][k] for i in range(p) for j in range(q)), Fraction(0))
            for k in range(s)
        )
        return AxialMargins(u, v, w)

    def planar_margins(self) -> PlanarMargins:
        p, q, s = self.p, self.q, self.s
        U = tuple(
            tuple(sum((self.entries[i][j][k] for i in range(p)), Fraction(0)) for k in range(s))
            for j in range(q)
        )
        V = tuple(
            tuple(sum((self.entries[i][j][k] for j in range(q)), Fraction(0)) for k in range(s))
            for i in range(p)
        )
        W = tuple(
            tuple(sum((self.entries[i][j][k] for k in range(s)), Fraction(0)) for j in range(q))
            for i in range(p)
        )
        return PlanarMargins(U, V, W)

    def flat(self) -> tuple:
        return tuple(e for plane in self.entries for row in plane for e in row)

    def support(self) -> tuple:
        return tuple(
            (i, j, k)
            for i, plane in enumerate(self.entries)
            for j, row in enumerate(plane)
            for k, e in enumerate(row)
            if e != 0
        )


@dataclass(frozen=True)
class SupportGraph:
    """Bipartite graph on p supply and q demand nodes; edges are support cells."""

    p: int
    q: int
    edges: frozenset

    def degree_supply(self, i: int) -> int:
        return sum(1 for (a, _) in self.edges if a == i)

    def degree_demand(self, j: int) -> int:
        return sum(1 for (_, b) in self.edges if b == j)

    def is_forest(self) -> bool:
        parent = list(range(self.p + self.q))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for (i, j) in self.edges:
            ra, rb = find(i), find(self.p + j)
            if ra == rb:
                return False
            parent[ra] = rb
        return True


def support_graph(x: Table2) -> SupportGraph:
    return SupportGraph(x.p, x.q, frozenset(x.support()))


def cells_2way(p: int, q: int) -> tuple:
    return tuple((i, j) for i in range(p) for j in range(q))


def cells_3way(p: int, q: int, s: int) -> tuple:
    return tuple((i, j, k) for i in range(p) for j in range(q) for k in range(s))


@dataclass(frozen=True)
class ConstraintSystem:
    """Margin equations Ax = b with 0/1 matrix A over lexicographic cells.

    Row order is part of the contract:
      2way:   demand (column-sum) rows first, then supply (row-sum) rows;
      axial:  u rows, then v rows, then w rows;
      planar: U rows by (j, k), then V rows by (i, k), then W rows by (i, j).
    rhs is None when the system is built from a shape alone.
    """

    kind: str
    shape: tuple
    cells: tuple
    rows: tuple
    rhs: tuple | None

    def __post_init__(self):
        object.__setattr__(self, "_col", {c: n for n, c in enumerate(self.cells)})

    def column_of(self, cell) -> int:
        return self._col[cell]

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_cols(self) -> int:
        return len(self.cells)


def build_constraint_system(kind: str, shape: Sequence[int], margins=None) -> ConstraintSystem:
    """Build the margin equation system for a shape; fill rhs when margins given."""
    shape = tuple(int(n) for n in shape)
    if any(n < 1 for n in shape):
        raise InvalidMargins(f"bad shape {shape}")
    if kind == "2way":
        p, q = shape
        cells = cells_2way(p, q)
        rows = []
        rhs = []
        for j in range(q):
            rows.append(tuple(1 if cj == j else 0 for (_, cj) in cells))
        for i in range(p):
            rows.append(tuple(1 if ci == i else 0 for (ci, _) in cells))
        if margins is not None:
            rhs = list(margins.v) + list(margins.u)
    elif kind == "axial":
        p, q, s = shape
        cells = cells_3way(p, q, s)
        rows = []
        for i in range(p):
            rows.append(tuple(1 if c[0] == i else 0 for c in cells))
        for j in range(q):
            rows.append(tuple(1 if c[1] == j else 0 for c in cells))
        for k in range(s):
            rows.append(tuple(1 if c[2] == k else 0 for c in cells))
        if margins is not None:
            rhs = list(margins.u) + list(margins.v) + list(margins.w)
    elif kind == "planar":
        p, q, s = shape
        cells = cells_3way(p, q, s)
        rows = []
        for j in range(q):
            for k in range(s):
                rows.append(tuple(1 if (c[1], c[2]) == (j, k) else 0 for c in cells))
        for i in range(p):
            for k in range(s):
                rows.append(tuple(1 if (c[0], c[2]) == (i, k) else 0 for c in cells))
        for i in range(p):
            for j in range(q):
                rows.append(tuple(1 if (c[0], c[1]) == (i, j) else 0 for c in cells))
        if margins is not None:
            rhs = [e for row in margins.U for e in row]
            rhs += [e for row in margins.V for e in row]
            rhs += [e for row in margins.W for e in row]
    else:
        raise InvalidMargins(f"unknown kind {kind!r}")
    return ConstraintSystem(
        kind=kind,
        shape=shape,
        cells=cells,
        rows=tuple(rows),
        rhs=tuple(rhs) if margins is not None else None,
    )


# ---------------------------------------------------------------------------
# JSON instance format.
#
# {"kind": "2way",   "u": [...], "v": [...]}
# {"kind": "axial",  "u": [...], "v": [...], "w": [...]}
# {"kind": "planar", "U": [[...]], "V": [[...]], "W": [[...]]}
#
# Scalars are ints or strings "a/b". An optional "cost" field carries a cost
# array shaped like the table (used by the margin-reduction tooling).
# ---------------------------------------------------------------------------


def parse_instance(obj: dict):
    """Parse a JSON instance dict into the matching margins object."""
    if not isinstance(obj, dict):
        raise InvalidMargins("instance must be a JSON object")
    kind = obj.get("kind")
    if kind == "2way":
        _require_fields(obj, ("u", "v"))
        return Margins2(tuple(obj["u"]), tuple(obj["v"]))
    if kind == "axial":
        _require_fields(obj, ("u", "v", "w"))
        return AxialMargins(tuple(obj["u"]), tuple(obj["v"]), tuple(obj["w"]))
    if kind == "planar":
        _require_fields(obj, ("U", "V", "W"))
        return PlanarMargins(
            tuple(tuple(r) for r in obj["U"]),
            tuple(tuple(r) for r in obj["V"]),
            tuple(tuple(r) for r in obj["W"]),
        )
    raise InvalidMargins(f"unknown instance kind {kind!r}")


def _require_fields(obj: dict, names: Iterable[str]) -> None:
    for name in names:
        if name not in obj:
            raise InvalidMargins(f"instance is missing field {name!r}")


def instance_to_obj(m) -> dict:
    if isinstance(m, Margins2):
        return {
            "kind": "2way",
            "u": [rational_to_obj(e) for e in m.u],
            "v": [rational_to_obj(e) for e in m.v],
        }
    if isinstance(m, AxialMargins):
        return {
            "kind": "axial",
            "u": [rational_to_obj(e) for e in m.u],
            "v": [rational_to_obj(e) for e in m.v],
            "w": [rational_to_obj(e) for e in m.w],
        }
    if isinstance(m, PlanarMargins):
        return {
            "kind": "planar",
            "U": [[rational_to_obj(e) for e in row] for row in m.U],
            "V": [[rational_to_obj(e) for e in row] for row in m.V],
            "W": [[rational_to_obj(e) for e in row] for row in m.W],
        }
    raise TypeError(f"not a margins object: {m!r}")


def table2_to_obj(x: Table2) -> list:
    return [[rational_to_obj(e) for e in row] for row in x.entries]


def table3_to_obj(x: Table3) -> list:
    return [[[rational_to_obj(e) for e in row] for row in plane] for plane in x.entries]


def parse_table2(rows) -> Table2:
    return Table2(tuple(tuple(r) for r in rows))


def parse_table3(planes) -> Table3:
    return Table3(tuple(tuple(tuple(r) for r in plane) for plane in planes))


def load_instance(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidMargins(f"instance is not valid JSON: {exc}") from exc
    return parse_instance(obj)
