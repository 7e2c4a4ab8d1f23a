"""Hermitian incidence and Laplacian matrices with exact cyclotomic entries.

Matrix rows follow the parent graph's vertex input order and columns follow
edge-id order, so identical inputs produce identical layouts.  Exact
determinants run over CycloNum entries: direct signed-permutation expansion
for small matrices and fraction-free Bareiss elimination for larger ones.

Laplacian-shaped matrices have a special structure: every entry is either an
integer (a degree) or -omega^(+-1), a single monomial in zeta_n.  The private
kernel in this module exploits that: each permutation term is one integer
times one power of zeta_n, accumulated in Z[x]/(x^n - 1) and reduced modulo
the cyclotomic polynomial once at the end.  The public functions are exact
either way; the kernel only makes the hot enumeration paths affordable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence, Union

import numpy as np

from .cyclotomic import CycloNum, RootParam, root_of_unity
from .errors import InputError, UnknownVertex
from .graph import OrientedGraph, Substructure

MatrixLike = Union["HermitianMatrix", "IncidenceMatrix", Sequence[Sequence]]

# a monomial cell is (integer coefficient, exponent mod n); None is zero
Cell = Union[tuple[int, int], None]


@dataclass(frozen=True)
class IncidenceMatrix:
    """Rows indexed by vertices, columns by edge ids, entries in {-omega, 1, 0}."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    entries: tuple[tuple[CycloNum, ...], ...]

    def gram(self) -> "HermitianMatrix":
        """The exact product with the conjugate transpose (equals the Laplacian)."""
        size = len(self.rows)
        out = []
        for i in range(size):
            row = []
            for j in range(size):
                acc = CycloNum.rational(0)
                for a, b in zip(self.entries[i], self.entries[j]):
                    acc = acc + a * b.conjugate()
                row.append(acc)
            out.append(tuple(row))
        return HermitianMatrix(self.rows, tuple(out))

    def to_json(self) -> dict:
        return {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "entries": [[x.to_json() for x in row] for row in self.entries],
            "preview": [[_preview(x) for x in row] for row in self.entries],
        }


@dataclass(frozen=True)
class HermitianMatrix:
    """A square matrix over Q(zeta_n) indexed by vertex ids."""

    index: tuple[int, ...]
    entries: tuple[tuple[CycloNum, ...], ...]

    def to_json(self) -> dict:
        return {
            "index": list(self.index),
            "entries": [[x.to_json() for x in row] for row in self.entries],
            "preview": [[_preview(x) for x in row] for row in self.entries],
        }


def _preview(x: CycloNum) -> str:
    z = x.to_complex()
    if abs(z.imag) < 1e-12:
        return f"{z.real:.6g}"
    return f"{z.real:.6g}{z.imag:+.6g}i"


# ---------------------------------------------------------------------------
# construction


def build_incidence(sub: Substructure, param: RootParam) -> IncidenceMatrix:
    """Incidence submatrix of the subset rows and columns: a column holds
    -omega at the edge's tail and 1 at its head, restricted to subset rows."""
    omega = root_of_unity(param)
    zero = CycloNum.rational(0)
    one = CycloNum.rational(1)
    vlist = sub.vlist
    elist = sub.elist
    entries = []
    for v in vlist:
        row = []
        for e in elist:
            tail, head = sub.parent.edges[e]
            if v == tail:
                row.append(-omega)
            elif v == head:
                row.append(one)
            else:
                row.append(zero)
        entries.append(tuple(row))
    return IncidenceMatrix(vlist, elist, tuple(entries))


def _substructure_cells(sub: Substructure, param: RootParam) -> tuple[list[list[Cell]], int]:
    n, q = param.order, param.power
    vlist = sub.vlist
    pos = {v: i for i, v in enumerate(vlist)}
    size = len(vlist)
    deg = [0] * size
    cells: list[list[Cell]] = [[None] * size for _ in range(size)]
    fwd = (-1, q % n)
    bwd = (-1, (-q) % n)
    for e in sub.eset:
        u, v = sub.parent.edges[e]
        iu = pos.get(u)
        iv = pos.get(v)
        if iu is not None:
            deg[iu] += 1
        if iv is not None:
            deg[iv] += 1
        if iu is not None and iv is not None:
            cells[iu][iv] = fwd
            cells[iv][iu] = bwd
    for i, d in enumerate(deg):
        if d:
            cells[i][i] = (d, 0)
    return cells, n


def _minor_cells(graph: OrientedGraph, param: RootParam,
                 vlist: tuple[int, ...]) -> tuple[list[list[Cell]], int]:
    # like a substructure Laplacian but with full-graph degrees on the diagonal
    n, q = param.order, param.power
    pos = {v: i for i, v in enumerate(vlist)}
    size = len(vlist)
    cells: list[list[Cell]] = [[None] * size for _ in range(size)]
    fwd = (-1, q % n)
    bwd = (-1, (-q) % n)
    for u, v in graph.edges:
        iu = pos.get(u)
        iv = pos.get(v)
        if iu is not None and iv is not None:
            cells[iu][iv] = fwd
            cells[iv][iu] = bwd
    for i, v in enumerate(vlist):
        d = graph.degree(v)
        if d:
            cells[i][i] = (d, 0)
    return cells, n


def build_laplacian(sub: Substructure, param: RootParam) -> HermitianMatrix:
    """Substructure Laplacian: subset-edge degrees on the diagonal, -omega /
    -conj(omega) off the diagonal for subset edges inside the vertex subset."""
    cells, n = _substructure_cells(sub, param)
    return HermitianMatrix(sub.vlist, _cells_to_entries(cells, n))


def _cells_to_entries(cells: list[list[Cell]], n: int) -> tuple[tuple[CycloNum, ...], ...]:
    zero = CycloNum.rational(0)

    @lru_cache(maxsize=None)
    def mono(c: int, e: int) -> CycloNum:
        vec = [0] * (e + 1)
        vec[e] = c
        return CycloNum.from_coeffs(n, vec)

    return tuple(
        tuple(zero if cell is None else mono(*cell) for cell in row)
        for row in cells)


# ---------------------------------------------------------------------------
# exact determinants


@lru_cache(maxsize=8)
def _signed_perms(size: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    out = []
    for perm in permutations(range(size)):
        inversions = sum(1 for i in range(size) for j in range(i + 1, size)
                         if perm[i] > perm[j])
        out.append((-1 if inversions & 1 else 1, perm))
    return tuple(out)


def _det_cells(cells: list[list[Cell]], size: int, n: int) -> list[int]:
    """Raw determinant of a monomial matrix as a length-n vector over
    Z[x]/(x^n - 1); reduce with CycloNum.from_coeffs to get the value."""
    out = [0] * n
    if size == 0:
        out[0] = 1
        return out
    if size <= 5:
        for sign, perm in _signed_perms(size):
            coeff = sign
            exp = 0
            for i in range(size):
                cell = cells[i][perm[i]]
                if cell is None:
                    coeff = 0
                    break
                coeff *= cell[0]
                exp += cell[1]
            if coeff:
                out[exp % n] += coeff
        return out
    rows = [[(j, c, e) for j, cell in enumerate(row) if cell for c, e in (cell,)]
            for row in cells]

    def rec(i: int, mask: int, coeff: int, exp: int):
        if i == size:
            out[exp % n] += coeff
            return
        for j, c, e in rows[i]:
            bit = 1 << j
            if mask & bit:
                if (mask & (bit - 1)).bit_count() & 1:
                    rec(i + 1, mask ^ bit, -coeff * c, exp + e)
                else:
                    rec(i + 1, mask ^ bit, coeff * c, exp + e)

    rec(0, (1 << size) - 1, 1, 0)
    return out


def _entries_of(M: MatrixLike) -> list[list[CycloNum]]:
    if isinstance(M, (HermitianMatrix, IncidenceMatrix)):
        raw: Iterable[Iterable] = M.entries
    else:
        raw = M
    out = []
    for row in raw:
        out.append([x if isinstance(x, CycloNum) else CycloNum.rational(Fraction(x))
                    for x in row])
    for row in out:
        if len(row) != len(out):
            raise InputError("determinant requires a square matrix")
    return out


def determinant(M: MatrixLike) -> CycloNum:
    """Exact determinant of a square CycloNum matrix; the empty matrix has
    determinant 1."""
    m = _entries_of(M)
    size = len(m)
    if size == 0:
        return CycloNum.rational(1)
    if size <= 4:
        acc = CycloNum.rational(0)
        for sign, perm in _signed_perms(size):
            term = CycloNum.rational(sign)
            for i in range(size):
                cell = m[i][perm[i]]
                if cell.is_zero:
                    term = None
                    break
                term = term * cell
            if term is not None:
                acc = acc + term
        return acc
    return _bareiss(m)


def _bareiss(m: list[list[CycloNum]]) -> CycloNum:
    size = len(m)
    sign = 1
    prev = CycloNum.rational(1)
    for k in range(size - 1):
        piv = next((i for i in range(k, size) if not m[i][k].is_zero), None)
        if piv is None:
            return CycloNum.rational(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        prev_inv = prev.inverse()
        pivot = m[k][k]
        for i in range(k + 1, size):
            left = m[i][k]
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * pivot - left * m[k][j]) * prev_inv
        prev = pivot
    det = m[size - 1][size - 1]
    return -det if sign < 0 else det


def numeric_determinant(M: MatrixLike) -> complex:
    """Floating determinant of the complex embedding, for diagnostics; agrees
    with the exact value to about 1e-6 relative on well-conditioned inputs."""
    m = _entries_of(M)
    if not m:
        return complex(1)
    arr = np.array([[x.to_complex() for x in row] for row in m], dtype=complex)
    return complex(np.linalg.det(arr))


# ---------------------------------------------------------------------------
# principal minors of the full-graph Laplacian


def laplacian_minor(graph: OrientedGraph, param: RootParam,
                    vset: Iterable[int]) -> CycloNum:
    """Exact principal minor det L_omega[vset] of the full-graph Laplacian
    (diagonal entries are full-graph degrees).  The empty minor is 1."""
    wanted = set(int(v) for v in vset)
    for v in wanted:
        if not graph.has_vertex(v):
            raise UnknownVertex(f"unknown vertex {v}")
    vlist = tuple(v for v in graph.vertices if v in wanted)
    cells, n = _minor_cells(graph, param, vlist)
    size = len(vlist)
    if size <= 7:
        return CycloNum.from_coeffs(n, _det_cells(cells, size, n))
    return determinant(HermitianMatrix(vlist, _cells_to_entries(cells, n)))
