"""Matrices over a commutative rig, organized as a PROP.

A morphism m -> n is an n x m matrix: rows index outputs, columns index
inputs, and composition is literal matrix product.  Tensor is the block
diagonal.  Storage is dense and row-major; zero-dimensional matrices keep
their shape explicitly, since the maps in and out of the object 0 are
shape-only data.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

from .errors import RigMismatchError, ShapeError
from .rigs import Rig, RigElement, RigHom


@dataclass(frozen=True)
class Matrix:
    """An n x m matrix of raw rig values; a morphism dom -> cod."""

    rig: Rig
    dom: int
    cod: int
    entries: tuple  # row-major raw values, length cod * dom

    def __post_init__(self):
        if self.dom < 0 or self.cod < 0:
            raise ShapeError(f"negative shape {self.cod}x{self.dom}")
        if len(self.entries) != self.cod * self.dom:
            raise ShapeError(
                f"entry count {len(self.entries)} != {self.cod}x{self.dom}"
            )

    def entry(self, i: int, j: int) -> RigElement:
        """Entry coupling input j to output i (0-based)."""
        if not (0 <= i < self.cod and 0 <= j < self.dom):
            raise IndexError(f"entry ({i},{j}) outside {self.cod}x{self.dom}")
        return RigElement(self.rig, self.entries[i * self.dom + j])

    def row_values(self, i: int) -> tuple:
        return self.entries[i * self.dom : (i + 1) * self.dom]

    @cached_property
    def _nonzero_rows(self):
        zero = self.rig.zero
        d = self.dom
        e = self.entries
        return tuple(
            tuple((j, v) for j in range(d) if (v := e[i * d + j]) != zero)
            for i in range(self.cod)
        )

    def __repr__(self):
        rows = "; ".join(
            " ".join(self.rig.show(v) for v in self.row_values(i))
            for i in range(self.cod)
        )
        return f"Matrix[{self.rig.name} {self.cod}x{self.dom}: {rows}]"


def _require_same_rig(f: Matrix, g: Matrix) -> Rig:
    if f.rig is not g.rig:
        raise RigMismatchError(f"mixed rigs: {f.rig.name} and {g.rig.name}")
    return f.rig


def from_rows(rig: Rig, rows: Iterable[Iterable], dom: int | None = None) -> Matrix:
    """Build a matrix from rows of raw values or RigElements."""
    grid = [list(r) for r in rows]
    cod = len(grid)
    if dom is None:
        dom = len(grid[0]) if grid else 0
    entries = []
    for r in grid:
        if len(r) != dom:
            raise ShapeError("ragged rows")
        for v in r:
            if isinstance(v, RigElement):
                if v.rig is not rig:
                    raise RigMismatchError("entry from a different rig")
                v = v.value
            entries.append(v)
    return Matrix(rig, dom, cod, tuple(entries))


def from_ints(rig: Rig, rows: Iterable[Iterable[int]], dom: int | None = None) -> Matrix:
    """Build a matrix from integer rows via the canonical map into the rig."""
    return from_rows(rig, [[rig.from_int(n) for n in r] for r in rows], dom)


def zeros(rig: Rig, dom: int, cod: int) -> Matrix:
    return Matrix(rig, dom, cod, (rig.zero,) * (cod * dom))


@lru_cache(maxsize=None)
def identity(rig: Rig, n: int) -> Matrix:
    entries = [rig.zero] * (n * n)
    for i in range(n):
        entries[i * n + i] = rig.one
    return Matrix(rig, n, n, tuple(entries))


@lru_cache(maxsize=None)
def symmetry(rig: Rig, m: int, n: int) -> Matrix:
    """The wire crossing m + n -> n + m: input k < m goes to output k + n,
    input m + k goes to output k."""
    size = m + n
    entries = [rig.zero] * (size * size)
    for k in range(m):
        entries[(k + n) * size + k] = rig.one
    for k in range(n):
        entries[k * size + (m + k)] = rig.one
    return Matrix(rig, size, size, tuple(entries))


def compose(g: Matrix, f: Matrix) -> Matrix:
    """Matrix product g . f, the composite of f: m -> k then g: k -> n."""
    rig = _require_same_rig(f, g)
    if f.cod != g.dom:
        raise ShapeError(
            f"cannot compose: middle object {f.cod} != {g.dom}"
        )
    m, n = f.dom, g.cod
    zero, one = rig.zero, rig.one
    radd, rmul = rig.add, rig.mul
    fe = f.entries
    acc = [zero] * (n * m)
    if m:
        for i, row in enumerate(g._nonzero_rows):
            base = i * m
            for k, gv in row:
                frow = k * m
                if gv == one:
                    for j in range(m):
                        fv = fe[frow + j]
                        if fv != zero:
                            cur = acc[base + j]
                            acc[base + j] = fv if cur == zero else radd(cur, fv)
                else:
                    for j in range(m):
                        fv = fe[frow + j]
                        if fv != zero:
                            p = rmul(gv, fv)
                            cur = acc[base + j]
                            acc[base + j] = p if cur == zero else radd(cur, p)
    return Matrix(rig, m, n, tuple(acc))


def tensor(f: Matrix, g: Matrix) -> Matrix:
    """Block diagonal [[f, 0], [0, g]] with f in the upper-left block."""
    rig = _require_same_rig(f, g)
    dom, cod = f.dom + g.dom, f.cod + g.cod
    zero = rig.zero
    entries = [zero] * (cod * dom)
    for i in range(f.cod):
        entries[i * dom : i * dom + f.dom] = f.entries[i * f.dom : (i + 1) * f.dom]
    off = f.cod * dom + f.dom
    for i in range(g.cod):
        entries[off + i * dom : off + i * dom + g.dom] = g.entries[
            i * g.dom : (i + 1) * g.dom
        ]
    out = Matrix(rig, dom, cod, tuple(entries))
    # splice the nonzero structure of the blocks rather than rescanning
    nz = tuple(f._nonzero_rows) + tuple(
        tuple((j + f.dom, v) for j, v in row) for row in g._nonzero_rows
    )
    out.__dict__["_nonzero_rows"] = nz
    return out


def add(f: Matrix, g: Matrix) -> Matrix:
    rig = _require_same_rig(f, g)
    if (f.dom, f.cod) != (g.dom, g.cod):
        raise ShapeError(
            f"cannot add {f.cod}x{f.dom} and {g.cod}x{g.dom}"
        )
    radd = rig.add
    return Matrix(
        rig, f.dom, f.cod, tuple(radd(a, b) for a, b in zip(f.entries, g.entries))
    )


def transpose(f: Matrix) -> Matrix:
    entries = [f.rig.zero] * (f.dom * f.cod)
    for i in range(f.cod):
        for j in range(f.dom):
            entries[j * f.cod + i] = f.entries[i * f.dom + j]
    return Matrix(f.rig, f.cod, f.dom, tuple(entries))


def elementary(i: int, j: int, m: int, n: int, r: RigElement) -> Matrix:
    """The m x n matrix that is zero except for r at entry (i, j), 1-based."""
    if not (1 <= i <= m):
        raise IndexError(f"row index {i} outside 1..{m}")
    if not (1 <= j <= n):
        raise IndexError(f"column index {j} outside 1..{n}")
    rig = r.rig
    entries = [rig.zero] * (m * n)
    entries[(i - 1) * n + (j - 1)] = r.value
    return Matrix(rig, n, m, tuple(entries))


_GENERATOR_SHAPES = {
    "mu": (2, 1),
    "eta": (0, 1),
    "delta": (1, 2),
    "eps": (1, 0),
}


@lru_cache(maxsize=None)
def generator_matrix(which: str, rig: Rig) -> Matrix:
    """mu = (1 1), eta the unique map 0 -> 1, delta and eps their transposes."""
    try:
        dom, cod = _GENERATOR_SHAPES[which]
    except KeyError:
        raise KeyError(f"unknown generator {which!r}") from None
    return Matrix(rig, dom, cod, (rig.one,) * (dom * cod))


def map_entries(h: RigHom, f: Matrix) -> Matrix:
    if f.rig is not h.source:
        raise RigMismatchError(
            f"matrix over {f.rig.name} but hom expects {h.source.name}"
        )
    return Matrix(h.target, f.dom, f.cod, tuple(h.fn(v) for v in f.entries))


# ---------------------------------------------------------------------------
# text format: header "<rig-name> <cod> <dom>", then cod rows of dom literals


def format_matrix(m: Matrix) -> str:
    lines = [f"{m.rig.name} {m.cod} {m.dom}"]
    for i in range(m.cod):
        lines.append(" ".join(m.rig.show(v) for v in m.row_values(i)))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Matrix:
    from .errors import ParseError, SourceSpan
    from .rigs import get_rig

    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty matrix text", SourceSpan(0, 0))
    head = lines[0].split()
    if len(head) != 3:
        raise ParseError(
            "matrix header must be '<rig> <cod> <dom>'", SourceSpan(0, len(lines[0]))
        )
    rig = get_rig(head[0])
    try:
        cod, dom = int(head[1]), int(head[2])
    except ValueError:
        raise ParseError("bad shape in matrix header", SourceSpan(0, len(lines[0]))) from None
    if cod < 0 or dom < 0:
        raise ParseError("negative shape in matrix header", SourceSpan(0, len(lines[0])))
    body = lines[1:]
    expected_rows = cod if dom > 0 else 0
    if dom == 0 or cod == 0:
        if body:
            raise ParseError("zero-dimensional matrix must be header only", SourceSpan(0, 0))
        return zeros(rig, dom, cod)
    if len(body) != expected_rows:
        raise ParseError(
            f"expected {expected_rows} rows, found {len(body)}", SourceSpan(0, 0)
        )
    entries = []
    for ln in body:
        cells = ln.split()
        if len(cells) != dom:
            raise ParseError(f"expected {dom} entries in row {ln!r}", SourceSpan(0, 0))
        for cell in cells:
            entries.append(rig.parse(cell))
    return Matrix(rig, dom, cod, tuple(entries))
