"""
Numeric text formats.

- .grf: n, mảng con trỏ (n+1 số, bắt đầu bằng 1), rồi các hàng kề nối liền.
- .gr1: .grf + số cạnh m + các hàng cạnh liên thuộc (cùng độ dài với hàng kề).
- .ezi: số chu trình, mảng con trỏ, các chu trình theo cạnh rồi theo đỉnh.
- .gm1: số đỉnh biên, mã đỉnh, toạ độ X, toạ độ Y.

Token cách nhau bởi khoảng trắng; xuống dòng không có nghĩa khi đọc. Chữ đứng
sau các số trên cùng một dòng được coi là chú thích.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from app.cycles.space import Cycle, CycleSystem
from app.errors import CycleError, FormatError, GraphError
from app.graph.core import Graph
from app.layout.drawing import Drawing, Point

_PER_LINE = 10


@dataclass(slots=True)
class _Token:
    text: str
    line: int


class _Reader:
    def __init__(self, text: str, path: str | None):
        self.path = path
        self.tokens: list[_Token] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            for word in raw.split():
                try:
                    float(word)
                except ValueError:
                    break
                self.tokens.append(_Token(word, lineno))
        self.pos = 0

    def _last_line(self) -> int | None:
        return self.tokens[-1].line if self.tokens else None

    def fail(self, message: str, token: _Token | None = None) -> FormatError:
        line = token.line if token else self._last_line()
        return FormatError(message, path=self.path, line=line)

    def read_int(self, what: str) -> int:
        if self.pos >= len(self.tokens):
            raise self.fail(f"unexpected end of file, expected {what}")
        tok = self.tokens[self.pos]
        self.pos += 1
        try:
            return int(tok.text)
        except ValueError:
            raise self.fail(f"expected integer {what}, got {tok.text!r}", tok) from None

    def read_float(self, what: str) -> float:
        if self.pos >= len(self.tokens):
            raise self.fail(f"unexpected end of file, expected {what}")
        tok = self.tokens[self.pos]
        self.pos += 1
        return float(tok.text)

    def ints(self, count: int, what: str) -> list[int]:
        return [self.read_int(what) for _ in range(count)]

    def floats(self, count: int, what: str) -> list[float]:
        return [self.read_float(what) for _ in range(count)]

    def here(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def done(self) -> None:
        if self.pos < len(self.tokens):
            raise self.fail("trailing data", self.tokens[self.pos])


def _pointer_rows(reader: _Reader, count: int, what: str) -> list[int]:
    start = reader.here()
    pointers = reader.ints(count + 1, f"{what} pointer")
    if pointers[0] != 1:
        raise reader.fail(f"{what} pointer array must start at 1", start)
    if any(b < a for a, b in zip(pointers, pointers[1:])):
        raise reader.fail(f"{what} pointer array decreases", start)
    return pointers


def _split(flat: Sequence[int], pointers: Sequence[int]) -> list[list[int]]:
    return [list(flat[pointers[k] - 1: pointers[k + 1] - 1]) for k in range(len(pointers) - 1)]


def _lines(values: Iterable[str]) -> list[str]:
    items = list(values)
    return [" ".join(items[i: i + _PER_LINE]) for i in range(0, len(items), _PER_LINE)] or [""]


def _pointers_of(rows: Sequence[Sequence[int]]) -> list[int]:
    out = [1]
    for row in rows:
        out.append(out[-1] + len(row))
    return out


def _read_graph(reader: _Reader) -> Graph:
    n = reader.read_int("vertex count")
    if n < 1:
        raise reader.fail("vertex count must be positive")
    pointers = _pointer_rows(reader, n, "adjacency")
    start = reader.here()
    flat = reader.ints(pointers[-1] - 1, "neighbour")
    try:
        return Graph.from_adjacency(n, _split(flat, pointers))
    except GraphError as exc:
        raise reader.fail(str(exc), start) from exc


# ── grf / gr1 ───────────────────────────────────────────────────────

def parse_grf(text: str, path: str | None = None) -> Graph:
    reader = _Reader(text, path)
    g = _read_graph(reader)
    reader.done()
    return g


def parse_gr1(text: str, path: str | None = None) -> Graph:
    """A .gr1 whose incidence rows must match the adjacency edge numbering."""
    reader = _Reader(text, path)
    g = _read_graph(reader)
    start = reader.here()
    m = reader.read_int("edge count")
    if m != g.m:
        raise reader.fail(f"edge count {m} does not match adjacency ({g.m})", start)
    for v in g.vertices():
        start = reader.here()
        row = tuple(reader.ints(g.degree(v), f"edge incident to v{v}"))
        if row != g.incidence[v - 1]:
            raise reader.fail(f"incidence row of v{v} is {row}, expected {g.incidence[v - 1]}", start)
    reader.done()
    return g


def write_grf(g: Graph) -> str:
    lines = [str(g.n), " ".join(map(str, _pointers_of(g.adjacency)))]
    lines += [" ".join(map(str, row)) for row in g.adjacency]
    return "\n".join(lines) + "\n"


def write_gr1(g: Graph) -> str:
    lines = [write_grf(g).rstrip("\n"), str(g.m)]
    lines += [" ".join(map(str, row)) for row in g.incidence]
    return "\n".join(lines) + "\n"


# ── ezi ─────────────────────────────────────────────────────────────

def write_ezi(sys: CycleSystem) -> str:
    edge_rows = [c.edge_ids() for c in sys.cycles]
    vertex_rows = [_ezi_vertices(c) for c in sys.cycles]
    lines = [str(len(sys)), *_lines(map(str, _pointers_of(edge_rows)))]
    lines += [" ".join(map(str, row)) for row in edge_rows]
    lines += [" ".join(map(str, row)) for row in vertex_rows]
    return "\n".join(lines) + "\n"


def _ezi_vertices(c: Cycle) -> list[int]:
    return sorted(c.vertex_set())


def parse_ezi(text: str, g: Graph, path: str | None = None) -> CycleSystem:
    reader = _Reader(text, path)
    count = reader.read_int("cycle count")
    pointers = _pointer_rows(reader, count, "cycle")
    total = pointers[-1] - 1
    start = reader.here()
    edge_rows = _split(reader.ints(total, "cycle edge"), pointers)
    vertex_rows = _split(reader.ints(total, "cycle vertex"), pointers)
    reader.done()
    cycles = []
    for k, (edges, verts) in enumerate(zip(edge_rows, vertex_rows), start=1):
        try:
            c = Cycle.from_edges(g, edges)
        except (CycleError, GraphError) as exc:
            raise reader.fail(f"cycle {k}: {exc}", start) from exc
        if set(verts) != c.vertex_set():
            raise reader.fail(f"cycle {k}: vertex row {verts} does not match its edges", start)
        cycles.append(c)
    return CycleSystem(graph=g, cycles=tuple(cycles))


# ── gm1 / gm2 ───────────────────────────────────────────────────────

def parse_gm1(text: str, path: str | None = None) -> dict[int, Point]:
    """Boundary vertices with fixed coordinates, in file order."""
    reader = _Reader(text, path)
    count = reader.read_int("boundary count")
    if count < 1:
        raise reader.fail("boundary is empty")
    ids = reader.ints(count, "boundary vertex")
    xs = reader.floats(count, "x coordinate")
    ys = reader.floats(count, "y coordinate")
    reader.done()
    if len(set(ids)) != count:
        raise reader.fail("boundary lists a vertex twice")
    return {v: (x, y) for v, x, y in zip(ids, xs, ys)}


def write_gm1(boundary: Mapping[int, Point]) -> str:
    ids = list(boundary)
    lines = [str(len(ids)), *_lines(map(str, ids))]
    lines += _lines(f"{boundary[v][0]:.3f}" for v in ids)
    lines += _lines(f"{boundary[v][1]:.3f}" for v in ids)
    return "\n".join(lines) + "\n"


def write_gm2(drawing: Drawing, boundary_order: Sequence[int] | None = None) -> str:
    """Coordinate report: fixed block then free block, three decimals."""
    fixed = list(boundary_order) if boundary_order is not None else sorted(drawing.fixed)
    free = sorted(v for v in drawing.coords if v not in set(fixed))
    out = [f"Boundary points: {len(fixed)}", "Boundary vertices:", *_lines(map(str, fixed))]
    out += ["Boundary x:", *_lines(f"{drawing.point(v)[0]:.3f}" for v in fixed)]
    out += ["Boundary y:", *_lines(f"{drawing.point(v)[1]:.3f}" for v in fixed)]
    out += ["Free vertices:", *_lines(map(str, free))]
    out += ["Free x:", *_lines(f"{drawing.point(v)[0]:.3f}" for v in free)]
    out += ["Free y:", *_lines(f"{drawing.point(v)[1]:.3f}" for v in free)]
    return "\n".join(out) + "\n"


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="ascii")
    except UnicodeDecodeError as exc:
        raise FormatError("numeric files must be ASCII", path=str(path)) from exc
    except OSError as exc:
        raise FormatError(f"cannot read file: {exc.strerror}", path=str(path)) from exc
