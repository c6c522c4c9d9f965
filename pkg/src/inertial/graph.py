"""Simple undirected graphs on bitset rows, named families and graph6 I/O.

Vertices are ``0..order-1``. Row ``v`` of a :class:`Graph` is an int whose
bit ``u`` is set iff ``{u, v}`` is an edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    pass


class Graph6Error(ValueError):
    pass


class UnsupportedLengthError(Graph6Error):
    """Raised for graph6 extended length forms (order > 62)."""


@dataclass(frozen=True)
class Graph:
    order: int
    rows: tuple[int, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.order < 1:
            raise GraphError(f"order must be >= 1, got {self.order}")
        if len(self.rows) != self.order:
            raise GraphError("row count does not match order")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= order")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")
                r ^= low

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @property
    def n_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in range(u + 1, self.order) if self.rows[u] >> v & 1]

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.order) if self.rows[v] >> u & 1]

    def adjacency_matrix(self) -> list[list[int]]:
        return [[(row >> u) & 1 for u in range(self.order)] for row in self.rows]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.order)):
            raise GraphError("perm is not a permutation of the vertex set")
        return graph_from_edges(self.order, [(perm[u], perm[v]) for u, v in self.edges()], name=self.name)

    def with_name(self, name: str | None) -> "Graph":
        return Graph(self.order, self.rows, name)

    def __str__(self):
        label = self.name or encode_graph6(self)
        return f"{label} (n={self.order}, m={self.n_edges})"


def graph_from_edges(order: int, edges: Iterable[tuple[int, int]], name: str | None = None) -> Graph:
    if order < 1:
        raise GraphError(f"order must be >= 1, got {order}")
    rows = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) out of range for order {order}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows), name)


def graph_from_matrix(matrix: Sequence[Sequence[int]], name: str | None = None) -> Graph:
    n = len(matrix)
    rows = []
    for row in matrix:
        if len(row) != n:
            raise GraphError("adjacency matrix is not square")
        rows.append(sum(1 << u for u, x in enumerate(row) if x))
    return Graph(n, tuple(rows), name)


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    rows = tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows))
    name = f"co({g.name})" if g.name else None
    return Graph(g.order, rows, name)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    rows = g.rows + tuple(row << shift for row in h.rows)
    name = f"{g.name}+{h.name}" if g.name and h.name else None
    return Graph(g.order + h.order, rows, name)


# --- named families -------------------------------------------------------


def gen_empty(n: int) -> Graph:
    if n < 1:
        raise GraphError("gen_empty needs n >= 1")
    return Graph(n, (0,) * n, f"E{n}")


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("gen_complete needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)), f"K{n}")


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("gen_cycle needs n >= 3")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def gen_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("gen_path needs n >= 1")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def gen_complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise GraphError("every part must have at least one vertex")
    label = []
    for i, p in enumerate(parts):
        label += [i] * p
    n = len(label)
    edges = [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]]
    return graph_from_edges(n, edges, "K" + ",".join(map(str, parts)))


def gen_kneser(p: int, k: int) -> Graph:
    """Kneser graph on the k-subsets of ``range(p)``, lexicographic vertex order."""
    if not (k >= 1 and p >= 2 * k):
        raise GraphError(f"gen_kneser needs p >= 2k >= 2, got p={p}, k={k}")
    subsets = [sum(1 << x for x in s) for s in combinations(range(p), k)]
    edges = [(i, j) for i, j in combinations(range(len(subsets)), 2) if not subsets[i] & subsets[j]]
    return graph_from_edges(len(subsets), edges, f"Kneser({p},{k})")


def gen_generalized_petersen(n: int, k: int) -> Graph:
    """Outer cycle on ``0..n-1``, inner vertices ``n..2n-1`` joined with step k."""
    if n < 3 or not (1 <= k and 2 * k < n):
        raise GraphError(f"gen_generalized_petersen needs n >= 3, 1 <= k < n/2, got n={n}, k={k}")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + k) % n))
        edges.append((i, n + i))
    return graph_from_edges(2 * n, edges, f"GP({n},{k})")


def gen_barbell(n: int) -> Graph:
    """Two copies of K_n joined by the single bridge ``(n-1, n)``."""
    if n < 3:
        raise GraphError("gen_barbell needs n >= 3")
    edges = list(combinations(range(n), 2)) + [(n + u, n + v) for u, v in combinations(range(n), 2)]
    edges.append((n - 1, n))
    return graph_from_edges(2 * n, edges, f"Barbell({n})")


# --- graph6 ---------------------------------------------------------------


def _upper_pairs(n: int) -> Iterator[tuple[int, int]]:
    # graph6 bit order: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode_graph6(g: Graph) -> str:
    n = g.order
    if n > 62:
        raise UnsupportedLengthError(f"unsupported length: order {n} > 62")
    bits = [g.rows[i] >> j & 1 for i, j in _upper_pairs(n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph6(text: str, name: str | None = None) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("malformed graph6: empty string")
    data = []
    for pos, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"malformed graph6: byte {c} at position {pos} outside [63, 126]")
        data.append(c - 63)
    if data[0] == 63:
        raise UnsupportedLengthError("unsupported length: extended graph6 order forms (order > 62) are not supported")
    n = data[0]
    if n < 1:
        raise Graph6Error("malformed graph6: order 0")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(data) != expected:
        raise Graph6Error(f"malformed length: order {n} needs {expected} bytes, got {len(data)}")
    rows = [0] * n
    for idx, (i, j) in enumerate(_upper_pairs(n)):
        if data[1 + idx // 6] >> (5 - idx % 6) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    pad = 6 * (expected - 1) - nbits
    if pad and data[-1] & ((1 << pad) - 1):
        raise Graph6Error("malformed graph6: nonzero padding bits")
    return Graph(n, tuple(rows), name if name is not None else s)


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    text: str
    message: str


def read_graph6_lines(lines: Iterable[str]) -> tuple[list[Graph], list[ParseDiagnostic]]:
    """Parse a graph6 corpus; bad lines become diagnostics instead of aborting."""
    graphs, diags = [], []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            graphs.append(parse_graph6(line, name=f"{line}"))
        except Graph6Error as exc:
            diags.append(ParseDiagnostic(lineno, line, str(exc)))
    return graphs, diags


def read_graph6_file(path: str | Path) -> tuple[list[Graph], list[ParseDiagnostic]]:
    with open(path, encoding="ascii", errors="replace") as fh:
        return read_graph6_lines(fh)


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")
