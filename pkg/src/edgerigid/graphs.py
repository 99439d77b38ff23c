"""Graph representation, input parsing, and Laplacian constructions.

Every graph in this package is simple, connected and undirected, with
vertices 0..n-1 and edges stored as (a, b), a < b, sorted lexicographically.
That canonical edge order indexes every edge-indexed vector anywhere in the
package (weights, adjoint values, resistances, incidence columns).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    DimensionMismatchError,
    DisconnectedError,
    NotSimpleError,
    ParseError,
    TooSmallError,
)

Edge = tuple[int, int]

GRAPH6_HEADER = b">>graph6<<"


@dataclass(frozen=True)
class Graph:
    """Immutable simple connected graph with canonical edge ordering."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 2 or len(self.edges) < 1:
            raise TooSmallError(f"need n >= 2 and m >= 1, got n={self.n}, m={len(self.edges)}")
        canon = []
        for a, b in self.edges:
            if a == b:
                raise NotSimpleError(f"self-loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ParseError(f"vertex id out of range in edge ({a}, {b})")
            canon.append((min(a, b), max(a, b)))
        canon.sort()
        for e, f in zip(canon, canon[1:]):
            if e == f:
                raise NotSimpleError(f"duplicate edge {e}")
        object.__setattr__(self, "edges", tuple(canon))
        if not self._connected():
            raise DisconnectedError("graph is not connected")

    def _connected(self) -> bool:
        adj = self.neighbors
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(x)) for x in adj)

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix (int64, read-only)."""
        A = np.zeros((self.n, self.n), dtype=np.int64)
        for a, b in self.edges:
            A[a, b] = 1
            A[b, a] = 1
        A.flags.writeable = False
        return A

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.neighbors)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def _edge_ends(self) -> tuple[np.ndarray, np.ndarray]:
        arr = np.asarray(self.edges, dtype=np.intp)
        return arr[:, 0], arr[:, 1]

    def to_edge_list(self) -> str:
        """Serialize in the edge-list file format (inverse of parsing)."""
        lines = [f"{self.n} {self.m}"]
        lines += [f"{a} {b}" for a, b in self.edges]
        return "\n".join(lines) + "\n"

    def to_graph6(self) -> bytes:
        return graph6_bytes(self)


@dataclass(frozen=True)
class Orientation:
    """Edge signs: +1 directs the edge (a, b), a < b, from b to a."""

    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError("orientation signs must be +1 or -1")

    @classmethod
    def canonical(cls, m: int) -> "Orientation":
        return cls((1,) * m)

    @classmethod
    def random(cls, m: int, rng: np.random.Generator) -> "Orientation":
        return cls(tuple(int(s) for s in rng.choice((-1, 1), size=m)))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.signs, dtype=np.int64)


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative edge weights; normalized means they sum to the edge count."""

    values: tuple[float, ...]
    normalized: bool

    def __post_init__(self) -> None:
        if any(v < 0 for v in self.values):
            raise ValueError("edge weights must be nonnegative")

    @classmethod
    def unit(cls, m: int) -> "WeightVector":
        return cls((1.0,) * m, normalized=True)

    @classmethod
    def from_values(cls, values, normalize: bool = True) -> "WeightVector":
        w = np.asarray(list(values), dtype=float)
        if w.ndim != 1:
            raise ValueError("weights must be a flat vector")
        if np.any(w < 0):
            raise ValueError("edge weights must be nonnegative")
        total = float(w.sum())
        if normalize:
            if total <= 0:
                raise ValueError("total edge weight is zero")
            w = w * (len(w) / total)
            return cls(tuple(float(x) for x in w), normalized=True)
        is_norm = abs(total - len(w)) <= 1e-12 * max(1, len(w))
        return cls(tuple(float(x) for x in w), normalized=is_norm)

    @classmethod
    def from_text(cls, text: str, m: int) -> "WeightVector":
        """Parse the weights file format: m lines, one decimal per line."""
        entries = [line.strip() for line in text.splitlines() if line.strip()]
        if len(entries) != m:
            raise DimensionMismatchError(f"expected {m} weights, got {len(entries)}")
        try:
            vals = [float(x) for x in entries]
        except ValueError as exc:
            raise ParseError(f"bad weight entry: {exc}") from exc
        return cls.from_values(vals, normalize=True)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def __len__(self) -> int:
        return len(self.values)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line "n m", then m lines "a b"."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"bad header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ParseError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"bad edge line {ln!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"bad edge line {ln!r}") from exc
        edges.append((a, b))
    return Graph(n, tuple(edges))


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph in graph6 format (optional ">>graph6<<" header)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise ParseError("empty graph6 input")
    n, body = _graph6_order(data)
    if n < 2:
        raise TooSmallError(f"graph6 graph has n={n}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise ParseError("graph6 data truncated")
    bits = []
    for ch in body[:need]:
        v = ch - 63
        if not 0 <= v < 64:
            raise ParseError(f"invalid graph6 byte {ch}")
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, tuple(edges))


def _graph6_order(data: bytes) -> tuple[int, bytes]:
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) >= 2 and data[1] == 126:
        raise ParseError("graph6 graphs with n > 258047 are not supported")
    if len(data) < 4:
        raise ParseError("graph6 data truncated")
    n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
    return n, data[4:]


def graph6_bytes(g: Graph) -> bytes:
    """Encode a graph in graph6 format (no header)."""
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    else:
        raise ValueError("graph too large for graph6 encoding")
    A = g.adjacency
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(int(A[i, j]))
    while len(bits) % 6:
        bits.append(0)
    body = bytearray()
    for k in range(0, len(bits), 6):
        v = 0
        for bit in bits[k:k + 6]:
            v = (v << 1) | bit
        body.append(v + 63)
    return head + bytes(body)


def parse_graph(data: bytes | str, format: str | None = None) -> Graph:
    """Parse a graph, auto-detecting graph6 input when no format is given."""
    if format not in (None, "edge-list", "graph6"):
        raise ParseError(f"unknown format {format!r}")
    if isinstance(data, bytes):
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("input is not ASCII") from exc
    else:
        text = data
    if format is None:
        stripped = text.strip()
        looks_g6 = stripped.startswith(">>graph6<<") or (
            stripped and "\n" not in stripped and " " not in stripped
            and not stripped.isdigit()
        )
        format = "graph6" if looks_g6 else "edge-list"
    if format == "graph6":
        return parse_graph6(text)
    return parse_edge_list(text)


# ---------------------------------------------------------------------------
# matrix constructions
# ---------------------------------------------------------------------------

def laplacian(g: Graph, w: WeightVector | None = None) -> np.ndarray:
    """Weighted Laplacian sum(w_e z_e z_e^T); exact int64 for unit weights."""
    if w is None:
        D = np.diag(np.asarray(g.degrees, dtype=np.int64))
        return D - g.adjacency
    if len(w) != g.m:
        raise DimensionMismatchError(f"got {len(w)} weights for {g.m} edges")
    wv = w.as_array()
    L = np.zeros((g.n, g.n), dtype=float)
    a, b = g._edge_ends
    np.add.at(L, (a, a), wv)
    np.add.at(L, (b, b), wv)
    np.add.at(L, (a, b), -wv)
    np.add.at(L, (b, a), -wv)
    return L


def adjoint_apply(g: Graph, X) -> np.ndarray:
    """Adjoint of the Laplacian map: per edge (a, b), X_aa + X_bb - 2 X_ab.

    Preserves the entry type: integer (object) matrices give exact integer
    vectors, float matrices give float vectors.
    """
    X = np.asarray(X)
    if X.shape != (g.n, g.n):
        raise DimensionMismatchError(f"expected {g.n}x{g.n} matrix, got {X.shape}")
    a, b = g._edge_ends
    return X[a, a] + X[b, b] - 2 * X[a, b]


def incidence(g: Graph, o: Orientation | None = None) -> np.ndarray:
    """Oriented incidence matrix B with column o_e (e_a - e_b) per edge."""
    if o is None:
        o = Orientation.canonical(g.m)
    if len(o.signs) != g.m:
        raise DimensionMismatchError(f"orientation has {len(o.signs)} signs for {g.m} edges")
    B = np.zeros((g.n, g.m), dtype=np.int64)
    for e, ((a, b), s) in enumerate(zip(g.edges, o.signs)):
        B[a, e] = s
        B[b, e] = -s
    return B


def signed_line_graph(g: Graph, o: Orientation | None = None) -> np.ndarray:
    """Signed line-graph adjacency A_sigma = B^T B - 2I (entries in {-1,0,1})."""
    B = incidence(g, o)
    return B.T @ B - 2 * np.eye(g.m, dtype=np.int64)


# ---------------------------------------------------------------------------
# degree structure
# ---------------------------------------------------------------------------

def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """2-coloring by graph search; None if the graph is not bipartite."""
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    while queue:
        v = queue.pop()
        for u in g.neighbors[v]:
            if color[u] == -1:
                color[u] = 1 - color[v]
                queue.append(u)
            elif color[u] == color[v]:
                return None
    part0 = tuple(v for v in range(g.n) if color[v] == 0)
    part1 = tuple(v for v in range(g.n) if color[v] == 1)
    return part0, part1


@dataclass(frozen=True)
class DegreeClassification:
    kind: str  # "regular" | "biregular-bipartite" | "irregular"
    degrees: tuple[int, ...]
    parts: tuple[tuple[int, ...], tuple[int, ...]] | None
    degree_sum_constant: bool

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "degrees": list(self.degrees),
            "parts": [list(p) for p in self.parts] if self.parts else None,
            "degree_sum_constant": self.degree_sum_constant,
        }


def degree_classification(g: Graph) -> DegreeClassification:
    """Classify as regular / biregular bipartite / irregular.

    Also reports whether d_a + d_b is constant over edges, the combinatorial
    necessary condition for rigidity.
    """
    deg = g.degrees
    sums = {deg[a] + deg[b] for a, b in g.edges}
    const = len(sums) == 1
    if len(set(deg)) == 1:
        return DegreeClassification("regular", (deg[0],), None, const)
    parts = bipartition(g)
    if parts is not None:
        d0 = {deg[v] for v in parts[0]}
        d1 = {deg[v] for v in parts[1]}
        if len(d0) == 1 and len(d1) == 1:
            return DegreeClassification(
                "biregular-bipartite", (d0.pop(), d1.pop()), parts, const
            )
    return DegreeClassification("irregular", (), None, const)
