"""Graph families for signed double Roman domination studies.

All graphs are simple, undirected, and immutable. Vertex ids are dense
integers ``0..n-1`` with a fixed, documented layout per family so that
labelings stay portable across runs:

* generalized Petersen ``P(m, k)``: outer ring ``u_i -> i``, inner ring
  ``v_i -> m + i``;
* grid ``G_{rows, cols}``: cell ``(r, c) -> r * cols + c``; for two-row
  grids row 0 carries the ``u`` names and row 1 the ``v`` names;
* flower snark ``J_m``: ``a_i -> i``, ``b_i -> m+i``, ``c_i -> 2m+i``,
  ``d_i -> 3m+i``;
* block graphs (open two-row strips used by the boundary-constellation
  atlas): laid out like a two-row grid, with the four boundary columns
  named ``lt/lti/lb/lbi`` on the left and ``rti/rt/rbi/rb`` on the
  right; the ``v`` row is the top row.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "FamilySpec",
    "Graph",
    "RAW",
    "build_petersen",
    "build_grid",
    "build_flower_snark",
    "build_block_graph",
    "parse_edge_list",
    "serialize_edge_list",
    "BLOCK_BOUNDARY_NAMES",
    "BLOCK_CORNER_NAMES",
]


@dataclass(frozen=True)
class FamilySpec:
    """Family tag plus its integer parameters.

    ``kind`` is one of ``petersen`` (m, k), ``grid`` (rows, cols),
    ``snark`` (m,), ``block`` / ``block_reduced`` (no parameters), or
    ``raw`` for graphs read from edge lists.
    """

    kind: str
    params: tuple[int, ...] = ()

    _KINDS = ("petersen", "grid", "snark", "block", "block_reduced", "raw")

    def __post_init__(self) -> None:
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown graph family {self.kind!r}")


RAW = FamilySpec("raw")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with per-family vertex names.

    ``adjacency[v]`` is the sorted tuple of neighbors of ``v``; ``names``
    maps ids to the family's vertex names and is always a bijection.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    family: FamilySpec = RAW
    names: tuple[str, ...] = ()

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def is_cubic(self) -> bool:
        return all(len(nbrs) == 3 for nbrs in self.adjacency)

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted ``(a, b)`` pairs with ``a < b``."""
        return [(a, b) for a in range(self.n) for b in self.adjacency[a] if a < b]

    def name_to_id(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def id_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no vertex named {name!r}") from None


def _make_graph(
    n: int,
    edges: list[tuple[int, int]],
    family: FamilySpec,
    names: tuple[str, ...] | None = None,
) -> Graph:
    """Assemble a Graph, rejecting loops, duplicates, and bad indices."""
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
        if a == b:
            raise ValueError(f"self-loop at vertex {a}")
        if b in nbrs[a]:
            raise ValueError(f"duplicate edge ({a}, {b})")
        nbrs[a].add(b)
        nbrs[b].add(a)
    if names is None:
        names = tuple(str(i) for i in range(n))
    if len(names) != n or len(set(names)) != n:
        raise ValueError("vertex names must be a bijection with ids")
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs), family, names)


def build_petersen(m: int, k: int) -> Graph:
    """Generalized Petersen graph P(m, k).

    Outer cycle ``u_i u_{i+1}``, inner edges ``v_i v_{i+k}`` (indices mod
    m), and spokes ``u_i v_i``. Requires ``m >= 3`` and ``1 <= k <= m-1``
    with ``2k != m`` (otherwise the inner edges collapse to parallel
    pairs and the graph is not cubic).
    """
    if m < 3:
        raise ValueError(f"P(m, k) needs m >= 3, got m={m}")
    if not 1 <= k <= m - 1:
        raise ValueError(f"P(m, k) needs 1 <= k <= m-1, got k={k}")
    if 2 * k == m:
        raise ValueError(f"P({m}, {k}) is not cubic (inner edges collapse)")
    edges = []
    for i in range(m):
        edges.append((i, (i + 1) % m))            # outer ring
        edges.append((m + i, m + (i + k) % m))    # inner ring, shift k
        edges.append((i, m + i))                  # spoke
    # The inner ring lists every edge twice (once from each endpoint).
    edges = sorted({(min(a, b), max(a, b)) for a, b in edges})
    names = tuple(f"u{i}" for i in range(m)) + tuple(f"v{i}" for i in range(m))
    g = _make_graph(2 * m, edges, FamilySpec("petersen", (m, k)), names)
    assert g.is_cubic
    return g


def build_grid(rows: int, cols: int) -> Graph:
    """Grid graph on ``rows x cols`` cells, unit-distance adjacency."""
    if rows < 1 or cols < 1:
        raise ValueError(f"grid needs rows, cols >= 1, got {rows}x{cols}")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    if rows == 2:
        names = tuple(f"u{c}" for c in range(cols)) + tuple(f"v{c}" for c in range(cols))
    else:
        names = tuple(f"r{r}c{c}" for r in range(rows) for c in range(cols))
    return _make_graph(rows * cols, edges, FamilySpec("grid", (rows, cols)), names)


def build_flower_snark(m: int) -> Graph:
    """Flower snark J_m on 4m vertices, m >= 5.

    Hub edges ``a_i b_i, a_i c_i, a_i d_i``, the b-ring ``b_i b_{i+1}``
    (cyclic), and one long cycle through the c- and d-paths closed by
    ``c_{m-1} d_0`` and ``c_0 d_{m-1}``.
    """
    if m < 5:
        raise ValueError(f"flower snark needs m >= 5, got m={m}")
    a = lambda i: i
    b = lambda i: m + i
    c = lambda i: 2 * m + i
    d = lambda i: 3 * m + i
    edges = []
    for i in range(m):
        edges += [(a(i), b(i)), (a(i), c(i)), (a(i), d(i))]
        edges.append((b(i), b((i + 1) % m)))
    for i in range(m - 1):
        edges.append((c(i), c(i + 1)))
        edges.append((d(i), d(i + 1)))
    edges.append((c(m - 1), d(0)))
    edges.append((c(0), d(m - 1)))
    names = (
        tuple(f"a{i}" for i in range(m))
        + tuple(f"b{i}" for i in range(m))
        + tuple(f"c{i}" for i in range(m))
        + tuple(f"d{i}" for i in range(m))
    )
    g = _make_graph(4 * m, edges, FamilySpec("snark", (m,)), names)
    assert g.is_cubic
    return g


# Boundary names in the fixed constellation order used throughout the
# block atlas: <lt, lti, lb, lbi, rti, rt, rbi, rb>.
BLOCK_BOUNDARY_NAMES = ("lt", "lti", "lb", "lbi", "rti", "rt", "rbi", "rb")
BLOCK_CORNER_NAMES = ("lt", "lb", "rt", "rb")

_BLOCK_CENTER_COLS = {"full": 8, "reduced": 4}


def build_block_graph(variant: str = "full") -> Graph:
    """Open two-row strip used by the boundary-constellation atlas.

    ``full`` is a 2x12 strip whose eight middle columns form the center
    ``u_0..u_7 / v_0..v_7``; ``reduced`` is the 2x8 strip with center
    ``u_0..u_3 / v_0..v_3``. Either way the two leftmost columns are
    named ``lt/lti`` (top row) and ``lb/lbi`` (bottom row), mirrored on
    the right as ``rti/rt`` and ``rbi/rb``. The v-row is the top row.
    """
    if variant not in _BLOCK_CENTER_COLS:
        raise ValueError(f"variant must be 'full' or 'reduced', got {variant!r}")
    center = _BLOCK_CENTER_COLS[variant]
    cols = center + 4
    bottom = ["lb", "lbi"] + [f"u{i}" for i in range(center)] + ["rbi", "rb"]
    top = ["lt", "lti"] + [f"v{i}" for i in range(center)] + ["rti", "rt"]
    kind = "block" if variant == "full" else "block_reduced"
    edges = []
    for r in range(2):
        for col in range(cols):
            v = r * cols + col
            if col + 1 < cols:
                edges.append((v, v + 1))
            if r == 0:
                edges.append((v, v + cols))
    return _make_graph(2 * cols, edges, FamilySpec(kind), tuple(bottom + top))


def block_center_ids(g: Graph) -> frozenset[int]:
    """Ids of the u/v center vertices of a block graph."""
    return frozenset(i for i, name in enumerate(g.names) if name[0] in "uv")


def block_corner_ids(g: Graph) -> frozenset[int]:
    """Ids of the four outer-corner vertices of a block graph."""
    return frozenset(g.id_of(name) for name in BLOCK_CORNER_NAMES)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: header ``n m``, then m ``a b`` lines."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge list")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad header line {lines[0]!r}, expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"bad header line {lines[0]!r}, expected integers") from None
    if n < 0 or m < 0:
        raise ValueError("vertex and edge counts must be non-negative")
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"bad edge line {ln!r}") from None
        edges.append((a, b))
    return _make_graph(n, edges, RAW)


def serialize_edge_list(g: Graph) -> str:
    """Inverse of :func:`parse_edge_list`; edges sorted, one per line."""
    lines = [f"{g.n} {g.num_edges}"]
    lines += [f"{a} {b}" for a, b in g.edges()]
    return "\n".join(lines) + "\n"
