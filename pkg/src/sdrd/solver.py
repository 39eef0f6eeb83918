"""Exact minimum-weight solvers for signed double Roman domination.

Three engines with one contract:

* :func:`brute_force` enumerates all ``4^n`` labelings (vectorized, for
  graphs up to 14 vertices) and is the reference semantics;
* :func:`solve_bnb` is a pruned depth-first branch and bound for
  arbitrary small graphs (default cap 26 vertices);
* :func:`solve_strip_dp` is a transfer dynamic program over the columns
  of two-row strips: open ``2 x m`` grids, the prism graphs ``P(m, 1)``
  (cyclic topology), and the atlas block graphs.

All three accept fixed labels, exempt vertices (checked nowhere but
still visible to their neighbors), a closed-neighborhood threshold
``k``, and an objective subset over which the weight is minimized. Every
optimum is returned with a witness labeling that passes the validator,
and each engine is deterministic for a fixed problem: the brute force
and the branch and bound return the lexicographically smallest optimal
witness by vertex id with label order ``-1 < 1 < 2 < 3``; the strip DP
breaks ties by a fixed column-wise rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

import numpy as np

from .graphs import Graph
from .labeling import LABEL_VALUES, Labeling, validate

__all__ = [
    "SolveSpec",
    "SolveResult",
    "SizeLimitError",
    "brute_force",
    "solve_bnb",
    "solve_strip_dp",
    "DEFAULT_BNB_LIMIT",
    "BRUTE_FORCE_LIMIT",
]

DEFAULT_BNB_LIMIT = 26
BRUTE_FORCE_LIMIT = 14

_INF = 1 << 40


class SizeLimitError(Exception):
    """Raised when an instance exceeds a solver's vertex cap."""


@dataclass
class SolveSpec:
    """One exact-solve instance; treat as immutable after construction."""

    graph: Graph
    k: int = 1
    fixed: Mapping[int, int] = field(default_factory=dict)
    exempt: frozenset[int] = frozenset()
    objective: frozenset[int] | None = None

    def __post_init__(self) -> None:
        n = self.graph.n
        if self.k < 1:
            raise ValueError(f"threshold k must be >= 1, got {self.k}")
        self.fixed = dict(self.fixed)
        for v, x in self.fixed.items():
            if not 0 <= v < n:
                raise ValueError(f"fixed vertex {v} out of range")
            if x not in LABEL_VALUES:
                raise ValueError(f"fixed label {x} not in {LABEL_VALUES}")
        self.exempt = frozenset(self.exempt)
        if any(not 0 <= v < n for v in self.exempt):
            raise ValueError("exempt vertex out of range")
        if self.objective is not None:
            self.objective = frozenset(self.objective)
            if any(not 0 <= v < n for v in self.objective):
                raise ValueError("objective vertex out of range")

    def objective_ids(self) -> frozenset[int]:
        if self.objective is None:
            return frozenset(range(self.graph.n))
        return self.objective


@dataclass(frozen=True)
class SolveResult:
    status: str  # "optimal" | "infeasible"
    min_weight: int | None
    witness: Labeling | None

    @property
    def is_optimal(self) -> bool:
        return self.status == "optimal"


def _finish(spec: SolveSpec, labels: list[int] | None, value: int | None) -> SolveResult:
    """Package a solver outcome, re-validating the witness."""
    if labels is None:
        return SolveResult("infeasible", None, None)
    witness = Labeling(tuple(labels))
    report = validate(spec.graph, witness, spec.k, spec.exempt)
    if not report.valid:
        raise RuntimeError("solver produced an invalid witness (internal error)")
    if any(witness[v] != x for v, x in spec.fixed.items()):
        raise RuntimeError("solver witness violates fixed labels (internal error)")
    got = sum(witness[v] for v in spec.objective_ids())
    if got != value:
        raise RuntimeError("solver witness weight mismatch (internal error)")
    return SolveResult("optimal", value, witness)


# ---------------------------------------------------------------------------
# brute force


def brute_force(spec: SolveSpec) -> SolveResult:
    """Full enumeration of all labelings of the free vertices.

    Reference semantics for the other solvers; refuses graphs with more
    than 14 vertices.
    """
    g = spec.graph
    n = g.n
    if n > BRUTE_FORCE_LIMIT:
        raise SizeLimitError(f"brute force caps at {BRUTE_FORCE_LIMIT} vertices, got {n}")
    free = [v for v in range(n) if v not in spec.fixed]
    nf = len(free)
    values = np.array(LABEL_VALUES, dtype=np.int16)

    # float32 matmuls hit BLAS; all values stay far below the exact
    # integer range of float32.
    adj = np.zeros((n, n), dtype=np.float32)
    for v in range(n):
        for u in g.adjacency[v]:
            adj[v, u] = 1.0
    closed = adj + np.eye(n, dtype=np.float32)
    check = np.array([v not in spec.exempt for v in range(n)])
    obj = np.array([v in spec.objective_ids() for v in range(n)])

    base = np.zeros(n, dtype=np.int16)
    for v, x in spec.fixed.items():
        base[v] = x

    best_w: int | None = None
    best_labels: np.ndarray | None = None
    total = 4**nf
    # Digit order: the smallest free id is the most significant digit, so
    # enumeration order equals lexicographic order over witnesses. With a
    # power-of-4 chunk the low digits repeat verbatim chunk to chunk, so
    # they are materialized once; only the high digits change.
    low = min(nf, 9)
    chunk = 4**low
    if nf:
        j = np.arange(chunk, dtype=np.int64)
        shifts = 2 * np.arange(low - 1, -1, -1, dtype=np.int64)
        low_labels = values[(j[:, None] >> shifts) & 3]
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        L = np.broadcast_to(base, (stop - start, n)).copy()
        if nf:
            high = start >> (2 * low)
            for pos in range(nf - low - 1, -1, -1):
                L[:, free[pos]] = values[high & 3]
                high >>= 2
            L[:, free[nf - low :]] = low_labels[: stop - start]
        Lf = L.astype(np.float32)
        sums = Lf @ closed
        ok = (sums[:, check] >= spec.k).all(axis=1)
        if not ok.any():
            continue
        # Defender/support conditions only on the survivors of the sum check.
        rows = np.nonzero(ok)[0]
        Ls = L[rows]
        Lsf = Lf[rows]
        c3 = (Lsf == 3).astype(np.float32) @ adj
        c2 = (Lsf == 2).astype(np.float32) @ adj
        cpos = (Lsf >= 2).astype(np.float32) @ adj
        defender = (Ls != -1) | (c3 >= 1) | (c2 >= 2)
        support = (Ls != 1) | (cpos >= 1)
        good = defender[:, check].all(axis=1) & support[:, check].all(axis=1)
        if not good.any():
            continue
        w = (Ls * obj).sum(axis=1).astype(np.int64)
        w = np.where(good, w, _INF)
        i = int(np.argmin(w))  # first occurrence = lexicographically smallest
        if w[i] < _INF and (best_w is None or w[i] < best_w):
            best_w = int(w[i])
            best_labels = Ls[i].copy()
    if best_labels is None:
        return SolveResult("infeasible", None, None)
    return _finish(spec, [int(x) for x in best_labels], best_w)


# ---------------------------------------------------------------------------
# branch and bound


def _search_order(g: Graph, fixed: Mapping[int, int]) -> list[int]:
    """Static order over free vertices, most-constrained neighborhood first.

    Greedy: repeatedly take the free vertex whose closed neighborhood
    contains the most already-ordered (or fixed) vertices, ties by id.
    Keeps the assignment frontier contiguous so conditions finalize early.
    """
    assigned = set(fixed)
    free = [v for v in range(g.n) if v not in assigned]
    order = []
    score = {v: sum(1 for u in (v, *g.adjacency[v]) if u in assigned) for v in free}
    remaining = set(free)
    while remaining:
        v = max(remaining, key=lambda u: (score[u], -u))
        order.append(v)
        remaining.remove(v)
        assigned.add(v)
        for u in (v, *g.adjacency[v]):
            if u in remaining:
                score[u] += 1
    return order


class _BnBState:
    """Incremental assignment state shared by both search phases."""

    def __init__(self, spec: SolveSpec):
        g = spec.graph
        self.n = g.n
        self.adj = [list(nbrs) for nbrs in g.adjacency]
        self.k = spec.k
        self.labels = [0] * g.n  # 0 = unassigned
        self.checked = [v not in spec.exempt for v in range(g.n)]
        self.is_obj = [v in spec.objective_ids() for v in range(g.n)]
        self.s = [0] * g.n                      # partial closed-neighborhood sums
        self.r = [len(a) + 1 for a in self.adj]  # unassigned in closed neighborhood
        self.cnt2 = [0] * g.n
        self.cnt3 = [0] * g.n
        self.cntpos = [0] * g.n
        self.obj_cur = 0
        self.obj_unassigned = sum(self.is_obj)
        # With a full objective, summing per-neighborhood floors bounds the
        # total weight: sum_v W(N[v]) = sum_u f(u) (deg(u)+1), hence
        # (D+1) W >= sum of floors + slack, where D is the maximum degree
        # and `slack` is sum f(u) (D - deg(u)) with -1 for unassigned u.
        self.use_nbhd_bound = spec.objective is None and g.n > 0
        max_deg = max((len(a) for a in self.adj), default=0)
        self.denom = max_deg + 1
        self.coef = [max_deg - len(a) for a in self.adj]
        self.slack = -sum(self.coef)
        self.bsum = 0
        for v in range(g.n):
            self.bsum += self._floor(v)

    def _floor(self, v: int) -> int:
        raw = self.s[v] - self.r[v]
        return max(self.k, raw) if self.checked[v] else raw

    def assign(self, v: int, x: int) -> None:
        self.labels[v] = x
        if self.is_obj[v]:
            self.obj_cur += x
            self.obj_unassigned -= 1
        self.slack += (x + 1) * self.coef[v]
        s, r, k = self.s, self.r, self.k
        checked = self.checked
        d = x + 1  # s - r moves up by d >= 0 at every closed neighborhood
        bdelta = 0
        for u in (v, *self.adj[v]):
            old = s[u] - r[u]
            s[u] += x
            r[u] -= 1
            if checked[u]:
                if old >= k:
                    bdelta += d
                elif old + d > k:
                    bdelta += old + d - k
            else:
                bdelta += d
        self.bsum += bdelta
        if x >= 2:
            for u in self.adj[v]:
                self.cntpos[u] += 1
                if x == 2:
                    self.cnt2[u] += 1
                else:
                    self.cnt3[u] += 1

    def undo(self, v: int, x: int) -> None:
        self.labels[v] = 0
        if self.is_obj[v]:
            self.obj_cur -= x
            self.obj_unassigned += 1
        self.slack -= (x + 1) * self.coef[v]
        s, r, k = self.s, self.r, self.k
        checked = self.checked
        d = x + 1
        bdelta = 0
        for u in (v, *self.adj[v]):
            s[u] -= x
            r[u] += 1
            old = s[u] - r[u]  # value before the matching assign
            if checked[u]:
                if old >= k:
                    bdelta += d
                elif old + d > k:
                    bdelta += old + d - k
            else:
                bdelta += d
        self.bsum -= bdelta
        if x >= 2:
            for u in self.adj[v]:
                self.cntpos[u] -= 1
                if x == 2:
                    self.cnt2[u] -= 1
                else:
                    self.cnt3[u] -= 1

    def locally_consistent(self, v: int) -> bool:
        """Check every condition that assigning ``v`` could have finalized."""
        k = self.k
        labels = self.labels
        for u in (v, *self.adj[v]):
            if not self.checked[u]:
                continue
            ru = self.r[u]
            if self.s[u] + 3 * ru < k:
                return False
            if ru == 0:
                lu = labels[u]
                if lu == -1 and self.cnt3[u] == 0 and self.cnt2[u] < 2:
                    return False
                if lu == 1 and self.cntpos[u] == 0:
                    return False
        return True

    def lower_bound(self) -> int:
        lb = self.obj_cur - self.obj_unassigned
        if self.use_nbhd_bound:
            lb = max(lb, -((-self.bsum - self.slack) // self.denom))
        return lb


_PHASE1_LABELS = (-1, 2, 3, 1)


def solve_bnb(spec: SolveSpec, size_limit: int = DEFAULT_BNB_LIMIT) -> SolveResult:
    """Exact optimum by pruned depth-first search.

    Phase 1 finds the optimal value branching in a most-constrained-first
    vertex order; phase 2 re-searches in id order to extract the
    lexicographically smallest optimal witness. Refuses instances above
    ``size_limit`` vertices rather than timing out silently.
    """
    g = spec.graph
    if g.n > size_limit:
        raise SizeLimitError(
            f"branch and bound caps at {size_limit} vertices, got {g.n}"
        )
    free = [v for v in range(g.n) if v not in spec.fixed]
    state = _BnBState(spec)
    for v, x in spec.fixed.items():
        state.assign(v, x)
        if not state.locally_consistent(v):
            # A fixed prefix can already be contradictory.
            return SolveResult("infeasible", None, None)

    order = _search_order(g, spec.fixed)
    best = _INF
    depth_max = len(order)

    def dfs(depth: int) -> None:
        nonlocal best
        if depth == depth_max:
            if state.obj_cur < best:
                best = state.obj_cur
            return
        v = order[depth]
        for x in _PHASE1_LABELS:
            state.assign(v, x)
            if state.locally_consistent(v) and state.lower_bound() < best:
                dfs(depth + 1)
            state.undo(v, x)

    dfs(0)
    if best >= _INF:
        return SolveResult("infeasible", None, None)

    # Phase 2: fix free vertices one by one in id order, each time taking
    # the smallest label that still extends to a weight-`best` completion
    # (checked by a corridor search in the efficient order). The greedy
    # leftmost-feasible extension is the lexicographically smallest
    # optimal witness.
    def extends_to_optimum(todo: list[int], depth: int) -> bool:
        if depth == len(todo):
            return True  # pruning keeps weights <= best, optimality forces ==
        v = todo[depth]
        for x in _PHASE1_LABELS:
            state.assign(v, x)
            if (
                state.locally_consistent(v)
                and state.lower_bound() <= best
                and extends_to_optimum(todo, depth + 1)
            ):
                state.undo(v, x)
                return True
            state.undo(v, x)
        return False

    for v in free:
        remaining = [u for u in order if state.labels[u] == 0 and u != v]
        for x in LABEL_VALUES:
            state.assign(v, x)
            if (
                state.locally_consistent(v)
                and state.lower_bound() <= best
                and extends_to_optimum(remaining, 0)
            ):
                break
            state.undo(v, x)
        else:
            raise RuntimeError(
                "optimal value found but witness search failed (internal error)"
            )
    return _finish(spec, list(state.labels), best)


# ---------------------------------------------------------------------------
# strip transfer DP

# Column pairs are indexed p = 4*i0 + i1 where i0/i1 are the label
# indices (in LABEL_VALUES order) of the row-0 and row-1 vertex.
_PAIRS = tuple((a, b) for a in LABEL_VALUES for b in LABEL_VALUES)


def _vertex_ok(x: int, nbrs: tuple[int, ...], k: int) -> bool:
    if x == -1:
        if 3 not in nbrs and nbrs.count(2) < 2:
            return False
    elif x == 1:
        if not any(y >= 2 for y in nbrs):
            return False
    return x + sum(nbrs) >= k


def _column_ok(
    left: tuple[int, int] | None,
    mid: tuple[int, int],
    right: tuple[int, int] | None,
    k: int,
    ex0: bool,
    ex1: bool,
) -> bool:
    x0, x1 = mid
    if not ex0:
        nbrs = (x1,) + tuple(p[0] for p in (left, right) if p is not None)
        if not _vertex_ok(x0, nbrs, k):
            return False
    if not ex1:
        nbrs = (x0,) + tuple(p[1] for p in (left, right) if p is not None)
        if not _vertex_ok(x1, nbrs, k):
            return False
    return True


@lru_cache(maxsize=None)
def _mid_table(k: int, ex0: bool, ex1: bool) -> tuple[tuple[tuple[bool, ...], ...], ...]:
    """[left][mid][right] feasibility of an interior column."""
    return tuple(
        tuple(
            tuple(_column_ok(_PAIRS[a], _PAIRS[b], _PAIRS[c], k, ex0, ex1) for c in range(16))
            for b in range(16)
        )
        for a in range(16)
    )


@lru_cache(maxsize=None)
def _end_table(k: int, ex0: bool, ex1: bool, side: str) -> tuple[tuple[bool, ...], ...]:
    """Feasibility of the leftmost column [mid][right] or rightmost [left][mid]."""
    if side == "left":
        return tuple(
            tuple(_column_ok(None, _PAIRS[b], _PAIRS[c], k, ex0, ex1) for c in range(16))
            for b in range(16)
        )
    return tuple(
        tuple(_column_ok(_PAIRS[a], _PAIRS[b], None, k, ex0, ex1) for b in range(16))
        for a in range(16)
    )


@lru_cache(maxsize=None)
def _single_table(k: int, ex0: bool, ex1: bool) -> tuple[bool, ...]:
    return tuple(_column_ok(None, _PAIRS[b], None, k, ex0, ex1) for b in range(16))


def _strip_layout(spec: SolveSpec, topology: str) -> int:
    """Validate graph/topology fit and return the column count."""
    fam = spec.graph.family
    if fam.kind == "grid" and fam.params[0] == 2:
        expected = "open"
    elif fam.kind == "petersen" and fam.params[1] == 1:
        expected = "cyclic"
    elif fam.kind in ("block", "block_reduced"):
        expected = "open"
    else:
        raise ValueError(
            "strip solver handles 2-row grids, P(m, 1), and block graphs only"
        )
    if topology != expected:
        raise ValueError(f"graph requires {expected!r} topology, got {topology!r}")
    return spec.graph.n // 2


def _column_data(spec: SolveSpec, m: int):
    """Per-column pair costs, fixed-label masks, and exemption flags.

    Row 0 of column c is vertex c, row 1 is vertex m+c. ``allowed[c][p]``
    is False when a fixed label excludes the pair; costs stay real so
    infeasibility never mixes into the arithmetic.
    """
    obj = spec.objective_ids()
    costs, allowed, flags = [], [], []
    for c in range(m):
        v0, v1 = c, m + c
        w, al = [], []
        for x0, x1 in _PAIRS:
            al.append(spec.fixed.get(v0, x0) == x0 and spec.fixed.get(v1, x1) == x1)
            w.append((x0 if v0 in obj else 0) + (x1 if v1 in obj else 0))
        costs.append(w)
        allowed.append(al)
        flags.append((v0 in spec.exempt, v1 in spec.exempt))
    return costs, allowed, flags


def _pairs_to_labels(pair_seq: list[int], m: int) -> list[int]:
    labels = [0] * (2 * m)
    for c, p in enumerate(pair_seq):
        x0, x1 = _PAIRS[p]
        labels[c] = x0
        labels[m + c] = x1
    return labels


def _dp_open(spec: SolveSpec, m: int) -> tuple[int | None, list[int] | None]:
    costs, allowed, flags = _column_data(spec, m)
    k = spec.k
    if m == 1:
        tab = _single_table(k, *flags[0])
        best, arg = _INF, None
        for p in range(16):
            if tab[p] and allowed[0][p] and costs[0][p] < best:
                best, arg = costs[0][p], p
        return (None, None) if arg is None else (best, [arg])

    left = _end_table(k, *flags[0], side="left")
    cur = [_INF] * 256
    for a in range(16):
        if not allowed[0][a]:
            continue
        row = left[a]
        for b in range(16):
            if row[b] and allowed[1][b]:
                cur[a * 16 + b] = costs[0][a] + costs[1][b]

    parents: list[list[int]] = []
    for c in range(2, m):
        tab = _mid_table(k, *flags[c - 1])
        wq = costs[c]
        alq = allowed[c]
        nxt = [_INF] * 256
        par = [-1] * 256
        for s in range(256):
            base = cur[s]
            if base >= _INF:
                continue
            a, b = divmod(s, 16)
            row = tab[a][b]
            off = b * 16
            for q in range(16):
                if row[q] and alq[q]:
                    cand = base + wq[q]
                    t = off + q
                    if cand < nxt[t]:
                        nxt[t] = cand
                        par[t] = a
        parents.append(par)
        cur = nxt

    right = _end_table(k, *flags[m - 1], side="right")
    best, arg = _INF, -1
    for s in range(256):
        a, b = divmod(s, 16)
        if cur[s] < best and right[a][b]:
            best, arg = cur[s], s
    if arg < 0:
        return None, None

    seq = [0] * m
    a, b = divmod(arg, 16)
    seq[m - 1], seq[m - 2] = b, a
    for c in range(m - 1, 1, -1):
        a_prev = parents[c - 2][seq[c - 1] * 16 + seq[c]]
        seq[c - 2] = a_prev
    return best, seq


def _dp_cyclic(spec: SolveSpec, m: int) -> tuple[int | None, list[int] | None]:
    """Ring DP: enumerate the first two columns, sweep, close the seam."""
    costs, allowed, flags = _column_data(spec, m)
    k = spec.k
    tabs = [np.array(_mid_table(k, *flags[c]), dtype=bool) for c in range(m)]

    # value pass, all 256 seeds (p0, p1) at once; garbage above the cut
    # (dead states shifted by column costs) is reset after every step
    cut = _INF >> 1
    V = np.full((256, 16, 16), _INF, dtype=np.int64)
    for p0 in range(16):
        if not allowed[0][p0]:
            continue
        for p1 in range(16):
            if allowed[1][p1]:
                V[p0 * 16 + p1, p0, p1] = costs[0][p0] + costs[1][p1]
    for c in range(2, m):
        pen = np.where(tabs[c - 1], 0, _INF)
        wq = np.array(
            [costs[c][q] if allowed[c][q] else _INF for q in range(16)], dtype=np.int64
        )
        V = (V[:, :, :, None] + pen[None, :, :, :]).min(axis=1) + wq[None, None, :]
        V[V >= cut] = _INF
    for seed in range(256):
        p0, p1 = divmod(seed, 16)
        close = tabs[m - 1][:, :, p0] & tabs[0][:, p0, p1][None, :]
        V[seed][~close] = _INF
    finals = V.reshape(256, 256).min(axis=1)
    best = int(finals.min())
    if best >= cut:
        return None, None
    seed = int(np.argmin(finals))
    p0, p1 = divmod(seed, 16)

    # witness pass for the winning seed, with parent tracking
    cur = [_INF] * 256
    cur[seed] = costs[0][p0] + costs[1][p1]
    parents = []
    for c in range(2, m):
        tab = _mid_table(k, *flags[c - 1])
        wq = costs[c]
        alq = allowed[c]
        nxt = [_INF] * 256
        par = [-1] * 256
        for s in range(256):
            base = cur[s]
            if base >= _INF:
                continue
            a, b = divmod(s, 16)
            row = tab[a][b]
            off = b * 16
            for q in range(16):
                if row[q] and alq[q]:
                    cand = base + wq[q]
                    t = off + q
                    if cand < nxt[t]:
                        nxt[t] = cand
                        par[t] = a
        parents.append(par)
        cur = nxt

    last_tab = _mid_table(k, *flags[m - 1])
    first_tab = _mid_table(k, *flags[0])
    arg = -1
    for s in range(256):
        a, b = divmod(s, 16)
        if cur[s] == best and last_tab[a][b][p0] and first_tab[b][p0][p1]:
            arg = s
            break
    if arg < 0:
        raise RuntimeError("cyclic DP reconstruction failed (internal error)")
    seq = [0] * m
    a, b = divmod(arg, 16)
    seq[m - 1], seq[m - 2] = b, a
    for c in range(m - 1, 1, -1):
        seq[c - 2] = parents[c - 2][seq[c - 1] * 16 + seq[c]]
    return best, seq


def solve_strip_dp(spec: SolveSpec, topology: str = "open") -> SolveResult:
    """Column-sweep exact solver for two-row strips.

    The DP state is the label pair of the two preceding columns (at most
    256 states); a middle column's conditions are finalized once its
    right neighbor is known. Cyclic topology enumerates the first two
    columns and closes the ring across the seam.
    """
    m = _strip_layout(spec, topology)
    if topology == "open":
        value, seq = _dp_open(spec, m)
    else:
        value, seq = _dp_cyclic(spec, m)
    if seq is None:
        return SolveResult("infeasible", None, None)
    return _finish(spec, _pairs_to_labels(seq, m), value)
