"""The block atlas: exact center minima for all boundary constellations.

A *constellation* fixes the labels of the four boundary columns of an
open two-row strip, in the order

    <lt, lti, lb, lbi, rti, rt, rbi, rb>

(top row then bottom row on the left, inner column before outer on the
right). For each constellation the atlas stores the minimum cumulative
weight over the center of the full block (eight center columns) and of
the reduced block (four center columns), with the four corner vertices
exempt from the feasibility conditions. A constellation whose two
minima differ by at least 4 is *quality transferring*: any labeling of a
host graph inducing that boundary can have its full block swapped for
the reduced block at a weight saving of 4, which is the engine of the
inductive lower-bound arguments for prisms and grids.

Constellations are stored modulo the strip's symmetry group (vertical
flip, horizontal flip, point reflection) and filtered by the host-graph
feasibility rule that no boundary side may carry more than two -1
labels; 14940 canonical constellations survive.
"""

from __future__ import annotations

import csv
import io
import multiprocessing
from dataclasses import dataclass
from itertools import product

import numpy as np

from .graphs import (
    BLOCK_BOUNDARY_NAMES,
    block_center_ids,
    block_corner_ids,
    build_block_graph,
)
from .labeling import LABEL_VALUES
from .solver import SolveSpec, _INF, _PAIRS, _mid_table, solve_strip_dp

__all__ = [
    "Constellation",
    "BlockRecord",
    "Atlas",
    "GROUP",
    "orbit",
    "canonical_constellation",
    "side_feasible",
    "enumerate_constellations",
    "constellation_counts",
    "solve_block",
    "build_atlas",
    "quality_transferring",
    "query_atlas",
    "matches_in_orbit",
    "pinned_right_boundary",
    "boundary_matrix_to_constellation",
    "constellation_completions",
    "tight_boundary_records",
    "export_atlas",
    "import_atlas",
    "check_atlas",
    "REFERENCE_BOUNDARY_CASES",
]

Constellation = tuple[int, int, int, int, int, int, int, int]

# Index permutations of the boundary tuple under the strip's symmetries:
# identity, vertical flip (swap rows), horizontal flip (swap ends), and
# point reflection (both). Applying sigma to d yields the boundary of
# the transformed labeling read in the canonical order.
_ID = (0, 1, 2, 3, 4, 5, 6, 7)
_VFLIP = (2, 3, 0, 1, 6, 7, 4, 5)
_HFLIP = (5, 4, 7, 6, 1, 0, 3, 2)
_POINT = (7, 6, 5, 4, 3, 2, 1, 0)
GROUP: tuple[tuple[int, ...], ...] = (_ID, _VFLIP, _HFLIP, _POINT)


def as_constellation(seq) -> Constellation:
    d = tuple(int(x) for x in seq)
    if len(d) != 8 or any(x not in LABEL_VALUES for x in d):
        raise ValueError(f"constellation must be 8 labels from {LABEL_VALUES}, got {seq}")
    return d  # type: ignore[return-value]


def orbit(c: Constellation) -> tuple[Constellation, ...]:
    return tuple(tuple(c[i] for i in perm) for perm in GROUP)  # type: ignore[return-value]


def canonical_constellation(c: Constellation) -> Constellation:
    """Lexicographic minimum of the orbit under the symmetry group."""
    return min(orbit(as_constellation(c)))


def side_feasible(c: Constellation) -> bool:
    """At most two -1 labels on each boundary side (left and right).

    Three or more on one side put three -1 vertices into some closed
    neighborhood of the host graph, which no feasible labeling allows.
    """
    return c[:4].count(-1) <= 2 and c[4:].count(-1) <= 2


def matches_in_orbit(c: Constellation, predicate) -> bool:
    return any(predicate(e) for e in orbit(c))


def enumerate_constellations() -> list[Constellation]:
    """All canonical, side-feasible constellations, sorted (14940 of them)."""
    out = []
    for d in product(LABEL_VALUES, repeat=8):
        if d == canonical_constellation(d) and side_feasible(d):
            out.append(d)
    return sorted(out)


def constellation_counts() -> dict[str, int]:
    """Raw, canonical, and canonical-plus-feasible constellation counts."""
    canonical = feasible = 0
    for d in product(LABEL_VALUES, repeat=8):
        if d == canonical_constellation(d):
            canonical += 1
            if side_feasible(d):
                feasible += 1
    return {"raw": 4**8, "canonical": canonical, "feasible_canonical": feasible}


@dataclass(frozen=True)
class BlockRecord:
    """One atlas row: a canonical constellation and its two center minima."""

    d: Constellation
    minweight_C: int | None
    minweight_Cprime: int | None

    @property
    def delta(self) -> int | None:
        if self.minweight_C is None or self.minweight_Cprime is None:
            return None
        return self.minweight_C - self.minweight_Cprime

    @property
    def boundary_weight(self) -> int:
        return sum(self.d)


@dataclass(frozen=True)
class Atlas:
    """All block records keyed by canonical constellation."""

    records: tuple[BlockRecord, ...]
    group: tuple[tuple[int, ...], ...] = GROUP

    def index(self) -> dict[Constellation, BlockRecord]:
        return {r.d: r for r in self.records}

    def lookup(self, c: Constellation) -> BlockRecord:
        key = canonical_constellation(c)
        if not side_feasible(key):
            raise KeyError(
                f"constellation {c} has more than two -1 labels on a side "
                "and is outside the atlas"
            )
        rec = self.index().get(key)
        if rec is None:
            raise KeyError(f"constellation {c} not in atlas (corrupt database?)")
        return rec


def _constellation_spec(c: Constellation, variant: str) -> SolveSpec:
    g = build_block_graph(variant)
    ids = g.name_to_id()
    fixed = {ids[name]: c[i] for i, name in enumerate(BLOCK_BOUNDARY_NAMES)}
    return SolveSpec(
        g,
        k=1,
        fixed=fixed,
        exempt=block_corner_ids(g),
        objective=block_center_ids(g),
    )


def solve_block(c: Constellation, variant: str = "full") -> int | None:
    """Minimum center weight for one constellation (None when infeasible).

    Boundary labels fixed, corner conditions waived, weight minimized
    over the center vertices only; delegates to the strip DP.
    """
    res = solve_strip_dp(_constellation_spec(as_constellation(c), variant), "open")
    return res.min_weight if res.is_optimal else None


# --- batched solver -------------------------------------------------------
#
# All constellations share the same strip; only the four boundary pairs
# differ. Factoring the column DP through the boundary states turns the
# whole atlas into two 256 x 256 lookup tables.

_PAIR_INDEX = {p: i for i, p in enumerate(_PAIRS)}
_LAPIDX = {x: i for i, x in enumerate(LABEL_VALUES)}


def _left_state(c: Constellation) -> int:
    # DP pairs are (row0, row1) = (bottom, top); left columns are
    # (lb, lt) then (lbi, lti).
    p0 = 4 * _LAPIDX[c[2]] + _LAPIDX[c[0]]
    p1 = 4 * _LAPIDX[c[3]] + _LAPIDX[c[1]]
    return p0 * 16 + p1


def _right_state(c: Constellation) -> int:
    p_inner = 4 * _LAPIDX[c[6]] + _LAPIDX[c[4]]
    p_outer = 4 * _LAPIDX[c[7]] + _LAPIDX[c[5]]
    return p_inner * 16 + p_outer


def _factor_table(center_cols: int) -> np.ndarray:
    """ANS[left_state, right_state] = min center weight of the block."""
    T = np.array(_mid_table(1, False, False), dtype=bool)
    w = np.array([a + b for a, b in _PAIRS], dtype=np.int64)
    pen = np.where(T, 0, _INF)
    cut = _INF >> 1  # dead states drift by column costs; reset them
    F = np.full((256, 16, 16), _INF, dtype=np.int64)
    for s in range(256):
        F[s, s >> 4, s & 15] = 0
    for _ in range(center_cols):
        F = (F[:, :, :, None] + pen[None, :, :, :]).min(axis=1) + w[None, None, :]
        F[F >= cut] = _INF
    flat = F.reshape(256, 256)
    ans = np.full((256, 256), _INF, dtype=np.int64)
    for r in range(256):
        inner, outer = divmod(r, 16)
        close = (T[:, :, inner] & T[:, inner, outer][None, :]).reshape(-1)
        ans[:, r] = np.where(close[None, :], flat, _INF).min(axis=1)
    return ans


_TABLE_CACHE: dict[int, np.ndarray] = {}


def _tables() -> tuple[np.ndarray, np.ndarray]:
    for cols in (8, 4):
        if cols not in _TABLE_CACHE:
            _TABLE_CACHE[cols] = _factor_table(cols)
    return _TABLE_CACHE[8], _TABLE_CACHE[4]


def _record_for(c: Constellation, full: np.ndarray, red: np.ndarray) -> BlockRecord:
    ls, rs = _left_state(c), _right_state(c)
    wc = int(full[ls, rs])
    wp = int(red[ls, rs])
    cut = _INF >> 1
    return BlockRecord(
        c,
        wc if wc < cut else None,
        wp if wp < cut else None,
    )


def _chunk_records(chunk: list[Constellation]) -> list[BlockRecord]:
    full, red = _tables()
    return [_record_for(c, full, red) for c in chunk]


def build_atlas(jobs: int = 1) -> Atlas:
    """Solve every canonical constellation on both blocks.

    The result is deterministic regardless of ``jobs``: records are kept
    in sorted constellation order.
    """
    keys = enumerate_constellations()
    if jobs <= 1:
        records = _chunk_records(keys)
    else:
        chunk = -(-len(keys) // jobs)
        parts = [keys[i : i + chunk] for i in range(0, len(keys), chunk)]
        with multiprocessing.Pool(processes=jobs) as pool:
            records = [r for part in pool.map(_chunk_records, parts) for r in part]
    return Atlas(tuple(records))


def quality_transferring(c: Constellation, atlas: Atlas) -> bool:
    """True when both block minima exist and differ by at least 4."""
    rec = atlas.lookup(c)
    return rec.delta is not None and rec.delta >= 4


def query_atlas(atlas: Atlas, predicate) -> list[BlockRecord]:
    return [r for r in atlas.records if predicate(r)]


def pinned_right_boundary(inner: int, outer: int):
    """Record predicate: some orbit member has both right inner cells =
    ``inner`` and both right outer cells = ``outer``."""

    def fits(e: Constellation) -> bool:
        return e[4] == e[6] == inner and e[5] == e[7] == outer

    return lambda record: matches_in_orbit(record.d, fits)


def boundary_matrix_to_constellation(
    top: tuple[int, int, int, int], bottom: tuple[int, int, int, int]
) -> Constellation:
    """Convert a 2x4 boundary matrix to the canonical tuple order.

    ``top`` is the v-row (lt, lti, rti, rt), ``bottom`` the u-row
    (lb, lbi, rbi, rb), columns left to right.
    """
    return as_constellation(
        (top[0], top[1], bottom[0], bottom[1], top[2], top[3], bottom[2], bottom[3])
    )


def constellation_completions(
    *,
    left_outer: tuple[int, int] | None = None,
    left_inner: tuple[int, int] | None = None,
    right_inner: tuple[int, int] | None = None,
    right_outer: tuple[int, int] | None = None,
    right_inner_sum_min: int | None = None,
    right_inner_set: frozenset[int] | set[int] | None = None,
) -> list[Constellation]:
    """All side-feasible constellations matching a partial boundary.

    Column constraints are (top, bottom) pairs; ``right_inner_sum_min``
    and ``right_inner_set`` constrain the inner right column's label sum
    or its unordered label set. Unconstrained cells range over all four
    labels.
    """

    def choices(pin: tuple[int, int] | None) -> list[tuple[int, int]]:
        if pin is not None:
            return [pin]
        return [(a, b) for a in LABEL_VALUES for b in LABEL_VALUES]

    out = []
    for lo in choices(left_outer):
        for li in choices(left_inner):
            for ri in choices(right_inner):
                if right_inner_sum_min is not None and sum(ri) < right_inner_sum_min:
                    continue
                if right_inner_set is not None and set(ri) != set(right_inner_set):
                    continue
                for ro in choices(right_outer):
                    d = (lo[0], li[0], lo[1], li[1], ri[0], ro[0], ri[1], ro[1])
                    if side_feasible(d):
                        out.append(d)
    return out


def tight_boundary_records(
    atlas: Atlas, total: int = 16, center_floor: int = 10
) -> list[BlockRecord]:
    """The non-transferring constellations a tight host labeling can induce.

    Keeps records whose center minimum is at least ``center_floor`` yet
    boundary plus center weight is pinned to ``total``, whose two sides
    both carry a 2- or 3-label, and which are *not* quality-transferring
    (a transferring block would already shrink the host). The inductive
    case analysis enumerates exactly these; there are five, all with the
    inner left column labeled (-1, -1) and outer right column summing to
    at least 3.
    """

    def positive_on_both_sides(d: Constellation) -> bool:
        return any(x >= 2 for x in d[:4]) and any(x >= 2 for x in d[4:])

    return [
        r
        for r in atlas.records
        if r.minweight_C is not None
        and r.minweight_C >= center_floor
        and r.minweight_C + r.boundary_weight == total
        and positive_on_both_sides(r.d)
        and not (r.delta is not None and r.delta >= 4)
    ]


# Six boundary matrices whose center minima are pinned from below; the
# inductive grid/prism case analysis sums these floors with the boundary
# weights. Stored as ((top row, bottom row), center floor).
REFERENCE_BOUNDARY_CASES: tuple[tuple[Constellation, int], ...] = tuple(
    (boundary_matrix_to_constellation(top, bottom), floor)
    for top, bottom, floor in (
        ((-1, -1, -1, 1), (1, 3, -1, 2), 10),
        ((-1, -1, -1, 1), (2, 3, -1, 2), 10),
        ((-1, -1, -1, 1), (3, 3, -1, 2), 10),
        ((-1, 1, -1, 1), (2, -1, -1, 2), 13),
        ((-1, 1, -1, 2), (2, -1, -1, 1), 13),
        ((1, -1, -1, 1), (1, 3, -1, 2), 10),
    )
)


# --- persistence ----------------------------------------------------------

_CSV_HEADER = ["d0", "d1", "d2", "d3", "d4", "d5", "d6", "d7", "minweight_C", "minweight_Cprime", "delta"]


def _fmt(x: int | None) -> str:
    return "inf" if x is None else str(x)


def atlas_to_csv(atlas: Atlas) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(_CSV_HEADER)
    for r in atlas.records:
        writer.writerow(
            list(r.d)
            + [_fmt(r.minweight_C), _fmt(r.minweight_Cprime), "n/a" if r.delta is None else str(r.delta)]
        )
    return buf.getvalue()


def atlas_from_csv(text: str) -> Atlas:
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if r]
    if not rows or rows[0] != _CSV_HEADER:
        raise ValueError(f"atlas CSV must start with header {','.join(_CSV_HEADER)}")
    records = []
    for row in rows[1:]:
        if len(row) != 11:
            raise ValueError(f"bad atlas row {row!r}")
        d = as_constellation(row[:8])
        wc = None if row[8] == "inf" else int(row[8])
        wp = None if row[9] == "inf" else int(row[9])
        rec = BlockRecord(d, wc, wp)
        declared = None if row[10] == "n/a" else int(row[10])
        if declared != rec.delta:
            raise ValueError(f"delta column inconsistent in row {row!r}")
        records.append(rec)
    return Atlas(tuple(records))


def export_atlas(atlas: Atlas, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(atlas_to_csv(atlas))


def import_atlas(path) -> Atlas:
    with open(path, encoding="utf-8") as fh:
        return atlas_from_csv(fh.read())


# --- claim suite ----------------------------------------------------------


@dataclass(frozen=True)
class ClaimResult:
    name: str
    ok: bool
    detail: str
    soft: bool = False  # informational finding, not a hard requirement


def check_atlas(atlas: Atlas) -> list[ClaimResult]:
    """Run the recorded claims about the database and report each one."""
    out = []
    recs = atlas.records
    out.append(
        ClaimResult("record count", len(recs) == 14940, f"{len(recs)} records (expected 14940)")
    )
    feasible = [r.minweight_C for r in recs if r.minweight_C is not None]
    out.append(
        ClaimResult(
            "smallest center minimum",
            min(feasible) == 6,
            f"min feasible center weight = {min(feasible)} (expected 6, none below)",
        )
    )
    low = [r for r in recs if r.minweight_C in (6, 7, 9)]
    bad = [r for r in low if r.delta != 4]
    out.append(
        ClaimResult(
            "reduction saves 4 at center weights 6/7/9",
            not bad,
            f"{len(low)} records checked, {len(bad)} violations",
        )
    )
    pattern = query_atlas(atlas, pinned_right_boundary(3, -1))
    ok = len(pattern) == 129 and all(r.delta == 4 for r in pattern)
    out.append(
        ClaimResult(
            "pinned right boundary (3/-1)",
            ok,
            f"{len(pattern)} records (expected 129), deltas "
            f"{sorted({r.delta for r in pattern})}",
        )
    )
    for i, (d, floor) in enumerate(REFERENCE_BOUNDARY_CASES):
        rec = atlas.lookup(d)
        ok = rec.minweight_C is not None and rec.minweight_C >= floor
        out.append(
            ClaimResult(
                f"reference boundary case {i + 1}",
                ok,
                f"center minimum {rec.minweight_C} >= {floor}",
            )
        )
    fam_a = constellation_completions(left_outer=(-1, -1), right_inner_sum_min=3)
    bad_a = [d for d in fam_a if not quality_transferring(d, atlas)]
    out.append(
        ClaimResult(
            "left (-1,-1) / inner-right sum >= 3 family transfers",
            not bad_a,
            f"{len(fam_a)} completions, {len(bad_a)} not quality-transferring",
        )
    )
    fam_b = constellation_completions(left_outer=(-1, -1), right_inner_set={1, 3})
    bad_b = [d for d in fam_b if not quality_transferring(d, atlas)]
    out.append(
        ClaimResult(
            "left (-1,-1) / inner-right {1,3} family transfers",
            not bad_b,
            f"{len(fam_b)} completions, {len(bad_b)} not quality-transferring",
        )
    )
    tight = tight_boundary_records(atlas)
    out.append(
        ClaimResult(
            "tight boundary cases",
            len(tight) == 5,
            f"{len(tight)} records at pinned total 16 with center >= 10 (recorded: 5)",
            soft=True,
        )
    )
    return out
