"""Signed double Roman domination labelings and their feasibility checks.

A labeling assigns every vertex one of the four values ``-1, 1, 2, 3``
(zero is unrepresentable by construction). A labeling is feasible when

* every ``-1`` vertex has a 3-labeled neighbor or two distinct
  2-labeled neighbors (the *defender* condition),
* every ``1`` vertex has a neighbor labeled 2 or 3 (the *support*
  condition), and
* every closed neighborhood has cumulative weight at least ``k``
  (``k = 1`` for the plain problem, larger ``k`` for the k-variant).

On cubic graphs the sum condition with ``k = 1`` is equivalent to an
arithmetic-free one: every closed neighborhood contains at least two
vertices not labeled ``-1``. :func:`validate_cubic_equiv` checks that
form; its verdict always agrees with :func:`validate` at ``k = 1``.

Vertices listed in ``exempt`` are not checked themselves but still count
as neighbors and defenders of others; the block atlas relies on this to
relax the four corner vertices of its strips.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph

__all__ = [
    "LABEL_VALUES",
    "Labeling",
    "ValidationReport",
    "weight",
    "validate",
    "validate_cubic_equiv",
    "preimage_sets",
    "labeling_to_csv",
    "labeling_from_csv",
]

LABEL_VALUES = (-1, 1, 2, 3)


@dataclass(frozen=True)
class Labeling:
    """Total map vertex id -> {-1, 1, 2, 3}."""

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        bad = [x for x in self.labels if x not in LABEL_VALUES]
        if bad:
            raise ValueError(f"labels must be in {LABEL_VALUES}, got {bad[:5]}")

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    @classmethod
    def from_iterable(cls, values: Iterable[int]) -> "Labeling":
        return cls(tuple(int(x) for x in values))

    @classmethod
    def constant(cls, n: int, value: int) -> "Labeling":
        return cls((value,) * n)


def weight(lab: Labeling, subset: Iterable[int] | None = None) -> int:
    """Cumulative weight of ``lab`` over ``subset`` (all vertices if None)."""
    if subset is None:
        return sum(lab.labels)
    total = 0
    n = len(lab.labels)
    for v in subset:
        if not 0 <= v < n:
            raise IndexError(f"vertex {v} out of range for n={n}")
        total += lab.labels[v]
    return total


def preimage_sets(lab: Labeling) -> tuple[frozenset[int], frozenset[int], frozenset[int], frozenset[int]]:
    """Partition of the vertex set by label value: (V_-1, V_1, V_2, V_3)."""
    buckets: dict[int, list[int]] = {-1: [], 1: [], 2: [], 3: []}
    for v, x in enumerate(lab.labels):
        buckets[x].append(v)
    return tuple(frozenset(buckets[x]) for x in LABEL_VALUES)  # type: ignore[return-value]


@dataclass(frozen=True)
class ValidationReport:
    """Per-vertex record of the three feasibility conditions.

    ``defender_ok[v]`` / ``support_ok[v]`` / ``sum_ok[v]`` hold the raw
    outcome at every vertex, exempt or not; ``valid`` only aggregates the
    non-exempt ones. ``weight`` is the full cumulative weight regardless
    of validity.
    """

    k: int
    exempt: frozenset[int]
    defender_ok: tuple[bool, ...]
    support_ok: tuple[bool, ...]
    sum_ok: tuple[bool, ...]
    valid: bool
    weight: int

    def violations(self) -> list[tuple[int, str]]:
        """Failing (vertex, condition) pairs at non-exempt vertices."""
        out = []
        for v in range(len(self.defender_ok)):
            if v in self.exempt:
                continue
            if not self.defender_ok[v]:
                out.append((v, "defender"))
            if not self.support_ok[v]:
                out.append((v, "support"))
            if not self.sum_ok[v]:
                out.append((v, "sum"))
        return out


def _defender_support(g: Graph, labels: tuple[int, ...]) -> tuple[list[bool], list[bool]]:
    defender = [True] * g.n
    support = [True] * g.n
    for v, x in enumerate(labels):
        nbr_labels = [labels[u] for u in g.adjacency[v]]
        if x == -1:
            defender[v] = 3 in nbr_labels or nbr_labels.count(2) >= 2
        elif x == 1:
            support[v] = any(y >= 2 for y in nbr_labels)
    return defender, support


def validate(
    g: Graph,
    lab: Labeling,
    k: int = 1,
    exempt: Iterable[int] = (),
) -> ValidationReport:
    """Check the three conditions with closed-neighborhood threshold ``k``."""
    if len(lab) != g.n:
        raise ValueError(f"labeling length {len(lab)} != vertex count {g.n}")
    if k < 1:
        raise ValueError(f"threshold k must be >= 1, got {k}")
    ex = frozenset(exempt)
    labels = lab.labels
    defender, support = _defender_support(g, labels)
    sums_ok = [
        labels[v] + sum(labels[u] for u in g.adjacency[v]) >= k for v in range(g.n)
    ]
    valid = all(
        defender[v] and support[v] and sums_ok[v] for v in range(g.n) if v not in ex
    )
    return ValidationReport(k, ex, tuple(defender), tuple(support), tuple(sums_ok), valid, sum(labels))


def validate_cubic_equiv(g: Graph, lab: Labeling) -> ValidationReport:
    """Arithmetic-free check for cubic graphs.

    Replaces the closed-sum condition by: every closed neighborhood has
    at least two vertices not labeled -1. Equivalent to ``validate`` at
    ``k = 1`` on cubic graphs.
    """
    if not g.is_cubic:
        raise ValueError("the arithmetic-free check applies to cubic graphs only")
    if len(lab) != g.n:
        raise ValueError(f"labeling length {len(lab)} != vertex count {g.n}")
    labels = lab.labels
    defender, support = _defender_support(g, labels)
    two_nonneg = [
        sum(1 for u in (v, *g.adjacency[v]) if labels[u] != -1) >= 2
        for v in range(g.n)
    ]
    valid = all(defender[v] and support[v] and two_nonneg[v] for v in range(g.n))
    return ValidationReport(1, frozenset(), tuple(defender), tuple(support), tuple(two_nonneg), valid, sum(labels))


def labeling_to_csv(lab: Labeling) -> str:
    """CSV text with header ``vertex,label``, rows in id order."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["vertex", "label"])
    for v, x in enumerate(lab.labels):
        writer.writerow([v, x])
    return buf.getvalue()


def labeling_from_csv(text: str) -> Labeling:
    """Parse the ``vertex,label`` CSV format; rows must cover ids 0..n-1."""
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if r and any(cell.strip() for cell in r)]
    if not rows or [c.strip() for c in rows[0]] != ["vertex", "label"]:
        raise ValueError("labeling CSV must start with header 'vertex,label'")
    entries: dict[int, int] = {}
    for r in rows[1:]:
        if len(r) != 2:
            raise ValueError(f"bad labeling row {r!r}")
        v, x = int(r[0]), int(r[1])
        if v in entries:
            raise ValueError(f"duplicate vertex {v} in labeling CSV")
        entries[v] = x
    if sorted(entries) != list(range(len(entries))):
        raise ValueError("labeling CSV must cover vertex ids 0..n-1 exactly")
    return Labeling(tuple(entries[v] for v in range(len(entries))))
