"""Closed-form bounds, the discharging certificate, and the
total-domination upper-bound pipeline for cubic graphs.

The discharging certificate re-proves, instance by instance, that every
feasible labeling of a cubic graph has weight at least n/2: starting
from the labels as per-vertex charges, every positively labeled vertex
sends a fixed amount (1/4, 3/4, or 5/4 by label 1, 2, 3) to each of its
(-1)-neighbors. Feasibility forces every final charge to be at least
1/2 while the total charge is conserved. All charges are kept in exact
integer quarter-units; no floating point is involved.

The upper-bound pipeline labels a minimum 2/3-total dominating set with
2 and everything else with -1, producing a labeling that is feasible
even at threshold k = 2 and has weight strictly below 5n/4.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .graphs import Graph
from .labeling import Labeling, preimage_sets, validate, weight

__all__ = [
    "ChargeVector",
    "BoundReport",
    "lower_bound_cubic",
    "discharge",
    "discharge_steps",
    "verify_discharge_certificate",
    "alpha_total_dom_min",
    "is_alpha_total_dominating",
    "sd2rdf_from_set",
    "bound_report",
    "ALPHA_SET_SEARCH_LIMIT",
]

ALPHA_SET_SEARCH_LIMIT = 20

# Quarter-units sent by a 1-, 2-, or 3-labeled vertex to each (-1)-neighbor.
_SEND_QUARTERS = {1: 1, 2: 3, 3: 5}


@dataclass(frozen=True)
class ChargeVector:
    """Per-vertex charges in exact quarter-units (value = 4 * charge)."""

    quarter_charges: tuple[int, ...]

    @property
    def total_quarters(self) -> int:
        return sum(self.quarter_charges)

    @property
    def min_quarters(self) -> int:
        return min(self.quarter_charges)


def lower_bound_cubic(n: int) -> int:
    """Sharp lower bound for cubic graphs of (even) order n.

    n/2 when n = 0 mod 4, n/2 + 1 when n = 2 mod 4. Cubic graphs have
    even order, so odd n is rejected.
    """
    if n % 2 != 0:
        raise ValueError(f"cubic graphs have even order, got n={n}")
    if n < 4:
        raise ValueError(f"need n >= 4, got n={n}")
    return n // 2 + (1 if n % 4 == 2 else 0)


def discharge_steps(g: Graph, lab: Labeling) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Apply the three discharging rules one by one.

    Yields ``(rule_index, quarter_charges)`` after the initialisation
    (rule 0) and after each sending rule, so callers can assert charge
    conservation between rules. Requires a cubic graph and a labeling the
    validator accepts.
    """
    if not g.is_cubic:
        raise ValueError("discharging applies to cubic graphs only")
    report = validate(g, lab)
    if not report.valid:
        raise ValueError(f"labeling is not feasible: {report.violations()[:4]}")
    q = [4 * x for x in lab.labels]
    yield 0, tuple(q)
    minus = [v for v in range(g.n) if lab[v] == -1]
    minus_set = set(minus)
    for rule, source_label in enumerate((1, 2, 3), start=1):
        send = _SEND_QUARTERS[source_label]
        for v in range(g.n):
            if lab[v] != source_label:
                continue
            for u in g.adjacency[v]:
                if u in minus_set:
                    q[v] -= send
                    q[u] += send
        yield rule, tuple(q)


def discharge(g: Graph, lab: Labeling) -> ChargeVector:
    """Final charges after all three rules, in quarter-units."""
    final: tuple[int, ...] = ()
    for _, q in discharge_steps(g, lab):
        final = q
    return ChargeVector(final)


def verify_discharge_certificate(g: Graph, lab: Labeling) -> bool:
    """Certificate check: every final charge >= 1/2 and total conserved.

    Holds for every feasible labeling on every cubic graph; a False here
    would falsify the discharging lower bound.
    """
    cv = discharge(g, lab)
    return cv.min_quarters >= 2 and cv.total_quarters == 4 * weight(lab)


def is_alpha_total_dominating(
    g: Graph, s: Iterable[int], alpha_num: int = 2, alpha_den: int = 3
) -> bool:
    """Total domination plus the fractional neighbor requirement.

    Every vertex needs a neighbor in S, and every vertex outside S needs
    at least alpha * deg(v) neighbors in S (exact rational comparison).
    """
    sset = set(s)
    if any(not 0 <= v < g.n for v in sset):
        raise ValueError("set member out of range")
    for v in range(g.n):
        inside = sum(1 for u in g.adjacency[v] if u in sset)
        if inside == 0:
            return False
        if v not in sset and inside * alpha_den < alpha_num * g.degree(v):
            return False
    return True


def alpha_total_dom_min(
    g: Graph, alpha_num: int = 2, alpha_den: int = 3
) -> frozenset[int]:
    """Minimum-cardinality alpha-total dominating set by exhaustive search.

    Tries cardinalities in increasing order and returns the first
    (lexicographically smallest) hit; exact but exponential, so capped at
    ``ALPHA_SET_SEARCH_LIMIT`` vertices.
    """
    if not g.is_cubic:
        raise ValueError("the alpha-total domination search expects a cubic graph")
    if g.n > ALPHA_SET_SEARCH_LIMIT:
        raise ValueError(
            f"exhaustive set search caps at {ALPHA_SET_SEARCH_LIMIT} vertices, got {g.n}"
        )
    for size in range(1, g.n + 1):
        for cand in combinations(range(g.n), size):
            if is_alpha_total_dominating(g, cand, alpha_num, alpha_den):
                return frozenset(cand)
    raise RuntimeError("no total dominating set found (disconnected vertex?)")


def sd2rdf_from_set(g: Graph, s: Iterable[int]) -> Labeling:
    """Label a 2/3-total dominating set with 2 and its complement with -1.

    The result satisfies the threshold-2 variant (hence also the plain
    problem); for a minimum set its weight is strictly below 5n/4.
    """
    sset = frozenset(s)
    if not is_alpha_total_dominating(g, sset):
        raise ValueError("set is not 2/3-total dominating")
    return Labeling(tuple(2 if v in sset else -1 for v in range(g.n)))


@dataclass(frozen=True)
class BoundReport:
    """The four closed-form bounds for a cubic instance.

    ``lower_thm3`` is the parity-refined discharging bound (defined for
    even order), ``lower_thm1`` is ceil(k*n/4), ``upper_thm1`` is
    floor(13n/8), and ``upper_prop1`` is the largest weight strictly
    below 5n/4 (the total-domination pipeline guarantee for k <= 2).
    """

    n: int
    k: int
    lower_thm3: int | None
    lower_thm1: int
    upper_thm1: int
    upper_prop1: int

    def to_dict(self) -> dict:
        return asdict(self)


def bound_report(g: Graph, k: int = 1) -> BoundReport:
    if not g.is_cubic:
        raise ValueError("bound report applies to cubic graphs only")
    if k < 1:
        raise ValueError(f"threshold k must be >= 1, got {k}")
    n = g.n
    return BoundReport(
        n=n,
        k=k,
        lower_thm3=lower_bound_cubic(n),
        lower_thm1=-(-k * n // 4),
        upper_thm1=13 * n // 8,
        upper_prop1=(5 * n - 1) // 4,
    )
