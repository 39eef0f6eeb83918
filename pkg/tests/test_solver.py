"""Exact-solver agreement, pruning soundness, and edge cases."""

from __future__ import annotations

import random

import pytest

from sdrd.bounds import lower_bound_cubic
from sdrd.graphs import build_block_graph, build_flower_snark, build_grid, build_petersen
from sdrd.labeling import validate, weight
from sdrd.solver import (
    SizeLimitError,
    SolveSpec,
    brute_force,
    solve_bnb,
    solve_strip_dp,
)


class TestKnownValues:
    def test_grid_2x3(self):
        assert solve_strip_dp(SolveSpec(build_grid(2, 3)), "open").min_weight == 2

    def test_prism_p51(self):
        assert solve_bnb(SolveSpec(build_petersen(5, 1))).min_weight == 7

    def test_k4_against_enumeration(self, k4):
        res = brute_force(SolveSpec(k4))
        assert res.min_weight == solve_bnb(SolveSpec(k4)).min_weight

    def test_grid_2x9_and_2x11(self):
        assert solve_strip_dp(SolveSpec(build_grid(2, 9)), "open").min_weight == 10
        assert solve_strip_dp(SolveSpec(build_grid(2, 11)), "open").min_weight == 11

    def test_prism_p91_cyclic(self):
        assert solve_strip_dp(SolveSpec(build_petersen(9, 1)), "cyclic").min_weight == 11

    def test_brute_small_grids(self):
        assert brute_force(SolveSpec(build_grid(2, 5))).min_weight == 6
        assert brute_force(SolveSpec(build_grid(2, 1))).min_weight == 2

    def test_brute_equals_bnb_p31(self):
        g = build_petersen(3, 1)
        assert brute_force(SolveSpec(g)).min_weight == solve_bnb(SolveSpec(g)).min_weight


class TestOracleAgreement:
    @pytest.mark.parametrize(
        "m,k", [(3, 1), (3, 2), (4, 1), (4, 3), (5, 1), (5, 2), (5, 3), (5, 4)]
    )
    def test_petersen_brute_vs_bnb(self, m, k):
        g = build_petersen(m, k)
        a = brute_force(SolveSpec(g))
        b = solve_bnb(SolveSpec(g))
        assert a.min_weight == b.min_weight
        assert a.witness == b.witness  # both lexicographically smallest

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
    def test_grid_three_way(self, m):
        g = build_grid(2, m)
        a = brute_force(SolveSpec(g))
        b = solve_bnb(SolveSpec(g))
        c = solve_strip_dp(SolveSpec(g), "open")
        assert a.min_weight == b.min_weight == c.min_weight

    @pytest.mark.slow
    def test_constrained_specs_fuzz_open(self):
        rng = random.Random(5)
        g = build_grid(2, 6)
        for _ in range(25):
            spec_kw = dict(
                k=rng.choice((1, 1, 2)),
                fixed={rng.randrange(g.n): rng.choice((-1, 1, 2, 3)) for _ in range(rng.randrange(0, 5))},
                exempt=frozenset(rng.sample(range(g.n), rng.randrange(0, 3))),
            )
            a = brute_force(SolveSpec(g, **spec_kw))
            b = solve_bnb(SolveSpec(g, **spec_kw))
            c = solve_strip_dp(SolveSpec(g, **spec_kw), "open")
            assert (a.status, a.min_weight) == (b.status, b.min_weight) == (c.status, c.min_weight)

    @pytest.mark.slow
    def test_constrained_specs_fuzz_cyclic(self):
        rng = random.Random(3)
        g = build_petersen(6, 1)
        for _ in range(25):
            spec_kw = dict(
                k=rng.choice((1, 1, 2)),
                fixed={rng.randrange(g.n): rng.choice((-1, 1, 2, 3)) for _ in range(rng.randrange(0, 5))},
                exempt=frozenset(rng.sample(range(g.n), rng.randrange(0, 3))),
            )
            a = brute_force(SolveSpec(g, **spec_kw))
            c = solve_strip_dp(SolveSpec(g, **spec_kw), "cyclic")
            assert (a.status, a.min_weight) == (c.status, c.min_weight)


class TestDpBnbAgreement:
    @pytest.mark.parametrize("m", list(range(2, 11)))
    def test_open_grids(self, m):
        g = build_grid(2, m)
        assert (
            solve_strip_dp(SolveSpec(g), "open").min_weight
            == solve_bnb(SolveSpec(g)).min_weight
        )

    @pytest.mark.parametrize("m", [3, 4, 5, 6])
    def test_prisms(self, m):
        g = build_petersen(m, 1)
        assert (
            solve_strip_dp(SolveSpec(g), "cyclic").min_weight
            == solve_bnb(SolveSpec(g)).min_weight
        )

    def test_block_with_fixed_boundary_and_exempt_corners(self):
        g = build_block_graph("reduced")
        ids = g.name_to_id()
        fixed = {
            ids["lt"]: 2, ids["lti"]: 2, ids["lb"]: -1, ids["lbi"]: 2,
            ids["rti"]: 3, ids["rt"]: -1, ids["rbi"]: 3, ids["rb"]: -1,
        }
        corners = frozenset(ids[nm] for nm in ("lt", "lb", "rt", "rb"))
        center = frozenset(v for v, nm in enumerate(g.names) if nm[0] in "uv")
        kw = dict(fixed=fixed, exempt=corners, objective=center)
        a = solve_strip_dp(SolveSpec(g, **kw), "open")
        b = solve_bnb(SolveSpec(g, **kw))
        assert a.min_weight == b.min_weight
        assert validate(g, a.witness, exempt=corners).valid


class TestSpecHandling:
    def test_monotone_in_k(self):
        for g in (build_petersen(4, 1), build_grid(2, 4)):
            prev = None
            for k in range(1, 6):
                got = solve_bnb(SolveSpec(g, k=k)).min_weight
                if prev is not None:
                    assert got >= prev
                prev = got

    def test_cubic_lower_bound_respected(self):
        for g in (build_petersen(4, 1), build_petersen(5, 2), build_petersen(6, 1)):
            assert solve_bnb(SolveSpec(g)).min_weight >= lower_bound_cubic(g.n)

    def test_witness_soundness(self):
        g = build_petersen(5, 2)
        res = solve_bnb(SolveSpec(g, k=2))
        assert validate(g, res.witness, k=2).valid
        assert weight(res.witness) == res.min_weight

    def test_objective_subset(self):
        g = build_grid(2, 4)
        half = frozenset(range(4))
        res = solve_bnb(SolveSpec(g, objective=half))
        assert res.min_weight == weight(res.witness, half)
        full = solve_bnb(SolveSpec(g)).min_weight
        assert res.min_weight <= full

    def test_infeasible_fixed_labels(self, k4):
        res = solve_bnb(SolveSpec(k4, fixed={v: -1 for v in range(4)}))
        assert res.status == "infeasible" and res.witness is None
        res2 = brute_force(SolveSpec(k4, fixed={v: -1 for v in range(4)}))
        assert res2.status == "infeasible"

    def test_determinism(self):
        g = build_petersen(5, 2)
        r1 = solve_bnb(SolveSpec(g))
        r2 = solve_bnb(SolveSpec(g))
        assert r1 == r2
        d1 = solve_strip_dp(SolveSpec(build_grid(2, 7)), "open")
        d2 = solve_strip_dp(SolveSpec(build_grid(2, 7)), "open")
        assert d1 == d2

    def test_bad_spec_parameters(self, k4):
        with pytest.raises(ValueError):
            SolveSpec(k4, k=0)
        with pytest.raises(ValueError):
            SolveSpec(k4, fixed={9: 2})
        with pytest.raises(ValueError):
            SolveSpec(k4, fixed={0: 0})
        with pytest.raises(ValueError):
            SolveSpec(k4, exempt={99})


class TestLimits:
    def test_brute_force_cap(self):
        with pytest.raises(SizeLimitError):
            brute_force(SolveSpec(build_petersen(8, 1)))

    def test_bnb_cap(self):
        with pytest.raises(SizeLimitError):
            solve_bnb(SolveSpec(build_flower_snark(7)))
        with pytest.raises(SizeLimitError):
            solve_bnb(SolveSpec(build_petersen(5, 1)), size_limit=8)

    def test_dp_rejects_unsupported_graphs(self, k4):
        with pytest.raises(ValueError):
            solve_strip_dp(SolveSpec(k4), "open")
        with pytest.raises(ValueError):
            solve_strip_dp(SolveSpec(build_petersen(5, 2)), "cyclic")
        with pytest.raises(ValueError):
            solve_strip_dp(SolveSpec(build_grid(3, 3)), "open")

    def test_dp_rejects_wrong_topology(self):
        with pytest.raises(ValueError):
            solve_strip_dp(SolveSpec(build_grid(2, 4)), "cyclic")
        with pytest.raises(ValueError):
            solve_strip_dp(SolveSpec(build_petersen(4, 1)), "open")
