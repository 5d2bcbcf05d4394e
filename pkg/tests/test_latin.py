"""Grids, verification, transforms, SDR/Hall machinery, completion search."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lsnc import (
    Grid,
    build_constraints,
    candidate_cells,
    column_rotate,
    complete_rows_hall,
    find_sdr,
    from_coloring,
    exact_chromatic,
    build_srg,
    generic_complete,
    interchange_symbol_row,
    transpose,
    verify_latin,
    verify_removes,
    xor_square,
)
from lsnc.errors import CompletionError, SearchBudgetExceeded


def random_latin_square(m, seed):
    """Row-, column- and symbol-permuted XOR square."""
    rng = random.Random(seed)
    rp = rng.sample(range(m), m)
    cp = rng.sample(range(m), m)
    sp = rng.sample(range(1, m + 1), m)
    base = xor_square(m)
    return Grid.from_lists(
        [[sp[base.at(rp[r] + 1, cp[c] + 1) - 1] for c in range(m)] for r in range(m)]
    )


def random_partial(m, seed, keep=0.5):
    rng = random.Random(seed)
    g = random_latin_square(m, seed)
    return Grid.from_lists(
        [[v if rng.random() < keep else 0 for v in row] for row in g.rows]
    )


class TestGrid:
    def test_construction_and_accessors(self):
        g = Grid.from_lists([[1, 2], [2, 0]])
        assert g.m == 2
        assert g.at(2, 1) == 2 and g.at(2, 2) == 0
        assert not g.is_complete()
        assert g.symbols() == {1, 2}
        assert g.symbol_count == 2
        assert g.filled_cells() == [(1, 1), (1, 2), (2, 1)]

    def test_set_returns_new_grid(self):
        g = Grid.empty(2)
        h = g.set(1, 1, 2)
        assert g.at(1, 1) == 0 and h.at(1, 1) == 2

    def test_rejects_ragged_and_negative(self):
        with pytest.raises(ValueError):
            Grid.from_lists([[1, 2], [1]])
        with pytest.raises(ValueError):
            Grid.from_lists([[1, -1], [0, 0]])


class TestVerify:
    def test_xor_square_is_latin(self):
        for m in (2, 4, 8, 16):
            assert verify_latin(xor_square(m))

    def test_detects_row_and_column_repeats(self):
        assert not verify_latin(Grid.from_lists([[1, 1], [0, 0]]))
        assert not verify_latin(Grid.from_lists([[1, 0], [1, 0]]))

    def test_partial_grids_verify_cellwise(self):
        assert verify_latin(Grid.from_lists([[1, 0], [0, 1]]))

    def test_removes_requires_constant_blocks(self, qam4, qam4_partition):
        good = Grid.from_lists([[3, 5, 1, 2], [2, 4, 3, 5], [5, 1, 2, 4], [4, 3, 5, 1]])
        assert verify_removes(good, qam4_partition)
        # break one cell of the block {(1,3),(3,2)}
        assert not verify_removes(good.set(3, 2, 3), qam4_partition)


class TestTransforms:
    def test_transpose_removes_inverse_state(self, qam4):
        s = 0.5 + 0.5j
        part = build_constraints(qam4, s)
        grid = from_coloring(part, exact_chromatic(build_srg(part)).coloring)
        flipped = transpose(grid)
        assert verify_latin(flipped)
        assert verify_removes(flipped, build_constraints(qam4, 1 / s))

    def test_column_rotate_shifts_psk_state(self, psk8):
        import cmath
        from lsnc import psk_representative
        from lsnc.psk_construct import removal_square

        s = psk_representative(8, 1, 3).value
        grid = removal_square(8, 1, 3)
        rotated = column_rotate(grid, 1)
        target = s * cmath.exp(2j * cmath.pi / 8)
        assert verify_removes(rotated, build_constraints(psk8, target))

    def test_column_rotate_full_cycle_is_identity(self):
        g = xor_square(8)
        assert column_rotate(g, 8) == g

    @given(st.integers(0, 2**32 - 1), st.sampled_from([4, 8]))
    @settings(max_examples=40, deadline=None)
    def test_interchange_is_involution_on_partials(self, seed, m):
        g = random_partial(m, seed)
        assert interchange_symbol_row(interchange_symbol_row(g)) == g

    def test_interchange_fixture_pairs(self):
        # the worked exchange examples map onto the Hall-completion pair
        from lsnc.fixtures import load_grid
        assert interchange_symbol_row(load_grid("interchange_pls")) == load_grid("hall_rect")
        assert interchange_symbol_row(load_grid("interchange_ls")) == load_grid("hall_ls")

    def test_interchange_rejects_oversized_symbols(self):
        with pytest.raises(ValueError):
            interchange_symbol_row(Grid.from_lists([[3, 0], [0, 0]]))


class TestSdr:
    def test_finds_representatives(self):
        res = find_sdr([[1, 2], [2, 3], [1, 3]])
        assert res.ok
        assert len(set(res.representatives)) == 3
        for rep, s in zip(res.representatives, [[1, 2], [2, 3], [1, 3]]):
            assert rep in s

    def test_reports_hall_violator(self):
        res = find_sdr([[1], [1], [2, 3]])
        assert not res.ok
        assert set(res.violating) == {0, 1}

    @given(
        st.lists(
            st.frozensets(st.integers(0, 9), min_size=0, max_size=4),
            min_size=1,
            max_size=9,
        )
    )
    @settings(max_examples=120, deadline=None)
    def test_agrees_with_exhaustive_hall(self, family):
        family = [sorted(s) for s in family]
        res = find_sdr(family)
        hall_ok = all(
            len(set().union(*(family[i] for i in sub))) >= len(sub)
            for r in range(1, len(family) + 1)
            for sub in itertools.combinations(range(len(family)), r)
        )
        assert res.ok == hall_ok
        if res.ok:
            assert len(set(res.representatives)) == len(family)
            for rep, s in zip(res.representatives, family):
                assert rep in s
        else:
            union = set().union(*(family[i] for i in res.violating))
            assert len(union) < len(res.violating)


class TestHallCompletion:
    @pytest.mark.parametrize("m,r,seed", [(4, 2, 0), (8, 3, 1), (8, 7, 2), (16, 5, 3)])
    def test_extends_rectangles(self, m, r, seed):
        rect = Grid.from_lists(
            [list(row) for row in random_latin_square(m, seed).rows[:r]]
            + [[0] * m for _ in range(m - r)]
        )
        done = complete_rows_hall(rect)
        assert verify_latin(done) and done.is_complete()
        assert done.rows[:r] == rect.rows[:r]
        assert done.symbols() == set(range(1, m + 1))

    def test_rejects_partial_rows(self):
        with pytest.raises(ValueError):
            complete_rows_hall(Grid.from_lists([[1, 2, 0, 4], [0] * 4, [0] * 4, [0] * 4]))

    def test_rejects_foreign_symbols(self):
        bad = Grid.from_lists([[5, 2, 3, 4], [0] * 4, [0] * 4, [0] * 4])
        with pytest.raises(ValueError):
            complete_rows_hall(bad)


class TestGenericComplete:
    def test_completes_partial_square(self):
        g = random_partial(8, 11, keep=0.4)
        done = generic_complete(g, 8)
        assert done is not None
        assert verify_latin(done) and done.is_complete()
        for r, c in g.filled_cells():
            assert done.at(r, c) == g.at(r, c)

    def test_infeasible_returns_none(self):
        # 2x2 with forced diagonal cannot close with 2 symbols
        g = Grid.from_lists([[1, 0], [0, 2]])
        assert generic_complete(g, 2) is None
        assert generic_complete(g, 3) is not None

    def test_candidate_cells_respects_lines(self):
        g = Grid.from_lists([[1, 0], [0, 0]])
        assert candidate_cells(g, 1) == [(2, 2)]
        assert candidate_cells(g, 2) == [(1, 2), (2, 1), (2, 2)]

    def test_budget_exhaustion_raises(self):
        g = Grid.empty(9)
        with pytest.raises(SearchBudgetExceeded):
            generic_complete(g, 9, node_budget=5)

    def test_symbol_budget_below_order_returns_none(self):
        assert generic_complete(Grid.empty(4), 3) is None
