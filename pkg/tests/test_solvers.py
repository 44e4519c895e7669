from __future__ import annotations

import pytest

from conftest import game
from oracles import brute_force_even_region
from pgwitness.automata import SepAutomaton, UpdateKind, bounds_for_game
from pgwitness.errors import ResourceCapError
from pgwitness.games import EVEN, ODD, generate_random
from pgwitness.solvers import (
    WinningSets,
    attractor,
    check_separation,
    differential,
    differential_csv,
    solve,
    solve_lifting,
    solve_product,
    zielonka,
)
from pgwitness.updates import UpdateVariant

ALL_VERTICES = lambda g: frozenset(g.vertices())  # noqa: E731


# ---------------------------------------------------------------------------
# attractor
# ---------------------------------------------------------------------------


def _chain_game():
    # v0 (Odd) -> v1 (Even) -> v2 (Odd, self-loop); v1 can also escape to v0.
    # v0 lists its successor twice to exercise duplicate-edge handling.
    return game([ODD, EVEN, ODD], [1, 1, 1], [[1, 1], [2, 0], [2]])


def test_attractor_even_pulls_the_whole_chain():
    g = _chain_game()
    assert attractor(g, {2}, EVEN) == {0, 1, 2}


def test_attractor_respects_restriction():
    g = _chain_game()
    assert attractor(g, {2}, EVEN, restriction={1, 2}) == {1, 2}
    # Target outside the restriction is dropped.
    assert attractor(g, {2}, EVEN, restriction={0, 1}) == frozenset()


def test_attractor_odd_cannot_use_evens_escape_edge():
    g = _chain_game()
    # From v1 (Even-owned) Even escapes to v0, so Odd attracts only v2.
    assert attractor(g, {2}, ODD) == {2}


def test_attractor_duplicate_successors_count_once():
    # v0 is Even-owned but the *opponent* counter path is what dedupes:
    # make v0 Odd's problem by asking for Even's attractor through it.
    g = game([ODD, EVEN], [1, 2], [[1, 1], [1]])
    assert attractor(g, {1}, EVEN) == {0, 1}


# ---------------------------------------------------------------------------
# zielonka against the brute-force oracle
# ---------------------------------------------------------------------------


def test_zielonka_single_even_loop():
    g = game([EVEN], [2], [[0]])
    res = zielonka(g)
    assert res.even == {0} and res.odd == frozenset()
    assert res.winner(0) == EVEN


def test_zielonka_single_odd_loop():
    g = game([EVEN], [1], [[0]])
    res = zielonka(g)
    assert res.even == frozenset() and res.odd == {0}
    assert res.winner(0) == ODD


def test_zielonka_two_cycle_highest_colour_even():
    g = game([EVEN, ODD], [2, 1], [[1], [0]])
    assert zielonka(g).even == {0, 1}


def test_zielonka_matches_brute_force_on_random_games():
    for seed in range(60):
        n = 3 + seed % 4
        g = generate_random(n, 1 + seed % 5, (1, 2), seed)
        expected = brute_force_even_region(g)
        got = zielonka(g)
        assert got.even == expected, f"seed {seed}"
        assert got.odd == ALL_VERTICES(g) - expected


def test_zielonka_records_call_count():
    stats: dict = {}
    zielonka(game([EVEN, ODD], [2, 1], [[1], [0]]), stats=stats)
    assert stats["calls"] >= 1


# ---------------------------------------------------------------------------
# product solver
# ---------------------------------------------------------------------------


def test_product_even_self_loop_accepts():
    g = game([EVEN], [2], [[0]])
    aut = SepAutomaton(bounds=bounds_for_game(g), variant=UpdateVariant.CONCISE)
    stats: dict = {}
    res = solve_product(g, aut, stats=stats)
    assert res.even == {0}
    assert stats["product_positions"] >= 2


def test_product_rejects_colours_outside_automaton_range():
    g = game([EVEN], [3], [[0]])
    small = game([EVEN], [2], [[0]])
    aut = SepAutomaton(bounds=bounds_for_game(small), variant=UpdateVariant.CLASSIC)
    with pytest.raises(ValueError):
        solve_product(g, aut)


def test_product_cap_is_enforced():
    g = generate_random(6, 4, (1, 3), seed=1)
    aut = SepAutomaton(bounds=bounds_for_game(g), variant=UpdateVariant.CLASSIC)
    with pytest.raises(ResourceCapError):
        solve_product(g, aut, cap=5)


# ---------------------------------------------------------------------------
# lifting solver
# ---------------------------------------------------------------------------


def test_lifting_even_self_loop_takes_two_lifts():
    g = game([EVEN], [2], [[0]])
    stats: dict = {}
    res = solve_lifting(g, UpdateVariant.CONCISE, stats=stats)
    # blank -> <2> -> WON
    assert res.even == {0}
    assert stats["lifts"] == 2


def test_lifting_odd_self_loop_stays_at_bottom():
    # Single odd colour: the budget defaults to 0, Odd wins outright.
    g = game([EVEN], [1], [[0]])
    stats: dict = {}
    res = solve_lifting(g, UpdateVariant.CLASSIC, stats=stats)
    assert res.odd == {0}
    assert stats["lifts"] == 0


def test_lifting_odd_self_loop_with_forced_budget_resets_forever():
    # Even with a budget, the only colour is the odd maximum, so every
    # update resets to all-blank and nothing ever lifts.
    g = game([EVEN], [1], [[0]])
    stats: dict = {}
    res = solve_lifting(g, UpdateVariant.COLOUR, e=2, stats=stats)
    assert res.odd == {0}
    assert stats["lifts"] == 0


def test_lifting_two_cycle_even_wins_everywhere():
    g = game([EVEN, ODD], [2, 1], [[1], [0]])
    for variant in UpdateVariant:
        res = solve_lifting(g, variant)
        assert res.even == {0, 1}, variant


def test_lifting_rejects_unnormalized_colour_zero():
    g = game([EVEN], [0], [[0]])
    with pytest.raises(ValueError):
        solve_lifting(g, UpdateVariant.CONCISE)


# ---------------------------------------------------------------------------
# solve() front door
# ---------------------------------------------------------------------------


def test_solve_normalizes_before_solving():
    # Colours {3, 4} normalize to {1, 2}; winner is unchanged.
    g = game([EVEN, ODD], [4, 3], [[1], [0]])
    for algo in ("zielonka", "product", "lifting"):
        res = solve(g, algo, UpdateVariant.COLOUR, UpdateKind.ANTAGONISTIC)
        assert res.even == {0, 1}, algo


def test_solve_lifting_with_basic_update_is_an_error():
    g = game([EVEN], [2], [[0]])
    with pytest.raises(ValueError):
        solve(g, "lifting", UpdateVariant.CONCISE, UpdateKind.BASIC)


def test_solve_unknown_algorithm():
    g = game([EVEN], [2], [[0]])
    with pytest.raises(ValueError):
        solve(g, "minimax")


def test_solve_all_odd_game_short_circuits_to_odd():
    g = game([EVEN, ODD], [1, 3], [[1], [0]])
    for algo in ("product", "lifting"):
        res = solve(g, algo, UpdateVariant.CLASSIC, UpdateKind.ANTAGONISTIC)
        assert res.odd == {0, 1}, algo


def test_winning_sets_winner_lookup():
    ws = WinningSets(even=frozenset({0, 2}), odd=frozenset({1}))
    assert [ws.winner(v) for v in range(3)] == [EVEN, ODD, EVEN]


# ---------------------------------------------------------------------------
# cross-validation harnesses
# ---------------------------------------------------------------------------


def test_check_separation_rows_agree():
    games = [generate_random(6, 4, (1, 3), seed) for seed in range(8)]
    for kind in UpdateKind:
        for variant in UpdateVariant:
            rows = check_separation(games, variant, kind)
            assert len(rows) == len(games)
            for row in rows:
                assert row["forward_agrees"] and row["backward_agrees"], (
                    variant,
                    kind,
                    row,
                )


def test_differential_rows_and_bitstrings():
    rows = differential(range(25), n=7, max_colour=5)
    assert len(rows) == 25
    for row in rows:
        assert row["agree"] is True
        bitmaps = [v for k, v in row.items() if k.endswith("_even")]
        assert all(b == row["zielonka_even"] for b in bitmaps)
        assert all(len(b) == 7 and set(b) <= {"0", "1"} for b in bitmaps)


def test_differential_bitstring_puts_vertex_zero_leftmost():
    rows = differential([3], n=5, max_colour=4)
    g = generate_random(5, 4, (1, 3), 3)
    even = zielonka(g).even
    expected = "".join("1" if v in even else "0" for v in range(5))
    assert rows[0]["zielonka_even"] == expected


def test_differential_csv_shape():
    rows = differential(range(3), n=5, max_colour=4)
    text = differential_csv(rows)
    lines = text.strip().split("\n")
    assert len(lines) == 4
    header = lines[0].split(",")
    assert header[0] == "seed" and "agree" in header
    for line in lines[1:]:
        assert len(line.split(",")) == len(header)
    assert differential_csv([]) == ""
