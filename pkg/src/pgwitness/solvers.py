"""Parity game solvers.

Three routes to the winning sets:

* ``zielonka`` -- classic recursive decomposition, independent of the
  witness machinery; serves as the oracle the other solvers are checked
  against.
* ``solve_product`` -- safety product of the game with a separating
  automaton (basic or antagonistic updates): Even wins a vertex iff Even
  can force the product into a WON state.  This reads plays forward.
* ``solve_lifting`` -- least-fixpoint value iteration assigning each
  vertex the witness evidence Even can guarantee against an adversarial
  environment; requires the monotone (antagonistic) update and plays the
  role of the backward reading.

``solve`` is the normalizing front door used by the CLI and the
differential harness.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .automata import SepAutomaton, UpdateKind, bounds_for_game
from .errors import ResourceCapError
from .games import EVEN, ODD, ParityGame, generate_random, normalize_colours
from .updates import UpdateVariant, antagonistic_update
from .witnesses import WON, State, state_key


@dataclass(frozen=True)
class WinningSets:
    even: frozenset[int]
    odd: frozenset[int]

    def winner(self, v: int) -> int:
        return EVEN if v in self.even else ODD


def attractor(
    game: ParityGame,
    target: Iterable[int],
    player: int,
    restriction: Iterable[int] | None = None,
) -> frozenset[int]:
    """Vertices from which ``player`` can force a visit to ``target``.

    Restricted to the subgame induced by ``restriction`` when given (the
    target is intersected with it).  Standard backward induction with
    out-degree counters for the opponent's vertices.
    """
    alive = set(restriction) if restriction is not None else set(game.vertices())
    attr = {t for t in target if t in alive}
    count = {
        v: len({w for w in game.succ[v] if w in alive})
        for v in alive
        if game.owners[v] != player
    }
    queue = deque(attr)
    while queue:
        w = queue.popleft()
        for v in game.predecessors[w]:
            if v not in alive or v in attr:
                continue
            if game.owners[v] == player:
                attr.add(v)
                queue.append(v)
            else:
                count[v] -= 1
                if count[v] == 0:
                    attr.add(v)
                    queue.append(v)
    return frozenset(attr)


def zielonka(game: ParityGame, *, stats: dict | None = None) -> WinningSets:
    """Recursive decomposition by highest colour."""
    calls = 0
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * game.n + 100))

    def solve_region(alive: frozenset[int]) -> tuple[frozenset[int], frozenset[int]]:
        nonlocal calls
        calls += 1
        if not alive:
            return frozenset(), frozenset()
        m = max(game.colours[v] for v in alive)
        p = EVEN if m % 2 == 0 else ODD
        target = {v for v in alive if game.colours[v] == m}
        a = attractor(game, target, p, alive)
        sub = solve_region(alive - a)
        win_p, win_o = (sub[0], sub[1]) if p == EVEN else (sub[1], sub[0])
        if not win_o:
            return (alive, frozenset()) if p == EVEN else (frozenset(), alive)
        b = attractor(game, win_o, 1 - p, alive)
        sub2 = solve_region(alive - b)
        win_p2, win_o2 = (sub2[0], sub2[1]) if p == EVEN else (sub2[1], sub2[0])
        win_o2 = win_o2 | b
        return (win_p2, win_o2) if p == EVEN else (win_o2, win_p2)

    try:
        even, odd = solve_region(frozenset(game.vertices()))
    finally:
        sys.setrecursionlimit(old_limit)
    if stats is not None:
        stats["calls"] = calls
    return WinningSets(even=even, odd=odd)


DEFAULT_PRODUCT_CAP = 2_000_000


def solve_product(
    game: ParityGame,
    automaton: SepAutomaton,
    *,
    stats: dict | None = None,
    cap: int = DEFAULT_PRODUCT_CAP,
) -> WinningSets:
    """Solve via the safety product with a separating automaton.

    Product positions are (vertex, automaton state); moving along an edge
    (v, w) feeds the source colour of ``v`` into the automaton.  Even wins
    a vertex iff Even can force the product from (vertex, initial) into a
    position whose automaton state is WON.
    """
    b = automaton.bounds
    for c in game.colours:
        if not b.min_colour <= c <= b.max_colour:
            raise ValueError(
                f"game colour {c} outside automaton colour range "
                f"{b.min_colour}..{b.max_colour}"
            )
    index: dict[tuple[int, State], int] = {}
    owners: list[int] = []
    succ: list[list[int]] = []
    target: list[int] = []
    worklist: deque[tuple[int, State]] = deque()

    def node(v: int, q: State) -> int:
        key = (v, q)
        pid = index.get(key)
        if pid is None:
            pid = len(owners)
            if pid >= cap:
                raise ResourceCapError(
                    f"product exceeds cap of {cap} positions (bounds {b})"
                )
            index[key] = pid
            owners.append(game.owners[v])
            succ.append([])
            if q is WON:
                target.append(pid)
            else:
                worklist.append(key)
        return pid

    starts = [node(v, automaton.initial) for v in game.vertices()]
    while worklist:
        v, q = worklist.popleft()
        pid = index[(v, q)]
        q2 = automaton.step(q, game.colours[v])
        for w in game.succ[v]:
            succ[pid].append(node(w, q2))

    # Backward induction over the explored product (successor-closed):
    # WON positions are winning; Even positions win with one winning
    # successor, Odd positions once all successors are winning.
    n_prod = len(owners)
    preds: list[list[int]] = [[] for _ in range(n_prod)]
    degree = [0] * n_prod
    for p in range(n_prod):
        for s in set(succ[p]):
            preds[s].append(p)
            degree[p] += 1
    winning = [False] * n_prod
    queue = deque(target)
    for t in target:
        winning[t] = True
    while queue:
        s = queue.popleft()
        for p in preds[s]:
            if winning[p]:
                continue
            if owners[p] == EVEN:
                winning[p] = True
                queue.append(p)
            else:
                degree[p] -= 1
                if degree[p] == 0:
                    winning[p] = True
                    queue.append(p)
    even = frozenset(v for v in game.vertices() if winning[starts[v]])
    if stats is not None:
        stats["product_positions"] = n_prod
    return WinningSets(even=even, odd=frozenset(game.vertices()) - even)


def solve_lifting(
    game: ParityGame,
    variant: UpdateVariant,
    e: int | None = None,
    *,
    stats: dict | None = None,
) -> WinningSets:
    """Solve by value iteration with the antagonistic update.

    Each vertex carries the best witness evidence its owner can guarantee;
    a vertex is re-evaluated as the owner-best antagonistic update over
    its outgoing edges (max for Even, min for Odd, feeding the source
    colour).  Values only ever increase, so the FIFO worklist reaches the
    least fixpoint; Even wins exactly the vertices that stabilise at WON.
    """
    cmin = min(game.colours)
    if cmin < 1:
        raise ValueError("game has colour 0; normalize colours first")
    bounds = bounds_for_game(game, e)
    if bounds is None:
        if stats is not None:
            stats["lifts"] = 0
        return WinningSets(even=frozenset(), odd=frozenset(game.vertices()))
    mu: list[State] = [bounds.blank_witness()] * game.n
    in_queue = [True] * game.n
    queue: deque[int] = deque(game.vertices())
    lifts = 0
    while queue:
        v = queue.popleft()
        in_queue[v] = False
        outcomes = [
            antagonistic_update(mu[w], game.colours[v], bounds, variant)
            for w in game.succ[v]
        ]
        pick = max if game.owners[v] == EVEN else min
        new = pick(outcomes, key=state_key)
        if state_key(new) > state_key(mu[v]):
            mu[v] = new
            lifts += 1
            for p in game.predecessors[v]:
                if not in_queue[p]:
                    in_queue[p] = True
                    queue.append(p)
    even = frozenset(v for v in game.vertices() if mu[v] is WON)
    if stats is not None:
        stats["lifts"] = lifts
    return WinningSets(even=even, odd=frozenset(game.vertices()) - even)


def solve(
    game: ParityGame,
    algo: str = "zielonka",
    variant: UpdateVariant = UpdateVariant.CONCISE,
    kind: UpdateKind = UpdateKind.BASIC,
    e: int | None = None,
    *,
    stats: dict | None = None,
) -> WinningSets:
    """Normalizing front door: solve with any algorithm/variant/update.

    Colours are normalized first (winner-preserving).  ``e`` defaults to
    the number of even-coloured vertices; a budget of 0 means Odd wins
    everywhere.
    """
    norm, _ = normalize_colours(game)
    if algo == "zielonka":
        return zielonka(norm, stats=stats)
    if algo == "lifting":
        if kind is UpdateKind.BASIC:
            raise ValueError(
                "lifting requires the antagonistic update (monotonicity)"
            )
        return solve_lifting(norm, variant, e, stats=stats)
    if algo == "product":
        bounds = bounds_for_game(norm, e)
        if bounds is None:
            return WinningSets(
                even=frozenset(), odd=frozenset(game.vertices())
            )
        automaton = SepAutomaton(bounds=bounds, variant=variant, kind=kind)
        return solve_product(norm, automaton, stats=stats)
    raise ValueError(f"unknown algorithm {algo!r}")


def check_separation(
    games: Sequence[ParityGame],
    variant: UpdateVariant,
    kind: UpdateKind = UpdateKind.BASIC,
    e: int | None = None,
) -> list[dict]:
    """Cross-validate the witness solvers against the recursive oracle.

    For each game: the forward reading (safety product with the given
    update kind) and the backward reading (value iteration, which is
    intrinsically antagonistic) must both reproduce the oracle's winning
    sets.  Returns one row per game with agreement flags.
    """
    rows = []
    for i, g in enumerate(games):
        oracle = solve(g, "zielonka")
        forward = solve(g, "product", variant, kind, e)
        backward = solve(g, "lifting", variant, UpdateKind.ANTAGONISTIC, e)
        rows.append(
            {
                "game": i,
                "forward_agrees": forward == oracle,
                "backward_agrees": backward == oracle,
                "even_region": sorted(oracle.even),
            }
        )
    return rows


# ---------------------------------------------------------------------------
# Differential harness
# ---------------------------------------------------------------------------

DIFF_METHODS: tuple[tuple[str, str, UpdateVariant, UpdateKind | None], ...] = tuple(
    [
        ("product_" + v.value + "_" + k.value, "product", v, k)
        for v in UpdateVariant
        for k in (UpdateKind.BASIC, UpdateKind.ANTAGONISTIC)
    ]
    + [("lifting_" + v.value, "lifting", v, UpdateKind.ANTAGONISTIC) for v in UpdateVariant]
)


def differential(
    seeds: Iterable[int],
    n: int = 8,
    max_colour: int = 6,
    out_degree: tuple[int, int] = (1, 3),
) -> list[dict]:
    """Solve random games with every method and record (dis)agreements.

    One row per seed: the Even winning set of each method as a bitstring
    (vertex 0 leftmost, '1' = Even wins), each method's work counter, and
    an overall agreement flag against the recursive oracle.
    """
    rows = []
    for seed in seeds:
        game = generate_random(n, max_colour, out_degree, seed)
        stats: dict = {}
        oracle = solve(game, "zielonka", stats=stats)
        row: dict = {
            "seed": seed,
            "n": game.n,
            "max_colour": max_colour,
            "e": game.even_vertex_count,
            "zielonka_even": _bitmap(oracle.even, game.n),
            "zielonka_steps": stats.get("calls", 0),
        }
        agree = True
        for name, algo, variant, kind in DIFF_METHODS:
            st: dict = {}
            res = solve(game, algo, variant, kind or UpdateKind.BASIC, stats=st)
            row[name + "_even"] = _bitmap(res.even, game.n)
            row[name + "_steps"] = st.get("lifts", st.get("product_positions", 0))
            agree = agree and res == oracle
        row["agree"] = agree
        rows.append(row)
    return rows


def _bitmap(vertices: frozenset[int], n: int) -> str:
    return "".join("1" if v in vertices else "0" for v in range(n))


def differential_csv(rows: Sequence[dict]) -> str:
    """Render differential rows as CSV (stable column order)."""
    if not rows:
        return ""
    cols = list(rows[0].keys())
    lines = [",".join(cols)]
    for row in rows:
        lines.append(",".join(str(row[c]) for c in cols))
    return "\n".join(lines) + "\n"
