"""Update rules: how a witness state changes when a colour is read.

Three rule sets share the same interface.  CLASSIC operates on
value-capped classic witnesses (positions hold chain fragments of exactly
``2^i`` even positions).  CONCISE applies the classic rules and then
blanks repeated odd colours, operating on the concise statespace.  COLOUR
operates on the concise statespace directly with rules that merge all
fragments of the colours an even colour dominates.

Each rule set has a *basic* form (``raw_update`` / ``capped_update``,
deterministic) and an *antagonistic* form (the least possible outcome,
in the witness order, over every state at least as good as the current
one).  The antagonistic form is monotone in its state argument, which the
basic form is not; monotonicity is what value iteration needs.
"""

from __future__ import annotations

import enum
from bisect import bisect_left
from functools import lru_cache

from .errors import ResourceCapError
from .witnesses import (
    BLANK,
    WON,
    Bounds,
    State,
    StatespaceVariant,
    Witness,
    _statespace,
    entry_key,
    state_key,
    witness_key,
    witness_value,
    truncate_odd_repeats,
)


class UpdateVariant(enum.Enum):
    CLASSIC = "classic"
    CONCISE = "concise"
    COLOUR = "colour"


def space_variant_for(variant: UpdateVariant) -> StatespaceVariant:
    """The statespace each rule set operates on."""
    if variant is UpdateVariant.CLASSIC:
        return StatespaceVariant.CLASSIC_VALUE_CAPPED
    return StatespaceVariant.CONCISE


def _check_colour(d: int, bounds: Bounds) -> None:
    if not bounds.min_colour <= d <= bounds.max_colour:
        raise ValueError(
            f"colour {d} outside {bounds.min_colour}..{bounds.max_colour}"
        )


def _raw_classic(w: Witness, d: int, bounds: Bounds) -> tuple[State, str]:
    L = len(w)
    if d % 2 and d == bounds.max_colour:
        return (BLANK,) * L, "reset"
    ent = lambda pos: w[L - 1 - pos]

    if d % 2 == 0:
        # Overflow: least position j holding Blank or an odd colour, with
        # only even colours below it and nothing below d above it.  The
        # new fragment at j absorbs the completed fragments below.
        above_ok = True  # positions > j are Blank or >= d, checked downward
        ok_from = [False] * (L + 1)
        ok_from[L] = True
        for pos in range(L - 1, -1, -1):
            above_ok = ok_from[pos + 1] and (ent(pos) == BLANK or ent(pos) >= d)
            ok_from[pos] = above_ok
        below_even = True
        for j in range(L):
            x = ent(j)
            if (x == BLANK or x % 2) and below_even and ok_from[j + 1]:
                kept = w[: L - 1 - j]
                return kept + (d,) + (BLANK,) * j, "overflow"
            below_even = below_even and x != BLANK and x % 2 == 0
            if not below_even:
                # No higher j can satisfy the all-even-below condition.
                break
        if all(x != BLANK and x % 2 == 0 for x in w):
            return WON, "carry-out"

    # Local: greatest position holding a colour below d restarts with d
    # (or is cleared entirely at position 0).
    for idx in range(L):
        x = w[idx]
        if x != BLANK and x < d:
            pos = L - 1 - idx
            if pos == 0:
                return w[:idx] + (BLANK,), "local"
            return w[:idx] + (d,) + (BLANK,) * pos, "local"
    # Stale: every entry is Blank or at least d; nothing changes.
    return w, "stale"


def _raw_colour(w: Witness, d: int, bounds: Bounds) -> tuple[State, str]:
    L = len(w)
    if d % 2 and d == bounds.max_colour:
        return (BLANK,) * L, "reset"

    if d % 2:
        # Greatest position holding a colour <= d restarts with d; above
        # it every entry is strictly larger (or Blank), so the write never
        # duplicates an odd colour.
        for idx in range(L):
            x = w[idx]
            if x != BLANK and x <= d:
                pos = L - 1 - idx
                if pos == 0:
                    return w[:idx] + (BLANK,), "odd-local"
                return w[:idx] + (d,) + (BLANK,) * pos, "odd-local"
        return w, "odd-stale"

    # Even d.  If an odd colour below d is present, d releases everything
    # that odd colour was blocking: all entries below d at or above the
    # release point merge into d-fragments, and the collected evidence
    # restarts at position 0 with colour d.
    for idx in range(L):
        x = w[idx]
        if x != BLANK and x % 2 and x < d:
            raised = tuple(
                (d if (y != BLANK and y < d) else y) for y in w[: idx + 1]
            )
            return raised + (BLANK,) * (L - idx - 2) + (d,), "even-release"

    # No odd colour below d: the least position holding Blank or an odd
    # colour absorbs the even entries below it into a fragment of colour d;
    # even entries above that are at most d merge into it as well.
    for j in range(L):
        idx = L - 1 - j
        x = w[idx]
        if x == BLANK or x % 2:
            raised = tuple(
                (d if (y != BLANK and y % 2 == 0 and y <= d) else y)
                for y in w[:idx]
            )
            return raised + (d,) + (BLANK,) * j, "even-absorb"
    return WON, "carry-out"


def raw_update_with_rule(
    w: Witness, d: int, bounds: Bounds, variant: UpdateVariant
) -> tuple[State, str]:
    """Apply one colour to a witness; also name the rule that fired.

    The input must be a structurally valid state of the rule set's
    statespace; the colour must lie in the bounds' colour range.  The
    result is not value-capped (see ``capped_update``).
    """
    _check_colour(d, bounds)
    if variant is UpdateVariant.CLASSIC:
        return _raw_classic(w, d, bounds)
    if variant is UpdateVariant.CONCISE:
        r, rule = _raw_classic(w, d, bounds)
        if r is not WON:
            r = truncate_odd_repeats(r)
        return r, rule
    return _raw_colour(w, d, bounds)


def raw_update(w: Witness, d: int, bounds: Bounds, variant: UpdateVariant) -> State:
    return raw_update_with_rule(w, d, bounds, variant)[0]


def capped_update(s: State, d: int, bounds: Bounds, variant: UpdateVariant) -> State:
    """The basic update: raw rules, with values beyond ``e`` collapsing to WON.

    WON is absorbing.
    """
    if s is WON:
        _check_colour(d, bounds)
        return WON
    r = raw_update(s, d, bounds, variant)
    if r is WON:
        return WON
    if witness_value(r) > bounds.e:
        return WON
    return r


# ---------------------------------------------------------------------------
# Antagonistic updates
# ---------------------------------------------------------------------------


def update_space(bounds: Bounds, variant: UpdateVariant) -> tuple[Witness, ...]:
    """The sorted statespace the given rule set runs on (WON excluded)."""
    return _statespace(bounds, space_variant_for(variant), None)


def antagonistic_update_reference(
    s: State, d: int, bounds: Bounds, variant: UpdateVariant
) -> State:
    """Least capped-update outcome over all

    states at least as good as ``s`` (including WON).  Reference
    implementation by direct enumeration of the statespace suffix; the
    statespace is totally ordered, so the states above ``s`` form a
    suffix of the sorted enumeration.
    """
    if s is WON:
        _check_colour(d, bounds)
        return WON
    space = update_space(bounds, variant)
    keys = _space_keys(bounds, variant)
    start = bisect_left(keys, witness_key(s))
    best: State = WON
    best_key = state_key(best)
    for c in space[start:]:
        r = capped_update(c, d, bounds, variant)
        rk = state_key(r)
        if rk < best_key:
            best, best_key = r, rk
    return best


@lru_cache(maxsize=64)
def _space_keys(bounds: Bounds, variant: UpdateVariant):
    return [witness_key(c) for c in update_space(bounds, variant)]


@lru_cache(maxsize=64)
def _antagonistic_table(
    bounds: Bounds, variant: UpdateVariant
) -> tuple[dict[Witness, int], dict[int, list[State]]]:
    """Suffix minima of the capped update over the sorted statespace.

    ``table[d][rank(s)]`` is the least capped-update outcome over every
    state of rank at least ``rank(s)``, which is exactly the antagonistic
    update (the order is total, so the up-set of ``s`` is a rank suffix).
    """
    space = update_space(bounds, variant)
    rank = {c: i for i, c in enumerate(space)}
    table: dict[int, list[State]] = {}
    for d in range(bounds.min_colour, bounds.max_colour + 1):
        col: list[State] = [WON] * len(space)
        best: State = WON
        best_key = state_key(best)
        for r in range(len(space) - 1, -1, -1):
            out = capped_update(space[r], d, bounds, variant)
            ok = state_key(out)
            if ok < best_key:
                best, best_key = out, ok
            col[r] = best
        table[d] = col
    return rank, table


ANTAGONISTIC_TABLE_CAP = 200_000


def antagonistic_update(
    s: State,
    d: int,
    bounds: Bounds,
    variant: UpdateVariant,
    *,
    table_cap: int = ANTAGONISTIC_TABLE_CAP,
) -> State:
    """Antagonistic update for production use.

    Backed by precomputed suffix minima while the statespace fits under
    ``table_cap`` states, by the constructive routine beyond that.
    """
    if s is WON:
        _check_colour(d, bounds)
        return WON
    try:
        _statespace(bounds, space_variant_for(variant), table_cap)
    except ResourceCapError:
        return antagonistic_update_fast(s, d, bounds, variant)
    rank, table = _antagonistic_table(bounds, variant)
    _check_colour(d, bounds)
    return table[d][rank[s]]


def antagonistic_update_fast(
    s: State, d: int, bounds: Bounds, variant: UpdateVariant
) -> State:
    """Constructive antagonistic update; no statespace enumeration.

    Every state above ``s`` agrees with ``s`` above some position ``t``
    and beats it at ``t``.  For a fixed divergence entry, the least
    capped-update outcome over all ways to fill the positions below ``t``
    is already achieved by leaving them Blank: the rules either ignore the
    low positions (a write forced higher up), return the state unchanged
    (and any filling only increases it), or write ``d`` at position 0
    (and any filling moves the write higher up, increasing the result).
    So the minimum over ``{s} ∪ {agree-above-t, beat-at-t, Blank below}``
    is the full antagonistic update.
    """
    _check_colour(d, bounds)
    if s is WON:
        return WON
    if d % 2 and d == bounds.max_colour:
        return bounds.blank_witness()

    L = bounds.length
    space_variant = space_variant_for(variant)
    alphabet = bounds.statespace_entries(space_variant)
    concise = space_variant is StatespaceVariant.CONCISE

    best: State = capped_update(s, d, bounds, variant)
    best_key = state_key(best)

    for idx in range(L):  # idx 0 = most significant, position L-1-idx
        pos = L - 1 - idx
        head = s[:idx]
        ub = None  # nearest colour above the divergence point
        for y in reversed(head):
            if y != BLANK:
                ub = y
                break
        head_odds = {y for y in head if y != BLANK and y % 2} if concise else None
        base_key = entry_key(s[idx])
        for x in alphabet:
            if entry_key(x) <= base_key:
                continue
            if ub is not None and x > ub:
                continue
            if pos == 0 and x % 2:
                continue
            if concise and x % 2 and head_odds is not None and x in head_odds:
                continue
            c = head + (x,) + (BLANK,) * pos
            if witness_value(c) > bounds.e:
                continue
            r = capped_update(c, d, bounds, variant)
            rk = state_key(r)
            if rk < best_key:
                best, best_key = r, rk
    return best
