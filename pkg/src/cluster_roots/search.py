"""Breadth-first exploration of the mutation tree with c-vector collection.

The walk lives on the n-regular tree of mutation words, never immediately
undoing the last mutation, and additionally prunes any seed whose exact
(b, c) pair has been seen before; identical seeds generate identical
subtrees, so nothing is lost. Every visited seed is checked for
sign-coherence, unimodularity, and the g-duality before its columns are
collected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .quiver import ExchangeMatrix, Seed, initial_seed, mutate

IntVec = tuple[int, ...]

DEFAULT_SEED_CAP = 200_000


@dataclass(frozen=True)
class SearchReport:
    """What a bounded walk saw.

    closed means the final frontier produced nothing new, so the collected
    c-vector set is complete for every depth. capped reports that the walk
    stopped early on the visited-set cap; a capped report is never closed.
    """

    positive_c_vectors: frozenset[IntVec]
    negative_count: int
    seeds_visited: int
    depth_reached: int
    closed: bool
    capped: bool = False


def _seed_line(seed: Seed) -> str:
    doc = {
        "word": list(seed.word),
        "b": [list(r) for r in seed.b.b],
        "c": [list(r) for r in seed.c],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _walk(b: ExchangeMatrix, depth, max_seeds: int, stream=None):
    """Shared BFS core. Yields nothing; returns the full bookkeeping.

    depth=None walks until closure or the seed cap. Returns
    (positive, negative, visited_count, depth_reached, closed, capped,
    frontier_at_stop, seen_keys).
    """
    start = initial_seed(b)
    start.check()
    seen = {start.key}
    positive: set[IntVec] = set()
    negative: set[IntVec] = set()
    _collect(start, positive, negative)
    if stream is not None:
        stream.write(_seed_line(start) + "\n")
    frontier = [start]
    level = 0
    closed = False
    capped = False
    while frontier:
        if depth is not None and level >= depth:
            break
        next_frontier: list[Seed] = []
        for seed in frontier:
            last = seed.word[-1] if seed.word else 0
            for k in range(1, b.n + 1):
                if k == last:
                    continue
                child = mutate(seed, k)
                if child.key in seen:
                    continue
                if len(seen) >= max_seeds:
                    capped = True
                    break
                seen.add(child.key)
                child.check()
                _collect(child, positive, negative)
                if stream is not None:
                    stream.write(_seed_line(child) + "\n")
                next_frontier.append(child)
            if capped:
                break
        if capped:
            break
        if not next_frontier:
            closed = True
            break
        frontier = next_frontier
        level += 1
    else:  # pragma: no cover - frontier can only empty via the closed branch
        closed = True
    if not closed and not capped and depth is not None and level >= depth:
        # budget exhausted with a live frontier: peek one level to decide
        # whether anything new would appear
        closed = True
        for seed in frontier:
            last = seed.word[-1] if seed.word else 0
            for k in range(1, b.n + 1):
                if k != last and mutate(seed, k).key not in seen:
                    closed = False
                    break
            if not closed:
                break
    return positive, negative, len(seen), level, closed, capped


def _collect(seed: Seed, positive: set[IntVec], negative: set[IntVec]) -> None:
    for col in seed.c_columns():
        if all(x >= 0 for x in col):
            positive.add(col)
        else:
            negative.add(col)


def enumerate_c_vectors(
    b: ExchangeMatrix,
    depth: int,
    max_seeds: int = DEFAULT_SEED_CAP,
    stream=None,
) -> SearchReport:
    """Collect every c-vector within `depth` mutations of the initial seed.

    closed is decided by expanding the last frontier: either a frontier
    empties inside the budget, or the budget-level frontier is peeked one
    level deeper. Passing a writable text `stream` appends one line per
    visited seed (word, b, c as a json document) for offline audit or
    resumption.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    pos, neg, visited, level, closed, capped = _walk(b, depth, max_seeds, stream)
    return SearchReport(
        positive_c_vectors=frozenset(pos),
        negative_count=len(neg),
        seeds_visited=visited,
        depth_reached=level,
        closed=closed,
        capped=capped,
    )


def contains_c_vector(b: ExchangeMatrix, v, depth: int) -> bool:
    """True iff v or -v occurs as a c-matrix column within `depth`.

    Early exit on the first hit; otherwise the full bounded walk runs.
    """
    target = tuple(int(x) for x in v)
    if len(target) != b.n:
        raise ValueError(f"vector length {len(target)} does not match n={b.n}")
    neg_target = tuple(-x for x in target)
    start = initial_seed(b)
    start.check()
    if _hits(start, target, neg_target):
        return True
    seen = {start.key}
    frontier = [start]
    for _ in range(depth):
        next_frontier: list[Seed] = []
        for seed in frontier:
            last = seed.word[-1] if seed.word else 0
            for k in range(1, b.n + 1):
                if k == last:
                    continue
                child = mutate(seed, k)
                if child.key in seen:
                    continue
                seen.add(child.key)
                child.check()
                if _hits(child, target, neg_target):
                    return True
                next_frontier.append(child)
        if not next_frontier:
            break
        frontier = next_frontier
    return False


def _hits(seed: Seed, target: IntVec, neg_target: IntVec) -> bool:
    return any(col == target or col == neg_target for col in seed.c_columns())


def is_finite_type(b: ExchangeMatrix, cap: int):
    """True when the labeled mutation walk closes within `cap` seeds.

    Returns None for inconclusive: the cap was hit before any frontier
    emptied, which is what every infinite-type quiver does for every cap.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    _, _, _, _, closed, capped = _walk(b, None, cap)
    return True if closed and not capped else None
