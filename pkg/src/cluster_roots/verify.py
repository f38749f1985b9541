"""Theorem-level orchestration: the two-sided c-vector check and the
bounded-depth counterexample reproductions.

For an acyclic quiver the claim under test is an exact set equality at desk
scale: positive c-vectors within a mutation depth on one side, certified
real Schur roots within a height bound on the other. Inclusion failures are
collected, never summarized away; randomized-oracle misses are flagged as
inconclusive rather than treated as disproofs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presets import preset
from .quiver import ExchangeMatrix, QuiverSpec, from_arrows, is_acyclic
from .roots import forms_of
from .schur import (
    DEFAULT_PRIME,
    DEFAULT_TRIALS,
    enumerate_real_schur_roots,
    is_real_schur_root,
)
from .search import DEFAULT_SEED_CAP, contains_c_vector, enumerate_c_vectors

IntVec = tuple[int, ...]

# Violation tags for c_not_schur entries. The first two are hard disproofs;
# the oracle tag is a sampling miss and only ever makes a report inconclusive.
NOT_REAL_ROOT = "not_positive_real_root"
REFUTED = "refuted_not_real_root"
ORACLE_MISS = "likely_not_schur"


@dataclass(frozen=True)
class TheoremReport:
    """Result of the two-sided check.

    c_not_schur: positive c-vectors that failed the root test or the Schur
    oracle, each tagged with why. schur_not_c: certified roots not seen as
    c-vectors within the (possibly once-doubled) depth, each with the depth
    actually searched. verdict is pass exactly when both lists are empty;
    fail needs a hard violation, otherwise the report is inconclusive.
    """

    quiver_id: str
    depth: int
    height: int
    c_not_schur: tuple[tuple[IntVec, str], ...]
    schur_not_c: tuple[tuple[IntVec, int], ...]
    verdict: str
    closed: bool
    positive_c_count: int
    certified_count: int
    notes: tuple[str, ...]


def verify_main_theorem(
    b: ExchangeMatrix,
    depth: int,
    height: int,
    trials: int = DEFAULT_TRIALS,
    p: int = DEFAULT_PRIME,
    rng_seed: int = 0,
    quiver_id: str = "",
    max_seeds: int = DEFAULT_SEED_CAP,
) -> TheoremReport:
    """Run both inclusions for an acyclic exchange matrix.

    (i) every positive c-vector within `depth` must pass reflection descent
    and certify as a real Schur root; (ii) every certified root of
    coordinate sum <= `height` must appear as a c-vector, with one depth
    doubling granted before a miss is recorded. Lists are sorted for stable
    golden comparisons.
    """
    if not is_acyclic(b):
        raise ValueError("the two-sided check applies to acyclic quivers only")
    quiver = QuiverSpec.from_exchange_matrix(b)
    forms = forms_of(b)
    report = enumerate_c_vectors(b, depth, max_seeds=max_seeds)
    notes: list[str] = []
    if report.capped:
        notes.append(f"search capped at {max_seeds} seeds; results partial")

    c_not_schur: list[tuple[IntVec, str]] = []
    for v in sorted(report.positive_c_vectors):
        if not forms.is_positive_real_root(v):
            c_not_schur.append((v, NOT_REAL_ROOT))
            continue
        verdict = is_real_schur_root(quiver, v, trials=trials, p=p, rng_seed=rng_seed)
        if verdict.kind == "certified":
            continue
        tag = REFUTED if verdict.kind == "refuted_not_real_root" else ORACLE_MISS
        if tag == ORACLE_MISS:
            notes.append(
                f"oracle could not certify c-vector {v} in {trials} trials; "
                "rerun with more trials to separate a miss from a disproof"
            )
        c_not_schur.append((v, tag))

    certified, audit = enumerate_real_schur_roots(
        quiver, height, trials=trials, p=p, rng_seed=rng_seed
    )
    for root in audit:
        notes.append(
            f"positive real root {root} not certified in {trials} trials; "
            "its c-vector membership was not demanded"
        )

    used_depth = depth
    misses = [r for r in sorted(certified) if not contains_c_vector(b, r, depth)]
    if misses:
        used_depth = 2 * depth
        misses = [r for r in misses if not contains_c_vector(b, r, used_depth)]
    schur_not_c = tuple((r, used_depth) for r in misses)

    hard = any(tag != ORACLE_MISS for _, tag in c_not_schur) or (
        bool(misses) and report.closed
    )
    # verdict is pass exactly when both violation lists are empty; audit-only
    # notes (roots the sampler missed outside the demanded inclusions) ride
    # along in notes without changing the verdict
    if not c_not_schur and not schur_not_c:
        verdict = "pass"
    elif hard:
        verdict = "fail"
    else:
        verdict = "inconclusive"
    return TheoremReport(
        quiver_id=quiver_id,
        depth=used_depth,
        height=height,
        c_not_schur=tuple(c_not_schur),
        schur_not_c=schur_not_c,
        verdict=verdict,
        closed=report.closed,
        positive_c_count=len(report.positive_c_vectors),
        certified_count=len(certified),
        notes=tuple(notes),
    )


def verify_counterexample_markov(depth: int = 10) -> bool:
    """Bounded-depth absence of (4,4,4) on the double-arrow cycle.

    Every visited seed is sign-coherence checked by the walk itself; the
    return value is evidence within the depth bound, not a proof beyond it.
    """
    b = from_arrows(preset("markov"))
    return not contains_c_vector(b, (4, 4, 4), depth)


def verify_counterexample_atilde2(depth: int = 10) -> bool:
    """Bounded-depth absence of (1,2,1) on the mixed single/double cycle."""
    b = from_arrows(preset("atilde2"))
    return not contains_c_vector(b, (1, 2, 1), depth)
