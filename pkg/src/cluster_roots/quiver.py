"""Exchange matrices, seeds with principal coefficients, and mutation.

Vertices are numbered 1..n in every public interface.  All types are
immutable values: mutation returns a fresh seed, so seeds can be shared,
hashed, and used as search keys without defensive copies.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .linalg import (
    IntRows,
    det,
    freeze_rows,
    identity_rows,
    mat_mul,
    transpose_rows,
    unimodular_inverse,
)

IntVector = tuple[int, ...]

#: Entries beyond this magnitude abort a mutation instead of being carried
#: further.  Python integers never wrap, so this is a tripwire against
#: runaway seeds (deep walks on mutation-cyclic quivers), not a correctness
#: requirement.
DEFAULT_ENTRY_LIMIT = 2**63 - 1


class MutationOverflowError(OverflowError):
    """A mutated matrix entry exceeded the configured magnitude limit.

    Carries the mutation word that produced the offending seed.
    """

    def __init__(self, word: tuple[int, ...], entry: int, limit: int):
        self.word = word
        self.entry = entry
        self.limit = limit
        super().__init__(
            f"entry magnitude {abs(entry)} exceeds limit {limit} "
            f"after mutation word {list(word)}"
        )


@dataclass(frozen=True)
class QuiverSpec:
    """A quiver given by arrows: (source, target, multiplicity) triples.

    Loops and 2-cycles are rejected; both are outside the mutation theory
    implemented here.
    """

    n: int
    arrows: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        object.__setattr__(
            self, "arrows", tuple((int(s), int(t), int(m)) for s, t, m in self.arrows)
        )
        seen: set[tuple[int, int]] = set()
        for s, t, m in self.arrows:
            if not (1 <= s <= self.n and 1 <= t <= self.n):
                raise ValueError(f"arrow ({s},{t}) out of range 1..{self.n}")
            if s == t:
                raise ValueError(f"loop at vertex {s} is not allowed")
            if m < 1:
                raise ValueError(f"arrow ({s},{t}) has multiplicity {m} < 1")
            if (s, t) in seen:
                raise ValueError(f"duplicate arrow entry for ({s},{t})")
            if (t, s) in seen:
                raise ValueError(f"2-cycle between {s} and {t} is not allowed")
            seen.add((s, t))

    @classmethod
    def from_exchange_matrix(cls, b: "ExchangeMatrix") -> "QuiverSpec":
        arrows = tuple(
            (i + 1, j + 1, b.b[i][j])
            for i in range(b.n)
            for j in range(b.n)
            if b.b[i][j] > 0
        )
        return cls(b.n, arrows)


@dataclass(frozen=True)
class ExchangeMatrix:
    """Skew-symmetric integer matrix b with b[i][j] = #(i->j) - #(j->i)."""

    n: int
    b: IntRows

    def __post_init__(self):
        object.__setattr__(self, "b", freeze_rows(self.b))
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        if len(self.b) != self.n or any(len(row) != self.n for row in self.b):
            raise ValueError(f"matrix must be {self.n}x{self.n}")
        for i in range(self.n):
            for j in range(self.n):
                if self.b[i][j] != -self.b[j][i]:
                    raise ValueError(
                        f"matrix is not skew-symmetric at ({i + 1},{j + 1})"
                    )

    @classmethod
    def from_rows(cls, rows) -> "ExchangeMatrix":
        frozen = freeze_rows(rows)
        return cls(len(frozen), frozen)

    def transposed(self) -> "ExchangeMatrix":
        return ExchangeMatrix(self.n, transpose_rows(self.b))


def from_arrows(spec: QuiverSpec) -> ExchangeMatrix:
    """Exchange matrix of a loop-free, 2-cycle-free arrow list."""
    b = [[0] * spec.n for _ in range(spec.n)]
    for s, t, m in spec.arrows:
        b[s - 1][t - 1] += m
        b[t - 1][s - 1] -= m
    return ExchangeMatrix(spec.n, freeze_rows(b))


def is_acyclic(b: ExchangeMatrix) -> bool:
    """True iff the digraph with an edge i->j whenever b[i][j] > 0 has no
    directed cycle (iterated sink removal)."""
    remaining = set(range(b.n))
    while remaining:
        sinks = [
            i
            for i in remaining
            if all(b.b[i][j] <= 0 for j in remaining if j != i)
        ]
        if not sinks:
            return False
        remaining.difference_update(sinks)
    return True


def is_sign_coherent(c: IntRows) -> bool:
    """Every column entrywise >= 0 or entrywise <= 0, and no zero column."""
    for col in transpose_rows(freeze_rows(c)):
        if all(x == 0 for x in col):
            return False
        if any(x > 0 for x in col) and any(x < 0 for x in col):
            return False
    return True


def g_from_c(c: IntRows) -> IntRows:
    """The dual matrix g with transpose(g) . c = identity.

    Exact integer inversion; raises ValueError when c is not unimodular
    (which would mean the mutation state is corrupted).
    """
    return transpose_rows(unimodular_inverse(freeze_rows(c)))


@dataclass(frozen=True)
class Seed:
    """Exchange matrix together with its c- and g-matrices and the mutation
    word (1-based vertex indices) that produced it.

    The j-th column of c is the j-th c-vector, likewise for g.
    """

    b: ExchangeMatrix
    c: IntRows
    g: IntRows
    word: tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return self.b.n

    @property
    def key(self) -> tuple[IntRows, IntRows]:
        """Dedup key for tree searches: the exact (b, c) pair."""
        return (self.b.b, self.c)

    def c_columns(self) -> tuple[IntVector, ...]:
        return transpose_rows(self.c)

    def g_columns(self) -> tuple[IntVector, ...]:
        return transpose_rows(self.g)

    def mutate(self, k: int, entry_limit: int = DEFAULT_ENTRY_LIMIT) -> "Seed":
        return mutate(self, k, entry_limit=entry_limit)

    def check(self) -> None:
        """Assert the seed invariants: unimodular c, duality, sign-coherence."""
        if det(self.c) not in (1, -1):
            raise AssertionError(
                f"c-matrix not unimodular after word {list(self.word)}"
            )
        if mat_mul(transpose_rows(self.g), self.c) != identity_rows(self.n):
            raise AssertionError(
                f"transpose(g).c != identity after word {list(self.word)}"
            )
        if not is_sign_coherent(self.c):
            raise AssertionError(
                f"c-matrix not sign-coherent after word {list(self.word)}"
            )


def initial_seed(b: ExchangeMatrix) -> Seed:
    """Seed at the root of the mutation tree: c = g = identity."""
    eye = identity_rows(b.n)
    return Seed(b=b, c=eye, g=eye, word=())


def mutate(s: Seed, k: int, entry_limit: int = DEFAULT_ENTRY_LIMIT) -> Seed:
    """Mutate a seed at vertex k (1-based).

    The 2n x n stacked matrix [b; c] is mutated in one pass: with
    [x]+ = max(x, 0) and row k meaning row k of the b-block,

        m'[r][j] = -m[r][j]                       if r = k or j = k
        m'[r][j] = m[r][j] + [m[r][k]]+ [m[k][j]]+
                           - [-m[r][k]]+ [-m[k][j]]+   otherwise

    and g is then recomputed from c by exact inversion, so the duality
    transpose(g) . c = identity holds by construction after every step.
    """
    n = s.n
    if not 1 <= k <= n:
        raise IndexError(f"mutation vertex {k} out of range 1..{n}")
    ki = k - 1
    stacked = [list(row) for row in s.b.b] + [list(row) for row in s.c]
    bk = stacked[ki]  # row k of the b-block
    word = s.word + (k,)
    new_rows = []
    for r, row in enumerate(stacked):
        if r == ki:
            new_rows.append([-x for x in row])
            continue
        rk = row[ki]
        new_row = []
        for j, x in enumerate(row):
            if j == ki:
                new_row.append(-x)
            else:
                y = x + max(rk, 0) * max(bk[j], 0) - max(-rk, 0) * max(-bk[j], 0)
                new_row.append(y)
        new_rows.append(new_row)
    for row in new_rows:
        for x in row:
            if abs(x) > entry_limit:
                raise MutationOverflowError(word, x, entry_limit)
    b2 = ExchangeMatrix(n, freeze_rows(new_rows[:n]))
    c2 = freeze_rows(new_rows[n:])
    g2 = g_from_c(c2)
    return Seed(b=b2, c=c2, g=g2, word=word)


# ---------------------------------------------------------------------------
# Quiver documents.
#
# Everywhere a quiver is read, two JSON forms are accepted:
#   {"n": N, "arrows": [[i, j, mult], ...]}   (mult optional, default 1)
#   {"matrix": [[...], ...]}


def parse_quiver_document(doc) -> ExchangeMatrix:
    """Read a quiver from a JSON string or an already-parsed dict."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as e:
            raise ValueError(f"invalid quiver document: {e}") from e
    if not isinstance(doc, dict):
        raise ValueError("quiver document must be a JSON object")
    if "matrix" in doc:
        rows = doc["matrix"]
        if not isinstance(rows, list) or not rows:
            raise ValueError("'matrix' must be a non-empty list of rows")
        return ExchangeMatrix.from_rows(rows)
    if "n" in doc and "arrows" in doc:
        arrows = []
        for entry in doc["arrows"]:
            if not isinstance(entry, (list, tuple)) or len(entry) not in (2, 3):
                raise ValueError(f"arrow entry {entry!r} must be [i, j] or [i, j, mult]")
            s, t = entry[0], entry[1]
            m = entry[2] if len(entry) == 3 else 1
            arrows.append((s, t, m))
        return from_arrows(QuiverSpec(int(doc["n"]), tuple(arrows)))
    raise ValueError("quiver document needs either 'matrix' or 'n' and 'arrows'")
