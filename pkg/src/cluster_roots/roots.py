"""Euler form, Tits form, simple reflections, and positive real roots.

Everything here is attached to an acyclic quiver through its exchange
matrix. The Euler form reads arrow directions; the symmetrized form and the
reflections only see edge multiplicities, which is what makes the real-root
combinatorics orientation independent.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .quiver import ExchangeMatrix, is_acyclic

IntVec = tuple[int, ...]


@dataclass(frozen=True)
class QuiverForms:
    """Bilinear data of an acyclic quiver.

    mult[i][j] is the number of edges between vertices i and j regardless of
    direction (symmetric, zero diagonal); arrows[i][j] counts directed arrows
    i -> j and feeds the Euler form.
    """

    n: int
    mult: tuple[tuple[int, ...], ...]
    arrows: tuple[tuple[int, ...], ...]

    def euler(self, d, e) -> int:
        """Euler bilinear form <d, e> = sum d_i e_i - sum over arrows i->j of d_i e_j."""
        d = _check_vec(self.n, d)
        e = _check_vec(self.n, e)
        total = sum(x * y for x, y in zip(d, e))
        for i in range(self.n):
            row = self.arrows[i]
            if d[i]:
                total -= d[i] * sum(row[j] * e[j] for j in range(self.n))
        return total

    def symmetrized(self, d, e) -> int:
        """(d, e) = <d, e> + <e, d>; depends only on mult."""
        return self.euler(d, e) + self.euler(e, d)

    def q(self, d) -> int:
        """Tits quadratic form q(d) = <d, d>; q = 1 characterizes real roots."""
        return self.euler(d, d)

    def reflect(self, d, i: int) -> IntVec:
        """Simple reflection at vertex i (1-based): negate coordinate i and add
        the multiplicity-weighted neighbor sum. An involution preserving q."""
        d = _check_vec(self.n, d)
        if not 1 <= i <= self.n:
            raise IndexError(f"vertex {i} out of range 1..{self.n}")
        k = i - 1
        row = self.mult[k]
        new = -d[k] + sum(row[j] * d[j] for j in range(self.n) if j != k)
        return d[:k] + (new,) + d[k + 1 :]

    def is_positive_real_root(self, d) -> bool:
        """Reflection descent test for positive real roots.

        A nonzero nonnegative vector is a positive real root exactly when
        repeatedly reflecting at the smallest vertex that strictly lowers the
        coordinate sum reaches a simple root without any coordinate going
        negative. Reflections permute roots, so a non-root can never land on
        a simple; descent exists for every non-simple positive real root.
        """
        d = _check_vec(self.n, d)
        if any(x < 0 for x in d) or all(x == 0 for x in d):
            return False
        while True:
            if sum(d) == 1:
                return True
            height = sum(d)
            for i in range(1, self.n + 1):
                r = self.reflect(d, i)
                if sum(r) < height:
                    if any(x < 0 for x in r):
                        return False
                    d = r
                    break
            else:
                return False

    def enumerate_positive_real_roots(self, height: int) -> frozenset[IntVec]:
        """All positive real roots with coordinate sum <= height.

        Breadth-first closure of the simple roots under all reflections,
        discarding anything negative or over the height bound. Complete
        because descent paths are height monotone: every root of height <= H
        is reachable from a simple through intermediates of height <= H.
        """
        if height < 1:
            raise ValueError("height must be >= 1")
        simples = [
            tuple(1 if j == i else 0 for j in range(self.n)) for i in range(self.n)
        ]
        found: set[IntVec] = set(simples)
        queue = deque(simples)
        while queue:
            d = queue.popleft()
            for i in range(1, self.n + 1):
                r = self.reflect(d, i)
                if r in found or any(x < 0 for x in r) or sum(r) > height:
                    continue
                found.add(r)
                queue.append(r)
        return frozenset(found)


def _check_vec(n: int, d) -> IntVec:
    v = tuple(int(x) for x in d)
    if len(v) != n:
        raise ValueError(f"vector length {len(v)} does not match n={n}")
    return v


def forms_of(b: ExchangeMatrix) -> QuiverForms:
    """Build the form data of an acyclic exchange matrix.

    Non-acyclic input is rejected: the root-system machinery is only invoked
    for acyclic quivers.
    """
    if not is_acyclic(b):
        raise ValueError("forms are defined only for acyclic exchange matrices")
    n = b.n
    arrows = tuple(
        tuple(max(b.b[i][j], 0) for j in range(n)) for i in range(n)
    )
    mult = tuple(tuple(abs(b.b[i][j]) for j in range(n)) for i in range(n))
    return QuiverForms(n=n, mult=mult, arrows=arrows)
