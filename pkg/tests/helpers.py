"""Shared oracles for the test suite.

Everything here is built directly from closed-form descriptions, not by
calling the enumeration code under test, so the two routes stay
independent.
"""

from __future__ import annotations

import random
from itertools import combinations

from delpezzo import LatticeVector, MarkedLattice, basis_e, basis_h, zero_vector

LINE_COUNTS = {3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}
ROOT_COUNTS = {3: 8, 4: 20, 5: 40, 6: 72, 7: 126, 8: 240}
DYNKIN_NAMES = {3: "A1+A2", 4: "A4", 5: "D5", 6: "E6", 7: "E7", 8: "E8"}


def esum(r: int, indices) -> LatticeVector:
    v = zero_vector(r)
    for i in indices:
        v = v + basis_e(r, i)
    return v


def closed_form_positive_roots(r: int) -> set[LatticeVector]:
    """The closed families: e_i - e_j (i<j), h - e_i - e_j - e_k,
    2h - six e's (r >= 6), 3h - 2e_i - the rest (r = 8)."""
    h = basis_h(r)
    out = {basis_e(r, i) - basis_e(r, j) for i, j in combinations(range(1, r + 1), 2)}
    out |= {h - esum(r, t) for t in combinations(range(1, r + 1), 3)}
    if r >= 6:
        out |= {2 * h - esum(r, t) for t in combinations(range(1, r + 1), 6)}
    if r == 8:
        out |= {
            3 * h - basis_e(r, i) - esum(r, range(1, 9)) for i in range(1, 9)
        }
    return out


def closed_form_highest_root(r: int) -> LatticeVector:
    h = basis_h(r)
    if r in (4, 5):
        return h - esum(r, (r - 2, r - 1, r))
    if r in (6, 7):
        return 2 * h - esum(r, range(r - 5, r + 1))
    return 3 * h - esum(r, range(1, 8)) - 2 * basis_e(r, 8)


def brute_force_classes(r: int, norm: int, deg: int, box: int) -> set[LatticeVector]:
    """Plain box scan oracle; `box` bounds every coefficient magnitude."""
    out = set()
    for a in range(-box, box + 1):
        for tail in _boxes(r, box):
            v = LatticeVector(a, tail)
            if a * a - sum(c * c for c in tail) == norm and 3 * a + sum(tail) == deg:
                out.add(v)
    return out


def _boxes(k: int, box: int):
    if k == 0:
        yield ()
        return
    for c in range(-box, box + 1):
        for tail in _boxes(k - 1, box):
            yield (c, *tail)


def random_vector(rng: random.Random, r: int, span: int = 3) -> LatticeVector:
    return LatticeVector(
        rng.randint(-span, span), tuple(rng.randint(-span, span) for _ in range(r))
    )


def random_word(rng: random.Random, r: int, max_len: int = 10) -> tuple[int, ...]:
    return tuple(rng.randint(1, r) for _ in range(rng.randint(0, max_len)))


def exact_determinant(matrix) -> int:
    """Cofactor expansion; fine for the tiny matrices in these tests."""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in [list(m) for m in matrix[1:]]]
        total += (-1) ** j * matrix[0][j] * exact_determinant(minor)
    return total
