"""Shared random generators and independent brute-force oracles.

The oracles deliberately avoid the package's own search code: words are
enumerated with itertools.product, reachability by trying every word up
to the pigeonhole length, counts by plain integer matrix powers.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import subshift as ss


def random_matrix(rng, nmax=4, nmin=1) -> ss.AdjacencyMatrix:
    n = rng.randint(nmin, nmax)
    rows = []
    for _ in range(n):
        row = [rng.randint(0, 1) for _ in range(n)]
        if 1 not in row:
            row[rng.randrange(n)] = 1
        rows.append(row)
    return ss.AdjacencyMatrix.from_rows(rows)


def random_fraction(rng, span=6, den=5, nonneg=False, positive=False) -> Fraction:
    lo = 1 if positive else (0 if nonneg else -span)
    return Fraction(rng.randint(lo, span), rng.randint(1, den))


def random_function(rng, A, depth, nonneg=False, positive=False, zero_prob=0.0):
    table = {}
    for w in ss.enumerate_words(A, depth):
        if zero_prob and rng.random() < zero_prob:
            table[w] = Fraction(0)
        else:
            table[w] = random_fraction(rng, nonneg=nonneg, positive=positive)
    return ss.CylinderFunction(A, depth, table)


def random_mask(rng, A, depth, full_prob=0.5) -> ss.DomainMask:
    if rng.random() < full_prob:
        return ss.DomainMask.full(A, depth)
    words = ss.enumerate_words(A, depth)
    k = rng.randint(1, len(words))
    return ss.DomainMask(A, depth, frozenset(rng.sample(words, k)))


def random_weight(rng, A, depth_max=3, zero_prob=0.0, domain=None) -> ss.Weight:
    depth = rng.randint(1, depth_max)
    if domain is None:
        domain = random_mask(rng, A, rng.randint(1, depth))
    carrier = random_function(rng, A, depth, positive=True, zero_prob=zero_prob)
    return ss.Weight(carrier, domain)


def masked(f: ss.CylinderFunction, U: ss.DomainMask) -> ss.CylinderFunction:
    """Force f to vanish outside U (makes it a valid operator argument)."""
    return ss.pointwise("mul", f, U.indicator())


def no_zero_row_matrices(n):
    """Every n-by-n 0-1 matrix whose rows all contain a 1."""
    rows = [r for r in itertools.product((0, 1), repeat=n) if any(r)]
    for combo in itertools.product(rows, repeat=n):
        yield ss.AdjacencyMatrix(tuple(combo))


# ----- independent oracles -----


def brute_force_words(A: ss.AdjacencyMatrix, k: int) -> list[tuple[int, ...]]:
    """All admissible length-k words by filtering the full product."""
    out = []
    for w in itertools.product(range(1, A.n + 1), repeat=k):
        if all(A.rows[a - 1][b - 1] for a, b in zip(w, w[1:])):
            out.append(w)
    return out


def matrix_power_word_count(A: ss.AdjacencyMatrix, k: int) -> int:
    """Sum of the entries of A^(k-1) with plain integer arithmetic."""
    n = A.n
    power = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    for _ in range(k - 1):
        power = [
            [sum(power[r][m] * A.rows[m][c] for m in range(n)) for c in range(n)]
            for r in range(n)
        ]
    return sum(sum(row) for row in power)


def brute_force_transitive(A: ss.AdjacencyMatrix) -> bool:
    """Try every candidate word up to the pigeonhole length for each pair."""
    n = A.n

    def connected(i, j):
        for length in range(2, n + 2):
            for w in itertools.product(range(1, n + 1), repeat=length):
                if w[0] != i or w[-1] != j:
                    continue
                if all(A.rows[a - 1][b - 1] for a, b in zip(w, w[1:])):
                    return True
        return False

    return all(connected(i, j) for i in range(1, n + 1) for j in range(1, n + 1))


def brute_force_preimage_count(A: ss.AdjacencyMatrix, s: int) -> int:
    """Number of one-step preimages of a point starting with s: count the
    admissible two-symbol words ending in s."""
    return sum(1 for w in brute_force_words(A, 2) if w[1] == s)
