"""Enumeration of indecomposable solutions of the standard congruence.

The engine is a depth-first search over multisets of coefficients taken
in non-decreasing order.  Each node keeps a width-m bitmask A of the
residues attainable as non-empty sub-multiset sums; adding an element
of value t maps A to A | rot(A, t) | {t}.  A node with 0 in A is
terminal: the multiset is emitted iff its total weight is 0 mod m and
no proper non-empty sub-multiset sums to 0 (checked by re-running the
closure with one element removed).  A node with 0 not in A is extended.

The naive simplex scan is kept as a fully independent oracle.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .core import BudgetExceeded, DomainError, NormalForm, check_vector

ENGINE_FINGERPRINT = "closure-dfs/1"

DEFAULT_POINT_BUDGET = 50_000_000


@dataclass(frozen=True)
class EnumerationResult:
    modulus: int
    support: tuple | None  # J for a normal form, None for the standard alphabet
    solutions: tuple       # lexicographically sorted coordinate tuples

    @property
    def count(self):
        return len(self.solutions)

    @property
    def letters(self):
        """Coefficient value attached to each coordinate position."""
        if self.support is not None:
            return self.support
        return tuple(range(1, self.modulus))


def _closure_mask(letters, counts, m, skip=-1):
    """Bitmask of non-empty sub-multiset sums mod m; one copy of
    letters[skip] is left out when skip >= 0."""
    full = (1 << m) - 1
    mask = 0
    for j, c in enumerate(counts):
        if j == skip:
            c -= 1
        t = letters[j]
        for _ in range(c):
            mask |= ((mask << t) & full) | (mask >> (m - t)) | (1 << t)
    return mask


def _branch(letters, m, first, prune):
    """All indecomposable solutions whose smallest element is letters[first]."""
    k = len(letters)
    full = (1 << m) - 1
    max_width = m // 2 if (prune and m >= 4) else None
    counts = [0] * k
    out = []

    def visit(pos, mask, length, width, weight):
        # mask has bit 0 clear here, so the node is extended
        if length >= m:
            return
        for j in range(pos, k):
            t = letters[j]
            nwid = width + (0 if counts[j] else 1)
            if max_width is not None:
                if nwid > max_width or length + 1 + nwid > m + 1:
                    continue
            nmask = mask | ((mask << t) & full) | (mask >> (m - t)) | (1 << t)
            counts[j] += 1
            if nmask & 1:
                if (weight + t) % m == 0 and all(
                    not _closure_mask(letters, counts, m, skip=i) & 1
                    for i in range(k)
                    if counts[i]
                ):
                    out.append(tuple(counts))
            else:
                visit(j, nmask, length + 1, nwid, (weight + t) % m)
            counts[j] -= 1

    t = letters[first]
    if t % m == 0:
        raise DomainError("letters must be non-zero mod m")
    # a single element is never a solution (0 < t < m), so always extend
    counts[first] = 1
    visit(first, 1 << t, 1, 1, t % m)
    counts[first] = 0
    return out


def _enumerate_letters(m, letters, prune=True, threads=1):
    letters = tuple(letters)
    if threads is None or threads < 1:
        threads = 1
    if threads == 1:
        sols = []
        for first in range(len(letters)):
            sols.extend(_branch(letters, m, first, prune))
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = pool.map(
                lambda first: _branch(letters, m, first, prune),
                range(len(letters)),
            )
            sols = [x for chunk in chunks for x in chunk]
    return tuple(sorted(sols))


def enumerate_standard(m, prune=True, threads=1):
    """All indecomposable solutions of x1 + 2*x2 + ... + (m-1)*x_{m-1} = 0 mod m."""
    if m < 2:
        raise DomainError("modulus must be >= 2")
    sols = _enumerate_letters(m, range(1, m), prune=prune, threads=threads)
    return EnumerationResult(m, None, sols)


def enumerate_normal_form(nf: NormalForm, prune=True, threads=1):
    """Indecomposable solutions of the congruence restricted to the set J."""
    sols = _enumerate_letters(nf.modulus, nf.support, prune=prune, threads=threads)
    return EnumerationResult(nf.modulus, nf.support, sols)


def solve_n1(a, m):
    """The unique indecomposable solution of a*x = 0 mod m."""
    if m < 2:
        raise DomainError("modulus must be >= 2")
    if a <= 0:
        raise DomainError("coefficient must be >= 1")
    return m // math.gcd(a, m)


def is_indecomposable(coords, m, support=None):
    """True iff coords is a minimal non-zero solution.

    `support` gives the coefficient attached to each position; defaults
    to 1..m-1 (the standard congruence).
    """
    coords = check_vector(coords)
    if not any(coords):
        raise DomainError("the zero vector is not a candidate")
    letters = tuple(support) if support is not None else tuple(range(1, m))
    if len(letters) != len(coords):
        raise DomainError("dimension mismatch between coords and support")
    if sum(t * c for t, c in zip(letters, coords)) % m != 0:
        return False
    for i, c in enumerate(coords):
        if c and _closure_mask(letters, coords, m, skip=i) & 1:
            return False
    return True


def _simplex_points(k, total):
    """Number of x in N^k with x1 + ... + xk <= total."""
    return math.comb(total + k, k)


def _iter_simplex(k, total):
    """All vectors in N^k with coordinate sum <= total, lexicographic order."""
    coords = [0] * k

    def rec(pos, left):
        if pos == k:
            yield tuple(coords)
            return
        for v in range(left + 1):
            coords[pos] = v
            yield from rec(pos + 1, left - v)
        coords[pos] = 0

    yield from rec(0, total)


def naive_minimal_solutions(m, weights, max_points=DEFAULT_POINT_BUDGET):
    """Three-step oracle: scan the simplex |x|_1 <= m, keep solutions,
    drop the non-minimal ones.  Independent of the DFS engine."""
    if m < 2:
        raise DomainError("modulus must be >= 2")
    weights = tuple(w % m for w in weights)
    k = len(weights)
    points = _simplex_points(k, m)
    if points > max_points:
        raise BudgetExceeded(
            f"simplex scan needs {points} points, budget is {max_points}",
            required=points,
        )
    solutions = []
    for x in _iter_simplex(k, m):
        if any(x) and sum(w * c for w, c in zip(weights, x)) % m == 0:
            solutions.append(x)
    solution_set = set(solutions)
    minimal = []
    for x in solutions:
        if not _dominates_some(x, solution_set):
            minimal.append(x)
    return tuple(minimal)


def _dominates_some(x, solution_set):
    """True iff some solution y with 0 < y < x exists in solution_set."""
    ranges = [range(c + 1) for c in x]
    coords = [0] * len(x)

    def rec(pos):
        if pos == len(x):
            y = tuple(coords)
            return any(coords) and y != x and y in solution_set
        for v in ranges[pos]:
            coords[pos] = v
            if rec(pos + 1):
                return True
        coords[pos] = 0
        return False

    return rec(0)


def enumerate_naive(m, J=None, max_points=DEFAULT_POINT_BUDGET):
    """Oracle counterpart of enumerate_standard / enumerate_normal_form."""
    if m < 2:
        raise DomainError("modulus must be >= 2")
    if J is not None:
        nf = NormalForm(m, tuple(sorted(J)))
        letters = nf.support
    else:
        letters = tuple(range(1, m))
    sols = naive_minimal_solutions(m, letters, max_points=max_points)
    return EnumerationResult(m, letters if J is not None else None, tuple(sorted(sols)))
