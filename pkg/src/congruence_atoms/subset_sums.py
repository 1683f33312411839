"""Subset-sum diversity of index sets mod m.

A set T in {1..m-1} is admissible when no non-empty subset sums to
0 mod m; its diversity is the number of residue classes attained by
subset sums (empty set included).  Two independent implementations are
kept on purpose: a 2^r subset scan and the incremental residue closure
shared with the enumeration engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import BudgetExceeded, DomainError

SUBSET_SCAN_MAX_SIZE = 25
DEFAULT_SCAN_BUDGET = 5_000_000


@dataclass(frozen=True)
class IndexSet:
    modulus: int
    elements: tuple

    def __post_init__(self):
        if self.modulus < 2:
            raise DomainError("modulus must be >= 2")
        elems = tuple(self.elements)
        if any(e <= 0 or e >= self.modulus for e in elems):
            raise DomainError("elements must lie in (0, m)")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise DomainError("elements must be strictly increasing")
        object.__setattr__(self, "elements", elems)

    @property
    def size(self):
        return len(self.elements)


@dataclass(frozen=True)
class DiversityReport:
    index_set: IndexSet
    admissible: bool
    diversity: int
    classes: tuple          # sorted attained residues, 0 always present
    witness: tuple = None   # lexicographically first zero-sum subset


def diversity(T: IndexSet) -> DiversityReport:
    """Full 2^r subset scan."""
    if T.size > SUBSET_SCAN_MAX_SIZE:
        raise BudgetExceeded(
            f"subset scan limited to {SUBSET_SCAN_MAX_SIZE} elements",
            required=2**T.size,
        )
    m = T.modulus
    classes = {0}
    witness = None
    for r in range(1, T.size + 1):
        for subset in combinations(T.elements, r):
            s = sum(subset) % m
            classes.add(s)
            if s == 0 and witness is None:
                witness = subset
    return DiversityReport(
        index_set=T,
        admissible=witness is None,
        diversity=len(classes),
        classes=tuple(sorted(classes)),
        witness=witness,
    )


def diversity_closure(T: IndexSet):
    """(admissible, diversity) via the incremental residue closure;
    independent of the subset scan above."""
    m = T.modulus
    full = (1 << m) - 1
    mask = 0
    for t in T.elements:
        mask |= ((mask << t) & full) | (mask >> (m - t)) | (1 << t)
    admissible = not mask & 1
    return admissible, (mask | 1).bit_count()


def family_Tma(m, a) -> IndexSet:
    """The exceptional 3-element family {a, m/2, m/2 + a} (even m)."""
    if m < 6 or m % 2 != 0:
        raise DomainError("family requires even m >= 6")
    if not 1 <= a < m // 2:
        raise DomainError("need 1 <= a < m/2")
    if 4 * a == m:
        raise DomainError("a = m/4 is excluded")
    T = IndexSet(m, (a, m // 2, m // 2 + a))
    report = diversity(T)
    assert report.admissible and report.diversity == 6, (m, a, report)
    return T


def is_family_member(T: IndexSet):
    """True iff T equals family_Tma(m, a) for some valid a."""
    if T.size != 3 or T.modulus % 2 != 0:
        return False
    m = T.modulus
    a, mid, top = T.elements
    return mid == m // 2 and top == mid + a and 4 * a != m


@dataclass(frozen=True)
class ScanSummary:
    modulus: int
    set_size: int
    admissible_count: int
    diversity_counts: dict     # diversity value -> number of admissible sets
    min_diversity: int         # None when no admissible set exists
    minimizers: tuple          # element tuples attaining the minimum
    ok: bool


def _scan_admissible(m, r):
    """Yield (elements, diversity) over all admissible r-subsets of {1..m-1}."""
    for subset in combinations(range(1, m), r):
        report = diversity(IndexSet(m, subset))
        if report.admissible:
            yield subset, report.diversity


def verify_r3(m):
    """Diversity of admissible 3-sets: >= 7 for odd m; for even m >= 6,
    and exactly the T(m, a) family attains 6."""
    if m < 6:
        raise DomainError("verify_r3 needs m >= 6")
    counts = {}
    sixes = []
    total = 0
    min_d = None
    mins = []
    for subset, d in _scan_admissible(m, 3):
        total += 1
        counts[d] = counts.get(d, 0) + 1
        if d == 6:
            sixes.append(subset)
        if min_d is None or d < min_d:
            min_d, mins = d, [subset]
        elif d == min_d:
            mins.append(subset)
    floor = 7 if m % 2 else 6
    ok = all(d >= floor for d in counts)
    if m % 2 == 0:
        ok = ok and all(is_family_member(IndexSet(m, s)) for s in sixes)
    return ScanSummary(m, 3, total, counts, min_d, tuple(mins), ok)


def verify_r4(m):
    """Diversity of admissible 4-sets is >= 9; also settles empirically
    whether m = 8 admits any admissible 4-set at all."""
    if m < 8:
        raise DomainError("verify_r4 needs m >= 8")
    counts = {}
    total = 0
    mins = []
    min_d = None
    for subset, d in _scan_admissible(m, 4):
        total += 1
        counts[d] = counts.get(d, 0) + 1
        if min_d is None or d < min_d:
            min_d, mins = d, [subset]
        elif d == min_d:
            mins.append(subset)
    ok = min_d is None or min_d >= 9
    return ScanSummary(m, 4, total, counts, min_d, tuple(mins), ok)


def verify_general(r, m, budget=DEFAULT_SCAN_BUDGET):
    """Exhaustive check that every admissible r-set has diversity >= 2r+1."""
    if r < 4:
        raise DomainError("verify_general needs r >= 4")
    if m < 2 * r + 1:
        raise DomainError("verify_general needs m >= 2r+1")
    from math import comb

    cost = comb(m - 1, r) * 2**r
    if cost > budget:
        raise BudgetExceeded(
            f"scan needs {cost} subset evaluations, budget is {budget}",
            required=cost,
        )
    counts = {}
    total = 0
    min_d = None
    mins = []
    for subset, d in _scan_admissible(m, r):
        total += 1
        counts[d] = counts.get(d, 0) + 1
        if min_d is None or d < min_d:
            min_d, mins = d, [subset]
        elif d == min_d:
            mins.append(subset)
    ok = min_d is None or min_d >= 2 * r + 1
    return ScanSummary(m, r, total, counts, min_d, tuple(mins), ok)


def lemma_expls_checks(m, max_size=5):
    """Elementary diversity facts, checked over every subset of size
    <= max_size: bounds on the diversity of admissible sets, size
    <= m/2, distinct nested subset sums, and heredity of inadmissibility."""
    if m > 16:
        raise DomainError("exhaustive regime is m <= 16")
    checked = 0
    for r in range(0, max_size + 1):
        for subset in combinations(range(1, m), r):
            report = diversity(IndexSet(m, subset))
            checked += 1
            if not report.admissible:
                continue
            assert r + 1 <= report.diversity <= min(2**r, m), (m, subset)
            assert 2 * r <= m, (m, subset)
            if r == 2:
                assert report.diversity == 4, (m, subset)
            # nested subsets S < U of an admissible set have distinct sums
            for ru in range(1, r + 1):
                for U in combinations(subset, ru):
                    for rs in range(ru):
                        for S in combinations(U, rs):
                            assert (sum(U) - sum(S)) % m != 0, (m, U, S)
            # heredity (contrapositive): an admissible set has only
            # admissible subsets
            for rs in range(1, r):
                for S in combinations(subset, rs):
                    assert diversity(IndexSet(m, S)).admissible, (m, subset, S)
    return checked
