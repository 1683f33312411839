"""Reduction of a general congruence to normal form and back.

A general instance is partitioned by coefficient residue; the normal
form over J = {r > 0 : some a_i = r mod m} is solved once, and its
solutions are lifted by distributing each y_r over the indices of the
class I_r in every possible way.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CongruenceInstance, DomainError, binomial
from .enumeration import EnumerationResult


@dataclass(frozen=True)
class ReductionPlan:
    modulus: int
    class_sizes: tuple   # n_r for r = 0..m-1
    index_classes: tuple  # I_r as tuples of 0-based original indices
    support: tuple        # J = sorted {r > 0 : n_r > 0}


def build_plan(inst: CongruenceInstance) -> ReductionPlan:
    m = inst.modulus
    classes = [[] for _ in range(m)]
    for i, a in enumerate(inst.coefficients):
        classes[a].append(i)
    sizes = tuple(len(c) for c in classes)
    support = tuple(r for r in range(1, m) if sizes[r])
    return ReductionPlan(m, sizes, tuple(tuple(c) for c in classes), support)


def _compositions(total, parts):
    """Ordered splittings of `total` into `parts` parts, colexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for last in range(total + 1):
        for rest in _compositions(total - last, parts - 1):
            yield rest + (last,)


def _check_pair(plan, normal_solutions):
    if normal_solutions is None:
        if plan.support:
            raise DomainError("normal-form solutions required for non-empty J")
        return
    if normal_solutions.modulus != plan.modulus:
        raise DomainError("modulus mismatch between plan and normal solutions")
    if tuple(normal_solutions.letters) != plan.support:
        raise DomainError("support mismatch between plan and normal solutions")


def lift_solutions(plan: ReductionPlan, normal_solutions: EnumerationResult = None):
    """All indecomposable solutions of the general instance, in
    lexicographic order.  Returns an iterator (the set can be large)."""
    _check_pair(plan, normal_solutions)
    n = sum(plan.class_sizes)
    out = []
    for i in plan.index_classes[0]:
        x = [0] * n
        x[i] = 1
        out.append(tuple(x))
    if normal_solutions is not None:
        for y in normal_solutions.solutions:
            out.extend(_splits(plan, y))
    out.sort()
    return iter(out)


def _splits(plan, y):
    """Distribute a normal-form solution y (indexed by J) over the
    original indices, one output per choice of ordered compositions."""
    n = sum(plan.class_sizes)
    slots = [plan.index_classes[r] for r in plan.support]

    def rec(pos, x):
        if pos == len(plan.support):
            yield tuple(x)
            return
        idxs = slots[pos]
        for comp in _compositions(y[pos], len(idxs)):
            for i, v in zip(idxs, comp):
                x[i] = v
            yield from rec(pos + 1, x)
        for i in idxs:
            x[i] = 0

    yield from rec(0, [0] * n)


def count_general(plan: ReductionPlan, normal_solutions: EnumerationResult = None):
    """N_m(a) = n_0 + sum over y of prod_r C(n_r + y_r - 1, y_r), exact."""
    _check_pair(plan, normal_solutions)
    total = plan.class_sizes[0]
    if normal_solutions is not None:
        for y in normal_solutions.solutions:
            prod = 1
            for r, yr in zip(plan.support, y):
                prod *= binomial(plan.class_sizes[r] + yr - 1, yr)
            total += prod
    return total


def general_support_bounds_check(coords, inst: CongruenceInstance):
    """Width/total-size bounds for a solution of the general congruence:
    the width counts distinct coefficient residues of the support."""
    if inst.modulus < 4:
        raise DomainError("bounds require m >= 4")
    if len(coords) != inst.dimension:
        raise DomainError("dimension mismatch")
    m = inst.modulus
    if sum(a * c for a, c in zip(inst.coefficients, coords)) % m != 0:
        raise DomainError("vector is not a solution of the instance")
    residues = {a for a, c in zip(inst.coefficients, coords) if c}
    sigma = len(residues)
    length = sum(coords)
    return 2 * sigma <= m and length + sigma <= m + 1
