"""Duality of antichains of downsets and the subexponential duality test."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .poset import Poset, freq, freq_complement, is_antichain, maximal_members, minimal_members

# Slack applied only on the early-reject side of the frequency thresholds:
# borderline values are treated as passing, so a false "not dual" is never
# produced by floating-point noise (the algorithm merely recurses more).
_THRESHOLD_SLACK = 1e-12


@dataclass(frozen=True)
class DualityInstance:
    """A poset together with two antichains of its downsets."""

    poset: Poset
    a: tuple
    b: tuple

    def __init__(self, poset: Poset, a, b):
        index = poset._idx
        key = lambda s: (len(s), sorted(index[e] for e in s))
        a = tuple(sorted(map(frozenset, a), key=key))
        b = tuple(sorted(map(frozenset, b), key=key))
        for fam, label in ((a, "A"), (b, "B")):
            for member in fam:
                if not poset.is_downset(member):
                    raise ValueError(f"{label}-member {sorted(member)} is not a downset")
            if not is_antichain(fam):
                raise ValueError(f"family {label} is not an antichain")
        object.__setattr__(self, "poset", poset)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


@dataclass(frozen=True)
class DualityVerdict:
    dual: bool
    witness: Optional[frozenset] = None


def check_star(inst: DualityInstance) -> bool:
    """Property (*): no A-member is contained in any B-member."""
    return not any(a <= b for a in inst.a for b in inst.b)


def easy_test(inst: DualityInstance) -> bool:
    """Degenerate duality test when one family is empty.

    Empty A is dual exactly to {P}; empty B exactly to {empty set}.
    """
    whole = frozenset(inst.poset.elements)
    if not inst.a:
        return inst.b == (whole,)
    if not inst.b:
        return inst.a == (frozenset(),)
    raise ValueError("easy_test requires an empty A or B family")


def brute_force_dual(inst: DualityInstance) -> DualityVerdict:
    """Oracle: check the covering condition over every downset of the poset.

    The witness (when not dual) is the first uncovered downset in
    all_downsets enumeration order.
    """
    if not check_star(inst):
        raise ValueError("property (*) violated")
    for x in inst.poset.all_downsets():
        if any(a <= x for a in inst.a):
            continue
        if any(x <= b for b in inst.b):
            continue
        return DualityVerdict(False, x)
    return DualityVerdict(True)


def dualize_brute(a_family, poset: Poset) -> list:
    """The dual antichain: maximal downsets containing no A-member (guarded)."""
    a_family = [frozenset(s) for s in a_family]
    free = [
        x for x in poset.all_downsets() if not any(a <= x for a in a_family)
    ]
    return maximal_members(free)


def decompose(inst: DualityInstance, p: str):
    """Split an instance at p into subproblems over P minus down(p) / up(p).

    Raw decomposition families are normalized back to antichains
    (minimal members on the A-side, maximal on the B-side).
    """
    poset = inst.poset
    dp = poset.down_set(p)
    up = poset.up_set(p)
    rest1 = set(poset.elements) - dp
    rest2 = set(poset.elements) - up
    a1 = minimal_members([a - dp for a in inst.a])
    b1 = maximal_members([b - dp for b in inst.b if p in b])
    a2 = [a for a in inst.a if p not in a]
    b2 = maximal_members([b - up for b in inst.b])
    sub1 = DualityInstance(poset.restrict(rest1), a1, b1)
    sub2 = DualityInstance(poset.restrict(rest2), a2, b2)
    return sub1, sub2


def _argmax(elements, score):
    """First element (declaration order) attaining the maximum score."""
    best = None
    best_score = None
    for e in elements:
        s = score(e)
        if best_score is None or s > best_score:
            best, best_score = e, s
    return best


def _test_duality(inst: DualityInstance, depth: int, stats: list) -> bool:
    stats[0] += 1
    if depth < 0:
        raise RuntimeError("duality recursion guard exceeded (normalization bug)")
    if not check_star(inst):
        raise RuntimeError("subproblem lost property (*) (normalization bug)")
    if not inst.a or not inst.b:
        return easy_test(inst)
    poset = inst.poset
    n = len(poset)
    m = poset.m_value()
    big_n = len(inst.a) + len(inst.b)
    if m**3 > n:
        p = _argmax(
            poset.elements,
            lambda e: len(poset.down_set(e)) + len(poset.up_set(e)),
        )
    else:
        log_n = math.log(big_n) / math.log(4 / 3)
        fa = {e: freq(inst.a, e) for e in poset.elements}
        fb = {e: freq_complement(inst.b, poset, e) for e in poset.elements}
        a_below = float(max(fa.values())) * m * log_n < 1 - _THRESHOLD_SLACK
        b_below = float(max(fb.values())) * m * m * log_n < 1 - _THRESHOLD_SLACK
        if a_below and b_below:
            return False
        p = _argmax(poset.elements, lambda e: max(fa[e], fb[e]))
    sub1, sub2 = decompose(inst, p)
    budget = len(poset) + big_n + 2
    return _test_duality(sub1, min(depth, budget) - 1, stats) and _test_duality(
        sub2, min(depth, budget) - 1, stats
    )


def test_duality(inst: DualityInstance) -> bool:
    """Frequency-based recursive duality test; agrees with brute_force_dual."""
    dual, _ = test_duality_stats(inst)
    return dual


def test_duality_stats(inst: DualityInstance):
    """As test_duality, but also reports the number of recursive calls."""
    if not check_star(inst):
        raise ValueError("property (*) violated")
    stats = [0]
    budget = len(inst.poset) + len(inst.a) + len(inst.b) + 2
    dual = _test_duality(inst, budget, stats)
    return dual, stats[0]
