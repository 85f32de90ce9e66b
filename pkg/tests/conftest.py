"""Shared fixtures and random-instance generators for the test suite.

The worked training context used throughout (three negative examples over
six attributes, six positive examples each missing one attribute) has
exactly eight minimal hypotheses; several tests pin them down explicitly.
"""

import itertools
import random

import pytest

from lattice_dual import (
    Cnf,
    DualityInstance,
    FormalContext,
    Poset,
    TrainingContext,
)

ATTRS6 = ["m1", "m2", "m3", "m4", "m5", "m6"]

NEGATIVE_ROWS = {
    "g1": {"m2", "m3", "m5", "m6"},
    "g2": {"m1", "m3", "m4", "m6"},
    "g3": {"m1", "m2", "m4", "m5"},
}

POSITIVE_ROWS = {f"g{i + 3}": set(ATTRS6) - {f"m{i}"} for i in range(1, 7)}

EIGHT_MINIMAL = [
    frozenset(s)
    for s in (
        {"m1", "m2", "m3"},
        {"m1", "m2", "m6"},
        {"m1", "m5", "m3"},
        {"m1", "m5", "m6"},
        {"m4", "m2", "m3"},
        {"m4", "m2", "m6"},
        {"m4", "m5", "m3"},
        {"m4", "m5", "m6"},
    )
]


def make_worked_training() -> TrainingContext:
    pos = FormalContext.from_intents(list(POSITIVE_ROWS), ATTRS6, POSITIVE_ROWS.values())
    neg = FormalContext.from_intents(list(NEGATIVE_ROWS), ATTRS6, NEGATIVE_ROWS.values())
    return TrainingContext(pos, neg)


@pytest.fixture(scope="session")
def worked_training() -> TrainingContext:
    return make_worked_training()


@pytest.fixture(scope="session")
def worked_positive(worked_training) -> FormalContext:
    return worked_training.positive


@pytest.fixture(scope="session")
def worked_negative(worked_training) -> FormalContext:
    return worked_training.negative


# -- random generators ---------------------------------------------------


def random_poset(rng: random.Random, max_n: int, min_n: int = 1) -> Poset:
    n = rng.randint(min_n, max_n)
    names = [f"p{i}" for i in range(1, n + 1)]
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.3:
                pairs.append((names[i], names[j]))
    return Poset.from_pairs(names, pairs)


def random_downset(rng: random.Random, poset: Poset) -> frozenset:
    seed = [p for p in poset.elements if rng.random() < 0.4]
    return poset.down_closure(seed)


def random_antichain(rng: random.Random, poset: Poset, max_size: int, side: str = "min"):
    from lattice_dual import maximal_members, minimal_members

    members = [random_downset(rng, poset) for _ in range(rng.randint(0, max_size))]
    picked = minimal_members(members) if side == "min" else maximal_members(members)
    return picked[:max_size]


def random_instance(rng: random.Random, max_n: int, max_family: int) -> DualityInstance:
    """A random instance satisfying property (*), not necessarily dual."""
    poset = random_poset(rng, max_n)
    fam_a = random_antichain(rng, poset, max_family, side="min")
    fam_b = [b for b in random_antichain(rng, poset, max_family, side="max")
             if not any(a <= b for a in fam_a)]
    return DualityInstance(poset, fam_a, fam_b)


def planted_instance(rng: random.Random, max_n: int, max_family: int) -> DualityInstance:
    """A dual instance: B is the exact dual of a random antichain A."""
    from lattice_dual import dualize_brute

    poset = random_poset(rng, max_n)
    fam_a = random_antichain(rng, poset, max_family, side="min")
    fam_b = dualize_brute(fam_a, poset)
    return DualityInstance(poset, fam_a, fam_b)


def random_context(rng: random.Random, max_objects: int, max_attrs: int,
                   prefix: str = "g", min_objects: int = 1) -> FormalContext:
    n_obj = rng.randint(min_objects, max_objects)
    n_att = rng.randint(1, max_attrs)
    objects = [f"{prefix}{i}" for i in range(1, n_obj + 1)]
    attrs = [f"m{i}" for i in range(1, n_att + 1)]
    intents = [{m for m in attrs if rng.random() < 0.5} for _ in objects]
    return FormalContext.from_intents(objects, attrs, intents)


def random_training(rng: random.Random, max_side: int = 5, max_attrs: int = 6) -> TrainingContext:
    pos = random_context(rng, max_side, max_attrs, prefix="p")
    attrs = list(pos.attributes)
    n_neg = rng.randint(0, max_side)
    neg_objects = [f"n{i}" for i in range(1, n_neg + 1)]
    neg_intents = [{m for m in attrs if rng.random() < 0.5} for _ in neg_objects]
    neg = FormalContext.from_intents(neg_objects, attrs, neg_intents)
    return TrainingContext(pos, neg)


def random_cnf(rng: random.Random, max_vars: int, max_clauses: int) -> Cnf:
    n = rng.randint(1, max_vars)
    k = rng.randint(1, max_clauses)
    clauses = []
    for _ in range(k):
        width = rng.randint(1, min(3, n))
        variables = rng.sample(range(1, n + 1), width)
        clauses.append([v if rng.random() < 0.5 else -v for v in variables])
    return Cnf(n, clauses)


def brute_sat(cnf: Cnf) -> bool:
    for bits in itertools.product([False, True], repeat=cnf.num_vars):
        assignment = {i + 1: bits[i] for i in range(cnf.num_vars)}
        if all(
            any(assignment[abs(lit)] == (lit > 0) for lit in clause)
            for clause in cnf.clauses
        ):
            return True
    return False


def genuine_minimal_hypotheses(t: TrainingContext, k: int = 0) -> list:
    """Subset-minimal hypotheses without the all-attributes convention."""
    from lattice_dual import enumerate_hypotheses, minimal_members

    return minimal_members(enumerate_hypotheses(t, k))
