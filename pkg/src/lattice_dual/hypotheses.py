"""JSM learning: training contexts, (k-weak) hypotheses and their minimal sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .context import FormalContext
from .poset import minimal_members


@dataclass(frozen=True)
class TrainingContext:
    """Positive and negative contexts over one shared attribute list."""

    positive: FormalContext
    negative: FormalContext

    def __post_init__(self):
        if self.positive.attributes != self.negative.attributes:
            raise ValueError(
                "positive and negative contexts must share the same attribute list"
            )
        overlap = set(self.positive.objects) & set(self.negative.objects)
        if overlap:
            raise ValueError(f"object names shared between sides: {sorted(overlap)}")

    @property
    def attributes(self) -> tuple:
        return self.positive.attributes

    def swapped(self) -> "TrainingContext":
        """Negative-hypothesis view: the two contexts exchanged."""
        return TrainingContext(self.negative, self.positive)


def _negative_cover_count(t: TrainingContext, h: frozenset) -> int:
    return sum(1 for g in t.negative.objects if h <= t.negative.row(g))


def is_hypothesis(t: TrainingContext, h: Iterable[str], k: int = 0) -> bool:
    """Closed in the positive context and contained in at most k negative
    object intents."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    h = frozenset(h)
    if not t.positive.is_closed(h):
        return False
    return _negative_cover_count(t, h) <= k


def enumerate_hypotheses(t: TrainingContext, k: int = 0) -> list:
    """All k-weak positive hypotheses, each exactly once (lectic order).

    Enumerates the positive intents and filters by negative cover count;
    the count is anti-monotone in the intent, so no branch of the closure
    enumeration can be cut without risking losing hypotheses.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return [h for h in t.positive.intents() if _negative_cover_count(t, h) <= k]


def minimal_hypotheses(t: TrainingContext, k: int = 0, method: str = "oracle") -> list:
    """Subset-minimal k-weak hypotheses; {M} when no hypothesis exists.

    method="oracle" minimizes the full hypothesis enumeration;
    method="iterate" drives find_new_min_h (k=0 only). Both agree.
    """
    if method == "oracle":
        hyps = enumerate_hypotheses(t, k)
        if not hyps:
            return [frozenset(t.attributes)]
        return minimal_members(hyps)
    if method == "iterate":
        if k != 0:
            raise ValueError("iterate method supports k=0 only")
        found: list = []
        while decide_amh(t, found):
            found.append(find_new_min_h(t, found))
        return sorted(found, key=lambda s: (len(s), sorted(s)))
    raise ValueError(f"unknown method: {method!r}")


def _genuine_minimal(t: TrainingContext) -> list:
    """Subset-minimal hypotheses without the {M} convention (may be empty)."""
    return minimal_members(enumerate_hypotheses(t, 0))


def decide_amh(t: TrainingContext, known: Iterable[frozenset]) -> bool:
    """Is there a minimal hypothesis outside the given set?

    Backed by exhaustive closed-set search (the problem is NP-complete in
    general); every member of `known` must itself be a minimal hypothesis.
    The {M} convention applies: a context with no hypotheses has minimal
    set {M}.
    """
    known = [frozenset(h) for h in known]
    complete = set(minimal_hypotheses(t, 0, method="oracle"))
    for h in known:
        if h not in complete:
            raise ValueError(f"{sorted(h)} is not a minimal hypothesis")
    return bool(complete - set(known))


def _project(t: TrainingContext, gplus: frozenset) -> TrainingContext:
    """The training context restricted to intents under one positive object.

    Object intents are deduplicated: the projected object sets are defined
    as sets of intents.
    """
    attrs = [m for m in t.attributes if m in gplus]
    pos_intents = []
    for h in t.positive.objects:
        it = gplus & t.positive.row(h)
        if it not in pos_intents:
            pos_intents.append(it)
    neg_intents = []
    for h in t.negative.objects:
        it = gplus & t.negative.row(h)
        if it not in neg_intents:
            neg_intents.append(it)
    pos = FormalContext.from_intents(
        [f"p{i}" for i in range(len(pos_intents))], attrs, pos_intents
    )
    neg = FormalContext.from_intents(
        [f"n{i}" for i in range(len(neg_intents))], attrs, neg_intents
    )
    return TrainingContext(pos, neg)


def _find_genuine(t: TrainingContext, known: list) -> frozenset:
    """Recursive search for a genuine additional minimal hypothesis.

    Projections equal to M are skipped: any additional minimal hypothesis
    other than M is closed with a nonempty extent, hence lies inside some
    non-full object intent, and recursing on a full row would reproduce
    the same instance.  If no projection admits one, the sought hypothesis
    is M itself.
    """
    full = frozenset(t.attributes)
    for g in t.positive.objects:
        gplus = t.positive.row(g)
        if gplus == full:
            continue
        sub = _project(t, gplus)
        sub_known = [h for h in known if h <= gplus]
        if set(_genuine_minimal(sub)) - set(sub_known):
            return _find_genuine(sub, sub_known)
    return full


def find_new_min_h(t: TrainingContext, known: Iterable[frozenset]) -> frozenset:
    """Return a minimal hypothesis outside `known`.

    Recurses over positive objects, projecting the training context onto
    each object intent and keeping only the known hypotheses that fit
    inside it; when no projection admits an additional hypothesis the
    answer is the full attribute set M.  The recursion works with genuine
    hypotheses only: the {M} convention must not leak into projected
    subcontexts, where a conventional answer would not lift back.
    """
    known = [frozenset(h) for h in known]
    if not decide_amh(t, known):
        raise ValueError("precondition violated: no additional minimal hypothesis")
    return _find_genuine(t, known)


def classify(intent: Iterable[str], pos: Iterable[frozenset], neg: Iterable[frozenset]) -> str:
    """Classify an object intent against minimal hypothesis sets."""
    intent = frozenset(intent)
    has_pos = any(frozenset(h) <= intent for h in pos)
    has_neg = any(frozenset(h) <= intent for h in neg)
    if has_pos and has_neg:
        return "contradictory"
    if has_pos:
        return "positive"
    if has_neg:
        return "negative"
    return "undetermined"


# -- on-disk form ------------------------------------------------------


def training_from_json(doc: dict) -> TrainingContext:
    """JSON form: {"attributes": [...], "positive": {name: "X.X"}, "negative": {...}}."""
    try:
        attributes = list(doc["attributes"])
        pos_rows = doc["positive"]
        neg_rows = doc["negative"]
    except (KeyError, TypeError):
        raise ValueError(
            'training JSON must have "attributes", "positive" and "negative"'
        ) from None

    def build(rows: dict) -> FormalContext:
        objects = list(rows)
        matrix = []
        for g in objects:
            row = rows[g]
            if len(row) != len(attributes) or any(ch not in "X." for ch in row):
                raise ValueError(f"malformed incidence row for {g!r}: {row!r}")
            matrix.append([ch == "X" for ch in row])
        return FormalContext(objects, attributes, matrix)

    return TrainingContext(build(pos_rows), build(neg_rows))


def training_to_json(t: TrainingContext) -> dict:
    def rows(ctx: FormalContext) -> dict:
        return {
            g: "".join("X" if m in ctx.row(g) else "." for m in ctx.attributes)
            for g in ctx.objects
        }

    return {
        "attributes": list(t.attributes),
        "positive": rows(t.positive),
        "negative": rows(t.negative),
    }
