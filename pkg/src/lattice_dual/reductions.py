"""Constructive reductions: SAT to additional-minimal-hypothesis instances,
minimal-1-values of a monotone function to training contexts and back, and
the product-of-lattices context."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .context import FormalContext
from .hypotheses import TrainingContext, is_hypothesis
from .poset import Poset, is_antichain, maximal_members


# -- CNF and DIMACS ----------------------------------------------------


@dataclass(frozen=True)
class Cnf:
    """Clauses as lists of nonzero signed variable indices."""

    num_vars: int
    clauses: tuple = field(default=())

    def __init__(self, num_vars: int, clauses: Iterable[Iterable[int]]):
        clauses = tuple(tuple(c) for c in clauses)
        if num_vars < 0:
            raise ValueError("variable count must be nonnegative")
        for clause in clauses:
            for lit in clause:
                if lit == 0 or abs(lit) > num_vars:
                    raise ValueError(f"literal {lit} out of range for n={num_vars}")
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "clauses", clauses)


def parse_dimacs(text: str) -> Cnf:
    """DIMACS CNF: 'p cnf n k' header, clauses terminated by 0."""
    num_vars = None
    declared = None
    clauses = []
    current: list = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"malformed DIMACS header: {line!r}")
            num_vars, declared = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise ValueError("DIMACS clause before 'p cnf' header")
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if current:
        raise ValueError("DIMACS file ends inside an unterminated clause")
    if num_vars is None:
        raise ValueError("missing 'p cnf' header")
    if declared is not None and declared != len(clauses):
        raise ValueError(
            f"DIMACS header declares {declared} clauses, found {len(clauses)}"
        )
    return Cnf(num_vars, clauses)


def write_dimacs(cnf: Cnf) -> str:
    lines = [f"p cnf {cnf.num_vars} {len(cnf.clauses)}"]
    for clause in cnf.clauses:
        lines.append(" ".join(str(l) for l in clause) + " 0")
    return "\n".join(lines) + "\n"


# -- SAT -> AMH ---------------------------------------------------------


def _lit_name(lit: int) -> str:
    return f"x{lit}" if lit > 0 else f"!x{-lit}"


def literal_attributes(n: int) -> list:
    out = []
    for i in range(1, n + 1):
        out.append(f"x{i}")
        out.append(f"!x{i}")
    return out


def sat_to_amh(cnf: Cnf):
    """Build the training context whose additional minimal hypotheses
    correspond to satisfying assignments.

    Attributes are one per clause plus one per literal.  Positive objects:
    one per literal (clause columns mark clauses NOT containing the
    literal; the literal block is a contranominal scale) and one per
    clause (carrying only its own clause column).  Negative objects: one
    per variable, holding every literal column except the variable's own
    pair.  Returns the context together with the clause singletons, each
    validated to be a minimal hypothesis.
    """
    n, k = cnf.num_vars, len(cnf.clauses)
    if n < 1 or k < 1:
        raise ValueError("degenerate CNF: need at least one variable and one clause")
    clause_attrs = [f"C{j}" for j in range(1, k + 1)]
    lit_attrs = literal_attributes(n)
    attributes = clause_attrs + lit_attrs
    clause_sets = [frozenset(map(_lit_name, clause)) for clause in cnf.clauses]

    pos_objects = [f"g_{name}" for name in lit_attrs] + [f"g_C{j}" for j in range(1, k + 1)]
    pos_intents = []
    for name in lit_attrs:
        marks = {f"C{j + 1}" for j, cs in enumerate(clause_sets) if name not in cs}
        marks |= set(lit_attrs) - {name}
        pos_intents.append(marks)
    for j in range(1, k + 1):
        pos_intents.append({f"C{j}"})

    neg_objects = [f"g_l{i}" for i in range(1, n + 1)]
    neg_intents = [
        set(lit_attrs) - {f"x{i}", f"!x{i}"} for i in range(1, n + 1)
    ]

    training = TrainingContext(
        FormalContext.from_intents(pos_objects, attributes, pos_intents),
        FormalContext.from_intents(neg_objects, attributes, neg_intents),
    )
    known = [frozenset({c}) for c in clause_attrs]
    for h in known:
        if not is_hypothesis(training, h, 0) or is_hypothesis(training, frozenset(), 0):
            raise RuntimeError("construction failed to make clause singletons minimal")
    return training, known


def assignment_from_hypothesis(h: Iterable[str], n: int) -> dict:
    """Truth assignment read off the complement of h in the literal
    attributes: variable i is true iff x_i is in the complement (ties with
    both literals present resolve to true)."""
    h = frozenset(h)
    lits = set(literal_attributes(n))
    if not h <= lits:
        raise ValueError("hypothesis contains non-literal attributes")
    comp = lits - h
    out = {}
    for i in range(1, n + 1):
        pos, neg = f"x{i}", f"!x{i}"
        if pos not in comp and neg not in comp:
            raise ValueError(f"assignment undefined: variable {i} missing from complement")
        out[i] = pos in comp
    return out


def hypothesis_from_assignment(assignment: dict) -> frozenset:
    """Complement of the assignment's literal set within the 2n literals."""
    n = len(assignment)
    if set(assignment) != set(range(1, n + 1)):
        raise ValueError("assignment must be total on variables 1..n")
    return frozenset(
        f"!x{i}" if assignment[i] else f"x{i}" for i in range(1, n + 1)
    )


# -- minimal 1-values <-> training contexts (monotone functions on a
#    concept lattice; 1-values are the concepts whose intent lies inside
#    some minimal-1-value intent) -----------------------------------------


def minvals_to_training(ctx: FormalContext, minvals) -> TrainingContext:
    """Positive context = ctx; one negative object per minimal-1-value
    intent, carrying that intent as its row.  Minimal hypotheses of the
    result are the maximal-0-value intents."""
    minvals = [frozenset(s) for s in minvals]
    for s in minvals:
        if not ctx.is_closed(s):
            raise ValueError(f"{sorted(s)} is not a concept intent")
    if not is_antichain(minvals):
        raise ValueError("minimal 1-values must be pairwise incomparable")
    neg = FormalContext.from_intents(
        [f"neg{i}" for i in range(len(minvals))], ctx.attributes, minvals
    )
    return TrainingContext(ctx, neg)


def training_to_monotone(t: TrainingContext):
    """Stack both contexts and read the minimal 1-values off the negative
    object intents (object rows are closed in the stacked context).

    Nested negative intents are normalized to an antichain; a member
    contained in another marks a superset of the 1-values the larger one
    already marks, so subset-maximal members are kept.
    """
    objects = list(t.positive.objects) + list(t.negative.objects)
    intents = [t.positive.row(g) for g in t.positive.objects] + [
        t.negative.row(g) for g in t.negative.objects
    ]
    stacked = FormalContext.from_intents(objects, t.attributes, intents)
    minvals = maximal_members(t.negative.row(g) for g in t.negative.objects)
    return stacked, minvals


# -- explicit lattices and their product --------------------------------


class ExplicitLattice:
    """A finite lattice given by its full order relation.

    Construction computes the meet and join of every pair and fails,
    naming the offending pair, when either is missing or ambiguous.
    """

    def __init__(self, elements, leq):
        self.poset = Poset(elements, leq)
        self.elements = self.poset.elements
        n = len(self.elements)
        self._meet = [[None] * n for _ in range(n)]
        self._join = [[None] * n for _ in range(n)]
        down = self.poset._down
        up = self.poset._up
        for i in range(n):
            for j in range(n):
                lower = down[i] & down[j]
                upper = up[i] & up[j]
                self._meet[i][j] = self._unique_extreme(lower, down, i, j, "meet")
                self._join[i][j] = self._unique_extreme(upper, up, i, j, "join")

    def _unique_extreme(self, mask: int, closures, i: int, j: int, kind: str) -> int:
        best = [
            k
            for k in range(len(self.elements))
            if mask >> k & 1 and mask & ~closures[k] == 0
        ]
        if len(best) != 1:
            raise ValueError(
                f"not a lattice: no unique {kind} of "
                f"{self.elements[i]!r} and {self.elements[j]!r}"
            )
        return best[0]

    def meet(self, a: str, b: str) -> str:
        return self.elements[self._meet[self.poset._index(a)][self.poset._index(b)]]

    def join(self, a: str, b: str) -> str:
        return self.elements[self._join[self.poset._index(a)][self.poset._index(b)]]

    @classmethod
    def from_pairs(cls, names, pairs) -> "ExplicitLattice":
        p = Poset.from_pairs(names, pairs)
        return cls(p.elements, [[p.leq(a, b) for b in p.elements] for a in p.elements])


def irreducibles(lat: ExplicitLattice):
    """(join_irreducibles, meet_irreducibles): elements with exactly one
    lower (resp. upper) cover."""
    joins = frozenset(
        e for e in lat.elements if len(lat.poset.lower_covers(e)) == 1
    )
    meets = frozenset(
        e for e in lat.elements if len(lat.poset.upper_covers(e)) == 1
    )
    return joins, meets


def product_context(lattices) -> FormalContext:
    """Context of a product of lattices: per-factor irreducible contexts on
    the diagonal blocks, full incidence across factors."""
    lattices = list(lattices)
    blocks = []
    for idx, lat in enumerate(lattices):
        joins, meets = irreducibles(lat)
        gs = [e for e in lat.elements if e in joins]
        ms = [e for e in lat.elements if e in meets]
        blocks.append((idx, lat, gs, ms))
    objects = [f"L{idx}:{g}" for idx, _, gs, _ in blocks for g in gs]
    attributes = [f"L{idx}:{m}" for idx, _, _, ms in blocks for m in ms]
    matrix = []
    for gi, lat_g, gs, _ in blocks:
        for g in gs:
            row = []
            for mi, lat_m, _, ms in blocks:
                for m in ms:
                    row.append(gi != mi or lat_g.poset.leq(g, m))
            matrix.append(row)
    return FormalContext(objects, attributes, matrix)
