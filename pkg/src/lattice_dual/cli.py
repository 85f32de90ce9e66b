"""Command-line entry point.

One binary, verb-subverb structure.  stdout carries exactly one JSON
document; diagnostics go to stderr.  Exit codes: 0 answer produced,
1 decision answered "no" under --strict-exit, 2 input error, 3 guard
exceeded.  The LATTICE_DUAL_GUARD environment variable overrides the
enumeration guards.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import context as ctx_mod
from . import duality as dual_mod
from . import hypotheses as hypo_mod
from . import implications as imp_mod
from . import poset as poset_mod
from . import reductions as red_mod
from .util import GuardExceeded, canon


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_json(path: str):
    return json.loads(_read(path))


def _parse_set(raw: str) -> list:
    if raw is None or raw == "":
        return []
    return [part.strip() for part in raw.split(",")]


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc) + "\n")


def _load_context(path: str) -> ctx_mod.FormalContext:
    return ctx_mod.parse_cxt(_read(path))


def _load_training(args) -> hypo_mod.TrainingContext:
    if getattr(args, "train", None):
        return hypo_mod.training_from_json(_read_json(args.train))
    if not (args.pos and args.neg):
        raise ValueError("provide either --train or both --pos and --neg")
    return hypo_mod.TrainingContext(_load_context(args.pos), _load_context(args.neg))


def _sorted_family(family, universe) -> list:
    index = {name: i for i, name in enumerate(universe)}
    members = [canon(universe, s) for s in family]
    members.sort(key=lambda xs: (len(xs), [index[x] for x in xs]))
    return members


# -- verb handlers -----------------------------------------------------


def _run_ctx(args) -> int:
    ctx = _load_context(args.context)
    if args.subverb == "concepts":
        _emit(
            [
                {"extent": canon(ctx.objects, c.extent), "intent": canon(ctx.attributes, c.intent)}
                for c in ctx.concepts()
            ]
        )
    elif args.subverb == "reduce":
        _emit({"cxt": ctx_mod.write_cxt(ctx_mod.reduce_context(ctx))})
    elif args.subverb == "close":
        closed = ctx.close_attributes(_parse_set(args.set))
        _emit(canon(ctx.attributes, closed))
    return 0


def _run_hypo(args) -> int:
    training = _load_training(args)
    universe = training.attributes
    if args.subverb == "minimal":
        _emit(_sorted_family(hypo_mod.minimal_hypotheses(training, args.k), universe))
    elif args.subverb == "all":
        _emit(_sorted_family(hypo_mod.enumerate_hypotheses(training, args.k), universe))
    elif args.subverb == "classify":
        if args.intent is None:
            raise ValueError("classify needs --intent")
        pos = hypo_mod.minimal_hypotheses(training, args.k)
        neg = hypo_mod.minimal_hypotheses(training.swapped(), args.k)
        _emit({"classification": hypo_mod.classify(_parse_set(args.intent), pos, neg)})
    elif args.subverb == "amh":
        if not args.hyps:
            raise ValueError("amh needs --hyps")
        known = [frozenset(h) for h in _read_json(args.hyps)]
        answer = hypo_mod.decide_amh(training, known)
        _emit({"additional": answer})
        if args.strict_exit and not answer:
            return 1
    return 0


def _run_dual(args) -> int:
    poset = poset_mod.poset_from_json(_read_json(args.poset))
    fam_a = poset_mod.family_from_json(_read_json(args.a), poset)
    if args.subverb == "dualize":
        dual = dual_mod.dualize_brute(fam_a, poset)
        _emit(_sorted_family(dual, poset.elements))
        return 0
    if not args.b:
        raise ValueError(f"{args.subverb} needs --b")
    fam_b = poset_mod.family_from_json(_read_json(args.b), poset)
    inst = dual_mod.DualityInstance(poset, fam_a, fam_b)
    if not dual_mod.check_star(inst):
        raise ValueError("property (*) violated")
    if args.subverb == "brute" or args.oracle:
        verdict = dual_mod.brute_force_dual(inst)
        witness = None if verdict.witness is None else canon(poset.elements, verdict.witness)
        _emit({"dual": verdict.dual, "witness": witness, "recursive_calls": 0})
        answer = verdict.dual
    else:
        answer, calls = dual_mod.test_duality_stats(inst)
        _emit({"dual": answer, "witness": None, "recursive_calls": calls})
    if args.strict_exit and not answer:
        return 1
    return 0


def _run_reduce(args) -> int:
    if args.subverb == "sat2amh":
        if not args.cnf:
            raise ValueError("sat2amh needs --cnf")
        cnf = red_mod.parse_dimacs(_read(args.cnf))
        training, known = red_mod.sat_to_amh(cnf)
        doc = {
            "training": hypo_mod.training_to_json(training),
            "minimal_hypotheses": _sorted_family(known, training.attributes),
        }
        _emit(doc)
    elif args.subverb == "dci2mibr":
        if not (args.context and args.a and args.b and args.base):
            raise ValueError("dci2mibr needs --context, --a, --b and --base")
        ctx = _load_context(args.context)
        fam_a = [frozenset(s) for s in _read_json(args.a)]
        fam_b = [frozenset(s) for s in _read_json(args.b)]
        base = imp_mod.implications_from_json(_read_json(args.base))
        built, extended = imp_mod.dci_to_mibr(ctx, fam_a, fam_b, base)
        _emit(
            {
                "context_cxt": ctx_mod.write_cxt(built),
                "implications": imp_mod.implications_to_json(extended, ctx.attributes),
            }
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattice-dual",
        description="Dualization on lattices given by formal contexts.",
    )
    parser.add_argument(
        "--strict-exit",
        action="store_true",
        help="exit 1 when a decision verb answers no/false",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    p_ctx = verbs.add_parser("ctx", help="formal context operations")
    p_ctx.add_argument("subverb", choices=["concepts", "reduce", "close"])
    p_ctx.add_argument("--context", required=True, help=".cxt file")
    p_ctx.add_argument("--set", default=None, help="comma-separated attribute names")

    p_hypo = verbs.add_parser("hypo", help="hypothesis operations")
    p_hypo.add_argument("subverb", choices=["minimal", "all", "classify", "amh"])
    p_hypo.add_argument("--pos", help="positive context .cxt file")
    p_hypo.add_argument("--neg", help="negative context .cxt file")
    p_hypo.add_argument("--train", help="training context JSON file")
    p_hypo.add_argument("--k", type=int, default=0, help="weakness parameter")
    p_hypo.add_argument("--intent", default=None, help="comma-separated attributes")
    p_hypo.add_argument("--hyps", help="JSON file with known minimal hypotheses")

    p_dual = verbs.add_parser("dual", help="duality operations")
    p_dual.add_argument("subverb", choices=["test", "brute", "dualize"])
    p_dual.add_argument("--poset", required=True, help="poset JSON file")
    p_dual.add_argument("--a", required=True, help="antichain family JSON file")
    p_dual.add_argument("--b", help="antichain family JSON file")
    p_dual.add_argument("--oracle", action="store_true", help="force the brute oracle")

    p_red = verbs.add_parser("reduce", help="constructive reductions")
    p_red.add_argument("subverb", choices=["sat2amh", "dci2mibr"])
    p_red.add_argument("--cnf", help="DIMACS CNF file")
    p_red.add_argument("--context", help=".cxt file")
    p_red.add_argument("--a", help="antichain family JSON file (intents)")
    p_red.add_argument("--b", help="antichain family JSON file (intents)")
    p_red.add_argument("--base", help="implication set JSON file")

    return parser


_HANDLERS = {
    "ctx": _run_ctx,
    "hypo": _run_hypo,
    "dual": _run_dual,
    "reduce": _run_reduce,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage, which matches the input-error code
        return 2 if exc.code else 0
    try:
        return _HANDLERS[args.verb](args)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
