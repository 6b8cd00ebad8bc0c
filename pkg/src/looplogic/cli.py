"""Command-line entry point.

Exit status: 0 when the command succeeded (or the verdict is true / SAT),
1 when a check came out false or a theory is unsatisfiable, 2 when the
command could not be carried out. Budget exhaustion also exits with 2 but is
reported with status ``budget`` rather than ``error``.

``--json`` replaces the text report by a single JSON record on stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .errors import LoopLogicError, ParseError, ResourceError
from .evaluator import Evaluator, check_with_stats
from .metrics import classify, rank, size, validate
from .parser import format_formula, format_node, format_term, parse_formula, parse_term
from .sat import sat_check
from .structures import EMPTY, dump_structure, load_structure
from .syntax import ListLit, Nil, conj
from .unfold import Unfolder
from .values import format_value

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"looplogic: {name} must be an integer, got {raw!r}") from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return v


def _read(path: str) -> str:
    p = Path(path)
    if not p.is_file():
        raise LoopLogicError(f"no such file: {path}")
    return p.read_text()


def _budgets(args) -> dict:
    return {"max_steps": args.max_steps, "max_instances": args.max_instances,
            "max_unfold_size": args.max_unfold_size}


def _load_structure(path):
    return EMPTY if path is None else load_structure(_read(path))


# -- commands ----------------------------------------------------------------

def cmd_parse(args):
    text = _read(args.file)
    node = None
    if args.kind in ("auto", "formula"):
        try:
            node, kind = parse_formula(text), "formula"
        except ParseError:
            if args.kind == "formula":
                raise
    if node is None:
        node, kind = parse_term(text), "term"
    c = classify(node)
    diags = [str(d) for d in validate(node)] if kind == "formula" else []
    rec = {"kind": kind, "canonical": format_node(node), "rank": rank(node), "size": size(node),
           "flat": c.is_flat, "explicit": c.is_explicit, "diagnostics": diags}
    lines = [rec["canonical"],
             f"kind: {kind}  rank: {rec['rank']}  size: {rec['size']}  "
             f"flat: {str(c.is_flat).lower()}  explicit: {str(c.is_explicit).lower()}"]
    lines += [f"warning: {d}" for d in diags]
    return EXIT_OK, rec, "\n".join(lines)


def cmd_eval(args):
    t = parse_term(_read(args.term))
    ev = Evaluator(_load_structure(args.structure), max_steps=args.max_steps)
    v = ev.term(t, {})
    rec = {"value": format_value(v), "counters": ev.stats.as_dict()}
    return EXIT_OK, rec, rec["value"]


def cmd_check(args):
    f = parse_formula(_read(args.formula))
    ok, counters = check_with_stats(f, _load_structure(args.structure), max_steps=args.max_steps,
                                    short_circuit=args.short_circuit)
    rec = {"verdict": ok, "counters": counters.as_dict()}
    text = "true" if ok else "false"
    text += "\n" + "  ".join(f"{k}: {v}" for k, v in counters.as_dict().items())
    return (EXIT_OK if ok else EXIT_FALSE), rec, text


def cmd_unfold(args):
    u = Unfolder(allow_nested=args.allow_nested, max_size=args.max_unfold_size,
                 max_steps=args.max_steps)
    if args.term:
        node = parse_term(_read(args.term))
        out = u.term(node)
        shown = format_term(out)
    else:
        node = parse_formula(_read(args.formula))
        out = u.formula(node)
        shown = format_formula(out)
    rec = {"output": shown, "input_size": size(node), "output_size": size(out),
           "input_rank": rank(node)}
    text = (f"{shown}\ninput size: {rec['input_size']}  output size: {rec['output_size']}  "
            f"input rank: {rec['input_rank']}")
    return EXIT_OK, rec, text


def cmd_sat(args):
    f = parse_formula(_read(args.formula))
    r = sat_check(f, max_instances=args.max_instances, max_steps=args.max_steps)
    g = r.grounding
    rec = {"verdict": "SAT" if r.satisfiable else "UNSAT", "atoms": len(g.atoms),
           "instances": g.instances, "bindings": g.bindings}
    if not r.satisfiable:
        return EXIT_FALSE, rec, "UNSAT"
    witness = dump_structure(r.witness)
    if args.witness:
        Path(args.witness).write_text(witness + "\n")
        rec["witness_file"] = args.witness
        text = f"SAT\nwitness written to {args.witness}"
    else:
        text = "SAT\n" + witness
    rec["witness"] = json.loads(witness)
    return EXIT_OK, rec, text


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text + "\n")


def cmd_gen_explist(args):
    from .benchlab import explist_info, explist_term
    t = explist_term(args.k, args.n, args.flavor)
    text = format_term(t)
    _emit(args, text)
    rec = {"term": text, "size": size(t), **explist_info(args.k, args.n, args.flavor)}
    return EXIT_OK, rec, text


def cmd_gen_regex(args):
    from .benchlab import parse_regex, regex_ineq_formula
    f = regex_ineq_formula(parse_regex(args.e1), parse_regex(args.e2))
    text = format_formula(f)
    _emit(args, text)
    return EXIT_OK, {"formula": text, "size": size(f)}, text


def cmd_gen_domino(args):
    from .benchlab import domino_theory, load_domino
    d = load_domino(_read(args.system))
    axioms = domino_theory(d, ListLit((Nil(),) * args.side))
    text = format_formula(conj(axioms))
    _emit(args, text)
    rec = {"formula": text, "axioms": len(axioms), "system": d.to_dict(), "side": args.side}
    return EXIT_OK, rec, text


def cmd_oracle_regex(args):
    from .benchlab import oracle_lang, parse_regex
    words = sorted("".join(w) if all(len(a) == 1 for a in w) else " ".join(w)
                   for w in oracle_lang(parse_regex(args.expr), max_words=args.max_words))
    rec = {"words": words, "count": len(words)}
    return EXIT_OK, rec, "\n".join(words)


def cmd_oracle_tiling(args):
    from .benchlab import load_domino, oracle_tiling
    d = load_domino(_read(args.system))
    t = oracle_tiling(d, args.side)
    if t is None:
        return EXIT_FALSE, {"tiling": None}, "no tiling"
    return EXIT_OK, {"tiling": [list(r) for r in t]}, "\n".join(" ".join(map(str, r)) for r in t)


# -- argument parsing ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    from .evaluator import DEFAULT_MAX_STEPS
    from .sat import DEFAULT_MAX_INSTANCES
    from .unfold import DEFAULT_MAX_SIZE

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON record")
    common.add_argument("--max-steps", type=_positive,
                        default=_env_int("LOOPLOGIC_MAX_STEPS", DEFAULT_MAX_STEPS),
                        help="evaluation step budget (env LOOPLOGIC_MAX_STEPS)")
    common.add_argument("--max-instances", type=_positive,
                        default=_env_int("LOOPLOGIC_MAX_INSTANCES", DEFAULT_MAX_INSTANCES),
                        help="quantifier expansion budget (env LOOPLOGIC_MAX_INSTANCES)")
    common.add_argument("--max-unfold-size", type=_positive,
                        default=_env_int("LOOPLOGIC_MAX_UNFOLD_SIZE", DEFAULT_MAX_SIZE),
                        help="unfolded term size budget (env LOOPLOGIC_MAX_UNFOLD_SIZE)")

    ap = argparse.ArgumentParser(prog="looplogic", parents=[common],
                                 description="Bounded list logic with loops: evaluate, check, "
                                             "unfold, decide and generate instances.")
    ap.add_argument("--version", action="version", version=f"looplogic {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="print canonical form and metrics")
    p.add_argument("file")
    p.add_argument("--kind", choices=("auto", "term", "formula"), default="auto")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("eval", parents=[common], help="evaluate a ground term")
    p.add_argument("--term", required=True)
    p.add_argument("--structure")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", parents=[common], help="model-check a closed formula")
    p.add_argument("--formula", required=True)
    p.add_argument("--structure", help="structure file (default: no predicates)")
    p.add_argument("--short-circuit", action="store_true",
                   help="stop quantifier and connective evaluation early")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("unfold", parents=[common], help="rewrite loops into plain terms")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--term")
    g.add_argument("--formula")
    p.add_argument("--allow-nested", action="store_true",
                   help="accept loops in step terms that become unfoldable after unrolling")
    p.set_defaults(func=cmd_unfold)

    p = sub.add_parser("sat", parents=[common], help="decide satisfiability by grounding")
    p.add_argument("--formula", required=True)
    p.add_argument("--witness", help="write the witness structure to this file")
    p.set_defaults(func=cmd_sat)

    gen = sub.add_parser("gen", help="generate benchmark instances")
    gsub = gen.add_subparsers(dest="generator", required=True)
    p = gsub.add_parser("explist", parents=[common], help="short term for a long list")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--flavor", choices=("rec", "iter_u", "iter_b"), default="rec")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_explist)
    p = gsub.add_parser("regex-ineq", parents=[common], help="language inequality formula")
    p.add_argument("--e1", required=True)
    p.add_argument("--e2", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_regex)
    p = gsub.add_parser("domino", parents=[common], help="tiling theory of a domino system")
    p.add_argument("--system", required=True)
    p.add_argument("--side", type=_positive, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_domino)

    orc = sub.add_parser("oracle", help="brute-force reference answers")
    osub = orc.add_subparsers(dest="oracle", required=True)
    p = osub.add_parser("regex-lang", parents=[common], help="enumerate a language")
    p.add_argument("expr")
    p.add_argument("--max-words", type=_positive, default=100_000)
    p.set_defaults(func=cmd_oracle_regex)
    p = osub.add_parser("tiling", parents=[common], help="search for a tiling")
    p.add_argument("--system", required=True)
    p.add_argument("--side", type=_positive, required=True)
    p.set_defaults(func=cmd_oracle_tiling)
    return ap


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    name = args.command + "".join(
        f" {getattr(args, a)}" for a in ("generator", "oracle") if getattr(args, a, None))
    base = {"command": name, "budgets": _budgets(args)}
    try:
        status, rec, text = args.func(args)
        base.update(status={EXIT_OK: "ok", EXIT_FALSE: "false"}[status], budget_hit=False, **rec)
    except ResourceError as exc:
        status, text = EXIT_ERROR, None
        base.update(status="budget", budget_hit=True, error=str(exc))
        print(f"looplogic: budget exhausted: {exc}", file=stderr)
    except (LoopLogicError, ValueError, OSError, RecursionError) as exc:
        status, text = EXIT_ERROR, None
        base.update(status="error", budget_hit=False, error=str(exc))
        print(f"looplogic: error: {exc}", file=stderr)
    if args.json:
        print(json.dumps(base, sort_keys=True), file=stdout)
    elif text is not None:
        print(text, file=stdout)
    return status


def main(argv=None) -> None:
    sys.exit(run(argv))
