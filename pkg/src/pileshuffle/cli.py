"""Command-line interface: analyze, plan, simulate, and estimate.

Commands: ``stats`` (permutation statistics and minimal pile counts),
``sort`` (construct sorting plans, single- or multi-round), ``shuffle``
(apply a plan file to a deck), ``prob`` (sortability probability, exact,
normal approximation, and Monte Carlo).

Exit codes: 0 success/feasible, 1 infeasible, 2 usage or parse error,
3 search budget exceeded.  Decks are read in the sequence convention by
default; pass --embedding to read the position-of-each-label form.
Structured output is JSON; plans written by ``sort --format structured``
feed directly into ``shuffle --plan``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .engine import TypeSchedule, apply_shuffle, render_tableau
from .permutation import InvalidPermutationError, Permutation, parse_labels, readings
from .probability import sortable_probability_exact, sortable_probability_mc, \
    normal_approx_probability
from .rounds import BudgetExceeded, MultiRoundPlan, RoundTypes, apply_multiround, \
    dealer_search, minimal_multiround_sort, to_single_round
from .sorting import Infeasible, SortMode, SortPlan, dealer_choice_minimal_sort, \
    minimal_queue_sort, minimal_stack_sort, minimal_sort_on_types

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class CliConfig:
    """Shared run options (defaults: sequence convention, text output)."""

    embedding: bool = False
    fmt: str = "text"
    seed: int = 0
    search_budget: int | None = None
    verbose: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        return cls(
            embedding=getattr(args, "embedding", False),
            fmt=getattr(args, "format", "text"),
            seed=getattr(args, "seed", 0),
            search_budget=getattr(args, "search_budget", None),
            verbose=getattr(args, "verbose", False),
        )


def _load_permutation(args: argparse.Namespace, cfg: CliConfig) -> Permutation:
    text = args.perm
    if text is None or text == "-":
        text = sys.stdin.read()
    try:
        labels = parse_labels(text)
        if cfg.embedding:
            return Permutation.from_embedding(labels)
        return Permutation.from_sequence(labels)
    except (ValueError, InvalidPermutationError) as exc:
        raise CliError(f"bad permutation: {exc}") from exc


def _fmt_value(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return str(v)


def _emit(cfg: CliConfig, doc: dict, text_lines: list[str]) -> None:
    if cfg.fmt == "structured":
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(text_lines))


def _parse_capacities(text: str) -> tuple[int, ...]:
    try:
        caps = tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise CliError(f"bad --rounds value {text!r}; expected integers like 2,2") from None
    if not caps or any(m < 1 for m in caps):
        raise CliError("--rounds needs one capacity >= 1 per round")
    return caps


def _parse_round_types(text: str) -> RoundTypes:
    try:
        return RoundTypes.of(part for part in text.split(",") if part)
    except ValueError as exc:
        raise CliError(f"bad --types value {text!r}: {exc}") from None


def cmd_stats(args: argparse.Namespace, cfg: CliConfig) -> int:
    p = _load_permutation(args, cfg)
    doc = {
        "n": p.n,
        "descents": p.descents(),
        "ascents": p.ascents(),
        "ascending_runs": p.ascending_runs(),
        "descending_runs": p.descending_runs(),
        "readings": readings(p.deck()),
        "min_queues": p.ascending_runs(),
        "min_stacks": p.descending_runs(),
        "dealer_min": dealer_choice_minimal_sort(p).piles_used,
    }
    _emit(cfg, doc, [f"{k}: {_fmt_value(v)}" for k, v in doc.items()])
    return EXIT_OK


def _single_round_sort(p: Permutation, args: argparse.Namespace) -> SortPlan | Infeasible:
    mode = args.mode
    if mode == "types":
        if not args.types:
            raise CliError("--mode types needs --types")
        try:
            schedule = TypeSchedule.fixed(args.types)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        if args.budget is not None:
            raise CliError("--budget is implied by the schedule length in --mode types")
        return minimal_sort_on_types(p, schedule)
    plan = {
        "queues": minimal_queue_sort,
        "stacks": minimal_stack_sort,
        "dealer": dealer_choice_minimal_sort,
    }[mode](p)
    if args.budget is not None and plan.piles_used > args.budget:
        return Infeasible(position=None, required=plan.piles_used, budget=args.budget)
    return plan


def _multi_round_sort(
    p: Permutation, args: argparse.Namespace, cfg: CliConfig
) -> MultiRoundPlan | Infeasible:
    caps = _parse_capacities(args.rounds)
    if args.budget is not None:
        raise CliError("--budget applies to single-round sorts only")
    mode = args.mode
    if mode == "queues":
        rt = RoundTypes.all_queues(caps)
    elif mode == "stacks":
        rt = RoundTypes.all_stacks(caps)
    elif mode == "types":
        if not args.types:
            raise CliError("--mode types needs --types")
        rt = _parse_round_types(args.types)
        if rt.capacities != caps:
            raise CliError(f"--types capacities {rt.capacities} do not match --rounds {caps}")
    else:
        return dealer_search(p, caps, search_budget=cfg.search_budget)
    return minimal_multiround_sort(p, rt)


def _single_plan_doc(plan: SortPlan) -> dict:
    return {"feasible": True, **plan.to_dict()}


def _single_plan_text(plan: SortPlan) -> list[str]:
    return [
        "feasible: yes",
        f"piles_used: {plan.piles_used}",
        f"types: {plan.types.as_string()}",
        f"assignment: {_fmt_value(plan.assignment.piles)}",
    ]


def _multi_plan_doc(plan: MultiRoundPlan) -> dict:
    return {"feasible": True, **plan.to_dict()}


def _multi_plan_text(plan: MultiRoundPlan) -> list[str]:
    lines = [
        "feasible: yes",
        f"rounds: {plan.num_rounds}",
        f"capacities: {_fmt_value(plan.round_types.capacities)}",
    ]
    for t, (sched, digits) in enumerate(
            zip(plan.round_types.rounds, plan.assignments), start=1):
        lines.append(f"round {t} types: {sched.as_string()}")
        lines.append(f"round {t} assignment: {_fmt_value([v + 1 for v in digits])}")
    return lines


def _infeasible_doc(inf: Infeasible) -> dict:
    return {
        "feasible": False,
        "position": inf.position,
        "required": inf.required,
        "budget": inf.budget,
    }


def _multi_tableaus(plan: MultiRoundPlan, p: Permutation):
    cur = p
    out = []
    for sched, digits in zip(plan.round_types.rounds, plan.assignments):
        assignment = to_single_round(digits)
        out.append(render_tableau(cur, assignment, sched))
        cur = apply_shuffle(sched, assignment, cur)
    return out


def cmd_sort(args: argparse.Namespace, cfg: CliConfig) -> int:
    p = _load_permutation(args, cfg)
    multi = args.rounds is not None or (args.types and "," in args.types)
    if multi and args.rounds is None:
        rt = _parse_round_types(args.types)
        args.rounds = ",".join(str(m) for m in rt.capacities)
    result = _multi_round_sort(p, args, cfg) if multi else _single_round_sort(p, args)
    if isinstance(result, Infeasible):
        _emit(cfg, _infeasible_doc(result), ["feasible: no", result.describe()])
        return EXIT_INFEASIBLE
    if isinstance(result, MultiRoundPlan):
        doc, lines = _multi_plan_doc(result), _multi_plan_text(result)
        if args.tableau:
            tableaus = _multi_tableaus(result, p)
            doc["tableaus"] = [t.to_dict() for t in tableaus]
            for t, tab in enumerate(tableaus, start=1):
                lines += ["", f"round {t} tableau:", tab.render()]
    else:
        doc, lines = _single_plan_doc(result), _single_plan_text(result)
        if args.tableau:
            tab = render_tableau(p, result.assignment, result.types)
            doc["tableau"] = tab.to_dict()
            lines += ["", tab.render()]
    _emit(cfg, doc, lines)
    return EXIT_OK


def cmd_shuffle(args: argparse.Namespace, cfg: CliConfig) -> int:
    p = _load_permutation(args, cfg)
    try:
        with open(args.plan) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read plan {args.plan}: {exc}") from exc
    try:
        if "rounds" in doc:
            plan = MultiRoundPlan.from_dict(doc)
            tableaus = _multi_tableaus(plan, p) if args.tableau else []
            result = apply_multiround(plan, p)
        else:
            single = SortPlan.from_dict(doc)
            tableaus = [render_tableau(p, single.assignment, single.types)] if args.tableau else []
            result = apply_shuffle(single.types, single.assignment, p)
    except (ValueError, KeyError) as exc:
        raise CliError(f"plan does not fit the permutation: {exc}") from exc
    deck = result.deck()
    out_doc: dict = {"deck": list(deck)}
    lines = []
    if tableaus:
        out_doc["tableaus"] = [t.to_dict() for t in tableaus]
        for t, tab in enumerate(tableaus, start=1):
            lines += [f"round {t} tableau:", tab.render(), ""]
    lines.append(_fmt_value(deck))
    _emit(cfg, out_doc, lines)
    return EXIT_OK


def cmd_prob(args: argparse.Namespace, cfg: CliConfig) -> int:
    n, m = args.n, args.m
    if n < 1 or m < 1:
        raise CliError("--n and --m must be >= 1")
    mode = SortMode(args.mode)
    doc: dict = {"n": n, "m": m, "mode": mode.value}
    lines = [f"n: {n}", f"m: {m}", f"mode: {mode.value}"]
    if mode is not SortMode.DEALER:
        if n <= args.exact_limit:
            exact = sortable_probability_exact(n, m, mode)
            doc["exact"] = f"{exact.numerator}/{exact.denominator}"
            doc["float"] = float(exact)
            lines += [f"exact: {doc['exact']}", f"float: {_fmt_value(doc['float'])}"]
        elif args.mc_samples is None:
            raise CliError(
                f"n={n} exceeds the exact-computation limit {args.exact_limit}; "
                "pass --mc-samples for an estimate or raise --exact-limit")
        doc["normal_approx"] = normal_approx_probability(n, m)
        lines.append(f"normal_approx: {_fmt_value(doc['normal_approx'])}")
    elif args.mc_samples is None:
        raise CliError("dealer mode has no exact formula; pass --mc-samples")
    if args.mc_samples is not None:
        est = sortable_probability_mc(n, m, mode, args.mc_samples, cfg.seed)
        doc["mc"] = est.to_dict()
        lines += [
            f"mc_samples: {est.samples}",
            f"mc_estimate: {_fmt_value(est.estimate)}",
            f"mc_stderr: {_fmt_value(est.stderr)}",
            f"mc_seed: {est.seed}",
        ]
    _emit(cfg, doc, lines)
    return EXIT_OK


def _add_common(sub: argparse.ArgumentParser, perm: bool = True) -> None:
    if perm:
        sub.add_argument("perm", nargs="?", default=None,
                         help="permutation text; '-' or omitted reads stdin")
        sub.add_argument("--embedding", action="store_true",
                         help="input maps each label to its position instead of listing the deck")
    sub.add_argument("--format", choices=("text", "structured"), default="text")
    sub.add_argument("-v", "--verbose", action="store_true")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pileshuffle",
        description="Pile shuffle as a sorting device: analyze decks, build "
                    "minimal sorting shuffles, simulate plans, estimate sortability.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_stats = subs.add_parser("stats", help="permutation statistics and minimal pile counts")
    _add_common(p_stats)
    p_stats.set_defaults(handler=cmd_stats)

    p_sort = subs.add_parser("sort", help="construct a sorting plan")
    _add_common(p_sort)
    p_sort.add_argument("--mode", choices=("queues", "stacks", "dealer", "types"),
                        default="queues")
    p_sort.add_argument("--types", help="pile types, e.g. QSQ; comma-separated per round")
    p_sort.add_argument("--budget", type=int, help="pile budget for single-round sorts")
    p_sort.add_argument("--rounds", help="per-round capacities, e.g. 2,2")
    p_sort.add_argument("--search-budget", type=int, default=None,
                        help="max type schedules examined by the dealer search")
    p_sort.add_argument("--tableau", action="store_true")
    p_sort.set_defaults(handler=cmd_sort)

    p_shuffle = subs.add_parser("shuffle", help="apply a plan file to a deck")
    _add_common(p_shuffle)
    p_shuffle.add_argument("--plan", required=True, help="JSON plan file from 'sort'")
    p_shuffle.add_argument("--tableau", action="store_true")
    p_shuffle.set_defaults(handler=cmd_shuffle)

    p_prob = subs.add_parser("prob", help="sortability probability of a random deck")
    _add_common(p_prob, perm=False)
    p_prob.add_argument("--n", type=int, required=True)
    p_prob.add_argument("--m", type=int, required=True)
    p_prob.add_argument("--mode", choices=("queues", "stacks", "dealer"), default="queues")
    p_prob.add_argument("--mc-samples", type=int, default=None)
    p_prob.add_argument("--seed", type=int, default=0)
    p_prob.add_argument("--exact-limit", type=int, default=1000)
    p_prob.set_defaults(handler=cmd_prob)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = CliConfig.from_args(args)
    if cfg.verbose:
        from .kernels import BACKEND

        print(f"kernel backend: {BACKEND}", file=sys.stderr)
    try:
        return args.handler(args, cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
