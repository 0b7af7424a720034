"""Command-line entry point.

Exit status: 0 for an affirmative answer, 1 for a definite negative one
(languages differ, not isomorphic, not synchronizing), 2 for usage or
input errors.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from dataclasses import dataclass

from .construction import construct_sc, family_A, family_B
from .core import (AutomatonError, Dfa, ResourceLimitError, are_isomorphic, format_table, parse,
                   to_document, to_dot)
from .ideal import minimal_ideal_dfa
from .search import DEFAULT_MAX_STATES, SearchLimitError, reset_complexity
from .subsets import (DEFAULT_SUBSET_LIMIT, SubsetDfa, languages_equal, pair_automaton,
                      power_automaton, shortest_sync_word, syn_acceptor)
from .syntactic import (DEFAULT_CLOSURE_LIMIT, inner_factor_count, inner_factors, sigma_report,
                        staircase_sigma_formula, staircase_word, syntactic_complexity)

FORMATS = ("table", "json", "dot")
SUBSET_LIMIT_ENV = "SYNCIDEAL_SUBSET_LIMIT"
CLOSURE_LIMIT_ENV = "SYNCIDEAL_CLOSURE_LIMIT"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    subset_limit: int = DEFAULT_SUBSET_LIMIT
    closure_limit: int = DEFAULT_CLOSURE_LIMIT
    output_format: str = "table"
    jobs: int = 1

    def __post_init__(self):
        if self.subset_limit < 1 or self.closure_limit < 1:
            raise UsageError("limits must be positive")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")
        if self.output_format not in FORMATS:
            raise UsageError(f"unknown format {self.output_format!r}")


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _env_limit(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        v = int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None
    if v < 1:
        raise UsageError(f"{name} must be positive, got {v}")
    return v


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=FORMATS, default=None, dest="output_format")
    p.add_argument("--json", action="store_const", const="json", dest="output_format",
                   help="shorthand for --format json")
    p.add_argument("--subset-limit", type=_positive_int, default=None)
    p.add_argument("--closure-limit", type=_positive_int, default=None)
    p.add_argument("--jobs", type=_positive_int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="syncideal",
        description="Synchronizing automata for principal ideal languages.")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        _add_common(p)
        return p

    cmd("min-dfa", "minimal DFA of the ideal generated by WORD").add_argument("word")
    p = cmd("construct", "strongly connected synchronizing DFA for WORD")
    p.add_argument("word")
    p.add_argument("--trace", action="store_true")
    p = cmd("verify", "check that an automaton's synchronizing words are exactly those containing WORD")
    p.add_argument("word")
    p.add_argument("--automaton", metavar="FILE")
    cmd("sigma", "syntactic complexity report").add_argument("word")
    cmd("inner-factors", "count distinct inner factors").add_argument("word")
    cmd("shortest-sync", "shortest reset word of an automaton").add_argument("file")
    cmd("power", "power automaton of an automaton").add_argument("file")
    cmd("pairs", "pair automaton of an automaton").add_argument("file")
    p = cmd("family", "the two explicit presenter families")
    p.add_argument("which", choices=("A", "B"))
    p.add_argument("--n", type=int, required=True)
    p = cmd("staircase", "staircase word and its syntactic complexity")
    p.add_argument("--k", type=int, required=True)
    p = cmd("rc", "exhaustive reset-complexity search")
    p.add_argument("word")
    p.add_argument("--max-states", type=_positive_int, required=True)
    p.add_argument("--strongly-connected", action="store_true")
    p.add_argument("--force", action="store_true",
                   help=f"allow more than {DEFAULT_MAX_STATES} states (k**(2k) candidates)")
    p = cmd("isomorphic", "test two automata for isomorphism")
    p.add_argument("file1")
    p.add_argument("file2")
    return parser


def _read_automaton(path: str) -> Dfa:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def _emit_dfa(d: Dfa, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(to_document(d))
    if fmt == "dot":
        return to_dot(d).rstrip("\n")
    return format_table(d)


def _emit_subsets(sd: SubsetDfa, fmt: str) -> str:
    d = Dfa(sd.delta, sd.initial,
            frozenset() if sd.sink is None else frozenset({sd.sink}))
    labels = sd.labels()
    if fmt == "json":
        doc = to_document(d)
        doc["subsets"] = [None if s is None else sorted(s) for s in sd.subsets]
        return json.dumps(doc)
    if fmt == "dot":
        return to_dot(d, labels).rstrip("\n")
    return format_table(d, labels)


def _dispatch(args, cfg: CliConfig) -> tuple[int, str]:
    fmt = cfg.output_format
    c = args.command
    if c == "min-dfa":
        return 0, _emit_dfa(minimal_ideal_dfa(args.word), fmt)
    if c == "construct":
        if args.trace and fmt == "dot":
            raise UsageError("--trace cannot be combined with --format dot")
        d, trace = construct_sc(args.word)
        if not args.trace:
            return 0, _emit_dfa(d, fmt)
        if fmt == "json":
            return 0, json.dumps({"automaton": to_document(d), "trace": trace.to_list()})
        return 0, _emit_dfa(d, fmt) + "\n\n" + trace.format()
    if c == "verify":
        if args.automaton:
            d = _read_automaton(args.automaton)
        else:
            d, _ = construct_sc(args.word)
        result = languages_equal(syn_acceptor(d, cfg.subset_limit), minimal_ideal_dfa(args.word))
        if fmt == "json":
            out = json.dumps({"word": args.word, "equal": result.equal,
                              "counterexample": result.counterexample})
        else:
            out = "EQUAL" if result.equal else f"DIFFERENT {result.counterexample or 'ε'}"
        return (0 if result.equal else 1), out
    if c == "sigma":
        r = sigma_report(args.word, cfg.closure_limit)
        if fmt == "json":
            return 0, json.dumps(r.to_dict())
        rows = [(k, v) for k, v in r.to_dict().items()]
        return 0, "\n".join(f"{k:<16}{'-' if v is None else v}" for k, v in rows)
    if c == "inner-factors":
        n = inner_factor_count(args.word)
        if fmt == "json":
            return 0, json.dumps({"word": args.word, "inner_factors": n,
                                  "factors": sorted(inner_factors(args.word), key=lambda s: (len(s), s))})
        return 0, str(n)
    if c == "shortest-sync":
        word = shortest_sync_word(_read_automaton(args.file), cfg.subset_limit)
        if fmt == "json":
            return (0 if word is not None else 1), json.dumps({"word": word})
        if word is None:
            return 1, "NOT SYNCHRONIZING"
        return 0, word or "ε"
    if c == "power":
        return 0, _emit_subsets(power_automaton(_read_automaton(args.file), cfg.subset_limit), fmt)
    if c == "pairs":
        return 0, _emit_subsets(pair_automaton(_read_automaton(args.file)), fmt)
    if c == "family":
        d = family_A(args.n) if args.which == "A" else family_B(args.n)
        return 0, _emit_dfa(d, fmt)
    if c == "staircase":
        w = staircase_word(args.k)
        info = {
            "k": args.k,
            "word": w,
            "n": len(w),
            "inner_factors": inner_factor_count(w),
            "sigma_formula": staircase_sigma_formula(args.k),
            "sigma_computed": syntactic_complexity(w, cfg.closure_limit),
        }
        if fmt == "json":
            return 0, json.dumps(info)
        return 0, "\n".join(f"{k:<16}{v}" for k, v in info.items())
    if c == "rc":
        r = reset_complexity(args.word, args.max_states, args.strongly_connected, cfg.jobs,
                             max_states=args.max_states if args.force else DEFAULT_MAX_STATES,
                              subset_limit=cfg.subset_limit)
        if fmt == "json":
            return (0 if r.rc_established else 1), json.dumps(r.to_dict())
        lines = [
            f"word                 {r.word}",
            f"max states           {r.max_states}",
            f"strongly connected   {'yes' if r.strongly_connected_only else 'no'}",
            f"candidates examined  {r.candidates_examined}",
            f"rc established       {r.rc_established if r.rc_established is not None else '-'}",
            f"presenters           {len(r.presenters)}",
        ]
        for i, d in enumerate(r.presenters):
            lines += ["", f"presenter {i}", format_table(d)]
        return (0 if r.rc_established else 1), "\n".join(lines)
    if c == "isomorphic":
        phi = are_isomorphic(_read_automaton(args.file1), _read_automaton(args.file2))
        if fmt == "json":
            return (0 if phi else 1), json.dumps({"isomorphic": phi is not None,
                                                 "bijection": None if phi is None else list(phi)})
        if phi is None:
            return 1, "NOT ISOMORPHIC"
        return 0, "ISOMORPHIC " + " ".join(f"{q}->{r}" for q, r in enumerate(phi))
    raise UsageError(f"unknown command {c!r}")  # pragma: no cover


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        cfg = CliConfig(
            subset_limit=args.subset_limit or _env_limit(SUBSET_LIMIT_ENV, DEFAULT_SUBSET_LIMIT),
            closure_limit=args.closure_limit or _env_limit(CLOSURE_LIMIT_ENV, DEFAULT_CLOSURE_LIMIT),
            output_format=args.output_format or "table",
            jobs=args.jobs,
        )
        if cfg.output_format == "dot" and args.command not in (
                "min-dfa", "construct", "family", "power", "pairs"):
            raise UsageError(f"--format dot is not available for {args.command}")
        status, text = _dispatch(args, cfg)
    except (UsageError, AutomatonError, ResourceLimitError, SearchLimitError) as exc:
        print(f"syncideal: error: {exc}", file=stderr)
        return 2
    print(text, file=stdout)
    return status


def main():  # pragma: no cover
    sys.exit(run())
