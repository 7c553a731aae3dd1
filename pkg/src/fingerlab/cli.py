"""Batch command-line front end.

Every subcommand reads/writes the package's JSON file schemas, honors an
explicit --seed (default 0), and emits a machine-readable report with the
tool version and input content hashes.  With --report-dir set, delimited
output and a matplotlib figure are written alongside the stdout report.

Exit codes: 0 success, 1 domain error, 2 budget exhausted (partial result
emitted), 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .bounds import BoundsEngine
from .codes import (
    complement_pair_strategy,
    halving_construction,
    search_pair_capacity,
    smp_strategy_from_pair,
    strategy_from_cwc,
)
from .families import CoverParams, search_largest_cover_free
from .io import (
    canonical_json,
    content_hash,
    dump_json,
    family_from_payload,
    family_to_payload,
    frac_str,
    load_json,
    strategy_from_payload,
    strategy_to_payload,
)
from .strategies import binary_completion, error_report
from .quantum.etf import check_etf, etf_complement
from .quantum.mub import mub_states
from .quantum.packing import GrassmannConfig, grassmann_search
from .quantum.bounds import packing_bounds
from .quantum.smp import (
    etf_2m_strategy,
    etf_conjugate_strategy,
    smp_wce,
    sym_strategy,
)
from .quantum.states import StateSet, gram_matrix, max_pairwise_overlap

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


@dataclass
class RunConfig:
    seed: int = 0
    threads: int = 1
    fmt: str = "text"
    budget_seconds: float | None = None
    budget_nodes: int | None = None
    tol: float | None = None
    report_dir: Path | None = None
    inputs: dict = field(default_factory=dict)

    def record_input(self, path):
        if path:
            self.inputs[str(path)] = content_hash(path)


def _envelope(cfg: RunConfig, command: str, result: dict) -> dict:
    return {
        "tool": "fingerlab",
        "version": __version__,
        "command": command,
        "seed": cfg.seed,
        "inputs": cfg.inputs,
        "result": result,
    }


def _emit(cfg: RunConfig, command: str, result: dict, text_lines: list[str]):
    if cfg.fmt == "json":
        sys.stdout.write(canonical_json(_envelope(cfg, command, result)))
    elif cfg.fmt == "csv":
        for k, v in sorted(result.items()):
            print(f"{k},{v}")
    else:
        for line in text_lines:
            print(line)
    if cfg.report_dir is not None:
        cfg.report_dir.mkdir(parents=True, exist_ok=True)
        dump_json(cfg.report_dir / f"{command.replace(' ', '_')}.json",
                  _envelope(cfg, command, result))


def _load_states(path) -> StateSet:
    return StateSet.from_payload(load_json(path))


def _states_payload(states: StateSet) -> dict:
    return states.to_payload()


# -- command handlers -------------------------------------------------------


def cmd_eval(cfg, args):
    cfg.record_input(args.strategy)
    strat = strategy_from_payload(load_json(args.strategy))
    rep = error_report(strat)
    result = {
        "worst_case": frac_str(rep.worst_case),
        "average": frac_str(rep.average),
        "witness_pair": list(rep.witness_pair),
        "one_sided": rep.one_sided,
    }
    _emit(cfg, "eval", result, [
        f"worst_case {rep.worst_case}",
        f"average {rep.average}",
        f"witness {rep.witness_pair}",
        f"one_sided {rep.one_sided}",
    ])
    return EXIT_OK


def cmd_complete(cfg, args):
    cfg.record_input(args.strategy)
    payload = load_json(args.strategy)
    strat = strategy_from_payload(payload)
    completed = binary_completion(strat.p, strat.q)
    out_payload = strategy_to_payload(completed)
    if args.out:
        dump_json(args.out, out_payload)
    rep = error_report(completed)
    result = {"strategy": out_payload, "worst_case": frac_str(rep.worst_case),
              "one_sided": rep.one_sided}
    _emit(cfg, "complete", result,
          [f"binary completion written to {args.out or '(stdout only)'}",
           f"worst_case {rep.worst_case}"])
    return EXIT_OK


def cmd_search_cover_free(cfg, args):
    cp = CoverParams(args.k, args.j)
    res = search_largest_cover_free(
        args.m, cp, max_nodes=cfg.budget_nodes, max_seconds=cfg.budget_seconds)
    fam_payload = family_to_payload(res.family)
    result = {
        "m": args.m, "q": str(cp), "size": res.size, "exact": res.exact,
        "nodes": res.nodes, "family": fam_payload, "notes": res.notes,
    }
    if args.out:
        dump_json(args.out, result)
    if cfg.report_dir is not None:
        from .plotting import save_family_figure
        cfg.report_dir.mkdir(parents=True, exist_ok=True)
        save_family_figure(res.family, cfg.report_dir / "cover_free_family.png",
                           title=f"T({args.m},{cp}) candidate, size {res.size}")
    _emit(cfg, "search cover-free", result, [
        f"T({args.m},{cp}) {'=' if res.exact else '>='} {res.size}"
        f"  (nodes {res.nodes})",
    ])
    return EXIT_OK if res.exact else EXIT_BUDGET


def cmd_search_pair(cfg, args):
    res = search_pair_capacity(args.m, args.k1, args.k2, args.j,
                               max_nodes=cfg.budget_nodes,
                               max_seconds=cfg.budget_seconds, seed=cfg.seed)
    result = {
        "m": args.m, "k1": args.k1, "k2": args.k2, "j": args.j,
        "n": res.n, "exact": res.exact, "nodes": res.nodes, "notes": res.notes,
        "fp": family_to_payload(res.fp) if res.fp else None,
        "fq": family_to_payload(res.fq) if res.fq else None,
    }
    if args.out:
        dump_json(args.out, result)
    _emit(cfg, "search pair-capacity", result, [
        f"N2({args.m},{args.k1},{args.k2},{args.j}) "
        f"{'=' if res.exact else '>='} {res.n}  (nodes {res.nodes})",
    ])
    return EXIT_OK if res.exact else EXIT_BUDGET


def _emit_strategy(cfg, command, strat, extra=None, out=None):
    rep = error_report(strat)
    payload = strategy_to_payload(strat)
    if out:
        dump_json(out, payload)
    result = {"n": strat.n, "m_a": strat.m_a, "m_b": strat.m_b,
              "worst_case": frac_str(rep.worst_case),
              "average": frac_str(rep.average),
              "one_sided": rep.one_sided, "strategy": payload}
    if extra:
        result.update(extra)
    _emit(cfg, command, result, [
        f"strategy ({strat.n}, {strat.m_a}, {strat.m_b})",
        f"worst_case {rep.worst_case}  one_sided {rep.one_sided}"
        + (f"  -> {out}" if out else ""),
    ])
    return EXIT_OK


def cmd_construct(cfg, args):
    if args.kind == "cwc":
        cfg.record_input(args.family)
        fam = family_from_payload(load_json(args.family))
        strat = strategy_from_cwc(fam, args.k, args.j)
        return _emit_strategy(cfg, "construct cwc", strat, out=args.out)
    if args.kind == "complement":
        strat = complement_pair_strategy(args.m)
        return _emit_strategy(cfg, "construct complement", strat, out=args.out)
    if args.kind == "halving":
        cfg.record_input(args.base)
        base = strategy_from_payload(load_json(args.base))
        strat = halving_construction(base)
        return _emit_strategy(cfg, "construct halving", strat, out=args.out)
    if args.kind == "pair":
        cfg.record_input(args.fp)
        cfg.record_input(args.fq)
        fp = family_from_payload(load_json(args.fp))
        fq = family_from_payload(load_json(args.fq))
        strat, j = smp_strategy_from_pair(fp, fq, args.k1, args.k2)
        return _emit_strategy(cfg, "construct pair", strat,
                              extra={"j": j}, out=args.out)
    raise ValueError(f"unknown construction {args.kind!r}")


def cmd_bounds(cfg, args):
    eng = BoundsEngine(use_search=not args.no_search)
    fn = eng.one_way_interval if args.model == "one-way" else eng.smp_interval
    iv = fn(args.n, args.m)
    result = {
        "n": args.n, "m": args.m, "model": args.model,
        "lower": frac_str(iv.lower), "upper": frac_str(iv.upper),
        "interval": iv.cell_str(),
        "provenance": [{"side": p.side, "source": p.source, "detail": p.detail}
                       for p in iv.provenance],
    }
    _emit(cfg, f"bounds {args.model}", result,
          [f"{iv.lower} -- {iv.upper}"])
    return EXIT_OK


def cmd_tables(cfg, args):
    from .tables import regenerate_table

    table, diff = regenerate_table(args.table, use_search=not args.no_search)
    result = {"table": table.table_id, "diff": diff,
              "cells": len(table.cells), "golden": table.to_payload()}
    lines = [f"table {table.table_id}: {len(table.cells)} cells, "
             f"{len(diff)} differences vs bundled"]
    lines += ["  " + d for d in diff[:20]]
    report_dir, cfg.report_dir = cfg.report_dir, None
    if cfg.fmt == "csv":
        sys.stdout.write(table.to_csv())
        if diff:
            print(f"# {len(diff)} differences vs bundled")
    else:
        _emit(cfg, f"tables {table.table_id}", result, lines)
    if report_dir is not None:
        from .plotting import save_table_figure
        report_dir.mkdir(parents=True, exist_ok=True)
        stem = f"table_{table.table_id}"
        (report_dir / f"{stem}.csv").write_text(table.to_csv())
        dump_json(report_dir / f"{stem}.json",
                  _envelope(cfg, f"tables {table.table_id}", result))
        save_table_figure(table, report_dir / f"{stem}.png")
        (report_dir / f"{stem}.diff").write_text(
            "\n".join(diff) + ("\n" if diff else ""))
    return EXIT_OK if not diff else EXIT_DOMAIN


def cmd_quantum(cfg, args):
    sub = args.quantum_cmd
    if sub == "pack":
        config = GrassmannConfig(
            restarts=args.restarts, iterations=args.iterations, seed=cfg.seed)
        res = grassmann_search(args.n, args.m, config)
        bounds = packing_bounds(args.n, args.m)
        result = {
            "n": args.n, "m": args.m, "overlap": res.overlap,
            "argmax": list(res.argmax), "simplex_bound": bounds.simplex,
            "simplex_gap": res.simplex_gap,
            "fejes_toth_bound": bounds.fejes_toth,
            "states": _states_payload(res.states),
        }
        if cfg.report_dir is not None:
            from .plotting import save_gram_figure
            cfg.report_dir.mkdir(parents=True, exist_ok=True)
            dump_json(cfg.report_dir / "packing_states.json",
                      _states_payload(res.states))
            save_gram_figure(np.abs(gram_matrix(res.states)),
                             f"packing n={args.n} m={args.m} "
                             f"overlap {res.overlap:.6f}",
                             cfg.report_dir / "packing_gram.png",
                             bound=bounds.simplex)
        _emit(cfg, "quantum pack", result, [
            f"overlap {res.overlap:.9f} (simplex bound {bounds.simplex:.9f})"])
        return EXIT_OK
    if sub == "etf-check":
        cfg.record_input(args.states)
        states = _load_states(args.states)
        rep = check_etf(states, tol=cfg.tol or 1e-10)
        result = {"ok": rep.ok, "equiangular_ok": rep.equiangular_ok,
                  "tight_ok": rep.tight_ok, "target_overlap": rep.target_overlap,
                  "max_angle_deviation": rep.max_angle_deviation,
                  "max_frame_deviation": rep.max_frame_deviation}
        _emit(cfg, "quantum etf-check", result, [
            f"etf {rep.ok} (angles {rep.equiangular_ok}, frame {rep.tight_ok})"])
        return EXIT_OK if rep.ok else EXIT_DOMAIN
    if sub == "mub":
        states = mub_states(args.m)
        rep = max_pairwise_overlap(states)
        result = {"m": args.m, "count": states.count,
                  "max_overlap": rep.max_overlap,
                  "states": _states_payload(states)}
        if args.out:
            dump_json(args.out, _states_payload(states))
        _emit(cfg, "quantum mub", result, [
            f"{states.count} states, max overlap {rep.max_overlap:.12f}"])
        return EXIT_OK
    if sub == "smp":
        cfg.record_input(args.a)
        cfg.record_input(args.b)
        a, b = _load_states(args.a), _load_states(args.b)
        rep = smp_wce(a, b)
        result = {"wce": rep.value, "witness": list(rep.witness),
                  "rank": rep.rank}
        _emit(cfg, "quantum smp", result, [
            f"wce {rep.value:.12f} witness {rep.witness} rank {rep.rank}"])
        return EXIT_OK
    if sub == "conjugate":
        cfg.record_input(args.etf)
        etf = _load_states(args.etf)
        n, m = etf.count, etf.dim
        if n == 2 * m:
            a, b, predicted = etf_2m_strategy(etf)
            kind = "complement-pair (n = 2m)"
        else:
            a, b, predicted = etf_conjugate_strategy(etf)
            kind = "conjugate-pair"
        rep = smp_wce(a, b)
        result = {"kind": kind, "predicted": predicted, "wce": rep.value,
                  "rank": rep.rank, "bob_states": _states_payload(b)}
        _emit(cfg, "quantum conjugate", result, [
            f"{kind}: wce {rep.value:.12f} (predicted {predicted:.12f}), "
            f"rank {rep.rank}"])
        return EXIT_OK
    if sub == "complement":
        cfg.record_input(args.etf)
        etf = _load_states(args.etf)
        comp = etf_complement(etf)
        rep = max_pairwise_overlap(comp)
        result = {"dim": comp.dim, "count": comp.count,
                  "max_overlap": rep.max_overlap,
                  "states": _states_payload(comp)}
        if args.out:
            dump_json(args.out, _states_payload(comp))
        _emit(cfg, "quantum complement", result, [
            f"complement in dim {comp.dim}, overlap {rep.max_overlap:.12f}"])
        return EXIT_OK
    if sub == "sym":
        cfg.record_input(args.states)
        states = _load_states(args.states)
        val = sym_strategy(states)
        result = {"wce": val,
                  "max_overlap": max_pairwise_overlap(states).max_overlap}
        _emit(cfg, "quantum sym", result, [f"wce {val:.12f}"])
        return EXIT_OK
    raise ValueError(f"unknown quantum subcommand {sub!r}")


# -- parser ------------------------------------------------------------------


def _common_options(suppress: bool) -> argparse.ArgumentParser:
    # accepted on either side of the command words; the subcommand copies use
    # SUPPRESS so they never clobber a value parsed before the command (the
    # action objects are shared through `parents`, hence two instances)
    d = argparse.SUPPRESS if suppress else None
    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("--seed", type=int, default=argparse.SUPPRESS if suppress else 0)
    c.add_argument("--threads", type=int, default=argparse.SUPPRESS if suppress else 1)
    c.add_argument("--format", choices=("json", "csv", "text"),
                   default=argparse.SUPPRESS if suppress else "text")
    c.add_argument("--budget-seconds", type=float, default=d)
    c.add_argument("--budget-nodes", type=int, default=d)
    c.add_argument("--tol", type=float, default=d)
    c.add_argument("--report-dir", type=Path, default=d)
    return c


def build_parser() -> _Parser:
    common = _common_options(suppress=True)
    p = _Parser(prog="fingerlab", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter,
                parents=[_common_options(suppress=False)])
    sub = p.add_subparsers(dest="command", required=True)

    def add(parent, name, **kw):
        return parent.add_parser(name, parents=[common], **kw)

    q = add(sub, "eval", help="evaluate a strategy file")
    q.add_argument("--strategy", required=True)
    q.set_defaults(fn=cmd_eval)

    q = add(sub, "complete", help="binary referee completion of (p, q)")
    q.add_argument("--strategy", required=True)
    q.add_argument("--out")
    q.set_defaults(fn=cmd_complete)

    q = add(sub, "search", help="combinatorial searches")
    ss = q.add_subparsers(dest="search_cmd", required=True)
    s1 = add(ss, "cover-free")
    s1.add_argument("--m", type=int, required=True)
    s1.add_argument("--k", type=int, required=True)
    s1.add_argument("--j", type=int, default=1)
    s1.add_argument("--out")
    s1.set_defaults(fn=cmd_search_cover_free)
    s2 = add(ss, "pair-capacity")
    s2.add_argument("--m", type=int, required=True)
    s2.add_argument("--k1", type=int, required=True)
    s2.add_argument("--k2", type=int, required=True)
    s2.add_argument("--j", type=int, required=True)
    s2.add_argument("--out")
    s2.set_defaults(fn=cmd_search_pair)

    q = add(sub, "construct", help="strategy constructors")
    cs = q.add_subparsers(dest="kind", required=True)
    c1 = add(cs, "cwc")
    c1.add_argument("--family", required=True)
    c1.add_argument("--k", type=int, required=True)
    c1.add_argument("--j", type=int, required=True)
    c1.add_argument("--out")
    c2 = add(cs, "complement")
    c2.add_argument("--m", type=int, required=True)
    c2.add_argument("--out")
    c3 = add(cs, "halving")
    c3.add_argument("--base", required=True)
    c3.add_argument("--out")
    c4 = add(cs, "pair")
    c4.add_argument("--fp", required=True)
    c4.add_argument("--fq", required=True)
    c4.add_argument("--k1", type=int, required=True)
    c4.add_argument("--k2", type=int, required=True)
    c4.add_argument("--out")
    for c in (c1, c2, c3, c4):
        c.set_defaults(fn=cmd_construct)

    q = add(sub, "bounds", help="best-known error intervals")
    q.add_argument("model", choices=("one-way", "smp"))
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--no-search", action="store_true")
    q.set_defaults(fn=cmd_bounds)

    q = add(sub, "tables", help="regenerate a golden table and diff it")
    q.add_argument("table", choices=("I", "II", "III", "IV", "SMP"))
    q.add_argument("--no-search", action="store_true")
    q.set_defaults(fn=cmd_tables)

    q = add(sub, "quantum", help="state-set operations")
    qs = q.add_subparsers(dest="quantum_cmd", required=True)
    g1 = add(qs, "pack")
    g1.add_argument("--n", type=int, required=True)
    g1.add_argument("--m", type=int, required=True)
    g1.add_argument("--restarts", type=int, default=GrassmannConfig.restarts)
    g1.add_argument("--iterations", type=int, default=GrassmannConfig.iterations)
    g2 = add(qs, "etf-check")
    g2.add_argument("--states", required=True)
    g3 = add(qs, "mub")
    g3.add_argument("--m", type=int, required=True)
    g3.add_argument("--out")
    g4 = add(qs, "smp")
    g4.add_argument("--a", required=True)
    g4.add_argument("--b", required=True)
    g5 = add(qs, "conjugate")
    g5.add_argument("--etf", required=True)
    g6 = add(qs, "complement")
    g6.add_argument("--etf", required=True)
    g6.add_argument("--out")
    g7 = add(qs, "sym")
    g7.add_argument("--states", required=True)
    for g in (g1, g2, g3, g4, g5, g6, g7):
        g.set_defaults(fn=cmd_quantum)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if e.code is not None else EXIT_USAGE
    cfg = RunConfig(seed=args.seed, threads=args.threads, fmt=args.format,
                    budget_seconds=args.budget_seconds,
                    budget_nodes=args.budget_nodes, tol=args.tol,
                    report_dir=args.report_dir)
    try:
        return args.fn(cfg, args)
    except (ValueError, FileNotFoundError, KeyError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
