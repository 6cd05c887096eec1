"""Command-line entry point: ``exjordan verify | universal | tkk``.

Exit status is 0 when every check passes, 1 on a verification failure and 2
on a usage error such as an unknown grading name.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import gradings as grd
from . import jordan as jd
from . import tkk as tk

REPORT_SCHEMA = "exjordan.report/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
AXIOM_SYSTEMS = ("bicayley_pair", "bicayley_triple", "albert_pair", "albert_triple")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    gradings: list = field(default_factory=list)
    all: bool = False
    seed: int = 0
    trials: int = 50
    jacobi_mode: str = "reduced"
    output: str | None = None
    json_path: str | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise UsageError("--trials must be at least 1")


@dataclass
class Report:
    command: str
    checks: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def add(self, name: str, ok: bool, counterexample=None, **extra) -> None:
        item = {"check": name, "pass": bool(ok)}
        if not ok and counterexample is not None:
            item["counterexample"] = repr(counterexample)
        item.update(extra)
        self.checks.append(item)
        line = f"[{'PASS' if ok else 'FAIL'}] {name}"
        if extra:
            line += "  " + "  ".join(f"{k}={v}" for k, v in extra.items())
        if not ok and counterexample is not None:
            line += f"  first counterexample: {counterexample!r}"
        print(line, flush=True)

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def document(self) -> dict:
        return {"schema": REPORT_SCHEMA, "command": self.command, "ok": self.ok,
                "checks": self.checks, "info": self.info}


def _selected(cfg: RunConfig, default: Sequence[str]) -> list[str]:
    names = list(default) if cfg.all or not cfg.gradings else list(cfg.gradings)
    unknown = [n for n in names if n not in grd.CATALOG]
    if unknown:
        raise UsageError(f"unknown grading {unknown[0]!r}; known: {', '.join(grd.CATALOG)}")
    return names


def _first(items):
    return items[0] if items else None


def cmd_verify(cfg: RunConfig) -> Report:
    rep = Report("verify")
    names = _selected(cfg, grd.CATALOG)
    if cfg.all:
        for name in AXIOM_SYSTEMS:
            s = jd.get_system(name)
            r = jd.verify_linear_axioms(s)
            rep.add(f"linear axioms {name}", r.ok, _first(r.violations))
            r = jd.verify_quadratic_axioms(s, seed=cfg.seed, trials=cfg.trials)
            rep.add(f"quadratic axioms {name}", r.ok, _first(r.violations))
    for name in names:
        gr = grd.catalog(name)
        r = grd.verify_grading(gr)
        rep.add(f"grading {name}", r.ok, _first(r.violations))
        if name in grd.FINE_PAIR_TRIPLE_GRADINGS:
            for check, ok in grd.support_checks(gr).items():
                rep.add(f"{check} {name}", ok)
        else:
            rep.add(f"trace_homogeneous {name}", grd.support_checks(gr)["trace_homogeneous"])
    return rep


def cmd_universal(cfg: RunConfig) -> Report:
    rep = Report("universal")
    for name in _selected(cfg, grd.CATALOG):
        u = grd.universal_group(grd.catalog(name))
        want = grd.EXPECTED_GROUPS[name]
        rep.add(f"universal group {name}", u.group.isomorphic(want), (str(u.group), str(want)),
                computed=str(u.group), expected=str(want))
        rep.info[name] = {"free_rank": u.group.free_rank, "torsion": list(u.group.torsion)}
    return rep


def cmd_tkk(cfg: RunConfig) -> Report:
    rep = Report("tkk")
    names = _selected(cfg, grd.PAIR_GRADINGS)
    bad = [n for n in names if grd.catalog(n).kind != "pair"]
    if bad:
        raise UsageError(f"{bad[0]!r} is not a pair grading")
    if cfg.output and len(names) != 1:
        raise UsageError("--output needs exactly one grading")
    for name in names:
        gr = grd.catalog(name)
        L = tk.tkk(gr.system)
        r = tk.verify_lie(L, cfg.jacobi_mode)
        rep.add(f"Lie algebra {L.name} ({cfg.jacobi_mode} Jacobi)", r.ok, _first(r.violations), dim=L.dim)
        G = tk.extend_grading(L, gr)
        viol = tk.bracket_homogeneity_violations(G)
        typ = tk.lie_grading_type(G)
        rep.add(f"induced grading {name}", not viol, _first(viol), type=typ)
        rep.info[name] = {"dim": L.dim, "type": list(typ)}
        if cfg.output:
            tk.export_structure_constants(G, cfg.output)
            print(f"wrote structure constants to {cfg.output}")
    return rep


COMMANDS = {"verify": cmd_verify, "universal": cmd_universal, "tkk": cmd_tkk}


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="exjordan", description="Exact checks on exceptional Jordan pairs and triples.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_ in (("verify", "axioms and grading checks"), ("universal", "universal groups"),
                        ("tkk", "TKK Lie algebras and induced gradings")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--all", action="store_true", help="every applicable catalog grading")
        s.add_argument("--grading", action="append", default=[], help="catalog grading name (repeatable)")
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--trials", type=int, default=50)
        s.add_argument("--json", dest="json_path", help="also write the report as JSON")
        if name == "tkk":
            s.add_argument("--jacobi", choices=("reduced", "full"), default="reduced")
            s.add_argument("--output", help="write the structure-constants file here")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        ns = parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        cfg = RunConfig(ns.command, ns.grading, ns.all, ns.seed, ns.trials,
                        getattr(ns, "jacobi", "reduced"), getattr(ns, "output", None), ns.json_path)
        rep = COMMANDS[cfg.command](cfg)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.json_path:
        with open(cfg.json_path, "w") as fh:
            json.dump(rep.document(), fh, indent=1)
    print("all checks passed" if rep.ok else "verification FAILED")
    return EXIT_OK if rep.ok else EXIT_FAIL


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
