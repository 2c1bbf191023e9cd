"""Command-line front end.

Exit codes: 0 success or verified, 1 witness found, 2 input error,
3 guard exceeded, 4 pipeline undecided.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import constructions as cons
from .colouring import EdgeColouring
from .families import parse_target
from .formats import colouring_to_dot, to_dot, to_graph6
from .pipelines import (
    decide_power_vs_H,
    path_vs_power_pipeline,
    power_vs_power_pipeline,
    stability_decompose,
)
from .search import (
    GuardExceeded,
    ResultLedger,
    goodness_report,
    hom_ramsey_result,
    ramsey_number,
)

OK, WITNESS, INPUT_ERROR, GUARD, UNDECIDED = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    out: str | None = None
    fmt: str = "json"
    guard: int | None = None
    threads: int = 1
    seed: int | None = None

    def metadata(self) -> dict:
        return asdict(self)


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _targets(specs: list[str]):
    try:
        return [parse_target(s) for s in specs]
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _load_colouring(path: str) -> EdgeColouring:
    try:
        with open(path) as fh:
            return EdgeColouring.from_json(fh.read())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read colouring {path}: {exc}") from exc


# -- construct ------------------------------------------------------------------

def _gadget(text: str) -> cons.JGadget:
    rows = [r.strip() for r in text.split(",")]
    table = tuple(tuple(int(c) for c in row) for row in rows)
    return cons.JGadget(len(table), table)


def cmd_construct(cfg: RunConfig, a: argparse.Namespace) -> int:
    name = a.name
    try:
        if name == "burr":
            col = cons.burr_colouring(a.chi, a.sigma, a.n)
            layout = cons.burr_layout(a.chi, a.sigma, a.n)
        elif name == "power-lower":
            col = cons.power_lower_colouring(a.k, a.t, a.c_mode, a.seed)
            layout = cons.power_lower_layout(a.k, a.t)
        elif name == "j-gadget":
            g = _gadget(a.gadget)
            col = cons.j_gadget_colouring(g, a.t, a.c_mode, a.seed)
            layout = cons.j_gadget_layout(g, a.t)
        elif name == "cycle-remainder":
            col = cons.cycle_remainder_colouring(a.k, a.t, a.rem, a.c_mode, a.seed)
            layout = cons.cycle_remainder_layout(a.k, a.t, a.rem)
        elif name == "brown":
            g = cons.brown_polarity_graph(a.p)
            fmt = cfg.fmt if cfg.fmt != "json" or a.format_given else "graph6"
            if fmt == "graph6":
                _emit(cfg, to_graph6(g))
            elif fmt == "dot":
                _emit(cfg, to_dot(g, "brown"))
            else:
                _emit(cfg, cons.brown_colouring(a.p).to_json())
            print(f"vertices: {g.n}", file=sys.stderr if not cfg.out else sys.stdout)
            return OK
        else:
            raise InputError(f"unknown construction {name!r}")
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    if cfg.fmt == "dot":
        _emit(cfg, colouring_to_dot(col))
    else:
        _emit(cfg, col.to_json())
    info = f"vertices: {col.n}\n" + "\n".join(f"  {k}: {r.start}..{r.stop - 1}" for k, r in layout.items() if len(r))
    print(info, file=sys.stderr if not cfg.out else sys.stdout)
    return OK


# -- verify ------------------------------------------------------------------------

def cmd_verify(cfg: RunConfig, a: argparse.Namespace) -> int:
    col = _load_colouring(a.colouring)
    red, blue = _targets([a.red, a.blue])
    if col.r != 2:
        raise InputError("verify needs a two-colouring")
    rep = cons.verify_avoidance(col, red, blue)
    out = rep.to_dict()
    out["meta"] = cfg.metadata()
    _emit(cfg, json.dumps(out))
    summary = "verified: no red target and no blue target" if rep.verified else "witness found"
    print(summary, file=sys.stderr if not cfg.out else sys.stdout)
    return OK if rep.verified else WITNESS


# -- search ------------------------------------------------------------------------

def cmd_ramsey(cfg: RunConfig, a: argparse.Namespace) -> int:
    graphs = _targets(a.targets)
    targets = [(g, i) for i, g in enumerate(graphs)]
    ledger = ResultLedger(a.ledger)
    cached = ledger.get("ramsey", targets)
    if cached is not None:
        value = cached["value"]
        out = dict(cached)
    else:
        res = ramsey_number(targets, a.lower, a.upper, guard=cfg.guard, workers=cfg.threads)
        ledger.put("ramsey", targets, res)
        value = res.value
        out = res.to_dict()
    out["meta"] = cfg.metadata()
    if cfg.out:
        _emit(cfg, json.dumps(out))
    print(value)
    return OK


def cmd_hom_ramsey(cfg: RunConfig, a: argparse.Namespace) -> int:
    graphs = _targets(a.targets)
    targets = [(g, i) for i, g in enumerate(graphs)]
    ledger = ResultLedger(a.ledger)
    cached = ledger.get("hom", targets)
    if cached is not None:
        value, out = cached["value"], dict(cached)
    else:
        res = hom_ramsey_result(graphs, guard=cfg.guard, workers=cfg.threads)
        ledger.put("hom", targets, res)
        value, out = res.value, res.to_dict()
    out["meta"] = cfg.metadata()
    if cfg.out:
        _emit(cfg, json.dumps(out))
    print(value)
    return OK


def cmd_goodness(cfg: RunConfig, a: argparse.Namespace) -> int:
    if a.table:
        lo, hi = a.table
        if "{n}" not in a.G:
            raise InputError("--table needs a G template containing {n}, e.g. 'P_{n}'")
        rows = []
        (H,) = _targets([a.H])
        for n in range(lo, hi + 1):
            (G,) = _targets([a.G.replace("{n}", str(n))])
            try:
                rep = goodness_report(G, H, guard=cfg.guard, workers=cfg.threads)
                rows.append((n, rep.ramsey, rep.burr_bound, "yes" if rep.good else "no"))
            except GuardExceeded:
                rows.append((n, "> guard", "", ""))
            except ValueError as exc:
                raise InputError(str(exc)) from exc
        lines = [f"{'n':>4} {'R(G,H)':>8} {'bound':>6} {'good':>5}"]
        lines += [f"{n:>4} {r!s:>8} {b!s:>6} {g:>5}" for n, r, b, g in rows]
        _emit(cfg, "\n".join(lines))
        return OK
    G, H = _targets([a.G, a.H])
    try:
        rep = goodness_report(G, H, guard=cfg.guard, workers=cfg.threads)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out = rep.to_dict()
    out["meta"] = cfg.metadata()
    _emit(cfg, json.dumps(out))
    return OK


# -- pipeline ------------------------------------------------------------------------

def cmd_pipeline(cfg: RunConfig, a: argparse.Namespace) -> int:
    col = _load_colouring(a.colouring)
    eps = Fraction(a.eps)
    try:
        if a.id == "stability":
            (H,) = _targets([a.H])
            out = stability_decompose(col, H, a.k, a.s or 2 * a.k, eps, a.n)
        elif a.id == "decide":
            (H,) = _targets([a.H])
            if a.n is None:
                raise InputError("decide needs --n")
            out = decide_power_vs_H(col, H, a.n, a.k, eps, s=a.s, require_size=not a.any_size)
        elif a.id == "path-vs-power":
            if a.n is None:
                raise InputError("path-vs-power needs --n")
            out = path_vs_power_pipeline(col, a.n, a.k, eps, require_size=not a.any_size)
        elif a.id == "power-vs-power":
            if a.n is None:
                raise InputError("power-vs-power needs --n")
            out = power_vs_power_pipeline(col, a.n, a.k, a.s or 4 * a.k, eps)
        else:
            raise InputError(f"unknown pipeline {a.id!r}")
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    data = out.to_dict()
    data["meta"] = cfg.metadata()
    _emit(cfg, json.dumps(data))
    print(out.tag, file=sys.stderr if not cfg.out else sys.stdout)
    if out.tag in ("red", "blue"):
        return WITNESS
    return UNDECIDED if out.tag == "undecided" else OK


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    def common(parser: argparse.ArgumentParser, default) -> None:
        # accepted before or after the subcommand
        parser.add_argument("--out", default=default(None), help="write machine output here instead of stdout")
        parser.add_argument("--format", dest="fmt", choices=["json", "dot", "graph6", "text-table"], default=default(None))
        parser.add_argument("--guard", type=int, default=default(None), help="override the search size guard")
        parser.add_argument("--threads", type=int, default=default(1))
        parser.add_argument("--seed", type=int, default=default(None), help="only used by the random C-block variant")

    p = argparse.ArgumentParser(prog="ramseygood", description=__doc__.splitlines()[0])
    common(p, lambda v: v)
    shared = argparse.ArgumentParser(add_help=False)
    common(shared, lambda v: argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)
    _add = sub.add_parser
    sub.add_parser = lambda name, **kw: _add(name, parents=[shared], **kw)

    c = sub.add_parser("construct")
    c.add_argument("name", choices=["burr", "power-lower", "j-gadget", "cycle-remainder", "brown"])
    c.add_argument("--chi", type=int)
    c.add_argument("--sigma", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--t", type=int)
    c.add_argument("--rem", type=int)
    c.add_argument("--p", type=int)
    c.add_argument("--gadget", help="rows of 0 (red) / 1 (blue), comma separated, e.g. 01,10")
    c.add_argument("--c-mode", choices=["red", "blue", "random"], default="red")

    v = sub.add_parser("verify")
    v.add_argument("colouring")
    v.add_argument("red")
    v.add_argument("blue")

    for name in ("ramsey", "hom-ramsey"):
        r = sub.add_parser(name)
        r.add_argument("targets", nargs="+")
        r.add_argument("--ledger", help="JSON ledger path (default: $RAMSEYGOOD_LEDGER)")
        if name == "ramsey":
            r.add_argument("--lower", type=int)
            r.add_argument("--upper", type=int)

    g = sub.add_parser("goodness")
    g.add_argument("G")
    g.add_argument("H")
    g.add_argument("--table", nargs=2, type=int, metavar=("FROM", "TO"))

    pl = sub.add_parser("pipeline")
    pl.add_argument("id", choices=["stability", "decide", "path-vs-power", "power-vs-power"])
    pl.add_argument("colouring")
    pl.add_argument("--H", default="K_3")
    pl.add_argument("--n", type=int)
    pl.add_argument("--k", type=int, default=1)
    pl.add_argument("--s", type=int)
    pl.add_argument("--eps", default="1/10")
    pl.add_argument("--any-size", action="store_true", help="skip the colouring-size precondition")
    return p


HANDLERS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "ramsey": cmd_ramsey,
    "hom-ramsey": cmd_hom_ramsey,
    "goodness": cmd_goodness,
    "pipeline": cmd_pipeline,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    a.format_given = a.fmt is not None
    params = {k: v for k, v in vars(a).items() if k not in ("out", "fmt", "guard", "threads", "seed", "command", "format_given")}
    cfg = RunConfig(a.command, params, a.out, a.fmt or "json", a.guard, a.threads, a.seed)
    try:
        return HANDLERS[a.command](cfg, a)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except GuardExceeded as exc:
        bound = f" (value >= {exc.lower})" if exc.lower else ""
        print(f"guard exceeded: {exc}{bound}", file=sys.stderr)
        return GUARD


if __name__ == "__main__":
    sys.exit(main())
