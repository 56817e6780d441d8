"""Command line front end.

Subcommands: stat, map, trace, enumerate, genfun, verify.  Every command
accepts --json for machine-readable output carrying the same data as the
text form.  Exit codes: 0 success, 1 verification failure, 2 usage error.
All computation is deterministic; --seed is accepted and ignored for
harness compatibility.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijections as B
from .foata import foata, foata_inverse, foata_trace, render_trace
from . import genfun as G
from . import partitions as P
from . import words as W
from .families import FAMILIES, enumerate_family
from .verify import CHECKS, run_suite

_STATS = {
    "maj": W.maj,
    "inv": W.inv,
    "des": W.des,
    "exc": W.exc,
    "excess": lambda w: W.excess_profile(w)[1] if w else 0,
    "pairs": lambda w: len(W.match_pairs(w)[0]),
}


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _cmd_stat(args) -> int:
    word = W.parse_word(args.word)
    wanted = [name for name in _STATS if getattr(args, name)]
    if not wanted:
        wanted = ["maj", "inv", "des"]
    values = {name: _STATS[name](word) for name in wanted}
    payload = {"word": W.format_word(word), **values}
    _emit(args, payload, " ".join(f"{k}={v}" for k, v in values.items()))
    return 0


_MAPS = {
    "phi": lambda w: foata(w),
    "phi-inv": lambda w: foata_inverse(w),
    "prime": lambda w: W.reverse_complement(w),
    "gk": lambda w: B.gk_map(w),
    "gk-inv": lambda w: B.gk_inverse(w),
}


def _cmd_map(args) -> int:
    name = args.map
    if name in ("csv", "boundary"):
        part = P.parse_partition(args.input)
        if name == "boundary":
            out = P.boundary_word(part)
            _emit(args, {"input": P.format_partition(part), "word": W.format_word(out)}, W.format_word(out))
            return 0
        if args.trace:
            stages = B.csv_trace(part)
            if args.json:
                print(json.dumps([_stage_json(st) for st in stages]))
            else:
                print(_render_csv_trace(stages))
            return 0
        out = B.csv_map(part)
        _emit(args, {"input": P.format_partition(part), "partition": P.format_partition(out)}, P.format_partition(out))
        return 0

    word = W.parse_word(args.input)
    if name == "lambda":
        lam = P.partition_of_word(word)
        ones = sum(1 for a in word if a == 1)
        payload = {
            "word": W.format_word(word),
            "partition": P.format_partition(lam),
            "box": [ones, len(word) - ones],
        }
        _emit(args, payload, P.format_partition(lam))
        return 0
    if name == "beta":
        x, y = B.ballot_split(word)
        payload = {"first": W.format_word(x), "second": W.format_word(y)}
        _emit(args, payload, f"{W.format_word(x)} {W.format_word(y)}")
        return 0
    if name == "phi" and args.trace:
        if args.json:
            trace = [
                {
                    "stage": W.format_word(st),
                    "factors": None if fs is None else [W.format_word(f) for f in fs],
                }
                for st, fs in foata_trace(word)
            ]
            print(json.dumps({"image": W.format_word(foata(word)), "trace": trace}))
        else:
            print(render_trace(word))
        return 0
    out = _MAPS[name](word)
    _emit(args, {"input": W.format_word(word), "image": W.format_word(out)}, W.format_word(out))
    return 0


def _stage_json(st: dict) -> dict:
    return {
        "partition": P.format_partition(st["partition"]),
        "rho": list(st["rho"]),
        "r": st["r"],
        "i": st["i"],
        "word": W.format_word(st["word"]),
        "preimage": W.format_word(st["preimage"]),
        "excesses": list(st["excesses"]),
    }


def _render_csv_trace(stages) -> str:
    blocks = []
    for st in stages:
        lines = [f"lambda = {P.format_partition(st['partition'])}"]
        lines.append(P.ferrers(st["partition"]))
        lines.append(f"rho = {list(st['rho'])}   r = {st['r']}   i = {st['i']}")
        lines.append(f"w = {W.format_word(st['word'])}")
        lines.append(f"v = {W.format_word(st['preimage'])}")
        lines.append(f"eps = {list(st['excesses'])}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)


def _cmd_trace(args) -> int:
    args.trace = True
    return _cmd_map(args)


def _cmd_enumerate(args) -> int:
    stream = enumerate_family(args.family, *args.params)
    items = []
    for k, item in enumerate(stream):
        if args.limit is not None and k >= args.limit:
            break
        items.append(item)
    word_families = not args.family.startswith(("partitions", "box", "rank-", "no-part", "first-difference"))
    fmt = W.format_word if word_families else P.format_partition
    if args.json:
        print(json.dumps({"family": args.family, "items": [fmt(x) for x in items], "count": len(items)}))
    else:
        for x in items:
            print(fmt(x))
    return 0


_GENFUN = {
    "qint": (1, lambda n: G.q_int(n)),
    "qfact": (1, lambda n: G.q_factorial(n)),
    "qbinom": (2, lambda n, k: G.q_binomial(n, k)),
    "catalan-qt": (1, lambda n: G.catalan_qt(n)),
    "catalan-q": (1, lambda n: G.catalan_q(n)),
    "triangle-qt": (2, lambda n, d: G.catalan_nd_qt(n, d)),
    "triangle-q": (2, lambda n, d: G.catalan_nd_q(n, d)),
    "fib": (1, lambda n: G.fib_poly(n)),
    "lucas": (1, lambda n: G.lucas_poly(n)),
    "lucanomial": (2, lambda n, k: G.lucanomial(n, k)),
    "st-catalan": (1, lambda n: G.st_catalan(n)),
}


def _cmd_genfun(args) -> int:
    name = args.family
    if name == "product-no-part":
        (t,) = (int(x) for x in args.params)
        poly = G.truncated_product([i for i in range(1, args.truncate + 1) if i != t], args.truncate)
    elif name == "product-mod":
        modulus, r = (int(x) for x in args.params)
        banned = {0, r % modulus, (-r) % modulus}
        poly = G.truncated_product(
            [i for i in range(1, args.truncate + 1) if i % modulus not in banned],
            args.truncate,
        )
    elif name in _GENFUN:
        arity, fn = _GENFUN[name]
        if len(args.params) != arity:
            raise ValueError(f"{name} takes {arity} parameter(s)")
        poly = fn(*(int(x) for x in args.params))
    else:
        raise KeyError(name)
    if args.json:
        print(json.dumps({"family": name, "poly": str(poly), "terms": poly.to_json()}))
    else:
        print(poly)
    return 0


_BOUND_FLAGS = (
    "max_n",
    "max_len",
    "max_size",
    "degree",
    "max_total",
    "max_coeff",
    "samples",
    "binary_len",
    "ternary_len",
    "count_size",
    "max_n_comp",
    "max_n_beta",
)


def _cmd_verify(args) -> int:
    if args.all or not args.checks:
        names = list(CHECKS)
    else:
        names = args.checks
        unknown = [n for n in names if n not in CHECKS]
        if unknown:
            print(f"unknown check: {', '.join(unknown)}", file=sys.stderr)
            print("available checks:", file=sys.stderr)
            for name, defn in CHECKS.items():
                print(f"  {name}: {defn.doc}", file=sys.stderr)
            return 2
    overrides = {
        flag: getattr(args, flag)
        for flag in _BOUND_FLAGS
        if getattr(args, flag) is not None
    }
    if overrides:
        for flag in overrides:
            if not any(
                flag in CHECKS[n].quick or flag in CHECKS[n].full or flag == "count_size"
                for n in names
            ):
                print(f"bound --{flag.replace('_', '-')} applies to none of the selected checks", file=sys.stderr)
                return 2
        reports = []
        from .verify import run_check

        for name in names:
            defn = CHECKS[name]
            applicable = {
                k: v
                for k, v in overrides.items()
                if k in defn.quick or k in defn.full or (name, k) == ("csv-bijection", "count_size")
            }
            reports.append(run_check(name, bounds=applicable, profile=args.profile))
    else:
        reports = run_suite(profile=args.profile, names=names)
    if args.json:
        print(json.dumps([r.to_json() for r in reports]))
    else:
        for r in reports:
            mark = "PASS" if r.passed else "FAIL"
            line = f"{mark} {r.check} ({r.millis:.0f} ms)"
            if r.witness:
                line += f"  witness: {r.witness}"
            print(line)
    return 0 if all(r.passed for r in reports) else 1


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="mahonian", description=__doc__)
    top.add_argument("--json", action="store_true", help="machine-readable output")
    top.add_argument("--seed", type=int, default=None, help="accepted and ignored")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stat", help="word statistics")
    p.add_argument("word")
    for name in _STATS:
        p.add_argument(f"--{name}", action="store_true")
    p.set_defaults(fn=_cmd_stat)

    map_ids = ("phi", "phi-inv", "beta", "csv", "gk", "gk-inv", "prime", "lambda", "boundary")
    p = sub.add_parser("map", help="apply a bijection")
    p.add_argument("map", choices=map_ids)
    p.add_argument("input")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(fn=_cmd_map)

    p = sub.add_parser("trace", help="apply a bijection, showing every stage")
    p.add_argument("map", choices=("phi", "csv"))
    p.add_argument("input")
    p.set_defaults(fn=_cmd_trace)

    p = sub.add_parser("enumerate", help="stream a word or partition family")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("genfun", help="print a named polynomial")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--truncate", type=int, default=20, help="series truncation degree")
    p.set_defaults(fn=_cmd_genfun)

    p = sub.add_parser("verify", help="run registered identity checks")
    p.add_argument("checks", nargs="*")
    p.add_argument("--all", action="store_true")
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    p.add_argument("--list", action="store_true", help="list available checks")
    for flag in _BOUND_FLAGS:
        p.add_argument(f"--{flag.replace('_', '-')}", type=int, default=None, dest=flag)
    p.set_defaults(fn=_cmd_verify)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if getattr(args, "list", False):
        for name, defn in CHECKS.items():
            print(f"{name}: {defn.doc}")
        return 0
    try:
        return args.fn(args)
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
