"""Command-line front end.

Exit codes: 0 success, 1 check failure, 2 usage error.  For ``simulate``,
values come from defaults, then an optional ``--config`` JSON file, then
explicit flags (flags win).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

from . import corpus as corpus_mod
from . import validation
from .construction import nzcod_design, scod_design
from .design import DesignMatrix, classify_design
from .notation import format_grid, parse_design, print_design
from .simulate import (
    PowerConstraint,
    SimConfig,
    constellation_by_name,
    papr,
    power_scale,
    run_ser,
    snr_at_ser,
    write_csv,
    write_metadata,
)

USAGE_ERROR = 2


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _build(kind: str, a: int) -> DesignMatrix:
    return nzcod_design(a) if kind == "nzcod" else scod_design(a)


def cmd_generate(args: argparse.Namespace) -> int:
    design = _build(args.kind, args.a)
    if args.format == "text":
        text = format_grid(design)
    elif args.format == "design":
        text = print_design(design)
    else:
        text = design.to_json() + "\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    ceiling = validation.DEEP_CEILING if args.deep else validation.DEFAULT_CEILING
    if not 1 <= args.a <= ceiling:
        hint = " (pass --deep for a in 9..10)" if not args.deep else ""
        print(f"error: --a {args.a} is outside [1, {ceiling}]{hint}",
              file=sys.stderr)
        return USAGE_ERROR
    reports = validation.check_all(args.a, deep=args.deep)
    if args.json:
        _emit(json.dumps([asdict(r) for r in reports], indent=2) + "\n", args.out)
    else:
        lines = [f"{'check':22s} a  result  detail"]
        for r in reports:
            lines.append(f"{r.name:22s} {r.a}  {'pass' if r.passed else 'FAIL':6s}  {r.detail}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if all(r.passed for r in reports) else 1


def _table1_text(result: validation.Table1Result) -> str:
    def fmt(s: frozenset[int]) -> str:
        return "{" + ",".join(str(x) for x in sorted(s)) + "}"

    lines = ["a   b  M               M~              M'"]
    for row in result.rows:
        lines.append(f"{row.a:<3d} {row.b}  {fmt(row.M):15s} {fmt(row.M_tilde):15s} "
                     f"{fmt(row.M_prime)}")
    for a, col, printed, computed in result.errata:
        lines.append(
            f"note: published table misprints {col} at a={a}: printed "
            f"{fmt(printed)} breaks the distance-3 property; computed "
            f"{fmt(computed)} is used")
    return "\n".join(lines) + "\n"


def cmd_table1(args: argparse.Namespace) -> int:
    result = validation.reproduce_table1()
    if args.json:
        payload = {
            "rows": [
                {"a": r.a, "b": r.b, "M": sorted(r.M), "M_tilde": sorted(r.M_tilde),
                 "M_prime": sorted(r.M_prime)}
                for r in result.rows
            ],
            "errata": [
                {"a": a, "column": col, "printed": sorted(p), "computed": sorted(c)}
                for a, col, p, c in result.errata
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit(_table1_text(result), args.out)
    return 0 if result.matches_up_to_errata else 1


def cmd_corpus(args: argparse.Namespace) -> int:
    reports = corpus_mod.verify_corpus()
    if args.json:
        payload = [
            {"name": r.name, "passed": r.passed,
             "transcription_suspect": r.transcription_suspect,
             "details": r.details}
            for r in reports
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = []
        for r in reports:
            status = "pass" if r.passed else "FAIL"
            if r.transcription_suspect:
                status += " (transcription suspect)"
            lines.append(f"{r.name:25s} {status}")
            lines.extend(f"    {d}" for d in r.details)
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if all(r.passed for r in reports) else 1


def cmd_analyze(args: argparse.Namespace) -> int:
    if args.file:
        design = parse_design(Path(args.file).read_text(encoding="utf-8"))
        label = args.file
    else:
        design = _build(args.kind, args.a)
        label = f"{args.kind} a={args.a}"
    c = constellation_by_name(args.constellation)
    cls = classify_design(design)
    zero_fraction = cls.zero_count / (design.n * design.n)
    payload = {
        "design": label,
        "antennas": design.n,
        "variables": design.k,
        "rate": f"{design.k}/{design.n}",
        "orthogonal": cls.orthogonal,
        "zero_count": cls.zero_count,
        "zero_fraction": zero_fraction,
        "is_cod": cls.is_cod,
        "is_scaled_cod": cls.is_scaled_cod,
        "is_cis_cod": cls.is_cis_cod,
        "interleaved_pairs": sorted(sorted(p) for p in cls.interleaved_pairs),
        "constellation": c.label,
        "papr": papr(design, c),
        "power_scale_avg": power_scale(design, c, PowerConstraint.AVERAGE),
        "power_scale_peak": power_scale(design, c, PowerConstraint.PEAK),
    }
    if args.json:
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit("".join(f"{k}: {v}\n" for k, v in payload.items()), args.out)
    return 0


def _parse_snr_grid(text: str) -> tuple[float, ...]:
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError("snr range must be start:stop:step")
        start, stop, step = (float(p) for p in parts)
        grid = []
        x = start
        while x <= stop + 1e-9:
            grid.append(round(x, 9))
            x += step
        return tuple(grid)
    return tuple(float(p) for p in text.split(","))


def _design_for_code(code: str, a: int) -> DesignMatrix:
    if code == "nzcod":
        return nzcod_design(a)
    if code == "scod":
        return scod_design(a)
    if code == "r3":
        if a != 3:
            raise ValueError("the r3 reference code is an 8-antenna design (a=3)")
        return corpus_mod.load_design("r3")
    raise ValueError(f"unknown code {code!r}")


def cmd_simulate(args: argparse.Namespace) -> int:
    settings = {
        "a": 4, "codes": "nzcod,scod", "constellation": "qam16",
        "constraint": "avg", "snr": "0:24:2", "trials": 20000, "seed": 1,
        "receive_antennas": 1, "out": "ser.csv",
    }
    if args.config:
        settings.update(json.loads(Path(args.config).read_text(encoding="utf-8")))
    for key in settings:
        value = getattr(args, key if key != "receive_antennas" else "rx", None)
        if value is not None:
            settings[key] = value

    try:
        grid = _parse_snr_grid(str(settings["snr"]))
        constellation = constellation_by_name(str(settings["constellation"]))
        constraint = PowerConstraint(str(settings["constraint"]))
        codes = [c.strip() for c in str(settings["codes"]).split(",") if c.strip()]
        configs = [
            SimConfig(code=code,
                      design=_design_for_code(code, int(settings["a"])),
                      constellation=constellation, constraint=constraint,
                      snr_grid_db=grid, trials_per_point=int(settings["trials"]),
                      seed=int(settings["seed"]),
                      receive_antennas=int(settings["receive_antennas"]))
            for code in codes
        ]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR

    curves = []
    for cfg in configs:
        curve = run_ser(cfg)
        curves.append(curve)
        crossing = snr_at_ser(curve, 1e-2)
        at = f"SER=1e-2 near {crossing:.2f} dB" if crossing else "no 1e-2 crossing"
        print(f"{cfg.code}: done ({at})")
    out = Path(str(settings["out"]))
    write_csv(curves, out)
    write_metadata(configs, out.with_suffix(".meta.json"))
    print(f"wrote {out} and {out.with_suffix('.meta.json')}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nzcod",
        description="Square orthogonal designs with no zero entries: "
                    "construction, verification and SER simulation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build a design and print/write it")
    p.add_argument("--a", type=int, required=True, help="antenna exponent (2**a antennas)")
    p.add_argument("--kind", choices=["nzcod", "scod"], default="nzcod")
    p.add_argument("--format", choices=["text", "json", "design"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run every structural check at one a")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--deep", action="store_true",
                   help="allow a in 9..10 (combinatorial checks only)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table1", help="reproduce the interleaver-set reference table")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("corpus", help="verify every bundled reference design")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("analyze", help="zero fraction, PAPR and class of a design")
    p.add_argument("--a", type=int, default=3)
    p.add_argument("--kind", choices=["nzcod", "scod"], default="nzcod")
    p.add_argument("--file", help="analyze a .design file instead of a built design")
    p.add_argument("--constellation", choices=["qam4", "qam16", "qam64"],
                   default="qam4")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("simulate", help="Monte Carlo SER runs, CSV + metadata out")
    p.add_argument("--config", help="JSON file with the same keys as the flags")
    p.add_argument("--a", type=int)
    p.add_argument("--codes", help="comma list from {nzcod,scod,r3}")
    p.add_argument("--constellation", choices=["qam4", "qam16", "qam64"])
    p.add_argument("--constraint", choices=["avg", "peak"])
    p.add_argument("--snr", help="grid as start:stop:step or comma list (dB)")
    p.add_argument("--trials", type=int, help="trials per SNR point")
    p.add_argument("--seed", type=int)
    p.add_argument("--rx", type=int, help="receive antennas")
    p.add_argument("--out", help="CSV output path")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
