"""Command-line entry point: generate, analyze, verify, dual.

Exit codes: 0 success, 1 a verification check failed, 2 usage / parse error,
3 a brute-force cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import load_config
from .dirichlet import dual_graph
from .errors import BeyondBruteForceCap, ParseError, SCXError, ValidationError
from .generators import FamilySpec
from .io import load_document, serialize_complex
from .report import analyze, csv_table, parse_dims, text_table
from .verify import run_suite

FAMILIES = {
    "sigma": ("m",), "xk": ("m", "k"), "yk": ("m", "k"), "gk": ("k",), "rp2": (),
    "random_disk": ("k",), "random_tree": ("k",),
}

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _add_config_flags(p: argparse.ArgumentParser):
    g = p.add_argument_group("configuration (flags > SCX_* env > scx.toml > defaults)")
    g.add_argument("--config", help="TOML file with configuration keys")
    g.add_argument("--brute-cap-bits", type=int)
    g.add_argument("--coset-cap-bits", type=int)
    g.add_argument("--eig-tol", type=float)
    g.add_argument("--zero-band", type=float)
    g.add_argument("--workers", type=int)


def _config(args):
    flags = {
        "brute_cap_bits": args.brute_cap_bits,
        "coset_cap_bits": args.coset_cap_bits,
        "eig_tol": args.eig_tol,
        "zero_band": args.zero_band,
        "workers": args.workers,
    }
    if getattr(args, "seed", None) is not None:
        flags["seed"] = args.seed
    return load_config(flags, path=args.config)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scx", description="Cheeger numbers and spectral gaps of simplicial complexes")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a complex from one of the built-in families")
    g.add_argument("--family", required=True, choices=FAMILIES)
    g.add_argument("--m", type=int, help="dimension (sigma, xk, yk)")
    g.add_argument("--k", type=int, help="level (xk, yk, gk) or size (random_disk triangles, random_tree vertices)")
    g.add_argument("--seed", type=int)
    g.add_argument("--out", help="output path (default: stdout)")
    _add_config_flags(g)

    a = sub.add_parser("analyze", help="all invariants of a complex file")
    a.add_argument("file")
    a.add_argument("--dims", help="comma-separated dimensions (default: all)")
    a.add_argument("--structural-only", action="store_true", help="skip brute-force Cheeger sweeps")
    a.add_argument("--format", choices=("json", "text", "csv"), default="json")
    a.add_argument("--out", help="output path (default: stdout)")
    _add_config_flags(a)

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--suite", choices=("paper", "quick"), default="paper")
    v.add_argument("--m", type=int, default=2)
    v.add_argument("--kmax", type=int, default=5)
    v.add_argument("--seeds", type=int, default=50)
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--no-timing", action="store_true", help="omit runtimes (byte-stable JSON)")
    v.add_argument("--out", help="also write the JSON report here")
    _add_config_flags(v)

    d = sub.add_parser("dual", help="dual graph with border facets as JSON")
    d.add_argument("file")
    d.add_argument("--out")
    return parser


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read(path: str):
    return load_document(Path(path).read_bytes())


def cmd_generate(args) -> int:
    cfg = _config(args)
    seed = args.seed if args.seed is not None else cfg.seed
    need = FAMILIES[args.family]
    missing = [f"--{p}" for p in need if getattr(args, p) is None]
    if missing:
        raise ValueError(f"family {args.family!r} needs {' and '.join(missing)}")
    spec = FamilySpec(
        args.family,
        args.m if "m" in need else None,
        args.k if "k" in need else None,
        seed if args.family.startswith("random") else None,
    )
    X = spec.build()
    meta = spec.metadata()
    name = "_".join([args.family] + [f"{k}{meta[k]}" for k in ("m", "k", "seed") if k in meta])
    _emit(serialize_complex(X, name, meta).decode("utf-8"), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    cfg = _config(args)
    X = _read(args.file).complex
    dims = parse_dims(args.dims, X.dim)
    doc = analyze(X, cfg, dims, args.structural_only)
    if args.format == "json":
        text = json.dumps(doc, indent=2) + "\n"
    elif args.format == "text":
        text = text_table(doc)
    else:
        text = csv_table(doc)
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _config(args)
    report = run_suite(args.suite, args.m, args.kmax, args.seeds, cfg, args.threads)
    timing = not args.no_timing
    sys.stdout.write(report.to_json(timing) if args.format == "json" else report.to_text())
    if args.out:
        Path(args.out).write_text(report.to_json(timing), encoding="utf-8")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_dual(args) -> int:
    G = dual_graph(_read(args.file).complex)
    _emit(json.dumps(G.to_document()) + "\n", args.out)
    return EXIT_OK


COMMANDS = {"generate": cmd_generate, "analyze": cmd_analyze, "verify": cmd_verify, "dual": cmd_dual}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except BeyondBruteForceCap as exc:
        dim = f" in dimension {exc.dimension}" if exc.dimension is not None else ""
        print(f"scx: brute-force cap exceeded{dim}: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, ValidationError) as exc:
        print(f"scx: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SCXError, ValueError, OSError) as exc:
        print(f"scx: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
