"""Command-line surface: analyze, unexpected, splitting, gen, equiv, search, verify.

All commands read and emit JSON (human-readable tables only with --pretty)
and repeat bit-identically under the same --seed.  Exit codes: 0 success,
1 claim failure, 2 usage error, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .field import QQ, make_field
from .geom import PointConfiguration, analyze_lines, projective_equivalent
from .linsys import FatPointScheme, dim_linear_system
from .unexpected import GeneralPointStrategy, detect_unexpected, splitting_type
from .configs import (
    FAMILY_IDS,
    FamilyDomainError,
    SearchSpace,
    example_quartic_config,
    example_quartic_variant,
    dual_fermat,
    family,
    random_config,
)
from .verify import SUITE_CLAIMS, run_paper_suite

EXIT_OK = 0
EXIT_CLAIM_FAILURE = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


class InputError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _emit(payload, pretty: bool = False):
    print(json.dumps(payload, indent=2 if pretty else None, sort_keys=False))


def _fail(code: str, message: str, exit_code: int) -> int:
    json.dump({"error": {"code": code, "message": message}}, sys.stderr)
    sys.stderr.write("\n")
    return exit_code


def _load_config(path: str) -> PointConfiguration:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise InputError("io", f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InputError("parse", f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from e
    try:
        return PointConfiguration.from_dict(data)
    except (KeyError, ValueError, TypeError) as e:
        raise InputError("config", f"{path}: {e}") from e


def _strategy(args) -> GeneralPointStrategy:
    return GeneralPointStrategy(
        mode="certified" if getattr(args, "certify", False) else "sampled",
        samples=getattr(args, "samples", 3),
        height=getattr(args, "height", 1000),
        seed=getattr(args, "seed", 0),
    )


def _add_strategy_flags(p):
    p.add_argument("--samples", type=int, default=3, help="sample count for the general point")
    p.add_argument("--height", type=int, default=1000, help="coordinate height bound for samples")
    p.add_argument("--seed", type=int, default=0, help="deterministic seed")
    p.add_argument("--certify", action="store_true", help="certified symbolic mode")


def _parse_params(text: str) -> dict:
    out = {}
    if not text:
        return out
    for item in text.split(","):
        if "=" not in item:
            raise InputError("params", f"bad parameter assignment {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def cmd_analyze(args) -> int:
    Z = _load_config(args.config)
    stats = analyze_lines(Z)
    systems = []
    for d in range(1, args.max_degree + 1):
        rep = dim_linear_system(FatPointScheme.of(Z), d)
        systems.append(rep.to_dict() if args.basis else {
            k: v for k, v in rep.to_dict().items() if k != "basis"
        })
    payload = {
        "points": len(Z),
        "field": Z.field.to_dict(),
        "lineStats": {
            "simple": stats.simple_count,
            "rich": {str(k): v for k, v in sorted(stats.rich_counts.items())},
            "lines": [
                {"line": [str(c) for c in ln.coeffs], "points": list(idx)}
                for ln, idx in stats.lines
            ],
        },
        "systems": systems,
    }
    if args.pretty:
        print(f"{len(Z)} points over {Z.field!r}")
        print(f"simple lines: {stats.simple_count}")
        for k, v in sorted(stats.rich_counts.items()):
            print(f"{k}-rich lines: {v}")
        print("deg  vdim  edim  dim  special")
        for s in systems:
            print(
                f"{s['degree']:>3}  {s['vdim']:>4}  {s['edim']:>4}  {s['dim']:>3}  {s['special']}"
            )
    else:
        _emit(payload)
    return EXIT_OK


def cmd_unexpected(args) -> int:
    if args.degree < 2:
        raise InputError("flags", "degree must be at least 2")
    Z = _load_config(args.config)
    rep = detect_unexpected(Z, args.degree, _strategy(args))
    _emit(rep.to_dict(), args.pretty)
    return EXIT_OK


def cmd_splitting(args) -> int:
    Z = _load_config(args.config)
    st = splitting_type(Z, _strategy(args))
    _emit(st.to_dict(), args.pretty)
    return EXIT_OK


def cmd_gen(args) -> int:
    what = args.what
    if what == "example-quartic":
        Z = example_quartic_config() if args.pair is None else example_quartic_variant(
            tuple(int(x) for x in args.pair.split(","))
        )
    elif what == "fermat":
        if args.n is None:
            raise InputError("flags", "gen fermat needs --n")
        Z = dual_fermat(args.n)
    elif what == "random":
        Z = random_config(args.points, args.height, args.seed)
    elif what == "family":
        if not args.id:
            raise InputError("flags", "gen family needs --id")
        params = _parse_params(args.params or "")
        if args.id == "fermat":
            params = {"n": int(params.get("n", args.n or 0))}
            Z = family("fermat", params)
        else:
            fld = QQ if args.cyclotomic is None else make_field("cyclotomic", args.cyclotomic)
            coerced = {k: fld.scalar(v) for k, v in params.items()}
            try:
                Z = family(args.id, coerced, field=fld)
            except FamilyDomainError as e:
                raise InputError("domain", str(e)) from e
    else:
        raise InputError("flags", f"unknown generator {what!r}")
    _emit(Z.to_dict(), args.pretty)
    return EXIT_OK


def cmd_equiv(args) -> int:
    Z1 = _load_config(args.config1)
    Z2 = _load_config(args.config2)
    verdict, T = projective_equivalent(Z1, Z2)
    payload = {"equivalent": verdict}
    if T is not None:
        payload["witness"] = [[str(e) for e in row] for row in T]
    _emit(payload, args.pretty)
    return EXIT_OK


def cmd_search(args) -> int:
    from .verify import search_uniqueness

    space = SearchSpace(
        n=args.n,
        r=args.points,
        constraint=args.constraint,
        seed=args.seed,
        limit=args.limit,
    )
    inject = (example_quartic_config(),) if args.inject_example else ()
    res = search_uniqueness(space, inject=inject, strategy=_strategy(args))
    _emit(res.to_dict(), args.pretty)
    return EXIT_OK if res.passed else EXIT_CLAIM_FAILURE


def cmd_verify(args) -> int:
    if args.suite != "paper":
        raise InputError("flags", f"unknown suite {args.suite!r}")
    claims = args.claims.split(",") if args.claims else None
    results = run_paper_suite(seed=args.seed, certify=args.certify, claims=claims)
    for r in results:
        print(f"[{r.status:>7}] {r.claim:32s} {r.runtime:7.2f}s", file=sys.stderr)
    payload = [r.to_dict() for r in results]
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)
    else:
        _emit(payload, args.pretty)
    return EXIT_OK if all(r.passed for r in results) else EXIT_CLAIM_FAILURE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fatpoints",
        description="Exact linear systems of plane curves through fat points.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="line statistics and per-degree dimensions")
    p.add_argument("config")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--basis", action="store_true", help="include basis coefficients")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("unexpected", help="unexpected-curve detection report")
    p.add_argument("config")
    p.add_argument("--degree", "-d", type=int, required=True)
    _add_strategy_flags(p)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=cmd_unexpected)

    p = sub.add_parser("splitting", help="splitting type and m(j) trace")
    p.add_argument("config")
    _add_strategy_flags(p)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=cmd_splitting)

    p = sub.add_parser("gen", help="emit a configuration as JSON")
    p.add_argument(
        "what", choices=["example-quartic", "fermat", "random", "family"]
    )
    p.add_argument("--n", type=int, default=None, help="Fermat conductor")
    p.add_argument("--pair", default=None, help="variant diagonal pair, e.g. 5,7")
    p.add_argument("--points", type=int, default=9)
    p.add_argument("--height", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--id", default=None, help=f"family id, one of {', '.join(FAMILY_IDS)}")
    p.add_argument("--params", default=None, help="family parameters, e.g. a=2,b=5")
    p.add_argument("--cyclotomic", type=int, default=None, help="conductor for family scalars")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("equiv", help="projective equivalence of two configurations")
    p.add_argument("config1")
    p.add_argument("config2")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=cmd_equiv)

    p = sub.add_parser("search", help="uniqueness search over a grid stream")
    p.add_argument("--n", type=int, default=4, help="grid side")
    p.add_argument("--points", type=int, default=9)
    p.add_argument("--constraint", default="4-rich-line")
    p.add_argument("--limit", type=int, default=300)
    p.add_argument("--inject-example", action="store_true")
    _add_strategy_flags(p)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("verify", help="run the reproduction suite")
    p.add_argument("--suite", default="paper")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--certify", action="store_true")
    p.add_argument("--claims", default=None, help=f"comma list from: {', '.join(SUITE_CLAIMS)}")
    p.add_argument("--out", default=None, help="write the JSON results to a file")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except InputError as e:
        return _fail(e.code, e.message, EXIT_INPUT if e.code != "flags" else EXIT_USAGE)
    except (ValueError, TypeError) as e:
        return _fail("input", str(e), EXIT_INPUT)


if __name__ == "__main__":
    sys.exit(main())
