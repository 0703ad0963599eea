"""``banachlab`` command line: classify, witness and verify."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report, specs, verify
from .core import BanachLabError, Config, NotRepresentable, Status

EXIT_OK, EXIT_USAGE, EXIT_UNKNOWN, EXIT_REFUSED, EXIT_VERIFY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for Unknown verdicts here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_indices(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"need 1 <= A <= B, got {text!r}")
    return range(lo, hi + 1)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="JSON file with Config fields")
    common.add_argument("--tol", type=float, help="absolute tolerance for certified enclosures")
    common.add_argument("--samples", type=int, help="initial number of circle arcs")
    common.add_argument("--seed", type=int, default=None, help="seed for random trials (default 0)")

    p = _Parser(prog="banachlab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", parents=[common], help="classify an element and print a JSON report")
    c.add_argument("--spec", type=Path, required=True)
    c.add_argument("--format", choices=["json"], default="json")

    w = sub.add_parser("witness", parents=[common], help="tabulate a witness sequence")
    w.add_argument("--spec", type=Path, required=True)
    w.add_argument("--kind", choices=report.WITNESS_KINDS, required=True)
    w.add_argument("--indices", type=parse_indices, default=range(1, 6), metavar="A..B")
    w.add_argument("--format", choices=["csv", "json"], default="csv")

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=verify.SUITE_NAMES)
    return p


def resolve_config(args) -> Config:
    """Flags override the config file, which overrides the defaults."""
    values = Config().to_dict()
    if args.config is not None:
        try:
            loaded = json.loads(args.config.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"--config: {exc}") from exc
        if not isinstance(loaded, dict):
            raise UsageError("--config: expected a JSON object")
        values.update(loaded)
    if args.tol is not None:
        values["abs_tol"] = args.tol
    if args.samples is not None:
        values["circle_samples"] = args.samples
    try:
        return Config.from_dict(values)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"config: {exc}") from exc


def _load(path: Path):
    try:
        spec = specs.load_spec(path)
    except OSError as exc:
        raise UsageError(f"--spec: {exc}") from exc
    return spec, specs.parse_element(spec)


def cmd_classify(args, config: Config, out) -> int:
    spec, x = _load(args.spec)
    rep = report.build_report(spec, x, config)
    out.write(json.dumps(rep, indent=2) + "\n")
    unknown = any(v["status"] == Status.UNKNOWN.value for v in rep["classification"].values())
    return EXIT_UNKNOWN if unknown else EXIT_OK


def cmd_witness(args, config: Config, out) -> int:
    from .core import classify

    spec, x = _load(args.spec)
    verdict = report.witness_verdict(classify(x, config), args.kind)
    if verdict.status is Status.REFUTED:
        print(f"refused: {args.kind} is Refuted for this element ({verdict.reason})", file=sys.stderr)
        return EXIT_REFUSED
    if verdict.status is Status.UNKNOWN:
        print(f"undecided: {args.kind} verdict is Unknown ({verdict.reason})", file=sys.stderr)
        return EXIT_UNKNOWN
    try:
        w = report.witness_sequence(x, args.kind, config)
    except NotRepresentable as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    rows = report.witness_rows(w, args.indices)
    if args.format == "csv":
        out.write(report.rows_to_csv(rows))
    else:
        out.write(json.dumps([dict(zip(report.CSV_COLUMNS, r)) for r in rows], indent=2) + "\n")
    return EXIT_OK


def cmd_verify(args, config: Config, out) -> int:
    results = verify.run_suite(args.suite, config, args.seed or 0)
    for r in results:
        out.write(r.line() + "\n")
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"verification failed: {failed[0].name}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


COMMANDS = {"classify": cmd_classify, "witness": cmd_witness, "verify": cmd_verify}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        config = resolve_config(args)
        return COMMANDS[args.command](args, config, out)
    except (UsageError, specs.SpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BanachLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN


if __name__ == "__main__":
    sys.exit(main())
