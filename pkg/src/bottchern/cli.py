"""Command-line front end: ``analyze``, ``torus`` and ``verify``.

Exit codes: 0 success, 1 property failure, 2 validation failure, 3 parse error.
Every report embeds the tool version and the resolved configuration, and is
byte-identical for identical input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .double_complex import (
    THEORIES,
    ComplexParseError,
    DoubleComplex,
    check_theorem_equivalences,
    cohomology_tables,
    ddbar_lemma_in_degree,
    lattice_invariants,
    natural_maps,
)
from .double_complex.cohomology import _Cache
from .flat import (
    PAIRS,
    ModelParseError,
    FlatBiGcModel,
    diamond_csv,
    diamond_text,
    torus_cohomology,
    validate_model,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_PROPERTY, EXIT_VALIDATION, EXIT_PARSE = 0, 1, 2, 3
FORMATS = ("json", "csv", "text")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are parse errors; argparse's own exit status 2 is taken by validation
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    theories: list = field(default_factory=list)
    pair: str | None = None
    radius: int | None = None
    seed: int | None = None
    count: int | None = None
    suite: str | None = None
    inject_fault: bool | None = None
    output: str | None = None
    format: str = "json"

    def check(self):
        if self.radius is not None and self.radius < 0:
            raise UsageError("--mode-box must be >= 0")
        if self.count is not None and self.count < 1:
            raise UsageError("--count must be >= 1")
        bad = [t for t in self.theories if t not in THEORIES]
        if bad:
            raise UsageError(f"unknown theories {bad}; choose from {','.join(THEORIES)}")

    def to_json(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None and v != []}


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _header(cfg: RunConfig) -> dict:
    return {"tool": "bottchern", "version": __version__, "config": cfg.to_json()}


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _write(cfg: RunConfig, text: str):
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)


# -- analyze -------------------------------------------------------------------


def _bidegree_grid(dims: dict, points) -> str:
    ps = sorted({p for p, _ in points}, reverse=True)
    qs = sorted({q for _, q in points})
    if not ps:
        return "  (empty)\n"
    width = max([len(str(d)) for d in dims.values()] + [len(str(x)) for x in ps + qs] + [1])
    lines = [" " * (width + 3) + " ".join(f"{q:>{width}}" for q in qs)]
    for p in ps:
        cells = " ".join(f"{dims.get((p, q), 0) if (p, q) in points else '.':>{width}}" for q in qs)
        lines.append(f"{p:>{width}} | {cells}")
    return "\n".join(lines) + "\n"


def analyze_report(c: DoubleComplex) -> dict:
    cache = _Cache(c)
    tables = cohomology_tables(cache, with_representatives=True)
    inv = lattice_invariants(cache)
    maps = natural_maps(cache)
    points = sorted(c.hull_points())
    degrees = sorted({p + q for p, q in c.support})
    return {
        "complex": c.to_json(),
        "cohomology": {t: tables[t].to_json(with_representatives=True) for t in THEORIES},
        "lattice_invariants": [{"p": p, "q": q, **inv[(p, q)].to_json()} for p, q in points],
        "lemma": {
            "by_bidegree": [{"p": p, "q": q, "holds": cache.at(p, q).lemma_holds()} for p, q in points],
            "by_total_degree": [{"k": k, "holds": ddbar_lemma_in_degree(cache, k)} for k in degrees],
        },
        "maps": maps.to_json(),
        "theorem": check_theorem_equivalences(cache).to_json(),
    }


def _analyze_csv(c: DoubleComplex) -> str:
    cache = _Cache(c)
    tables = cohomology_tables(cache, ("bc", "aeppli", "dprime", "dsecond"), with_representatives=False)
    inv = lattice_invariants(cache)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    fields = list(next(iter(inv.values())).to_json()) if inv else []
    w.writerow(["p", "q", "dim", "bc", "aeppli", "dprime", "dsecond", "lemma", *fields])
    for p, q in sorted(c.hull_points()):
        x = inv[(p, q)].to_json()
        w.writerow([
            p, q, c.dim(p, q), *(tables[t].dims.get((p, q), 0) for t in ("bc", "aeppli", "dprime", "dsecond")),
            int(cache.at(p, q).lemma_holds()), *(x[f] for f in fields),
        ])
    return buf.getvalue()


def _analyze_text(c: DoubleComplex, header: dict) -> str:
    cache = _Cache(c)
    tables = cohomology_tables(cache, with_representatives=False)
    points = set(c.hull_points())
    out = [f"bottchern {header['version']} analyze {header['config']['inputs'][0]}\n"]
    for t in ("bc", "aeppli", "dprime", "dsecond"):
        out.append(f"\n{t} (rows p descending, columns q):\n")
        out.append(_bidegree_grid(tables[t].dims, points))
    betti = tables["derham"].dims
    out.append("\nderham: " + ", ".join(f"b{k}={d}" for k, d in sorted(betti.items())) + "\n")
    rec = check_theorem_equivalences(cache)
    failing = sorted(pq for pq in points if not cache.at(*pq).lemma_holds())
    out.append(f"\nd'd''-lemma: {'holds' if rec.lemma else 'fails at ' + ', '.join(map(str, failing))}\n")
    out.append("theorem conditions: " + " ".join(f"{k}={v}" for k, v in rec.to_json().items()) + "\n")
    return "".join(out)


def cmd_analyze(cfg: RunConfig) -> int:
    try:
        c = DoubleComplex.from_json(_read(cfg.inputs[0]))
    except ComplexParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    bad = c.validate()
    if bad:
        for v in bad:
            print(f"validation failure: {v}", file=sys.stderr)
        return EXIT_VALIDATION
    header = _header(cfg)
    if cfg.format == "json":
        _write(cfg, _dump({**header, **analyze_report(c)}))
    elif cfg.format == "csv":
        _write(cfg, _analyze_csv(c))
    else:
        _write(cfg, _analyze_text(c, header))
    return EXIT_OK


# -- torus ---------------------------------------------------------------------


def _torus_csv(report) -> str:
    parts = []
    for t in report.theories:
        if t == "derham":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["index", "dim"])
            for k, d in sorted(report.totals[t].items()):
                w.writerow([k, d])
            parts.append(f"# {t}\n" + buf.getvalue())
        else:
            parts.append(f"# {t}\n" + diamond_csv(report.totals[t], report.slices, report.n))
    return "\n".join(parts)


def _torus_text(report, header: dict) -> str:
    out = [
        f"bottchern {header['version']} torus {report.label!r} pair={report.pair} mode-box={report.radius}\n",
        f"nonzero modes contributing: {len(report.nonzero_modes)}\n",
    ]
    for t in report.theories:
        if t == "derham":
            out.append(f"\n{t}: " + ", ".join(f"{k}:{d}" for k, d in sorted(report.totals[t].items())) + "\n")
        else:
            out.append(f"\n{t} (rows p descending, columns q; '.' marks an absent slice):\n")
            out.append(diamond_text(report.totals[t], report.slices, report.n))
    return "".join(out)


def cmd_torus(cfg: RunConfig, workers: int = 1) -> int:
    try:
        model = FlatBiGcModel.from_json(_read(cfg.inputs[0]))
    except ModelParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    bad = validate_model(model)
    if bad:
        for v in bad:
            print(f"validation failure: {v}", file=sys.stderr)
        return EXIT_VALIDATION
    report = torus_cohomology(model, cfg.theories, cfg.pair, cfg.radius, workers=workers)
    header = _header(cfg)
    if cfg.format == "json":
        _write(cfg, _dump({**header, "model": model.to_json(), **report.to_json()}))
    elif cfg.format == "csv":
        _write(cfg, _torus_csv(report))
    else:
        _write(cfg, _torus_text(report, header))
    return EXIT_OK


# -- verify --------------------------------------------------------------------


def cmd_verify(cfg: RunConfig) -> int:
    res = run_suite(cfg.suite, cfg.seed, cfg.count, inject_fault=bool(cfg.inject_fault))
    doc = {**_header(cfg), **res.to_json()}
    if cfg.format == "json":
        _write(cfg, _dump(doc))
    else:
        lines = [f"bottchern {__version__} verify suite={cfg.suite} seed={cfg.seed} count={cfg.count}"]
        for p in doc["properties"]:
            mark = "PASS" if p["passed"] == p["runs"] else "FAIL"
            lines.append(f"{mark} {p['passed']}/{p['runs']} {p['name']}")
        for f in res.failures:
            lines.append(f"failure: {f['property']} on {f['instance']}")
        for f in res.validation_failures:
            lines.append(f"validation failure: {f['instance']}: {'; '.join(f['violations'])}")
        _write(cfg, "\n".join(lines) + "\n")
    for f in res.validation_failures:
        print(f"validation failure: {f['instance']}: {'; '.join(f['violations'])}", file=sys.stderr)
    if res.validation_failures:
        return EXIT_VALIDATION
    return EXIT_PROPERTY if res.failures else EXIT_OK


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bottchern", description="Exact Bott-Chern and Aeppli cohomology reports.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="all five cohomologies and the lemma diagnostics of a JSON double complex")
    a.add_argument("--input", required=True)
    a.add_argument("--output")
    a.add_argument("--format", choices=FORMATS, default="json")

    t = sub.add_parser("torus", help="cohomology of a flat torus model summed over a box of Fourier modes")
    t.add_argument("--model", required=True)
    t.add_argument("--mode-box", type=int, default=2, dest="radius")
    t.add_argument("--theories", default="bc", help="comma-separated subset of " + ",".join(THEORIES))
    t.add_argument("--pair", choices=tuple(PAIRS), default="pp")
    t.add_argument("--workers", type=int, default=1, help="processes for the mode sweep (output does not depend on it)")
    t.add_argument("--output")
    t.add_argument("--format", choices=FORMATS, default="json")

    v = sub.add_parser("verify", help="run a property suite over generated inputs")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=50)
    v.add_argument("--inject-fault", action="store_true", help="corrupt one sign in the first generated complex")
    v.add_argument("--output")
    v.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def _config(args) -> RunConfig:
    if args.command == "analyze":
        return RunConfig("analyze", [args.input], output=args.output, format=args.format)
    if args.command == "torus":
        theories = [x.strip() for x in args.theories.split(",") if x.strip()]
        if not theories:
            raise UsageError("--theories must name at least one theory")
        return RunConfig("torus", [args.model], theories, args.pair, args.radius, output=args.output, format=args.format)
    return RunConfig(
        "verify", seed=args.seed, count=args.count, suite=args.suite,
        inject_fault=args.inject_fault, output=args.output, format=args.format,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        cfg.check()
        if cfg.command == "analyze":
            return cmd_analyze(cfg)
        if cfg.command == "torus":
            return cmd_torus(cfg, workers=max(1, args.workers))
        return cmd_verify(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
