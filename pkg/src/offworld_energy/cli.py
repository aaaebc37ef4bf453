"""Command-line driver::

    offworld-energy --body moon --crew human --report operations --format table
    offworld-energy --report claims
    offworld-energy --config study.json --scenario lean --report sweep \\
        --sweep body.rail_distance=0:1e6:5 --format csv --out sweep.csv

Exit status: 0 success, 2 bad arguments, 3 unreadable config, 4 config schema
violation, 5 claim fixture error, 6 invalid model input. DISCREPANT claims do
not change the exit status.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from .claims import verify_paper_claims
from .config import ConfigReadError, SchemaError, default_document, load_config
from .errors import ConfigError, FixtureError, ModelError
from .reports import FORMATS, render_claims, render_ledgers, render_ratio_reports, render_sweep
from .scenario import (
    ScenarioConfig, compare_scenarios, evaluate_construction, evaluate_operations,
    evaluate_rail_construction, parameter_sweep,
)

EXIT_OK, EXIT_USAGE, EXIT_CONFIG_READ, EXIT_SCHEMA, EXIT_FIXTURE, EXIT_MODEL = 0, 2, 3, 4, 5, 6
REPORTS = ("construction", "operations", "compare", "claims", "sweep")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="offworld-energy",
                                description="Energy budgets for Moon and Mars mining bases.")
    p.add_argument("--config", type=Path, help="JSON configuration file")
    p.add_argument("--scenario", help="named scenario from the config or the built-ins")
    p.add_argument("--body", choices=("moon", "mars"))
    p.add_argument("--crew", choices=("robotic", "human"))
    p.add_argument("--method", choices=("print3d", "conventional"))
    p.add_argument("--report", choices=REPORTS, default="operations")
    p.add_argument("--compare-with", metavar="NAME", help="second scenario for --report compare")
    p.add_argument("--sweep", metavar="PATH=START:STOP:STEPS")
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("--out", type=Path, help="write the report here instead of stdout")
    return p


def parse_sweep(text: str) -> tuple[str, list[float]]:
    try:
        path, spec = text.split("=", 1)
        start, stop, steps = spec.split(":")
        n = int(steps)
        if n < 1 or not path:
            raise ValueError
        return path, [float(v) for v in np.linspace(float(start), float(stop), n)]
    except ValueError:
        raise ConfigError(f"bad --sweep {text!r}; expected PATH=START:STOP:STEPS") from None


def select_scenario(doc, args) -> ScenarioConfig:
    if args.scenario:
        if args.scenario not in doc.scenarios:
            raise ConfigError(f"unknown scenario {args.scenario!r}")
        config = doc.scenarios[args.scenario]
    else:
        body = args.body or "moon"
        crew = args.crew or "robotic"
        method = args.method or "print3d"
        return doc.scenarios[f"{body}-{crew}-{method}"]
    changes = {}
    if args.body and args.body != config.body.name:
        changes["body"] = doc.registry.body(args.body)
        changes["include_rail"] = changes["body"].rail_distance > 0
    if args.crew:
        changes["crew_mode"] = args.crew
    if args.method:
        variant = "steel_block" if args.method == "conventional" else args.method
        changes["method"] = dataclasses.replace(config.method, variant=variant)
    return dataclasses.replace(config, **changes) if changes else config


def produce(args) -> str:
    doc = load_config(args.config) if args.config else default_document()
    if args.report == "claims":
        return render_claims(verify_paper_claims(registry=doc.registry), args.format)
    config = select_scenario(doc, args)
    if args.report == "operations":
        return render_ledgers([("operations", evaluate_operations(config))], args.format,
                              config.name, "operations")
    if args.report == "construction":
        ledgers = [("base", evaluate_construction(config))]
        rail = evaluate_rail_construction(config)
        if len(rail):
            ledgers.append(("rail", rail))
        return render_ledgers(ledgers, args.format, config.name, "construction")
    if args.report == "compare":
        if not args.compare_with:
            raise ConfigError("--report compare needs --compare-with NAME")
        if args.compare_with not in doc.scenarios:
            raise ConfigError(f"unknown scenario {args.compare_with!r}")
        other = doc.scenarios[args.compare_with]
        return render_ratio_reports([(kind, compare_scenarios(config, other, kind))
                                     for kind in ("construction", "operations")], args.format)
    if not args.sweep:
        raise ConfigError("--report sweep needs --sweep PATH=START:STOP:STEPS")
    path, values = parse_sweep(args.sweep)
    return render_sweep(path, parameter_sweep(config, path, values), args.format, config.name)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        text = produce(args)
    except ConfigReadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_READ
    except SchemaError as exc:
        print(f"error: config schema: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except FixtureError as exc:
        print(f"error: claim fixture: {exc}", file=sys.stderr)
        return EXIT_FIXTURE
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ModelError as exc:
        print(f"error: invalid model input: {exc}", file=sys.stderr)
        return EXIT_MODEL
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
