"""Command-line front door: assess, calibrate, analyze, model, serve.

Exit codes: 0 success, 1 domain or validation error, 2 I/O error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .assessment import (
    ACTIVITIES,
    ACTIVITY_TITLES,
    AssessmentConfig,
    ValidationError,
    assess,
    average_respondents,
    display,
    load_config,
    load_questionnaires,
    report_to_json,
)
from .calibration import CalibrationTarget, calibrate, case_study_targets
from .reliability import ZeroVarianceError, analyze, load_response_csv

RESIDUAL_GATE = 0.05

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_IO = 2


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _resolve_config(path: str | None) -> AssessmentConfig | None:
    path = path or os.environ.get("SPLMAT_CONFIG")
    if not path:
        return None
    return load_config(path)


def _write_output(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _report_table(report_json: dict) -> str:
    width = max(len(t) for t in ACTIVITY_TITLES.values())
    lines = [f"{'Activity':<{width}}  {'Result':>7}  Linguistic Output"]
    for activity in ACTIVITIES:
        entry = report_json[activity]
        title = ACTIVITY_TITLES[activity]
        lines.append(f"{title:<{width}}  {entry['display']:>7}  {entry['label']}")
    return "\n".join(lines)


def cmd_assess(args: argparse.Namespace) -> int:
    try:
        respondents = load_questionnaires(args.input)
        config = _resolve_config(args.config)
    except OSError as exc:
        return _fail(str(exc), EXIT_IO)
    except json.JSONDecodeError as exc:
        return _fail(f"invalid JSON: {exc}", EXIT_DOMAIN)
    except ValidationError as exc:
        for violation in exc.violations:
            print(f"error: {violation}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        return _fail(str(exc), EXIT_DOMAIN)
    report = assess(average_respondents(respondents), config)
    payload = report_to_json(report)
    if args.format == "json":
        text = json.dumps(payload, indent=2)
    else:
        text = _report_table(payload)
    try:
        _write_output(text, args.output)
    except OSError as exc:
        return _fail(str(exc), EXIT_IO)
    return EXIT_OK


def _load_targets(spec: str) -> list[CalibrationTarget]:
    if spec == "builtin":
        return case_study_targets()
    with open(spec, encoding="utf-8") as fh:
        obj = json.load(fh)
    entries = obj["targets"] if isinstance(obj, dict) else obj
    targets = []
    for entry in entries:
        targets.append(
            CalibrationTarget(
                name=entry["name"],
                answers={k: float(v) for k, v in entry["answers"].items()},
                expected={k: float(v) for k, v in entry["expected"].items()},
                labels=entry.get("labels"),
            )
        )
    if not targets:
        raise ValueError("target file contains no targets")
    return targets


def cmd_calibrate(args: argparse.Namespace) -> int:
    try:
        targets = _load_targets(args.targets)
    except OSError as exc:
        return _fail(str(exc), EXIT_IO)
    except (KeyError, ValueError) as exc:
        return _fail(f"bad targets: {exc}", EXIT_DOMAIN)
    result = calibrate(targets)
    print(json.dumps(result.to_json(), indent=2))
    if result.residual > RESIDUAL_GATE:
        print(
            f"error: best residual {result.residual:.4f} exceeds {RESIDUAL_GATE}",
            file=sys.stderr,
        )
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        matrix = load_response_csv(args.csv)
    except OSError as exc:
        return _fail(str(exc), EXIT_IO)
    except ValueError as exc:
        return _fail(str(exc), EXIT_DOMAIN)
    try:
        print(json.dumps(analyze(matrix), indent=2))
    except ZeroVarianceError as exc:
        return _fail(str(exc), EXIT_DOMAIN)
    return EXIT_OK


def cmd_model(args: argparse.Namespace) -> int:
    from .service import model_payload

    print(json.dumps(model_payload(), indent=2))
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    from .service import serve

    serve(host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splmat",
        description="Fuzzy maturity scoring for software product line processes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_assess = sub.add_parser("assess", help="score a questionnaire file")
    p_assess.add_argument("input", help="questionnaire JSON file")
    p_assess.add_argument("--config", help="tree-config JSON file (default: SPLMAT_CONFIG or built-in)")
    p_assess.add_argument("--output", help="write result to this path instead of stdout")
    p_assess.add_argument("--format", choices=("json", "table"), default="table")
    p_assess.set_defaults(func=cmd_assess)

    p_cal = sub.add_parser("calibrate", help="search tree shapes against reference results")
    p_cal.add_argument("--targets", default="builtin", help='"builtin" or a targets JSON file')
    p_cal.set_defaults(func=cmd_calibrate)

    p_an = sub.add_parser("analyze", help="questionnaire reliability analysis from CSV")
    p_an.add_argument("csv", help="CSV with a header row of item names, one row per respondent")
    p_an.set_defaults(func=cmd_analyze)

    p_model = sub.add_parser("model", help="dump fuzzy variables and rules as JSON")
    p_model.set_defaults(func=cmd_model)

    p_serve = sub.add_parser("serve", help="run the HTTP JSON API")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
