#!/usr/bin/env python
"""
opalg: command-line front end for operated polynomial identities.

    opalg parse     "L(x*y) - L(x)*y"              bind and echo DSL input
    opalg compare   o "L^2(x*y)" "L(x)*L(y)"       LT / EQ / GT
    opalg leading   dt "x*L(y) + L(x*y)"           leading monomial
    opalg reduce    --order o --opi new-identity-C --mode pattern --budget 2 "L(x)*L^2(y)"
    opalg check-gs  --order dt --opi differential
    opalg catalog

Exit codes: 0 success / AllTrivialWithinBounds, 1 CounterexampleFound or
StabilityViolation, 2 usage, parse or configuration errors, 3
InconclusiveWithinLimits.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

# --------------------------------------------------------------------
# Ensure repo root on sys.path
# --------------------------------------------------------------------
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

# --------------------------------------------------------------------
# Core imports
# --------------------------------------------------------------------
from core.errors import ConfigError, DSLSyntaxError, OpalgError, StabilityViolation
from core.orders import OrderKind, compare
from core.patterns import OPIPattern
from core.run_config import BoundsConfig, RunConfig
from core.words import Alphabet
from infra.env import ensure_env_loaded
from infra.traces_store import log_trace

from opalg.catalog import all_patterns, lookup
from opalg.dsl import parse, parse_polynomial, parse_word, render
from opalg.gs_engine import InstantiationBounds, check_gs
from opalg.rewrite_engine import ContextStrategy, ReductionMode, RewriteEngine

logger = logging.getLogger("opalg")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


# --------------------------------------------------------------------
# Helpers
# --------------------------------------------------------------------
def _json_fallback(o: Any) -> Any:
    """
    Fallback serializer for pretty():
      - If object has .to_dict(), use that
      - If it's a dataclass, use asdict()
      - Otherwise, use str()
    """
    if hasattr(o, "to_dict") and callable(getattr(o, "to_dict")):
        return o.to_dict()
    if is_dataclass(o):
        return asdict(o)
    return str(o)


def pretty(obj: Any) -> None:
    """Print one JSON document, robust to custom types."""
    print(json.dumps(obj, indent=2, ensure_ascii=False, default=_json_fallback))


def _read_input(args: argparse.Namespace) -> str:
    if getattr(args, "file", None):
        path = Path(args.file)
        if not path.exists():
            raise FileNotFoundError(f"Input file not found: {path}")
        return path.read_text(encoding="utf-8")
    text = getattr(args, "input", None)
    if text is None or text == "-":
        return sys.stdin.read()
    return text


def _parse_params(text: Optional[str]) -> Dict[str, str]:
    params: Dict[str, str] = {}
    if not text:
        return params
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ConfigError(f"Bad parameter binding '{item}' (expected name=value)")
        name, value = (s.strip() for s in item.split("=", 1))
        try:
            Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"Parameter '{name}' needs an exact rational value, got '{value}'") from None
        params[name] = value
    return params


def _split_ids(text: Optional[str]) -> List[str]:
    return [s.strip() for s in (text or "").split(",") if s.strip()]


# --------------------------------------------------------------------
# Settings: CLI flag > environment > config file > default
# --------------------------------------------------------------------
def load_settings(args: argparse.Namespace) -> RunConfig:
    ensure_env_loaded()
    config = RunConfig.load_from_file(Path(args.config)) if args.config else RunConfig()
    config.apply_env()

    if args.format:
        config.output_format = args.format
    if args.trace_file:
        config.trace_file = args.trace_file
    if getattr(args, "order", None):
        config.order = args.order
    if getattr(args, "budget", None) is not None:
        config.budget = args.budget
    if getattr(args, "mode", None):
        config.mode = args.mode
    config.params.update(_parse_params(getattr(args, "params", None)))

    bounds = config.bounds
    config.bounds = BoundsConfig(
        max_z_degree=_pick(getattr(args, "max_zdeg", None), bounds.max_z_degree),
        max_l_degree=_pick(getattr(args, "max_ldeg", None), bounds.max_l_degree),
        max_depth=_pick(getattr(args, "max_depth", None), bounds.max_depth),
        pool_size=_pick(getattr(args, "pool", None), bounds.pool_size),
    )
    if config.output_format not in {"text", "json"}:
        raise ConfigError(f"Unknown output format '{config.output_format}'")
    return config


def _pick(flag, fallback):
    return fallback if flag is None else flag


def _alphabet(args: argparse.Namespace):
    """(alphabet, infer): declared generators from --gens, else inferred."""
    names = _split_ids(getattr(args, "gens", None))
    return (Alphabet(names), False) if names else (Alphabet(), True)


def _require_order(config: RunConfig) -> OrderKind:
    if not config.order:
        raise ConfigError("No order given (use --order or set `order` in the config file)")
    return OrderKind.parse(config.order)


def resolve_patterns(args: argparse.Namespace, config: RunConfig) -> List[OPIPattern]:
    """--opi ids, looked up in --source definitions first, then in the catalog."""
    local: Dict[str, OPIPattern] = {}
    if getattr(args, "source", None):
        path = Path(args.source)
        if not path.exists():
            raise FileNotFoundError(f"Source file not found: {path}")
        spec = parse(path.read_text(encoding="utf-8"), params=config.params)
        local = dict(spec.patterns)
        if spec.order and not config.order:
            config.order = str(spec.order)
        for name, value in spec.params.items():
            config.params.setdefault(name, str(value))

    ids = _split_ids(getattr(args, "opi", None))
    if not ids:
        if local:
            return list(local.values())
        raise ConfigError("No OPI given (use --opi NAME[,NAME...] or --source FILE)")
    return [local[i] if i in local else lookup(i) for i in ids]


# --------------------------------------------------------------------
# Subcommands
# --------------------------------------------------------------------
def cmd_parse(args: argparse.Namespace, config: RunConfig) -> int:
    spec = parse(_read_input(args), gens=_split_ids(args.gens) or None, params=config.params)
    for d in spec.warnings:
        print(d.render(args.file or "<input>"), file=sys.stderr)

    if config.output_format == "json":
        pretty(
            {
                "generators": spec.alphabet.names,
                "order": str(spec.order) if spec.order else None,
                "params": {k: str(v) for k, v in spec.params.items()},
                "patterns": [p.to_dict() for p in spec.pattern_list],
                "payloads": [render(p, order=spec.order) for p in spec.payloads],
            }
        )
        return EXIT_OK

    if spec.alphabet.names:
        print(f"gens {' '.join(spec.alphabet.names)} ;")
    if spec.order:
        print(f"order {spec.order} ;")
    if spec.params:
        print("params " + ", ".join(f"{k} = {v}" for k, v in spec.params.items()) + " ;")
    for p in spec.pattern_list:
        if p.id in spec.catalog_refs:
            print(f'use "{p.id}" ;')
        else:
            print(f"opi {p.id}({', '.join(p.variables)}) = {p.render_body()} ;")
    for payload in spec.payloads:
        print(f"{render(payload, order=spec.order)} ;")
    return EXIT_OK


def cmd_compare(args: argparse.Namespace, config: RunConfig) -> int:
    order = OrderKind.parse(args.order_name)
    alphabet, infer = _alphabet(args)
    u = parse_word(args.u, alphabet=alphabet, infer=infer)
    v = parse_word(args.v, alphabet=alphabet, infer=infer)
    result = compare(order, u, v)
    if config.output_format == "json":
        pretty({"order": str(order), "u": str(u), "v": str(v), "result": result.symbol})
    else:
        print(result.symbol)
    return EXIT_OK


def cmd_leading(args: argparse.Namespace, config: RunConfig) -> int:
    order = OrderKind.parse(args.order_name)
    alphabet, infer = _alphabet(args)
    p = parse_polynomial(args.poly, alphabet=alphabet, params=config.params, infer=infer)
    lead = p.leading(order)
    if config.output_format == "json":
        pretty({"order": str(order), "monomial": str(lead.monomial), "coefficient": str(lead.coefficient)})
    else:
        print(lead.monomial)
        print(f"coefficient: {lead.coefficient}")
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace, config: RunConfig) -> int:
    patterns = resolve_patterns(args, config)
    order = _require_order(config)
    alphabet, infer = _alphabet(args)
    p = parse_polynomial(_read_input(args), alphabet=alphabet, params=config.params, infer=infer)

    try:
        mode = ReductionMode(config.mode)
    except ValueError:
        raise ConfigError(f"Unknown reduction mode '{config.mode}' (expected instance or pattern)") from None
    if mode == ReductionMode.PATTERN and config.budget < 1:
        raise ConfigError(f"budget must be a positive integer, got {config.budget}")
    engine = RewriteEngine(patterns, order, config.params, mode, ContextStrategy(args.strategy))
    trace = engine.reduce(p, budget=config.budget if mode == ReductionMode.PATTERN else None)

    if config.trace_file:
        log_trace({"command": "reduce", "patterns": [x.id for x in patterns], **trace.to_dict()}, config.trace_file)
    if config.output_format == "json":
        pretty(trace.step_rows())
    else:
        print(trace.render_text())
    return EXIT_OK


def cmd_check_gs(args: argparse.Namespace, config: RunConfig) -> int:
    patterns = resolve_patterns(args, config)
    order = _require_order(config)
    b = config.bounds
    bounds = InstantiationBounds(b.max_z_degree, b.max_l_degree, b.max_depth, b.pool_size)
    report = check_gs(
        patterns,
        order,
        bounds=bounds,
        params=config.params,
        emit_records=args.emit_records,
        fail_fast=args.fail_fast,
    )
    if config.trace_file:
        summary = report.to_dict()
        summary.pop("records", None)
        log_trace({"command": "check-gs", **summary}, config.trace_file)
    if config.output_format == "json":
        pretty(report.to_dict())
    else:
        print(report.render_text())
    return report.exit_code


def cmd_catalog(args: argparse.Namespace, config: RunConfig) -> int:
    patterns = all_patterns()
    if args.family:
        patterns = [p for p in patterns if p.family == args.family]
    if config.output_format == "json":
        pretty([p.to_dict() for p in patterns])
        return EXIT_OK
    for p in patterns:
        orders = ", ".join(str(o) for o in p.sound_orders) or "-"
        extra = [f"orders: {orders}"]
        if p.designated_leads:
            extra.append("leads: " + ", ".join(f"{o} {s}" for o, s in p.designated_leads))
        if p.nonzero_params:
            extra.append("requires " + ", ".join(f"{n} != 0" for n in p.nonzero_params))
        if p.unstable_orders:
            extra.append("unstable under " + ", ".join(str(o) for o in p.unstable_orders))
        if not p.classified:
            extra.append("outside the classification")
        print(f"{p.id:<26} {p.render_body()}")
        print(f"{'':<26} [{p.family}] " + "; ".join(extra))
    return EXIT_OK


# --------------------------------------------------------------------
# Entry Point
# --------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=None, help="Output format (default text).")
    common.add_argument("--config", type=str, default=None, help="YAML or JSON run configuration.")
    common.add_argument("--gens", type=str, default=None, help="Declared generators in rank order, e.g. x,y,z.")
    common.add_argument("--verbose", action="store_true", help="Log progress to stderr.")
    common.add_argument("--trace-file", type=str, default=None, help="Append a JSONL run record here.")

    parser = argparse.ArgumentParser(prog="opalg", description="Operated polynomial identities: orders, rewriting, GS checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="Parse and bind DSL input")
    p.add_argument("input", nargs="?", default=None, help="DSL text, or '-' / omitted for stdin")
    p.add_argument("--file", type=str, default=None, help="Read DSL input from a file")
    p.add_argument("--params", type=str, default=None)
    p.set_defaults(handler=cmd_parse)

    p = sub.add_parser("compare", parents=[common], help="Compare two words under an order")
    p.add_argument("order_name", metavar="ORDER")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("leading", parents=[common], help="Leading monomial of a polynomial")
    p.add_argument("order_name", metavar="ORDER")
    p.add_argument("poly")
    p.add_argument("--params", type=str, default=None)
    p.set_defaults(handler=cmd_leading)

    p = sub.add_parser("reduce", parents=[common], help="Reduce a polynomial by OPI rules")
    p.add_argument("input", nargs="?", default=None, help="Polynomial, or '-' / omitted for stdin")
    p.add_argument("--file", type=str, default=None)
    p.add_argument("--order", type=str, default=None)
    p.add_argument("--opi", type=str, default=None, help="Comma-separated OPI ids")
    p.add_argument("--source", type=str, default=None, help="DSL file with OPI definitions")
    p.add_argument("--mode", choices=[m.value for m in ReductionMode], default=None)
    p.add_argument("--budget", type=int, default=None, help="Pattern-mode step budget (default 64, env OPALG_BUDGET)")
    p.add_argument("--strategy", choices=[s.value for s in ContextStrategy], default=ContextStrategy.CANONICAL.value)
    p.add_argument("--params", type=str, default=None, help="e.g. d=1,b=1,lambda=0")
    p.set_defaults(handler=cmd_reduce)

    p = sub.add_parser("check-gs", parents=[common], help="Bounded Gröbner-Shirshov check of a pairing")
    p.add_argument("--order", type=str, default=None)
    p.add_argument("--opi", type=str, default=None)
    p.add_argument("--source", type=str, default=None)
    p.add_argument("--params", type=str, default=None)
    p.add_argument("--max-zdeg", dest="max_zdeg", type=int, default=None)
    p.add_argument("--max-ldeg", dest="max_ldeg", type=int, default=None)
    p.add_argument("--max-depth", dest="max_depth", type=int, default=None)
    p.add_argument("--pool", type=int, default=None, help="Generator pool size (>= 3)")
    p.add_argument("--emit-records", action="store_true")
    p.add_argument("--fail-fast", action="store_true")
    p.set_defaults(handler=cmd_check_gs)

    p = sub.add_parser("catalog", parents=[common], help="List the OPI catalog")
    p.add_argument("--family", type=str, default=None)
    p.set_defaults(handler=cmd_catalog)
    return parser


def _fail(config_format: str, kind: str, message: str, code: int, extra: Optional[Dict[str, Any]] = None) -> int:
    if config_format == "json":
        pretty({"error": kind, "message": message, **(extra or {})})
    else:
        print(f"❌ {kind}: {message}", file=sys.stderr)
    return code


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="[%(name)s] %(message)s",
    )

    fmt = args.format or "text"
    try:
        config = load_settings(args)
        fmt = config.output_format
        return args.handler(args, config)
    except StabilityViolation as e:
        return _fail(fmt, "StabilityViolation", str(e), EXIT_FAILED, {"violation": e.to_dict()})
    except DSLSyntaxError as e:
        source = getattr(args, "file", None) or "<input>"
        if fmt == "json":
            pretty({"error": "DSLSyntaxError", "diagnostics": [asdict(d) for d in e.diagnostics]})
        else:
            for d in e.diagnostics:
                print(d.render(source), file=sys.stderr)
        return EXIT_USAGE
    except (OpalgError, FileNotFoundError) as e:
        return _fail(fmt, type(e).__name__, str(e), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
