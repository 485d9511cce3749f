#!/usr/bin/env python3
"""
Command-line front end: Meyer cocycle values, fibration signatures, separating-fiber
bounds and commutator-length bounds, as text or JSON.
"""

import argparse
import logging
import random
import sys
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import orjson
from pydantic import BaseModel, ConfigDict, Field

from app_settings import AppSettings, configure_logging, load_settings
from bounds import BoundReport, Verdict, check
from errors import LefschetzError
from fibration import (
    FibrationData,
    build_separating_power,
    euler_characteristic,
    monodromy_image,
    signature_over_disk,
    sp_consistency,
)
from meyer import check_cocycle_batch, check_conjugation_batch, meyer_cocycle, random_triples
from scl import SclFlavor, SclQuery, abelianization_order_hyperelliptic, commutator_count_lower, scl_lower
from wordlang import format_fibration_file, load_fibration_file, parse_word, print_word

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INPUT_ERROR = 2


# ---------- Schemas ----------
class OutputEnvelope(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    command: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    results: Dict[str, Any] = Field(default_factory=dict)
    warnings: List[str] = Field(default_factory=list)


def _jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, BaseModel):
        return {k: _jsonable(getattr(value, k)) for k in type(value).model_fields}
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def render_json(envelope: OutputEnvelope) -> str:
    payload = _jsonable(envelope)
    return orjson.dumps(payload, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2).decode("utf-8") + "\n"


def _flatten(prefix: str, value: Any, out: List[Tuple[str, Any]]) -> None:
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else k, value[k], out)
    elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append((prefix, value))


def _text_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None or value == []:
        return "-"
    if isinstance(value, list):
        return ", ".join(_text_value(v) for v in value)
    return str(value)


def render_text(envelope: OutputEnvelope) -> str:
    payload = _jsonable(envelope)
    lines = [f"command: {payload['command']}"]
    for section in ("inputs", "results"):
        rows: List[Tuple[str, Any]] = []
        _flatten("", payload[section], rows)
        if rows:
            lines.append(f"{section}:")
            lines.extend(f"  {k}: {_text_value(v)}" for k, v in rows)
    for warning in payload["warnings"]:
        lines.append(f"warning: {warning}")
    return "\n".join(lines) + "\n"


def _report_results(report: BoundReport) -> Dict[str, Any]:
    return {
        "verdict": report.verdict,
        "failed": list(report.failed),
        "entries": [_jsonable(e) for e in report.entries],
        "chain": _jsonable(report.chain),
        "torelli_chain": _jsonable(report.torelli_chain),
        "betti": _jsonable(report.betti),
    }


class LefschetzCLI:
    """One method per subcommand; each returns the envelope and the exit code"""

    def __init__(self, settings: Optional[AppSettings] = None):
        self.settings = settings or AppSettings()

    def cmd_meyer(self, args) -> Tuple[OutputEnvelope, int]:
        a = monodromy_image(parse_word(args.a, args.genus, flat=True), args.genus)
        b = monodromy_image(parse_word(args.b, args.genus, flat=True), args.genus)
        value = meyer_cocycle(a, b)
        envelope = OutputEnvelope(
            command="meyer",
            inputs={"genus": args.genus, "a": args.a, "b": args.b},
            results={"tau": value.value, "dim_v": value.dim_v},
        )
        return envelope, EXIT_OK

    def _load(self, path: str) -> FibrationData:
        return FibrationData.from_file(load_fibration_file(path))

    def cmd_signature(self, args) -> Tuple[OutputEnvelope, int]:
        data = self._load(args.file)
        sigma = signature_over_disk(data, n_jobs=self.settings.n_jobs)
        results: Dict[str, Any] = {
            "fiber_genus": data.fiber_genus,
            "base_genus": data.base_genus,
            "s": data.s,
            "n": data.n,
            "euler_characteristic": euler_characteristic(data),
            "signature_over_disk": sigma,
            "ozbagci_bound": data.n - data.s,
            "ozbagci_satisfied": sigma <= data.n - data.s,
        }
        warnings: List[str] = []
        code = EXIT_OK
        if len(data.flat_pairs) == data.base_genus:
            results["sp_consistent"] = sp_consistency(data)
        else:
            warnings.append(
                f"{len(data.flat_pairs)} flat pair(s) for base genus {data.base_genus}; Sp-consistency not checked"
            )
        if data.fiber_genus >= 2 and data.base_genus >= 1:
            report = check(data, torelli=args.torelli)
            results["report"] = _report_results(report)
            if args.strict and report.verdict is Verdict.NO_SUCH_FIBRATION:
                code = EXIT_VERDICT
        else:
            warnings.append("separating-fiber bounds need fiber genus >= 2 and base genus >= 1; report skipped")
        envelope = OutputEnvelope(
            command="signature",
            inputs={"file": args.file, "word": print_word(data.word)},
            results=results,
            warnings=warnings,
        )
        return envelope, code

    def cmd_verify(self, args) -> Tuple[OutputEnvelope, int]:
        data = self._load(args.file)
        consistent = sp_consistency(data)
        envelope = OutputEnvelope(
            command="verify",
            inputs={"file": args.file},
            results={"sp_consistent": consistent},
            warnings=["Sp-consistency is necessary, not sufficient, for the fibration to exist"],
        )
        return envelope, EXIT_VERDICT if args.strict and not consistent else EXIT_OK

    def cmd_bounds(self, args) -> Tuple[OutputEnvelope, int]:
        report = check(base_genus=args.g, fiber_genus=args.h, s=args.s, n=args.n, torelli=args.torelli)
        warnings = []
        if report.betti.vacuous:
            warnings.append("s = 0: the b2- >= s + 1 estimate reduces to the fiber class")
        envelope = OutputEnvelope(
            command="bounds",
            inputs={"g": args.g, "h": args.h, "s": args.s, "n": args.n, "torelli": args.torelli},
            results=_report_results(report),
            warnings=warnings,
        )
        failed = args.strict and report.verdict is Verdict.NO_SUCH_FIBRATION
        return envelope, EXIT_VERDICT if failed else EXIT_OK

    def cmd_scl(self, args) -> Tuple[OutputEnvelope, int]:
        query = SclQuery(
            genus=args.genus,
            flavor=SclFlavor(args.flavor),
            power=args.power,
            factors=args.factors,
            side_genus=args.side_genus,
            boundary_components=args.boundary,
            marked_points=args.marked,
        )
        bound = scl_lower(query)
        results: Dict[str, Any] = {"scl_lower": bound, "positive": bound > 0}
        if query.flavor is SclFlavor.HYPERELLIPTIC:
            results["abelianization_order"] = abelianization_order_hyperelliptic(args.genus)
        warnings = []
        if args.boundary or args.marked:
            warnings.append("boundary components and marked points are recorded only; the closed-surface bound is reported")
        envelope = OutputEnvelope(
            command="scl",
            inputs=_jsonable(query),
            results=results,
            warnings=warnings,
        )
        return envelope, EXIT_OK

    def cmd_commutators(self, args) -> Tuple[OutputEnvelope, int]:
        envelope = OutputEnvelope(
            command="commutators",
            inputs={"genus": args.genus, "power": args.power},
            results={"min_commutators": commutator_count_lower(args.genus, args.power)},
        )
        return envelope, EXIT_OK

    def cmd_construct(self, args) -> Tuple[OutputEnvelope, int]:
        data = build_separating_power(args.genus, args.power, args.side_genus, args.base_genus)
        results: Dict[str, Any] = {
            "file": format_fibration_file(data.to_file()),
            "s": data.s,
            "n": data.n,
            "euler_characteristic": euler_characteristic(data),
            "sp_consistent": sp_consistency(data),
        }
        code = EXIT_OK
        warnings = []
        if data.base_genus >= 1:
            report = check(data)
            results["report"] = _report_results(report)
            if args.strict and report.verdict is Verdict.NO_SUCH_FIBRATION:
                code = EXIT_VERDICT
        else:
            warnings.append("base genus 0: separating-fiber bounds do not apply")
        envelope = OutputEnvelope(
            command="construct",
            inputs={"genus": args.genus, "power": args.power, "side_genus": args.side_genus,
                    "base_genus": args.base_genus},
            results=results,
            warnings=warnings,
        )
        return envelope, code

    def cmd_cocycle_check(self, args) -> Tuple[OutputEnvelope, int]:
        seed = args.seed if args.seed is not None else self.settings.default_seed
        rng = random.Random(seed)
        triples = random_triples(rng, args.genus, args.samples, args.max_length)
        cocycle_failures = check_cocycle_batch(triples, n_jobs=self.settings.n_jobs)
        conjugation_failures = check_conjugation_batch(triples, n_jobs=self.settings.n_jobs)
        envelope = OutputEnvelope(
            command="cocycle-check",
            inputs={"genus": args.genus, "samples": args.samples, "seed": seed, "max_length": args.max_length},
            results={
                "cocycle_failures": len(cocycle_failures),
                "conjugation_failures": len(conjugation_failures),
            },
        )
        failed = cocycle_failures or conjugation_failures
        return envelope, EXIT_VERDICT if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefschetz",
        description="Signatures of Lefschetz fibrations and commutator-length bounds in mapping class groups",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, allow_abbrev=False)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        return p

    p = add("meyer", "Meyer cocycle of two words")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--a", default="", help="first word")
    p.add_argument("--b", default="", help="second word")

    p = add("signature", "invariants of a fibration file")
    p.add_argument("--file", required=True)
    p.add_argument("--torelli", action="store_true", help="also apply the Torelli bound")
    p.add_argument("--strict", action="store_true", help="exit 1 on a NoSuchFibration verdict")

    p = add("verify", "Sp-consistency of a fibration file")
    p.add_argument("--file", required=True)
    p.add_argument("--strict", action="store_true", help="exit 1 when inconsistent")

    p = add("bounds", "separating-fiber bounds for (g, h, s, n)")
    p.add_argument("--g", "--base-genus", dest="g", type=int, required=True)
    p.add_argument("--h", "--fiber-genus", dest="h", type=int, required=True)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--torelli", action="store_true")
    p.add_argument("--strict", action="store_true", help="exit 1 on a NoSuchFibration verdict")

    p = add("scl", "stable commutator length lower bound")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--flavor", choices=[f.value for f in SclFlavor], default=SclFlavor.FULL.value)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--power", type=int)
    group.add_argument("--factors", type=int)
    p.add_argument("--side-genus", dest="side_genus", type=int)
    p.add_argument("--boundary", type=int, default=0, help="boundary components (metadata)")
    p.add_argument("--marked", type=int, default=0, help="marked points (metadata)")

    p = add("commutators", "minimal number of commutators for t_a^k")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--power", type=int, required=True)

    p = add("construct", "fibration with k separating fibers glued to a flat bundle")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--power", type=int, required=True)
    p.add_argument("--side-genus", dest="side_genus", type=int, default=1)
    p.add_argument("--base-genus", dest="base_genus", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="exit 1 on a NoSuchFibration verdict")

    p = add("cocycle-check", "randomized cocycle and conjugation checks")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-length", dest="max_length", type=int, default=10)
    return parser


def main(argv: Optional[Sequence[str]] = None, settings: Optional[AppSettings] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if settings is None:
            settings = load_settings()
            configure_logging(settings)
        cli = LefschetzCLI(settings)
        handler = getattr(cli, "cmd_" + args.command.replace("-", "_"))
        logger.debug(f"running {args.command} with n_jobs={settings.n_jobs}")
        envelope, code = handler(args)
    except (LefschetzError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    sys.stdout.write(render_json(envelope) if args.json else render_text(envelope))
    return code


if __name__ == "__main__":
    sys.exit(main())
