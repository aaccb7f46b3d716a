"""Command line interface.

Commands:

    viilattice classify <file>
    viilattice nac <file> --m <int>
    viilattice index <file>
    viilattice enumerate <file> --max-solutions <int>
    viilattice germ <kind> <key=value ...>
    viilattice selftest [--seed <int>]

Reports go to standard output as JSON (selftest prints plain lines),
errors to standard error.  Rational numbers are rendered exactly as
"p/q" strings, never as decimals.  Exit codes: 0 success, 1 invalid
input, 2 internal inconsistency, 3 enumeration cap refusal.  The
environment variable VII_ENUM_CAP overrides the enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .configio import config_from_text, config_to_doc
from .curves import (
    CurveConfig,
    find_cycles,
    intersection_matrix,
    is_negative_definite,
    sigma_classify,
    validate,
)
from .errors import (
    ConfigParseError,
    DomainError,
    EnumerationCapError,
    InvalidConfigError,
    StructureError,
)
from .germs import (
    EnokiGerm,
    ExactComplex,
    HopfGermPrimary,
    HopfGermStrong,
    is_contracting,
    is_parabolic,
    realize_enoki,
    validate_primary,
    validate_strong,
)
from .homology import enumerate_representations, verify_representation
from .lattice import FullCycle, LatticeClass, TypeA, TypeB, classify_normal_form
from .nac import (
    NacSolution,
    NoSolution,
    nac_structure_report,
    solve_nac,
    verify_star_recurrence,
)
from .selftest import run_all

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INTERNAL = 2
EXIT_CAP = 3

GERM_KINDS = ("hopf-strong", "hopf-primary", "enoki")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with its own status 2 on usage errors; fold that
        # into the invalid-input code and keep 2 for real inconsistencies
        return EXIT_OK if exc.code in (0, None) else EXIT_INVALID
    try:
        return args.run(args)
    except EnumerationCapError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_CAP
    except (
        ConfigParseError,
        InvalidConfigError,
        DomainError,
        StructureError,
        OSError,
    ) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="viilattice",
        description="Exact lattice invariants of curve configurations on "
        "minimal class-VII surfaces with positive second Betti number.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="full pipeline report for a configuration file")
    p.add_argument("file")
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("nac", help="anticanonical coefficients at a chosen level")
    p.add_argument("file")
    p.add_argument("--m", type=int, default=1, help="divisor level (default 1)")
    p.set_defaults(run=_cmd_nac)

    p = sub.add_parser("index", help="smallest level with integer coefficients")
    p.add_argument("file")
    p.set_defaults(run=_cmd_index)

    p = sub.add_parser("enumerate", help="canonical homology representations")
    p.add_argument("file")
    p.add_argument(
        "--max-solutions",
        type=int,
        default=None,
        help="truncate the report after this many representations",
    )
    p.set_defaults(run=_cmd_enumerate)

    p = sub.add_parser("germ", help="validate contracting-germ parameters")
    p.add_argument("kind", choices=GERM_KINDS)
    p.add_argument("params", nargs="*", metavar="key=value")
    p.set_defaults(run=_cmd_germ)

    p = sub.add_parser("selftest", help="run the built-in verification suites")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    p.set_defaults(run=_cmd_selftest)

    return parser


def _load(path: str) -> CurveConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return config_from_text(fh.read())


def _emit(doc: dict) -> None:
    print(json.dumps(_plain(doc), indent=2))


def _plain(value):
    """Recursively rewrite a report into JSON-encodable values.

    Fractions become exact "p/q" strings (integers without the slash);
    floats are allowed only inside germ reports, where they echo what the
    caller supplied.
    """
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


# --- shared report sections ---------------------------------------------------


def _nac_section(config: CurveConfig, m: int) -> tuple[dict, NacSolution | None]:
    sol = solve_nac(config, m)
    if isinstance(sol, NoSolution):
        return {"m": m, "status": "no_solution", "reason": sol.reason}, None
    # defensive recomputation straight from the matrix; a mismatch means the
    # solver and the report pipeline disagree, which is an internal error
    matrix = intersection_matrix(config)
    square = sum(
        sol.coeffs[i] * matrix[i][j] * sol.coeffs[j]
        for i in range(len(matrix))
        for j in range(len(matrix))
    )
    if square != -m * m * config.b2 or int(square) != sol.self_int_check:
        raise _InternalError(
            f"solver self-intersection check failed: {square} vs {sol.self_int_check}"
        )
    section = {
        "m": m,
        "status": "solved",
        "coeffs": list(sol.coeffs),
        "index": sol.index,
        "effective": sol.effective,
        "self_int_check": sol.self_int_check,
        "parabolic": sol.parabolic,
    }
    return section, sol


def _structure_sections(config: CurveConfig, sol: NacSolution) -> dict:
    structure = nac_structure_report(config, sol)
    stars = verify_star_recurrence(config, sol)
    return {
        "structure": {
            "ok": structure.ok,
            "inoue_ih_signature": structure.inoue_ih_signature,
            "cycles": [
                {
                    "members": list(entry.member_ids),
                    "min_coeff": entry.min_coeff,
                    "max_coeff": entry.max_coeff,
                    "unit_cycle": entry.unit_cycle,
                    "max_at_branch_root": entry.max_at_branch_root,
                    "violations": list(entry.violations),
                }
                for entry in structure.cycles
            ],
        },
        "star_recurrence": {
            "ok": stars.ok,
            "checks": [
                {"curve": c.curve_id, "lhs": c.lhs, "rhs": c.rhs, "ok": c.ok}
                for c in stars.checks
            ],
        },
    }


def _cycles_section(config: CurveConfig):
    try:
        cycles = find_cycles(config)
    except StructureError as exc:
        return {"error": str(exc)}
    return [
        {
            "members": list(rec.member_ids),
            "length": rec.length,
            "branches": [
                {"root": br.root_id, "members": list(br.member_ids)}
                for br in rec.branches
            ],
        }
        for rec in cycles
    ]


def _sigma_section(config: CurveConfig):
    try:
        cls = sigma_classify(config)
    except (DomainError, StructureError) as exc:
        return {"error": str(exc)}
    return {
        "sigma": cls.sigma,
        "verdict": cls.verdict,
        "ih_parity": cls.ih_parity,
        "torsion_crosscheck": cls.torsion_crosscheck,
        "notes": list(cls.notes),
    }


class _InternalError(RuntimeError):
    pass


# --- commands -----------------------------------------------------------------


def _cmd_classify(args) -> int:
    config = _load(args.file)
    report = validate(config)
    doc: dict = {
        "command": "classify",
        "validation": {
            "valid": report.valid,
            "issues": [
                {"message": issue.message, "curve": issue.curve_id}
                for issue in report.issues
            ],
        },
    }
    if not report.valid:
        _emit(doc)
        return EXIT_INVALID
    matrix = intersection_matrix(config)
    doc["matrix"] = matrix
    doc["definiteness"] = is_negative_definite(matrix)
    doc["cycles"] = _cycles_section(config)
    doc["sigma_classification"] = _sigma_section(config)
    try:
        nac_doc, sol = _nac_section(config, 1)
        doc["nac"] = nac_doc
        if sol is not None:
            if sol.index > 1:
                at_index, sol_at = _nac_section(config, sol.index)
                doc["nac_at_index"] = at_index
            else:
                sol_at = sol
            doc.update(_structure_sections(config, sol_at or sol))
    except _InternalError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INTERNAL
    _emit(doc)
    return EXIT_OK


def _cmd_nac(args) -> int:
    config = _load(args.file)
    doc: dict = {"command": "nac"}
    try:
        nac_doc, sol = _nac_section(config, args.m)
        doc["nac"] = nac_doc
        if sol is not None:
            doc.update(_structure_sections(config, sol))
    except _InternalError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INTERNAL
    _emit(doc)
    return EXIT_OK


def _cmd_index(args) -> int:
    config = _load(args.file)
    sol = solve_nac(config, 1)
    if isinstance(sol, NoSolution):
        _emit({"command": "index", "index": None, "reason": sol.reason})
    else:
        _emit({"command": "index", "index": sol.index})
    return EXIT_OK


def _enum_cap() -> int | None:
    raw = os.environ.get("VII_ENUM_CAP")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ConfigParseError(f"VII_ENUM_CAP must be an integer, got {raw!r}")


def _cmd_enumerate(args) -> int:
    config = _load(args.file)
    reps = enumerate_representations(config, cap=_enum_cap())
    limit = args.max_solutions
    truncated = limit is not None and limit < len(reps)
    shown = reps[:limit] if truncated else reps
    entries = []
    for rep in shown:
        verification = verify_representation(config, rep)
        if not verification.ok:
            print(
                "enumerated representation failed re-verification", file=sys.stderr
            )
            return EXIT_INTERNAL
        entries.append(
            {
                "odd_ih": rep.odd_ih,
                "classes": [
                    {
                        "curve": curve.id,
                        "coeffs": list(klass.coeffs),
                        "torsion2": klass.torsion2,
                        "pattern": _render_class(klass),
                    }
                    for curve, klass in zip(config.curves, rep.classes)
                ],
                "verification": [
                    {"name": r.name, "ok": r.ok, "detail": r.detail}
                    for r in verification.results
                ],
            }
        )
    _emit(
        {
            "command": "enumerate",
            "count": len(reps),
            "truncated": truncated,
            "representations": entries,
        }
    )
    return EXIT_OK


def _render_class(klass: LatticeClass) -> str:
    form = classify_normal_form(klass)
    n = klass.rank
    if isinstance(form, TypeA):
        tail = " - ".join(f"L{i}" for i in sorted(form.blowups))
        text = f"L{form.base}" + (f" - {tail}" if tail else "")
    elif isinstance(form, TypeB):
        tail = " - ".join(f"L{i}" for i in sorted(form.blowups))
        text = f"-2L{form.base}" + (f" - {tail}" if tail else "")
    elif isinstance(form, FullCycle):
        if form.start == n:
            text = "0"
        else:
            text = "-(" + " + ".join(f"L{i}" for i in range(form.start, n)) + ")"
    else:
        text = "no recognized pattern"
    if klass.torsion2:
        text += " + order-2 twist"
    return text


def _cmd_germ(args) -> int:
    params = _parse_params(args.params)
    if args.kind == "hopf-strong":
        germ = HopfGermStrong(
            alpha=_need(params, "alpha"),
            a=_need(params, "a"),
            s=_need(params, "s"),
            m=_need_int(params, "m"),
        )
        _reject_extras(params, {"alpha", "a", "s", "m"})
        verdict = validate_strong(germ)
        _emit(_germ_doc("hopf-strong", params, verdict))
        return EXIT_OK
    if args.kind == "hopf-primary":
        germ = HopfGermPrimary(
            alpha1=_need(params, "alpha1"),
            alpha2=_need(params, "alpha2"),
            s=_need(params, "s"),
            m=_need_int(params, "m"),
        )
        _reject_extras(params, {"alpha1", "alpha2", "s", "m"})
        verdict = validate_primary(germ)
        _emit(_germ_doc("hopf-primary", params, verdict))
        return EXIT_OK
    tail = params.get("a", ())
    if not isinstance(tail, tuple):
        tail = (tail,)
    germ = EnokiGerm(t=_need(params, "t"), n=_need_int(params, "n"), a_coeffs=tail)
    _reject_extras(params, {"t", "n", "a"})
    doc: dict = {
        "command": "germ",
        "kind": "enoki",
        "parameters": {k: _render_number(v) for k, v in params.items()},
        "contracting": is_contracting(germ),
        "parabolic": is_parabolic(germ),
    }
    if not doc["contracting"]:
        doc["error"] = "not a contraction: |t| must lie strictly between 0 and 1"
        _emit(doc)
        return EXIT_INVALID
    realization = realize_enoki(germ)
    doc["has_nac"] = realization.has_nac
    doc["config"] = config_to_doc(realization.config)
    _emit(doc)
    return EXIT_OK


def _germ_doc(kind: str, params: dict, verdict) -> dict:
    return {
        "command": "germ",
        "kind": kind,
        "parameters": {k: _render_number(v) for k, v in params.items()},
        "exact": verdict.exact,
        "valid": verdict.valid,
        "conditions": [
            {"name": c.name, "ok": c.ok, "detail": c.detail, "gating": c.gating}
            for c in verdict.conditions
        ],
        "invariants": {name: value for name, value in verdict.invariants},
    }


def _render_number(value) -> str:
    if isinstance(value, tuple):
        return ",".join(_render_number(v) for v in value)
    return str(value)


def _need(params: dict, key: str):
    if key not in params:
        raise ConfigParseError(f"missing germ parameter {key!r}")
    return params[key]


def _need_int(params: dict, key: str) -> int:
    value = _need(params, key)
    if isinstance(value, ExactComplex) and value.im == 0 and value.re.denominator == 1:
        return int(value.re)
    raise ConfigParseError(f"germ parameter {key!r} must be an integer")


def _reject_extras(params: dict, allowed: set) -> None:
    extras = set(params) - allowed
    if extras:
        raise ConfigParseError(f"unknown germ parameters {sorted(extras)}")


def _parse_params(items: list[str]) -> dict:
    params: dict = {}
    for item in items:
        if "=" not in item:
            raise ConfigParseError(f"expected key=value, got {item!r}")
        key, _, raw = item.partition("=")
        key = key.strip()
        if not key:
            raise ConfigParseError(f"empty key in {item!r}")
        if key in params:
            raise ConfigParseError(f"duplicate germ parameter {key!r}")
        if "," in raw:
            params[key] = tuple(_parse_number(part, item) for part in raw.split(","))
        else:
            params[key] = _parse_number(raw, item)
    return params


def _parse_number(text: str, context: str) -> ExactComplex:
    """Exact parse of a real or complex literal.

    Accepts integers, fractions ("3/5"), decimals ("0.6", kept exact), and
    complex combinations with a trailing j ("1/2+1/3j", "-0.25j").
    """
    raw = text.strip()
    if not raw:
        raise ConfigParseError(f"empty number in {context!r}")
    if not raw.endswith(("j", "J")):
        return ExactComplex(_parse_real(raw, context))
    body = raw[:-1]
    # split a trailing imaginary term from an optional real part
    split = None
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "eE+-/.":
            split = i
            break
    if split is None:
        real, imag = "0", body
    else:
        real, imag = body[:split], body[split:]
    if imag in ("", "+"):
        imag = "1"
    elif imag == "-":
        imag = "-1"
    return ExactComplex(_parse_real(real, context), _parse_real(imag, context))


def _parse_real(text: str, context: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigParseError(f"cannot parse number {text!r} in {context!r}") from exc


def _cmd_selftest(args) -> int:
    results = run_all(seed=args.seed)
    passed = 0
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status} {result.name} ({result.checks} checks): {result.detail}")
        if result.passed:
            passed += 1
    print(f"{passed}/{len(results)} suites passed")
    return EXIT_OK if passed == len(results) else EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
