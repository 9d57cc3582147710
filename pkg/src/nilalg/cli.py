"""Command-line surface.

Every command reads exact-scalar JSON documents, computes with no floating
point anywhere, and prints either a stable text rendering or, with --json,
canonical JSON (sorted keys).  Identical invocations on identical inputs are
byte-identical.  Exit status: 0 clean, 1 when a requested check fails, 2 for
unreadable or malformed input.

Commands:

    nilalg check FILE
    nilalg invariants FILE
    nilalg cohomology FILE [--max-degree K]
    nilalg torus-adim FILE [--radius N]
    nilalg iwasawa-adim --x FILE [--radius N]
    nilalg catalog NAME [--params JSON] [--json]

The catalog command prints the entry as a loadable document, so its output
can be piped back into check/invariants/cohomology.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Any, Mapping, Sequence

from nilalg.catalog import entry_names, entry_to_data, get_entry, iwasawa_algebraic_dimension
from nilalg.complexstruct import (
    integrability_witness,
    invariant_report,
    load_complex_structure,
)
from nilalg.liealg import cohomology_dims, load_algebra
from nilalg.linalg import Mat
from nilalg.scalar import ScalarParseError, format_cscalar, format_realalg, parse_cscalar
from nilalg.torus import algebraic_dimension, load_torus, ns_lattice

_LOAD_ERRORS = (ValueError, TypeError, KeyError, ScalarParseError)


class _InputError(Exception):
    """Unreadable or malformed input; maps to exit status 2."""


def _read_document(path: str) -> tuple[dict[str, Any], str]:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror or exc}")
    digest = hashlib.sha256(raw).hexdigest()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path}: not valid JSON (line {exc.lineno}, column {exc.colno})")
    if not isinstance(data, dict):
        raise _InputError(f"{path}: top level must be a JSON object")
    return data, digest


def _render_text(value: Any, prefix: str, lines: list[str]) -> None:
    if isinstance(value, dict):
        if not value:
            lines.append(f"{prefix}: {{}}")
            return
        for key in sorted(value):
            _render_text(value[key], f"{prefix}.{key}" if prefix else key, lines)
        return
    lines.append(f"{prefix}: {json.dumps(value, sort_keys=True)}")


def _emit(payload: Mapping[str, Any], as_json: bool) -> None:
    if as_json:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return
    lines: list[str] = []
    _render_text(dict(payload), "", lines)
    sys.stdout.write("\n".join(lines) + "\n")


def _report(command: str, digest: str, results: Mapping[str, Any], warnings: Sequence[str] = ()) -> dict[str, Any]:
    return {
        "command": command,
        "inputDigest": digest,
        "results": dict(results),
        "warnings": list(warnings),
    }


def _structure_in(data: Mapping[str, Any]) -> bool:
    return "J" in data or "oneforms" in data


# -- commands -----------------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    data, digest = _read_document(args.file)
    try:
        alg = load_algebra(data)
    except _LOAD_ERRORS as exc:
        raise _InputError(f"{args.file}: {exc}")
    validation = alg.validate()
    results: dict[str, Any] = {
        "dim": alg.dim,
        "jacobiOk": validation.jacobi_ok,
        "jacobiFailures": [
            {"i": i, "j": j, "k": k} for (i, j, k) in validation.jacobi_failures
        ],
        "lowerCentralDims": list(validation.series_dims),
        "nilpotent": validation.nilpotent,
        "problems": validation.problems(),
        "valid": validation.ok,
    }
    ok = validation.ok
    if _structure_in(data):
        try:
            j = load_complex_structure(data, alg.dim)
        except _LOAD_ERRORS as exc:
            raise _InputError(f"{args.file}: {exc}")
        witness = integrability_witness(alg, j) if validation.ok else None
        structure: dict[str, Any] = {"present": True, "integrable": witness is None}
        if witness is not None:
            a, b, val = witness
            structure["nijenhuisWitness"] = {
                "i": a,
                "j": b,
                "value": [format_realalg(v) for v in val],
            }
            ok = False
        results["structure"] = structure
    _emit(_report("check", digest, results), args.json)
    return 0 if ok else 1


def cmd_invariants(args: argparse.Namespace) -> int:
    data, digest = _read_document(args.file)
    try:
        alg = load_algebra(data)
        if not _structure_in(data):
            raise ValueError("invariants needs a \"J\" or \"oneforms\" entry in the file")
        j = load_complex_structure(data, alg.dim)
    except _LOAD_ERRORS as exc:
        raise _InputError(f"{args.file}: {exc}")
    validation = alg.validate()
    if not validation.ok:
        _emit(
            _report("invariants", digest, {"valid": False, "problems": validation.problems()}),
            args.json,
        )
        return 1
    _emit(_report("invariants", digest, invariant_report(alg, j)), args.json)
    return 0


def cmd_cohomology(args: argparse.Namespace) -> int:
    data, digest = _read_document(args.file)
    try:
        alg = load_algebra(data)
    except _LOAD_ERRORS as exc:
        raise _InputError(f"{args.file}: {exc}")
    validation = alg.validate()
    if not validation.ok:
        _emit(
            _report("cohomology", digest, {"valid": False, "problems": validation.problems()}),
            args.json,
        )
        return 1
    top = alg.dim if args.max_degree is None else args.max_degree
    if top < 0:
        raise _InputError("--max-degree must be >= 0")
    betti = cohomology_dims(alg, top)
    results = {
        "dim": alg.dim,
        "maxDegree": min(top, alg.dim),
        "betti": betti,
    }
    _emit(_report("cohomology", digest, results), args.json)
    return 0


def cmd_torus_adim(args: argparse.Namespace) -> int:
    data, digest = _read_document(args.file)
    try:
        tau = load_torus(data)
    except _LOAD_ERRORS as exc:
        raise _InputError(f"{args.file}: {exc}")
    if args.radius < 0:
        raise _InputError("--radius must be >= 0")
    outcome = algebraic_dimension(tau, args.radius)
    results = outcome.as_dict()
    results["tau"] = [
        [format_cscalar(tau.entry(r, c)) for c in range(2)] for r in range(2)
    ]
    results["nsBasis"] = [list(row) for row in ns_lattice(tau).basis]
    warnings = [] if outcome.exact else [
        f"value is a lower bound at radius {args.radius}; rerun with a larger --radius"
    ]
    _emit(_report("torus-adim", digest, results, warnings), args.json)
    return 0


def cmd_iwasawa_adim(args: argparse.Namespace) -> int:
    data, digest = _read_document(args.x)
    if "X" not in data:
        raise _InputError(f"{args.x}: needs an \"X\" entry (2 x 2 complex matrix)")
    rows = data["X"]
    if not isinstance(rows, list) or len(rows) != 2 or any(
        not isinstance(row, list) or len(row) != 2 for row in rows
    ):
        raise _InputError(f"{args.x}: \"X\" must be a 2 x 2 matrix")
    try:
        x = Mat.of([[parse_cscalar(v) for v in row] for row in rows])
        outcome = iwasawa_algebraic_dimension(x, args.radius)
    except _LOAD_ERRORS as exc:
        raise _InputError(f"{args.x}: {exc}")
    results = outcome.as_dict()
    results["X"] = [[format_cscalar(v) for v in row] for row in x.rows]
    warnings = [] if outcome.exact else [
        f"value is a lower bound at radius {args.radius}; rerun with a larger --radius"
    ]
    _emit(_report("iwasawa-adim", digest, results, warnings), args.json)
    return 0


def cmd_catalog(args: argparse.Namespace) -> int:
    params: dict[str, Any] = {}
    if args.params is not None:
        try:
            parsed = json.loads(args.params)
        except json.JSONDecodeError as exc:
            raise _InputError(f"--params is not valid JSON: {exc.msg}")
        if not isinstance(parsed, dict):
            raise _InputError("--params must be a JSON object")
        params = parsed
    try:
        entry = get_entry(args.name, params)
    except _LOAD_ERRORS as exc:
        raise _InputError(str(exc))
    _emit(entry_to_data(entry), args.json)
    return 0


# -- wiring -------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilalg",
        description="Exact invariants of nilpotent Lie algebras with complex structures.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name: str, handler: Any, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="print canonical JSON")
        p.set_defaults(handler=handler)
        return p

    p = add("check", cmd_check, "validate an algebra file (and its structure, if any)")
    p.add_argument("file")

    p = add("invariants", cmd_invariants, "full invariant report for an algebra with structure")
    p.add_argument("file")

    p = add("cohomology", cmd_cohomology, "Betti numbers of the invariant-form complex")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=None)

    p = add("torus-adim", cmd_torus_adim, "algebraic dimension of a 2-torus file")
    p.add_argument("file")
    p.add_argument("--radius", type=int, default=5)

    p = add("iwasawa-adim", cmd_iwasawa_adim, "algebraic dimension of the torus base for a displacement X")
    p.add_argument("--x", required=True, metavar="FILE")
    p.add_argument("--radius", type=int, default=5)

    p = add("catalog", cmd_catalog, "emit a built-in entry as a loadable document")
    p.add_argument("name", choices=entry_names())
    p.add_argument("--params", default=None, help="JSON object of family parameters")

    return parser


def main(argv: "Sequence[str] | None" = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _InputError as exc:
        print(f"nilalg: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
