"""Command-line interface.

JSON problem descriptions in, deterministic reports out (JSON or text).
Exit codes: 0 on success, 2 on invalid input, 3 when the request falls
outside the supported exact theory.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import (
    Side,
    Verdict,
    admissible_conormal_bundles,
    admissible_tangent_bundles,
    singular_locus_monomial,
)
from .errors import UnsupportedComputationError
from .forms import DifferentialForm
from .geometry import (
    InvariantHypersurface,
    brunella_alternative,
    fixed_point_count_p1,
    frobenius_defect,
    hodge_numbers,
    isolated_singularity_obstruction,
    leaf_count_classical,
)
from .multipliers import BundleParam, MultiplierStructure
from .polynomials import VectorField
from .sections import SectionSpace, _SOLVERS


def _load_config_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except json.JSONDecodeError as exc:
        # exc already carries line/column/char positions
        raise ValueError(f"malformed JSON in {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError("the config root must be a JSON object")
    return data


def _require(config: dict, key: str) -> object:
    if key not in config or config[key] is None:
        raise ValueError(f"missing required config entry '{key}'")
    return config[key]


def _ambient_dimension(config: dict) -> int:
    n = _require(config, "n")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"'n' must be a positive integer, got {n!r}")
    return n


def _structure_from(config: dict) -> MultiplierStructure:
    n = _ambient_dimension(config)
    groups = _require(config, "groups")
    if not isinstance(groups, list) or not all(isinstance(g, list) for g in groups):
        raise ValueError("'groups' must be a list of lists of 1-based indices")
    return MultiplierStructure(n, tuple(tuple(g) for g in groups))


def _bundle_from(config: dict, n: int) -> BundleParam:
    data = _require(config, "bundle")
    if not isinstance(data, dict) or "type" not in data:
        raise ValueError('\'bundle\' must be {"type": "monomial"|"unrelated", ...}')
    if data["type"] == "unrelated":
        return BundleParam.unrelated()
    if data["type"] == "monomial":
        exps = data.get("exponents")
        if not isinstance(exps, list) or len(exps) != n:
            raise ValueError(f"bundle exponents must be a list of {n} integers")
        return BundleParam.monomial(exps)
    raise ValueError(f"unknown bundle type {data['type']!r}")


def _form_from(config: dict, n: int) -> DifferentialForm:
    return DifferentialForm.from_json(n, _require(config, "form"))


def _field_from(config: dict, n: int) -> VectorField:
    return VectorField.from_json(n, _require(config, "vector_field"))


def _section_object_from(config: dict, n: int):
    has_form = config.get("form") is not None
    has_field = config.get("vector_field") is not None
    if has_form == has_field:
        raise ValueError("provide exactly one of 'form' or 'vector_field'")
    if has_form:
        return "form", _form_from(config, n)
    return "vector_field", _field_from(config, n)


def _parameters(config: dict) -> dict:
    params = config.get("parameters") or {}
    if not isinstance(params, dict):
        raise ValueError("'parameters' must be an object")
    return params


def _structure_json(ms: MultiplierStructure) -> dict:
    payload = {
        "n": ms.n,
        "groups": [list(g) for g in ms.groups],
        "kind": ms.kind.value,
    }
    if ms.block_size is not None:
        payload["block_size"] = ms.block_size
    return payload


def _bundle_json(bundle: BundleParam, ms: MultiplierStructure) -> dict:
    if bundle.is_unrelated:
        return {"type": "unrelated", "display": "unrelated"}
    return {
        "type": "monomial",
        "exponents": list(bundle.exponents),
        "display": bundle.display(ms),
    }


def _locus_json(locus) -> dict:
    components = []
    for c in locus.components:
        components.append(
            {
                "vanishing": list(c),
                "dimension": locus.n - len(c),
                "display": "V("
                + ", ".join(f"z_{i}" for i in c)
                + ") \\ {0}, dim "
                + str(locus.n - len(c)),
            }
        )
    return {"empty": locus.is_empty, "components": components}


def _monomial_display(alpha) -> str:
    return "*".join(
        f"z_{i}" + (f"^{p}" if p > 1 else "")
        for i, p in enumerate(alpha, start=1)
        if p
    )


def _basis_display(space: SectionSpace, k: int, alpha, n: int) -> str:
    mono = _monomial_display(alpha)
    if space is SectionSpace.TANGENT:
        tail = f"∂/∂z_{k}"
    elif space is SectionSpace.ONE_FORM:
        tail = f"dz_{k}"
    else:
        tail = "∧".join(f"dz_{i}" for i in range(1, n + 1) if i != k)
    return f"{mono} {tail}" if mono else tail


def _cmd_sections(config: dict, with_basis: bool) -> dict:
    ms = _structure_from(config)
    bundle = _bundle_from(config, ms.n)
    params = _parameters(config)
    space = SectionSpace(params.get("space", "tangent"))
    solutions = _SOLVERS[space](ms, bundle)
    results = {
        "space": space.value,
        "bundle": _bundle_json(bundle, ms),
        "dimension": len(solutions),
    }
    if with_basis:
        results["basis"] = [
            {
                "component": k,
                "exponents": list(alpha),
                "display": _basis_display(space, k, alpha, ms.n),
            }
            for k, alpha in solutions
        ]
    return {
        "command": "sections" if with_basis else "dim",
        "structure": _structure_json(ms),
        "results": results,
        "warnings": [],
    }


def _cmd_classify(config: dict) -> dict:
    ms = _structure_from(config)
    params = _parameters(config)
    side = Side(params.get("side", "tangent"))
    max_degree = int(params.get("max_degree", 3))
    coefficients = params.get("coefficients")
    builder = (
        admissible_tangent_bundles if side is Side.TANGENT else admissible_conormal_bundles
    )
    entries = builder(ms, max_degree=max_degree, coefficients=coefficients)
    payload = []
    warnings = []
    for entry in entries:
        rep = entry.representative
        rep_json = {
            "type": "vector_field" if isinstance(rep, VectorField) else "one_form",
            "payload": rep.to_json(),
            "display": str(rep),
        }
        verdict = entry.nonsingularity.verdict
        nonsingularity = {"verdict": verdict.value}
        locus = entry.nonsingularity.locus
        nonsingularity["locus"] = _locus_json(locus) if locus is not None else None
        payload.append(
            {
                "bundle": _bundle_json(entry.bundle, ms),
                "kind": entry.kind.value,
                "degree": entry.degree,
                "representative": rep_json,
                "nonsingularity": nonsingularity,
            }
        )
        if verdict is Verdict.UNKNOWN:
            warnings.append(
                f"nonsingularity unknown for bundle {entry.bundle.display(ms)}"
            )
        elif verdict is Verdict.SINGULAR:
            warnings.append(
                f"singular representative for bundle {entry.bundle.display(ms)}"
            )
    if params.get("strict") and any(w.startswith("nonsingularity unknown") for w in warnings):
        raise UnsupportedComputationError(
            "classification contains unknown nonsingularity verdicts"
        )
    return {
        "command": "classify",
        "structure": _structure_json(ms),
        "results": {
            "side": side.value,
            "max_degree": max_degree,
            "entries": payload,
        },
        "warnings": warnings,
    }


def _cmd_integrability(config: dict) -> dict:
    n = _ambient_dimension(config)
    omega = _form_from(config, n)
    defect = frobenius_defect(omega)
    warnings = []
    if n < 3:
        warnings.append(
            "every 3-form vanishes below ambient dimension 3; the zero defect is vacuous"
        )
    return {
        "command": "integrability",
        "structure": None,
        "results": {
            "integrable": defect.is_zero(),
            "defect_terms": len(defect.terms()),
            "defect": defect.to_json(),
            "display": str(defect),
        },
        "warnings": warnings,
    }


def _cmd_brunella(config: dict) -> dict:
    n = _ambient_dimension(config)
    omega = _form_from(config, n)
    outcome = brunella_alternative(omega)
    if isinstance(outcome, InvariantHypersurface):
        results = {
            "verdict": "invariant-hypersurface",
            "contraction": outcome.contraction.to_json(),
            "contraction_display": str(outcome.contraction),
            "verified": outcome.verified,
        }
    else:
        results = {
            "verdict": "tangent-to-fibration",
            "contraction": None,
            "contraction_display": None,
            "verified": None,
        }
    return {
        "command": "brunella",
        "structure": None,
        "results": results,
        "warnings": [],
    }


def _cmd_leafcount(config: dict) -> dict:
    n = _ambient_dimension(config)
    params = _parameters(config)
    if "m" not in params:
        raise ValueError("missing required parameter 'm'")
    m = int(params["m"])
    warnings = []
    notes = []
    count = None
    extrapolated = False
    if n >= 3:
        count = leaf_count_classical(n, m)
        extrapolated = m == 1
        if extrapolated:
            warnings.append(
                "m = 1 lies outside the closed-form count; reporting the geometric-series limit"
            )
    else:
        notes.append("the closed-form count is stated for ambient dimension at least 3")
    oracle = None
    if config.get("vector_field") is not None:
        if n != 2:
            raise ValueError("the fixed-direction oracle works on C^2")
        outcome = fixed_point_count_p1(_field_from(config, 2))
        if outcome.infinite:
            oracle = {"status": "infinite"}
        else:
            oracle = {
                "status": "finite",
                "with_multiplicity": outcome.with_multiplicity,
                "distinct": outcome.distinct,
            }
        notes.append(
            "diagnostic: the degree-based fixed-direction count is shown for "
            "comparison only; it answers a different question and no equality "
            "with the closed-form leaf count is asserted"
        )
    return {
        "command": "leafcount",
        "structure": None,
        "results": {
            "n": n,
            "m": m,
            "count": count,
            "extrapolated": extrapolated,
            "oracle": oracle,
            "notes": notes,
        },
        "warnings": warnings,
    }


def _cmd_hodge(config: dict) -> dict:
    n = _ambient_dimension(config)
    table = hodge_numbers(n)
    return {
        "command": "hodge",
        "structure": None,
        "results": {
            "n": n,
            "entries": [
                {"p": p, "q": q, "value": v} for p, q, v in table.nonzero_entries()
            ],
            "chern_top": table.alternating_sum(),
        },
        "warnings": [],
    }


def _cmd_singlocus(config: dict) -> dict:
    n = _ambient_dimension(config)
    kind, obj = _section_object_from(config, n)
    locus = singular_locus_monomial(obj)
    return {
        "command": "singlocus",
        "structure": None,
        "results": {"object": kind, "locus": _locus_json(locus)},
        "warnings": [],
    }


def _cmd_obstruction(config: dict) -> dict:
    n = _ambient_dimension(config)
    kind, obj = _section_object_from(config, n)
    ms = None
    if config.get("groups") is not None:
        ms = _structure_from(config)
    report = isolated_singularity_obstruction(obj, ms)
    return {
        "command": "obstruction",
        "structure": _structure_json(ms) if ms is not None else None,
        "results": {
            "object": kind,
            "locus": _locus_json(report.locus),
            "consistent": report.consistent,
            "chern_top": report.chern_top,
            "chain": list(report.chain),
        },
        "warnings": [],
    }


def run_command(command: str, config: dict) -> dict:
    """Execute one CLI command against a validated config and build its report."""
    if command == "sections":
        return _cmd_sections(config, with_basis=True)
    if command == "dim":
        return _cmd_sections(config, with_basis=False)
    if command == "classify":
        return _cmd_classify(config)
    if command == "integrability":
        return _cmd_integrability(config)
    if command == "brunella":
        return _cmd_brunella(config)
    if command == "leafcount":
        return _cmd_leafcount(config)
    if command == "hodge":
        return _cmd_hodge(config)
    if command == "singlocus":
        return _cmd_singlocus(config)
    if command == "obstruction":
        return _cmd_obstruction(config)
    raise ValueError(f"unknown command {command!r}")


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False)


def _text_classify(results: dict) -> list[str]:
    lines = [f"side: {results['side']}", f"max degree: {results['max_degree']}"]
    lines.append("entries:")
    for i, entry in enumerate(results["entries"], start=1):
        kind = entry["kind"]
        if entry["degree"] is not None:
            kind += f" (m={entry['degree']})"
        verdict = entry["nonsingularity"]["verdict"]
        lines.append(f"  [{i}] bundle {entry['bundle']['display']} | {kind} | {verdict}")
        lines.append(f"      representative: {entry['representative']['display']}")
        locus = entry["nonsingularity"]["locus"]
        if locus is not None and not locus["empty"]:
            for c in locus["components"]:
                lines.append(f"      locus: {c['display']}")
    return lines


def _text_body(report: dict) -> list[str]:
    command = report["command"]
    results = report["results"]
    if command in ("sections", "dim"):
        lines = [
            f"space: {results['space']}",
            f"bundle: {results['bundle']['display']}",
            f"dimension: {results['dimension']}",
        ]
        if "basis" in results:
            lines.append("basis:")
            lines.extend(f"  {entry['display']}" for entry in results["basis"])
        return lines
    if command == "classify":
        return _text_classify(results)
    if command == "integrability":
        return [
            f"integrable: {str(results['integrable']).lower()}",
            f"defect: {results['display']}",
            f"defect terms: {results['defect_terms']}",
        ]
    if command == "brunella":
        lines = [f"verdict: {results['verdict']}"]
        if results["contraction_display"] is not None:
            lines.append(f"contraction: {results['contraction_display']}")
            lines.append(f"identity verified: {str(results['verified']).lower()}")
        return lines
    if command == "leafcount":
        lines = [f"n: {results['n']}", f"m: {results['m']}"]
        lines.append(
            f"count: {results['count']}"
            + (" (extrapolated)" if results["extrapolated"] else "")
        )
        oracle = results["oracle"]
        if oracle is not None:
            if oracle["status"] == "infinite":
                lines.append("oracle: infinitely many fixed directions")
            else:
                lines.append(
                    f"oracle: {oracle['with_multiplicity']} with multiplicity, "
                    f"{oracle['distinct']} distinct"
                )
        for note in results["notes"]:
            lines.append(f"note: {note}")
        return lines
    if command == "hodge":
        lines = [f"n: {results['n']}"]
        lines.extend(
            f"h[{e['p']},{e['q']}] = {e['value']}" for e in results["entries"]
        )
        lines.append(f"chern top: {results['chern_top']}")
        return lines
    if command == "singlocus":
        lines = [f"object: {results['object']}"]
        locus = results["locus"]
        if locus["empty"]:
            lines.append("locus: empty")
        else:
            lines.extend(f"locus: {c['display']}" for c in locus["components"])
        return lines
    if command == "obstruction":
        lines = [f"object: {results['object']}"]
        locus = results["locus"]
        if locus["empty"]:
            lines.append("locus: empty")
        else:
            lines.extend(f"locus: {c['display']}" for c in locus["components"])
        lines.append(f"consistent: {str(results['consistent']).lower()}")
        lines.append(f"chern top: {results['chern_top']}")
        lines.append("chain:")
        lines.extend(f"  - {step}" for step in results["chain"])
        return lines
    raise ValueError(f"unknown command {command!r}")


def render_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    structure = report.get("structure")
    if structure:
        groups = " ".join(
            "{" + ",".join(str(i) for i in g) + "}" for g in structure["groups"]
        )
        lines.append(
            f"structure: {structure['kind']}, n={structure['n']}, groups {groups}"
        )
    lines.extend(_text_body(report))
    warnings = report.get("warnings") or []
    if warnings:
        lines.append("warnings:")
        lines.extend(f"  - {w}" for w in warnings)
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfkit",
        description=(
            "Exact section spaces, classifications, and geometric identities "
            "for diagonal Hopf manifolds."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *, structure=False, space=False, side=False, m=False, strict=False):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--config", help="JSON problem description")
        fmt = cmd.add_mutually_exclusive_group()
        fmt.add_argument(
            "--json", dest="fmt", action="store_const", const="json", help="JSON report"
        )
        fmt.add_argument(
            "--text", dest="fmt", action="store_const", const="text", help="text report"
        )
        cmd.set_defaults(fmt="text")
        cmd.add_argument("--n", type=int, help="ambient dimension")
        if structure:
            cmd.add_argument(
                "--groups", help='multiplier groups as JSON, e.g. "[[1,2],[3]]"'
            )
        if space:
            cmd.add_argument(
                "--space",
                choices=[s.value for s in SectionSpace],
                help="which section space",
            )
        if side:
            cmd.add_argument(
                "--side", choices=[s.value for s in Side], help="classification side"
            )
            cmd.add_argument("--max-degree", type=int, help="classical family cutoff")
        if m:
            cmd.add_argument("--m", type=int, help="degree parameter")
        if strict:
            cmd.add_argument(
                "--strict",
                action="store_true",
                help="fail (exit 3) on unknown verdicts",
            )
        return cmd

    add("sections", "monomial basis of a twisted section space", structure=True, space=True)
    add("dim", "dimension of a twisted section space", structure=True, space=True)
    add("classify", "admissible bundles with witnesses", structure=True, side=True, strict=True)
    add("integrability", "integrability defect of a 1-form")
    add("brunella", "invariant-hypersurface alternative for an integrable 1-form")
    add("leafcount", "compact leaf count of the coordinate-power family", m=True)
    add("hodge", "Hodge table and top Chern number")
    add("singlocus", "coordinate-subspace singular locus of a monomial section")
    add("obstruction", "isolated-singularity obstruction report", structure=True)
    return parser


def _assemble_config(args: argparse.Namespace) -> dict:
    config = _load_config_file(args.config) if args.config else {}
    if getattr(args, "n", None) is not None:
        config["n"] = args.n
    groups_text = getattr(args, "groups", None)
    if groups_text:
        try:
            config["groups"] = json.loads(groups_text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed --groups value: {exc}") from exc
    params = dict(config.get("parameters") or {})
    for name in ("space", "side", "m"):
        value = getattr(args, name, None)
        if value is not None:
            params[name] = value
    if getattr(args, "max_degree", None) is not None:
        params["max_degree"] = args.max_degree
    if getattr(args, "strict", False):
        params["strict"] = True
    config["parameters"] = params
    return config


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _assemble_config(args)
        report = run_command(args.command, config)
    except UnsupportedComputationError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render_json(report) if args.fmt == "json" else render_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
