"""Structured result reports: one JSON object per line, schema-tagged.

Every report is a plain dict with a leading ``schema`` field of the form
``prosep.<kind>/1``.  Field order is fixed by construction order, values
are JSON primitives only, and serialization uses a single canonical dumper,
so identical runs emit byte-identical lines and every line parses back with
``json.loads``.
"""

from __future__ import annotations

import json
import sys

SCHEMA_VERSION = 1


def _schema(kind: str) -> str:
    return "prosep.%s/%d" % (kind, SCHEMA_VERSION)


def dumps(report: dict) -> str:
    return json.dumps(report, separators=(", ", ": "))


def emit(report: dict, stream=None):
    stream = stream or sys.stdout
    stream.write(dumps(report) + "\n")


def parse_line(line: str) -> dict:
    return json.loads(line)


def _perm(p) -> str:
    return repr(p)


def _vector(v) -> list:
    return list(v)


def _invariants(inv) -> dict:
    return {"free_rank": inv.free_rank, "torsion": list(inv.torsion)}


def verdict_report(verdict, group_name=None) -> dict:
    out = {
        "schema": _schema("verdict"),
        "group": group_name or (verdict.group.name or "unnamed"),
        "order": verdict.group.order,
        "verdict": "nilpotent" if verdict.nilpotent else "counterexample",
    }
    if verdict.counterexample is not None:
        handle, p, witness = verdict.counterexample
        out["counterexample"] = {
            "subgroup_order": handle.order,
            "subgroup_generators": [_perm(g) for g in handle.generators],
            "prime": p,
            "witness": _perm(witness),
        }
        out["rechecked"] = verdict.recheck()
    return out


def embeddable_report(group_name, subgroup_order, prime, ok, witness) -> dict:
    out = {
        "schema": _schema("embeddable"),
        "group": group_name,
        "subgroup_order": subgroup_order,
        "prime": prime,
        "embeddable": ok,
    }
    if witness is not None:
        out["witness"] = _perm(witness)
    return out


def witness_report(report, group_name=None, subgroup=None, sublattice=None) -> dict:
    out = {
        "schema": _schema("witness"),
        "kind": report.kind,
        "group": group_name or "unnamed",
        "prime": report.prime,
        "status": report.status,
        "level": report.level,
        "k_max": report.k_max,
    }
    if subgroup is not None:
        out["subgroup"] = subgroup
    if sublattice is not None:
        out["sublattice"] = sublattice
    for key in ("index", "quotient_order", "verified"):
        if key in report.details:
            out[key] = report.details[key]
    if "failures_by_level" in report.details:
        out["failures_by_level"] = {
            str(k): _vector(v) for k, v in sorted(report.details["failures_by_level"].items())
        }
    if report.failure_element is not None:
        out["failure_element"] = _vector(report.failure_element)
    if report.witness_subgroup is not None:
        out["witness_sequence"] = [_vector(u) for u in report.witness_subgroup.sequence]
    return out


def fingerprint_report(name, fingerprint) -> dict:
    return {
        "schema": _schema("fingerprint"),
        "group": name,
        "class": fingerprint.class_bound,
        "layers": [_invariants(layer) for layer in fingerprint.layers],
    }


def compare_report(report) -> dict:
    return {
        "schema": _schema("compare"),
        "left": report.left_name,
        "right": report.right_name,
        "class": report.class_bound,
        "layers_equal": report.layers_equal,
        "p_quotient_orders": {
            str(p): [{"left": l, "right": r, "equal": ok} for l, r, ok in entries]
            for p, entries in sorted(report.p_quotient_orders.items())
        },
        "all_equal": report.all_equal,
        "caveat": report.caveat,
    }


def radical_report(group_name, subgroup_desc, primes, result=None,
                   pc_result=None, index=None) -> dict:
    out = {
        "schema": _schema("radical"),
        "group": group_name,
        "subgroup": subgroup_desc,
        "primes": list(primes),
    }
    if result is not None:  # finite RadicalResult
        out["size"] = len(result.elements)
        out["is_subgroup"] = result.is_subgroup
        out["index"] = result.index
    if pc_result is not None:
        out["sequence"] = [_vector(u) for u in pc_result.sequence]
        out["index_over_subgroup"] = index
    return out


def lcs_report(group_name, orders=None, sequences=None, nilpotent=None,
               invariants=None) -> dict:
    out = {
        "schema": _schema("lcs"),
        "group": group_name,
    }
    if orders is not None:
        out["term_orders"] = orders
    if sequences is not None:
        out["term_sequences"] = [[_vector(u) for u in seq] for seq in sequences]
    if nilpotent is not None:
        out["nilpotent"] = nilpotent
    if invariants is not None:
        out["layer_invariants"] = [_invariants(inv) for inv in invariants]
    return out


def tower_report(group_name, prime, levels) -> dict:
    return {
        "schema": _schema("tower"),
        "group": group_name,
        "prime": prime,
        "levels": [
            {"level": k, "order": order, "cyclic": cyclic}
            for k, order, cyclic in levels
        ],
    }


def relator_report(report) -> dict:
    from .words import serialize_word

    return {
        "schema": _schema("relator"),
        "word": serialize_word(report.word),
        "rank": report.rank,
        "weight": report.weight,
        "coordinates": list(report.coordinates),
        "is_proper_power": report.is_proper_power,
    }


def nq_report(result) -> dict:
    group = result.group
    return {
        "schema": _schema("nq"),
        "presentation": result.presentation.name,
        "class": result.class_bound,
        "generators": list(group.names),
        "orders": ["inf" if o is None else o for o in group.orders],
        "hirsch_length": group.hirsch_length(),
        "fingerprint": [_invariants(layer) for layer in result.fingerprint.layers],
    }


def catalog_report(name, kind, description, extra=None) -> dict:
    out = {
        "schema": _schema("catalog"),
        "name": name,
        "kind": kind,
        "description": description,
    }
    if extra:
        out.update(extra)
    return out


def summary_report(command, counts) -> dict:
    out = {"schema": _schema("summary"), "command": command}
    out.update(counts)
    return out


def render(obj, **meta) -> dict:
    """Dispatch a module result object to its report dict.

    Accepts the result types produced across the library; ``meta`` supplies
    naming context that the object itself does not carry (group names,
    subgroup descriptions).
    """
    from .nq import ComparisonReport, Fingerprint, NqResult, RelatorReport
    from .pcseries import WitnessReport
    from .propfinite import CVerdict, RadicalResult

    if isinstance(obj, CVerdict):
        return verdict_report(obj, group_name=meta.get("group"))
    if isinstance(obj, WitnessReport):
        return witness_report(obj, group_name=meta.get("group"),
                              subgroup=meta.get("subgroup"),
                              sublattice=meta.get("sublattice"))
    if isinstance(obj, Fingerprint):
        return fingerprint_report(meta.get("group", "unnamed"), obj)
    if isinstance(obj, NqResult):
        return nq_report(obj)
    if isinstance(obj, ComparisonReport):
        return compare_report(obj)
    if isinstance(obj, RelatorReport):
        return relator_report(obj)
    if isinstance(obj, RadicalResult):
        return radical_report(meta.get("group", "unnamed"),
                              meta.get("subgroup", ""),
                              meta.get("primes", []), result=obj)
    raise TypeError("no report schema for %r" % type(obj))


def emit_report(obj, stream=None, **meta):
    """Render a module result and write it as one JSON line."""
    emit(render(obj, **meta), stream)
