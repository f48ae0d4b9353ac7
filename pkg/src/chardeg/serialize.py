"""JSON / CSV / DOT rendering of spectra, graphs and reports.

Big integers always serialize as decimal strings (degrees at n = 50 are far
beyond both 64-bit and double range); exact rationals serialize as
"num/den" with a 12-significant-digit decimal convenience value alongside.
Inside CSV fields, a partition renders its parts space separated and lists
of partitions join with semicolons, so no field ever contains a comma.
Outputs carry no timestamps and are byte-stable across runs and worker
counts.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .exact import decimal_str
from .graph import PartitionGraph
from .partitions import Partition, format_partition, parse_partition
from .report import VerificationReport
from .spectrum import DegreeClass, DegreeSpectrum, epsilon

SCHEMA_VERSION = 1


def exact_str(value: int | Fraction) -> str:
    return str(value)


def csv_partition(parts: Partition) -> str:
    return " ".join(str(p) for p in parts)


def csv_partition_list(items) -> str:
    return ";".join(csv_partition(p) for p in items)


def json_text(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def spectrum_to_doc(spec: DegreeSpectrum) -> dict:
    eps = epsilon(spec)
    classes = []
    for c in spec.classes:
        entry = {
            "degree": str(c.degree),
            "size": c.size,
            "members": [format_partition(p) for p in c.members],
        }
        if spec.group == "A":
            entry["splits"] = list(c.splits)
        classes.append(entry)
    return {
        "schema": SCHEMA_VERSION,
        "group": spec.group,
        "n": spec.n,
        "b": str(spec.b),
        "epsilon": exact_str(eps),
        "epsilon_decimal": decimal_str(eps),
        "members_complete": spec.members_complete,
        "classes": classes,
    }


def spectrum_from_doc(doc: dict) -> DegreeSpectrum:
    """Rebuild a spectrum from its document, re-validating the mass invariant."""
    if doc.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    group = doc["group"]
    if group not in ("S", "A"):
        raise ValueError(f"unknown group tag {group!r}")
    classes = []
    for entry in doc["classes"]:
        members = tuple(parse_partition(t) for t in entry["members"])
        splits = tuple(entry.get("splits", ())) if group == "A" else ()
        classes.append(DegreeClass(int(entry["degree"]), int(entry["size"]), members, splits))
    spec = DegreeSpectrum(int(doc["n"]), group, tuple(classes), bool(doc["members_complete"]))
    if spec.mass() != spec.group_order():
        raise ValueError(f"mass invariant violated in document for {group}_{spec.n}")
    if str(spec.b) != doc["b"]:
        raise ValueError("top degree disagrees with document")
    return spec


def spectrum_to_csv(spec: DegreeSpectrum) -> str:
    lines = ["degree,multiplicity,members,splits"]
    for c in spec.classes:
        splits = ";".join(str(s) for s in c.splits)
        lines.append(f"{c.degree},{c.size},{csv_partition_list(c.members)},{splits}")
    eps = epsilon(spec)
    lines.append(f"epsilon,{exact_str(eps)},{decimal_str(eps)},")
    return "\n".join(lines) + "\n"


def spectrum_to_text(spec: DegreeSpectrum) -> str:
    eps = epsilon(spec)
    lines = [
        f"group: {spec.group}_{spec.n}",
        f"distinct degrees: {len(spec.classes)}",
        f"b: {spec.b}",
        f"top multiplicity: {spec.m1_size}",
        f"epsilon: {eps} ({decimal_str(eps)})",
    ]
    for c in spec.classes:
        members = "; ".join(format_partition(p) for p in c.members)
        if spec.group == "A" and c.splits:
            members = "; ".join(
                f"{format_partition(p)}(x{s})" if s > 1 else format_partition(p)
                for p, s in zip(c.members, c.splits)
            )
        suffix = f"  [{members}]" if members else ""
        lines.append(f"  {c.degree} x{c.size}{suffix}")
    return "\n".join(lines) + "\n"


def report_to_doc(report: VerificationReport) -> dict:
    # elapsed time is deliberately not serialized: documents must be
    # byte-identical across runs
    return {
        "schema": SCHEMA_VERSION,
        "check": report.check,
        "n": report.n,
        "status": report.status,
        "inequalities": [
            {
                "label": q.label,
                "left": exact_str(q.left),
                "relation": q.relation,
                "right": exact_str(q.right),
            }
            for q in report.inequalities
        ],
        "witnesses": [format_partition(w) for w in report.witnesses],
        "notes": list(report.notes),
    }


def graph_to_doc(graph: PartitionGraph) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "n": graph.n,
        "components": [
            [format_partition(v) for v in comp] for comp in graph.components
        ],
    }


def graph_from_doc(doc: dict) -> PartitionGraph:
    if doc.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    comps = tuple(
        tuple(parse_partition(t) for t in comp) for comp in doc["components"]
    )
    return PartitionGraph(int(doc["n"]), comps)


def graph_to_dot(graph: PartitionGraph) -> str:
    lines = [f"graph partitions_of_{graph.n} {{"]
    for comp in graph.components:
        if len(comp) == 1:
            lines.append(f'  "{format_partition(comp[0])}";')
            continue
        for a, b in zip(comp, comp[1:]):
            lines.append(f'  "{format_partition(a)}" -- "{format_partition(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
