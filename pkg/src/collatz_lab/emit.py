"""Serialization of results to JSON, CSV, DOT and plain text.

JSON carries every integer as a decimal string so consumers never face
precision loss on large orbit elements; field order is fixed.  CSV holds the
tabular heart of a result (trace steps, stats rows, report violations).
DOT exists only for trees.  All emitted bytes are deterministic functions of
the result object: wall-clock time is deliberately absent.
"""

from __future__ import annotations

import csv
import json

from collatz_lab.errors import ConfigurationError
from collatz_lab.reverse_tree import WZTree
from collatz_lab.sequences import StatsTable, Trace
from collatz_lab.verify import TheoremReport

FORMATS = ("json", "csv", "dot", "text")


def _s(value) -> str | None:
    return None if value is None else str(value)


def to_jsonable(result) -> dict:
    """Fixed-field-order dict form of a result, integers as decimal strings."""
    if isinstance(result, Trace):
        return {
            "kind": result.kind,
            "start": _s(result.start),
            "elements": [str(x) for x in result.elements],
            "outcome": result.outcome.value,
            "stopping_time": _s(result.stopping_time),
        }
    if isinstance(result, TheoremReport):
        return {
            "theorem_id": result.theorem_id,
            "lo": _s(result.lo),
            "hi": _s(result.hi),
            "checked": _s(result.checked),
            "violation_count": _s(result.violation_count),
            "violations": [
                {"input": _s(v.input), "detail": v.detail}
                for v in result.violations
            ],
            "budget_exhausted": [str(n) for n in result.budget_exhausted],
            "observational": result.observational,
        }
    if isinstance(result, StatsTable):
        return {
            "lo": _s(result.lo),
            "hi": _s(result.hi),
            "budget": _s(result.budget),
            "rows": [
                {
                    "n": _s(r.n),
                    "c_len": _s(r.c_len),
                    "t_len": _s(r.t_len),
                    "a_len": _s(r.a_len),
                    "exhausted": r.exhausted,
                }
                for r in result.rows
            ],
        }
    if isinstance(result, WZTree):
        return {
            "root": {"w": _s(result.root.w), "z": _s(result.root.z)},
            "candidate_bound": _s(result.candidate_bound),
            "depth_bound": _s(result.depth_bound),
            "nodes": [
                {
                    "w": _s(node.w),
                    "z": _s(node.z),
                    "depth": _s(result.depths[node.w]),
                    "children": [
                        str(c) for c in result.children.get(node.w, ())
                    ],
                }
                for node in result.nodes
            ],
            "orphans": [
                {"w": _s(o.w), "parent": _s(o.parent)} for o in result.orphans
            ],
        }
    raise ConfigurationError(f"cannot serialize {type(result).__name__}")


def _emit_csv(result, sink) -> None:
    writer = csv.writer(sink, lineterminator="\n")
    if isinstance(result, Trace):
        writer.writerow(["step", "value"])
        for step, value in enumerate(result.elements):
            writer.writerow([step, value])
    elif isinstance(result, TheoremReport):
        writer.writerow(["input", "detail"])
        for v in result.violations:
            writer.writerow([v.input, v.detail])
    elif isinstance(result, StatsTable):
        writer.writerow(["n", "c_len", "t_len", "a_len", "exhausted"])
        for r in result.rows:
            writer.writerow(
                [
                    r.n,
                    "" if r.c_len is None else r.c_len,
                    "" if r.t_len is None else r.t_len,
                    "" if r.a_len is None else r.a_len,
                    "true" if r.exhausted else "false",
                ]
            )
    else:
        raise ConfigurationError(
            f"csv format not valid for {type(result).__name__}"
        )


def _emit_dot(result, sink) -> None:
    if not isinstance(result, WZTree):
        raise ConfigurationError("dot format is only valid for trees")
    lines = ["digraph reverse_tree {"]
    for node in result.nodes:
        lines.append(f'  {node.w} [label="{node.w} ({node.z})"];')
    for node in result.nodes:
        parent = result.parents[node.w]
        if parent == node.w:
            # the root's trivial self-loop, drawn but visually set apart
            lines.append(f"  {node.w} -> {parent} [style=dashed, color=gray];")
        else:
            lines.append(f"  {node.w} -> {parent};")
    for orphan in result.orphans:
        lines.append(
            f'  {orphan.w} [label="{orphan.w}", style=dotted, '
            f'comment="parent {orphan.parent} outside tree"];'
        )
    lines.append("}")
    sink.write("\n".join(lines) + "\n")


def _trace_text(result: Trace) -> list[str]:
    lines = [
        f"kind {result.kind} from {result.start}: {result.outcome.value}",
        "elements: " + " ".join(str(x) for x in result.elements),
    ]
    if result.stopping_time is not None:
        lines.append(f"stopping time: {result.stopping_time}")
    return lines


def _report_text(result: TheoremReport) -> list[str]:
    status = "OK" if result.violation_count == 0 else "VIOLATIONS"
    lines = [
        f"{result.theorem_id} over [{result.lo}, {result.hi}]: {status}",
        f"checked {result.checked}, violations {result.violation_count}, "
        f"budget-exhausted {len(result.budget_exhausted)}",
    ]
    if result.observational:
        lines.append("observational: findings are reported, not asserted")
    for v in result.violations:
        lines.append(f"  {v.input}: {v.detail}")
    if result.budget_exhausted:
        lines.append(
            "  exhausted: " + " ".join(str(n) for n in result.budget_exhausted)
        )
    return lines


def _stats_text(result: StatsTable) -> list[str]:
    lines = [f"orbit lengths over [{result.lo}, {result.hi}], budget {result.budget}"]
    for r in result.rows:
        flag = " (budget exhausted)" if r.exhausted else ""
        lines.append(f"  {r.n}: {r.c_len} {r.t_len} {r.a_len}{flag}")
    return lines


def _tree_text(result: WZTree) -> list[str]:
    lines = [
        f"reverse tree over first {result.candidate_bound} candidates, "
        f"depth bound {result.depth_bound}"
    ]
    for node in result.nodes:
        depth = result.depths[node.w]
        kids = result.children.get(node.w, ())
        kid_text = " ".join(str(c) for c in kids) if kids else "-"
        lines.append(f"  {'  ' * depth}{node.w} (z={node.z}) children: {kid_text}")
    if result.orphans:
        lines.append(
            "orphans: "
            + " ".join(f"{o.w}->{o.parent}" for o in result.orphans)
        )
    return lines


def _emit_text(result, sink) -> None:
    if isinstance(result, Trace):
        lines = _trace_text(result)
    elif isinstance(result, TheoremReport):
        lines = _report_text(result)
    elif isinstance(result, StatsTable):
        lines = _stats_text(result)
    elif isinstance(result, WZTree):
        lines = _tree_text(result)
    else:
        raise ConfigurationError(f"cannot serialize {type(result).__name__}")
    sink.write("\n".join(lines) + "\n")


def emit(result, fmt: str, sink) -> None:
    """Write result to sink in the requested format."""
    if fmt == "json":
        json.dump(to_jsonable(result), sink, indent=2)
        sink.write("\n")
    elif fmt == "csv":
        _emit_csv(result, sink)
    elif fmt == "dot":
        _emit_dot(result, sink)
    elif fmt == "text":
        _emit_text(result, sink)
    else:
        raise ConfigurationError(f"unknown format {fmt!r}")
