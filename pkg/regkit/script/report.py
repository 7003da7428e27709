#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Plain-text rendering of result documents"""

from typing import Any, Dict, Iterable, List, Tuple

from ..util.utils import format_value
from .runner import ResultDocument

__all__ = ["summarize", "corpus_table"]

# Scalar fields shown on the one-line summary of a command, in order
_HEADLINE = ("reg", "reg1", "reg2", "reg3", "reg_dual", "reg_via_duality", "reg10", "reg01", "linear_powers", "witness_v")


def _headline(result: Dict[str, Any]) -> str:
    parts = []
    for key in _HEADLINE:
        if key in result:
            parts.append(f"{key}={format_value(result[key])}")
    law = result.get("law")
    if law is not None:
        if law.get("kind") == "linear":
            parts.append(f"law={law['delta']}*v+{law['c']} from v={law['v_start']}")
        else:
            parts.append(f"law={law['kind']}")
    if "sequence" in result:
        parts.append("seq=" + ",".join(str(format_value(r)) for _, r in result["sequence"]))
    return " ".join(parts)


def summarize(doc: ResultDocument) -> str:
    """One block per command: status line, headline values, Betti staircase."""
    lines: List[str] = []
    for entry in doc.results:
        status = entry["status"]
        lines.append(f"[{status}] line {entry['line']}: {entry['statement']}")
        if status != "ok":
            lines.append(f"    {entry['error']}")
            continue
        result = entry["result"]
        head = _headline(result)
        if head:
            lines.append(f"    {head}")
        if "text" in result:
            lines.extend("    " + row for row in result["text"].splitlines())
        for message in entry.get("warnings", []):
            lines.append(f"    warning: {message}")
    lines.append(f"status: {doc.status}")
    return "\n".join(lines) + "\n"


def corpus_table(rows: Iterable[Tuple[str, str, int]]) -> str:
    """Aligned pass/fail table over ``(file, status, exit code)`` rows."""
    rows = list(rows)
    width = max([len(name) for name, _, _ in rows] + [4])
    lines = [f"{'file'.ljust(width)}  status"]
    for name, status, _ in rows:
        lines.append(f"{name.ljust(width)}  {status}")
    passed = sum(1 for _, status, _ in rows if status == "ok")
    lines.append(f"{passed}/{len(rows)} passed")
    return "\n".join(lines) + "\n"
