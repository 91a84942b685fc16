"""Deterministic DOT export for digraphs and separators.

Cycle arcs come out as directed edges; transposition pairs as single
undirected, dashed edges, so layout tools draw the cycle structure and
the pairing differently.
"""

from __future__ import annotations

from .graphs import Digraph
from .catalog import LabelTable
from .separator import SeparatorDigraph

__all__ = ["emit_dot"]


def _quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def emit_dot(
    d: Digraph | SeparatorDigraph,
    table: LabelTable | None = None,
    name: str = "G",
) -> str:
    """DOT text, byte-identical across runs for equal inputs."""
    lines = [f"digraph {_quote(name)} {{"]
    if isinstance(d, SeparatorDigraph):
        for v in range(d.order):
            lines.append(f"  {v} [label={_quote(d.arc_label(v, table))}];")
        for v in range(d.order):
            lines.append(f"  {v} -> {d.succ[v]};")
        for v in range(d.order):
            if v < d.trans[v]:
                lines.append(f"  {v} -> {d.trans[v]} [dir=none, style=dashed];")
    else:
        for v in range(d.order):
            lines.append(f"  {v};")
        for u, v in sorted(d.arcs()):
            lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
