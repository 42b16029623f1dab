"""GraphViz DOT output in the usual neuron-diagram notation.

Diagrams fill each node with its value's colour; graphs draw every node
with a dashed border and never fill.  Law neurons get a " §" label suffix.
"""

from __future__ import annotations

from typing import Optional

from . import style as st
from .core import Diagram, Graph, Kind
from .evaluation import evaluate
from .style import Style  # noqa: F401 - re-exported

LAW_MARK = " §"


def _quote(s: str) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _attrs(pairs: dict) -> str:
    if not pairs:
        return ""
    return " [" + ", ".join(f"{k}={_quote(v)}" for k, v in pairs.items()) + "]"


def _render(g: Graph, name: str, valuation: Optional[dict]) -> str:
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;", "  node [shape=ellipse];"]
    for n in g.neurons():
        label = n.name + (LAW_MARK if n.kind is Kind.LAW else "")
        attrs = {"label": label}
        if valuation is None:
            attrs.update(st.resolved(n.desc.style))
            attrs.pop("fillcolor", None)
            attrs["style"] = "dashed"
        else:
            fill = valuation[n.name].fill
            attrs.update(st.resolved(st.merge(n.desc.style, fill)))
            if fill:
                attrs["style"] = "filled"
        lines.append(f"  {_quote(n.name)}{_attrs(attrs)};")
    for n in g.neurons():
        for e in n.edges:
            lines.append(f"  {_quote(e.source)} -> {_quote(n.name)}{_attrs(st.resolved(e.style))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_diagram(d: Diagram, name: str = "diagram") -> str:
    return _render(d.graph, name, evaluate(d))


def dot_graph(g: Graph, name: str = "graph") -> str:
    return _render(g, name, None)
