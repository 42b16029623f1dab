"""Firing semantics: evaluate diagrams and tabulate a graph's multifunction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Diagram, Graph, with_inputs
from .errors import ArityError, BlowupError
from .values import Value, tuples

MAX_ROWS = 1_000_000


@dataclass(frozen=True, order=True)
class Literal:
    neuron: str
    value: Value

    def __str__(self):
        return f"{self.neuron}:{self.value}"


def evaluate(d: Diagram) -> dict:
    """Assign every neuron its value, in one pass over the topological order."""
    g = d.graph
    bound = d.bindings()
    vals = {}
    for n in g.neurons():
        if n.is_input:
            vals[n.name] = bound[n.name]
        else:
            vals[n.name] = n.desc.fire([vals[p] for p in n.pred_names])
    return vals


def state_in(name: str, d: Diagram) -> Value:
    d.graph.neuron_in(name)
    return evaluate(d)[name]


def as_function(g: Graph, inputs: Sequence) -> list:
    vals = evaluate(with_inputs(g, inputs))
    return [vals[t] for t in g.terminals]


def check_blowup(g: Graph, force: bool = False) -> int:
    rows = len(g.domain) ** len(g.input_order)
    if rows > MAX_ROWS and not force:
        raise BlowupError(
            f"{rows} input tuples exceed the limit of {MAX_ROWS}; pass force=True to proceed")
    return rows


def input_tuples(g: Graph, force: bool = False):
    check_blowup(g, force)
    return tuples(g.domain, len(g.input_order))


def all_diagrams(g: Graph, force: bool = False) -> list:
    return [Diagram(g, t) for t in input_tuples(g, force)]


@dataclass(frozen=True)
class Effects:
    inputs: tuple    # input neuron names, in input order
    outputs: tuple   # terminal names
    rows: tuple      # ((input values), (terminal values)) per input tuple

    def __str__(self):
        return format_effects(self)

    def lookup(self, inputs: Sequence[Value]) -> tuple:
        for ins, outs in self.rows:
            if list(ins) == list(inputs):
                return outs
        raise ArityError(len(self.inputs), len(inputs))


def effects(g: Graph, force: bool = False) -> Effects:
    rows = []
    for t in input_tuples(g, force):
        vals = evaluate(Diagram(g, t))
        rows.append((t, tuple(vals[n] for n in g.terminals)))
    return Effects(g.input_order, g.terminals, tuple(rows))


def _lits(names, values) -> str:
    return "[" + ",".join(f"{n}:{v}" for n, v in zip(names, values)) + "]"


def format_effects(e: Effects) -> str:
    return "\n".join(f"{_lits(e.inputs, ins)} -> {_lits(e.outputs, outs)}"
                     for ins, outs in e.rows)


def format_valuation(g: Graph, vals: dict) -> str:
    return "\n".join(f"{n}:{vals[n]}" for n in g.topo_order)
