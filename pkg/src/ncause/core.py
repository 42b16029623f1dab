"""Neurons, graphs and diagrams, plus the structural queries over them.

A graph is identified by its terminal neurons; its neuron set is everything
reachable upstream from them.  Edges refer to their source neuron by name,
so a graph is assembled from a flat list of neurons (declaration order
matters only for tie-breaking the topological order).
"""

from __future__ import annotations

import enum
import heapq
import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import style as st
from .errors import (
    ArityError,
    CycleError,
    DomainMismatch,
    DuplicateName,
    EmptyTerminals,
    NameNotFound,
    UnknownNeuron,
)
from .values import BOOL, Value, ValueDomain

log = logging.getLogger(__name__)


class Kind(enum.Enum):
    ACTION = "action"
    LAW = "law"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Edge:
    source: str
    style: st.Style = st.EMPTY


@dataclass(frozen=True)
class Neuron:
    name: str
    desc: "Description"  # noqa: F821 - see ncause.desc

    @property
    def kind(self) -> Kind:
        return self.desc.kind

    @property
    def edges(self):
        return self.desc.edges

    @property
    def pred_names(self) -> list:
        return [e.source for e in self.desc.edges]

    @property
    def is_input(self) -> bool:
        return self.desc.fire is None

    @property
    def is_exo(self) -> bool:
        return not self.desc.edges

    @property
    def is_endo(self) -> bool:
        return bool(self.desc.edges)

    def __repr__(self):
        return f"Neuron({self.name!r})"


def is_input(n: Neuron) -> bool:
    return n.is_input


def is_exo(n: Neuron) -> bool:
    return n.is_exo


def is_endo(n: Neuron) -> bool:
    return n.is_endo


class Graph:
    """A validated, immutable neuron graph.

    Build one with :func:`graph` (or :func:`validate`); the constructor
    assumes its arguments already passed validation.
    """

    __slots__ = ("domain", "terminals", "_table", "topo_order", "traversal",
                 "input_order", "dropped")

    def __init__(self, domain, terminals, table, topo_order, traversal, dropped=()):
        self.domain: ValueDomain = domain
        self.terminals: tuple = tuple(terminals)
        self._table: dict = table
        self.topo_order: tuple = tuple(topo_order)
        self.traversal: tuple = tuple(traversal)
        self.input_order: tuple = tuple(n for n in self.traversal if table[n].is_input)
        self.dropped: tuple = tuple(dropped)

    # structural equality: firing functions are not comparable, identities are
    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.domain == other.domain
                and self.terminals == other.terminals
                and self._table.keys() == other._table.keys()
                and all(self._table[k].desc == other._table[k].desc for k in self._table))

    def __hash__(self):
        return hash((self.domain, self.terminals, frozenset(self._table)))

    def __repr__(self):
        return f"Graph(terminals={list(self.terminals)}, neurons={len(self._table)})"

    def __contains__(self, name):
        return name in self._table

    def neuron_in(self, name: str) -> Neuron:
        try:
            return self._table[name]
        except KeyError:
            raise NameNotFound(name) from None

    def neurons(self) -> list:
        """All neurons in topological order."""
        return [self._table[n] for n in self.topo_order]

    def terminal_neurons(self) -> list:
        return [self._table[n] for n in self.terminals]

    def inputs(self) -> list:
        return [self._table[n] for n in self.input_order]

    def preds(self, n) -> list:
        n = self._resolve(n)
        return [self._table[s] for s in n.pred_names]

    def upstream(self, n) -> list:
        """Every recursive predecessor once, in first-encounter pre-order."""
        n = self._resolve(n)
        seen = {n.name}
        out = []

        def visit(name):
            for p in self._table[name].pred_names:
                if p not in seen:
                    seen.add(p)
                    out.append(self._table[p])
                    visit(p)

        visit(n.name)
        return out

    def traversal_index(self) -> dict:
        return {name: i for i, name in enumerate(self.traversal)}

    def _resolve(self, n) -> Neuron:
        return self.neuron_in(n) if isinstance(n, str) else n


def preds(g: Graph, n) -> list:
    return g.preds(n)


def upstream(g: Graph, n) -> list:
    return g.upstream(n)


def input_order(g: Graph) -> list:
    return g.inputs()


def neuron_in(name: str, g: Graph) -> Neuron:
    return g.neuron_in(name)


def _preorder(table, terminals):
    seen, order = set(), []

    def visit(name):
        if name in seen:
            return
        seen.add(name)
        order.append(name)
        for p in table[name].pred_names:
            visit(p)

    for t in terminals:
        visit(t)
    return order


def _find_cycle(table, roots):
    WHITE, GREY, BLACK = 0, 1, 2
    colour = dict.fromkeys(table, WHITE)
    stack = []

    def visit(name):
        colour[name] = GREY
        stack.append(name)
        for p in table[name].pred_names:
            if colour[p] == GREY:
                return stack[stack.index(p):]
            if colour[p] == WHITE:
                found = visit(p)
                if found:
                    return found
        stack.pop()
        colour[name] = BLACK
        return None

    for r in roots:
        if colour[r] == WHITE:
            found = visit(r)
            if found:
                # report in edge direction: source first
                return list(reversed(found))
    return None


def _topo(table, decl_index):
    indeg = {n: 0 for n in table}
    succs = {n: [] for n in table}
    for n, neuron in table.items():
        for p in set(neuron.pred_names):
            indeg[n] += 1
            succs[p].append(n)
    ready = [(decl_index[n], n) for n, d in indeg.items() if d == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        _, n = heapq.heappop(ready)
        order.append(n)
        for s in succs[n]:
            indeg[s] -= 1
            if indeg[s] == 0:
                heapq.heappush(ready, (decl_index[s], s))
    return order


def validate(neurons: Iterable[Neuron], terminals: Sequence[str],
             domain: ValueDomain = BOOL) -> Graph:
    """Check a graph candidate and return the validated :class:`Graph`.

    Declared neurons that no terminal reaches are dropped with a warning.
    """
    neurons = list(neurons)
    terminals = [t.name if isinstance(t, Neuron) else t for t in terminals]
    if not terminals:
        raise EmptyTerminals()
    table, decl_index = {}, {}
    for i, n in enumerate(neurons):
        if n.name in table:
            if table[n.name] is n or table[n.name] == n:
                continue
            raise DuplicateName(n.name)
        table[n.name] = n
        decl_index[n.name] = i
    for t in terminals:
        if t not in table:
            raise UnknownNeuron(t)
    for n in table.values():
        for p in n.pred_names:
            if p not in table:
                raise UnknownNeuron(p, referenced_by=n.name)
        ddom = getattr(n.desc, "domain", None)
        if ddom is not None and ddom != domain:
            raise DomainMismatch(
                f"neuron {n.name!r} is described over {ddom.name}, graph is over {domain.name}")

    cycle = _find_cycle(table, terminals)
    if cycle:
        raise CycleError(cycle)

    traversal = _preorder(table, terminals)
    reachable = set(traversal)
    dropped = [n for n in table if n not in reachable]
    for n in dropped:
        log.warning("neuron %r is not reachable from any terminal; dropped", n)
    table = {n: table[n] for n in table if n in reachable}
    topo = _topo(table, decl_index)
    return Graph(domain, terminals, table, topo, traversal, dropped)


def graph(neurons: Iterable[Neuron], terminals: Sequence[str],
          domain: ValueDomain = BOOL) -> Graph:
    return validate(neurons, terminals, domain)


@dataclass(frozen=True)
class Diagram:
    graph: Graph
    inputs: tuple

    def __repr__(self):
        vals = ",".join(str(v) for v in self.inputs)
        return f"Diagram({list(self.graph.terminals)} with [{vals}])"

    def bindings(self) -> dict:
        return dict(zip(self.graph.input_order, self.inputs))


def with_inputs(g: Graph, values: Sequence) -> Diagram:
    values = list(values)
    if len(values) != len(g.input_order):
        raise ArityError(len(g.input_order), len(values))
    return Diagram(g, tuple(g.domain.coerce(v) for v in values))


def graph_of(d: Diagram) -> Graph:
    return d.graph


def change_inputs(d: Diagram, values: Sequence) -> Diagram:
    return with_inputs(d.graph, values)


__all__ = [
    "Kind", "Edge", "Neuron", "Graph", "Diagram", "Value",
    "validate", "graph", "with_inputs", "change_inputs", "graph_of",
    "preds", "upstream", "input_order", "neuron_in", "is_input", "is_exo", "is_endo",
]
