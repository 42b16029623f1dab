"""Lower parsed ``.nd`` files to validated graphs and diagrams."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .. import desc as D
from ..core import Diagram, Kind, Neuron, validate, with_inputs
from ..errors import (
    CycleError,
    DuplicateName,
    NeuronDiagramError,
    UnknownNeuron,
)
from ..values import BOOL, declare_domain, parse_value
from .parser import parse
from .syntax import (
    Binary,
    Diagnostic,
    DiagramDecl,
    GraphDecl,
    Inhib,
    KindMod,
    LangError,
    SourceFile,
    ValuesDecl,
)


@dataclass
class Module:
    """Everything one source file declares."""

    domains: dict = field(default_factory=dict)
    graphs: dict = field(default_factory=dict)
    diagrams: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)

    def graph(self, name: str):
        if name in self.graphs:
            return self.graphs[name]
        raise KeyError(f"no graph named {name!r}; have {sorted(self.graphs)}")

    def diagram(self, name: str) -> Diagram:
        if name in self.diagrams:
            return self.diagrams[name]
        raise KeyError(f"no diagram named {name!r}; have {sorted(self.diagrams)}")

    @property
    def errors(self) -> list:
        return [d for d in self.diagnostics if d.severity == "error"]


def _build(expr, domain):
    """Turn a description expression into a :class:`Description`."""
    if isinstance(expr, Binary):
        l, r = _build(expr.left, domain), _build(expr.right, domain)
        return D.or_d(l, r) if expr.op == "||" else D.and_d(l, r)
    if isinstance(expr, Inhib):
        return D.inhib_by(_build(expr.base, domain), expr.names)
    if isinstance(expr, KindMod):
        return D.is_kind(_build(expr.base, domain), Kind(expr.kind))
    b = D.lookup_builder(expr.builder)
    shape = b.params
    if shape == "":
        if not expr.bare and expr.args:
            raise NeuronDiagramError(f"{b.name} takes no arguments")
        return b.make(domain)
    if expr.bare:
        raise NeuronDiagramError(f"{b.name} needs arguments")
    if shape == "count;names":
        if expr.count is None:
            raise NeuronDiagramError(f"{b.name} needs a threshold: {b.name}(k; names)")
        return b.make(domain, expr.count, list(expr.args))
    if expr.count is not None:
        raise NeuronDiagramError(f"{b.name} takes no threshold")
    if shape in ("name", "value"):
        if len(expr.args) != 1:
            raise NeuronDiagramError(f"{b.name} takes exactly one argument")
        if shape == "value":
            return b.make(domain, parse_value(domain, expr.args[0]))
        return b.make(domain, expr.args[0])
    if not expr.args:
        raise NeuronDiagramError(f"{b.name} needs at least one predecessor")
    return b.make(domain, list(expr.args))


def lower(sf: SourceFile) -> Module:
    mod = Module(domains={"Bool": BOOL})
    diags = mod.diagnostics

    def err(msg, span):
        diags.append(Diagnostic("error", msg, span))

    for item in sf.of_type(ValuesDecl):
        if item.name in mod.domains:
            err(f"domain {item.name!r} declared twice", item.span)
            continue
        try:
            mod.domains[item.name] = declare_domain(item.name, [(c.name, c.style) for c in item.cases])
        except NeuronDiagramError as e:
            err(str(e), item.span)

    for item in sf.of_type(GraphDecl):
        if item.name in mod.graphs or item.name in mod.diagrams:
            err(f"graph {item.name!r} declared twice", item.span)
            continue
        domain = mod.domains.get(item.domain or "Bool")
        if domain is None:
            err(f"unknown value domain {item.domain!r}", item.span)
            continue
        neurons, spans, ok = [], {}, True
        for nd in item.neurons:
            if nd.name in spans:
                err(str(DuplicateName(nd.name)), nd.span)
                ok = False
                continue
            spans[nd.name] = nd.span
            try:
                neurons.append(Neuron(nd.name, _build(nd.desc, domain)))
            except NeuronDiagramError as e:
                err(f"in neuron {nd.name!r}: {e}", getattr(nd.desc, "span", None) or nd.span)
                ok = False
        if not ok:
            continue
        try:
            g = validate(neurons, item.outputs, domain)
        except UnknownNeuron as e:
            err(str(e), spans.get(e.referenced_by) or item.outputs_span)
            continue
        except CycleError as e:
            err(str(e), spans.get(e.cycle[0], item.span))
            continue
        except NeuronDiagramError as e:
            err(str(e), item.span)
            continue
        for name in g.dropped:
            diags.append(Diagnostic(
                "warning", f"neuron {name!r} is not reachable from any output; ignored",
                spans[name]))
        mod.graphs[item.name] = g

    for item in sf.of_type(DiagramDecl):
        if item.name in mod.diagrams or item.name in mod.graphs:
            err(f"name {item.name!r} already declared", item.span)
            continue
        g = mod.graphs.get(item.graph)
        if g is None:
            err(f"unknown graph {item.graph!r}", item.span)
            continue
        try:
            vals = [parse_value(g.domain, v) for v in item.values]
            mod.diagrams[item.name] = with_inputs(g, vals)
        except NeuronDiagramError as e:
            err(f"diagram {item.name!r}: {e}", item.span)
    return mod


def load(text: str) -> Module:
    """Parse and lower; raise :class:`LangError` if anything failed."""
    mod = lower(parse(text))
    if mod.errors:
        raise LangError(mod.errors)
    return mod


def load_file(path) -> Module:
    return load(Path(path).read_text(encoding="utf-8"))
