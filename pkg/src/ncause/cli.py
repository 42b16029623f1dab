"""``ncause`` command line.

Exit status: 0 on success (or "equal"), 1 when ``equal`` finds a
difference, 2 on usage, parse or validation errors.  Results go to
standard output, diagnostics to standard error.
"""

from __future__ import annotations

import functools
import sys
from pathlib import Path

import click

from .cause import all_causes, causes, format_all_causes, format_causes
from .dot import dot_diagram, dot_graph
from .errors import NeuronDiagramError
from .evaluation import effects, evaluate, format_effects, format_valuation
from .lang import LangError, lower, parse


class _Failure(click.ClickException):
    exit_code = 2

    def show(self, file=None):
        click.echo(self.format_message(), err=True)


def _load(path):
    text = Path(path).read_text(encoding="utf-8")
    try:
        mod = lower(parse(text))
    except LangError as e:
        mod = None
        diags = e.diagnostics
    else:
        diags = mod.diagnostics
    for d in diags:
        click.echo(d.render(str(path)), err=True)
    if mod is None or mod.errors:
        raise _Failure(f"{path}: failed to load")
    return mod


def _pick(mod, graph_name, diagram_name, *, need_diagram=False):
    if need_diagram:
        if not diagram_name:
            raise click.UsageError("--diagram NAME is required")
        return None, _lookup(mod.diagrams, diagram_name, "diagram")
    if bool(graph_name) == bool(diagram_name):
        raise click.UsageError("give exactly one of --graph NAME or --diagram NAME")
    if graph_name:
        return _lookup(mod.graphs, graph_name, "graph"), None
    d = _lookup(mod.diagrams, diagram_name, "diagram")
    return d.graph, d


def _lookup(table, name, what):
    try:
        return table[name]
    except KeyError:
        raise _Failure(f"no {what} named {name!r}; declared: {', '.join(sorted(table)) or 'none'}") from None


def _graph_by_name(mod, name):
    if name in mod.graphs:
        return mod.graphs[name]
    if name in mod.diagrams:
        return mod.diagrams[name].graph
    raise _Failure(f"no graph or diagram named {name!r}")


file_arg = click.argument("file", type=click.Path(exists=True, dir_okay=False))
graph_opt = click.option("--graph", "graph_name", metavar="NAME", help="Graph to use.")
diagram_opt = click.option("--diagram", "diagram_name", metavar="NAME", help="Diagram to use.")
force_opt = click.option("--force", is_flag=True, help="Enumerate even very large input spaces.")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(package_name="artifact", prog_name="ncause")
def main():
    """Evaluate, explain and draw neuron diagrams written in .nd files."""


def _guard(fn):
    """Report library errors as exit status 2 instead of a traceback."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except NeuronDiagramError as e:
            raise _Failure(str(e)) from None
    return wrapper


@main.command()
@file_arg
def check(file):
    """Parse and validate FILE, printing diagnostics only."""
    _load(file)


@main.command("eval")
@file_arg
@diagram_opt
@click.option("--neuron", metavar="NAME", help="Print only this neuron.")
@_guard
def eval_cmd(file, diagram_name, neuron):
    """Print the value of every neuron in a diagram."""
    _, d = _pick(_load(file), None, diagram_name, need_diagram=True)
    vals = evaluate(d)
    if neuron:
        d.graph.neuron_in(neuron)
        click.echo(f"{neuron}:{vals[neuron]}")
    else:
        click.echo(format_valuation(d.graph, vals))


@main.command("causes")
@file_arg
@diagram_opt
@_guard
def causes_cmd(file, diagram_name):
    """Print the causes of each terminal neuron of a diagram."""
    _, d = _pick(_load(file), None, diagram_name, need_diagram=True)
    click.echo(format_causes(causes(d)))


@main.command("effects")
@file_arg
@graph_opt
@diagram_opt
@force_opt
@_guard
def effects_cmd(file, graph_name, diagram_name, force):
    """Print the firing semantics of a graph as an input/output table."""
    g, _ = _pick(_load(file), graph_name, diagram_name)
    click.echo(format_effects(effects(g, force=force)))


@main.command("all-causes")
@file_arg
@graph_opt
@diagram_opt
@force_opt
@_guard
def all_causes_cmd(file, graph_name, diagram_name, force):
    """Print the causes of every diagram a graph can generate."""
    g, _ = _pick(_load(file), graph_name, diagram_name)
    click.echo(format_all_causes(all_causes(g, force=force)))


@main.command("dot")
@file_arg
@graph_opt
@diagram_opt
@click.option("-o", "output", type=click.Path(dir_okay=False, writable=True),
              help="Write DOT here instead of standard output.")
@_guard
def dot_cmd(file, graph_name, diagram_name, output):
    """Emit GraphViz DOT for a graph (dashed, unfilled) or a diagram (filled)."""
    mod = _load(file)
    if bool(graph_name) == bool(diagram_name):
        raise click.UsageError("give exactly one of --graph NAME or --diagram NAME")
    if graph_name:
        text = dot_graph(_lookup(mod.graphs, graph_name, "graph"), graph_name)
    else:
        text = dot_diagram(_lookup(mod.diagrams, diagram_name, "diagram"), diagram_name)
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


@main.command()
@file_arg
@click.option("--effects", "effects_pair", nargs=2, metavar="A B",
              help="Compare the firing semantics of two graphs.")
@click.option("--causes", "causes_pair", nargs=2, metavar="A B",
              help="Compare the causes of all diagrams of two graphs.")
@force_opt
@_guard
def equal(file, effects_pair, causes_pair, force):
    """Compare two graphs; prints True/False and exits 0/1."""
    if bool(effects_pair) == bool(causes_pair):
        raise click.UsageError("give exactly one of --effects A B or --causes A B")
    mod = _load(file)
    a, b = (_graph_by_name(mod, n) for n in (effects_pair or causes_pair))
    if effects_pair:
        same = effects(a, force=force) == effects(b, force=force)
    else:
        same = all_causes(a, force=force) == all_causes(b, force=force)
    click.echo(str(same))
    sys.exit(0 if same else 1)


if __name__ == "__main__":
    main()
