import re

import pydot
import pytest

from ncause.dot import LAW_MARK, dot_diagram, dot_graph
from ncause.lang import corpus


def nodes(text):
    """name -> attribute dict for every node statement."""
    out = {}
    for m in re.finditer(r'^  "(\w+)" \[(.*)\];$', text, re.M):
        out[m.group(1)] = dict(re.findall(r'(\w+)="([^"]*)"', m.group(2)))
    return out


def edges(text):
    return [(a, b, dict(re.findall(r'(\w+)="([^"]*)"', rest)))
            for a, b, rest in re.findall(r'^  "(\w+)" -> "(\w+)"(.*);$', text, re.M)]


def test_trump_diagram(load_corpus):
    text = dot_diagram(load_corpus("trump.nd").diagram("trump"), "trump")
    ns = nodes(text)
    assert list(ns) == ["Gen", "Maj", "MajE", "Pvt"]
    assert ns["MajE"] == {"label": "MajE" + LAW_MARK}
    assert ns["Pvt"]["fillcolor"] == "gray" and ns["Pvt"]["style"] == "filled"
    assert ("Gen", "MajE", {"arrowhead": "dot"}) in edges(text)
    assert ("Maj", "MajE", {}) in edges(text)


def test_graph_is_dashed_and_unfilled(load_corpus):
    text = dot_graph(load_corpus("orders_nonbool.nd").graph("byRankGraph"), "byRankGraph")
    for attrs in nodes(text).values():
        assert attrs["style"] == "dashed" and "fillcolor" not in attrs
    assert nodes(text)["Pvt"]["shape"] == "pentagon"


def test_order_fills(load_corpus):
    m = load_corpus("orders_nonbool.nd")
    ns = nodes(dot_diagram(m.diagram("trumpOrder")))
    assert ns["Gen"]["fillcolor"] == "palegreen"
    assert ns["Maj"]["fillcolor"] == "orangered"
    assert "fillcolor" not in ns["MajE"]
    ns = nodes(dot_diagram(m.diagram("trumpSilentGeneral")))
    assert "style" not in ns["Gen"]


def test_unstimulating_arrow(load_corpus):
    text = dot_diagram(load_corpus("party.nd").diagram("johnGoes"))
    assert ("John", "Sue", {"arrowhead": "empty"}) in edges(text)


@pytest.mark.parametrize("name", sorted(corpus()))
def test_every_corpus_file_parses_with_pydot(load_corpus, name):
    m = load_corpus(name)
    texts = [dot_graph(g, n) for n, g in m.graphs.items()]
    texts += [dot_diagram(d, n) for n, d in m.diagrams.items()]
    for text in texts:
        [parsed] = pydot.graph_from_dot_data(text)
        assert {e.get_destination().strip('"') for e in parsed.get_edges()} <= set(nodes(text))


def test_quoting():
    from ncause import desc as D
    from ncause.core import Neuron, validate
    g = validate([Neuron("A", D.input())], ["A"])
    text = dot_graph(g, 'say "hi"')
    assert text.startswith('digraph "say \\"hi\\"" {')
    assert pydot.graph_from_dot_data(text)
