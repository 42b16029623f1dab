import pytest

from ncause import desc as D
from ncause.core import Kind, Neuron, change_inputs, validate, with_inputs
from ncause.errors import (
    ArityError,
    CycleError,
    DomainError,
    DuplicateName,
    EmptyTerminals,
    NameNotFound,
    UnknownNeuron,
)
from ncause.values import ORDER, TRUE


def trump_graph():
    return validate([
        Neuron("Gen", D.input()),
        Neuron("Maj", D.input()),
        Neuron("MajE", D.inhib_by(D.stim_by(["Maj"]), ["Gen"])),
        Neuron("Pvt", D.stim_by(["Gen", "MajE"])),
    ], ["Pvt"])


def orders_graph():
    return validate([
        Neuron("Gen", D.input()),
        Neuron("Maj", D.input()),
        Neuron("Pvt", D.stim_by(["Gen", "Maj"])),
    ], ["Pvt"])


def names(ns):
    return [n.name for n in ns]


def test_preds():
    assert names(orders_graph().preds("Pvt")) == ["Gen", "Maj"]
    assert orders_graph().preds("Gen") == []
    # wrapped edges come before the decorator's edges
    assert names(trump_graph().preds("MajE")) == ["Maj", "Gen"]


def test_upstream():
    g = trump_graph()
    assert names(g.upstream("Pvt")) == ["Gen", "MajE", "Maj"]
    assert g.upstream("Gen") == []


def test_input_order():
    assert list(orders_graph().input_order) == ["Gen", "Maj"]
    single = validate([Neuron("A", D.input())], ["A"])
    assert list(single.input_order) == ["A"]


def test_input_order_follows_terminal_dfs_not_declaration():
    g = validate([
        Neuron("Dead", D.unless(D.if_("Shot"), "Saved")),
        Neuron("Saved", D.if_all(["Remove", "Washed"])),
        Neuron("Remove", D.is_kind(D.if_("Shot"), Kind.ACTION)),
        Neuron("Washed", D.input()),
        Neuron("Shot", D.input()),
    ], ["Dead"])
    assert list(g.input_order) == ["Shot", "Washed"]


def test_topological_order_breaks_ties_by_declaration():
    assert list(trump_graph().topo_order) == ["Gen", "Maj", "MajE", "Pvt"]


def test_validate_errors():
    with pytest.raises(CycleError) as e:
        validate([Neuron("A", D.stim_by(["A"]))], ["A"])
    assert e.value.cycle == ["A"]
    with pytest.raises(CycleError) as e:
        validate([Neuron("A", D.stim_by(["B"])), Neuron("B", D.stim_by(["A"]))], ["A"])
    assert sorted(e.value.cycle) == ["A", "B"]
    with pytest.raises(UnknownNeuron) as e:
        validate([Neuron("A", D.stim_by(["Q"]))], ["A"])
    assert e.value.name == "Q"
    with pytest.raises(DuplicateName):
        validate([Neuron("A", D.input()), Neuron("A", D.const(TRUE))], ["A"])
    with pytest.raises(EmptyTerminals):
        validate([Neuron("A", D.input())], [])


def test_unreachable_neurons_are_dropped(caplog):
    g = validate([Neuron("A", D.input()), Neuron("Lost", D.input())], ["A"])
    assert "Lost" not in g
    assert g.dropped == ("Lost",)
    assert "Lost" in caplog.text


def test_change_inputs_keeps_graph():
    g = orders_graph()
    major = with_inputs(g, [False, True])
    both = change_inputs(major, [True, True])
    assert both.graph == major.graph
    assert change_inputs(major, major.inputs) == major
    with pytest.raises(ArityError) as e:
        change_inputs(major, [True])
    assert (e.value.expected, e.value.got) == (2, 1)
    with pytest.raises(DomainError):
        change_inputs(major, [True, ORDER.value(1)])


def test_graph_equality_is_structural():
    assert trump_graph() == trump_graph()
    assert trump_graph() != orders_graph()


def test_neuron_queries():
    g = trump_graph()
    with pytest.raises(NameNotFound):
        g.neuron_in("Nope")
    gen, maje = g.neuron_in("Gen"), g.neuron_in("MajE")
    assert gen.is_input and gen.is_exo and not gen.is_endo
    assert maje.is_endo and not maje.is_input
    c = Neuron("C", D.const(TRUE))
    assert c.is_exo and not c.is_input and c.kind is Kind.LAW
