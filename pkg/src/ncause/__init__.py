"""Neuron diagrams: build, evaluate, explain and draw causal stories.

Typical use::

    from ncause import lang, causes
    mod = lang.load_file("orders.nd")
    print(causes(mod.diagram("majorOrders")))
"""

import logging

from . import desc
from .cause import Causes, Dnf, all_causes, causes, causes_of, local_cause, prime_implicant_oracle
from .core import (
    Diagram,
    Edge,
    Graph,
    Kind,
    Neuron,
    change_inputs,
    graph,
    graph_of,
    validate,
    with_inputs,
)
from .dot import dot_diagram, dot_graph
from .evaluation import Effects, Literal, all_diagrams, as_function, effects, evaluate, state_in
from .values import BOOL, FALSE, ORDER, TRUE, Value, ValueDomain, declare_domain, parse_value

logging.getLogger(__name__).addHandler(logging.NullHandler())

__version__ = "0.1.0"

__all__ = [
    "desc", "Causes", "Dnf", "all_causes", "causes", "causes_of", "local_cause",
    "prime_implicant_oracle", "Diagram", "Edge", "Graph", "Kind", "Neuron",
    "change_inputs", "graph", "graph_of", "validate", "with_inputs", "dot_diagram",
    "dot_graph", "Effects", "Literal", "all_diagrams", "as_function", "effects",
    "evaluate", "state_in", "BOOL", "FALSE", "ORDER", "TRUE", "Value", "ValueDomain",
    "declare_domain", "parse_value",
]
