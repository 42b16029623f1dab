"""Cause inference by local counterfactual reasoning.

For an endogenous neuron, the local cause is the set of minimal groups of
predecessors which, held at their actual values, force the neuron to its
actual value whatever the remaining predecessors do (swept over the whole
domain).  A causal chain is followed by substituting each literal on an
endogenous law neuron with that neuron's own cause; actions and inputs end
the recursion.  Results are kept in disjunctive normal form.
"""

from __future__ import annotations

from array import array
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from . import kernels
from .core import Diagram, Graph, Kind, Neuron
from .errors import ArityTooLarge
from .evaluation import Literal, all_diagrams, evaluate
from .values import Value, ValueDomain, tuples

MAX_ARITY = 16
ORACLE_MAX_ARITY = 10


class Dnf:
    """A disjunction of conjunctions of literals.

    Instances built through :func:`normalize` are canonical: literals
    ordered by graph traversal index, conjunctions ordered by their literal
    index sequences.  Equality ignores ordering.
    """

    __slots__ = ("conjs",)

    def __init__(self, conjs: Iterable[Iterable[Literal]] = ()):
        self.conjs = tuple(tuple(c) for c in conjs)

    @classmethod
    def unit(cls) -> "Dnf":
        return cls([()])

    @classmethod
    def literal(cls, lit: Literal) -> "Dnf":
        return cls([(lit,)])

    @property
    def is_unit(self) -> bool:
        return self.conjs == ((),)

    def _key(self):
        return frozenset(frozenset(c) for c in self.conjs)

    def __eq__(self, other):
        if not isinstance(other, Dnf):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __iter__(self):
        return iter(self.conjs)

    def __len__(self):
        return len(self.conjs)

    def __repr__(self):
        return f"Dnf({self})"

    def __str__(self):
        if not self.conjs:
            return "False"
        return " | ".join(" & ".join(str(l) for l in c) if c else "True" for c in self.conjs)

    def literals(self) -> set:
        return {l for c in self.conjs for l in c}


def normalize(conjs: Iterable[Iterable[Literal]], order: Optional[dict] = None) -> Dnf:
    """Dedupe, drop contradictions, prune subsumed conjunctions, sort."""
    if isinstance(conjs, Dnf):
        conjs = conjs.conjs
    sets = []
    for c in conjs:
        s = frozenset(c)
        if len({l.neuron for l in s}) != len(s):
            continue  # two values for one neuron
        sets.append(s)
    kept = []
    for s in set(sets):
        if not any(o < s for o in sets):
            kept.append(s)

    def lit_key(l):
        return (order[l.neuron] if order else 0, l.neuron, l.value.index)

    ordered = [tuple(sorted(s, key=lit_key)) for s in kept]
    ordered.sort(key=lambda c: [lit_key(l) for l in c])
    return Dnf(ordered)


def conjoin(parts: Sequence[Dnf]) -> list:
    """Distribute a conjunction of DNFs into a flat list of conjunctions."""
    out = [()]
    for p in parts:
        out = [a + b for a in out for b in p.conjs]
    return out


class Causes:
    """Per-terminal cause statements of one diagram, in terminal order."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[tuple]):
        self.entries = tuple(entries)

    def __eq__(self, other):
        if not isinstance(other, Causes):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        return f"Causes({format_causes(self, sep='; ')})"

    def __str__(self):
        return format_causes(self)


# -- local counterfactual analysis ------------------------------------------

def fire_table(desc, domain: ValueDomain) -> array:
    """Output case index of ``desc.fire`` for every predecessor tuple."""
    if desc.arity > MAX_ARITY:
        raise ArityTooLarge(f"{desc.arity} predecessors exceed the limit of {MAX_ARITY}")
    return array("i", (desc.fire(t).index for t in tuples(domain, desc.arity)))


def sufficient_sets(table, actuals: Sequence[Value], radix: int, target: int) -> list:
    """Minimal sufficient position sets, as sorted tuples of positions."""
    masks = kernels.minimal_sufficient(table, [v.index for v in actuals], radix, target)
    k = len(actuals)
    return [tuple(i for i in range(k) if m >> i & 1) for m in masks]


def local_cause(d: Diagram, n, valuation: Optional[dict] = None,
                tables: Optional[dict] = None) -> Dnf:
    """Dnf over ``n``'s predecessor literals explaining its actual value."""
    g = d.graph
    n = g.neuron_in(n) if isinstance(n, str) else n
    vals = valuation if valuation is not None else evaluate(d)
    if n.desc.fire is None:
        return Dnf.literal(Literal(n.name, vals[n.name]))
    srcs = n.pred_names
    actuals = [vals[s] for s in srcs]
    if tables is None:
        tables = {}
    table = tables.get(n.name)
    if table is None:
        table = tables[n.name] = fire_table(n.desc, g.domain)
    sets = sufficient_sets(table, actuals, len(g.domain), vals[n.name].index)
    conjs = [[Literal(srcs[i], actuals[i]) for i in s] for s in sets]
    return normalize(conjs, g.traversal_index())


def _is_chain_end(n: Neuron) -> bool:
    return n.kind is Kind.ACTION or n.is_input


def causes_of(d: Diagram, t, valuation: Optional[dict] = None,
              tables: Optional[dict] = None) -> tuple:
    """Cause of terminal ``t``'s value as ``(Dnf, effect literal)``."""
    g = d.graph
    t = g.neuron_in(t) if isinstance(t, str) else t
    vals = valuation if valuation is not None else evaluate(d)
    effect = Literal(t.name, vals[t.name])
    if t.kind is Kind.ACTION or t.is_exo:
        return Dnf.literal(effect), effect
    order = g.traversal_index()
    tables = {} if tables is None else tables
    memo: dict = {}

    def expand(n: Neuron) -> Dnf:
        if n.name in memo:
            return memo[n.name]
        conjs = []
        for c in local_cause(d, n, vals, tables):
            parts = []
            for lit in c:
                p = g.neuron_in(lit.neuron)
                parts.append(Dnf.literal(lit) if _is_chain_end(p) else expand(p))
            conjs.extend(conjoin(parts))
        memo[n.name] = result = normalize(conjs, order)
        return result

    return expand(t), effect


def causes(d: Diagram, tables: Optional[dict] = None) -> Causes:
    vals = evaluate(d)
    tables = {} if tables is None else tables
    return Causes(causes_of(d, t, vals, tables) for t in d.graph.terminals)


def all_causes(g: Graph, force: bool = False) -> list:
    tables: dict = {}
    return [causes(d, tables) for d in all_diagrams(g, force)]


def format_causes(c: Causes, sep: str = "\n") -> str:
    return sep.join(f"{dnf} ==> {effect}" for dnf, effect in c.entries)


def format_all_causes(cs: Sequence[Causes]) -> str:
    return "[" + ",".join(format_causes(c, sep="; ") for c in cs) + "]"


# -- independent oracle -----------------------------------------------------

def prime_implicant_oracle(fire, actuals: Sequence[Value], domain: ValueDomain) -> list:
    """Minimal sufficient position sets by exhaustive search.

    Every subset of positions is tested by sweeping the other positions
    over the full domain and calling ``fire`` directly; non-minimal
    sufficient sets are pruned afterwards.  Independent of the kernels.
    """
    k = len(actuals)
    if k > ORACLE_MAX_ARITY:
        raise ArityTooLarge(f"oracle handles at most {ORACLE_MAX_ARITY} positions, got {k}")
    target = fire(list(actuals))
    everything = [Value(domain, i) for i in range(len(domain))]
    sufficient = []
    for size in range(k + 1):
        for subset in combinations(range(k), size):
            free = [i for i in range(k) if i not in subset]
            ok = True
            for assignment in product(everything, repeat=len(free)):
                vs = list(actuals)
                for i, v in zip(free, assignment):
                    vs[i] = v
                if fire(vs) != target:
                    ok = False
                    break
            if ok:
                sufficient.append(frozenset(subset))
    minimal = [s for s in sufficient if not any(o < s for o in sufficient)]
    return sorted((tuple(sorted(s)) for s in minimal), key=lambda s: (len(s), s))
