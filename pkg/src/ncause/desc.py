"""Neuron descriptions: builders, decorators and composition.

A :class:`Description` bundles the four facets every neuron needs: its
kind, its firing function (absent for inputs), its node style and its
incoming edges.  Builders are registered by name in :data:`REGISTRY` so
the DSL front end can resolve keywords to them and library users can add
new kinds of neuron without touching the parser.

Firing functions take the predecessor values in edge order and return one
value of the same domain.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

from . import style as st
from .core import Edge, Kind
from .errors import BadThreshold, DomainMismatch, UndecoratableInput, UnknownBuilder
from .values import BOOL, FALSE, TRUE, Value, ValueDomain

FiringFunction = Callable[[Sequence[Value]], Value]

PLAIN = st.EMPTY
INHIBITING = st.arrowhead("dot")
UNSTIMULATING = st.arrowhead("empty")


@dataclass(frozen=True)
class Description:
    ident: tuple
    kind: Kind = field(default=Kind.LAW, compare=False)
    fire: Optional[FiringFunction] = field(default=None, compare=False)
    style: st.Style = field(default=st.EMPTY, compare=False)
    edges: tuple = field(default=(), compare=False)
    # None means "usable in any domain" (only inputs are)
    domain: Optional[ValueDomain] = None

    @property
    def arity(self) -> int:
        return len(self.edges)

    @property
    def sources(self) -> list:
        return [e.source for e in self.edges]

    def __repr__(self):
        return f"Description{self.ident!r}"


def styled(s: st.Style, names: Sequence[str]) -> tuple:
    return tuple(Edge(n, s) for n in names)


def plain(names: Sequence[str]) -> tuple:
    return styled(PLAIN, names)


def _names(ns) -> tuple:
    out = []
    for n in ns:
        out.append(n if isinstance(n, str) else n.name)
    return tuple(out)


def _require_bool(builder: str, domain: ValueDomain):
    if not domain.is_boolean:
        raise DomainMismatch(f"{builder} is only defined over Bool, not {domain.name}")


def _require_fire(d: Description, what: str):
    if d.fire is None:
        raise UndecoratableInput(f"{what} needs a description with a firing function")


# -- firing helpers -----------------------------------------------------------

def count(vs: Sequence[Value]) -> int:
    """Number of firing (non-neutral) values."""
    return sum(1 for v in vs if v.index)


def resolve(vs: Sequence[Value], domain: ValueDomain) -> Value:
    """Plurality among the non-neutral values; neutral when the top count ties.

    Over Bool this is plain disjunction.
    """
    tally = [0] * len(domain)
    for v in vs:
        tally[v.index] += 1
    best, best_n, tie = 0, 0, False
    for i in range(1, len(domain)):
        if tally[i] > best_n:
            best, best_n, tie = i, tally[i], False
        elif tally[i] == best_n and best_n:
            tie = True
    return Value(domain, 0 if tie else best)


def extend(d: Description, combine: Callable, summarize: Callable) -> FiringFunction:
    """Extend ``d``'s firing function with extra predecessors.

    The first ``d.arity`` values go to the original firing function, the
    rest to ``summarize``; the two results are merged with ``combine``.
    """
    _require_fire(d, "extend")
    k = d.arity
    f = d.fire

    def fire(vs):
        return combine(f(vs[:k]), summarize(vs[k:]))

    return fire


# -- exogenous ------------------------------------------------------------

def input() -> Description:  # noqa: A001 - mirrors the DSL keyword
    return Description(("input",), kind=Kind.ACTION)


def const(v: Value) -> Description:
    return Description(("const", v.name), fire=lambda _vs: v, domain=v.domain)


# -- endogenous -----------------------------------------------------------

def stim_by(ns, domain: ValueDomain = BOOL) -> Description:
    names = _names(ns)
    if domain.is_boolean:
        def fire(vs):
            return TRUE if any(v.index for v in vs) else FALSE
    else:
        def fire(vs):
            return resolve(vs, domain)
    return Description(("stim", names), fire=fire, edges=plain(names), domain=domain)


def stim_by_order(ns, domain: ValueDomain) -> Description:
    if domain.is_boolean:
        raise DomainMismatch("stim_by_order needs a domain with a neutral case and several firing cases")
    return stim_by(ns, domain)


def unstim_by(ns, domain: ValueDomain = BOOL) -> Description:
    _require_bool("unstim", domain)
    names = _names(ns)

    def fire(vs):
        return TRUE if any(not v.index for v in vs) else FALSE

    return Description(("unstim", names), fire=fire,
                       edges=styled(UNSTIMULATING, names), domain=domain)


def thick(k: int, ns, domain: ValueDomain = BOOL) -> Description:
    _require_bool("thick", domain)
    names = _names(ns)
    if not 0 < k <= len(names):
        raise BadThreshold(f"thick threshold {k} must be in 1..{len(names)}")

    def fire(vs):
        return TRUE if count(vs) >= k else FALSE

    return Description(("thick", k, names), fire=fire, style=st.penwidth(3),
                       edges=plain(names), domain=domain)


def xor(ns, domain: ValueDomain = BOOL) -> Description:
    _require_bool("xor", domain)
    names = _names(ns)

    def fire(vs):
        return TRUE if count(vs) == 1 else FALSE

    return Description(("xor", names), fire=fire, style=st.shape("diamond"),
                       edges=plain(names), domain=domain)


def by_rank(ns, domain: ValueDomain) -> Description:
    """First non-neutral predecessor value, predecessors listed by decreasing rank."""
    names = _names(ns)
    neutral = domain.neutral

    def fire(vs):
        for v in vs:
            if v.index:
                return v
        return neutral

    return Description(("byrank", names), fire=fire, style=st.shape("pentagon"),
                       edges=plain(names), domain=domain)


# -- decorators -----------------------------------------------------------

def inhib_by(d: Description, ns) -> Description:
    _require_fire(d, "inhib")
    names = _names(ns)
    domain = d.domain
    if domain.is_boolean:
        fire = extend(d, lambda o, ok: TRUE if (o.index and ok) else FALSE,
                      lambda vs: all(not v.index for v in vs))
    else:
        neutral = domain.neutral
        fire = extend(d, lambda o, hit: neutral if hit else o,
                      lambda vs: any(v.index for v in vs))
    return replace(d, ident=("inhib", d.ident, names), fire=fire,
                   edges=d.edges + styled(INHIBITING, names))


def unless(d: Description, n) -> Description:
    return inhib_by(d, [n])


def is_kind(d: Description, k: Kind) -> Description:
    return replace(d, ident=("kind", d.ident, k.value), kind=k)


def _compose(op: str, l: Description, r: Description, combine) -> Description:
    _require_fire(l, op)
    _require_fire(r, op)
    if l.domain != r.domain:
        raise DomainMismatch(f"{op} operands use different domains")
    _require_bool(op, l.domain)
    return Description((op, l.ident, r.ident), kind=r.kind,
                       fire=extend(l, combine, r.fire),
                       style=st.merge(l.style, r.style),
                       edges=l.edges + r.edges, domain=l.domain)


def or_d(l: Description, r: Description) -> Description:
    return _compose("||", l, r, lambda a, b: TRUE if (a.index or b.index) else FALSE)


def and_d(l: Description, r: Description) -> Description:
    return _compose("&&", l, r, lambda a, b: TRUE if (a.index and b.index) else FALSE)


# -- conditional sugar ----------------------------------------------------

def if_(n, domain: ValueDomain = BOOL) -> Description:
    return stim_by([n], domain)


def if_not(n, domain: ValueDomain = BOOL) -> Description:
    return unstim_by([n], domain)


def if_any(ns, domain: ValueDomain = BOOL) -> Description:
    return stim_by(ns, domain)


def if_all(ns, domain: ValueDomain = BOOL) -> Description:
    ns = list(ns)
    return thick(len(ns), ns, domain)


# -- registry -------------------------------------------------------------

@dataclass(frozen=True)
class Builder:
    """A named description builder.

    ``params`` selects the argument shape the DSL passes after the domain:
    ``""`` (bare keyword), ``"names"``, ``"name"``, ``"count;names"`` or
    ``"value"``.
    """

    name: str
    make: Callable[..., Description]
    params: str


REGISTRY: dict = {}


def register_builder(name: str, make: Callable[..., Description], params: str = "names"):
    if params not in ("", "names", "name", "count;names", "value"):
        raise ValueError(f"unsupported parameter shape {params!r}")
    REGISTRY[name] = Builder(name, make, params)
    return REGISTRY[name]


def lookup_builder(name: str) -> Builder:
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownBuilder(f"no neuron description called {name!r}") from None


register_builder("input", lambda domain: input(), "")
register_builder("const", lambda domain, v: const(v), "value")
register_builder("stim", lambda domain, ns: stim_by(ns, domain))
register_builder("unstim", lambda domain, ns: unstim_by(ns, domain))
register_builder("thick", lambda domain, k, ns: thick(k, ns, domain), "count;names")
register_builder("xor", lambda domain, ns: xor(ns, domain))
register_builder("byrank", lambda domain, ns: by_rank(ns, domain))
register_builder("if_", lambda domain, n: if_(n, domain), "name")
register_builder("ifNot", lambda domain, n: if_not(n, domain), "name")
register_builder("ifAny", lambda domain, ns: if_any(ns, domain))
register_builder("ifAll", lambda domain, ns: if_all(ns, domain))
