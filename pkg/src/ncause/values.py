"""Finite value domains.

Every domain is bounded and enumerable by construction.  Case 0 plays the
"neutral" (non-firing) role; the remaining cases count as firing.  The
built-in boolean domain is ``BOOL`` with cases ``False`` then ``True``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import style as st
from .errors import DomainError, DuplicateCase, EmptyDomain, UnknownCase


@dataclass(frozen=True)
class ValueDomain:
    name: str
    cases: tuple
    fills: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if not self.fills:
            object.__setattr__(self, "fills", tuple(st.EMPTY for _ in self.cases))

    def __len__(self):
        return len(self.cases)

    def __repr__(self):
        return f"ValueDomain({self.name!r}, {list(self.cases)!r})"

    @property
    def is_boolean(self) -> bool:
        return self == BOOL

    @property
    def neutral(self) -> "Value":
        return Value(self, 0)

    def value(self, index: int) -> "Value":
        if not 0 <= index < len(self.cases):
            raise DomainError(f"case index {index} out of range for {self.name}")
        return Value(self, index)

    def coerce(self, x) -> "Value":
        """Accept a Value of this domain, a case name, or (for BOOL) a bool."""
        if isinstance(x, Value):
            if x.domain != self:
                raise DomainError(f"{x} belongs to {x.domain.name}, not {self.name}")
            return x
        if isinstance(x, bool) and self.is_boolean:
            return Value(self, int(x))
        if isinstance(x, str):
            return parse_value(self, x)
        raise DomainError(f"cannot interpret {x!r} as a value of {self.name}")


@dataclass(frozen=True)
class Value:
    domain: ValueDomain
    index: int

    @property
    def name(self) -> str:
        return self.domain.cases[self.index]

    @property
    def fill(self) -> st.Style:
        return self.domain.fills[self.index]

    @property
    def is_neutral(self) -> bool:
        return self.index == 0

    def __bool__(self):
        return self.index != 0

    def __lt__(self, other):
        return self.index < other.index

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"{self.domain.name}.{self.name}"


def declare_domain(name: str, cases: Sequence) -> ValueDomain:
    """Build a domain from case names, or ``(case_name, fill_style)`` pairs.

    A fill style may be given as a colour string or as a style tuple.
    """
    if not cases:
        raise EmptyDomain(f"domain {name!r} declares no cases")
    names, fills = [], []
    for c in cases:
        if isinstance(c, str):
            cname, fill = c, st.EMPTY
        else:
            cname, fill = c
            if isinstance(fill, str):
                fill = st.fill_with(fill)
            fill = tuple(fill or ())
        if cname in names:
            raise DuplicateCase(f"case {cname!r} declared twice in {name!r}")
        names.append(cname)
        fills.append(fill)
    if len(names) < 2:
        raise EmptyDomain(f"domain {name!r} needs at least two cases")
    return ValueDomain(name, tuple(names), tuple(fills))


BOOL = ValueDomain("Bool", ("False", "True"), (st.EMPTY, st.fill_with("gray")))
FALSE = Value(BOOL, 0)
TRUE = Value(BOOL, 1)

ORDER = declare_domain(
    "Order", [("None", None), ("Charge", "palegreen"), ("Retreat", "orangered")]
)


def bool_domain() -> ValueDomain:
    return BOOL


def enumerate_domain(domain: ValueDomain) -> list:
    return [Value(domain, i) for i in range(len(domain))]


def parse_value(domain: ValueDomain, text: str) -> Value:
    if text in domain.cases:
        return Value(domain, domain.cases.index(text))
    if domain.is_boolean and text.lower() in ("true", "false"):
        return TRUE if text.lower() == "true" else FALSE
    raise UnknownCase(f"{text!r} is not a case of {domain.name} {list(domain.cases)}")


def print_value(v: Value) -> str:
    return v.name


def tuples(domain: ValueDomain, k: int) -> Iterator[tuple]:
    """All k-tuples of domain values, lexicographic with the last position fastest."""
    return itertools.product(enumerate_domain(domain), repeat=k)
