"""GraphViz attribute lists.

A style is an ordered tuple of ``(name, value)`` string pairs.  Later pairs
win over earlier ones with the same name when a style is rendered, so
combining styles is plain concatenation.
"""

from typing import Iterable, Tuple

Style = Tuple[Tuple[str, str], ...]

EMPTY: Style = ()


def attr(name: str, value) -> Style:
    return ((name, str(value)),)


def fill_with(color: str) -> Style:
    return attr("fillcolor", color)


def penwidth(width) -> Style:
    return attr("penwidth", width)


def shape(name: str) -> Style:
    return attr("shape", name)


def arrowhead(name: str) -> Style:
    return attr("arrowhead", name)


def merge(*styles: Iterable[Tuple[str, str]]) -> Style:
    out: Style = ()
    for s in styles:
        out += tuple(s)
    return out


def resolved(style: Style) -> dict:
    """Collapse a style into a dict, last write wins, first-seen key order."""
    out = {}
    for k, v in style:
        out[k] = v
    return out
