"""Tokens, syntax tree and diagnostics for ``.nd`` source files."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Tuple

from ..errors import NeuronDiagramError


@dataclass(frozen=True)
class Span:
    line: int
    col: int

    def __str__(self):
        return f"{self.line}:{self.col}"


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" | "warning"
    message: str
    span: Span

    def __str__(self):
        return f"{self.span}: {self.severity}: {self.message}"

    def render(self, filename: str = "<input>") -> str:
        return f"{filename}:{self}"


class LangError(NeuronDiagramError):
    """Parsing or lowering failed; ``diagnostics`` holds the details."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


# -- lexing -----------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str   # IDENT NAT STRING OP EOF
    text: str
    span: Span


_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r\f\v]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<NAT>[0-9]+)
  | (?P<STRING>"(?:[^"\\\n]|\\.)*")
  | (?P<OP>&&|\|\||[{}()\[\],;:=])
""", re.VERBOSE)


def tokenize(text: str) -> list:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        span = Span(line, pos - line_start + 1)
        if m is None:
            raise LangError([Diagnostic("error", f"unexpected character {text[pos]!r}", span)])
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), span))
        pos = m.end()
    tokens.append(Token("EOF", "", Span(line, pos - line_start + 1)))
    return tokens


# -- syntax tree ------------------------------------------------------------

@dataclass(frozen=True)
class CaseDecl:
    name: str
    style: Tuple[Tuple[str, str], ...] = ()
    span: Optional[Span] = field(default=None, compare=False)


@dataclass(frozen=True)
class ValuesDecl:
    name: str
    cases: Tuple[CaseDecl, ...]
    span: Optional[Span] = field(default=None, compare=False)


@dataclass(frozen=True)
class Call:
    """A builder application: ``input``, ``stim(A, B)``, ``thick(2; A, B)``..."""

    builder: str
    args: Tuple[str, ...] = ()
    count: Optional[int] = None
    bare: bool = False
    span: Optional[Span] = field(default=None, compare=False)


@dataclass(frozen=True)
class Binary:
    op: str  # "&&" | "||"
    left: object
    right: object
    span: Optional[Span] = field(default=None, compare=False)


@dataclass(frozen=True)
class Inhib:
    base: object
    names: Tuple[str, ...]
    unless: bool = False
    span: Optional[Span] = field(default=None, compare=False)


@dataclass(frozen=True)
class KindMod:
    base: object
    kind: str  # "action" | "law"
    span: Optional[Span] = field(default=None, compare=False)


@dataclass(frozen=True)
class NeuronDecl:
    name: str
    desc: object
    span: Optional[Span] = field(default=None, compare=False)


@dataclass(frozen=True)
class GraphDecl:
    name: str
    domain: Optional[str]
    neurons: Tuple[NeuronDecl, ...]
    outputs: Tuple[str, ...]
    span: Optional[Span] = field(default=None, compare=False)
    outputs_span: Optional[Span] = field(default=None, compare=False)


@dataclass(frozen=True)
class DiagramDecl:
    name: str
    graph: str
    values: Tuple[str, ...]
    span: Optional[Span] = field(default=None, compare=False)


@dataclass(frozen=True)
class SourceFile:
    items: tuple

    def of_type(self, cls) -> list:
        return [i for i in self.items if isinstance(i, cls)]
