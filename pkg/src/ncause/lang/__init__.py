"""The ``.nd`` text format: parsing, pretty-printing and lowering."""

from importlib import resources

from .lower import Module, load, load_file, lower
from .parser import RESERVED, parse
from .pretty import pretty
from .syntax import Diagnostic, LangError, SourceFile, Span

__all__ = [
    "Module", "load", "load_file", "lower", "parse", "pretty", "corpus",
    "corpus_path", "Diagnostic", "LangError", "SourceFile", "Span", "RESERVED",
]


def corpus() -> dict:
    """Shipped example files, name -> source text."""
    root = resources.files("ncause") / "corpus"
    return {p.name: p.read_text(encoding="utf-8")
            for p in sorted(root.iterdir(), key=lambda p: p.name) if p.name.endswith(".nd")}


def corpus_path(name: str):
    return resources.files("ncause") / "corpus" / name
