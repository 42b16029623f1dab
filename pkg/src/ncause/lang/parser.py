"""Recursive-descent parser for ``.nd`` files.

Grammar (EBNF)::

    file        = item* ;
    item        = valuesDecl | graphDecl | diagramDecl ;
    valuesDecl  = "values" IDENT "{" case ("," case)* "}" ;
    case        = IDENT style? ;
    style       = "[" attr ("," attr)* "]" ;   attr = IDENT "=" STRING ;
    graphDecl   = "graph" IDENT ("over" IDENT)? "{" neuron* "outputs" ":" names ";" "}" ;
    neuron      = IDENT ":" desc ";" ;
    desc        = term ("||" term)* ;
    term        = atom ("&&" atom)* ;
    atom        = primary modifier* ;
    primary     = IDENT ( "(" ( NAT ";" names | names )? ")" )? | "(" desc ")" ;
    modifier    = "inhib" "(" names ")" | "unless" "(" IDENT ")" | "kind" ("action" | "law") ;
    names       = IDENT ("," IDENT)* ;
    diagramDecl = "diagram" IDENT "=" IDENT "(" (IDENT ("," IDENT)*)? ")" ";" ;

Builder names in ``primary`` are resolved later, against the description
registry, so user-registered builders parse like the built-in ones.
"""

from __future__ import annotations

from .syntax import (
    Binary,
    Call,
    CaseDecl,
    Diagnostic,
    DiagramDecl,
    GraphDecl,
    Inhib,
    KindMod,
    LangError,
    NeuronDecl,
    SourceFile,
    Token,
    ValuesDecl,
    tokenize,
)

RESERVED = frozenset({
    "values", "graph", "over", "outputs", "diagram",
    "inhib", "unless", "kind", "action", "law",
    "input", "const", "stim", "unstim", "thick", "xor", "byrank",
    "if_", "ifNot", "ifAny", "ifAll",
})


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    # -- token helpers --------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, message, tok=None):
        tok = tok or self.tok
        raise LangError([Diagnostic("error", message, tok.span)])

    def _describe(self, tok):
        return "end of file" if tok.kind == "EOF" else repr(tok.text)

    def at(self, text) -> bool:
        return self.tok.kind in ("OP", "IDENT") and self.tok.text == text

    def expect(self, text) -> Token:
        if not self.at(text):
            self.error(f"expected {text!r}, found {self._describe(self.tok)}")
        t = self.tok
        self.i += 1
        return t

    def ident(self, what="identifier", allow_reserved=False) -> Token:
        t = self.tok
        if t.kind != "IDENT":
            self.error(f"expected {what}, found {self._describe(t)}")
        if not allow_reserved and t.text in RESERVED:
            self.error(f"reserved word {t.text!r} cannot be used as {what}")
        self.i += 1
        return t

    def names(self, what="neuron name") -> tuple:
        out = [self.ident(what).text]
        while self.at(","):
            self.i += 1
            out.append(self.ident(what).text)
        return tuple(out)

    # -- items ----------------------------------------------------------
    def file(self) -> SourceFile:
        items = []
        while self.tok.kind != "EOF":
            if self.at("values"):
                items.append(self.values_decl())
            elif self.at("graph"):
                items.append(self.graph_decl())
            elif self.at("diagram"):
                items.append(self.diagram_decl())
            else:
                self.error(f"expected 'values', 'graph' or 'diagram', found {self._describe(self.tok)}")
        return SourceFile(tuple(items))

    def values_decl(self) -> ValuesDecl:
        start = self.expect("values")
        name = self.ident("domain name").text
        self.expect("{")
        cases = [self.case()]
        while self.at(","):
            self.i += 1
            cases.append(self.case())
        self.expect("}")
        return ValuesDecl(name, tuple(cases), start.span)

    def case(self) -> CaseDecl:
        t = self.ident("case name")
        style = ()
        if self.at("["):
            self.i += 1
            attrs = [self.attr()]
            while self.at(","):
                self.i += 1
                attrs.append(self.attr())
            self.expect("]")
            style = tuple(attrs)
        return CaseDecl(t.text, style, t.span)

    def attr(self):
        key = self.ident("attribute name", allow_reserved=True).text
        self.expect("=")
        t = self.tok
        if t.kind != "STRING":
            self.error(f"expected a string, found {self._describe(t)}")
        self.i += 1
        raw = t.text[1:-1]
        return key, raw.replace('\\"', '"').replace("\\\\", "\\")

    def graph_decl(self) -> GraphDecl:
        start = self.expect("graph")
        name = self.ident("graph name").text
        domain = None
        if self.at("over"):
            self.i += 1
            domain = self.ident("domain name").text
        self.expect("{")
        neurons = []
        while not self.at("outputs"):
            if self.at("}") or self.tok.kind == "EOF":
                self.error("expected 'outputs: ...;' before the end of the graph")
            neurons.append(self.neuron())
        out_tok = self.expect("outputs")
        self.expect(":")
        outputs = self.names()
        self.expect(";")
        self.expect("}")
        return GraphDecl(name, domain, tuple(neurons), outputs, start.span, out_tok.span)

    def neuron(self) -> NeuronDecl:
        t = self.ident("neuron name")
        self.expect(":")
        d = self.desc()
        self.expect(";")
        return NeuronDecl(t.text, d, t.span)

    def diagram_decl(self) -> DiagramDecl:
        start = self.expect("diagram")
        name = self.ident("diagram name").text
        self.expect("=")
        g = self.ident("graph name").text
        self.expect("(")
        vals = ()
        if not self.at(")"):
            vals = self.names("value")
        self.expect(")")
        self.expect(";")
        return DiagramDecl(name, g, vals, start.span)

    # -- descriptions ---------------------------------------------------
    def desc(self):
        left = self.term()
        while self.at("||"):
            t = self.expect("||")
            left = Binary("||", left, self.term(), t.span)
        return left

    def term(self):
        left = self.atom()
        while self.at("&&"):
            t = self.expect("&&")
            left = Binary("&&", left, self.atom(), t.span)
        return left

    def atom(self):
        d = self.primary()
        while True:
            if self.at("inhib"):
                t = self.expect("inhib")
                self.expect("(")
                d = Inhib(d, self.names(), False, t.span)
                self.expect(")")
            elif self.at("unless"):
                t = self.expect("unless")
                self.expect("(")
                d = Inhib(d, (self.ident("neuron name").text,), True, t.span)
                self.expect(")")
            elif self.at("kind"):
                t = self.expect("kind")
                k = self.tok
                if k.kind != "IDENT" or k.text not in ("action", "law"):
                    self.error(f"expected 'action' or 'law', found {self._describe(k)}")
                self.i += 1
                d = KindMod(d, k.text, t.span)
            else:
                return d

    def primary(self):
        if self.at("("):
            self.i += 1
            d = self.desc()
            self.expect(")")
            return d
        t = self.tok
        if t.kind != "IDENT" or t.text in ("inhib", "unless", "kind"):
            self.error(f"expected a neuron description, found {self._describe(t)}")
        self.i += 1
        if not self.at("("):
            return Call(t.text, (), None, True, t.span)
        self.expect("(")
        count, args = None, ()
        if self.tok.kind == "NAT":
            count = int(self.tok.text)
            self.i += 1
            self.expect(";")
            args = self.names()
        elif not self.at(")"):
            args = self.names("argument")
        self.expect(")")
        return Call(t.text, args, count, False, t.span)


def parse(text: str) -> SourceFile:
    """Parse source text; raises :class:`LangError` with a located diagnostic."""
    return _Parser(text).file()
