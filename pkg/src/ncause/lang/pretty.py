"""Render a syntax tree back to ``.nd`` source."""

from .syntax import Binary, Call, DiagramDecl, GraphDecl, Inhib, KindMod, SourceFile, ValuesDecl

_PREC = {"||": 0, "&&": 1}


def _desc(d, prec=0) -> str:
    if isinstance(d, Binary):
        p = _PREC[d.op]
        s = f"{_desc(d.left, p)} {d.op} {_desc(d.right, p + 1)}"
        return f"({s})" if p < prec else s
    if isinstance(d, Inhib):
        base = _desc(d.base, 2)
        if d.unless:
            return f"{base} unless({d.names[0]})"
        return f"{base} inhib({', '.join(d.names)})"
    if isinstance(d, KindMod):
        return f"{_desc(d.base, 2)} kind {d.kind}"
    if isinstance(d, Call):
        if d.bare:
            return d.builder
        args = ", ".join(d.args)
        if d.count is not None:
            args = f"{d.count}; {args}"
        return f"{d.builder}({args})"
    raise TypeError(f"not a description node: {d!r}")


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def pretty(sf: SourceFile) -> str:
    out = []
    for item in sf.items:
        if isinstance(item, ValuesDecl):
            cases = []
            for c in item.cases:
                if c.style:
                    attrs = ", ".join(f"{k}={_quote(v)}" for k, v in c.style)
                    cases.append(f"{c.name} [{attrs}]")
                else:
                    cases.append(c.name)
            out.append(f"values {item.name} {{ {', '.join(cases)} }}")
        elif isinstance(item, GraphDecl):
            over = f" over {item.domain}" if item.domain else ""
            out.append(f"graph {item.name}{over} {{")
            for n in item.neurons:
                out.append(f"  {n.name} : {_desc(n.desc)};")
            out.append(f"  outputs: {', '.join(item.outputs)};")
            out.append("}")
        elif isinstance(item, DiagramDecl):
            out.append(f"diagram {item.name} = {item.graph}({', '.join(item.values)});")
        out.append("")
    return "\n".join(out)
