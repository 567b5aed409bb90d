"""Concrete syntax for terms: parser, printer, and dot renderer.

Grammar:

    term := par (';' par)*
    par  := atom ('*' atom)*
    atom := 'id' '[' nat ']' | 'swap' | 'mu' | 'eta' | 'delta' | 'eps'
          | 'scalar' '(' literal ')' | '(' term ')'

';' reads top-to-bottom ("f ; g" is f first) and binds looser than '*'.
Scalar literals use the grammar of the chosen rig.  A term file may start
with a directive line "#rig <name>".
"""

from __future__ import annotations

from .errors import ParseError, SourceSpan
from .rigs import Rig, RigElement, get_rig
from .terms import (
    DELTA, EPS, ETA, MU, SWAP,
    Arity, Id, Par, Scalar, Seq, Swap, Mu, Eta, Delta, Eps, Term,
    arity_of, par_parts, seq_parts,
)

_KEYWORD_ARITIES = {
    "swap": (SWAP, Arity(2, 2)),
    "mu": (MU, Arity(2, 1)),
    "eta": (ETA, Arity(0, 1)),
    "delta": (DELTA, Arity(1, 2)),
    "eps": (EPS, Arity(1, 0)),
}


class _Parser:
    def __init__(self, src: str, rig: Rig):
        self.src = src
        self.rig = rig
        self.pos = 0

    def error(self, message: str, start: int, end: int | None = None):
        # clamp to the input so spans always point inside it
        limit = len(self.src)
        start = min(start, limit)
        end = min(end if end is not None else start + 1, limit)
        raise ParseError(message, SourceSpan(start, max(start, end)))

    def skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}", self.pos)
        self.pos += 1

    def name(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isalpha():
            self.pos += 1
        if self.pos == start:
            self.error("expected a generator name", start)
        return self.src[start:self.pos], start

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a number", start)
        return int(self.src[start:self.pos])

    def term(self) -> tuple[Term, Arity, SourceSpan]:
        items = [self.par()]
        while self.peek() == ";":
            self.pos += 1
            items.append(self.par())
        t, a, sp = items[-1]
        for prev, pa, psp in reversed(items[:-1]):
            if pa.cod != a.dom:
                self.error(
                    f"sequential mismatch: left side yields {pa.cod} wires, "
                    f"right side expects {a.dom}",
                    sp.start,
                    sp.end,
                )
            t = Seq(prev, t)
            a = Arity(pa.dom, a.cod)
            sp = SourceSpan(psp.start, sp.end)
        return t, a, sp

    def par(self) -> tuple[Term, Arity, SourceSpan]:
        items = [self.atom()]
        while self.peek() == "*":
            self.pos += 1
            items.append(self.atom())
        t, a, sp = items[-1]
        for prev, pa, psp in reversed(items[:-1]):
            t = Par(prev, t)
            a = Arity(pa.dom + a.dom, pa.cod + a.cod)
            sp = SourceSpan(psp.start, sp.end)
        return t, a, sp

    def atom(self) -> tuple[Term, Arity, SourceSpan]:
        ch = self.peek()
        if ch == "":
            self.error("unexpected end of input", self.pos)
        if ch == "(":
            start = self.pos
            self.pos += 1
            t, a, _ = self.term()
            self.expect(")")
            return t, a, SourceSpan(start, self.pos)
        word, start = self.name()
        if word == "id":
            self.expect("[")
            n = self.nat()
            self.expect("]")
            return Id(n), Arity(n, n), SourceSpan(start, self.pos)
        if word == "scalar":
            self.expect("(")
            lit_start = self.pos
            depth = 1
            while self.pos < len(self.src):
                c = self.src[self.pos]
                if c == "(":
                    depth += 1
                elif c == ")":
                    depth -= 1
                    if depth == 0:
                        break
                self.pos += 1
            if depth != 0:
                self.error("unclosed scalar literal", lit_start)
            lit = self.src[lit_start:self.pos]
            self.pos += 1  # closing paren
            value = self.rig.parse_literal(lit, offset=lit_start)
            return Scalar(value), Arity(1, 1), SourceSpan(start, self.pos)
        if word in _KEYWORD_ARITIES:
            t, a = _KEYWORD_ARITIES[word]
            return t, a, SourceSpan(start, self.pos)
        self.error(f"unknown generator {word!r}", start, self.pos)


def parse_term(text: str, rig: Rig) -> Term:
    """Parse a term; Seq and Par chains come out right-nested."""
    p = _Parser(text, rig)
    t, _, _ = p.term()
    p.skip_ws()
    if p.pos != len(text):
        p.error("unexpected trailing input", p.pos, len(text))
    return t


def parse_term_source(text: str, default_rig: Rig | None = None) -> tuple[Rig, Term]:
    """Parse term text whose first line may be a "#rig <name>" directive.

    The directive, when present, names the rig; otherwise default_rig is
    used.  Returns the rig together with the parsed term.
    """
    rig = default_rig
    body = text
    if text.lstrip().startswith("#rig"):
        first, _, rest = text.partition("\n")
        rig = get_rig(first.strip()[4:].strip())
        body = " " * (len(first) + 1) + rest  # keep spans aligned with the file
    if rig is None:
        from .errors import ConfigError

        raise ConfigError("no rig specified (pass one or add a '#rig <name>' line)")
    return rig, parse_term(body, rig)


# ---------------------------------------------------------------------------
# printing


def _show_payload(value) -> str:
    if isinstance(value, RigElement):
        return str(value)
    return str(value)


def print_term(t: Term) -> str:
    """Render with minimal parentheses; ';' binds looser than '*'."""
    return _print(t, 0)


def _print(t: Term, level: int) -> str:
    # level 0 allows ';', level 1 allows '*', level 2 is atoms only
    match t:
        case Seq(_, _):
            body = " ; ".join(_print(p, 1) for p in seq_parts(t))
            return body if level == 0 else f"({body})"
        case Par(_, _):
            body = " * ".join(_print(p, 2) for p in par_parts(t))
            return body if level <= 1 else f"({body})"
        case Id(n):
            return f"id[{n}]"
        case Scalar(v):
            return f"scalar({_show_payload(v)})"
        case Swap():
            return "swap"
        case Mu():
            return "mu"
        case Eta():
            return "eta"
        case Delta():
            return "delta"
        case Eps():
            return "eps"
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# dot rendering


def render_dot(t: Term) -> str:
    """Emit a graphviz digraph: one node per generator occurrence, one edge
    per wire, inputs ranked at the top and outputs at the bottom."""
    a = arity_of(t)
    lines = ["digraph term {", "  rankdir=TB;"]
    counter = [0]
    body: list[str] = []

    def fresh(label: str) -> str:
        counter[0] += 1
        nid = f"g{counter[0]}"
        body.append(f'  {nid} [label="{label}"];')
        return nid

    in_ports = [f"in{i}" for i in range(a.dom)]
    out_ports = [f"out{i}" for i in range(a.cod)]
    for name in in_ports:
        lines.append(f'  {name} [label="{name}", shape=plaintext];')
    for name in out_ports:
        lines.append(f'  {name} [label="{name}", shape=plaintext];')
    if in_ports:
        lines.append("  { rank=source; " + "; ".join(in_ports) + "; }")
    if out_ports:
        lines.append("  { rank=sink; " + "; ".join(out_ports) + "; }")

    def wire(t: Term, ins: list[str]) -> list[str]:
        match t:
            case Id(n):
                return ins
            case Seq(f, g):
                return wire(g, wire(f, ins))
            case Par(f, g):
                k = arity_of(f).dom
                return wire(f, ins[:k]) + wire(g, ins[k:])
            case Swap():
                nid = fresh("swap")
                body.append(f"  {ins[0]} -> {nid};")
                body.append(f"  {ins[1]} -> {nid};")
                return [nid, nid]
            case Mu():
                nid = fresh("mu")
                body.append(f"  {ins[0]} -> {nid};")
                body.append(f"  {ins[1]} -> {nid};")
                return [nid]
            case Eta():
                return [fresh("eta")]
            case Delta():
                nid = fresh("delta")
                body.append(f"  {ins[0]} -> {nid};")
                return [nid, nid]
            case Eps():
                nid = fresh("eps")
                body.append(f"  {ins[0]} -> {nid};")
                return []
            case Scalar(v):
                nid = fresh(f"scalar:{_show_payload(v)}")
                body.append(f"  {ins[0]} -> {nid};")
                return [nid]
        raise TypeError(f"not a term: {t!r}")

    outs = wire(t, in_ports)
    for name, src in zip(out_ports, outs):
        body.append(f"  {src} -> {name};")
    return "\n".join(lines + body + ["}"]) + "\n"
