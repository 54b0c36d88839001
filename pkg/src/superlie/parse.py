"""Text input: alphabet declarations, Lie expressions and words."""
from __future__ import annotations

import re

from .core import Alphabet, LieError, LiePoly, LieTerm, Parity
from .reduce import bracket

_TOKEN = re.compile(r"\s*(?:(\d+)|([\[\],+\-*])|([^\s\[\],+\-*]+))")


class ParseError(LieError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


def parse_alphabet(s: str) -> Alphabet:
    """``"a:even b:odd"``; parities may be written 0/1/even/odd."""
    decls = []
    seen = set()
    for m in re.finditer(r"\S+", s):
        tok, pos = m.group(), m.start()
        name, sep, par = tok.partition(":")
        if not sep or not name:
            raise ParseError(f"expected name:parity, got {tok!r}", pos)
        if name in seen:
            raise ParseError(f"duplicate generator {name!r}", pos)
        try:
            parity = Parity.coerce(par)
        except ValueError:
            raise ParseError(f"bad parity token {par!r}", pos + len(name) + 1) from None
        seen.add(name)
        decls.append((name, parity))
    if not decls:
        raise ParseError("empty alphabet", 0)
    try:
        return Alphabet(decls)
    except ValueError as e:
        raise ParseError(str(e), 0) from None


def _tokenize(s: str):
    pos = 0
    out = []
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(s, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", int(m.group(1)), start))
        elif m.group(2):
            out.append((m.group(2), m.group(2), start))
        else:
            out.append(("name", m.group(3), start))
        pos = m.end()
    out.append(("end", None, len(s)))
    return out


class _Parser:
    def __init__(self, s: str, alphabet: Alphabet):
        self.toks = _tokenize(s)
        self.i = 0
        self.alphabet = alphabet

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}" if tok[1] is not None else f"expected {kind!r}, found end of input", tok[2])
        self.i += 1
        return tok

    def expr(self) -> LiePoly:
        out = LiePoly()
        sgn = 1
        if self.peek()[0] in ("+", "-"):
            sgn = -1 if self.take()[0] == "-" else 1
        out = out + sgn * self.summand()
        while self.peek()[0] in ("+", "-"):
            sgn = -1 if self.take()[0] == "-" else 1
            out = out + sgn * self.summand()
        return out

    def summand(self) -> LiePoly:
        if self.peek()[0] == "int":
            n = self.take()[1]
            self.take("*")
            return n * self.term()
        return self.term()

    def term(self) -> LiePoly:
        kind, val, pos = self.peek()
        if kind == "name":
            self.take()
            if val not in self.alphabet._by_name:
                raise ParseError(f"unknown generator {val!r}", pos)
            return LiePoly.of(self.alphabet.leaf(val))
        if kind == "[":
            self.take()
            items = [self.expr()]
            while self.peek()[0] == ",":
                self.take()
                items.append(self.expr())
            if len(items) < 2:
                raise ParseError("a bracket needs at least two entries", pos)
            self.take("]")
            out = items[0]
            for q in items[1:]:
                out = bracket(out, q)
            return out
        raise ParseError(f"unexpected {val!r}" if val is not None else "unexpected end of input", pos)


def parse_expression(s: str, alphabet: Alphabet) -> LiePoly:
    """Parse ``3*[x,[y,x]] - [y,x,x]``; ``[a,b,c]`` means ``[[a,b],c]``
    and brackets of sums expand bilinearly."""
    p = _Parser(s, alphabet)
    out = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", pos)
    return out


def parse_term(s: str, alphabet: Alphabet) -> LieTerm:
    p = parse_expression(s, alphabet)
    if len(p) != 1 or next(iter(p.values())) != 1:
        raise ParseError("expected a single bracket term", 0)
    return next(iter(p))


def parse_word(s: str, alphabet: Alphabet) -> tuple[int, ...]:
    """Bare concatenation for one-character names, otherwise ``·`` separated."""
    s = s.strip()
    if not s:
        raise ParseError("empty word", 0)
    if "·" in s or " " in s or not alphabet.single_char:
        parts = re.split(r"[·\s]+", s)
    else:
        parts = list(s)
    out = []
    pos = 0
    for part in parts:
        pos = s.find(part, pos)
        if part not in alphabet._by_name:
            raise ParseError(f"unknown generator {part!r}", pos)
        out.append(alphabet.index(part))
        pos += len(part)
    return tuple(out)
