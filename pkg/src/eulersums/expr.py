"""Expression grammar for zeta values and iterated-integral words.

::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | rational | zeta | word | '(' expr ')'
    zeta   := 'z' '(' int (',' int)* ')' | 'zr' '(' uint ';' int (',' int)* ')'
    word   := 'I' '(' letter (',' letter)* ')'       letter := '0' | '1' | '-1'
    rational := uint ['/' uint]

Negative zeta arguments are barred entries: ``z(2,-10)`` is zeta(2, 10bar).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .identities import ONE, Monomial, mono_mul
from .lincomb import LinComb, lsum
from .words import IndexVector, as_word, word_to_index


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}\n  {text}\n  {' ' * pos}^")


# -- tree --------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Zeta:
    index: IndexVector


@dataclass(frozen=True)
class WordLit:
    letters: tuple[int, ...]


@dataclass(frozen=True)
class Neg:
    arg: Expression


@dataclass(frozen=True)
class Sum:
    # (sign, term) pairs; the first sign is always +1
    terms: tuple[tuple[int, Expression], ...]


@dataclass(frozen=True)
class Prod:
    factors: tuple[Expression, ...]


Expression = Num | Zeta | WordLit | Neg | Sum | Prod


# -- tokenizer -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(zr|z|I)|(\d+)|([-+*/(),;]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos + stripped]!r}", text, pos + stripped)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("name", m.group(1), start))
        elif m.group(2):
            out.append(("int", m.group(2), start))
        else:
            out.append((m.group(3), m.group(3), start))
        pos = m.end()
    out.append(("eof", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def take(self, kind: str | None = None) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "eof" else repr(kind)
            got = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(f"expected {want}, got {got}", self.text, tok[2])
        self.i += 1
        return tok

    def expr(self) -> Expression:
        terms = [(1, self.term())]
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            terms.append((1 if op == "+" else -1, self.term()))
        return terms[0][1] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> Expression:
        factors = [self.factor()]
        while self.peek()[0] == "*":
            self.take()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Prod(tuple(factors))

    def signed_int(self) -> int:
        neg = False
        if self.peek()[0] == "-":
            self.take()
            neg = True
        v = int(self.take("int")[1])
        return -v if neg else v

    def factor(self) -> Expression:
        kind, val, pos = self.peek()
        if kind == "-":
            self.take()
            return Neg(self.factor())
        if kind == "int":
            self.take()
            num = int(val)
            if self.peek()[0] == "/":
                self.take()
                den_tok = self.take("int")
                den = int(den_tok[1])
                if den == 0:
                    raise ParseError("zero denominator", self.text, den_tok[2])
                return Num(Fraction(num, den))
            return Num(Fraction(num))
        if kind == "(":
            self.take()
            e = self.expr()
            self.take(")")
            return e
        if kind == "name":
            self.take()
            self.take("(")
            if val == "I":
                letters = [self._letter()]
                while self.peek()[0] == ",":
                    self.take()
                    letters.append(self._letter())
                self.take(")")
                return WordLit(tuple(letters))
            k0 = 0
            if val == "zr":
                k0 = int(self.take("int")[1])
                self.take(";")
            args = [self._zeta_arg()]
            while self.peek()[0] == ",":
                self.take()
                args.append(self._zeta_arg())
            self.take(")")
            return Zeta(IndexVector.from_signed(args, k0))
        raise ParseError("expected a number, z(...), zr(...), I(...) or '('" if kind != "eof" else "unexpected end of input", self.text, pos)

    def _zeta_arg(self) -> int:
        pos = self.peek()[2]
        v = self.signed_int()
        if v == 0:
            raise ParseError("zeta argument 0 is not allowed", self.text, pos)
        return v

    def _letter(self) -> int:
        pos = self.peek()[2]
        v = self.signed_int()
        if v not in (0, 1, -1):
            raise ParseError(f"word letter must be 0, 1 or -1, got {v}", self.text, pos)
        return v


def parse(text: str) -> Expression:
    p = _Parser(text)
    e = p.expr()
    p.take("eof")
    return e


# -- printing ------------------------------------------------------------


def _fmt_num(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def format_expr(e: Expression) -> str:
    if isinstance(e, Num):
        if e.value < 0:
            return "-" + _fmt_num(-e.value)
        return _fmt_num(e.value)
    if isinstance(e, Zeta):
        return str(e.index)
    if isinstance(e, WordLit):
        return "I(" + ",".join(str(x) for x in e.letters) + ")"
    if isinstance(e, Neg):
        inner = format_expr(e.arg)
        return "-" + (f"({inner})" if isinstance(e.arg, (Sum, Prod)) or inner.startswith("-") else inner)
    if isinstance(e, Prod):
        return "*".join(f"({format_expr(f)})" if isinstance(f, (Sum, Prod)) else format_expr(f) for f in e.factors)
    if isinstance(e, Sum):
        parts = []
        for i, (sign, t) in enumerate(e.terms):
            body = f"({format_expr(t)})" if isinstance(t, Sum) else format_expr(t)
            parts.append(body if i == 0 else ("+ " if sign > 0 else "- ") + body)
        return " ".join(parts)
    raise TypeError(e)


def format_comb(comb: LinComb[Monomial]) -> str:
    """Canonical text for a combination; parses back to the same combination."""
    if not comb:
        return "0"
    parts = []
    for i, (m, c) in enumerate(comb):
        mag = abs(c)
        if m == ONE:
            body = _fmt_num(mag)
        elif mag == 1:
            body = str(m)
        else:
            body = f"{_fmt_num(mag)}*{m}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


# -- semantics -------------------------------------------------------------


def to_lincomb(e: Expression) -> LinComb[Monomial]:
    """Expand into zeta monomials; ``I(w)`` becomes ``(-1)^d zeta_{k0}(...)``."""
    if isinstance(e, Num):
        return LinComb({ONE: e.value})
    if isinstance(e, Zeta):
        return LinComb({Monomial((e.index,)): 1})
    if isinstance(e, WordLit):
        ix = word_to_index(as_word(e.letters))
        return LinComb({Monomial((ix,)): (-1) ** ix.depth})
    if isinstance(e, Neg):
        return -to_lincomb(e.arg)
    if isinstance(e, Sum):
        return lsum(to_lincomb(t) * s for s, t in e.terms)
    if isinstance(e, Prod):
        acc = LinComb({ONE: 1})
        for f in e.factors:
            acc = mono_mul(acc, to_lincomb(f))
        return acc
    raise TypeError(e)


def divergent_atoms(e: Expression) -> list[str]:
    """Unregularized ``z(...)`` / ``I(...)`` leaves whose series diverges."""
    if isinstance(e, Zeta):
        return [] if e.index.k0 or e.index.is_convergent() else [str(e.index)]
    if isinstance(e, WordLit):
        w = e.letters
        return [format_expr(e)] if w and (w[0] == 0 or w[-1] == 1) else []
    if isinstance(e, Neg):
        return divergent_atoms(e.arg)
    if isinstance(e, Sum):
        return [a for _, t in e.terms for a in divergent_atoms(t)]
    if isinstance(e, Prod):
        return [a for f in e.factors for a in divergent_atoms(f)]
    return []
