"""Concrete syntax: tokenizer, precedence parser and printers.

ASCII grammar, loosest to tightest binding::

    formula := disj ( "->" formula )?          right associative
    disj    := conj ( "|" conj )*              left associative
    conj    := unary ( "&" unary )*            left associative
    unary   := "K" unary | "~" unary | atom
    atom    := identifier | "_|_" | "false" | "(" formula ")"

Unicode input aliases: ``⊥ ¬ ∧ ∨ →``.  A leading ``K`` in a word is always the
modality, so ``KKp`` reads as ``K(K(p))``; variables therefore never start
with ``K``.

Sequents are written ``F1, F2, ... |- G`` (``⊢``, ``=>``, ``⇒`` also accepted), or ``|- G``
for an empty antecedent.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .formula import BOTTOM, And, Bottom, Formula, Implies, Know, Or, Var

RESERVED = frozenset({"K", "false"})

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<turnstile>\|-|⊢|=>|⇒)
  | (?P<bot>_\|_|⊥)
  | (?P<imp>->|→)
  | (?P<and>&|∧)
  | (?P<or>\||∨)
  | (?P<not>~|¬)
  | (?P<lpar>\()
  | (?P<rpar>\))
  | (?P<comma>,)
  | (?P<word>[A-Za-z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


class ParseError(ValueError):
    """Malformed formula or sequent text; ``pos`` is a 0-based character offset."""

    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        value = m.group()
        if kind == "word":
            # peel modal K prefixes off the word: "KKp" -> K K p
            i = 0
            while i < len(value) and value[i] == "K":
                tokens.append(Token("know", "K", pos + i))
                i += 1
            rest = value[i:]
            if rest and not rest[0].isalpha():
                # e.g. "K_|_": re-lex what follows the K prefixes
                pos += i
                continue
            if rest == "false":
                tokens.append(Token("bot", rest, pos + i))
            elif rest:
                tokens.append(Token("var", rest, pos + i))
        elif kind != "ws":
            tokens.append(Token(kind, value, pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self, kind: str | None = None) -> Token:
        tok = self.tokens[self.i]
        if kind is not None and tok.kind != kind:
            want = {"rpar": "')'", "eof": "end of input"}.get(kind, kind)
            got = tok.value or "end of input"
            raise ParseError(f"expected {want}, found {got!r}", tok.pos, self.text)
        self.i += 1
        return tok

    def formula(self) -> Formula:
        left = self.disj()
        if self.peek.kind == "imp":
            self.take()
            return Implies(left, self.formula())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek.kind == "or":
            self.take()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek.kind == "and":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek
        if tok.kind == "know":
            self.take()
            return Know(self.unary())
        if tok.kind == "not":
            self.take()
            return Implies(self.unary(), BOTTOM)
        return self.atom()

    def atom(self) -> Formula:
        tok = self.take()
        if tok.kind == "var":
            return Var(tok.value)
        if tok.kind == "bot":
            return BOTTOM
        if tok.kind == "lpar":
            f = self.formula()
            self.take("rpar")
            return f
        got = tok.value or "end of input"
        raise ParseError(f"expected a formula, found {got!r}", tok.pos, self.text)


def parse(text: str) -> Formula:
    """Parse one formula in the ASCII (or unicode-alias) grammar."""
    p = _Parser(text)
    f = p.formula()
    p.take("eof")
    return f


def parse_sequent(text: str):
    """Parse ``F1, ..., Fn |- G``; a bare formula is read as ``|- G``."""
    from .sequent import Sequent

    p = _Parser(text)
    antecedent: list[Formula] = []
    if p.peek.kind != "turnstile":
        first = p.formula()
        if p.peek.kind == "eof":
            return Sequent((), first)
        antecedent.append(first)
        while p.peek.kind == "comma":
            p.take()
            antecedent.append(p.formula())
    p.take("turnstile")
    goal = p.formula()
    p.take("eof")
    return Sequent(antecedent, goal)


# precedence levels for printing
_IMP, _OR, _AND, _PREFIX = 1, 2, 3, 4

_SYMBOLS = {
    "ascii": {"bot": "_|_", "not": "~", "and": " & ", "or": " | ", "imp": " -> ", "k": "K",
              "lp": "(", "rp": ")", "sep": ", ", "turnstile": "|-"},
    "unicode": {"bot": "⊥", "not": "¬", "and": " ∧ ", "or": " ∨ ", "imp": " → ", "k": "K",
                "lp": "(", "rp": ")", "sep": ", ", "turnstile": "⇒"},
    "latex": {"bot": r"\bot", "not": r"\neg ", "and": r" \wedge ", "or": r" \vee ",
              "imp": r" \to ", "k": "K ", "lp": "(", "rp": ")", "sep": ", ",
              "turnstile": r"\Rightarrow"},
}


def render(f: Formula, fmt: str = "ascii") -> str:
    """Print with the fewest parentheses the grammar allows.

    ``ascii`` and ``unicode`` output parse back to ``f``; ``latex`` is for display.
    """
    try:
        sym = _SYMBOLS[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}") from None

    def go(g: Formula, ctx: int) -> str:
        if isinstance(g, Var):
            return g.name
        if isinstance(g, Bottom):
            return sym["bot"]
        if isinstance(g, Know):
            return sym["k"] + go(g.body, _PREFIX)
        if isinstance(g, Implies) and isinstance(g.right, Bottom):
            return sym["not"] + go(g.left, _PREFIX)
        if isinstance(g, And):
            level, s = _AND, go(g.left, _AND) + sym["and"] + go(g.right, _AND + 1)
        elif isinstance(g, Or):
            level, s = _OR, go(g.left, _OR) + sym["or"] + go(g.right, _OR + 1)
        elif isinstance(g, Implies):
            level, s = _IMP, go(g.left, _IMP + 1) + sym["imp"] + go(g.right, _IMP)
        else:
            raise TypeError(f"not a formula: {g!r}")
        return sym["lp"] + s + sym["rp"] if level < ctx else s

    return go(f, 0)


def render_sequent(s, fmt: str = "ascii") -> str:
    sym = _SYMBOLS[fmt]
    ants = sym["sep"].join(render(f, fmt) for f in s.antecedent)
    goal = render(s.goal, fmt)
    return f"{ants} {sym['turnstile']} {goal}" if ants else f"{sym['turnstile']} {goal}"
