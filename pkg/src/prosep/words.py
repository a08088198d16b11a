"""Words over named generators, with a small expression grammar.

Grammar (whitespace between factors acts like ``*``)::

    word    := "1" | factor (("*" | ws) factor)*
    factor  := atom ("^" integer)?
    atom    := ident | "(" word ")" | "[" word "," word "]"
    ident   := letter (letter | digit | "_")*

``[x, y]`` expands at parse time to x^-1 y^-1 x y, so words never store
commutator nodes.  A single uppercase letter is shorthand for the inverse
of its lowercase generator on input; serialization never emits it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class WordSyntaxError(ValueError):
    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


@dataclass(frozen=True)
class Word:
    """A freely reduced word: syllables (generator name, nonzero exponent)."""

    syllables: tuple

    @staticmethod
    def from_syllables(pairs) -> "Word":
        out = []
        for name, e in pairs:
            if e == 0:
                continue
            if out and out[-1][0] == name:
                merged = out[-1][1] + e
                out.pop()
                if merged:
                    out.append((name, merged))
            else:
                out.append((name, e))
        # syllable merging can cascade (a b b^-1 a^-1): repeat until stable
        changed = True
        while changed:
            changed = False
            nxt = []
            for name, e in out:
                if nxt and nxt[-1][0] == name:
                    merged = nxt[-1][1] + e
                    nxt.pop()
                    if merged:
                        nxt.append((name, merged))
                    changed = True
                else:
                    nxt.append((name, e))
            out = nxt
        return Word(tuple(out))

    @staticmethod
    def identity() -> "Word":
        return Word(())

    def __mul__(self, other: "Word") -> "Word":
        return Word.from_syllables(self.syllables + other.syllables)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        out = Word.identity()
        for _ in range(n):
            out = out * self
        return out

    def commutator(self, other: "Word") -> "Word":
        return self.inverse() * other.inverse() * self * other

    def is_identity(self) -> bool:
        return not self.syllables

    def generators(self):
        return {g for g, _ in self.syllables}

    def letters(self, index_of) -> list:
        """(index, exponent) pairs through a name -> index mapping."""
        return [(index_of[g], e) for g, e in self.syllables]

    def __str__(self):
        return serialize_word(self)

    def __repr__(self):
        return "Word(%s)" % serialize_word(self)


_TOKEN = re.compile(r"\s*(?:(\*)|(\^)|(\()|(\))|(\[)|(,)|(\])|(-?\d+)|([A-Za-z][A-Za-z0-9_]*))")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.tokens = []
        self._tokenize()
        self.i = 0

    def _tokenize(self):
        pos = 0
        while pos < len(self.text):
            m = _TOKEN.match(self.text, pos)
            if m is None:
                stripped = self.text[pos:].strip()
                if not stripped:
                    break
                raise WordSyntaxError("unexpected character %r" % stripped[0], pos)
            if m.end() == pos:
                break
            kinds = ("star", "caret", "lpar", "rpar", "lbrack", "comma",
                     "rbrack", "int", "ident")
            for k, kind in enumerate(kinds):
                if m.group(k + 1) is not None:
                    self.tokens.append((kind, m.group(k + 1), m.start(k + 1)))
                    break
            pos = m.end()

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("eof", "", len(self.text))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise WordSyntaxError("expected %s, found %r" % (kind, tok[1]), tok[2])
        return tok

    def parse_word(self) -> Word:
        out = Word.identity()
        while True:
            kind = self.peek()[0]
            if kind in ("eof", "rpar", "comma", "rbrack"):
                return out
            if kind == "star":
                self.next()
                continue
            out = out * self.parse_factor()

    def parse_factor(self) -> Word:
        atom = self.parse_atom()
        if self.peek()[0] == "caret":
            self.next()
            tok = self.expect("int")
            atom = atom ** int(tok[1])
        return atom

    def parse_atom(self) -> Word:
        kind, value, pos = self.next()
        if kind == "ident":
            if value == "1":
                return Word.identity()
            if len(value) == 1 and value.isupper():
                return Word(((value.lower(), -1),))
            return Word(((value, 1),))
        if kind == "int":
            if value == "1":
                return Word.identity()
            raise WordSyntaxError("unexpected integer %r" % value, pos)
        if kind == "lpar":
            inner = self.parse_word()
            self.expect("rpar")
            return inner
        if kind == "lbrack":
            left = self.parse_word()
            self.expect("comma")
            right = self.parse_word()
            self.expect("rbrack")
            return left.commutator(right)
        raise WordSyntaxError("unexpected token %r" % value, pos)


def parse_word(text: str) -> Word:
    parser = _Parser(text)
    word = parser.parse_word()
    tok = parser.peek()
    if tok[0] != "eof":
        raise WordSyntaxError("trailing input %r" % tok[1], tok[2])
    return word


def serialize_word(word: Word) -> str:
    if word.is_identity():
        return "1"
    parts = []
    for g, e in word.syllables:
        parts.append(g if e == 1 else "%s^%d" % (g, e))
    return "*".join(parts)
