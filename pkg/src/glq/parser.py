"""Text expressions for the command-line surface.

The grammar covers scalar arithmetic and the letters of the three
algebras::

    expr    :=  term (('+' | '-') term)*
    term    :=  factor (('*' | '/')? factor)*      (juxtaposition multiplies)
    factor  :=  ('-' | '+') factor  |  atom ('^' ('-')? INT)?
    atom    :=  INT  |  'q'  |  '(' expr ')'  |  NAME '[' indices ']'

Letters: ``K[a]``, ``Kinv[a]``, ``E[a,b]`` (adjacent rows only) for the
quantised enveloping algebra; ``t[a,b]``, ``tb[a,b]`` for the coordinate
algebra; ``z[a]``, ``zb[a]`` for the superspace; ``Z[i..;j..]`` and
``Zb[i..;j..]`` for superspace monomials given by a two-part
multi-index (nilpotent exponents, then the rest, separated by ';').

Scalars are rational functions of q and embed into any algebra; letters
from different algebras never mix.  Errors carry the 0-based character
offset where they were detected.
"""

from __future__ import annotations

from .coeff import ONE, RatFunc
from .coords import GqElement, t_, tbar_
from .superspace import SuperspaceElement, word_of_multi_index, z_, zb_
from .uq import UqExpression, gen_E, gen_K, gen_Kinv


class ParseError(ValueError):
    """Syntax or semantic error, with the offset where it occurred."""

    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.message = message
        self.position = position


_LETTER_NAMES = ("Kinv", "K", "E", "tb", "t", "zb", "z", "Zb", "Z", "q")

_UQ = "uq"
_COORDS = "coords"
_SPACE = "superspace"

_TAG_OF = {"K": _UQ, "Kinv": _UQ, "E": _UQ,
           "t": _COORDS, "tb": _COORDS,
           "z": _SPACE, "zb": _SPACE, "Z": _SPACE, "Zb": _SPACE}


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("INT", int(text[i:j]), i))
            i = j
            continue
        if c.isalpha():
            for name in _LETTER_NAMES:
                if text.startswith(name, i):
                    after = i + len(name)
                    if after < n and text[after].isalnum():
                        continue
                    tokens.append(("NAME", name, i))
                    i = after
                    break
            else:
                raise ParseError("unknown name starting with %r" % c, i)
            continue
        simple = {"+": "PLUS", "-": "MINUS", "*": "STAR", "/": "SLASH",
                  "^": "CARET", "(": "LPAREN", ")": "RPAREN",
                  "[": "LBRACK", "]": "RBRACK", ",": "COMMA", ";": "SEMI"}
        if c in simple:
            tokens.append((simple[c], c, i))
            i += 1
            continue
        raise ParseError("unexpected character %r" % c, i)
    tokens.append(("END", None, n))
    return tokens


class _Value:
    """A parsed value: a scalar, or an element of one tagged algebra."""

    __slots__ = ("tag", "payload")

    def __init__(self, tag, payload):
        self.tag = tag
        self.payload = payload


def _one_of(ctx, tag):
    if tag == _UQ:
        return UqExpression.one(ctx)
    if tag == _COORDS:
        return GqElement.one(ctx)
    return SuperspaceElement.one(ctx)


def _promote(ctx, value, tag):
    if value.tag == tag:
        return value.payload
    return _one_of(ctx, tag).scale(value.payload)


class _Parser:
    def __init__(self, ctx, text, allowed=None):
        self.ctx = ctx
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.allowed = allowed

    # -- token plumbing ----------------------------------------------------

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, what):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError("expected %s" % what, tok[2])
        return tok

    # -- value arithmetic ---------------------------------------------------

    def _combine_tags(self, a, b, at):
        if a.tag is None:
            return b.tag
        if b.tag is None or a.tag == b.tag:
            return a.tag
        raise ParseError("cannot mix %s and %s letters" % (a.tag, b.tag), at)

    def _add(self, a, b, at, negate=False):
        tag = self._combine_tags(a, b, at)
        if tag is None:
            s = a.payload + (-b.payload if negate else b.payload)
            return _Value(None, s)
        x = _promote(self.ctx, a, tag)
        y = _promote(self.ctx, b, tag)
        return _Value(tag, x - y if negate else x + y)

    def _mul(self, a, b, at):
        tag = self._combine_tags(a, b, at)
        if tag is None:
            return _Value(None, a.payload * b.payload)
        if a.tag is None:
            return _Value(tag, b.payload.scale(a.payload))
        if b.tag is None:
            return _Value(tag, a.payload.scale(b.payload))
        return _Value(tag, a.payload * b.payload)

    def _div(self, a, b, at):
        if b.tag is not None:
            raise ParseError("division by a non-scalar", at)
        if not b.payload:
            raise ParseError("division by zero", at)
        inv = b.payload.inverse()
        if a.tag is None:
            return _Value(None, a.payload * inv)
        return _Value(a.tag, a.payload.scale(inv))

    def _pow(self, base, exponent, at):
        if base.tag is None:
            out = ONE
            mult = base.payload
            if exponent < 0:
                if not mult:
                    raise ParseError("zero to a negative power", at)
                mult = mult.inverse()
                exponent = -exponent
            for _ in range(exponent):
                out = out * mult
            return _Value(None, out)
        if exponent < 0:
            raise ParseError("negative power of a non-scalar", at)
        out = _Value(None, ONE)
        for _ in range(exponent):
            out = self._mul(out, base, at)
        return out

    # -- grammar ------------------------------------------------------------

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            raise ParseError("unexpected trailing input", tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("PLUS", "MINUS"):
            op = self.advance()
            rhs = self.term()
            value = self._add(value, rhs, op[2], negate=op[0] == "MINUS")
        return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "STAR":
                self.advance()
                value = self._mul(value, self.factor(), tok[2])
            elif tok[0] == "SLASH":
                self.advance()
                value = self._div(value, self.factor(), tok[2])
            elif tok[0] in ("INT", "NAME", "LPAREN"):
                value = self._mul(value, self.factor(), tok[2])
            else:
                return value

    def factor(self):
        tok = self.peek()
        if tok[0] in ("PLUS", "MINUS"):
            self.advance()
            inner = self.factor()
            if tok[0] == "PLUS":
                return inner
            return self._mul(_Value(None, -ONE), inner, tok[2])
        value = self.atom()
        if self.peek()[0] == "CARET":
            at = self.advance()[2]
            sign = 1
            if self.peek()[0] == "MINUS":
                self.advance()
                sign = -1
            etok = self.expect("INT", "an integer exponent")
            value = self._pow(value, sign * etok[1], at)
        return value

    def atom(self):
        tok = self.advance()
        if tok[0] == "INT":
            return _Value(None, RatFunc.from_int(tok[1]))
        if tok[0] == "LPAREN":
            value = self.expr()
            self.expect("RPAREN", "a closing parenthesis")
            return value
        if tok[0] == "NAME":
            if tok[1] == "q":
                return _Value(None, RatFunc.q_power(1))
            return self.letter(tok)
        raise ParseError("expected a value", tok[2])

    # -- letters ------------------------------------------------------------

    def _index(self):
        sign = 1
        if self.peek()[0] == "MINUS":
            self.advance()
            sign = -1
        tok = self.expect("INT", "an index")
        return sign * tok[1], tok[2]

    def _index_list(self):
        out = [self._index()]
        while self.peek()[0] == "COMMA":
            self.advance()
            out.append(self._index())
        return out

    def _check_row(self, value, at):
        if not 1 <= value <= self.ctx.N:
            raise ParseError("index %d out of range 1..%d"
                             % (value, self.ctx.N), at)
        return value

    def letter(self, tok):
        name, at = tok[1], tok[2]
        if self.allowed is not None and name not in self.allowed:
            raise ParseError("letter %r not allowed here" % name, at)
        self.expect("LBRACK", "'['")
        if name in ("Z", "Zb"):
            value = self.multi_index_monomial(name, at)
        else:
            indices = self._index_list()
            value = self.simple_letter(name, indices, at)
        self.expect("RBRACK", "']'")
        return value

    def simple_letter(self, name, indices, at):
        ctx = self.ctx
        if name in ("K", "Kinv", "z", "zb"):
            if len(indices) != 1:
                raise ParseError("%s takes one index" % name, at)
            a = self._check_row(*indices[0])
            if name == "K":
                elem = UqExpression.from_gen(ctx, gen_K(a))
            elif name == "Kinv":
                elem = UqExpression.from_gen(ctx, gen_Kinv(a))
            elif name == "z":
                elem = SuperspaceElement.from_word(ctx, (z_(a),))
            else:
                elem = SuperspaceElement.from_word(ctx, (zb_(a),))
            return _Value(_TAG_OF[name], elem)
        if len(indices) != 2:
            raise ParseError("%s takes two indices" % name, at)
        a = self._check_row(*indices[0])
        b = self._check_row(*indices[1])
        if name == "E":
            if abs(a - b) != 1:
                raise ParseError("E indices must be adjacent",
                                 indices[1][1])
            return _Value(_UQ, UqExpression.from_gen(ctx, gen_E(a, b)))
        letter = t_(a, b) if name == "t" else tbar_(a, b)
        return _Value(_COORDS, GqElement(ctx, {(letter,): ONE}))

    def multi_index_monomial(self, name, at):
        ctx = self.ctx
        first = self._index_list()
        self.expect("SEMI", "';' between the two index groups")
        second = self._index_list()
        if len(first) != ctx.m or len(second) != ctx.n:
            raise ParseError(
                "%s takes %d;%d exponents at size (%d|%d)"
                % (name, ctx.m, ctx.n, ctx.m, ctx.n), at)
        for v, p in first:
            if v not in (0, 1):
                raise ParseError("nilpotent exponent must be 0 or 1", p)
        for v, p in second:
            if v < 0:
                raise ParseError("exponent must be non-negative", p)
        index = (tuple(v for v, _ in first), tuple(v for v, _ in second))
        zero = ((0,) * ctx.m, (0,) * ctx.n)
        if name == "Z":
            word = word_of_multi_index(ctx, index, zero)
        else:
            word = word_of_multi_index(ctx, zero, index)
        return _Value(_SPACE, SuperspaceElement.from_word(ctx, word))


def parse_expression(ctx, text, allowed=None):
    """Parse into (tag, value): tag None for a pure scalar, else the
    algebra name."""
    value = _Parser(ctx, text, allowed=allowed).parse()
    return value.tag, value.payload


def parse_scalar(text):
    """A rational function of q; letters are rejected."""
    tag, value = parse_expression(None, text, allowed=())
    return value


def parse_uq(ctx, text):
    """An element of the quantised enveloping algebra."""
    tag, value = parse_expression(ctx, text,
                                  allowed=("K", "Kinv", "E"))
    if tag is None:
        return UqExpression.one(ctx).scale(value)
    return value


def parse_coords(ctx, text):
    """An element of the coordinate algebra."""
    tag, value = parse_expression(ctx, text, allowed=("t", "tb"))
    if tag is None:
        return GqElement.one(ctx).scale(value)
    return value


def parse_superspace(ctx, text):
    """An element of the superspace algebra."""
    tag, value = parse_expression(ctx, text,
                                  allowed=("z", "zb", "Z", "Zb"))
    if tag is None:
        return SuperspaceElement.one(ctx).scale(value)
    return value


# ---------------------------------------------------------------------------
# Printing normal forms so that re-parsing recovers the element.
# ---------------------------------------------------------------------------


def _coeff_string(c):
    s = str(c)
    if " + " in s or " - " in s or " / " in s:
        return "(%s)" % s
    return s


def format_normal_form(ctx, element):
    """Render a normal superspace element; parse_superspace inverts it."""
    from .superspace import multi_index_of

    if element.is_zero():
        return "0"
    parts = []
    for word in sorted(element.terms):
        coeff = element.terms[word]
        (tp, lp), (tb, lb) = multi_index_of(ctx, word)
        factors = []
        if any(tp) or any(lp):
            factors.append("Z[%s;%s]" % (",".join(map(str, tp)),
                                         ",".join(map(str, lp))))
        if any(tb) or any(lb):
            factors.append("Zb[%s;%s]" % (",".join(map(str, tb)),
                                          ",".join(map(str, lb))))
        body = " ".join(factors)
        if not body:
            parts.append(_coeff_string(coeff))
        elif coeff == ONE:
            parts.append(body)
        elif coeff == -ONE:
            parts.append("-" + body)
        else:
            parts.append("%s * %s" % (_coeff_string(coeff), body))
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out
