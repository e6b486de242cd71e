"""The free supercommutative letterplace algebra.

Variables are letter-place pairs (x_i|j) with i, j >= 1 and a Z_2 parity
|x_i| + |j| coming from a parity context (letters and places are even
unless declared odd). Monomials are kept in canonical ascending order;
sorting two odd variables past each other flips the sign, and an odd
variable squares to zero. The place maximum grades the algebra over the
max-monoid of naturals-with-bottom, and each point z of the min-monoid
acts by deleting all terms of weight above z.

Words in the letters embed one by one via x_{i_1} ... x_{i_n} mapsto
(x_{i_1}|1) ... (x_{i_n}|n); no product on the letter side is modelled,
since concatenation does not preserve places.
"""

from fractions import Fraction
from typing import NamedTuple

from .errors import ParseError
from .extnat import NEG_INF, ExtNat, fin


class ContextMismatchError(ValueError):
    pass


class ParityContext(NamedTuple):
    """Which letters and places are odd; everything else is even."""

    odd_letters: frozenset = frozenset()
    odd_places: frozenset = frozenset()

    @classmethod
    def make(cls, odd_letters=(), odd_places=()):
        return cls(frozenset(odd_letters), frozenset(odd_places))

    def parity(self, var):
        return (int(var.letter in self.odd_letters) + int(var.place in self.odd_places)) % 2


class LPVariable(NamedTuple):
    letter: int
    place: int

    def __str__(self):
        return f"(x{self.letter}|{self.place})"


def variable(letter, place):
    if letter < 1 or place < 1:
        raise ValueError(f"letters and places start at 1, got ({letter}, {place})")
    return LPVariable(letter, place)


def normalize(word, ctx):
    """Sort a word into canonical order, tracking the Koszul sign.

    Returns (sign, monomial) or None when an odd variable repeats.
    The sign flips once for each transposition of two odd variables.
    """
    vs = list(word)
    parities = [ctx.parity(v) for v in vs]
    sign = 1
    for i in range(1, len(vs)):
        j = i
        while j > 0 and vs[j] < vs[j - 1]:
            if parities[j] and parities[j - 1]:
                sign = -sign
            vs[j], vs[j - 1] = vs[j - 1], vs[j]
            parities[j], parities[j - 1] = parities[j - 1], parities[j]
            j -= 1
    for i in range(1, len(vs)):
        if vs[i] == vs[i - 1] and parities[i]:
            return None
    return sign, tuple(vs)


class LPPoly:
    """Sparse rational polynomial on canonical letterplace monomials."""

    __slots__ = ("context", "terms")

    def __init__(self, context, terms):
        self.context = context
        self.terms = {m: Fraction(c) for m, c in terms.items() if c != 0}

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, {})

    @classmethod
    def one(cls, ctx):
        return cls(ctx, {(): Fraction(1)})

    @classmethod
    def from_word(cls, ctx, word, coeff=1):
        normalized = normalize(word, ctx)
        if normalized is None:
            return cls.zero(ctx)
        sign, mono = normalized
        return cls(ctx, {mono: Fraction(coeff) * sign})

    @classmethod
    def var(cls, ctx, letter, place):
        return cls(ctx, {(variable(letter, place),): Fraction(1)})

    @classmethod
    def constant(cls, ctx, c):
        return cls(ctx, {(): Fraction(c)})

    def _check(self, other):
        if self.context != other.context:
            raise ContextMismatchError("polynomials from different parity contexts")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return LPPoly(self.context, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return LPPoly(self.context, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        return multiply(self, other)

    def __eq__(self, other):
        return (isinstance(other, LPPoly) and self.context == other.context
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.context, tuple(sorted(self.terms.items()))))

    def parity(self):
        """0 or 1 when all monomials share one parity, else None."""
        seen = {sum(self.context.parity(v) for v in m) % 2 for m in self.terms}
        if not seen:
            return 0
        return seen.pop() if len(seen) == 1 else None

    def __repr__(self):
        return f"LPPoly({format_poly(self)})"


def multiply(p, q):
    """Bilinear product; term products concatenate and renormalize."""
    p._check(q)
    out = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            normalized = normalize(m1 + m2, p.context)
            if normalized is None:
                continue
            sign, mono = normalized
            out[mono] = out.get(mono, Fraction(0)) + c1 * c2 * sign
    return LPPoly(p.context, out)


def weight(mono):
    """The largest place in the monomial; the empty monomial sits at -inf."""
    if not mono:
        return NEG_INF
    return fin(max(v.place for v in mono))


def weight_components(p):
    """Split a polynomial by weight; the components sum back to the input."""
    parts = {}
    for m, c in p.terms.items():
        parts.setdefault(weight(m), {})[m] = c
    return {w: LPPoly(p.context, terms) for w, terms in sorted(parts.items())}


def act_min(z, p):
    """Delete every term of weight above z; +inf acts as the identity."""
    if not isinstance(z, ExtNat):
        raise TypeError("z must be a point of the extended chain")
    return LPPoly(p.context, {m: c for m, c in p.terms.items() if weight(m) <= z})


def embed_word(letters, ctx):
    """Embed a word in the letters: the k-th letter goes to place k."""
    word = [variable(letter, k + 1) for k, letter in enumerate(letters)]
    return LPPoly.from_word(ctx, word)


def _term_sort_key(mono):
    return (weight(mono), mono)


def format_poly(p):
    """Canonical form: terms sorted by (weight, monomial), exact coefficients."""
    if not p.terms:
        return "0"
    pieces = []
    for mono in sorted(p.terms, key=_term_sort_key):
        c = p.terms[mono]
        body = "*".join(str(v) for v in mono)
        if not mono:
            text = str(abs(c))
        elif abs(c) == 1:
            text = body
        else:
            text = f"{abs(c)}*{body}"
        if not pieces:
            pieces.append(text if c > 0 else f"-{text}")
        else:
            pieces.append(f"+ {text}" if c > 0 else f"- {text}")
    return " ".join(pieces)


class _Scanner:
    def __init__(self, text, source):
        self.text = text
        self.pos = 0
        self.source = source

    def error(self, message):
        line = self.text.count("\n", 0, self.pos) + 1
        col = self.pos - (self.text.rfind("\n", 0, self.pos) + 1) + 1
        raise ParseError(message, line, col, self.source)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def rational(self):
        num = self.integer()
        if self.peek() == "/":
            self.pos += 1
            den = self.integer()
            if den == 0:
                self.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def at_end(self):
        self.skip_ws()
        return self.pos >= len(self.text)


def parse_poly(text, ctx, source="<expr>"):
    """Parse `term (+|- term)*` with term `factor (* factor)*` and
    factor either `(x<letter>|<place>)` or a nonnegative rational."""
    sc = _Scanner(text, source)

    def factor():
        ch = sc.peek()
        if ch == "(":
            sc.take("(")
            sc.skip_ws()
            if sc.peek() != "x":
                sc.error("expected a variable like x1")
            sc.pos += 1
            letter = sc.integer()
            sc.take("|")
            place = sc.integer()
            sc.take(")")
            if letter < 1 or place < 1:
                sc.error("letters and places start at 1")
            return LPPoly.var(ctx, letter, place)
        if ch.isdigit():
            return LPPoly.constant(ctx, sc.rational())
        sc.error("expected a variable or a rational")

    def term():
        result = factor()
        while sc.peek() == "*":
            sc.take("*")
            result = result * factor()
        return result

    sign = 1
    if sc.peek() in ("+", "-"):
        sign = -1 if sc.peek() == "-" else 1
        sc.pos += 1
    total = term().scale(sign)
    while sc.peek() in ("+", "-"):
        negative = sc.peek() == "-"
        sc.pos += 1
        total = total + term().scale(-1 if negative else 1)
    if not sc.at_end():
        sc.error("unexpected input")
    return total
