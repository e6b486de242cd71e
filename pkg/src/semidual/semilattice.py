"""Finite bounded semilattices and their character duality.

A finite bounded semilattice is a commutative idempotent monoid; its
identity is the bottom of the induced order s <= t iff op(s, t) = t, and
the operation is the join. A character is a {0,1}-valued multiplicative
functional sending the identity to 1; the characters form a semilattice
again under pointwise product (the dual), and evaluation identifies
every finite bounded semilattice with its double dual.

Only {0,1} values can occur: every element is idempotent, and the only
idempotents of the circle-with-zero codomain are 0 and 1. Enumeration
over bit-vectors is therefore complete. Non-idempotent inverse monoids,
where characters may take other values, are out of scope.
"""

from dataclasses import dataclass

from .errors import ParseError, SizeLimitError
from .exactlin import Matrix, rank

MAX_CHARACTER_ELEMENTS = 20


class SemilatticeError(ValueError):
    pass


class DuplicateLabelError(SemilatticeError):
    pass


class MissingPairError(SemilatticeError):
    pass


class ConflictingEntryError(SemilatticeError):
    pass


class UnknownLabelError(SemilatticeError):
    pass


class NotIdempotentError(SemilatticeError):
    def __init__(self, label):
        super().__init__(f"op({label}, {label}) != {label}")
        self.label = label


class NoIdentityError(SemilatticeError):
    pass


class NotAssociativeError(SemilatticeError):
    def __init__(self, s, t, u):
        super().__init__(f"op(op({s},{t}),{u}) != op({s},op({t},{u}))")
        self.witness = (s, t, u)


class DoubleDualError(SemilatticeError):
    pass


class NotInjectiveError(DoubleDualError):
    pass


class NotSurjectiveError(DoubleDualError):
    pass


class NotMultiplicativeError(DoubleDualError):
    pass


class FiniteSemilattice:
    """Labels plus a total commutative idempotent associative op with identity.

    Construct through validate() or parse_semilattice(); the constructor
    trusts its arguments.
    """

    __slots__ = ("elements", "identity", "table", "_index")

    def __init__(self, elements, identity, table):
        self.elements = tuple(elements)
        self.identity = identity
        self.table = tuple(tuple(row) for row in table)
        self._index = {label: i for i, label in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def op(self, i, j):
        return self.table[i][j]

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"no element {label!r}") from None

    def label(self, i):
        return self.elements[i]

    def leq(self, i, j):
        return self.table[i][j] == j

    def __eq__(self, other):
        return (isinstance(other, FiniteSemilattice)
                and self.elements == other.elements
                and self.identity == other.identity
                and self.table == other.table)

    def __hash__(self):
        return hash((self.elements, self.identity, self.table))

    def __repr__(self):
        return f"FiniteSemilattice({list(self.elements)}, identity={self.elements[self.identity]!r})"


def validate(elements, op_table, identity):
    """Check the four monoid/semilattice laws and build the structure.

    elements: sequence of distinct labels; identity: a label;
    op_table: mapping (label, label) -> label. One orientation per
    unordered pair of distinct elements is enough; diagonal entries
    default to idempotency but are checked when supplied.
    """
    elements = tuple(elements)
    seen = set()
    for label in elements:
        if label in seen:
            raise DuplicateLabelError(f"duplicate element {label!r}")
        seen.add(label)
    if identity not in seen:
        raise NoIdentityError(f"identity {identity!r} not among the elements")
    index = {label: i for i, label in enumerate(elements)}
    n = len(elements)

    for (s, t), v in op_table.items():
        for label in (s, t, v):
            if label not in index:
                raise UnknownLabelError(f"op table mentions unknown element {label!r}")

    table = [[None] * n for _ in range(n)]
    for (s, t), v in op_table.items():
        i, j, k = index[s], index[t], index[v]
        for a, b in ((i, j), (j, i)):
            if table[a][b] is not None and table[a][b] != k:
                raise ConflictingEntryError(
                    f"conflicting products for pair ({s}, {t}):"
                    f" {elements[table[a][b]]} vs {v}")
            table[a][b] = k
    for i in range(n):
        if table[i][i] is None:
            table[i][i] = i
    for i in range(n):
        for j in range(n):
            if table[i][j] is None:
                raise MissingPairError(
                    f"no product given for pair ({elements[i]}, {elements[j]})")

    for i in range(n):
        if table[i][i] != i:
            raise NotIdempotentError(elements[i])
    e = index[identity]
    for i in range(n):
        if table[e][i] != i:
            raise NoIdentityError(
                f"op({identity}, {elements[i]}) = {elements[table[e][i]]}, not {elements[i]}")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise NotAssociativeError(elements[i], elements[j], elements[k])

    return FiniteSemilattice(elements, e, table)


def induced_order(s):
    """The partial order i <= j iff op(i, j) = j, as a sorted tuple of index pairs.

    The identity is the minimum and op is the join for this order.
    """
    return tuple((i, j) for i in range(len(s)) for j in range(len(s)) if s.leq(i, j))


@dataclass(frozen=True)
class Character:
    """A {0,1}-valued multiplicative identity-preserving functional."""

    values: tuple

    def __call__(self, i):
        return self.values[i]

    @property
    def support_size(self):
        return sum(self.values)

    def pointwise_mul(self, other):
        return Character(tuple(a * b for a, b in zip(self.values, other.values)))

    def is_character_of(self, s):
        if len(self.values) != len(s):
            return False
        if any(v not in (0, 1) for v in self.values):
            return False
        if self.values[s.identity] != 1:
            return False
        return all(self.values[s.op(i, j)] == self.values[i] * self.values[j]
                   for i in range(len(s)) for j in range(i, len(s)))

    def bits(self):
        return " ".join(str(v) for v in self.values)


def character_label(i):
    return f"f{i + 1}"


def _canonical_sort(chars):
    return sorted(chars, key=lambda ch: (ch.support_size, ch.values))


def characters(s):
    """All characters of s, canonically ordered (support size, then bits).

    Depth-first search over a linear extension of the induced order.
    An element may be 1 only when everything below it is 1 (the support
    of a character is a down-set), and must be 1 when it is a product of
    two elements already set to 1. Those two rules make the enumeration
    exact: every leaf is a character and every character is reached.
    """
    n = len(s)
    if n > MAX_CHARACTER_ELEMENTS:
        raise SizeLimitError(
            f"{n} elements exceeds the character-enumeration limit {MAX_CHARACTER_ELEMENTS}")
    below = [tuple(t for t in range(n) if s.leq(t, i) and t != i) for i in range(n)]
    order = sorted(range(n), key=lambda i: (len(below[i]), i))
    producers = [[] for _ in range(n)]
    for u in range(n):
        for v in range(u, n):
            w = s.op(u, v)
            if w != u and w != v:
                producers[w].append((u, v))

    bits = [None] * n
    found = []

    def assign(k):
        if k == n:
            found.append(Character(tuple(bits)))
            return
        i = order[k]
        may1 = all(bits[t] == 1 for t in below[i])
        must1 = i == s.identity or any(bits[u] == 1 and bits[v] == 1
                                       for u, v in producers[i])
        if not must1:
            bits[i] = 0
            assign(k + 1)
        if may1:
            bits[i] = 1
            assign(k + 1)
        bits[i] = None

    assign(0)
    return _canonical_sort(found)


def dual_semilattice(s):
    """The semilattice of characters under pointwise product.

    Elements are labelled f1, f2, ... in canonical character order; the
    identity is the constant-1 character. The result passes validate.
    """
    chars = characters(s)
    labels = tuple(character_label(i) for i in range(len(chars)))
    lookup = {ch.values: i for i, ch in enumerate(chars)}
    op_table = {}
    for i in range(len(chars)):
        for j in range(i, len(chars)):
            prod = chars[i].pointwise_mul(chars[j])
            op_table[(labels[i], labels[j])] = labels[lookup[prod.values]]
    one = labels[lookup[tuple(1 for _ in range(len(s)))]]
    return validate(labels, op_table, one)


@dataclass(frozen=True)
class MonoidMap:
    """A monoid homomorphism between two finite semilattices, by index."""

    source: FiniteSemilattice
    target: FiniteSemilattice
    assignment: tuple

    def apply(self, i):
        return self.assignment[i]


def double_dual_iso(s):
    """The evaluation map s -> dual(dual(s)), verified to be an isomorphism.

    ev_s sends a character to its value at s. Failure of injectivity,
    surjectivity or multiplicativity is raised rather than asserted; for
    a valid bounded semilattice none can occur.
    """
    chars = characters(s)
    dual = dual_semilattice(s)
    double = dual_semilattice(dual)
    dual_chars = characters(dual)
    lookup = {ch.values: i for i, ch in enumerate(dual_chars)}

    assignment = []
    for i in range(len(s)):
        ev = tuple(ch(i) for ch in chars)
        if ev not in lookup:
            raise NotMultiplicativeError(
                f"evaluation at {s.label(i)} is not a character of the dual")
        assignment.append(lookup[ev])
    if len(set(assignment)) != len(s):
        raise NotInjectiveError("evaluation map identifies distinct elements")
    if set(assignment) != set(range(len(double))):
        raise NotSurjectiveError("evaluation map misses a double-dual element")
    if assignment[s.identity] != double.identity:
        raise NotMultiplicativeError("evaluation map moves the identity")
    for i in range(len(s)):
        for j in range(len(s)):
            if assignment[s.op(i, j)] != double.op(assignment[i], assignment[j]):
                raise NotMultiplicativeError(
                    f"evaluation map is not multiplicative at ({s.label(i)}, {s.label(j)})")
    return MonoidMap(s, double, tuple(assignment))


def ev_matrix_rank(s):
    """Rank of the |S| x |dual S| matrix of character values.

    Equality with |S| certifies that the evaluation functionals are
    linearly independent, i.e. the finite-case representative-function
    bialgebra of the dual is the whole monoid algebra (zero biideal).
    """
    chars = characters(s)
    m = Matrix.from_rows([[ch(i) for ch in chars] for i in range(len(s))])
    return rank(m)


def parse_semilattice(text, source="<input>"):
    """Parse the semilattice text format and validate the result.

    Format: an `elements:` line, an `identity:` line, then product lines
    `a * b = c`. `#` starts a comment; blank lines are ignored. One
    orientation per unordered pair suffices; consistent duplicates are
    allowed, inconsistent ones rejected.
    """
    elements = None
    identity = None
    op_table = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            if elements is not None:
                raise ParseError("elements given twice", lineno, 1, source)
            elements = tuple(line[len("elements:"):].split())
            if not elements:
                raise ParseError("empty elements line", lineno, 1, source)
            continue
        if line.startswith("identity:"):
            if identity is not None:
                raise ParseError("identity given twice", lineno, 1, source)
            parts = line[len("identity:"):].split()
            if len(parts) != 1:
                raise ParseError("identity line needs exactly one label", lineno, 1, source)
            identity = parts[0]
            continue
        parts = line.split()
        if len(parts) != 5 or parts[1] != "*" or parts[3] != "=":
            raise ParseError(f"expected `a * b = c`, got {line!r}",
                             lineno, raw.index(line[0]) + 1, source)
        if elements is None:
            raise ParseError("product line before elements line", lineno, 1, source)
        a, _, b, _, c = parts
        for lbl in (a, b, c):
            if lbl not in elements:
                raise ParseError(f"unknown element {lbl!r}",
                                 lineno, raw.find(lbl) + 1, source)
        key, alt = (a, b), (b, a)
        for k in (key, alt):
            if k in op_table and op_table[k] != c:
                raise ConflictingEntryError(
                    f"{source}:{lineno}: conflicting products for pair ({a}, {b}):"
                    f" {op_table[k]} vs {c}")
        op_table[key] = c
    if elements is None:
        raise ParseError("missing elements line", 1, 1, source)
    if identity is None:
        raise ParseError("missing identity line", 1, 1, source)
    return validate(elements, op_table, identity)


def print_semilattice(s):
    """Canonical text form: products for index pairs i < j, no diagonal."""
    lines = [f"elements: {' '.join(s.elements)}", f"identity: {s.label(s.identity)}"]
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            lines.append(f"{s.label(i)} * {s.label(j)} = {s.label(s.op(i, j))}")
    return "\n".join(lines) + "\n"
