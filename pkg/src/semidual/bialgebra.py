"""The monoid algebra of a finite semilattice as a bialgebra.

Basis elements multiply by the semilattice operation; comultiplication
is diagonal (s -> s (x) s) and the counit sends every basis element to 1.
Group-like elements of the monoid algebra are exactly the basis
elements, and this classification survives quotients by congruence
ideals: the quotient of kS by span{s - t : s ~ t} is the monoid algebra
of the quotient semilattice, where the group-likes are the cosets.

Quotients by coideals that do not come from a congruence are out of
scope, as is any Hopf/antipode structure.
"""

from fractions import Fraction

from .exactlin import Matrix, rank
from .reporting import FAIL, PASS, Report
from .semilattice import characters, validate


class ParentMismatchError(ValueError):
    pass


class NotACongruenceError(ValueError):
    pass


def _clean(coeffs):
    return {k: Fraction(v) for k, v in coeffs.items() if v != 0}


class MonoidAlgebraElement:
    """Sparse rational combination of semilattice elements."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent, coeffs):
        self.parent = parent
        self.coeffs = _clean(coeffs)

    @classmethod
    def basis(cls, parent, i):
        return cls(parent, {i: Fraction(1)})

    @classmethod
    def unit(cls, parent):
        return cls.basis(parent, parent.identity)

    @classmethod
    def zero(cls, parent):
        return cls(parent, {})

    @classmethod
    def from_labels(cls, parent, labelled):
        return cls(parent, {parent.index(lbl): Fraction(v) for lbl, v in labelled.items()})

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return MonoidAlgebraElement(self.parent, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return MonoidAlgebraElement(self.parent, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        return multiply(self, other)

    def _check(self, other):
        if self.parent is not other.parent and self.parent != other.parent:
            raise ParentMismatchError("elements of different monoid algebras")

    def __eq__(self, other):
        return (isinstance(other, MonoidAlgebraElement)
                and self.parent == other.parent and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.parent, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        return f"MonoidAlgebraElement({format_element(self)})"


def format_element(a):
    if not a.coeffs:
        return "0"
    bits = []
    for i in sorted(a.coeffs):
        c = a.coeffs[i]
        label = a.parent.label(i)
        if c == 1:
            term = label
        elif c == -1:
            term = f"-{label}"
        else:
            term = f"{c}*{label}"
        bits.append(term if not bits else (f"+ {term}" if c > 0 else f"- {term[1:]}"))
    return " ".join(bits)


class TensorElement:
    """Sparse element of kS (x) kS, keyed by ordered index pairs."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent, coeffs):
        self.parent = parent
        self.coeffs = _clean(coeffs)

    def __mul__(self, other):
        out = {}
        for (a, b), x in self.coeffs.items():
            for (c, d), y in other.coeffs.items():
                key = (self.parent.op(a, c), self.parent.op(b, d))
                out[key] = out.get(key, Fraction(0)) + x * y
        return TensorElement(self.parent, out)

    def __eq__(self, other):
        return (isinstance(other, TensorElement)
                and self.parent == other.parent and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"TensorElement({dict(sorted(self.coeffs.items()))})"


def multiply(a, b):
    """Bilinear extension of the semilattice operation."""
    a._check(b)
    out = {}
    for i, x in a.coeffs.items():
        for j, y in b.coeffs.items():
            k = a.parent.op(i, j)
            out[k] = out.get(k, Fraction(0)) + x * y
    return MonoidAlgebraElement(a.parent, out)


def comultiply(a):
    """Diagonal comultiplication: sum a_s s maps to sum a_s (s, s)."""
    return TensorElement(a.parent, {(i, i): v for i, v in a.coeffs.items()})


def counit(a):
    """Every basis element counts 1, so this is the coefficient sum."""
    return sum(a.coeffs.values(), Fraction(0))


def tensor_square(a):
    return TensorElement(a.parent, {(i, j): x * y
                                    for i, x in a.coeffs.items()
                                    for j, y in a.coeffs.items()})


def is_grouplike(a):
    """True iff comultiply(a) = a (x) a and counit(a) = 1."""
    return counit(a) == 1 and comultiply(a) == tensor_square(a)


def check_bialgebra_axioms(s):
    """Verify the bialgebra axioms of kS on basis elements.

    Bilinearity of every map involved reduces the axioms to basis
    elements and pairs, which are checked exhaustively.
    """
    report = Report()
    n = len(s)

    def tensor3_from_left(t):
        return {(a, a, b): v for (a, b), v in t.coeffs.items()}

    def tensor3_from_right(t):
        return {(a, b, b): v for (a, b), v in t.coeffs.items()}

    witness = next((s.label(i) for i in range(n)
                    if tensor3_from_left(comultiply(MonoidAlgebraElement.basis(s, i)))
                    != tensor3_from_right(comultiply(MonoidAlgebraElement.basis(s, i)))), None)
    report.add("axiom", "coassociativity", FAIL if witness else PASS,
               f"[witness s={witness}]" if witness else "")

    def counit_sides_ok(i):
        t = comultiply(MonoidAlgebraElement.basis(s, i))
        left = {}
        right = {}
        for (a, b), v in t.coeffs.items():
            left[b] = left.get(b, Fraction(0)) + v
            right[a] = right.get(a, Fraction(0)) + v
        want = {i: Fraction(1)}
        return _clean(left) == want, _clean(right) == want

    bad_left = next((s.label(i) for i in range(n) if not counit_sides_ok(i)[0]), None)
    report.add("axiom", "counit-left", FAIL if bad_left else PASS,
               f"[witness s={bad_left}]" if bad_left else "")
    bad_right = next((s.label(i) for i in range(n) if not counit_sides_ok(i)[1]), None)
    report.add("axiom", "counit-right", FAIL if bad_right else PASS,
               f"[witness s={bad_right}]" if bad_right else "")

    witness = None
    for i in range(n):
        for j in range(n):
            a = MonoidAlgebraElement.basis(s, i)
            b = MonoidAlgebraElement.basis(s, j)
            if comultiply(multiply(a, b)) != comultiply(a) * comultiply(b):
                witness = f"[witness s={s.label(i)} t={s.label(j)}]"
                break
        if witness:
            break
    report.add("axiom", "comultiplication-multiplicative", FAIL if witness else PASS,
               witness or "")

    witness = None
    for i in range(n):
        for j in range(n):
            a = MonoidAlgebraElement.basis(s, i)
            b = MonoidAlgebraElement.basis(s, j)
            if counit(multiply(a, b)) != counit(a) * counit(b):
                witness = f"[witness s={s.label(i)} t={s.label(j)}]"
                break
        if witness:
            break
    report.add("axiom", "counit-multiplicative", FAIL if witness else PASS, witness or "")

    one = MonoidAlgebraElement.unit(s)
    ok = comultiply(one) == tensor_square(one)
    report.add("axiom", "comultiplication-unit", PASS if ok else FAIL)
    ok = counit(one) == 1
    report.add("axiom", "counit-unit", PASS if ok else FAIL)
    return report


def alg_homs(s):
    """The algebra homomorphisms kS -> k, i.e. the group-likes of the finite dual.

    For finite S the finite dual is the whole linear dual, and its
    group-likes are exactly the characters of S; this delegates to the
    character enumeration and is the same canonical ordering.
    """
    return characters(s)


class Congruence:
    """A partition of a semilattice compatible with its operation."""

    __slots__ = ("parent", "classes", "_class_of")

    def __init__(self, parent, classes):
        self.parent = parent
        self.classes = tuple(tuple(sorted(c)) for c in
                             sorted(classes, key=lambda c: min(c)))
        self._class_of = {}
        for ci, members in enumerate(self.classes):
            for m in members:
                self._class_of[m] = ci
        covered = sorted(self._class_of)
        if covered != list(range(len(parent))):
            raise NotACongruenceError("classes do not partition the elements")

    def class_of(self, i):
        return self._class_of[i]

    def is_congruence(self):
        p = self.parent
        for a in range(len(p)):
            for b in range(len(p)):
                if self.class_of(a) != self.class_of(b):
                    continue
                for t in range(len(p)):
                    if self.class_of(p.op(a, t)) != self.class_of(p.op(b, t)):
                        return False
        return True

    def class_label(self, ci):
        return "+".join(self.parent.label(m) for m in self.classes[ci])

    def __eq__(self, other):
        return (isinstance(other, Congruence) and self.parent == other.parent
                and self.classes == other.classes)

    def __repr__(self):
        return f"Congruence({[self.class_label(i) for i in range(len(self.classes))]})"


def congruence_closure(s, pairs):
    """Smallest congruence of s containing the given label pairs (union-find)."""
    parent = list(range(len(s)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
            return True
        return False

    for a, b in pairs:
        union(s.index(a), s.index(b))
    changed = True
    while changed:
        changed = False
        for a in range(len(s)):
            for b in range(len(s)):
                if find(a) == find(b):
                    for t in range(len(s)):
                        if union(s.op(a, t), s.op(b, t)):
                            changed = True
    groups = {}
    for i in range(len(s)):
        groups.setdefault(find(i), []).append(i)
    return Congruence(s, groups.values())


def quotient_semilattice(c):
    """The quotient monoid of a congruence, as a validated semilattice.

    Returns (quotient, projection) where projection maps old indices to
    new ones. Class labels join the member labels with '+'.
    """
    s = c.parent
    labels = tuple(c.class_label(i) for i in range(len(c.classes)))
    op_table = {}
    for ci, members in enumerate(c.classes):
        for cj in range(ci, len(c.classes)):
            rep = s.op(members[0], c.classes[cj][0])
            op_table[(labels[ci], labels[cj])] = labels[c.class_of(rep)]
    identity = labels[c.class_of(s.identity)]
    quotient = validate(labels, op_table, identity)
    projection = tuple(c.class_of(i) for i in range(len(s)))
    return quotient, projection


def grouplike_basis_classification(q):
    """All group-likes of the monoid algebra of q, with the char-0 forcing.

    For a = sum alpha_i b_i, comultiply(a) - a (x) a has off-diagonal
    coefficient -alpha_i alpha_j and diagonal alpha_i - alpha_i^2, so a
    group-like needs every alpha in {0, 1} (alpha^2 = alpha over a field
    of characteristic zero), at most one of them nonzero, and counit 1
    picks exactly one. The structural premise (diagonal comultiplication
    on the basis) is re-checked here rather than assumed, and each of
    the |q| candidate solutions is verified against the actual maps.
    """
    for i in range(len(q)):
        b = MonoidAlgebraElement.basis(q, i)
        if comultiply(b).coeffs != {(i, i): Fraction(1)}:
            raise AssertionError("comultiplication is not diagonal on the basis")
    solutions = []
    for i in range(len(q)):
        cand = MonoidAlgebraElement.basis(q, i)
        if not is_grouplike(cand):
            raise AssertionError(f"basis element {q.label(i)} fails the group-like test")
        solutions.append(cand)
    return solutions


class QuotientGrouplikes:
    """Result of quotient_grouplikes: the cosets plus a verification report."""

    __slots__ = ("quotient", "projection", "cosets", "report")

    def __init__(self, quotient, projection, cosets, report):
        self.quotient = quotient
        self.projection = projection
        self.cosets = cosets
        self.report = report


def quotient_grouplikes(s, c):
    """Group-likes of kS / I for the congruence ideal I = span{s - t : s ~ t}.

    The quotient is identified with the monoid algebra of S/~. The
    returned cosets are the images of the congruence classes; the report
    verifies that each is group-like, that they are linearly independent
    (distinct basis elements), and that the characteristic-zero forcing
    argument admits no others.
    """
    if c.parent != s:
        raise NotACongruenceError("congruence belongs to a different semilattice")
    if not c.is_congruence():
        raise NotACongruenceError("partition is not compatible with the operation")
    quotient, projection = quotient_semilattice(c)
    cosets = [MonoidAlgebraElement.basis(quotient, i) for i in range(len(quotient))]
    report = Report()
    for i, coset in enumerate(cosets):
        report.add("grouplike", quotient.label(i),
                   PASS if is_grouplike(coset) else FAIL)
    coeff_matrix = Matrix.from_rows(
        [[x.coeffs.get(i, Fraction(0)) for i in range(len(quotient))] for x in cosets])
    coeff_rank = rank(coeff_matrix)
    report.add("check", "linear-independence",
               PASS if coeff_rank == len(cosets) else FAIL,
               f"[coefficient rank {coeff_rank} of {len(cosets)}]")
    try:
        complete = grouplike_basis_classification(quotient)
        ok = len(complete) == len(cosets)
    except AssertionError:
        ok = False
    report.add("check", "completeness", PASS if ok else FAIL,
               "[alpha^2 = alpha forcing over characteristic 0]" if ok else "")
    return QuotientGrouplikes(quotient, projection, cosets, report)
