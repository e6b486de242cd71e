"""Finite-dimensional semilattice-graded algebras from structure constants.

A grading assigns each basis element a semilattice degree so that
nonzero products land in the degree of the joined factors. Characters
of the grading semilattice then act by keeping the components where the
character is 1 and killing the rest; on products of homogeneous
elements this action is multiplicative, and character-by-character it
assembles into a monoid action of the dual.

The motivating example is upper triangular matrices graded by a chain:
rows get degrees from the bottom up, so the bottom-right corner is the
lowest piece. Its identity matrix is split across degrees, which makes
the strict unit law of a module algebra fail for characters vanishing
on a degree of the unit; that deviation is reported as INFO, never FAIL
(see verify_grading and check_module_algebra).
"""

import os
from fractions import Fraction

from .errors import ParseError
from .exactlin import Matrix
from .reporting import FAIL, INFO, PASS, Report
from .semilattice import characters, character_label, parse_semilattice, validate


class BadLabelsError(ValueError):
    pass


class CharacterMismatchError(ValueError):
    pass


def _clean(coeffs):
    return {k: Fraction(v) for k, v in coeffs.items() if v != 0}


class GradedFDAlgebra:
    """Structure constants over a basis, with a semilattice degree per basis element."""

    __slots__ = ("basis", "structure", "unit", "grading", "degree", "_index")

    def __init__(self, basis, structure, unit, grading, degree):
        self.basis = tuple(basis)
        if len(set(self.basis)) != len(self.basis):
            raise BadLabelsError("duplicate basis labels")
        self._index = {b: i for i, b in enumerate(self.basis)}
        n = len(self.basis)
        self.structure = {}
        for i in range(n):
            for j in range(n):
                self.structure[(i, j)] = _clean(structure.get((i, j), {}))
        self.unit = _clean(unit)
        self.grading = grading
        self.degree = tuple(degree)
        if len(self.degree) != n:
            raise BadLabelsError("degree map must cover the whole basis")
        for d in self.degree:
            if not 0 <= d < len(grading):
                raise BadLabelsError(f"degree index {d} outside the grading semilattice")

    @property
    def dim(self):
        return len(self.basis)

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise BadLabelsError(f"no basis element {label!r}") from None

    def mul_basis(self, i, j):
        return self.structure[(i, j)]

    def one(self):
        return AlgebraElement(self, self.unit)

    def element(self, coords):
        return AlgebraElement(self, coords)

    def element_from_labels(self, labelled):
        return AlgebraElement(self, {self.index(lbl): v for lbl, v in labelled.items()})

    def __eq__(self, other):
        return (isinstance(other, GradedFDAlgebra)
                and self.basis == other.basis and self.structure == other.structure
                and self.unit == other.unit and self.grading == other.grading
                and self.degree == other.degree)

    def __repr__(self):
        return f"GradedFDAlgebra(dim={self.dim}, grading={list(self.grading.elements)})"


class AlgebraElement:
    """Sparse coordinate vector in a graded algebra."""

    __slots__ = ("parent", "coords")

    def __init__(self, parent, coords):
        self.parent = parent
        self.coords = _clean(coords)

    def __add__(self, other):
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, Fraction(0)) + v
        return AlgebraElement(self.parent, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return AlgebraElement(self.parent, {k: v * c for k, v in self.coords.items()})

    def __mul__(self, other):
        out = {}
        for i, x in self.coords.items():
            for j, y in other.coords.items():
                for k, ck in self.parent.mul_basis(i, j).items():
                    out[k] = out.get(k, Fraction(0)) + x * y * ck
        return AlgebraElement(self.parent, out)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.parent is not other.parent and self.parent != other.parent:
            return False
        return self.coords == other.coords

    def __repr__(self):
        return f"AlgebraElement({format_algebra_element(self)})"


def format_algebra_element(a):
    if not a.coords:
        return "0"
    return ",".join(f"{a.parent.basis[i]}:{a.coords[i]}" for i in sorted(a.coords))


def _identity_acting_degrees(algebra):
    """Degrees d with op(d, s) = s for every degree s used by the basis."""
    g = algebra.grading
    used = sorted(set(algebra.degree))
    return {d for d in range(len(g)) if all(g.op(d, s) == s for s in used)}


def unit_in_identity_degrees(algebra):
    """Whether the unit is concentrated in degrees that act as identity."""
    good = _identity_acting_degrees(algebra)
    return all(algebra.degree[i] in good for i in algebra.unit)


def verify_grading(algebra):
    """Exhaustively check associativity, the unit law, and the grading law.

    The fourth invariant (unit concentrated in identity-acting degrees)
    is reported as INFO when it fails: gradings that split the unit
    across degrees are legitimate, they just lose the strict
    module-algebra unit law.
    """
    report = Report()
    n = algebra.dim

    witness = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = {}
                for m, c in algebra.mul_basis(i, j).items():
                    for l, d in algebra.mul_basis(m, k).items():
                        left[l] = left.get(l, Fraction(0)) + c * d
                right = {}
                for m, c in algebra.mul_basis(j, k).items():
                    for l, d in algebra.mul_basis(i, m).items():
                        right[l] = right.get(l, Fraction(0)) + c * d
                if _clean(left) != _clean(right):
                    witness = (algebra.basis[i], algebra.basis[j], algebra.basis[k])
                    break
            if witness:
                break
        if witness:
            break
    report.add("invariant", "associativity", FAIL if witness else PASS,
               f"[witness {witness}]" if witness else "")

    one = algebra.one()
    witness = None
    for i in range(n):
        b = AlgebraElement(algebra, {i: Fraction(1)})
        if one * b != b or b * one != b:
            witness = algebra.basis[i]
            break
    report.add("invariant", "unit-law", FAIL if witness else PASS,
               f"[witness {witness}]" if witness else "")

    witness = None
    for i in range(n):
        for j in range(n):
            want = algebra.grading.op(algebra.degree[i], algebra.degree[j])
            for k, c in algebra.mul_basis(i, j).items():
                if c != 0 and algebra.degree[k] != want:
                    witness = (algebra.basis[i], algebra.basis[j], algebra.basis[k])
                    break
            if witness:
                break
        if witness:
            break
    report.add("invariant", "grading-law", FAIL if witness else PASS,
               f"[witness {witness}]" if witness else "")

    if unit_in_identity_degrees(algebra):
        report.add("invariant", "unit-degrees", PASS)
    else:
        bad = sorted({algebra.grading.label(algebra.degree[i])
                      for i in algebra.unit
                      if algebra.degree[i] not in _identity_acting_degrees(algebra)})
        report.add("invariant", "unit-degrees", INFO,
                   f"[unit has components in non-identity-acting degrees {' '.join(bad)};"
                   " strict module-algebra unit law does not apply]")
    return report


def homogeneous_components(a):
    """Split an element by degree; the components sum back to the input."""
    parts = {}
    for i, v in a.coords.items():
        parts.setdefault(a.parent.degree[i], {})[i] = v
    return {d: AlgebraElement(a.parent, coords) for d, coords in sorted(parts.items())}


def act_character(f, a):
    """The dual action: keep components where f is 1, kill the rest."""
    algebra = a.parent
    if not f.is_character_of(algebra.grading):
        raise CharacterMismatchError("not a character of the grading semilattice")
    return AlgebraElement(algebra, {i: v for i, v in a.coords.items()
                                    if f(algebra.degree[i]) == 1})


def check_module_algebra(algebra):
    """Verify the module-algebra laws of the character action.

    For every character and every basis pair, acting on a product equals
    the product of the actions. The unit law gamma(f, 1) = 1 is checked
    only when the unit is concentrated in identity-acting degrees;
    otherwise one INFO line per algebra records the deviation.
    """
    grading_report = verify_grading(algebra)
    if not grading_report.passed:
        raise ValueError("algebra does not pass verify_grading")
    report = Report()
    chars = characters(algebra.grading)
    n = algebra.dim
    for ci, f in enumerate(chars):
        name = character_label(ci)
        witness = None
        for i in range(n):
            for j in range(n):
                a = AlgebraElement(algebra, {i: Fraction(1)})
                b = AlgebraElement(algebra, {j: Fraction(1)})
                if act_character(f, a * b) != act_character(f, a) * act_character(f, b):
                    witness = (algebra.basis[i], algebra.basis[j])
                    break
            if witness:
                break
        report.add("character", f"{name} multiplicative", FAIL if witness else PASS,
                   f"[witness {witness}]" if witness else "")
    if unit_in_identity_degrees(algebra):
        one = algebra.one()
        for ci, f in enumerate(chars):
            ok = act_character(f, one) == one
            report.add("character", f"{character_label(ci)} unit-law",
                       PASS if ok else FAIL)
    else:
        report.add("check", "unit-law", INFO,
                   "[unit not concentrated in identity-acting degrees;"
                   " gamma(f,1) is the projection of 1 onto the degrees where f = 1]")
    return report


class DualAction:
    """Matrices of the character action plus the monoid-action verification."""

    __slots__ = ("algebra", "labels", "matrices", "report")

    def __init__(self, algebra, labels, matrices, report):
        self.algebra = algebra
        self.labels = labels
        self.matrices = matrices
        self.report = report


def dual_monoid_action(algebra):
    """Materialize gamma(f, -) per character and verify the action laws.

    Checks that each endomorphism is multiplicative, that composition
    matches the pointwise product of characters, and that the constant-1
    character acts as the identity. The unital check follows the same
    INFO policy as check_module_algebra when the unit is split.
    """
    grading_report = verify_grading(algebra)
    if not grading_report.passed:
        raise ValueError("algebra does not pass verify_grading")
    chars = characters(algebra.grading)
    labels = [character_label(i) for i in range(len(chars))]
    n = algebra.dim
    matrices = {}
    for name, f in zip(labels, chars):
        cols = []
        for j in range(n):
            image = act_character(f, AlgebraElement(algebra, {j: Fraction(1)}))
            cols.append([image.coords.get(i, Fraction(0)) for i in range(n)])
        matrices[name] = Matrix.from_rows([[cols[j][i] for j in range(n)]
                                           for i in range(n)])

    report = Report()
    for name, f in zip(labels, chars):
        witness = None
        for i in range(n):
            for j in range(n):
                a = AlgebraElement(algebra, {i: Fraction(1)})
                b = AlgebraElement(algebra, {j: Fraction(1)})
                if act_character(f, a * b) != act_character(f, a) * act_character(f, b):
                    witness = (algebra.basis[i], algebra.basis[j])
                    break
            if witness:
                break
        report.add("endomorphism", f"{name} multiplicative",
                   FAIL if witness else PASS,
                   f"[witness {witness}]" if witness else "")
    if unit_in_identity_degrees(algebra):
        one = algebra.one()
        for name, f in zip(labels, chars):
            ok = act_character(f, one) == one
            report.add("endomorphism", f"{name} unital", PASS if ok else FAIL)
    else:
        report.add("check", "unital", INFO,
                   "[unit not concentrated in identity-acting degrees;"
                   " gamma(f,1) != 1 for characters vanishing on a unit degree]")

    lookup = {ch.values: i for i, ch in enumerate(chars)}
    witness = None
    for i, f in enumerate(chars):
        for j, g in enumerate(chars):
            prod = lookup[f.pointwise_mul(g).values]
            if matrices[labels[prod]] != matrices[labels[i]].matmul(matrices[labels[j]]):
                witness = (labels[i], labels[j])
                break
        if witness:
            break
    report.add("action", "composition", FAIL if witness else PASS,
               f"[witness {witness}]" if witness else "")
    top = lookup[tuple(1 for _ in range(len(algebra.grading)))]
    ok = matrices[labels[top]] == Matrix.identity(n)
    report.add("action", "identity-character", PASS if ok else FAIL)
    return DualAction(algebra, labels, matrices, report)


def ut_graded(m, labels):
    """Upper triangular m x m matrices graded by a chain of m naturals.

    Basis: matrix units E_pq for p <= q. The unit E_pq row p gets the
    (m + 1 - p)-th chain label, so the bottom row is the lowest degree.
    """
    labels = list(labels)
    if m < 1:
        raise BadLabelsError("size must be at least 1")
    if len(labels) != m:
        raise BadLabelsError(f"need exactly {m} labels, got {len(labels)}")
    if any(not isinstance(v, int) or v < 0 for v in labels):
        raise BadLabelsError("labels must be naturals")
    if any(labels[i] >= labels[i + 1] for i in range(m - 1)):
        raise BadLabelsError("labels must be strictly increasing")

    chain_labels = tuple(f"n{v}" for v in labels)
    op_table = {}
    for a in range(m):
        for b in range(a, m):
            op_table[(chain_labels[a], chain_labels[b])] = chain_labels[max(a, b)]
    grading = validate(chain_labels, op_table, chain_labels[0])

    units = [(p, q) for p in range(1, m + 1) for q in range(p, m + 1)]
    basis = tuple(f"E{p}{q}" for p, q in units)
    pos = {pq: i for i, pq in enumerate(units)}
    structure = {}
    for i, (p, q) in enumerate(units):
        for j, (r, t) in enumerate(units):
            if q == r:
                structure[(i, j)] = {pos[(p, t)]: Fraction(1)}
    unit = {pos[(p, p)]: Fraction(1) for p in range(1, m + 1)}
    degree = tuple(m - p for p, _ in units)
    return GradedFDAlgebra(basis, structure, unit, grading, degree)


def _parse_rational(text, lineno, source):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {text!r}", lineno, 1, source) from None


def _parse_terms(text, lineno, source):
    out = {}
    for part in text.replace("+", " ").split():
        if ":" not in part:
            raise ParseError(f"expected label:rational, got {part!r}", lineno, 1, source)
        label, _, value = part.partition(":")
        out[label] = _parse_rational(value, lineno, source)
    return out

def parse_graded(text, source="<input>", slat_loader=None):
    """Parse the graded-algebra text format.

    Lines: `basis:`, `unit:`, `semilattice: <path>`, `degree <basis>
    <element>`, and `mul a b = c:q [+ d:q ...]`; pairs without a mul
    line multiply to zero. The semilattice path is resolved by
    slat_loader (for files, relative to the file's directory).
    """
    basis = None
    unit = None
    grading = None
    degree_lines = {}
    mul_lines = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("basis:"):
            basis = tuple(line[len("basis:"):].split())
            continue
        if line.startswith("unit:"):
            unit = _parse_terms(line[len("unit:"):], lineno, source)
            continue
        if line.startswith("semilattice:"):
            path = line[len("semilattice:"):].strip()
            if slat_loader is None:
                raise ParseError("no semilattice loader available", lineno, 1, source)
            grading = slat_loader(path)
            continue
        if line.startswith("degree "):
            parts = line.split()
            if len(parts) != 3:
                raise ParseError("degree line needs basis label and element", lineno, 1, source)
            degree_lines[parts[1]] = parts[2]
            continue
        if line.startswith("mul "):
            parts = line[len("mul "):].split("=", 1)
            if len(parts) != 2:
                raise ParseError("mul line needs `= products`", lineno, 1, source)
            factors = parts[0].split()
            if len(factors) != 2:
                raise ParseError("mul line needs two factors", lineno, 1, source)
            key = (factors[0], factors[1])
            if key in mul_lines:
                raise ParseError(f"duplicate mul line for {key}", lineno, 1, source)
            mul_lines[key] = _parse_terms(parts[1], lineno, source)
            continue
        raise ParseError(f"unrecognized line {line!r}", lineno, 1, source)

    if basis is None:
        raise ParseError("missing basis line", 1, 1, source)
    if unit is None:
        raise ParseError("missing unit line", 1, 1, source)
    if grading is None:
        raise ParseError("missing semilattice line", 1, 1, source)
    index = {b: i for i, b in enumerate(basis)}
    for label in list(degree_lines) + [b for pair in mul_lines for b in pair]:
        if label not in index:
            raise ParseError(f"unknown basis element {label!r}", 1, 1, source)
    missing = [b for b in basis if b not in degree_lines]
    if missing:
        raise ParseError(f"no degree for basis element {missing[0]!r}", 1, 1, source)
    degree = tuple(grading.index(degree_lines[b]) for b in basis)
    structure = {}
    for (a, b), terms in mul_lines.items():
        vec = {}
        for label, value in terms.items():
            if label not in index:
                raise ParseError(f"unknown basis element {label!r}", 1, 1, source)
            vec[index[label]] = value
        structure[(index[a], index[b])] = vec
    unit_vec = {}
    for label, value in unit.items():
        if label not in index:
            raise ParseError(f"unknown basis element {label!r}", 1, 1, source)
        unit_vec[index[label]] = value
    return GradedFDAlgebra(basis, structure, unit_vec, grading, degree)


def parse_graded_file(path):
    directory = os.path.dirname(os.path.abspath(path))

    def loader(ref):
        slat_path = ref if os.path.isabs(ref) else os.path.join(directory, ref)
        with open(slat_path, encoding="utf-8") as fh:
            return parse_semilattice(fh.read(), source=slat_path)

    with open(path, encoding="utf-8") as fh:
        return parse_graded(fh.read(), source=str(path), slat_loader=loader)


def print_graded(algebra, slat_ref):
    """Canonical text form; slat_ref is written on the semilattice line."""
    lines = [f"basis: {' '.join(algebra.basis)}"]
    unit = " ".join(f"{algebra.basis[i]}:{algebra.unit[i]}" for i in sorted(algebra.unit))
    lines.append(f"unit: {unit}")
    lines.append(f"semilattice: {slat_ref}")
    for i, b in enumerate(algebra.basis):
        lines.append(f"degree {b} {algebra.grading.label(algebra.degree[i])}")
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            vec = algebra.mul_basis(i, j)
            if vec:
                terms = " + ".join(f"{algebra.basis[k]}:{vec[k]}" for k in sorted(vec))
                lines.append(f"mul {algebra.basis[i]} {algebra.basis[j]} = {terms}")
    return "\n".join(lines) + "\n"
