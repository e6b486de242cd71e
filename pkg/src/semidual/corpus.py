"""Bundled example structures and brute-force oracles.

Chains, small Boolean lattices, divisor lattices and the graded
upper-triangular algebras, both as constructors and as shipped text
files (data/*.slat, data/*.galg). The oracles re-derive characters and
quotient group-likes by methods independent of the main enumerators:
characters by testing every bit-vector, group-likes by a coefficient
grid search backed by the symbolic characteristic-zero forcing.
"""

from fractions import Fraction
from importlib import resources
from itertools import product
from math import gcd

from .bialgebra import (MonoidAlgebraElement, grouplike_basis_classification,
                        is_grouplike, quotient_semilattice)
from .errors import SizeLimitError
from .graded import parse_graded, print_graded, ut_graded
from .semilattice import (Character, _canonical_sort, parse_semilattice,
                          print_semilattice, validate)

BRUTE_CHARACTER_LIMIT = 16
BRUTE_GROUPLIKE_LIMIT = 6
GRID = (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))


def chain(m):
    """The chain n1 < ... < nm under max, identity n1."""
    labels = tuple(f"n{i}" for i in range(1, m + 1))
    op_table = {(labels[i], labels[j]): labels[max(i, j)]
                for i in range(m) for j in range(i, m)}
    return validate(labels, op_table, labels[0])


def boolean_lattice(k):
    """Subsets of {1..k} under union; the empty set is labelled 0."""
    def label(mask):
        if mask == 0:
            return "0"
        return "".join(str(i + 1) for i in range(k) if mask >> i & 1)

    masks = list(range(1 << k))
    labels = tuple(label(mask) for mask in masks)
    op_table = {(label(a), label(b)): label(a | b)
                for a in masks for b in masks}
    return validate(labels, op_table, "0")


def divisor_lattice(n):
    """Divisors of n under lcm, identity 1."""
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    labels = tuple(str(d) for d in divisors)
    op_table = {(str(a), str(b)): str(a * b // gcd(a, b))
                for a in divisors for b in divisors}
    return validate(labels, op_table, "1")


def semilattices():
    """All bundled semilattices, keyed by corpus name."""
    out = {f"chain{m}": chain(m) for m in range(1, 9)}
    out.update({f"bool{k}": boolean_lattice(k) for k in range(1, 4)})
    out.update({f"div{n}": divisor_lattice(n) for n in (12, 30, 36)})
    return out


def ut_algebras():
    """The bundled graded upper-triangular algebras UT_1 .. UT_5."""
    return {f"ut{m}": ut_graded(m, list(range(1, m + 1))) for m in range(1, 6)}


def brute_characters(s):
    """Every bit-vector tested against the character equations directly."""
    n = len(s)
    if n > BRUTE_CHARACTER_LIMIT:
        raise SizeLimitError(f"{n} elements exceeds the brute-force limit {BRUTE_CHARACTER_LIMIT}")
    found = []
    for mask in range(1 << n):
        bits = tuple(mask >> i & 1 for i in range(n))
        if bits[s.identity] != 1:
            continue
        if all(bits[s.op(i, j)] == bits[i] * bits[j]
               for i in range(n) for j in range(i, n)):
            found.append(Character(bits))
    return _canonical_sort(found)


def brute_grouplikes_smallfield(s, congruence):
    """Grid search for group-likes in the quotient monoid algebra.

    Coefficient vectors over {-1, 0, 1/2, 1, 2} are tested one by one;
    the grid contains the basis cosets, so they are all found, and the
    search is a partial refutation that nothing else qualifies (a grid
    cannot rule out all of the rationals; the complete argument is the
    symbolic alpha^2 = alpha forcing, re-run here as a cross-check).
    """
    quotient, _ = quotient_semilattice(congruence)
    dim = len(quotient)
    if dim > BRUTE_GROUPLIKE_LIMIT:
        raise SizeLimitError(f"quotient dimension {dim} exceeds {BRUTE_GROUPLIKE_LIMIT}")
    found = []
    for vector in product(GRID, repeat=dim):
        element = MonoidAlgebraElement(quotient, dict(enumerate(vector)))
        if is_grouplike(element):
            found.append(element)
    symbolic = grouplike_basis_classification(quotient)
    if sorted(tuple(sorted(x.coeffs.items())) for x in found) != \
            sorted(tuple(sorted(x.coeffs.items())) for x in symbolic):
        raise ArithmeticError("grid search disagrees with the symbolic classification")
    return found


def _data_root():
    return resources.files("semidual") / "data"


def data_path(name):
    """Filesystem path of a bundled corpus file (for the CLI and tests)."""
    return str(_data_root() / name)


def load_semilattice(name):
    path = _data_root() / f"{name}.slat"
    return parse_semilattice(path.read_text(encoding="utf-8"), source=str(path))


def load_graded(name):
    path = _data_root() / f"{name}.galg"

    def loader(ref):
        slat = _data_root() / ref
        return parse_semilattice(slat.read_text(encoding="utf-8"), source=str(slat))

    return parse_graded(path.read_text(encoding="utf-8"), source=str(path),
                        slat_loader=loader)


def render_corpus_files():
    """Canonical text of every bundled structure, keyed by file name."""
    files = {}
    for name, s in semilattices().items():
        files[f"{name}.slat"] = print_semilattice(s)
    for name, algebra in ut_algebras().items():
        m = int(name[2:])
        files[f"{name}.galg"] = print_graded(algebra, f"chain{m}.slat")
    return files
