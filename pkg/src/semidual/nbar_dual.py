"""The finite dual of the monoid algebra of (naturals-with-bottom, max).

A functional lies in the finite dual exactly when it is eventually
constant; such functionals are stored as a finite prefix of values (at
-inf, 0, 1, ...) plus a tail value. Translation by n sends f to
m -> f(max(n, m)), so the translate span is finite dimensional, with
one basis translate per maximal constant run. The multiplicative
functionals are the threshold characters f_c (1 up to c, 0 beyond,
including c = +-inf and the constant 1 at c = +inf), which realize the
min-monoid on the full extended chain under pointwise product.

Every finite-dual functional is a unique combination of threshold
characters; the decomposition telescopes the run values and is
cross-checked against an exact linear solve plus pointwise
reconstruction. All verification windows end two points past the tail
onset: every functional involved is constant from the tail onset on, so
equality there propagates to the whole chain.
"""

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import Matrix, det, rank, solve
from .extnat import NEG_INF, POS_INF, ExtNat, fin


class StepFunctional:
    """Eventually constant rational values on the chain -inf, 0, 1, ...

    prefix holds the values at -inf, 0, ..., N-1 and tail the value from
    N on; the stored prefix is trimmed so its last entry differs from
    the tail.
    """

    __slots__ = ("prefix", "tail")

    def __init__(self, prefix, tail):
        tail = Fraction(tail)
        values = [Fraction(x) for x in prefix]
        while values and values[-1] == tail:
            values.pop()
        self.prefix = tuple(values)
        self.tail = tail

    def eval(self, point):
        if point == POS_INF:
            raise ValueError("functionals on the max-monoid have no value at +inf")
        if point == NEG_INF:
            return self.prefix[0] if self.prefix else self.tail
        idx = point.n + 1
        return self.prefix[idx] if idx < len(self.prefix) else self.tail

    def tail_onset(self):
        """First point from which the functional equals its tail forever."""
        if not self.prefix:
            return NEG_INF
        return fin(len(self.prefix) - 1)

    def window(self, extra=2):
        """-inf and the naturals through tail onset + extra."""
        return [NEG_INF] + [fin(i) for i in range(len(self.prefix) + extra)]

    def is_zero(self):
        return not self.prefix and self.tail == 0

    def pointwise_mul(self, other):
        n = max(len(self.prefix), len(other.prefix))
        points = [NEG_INF] + [fin(i) for i in range(max(n - 1, 0))]
        return StepFunctional([self.eval(p) * other.eval(p) for p in points],
                              self.tail * other.tail)

    def __eq__(self, other):
        return (isinstance(other, StepFunctional)
            and self.prefix == other.prefix and self.tail == other.tail)

    def __hash__(self):
        return hash((self.prefix, self.tail))

    def __repr__(self):
        body = ",".join(str(x) for x in self.prefix)
        return f"StepFunctional(prefix=({body}), tail={self.tail})"


def evaluate(f, point):
    return f.eval(point)


def threshold_functional(c):
    """The character f_c: 1 at points <= c, 0 beyond; f_{+inf} is constant 1."""
    if c == POS_INF:
        return StepFunctional((), 1)
    if c == NEG_INF:
        return StepFunctional((1,), 0)
    return StepFunctional((1,) * (c.n + 2), 0)


def translate(f, n):
    """The translate m -> f(max(n, m)), recanonicalized."""
    if not isinstance(n, ExtNat) or n == POS_INF:
        raise ValueError("translation points live in the max-monoid (no +inf)")
    if n == NEG_INF or not f.prefix:
        return f
    points = [NEG_INF] + [fin(i) for i in range(max(len(f.prefix) - 1, 0))]
    return StepFunctional([f.eval(max(n, p)) for p in points], f.tail)


def finite_runs(f):
    """(end point, value) per maximal constant run before the tail.

    The trailing infinite run (the tail) is not listed; canonical form
    guarantees the last listed run really ends.
    """
    if not f.prefix:
        return []
    points = [NEG_INF] + [fin(i) for i in range(len(f.prefix) - 1)]
    runs = []
    for idx, point in enumerate(points):
        value = f.prefix[idx]
        if idx + 1 == len(points) or f.prefix[idx + 1] != value:
            runs.append((point, value))
    return runs


@dataclass(frozen=True)
class TranslateSpanBasis:
    """Breakpoint translates spanning the translate space, with certificate.

    Iterating yields the breakpoints (last point of each finite run).
    When the tail is nonzero its onset joins the verified spanning set;
    dimension is the exact rank of the full translate matrix.
    """

    breakpoints: tuple
    tail_point: ExtNat | None
    dimension: int

    def __iter__(self):
        return iter(self.breakpoints)

    def __len__(self):
        return len(self.breakpoints)

    def basis_points(self):
        points = list(self.breakpoints)
        if self.tail_point is not None:
            points.append(self.tail_point)
        return points


def translate_span_basis(f):
    """Breakpoints whose translates span all translates of f, verified by rank.

    One breakpoint per finite constant run; translating anywhere inside
    a run gives the same functional, and translating into the tail gives
    the constant tail (zero when the tail is zero, hence no extra basis
    vector in that case).
    """
    runs = finite_runs(f)
    breakpoints = tuple(end for end, _ in runs)
    tail_point = f.tail_onset() if f.tail != 0 else None
    points = list(breakpoints) + ([tail_point] if tail_point is not None else [])

    window = f.window()
    basis_rows = [[translate(f, p).eval(q) for q in window] for p in points]
    dim = rank(Matrix.from_rows(basis_rows)) if basis_rows else 0
    if dim != len(basis_rows):
        raise ArithmeticError("breakpoint translates are not linearly independent")
    for n in window:
        candidate = [translate(f, n).eval(q) for q in window]
        stacked = rank(Matrix.from_rows(basis_rows + [candidate])) if basis_rows else (
            0 if all(v == 0 for v in candidate) else 1)
        if stacked != dim:
            raise ArithmeticError(f"translate at {n} escapes the breakpoint span")
    return TranslateSpanBasis(breakpoints, tail_point, dim)


def in_finite_dual(f):
    """Membership certificate: the finite translate-span basis.

    Eventual constancy is built into the representation, and the finite
    dimension of the translate span is the membership criterion in the
    other direction (functionals with infinite translate span are not
    representable here at all).
    """
    return translate_span_basis(f)


def is_character(f):
    """The threshold index when f is multiplicative, else None.

    Characters take values in {0, 1}, send the identity -inf to 1, and
    drop from 1 to 0 at most once; multiplicativity f(max(a, b)) =
    f(a) f(b) is then confirmed on a window.
    """
    window = f.window()
    values = [f.eval(p) for p in window]
    if any(v not in (0, 1) for v in values) or values[0] != 1 or f.tail not in (0, 1):
        return None
    if f.tail == 1:
        if any(v != 1 for v in values):
            return None
        threshold = POS_INF
    else:
        ones = [i for i, v in enumerate(values) if v == 1]
        if ones != list(range(len(ones))):
            return None
        threshold = window[ones[-1]]
    for a in window:
        for b in window:
            if f.eval(max(a, b)) != f.eval(a) * f.eval(b):
                return None
    return threshold


def char_mult(s, t):
    """Product law of threshold characters: the minimum of the indices.

    Cross-validated by multiplying the two step functionals pointwise
    and re-recognizing the result.
    """
    expected = min(s, t)
    product = threshold_functional(s).pointwise_mul(threshold_functional(t))
    recognized = is_character(product)
    if recognized != expected:
        raise ArithmeticError(
            f"pointwise product of f_{s} and f_{t} is f_{recognized}, not f_{expected}")
    return expected


@dataclass(frozen=True)
class SpecialDetResult:
    det: Fraction
    closed_form: Fraction
    preconditions_met: bool
    nonzero: bool


def special_det(row):
    """Determinant of the matrix with entry (i, j) = row[max(i, j)].

    Row i repeats its diagonal value in the first i positions and then
    follows the input row. The determinant has the closed form
    row[n-1] * prod(row[i] - row[i+1]); both are computed and must
    agree. When the last entry is nonzero and consecutive entries
    differ, the determinant is nonzero.
    """
    row = [Fraction(x) for x in row]
    n = len(row)
    m = Matrix(n, n, [row[max(i, j)] for i in range(n) for j in range(n)])
    direct = det(m)
    closed = Fraction(1) if n == 0 else row[-1]
    for i in range(n - 1):
        closed *= row[i] - row[i + 1]
    if direct != closed:
        raise ArithmeticError(f"determinant {direct} disagrees with closed form {closed}")
    met = n >= 1 and row[-1] != 0 and all(row[i] != row[i + 1] for i in range(n - 1))
    return SpecialDetResult(direct, closed, met, direct != 0)


def grouplike_decompose(f):
    """Write f as a combination of threshold characters, one per run.

    The +inf coefficient is the tail value (kept even when zero); each
    finite run contributes its end point with coefficient run value
    minus the next run's value, which telescopes to f at every point.
    The same coefficients are recomputed by an exact linear solve over
    the candidate characters, the reconstruction is checked pointwise on
    the verification window, and uniqueness is certified by the rank of
    the character evaluation matrix.
    """
    runs = finite_runs(f)
    values = [value for _, value in runs] + [f.tail]
    coeffs = {POS_INF: f.tail}
    for (end, value), nxt in zip(runs, values[1:]):
        coeffs[end] = value - nxt

    candidates = [POS_INF] + [end for end, _ in runs]
    points = [end for end, _ in runs] + [f.tail_onset()]
    matrix = Matrix.from_rows([[threshold_functional(c).eval(p) for c in candidates]
                               for p in points])
    solved = solve(matrix, [f.eval(p) for p in points])
    if solved is None:
        raise ArithmeticError("character evaluation matrix is singular")
    if {c: v for c, v in zip(candidates, solved)} != {c: coeffs.get(c, Fraction(0))
                                                      for c in candidates}:
        raise ArithmeticError("telescoping and linear solve disagree")
    if not verify_decomposition(f, coeffs):
        raise ArithmeticError("decomposition does not reconstruct the functional")
    eval_matrix = Matrix.from_rows([[threshold_functional(c).eval(p) for p in f.window()]
                                    for c in candidates])
    if rank(eval_matrix) != len(candidates):
        raise ArithmeticError("used characters are not linearly independent")
    return coeffs


def verify_decomposition(f, coeffs, extra=2):
    """Pointwise check of sum c_i f_i = f on the verification window."""
    window = f.window(extra)
    for p in window:
        total = sum((v * threshold_functional(c).eval(p) for c, v in coeffs.items()),
                    Fraction(0))
        if total != f.eval(p):
            return False
    return True
