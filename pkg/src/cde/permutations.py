"""Permutations, weak Bruhat order, 0-Hecke words, and the vexillary toolkit.

Permutations are tuples in one-line notation on {1..n}; generator indices are
1-based, so generator s swaps positions s and s+1.  The ambient symmetric
group is always the length of the tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .core import IntPolynomial, interpolate_integer_polynomial, stirling2
from .errors import (
    CapacityError,
    MalformedInputError,
    NotVexillaryError,
    RangeError,
)
from .poset import FinitePoset, _check_capacity, _validated, capacity
from .tableaux import count_ssyt_by_total, rect_staircase

__all__ = [
    "check_permutation",
    "identity",
    "inverse",
    "compose",
    "length",
    "descents",
    "left_inversions",
    "lehmer_code",
    "prepend_identity",
    "PermClass",
    "classify",
    "permutation_from_code",
    "dominant_of_shape",
    "grassmannian_of_shape",
    "inverse_grassmannian_of_shape",
    "hecke_product",
    "word_to_hecke",
    "left_factor_check",
    "weak_interval_elements",
    "weak_interval",
    "weak_order_full",
    "strong_bruhat",
    "count_reduced",
    "enumerate_reduced",
    "count_nearly_reduced",
    "enumerate_hecke_words",
    "expectation_Y_words",
    "expectation_X_complementary",
    "noninversion_poset",
    "dominant_EX_closed_form",
    "RotheData",
    "rothe_diagram",
    "rothe",
    "fk_polynomial",
    "FkConjectureReport",
    "conjecture_fk_check",
]


def check_permutation(w) -> tuple[int, ...]:
    w = tuple(int(v) for v in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise MalformedInputError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def inverse(w) -> tuple[int, ...]:
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def compose(u, v) -> tuple[int, ...]:
    """(u v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def descents(w) -> tuple[int, ...]:
    """Right descents: generator indices s with w(s) > w(s+1).

    >>> descents((1, 2, 3))
    ()
    >>> descents((3, 1, 2))
    (1,)
    """
    return tuple(s for s in range(1, len(w)) if w[s - 1] > w[s])


def left_inversions(w) -> frozenset[tuple[int, int]]:
    """Value pairs (a, b), a < b, appearing out of order in w."""
    pos = inverse(w)
    n = len(w)
    return frozenset(
        (a, b) for a in range(1, n) for b in range(a + 1, n + 1) if pos[a - 1] > pos[b - 1]
    )


def length(w) -> int:
    return len(left_inversions(w))


def lehmer_code(w) -> tuple[int, ...]:
    """c_i = #{j > i : w(i) > w(j)}.

    >>> lehmer_code((4, 2, 3, 1))
    (3, 1, 1, 0)
    """
    n = len(w)
    return tuple(
        sum(1 for j in range(i + 1, n) if w[i] > w[j]) for i in range(n)
    )


def prepend_identity(w, N: int) -> tuple[int, ...]:
    """The permutation fixing 1..N and acting as w shifted above it."""
    return identity(N) + tuple(v + N for v in w)


@dataclass(frozen=True)
class PermClass:
    vexillary: bool
    dominant: bool
    grassmannian: bool
    inverse_grassmannian: bool
    shape: tuple[int, ...] | None  # present iff vexillary


def _contains_2143(w) -> bool:
    n = len(w)
    for i1 in range(n):
        for i2 in range(i1 + 1, n):
            if w[i2] >= w[i1]:
                continue
            for i3 in range(i2 + 1, n):
                if w[i3] <= w[i1]:
                    continue
                for i4 in range(i3 + 1, n):
                    if w[i1] < w[i4] < w[i3]:
                        return True
    return False


def _contains_132(w) -> bool:
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n):
            if w[j] <= w[i]:
                continue
            for k in range(j + 1, n):
                if w[i] < w[k] < w[j]:
                    return True
    return False


def classify(w) -> PermClass:
    w = check_permutation(w)
    vex = not _contains_2143(w)
    dom = not _contains_132(w)
    grass = len(descents(w)) <= 1
    inv_grass = len(descents(inverse(w))) <= 1
    shape = None
    if vex:
        shape = tuple(sorted((c for c in lehmer_code(w) if c), reverse=True))
    return PermClass(vex, dom, grass, inv_grass, shape)


def permutation_from_code(code) -> tuple[int, ...]:
    n = len(code)
    if any(not 0 <= code[i] <= n - 1 - i for i in range(n)):
        raise MalformedInputError(f"{code} is not a valid code")
    remaining = list(range(1, n + 1))
    out = []
    for c in code:
        out.append(remaining.pop(c))
    return tuple(out)


def dominant_of_shape(shape) -> tuple[int, ...]:
    """The unique 132-avoiding permutation whose code is `shape`, in the
    smallest symmetric group that holds it."""
    shape = tuple(shape)
    if not shape:
        return (1,)
    n = max(p + i for i, p in enumerate(shape, start=1))
    code = tuple(shape) + (0,) * (n - len(shape))
    return permutation_from_code(code)


def grassmannian_of_shape(shape) -> tuple[int, ...]:
    """The permutation with a single descent whose shape is `shape`."""
    shape = tuple(shape)
    if not shape:
        return (1,)
    ell = len(shape)
    n = shape[0] + ell
    first = [shape[ell - i] + i for i in range(1, ell + 1)]
    rest = [v for v in range(1, n + 1) if v not in set(first)]
    return tuple(first + rest)


def inverse_grassmannian_of_shape(shape) -> tuple[int, ...]:
    return inverse(grassmannian_of_shape(shape))


# ---------------------------------------------------------------------------
# 0-Hecke products and the weak order


def hecke_product(u, s: int) -> tuple[int, ...]:
    """u * T_s: apply s when it increases length, absorb it otherwise."""
    if not 1 <= s <= len(u) - 1:
        raise RangeError(f"generator {s} out of range for n={len(u)}")
    if u[s - 1] < u[s]:
        return u[: s - 1] + (u[s], u[s - 1]) + u[s + 1 :]
    return u


def word_to_hecke(word, n: int | None = None) -> tuple[int, ...]:
    """Fold a generator word through the 0-Hecke product, starting at the
    identity."""
    word = tuple(word)
    if n is None:
        n = max(word) + 1 if word else 1
    u = identity(n)
    for s in word:
        u = hecke_product(u, s)
    return u


def left_factor_check(u, w) -> bool:
    """u <= w in right weak order, tested by inversion-set containment."""
    if len(u) != len(w):
        raise MalformedInputError("permutations live in different symmetric groups")
    return left_inversions(u) <= left_inversions(w)


def weak_interval_elements(w) -> set[tuple[int, ...]]:
    """All u below w in right weak order, found by walking descents down."""
    w = check_permutation(w)
    seen = {w}
    stack = [w]
    while stack:
        u = stack.pop()
        for s in descents(u):
            v = u[: s - 1] + (u[s], u[s - 1]) + u[s + 1 :]
            if v not in seen:
                seen.add(v)
                stack.append(v)
                _check_capacity(len(seen), "weak order interval")
    return seen


def _perm_label(u) -> str:
    if len(u) <= 9:
        return "".join(map(str, u))
    return ",".join(map(str, u))


def weak_interval(w) -> FinitePoset:
    """The interval below w in right weak order, as a validated poset."""
    members = weak_interval_elements(w)
    ordered = sorted(members, key=lambda u: (length(u), u))
    index = {u: i for i, u in enumerate(ordered)}
    covers = set()
    for u in ordered:
        for s in range(1, len(u)):
            if u[s - 1] < u[s]:
                v = u[: s - 1] + (u[s], u[s - 1]) + u[s + 1 :]
                if v in index:
                    covers.add((index[u], index[v]))
    return _validated(len(ordered), covers, [_perm_label(u) for u in ordered])


def weak_order_full(n: int) -> FinitePoset:
    w0 = tuple(range(n, 0, -1))
    return weak_interval(w0)


def strong_bruhat(n: int) -> FinitePoset:
    """Strong Bruhat order on the whole symmetric group."""
    _check_capacity(factorial(n), "strong Bruhat order")
    from itertools import permutations as iperm

    elements = sorted(iperm(range(1, n + 1)), key=lambda u: (length(u), u))
    index = {u: i for i, u in enumerate(elements)}
    covers = set()
    for u in elements:
        lu = length(u)
        for i in range(n):
            for j in range(i + 1, n):
                if u[i] < u[j]:
                    v = list(u)
                    v[i], v[j] = v[j], v[i]
                    v = tuple(v)
                    if length(v) == lu + 1:
                        covers.add((index[u], index[v]))
    return _validated(len(elements), covers, [_perm_label(u) for u in elements])


# ---------------------------------------------------------------------------
# word counting


@lru_cache(maxsize=None)
def count_reduced(w) -> int:
    """Number of reduced words, i.e. maximal chains of the weak interval."""
    des = descents(w)
    if not des:
        return 1
    total = 0
    for s in des:
        total += count_reduced(w[: s - 1] + (w[s], w[s - 1]) + w[s + 1 :])
    return total


def enumerate_reduced(w) -> list[tuple[int, ...]]:
    w = check_permutation(w)
    des = descents(w)
    if not des:
        return [()]
    out = []
    for s in des:
        u = w[: s - 1] + (w[s], w[s - 1]) + w[s + 1 :]
        out.extend(word + (s,) for word in enumerate_reduced(u))
    return sorted(out)


def count_nearly_reduced(w) -> int:
    """Number of 0-Hecke words one letter longer than the length of w.

    Every such word arises from a reduced word by inserting a descent of one
    of its prefixes, so the count is a descent-weighted sum of path counts
    through the weak interval.
    """
    w = check_permutation(w)
    total = 0
    for u in weak_interval_elements(w):
        d = len(descents(u))
        if d:
            total += d * count_reduced(u) * count_reduced(compose(inverse(u), w))
    return total


def enumerate_hecke_words(w, L: int) -> list[tuple[int, ...]]:
    """All length-L words with 0-Hecke product w (small cases only)."""
    w = check_permutation(w)
    n = len(w)
    target = left_inversions(w)
    lw = len(target)
    out = []
    word = []

    def rec(u, lu):
        if len(word) == L:
            if u == w:
                out.append(tuple(word))
            return
        if lw - lu > L - len(word):
            return
        _check_capacity(len(out), "0-Hecke word enumeration")
        for s in range(1, n):
            v = hecke_product(u, s)
            if v is not u and not left_inversions(v) <= target:
                continue
            word.append(s)
            rec(v, lu + (0 if v is u else 1))
            word.pop()

    rec(identity(n), 0)
    return out


def expectation_Y_words(w) -> Fraction:
    """Chain-weighted down-degree expectation of the weak interval, straight
    from word counts."""
    w = check_permutation(w)
    return Fraction(count_nearly_reduced(w), (length(w) + 1) * count_reduced(w))


def expectation_X_complementary(w) -> Fraction:
    """Edge density of the weak interval via the complementary count of
    up-steps that leave the interval."""
    w = check_permutation(w)
    members = weak_interval_elements(w)
    n = len(w)
    missing = 0
    for u in members:
        for s in range(1, n):
            if u[s - 1] < u[s]:
                v = u[: s - 1] + (u[s], u[s - 1]) + u[s + 1 :]
                if v not in members:
                    missing += 1
    return Fraction(1, 2) * ((n - 1) - Fraction(missing, len(members)))


# ---------------------------------------------------------------------------
# noninversion posets and dominant permutations


def noninversion_poset(w) -> FinitePoset:
    """Order on {1..n} keeping i < j exactly when w leaves the pair in order;
    linear extensions of this poset are the weak interval below w."""
    w = check_permutation(w)
    n = len(w)
    pos = inverse(w)
    rel = [[False] * n for _ in range(n)]
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            if pos[a - 1] < pos[b - 1]:
                rel[a - 1][b - 1] = True
    covers = set()
    for a in range(n):
        for b in range(n):
            if rel[a][b] and not any(rel[a][z] and rel[z][b] for z in range(n)):
                covers.add((a, b))
    return _validated(n, covers, [str(v) for v in range(1, n + 1)])


def dominant_EX_closed_form(d: int, a: int, b: int) -> Fraction:
    """Edge density of the weak interval below the dominant permutation of
    staircase-times-rectangle shape, evaluated through the telescoped
    hook-ratio sums over its noninversion forest."""
    if d < 2 or a < 1 or b < 1:
        raise MalformedInputError("need d >= 2 and positive a, b")
    if a > b:
        a, b = b, a  # the dual interval has the same edge density
    N = a + (d - 1) * b

    def c(j):
        return Fraction(j * b, a + (j - 1) * b)

    thetas = []
    for ell in range(d - 1):
        prod = Fraction(1)
        for j in range(ell + 1, d):
            prod *= c(j)
        thetas.append((a * a + ell * b * (b - a)) * prod)
    thetas.append(Fraction(a * a + (d - 1) * b * (b - a) - N))
    return Fraction(1, 2) * (N - 1 - Fraction(1, N) * sum(thetas))


# ---------------------------------------------------------------------------
# Rothe diagrams, shapes, and flags


def rothe_diagram(w) -> frozenset[tuple[int, int]]:
    """Cells (i, j), 1-indexed, with w(i) > j and w^-1(j) > i."""
    w = check_permutation(w)
    pos = inverse(w)
    n = len(w)
    return frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if w[i - 1] > j and pos[j - 1] > i
    )


@dataclass(frozen=True)
class RotheData:
    diagram: frozenset[tuple[int, int]]
    lambda_w: tuple[int, ...]
    mu_w: tuple[int, ...]
    flag_w: tuple[int, ...]


def rothe(w) -> RotheData:
    """Diagram, shape, bounding shape, and row flag of a vexillary
    permutation.  Raises NotVexillaryError otherwise: the flag rule is only
    meaningful in the vexillary case."""
    w = check_permutation(w)
    cls = classify(w)
    if not cls.vexillary:
        raise NotVexillaryError(f"{w} contains the pattern 2143")
    diagram = rothe_diagram(w)
    lam = cls.shape
    row_max = {}
    for (i, j) in diagram:
        row_max[i] = max(row_max.get(i, 0), j)
    last = max(row_max, default=0)
    mu = []
    running = 0
    for i in range(last, 0, -1):
        running = max(running, row_max.get(i, 0))
        mu.append(running)
    mu = tuple(reversed(mu))

    def mu_at(r):
        return mu[r - 1] if 1 <= r <= len(mu) else 0

    flag = []
    for i in range(1, len(lam) + 1):
        diag = lam[i - 1] - i  # content of the rightmost cell of row i
        r = max(1, 1 - diag)
        best = None
        while r + diag <= mu_at(r):
            best = r
            r += 1
        if best is None:
            raise NotVexillaryError(f"flag rule failed for {w}")
        flag.append(best)
    return RotheData(diagram, lam, mu, tuple(flag))


# ---------------------------------------------------------------------------
# FK polynomials


@lru_cache(maxsize=None)
def _hecke_weight_table(n: int, L: int):
    """Map each permutation reachable by length-L words to the sum of
    prod (x + letter) over those words."""
    if L == 0:
        return {identity(n): IntPolynomial.one()}
    prev = _hecke_weight_table(n, L - 1)
    out: dict[tuple[int, ...], IntPolynomial] = {}
    for u, pol in prev.items():
        for s in range(1, n):
            v = hecke_product(u, s)
            term = pol * IntPolynomial.x_plus(s)
            if v in out:
                out[v] = out[v] + term
            else:
                out[v] = term
    return out


def _fk_words(w, L: int) -> IntPolynomial:
    n = len(w)
    _check_capacity(factorial(n), "0-Hecke weight table")
    table = _hecke_weight_table(n, L)
    return table.get(tuple(w), IntPolynomial.zero())


def _fk_tableaux_value(lam, flag, L, x) -> int:
    shifted = tuple(b + x for b in flag)
    counts = count_ssyt_by_total(lam, shifted, L)
    return sum(
        counts.get(j, 0) * factorial(j) * stirling2(L, j)
        for j in range(sum(lam), L + 1)
    )


def _fk_tableaux(w, L: int) -> IntPolynomial:
    data = rothe(w)
    if sum(data.lambda_w) > L:
        return IntPolynomial.zero()
    points = [(x, _fk_tableaux_value(data.lambda_w, data.flag_w, L, x)) for x in range(1, L + 2)]
    return interpolate_integer_polynomial(points)


def fk_polynomial(w, L: int, via: str = "words") -> IntPolynomial:
    """Sum of prod (x + i_k) over all length-L 0-Hecke words for w.

    via='words' runs a weight-propagating product over the 0-Hecke monoid;
    via='tableaux' (vexillary w only) assembles the polynomial from flagged
    set-valued tableau counts and Stirling numbers; via='both' computes both
    and insists they agree.
    """
    w = check_permutation(w)
    if L < 0:
        raise RangeError("L must be nonnegative")
    if via == "words":
        return _fk_words(w, L)
    if via == "tableaux":
        return _fk_tableaux(w, L)
    if via == "both":
        words = _fk_words(w, L)
        tab = _fk_tableaux(w, L)
        if words != tab:
            raise AssertionError(
                f"word and tableau routes disagree for {w}, L={L}: {words} vs {tab}"
            )
        return words
    raise MalformedInputError(f"unknown route {via!r}")


@dataclass(frozen=True)
class FkConjectureReport:
    d: int
    a: int
    b: int
    ell: int
    divides: bool
    quotient: tuple[IntPolynomial, int] | None
    quotient_matches: bool
    ssyt_ratio_ok: bool

    @property
    def consistent(self) -> bool:
        return self.divides and self.quotient_matches and self.ssyt_ratio_ok


def conjecture_fk_check(d: int, a: int, b: int) -> FkConjectureReport:
    """Test, for the dominant permutation of staircase-times-rectangle shape,
    whether the one-letter-longer word polynomial is a multiple of the
    reduced-word polynomial with the predicted linear quotient, and whether
    the companion flagged-tableau ratio holds at x = 1..4."""
    from .core import poly_divides

    lam = rect_staircase(d, a, b)
    w = dominant_of_shape(lam)
    ell = sum(lam)
    fk_l = fk_polynomial(w, ell)
    fk_l1 = fk_polynomial(w, ell + 1)
    division = poly_divides(fk_l, fk_l1)
    divides = division is not None
    quotient_matches = False
    if divides:
        num, den = division
        binom = comb(ell + 1, 2)
        expected = [Fraction(binom), Fraction(binom * 4, d * (a + b))]
        got = [Fraction(num.coefficient(k), den) for k in range(max(num.degree + 1, 2))]
        quotient_matches = got == expected and num.degree <= 1
    rows = len(lam)
    ssyt_ok = True
    for x in range(1, 5):
        flag = tuple(i + x for i in range(1, rows + 1))
        counts = count_ssyt_by_total(lam, flag, ell + 1)
        lo, hi = counts.get(ell, 0), counts.get(ell + 1, 0)
        if lo == 0 or Fraction(hi, lo) != Fraction(2 * ell * x, d * (a + b)):
            ssyt_ok = False
            break
    return FkConjectureReport(d, a, b, ell, divides, division, quotient_matches, ssyt_ok)
