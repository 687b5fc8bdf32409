"""Finite posets and their down-degree statistics.

Elements are always the dense integers 0..n-1; builders attach human-readable
labels as metadata only.  A poset is immutable once validated, and every
statistic below is a pure function, so shared posets are safe to use from
multiple threads.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .errors import (
    CapacityError,
    CycleError,
    EmptyPosetError,
    MalformedInputError,
    NotCoverError,
    NotReducedError,
    SizeError,
)

__all__ = [
    "FinitePoset",
    "PosetStats",
    "capacity",
    "validate",
    "expectation_X",
    "expectation_Y",
    "expectation_Xm",
    "expectation_under_multichain",
    "multichain_counts",
    "is_CDE",
    "is_mCDE_upto",
    "chain",
    "antichain",
    "boolean",
    "product",
    "disjoint_union",
    "ordinal_sum",
    "dual",
    "pabcd",
    "tamari",
    "order_ideals",
    "order_ideal_lattice",
    "toggle_symmetry_check",
    "self_dual_regular_check",
    "linear_extension_count",
    "is_forest",
    "forest_merge_ratio",
    "quotient_cover",
    "stats",
    "is_isomorphic",
    "canonical_key",
    "load_poset",
    "dump_poset",
]

DEFAULT_CAPACITY = 2_000_000

#: Overrides the capacity bound when not None (tests monkeypatch this).
CAPACITY_OVERRIDE: int | None = None


def capacity() -> int:
    """Current element/ideal capacity bound.

    Precedence: CAPACITY_OVERRIDE, then the CDE_CAPACITY environment
    variable, then the built-in default of 2e6.
    """
    if CAPACITY_OVERRIDE is not None:
        return CAPACITY_OVERRIDE
    env = os.environ.get("CDE_CAPACITY")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise MalformedInputError(f"CDE_CAPACITY={env!r} is not an integer") from exc
    return DEFAULT_CAPACITY


def _check_capacity(count: int, what: str):
    if count > capacity():
        raise CapacityError(f"{what} needs {count} > capacity {capacity()}")


@dataclass(frozen=True)
class FinitePoset:
    """A finite poset given by its transitively reduced cover relation.

    ``covers`` holds ordered pairs (a, b) meaning a is covered by b.
    """

    n: int
    covers: frozenset[tuple[int, int]]
    labels: tuple[str, ...] | None = None

    # lazily built adjacency caches, not part of equality/hash
    _up: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "covers", frozenset(self.covers))

    def _adj(self):
        cache = object.__getattribute__(self, "_up")
        if cache is None:
            up = [[] for _ in range(self.n)]
            down = [[] for _ in range(self.n)]
            for a, b in sorted(self.covers):
                up[a].append(b)
                down[b].append(a)
            cache = {"up": up, "down": down}
            object.__setattr__(self, "_up", cache)
        return cache

    @property
    def upper_covers(self) -> list[list[int]]:
        return self._adj()["up"]

    @property
    def lower_covers(self) -> list[list[int]]:
        return self._adj()["down"]

    def down_degree(self, x: int) -> int:
        return len(self.lower_covers[x])

    def down_degrees(self) -> list[int]:
        return [len(d) for d in self.lower_covers]

    def label(self, x: int) -> str:
        if self.labels is not None:
            return self.labels[x]
        return str(x)

    def topological_order(self) -> list[int]:
        indeg = [len(d) for d in self.lower_covers]
        queue = [x for x in range(self.n) if indeg[x] == 0]
        order = []
        while queue:
            x = queue.pop()
            order.append(x)
            for y in self.upper_covers[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    queue.append(y)
        if len(order) != self.n:
            raise CycleError("cover digraph contains a directed cycle")
        return order

    def order_relation(self) -> list[int]:
        """Reflexive order relation as bitmasks: bit z of entry y set iff z <= y."""
        below = [1 << x for x in range(self.n)]
        for x in self.topological_order():
            mask = below[x]
            for z in self.lower_covers[x]:
                mask |= below[z]
            below[x] = mask
        return below

    def leq(self) -> list[set[int]]:
        """Reflexive order relation as sets: entry y holds {z : z <= y}."""
        masks = self.order_relation()
        out = []
        for y in range(self.n):
            m = masks[y]
            out.append({z for z in range(self.n) if (m >> z) & 1})
        return out


def validate(p: FinitePoset) -> None:
    """Check the FinitePoset invariants.

    Raises CycleError when the cover digraph has a cycle and NotReducedError
    (naming the offending pair) when some cover is implied by two others.
    """
    if p.n < 0:
        raise SizeError("element count must be nonnegative")
    for a, b in p.covers:
        if not (0 <= a < p.n and 0 <= b < p.n):
            raise MalformedInputError(f"cover {(a, b)} out of range")
        if a == b:
            raise CycleError(f"self-cover at {a}")
    order = p.topological_order()  # raises CycleError
    # Fast path: if every cover climbs exactly one level of the longest-path
    # ranking, no cover can be implied by a longer path.
    lp = [0] * p.n
    for x in order:
        for z in p.lower_covers[x]:
            lp[x] = max(lp[x], lp[z] + 1)
    if all(lp[b] == lp[a] + 1 for a, b in p.covers):
        return
    _check_capacity(p.n * p.n // 64 + p.n, "transitive reduction check")
    strict_below = [0] * p.n
    for x in order:
        mask = 0
        for z in p.lower_covers[x]:
            mask |= strict_below[z] | (1 << z)
        strict_below[x] = mask
    for a, b in sorted(p.covers):
        # implied iff some other lower cover of b lies strictly above a
        for z in p.lower_covers[b]:
            if z != a and (strict_below[z] >> a) & 1:
                raise NotReducedError((a, b))


def _validated(n, covers, labels=None) -> FinitePoset:
    p = FinitePoset(n, frozenset(covers), tuple(labels) if labels is not None else None)
    validate(p)
    return p


# ---------------------------------------------------------------------------
# statistics


def _require_nonempty(p: FinitePoset):
    if p.n == 0:
        raise EmptyPosetError("statistic undefined on the empty poset")


def expectation_X(p: FinitePoset) -> Fraction:
    """Edge density: covers / elements (expected down-degree, uniform)."""
    _require_nonempty(p)
    return Fraction(len(p.covers), p.n)


def _chain_counts(p: FinitePoset):
    """(up, down): saturated chain counts from the minimal elements up to x,
    and from x down from the maximal elements."""
    order = p.topological_order()
    up = [0] * p.n
    down = [0] * p.n
    for x in order:
        lows = p.lower_covers[x]
        up[x] = sum(up[z] for z in lows) if lows else 1
    for x in reversed(order):
        highs = p.upper_covers[x]
        down[x] = sum(down[z] for z in highs) if highs else 1
    return up, down


def maximal_chain_count(p: FinitePoset) -> int:
    _require_nonempty(p)
    up, _ = _chain_counts(p)
    return sum(up[x] for x in range(p.n) if not p.upper_covers[x])


def expectation_Y(p: FinitePoset) -> Fraction:
    """Expected down-degree when each element is weighted by the number of
    maximal chains through it."""
    _require_nonempty(p)
    up, down = _chain_counts(p)
    through = [up[x] * down[x] for x in range(p.n)]
    num = sum(t * p.down_degree(x) for x, t in enumerate(through))
    den = sum(through)
    return Fraction(num, den)


def multichain_counts(p: FinitePoset, m: int) -> list[int]:
    """For each element, the number of m-element multichains containing it.

    A multichain p_1 <= ... <= p_m through e splits into a prefix strictly
    below e, a nonempty block of copies of e, and a suffix strictly above, so
    the count is assembled from per-length counts of multichains confined
    below and above e.
    """
    _require_nonempty(p)
    if m < 1:
        raise SizeError("m must be a positive integer")
    n = p.n
    leq = p.leq()
    geq = [set() for _ in range(n)]
    for y in range(n):
        for z in leq[y]:
            geq[z].add(y)
    # ends[t][y]: weakly increasing length-t sequences ending at y
    ends = [[1] * n]
    starts = [[1] * n]
    for _ in range(m - 1):
        prev = ends[-1]
        ends.append([sum(prev[z] for z in leq[y]) for y in range(n)])
        prev = starts[-1]
        starts.append([sum(prev[z] for z in geq[y]) for y in range(n)])
    # D[i][e]: length-i multichains with all elements < e (i >= 1)
    D = [[1] * n]
    U = [[1] * n]
    for t in range(1, m):
        ends_t = ends[t - 1]
        starts_t = starts[t - 1]
        D.append([sum(ends_t[y] for y in leq[e] if y != e) for e in range(n)])
        U.append([sum(starts_t[y] for y in geq[e] if y != e) for e in range(n)])
    counts = []
    for e in range(n):
        total = 0
        for i in range(m):
            for j in range(m - i):
                total += D[i][e] * U[j][e]
        counts.append(total)
    return counts


def expectation_under_multichain(p: FinitePoset, m: int, values) -> Fraction:
    """Expectation of an arbitrary value vector under the distribution that
    weights each element by its m-element multichain count."""
    counts = multichain_counts(p, m)
    num = sum(Fraction(v) * c for v, c in zip(values, counts))
    return num / sum(counts)


def expectation_Xm(p: FinitePoset, m: int) -> Fraction:
    """Expected down-degree under the m-element multichain distribution."""
    return expectation_under_multichain(p, m, p.down_degrees())


def is_CDE(p: FinitePoset) -> bool:
    return expectation_X(p) == expectation_Y(p)


def is_mCDE_upto(p: FinitePoset, M: int) -> bool:
    """Bounded certificate: the multichain expectations agree for m = 1..M.

    This is a necessary condition for the (infinite) property that the
    expectation is constant for every m >= 1; it never certifies more.
    """
    base = expectation_X(p)
    return all(expectation_Xm(p, m) == base for m in range(2, M + 1))


# ---------------------------------------------------------------------------
# builders


def chain(a: int) -> FinitePoset:
    if a < 1:
        raise SizeError("chain needs a >= 1 element")
    return _validated(a, {(i, i + 1) for i in range(a - 1)})


def antichain(a: int) -> FinitePoset:
    if a < 1:
        raise SizeError("antichain needs a >= 1 element")
    return _validated(a, set())


def boolean(n: int) -> FinitePoset:
    """Lattice of subsets of an n-set ordered by inclusion."""
    if n < 0:
        raise SizeError("boolean needs n >= 0")
    _check_capacity(1 << n, "boolean lattice")
    covers = set()
    for s in range(1 << n):
        for i in range(n):
            if not (s >> i) & 1:
                covers.add((s, s | (1 << i)))
    labels = [format(s, f"0{max(n,1)}b")[::-1] for s in range(1 << n)]
    return _validated(1 << n, covers, labels)


def product(p: FinitePoset, q: FinitePoset) -> FinitePoset:
    """Cartesian product ordered componentwise."""
    _check_capacity(p.n * q.n, "poset product")
    covers = set()
    for a, b in p.covers:
        for y in range(q.n):
            covers.add((a * q.n + y, b * q.n + y))
    for a, b in q.covers:
        for x in range(p.n):
            covers.add((x * q.n + a, x * q.n + b))
    labels = [f"({p.label(x)},{q.label(y)})" for x in range(p.n) for y in range(q.n)]
    return _validated(p.n * q.n, covers, labels)


def disjoint_union(p: FinitePoset, q: FinitePoset) -> FinitePoset:
    covers = set(p.covers) | {(a + p.n, b + p.n) for a, b in q.covers}
    labels = [p.label(x) for x in range(p.n)] + [q.label(y) for y in range(q.n)]
    return _validated(p.n + q.n, covers, labels)


def ordinal_sum(p: FinitePoset, q: FinitePoset) -> FinitePoset:
    """Everything in p below everything in q."""
    covers = set(p.covers) | {(a + p.n, b + p.n) for a, b in q.covers}
    p_max = [x for x in range(p.n) if not p.upper_covers[x]]
    q_min = [y for y in range(q.n) if not q.lower_covers[y]]
    covers |= {(x, y + p.n) for x in p_max for y in q_min}
    labels = [p.label(x) for x in range(p.n)] + [q.label(y) for y in range(q.n)]
    return _validated(p.n + q.n, covers, labels)


def dual(p: FinitePoset) -> FinitePoset:
    return _validated(p.n, {(b, a) for a, b in p.covers}, p.labels)


def pabcd(a: int, b: int, c: int, d: int) -> FinitePoset:
    """Chain of length a, two parallel chains of lengths b and c, then a
    chain of length d on top."""
    if min(a, b, c, d) < 1:
        raise SizeError("pabcd needs four positive integers")
    n = a + b + c + d
    covers = set()
    w = list(range(a))
    x = list(range(a, a + b))
    y = list(range(a + b, a + b + c))
    z = list(range(a + b + c, n))
    for seq in (w, x, y, z):
        covers |= {(seq[i], seq[i + 1]) for i in range(len(seq) - 1)}
    covers |= {(w[-1], x[0]), (w[-1], y[0]), (x[-1], z[0]), (y[-1], z[0])}
    labels = (
        [f"w{i+1}" for i in range(a)]
        + [f"x{i+1}" for i in range(b)]
        + [f"y{i+1}" for i in range(c)]
        + [f"z{i+1}" for i in range(d)]
    )
    return _validated(n, covers, labels)


def _triangulations(n: int) -> list[tuple[tuple[int, int], ...]]:
    diagonals = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 2, n + 1)
        if not (i == 1 and j == n)
    ]

    def crosses(d1, d2):
        i, j = d1
        k, l = d2
        return (i < k < j < l) or (k < i < l < j)

    out = []

    def backtrack(start, acc):
        if len(acc) == n - 3:
            out.append(tuple(acc))
            _check_capacity(len(out), "tamari lattice")
            return
        for t in range(start, len(diagonals)):
            cand = diagonals[t]
            if all(not crosses(cand, d) for d in acc):
                acc.append(cand)
                backtrack(t + 1, acc)
                acc.pop()

    backtrack(0, [])
    return out


def tamari(n: int) -> FinitePoset:
    """Triangulations of a convex n-gon ordered by diagonal flips.

    A flip inside a quadrangle with vertices i < j < k < l exchanges the
    diagonal {i,k} for {j,l}; that direction is the covering relation.
    """
    if n < 3:
        raise SizeError("tamari needs a polygon with n >= 3 vertices")
    tris = _triangulations(n)
    index = {t: i for i, t in enumerate(tris)}
    boundary = {(i, i + 1) for i in range(1, n)} | {(1, n)}
    covers = set()
    for t in tris:
        edges = boundary | set(t)
        for diag in t:
            a, c = diag
            inner = [
                b
                for b in range(a + 1, c)
                if (min(a, b), max(a, b)) in edges and (min(b, c), max(b, c)) in edges
            ]
            outer = [
                b
                for b in list(range(1, a)) + list(range(c + 1, n + 1))
                if (min(a, b), max(a, b)) in edges and (min(b, c), max(b, c)) in edges
            ]
            if len(inner) != 1 or len(outer) != 1:
                continue
            quad = sorted([a, c, inner[0], outer[0]])
            p_, q_, r_, s_ = quad
            if diag == (p_, r_):
                flipped = tuple(sorted(set(t) - {diag} | {(q_, s_)}))
                covers.add((index[t], index[flipped]))
    labels = ["{" + ",".join(f"{i}-{j}" for i, j in t) + "}" for t in tris]
    return _validated(len(tris), covers, labels)


def order_ideals(p: FinitePoset) -> list[frozenset[int]]:
    """All order ideals (down-closed subsets), sorted for determinism."""
    ideals = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for ideal in frontier:
            for e in range(p.n):
                if e in ideal:
                    continue
                if all(z in ideal for z in p.lower_covers[e]):
                    bigger = ideal | {e}
                    if bigger not in ideals:
                        ideals.add(bigger)
                        nxt.append(bigger)
                        _check_capacity(len(ideals), "order ideal enumeration")
        frontier = nxt
    return sorted(ideals, key=lambda s: (len(s), sorted(s)))


def order_ideal_lattice(p: FinitePoset) -> FinitePoset:
    """Distributive lattice of order ideals, ordered by containment."""
    ideals = order_ideals(p)
    index = {ideal: i for i, ideal in enumerate(ideals)}
    covers = set()
    for ideal in ideals:
        for e in range(p.n):
            if e in ideal:
                continue
            if all(z in ideal for z in p.lower_covers[e]):
                covers.add((index[ideal], index[ideal | {e}]))
    labels = ["{" + ",".join(p.label(e) for e in sorted(ideal)) + "}" for ideal in ideals]
    return _validated(len(ideals), covers, labels)


def toggle_symmetry_check(base: FinitePoset, m: int) -> bool:
    """In the ideal lattice of `base`, check that under the m-multichain
    distribution each base element is as likely to be maximal in the ideal as
    minimal in its complement."""
    _require_nonempty(base)
    ideals = order_ideals(base)
    index = {ideal: i for i, ideal in enumerate(ideals)}
    covers = set()
    for ideal in ideals:
        for e in range(base.n):
            if e not in ideal and all(z in ideal for z in base.lower_covers[e]):
                covers.add((index[ideal], index[ideal | {e}]))
    J = _validated(len(ideals), covers)
    counts = multichain_counts(J, m)
    for e in range(base.n):
        ups = base.upper_covers[e]
        downs = base.lower_covers[e]
        in_max = 0
        in_min_complement = 0
        for i, ideal in enumerate(ideals):
            if e in ideal:
                if not any(f in ideal for f in ups):
                    in_max += counts[i]
            else:
                if all(z in ideal for z in downs):
                    in_min_complement += counts[i]
        if in_max != in_min_complement:
            return False
    return True


# ---------------------------------------------------------------------------
# isomorphism machinery


def _refine_colors(p: FinitePoset):
    colors = [0] * p.n
    sig = [(p.down_degree(x), len(p.upper_covers[x])) for x in range(p.n)]
    palette = {s: i for i, s in enumerate(sorted(set(sig)))}
    colors = [palette[s] for s in sig]
    while True:
        sig = [
            (
                colors[x],
                tuple(sorted(colors[z] for z in p.lower_covers[x])),
                tuple(sorted(colors[z] for z in p.upper_covers[x])),
            )
            for x in range(p.n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def is_isomorphic(p: FinitePoset, q: FinitePoset, node_budget: int = 200_000) -> bool:
    """Backtracking isomorphism test after iterative color refinement.

    Raises CapacityError when the search exceeds `node_budget` nodes.
    """
    if p.n != q.n or len(p.covers) != len(q.covers):
        return False
    cp, cq = _refine_colors(p), _refine_colors(q)
    if sorted(cp) != sorted(cq):
        return False
    by_color_q = {}
    for y, c in enumerate(cq):
        by_color_q.setdefault(c, []).append(y)
    order = sorted(range(p.n), key=lambda x: (len(by_color_q[cp[x]]), cp[x], x))
    q_lower = [set(s) for s in q.lower_covers]
    budget = [node_budget]
    mapping = {}
    used = set()

    def extend(k: int) -> bool:
        if k == p.n:
            return True
        budget[0] -= 1
        if budget[0] < 0:
            raise CapacityError("isomorphism search exceeded its node budget")
        x = order[k]
        for y in by_color_q[cp[x]]:
            if y in used:
                continue
            ok = True
            for z in p.lower_covers[x]:
                if z in mapping and mapping[z] not in q_lower[y]:
                    ok = False
                    break
            if ok:
                for z in p.upper_covers[x]:
                    if z in mapping and y not in q_lower[mapping[z]]:
                        ok = False
                        break
            if ok:
                mapping[x] = y
                used.add(y)
                if extend(k + 1):
                    return True
                used.remove(y)
                del mapping[x]
        return False

    return extend(0)


def canonical_key(p: FinitePoset) -> tuple:
    """Canonical form for small posets (n <= 7): the lexicographically least
    cover list over all relabelings, pruned by refinement colors."""
    if p.n > 7:
        raise CapacityError("canonical_key is meant for tiny posets")
    best = None
    for perm in permutations(range(p.n)):
        relabeled = tuple(sorted((perm[a], perm[b]) for a, b in p.covers))
        if best is None or relabeled < best:
            best = relabeled
    return (p.n, best)


def self_dual_regular_check(p: FinitePoset) -> Fraction | None:
    """If p is self-dual and its Hasse diagram is regular of valence D,
    return D/2 (which is then the down-degree expectation under any of the
    distributions in play); otherwise return None."""
    _require_nonempty(p)
    degrees = {p.down_degree(x) + len(p.upper_covers[x]) for x in range(p.n)}
    if len(degrees) != 1:
        return None
    if not is_isomorphic(p, dual(p)):
        return None
    return Fraction(degrees.pop(), 2)


# ---------------------------------------------------------------------------
# linear extensions and quotients


def is_forest(p: FinitePoset) -> bool:
    """Each element covered by at most one other element."""
    return all(len(p.upper_covers[x]) <= 1 for x in range(p.n))


def _down_set_sizes(p: FinitePoset) -> list[int]:
    masks = p.order_relation()
    return [bin(m).count("1") for m in masks]


def linear_extension_count(p: FinitePoset) -> int:
    """Number of linear extensions.

    Forest posets use the hook-length product formula; everything else falls
    back to a DP over order ideals (counting maximal chains of J(P)).
    """
    if p.n == 0:
        return 1
    if is_forest(p):
        sizes = _down_set_sizes(p)
        num = 1
        for k in range(2, p.n + 1):
            num *= k
        den = 1
        for s in sizes:
            den *= s
        assert num % den == 0
        return num // den
    return _linear_extensions_by_ideals(p)


def _linear_extensions_by_ideals(p: FinitePoset) -> int:
    lower = [frozenset(s) for s in map(set, p.lower_covers)]
    upper = [frozenset(s) for s in map(set, p.upper_covers)]
    memo = {frozenset(): 1}
    # breadth-first over ideals, one size layer at a time
    frontier = [frozenset()]
    while frontier:
        nxt = set()
        for ideal in frontier:
            for e in range(p.n):
                if e not in ideal and lower[e] <= ideal:
                    nxt.add(ideal | {e})
        _check_capacity(len(memo) + len(nxt), "linear extension DP")
        for ideal in nxt:
            memo[ideal] = sum(
                memo[ideal - {e}]
                for e in ideal
                if not (upper[e] & ideal)
            )
        frontier = nxt
    return memo[frozenset(range(p.n))]


def forest_merge_ratio(p: FinitePoset, i: int, j: int) -> Fraction:
    """For a forest poset and a cover i < j, the ratio of linear extension
    counts of the merged poset to the original, via telescoped hook products."""
    if not is_forest(p):
        raise MalformedInputError("forest_merge_ratio needs a forest poset")
    if (i, j) not in p.covers:
        raise NotCoverError(f"{(i, j)} is not a cover")
    masks = p.order_relation()
    sizes = [bin(m).count("1") for m in masks]
    above = [x for x in range(p.n) if x != i and (masks[x] >> i) & 1]
    alpha = [
        k
        for k in above
        if (k in p.upper_covers[i]) or len(p.lower_covers[k]) > 1
    ]
    beta = [
        k
        for k in above
        if not p.upper_covers[k] or any(x in alpha for x in p.upper_covers[k])
    ]
    out = Fraction(sizes[i], p.n)
    for k in beta:
        out *= sizes[k]
    for k in alpha:
        out /= sizes[k] - 1
    return out


def quotient_cover(p: FinitePoset, i: int, j: int) -> FinitePoset:
    """Merge the cover pair i < j into a single element and return the
    quotient poset on n-1 elements."""
    if (i, j) not in p.covers:
        raise NotCoverError(f"{(i, j)} is not a cover")
    masks = p.order_relation()

    def leq(x, y):
        return (masks[y] >> x) & 1

    keep = [x for x in range(p.n) if x != j]
    index = {x: k for k, x in enumerate(keep)}

    def new_leq(x, y):
        # x <= y in the quotient iff x <= y originally, or the chain may hop
        # through the merged pair: x <= j and i <= y.
        if leq(x, y):
            return True
        return leq(x, j) and leq(i, y)

    n = len(keep)
    rel = [[False] * n for _ in range(n)]
    for x in keep:
        for y in keep:
            if x != y and new_leq(x, y):
                rel[index[x]][index[y]] = True
    covers = set()
    for a in range(n):
        for b in range(n):
            if rel[a][b] and not any(rel[a][z] and rel[z][b] for z in range(n)):
                covers.add((a, b))
    labels = None
    if p.labels is not None:
        labels = [
            p.label(x) if x != i else f"{p.label(i)}={p.label(j)}" for x in keep
        ]
    return _validated(n, covers, labels)


# ---------------------------------------------------------------------------
# aggregate statistics and file format


@dataclass(frozen=True)
class PosetStats:
    EX: Fraction
    EY: Fraction
    edge_count: int
    maximal_chain_count: int
    rank: int | None

    @property
    def is_CDE(self) -> bool:
        return self.EX == self.EY


def stats(p: FinitePoset) -> PosetStats:
    _require_nonempty(p)
    order = p.topological_order()
    longest = [1] * p.n
    shortest = [1] * p.n
    for x in order:
        lows = p.lower_covers[x]
        if lows:
            longest[x] = 1 + max(longest[z] for z in lows)
            shortest[x] = 1 + min(shortest[z] for z in lows)
    maxima = [x for x in range(p.n) if not p.upper_covers[x]]
    top = max(longest[x] for x in maxima)
    bottom = min(shortest[x] for x in maxima)
    rank = top - 1 if top == bottom else None
    return PosetStats(
        EX=expectation_X(p),
        EY=expectation_Y(p),
        edge_count=len(p.covers),
        maximal_chain_count=maximal_chain_count(p),
        rank=rank,
    )


def load_poset(text: str) -> FinitePoset:
    """Parse the line-oriented poset format:

        n <count>
        cover <a> <b>
        label <a> <string>

    Blank lines and lines starting with '#' are ignored.  The result is
    validated before being returned.
    """
    n = None
    covers = set()
    labels = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind = parts[0]
        try:
            if kind == "n":
                n = int(parts[1])
            elif kind == "cover":
                covers.add((int(parts[1]), int(parts[2])))
            elif kind == "label":
                labels[int(parts[1])] = " ".join(parts[2:])
            else:
                raise MalformedInputError(f"line {lineno}: unknown directive {kind!r}")
        except (IndexError, ValueError) as exc:
            raise MalformedInputError(f"line {lineno}: cannot parse {raw!r}") from exc
    if n is None:
        raise MalformedInputError("missing 'n <count>' line")
    label_list = None
    if labels:
        label_list = [labels.get(x, str(x)) for x in range(n)]
    return _validated(n, covers, label_list)


def dump_poset(p: FinitePoset) -> str:
    lines = [f"n {p.n}"]
    lines += [f"cover {a} {b}" for a, b in sorted(p.covers)]
    if p.labels is not None:
        lines += [f"label {x} {p.labels[x]}" for x in range(p.n)]
    return "\n".join(lines) + "\n"
