"""Partitions, Young-lattice intervals, and tableau enumeration.

Partitions are plain tuples of weakly decreasing positive integers; the empty
partition is ().  Cells and rows are 1-indexed in every public signature, so
an outside corner in row i, column j is written (i, j) exactly as on paper.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .core import IntPolynomial
from .errors import (
    MalformedInputError,
    NotBarelySetValuedError,
    NotCornerError,
    RangeError,
)
from .poset import FinitePoset, _check_capacity, _validated

__all__ = [
    "check_partition",
    "check_strict_partition",
    "transpose",
    "outside_corners",
    "removable_corners",
    "rect_staircase",
    "young_interval",
    "shifted_interval",
    "subpartitions",
    "strict_subpartitions",
    "rank_generating_function",
    "hook_lengths",
    "hook_f",
    "f_plus_one",
    "kerov_mean_zero_check",
    "default_flag",
    "count_ssyt",
    "count_ssyt_by_total",
    "enumerate_ssyt",
    "R_and_Rplus",
    "SetValuedTableau",
    "svt",
    "format_tableau",
    "uncrowd",
    "crowd",
    "enumerate_standard_tableaux",
    "enumerate_standard_barely",
    "standard_to_chain",
    "chain_to_standard",
    "barely_to_triple",
    "triple_to_barely",
    "barely_to_dual_triple",
    "dual_triple_to_barely",
    "flagged_to_partition",
    "partition_to_flagged",
    "flagged_barely_to_cover",
    "cover_to_flagged_barely",
    "hook_content_count",
]


# ---------------------------------------------------------------------------
# partitions


def check_partition(shape) -> tuple[int, ...]:
    shape = tuple(int(p) for p in shape)
    if any(p <= 0 for p in shape):
        raise MalformedInputError(f"partition {shape} has a nonpositive part")
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise MalformedInputError(f"partition {shape} is not weakly decreasing")
    return shape


def check_strict_partition(shape) -> tuple[int, ...]:
    shape = check_partition(shape)
    if any(shape[i] == shape[i + 1] for i in range(len(shape) - 1)):
        raise MalformedInputError(f"{shape} is not strictly decreasing")
    return shape


def transpose(shape) -> tuple[int, ...]:
    shape = tuple(shape)
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > i) for i in range(shape[0]))


def outside_corners(shape) -> list[tuple[int, int]]:
    """Addable cells (i, j), 1-indexed, listed top to bottom."""
    shape = tuple(shape)
    out = []
    for i in range(1, len(shape) + 1):
        if i == 1 or shape[i - 1] < shape[i - 2]:
            out.append((i, shape[i - 1] + 1))
    out.append((len(shape) + 1, 1))
    return out


def removable_corners(shape) -> list[tuple[int, int]]:
    """Removable cells (i, j), 1-indexed, listed top to bottom."""
    shape = tuple(shape)
    return [
        (i, shape[i - 1])
        for i in range(1, len(shape) + 1)
        if i == len(shape) or shape[i] < shape[i - 1]
    ]


def add_corner(shape, corner) -> tuple[int, ...]:
    i, j = corner
    shape = list(shape)
    if i == len(shape) + 1:
        shape.append(0)
    shape[i - 1] += 1
    assert shape[i - 1] == j
    return tuple(shape)


def remove_corner(shape, corner) -> tuple[int, ...]:
    i, j = corner
    shape = list(shape)
    assert shape[i - 1] == j
    shape[i - 1] -= 1
    if shape and shape[-1] == 0:
        shape.pop()
    return tuple(shape)


def rect_staircase(d: int, a: int, b: int) -> tuple[int, ...]:
    """Staircase with d-1 steps in which every box becomes an a x b block."""
    if d < 1 or a < 1 or b < 1:
        raise MalformedInputError("rect_staircase needs positive d, a, b")
    rows = []
    for block in range(d - 1):
        rows.extend([b * (d - 1 - block)] * a)
    return tuple(rows)


# ---------------------------------------------------------------------------
# Young-lattice intervals


def subpartitions(shape) -> list[tuple[int, ...]]:
    """All partitions contained in `shape`, sorted by (size, parts)."""
    shape = check_partition(shape) if shape else ()
    out = []

    def rec(i, cap, acc):
        out.append(tuple(acc))
        _check_capacity(len(out), "subpartition enumeration")
        if i < len(shape):
            for part in range(1, min(shape[i], cap) + 1):
                acc.append(part)
                rec(i + 1, part, acc)
                acc.pop()

    rec(0, shape[0] if shape else 0, [])
    return sorted(set(out), key=lambda m: (sum(m), m))


def _interval_from_elements(elements, shape_label) -> FinitePoset:
    index = {m: i for i, m in enumerate(elements)}
    covers = set()
    for m in elements:
        for corner in outside_corners(m):
            bigger = add_corner(m, corner)
            if bigger in index:
                covers.add((index[m], index[bigger]))
    labels = [shape_label(m) for m in elements]
    return _validated(len(elements), covers, labels)


def _label(shape) -> str:
    return ",".join(map(str, shape)) if shape else "0"


def young_interval(shape) -> FinitePoset:
    """The interval below `shape` in the containment order on partitions."""
    return _interval_from_elements(subpartitions(shape), _label)


def strict_subpartitions(shape) -> list[tuple[int, ...]]:
    shape = check_strict_partition(shape) if shape else ()
    out = []

    def rec(i, cap, acc):
        out.append(tuple(acc))
        _check_capacity(len(out), "strict subpartition enumeration")
        if i < len(shape):
            for part in range(1, min(shape[i], cap - 1 if acc else shape[i]) + 1):
                acc.append(part)
                rec(i + 1, part, acc)
                acc.pop()

    rec(0, 0, [])
    return sorted(set(out), key=lambda m: (sum(m), m))


def shifted_interval(shape) -> FinitePoset:
    """The interval below a strict partition in the order induced on strict
    partitions by diagram containment."""
    return _interval_from_elements(strict_subpartitions(shape), _label)


# ---------------------------------------------------------------------------
# counting by corner recurrences


@lru_cache(maxsize=None)
def rank_generating_function(shape) -> IntPolynomial:
    """Generating function sum_{mu inside shape} q^|mu|, via the outside
    corner recurrence; memoized on the subshapes it spawns."""
    shape = tuple(shape)
    if not shape:
        return IntPolynomial.one()
    total = IntPolynomial.zero()
    for (i, j) in outside_corners(shape):
        below = shape[i:]
        right = tuple(r - j for r in shape[: i - 1] if r > j)
        term = rank_generating_function(below) * rank_generating_function(right)
        exponent = i * (j - 1)
        shifted = (0,) * exponent + term.coeffs
        total = total + IntPolynomial(shifted)
    return total


def hook_lengths(shape) -> list[list[int]]:
    shape = tuple(shape)
    conj = transpose(shape)
    return [
        [shape[i] + conj[j] - i - j - 1 for j in range(shape[i])]
        for i in range(len(shape))
    ]


def hook_f(shape) -> int:
    """Number of standard Young tableaux, by the hook-length product."""
    shape = tuple(shape)
    n = sum(shape)
    den = 1
    for row in hook_lengths(shape):
        for h in row:
            den *= h
    assert factorial(n) % den == 0
    return factorial(n) // den


def f_plus_one(shape) -> int:
    """Number of standard barely set-valued tableaux, via the corner
    recurrence sum_x (i-1) f(shape + x)."""
    shape = tuple(shape)
    return sum((i - 1) * hook_f(add_corner(shape, (i, j))) for i, j in outside_corners(shape))


def kerov_mean_zero_check(shape) -> bool:
    """Check that corner contents j-i average to zero against the growth
    weights f(shape + x)."""
    shape = tuple(shape)
    total = sum((j - i) * hook_f(add_corner(shape, (i, j))) for i, j in outside_corners(shape))
    return total == 0


def default_flag(shape) -> tuple[int, ...]:
    """The flag (2, 3, 4, ...) truncated to the number of rows."""
    return tuple(range(2, len(tuple(shape)) + 2))


# ---------------------------------------------------------------------------
# flagged set-valued tableau counting and enumeration


def _checked_flag(shape, flag) -> tuple[int, ...]:
    rows = len(shape)
    flag = tuple(int(b) for b in flag)
    if len(flag) < rows:
        raise MalformedInputError(
            f"flag {flag} shorter than the {rows} rows of {shape}"
        )
    if any(b < 1 for b in flag):
        raise MalformedInputError(f"flag {flag} has a nonpositive bound")
    return flag[:rows]


def count_ssyt_by_total(shape, flag, max_total: int) -> dict[int, int]:
    """Counts of column-strict set-valued tableaux of `shape`, flagged
    row-wise by `flag`, keyed by total entry count up to `max_total`.

    One pass of a row-profile DP: the state after row i is the tuple of cell
    maxima in the columns row i+1 will sit under, plus the number of entries
    spent so far.
    """
    shape = check_partition(shape) if shape else ()
    rows = len(shape)
    if rows == 0:
        return {0: 1} if max_total >= 0 else {}
    flag = _checked_flag(shape, flag)
    ncells = sum(shape)
    if max_total < ncells:
        return {}
    states = {((0,) * shape[0], 0): 1}
    for i in range(rows):
        k = shape[i]
        keep = shape[i + 1] if i + 1 < rows else 0
        bound = flag[i]
        next_bound = flag[i + 1] if i + 1 < rows else None
        cells_after = sum(shape[i + 1 :])
        new_states = {}
        for (topmax, used), ways in states.items():
            row_states = {(0, 0, ()): ways}
            for j in range(k):
                tm = topmax[j]
                rem_cells_row = k - j - 1
                nxt = {}
                for (pm, e, kept), wy in row_states.items():
                    lo = max(pm, tm + 1, 1)
                    if lo > bound:
                        continue
                    max_here = max_total - used - e - rem_cells_row - cells_after
                    if max_here < 1:
                        continue
                    for v in range(lo, bound + 1):
                        if j < keep:
                            if v >= next_bound:
                                break  # the cell below could never exceed v
                            kept2 = kept + (v,)
                        else:
                            kept2 = kept
                        free = v - lo
                        for s in range(1, min(max_here, free + 1) + 1):
                            key = (v, e + s, kept2)
                            nxt[key] = nxt.get(key, 0) + wy * comb(free, s - 1)
                row_states = nxt
            for (pm, e, kept), wy in row_states.items():
                key = (kept, used + e)
                new_states[key] = new_states.get(key, 0) + wy
        states = new_states
    out = {}
    for (_, total), ways in states.items():
        out[total] = out.get(total, 0) + ways
    return out


def count_ssyt(shape, flag, total: int) -> int:
    """Number of column-strict set-valued tableaux of `shape` flagged by
    `flag` with exactly `total` entries."""
    return count_ssyt_by_total(shape, flag, total).get(total, 0)


def _lex_subsets(pool, max_size):
    """Nonempty subsets of the sorted pool in lexicographic order of their
    sorted tuples."""
    for idx in range(len(pool)):
        head = (pool[idx],)
        yield head
        if max_size > 1:
            for rest in _lex_subsets(pool[idx + 1 :], max_size - 1):
                yield head + rest


def enumerate_ssyt(shape, flag, total: int) -> list["SetValuedTableau"]:
    """All tableaux counted by count_ssyt, in row-major order with cells
    compared lexicographically as sorted entry tuples."""
    shape = check_partition(shape) if shape else ()
    if not shape:
        return [SetValuedTableau(())] if total == 0 else []
    flag = _checked_flag(shape, flag)
    cells = [(i, j) for i in range(len(shape)) for j in range(shape[i])]
    content: dict[tuple[int, int], tuple[int, ...]] = {}
    out = []

    def rec(k, used):
        if k == len(cells):
            if used == total:
                rows = tuple(
                    tuple(content[(i, j)] for j in range(shape[i]))
                    for i in range(len(shape))
                )
                out.append(SetValuedTableau(rows))
                _check_capacity(len(out), "set-valued tableau enumeration")
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, content[(i, j - 1)][-1])
        if i > 0 and j < shape[i - 1]:
            lo = max(lo, content[(i - 1, j)][-1] + 1)
        budget = total - used - (len(cells) - k - 1)
        if budget < 1:
            return
        pool = list(range(lo, flag[i] + 1))
        for subset in _lex_subsets(pool, budget):
            content[(i, j)] = subset
            rec(k + 1, used + len(subset))
        content.pop((i, j), None)

    rec(0, 0)
    return out


def R_and_Rplus(shape) -> tuple[int, int]:
    """Element and cover counts of the interval below `shape`, each computed
    two ways (corner recurrence and flagged tableau count) and reconciled."""
    shape = check_partition(shape) if shape else ()
    n = sum(shape)
    r_rec = rank_generating_function(shape)(1)
    rp_rec = 0
    for (i, j) in outside_corners(shape):
        below = shape[i:]
        right = tuple(r - j for r in shape[: i - 1] if r > j)
        rp_rec += (i - 1) * rank_generating_function(below)(1) * rank_generating_function(right)(1)
    flag = default_flag(shape)
    counts = count_ssyt_by_total(shape, flag, n + 1)
    r_cnt = counts.get(n, 0) if shape else 1
    rp_cnt = counts.get(n + 1, 0)
    assert r_rec == r_cnt, (shape, r_rec, r_cnt)
    assert rp_rec == rp_cnt, (shape, rp_rec, rp_cnt)
    return r_rec, rp_rec


# ---------------------------------------------------------------------------
# set-valued tableaux as values


@dataclass(frozen=True)
class SetValuedTableau:
    """Column-strict set-valued filling; each cell is a sorted tuple."""

    rows: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def total_entries(self) -> int:
        return sum(len(c) for r in self.rows for c in r)

    def cell(self, i: int, j: int) -> tuple[int, ...]:
        """1-indexed cell access."""
        return self.rows[i - 1][j - 1]

    def doubleton_cells(self) -> list[tuple[int, int]]:
        return [
            (i + 1, j + 1)
            for i, row in enumerate(self.rows)
            for j, c in enumerate(row)
            if len(c) == 2
        ]

    def is_barely(self) -> bool:
        sizes = sorted(len(c) for r in self.rows for c in r)
        return sizes.count(2) == 1 and sizes[-1] == 2

    def is_standard(self) -> bool:
        values = [v for r in self.rows for c in r for v in c]
        return sorted(values) == list(range(1, len(values) + 1))

    def check(self) -> "SetValuedTableau":
        shape = self.shape
        check_partition(shape)
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                if not c or tuple(sorted(set(c))) != c:
                    raise MalformedInputError(f"cell ({i+1},{j+1}) is not a sorted set")
                if j > 0 and row[j - 1][-1] > c[0]:
                    raise MalformedInputError(f"row {i+1} violates weak increase")
                if i > 0 and self.rows[i - 1][j][-1] >= c[0]:
                    raise MalformedInputError(f"column {j+1} violates strict increase")
        return self

    def __str__(self) -> str:
        return format_tableau(self)


def svt(rows) -> SetValuedTableau:
    """Build and validate a SetValuedTableau from nested iterables; plain
    integers are accepted as singleton cells."""
    norm = []
    for row in rows:
        cells = []
        for c in row:
            if isinstance(c, int):
                cells.append((c,))
            else:
                cells.append(tuple(sorted(c)))
        norm.append(tuple(cells))
    return SetValuedTableau(tuple(norm)).check()


def format_tableau(t) -> str:
    """Text grid: rows top to bottom, cells as {a,b} sets, tab separated."""
    if isinstance(t, SetValuedTableau):
        rows = t.rows
    else:
        rows = tuple(tuple((v,) if isinstance(v, int) else tuple(v) for v in row) for row in t)
    return "\n".join(
        "\t".join("{" + ",".join(map(str, c)) + "}" for c in row) for row in rows
    )


# ---------------------------------------------------------------------------
# uncrowding and crowding


def uncrowd(t: SetValuedTableau):
    """Move the larger entry of the unique two-entry cell out by row
    insertion into the rows strictly below it.

    Returns (ordinary tableau, new corner cell (i, j), row index of the
    doubleton), with cells 1-indexed.
    """
    doubles = t.doubleton_cells()
    if not t.is_barely() or len(doubles) != 1:
        raise NotBarelySetValuedError("expected exactly one two-entry cell")
    (i0, j0) = doubles[0]
    rows = [list(v[0] for v in row) for row in t.rows]
    carried = t.cell(i0, j0)[1]
    rows[i0 - 1][j0 - 1] = t.cell(i0, j0)[0]
    r = i0  # insert into row i0+1 first (0-indexed r)
    while True:
        if r == len(rows):
            rows.append([carried])
            corner = (r + 1, 1)
            break
        row = rows[r]
        bump = next((k for k, v in enumerate(row) if v > carried), None)
        if bump is None:
            row.append(carried)
            corner = (r + 1, len(row))
            break
        carried, row[bump] = row[bump], carried
        r += 1
    out = tuple(tuple(row) for row in rows)
    svt([[(v,) for v in row] for row in out])  # column-strictness assertion
    return out, corner, i0


def crowd(t_plus, corner, i0: int) -> SetValuedTableau:
    """Inverse of uncrowd: reverse row insertion out of `corner`, stopping in
    row i0 where the carried value joins a cell instead of bumping."""
    svt([[(v,) for v in row] for row in t_plus])  # input must be column-strict
    rows = [list(row) for row in t_plus]
    i, j = corner
    if not (1 <= i <= len(rows)) or j != len(rows[i - 1]):
        raise NotCornerError(f"{corner} is not the end of row {i}")
    if i < len(rows) and len(rows[i]) >= j:
        raise NotCornerError(f"{corner} is not an inner corner")
    if not (1 <= i0 <= i - 1):
        raise RangeError(f"target row {i0} not in 1..{i - 1}")
    carried = rows[i - 1].pop()
    if not rows[i - 1]:
        rows.pop()
    for r in range(i - 2, i0 - 2, -1):
        row = rows[r]
        bump = max(k for k, v in enumerate(row) if v < carried)
        if r == i0 - 1:
            cells = [(v,) for v in row]
            cells[bump] = (row[bump], carried)
            out = [[(v,) for v in rr] for rr in rows]
            out[r] = cells
            return svt(out)
        carried, row[bump] = row[bump], carried
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# standard enumeration and the chain bijections


def enumerate_standard_tableaux(shape) -> list[tuple[tuple[int, ...], ...]]:
    """All standard Young tableaux, sorted by their row tuples."""
    shape = check_partition(shape) if shape else ()
    n = sum(shape)
    rows = [[0] * r for r in shape]
    fill = [0] * len(shape)
    out = []

    def rec(v):
        if v > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(shape)):
            j = fill[i]
            if j >= shape[i]:
                continue
            if i > 0 and fill[i - 1] <= j:
                continue
            rows[i][j] = v
            fill[i] += 1
            rec(v + 1)
            fill[i] -= 1

    rec(1)
    return sorted(out)


def enumerate_standard_barely(shape) -> list[SetValuedTableau]:
    """All standard barely set-valued tableaux, sorted by their row-major
    cell tuples (the documented output order)."""
    shape = check_partition(shape) if shape else ()
    n = sum(shape)
    cells = [(i, j) for i in range(len(shape)) for j in range(shape[i])]
    found = set()

    for double in cells:
        content = {c: [] for c in cells}

        def eligible(i, j):
            if j > 0 and not content[(i, j - 1)]:
                return False
            if i > 0 and not content[(i - 1, j)]:
                return False
            if j + 1 < shape[i] and content[(i, j + 1)]:
                return False
            if i + 1 < len(shape) and j < shape[i + 1] and content[(i + 1, j)]:
                return False
            return True

        def rec(v):
            if v > n + 1:
                if len(content[double]) == 2:
                    found.add(
                        tuple(
                            tuple(tuple(content[(i, j)]) for j in range(shape[i]))
                            for i in range(len(shape))
                        )
                    )
                return
            for (i, j) in cells:
                cap = 2 if (i, j) == double else 1
                if len(content[(i, j)]) >= cap or not eligible(i, j):
                    continue
                content[(i, j)].append(v)
                rec(v + 1)
                content[(i, j)].pop()

        rec(1)
    return [SetValuedTableau(rows) for rows in sorted(found)]


def _shape_of_cells(cells) -> tuple[int, ...]:
    rows = {}
    for (i, j) in cells:
        rows[i] = max(rows.get(i, 0), j)
    shape = tuple(rows.get(i, 0) for i in range(1, max(rows, default=0) + 1))
    if sorted(shape, reverse=True) != list(shape) or len(cells) != sum(shape):
        raise MalformedInputError("cells do not form a partition diagram")
    return shape


def standard_to_chain(t) -> tuple[tuple[int, ...], ...]:
    """Standard tableau -> the saturated chain of shapes grown one value at
    a time."""
    cells = {t[i][j]: (i + 1, j + 1) for i in range(len(t)) for j in range(len(t[i]))}
    n = len(cells)
    chain = [()]
    grown = []
    for v in range(1, n + 1):
        grown.append(cells[v])
        chain.append(_shape_of_cells(grown))
    return tuple(chain)


def chain_to_standard(chain) -> tuple[tuple[int, ...], ...]:
    shape = chain[-1]
    rows = [[0] * r for r in shape]
    for v in range(1, len(chain)):
        prev, cur = chain[v - 1], chain[v]
        prev = tuple(prev) + (0,) * (len(cur) - len(prev))
        diffs = [i for i in range(len(cur)) if cur[i] != prev[i]]
        if len(diffs) != 1 or cur[diffs[0]] != prev[diffs[0]] + 1:
            raise MalformedInputError("not a saturated containment chain")
        rows[diffs[0]][cur[diffs[0]] - 1] = v
    return tuple(tuple(r) for r in rows)


def barely_to_triple(t: SetValuedTableau):
    """Standard barely set-valued tableau -> (chain, element, extra cover
    below it) in the interval under its shape."""
    if not (t.is_barely() and t.is_standard()):
        raise MalformedInputError("expected a standard barely set-valued tableau")
    (i0, j0) = t.doubleton_cells()[0]
    b0 = t.cell(i0, j0)[1]
    n = sum(t.shape)
    value_cell = {}
    for i, row in enumerate(t.rows):
        for j, c in enumerate(row):
            for v in c:
                value_cell[v] = (i + 1, j + 1)
    order = [v for v in range(1, n + 2) if v != b0]
    chain = [()]
    grown = []
    for v in order:
        grown.append(value_cell[v])
        chain.append(_shape_of_cells(grown))
    mu = chain[b0 - 1]
    x0 = value_cell[b0]
    nu = remove_corner(mu, (x0[0], mu[x0[0] - 1]))
    if mu[x0[0] - 1] != x0[1]:
        raise MalformedInputError("doubleton cell is not a corner of its step")
    return tuple(chain), mu, nu


def triple_to_barely(chain, mu, nu) -> SetValuedTableau:
    chain = tuple(tuple(s) for s in chain)
    mu, nu = tuple(mu), tuple(nu)
    r = chain.index(mu)
    b0 = r + 1
    t = chain_to_standard(chain)
    # relabel values: the i-th filled value is the i-th smallest of the
    # complement of b0 in 1..n+1
    rows = [
        [v if v < b0 else v + 1 for v in row]
        for row in t
    ]
    padded = tuple(nu) + (0,) * (len(mu) - len(nu))
    diffs = [i for i in range(len(mu)) if mu[i] != padded[i]]
    if len(diffs) != 1 or mu[diffs[0]] != padded[diffs[0]] + 1:
        raise MalformedInputError("nu is not covered by mu")
    i0, j0 = diffs[0] + 1, mu[diffs[0]]
    cells = [[(v,) for v in row] for row in rows]
    a0 = cells[i0 - 1][j0 - 1][0]
    cells[i0 - 1][j0 - 1] = tuple(sorted((a0, b0)))
    return svt(cells)


def barely_to_dual_triple(t: SetValuedTableau):
    """Dual variant: reading the chain downward from the full shape, keyed by
    the smaller entry of the doubleton."""
    if not (t.is_barely() and t.is_standard()):
        raise MalformedInputError("expected a standard barely set-valued tableau")
    (i0, j0) = t.doubleton_cells()[0]
    a0 = t.cell(i0, j0)[0]
    n = sum(t.shape)
    value_cell = {}
    for i, row in enumerate(t.rows):
        for j, c in enumerate(row):
            for v in c:
                value_cell[v] = (i + 1, j + 1)
    order = [v for v in range(1, n + 2) if v != a0]
    # chain[i] = shape occupied by the (n - i) smallest values of the order
    chain = []
    for i in range(n + 1):
        grown = [value_cell[v] for v in order[: n - i]]
        chain.append(_shape_of_cells(grown) if grown else ())
    mu = chain[n - (a0 - 1)]
    x0 = value_cell[a0]
    i_, j_ = x0
    expected_col = mu[i_ - 1] + 1 if i_ <= len(mu) else (1 if i_ == len(mu) + 1 else 0)
    if j_ != expected_col:
        raise MalformedInputError("doubleton cell is not addable to its step")
    nu = add_corner(mu, x0)
    return tuple(chain), mu, nu


def dual_triple_to_barely(chain, mu, nu) -> SetValuedTableau:
    chain = tuple(tuple(s) for s in chain)
    mu, nu = tuple(mu), tuple(nu)
    n = len(chain) - 1
    r = chain.index(mu)
    a0 = n - r + 1
    shape = chain[0]
    rows = [[0] * p for p in shape]
    # step i -> i+1 removes one cell, holding the (n - i)-th smallest value
    for i in range(n):
        big, small = chain[i], chain[i + 1]
        small = tuple(small) + (0,) * (len(big) - len(small))
        diffs = [k for k in range(len(big)) if big[k] != small[k]]
        if len(diffs) != 1 or big[diffs[0]] != small[diffs[0]] + 1:
            raise MalformedInputError("not a saturated chain downward")
        k = diffs[0]
        w = n - i  # rank among sorted complement values
        v = w if w < a0 else w + 1
        rows[k][big[k] - 1] = v
    padded = tuple(mu) + (0,) * (len(nu) - len(mu))
    diffs = [k for k in range(len(nu)) if nu[k] != padded[k]]
    if len(diffs) != 1 or nu[diffs[0]] != padded[diffs[0]] + 1:
        raise MalformedInputError("nu does not cover mu")
    i0, j0 = diffs[0] + 1, nu[diffs[0]]
    cells = [[(v,) for v in row] for row in rows]
    b0 = cells[i0 - 1][j0 - 1][0]
    cells[i0 - 1][j0 - 1] = tuple(sorted((a0, b0)))
    return svt(cells)


def flagged_to_partition(t) -> tuple[int, ...]:
    """Tableau flagged by (2,3,4,...) -> the subdiagram of cells holding
    their own row index."""
    cells = []
    for i, row in enumerate(t, start=1):
        for j, v in enumerate(row, start=1):
            val = v if isinstance(v, int) else v[0]
            if val == i:
                cells.append((i, j))
            elif val != i + 1:
                raise MalformedInputError(
                    f"cell ({i},{j}) holds {val}, expected {i} or {i+1}"
                )
    return _shape_of_cells(cells) if cells else ()


def partition_to_flagged(mu, shape) -> tuple[tuple[int, ...], ...]:
    mu = tuple(mu)
    rows = []
    for i, length in enumerate(tuple(shape), start=1):
        cut = mu[i - 1] if i - 1 < len(mu) else 0
        rows.append(tuple(i if j <= cut else i + 1 for j in range(1, length + 1)))
    return tuple(rows)


def flagged_barely_to_cover(t: SetValuedTableau):
    """Barely set-valued tableau flagged by (2,3,4,...) -> the cover
    (nu, mu) it encodes."""
    if not t.is_barely():
        raise NotBarelySetValuedError("expected exactly one two-entry cell")
    nu_cells = []
    x0 = None
    for i, row in enumerate(t.rows, start=1):
        for j, c in enumerate(row, start=1):
            if c == (i,):
                nu_cells.append((i, j))
            elif c == (i, i + 1):
                x0 = (i, j)
            elif c != (i + 1,):
                raise MalformedInputError(f"cell ({i},{j}) holds {c}")
    nu = _shape_of_cells(nu_cells) if nu_cells else ()
    mu = _shape_of_cells(nu_cells + [x0])
    return nu, mu


def cover_to_flagged_barely(nu, mu, shape) -> SetValuedTableau:
    nu, mu = tuple(nu), tuple(mu)
    padded = nu + (0,) * (len(mu) - len(nu))
    diffs = [k for k in range(len(mu)) if mu[k] != padded[k]]
    if len(diffs) != 1 or mu[diffs[0]] != padded[diffs[0]] + 1:
        raise MalformedInputError("nu is not covered by mu")
    x0 = (diffs[0] + 1, mu[diffs[0]])
    rows = []
    for i, length in enumerate(tuple(shape), start=1):
        cut = padded[i - 1] if i - 1 < len(padded) else 0
        row = []
        for j in range(1, length + 1):
            if (i, j) == x0:
                row.append((i, i + 1))
            elif j <= cut:
                row.append((i,))
            else:
                row.append((i + 1,))
        rows.append(tuple(row))
    return svt(rows)


# ---------------------------------------------------------------------------
# hook-content counting


def hook_content_count(shape, t: int) -> int:
    """Number of column-strict tableaux with entries at most t, by the
    hook-content product."""
    shape = check_partition(shape) if shape else ()
    out = Fraction(1)
    hooks = hook_lengths(shape)
    for i in range(len(shape)):
        for j in range(shape[i]):
            out *= Fraction(t + (j - i), hooks[i][j])
    assert out.denominator == 1
    return int(out)
