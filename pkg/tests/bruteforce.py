"""Independent brute-force oracles for the test suite.

Everything here is deliberately naive and shares no code with the library:
these routines define the expected values that the fast implementations are
checked against.
"""

from fractions import Fraction
from itertools import combinations, product


def set_partitions_into(n: int, j: int) -> int:
    """Count partitions of {0..n-1} into exactly j nonempty blocks by
    enumerating block assignments in restricted-growth form."""

    def grow(k, used):
        if k == n:
            return 1 if used == j else 0
        total = used * grow(k + 1, used)  # join one of the existing blocks
        if used < j:
            total += grow(k + 1, used + 1)  # open a new block
        return total

    if n == 0:
        return 1 if j == 0 else 0
    return grow(1, 1)


def subpartitions(shape: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All partitions contained in `shape`, by direct recursive enumeration."""
    out = []

    def rec(i, cap, acc):
        out.append(tuple(acc))
        if i < len(shape):
            for part in range(1, min(shape[i], cap) + 1):
                acc.append(part)
                rec(i + 1, part, acc)
                acc.pop()

    rec(0, shape[0] if shape else 0, [])
    return sorted(set(out))


def standard_tableaux(shape: tuple[int, ...]) -> list[tuple[tuple[int, ...], ...]]:
    """All standard Young tableaux of `shape`, values 1..n, by placing values
    in increasing order into cells whose left and upper neighbours are full."""
    n = sum(shape)
    rows = [[0] * r for r in shape]
    fill = [0] * len(shape)  # cells filled so far per row
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
    return out


def standard_barely_set_valued(shape):
    """All standard barely set-valued tableaux of `shape` (values 1..n+1, one
    cell holding two of them), enumerated by increasing-value placement.

    A value may enter cell (i,j) only if the left and upper neighbours already
    hold something and the right and lower neighbours are still empty.
    """
    n = sum(shape)
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    out = []

    for double in cells:
        content = {c: [] for c in cells}

        def ok(i, j):
            if j > 0 and not content[(i, j - 1)]:
                return False
            if i > 0 and j < shape[i - 1] and not content[(i - 1, j)]:
                return False
            if j + 1 < shape[i] and content[(i, j + 1)]:
                return False
            if i + 1 < len(shape) and j < shape[i + 1] and content[(i + 1, j)]:
                return False
            return True

        def rec(v):
            if v > n + 1:
                out.append(
                    tuple(
                        tuple(tuple(content[(i, j)]) for j in range(shape[i]))
                        for i in range(len(shape))
                    )
                )
                return
            for (i, j) in cells:
                cap = 2 if (i, j) == double else 1
                if len(content[(i, j)]) >= cap:
                    continue
                if not ok(i, j):
                    continue
                content[(i, j)].append(v)
                rec(v + 1)
                content[(i, j)].pop()

        rec(1)
    # keep only fillings where the doubled cell really got two values
    return sorted(t for t in set(out) if any(len(c) == 2 for r in t for c in r))


def column_strict_tableaux(shape, bound):
    """All column-strict fillings with entries <= bound (row-constant bound)."""
    rows = [[0] * r for r in shape]
    out = []

    def rec(i, j):
        if i == len(shape):
            out.append(tuple(tuple(r) for r in rows))
            return
        ni, nj = (i, j + 1) if j + 1 < shape[i] else (i + 1, 0)
        lo = 1
        if j > 0:
            lo = max(lo, rows[i][j - 1])
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, bound + 1):
            rows[i][j] = v
            rec(ni, nj)

    rec(0, 0)
    return out


def set_valued_tableaux(shape, flag, total):
    """All column-strict set-valued tableaux flagged row-wise by `flag` with
    exactly `total` entries, as nested tuples of sorted value tuples."""
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    out = []
    content = {}

    def rec(k, used):
        if k == len(cells):
            if used == total:
                out.append(
                    tuple(
                        tuple(content[(i, j)] for j in range(shape[i]))
                        for i in range(len(shape))
                    )
                )
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, content[(i, j - 1)][-1])
        if i > 0:
            lo = max(lo, content[(i - 1, j)][-1] + 1)
        hi = flag[i]
        remaining_cells = len(cells) - k - 1
        max_size = total - used - remaining_cells
        if max_size < 1:
            return
        pool = list(range(lo, hi + 1))
        for size in range(1, min(max_size, len(pool)) + 1):
            for combo in combinations(pool, size):
                content[(i, j)] = combo
                rec(k + 1, used + size)
        content.pop((i, j), None)

    rec(0, 0)
    return sorted(out)


def multichains_through(leq, n, m):
    """For a poset given by its reflexive order relation `leq` (dict of sets),
    count for each element the m-element multichains containing it, by
    explicit enumeration of weakly increasing sequences."""
    counts = [0] * n
    seq = [0] * m

    def rec(k):
        if k == m:
            for e in set(seq):
                counts[e] += 1
            return
        if k == 0:
            choices = range(n)
        else:
            prev = seq[k - 1]
            choices = [y for y in range(n) if y in leq[prev]]
        for y in choices:
            seq[k] = y
            rec(k + 1)

    rec(0)
    return counts


def linear_extensions(covers, n) -> int:
    """Count linear extensions by brute-force permutation filtering for tiny
    posets (n <= 8)."""
    from itertools import permutations

    rel = {(a, b) for a, b in covers}
    # transitive closure
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (c, d) in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    count = 0
    for perm in permutations(range(n)):
        pos = {e: i for i, e in enumerate(perm)}
        if all(pos[a] < pos[b] for a, b in rel):
            count += 1
    return count


def hecke_words_bruteforce(w: tuple[int, ...], L: int) -> list[tuple[int, ...]]:
    """All words in {1..n-1}^L whose 0-Hecke product is w, by full enumeration."""
    n = len(w)

    def prod(word):
        cur = tuple(range(1, n + 1))
        for s in word:
            if cur[s - 1] < cur[s]:
                cur = cur[: s - 1] + (cur[s], cur[s - 1]) + cur[s + 1 :]
        return cur

    return [word for word in product(range(1, n), repeat=L) if prod(word) == w]


def expectation_of(values, weights) -> Fraction:
    num = sum(Fraction(v) * wt for v, wt in zip(values, weights))
    den = sum(Fraction(wt) for wt in weights)
    return num / den
