"""Batch verification campaigns over fixed parameter grids.

Each suite replays one cluster of claims: golden expectation values, poset
laws, recurrence/enumeration agreements, word-count identities, and the open
conjectures.  Conjecture checks can only come back `conjecture-consistent` or
`conjecture-violated`; the `pass` status is reserved for settled facts.
Grids live in suites_manifest.txt next to this module so reruns are
reproducible.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as iperm
from math import comb
from pathlib import Path

from . import permutations as perm
from . import poset as ps
from . import tableaux as tb
from .errors import CapacityError, MalformedInputError, UnknownSuiteError

__all__ = [
    "CheckReport",
    "run_suite",
    "run_all",
    "suite_ids",
    "search_mcde_product_counterexample",
    "all_posets_upto_iso",
    "build_poset",
    "format_reports",
]

_MANIFEST_PATH = Path(__file__).with_name("suites_manifest.txt")

_STATUSES = {
    "pass",
    "fail",
    "conjecture-consistent",
    "conjecture-violated",
    "skipped(capacity)",
}


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    instance: dict
    expected: str
    computed: str
    status: str
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise MalformedInputError(f"unknown status {self.status!r}")
        if self.status == "pass" and self.expected == "conjectural":
            raise MalformedInputError("a conjectural check can never 'pass'")
        if self.status.startswith("conjecture") and self.expected != "conjectural":
            raise MalformedInputError(
                "conjecture-* statuses are reserved for conjectural checks"
            )

    def to_json(self) -> str:
        return json.dumps(
            {
                "check_id": self.check_id,
                "instance": self.instance,
                "expected": self.expected,
                "computed": self.computed,
                "status": self.status,
                "elapsed": round(self.elapsed, 6),
            },
            sort_keys=True,
        )

    @staticmethod
    def from_json(line: str) -> "CheckReport":
        data = json.loads(line)
        return CheckReport(
            data["check_id"],
            data["instance"],
            data["expected"],
            data["computed"],
            data["status"],
            data["elapsed"],
        )


@dataclass
class _Check:
    """A single grid point: an instance record plus a deferred evaluation
    returning (expected, computed, ok)."""

    check_id: str
    instance: dict
    run: callable
    conjectural: bool = False


# ---------------------------------------------------------------------------
# small shared helpers


def _parse_perm(text: str) -> tuple[int, ...]:
    if "," in text or " " in text:
        parts = text.replace(",", " ").split()
    else:
        parts = list(text)
    return perm.check_permutation(int(v) for v in parts)


def _parse_shape(text: str) -> tuple[int, ...]:
    if not text or text == "0":
        return ()
    return tb.check_partition(int(v) for v in text.split(","))


def build_poset(spec: str) -> ps.FinitePoset:
    """Build a poset from a compact spec like 'tamari:6' or 'young:3,1,1'."""
    name, _, arg = spec.partition(":")
    args = [int(v) for v in arg.split(",")] if arg else []
    if name == "chain":
        return ps.chain(args[0])
    if name == "antichain":
        return ps.antichain(args[0])
    if name == "boolean":
        return ps.boolean(args[0])
    if name == "tamari":
        return ps.tamari(args[0])
    if name == "pabcd":
        return ps.pabcd(*args)
    if name == "grid":
        out = ps.chain(args[0])
        for a in args[1:]:
            out = ps.product(out, ps.chain(a))
        return out
    if name == "young":
        return tb.young_interval(tuple(args))
    if name == "shifted":
        return tb.shifted_interval(tuple(args))
    if name == "weak-order":
        return perm.weak_order_full(args[0])
    if name == "strong-bruhat":
        return perm.strong_bruhat(args[0])
    if name == "ordinal-sum-antichains":
        return ps.ordinal_sum(ps.antichain(args[0]), ps.antichain(args[1]))
    if name == "zigzag":
        n = args[0]
        covers = set()
        for i in range(1, n, 2):
            covers.add((i - 1, i))
            if i + 1 < n:
                covers.add((i + 1, i))
        return ps.FinitePoset(n, frozenset(covers))
    if name == "v":
        return ps.FinitePoset(3, frozenset({(0, 1), (0, 2)}))
    if name == "m3":
        return ps.FinitePoset(
            5, frozenset({(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)})
        )
    raise MalformedInputError(f"unknown poset spec {spec!r}")


def _frac(text: str) -> Fraction:
    if "/" in text:
        a, b = text.split("/")
        return Fraction(int(a), int(b))
    return Fraction(int(text))


def _partitions_upto(n: int) -> list[tuple[int, ...]]:
    out = [()]

    def rec(remaining, cap, acc):
        for part in range(1, min(remaining, cap) + 1):
            out.append(tuple(acc + [part]))
            rec(remaining - part, part, acc + [part])

    rec(n, n, [])
    return sorted(set(out), key=lambda m: (sum(m), m))


def all_posets_upto_iso(n: int) -> list[ps.FinitePoset]:
    """All posets with exactly n elements, one per isomorphism class.

    Built by repeatedly attaching a new maximal element on top of an order
    ideal, then deduplicating by canonical form (n <= 7 only).
    """
    layer = [ps.FinitePoset(1, frozenset())]
    for size in range(2, n + 1):
        seen = {}
        for p in layer:
            for ideal in ps.order_ideals(p):
                maxima = [
                    e for e in ideal if not any(u in ideal for u in p.upper_covers[e])
                ]
                covers = set(p.covers) | {(m, size - 1) for m in maxima}
                q = ps.FinitePoset(size, frozenset(covers))
                key = ps.canonical_key(q)
                if key not in seen:
                    seen[key] = q
        layer = [seen[k] for k in sorted(seen)]
    return layer


def search_mcde_product_counterexample(max_elems: int, m_max: int = 6):
    """Look for two posets, multichain-constant up to m_max, whose product is
    not.  Returns (p, q, m) for the first violation found, else None."""
    candidates = []
    for n in range(1, max_elems + 1):
        for p in all_posets_upto_iso(n):
            if ps.is_mCDE_upto(p, m_max):
                candidates.append(p)
    for i, p in enumerate(candidates):
        for q in candidates[i:]:
            prod = ps.product(p, q)
            base = ps.expectation_Xm(prod, 1)
            for m in range(2, m_max + 1):
                if ps.expectation_Xm(prod, m) != base:
                    return p, q, m
    return None


def _enumerate_multichain_expectation(p: ps.FinitePoset, m: int, values) -> Fraction:
    """Brute-force route: enumerate every weakly increasing m-sequence and
    weight each element by the number of sequences containing it."""
    leq_masks = p.order_relation()
    ups = [
        [y for y in range(p.n) if (leq_masks[y] >> x) & 1] for x in range(p.n)
    ]
    weights = [0] * p.n
    seq = []

    def rec(k):
        if k == m:
            for e in set(seq):
                weights[e] += 1
            return
        choices = range(p.n) if not seq else ups[seq[-1]]
        for y in choices:
            seq.append(y)
            rec(k + 1)
            seq.pop()

    rec(0)
    num = sum(Fraction(v) * wt for v, wt in zip(values, weights))
    return num / sum(weights)


def _rect_staircase_params(shape) -> list[tuple[int, int, int]]:
    """All (d, a, b) with d >= 2 whose staircase-of-rectangles equals shape."""
    shape = tuple(shape)
    total = sum(shape)
    out = []
    for d in range(2, total + 2):
        if comb(d, 2) == 0 or total % comb(d, 2):
            continue
        rest = total // comb(d, 2)
        for a in range(1, rest + 1):
            if rest % a:
                continue
            b = rest // a
            if tb.rect_staircase(d, a, b) == shape:
                out.append((d, a, b))
    return out


# ---------------------------------------------------------------------------
# suite definitions; each returns a list of _Check


def _young_EX(shape) -> Fraction:
    r, rp = tb.R_and_Rplus(shape)
    return Fraction(rp, r)


def _young_EY(shape) -> Fraction:
    return Fraction(tb.f_plus_one(shape), (sum(shape) + 1) * tb.hook_f(shape))


def _suite_thm_main_a(params):
    w = _parse_perm(params["w"])
    cls = perm.classify(w)

    def run():
        assert cls.vexillary
        lhs = perm.expectation_Y_words(w)
        rhs = _young_EY(cls.shape)
        return (str(rhs), str(lhs), lhs == rhs)

    return [_Check("thm-main-a", {"w": params["w"], "shape": _label(cls.shape)}, run)]


def _label(shape) -> str:
    return ",".join(map(str, shape)) if shape else "0"


def _suite_thm_main_b(params):
    w = _parse_perm(params["w"])
    cls = perm.classify(w)

    def run():
        assert cls.grassmannian or cls.inverse_grassmannian
        lhs = perm.expectation_X_complementary(w)
        rhs = _young_EX(cls.shape)
        return (str(rhs), str(lhs), lhs == rhs)

    return [_Check("thm-main-b", {"w": params["w"], "shape": _label(cls.shape)}, run)]


def _suite_thm_main_c(params):
    d, a, b = int(params["d"]), int(params["a"]), int(params["b"])
    lam = tb.rect_staircase(d, a, b)
    target = Fraction((d - 1) * a * b, a + b)
    instance = {"d": d, "a": a, "b": b, "shape": _label(lam)}

    def run():
        values = {}
        young = tb.young_interval(lam)
        values["EX[young]"] = ps.expectation_X(young)
        values["EY[young]"] = ps.expectation_Y(young)
        dual_young = ps.dual(young)
        values["EX[young*]"] = ps.expectation_X(dual_young)
        values["EY[young*]"] = ps.expectation_Y(dual_young)
        witnesses = {
            "dominant": perm.dominant_of_shape(lam),
            "grassmannian": perm.grassmannian_of_shape(lam),
            "inverse-grassmannian": perm.inverse_grassmannian_of_shape(lam),
        }
        for kind, w in witnesses.items():
            size = ps.linear_extension_count(perm.noninversion_poset(w))
            if size > 10**6:
                continue
            values[f"EX[{kind}]"] = perm.expectation_X_complementary(w)
            values[f"EY[{kind}]"] = perm.expectation_Y_words(w)
            values[f"EY[{kind}*]"] = perm.expectation_Y_words(perm.inverse(w))
        ok = all(v == target for v in values.values())
        computed = " ".join(f"{k}={v}" for k, v in sorted(values.items()))
        return (str(target), computed, ok)

    return [_Check("thm-main-c", instance, run)]


def _suite_prop_products(params):
    p = build_poset(params["p"])
    q = build_poset(params["q"])
    instance = {"p": params["p"], "q": params["q"]}

    def run():
        prod = ps.product(p, q)
        ex_ok = ps.expectation_X(prod) == ps.expectation_X(p) + ps.expectation_X(q)
        ey_ok = ps.expectation_Y(prod) == ps.expectation_Y(p) + ps.expectation_Y(q)
        cde_ok = True
        if ps.is_CDE(p) and ps.is_CDE(q):
            cde_ok = ps.is_CDE(prod)
        ok = ex_ok and ey_ok and cde_ok
        return (
            "EX and EY additive; CDE preserved",
            f"EX additive={ex_ok} EY additive={ey_ok} CDE preserved={cde_ok}",
            ok,
        )

    return [_Check("prop-products", instance, run)]


def _suite_prop_chain_products(params):
    sizes = [int(v) for v in params["chains"].split(",")]
    m = int(params["m"])
    seed = int(params["seed"])
    instance = {"chains": params["chains"], "m": m, "seed": seed}

    def run():
        rng = random.Random(seed)
        chain_values = [
            [Fraction(rng.randint(-4, 4)) for _ in range(a)] for a in sizes
        ]
        prod = ps.chain(sizes[0])
        for a in sizes[1:]:
            prod = ps.product(prod, ps.chain(a))
        # value of a product element is the sum of its coordinate values
        summed = []
        for label in range(prod.n):
            rest, coords = label, []
            for a in reversed(sizes[1:]):
                rest, c = divmod(rest, a)
                coords.append(c)
            coords.append(rest)
            coords.reverse()
            summed.append(sum(vals[c] for vals, c in zip(chain_values, coords)))
        rhs = sum(
            ps.expectation_under_multichain(ps.chain(a), m, vals)
            for a, vals in zip(sizes, chain_values)
        )
        lhs = ps.expectation_under_multichain(prod, m, summed)
        brute = _enumerate_multichain_expectation(prod, m, summed)
        ok = lhs == rhs == brute
        return (str(rhs), f"dp={lhs} brute={brute}", ok)

    return [_Check("prop-chain-products", instance, run)]


def _suite_prop_self_dual(params):
    spec, expect = params["builder"], params["expect"]
    instance = {"builder": spec}

    def run():
        p = build_poset(spec)
        got = ps.self_dual_regular_check(p)
        if expect == "none":
            return ("none", str(got), got is None)
        want = _frac(expect)
        ok = got == want
        if ok:
            ok = (
                ps.expectation_X(p) == want
                and ps.expectation_Y(p) == want
                and all(ps.expectation_Xm(p, m) == want for m in (2, 3))
            )
        return (expect, str(got), ok)

    return [_Check("prop-self-dual", instance, run)]


def _suite_cor_tamari(params):
    n = int(params["n"])
    want = Fraction(n - 3, 2)

    def run():
        t = ps.tamari(n)
        vals = [
            ps.expectation_X(t),
            ps.expectation_Y(t),
            ps.expectation_Xm(t, 2),
            ps.expectation_Xm(t, 3),
            ps.self_dual_regular_check(t),
        ]
        return (str(want), " ".join(map(str, vals)), all(v == want for v in vals))

    return [_Check("cor-tamari", {"n": n}, run)]


def _suite_prop_toggle(params):
    m = int(params["m"])
    if "all_n" in params:
        n = int(params["all_n"])
        checks = []
        for idx, base in enumerate(all_posets_upto_iso(n)):
            covers = sorted(base.covers)

            def run(base=base):
                ok = ps.toggle_symmetry_check(base, m)
                return ("toggle-symmetric", str(ok), ok)

            checks.append(
                _Check(
                    "prop-toggle",
                    {"n": n, "index": idx, "covers": str(covers), "m": m},
                    run,
                )
            )
        return checks
    spec = params["base"]

    def run():
        ok = ps.toggle_symmetry_check(build_poset(spec), m)
        return ("toggle-symmetric", str(ok), ok)

    return [_Check("prop-toggle", {"base": spec, "m": m}, run)]


def _suite_recurrences(params):
    kind = params["kind"]
    max_size = int(params["max_size"])
    shapes = [s for s in _partitions_upto(max_size) if s]
    checks = []
    for shape in shapes:
        instance = {"kind": kind, "shape": _label(shape)}
        if kind == "fplus":
            def run(shape=shape):
                rec = tb.f_plus_one(shape)
                enum = len(tb.enumerate_standard_barely(shape))
                return (str(enum), str(rec), rec == enum)
        elif kind == "rankgf":
            def run(shape=shape):
                by_size = {}
                for mu in tb.subpartitions(shape):
                    by_size[sum(mu)] = by_size.get(sum(mu), 0) + 1
                direct = tuple(by_size.get(k, 0) for k in range(max(by_size) + 1))
                rec = tb.rank_generating_function(shape).coeffs
                return (str(direct), str(rec), rec == direct)
        elif kind == "rplus":
            def run(shape=shape):
                r, rp = tb.R_and_Rplus(shape)  # asserts both routes agree
                p = tb.young_interval(shape)
                ok = p.n == r and len(p.covers) == rp
                return (f"({p.n},{len(p.covers)})", f"({r},{rp})", ok)
        elif kind == "kerov":
            def run(shape=shape):
                ok = tb.kerov_mean_zero_check(shape)
                return ("0", "0" if ok else "nonzero", ok)
        else:
            raise MalformedInputError(f"unknown recurrences kind {kind!r}")
        checks.append(_Check("recurrences", instance, run))
    return checks


def _suite_bijections(params):
    kind = params["kind"]
    checks = []
    if kind == "roundtrip":
        max_size = int(params["max_size"])
        for shape in _partitions_upto(max_size):
            if not shape:
                continue

            def run(shape=shape):
                count = 0
                for t in tb.enumerate_standard_barely(shape):
                    t_plus, corner, i0 = tb.uncrowd(t)
                    if tb.crowd(t_plus, corner, i0) != t:
                        return ("identity", f"broken at {t.rows}", False)
                    count += 1
                ok = count == tb.f_plus_one(shape)
                return (str(tb.f_plus_one(shape)), str(count), ok)

            checks.append(_Check("bijections", {"kind": kind, "shape": _label(shape)}, run))
    elif kind == "flagged-roundtrip":
        max_size = int(params["max_size"])
        for shape in _partitions_upto(max_size):
            if not shape:
                continue

            def run(shape=shape):
                flag = tb.default_flag(shape)
                listed = tb.enumerate_ssyt(shape, flag, sum(shape) + 1)
                for t in listed:
                    t_plus, corner, i0 = tb.uncrowd(t)
                    if tb.crowd(t_plus, corner, i0) != t:
                        return ("identity", f"broken at {t.rows}", False)
                return ("identity", f"{len(listed)} round trips", True)

            checks.append(_Check("bijections", {"kind": kind, "shape": _label(shape)}, run))
    elif kind == "chain-maps":
        shape = _parse_shape(params["shape"])

        def run():
            standard = tb.enumerate_standard_tableaux(shape)
            for t in standard:
                if tb.chain_to_standard(tb.standard_to_chain(t)) != t:
                    return ("identity", "standard chain map broke", False)
            barely = tb.enumerate_standard_barely(shape)
            triples = set()
            dual_triples = set()
            for t in barely:
                trip = tb.barely_to_triple(t)
                if tb.triple_to_barely(*trip) != t:
                    return ("identity", "triple map broke", False)
                triples.add(trip)
                dtrip = tb.barely_to_dual_triple(t)
                if tb.dual_triple_to_barely(*dtrip) != t:
                    return ("identity", "dual triple map broke", False)
                dual_triples.add(dtrip)
            interval = tb.young_interval(shape)
            flagged = tb.enumerate_ssyt(shape, tb.default_flag(shape), sum(shape))
            images = {tb.flagged_to_partition(t.rows) for t in flagged}
            barely_flagged = tb.enumerate_ssyt(shape, tb.default_flag(shape), sum(shape) + 1)
            covers = {tb.flagged_barely_to_cover(t) for t in barely_flagged}
            ok = (
                len(standard) == tb.hook_f(shape) == ps.stats(interval).maximal_chain_count
                and len(triples) == len(barely) == tb.f_plus_one(shape)
                and len(dual_triples) == len(barely)
                and len(images) == len(flagged) == interval.n
                and len(covers) == len(barely_flagged) == len(interval.covers)
            )
            return (
                "all five correspondences bijective",
                f"f={len(standard)} f+={len(barely)} R={len(flagged)} R+={len(barely_flagged)}",
                ok,
            )

        checks.append(_Check("bijections", {"kind": kind, "shape": params["shape"]}, run))
    elif kind == "fixtures":
        def run():
            t = tb.svt([[1, (2, 5), 6], [3, 7], [4]])
            chain_, mu, nu = tb.barely_to_triple(t)
            ok = (
                chain_ == ((), (1,), (2,), (2, 1), (2, 1, 1), (3, 1, 1), (3, 2, 1))
                and (mu, nu) == ((2, 1, 1), (1, 1, 1))
            )
            t_plus, corner, i0 = tb.uncrowd(
                tb.svt([[1, 1, 2, 2, 4], [2, 3, (3, 4), 4], [4, 5, 5, 7], [5, 6, 6], [6]])
            )
            ok = ok and corner == (5, 2) and i0 == 2
            ok = ok and tb.flagged_to_partition(((1, 2, 2), (2, 3), (4,))) == (1, 1)
            return ("worked examples reproduce", "ok" if ok else "mismatch", ok)

        checks.append(_Check("bijections", {"kind": kind}, run))
    else:
        raise MalformedInputError(f"unknown bijections kind {kind!r}")
    return checks


def _vexillary_in(n):
    out = []
    for w in iperm(range(1, n + 1)):
        cls = perm.classify(w)
        if cls.vexillary:
            out.append((w, cls))
    return out


def _suite_vexillary(params):
    if params.get("kind") == "grassmannian-iso":
        shape = _parse_shape(params["shape"])

        def run():
            w = perm.grassmannian_of_shape(shape)
            ok = ps.is_isomorphic(
                perm.weak_interval(w), ps.dual(tb.young_interval(shape))
            )
            wi = perm.inverse_grassmannian_of_shape(shape)
            ok = ok and ps.is_isomorphic(
                perm.weak_interval(wi), tb.young_interval(shape)
            )
            return ("interval isomorphic to shape interval", str(ok), ok)

        return [_Check("vexillary", {"kind": "grassmannian-iso", "shape": params["shape"]}, run)]

    n = int(params["n"])
    checks = []
    for w, cls in _vexillary_in(n):
        if perm.length(w) == 0:
            continue

        def run(w=w, cls=cls):
            red_ok = perm.count_reduced(w) == tb.hook_f(cls.shape)
            nearly_ok = perm.count_nearly_reduced(w) == tb.f_plus_one(cls.shape)
            ey_ok = perm.expectation_Y_words(w) == _young_EY(cls.shape)
            ok = red_ok and nearly_ok and ey_ok
            return (
                "word counts match tableau counts",
                f"red={red_ok} nearly={nearly_ok} EY={ey_ok}",
                ok,
            )

        checks.append(
            _Check("vexillary", {"n": n, "w": _perm_str(w), "shape": _label(cls.shape)}, run)
        )
    return checks


def _perm_str(w) -> str:
    return "".join(map(str, w)) if len(w) <= 9 else ",".join(map(str, w))


def _suite_forest(params):
    kind = params["kind"]
    if kind == "criterion":
        n = int(params["n"])

        def run():
            for w in iperm(range(1, n + 1)):
                if ps.is_forest(perm.noninversion_poset(w)) != perm.classify(w).dominant:
                    return ("forest iff dominant", f"fails at {w}", False)
            return ("forest iff dominant", f"all {n}! permutations agree", True)

        return [_Check("forest", {"kind": kind, "n": n}, run)]
    if kind == "hook":
        max_n = int(params["max_n"])
        catalog = [
            [None, 0, 0, 1],
            [None, None, 0, 1, 1, 2],
            [None, 0, 1, 1, None, 4, 4, 5],
            [None, 0, 1, 2, 3, None, 5, 6, 7],
            [None, 0, 0, 0, 1, 1, 2, None, 7],
            [None] * 6,
            [None, 0, 1, 2, 3, 4, 5, 6, 7],
        ]

        def run():
            tested = 0
            for parents in catalog:
                if len(parents) > max_n:
                    continue
                covers = {(i, p) for i, p in enumerate(parents) if p is not None}
                f = ps.FinitePoset(len(parents), frozenset(covers))
                assert ps.is_forest(f)
                formula = ps.linear_extension_count(f)
                dp = ps._linear_extensions_by_ideals(f)
                if formula != dp:
                    return ("hook formula equals ideal DP", f"fails on {parents}", False)
                tested += 1
            for n in range(1, 6):
                for p in all_posets_upto_iso(n):
                    if not ps.is_forest(p):
                        continue
                    if ps.linear_extension_count(p) != ps._linear_extensions_by_ideals(p):
                        return ("hook formula equals ideal DP", f"fails on {p.covers}", False)
                    tested += 1
            return ("hook formula equals ideal DP", f"{tested} forests agree", True)

        return [_Check("forest", {"kind": kind, "max_n": max_n}, run)]
    if kind == "merge-ratio":
        def run():
            tested = 0
            fixtures = [
                ps.FinitePoset(6, frozenset({(0, 1), (1, 2), (3, 2), (4, 5)})),
                perm.noninversion_poset(perm.dominant_of_shape(tb.rect_staircase(2, 3, 4))),
                perm.noninversion_poset(perm.dominant_of_shape(tb.rect_staircase(3, 1, 2))),
            ]
            for f in fixtures:
                base = ps.linear_extension_count(f)
                for (i, j) in sorted(f.covers):
                    want = Fraction(
                        ps.linear_extension_count(ps.quotient_cover(f, i, j)), base
                    )
                    if ps.forest_merge_ratio(f, i, j) != want:
                        return ("telescoped ratio equals quotient ratio", f"fails at {(i, j)}", False)
                    tested += 1
            return ("telescoped ratio equals quotient ratio", f"{tested} covers agree", True)

        return [_Check("forest", {"kind": kind}, run)]
    raise MalformedInputError(f"unknown forest kind {kind!r}")


def _suite_fk_theorem(params):
    if params.get("kind") == "leading":
        w = _parse_perm(params["w"])
        L = int(params["L"])

        def run():
            pol = perm.fk_polynomial(w, L)
            lead = pol.coefficient(L)
            brute = len(perm.enumerate_hecke_words(w, L))
            return (str(brute), str(lead), lead == brute)

        return [_Check("fk-theorem", {"kind": "leading", "w": params["w"], "L": L}, run)]

    n = int(params["n"])
    checks = []
    for w, cls in _vexillary_in(n):
        ell = perm.length(w)

        def run(w=w, ell=ell):
            for L in (ell, ell + 1, ell + 2):
                words = perm.fk_polynomial(w, L, via="words")
                tab = perm.fk_polynomial(w, L, via="tableaux")
                if words != tab:
                    return ("two routes agree", f"differ at L={L}", False)
            return ("two routes agree", f"L={ell}..{ell+2} agree", True)

        checks.append(_Check("fk-theorem", {"n": n, "w": _perm_str(w)}, run))
    return checks


def _suite_conj_fk(params):
    d, a, b = int(params["d"]), int(params["a"]), int(params["b"])
    conjectural = d >= 3
    instance = {"d": d, "a": a, "b": b}

    def run():
        rep = perm.conjecture_fk_check(d, a, b)
        quotient = "none"
        if rep.quotient is not None:
            num, den = rep.quotient
            quotient = str(num) if den == 1 else f"({num})/{den}"
        predicted = f"C({rep.ell + 1},2)*(4x/{d * (a + b)}+1)"
        computed = (
            f"divides={rep.divides} quotient={quotient} "
            f"quotient_matches={rep.quotient_matches} ssyt_ratio_ok={rep.ssyt_ratio_ok}"
        )
        expected = "conjectural" if conjectural else predicted
        return (expected, computed, rep.consistent)

    return [_Check("conj-fk", instance, run, conjectural=conjectural)]


def _suite_conj_shifted_1(params):
    ell, k = int(params["l"]), int(params["k"])
    lam = tuple(ell - 2 * i for i in range(k + 1))
    instance = {"l": ell, "k": k, "shape": _label(lam)}

    def run():
        p = tb.shifted_interval(lam)
        want = Fraction(sum(lam), ell + 1)
        ex, ey = ps.expectation_X(p), ps.expectation_Y(p)
        ok = ex == ey == want
        return ("conjectural", f"EX={ex} EY={ey} predicted={want}", ok)

    return [_Check("conj-shifted-1", instance, run, conjectural=True)]


def _shifted2_shape(a, d, e):
    staircase = tuple(range(d - 1, 0, -1))
    block = tb.rect_staircase(e, a, a)
    block = block + (0,) * (len(staircase) - len(block))
    return tuple(s + t for s, t in zip(staircase, block))


def _suite_conj_shifted_2(params):
    if params.get("kind") == "overlap":
        N = int(params["N"])

        def run():
            lam1 = tuple(2 * N - 1 - 2 * i for i in range(N))
            lam2 = _shifted2_shape(1, N + 1, N)
            v1 = Fraction(sum(lam1), 2 * N)
            v2 = Fraction(N + 1 + (N - 1), 4)
            ok = lam1 == lam2 and v1 == v2 == Fraction(N, 2)
            return (
                f"shapes coincide with value {Fraction(N, 2)}",
                f"{_label(lam1)} vs {_label(lam2)}: {v1} vs {v2}",
                ok,
            )

        return [_Check("conj-shifted-2", {"kind": "overlap", "N": N}, run)]

    a, d, e = int(params["a"]), int(params["d"]), int(params["e"])
    if d <= a * (e - 1) + 1:
        raise MalformedInputError("need d > a(e-1)+1")
    lam = _shifted2_shape(a, d, e)
    instance = {"a": a, "d": d, "e": e, "shape": _label(lam)}

    def run():
        p = tb.shifted_interval(lam)
        want = Fraction(d + a * (e - 1), 4)
        ex, ey = ps.expectation_X(p), ps.expectation_Y(p)
        ok = ex == ey == want
        return ("conjectural", f"EX={ex} EY={ey} predicted={want}", ok)

    return [_Check("conj-shifted-2", instance, run, conjectural=True)]


def _suite_conj_vexillary_staircase(params):
    n = int(params["n"])
    checks = []
    for w, cls in _vexillary_in(n):
        if not cls.shape:
            continue
        reps = _rect_staircase_params(cls.shape)
        if not reps:
            continue
        values = {Fraction((d - 1) * a * b, a + b) for d, a, b in reps}
        if len(values) != 1:
            continue
        target = values.pop()
        settled = cls.dominant or cls.grassmannian or cls.inverse_grassmannian
        instance = {
            "n": n,
            "w": _perm_str(w),
            "shape": _label(cls.shape),
            "params": str(reps[0]),
            "settled": str(settled),
        }

        def run(w=w, target=target, settled=settled):
            ex = perm.expectation_X_complementary(w)
            ey = perm.expectation_Y_words(w)
            ok = ex == ey == target
            expected = str(target) if settled else "conjectural"
            return (expected, f"EX={ex} EY={ey} predicted={target}", ok)

        checks.append(
            _Check("conj-vexillary-staircase", instance, run, conjectural=not settled)
        )
    return checks


def _suite_conj_mcde_product(params):
    max_elems = int(params["max_elems"])
    m_max = int(params.get("m", 6))
    instance = {"max_elems": max_elems, "m": m_max}

    def run():
        witness = search_mcde_product_counterexample(max_elems, m_max)
        if witness is None:
            return ("conjectural", f"no counterexample up to {max_elems} elements", True)
        p, q, m = witness
        return (
            "conjectural",
            f"violated by {sorted(p.covers)} x {sorted(q.covers)} at m={m}",
            False,
        )

    return [_Check("conj-mcde-product", instance, run, conjectural=True)]


_NEGATIVE_CASES = {
    "strong-bruhat-3": ("strong-bruhat:3", Fraction(4, 3), Fraction(5, 4)),
    "ordinal-sum": ("ordinal-sum-antichains:1,2", Fraction(2, 3), Fraction(1, 2)),
    "m3": ("m3", Fraction(6, 5), Fraction(4, 3)),
}


def _suite_negatives(params):
    case = params["case"]
    instance = {"case": case}
    if case in _NEGATIVE_CASES:
        spec, want_x, want_y = _NEGATIVE_CASES[case]

        def run():
            p = build_poset(spec)
            ex, ey = ps.expectation_X(p), ps.expectation_Y(p)
            ok = ex == want_x and ey == want_y and not ps.is_CDE(p)
            return (f"EX={want_x} EY={want_y} not CDE", f"EX={ex} EY={ey}", ok)

        return [_Check("negatives", instance, run)]
    if case == "j-cube":
        def run():
            cube = ps.product(ps.chain(2), ps.product(ps.chain(2), ps.chain(2)))
            j = ps.order_ideal_lattice(cube)
            ex, ey = ps.expectation_X(j), ps.expectation_Y(j)
            ok = ex != ey
            return ("EX != EY (not CDE)", f"EX={ex} EY={ey}", ok)

        return [_Check("negatives", instance, run)]
    raise MalformedInputError(f"unknown negative case {case!r}")


_SUITES = {
    "thm-main-a": _suite_thm_main_a,
    "thm-main-b": _suite_thm_main_b,
    "thm-main-c": _suite_thm_main_c,
    "prop-products": _suite_prop_products,
    "prop-chain-products": _suite_prop_chain_products,
    "prop-self-dual": _suite_prop_self_dual,
    "cor-tamari": _suite_cor_tamari,
    "prop-toggle": _suite_prop_toggle,
    "recurrences": _suite_recurrences,
    "bijections": _suite_bijections,
    "vexillary": _suite_vexillary,
    "forest": _suite_forest,
    "fk-theorem": _suite_fk_theorem,
    "conj-fk": _suite_conj_fk,
    "conj-shifted-1": _suite_conj_shifted_1,
    "conj-shifted-2": _suite_conj_shifted_2,
    "conj-vexillary-staircase": _suite_conj_vexillary_staircase,
    "conj-mcde-product": _suite_conj_mcde_product,
    "negatives": _suite_negatives,
}


@lru_cache(maxsize=1)
def _manifest_rows() -> tuple[tuple[str, tuple[tuple[str, str], ...]], ...]:
    rows = []
    for raw in _MANIFEST_PATH.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        params = tuple(tuple(p.split("=", 1)) for p in parts[1:])
        rows.append((parts[0], params))
    return tuple(rows)


def suite_ids() -> list[str]:
    seen = []
    for suite, _ in _manifest_rows():
        if suite not in seen:
            seen.append(suite)
    return seen


def _skipped(check_id, instance, conjectural=False) -> CheckReport:
    return CheckReport(
        check_id,
        instance,
        "conjectural" if conjectural else "skipped",
        "not run",
        "skipped(capacity)",
        0.0,
    )


def run_suite(suite_id: str, budget: float = 600.0) -> list[CheckReport]:
    """Run every instance of one suite, in manifest order, within a time
    budget; instances not run are reported as skipped(capacity)."""
    if suite_id not in _SUITES:
        raise UnknownSuiteError(f"no suite named {suite_id!r}")
    rows = [(s, p) for s, p in _manifest_rows() if s == suite_id]
    if not rows:
        raise UnknownSuiteError(f"suite {suite_id!r} has no manifest rows")
    deadline = time.monotonic() + budget
    reports = []
    for _, raw_params in rows:
        params = dict(raw_params)
        if time.monotonic() > deadline:
            reports.append(_skipped(suite_id, params))
            continue
        try:
            checks = _SUITES[suite_id](params)
        except CapacityError:
            reports.append(_skipped(suite_id, params))
            continue
        for check in checks:
            if time.monotonic() > deadline:
                reports.append(
                    _skipped(check.check_id, check.instance, check.conjectural)
                )
                continue
            start = time.monotonic()
            try:
                expected, computed, ok = check.run()
            except CapacityError:
                reports.append(
                    _skipped(check.check_id, check.instance, check.conjectural)
                )
                continue
            elapsed = time.monotonic() - start
            if check.conjectural:
                status = "conjecture-consistent" if ok else "conjecture-violated"
                expected = "conjectural"
            else:
                status = "pass" if ok else "fail"
            reports.append(
                CheckReport(check.check_id, check.instance, expected, computed, status, elapsed)
            )
    return reports


def run_all(budget: float = 600.0) -> list[CheckReport]:
    """Run every suite in manifest order under one shared budget."""
    ids = suite_ids()
    deadline = time.monotonic() + budget
    reports = []
    for suite in ids:
        remaining = deadline - time.monotonic()
        reports.extend(run_suite(suite, max(remaining, 0.0)))
    return reports


def format_reports(reports) -> str:
    """Human table, one line per report."""
    lines = []
    width = max((len(r.check_id) for r in reports), default=10)
    for r in reports:
        inst = " ".join(f"{k}={v}" for k, v in r.instance.items())
        lines.append(
            f"{r.status:<22} {r.check_id:<{width}} {inst}  expected: {r.expected}  computed: {r.computed}"
        )
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = ", ".join(f"{k}: {v}" for k, v in sorted(counts.items()))
    lines.append(f"-- {len(reports)} checks ({summary})")
    return "\n".join(lines)
