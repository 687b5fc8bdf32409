"""Command-line interface.

Numeric output is exact: rationals print as p/q and polynomials as
coefficient lists from the constant term up.  Pass --approx for an extra
decimal rendering.  Exit codes: 0 success, 1 when a verification report
fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import permutations as perm
from . import poset as ps
from . import tableaux as tb
from . import verify
from .errors import CdeError

_BUILDER_KEYS = ("n", "a", "b", "c", "d")


def _fmt(value):
    if isinstance(value, Fraction):
        return str(value)
    return value


def _emit(data: dict, args, order=None):
    if args.emit == "json":
        print(json.dumps({k: _fmt(v) for k, v in data.items()}, sort_keys=True))
        return
    keys = order or list(data)
    for k in keys:
        v = data[k]
        line = f"{k}: {_fmt(v)}"
        if args.approx and isinstance(v, Fraction):
            line += f"  (~{float(v):.6g})"
        print(line)


def _parse_shape(text: str):
    if text in ("", "0"):
        return ()
    return tb.check_partition(int(v) for v in text.replace(" ", ",").split(",") if v)


def _parse_perm(text: str):
    if "," in text or " " in text:
        parts = text.replace(",", " ").split()
    else:
        parts = list(text)
    return perm.check_permutation(int(v) for v in parts)


def _perm_from_args(args):
    """Accept a permutation in one-line notation (--w) or as the 0-Hecke
    product of a comma-separated generator word (--word)."""
    if getattr(args, "word", None):
        letters = [int(v) for v in args.word.replace(" ", ",").split(",") if v]
        n = args.n if getattr(args, "n", None) else (max(letters) + 1 if letters else 1)
        return perm.word_to_hecke(letters, n)
    if args.w:
        return _parse_perm(args.w)
    raise CdeError("need --w or --word")


def _poset_from_args(args) -> ps.FinitePoset:
    if args.file:
        with open(args.file) as fh:
            p = ps.load_poset(fh.read())
    else:
        if not args.builder:
            raise CdeError("need --file or --builder")
        params = [str(getattr(args, k)) for k in _BUILDER_KEYS if getattr(args, k) is not None]
        spec = args.builder if not params else f"{args.builder}:{','.join(params)}"
        p = verify.build_poset(spec)
    if args.dual:
        p = ps.dual(p)
    return p


def _poset_stats_payload(p: ps.FinitePoset, xm: int) -> dict:
    st = ps.stats(p)
    data = {
        "n": p.n,
        "edge_count": st.edge_count,
        "EX": st.EX,
        "EY": st.EY,
        "maximal_chain_count": st.maximal_chain_count,
        "rank": st.rank,
        "is_CDE": st.is_CDE,
    }
    if xm:
        for m in range(1, xm + 1):
            data[f"EX^({m})"] = ps.expectation_Xm(p, m)
        data[f"is_mCDE_upto_{xm}"] = ps.is_mCDE_upto(p, xm)
    return data


def _cmd_poset(args) -> int:
    p = _poset_from_args(args)
    _emit(_poset_stats_payload(p, args.xm), args)
    return 0


def _cmd_young(args) -> int:
    shape = _parse_shape(args.shape)
    if args.emit == "tableaux":
        for t in tb.enumerate_standard_barely(shape):
            print(tb.format_tableau(t))
            print()
        return 0
    r, rp = tb.R_and_Rplus(shape)
    n = sum(shape)
    f = tb.hook_f(shape)
    fp = tb.f_plus_one(shape)
    data = {
        "shape": args.shape,
        "cells": n,
        "f": f,
        "f_plus": fp,
        "R": r,
        "R_plus": rp,
        "EX": Fraction(rp, r),
        "EY": Fraction(fp, (n + 1) * f) if shape else Fraction(0),
    }
    data["is_CDE"] = data["EX"] == data["EY"]
    _emit(data, args)
    return 0


def _cmd_shifted(args) -> int:
    shape = tb.check_strict_partition(_parse_shape(args.shape))
    p = tb.shifted_interval(shape)
    st = ps.stats(p)
    data = {
        "shape": args.shape,
        "interval_size": p.n,
        "edge_count": st.edge_count,
        "EX": st.EX,
        "EY": st.EY,
        "is_CDE": st.is_CDE,
    }
    _emit(data, args)
    return 0


def _cmd_perm(args) -> int:
    w = _perm_from_args(args)
    cls = perm.classify(w)
    data = {
        "w": ",".join(map(str, w)) if len(w) > 9 else "".join(map(str, w)),
        "n": len(w),
        "length": perm.length(w),
        "code": ",".join(map(str, perm.lehmer_code(w))),
        "descents": ",".join(map(str, perm.descents(w))) or "-",
        "vexillary": cls.vexillary,
        "dominant": cls.dominant,
        "grassmannian": cls.grassmannian,
        "inverse_grassmannian": cls.inverse_grassmannian,
    }
    if cls.vexillary:
        data["shape"] = ",".join(map(str, cls.shape)) or "0"
        data["flag"] = ",".join(map(str, perm.rothe(w).flag_w)) or "-"
    members = perm.weak_interval_elements(w)
    data["interval_size"] = len(members)
    data["reduced_words"] = perm.count_reduced(w)
    data["nearly_reduced_words"] = perm.count_nearly_reduced(w)
    data["EX"] = perm.expectation_X_complementary(w)
    data["EY"] = perm.expectation_Y_words(w)
    data["is_CDE"] = data["EX"] == data["EY"]
    if args.xm:
        p = perm.weak_interval(w)
        for m in range(1, args.xm + 1):
            data[f"EX^({m})"] = ps.expectation_Xm(p, m)
        data[f"is_mCDE_upto_{args.xm}"] = ps.is_mCDE_upto(p, args.xm)
    _emit(data, args)
    return 0


def _cmd_fk(args) -> int:
    w = _perm_from_args(args)
    data = {
        "w": ",".join(map(str, w)) if len(w) > 9 else "".join(map(str, w)),
        "L": args.L,
        "via": args.via,
    }
    if args.via == "both":
        words = perm.fk_polynomial(w, args.L, via="words")
        tab = perm.fk_polynomial(w, args.L, via="tableaux")
        data["coefficients"] = list(words.coeffs)
        data["polynomial"] = str(words)
        data["tableaux_coefficients"] = list(tab.coeffs)
        data["agreement"] = words == tab
        _emit(data, args)
        return 0 if words == tab else 1
    pol = perm.fk_polynomial(w, args.L, via=args.via)
    data["coefficients"] = list(pol.coeffs)
    data["polynomial"] = str(pol)
    _emit(data, args)
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "all":
        reports = verify.run_all(args.budget)
    else:
        reports = verify.run_suite(args.suite, args.budget)
    if args.emit == "json":
        for r in reports:
            print(r.to_json())
    else:
        print(verify.format_reports(reports))
    return 1 if any(r.status == "fail" for r in reports) else 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="cde", description=__doc__)
    top.add_argument("--emit", choices=("table", "json", "tableaux"), default="table")
    top.add_argument("--approx", action="store_true", help="append decimal approximations")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poset", help="statistics of a poset from a file or builder")
    p.add_argument("action", choices=("stats",))
    p.add_argument("--file", help="poset file (n/cover/label lines)")
    p.add_argument("--builder", help="chain antichain boolean tamari pabcd grid weak-order strong-bruhat ...")
    for key in _BUILDER_KEYS:
        p.add_argument(f"--{key}", type=int)
    p.add_argument("--dual", action="store_true")
    p.add_argument("--xm", type=int, default=0, help="also report multichain expectations up to m")
    p.set_defaults(func=_cmd_poset)

    y = sub.add_parser("young", help="interval and tableau counts below a partition")
    y.add_argument("action", choices=("stats",))
    y.add_argument("--shape", required=True)
    y.set_defaults(func=_cmd_young)

    s = sub.add_parser("shifted", help="interval statistics below a strict partition")
    s.add_argument("action", choices=("stats",))
    s.add_argument("--shape", required=True)
    s.set_defaults(func=_cmd_shifted)

    w = sub.add_parser("perm", help="classification, interval and word statistics")
    w.add_argument("action", choices=("stats",))
    w.add_argument("--w", help="one-line notation, e.g. 4231 or 4,2,3,1")
    w.add_argument("--word", help="comma-separated generator indices; w is their 0-Hecke product")
    w.add_argument("--n", type=int, help="ambient size when using --word")
    w.add_argument("--xm", type=int, default=0)
    w.set_defaults(func=_cmd_perm)

    f = sub.add_parser("fk", help="weighted 0-Hecke word polynomial")
    f.add_argument("--w", help="one-line notation")
    f.add_argument("--word", help="comma-separated generator indices; w is their 0-Hecke product")
    f.add_argument("--n", type=int, help="ambient size when using --word")
    f.add_argument("--L", required=True, type=int)
    f.add_argument("--via", choices=("words", "tableaux", "both"), default="words")
    f.set_defaults(func=_cmd_fk)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all")
    v.add_argument("--budget", type=float, default=600.0)
    v.set_defaults(func=_cmd_verify)
    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CdeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
