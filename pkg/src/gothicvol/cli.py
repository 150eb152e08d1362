"""Command line front end.

Every subcommand writes a single JSON document to standard output (or to
``--out FILE``): {"command", "inputs", "result", "elapsed_ms"}.  Exact
rationals are emitted as "p/q" strings (never as decimals unless ``--float``
is passed), pi-multiples as {"coeff": "p/q", "pi_power": n}.  Series-shaped
results (q-expansion tables, zagier scans, volume checkpoints) can be emitted
as CSV with ``--csv``.

Exit codes: 0 success, 2 input validation failure, 1 internal check failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from fractions import Fraction

from . import arith, counting, euler, ideals, prototypes, qforms, verify, volume, zagier
from .arith import PiQuantity
from .counting import Locus

_LOCI = {"h2": Locus.H2, "p3": Locus.P3, "p4": Locus.P4, "gothic": Locus.G}
_MODE_NAMES = {"exact": "exact", "main": "main_term", "main_term": "main_term",
               "leading": "leading", "remark": "remark"}


def _frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _encode(value, as_float: bool):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return float(value) if as_float else _frac_str(value)
    if isinstance(value, PiQuantity):
        if as_float:
            return value.to_float()
        return {"coeff": _frac_str(value.coeff), "pi_power": value.pi_power}
    if isinstance(value, float):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, (list, tuple)):
        return [_encode(v, as_float) for v in value]
    if isinstance(value, dict):
        return {k: _encode(v, as_float) for k, v in value.items()}
    return str(value)


def _emit(args, command: str, inputs: dict, result, started: float, csv_rows=None):
    out = sys.stdout
    close = False
    if args.out:
        out = open(args.out, "w")
        close = True
    try:
        if args.csv and csv_rows is not None:
            header, rows = csv_rows
            print(",".join(header), file=out)
            for row in rows:
                print(",".join(str(_encode(v, args.float)) for v in row), file=out)
        else:
            record = {
                "command": command,
                "inputs": _encode(inputs, False),
                "result": _encode(result, args.float),
                "elapsed_ms": int((time.perf_counter() - started) * 1000),
            }
            json.dump(record, out, indent=2)
            out.write("\n")
    finally:
        if close:
            out.close()


# ---------------------------------------------------------------------------
# subcommand handlers: return (inputs, result, csv_rows or None)
# ---------------------------------------------------------------------------

def _cmd_proto(args):
    protos = prototypes.enumerate_prototypes(args.D, args.k)
    result = {
        "count": len(protos),
        "a_sum": prototypes.e_value(args.D, args.k),
        "prototypes": [[p.a, p.b, p.c] for p in protos],
    }
    rows = [(p.a, p.b, p.c) for p in protos]
    return {"D": args.D, "k": args.k}, result, (("a", "b", "c"), rows)


def _cmd_e(args):
    return {"D": args.D, "k": args.k}, prototypes.e_value(args.D, args.k), None


def _cmd_qexp(args):
    N = args.N
    if args.series == "theta":
        coeffs = qforms.theta_expansion(N).coeffs
    elif args.series == "g2":
        coeffs = qforms.g2k_expansion(args.k, N).coeffs
    elif args.series == "fk":
        coeffs = qforms.fk_expansion(args.k, N).coeffs
    else:  # ek: the divisor-sum route
        coeffs = [qforms.ek_coeff(args.k, n) for n in range(N + 1)]
    inputs = {"series": args.series, "k": args.k, "N": N}
    rows = [(n, c) for n, c in enumerate(coeffs)]
    return inputs, {"coefficients": coeffs}, (("n", "coeff"), rows)


def _cmd_zagier(args):
    inputs = {"what": args.what, "dmax": args.dmax}
    if args.what == "asymptotic":
        rep = zagier.asymptotic_check_e(args.dmax)
        result = {
            "delta1_upper_max": rep.delta1_upper_max,
            "delta1_lower_max": rep.delta1_lower_max,
            "delta1_ratio": rep.delta1_ratio,
            "delta6_upper_max": rep.delta6_upper_max,
            "delta6_lower_max": rep.delta6_lower_max,
            "delta6_ratio": rep.delta6_ratio,
        }
        rows = [(d, rep.delta1[d], rep.delta6[d]) for d in range(1, args.dmax + 1)]
        return inputs, result, (("d", "delta1", "delta6"), rows)
    rows = [
        (d, zagier.ebar1_exact(d), zagier.ebar6_exact(d))
        for d in range(1, args.dmax + 1)
    ]
    result = {"rows": [{"d": d, "ebar1": a, "ebar6": b} for d, a, b in rows]}
    return inputs, result, (("d", "ebar1", "ebar6"), rows)


def _cmd_ideals(args):
    d, n = args.d, args.n
    comps = []
    for r in ideals.component_list(d) if n == 6 else [r for r in arith.divisors(n)]:
        spec = ideals.ideal_basis(d, n, r)
        M = ideals.gram_matrix(d, n, r)
        comps.append(
            {
                "r": r,
                "basis": [[g.a1, g.a2] for g in spec.basis],
                "symplectic_type": list(ideals.symplectic_divisors(M)),
                "polarization": list(ideals.polarization_restriction(d, n, r)),
            }
        )
    result = {"d": d, "n": n, "class_count": ideals.class_count(d, n),
              "components": comps}
    return {"d": d, "n": n}, result, None


def _cmd_chi(args):
    D, mode = args.D, _MODE_NAMES[args.mode]
    fam = args.family
    if fam == "x":
        value, empty = euler.chi_X(D), False
    elif fam == "xbr":
        d = args.d or math.isqrt(D)
        if d * d != D:
            raise ValueError("family=xbr needs a square D (or pass --d)")
        value, empty = euler.chi_X_br(d, args.r), False
    elif fam == "w2":
        value, empty = euler.chi_W2(D), False
    elif fam == "w4":
        rec = euler.chi_W4(D, args.j, mode)
        value, empty = rec.value, rec.empty
    elif fam == "w6":
        rec = euler.chi_W6(D, mode)
        value, empty = rec.value, rec.empty
    elif fam == "r":
        value, empty = euler.chi_R(D, mode), False
    else:  # g
        rec = euler.chi_G(D, args.r, mode)
        value, empty = rec.value, rec.empty
    result = {"family": fam, "D": D, "mode": mode, "value": value, "empty": empty}
    inputs = {"family": fam, "D": D, "r": args.r, "j": args.j, "mode": args.mode}
    return inputs, result, None


def _cmd_smm(args):
    cover = counting.smm(_LOCI[args.locus], args.m, _MODE_NAMES[args.surrogate])
    result = {
        "m": cover.m,
        "total": cover.total,
        "contributions": [
            {"family": fam, "D": D, "component": comp, "count": cnt}
            for fam, D, comp, cnt in cover.contributions
        ],
    }
    return {"locus": args.locus, "m": args.m, "surrogate": args.surrogate}, result, None


def _cmd_cd(args):
    value = counting.cd_count(_LOCI[args.locus], args.d, _MODE_NAMES[args.surrogate])
    return {"locus": args.locus, "d": args.d, "surrogate": args.surrogate}, value, None


def _cmd_oracle_h2(args):
    value = counting.h2_permutation_oracle(args.d, threads=args.threads)
    return {"d": args.d}, value, None


def _cmd_sk(args):
    return {"k": args.k, "D": args.D}, volume.sk_sum(args.k, args.D), None


def _cmd_volume(args):
    est = volume.volume_estimate(
        _LOCI[args.locus], args.dmax, args.mode, _MODE_NAMES[args.surrogate]
    )
    result = {
        "locus": args.locus,
        "dmax": est.D,
        "mode": est.mode,
        "surrogate": est.surrogate,
        "exact_target": est.exact_target,
        "target_float": est.exact_target.to_float(),
        "value": est.value,
        "relative_error": est.relative_error,
        "extrapolated": est.extrapolated,
        "extrapolated_relative_error": est.extrapolated_relative_error,
        "checkpoints": [{"D": Dc, "value": v} for Dc, v in est.series],
    }
    rows = [(Dc, v) for Dc, v in est.series]
    inputs = {"locus": args.locus, "dmax": args.dmax, "mode": args.mode,
              "surrogate": args.surrogate}
    return inputs, result, (("D", "value"), rows)


def _cmd_verify(args):
    lines: list[str] = []

    def report(line):
        print(line, file=sys.stderr)
        lines.append(line)

    results = verify.run_suite(args.suite, threads=args.threads, report=report)
    ok = all(r.ok for r in results)
    result = {
        "suite": args.suite,
        "passed": sum(r.ok for r in results),
        "failed": sum(not r.ok for r in results),
        "checks": [
            {"name": r.name, "suite": r.suite, "ok": r.ok,
             "elapsed_s": round(r.elapsed_s, 3), "detail": r.detail}
            for r in results
        ],
    }
    if not ok:
        raise _VerifyFailure(result)
    return {"suite": args.suite}, result, None


class _VerifyFailure(Exception):
    def __init__(self, result):
        self.result = result


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gothicvol",
        description="Euler characteristics of arithmetic Teichmueller curves "
        "and lattice-point estimates of Masur-Veech volumes "
        "(exact arithmetic throughout).",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="FILE",
                        help="write the output there instead of stdout")
    common.add_argument("--csv", action="store_true", help="emit series results as CSV")
    common.add_argument("--float", action="store_true",
                        help="render exact values as decimals")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="parallelism cap (default: available cores)")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("proto", help="enumerate the prototype set P_k(D)")
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=_cmd_proto)

    p = add_parser("e", help="the weighted count e(D, k)")
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=_cmd_e)

    p = add_parser("qexp", help="q-expansion coefficients (exact rationals)")
    p.add_argument("--series", choices=("theta", "g2", "fk", "ek"), required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(fn=_cmd_qexp)

    p = add_parser("zagier", help="ebar_1 / ebar_6 values and asymptotic reports")
    p.add_argument("--what", choices=("ebar", "asymptotic"), default="ebar")
    p.add_argument("--dmax", type=int, required=True)
    p.set_defaults(fn=_cmd_zagier)

    p = add_parser("ideals", help="ideal bases, class counts, polarizations")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, default=6)
    p.set_defaults(fn=_cmd_ideals)

    p = add_parser("chi", help="Euler characteristics chi(...)")
    p.add_argument("--family", choices=("x", "xbr", "w2", "w4", "w6", "r", "g"),
                   required=True)
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--d", type=int, default=0, help="for family=xbr: the square root of D")
    p.add_argument("--mode", choices=tuple(_MODE_NAMES), default="exact")
    p.set_defaults(fn=_cmd_chi)

    p = add_parser("smm", help="|S_{m,m}| split by contributing curve")
    p.add_argument("--locus", choices=tuple(_LOCI), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--surrogate", choices=("main", "leading", "remark"), default="main")
    p.set_defaults(fn=_cmd_smm)

    p = add_parser("cd", help="|C_d|: all torus covers of degree d")
    p.add_argument("--locus", choices=tuple(_LOCI), required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--surrogate", choices=("main", "leading", "remark"), default="main")
    p.set_defaults(fn=_cmd_cd)

    p = add_parser("oracle-h2", help="permutation-pair count for H(2)")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(fn=_cmd_oracle_h2)

    p = add_parser("sk", help="the divisor-convolution sum S_k(D)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--D", type=int, required=True)
    p.set_defaults(fn=_cmd_sk)

    p = add_parser("volume", help="Masur-Veech volume estimate")
    p.add_argument("--locus", choices=tuple(_LOCI), required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--mode", choices=("direct", "closed"), default="direct")
    p.add_argument("--surrogate", choices=("main", "leading", "remark"), default="main")
    p.set_defaults(fn=_cmd_volume)

    p = add_parser("verify", help="run the cross-oracle invariant suite")
    p.add_argument("--suite", choices=verify.SUITES, default="all")
    p.set_defaults(fn=_cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    started = time.perf_counter()
    try:
        inputs, result, csv_rows = args.fn(args)
    except _VerifyFailure as vf:
        _emit(args, args.command, {"suite": args.suite}, vf.result, started)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1
    _emit(args, args.command, inputs, result, started, csv_rows)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
