"""Command-line interface: ``python3 -m nlie <command> ...``.

Polynomials use the text form of :func:`nlie.poly.format_poly`; structured
results are printed as JSON.  Defaults for the search bounds can be set in
an optional ``key=value`` file passed with ``--config``.
"""

from __future__ import annotations

import argparse
import configparser
import json
import random
import sys
from fractions import Fraction
from typing import Sequence

from .brackets import TaggedSeries, algebra, bracket_s, bracket_sw, bracket_vp, bracket_w, filippov_residual
from .cartan import format_field, parse_field
from .classify import brute_verify, dominant_box, scan
from .glrep import freudenthal, to_sl
from .poly import format_poly, format_rational, parse_poly, parse_rational
from .qgen import EQUATIONS, GeneratorSpec, format_generator, reproduce_equation
from .verma import VermaSlice
from .wedge import abstract_qgen, ad_field_of

DEFAULTS = {"slot_deg": 2, "total_deg": None, "maxdeg": 2, "jobs": 1, "seed": 0, "trials": 100, "max_degree": 3}


def load_config(path: str | None) -> dict:
    """Read ``key=value`` lines (``#`` comments allowed) over the built-in defaults."""
    out = dict(DEFAULTS)
    if not path:
        return out
    parser = configparser.ConfigParser()
    with open(path) as fh:
        parser.read_string("[defaults]\n" + fh.read())
    for key, value in parser["defaults"].items():
        key = key.replace("-", "_")
        if key not in DEFAULTS:
            raise ValueError(f"unknown config key {key!r}")
        out[key] = None if value.lower() == "none" else int(value)
    return out


def _weight(text: str) -> tuple:
    return tuple(parse_rational(x) for x in text.split(","))


def _box(text: str) -> tuple[int, int]:
    lo, hi = text.split(":")
    return int(lo), int(hi)


def _params(text: str | None) -> dict:
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        key, value = item.split("=")
        out[key.strip()] = int(value)
    return out


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _format_element(name: str, a) -> str:
    if name in ("w", "s"):
        return format_poly(a)
    if name == "vp":
        return ",".join(format_rational(x) for x in a)
    return " ; ".join(f"{j}:{format_poly(p)}" for j, p in enumerate(a, start=1) if p) or "0"


def _verma_vector(vec: dict, labels: Sequence[str]) -> list:
    return [[list(I), labels[b] if labels else b, format_rational(c)] for (I, b), c in sorted(vec.items())]


# -- commands ------------------------------------------------------------------

def cmd_bracket(args, cfg) -> int:
    n = args.n
    if len(args.args) != n:
        raise ValueError(f"the {args.algebra} bracket takes {n} arguments")
    if args.algebra == "w":
        print(format_poly(bracket_w([parse_poly(a, n - 1) for a in args.args])))
    elif args.algebra == "s":
        print(format_poly(bracket_s([parse_poly(a, n) for a in args.args])))
    elif args.algebra == "vp":
        vs = [tuple(parse_rational(x) for x in a.split(",")) for a in args.args]
        print(",".join(format_rational(x) for x in bracket_vp(vs)))
    else:
        tagged = []
        for a in args.args:
            tag, body = a.split(":", 1)
            tagged.append(TaggedSeries(int(tag), parse_poly(body, 1)))
        r = bracket_sw(tagged)
        print("0" if r is None else f"{r.copy}:{format_poly(r.series)}")
    return 0


def cmd_jacobi(args, cfg) -> int:
    alg = algebra(args.algebra, args.n)
    rng = random.Random(cfg["seed"] if args.seed is None else args.seed)
    trials = cfg["trials"] if args.trials is None else args.trials
    deg = cfg["max_degree"] if args.max_degree is None else args.max_degree
    for t in range(trials):
        as_ = [alg.random_element(rng, deg) for _ in range(args.n - 1)]
        bs = [alg.random_element(rng, deg) for _ in range(args.n)]
        res = filippov_residual(alg, as_, bs)
        if not alg.is_zero(res):
            print(f"FAIL after {t + 1} trials")
            _emit({
                "a": [_format_element(args.algebra, a) for a in as_],
                "b": [_format_element(args.algebra, b) for b in bs],
                "residual": _format_element(args.algebra, res),
            })
            return 1
    print(f"PASS {trials} trials")
    return 0


def cmd_adfield(args, cfg) -> int:
    fs = [parse_poly(a, args.n - 1) for a in args.polys]
    print(format_field(ad_field_of(fs)))
    return 0


def cmd_freudenthal(args, cfg) -> int:
    lam = _weight(args.weight)
    if len(lam) != args.n - 1:
        raise ValueError(f"weight needs {args.n - 1} entries")
    mult = freudenthal(to_sl(lam), args.depth)
    _emit({",".join(map(str, beta)): m for beta, m in sorted(mult.items())})
    return 0


def cmd_act(args, cfg) -> int:
    from .classify import module_for

    lam = _weight(args.weight)
    F = module_for(lam)
    vslice = VermaSlice(F, cfg["maxdeg"] if args.maxdeg is None else args.maxdeg)
    X = parse_field(args.field, args.n - 1)
    if args.vector:
        vec = {}
        for I, b, c in json.loads(args.vector):
            b = F.labels.index(b) if isinstance(b, str) else int(b)
            vec[(tuple(I), b)] = Fraction(c)
    else:
        vec = vslice.hw()
    _emit(_verma_vector(vslice.act(X, vec), F.labels))
    return 0


def cmd_qgen(args, cfg) -> int:
    spec = GeneratorSpec.parse(args.fs)
    if spec.n != args.n:
        raise ValueError(f"--fs describes a generator for n={spec.n}")
    _emit(format_generator(abstract_qgen(spec.polys())))
    return 0


def cmd_repro(args, cfg) -> int:
    report = reproduce_equation(args.eq, args.n, _params(args.params), _weight(args.weight))
    from .classify import module_for

    labels = module_for(report.weight).labels
    print(report.status)
    _emit({
        "equation": report.equation,
        "spec": str(report.spec),
        "lhs": _verma_vector(report.lhs, labels),
        "rhs": _verma_vector(report.rhs, labels),
    })
    return 0 if report.match else 1


def cmd_classify(args, cfg) -> int:
    slot = cfg["slot_deg"] if args.slot_deg is None else args.slot_deg
    total = cfg["total_deg"] if args.total_deg is None else args.total_deg
    v = brute_verify(args.n, _weight(args.weight), slot, total)
    _emit(v.as_dict())
    return 0


def cmd_scan(args, cfg) -> int:
    lo, hi = _box(args.box)
    slot = cfg["slot_deg"] if args.slot_deg is None else args.slot_deg
    total = cfg["total_deg"] if args.total_deg is None else args.total_deg
    jobs = cfg["jobs"] if args.jobs is None else args.jobs
    rows = scan(args.n, dominant_box(args.n, lo, hi), slot, total, jobs)
    if args.format == "json":
        _emit([{
            "weight": [str(x) for x in r.weight],
            "predicted": r.predicate[0],
            "predicted_kind": r.predicate[1],
            "verdict": r.verdict.as_dict(),
            "agree": r.agree,
        } for r in rows])
    else:
        print("weight\tpredicted\tpredicted_kind\taccepted\tkind\tagree\twitness")
        for r in rows:
            v = r.verdict
            print("\t".join([
                ",".join(map(str, r.weight)), str(r.predicate[0]), r.predicate[1],
                str(v.accepted), v.module_kind, str(r.agree), str(v.witness[0]) if v.witness else "-",
            ]))
    return 0 if all(r.agree for r in rows) else 1


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nlie", description="Representations of the n-Lie algebra W^n.")
    p.add_argument("--config", help="key=value file with default bounds")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bracket", help="evaluate an n-ary bracket")
    s.add_argument("--algebra", choices=["w", "s", "vp", "sw"], default="w")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("args", nargs="+", help="polynomials, 'j:poly' for sw, 'a,b,..' for vp")
    s.set_defaults(func=cmd_bracket)

    s = sub.add_parser("jacobi", help="randomized Filippov-Jacobi check")
    s.add_argument("--algebra", choices=["w", "s", "vp", "sw"], default="w")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--trials", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--max-degree", type=int)
    s.set_defaults(func=cmd_jacobi)

    s = sub.add_parser("adfield", help="vector field of ad(f_1 ^ .. ^ f_{n-1})")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("polys", nargs="+")
    s.set_defaults(func=cmd_adfield)

    s = sub.add_parser("freudenthal", help="weight multiplicities below a highest weight")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--weight", required=True, help="gl weight l1,..,l_{n-1}")
    s.add_argument("--depth", type=int, default=3)
    s.set_defaults(func=cmd_freudenthal)

    s = sub.add_parser("act", help="act with a vector field on a generalized Verma module")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--weight", required=True)
    s.add_argument("--maxdeg", type=int)
    s.add_argument("--field", required=True, help="'(p1) D1 + (p2) D2 ..'")
    s.add_argument("--vector", help="JSON list of [I, basis, coeff]; default 1 (x) v_lam")
    s.set_defaults(func=cmd_act)

    s = sub.add_parser("qgen", help="print an ideal generator")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--fs", required=True, help="exponent vectors, e.g. '1,0;0,2;0,0;0,1'")
    s.set_defaults(func=cmd_qgen)

    s = sub.add_parser("repro", help="compare a closed-form equation with the generator")
    s.add_argument("--eq", type=int, required=True, choices=sorted(EQUATIONS))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--params", help="e.g. 'j=1,k=2'")
    s.add_argument("--weight", required=True)
    s.set_defaults(func=cmd_repro)

    s = sub.add_parser("classify", help="brute-force verdict for one weight")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--weight", required=True)
    s.add_argument("--slot-deg", type=int)
    s.add_argument("--total-deg", type=int)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("scan", help="compare the classification with brute force over a box")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--box", default="-3:3", help="lo:hi")
    s.add_argument("--slot-deg", type=int)
    s.add_argument("--total-deg", type=int)
    s.add_argument("--jobs", type=int)
    s.add_argument("--seed", type=int, help="accepted for symmetry with jacobi; the scan is deterministic")
    s.add_argument("--format", choices=["tsv", "json"], default="tsv")
    s.set_defaults(func=cmd_scan)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        return args.func(args, cfg)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
