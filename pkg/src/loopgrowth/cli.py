"""Command-line front end: deterministic JSON and CSV analysis reports.

Every successful run prints one report object: request echo, result fields,
a plot-ready table, and a provenance list classifying each claim as
THEOREM_CITED, COMPUTED, MODEL, or ASSERTED. Exact rationals are emitted as
numerator/denominator strings plus a decimal rendering so no JSON number
ever carries the precision. Errors print a report with a machine-readable
`error.kind`; exit code 2 flags expression parse errors, 1 everything else.

Output is byte-identical across repeated runs and across thread counts: the
thread flag never appears in the request echo, and parallel sections
assemble their results by index.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from . import __version__
from .freeloop import GradedAlphabet, free_loop_good_growth
from .loop import (
    CofiberPresentation,
    ConnSumPresentation,
    GoodGrowth,
    HypothesisError,
    NotExpressibleError,
    YClassPresentation,
    good_growth_verdict,
    inert_cofiber_loop_gf,
    loop_gf,
)
from .series import (
    Radius,
    expand,
    log_index_empirical,
    log_index_exact,
    smallest_positive_pole,
)
from .space import (
    ParseError,
    Product,
    Smash,
    Sphere,
    SpaceExpr,
    Susp,
    Wedge,
    homology_gf,
    parse,
    profile,
    to_text,
)
from .torsion import (
    PrimeSet,
    hilton_milnor_census,
    primes_set,
    retraction_report,
    torsion_report,
)

SCHEMA_ID = "loopgrowth-report/v1"
RATIONAL_DEGREE_LIMIT = 200
BRUTE_DEGREE_LIMIT = 40
DECIMAL_DIGITS = 30

KIND_PARSE = "parse-error"
KIND_HYPOTHESIS = "hypothesis-error"
KIND_VALIDATION = "validation-error"
KIND_NOT_EXPRESSIBLE = "not-expressible"


# -- serialization helpers -----------------------------------------------------


def _decimal_str(q: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = DECIMAL_DIGITS
        return str(Decimal(q.numerator) / Decimal(q.denominator))


def _rational(q) -> dict:
    q = Fraction(q)
    return {
        "num": str(q.numerator),
        "den": str(q.denominator),
        "decimal": _decimal_str(q),
    }


def _interval(r: Radius) -> dict:
    if r.is_infinite:
        return {"infinite": True, "polynomial": r.polynomial}
    return {
        "infinite": False,
        "exact": r.is_exact,
        "lo": _rational(r.lo),
        "hi": _rational(r.hi),
    }


def _log_index(li) -> dict:
    return {
        "value": li.value,
        "halfwidth": li.halfwidth,
        "eventually_zero": li.eventually_zero,
    }


def _cell(q) -> str:
    return str(Fraction(q))


def _coeff_json(q):
    q = Fraction(q)
    return int(q) if q.denominator == 1 else str(q)


def _gf_json(gf) -> dict:
    return {
        "numerator": list(gf.num.coeffs),
        "denominator": list(gf.den.coeffs),
    }


def _series_table(coeffs) -> dict:
    return {
        "columns": ["degree", "coefficient"],
        "rows": [[k, _cell(c)] for k, c in enumerate(coeffs)],
    }


def _kv_table(pairs) -> dict:
    return {"columns": ["key", "value"], "rows": [[k, str(v)] for k, v in pairs]}


def _cited(claim: str, theorem: str) -> dict:
    return {"claim": claim, "source": "THEOREM_CITED", "theorem": theorem}


def _computed(claim: str) -> dict:
    return {"claim": claim, "source": "COMPUTED"}


def _asserted(claim: str) -> dict:
    return {"claim": claim, "source": "ASSERTED"}


def _model(claim: str, model_id: str) -> dict:
    return {"claim": claim, "source": "MODEL", "model_id": model_id}


def _tree(x: SpaceExpr) -> dict:
    if isinstance(x, Sphere):
        return {"kind": "sphere", "n": x.n}
    if isinstance(x, Wedge):
        return {"kind": "wedge", "left": _tree(x.left), "right": _tree(x.right)}
    if isinstance(x, Product):
        return {"kind": "product", "left": _tree(x.left), "right": _tree(x.right)}
    if isinstance(x, Smash):
        return {"kind": "smash", "left": _tree(x.left), "right": _tree(x.right)}
    if isinstance(x, Susp):
        return {"kind": "suspension", "inner": _tree(x.inner)}
    raise TypeError(f"unknown expression node {x!r}")


def _check_degree(n: int, limit: int = RATIONAL_DEGREE_LIMIT, what: str = "") -> int:
    if n < 0:
        raise ValueError("max degree must be nonnegative")
    if n > limit:
        suffix = f" for {what}" if what else ""
        raise ValueError(f"max degree {n} exceeds the {limit} limit{suffix}")
    return n


# -- presentation payloads -----------------------------------------------------


def _load_presentation(args, fields):
    """Merge a presentation file with command-line flags; flags win."""
    data = {}
    if getattr(args, "file", None):
        with open(args.file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise ValueError("presentation file must hold a JSON object")
        if "kind" in data and data["kind"] != args.command:
            raise ValueError(
                f"presentation kind {data['kind']!r} does not match command {args.command!r}"
            )
    out = {}
    for name in fields:
        flag = getattr(args, name, None)
        out[name] = flag if flag is not None else data.get(name)
    just = args.inert if args.inert is not None else data.get("inert_justification")
    if not just:
        raise ValueError(
            "an inertness justification is required (--inert or the "
            "inert_justification field): the engine cannot verify inertness"
        )
    out["inert_justification"] = just
    missing = [k for k, v in out.items() if v is None]
    if missing:
        raise ValueError(f"missing presentation fields: {', '.join(missing)}")
    return out


def _parse_space(text) -> SpaceExpr:
    if isinstance(text, SpaceExpr):
        return text
    return parse(str(text))


# -- command handlers ----------------------------------------------------------


def _cmd_parse(args):
    x = parse(args.expr)
    canonical = to_text(x)
    result = {"canonical": canonical, "tree": _tree(x)}
    table = _kv_table([("canonical", canonical)])
    prov = [_computed("canonical form from the precedence grammar (^ over x over v)")]
    return {"expr": args.expr}, result, table, prov


def _cmd_homology(args):
    n = _check_degree(args.max_degree)
    x = parse(args.expr)
    gf = homology_gf(x)
    pr = profile(x)
    coeffs = gf.expand(min(n, max(gf.num.degree(), 0))).coeffs
    result = {
        "polynomial": [_coeff_json(c) for c in coeffs],
        "profile": {"connectivity": pr.connectivity, "dimension": pr.dimension},
    }
    prov = [
        _computed("rational homology by the wedge, product, smash and suspension rules"),
        _computed("connectivity and dimension bounds read off the same recursion"),
    ]
    return (
        {"expr": args.expr, "max_degree": n},
        result,
        _series_table(coeffs),
        prov,
    )


def _loop_series_core(gf, n):
    coeffs = gf.expand(n).coeffs
    rho = smallest_positive_pole(gf)
    return coeffs, rho


def _cmd_loop_series(args):
    n = _check_degree(args.max_degree)
    x = parse(args.expr)
    gf = loop_gf(x)
    coeffs, rho = _loop_series_core(gf, n)
    result = {
        "series": _gf_json(gf),
        "coefficients": [_coeff_json(c) for c in coeffs],
        "rho": _interval(rho),
    }
    prov = [
        _cited(
            "loop-space homology series assembled from closed multiplicative rules",
            "loop-suspension splitting and the free-product identity for wedges",
        ),
        _computed("coefficients by linear recurrence on the reduced fraction"),
        _computed("radius certified by root counting and rational bisection"),
    ]
    return (
        {"expr": args.expr, "max_degree": n},
        result,
        _series_table(coeffs),
        prov,
    )


def _cmd_rho(args):
    x = parse(args.expr)
    rho = smallest_positive_pole(loop_gf(x))
    result = {"rho": _interval(rho)}
    if rho.is_infinite:
        rows = [("infinite", "true"), ("polynomial", str(rho.polynomial).lower())]
    else:
        rows = [
            ("rho_lo", _decimal_str(rho.lo)),
            ("rho_hi", _decimal_str(rho.hi)),
            ("exact", str(rho.is_exact).lower()),
        ]
    prov = [_computed("radius certified by root counting and rational bisection")]
    return {"expr": args.expr}, result, _kv_table(rows), prov


def _cmd_log_index(args):
    n = _check_degree(args.max_degree)
    x = parse(args.expr)
    gf = loop_gf(x)
    li = log_index_exact(smallest_positive_pole(gf))
    tail = max(1, min(args.k_min, n))
    empirical = log_index_empirical(expand(gf, n), tail)
    result = {
        "log_index": _log_index(li),
        "empirical": empirical,
        "tail_start": tail,
    }
    table = _kv_table(
        [("log_index", repr(li.value)), ("empirical", repr(empirical))]
    )
    prov = [
        _computed("exact log index as -ln(certified radius midpoint)"),
        _computed("empirical log index as the max of log(dim)/degree over the tail"),
    ]
    return {"expr": args.expr, "max_degree": n, "k_min": args.k_min}, result, table, prov


def _verdict_payload(pres, n, justification):
    gf = inert_cofiber_loop_gf(pres)
    verdict = good_growth_verdict(pres)
    coeffs = gf.expand(n).coeffs
    result = {
        "series": _gf_json(gf),
        "coefficients": [_coeff_json(c) for c in coeffs],
        "rho": _interval(verdict.rho),
        "log_index": _log_index(verdict.log_index),
        "elliptic": verdict.elliptic,
        "strongly_inert": verdict.strongly_inert,
        "omega_divergent": verdict.omega_divergent,
        "verdict": verdict.good_growth.value,
        "trail": list(verdict.trail),
    }
    prov = [
        _asserted(f"attaching map is inert: {justification}"),
        _cited(
            "loop series of the total space from the splitting of the cofiber fibration",
            "loop-space splitting for inert attachments",
        ),
        _computed("radius and log index certified by root counting and bisection"),
    ]
    if verdict.good_growth is GoodGrowth.CERTIFIED_STRONGLY_INERT:
        prov.append(
            _cited(
                "good exponential growth of the free loops on the total space",
                "log-index transfer for strongly inert attachments",
            )
        )
    elif verdict.good_growth is GoodGrowth.CERTIFIED_DIVERGENT_LOOP_SERIES:
        prov.append(
            _cited(
                "good exponential growth from divergence at the radius",
                "divergence criterion for good growth of free loops",
            )
        )
    return result, _series_table(coeffs), prov


def _cmd_cofiber(args):
    n = _check_degree(args.max_degree)
    p = _load_presentation(args, ("A", "Z"))
    pres = CofiberPresentation(
        _parse_space(p["A"]),
        _parse_space(p["Z"]),
        inert_asserted=True,
        justification=p["inert_justification"],
    )
    result, table, prov = _verdict_payload(pres, n, p["inert_justification"])
    req = {
        "A": to_text(pres.A),
        "Z": to_text(pres.Z),
        "inert_justification": p["inert_justification"],
        "max_degree": n,
    }
    return req, result, table, prov


def _cmd_connsum(args):
    n = _check_degree(args.max_degree)
    p = _load_presentation(args, ("A", "M", "N"))
    pres = ConnSumPresentation(
        _parse_space(p["A"]),
        _parse_space(p["M"]),
        _parse_space(p["N"]),
        inert_asserted=True,
        justification=p["inert_justification"],
    )
    result, table, prov = _verdict_payload(
        pres.as_cofiber(), n, p["inert_justification"]
    )
    prov.insert(
        1,
        _cited(
            "connected sum analyzed through its collar cofibration onto the wedge",
            "collar cofibration of a connected sum",
        ),
    )
    req = {
        "A": to_text(pres.A),
        "M": to_text(pres.M),
        "N": to_text(pres.N),
        "inert_justification": p["inert_justification"],
        "max_degree": n,
    }
    return req, result, table, prov


def _cmd_yclass(args):
    n = _check_degree(args.max_degree)
    p = _load_presentation(args, ("m", "n", "J"))
    pres = YClassPresentation(
        int(p["m"]),
        int(p["n"]),
        _parse_space(p["J"]),
        inert_asserted=True,
        justification=p["inert_justification"],
    )
    result, table, prov = _verdict_payload(
        pres.as_cofiber(), n, p["inert_justification"]
    )
    result["cofiber_space"] = to_text(pres.cofiber_space())
    req = {
        "m": pres.m,
        "n": pres.n,
        "J": to_text(pres.J),
        "inert_justification": p["inert_justification"],
        "max_degree": n,
    }
    return req, result, table, prov


def _cmd_free_loop(args):
    limit = BRUTE_DEGREE_LIMIT if args.method == "brute" else RATIONAL_DEGREE_LIMIT
    what = "brute-force Hochschild computation" if args.method == "brute" else ""
    n = _check_degree(args.max_degree, limit, what)
    degrees = tuple(int(part) for part in args.degrees.split(",") if part.strip())
    a = GradedAlphabet(degrees)
    r = free_loop_good_growth(
        a,
        n,
        lam=args.lam,
        epsilon=args.epsilon,
        k_min=args.k_min,
        match_tol=args.match_tol,
        method=args.method,
        threads=args.threads,
    )
    result = {
        "degrees": list(a.degrees),
        "target_log_index": r.target,
        "empirical_log_index": r.empirical,
        "log_index_match": r.log_index_match,
        "match_tol": r.match_tol,
        "growth_check": {
            "passed": r.check.passed,
            "sequence": list(r.check.sequence),
            "alphas": list(r.check.alphas),
            "lambda": r.check.lam,
            "epsilon": r.check.epsilon,
            "k_min": r.check.k_min,
        },
        "passed": r.passed,
        "method": args.method,
    }
    t = r.table
    table = {
        "columns": ["degree", "hh0", "hh1", "lx"],
        "rows": [
            [k, t.hh0[k], t.hh1[k], t.lx[k]] for k in range(t.trunc_degree + 1)
        ],
    }
    prov = [
        _computed(
            "free-loop dimension table from signed cyclic coinvariants of the "
            "tensor algebra, kernel layer by rank-nullity"
        ),
        _computed("target log index from the certified radius of the loop series"),
        _computed("finite controlled-growth certificate over the requested window"),
    ]
    req = {
        "degrees": list(a.degrees),
        "max_degree": n,
        "lambda": args.lam,
        "epsilon": args.epsilon,
        "k_min": args.k_min,
        "match_tol": r.match_tol,
        "method": args.method,
    }
    return req, result, table, prov


def _cmd_hm_census(args):
    n = _check_degree(args.max_degree)
    census = hilton_milnor_census(args.m, args.n, n)
    expected = expand(
        GradedAlphabet((args.m - 1, args.n - 1)).loop_gf(), n
    ).as_dims()
    reconstruction_ok = census.reconstruct().as_dims() == tuple(expected)
    tail = max(1, min(args.k_min, n))
    rate = log_index_empirical(census.factor_counts(), tail)
    result = {
        "generators": list(census.generators),
        "total_factors": sum(census.factors.values()),
        "max_factor_dimension": max(census.factors, default=0),
        "reconstruction_ok": reconstruction_ok,
        "census_log_index": rate,
    }
    table = {
        "columns": ["sphere_dimension", "multiplicity"],
        "rows": [[d, c] for d, c in census.factors.items()],
    }
    prov = [
        _cited(
            "loops on a wedge of two spheres split as a product of loops on "
            "spheres indexed by basic products",
            "product decomposition of loops on a two-sphere wedge",
        ),
        _computed("multiplicities by the bivariate Witt formula over Lyndon words"),
        _computed("reconstruction cross-check against the word-counting series"),
        _computed("census growth rate as the empirical log index of factor counts"),
    ]
    req = {"m": args.m, "n": args.n, "max_degree": n, "k_min": args.k_min}
    return req, result, table, prov


def _cmd_torsion(args):
    n = _check_degree(args.max_degree)
    excluded = PrimeSet(
        tuple(int(q) for q in args.excluded.split(",") if q.strip())
        if args.excluded
        else ()
    )
    rep = torsion_report(
        args.m, args.n, args.p, args.r, n, excluded=excluded, tail_start=args.k_min
    )
    result = {
        "prime": rep.prime,
        "r": rep.r,
        "exponent_witness": rep.exponent_witness,
        "census_log_index": rep.census_log_index,
        "excluded": list(rep.excluded.primes),
        "prime_excluded": rep.prime_excluded,
        "model_id": rep.model_id,
    }
    table = {
        "columns": ["degree", "t_lower"],
        "rows": [[d, c] for d, c in rep.t_lower.items()],
    }
    prov = [
        _cited(
            f"a sphere factor of dimension {rep.exponent_witness} carries "
            f"p-power torsion of exponent at least p^{rep.r}",
            "growth of sphere exponents with dimension",
        ),
        _model(
            "per-degree torsion lower bounds count one class per qualifying "
            "loop-sphere factor at its first possible torsion degree",
            rep.model_id,
        ),
        _computed("census growth rate as the empirical log index of factor counts"),
    ]
    req = {
        "m": args.m,
        "n": args.n,
        "p": args.p,
        "r": args.r,
        "max_degree": n,
        "k_min": args.k_min,
        "excluded": list(excluded.primes),
    }
    return req, result, table, prov


def _cmd_primes(args):
    ps = primes_set(args.d, args.s)
    result = {"d": args.d, "s": args.s, "primes": list(ps.primes)}
    table = {"columns": ["prime"], "rows": [[p] for p in ps.primes]}
    prov = [
        _cited(
            "suspensions split p-locally into wedges of spheres away from these primes",
            "p-local splitting of suspensions",
        ),
        _computed("primes q with 2q <= d - s + 1"),
    ]
    return {"d": args.d, "s": args.s}, result, table, prov


def _cmd_retraction(args):
    A = parse(args.A)
    Z = parse(args.Z)
    rep = retraction_report(A, Z)
    result = {
        "m": rep.m,
        "n": rep.n,
        "excluded": list(rep.excluded.primes),
    }
    table = _kv_table(
        [("m", rep.m), ("n", rep.n), ("excluded", ",".join(map(str, rep.excluded.primes)))]
    )
    prov = [
        _cited(
            f"loops on S^{rep.m} v S^{rep.n} retract off the loops of the cofiber "
            "away from the excluded primes",
            "two-sphere wedge retraction off loops of an inert cofiber",
        ),
        _computed("m from the wedge decomposition of the suspension of A"),
        _computed("n from the least nonvanishing reduced homology degree of Z"),
        _computed("excluded primes from both structural profiles"),
    ]
    return {"A": args.A, "Z": args.Z}, result, table, prov


_HANDLERS = {
    "parse": _cmd_parse,
    "homology": _cmd_homology,
    "loop-series": _cmd_loop_series,
    "rho": _cmd_rho,
    "log-index": _cmd_log_index,
    "cofiber": _cmd_cofiber,
    "connsum": _cmd_connsum,
    "yclass": _cmd_yclass,
    "free-loop": _cmd_free_loop,
    "hm-census": _cmd_hm_census,
    "torsion": _cmd_torsion,
    "primes": _cmd_primes,
    "retraction": _cmd_retraction,
}


# -- argument parsing ----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-degree", type=int, default=40, metavar="N")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--lambda", dest="lam", type=float, default=1.5)
    common.add_argument("--epsilon", type=float, default=0.1)
    common.add_argument("--k-min", type=int, default=10)
    common.add_argument("--threads", type=int, default=1)

    top = argparse.ArgumentParser(
        prog="loopgrowth",
        description="growth invariants of loop spaces and free loop spaces",
    )
    top.add_argument("--version", action="version", version=f"loopgrowth {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add("parse", help="echo the canonical form and syntax tree")
    p.add_argument("expr")
    p = add("homology", help="rational homology polynomial and profile")
    p.add_argument("expr")
    p = add("loop-series", help="loop-space homology series and radius")
    p.add_argument("expr")
    p = add("rho", help="certified radius of convergence of the loop series")
    p.add_argument("expr")
    p = add("log-index", help="exact and empirical log index of the loop series")
    p.add_argument("expr")

    p = add("cofiber", help="growth verdict for an asserted-inert cofibration")
    p.add_argument("--A", help="cofiber attachment source (suspended)")
    p.add_argument("--Z", help="cofiber of the attachment")
    p.add_argument("--inert", help="why the attaching map is inert (recorded)")
    p.add_argument("--file", help="presentation file (JSON)")

    p = add("connsum", help="growth verdict for a connected sum")
    p.add_argument("--A", help="collar attachment source")
    p.add_argument("--M", help="first summand")
    p.add_argument("--N", help="second summand")
    p.add_argument("--inert", help="why the collar attachment is inert (recorded)")
    p.add_argument("--file", help="presentation file (JSON)")

    p = add("yclass", help="growth verdict for a two-cone sphere-product class")
    p.add_argument("--m", type=int, help="lower sphere dimension")
    p.add_argument("--n", type=int, help="total dimension")
    p.add_argument("--J", help="suspended attachment source")
    p.add_argument("--inert", help="why the attaching map is inert (recorded)")
    p.add_argument("--file", help="presentation file (JSON)")

    p = add("free-loop", help="free-loop growth check for a wedge of spheres")
    p.add_argument("--degrees", required=True, help="generator degrees, e.g. 2,2")
    p.add_argument("--method", choices=("necklace", "brute"), default="necklace")
    p.add_argument(
        "--match-tol",
        type=float,
        default=None,
        help="log-index agreement tolerance (default 3.2/N, i.e. 0.08 at N=40)",
    )

    p = add("hm-census", help="sphere-factor census of loops on S^m v S^n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("torsion", help="exponent witness and modeled torsion lower bounds")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--excluded", help="comma-separated excluded primes")

    p = add("primes", help="excluded primes for a (dimension, connectivity) profile")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, required=True)

    p = add("retraction", help="sphere pair retracting off loops of a cofiber")
    p.add_argument("--A", required=True)
    p.add_argument("--Z", required=True)

    return top


# -- report assembly -----------------------------------------------------------


def _render_csv(table: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table["columns"])
    for row in table["rows"]:
        writer.writerow(row)
    return buf.getvalue()


def _emit(report: dict, fmt: str, out) -> None:
    if fmt == "csv" and "table" in report:
        out.write(_render_csv(report["table"]))
    else:
        out.write(json.dumps(report, indent=2))
        out.write("\n")


def _error_report(command, kind, message, **extra) -> dict:
    err = {"kind": kind, "message": message}
    err.update(extra)
    return {"schema": SCHEMA_ID, "command": command or "", "error": err}


def run(argv, out) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "json")
    try:
        request, result, table, provenance = _HANDLERS[args.command](args)
    except ParseError as e:
        report = _error_report(
            args.command,
            KIND_PARSE,
            str(e),
            offset=e.offset,
            expected=list(e.expected),
        )
        _emit(report, "json", out)
        return 2
    except HypothesisError as e:
        _emit(_error_report(args.command, KIND_HYPOTHESIS, str(e)), "json", out)
        return 1
    except NotExpressibleError as e:
        _emit(_error_report(args.command, KIND_NOT_EXPRESSIBLE, str(e)), "json", out)
        return 1
    except ValueError as e:
        _emit(_error_report(args.command, KIND_VALIDATION, str(e)), "json", out)
        return 1
    report = {
        "schema": SCHEMA_ID,
        "command": args.command,
        "engine": {"name": "loopgrowth", "version": __version__},
        "request": request,
        "result": result,
        "table": table,
        "provenance": provenance,
    }
    _emit(report, fmt, out)
    return 0


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
