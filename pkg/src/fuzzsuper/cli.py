"""Command line interface: verification suites, convergence tables,
cohomology reports, and direct access to the exact polynomial oracle.

Four subcommands:

    fuzzsuper verify      run residual checks and exit nonzero on failure
    fuzzsuper converge    structure constants against the classical limit
    fuzzsuper cohomology  Betti numbers with singular-value gap evidence
    fuzzsuper oracle      evaluate exact supersphere expressions

Output formats: text (default), json, csv.  Floats in csv carry 17
significant digits, enough to round-trip doubles.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import __version__
from .calculus import (
    CohomologyReport,
    EXPECTED_BETTI_BODY,
    EXPECTED_BETTI_SUPER,
    SuperForm,
    body_cochain_map,
    body_context,
    center_cohomology_dims,
    cohomology_dims,
    d_matrix,
    exterior_d,
    form_to_vec,
    interior,
    invariant_one_forms,
    lambda_form,
    lie_derivative,
    maurer_cartan,
    random_superform,
    super_context,
    vec_to_form,
    wedge,
)
from .continuum import (
    SuperPoly,
    berezin_radial_sum,
    classical_harmonic,
    cross_involution,
    format_superpoly,
    harmonic_sign,
    inner_S,
    inner_S_exact,
    normal_form,
    parse_superpoly,
    sphere_relation,
    structure_constant_classical,
)
from .continuum import QQi, QQI_ONE
from .fuzzy import (
    FuzzyElement,
    FuzzySphere,
    FuzzySuperSphere,
    HarmonicLabel,
    all_labels,
    body_label_image,
    body_map_fuzzy,
    body_map_matrix,
    fuzzy_product,
    psi_q,
    psi_q_inv,
    structure_constant_fuzzy,
)
from .graded import (
    GradedMatrix,
    hs_inner,
    indefinite_inner,
    numerical_rank,
    random_graded_matrix,
)
from .osp import build_osp_basis, bracket_residual, jacobi_residual, verify_grade_star

MAX_LEVEL_WITHOUT_OPT_IN = 60


@dataclasses.dataclass
class CheckResult:
    suite: str
    name: str
    q: Optional[int]
    residual: float
    tol: float
    info: str = ""

    @property
    def passed(self) -> bool:
        return self.residual <= self.tol

    def row(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "q": self.q,
            "residual": self.residual,
            "tol": self.tol,
            "passed": self.passed,
            "info": self.info,
        }


# ---------------------------------------------------------------------------
# verify suites


def _suite_algebra(q: int, rho: float, tol: float, rng) -> List[CheckResult]:
    basis = build_osp_basis()
    sphere = FuzzySuperSphere(q, rho)
    rep = sphere.rep
    out = [
        CheckResult("algebra", "jacobi identity", None, jacobi_residual(basis), tol),
        CheckResult("algebra", "irrep brackets", q, bracket_residual(rep, basis), tol),
        CheckResult("algebra", "grade star 0", q, verify_grade_star(rep, 0), tol),
    ]
    # the level-1 star is realized through the pairing, not the matrix
    # superadjoint, so it is checked on homogeneous elements
    star1 = {1: (1, 1.0), 2: (2, 1.0), 3: (3, 1.0), 4: (5, -1.0), 5: (4, 1.0)}
    worst = 0.0
    for _ in range(4):
        for pf in (0, 1):
            f = random_graded_matrix(sphere.dims, rng, parity=pf)
            g = random_graded_matrix(sphere.dims, rng)
            for a in (1, 2, 3, 4, 5):
                lhs = indefinite_inner(f, sphere.adjoint_action(a, g))
                target, s = star1[a]
                sign = (-1.0) ** (basis.parities[a - 1] * pf)
                rhs = sign * indefinite_inner(
                    sphere.adjoint_action(target, s * f), g
                )
                worst = max(worst, abs(lhs - rhs))
    out.append(CheckResult("algebra", "pairing under star 1", q, worst, max(tol, 1e-9)))
    return out


def _suite_harmonics(q: int, rho: float, tol: float, rng) -> List[CheckResult]:
    sphere = FuzzySuperSphere(q, rho)
    labels = sphere.labels()
    count_ok = 0.0 if len(labels) == (2 * q + 1) ** 2 else 1.0
    worst = 0.0
    mats = [(la, sphere.harmonic(la)) for la in labels]
    for i, (la, ya) in enumerate(mats):
        for lb, yb in mats[i:]:
            v = indefinite_inner(ya, yb)
            want = la.sign if la == lb else 0.0
            worst = max(worst, abs(v - want))
    body = FuzzySphere(q, rho)
    bworst = 0.0
    bmats = [(lb, body.harmonic(lb)) for lb in body.labels()]
    for i, (la, ya) in enumerate(bmats):
        for lb, yb in bmats[i:]:
            v = hs_inner(ya, yb)
            want = 1.0 if la == lb else 0.0
            bworst = max(bworst, abs(v - want))
    return [
        CheckResult("harmonics", "label count", q, count_ok, 0.0),
        CheckResult("harmonics", "graded gram", q, worst, tol),
        CheckResult("harmonics", "body gram", q, bworst, tol),
    ]


def _suite_casimir(q: int, rho: float, tol: float, rng) -> List[CheckResult]:
    sphere = FuzzySuperSphere(q, rho)
    body = FuzzySphere(q, rho)
    return [
        CheckResult("casimir", "graded radius relation", q, sphere.casimir_residual(), tol),
        CheckResult("casimir", "body radius relation", q, body.casimir_residual(), tol),
    ]


def _suite_products(q: int, rho: float, tol: float, rng) -> List[CheckResult]:
    sphere = FuzzySuperSphere(q, rho)
    out = []
    worst = 0.0
    for two_j1 in range(0, 2 * q + 1):
        for two_j2 in range(two_j1, 2 * q + 1):
            if two_j1 + two_j2 > 2 * q or two_j1 + two_j2 > 6:
                continue
            sc = structure_constant_fuzzy(q, two_j1, two_j2, sphere)
            worst = max(worst, sc.residual)
    out.append(CheckResult("products", "highest-weight proportionality", q, worst, tol))
    # dual route: same constant through the full coefficient product
    two_j1, two_j2 = (1, 2) if q >= 2 else (1, 1)
    e1 = FuzzyElement(q, {HarmonicLabel(two_j1, 0, two_j1): 1.0})
    e2 = FuzzyElement(q, {HarmonicLabel(two_j2, 0, two_j2): 1.0})
    prod = fuzzy_product(e1, e2, sphere)
    via_coeffs = prod.get(HarmonicLabel(two_j1 + two_j2, 0, two_j1 + two_j2))
    direct = structure_constant_fuzzy(q, two_j1, two_j2, sphere).c
    out.append(
        CheckResult(
            "products",
            "coefficient route agreement",
            q,
            abs(via_coeffs - direct),
            max(tol, 1e-10),
        )
    )
    return out


def _suite_body(q: int, rho: float, tol: float, rng) -> List[CheckResult]:
    sphere = FuzzySuperSphere(q, rho)
    body = FuzzySphere(q, rho)
    coords = sphere.coordinates()
    bcoords = body.coordinates()
    worst = 0.0
    for k in range(3):
        worst = max(worst, float(np.linalg.norm(body_map_fuzzy(coords[k], sphere, body) - bcoords[k])))
    for k in (3, 4):
        worst = max(worst, float(np.linalg.norm(body_map_fuzzy(coords[k], sphere, body))))
    eq_worst = 0.0
    for _ in range(3):
        f = random_graded_matrix(sphere.dims, rng)
        for a in (1, 2, 3):
            lhs = body_map_fuzzy(sphere.adjoint_action(a, f), sphere, body)
            rhs = body.adjoint_action(a, body_map_fuzzy(f, sphere, body))
            eq_worst = max(eq_worst, float(np.linalg.norm(lhs - rhs)))
    mat = body_map_matrix(sphere, body)
    kernel = mat.shape[1] - numerical_rank(mat)
    expect = (2 * q + 1) ** 2 - (q + 1) ** 2
    return [
        CheckResult("body", "coordinates map across", q, worst, tol),
        CheckResult("body", "rotation equivariance", q, eq_worst, tol),
        CheckResult("body", "kernel dimension", q, abs(kernel - expect), 0.0),
    ]


def _suite_calculus(q: int, rho: float, tol: float, rng) -> List[CheckResult]:
    ctx = super_context(q, rho)
    out = []
    worst_d2 = 0.0
    worst_magic = 0.0
    for p in (0, 1, 2):
        for parity in (0, 1):
            w = random_superform(ctx, p, rng, parity)
            worst_d2 = max(worst_d2, exterior_d(exterior_d(w)).norm())
            dw = exterior_d(w)
            for a in ctx.labels:
                lhs = interior(a, dw)
                rhs = ((-1) ** (ctx.label_parity(a) * parity)) * lie_derivative(a, w)
                if p > 0:
                    rhs = rhs - exterior_d(interior(a, w))
                worst_magic = max(worst_magic, (lhs - rhs).norm())
    out.append(CheckResult("calculus", "d squared", q, worst_d2, tol))
    out.append(CheckResult("calculus", "cartan magic formula", q, worst_magic, tol))
    w1 = random_superform(ctx, 1, rng, 0)
    w2 = random_superform(ctx, 1, rng, 1)
    ww = wedge(w1, w2)
    leib = (exterior_d(ww) - (wedge(exterior_d(w1), w2) - wedge(w1, exterior_d(w2)))).norm()
    out.append(CheckResult("calculus", "wedge leibniz", q, leib, tol))
    w = random_superform(ctx, 1, rng)
    r = (vec_to_form(ctx, 2, d_matrix(ctx, 1) @ form_to_vec(w)) - exterior_d(w)).norm()
    out.append(CheckResult("calculus", "matrix assembly", q, r, tol))
    return out


def _suite_maurer_cartan(q: int, rho: float, tol: float, rng) -> List[CheckResult]:
    ctx = super_context(q, rho)
    lam = maurer_cartan(ctx)
    r1 = (exterior_d(lam) - wedge(lam, lam)).norm()
    f = SuperForm.from_scalar(ctx, random_graded_matrix(ctx.dims, rng))
    r2 = (exterior_d(f) - (wedge(lam, f) - wedge(f, lam))).norm()
    r3 = max(lie_derivative(a, lam).norm() for a in ctx.labels)
    dec = invariant_one_forms(ctx)
    dim = ctx.n**2 * len(ctx.index_tuples(1)) - dec.rank
    return [
        CheckResult("maurer-cartan", "structure equation", q, r1, tol),
        CheckResult("maurer-cartan", "d as a bracket", q, r2, tol),
        CheckResult("maurer-cartan", "invariance", q, r3, tol),
        CheckResult("maurer-cartan", "invariant space dimension", q, abs(dim - 1), 0.0),
    ]


def _suite_oracle(q: int, rho_frac: Fraction, tol: float, rng) -> List[CheckResult]:
    one = SuperPoly.one()
    unit = abs(complex(inner_S_exact(one, one, rho_frac)[0]) - 1.0)
    rel = sphere_relation(rho_frac)
    ideal_worst = 0.0
    pyrng = np.random.default_rng(abs(hash(("oracle", str(rho_frac)))) % 2**32)
    for _ in range(10):
        comps = []
        for _ in range(4):
            comp = {}
            for _ in range(3):
                key = tuple(int(x) for x in pyrng.integers(0, 3, size=3))
                comp[key] = QQi(
                    Fraction(int(pyrng.integers(-9, 10)), int(pyrng.integers(1, 7))),
                    Fraction(int(pyrng.integers(-9, 10)), int(pyrng.integers(1, 7))),
                )
            comps.append(comp)
        g = SuperPoly(*comps)
        if not berezin_radial_sum(rel * g, rho_frac).is_zero():
            ideal_worst = 1.0
    gram_worst = 0.0
    labels = []
    for two_j in range(0, 4):
        for mu in (0, 1):
            if mu == 1 and two_j == 0:
                continue
            two_l = two_j - mu
            for two_m in range(two_l, -two_l - 1, -2):
                labels.append((two_j, mu, two_m))
    harms = [(lab, classical_harmonic(*lab, rho_frac)) for lab in labels]
    for i, (la, ya) in enumerate(harms):
        for lb, yb in harms[i:]:
            v = inner_S(ya, yb, rho_frac)
            want = harmonic_sign(la[0], la[1]) if la == lb else 0.0
            gram_worst = max(gram_worst, abs(v - want))
    return [
        CheckResult("oracle", "unit normalization", None, unit, 0.0),
        CheckResult("oracle", "ideal integrates to zero", None, ideal_worst, 0.0),
        CheckResult("oracle", "classical gram", None, gram_worst, max(tol, 1e-12)),
    ]


SUITES = {
    "algebra": _suite_algebra,
    "harmonics": _suite_harmonics,
    "casimir": _suite_casimir,
    "products": _suite_products,
    "body": _suite_body,
    "calculus": _suite_calculus,
    "maurer-cartan": _suite_maurer_cartan,
    "oracle": _suite_oracle,
}


# ---------------------------------------------------------------------------
# rendering


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _render_checks(results: List[CheckResult], meta: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"meta": meta, "results": [r.row() for r in results]}, indent=2)
    if fmt == "csv":
        lines = ["suite,name,q,residual,tol,passed"]
        for r in results:
            lines.append(
                f"{r.suite},{r.name},{'' if r.q is None else r.q},"
                f"{_fmt(r.residual)},{_fmt(r.tol)},{r.passed}"
            )
        return "\n".join(lines)
    width = max((len(f"{r.suite}: {r.name}") for r in results), default=20)
    lines = [f"# seed={meta.get('seed')} rho={meta.get('rho')} version={meta.get('version')}"]
    for r in results:
        tag = "PASS" if r.passed else "FAIL"
        qtxt = f" q={r.q}" if r.q is not None else ""
        lines.append(
            f"{tag}  {f'{r.suite}: {r.name}':<{width}}{qtxt}  residual={r.residual:.3e}  tol={r.tol:.1e}"
        )
    n_fail = sum(1 for r in results if not r.passed)
    lines.append(f"# {len(results) - n_fail}/{len(results)} checks passed")
    return "\n".join(lines)


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands


def _parse_half(value: str, parser: argparse.ArgumentParser, flag: str) -> int:
    """Spin given as '1', '3/2' or '1.5'; returns the doubled integer."""
    try:
        frac = Fraction(value)
    except (ValueError, ZeroDivisionError):
        parser.error(f"{flag} must be a half-integer, got {value!r}")
    doubled = frac * 2
    if doubled.denominator != 1 or doubled < 0:
        parser.error(f"{flag} must be a non-negative half-integer, got {value!r}")
    return int(doubled)


def _validate_level(q: int, allow_large: bool, parser: argparse.ArgumentParser) -> None:
    if q < 1:
        parser.error("level q must be a positive integer")
    if q > MAX_LEVEL_WITHOUT_OPT_IN and not allow_large:
        parser.error(
            f"level q={q} builds matrices of size {(2 * q + 1)}^2; pass --allow-large to proceed"
        )


def cmd_verify(args, parser) -> int:
    qs = args.q_list or [args.q]
    for q in qs:
        _validate_level(q, args.allow_large, parser)
    if args.suite != "all" and args.suite not in SUITES:
        parser.error(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all")
    rng = np.random.default_rng(args.seed)
    rho_frac = Fraction(args.rho)
    rho = float(rho_frac)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results: List[CheckResult] = []
    for q in qs:
        for name in names:
            fn = SUITES[name]
            if name == "oracle":
                results.extend(fn(q, rho_frac, args.tol, rng))
            else:
                results.extend(fn(q, rho, args.tol, rng))
    meta = {
        "command": "verify",
        "version": __version__,
        "seed": args.seed,
        "rho": str(rho_frac),
        "tol": args.tol,
        "q": qs,
        "suites": names,
    }
    _emit(_render_checks(results, meta, args.format), args.out)
    return 0 if all(r.passed for r in results) else 1


def cmd_converge(args, parser) -> int:
    two_j1 = _parse_half(args.j1, parser, "--j1")
    two_j2 = _parse_half(args.j2, parser, "--j2")
    qs = args.q_list or [10, 20, 40]
    for q in qs:
        _validate_level(q, args.allow_large, parser)
    rho_frac = Fraction(args.rho)
    c_cl, resid_cl = structure_constant_classical(two_j1, two_j2, rho_frac)
    rows = []
    notes = []
    for q in qs:
        if two_j1 + two_j2 > 2 * q:
            notes.append(f"q={q}: superspin {(two_j1 + two_j2) / 2} exceeds the cutoff, skipped")
            continue
        sc = structure_constant_fuzzy(q, two_j1, two_j2)
        rows.append(
            {
                "j1": two_j1 / 2,
                "j2": two_j2 / 2,
                "q": q,
                "c_fuzzy": sc.c,
                "c_classical": c_cl,
                "abs_delta": abs(sc.c - c_cl),
                "residual_fuzzy": sc.residual,
            }
        )
    meta = {
        "command": "converge",
        "version": __version__,
        "rho": str(rho_frac),
        "classical_residual": resid_cl,
        "notes": notes,
    }
    if args.format == "json":
        text = json.dumps({"meta": meta, "rows": rows}, indent=2)
    elif args.format == "csv":
        lines = ["j1,j2,q,c_fuzzy,c_classical,abs_delta"]
        for r in rows:
            lines.append(
                f"{r['j1']},{r['j2']},{r['q']},{_fmt(r['c_fuzzy'])},"
                f"{_fmt(r['c_classical'])},{_fmt(r['abs_delta'])}"
            )
        text = "\n".join(lines)
    else:
        lines = [f"# c classical = {c_cl:.12f} (residual {resid_cl:.1e})"]
        for r in rows:
            lines.append(
                f"q={r['q']:>3}  c={r['c_fuzzy']:.12f}  |delta|={r['abs_delta']:.3e}"
            )
        lines.extend(f"# {n}" for n in notes)
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0


def cmd_cohomology(args, parser) -> int:
    _validate_level(args.q, args.allow_large, parser)
    ctx = super_context(args.q, float(Fraction(args.rho)))
    bctx = body_context(args.q, float(Fraction(args.rho)))
    p_super = args.pmax
    p_body = min(args.pmax, 3)
    rep_s = cohomology_dims(ctx, p_super, args.tol)
    rep_b = cohomology_dims(bctx, p_body, args.tol)
    rep_c = center_cohomology_dims(ctx, p_super, args.tol)
    expected_s = EXPECTED_BETTI_SUPER[: p_super + 1]
    expected_b = EXPECTED_BETTI_BODY[: p_body + 1]
    ok = (
        not rep_s.inconclusive
        and not rep_b.inconclusive
        and not rep_c.inconclusive
        and rep_s.betti == expected_s
        and rep_b.betti == expected_b
        and rep_c.betti == rep_s.betti
    )
    payload = {
        "meta": {
            "command": "cohomology",
            "version": __version__,
            "q": args.q,
            "tol": args.tol,
            "expected_super": list(expected_s),
            "expected_body": list(expected_b),
        },
        "super": rep_s.to_json(),
        "body": rep_b.to_json(),
        "center_crosscheck": rep_c.to_json(),
        "ok": ok,
    }
    if args.format == "json":
        text = json.dumps(payload, indent=2)
    elif args.format == "csv":
        lines = ["complex,p,dim,betti,rank,sv_gap"]
        for tag, rep in (("super", rep_s), ("body", rep_b), ("center", rep_c)):
            for p in range(rep.p_max + 1):
                dec = rep.decisions[p]
                lines.append(
                    f"{tag},{p},{rep.dims[p]},{rep.betti[p]},{dec.rank},{_fmt(dec.gap)}"
                )
        text = "\n".join(lines)
    else:
        lines = []
        for tag, rep, exp in (
            ("super", rep_s, expected_s),
            ("body", rep_b, expected_b),
            ("center", rep_c, expected_s),
        ):
            status = "ok" if tuple(rep.betti) == tuple(exp) and not rep.inconclusive else "MISMATCH"
            lines.append(
                f"{tag:<7} betti={list(rep.betti)} expected={list(exp)} "
                f"min sv-gap={rep.min_gap:.2e} [{status}]"
            )
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0 if ok else 1


def cmd_oracle(args, parser) -> int:
    rho = Fraction(args.rho)
    op = args.op
    if op in ("normal-form", "cross", "integral") and not args.expr:
        parser.error(f"--expr is required for {op}")
    if op == "inner" and (not args.expr or not args.expr2):
        parser.error("--expr and --expr2 are required for inner")
    if op == "normal-form":
        cls = normal_form(parse_superpoly(args.expr), rho)
        _emit(format_superpoly(cls.poly), args.out)
        return 0
    if op == "cross":
        _emit(format_superpoly(cross_involution(parse_superpoly(args.expr))), args.out)
        return 0
    if op == "integral":
        core = berezin_radial_sum(parse_superpoly(args.expr), rho)
        val = 2 * math.pi * complex(core)
        _emit(
            f"(2*pi) * ({core.re}{'+' if core.im >= 0 else '-'}{abs(core.im)}i) = {val}",
            args.out,
        )
        return 0
    if op == "inner":
        core, scale = inner_S_exact(
            parse_superpoly(args.expr), parse_superpoly(args.expr2), rho
        )
        val = complex(core) * float(scale)
        _emit(f"exact core = {core.re}{'+' if core.im >= 0 else '-'}{abs(core.im)}i, value = {val}", args.out)
        return 0
    if op == "harmonic":
        if args.j1 is None:
            parser.error("--j1 (the superspin) is required for harmonic")
        two_j = _parse_half(args.j1, parser, "--j1")
        mu = args.mu
        two_m = _parse_half(args.m, parser, "--m") if args.m is not None else two_j - mu
        if args.m is not None and Fraction(args.m) < 0:
            two_m = -two_m
        try:
            cls = classical_harmonic(two_j, mu, two_m, rho)
        except ValueError as exc:
            parser.error(str(exc))
        _emit(
            f"scale = {cls.scale.coef} * sqrt({cls.scale.rad})\npoly  = {format_superpoly(cls.poly)}",
            args.out,
        )
        return 0
    if op == "classical-c":
        if args.j1 is None or args.j2 is None:
            parser.error("--j1 and --j2 are required for classical-c")
        two_j1 = _parse_half(args.j1, parser, "--j1")
        two_j2 = _parse_half(args.j2, parser, "--j2")
        c, resid = structure_constant_classical(two_j1, two_j2, rho)
        _emit(f"c = {_fmt(c)} (residual {resid:.3e})", args.out)
        return 0
    parser.error(f"unknown oracle op {op!r}")
    return 2


# ---------------------------------------------------------------------------
# argument parsing


def _int_list(text: str) -> List[int]:
    return [int(tok) for tok in text.replace(" ", "").split(",") if tok]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzsuper",
        description="Matrix supersphere truncations: harmonics, calculus, cohomology.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_seed=True):
        p.add_argument("--rho", default="1", help="sphere radius, rational or decimal (default 1)")
        p.add_argument("--tol", type=float, default=1e-8, help="tolerance (default 1e-8)")
        if with_seed:
            p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", help="write the report to this file instead of stdout")
        p.add_argument("--allow-large", action="store_true", help="permit levels q > 60")

    p_verify = sub.add_parser("verify", help="run residual check suites")
    p_verify.add_argument("--q", type=int, default=2, help="truncation level (default 2)")
    p_verify.add_argument("--q-list", type=_int_list, help="comma-separated levels")
    p_verify.add_argument(
        "--suite", default="all", help=f"one of: {', '.join(SUITES)}, all (default all)"
    )
    common(p_verify)

    p_conv = sub.add_parser("converge", help="structure constants against the classical value")
    p_conv.add_argument("--j1", required=True, help="first superspin (e.g. 1/2)")
    p_conv.add_argument("--j2", required=True, help="second superspin")
    p_conv.add_argument("--q-list", type=_int_list, help="levels (default 10,20,40)")
    common(p_conv, with_seed=False)

    p_coh = sub.add_parser("cohomology", help="Betti numbers with sv-gap evidence")
    p_coh.add_argument("--q", type=int, default=1, help="truncation level (default 1)")
    p_coh.add_argument("--pmax", type=int, default=5, help="top degree (default 5)")
    common(p_coh, with_seed=False)

    p_or = sub.add_parser("oracle", help="exact classical-side computations")
    p_or.add_argument(
        "--op",
        required=True,
        choices=("normal-form", "cross", "integral", "inner", "harmonic", "classical-c"),
    )
    p_or.add_argument("--expr", help="superpolynomial, e.g. '1/2 * x1 x3 + i * t4'")
    p_or.add_argument("--expr2", help="second operand for inner")
    p_or.add_argument("--j1", help="superspin argument")
    p_or.add_argument("--j2", help="second superspin argument")
    p_or.add_argument("--mu", type=int, default=0, choices=(0, 1))
    p_or.add_argument("--m", help="magnetic label (default: highest weight)")
    common(p_or, with_seed=False)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "verify": cmd_verify,
        "converge": cmd_converge,
        "cohomology": cmd_cohomology,
        "oracle": cmd_oracle,
    }
    return handlers[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
