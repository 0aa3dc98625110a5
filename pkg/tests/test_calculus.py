import itertools

import numpy as np
import pytest

from fuzzsuper.calculus import (
    EXPECTED_BETTI_BODY,
    EXPECTED_BETTI_SUPER,
    SuperForm,
    body_cochain_map,
    body_context,
    center_cohomology_dims,
    cohomology_dims,
    d_matrix,
    eta_forms,
    exterior_d,
    form_to_vec,
    interior,
    invariant_one_forms,
    lambda_form,
    lie_derivative,
    lie_matrix,
    maurer_cartan,
    random_superform,
    super_context,
    vec_to_form,
    wedge,
)
from fuzzsuper.graded import GradedMatrix, random_graded_matrix
from fuzzsuper.osp import build_osp_basis

CTX = super_context(1)
BCTX = body_context(1)
BASIS = build_osp_basis()
RNG = np.random.default_rng(31)


def par(a):
    return CTX.label_parity(a)


def bracket_terms(a, b, w, op):
    out = SuperForm.zero_form(w.ctx, op(1, w).p)
    for ci, coef in enumerate(BASIS.bracket_coeffs(a, b)):
        if coef != 0:
            out = out + complex(coef) * op(ci + 1, w)
    return out


# ---------------------------------------------------------------- shapes


def test_tuple_counts_super():
    # strictly increasing even labels, repeatable odd labels
    want = [1, 5, 12, 20, 28, 36, 44, 52]
    got = [len(CTX.index_tuples(p)) for p in range(8)]
    assert got == want


def test_tuple_counts_body():
    assert [len(BCTX.index_tuples(p)) for p in range(5)] == [1, 3, 3, 1, 0]


def test_sort_signed():
    assert CTX.sort_signed((1, 2)) == ((1, 2), 1)
    assert CTX.sort_signed((2, 1)) == ((1, 2), -1)
    assert CTX.sort_signed((5, 4)) == ((4, 5), 1)  # odd-odd swap is free
    assert CTX.sort_signed((4, 1)) == ((1, 4), -1)
    assert CTX.sort_signed((2, 2)) == (None, 0)  # repeated even kills the value
    assert CTX.sort_signed((4, 4)) == ((4, 4), 1)  # repeated odd is fine


def test_evaluate_respects_antisymmetry():
    w = random_superform(CTX, 2, RNG)
    for a, b in itertools.product(CTX.labels, CTX.labels):
        sign = 1.0 if (par(a) and par(b)) else -1.0
        lhs = w.evaluate((b, a))
        rhs = sign * w.evaluate((a, b))
        assert (lhs - rhs).norm() < 1e-12


def test_lambda_duality():
    for a in CTX.labels:
        lam = lambda_form(CTX, a)
        for b in CTX.labels:
            v = lam.evaluate((b,))
            want = 1.0 if a == b else 0.0
            assert (v - CTX.unit * want).norm() < 1e-14


# ---------------------------------------------------------------- d


@pytest.mark.parametrize("p", [0, 1, 2, 3])
def test_d_squared_zero(p):
    for parity in (0, 1, None):
        w = random_superform(CTX, p, RNG, parity)
        assert exterior_d(exterior_d(w)).norm() < 1e-10


def test_structure_equation_for_duals():
    # d lambda^A = 1/2 sum_{B,C} c^A_{BC} lambda^C wedge lambda^B
    c = BASIS.constants
    for ai, a in enumerate(CTX.labels):
        lhs = exterior_d(lambda_form(CTX, a))
        rhs = SuperForm.zero_form(CTX, 2)
        for bi, b in enumerate(CTX.labels):
            for ci_, cc in enumerate(CTX.labels):
                coef = c[ai, bi, ci_]
                if coef != 0:
                    rhs = rhs + 0.5 * complex(coef) * wedge(
                        lambda_form(CTX, cc), lambda_form(CTX, b)
                    )
        assert (lhs - rhs).norm() < 1e-12


def test_d_on_scalars_is_commutator_with_generators():
    # (df)(D_a) = (-1)^{|a||f|} [E_a, f]: the derivation slides past f
    from fuzzsuper.graded import graded_commutator

    for pf in (0, 1):
        f = random_graded_matrix(CTX.dims, RNG, parity=pf)
        dw = exterior_d(SuperForm.from_scalar(CTX, f))
        for ai, a in enumerate(CTX.labels):
            sign = (-1.0) ** (par(a) * pf)
            want = sign * graded_commutator(CTX.generators[ai], f)
            assert (dw.evaluate((a,)) - want).norm() < 1e-12


# ---------------------------------------------------------------- cartan


def test_magic_formula():
    for p in (0, 1, 2):
        for parity in (0, 1):
            w = random_superform(CTX, p, RNG, parity)
            dw = exterior_d(w)
            for a in CTX.labels:
                lhs = interior(a, dw)
                rhs = ((-1.0) ** (par(a) * parity)) * lie_derivative(a, w)
                if p > 0:
                    rhs = rhs - exterior_d(interior(a, w))
                assert (lhs - rhs).norm() < 1e-10


def test_interior_graded_anticommutation():
    for parity in (0, 1):
        w = random_superform(CTX, 2, RNG, parity)
        for a, b in itertools.product(CTX.labels, CTX.labels):
            k = (-1.0) ** (par(a) * par(b))
            lhs = interior(a, interior(b, w))
            rhs = interior(b, interior(a, w))
            assert (lhs + k * rhs).norm() < 1e-12


def test_lie_interior_bracket():
    # L_a iota_b - iota_b L_a = (-1)^{|a| w} iota_{[a,b]}
    for p in (1, 2):
        for parity in (0, 1):
            w = random_superform(CTX, p, RNG, parity)
            for a, b in itertools.product(CTX.labels, CTX.labels):
                lhs = lie_derivative(a, interior(b, w)) - interior(
                    b, lie_derivative(a, w)
                )
                rhs = ((-1.0) ** (par(a) * parity)) * bracket_terms(a, b, w, interior)
                assert (lhs - rhs).norm() < 1e-10


def test_lie_lie_bracket():
    # graded commutator of Lie derivatives represents the bracket
    for p in (0, 1):
        for parity in (0, 1):
            w = random_superform(CTX, p, RNG, parity)
            for a, b in itertools.product(CTX.labels, CTX.labels):
                k = (-1.0) ** (par(a) * par(b))
                lhs = lie_derivative(a, lie_derivative(b, w)) - k * lie_derivative(
                    b, lie_derivative(a, w)
                )
                rhs = bracket_terms(a, b, w, lie_derivative)
                assert (lhs - rhs).norm() < 1e-10


# ---------------------------------------------------------------- leibniz


def test_wedge_associative():
    w1 = random_superform(CTX, 1, RNG)
    w2 = random_superform(CTX, 1, RNG)
    w3 = random_superform(CTX, 1, RNG)
    lhs = wedge(wedge(w1, w2), w3)
    rhs = wedge(w1, wedge(w2, w3))
    assert (lhs - rhs).norm() < 1e-10


def test_wedge_with_scalars_is_module_action():
    f = random_graded_matrix(CTX.dims, RNG)
    w = random_superform(CTX, 2, RNG)
    fw = wedge(SuperForm.from_scalar(CTX, f), w)
    for t in CTX.index_tuples(2):
        assert (fw.vals[t] - f @ w.vals[t]).norm() < 1e-12


def test_leibniz_for_d():
    for p1, p2 in ((0, 1), (1, 1), (1, 2), (2, 1)):
        for par1, par2 in itertools.product((0, 1), (0, 1)):
            w1 = random_superform(CTX, p1, RNG, par1)
            w2 = random_superform(CTX, p2, RNG, par2)
            lhs = exterior_d(wedge(w1, w2))
            rhs = wedge(exterior_d(w1), w2) + ((-1.0) ** p1) * wedge(
                w1, exterior_d(w2)
            )
            assert (lhs - rhs).norm() < 1e-10


def test_leibniz_for_lie():
    for p1, p2 in ((0, 1), (1, 1), (1, 2)):
        for par1, par2 in itertools.product((0, 1), (0, 1)):
            w1 = random_superform(CTX, p1, RNG, par1)
            w2 = random_superform(CTX, p2, RNG, par2)
            for a in CTX.labels:
                lhs = lie_derivative(a, wedge(w1, w2))
                rhs = wedge(lie_derivative(a, w1), w2) + (
                    (-1.0) ** (par(a) * par1)
                ) * wedge(w1, lie_derivative(a, w2))
                assert (lhs - rhs).norm() < 1e-10


def test_leibniz_for_interior():
    # iota_a (w1 ^ w2) = (-1)^{|a| w2} iota_a w1 ^ w2 + (-1)^{p1} w1 ^ iota_a w2
    for p1, p2 in ((1, 1), (1, 2), (2, 1), (2, 2)):
        for par1, par2 in itertools.product((0, 1), (0, 1)):
            w1 = random_superform(CTX, p1, RNG, par1)
            w2 = random_superform(CTX, p2, RNG, par2)
            for a in CTX.labels:
                lhs = interior(a, wedge(w1, w2))
                rhs = ((-1.0) ** (par(a) * par2)) * wedge(interior(a, w1), w2) + (
                    (-1.0) ** p1
                ) * wedge(w1, interior(a, w2))
                assert (lhs - rhs).norm() < 1e-10


# ---------------------------------------------------------------- invariant form


def test_maurer_cartan_identities():
    lam = maurer_cartan(CTX)
    assert (exterior_d(lam) - wedge(lam, lam)).norm() < 1e-13
    f = SuperForm.from_scalar(CTX, random_graded_matrix(CTX.dims, RNG))
    df = exterior_d(f)
    assert (df - (wedge(lam, f) - wedge(f, lam))).norm() < 1e-12
    for a in CTX.labels:
        assert lie_derivative(a, lam).norm() < 1e-13


def test_invariant_one_form_space_is_a_line():
    dec = invariant_one_forms(CTX)
    dim = CTX.n**2 * len(CTX.index_tuples(1)) - dec.rank
    assert dim == 1
    assert not dec.inconclusive


# ---------------------------------------------------------------- matrices


@pytest.mark.parametrize("p", [0, 1, 2])
def test_d_matrix_matches_pointwise(p):
    w = random_superform(CTX, p, RNG)
    via_matrix = vec_to_form(CTX, p + 1, d_matrix(CTX, p) @ form_to_vec(w))
    assert (via_matrix - exterior_d(w)).norm() < 1e-10


@pytest.mark.parametrize("p", [0, 1, 2])
def test_lie_matrix_matches_pointwise(p):
    w = random_superform(CTX, p, RNG)
    for a in CTX.labels:
        via_matrix = vec_to_form(CTX, p, lie_matrix(CTX, a, p) @ form_to_vec(w))
        assert (via_matrix - lie_derivative(a, w)).norm() < 1e-10


def test_coefficient_round_trip():
    for p in (1, 2, 3):
        w = random_superform(CTX, p, RNG)
        back = SuperForm.from_coefficients(CTX, p, w.coefficients())
        assert (back - w).norm() < 1e-12


def test_coefficient_expansion_reconstructs_by_wedge():
    # w = sum_T  c_T ^ lambda^{T_1} ^ ... ^ lambda^{T_p}
    for p in (1, 2):
        w = random_superform(CTX, p, RNG)
        total = SuperForm.zero_form(CTX, p)
        for t, coeff in w.coefficients().items():
            term = SuperForm.from_scalar(CTX, coeff)
            for a in t:
                term = wedge(term, lambda_form(CTX, a))
            total = total + term
        assert (total - w).norm() < 1e-10


# ---------------------------------------------------------------- cohomology


def test_betti_numbers_super():
    rep = cohomology_dims(CTX, 5)
    assert tuple(rep.betti) == EXPECTED_BETTI_SUPER
    assert not rep.inconclusive
    assert rep.min_gap > 1e-4


def test_betti_numbers_body():
    rep = cohomology_dims(BCTX, 3)
    assert tuple(rep.betti) == EXPECTED_BETTI_BODY
    assert not rep.inconclusive


def test_center_crosscheck_agrees():
    full = cohomology_dims(CTX, 5)
    center = center_cohomology_dims(CTX, 5)
    assert tuple(center.betti) == tuple(full.betti)
    assert not center.inconclusive


def test_report_json_shape():
    rep = cohomology_dims(BCTX, 2)
    js = rep.to_json()
    assert js["betti"] == list(rep.betti)
    assert len(js["ranks"]) == len(js["sv_gaps"]) == 3
    assert js["inconclusive"] is False


# ---------------------------------------------------------------- body, eta


def test_body_cochain_commutes_with_d():
    q = 2
    ctx = super_context(q)
    bctx = body_context(q)
    for p in (0, 1, 2):
        w = random_superform(ctx, p, RNG)
        lhs = body_cochain_map(exterior_d(w), bctx)
        rhs = exterior_d(body_cochain_map(w, bctx))
        assert (lhs - rhs).norm() < 1e-10


def test_body_cochain_rejects_level_mismatch():
    w = random_superform(CTX, 1, RNG)
    with pytest.raises(ValueError):
        body_cochain_map(w, body_context(2))


def test_eta_forms_round_trip():
    ctx1 = super_context(1)
    ctx2 = super_context(2)
    w = random_superform(ctx1, 1, RNG)
    up = eta_forms(w, ctx2)
    back = eta_forms(up, ctx1)
    assert (back - w).norm() < 1e-10
