"""Derivation-based Cartan calculus on the matrix (super)spheres.

Differential forms are graded-alternating multilinear maps from the five
basis derivations (three on the body) into the matrix algebra.  A p-form
is stored by its values on canonical index tuples: even labels strictly
increasing, odd labels non-decreasing, so odd labels may repeat and the
complex does not terminate at the top even degree.

Signs follow one commutation-factor convention throughout: permuting
arguments costs the permutation sign times (-1) for every transposed pair
of odd slots.  The exterior derivative, Lie derivative, interior product
and wedge are all expressed against canonical tuples; the same expansion
assembles d as an explicit matrix on coefficient space, which is what the
cohomology ranks are computed from.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .fuzzy import FuzzySphere, FuzzySuperSphere, body_map_fuzzy, eta, psi_q, psi_q_inv
from .graded import (
    EVEN,
    ODD,
    GradedDims,
    GradedMatrix,
    RankDecision,
    commutation_factor,
    graded_commutator,
    perm_sign,
    rank_decision,
    random_graded_matrix,
)
from .osp import build_osp_basis

Label = int
IndexTuple = Tuple[Label, ...]


class DerivationContext:
    """A matrix algebra together with its distinguished basis derivations.

    Carries the structure constants of the derivation algebra and caches
    canonical index tuples, sorting signs, and wedge expansion plans.  Two
    flavors exist: the five osp(1|2) derivations on the graded algebra and
    their three even companions on the body.
    """

    def __init__(
        self,
        name: str,
        labels: Sequence[Label],
        parities: Sequence[int],
        constants: np.ndarray,
        generators: Sequence[GradedMatrix],
        sphere: Union[FuzzySuperSphere, FuzzySphere],
    ):
        self.name = name
        self.labels = tuple(labels)
        self.parities = tuple(parities)
        self.constants = constants
        self.generators = tuple(generators)
        self.sphere = sphere
        self.dims: GradedDims = generators[0].dims
        self.n = self.dims.total
        self.unit = GradedMatrix.identity(self.dims)
        self._tuples: Dict[int, Tuple[IndexTuple, ...]] = {}
        self._sort_cache: Dict[IndexTuple, Tuple[Optional[IndexTuple], int]] = {}
        self._wedge_plans: Dict[Tuple[int, int, int], dict] = {}

    # -- labels and tuples

    def label_parity(self, a: Label) -> int:
        return self.parities[a - 1]

    def tuple_parity(self, t: IndexTuple) -> int:
        return sum(self.label_parity(a) for a in t) % 2

    def index_tuples(self, p: int) -> Tuple[IndexTuple, ...]:
        """Canonical tuples: strictly increasing evens then repeatable odds."""
        if p not in self._tuples:
            evens = [a for a in self.labels if self.label_parity(a) == EVEN]
            odds = [a for a in self.labels if self.label_parity(a) == ODD]
            out = []
            for k in range(min(len(evens), p), -1, -1):
                for ev in itertools.combinations(evens, k):
                    for od in itertools.combinations_with_replacement(odds, p - k):
                        out.append(ev + od)
            self._tuples[p] = tuple(sorted(out))
        return self._tuples[p]

    def sort_signed(self, t: IndexTuple) -> Tuple[Optional[IndexTuple], int]:
        """Canonical form and reordering sign; (None, 0) for a vanishing slot.

        Each adjacent transposition contributes the permutation sign, and
        one more sign when both entries are odd; a repeated even label
        kills the form value.
        """
        try:
            return self._sort_cache[t]
        except KeyError:
            pass
        arr = list(t)
        sign = 1
        for i in range(1, len(arr)):
            j = i
            while j > 0 and arr[j - 1] > arr[j]:
                if self.label_parity(arr[j - 1]) and self.label_parity(arr[j]):
                    sign = sign  # two odd slots commute at no cost
                else:
                    sign = -sign
                arr[j - 1], arr[j] = arr[j], arr[j - 1]
                j -= 1
        for i in range(1, len(arr)):
            if arr[i - 1] == arr[i] and self.label_parity(arr[i]) == EVEN:
                result = (None, 0)
                self._sort_cache[t] = result
                return result
        result = (tuple(arr), sign)
        self._sort_cache[t] = result
        return result

    # -- the derivations

    def derivation(self, a: Label, f: GradedMatrix) -> GradedMatrix:
        return graded_commutator(self.generators[a - 1], f)

    def bracket_coeffs(self, a: Label, b: Label) -> np.ndarray:
        """[D_a, D_b] = sum_C coeffs[C-1] D_C."""
        return self.constants[:, a - 1, b - 1]

    # -- wedge expansion plans

    def wedge_plan(
        self, p: int, pp: int, par2: int
    ) -> Dict[IndexTuple, List[Tuple[IndexTuple, IndexTuple, Fraction]]]:
        """Aggregated permutation sum for (p-form) wedge (pp-form of parity par2).

        For each canonical output tuple, a list of (left tuple, right
        tuple, rational coefficient): the full signed sum over
        permutations folded down to canonical evaluations.
        """
        key = (p, pp, par2)
        if key in self._wedge_plans:
            return self._wedge_plans[key]
        plan: Dict[IndexTuple, List[Tuple[IndexTuple, IndexTuple, Fraction]]] = {}
        denom = math.factorial(p) * math.factorial(pp)
        for big in self.index_tuples(p + pp):
            pars = tuple(self.label_parity(a) for a in big)
            acc: Dict[Tuple[IndexTuple, IndexTuple], Fraction] = {}
            for sigma in itertools.permutations(range(p + pp)):
                left = tuple(big[sigma[i]] for i in range(p))
                right = tuple(big[sigma[i]] for i in range(p, p + pp))
                lc, ls = self.sort_signed(left)
                if lc is None:
                    continue
                rc, rs = self.sort_signed(right)
                if rc is None:
                    continue
                sgn = perm_sign(sigma) * commutation_factor(sigma, pars)
                koszul = -1 if (par2 and sum(pars[sigma[i]] for i in range(p)) % 2) else 1
                total = Fraction(sgn * koszul * ls * rs, denom)
                acc[(lc, rc)] = acc.get((lc, rc), Fraction(0)) + total
            plan[big] = [(lc, rc, c) for (lc, rc), c in acc.items() if c]
        self._wedge_plans[key] = plan
        return plan


def super_context(q: int, rho: float = 1.0) -> DerivationContext:
    """All five osp(1|2) derivations acting on End(V(q/2))."""
    sphere = FuzzySuperSphere(q, rho)
    basis = build_osp_basis()
    return DerivationContext(
        name=f"supersphere(q={q})",
        labels=(1, 2, 3, 4, 5),
        parities=basis.parities,
        constants=basis.constants,
        generators=tuple(sphere.generator(a) for a in (1, 2, 3, 4, 5)),
        sphere=sphere,
    )


def body_context(q: int, rho: float = 1.0) -> DerivationContext:
    """The three rotation derivations on the bosonic companion algebra."""
    sphere = FuzzySphere(q, rho)
    basis = build_osp_basis()
    dims = GradedDims(sphere.n, 0)
    gens = tuple(GradedMatrix(dims, sphere.rep.matrix(a)) for a in (1, 2, 3))
    return DerivationContext(
        name=f"sphere(q={q})",
        labels=(1, 2, 3),
        parities=(EVEN, EVEN, EVEN),
        constants=basis.constants[:3, :3, :3],
        generators=gens,
        sphere=sphere,
    )


# ---------------------------------------------------------------------------
# forms


@dataclasses.dataclass(frozen=True, eq=False)
class SuperForm:
    """A p-form as a table of algebra values on canonical index tuples."""

    ctx: DerivationContext
    p: int
    vals: Dict[IndexTuple, GradedMatrix]

    def __post_init__(self) -> None:
        complete = {}
        zero = GradedMatrix.zero(self.ctx.dims)
        for t in self.ctx.index_tuples(self.p):
            complete[t] = self.vals.get(t, zero)
        object.__setattr__(self, "vals", complete)

    @classmethod
    def zero_form(cls, ctx: DerivationContext, p: int) -> "SuperForm":
        return cls(ctx, p, {})

    @classmethod
    def from_scalar(cls, ctx: DerivationContext, f: GradedMatrix) -> "SuperForm":
        """A 0-form, i.e. an algebra element."""
        return cls(ctx, 0, {(): f})

    def value(self) -> GradedMatrix:
        if self.p != 0:
            raise ValueError("value() is for 0-forms")
        return self.vals[()]

    def evaluate(self, t: Sequence[Label]) -> GradedMatrix:
        """Value on an arbitrary tuple of basis derivations."""
        if len(t) != self.p:
            raise ValueError(f"expected {self.p} arguments, got {len(t)}")
        canon, sign = self.ctx.sort_signed(tuple(t))
        if canon is None:
            return GradedMatrix.zero(self.ctx.dims)
        return sign * self.vals[canon]

    def __add__(self, other: "SuperForm") -> "SuperForm":
        self._check(other)
        return SuperForm(self.ctx, self.p, {t: self.vals[t] + other.vals[t] for t in self.vals})

    def __sub__(self, other: "SuperForm") -> "SuperForm":
        self._check(other)
        return SuperForm(self.ctx, self.p, {t: self.vals[t] - other.vals[t] for t in self.vals})

    def __mul__(self, s: complex) -> "SuperForm":
        return SuperForm(self.ctx, self.p, {t: s * v for t, v in self.vals.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "SuperForm":
        return self * (-1)

    def _check(self, other: "SuperForm") -> None:
        if self.ctx is not other.ctx or self.p != other.p:
            raise ValueError("form mismatch")

    def norm(self) -> float:
        return max((v.norm() for v in self.vals.values()), default=0.0)

    def parity_part(self, parity: int) -> "SuperForm":
        """The part of the form with total parity |value| + |tuple|."""
        out = {}
        for t, v in self.vals.items():
            want = (parity + self.ctx.tuple_parity(t)) % 2
            out[t] = v.part(want)
        return SuperForm(self.ctx, self.p, out)

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.norm() <= tol

    # -- coefficients in the dual-basis expansion

    def _coeff_scalar(self, t: IndexTuple) -> float:
        odd_count = sum(1 for a in t if self.ctx.label_parity(a))
        mult = 1
        for _, grp in itertools.groupby(a for a in t if self.ctx.label_parity(a)):
            mult *= math.factorial(len(list(grp)))
        return (-1.0) ** (odd_count * (odd_count - 1) // 2) / mult

    def coefficients(self) -> Dict[IndexTuple, GradedMatrix]:
        """Coefficient table of the left-coefficient dual-basis expansion."""
        return {t: self._coeff_scalar(t) * v for t, v in self.vals.items()}

    @classmethod
    def from_coefficients(
        cls, ctx: DerivationContext, p: int, coeffs: Mapping[IndexTuple, GradedMatrix]
    ) -> "SuperForm":
        probe = cls.zero_form(ctx, p)
        vals = {t: (1.0 / probe._coeff_scalar(t)) * v for t, v in coeffs.items()}
        return cls(ctx, p, vals)


def random_superform(
    ctx: DerivationContext,
    p: int,
    rng: np.random.Generator,
    parity: Optional[int] = None,
) -> SuperForm:
    """Random p-form; homogeneous of the given parity when requested."""
    vals = {}
    for t in ctx.index_tuples(p):
        value_parity = None if parity is None else (parity + ctx.tuple_parity(t)) % 2
        vals[t] = random_graded_matrix(ctx.dims, rng, parity=value_parity)
    return SuperForm(ctx, p, vals)


def lambda_form(ctx: DerivationContext, a: Label) -> SuperForm:
    """Dual 1-form: unit on derivation a, zero on the others."""
    if a not in ctx.labels:
        raise ValueError(f"unknown label {a!r}")
    return SuperForm(ctx, 1, {(a,): ctx.unit})


def maurer_cartan(ctx: DerivationContext) -> SuperForm:
    """The invariant 1-form picking out each generator: Lambda(D_a) = E_a."""
    return SuperForm(ctx, 1, {(a,): ctx.generators[a - 1] for a in ctx.labels})


# ---------------------------------------------------------------------------
# the Cartan operations


def wedge(w1: SuperForm, w2: SuperForm) -> SuperForm:
    """Graded wedge; on 0-forms it is left/right multiplication."""
    if w1.ctx is not w2.ctx:
        raise ValueError("forms live on different contexts")
    ctx = w1.ctx
    out: Dict[IndexTuple, GradedMatrix] = {}
    for par2 in (EVEN, ODD):
        part = w2.parity_part(par2)
        if part.is_zero():
            continue
        plan = ctx.wedge_plan(w1.p, w2.p, par2)
        for big, terms in plan.items():
            acc = out.get(big)
            for lc, rc, coeff in terms:
                piece = float(coeff) * (w1.vals[lc] @ part.vals[rc])
                acc = piece if acc is None else acc + piece
            if acc is not None:
                out[big] = acc
    return SuperForm(ctx, w1.p + w2.p, out)


def lie_derivative(a: Label, w: SuperForm) -> SuperForm:
    """L_a: derivation of the value minus substitution into each slot."""
    ctx = w.ctx
    par_a = ctx.label_parity(a)
    out: Dict[IndexTuple, GradedMatrix] = {
        t: ctx.derivation(a, v) for t, v in w.vals.items()
    }
    for i in (EVEN, ODD):
        part = w.parity_part(i)
        if part.is_zero():
            continue
        for t in ctx.index_tuples(w.p):
            pars = [ctx.label_parity(b) for b in t]
            acc = out[t]
            for slot, b in enumerate(t):
                presum = sum(pars[:slot]) % 2
                sign = -1 if (par_a and (i + presum) % 2) else 1
                for c_label in ctx.labels:
                    coef = ctx.constants[c_label - 1, a - 1, b - 1]
                    if coef == 0:
                        continue
                    canon, s = ctx.sort_signed(t[:slot] + (c_label,) + t[slot + 1 :])
                    if canon is None:
                        continue
                    acc = acc - (sign * s * coef) * part.vals[canon]
            out[t] = acc
    return SuperForm(ctx, w.p, out)


def interior(a: Label, w: SuperForm) -> SuperForm:
    """iota_a: plug derivation a into the first slot; zero on 0-forms."""
    ctx = w.ctx
    if w.p == 0:
        return SuperForm.zero_form(ctx, 0)
    out = {t: w.evaluate((a,) + t) for t in ctx.index_tuples(w.p - 1)}
    return SuperForm(ctx, w.p - 1, out)


def exterior_d(w: SuperForm) -> SuperForm:
    """The graded exterior derivative.

    Alternating sum of derivations of punctured values plus the bracket
    substitution sum, each with the parity-aware sign of the slots passed
    over; matches the recursion through the Lie derivative and interior
    product, which the tests pin down.
    """
    ctx = w.ctx
    out: Dict[IndexTuple, GradedMatrix] = {}
    for i in (EVEN, ODD):
        part = w.parity_part(i)
        if part.is_zero():
            continue
        for big in ctx.index_tuples(w.p + 1):
            pars = [ctx.label_parity(b) for b in big]
            acc = out.get(big, GradedMatrix.zero(ctx.dims))
            for l in range(w.p + 1):
                presum = sum(pars[:l]) % 2
                sign = (-1) ** (l + pars[l] * ((i + presum) % 2))
                acc = acc + sign * ctx.derivation(big[l], part.vals[big[:l] + big[l + 1 :]])
            for l in range(w.p + 1):
                for lp in range(l + 1, w.p + 1):
                    mid = sum(pars[l + 1 : lp]) % 2
                    sign = (-1) ** (lp + pars[lp] * mid)
                    for c_label in ctx.labels:
                        coef = ctx.constants[c_label - 1, big[l] - 1, big[lp] - 1]
                        if coef == 0:
                            continue
                        sub = big[:l] + (c_label,) + big[l + 1 : lp] + big[lp + 1 :]
                        canon, s = ctx.sort_signed(sub)
                        if canon is None:
                            continue
                        acc = acc + (sign * s * coef) * part.vals[canon]
            out[big] = acc
    return SuperForm(ctx, w.p + 1, out)


# ---------------------------------------------------------------------------
# d and L as matrices on coefficient space


def _vec_index(ctx: DerivationContext, p: int) -> Dict[IndexTuple, int]:
    return {t: i for i, t in enumerate(ctx.index_tuples(p))}


def _value_sign_diag(ctx: DerivationContext) -> np.ndarray:
    """Diagonal of +-1: +1 on even matrix entries, -1 on odd ones."""
    block = np.ones(ctx.n)
    block[ctx.dims.even :] = -1.0
    return np.kron(block, block)


def _ad_operator(ctx: DerivationContext, a: Label) -> np.ndarray:
    """The graded commutator with E_a as an n^2 x n^2 matrix, row-major vec."""
    e = ctx.generators[a - 1].mat
    eye = np.eye(ctx.n)
    left = np.kron(e, eye)
    right = np.kron(eye, e.T)
    if ctx.label_parity(a) == EVEN:
        return left - right
    return left - right * _value_sign_diag(ctx)[np.newaxis, :]


def form_to_vec(w: SuperForm) -> np.ndarray:
    ctx, p = w.ctx, w.p
    n2 = ctx.n * ctx.n
    out = np.zeros(n2 * len(ctx.index_tuples(p)), dtype=complex)
    for i, t in enumerate(ctx.index_tuples(p)):
        out[i * n2 : (i + 1) * n2] = w.vals[t].mat.reshape(-1)
    return out


def vec_to_form(ctx: DerivationContext, p: int, vec: np.ndarray) -> SuperForm:
    n = ctx.n
    vals = {}
    for i, t in enumerate(ctx.index_tuples(p)):
        vals[t] = GradedMatrix(ctx.dims, vec[i * n * n : (i + 1) * n * n].reshape(n, n))
    return SuperForm(ctx, p, vals)


def d_matrix(ctx: DerivationContext, p: int) -> np.ndarray:
    """d: Omega^p -> Omega^(p+1) on stacked value vectors.

    The substitution terms are scalar blocks; the derivation terms are
    graded-commutator operators twisted by the value-parity sign when the
    inserted slot is odd, which reproduces the form-parity signs without
    splitting the space.
    """
    n2 = ctx.n * ctx.n
    src = _vec_index(ctx, p)
    dst = _vec_index(ctx, p + 1)
    out = np.zeros((n2 * len(dst), n2 * len(src)), dtype=complex)
    sign_diag = _value_sign_diag(ctx)
    ad_ops = {a: _ad_operator(ctx, a) for a in ctx.labels}
    for big, row in dst.items():
        pars = [ctx.label_parity(b) for b in big]
        for l in range(p + 1):
            t = big[:l] + big[l + 1 :]
            presum = sum(pars[:l]) % 2
            base = (-1) ** (l + pars[l] * ((presum + ctx.tuple_parity(t)) % 2))
            op = ad_ops[big[l]]
            if pars[l]:
                op = op * sign_diag[np.newaxis, :]
            out[row * n2 : (row + 1) * n2, src[t] * n2 : (src[t] + 1) * n2] += base * op
        for l in range(p + 1):
            for lp in range(l + 1, p + 1):
                mid = sum(pars[l + 1 : lp]) % 2
                sign = (-1) ** (lp + pars[lp] * mid)
                for c_label in ctx.labels:
                    coef = ctx.constants[c_label - 1, big[l] - 1, big[lp] - 1]
                    if coef == 0:
                        continue
                    sub = big[:l] + (c_label,) + big[l + 1 : lp] + big[lp + 1 :]
                    canon, s = ctx.sort_signed(sub)
                    if canon is None:
                        continue
                    col = src[canon]
                    idx = np.arange(n2)
                    out[row * n2 + idx, col * n2 + idx] += sign * s * coef
    return out


def lie_matrix(ctx: DerivationContext, a: Label, p: int) -> np.ndarray:
    """L_a on Omega^p as a matrix, same vec layout as d_matrix."""
    n2 = ctx.n * ctx.n
    idx = _vec_index(ctx, p)
    out = np.zeros((n2 * len(idx), n2 * len(idx)), dtype=complex)
    sign_diag = _value_sign_diag(ctx)
    par_a = ctx.label_parity(a)
    ad_a = _ad_operator(ctx, a)
    ent = np.arange(n2)
    for t, row in idx.items():
        out[row * n2 : (row + 1) * n2, row * n2 : (row + 1) * n2] += ad_a
        pars = [ctx.label_parity(b) for b in t]
        for slot, b in enumerate(t):
            presum = sum(pars[:slot]) % 2
            for c_label in ctx.labels:
                coef = ctx.constants[c_label - 1, a - 1, b - 1]
                if coef == 0:
                    continue
                canon, s = ctx.sort_signed(t[:slot] + (c_label,) + t[slot + 1 :])
                if canon is None:
                    continue
                col = idx[canon]
                scalar = -s * coef * (-1) ** (par_a * ((presum + ctx.tuple_parity(canon)) % 2))
                if par_a:
                    out[row * n2 + ent, col * n2 + ent] += scalar * sign_diag
                else:
                    out[row * n2 + ent, col * n2 + ent] += scalar
    return out


def invariant_one_forms(ctx: DerivationContext, tol: float = 1e-8) -> RankDecision:
    """Rank decision for the joint kernel of all L_a on 1-forms.

    The kernel dimension is dim Omega^1 minus the rank; the invariant
    Maurer-Cartan form spans it when the kernel is one-dimensional.
    """
    stacked = np.vstack([lie_matrix(ctx, a, 1) for a in ctx.labels])
    return rank_decision(stacked, tol)


# ---------------------------------------------------------------------------
# maps between complexes


def body_cochain_map(w: SuperForm, bctx: DerivationContext) -> SuperForm:
    """Restrict to the even derivations and push values through the body map.

    Canonical body tuples are strictly increasing even labels, which are
    canonical upstairs too, so the restriction is value-wise.
    """
    ctx = w.ctx
    if not isinstance(ctx.sphere, FuzzySuperSphere) or not isinstance(bctx.sphere, FuzzySphere):
        raise ValueError("body_cochain_map goes from the super context to the body context")
    if ctx.sphere.q != bctx.sphere.q:
        raise ValueError("levels must agree")
    vals = {}
    for t in bctx.index_tuples(w.p):
        mat = body_map_fuzzy(w.vals[t], ctx.sphere, bctx.sphere)
        vals[t] = GradedMatrix(bctx.dims, mat)
    return SuperForm(bctx, w.p, vals)


def eta_forms(w: SuperForm, ctx_to: DerivationContext) -> SuperForm:
    """Change of level applied value-wise through the coefficient maps."""
    ctx = w.ctx
    if not isinstance(ctx.sphere, FuzzySuperSphere) or not isinstance(
        ctx_to.sphere, FuzzySuperSphere
    ):
        raise ValueError("eta_forms moves between super contexts")
    vals = {}
    for t, v in w.vals.items():
        e = psi_q_inv(v, ctx.sphere)
        vals[t] = psi_q(eta(e, ctx_to.sphere.q), ctx_to.sphere)
    return SuperForm(ctx_to, w.p, vals)


# ---------------------------------------------------------------------------
# cohomology


@dataclasses.dataclass(frozen=True)
class CohomologyReport:
    """Betti numbers with the rank decisions that produced them."""

    name: str
    p_max: int
    dims: Tuple[int, ...]
    betti: Tuple[int, ...]
    decisions: Tuple[RankDecision, ...]
    tol: float

    @property
    def inconclusive(self) -> bool:
        return any(dec.inconclusive for dec in self.decisions)

    @property
    def min_gap(self) -> float:
        return min((dec.gap for dec in self.decisions), default=math.inf)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "p_max": self.p_max,
            "dims": list(self.dims),
            "betti": list(self.betti),
            "ranks": [dec.rank for dec in self.decisions],
            "sv_gaps": [dec.gap for dec in self.decisions],
            "tol": self.tol,
            "inconclusive": self.inconclusive,
        }


def cohomology_dims(ctx: DerivationContext, p_max: int, tol: float = 1e-8) -> CohomologyReport:
    """Betti numbers of the derivation complex for p = 0..p_max.

    betti_p = dim Omega^p - rank d_p - rank d_(p-1), each rank backed by a
    singular-value gap decision.
    """
    n2 = ctx.n * ctx.n
    dims = tuple(n2 * len(ctx.index_tuples(p)) for p in range(p_max + 1))
    decisions = [rank_decision(d_matrix(ctx, p), tol) for p in range(p_max + 1)]
    betti = []
    for p in range(p_max + 1):
        prev = decisions[p - 1].rank if p > 0 else 0
        betti.append(dims[p] - decisions[p].rank - prev)
    return CohomologyReport(
        name=ctx.name,
        p_max=p_max,
        dims=dims,
        betti=tuple(betti),
        decisions=tuple(decisions),
        tol=tol,
    )


def center_d_matrix(ctx: DerivationContext, p: int) -> np.ndarray:
    """d restricted to forms valued in multiples of the unit.

    The derivation terms vanish on the center, leaving the bracket
    substitution scalars: the trivial-coefficient complex of the
    derivation algebra, independent of the level.
    """
    src = _vec_index(ctx, p)
    dst = _vec_index(ctx, p + 1)
    out = np.zeros((len(dst), len(src)), dtype=complex)
    for big, row in dst.items():
        pars = [ctx.label_parity(b) for b in big]
        for l in range(p + 1):
            for lp in range(l + 1, p + 1):
                mid = sum(pars[l + 1 : lp]) % 2
                sign = (-1) ** (lp + pars[lp] * mid)
                for c_label in ctx.labels:
                    coef = ctx.constants[c_label - 1, big[l] - 1, big[lp] - 1]
                    if coef == 0:
                        continue
                    sub = big[:l] + (c_label,) + big[l + 1 : lp] + big[lp + 1 :]
                    canon, s = ctx.sort_signed(sub)
                    if canon is None:
                        continue
                    out[row, src[canon]] += sign * s * coef
    return out


def center_cohomology_dims(
    ctx: DerivationContext, p_max: int, tol: float = 1e-8
) -> CohomologyReport:
    """Betti numbers of the center-valued subcomplex, as a cross-check.

    Only the unit-multiple block of the algebra can carry cohomology, so
    these must agree with the full computation.
    """
    dims = tuple(len(ctx.index_tuples(p)) for p in range(p_max + 1))
    decisions = [rank_decision(center_d_matrix(ctx, p), tol) for p in range(p_max + 1)]
    betti = []
    for p in range(p_max + 1):
        prev = decisions[p - 1].rank if p > 0 else 0
        betti.append(dims[p] - decisions[p].rank - prev)
    return CohomologyReport(
        name=f"{ctx.name} [center]",
        p_max=p_max,
        dims=dims,
        betti=tuple(betti),
        decisions=tuple(decisions),
        tol=tol,
    )


EXPECTED_BETTI_SUPER = (1, 0, 0, 1, 0, 0)
EXPECTED_BETTI_BODY = (1, 0, 0, 1)
