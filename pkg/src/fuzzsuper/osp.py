"""The orthosymplectic algebra osp(1|2), its matrix irreps, and sl(2) spins.

Basis labels run 1..5: labels 1-3 are the even sl(2) part, labels 4,5 the
odd spinor pair.  Brackets:

    [J_i, J_j] = i eps_ijk J_k
    [J_i, J_a] = 1/2 (sigma_i)_{ba} J_b
    [J_a, J_b] = 1/2 (i sigma_2 sigma_i)_{ab} J_i

with a, b in {4, 5} mapped to spinor rows 1, 2.  Irreps are highest-weight
modules V(j, hw_parity) of dimension 4j+1, realized in ladder form; J_1 and
J_2 are reconstructed from J_+- = J_1 +- i J_2 on demand.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Dict, Tuple, Union

import numpy as np

from .graded import EVEN, ODD, GradedDims, GradedMatrix, Parity, graded_commutator, superadjoint

#: basis labels accepted by matrix(): 1..5 or the ladder aliases
Label = Union[int, str]

LABELS = (1, 2, 3, 4, 5)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

EPSILON = np.zeros((3, 3, 3))
for _i, _j, _k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    EPSILON[_i, _j, _k] = 1.0
    EPSILON[_i, _k, _j] = -1.0


def label_parity(a: Label) -> Parity:
    if a in ("+", "-"):
        return EVEN
    if a in (1, 2, 3):
        return EVEN
    if a in (4, 5):
        return ODD
    raise ValueError(f"unknown basis label {a!r}")


def structure_constants() -> np.ndarray:
    """c[C, A, B] with [J_A, J_B] = sum_C c[C, A, B] J_C, 0-indexed."""
    c = np.zeros((5, 5, 5), dtype=complex)
    for i in range(3):
        for j in range(3):
            for k in range(3):
                c[k, i, j] = 1j * EPSILON[i, j, k]
    for i in range(3):
        for al in range(2):
            for be in range(2):
                v = 0.5 * PAULI[i][be, al]
                c[3 + be, i, 3 + al] = v
                c[3 + be, 3 + al, i] = -v
    for i in range(3):
        m = 1j * PAULI[1] @ PAULI[i]
        for al in range(2):
            for be in range(2):
                c[i, 3 + al, 3 + be] = 0.5 * m[al, be]
    return c


@dataclasses.dataclass(frozen=True)
class OspBasis:
    """Structure data of osp(1|2): parities and bracket constants."""

    parities: Tuple[Parity, ...]
    constants: np.ndarray  # c[C, A, B], complex

    def bracket_coeffs(self, a: int, b: int) -> np.ndarray:
        """Coefficient vector of [J_a, J_b] over the basis, labels 1..5."""
        return self.constants[:, a - 1, b - 1]


def build_osp_basis() -> OspBasis:
    return OspBasis(parities=(EVEN, EVEN, EVEN, ODD, ODD), constants=structure_constants())


def jacobi_residual(basis: OspBasis) -> float:
    """Max violation of the graded Jacobi identity over all basis triples."""
    c = basis.constants
    par = basis.parities
    worst = 0.0
    for a in range(5):
        for b in range(5):
            for d in range(5):
                term = np.zeros(5, dtype=complex)
                for e in range(5):
                    term += (-1) ** (par[a] * par[d]) * c[:, a, e] * c[e, b, d]
                    term += (-1) ** (par[b] * par[a]) * c[:, b, e] * c[e, d, a]
                    term += (-1) ** (par[d] * par[b]) * c[:, d, e] * c[e, a, b]
                worst = max(worst, float(np.abs(term).max()))
    return worst


def _half(two_x: int) -> float:
    return two_x / 2.0


@dataclasses.dataclass(frozen=True, eq=False)
class Irrep:
    """Irreducible graded osp(1|2)-module V(j, hw_parity), dim 4j+1.

    Basis vectors e_{l,m} with l in {j, j-1/2} and m descending inside each
    block; the even-parity block is laid out first.  index_of maps doubled
    labels (2l, 2m) to positions.
    """

    two_j: int
    hw_parity: Parity
    dims: GradedDims
    j3: GradedMatrix
    jp: GradedMatrix
    jm: GradedMatrix
    j4: GradedMatrix
    j5: GradedMatrix
    index: Dict[Tuple[int, int], int]

    @property
    def j(self) -> float:
        return _half(self.two_j)

    def index_of(self, two_l: int, two_m: int) -> int:
        return self.index[(two_l, two_m)]

    def matrix(self, a: Label) -> GradedMatrix:
        if a == "+":
            return self.jp
        if a == "-":
            return self.jm
        if a == 1:
            return (self.jp + self.jm) * 0.5
        if a == 2:
            return (self.jp - self.jm) * (-0.5j)
        if a == 3:
            return self.j3
        if a == 4:
            return self.j4
        if a == 5:
            return self.j5
        raise ValueError(f"unknown basis label {a!r}")


def _block_layout(two_j: int, hw_parity: Parity):
    """Ordered list of (two_l, mu, parity) blocks, even block first."""
    blocks = [(two_j, 0, hw_parity % 2)]
    if two_j >= 1:
        blocks.append((two_j - 1, 1, (hw_parity + 1) % 2))
    blocks.sort(key=lambda b: b[2])
    return blocks


def build_irrep(two_j: int, hw_parity: Parity = ODD) -> Irrep:
    """Matrices of the superspin-j irrep acting per the ladder relations.

    two_j is the doubled superspin.  The highest weight vector e_{j,j} is
    annihilated by J_+ and J_4 and carries J_3-eigenvalue j.
    """
    if two_j < 0:
        raise ValueError("superspin must be non-negative")
    n = 2 * two_j + 1
    even_dim = sum(tl + 1 for tl, _, p in _block_layout(two_j, hw_parity) if p == EVEN)
    dims = GradedDims(even=even_dim, odd=n - even_dim)

    index: Dict[Tuple[int, int], int] = {}
    pos = 0
    for two_l, _, _ in _block_layout(two_j, hw_parity):
        for two_m in range(two_l, -two_l - 2, -2):
            index[(two_l, two_m)] = pos
            pos += 1

    j3 = np.zeros((n, n), dtype=complex)
    jp = np.zeros((n, n), dtype=complex)
    jm = np.zeros((n, n), dtype=complex)
    j4 = np.zeros((n, n), dtype=complex)
    j5 = np.zeros((n, n), dtype=complex)

    for (two_l, two_m), col in index.items():
        l, m = _half(two_l), _half(two_m)
        j3[col, col] = m
        if two_m + 2 <= two_l:
            jp[index[(two_l, two_m + 2)], col] = math.sqrt((l - m) * (l + m + 1))
        if two_m - 2 >= -two_l:
            jm[index[(two_l, two_m - 2)], col] = math.sqrt((l + m) * (l - m + 1))
        if two_l == two_j:
            # on the l = j block the odd generators step down to l = j - 1/2
            if two_m + 1 <= two_j - 1:
                j4[index[(two_j - 1, two_m + 1)], col] = -0.5 * math.sqrt(l - m)
            if two_m - 1 >= -(two_j - 1):
                j5[index[(two_j - 1, two_m - 1)], col] = 0.5 * math.sqrt(l + m)
        else:
            # and back up to l = j; coefficients carry the superspin j
            jj = _half(two_j)
            j4[index[(two_j, two_m + 1)], col] = -0.5 * math.sqrt(jj + m + 0.5)
            j5[index[(two_j, two_m - 1)], col] = -0.5 * math.sqrt(jj - m + 0.5)

    return Irrep(
        two_j=two_j,
        hw_parity=hw_parity % 2,
        dims=dims,
        j3=GradedMatrix(dims, j3),
        jp=GradedMatrix(dims, jp),
        jm=GradedMatrix(dims, jm),
        j4=GradedMatrix(dims, j4),
        j5=GradedMatrix(dims, j5),
        index=index,
    )


@dataclasses.dataclass(frozen=True, eq=False)
class Sl2Irrep:
    """Standard spin-s module, basis e_m with m descending from +s."""

    two_s: int
    j3: np.ndarray
    jp: np.ndarray
    jm: np.ndarray

    @property
    def s(self) -> float:
        return _half(self.two_s)

    @property
    def dim(self) -> int:
        return self.two_s + 1

    def index_of(self, two_m: int) -> int:
        return (self.two_s - two_m) // 2

    def matrix(self, a: Label) -> np.ndarray:
        if a == "+":
            return self.jp
        if a == "-":
            return self.jm
        if a == 1:
            return 0.5 * (self.jp + self.jm)
        if a == 2:
            return -0.5j * (self.jp - self.jm)
        if a == 3:
            return self.j3
        raise ValueError(f"unknown sl(2) label {a!r}")


def build_sl2_irrep(two_s: int) -> Sl2Irrep:
    if two_s < 0:
        raise ValueError("spin must be non-negative")
    n = two_s + 1
    s = _half(two_s)
    j3 = np.zeros((n, n), dtype=complex)
    jp = np.zeros((n, n), dtype=complex)
    jm = np.zeros((n, n), dtype=complex)
    for col in range(n):
        m = s - col
        j3[col, col] = m
        if col > 0:
            jp[col - 1, col] = math.sqrt((s - m) * (s + m + 1))
        if col < n - 1:
            jm[col + 1, col] = math.sqrt((s + m) * (s - m + 1))
    return Sl2Irrep(two_s=two_s, j3=j3, jp=jp, jm=jm)


def osp_casimir(rep: Irrep) -> GradedMatrix:
    """sum_k J_k^2 + J_4 J_5 - J_5 J_4; scalar q(q+1)/4 on V(q/2, odd)."""
    out = GradedMatrix.zero(rep.dims)
    for k in (1, 2, 3):
        jk = rep.matrix(k)
        out = out + jk @ jk
    out = out + rep.j4 @ rep.j5 - rep.j5 @ rep.j4
    return out


def grade_star_label(a: int, lam: int) -> Tuple[int, float]:
    """Image of J_a under the grade adjoint, as (label, sign).

    J_i -> J_i, J_4 -> (-1)^lam J_5, J_5 -> (-1)^(lam+1) J_4.
    """
    if a in (1, 2, 3):
        return a, 1.0
    if a == 4:
        return 5, (-1.0) ** lam
    if a == 5:
        return 4, (-1.0) ** (lam + 1)
    raise ValueError(f"unknown basis label {a!r}")


def verify_grade_star(rep: Irrep, lam: int) -> float:
    """Max residual of superadjoint(J_A) against the grade adjoint images."""
    worst = 0.0
    for a in LABELS:
        target_label, sign = grade_star_label(a, lam)
        residual = superadjoint(rep.matrix(a)) - sign * rep.matrix(target_label)
        worst = max(worst, residual.norm())
    return worst


def bracket_residual(rep: Irrep, basis: OspBasis) -> float:
    """Max deviation of graded commutators from the structure constants."""
    worst = 0.0
    mats = {a: rep.matrix(a) for a in LABELS}
    for a in LABELS:
        for b in LABELS:
            lhs = graded_commutator(mats[a], mats[b])
            rhs = GradedMatrix.zero(rep.dims)
            for c_label in LABELS:
                coeff = basis.constants[c_label - 1, a - 1, b - 1]
                if coeff != 0:
                    rhs = rhs + coeff * mats[c_label]
            worst = max(worst, (lhs - rhs).norm())
    return worst
