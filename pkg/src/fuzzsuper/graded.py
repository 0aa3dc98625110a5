"""Z2-graded linear algebra over dense complex matrices.

A graded vector space is laid out with all even basis vectors first, then
all odd ones, so a matrix splits into four blocks addressed through the
dimension split alone.  Everything here is immutable and pure; matrices at
desk scale stay below ~100x100, so dense double precision is adequate.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Iterable, Optional, Sequence

import numpy as np

EVEN = 0
ODD = 1

#: parity values are plain ints mod 2
Parity = int


@dataclasses.dataclass(frozen=True)
class GradedDims:
    """Even/odd dimension split of a graded space."""

    even: int
    odd: int

    def __post_init__(self) -> None:
        if self.even < 0 or self.odd < 0:
            raise ValueError("dimensions must be non-negative")
        if self.even + self.odd < 1:
            raise ValueError("graded space must have positive total dimension")

    @property
    def total(self) -> int:
        return self.even + self.odd


def _block_mask(dims: GradedDims, parity: Parity) -> np.ndarray:
    """Boolean mask of the entries carrying the given parity.

    Entry (r, c) has parity (row parity + column parity) mod 2.
    """
    row_par = np.zeros(dims.total, dtype=int)
    row_par[dims.even:] = 1
    return (row_par[:, None] + row_par[None, :]) % 2 == parity


@dataclasses.dataclass(frozen=True, eq=False)
class GradedMatrix:
    """Complex square matrix with a Z2 block structure.

    The entries array is defensively copied and frozen at construction.
    """

    dims: GradedDims
    mat: np.ndarray

    def __post_init__(self) -> None:
        n = self.dims.total
        m = np.array(self.mat, dtype=complex, copy=True)
        if m.shape != (n, n):
            raise ValueError(f"expected shape {(n, n)}, got {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, dims: GradedDims) -> "GradedMatrix":
        return cls(dims, np.zeros((dims.total, dims.total), dtype=complex))

    @classmethod
    def identity(cls, dims: GradedDims) -> "GradedMatrix":
        return cls(dims, np.eye(dims.total, dtype=complex))

    # -- structure ----------------------------------------------------

    @property
    def n(self) -> int:
        return self.dims.total

    def part(self, parity: Parity) -> "GradedMatrix":
        out = np.where(_block_mask(self.dims, parity % 2), self.mat, 0.0)
        return GradedMatrix(self.dims, out)

    def even_part(self) -> "GradedMatrix":
        return self.part(EVEN)

    def odd_part(self) -> "GradedMatrix":
        return self.part(ODD)

    def homogeneous_parity(self, tol: float = 1e-12) -> Optional[Parity]:
        """0 or 1 for (numerically) homogeneous matrices, None for mixed.

        The zero matrix counts as even.
        """
        scale = max(float(np.abs(self.mat).max()), 1.0)
        odd_norm = float(np.abs(self.part(ODD).mat).max())
        even_norm = float(np.abs(self.part(EVEN).mat).max())
        if odd_norm <= tol * scale:
            return EVEN
        if even_norm <= tol * scale:
            return ODD
        return None

    # -- arithmetic ---------------------------------------------------

    def _like(self, mat: np.ndarray) -> "GradedMatrix":
        return GradedMatrix(self.dims, mat)

    def _check(self, other: "GradedMatrix") -> None:
        if self.dims != other.dims:
            raise ValueError(f"dimension mismatch: {self.dims} vs {other.dims}")

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._check(other)
        return self._like(self.mat + other.mat)

    def __sub__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._check(other)
        return self._like(self.mat - other.mat)

    def __neg__(self) -> "GradedMatrix":
        return self._like(-self.mat)

    def __mul__(self, scalar: complex) -> "GradedMatrix":
        return self._like(self.mat * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar: complex) -> "GradedMatrix":
        return self._like(self.mat / scalar)

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._check(other)
        return self._like(self.mat @ other.mat)

    def norm(self) -> float:
        return float(np.linalg.norm(self.mat))

    def __repr__(self) -> str:  # pragma: no cover
        return f"GradedMatrix(dims=({self.dims.even}|{self.dims.odd}), norm={self.norm():.3g})"


def supertrace(m: GradedMatrix) -> complex:
    """trace(even-even block) - trace(odd-odd block)."""
    ne = m.dims.even
    return complex(np.trace(m.mat[:ne, :ne]) - np.trace(m.mat[ne:, ne:]))


def superadjoint(m: GradedMatrix) -> GradedMatrix:
    """Grade adjoint f -> f-double-dagger of the graded Hilbert space.

    Defined on homogeneous f by <f'v, w> = (-1)^{|f||v|} <v, f w> and
    extended additively.  Concretely: conjugate transpose, with the
    even-row/odd-column block negated.  The diagonal blocks come from the
    even part only and the off-diagonal blocks from the odd part, so one
    formula covers mixed matrices.
    """
    ne = m.dims.even
    out = m.mat.conj().T.copy()
    out[:ne, ne:] *= -1
    return GradedMatrix(m.dims, out)


def indefinite_inner(f: GradedMatrix, g: GradedMatrix) -> complex:
    """-supertrace(superadjoint(f) g); antilinear in f, <Id|Id> = 1.

    Indefinite in general: pseudo-orthonormal bases have diagonal +-1.
    """
    f._check(g)
    return -supertrace(superadjoint(f) @ g)


def hs_inner(f: np.ndarray, g: np.ndarray) -> complex:
    """Normalized Hilbert-Schmidt product trace(f^dag g)/n on plain matrices."""
    f = np.asarray(f)
    g = np.asarray(g)
    if f.shape != g.shape or f.ndim != 2 or f.shape[0] != f.shape[1]:
        raise ValueError(f"need equal square matrices, got {f.shape} and {g.shape}")
    return complex(np.trace(f.conj().T @ g)) / f.shape[0]


def graded_commutator(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    """[a, b] = ab - (-1)^{|a||b|} ba on homogeneous parts, extended bilinearly."""
    a._check(b)
    ae, ao = a.even_part().mat, a.odd_part().mat
    be, bo = b.even_part().mat, b.odd_part().mat
    out = (ae @ b.mat - b.mat @ ae) + (ao @ be - be @ ao) + (ao @ bo + bo @ ao)
    return GradedMatrix(a.dims, out)


def perm_sign(sigma: Sequence[int]) -> int:
    """Sign of a permutation given as a tuple of images (0-indexed)."""
    sign = 1
    p = len(sigma)
    for r in range(p):
        for s in range(r + 1, p):
            if sigma[r] > sigma[s]:
                sign = -sign
    return sign


def commutation_factor(sigma: Sequence[int], parities: Sequence[Parity]) -> int:
    """Koszul factor gamma_p(sigma; parities).

    One factor (-1)^{p_r p_s} for every pair r < s of source slots whose
    order sigma inverts, i.e. whose entries cross when (D_1,...,D_p) is
    rearranged into (D_sigma(1),...,D_sigma(p)).  sigma is 0-indexed.
    """
    p = len(sigma)
    if len(parities) != p:
        raise ValueError("one parity per slot")
    pos = [0] * p
    for k, r in enumerate(sigma):
        pos[r] = k
    sign = 1
    for r in range(p):
        for s in range(r + 1, p):
            if pos[r] > pos[s] and (parities[r] % 2) and (parities[s] % 2):
                sign = -sign
    return sign


@dataclasses.dataclass(frozen=True)
class RankDecision:
    """Numerical rank of a matrix plus how clean the threshold cut was.

    gap is the relative distance between the smallest kept and the largest
    dropped singular value; math.inf when the decision involved no cut at
    all (empty spectrum, or an exactly zero matrix).
    """

    rank: int
    gap: float
    tol: float

    @property
    def inconclusive(self) -> bool:
        return self.gap < 10.0 * self.tol


def rank_decision(m: np.ndarray, tol: float = 1e-8) -> RankDecision:
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = np.asarray(m, dtype=complex)
    if m.size == 0:
        return RankDecision(rank=0, gap=math.inf, tol=tol)
    s = np.linalg.svd(m, compute_uv=False)
    scale = max(float(s[0]), 1.0)
    cut = tol * scale
    rank = int(np.sum(s > cut))
    if rank == 0:
        # no kept values: certain for an exact zero matrix, otherwise report
        # how far below the cut the spectrum sits
        gap = math.inf if float(s[0]) == 0.0 else tol - float(s[0]) / scale
    elif rank == len(s):
        gap = float(s[-1]) / scale
    else:
        gap = (float(s[rank - 1]) - float(s[rank])) / scale
    return RankDecision(rank=rank, gap=gap, tol=tol)


def numerical_rank(m: np.ndarray, tol: float = 1e-8) -> int:
    """Number of singular values above tol * max(largest singular value, 1)."""
    return rank_decision(m, tol).rank


def random_graded_matrix(
    dims: GradedDims,
    rng: np.random.Generator,
    parity: Optional[Parity] = None,
) -> GradedMatrix:
    """Gaussian random matrix, optionally projected to one parity."""
    n = dims.total
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    g = GradedMatrix(dims, m)
    if parity is None:
        return g
    return g.part(parity)
