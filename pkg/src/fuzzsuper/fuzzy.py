"""Finite matrix truncations of the supersphere and their harmonics.

The level-q truncation is End(V(q/2)) for the graded irrep with odd
highest weight; its (2q+1)^2-dimensional harmonic basis diagonalizes the
pseudo-inner product -str(f-dag g) up to signs.  The bosonic companion,
End of the spin-q/2 sl2 irrep, is the target of the body map.  All
normalizations are fixed once by the highest-weight matrices; everything
else is generated by exact ladder steps, so orthonormality is a theorem
here, not a fitting procedure.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

from .graded import (
    EVEN,
    ODD,
    GradedDims,
    GradedMatrix,
    graded_commutator,
    hs_inner,
    indefinite_inner,
    superadjoint,
)
from .osp import Irrep, OspBasis, Sl2Irrep, build_irrep, build_osp_basis, build_sl2_irrep


def _fact(n: int) -> int:
    return math.factorial(n)


def _dfact(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


# ---------------------------------------------------------------------------
# harmonic labels


@dataclasses.dataclass(frozen=True, order=True)
class HarmonicLabel:
    """(j, l, m, mu) with l = j - mu/2, stored in doubled integers."""

    two_j: int
    mu: int
    two_m: int

    def __post_init__(self) -> None:
        if self.two_j < 0:
            raise ValueError("superspin must be non-negative")
        if self.mu not in (0, 1):
            raise ValueError("mu must be 0 or 1")
        if self.mu == 1 and self.two_j < 1:
            raise ValueError("mu = 1 requires j >= 1/2")
        two_l = self.two_j - self.mu
        if abs(self.two_m) > two_l or (two_l - self.two_m) % 2:
            raise ValueError("magnetic label out of range")

    @property
    def two_l(self) -> int:
        return self.two_j - self.mu

    @property
    def j(self) -> float:
        return self.two_j / 2

    @property
    def l(self) -> float:
        return self.two_l / 2

    @property
    def m(self) -> float:
        return self.two_m / 2

    @property
    def parity(self) -> int:
        return (self.two_j + self.mu) % 2

    @property
    def sign(self) -> int:
        """Signature of the label in the pseudo-orthonormal Gram matrix."""
        return -1 if (self.two_j % 2 == 1 and self.mu == 1) else 1


def all_labels(q: int) -> List[HarmonicLabel]:
    """All (2q+1)^2 labels at level q, grouped by (j, mu), m descending."""
    out = []
    for two_j in range(0, 2 * q + 1):
        for mu in (0, 1):
            if mu == 1 and two_j == 0:
                continue
            two_l = two_j - mu
            for two_m in range(two_l, -two_l - 1, -2):
                out.append(HarmonicLabel(two_j, mu, two_m))
    return out


@dataclasses.dataclass(frozen=True, eq=False)
class FuzzyElement:
    """Coefficient vector over harmonic labels at a fixed level."""

    q: int
    coeffs: Dict[HarmonicLabel, complex]

    def __post_init__(self) -> None:
        for label in self.coeffs:
            if label.two_j > 2 * self.q:
                raise ValueError(f"label {label} does not exist at level {self.q}")

    def __add__(self, other: "FuzzyElement") -> "FuzzyElement":
        if self.q != other.q:
            raise ValueError("level mismatch")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0j) + v
        return FuzzyElement(self.q, out)

    def __sub__(self, other: "FuzzyElement") -> "FuzzyElement":
        return self + other.scale(-1)

    def scale(self, s: complex) -> "FuzzyElement":
        return FuzzyElement(self.q, {k: s * v for k, v in self.coeffs.items()})

    def get(self, label: HarmonicLabel) -> complex:
        return self.coeffs.get(label, 0j)

    def max_abs_diff(self, other: "FuzzyElement") -> float:
        worst = 0.0
        for k in set(self.coeffs) | set(other.coeffs):
            worst = max(worst, abs(self.get(k) - other.get(k)))
        return worst

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "coeffs": [
                [k.two_j, k.mu, k.two_m, v.real, v.imag]
                for k, v in sorted(self.coeffs.items())
                if v != 0
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FuzzyElement":
        coeffs = {
            HarmonicLabel(int(tj), int(mu), int(tm)): complex(re, im)
            for tj, mu, tm, re, im in data["coeffs"]
        }
        return cls(int(data["q"]), coeffs)


# ---------------------------------------------------------------------------
# the fuzzy supersphere


class FuzzySuperSphere:
    """Level-q truncation: End(V(q/2)) with its harmonic basis.

    Harmonic chains are built lazily per (j, mu) and cached, so working
    with a handful of highest-weight harmonics at large q never pays for
    the full (2q+1)^2 basis.
    """

    def __init__(self, q: int, rho: float = 1.0):
        if q < 1:
            raise ValueError("level q must be a positive integer")
        if rho <= 0:
            raise ValueError("radius must be positive")
        self.q = int(q)
        self.rho = float(rho)
        self.rep: Irrep = build_irrep(self.q, ODD)
        self.basis: OspBasis = build_osp_basis()
        self.dims: GradedDims = self.rep.dims
        self._chains: Dict[Tuple[int, int], Dict[int, GradedMatrix]] = {}

    @property
    def n(self) -> int:
        return self.dims.total

    def generator(self, a: Union[int, str]) -> GradedMatrix:
        return self.rep.matrix(a)

    def coordinates(self) -> Tuple[GradedMatrix, ...]:
        """(X1, X2, X3, Theta4, Theta5) satisfying the radius relation."""
        scale = 2.0 * self.rho / math.sqrt(self.q * (self.q + 1))
        return tuple(scale * self.generator(a) for a in (1, 2, 3, 4, 5))

    def casimir_residual(self) -> float:
        x1, x2, x3, t4, t5 = (c.mat for c in self.coordinates())
        rel = x1 @ x1 + x2 @ x2 + x3 @ x3 + t4 @ t5 - t5 @ t4
        return float(np.linalg.norm(rel - self.rho**2 * np.eye(self.n)))

    def adjoint_action(self, a: Union[int, str], f: GradedMatrix) -> GradedMatrix:
        return graded_commutator(self.generator(a), f)

    # -- harmonics

    def highest_weight(self, two_j: int) -> GradedMatrix:
        """The (j, l=j, m=j) harmonic, a polynomial in the generators."""
        q = self.q
        if two_j < 0 or two_j > 2 * q:
            raise ValueError(f"superspin 2j={two_j} out of range at level {q}")
        jp = self.rep.matrix("+").mat
        if two_j % 2 == 0:
            j = two_j // 2
            norm = math.sqrt(
                2**j * _dfact(2 * j - 1) * _fact(q - j) / (_fact(j) * _fact(q + j))
            )
            mat = norm * np.linalg.matrix_power(jp, j)
        else:
            k = (two_j - 1) // 2
            norm = (1.0 / (q + 0.5)) * math.sqrt(
                2 ** (k + 4)
                * _dfact(2 * k + 1)
                * _fact(q - k - 1)
                / (_fact(k) * _fact(q + k + 1))
            )
            j3, j4, j5 = (self.rep.matrix(a).mat for a in (3, 4, 5))
            core = (j3 - 0.75 * np.eye(self.n)) @ j4 + jp @ j5
            mat = norm * (np.linalg.matrix_power(jp, k) @ core)
        return GradedMatrix(self.dims, mat)

    def _chain(self, two_j: int, mu: int) -> Dict[int, GradedMatrix]:
        key = (two_j, mu)
        if key in self._chains:
            return self._chains[key]
        top = self.highest_weight(two_j)
        if mu == 1:
            top = (2.0 / math.sqrt(two_j)) * self.adjoint_action(5, top)
        two_l = two_j - mu
        chain = {two_l: top}
        cur = top
        for two_m in range(two_l, -two_l, -2):
            step = ((two_l + two_m) // 2) * ((two_l - two_m + 2) // 2)
            cur = self.adjoint_action("-", cur) / math.sqrt(step)
            chain[two_m - 2] = cur
        self._chains[key] = chain
        return chain

    def harmonic(self, label: HarmonicLabel) -> GradedMatrix:
        if label.two_j > 2 * self.q:
            raise ValueError(f"label {label} does not exist at level {self.q}")
        return self._chain(label.two_j, label.mu)[label.two_m]

    def labels(self) -> List[HarmonicLabel]:
        return all_labels(self.q)

    # -- the coefficient isomorphism

    def decompose(self, f: GradedMatrix) -> FuzzyElement:
        """Signed projection <Y_L|f> onto the pseudo-orthonormal basis."""
        coeffs: Dict[HarmonicLabel, complex] = {}
        for label in self.labels():
            c = label.sign * indefinite_inner(self.harmonic(label), f)
            if c != 0:
                coeffs[label] = c
        return FuzzyElement(self.q, coeffs)

    def reconstruct(self, e: FuzzyElement) -> GradedMatrix:
        if e.q != self.q:
            raise ValueError("level mismatch")
        mat = np.zeros((self.n, self.n), dtype=complex)
        for label, c in e.coeffs.items():
            mat = mat + c * self.harmonic(label).mat
        return GradedMatrix(self.dims, mat)


def build_fuzzy_supersphere(q: int, rho: float = 1.0) -> FuzzySuperSphere:
    return FuzzySuperSphere(q, rho)


def psi_q(e: FuzzyElement, sphere: FuzzySuperSphere) -> GradedMatrix:
    """Coefficients to matrix."""
    return sphere.reconstruct(e)


def psi_q_inv(f: GradedMatrix, sphere: FuzzySuperSphere) -> FuzzyElement:
    """Matrix to coefficients; inverse of psi_q on all of End(V)."""
    return sphere.decompose(f)


# ---------------------------------------------------------------------------
# structure on coefficients


def label_action(a: Union[int, str], e: FuzzyElement) -> FuzzyElement:
    """The five basis derivations acting on coefficient vectors.

    Mirrors the matrix-side adjoint action exactly, because each harmonic
    chain is a standard irrep basis; used to move between levels without
    materializing matrices.
    """
    if a == 1:
        plus, minus = label_action("+", e), label_action("-", e)
        return (plus + minus).scale(0.5)
    if a == 2:
        plus, minus = label_action("+", e), label_action("-", e)
        return (plus - minus).scale(-0.5j)

    out: Dict[HarmonicLabel, complex] = {}

    def add(label: HarmonicLabel, v: complex) -> None:
        if v != 0:
            out[label] = out.get(label, 0j) + v

    for L, c in e.coeffs.items():
        two_j, mu, two_m = L.two_j, L.mu, L.two_m
        two_l = L.two_l
        if a == 3:
            add(L, c * (two_m / 2))
        elif a == "+":
            if two_m + 2 <= two_l:
                w = math.sqrt(((two_l - two_m) // 2) * ((two_l + two_m + 2) // 2))
                add(HarmonicLabel(two_j, mu, two_m + 2), c * w)
        elif a == "-":
            if two_m - 2 >= -two_l:
                w = math.sqrt(((two_l + two_m) // 2) * ((two_l - two_m + 2) // 2))
                add(HarmonicLabel(two_j, mu, two_m - 2), c * w)
        elif a == 4:
            if mu == 0:
                if two_j - two_m > 0:
                    w = -0.5 * math.sqrt((two_j - two_m) / 2)
                    add(HarmonicLabel(two_j, 1, two_m + 1), c * w)
            else:
                w = -0.5 * math.sqrt((two_j + two_m + 1) / 2)
                add(HarmonicLabel(two_j, 0, two_m + 1), c * w)
        elif a == 5:
            if mu == 0:
                if two_j + two_m > 0:
                    w = 0.5 * math.sqrt((two_j + two_m) / 2)
                    add(HarmonicLabel(two_j, 1, two_m - 1), c * w)
            else:
                w = -0.5 * math.sqrt((two_j - two_m + 1) / 2)
                add(HarmonicLabel(two_j, 0, two_m - 1), c * w)
        else:
            raise ValueError(f"unknown basis label {a!r}")
    return FuzzyElement(e.q, out)


def eta(e: FuzzyElement, q_to: int) -> FuzzyElement:
    """Change of level on coefficients.

    Labels shared by both levels carry over unchanged; raising the level
    embeds, lowering truncates.  Compositions collapse as expected.
    """
    if q_to < 1:
        raise ValueError("level q must be a positive integer")
    coeffs = {k: v for k, v in e.coeffs.items() if k.two_j <= 2 * q_to}
    return FuzzyElement(q_to, coeffs)


def fuzzy_product(
    e1: FuzzyElement, e2: FuzzyElement, sphere: FuzzySuperSphere
) -> FuzzyElement:
    """Coefficients of the matrix product of two coefficient vectors."""
    if e1.q != sphere.q or e2.q != sphere.q:
        raise ValueError("level mismatch")
    return sphere.decompose(sphere.reconstruct(e1) @ sphere.reconstruct(e2))


@dataclasses.dataclass(frozen=True)
class StructureConstant:
    """Highest-weight product coefficient and its proportionality residual."""

    c: float
    residual: float


def structure_constant_fuzzy(
    q: int, two_j1: int, two_j2: int, sphere: Optional[FuzzySuperSphere] = None
) -> StructureConstant:
    """c with Y_(j1,hw) Y_(j2,hw) = c Y_(j1+j2,hw) at level q.

    The product of two highest-weight harmonics is exactly proportional
    to the highest-weight harmonic of the summed superspin; the residual
    reports how well the computed matrices honor that, including any
    spurious imaginary part.
    """
    if two_j1 + two_j2 > 2 * q:
        raise ValueError(
            f"superspin {(two_j1 + two_j2) / 2} exceeds the level-{q} cutoff"
        )
    if sphere is None:
        sphere = FuzzySuperSphere(q)
    y1 = sphere.highest_weight(two_j1)
    y2 = sphere.highest_weight(two_j2)
    y12 = sphere.highest_weight(two_j1 + two_j2)
    prod = y1 @ y2
    c = indefinite_inner(y12, prod)
    residual = float(np.linalg.norm(prod.mat - c.real * y12.mat))
    return StructureConstant(c=c.real, residual=max(residual, abs(c.imag)))


# ---------------------------------------------------------------------------
# the bosonic companion sphere


@dataclasses.dataclass(frozen=True, order=True)
class SphereLabel:
    """(j, m) in doubled integers, for the bosonic harmonic basis."""

    two_j: int
    two_m: int

    def __post_init__(self) -> None:
        if self.two_j < 0 or abs(self.two_m) > self.two_j or (self.two_j - self.two_m) % 2:
            raise ValueError("bad spherical label")


class FuzzySphere:
    """End of the spin-q/2 sl2 irrep with orthonormal matrix harmonics."""

    def __init__(self, q: int, rho: float = 1.0):
        if q < 1:
            raise ValueError("level q must be a positive integer")
        if rho <= 0:
            raise ValueError("radius must be positive")
        self.q = int(q)
        self.rho = float(rho)
        self.rep: Sl2Irrep = build_sl2_irrep(self.q)
        self._chains: Dict[int, Dict[int, np.ndarray]] = {}

    @property
    def n(self) -> int:
        return self.rep.dim

    def coordinates(self) -> Tuple[np.ndarray, ...]:
        scale = 2.0 * self.rho / math.sqrt(self.q * (self.q + 2))
        return tuple(scale * self.rep.matrix(a) for a in (1, 2, 3))

    def casimir_residual(self) -> float:
        x1, x2, x3 = self.coordinates()
        rel = x1 @ x1 + x2 @ x2 + x3 @ x3
        return float(np.linalg.norm(rel - self.rho**2 * np.eye(self.n)))

    def adjoint_action(self, a: Union[int, str], f: np.ndarray) -> np.ndarray:
        g = self.rep.matrix(a)
        return g @ f - f @ g

    def highest_weight(self, j: int) -> np.ndarray:
        q = self.q
        if j < 0 or j > q:
            raise ValueError(f"spin {j} out of range at level {q}")
        norm = math.sqrt(
            2**j * _dfact(2 * j + 1) * (q + 1) * _fact(q - j) / (_fact(j) * _fact(q + j + 1))
        )
        return norm * np.linalg.matrix_power(self.rep.matrix("+"), j)

    def _chain(self, j: int) -> Dict[int, np.ndarray]:
        if j in self._chains:
            return self._chains[j]
        chain = {j: self.highest_weight(j)}
        cur = chain[j]
        for m in range(j, -j, -1):
            cur = self.adjoint_action("-", cur) / math.sqrt((j + m) * (j - m + 1))
            chain[m - 1] = cur
        self._chains[j] = chain
        return chain

    def harmonic(self, label: SphereLabel) -> np.ndarray:
        if label.two_j > 2 * self.q or label.two_j % 2:
            raise ValueError(f"label {label} does not exist at level {self.q}")
        return self._chain(label.two_j // 2)[label.two_m // 2]

    def labels(self) -> List[SphereLabel]:
        return [
            SphereLabel(2 * j, 2 * m)
            for j in range(self.q + 1)
            for m in range(j, -j - 1, -1)
        ]

    def decompose(self, f: np.ndarray) -> Dict[SphereLabel, complex]:
        out: Dict[SphereLabel, complex] = {}
        for label in self.labels():
            c = hs_inner(self.harmonic(label), f)
            if c != 0:
                out[label] = c
        return out

    def reconstruct(self, coeffs: Dict[SphereLabel, complex]) -> np.ndarray:
        mat = np.zeros((self.n, self.n), dtype=complex)
        for label, c in coeffs.items():
            mat = mat + c * self.harmonic(label)
        return mat


def build_fuzzy_sphere(q: int, rho: float = 1.0) -> FuzzySphere:
    return FuzzySphere(q, rho)


# ---------------------------------------------------------------------------
# the body map


def body_label_image(label: HarmonicLabel) -> Optional[Tuple[SphereLabel, float]]:
    """Image of one super label: None for odd labels, else a scaled label.

    Even labels (2j + mu even) map to (l, m) with weight (-1)^mu/sqrt(2l+1);
    odd labels span the kernel.
    """
    if label.parity == 1:
        return None
    two_l = label.two_l
    weight = (-1.0 if label.mu else 1.0) / math.sqrt(two_l + 1)
    return SphereLabel(two_l, label.two_m), weight


def body_map_coeffs(e: FuzzyElement) -> Dict[SphereLabel, complex]:
    out: Dict[SphereLabel, complex] = {}
    for label, c in e.coeffs.items():
        image = body_label_image(label)
        if image is None:
            continue
        target, w = image
        out[target] = out.get(target, 0j) + w * c
    return out


def body_map_fuzzy(
    f: GradedMatrix, sphere: FuzzySuperSphere, body: FuzzySphere
) -> np.ndarray:
    """The noncommutative body projection End(V(q/2)) -> End(V_q/2, sl2).

    Decompose, drop odd labels, rescale even ones, reassemble downstairs.
    An algebra map onto its image with kernel of dimension
    (2q+1)^2 - (q+1)^2.
    """
    if sphere.q != body.q:
        raise ValueError("levels of the super and body spheres must agree")
    return body.reconstruct(body_map_coeffs(sphere.decompose(f)))


def body_map_matrix(sphere: FuzzySuperSphere, body: FuzzySphere) -> np.ndarray:
    """The body map as a matrix from super coefficients to body coefficients."""
    rows = {label: i for i, label in enumerate(body.labels())}
    cols = sphere.labels()
    out = np.zeros((len(rows), len(cols)))
    for jcol, label in enumerate(cols):
        image = body_label_image(label)
        if image is None:
            continue
        target, w = image
        out[rows[target], jcol] = w
    return out
