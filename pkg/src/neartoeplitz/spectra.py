"""Closed-form eigen-solvers for the four structured matrix families.

The symmetric Toeplitz family T_n(a, b, a) has eigenvalues
b + 2a cos(j pi/(n+1)) with sine eigenvectors; the skew-symmetric family
K_n twists the sine vectors by powers of i and scales the cosines by 2i;
a general band pair (a, c) with ac != 0 reduces to the symmetric case by a
diagonal similarity; and the corner-signed near-Toeplitz matrix R_n picks
up the whole spectrum of K_{n-1} (angle pi/n) plus the all-ones kernel
vector.  For even n the j = n/2 construction collapses onto the all-ones
direction, so zero has algebraic multiplicity 2 but only one independent
eigenvector; that pair is flagged instead of silently duplicated.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import oracle
from .core import TridiagonalMatrix, build_R
from .errors import DimensionMismatch, OrderTooSmall, ZeroBandProduct, ZeroVector

__all__ = [
    "EigenPair",
    "SpectrumReport",
    "REGULAR",
    "DUPLICATE_OF_ALL_ONES",
    "RESIDUAL_TOL",
    "cos_pi_frac",
    "sin_pi_frac",
    "normalize_eigenvector",
    "symmetric_toeplitz_eigen",
    "general_toeplitz_eigen",
    "skew_toeplitz_eigen",
    "near_toeplitz_eigen",
    "lift_eigenvector",
    "spectrum_report",
]

REGULAR = "regular"
DUPLICATE_OF_ALL_ONES = "duplicate_of_all_ones"

RESIDUAL_TOL = 1e-10


def cos_pi_frac(p: int, m: int) -> float:
    """cos(p*pi/m) for integers p, m >= 1, folded exactly.

    The angle is reduced with integer arithmetic before calling the libm
    cosine, so values at p and m-p negate bitwise, multiples of m give
    exactly +/-1.0 and half multiples give exactly 0.0.
    """
    r = p % (2 * m)
    if r > m:
        r = 2 * m - r
    if 2 * r == m:
        return 0.0
    if r == 0:
        return 1.0
    if r == m:
        return -1.0
    if 2 * r > m:
        return -math.cos(math.pi * (m - r) / m)
    return math.cos(math.pi * r / m)


def sin_pi_frac(p: int, m: int) -> float:
    """sin(p*pi/m) for integers p, m >= 1, folded exactly.

    Multiples of m map to exactly 0.0 and odd half multiples to exactly
    +/-1.0; the fold keeps sin(p) = -sin(2m - p) bitwise.
    """
    r = p % (2 * m)
    sign = 1.0
    if r >= m:
        r -= m
        sign = -1.0
    if r == 0:
        return 0.0
    if 2 * r == m:
        return sign
    if 2 * r > m:
        r = m - r
    return sign * math.sin(math.pi * r / m)


def normalize_eigenvector(v) -> np.ndarray:
    """Canonical scaling: largest magnitude 1, first nonzero real positive.

    The scaling factor is the phase of the first nonzero component times
    the maximum component magnitude, which makes the output deterministic
    and satisfies the reporting convention for every solver.
    """
    v = np.asarray(v, dtype=np.complex128)
    mags = np.abs(v)
    top = float(mags.max()) if v.size else 0.0
    if top == 0.0:
        raise ZeroVector("cannot normalize the zero vector")
    first = int(np.flatnonzero(mags)[0])
    phase = v[first] / mags[first]
    out = v / (phase * top)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class EigenPair:
    """One eigenvalue with its eigenvector and provenance label.

    ``index_j`` is the label j of the generating formula; 0 is reserved
    for the all-ones kernel pair of the near-Toeplitz family.
    """

    index_j: int
    value: complex
    vector: np.ndarray
    flag: str = REGULAR

    def __post_init__(self):
        if self.flag not in (REGULAR, DUPLICATE_OF_ALL_ONES):
            raise ValueError(f"unknown eigen-pair flag {self.flag!r}")
        vec = np.asarray(self.vector, dtype=np.complex128)
        if vec.ndim != 1 or vec.size == 0 or not np.any(vec):
            raise ZeroVector("eigen-pair vector must be a nonzero 1-d vector")
        vec.setflags(write=False)
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "vector", vec)


@dataclass(frozen=True)
class SpectrumReport:
    """Full eigen-decomposition with residuals and verification verdict."""

    matrix_descriptor: str
    n: int
    pairs: tuple
    algebraic_multiplicity_of_zero: int
    max_residual: float
    verified: bool

    def eigenvalues(self) -> list:
        return [p.value for p in self.pairs]


def _standard_basis(n: int, j: int) -> np.ndarray:
    e = np.zeros(n, dtype=np.complex128)
    e[j - 1] = 1.0
    return e


def symmetric_toeplitz_eigen(a: float, b: float, n: int) -> list:
    """Eigen-pairs of the symmetric Toeplitz matrix T_n(a, b, a).

    For j = 1..n the eigenvalue is b + 2a cos(j theta) and the eigenvector
    has k-th component sin(k j theta), theta = pi/(n+1).  Eigenvalues are
    computed as b + a * (2 cos(j theta)) so that shifting b and scaling a
    reproduce the base spectrum bitwise.  For the degenerate band a = 0
    the matrix is b*I and the standard basis is emitted instead of the
    sine vectors.
    """
    if n < 1:
        raise OrderTooSmall(f"eigen-solver needs n >= 1, got n={n}")
    a = complex(a)
    b = complex(b)
    pairs = []
    for j in range(1, n + 1):
        if a == 0:
            pairs.append(EigenPair(index_j=j, value=b, vector=_standard_basis(n, j)))
            continue
        base = 2.0 * cos_pi_frac(j, n + 1)
        u = np.array([sin_pi_frac(k * j, n + 1) for k in range(1, n + 1)])
        pairs.append(
            EigenPair(index_j=j, value=b + a * base, vector=normalize_eigenvector(u))
        )
    return pairs


def _twisted_component(k: int, s: float) -> complex:
    # i**k * s built from exact quarter-turn factors; avoids -0.0 parts.
    if s == 0.0:
        return 0.0 + 0.0j
    q = k % 4
    if q == 0:
        return complex(s, 0.0)
    if q == 1:
        return complex(0.0, s)
    if q == 2:
        return complex(-s, 0.0)
    return complex(0.0, -s)


def skew_toeplitz_eigen(n: int) -> list:
    """Eigen-pairs of the skew-symmetric Toeplitz matrix K_n = T_n(-1, 0, 1).

    For j = 1..n the eigenvalue is 2i cos(j theta) and the eigenvector has
    k-th component i^k sin(k j theta), theta = pi/(n+1).  Real parts of
    the eigenvalues are constructed as exactly 0.
    """
    if n < 1:
        raise OrderTooSmall(f"eigen-solver needs n >= 1, got n={n}")
    pairs = []
    for j in range(1, n + 1):
        lam = complex(0.0, 2.0 * cos_pi_frac(j, n + 1))
        u = np.array(
            [_twisted_component(k, sin_pi_frac(k * j, n + 1)) for k in range(1, n + 1)]
        )
        pairs.append(EigenPair(index_j=j, value=lam, vector=normalize_eigenvector(u)))
    return pairs


def general_toeplitz_eigen(a: complex, b: complex, c: complex, n: int) -> list:
    """Eigen-pairs of T_n(a, b, c) through the diagonal symmetrization.

    Requires ac != 0.  With s the principal square root of ac and
    d = s/a (the ratio root branch consistent with s: d^2 = c/a and
    a d = c/d = s), conjugation by Diag(1, d, ..., d^{n-1}) turns the
    matrix into T_n(s, b, s); the eigenvalues are b + 2s cos(j theta) and
    the eigenvectors are the sine vectors divided entrywise by the powers
    of d.
    """
    if n < 1:
        raise OrderTooSmall(f"eigen-solver needs n >= 1, got n={n}")
    a = complex(a)
    b = complex(b)
    c = complex(c)
    if a * c == 0:
        raise ZeroBandProduct(f"general solver needs a*c != 0, got a={a}, c={c}")
    s = cmath.sqrt(a * c)
    d_inv = a / s  # 1/d for d = s/a
    inv_powers = np.concatenate(
        ([1.0 + 0.0j], np.cumprod(np.full(n - 1, d_inv, dtype=np.complex128)))
    )
    pairs = []
    for j in range(1, n + 1):
        base = 2.0 * cos_pi_frac(j, n + 1)
        u = np.array([sin_pi_frac(k * j, n + 1) for k in range(1, n + 1)])
        pairs.append(
            EigenPair(
                index_j=j,
                value=b + s * base,
                vector=normalize_eigenvector(inv_powers * u),
            )
        )
    return pairs


def lift_eigenvector(u, n: int) -> np.ndarray:
    """Map an eigenvector of K_{n-1} to one of R_n.

    The similarity reduction sends the zero-padded vector (u, 0) through
    the unit bidiagonal matrix: v_1 = u_1, v_k = u_k + u_{k-1} for
    2 <= k <= n-1, v_n = u_{n-1}.
    """
    u = np.asarray(u, dtype=np.complex128)
    if u.ndim != 1 or u.shape[0] != n - 1 or n - 1 < 1:
        raise DimensionMismatch(
            f"lift needs a vector of length n-1={n - 1}, got shape {u.shape}"
        )
    v = np.zeros(n, dtype=np.complex128)
    v[: n - 1] = u
    v[1:] += u
    return v


def spectrum_report(
    descriptor: str,
    matrix: TridiagonalMatrix,
    pairs,
    tol: float = RESIDUAL_TOL,
) -> SpectrumReport:
    """Bundle eigen-pairs with residuals and the verification verdict.

    The zero multiplicity counts exact zeros among the emitted values; the
    folded trig evaluation makes formula zeros exact, so the count agrees
    with the algebraic multiplicity for every family handled here.
    """
    pairs = tuple(pairs)
    if len(pairs) != matrix.n:
        raise DimensionMismatch(
            f"a spectrum of order {matrix.n} needs {matrix.n} pairs, got {len(pairs)}"
        )
    max_residual = 0.0
    for pair in pairs:
        max_residual = max(max_residual, oracle.residual(matrix, pair.value, pair.vector))
    zero_mult = sum(1 for pair in pairs if pair.value == 0)
    return SpectrumReport(
        matrix_descriptor=descriptor,
        n=matrix.n,
        pairs=pairs,
        algebraic_multiplicity_of_zero=zero_mult,
        max_residual=max_residual,
        verified=max_residual <= tol,
    )


def near_toeplitz_eigen(n: int, tol: float = RESIDUAL_TOL) -> SpectrumReport:
    """Spectrum of the corner-signed near-Toeplitz matrix R_n.

    Pair 0 is the all-ones kernel vector with eigenvalue 0; pairs
    j = 1..n-1 carry eigenvalue 2i cos(j pi/n) with the eigenvector of
    K_{n-1} lifted through the similarity.  For even n the j = n/2 lift
    lands on the all-ones direction already emitted, so that pair keeps
    its (zero) eigenvalue, is flagged, and reports the normalized
    all-ones vector it collapsed onto.
    """
    if n < 2:
        raise OrderTooSmall(f"the near-Toeplitz family needs n >= 2, got n={n}")
    R = build_R(n)
    ones = normalize_eigenvector(np.ones(n, dtype=np.complex128))
    pairs = [EigenPair(index_j=0, value=0.0 + 0.0j, vector=ones)]
    for kp in skew_toeplitz_eigen(n - 1):
        j = kp.index_j
        if n % 2 == 0 and 2 * j == n:
            pairs.append(
                EigenPair(index_j=j, value=kp.value, vector=ones, flag=DUPLICATE_OF_ALL_ONES)
            )
            continue
        lifted = normalize_eigenvector(lift_eigenvector(kp.vector, n))
        pairs.append(EigenPair(index_j=j, value=kp.value, vector=lifted))
    return spectrum_report(f"R(n={n})", R, pairs, tol=tol)
