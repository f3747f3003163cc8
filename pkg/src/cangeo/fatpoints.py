"""Interpolation oracle for plane curves with fat base points.

Everything here works over a fixed large prime field.  The point of the
module is to measure, not to predict: given a degree k, a multiplicity r
and a number of points s, we build the interpolation matrix whose kernel
is the space of degree-k curves with an r-fold point at each of s random
points, and read dimensions off exact ranks.  Random points over a large
prime field behave like points in general position; taking the extremal
value over several independent trials makes a wrong reading vanishingly
unlikely (see the failure bound discussed in the README).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_PRIME = 2147483647  # 2**31 - 1
DEFAULT_SEED = 0xC0FFEE
DEFAULT_TRIALS = 5


class PrimeFieldElement:
    """An element of Z/pZ for a fixed prime p, with field arithmetic."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int = DEFAULT_PRIME):
        self.modulus = modulus
        self.value = value % modulus

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli")
            return other.value
        return int(other) % self.modulus

    def __add__(self, other):
        return PrimeFieldElement(self.value + self._coerce(other), self.modulus)

    def __sub__(self, other):
        return PrimeFieldElement(self.value - self._coerce(other), self.modulus)

    def __mul__(self, other):
        return PrimeFieldElement(self.value * self._coerce(other), self.modulus)

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return PrimeFieldElement(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o == 0:
            raise ZeroDivisionError("division by zero")
        return PrimeFieldElement(self.value * pow(o, -1, self.modulus), self.modulus)

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.modulus)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.value == other.value and self.modulus == other.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __repr__(self):
        return f"PrimeFieldElement({self.value}, mod {self.modulus})"


def rank_mod_p(matrix: np.ndarray, p: int = DEFAULT_PRIME) -> int:
    """Rank of an integer matrix over Z/pZ by Gaussian elimination.

    Entries and intermediate products stay below 2**63 because
    (p-1)**2 < 2**63 for p = 2**31 - 1, so plain int64 arithmetic is exact.
    """
    A = np.array(matrix, dtype=np.int64) % p
    rows, cols = A.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        pivot = None
        for i in range(rank, rows):
            if A[i, c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != rank:
            A[[rank, pivot]] = A[[pivot, rank]]
        inv = pow(int(A[rank, c]), -1, p)
        A[rank] = A[rank] * inv % p
        live = A[rank + 1:, c] != 0
        if live.any():
            idx = np.nonzero(live)[0] + rank + 1
            A[idx] = (A[idx] - A[idx, c:c + 1] * A[rank]) % p
        rank += 1
    return rank


def rref_mod_p(matrix: np.ndarray, p: int = DEFAULT_PRIME):
    """Reduced row echelon form over Z/pZ; returns (R, pivot columns)."""
    A = np.array(matrix, dtype=np.int64) % p
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = None
        for i in range(r, rows):
            if A[i, c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = A[r] * inv % p
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        pivots.append(c)
        r += 1
    return A, pivots


def kernel_basis_mod_p(matrix: np.ndarray, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Basis of the right kernel, one vector per row, in a fixed order.

    The basis is the standard one read off the reduced echelon form: one
    vector per free column, with a 1 in that column.  Deterministic, so
    downstream computations are reproducible.
    """
    A = np.array(matrix, dtype=np.int64)
    cols = A.shape[1]
    R, pivots = rref_mod_p(A, p)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, c in enumerate(pivots):
            basis[row, c] = (-int(R[i, f])) % p
    return basis


class PrimeFieldMatrix:
    """Dense matrix over Z/pZ backed by an int64 array."""

    def __init__(self, entries, p: int = DEFAULT_PRIME):
        self.p = p
        self.array = np.array(entries, dtype=np.int64) % p
        if self.array.ndim != 2:
            raise ValueError("expected a two dimensional array")

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    def __getitem__(self, key) -> PrimeFieldElement:
        i, j = key
        return PrimeFieldElement(int(self.array[i, j]), self.p)

    def rank(self) -> int:
        return rank_mod_p(self.array, self.p)

    def kernel_basis(self) -> np.ndarray:
        return kernel_basis_mod_p(self.array, self.p)

    def transpose(self) -> "PrimeFieldMatrix":
        return PrimeFieldMatrix(self.array.T, self.p)

    def __repr__(self):
        return f"PrimeFieldMatrix({self.rows}x{self.cols}, mod {self.p})"


def monomial_basis(k: int) -> list[tuple[int, int, int]]:
    """Exponent triples (i, j, l), i+j+l = k, in graded lex order x > y > z."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    return [(i, j, k - i - j) for i in range(k, -1, -1) for j in range(k - i, -1, -1)]


@dataclass(frozen=True)
class FatPointSystem:
    """Degree-k plane curves with r-fold points at s unspecified points."""

    degree: int
    multiplicity: int
    point_count: int

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        if self.point_count < 1:
            raise ValueError("point count must be positive")

    @property
    def ambient_dim(self) -> int:
        k = self.degree
        return (k + 1) * (k + 2) // 2

    @property
    def conditions(self) -> int:
        r = self.multiplicity
        return self.point_count * r * (r + 1) // 2

    @property
    def expected_h0(self) -> int:
        return max(0, self.ambient_dim - self.conditions)


@dataclass(frozen=True)
class PointConfiguration:
    """Distinct affine points over Z/pZ, regenerable from a seed."""

    points: tuple[tuple[int, int], ...]
    seed: int | None = None

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be pairwise distinct")

    @classmethod
    def random(cls, count: int, seed: int, p: int = DEFAULT_PRIME,
               trial: int = 0) -> "PointConfiguration":
        """Uniform distinct points in the affine chart z = 1.

        Each (seed, trial) pair gets its own child stream, so trials are
        independent and the whole draw is reproducible bit for bit.
        """
        ss = np.random.SeedSequence(entropy=seed, spawn_key=(trial,))
        gen = np.random.Generator(np.random.PCG64(ss))
        pts: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        while len(pts) < count:
            x = int(gen.integers(0, p))
            y = int(gen.integers(0, p))
            if (x, y) in seen:
                continue  # collision, draw again
            seen.add((x, y))
            pts.append((x, y))
        return cls(points=tuple(pts), seed=seed)


def _falling(n: int, a: int) -> int:
    out = 1
    for t in range(a):
        out *= n - t
    return out


def vanishing_matrix(cfg: PointConfiguration, system: FatPointSystem,
                     p: int = DEFAULT_PRIME) -> np.ndarray:
    """Interpolation matrix whose kernel is the fat-point linear system.

    One row per derivative condition: all partials d^a/dx^a d^b/dy^b with
    a + b <= r - 1 of the dehomogenized (z = 1) degree-k polynomial,
    evaluated at each configuration point.  Columns follow monomial_basis.
    """
    pts = cfg.points
    if len(pts) != system.point_count:
        raise ValueError("configuration size does not match the system")
    if len(set(pts)) != len(pts):
        raise ValueError("repeated point in configuration")
    k = system.degree
    r = system.multiplicity
    mons = monomial_basis(k)
    n_rows = len(pts) * r * (r + 1) // 2
    A = np.zeros((n_rows, len(mons)), dtype=np.int64)
    row = 0
    for x0, y0 in pts:
        xpow = [1] * (k + 1)
        ypow = [1] * (k + 1)
        for e in range(1, k + 1):
            xpow[e] = xpow[e - 1] * x0 % p
            ypow[e] = ypow[e - 1] * y0 % p
        for a in range(r):
            for b in range(r - a):
                for col, (i, j, _) in enumerate(mons):
                    if i >= a and j >= b:
                        coef = _falling(i, a) * _falling(j, b) % p
                        A[row, col] = coef * xpow[i - a] % p * ypow[j - b] % p
                row += 1
    return A


def h0_fatpoints(system: FatPointSystem, trials: int = DEFAULT_TRIALS,
                 seed: int = DEFAULT_SEED, p: int = DEFAULT_PRIME) -> int:
    """Generic number of independent curves in the system.

    Minimum of (ambient dimension - rank) over the trials: a special
    configuration can only enlarge the kernel, never shrink it, so the
    minimum is the generic value unless every trial was unlucky.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    best = None
    for t in range(trials):
        cfg = PointConfiguration.random(system.point_count, seed, p, trial=t)
        h0 = system.ambient_dim - rank_mod_p(vanishing_matrix(cfg, system, p), p)
        best = h0 if best is None else min(best, h0)
    return best


def h1_fatpoints(system: FatPointSystem, trials: int = DEFAULT_TRIALS,
                 seed: int = DEFAULT_SEED, p: int = DEFAULT_PRIME) -> int:
    """First cohomology dimension, h0 minus the Euler characteristic."""
    h0 = h0_fatpoints(system, trials, seed, p)
    return h0 - (system.ambient_dim - system.conditions)


def speciality_defect(system: FatPointSystem, trials: int = DEFAULT_TRIALS,
                      seed: int = DEFAULT_SEED, p: int = DEFAULT_PRIME) -> int:
    """Measured h0 minus the naive count; zero means non-special."""
    return h0_fatpoints(system, trials, seed, p) - system.expected_h0


def alpha_rank(d: int, s: int, trials: int = DEFAULT_TRIALS,
               seed: int = DEFAULT_SEED,
               p: int = DEFAULT_PRIME) -> tuple[int, int, int]:
    """Rank data of the multiplication map on sections through s points.

    Let V_k be the degree-k curves through the s points (simple base
    points).  The map sends V_{d-1} tensored with the linear forms x, y, z
    into V_d.  Returns (rank, dim_source, dim_target) where dim_source is
    3 * dim V_{d-1} and dim_target is dim V_d, measured at the same random
    configuration.  Surjective iff rank == dim_target, injective iff
    rank == dim_source.

    The reported triple comes from the single most generic trial (highest
    rank, then smallest dimensions), so its three numbers are mutually
    consistent.
    """
    if d < 2:
        raise ValueError("need degree at least 2")
    if s < 1:
        raise ValueError("need at least one point")
    if trials < 1:
        raise ValueError("need at least one trial")
    low = monomial_basis(d - 1)
    high_index = {mon: t for t, mon in enumerate(monomial_basis(d))}
    n_high = len(high_index)
    shifts = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    maps = [np.array([high_index[(i + si, j + sj, l + sl)] for (i, j, l) in low])
            for (si, sj, sl) in shifts]

    best: tuple[int, int, int] | None = None
    sys_low = FatPointSystem(d - 1, 1, s)
    sys_high = FatPointSystem(d, 1, s)
    for t in range(trials):
        cfg = PointConfiguration.random(s, seed, p, trial=t)
        kernel = kernel_basis_mod_p(vanishing_matrix(cfg, sys_low, p), p)
        dim_source = 3 * kernel.shape[0]
        prod = np.zeros((dim_source, n_high), dtype=np.int64)
        for v, vec in enumerate(kernel):
            for w, col_map in enumerate(maps):
                prod[3 * v + w, col_map] = vec
        rank = rank_mod_p(prod, p)
        dim_target = sys_high.ambient_dim - rank_mod_p(
            vanishing_matrix(cfg, sys_high, p), p)
        triple = (rank, dim_source, dim_target)
        if best is None or (rank, -dim_source, -dim_target) > (
                best[0], -best[1], -best[2]):
            best = triple
    return best
