"""Where the two constructions meet: enumeration and geography data.

A pair of invariants (x', y) = (p_g, c1^2) is interesting here when it is
realized both by a rigid degree-2 canonical cover (a pair (d, s) in the
DEGREE2_ALWAYS zone) and by a smooth surface on a rational normal scroll.
Such a pair forces the corresponding moduli space to contain at least two
components with different canonical behavior.  This module enumerates
those pairs line by line, with an explicit scroll witness attached to
every emitted point, and also produces the line-and-interval data that
locates all the covers in the (chi, c1^2) plane.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, isqrt

from .classify import BlowupPair, DeformationClass, deformation_class
from .invariants import cover_invariants
from .scrolls import DivisorClass, ScrollSpec, on_line, scroll_admissible, scroll_surface_invariants


def s_for_degree(m: int, d: int) -> Fraction:
    """Point count s making the (d, s) cover land on the line for m.

    Exact rational; a fractional value simply means no cover with that
    degree sits on the line.
    """
    if m < 4:
        raise ValueError("m must be at least 4")
    if d < 1:
        raise ValueError("d must be positive")
    den = 2 * (2 * m - 7)
    return (Fraction((m - 5) * d * d, den)
            + Fraction(9 * (m - 3) * d, den)
            - Fraction((m - 3) ** 2 * (m + 4), den))


# Residues of d (mod the listed modulus) for which the arithmetic chain
# closes: s integral and the scroll class quantity r*m + 3*l integral.
CONGRUENCES: dict[int, tuple[int, frozenset[int]]] = {
    5: (4, frozenset({1, 2})),
    6: (25, frozenset({0, 3})),
    7: (7, frozenset({4, 6})),
    8: (21, frozenset({5, 19})),
    9: (88, frozenset({6, 30, 61, 85})),
    10: (39, frozenset({7, 20, 22, 35})),
}


def congruence_ok(m: int, d: int) -> bool:
    if m not in CONGRUENCES:
        raise ValueError("congruence table covers 5 <= m <= 10 only")
    modulus, residues = CONGRUENCES[m]
    return d % modulus in residues


def scroll_class_total(m: int, x_prime: int) -> Fraction:
    """The quantity r*m + 3*l forced by p_g = x_prime on the line for m."""
    if m < 4:
        raise ValueError("m must be at least 4")
    return Fraction(6 * x_prime, (m - 1) * (m - 2)) + 3 * (m + 1)


@dataclass(frozen=True)
class ScrollWitness:
    r: int
    l: int
    a: int
    b: int
    c: int


def find_witness(m: int, total: int) -> ScrollWitness | None:
    """Admissible scroll data with r*m + 3*l == total, or None.

    Checking r in {6, 7, 8} is exhaustive: for fixed total, both
    positivity slacks evaluated at the largest allowed a depend only on
    r mod 3, so if the smallest representative of a residue class fails,
    every r in that class fails.  Within the chosen (r, l) the returned
    partition (a, a, r-3-2a) with the smallest admissible a is the
    lexicographically smallest admissible one, because admissibility only
    constrains the minimum entry a.
    """
    for r in (6, 7, 8):
        if (total - r * m) % 3:
            continue
        l = (total - r * m) // 3
        cls = DivisorClass(m, l)
        for a in range(1, (r - 3) // 3 + 1):
            spec = ScrollSpec(a, a, r - 3 - 2 * a)
            if scroll_admissible(spec, cls):
                return ScrollWitness(r=r, l=l, a=spec.a, b=spec.b, c=spec.c)
    return None


@dataclass(frozen=True)
class TwoComponentPoint:
    """An invariant pair realized by both constructions, with its witness."""

    x_prime: int
    y: int
    m: int
    d: int
    s: int
    scroll_witness: ScrollWitness


@dataclass(frozen=True)
class UnwitnessedCandidate:
    """A cover on the line not matched by any divisor of this line's class.

    These are reported rather than silently dropped; "reason" says which
    step of the witness search ruled them out.  A candidate rejected here
    can still be a point of another line's enumeration, since distinct
    lines intersect.
    """

    d: int
    s: int
    x_prime: int
    y: int
    reason: str


@dataclass(frozen=True)
class Enumeration:
    m: int
    d_max: int
    points: tuple[TwoComponentPoint, ...]
    unwitnessed: tuple[UnwitnessedCandidate, ...]


def two_component_points(m: int, d_max: int) -> Enumeration:
    """Enumerate certified points on the line for m with cover degree <= d_max.

    A degree d survives when s_for_degree(m, d) is an integer >= 1 and the
    pair (d, s) classifies as DEGREE2_ALWAYS.  Each survivor is then either
    certified by an explicit admissible scroll witness or reported in the
    unwitnessed list.  Deterministic; an empty result is meaningful.
    """
    if m < 4:
        raise ValueError("m must be at least 4")
    if d_max < 2:
        raise ValueError("d_max must be at least 2")
    points: list[TwoComponentPoint] = []
    unwitnessed: list[UnwitnessedCandidate] = []
    for d in range(2, d_max + 1):
        s_frac = s_for_degree(m, d)
        if s_frac.denominator != 1:
            continue
        s = int(s_frac)
        if s < 1:
            continue
        pair = BlowupPair(d, s)
        if deformation_class(pair) is not DeformationClass.DEGREE2_ALWAYS:
            continue
        inv = cover_invariants(pair)
        x_prime, y = inv.p_g, inv.c1sq
        if not on_line(m, (x_prime, y)):
            raise AssertionError(f"cover ({d},{s}) missed its own line, m={m}")
        total = scroll_class_total(m, x_prime)
        if total.denominator != 1:
            unwitnessed.append(UnwitnessedCandidate(
                d, s, x_prime, y, "r*m+3*l is not an integer"))
            continue
        witness = find_witness(m, int(total))
        if witness is None:
            unwitnessed.append(UnwitnessedCandidate(
                d, s, x_prime, y, "no admissible scroll"))
            continue
        spec = ScrollSpec(witness.a, witness.b, witness.c)
        if scroll_surface_invariants(spec, DivisorClass(m, witness.l)) != (x_prime, y):
            raise AssertionError(f"witness does not reproduce ({x_prime},{y})")
        points.append(TwoComponentPoint(
            x_prime=x_prime, y=y, m=m, d=d, s=s, scroll_witness=witness))
    return Enumeration(m=m, d_max=d_max, points=tuple(points),
                       unwitnessed=tuple(unwitnessed))


@dataclass(frozen=True)
class GeographyLine:
    """For one value of d, the line chi -> c1^2 and its realized x interval.

    The line is y = 2*x + intercept with intercept = d^2 - 3*d - 4; the
    integer points with x_min <= x <= x_max are the (chi, c1sq) pairs of
    actual covers.
    """

    d: int
    intercept: int
    x_min: int
    x_max: int


# Realized chi intervals for small d, where the degree-1 pairs extend the
# rigid zone downwards.
SMALL_D_INTERVALS = {2: (6, 6), 3: (5, 10), 4: (6, 15), 5: (8, 21), 6: (13, 28)}

# Coefficient tuples (A, B, C, D, E) for A*x^2 + B*x*y + C*y^2 + D*x + E*y = 0.
# Together these two conic arcs cut out, on each line for d >= 7, exactly
# the realized chi interval: the first passes through the s = 1 endpoints,
# the second through the maximal-s endpoints.
UPPER_ENDPOINT_CONIC = (16, -8, 1, -48, -6)
LOWER_ENDPOINT_CONIC = (256, -96, 9, -638, 44)


def _line_conic_roots(conic, intercept: int) -> tuple[Fraction, Fraction]:
    """Both x values where the conic meets y = 2*x + intercept, exactly."""
    A, B, C, D, E = conic
    c0 = intercept
    # substitute y = 2x + c0 and collect the quadratic in x
    qa = A + 2 * B + 4 * C
    qb = B * c0 + 4 * C * c0 + D + 2 * E
    qc = C * c0 * c0 + E * c0
    disc = qb * qb - 4 * qa * qc
    root = isqrt(disc)
    if root * root != disc:
        raise AssertionError(f"discriminant {disc} is not a perfect square")
    return (Fraction(-qb - root, 2 * qa), Fraction(-qb + root, 2 * qa))


def geography_lines(d_values) -> list[GeographyLine]:
    """Line and realized interval for each requested d, sorted by d."""
    out = []
    for d in sorted(set(int(d) for d in d_values)):
        if d < 2:
            raise ValueError("d must be at least 2")
        intercept = d * d - 3 * d - 4
        if d in SMALL_D_INTERVALS:
            x_min, x_max = SMALL_D_INTERVALS[d]
        else:
            hi = max(_line_conic_roots(UPPER_ENDPOINT_CONIC, intercept))
            lo = max(_line_conic_roots(LOWER_ENDPOINT_CONIC, intercept))
            if hi.denominator != 1:
                raise AssertionError(f"upper endpoint not integral for d={d}")
            x_min, x_max = ceil(lo), int(hi)
        out.append(GeographyLine(d=d, intercept=intercept, x_min=x_min, x_max=x_max))
    return out
