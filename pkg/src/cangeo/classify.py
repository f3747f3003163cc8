"""Case analysis for pairs (d, s): embedding line bundle d*L - E_1 - ... - E_s.

Pure integer arithmetic.  Every zone boundary is evaluated with exact
rationals, never floats, because several bounds land exactly on
half-integers and an off-by-one there flips a verdict.

Verdicts are three valued.  "Unknown" is reserved for the gaps where
neither the sufficient nor the necessary bound applies; those gaps are
genuinely open and the code does not pretend otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class TriState(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class DeformationClass(Enum):
    """How the canonical morphism of a general deformation behaves.

    DEGREE1: the double cover deforms to a surface whose canonical map is
    birational onto its image.  DEGREE2_ALWAYS: every small deformation
    keeps a degree 2 canonical morphism.  OPEN_QUESTION: not settled.
    NOT_APPLICABLE: there is no smooth canonical double cover to deform.
    """

    DEGREE1 = "degree1"
    DEGREE2_ALWAYS = "degree2_always"
    OPEN_QUESTION = "open_question"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class BlowupPair:
    """d >= 2 and s >= 1: degree of the plane model and number of points."""

    d: int
    s: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("d must be at least 2")
        if self.s < 1:
            raise ValueError("s must be at least 1")


# The seven pairs whose covers deform to birational canonical morphisms,
# and the two pairs where the question is open.
DEGREE1_PAIRS = frozenset(
    {(3, 5), (3, 6), (4, 8), (4, 9), (4, 10), (5, 13), (5, 14)})
OPEN_PAIRS = frozenset({(5, 12), (6, 17)})


def _half(n: int) -> Fraction:
    return Fraction(n, 2)


def very_ample(pair: BlowupPair) -> TriState:
    """Is d*L - E very ample on the blown up plane?  Never unknown."""
    d, s = pair.d, pair.s
    if d == 2:
        ok = s == 1
    elif d == 3:
        ok = s <= 6
    elif d == 4:
        ok = s <= 10
    else:
        ok = s <= _half(d * d) + Fraction(3, 2) * d - 5
    return TriState.YES if ok else TriState.NO


def smooth_cover_exists(pair: BlowupPair) -> TriState:
    """Does a smooth canonical double cover branch divisor exist?

    For d <= 4 this is settled either way.  For d = 5 the answer is yes up
    to s = 14 and no from s = 16 on, leaving s = 15 open.  For d >= 6 there
    is a sufficient bound and a necessary bound with a genuine gap between
    them.
    """
    d, s = pair.d, pair.s
    if d == 2:
        return TriState.YES if s == 1 else TriState.NO
    if d == 3:
        return TriState.YES if s <= 6 else TriState.NO
    if d == 4:
        return TriState.YES if s <= 10 else TriState.NO
    necessary = Fraction(d * d, 5) + Fraction(3, 2) * d + Fraction(14, 5)
    if d == 5:
        if s <= 14:
            return TriState.YES
        return TriState.NO if s >= necessary else TriState.UNKNOWN
    sufficient = Fraction(d * d, 5) + Fraction(13, 10) * d + Fraction(21, 10)
    if s <= sufficient:
        return TriState.YES
    if s >= necessary:
        return TriState.NO
    return TriState.UNKNOWN


def alpha_surjective(pair: BlowupPair) -> TriState:
    """Is the multiplication map of sections surjective for (d, s)?

    For d <= 4 the answer is an exact iff.  For d >= 5 there are a yes
    zone, a no zone, and a one or two integer gap in between that stays
    unknown.
    """
    d, s = pair.d, pair.s
    if d == 2:
        return TriState.YES if (s == 1 or s >= 6) else TriState.NO
    if d == 3:
        return TriState.YES if (s <= 4 or s >= 10) else TriState.NO
    if d == 4:
        return TriState.YES if (s <= 7 or s >= 15) else TriState.NO
    low_yes = _half(d * d) - _half(d) + 1     # integer for every d
    no_from = _half(d * d) - _half(1)         # half-integer for even d
    no_to = _half(d * d) + Fraction(3, 2) * d + 1
    if s <= low_yes or s >= no_to:
        return TriState.YES
    if no_from < s < no_to:
        return TriState.NO
    return TriState.UNKNOWN


def ext1_nonzero(pair: BlowupPair) -> TriState:
    """Are there nontrivial ribbon structures, i.e. is the Ext group nonzero?

    This mirrors alpha_surjective with the verdicts flipped, since the
    relevant Ext group is the cokernel of the multiplication map.
    """
    d, s = pair.d, pair.s
    if d == 2:
        return TriState.YES if s >= 2 else TriState.NO
    if d == 3:
        return TriState.YES if s >= 5 else TriState.NO
    if d == 4:
        return TriState.YES if s >= 8 else TriState.NO
    low_no = _half(d * d) - _half(d) + 1
    yes_from = _half(d * d) - _half(1)
    if s <= low_no:
        return TriState.NO
    if s > yes_from:
        return TriState.YES
    return TriState.UNKNOWN


def degree2_zone(pair: BlowupPair) -> bool:
    """Inside the zone where the cover is rigidly of degree 2."""
    d, s = pair.d, pair.s
    if d == 2:
        return s == 1
    if 3 <= d <= 6:
        return s <= _half(d * d) - _half(d) + 1
    return s <= Fraction(2 * d * d + 13 * d + 21, 10)


def deformation_class(pair: BlowupPair) -> DeformationClass:
    """Which deformation behavior the pair exhibits.

    A pair with no smooth cover (or where that existence is itself open)
    gets NOT_APPLICABLE before anything else is considered.
    """
    if smooth_cover_exists(pair) is not TriState.YES:
        return DeformationClass.NOT_APPLICABLE
    key = (pair.d, pair.s)
    if key in DEGREE1_PAIRS:
        return DeformationClass.DEGREE1
    if key in OPEN_PAIRS:
        return DeformationClass.OPEN_QUESTION
    if degree2_zone(pair):
        return DeformationClass.DEGREE2_ALWAYS
    raise AssertionError(
        f"pair {key} has a smooth cover but no deformation class; "
        "this is a bug in the zone arithmetic")


@dataclass(frozen=True)
class ClassificationRecord:
    pair: BlowupPair
    very_ample: TriState
    smooth_cover: TriState
    alpha_surjective: TriState
    ext1_nonzero: TriState
    deformation: DeformationClass


def classify(pair: BlowupPair) -> ClassificationRecord:
    """All verdicts for one pair, with internal consistency enforced."""
    rec = ClassificationRecord(
        pair=pair,
        very_ample=very_ample(pair),
        smooth_cover=smooth_cover_exists(pair),
        alpha_surjective=alpha_surjective(pair),
        ext1_nonzero=ext1_nonzero(pair),
        deformation=deformation_class(pair),
    )
    if rec.deformation is DeformationClass.DEGREE1:
        if rec.ext1_nonzero is not TriState.YES or rec.smooth_cover is not TriState.YES:
            raise RuntimeError(f"inconsistent classification for {pair}: {rec}")
    if rec.deformation is DeformationClass.DEGREE2_ALWAYS:
        if rec.ext1_nonzero is not TriState.NO or rec.smooth_cover is not TriState.YES:
            raise RuntimeError(f"inconsistent classification for {pair}: {rec}")
    return rec


def zone_rule(pair: BlowupPair) -> str:
    """Human readable note saying which rule produced the deformation class."""
    d = pair.d
    cls = deformation_class(pair)
    if cls is DeformationClass.DEGREE1:
        return "listed degree-1 pair"
    if cls is DeformationClass.OPEN_QUESTION:
        return "open case"
    if cls is DeformationClass.NOT_APPLICABLE:
        if smooth_cover_exists(pair) is TriState.UNKNOWN:
            return "smooth cover existence open"
        if very_ample(pair) is TriState.NO:
            return "not very ample"
        return "no smooth cover"
    if d == 2:
        return "d=2 rigid cover (s=1)"
    if 3 <= d <= 6:
        return f"rigid cover zone s <= (d^2-d+2)/2 = {(d * d - d + 2) // 2}"
    return f"rigid cover zone s <= (2d^2+13d+21)/10 = {Fraction(2 * d * d + 13 * d + 21, 10)}"
