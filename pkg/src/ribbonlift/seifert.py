"""Seifert smoothing of an immersed circle and its filling surface.

An immersed circle is described by its Gauss word: the cyclic sequence of
double points met while running once around the circle, every label
occurring exactly twice. Smoothing every double point in the way that
respects the orientation yields ``m`` disjoint embedded circles; capping
them with disks and joining the disks by one band per double point gives a
surface with one boundary component that branch-covers the sphere with one
simple branch point per band.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import NotDoubleOccurrence
from .ribbon import perm_num_cycles


@dataclass(frozen=True)
class ImmersedCircleWord:
    word: tuple

    def __post_init__(self):
        word = tuple(self.word)
        bad = sorted(str(x) for x, k in Counter(word).items() if k != 2)
        if bad:
            raise NotDoubleOccurrence("labels not occurring exactly twice: %s" % " ".join(bad))
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> "ImmersedCircleWord":
        return cls(tuple(text.split()))

    @property
    def num_crossings(self) -> int:
        return len(self.word) // 2

    def __str__(self):
        return " ".join(map(str, self.word))


@dataclass(frozen=True)
class SeifertData:
    num_crossings: int
    num_seifert_circles: int
    euler_characteristic_sigma: int
    genus_sigma: int
    branch_points: int
    coorientation: str = "positive"


def _as_word(w) -> ImmersedCircleWord:
    return w if isinstance(w, ImmersedCircleWord) else ImmersedCircleWord(tuple(w))


def oriented_smoothing_count(w) -> int:
    """Number of Seifert circles.

    Arc ``k`` runs from letter ``k`` to letter ``k+1``. Smoothing the double
    point at positions ``i`` and ``j`` sends the arc ending at ``i`` on to
    the arc leaving ``j`` and vice versa.
    """
    word = _as_word(w).word
    n = len(word)
    if n == 0:
        return 1
    where = {}
    for i, x in enumerate(word):
        where.setdefault(x, []).append(i)
    succ = [0] * n
    for i, j in where.values():
        succ[(i - 1) % n] = j
        succ[(j - 1) % n] = i
    return perm_num_cycles(succ)


def fill_surface(w, coorientation: str = "positive") -> SeifertData:
    """Invariants of the Seifert filling; the coorientation is only recorded."""
    if coorientation not in ("positive", "negative"):
        raise ValueError("coorientation must be 'positive' or 'negative'")
    w = _as_word(w)
    m = oriented_smoothing_count(w)
    d = w.num_crossings
    return SeifertData(
        num_crossings=d,
        num_seifert_circles=m,
        euler_characteristic_sigma=m - d,
        genus_sigma=(1 - m + d) // 2,
        branch_points=d,
        coorientation=coorientation,
    )
