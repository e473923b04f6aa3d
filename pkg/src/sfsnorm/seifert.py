"""Small Seifert fibered spaces over S^2 with three exceptional fibers.

A presentation S^2((a1,b1),(a2,b2),(a3,b3)) records, for each exceptional
fiber, the gluing of a solid torus to the trivially fibered complement:
meridian and longitude map to a*[h] + b*[v] and g*[h] + d*[v] with
determinant ad - bg = 1.  Only (a, b) is intrinsic; (g, d) is a choice of
completion, and every quantity computed downstream is invariant under
(g, d) -> (g + t*a, d + t*b).

Smallness requires sum(b_i/a_i) != 0, otherwise the manifold contains an
orientable horizontal incompressible surface and none of the one-sided
machinery applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .errors import PresentationError


def complete_matrix(alpha, beta):
    """Canonical determinant-one completion of an exceptional fiber pair.

    delta is the least positive solution of alpha*delta = 1 (mod beta),
    gamma = (alpha*delta - 1)/beta.  For |beta| = 1 this gives delta = 1,
    matching the completions conventionally written for (2,-1), (2n,1)
    and friends.
    """
    _check_fiber_pair(alpha, beta)
    m = abs(beta)
    delta = 1 if m == 1 else pow(alpha, -1, m)
    gamma = (alpha * delta - 1) // beta
    return FiberMatrix(alpha, beta, gamma, delta)


def _check_fiber_pair(alpha, beta):
    if alpha < 2:
        raise PresentationError(
            f"fiber multiplicity must be at least 2, got alpha={alpha} "
            "(alpha < 2 degenerates to a lens space)")
    if gcd(alpha, beta) != 1:
        raise PresentationError(
            f"fiber pair ({alpha}, {beta}) is not coprime")


@dataclass(frozen=True)
class FiberMatrix:
    """Gluing matrix (alpha beta; gamma delta) of one exceptional fiber."""

    alpha: int
    beta: int
    gamma: int
    delta: int

    def __post_init__(self):
        _check_fiber_pair(self.alpha, self.beta)
        det = self.alpha * self.delta - self.beta * self.gamma
        if det != 1:
            raise PresentationError(
                f"gluing matrix ({self.alpha} {self.beta}; "
                f"{self.gamma} {self.delta}) has determinant {det}, not 1")

    @property
    def pair(self):
        return (self.alpha, self.beta)

    def shifted(self, t):
        """The equivalent completion (gamma + t*alpha, delta + t*beta)."""
        return FiberMatrix(self.alpha, self.beta,
                           self.gamma + t * self.alpha,
                           self.delta + t * self.beta)


@dataclass(frozen=True)
class SeifertPresentation:
    """Ordered triple of fiber matrices with nonzero Euler sum."""

    fibers: tuple

    def __post_init__(self):
        fibers = tuple(self.fibers)
        object.__setattr__(self, "fibers", fibers)
        if len(fibers) != 3 or not all(isinstance(f, FiberMatrix)
                                       for f in fibers):
            raise PresentationError("a presentation needs three fiber "
                                    "matrices")
        if self.euler_sum() == 0:
            raise PresentationError(
                "sum(beta_i/alpha_i) = 0: the manifold is not small "
                "(a horizontal incompressible surface exists)")

    @classmethod
    def from_pairs(cls, pairs):
        pairs = tuple(pairs)
        if len(pairs) != 3:
            raise PresentationError("a presentation needs three (alpha, "
                                    "beta) pairs")
        return cls(tuple(complete_matrix(a, b) for a, b in pairs))

    def euler_sum(self):
        return sum((Fraction(f.beta, f.alpha) for f in self.fibers),
                   Fraction(0))

    @property
    def alphas(self):
        return tuple(f.alpha for f in self.fibers)

    @property
    def betas(self):
        return tuple(f.beta for f in self.fibers)

    def pairs(self):
        return tuple(f.pair for f in self.fibers)

    def permuted(self, order):
        """Fibers reordered by the index triple ``order``."""
        if sorted(order) != [0, 1, 2]:
            raise PresentationError(f"not a permutation of 0,1,2: {order}")
        return SeifertPresentation(tuple(self.fibers[i] for i in order))


class HomologyCase(Enum):
    TRIVIAL = "trivial"
    CYCLIC_VERTICAL = "cyclic_vertical"
    CYCLIC_TWO_EVEN = "cyclic_two_even"
    KLEIN_FOUR = "klein_four"


@dataclass(frozen=True)
class Z2Class:
    """A nonzero class in H_2(M; Z/2), tagged by parities against the
    horizontal curves h_1, h_2, h_3.

    In the Klein four case the three nonzero classes are exactly the
    triples of even weight, dual to the pseudo-vertical surfaces.  In the
    single-class cases the tag is a fixed conventional label: the even-a
    indicator when exactly two multiplicities are even, and (1, 1, 1)
    when all multiplicities are odd (an intentionally impossible honest
    parity vector, so it cannot be mistaken for one).
    """

    parities: tuple

    def __post_init__(self):
        ps = tuple(int(p) for p in self.parities)
        object.__setattr__(self, "parities", ps)
        if len(ps) != 3 or any(p not in (0, 1) for p in ps):
            raise PresentationError(f"parities must be three bits: {ps}")
        if ps == (0, 0, 0):
            raise PresentationError("(0, 0, 0) is the zero class")

    @property
    def label(self):
        return "".join(str(p) for p in self.parities)


@dataclass(frozen=True)
class HomologyStructure:
    """H_1(M; Z/2) = H_2(M; Z/2) and its nonzero classes."""

    case: HomologyCase
    nonzero_classes: tuple

    def __post_init__(self):
        expected = {HomologyCase.TRIVIAL: 0,
                    HomologyCase.CYCLIC_VERTICAL: 1,
                    HomologyCase.CYCLIC_TWO_EVEN: 1,
                    HomologyCase.KLEIN_FOUR: 3}[self.case]
        if len(self.nonzero_classes) != expected:
            raise PresentationError(
                f"{self.case.value} needs {expected} classes, got "
                f"{len(self.nonzero_classes)}")


# Conventional tag for the unique class when all multiplicities are odd.
VERTICAL_DUAL_CLASS = Z2Class((1, 1, 1))


def homology_structure(presentation):
    """Case analysis of H_1(M; Z/2) on the parities of the alphas.

    With all alphas odd the group is trivial or Z/2 according to the
    parity of beta1 + beta2 + beta3 (and the nonzero class, when present,
    pairs with the regular fiber).  One even alpha kills the group, two
    even alphas give Z/2, three give the Klein four group whose nonzero
    classes pair nontrivially with exactly the two h-curves of the
    corresponding even fibers.
    """
    alphas = presentation.alphas
    evens = [i for i, a in enumerate(alphas) if a % 2 == 0]
    if len(evens) == 0:
        if sum(presentation.betas) % 2 != 0:
            return HomologyStructure(HomologyCase.TRIVIAL, ())
        return HomologyStructure(HomologyCase.CYCLIC_VERTICAL,
                                 (VERTICAL_DUAL_CLASS,))
    if len(evens) == 1:
        return HomologyStructure(HomologyCase.TRIVIAL, ())
    if len(evens) == 2:
        parities = tuple(1 if i in evens else 0 for i in range(3))
        return HomologyStructure(HomologyCase.CYCLIC_TWO_EVEN,
                                 (Z2Class(parities),))
    return HomologyStructure(HomologyCase.KLEIN_FOUR,
                             (Z2Class((1, 1, 0)), Z2Class((1, 0, 1)),
                              Z2Class((0, 1, 1))))


def normalize_even_betas(presentation):
    """Fiber moves making every beta even, when parity allows it.

    Requires all alphas odd and an even beta sum.  A compensating pair of
    moves beta_i += alpha_i, beta_j -= alpha_j flips the two odd
    parities and preserves sum(beta/alpha).
    """
    if any(a % 2 == 0 for a in presentation.alphas):
        raise PresentationError("fiber moves cannot fix parities unless "
                                "all alphas are odd")
    if sum(presentation.betas) % 2 != 0:
        raise PresentationError("odd beta sum: no fiber moves make all "
                                "betas even")
    odd = [i for i, b in enumerate(presentation.betas) if b % 2 != 0]
    if not odd:
        return presentation
    i, j = odd
    pairs = list(presentation.pairs())
    pairs[i] = (pairs[i][0], pairs[i][1] + pairs[i][0])
    pairs[j] = (pairs[j][0], pairs[j][1] - pairs[j][0])
    moved = SeifertPresentation.from_pairs(pairs)
    if moved.euler_sum() != presentation.euler_sum():
        raise PresentationError("fiber move changed the Euler sum")
    return moved


def to_orlik_normal_form(presentation):
    """(e, ((a1,b1'),(a2,b2'),(a3,b3'))) with 0 < b' < a.

    e + sum(b'_i/a_i) = sum(b_i/a_i); the triple plus e is constant on
    fiber move orbits, so its string form serves as a canonical key.
    """
    e = 0
    triples = []
    for alpha, beta in presentation.pairs():
        e += beta // alpha
        triples.append((alpha, beta % alpha))
    return e, tuple(triples)
