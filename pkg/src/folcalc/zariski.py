"""Zariski decomposition relative to a curve configuration.

D = P + N with P pairing nonnegatively with every listed curve, N effective
with negative definite support and P . N_i = 0. The support is grown
iteratively: solve for the combination N on the current support that matches
D there, then adopt every curve the remainder still meets negatively. Each
pass only adds curves, so the loop ends within one pass per curve. Ties (two
or more curves turning negative in the same pass) are adopted simultaneously,
which keeps the outcome independent of any curve ordering.

"Pseudoeffective relative to the configuration" means exactly that this
procedure succeeds with N >= 0; cone membership on an actual surface is not
decidable from the finite data here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPseudoeffectiveError, ValidationError
from .lattice import (
    DualGraph,
    QDivisor,
    degree_against_curve,
    is_negative_definite,
)
from .linalg import solve_exact


@dataclass(frozen=True)
class ZariskiResult:
    """positive + negative = the decomposed divisor; support = supp(negative)."""

    positive: QDivisor
    negative: QDivisor
    support: tuple[str, ...]


def zariski_decompose(graph: DualGraph, d: QDivisor) -> ZariskiResult:
    """Split d into its nef and contractible parts relative to the graph.

    Raises NotPseudoeffectiveError when the accumulated support stops being
    negative definite or the solved negative part picks up a negative
    coefficient.
    """
    if d.graph != graph:
        raise ValidationError("divisor belongs to a different graph")
    labels = graph.labels
    target = {label: degree_against_curve(d, label) for label in labels}
    support: list[str] = []
    coeffs: dict[str, Fraction] = {}
    for _ in range(len(labels) + 1):
        if support:
            if not is_negative_definite(graph, support):
                raise NotPseudoeffectiveError(
                    "not pseudoeffective relative to configuration: "
                    "support is not negative definite"
                )
            idxs = [graph.index_of(label) for label in support]
            sub = [[graph.matrix[i][j] for j in idxs] for i in idxs]
            rhs = [target[label] for label in support]
            xs = solve_exact(sub, rhs)
            coeffs = dict(zip(support, xs))
        negative = QDivisor(graph, coeffs)
        positive = d - negative
        newly = [
            label
            for label in labels
            if label not in coeffs and degree_against_curve(positive, label) < 0
        ]
        if not newly:
            break
        support = [label for label in labels if label in coeffs or label in newly]
        coeffs = {label: coeffs.get(label, Fraction(0)) for label in support}
    if not negative.is_effective():
        raise NotPseudoeffectiveError(
            "not pseudoeffective relative to configuration: negative part is not effective"
        )
    return ZariskiResult(positive=positive, negative=negative, support=negative.support)


def pseudo_threshold(d1_sq, d1_d2, alpha) -> Fraction:
    """Smallest certified multiplier beta with beta*D1 - D2 pseudoeffective.

    Pure arithmetic: beta = 2 (D1.D2)/D1^2 + alpha. The geometric hypotheses
    (D1 nef and big, D2 + alpha*D1 nef) are the caller's responsibility.
    """
    d1_sq = Fraction(d1_sq)
    d1_d2 = Fraction(d1_d2)
    alpha = Fraction(alpha)
    if d1_sq <= 0:
        raise ValidationError("D1^2 must be positive")
    if alpha < 0:
        raise ValidationError("alpha must be nonnegative")
    return 2 * d1_d2 / d1_sq + alpha
