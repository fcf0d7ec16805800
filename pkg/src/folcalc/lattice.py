"""Curve configurations and their exact intersection theory.

A configuration is a finite list of labelled curves with integer
self-intersections together with a symmetric, nonnegative integer adjacency;
these assemble into the pairing matrix (C_i . C_j). Divisors supported on the
configuration are formal rational combinations of the curves and pair
bilinearly through that matrix. Prescribing the intersection number of an
unknown combination against every curve is an exact linear solve against the
pairing matrix; it has a unique solution exactly when the matrix is
invertible (negative definiteness suffices).

Everything here is pure and exact: scalars are ``fractions.Fraction``, there
is no floating point, and all functions are safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DegenerateConfigurationError, ValidationError
from .linalg import is_negative_definite_matrix, solve_exact
from .rationals import format_rational, parse_rational


@dataclass(frozen=True)
class Curve:
    """One vertex of a dual graph.

    ``is_nodal`` records that the curve carries a node; the pairing ignores
    the flag, it is bookkeeping for cycle-degenerations modelled as a single
    vertex.
    """

    label: str
    self_intersection: int
    is_exceptional: bool = True
    is_nodal: bool = False


class DualGraph:
    """Weighted configuration graph carrying the symmetric pairing.

    Off-diagonal intersection numbers are nonnegative integers; diagonal
    entries are the recorded self-intersections (any integer). Labels are
    unique. Arbitrary configurations are allowed, including cycles and
    non-definite lattices.
    """

    __slots__ = ("curves", "labels", "matrix", "_index")

    def __init__(self, curves: Iterable[Curve], edges: Iterable[Sequence] = ()):
        curves = tuple(curves)
        labels = tuple(c.label for c in curves)
        if len(set(labels)) != len(labels):
            raise ValidationError("curve labels must be unique")
        index = {label: i for i, label in enumerate(labels)}
        n = len(curves)
        matrix = [[0] * n for _ in range(n)]
        for i, c in enumerate(curves):
            if not isinstance(c.self_intersection, int):
                raise ValidationError(f"self-intersection of {c.label!r} must be an integer")
            matrix[i][i] = c.self_intersection
        for edge in edges:
            a, b, mult = edge
            if a not in index or b not in index:
                raise ValidationError(f"edge {a!r}-{b!r} uses an unknown label")
            if a == b:
                raise ValidationError(f"edge {a!r}-{b!r} is a loop; use the self-intersection instead")
            if not isinstance(mult, int) or mult < 0:
                raise ValidationError(f"edge {a!r}-{b!r} multiplicity must be a nonnegative integer")
            matrix[index[a]][index[b]] += mult
            matrix[index[b]][index[a]] += mult
        self.curves = curves
        self.labels = labels
        self.matrix = tuple(tuple(row) for row in matrix)
        self._index = index

    @classmethod
    def from_matrix(cls, labels: Sequence[str], matrix: Sequence[Sequence[int]]) -> "DualGraph":
        """Build a graph from a full symmetric integer matrix."""
        n = len(labels)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValidationError("matrix shape does not match the label count")
        for i in range(n):
            for j in range(n):
                if not isinstance(matrix[i][j], int):
                    raise ValidationError("matrix entries must be integers")
                if matrix[i][j] != matrix[j][i]:
                    raise ValidationError("matrix must be symmetric")
                if i != j and matrix[i][j] < 0:
                    raise ValidationError("off-diagonal intersection numbers must be nonnegative")
        curves = [Curve(label, matrix[i][i]) for i, label in enumerate(labels)]
        edges = [
            (labels[i], labels[j], matrix[i][j])
            for i in range(n)
            for j in range(i + 1, n)
            if matrix[i][j]
        ]
        return cls(curves, edges)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValidationError(f"unknown curve label {label!r}") from None

    def __len__(self) -> int:
        return len(self.curves)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DualGraph)
            and self.curves == other.curves
            and self.matrix == other.matrix
        )

    def __hash__(self) -> int:
        return hash((self.curves, self.matrix))

    def __repr__(self) -> str:
        return f"DualGraph({list(self.labels)!r})"


def _coeff_map(graph: DualGraph, coefficients: Mapping[str, object]) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    for label, value in coefficients.items():
        graph.index_of(label)
        v = value if isinstance(value, Fraction) else parse_rational(value)
        if v:
            out[label] = v
    return out


@dataclass(frozen=True, eq=False)
class QDivisor:
    """Formal rational combination of the curves of a graph.

    Zero coefficients are dropped, so equality of divisors is equality of the
    stored maps. Missing labels read as coefficient 0.
    """

    graph: DualGraph
    coefficients: Mapping[str, Fraction]

    def __init__(self, graph: DualGraph, coefficients: Mapping[str, object] = ()):
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "coefficients", _coeff_map(graph, dict(coefficients)))

    def coefficient(self, label: str) -> Fraction:
        self.graph.index_of(label)
        return self.coefficients.get(label, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_effective(self) -> bool:
        return all(v >= 0 for v in self.coefficients.values())

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(label for label in self.graph.labels if label in self.coefficients)

    def __add__(self, other: "QDivisor") -> "QDivisor":
        _require_same_graph(self, other)
        merged = dict(self.coefficients)
        for label, v in other.coefficients.items():
            merged[label] = merged.get(label, Fraction(0)) + v
        return QDivisor(self.graph, merged)

    def __sub__(self, other: "QDivisor") -> "QDivisor":
        return self + (-other)

    def __neg__(self) -> "QDivisor":
        return QDivisor(self.graph, {label: -v for label, v in self.coefficients.items()})

    def __rmul__(self, scalar) -> "QDivisor":
        s = Fraction(scalar)
        return QDivisor(self.graph, {label: s * v for label, v in self.coefficients.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QDivisor)
            and self.graph == other.graph
            and self.coefficients == other.coefficients
        )

    def __repr__(self) -> str:
        body = " + ".join(f"({format_rational(v)})*{k}" for k, v in sorted(self.coefficients.items()))
        return f"QDivisor({body or '0'})"


@dataclass(frozen=True, eq=False)
class IntersectionProfile:
    """Prescribed intersection numbers D . C_i, one per curve (missing = 0)."""

    graph: DualGraph
    degrees: Mapping[str, Fraction]

    def __init__(self, graph: DualGraph, degrees: Mapping[str, object] = ()):
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "degrees", _coeff_map(graph, dict(degrees)))

    def degree(self, label: str) -> Fraction:
        self.graph.index_of(label)
        return self.degrees.get(label, Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntersectionProfile)
            and self.graph == other.graph
            and self.degrees == other.degrees
        )


def _require_same_graph(a, b) -> None:
    if a.graph != b.graph:
        raise ValidationError("divisors live on different graphs")


def intersection_matrix(graph: DualGraph) -> list[list[int]]:
    """The full symmetric pairing matrix, diagonal included."""
    return [list(row) for row in graph.matrix]


def is_negative_definite(graph: DualGraph, support: Iterable[str]) -> bool:
    """Whether the principal submatrix on ``support`` is negative definite.

    Tested by the exact signs of the leading principal minors. The support is
    ordered by the graph's curve order, so the answer is deterministic (and,
    for definiteness, order-independent anyway).
    """
    chosen = {graph.index_of(label) for label in support}
    if not chosen:
        raise ValidationError("support must be nonempty")
    idxs = sorted(chosen)
    sub = [[graph.matrix[i][j] for j in idxs] for i in idxs]
    return is_negative_definite_matrix(sub)


def solve_pullback(graph: DualGraph, profile: IntersectionProfile) -> QDivisor:
    """The unique combination Z of all curves with Z . C_j as prescribed.

    Raises DegenerateConfigurationError when the pairing matrix is singular
    (cusp cycles, for instance); such configurations need the local
    contribution tables instead of a solve.
    """
    if profile.graph != graph:
        raise ValidationError("profile belongs to a different graph")
    rhs = [profile.degree(label) for label in graph.labels]
    xs = solve_exact(intersection_matrix(graph), rhs)
    if xs is None:
        raise DegenerateConfigurationError("degenerate configuration: pairing matrix is singular")
    return QDivisor(graph, dict(zip(graph.labels, xs)))


def pair(d1: QDivisor, d2: QDivisor) -> Fraction:
    """Bilinear symmetric intersection number of two divisors."""
    _require_same_graph(d1, d2)
    graph = d1.graph
    total = Fraction(0)
    for la, a in d1.coefficients.items():
        row = graph.matrix[graph.index_of(la)]
        for lb, b in d2.coefficients.items():
            entry = row[graph.index_of(lb)]
            if entry:
                total += a * b * entry
    return total


def degree_against_curve(d: QDivisor, label: str) -> Fraction:
    """d . C for a single curve C of the graph."""
    graph = d.graph
    row = graph.matrix[graph.index_of(label)]
    total = Fraction(0)
    for la, a in d.coefficients.items():
        entry = row[graph.index_of(la)]
        if entry:
            total += a * entry
    return total


@dataclass(frozen=True)
class HodgeReport:
    """Outcome of an index-inequality check on a pair of divisors.

    ``inequality_holds`` and the equality fields stay None when no grid point
    witnesses the positivity hypothesis, in which case nothing is claimed.
    """

    hypothesis_holds: bool
    witness: tuple[int, int] | None
    inequality_holds: bool | None
    equality_with_trivial_combination: bool | None
    trivial_combination: tuple[Fraction, Fraction] | None
    products: tuple[Fraction, Fraction, Fraction]


def _trivial_combination(d1: QDivisor, d2: QDivisor) -> tuple[Fraction, Fraction] | None:
    """Nonzero (b1, b2) with (b1*d1 + b2*d2) . C = 0 for every curve, if one exists."""
    graph = d1.graph
    v1 = [degree_against_curve(d1, label) for label in graph.labels]
    v2 = [degree_against_curve(d2, label) for label in graph.labels]
    if not any(v1):
        return (Fraction(1), Fraction(0))
    if not any(v2):
        return (Fraction(0), Fraction(1))
    j0 = next(j for j, v in enumerate(v1) if v)
    lam = v2[j0] / v1[j0]
    if all(v2[j] == lam * v1[j] for j in range(len(v1))):
        return (lam, Fraction(-1))
    return None


def hodge_inequality_check(d1: QDivisor, d2: QDivisor, grid: int) -> HodgeReport:
    """Check d1^2 d2^2 <= (d1 . d2)^2 under the positivity hypothesis.

    The hypothesis "(a1 d1 + a2 d2)^2 > 0 for some reals" is witnessed over the
    integer grid [-grid, grid]^2 \\ {0}; when equality holds the check also
    searches for an exact rational combination pairing to zero with every
    curve.
    """
    _require_same_graph(d1, d2)
    if not isinstance(grid, int) or grid < 1:
        raise ValidationError("grid must be a positive integer")
    s11 = pair(d1, d1)
    s12 = pair(d1, d2)
    s22 = pair(d2, d2)
    witness = None
    for a1 in range(-grid, grid + 1):
        for a2 in range(-grid, grid + 1):
            if a1 == 0 and a2 == 0:
                continue
            if a1 * a1 * s11 + 2 * a1 * a2 * s12 + a2 * a2 * s22 > 0:
                witness = (a1, a2)
                break
        if witness:
            break
    products = (s11, s12, s22)
    if witness is None:
        return HodgeReport(False, None, None, None, None, products)
    inequality = s11 * s22 <= s12 * s12
    if s11 * s22 == s12 * s12:
        combination = _trivial_combination(d1, d2)
        return HodgeReport(True, witness, inequality, combination is not None, combination, products)
    return HodgeReport(True, witness, inequality, None, None, products)


def chi_additivity_check(triples: Iterable[Sequence[int]]) -> bool:
    """Verify per-point additivity of modified Euler characteristics.

    Each triple is (value for f, value for g, value for the composite); the
    composite must be the sum of the two stages, pointwise.
    """
    ok = True
    for triple in triples:
        f, g, composite = triple
        for v in (f, g, composite):
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValidationError("modified Euler characteristics are nonnegative integers")
        if composite != f + g:
            ok = False
    return ok


# --- JSON forms -----------------------------------------------------------
#
# graph:   {"curves": [{"label": str, "self": int}, ...],
#           "edges": [[str, str, int], ...]}
# divisor / profile: flat map {label: "p/q" | int, ...}


def graph_from_json(obj) -> DualGraph:
    if not isinstance(obj, dict) or "curves" not in obj:
        raise ValidationError('graph JSON must be an object with a "curves" list')
    curves = []
    for entry in obj["curves"]:
        if not isinstance(entry, dict) or "label" not in entry or "self" not in entry:
            raise ValidationError('each curve needs "label" and "self" fields')
        if not isinstance(entry["self"], int) or isinstance(entry["self"], bool):
            raise ValidationError(f'curve {entry.get("label")!r}: "self" must be an integer')
        curves.append(
            Curve(
                label=str(entry["label"]),
                self_intersection=entry["self"],
                is_exceptional=bool(entry.get("exceptional", True)),
                is_nodal=bool(entry.get("node", False)),
            )
        )
    edges = []
    for edge in obj.get("edges", ()):
        if not isinstance(edge, (list, tuple)) or len(edge) != 3:
            raise ValidationError("each edge must be [label, label, multiplicity]")
        edges.append((str(edge[0]), str(edge[1]), edge[2]))
    return DualGraph(curves, edges)


def graph_to_json(graph: DualGraph) -> dict:
    curves = [{"label": c.label, "self": c.self_intersection} for c in graph.curves]
    n = len(graph)
    edges = [
        [graph.labels[i], graph.labels[j], graph.matrix[i][j]]
        for i in range(n)
        for j in range(i + 1, n)
        if graph.matrix[i][j]
    ]
    return {"curves": curves, "edges": edges}


def divisor_from_json(graph: DualGraph, obj) -> QDivisor:
    if not isinstance(obj, dict):
        raise ValidationError("divisor JSON must be an object mapping labels to rationals")
    return QDivisor(graph, {str(k): parse_rational(v) for k, v in obj.items()})


def divisor_to_json(d: QDivisor) -> dict:
    return {label: format_rational(v) for label, v in sorted(d.coefficients.items())}


def profile_from_json(graph: DualGraph, obj) -> IntersectionProfile:
    if not isinstance(obj, dict):
        raise ValidationError("profile JSON must be an object mapping labels to rationals")
    return IntersectionProfile(graph, {str(k): parse_rational(v) for k, v in obj.items()})
