"""Torus data of target surfaces.

Built-in surfaces (projective plane, quadric, Hirzebruch) are generated
from their fans; custom surfaces come from a JSON descriptor listing
fixed points with chart weights and per-fixed-point bundle weights.

Conventions, pinned by the calibration tests: chart weights w1, w2 are
the torus weights of the two local coordinate functions (the dual basis
of the cone), and the weight of O(D) with D = sum a_i D_i at the fixed
point of the cone spanned by rays v_i, v_j solves <lambda, v_i> = a_i,
<lambda, v_j> = a_j.  The canonical bundle then has weight -w1 - w2 at
every fixed point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .charalg import Rational, Weight
from .errors import (
    DependentChartWeights,
    NonConstantSum,
    SpecializationExhausted,
    SpecializationPole,
    WrongCoefficientCount,
)
from .sampling import MAX_REDRAWS, make_rng, random_point


@dataclass(frozen=True)
class FixedPointChart:
    """Weights of the two local coordinate functions at a fixed point."""

    w1: Weight
    w2: Weight

    def __post_init__(self):
        if self.w1.a * self.w2.b - self.w1.b * self.w2.a == 0:
            raise DependentChartWeights(f"chart weights {self.w1}, {self.w2}")


@dataclass(frozen=True)
class EquivariantLineBundle:
    """A line bundle given by its fiber weight at each fixed point."""

    label: str
    weights: tuple[Weight, ...]

    def __add__(self, other: "EquivariantLineBundle") -> "EquivariantLineBundle":
        return EquivariantLineBundle(
            f"({self.label})+({other.label})",
            tuple(a + b for a, b in zip(self.weights, other.weights)),
        )

    def __sub__(self, other: "EquivariantLineBundle") -> "EquivariantLineBundle":
        return EquivariantLineBundle(
            f"({self.label})-({other.label})",
            tuple(a - b for a, b in zip(self.weights, other.weights)),
        )


@dataclass(frozen=True)
class ToricSurfaceDescriptor:
    name: str
    charts: tuple[FixedPointChart, ...]
    # fan data; None for file-based descriptors
    rays: tuple[tuple[int, int], ...] | None = None
    cone_rays: tuple[tuple[int, int], ...] | None = None  # ray indices per chart
    named_bundles: tuple[tuple[str, tuple[Weight, ...]], ...] = ()
    intersections: tuple[tuple[str, str, int], ...] = ()

    def __post_init__(self):
        if len(self.charts) < 3:
            raise ValueError("a projective toric surface has at least 3 fixed points")

    @property
    def euler_number(self) -> int:
        return len(self.charts)

    def bundle(self, label: str) -> EquivariantLineBundle:
        if label == "O":
            return trivial_bundle(self)
        if label == "K":
            return canonical_bundle(self)
        for name, weights in self.named_bundles:
            if name == label:
                return EquivariantLineBundle(label, weights)
        raise KeyError(f"no bundle named {label!r} on surface {self.name!r}")

    def lookup_intersection(self, l1: str, l2: str) -> int | None:
        for a, b, v in self.intersections:
            if {a, b} == {l1, l2} or (a == l1 and b == l2):
                return v
        return None


def _solve_pairing(v1: tuple[int, int], v2: tuple[int, int], c1: int, c2: int) -> Weight:
    """Integer solution w of <w, v1> = c1, <w, v2> = c2 (unimodular cone)."""
    det = v1[0] * v2[1] - v1[1] * v2[0]
    if det == 0:
        raise DependentChartWeights(f"degenerate cone {v1}, {v2}")
    na = c1 * v2[1] - c2 * v1[1]
    nb = c2 * v1[0] - c1 * v2[0]
    if na % det or nb % det:
        raise ValueError(f"non-smooth cone {v1}, {v2}")
    return Weight(na // det, nb // det)


def _from_fan(name: str, rays: list[tuple[int, int]]) -> ToricSurfaceDescriptor:
    """Surface from a complete smooth fan with rays in counterclockwise order."""
    n = len(rays)
    charts = []
    cone_rays = []
    for i in range(n):
        vi, vj = rays[i], rays[(i + 1) % n]
        w1 = _solve_pairing(vi, vj, 1, 0)
        w2 = _solve_pairing(vi, vj, 0, 1)
        charts.append(FixedPointChart(w1, w2))
        cone_rays.append((i, (i + 1) % n))
    return ToricSurfaceDescriptor(
        name=name,
        charts=tuple(charts),
        rays=tuple(rays),
        cone_rays=tuple(cone_rays),
    )


def surface_p2() -> ToricSurfaceDescriptor:
    """The projective plane: 3 fixed points."""
    return _from_fan("p2", [(1, 0), (0, 1), (-1, -1)])


def surface_p1xp1() -> ToricSurfaceDescriptor:
    """The quadric surface: 4 fixed points."""
    return _from_fan("p1xp1", [(1, 0), (0, 1), (-1, 0), (0, -1)])


def surface_hirzebruch(a: int) -> ToricSurfaceDescriptor:
    """The Hirzebruch surface F_a (F_0 is the quadric)."""
    if a < 0:
        raise ValueError("Hirzebruch parameter must be nonnegative")
    return _from_fan(f"f{a}", [(1, 0), (0, 1), (-1, a), (0, -1)])


def line_bundle(S: ToricSurfaceDescriptor, divisor_coeffs: list[int]) -> EquivariantLineBundle:
    """Equivariant O(D) for D = sum a_i D_i over the fan rays of S."""
    if S.rays is None or S.cone_rays is None:
        raise WrongCoefficientCount(
            f"surface {S.name!r} has no fan data; use a named bundle"
        )
    if len(divisor_coeffs) != len(S.rays):
        raise WrongCoefficientCount(
            f"expected {len(S.rays)} coefficients, got {len(divisor_coeffs)}"
        )
    weights = tuple(
        _solve_pairing(S.rays[i], S.rays[j], divisor_coeffs[i], divisor_coeffs[j])
        for i, j in S.cone_rays
    )
    label = "O(" + ",".join(str(c) for c in divisor_coeffs) + ")"
    return EquivariantLineBundle(label, weights)


def trivial_bundle(S: ToricSurfaceDescriptor) -> EquivariantLineBundle:
    return EquivariantLineBundle("O", tuple(Weight(0, 0) for _ in S.charts))


def canonical_bundle(S: ToricSurfaceDescriptor) -> EquivariantLineBundle:
    """Weight -w1 - w2 at each fixed point."""
    return EquivariantLineBundle(
        "K", tuple(-(c.w1 + c.w2) for c in S.charts)
    )


def intersect(
    S: ToricSurfaceDescriptor,
    L: EquivariantLineBundle,
    Lp: EquivariantLineBundle,
    seed: int = 0,
    npoints: int = 2,
) -> Rational:
    """Poincare pairing <L, L'> by surface-level localization.

    Evaluated at several random specializations; all evaluations must
    agree exactly.  File-based descriptors may pin pairings in an
    explicit table instead.
    """
    table = S.lookup_intersection(L.label, Lp.label)
    if table is not None:
        return Fraction(table)

    rng = make_rng(seed)
    values = []
    for _ in range(npoints):
        for _attempt in range(MAX_REDRAWS):
            x, y = random_point(rng)
            try:
                total = Fraction(0)
                for chart, lw, lpw in zip(S.charts, L.weights, Lp.weights):
                    d1 = chart.w1.value(x, y)
                    d2 = chart.w2.value(x, y)
                    if d1 == 0 or d2 == 0:
                        raise SpecializationPole(f"chart pole at ({x}, {y})")
                    total += Fraction(lw.value(x, y) * lpw.value(x, y), d1 * d2)
                values.append(total)
                break
            except SpecializationPole:
                continue
        else:
            raise SpecializationExhausted(
                f"no pole-free specialization for intersect on {S.name}"
            )
    if any(v != values[0] for v in values[1:]):
        raise NonConstantSum(
            f"intersection sum not constant on {S.name}: {values}"
        )
    return values[0]


def _require_int(x, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValueError(f"{where}: expected an integer, got {x!r}")
    return x


def _parse_weight(obj, where: str) -> Weight:
    if not isinstance(obj, list) or len(obj) != 2:
        raise ValueError(f"{where}: expected a pair [a, b], got {obj!r}")
    return Weight(_require_int(obj[0], where), _require_int(obj[1], where))


def surface_from_json(text: str) -> ToricSurfaceDescriptor:
    """Parse a custom surface descriptor.

    Schema: { "name": str,
              "fixed_points": [ { "w1": [a,b], "w2": [a,b],
                                  "bundles": { "<label>": [a,b] } } ],
              "intersections": { "<l1>": { "<l2>": int } } }  (optional)
    Integers only; floats are rejected.
    """
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("surface descriptor must be a JSON object")
    name = data.get("name")
    if not isinstance(name, str):
        raise ValueError("surface descriptor needs a string 'name'")
    points = data.get("fixed_points")
    if not isinstance(points, list) or len(points) < 3:
        raise ValueError("surface descriptor needs >= 3 fixed_points")

    charts = []
    labels: list[str] | None = None
    per_label: dict[str, list[Weight]] = {}
    for k, pt in enumerate(points):
        where = f"fixed_points[{k}]"
        charts.append(
            FixedPointChart(
                _parse_weight(pt.get("w1"), where + ".w1"),
                _parse_weight(pt.get("w2"), where + ".w2"),
            )
        )
        bundles = pt.get("bundles", {})
        if not isinstance(bundles, dict):
            raise ValueError(f"{where}.bundles must be an object")
        if labels is None:
            labels = sorted(bundles)
            per_label = {lab: [] for lab in labels}
        elif sorted(bundles) != labels:
            raise ValueError(f"{where}: bundle labels differ between fixed points")
        for lab in labels:
            per_label[lab].append(_parse_weight(bundles[lab], f"{where}.bundles[{lab}]"))

    inter = []
    for l1, row in (data.get("intersections") or {}).items():
        if not isinstance(row, dict):
            raise ValueError("intersections rows must be objects")
        for l2, v in row.items():
            inter.append((l1, l2, _require_int(v, f"intersections[{l1}][{l2}]")))

    return ToricSurfaceDescriptor(
        name=name,
        charts=tuple(charts),
        named_bundles=tuple((lab, tuple(ws)) for lab, ws in per_label.items()),
        intersections=tuple(inter),
    )


def surface_from_file(path: str) -> ToricSurfaceDescriptor:
    with open(path, "r", encoding="utf-8") as fh:
        return surface_from_json(fh.read())
