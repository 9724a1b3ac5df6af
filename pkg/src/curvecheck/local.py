"""Local forms of real curve singularities from morsification data.

A :class:`MorsifiedLocalScheme` records the combinatorics of a real
morsification inside a small disk around the singular point: the closed
regions where the perturbed polynomial is non-negative, whether each one
stays inside the disk, its Euler characteristic, and which pair of regions
meets at each hyperbolic node.  :func:`compute_qp` turns that into the local
form on the regions reaching the boundary circle.
"""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import (
    DegenerateCore,
    InvalidInput,
    InvariantViolation,
    NotQSingularity,
    UnknownLabel,
)
from .qform import RationalSymmetricForm, add_scaled_identity, schur_project

__all__ = [
    "Region",
    "MorsifiedLocalScheme",
    "ResolutionGraph",
    "SectorSideAssignment",
    "SelfTouchingNodeWarning",
    "build_tilde_form",
    "compute_qp",
    "omega_twist",
    "is_q_singularity",
    "load_fixture",
]


class SelfTouchingNodeWarning(UserWarning):
    """A node whose two non-negative sectors lie in the same region."""


@dataclass(frozen=True)
class Region:
    id: str
    interior: bool
    euler: int


def _require_int(value, what, minimum=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInput(f"{what} must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise InvalidInput(f"{what} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class MorsifiedLocalScheme:
    mu: int
    rho: int
    regions: tuple[Region, ...]
    nodes: tuple[tuple[str, str], ...]
    polynomial: str | None = None

    def __post_init__(self):
        _require_int(self.mu, "mu", 1)
        _require_int(self.rho, "rho", 0)
        regions = tuple(r if isinstance(r, Region) else Region(*r) for r in self.regions)
        nodes = tuple(tuple(str(v) for v in pair) for pair in self.nodes)
        object.__setattr__(self, "regions", regions)
        object.__setattr__(self, "nodes", nodes)

        ids = [r.id for r in regions]
        if len(set(ids)) != len(ids):
            raise InvariantViolation(f"duplicate region ids: {ids}")
        for r in regions:
            _require_int(r.euler, f"euler of region {r.id!r}")
            if r.euler > 1:
                raise InvariantViolation(
                    f"region {r.id!r} has euler {r.euler} > 1; planar regions have chi <= 1"
                )
        if (self.mu + self.rho) % 2 == 0:
            raise InvariantViolation(
                f"mu + rho = {self.mu + self.rho} is even; delta = (mu+rho-1)/2 must be an integer"
            )
        delta = (self.mu + self.rho - 1) // 2
        if len(nodes) != delta:
            raise InvariantViolation(
                f"node count {len(nodes)} != (mu+rho-1)/2 = {delta}"
            )
        known = set(ids)
        for pair in nodes:
            if len(pair) != 2:
                raise InvalidInput(f"node {list(pair)} must name exactly two regions")
            for rid in pair:
                if rid not in known:
                    raise UnknownLabel(f"node {list(pair)} refers to unknown region {rid!r}")
        outer = sum(1 for r in regions if not r.interior)
        if self.rho >= 1 and outer != self.rho:
            raise InvariantViolation(
                f"{outer} regions reach the boundary circle, expected rho = {self.rho}"
            )
        if self.rho == 0 and outer > 1:
            raise InvariantViolation(
                f"{outer} regions reach the boundary circle; with rho = 0 at most one may"
            )

    @property
    def delta(self) -> int:
        return (self.mu + self.rho - 1) // 2

    @property
    def interior_ids(self) -> list[str]:
        return [r.id for r in self.regions if r.interior]

    @property
    def boundary_ids(self) -> list[str]:
        return [r.id for r in self.regions if not r.interior]

    def self_touching_nodes(self) -> list[tuple[str, str]]:
        return [pair for pair in self.nodes if pair[0] == pair[1]]

    @classmethod
    def from_json(cls, data: Mapping) -> "MorsifiedLocalScheme":
        if not isinstance(data, Mapping):
            raise InvalidInput("fixture must be a JSON object")
        allowed = {"mu", "rho", "regions", "nodes", "polynomial"}
        extra = set(data) - allowed
        if extra:
            raise InvalidInput(f"unknown fixture fields: {sorted(extra)}")
        for key in ("mu", "rho", "regions", "nodes"):
            if key not in data:
                raise InvalidInput(f"fixture is missing field {key!r}")
        regions = []
        for k, item in enumerate(data["regions"]):
            if not isinstance(item, Mapping) or set(item) != {"id", "interior", "euler"}:
                raise InvalidInput(f"regions[{k}] must have exactly the fields id, interior, euler")
            if not isinstance(item["interior"], bool):
                raise InvalidInput(f"regions[{k}].interior must be true or false")
            if not isinstance(item["id"], str):
                raise InvalidInput(f"regions[{k}].id must be a string")
            regions.append(Region(item["id"], item["interior"], _require_int(item["euler"], f"regions[{k}].euler")))
        nodes = []
        for k, pair in enumerate(data["nodes"]):
            if not isinstance(pair, list) or len(pair) != 2 or not all(isinstance(v, str) for v in pair):
                raise InvalidInput(f"nodes[{k}] must be a two-element array of region ids")
            nodes.append(tuple(pair))
        poly = data.get("polynomial")
        if poly is not None and not isinstance(poly, str):
            raise InvalidInput("polynomial must be a string")
        return cls(data["mu"], data["rho"], tuple(regions), tuple(nodes), poly)

    def to_json(self) -> dict:
        out = {
            "mu": self.mu,
            "rho": self.rho,
            "regions": [{"id": r.id, "interior": r.interior, "euler": r.euler} for r in self.regions],
            "nodes": [list(pair) for pair in self.nodes],
        }
        if self.polynomial is not None:
            out["polynomial"] = self.polynomial
        return out

    def dumps(self) -> str:
        """Canonical text; loading and dumping a canonical file is byte-exact."""
        regions = ",\n".join("    " + json.dumps(r) for r in self.to_json()["regions"])
        nodes = ",\n".join("    " + json.dumps(list(p)) for p in self.nodes)
        head = f'{{\n  "mu": {self.mu},\n  "rho": {self.rho},\n'
        if self.polynomial is not None:
            head += f'  "polynomial": {json.dumps(self.polynomial)},\n'
        return (
            head
            + f'  "regions": [\n{regions}\n  ],\n'
            + (f'  "nodes": [\n{nodes}\n  ]\n}}\n' if nodes else '  "nodes": []\n}\n')
        )


def load_fixture(path, warn: bool = True) -> MorsifiedLocalScheme:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: line {exc.lineno}: {exc.msg}") from None
    scheme = MorsifiedLocalScheme.from_json(data)
    touching = scheme.self_touching_nodes()
    if warn and touching:
        warnings.warn(
            f"{path}: {len(touching)} node(s) join a region to itself; "
            "they contribute nothing to the tilde form",
            SelfTouchingNodeWarning,
            stacklevel=2,
        )
    return scheme


def build_tilde_form(scheme: MorsifiedLocalScheme) -> RationalSymmetricForm:
    """The form on all non-negative regions, interior regions first.

    Off the diagonal: half the number of nodes joining the two regions.
    On the diagonal: half the number of nodes joining the region to a
    different region, minus twice the Euler characteristic of its closure.
    """
    order = scheme.interior_ids + scheme.boundary_ids
    pos = {rid: k for k, rid in enumerate(order)}
    euler = {r.id: r.euler for r in scheme.regions}
    half = Fraction(1, 2)
    rows = [[Fraction(0)] * len(order) for _ in order]
    for a, b in scheme.nodes:
        if a == b:
            continue
        i, j = pos[a], pos[b]
        rows[i][j] += half
        rows[j][i] += half
        rows[i][i] += half
        rows[j][j] += half
    for rid, k in pos.items():
        rows[k][k] -= 2 * euler[rid]
    return RationalSymmetricForm.from_rows(rows, order)


def compute_qp(scheme: MorsifiedLocalScheme) -> RationalSymmetricForm:
    """Local form on the boundary regions: project away the interior, add 2I."""
    tilde = build_tilde_form(scheme)
    try:
        projected = schur_project(tilde, scheme.interior_ids)
    except DegenerateCore as exc:
        raise NotQSingularity(
            f"tilde form is degenerate on the interior regions {scheme.interior_ids}: "
            "the data cannot come from a Q-singularity"
        ) from exc
    return add_scaled_identity(projected, 2)


@dataclass(frozen=True)
class SectorSideAssignment:
    """Which arc of the small circle (+1 or -1) each sector lies on."""

    sides: Mapping[str, int]

    def __post_init__(self):
        sides = {}
        for label, s in dict(self.sides).items():
            if isinstance(s, bool) or s not in (1, -1):
                raise InvalidInput(f"side of sector {label!r} must be +1 or -1, got {s!r}")
            sides[str(label)] = s
        object.__setattr__(self, "sides", sides)


def omega_twist(qp: RationalSymmetricForm, sides: SectorSideAssignment | Mapping[str, int]) -> RationalSymmetricForm:
    """Conjugate ``qp`` by the diagonal sign matrix given by ``sides``.

    Reversing the orientation of the link components over one arc flips the
    sign of every linking number between opposite-side sectors and leaves
    self-linking alone.
    """
    if not isinstance(sides, SectorSideAssignment):
        sides = SectorSideAssignment(sides)
    s = sides.sides
    missing = set(qp.labels) - set(s)
    extra = set(s) - set(qp.labels)
    if extra:
        raise UnknownLabel(f"sides given for unknown sectors {sorted(extra)}")
    if missing:
        raise UnknownLabel(f"no side given for sectors {sorted(missing)}")
    d = [s[lab] for lab in qp.labels]
    rows = [[v * d[i] * d[j] for j, v in enumerate(row)] for i, row in enumerate(qp.entries)]
    return RationalSymmetricForm.from_rows(rows, qp.labels)


@dataclass(frozen=True)
class ResolutionGraph:
    vertices: tuple[tuple[str, int], ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        vertices = tuple((str(v), int(g)) for v, g in self.vertices)
        edges = tuple((str(a), str(b)) for a, b in self.edges)
        ids = [v for v, _ in vertices]
        if len(set(ids)) != len(ids):
            raise InvalidInput(f"duplicate vertex ids: {ids}")
        for v, g in vertices:
            if g < 0:
                raise InvalidInput(f"vertex {v!r} has negative genus {g}")
        for a, b in edges:
            if a not in ids or b not in ids:
                raise UnknownLabel(f"edge ({a}, {b}) refers to an unknown vertex")
            if a == b:
                raise InvalidInput(f"self-loop at vertex {a!r}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)


def is_q_singularity(graph: ResolutionGraph) -> bool:
    """True iff the resolution graph is a tree of genus-0 vertices."""
    if not graph.vertices:
        return False
    if any(g != 0 for _, g in graph.vertices):
        return False
    # multigraph: a tree has exactly |V| - 1 edges and is connected
    if len(graph.edges) != len(graph.vertices) - 1:
        return False
    parent = {v: v for v, _ in graph.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in graph.edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True
