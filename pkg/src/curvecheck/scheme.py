"""Global curve schemes and the partition form.

A scheme file describes a real plane curve of degree 2k through the
combinatorics that matter here: the partition components with the Euler
characteristics of their interiors, the real singular points with a local
form each and a map from local sectors to components, the points the curve
omega passes through, and the Milnor and Euler data for the right-hand sides.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .catalog import SingularityType, catalog_form, catalog_milnor, parse_type
from .errors import (
    InvalidInput,
    MissingData,
    MissingMilnorData,
    MissingSides,
    UnknownLabel,
    UnresolvedLocalForm,
)
from .local import SectorSideAssignment, compute_qp, load_fixture, omega_twist
from .qform import RationalSymmetricForm, parse_rational, rational_to_json

__all__ = [
    "SINK",
    "RegionRecord",
    "LocalSource",
    "SingularPointRecord",
    "CurveScheme",
    "assemble_partition_form",
    "chi_xr",
    "total_milnor",
    "load_scheme",
    "parse_scheme",
]

SINK = "sink"


def _int(value, what, minimum=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInput(f"{what} must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise InvalidInput(f"{what} must be >= {minimum}, got {value}")
    return value


def _check_fields(obj, what, required=(), optional=()):
    if not isinstance(obj, Mapping):
        raise InvalidInput(f"{what} must be a JSON object")
    unknown = set(obj) - set(required) - set(optional)
    if unknown:
        raise InvalidInput(f"{what}: unknown field(s) {sorted(unknown)}")
    missing = [k for k in required if k not in obj]
    if missing:
        raise InvalidInput(f"{what}: missing field(s) {missing}")


def _milnor_pair(obj, what) -> tuple[int, int]:
    _check_fields(obj, what, required=("mu_plus", "mu_minus"))
    return (_int(obj["mu_plus"], f"{what}.mu_plus", 0), _int(obj["mu_minus"], f"{what}.mu_minus", 0))


@dataclass(frozen=True)
class RegionRecord:
    id: str
    chi_int: int
    orientable: bool = True


@dataclass(frozen=True)
class LocalSource:
    """Where a point's local form comes from: ``catalog``, ``matrix`` or ``fixture``."""

    kind: str
    catalog: SingularityType | None = None
    matrix: tuple[tuple[Fraction, ...], ...] | None = None
    fixture: str | None = None

    def to_json(self):
        if self.kind == "catalog":
            return {"catalog": {"type": self.catalog.name, "variant": self.catalog.variant}}
        if self.kind == "matrix":
            return {"matrix": [[rational_to_json(v) for v in row] for row in self.matrix]}
        return {"fixture": self.fixture}


@dataclass(frozen=True)
class SingularPointRecord:
    id: str
    real: bool
    source: LocalSource | None = None
    sector_map: tuple[tuple[str, str], ...] = ()
    milnor: tuple[int, int] | None = None
    omega_sides: SectorSideAssignment | None = None

    @property
    def sector_labels(self) -> list[str]:
        return [lab for lab, _ in self.sector_map]


@dataclass(frozen=True)
class CurveScheme:
    k: int
    r: int
    nu: int
    regions: tuple[RegionRecord, ...]
    singular_points: tuple[SingularPointRecord, ...] = ()
    omega_points: tuple[str, ...] = ()
    chi_XR: int | None = None
    chi_W: int | None = None
    chi_branch_in_W: int | None = None
    milnor_override: tuple[int, int] | None = None
    description: str | None = None
    base_dir: str = field(default=".", compare=False)

    def __post_init__(self):
        _int(self.k, "k", 1)
        _int(self.r, "r", 1)
        if self.nu not in (0, 1) or isinstance(self.nu, bool):
            raise InvalidInput(f"nu must be 0 or 1, got {self.nu!r}")
        if self.r < self.nu:
            raise InvalidInput(f"r = {self.r} < nu = {self.nu}")
        ids = [reg.id for reg in self.regions]
        if len(set(ids)) != len(ids):
            raise InvalidInput(f"duplicate region ids: {ids}")
        if SINK in ids:
            raise InvalidInput(f"{SINK!r} is reserved and cannot name a region")
        if self.k % 2 == 0:
            bad = [reg.id for reg in self.regions if not reg.orientable]
            if bad:
                raise InvalidInput(
                    f"k = {self.k} is even: only orientable partition components are listed, "
                    f"but {bad} are marked non-orientable"
                )
        elif self.omega_points:
            raise InvalidInput(f"k = {self.k} is odd: omega is empty, but omega_points = {list(self.omega_points)}")

        point_ids = [p.id for p in self.singular_points]
        if len(set(point_ids)) != len(point_ids):
            raise InvalidInput(f"duplicate singular point ids: {point_ids}")
        by_id = {p.id: p for p in self.singular_points}
        for pid in self.omega_points:
            if pid not in by_id:
                raise UnknownLabel(f"omega point {pid!r} is not a listed singular point")
            p = by_id[pid]
            if not p.real:
                raise InvalidInput(f"omega point {pid!r} is not a real point")
            if p.omega_sides is None:
                raise MissingSides(f"omega point {pid!r} has no omega_sides")
        known = set(ids)
        for p in self.singular_points:
            if p.omega_sides is not None and p.id not in self.omega_points:
                raise InvalidInput(f"point {p.id!r} has omega_sides but is not in omega_points")
            if not p.real:
                if p.sector_map or p.omega_sides is not None:
                    raise InvalidInput(f"complex point {p.id!r} may carry only Milnor data")
                if p.source is not None and p.source.kind != "catalog":
                    raise InvalidInput(f"complex point {p.id!r}: only a catalog source is allowed")
                continue
            if p.source is None:
                raise UnresolvedLocalForm(f"real point {p.id!r} has no local form source")
            labels = p.sector_labels
            if len(set(labels)) != len(labels):
                raise InvalidInput(f"point {p.id!r}: a sector label is listed twice")
            for lab, reg in p.sector_map:
                if reg != SINK and reg not in known:
                    raise UnknownLabel(f"point {p.id!r}: sector {lab!r} maps to unknown region {reg!r}")
            if p.source.kind == "matrix" and len(p.source.matrix) != len(labels):
                raise InvalidInput(
                    f"point {p.id!r}: matrix is {len(p.source.matrix)}x{len(p.source.matrix)} "
                    f"but {len(labels)} sectors are listed"
                )
        if self.chi_XR is None and (self.chi_W is None or self.chi_branch_in_W is None):
            raise MissingData("give chi_XR, or both chi_W and chi_branch_in_W")

    @property
    def degree(self) -> int:
        return 2 * self.k

    def point(self, pid: str) -> SingularPointRecord:
        for p in self.singular_points:
            if p.id == pid:
                return p
        raise UnknownLabel(f"no singular point {pid!r}")

    def local_form(self, p: SingularPointRecord) -> RationalSymmetricForm:
        """Local form of a real point, labelled by its sector labels and checked against them."""
        src = p.source
        if src.kind == "catalog":
            form = catalog_form(src.catalog)
        elif src.kind == "matrix":
            form = RationalSymmetricForm.from_rows(src.matrix, p.sector_labels)
        else:
            path = src.fixture
            if not os.path.isabs(path):
                path = os.path.join(self.base_dir, path)
            try:
                fixture = load_fixture(path)
            except OSError as exc:
                raise UnresolvedLocalForm(f"point {p.id!r}: cannot read fixture {src.fixture!r}: {exc}") from None
            form = compute_qp(fixture)
        if sorted(form.labels) != sorted(p.sector_labels):
            raise UnresolvedLocalForm(
                f"point {p.id!r}: sectors {p.sector_labels} do not match the local form labels {list(form.labels)}"
            )
        return form

    def to_json(self) -> dict:
        out: dict = {}
        if self.description is not None:
            out["description"] = self.description
        out["degree"] = self.degree
        out["r"] = self.r
        out["nu"] = self.nu
        out["regions"] = [
            {"id": reg.id, "chi_int": reg.chi_int, "orientable": reg.orientable} for reg in self.regions
        ]
        pts = []
        for p in self.singular_points:
            d: dict = {"id": p.id, "real": p.real}
            if p.source is not None:
                d["source"] = p.source.to_json()
            if p.real:
                d["sectors"] = [{"label": lab, "region": reg} for lab, reg in p.sector_map]
            if p.milnor is not None:
                d["milnor"] = {"mu_plus": p.milnor[0], "mu_minus": p.milnor[1]}
            if p.omega_sides is not None:
                d["omega_sides"] = dict(p.omega_sides.sides)
            pts.append(d)
        out["singular_points"] = pts
        out["omega_points"] = list(self.omega_points)
        if self.chi_XR is not None:
            out["chi_XR"] = self.chi_XR
        if self.chi_W is not None:
            out["chi_W"] = self.chi_W
        if self.chi_branch_in_W is not None:
            out["chi_branch_in_W"] = self.chi_branch_in_W
        if self.milnor_override is not None:
            out["milnor_override"] = {"mu_plus": self.milnor_override[0], "mu_minus": self.milnor_override[1]}
        return out


def _parse_source(obj, what) -> LocalSource:
    if not isinstance(obj, Mapping) or len(obj) != 1:
        raise InvalidInput(f"{what} must be an object with exactly one of catalog, matrix, fixture")
    (kind, value), = obj.items()
    if kind == "catalog":
        _check_fields(value, f"{what}.catalog", required=("type", "variant"))
        return LocalSource("catalog", catalog=parse_type(value["type"], value["variant"]))
    if kind == "matrix":
        if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
            raise InvalidInput(f"{what}.matrix must be an array of rows")
        try:
            rows = tuple(tuple(parse_rational(v) for v in row) for row in value)
        except InvalidInput as exc:
            raise InvalidInput(f"{what}.matrix: {exc}") from None
        RationalSymmetricForm.from_rows(rows)  # symmetry and shape check
        return LocalSource("matrix", matrix=rows)
    if kind == "fixture":
        if not isinstance(value, str):
            raise InvalidInput(f"{what}.fixture must be a path string")
        return LocalSource("fixture", fixture=value)
    raise InvalidInput(f"{what}: unknown source kind {kind!r}")


def _parse_point(obj, k) -> SingularPointRecord:
    what = f"singular_points[{k}]"
    _check_fields(obj, what, required=("id", "real"), optional=("source", "sectors", "milnor", "omega_sides"))
    if not isinstance(obj["id"], str):
        raise InvalidInput(f"{what}.id must be a string")
    if not isinstance(obj["real"], bool):
        raise InvalidInput(f"{what}.real must be true or false")
    source = _parse_source(obj["source"], f"{what}.source") if "source" in obj else None
    sectors = []
    for j, item in enumerate(obj.get("sectors", [])):
        _check_fields(item, f"{what}.sectors[{j}]", required=("label", "region"))
        if not isinstance(item["label"], str) or not isinstance(item["region"], str):
            raise InvalidInput(f"{what}.sectors[{j}]: label and region must be strings")
        sectors.append((item["label"], item["region"]))
    milnor = _milnor_pair(obj["milnor"], f"{what}.milnor") if "milnor" in obj else None
    sides = None
    if "omega_sides" in obj:
        if not isinstance(obj["omega_sides"], Mapping):
            raise InvalidInput(f"{what}.omega_sides must be an object")
        sides = SectorSideAssignment(obj["omega_sides"])
        if sorted(sides.sides) != sorted(lab for lab, _ in sectors):
            raise UnknownLabel(f"{what}.omega_sides must cover exactly the sector labels")
    return SingularPointRecord(obj["id"], obj["real"], source, tuple(sectors), milnor, sides)


def parse_scheme(data: Mapping, base_dir: str = ".") -> CurveScheme:
    _check_fields(
        data,
        "scheme",
        required=("degree", "r", "nu", "regions"),
        optional=("description", "singular_points", "omega_points", "chi_XR", "chi_W",
                  "chi_branch_in_W", "milnor_override"),
    )
    degree = _int(data["degree"], "degree", 2)
    if degree % 2:
        raise InvalidInput(f"degree must be even (= 2k), got {degree}")
    regions = []
    for j, item in enumerate(data["regions"]):
        _check_fields(item, f"regions[{j}]", required=("id", "chi_int"), optional=("orientable",))
        if not isinstance(item["id"], str):
            raise InvalidInput(f"regions[{j}].id must be a string")
        orientable = item.get("orientable", True)
        if not isinstance(orientable, bool):
            raise InvalidInput(f"regions[{j}].orientable must be true or false")
        regions.append(RegionRecord(item["id"], _int(item["chi_int"], f"regions[{j}].chi_int"), orientable))
    points = tuple(_parse_point(p, j) for j, p in enumerate(data.get("singular_points", [])))
    omega = data.get("omega_points", [])
    if not isinstance(omega, list) or not all(isinstance(v, str) for v in omega):
        raise InvalidInput("omega_points must be an array of point ids")
    opt = {}
    for key in ("chi_XR", "chi_W", "chi_branch_in_W"):
        if key in data:
            opt[key] = _int(data[key], key)
    description = data.get("description")
    if description is not None and not isinstance(description, str):
        raise InvalidInput("description must be a string")
    override = _milnor_pair(data["milnor_override"], "milnor_override") if "milnor_override" in data else None
    return CurveScheme(
        k=degree // 2,
        r=_int(data["r"], "r", 1),
        nu=data["nu"],
        regions=tuple(regions),
        singular_points=points,
        omega_points=tuple(omega),
        milnor_override=override,
        description=description,
        base_dir=base_dir,
        **opt,
    )


def load_scheme(path) -> CurveScheme:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: line {exc.lineno}: {exc.msg}") from None
    return parse_scheme(data, base_dir=os.path.dirname(os.path.abspath(path)))


def _point_contribution(s: CurveScheme, p: SingularPointRecord) -> dict[tuple[str, str], Fraction]:
    form = s.local_form(p)
    if p.id in s.omega_points:
        form = omega_twist(form, p.omega_sides)
    region_of = dict(p.sector_map)
    out: dict[tuple[str, str], Fraction] = {}
    for a in form.labels:
        ra = region_of[a]
        if ra == SINK:
            continue
        for b in form.labels:
            rb = region_of[b]
            if rb == SINK:
                continue
            out[(ra, rb)] = out.get((ra, rb), Fraction(0)) + form[a, b]
    return out


def assemble_partition_form(s: CurveScheme, jobs: int = 1) -> RationalSymmetricForm:
    """Partition form on the listed components.

    Every real point adds its local form (omega-twisted for points on omega)
    summed over the sector pairs lying in each pair of components; the
    diagonal then gets ``-2 chi(Int W_i)``.
    """
    real_points = [p for p in s.singular_points if p.real]
    if jobs > 1 and len(real_points) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(lambda p: _point_contribution(s, p), real_points))
    else:
        parts = [_point_contribution(s, p) for p in real_points]
    ids = [reg.id for reg in s.regions]
    pos = {rid: i for i, rid in enumerate(ids)}
    rows = [[Fraction(0)] * len(ids) for _ in ids]
    for part in parts:
        for (ra, rb), v in part.items():
            rows[pos[ra]][pos[rb]] += v
    for reg in s.regions:
        rows[pos[reg.id]][pos[reg.id]] -= 2 * reg.chi_int
    return RationalSymmetricForm.from_rows(rows, ids)


def chi_xr(s: CurveScheme) -> int:
    if s.chi_XR is not None:
        return s.chi_XR
    if s.chi_W is None or s.chi_branch_in_W is None:
        raise MissingData("give chi_XR, or both chi_W and chi_branch_in_W")
    return 2 * s.chi_W - s.chi_branch_in_W


def _point_milnor(p: SingularPointRecord) -> tuple[int, int]:
    if p.milnor is not None:
        return p.milnor
    if p.source is not None and p.source.kind == "catalog":
        return catalog_milnor(p.source.catalog)
    raise MissingMilnorData(f"point {p.id!r}: give milnor {{mu_plus, mu_minus}} or a catalog source")


def total_milnor(s: CurveScheme) -> tuple[int, int]:
    """Inertia (mu_plus, mu_minus) of the total Milnor form over all of S."""
    if s.milnor_override is not None:
        return s.milnor_override
    plus = minus = 0
    for p in s.singular_points:
        a, b = _point_milnor(p)
        plus += a
        minus += b
    return (plus, minus)
