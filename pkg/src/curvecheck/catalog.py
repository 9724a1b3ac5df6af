"""Local forms of the simple (ADE) real curve singularities.

Each catalog row is keyed by the family, the Milnor number and the defining
polynomial of the sign case, written as in the standard normal-form table
(``"x^{2n}-y^2"``, ``"±x(x^{2n}+y^2)"`` and so on).  The parameter ``n`` is
recovered from the Milnor number.

Basis labels are ``w1, w2, ...``.  Where the matrix is not symmetric under
swapping sectors, :func:`sector_notes` says which label is the sector
embraced by the two tangent (zero-angle) real branches.
"""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction as F
from importlib import resources
from typing import Callable, Iterator

from .errors import NoFixture, UnknownType
from .local import MorsifiedLocalScheme, SelfTouchingNodeWarning, load_fixture
from .qform import RationalSymmetricForm

__all__ = [
    "SingularityType",
    "catalog_form",
    "catalog_milnor",
    "catalog_morsification",
    "catalog_types",
    "parse_type",
    "sector_notes",
    "has_fixture",
]


def normalize_variant(text: str) -> str:
    t = text.replace(" ", "").replace("−", "-").replace("+/-", "±").replace("+-", "±")
    return t


@dataclass(frozen=True)
class _Row:
    family: str
    variant: str
    parity: int  # milnor_index % 2 for A and D rows; ignored for E
    rho: int
    build: Callable[[int], list[list]]
    note: str = ""


def _rows() -> list[_Row]:
    return [
        # A_{2n-1}
        _Row("A", "-x^{2n}+y^2", 1, 2, lambda n: [[F(n, 2), F(n, 2)], [F(n, 2), F(n, 2)]]),
        _Row("A", "x^{2n}-y^2", 1, 2,
             lambda n: [[F(2 * n - 1, 2 * n), F(1, 2 * n)], [F(1, 2 * n), F(2 * n - 1, 2 * n)]]),
        _Row("A", "x^{2n}+y^2", 1, 0, lambda n: [[2 * n]], "w1 is the collar around the isolated real point"),
        _Row("A", "-x^{2n}-y^2", 1, 0, lambda n: [], "no sectors: f < 0 around the point"),
        # A_{2n}
        _Row("A", "±x^{2n+1}+y^2", 0, 1, lambda n: [[2 * n]]),
        _Row("A", "±x^{2n+1}-y^2", 0, 1, lambda n: [[F(2 * n, 2 * n + 1)]]),
        # D_{2n+2}
        _Row("D", "±x(x^{2n}-y^2)", 0, 3,
             lambda n: [[1, F(1, 2), F(1, 2)],
                        [F(1, 2), F(n + 1, 2), F(n, 2)],
                        [F(1, 2), F(n, 2), F(n + 1, 2)]],
             "w1 lies between the branches y = x^n and y = -x^n (angle 0 when n >= 2)"),
        _Row("D", "±x(x^{2n}+y^2)", 0, 1, lambda n: [[4 * n - 2]]),
        # D_{2n+3}
        _Row("D", "x(x^{2n+1}±y^2)", 1, 2,
             lambda n: [[2 * n + 1, 1], [1, 1]],
             "w2 lies inside the cusp-shaped branch, whose two halves meet at angle 0"),
        _Row("D", "-x(x^{2n+1}±y^2)", 1, 2,
             lambda n: [[F(2 * n + 3, 4), F(2 * n + 1, 4)], [F(2 * n + 1, 4), F(2 * n + 3, 4)]]),
        # E
        _Row("E", "x^4±y^3", 6, 1, lambda n: [[6]]),
        _Row("E", "-x^4±y^3", 6, 1, lambda n: [[2]]),
        _Row("E", "±y(x^3±y^2)", 7, 2, lambda n: [[F(7, 2), F(3, 2)], [F(3, 2), F(3, 2)]],
             "w2 lies between the line y = 0 and the half of the cusp tangent to it (angle 0)"),
        _Row("E", "±x^5±y^3", 8, 1, lambda n: [[8]]),
    ]


_ROWS = _rows()


@dataclass(frozen=True)
class SingularityType:
    family: str
    milnor_index: int
    variant: str

    def __post_init__(self):
        object.__setattr__(self, "family", str(self.family).upper())
        object.__setattr__(self, "variant", normalize_variant(self.variant))
        _lookup(self)

    @property
    def n(self) -> int | None:
        """The table parameter n, or None for E-types."""
        mu = self.milnor_index
        if self.family == "A":
            return (mu + 1) // 2 if mu % 2 else mu // 2
        if self.family == "D":
            return (mu - 2) // 2 if mu % 2 == 0 else (mu - 3) // 2
        return None

    @property
    def name(self) -> str:
        return f"{self.family}{self.milnor_index}"

    @property
    def rho(self) -> int:
        return _lookup(self).rho

    def __str__(self):
        return f"{self.name} {self.variant}"


def _lookup(t: SingularityType) -> _Row:
    mu = t.milnor_index
    if isinstance(mu, bool) or not isinstance(mu, int) or mu < 1:
        raise UnknownType(f"milnor_index must be a positive integer, got {mu!r}")
    if t.family not in ("A", "D", "E"):
        raise UnknownType(f"unknown family {t.family!r}; expected A, D or E")
    if t.family == "D" and mu < 4:
        raise UnknownType(f"D-family needs milnor_index >= 4, got {mu}")
    if t.family == "E" and mu not in (6, 7, 8):
        raise UnknownType(f"E-family milnor_index must be 6, 7 or 8, got {mu}")
    for row in _ROWS:
        if row.family != t.family or row.variant != t.variant:
            continue
        if t.family == "E":
            if row.parity == mu:
                return row
        elif row.parity == mu % 2:
            return row
    known = sorted({r.variant for r in _ROWS if r.family == t.family and
                    (r.parity == mu if t.family == "E" else r.parity == mu % 2)})
    raise UnknownType(f"no catalog row {t.family}{mu} {t.variant!r}; known variants: {known}")


def parse_type(name: str, variant: str) -> SingularityType:
    """``parse_type("A3", "x^{2n}-y^2")``."""
    name = name.strip()
    if len(name) < 2 or not name[1:].isdigit():
        raise UnknownType(f"bad singularity name {name!r}; expected e.g. A3, D5, E7")
    return SingularityType(name[0], int(name[1:]), variant)


def catalog_form(t: SingularityType) -> RationalSymmetricForm:
    rows = _lookup(t).build(t.n)
    return RationalSymmetricForm.from_rows(rows)


def catalog_milnor(t: SingularityType) -> tuple[int, int]:
    # the suspended ADE surface singularity has a negative definite Milnor lattice
    _lookup(t)
    return (0, t.milnor_index)


def sector_notes(t: SingularityType) -> str:
    return _lookup(t).note


def catalog_types(max_index: int = 8) -> Iterator[SingularityType]:
    """Every catalog row with Milnor number at most ``max_index``."""
    for mu in range(1, max_index + 1):
        for family in "ADE":
            for row in _ROWS:
                if row.family != family:
                    continue
                try:
                    yield SingularityType(family, mu, row.variant)
                except UnknownType:
                    continue


def _fixture_index() -> dict:
    text = resources.files(__package__).joinpath("data/fixtures/index.json").read_text("utf-8")
    return json.loads(text)


def _fixture_key(t: SingularityType) -> str:
    return f"{t.name} {t.variant}"


def has_fixture(t: SingularityType) -> bool:
    return _fixture_key(t) in _fixture_index()


def catalog_morsification(t: SingularityType) -> MorsifiedLocalScheme:
    """Bundled morsification combinatorics whose local form is ``catalog_form(t)``."""
    _lookup(t)
    index = _fixture_index()
    key = _fixture_key(t)
    if key not in index:
        raise NoFixture(f"no bundled morsification for {key}")
    ref = resources.files(__package__).joinpath("data/fixtures", index[key])
    with resources.as_file(ref) as path, warnings.catch_warnings():
        warnings.simplefilter("ignore", SelfTouchingNodeWarning)
        return load_fixture(path)
