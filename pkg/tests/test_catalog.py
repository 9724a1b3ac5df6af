import itertools
from fractions import Fraction as F

import pytest

from curvecheck.catalog import (
    SingularityType,
    catalog_form,
    catalog_milnor,
    catalog_morsification,
    catalog_types,
    has_fixture,
    normalize_variant,
    parse_type,
    sector_notes,
)
from curvecheck.errors import NoFixture, UnknownType
from curvecheck.local import compute_qp
from curvecheck.qform import inertia
from morsification_grid import analyse, check_nodes, morsifications
from oracles import cartan, inertia_by_sturm

h = F(1, 2)

# Matrices transcribed from the published table of local forms for simple
# singularities, one entry per (family, variant); `index(n)` gives the Milnor
# number for the table parameter n.
TABLE = {
    ("A", "-x^{2n}+y^2"): (lambda n: 2 * n - 1, lambda n: [[F(n, 2), F(n, 2)], [F(n, 2), F(n, 2)]]),
    ("A", "x^{2n}-y^2"): (lambda n: 2 * n - 1,
                          lambda n: [[F(2 * n - 1, 2 * n), F(1, 2 * n)], [F(1, 2 * n), F(2 * n - 1, 2 * n)]]),
    ("A", "x^{2n}+y^2"): (lambda n: 2 * n - 1, lambda n: [[2 * n]]),
    ("A", "-x^{2n}-y^2"): (lambda n: 2 * n - 1, lambda n: []),  # printed as the zero form "(0)"
    ("A", "±x^{2n+1}+y^2"): (lambda n: 2 * n, lambda n: [[2 * n]]),
    ("A", "±x^{2n+1}-y^2"): (lambda n: 2 * n, lambda n: [[F(2 * n, 2 * n + 1)]]),
    ("D", "±x(x^{2n}-y^2)"): (lambda n: 2 * n + 2,
                              lambda n: [[1, h, h], [h, F(n + 1, 2), F(n, 2)], [h, F(n, 2), F(n + 1, 2)]]),
    ("D", "±x(x^{2n}+y^2)"): (lambda n: 2 * n + 2, lambda n: [[4 * n - 2]]),
    ("D", "x(x^{2n+1}±y^2)"): (lambda n: 2 * n + 3, lambda n: [[2 * n + 1, 1], [1, 1]]),
    ("D", "-x(x^{2n+1}±y^2)"): (lambda n: 2 * n + 3,
                                lambda n: [[F(2 * n + 3, 4), F(2 * n + 1, 4)], [F(2 * n + 1, 4), F(2 * n + 3, 4)]]),
}
E_TABLE = {
    (6, "x^4±y^3"): [[6]],
    (6, "-x^4±y^3"): [[2]],
    (7, "±y(x^3±y^2)"): [[F(7, 2), F(3, 2)], [F(3, 2), F(3, 2)]],
    (8, "±x^5±y^3"): [[8]],
}


def table_cases():
    for (family, variant), (index, build) in TABLE.items():
        for n in range(1, 6):
            yield family, index(n), variant, build(n)
    for (mu, variant), m in E_TABLE.items():
        yield "E", mu, variant, m


@pytest.mark.parametrize("family,mu,variant,expected", list(table_cases()),
                         ids=lambda v: v if isinstance(v, str) else None)
def test_catalog_matches_table(family, mu, variant, expected):
    form = catalog_form(SingularityType(family, mu, variant))
    assert [list(r) for r in form.entries] == expected
    assert form.labels == tuple(f"w{i + 1}" for i in range(len(expected)))


def test_zero_form_row_has_no_sectors():
    form = catalog_form(parse_type("A3", "-x^{2n}-y^2"))
    assert form.dim == 0 and inertia(form) == (0, 0, 0)


@pytest.mark.parametrize("name,variant,expected", [
    ("A1", "x^{2n}-y^2", [[h, h], [h, h]]),
    ("A5", "x^{2n}-y^2", [[F(5, 6), F(1, 6)], [F(1, 6), F(5, 6)]]),
    ("A2", "±x^{2n+1}-y^2", [[F(2, 3)]]),
    ("D4", "±x(x^{2n}-y^2)", [[1, h, h], [h, 1, h], [h, h, 1]]),
    ("D5", "x(x^{2n+1}±y^2)", [[3, 1], [1, 1]]),
    ("E6", "-x^4±y^3", [[2]]),
    ("E7", "±y(x^3±y^2)", [[F(7, 2), F(3, 2)], [F(3, 2), F(3, 2)]]),
    ("E8", "±x^5±y^3", [[8]]),
])
def test_spot_values(name, variant, expected):
    assert [list(r) for r in catalog_form(parse_type(name, variant)).entries] == expected


@pytest.mark.parametrize("n", range(1, 8))
def test_inertia_spot_values(n):
    mu = 2 * n - 1
    assert inertia(catalog_form(parse_type(f"A{mu}", "-x^{2n}+y^2"))) == (1, 0, 1)
    # second leading minor ((2n-1)^2 - 1)/(2n)^2 vanishes at n = 1 only
    expected = (1, 0, 1) if n == 1 else (2, 0, 0)
    assert inertia(catalog_form(parse_type(f"A{mu}", "x^{2n}-y^2"))) == expected


@pytest.mark.parametrize("t", list(catalog_types(13)), ids=str)
def test_catalog_inertia_agrees_with_oracle(t):
    form = catalog_form(t)
    assert tuple(inertia(form)) == inertia_by_sturm([list(r) for r in form.entries])


# --- Milnor forms ----------------------------------------------------------------

def _ade(t):
    return t.family, t.milnor_index


@pytest.mark.parametrize("t", list(catalog_types(10)), ids=str)
def test_milnor_from_negated_cartan(t):
    family, n = _ade(t)
    m, _ = cartan(family, n)
    neg = [[-v for v in row] for row in m]
    plus, minus, zero = inertia_by_sturm(neg)
    assert catalog_milnor(t) == (plus, minus) == (0, n)
    assert zero == 0


def test_milnor_examples():
    assert catalog_milnor(parse_type("A1", "x^{2n}-y^2")) == (0, 1)
    assert catalog_milnor(parse_type("A3", "x^{2n}+y^2")) == (0, 3)
    assert catalog_milnor(parse_type("E8", "±x^5±y^3")) == (0, 8)


# --- types and variants -----------------------------------------------------------

@pytest.mark.parametrize("raw,norm", [
    ("x^{2n} - y^2", "x^{2n}-y^2"),
    ("+-x^{2n+1}-y^2", "±x^{2n+1}-y^2"),
    ("+/-x^5+/-y^3", "±x^5±y^3"),
    ("−x^{2n}+y^2", "-x^{2n}+y^2"),
])
def test_normalize_variant(raw, norm):
    assert normalize_variant(raw) == norm


@pytest.mark.parametrize("name,variant", [
    ("A2", "x^{2n}-y^2"),      # wrong parity for the row
    ("D3", "±x(x^{2n}-y^2)"),  # below D4
    ("E9", "±x^5±y^3"),
    ("A0", "x^{2n}-y^2"),
    ("Q7", "x"),
    ("E7", "x^4±y^3"),
])
def test_unknown_types_rejected(name, variant):
    with pytest.raises(UnknownType):
        parse_type(name, variant)


def test_type_parameters():
    t = parse_type("D7", "x(x^{2n+1}±y^2)")
    assert (t.n, t.rho, t.name) == (2, 2, "D7")
    assert parse_type("A6", "±x^{2n+1}-y^2").n == 3
    assert parse_type("E7", "±y(x^3±y^2)").n is None


def test_catalog_types_listing():
    names = [str(t) for t in catalog_types(4)]
    assert len(names) == 14
    assert names[:4] == ["A1 -x^{2n}+y^2", "A1 x^{2n}-y^2", "A1 x^{2n}+y^2", "A1 -x^{2n}-y^2"]
    assert names[-2:] == ["D4 ±x(x^{2n}-y^2)", "D4 ±x(x^{2n}+y^2)"]


def test_notes_for_asymmetric_rows():
    assert "w1" in sector_notes(parse_type("D6", "±x(x^{2n}-y^2)"))
    assert "w2" in sector_notes(parse_type("D5", "x(x^{2n+1}±y^2)"))
    assert "w2" in sector_notes(parse_type("E7", "±y(x^3±y^2)"))


def test_lesser_diagonal_is_the_noted_label():
    e7 = catalog_form(parse_type("E7", "±y(x^3±y^2)"))
    assert e7["w2", "w2"] < e7["w1", "w1"]
    d5 = catalog_form(parse_type("D5", "x(x^{2n+1}±y^2)"))
    assert d5["w2", "w2"] < d5["w1", "w1"]
    d6 = catalog_form(parse_type("D6", "±x(x^{2n}-y^2)"))
    assert d6["w1", "w1"] < d6["w2", "w2"] == d6["w3", "w3"]


# --- fixtures ---------------------------------------------------------------------

REQUIRED = [
    ("A1", "x^{2n}-y^2"), ("A1", "-x^{2n}+y^2"), ("A1", "x^{2n}+y^2"), ("A1", "-x^{2n}-y^2"),
    ("A2", "±x^{2n+1}-y^2"), ("A2", "±x^{2n+1}+y^2"),
    ("A3", "x^{2n}-y^2"), ("A3", "-x^{2n}+y^2"), ("A3", "x^{2n}+y^2"), ("A3", "-x^{2n}-y^2"),
    ("D4", "±x(x^{2n}-y^2)"), ("D4", "±x(x^{2n}+y^2)"),
    ("D5", "x(x^{2n+1}±y^2)"), ("D5", "-x(x^{2n+1}±y^2)"),
    ("E6", "x^4±y^3"), ("E6", "-x^4±y^3"), ("E7", "±y(x^3±y^2)"), ("E8", "±x^5±y^3"),
]


@pytest.mark.parametrize("name,variant", REQUIRED)
def test_required_fixtures_present(name, variant):
    assert has_fixture(parse_type(name, variant))


BUNDLED = [t for t in catalog_types(8) if has_fixture(t)]


@pytest.mark.parametrize("t", BUNDLED, ids=str)
def test_pipeline_equals_catalog(t):
    assert compute_qp(catalog_morsification(t)) == catalog_form(t)


def test_no_fixture_raises():
    t = parse_type("D8", "±x(x^{2n}-y^2)")
    assert not has_fixture(t)
    with pytest.raises(NoFixture):
        catalog_morsification(t)


def test_a2_fixture_shape():
    s = catalog_morsification(parse_type("A2", "±x^{2n+1}-y^2"))
    assert (s.mu, s.rho, s.delta) == (2, 1, 1)
    assert len(s.interior_ids) == 1
    assert compute_qp(s).entries == ((F(2, 3),),)


# --- independent check of the fixture combinatorics on a grid ----------------------

def _isomorphisms(grid_regions, grid_pairs, fixture):
    """All bijections grid label -> fixture id preserving kind, Euler number and nodes."""
    g = {r.label: (r.interior, r.euler) for r in grid_regions}
    f = {r.id: (r.interior, r.euler) for r in fixture.regions}
    if sorted(g.values()) != sorted(f.values()):
        return []
    want = sorted(tuple(sorted(p)) for p in fixture.nodes)
    glabels = list(g)
    out = []
    for perm in itertools.permutations(list(f)):
        m = dict(zip(glabels, perm))
        if any(g[k] != f[m[k]] for k in glabels):
            continue
        if sorted(tuple(sorted((m[a], m[b]))) for a, b in grid_pairs) == want:
            out.append(m)
    return out


MORSIFICATIONS = {m.key: m for m in morsifications()}

# points far from the origin lying in the sector whose bounding branches meet at angle 0
ZERO_ANGLE_PROBES = {
    "E7 ±y(x^3±y^2)": ((-2.9, 0.0), "w2"),
    "D5 x(x^{2n+1}±y^2)": ((-1.9, 0.0), "w2"),
    "D7 x(x^{2n+1}±y^2)": ((-1.9, 0.0), "w2"),
    "D6 ±x(x^{2n}-y^2)": ((1.9, 0.0), "w1"),
}


@pytest.mark.parametrize("t", BUNDLED, ids=str)
def test_fixture_matches_grid_sign_analysis(t):
    m = MORSIFICATIONS[f"{t.name} {t.variant}"]
    check_nodes(m)
    probe = ZERO_ANGLE_PROBES.get(m.key)
    if probe:
        regions, pairs, (hit,) = analyse(m, probes=[probe[0]])
    else:
        regions, pairs = analyse(m)
    fixture = catalog_morsification(t)
    isos = _isomorphisms(regions, pairs, fixture)
    assert isos, f"grid combinatorics of {m.key} differ from the bundled fixture"
    if probe:
        assert hit != 0
        assert {iso[hit] for iso in isos} == {probe[1]}
