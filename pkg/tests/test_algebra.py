import pytest
from hypothesis import given
from hypothesis import strategies as st

from linkhomotopy.algebra import (
    FiniteBiquandle,
    StructureError,
    format_table,
    is_quasi_trivial,
    make_alexander_biquandle,
    make_alexander_quandle_mod,
    make_constant_action,
    make_dihedral,
    orbit_decomposition,
    parse_table,
    quasi_trivial_witness,
    verify_biquandle,
    verify_quandle,
)
from linkhomotopy.catalog import STRUCTURE_NAMES, get_structure


@pytest.mark.parametrize("n", range(1, 21))
def test_dihedral_is_kei(n):
    r = verify_quandle(make_dihedral(n).under)
    assert r.valid and r.kei


def test_dihedral_quasi_triviality():
    assert is_quasi_trivial(make_dihedral(4))
    assert not is_quasi_trivial(make_dihedral(6))
    assert quasi_trivial_witness(make_dihedral(6)) is not None


def test_quaternion_conjugation_orbits():
    X = get_structure("Q8-conj")
    assert is_quasi_trivial(X)
    assert sorted(orbit_decomposition(X).sizes()) == [1, 1, 2, 2, 2]


def test_small_alexander_biquandle_matrix():
    X = make_alexander_biquandle(3, 1, 2)
    assert format_table(X) == "3\n2 3 1 2 2 2\n3 1 2 1 1 1\n1 2 3 3 3 3\n"


def test_alexander_biquandle_orbits():
    X = make_alexander_biquandle(4, 1, 3)
    assert format_table(X).splitlines()[1] == "3 1 3 1 3 3 3 3"
    orbs = sorted(sorted(x + 1 for x in o) for o in orbit_decomposition(X).orbits)
    assert orbs == [[1, 3], [2, 4]]
    assert not is_quasi_trivial(X)


def test_borromean_detector_is_quasi_trivial():
    X = get_structure("qt4")
    assert verify_biquandle(X).valid
    assert is_quasi_trivial(X)
    orbs = sorted(sorted(x + 1 for x in o) for o in orbit_decomposition(X).orbits)
    assert orbs == [[1, 2], [3, 4]]


@pytest.mark.parametrize("name", STRUCTURE_NAMES)
def test_catalog_structures_valid_and_round_trip(name):
    X = get_structure(name)
    assert verify_biquandle(X).valid
    assert parse_table(format_table(X)) == X


def test_published_mirror_matrix_is_rejected():
    text = "4\n1 1 2 2 1 1 2 2\n2 2 1 1 2 2 1 2\n3 3 3 3 4 4 3 3\n4 4 4 4 3 3 4 4\n"
    r = verify_biquandle(parse_table(text))
    assert not r.valid
    assert r.violations[0][0] == "alpha-invertibility"


def test_constant_action():
    X = make_constant_action([1, 2, 0])
    assert verify_biquandle(X).valid


def test_non_bijective_column_rejected():
    bad = [[0, 0], [0, 1]]
    assert not verify_quandle(bad).valid


def test_parse_errors():
    with pytest.raises(StructureError):
        parse_table("2\n1 2\n")
    with pytest.raises(StructureError):
        parse_table("2\n1 x\n2 1\n")
    with pytest.raises(StructureError):
        parse_table("2\n1 3\n2 1\n")


@given(st.integers(2, 6))
def test_alexander_quandle_mod_is_quasi_trivial(k):
    X = make_alexander_quandle_mod(k)
    assert verify_quandle(X.under).valid
    assert is_quasi_trivial(X)
    assert sorted(orbit_decomposition(X).sizes()) == [k] * k


@given(st.integers(1, 7).flatmap(lambda n: st.permutations(range(n))))
def test_orbits_partition_and_are_closed(perm):
    X = make_constant_action(list(perm))
    orb = orbit_decomposition(X)
    assert sorted(x for o in orb.orbits for x in o) == list(range(len(perm)))
    for o in orb.orbits:
        X.restrict(o)


def test_restrict_requires_closure():
    X = make_dihedral(3)
    with pytest.raises(StructureError):
        X.restrict([0, 1])


def test_quandle_as_biquandle():
    X = FiniteBiquandle.from_quandle(make_dihedral(5).under)
    assert X.is_quandle
    assert verify_biquandle(X).valid
