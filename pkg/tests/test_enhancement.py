from hypothesis import given
from hypothesis import strategies as st

from linkhomotopy.catalog import get_cocycle, get_link, get_structure
from linkhomotopy.coloring import counting_invariant
from linkhomotopy.enhancement import InvariantPolynomial, cocycle_invariant, invariant_table, orientation_values
from linkhomotopy.links import BraidWord, braid_closure, unlink


def test_polynomial_printing():
    assert str(InvariantPolynomial(3, {2: 2, 0: 17})) == "2u^2+17"
    assert str(InvariantPolynomial(3, {1: 48, 0: 16})) == "48u+16"
    assert str(InvariantPolynomial(3, {1: 1})) == "u"
    assert str(InvariantPolynomial(8, {7: 8, 0: 8})) == "8u^7+8"
    assert str(InvariantPolynomial(3, {})) == "0"


@given(st.dictionaries(st.integers(0, 7), st.integers(0, 50)))
def test_polynomial_round_trip(counts):
    p = InvariantPolynomial(8, counts)
    assert InvariantPolynomial.parse(str(p), 8) == p


def test_totals_equal_counting_invariant():
    X = get_structure("qt5")
    for name in ("L2a1", "L6a4", "L7n2"):
        d = get_link(name)
        p = cocycle_invariant(d, X, get_cocycle("phi1"))
        assert p.total() == counting_invariant(d, X)


def test_unlink_has_all_weights_zero():
    X = get_structure("qt4")
    p = cocycle_invariant(unlink(3), X, get_cocycle("borromean-phi"))
    assert str(p) == "64"


braids = st.integers(2, 3).flatmap(
    lambda k: st.lists(st.integers(1, k - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=6).map(
        lambda ls: BraidWord(k, tuple(ls))
    )
)


@given(braids)
def test_conjugation_invariance_of_weights(w):
    # conjugating by a generator is a Reidemeister II + isotopy on the closure
    if not w.letters:
        return
    X, phi = get_structure("qt4"), get_cocycle("borromean-phi")
    rotated = BraidWord(w.strands, w.letters[1:] + w.letters[:1])
    assert cocycle_invariant(braid_closure(w), X, phi) == cocycle_invariant(braid_closure(rotated), X, phi)


def test_table_and_csv():
    X = get_structure("qt5")
    links = [(n, get_link(n)) for n in ("L2a1", "L5a1")]
    cocycles = [(n, get_cocycle(n)) for n in ("phi1", "phi3")]
    t = invariant_table(links, X, cocycles)
    text = t.to_text()
    assert text.splitlines()[0].split() == ["L", "L2a1", "L5a1"]
    csv_lines = t.to_csv().splitlines()
    assert csv_lines[0] == "link,cocycle,weights,polynomial"
    assert len(csv_lines) == 5


def test_orientation_values_shape():
    vals = orientation_values(get_link("L6a4"), get_structure("qt4"), [get_cocycle("borromean-phi")])
    assert len(vals) == 8
