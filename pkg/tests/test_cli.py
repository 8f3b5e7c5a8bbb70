import io
import subprocess
import sys

import pytest

from linkhomotopy import catalog
from linkhomotopy.algebra import format_table, parse_table, verify_biquandle
from linkhomotopy.cli import main
from linkhomotopy.cohomology import is_cocycle2, is_quasi_trivial_cochain


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_verify_catalog_structure():
    assert run("verify", "qt4") == (0, "valid biquandle, 4 elements\n")
    code, text = run("verify", "R5")
    assert code == 0 and text.startswith("valid kei")


def test_verify_reports_broken_table(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("2\n1 1  1 2\n2 2  2 2\n")
    code, text = run("verify", str(f))
    assert code == 1
    assert "invalid" in text


def test_orbits_of_q8():
    code, text = run("orbits", "Q8-conj")
    assert code == 0
    assert text.splitlines()[:3] == ["O1 = {1}", "O2 = {-1}", "O3 = {i, -i}"]
    assert text.endswith("quasi-trivial: yes\n")


def test_color_counts():
    assert run("color", "U3", "qt4") == (0, "64\n")
    assert run("color", "L4a1", "qt4") == (0, "16\n")


def test_color_dump(tmp_path):
    f = tmp_path / "dump.csv"
    code, text = run("color", "L2a1", "qt4", "--seed-dump", str(f))
    assert code == 0
    assert f.read_text().count("# coloring") == int(text)


def test_classify_output():
    code, text = run("classify", "P(0,0,3)")
    assert code == 0
    assert text.splitlines() == ["TRIVIAL_LINK", "branch 2(c)i", "N=2 E=2"]


def test_classify_certificate():
    code, text = run("classify", "P(4,4)", "--certificate")
    assert code == 0
    assert "certificate: Z_3" in text


def test_cocycle_search():
    code, text = run("cocycles", "T2", "--mod", "2", "--quasi-trivial")
    assert code == 0
    assert "chi(1,2) + chi(2,1)" in text.splitlines()


def test_invariant_accepts_inline_cochain():
    code, text = run("invariant", "U2", "T2", "2; (1,2)=1")
    assert (code, text) == (0, "4\n")


def test_table_csv_header():
    code, text = run("table", "--links", "L2a1", "--cocycles", "phi1", "--csv")
    assert code == 0
    assert text.splitlines()[0] == "link,cocycle,weights,polynomial"


@pytest.mark.parametrize(
    "argv, tag",
    [
        (("verify", "nope"), "unknown-name"),
        (("color", "L99z", "qt4"), "unknown-name"),
        (("classify", "P(x)"), "invalid-diagram"),
        (("color", "PD[X(1,2,3)]", "qt4"), "invalid-diagram"),
        (("invariant", "L2a1", "qt5", "nocycle"), None),
        (("cocycles", "A4", "--mod", "4", "--max-variables", "3"), "resource-limit"),
    ],
)
def test_domain_errors(argv, tag, capsys):
    code, _ = run(*argv)
    err = capsys.readouterr().err
    if tag is None:
        assert code == 2 and "usage error" in err
    else:
        assert code == 1
        assert "error (%s)" % tag in err


def test_usage_errors(capsys):
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("cocycles", "T2")[0] == 2


def test_list_names_everything():
    code, text = run("list")
    assert code == 0
    for name in catalog.STRUCTURE_NAMES + list(catalog.COCYCLES):
        assert name in text


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "linkhomotopy.cli", "classify", "P(2,-2)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("TRIVIAL_LINK")


# ---------------------------------------------------------------- catalog


@pytest.mark.parametrize("name", catalog.STRUCTURE_NAMES)
def test_catalog_structures_round_trip(name):
    X = catalog.get_structure(name)
    again = parse_table(format_table(X))
    assert again.under == X.under and again.over == X.over


@pytest.mark.parametrize("name", catalog.STRUCTURE_NAMES)
def test_catalog_structures_are_valid(name):
    assert verify_biquandle(catalog.get_structure(name)).valid


@pytest.mark.parametrize("name", ["borromean-phi", "phi1", "phi3", "mirror-phi"])
def test_catalog_cocycles_pass(name):
    X = catalog.get_structure(catalog.cocycle_structure(name))
    phi = catalog.get_cocycle(name)
    assert is_cocycle2(phi, X)
    assert is_quasi_trivial_cochain(phi, X)


def test_printed_phi2_fails_cocycle_condition():
    # kept as printed; the acceptance suite reports this
    X = catalog.get_structure("qt5")
    assert not is_cocycle2(catalog.get_cocycle("phi2"), X)


def test_every_table_link_parses():
    for name in catalog.TABLE_LINKS + ["trefoil", "borromean", "hopf"]:
        d = catalog.get_link(name)
        assert len(d.crossings) >= 2


def test_link_name_forms():
    assert catalog.get_link("U2").component_count == 2
    assert catalog.get_link("P(1,1,1)").component_count == 1
    assert catalog.get_link("BR[2; s1 s1]").component_count == 2
    with pytest.raises(catalog.UnknownNameError):
        catalog.get_link("L9q9")
