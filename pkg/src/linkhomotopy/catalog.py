"""Built-in structures, link diagrams and cocycles, looked up by name.

Structure names:

* ``R<n>`` dihedral quandle, ``T<n>`` trivial quandle, ``A<k>`` the
  quandle Z_k[t^{+-1}]/(1-t)^2 (k^2 elements)
* ``alex-bq-<m>-<t>-<s>`` Alexander biquandle on Z_m
* ``Q8-conj``, ``S3-conj`` conjugation quandles
* ``qt4`` the 4-element quasi-trivial biquandle detecting the Borromean rings,
  ``qt5`` the 5-element one used for the link table, ``qt4m`` the 4-element
  one separating L4a1 from its mirror image

Link names are the table names in ``data/links.pd`` plus ``U<n>``,
``borromean``, pretzels ``P(...)``, braid closures ``BR[...]`` and literal
PD codes.
"""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .algebra import (
    FiniteBiquandle,
    StructureError,
    make_alexander_biquandle,
    make_alexander_quandle_mod,
    make_conj,
    make_dihedral,
    make_trivial,
    parse_table,
)
from .cohomology import Cochain2, parse_chi
from .links import DiagramError, LinkDiagram, braid_closure, parse_braid, parse_pd, parse_pretzel, pretzel_diagram, unlink


class UnknownNameError(KeyError):
    def __str__(self):
        return str(self.args[0])


# ---------------------------------------------------------------- structures

QT4 = """4
1 1 1 1  1 1 2 2
2 2 2 2  2 2 1 1
4 4 3 3  4 4 3 3
3 3 4 4  3 3 4 4
"""

QT5 = """5
1 1 1 2 3  1 1 1 1 3
2 2 2 3 1  2 2 2 2 1
3 3 3 1 2  3 3 3 3 2
4 4 4 4 4  4 4 4 4 4
5 5 5 5 5  5 5 5 5 5
"""

# As published, row 2 of the right block reads "2 2 1 2", which leaves the
# column of 4 non-bijective; the last entry is taken to be 1.
QT4M = """4
1 1 2 2  1 1 2 2
2 2 1 1  2 2 1 1
3 3 3 3  4 4 3 3
4 4 4 4  3 3 4 4
"""


def _quaternion_group():
    # elements 1, -1, i, -i, j, -j, k, -k as (sign, unit) with unit in 1,i,j,k
    units = "1ijk"
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for u in units for s in (1, -1)]
    index = {e: i for i, e in enumerate(elems)}
    cayley = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = table[(u1, u2)]
            row.append(index[(s * s1 * s2, u)])
        cayley.append(row)
    labels = [("" if s > 0 else "-") + u for s, u in elems]
    return cayley, labels


def _symmetric_group_3():
    from itertools import permutations

    perms = list(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    cayley = [[index[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
    labels = ["".join(str(v + 1) for v in p) for p in perms]
    return cayley, labels


def _named(b: FiniteBiquandle, name: str) -> FiniteBiquandle:
    return FiniteBiquandle(b.under, b.over, b.labels, name)


@lru_cache(maxsize=None)
def get_structure(name: str) -> FiniteBiquandle:
    key = name.strip()
    fixed = {"qt4": QT4, "qt5": QT5, "qt4m": QT4M}
    if key in fixed:
        return _named(parse_table(fixed[key]), key)
    if key == "Q8-conj":
        cayley, labels = _quaternion_group()
        return make_conj(cayley, labels, key)
    if key == "S3-conj":
        cayley, labels = _symmetric_group_3()
        return make_conj(cayley, labels, key)
    m = re.fullmatch(r"([RTA])(\d+)", key)
    if m:
        n = int(m.group(2))
        if n < 1:
            raise UnknownNameError("structure size must be positive: %r" % name)
        maker = {"R": make_dihedral, "T": make_trivial, "A": make_alexander_quandle_mod}[m.group(1)]
        return _named(maker(n), key)
    m = re.fullmatch(r"alex-bq-(\d+)-(-?\d+)-(-?\d+)", key)
    if m:
        return _named(make_alexander_biquandle(*(int(g) for g in m.groups())), key)
    path = Path(key)
    if path.suffix and path.is_file():
        return _named(parse_table(path.read_text()), path.stem)
    raise UnknownNameError("unknown structure %r" % name)


STRUCTURE_NAMES = ["R4", "R6", "Q8-conj", "S3-conj", "alex-bq-4-1-3", "alex-bq-3-1-2", "qt4", "qt5", "qt4m", "A2", "A3", "A4", "T2", "T3"]
QUASI_TRIVIAL_QUANDLES = ["R4", "Q8-conj", "A2", "A3", "A4", "T2", "T3"]


# ---------------------------------------------------------------- cocycles

# name -> (structure, modulus, characteristic-function form, 1-based)
COCYCLES = {
    "borromean-phi": ("qt4", 3, "chi(3,2) + chi(4,2)"),
    "phi1": ("qt5", 3, "2chi(2,4) + 2chi(2,5) + 2chi(3,4) + 2chi(4,5) + chi(5,2)"),
    "phi2": ("qt5", 3, "2chi(2,5) + 2chi(3,4) + 2chi(3,5) + 2chi(4,1) + 2chi(4,2) + 2chi(4,5) + 2chi(5,1) + 2chi(5,4)"),
    "phi3": ("qt5", 3, "chi(1,5) + 2chi(3,4) + chi(4,1) + chi(4,2) + chi(4,3) + 2chi(4,5) + chi(5,1) + 2chi(5,2) + 2chi(5,3)"),
    "mirror-phi": ("qt4m", 8, "3chi(1,4) + 6chi(2,3) + chi(2,4) + 2chi(3,1) + 4chi(3,2) + 2chi(4,1) + 4chi(4,2)"),
}


def get_cocycle(name: str) -> Cochain2:
    key = name.strip()
    if key not in COCYCLES:
        raise UnknownNameError("unknown cocycle %r" % name)
    _, n, text = COCYCLES[key]
    return parse_chi(text, n, key)


def cocycle_structure(name: str) -> str:
    if name not in COCYCLES:
        raise UnknownNameError("unknown cocycle %r" % name)
    return COCYCLES[name][0]


# ---------------------------------------------------------------- links


def _read_link_file(text: str) -> dict:
    out = {}
    for ln in text.splitlines():
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        name, code = ln.split(None, 1)
        out[name] = code.strip()
    return out


@lru_cache(maxsize=None)
def link_codes() -> dict:
    text = resources.files("linkhomotopy").joinpath("data/links.pd").read_text()
    return _read_link_file(text)


TABLE_LINKS = [
    "L2a1", "L4a1", "L5a1", "L6a1", "L6a2", "L6a3", "L6a4", "L6a5", "L6n1",
    "L7a1", "L7a2", "L7a3", "L7a4", "L7a5", "L7a6", "L7a7", "L7n1", "L7n2",
]
ALIASES = {"borromean": "L6a4", "hopf": "L2a1"}


@lru_cache(maxsize=None)
def get_link(name: str) -> LinkDiagram:
    key = name.strip()
    key = ALIASES.get(key, key)
    codes = link_codes()
    if key in codes:
        return parse_pd(codes[key], key)
    m = re.fullmatch(r"U(\d+)", key)
    if m:
        return unlink(int(m.group(1)))
    if key.startswith("P("):
        return pretzel_diagram(parse_pretzel(key))
    if key.startswith("BR"):
        return braid_closure(parse_braid(key), key)
    if key.startswith("PD"):
        return parse_pd(key)
    path = Path(key)
    if path.is_file():
        return parse_pd(path.read_text().strip(), path.stem)
    raise UnknownNameError("unknown link %r" % name)


__all__ = [
    "COCYCLES",
    "DiagramError",
    "QUASI_TRIVIAL_QUANDLES",
    "STRUCTURE_NAMES",
    "StructureError",
    "TABLE_LINKS",
    "UnknownNameError",
    "cocycle_structure",
    "get_cocycle",
    "get_link",
    "get_structure",
    "link_codes",
]
