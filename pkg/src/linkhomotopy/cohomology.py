"""Low-degree birack chains, 2-cochains over Z_n and the 2-cocycle search.

Boundary of an n-tuple:

    d(x) = sum_k (-1)^k [ d0_k(x) - d1_k(x) ]

where d0_k deletes the k-th entry and d1_k acts on the entries before x_k by
``under x_k`` and on those after by ``over x_k``.
"""

from __future__ import annotations

import re
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product

from .algebra import FiniteBiquandle, is_quasi_trivial, orbit_decomposition
from .smith import enumerate_group, solution_generators_mod, span_mod


class ResourceLimitError(RuntimeError):
    pass


def face0(tup, k):
    return tup[:k] + tup[k + 1:]


def face1(X: FiniteBiquandle, tup, k):
    xk = tup[k]
    return tuple(X.under[x][xk] for x in tup[:k]) + tuple(X.over[x][xk] for x in tup[k + 1:])


def boundary(X: FiniteBiquandle, tup) -> dict:
    """Boundary of a basis tuple as {tuple: integer coefficient}, zeros dropped."""
    tup = tuple(tup)
    out = defaultdict(int)
    for k in range(len(tup)):
        sign = -1 if k % 2 == 0 else 1  # (-1)^(k+1) with 0-based k
        out[face0(tup, k)] += sign
        out[face1(X, tup, k)] -= sign
    return {t: c for t, c in out.items() if c}


def boundary_of_chain(X, chain: dict) -> dict:
    out = defaultdict(int)
    for tup, c in chain.items():
        for t, e in boundary(X, tup).items():
            out[t] += c * e
    return {t: c for t, c in out.items() if c}


@dataclass(frozen=True)
class Cochain2:
    """phi = sum c_{x,y} chi_{(x,y)} with values in Z_n; elements 0-based."""

    modulus: int
    coeff: dict = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        clean = {}
        for (x, y), c in dict(self.coeff).items():
            c %= self.modulus
            if c:
                clean[(int(x), int(y))] = c
        object.__setattr__(self, "coeff", dict(sorted(clean.items())))

    def __call__(self, x, y):
        return self.coeff.get((x, y), 0)

    def __eq__(self, other):
        if not isinstance(other, Cochain2):
            return NotImplemented
        return self.modulus == other.modulus and self.coeff == other.coeff

    def __hash__(self):
        return hash((self.modulus, tuple(self.coeff.items())))

    def support(self):
        return list(self.coeff)

    def evaluate(self, chain: dict) -> int:
        return sum(c * self(*t) for t, c in chain.items()) % self.modulus

    def vector(self, pairs):
        return tuple(self(x, y) for x, y in pairs)

    @classmethod
    def from_vector(cls, modulus, pairs, vec, name=""):
        return cls(modulus, {p: v for p, v in zip(pairs, vec) if v % modulus}, name)

    def to_text(self) -> str:
        parts = ["%d" % self.modulus]
        parts += ["(%d,%d)=%d" % (x + 1, y + 1, c) for (x, y), c in self.coeff.items()]
        return "; ".join(parts)

    def to_chi(self) -> str:
        if not self.coeff:
            return "0"
        terms = []
        for (x, y), c in self.coeff.items():
            terms.append("%schi(%d,%d)" % ("" if c == 1 else "%d*" % c, x + 1, y + 1))
        return " + ".join(terms)

    def __str__(self):
        return self.to_text()


_PAIR = re.compile(r"^\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*=\s*(-?\d+)$")
_CHI = re.compile(r"(?:(\d+)\s*\*?\s*)?(?:chi|χ)_?[\(\{]\(?\s*(\d+)\s*,\s*(\d+)\s*\)?[\)\}]")


def parse_cochain(text: str, name: str = "") -> Cochain2:
    """Parse ``n; (x,y)=c; ...`` with 1-based elements."""
    parts = [p.strip() for p in text.strip().split(";") if p.strip()]
    if not parts:
        raise ValueError("empty cochain text")
    try:
        n = int(parts[0])
    except ValueError:
        raise ValueError("cochain text must start with the modulus") from None
    coeff = {}
    for p in parts[1:]:
        m = _PAIR.match(p)
        if not m:
            raise ValueError("bad cochain term %r" % p)
        coeff[(int(m.group(1)) - 1, int(m.group(2)) - 1)] = int(m.group(3))
    return Cochain2(n, coeff, name)


def parse_chi(text: str, modulus: int, name: str = "") -> Cochain2:
    """Parse a characteristic-function sum such as ``2chi(2,4) + chi(5,2)``
    (also ``χ_{(3,2)}`` and ``2χ_{2,4}``); elements are 1-based."""
    coeff = defaultdict(int)
    stripped = text.replace(" ", "")
    pos = 0
    for m in _CHI.finditer(stripped):
        gap = stripped[pos:m.start()].strip("+")
        if gap:
            raise ValueError("cannot parse %r" % gap)
        c = int(m.group(1)) if m.group(1) else 1
        coeff[(int(m.group(2)) - 1, int(m.group(3)) - 1)] += c
        pos = m.end()
    if stripped[pos:].strip("+") or (not coeff and stripped not in ("", "0")):
        raise ValueError("cannot parse %r" % stripped[pos:])
    return Cochain2(modulus, dict(coeff), name)


def coboundary2_value(phi: Cochain2, X: FiniteBiquandle, x, y, z) -> int:
    """(delta phi)(x, y, z) via the expanded formula."""
    U, O = X.under, X.over
    v = (
        -phi(y, z)
        + phi(O[y][x], O[z][x])
        + phi(x, z)
        - phi(U[x][y], O[z][y])
        - phi(x, y)
        + phi(U[x][z], U[y][z])
    )
    return v % phi.modulus


def cocycle_witness(phi: Cochain2, X: FiniteBiquandle):
    """First triple (lexicographic) where delta phi is non-zero, or None."""
    for bad in phi.coeff:
        if max(bad) >= len(X):
            raise ValueError("cochain refers to element %d outside X" % (max(bad) + 1))
    for x, y, z in product(X.elements, repeat=3):
        if coboundary2_value(phi, X, x, y, z):
            return (x, y, z)
    return None


def is_cocycle2(phi: Cochain2, X: FiniteBiquandle) -> bool:
    return cocycle_witness(phi, X) is None


def is_quasi_trivial_cochain(phi: Cochain2, X: FiniteBiquandle) -> bool:
    """phi vanishes on every same-orbit pair (this includes degeneracy)."""
    if not is_quasi_trivial(X):
        warnings.warn("X is not quasi-trivial", stacklevel=2)
    orb = orbit_decomposition(X)
    return all(not orb.same_orbit(x, y) for (x, y) in phi.coeff)


def is_degenerate_free(phi: Cochain2) -> bool:
    return all(x != y for (x, y) in phi.coeff)


# ---------------------------------------------------------------- search


def cochain_pairs(X: FiniteBiquandle, quasi_trivial: bool = True, degenerate: bool = False):
    """Variable pairs allowed in the support: cross-orbit pairs for the
    quasi-trivial complex, off-diagonal pairs for the biquandle complex, all
    pairs for the birack complex (``degenerate=True``)."""
    if quasi_trivial:
        orb = orbit_decomposition(X)
        return [(x, y) for x, y in product(X.elements, repeat=2) if not orb.same_orbit(x, y)]
    if degenerate:
        return list(product(X.elements, repeat=2))
    return [(x, y) for x, y in product(X.elements, repeat=2) if x != y]


def cocycle_constraints(X: FiniteBiquandle, pairs):
    """Integer matrix whose rows are phi -> (delta phi)(x, y, z) on the chosen
    variables, one row per triple (duplicate and zero rows removed)."""
    col = {p: i for i, p in enumerate(pairs)}
    rows = set()
    for t in product(X.elements, repeat=3):
        row = [0] * len(pairs)
        for pair, c in boundary(X, t).items():
            if pair in col:
                row[col[pair]] += c
        if any(row):
            rows.add(tuple(row))
    return [list(r) for r in sorted(rows)]


def coboundary_vectors(X: FiniteBiquandle, pairs):
    """delta(chi_x) restricted to ``pairs`` for every 1-cochain basis element."""
    col = {p: i for i, p in enumerate(pairs)}
    vecs = []
    for g in X.elements:
        v = [0] * len(pairs)
        for pair in product(X.elements, repeat=2):
            if pair not in col:
                continue
            for t, c in boundary(X, pair).items():
                if t == (g,):
                    v[col[pair]] += c
        vecs.append(v)
    return vecs


@dataclass
class CocycleModule:
    modulus: int
    pairs: list
    cocycle_orders: list  # cyclic decomposition of Z^2
    coboundary_orders: list  # cyclic decomposition of B^2
    generators: list  # Cochain2 generators of Z^2

    @property
    def cocycle_count(self):
        out = 1
        for o in self.cocycle_orders:
            out *= o
        return out

    @property
    def coboundary_count(self):
        out = 1
        for o in self.coboundary_orders:
            out *= o
        return out

    @property
    def cohomology_count(self):
        return self.cocycle_count // self.coboundary_count


def cocycle_module(X, modulus, quasi_trivial=True, degenerate=False, max_variables=400) -> CocycleModule:
    pairs = cochain_pairs(X, quasi_trivial, degenerate)
    if len(pairs) > max_variables:
        raise ResourceLimitError("%d cochain variables exceed the cap %d" % (len(pairs), max_variables))
    rows = cocycle_constraints(X, pairs)
    gens = solution_generators_mod(rows, len(pairs), modulus)
    if quasi_trivial:
        # every 1-tuple lies in a single orbit, so the 1-cochains of the
        # quasi-trivial complex vanish and there are no coboundaries
        cob = []
    else:
        cob = span_mod(coboundary_vectors(X, pairs), len(pairs), modulus)
    return CocycleModule(
        modulus,
        pairs,
        [o for o, _ in gens],
        [o for o, _ in cob],
        [Cochain2.from_vector(modulus, pairs, v) for _, v in gens],
    )


def search_cocycles2(
    X: FiniteBiquandle,
    modulus: int,
    quasi_trivial: bool = True,
    mod_coboundaries: bool = False,
    degenerate: bool = False,
    max_variables: int = 400,
    max_solutions: int = 100_000,
):
    """Solve delta phi = 0 over Z_n exactly (Smith form, so composite n works).

    Returns every cocycle when the solution group has at most
    ``max_solutions`` elements, otherwise a generating set.  With
    ``mod_coboundaries`` one representative per coset of the coboundaries is
    returned (the lexicographically smallest coefficient vector)."""
    pairs = cochain_pairs(X, quasi_trivial, degenerate)
    if len(pairs) > max_variables:
        raise ResourceLimitError("%d cochain variables exceed the cap %d" % (len(pairs), max_variables))
    rows = cocycle_constraints(X, pairs)
    gens = solution_generators_mod(rows, len(pairs), modulus)
    size = 1
    for o, _ in gens:
        size *= o
    if size > max_solutions:
        return [Cochain2.from_vector(modulus, pairs, v) for _, v in gens]
    vectors = enumerate_group(gens, len(pairs), modulus)
    if mod_coboundaries and not quasi_trivial:
        cob = span_mod(coboundary_vectors(X, pairs), len(pairs), modulus)
        bvecs = enumerate_group(cob, len(pairs), modulus, limit=max_solutions)
        reps, seen = [], set()
        for v in sorted(vectors):
            if v in seen:
                continue
            coset = {tuple((a + b) % modulus for a, b in zip(v, w)) for w in bvecs}
            seen |= coset
            reps.append(min(coset))
        vectors = reps
    return [Cochain2.from_vector(modulus, pairs, v) for v in sorted(vectors)]
