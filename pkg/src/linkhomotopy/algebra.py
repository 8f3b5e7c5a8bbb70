"""Finite quandles and biquandles stored as operation tables.

Elements are the integers ``0..n-1`` internally.  A quandle is kept as a
biquandle whose over-operation is trivial (``x over y == x``), so every
downstream routine has a single code path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import gcd
from typing import Optional, Sequence

from .ring import AlexPair


class StructureError(ValueError):
    """A table is malformed (wrong shape, out-of-range entry) as opposed to
    failing an axiom."""


@dataclass
class ValidationReport:
    valid: bool
    violations: list = field(default_factory=list)  # (law name, witness tuple)
    kei: Optional[bool] = None

    def __bool__(self):
        return self.valid

    def laws(self):
        return [law for law, _ in self.violations]


def _check_table(table, n=None):
    rows = [tuple(int(v) for v in row) for row in table]
    if n is None:
        n = len(rows)
    if n < 1:
        raise StructureError("a structure needs at least one element")
    if len(rows) != n or any(len(r) != n for r in rows):
        raise StructureError("table must be %dx%d" % (n, n))
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise StructureError("entry (%d,%d)=%d out of range 0..%d" % (i, j, v, n - 1))
    return tuple(rows)


@dataclass(frozen=True)
class FiniteBiquandle:
    """Two n x n operation tables; ``under[x][y]`` is x under-triangle y and
    ``over[x][y]`` is x over-triangle y."""

    under: tuple
    over: tuple
    labels: Optional[tuple] = None
    name: str = ""

    def __post_init__(self):
        under = _check_table(self.under)
        over = _check_table(self.over, len(under))
        object.__setattr__(self, "under", under)
        object.__setattr__(self, "over", over)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != len(under):
                raise StructureError("need one label per element")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_quandle(cls, table, labels=None, name=""):
        table = _check_table(table)
        n = len(table)
        over = tuple(tuple(x for _ in range(n)) for x in range(n))
        return cls(table, over, labels, name)

    def __len__(self):
        return len(self.under)

    @property
    def size(self):
        return len(self.under)

    @property
    def elements(self):
        return range(len(self.under))

    def __eq__(self, other):
        if not isinstance(other, FiniteBiquandle):
            return NotImplemented
        return self.under == other.under and self.over == other.over

    def __hash__(self):
        return hash((self.under, self.over))

    @cached_property
    def is_quandle(self) -> bool:
        return all(self.over[x][y] == x for x in self.elements for y in self.elements)

    def label(self, x):
        return self.labels[x] if self.labels else str(x + 1)

    def sideways(self, x, y):
        """S(x, y) = (y over x, x under y)."""
        return self.over[y][x], self.under[x][y]

    @cached_property
    def _sideways_inverse(self):
        inv = {}
        for x, y in product(self.elements, repeat=2):
            inv[self.sideways(x, y)] = (x, y)
        return inv

    def sideways_inverse(self, a, b):
        return self._sideways_inverse[(a, b)]

    def restrict(self, subset) -> "FiniteBiquandle":
        """Sub-structure on ``subset``; raises StructureError if not closed."""
        subset = sorted(subset)
        pos = {x: i for i, x in enumerate(subset)}
        try:
            under = [[pos[self.under[x][y]] for y in subset] for x in subset]
            over = [[pos[self.over[x][y]] for y in subset] for x in subset]
        except KeyError:
            raise StructureError("subset %s is not closed" % subset) from None
        labels = [self.label(x) for x in subset]
        return FiniteBiquandle(under, over, labels)

    def __repr__(self):
        kind = "quandle" if self.is_quandle else "biquandle"
        name = " %s" % self.name if self.name else ""
        return "<FiniteBiquandle%s: %d-element %s>" % (name, self.size, kind)


# ---------------------------------------------------------------- verification


def _is_bijection(values):
    return len(set(values)) == len(values)


def verify_quandle(table) -> ValidationReport:
    """Check the three quandle axioms on a single table by exhaustive
    enumeration; also report whether the quandle is a kei."""
    t = _check_table(table)
    n = len(t)
    els = range(n)
    violations = []

    for y in els:
        if not _is_bijection([t[x][y] for x in els]):
            col = [t[x][y] for x in els]
            x1 = next(x for x in els if col.count(col[x]) > 1)
            x2 = next(x for x in els if x > x1 and col[x] == col[x1])
            violations.append(("right-invertibility", (x1, x2, y)))
            break
    for x, y, z in product(els, repeat=3):
        if t[t[x][y]][z] != t[t[x][z]][t[y][z]]:
            violations.append(("right-distributivity", (x, y, z)))
            break
    for x in els:
        if t[x][x] != x:
            violations.append(("idempotency", (x,)))
            break
    kei = all(t[t[x][y]][y] == x for x in els for y in els)
    return ValidationReport(not violations, violations, kei)


def verify_biquandle(b: FiniteBiquandle) -> ValidationReport:
    """Check biquandle axioms (diagonal agreement, invertibility of the column
    maps and of S, the three exchange laws); first witness per law."""
    U, O = b.under, b.over
    els = b.elements
    violations = []

    for x in els:
        if U[x][x] != O[x][x]:
            violations.append(("diagonal", (x,)))
            break
    for y in els:
        if not _is_bijection([O[x][y] for x in els]):
            violations.append(("alpha-invertibility", (y,)))
            break
    for y in els:
        if not _is_bijection([U[x][y] for x in els]):
            violations.append(("beta-invertibility", (y,)))
            break
    seen = {}
    for x, y in product(els, repeat=2):
        image = (O[y][x], U[x][y])
        if image in seen:
            violations.append(("sideways-invertibility", seen[image] + (x, y)))
            break
        seen[image] = (x, y)

    laws = (
        ("exchange-under-under", lambda x, y, z: U[U[x][y]][U[z][y]] == U[U[x][z]][O[y][x]]),
        ("exchange-over-under", lambda x, y, z: U[O[x][y]][O[z][y]] == O[U[x][z]][U[y][x]]),
        ("exchange-over-over", lambda x, y, z: O[O[x][y]][O[z][y]] == O[O[x][z]][U[y][x]]),
    )
    for name, law in laws:
        for x, y, z in product(els, repeat=3):
            if not law(x, y, z):
                violations.append((name, (x, y, z)))
                break
    return ValidationReport(not violations, violations)


# ---------------------------------------------------------------- constructors


def make_trivial(n: int) -> FiniteBiquandle:
    return FiniteBiquandle.from_quandle(
        [[x] * n for x in range(n)], [str(x) for x in range(n)], "T%d" % n
    )


def make_dihedral(n: int) -> FiniteBiquandle:
    """R_n on Z_n with x > y = 2y - x; element i is labelled by residue i."""
    table = [[(2 * y - x) % n for y in range(n)] for x in range(n)]
    return FiniteBiquandle.from_quandle(table, [str(x) for x in range(n)], "R%d" % n)


def _check_group(cayley):
    g = _check_table(cayley)
    n = len(g)
    els = range(n)
    for a, b, c in product(els, repeat=3):
        if g[g[a][b]][c] != g[a][g[b][c]]:
            raise StructureError("Cayley table is not associative at %s" % ((a, b, c),))
    ids = [e for e in els if all(g[e][x] == x == g[x][e] for x in els)]
    if not ids:
        raise StructureError("Cayley table has no identity")
    e = ids[0]
    inv = []
    for x in els:
        cands = [y for y in els if g[x][y] == e]
        if not cands:
            raise StructureError("element %d has no inverse" % x)
        inv.append(cands[0])
    return g, inv


def make_conj(cayley, labels=None, name="") -> FiniteBiquandle:
    """Conjugation quandle x > y = y^-1 x y of a group given by its Cayley table."""
    g, inv = _check_group(cayley)
    n = len(g)
    table = [[g[g[inv[y]][x]][y] for y in range(n)] for x in range(n)]
    return FiniteBiquandle.from_quandle(table, labels, name or "Conj")


def make_core(cayley, labels=None, name="") -> FiniteBiquandle:
    """Core quandle x > y = y x^-1 y."""
    g, inv = _check_group(cayley)
    n = len(g)
    table = [[g[g[y][inv[x]]][y] for y in range(n)] for x in range(n)]
    return FiniteBiquandle.from_quandle(table, labels, name or "Core")


def make_alexander_quandle_mod(k: int) -> FiniteBiquandle:
    """Z_k[t^{+-1}]/(1-t)^2 with x > y = tx + (1-t)y.

    Element (a, b) = a + b(1-t) sits at index ``a*k + b``."""
    if k < 1:
        raise ValueError("k must be positive")
    pairs = [AlexPair(a, b, k) for a in range(k) for b in range(k)]
    index = {p: i for i, p in enumerate(pairs)}
    table = [[index[x.triangle(y)] for y in pairs] for x in pairs]
    labels = [str(p) for p in pairs]
    return FiniteBiquandle.from_quandle(table, labels, "A%d" % k)


def alexander_pair(b: FiniteBiquandle, i: int) -> AlexPair:
    """Inverse of the indexing used by make_alexander_quandle_mod."""
    k = int(round(len(b) ** 0.5))
    return AlexPair(i // k, i % k, k)


def make_alexander_biquandle(m: int, t: int, s: int) -> FiniteBiquandle:
    """Alexander biquandle on Z_m: x under y = tx + (s-t)y, x over y = sx.

    Index i stands for the residue (i+1) mod m, so that the 1-based operation
    matrix uses m for the class of zero."""
    if m < 1:
        raise ValueError("m must be positive")
    if gcd(t, m) != 1 or gcd(s, m) != 1:
        raise StructureError("t=%d and s=%d must be units mod %d" % (t, s, m))
    res = [(i + 1) % m for i in range(m)]
    idx = {r: i for i, r in enumerate(res)}
    under = [[idx[(t * res[x] + (s - t) * res[y]) % m] for y in range(m)] for x in range(m)]
    over = [[idx[(s * res[x]) % m] for _ in range(m)] for x in range(m)]
    return FiniteBiquandle(under, over, [str(i + 1) for i in range(m)], "Alex(%d;%d,%d)" % (m, t, s))


def make_constant_action(sigma: Sequence[int]) -> FiniteBiquandle:
    n = len(sigma)
    if sorted(sigma) != list(range(n)):
        raise StructureError("sigma must be a permutation of 0..%d" % (n - 1))
    table = [[sigma[x]] * n for x in range(n)]
    return FiniteBiquandle(table, table, None, "Const")


# ---------------------------------------------------------------- orbits


@dataclass(frozen=True)
class OrbitDecomposition:
    orbit_of: tuple  # element -> orbit id
    orbits: tuple  # tuple of sorted element tuples; id order = lowest element

    def same_orbit(self, x, y):
        return self.orbit_of[x] == self.orbit_of[y]

    def sizes(self):
        return [len(o) for o in self.orbits]

    def __len__(self):
        return len(self.orbits)


def orbit_decomposition(b: FiniteBiquandle) -> OrbitDecomposition:
    """Orbits of the column group generated by every alpha_y and beta_y."""
    n = len(b)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for x, y in product(range(n), repeat=2):
        union(x, b.under[x][y])
        union(x, b.over[x][y])

    groups = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    orbits = sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])
    orbit_of = [0] * n
    for i, orb in enumerate(orbits):
        for x in orb:
            orbit_of[x] = i
    return OrbitDecomposition(tuple(orbit_of), tuple(orbits))


def quasi_trivial_witness(b: FiniteBiquandle):
    """First same-orbit pair (x, y) acting non-trivially, or None."""
    orb = orbit_decomposition(b)
    for x, y in product(b.elements, repeat=2):
        if orb.same_orbit(x, y) and (b.under[x][y] != x or b.over[x][y] != x):
            return (x, y)
    return None


def is_quasi_trivial(b: FiniteBiquandle) -> bool:
    return quasi_trivial_witness(b) is None


# ---------------------------------------------------------------- text format


def parse_table(text: str) -> FiniteBiquandle:
    """Read the 1-based block-matrix format: a line with n, then n rows of
    2n (biquandle) or n (quandle) integers."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise StructureError("empty table file")
    try:
        n = int(lines[0])
        rows = [[int(v) for v in ln.replace("|", " ").split()] for ln in lines[1:]]
    except ValueError as exc:
        raise StructureError("non-integer entry: %s" % exc) from None
    if n < 1 or len(rows) != n:
        raise StructureError("expected %d rows, found %d" % (n, len(rows)))
    widths = {len(r) for r in rows}
    if widths == {n}:
        return FiniteBiquandle.from_quandle([[v - 1 for v in r] for r in rows])
    if widths != {2 * n}:
        raise StructureError("rows must all have %d or %d entries" % (n, 2 * n))
    under = [[v - 1 for v in r[:n]] for r in rows]
    over = [[v - 1 for v in r[n:]] for r in rows]
    return FiniteBiquandle(under, over)


def format_table(b: FiniteBiquandle, quandle_form: bool = False) -> str:
    if quandle_form and not b.is_quandle:
        raise StructureError("not a quandle; the over block cannot be omitted")
    out = [str(len(b))]
    for x in b.elements:
        row = [v + 1 for v in b.under[x]]
        if not quandle_form:
            row += [v + 1 for v in b.over[x]]
        out.append(" ".join(str(v) for v in row))
    return "\n".join(out) + "\n"
