"""Biquandle colorings of link diagrams.

Crossing rule: at a positive crossing with under-in color x and over-in color
y the outgoing colors are ``under_out = x under y`` and ``over_out = y over x``;
a negative crossing satisfies the same relation with (under_out, over_out) in
the input roles, i.e. the sideways map run backwards.  For a quandle (trivial
over-operation) this is the usual arc coloring.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .algebra import FiniteBiquandle
from .links import BraidWord, DiagramError, LinkDiagram
from .ring import AlexPair


def crossing_roles(d: LinkDiagram):
    """Per crossing ``(x_arc, y_arc, x_under_y_arc, y_over_x_arc)``: the two
    semiarcs in positive-form input roles followed by the two they determine."""
    roles = []
    for c in d.crossings:
        if c.sign > 0:
            roles.append((c.under_in, c.over_in, c.under_out, c.over_out))
        else:
            roles.append((c.under_out, c.over_out, c.under_in, c.over_in))
    return roles


@dataclass(frozen=True)
class Coloring:
    colors: tuple  # semiarc -> element
    loop_colors: tuple
    diagram: LinkDiagram
    structure: FiniteBiquandle

    def __getitem__(self, semiarc):
        return self.colors[semiarc]

    def is_valid(self) -> bool:
        X = self.structure
        for x, y, r, s in crossing_roles(self.diagram):
            a, b = self.colors[x], self.colors[y]
            if self.colors[r] != X.under[a][b] or self.colors[s] != X.over[b][a]:
                return False
        return True

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["semiarc", "element"])
        for s, v in enumerate(self.colors):
            w.writerow([s + 1, v + 1])
        for i, v in enumerate(self.loop_colors):
            w.writerow(["loop%d" % (i + 1), v + 1])
        return buf.getvalue()


def _search(d: LinkDiagram, X: FiniteBiquandle) -> Iterator[list]:
    """Seed-and-propagate backtracking over the semiarc colors.

    Yields the (shared, mutable) color list at each complete solution."""
    m = d.semiarc_count
    if m == 0:
        yield []
        return
    U, O = X.under, X.over
    sinv = X._sideways_inverse
    roles = crossing_roles(d)
    watch = [[] for _ in range(m)]
    for ci, r in enumerate(roles):
        for s in r:
            watch[s].append(ci)
    color = [-1] * m

    def propagate(queue, trail):
        while queue:
            s = queue.pop()
            for ci in watch[s]:
                a, b, r, t = roles[ci]
                ca, cb, cr, ct = color[a], color[b], color[r], color[t]
                if ca >= 0 and cb >= 0:
                    want = ((r, U[ca][cb]), (t, O[cb][ca]))
                elif cr >= 0 and ct >= 0:
                    x, y = sinv[(ct, cr)]
                    want = ((a, x), (b, y))
                else:
                    continue
                for arc, v in want:
                    if color[arc] < 0:
                        color[arc] = v
                        trail.append(arc)
                        queue.append(arc)
                    elif color[arc] != v:
                        return False
        return True

    def pick():
        for a, b, r, t in roles:
            if (color[a] >= 0) != (color[b] >= 0):
                return b if color[a] >= 0 else a
            if (color[r] >= 0) != (color[t] >= 0):
                return t if color[r] >= 0 else r
        for s in range(m):
            if color[s] < 0:
                return s
        return None

    n = len(X)

    def dfs():
        s = pick()
        if s is None:
            yield color
            return
        for v in range(n):
            trail = [s]
            color[s] = v
            if propagate([s], trail):
                yield from dfs()
            for arc in trail:
                color[arc] = -1

    yield from dfs()


def enumerate_colorings(d: LinkDiagram, X: FiniteBiquandle) -> list:
    """All X-colorings of d in lexicographic order of their color vectors."""
    base = sorted(tuple(c) for c in _search(d, X))
    out = []
    for colors in base:
        for loops in product(range(len(X)), repeat=d.free_loops):
            out.append(Coloring(colors, loops, d, X))
    return out


def counting_invariant(d: LinkDiagram, X: FiniteBiquandle) -> int:
    """Number of X-colorings of d."""
    count = sum(1 for _ in _search(d, X))
    return count * len(X) ** d.free_loops


def iter_color_vectors(d: LinkDiagram, X: FiniteBiquandle):
    """Colorings of the crossing part as tuples, unsorted; free loops are not
    expanded (each contributes a factor |X|)."""
    for c in _search(d, X):
        yield tuple(c)


# ---------------------------------------------------------------- braids


def braid_action(w: BraidWord, top: Sequence[int], X: FiniteBiquandle) -> tuple:
    """Push a vector of element colors through the braid from top to bottom."""
    if len(top) != w.strands:
        raise DiagramError("braid has %d strands, got %d colors" % (w.strands, len(top)))
    v = list(top)
    for g in w.letters:
        i = abs(g) - 1
        x, y = v[i], v[i + 1]
        if g > 0:
            v[i], v[i + 1] = X.over[y][x], X.under[x][y]
        else:
            # (x, y) = S(z, w) with (z, w) the bottom colors
            z, w_ = X.sideways_inverse(x, y)
            v[i], v[i + 1] = z, w_
    return tuple(v)


def braid_transfer(w: BraidWord, top: Sequence[AlexPair], k: int | None = None) -> tuple:
    """Braid coloring over Z_k[t^{+-1}]/(1-t)^2 in the pair encoding:
    sigma_i sends (x_i, x_{i+1}) to (x_{i+1}, x_i > x_{i+1})."""
    if len(top) != w.strands:
        raise DiagramError("braid has %d strands, got %d colors" % (w.strands, len(top)))
    v = [x if k is None else AlexPair(x.a, x.b, k) for x in top]
    for g in w.letters:
        i = abs(g) - 1
        x, y = v[i], v[i + 1]
        if g > 0:
            v[i], v[i + 1] = y, x.triangle(y)
        else:
            v[i], v[i + 1] = y.triangle_inv(x), x
    return tuple(v)


# ---------------------------------------------------------------- linear counting


def count_alexander_colorings(d: LinkDiagram, k: int) -> int:
    """Colorings by Z_k[t^{+-1}]/(1-t)^2 counted as the solution set of a
    linear system over Z_k (two coordinates per semiarc), via Smith form."""
    from .smith import count_solutions_mod

    m = d.semiarc_count
    rows = []
    for x, y, r, s in crossing_roles(d):
        # r = x > y: a_r = a_x, b_r = b_x - a_x + a_y ; s = y
        for lhs, terms in (
            (2 * r, {2 * x: 1}),
            (2 * r + 1, {2 * x + 1: 1, 2 * x: -1, 2 * y: 1}),
            (2 * s, {2 * y: 1}),
            (2 * s + 1, {2 * y + 1: 1}),
        ):
            row = [0] * (2 * m)
            row[lhs] -= 1
            for j, c in terms.items():
                row[j] += c
            rows.append(row)
    count = count_solutions_mod(rows, 2 * m, k) if m else 1
    return count * (k * k) ** d.free_loops
