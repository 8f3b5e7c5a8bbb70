"""Boltzmann weights and the cocycle-enhanced counting invariant.

The weight of a coloring is the sum over crossings of ``sign * phi(x, y)``
where (x, y) are the colors in the positive-form input roles of the crossing
(under-in, over-in for a positive crossing; under-out, over-out for a
negative one).
"""

from __future__ import annotations

import csv
import io
import re
from collections import Counter
from dataclasses import dataclass, field

from .algebra import FiniteBiquandle, orbit_decomposition
from .cohomology import Cochain2
from .coloring import Coloring, crossing_roles, iter_color_vectors
from .links import LinkDiagram, enumerate_orientations


@dataclass(frozen=True)
class InvariantPolynomial:
    """Multiset of Boltzmann weights, written as sum of c * u^b."""

    modulus: int
    counts: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for b, c in dict(self.counts).items():
            if self.modulus:
                b %= self.modulus
            if c < 0:
                raise ValueError("multiplicities must be non-negative")
            if c:
                clean[b] = clean.get(b, 0) + c
        object.__setattr__(self, "counts", dict(sorted(clean.items())))

    def __eq__(self, other):
        if isinstance(other, str):
            return str(self) == other
        if not isinstance(other, InvariantPolynomial):
            return NotImplemented
        return self.modulus == other.modulus and self.counts == other.counts

    def __hash__(self):
        return hash((self.modulus, tuple(self.counts.items())))

    def total(self) -> int:
        """Value at u = 1, i.e. the number of colorings."""
        return sum(self.counts.values())

    def multiset(self):
        return sorted(Counter(self.counts).elements())

    def scaled(self, factor: int) -> "InvariantPolynomial":
        return InvariantPolynomial(self.modulus, {b: c * factor for b, c in self.counts.items()})

    def __str__(self):
        if not self.counts:
            return "0"
        terms = []
        for b in sorted(self.counts, reverse=True):
            c = self.counts[b]
            if b == 0:
                terms.append(str(c))
                continue
            mono = "u" if b == 1 else "u^%d" % b
            terms.append(mono if c == 1 else "%d%s" % (c, mono))
        return "+".join(terms).replace("+-", "-")

    def __repr__(self):
        return "InvariantPolynomial(%s mod %d)" % (self, self.modulus)

    @classmethod
    def parse(cls, text: str, modulus: int) -> "InvariantPolynomial":
        """Inverse of str(): accepts e.g. ``2u^2+17`` or ``48u + 16``."""
        counts = {}
        s = text.replace(" ", "").replace("u²", "u^2")
        if not s or s == "0":
            return cls(modulus, {})
        for term in s.split("+"):
            m = re.fullmatch(r"(\d*)(u(?:\^(\d+))?)?", term)
            if not m or not term:
                raise ValueError("bad polynomial term %r" % term)
            if m.group(2):
                c = int(m.group(1)) if m.group(1) else 1
                b = int(m.group(3)) if m.group(3) else 1
            else:
                c, b = int(m.group(1)), 0
            counts[b] = counts.get(b, 0) + c
        return cls(modulus, counts)


def _weight(roles, colors, phi: Cochain2, signs) -> int:
    total = 0
    for (a, b, _, _), sign in zip(roles, signs):
        total += sign * phi(colors[a], colors[b])
    return total % phi.modulus


def boltzmann_weight(d: LinkDiagram, f: Coloring, phi: Cochain2) -> int:
    roles = crossing_roles(d)
    signs = [c.sign for c in d.crossings]
    return _weight(roles, f.colors, phi, signs)


def cocycle_invariant(d: LinkDiagram, X: FiniteBiquandle, phi: Cochain2) -> InvariantPolynomial:
    """Phi_X^phi(d): the Boltzmann weights of all X-colorings of d."""
    roles = crossing_roles(d)
    signs = [c.sign for c in d.crossings]
    self_crossings = [i for i in range(len(d.crossings)) if d.is_self_crossing(i)]
    orbit_of = orbit_decomposition(X).orbit_of
    counts = Counter()
    for colors in iter_color_vectors(d, X):
        for i in self_crossings:
            a, b = roles[i][0], roles[i][1]
            # colors along one component never leave an orbit
            assert orbit_of[colors[a]] == orbit_of[colors[b]], "coloring crosses orbits on a component"
        counts[_weight(roles, colors, phi, signs)] += 1
    factor = len(X) ** d.free_loops
    return InvariantPolynomial(phi.modulus, {b: c * factor for b, c in counts.items()})


def orientation_values(d: LinkDiagram, X: FiniteBiquandle, phis):
    """For every orientation variant of d, the tuple of invariants for the
    given cocycles."""
    return [tuple(cocycle_invariant(v, X, phi) for phi in phis) for v in enumerate_orientations(d)]


@dataclass
class InvariantTable:
    links: list  # names
    cocycles: list  # names
    cells: dict  # (link, cocycle) -> InvariantPolynomial

    def to_text(self) -> str:
        if not self.links:
            return ""
        head = ["L"] + list(self.links)
        rows = [head]
        for cname in self.cocycles:
            rows.append([cname] + [str(self.cells[(l, cname)]) for l in self.links])
        widths = [max(len(r[i]) for r in rows) for i in range(len(head))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["link", "cocycle", "weights", "polynomial"])
        for l in self.links:
            for cname in self.cocycles:
                p = self.cells[(l, cname)]
                pairs = " ".join("%d:%d" % (b, c) for b, c in p.counts.items())
                w.writerow([l, cname, pairs, str(p)])
        return buf.getvalue()


def invariant_table(links, X: FiniteBiquandle, cocycles) -> InvariantTable:
    """``links`` and ``cocycles`` are sequences of (name, object) pairs; each
    diagram is used with the orientation it carries."""
    cells = {}
    for lname, d in links:
        for cname, phi in cocycles:
            cells[(lname, cname)] = cocycle_invariant(d, X, phi)
    return InvariantTable([l for l, _ in links], [c for c, _ in cocycles], cells)
