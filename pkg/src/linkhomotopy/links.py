"""Oriented link diagrams as signed crossings over semiarcs.

A crossing records the four semiarcs meeting at it in the role order
``(under_in, over_in, under_out, over_out)`` together with its sign.  Semiarcs
are the integers ``0..m-1``; crossing-free components are kept as a count of
free loops.

Text grammars:

* PD codes ``PD[X(a,b,c,d), ...]`` (``X[...]`` is accepted too), each
  quadruple counterclockwise from the incoming under-edge; ``U(k)`` adds a
  crossing-free loop.
* braid words ``BR[k; s1 s1 -s2]``.
* pretzel links ``P(p1,...,pn)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import NamedTuple, Sequence


class DiagramError(ValueError):
    pass


class PDParseError(DiagramError):
    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at offset %d)" % (message, position)
        super().__init__(message)
        self.position = position


class Crossing(NamedTuple):
    sign: int
    under_in: int
    over_in: int
    under_out: int
    over_out: int

    @property
    def arcs(self):
        return (self.under_in, self.over_in, self.under_out, self.over_out)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple
    free_loops: int = 0
    name: str = ""

    def __post_init__(self):
        xs = tuple(Crossing(*c) for c in self.crossings)
        object.__setattr__(self, "crossings", xs)
        if self.free_loops < 0:
            raise DiagramError("negative free loop count")
        m = 2 * len(xs)
        ins = sorted(a for c in xs for a in (c.under_in, c.over_in))
        outs = sorted(a for c in xs for a in (c.under_out, c.over_out))
        if ins != list(range(m)) or outs != list(range(m)):
            raise DiagramError(
                "each semiarc 0..%d must occur once as an input and once as an output" % (m - 1)
            )
        for c in xs:
            if c.sign not in (1, -1):
                raise DiagramError("crossing sign must be +1 or -1")

    def __eq__(self, other):
        if not isinstance(other, LinkDiagram):
            return NotImplemented
        return self.crossings == other.crossings and self.free_loops == other.free_loops

    def __hash__(self):
        return hash((self.crossings, self.free_loops))

    @property
    def semiarc_count(self):
        return 2 * len(self.crossings)

    @cached_property
    def successor(self):
        """Semiarc following each semiarc along its strand."""
        nxt = [0] * self.semiarc_count
        for c in self.crossings:
            nxt[c.under_in] = c.under_out
            nxt[c.over_in] = c.over_out
        return tuple(nxt)

    @cached_property
    def strand_cycles(self):
        """Components that contain crossings, as lists of semiarcs in order,
        each starting from its smallest semiarc."""
        seen = [False] * self.semiarc_count
        cycles = []
        for start in range(self.semiarc_count):
            if seen[start]:
                continue
            cyc, s = [], start
            while not seen[s]:
                seen[s] = True
                cyc.append(s)
                s = self.successor[s]
            cycles.append(cyc)
        return tuple(tuple(c) for c in cycles)

    @cached_property
    def component_of(self):
        comp = [0] * self.semiarc_count
        for i, cyc in enumerate(self.strand_cycles):
            for s in cyc:
                comp[s] = i
        return tuple(comp)

    @property
    def component_count(self):
        return len(self.strand_cycles) + self.free_loops

    def crossing_components(self, i):
        c = self.crossings[i]
        return self.component_of[c.under_in], self.component_of[c.over_in]

    def is_self_crossing(self, i):
        a, b = self.crossing_components(i)
        return a == b

    def writhe(self):
        return sum(c.sign for c in self.crossings)

    def linking_number(self, i, j):
        total = 0
        for c in self.crossings:
            if {self.component_of[c.under_in], self.component_of[c.over_in]} == {i, j} and i != j:
                total += c.sign
        return total // 2

    def relabeled(self) -> "LinkDiagram":
        """Canonical relabelling: semiarcs numbered along the strand cycles in
        order, crossings sorted by their new labels."""
        order = [s for cyc in self.strand_cycles for s in cyc]
        new = {s: i for i, s in enumerate(order)}
        xs = sorted(
            Crossing(c.sign, *(new[a] for a in c.arcs)) for c in self.crossings
        )
        return LinkDiagram(tuple(xs), self.free_loops, self.name)

    def __repr__(self):
        label = " %s" % self.name if self.name else ""
        return "<LinkDiagram%s: %d crossings, %d components>" % (
            label, len(self.crossings), self.component_count)


def count_components(d: LinkDiagram) -> int:
    return d.component_count


# ---------------------------------------------------------------- transformations


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Switch over and under at every crossing."""
    xs = [Crossing(-c.sign, c.over_in, c.under_in, c.over_out, c.under_out) for c in d.crossings]
    return LinkDiagram(tuple(xs), d.free_loops, d.name + "-mirror" if d.name else "")


def self_crossing_change(d: LinkDiagram, index: int) -> LinkDiagram:
    if not d.is_self_crossing(index):
        raise DiagramError("crossing %d joins two different components" % index)
    xs = list(d.crossings)
    c = xs[index]
    xs[index] = Crossing(-c.sign, c.over_in, c.under_in, c.over_out, c.under_out)
    return LinkDiagram(tuple(xs), d.free_loops, d.name)


def reverse_component(d: LinkDiagram, component: int) -> LinkDiagram:
    """Reverse the orientation of one component.  Free loops are unaffected
    by orientation, so only strand-cycle ids are accepted."""
    if not 0 <= component < len(d.strand_cycles):
        if component < d.component_count:
            return d
        raise DiagramError("no component %d" % component)
    comp = d.component_of
    xs = []
    for c in d.crossings:
        ui, oi, uo, oo = c.arcs
        sign = c.sign
        if comp[ui] == component:
            ui, uo = uo, ui
            sign = -sign
        if comp[oi] == component:
            oi, oo = oo, oi
            sign = -sign
        xs.append(Crossing(sign, ui, oi, uo, oo))
    return LinkDiagram(tuple(xs), d.free_loops, d.name)


def enumerate_orientations(d: LinkDiagram):
    """All 2**c orientation variants, c = number of components with crossings.

    The first yielded diagram is ``d`` itself; bit i of the variant index
    reverses component i."""
    cycles = len(d.strand_cycles)
    for mask in range(2 ** cycles):
        out = d
        for i in range(cycles):
            if mask >> i & 1:
                out = reverse_component(out, i)
        yield out


# ---------------------------------------------------------------- planar codes


def _orient(quads, free_loops=0, strict=True, name=""):
    """Build a LinkDiagram from counterclockwise edge quadruples whose
    positions 0 and 2 are the under-strand.

    With ``strict`` the under-strand must run 0 -> 2 (PD convention) and
    strands that only pass over are oriented by label succession; otherwise
    each component is oriented by traversal from its first edge and quads are
    rotated as needed.
    """
    occurrences = {}
    for ci, q in enumerate(quads):
        for pos, label in enumerate(q):
            occurrences.setdefault(label, []).append((ci, pos))
    for label, occ in occurrences.items():
        if len(occ) != 2:
            raise PDParseError("edge label %s appears %d times, expected 2" % (label, len(occ)))

    def other_end(label, here):
        a, b = occurrences[label]
        return b if a == here else a

    # each component is a cyclic sequence of (crossing, entry position)
    visited = set()
    direction = {}  # (crossing, pos) -> True if the strand enters the crossing here
    labels_sorted = sorted(occurrences)
    for start in labels_sorted:
        if any((occ in visited) for occ in occurrences[start]):
            continue
        # walk: enter at one occurrence of `start`
        walk = []
        entry = occurrences[start][1]
        while entry not in visited:
            ci, pos = entry
            exit_ = (ci, (pos + 2) % 4)
            visited.add(entry)
            visited.add(exit_)
            walk.append((entry, exit_))
            nxt_label = quads[ci][(pos + 2) % 4]
            entry = other_end(nxt_label, exit_)
        votes = set()
        for (ci, pos), _ in walk:
            if pos in (0, 2):
                votes.add(pos == 0)
        if strict:
            if len(votes) > 1:
                raise PDParseError("inconsistent orientation along the component through edge %s" % start)
            if votes:
                forward = votes.pop()
            else:
                forward = _succession_direction(quads, walk)
        else:
            forward = True
        for entry, exit_ in walk:
            direction[entry if forward else exit_] = True
            direction[exit_ if forward else entry] = False

    relabel = {lab: i for i, lab in enumerate(labels_sorted)}
    xs = []
    for ci, q in enumerate(quads):
        if not direction[(ci, 0)]:
            if strict:
                raise PDParseError("crossing %d: position 0 must be the incoming under-edge" % (ci + 1))
            q = (q[2], q[3], q[0], q[1])
            rotated = {0: 2, 1: 3, 2: 0, 3: 1}
        else:
            rotated = {0: 0, 1: 1, 2: 2, 3: 3}
        d_in = direction[(ci, rotated[3])]
        a, b, c, dd = (relabel[v] for v in q)
        if d_in:
            xs.append(Crossing(1, a, dd, c, b))
        else:
            xs.append(Crossing(-1, a, b, c, dd))
    return LinkDiagram(tuple(xs), free_loops, name)


def _succession_direction(quads, walk):
    """Orientation of an over-only component from label succession: the walk
    is forward if its labels mostly increase by one."""
    labels = [quads[ci][(pos + 2) % 4] for (ci, pos), _ in walk]
    firsts = [quads[ci][pos] for (ci, pos), _ in walk]
    up = sum(1 for a, b in zip(firsts, labels) if b == a + 1)
    down = sum(1 for a, b in zip(firsts, labels) if a == b + 1)
    if up != down:
        return up > down
    # a two-edge loop reads the same both ways: at the first-listed crossing
    # the strand enters through its smaller label
    ci, pos = min(entry for entry, _ in walk)
    return firsts[[e for e, _ in walk].index((ci, pos))] < labels[[e for e, _ in walk].index((ci, pos))]


_PD_TOKEN = re.compile(r"\s*([XU])\s*[\(\[]([^\)\]]*)[\)\]]\s*(,|$)")


def parse_pd(text: str, name: str = "") -> LinkDiagram:
    """Parse ``PD[X(a,b,c,d), ..., U(k)]``."""
    src = text.strip()
    m = re.match(r"^PD\s*[\[\(](.*)[\]\)]$", src, re.S)
    if not m:
        raise PDParseError("expected PD[...]", 0)
    body, offset = m.group(1), m.start(1)
    quads, loops = [], 0
    pos = 0
    if body.strip():
        while pos < len(body):
            tok = _PD_TOKEN.match(body, pos)
            if not tok:
                raise PDParseError("malformed crossing", offset + pos)
            kind, args = tok.group(1), tok.group(2)
            try:
                vals = [int(v) for v in args.split(",") if v.strip()]
            except ValueError:
                raise PDParseError("non-integer label", offset + tok.start(2)) from None
            if kind == "X":
                if len(vals) != 4:
                    raise PDParseError("X needs 4 labels, got %d" % len(vals), offset + tok.start(2))
                quads.append(tuple(vals))
            else:
                if len(vals) != 1:
                    raise PDParseError("U takes one label", offset + tok.start(2))
                loops += 1
            pos = tok.end()
            if tok.group(3) == "" and pos < len(body) and body[pos:].strip():
                raise PDParseError("missing comma", offset + pos)
    if any(v <= 0 for q in quads for v in q):
        raise PDParseError("edge labels must be positive integers")
    return _orient(quads, loops, strict=True, name=name)


def emit_pd(d: LinkDiagram) -> str:
    """PD text with edge labels numbered consecutively along each component."""
    d = d.relabeled()
    order = list(d.crossings)
    # over-only components with two semiarcs s -> s+1 -> s: the crossing
    # where s enters must be listed first (see _succession_direction)
    under_comps = {d.component_of[c.under_in] for c in d.crossings}
    for cyc in d.strand_cycles:
        if len(cyc) != 2 or d.component_of[cyc[0]] in under_comps:
            continue
        lo = min(cyc)
        enter = next(i for i, c in enumerate(order) if c.over_in == lo)
        leave = next(i for i, c in enumerate(order) if c.over_out == lo)
        if leave < enter:
            order[enter], order[leave] = order[leave], order[enter]
    parts = []
    for c in order:
        if c.sign > 0:
            q = (c.under_in, c.over_out, c.under_out, c.over_in)
        else:
            q = (c.under_in, c.over_in, c.under_out, c.over_out)
        parts.append("X(%s)" % ",".join(str(v + 1) for v in q))
    base = d.semiarc_count
    parts += ["U(%d)" % (base + i + 1) for i in range(d.free_loops)]
    return "PD[%s]" % ", ".join(parts)


# ---------------------------------------------------------------- braids


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(v) for v in self.letters))
        if self.strands < 1:
            raise DiagramError("a braid needs at least one strand")
        for v in self.letters:
            if not 1 <= abs(v) < self.strands:
                raise DiagramError("generator %d out of range for %d strands" % (v, self.strands))

    def permutation(self):
        """Position where the strand starting at each top position ends."""
        pos = list(range(self.strands))  # pos[p] = starting strand at position p
        for v in self.letters:
            i = abs(v) - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        end = [0] * self.strands
        for p, s in enumerate(pos):
            end[s] = p
        return end

    def __str__(self):
        letters = " ".join(("s%d" % v) if v > 0 else ("-s%d" % -v) for v in self.letters)
        return "BR[%d; %s]" % (self.strands, letters)


def parse_braid(text: str) -> BraidWord:
    m = re.match(r"^\s*BR\s*\[\s*(\d+)\s*;([^\]]*)\]\s*$", text)
    if not m:
        raise DiagramError("expected BR[k; s1 -s2 ...], got %r" % text)
    letters = []
    for tok in m.group(2).split():
        t = re.match(r"^(-?)s(\d+)$", tok)
        if not t:
            raise DiagramError("bad braid letter %r" % tok)
        letters.append(-int(t.group(2)) if t.group(1) else int(t.group(2)))
    return BraidWord(int(m.group(1)), tuple(letters))


def braid_closure(w: BraidWord, name: str = "") -> LinkDiagram:
    """Closure of a braid read top to bottom; sigma_i is a positive crossing
    whose over-strand moves from position i+1 to position i."""
    k = w.strands
    current = list(range(k))  # semiarc currently at each position
    nxt = k
    xs = []
    touched = set()
    for v in w.letters:
        i = abs(v) - 1
        left, right = current[i], current[i + 1]
        new_left, new_right = nxt, nxt + 1
        nxt += 2
        touched.update((i, i + 1))
        if v > 0:
            # under: left -> right position; over: right -> left position
            xs.append([1, left, right, new_right, new_left])
        else:
            # over: left -> right position; under: right -> left position
            xs.append([-1, right, left, new_left, new_right])
        current[i], current[i + 1] = new_left, new_right

    # glue the bottom semiarc at each position to the top one
    alias = {current[p]: p for p in range(k)}
    loops = sum(1 for p in range(k) if p not in touched)

    def resolve(a):
        return alias.get(a, a)

    xs = [[c[0]] + [resolve(a) for a in c[1:]] for c in xs]
    used = sorted({a for c in xs for a in c[1:]})
    renum = {a: i for i, a in enumerate(used)}
    xs = [Crossing(c[0], *(renum[a] for a in c[1:])) for c in xs]
    return LinkDiagram(tuple(xs), loops, name or str(w))


# ---------------------------------------------------------------- pretzels


@dataclass(frozen=True)
class PretzelSpec:
    twists: tuple

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(p) for p in self.twists))
        if len(self.twists) < 1:
            raise DiagramError("a pretzel link needs at least one twist box")

    @property
    def n(self):
        return len(self.twists)

    def __str__(self):
        return "P(%s)" % ",".join(str(p) for p in self.twists)


def parse_pretzel(text: str) -> PretzelSpec:
    m = re.match(r"^\s*P\s*\(([^\)]*)\)\s*$", text)
    if not m:
        raise DiagramError("expected P(p1,...,pn), got %r" % text)
    try:
        vals = [int(v) for v in m.group(1).split(",") if v.strip()]
    except ValueError:
        raise DiagramError("pretzel twists must be integers: %r" % text) from None
    return PretzelSpec(tuple(vals))


def pretzel_diagram(p: PretzelSpec | Sequence[int]) -> LinkDiagram:
    """n vertical twist boxes side by side, box i holding |p_i| crossings of
    the 2-strand braid sigma^{p_i}, closed by nested arcs above and below."""
    if not isinstance(p, PretzelSpec):
        p = PretzelSpec(tuple(p))
    links = []  # pairs of point names that are joined by a plain arc
    quads = []  # crossings as ccw point names, under-strand at 0 and 2

    for i, twist in enumerate(p.twists):
        above = (("TL", i), ("TR", i))
        for j in range(abs(twist)):
            nw, ne, sw, se = (("c", i, j, s) for s in ("NW", "NE", "SW", "SE"))
            links += [(above[0], nw), (above[1], ne)]
            if twist > 0:
                quads.append((nw, sw, se, ne))
            else:
                quads.append((sw, se, ne, nw))
            above = (sw, se)
        links += [(above[0], ("BL", i)), (above[1], ("BR", i))]

    n = p.n
    for i in range(n - 1):
        links.append((("TR", i), ("TL", i + 1)))
        links.append((("BR", i), ("BL", i + 1)))
    links.append((("TL", 0), ("TR", n - 1)))
    links.append((("BL", 0), ("BR", n - 1)))

    # each edge is a chain of plain arcs between two crossing points
    adj = {}
    for a, b in links:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    crossing_points = {pt for q in quads for pt in q}
    label = {}
    seen = set()
    next_label = 1
    loops = 0
    for pt in [pt for q in quads for pt in q] + sorted(adj, key=repr):
        if pt in seen:
            continue
        comp, stack = [], [pt]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            comp.append(x)
            stack.extend(adj.get(x, ()))
        ends = [x for x in comp if x in crossing_points]
        if not ends:
            loops += 1
            continue
        for x in ends:
            label[x] = next_label
        next_label += 1
    coded = [tuple(label[pt] for pt in q) for q in quads]
    d = _orient(coded, loops, strict=False, name=str(p))
    return d.relabeled()


def unlink(components: int) -> LinkDiagram:
    return LinkDiagram((), components, "U%d" % components)


def all_pretzels(max_n: int, max_abs: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        for tw in product(range(-max_abs, max_abs + 1), repeat=n):
            yield PretzelSpec(tw)
