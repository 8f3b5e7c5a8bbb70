"""Twist matrices over Z_k[t^{+-1}]/(1-t)^2 and the link-homotopy
triviality classifier for pretzel links.

A box of two parallel strands twisted once acts on the pair of colors
entering it by the matrix ``A = [[0, 1], [t, 1-t]]``; a full twist is
``B = A^2``.  Entries are kept in the pair encoding of :mod:`.ring`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .algebra import make_alexander_quandle_mod
from .coloring import count_alexander_colorings, counting_invariant
from .links import DiagramError, PretzelSpec, count_components, pretzel_diagram, unlink
from .ring import AlexPair


@dataclass(frozen=True)
class TwistMatrix:
    """2x2 matrix with AlexPair entries, all sharing one modulus."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("a twist matrix is 2x2")
        if len({e.modulus for r in rows for e in r}) != 1:
            raise ValueError("entries must share a modulus")
        object.__setattr__(self, "rows", rows)

    @property
    def modulus(self):
        return self.rows[0][0].modulus

    @classmethod
    def identity(cls, modulus=0):
        one, zero = AlexPair.one(modulus), AlexPair.zero(modulus)
        return cls(((one, zero), (zero, one)))

    @classmethod
    def half_twist(cls, modulus=0):
        """A = [[0, 1], [t, 1 - t]]."""
        t = AlexPair.t(modulus)
        return cls(((AlexPair.zero(modulus), AlexPair.one(modulus)), (t, 1 - t)))

    @classmethod
    def full_twist(cls, modulus=0):
        """B = A^2, which reduces to [[t, 1 - t], [1 - t, t]]."""
        return cls.half_twist(modulus) @ cls.half_twist(modulus)

    def __matmul__(self, other: "TwistMatrix") -> "TwistMatrix":
        (a, b), (c, d) = self.rows
        (e, f), (g, h) = other.rows
        return TwistMatrix(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))

    def apply(self, x: AlexPair, y: AlexPair):
        """Matrix times the column vector (x, y)."""
        (a, b), (c, d) = self.rows
        return (a * x + b * y, c * x + d * y)

    def is_identity(self) -> bool:
        return self == TwistMatrix.identity(self.modulus)

    def as_tuples(self):
        return tuple(tuple(e.as_tuple() for e in r) for r in self.rows)

    def __str__(self):
        return "[[%s, %s], [%s, %s]]" % tuple(str(e) for r in self.rows for e in r)


def matrix_power(m: TwistMatrix, j: int) -> TwistMatrix:
    """Repeated multiplication, used as the reference for the closed forms."""
    if j < 0:
        raise ValueError("negative power")
    out = TwistMatrix.identity(m.modulus)
    for _ in range(j):
        out = out @ m
    return out


def twist_power(j: int, k: int = 0) -> TwistMatrix:
    """B^j in closed form: diagonal 1 - j(1-t), off-diagonal j(1-t)."""
    if j < 0:
        raise ValueError("j must be non-negative")
    if k == 1 or k < 0:
        raise ValueError("modulus must be 0 or at least 2")
    diag = AlexPair(1, -j, k)
    off = AlexPair(0, j, k)
    return TwistMatrix(((diag, off), (off, diag)))


def odd_twist_power(ki: int, k: int = 0) -> TwistMatrix:
    """A^(2 ki + 1), entries written as polynomials in t and then reduced."""
    t = AlexPair.t(k)
    one = AlexPair.one(k)
    return TwistMatrix(
        (
            (ki - ki * t, one - ki + ki * t),
            (t - ki + ki * t, one - ki * t + ki - t),
        )
    )


def identity_order(k: int) -> int:
    """Smallest positive j with B^j = I over Z_k."""
    if k < 2:
        raise ValueError("full twists have infinite order over the integers")
    j = 1
    while not twist_power(j, k).is_identity():
        j += 1
    return j


# ---------------------------------------------------------------- classifier


class Verdict(str, Enum):
    KNOT_TRIVIAL = "KNOT_TRIVIAL"
    TRIVIAL_LINK = "TRIVIAL_LINK"
    NONTRIVIAL = "NONTRIVIAL"


@dataclass(frozen=True)
class HomotopyClass:
    verdict: Verdict
    reason: str  # branch label of the decision tree
    component_count: int
    even_count: int

    @property
    def trivial(self) -> bool:
        return self.verdict is not Verdict.NONTRIVIAL

    def __str__(self):
        return "%s (branch %s, N=%d, E=%d)" % (self.verdict.value, self.reason, self.component_count, self.even_count)


def _spec(p) -> PretzelSpec:
    if isinstance(p, PretzelSpec):
        return p
    if isinstance(p, int):
        return PretzelSpec((p,))
    return PretzelSpec(tuple(p))


def component_count(p) -> int:
    """Number of components from the parities of the twists alone."""
    p = _spec(p)
    even = sum(1 for v in p.twists if v % 2 == 0)
    if even == 0:
        return 1 if p.n % 2 else 2
    return even


def classify(p) -> HomotopyClass:
    p = _spec(p)
    tw = p.twists
    n = p.n
    E = sum(1 for v in tw if v % 2 == 0)
    N = component_count(p)
    if n == 1:
        # a single box closes up to an unknot
        return HomotopyClass(Verdict.KNOT_TRIVIAL, "knot", N, E)
    if n == 2:
        s = tw[0] + tw[1]
        if s % 2:
            return HomotopyClass(Verdict.KNOT_TRIVIAL, "1(a)", N, E)
        if s == 0:
            return HomotopyClass(Verdict.TRIVIAL_LINK, "1(b)i", N, E)
        return HomotopyClass(Verdict.NONTRIVIAL, "1(b)ii", N, E)
    if E == 0:
        if n % 2 == 0:
            return HomotopyClass(Verdict.NONTRIVIAL, "2(a)i", N, E)
        return HomotopyClass(Verdict.KNOT_TRIVIAL, "2(a)ii", N, E)
    if E == 1:
        return HomotopyClass(Verdict.KNOT_TRIVIAL, "2(b)", N, E)
    if all(v == 0 for v in tw if v % 2 == 0):
        return HomotopyClass(Verdict.TRIVIAL_LINK, "2(c)i", N, E)
    return HomotopyClass(Verdict.NONTRIVIAL, "2(c)ii", N, E)


def in_kernel_of_q(p) -> bool:
    """True iff the pretzel link is link-homotopic to an unlink (or is a knot)."""
    return classify(p).trivial


def kernel_case_list(p) -> bool:
    """The kernel described case by case, kept separate from the decision
    tree so the two can be compared."""
    p = _spec(p)
    tw, n = p.twists, p.n
    evens = [v for v in tw if v % 2 == 0]
    if n == 1:
        return True
    if n == 2:
        return (tw[0] + tw[1]) % 2 == 1 or tw[0] + tw[1] == 0
    if n % 2 == 1 and not evens:
        return True
    if len(evens) == 1:
        return True
    return len(evens) >= 2 and all(v == 0 for v in evens)


# ---------------------------------------------------------------- certificates


@dataclass(frozen=True)
class Certificate:
    modulus: int  # the quandle is Z_k[t^{+-1}]/(1-t)^2
    link_count: int
    unlink_count: int

    @property
    def quandle_size(self):
        return self.modulus**2


def certificate_schedule(p, cap: int = 16):
    """Moduli to try, in order: for every nonzero even twist the smallest
    k >= 2 not dividing |p_i|/2, then 2..cap for whatever is left."""
    p = _spec(p)
    out = []
    for v in p.twists:
        if v % 2 == 0 and v:
            half = abs(v) // 2
            k = 2
            while half % k == 0:
                k += 1
            if k not in out:
                out.append(k)
    for k in range(2, cap + 1):
        if k not in out:
            out.append(k)
    return out


def distinguishing_certificate(p, cap: int = 16, brute_force: bool = False) -> Optional[Certificate]:
    """Find k such that the Alexander quandle of order k^2 colors the pretzel
    link differently from the unlink with the same number of components.

    Counts come from the linear system over Z_k unless ``brute_force`` asks
    for the backtracking solver.  Returns None if the schedule runs out."""
    p = _spec(p)
    verdict = classify(p)
    if verdict.trivial or verdict.component_count < 2:
        raise DiagramError("%s is not a nontrivial link; no certificate applies" % p)
    d = pretzel_diagram(p)
    N = count_components(d)
    for k in certificate_schedule(p, cap):
        if brute_force:
            X = make_alexander_quandle_mod(k)
            got = counting_invariant(d, X)
            base = counting_invariant(unlink(N), X)
        else:
            got = count_alexander_colorings(d, k)
            base = (k * k) ** N
        if got != base:
            return Certificate(k, got, base)
    return None
