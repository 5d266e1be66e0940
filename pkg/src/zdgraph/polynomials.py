"""Polynomials over a finite commutative ring, and the completeness
predicate for extended zero-divisor graphs of polynomial extensions.

A polynomial over R[x] is a zero divisor exactly when one nonzero ring
element annihilates every coefficient (McCoy), so zero-divisor tests reduce
to annihilator computations in the base ring and never materialize R[x].

The completeness question for the extended zero-divisor graph over
R[x_1, ..., x_n] reduces to the single-variable case and is decided by a
base-ring predicate; `find_nonadjacent_zero_divisors` complements the
predicate with an explicit witness search that can refute completeness.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass

from .rings import FiniteRing


class Poly:
    """Coefficient vector over a FiniteRing, ascending degree, normalized.

    The zero polynomial has an empty coefficient tuple and degree None.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: FiniteRing, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, ring: FiniteRing, c: int) -> Poly:
        return cls(ring, (c,))

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_ring(self, other: Poly) -> None:
        if self.ring is not other.ring:
            raise ValueError("polynomials over different rings")

    def __add__(self, other: Poly) -> Poly:
        self._check_ring(other)
        ring = self.ring
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ring.add(out[i], c)
        return Poly(ring, out)

    def __neg__(self) -> Poly:
        return Poly(self.ring, [self.ring.neg(c) for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._check_ring(other)
        ring = self.ring
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(ring)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = ring.add(out[i + j], ring.mul(ca, cb))
        return Poly(ring, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.ring is other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((id(self.ring), self.coeffs))

    def is_zero_divisor(self) -> bool:
        """True iff some nonzero ring element annihilates every coefficient.

        The zero polynomial is a zero divisor whenever the ring has more than
        one element (its empty coefficient set is annihilated by everything).
        """
        return len(self.ring.annihilator(set(self.coeffs))) > 1

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if power == 0:
                terms.append(str(c))
            elif power == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{power}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self.ring.expr()}: {self})"

    _TERM = re.compile(r"^(?:(\d+)\*?)?(x(?:\^(\d+))?)?$")

    @classmethod
    def parse(cls, ring: FiniteRing, text: str) -> Poly:
        """Parse "c0 + c1*x + c2*x^2" with coefficients as element indices."""
        acc: dict[int, int] = {}
        for raw in text.split("+"):
            term = raw.replace(" ", "")
            m = cls._TERM.match(term)
            if not m or (m.group(1) is None and m.group(2) is None):
                raise ValueError(f"bad polynomial term {raw.strip()!r}")
            coeff = 1 if m.group(1) is None else int(m.group(1))
            if coeff >= ring.order:
                raise ValueError(f"coefficient {coeff} outside ring of order {ring.order}")
            power = 0
            if m.group(2) is not None:
                power = 1 if m.group(3) is None else int(m.group(3))
            acc[power] = ring.add(acc.get(power, 0), coeff)
        top = max(acc)
        return cls(ring, [acc.get(i, 0) for i in range(top + 1)])


# -- base-ring predicates ------------------------------------------------------


def zero_divisor_ideal_has_nonzero_annihilator(ring: FiniteRing) -> bool:
    """Does the ideal generated by all zero divisors have a nonzero annihilator?

    For a finite ring this single test settles the same question for every
    ideal generated by finitely many zero divisors: all of them sit inside
    the ideal generated by Z(R), and annihilators only grow when the ideal
    shrinks.
    """
    ideal = ring.ideal_generated_by(ring.zero_divisors)
    return len(ring.annihilator(ideal)) > 1


def poly_zero_divisors_form_ideal(ring: FiniteRing) -> bool:
    """Do the zero divisors of R[x] form an ideal of R[x]?

    Equivalent, for finite R, to every finitely generated zero-divisor ideal
    of R having a nonzero annihilator; decided on the base ring without
    touching R[x].
    """
    return zero_divisor_ideal_has_nonzero_annihilator(ring)


def poly_graph_is_complete(ring: FiniteRing) -> bool:
    """Is the extended zero-divisor graph of R[x_1, ..., x_n] complete?

    Holds (for every n >= 1; the multivariate case reduces to one variable)
    exactly when R embeds in a product of two integral domains or the zero
    divisors of R generate an ideal with nonzero annihilator.
    """
    return ring.embeds_in_two_integral_domains or zero_divisor_ideal_has_nonzero_annihilator(ring)


# -- witness search ------------------------------------------------------------


@dataclass
class WitnessSearch:
    """Result of a non-adjacency search over zero-divisor polynomials.

    A pair (p, q) proves the graph is not complete: both are nonzero zero
    divisors, pq != 0 and p + q is not a zero divisor.  `pair is None` is
    conclusive only when `exhaustive` is True.
    """

    pair: tuple[Poly, Poly] | None
    exhaustive: bool


def _annihilator_masks(ring: FiniteRing) -> list[int]:
    # masks[x] has bit r set iff r*x == 0; bit 0 is set everywhere
    n = ring.order
    masks = [0] * n
    for r in range(n):
        bit = 1 << r
        for x in range(n):
            if ring.mul(r, x) == 0:
                masks[x] |= bit
    return masks


def _coeff_tuples(ring: FiniteRing, degree_bound: int):
    # nonzero polynomials ordered by degree, then coefficient tuple
    for deg in range(degree_bound + 1):
        for coeffs in itertools.product(ring.elements(), repeat=deg + 1):
            if coeffs[-1] == 0:
                continue
            yield coeffs


def find_nonadjacent_zero_divisors(
    ring: FiniteRing,
    degree_bound: int,
    *,
    budget: int = 200_000,
    seed: int = 0,
) -> WitnessSearch:
    """Search for two non-adjacent vertices of the extended graph of R[x].

    Candidates are distinct nonzero zero-divisor polynomials of degree at
    most `degree_bound`.  When the raw coefficient space (order to the power
    degree_bound + 1) fits within `budget` the search is exhaustive in
    lexicographic order (degree first, then coefficient tuple) and returns
    the first witness; otherwise `budget` seeded random pairs are sampled
    and a miss is inconclusive.
    """
    if degree_bound < 0:
        raise ValueError("degree bound must be >= 0")
    n = ring.order
    if n == 1:
        return WitnessSearch(None, True)
    masks = _annihilator_masks(ring)
    zero_only = 1  # annihilator mask containing just the zero element

    def common_ann_nonzero(coeffs) -> bool:
        acc = -1
        for c in coeffs:
            acc &= masks[c]
        return acc & ~zero_only != 0

    def witness(pc, qc) -> bool:
        # non-adjacent: sum not a zero divisor AND product nonzero
        s = [ring.add(a, b) for a, b in itertools.zip_longest(pc, qc, fillvalue=0)]
        if common_ann_nonzero(s):
            return False
        return not (Poly(ring, pc) * Poly(ring, qc)).is_zero

    if n ** (degree_bound + 1) <= budget:
        candidates = [c for c in _coeff_tuples(ring, degree_bound) if common_ann_nonzero(c)]
        for i, pc in enumerate(candidates):
            for qc in candidates[i + 1 :]:
                if witness(pc, qc):
                    return WitnessSearch((Poly(ring, pc), Poly(ring, qc)), True)
        return WitnessSearch(None, True)

    rng = random.Random(seed)

    def draw():
        deg = rng.randrange(degree_bound + 1)
        return tuple(rng.randrange(n) for _ in range(deg + 1))

    for _ in range(budget):
        pc, qc = draw(), draw()
        if not pc or pc[-1] == 0 or not qc or qc[-1] == 0 or pc == qc:
            continue
        if not common_ann_nonzero(pc) or not common_ann_nonzero(qc):
            continue
        if witness(pc, qc):
            return WitnessSearch((Poly(ring, pc), Poly(ring, qc)), False)
    return WitnessSearch(None, False)
