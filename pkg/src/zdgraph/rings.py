"""Finite commutative unital rings with dense integer element encoding.

Every element of a ring of order n is the index 0..n-1 into the ring's
canonical enumeration; index 0 is always the additive identity.  Arithmetic
is structural per ring kind (no order-squared tables, except a small cached
multiplication table for quotient rings), so rings of a few thousand
elements stay cheap.  Derived sets (units, zero divisors, idempotents,
nilradical, local factors) are computed lazily and cached as immutable
values; a ring never mutates after construction, so instances can be shared
freely across threads or processes.

Supported kinds:

  ZnRing(n)                  integers mod n
  QuotientRing(m, f)         Z_m[x]/(f) with f monic of degree >= 1
  ProductRing(factors)       componentwise product, mixed-radix encoding
  IdealizationRing(n, m)     pairs Z_n x Z_m with (r,x)(s,y) = (rs, ry+sx),
                             requires m | n
  BooleanRing(k)             k-fold power of Z_2 on bitmasks (xor / and)

`make_ring` builds any of these from a parsed or textual ring expression
and enforces a configurable order cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .exprs import (
    Atom,
    BooleanAtom,
    IdealizationAtom,
    QuotientAtom,
    RingExpr,
    ZnAtom,
    normalize_quotient_poly,
    parse_ring_expr,
)

DEFAULT_ORDER_CAP = 10_000

_QUOTIENT_TABLE_LIMIT = 128  # orders up to this get a cached mul table


class OrderCapError(ValueError):
    """Requested ring order exceeds the configured cap."""


@dataclass(frozen=True)
class LocalFactor:
    """One primitive factor of a ring: its idempotent generator and order."""

    idempotent: int
    order: int


class FiniteRing:
    """Base class; subclasses provide order, one and the structural ops."""

    order: int
    one: int
    zero = 0

    # -- structural arithmetic -------------------------------------------

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def power(self, a: int, k: int) -> int:
        """a**k by square and multiply; power(a, 0) is the identity."""
        result = self.one
        base = a
        while k > 0:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def elements(self) -> range:
        return range(self.order)

    def to_expr(self) -> RingExpr:
        raise NotImplementedError

    def expr(self) -> str:
        """Canonical expression string; parsing it rebuilds an equal ring."""
        return str(self.to_expr())

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.expr()} order={self.order}>"

    # -- cached derived sets ----------------------------------------------

    @cached_property
    def units(self) -> frozenset[int]:
        return self._compute_units()

    @cached_property
    def zero_divisors(self) -> frozenset[int]:
        """Elements x with xy = 0 for some y != 0 (contains 0 when order > 1)."""
        return self._compute_zero_divisors()

    @cached_property
    def nonzero_zero_divisors(self) -> frozenset[int]:
        return self.zero_divisors - {0}

    @cached_property
    def idempotents(self) -> frozenset[int]:
        return frozenset(x for x in self.elements() if self.mul(x, x) == x)

    @cached_property
    def nontrivial_idempotents(self) -> frozenset[int]:
        return self.idempotents - {0, self.one}

    @cached_property
    def nilradical(self) -> frozenset[int]:
        # x nilpotent iff x**order == 0: the nilpotency index never exceeds
        # the ring order, so one fast power per element suffices.
        n = self.order
        return frozenset(x for x in self.elements() if self.power(x, n) == 0)

    def _compute_units(self) -> frozenset[int]:
        one = self.one
        out = set()
        for a in self.elements():
            if any(self.mul(a, b) == one for b in self.elements()):
                out.add(a)
        return frozenset(out)

    def _compute_zero_divisors(self) -> frozenset[int]:
        out = set()
        for a in self.elements():
            if any(self.mul(a, b) == 0 for b in range(1, self.order)):
                out.add(a)
        return frozenset(out)

    # -- predicates --------------------------------------------------------

    def is_unit(self, x: int) -> bool:
        return x in self.units

    def is_zero_divisor(self, x: int) -> bool:
        return x in self.zero_divisors

    @cached_property
    def is_boolean(self) -> bool:
        """True iff every element is idempotent."""
        return len(self.idempotents) == self.order

    @cached_property
    def is_reduced(self) -> bool:
        return self.nilradical == frozenset({0})

    @cached_property
    def is_indecomposable(self) -> bool:
        """True iff the ring is not a product of two nonzero rings."""
        return not self.nontrivial_idempotents

    @cached_property
    def zero_divisors_form_ideal(self) -> bool:
        """True iff the zero divisors are closed under addition.

        Closure under multiplication by arbitrary ring elements is automatic
        (xy = 0 with y != 0 gives (rx)y = 0), so additive closure is the only
        condition that can fail.
        """
        zs = sorted(self.zero_divisors)
        zset = self.zero_divisors
        for i, x in enumerate(zs):
            for y in zs[i:]:
                if self.add(x, y) not in zset:
                    return False
        return True

    def all_nonunits_are_zero_divisors(self) -> bool:
        """Units and zero divisors partition the ring (true for finite rings)."""
        return (
            self.units.isdisjoint(self.zero_divisors)
            and len(self.units) + len(self.zero_divisors) == self.order
        )

    # -- ideals and annihilators --------------------------------------------

    def annihilator(self, elems) -> frozenset[int]:
        """All r with rs = 0 for every s in elems; the whole ring for elems = {}."""
        targets = tuple(elems)
        return frozenset(
            r
            for r in self.elements()
            if all(self.mul(r, s) == 0 for s in targets)
        )

    def ideal_generated_by(self, elems) -> frozenset[int]:
        """Smallest ideal containing elems, by additive closure of R*elems."""
        gens = {self.mul(r, s) for r in self.elements() for s in elems}
        gens.discard(0)
        ideal = {0} | gens
        frontier = list(ideal)
        glist = sorted(gens)
        while frontier:
            x = frontier.pop()
            for g in glist:
                y = self.add(x, g)
                if y not in ideal:
                    ideal.add(y)
                    frontier.append(y)
        return frozenset(ideal)

    # -- decomposition -------------------------------------------------------

    def multiples_of(self, e: int) -> frozenset[int]:
        """The set eR (a subring with identity e when e is idempotent)."""
        return frozenset(self.mul(x, e) for x in self.elements())

    @cached_property
    def _local_factors(self) -> tuple[LocalFactor, ...]:
        done = []
        pending = [self.one]
        while pending:
            e = pending.pop()
            sub = sorted(self.multiples_of(e))
            split = next(
                (z for z in sub if z not in (0, e) and self.mul(z, z) == z),
                None,
            )
            if split is None:
                done.append(LocalFactor(e, len(sub)))
            else:
                pending.append(split)
                pending.append(self.sub(e, split))
        done.sort(key=lambda f: f.idempotent)
        return tuple(done)

    def local_decomposition(self) -> tuple[LocalFactor, ...]:
        """Complete orthogonal set of primitive idempotents with factor orders.

        The idempotents sum to 1, pairwise products are 0, each factor eR has
        no idempotents besides 0 and e, and the factor orders multiply to the
        ring order.  A single factor means the ring is local.
        """
        return self._local_factors

    @cached_property
    def embeds_in_two_integral_domains(self) -> bool:
        """True iff the ring embeds in a product of two integral domains.

        For a finite commutative ring this holds exactly when the ring is
        reduced with at most two local factors: a finite reduced ring is a
        product of fields, and a product of three or more fields contains
        triples of orthogonal idempotents that no subring of a product of
        two domains can host.
        """
        return self.is_reduced and len(self.local_decomposition()) <= 2


class ZnRing(FiniteRing):
    """Integers modulo n."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"modulus must be positive, got {n}")
        self.order = n
        self.one = 1 % n

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.order

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.order

    def neg(self, a: int) -> int:
        return (-a) % self.order

    def _compute_units(self) -> frozenset[int]:
        n = self.order
        return frozenset(x for x in range(n) if math.gcd(x, n) == 1)

    def _compute_zero_divisors(self) -> frozenset[int]:
        n = self.order
        return frozenset(x for x in range(n) if math.gcd(x, n) > 1)

    def to_expr(self) -> RingExpr:
        return RingExpr((ZnAtom(self.order),))


class BooleanRing(FiniteRing):
    """k-fold power of Z_2; elements are bitmasks, add is xor, mul is and."""

    def __init__(self, k: int):
        if k < 1:
            raise ValueError(f"exponent must be positive, got {k}")
        self.k = k
        self.order = 1 << k
        self.one = self.order - 1

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return a & b

    def neg(self, a: int) -> int:
        return a

    def _compute_units(self) -> frozenset[int]:
        return frozenset({self.one})

    def _compute_zero_divisors(self) -> frozenset[int]:
        # x & ~x = 0, and the complement is nonzero for every x except 1
        return frozenset(range(self.order - 1))

    def to_expr(self) -> RingExpr:
        return RingExpr((BooleanAtom(self.k),))


class QuotientRing(FiniteRing):
    """Z_m[x]/(f) for monic f of degree >= 1; f need not be irreducible.

    Elements are coefficient vectors base m; the index of (c_0, ..., c_{d-1})
    is sum c_i * m**i.  Orders up to a small limit cache the full
    multiplication table on first use.
    """

    def __init__(self, modulus: int, poly):
        self.modulus = modulus
        self.poly = normalize_quotient_poly(modulus, tuple(poly))
        self.degree = len(self.poly) - 1
        self.order = modulus**self.degree
        self.one = 1 % self.order

    @cached_property
    def _digits(self) -> list[tuple[int, ...]]:
        m, d = self.modulus, self.degree
        return [
            tuple((i // m**j) % m for j in range(d)) for i in range(self.order)
        ]

    def _encode(self, digits) -> int:
        m = self.modulus
        acc = 0
        for j in range(self.degree - 1, -1, -1):
            acc = acc * m + digits[j]
        return acc

    def add(self, a: int, b: int) -> int:
        m = self.modulus
        da, db = self._digits[a], self._digits[b]
        acc = 0
        p = 1
        for ca, cb in zip(da, db):
            acc += ((ca + cb) % m) * p
            p *= m
        return acc

    def neg(self, a: int) -> int:
        m = self.modulus
        acc = 0
        p = 1
        for c in self._digits[a]:
            acc += ((m - c) % m) * p
            p *= m
        return acc

    @cached_property
    def _mul_table(self) -> list[list[int]] | None:
        if self.order > _QUOTIENT_TABLE_LIMIT:
            return None
        return [
            [self._mul_structured(a, b) for b in range(self.order)]
            for a in range(self.order)
        ]

    def mul(self, a: int, b: int) -> int:
        table = self._mul_table
        if table is not None:
            return table[a][b]
        return self._mul_structured(a, b)

    def _mul_structured(self, a: int, b: int) -> int:
        m, d, f = self.modulus, self.degree, self.poly
        da, db = self._digits[a], self._digits[b]
        prod = [0] * (2 * d - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % m
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                for j in range(d + 1):
                    prod[k - d + j] = (prod[k - d + j] - c * f[j]) % m
        return self._encode(prod[:d])

    def to_expr(self) -> RingExpr:
        return RingExpr((QuotientAtom(self.modulus, self.poly),))


class ProductRing(FiniteRing):
    """Componentwise product; indices are mixed radix, first factor leading."""

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise ValueError("product needs at least one factor")
        self.factors = factors
        strides = []
        stride = 1
        for f in reversed(factors):
            strides.append(stride)
            stride *= f.order
        self.strides = tuple(reversed(strides))
        self.order = stride
        self.one = self.encode(tuple(f.one for f in factors))

    @cached_property
    def _decoded(self) -> list[tuple[int, ...]]:
        import itertools

        return list(itertools.product(*(f.elements() for f in self.factors)))

    def encode(self, components) -> int:
        return sum(c * s for c, s in zip(components, self.strides))

    def decode(self, index: int) -> tuple[int, ...]:
        return self._decoded[index]

    def add(self, a: int, b: int) -> int:
        ta, tb = self._decoded[a], self._decoded[b]
        acc = 0
        for f, s, ca, cb in zip(self.factors, self.strides, ta, tb):
            acc += f.add(ca, cb) * s
        return acc

    def mul(self, a: int, b: int) -> int:
        ta, tb = self._decoded[a], self._decoded[b]
        acc = 0
        for f, s, ca, cb in zip(self.factors, self.strides, ta, tb):
            acc += f.mul(ca, cb) * s
        return acc

    def neg(self, a: int) -> int:
        acc = 0
        for f, s, c in zip(self.factors, self.strides, self._decoded[a]):
            acc += f.neg(c) * s
        return acc

    def _compute_units(self) -> frozenset[int]:
        componentwise = [f.units for f in self.factors]
        return frozenset(
            i
            for i, t in enumerate(self._decoded)
            if all(c in u for c, u in zip(t, componentwise))
        )

    def _compute_zero_divisors(self) -> frozenset[int]:
        componentwise = [f.zero_divisors for f in self.factors]
        return frozenset(
            i
            for i, t in enumerate(self._decoded)
            if any(c in z for c, z in zip(t, componentwise))
        )

    def to_expr(self) -> RingExpr:
        atoms: list[Atom] = []
        for f in self.factors:
            atoms.extend(f.to_expr().atoms)
        return RingExpr(tuple(atoms))


class IdealizationRing(FiniteRing):
    """Pairs (r, x) in Z_n x Z_m with (r,x)(s,y) = (rs, ry + sx); m | n."""

    def __init__(self, n: int, m: int):
        if n < 1 or m < 1:
            raise ValueError("idealization sizes must be positive")
        if n % m != 0:
            raise ValueError(f"module modulus {m} must divide the base modulus {n}")
        self.n = n
        self.m = m
        self.order = n * m
        self.one = (1 % n) * m

    def add(self, a: int, b: int) -> int:
        n, m = self.n, self.m
        r, x = divmod(a, m)
        s, y = divmod(b, m)
        return ((r + s) % n) * m + (x + y) % m

    def mul(self, a: int, b: int) -> int:
        n, m = self.n, self.m
        r, x = divmod(a, m)
        s, y = divmod(b, m)
        return ((r * s) % n) * m + (r * y + s * x) % m

    def neg(self, a: int) -> int:
        n, m = self.n, self.m
        r, x = divmod(a, m)
        return ((n - r) % n) * m + (m - x) % m

    def _compute_units(self) -> frozenset[int]:
        # (r, x) is invertible iff r is invertible mod n: the inverse is
        # (r^-1, -r^-2 x), which lands in Z_m because m | n.
        n, m = self.n, self.m
        return frozenset(
            r * m + x
            for r in range(n)
            if math.gcd(r, n) == 1
            for x in range(m)
        )

    def _compute_zero_divisors(self) -> frozenset[int]:
        # gcd(r, m) > 1 gives (r,x)(0,y) = 0 for a y killed by r; otherwise
        # gcd(r, n) > 1 gives s != 0 with rs = 0 and y = -r^-1 s x mod m.
        # Since m | n both cases collapse to gcd(r, n) > 1.
        n, m = self.n, self.m
        return frozenset(
            r * m + x
            for r in range(n)
            if math.gcd(r, n) > 1
            for x in range(m)
        )

    def to_expr(self) -> RingExpr:
        return RingExpr((IdealizationAtom(self.n, self.m),))


# -- construction -------------------------------------------------------------


def _atom_order(atom: Atom) -> int:
    if isinstance(atom, ZnAtom):
        return atom.n
    if isinstance(atom, QuotientAtom):
        return atom.modulus ** (len(normalize_quotient_poly(atom.modulus, atom.poly)) - 1)
    if isinstance(atom, IdealizationAtom):
        return atom.n * atom.m
    if isinstance(atom, BooleanAtom):
        return 1 << atom.k
    raise TypeError(f"unknown ring atom {atom!r}")


def _build_atom(atom: Atom) -> FiniteRing:
    if isinstance(atom, ZnAtom):
        return ZnRing(atom.n)
    if isinstance(atom, QuotientAtom):
        return QuotientRing(atom.modulus, atom.poly)
    if isinstance(atom, IdealizationAtom):
        return IdealizationRing(atom.n, atom.m)
    if isinstance(atom, BooleanAtom):
        return BooleanRing(atom.k)
    raise TypeError(f"unknown ring atom {atom!r}")


def make_ring(expr: RingExpr | str, *, max_order: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Build a ring from an expression (text or parsed AST).

    Raises the parser errors for malformed text, ValueError for invalid
    constructor arguments, and OrderCapError when the resulting order would
    exceed `max_order` (graph work downstream is quadratic in the order).
    """
    if isinstance(expr, str):
        expr = parse_ring_expr(expr)
    total = 1
    for atom in expr.atoms:
        total *= _atom_order(atom)
    if total > max_order:
        raise OrderCapError(f"ring order {total} exceeds the cap {max_order}")
    rings = tuple(_build_atom(a) for a in expr.atoms)
    if len(rings) == 1:
        return rings[0]
    return ProductRing(rings)


def verify_ring_axioms(ring: FiniteRing) -> None:
    """Exhaustively check the commutative unital ring axioms; O(order**3).

    Raises ValueError naming the first violated axiom.  Meant for tests and
    for validating new ring kinds at small orders.
    """
    els = ring.elements()
    add, mul, neg = ring.add, ring.mul, ring.neg
    one = ring.one
    for a in els:
        if add(0, a) != a:
            raise ValueError(f"0 is not an additive identity at {a}")
        if mul(one, a) != a:
            raise ValueError(f"1 is not a multiplicative identity at {a}")
        if add(a, neg(a)) != 0:
            raise ValueError(f"no additive inverse for {a}")
    for a in els:
        for b in range(a, ring.order):
            if add(a, b) != add(b, a):
                raise ValueError(f"addition not commutative at ({a}, {b})")
            if mul(a, b) != mul(b, a):
                raise ValueError(f"multiplication not commutative at ({a}, {b})")
    for a in els:
        for b in els:
            ab_sum = add(a, b)
            ab_mul = mul(a, b)
            for c in els:
                if add(ab_sum, c) != add(a, add(b, c)):
                    raise ValueError(f"addition not associative at ({a}, {b}, {c})")
                if mul(ab_mul, c) != mul(a, mul(b, c)):
                    raise ValueError(
                        f"multiplication not associative at ({a}, {b}, {c})"
                    )
                if mul(a, add(b, c)) != add(ab_mul, mul(a, c)):
                    raise ValueError(f"distributivity fails at ({a}, {b}, {c})")
