"""Ring expression grammar: parse, validate and serialize ring constructors.

Grammar (whitespace between tokens is ignored, keywords are case sensitive)::

    expr  := atom ("x" atom)*
    atom  := "Z" nat
           | "Z" nat "[x]/(" poly ")"
           | "Id(Z" nat "," "Z" nat ")"
           | "B" nat
           | "GF(" nat ("^" nat)? ")"
    poly  := term ("+" term)*
    term  := nat | (nat "*"?)? "x" ("^" nat)?

"GF(p^k)" is convenience sugar: it expands to Z_p[x]/(f) where f is the
first monic irreducible polynomial of degree k in coefficient-vector
order, so repeated runs construct the same field.  It serializes in
quotient form ("GF(4)" round-trips as "Z2[x]/(1+x+x^2)").

Quotient polynomial coefficients are reduced mod the base modulus; after
reduction the polynomial must still be monic of degree >= 1.

Scan failures raise ExprSyntaxError carrying the byte offset; violations
of content rules (zero sizes, module modulus not dividing the base
modulus, non-monic quotient) raise ExprSemanticsError.
"""

from __future__ import annotations

from dataclasses import dataclass


class ExprSyntaxError(ValueError):
    """Malformed ring expression.  `position` is the byte offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class ExprSemanticsError(ValueError):
    """Syntactically valid expression with invalid content."""


@dataclass(frozen=True)
class ZnAtom:
    n: int

    def __str__(self) -> str:
        return f"Z{self.n}"


@dataclass(frozen=True)
class QuotientAtom:
    modulus: int
    poly: tuple[int, ...]  # ascending coefficients, monic, degree >= 1

    def __str__(self) -> str:
        return f"Z{self.modulus}[x]/({format_poly_terms(self.poly)})"


@dataclass(frozen=True)
class IdealizationAtom:
    n: int
    m: int

    def __str__(self) -> str:
        return f"Id(Z{self.n},Z{self.m})"


@dataclass(frozen=True)
class BooleanAtom:
    k: int

    def __str__(self) -> str:
        return f"B{self.k}"


Atom = ZnAtom | QuotientAtom | IdealizationAtom | BooleanAtom


@dataclass(frozen=True)
class RingExpr:
    """Product of atoms; a single atom is the degenerate one-factor product."""

    atoms: tuple[Atom, ...]

    def __str__(self) -> str:
        return " x ".join(str(a) for a in self.atoms)


def format_poly_terms(coeffs: tuple[int, ...]) -> str:
    """Compact ascending form used inside quotient atoms, e.g. "1+x+x^2"."""
    terms = []
    for power, c in enumerate(coeffs):
        if c == 0:
            continue
        if power == 0:
            terms.append(str(c))
            continue
        head = "" if c == 1 else f"{c}*"
        terms.append(f"{head}x" if power == 1 else f"{head}x^{power}")
    return "+".join(terms) if terms else "0"


def normalize_quotient_poly(modulus: int, coeffs: tuple[int, ...]) -> tuple[int, ...]:
    """Reduce coefficients mod the modulus and validate monic, degree >= 1."""
    if modulus < 1:
        raise ExprSemanticsError("quotient modulus must be positive")
    cs = [c % modulus for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) < 2:
        raise ExprSemanticsError(
            "quotient polynomial must have degree >= 1 after reduction"
        )
    if cs[-1] != 1:
        raise ExprSemanticsError("quotient polynomial must be monic")
    return tuple(cs)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def eof(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, literal: str) -> bool:
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.take(literal):
            raise ExprSyntaxError(f"expected {literal!r}", self.pos)

    def nat(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ExprSyntaxError("expected a number", self.pos)
        return int(self.text[start : self.pos])


def parse_ring_expr(text: str) -> RingExpr:
    """Parse a ring expression; see the module docstring for the grammar."""
    sc = _Scanner(text)
    atoms = [_parse_atom(sc)]
    sc.skip_ws()
    while sc.take("x"):
        atoms.append(_parse_atom(sc))
        sc.skip_ws()
    if not sc.eof():
        raise ExprSyntaxError("unexpected trailing input", sc.pos)
    return RingExpr(tuple(atoms))


def _parse_atom(sc: _Scanner) -> Atom:
    sc.skip_ws()
    if sc.take("Id("):
        sc.skip_ws()
        sc.expect("Z")
        n = sc.nat()
        sc.skip_ws()
        sc.expect(",")
        sc.skip_ws()
        sc.expect("Z")
        m = sc.nat()
        sc.skip_ws()
        sc.expect(")")
        if n < 1 or m < 1:
            raise ExprSemanticsError("idealization sizes must be positive")
        if n % m != 0:
            raise ExprSemanticsError(
                f"module modulus {m} must divide the base modulus {n}"
            )
        return IdealizationAtom(n, m)
    if sc.take("GF("):
        sc.skip_ws()
        p = sc.nat()
        sc.skip_ws()
        k = 1
        if sc.take("^"):
            sc.skip_ws()
            k = sc.nat()
            sc.skip_ws()
        sc.expect(")")
        return _galois_atom(p, k)
    if sc.take("Z"):
        n = sc.nat()
        if n < 1:
            raise ExprSemanticsError("ring size must be positive")
        if sc.take("[x]/("):
            coeffs = _parse_poly_terms(sc)
            sc.skip_ws()
            sc.expect(")")
            return QuotientAtom(n, normalize_quotient_poly(n, coeffs))
        return ZnAtom(n)
    if sc.take("B"):
        k = sc.nat()
        if k < 1:
            raise ExprSemanticsError("boolean ring exponent must be positive")
        return BooleanAtom(k)
    raise ExprSyntaxError("expected a ring atom (Z, Id, B or GF)", sc.pos)


def _parse_poly_terms(sc: _Scanner) -> tuple[int, ...]:
    acc: dict[int, int] = {}
    while True:
        sc.skip_ws()
        coeff = None
        if sc.peek().isdigit():
            coeff = sc.nat()
        sc.skip_ws()
        starred = sc.take("*")
        if starred:
            sc.skip_ws()
        if sc.take("x"):
            power = 1
            if sc.take("^"):
                power = sc.nat()
            acc[power] = acc.get(power, 0) + (1 if coeff is None else coeff)
        else:
            if starred:
                raise ExprSyntaxError("expected 'x' after '*'", sc.pos)
            if coeff is None:
                raise ExprSyntaxError("expected a polynomial term", sc.pos)
            acc[0] = acc.get(0, 0) + coeff
        sc.skip_ws()
        if not sc.take("+"):
            break
    top = max(acc)
    return tuple(acc.get(i, 0) for i in range(top + 1))


# -- GF(p^k) expansion -------------------------------------------------------


def _prime_power(q: int) -> tuple[int | None, int]:
    for p in range(2, q + 1):
        if _is_prime(p) and q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            return (p, k) if q == 1 else (None, 0)
    return (None, 0)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_remainder(num: list[int], den: tuple[int, ...], p: int) -> list[int]:
    # den is monic, so no inverses are needed
    num = list(num)
    dd = len(den) - 1
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            for j in range(dd + 1):
                num[k - dd + j] = (num[k - dd + j] - c * den[j]) % p
    while num and num[-1] == 0:
        num.pop()
    return num


def _is_irreducible(f: tuple[int, ...], p: int) -> bool:
    deg = len(f) - 1
    for gdeg in range(1, deg // 2 + 1):
        for idx in range(p**gdeg):
            digits = [(idx // p**j) % p for j in range(gdeg)]
            g = tuple(digits) + (1,)
            if not _poly_remainder(list(f), g, p):
                return False
    return True


def _galois_atom(p: int, k: int) -> Atom:
    if k < 1:
        raise ExprSemanticsError("GF exponent must be positive")
    if not _is_prime(p):
        # accept GF(q) for a prime power q, e.g. GF(4) == GF(2^2)
        if k == 1:
            base, exp = _prime_power(p)
            if base is not None:
                p, k = base, exp
        if not _is_prime(p):
            raise ExprSemanticsError(f"GF size must be a prime power, got {p}")
    if k == 1:
        return ZnAtom(p)
    for idx in range(p**k):
        digits = tuple((idx // p**j) % p for j in range(k))
        f = digits + (1,)
        if _is_irreducible(f, p):
            return QuotientAtom(p, f)
    raise ExprSemanticsError(f"no irreducible polynomial found for GF({p}^{k})")
