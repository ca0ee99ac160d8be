"""Group expressions: AST, parser, printer, and structural data.

Grammar (whitespace-insensitive)::

    expr := term { "x" term }
    term := "1" | "Z/" int | "Gm" | "GL(" int ")" | "O(" int ")"
          | "SO(" int ")" | "Sp(" int ")" | "G2" | "S_" int
          | "wr(" prime "," expr ")" | "(" expr ")"

The parser produces canonical trees: trivial factors are dropped, runs of
adjacent finite cyclic factors collapse into a single ``FiniteAbelian``
node in invariant-factor form, and products fold to the left.  Printing a
canonical tree and reparsing gives the tree back.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._intmath import invariant_factors, is_prime
from .errors import GroupParseError, UnsupportedError


@dataclass(frozen=True, slots=True)
class Trivial:
    pass


@dataclass(frozen=True, slots=True)
class CyclicZ:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("cyclic order must be >= 1")


@dataclass(frozen=True, slots=True)
class FiniteAbelian:
    factors: tuple[int, ...]  # invariant factors, decreasing divisibility chain

    def __post_init__(self):
        if len(self.factors) < 1 or any(f < 2 for f in self.factors):
            raise ValueError("invariant factors must be >= 2")
        if any(a % b != 0 for a, b in zip(self.factors, self.factors[1:])):
            raise ValueError("factors must form a divisibility chain, largest first")


@dataclass(frozen=True, slots=True)
class Gm:
    pass


@dataclass(frozen=True, slots=True)
class GL:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("GL rank must be >= 1")


@dataclass(frozen=True, slots=True)
class O:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("O rank must be >= 1")


@dataclass(frozen=True, slots=True)
class SO:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("SO rank must be >= 1")


@dataclass(frozen=True, slots=True)
class Sp:
    n: int  # the matrix size 2n; always even

    def __post_init__(self):
        if self.n < 2 or self.n % 2 != 0:
            raise ValueError("Sp argument must be even and >= 2")


@dataclass(frozen=True, slots=True)
class G2:
    pass


@dataclass(frozen=True, slots=True)
class Symmetric:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("symmetric group degree must be >= 1")


@dataclass(frozen=True, slots=True)
class Wreath:
    p: int
    inner: "GroupExpr"

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError("wreath degree must be prime")


@dataclass(frozen=True, slots=True)
class Product:
    left: "GroupExpr"
    right: "GroupExpr"


GroupExpr = (
    Trivial
    | CyclicZ
    | FiniteAbelian
    | Gm
    | GL
    | O
    | SO
    | Sp
    | G2
    | Symmetric
    | Wreath
    | Product
)


def abelian_expr(orders) -> GroupExpr:
    """Canonical node for a finite abelian group given by cyclic orders."""
    inv = invariant_factors(orders)
    if not inv:
        return Trivial()
    if len(inv) == 1:
        return CyclicZ(inv[0])
    return FiniteAbelian(inv)


def combine_product(terms) -> GroupExpr:
    """Canonical product: drop trivial factors, merge adjacent abelian runs,
    fold to the left."""
    merged: list[GroupExpr] = []
    for t in terms:
        if isinstance(t, Trivial):
            continue
        if isinstance(t, (CyclicZ, FiniteAbelian)) and merged and isinstance(
            merged[-1], (CyclicZ, FiniteAbelian)
        ):
            merged[-1] = abelian_expr(_cyclic_orders(merged[-1]) + _cyclic_orders(t))
        else:
            merged.append(t)
    if not merged:
        return Trivial()
    expr = merged[0]
    for t in merged[1:]:
        expr = Product(expr, t)
    return expr


def _cyclic_orders(g: GroupExpr) -> tuple[int, ...]:
    match g:
        case CyclicZ(n):
            return (n,)
        case FiniteAbelian(factors):
            return factors
    raise TypeError(f"not an abelian node: {g!r}")


def product_factors(g: GroupExpr) -> list[GroupExpr]:
    """Flatten a left-folded product into its factor list."""
    if isinstance(g, Product):
        return product_factors(g.left) + [g.right]
    return [g]


def format_group(g: GroupExpr) -> str:
    match g:
        case Trivial():
            return "1"
        case CyclicZ(n):
            return f"Z/{n}"
        case FiniteAbelian(factors):
            return " x ".join(f"Z/{f}" for f in factors)
        case Gm():
            return "Gm"
        case GL(n):
            return f"GL({n})"
        case O(n):
            return f"O({n})"
        case SO(n):
            return f"SO({n})"
        case Sp(n):
            return f"Sp({n})"
        case G2():
            return "G2"
        case Symmetric(n):
            return f"S_{n}"
        case Wreath(p, inner):
            return f"wr({p}, {format_group(inner)})"
        case Product(left, right):
            return f"{format_group(left)} x {format_group(right)}"
    raise TypeError(f"not a group expression: {g!r}")


# ---------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, at: int | None = None) -> GroupParseError:
        pos = self.pos if at is None else at
        return GroupParseError(message, len(self.text[:pos].encode("utf-8")))

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def lookahead(self, s: str) -> bool:
        return self.text.startswith(s, self.pos)

    def expect(self, s: str) -> None:
        self.skip_ws()
        if not self.lookahead(s):
            raise self.error(f"expected {s!r}")
        self.pos += len(s)

    def integer(self) -> tuple[int, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos]), start

    def expr(self) -> GroupExpr:
        terms = [self.term()]
        while True:
            self.skip_ws()
            if self.lookahead("x"):
                self.pos += 1
                terms.append(self.term())
            else:
                break
        return combine_product(terms)

    def term(self) -> GroupExpr:
        self.skip_ws()
        start = self.pos
        if self.lookahead("("):
            self.pos += 1
            inner = self.expr()
            self.expect(")")
            return inner
        if self.lookahead("1"):
            self.pos += 1
            return Trivial()
        if self.lookahead("Z/"):
            self.pos += 2
            n, at = self.integer()
            if n < 1:
                raise self.error("cyclic order must be >= 1", at)
            return abelian_expr((n,))
        if self.lookahead("Gm"):
            self.pos += 2
            return Gm()
        if self.lookahead("GL("):
            self.pos += 3
            n, at = self.integer()
            if n < 1:
                raise self.error("GL rank must be >= 1", at)
            self.expect(")")
            return GL(n)
        if self.lookahead("G2"):
            self.pos += 2
            return G2()
        if self.lookahead("O("):
            self.pos += 2
            n, at = self.integer()
            if n < 1:
                raise self.error("O rank must be >= 1", at)
            self.expect(")")
            return O(n)
        if self.lookahead("SO("):
            self.pos += 3
            n, at = self.integer()
            if n < 1:
                raise self.error("SO rank must be >= 1", at)
            self.expect(")")
            return SO(n)
        if self.lookahead("Sp("):
            self.pos += 3
            n, at = self.integer()
            if n < 2 or n % 2 != 0:
                raise self.error("Sp argument must be even and >= 2", at)
            self.expect(")")
            return Sp(n)
        if self.lookahead("S_"):
            self.pos += 2
            n, at = self.integer()
            if n < 1:
                raise self.error("symmetric group degree must be >= 1", at)
            return Symmetric(n)
        if self.lookahead("wr("):
            self.pos += 3
            p, at = self.integer()
            if not is_prime(p):
                raise self.error("wreath degree must be prime", at)
            self.expect(",")
            inner = self.expr()
            self.expect(")")
            return Wreath(p, inner)
        raise self.error("expected a group term", start)


def parse_group_expr(text: str) -> GroupExpr:
    parser = _Parser(text)
    expr = parser.expr()
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error("trailing input after group expression")
    return expr


# ---------------------------------------------------------------------------
# structural data


def is_finite(g: GroupExpr) -> bool:
    match g:
        case Trivial() | CyclicZ() | FiniteAbelian() | Symmetric():
            return True
        case Wreath(_, inner):
            return is_finite(inner)
        case Product(left, right):
            return is_finite(left) and is_finite(right)
        case _:
            return False


def group_dimension(g: GroupExpr) -> int:
    """Dimension as an algebraic group; finite groups have dimension 0."""
    match g:
        case Gm():
            return 1
        case GL(n):
            return n * n
        case O(n) | SO(n):
            return n * (n - 1) // 2
        case Sp(n):
            m = n // 2
            return m * (2 * m + 1)
        case G2():
            return 14
        case Product(left, right):
            return group_dimension(left) + group_dimension(right)
        case _ if is_finite(g):
            return 0
    raise TypeError(f"not a group expression: {g!r}")


def generator_bound(g: GroupExpr) -> int:
    """Degree bound for module generators over the Chern classes of the
    catalog embedding into a product of general linear groups.

    The bound is dim H - dim G for the embedding G -> H: the quotient H/G
    is an open subset of an affine space (nondegenerate quadratic forms for
    O, alternating forms for Sp, a general 3-form in 7 variables for G2).
    """
    match g:
        case Gm() | GL():
            return 0
        case O(n) | SO(n):
            return n * (n + 1) // 2
        case Sp(n):
            return n * (n - 1) // 2
        case G2():
            return 35
        case Product(left, right):
            return generator_bound(left) + generator_bound(right)
    raise UnsupportedError(
        f"no catalog embedding with known quotient for {format_group(g)}"
    )


@dataclass(frozen=True)
class SylowProfile:
    """Shape of the p-Sylow subgroup of a symmetric group.

    Each base-p digit d at position i contributes d copies of the i-fold
    iterated wreath power of Z/p (height 0 is the trivial group), and the
    Sylow subgroup is the product of those factors.
    """

    prime: int
    heights: tuple[int, ...]

    def group(self) -> GroupExpr:
        return combine_product([wreath_tower(self.prime, h) for h in self.heights])


def wreath_tower(p: int, height: int) -> GroupExpr:
    if height == 0:
        return Trivial()
    expr: GroupExpr = CyclicZ(p)
    for _ in range(height - 1):
        expr = Wreath(p, expr)
    return expr


def sylow_profile(n: int, p: int) -> SylowProfile:
    if n < 0:
        raise ValueError("n must be >= 0")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    heights = []
    position = 0
    m = n
    while m:
        digit = m % p
        heights.extend([position] * digit)
        m //= p
        position += 1
    return SylowProfile(p, tuple(heights))


def abelianization(g: GroupExpr) -> GroupExpr:
    """Abelianization of a finite catalog group, in invariant-factor form."""
    return abelian_expr(_abelianization_orders(g))


def abelian_invariant_factors(g: GroupExpr) -> tuple[int, ...]:
    return invariant_factors(_abelianization_orders(g))


def _abelianization_orders(g: GroupExpr) -> tuple[int, ...]:
    match g:
        case Trivial():
            return ()
        case CyclicZ(n):
            return (n,)
        case FiniteAbelian(factors):
            return factors
        case Symmetric(n):
            return (2,) if n >= 2 else ()
        case Wreath(p, inner):
            return (p,) + _abelianization_orders(inner)
        case Product(left, right):
            return _abelianization_orders(left) + _abelianization_orders(right)
    raise ValueError(f"abelianization requires a finite group, got {format_group(g)}")
