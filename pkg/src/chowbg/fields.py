"""Base-field descriptors and cyclotomic/Galois bookkeeping.

The only field data the tables depend on is the characteristic and, per
prime p, the order t of the image of the mod-p cyclotomic character: the
group through which the absolute Galois group permutes the p-th roots of
unity.  t = 1 exactly when the field already contains them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ._intmath import is_prime, multiplicative_order, p_valuation, require_prime
from .errors import FieldParseError, UnsupportedError
from .groups import CyclicZ
from .tables import ChowTable, DegreeRow

ALGEBRAICALLY_CLOSED = "algebraically_closed"
PRIME_FIELD = "prime_field"
CYCLOTOMIC_EXTENSION = "cyclotomic_extension"


@dataclass(frozen=True)
class FieldDescriptor:
    characteristic: int  # 0 or a prime
    kind: str
    adjoined: tuple[int, ...] = ()  # orders m of adjoined root-of-unity groups
    name: str = ""

    def __post_init__(self):
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise ValueError("characteristic must be 0 or prime")
        if self.kind not in (ALGEBRAICALLY_CLOSED, PRIME_FIELD, CYCLOTOMIC_EXTENSION):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == CYCLOTOMIC_EXTENSION and not self.adjoined:
            raise ValueError("cyclotomic extension needs at least one adjoined order")


COMPLEX = FieldDescriptor(0, ALGEBRAICALLY_CLOSED, name="C")

_FIELD_RE = re.compile(r"^(C|Qbar|Q|F_(\d+))(?:\(mu_(\d+)\))?$")


def parse_field(text: str) -> FieldDescriptor:
    """Accepted forms: C, Qbar, Q, Q(mu_p), F_l, F_l(mu_p)."""
    m = _FIELD_RE.match(text.strip())
    if m is None:
        raise FieldParseError(f"unrecognized field descriptor {text!r}")
    base, char_str, mu_str = m.groups()
    char = 0
    if char_str is not None:
        char = int(char_str)
        if not is_prime(char):
            raise FieldParseError(f"finite-field characteristic must be prime: {text!r}")
    if base in ("C", "Qbar"):
        if mu_str is not None:
            raise FieldParseError(f"{base} already contains all roots of unity: {text!r}")
        return FieldDescriptor(0, ALGEBRAICALLY_CLOSED, name=base)
    if mu_str is None:
        return FieldDescriptor(char, PRIME_FIELD, name=text.strip())
    mu = int(mu_str)
    if mu < 1 or (char != 0 and mu % char == 0):
        raise FieldParseError(f"cannot adjoin mu_{mu} in characteristic {char}")
    return FieldDescriptor(char, CYCLOTOMIC_EXTENSION, (mu,), name=text.strip())


def cyclotomic_order(k: FieldDescriptor, p: int) -> int:
    """Order of the image of the mod-p cyclotomic character; divides p - 1."""
    require_prime(p)
    if k.characteristic == p:
        raise ValueError(f"characteristic {p} field has no tame mu_{p}")
    if k.kind == ALGEBRAICALLY_CLOSED or p == 2:
        return 1
    if any(m % p == 0 for m in k.adjoined):
        return 1
    if k.characteristic == 0:
        return p - 1
    return multiplicative_order(k.characteristic % p, p)


def contains_mu(k: FieldDescriptor, m: int) -> bool:
    """Whether k contains all m-th roots of unity (m coprime to the characteristic)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if k.characteristic != 0 and m % k.characteristic == 0:
        return False
    if m <= 2 or k.kind == ALGEBRAICALLY_CLOSED:
        return True
    if k.characteristic == 0:
        # Q(mu_a) contains mu_m iff m divides a (for even a) or 2a (odd a)
        cap = 2
        for a in k.adjoined:
            cap = _lcm(cap, a if a % 2 == 0 else 2 * a)
        return cap % m == 0
    # F_l(mu_a) is the field with l**r elements, r the order of l mod lcm(adjoined)
    l = k.characteristic
    r = 1
    for a in k.adjoined:
        r = _lcm(r, multiplicative_order(l % a, a) if a > 1 else 1)
    return (l**r - 1) % m == 0


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


FIELD_RULE_ESTABLISHED = "established"
FIELD_RULE_EXTRAPOLATED = "extrapolated"


def invariance_rule_status(k: FieldDescriptor, p: int) -> str:
    """Whether the degree-filtering rule for B(Z/p) over k is an established
    computation (prime fields, their mu_p extensions, finite fields, closed
    fields) or an extrapolation to a descriptor outside that list."""
    if k.kind == ALGEBRAICALLY_CLOSED or k.characteristic != 0:
        return FIELD_RULE_ESTABLISHED
    if k.kind == PRIME_FIELD:
        return FIELD_RULE_ESTABLISHED
    if any(m % p == 0 for m in k.adjoined):
        return FIELD_RULE_ESTABLISHED
    return FIELD_RULE_EXTRAPOLATED


# ---------------------------------------------------------------------------
# the Galois fixed-subgroup exponent


@dataclass(frozen=True)
class GaloisFixedSpec:
    """Fixed subgroup of degree-i classes with coefficients twisted i times.

    exponent None: the fixed subgroup is zero (degree not a multiple of
    p - 1).  exponent c >= 1: the fixed subgroup is the kernel of
    multiplication by p**c.
    """

    prime: int
    codegree: int
    exponent: int | None

    def is_zero(self) -> bool:
        return self.exponent is None


def galois_fixed_exponent(p: int, i: int) -> GaloisFixedSpec:
    """Case split: zero unless (p-1) | i; for i = a * p**r * (p-1) with a
    prime to p the answer is the kernel of p**(r+1)."""
    require_prime(p)
    if i < 1:
        raise ValueError("degree must be >= 1")
    if i % (p - 1) != 0:
        return GaloisFixedSpec(p, i, None)
    r = p_valuation(i // (p - 1), p)
    return GaloisFixedSpec(p, i, r + 1)


# ---------------------------------------------------------------------------
# cyclotomic-invariant filtering of B(Z/p) tables


def apply_cyclotomic_invariants(table: ChowTable, t: int) -> ChowTable:
    """Keep the degree-i rows of a B(Z/p) table with t | i; zero the others.

    t is the order of the scalar group acting on the degree-1 generator, so
    a degree-i monomial is fixed iff t divides i; degree 0 always survives.
    """
    if not isinstance(table.group, CyclicZ) or not is_prime(table.group.n):
        raise ValueError("expected a table for a cyclic group of prime order")
    p = table.group.n
    if t < 1 or (p - 1) % t != 0:
        raise ValueError(f"t must divide p - 1 = {p - 1}, got {t}")
    rows = tuple(
        row if row.degree % t == 0 else DegreeRow(row.degree, 0, ())
        for row in table.rows
    )
    return table.with_metadata(rows=rows)


def require_char_ne(k: FieldDescriptor, p: int, what: str) -> None:
    if k.characteristic == p:
        raise UnsupportedError(
            f"{what} is not defined over fields of characteristic {p}"
        )
