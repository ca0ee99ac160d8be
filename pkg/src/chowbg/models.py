"""Top-level table builder: CH^*(BG) for the supported catalog.

Dispatch strategy:

* finite abelian groups with enough roots of unity, and Gm, get the
  symmetric algebra on their character group;
* a cyclic group of prime order over a field lacking its roots of unity
  gets the degree-filtered table via the cyclotomic-character image;
* products use the graded tensor rule;
* wreath products wr(p, G) apply the codimension cyclic power to the
  table of G (fields must contain the p-th roots of unity);
* the classical groups expand their catalog presentations;
* symmetric groups are assembled from their p-local parts, which are
  supported exactly when the p-Sylow subgroup is trivial or of order p.

Anything outside this territory raises UnsupportedError rather than
returning a guess.
"""

from __future__ import annotations

from functools import lru_cache

from ._intmath import is_prime, require_prime
from . import graded
from .cyclic import cyclic_power_codim
from .errors import UnsupportedError
from .fields import (
    COMPLEX,
    FIELD_RULE_EXTRAPOLATED,
    FieldDescriptor,
    apply_cyclotomic_invariants,
    contains_mu,
    cyclotomic_order,
    invariance_rule_status,
    require_char_ne,
)
from .graded import CODIM, CyclicSummand, Generator, GradedAbelianGroup
from .groups import (
    G2,
    GL,
    SO,
    CyclicZ,
    FiniteAbelian,
    Gm,
    GroupExpr,
    O,
    Product,
    Sp,
    Symmetric,
    Trivial,
    Wreath,
    format_group,
    sylow_profile,
)
from .presentations import additive_table_from_presentation, catalog_presentation
from .tables import (
    EXACT,
    EXTRAPOLATED_FIELD,
    INTEGRAL,
    UPPER_BOUND,
    ChowTable,
    DegreeRow,
    Localization,
)


def _point_group(bound: int) -> GradedAbelianGroup:
    return GradedAbelianGroup(CODIM, (CyclicSummand(0, 0, Generator("1")),), bound)


def _cyclic_model_group(order: int, bound: int, tag: str = "x") -> GradedAbelianGroup:
    """Symmetric algebra on one character of order m: Z[x]/(m x)."""
    summands = [CyclicSummand(0, 0, Generator("1"))]
    for d in range(1, bound + 1):
        summands.append(CyclicSummand(order, d, Generator(f"{tag}^{d}")))
    return graded.normalize(GradedAbelianGroup(CODIM, tuple(summands), bound))


def _merge_provenance(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[str, ...]:
    kind = UPPER_BOUND if UPPER_BOUND in a + b else EXACT
    flags: tuple[str, ...] = (kind,)
    if EXTRAPOLATED_FIELD in a + b:
        flags += (EXTRAPOLATED_FIELD,)
    return flags


def localize_table(table: ChowTable, p: int) -> ChowTable:
    """Keep the free part and the p-power torsion of every row."""
    require_prime(p)
    rows = tuple(
        DegreeRow(r.degree, r.free_rank, tuple(t for t in r.torsion if t % p == 0))
        for r in table.rows
    )
    return table.with_metadata(rows=rows, localization=Localization("at_prime", p))


def mod_p_table(table: ChowTable, p: int) -> ChowTable:
    """F_p-dimension of each row, reported in the free-rank column."""
    local = localize_table(table, p)
    rows = tuple(
        DegreeRow(r.degree, r.free_rank + len(r.torsion), ()) for r in local.rows
    )
    return local.with_metadata(rows=rows, localization=Localization("mod_p", p))


# ---------------------------------------------------------------------------
# the dispatcher


@lru_cache(maxsize=None)
def chow_model(g: GroupExpr, k: FieldDescriptor, bound: int) -> ChowTable:
    """Integral additive table of CH^*(BG) over k through the given degree."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    group, provenance = _model(g, k, bound)
    table = graded.to_table(group)
    return table.with_metadata(group=g, field=k, provenance=provenance)


def _model(g: GroupExpr, k: FieldDescriptor, bound: int) -> tuple[GradedAbelianGroup, tuple[str, ...]]:
    match g:
        case Trivial():
            return _point_group(bound), (EXACT,)
        case Gm() | GL() | O() | SO() | Sp() | G2():
            return _classical_model(g, k, bound)
        case CyclicZ() | FiniteAbelian():
            return _abelian_model(g, k, bound)
        case Symmetric(n):
            table = chow_integral_symmetric(n, bound, field=k)
            return graded.from_table(table), table.provenance
        case Wreath(p, inner):
            inner_table = chow_model(inner, k, bound)
            table = chow_wreath(p, inner_table)
            return graded.from_table(table), table.provenance
        case Product(left, right):
            lg, lp = _model(left, k, bound)
            rg, rp = _model(right, k, bound)
            return graded.tensor(lg, rg), _merge_provenance(lp, rp)
    raise TypeError(f"not a group expression: {g!r}")


def _classical_model(g, k, bound):
    if isinstance(g, (O, SO)) and k.characteristic == 2:
        raise UnsupportedError(
            f"CH^*(B{format_group(g)}) is only established in characteristic != 2"
        )
    if isinstance(g, G2):
        raise UnsupportedError(
            "only generators of CH^*(BG2) are known (c1..c7); no additive table "
            "can be certified, but the presentation command lists the generators"
        )
    table = additive_table_from_presentation(catalog_presentation(g), bound)
    return graded.from_table(table), (EXACT,)


def _abelian_model(g, k, bound):
    factors = (g.n,) if isinstance(g, CyclicZ) else g.factors
    for m in factors:
        if k.characteristic != 0 and m % k.characteristic == 0:
            raise UnsupportedError(
                f"B(Z/{m}) has no tame model in characteristic {k.characteristic}"
            )
    if all(contains_mu(k, m) for m in factors):
        group = _point_group(bound)
        for i, m in enumerate(factors):
            group = graded.tensor(group, _cyclic_model_group(m, bound, tag=f"x{i}"))
        return group, (EXACT,)
    # general-field path: only a single prime-order cyclic group is established
    if len(factors) == 1 and is_prime(factors[0]):
        p = factors[0]
        t = cyclotomic_order(k, p)
        full = graded.to_table(_cyclic_model_group(p, bound)).with_metadata(group=CyclicZ(p))
        filtered = apply_cyclotomic_invariants(full, t)
        flags: tuple[str, ...] = (EXACT,)
        if invariance_rule_status(k, p) == FIELD_RULE_EXTRAPOLATED:
            flags += (EXTRAPOLATED_FIELD,)
        return graded.from_table(filtered), flags
    raise UnsupportedError(
        f"{k.name or 'the base field'} lacks the roots of unity needed for "
        f"{format_group(g)}; only a single Z/p is established over such fields"
    )


# ---------------------------------------------------------------------------
# wreath products and symmetric groups


def chow_wreath(p: int, inner: ChowTable) -> ChowTable:
    """Table of B(wr(p, G)) from the table of BG via the codim cyclic power."""
    require_prime(p)
    if EXACT not in inner.provenance or UPPER_BOUND in inner.provenance:
        raise UnsupportedError("wreath construction needs an exact inner table")
    if inner.field is not None:
        require_char_ne(inner.field, p, f"wr({p}, -)")
        if not contains_mu(inner.field, p):
            raise UnsupportedError(
                f"wreath tables need the {p}-th roots of unity in the base field"
            )
    out = cyclic_power_codim(graded.from_table(inner), p)
    group = Wreath(p, inner.group) if inner.group is not None else None
    return graded.to_table(out).with_metadata(
        group=group, field=inner.field, provenance=inner.provenance
    )


def chow_symmetric_local(n: int, p: int, k: FieldDescriptor, bound: int) -> ChowTable:
    """p-localized table of CH^*(BS_n): supported while the p-Sylow subgroup
    is trivial (n < p) or cyclic of order p (p <= n < 2p).

    In the cyclic case the normalizer acts on the Sylow subgroup through
    the full scalar group, so the stable classes are the scalar invariants:
    one Z/p in every positive degree divisible by p - 1.  The outcome is
    the same for every base field of characteristic != p.
    """
    require_prime(p)
    if n < 1:
        raise ValueError("n must be >= 1")
    require_char_ne(k, p, f"the {p}-local table of S_{n}")
    if n >= 2 * p:
        raise UnsupportedError(
            f"the {p}-Sylow subgroup of S_{n} is not cyclic; the stable-element "
            "computation beyond prime-order Sylow subgroups is not available"
        )
    data: dict[int, tuple[int, tuple[int, ...]]] = {0: (1, ())}
    if n >= p:
        for d in range(1, bound + 1):
            if d % (p - 1) == 0:
                data[d] = (0, (p,))
    rows = tuple(DegreeRow(d, *data.get(d, (0, ()))) for d in range(bound + 1))
    return ChowTable(
        rows=rows,
        bound=bound,
        group=Symmetric(n),
        field=k,
        localization=Localization("at_prime", p),
        provenance=(EXACT,),
    )


def chow_symmetric_sylow_bound(
    n: int, p: int, bound: int, field: FieldDescriptor = COMPLEX
) -> ChowTable:
    """Exact table of the p-Sylow subgroup of S_n, an upper bound containing
    the p-local Chow groups of BS_n as a split summand."""
    require_prime(p)
    require_char_ne(field, p, f"the {p}-Sylow table of S_{n}")
    if not contains_mu(field, p):
        raise UnsupportedError(
            f"Sylow wreath towers need the {p}-th roots of unity in the base field"
        )
    profile = sylow_profile(n, p)
    table = chow_model(profile.group(), field, bound)
    return table.with_metadata(provenance=(EXACT, UPPER_BOUND))


def chow_integral_symmetric(n: int, bound: int, field: FieldDescriptor = COMPLEX) -> ChowTable:
    """Integral table of CH^*(BS_n) for n <= 3: degree 0 is Z and each
    positive degree is the direct sum of the p-local torsion over p <= n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 3:
        raise UnsupportedError(
            f"the integral table of S_{n} for n >= 4 needs stable elements for a "
            "non-cyclic 2-Sylow subgroup, which is outside this catalog"
        )
    if field.characteristic != 0 and field.characteristic <= n:
        raise UnsupportedError(
            f"the integral table of S_{n} mixes all primes <= {n}, so the "
            f"characteristic must be 0 or larger than {n}"
        )
    torsion: dict[int, list[int]] = {}
    for p in (2, 3):
        if p > n:
            continue
        local = chow_symmetric_local(n, p, field, bound)
        for row in local.rows:
            if row.degree > 0 and row.torsion:
                torsion.setdefault(row.degree, []).extend(row.torsion)
    rows = tuple(
        DegreeRow(d, 1 if d == 0 else 0, tuple(torsion.get(d, ())))
        for d in range(bound + 1)
    )
    return ChowTable(
        rows=rows,
        bound=bound,
        group=Symmetric(n),
        field=field,
        localization=INTEGRAL,
        provenance=(EXACT,),
    )


def chow_model_localized(g: GroupExpr, k: FieldDescriptor, bound: int, p: int) -> ChowTable:
    """p-local table: symmetric groups use their dedicated local route,
    everything else localizes the integral table."""
    require_prime(p)
    if isinstance(g, Symmetric):
        return chow_symmetric_local(g.n, p, k, bound)
    return localize_table(chow_model(g, k, bound), p)


def chow_model_mod_p(g: GroupExpr, k: FieldDescriptor, bound: int, p: int) -> ChowTable:
    return mod_p_table(chow_model_localized(g, k, bound, p), p)
