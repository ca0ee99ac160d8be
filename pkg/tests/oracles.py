"""Independent oracles used by the test suite.

Each oracle recomputes a quantity by a different route from the library
(exhaustive enumeration, generating-function recurrences, brute-force
invariant checks), so that library and oracle can only agree by being
right.
"""

from __future__ import annotations

from itertools import product as cartesian
from math import gcd


def monomial_table(generators, relations, bound):
    """Brute-force monomial enumeration of a coefficient-relation presentation.

    generators: list of (name, degree); relations: {name: coefficient}.
    Returns {degree: (free_rank, sorted list of torsion orders)}.
    """
    ranges = [range(bound // d + 1) for _, d in generators]
    out = {d: [0, []] for d in range(bound + 1)}
    for exponents in cartesian(*ranges):
        degree = sum(e * d for e, (_, d) in zip(exponents, generators))
        if degree > bound:
            continue
        coeffs = [
            relations[name]
            for e, (name, _) in zip(exponents, generators)
            if e > 0 and name in relations
        ]
        if not coeffs:
            out[degree][0] += 1
        else:
            order = 0
            for c in coeffs:
                order = gcd(order, c)
            if order != 1:
                out[degree][1].append(order)
    return {d: (rank, sorted(tors)) for d, (rank, tors) in out.items()}


def poincare_coefficients(degrees, bound):
    """Coefficients of prod_d 1/(1 - t**d) through t**bound."""
    coeffs = [1] + [0] * bound
    for d in degrees:
        for i in range(d, bound + 1):
            coeffs[i] += coeffs[i - d]
    return coeffs


def scalar_invariant_degrees(p, bound):
    """Degrees i <= bound on which every unit scalar acts trivially: the
    monomial x**i is fixed by x -> c*x for all c in (Z/p)^* iff c**i = 1."""
    return [
        i for i in range(bound + 1) if all(pow(c, i, p) == 1 for c in range(1, p))
    ]


def galois_exponent_by_search(p, i, max_r=64):
    """Exponent c with fixed subgroup ker(p**c), by exhaustive search for a
    factorization i = a * p**r * (p - 1) with a prime to p; None if impossible."""
    for r in range(max_r):
        block = p**r * (p - 1)
        if i % block == 0 and (i // block) % p != 0:
            return r + 1
    return None


def rotation_orbits(n, p):
    """All rotation orbits of p-tuples over {0..n-1}, as frozensets."""
    orbits = set()
    for t in cartesian(range(n), repeat=p):
        orbits.add(frozenset(t[k:] + t[:k] for k in range(p)))
    return orbits


def cyclic_square_of_plane():
    """Chow groups of the square-of-a-plane cyclic quotient, by excision.

    The quotient splits as (plane) x (plane / sign).  The sign quotient of
    a plane is a quadric cone, stratified by a line (the image of one axis)
    and a complementary stratum isomorphic to line x (line - point): the
    open stratum gives an infinite cyclic class in dimension 2 and the
    closed one a dimension-1 class killed by 2, the attaching multiplicity
    of the doubled axis.  Multiplying by the plane shifts everything up by
    two dimensions.

    Returns {dimension: list of orders} for the product, ambient 4.
    """
    cone = {2: [0], 1: [2], 0: []}
    return {dim + 2: orders for dim, orders in cone.items()}
