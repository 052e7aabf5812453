"""Exact brute-force local Milnor numbers for plane-curve germs.

Independent oracle used by the test suite to pin the sectional Milnor
numbers stored in the catalog.  The Milnor number of an isolated curve
germ g(x, y) at the origin is the local intersection multiplicity of its
two partials, computed here as the dimension of the truncated local
algebra

    Q[x, y] / (g_x, g_y, m^N)      (m = (x, y))

for growing N.  Once two consecutive truncation orders give the same
dimension, Nakayama's lemma forces m^N into the ideal and the dimension
equals the Milnor number exactly.  All linear algebra is fraction-free
integer elimination, so the result is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from polardeg.poly import Polynomial


def _integer_rank(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix by Bareiss fraction-free elimination."""
    matrix = [row[:] for row in rows if any(row)]
    if not matrix:
        return 0
    ncols = len(matrix[0])
    rank = 0
    prev_pivot = 1
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, len(matrix)) if matrix[r][col] != 0), None)
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][col]
        for r in range(rank + 1, len(matrix)):
            factor = matrix[r][col]
            if factor == 0 and pivot == prev_pivot:
                continue
            row = matrix[r]
            top = matrix[rank]
            for c in range(col, ncols):
                row[c] = (pivot * row[c] - factor * top[c]) // prev_pivot
        prev_pivot = pivot
        rank += 1
        if rank == len(matrix):
            break
    return rank


def _integer_terms(g: Polynomial) -> dict[tuple[int, ...], int]:
    denominator = lcm(*(c.denominator for c in g.terms.values())) if len(g) else 1
    return {exps: int(c * denominator) for exps, c in g.terms.items()}


def truncated_quotient_dim(generators: list[Polynomial], order: int) -> int:
    """dim of Q[x,y] / (ideal + m^order) as a vector space."""
    monomials = [(i, j) for total in range(order) for i in range(total + 1) for j in [total - i]]
    index = {m: k for k, m in enumerate(monomials)}
    rows: list[list[int]] = []
    for g in generators:
        terms = _integer_terms(g)
        for (a, b) in monomials:
            row = [0] * len(monomials)
            hit = False
            for (i, j), c in terms.items():
                if i + a + j + b < order:
                    row[index[(i + a, j + b)]] += c
                    hit = True
            if hit:
                rows.append(row)
    return len(monomials) - _integer_rank(rows)


def local_milnor(g: Polynomial, max_order: int = 24) -> int:
    """Milnor number of the plane-curve germ g at the origin.

    Raises if the dimension fails to stabilize, which signals a
    non-isolated singularity (or an order budget too small)."""
    if g.nvars != 2:
        raise ValueError("local_milnor expects a polynomial in two variables")
    gx, gy = g.diff(0), g.diff(1)
    previous = None
    for order in range(2, max_order + 1):
        dim = truncated_quotient_dim([gx, gy], order)
        if previous is not None and dim == previous:
            return dim
        previous = dim
    raise ValueError(f"local algebra dimension did not stabilize below order {max_order}: non-isolated germ?")


def section_milnor(h: Polynomial, a: Fraction, b: Fraction) -> int:
    """Milnor number of the plane section z = a*x + b*y of a germ h(x, y, z)."""
    if h.nvars != 3:
        raise ValueError("section_milnor expects a polynomial in three variables")
    x = Polynomial.variable(0, 2)
    y = Polynomial.variable(1, 2)
    section = h.compose([x, y, x * a + y * b])
    return local_milnor(section)


def generic_section_milnor(h: Polynomial) -> int:
    """Milnor number of a generic plane section through the origin.

    Two independent slopes must agree, otherwise one of them was
    non-generic and the caller should not trust the value."""
    first = section_milnor(h, Fraction(2, 3), Fraction(-3, 5))
    second = section_milnor(h, Fraction(-5, 7), Fraction(1, 2))
    if first != second:
        raise ValueError(f"section Milnor numbers disagree ({first} vs {second}): slopes not generic")
    return first
