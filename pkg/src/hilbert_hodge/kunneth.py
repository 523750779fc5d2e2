"""Closed-form cohomology-sheaf matrices and the subset combinatorics.

For the multi-weight ``m`` the cohomology sheaves of the logarithmic Higgs
complex are direct sums of line bundles indexed by subsets ``I`` of
``{1..n}``:

    C_I = prod_{i in I} L_i^{m_i + 2} * prod_{i not in I} L_i^{-m_i},

and ``C_I`` sits in the cell ``(P, l) = (|m_I| + |I|, |I|)``.  The whole
matrix is multiplicative: it is the Kunneth product of the ``n``
single-factor matrices.  ``N(m, P)`` counts the subsets landing at a given
``P`` and is the multiplicity pattern of the middle Hodge decomposition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .errors import BadDegree
from .model import LineBundleMonomial, LocalSystemSpec


def _normalized(cells: dict) -> dict:
    """Drop zero multiplicities and empty cells so dict equality is honest."""
    out = {}
    for key, counter in cells.items():
        if not counter:
            continue
        if any(k <= 0 for k in counter.values()):
            counter = Counter({mono: k for mono, k in counter.items() if k > 0})
            if not counter:
                continue
        elif not isinstance(counter, Counter):
            counter = Counter(counter)
        out[key] = counter
    return out


@dataclass
class SheafMatrix:
    """Multisets of line-bundle monomials indexed by cells ``(P, l)``.

    ``cells[(P, l)]`` is a Counter of monomials.  Treat instances as
    immutable once built.
    """

    n: int
    m: tuple[int, ...]
    cells: dict[tuple[int, int], Counter] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.cells = _normalized(self.cells)

    def sorted_cells(self) -> list[tuple[tuple[int, int], list[LineBundleMonomial]]]:
        return [
            (key, sorted(self.cells[key].elements())) for key in sorted(self.cells)
        ]

    def cardinality(self, P: int, l: int) -> int:
        return sum(self.cells.get((P, l), Counter()).values())


def unit_matrix() -> SheafMatrix:
    """Empty-product unit: n = 0 with a single trivial monomial at (0, 0)."""
    return SheafMatrix(0, (), {(0, 0): Counter({LineBundleMonomial(()): 1})})


def cohomology_sheaf_closed_form(spec: LocalSystemSpec) -> SheafMatrix:
    """The full sheaf matrix of ``m``: one monomial ``C_I`` per subset ``I``."""
    n = spec.n
    m = spec.m
    base = [-mi for mi in m]
    cells: dict[tuple[int, int], Counter] = {}
    for l in range(n + 1):
        for wedge in combinations(range(n), l):
            exps = base.copy()
            P = l
            for i in wedge:
                exps[i] = m[i] + 2
                P += m[i]
            mono = LineBundleMonomial(tuple(exps))
            cells.setdefault((P, l), Counter())[mono] += 1
    return SheafMatrix(n, m, cells)


def single_factor_matrix(mi: int) -> SheafMatrix:
    """Sheaf matrix of one upper-half-plane factor of weight ``mi``."""
    return cohomology_sheaf_closed_form(LocalSystemSpec(1, (mi,)))


def kunneth_product(a: SheafMatrix, b: SheafMatrix) -> SheafMatrix:
    """Kunneth product: convolve cells, juxtapose monomials.

    The factors live over disjoint index sets, so exponent vectors are
    concatenated in order.
    """
    cells: dict[tuple[int, int], dict] = {}
    for (p1, l1), c1 in a.cells.items():
        for (p2, l2), c2 in b.cells.items():
            target = cells.setdefault((p1 + p2, l1 + l2), {})
            for mono1, k1 in c1.items():
                for mono2, k2 in c2.items():
                    key = mono1.concat(mono2)
                    target[key] = target.get(key, 0) + k1 * k2
    return SheafMatrix(a.n + b.n, a.m + b.m, cells)


def count_N(m, P: int) -> int:
    """Number of subsets ``I`` of ``{1..n}`` with ``|m_I| + |I| = P``.

    Branch-and-bound over the sorted weights ``m_i + 1``; exact for any n,
    practical up to n = 64 because each element contributes at least 1.
    """
    weights = sorted((int(mi) + 1 for mi in m), reverse=True)
    if any(w <= 0 for w in weights):
        raise BadDegree(f"all weights must be >= 0, got m = {tuple(m)}")
    n = len(weights)
    if n > 64:
        raise BadDegree(f"subset counting supports n <= 64, got n = {n}")
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + weights[i]

    def rec(idx: int, need: int) -> int:
        if need == 0:
            return 1
        if need < 0 or suffix[idx] < need:
            return 0
        return rec(idx + 1, need - weights[idx]) + rec(idx + 1, need)

    return rec(0, P)


def weight_counts(m) -> tuple[int, ...]:
    """All of ``N(m, P)`` at once, via the product ``prod_i (1 + x^{m_i+1})``.

    Entry ``P`` of the result is ``N(m, P)`` for ``0 <= P <= |m| + n``.
    Agrees with :func:`count_N` everywhere; this is the fast path used by
    table assembly.
    """
    m = tuple(int(mi) for mi in m)
    top = sum(m) + len(m)
    dist = [0] * (top + 1)
    dist[0] = 1
    support = 0
    for mi in m:
        w = mi + 1
        for P in range(support, -1, -1):
            if dist[P]:
                dist[P + w] += dist[P]
        support += w
    return tuple(dist)
