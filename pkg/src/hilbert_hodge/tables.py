"""Assembled cohomology tables: graded pieces, dimensions, weights.

This module turns the closed-form combinatorics into the final answers for
an irreducible non-trivial local system ``V_m`` on a Hilbert modular variety
of dimension ``n`` with ``h`` cusps and geometric genus ``g``:

* the only non-vanishing degrees are ``n <= k <= 2n - 1``; everything above
  the middle degree is boundary (Eisenstein) cohomology and exists only when
  all ``m_i`` are equal;
* ``H^n`` splits over the reals into the middle intersection cohomology, of
  pure weight ``|m| + n``, and an Eisenstein piece of Hodge-Tate type
  ``(|m| + n, |m| + n)`` and weight ``2(|m| + n)``;
* with ``D = (g + (-1)^n) * rank`` the middle Hodge numbers are
  ``h^{P,Q} = N(m, P) * D`` for ``P + Q = |m| + n``, plus ``h`` on the
  Hodge-Tate corner in the parallel case.

The graded pieces of the Hodge filtration are sums of sheaf cohomology
groups of the monomials ``C_I``; their dimensions form a small closed
dictionary (:func:`sheaf_cohomology_dim`).  Labels outside the dictionary
raise :class:`DictionaryMiss` rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import DictionaryMiss
from .kunneth import weight_counts
from .model import (
    LineBundleMonomial,
    LocalSystemSpec,
    SheafCohomologyLabel,
    VarietyInvariants,
    require_table_mode,
)

NOTE_VANISHES = "vanishes"
NOTE_COMPUTED = ""


def gr_F_labels(
    spec: LocalSystemSpec, k: int
) -> dict[int, tuple[SheafCohomologyLabel, ...]]:
    """Graded pieces of the Hodge filtration on ``H^k`` as label lists.

    For each subset ``I`` with ``k - |I| >= 0`` the piece at
    ``P = |m_I| + |I|`` receives the label ``H^{k-|I|}(Xbar, C_I)``.
    """
    if not 0 <= k <= 2 * spec.n:
        raise ValueError(f"degree k must lie in [0, {2 * spec.n}], got {k}")
    n = spec.n
    m = spec.m
    out: dict[int, list[SheafCohomologyLabel]] = {}
    for l in range(min(n, k) + 1):
        for wedge in combinations(range(n), l):
            chosen = set(wedge)
            P = sum(m[i] + 1 for i in wedge)
            mono = LineBundleMonomial(
                tuple(m[i] + 2 if i in chosen else -m[i] for i in range(n))
            )
            out.setdefault(P, []).append(SheafCohomologyLabel(k - l, mono))
    return {P: tuple(sorted(labels)) for P, labels in out.items()}


def _subset_of_label(
    exponents: tuple[int, ...], m: tuple[int, ...]
) -> frozenset[int] | None:
    """Recover ``I`` from the exponents of ``C_I``, or None if no match.

    Unambiguous because ``m_i + 2 > 0 >= -m_i`` for every ``i``.
    """
    chosen = set()
    for i, s in enumerate(exponents):
        if s == m[i] + 2:
            chosen.add(i)
        elif s != -m[i]:
            return None
    return frozenset(chosen)


def sheaf_cohomology_dim(
    label: SheafCohomologyLabel, spec: LocalSystemSpec, inv: VarietyInvariants
) -> int:
    """Dimension dictionary for the sheaf cohomology groups the tables use.

    With ``D`` the dimension of square-integrable sections and ``e = h`` in
    the parallel case (else 0):

    * ``H^j(Xbar, prod L_i^{m_i+2})`` is ``D + e`` for ``j = 0`` and
      ``binom(n-1, j) * e`` for ``0 < j < n``;
    * ``H^0(Xbar, O(-S) prod L_i^{m_i+2})`` is ``D``;
    * ``H^0(S, prod L_i^{m_i+2}|_S)`` is ``e``;
    * ``H^{n-|I|}(Xbar, C_I)`` is ``D`` for every proper subset ``I``;
    * ``H^j(Xbar, prod L_i^{-m_i})`` is ``0`` for ``j < n``.

    Everything else raises :class:`DictionaryMiss`; in particular the
    dictionary never extrapolates ``H^j(Xbar, C_I)`` to degrees ``j``
    other than ``n - |I|``.
    """
    n = spec.n
    m = spec.m
    D = inv.l2_dim(spec)
    e = inv.cusps if spec.is_parallel else 0
    plus_two = tuple(mi + 2 for mi in m)
    j = label.degree
    exps = label.monomial.exponents
    if len(exps) != n:
        raise DictionaryMiss(f"label {label} has rank {len(exps)}, spec has n={n}")

    if label.restricted_to_S:
        if j == 0 and exps == plus_two:
            return e
        raise DictionaryMiss(f"no dictionary entry for {label}")

    if label.monomial.minus_S:
        if j == 0 and exps == plus_two:
            return D
        raise DictionaryMiss(f"no dictionary entry for {label}")

    if exps == plus_two:
        if j == 0:
            return D + e
        if 1 <= j <= n - 1:
            return comb(n - 1, j) * e
        raise DictionaryMiss(f"no dictionary entry for {label}")

    chosen = _subset_of_label(exps, m)
    if chosen is None:
        raise DictionaryMiss(f"{label} is not of the form H^j(Xbar, C_I)")
    if not chosen and j < n:
        return 0
    if j == n - len(chosen):
        return D
    raise DictionaryMiss(
        f"no dictionary entry for {label} (only degree {n - len(chosen)} of "
        "this monomial is determined)"
    )


@dataclass
class IhTable:
    """Intersection cohomology: total dimensions and middle Hodge numbers.

    ``dims[k]`` is ``dim IH^k`` for ``0 <= k <= 2n`` (zero off the middle),
    ``hodge[(P, Q)]`` the middle Hodge numbers ``N(m, P) * D``.
    """

    spec: LocalSystemSpec
    inv: VarietyInvariants
    dims: tuple[int, ...]
    hodge: dict[tuple[int, int], int]

    @property
    def middle_dim(self) -> int:
        return self.dims[self.spec.n]


def ih_table(spec: LocalSystemSpec, inv: VarietyInvariants) -> IhTable:
    """Full intersection-cohomology table of the system."""
    require_table_mode(spec)
    n = spec.n
    D = inv.l2_dim(spec)
    counts = weight_counts(spec.m)
    w = spec.weight + n
    hodge = {}
    for P, N in enumerate(counts):
        if N and D:
            hodge[(P, w - P)] = N * D
    dims = [0] * (2 * n + 1)
    dims[n] = 2**n * D
    assert sum(hodge.values()) == dims[n]
    return IhTable(spec, inv, tuple(dims), hodge)


@dataclass
class EisensteinDatum:
    """Boundary cohomology in one degree.

    ``per_cusp_basis`` lists, once per class at the standard cusp, the
    subset ``a`` of ``{1..n-1}`` together with the exponent pair
    ``(alpha, beta)`` of the series attached to it; every cusp contributes
    an identical copy, so the total dimension is ``len(basis) * cusps``.
    """

    k: int
    cusps: int
    per_cusp_basis: tuple[
        tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]], ...
    ] = ()

    @property
    def dim(self) -> int:
        return len(self.per_cusp_basis) * self.cusps


def eisenstein_data(
    spec: LocalSystemSpec, inv: VarietyInvariants, k: int
) -> EisensteinDatum:
    """Boundary classes in degree ``k`` with their series exponents.

    Non-empty only when all ``m_i`` are equal and ``n <= k <= 2n - 1``.
    Each class is indexed by a subset ``a`` of ``{1..n-1}`` of size
    ``k - n``; its series has exponents ``alpha_i = m_1 + 1`` on ``a`` and
    ``m_1 + 2`` off it, ``beta_i = 1`` on ``a`` and ``0`` off it.
    """
    require_table_mode(spec)
    n = spec.n
    if not (spec.is_parallel and n <= k <= 2 * n - 1):
        return EisensteinDatum(k, inv.cusps)
    m1 = spec.m[0]
    basis = []
    for a in combinations(range(1, n), k - n):
        members = set(a)
        alpha = tuple(m1 + 1 if i in members else m1 + 2 for i in range(1, n + 1))
        beta = tuple(1 if i in members else 0 for i in range(1, n + 1))
        basis.append((a, alpha, beta))
    datum = EisensteinDatum(k, inv.cusps, tuple(basis))
    assert datum.dim == comb(n - 1, k - n) * inv.cusps
    return datum


@dataclass
class MhsRow:
    """Mixed Hodge structure of ``H^k`` in one degree.

    ``weights`` lists the non-zero weight levels as ``(weight, dim)`` pairs,
    ``hodge`` the non-zero Hodge numbers, ``splitting`` the pair
    ``(intersection part, Eisenstein part)``, and ``gr_f`` the labels of the
    graded pieces of the Hodge filtration.
    """

    k: int
    dim: int
    weights: tuple[tuple[int, int], ...]
    hodge: dict[tuple[int, int], int]
    splitting: tuple[int, int]
    gr_f: dict[int, tuple[SheafCohomologyLabel, ...]]
    note: str = NOTE_COMPUTED


@dataclass
class MhsTable:
    """The complete table, one :class:`MhsRow` per degree ``0..2n``.

    ``mhs_field`` records whether the structure is defined over the
    rationals (all weights equal) or only over the reals.
    """

    spec: LocalSystemSpec
    inv: VarietyInvariants
    rows: dict[int, MhsRow] = field(default_factory=dict)
    mhs_field: str = "R"

    @property
    def middle(self) -> MhsRow:
        return self.rows[self.spec.n]


def mhs_table(spec: LocalSystemSpec, inv: VarietyInvariants) -> MhsTable:
    """Assemble the full mixed-Hodge-structure table of the system."""
    require_table_mode(spec)
    n = spec.n
    w = spec.weight + n
    D = inv.l2_dim(spec)
    counts = weight_counts(spec.m)
    table = MhsTable(spec, inv, mhs_field="Q" if spec.is_parallel else "R")

    for k in range(2 * n + 1):
        gr_f = gr_F_labels(spec, k)
        if k < n or k == 2 * n:
            table.rows[k] = MhsRow(
                k, 0, (), {}, (0, 0), gr_f, note=NOTE_VANISHES
            )
            continue

        eis = eisenstein_data(spec, inv, k)
        if k == n:
            ih_part = 2**n * D
            eis_part = eis.dim
            hodge = {}
            for P, N in enumerate(counts):
                if N and D:
                    hodge[(P, w - P)] = N * D
            if eis_part:
                # (w, w) cannot collide with a (P, w - P) entry since w >= 2
                hodge[(w, w)] = eis_part
            weights = []
            if ih_part:
                weights.append((w, ih_part))
            if eis_part:
                weights.append((2 * w, eis_part))
            table.rows[k] = MhsRow(
                k,
                ih_part + eis_part,
                tuple(weights),
                hodge,
                (ih_part, eis_part),
                gr_f,
            )
        else:
            dim = eis.dim
            hodge = {(w, w): dim} if dim else {}
            weights = ((2 * w, dim),) if dim else ()
            note = NOTE_COMPUTED if dim else NOTE_VANISHES
            table.rows[k] = MhsRow(k, dim, weights, hodge, (0, dim), gr_f, note=note)

    middle = table.rows[n]
    assert sum(middle.hodge.values()) == middle.dim
    if __debug__:
        _assert_gr_f_consistency(table)
    return table


def _assert_gr_f_consistency(table: MhsTable) -> None:
    """Column sums of the Hodge numbers must match the resolvable labels.

    Pieces whose labels fall outside the dimension dictionary are skipped;
    they carry no dimension claim.
    """
    for row in table.rows.values():
        for P, labels in row.gr_f.items():
            try:
                total = sum(
                    sheaf_cohomology_dim(lb, table.spec, table.inv)
                    for lb in labels
                )
            except DictionaryMiss:
                continue
            column = sum(d for (p, _), d in row.hodge.items() if p == P)
            assert total == column, (
                f"Gr_F^{P} of H^{row.k} resolves to {total} but the Hodge "
                f"numbers give {column}"
            )
