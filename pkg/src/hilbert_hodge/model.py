"""Domain types for Hilbert modular cohomology tables.

Everything downstream is driven by four small immutable values:

* :class:`LocalSystemSpec` -- the multi-weight ``m = (m_1, ..., m_n)`` of an
  irreducible local system, one symmetric-power weight per upper-half-plane
  factor.
* :class:`VarietyInvariants` -- the numerical invariants ``(n, h, g)`` of the
  variety: dimension, number of cusps and geometric genus of a smooth
  compactification.  All geometry enters the dimension formulas through these
  three integers.
* :class:`LineBundleMonomial` -- a formal product ``L_1^{s_1} ... L_n^{s_n}``
  of the basic line bundles on the compactification, optionally twisted by
  ``O(-S)`` where ``S`` is the boundary divisor.
* :class:`SheafCohomologyLabel` -- a monomial together with a cohomological
  degree, i.e. the symbol ``H^k(Xbar, L_1^{s_1}...)``, with an optional
  restriction to ``S``.

All values are frozen and hashable; they can be shared freely between
threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    BadDegree,
    DoubleTwist,
    InconsistentInvariants,
    IncompatibleRank,
    TrivialSystem,
)


@dataclass(frozen=True, order=True)
class LineBundleMonomial:
    """Formal monomial ``prod_i L_i^{s_i}``, optionally twisted by ``O(-S)``.

    The ordering (inherited from the exponent tuple, with the twist flag as a
    tie-breaker) is the canonical one used to sort multisets of monomials.
    """

    exponents: tuple[int, ...]
    minus_S: bool = False

    def __hash__(self) -> int:
        # monomials are hashed millions of times in the sweeps; cache it
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.exponents, self.minus_S))
            object.__setattr__(self, "_hash", h)
        return h

    @property
    def n(self) -> int:
        return len(self.exponents)

    @classmethod
    def identity(cls, n: int) -> "LineBundleMonomial":
        return cls((0,) * n)

    def __mul__(self, other: "LineBundleMonomial") -> "LineBundleMonomial":
        return monomial_mul(self, other)

    def twist_minus_S(self) -> "LineBundleMonomial":
        if self.minus_S:
            raise DoubleTwist("monomial already carries the O(-S) twist")
        return LineBundleMonomial(self.exponents, minus_S=True)

    def concat(self, other: "LineBundleMonomial") -> "LineBundleMonomial":
        """Juxtapose two monomials over disjoint factor sets (Kunneth side)."""
        if self.minus_S and other.minus_S:
            raise DoubleTwist("cannot concatenate two O(-S)-twisted monomials")
        return LineBundleMonomial(
            self.exponents + other.exponents, minus_S=self.minus_S or other.minus_S
        )

    def __str__(self) -> str:
        parts = [f"L{i + 1}^{s}" for i, s in enumerate(self.exponents) if s != 0]
        body = " ".join(parts) if parts else "1"
        return f"O(-S) {body}" if self.minus_S else body

    def latex(self) -> str:
        parts = [
            f"\\mathcal{{L}}_{{{i + 1}}}^{{{s}}}"
            for i, s in enumerate(self.exponents)
            if s != 0
        ]
        body = "".join(parts) if parts else "\\mathcal{O}"
        if self.minus_S:
            return f"\\mathcal{{O}}(-S)\\otimes {body}"
        return body


def monomial_mul(a: LineBundleMonomial, b: LineBundleMonomial) -> LineBundleMonomial:
    """Multiply two monomials over the same factor set (exponents add)."""
    if a.n != b.n:
        raise IncompatibleRank(f"cannot multiply monomials of rank {a.n} and {b.n}")
    if a.minus_S and b.minus_S:
        raise DoubleTwist("product would carry the O(-S) twist twice")
    exps = tuple(x + y for x, y in zip(a.exponents, b.exponents))
    return LineBundleMonomial(exps, minus_S=a.minus_S or b.minus_S)


@dataclass(frozen=True, order=True)
class SheafCohomologyLabel:
    """The symbol ``H^degree(Xbar, monomial)``, or ``H^degree(S, monomial|_S)``
    when ``restricted_to_S`` is set.

    Restriction to ``S`` and the ``O(-S)`` twist exclude each other.
    """

    degree: int
    monomial: LineBundleMonomial
    restricted_to_S: bool = False

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise BadDegree(f"cohomological degree must be >= 0, got {self.degree}")
        if self.restricted_to_S and self.monomial.minus_S:
            raise DoubleTwist("a monomial restricted to S cannot carry O(-S)")

    def __str__(self) -> str:
        if self.restricted_to_S:
            return f"H^{self.degree}(S, {self.monomial}|_S)"
        return f"H^{self.degree}(Xbar, {self.monomial})"


@dataclass(frozen=True)
class LocalSystemSpec:
    """Multi-weight ``m`` of an irreducible local system on a product of
    ``n`` upper half planes.

    ``n = 1`` is legal for the chain-complex engine (so the oracle can be
    unit-tested against hand computations) but rejected by table assembly,
    which needs an honest Hilbert modular variety with ``n >= 2``.
    """

    n: int
    m: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise BadDegree(f"need n >= 1 upper-half-plane factors, got {self.n}")
        if len(self.m) != self.n:
            raise BadDegree(f"m has length {len(self.m)}, expected n = {self.n}")
        if any(mi < 0 for mi in self.m):
            raise BadDegree(f"all weights must be >= 0, got m = {self.m}")

    @property
    def rank(self) -> int:
        """Rank of the local system, prod (m_i + 1)."""
        return math.prod(mi + 1 for mi in self.m)

    @property
    def weight(self) -> int:
        """Total weight |m| = sum m_i of the variation of Hodge structure."""
        return sum(self.m)

    @property
    def is_parallel(self) -> bool:
        """True when m_1 = ... = m_n (the case with boundary cohomology)."""
        return all(mi == self.m[0] for mi in self.m)

    @property
    def is_trivial(self) -> bool:
        return all(mi == 0 for mi in self.m)

    @property
    def engine_only(self) -> bool:
        """True when the spec is usable by the oracle but not by tables."""
        return self.n < 2

    def describe(self) -> str:
        return f"n={self.n} m={self.m} rank={self.rank} |m|={self.weight}"


def validate_spec(n: int, m, *, table: bool = False) -> LocalSystemSpec:
    """Validate ``(n, m)`` and return the spec with its derived data.

    With ``table=True`` the stricter table-assembly rules apply: ``n >= 2``
    and a non-trivial system.  Without it the engine rules apply (``n >= 1``,
    any non-negative weights), which is what the homology oracle needs.
    """
    m = tuple(int(mi) for mi in m)
    if n < 1:
        raise BadDegree(f"need n >= 1 upper-half-plane factors, got {n}")
    if len(m) != n:
        raise BadDegree(f"m has length {len(m)}, expected n = {n}")
    if any(mi < 0 for mi in m):
        raise BadDegree(f"all weights must be >= 0, got m = {m}")
    if table:
        if n < 2:
            raise BadDegree(
                f"cohomology tables need a variety of dimension n >= 2, got n = {n}"
            )
        if all(mi == 0 for mi in m):
            raise TrivialSystem(
                "trivial local system: tables cover non-trivial systems only"
            )
    return LocalSystemSpec(n, m)


def require_table_mode(spec: LocalSystemSpec) -> None:
    """Re-check the table-assembly rules on an already built spec."""
    validate_spec(spec.n, spec.m, table=True)


@dataclass(frozen=True)
class VarietyInvariants:
    """Numerical invariants of the compactified variety.

    ``cusps`` counts the boundary points of the minimal compactification and
    ``genus`` is ``h^{n,0}`` of a smooth one; the intermediate Hodge numbers
    ``h^{p,0}`` vanish for ``0 < p < n``, so the arithmetic genus is
    ``chi_O = 1 + (-1)^n * genus``.

    ``genus + (-1)^n < 0`` (only possible for genus 0 in odd dimension) would
    make the universal summand dimension negative, so such inputs are
    rejected as inconsistent rather than clamped.
    """

    n: int
    cusps: int
    genus: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise BadDegree(f"a Hilbert modular variety has n >= 2, got {self.n}")
        if self.cusps < 1:
            raise InconsistentInvariants(
                f"the variety is non-compact, need cusps >= 1, got {self.cusps}"
            )
        if self.genus < 0:
            raise InconsistentInvariants(f"genus must be >= 0, got {self.genus}")
        if self.genus + (-1) ** self.n < 0:
            raise InconsistentInvariants(
                f"genus {self.genus} in odd dimension {self.n} gives a negative "
                "space of square-integrable sections; the invariants are "
                "inconsistent"
            )

    @property
    def chi_O(self) -> int:
        """Euler characteristic of the structure sheaf, 1 + (-1)^n * genus."""
        return 1 + (-1) ** self.n * self.genus

    def l2_dim(self, spec: LocalSystemSpec) -> int:
        """Dimension of the square-integrable sections of the top Hodge
        bundle: ``(genus + (-1)^n) * rank``.

        This single number is the universal summand dimension in the Hodge
        decomposition of the middle intersection cohomology.
        """
        if spec.n != self.n:
            raise IncompatibleRank(
                f"spec has n = {spec.n} but invariants have n = {self.n}"
            )
        d = (self.genus + (-1) ** self.n) * spec.rank
        assert d >= 0
        return d

    def describe(self) -> str:
        return f"n={self.n} cusps={self.cusps} genus={self.genus} chi_O={self.chi_O}"
