import pytest
from hypothesis import given, strategies as st

from hilbert_hodge import (
    BadDegree,
    DoubleTwist,
    InconsistentInvariants,
    IncompatibleRank,
    LineBundleMonomial,
    LocalSystemSpec,
    SheafCohomologyLabel,
    TrivialSystem,
    VarietyInvariants,
    monomial_mul,
    validate_spec,
)


class TestValidateSpec:
    def test_parallel_rank_four(self):
        spec = validate_spec(2, (1, 1))
        assert spec.rank == 4
        assert spec.weight == 2
        assert spec.is_parallel
        assert not spec.engine_only

    def test_trivial_rejected_in_table_mode(self):
        with pytest.raises(TrivialSystem):
            validate_spec(2, (0, 0), table=True)
        # engine mode accepts it
        assert validate_spec(2, (0, 0)).is_trivial

    def test_mixed_weights(self):
        spec = validate_spec(3, (2, 0, 1))
        assert spec.rank == 6
        assert spec.weight == 3
        assert not spec.is_parallel

    def test_engine_only_flag(self):
        assert validate_spec(1, (2,)).engine_only
        with pytest.raises(BadDegree):
            validate_spec(1, (2,), table=True)

    @pytest.mark.parametrize(
        "n,m",
        [(0, ()), (-1, ()), (2, (1,)), (2, (1, -1)), (2, (1, 1, 1))],
    )
    def test_bad_degrees(self, n, m):
        with pytest.raises(BadDegree):
            validate_spec(n, m)

    def test_direct_construction_validates_too(self):
        with pytest.raises(BadDegree):
            LocalSystemSpec(2, (1,))


class TestMonomials:
    def test_product_adds_exponents(self):
        a = LineBundleMonomial((3, 0))
        b = LineBundleMonomial((-1, 2))
        assert (a * b).exponents == (2, 2)

    def test_identity(self):
        a = LineBundleMonomial((1, 1))
        assert a * LineBundleMonomial.identity(2) == a

    def test_inverse(self):
        a = LineBundleMonomial((0, 2, -2))
        b = LineBundleMonomial((0, -2, 2))
        assert (a * b) == LineBundleMonomial.identity(3)

    def test_rank_mismatch(self):
        with pytest.raises(IncompatibleRank):
            monomial_mul(LineBundleMonomial((1,)), LineBundleMonomial((1, 2)))

    def test_double_twist(self):
        a = LineBundleMonomial((1,), minus_S=True)
        with pytest.raises(DoubleTwist):
            monomial_mul(a, a)
        # a single twist survives multiplication
        b = LineBundleMonomial((2,))
        assert (a * b).minus_S

    @given(
        st.integers(1, 4).flatmap(
            lambda n: st.tuples(
                *(
                    st.tuples(*(st.integers(-4, 4) for _ in range(n)))
                    for _ in range(3)
                )
            )
        )
    )
    def test_commutative_associative_with_identity(self, triple):
        x, y, z = (LineBundleMonomial(e) for e in triple)
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * LineBundleMonomial.identity(x.n) == x

    def test_str_forms(self):
        assert str(LineBundleMonomial((3, -1))) == "L1^3 L2^-1"
        assert str(LineBundleMonomial((0, 0))) == "1"
        assert str(LineBundleMonomial((2, 2), minus_S=True)) == "O(-S) L1^2 L2^2"


class TestLabels:
    def test_restriction_and_twist_exclusive(self):
        twisted = LineBundleMonomial((3, 3), minus_S=True)
        with pytest.raises(DoubleTwist):
            SheafCohomologyLabel(0, twisted, restricted_to_S=True)

    def test_negative_degree_rejected(self):
        with pytest.raises(BadDegree):
            SheafCohomologyLabel(-1, LineBundleMonomial((1,)))

    def test_str(self):
        lab = SheafCohomologyLabel(1, LineBundleMonomial((3, -1)))
        assert str(lab) == "H^1(Xbar, L1^3 L2^-1)"
        res = SheafCohomologyLabel(0, LineBundleMonomial((3, 3)), restricted_to_S=True)
        assert str(res) == "H^0(S, L1^3 L2^3|_S)"


class TestVarietyInvariants:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    @pytest.mark.parametrize("g", [0, 1, 2, 3])
    def test_chi_identity(self, n, g):
        if g + (-1) ** n < 0:
            return
        inv = VarietyInvariants(n, 1, g)
        assert (-1) ** n * (inv.chi_O - 1) == g
        if n % 2 == 0:
            assert inv.chi_O >= 1
        else:
            assert inv.chi_O <= 1

    def test_negative_l2_rejected(self):
        with pytest.raises(InconsistentInvariants):
            VarietyInvariants(3, 1, 0)

    def test_bad_inputs(self):
        with pytest.raises(BadDegree):
            VarietyInvariants(1, 1, 1)
        with pytest.raises(InconsistentInvariants):
            VarietyInvariants(2, 0, 1)
        with pytest.raises(InconsistentInvariants):
            VarietyInvariants(2, 1, -1)

    def test_l2_dim(self):
        inv = VarietyInvariants(2, 1, 1)
        assert inv.l2_dim(validate_spec(2, (1, 1))) == 8
        assert inv.l2_dim(validate_spec(2, (1, 0))) == 4
        with pytest.raises(IncompatibleRank):
            inv.l2_dim(validate_spec(3, (1, 1, 1)))

    def test_l2_dim_zero_when_genus_one_odd_n(self):
        inv = VarietyInvariants(3, 2, 1)
        assert inv.l2_dim(validate_spec(3, (1, 1, 1))) == 0
