"""Assembled tables against hand-substituted dimension values."""

from itertools import product
from math import comb

import pytest

from hilbert_hodge import (
    DictionaryMiss,
    InconsistentInvariants,
    LineBundleMonomial,
    SheafCohomologyLabel,
    VarietyInvariants,
    eisenstein_data,
    gr_F_labels,
    ih_table,
    mhs_table,
    sheaf_cohomology_dim,
    validate_spec,
)
from hilbert_hodge.errors import BadDegree, TrivialSystem


def mono(*exps, minus_S=False):
    return LineBundleMonomial(tuple(exps), minus_S=minus_S)


def label(degree, *exps, minus_S=False, restricted=False):
    return SheafCohomologyLabel(
        degree, mono(*exps, minus_S=minus_S), restricted_to_S=restricted
    )


class TestGrFLabels:
    def test_middle_degree_interior_piece(self):
        spec = validate_spec(2, (1, 1))
        labels = gr_F_labels(spec, 2)
        assert labels[2] == (label(1, -1, 3), label(1, 3, -1))

    def test_middle_degree_top_piece(self):
        spec = validate_spec(2, (1, 1))
        assert gr_F_labels(spec, 2)[4] == (label(0, 3, 3),)

    def test_boundary_degree_top_piece(self):
        spec = validate_spec(2, (1, 1))
        assert gr_F_labels(spec, 3)[4] == (label(1, 3, 3),)

    def test_negative_target_degrees_omitted(self):
        spec = validate_spec(2, (1, 1))
        labels = gr_F_labels(spec, 0)
        # only the empty subset survives k - |I| >= 0 at k = 0
        assert set(labels) == {0}
        assert labels[0] == (label(0, -1, -1),)

    def test_mixed_form_degrees_at_same_piece(self):
        spec = validate_spec(3, (1, 0, 0))
        labels = gr_F_labels(spec, 3)
        # P = 2 collects I = {1} (degree 2) and I = {2,3} (degree 1)
        assert labels[2] == (
            label(1, -1, 2, 2),
            label(2, 3, 0, 0),
        )


class TestDimensionDictionary:
    def setup_method(self):
        self.spec = validate_spec(2, (1, 1), table=True)
        self.inv = VarietyInvariants(2, 2, 1)  # h=2, g=1 -> D=8, e=2

    def test_twisted_top_monomial(self):
        inv = VarietyInvariants(2, 1, 1)
        got = sheaf_cohomology_dim(label(0, 3, 3, minus_S=True), self.spec, inv)
        assert got == 8

    def test_restricted_top_monomial(self):
        got = sheaf_cohomology_dim(
            label(0, 3, 3, restricted=True), self.spec, self.inv
        )
        assert got == 2

    def test_dual_weight_below_middle_vanishes(self):
        spec = validate_spec(2, (1, 2), table=True)
        inv = VarietyInvariants(2, 1, 1)
        assert sheaf_cohomology_dim(label(1, -1, -2), spec, inv) == 0

    def test_top_monomial_in_degree_zero(self):
        assert sheaf_cohomology_dim(label(0, 3, 3), self.spec, self.inv) == 10

    def test_top_monomial_midrange_degree(self):
        spec = validate_spec(3, (2, 2, 2), table=True)
        inv = VarietyInvariants(3, 5, 1)
        assert sheaf_cohomology_dim(label(1, 4, 4, 4), spec, inv) == comb(2, 1) * 5
        assert sheaf_cohomology_dim(label(2, 4, 4, 4), spec, inv) == comb(2, 2) * 5

    def test_proper_subset_in_its_degree(self):
        # I = {1}: C_I = L1^3 L2^-1, determined in degree n - 1 = 1
        assert sheaf_cohomology_dim(label(1, 3, -1), self.spec, self.inv) == 8
        # I = empty set in degree n
        assert sheaf_cohomology_dim(label(2, -1, -1), self.spec, self.inv) == 8

    def test_misses(self):
        with pytest.raises(DictionaryMiss):
            sheaf_cohomology_dim(label(0, 3, -1), self.spec, self.inv)
        with pytest.raises(DictionaryMiss):
            sheaf_cohomology_dim(label(2, 3, 3), self.spec, self.inv)
        with pytest.raises(DictionaryMiss):
            sheaf_cohomology_dim(label(0, 1, 1), self.spec, self.inv)
        with pytest.raises(DictionaryMiss):
            sheaf_cohomology_dim(label(1, 3, 3, minus_S=True), self.spec, self.inv)
        with pytest.raises(DictionaryMiss):
            sheaf_cohomology_dim(label(1, 3, 3, restricted=True), self.spec, self.inv)

    def test_non_parallel_edge_dims(self):
        spec = validate_spec(2, (1, 0), table=True)
        inv = VarietyInvariants(2, 3, 1)  # D = 4, e = 0
        assert sheaf_cohomology_dim(label(0, 3, 2), spec, inv) == 4
        assert sheaf_cohomology_dim(label(1, 3, 2), spec, inv) == 0
        assert sheaf_cohomology_dim(label(0, 3, 2, restricted=True), spec, inv) == 0


class TestIhTable:
    def test_hand_values(self):
        table = ih_table(validate_spec(2, (1, 1)), VarietyInvariants(2, 1, 1))
        assert table.dims == (0, 0, 32, 0, 0)
        assert table.hodge == {(4, 0): 8, (2, 2): 16, (0, 4): 8}

    def test_off_middle_vanishes(self):
        table = ih_table(validate_spec(2, (1, 0)), VarietyInvariants(2, 1, 1))
        assert table.dims[1] == 0
        assert table.dims[3] == 0
        assert table.middle_dim == 16

    def test_inconsistent_invariants_rejected(self):
        with pytest.raises(InconsistentInvariants):
            VarietyInvariants(3, 1, 0)

    def test_hodge_symmetry(self):
        for m in [(1, 1), (2, 1), (3, 0)]:
            table = ih_table(validate_spec(2, m), VarietyInvariants(2, 2, 2))
            for (p, q), d in table.hodge.items():
                assert table.hodge[(q, p)] == d

    def test_requires_table_mode(self):
        with pytest.raises(TrivialSystem):
            ih_table(validate_spec(2, (0, 0)), VarietyInvariants(2, 1, 1))


class TestEisenstein:
    def test_three_factor_degree_four(self):
        spec = validate_spec(3, (2, 2, 2))
        inv = VarietyInvariants(3, 1, 1)
        datum = eisenstein_data(spec, inv, 4)
        assert datum.dim == 2
        assert [a for a, _, _ in datum.per_cusp_basis] == [(1,), (2,)]
        a, alpha, beta = datum.per_cusp_basis[0]
        assert alpha == (3, 4, 4)
        assert beta == (1, 0, 0)

    def test_non_parallel_vanishes(self):
        spec = validate_spec(2, (1, 0))
        datum = eisenstein_data(spec, VarietyInvariants(2, 4, 1), 3)
        assert datum.dim == 0
        assert datum.per_cusp_basis == ()

    def test_middle_degree_parallel(self):
        spec = validate_spec(2, (1, 1))
        datum = eisenstein_data(spec, VarietyInvariants(2, 5, 1), 2)
        assert datum.dim == 5
        assert [a for a, _, _ in datum.per_cusp_basis] == [()]
        _, alpha, beta = datum.per_cusp_basis[0]
        assert alpha == (3, 3)
        assert beta == (0, 0)

    def test_out_of_band_degrees_empty(self):
        spec = validate_spec(2, (1, 1))
        inv = VarietyInvariants(2, 1, 1)
        for k in (0, 1, 4):
            assert eisenstein_data(spec, inv, k).dim == 0

    def test_binomial_dimension_pattern(self):
        spec = validate_spec(4, (3, 3, 3, 3))
        inv = VarietyInvariants(4, 3, 2)
        for k in range(4, 8):
            assert eisenstein_data(spec, inv, k).dim == comb(3, k - 4) * 3


class TestMhsTable:
    def test_parallel_n2_m22(self):
        table = mhs_table(validate_spec(2, (2, 2)), VarietyInvariants(2, 1, 1))
        row = table.rows[2]
        assert row.dim == 73
        assert row.hodge == {(0, 6): 18, (3, 3): 36, (6, 0): 18, (6, 6): 1}
        assert row.splitting == (72, 1)
        assert row.weights == ((6, 72), (12, 1))
        assert table.rows[3].dim == 1
        assert table.rows[3].hodge == {(6, 6): 1}
        assert table.mhs_field == "Q"

    def test_parallel_n2_m11(self):
        table = mhs_table(validate_spec(2, (1, 1)), VarietyInvariants(2, 1, 1))
        row = table.rows[2]
        assert row.dim == 33
        assert row.hodge == {(0, 4): 8, (2, 2): 16, (4, 0): 8, (4, 4): 1}
        assert table.rows[1].dim == 0
        assert table.rows[1].note == "vanishes"
        assert table.rows[4].dim == 0

    def test_non_parallel_n2_m10(self):
        # genus 0: dim 8 spread as 2 per Hodge position
        table = mhs_table(validate_spec(2, (1, 0)), VarietyInvariants(2, 1, 0))
        row = table.rows[2]
        assert row.dim == 8
        assert row.hodge == {(0, 3): 2, (1, 2): 2, (2, 1): 2, (3, 0): 2}
        assert table.rows[3].dim == 0
        assert table.mhs_field == "R"
        # genus 1 doubles the universal summand
        table = mhs_table(validate_spec(2, (1, 0)), VarietyInvariants(2, 1, 1))
        row = table.rows[2]
        assert row.dim == 16
        assert row.hodge == {(0, 3): 4, (1, 2): 4, (2, 1): 4, (3, 0): 4}

    def test_boundary_row_n4(self):
        table = mhs_table(
            validate_spec(4, (1, 1, 1, 1)), VarietyInvariants(4, 2, 0)
        )
        row = table.rows[5]
        assert row.dim == 6
        assert row.hodge == {(8, 8): 6}
        assert row.weights == ((16, 6),)
        assert row.splitting == (0, 6)

    def test_degenerate_d_zero(self):
        # odd n with genus 1 kills the interior part; only the boundary stays
        table = mhs_table(validate_spec(3, (1, 1, 1)), VarietyInvariants(3, 4, 1))
        row = table.rows[3]
        assert row.splitting == (0, 4)
        assert row.dim == 4
        assert row.hodge == {(6, 6): 4}

    def test_gr_f_crosscheck_middle(self):
        spec = validate_spec(2, (1, 1), table=True)
        inv = VarietyInvariants(2, 1, 1)
        table = mhs_table(spec, inv)
        row = table.rows[2]
        for P, labels in row.gr_f.items():
            total = sum(sheaf_cohomology_dim(lb, spec, inv) for lb in labels)
            column = sum(d for (p, _), d in row.hodge.items() if p == P)
            assert total == column

    def test_gr_f_crosscheck_boundary(self):
        spec = validate_spec(3, (2, 2, 2), table=True)
        inv = VarietyInvariants(3, 2, 1)
        table = mhs_table(spec, inv)
        w = spec.weight + spec.n
        for k in (4, 5):
            row = table.rows[k]
            labels = row.gr_f[w]
            total = sum(sheaf_cohomology_dim(lb, spec, inv) for lb in labels)
            assert total == row.dim == comb(2, k - 3) * 2


class TestMhsSweeps:
    def inputs(self):
        for n in (2, 3, 4):
            for m in product(range(4 if n < 4 else 2), repeat=n):
                if all(mi == 0 for mi in m):
                    continue
                for g in (0, 1, 2, 3):
                    if g + (-1) ** n < 0:
                        continue
                    for h in (1, 2, 5):
                        yield validate_spec(n, m), VarietyInvariants(n, h, g)

    def test_hodge_symmetry_everywhere(self):
        for spec, inv in self.inputs():
            table = mhs_table(spec, inv)
            for row in table.rows.values():
                for (p, q), d in row.hodge.items():
                    assert row.hodge.get((q, p)) == d

    def test_weight_hodge_consistency_at_middle(self):
        for spec, inv in self.inputs():
            table = mhs_table(spec, inv)
            row = table.rows[spec.n]
            w = spec.weight + spec.n
            ih_sum = sum(d for (p, q), d in row.hodge.items() if p + q == w)
            assert ih_sum == row.splitting[0]
            assert row.hodge.get((w, w), 0) == row.splitting[1]

    def test_eisenstein_lives_at_hodge_tate_corner(self):
        for spec, inv in self.inputs():
            table = mhs_table(spec, inv)
            w = spec.weight + spec.n
            for row in table.rows.values():
                for (p, q), d in row.hodge.items():
                    if p + q == 2 * w and d:
                        assert (p, q) == (w, w)

    def test_boundary_dimension_count(self):
        for spec, inv in self.inputs():
            table = mhs_table(spec, inv)
            for k in range(spec.n, 2 * spec.n):
                expected = (
                    comb(spec.n - 1, k - spec.n) * inv.cusps
                    if spec.is_parallel
                    else 0
                )
                assert eisenstein_data(spec, inv, k).dim == expected
                if k > spec.n:
                    assert table.rows[k].dim == expected


class TestTableModeGuards:
    def test_engine_spec_rejected(self):
        with pytest.raises(BadDegree):
            mhs_table(validate_spec(1, (1,)), VarietyInvariants(2, 1, 1))

    def test_trivial_rejected(self):
        with pytest.raises(TrivialSystem):
            mhs_table(validate_spec(2, (0, 0)), VarietyInvariants(2, 1, 1))
