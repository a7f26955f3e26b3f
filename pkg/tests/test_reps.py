"""Representations: vector/dual/tensor constructions, weight-space
decomposition into highest-weight summands, the two label families, and
contravariant forms / unitarity at generic rational points."""

from fractions import Fraction

import pytest

from glq.coeff import ONE, QINV, q_int
from glq.graded import GradingContext
from glq.reps import (
    check_relations,
    decompose,
    dual_gram,
    dual_label_of,
    dual_rep,
    highest_weight_vectors,
    hook_partitions,
    in_first_family,
    in_second_family,
    is_adjoint_pair,
    kron_gram,
    partition_weight,
    submodule_rep,
    tensor_power,
    tensor_rep,
    trivial_rep,
    unitarity_types,
    vector_gram,
    vector_rep,
    weight_to_diagram,
    classify_weight,
    unitarity_check,
)
from glq.uq import all_generators

SIZES = [(1, 1), (2, 1), (1, 2), (2, 2)]


@pytest.fixture(params=SIZES, ids=lambda s: "m%dn%d" % s)
def ctx(request):
    return GradingContext(*request.param)


# ---------------------------------------------------------------------------
# Base representations.
# ---------------------------------------------------------------------------


def test_vector_rep_shape(ctx):
    pi = vector_rep(ctx)
    assert pi.dim == ctx.N
    assert pi.space.parities == tuple(ctx.parity(a) for a in range(1, ctx.N + 1))


def test_dual_rep_frozen_at_1_1():
    pi = vector_rep(GradingContext(1, 1))
    pibar = dual_rep(pi)
    assert pibar.image(("E", 1, 2)).entries == {(1, 0): -QINV}
    assert pibar.image(("E", 2, 1)).entries == {(0, 1): q_int(1)}
    assert pibar.image(("K", 1)).entries == {(0, 0): QINV, (1, 1): ONE}
    assert pibar.weights == [(-1, 0), (0, -1)]


def test_dual_rep_negates_weights(ctx):
    pi = vector_rep(ctx)
    pibar = dual_rep(pi)
    assert pibar.weights == [tuple(-x for x in w) for w in pi.weights]


def test_trivial_rep_counit_values(ctx):
    triv = trivial_rep(ctx)
    for g in all_generators(ctx):
        M = triv.image(g)
        expected = ONE if g[0] in ("K", "Kinv") else None
        if expected is None:
            assert M.is_zero()
        else:
            assert M.entries == {(0, 0): expected}


def test_tensor_rep_weights_add(ctx):
    pi = vector_rep(ctx)
    sq = tensor_rep(pi, pi)
    N = ctx.N
    for i in range(N):
        for j in range(N):
            wt = sq.weights[i * N + j]
            assert wt == tuple(pi.weights[i][a] + pi.weights[j][a]
                               for a in range(N))


# ---------------------------------------------------------------------------
# Decomposition of tensor powers: frozen highest/lowest weights and dims.
# ---------------------------------------------------------------------------

EXPECTED_SQUARES = {
    (1, 1): [((2, 0), 2, (1, 1)), ((1, 1), 2, (0, 2))],
    (2, 1): [((2, 0, 0), 5, (0, 1, 1)), ((1, 1, 0), 4, (0, 0, 2))],
    (1, 2): [((2, 0, 0), 4, (0, 1, 1)), ((1, 1, 0), 5, (0, 0, 2))],
    (2, 2): [((2, 0, 0, 0), 8, (0, 0, 1, 1)), ((1, 1, 0, 0), 8, (0, 0, 0, 2))],
}

EXPECTED_CUBES = {
    (1, 1): [((3, 0), 2, (2, 1)), ((2, 1), 2, (1, 2)),
             ((2, 1), 2, (1, 2)), ((1, 2), 2, (0, 3))],
    (2, 1): [((3, 0, 0), 7, (0, 2, 1)), ((2, 1, 0), 8, (0, 1, 2)),
             ((2, 1, 0), 8, (0, 1, 2)), ((1, 1, 1), 4, (0, 0, 3))],
    (1, 2): [((3, 0, 0), 4, (1, 1, 1)), ((2, 1, 0), 8, (0, 1, 2)),
             ((2, 1, 0), 8, (0, 1, 2)), ((1, 2, 0), 7, (0, 0, 3))],
    (2, 2): [((3, 0, 0, 0), 12, (0, 1, 1, 1)), ((2, 1, 0, 0), 20, (0, 0, 1, 2)),
             ((2, 1, 0, 0), 20, (0, 0, 1, 2)), ((1, 1, 1, 0), 12, (0, 0, 0, 3))],
}


def test_tensor_square_decomposition(ctx):
    rep = tensor_power(vector_rep(ctx), 2)
    summands = decompose(rep)
    got = [(s.highest_weight, s.dim, s.lowest_weight) for s in summands]
    assert got == EXPECTED_SQUARES[(ctx.m, ctx.n)]
    assert sum(s.dim for s in summands) == rep.dim


def test_tensor_cube_decomposition(ctx):
    rep = tensor_power(vector_rep(ctx), 3)
    summands = decompose(rep)
    got = [(s.highest_weight, s.dim, s.lowest_weight) for s in summands]
    assert got == EXPECTED_CUBES[(ctx.m, ctx.n)]
    assert sum(s.dim for s in summands) == rep.dim


def test_summand_subreps_satisfy_relations():
    ctx = GradingContext(2, 1)
    rep = tensor_power(vector_rep(ctx), 2)
    for s in decompose(rep):
        sub = submodule_rep(rep, s.basis)
        assert all(ok for _, ok in check_relations(sub))


def test_highest_weight_vector_count(ctx):
    rep = tensor_power(vector_rep(ctx), 2)
    assert len(highest_weight_vectors(rep)) == 2


# ---------------------------------------------------------------------------
# Independent closure oracle: plain Fraction-matrix span growth at a
# generic rational point, written locally so it shares no code with the
# library's decomposition path.
# ---------------------------------------------------------------------------


def _local_rank(rows):
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    cols = len(rows[0]) if rows else 0
    used = [False] * len(rows)
    for c in range(cols):
        pivot = None
        for i, row in enumerate(rows):
            if not used[i] and row[c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        used[pivot] = True
        rank += 1
        for i, row in enumerate(rows):
            if i != pivot and row[c] != 0:
                f = Fraction(row[c], rows[pivot][c])
                for k in range(cols):
                    row[k] -= f * rows[pivot][k]
    return rank


def _closure_dim_at_point(rep, seed_vec, q0):
    mats = [rep.image(g).specialize(q0) for g in all_generators(rep.ctx)]
    span = [[Fraction(x) for x in seed_vec]]
    changed = True
    while changed:
        changed = False
        current = _local_rank(span)
        new_rows = []
        for row in span:
            for M in mats:
                out = [sum(M[r][c] * row[c] for c in range(len(row)))
                       for r in range(len(row))]
                if any(out):
                    new_rows.append(out)
        if _local_rank(span + new_rows) > current:
            span = span + new_rows
            changed = True
    return _local_rank(span)


def test_tensor_square_summand_dims_by_independent_oracle():
    ctx = GradingContext(2, 1)
    rep = tensor_power(vector_rep(ctx), 2)
    q0 = Fraction(3, 2)
    dims = set()
    for _, hw in highest_weight_vectors(rep):
        vec = [hw.get(i, None) for i in range(rep.dim)]
        vec = [v.evaluate(q0) if v is not None else Fraction(0) for v in vec]
        dims.add(_closure_dim_at_point(rep, vec, q0))
    assert dims == {4, 5}
    assert sum(s.dim for s in decompose(rep)) == 9


# ---------------------------------------------------------------------------
# The two label families.
# ---------------------------------------------------------------------------


def test_hook_partitions_respect_arm_bound():
    ctx = GradingContext(2, 1)
    assert hook_partitions(ctx, 3) == [(3,), (2, 1), (1, 1, 1)]
    for k in range(1, 5):
        for rows in hook_partitions(ctx, k):
            assert all(rows[i] <= ctx.n for i in range(ctx.m, len(rows)))
            assert sum(rows) == k
            assert list(rows) == sorted(rows, reverse=True)


def test_partition_weight_examples():
    ctx = GradingContext(2, 1)
    assert partition_weight(ctx, (2, 1)) == (2, 1, 0)
    assert partition_weight(ctx, (1, 1, 1)) == (1, 1, 1)
    assert partition_weight(ctx, (3,)) == (3, 0, 0)


def test_first_family_membership_roundtrip():
    ctx = GradingContext(2, 1)
    ok, rows = in_first_family(ctx, (2, 1, 0))
    assert ok and rows == (2, 1, 0)
    ok, rows = in_first_family(ctx, (3, 1, 2))
    assert ok and rows == (3, 1, 1, 1)
    assert in_first_family(ctx, (0, 2, 0)) == (False, None)
    ctx11 = GradingContext(1, 1)
    ok, rows = in_first_family(ctx11, (1, 2))
    assert ok and rows == (1, 1, 1)


def test_weight_to_diagram_rejects_non_partitions():
    ctx = GradingContext(2, 1)
    assert weight_to_diagram(ctx, (1, 2, 0)) is None


def test_dual_labels_of_small_hooks():
    ctx = GradingContext(2, 1)
    assert dual_label_of(ctx, (2, 0, 0)) == (0, -1, -1)
    assert dual_label_of(ctx, (1, 1, 0)) == (0, 0, -2)


def test_second_family_membership():
    ctx = GradingContext(2, 1)
    assert in_second_family(ctx, (0, 0, 0)) == (True, (0, 0, 0))
    assert in_second_family(ctx, (0, -1, -1)) == (True, (2, 0, 0))
    assert in_second_family(ctx, (0, 0, -2)) == (True, (1, 1, 0))
    assert in_second_family(ctx, (0, 0, -1)) == (True, (1, 0, 0))
    assert in_second_family(ctx, (-1, -1, -1)) == (False, None)


# ---------------------------------------------------------------------------
# Contravariant forms and unitarity.
# ---------------------------------------------------------------------------


def test_vector_gram_frozen_at_1_1():
    g = vector_gram(GradingContext(1, 1))
    assert g.entries == {(0, 0): ONE, (1, 1): QINV}
    assert [x.evaluate(Fraction(3, 2)) for x in
            (g.get(0, 0), g.get(1, 1))] == [1, Fraction(2, 3)]


def test_dual_gram_frozen_at_1_1():
    g = dual_gram(GradingContext(1, 1))
    assert g.entries == {(0, 0): QINV, (1, 1): ONE}


@pytest.mark.parametrize("q0", [Fraction(3, 2), Fraction(2)])
def test_vector_rep_unitarity(ctx, q0):
    pi = vector_rep(ctx)
    g = vector_gram(ctx)
    types = unitarity_types(pi, g, q0)
    assert types == [1]


@pytest.mark.parametrize("q0", [Fraction(3, 2), Fraction(2)])
def test_dual_rep_unitarity(ctx, q0):
    # Dualising swaps the two flavours of star structure, so the dual of
    # the (type-1 unitary) vector module is unitary of the second type.
    pi = vector_rep(ctx)
    pibar = dual_rep(pi)
    g = dual_gram(ctx)
    types = unitarity_types(pibar, g, q0)
    assert types == [2]


@pytest.mark.parametrize("q0", [Fraction(3, 2), Fraction(2)])
def test_tensor_square_unitarity(ctx, q0):
    pi = vector_rep(ctx)
    sq = tensor_rep(pi, pi)
    g = kron_gram(vector_gram(ctx), vector_gram(ctx))
    types = unitarity_types(sq, g, q0)
    assert types == [1]


def test_adjoint_pair_is_exact_over_the_field():
    ctx = GradingContext(1, 1)
    pi = vector_rep(ctx)
    assert is_adjoint_pair(pi, vector_gram(ctx), 1)
    assert not is_adjoint_pair(pi, vector_gram(ctx), 2, q0=Fraction(3, 2))


class TestClassifyWeight:
    def test_tensor_label(self):
        ctx = GradingContext(2, 1)
        out = classify_weight(ctx, (2, 1, 0))
        assert out["in_tensor_family"] is True
        assert out["diagram"] == (2, 1, 0)
        assert out["in_dual_family"] is False

    def test_dual_label(self):
        ctx = GradingContext(2, 1)
        out = classify_weight(ctx, (0, 0, -1))
        assert out["in_dual_family"] is True
        assert out["dual_witness"] == (1, 0, 0)
        assert out["in_tensor_family"] is False

    def test_neither(self):
        ctx = GradingContext(2, 1)
        out = classify_weight(ctx, (-1, 0, 0))
        assert out["in_tensor_family"] is False
        assert out["in_dual_family"] is False

    def test_zero_weight_in_both(self):
        ctx = GradingContext(1, 1)
        out = classify_weight(ctx, (0, 0))
        assert out["in_tensor_family"] is True
        assert out["in_dual_family"] is True


class TestUnitarityCheck:
    def test_vector_module_report(self):
        ctx = GradingContext(1, 1)
        rep = vector_rep(ctx)
        out = unitarity_check(rep, vector_gram(ctx), Fraction(3, 2))
        assert out["positive"] is True
        assert out["adjoint_types"] == [1]
        assert out["unitary_types"] == [1]
