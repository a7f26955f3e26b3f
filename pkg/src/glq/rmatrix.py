"""R-matrices on pairs of vector/dual-vector representations.

Three operators are constructed on the relevant graded tensor squares
(Koszul identification of matrix tensors throughout):

  * vector (x) vector:
        diag q^{sigma_a} on v_a (x) v_a (else 1), plus
        (q - q^{-1}) sum_{a<b} (-1)^{|b|} e_{ab} (x) e_{ba};
  * dual (x) dual: the same diagonal, with the off-diagonal sum over a > b;
  * dual (x) vector:
        diag q^{-sigma_a} on v-bar_a (x) v_a (else 1), minus
        (q - q^{-1}) sum_{a<b} (-1)^{|a|+|b|+|a||b|} e_{ba} (x) e_{ba}.

Each one intertwines the coproduct with its graded opposite on the
corresponding pair of representations:  R . (r1 (x) r2)(Delta x)
= (r1 (x) r2)(Delta' x) . R.  Composing with the graded flip yields the
braid operator, which satisfies the braid relation on triple tensors.
All three are invertible over Q(q) and become the identity in the
classical limit q -> 1.

The exchange relations with the coordinate generating matrices are
element-level identities in End(V) (x) End(V) (x) G_q: the R element
carries the displayed matrix-unit coefficients (no Koszul realisation),
T places t_ab at slot (a, b) in one matrix leg (T-bar likewise with
t-bar_ab, same index placement), products use the full Koszul sign for
triple tensors, and the G_q leg is paired against probe elements.
R T_1 T_2 = T_2 T_1 R then holds for all three leg pairings.
"""

from __future__ import annotations

from .coeff import RatFunc, ZERO, ONE, Q, QINV, q_int
from .graded import GradedMap, GradedSpace, graded_flip, solve
from .uq import UqExpression, all_generators, coproduct, coproduct_opposite
from .reps import vector_rep, dual_rep, tensor_rep


def _vector_space(ctx):
    return GradedSpace(tuple(ctx.parity(a) for a in range(1, ctx.N + 1)))


def _flat(ctx, a, b):
    return (a - 1) * ctx.N + (b - 1)


def r_matrix_vv(ctx):
    """R on (vector) (x) (vector)."""
    N = ctx.N
    space = _vector_space(ctx).tensor(_vector_space(ctx))
    ent = {}
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            i = _flat(ctx, a, b)
            ent[(i, i)] = q_int(ctx.sigma(a)) if a == b else ONE
    coeff = Q - QINV
    for a in range(1, N + 1):
        for b in range(a + 1, N + 1):
            sgn = ctx.parity(b) + (ctx.parity(a) + ctx.parity(b)) * ctx.parity(b)
            val = coeff if sgn % 2 == 0 else -coeff
            key = (_flat(ctx, a, b), _flat(ctx, b, a))
            ent[key] = ent.get(key, ZERO) + val
    return GradedMap(space, space, ent)


def r_matrix_dd(ctx):
    """R on (dual) (x) (dual)."""
    N = ctx.N
    space = _vector_space(ctx).tensor(_vector_space(ctx))
    ent = {}
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            i = _flat(ctx, a, b)
            ent[(i, i)] = q_int(ctx.sigma(a)) if a == b else ONE
    coeff = Q - QINV
    for a in range(1, N + 1):
        for b in range(1, a):
            sgn = ctx.parity(b) + (ctx.parity(a) + ctx.parity(b)) * ctx.parity(b)
            val = coeff if sgn % 2 == 0 else -coeff
            key = (_flat(ctx, a, b), _flat(ctx, b, a))
            ent[key] = ent.get(key, ZERO) + val
    return GradedMap(space, space, ent)


def r_matrix_dv(ctx):
    """R on (dual) (x) (vector)."""
    N = ctx.N
    space = _vector_space(ctx).tensor(_vector_space(ctx))
    ent = {}
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            i = _flat(ctx, a, b)
            ent[(i, i)] = q_int(-ctx.sigma(a)) if a == b else ONE
    coeff = Q - QINV
    for a in range(1, N + 1):
        for b in range(a + 1, N + 1):
            pa, pb = ctx.parity(a), ctx.parity(b)
            sgn = pa + pb + pa * pb + (pa + pb) * pa
            val = -coeff if sgn % 2 == 0 else coeff
            key = (_flat(ctx, b, b), _flat(ctx, a, a))
            ent[key] = ent.get(key, ZERO) + val
    return GradedMap(space, space, ent)


def eval_tensor_pair(r1, r2, texpr):
    """Evaluate an arity-2 tensor expression in r1 (x) r2."""
    out = GradedMap.zero(r1.space.tensor(r2.space),
                         r1.space.tensor(r2.space))
    for (w1, w2), c in texpr.terms.items():
        out = out + r1.evaluate_word(w1).tensor(r2.evaluate_word(w2)).scale(c)
    return out


def intertwines(R, r1, r2):
    """Does R (r1 (x) r2)(Delta x) = (r1 (x) r2)(Delta' x) R for every
    generator x?"""
    ctx = r1.ctx
    for g in all_generators(ctx):
        x = UqExpression.from_gen(ctx, g)
        lhs = R @ eval_tensor_pair(r1, r2, coproduct(x))
        rhs = eval_tensor_pair(r1, r2, coproduct_opposite(x)) @ R
        if lhs != rhs:
            return False
    return True


def braid_from_r(R, space1, space2):
    """The braid operator: graded flip composed with R."""
    return graded_flip(space1, space2) @ R


def braid_relation_holds(rhat, space):
    """Check (R^ (x) 1)(1 (x) R^)(R^ (x) 1) = (1 (x) R^)(R^ (x) 1)(1 (x) R^)."""
    ident = GradedMap.identity(space)
    r12 = rhat.tensor(ident)
    r23 = ident.tensor(rhat)
    return r12 @ r23 @ r12 == r23 @ r12 @ r23


def invert(mat):
    """Exact inverse of a square GradedMap, or None if singular."""
    d = mat.domain.dim
    rows = [{} for _ in range(d)]
    for (r, c), v in mat.entries.items():
        rows[r][c] = v
    ent = {}
    for j in range(d):
        rhs = [ONE if i == j else ZERO for i in range(d)]
        x = solve(rows, d, rhs)
        if x is None:
            return None
        for i, v in x.items():
            if v:
                ent[(i, j)] = v
    return GradedMap(mat.domain, mat.domain, ent)


def classical_limit_is_identity(R):
    """Entrywise evaluation at q = 1 must give the identity matrix."""
    d = R.domain.dim
    seen = set()
    for (r, c), v in R.entries.items():
        val = v.num.evaluate(1) / v.den.evaluate(1)
        if r == c:
            if val != 1:
                return False
            seen.add(r)
        elif val != 0:
            return False
    return len(seen) == d


# ---------------------------------------------------------------------------
# Exchange relations with the coordinate generating matrices.
#
# These are element-level identities in End(V) (x) End(V) (x) G_q: the
# R element (matrix-unit coefficients exactly as displayed at the top of
# this module, no Koszul realisation) multiplies the generating elements
# T_1 = sum e_ab (x) 1 (x) t_ab, T_2 = sum 1 (x) e_ab (x) t_ab (and the
# barred versions, same index placement) with the full Koszul sign rule
# for triple tensors, and the G_q leg is then paired against probe
# words.  R T_1 T_2 = T_2 T_1 R must hold entrywise for every probe.
# ---------------------------------------------------------------------------


def r_element(ctx, kind):
    """The R element as {(i, j, k, l): coeff} for coeff e_ij (x) e_kl."""
    N = ctx.N
    out = {}
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            if a == b:
                e = ctx.sigma(a) if kind in ("vv", "dd") else -ctx.sigma(a)
                out[(a, a, b, b)] = q_int(e)
            else:
                out[(a, a, b, b)] = ONE
    coeff = Q - QINV
    if kind == "vv":
        for a in range(1, N + 1):
            for b in range(a + 1, N + 1):
                c = -coeff if ctx.parity(b) % 2 else coeff
                out[(a, b, b, a)] = out.get((a, b, b, a), ZERO) + c
    elif kind == "dd":
        for a in range(1, N + 1):
            for b in range(1, a):
                c = -coeff if ctx.parity(b) % 2 else coeff
                out[(a, b, b, a)] = out.get((a, b, b, a), ZERO) + c
    elif kind == "dv":
        for a in range(1, N + 1):
            for b in range(a + 1, N + 1):
                pa, pb = ctx.parity(a), ctx.parity(b)
                c = coeff if (pa + pb + pa * pb) % 2 else -coeff
                out[(b, a, b, a)] = out.get((b, a, b, a), ZERO) + c
    else:
        raise ValueError("kind must be 'vv', 'dd' or 'dv'")
    return {k: v for k, v in out.items() if v}


def generating_element(ctx, leg, barred):
    """T (or T-bar) with the coordinate letter in the G_q leg:
    sum_{a,b} e_ab placed in the given matrix leg, times t_ab."""
    from .coords import CoordLetter

    N = ctx.N
    out = {}
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            letter = CoordLetter(barred, a, b)
            for c in range(1, N + 1):
                key = ((a, b, c, c, (letter,)) if leg == 1
                       else (c, c, a, b, (letter,)))
                out[key] = ONE
    return out


def triple_product(ctx, A, B):
    """Koszul product in End(V) (x) End(V) (x) G_q on decomposable
    pieces {(i, j, k, l, word): coeff}."""
    from .coords import letter_parity

    out = {}
    for (i1, j1, k1, l1, w1), c1 in A.items():
        p_mid = (ctx.parity(k1) + ctx.parity(l1)) % 2
        p_word = sum(letter_parity(ctx, l) for l in w1) % 2
        for (i2, j2, k2, l2, w2), c2 in B.items():
            if j1 != i2 or l1 != k2:
                continue
            y1 = (ctx.parity(i2) + ctx.parity(j2)) % 2
            y2 = (ctx.parity(k2) + ctx.parity(l2)) % 2
            c = c1 * c2
            if (y1 * (p_mid + p_word) + y2 * p_word) % 2:
                c = -c
            key = (i1, j2, k1, l2, w1 + w2)
            s = out.get(key, ZERO) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def _with_empty_word(element):
    return {(i, j, k, l, ()): c for (i, j, k, l), c in element.items()}


def _eval_coordinate_leg(ctx, element, x_word):
    from .coords import evaluate_word

    out = {}
    for (i, j, k, l, w), c in element.items():
        v = evaluate_word(ctx, w, x_word)
        if v:
            key = (i, j, k, l)
            s = out.get(key, ZERO) + c * v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def rtt_exchange_holds(ctx, kind, probe_words):
    """R T_1 T_2 = T_2 T_1 R against every probe word.

    kind selects the pair of legs: 'vv' (both plain), 'dd' (both
    barred), 'dv' (barred then plain), each with its own R element.
    """
    R = _with_empty_word(r_element(ctx, kind))
    t1 = generating_element(ctx, 1, kind in ("dd", "dv"))
    t2 = generating_element(ctx, 2, kind == "dd")
    lhs = triple_product(ctx, triple_product(ctx, R, t1), t2)
    rhs = triple_product(ctx, triple_product(ctx, t2, t1), R)
    for x in probe_words:
        if (_eval_coordinate_leg(ctx, lhs, x)
                != _eval_coordinate_leg(ctx, rhs, x)):
            return False
    return True


# ---------------------------------------------------------------------------
# Report-style wrappers over the kinds.
# ---------------------------------------------------------------------------

_KIND_ALIASES = {"pp": "vv", "bb": "dd", "mixed": "dv",
                 "vv": "vv", "dd": "dd", "dv": "dv"}


def resolve_kind(kind):
    """Normalise a kind label: 'pp'/'vv' both-plain, 'bb'/'dd'
    both-barred, 'mixed'/'dv' barred-then-plain."""
    try:
        return _KIND_ALIASES[kind]
    except KeyError:
        raise ValueError("kind must be one of %s"
                         % sorted(_KIND_ALIASES)) from None


def build_r_matrix(ctx, kind):
    """The R-matrix of the requested kind together with the two
    module factors it intertwines: (R, left factor, right factor)."""
    from .reps import vector_rep, dual_rep

    kind = resolve_kind(kind)
    pi = vector_rep(ctx)
    if kind == "vv":
        return r_matrix_vv(ctx), pi, pi
    pibar = dual_rep(pi)
    if kind == "dd":
        return r_matrix_dd(ctx), pibar, pibar
    return r_matrix_dv(ctx), pibar, pi


def check_intertwiner(ctx, kind):
    """Does the R-matrix of this kind intertwine the coproduct with its
    opposite on the corresponding module pair?"""
    R, r1, r2 = build_r_matrix(ctx, kind)
    return intertwines(R, r1, r2)


def check_braid(ctx, kind):
    """Does the braid operator of this kind satisfy the braid relation?
    Only the equal-factor kinds define one; mixed returns None."""
    kind = resolve_kind(kind)
    if kind == "dv":
        return None
    R, r1, r2 = build_r_matrix(ctx, kind)
    rhat = braid_from_r(R, r1.space, r2.space)
    return braid_relation_holds(rhat, r1.space)


def check_rtt(ctx, kind, probe_degree):
    """Does the exchange identity hold on every coordinate probe word up
    to the given degree?"""
    from .uq import probe_monomials

    return rtt_exchange_holds(ctx, resolve_kind(kind),
                              probe_monomials(ctx, probe_degree))
