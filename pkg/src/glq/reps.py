"""Finite-dimensional weight representations and their decomposition.

A representation stores one sparse matrix per generator, the basis
parities, and the basis weights (exponent tuples for the diagonal
torus).  Words are evaluated by composing generator images, with prefix
caching so large probe families stay cheap.

Provided constructions:

  * the vector representation (basis v_1..v_{m+n}, K_a v_b = q_a^{d_ab} v_b,
    E_{a,b} v_c = d_{bc} v_a);
  * the dual of any representation, twisted by the antipode with the
    Koszul sign on the column index:
        M-bar(g)[r, c] = (-1)^{|g| p(c)} M(S(g))[c, r];
  * graded tensor products via the coproduct and Koszul matrix tensor;
  * the trivial representation; submodule representations on an explicit
    basis.

Decomposition finds all joint highest-weight vectors (kernels of the
raising operators, one weight block at a time), generates each
submodule by closing under all generator images, and certifies that the
summands are independent and exhaust the space.  At generic q each
highest-weight closure here is irreducible; the lowest weight of each
summand is recorded, which drives the dual-label computation.

Weight classification: the labels attached to tensor powers of the
vector representation are exactly the weights read off hook-bounded
Young diagrams (first block = first m rows; second block = the column
excesses over m).  Labels of duals form the mirror family, recognised
by searching the hook diagrams of the matching size.

Unitarity: a representation is unitarisable of a given star type when
some positive-definite Gram matrix G satisfies M(g)^T G = G M(*g) for
every generator g.  The natural Gram matrices of the vector
representation, its dual, and their tensor products are provided.
"""

from __future__ import annotations

import itertools

from .coeff import RatFunc, ZERO, ONE, q_int
from .graded import (
    Echelon,
    GradedMap,
    GradedSpace,
    nullspace,
    solve,
)
from .uq import (
    UqExpression,
    all_generators,
    antipode,
    coproduct,
    defining_relations,
    gen_E,
    gen_K,
    gen_Kinv,
    gen_parity,
    star,
)


class Representation:
    """Images of the generators on a graded weight basis."""

    __slots__ = ("ctx", "space", "images", "weights", "name", "_cache")

    def __init__(self, ctx, space, images, weights, name=""):
        if len(weights) != space.dim:
            raise ValueError("one weight per basis vector required")
        self.ctx = ctx
        self.space = space
        self.images = images
        self.weights = [tuple(w) for w in weights]
        self.name = name
        self._cache = {(): GradedMap.identity(space)}

    @property
    def dim(self):
        return self.space.dim

    def image(self, g):
        return self.images[g]

    def evaluate_word(self, word):
        word = tuple(word)
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        mat = self.evaluate_word(word[:-1]) @ self.images[word[-1]]
        self._cache[word] = mat
        return mat

    def evaluate_expr(self, expr):
        out = GradedMap.zero(self.space, self.space)
        for w, c in expr.terms.items():
            out = out + self.evaluate_word(w).scale(c)
        return out

    def weight_blocks(self):
        """Weight -> sorted list of basis indices, deterministic order."""
        blocks = {}
        for i, w in enumerate(self.weights):
            blocks.setdefault(w, []).append(i)
        return dict(sorted(blocks.items(), reverse=True))

    def __repr__(self):
        return "Representation(%s, dim=%d)" % (self.name or "?", self.dim)


def vector_rep(ctx):
    """The vector representation on basis v_1 .. v_{m+n}."""
    N = ctx.N
    space = GradedSpace(tuple(ctx.parity(a) for a in range(1, N + 1)))
    images = {}
    for a in range(1, N + 1):
        images[gen_K(a)] = GradedMap(space, space, {
            (b - 1, b - 1): q_int(ctx.sigma(a)) if b == a else ONE
            for b in range(1, N + 1)})
        images[gen_Kinv(a)] = GradedMap(space, space, {
            (b - 1, b - 1): q_int(-ctx.sigma(a)) if b == a else ONE
            for b in range(1, N + 1)})
    for a in range(1, N):
        images[gen_E(a, a + 1)] = GradedMap(space, space, {(a - 1, a): ONE})
        images[gen_E(a + 1, a)] = GradedMap(space, space, {(a, a - 1): ONE})
    weights = [ctx.eps(a) for a in range(1, N + 1)]
    return Representation(ctx, space, images, weights, name="V")


def trivial_rep(ctx):
    space = GradedSpace((0,))
    images = {}
    for g in all_generators(ctx):
        if g[0] == "E":
            images[g] = GradedMap.zero(space, space)
        else:
            images[g] = GradedMap.identity(space)
    return Representation(ctx, space, images, [ctx.zero_weight()], name="1")


def dual_rep(rep):
    """Antipode-twisted dual on the same parity profile, weights negated."""
    ctx = rep.ctx
    space = rep.space
    images = {}
    for g in all_generators(ctx):
        ms = rep.evaluate_expr(antipode(UqExpression.from_gen(ctx, g)))
        pg = gen_parity(ctx, g)
        out = {}
        for (c, r), v in ms.entries.items():
            if pg and space.parities[c] % 2:
                out[(r, c)] = -v
            else:
                out[(r, c)] = v
        images[g] = GradedMap(space, space, out)
    weights = [tuple(-x for x in w) for w in rep.weights]
    return Representation(ctx, space, images, weights,
                          name="(%s)~" % rep.name)


def tensor_rep(r1, r2):
    """Tensor product through the coproduct, Koszul matrix conventions."""
    ctx = r1.ctx
    space = r1.space.tensor(r2.space)
    images = {}
    for g in all_generators(ctx):
        dg = coproduct(UqExpression.from_gen(ctx, g))
        out = GradedMap.zero(space, space)
        for (w1, w2), c in dg.terms.items():
            out = out + r1.evaluate_word(w1).tensor(
                r2.evaluate_word(w2)).scale(c)
        images[g] = out
    weights = [tuple(x + y for x, y in zip(w1, w2))
               for w1 in r1.weights for w2 in r2.weights]
    return Representation(ctx, space, images, weights,
                          name="%s(x)%s" % (r1.name, r2.name))


def tensor_power(rep, k):
    out = rep
    for _ in range(k - 1):
        out = tensor_rep(out, rep)
    return out


def submodule_rep(rep, basis, name="sub"):
    """Restriction of rep to the span of an explicit ordered basis."""
    ctx = rep.ctx
    k = len(basis)
    parities = []
    weights = []
    for v in basis:
        ps = {rep.space.parities[i] for i in v}
        ws = {rep.weights[i] for i in v}
        if len(ps) != 1 or len(ws) != 1:
            raise ValueError("basis vectors must be parity- and "
                             "weight-homogeneous")
        parities.append(ps.pop())
        weights.append(ws.pop())
    space = GradedSpace(tuple(parities))
    ambient = sorted({i for v in basis for i in v})
    ambient_set = set(ambient)
    rows = [{j: basis[j][i] for j in range(k) if i in basis[j]}
            for i in ambient]
    images = {}
    for g in all_generators(ctx):
        mat = rep.image(g)
        entries = {}
        for j, v in enumerate(basis):
            target = mat.apply(v)
            if any(i not in ambient_set for i in target):
                raise ValueError("span is not invariant under %s" % (g,))
            rhs = [target.get(i, ZERO) for i in ambient]
            x = solve(rows, k, rhs)
            if x is None:
                raise ValueError("image of basis vector leaves the span")
            for r, val in x.items():
                if val:
                    entries[(r, j)] = val
        images[g] = GradedMap(space, space, entries)
    return Representation(ctx, space, images, weights, name=name)


def check_relations(rep, rels=None):
    """Evaluate every defining relation; list of (name, vanished)."""
    if rels is None:
        rels = defining_relations(rep.ctx)
    out = []
    for name, expr in rels:
        out.append((name, rep.evaluate_expr(expr).is_zero()))
    return out


# ---------------------------------------------------------------------------
# Highest-weight analysis and decomposition.
# ---------------------------------------------------------------------------


def raising_generators(ctx):
    return [gen_E(a, a + 1) for a in range(1, ctx.N)]


def lowering_generators(ctx):
    return [gen_E(a + 1, a) for a in range(1, ctx.N)]


def _joint_kernel_in_blocks(rep, gens):
    """Joint kernel of the given generator images, one weight block at a
    time; returns [(weight, ambient vector)] in descending weight order."""
    out = []
    mats = [rep.image(g) for g in gens]
    for weight, block in rep.weight_blocks().items():
        pos = {i: p for p, i in enumerate(block)}
        rows = []
        for mat in mats:
            by_row = {}
            for (r, c), v in mat.entries.items():
                if c in pos:
                    by_row.setdefault(r, {})[pos[c]] = v
            rows.extend(by_row.values())
        for vec in nullspace(rows, len(block)):
            out.append((weight, {block[j]: x for j, x in vec.items()}))
    return out


def highest_weight_vectors(rep):
    return _joint_kernel_in_blocks(rep, raising_generators(rep.ctx))


def generated_submodule(rep, seed):
    """Echelon basis of the submodule generated by a vector."""
    ech = Echelon()
    ech.add(seed)
    queue = [seed]
    mats = [rep.image(g) for g in all_generators(rep.ctx)]
    while queue:
        v = queue.pop()
        for mat in mats:
            w = mat.apply(v)
            if w and ech.add(w):
                queue.append(w)
    return ech.basis()


class Summand:
    """One irreducible constituent of a decomposed representation."""

    __slots__ = ("highest_weight", "lowest_weight", "dim", "basis",
                 "hw_vector")

    def __init__(self, highest_weight, lowest_weight, basis, hw_vector):
        self.highest_weight = highest_weight
        self.lowest_weight = lowest_weight
        self.basis = basis
        self.hw_vector = hw_vector
        self.dim = len(basis)

    @property
    def dual_label(self):
        """Highest weight of the dual of this summand."""
        return tuple(-x for x in self.lowest_weight)

    def __repr__(self):
        return ("Summand(hw=%s, dim=%d, lw=%s)"
                % (self.highest_weight, self.dim, self.lowest_weight))


def decompose(rep):
    """Split into highest-weight submodules with an exhaustiveness
    certificate: the summand bases are jointly independent and their
    dimensions add up to dim(rep)."""
    summands = []
    union = Echelon()
    total = 0
    for weight, vec in highest_weight_vectors(rep):
        basis = generated_submodule(rep, vec)
        sub = submodule_rep(rep, basis, name="hw=%s" % (weight,))
        lows = _joint_kernel_in_blocks(sub, lowering_generators(rep.ctx))
        if len(lows) != 1:
            raise ValueError("summand at %s has %d lowest-weight lines; "
                             "expected exactly 1 at generic q"
                             % (weight, len(lows)))
        low_weight = lows[0][0]
        summands.append(Summand(weight, low_weight, basis, vec))
        total += len(basis)
        for v in basis:
            if not union.add(v):
                raise ValueError("highest-weight closures overlap at %s"
                                 % (weight,))
    if total != rep.dim or union.dim != rep.dim:
        raise ValueError("decomposition does not exhaust the module: "
                         "%d of %d" % (union.dim, rep.dim))
    summands.sort(key=lambda s: s.highest_weight, reverse=True)
    return summands


# ---------------------------------------------------------------------------
# The two label families attached to tensor powers of V and of its dual.
# ---------------------------------------------------------------------------


def hook_partitions(ctx, k):
    """Partitions of k whose diagram fits the (m, n)-hook: at most n
    columns beyond row m (that is, row m+1 has length <= n)."""
    out = []

    def rec(remaining, max_part, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, max_part), 0, -1):
            if len(prefix) >= ctx.m and part > ctx.n:
                continue
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(k, k, [])
    return out


def partition_weight(ctx, diagram):
    """Label of the summand attached to a hook diagram: first m rows,
    then the column excesses over m."""
    rows = list(diagram)
    first = [rows[a] if a < len(rows) else 0 for a in range(ctx.m)]
    conj = [sum(1 for r in rows if r >= c + 1)
            for c in range(ctx.n)]
    tail = [max(h - ctx.m, 0) for h in conj]
    return tuple(first + tail)


def weight_to_diagram(ctx, weight):
    """Inverse of partition_weight on valid first-family labels: the
    full list of diagram rows, padded with zeros to length >= m+n.
    Returns None if the label is not of hook shape."""
    m, n = ctx.m, ctx.n
    first = list(weight[:m])
    tail = list(weight[m:])
    if any(x < 0 for x in weight):
        return None
    if any(first[i] < first[i + 1] for i in range(m - 1)):
        return None
    if any(tail[i] < tail[i + 1] for i in range(n - 1)):
        return None
    lower_rows = [sum(1 for t in tail if t >= j + 1)
                  for j in range(tail[0] if tail else 0)]
    rows = first + lower_rows
    while len(rows) < m + n:
        rows.append(0)
    # the reconstruction must itself be a partition (this rejects labels
    # whose tail support exceeds the m-th row), and the caller re-checks
    # the roundtrip through partition_weight
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        return None
    return tuple(rows)


def in_first_family(ctx, weight):
    """Membership of a label among the tensor-power family, with its
    diagram witness: (bool, rows-or-None)."""
    rows = weight_to_diagram(ctx, weight)
    if rows is None:
        return False, None
    if partition_weight(ctx, tuple(r for r in rows if r > 0)) != tuple(weight):
        return False, None
    return True, rows


_dual_power_cache = {}


def _vector_power_summands(ctx, k):
    key = (ctx.m, ctx.n, k)
    if key not in _dual_power_cache:
        rep = tensor_power(vector_rep(ctx), k)
        _dual_power_cache[key] = decompose(rep)
    return _dual_power_cache[key]


def dual_label_of(ctx, weight):
    """Highest weight of the dual of the first-family module labelled by
    the given weight (found inside the k-th tensor power)."""
    k = sum(weight)
    for s in _vector_power_summands(ctx, k):
        if s.highest_weight == tuple(weight):
            return s.dual_label
    raise ValueError("label %s not found in the %d-th tensor power"
                     % (weight, k))


def in_second_family(ctx, weight):
    """Membership among duals of the tensor-power family: (bool, witness).

    The witness is the first-family label whose dual carries this
    weight.  Uses k = -sum(weight) and searches hook diagrams of size k.
    """
    weight = tuple(weight)
    if all(x == 0 for x in weight):
        return True, ctx.zero_weight()
    k = -sum(weight)
    if k <= 0:
        return False, None
    for diagram in hook_partitions(ctx, k):
        mu = partition_weight(ctx, diagram)
        if dual_label_of(ctx, mu) == weight:
            return True, mu
    return False, None


# ---------------------------------------------------------------------------
# Contravariant forms and unitarity.
# ---------------------------------------------------------------------------


def vector_gram(ctx):
    """Diagonal Gram matrix (v_a, v_a) = prod_{c<a} q_c^{-1}."""
    N = ctx.N
    space = GradedSpace(tuple(ctx.parity(a) for a in range(1, N + 1)))
    return GradedMap(space, space, {
        (a - 1, a - 1): q_int(-sum(ctx.sigma(c) for c in range(1, a)))
        for a in range(1, N + 1)})


def dual_gram(ctx):
    """Gram matrix on the dual basis making the dual rep unitarisable."""
    N = ctx.N
    space = GradedSpace(tuple(ctx.parity(a) for a in range(1, N + 1)))
    base = vector_gram(ctx)
    return GradedMap(space, space, {
        (a - 1, a - 1): q_int(ctx.two_rho_eps(a)) / base.get(a - 1, a - 1)
        for a in range(1, N + 1)})


def kron_gram(g1, g2):
    """Gram of a tensor product: plain Kronecker product (diagonal grams
    acquire no Koszul signs)."""
    return g1.tensor(g2)


def is_adjoint_pair(rep, gram, theta, q0=None):
    """Does M(g)^T G = G M(*g) hold for every generator?

    With q0 = None the identity is checked exactly in Q(q); otherwise
    both sides are specialised first (conjugation is trivial at a
    rational point)."""
    ctx = rep.ctx
    for g in all_generators(ctx):
        lhs = rep.image(g).transpose() @ gram
        rhs = gram @ rep.evaluate_expr(star(UqExpression.from_gen(ctx, g),
                                            theta))
        if q0 is None:
            if lhs != rhs:
                return False
        else:
            if lhs.specialize(q0) != rhs.specialize(q0):
                return False
    return True


def gram_is_positive(gram, q0):
    """Positive-definiteness for diagonal Gram matrices at rational q0."""
    dense = gram.specialize(q0)
    d = gram.domain.dim
    for i in range(d):
        for j in range(d):
            if i == j:
                if dense[i][i] <= 0:
                    return False
            elif dense[i][j] != 0:
                raise ValueError("positivity test implemented for "
                                 "diagonal Gram matrices only")
    return True


def unitarity_types(rep, gram, q0):
    """Which star types make (rep, gram) a unitary pair at q0."""
    out = []
    for theta in (1, 2):
        if gram_is_positive(gram, q0) and is_adjoint_pair(rep, gram, theta,
                                                          q0=q0):
            out.append(theta)
    return out


def classify_weight(ctx, weight):
    """Family membership report for an integral label: whether it
    labels a summand of a tensor power of the vector module, whether it
    labels the dual of one, and the witnesses (the hook diagram, and
    the tensor-family label whose dual it is)."""
    ok1, rows = in_first_family(ctx, weight)
    ok2, mu = in_second_family(ctx, weight)
    return {
        "in_tensor_family": ok1,
        "in_dual_family": ok2,
        "diagram": rows,
        "dual_witness": mu,
    }


def unitarity_check(rep, gram, q0):
    """Unitarity report at a rational point: Gram positivity, which
    star types satisfy the adjointness identity, and which combine both."""
    positive = gram_is_positive(gram, q0)
    adjoint = [t for t in (1, 2) if is_adjoint_pair(rep, gram, t, q0=q0)]
    return {
        "q0": q0,
        "positive": positive,
        "adjoint_types": adjoint,
        "unitary_types": adjoint if positive else [],
    }
