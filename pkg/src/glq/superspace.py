"""Quantum projective superspace: the subalgebra of coordinate functions
generated by the last-column entries z_a = t_{a,N} and their barred
partners, presented by an explicit rewriting system.

A letter is (barred, index).  Words rewrite by:

  * sorting same-type neighbours (plain ascending, barred descending;
    odd letters square to zero),
  * pushing barred letters to the right past plain ones, producing
    lower-index correction pairs on equal indices,
  * eliminating the index-N cross pairs in both orders against the
    inhomogeneous sphere relation.

Every rule strictly decreases a four-component lexicographic measure
(cross pairs, cross index weight, index-N letter count, same-type
disorder), so rewriting terminates regardless of strategy.  Normal
monomials are ascending plain letters followed by descending barred
letters; the descending barred order guarantees that a word holding
both z_N and zbar_N exposes them adjacently at the block junction,
where the sphere rule removes them — so no normal monomial contains
both, which is what makes the normal form a genuine basis.  Each rule
is an identity of coordinate functionals, which the test-suite checks
by pairing both sides against probe elements of the enveloping
superalgebra.
"""

from __future__ import annotations

import random
from collections import namedtuple

from .coeff import RatFunc, ZERO, ONE, q_int
from .coords import CoordLetter, GqElement

SpaceLetter = namedtuple("SpaceLetter", ["barred", "index"])


def z_(a):
    return SpaceLetter(False, a)


def zb_(a):
    return SpaceLetter(True, a)


def space_letter_parity(ctx, letter):
    """z_a carries the parity of t_{a,N}, i.e. |a| + 1."""
    return (ctx.parity(letter.index) + 1) % 2


def to_coordinate_letter(ctx, letter):
    return CoordLetter(letter.barred, letter.index, ctx.N)


def to_coordinate_element(ctx, element):
    out = GqElement.zero(ctx)
    for word, c in element.terms.items():
        letters = tuple(to_coordinate_letter(ctx, l) for l in word)
        out = out + GqElement.from_word(ctx, letters, c)
    return out


class SuperspaceElement:
    """Linear combination of superspace words over the coefficient field."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=None):
        self.ctx = ctx
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @staticmethod
    def zero(ctx):
        return SuperspaceElement(ctx)

    @staticmethod
    def one(ctx):
        return SuperspaceElement(ctx, {(): ONE})

    @staticmethod
    def from_word(ctx, word, coeff=ONE):
        return SuperspaceElement(ctx, {tuple(word): coeff})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, SuperspaceElement)
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, ZERO) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return SuperspaceElement(self.ctx, out)

    def __neg__(self):
        return SuperspaceElement(
            self.ctx, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        if not s:
            return SuperspaceElement.zero(self.ctx)
        return SuperspaceElement(
            self.ctx, {w: c * s for w, c in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                key = w1 + w2
                s = out.get(key, ZERO) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return SuperspaceElement(self.ctx, out)

    def __repr__(self):
        return "SuperspaceElement(%d terms)" % len(self.terms)


# ---------------------------------------------------------------------------
# The rewriting system.
# ---------------------------------------------------------------------------


def measure(ctx, word):
    """Four-component termination measure, compared lexicographically:
    (cross pairs, cross index weight, index-N letters, same-type
    inversions)."""
    N = ctx.N
    cross = 0
    cross_weight = 0
    top = sum(1 for l in word if l.index == N)
    inversions = 0
    for i in range(len(word)):
        for j in range(i + 1, len(word)):
            li, lj = word[i], word[j]
            if li.barred and not lj.barred:
                cross += 1
                cross_weight += li.index + lj.index
            if not li.barred and not lj.barred and li.index > lj.index:
                inversions += 1
            if li.barred and lj.barred and li.index < lj.index:
                inversions += 1
    return (cross, cross_weight, top, inversions)


def _rule_at(ctx, word, i):
    """Name of the rule applying to the adjacent pair at position i, or
    None."""
    N = ctx.N
    x, y = word[i], word[i + 1]
    if not x.barred and not y.barred:
        if x.index > y.index:
            return "sort_plain"
        if x.index == y.index and ctx.parity(x.index) == 0:
            # z_a is odd exactly when a <= m, i.e. |a| = 0.
            return "odd_square_plain"
        return None
    if x.barred and y.barred:
        # Barred letters normalise in descending order, so that a word
        # holding both z_N and zbar_N always exposes the sphere redex
        # at the junction of the two blocks.
        if x.index < y.index:
            return "sort_barred"
        if x.index == y.index and ctx.parity(x.index) == 0:
            return "odd_square_barred"
        return None
    if x.barred and not y.barred:
        if x.index != y.index:
            return "pass_distinct"
        if x.index < N:
            return "pass_equal"
        return "sphere_crossed"
    if x.index == N and y.index == N:
        return "sphere_sorted"
    return None


def redexes(ctx, word):
    """All (position, rule) pairs available in the word."""
    found = []
    for i in range(len(word) - 1):
        rule = _rule_at(ctx, word, i)
        if rule is not None:
            found.append((i, rule))
    return found


def apply_rule(ctx, word, i, rule):
    """Replace the pair at position i, returning {word: coeff}."""
    N = ctx.N
    x, y = word[i], word[i + 1]
    head, tail = word[:i], word[i + 2:]
    px = space_letter_parity(ctx, x)
    py = space_letter_parity(ctx, y)
    out = {}

    def put(mid, coeff):
        key = head + tuple(mid) + tail
        s = out.get(key, ZERO) + coeff
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    if rule in ("odd_square_plain", "odd_square_barred"):
        return {}
    if rule == "sort_plain":
        c = q_int(-1)
        put((y, x), -c if (px * py) % 2 else c)
        return out
    if rule == "sort_barred":
        c = q_int(-1)
        put((y, x), -c if (px * py) % 2 else c)
        return out
    if rule == "pass_distinct":
        c = q_int(1)
        put((y, x), -c if (px * py) % 2 else c)
        return out
    if rule == "pass_equal":
        a = x.index
        qa = q_int(ctx.sigma(a))
        sign = -ONE if py % 2 else ONE
        put((y, x), q_int(1) * qa * sign)
        gap = q_int(1) - q_int(-1)
        for c in range(1, a):
            put((zb_(c), z_(c)), -(qa * sign * gap))
        return out
    if rule == "sphere_crossed":
        put((), ONE)
        for c in range(1, N):
            put((zb_(c), z_(c)), -ONE)
        return out
    if rule == "sphere_sorted":
        put((), ONE)
        for c in range(1, N):
            e = ctx.two_rho_eps(c) - ctx.two_rho_eps(N)
            sgn = (ctx.parity(c) + ctx.parity(N)) % 2
            coeff = q_int(e)
            put((z_(c), zb_(c)), coeff if sgn else -coeff)
        return out
    raise ValueError("unknown rule %r" % rule)


def is_normal(ctx, word):
    return not redexes(ctx, word)


def normal_form(ctx, element, strategy="leftmost", seed=0,
                instrument=False):
    """Rewrite to normal form.

    strategy: 'leftmost', 'rightmost', or 'random' (seeded).  With
    instrument=True, every step asserts the strict lexicographic
    decrease of the termination measure and the step count is returned.
    Returns (normal element, steps).
    """
    rng = random.Random(seed)
    work = dict(element.terms)
    done = {}
    steps = 0
    while work:
        word, coeff = work.popitem()
        reds = redexes(ctx, word)
        if not reds:
            s = done.get(word, ZERO) + coeff
            if s:
                done[word] = s
            else:
                done.pop(word, None)
            continue
        if strategy == "leftmost":
            i, rule = reds[0]
        elif strategy == "rightmost":
            i, rule = reds[-1]
        elif strategy == "random":
            i, rule = reds[rng.randrange(len(reds))]
        else:
            raise ValueError("unknown strategy %r" % strategy)
        steps += 1
        before = measure(ctx, word) if instrument else None
        for new_word, c in apply_rule(ctx, word, i, rule).items():
            if instrument:
                assert measure(ctx, new_word) < before, (
                    "measure failed to decrease", rule, word, new_word)
            s = work.get(new_word, ZERO) + coeff * c
            if s:
                work[new_word] = s
            else:
                work.pop(new_word, None)
    return SuperspaceElement(ctx, done), steps


# ---------------------------------------------------------------------------
# Distinguished elements and monomial bases.
# ---------------------------------------------------------------------------


def sphere_relation_element(ctx, signed=True):
    """sum_c s_c q^{(2rho, eps_c)} z_c zbar_c minus its scalar value,
    where s_c = (-1)^{|c|} in the signed (correct) version and 1 in the
    unsigned one.  The signed version rewrites to zero; the unsigned one
    does not, and is kept only so the defect stays documented."""
    N = ctx.N
    total = SuperspaceElement.zero(ctx)
    for c in range(1, N + 1):
        coeff = q_int(ctx.two_rho_eps(c))
        if signed and ctx.parity(c) % 2:
            coeff = -coeff
        total = total + SuperspaceElement.from_word(
            ctx, (z_(c), zb_(c)), coeff)
    scalar = q_int(ctx.two_rho_eps(N))
    if signed and ctx.parity(N) % 2:
        scalar = -scalar
    return total - SuperspaceElement(ctx, {(): scalar})


def plain_monomials(ctx, k):
    """Normal pure-z words of total degree k (odd indices at most once,
    even indices with repetition, sorted)."""
    N = ctx.N
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for a in range(start, N + 1):
            # z_a with a <= m is odd and appears at most once.
            top = 1 if ctx.parity(a) == 0 else remaining
            for count in range(1, top + 1):
                rec(a + 1, remaining - count, acc + [z_(a)] * count)

    rec(1, k, [])
    return out


def barred_monomials(ctx, k):
    """Normal pure-zbar words of total degree k (descending index
    order, odd indices at most once)."""
    return [tuple(zb_(l.index) for l in reversed(w))
            for w in plain_monomials(ctx, k)]


def multidegree(ctx, word):
    """Counts per index, barred counted with the opposite sign on the
    grading used by the translation action."""
    plain = [0] * ctx.N
    barred = [0] * ctx.N
    for l in word:
        if l.barred:
            barred[l.index - 1] += 1
        else:
            plain[l.index - 1] += 1
    return tuple(plain), tuple(barred)


def charge(word):
    """Plain-letter count minus barred-letter count."""
    return sum(-1 if l.barred else 1 for l in word)


# ---------------------------------------------------------------------------
# Gradings, multi-indices, the co-action, and the invariant subalgebra.
# ---------------------------------------------------------------------------


def gl1_weight(ctx, element):
    """The integer grading (barred letter count) - (plain letter count),
    constant across the element's terms; mixed input is an error."""
    values = {-charge(w) for w in element.terms}
    if not values:
        return 0
    if len(values) > 1:
        raise ValueError("element is not homogeneous: weights %s"
                         % sorted(values))
    return values.pop()


def multi_index_of(ctx, word):
    """The (theta; l) exponent pair of each block of a normal monomial:
    theta collects the nilpotent indices (at most 1 each), l the rest."""
    plain, barred = multidegree(ctx, word)
    m = ctx.m

    def split(counts):
        theta = counts[:m]
        if any(t > 1 for t in theta):
            raise ValueError("nilpotent letter repeated: %s" % (counts,))
        return theta, counts[m:]

    return split(plain), split(barred)


def word_of_multi_index(ctx, plain_index, barred_index):
    """Canonical word with the given exponents: plain ascending, then
    barred descending."""
    theta_p, l_p = plain_index
    theta_b, l_b = barred_index
    plain_counts = tuple(theta_p) + tuple(l_p)
    barred_counts = tuple(theta_b) + tuple(l_b)
    if len(plain_counts) != ctx.N or len(barred_counts) != ctx.N:
        raise ValueError("multi-index length must be m + n")
    word = []
    for a in range(1, ctx.N + 1):
        word.extend([z_(a)] * plain_counts[a - 1])
    for a in range(ctx.N, 0, -1):
        word.extend([zb_(a)] * barred_counts[a - 1])
    return tuple(word)


def _space_word(ctx, coord_word):
    letters = []
    for l in coord_word:
        if l.col != ctx.N:
            raise ValueError("letter %r is not a superspace letter" % (l,))
        letters.append(SpaceLetter(l.barred, l.row))
    return tuple(letters)


def coaction(ctx, element):
    """The right co-action sending z_a to sum_c z_c (x) t_{ac}: the
    coordinate coproduct with its legs flipped under the Koszul sign.
    Returns {(superspace word, coordinate word): coefficient}."""
    from .coords import coproduct as coords_coproduct, coord_word_parity

    terms = {}
    f = to_coordinate_element(ctx, element)
    for (wl, wr), c in coords_coproduct(f).items():
        sgn = coord_word_parity(ctx, wl) * coord_word_parity(ctx, wr)
        if sgn % 2:
            c = -c
        key = (_space_word(ctx, wr), wl)
        s = terms.get(key, ZERO) + c
        if s:
            terms[key] = s
        else:
            terms.pop(key, None)
    return terms


def coaction_pair(ctx, terms, x, y):
    """Evaluate a co-action element against the probe pair (x, y):
    first legs paired as superspace functionals, second legs as
    coordinate functionals."""
    from .coords import evaluate, GqElement

    total = ZERO
    for (ws, wg), c in terms.items():
        f1 = to_coordinate_element(ctx, SuperspaceElement.from_word(ctx, ws))
        v1 = evaluate(ctx, f1, x)
        if not v1:
            continue
        v2 = evaluate(ctx, GqElement(ctx, {wg: ONE}), y)
        if v2:
            total = total + c * v1 * v2
    return total


def cp_basis(ctx, d, probe_degree=None):
    """Candidate spanning monomials of the bidegree-(d, d) slice of the
    invariant subalgebra, with a functional rank certificate.

    Returns (words, rank, dependencies): all products of a degree-d
    plain monomial with a degree-d barred monomial, their exact rank as
    functionals on the PBW probe family, and a basis of the dependency
    space (empty when the monomials are independent)."""
    from .uq import pbw_probe_expressions
    from .coords import evaluate
    from .graded import rank as _rank, nullspace

    if probe_degree is None:
        probe_degree = 2 * d
    words = []
    for pw in plain_monomials(ctx, d):
        for bw in barred_monomials(ctx, d):
            words.append(pw + bw)
    probes = pbw_probe_expressions(ctx, probe_degree)
    columns = []
    for w in words:
        f = to_coordinate_element(ctx, SuperspaceElement.from_word(ctx, w))
        columns.append([evaluate(ctx, f, x) for x in probes])
    rows = []
    for pi in range(len(probes)):
        row = {ci: col[pi] for ci, col in enumerate(columns) if col[pi]}
        if row:
            rows.append(row)
    deps = nullspace(rows, len(words))
    return words, len(words) - len(deps), deps


def verify_identities(ctx, seed=0, word_count=20, max_len=6):
    """Report on the scalar identity, the unit relation, and strategy
    confluence on random words."""
    report = {}
    signed, _ = normal_form(ctx, sphere_relation_element(ctx, signed=True))
    report["derived_identity"] = signed.is_zero()
    unsigned, _ = normal_form(ctx, sphere_relation_element(ctx, signed=False))
    report["unsigned_variant_nonzero"] = not unsigned.is_zero()
    unit = SuperspaceElement.zero(ctx)
    for c in range(1, ctx.N + 1):
        unit = unit + SuperspaceElement.from_word(ctx, (zb_(c), z_(c)))
    unit_nf, _ = normal_form(ctx, unit)
    report["unit_relation"] = unit_nf == SuperspaceElement.one(ctx)
    rng = random.Random(seed)
    alphabet = [z_(a) for a in range(1, ctx.N + 1)]
    alphabet += [zb_(a) for a in range(1, ctx.N + 1)]
    report["confluence_words"] = word_count
    report["confluence"] = True
    report["witness"] = None
    for t in range(word_count):
        length = rng.randint(2, max_len)
        word = tuple(rng.choice(alphabet) for _ in range(length))
        elem = SuperspaceElement.from_word(ctx, word)
        first, _ = normal_form(ctx, elem, strategy="leftmost")
        for strategy in ("rightmost", "random"):
            other, _ = normal_form(ctx, elem, strategy=strategy,
                                   seed=seed + t)
            if other != first:
                report["confluence"] = False
                if report["witness"] is None:
                    report["witness"] = word
    return report
