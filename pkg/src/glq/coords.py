"""The coordinate Hopf superalgebra of the quantum general linear supergroup.

Elements are Q(q)-linear combinations of words in the coordinate letters
t_{ab} and t-bar_{ab} (a, b = 1..m+n), of parity |a| + |b|.  A word is
identified with a functional on the quantised enveloping superalgebra
through the canonical pairing

    < w_1 ... w_l , x >  =  (-1)^{sum_{i<j} |w_j| |a_i|}
                            ((rho_1 (x) ... (x) rho_l)(x))_{(a_1..a_l), (b_1..b_l)}

where letter w_i has subscripts (a_i, b_i), rho_i is the vector
representation for a plain letter and its antipode-twisted dual for a
barred one, and multi-indices are flattened row-major.  All structural
identities of the coordinate algebra are *functional*: two elements are
equal when they agree against every probe word up to a chosen degree.

Hopf structure on letters (same shape for barred letters):

    Delta(t_{ab}) = sum_c (-1)^{(|a|+|c|)(|c|+|b|)} t_{ac} (x) t_{cb}
    eps(t_{ab})   = delta_{ab}
    S(t_{ab})     = (-1)^{|a||b| + |a|} t-bar_{ba}
    S(t-bar_{ab}) = (-1)^{|a||b| + |b|} q^{(2rho, eps_b - eps_a)} t_{ba}

extended anti-multiplicatively with the Koszul sign for S, and
multiplicatively with Koszul leg-collection signs for Delta.  The star
operations (theta = 1, 2) send t_{ab} to (-1)^{(theta+|a|)(|a|+|b|)}
t-bar_{ab} and back with the same sign, reversing products without a
Koszul sign.
"""

from __future__ import annotations

from collections import namedtuple

from .coeff import RatFunc, ZERO, ONE, q_int
from .uq import UqExpression, antipode, probe_monomials, word_parity
from .reps import Representation, dual_rep, tensor_rep, trivial_rep, vector_rep


CoordLetter = namedtuple("CoordLetter", ["barred", "row", "col"])


def t_(a, b):
    return CoordLetter(False, a, b)


def tbar_(a, b):
    return CoordLetter(True, a, b)


def letter_parity(ctx, letter):
    return (ctx.parity(letter.row) + ctx.parity(letter.col)) % 2


def coord_word_parity(ctx, word):
    return sum(letter_parity(ctx, w) for w in word) % 2


class GqElement:
    """A Q(q)-linear combination of coordinate words."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=None):
        self.ctx = ctx
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[tuple(w)] = c

    @staticmethod
    def zero(ctx):
        return GqElement(ctx)

    @staticmethod
    def one(ctx):
        return GqElement(ctx, {(): ONE})

    @staticmethod
    def from_word(ctx, word, coeff=ONE):
        return GqElement(ctx, {tuple(word): coeff})

    @staticmethod
    def from_letter(ctx, letter, coeff=ONE):
        return GqElement(ctx, {(letter,): coeff})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, GqElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, ZERO) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return GqElement(self.ctx, out)

    def __neg__(self):
        return GqElement(self.ctx, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        if isinstance(s, int):
            s = RatFunc.from_int(s)
        if not s:
            return GqElement.zero(self.ctx)
        return GqElement(self.ctx, {w: c * s for w, c in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out.get(w, ZERO) + c1 * c2
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return GqElement(self.ctx, out)

    def __repr__(self):
        if not self.terms:
            return "GqElement(0)"
        bits = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            name = ".".join(("tb[%d,%d]" if l.barred else "t[%d,%d]")
                            % (l.row, l.col) for l in w) or "1"
            bits.append("(%s) %s" % (self.terms[w], name))
        return "GqElement[%s]" % " + ".join(bits)


# ---------------------------------------------------------------------------
# The canonical pairing against enveloping-algebra words.
# ---------------------------------------------------------------------------


_profile_reps = {}


def profile_rep(ctx, profile):
    """The tensor representation with one vector leg per False and one
    dual leg per True, cached per (m, n, profile)."""
    key = (ctx.m, ctx.n, tuple(profile))
    rep = _profile_reps.get(key)
    if rep is not None:
        return rep
    if not profile:
        rep = trivial_rep(ctx)
    else:
        base_key = (ctx.m, ctx.n, ())
        if base_key not in _profile_reps:
            _profile_reps[base_key] = trivial_rep(ctx)
        v_key = (ctx.m, ctx.n, "V")
        d_key = (ctx.m, ctx.n, "D")
        if v_key not in _profile_reps:
            _profile_reps[v_key] = vector_rep(ctx)
            _profile_reps[d_key] = dual_rep(_profile_reps[v_key])
        head = profile_rep(ctx, profile[:-1]) if len(profile) > 1 else None
        leg = _profile_reps[d_key if profile[-1] else v_key]
        rep = leg if head is None else tensor_rep(head, leg)
    _profile_reps[key] = rep
    return rep


def evaluate_word(ctx, letters, uq_word):
    """The canonical pairing of a coordinate word with a generator word."""
    letters = tuple(letters)
    if not letters:
        rep = profile_rep(ctx, ())
        return rep.evaluate_word(uq_word).get(0, 0)
    N = ctx.N
    sign = 0
    for i in range(len(letters)):
        for j in range(i + 1, len(letters)):
            sign += letter_parity(ctx, letters[j]) * ctx.parity(letters[i].row)
    row = 0
    col = 0
    for l in letters:
        row = row * N + (l.row - 1)
        col = col * N + (l.col - 1)
    rep = profile_rep(ctx, tuple(l.barred for l in letters))
    val = rep.evaluate_word(uq_word).get(row, col)
    return -val if sign % 2 else val


def evaluate(ctx, element, x):
    """Pair a GqElement with a UqExpression (or a single word)."""
    if not isinstance(x, UqExpression):
        x = UqExpression.from_word(ctx, x)
    total = ZERO
    for w, c in element.terms.items():
        for xw, xc in x.terms.items():
            v = evaluate_word(ctx, w, xw)
            if v:
                total = total + c * xc * v
    return total


def counit(element):
    """eps(f) = <f, 1>."""
    return evaluate(element.ctx, element, ())


def functional_zero(ctx, element, degree):
    """Does the element vanish against every probe word up to degree?"""
    for x in probe_monomials(ctx, degree):
        if evaluate(ctx, element, x):
            return False
    return True


def functional_equal(ctx, f, g, degree):
    return functional_zero(ctx, f - g, degree)


# ---------------------------------------------------------------------------
# Hopf structure.
# ---------------------------------------------------------------------------


def coproduct_word(ctx, letters):
    """Delta of a coordinate word, as {(left word, right word): coeff}.

    Each letter splits over an internal index c; the Koszul
    leg-collection sign multiplies the per-letter coproduct signs.
    """
    N = ctx.N
    out = {((), ()): ONE}
    for letter in letters:
        a, b = letter.row, letter.col
        pa = ctx.parity(a)
        pb = ctx.parity(b)
        nxt = {}
        for (wl, wr), coeff in out.items():
            pright = coord_word_parity(ctx, wr)
            for c in range(1, N + 1):
                pc = ctx.parity(c)
                first = CoordLetter(letter.barred, a, c)
                second = CoordLetter(letter.barred, c, b)
                sgn = (pa + pc) * (pc + pb)  # per-letter coproduct sign
                sgn += pright * (pa + pc)    # move the new left letter home
                val = coeff if sgn % 2 == 0 else -coeff
                key = (wl + (first,), wr + (second,))
                s = nxt.get(key, ZERO) + val
                if s:
                    nxt[key] = s
                else:
                    nxt.pop(key, None)
        out = nxt
    return out


def coproduct(element):
    """Delta on a GqElement: {(left, right): coeff} summed over terms."""
    ctx = element.ctx
    out = {}
    for w, c in element.terms.items():
        for key, dc in coproduct_word(ctx, w).items():
            s = out.get(key, ZERO) + c * dc
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def pair_coproduct(ctx, dfn, x, y):
    """< Delta f, x (x) y > with the graded pairing of tensors:
    < f' (x) f'', x (x) y > = (-1)^{|f''||x|} < f', x > < f'', y >."""
    px = word_parity(ctx, x)
    total = ZERO
    for (wl, wr), c in dfn.items():
        sgn = coord_word_parity(ctx, wr) * px
        v1 = evaluate_word(ctx, wl, x)
        if not v1:
            continue
        v2 = evaluate_word(ctx, wr, y)
        if not v2:
            continue
        term = c * v1 * v2
        total = total + (-term if sgn % 2 else term)
    return total


def antipode_letter(ctx, letter):
    """S on one letter: (new letter, coefficient)."""
    a, b = letter.row, letter.col
    pa, pb = ctx.parity(a), ctx.parity(b)
    if not letter.barred:
        sgn = pa * pb + pa
        coeff = ONE if sgn % 2 == 0 else -ONE
        return CoordLetter(True, b, a), coeff
    sgn = pa * pb + pb
    exp = ctx.two_rho_eps(b) - ctx.two_rho_eps(a)
    coeff = q_int(exp)
    if sgn % 2:
        coeff = -coeff
    return CoordLetter(False, b, a), coeff


def antipode_word_coords(ctx, letters):
    """S(w_1 ... w_l) = Koszul sign times S(w_l) ... S(w_1)."""
    pars = [letter_parity(ctx, w) for w in letters]
    sgn = 0
    for i in range(len(letters)):
        for j in range(i + 1, len(letters)):
            sgn += pars[i] * pars[j]
    coeff = ONE if sgn % 2 == 0 else -ONE
    out = []
    for letter in reversed(letters):
        nl, c = antipode_letter(ctx, letter)
        out.append(nl)
        coeff = coeff * c
    return tuple(out), coeff


def antipode_coords(element):
    ctx = element.ctx
    out = {}
    for w, c in element.terms.items():
        nw, nc = antipode_word_coords(ctx, w)
        s = out.get(nw, ZERO) + c * nc
        if s:
            out[nw] = s
        else:
            out.pop(nw, None)
    return GqElement(ctx, out)


def star_letter(ctx, letter, theta):
    """Star on one letter: bar status flips, indices stay."""
    a, b = letter.row, letter.col
    sgn = (theta + ctx.parity(a)) * (ctx.parity(a) + ctx.parity(b))
    coeff = ONE if sgn % 2 == 0 else -ONE
    return CoordLetter(not letter.barred, a, b), coeff


def star_coords(element, theta=1):
    """Antilinear anti-automorphism on coordinates (no Koszul sign);
    conjugation is trivial on rational coefficients at real q."""
    if theta not in (1, 2):
        raise ValueError("star type must be 1 or 2")
    ctx = element.ctx
    out = {}
    for w, c in element.terms.items():
        letters = []
        coeff = c
        for letter in reversed(w):
            nl, nc = star_letter(ctx, letter, theta)
            letters.append(nl)
            coeff = coeff * nc
        key = tuple(letters)
        s = out.get(key, ZERO) + coeff
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return GqElement(ctx, out)


def star_coproduct(element, theta=1):
    """(* (x) *) Delta (f), with the Koszul convention for a tensor of
    antilinear odd-degree-aware maps: (* (x) *)(a (x) b) =
    (-1)^{|a||b|} (*a (x) *b).  Compares against Delta(*(f))."""
    ctx = element.ctx
    out = {}
    for (wl, wr), c in coproduct(element).items():
        if (coord_word_parity(ctx, wl) * coord_word_parity(ctx, wr)) % 2:
            c = -c
        sl = star_coords(GqElement.from_word(ctx, wl), theta)
        sr = star_coords(GqElement.from_word(ctx, wr), theta)
        ((nwl, cl),) = sl.terms.items()
        ((nwr, cr),) = sr.terms.items()
        key = (nwl, nwr)
        s = out.get(key, ZERO) + c * cl * cr
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


# ---------------------------------------------------------------------------
# Certificates and matrix coefficients of constructed irreducibles.
# ---------------------------------------------------------------------------


def functional_witness(ctx, f, g, degree):
    """First probe word on which two coordinate elements disagree, or
    None when they agree up to the probe degree."""
    diff = f - g
    for x in probe_monomials(ctx, degree):
        if evaluate(ctx, diff, x):
            return x
    return None


def matrix_coefficients(ctx, profile, summands, which):
    """Entry functionals of one summand of a tensor representation,
    realized as exact combinations of coordinate words.

    `profile` is the tuple of barred flags defining the ambient tensor
    product (False = vector leg, True = dual leg), `summands` its full
    decomposition, and `which` selects the summand.  Returns a square
    list-of-lists of GqElements; entry (i, j) evaluates on every probe
    exactly as entry (i, j) of the summand's representation matrices.
    """
    from .graded import solve, tensor_unindex

    rep = profile_rep(ctx, profile)
    dim = rep.dim
    N = ctx.N
    cols = []
    block_start = None
    for si, s in enumerate(summands):
        if si == which:
            block_start = len(cols)
        cols.extend(s.basis)
    if block_start is None or len(cols) != dim:
        raise ValueError("summand list does not decompose the module")
    rows = []
    for r in range(dim):
        row = {}
        for c, vec in enumerate(cols):
            v = vec.get(r)
            if v:
                row[c] = v
        rows.append(row)
    # column r of the inverse change of basis
    inv_cols = []
    for r in range(dim):
        rhs = [ONE if t == r else ZERO for t in range(dim)]
        sol = solve(rows, dim, rhs)
        if sol is None:
            raise ValueError("summand bases are linearly dependent")
        inv_cols.append(sol)
    target = summands[which]
    d = target.dim
    dims = tuple(N for _ in profile)
    out = []
    for i in range(d):
        out_row = []
        for j in range(d):
            terms = {}
            vj = target.basis[j]
            for r in range(dim):
                di = inv_cols[r].get(block_start + i)
                if not di:
                    continue
                rid = tensor_unindex(r, dims) if profile else ()
                pr = [ctx.parity(x + 1) for x in rid]
                for s_flat, cs in vj.items():
                    sid = (tensor_unindex(s_flat, dims) if profile else ())
                    word = tuple(
                        CoordLetter(bar, a + 1, b + 1)
                        for bar, a, b in zip(profile, rid, sid))
                    sign = 0
                    pw = [letter_parity(ctx, l) for l in word]
                    for u in range(len(word)):
                        for v in range(u + 1, len(word)):
                            sign += pw[v] * pr[u]
                    coeff = di * cs
                    if sign % 2:
                        coeff = -coeff
                    acc = terms.get(word, ZERO) + coeff
                    if acc:
                        terms[word] = acc
                    else:
                        terms.pop(word, None)
            out_row.append(GqElement(ctx, terms))
        out.append(out_row)
    return out
