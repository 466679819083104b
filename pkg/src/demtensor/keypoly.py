"""Key polynomials: Demazure operators, the key basis, product expansion.

A key polynomial is indexed by an arbitrary weight nu through the pair
(dominant representative, minimal coset representative moving it to nu) and
is realized as the character of the corresponding Demazure crystal.  The
divided-difference operators give an independent route to the same
characters, and products expand in the key basis by an exact linear solve
over the rationals (no monomial order is ever chosen, and uniqueness of the
solution doubles as a linear-independence check of the candidate keys).
"""

from fractions import Fraction
from functools import lru_cache

from .cartan import vadd, vsub
from .crystal import CharPoly, character, weight_of
from .decomp import condition_check, dominant_paths, lifted_witness
from .demazure import generate_demazure
from .lspath import dominant_representative


class NotInSpan(Exception):
    """The polynomial is not a linear combination of the candidate keys."""


class NonIntegralCoefficient(Exception):
    """The expansion solved but produced a non-integer coefficient."""


class TheoremViolation(Exception):
    """A positivity or counting identity that must hold failed."""


def demazure_operator(rs, f, i):
    """Divided-difference operator on the group algebra, term by term.

    A monomial with pairing m against the i-th simple coroot contributes the
    geometric string down to its reflection when m >= 0, nothing when
    m == -1, and minus the interior string when m <= -2.
    """
    alpha = rs.simple_roots[i - 1].fw
    out = {}

    def add(w, c):
        out[w] = out.get(w, 0) + c

    for w, c in f.terms.items():
        m = rs.pairing(w, i)
        if m >= 0:
            x = w
            for _ in range(m + 1):
                add(x, c)
                x = vsub(x, alpha)
        elif m <= -2:
            x = vadd(w, alpha)
            for _ in range(-m - 1):
                add(x, -c)
                x = vadd(x, alpha)
    return CharPoly(out)


def demazure_operator_word(rs, f, word):
    """Apply the operators of a word, rightmost letter first."""
    for i in reversed(word):
        f = demazure_operator(rs, f, i)
    return f


class KeyIndex:
    """Canonical index of a key polynomial: dominant shape plus witness."""

    __slots__ = ("shape", "witness")

    def __init__(self, shape, witness):
        self.shape = shape
        self.witness = witness

    @property
    def weight(self):
        """The indexing weight: the witness applied to the shape."""
        return self.witness.group.apply(self.witness, self.shape)

    def __eq__(self, other):
        return (
            isinstance(other, KeyIndex)
            and self.shape == other.shape
            and self.witness == other.witness
        )

    def __hash__(self):
        return hash((self.shape, self.witness.matrix))

    def sort_key(self):
        return (self.shape, self.witness.word)

    def __repr__(self):
        return "KeyIndex(shape=%r, witness=%r)" % (self.shape, self.witness)


def key_index(group, nu):
    """Normalize an arbitrary weight to its key index."""
    nu = tuple(nu)
    shape = dominant_representative(group, nu)
    for u in group.elements:
        if group.apply(u, shape) == nu:
            return KeyIndex(shape, group.coset_min_weight(u, shape))
    raise AssertionError("unreachable: %r not in the orbit of its dominant form" % (nu,))


@lru_cache(maxsize=None)
def _key_polynomial_cached(group, shape, witness_matrix):
    witness = group.element_of_matrix(witness_matrix)
    dem = generate_demazure(group, witness, shape)
    poly = character(dem.elements)
    check = demazure_operator_word(group.rs, CharPoly.monomial(shape), witness.word)
    if poly != check:
        raise AssertionError(
            "crystal character and operator character disagree on %r" % (witness,)
        )
    return poly


def key_polynomial(group, nu):
    """Character of the Demazure crystal indexed by a weight or KeyIndex."""
    idx = nu if isinstance(nu, KeyIndex) else key_index(group, nu)
    return _key_polynomial_cached(group, idx.shape, idx.witness.matrix)


def key_of_pair(group, w, lam):
    """Key polynomial of the weight w(lam), as a (index, polynomial) pair."""
    idx = key_index(group, group.apply(w, lam))
    return idx, key_polynomial(group, idx)


# -- expansion in the key basis ----------------------------------------------------


def _dominant_weights_below(group, bound):
    """Dominant weights whose difference from the bound is a sum of simple roots.

    Walks the weight diagram of the bound: subtract simple roots, keep
    whatever stays inside the convex hull of the orbit of the bound.
    """
    rs = group.rs
    seen = {bound}
    frontier = [bound]
    out = [bound] if rs.is_dominant(bound) else []
    while frontier:
        nxt = []
        for x in frontier:
            for root in rs.simple_roots:
                y = vsub(x, root.fw)
                if y in seen:
                    continue
                seen.add(y)
                if dominance_leq(group, dominant_representative(group, y), bound):
                    nxt.append(y)
                    if rs.is_dominant(y):
                        out.append(y)
        frontier = nxt
    return sorted(set(out))


def dominance_leq(group, theta, bound):
    """theta <= bound in dominance: the difference is a nonnegative rational
    combination of simple roots (both weights dominant)."""
    diff = vsub(bound, theta)
    coeffs = _root_coordinates(group.rs, diff)
    return all(c >= 0 for c in coeffs)


def _root_coordinates(rs, x):
    """Coordinates of x in the simple-root basis, by exact elimination."""
    n = rs.rank
    rows = [[Fraction(rs.cartan[i][j]) for j in range(n)] + [Fraction(x[i])] for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        scale = rows[col][col]
        rows[col] = [v / scale for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return [rows[i][n] for i in range(n)]


def candidate_key_indices(group, f):
    """All key indices that can appear in an expansion of f.

    Any expansion only uses shapes dominance-below the dominant forms of the
    support (peeling the dominance-maximal shape, then the orbit-maximal
    index of that shape, shows the leading coefficient must come from the
    support itself).
    """
    if not f.terms:
        return []
    supports = [dominant_representative(group, x) for x in f.support()]
    maxima = []
    for s in set(supports):
        if not any(s != t and dominance_leq(group, s, t) for t in supports):
            maxima.append(s)
    shapes = set()
    for m in maxima:
        shapes.update(_dominant_weights_below(group, m))
    indices = []
    for shape in sorted(shapes):
        for rep in group.minimal_coset_reps(group.stabilizer_indices(shape)):
            indices.append(KeyIndex(shape, rep))
    indices.sort(key=lambda idx: idx.sort_key())
    return indices


def expand_in_keys(group, f):
    """Exact expansion of f in the key basis; KeyIndex -> integer.

    Solves the linear system in the monomial basis over the rationals;
    raises if the system is inconsistent (not in the span), ambiguous (the
    candidates were dependent, which would contradict the basis property),
    or solves to non-integers.
    """
    if not f.terms:
        return {}
    indices = candidate_key_indices(group, f)
    keys = [key_polynomial(group, idx) for idx in indices]
    monomials = sorted(set(f.support()).union(*[k.support() for k in keys]))
    row_of = {w: r for r, w in enumerate(monomials)}
    ncols = len(indices)
    matrix = [[Fraction(0)] * (ncols + 1) for _ in monomials]
    for c, k in enumerate(keys):
        for w, coeff in k.terms.items():
            matrix[row_of[w]][c] = Fraction(coeff)
    for w, coeff in f.terms.items():
        matrix[row_of[w]][ncols] = Fraction(coeff)
    # Gaussian elimination over the rationals
    pivot_rows = []
    r = 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(matrix)) if matrix[k][c] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        scale = matrix[r][c]
        matrix[r] = [v / scale for v in matrix[r]]
        for k in range(len(matrix)):
            if k != r and matrix[k][c] != 0:
                factor = matrix[k][c]
                matrix[k] = [a - factor * b for a, b in zip(matrix[k], matrix[r])]
        pivot_rows.append((r, c))
        r += 1
    if len(pivot_rows) != ncols:
        raise AssertionError("candidate key polynomials are linearly dependent")
    for k in range(r, len(matrix)):
        if matrix[k][ncols] != 0:
            raise NotInSpan("nonzero residual after solving the key expansion")
    coeffs = {}
    for row, col in pivot_rows:
        value = matrix[row][ncols]
        if value.denominator != 1:
            raise NonIntegralCoefficient("coefficient %s of %r" % (value, indices[col]))
        if value != 0:
            coeffs[indices[col]] = int(value)
    return coeffs


# -- the product report -------------------------------------------------------------


class ProductReport:
    """Key expansion of a product of two keys, with positivity accounting."""

    __slots__ = (
        "left_index",
        "right_index",
        "coefficients",
        "condition_forward",
        "condition_swapped",
        "all_nonnegative",
    )

    def __init__(self, left_index, right_index, coefficients, forward, swapped):
        self.left_index = left_index
        self.right_index = right_index
        self.coefficients = coefficients
        self.condition_forward = forward
        self.condition_swapped = swapped
        self.all_nonnegative = all(c >= 0 for c in coefficients.values())


def product_report(group, v, w, lam, mu):
    """Expand key(v lam) * key(w mu) and reconcile with the decomposition.

    When either orientation of the decomposition condition holds the
    coefficients must be nonnegative, and for the orientation that holds
    they must count the dominant paths with the matching shifted shape and
    normalized lifted witness.
    """
    lam, mu = tuple(lam), tuple(mu)
    left_idx, left = key_of_pair(group, v, lam)
    right_idx, right = key_of_pair(group, w, mu)
    coeffs = expand_in_keys(group, left * right)
    forward = condition_check(group, v, w, lam, mu)
    swapped = condition_check(group, w, v, mu, lam)
    report = ProductReport(left_idx, right_idx, coeffs, forward, swapped)
    if (forward or swapped) and not report.all_nonnegative:
        raise TheoremViolation(
            "negative key coefficient under the decomposition condition"
        )
    if forward:
        _reconcile_with_decomposition(group, v, w, lam, mu, coeffs)
    elif swapped:
        _reconcile_with_decomposition(group, w, v, mu, lam, coeffs)
    return report


def _reconcile_with_decomposition(group, v, w, lam, mu, coeffs):
    """Coefficients must equal the counting formula over dominant paths."""
    counted = {}
    for pi in dominant_paths(group, w, mu, lam):
        nu = vadd(lam, weight_of(pi))
        u = lifted_witness(group, pi, v, w, lam, mu)
        idx = KeyIndex(nu, group.coset_min_weight(u, nu))
        counted[idx] = counted.get(idx, 0) + 1
    if counted != coeffs:
        raise TheoremViolation("key coefficients disagree with the component count")


# -- type A monomial rendering ---------------------------------------------------------


def monomials_type_a(rs, f):
    """Render a character as polynomial monomials in x_1 .. x_{rank+1}.

    The epsilon exponents are shifted uniformly so the smallest is zero.
    """
    from .cartan import eps_from_weight

    rendered = []
    exps = {w: eps_from_weight(rs, w) for w in f.terms}
    if not exps:
        return "0"
    shift = -min(min(e) for e in exps.values())
    for w in sorted(f.terms):
        c = f.terms[w]
        body = "*".join(
            "x%d^%d" % (k + 1, e + shift)
            for k, e in enumerate(exps[w])
            if e + shift != 0
        )
        rendered.append("%+d%s" % (c, "*" + body if body else ""))
    return " ".join(rendered)
