"""Generic-point machinery: supertraces of ad powers, the Jacobian of the
exponential map, divergence identities, and the Gorelik candidate.

The generic point of q is y = sum e_i x^i with one dual variable x^i per
q basis vector, of the same parity.  Supertraces of powers of ad y are
computed by exact matrix powers over the super-polynomial ring (the
permutation-sum expansion survives in the tests as a small-case oracle).

The Jacobian J_c is exp(str over q of w_c(ad y)) with
w_c = log(sinh(t/c)/(t/c)); for purely odd q it is a polynomial, no
truncation needed.  For a (0,2)-dimensional q the closed degree-2 form is
provided as an independent route.  beta(J_2 d), with d the top monomial of
the exterior algebra S(q), is the Gorelik candidate.
"""

from __future__ import annotations

import math
import warnings
from fractions import Fraction

from . import series as series_mod
from .coderiv import beta_of_sq, sq_table
from .enveloping import PbwElement
from .liealg import LieSuperAlgebra, SuperMatrix, SymmetricPair, ad_matrix, apply_matrix
from .superpoly import EVEN, ODD, SuperPolynomial, VariableTable, truncate_even_degree


class _FullSpan:
    """Stand-in for the pair when h = 0: the generic point of the whole
    algebra.  Duck-types the parts of SymmetricPair the machinery uses;
    the symmetric-pair eigenspace axioms do not apply here."""

    def __init__(self, alg: LieSuperAlgebra):
        self.algebra = alg
        self.q_indices = list(range(alg.dim))
        self.h_indices = []

    def in_h(self, i):
        return False

    def q_purely_odd(self):
        return all(p == ODD for p in self.algebra.parities)

    def check_unimodularity(self):
        return True, []


class GenericPoint:
    """A symmetric pair with dual variables for its q part."""

    def __init__(self, pair: SymmetricPair, order: int = 6):
        self.pair = pair
        alg = pair.algebra
        names = [f"x{i + 1}" for i in range(len(pair.q_indices))]
        parities = [alg.parities[i] for i in pair.q_indices]
        purely_odd = all(p == ODD for p in parities)
        self.table = VariableTable(names, parities, None if purely_odd else order)
        self.order = order
        self.purely_odd = purely_odd
        self.y = {
            q_idx: self.table.variable(pos) for pos, q_idx in enumerate(pair.q_indices)
        }
        self._ad_y = None
        self._ad_y_powers = {}

    @classmethod
    def full(cls, alg: LieSuperAlgebra, order: int = 6) -> "GenericPoint":
        """Generic point of the whole algebra (h = 0)."""
        return cls(_FullSpan(alg), order)

    @property
    def algebra(self):
        return self.pair.algebra

    def ad_y(self) -> SuperMatrix:
        if self._ad_y is None:
            self._ad_y = ad_matrix(self.algebra, self.y, self.table)
        return self._ad_y

    def ad_y_power(self, k: int) -> SuperMatrix:
        mat = self._ad_y_powers.get(k)
        if mat is None:
            if k == 0:
                mat = SuperMatrix.identity(self.table, self.algebra.parities)
            else:
                mat = self.ad_y_power(k - 1) * self.ad_y()
            self._ad_y_powers[k] = mat
        return mat

    def max_power(self) -> int:
        """Powers of ad y vanish beyond this bound.

        Entries of (ad y)^k are homogeneous of total degree k, but the
        truncation counts even-variable degree only, so a power survives
        as long as k minus the number of odd variables stays within the
        truncation order.
        """
        n_odd = sum(1 for p in self.table.parities if p == ODD)
        if self.purely_odd:
            return n_odd
        return self.order + n_odd


def str_ad_power(gp: GenericPoint, k: int) -> SuperPolynomial:
    """Supertrace over the q block of (ad y)^k; requires k even (odd powers
    swap the eigenspaces, so their q block is not defined)."""
    if k % 2:
        raise ValueError("odd powers of ad y do not stabilize q")
    return _str_power_over(gp, k, gp.pair.q_indices)


def str_ad_power_full(gp: GenericPoint, k: int) -> SuperPolynomial:
    """Supertrace over the whole algebra of (ad y)^k (any k); meaningful
    for the h = 0 generic point."""
    return _str_power_over(gp, k, range(gp.algebra.dim))


def _str_power_over(gp, k, indices):
    mat = gp.ad_y_power(k)
    acc = gp.table.zero()
    for i in indices:
        sign = -1 if gp.algebra.parities[i] == ODD else 1
        acc = acc + mat.entries[i][i] * sign
    return acc


class JacobianResult:
    """Jacobian value plus the supertrace data it was assembled from."""

    __slots__ = ("J", "c", "order", "str_powers")

    def __init__(self, J, c, order, str_powers):
        self.J = J
        self.c = c
        self.order = order
        self.str_powers = str_powers

    def __repr__(self):
        return f"JacobianResult(J={self.J}, c={self.c}, order={self.order})"


def jacobian_Jc(gp: GenericPoint, c, order=None) -> JacobianResult:
    """J_c = exp(str over q of w_c(ad y)), assembled degree by degree.

    The summation always runs to the full nilpotency bound of ad y (odd
    letters let high powers contribute low even degrees); a smaller
    ``order`` only truncates the reported result.
    """
    c = Fraction(c)
    if c == 0:
        raise ValueError("J_c requires c != 0")
    bound = gp.max_power()
    w = series_mod.w_c(c, max(bound, 2))
    acc = gp.table.zero()
    str_powers = []
    for k in range(2, bound + 1, 2):
        s = str_ad_power(gp, k)
        str_powers.append((k, s))
        wk = w.coeff(k)
        if wk != 0 and not s.is_zero():
            acc = acc + s * wk
    J = acc.exp()
    if order is None:
        order = gp.order
    elif not gp.purely_odd and order < gp.order:
        J = truncate_even_degree(J, order)
    return JacobianResult(J, c, order, str_powers)


def jacobian_J2_q2(gp: GenericPoint) -> SuperPolynomial:
    """Closed form of J_2 when q is (0,2)-dimensional:

        1 + (1/24) str over q of (-ad e_1 ad e_2 + ad e_2 ad e_1) x^1 x^2.
    """
    pair = gp.pair
    alg = pair.algebra
    if not (gp.purely_odd and len(pair.q_indices) == 2):
        raise ValueError("the closed form applies to q of dimension (0,2)")
    i1, i2 = pair.q_indices
    a1 = _constant_ad(alg, i1)
    a2 = _constant_ad(alg, i2)
    n = alg.dim
    prod = [
        [
            sum(-a1[i][k] * a2[k][j] + a2[i][k] * a1[k][j] for k in range(n))
            for j in range(n)
        ]
        for i in range(n)
    ]
    s = Fraction(0)
    for i in pair.q_indices:
        sign = -1 if alg.parities[i] == ODD else 1
        s += sign * prod[i][i]
    x1x2 = gp.table.variable(0) * gp.table.variable(1)
    return gp.table.one() + x1x2 * (s * Fraction(1, 24))


def _constant_ad(alg, idx):
    n = alg.dim
    rows = [[Fraction(0)] * n for _ in range(n)]
    for k in range(n):
        for m, c in alg.bracket_basis(idx, k).items():
            rows[m][k] = c
    return rows


def jacobian_full_group(alg: LieSuperAlgebra, order: int = 6) -> SuperPolynomial:
    """Jacobian of the exponential map of the full formal supergroup, in the
    left invariant frame: Ber((1 - exp(-ad x))/ad x) for the generic point
    x of g, computed as exp(str(w(ad x))) with w = log((1 - e^{-t})/t)."""
    gp = GenericPoint.full(alg, order)
    bound = gp.max_power()
    r = series_mod.TruncatedSeries1(
        [Fraction((-1) ** k, math.factorial(k + 1)) for k in range(bound + 1)], bound
    )
    w = series_mod.log_of_one_plus(r - 1)
    acc = gp.table.zero()
    for k in range(1, bound + 1):
        wk = w.coeff(k)
        if wk == 0:
            continue
        s = str_ad_power_full(gp, k)
        if not s.is_zero():
            acc = acc + s * wk
    return acc.exp()


def jacobian_via_berezinian(gp: GenericPoint, r: series_mod.TruncatedSeries1) -> SuperPolynomial:
    """Cross-check route: Ber over q of r(ad y) by the block formula."""
    bound = gp.max_power()
    acc = SuperMatrix.identity(gp.table, gp.algebra.parities) * r.coeff(0)
    for k in range(1, bound + 1):
        rk = r.coeff(k)
        if rk == 0:
            continue
        acc = acc + gp.ad_y_power(k) * rk
    restricted = acc.restrict(gp.pair.q_indices)
    return restricted.berezinian()


def sh_over_t_scaled(c, order) -> series_mod.TruncatedSeries1:
    """sinh(t/c)/(t/c) as a series in t."""
    base = series_mod.sinh_over_t(order)
    return base.scale_variable(Fraction(1) / Fraction(c))


# ---------------------------------------------------------------------------
# vector fields, divergence, and the key identity
# ---------------------------------------------------------------------------

def vector_field_parity(gp: GenericPoint, field: dict):
    alg = gp.algebra
    seen = set()
    for i, comp in field.items():
        if comp.is_zero():
            continue
        p = comp.parity()
        if p is None:
            raise ValueError("vector field component is not parity-homogeneous")
        seen.add((alg.parities[i] + p) % 2)
    if not seen:
        return EVEN
    if len(seen) == 1:
        return seen.pop()
    raise ValueError("vector field is not parity-homogeneous")


def apply_vector_field(gp: GenericPoint, field: dict, f: SuperPolynomial) -> SuperPolynomial:
    """The derivation attached to the field v = sum e_i z^i applied to f:
    sum_i (-1)^{p(v) p_i} z^i (d f / d x^i)."""
    pv = vector_field_parity(gp, field)
    table = gp.table
    out = table.zero()
    pos_of = {q_idx: pos for pos, q_idx in enumerate(gp.pair.q_indices)}
    for i, comp in field.items():
        if comp.is_zero():
            continue
        pos = pos_of[i]
        sign = -1 if (pv * gp.algebra.parities[i]) % 2 else 1
        out = out + comp * f.partial_derivative(pos) * sign
    return out


def divergence(gp: GenericPoint, field: dict) -> SuperPolynomial:
    """Divergence of the field in the translation-invariant frame:
    sum_i (-1)^{p_i} d z^i / d x^i.

    The odd-variable sign depends on the variable only, not on the parity
    of the field; with the left-derivative convention this is the pattern
    under which the divergence identity and the Jacobian key identity hold
    (both are checked exactly by the test suite, which is what pins the
    convention).
    """
    table = gp.table
    out = table.zero()
    pos_of = {q_idx: pos for pos, q_idx in enumerate(gp.pair.q_indices)}
    for i, comp in field.items():
        if comp.is_zero():
            continue
        pos = pos_of[i]
        sign = -1 if gp.algebra.parities[i] == ODD else 1
        out = out + comp.partial_derivative(pos) * sign
    return out


def series_of_ad_y(gp: GenericPoint, f: series_mod.TruncatedSeries1, element: dict) -> dict:
    """The vector field f(ad y)(a) for a constant element a, via matrix
    powers applied to a."""
    table = gp.table
    vec = {
        i: (table.constant(c) if isinstance(c, (int, Fraction)) else c)
        for i, c in element.items()
    }
    out = {}
    bound = gp.max_power()
    for k in range(0, bound + 1):
        fk = f.coeff(k)
        if fk == 0:
            continue
        image = apply_matrix(gp.ad_y_power(k), vec)
        for i, comp in image.items():
            term = comp * fk
            acc = out.get(i)
            acc = term if acc is None else acc + term
            out[i] = acc
    return {i: c for i, c in out.items() if not c.is_zero()}


def twisted_vector_field(gp: GenericPoint, c, a_index: int) -> dict:
    """alpha_c^a: [a, y] for a in h, p_c(ad y)(a) for a in q."""
    pair = gp.pair
    alg = gp.algebra
    if pair.in_h(a_index):
        a_elem = {a_index: gp.table.one()}
        y_elem = dict(gp.y)
        return alg.bracket(a_elem, y_elem)
    p = series_mod.p_c(c, gp.max_power() + 1)
    return series_of_ad_y(gp, p, {a_index: Fraction(1)})


def str_q_of_ad_field(gp: GenericPoint, field: dict) -> SuperPolynomial:
    """Supertrace over the q block of ad(field) for an h-valued field."""
    alg = gp.algebra
    mat = ad_matrix(alg, field, gp.table)
    acc = gp.table.zero()
    op = mat.op_parity
    for i in gp.pair.q_indices:
        pi = alg.parities[i]
        sign = -1 if (pi * (pi + op)) % 2 else 1
        acc = acc + mat.entries[i][i] * sign
    return acc


def str_w_of_ad_y(gp: GenericPoint, c) -> SuperPolynomial:
    """str over q of w_c(ad y), the logarithm of the Jacobian."""
    bound = gp.max_power()
    w = series_mod.w_c(c, max(bound, 2))
    acc = gp.table.zero()
    for k in range(2, bound + 1, 2):
        wk = w.coeff(k)
        if wk == 0:
            continue
        acc = acc + str_ad_power(gp, k) * wk
    return acc


def divergence_check(alg: LieSuperAlgebra, p: series_mod.TruncatedSeries1, a_index: int, order: int = 4) -> SuperPolynomial:
    """Residual of the divergence identity on the full algebra:

        div of the field p(ad x)(a)  =  -str( (p(ad x) - p(0))/ad x * ad a ),

    left side from the coordinate formula, right side from matrix powers.
    Zero for every Lie superalgebra; returned, not asserted.

    Computed one order above the requested truncation so the boundary
    degree (where differentiating a discarded term would land) is exact,
    then cut back down.
    """
    gp = GenericPoint.full(alg, order + 1)
    field = series_of_ad_y(gp, p, {a_index: Fraction(1)})
    lhs = divergence(gp, field) if field else gp.table.zero()

    # Phi(t) = (p(t) - p(0))/t, so the right side is -str(Phi(ad x) ad a)
    phi = (p - p.coeff(0)).divide_by_t()
    ada = ad_matrix(alg, {a_index: gp.table.one()}, gp.table)
    acc_mat = None
    for k in range(0, gp.max_power() + 1):
        fk = phi.coeff(k)
        if fk == 0:
            continue
        term = gp.ad_y_power(k) * fk
        acc_mat = term if acc_mat is None else acc_mat + term
    if acc_mat is None:
        rhs = gp.table.zero()
    else:
        prod = acc_mat * ada
        acc = gp.table.zero()
        for i in range(alg.dim):
            pi = alg.parities[i]
            sign = -1 if (pi * (pi + prod.op_parity)) % 2 else 1
            acc = acc + prod.entries[i][i] * sign
        rhs = -1 * acc
    return truncate_even_degree(lhs - rhs, order)


def key_identity_check(gp: GenericPoint, c, a_index: int, order=None) -> SuperPolynomial:
    """Residual of the identity that makes J_c the Jacobian:

        zeta_{alpha_c^a}(str_q w_c(ad y)) + div(zeta_{alpha_c^a})
            - str_q(ad theta_c^a)  =  0,

    each term computed by its own direct route.  theta_c^a is a for a in h
    and q_c(ad y)(a) for a in q.  For purely odd q everything is exact; in
    the presence of even variables the computation runs one order above the
    requested truncation (differentiation at the truncation boundary) and
    the residual is cut back down.
    """
    c = Fraction(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    if order is None:
        order = gp.order
    work = gp if gp.purely_odd else GenericPoint(gp.pair, order + 1)
    pair = work.pair
    field = twisted_vector_field(work, c, a_index)
    w_str = str_w_of_ad_y(work, c)
    t1 = apply_vector_field(work, field, w_str) if field else work.table.zero()
    t2 = divergence(work, field) if field else work.table.zero()
    if pair.in_h(a_index):
        theta = {a_index: work.table.one()}
    else:
        q_series = series_mod.q_c(c, work.max_power() + 1)
        theta = series_of_ad_y(work, q_series, {a_index: Fraction(1)})
    t3 = str_q_of_ad_field(work, theta) if theta else work.table.zero()
    residual = t1 + t2 - t3
    if not gp.purely_odd:
        residual = truncate_even_degree(residual, order)
    return residual


# ---------------------------------------------------------------------------
# the Gorelik candidate
# ---------------------------------------------------------------------------

def interior_product(gp: GenericPoint, f: SuperPolynomial, w: SuperPolynomial) -> SuperPolynomial:
    """The module action of the dual exterior algebra on S(q): each dual
    variable acts as the left derivative by its basis vector, a monomial
    x^{i_1} ... x^{i_k} (ascending) acts as the composition with x^{i_k}
    applied first."""
    table = sq_table(gp.pair)
    out = table.zero()
    for mono, coeff in f.terms.items():
        acc = w
        for pos in reversed(_positions_of(mono)):
            acc = acc.partial_derivative(pos)
            if acc.is_zero():
                break
        out = out + acc * coeff
    return out


def _positions_of(mono):
    out = []
    for pos, e in enumerate(mono):
        out.extend([pos] * e)
    return out


def top_monomial(pair: SymmetricPair) -> SuperPolynomial:
    """d = e_1 ... e_q, the top monomial of the exterior algebra S(q)."""
    table = sq_table(pair)
    return SuperPolynomial(table, {(1,) * len(table): Fraction(1)})


def gorelik_candidate(gp: GenericPoint) -> PbwElement:
    """beta(J_2 d) for purely odd q; warns when the pair fails the
    unimodularity condition (the result is then not invariant)."""
    pair = gp.pair
    if not gp.purely_odd:
        raise ValueError("the Gorelik construction requires purely odd q")
    ok, witnesses = pair.check_unimodularity()
    if not ok:
        warnings.warn(
            f"pair is not unimodular (str_q(ad a) != 0 at {witnesses}); "
            "the construction does not yield an invariant",
            stacklevel=2,
        )
    j2 = jacobian_Jc(gp, Fraction(2)).J
    w = interior_product(gp, j2, top_monomial(pair))
    return beta_of_sq(pair, w)
