"""The enveloping algebra U(g) in normal-ordered PBW form.

A PBW monomial is an exponent tuple over the ordered basis of g (odd
exponents at most 1); an element is a finite coefficient map from such
monomials.  Coefficients are Fractions, or parity-homogeneous
SuperPolynomials when computing over an extended scalar ring; scalars are
written on the right of the monomial, so the product of two terms picks up
the Koszul sign of moving the first coefficient across the second monomial.

Normal ordering rewrites a word by repeatedly fixing the leftmost
violation: an adjacent repeated odd letter collapses through
e^2 = (1/2)[e, e], and an adjacent inversion e_i e_j with i > j becomes
(-1)^{p_i p_j} e_j e_i + [e_i, e_j].  Termination: the square rule shortens
the word, the swap rule keeps the length and lowers the inversion count,
and bracket terms shorten the word.  Any rewriting schedule reaches the
same normal form (confluence is exercised by the tests); the default
schedule is deterministic and cached per algebra.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from . import linalg
from .liealg import LieSuperAlgebra, SymmetricPair, coefficient_parity, _is_zero_coeff
from .superpoly import EVEN, ODD


def _monomial_to_word(mono):
    word = []
    for i, e in enumerate(mono):
        word.extend([i] * e)
    return tuple(word)


def _word_to_monomial(word, dim):
    mono = [0] * dim
    for i in word:
        mono[i] += 1
    return tuple(mono)


def normal_form(alg: LieSuperAlgebra, word, coeff=Fraction(1), choose=None):
    """Normal-ordered expansion of a word of basis indices.

    Returns {monomial: Fraction}.  ``choose(sites)`` may pick which
    violating position to rewrite next (used to exercise confluence);
    the default takes the leftmost and is cached.
    """
    word = tuple(word)
    cacheable = choose is None
    if cacheable:
        cached = alg._normal_form_cache.get(word)
        if cached is not None:
            return {m: c * coeff for m, c in cached.items()}

    parities = alg.parities
    result = {}
    stack = [(word, Fraction(1))]
    while stack:
        w, c = stack.pop()
        sites = []
        for k in range(len(w) - 1):
            a, b = w[k], w[k + 1]
            if a > b or (a == b and parities[a] == ODD):
                sites.append(k)
        if not sites:
            mono = _word_to_monomial(w, alg.dim)
            acc = result.get(mono, Fraction(0)) + c
            if acc == 0:
                result.pop(mono, None)
            else:
                result[mono] = acc
            continue
        k = sites[0] if choose is None else sites[choose(len(sites))]
        a, b = w[k], w[k + 1]
        head, tail = w[:k], w[k + 2 :]
        if a == b:
            # odd square: e e = (1/2)[e, e]
            for m, cm in alg.bracket_basis(a, a).items():
                stack.append((head + (m,) + tail, c * cm / 2))
        else:
            sign = -1 if (parities[a] * parities[b]) % 2 else 1
            stack.append((head + (b, a) + tail, c * sign))
            for m, cm in alg.bracket_basis(a, b).items():
                stack.append((head + (m,) + tail, c * cm))

    if cacheable:
        alg._normal_form_cache[word] = dict(result)
    return {m: cc * coeff for m, cc in result.items()}


def _monomial_product(alg: LieSuperAlgebra, m1, m2):
    key = (m1, m2)
    cached = alg._mono_product_cache.get(key)
    if cached is None:
        cached = normal_form(alg, _monomial_to_word(m1) + _monomial_to_word(m2))
        alg._mono_product_cache[key] = cached
    return cached


def monomial_parity(alg: LieSuperAlgebra, mono) -> int:
    return sum(e for e, p in zip(mono, alg.parities) if p == ODD) % 2


class PbwElement:
    """Element of U(g) in the normal-ordered PBW basis."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: LieSuperAlgebra, terms=None):
        self.alg = alg
        cleaned = {}
        for m, c in (terms or {}).items():
            if not _is_zero_coeff(c):
                cleaned[m] = c
        self.terms = cleaned

    # -- constructors -------------------------------------------------------

    @classmethod
    def one(cls, alg):
        return cls(alg, {(0,) * alg.dim: Fraction(1)})

    @classmethod
    def zero(cls, alg):
        return cls(alg, {})

    @classmethod
    def from_scalar(cls, alg, c):
        return cls(alg, {(0,) * alg.dim: c})

    @classmethod
    def from_basis(cls, alg, i, coeff=Fraction(1)):
        mono = tuple(1 if j == i else 0 for j in range(alg.dim))
        return cls(alg, {mono: coeff})

    @classmethod
    def from_element(cls, alg, element: dict):
        """Canonical injection of g (an index -> coefficient dict)."""
        terms = {}
        for i, c in element.items():
            mono = tuple(1 if j == i else 0 for j in range(alg.dim))
            terms[mono] = c
        return cls(alg, terms)

    @classmethod
    def from_word(cls, alg, word, coeff=Fraction(1)):
        return cls(alg, normal_form(alg, word, coeff))

    # -- structure -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(m) for m in self.terms), default=0)

    def term_parity(self, mono, coeff) -> int:
        return (monomial_parity(self.alg, mono) + coefficient_parity(coeff)) % 2

    def parity(self):
        seen = {self.term_parity(m, c) for m, c in self.terms.items()}
        if not seen:
            return EVEN
        if len(seen) == 1:
            return seen.pop()
        return None

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), Fraction(0))

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other):
        if self.alg is not other.alg:
            raise ValueError("elements of enveloping algebras of different Lie superalgebras")

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            acc = c if acc is None else acc + c
            if _is_zero_coeff(acc):
                terms.pop(m, None)
            else:
                terms[m] = acc
        return PbwElement(self.alg, terms)

    __radd__ = __add__

    def __neg__(self):
        return PbwElement(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def _coerce(self, other):
        if isinstance(other, PbwElement):
            return other
        if isinstance(other, (int, Fraction)):
            return PbwElement.from_scalar(self.alg, Fraction(other))
        raise TypeError(f"cannot combine PbwElement with {type(other).__name__}")

    def scale(self, c):
        return PbwElement(self.alg, {m: co * c for m, co in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        alg = self.alg
        out = {}
        for m1, c1 in self.terms.items():
            p1 = coefficient_parity(c1)
            for m2, c2 in other.terms.items():
                sign = -1 if (p1 * monomial_parity(alg, m2)) % 2 else 1
                coeff = c1 * c2 * sign
                if _is_zero_coeff(coeff):
                    continue
                for m, cm in _monomial_product(alg, m1, m2).items():
                    term = coeff * cm
                    acc = out.get(m)
                    acc = term if acc is None else acc + term
                    if _is_zero_coeff(acc):
                        out.pop(m, None)
                    else:
                        out[m] = acc
        return PbwElement(alg, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PbwElement.from_scalar(self.alg, Fraction(other))
        if not isinstance(other, PbwElement):
            return NotImplemented
        return self.alg is other.alg and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.alg), frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        alg = self.alg
        pieces = []
        for mono in sorted(self.terms, key=lambda m: (sum(m), m)):
            c = self.terms[mono]
            letters = "*".join(
                alg.names[i] if e == 1 else f"{alg.names[i]}^{e}"
                for i, e in enumerate(mono)
                if e
            )
            if not letters:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(letters)
            elif c == -1:
                pieces.append(f"-{letters}")
            else:
                pieces.append(f"{c} {letters}")
        out = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    __repr__ = __str__


# ---------------------------------------------------------------------------
# coalgebra structure
# ---------------------------------------------------------------------------

def tensor_mul_pbw(alg, left: dict, right: dict) -> dict:
    """Product in U(g) (x) U(g) of tensors given as {(m1, m2): coeff}."""
    out = {}
    for (a1, a2), c1 in left.items():
        for (b1, b2), c2 in right.items():
            sign = -1 if (monomial_parity(alg, a2) * monomial_parity(alg, b1)) % 2 else 1
            first = _monomial_product(alg, a1, b1)
            second = _monomial_product(alg, a2, b2)
            base = c1 * c2 * sign
            for m1, d1 in first.items():
                for m2, d2 in second.items():
                    key = (m1, m2)
                    term = base * d1 * d2
                    acc = out.get(key)
                    acc = term if acc is None else acc + term
                    if acc == 0:
                        out.pop(key, None)
                    else:
                        out[key] = acc
    return out


def coproduct(u: PbwElement) -> dict:
    """Hopf coproduct, as {(monomial, monomial): Fraction}.

    Determined by primitivity of the basis letters and multiplicativity;
    only Fraction coefficients are supported.
    """
    alg = u.alg
    unit = (0,) * alg.dim
    out = {}
    for mono, coeff in u.terms.items():
        if not isinstance(coeff, (int, Fraction)):
            raise TypeError("coproduct is implemented for rational coefficients")
        state = {(unit, unit): Fraction(1)}
        for letter in _monomial_to_word(mono):
            lm = tuple(1 if j == letter else 0 for j in range(alg.dim))
            primitive = {(lm, unit): Fraction(1), (unit, lm): Fraction(1)}
            state = tensor_mul_pbw(alg, state, primitive)
        for key, c in state.items():
            acc = out.get(key, Fraction(0)) + c * coeff
            if acc == 0:
                out.pop(key, None)
            else:
                out[key] = acc
    return out


def antipode(u: PbwElement) -> PbwElement:
    """The Hopf antipode: anti-automorphism with S(j(a)) = -j(a)."""
    alg = u.alg
    out = PbwElement.zero(alg)
    for mono, coeff in u.terms.items():
        word = _monomial_to_word(mono)
        n = len(word)
        rev = tuple(reversed(word))
        # Koszul sign of fully reversing the letters
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if alg.parities[word[i]] == ODD and alg.parities[word[j]] == ODD:
                    sign = -sign
        total = coeff * sign * (-1) ** n
        out = out + PbwElement.from_word(alg, rev, total)
    return out


def koszul_sign_of_permutation(parities, perm) -> int:
    """Sign of reordering graded letters by perm (image positions)."""
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j] and parities[perm[i]] == ODD and parities[perm[j]] == ODD:
                sign = -sign
    return sign


def symmetrize_word(alg: LieSuperAlgebra, word) -> PbwElement:
    """Symmetrization of a product of basis letters: the Koszul-signed
    average over all orderings, landing in U(g)."""
    word = tuple(word)
    cached = alg._symmetrize_cache.get(word)
    if cached is not None:
        return PbwElement(alg, dict(cached))
    n = len(word)
    letter_parities = [alg.parities[i] for i in word]
    acc = {}
    for perm in itertools.permutations(range(n)):
        sign = koszul_sign_of_permutation(letter_parities, perm)
        for m, c in normal_form(alg, tuple(word[k] for k in perm)).items():
            acc[m] = acc.get(m, Fraction(0)) + sign * c
    scale = Fraction(1, math.factorial(n))
    result = {m: c * scale for m, c in acc.items() if c != 0}
    alg._symmetrize_cache[word] = result
    return PbwElement(alg, dict(result))


def symmetrize(alg: LieSuperAlgebra, s_terms: dict) -> PbwElement:
    """Symmetrization of a symmetric-algebra element {monomial: coeff}."""
    out = PbwElement.zero(alg)
    for mono, coeff in s_terms.items():
        out = out + symmetrize_word(alg, _monomial_to_word(mono)).scale(coeff)
    return out


# ---------------------------------------------------------------------------
# symmetric-pair operations
# ---------------------------------------------------------------------------

def sigma_on_element(pair: SymmetricPair, element: dict) -> dict:
    return {i: (c if pair.sigma_sign(i) == 1 else -c) for i, c in element.items()}


def twisted_adjoint(pair: SymmetricPair, a_index: int, u: PbwElement) -> PbwElement:
    """ad'(a)(u) = a u - (-1)^{p(a) p(u)} u sigma(a), termwise on the
    parity-homogeneous components of u."""
    alg = pair.algebra
    ja = PbwElement.from_basis(alg, a_index)
    jsa = ja if pair.sigma_sign(a_index) == 1 else -ja
    pa = alg.parities[a_index]
    out = PbwElement.zero(alg)
    for mono, coeff in u.terms.items():
        term = PbwElement(alg, {mono: coeff})
        pu = (monomial_parity(alg, mono) + coefficient_parity(coeff)) % 2
        sign = -1 if (pa * pu) % 2 else 1
        out = out + ja * term - (term * jsa).scale(sign)
    return out


def twisted_adjoint_u(pair: SymmetricPair, u: PbwElement, v: PbwElement) -> PbwElement:
    """The extension of ad' to a representation of U(g): for a monomial
    j(a_1)...j(a_n), the composition ad'(a_1) o ... o ad'(a_n)."""
    out = PbwElement.zero(pair.algebra)
    for mono, coeff in u.terms.items():
        acc = v
        for letter in reversed(_monomial_to_word(mono)):
            acc = twisted_adjoint(pair, letter, acc)
        out = out + acc.scale(coeff)
    return out


def gamma(pair: SymmetricPair, u: PbwElement) -> PbwElement:
    """ad'(u)(1)."""
    return twisted_adjoint_u(pair, u, PbwElement.one(pair.algebra))


# ---------------------------------------------------------------------------
# the factorization U(g) = beta(S(q)) U(h) and the quotient mod U(g) h
# ---------------------------------------------------------------------------

def sq_monomials(pair: SymmetricPair, max_degree: int):
    """Exponent tuples (over the full basis, supported on q) of S(q)
    monomials of degree <= max_degree."""
    alg = pair.algebra
    ranges = []
    for i in range(alg.dim):
        if i in set(pair.h_indices):
            ranges.append((0,))
        elif alg.parities[i] == ODD:
            ranges.append((0, 1))
        else:
            ranges.append(tuple(range(max_degree + 1)))
    for mono in itertools.product(*ranges):
        if sum(mono) <= max_degree:
            yield mono


def h_monomials(pair: SymmetricPair, max_degree: int):
    alg = pair.algebra
    ranges = []
    for i in range(alg.dim):
        if i not in set(pair.h_indices):
            ranges.append((0,))
        elif alg.parities[i] == ODD:
            ranges.append((0, 1))
        else:
            ranges.append(tuple(range(max_degree + 1)))
    for mono in itertools.product(*ranges):
        if sum(mono) <= max_degree:
            yield mono


def pbw_monomials(alg: LieSuperAlgebra, max_degree: int):
    ranges = []
    for i in range(alg.dim):
        if alg.parities[i] == ODD:
            ranges.append((0, 1))
        else:
            ranges.append(tuple(range(max_degree + 1)))
    for mono in itertools.product(*ranges):
        if sum(mono) <= max_degree:
            yield mono


class Factorization:
    """Change of basis between PBW monomials of degree <= D and the
    products beta(w) u with w an S(q) monomial and u a normal-ordered
    monomial in U(h).  Built once per (pair, D); exactly invertible by the
    PBW theorem."""

    def __init__(self, pair: SymmetricPair, max_degree: int):
        self.pair = pair
        self.max_degree = max_degree
        alg = pair.algebra
        self.pbw_basis = sorted(pbw_monomials(alg, max_degree), key=lambda m: (sum(m), m))
        self.pbw_index = {m: k for k, m in enumerate(self.pbw_basis)}
        pairs = []
        for qm in sq_monomials(pair, max_degree):
            for hm in h_monomials(pair, max_degree - sum(qm)):
                pairs.append((qm, hm))
        pairs.sort(key=lambda p: (sum(p[0]) + sum(p[1]), p))
        self.pairs = pairs
        if len(pairs) != len(self.pbw_basis):
            raise AssertionError("factorization basis size mismatch")
        columns = []
        for qm, hm in pairs:
            prod = symmetrize_word(alg, _monomial_to_word(qm)) * PbwElement(
                alg, {hm: Fraction(1)}
            )
            col = [Fraction(0)] * len(self.pbw_basis)
            for m, c in prod.terms.items():
                col[self.pbw_index[m]] = c
            columns.append(col)
        matrix = [[columns[j][i] for j in range(len(pairs))] for i in range(len(self.pbw_basis))]
        self.inverse = linalg.invert(matrix)

    def coordinates(self, u: PbwElement) -> dict:
        """{(q monomial, h monomial): Fraction} with u = sum beta(w) hm."""
        vec = [Fraction(0)] * len(self.pbw_basis)
        for m, c in u.terms.items():
            if not isinstance(c, (int, Fraction)):
                raise TypeError("factorization works over rational coefficients")
            if sum(m) > self.max_degree:
                raise ValueError(
                    f"element of degree {sum(m)} exceeds the prepared bound {self.max_degree}"
                )
            vec[self.pbw_index[m]] = Fraction(c)
        coeffs = [
            sum(self.inverse[i][j] * vec[j] for j in range(len(vec)))
            for i in range(len(vec))
        ]
        return {self.pairs[i]: c for i, c in enumerate(coeffs) if c != 0}


_factorization_cache = {}


def factorization(pair: SymmetricPair, max_degree: int) -> Factorization:
    key = (id(pair), max_degree)
    f = _factorization_cache.get(key)
    if f is None or f.pair is not pair:
        f = Factorization(pair, max_degree)
        _factorization_cache[key] = f
    return f


def quotient_coordinates(pair: SymmetricPair, u: PbwElement, max_degree=None) -> dict:
    """The class of u in U(g)/U(g)h, as S(q)-monomial coordinates of its
    beta(S(q)) representative: terms with a nontrivial h factor drop."""
    if max_degree is None:
        max_degree = max(u.degree(), 1)
    f = factorization(pair, max_degree)
    unit = (0,) * pair.algebra.dim
    return {qm: c for (qm, hm), c in f.coordinates(u).items() if hm == unit}


def quotient_mod_h(pair: SymmetricPair, u: PbwElement, max_degree=None) -> PbwElement:
    """Representative of the class of u in U(g)/U(g)h inside beta(S(q))."""
    coords = quotient_coordinates(pair, u, max_degree)
    return symmetrize(pair.algebra, coords)
