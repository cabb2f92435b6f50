"""Supercommutative polynomials on graded variables, with truncation.

A :class:`VariableTable` fixes an ordered list of variables, each even or
odd, plus a truncation order for the even part (formal-neighborhood
semantics: products are computed exactly and terms whose even-variable
degree exceeds the order are silently dropped; when every variable is odd
the algebra is a finite exterior algebra and no truncation is needed).

Monomials are stored in canonical orientation: letters sorted by table
order, odd exponents at most 1.  Reordering a product into canonical form
accumulates the Koszul sign (one factor of -1 for every crossing of two odd
letters), which makes equality of polynomials structural.

All values are immutable; a table can be shared freely between threads.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

EVEN = 0
ODD = 1

_PARITY_WORDS = {"even": EVEN, "odd": ODD, 0: EVEN, 1: ODD, EVEN: EVEN, ODD: ODD}


def parity_of(word) -> int:
    try:
        return _PARITY_WORDS[word]
    except KeyError:
        raise ValueError(f"unknown parity {word!r}; expected 'even' or 'odd'") from None


class VariableTable:
    """Ordered graded variables with an even-degree truncation order."""

    __slots__ = ("names", "parities", "truncation_order", "_index")

    def __init__(self, names, parities, truncation_order=None):
        self.names = tuple(names)
        self.parities = tuple(parity_of(p) for p in parities)
        if len(self.names) != len(self.parities):
            raise ValueError("one parity per variable required")
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        if truncation_order is None and any(p == EVEN for p in self.parities):
            raise ValueError("a finite truncation_order is required when even variables are present")
        if truncation_order is not None and truncation_order < 0:
            raise ValueError("truncation_order must be nonnegative")
        self.truncation_order = truncation_order
        self._index = {n: i for i, n in enumerate(self.names)}

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def variable(self, name_or_index) -> "SuperPolynomial":
        """The variable itself, as a polynomial."""
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        mono = tuple(1 if j == i else 0 for j in range(len(self.names)))
        return SuperPolynomial(self, {mono: Fraction(1)})

    def one(self) -> "SuperPolynomial":
        return self.constant(Fraction(1))

    def zero(self) -> "SuperPolynomial":
        return SuperPolynomial(self, {})

    def constant(self, c) -> "SuperPolynomial":
        c = Fraction(c)
        if c == 0:
            return SuperPolynomial(self, {})
        return SuperPolynomial(self, {(0,) * len(self.names): c})

    def even_degree(self, mono) -> int:
        return sum(e for e, p in zip(mono, self.parities) if p == EVEN)

    def monomial_parity(self, mono) -> int:
        return sum(e for e, p in zip(mono, self.parities) if p == ODD) % 2

    def __eq__(self, other):
        if not isinstance(other, VariableTable):
            return NotImplemented
        return (
            self.names == other.names
            and self.parities == other.parities
            and self.truncation_order == other.truncation_order
        )

    def __hash__(self):
        return hash((self.names, self.parities, self.truncation_order))

    def __repr__(self):
        vs = ", ".join(f"{n}:{'odd' if p else 'even'}" for n, p in zip(self.names, self.parities))
        return f"VariableTable({vs}; order={self.truncation_order})"


def _merge_monomials(table: VariableTable, m1, m2):
    """Product of two canonical monomials: (monomial, sign) or (None, 0)."""
    sign = 1
    out = []
    # Koszul sign: every odd letter of m2 crosses the odd letters of m1
    # that sit at strictly larger table positions.
    odd1_positions = [i for i, e in enumerate(m1) if e and table.parities[i] == ODD]
    for i, (e1, e2) in enumerate(zip(m1, m2)):
        if table.parities[i] == ODD:
            if e1 and e2:
                return None, 0
            if e2:
                crossings = sum(1 for j in odd1_positions if j > i)
                if crossings % 2:
                    sign = -sign
        out.append(e1 + e2)
    return tuple(out), sign


class SuperPolynomial:
    """Element of the supercommutative algebra over a shared VariableTable."""

    __slots__ = ("table", "terms")

    def __init__(self, table: VariableTable, terms):
        self.table = table
        cleaned = {}
        order = table.truncation_order
        for mono, coeff in terms.items():
            if coeff == 0:
                continue
            if order is not None and table.even_degree(mono) > order:
                continue
            cleaned[mono] = coeff
        self.terms = cleaned

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate_at_zero(self) -> Fraction:
        """The constant term."""
        return self.terms.get((0,) * len(self.table), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.evaluate_at_zero()

    def parity(self):
        """EVEN, ODD, or None when the terms mix parities (0 counts as even)."""
        if not self.terms:
            return EVEN
        seen = {self.table.monomial_parity(m) for m in self.terms}
        if len(seen) == 1:
            return seen.pop()
        return None

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=0)

    def homogeneous_component(self, degree: int) -> "SuperPolynomial":
        return SuperPolynomial(
            self.table, {m: c for m, c in self.terms.items() if sum(m) == degree}
        )

    def coefficient(self, mono) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    # -- ring operations ---------------------------------------------------

    def _check_table(self, other):
        if self.table is not other.table and self.table != other.table:
            raise ValueError("polynomials live over different variable tables")

    def __add__(self, other):
        other = self._coerce(other)
        self._check_table(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s == 0:
                terms.pop(m, None)
            else:
                terms[m] = s
        return SuperPolynomial(self.table, terms)

    __radd__ = __add__

    def __neg__(self):
        return SuperPolynomial(self.table, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def _coerce(self, other):
        if isinstance(other, SuperPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return self.table.constant(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return self.table.zero()
            return SuperPolynomial(self.table, {m: co * c for m, co in self.terms.items()})
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        self._check_table(other)
        table = self.table
        order = table.truncation_order
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m, sign = _merge_monomials(table, m1, m2)
                if m is None:
                    continue
                if order is not None and table.even_degree(m) > order:
                    continue
                c = terms.get(m, Fraction(0)) + sign * c1 * c2
                if c == 0:
                    terms.pop(m, None)
                else:
                    terms[m] = c
        return SuperPolynomial(table, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = self.table.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.table.constant(other)
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return (
            (self.table is other.table or self.table == other.table)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.table, frozenset(self.terms.items())))

    # -- calculus ----------------------------------------------------------

    def partial_derivative(self, var) -> "SuperPolynomial":
        """Left derivative with respect to ``var``.

        For an odd variable the operator is moved from the left over the
        preceding odd letters of each monomial, one Koszul sign per
        crossing.
        """
        table = self.table
        i = var if isinstance(var, int) else table.index(var)
        odd = table.parities[i] == ODD
        terms = {}
        for mono, coeff in self.terms.items():
            e = mono[i]
            if e == 0:
                continue
            new = list(mono)
            new[i] = e - 1
            if odd:
                crossings = sum(
                    1
                    for j in range(i)
                    if mono[j] and table.parities[j] == ODD
                )
                c = -coeff if crossings % 2 else coeff
            else:
                c = coeff * e
            key = tuple(new)
            c = terms.get(key, Fraction(0)) + c
            if c == 0:
                terms.pop(key, None)
            else:
                terms[key] = c
        return SuperPolynomial(table, terms)

    def berezin_integral(self) -> Fraction:
        """Iterated odd derivative, highest variable first, evaluated at 0.

        Only defined on purely odd tables (exterior algebras); equals the
        signed coefficient of the top monomial.
        """
        table = self.table
        if any(p == EVEN for p in table.parities):
            raise ValueError("Berezin integral requires a purely odd variable table")
        p = self
        for i in range(len(table) - 1, -1, -1):
            p = p.partial_derivative(i)
        return p.evaluate_at_zero()

    def exp(self) -> "SuperPolynomial":
        """exp of a polynomial with zero constant term (nilpotent, exact)."""
        if self.evaluate_at_zero() != 0:
            raise ValueError("exp is only defined for zero constant term")
        result = self.table.one()
        power = self.table.one()
        k = 1
        while True:
            power = power * self
            if power.is_zero():
                break
            result = result + power * Fraction(1, _factorial(k))
            k += 1
        return result

    def inverse(self) -> "SuperPolynomial":
        """Inverse of a polynomial whose constant term is invertible.

        Neumann series in the augmentation ideal; terminates because the
        ideal is nilpotent under truncation (or in an exterior algebra).
        """
        c0 = self.evaluate_at_zero()
        if c0 == 0:
            raise ZeroDivisionError("constant term is zero; not invertible")
        e = self * (Fraction(1) / c0) - 1  # augmentation part, nilpotent
        result = self.table.one()
        power = self.table.one()
        sign = 1
        while True:
            power = power * e
            sign = -sign
            if power.is_zero():
                break
            result = result + power * sign
        return result * (Fraction(1) / c0)

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        table = self.table

        def mono_key(m):
            return (sum(m), m)

        pieces = []
        for mono in sorted(self.terms, key=mono_key):
            coeff = self.terms[mono]
            vars_part = "*".join(
                table.names[i] if e == 1 else f"{table.names[i]}^{e}"
                for i, e in enumerate(mono)
                if e
            )
            if not vars_part:
                body = str(coeff)
            elif coeff == 1:
                body = vars_part
            elif coeff == -1:
                body = f"-{vars_part}"
            else:
                body = f"{coeff} {vars_part}"
            pieces.append(body)
        out = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    __repr__ = __str__


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def truncate_even_degree(p: SuperPolynomial, order: int) -> SuperPolynomial:
    """Drop the terms whose even-variable degree exceeds ``order``."""
    table = p.table
    return SuperPolynomial(
        table, {m: c for m, c in p.terms.items() if table.even_degree(m) <= order}
    )


def exhaustive_monomials(table: VariableTable, max_degree: int):
    """All canonical monomials of total degree <= max_degree."""
    ranges = []
    for p in table.parities:
        ranges.append(range(2) if p == ODD else range(max_degree + 1))
    for mono in itertools.product(*ranges):
        if sum(mono) <= max_degree:
            yield mono
