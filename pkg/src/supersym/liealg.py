"""Finite-dimensional Lie superalgebras given by structure constants.

An algebra is an ordered homogeneous basis plus the brackets [e_i, e_j]
stored for i <= j; the other half is reconstructed through
super-antisymmetry.  The super-Jacobi identity is checked, not assumed.

Elements of g (and of g tensored with a supercommutative coefficient
algebra) are dicts {basis index: coefficient}; coefficients are Fractions
or SuperPolynomials written on the right of the basis vector, so the
bracket picks up one Koszul sign when a coefficient crosses a basis
vector:

    [e_i f, e_j g] = (-1)^{p(f) p(e_j)} [e_i, e_j] f g.

SuperMatrix holds the matrix of a right-linear operator in such a basis
(columns are images of basis vectors, coefficients on the right), so
matrix composition is the plain row-by-column product with no signs; all
sign bookkeeping lives in the supertrace and in how matrices are built.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import linalg
from .superpoly import EVEN, ODD, SuperPolynomial, VariableTable, parity_of


def coefficient_parity(c) -> int:
    """Parity of a scalar coefficient; homogeneous SuperPolynomials only."""
    if isinstance(c, (int, Fraction)):
        return EVEN
    p = c.parity()
    if p is None:
        raise ValueError("coefficient is not parity-homogeneous")
    return p


def _is_zero_coeff(c) -> bool:
    if isinstance(c, (int, Fraction)):
        return c == 0
    return c.is_zero()


class LieSuperAlgebra:
    """Basis with parities plus structure constants."""

    def __init__(self, names, parities, brackets, check=True):
        self.names = tuple(names)
        self.parities = tuple(parity_of(p) for p in parities)
        if len(self.names) != len(self.parities):
            raise ValueError("one parity per basis element required")
        if len(set(self.names)) != len(self.names):
            raise ValueError("basis names must be distinct")
        self._index = {n: i for i, n in enumerate(self.names)}
        store = {}
        for (i, j), comps in brackets.items():
            if i > j:
                raise ValueError(f"brackets must be stored for i <= j, got ({i},{j})")
            cleaned = {k: Fraction(c) for k, c in comps.items() if c != 0}
            if not cleaned:
                continue
            pij = (self.parities[i] + self.parities[j]) % 2
            for k in cleaned:
                if self.parities[k] != pij:
                    raise ValueError(
                        f"bracket [{self.names[i]},{self.names[j]}] has a component on "
                        f"{self.names[k]} of the wrong parity"
                    )
            if i == j and self.parities[i] == EVEN:
                raise ValueError(f"[{self.names[i]},{self.names[i]}] must vanish for even elements")
            store[(i, j)] = cleaned
        self.brackets = store
        # per-instance caches for the enveloping-algebra machinery
        self._normal_form_cache = {}
        self._mono_product_cache = {}
        self._symmetrize_cache = {}
        if check:
            ok, witness = self.check_jacobi()
            if not ok:
                raise ValueError(f"structure constants violate the super-Jacobi identity at {witness}")

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown basis element {name!r}") from None

    def parity(self, i: int) -> int:
        return self.parities[i]

    def even_indices(self):
        return [i for i, p in enumerate(self.parities) if p == EVEN]

    def odd_indices(self):
        return [i for i, p in enumerate(self.parities) if p == ODD]

    def bracket_basis(self, i: int, j: int) -> dict:
        """[e_i, e_j] as {k: Fraction}, for any index order."""
        if i <= j:
            return dict(self.brackets.get((i, j), {}))
        base = self.brackets.get((j, i), {})
        sign = -1 if (self.parities[i] * self.parities[j]) % 2 == 0 else 1
        return {k: sign * c for k, c in base.items()}

    def bracket(self, u: dict, v: dict) -> dict:
        """Bracket of two elements with (right-side) coefficients."""
        out = {}
        for i, f in u.items():
            if _is_zero_coeff(f):
                continue
            pf = coefficient_parity(f)
            for j, g in v.items():
                if _is_zero_coeff(g):
                    continue
                sign = -1 if (pf * self.parities[j]) % 2 else 1
                fg = f * g
                if _is_zero_coeff(fg):
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    term = fg * c * sign
                    acc = out.get(k)
                    acc = term if acc is None else acc + term
                    if _is_zero_coeff(acc):
                        out.pop(k, None)
                    else:
                        out[k] = acc
        return out

    def basis_element(self, i: int, coeff=Fraction(1)) -> dict:
        return {i: coeff}

    def element_parity(self, u: dict):
        """Parity of an element; None when inhomogeneous."""
        seen = set()
        for i, c in u.items():
            if _is_zero_coeff(c):
                continue
            seen.add((self.parities[i] + coefficient_parity(c)) % 2)
        if not seen:
            return EVEN
        if len(seen) == 1:
            return seen.pop()
        return None

    def check_jacobi(self):
        """Super-Jacobi on all basis triples; (True, None) or (False, witness)."""
        n = self.dim
        for a in range(n):
            pa = self.parities[a]
            for b in range(n):
                pb = self.parities[b]
                for c in range(n):
                    pc = self.parities[c]
                    acc = {}
                    for (x, y, z, px, pz) in (
                        (a, b, c, pa, pc),
                        (b, c, a, pb, pa),
                        (c, a, b, pc, pb),
                    ):
                        sign = -1 if (px * pz) % 2 else 1
                        inner = self.bracket_basis(y, z)
                        for m, cm in inner.items():
                            for k, ck in self.bracket_basis(x, m).items():
                                acc[k] = acc.get(k, Fraction(0)) + sign * cm * ck
                    if any(v != 0 for v in acc.values()):
                        residual = {self.names[k]: v for k, v in acc.items() if v != 0}
                        return False, (self.names[a], self.names[b], self.names[c], residual)
        return True, None

    def __repr__(self):
        return f"LieSuperAlgebra({', '.join(self.names)})"


class SymmetricPair:
    """Algebra with an involution: q (the -1 eigenspace) first, then h.

    The basis order is part of the contract: the q indices must form the
    initial segment, so that normal-ordered monomials factor as
    (q part)(h part) and the quotient machinery can project on the first
    factor.
    """

    def __init__(self, algebra: LieSuperAlgebra, h_indices):
        self.algebra = algebra
        h = sorted(set(h_indices))
        q = [i for i in range(algebra.dim) if i not in set(h)]
        if h != list(range(len(q), algebra.dim)):
            raise ValueError("the h part must occupy the final segment of the basis order")
        self.h_indices = h
        self.q_indices = q
        self._check_eigenspaces()

    def _check_eigenspaces(self):
        alg = self.algebra
        hset = set(self.h_indices)
        for (i, j), comps in alg.brackets.items():
            target_in_h = (i in hset) == (j in hset)
            for k in comps:
                if (k in hset) != target_in_h:
                    raise ValueError(
                        f"bracket [{alg.names[i]},{alg.names[j]}] leaves the eigenspace "
                        "decomposition required of a symmetric pair"
                    )

    def sigma_sign(self, i: int) -> int:
        """+1 on h, -1 on q."""
        return 1 if i in set(self.h_indices) else -1

    def in_h(self, i: int) -> bool:
        return i >= len(self.q_indices)

    @property
    def q_dim(self):
        return len(self.q_indices)

    def q_purely_odd(self) -> bool:
        return all(self.algebra.parities[i] == ODD for i in self.q_indices)

    def check_unimodularity(self):
        """str over the q block of ad a, for every basis a in h.

        Returns (True, []) or (False, witnesses) where each witness is
        (name of a, supertrace value).
        """
        alg = self.algebra
        bad = []
        for a in self.h_indices:
            s = Fraction(0)
            for i in self.q_indices:
                c = alg.bracket_basis(a, i).get(i, Fraction(0))
                sign = -1 if alg.parities[i] == ODD else 1
                s += sign * c
            if s != 0:
                bad.append((alg.names[a], s))
        return (not bad), bad

    def __repr__(self):
        alg = self.algebra
        q = ",".join(alg.names[i] for i in self.q_indices)
        h = ",".join(alg.names[i] for i in self.h_indices)
        return f"SymmetricPair(q=[{q}], h=[{h}])"


# ---------------------------------------------------------------------------
# matrices over a super-polynomial ring
# ---------------------------------------------------------------------------

class SuperMatrix:
    """Matrix of a right-linear operator on a free graded module.

    ``entries[i][j]`` is the e_i component of the image of e_j; entries are
    SuperPolynomials over one shared table.  Entry (i, j) must be zero or
    homogeneous of parity p(e_i) + p(e_j) + p(operator).
    """

    __slots__ = ("table", "module_parities", "op_parity", "entries")

    def __init__(self, table: VariableTable, module_parities, entries, op_parity=EVEN, check=True):
        self.table = table
        self.module_parities = tuple(parity_of(p) for p in module_parities)
        self.op_parity = parity_of(op_parity)
        n = len(self.module_parities)
        if len(entries) != n or any(len(row) != n for row in entries):
            raise ValueError("entries must be a square matrix over the module basis")
        self.entries = [list(row) for row in entries]
        if check:
            for i in range(n):
                for j in range(n):
                    e = self.entries[i][j]
                    if e.table is not table and e.table != table:
                        raise ValueError("all entries must share the matrix's variable table")
                    p = e.parity()
                    want = (self.module_parities[i] + self.module_parities[j] + self.op_parity) % 2
                    if p is not None and not e.is_zero() and p != want:
                        raise ValueError(f"entry ({i},{j}) has parity {p}, expected {want}")
                    if p is None:
                        raise ValueError(f"entry ({i},{j}) is not parity-homogeneous")

    @classmethod
    def zero(cls, table, module_parities, op_parity=EVEN):
        n = len(module_parities)
        z = table.zero()
        return cls(table, module_parities, [[z] * n for _ in range(n)], op_parity, check=False)

    @classmethod
    def identity(cls, table, module_parities):
        n = len(module_parities)
        rows = [[table.one() if i == j else table.zero() for j in range(n)] for i in range(n)]
        return cls(table, module_parities, rows, EVEN, check=False)

    @property
    def size(self):
        return len(self.module_parities)

    def __add__(self, other):
        if self.op_parity != other.op_parity:
            raise ValueError("cannot add operators of different parity")
        n = self.size
        rows = [
            [self.entries[i][j] + other.entries[i][j] for j in range(n)] for i in range(n)
        ]
        return SuperMatrix(self.table, self.module_parities, rows, self.op_parity, check=False)

    def __sub__(self, other):
        return self + (other * Fraction(-1))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            rows = [[e * other for e in row] for row in self.entries]
            return SuperMatrix(self.table, self.module_parities, rows, self.op_parity, check=False)
        if isinstance(other, SuperPolynomial):
            rows = [[e * other for e in row] for row in self.entries]
            return SuperMatrix(
                self.table,
                self.module_parities,
                rows,
                (self.op_parity + coefficient_parity(other)) % 2,
                check=False,
            )
        n = self.size
        z = self.table.zero()
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = z
                for k in range(n):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return SuperMatrix(
            self.table,
            self.module_parities,
            rows,
            (self.op_parity + other.op_parity) % 2,
            check=False,
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return (
            self.module_parities == other.module_parities
            and all(
                self.entries[i][j] == other.entries[i][j]
                for i in range(self.size)
                for j in range(self.size)
            )
        )

    def power(self, k: int) -> "SuperMatrix":
        result = SuperMatrix.identity(self.table, self.module_parities)
        for _ in range(k):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def constant_part(self):
        """The matrix of constant terms, as Fractions."""
        return [[e.evaluate_at_zero() for e in row] for row in self.entries]

    def augmentation_part(self) -> "SuperMatrix":
        rows = [[e - e.evaluate_at_zero() for e in row] for row in self.entries]
        return SuperMatrix(self.table, self.module_parities, rows, self.op_parity, check=False)

    def supertrace(self) -> SuperPolynomial:
        """str X = sum_i (-1)^{p_i (p_i + p_X)} X_ii."""
        acc = self.table.zero()
        for i in range(self.size):
            sign = -1 if (self.module_parities[i] * (self.module_parities[i] + self.op_parity)) % 2 else 1
            acc = acc + self.entries[i][i] * sign
        return acc

    def restrict(self, indices) -> "SuperMatrix":
        indices = list(indices)
        rows = [[self.entries[i][j] for j in indices] for i in indices]
        return SuperMatrix(
            self.table,
            [self.module_parities[i] for i in indices],
            rows,
            self.op_parity,
            check=False,
        )

    def exp(self) -> "SuperMatrix":
        """exp of an operator whose entries vanish at zero (nilpotent)."""
        for row in self.entries:
            for e in row:
                if e.evaluate_at_zero() != 0:
                    raise ValueError("exp requires entries with zero constant term")
        result = SuperMatrix.identity(self.table, self.module_parities)
        power = SuperMatrix.identity(self.table, self.module_parities)
        k = 1
        while True:
            power = power * self
            if power.is_zero():
                break
            result = result + power * Fraction(1, _fact(k))
            k += 1
        return result

    def determinant(self) -> SuperPolynomial:
        """Leibniz determinant; valid because all entries here are even."""
        n = self.size
        if n == 0:
            return self.table.one()
        acc = self.table.zero()
        for perm in itertools.permutations(range(n)):
            sign = _perm_sign(perm)
            prod = self.table.one()
            zero = False
            for i in range(n):
                e = self.entries[i][perm[i]]
                if e.is_zero():
                    zero = True
                    break
                prod = prod * e
            if zero:
                continue
            acc = acc + prod * sign
        return acc

    def _neumann_inverse(self) -> "SuperMatrix":
        """Exact inverse: invert the constant part over Q, then sum the
        Neumann series of the augmentation remainder."""
        const = self.constant_part()
        inv_const_rows = linalg.invert(const)
        table = self.table
        inv0 = SuperMatrix(
            table,
            self.module_parities,
            [[table.constant(c) for c in row] for row in inv_const_rows],
            EVEN,
            check=False,
        )
        n_part = inv0 * self.augmentation_part()
        result = SuperMatrix.identity(table, self.module_parities)
        power = SuperMatrix.identity(table, self.module_parities)
        sign = 1
        while True:
            power = power * n_part
            sign = -sign
            if power.is_zero():
                break
            result = result + power * sign
        return result * inv0

    def berezinian(self) -> SuperPolynomial:
        """Ber X = det(A - B D^{-1} C) det(D)^{-1} for even invertible X,
        in the block decomposition along even/odd module basis vectors."""
        if self.op_parity != EVEN:
            raise ValueError("the Berezinian is defined for even operators")
        ev = [i for i, p in enumerate(self.module_parities) if p == EVEN]
        od = [i for i, p in enumerate(self.module_parities) if p == ODD]
        table = self.table

        def block(rows_idx, cols_idx):
            return [[self.entries[i][j] for j in cols_idx] for i in rows_idx]

        if not ev and not od:
            return table.one()
        if od:
            d_rows = block(od, od)
            d = SuperMatrix(table, [ODD] * len(od), d_rows, EVEN, check=False)
            det_d0 = _det_fraction([[e.evaluate_at_zero() for e in row] for row in d_rows])
            if det_d0 == 0:
                raise ValueError("odd-odd block is not invertible at zero")
            det_d = d.determinant()
        if not ev:
            return det_d.inverse()
        a = SuperMatrix(table, [EVEN] * len(ev), block(ev, ev), EVEN, check=False)
        if not od:
            return a.determinant()
        d_inv = d._neumann_inverse()
        b_rows = block(ev, od)
        c_rows = block(od, ev)
        # Schur complement A - B D^{-1} C, assembled entrywise.
        n_e, n_o = len(ev), len(od)
        schur_rows = []
        for i in range(n_e):
            row = []
            for j in range(n_e):
                acc = a.entries[i][j]
                for k in range(n_o):
                    for m in range(n_o):
                        t1 = b_rows[i][k]
                        t2 = d_inv.entries[k][m]
                        t3 = c_rows[m][j]
                        if t1.is_zero() or t2.is_zero() or t3.is_zero():
                            continue
                        acc = acc - t1 * t2 * t3
                row.append(acc)
            schur_rows.append(row)
        schur = SuperMatrix(table, [EVEN] * n_e, schur_rows, EVEN, check=False)
        return schur.determinant() * det_d.inverse()

    def __repr__(self):
        body = "; ".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.entries
        )
        return f"SuperMatrix({body})"


def _fact(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def _det_fraction(rows):
    n = len(rows)
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for perm in itertools.permutations(range(n)):
        term = Fraction(_perm_sign(perm))
        for i in range(n):
            term *= rows[i][perm[i]]
        acc += term
    return acc


def ad_matrix(alg: LieSuperAlgebra, element: dict, table: VariableTable) -> SuperMatrix:
    """Matrix of ad(element) on the basis of the algebra.

    The element has SuperPolynomial (or Fraction) coefficients over
    ``table``; its parity must be homogeneous.
    """
    element = {
        i: (table.constant(c) if isinstance(c, (int, Fraction)) else c)
        for i, c in element.items()
    }
    op_parity = alg.element_parity(element)
    if op_parity is None:
        raise ValueError("ad of a parity-inhomogeneous element")
    n = alg.dim
    cols = []
    for k in range(n):
        image = alg.bracket(element, {k: table.one()})
        cols.append(image)
    rows = [[cols[j].get(i, table.zero()) for j in range(n)] for i in range(n)]
    return SuperMatrix(table, alg.parities, rows, op_parity)


def apply_matrix(mat: SuperMatrix, vec: dict) -> dict:
    """Matrix times column vector (right-coefficient convention)."""
    out = {}
    for j, c in vec.items():
        if _is_zero_coeff(c):
            continue
        for i in range(mat.size):
            e = mat.entries[i][j]
            if e.is_zero():
                continue
            term = e * c
            acc = out.get(i)
            acc = term if acc is None else acc + term
            if _is_zero_coeff(acc):
                out.pop(i, None)
            else:
                out[i] = acc
    return out


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def _supercommutator(x_rows, y_rows, px, py):
    n = len(x_rows)
    sign = -1 if (px * py) % 2 else 1
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            s = Fraction(0)
            for k in range(n):
                s += x_rows[i][k] * y_rows[k][j] - sign * y_rows[i][k] * x_rows[k][j]
            out[i][j] = s
    return out


def _structure_constants_from_matrices(mats, parities):
    """Brackets of a list of matrices (a defining representation), expanded
    back over the given matrix basis by exact linear solving."""
    dim = len(mats)
    size = len(mats[0])
    columns = [[m[i][j] for i in range(size) for j in range(size)] for m in mats]
    basis_matrix = [[columns[b][e] for b in range(dim)] for e in range(size * size)]
    brackets = {}
    for i in range(dim):
        for j in range(i, dim):
            comm = _supercommutator(mats[i], mats[j], parities[i], parities[j])
            flat = [comm[r][c] for r in range(size) for c in range(size)]
            coeffs = linalg.solve(basis_matrix, flat)
            comps = {k: c for k, c in enumerate(coeffs) if c != 0}
            if comps:
                brackets[(i, j)] = comps
    return brackets


def algebra_from_matrices(names, parities, mats, check=True) -> LieSuperAlgebra:
    """Lie superalgebra whose structure constants are read off a faithful
    matrix realization (supercommutators expanded back over the basis)."""
    parities = [parity_of(p) for p in parities]
    brackets = _structure_constants_from_matrices(
        [[[Fraction(x) for x in row] for row in m] for m in mats], parities
    )
    return LieSuperAlgebra(names, parities, brackets, check=check)


def catalog(name: str):
    """Built-in algebras, with their default symmetric pair (q = odd part
    first, h = even part).  Returns (algebra, pair).
    """
    if name.startswith("abelian(") and name.endswith(")"):
        inner = name[len("abelian(") : -1]
        p_str, q_str = inner.split(",")
        p, q = int(p_str), int(q_str)
        names = [f"e{i+1}" for i in range(q)] + [f"a{i+1}" for i in range(p)]
        parities = [ODD] * q + [EVEN] * p
        alg = LieSuperAlgebra(names, parities, {})
        pair = SymmetricPair(alg, range(q, q + p))
        return alg, pair

    if name == "osp12":
        return _catalog_osp12()
    if name == "gl11":
        return _catalog_gl11()
    if name == "heisenberg_super":
        names = ["th1", "th2", "z"]
        parities = [ODD, ODD, EVEN]
        alg = LieSuperAlgebra(names, parities, {(0, 1): {2: Fraction(1)}})
        return alg, SymmetricPair(alg, [2])
    if name == "solvable2":
        # purely even: [x, y] = y
        alg = LieSuperAlgebra(["x", "y"], [EVEN, EVEN], {(0, 1): {1: Fraction(1)}})
        return alg, SymmetricPair(alg, [0, 1])
    raise KeyError(f"unknown catalog algebra {name!r}")


def _catalog_osp12():
    """osp(1|2) from its defining representation on a (1|2)-dimensional
    space: v0 even, v1, v2 odd, preserving the even supersymmetric form
    B(v0,v0)=1, B(v1,v2)=-B(v2,v1)=1."""
    F = Fraction

    def mat(rows):
        return [[F(x) for x in row] for row in rows]

    # odd generators first (basis order q before h)
    e = mat([[0, 0, -1], [1, 0, 0], [0, 0, 0]])
    f = mat([[0, 1, 0], [0, 0, 0], [1, 0, 0]])
    # sl(2) on span(v1, v2)
    H = mat([[0, 0, 0], [0, 1, 0], [0, 0, -1]])
    E = mat([[0, 0, 0], [0, 0, 1], [0, 0, 0]])
    Fm = mat([[0, 0, 0], [0, 0, 0], [0, 1, 0]])
    mats = [e, f, H, E, Fm]
    parities = [ODD, ODD, EVEN, EVEN, EVEN]
    brackets = _structure_constants_from_matrices(mats, parities)
    alg = LieSuperAlgebra(["e", "f", "H", "E", "F"], parities, brackets)
    return alg, SymmetricPair(alg, [2, 3, 4])


def _catalog_gl11():
    """gl(1|1) from 2x2 matrices on a (1|1)-dimensional space."""
    F = Fraction

    def mat(rows):
        return [[F(x) for x in row] for row in rows]

    E12 = mat([[0, 1], [0, 0]])
    E21 = mat([[0, 0], [1, 0]])
    E11 = mat([[1, 0], [0, 0]])
    E22 = mat([[0, 0], [0, 1]])
    mats = [E12, E21, E11, E22]
    parities = [ODD, ODD, EVEN, EVEN]
    brackets = _structure_constants_from_matrices(mats, parities)
    alg = LieSuperAlgebra(["x12", "x21", "d1", "d2"], parities, brackets)
    return alg, SymmetricPair(alg, [2, 3])


def defining_matrices(name: str):
    """The matrices behind the catalog entries, for oracle tests.

    Returns (matrices, algebra parities, module parities).
    """
    F = Fraction

    def mat(rows):
        return [[F(x) for x in row] for row in rows]

    if name == "osp12":
        e = mat([[0, 0, -1], [1, 0, 0], [0, 0, 0]])
        f = mat([[0, 1, 0], [0, 0, 0], [1, 0, 0]])
        H = mat([[0, 0, 0], [0, 1, 0], [0, 0, -1]])
        E = mat([[0, 0, 0], [0, 0, 1], [0, 0, 0]])
        Fm = mat([[0, 0, 0], [0, 0, 0], [0, 1, 0]])
        return [e, f, H, E, Fm], [ODD, ODD, EVEN, EVEN, EVEN], [EVEN, ODD, ODD]
    if name == "gl11":
        E12 = mat([[0, 1], [0, 0]])
        E21 = mat([[0, 0], [1, 0]])
        E11 = mat([[1, 0], [0, 0]])
        E22 = mat([[0, 0], [0, 1]])
        return [E12, E21, E11, E22], [ODD, ODD, EVEN, EVEN], [EVEN, ODD]
    raise KeyError(name)
