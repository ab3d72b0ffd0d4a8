"""Cyclic codes from defining sets: generator matrices, duals, extensions,
and the structural predicates (self-dual, doubly-even, even-weight subcode).

Codewords and matrix rows are int bitvectors, bit i = coordinate c_i.
"""

from dataclasses import dataclass

from . import gf2poly
from .cyclotomic import DefiningSet


@dataclass(frozen=True)
class CyclicCode:
    """[n, k] binary cyclic code with generator g and root-exponent set T."""

    field: object
    n: int
    k: int
    g: int
    T: DefiningSet

    def generator_rows(self):
        """Cyclic-shift generator matrix rows x^i * g, 0 <= i < k."""
        return [self.g << i for i in range(self.k)]

    def generator_matrix(self, systematic=False):
        rows = self.generator_rows()
        if systematic:
            rows, _ = row_reduce(rows)
        return GeneratorMatrix(rows=tuple(rows), n=self.n, systematic=systematic)

    def contains(self, word):
        """Membership: word(x) is a multiple of g(x)."""
        if word >> self.n:
            raise ValueError("word longer than the code length")
        return gf2poly.mod(word, self.g) == 0

    def params(self):
        return (self.n, self.k)


@dataclass(frozen=True)
class GeneratorMatrix:
    """k x n bit matrix whose rows span the code."""

    rows: tuple
    n: int
    systematic: bool

    @property
    def k(self):
        return len(self.rows)


@dataclass(frozen=True)
class ExtendedCode:
    """The base code lengthened by one overall parity coordinate at index n."""

    base: CyclicCode

    @property
    def n(self):
        return self.base.n + 1

    @property
    def k(self):
        return self.base.k

    @property
    def parity_bit(self):
        # every generator row is a shift of g, so one parity serves all rows
        return self.base.g.bit_count() & 1

    def generator_rows(self):
        p = self.parity_bit << self.base.n
        return [row | p for row in self.base.generator_rows()]

    def contains(self, word):
        if word >> self.n:
            raise ValueError("word longer than the extended length")
        base_part = word & ((1 << self.base.n) - 1)
        return self.base.contains(base_part) and word.bit_count() % 2 == 0

    def params(self):
        return (self.n, self.k)


def from_defining_set(fld, T):
    """Build the cyclic code whose generator has roots alpha^i, i in T."""
    if not T.is_closed_under_doubling():
        raise ValueError("defining set is not closed under doubling")
    g = gf2poly.generator_poly(fld, T)
    k = T.n - T.size
    return CyclicCode(field=fld, n=T.n, k=k, g=g, T=T)


def dual(code):
    """The dual code: generated by the reciprocal of the check polynomial,
    with defining set Z_n \\ (-T)."""
    h = gf2poly.check_poly(code.g, code.n)
    g_dual = gf2poly.reciprocal(h)
    T_dual = code.T.negated().complement()
    if gf2poly.degree(g_dual) != T_dual.size:
        raise AssertionError("dual generator degree disagrees with dual defining set")
    return CyclicCode(field=code.field, n=code.n, k=code.n - code.k, g=g_dual, T=T_dual)


def extend(code):
    return ExtendedCode(base=code)


def _self_orthogonal(ext):
    """G * G^T = 0 for the extended cyclic-shift matrix.

    Rows never wrap (deg g + k - 1 = n - 1), so <row_i, row_j> depends only
    on the lag d = j - i: it is |supp(g) & supp(x^d g)| + parity^2 mod 2.
    The overlap parities at every lag are the coefficients of
    g(x) * reciprocal(g)(x) above x^deg(g), so one product checks all k-1
    lags at once.
    """
    g = ext.base.g
    parity = ext.parity_bit
    deg_g = g.bit_length() - 1
    lags = (gf2poly.mul(g, gf2poly.reciprocal(g)) >> (deg_g + 1)) & ((1 << (ext.k - 1)) - 1)
    return lags == (((1 << (ext.k - 1)) - 1) if parity else 0)


def is_self_dual(ext):
    """dim = length/2 and G * G^T = 0 over GF(2)."""
    return 2 * ext.k == ext.n and _self_orthogonal(ext)


def is_doubly_even(ext):
    """Row-level certificate: self-orthogonal and every row weight = 0 mod 4.

    For binary self-orthogonal codes, wt(u + v) = wt(u) + wt(v) - 2|u & v|
    with |u & v| even, so doubly-even rows force every codeword to be
    doubly-even; no enumeration needed at any dimension.
    """
    row_weight = ext.base.g.bit_count() + ext.parity_bit
    return row_weight % 4 == 0 and _self_orthogonal(ext)


def is_even_weight_subcode(sub, sup):
    """sub is contained in sup with codimension 1 and only even-weight rows."""
    if sub.n != sup.n or sub.k != sup.k - 1:
        return False
    if gf2poly.mod(sub.g, sup.g) != 0:
        return False
    return sub.g.bit_count() % 2 == 0


def row_reduce(rows):
    """Reduced row echelon form over GF(2) with leftmost (highest-bit) pivots.

    Returns (reduced nonzero rows, pivot bit positions), deterministic.
    """
    rows = list(rows)
    pivots = []
    reduced = []
    while rows:
        best = max(range(len(rows)), key=lambda i: rows[i].bit_length())
        piv_row = rows.pop(best)
        if piv_row == 0:
            break
        p = piv_row.bit_length() - 1
        rows = [row ^ piv_row if (row >> p) & 1 else row for row in rows]
        reduced = [row ^ piv_row if (row >> p) & 1 else row for row in reduced]
        reduced.append(piv_row)
        pivots.append(p)
    return reduced, pivots


def rank(rows):
    return len(row_reduce(rows)[0])


def matrix_product_is_zero(rows_a, rows_b):
    """Explicit A * B^T = 0 over GF(2); the small-scale oracle for the
    lag-based self-orthogonality shortcut."""
    return all((ra & rb).bit_count() % 2 == 0 for ra in rows_a for rb in rows_b)


def code_report(code, ext=None):
    """Report dict matching the documented JSON schema for one code."""
    d = dual(code)
    ext = ext if ext is not None else extend(code)
    return {
        "n": code.n,
        "k": code.k,
        "generator_hex": gf2poly.to_hex(code.g),
        "defining_set_leaders": code.T.coset_leaders(),
        "dual": {
            "n": d.n,
            "k": d.k,
            "generator_hex": gf2poly.to_hex(d.g),
            "defining_set_leaders": d.T.coset_leaders(),
        },
        "extended": {
            "self_dual": is_self_dual(ext),
            "doubly_even": is_doubly_even(ext),
        },
    }
