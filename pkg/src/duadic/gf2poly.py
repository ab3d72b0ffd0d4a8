"""Polynomials over GF(2) as int bitvectors (bit i = coefficient of x^i)
and the synthesis of generator/check polynomials from defining sets.
"""

import numpy as np

from .cyclotomic import coset

NEG_INF = float("-inf")


def degree(p):
    """Degree of p; the zero polynomial has degree -inf."""
    return p.bit_length() - 1 if p else NEG_INF


def mul(a, b):
    """Product in GF(2)[x] (schoolbook shift-xor)."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    r = 0
    while a:
        low = a & -a
        r ^= b << (low.bit_length() - 1)
        a ^= low
    return r


def divmod_(a, b):
    """Quotient and remainder of a by b, deg(rem) < deg(b)."""
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length() - 1
    q = 0
    while a and a.bit_length() - 1 >= db:
        shift = a.bit_length() - 1 - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def mod(a, b):
    return divmod_(a, b)[1]


def reciprocal(p):
    """x^deg(p) * p(1/x): the coefficient string reversed."""
    if p == 0:
        return 0
    return int(bin(p)[2:][::-1], 2)


def x_pow_plus_one(n):
    """x^n + 1."""
    return (1 << n) | 1


def evaluate(fld, p, x):
    """Horner evaluation of p at the field element x."""
    acc = 0
    for d in range(p.bit_length() - 1, -1, -1):
        acc = fld.mul(acc, x) ^ ((p >> d) & 1)
    return acc


def eval_at_powers(fld, p, exponents=None):
    """Evaluate p at alpha^e for each exponent e, vectorized over all points.

    Returns a uint32 array of field elements; exponents defaults to all of Z_n.
    """
    n = fld.n
    if exponents is None:
        exponents = np.arange(n, dtype=np.int64)
    else:
        exponents = np.asarray(exponents, dtype=np.int64) % n
    antilog = fld.antilog_table
    log = fld.log_table
    acc = np.zeros(len(exponents), dtype=np.uint32)
    for d in range(p.bit_length() - 1, -1, -1):
        nz = acc != 0
        acc[nz] = antilog[(log[acc[nz]].astype(np.int64) + exponents[nz]) % n]
        if (p >> d) & 1:
            acc ^= 1
    return acc


def minimal_poly(fld, cs):
    """prod_{i in cs} (x - alpha^i) for a 2-cyclotomic coset cs.

    The product is expanded in GF(2^m)[x]; closure of the coset under
    doubling forces every coefficient into GF(2), and any coefficient that
    does not land there signals a broken coset upstream.
    """
    coeffs = [1]
    for i in cs.elements:
        root = fld.pow_alpha(i)
        nxt = [0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j + 1] ^= c
            nxt[j] ^= fld.mul(root, c)
        coeffs = nxt
    if any(c > 1 for c in coeffs):
        raise ValueError(f"coefficients of the coset product left GF(2); coset {cs.elements} is not doubling-closed mod {fld.n}")
    g = 0
    for j, c in enumerate(coeffs):
        g |= c << j
    return g


def generator_poly(fld, T):
    """Product of the minimal polynomials of the cosets in T; deg = |T|."""
    if T.n != fld.n:
        raise ValueError(f"defining set mod {T.n} does not match field of order {fld.n + 1}")
    g = 1
    for leader in T.coset_leaders():
        g = mul(g, minimal_poly(fld, coset(leader, fld.n)))
    return g


def check_poly(g, n):
    """h with g*h = x^n + 1; rejects non-divisors."""
    q, rem = divmod_(x_pow_plus_one(n), g)
    if rem:
        raise ValueError("generator polynomial does not divide x^n + 1")
    return q


def to_hex(p):
    """Coefficient mask, LSB = constant term (x^3+x+1 -> '0xB')."""
    return f"{p:#X}".replace("0X", "0x")


def from_hex(s):
    return int(s, 16)


def pretty(p):
    """Sparse exponent form, e.g. 'x^3 + x + 1'."""
    if p == 0:
        return "0"
    terms = []
    for d in range(p.bit_length() - 1, -1, -1):
        if (p >> d) & 1:
            terms.append("1" if d == 0 else "x" if d == 1 else f"x^{d}")
    return " + ".join(terms)
