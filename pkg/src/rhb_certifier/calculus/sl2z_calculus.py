# -----------------------------------------------------------------------------
# License:
# Copyright (c) 2025 rhb-certifier contributors
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
# OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
# HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
# WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.
#
#
# Name:        sl2z_calculus.py
# Purpose:     SL2(Z)-framed chain links, slam-dunk products and lens spaces
#
# Created:     02/03/2025
# -----------------------------------------------------------------------------
"""
Matrix calculus of SL2(Z)-framed chain links.

Each component of a chain link with framing a is decorated with

    A_a = ( a  -1 )
          ( 1   0 )

and slam-dunks compose these matrices left to right. For a string
s = (a_1, ..., a_n) the second column of A_{a_1} ... A_{a_t} gives the
coordinates of the meridian mu_t in the basis (l_1, m_1), and the first
column (p, q) of the full product identifies L(s) with L(p, p - q).
"""
from __future__ import annotations

import math
import functools
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import InvalidInputError, ConsistencyError
from .strings_fractions import as_string
from ..cli.module_log import Logger


@dataclass(frozen=True)
class Vec2:
    x: int
    y: int

    def __neg__(self):
        return Vec2(-self.x, -self.y)

    def as_tuple(self):
        return (self.x, self.y)


@dataclass(frozen=True)
class Mat2:
    """2x2 integer matrix, row major: ((a, b), (c, d))."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    def __matmul__(self, other):
        if isinstance(other, Vec2):
            return Vec2(self.a * other.x + self.b * other.y, self.c * other.x + self.d * other.y)
        return Mat2(
            self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d,
        )

    def __pow__(self, n):
        if n < 0:
            raise InvalidInputError(f"Negative matrix power {n}")
        result, base = Mat2.identity(), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def det(self):
        return self.a * self.d - self.b * self.c

    def first_column(self):
        return Vec2(self.a, self.c)

    def second_column(self):
        return Vec2(self.b, self.d)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))


@dataclass(frozen=True)
class LensSpace:
    """
    Lens space L(p, q), kept in normal form: p >= 0, 0 <= q < p and
    gcd(p, q) = 1 for p >= 2; L(0, 1) is S1 x S2 and L(1, 0) is S3.
    """

    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p < 0:
            p, q = -p, -q
        if p == 0:
            if abs(q) != 1:
                raise InvalidInputError(f"L(0, {q}) is not a lens space")
            q = 1
        elif p == 1:
            q = 0
        else:
            q %= p
            if math.gcd(p, q) != 1:
                raise InvalidInputError(f"L({p}, {q}) needs gcd(p, q) = 1")
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'q', q)

    def is_s1xs2(self):
        return self.p == 0

    def is_s3(self):
        return self.p == 1

    def to_dict(self):
        return {"p": str(self.p), "q": str(self.q)}

    def __str__(self):
        return f"L({self.p},{self.q})"


S1XS2 = LensSpace(0, 1)


@functools.lru_cache(maxsize=None)
def matrix_A(m):
    """
    matrix_A - the gluing matrix A_m = ((m, -1), (1, 0))
    """
    return Mat2(m, -1, 1, 0)


def partial_product(s, t):
    """
    partial_product - A_{a_1} ... A_{a_t} (identity for t = 0)
    """
    s = as_string(s)
    if not 0 <= t <= len(s):
        raise InvalidInputError(f"Partial product index {t} out of range for {s}")
    return functools.reduce(lambda acc, a: acc @ matrix_A(a), s.entries[:t], Mat2.identity())


def string_product(s):
    """
    string_product - A_{a_1} ... A_{a_n}; the empty string gives the identity
    """
    s = as_string(s)
    return partial_product(s, len(s))


def meridian_coords(s, t):
    """
    meridian_coords - (l_1, m_1)-coordinates of the meridian mu_t, 1 <= t <= n
    """
    s = as_string(s)
    if not 1 <= t <= len(s):
        raise InvalidInputError(f"Meridian index {t} out of range for {s}")
    return partial_product(s, t).second_column()


def lens_from_string(s):
    """
    lens_from_string - L(s) = L(p, p - q) where (p, q) is the first column of the product
    """
    s = as_string(s)
    if len(s) == 0:
        raise InvalidInputError("The empty string has no associated lens space")
    column = string_product(s).first_column()
    return LensSpace(column.x, column.x - column.y)


def lens_equivalent(L1, L2):
    """
    lens_equivalent - orientation-preserving diffeomorphism test:
    p1 = p2 and (q1 = q2 or q1 q2 = 1 mod p)
    """
    if L1.p != L2.p:
        return False
    if L1.p <= 1:
        return True
    return L1.q == L2.q or (L1.q * L2.q) % L1.p == 1


def lens_of_form_p2_pq_minus_1(L):
    """
    lens_of_form_p2_pq_minus_1 - coprime p > q >= 1 with L equivalent to L(p^2, pq - 1)

    The inverse of pq - 1 mod p^2 is p(p - q) - 1, so L(p^2, pq - 1) is
    reached from L = L(n, r) exactly when p = sqrt(n) divides r' + 1 for r'
    in {r, r^-1 mod n}, with q = (r' + 1) / p mod p. The two choices of r'
    give q and p - q.
    :return: (p, q) with the smaller of the two q, or None.
    """
    p = math.isqrt(L.p)
    if p * p != L.p or p < 2:
        return None
    for r in (L.q, pow(L.q, -1, L.p)):
        if (r + 1) % p == 0:
            q = ((r + 1) // p) % p
            if 1 <= q < p and math.gcd(p, q) == 1:
                return (p, min(q, p - q))
    return None


def cross_check_exhaustive(max_length, min_entry=2, max_entry=5):
    """
    cross_check_exhaustive - compare the HJ fraction with the first column of the
    matrix product on every string with entries in [min_entry, max_entry] and
    length <= max_length. Strings are grown by prepending entries so each
    suffix is evaluated once.
    :return: the number of strings checked.
    """
    if min_entry < 2:
        raise InvalidInputError(f"HJ cross-check needs entries >= 2, got {min_entry}")
    alphabet = range(min_entry, max_entry + 1)
    stack = [((a,), Fraction(a), matrix_A(a)) for a in alphabet]
    checked = 0
    while stack:
        entries, value, product = stack.pop()
        column = product.first_column()
        if (value.numerator, value.denominator) != (column.x, column.y):
            raise ConsistencyError(f"HJ fraction {value} disagrees with first column {column.as_tuple()} on {entries}")
        checked += 1
        if len(entries) < max_length:
            for a in alphabet:
                stack.append(((a,) + entries, a - 1 / value, matrix_A(a) @ product))
    Logger.debug(f"HJ/matrix cross-check passed on {checked} strings")
    return checked
