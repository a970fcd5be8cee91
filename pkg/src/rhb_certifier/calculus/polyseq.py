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
# Name:        polyseq.py
# Purpose:     Integer polynomials, the sequences P, Q, S, T and their identities
#
# Created:     02/03/2025
# -----------------------------------------------------------------------------
"""
Exact arithmetic in Z[x] for the sequences attached to the matrices

    C   = ( x+1  -1 )        M_l = A_2 C^l = ( P_l  -S_l )
          (  x   -1 )                        ( Q_l  -T_l )

Since C^2 = x C + I every sequence satisfies f_{l+2} = x f_{l+1} + f_l and
is determined by its values at l = -1 and l = 0. Polynomial arithmetic is
delegated to sympy's dense ``Poly`` over ZZ.
"""
from __future__ import annotations

import math
import functools
import threading
from dataclasses import dataclass

import sympy

from .exceptions import InvalidInputError, ConsistencyError
from .sl2z_calculus import Mat2
from ..cli.module_log import Logger


_x = sympy.Symbol('x')


class IntPoly:
    """Univariate polynomial with integer coefficients, constant term first."""

    __slots__ = ("_poly",)

    def __init__(self, coeffs=()):
        highest_first = [int(c) for c in reversed(list(coeffs))] or [0]
        self._poly = sympy.Poly(highest_first, _x, domain=sympy.ZZ)

    @classmethod
    def _wrap(cls, poly):
        obj = cls.__new__(cls)
        obj._poly = poly
        return obj

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.constant(other)
        return None

    @property
    def coeffs(self):
        coeffs = [int(c) for c in reversed(self._poly.all_coeffs())]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)

    @property
    def degree(self):
        """Degree, with -inf for the zero polynomial."""
        return -math.inf if self._poly.is_zero else int(self._poly.degree())

    def is_zero(self):
        return bool(self._poly.is_zero)

    def leading_coefficient(self):
        return int(self._poly.LC())

    def __add__(self, other):
        other = IntPoly._coerce(other)
        return NotImplemented if other is None else IntPoly._wrap(self._poly + other._poly)

    __radd__ = __add__

    def __sub__(self, other):
        other = IntPoly._coerce(other)
        return NotImplemented if other is None else IntPoly._wrap(self._poly - other._poly)

    def __rsub__(self, other):
        other = IntPoly._coerce(other)
        return NotImplemented if other is None else IntPoly._wrap(other._poly - self._poly)

    def __mul__(self, other):
        other = IntPoly._coerce(other)
        return NotImplemented if other is None else IntPoly._wrap(self._poly * other._poly)

    __rmul__ = __mul__

    def __neg__(self):
        return IntPoly._wrap(-self._poly)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise InvalidInputError(f"Polynomial power must be a non-negative integer, got {n!r}")
        return IntPoly._wrap(self._poly ** n)

    def __eq__(self, other):
        other = IntPoly._coerce(other)
        return NotImplemented if other is None else self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({self._poly.as_expr()})"

    def __str__(self):
        return str(self._poly.as_expr())

    def to_dict(self):
        return {"coeffs": [str(c) for c in self.coeffs]}


X = IntPoly((0, 1))
ZERO = IntPoly()
ONE = IntPoly.constant(1)


def eval_at(poly, x0):
    """
    eval_at - exact Horner evaluation of poly at the integer x0
    """
    return int(poly._poly.eval(int(x0)))


def is_monic_with_positive_coefficients(poly):
    """
    is_monic_with_positive_coefficients - leading coefficient 1 and every coefficient >= 1
    """
    coeffs = poly.coeffs
    return bool(coeffs) and coeffs[-1] == 1 and all(c >= 1 for c in coeffs)


@dataclass(frozen=True)
class PolyMat2:
    """2x2 matrix over Z[x], row major."""

    a: IntPoly
    b: IntPoly
    c: IntPoly
    d: IntPoly

    @classmethod
    def from_mat2(cls, m):
        return cls(IntPoly.constant(m.a), IntPoly.constant(m.b), IntPoly.constant(m.c), IntPoly.constant(m.d))

    @classmethod
    def identity(cls):
        return cls(ONE, ZERO, ZERO, ONE)

    def __matmul__(self, other):
        return PolyMat2(
            self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d,
        )

    def __pow__(self, n):
        if n < 0:
            raise InvalidInputError(f"Negative matrix power {n}")
        result, base = PolyMat2.identity(), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def det(self):
        return self.a * self.d - self.b * self.c

    def evaluate(self, x0):
        """
        evaluate - the integer matrix obtained by substituting x = x0
        """
        return Mat2(eval_at(self.a, x0), eval_at(self.b, x0), eval_at(self.c, x0), eval_at(self.d, x0))

    def to_dict(self):
        return {"rows": [[self.a.to_dict(), self.b.to_dict()], [self.c.to_dict(), self.d.to_dict()]]}


_C = PolyMat2(X + 1, -ONE, X, -ONE)
_C_INVERSE = PolyMat2(ONE, -ONE, X, -X - 1)
_A2 = PolyMat2.from_mat2(Mat2(2, -1, 1, 0))


def matrix_C():
    """
    matrix_C - C = ((x+1, -1), (x, -1)), det(C) = -1
    """
    return _C


@functools.lru_cache(maxsize=None)
def matrix_C_power(l):
    """
    matrix_C_power - C^l for any integer l, C^{-1} = ((1, -1), (x, -x-1))
    """
    return _C ** l if l >= 0 else _C_INVERSE ** (-l)


class _Sequence:
    """
    A Z-indexed sequence with f_{l+2} = x f_{l+1} + f_l, memoized in both
    directions from its values at l = -1 and l = 0.
    """

    def __init__(self, name, at_minus_one, at_zero):
        self.name = name
        self._terms = {-1: at_minus_one, 0: at_zero}
        self._lo, self._hi = -1, 0
        self._lock = threading.Lock()

    def __getitem__(self, l):
        with self._lock:
            while self._hi < l:
                self._terms[self._hi + 1] = X * self._terms[self._hi] + self._terms[self._hi - 1]
                self._hi += 1
            while self._lo > l:
                self._terms[self._lo - 1] = self._terms[self._lo + 1] - X * self._terms[self._lo]
                self._lo -= 1
            return self._terms[l]

    def at(self, l, x0):
        """
        at - the integer f_l(x0) for l >= -1 by the recursion on values,
        without building the polynomial
        """
        if l < -1:
            raise InvalidInputError(f"{self.name}_l is evaluated here for l >= -1, got {l}")
        x0 = int(x0)
        before, current = eval_at(self._terms[-1], x0), eval_at(self._terms[0], x0)
        if l == -1:
            return before
        for _ in range(l):
            before, current = current, x0 * current + before
        return current


# Rows l = -1 and l = 0 of the table of M_l entries
P = _Sequence("P", 2 - X, IntPoly.constant(2))
Q = _Sequence("Q", ONE, ONE)
S = _Sequence("S", 1 - X, ONE)
T = _Sequence("T", ONE, ZERO)


def seq_P(l):
    return P[l]


def seq_Q(l):
    return Q[l]


def seq_P_at(l, x0):
    return P.at(l, x0)


def seq_Q_at(l, x0):
    return Q.at(l, x0)


def seq_S(l):
    return S[l]


def seq_T(l):
    return T[l]


def check_base_table(l_max=2):
    """
    check_base_table - compare the hard-coded rows with A_2 C^l for -1 <= l <= l_max
    """
    for l in range(-1, l_max + 1):
        product = _A2 @ matrix_C_power(l)
        explicit = PolyMat2(P[l], -S[l], Q[l], -T[l])
        if product != explicit:
            raise ConsistencyError(f"Row l={l} of the sequence table disagrees with A_2 C^{l}")
    return True


@functools.lru_cache(maxsize=None)
def matrix_M(l):
    """
    matrix_M - M_l = A_2 C^l = ((P_l, -Q_{l-1}), (Q_l, -T_l)).

    Both the sequence form and the matrix product are computed and compared.
    """
    if l < -1:
        raise InvalidInputError(f"matrix_M is defined here for l >= -1, got {l}")
    if S[l] != Q[l - 1]:
        raise ConsistencyError(f"S_{l} != Q_{l - 1}")
    explicit = PolyMat2(P[l], -Q[l - 1], Q[l], -T[l])
    product = _A2 @ matrix_C_power(l)
    if explicit != product:
        raise ConsistencyError(f"M_{l}: sequence form and A_2 C^{l} disagree")
    return explicit


# -----------------------------------------------------------------------------
# Identities between the sequences
# -----------------------------------------------------------------------------
def _sign(n):
    return 1 if n % 2 == 0 else -1


IDENTITIES = {
    1: ("P_{l+1} - P_l = x Q_l",
        lambda l: (P[l + 1] - P[l], X * Q[l])),
    2: ("Q_{l+1} - Q_l = x T_{l+1}",
        lambda l: (Q[l + 1] - Q[l], X * T[l + 1])),
    3: ("Q_{l+1} + Q_l = P_{l+1}",
        lambda l: (Q[l + 1] + Q[l], P[l + 1])),
    # T_{l+1} + T_l = Q_l is the form consistent with the table and with (6) => (7)
    4: ("T_{l+1} + T_l = Q_l",
        lambda l: (T[l + 1] + T[l], Q[l])),
    5: ("P_{l+1} Q_l - P_l Q_{l+1} = (-1)^{l+1} x",
        lambda l: (P[l + 1] * Q[l] - P[l] * Q[l + 1], _sign(l + 1) * X)),
    6: ("Q_{2l} Q_{2l-1} - P_{2l} T_{2l} = 1",
        lambda l: (Q[2 * l] * Q[2 * l - 1] - P[2 * l] * T[2 * l], ONE)),
    7: ("P_{2l} T_{2l-1} - Q_{2l-1}^2 = 1",
        lambda l: (P[2 * l] * T[2 * l - 1] - Q[2 * l - 1] ** 2, ONE)),
}


def identity_residual(identity_id, l):
    """
    identity_residual - lhs - rhs of identity identity_id at index l
    """
    if identity_id not in IDENTITIES:
        raise InvalidInputError(f"Unknown identity {identity_id}, expected one of {sorted(IDENTITIES)}")
    lhs, rhs = IDENTITIES[identity_id][1](l)
    return lhs - rhs


def verify_identity(identity_id, l_max, l_min=0):
    """
    verify_identity - True iff the identity holds as polynomials for l_min <= l <= l_max
    """
    if l_max < 1:
        raise InvalidInputError(f"l_max must be >= 1, got {l_max}")
    for l in range(l_min, l_max + 1):
        if not identity_residual(identity_id, l).is_zero():
            Logger.warning(f"Identity ({identity_id}) {IDENTITIES[identity_id][0]} fails at l={l}")
            return False
    Logger.debug(f"Identity ({identity_id}) holds for {l_min} <= l <= {l_max}")
    return True


check_base_table()
