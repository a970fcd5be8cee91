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
# Name:        obstruction.py
# Purpose:     Boundary lens spaces, Markov triples and the symplectic obstruction
#
# Created:     02/03/2025
# -----------------------------------------------------------------------------
"""
The boundary of B(s_{k,m}) is L(p^2, pq - 1) with p = P_{2k+2}(m) and
q = Q_{2k+1}(m). A symplectic embedding of B_{p,q} in CP2 needs p to be a
Markov number and to divide q^2 + 9.
"""
from __future__ import annotations

import functools
from enum import Enum
from collections import deque
from fractions import Fraction
from dataclasses import dataclass, field

from .exceptions import InvalidInputError, ConsistencyError
from .strings_fractions import make_s, owens_string, hj_evaluate, riemenschneider_dual
from .sl2z_calculus import LensSpace, matrix_A, string_product, lens_from_string, lens_equivalent
from .polyseq import PolyMat2, seq_P, seq_Q, seq_T, matrix_M, eval_at
from ..cli.module_log import Logger


@dataclass(frozen=True, order=True)
class MarkovTriple:
    p1: int
    p2: int
    p3: int

    def __post_init__(self):
        values = sorted((int(self.p1), int(self.p2), int(self.p3)))
        if values[0] < 1:
            raise InvalidInputError(f"Markov triple entries must be positive, got {values}")
        a, b, c = values
        if a * a + b * b + c * c != 3 * a * b * c:
            raise InvalidInputError(f"{tuple(values)} does not solve p1^2 + p2^2 + p3^2 = 3 p1 p2 p3")
        for name, value in zip(("p1", "p2", "p3"), values):
            object.__setattr__(self, name, value)

    def as_tuple(self):
        return (self.p1, self.p2, self.p3)

    def mutate(self, i):
        """
        mutate - Vieta involution p_i -> 3 p_j p_k - p_i, i in 1..3
        """
        values = list(self.as_tuple())
        j, k = [x for x in range(3) if x != i - 1]
        values[i - 1] = 3 * values[j] * values[k] - values[i - 1]
        return MarkovTriple(*values)

    def __str__(self):
        return f"({self.p1},{self.p2},{self.p3})"


ROOT = MarkovTriple(1, 1, 1)


class MarkovMembership(str, Enum):
    YES = "yes"
    NO_BELOW_BOUND = "no_below_bound"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class EmbeddingVerdict:
    k: int
    m: int
    p: int
    q: int
    smooth: bool
    symplectic: str
    reason: str
    markov: MarkovMembership
    divides_q2_plus_9: bool
    lens: LensSpace = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'lens', LensSpace(self.p * self.p, self.p * self.q - 1))

    def to_dict(self):
        return {
            "k": str(self.k),
            "m": str(self.m),
            "p": str(self.p),
            "q": str(self.q),
            "lens": self.lens.to_dict(),
            "smooth": "yes" if self.smooth else "no",
            "symplectic": self.symplectic,
            "reason": self.reason,
            "markov": self.markov.value,
            "divides_q2_plus_9": self.divides_q2_plus_9,
        }


# -----------------------------------------------------------------------------
# Boundary
# -----------------------------------------------------------------------------
def _check_k(k, minimum=-1):
    if not isinstance(k, int) or k < minimum:
        raise InvalidInputError(f"k must be an integer >= {minimum}, got {k!r}")


def _check_m(m):
    if not isinstance(m, int) or m < 1:
        raise InvalidInputError(f"m must be an integer >= 1, got {m!r}")


def boundary_pq(k, m, cross_check=True):
    """
    boundary_pq - (p, q) = (P_{2k+2}(m), Q_{2k+1}(m)) with dB(s_{k,m}) = L(p^2, pq - 1).

    With cross_check the value is compared with two independent routes: the
    first column of M_{2k+2} A_2 M_{2k+2} at x = m, which must be the first
    column of the matrix product of s_{k,m} and equal (p^2, p Q_{2k+2}(m) + 1),
    and the lens space read off s_{k,m}.
    """
    _check_k(k)
    _check_m(m)
    p = eval_at(seq_P(2 * k + 2), m)
    q = eval_at(seq_Q(2 * k + 1), m)
    if not cross_check:
        return p, q

    s = make_s(k, m)
    M = matrix_M(2 * k + 2)
    column = (M @ PolyMat2.from_mat2(matrix_A(2)) @ M).evaluate(m).first_column()
    expected = (p * p, p * eval_at(seq_Q(2 * k + 2), m) + 1)
    if column.as_tuple() != expected:
        raise ConsistencyError(f"M A_2 M at ({k}, {m}) has first column {column.as_tuple()}, expected {expected}")
    if string_product(s).first_column() != column:
        raise ConsistencyError(f"Matrix product of {s} disagrees with M A_2 M at ({k}, {m})")
    if not lens_equivalent(lens_from_string(s), LensSpace(p * p, p * q - 1)):
        raise ConsistencyError(f"{lens_from_string(s)} is not equivalent to L({p * p},{p * q - 1}) at ({k}, {m})")
    return p, q


def divides_q2_plus_9(p, q):
    """
    divides_q2_plus_9 - p | q^2 + 9
    """
    if p < 1:
        raise InvalidInputError(f"p must be >= 1, got {p}")
    return (q * q + 9) % p == 0


def q2_plus_9_identity_check(k, m):
    """
    q2_plus_9_identity_check - Q_{2k+1}^2 + 9 = P_{2k+2} T_{2k+1} + 8, as polynomials and at x = m
    """
    _check_k(k)
    _check_m(m)
    P, Q, T = seq_P(2 * k + 2), seq_Q(2 * k + 1), seq_T(2 * k + 1)
    symbolic = Q * Q + 9 == P * T + 8
    numeric = eval_at(Q, m) ** 2 + 9 == eval_at(P, m) * eval_at(T, m) + 8
    if not (symbolic and numeric):
        Logger.warning(f"q^2 + 9 identity fails at ({k}, {m}): symbolic={symbolic} numeric={numeric}")
    return symbolic and numeric


# -----------------------------------------------------------------------------
# Markov triples
# -----------------------------------------------------------------------------
@functools.lru_cache(maxsize=None)
def markov_tree(depth):
    """
    markov_tree - every Markov triple within depth mutations of (1,1,1)
    :return: frozenset of MarkovTriple.
    """
    if not isinstance(depth, int) or depth < 0:
        raise InvalidInputError(f"depth must be an integer >= 0, got {depth!r}")
    seen = {ROOT}
    frontier = [ROOT]
    for _ in range(depth):
        frontier = [child for t in frontier for child in (t.mutate(i) for i in (1, 2, 3)) if child not in seen]
        frontier = sorted(set(frontier))
        seen.update(frontier)
    return frozenset(seen)


def markov_numbers(depth):
    """
    markov_numbers - sorted distinct entries of markov_tree(depth)
    """
    return sorted({p for t in markov_tree(depth) for p in t.as_tuple()})


def is_markov_number(p, search_bound):
    """
    is_markov_number - search the Markov tree up to maximal entry search_bound.

    Every Markov number is the largest entry of some triple, and mutating
    the two smaller entries of a triple only increases its maximum, so the
    search is complete once search_bound >= p.
    """
    if p < 1:
        raise InvalidInputError(f"p must be >= 1, got {p}")
    seen = {ROOT}
    queue = deque([ROOT])
    while queue:
        t = queue.popleft()
        if p in t.as_tuple():
            return MarkovMembership.YES
        for i in (1, 2, 3):
            child = t.mutate(i)
            if child.p3 > t.p3 and child.p3 <= search_bound and child not in seen:
                seen.add(child)
                queue.append(child)
    return MarkovMembership.NO_BELOW_BOUND if search_bound >= p else MarkovMembership.INCONCLUSIVE


def markov_q_candidates(t):
    """
    markov_q_candidates - for each p_i the residues {+-3 p_j p_k^{-1} mod p_i}
    :return: tuple of three frozensets, empty where p_i = 1.
    """
    values = t.as_tuple()
    result = []
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        p_i, p_j, p_k = values[i], values[j], values[k]
        if p_i == 1:
            result.append(frozenset())
            continue
        try:
            inverse = pow(p_k, -1, p_i)
        except ValueError:
            raise InvalidInputError(f"{p_k} is not invertible mod {p_i} in {t}")
        q = 3 * p_j * inverse % p_i
        result.append(frozenset({q, -q % p_i}))
    return tuple(result)


# -----------------------------------------------------------------------------
# Fibonacci case m = 1
# -----------------------------------------------------------------------------
def odd_fibonacci(n):
    """
    odd_fibonacci - F_{2n-1}: 1, 2, 5, 13, 34, ...
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"n must be an integer >= 1, got {n!r}")
    a, b = 1, 2
    for _ in range(n - 1):
        a, b = b, 3 * b - a
    return a


def verify_fibonacci_case(k):
    """
    verify_fibonacci_case - B(s_{k,1}) = B_{F, F'} with F = F_{2k+5}, F' = F_{2k+3}
    """
    _check_k(k)
    F, F1 = odd_fibonacci(k + 3), odd_fibonacci(k + 2)
    checks = {
        "continued_fraction": hj_evaluate(owens_string(k)) == Fraction(F * F, F * F1 - 1),
        "boundary": boundary_pq(k, 1) == (F, F1),
        "dual": riemenschneider_dual(make_s(k, 1)) == owens_string(k),
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        Logger.warning(f"Fibonacci case k={k} fails: {', '.join(failed)}")
    return not failed


# -----------------------------------------------------------------------------
# Verdict
# -----------------------------------------------------------------------------
def symplectic_verdict(k, m):
    """
    symplectic_verdict - smooth and symplectic embedding verdict for B(s_{k,m}) in CP2
    """
    _check_k(k)
    _check_m(m)
    if m % 2 == 0:
        raise InvalidInputError(f"m must be odd, got {m}")
    p, q = boundary_pq(k, m)
    divides = divides_q2_plus_9(p, q)
    markov = is_markov_number(p, 10 * p)

    if k == -1:
        return EmbeddingVerdict(k, m, p, q, True, "yes", "conic_complement", markov, divides)

    if m >= 3 and p < m * m:
        raise ConsistencyError(f"p = {p} < m^2 = {m * m} at ({k}, {m})")
    if not divides:
        symplectic, reason = "obstructed", "q2_plus_9"
    elif markov != MarkovMembership.YES:
        symplectic, reason = "obstructed", "not_markov"
    else:
        symplectic, reason = "unknown", "conditions_hold"
    Logger.debug(f"verdict ({k}, {m}): p={p} q={q} {symplectic} ({reason})")
    return EmbeddingVerdict(k, m, p, q, True, symplectic, reason, markov, divides)
