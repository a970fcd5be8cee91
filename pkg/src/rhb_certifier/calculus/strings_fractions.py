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
# Name:        strings_fractions.py
# Purpose:     Plumbing strings, Hirzebruch-Jung continued fractions and blow-downs
#
# Created:     02/03/2025
# -----------------------------------------------------------------------------
"""
Plumbing strings and their continued-fraction calculus.

A plumbing string ``(a_1, ..., a_n)`` records the framing coefficients of a
linear chain of unknots. When every entry is at least 2 the string has a
Hirzebruch-Jung continued fraction

    [a_1, ..., a_n] = a_1 - 1 / (a_2 - 1 / ( ... - 1 / a_n))

and the boundary of the plumbing is the lens space L(p, p - q) with
p / q = [a_1, ..., a_n]. Positions inside a string are 1-based.
"""
from __future__ import annotations

import re
import math
import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .exceptions import InvalidInputError
from ..cli.module_log import Logger


@dataclass(frozen=True)
class PlumbingString:
    """Ordered framing coefficients of a linear chain link."""

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'entries', tuple(int(a) for a in self.entries))

    @classmethod
    def of(cls, *entries):
        return cls(tuple(entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.entries) + ")"

    def is_hj(self):
        """
        is_hj - True when the string has an HJ continued fraction (entries >= 2)
        """
        return len(self.entries) > 0 and all(a >= 2 for a in self.entries)

    def ones(self):
        """
        ones - 1-based positions of the entries equal to 1
        """
        return [i + 1 for i, a in enumerate(self.entries) if a == 1]


ZERO = PlumbingString((0,))
EMPTY = PlumbingString(())


def as_string(s):
    """
    as_string - coerce a sequence of integers to a PlumbingString
    """
    if isinstance(s, PlumbingString):
        return s
    if isinstance(s, str):
        return parse_string(s)
    return PlumbingString(tuple(s))


def repeat(block, n):
    """
    repeat - x^{[n]}: the block repeated n times, omitted when n <= 0
    """
    return tuple(block) * max(n, 0)


def _check_km(k, m):
    if not isinstance(k, int) or not isinstance(m, int):
        raise InvalidInputError(f"k and m must be integers, got k={k!r}, m={m!r}")
    if k < -1:
        raise InvalidInputError(f"k must be >= -1, got {k}")
    if m < 1:
        raise InvalidInputError(f"m must be >= 1, got {m}")


def _block(m):
    # (2^{[m-1]}, m+2)
    return repeat((2,), m - 1) + (m + 2,)


def make_s(k, m):
    """
    make_s - the string s_{k,m} = (2, (2^{[m-1]}, m+2)^{[k+1]}, 2, 2, (2^{[m-1]}, m+2)^{[k+1]})
    """
    _check_km(k, m)
    body = repeat(_block(m), k + 1)
    return PlumbingString((2,) + body + (2, 2) + body)


def make_s_prime(k, m):
    """
    make_s_prime - the string s'_{k,m} = (2, (2^{[m-1]}, m+2)^{[k+1]}, 1, 2, (2^{[m-1]}, m+2)^{[k+1]})
    """
    _check_km(k, m)
    body = repeat(_block(m), k + 1)
    return PlumbingString((2,) + body + (1, 2) + body)


def make_s_doubleprime(k, m):
    """
    make_s_doubleprime - the string
    s''_{k,m} = (2^{[m-1]}, 1, m+2, (2^{[m-1]}, m+2)^{[k]}, 2^{[m]}, 1, m+2, (2^{[m-1]}, m+2)^{[k]})
    """
    _check_km(k, m)
    body = repeat(_block(m), k)
    return PlumbingString(
        repeat((2,), m - 1) + (1, m + 2) + body + repeat((2,), m) + (1, m + 2) + body
    )


def owens_string(k):
    """
    owens_string - the string (3^{[k+1]}, 5, 3^{[k]}, 2) dual to s_{k,1}.
    At k = -1 the dual of s_{-1,1} = (2,2,2) is the single entry (4).
    """
    if not isinstance(k, int) or k < -1:
        raise InvalidInputError(f"k must be an integer >= -1, got {k!r}")
    if k == -1:
        return PlumbingString((4,))
    return PlumbingString(repeat((3,), k + 1) + (5,) + repeat((3,), k) + (2,))


# -----------------------------------------------------------------------------
# String literals: ENTRY := (INT | "(" LIST ")") ["^" INT] ; LIST := ENTRY ("," ENTRY)*
# -----------------------------------------------------------------------------
_TOKEN = re.compile(r"\s*(-?\d+|[(),^])")


def _tokenize(text):
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise InvalidInputError(f"Unexpected character {text[pos:].strip()[:1]!r} at offset {pos} in {text!r}")
        tokens.append(match.group(1))
        pos = match.end()
    return tokens


def parse_string(text):
    """
    parse_string - parse a string literal such as "2,(2^2,5)^3,2,2"
    :param text: comma separated integers with repeat blocks.
    :return: the expanded PlumbingString.
    """
    tokens = _tokenize(text)
    if not tokens:
        return EMPTY
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        token = peek()
        if token is None or (expected is not None and token != expected):
            raise InvalidInputError(f"Expected {expected or 'a token'!r} in {text!r}, found {token!r}")
        pos += 1
        return token

    def take_int():
        token = take()
        if token in "(),^":
            raise InvalidInputError(f"Expected an integer in {text!r}, found {token!r}")
        return int(token)

    def parse_entry():
        if peek() == "(":
            take("(")
            items = parse_list()
            take(")")
        else:
            items = (take_int(),)
        if peek() == "^":
            take("^")
            n = take_int()
            if n < 0:
                raise InvalidInputError(f"Negative repeat count {n} in {text!r}")
            items = repeat(items, n)
        return items

    def parse_list():
        items = parse_entry()
        while peek() == ",":
            take(",")
            items += parse_entry()
        return items

    entries = parse_list()
    if pos != len(tokens):
        raise InvalidInputError(f"Trailing tokens {tokens[pos:]} in {text!r}")
    return PlumbingString(entries)


# -----------------------------------------------------------------------------
# Hirzebruch-Jung continued fractions
# -----------------------------------------------------------------------------
def hj_evaluate(s):
    """
    hj_evaluate - the continued fraction [a_1, ..., a_n] in lowest terms
    """
    s = as_string(s)
    if len(s) == 0:
        raise InvalidInputError("Cannot evaluate the empty string")
    if not s.is_hj():
        raise InvalidInputError(f"HJ evaluation needs all entries >= 2, got {s}")
    value = Fraction(s[-1])
    for a in reversed(s.entries[:-1]):
        value = a - 1 / value
    return value


def hj_expand(p, q):
    """
    hj_expand - the unique string with entries >= 2 evaluating to p/q
    :param p: numerator, p > q
    :param q: denominator, q >= 1, gcd(p, q) = 1
    """
    if not (isinstance(p, int) and isinstance(q, int)) or not p > q >= 1:
        raise InvalidInputError(f"hj_expand needs integers p > q >= 1, got p={p!r}, q={q!r}")
    if math.gcd(p, q) != 1:
        raise InvalidInputError(f"hj_expand needs coprime p, q, got gcd({p}, {q}) = {math.gcd(p, q)}")
    entries = []
    while q > 0:
        a = -(-p // q)
        entries.append(a)
        p, q = q, a * q - p
    return PlumbingString(entries)


def riemenschneider_dual(s):
    """
    riemenschneider_dual - dual string by the point rule.

    Row i of the point diagram holds a_i - 1 points and starts in the column
    where row i-1 ends; the dual entries are the column counts plus one.
    """
    s = as_string(s)
    if not s.is_hj():
        raise InvalidInputError(f"Riemenschneider duality needs all entries >= 2, got {s}")
    ncols = sum(a - 2 for a in s) + 1
    counts = [0] * ncols
    start = 0
    for a in s:
        for col in range(start, start + a - 1):
            counts[col] += 1
        start += a - 2
    return PlumbingString(c + 1 for c in counts)


# -----------------------------------------------------------------------------
# Blow-downs
# -----------------------------------------------------------------------------
class BlowDownResult(NamedTuple):
    reduced: bool
    moves: tuple[int, ...]
    path: tuple[PlumbingString, ...]


def blow_down_once(s, index):
    """
    blow_down_once - remove the 1-entry at (1-based) index, decrementing its neighbours
    """
    s = as_string(s)
    if not 1 <= index <= len(s):
        raise InvalidInputError(f"Index {index} out of range for {s}")
    if s[index - 1] != 1:
        raise InvalidInputError(f"Entry at index {index} of {s} is {s[index - 1]}, not 1")
    entries = list(s.entries)
    i = index - 1
    if i > 0:
        entries[i - 1] -= 1
    if i < len(entries) - 1:
        entries[i + 1] -= 1
    del entries[i]
    return PlumbingString(entries)


def blows_down_to_zero(s):
    """
    blows_down_to_zero - repeatedly blow down the leftmost 1 until (0) or no 1 is left
    :return: BlowDownResult(reduced, moves, path) where path starts at s.
    """
    s = as_string(s)
    moves, path = [], [s]
    current = s
    while current != ZERO:
        ones = current.ones()
        if not ones:
            break
        current = blow_down_once(current, ones[0])
        moves.append(ones[0])
        path.append(current)
    Logger.debug(f"blow-down of {s}: {' -> '.join(str(x) for x in path)}")
    return BlowDownResult(current == ZERO, tuple(moves), tuple(path))


@functools.lru_cache(maxsize=None)
def _reachable(entries):
    if entries == (0,):
        return True
    current = PlumbingString(entries)
    return any(_reachable(blow_down_once(current, i).entries) for i in current.ones())


def blows_down_to_zero_exhaustive(s):
    """
    blows_down_to_zero_exhaustive - True iff some order of blow-downs reaches (0)
    """
    s = as_string(s)
    return _reachable(s.entries)
