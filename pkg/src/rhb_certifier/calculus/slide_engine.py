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
# Name:        slide_engine.py
# Purpose:     Framed curve triples, the sliding map and the reduction certificates
#
# Created:     02/03/2025
# -----------------------------------------------------------------------------
"""
Handle slides on triples of framed curves.

A framed curve (p, q)_delta records the (l_1, m_1)-coordinates of the
attaching curve of a 2-handle together with its framing sign. Sliding a
curve over the next one acts on consecutive components through

    F((p, q)_d, (p0, q0)_d0) = ((p0, q0)_d0, (p - d0 D0 p0, q - d0 D0 q0)_d),
    D0 = p0 q - q0 p.

Pair positions are 1 = (nu_1, nu_2) and 2 = (nu_2, nu_3); components are
numbered 1..3 in the order nu_1, nu_2, nu_3.
"""
from __future__ import annotations

from enum import Enum
from dataclasses import dataclass

from .exceptions import InvalidInputError, DegenerateSlideError, ConsistencyError, CertificateError
from .strings_fractions import PlumbingString, repeat
from .sl2z_calculus import string_product
from .polyseq import seq_P_at, seq_Q_at
from ..cli.module_log import Logger


@dataclass(frozen=True)
class FramedCurve:
    p: int
    q: int
    delta: int

    def __post_init__(self):
        if self.delta not in (1, -1):
            raise InvalidInputError(f"Framing sign must be +1 or -1, got {self.delta!r}")
        if self.p == 0 and self.q == 0:
            raise DegenerateSlideError("Framed curve with coordinates (0, 0)")

    def flipped(self):
        return FramedCurve(-self.p, -self.q, self.delta)

    def __str__(self):
        return f"({self.p},{self.q})_{self.delta:+d}"


@dataclass(frozen=True)
class CurveTriple:
    nu1: FramedCurve
    nu2: FramedCurve
    nu3: FramedCurve

    @classmethod
    def of(cls, *curves):
        """
        of - build a triple from three (p, q, delta) tuples or FramedCurves
        """
        if len(curves) != 3:
            raise InvalidInputError(f"A curve triple needs 3 components, got {len(curves)}")
        return cls(*(c if isinstance(c, FramedCurve) else FramedCurve(*c) for c in curves))

    @property
    def components(self):
        return (self.nu1, self.nu2, self.nu3)

    def replace(self, position, pair):
        """
        replace - substitute the pair of components (position, position + 1)
        """
        curves = list(self.components)
        curves[position - 1:position + 1] = pair
        return CurveTriple(*curves)

    def as_tuples(self):
        return tuple((c.p, c.q, c.delta) for c in self.components)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


class MoveKind(str, Enum):
    SLIDE_FORWARD = "slide_forward"
    SLIDE_BACKWARD = "slide_backward"
    SIGN_FLIP = "sign_flip"


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    position: int

    def __post_init__(self):
        object.__setattr__(self, 'kind', MoveKind(self.kind))
        upper = 3 if self.kind == MoveKind.SIGN_FLIP else 2
        if not 1 <= self.position <= upper:
            raise InvalidInputError(f"Position {self.position} out of range for {self.kind.value}")


@dataclass(frozen=True)
class ReductionTrace:
    start: CurveTriple
    moves: tuple[Move, ...]
    end: CurveTriple


CP2_NORMAL_FORM = CurveTriple.of((0, 1, 1), (1, 0, -1), (1, 0, 1))


# -----------------------------------------------------------------------------
# Primitive moves
# -----------------------------------------------------------------------------
def slide_factor(a, b):
    """
    slide_factor - d0 * D0 for the slide of a over b, D0 = p0 q - q0 p
    """
    return b.delta * (b.p * a.q - b.q * a.p)


def slide_F(a, b):
    """
    slide_F - the sliding map on two consecutive framed curves
    """
    factor = slide_factor(a, b)
    return b, FramedCurve(a.p - factor * b.p, a.q - factor * b.q, a.delta)


def slide_F_inverse(a, b):
    """
    slide_F_inverse - undo slide_F: slide_F_inverse(*slide_F(x, y)) == (x, y).

    D0 is unchanged by the slide, so it can be read off the output pair.
    """
    factor = slide_factor(b, a)
    return FramedCurve(b.p + factor * a.p, b.q + factor * a.q, b.delta), a


def flip_sign(t, i):
    """
    flip_sign - negate the coordinates of component i, keeping its framing
    """
    if i not in (1, 2, 3):
        raise InvalidInputError(f"Component index must be 1, 2 or 3, got {i!r}")
    curves = list(t.components)
    curves[i - 1] = curves[i - 1].flipped()
    return CurveTriple(*curves)


def apply_move(t, move):
    """
    apply_move - apply a single move to a triple
    """
    if move.kind == MoveKind.SIGN_FLIP:
        return flip_sign(t, move.position)
    pair = t.components[move.position - 1:move.position + 1]
    slide = slide_F if move.kind == MoveKind.SLIDE_FORWARD else slide_F_inverse
    return t.replace(move.position, slide(*pair))


def replay(trace):
    """
    replay - apply the moves of a trace to its start triple
    """
    current = trace.start
    for step, move in enumerate(trace.moves, start=1):
        try:
            current = apply_move(current, move)
        except DegenerateSlideError as e:
            raise DegenerateSlideError(f"Degenerate slide at move {step} ({move.kind.value} @ {move.position}): {e.message}")
    return current


def verify_trace(trace):
    """
    verify_trace - raise CertificateError unless replaying the moves reproduces trace.end
    """
    final = replay(trace)
    if final != trace.end:
        raise CertificateError(f"Replay ends at {final}, certificate claims {trace.end}")
    return True


def is_cp2_normal_form(t):
    """
    is_cp2_normal_form - ((0,1)_1, (1,0)_-1, (1,0)_1) up to sign flips of the coordinates
    """
    for curve, target in zip(t.components, CP2_NORMAL_FORM.components):
        if curve.delta != target.delta or (curve.p, curve.q) not in ((target.p, target.q), (-target.p, -target.q)):
            return False
    return True


# -----------------------------------------------------------------------------
# The family tau_{l,m}
# -----------------------------------------------------------------------------
def _parity_sign(l):
    return 1 if l % 2 == 0 else -1


def _check_m(m):
    if not isinstance(m, int) or m < 1:
        raise InvalidInputError(f"m must be an integer >= 1, got {m!r}")


def tau(l, m):
    """
    tau - ((P_{l+1}(m), Q_{l+1}(m))_{(-1)^l}, (P_{l+2}(m), Q_{l+2}(m))_{(-1)^{l+1}}, (m, m-1)_1)
    """
    if not isinstance(l, int) or l < -1:
        raise InvalidInputError(f"l must be an integer >= -1, got {l!r}")
    _check_m(m)
    return CurveTriple(
        FramedCurve(seq_P_at(l + 1, m), seq_Q_at(l + 1, m), _parity_sign(l)),
        FramedCurve(seq_P_at(l + 2, m), seq_Q_at(l + 2, m), _parity_sign(l + 1)),
        FramedCurve(m, m - 1, 1),
    )


def starting_triple(k, m):
    """
    starting_triple - the triple (nu_1, nu_2, nu_3) of B(s_{k,m}) read off matrix products.

    nu_3 is the first column of A_2^{m-1}, nu_2 the first column of
    A_2 (A_2^{m-1} A_{m+2})^{k+1}, nu_1 the first column of that product
    times A_1 A_2^{m-1}; the framings are (+1, -1, +1). The result is
    checked against tau(2k, m) up to sign flips of the coordinates.
    """
    if not isinstance(k, int) or k < 0:
        raise InvalidInputError(f"k must be an integer >= 0, got {k!r}")
    _check_m(m)
    block = repeat((2,), m - 1) + (m + 2,)
    prefix = (2,) + repeat(block, k + 1)
    nu3 = string_product(PlumbingString(repeat((2,), m - 1))).first_column()
    nu2 = string_product(PlumbingString(prefix)).first_column()
    nu1 = string_product(PlumbingString(prefix + (1,) + repeat((2,), m - 1))).first_column()
    triple = CurveTriple.of((nu1.x, nu1.y, 1), (nu2.x, nu2.y, -1), (nu3.x, nu3.y, 1))

    expected = tau(2 * k, m)
    for i, (curve, target) in enumerate(zip(triple.components, expected.components), start=1):
        if curve != target and curve.flipped() != target:
            raise ConsistencyError(f"starting_triple({k}, {m}) component {i} is {curve}, tau({2 * k}, {m}) has {target}")
    return triple


def reduce_to_cp2(k, m):
    """
    reduce_to_cp2 - certificate that tau(2k, m) slides to the CP2 normal form.

    The moves are: 2k+1 backward slides on pair 1 (tau(2k) -> tau(-1)), then
    (m-1)/2 rounds of a forward slide on pair 2 followed by a sign flip of
    component 3, then 3 backward slides on pair 1.
    :return: ReductionTrace whose end equals the normal form exactly.
    """
    if not isinstance(k, int) or k < 0:
        raise InvalidInputError(f"k must be an integer >= 0, got {k!r}")
    _check_m(m)
    if m % 2 == 0:
        raise InvalidInputError(f"m must be odd, got {m}")

    start = tau(2 * k, m)
    moves, current = [], start

    def push(move, expected_factor=None):
        nonlocal current
        if expected_factor is not None and move.kind != MoveKind.SIGN_FLIP:
            a, b = current.components[move.position - 1:move.position + 1]
            factor = slide_factor(b, a) if move.kind == MoveKind.SLIDE_BACKWARD else slide_factor(a, b)
            if factor != expected_factor:
                raise CertificateError(f"Slide factor {factor} != {expected_factor} at move {len(moves) + 1} of ({k}, {m})")
        current = apply_move(current, move)
        moves.append(move)

    for _ in range(2 * k + 1):
        push(Move(MoveKind.SLIDE_BACKWARD, 1), expected_factor=-m)
    if current != tau(-1, m):
        raise CertificateError(f"Descent from tau({2 * k}, {m}) ended at {current}, not tau(-1, {m})")
    Logger.debug(f"({k}, {m}) descent reached tau(-1, {m}) = {current}")

    for _ in range((m - 1) // 2):
        push(Move(MoveKind.SLIDE_FORWARD, 2), expected_factor=2)
        push(Move(MoveKind.SIGN_FLIP, 3))

    for _ in range(3):
        push(Move(MoveKind.SLIDE_BACKWARD, 1))

    if current != CP2_NORMAL_FORM:
        raise CertificateError(f"Reduction of ({k}, {m}) ended at {current}, not the CP2 normal form")
    Logger.debug(f"({k}, {m}) reduced to the CP2 normal form in {len(moves)} moves")
    return ReductionTrace(start=start, moves=tuple(moves), end=current)


def expected_trace_length(k, m):
    """
    expected_trace_length - (2k+1) + (m-1) + 3
    """
    return (2 * k + 1) + (m - 1) + 3


# -----------------------------------------------------------------------------
# Certificate JSON
# -----------------------------------------------------------------------------
def triple_to_list(t):
    return [[str(c.p), str(c.q), str(c.delta)] for c in t.components]


def triple_from_list(data):
    if not isinstance(data, list) or len(data) != 3:
        raise CertificateError(f"A triple must be a list of 3 components, got {data!r}")
    try:
        return CurveTriple.of(*(tuple(int(v) for v in item) for item in data))
    except (TypeError, ValueError) as e:
        raise CertificateError(f"Malformed triple {data!r}: {e}")


def trace_to_dict(trace, k, m):
    """
    trace_to_dict - {"k", "m", "start", "moves", "end"} with integers as decimal strings
    """
    return {
        "k": str(k),
        "m": str(m),
        "start": triple_to_list(trace.start),
        "moves": [{"kind": move.kind.value, "pos": str(move.position)} for move in trace.moves],
        "end": triple_to_list(trace.end),
    }


def trace_from_dict(data):
    """
    trace_from_dict - parse a certificate dict
    :return: (k, m, ReductionTrace)
    """
    if not isinstance(data, dict):
        raise CertificateError(f"A certificate must be a JSON object, got {type(data).__name__}")
    missing = {"k", "m", "start", "moves", "end"} - set(data)
    if missing:
        raise CertificateError(f"Certificate is missing {sorted(missing)}")
    try:
        k, m = int(data["k"]), int(data["m"])
        moves = tuple(Move(MoveKind(item["kind"]), int(item["pos"])) for item in data["moves"])
    except (TypeError, ValueError, KeyError) as e:
        raise CertificateError(f"Malformed certificate: {e}")
    return k, m, ReductionTrace(start=triple_from_list(data["start"]), moves=moves, end=triple_from_list(data["end"]))
