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
# Name:        __init__.py
# Purpose:     Exact calculus behind the certificates
#
# Created:     02/03/2025
# -----------------------------------------------------------------------------

from .exceptions import *
from .strings_fractions import (
    PlumbingString, parse_string, make_s, make_s_prime, make_s_doubleprime, owens_string,
    hj_evaluate, hj_expand, riemenschneider_dual, blow_down_once, blows_down_to_zero,
    blows_down_to_zero_exhaustive,
)
from .sl2z_calculus import (
    Vec2, Mat2, LensSpace, matrix_A, string_product, meridian_coords, lens_from_string,
    lens_equivalent, lens_of_form_p2_pq_minus_1,
)
from .polyseq import IntPoly, seq_P, seq_Q, seq_S, seq_T, seq_P_at, seq_Q_at, eval_at, matrix_C, matrix_M, verify_identity
from .slide_engine import (
    FramedCurve, CurveTriple, Move, MoveKind, ReductionTrace, slide_F, slide_F_inverse, flip_sign,
    tau, starting_triple, reduce_to_cp2, is_cp2_normal_form, replay, verify_trace,
)
from .obstruction import (
    MarkovTriple, MarkovMembership, EmbeddingVerdict, boundary_pq, divides_q2_plus_9,
    q2_plus_9_identity_check, markov_tree, is_markov_number, markov_q_candidates,
    odd_fibonacci, verify_fibonacci_case, symplectic_verdict,
)
