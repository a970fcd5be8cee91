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
# Name:        module_reports.py
# Purpose:     The command pipelines behind the command line
#
# Created:     02/03/2025
# -----------------------------------------------------------------------------
import json
from concurrent.futures import ProcessPoolExecutor

from .cli.module_log import Logger
from .cli.module_version import get_version
from .utils.status_exception import StatusException
from .module_output import TABLE_COLUMNS
from .calculus.exceptions import CalculusException, CertificateError
from .calculus.strings_fractions import make_s, make_s_prime, make_s_doubleprime, blows_down_to_zero
from .calculus.sl2z_calculus import string_product, lens_from_string, lens_of_form_p2_pq_minus_1
from .calculus.polyseq import IDENTITIES, verify_identity
from .calculus.slide_engine import (
    FramedCurve, CurveTriple, MoveKind, slide_F, slide_F_inverse, tau, starting_triple, reduce_to_cp2,
    verify_trace, is_cp2_normal_form, expected_trace_length, trace_to_dict, trace_from_dict,
)
from .calculus.obstruction import (
    boundary_pq, q2_plus_9_identity_check, verify_fibonacci_case, symplectic_verdict,
    markov_tree, markov_q_candidates, divides_q2_plus_9,
)


class CheckList:
    """
    Named boolean checks; an exception raised by a check is recorded as its
    failure locus instead of aborting the pipeline.
    """

    def __init__(self):
        self.results = dict()
        self.failures = []

    def run(self, name, check):
        try:
            ok = bool(check())
            error = None if ok else "check returned false"
        except CalculusException as e:
            ok, error = False, str(e)
        self.results[name] = "pass" if ok else "fail"
        if not ok:
            self.failures.append({"check": name, "error": error})
            Logger.warning(f"Check {name} failed: {error}")
        return ok

    @property
    def status(self):
        return StatusException.FAILED if self.failures else StatusException.OK

    def to_dict(self):
        return {"checks": dict(self.results), "failures": list(self.failures)}


def _header(command, status):
    return {"command": command, "version": get_version(), "status": status}


def _s1xs2(s):
    column = string_product(s).first_column()
    return blows_down_to_zero(s).reduced and lens_from_string(s).is_s1xs2() and column.x == 0 and abs(column.y) == 1


# -----------------------------------------------------------------------------
# verify
# -----------------------------------------------------------------------------
def cmd_verify(k, m):
    """
    cmd_verify - every check of the pipeline for one (k, m)
    :return: (status, report)
    """
    checks = CheckList()
    state = dict()

    if k >= 0:
        checks.run("starting_triple", lambda: starting_triple(k, m) is not None)

        def reduction():
            state['trace'] = reduce_to_cp2(k, m)
            verify_trace(state['trace'])
            return is_cp2_normal_form(state['trace'].end) and len(state['trace'].moves) == expected_trace_length(k, m)

        checks.run("reduction", reduction)

    def boundary():
        state['pq'] = boundary_pq(k, m)
        return True

    def lens_form():
        p, q = state['pq']
        return lens_of_form_p2_pq_minus_1(lens_from_string(make_s(k, m))) == (p, min(q, p - q))

    def verdict():
        state['verdict'] = v = symplectic_verdict(k, m)
        if k == -1:
            return v.symplectic == "yes" and v.divides_q2_plus_9
        return v.symplectic == "obstructed" and not v.divides_q2_plus_9

    if checks.run("boundary", boundary):
        checks.run("lens_form", lens_form)
    checks.run("s_prime_blows_down", lambda: _s1xs2(make_s_prime(k, m)))
    checks.run("s_doubleprime_blows_down", lambda: _s1xs2(make_s_doubleprime(k, m)))
    checks.run("q2_plus_9_identity", lambda: q2_plus_9_identity_check(k, m))
    if m == 1:
        checks.run("fibonacci", lambda: verify_fibonacci_case(k))
    checks.run("verdict", verdict)

    trace = state.get('trace', None)
    report = {
        **_header("verify", checks.status),
        **checks.to_dict(),
        "k": str(k),
        "m": str(m),
        "verdict": state['verdict'].to_dict() if 'verdict' in state else None,
        "certificate": trace_to_dict(trace, k, m) if trace is not None else None,
        "trace_length": str(len(trace.moves)) if trace is not None else "0",
    }
    return checks.status, report


# -----------------------------------------------------------------------------
# table
# -----------------------------------------------------------------------------
def table_row(cell):
    """
    table_row - one row of the table report; errors are written in the status column
    """
    k, m = cell
    row = {column: "" for column in TABLE_COLUMNS}
    row.update(k=str(k), m=str(m))
    try:
        v = symplectic_verdict(k, m)
        row.update(
            p=str(v.p), q=str(v.q), lens_p=str(v.lens.p), lens_q=str(v.lens.q),
            smooth="yes" if v.smooth else "no", symplectic=v.symplectic, markov=v.markov.value,
            divides_q2_plus_9=str(v.divides_q2_plus_9).lower(),
        )
        trace_length = 0
        if k >= 0:
            trace = reduce_to_cp2(k, m)
            verify_trace(trace)
            trace_length = len(trace.moves)
        row.update(trace_length=str(trace_length), status=StatusException.OK)
    except CalculusException as e:
        Logger.error(f"Row ({k}, {m}) failed: {e}")
        row['status'] = f"{StatusException.ERROR}: {e}"
    return row


def cmd_table(grid, jobs=1):
    """
    cmd_table - one row per (k, m) of the grid, in (k, m) lexicographic order
    """
    if jobs > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            rows = list(executor.map(table_row, grid))
    else:
        rows = [table_row(cell) for cell in grid]
    status = StatusException.OK if all(row['status'] == StatusException.OK for row in rows) else StatusException.FAILED
    Logger.info(f"Table of {len(rows)} rows: {status}")
    return status, {**_header("table", status), "columns": list(TABLE_COLUMNS), "rows": rows}


# -----------------------------------------------------------------------------
# trace / verify-trace
# -----------------------------------------------------------------------------
def cmd_trace(k, m):
    """
    cmd_trace - the reduction certificate of (k, m)
    """
    trace = reduce_to_cp2(k, m)
    return StatusException.OK, trace_to_dict(trace, k, m)


def replay_independently(trace):
    """
    replay_independently - replay a certificate with nothing but the slide primitives
    """
    curves = list(trace.start.components)
    for move in trace.moves:
        i = move.position - 1
        if move.kind == MoveKind.SIGN_FLIP:
            curves[i] = FramedCurve(-curves[i].p, -curves[i].q, curves[i].delta)
        else:
            slide = slide_F if move.kind == MoveKind.SLIDE_FORWARD else slide_F_inverse
            curves[i], curves[i + 1] = slide(curves[i], curves[i + 1])
    return CurveTriple(*curves)


def cmd_verify_trace(file):
    """
    cmd_verify_trace - load a certificate and check it by independent replay
    """
    try:
        with open(file, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise CertificateError(f"{file} is not valid JSON: {e}")
    k, m, trace = trace_from_dict(data)

    checks = CheckList()
    state = dict()

    def replay():
        state['end'] = replay_independently(trace)
        return state['end'] == trace.end

    if checks.run("length", lambda: len(trace.moves) == expected_trace_length(k, m)):
        checks.run("start", lambda: trace.start == tau(2 * k, m))
        if checks.run("replay", replay):
            checks.run("normal_form", lambda: is_cp2_normal_form(state['end']))
    report = {
        **_header("verify-trace", checks.status),
        **checks.to_dict(),
        "k": str(k),
        "m": str(m),
        "moves": str(len(trace.moves)),
    }
    return checks.status, report


# -----------------------------------------------------------------------------
# identities / markov
# -----------------------------------------------------------------------------
def cmd_identities(l_max):
    """
    cmd_identities - check the seven identities between P, Q, S, T for 0 <= l <= l_max
    """
    rows = [
        {"identity": str(i), "statement": statement, "l_max": str(l_max), "holds": str(verify_identity(i, l_max)).lower()}
        for i, (statement, _) in sorted(IDENTITIES.items())
    ]
    status = StatusException.OK if all(row['holds'] == "true" for row in rows) else StatusException.FAILED
    return status, {**_header("identities", status), "columns": ["identity", "statement", "l_max", "holds"], "rows": rows}


def cmd_markov(depth):
    """
    cmd_markov - the Markov triples within depth mutations of (1,1,1), sorted
    """
    rows, consistent = [], True
    for t in sorted(markov_tree(depth)):
        candidates = markov_q_candidates(t)
        for p, qs in zip(t.as_tuple(), candidates):
            consistent &= all(divides_q2_plus_9(p, q) for q in qs)
        rows.append({
            "p1": str(t.p1), "p2": str(t.p2), "p3": str(t.p3),
            **{f"q{i}": " ".join(str(q) for q in sorted(qs)) for i, qs in enumerate(candidates, start=1)},
        })
    status = StatusException.OK if consistent else StatusException.FAILED
    return status, {
        **_header("markov", status),
        "depth": str(depth),
        "columns": ["p1", "p2", "p3", "q1", "q2", "q3"],
        "rows": rows,
    }


COMMANDS = {
    'verify': lambda args: cmd_verify(args['k'], args['m']),
    'table': lambda args: cmd_table(args['grid'], args['jobs']),
    'trace': lambda args: cmd_trace(args['k'], args['m']),
    'verify-trace': lambda args: cmd_verify_trace(args['file']),
    'identities': lambda args: cmd_identities(args['l_max']),
    'markov': lambda args: cmd_markov(args['depth']),
}
