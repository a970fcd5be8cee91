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
# Name:        module_args.py
# Purpose:     Validation of the command line arguments
#
# Created:     02/03/2025
# -----------------------------------------------------------------------------
import os

from .cli.module_log import Logger
from .utils.strings import is_integer, listify
from .utils import filesystem


FORMATS = ('json', 'csv', 'text')

MAX_DEPTH = 20


def parse_range(text, name):
    """
    parse_range - "A:B" -> (A, B); an empty range (A > B) is allowed
    """
    bounds = listify(text, sep=":", trim=True)
    if len(bounds) != 2 or not all(is_integer(b) for b in bounds):
        raise ValueError(f"{name} must be in the form A:B with integer bounds, got '{text}'.")
    return int(bounds[0]), int(bounds[1])


def _check_k(k, minimum=-1):
    if not isinstance(k, int) or k < minimum:
        raise ValueError(f"k must be an integer >= {minimum}, got {k}.")
    return k


def _check_m(m):
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be an integer >= 1, got {m}.")
    if m % 2 == 0:
        raise ValueError(f"m must be odd, got {m}.")
    return m


def args_validation(**kwargs):
    """
    Check and normalize the arguments of a command.
    :param kwargs: the raw options of the command line.
    :return: dict of validated arguments.
    """
    command = kwargs.get('command', None)

    args = dict()

    fmt = kwargs.get('fmt', None) or 'json'
    if not isinstance(fmt, str) or fmt.lower() not in FORMATS:
        raise ValueError(f"Format must be one of {', '.join(FORMATS)}, got '{fmt}'.")
    args['fmt'] = fmt.lower()

    out = kwargs.get('out', None)
    if out is not None:
        if not isinstance(out, str) or not out.strip():
            raise ValueError("Output file must be a non-empty path.")
        out = filesystem.normpath(out)
    args['out'] = out

    if command in ('verify', 'trace'):
        k, m = kwargs.get('k', None), kwargs.get('m', None)
        if k is None or m is None:
            raise ValueError(f"{command} needs both --k and --m.")
        # k = -1 is the conic complement: no slides, hence no certificate
        args['k'] = _check_k(k, minimum=-1 if command == 'verify' else 0)
        args['m'] = _check_m(m)

    elif command == 'table':
        k_range, m_range = kwargs.get('k_range', None), kwargs.get('m_range', None)
        k, m = kwargs.get('k', None), kwargs.get('m', None)
        if k_range is None and k is None:
            raise ValueError("table needs --k-range A:B (or --k).")
        if m_range is None and m is None:
            raise ValueError("table needs --m-range A:B (or --m).")
        k_min, k_max = parse_range(k_range, "--k-range") if k_range is not None else (k, k)
        m_min, m_max = parse_range(m_range, "--m-range") if m_range is not None else (m, m)
        _check_k(k_min)
        _check_m(m_min)
        if m_max % 2 == 0:
            raise ValueError(f"--m-range bounds must be odd, got {m_max}.")
        args['grid'] = [(k, m) for k in range(k_min, k_max + 1) for m in range(m_min, m_max + 1, 2)]

        jobs = kwargs.get('jobs', None) or 1
        if not isinstance(jobs, int) or jobs < 1:
            raise ValueError(f"--jobs must be a positive integer, got {jobs}.")
        args['jobs'] = min(jobs, os.cpu_count() or 1)

    elif command == 'verify-trace':
        filename = kwargs.get('file', None)
        if filename is None or not filesystem.isfile(filename):
            raise ValueError(f"Certificate file '{filename}' does not exist.")
        args['file'] = filename

    elif command == 'identities':
        l_max = kwargs.get('l_max', None)
        l_max = 50 if l_max is None else l_max
        if not isinstance(l_max, int) or l_max < 1:
            raise ValueError(f"--l-max must be a positive integer, got {l_max}.")
        args['l_max'] = l_max

    elif command == 'markov':
        depth = kwargs.get('depth', None)
        depth = 3 if depth is None else depth
        if not isinstance(depth, int) or not 0 <= depth <= MAX_DEPTH:
            raise ValueError(f"--depth must be an integer in [0, {MAX_DEPTH}], got {depth}.")
        args['depth'] = depth

    else:
        raise ValueError(f"Unknown command '{command}'.")

    Logger.debug(f"Validated arguments of {command}: {args}")
    return args
