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
# Name:        main.py
# Purpose:     Command line interface of rhb-certifier
#
# Created:     02/03/2025
# -----------------------------------------------------------------------------
import sys
import click
import pprint
import traceback

from .utils.module_prologo import prologo, epilogo
from .utils.status_exception import StatusException
from .cli.module_log import Logger
from .calculus.exceptions import CalculusException
from . import module_args, module_reports, module_output


def common_options(f):
    """
    common_options - options shared by every command
    """
    options = [
        click.option('--format', 'fmt', type=click.STRING, required=False, default='json',
                     help="Output format: json (default), csv or text."),
        click.option('--out', type=click.STRING, required=False, default=None,
                     help="Write the report to this file instead of stdout."),
        click.option('--version', is_flag=True, required=False, default=False,
                     help="Show the version of the package."),
        click.option('--debug', is_flag=True, required=False, default=False,
                     help="Debug mode."),
        click.option('--verbose', is_flag=True, required=False, default=False,
                     help="Print some words more about what is doing."),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def km_options(f):
    f = click.option('--m', type=click.INT, required=False, default=None, help="The odd parameter m >= 1.")(f)
    f = click.option('--k', type=click.INT, required=False, default=None, help="The parameter k >= -1.")(f)
    return f


@click.group(invoke_without_command=True)
@click.option('--version', is_flag=True, required=False, default=False,
              help="Show the version of the package.")
@click.pass_context
def main_click(ctx, version):
    """
    RHB Certifier - Command Line Interface

    Exact certificates for the rational homology balls B(s_{k,m}) in CP2.

    Some example usage:
    rhb-certifier verify --k 0 --m 3
    rhb-certifier table --k-range 0:2 --m-range 1:3 --format csv
    rhb-certifier trace --k 1 --m 5 --out certs/k1_m5.json
    rhb-certifier verify-trace --file certs/k1_m5.json
    rhb-certifier identities --l-max 50
    rhb-certifier markov --depth 3
    """
    if ctx.invoked_subcommand is None:
        if version:
            prologo(version, False, False)
        click.echo(ctx.get_help())


def run_click(command, **kwargs):
    """
    run_click - run a command, print or write its report and exit with its status code
    """
    output = main_python(command, **kwargs)
    Logger.debug(pprint.pformat(output))

    if output['status'] in (StatusException.OK, StatusException.FAILED):
        if kwargs.get('out', None) is None:
            click.echo(module_output.render(output['body'], output['fmt']), nl=False)
    else:
        click.echo(module_output.to_json(output['body']), err=True)
    sys.exit(StatusException.exit_code(output['status']))


@main_click.command('verify')
@km_options
@common_options
def verify_click(**kwargs):
    """
    Reduction certificate, boundary, blow-downs and embedding verdict for one (k, m).
    """
    run_click('verify', **kwargs)


@main_click.command('table')
@km_options
@click.option('--k-range', 'k_range', type=click.STRING, required=False, default=None,
              help="Range of k as A:B (inclusive).")
@click.option('--m-range', 'm_range', type=click.STRING, required=False, default=None,
              help="Range of odd m as A:B (inclusive, step 2).")
@click.option('--jobs', type=click.INT, required=False, default=1,
              help="Number of worker processes. Default is 1.")
@common_options
def table_click(**kwargs):
    """
    One row per (k, m) of the grid: boundary, lens space, verdicts and trace length.
    """
    run_click('table', **kwargs)


@main_click.command('trace')
@km_options
@common_options
def trace_click(**kwargs):
    """
    Emit the reduction certificate of (k, m) as JSON.
    """
    run_click('trace', **kwargs)


@main_click.command('verify-trace')
@click.option('--file', type=click.STRING, required=False, default=None,
              help="The certificate file to replay.")
@common_options
def verify_trace_click(**kwargs):
    """
    Replay a certificate and check that it ends at the CP2 normal form.
    """
    run_click('verify-trace', **kwargs)


@main_click.command('identities')
@click.option('--l-max', 'l_max', type=click.INT, required=False, default=50,
              help="Check the identities for 0 <= l <= L_MAX. Default is 50.")
@common_options
def identities_click(**kwargs):
    """
    Check the identities between the polynomial sequences P, Q, S, T.
    """
    run_click('identities', **kwargs)


@main_click.command('markov')
@click.option('--depth', type=click.INT, required=False, default=3,
              help="Number of mutations from (1,1,1). Default is 3.")
@common_options
def markov_click(**kwargs):
    """
    Enumerate the Markov triples and their q candidates.
    """
    run_click('markov', **kwargs)


def main_python(
    command,

    # --- Specific options ---

    k = None,
    m = None,
    k_range = None,
    m_range = None,
    jobs = 1,
    file = None,
    l_max = None,
    depth = None,

    # --- Common options ---

    fmt = 'json',
    out = None,
    version = False,
    debug = False,
    verbose = False
):
    """
    main_python - main function
    :return: {"status": ..., "body": ..., "fmt": ...}
    """

    # DOC: -- Init logger + cli settings + handle version and debug ------------
    t0 = prologo(version, verbose, debug)

    try:

        # DOC: -- Arguments validation ---------------------------------------------
        kwargs = {
            'command': command,
            'k': k,
            'm': m,
            'k_range': k_range,
            'm_range': m_range,
            'jobs': jobs,
            'file': file,
            'l_max': l_max,
            'depth': depth,
            'fmt': fmt,
            'out': out,
        }
        args = module_args.args_validation(**kwargs)
        fmt = args['fmt']

        # DOC: -- Main logic. Do work here -----------------------------------------
        status, body = module_reports.COMMANDS[command](args)

        if args['out'] is not None:
            module_output.write_output(module_output.render(body, fmt), args['out'])

        # DOC: -- Return the response ----------------------------------------------
        result = {
            "status": status,
            "body": body
        }

    except StatusException as e:
        result = {
            "status": e.status,
            "body": {"error": e.message}
        }
    except CalculusException as e:
        # InvalidInputError is a ValueError: a precondition, i.e. a usage error
        result = {
            "status": StatusException.INVALID if isinstance(e, ValueError) else StatusException.FAILED,
            "body": {
                "error": str(e),
                ** ({"traceback": traceback.format_exc()} if debug else dict())
            }
        }
    except ValueError as e:
        result = {
            "status": StatusException.INVALID,
            "body": {
                "error": str(e),
                ** ({"traceback": traceback.format_exc()} if debug else dict())
            }
        }
    except Exception as e:
        result = {
            "status": StatusException.ERROR,
            "body": {
                "error": str(e),
                ** ({"traceback": traceback.format_exc()} if debug else dict())
            }
        }

    result['fmt'] = fmt if fmt in module_args.FORMATS else 'json'

    epilogo(t0, command)

    return result
