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
# Name:        module_prologo.py
# Purpose:     
#
# Created:     02/03/2025
# -----------------------------------------------------------------------------

import sys
from ..cli.module_log import Logger, set_log_debug, set_log_info, reset_log_level
from ..cli.module_version import get_version
from ..cli.module_logo import logo
from .filesystem import now, total_seconds_from


def prologo(version, verbose, debug):
    """
    prologo - init logger and handle version
    """
    t = now()

    if verbose:
        set_log_info()
    if debug:
        set_log_debug()

    if debug:
        print(logo(), file=sys.stderr)

    if version:
        print(f"Version: {get_version()}")
        sys.exit(0)

    Logger.debug("Starting job...")
    return t


def epilogo(t, command):
    """
    epilogo - log the wall time of the job and restore the initial log level
    """
    Logger.info(f"{command} completed in {total_seconds_from(t):.2f}s.")
    reset_log_level()
