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
# Name:        module_output.py
# Purpose:     Rendering and writing of the reports
#
# Created:     02/03/2025
# -----------------------------------------------------------------------------
import json

import pandas as pd
from filelock import FileLock

from .cli.module_log import Logger
from .utils import filesystem


# Columns of the table report, in order
TABLE_COLUMNS = [
    'k', 'm', 'p', 'q', 'lens_p', 'lens_q', 'smooth', 'symplectic', 'markov',
    'divides_q2_plus_9', 'trace_length', 'status',
]


def to_json(report):
    """
    to_json - deterministic JSON: sorted keys, 2 spaces indentation
    """
    return json.dumps(report, sort_keys=True, indent=2)


def to_dataframe(report):
    """
    to_dataframe - the tabular view of a report.

    Reports with a "rows" list become one line per row; any other report is
    flattened to (key, value) pairs.
    """
    if 'rows' in report:
        columns = report.get('columns', None) or sorted({key for row in report['rows'] for key in row})
        return pd.DataFrame(report['rows'], columns=columns)
    flat = pd.json_normalize(report, sep='.')
    return pd.DataFrame({'key': flat.columns, 'value': [str(v) for v in flat.iloc[0]]})


def render(report, fmt='json'):
    """
    render - the report as json, csv or text
    """
    if fmt == 'json':
        return to_json(report) + "\n"
    df = to_dataframe(report)
    if fmt == 'csv':
        return df.to_csv(index=False, lineterminator="\n")
    if df.empty:
        return "  ".join(df.columns) + "\n"
    return df.to_string(index=False) + "\n"


def write_output(text, filename):
    """
    write_output - write the rendered report under a lock on filename.lock
    """
    filesystem.mkdirs(filename)
    with FileLock(f"{filename}.lock"):
        with open(filename, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
    Logger.info(f"Report written to {filename}")
    return filename
