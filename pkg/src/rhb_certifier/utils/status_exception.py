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
# Name:        status_exception.py
# Purpose:     
#
# Created:     02/03/2025
# -----------------------------------------------------------------------------


class StatusException(Exception):

    OK = 'OK'
    FAILED = 'FAILED'
    INVALID = 'INVALID'
    ERROR = 'ERROR'

    EXIT_CODES = {
        OK: 0,
        FAILED: 1,
        ERROR: 1,
        INVALID: 2,
    }

    def __init__(self, status, message):
        self.status = status
        self.message = message
        super().__init__(self.message)

    @classmethod
    def exit_code(cls, status):
        """
        exit_code - process exit code of a report status
        """
        return cls.EXIT_CODES.get(status, 1)
