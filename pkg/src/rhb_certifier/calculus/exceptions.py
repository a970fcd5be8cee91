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
# Name:        exceptions.py
# Purpose:     Errors raised by the calculus modules
#
# Created:     02/03/2025
# -----------------------------------------------------------------------------


class CalculusException(Exception):
    """Base exception for rhb-certifier computations."""

    def __init__(self, message):
        super().__init__(message)
        self.message = message

    def __str__(self):
        return f"{type(self).__name__}: {self.message}"


class InvalidInputError(CalculusException, ValueError):
    """An operation was called outside its preconditions."""


class DegenerateSlideError(CalculusException):
    """A slide produced a curve with coordinates (0, 0)."""


class ConsistencyError(CalculusException):
    """Two independent computation routes disagree."""


class CertificateError(CalculusException):
    """A reduction certificate could not be built or replayed."""
