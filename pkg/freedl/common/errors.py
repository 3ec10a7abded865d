######################################################################
# Copyright 2025 The freedl Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
######################################################################
"""
Reasoner Exceptions

All errors raised by the reasoning modules derive from ReasonerError
"""


class ReasonerError(Exception):
    """Base class for every error raised by the reasoner"""


class ParseError(ReasonerError):
    """Used when ontology, concept or listing text cannot be parsed"""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}" if line else message)


class DialectError(ReasonerError):
    """Used when a construct is not allowed in the requested dialect"""


class InterpretationError(ReasonerError):
    """Used when an interpretation is malformed"""


class ShapeError(ReasonerError):
    """Used when input is not in the normal form an operation requires"""


class ResourceExceeded(ReasonerError):
    """Used when a configured budget is exhausted before a verdict"""


class UndecidedRegime(ReasonerError):
    """Used when the question falls into a case with no known decision procedure"""
