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
Module: error_handlers

Every error reply is a JSON object with status, error and message members.
Reasoner errors raised by the engines are mapped here, so routes let them
propagate.
"""
import logging

from flask import jsonify
from flask import current_app as app  # Import Flask application
from freedl.common import status
from freedl.common.errors import (
    DialectError,
    InterpretationError,
    ParseError,
    ResourceExceeded,
    ShapeError,
    UndecidedRegime,
)


def error_reply(code: int, label: str, error, level: int = logging.WARNING):
    """Logs the error and builds its JSON reply"""
    message = str(error)
    app.logger.log(level, message)
    return jsonify(status=code, error=label, message=message), code


######################################################################
# Reasoner Errors
######################################################################
@app.errorhandler(ParseError)
@app.errorhandler(DialectError)
@app.errorhandler(InterpretationError)
@app.errorhandler(ShapeError)
def request_validation_error(error):
    """Handles malformed ontologies, concepts and interpretations"""
    return error_reply(status.HTTP_400_BAD_REQUEST, type(error).__name__, error)


@app.errorhandler(ResourceExceeded)
@app.errorhandler(UndecidedRegime)
def reasoning_not_completed(error):
    """Handles budget exhaustion and undecided questions with 422_UNPROCESSABLE_ENTITY"""
    return error_reply(status.HTTP_422_UNPROCESSABLE_ENTITY, type(error).__name__, error)


######################################################################
# HTTP Errors
######################################################################
@app.errorhandler(status.HTTP_400_BAD_REQUEST)
def bad_request(error):
    """Handles bad requests with 400_BAD_REQUEST"""
    return error_reply(status.HTTP_400_BAD_REQUEST, "Bad Request", error.description)


@app.errorhandler(status.HTTP_404_NOT_FOUND)
def not_found(error):
    """Handles unknown endpoints with 404_NOT_FOUND"""
    return error_reply(status.HTTP_404_NOT_FOUND, "Not Found", error.description)


@app.errorhandler(status.HTTP_405_METHOD_NOT_ALLOWED)
def method_not_supported(error):
    """Handles unsupported HTTP methods with 405_METHOD_NOT_SUPPORTED"""
    return error_reply(status.HTTP_405_METHOD_NOT_ALLOWED, "Method not Allowed", error.description)


@app.errorhandler(status.HTTP_415_UNSUPPORTED_MEDIA_TYPE)
def mediatype_not_supported(error):
    """Handles requests that are not JSON with 415_UNSUPPORTED_MEDIA_TYPE"""
    return error_reply(status.HTTP_415_UNSUPPORTED_MEDIA_TYPE, "Unsupported media type", error.description)


@app.errorhandler(status.HTTP_500_INTERNAL_SERVER_ERROR)
def internal_server_error(error):
    """Handles unexpected server error with 500_SERVER_ERROR"""
    return error_reply(status.HTTP_500_INTERNAL_SERVER_ERROR, "Internal Server Error", error, logging.ERROR)
