# coding: utf8
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
Status codes used by the reasoner

HTTP codes returned by the REST surface and the exit codes of the
``freedl`` console script.
"""

# Successful - 2xx
HTTP_200_OK = 200

# Client Error - 4xx
HTTP_400_BAD_REQUEST = 400
HTTP_404_NOT_FOUND = 404
HTTP_405_METHOD_NOT_ALLOWED = 405
HTTP_415_UNSUPPORTED_MEDIA_TYPE = 415
HTTP_422_UNPROCESSABLE_ENTITY = 422

# Server Error - 5xx
HTTP_500_INTERNAL_SERVER_ERROR = 500

# Console script exit codes
EXIT_POSITIVE = 0  # sat / entailed / exists / bisimilar / model
EXIT_NEGATIVE = 1  # the negative verdict
EXIT_ERROR = 2  # parse, dialect or input errors
EXIT_RESOURCE = 3  # budget exceeded or undecided regime
