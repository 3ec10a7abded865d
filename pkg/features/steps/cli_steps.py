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

# pylint: disable=function-redefined, missing-function-docstring
# flake8: noqa
"""
CLI Steps

Steps file for cli.feature. Arguments naming a file written by an
earlier step are resolved inside the scenario's scratch directory.
"""
import shlex
from pathlib import Path

from compare3 import expect
from behave import given, when, then  # pylint: disable=no-name-in-module

from freedl.cli import cli


@given('the ontology file "{filename}"')
def step_impl(context, filename):
    (Path(context.workdir.name) / filename).write_text(context.text + "\n", encoding="utf-8")


@when('I run "{command}"')
def step_impl(context, command):
    scratch = Path(context.workdir.name)
    args = [str(scratch / arg) if (scratch / arg).is_file() else arg for arg in shlex.split(command)]
    context.result = context.runner.invoke(cli, args)


@then("the exit code should be {code:d}")
def step_impl(context, code):
    expect(context.result.exit_code).equal_to(code)


@then('I should see "{text}" in the output')
def step_impl(context, text):
    expect(text in context.result.output).equal_to(True)
