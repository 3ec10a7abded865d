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
Reasoner Steps

Steps file for reasoner.feature, driving the REST API through the
Flask test client
"""
from compare3 import expect
from behave import given, when, then  # pylint: disable=no-name-in-module


@given("the ontology")
def step_impl(context):
    """Sets the ontology text posted with every request"""
    context.body["ontology"] = context.text


@given('the field "{field}" set to "{value}"')
def step_impl(context, field, value):
    context.body[field] = value


@when('I visit "{url}"')
def step_impl(context, url):
    context.resp = context.client.get(url)


@when('I post to "{url}"')
def step_impl(context, url):
    context.resp = context.client.post(url, json=context.body)


@then("the status code should be {code:d}")
def step_impl(context, code):
    expect(context.resp.status_code).equal_to(code)


@then('I should see "{name}" as the name')
def step_impl(context, name):
    expect(context.resp.get_json()["name"]).equal_to(name)


@then('the verdict should be "{verdict}"')
def step_impl(context, verdict):
    expect(context.resp.status_code).equal_to(200)
    expect(context.resp.get_json()["verdict"]).equal_to(verdict == "true")


@then('the witness should have "{member}"')
def step_impl(context, member):
    expect(member in context.resp.get_json()["witness"]).equal_to(True)
