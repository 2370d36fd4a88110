###
# Copyright 2026-present The galepoly Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
###
"""Pytest configuration shared by all test files."""

import pathlib

import pytest


@pytest.fixture(autouse=True)
def run_in_tests_directory(monkeypatch: pytest.MonkeyPatch) -> None:
    """Run each test from the tests directory, as tox does with changedir = tests."""
    monkeypatch.chdir(pathlib.Path(__file__).parent)
