# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

import pytest

from config.analysis_config import reset_analysis_config
from shared.automata import Alphabet, empty_language, parse_regex, universal_language
from services.witnesses import example_language


@pytest.fixture(autouse=True)
def fresh_config():
    reset_analysis_config()
    yield
    reset_analysis_config()


@pytest.fixture
def ab():
    return Alphabet.of("ab")


@pytest.fixture
def example():
    """a^* + a^*bb^* + a^*bb^*aa^* + a^*bb^*aa^*bb^*"""
    return example_language()


@pytest.fixture
def a_star(ab):
    return parse_regex("a^*", ab)


@pytest.fixture
def even_a():
    return parse_regex("(aa)^*", Alphabet.of("a"))


@pytest.fixture
def empty():
    return empty_language(Alphabet.of("a"))


@pytest.fixture
def sigma_star(ab):
    return universal_language(ab)
