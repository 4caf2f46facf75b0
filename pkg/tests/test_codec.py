# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

import json

import pytest

from shared.automata import CodecError
from shared.automata.codec import dump_json, dump_text, dumps, load_json, load_text, loads

A_STAR_TEXT = """alphabet: a b
states: 2
initial: 0
accepting: 0
delta: 0 a 0
delta: 0 b 1
delta: 1 a 1
delta: 1 b 1
"""


def test_text_layout(a_star):
    assert dump_text(a_star) == A_STAR_TEXT


def test_text_load(a_star):
    assert load_text(A_STAR_TEXT) == a_star


def test_empty_accepting_line(empty):
    text = dump_text(empty)
    assert "accepting:\n" in text
    assert load_text(text) == empty


def test_missing_transition():
    text = A_STAR_TEXT.replace("delta: 1 b 1\n", "")
    with pytest.raises(CodecError, match="missing transition"):
        load_text(text)


def test_duplicate_transition_reports_line():
    text = A_STAR_TEXT + "delta: 1 b 0\n"
    with pytest.raises(CodecError) as info:
        load_text(text)
    assert info.value.line == 9


def test_bad_header():
    with pytest.raises(CodecError) as info:
        load_text(A_STAR_TEXT.replace("states: 2", "size: 2"))
    assert info.value.line == 2


def test_unknown_symbol():
    with pytest.raises(CodecError, match="not in alphabet"):
        load_text(A_STAR_TEXT.replace("delta: 1 b 1", "delta: 1 c 1"))


def test_json_mirror(a_star):
    document = json.loads(dump_json(a_star))
    assert document["alphabet"] == ["a", "b"]
    assert document["states"] == 2
    assert document["delta"][1] == [0, "b", 1]
    assert load_json(dump_json(a_star)) == a_star


def test_json_rejects_bad_states():
    with pytest.raises(CodecError):
        load_json('{"alphabet": ["a"], "states": 0, "initial": 0}')


def test_loads_detects_format(example):
    assert loads(dumps(example, "json")) == example
    assert loads(dumps(example, "text")) == example


def test_dumps_rejects_unknown_format(example):
    with pytest.raises(ValueError):
        dumps(example, "xml")
