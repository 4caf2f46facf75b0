# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
DFA text format and its JSON mirror.

Text format (UTF-8, one item per line):
    alphabet: a b
    states: 2
    initial: 0
    accepting: 0
    delta: 0 a 0
    delta: 0 b 1
    ...

Every (state, symbol) pair appears exactly once, sorted by state and then
by alphabet order, so equal automata serialize to identical bytes.
"""

import logging
from typing import Dict, List, Tuple

from pydantic import ValidationError

from shared.automata.dfa import Alphabet, Dfa
from shared.automata.errors import AutomatonInputError, CodecError
from shared.schemas.automaton import DfaDocument

logger = logging.getLogger(__name__)

_HEADER = ("alphabet", "states", "initial", "accepting")


def dump_text(d: Dfa) -> str:
    lines = [
        "alphabet: " + " ".join(d.alphabet),
        f"states: {d.n_states}",
        f"initial: {d.initial}",
        " ".join(["accepting:"] + [str(q) for q in sorted(d.accepting)]),
    ]
    for q, row in enumerate(d.delta):
        for symbol, target in zip(d.alphabet, row):
            lines.append(f"delta: {q} {symbol} {target}")
    return "\n".join(lines) + "\n"


def _header_value(line: str, key: str, number: int) -> str:
    prefix, sep, rest = line.partition(":")
    if not sep or prefix.strip() != key:
        raise CodecError(f"expected '{key}:'", number)
    return rest.strip()


def _int(text: str, number: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise CodecError(f"expected an integer, got {text!r}", number) from None


def load_text(text: str) -> Dfa:
    """
    Parse the line-oriented DFA format.

    Raises:
        CodecError: On missing header lines, bad integers, unknown symbols,
            or duplicate/missing delta entries
    """
    lines = [(i + 1, line) for i, line in enumerate(text.splitlines()) if line.strip()]
    if len(lines) < len(_HEADER):
        raise CodecError("truncated DFA file: header needs four lines")

    values = {key: _header_value(line, key, number) for key, (number, line) in zip(_HEADER, lines)}
    try:
        sigma = Alphabet.of(values["alphabet"].split())
    except AutomatonInputError as e:
        raise CodecError(str(e), lines[0][0]) from None
    n = _int(values["states"], lines[1][0])
    initial = _int(values["initial"], lines[2][0])
    accepting = frozenset(_int(v, lines[3][0]) for v in values["accepting"].split())

    table: Dict[Tuple[int, str], int] = {}
    for number, line in lines[len(_HEADER):]:
        fields = _header_value(line, "delta", number).split()
        if len(fields) != 3:
            raise CodecError("delta line needs 'q symbol q2'", number)
        q, symbol, target = _int(fields[0], number), fields[1], _int(fields[2], number)
        if symbol not in sigma:
            raise CodecError(f"symbol {symbol!r} not in alphabet", number)
        if (q, symbol) in table:
            raise CodecError(f"duplicate transition for ({q}, {symbol})", number)
        table[(q, symbol)] = target
    return _build(sigma, n, initial, accepting, table)


def _build(sigma: Alphabet, n: int, initial: int, accepting, table: Dict[Tuple[int, str], int]) -> Dfa:
    if n < 1:
        raise CodecError("a DFA needs at least one state")
    rows: List[Tuple[int, ...]] = []
    for q in range(n):
        row = []
        for symbol in sigma:
            if (q, symbol) not in table:
                raise CodecError(f"missing transition for ({q}, {symbol})")
            row.append(table[(q, symbol)])
        rows.append(tuple(row))
    if len(table) != n * len(sigma):
        raise CodecError("transition for a state outside the declared range")
    try:
        return Dfa(sigma, tuple(rows), initial, frozenset(accepting))
    except AutomatonInputError as e:
        raise CodecError(str(e)) from None


def to_document(d: Dfa) -> DfaDocument:
    return DfaDocument(
        alphabet=list(d.alphabet),
        states=d.n_states,
        initial=d.initial,
        accepting=sorted(d.accepting),
        delta=[
            (q, symbol, target)
            for q, row in enumerate(d.delta)
            for symbol, target in zip(d.alphabet, row)
        ],
    )


def dump_json(d: Dfa) -> str:
    return to_document(d).model_dump_json()


def load_json(text: str) -> Dfa:
    try:
        document = DfaDocument.model_validate_json(text)
    except ValidationError as e:
        raise CodecError(f"invalid DFA document: {e.errors()[0]['msg']}") from None
    try:
        sigma = Alphabet.of(document.alphabet)
    except AutomatonInputError as e:
        raise CodecError(str(e)) from None
    table: Dict[Tuple[int, str], int] = {}
    for q, symbol, target in document.delta:
        if symbol not in sigma:
            raise CodecError(f"symbol {symbol!r} not in alphabet")
        if (q, symbol) in table:
            raise CodecError(f"duplicate transition for ({q}, {symbol})")
        table[(q, symbol)] = target
    return _build(sigma, document.states, document.initial, document.accepting, table)


def loads(text: str) -> Dfa:
    """Read either format; JSON is recognised by a leading '{'"""
    if text.lstrip().startswith("{"):
        return load_json(text)
    return load_text(text)


def dumps(d: Dfa, fmt: str = "text") -> str:
    if fmt == "json":
        return dump_json(d) + "\n"
    if fmt == "text":
        return dump_text(d)
    raise ValueError(f"unknown DFA format {fmt!r}")
