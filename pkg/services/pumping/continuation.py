# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
Bad-continuation search.

Given the state `main` reached after a prefix (or window) and, for every
pump candidate c, the set T_c of states the pumped copies can be in, a bad
continuation is a word v accepted from main but rejected from at least one
state of every T_c. Such a v shows that no candidate pumps the prefix.

The search runs breadth-first over nodes (main, {R_c}) where R_c = T_c minus
main. A node is simplified before it is queued:
  - a set that meets a dead state is satisfied forever and is dropped;
  - a set that becomes empty kills the node (that candidate can no longer fail);
  - only inclusion-minimal sets are kept.
"""

import logging
from collections import deque
from typing import FrozenSet, Iterable, List, Optional, Tuple

from shared.automata.dfa import Dfa, Word, coaccessible_states
from shared.automata.errors import SearchBudgetExceeded

logger = logging.getLogger(__name__)

Node = Tuple[int, FrozenSet[FrozenSet[int]]]


def _normalize(main: int, sets: Iterable[FrozenSet[int]], live: FrozenSet[int]) -> Optional[Node]:
    reduced: List[FrozenSet[int]] = []
    for s in sets:
        s = s - {main}
        if not s:
            return None
        if not s <= live:
            continue
        reduced.append(s)
    minimal = [s for s in reduced if not any(other < s for other in reduced)]
    return main, frozenset(minimal)


def _is_bad(d: Dfa, node: Node) -> bool:
    main, sets = node
    return main in d.accepting and all(any(t not in d.accepting for t in s) for s in sets)


def find_bad_continuation(
    d: Dfa,
    main: int,
    candidate_sets: Iterable[FrozenSet[int]],
    node_budget: int,
) -> Optional[Word]:
    """
    Shortest, then alphabetically least, bad continuation.

    Args:
        d: Complete DFA
        main: State reached by the unpumped word
        candidate_sets: One state set T_c per pump candidate
        node_budget: Maximum number of search nodes

    Returns:
        The continuation word, or None when every continuation is pumped

    Raises:
        SearchBudgetExceeded: If more than node_budget nodes are discovered
    """
    live = coaccessible_states(d)
    if main not in live:
        return None
    start = _normalize(main, candidate_sets, live)
    if start is None:
        return None

    parent = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if _is_bad(d, node):
            return _word_to(parent, node)
        current, sets = node
        for column, symbol in enumerate(d.alphabet):
            target = d.delta[current][column]
            if target not in live:
                continue
            moved = (frozenset(d.delta[t][column] for t in s) for s in sets)
            successor = _normalize(target, moved, live)
            if successor is None or successor in parent:
                continue
            parent[successor] = (node, symbol)
            if len(parent) > node_budget:
                raise SearchBudgetExceeded(node_budget, len(parent))
            queue.append(successor)
    logger.debug(f"No bad continuation from state {main}: {len(parent)} nodes explored")
    return None


def _word_to(parent, node: Node) -> Word:
    symbols = []
    while parent[node] is not None:
        node, symbol = parent[node]
        symbols.append(symbol)
    return "".join(reversed(symbols))
