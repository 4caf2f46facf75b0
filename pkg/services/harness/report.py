# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

import json
from collections import defaultdict
from typing import Dict, List, Tuple

from shared.schemas import ExperimentResult, SuiteSummary
from services.harness.ranges import MEASURES, RANGE_BINARY, RANGE_UNARY

Cell = Tuple[int, int]


def range_cells(results: List[ExperimentResult]) -> Dict[str, Dict[str, Cell]]:
    """(passed, total) per operation and measure from ranges rows"""
    cells: Dict[str, Dict[str, List[int]]] = defaultdict(lambda: defaultdict(lambda: [0, 0]))
    for r in results:
        if r.suite != "ranges":
            continue
        cell = cells[r.operation][r.constant]
        cell[0] += int(r.passed)
        cell[1] += 1
    return {op: {m: (c[0], c[1]) for m, c in row.items()} for op, row in cells.items()}


def to_markdown(summaries: List[SuiteSummary], results: List[ExperimentResult]) -> str:
    lines = [
        "# Pumping constants verification",
        "",
        "| suite | total | passed | failed | status |",
        "|---|---:|---:|---:|---|",
    ]
    for s in summaries:
        status = "pass" if s.ok else "FAIL"
        lines.append(f"| {s.suite} | {s.total} | {s.passed} | {s.failed} | {status} |")

    cells = range_cells(results)
    if cells:
        lines += [
            "",
            "## Operation ranges (membership of observed constants)",
            "",
            "| operation | " + " | ".join(MEASURES) + " |",
            "|---|" + "---|" * len(MEASURES),
        ]
        for op in RANGE_UNARY + RANGE_BINARY:
            if op not in cells:
                continue
            row = []
            for measure in MEASURES:
                passed, total = cells[op].get(measure, (0, 0))
                mark = "✓" if passed == total else "✗"
                row.append(f"{mark} {passed}/{total}")
            lines.append(f"| {op} | " + " | ".join(row) + " |")

    findings = [f for s in summaries for f in s.findings]
    if findings:
        lines += ["", "## Findings", ""]
        for f in findings:
            lines.append(
                f"- {f.suite}/{f.operation} {f.constant} inputs={f.inputs} "
                f"observed={f.observed} ({f.expected})"
            )

    failures = [f for s in summaries for f in s.failures]
    if failures:
        lines += ["", "## Failures", ""]
        for f in failures:
            lines.append(
                f"- {f.suite}/{f.operation} {f.constant} inputs={f.inputs} "
                f"observed={f.observed} expected {f.expected}"
            )
    return "\n".join(lines) + "\n"


def to_json(summaries: List[SuiteSummary], results: List[ExperimentResult]) -> str:
    """Summaries with their failures and findings plus the operation range cells; other passing rows are not repeated"""
    payload = {
        "suites": [s.model_dump(mode="json") for s in summaries],
        "ranges": {
            op: {m: {"passed": p, "total": t} for m, (p, t) in row.items()}
            for op, row in sorted(range_cells(results).items())
        },
    }
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
