# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

import logging
from typing import List, Optional

from shared.automata.codec import dump_text
from shared.automata.dfa import Dfa, minimize
from shared.schemas import (
    PumpingReport,
    PumpKind,
    VerificationReport,
    VerificationStatus,
    VerificationTest,
    VerificationTestResult
)
from services.oracle.brute_force import (
    defeats_mpl,
    defeats_mps,
    oracle_mpc,
    oracle_mpl,
    oracle_mps,
    oracle_pumpable_mpc,
    pumps_literally
)
from services.pumping.analyzer import analyze

logger = logging.getLogger(__name__)


class OracleCrossValidator:
    """Checks the exact procedures against the brute-force oracle"""

    def __init__(self, len_bound: int = 12):
        self.len_bound = len_bound

    def verify(self, d: Dfa, report: Optional[PumpingReport] = None) -> VerificationReport:
        """
        Run every agreement test on one automaton.

        Args:
            d: Complete DFA
            report: Exact analysis of d, computed when omitted

        Returns:
            VerificationReport with status FAIL on any hard failure
        """
        m = minimize(d)
        report = report or analyze(m)
        tests = [
            self._lower_bounds(m, report),
            self._witnesses(m, report),
            self._certificates(m, report),
        ]
        failed = [t for t in tests if t.result == VerificationTestResult.FAIL]
        if failed:
            logger.warning(f"Oracle disagreement on {report.constants}: {[t.test_name for t in failed]}")
        return VerificationReport(
            subject=dump_text(m),
            status=VerificationStatus.FAIL if failed else VerificationStatus.PASS,
            tests_performed=tests,
            notes=f"len_bound={self.len_bound}",
        )

    def _lower_bounds(self, d: Dfa, report: PumpingReport) -> VerificationTest:
        observed = {
            "mpc": oracle_mpc(d, self.len_bound).value,
            "mpl": oracle_mpl(d, self.len_bound).value,
            "mps": oracle_mps(d, self.len_bound).value,
        }
        exact = {"mpc": report.mpc, "mpl": report.mpl, "mps": report.mps}
        exceeded = [k for k in observed if observed[k] > exact[k]]
        return VerificationTest(
            test_name="oracle_lower_bounds",
            result=VerificationTestResult.FAIL if exceeded else VerificationTestResult.PASS,
            details={"oracle": observed, "exact": exact, "exceeded": exceeded},
        )

    def _witnesses(self, d: Dfa, report: PumpingReport) -> VerificationTest:
        problems: List[str] = []
        w = report.witnesses
        if report.mpc > 0:
            if w.mpc is None or not d.accepts(w.mpc) or oracle_pumpable_mpc(d, w.mpc):
                problems.append("mpc")
            elif len(w.mpc) != report.mpc - 1:
                problems.append("mpc-length")
        if report.mpl > 0 and (w.mpl is None or not defeats_mpl(d, w.mpl, report.mpl - 1)):
            problems.append("mpl")
        if report.mps > 0 and (
            w.mps is None or not defeats_mps(d, w.mps.u, w.mps.w, w.mps.v, report.mps - 1)
        ):
            problems.append("mps")
        if not problems:
            return VerificationTest(test_name="witness_replay", result=VerificationTestResult.PASS)
        return VerificationTest(
            test_name="witness_replay",
            result=VerificationTestResult.FAIL,
            details={"failed": problems, "witnesses": w.model_dump()},
        )

    def _certificates(self, d: Dfa, report: PumpingReport) -> VerificationTest:
        if not report.certificates:
            return VerificationTest(
                test_name="certificate_replay",
                result=VerificationTestResult.SKIP,
                details={"reason": "no accepted word reaches the constants"},
            )
        limits = {PumpKind.MPC: None, PumpKind.MPL: report.mpl, PumpKind.MPS: report.mps}
        problems = []
        for certificate in report.certificates:
            limit = limits[certificate.kind]
            confined = limit is None or (
                certificate.window_start <= certificate.i
                and certificate.j - certificate.window_start <= limit
            )
            accepted = d.accepts(certificate.word)
            if not (confined and accepted and pumps_literally(d, certificate.word, certificate.i, certificate.j)):
                problems.append(certificate.kind.value)
        return VerificationTest(
            test_name="certificate_replay",
            result=VerificationTestResult.FAIL if problems else VerificationTestResult.PASS,
            details={"failed": problems} if problems else {},
        )


def cross_validate(d: Dfa, len_bound: int = 12) -> VerificationReport:
    return OracleCrossValidator(len_bound).verify(d)
