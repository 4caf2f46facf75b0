# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

from typing import List, Dict, Any
from pydantic import BaseModel, Field
from datetime import datetime, timezone
from enum import Enum


class VerificationStatus(str, Enum):
    """Verification status"""
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


class VerificationTestResult(str, Enum):
    """Individual test result"""
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


class VerificationTest(BaseModel):
    """Single verification test result"""
    test_name: str
    result: VerificationTestResult
    details: Dict[str, Any] = Field(default_factory=dict)


class VerificationReport(BaseModel):
    """Agreement report between the exact procedures and the brute-force oracle"""
    subject: str
    status: VerificationStatus
    tests_performed: List[VerificationTest]
    notes: str = ""
    timestamp: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))

    @property
    def hard_failures(self) -> List[VerificationTest]:
        return [t for t in self.tests_performed if t.result == VerificationTestResult.FAIL]
