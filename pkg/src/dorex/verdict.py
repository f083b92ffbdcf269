"""Three-valued verdicts with machine-readable reasons.

Classification never guesses: a property is reported "pass", "fail" or
"unknown", and anything other than "pass" carries the condition that failed
or the reason the question is undecidable here.
"""

from __future__ import annotations

from dataclasses import dataclass

PASS = "pass"
FAIL = "fail"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    status: str
    reason: str = ""

    @staticmethod
    def passed(reason: str = "") -> "Verdict":
        return Verdict(PASS, reason)

    @staticmethod
    def failed(reason: str = "") -> "Verdict":
        return Verdict(FAIL, reason)

    @staticmethod
    def undecided(reason: str = "") -> "Verdict":
        return Verdict(UNKNOWN, reason)

    @property
    def is_pass(self) -> bool:
        return self.status == PASS

    @property
    def is_fail(self) -> bool:
        return self.status == FAIL

    @property
    def is_unknown(self) -> bool:
        return self.status == UNKNOWN

    def __str__(self):
        return f"{self.status} ({self.reason})" if self.reason else self.status
