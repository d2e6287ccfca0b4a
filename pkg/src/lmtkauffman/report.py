"""Outcome records for identity checks."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class VerificationReport:
    """One checked identity: both sides rendered as text, plus the verdict.

    ``passed`` is always the literal equality of the two values the
    check computed, never a tolerance.
    """

    subject: str
    claim: str
    lhs: str
    rhs: str
    passed: bool


def compare(subject: str, claim: str, lhs, rhs) -> VerificationReport:
    """Build a report from two exactly comparable values."""
    return VerificationReport(subject, claim, str(lhs), str(rhs), lhs == rhs)
