"""Claim verdicts shared by the ideal, topology and harness layers."""

import enum
from dataclasses import dataclass, field
from typing import Optional


class Status(enum.Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    NOT_APPLICABLE = "notApplicable"
    VACUOUS = "vacuous"


@dataclass
class ClaimResult:
    claim_id: str
    status: Status
    witness: Optional[dict] = None
    note: str = ""
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status is Status.VIOLATED and self.witness is None:
            raise ValueError(f"{self.claim_id}: a violation needs a witness")
        if self.status is Status.NOT_APPLICABLE and not self.note:
            raise ValueError(f"{self.claim_id}: not-applicable needs a reason")

    @property
    def ok(self):
        return self.status is not Status.VIOLATED

    def to_json(self):
        out = {"claim": self.claim_id, "status": self.status.value}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        if self.details:
            out["details"] = self.details
        return out


def holds(claim_id, note="", **details):
    return ClaimResult(claim_id, Status.HOLDS, note=note, details=details)


def violated(claim_id, witness, note=""):
    return ClaimResult(claim_id, Status.VIOLATED, witness, note)


def not_applicable(claim_id, reason):
    return ClaimResult(claim_id, Status.NOT_APPLICABLE, note=reason)


def vacuous(claim_id, note):
    return ClaimResult(claim_id, Status.VACUOUS, note=note)


def witness(check, args, observed):
    """Re-checkable counterexample: ``check(t, **args)`` reproduces ``observed``."""
    return {"check": check, "args": args, "observed": observed}
