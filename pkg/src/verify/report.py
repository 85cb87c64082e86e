"""Verification reports: asserted checks with worst violations, plus exploratory items."""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..core.config import AppConfig


@dataclass
class Check:
    """
    One asserted property over a grid.

    Violations are signed: positive means the property fails at that point
    by that amount. The check passes iff the worst violation is within the
    tolerance.
    """

    property_id: str
    grid: str
    tolerance: float
    worst_violation: float = -math.inf
    witness: Dict[str, float] = field(default_factory=dict)
    points: int = 0

    def record(self, violation: float, **where: float) -> None:
        self.points += 1
        if math.isnan(violation):
            violation = math.inf
        if violation > self.worst_violation:
            self.worst_violation = violation
            self.witness = dict(where)

    @property
    def passed(self) -> bool:
        return self.points > 0 and self.worst_violation <= self.tolerance

    def to_dict(self) -> Dict[str, Any]:
        return {
            "property": self.property_id,
            "grid": self.grid,
            "points": self.points,
            "worst_violation": self.worst_violation,
            "tolerance": self.tolerance,
            "witness": self.witness,
            "pass": self.passed,
        }


@dataclass
class Exploratory:
    """An unproven claim, reported but never asserted."""

    item_id: str
    description: str
    values: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {"item": self.item_id, "description": self.description, "values": self.values}


@dataclass
class VerificationReport:
    """Checks and exploratory items of one suite (or of several merged)."""

    suite: str
    checks: List[Check] = field(default_factory=list)
    exploratory: List[Exploratory] = field(default_factory=list)
    version: str = AppConfig.REPORT_VERSION

    def check(self, property_id: str, grid: str, tolerance: float) -> Check:
        """Open a new check and return it for recording."""
        item = Check(property_id, grid, tolerance)
        self.checks.append(item)
        return item

    def explore(self, item_id: str, description: str, **values: Any) -> Exploratory:
        item = Exploratory(item_id, description, dict(values))
        self.exploratory.append(item)
        return item

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def find(self, property_id: str) -> Optional[Check]:
        return next((c for c in self.checks if c.property_id == property_id), None)

    def merge(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)
        self.exploratory.extend(other.exploratory)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "checks": [c.to_dict() for c in self.checks],
            "exploratory": [e.to_dict() for e in self.exploratory],
            "version": self.version,
        }
