"""Result carriers shared by the identity-checking modules."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .qpoly import IntPoly


@dataclass
class IdentityCheckResult:
    """Outcome of verifying a named identity at one parameter point.

    `difference` is the polynomial LHS - RHS; it is zero exactly when the
    check passed.
    """

    identity: str
    params: dict[str, Any]
    passed: bool
    difference: IntPoly

    def __bool__(self) -> bool:
        return self.passed
