"""Verification suites behind the verify command."""

from .report import Check, Exploratory, VerificationReport
from .suites import SUITES, SuiteGrid, SuiteOptions, run_suite

__all__ = ["Check", "Exploratory", "SUITES", "SuiteGrid", "SuiteOptions", "VerificationReport", "run_suite"]
