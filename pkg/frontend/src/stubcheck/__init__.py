"""Conformance checks for generated type-annotation stub files."""

from .checker import CheckResult, check_stubs

__all__ = ["CheckResult", "check_stubs"]
__version__ = "0.1.0"
