"""Declarative binding-plan, name, and stub generation for a templated geometry library."""

__version__ = "0.1.0"
