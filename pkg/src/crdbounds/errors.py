"""Shared exception types."""


class ConfigurationError(ValueError):
    """A run configuration or scenario wiring problem (bad parameter values,
    missing light-cone tables, parameter mismatch between scenario and tables)."""
