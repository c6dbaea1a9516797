"""Exact scans and effective bounds for truncated Jacobi triple product series."""

__version__ = "0.1.0"
