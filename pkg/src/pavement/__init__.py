"""Failure-triggered behavior-tree generation and recovery, desk scale."""

__version__ = "0.1.0"
