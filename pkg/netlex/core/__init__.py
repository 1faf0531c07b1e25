"""Algorithms and orchestration."""
