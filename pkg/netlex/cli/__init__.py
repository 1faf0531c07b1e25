"""Command-line interface for netlex."""
