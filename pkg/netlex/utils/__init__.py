"""Utility helpers: logging, file handling, input validation."""
