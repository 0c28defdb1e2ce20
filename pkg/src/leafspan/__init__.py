"""Exact leaf number, circumference and theorem checks for small graphs."""
