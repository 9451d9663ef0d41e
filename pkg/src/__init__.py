"""Multiplex juggling pattern enumeration."""
