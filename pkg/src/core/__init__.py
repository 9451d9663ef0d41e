"""Combinatorics, cards, transfer matrices and counting."""
