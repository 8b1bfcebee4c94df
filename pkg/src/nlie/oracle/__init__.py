"""Brute-force construction of free nilpotent n-Lie algebras."""
