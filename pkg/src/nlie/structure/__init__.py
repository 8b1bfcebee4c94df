"""Structural recognition and capability of n-Lie algebras."""
