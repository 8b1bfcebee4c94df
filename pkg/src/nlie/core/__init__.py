"""Concrete n-Lie algebras, exact linear algebra and invariants."""
