"""nlie - Exact computations for finite-dimensional n-Lie algebras."""

__version__ = "1.0.0"
