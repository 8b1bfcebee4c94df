"""Closed-form counts: basic commutators, Witt numbers and multiplier dimensions."""
