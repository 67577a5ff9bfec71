"""Exact computer algebra for generalized bilinear operators and the KdV-like equation."""
