"""Test package for hirota."""
