"""Shipped named complexes as data files."""
