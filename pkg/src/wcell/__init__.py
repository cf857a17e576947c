"""W-graphs of Kazhdan-Lusztig left cells in type A from tableau combinatorics."""

__version__ = "0.1.0"
