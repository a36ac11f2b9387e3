"""Exact combinatorics of wheel polynomial evaluations on updown tableaux.

Partitions, branching-graph paths, content multisets, reduced wheel
signatures and the linear algebra built on top of them, all in exact
arithmetic.
"""

__version__ = "0.1.0"
