"""Executable category theory: finite 1- and 2-categories, twisted arrow
and twisted 2-cell constructions, Grothendieck constructions, nerves,
exact integral homology, derived limits, and the combinatorics of the
walking adjunction."""

__version__ = "0.1.0"
