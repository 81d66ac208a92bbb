"""Package metadata for the Watson-Crick quantum finite automata toolkit."""

__all__ = ["__version__"]

__version__ = "0.0.0"
