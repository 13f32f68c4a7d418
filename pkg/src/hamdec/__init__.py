"""Hamilton decompositions of multigraphs mX and their arc blow-ups K(mX)."""

__version__ = "0.1.0"
