"""Newton polygons of L-functions of exponential sums over finite fields."""

__version__ = "0.1.0"
