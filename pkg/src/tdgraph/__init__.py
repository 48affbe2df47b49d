"""Total dot product graphs over finite commutative rings."""
