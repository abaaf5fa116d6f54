"""Small shared values: the undefined-meet marker and endpoint sentinels."""

from fractions import Fraction

Rat = Fraction

# Interval endpoints mix exact rationals with these two sentinels.  Python
# compares Fraction against float infinities exactly, so ordering stays exact.
NEG_INF = float("-inf")
POS_INF = float("inf")


class UndefinedMeet:
    """Marker for a meet that does not exist because there is no common part.

    Partiality of the meet is a semantic fact of bottomless lattices, not an
    error, so operations return this marker instead of raising.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UndefinedMeet"


UNDEFINED_MEET = UndefinedMeet()
