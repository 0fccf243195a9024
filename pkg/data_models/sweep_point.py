"""This class creates the object structure for one power-sweep point"""

from error.noir_error import PowerOutOfRangeError


class SweepPoint:
    def __init__(self, p, separation):
        if not 0.0 <= p <= 2.0:
            raise PowerOutOfRangeError(p)
        self.p = p
        self.separation = separation
