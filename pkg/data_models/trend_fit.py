"""This class creates the object structure for a linear trend"""


class TrendFit:
    def __init__(self, slope, slope_err, intercept):
        self.slope = slope
        self.slope_err = slope_err
        self.intercept = intercept

    def get_formatted_dict(self):
        return {
            'slope': self.slope,
            'slope_err': self.slope_err,
            'intercept': self.intercept
        }
