"""This class creates the object structure for a NOIR value"""


class NoirScore:
    """Result of the NOIR metric

    Attributes:
        * value : ln(ratio) / ln(D), possibly capped
        * power_p : numerator power (1.0 for the canonical metric)
        * saturated : True when D was clamped or the value was capped
    """

    def __init__(self, value, power_p=1.0, saturated=False):
        self.value = value
        self.power_p = power_p
        self.saturated = saturated

    def __repr__(self):
        return 'NoirScore(value={}, p={}, saturated={})'.format(
            self.value, self.power_p, self.saturated)
