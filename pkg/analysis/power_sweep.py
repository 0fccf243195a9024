''' Sweep of the NOIR numerator power

For each p the powered metric is recomputed from the stored ratios and
similarities of true and null pairs, and the separation of the two score
distributions is reported. Grid points are evaluated in parallel and
returned in grid order.
'''
import concurrent.futures as cf

from analysis.distribution import describe_sample, separation
from data_models.sweep_point import SweepPoint
from error.noir_error import IncorrectInputError, PowerOutOfRangeError


def default_p_grid(step=0.1, upper=2.0):
    ''' returns 0, step, 2 * step, ... up to upper'''
    count = int(round(upper / step))
    return [round(i * step, 10) for i in range(count + 1)]


class PowerSweep:
    """Evaluates the true/null separation over a grid of powers"""

    def __init__(self, scored_true, scored_null, metric, max_workers=4):
        if not scored_true or not scored_null:
            raise IncorrectInputError(
                'Power sweep needs both true and null scored pairs')
        self.scored_true = scored_true
        self.scored_null = scored_null
        self.metric = metric
        self.max_workers = max_workers

    def power_sweep(self, p_grid):
        ''' returns one SweepPoint per p, in grid order'''
        for p in p_grid:
            if not 0.0 <= p <= 2.0:
                raise PowerOutOfRangeError(p)

        with cf.ThreadPoolExecutor(max_workers=self.max_workers) \
                as executor:
            return list(executor.map(self._sweep_point, p_grid))

    def _sweep_point(self, p):
        return SweepPoint(p, separation(
            describe_sample(self._powered_values(self.scored_true, p)),
            describe_sample(self._powered_values(self.scored_null, p))))

    def _powered_values(self, scored_pairs, p):
        return [self.metric.noir_score_powered(
            scored_pair.ratio, scored_pair.similarity, p).value
            for scored_pair in scored_pairs]


def power_sweep(scored_true, scored_null, p_grid, metric):
    return PowerSweep(scored_true, scored_null, metric).power_sweep(p_grid)
