import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor

import numpy as np
from plico.utils.logger import Logger
from plico.utils.snapshotable import Snapshotable

from rational_expanders.geometry.counting import cs_bound_from_counter, \
    quadruples_from_counter, value_counter
from rational_expanders.harness.set_families import SetFamily, \
    parse_family
from rational_expanders.types.growth_row import GrowthRow
from rational_expanders.utils.exceptions import InputException
from rational_expanders.utils.report_column import ReportColumn


_logger = Logger.of('growth')


class GrowthParameter(object):
    FUNCTION = 'FUNCTION'
    FAMILY1 = 'FAMILY1'
    FAMILY2 = 'FAMILY2'
    SIZES = 'SIZES'
    SEED = 'SEED'
    QUADRUPLES = 'QUADRUPLES'


def slope(sizes, images):
    '''
    Least-squares slope of log(image) against log(n); approximate, and
    None with fewer than two distinct sizes
    '''
    points = [(n, m) for n, m in zip(sizes, images) if n > 0 and m > 0]
    if len(set(n for n, _ in points)) < 2:
        return None
    x = np.log([float(n) for n, _ in points])
    y = np.log([float(m) for _, m in points])
    return float(np.polyfit(x, y, 1)[0])


class GrowthReport(object):

    def __init__(self, rows, slope, parameters):
        self._rows = sorted(rows, key=lambda row: row.size)
        self._slope = slope
        self._parameters = parameters

    @property
    def rows(self):
        return list(self._rows)

    @property
    def slope(self):
        return self._slope

    def images(self):
        return [row.image for row in self._rows]

    def as_csv(self):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(ReportColumn.ORDER)
        for row in self._rows:
            values = row.as_dict()
            writer.writerow(['' if values[k] is None else values[k]
                             for k in ReportColumn.ORDER])
        return buffer.getvalue()

    def snapshot(self, prefix):
        return Snapshotable.prepend(prefix, dict(self._parameters))

    def as_json(self):
        return json.dumps({'rows': [row.as_dict() for row in self._rows],
                           'slope': self._slope,
                           'meta': self.snapshot('GROWTH')},
                          indent=2, sort_keys=True)

    def __repr__(self):
        return "GrowthReport(%d rows, slope %s)" % (
            len(self._rows), self._slope)


def _family(value):
    if isinstance(value, SetFamily):
        return value
    return parse_family(value)


def growth_point(f, family1, family2, n, seed, quadruples=True):
    '''One row of a growth experiment; grid points off the domain skip'''
    first = family1.generate(n, seed)
    second = family2.generate(n, seed)
    counter, skipped = value_counter(f, first, second, strict=False)
    if skipped:
        _logger.warn("%s at n=%d: %d grid points outside the domain" % (
            f, n, skipped))
    q = quadruples_from_counter(counter) if quadruples and counter else None
    bound = cs_bound_from_counter(counter) if q else None
    _logger.notice("%s at n=%d: image %d" % (f, n, len(counter)))
    return GrowthRow(family1.family_id(), family2.family_id(), f.to_text(),
                     n, len(counter), q, bound, skipped, seed)


def _growth_job(args):
    return growth_point(*args)


def run_growth(f, family1, family2, sizes, seed=0, quadruples=True,
               workers=1):
    '''
    Image sizes of f on A1 x A2 along a sweep of set sizes.

    Each size is one job; with workers > 1 the jobs run in a process
    pool and the rows are sorted by n, so the report does not depend on
    the number of workers.

    Parameters
    ----------
    f: BiRat
    family1, family2: SetFamily or family text such as "ap:0,1"
    sizes: list of int
    seed: int
        seed of the random families, shared by both sides

    Returns
    -------
    GrowthReport
    '''
    sizes = sorted(set(int(n) for n in sizes))
    if not sizes:
        raise InputException("empty size sweep")
    family1 = _family(family1)
    family2 = _family(family2)
    jobs = [(f, family1, family2, n, seed, quadruples) for n in sizes]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_growth_job, jobs))
    else:
        rows = [_growth_job(job) for job in jobs]
    estimate = slope([row.size for row in rows], [row.image for row in rows])
    parameters = {
        GrowthParameter.FUNCTION: f.to_text(),
        GrowthParameter.FAMILY1: family1.family_id(),
        GrowthParameter.FAMILY2: family2.family_id(),
        GrowthParameter.SIZES: ','.join(str(n) for n in sizes),
        GrowthParameter.SEED: seed,
        GrowthParameter.QUADRUPLES: bool(quadruples),
    }
    return GrowthReport(rows, estimate, parameters)
