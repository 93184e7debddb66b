from rational_expanders.algebra.scalar import scalar_to_text
from rational_expanders.utils.report_column import ReportColumn


class GrowthRow(object):

    def __init__(self,
                 family1,
                 family2,
                 function,
                 size,
                 image,
                 quadruples,
                 cs_bound,
                 skipped,
                 seed,
                 ):
        self.family1 = family1
        self.family2 = family2
        self.function = function
        self.size = size
        self.image = image
        self.quadruples = quadruples
        self.cs_bound = cs_bound
        self.skipped = skipped
        self.seed = seed

    def as_dict(self):
        dicto = {}
        dicto[ReportColumn.FAMILY1] = self.family1
        dicto[ReportColumn.FAMILY2] = self.family2
        dicto[ReportColumn.FUNCTION] = self.function
        dicto[ReportColumn.SIZE] = self.size
        dicto[ReportColumn.IMAGE] = self.image
        dicto[ReportColumn.QUADRUPLES] = self.quadruples
        dicto[ReportColumn.CS_BOUND] = None if self.cs_bound is None \
            else scalar_to_text(self.cs_bound)
        dicto[ReportColumn.SKIPPED] = self.skipped
        dicto[ReportColumn.SEED] = self.seed
        return dicto

    def __repr__(self):
        return "GrowthRow(%s)" % self.as_dict()
