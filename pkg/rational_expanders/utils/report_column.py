

class ReportColumn(object):
    FAMILY1 = 'family1'
    FAMILY2 = 'family2'
    FUNCTION = 'f'
    SIZE = 'n'
    IMAGE = 'image'
    QUADRUPLES = 'Q'
    CS_BOUND = 'cs_bound'
    SKIPPED = 'skipped'
    SEED = 'seed'

    ORDER = (FAMILY1, FAMILY2, FUNCTION, SIZE, IMAGE, QUADRUPLES,
             CS_BOUND, SKIPPED, SEED)
