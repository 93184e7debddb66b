

class Caps(object):
    '''
    Desk-scale limits. Exceeding any of them raises
    CapExceededException, never a silent truncation.
    '''
    MAX_UNIVARIATE_DEGREE = 8
    MAX_BIVARIATE_UNKNOWNS = 24
    CLASSIFY_MAX_DEGREE = 6
    CLASSIFY_G_DEGREE = 2
    CLASSIFY_L_DEGREE = 2
    IMAGE_CLOSURE_ARITY = 6


class HarnessDefaults(object):
    RANDOM_BOUND_EXPONENT = 3
    ATTEMPT_FACTOR = 10
    WORKERS = 1
