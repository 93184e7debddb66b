from rational_expanders.utils.constants import Constants
# bind the subpackages first so the same-named functions below take
# precedence as package attributes
import rational_expanders.classify  # noqa: F401
import rational_expanders.decompose  # noqa: F401


def _getDefaultConfigFilePath():
    from plico.utils.config_file_manager import ConfigFileManager
    cfgFileMgr = ConfigFileManager(Constants.APP_NAME,
                                   Constants.APP_AUTHOR,
                                   Constants.THIS_PACKAGE)
    return cfgFileMgr.getConfigFilePath()


default_config_file_path = _getDefaultConfigFilePath()


def parse(text):
    '''
    canonical rational function from its text

    Parameters
    ----------
    text: string
        expression in x1, x2, such as "(x1 + x2)/(1 - x1*x2)"; an
        expression in x alone gives a univariate function
    '''
    from rational_expanders.harness.expression_parser import \
        is_univariate, parse as parse_tree, to_birat, to_unirat

    tree = parse_tree(text)
    if is_univariate(tree) and tree.variables():
        return to_unirat(tree)
    return to_birat(tree)


def classify(f, mode='real'):
    '''
    special form of a bivariate rational function

    Parameters
    ----------
    f: BiRat or string
        function to classify, total degree at most 6

    mode: string
        'real' allows the tangent form, 'complex' does not

    Returns
    -------
    SpecialForm or None when no form exists within the default bounds
    '''
    from rational_expanders.classify.classifier import classify_full

    if not hasattr(f, 'deg_x1'):
        f = parse(f)
    return classify_full(f, mode=mode)


def decompose(f):
    '''
    decompositions of a univariate rational function, one per class

    Parameters
    ----------
    f: UniRat or string
        function of x, degree at most 8
    '''
    from rational_expanders.decompose.univariate import \
        enumerate_decompositions
    from rational_expanders.harness.expression_parser import to_unirat

    if not hasattr(f, 'compose'):
        f = to_unirat(f)
    return enumerate_decompositions(f)


def growth(f, family1, family2, sizes, seed=0):
    '''
    image growth of f along a sweep of set sizes

    Parameters
    ----------
    f: BiRat or string
    family1, family2: string
        set families such as "ap:0,1", "gp:1,2", "random", "tan:1/2"
    sizes: list of int
    seed: int
        seed of random families

    Returns
    -------
    GrowthReport
    '''
    from rational_expanders.harness.growth import run_growth

    if not hasattr(f, 'deg_x1'):
        f = parse(f)
    return run_growth(f, family1, family2, sizes, seed)
