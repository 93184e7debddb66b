import argparse
import json
import logging
import os
import sys

from plico.utils.logger import Logger

from rational_expanders.algebra.scalar import scalar_to_text
from rational_expanders.classify.classifier import ClassifyBounds, \
    classify_full
from rational_expanders.classify.jordan import COMPLEX, REAL
from rational_expanders.classify.special_form import verify_form
from rational_expanders.decompose.bivariate import INNER, OUTER, \
    solve_bivariate_lift
from rational_expanders.decompose.dominating import dominating_function
from rational_expanders.decompose.lift_family import lift_family
from rational_expanders.decompose.univariate import enumerate_decompositions
from rational_expanders.geometry.counting import EvalSet, cs_lower_bound, \
    quadruples_from_counter, value_counter
from rational_expanders.geometry.curves import VARIANTS, curve
from rational_expanders.groebner.buchberger import buchberger
from rational_expanders.groebner.elimination import elimination_ideal, \
    solve_zero_dim
from rational_expanders.groebner.monomial_order import LEX
from rational_expanders.harness.expression_parser import parse_ideal, \
    to_birat, to_unirat
from rational_expanders.harness.growth import run_growth
from rational_expanders.harness.set_families import gen_set
from rational_expanders.utils.configuration import ExpanderConfiguration, \
    packaged_config_file_path
from rational_expanders.utils.exceptions import CapExceededException, \
    InputException


_logger = Logger.of('cli')

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_CAP_EXCEEDED = 2

CSV = 'csv'
JSON = 'json'


class _ArgumentParser(argparse.ArgumentParser):
    '''Turns usage errors into InputException instead of exiting'''

    def error(self, message):
        raise InputException(message)


def _rationals(text):
    try:
        return [to_unirat(v).constant_value() for v in text.split(',')
                if v.strip()]
    except InputException:
        raise InputException("'%s' is not a list of rationals" % text)


def _integers(text, option):
    try:
        return [int(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise InputException("%s expects integers, got '%s'" % (
            option, text))


def _pairs(text):
    '''"a,b;c,d" as [(a, b), (c, d)]'''
    pairs = []
    for chunk in text.split(';'):
        values = _rationals(chunk)
        if len(values) != 2:
            raise InputException("'%s' is not a pair" % chunk)
        pairs.append(tuple(values))
    return pairs


def _evaluation_set(text, n, seed):
    if any(c.isalpha() for c in text):
        if n is None:
            raise InputException("set family '%s' needs --n" % text)
        return gen_set(text, n, seed)
    return EvalSet(_rationals(text))


def _emit(text, args, out):
    if not text.endswith('\n'):
        text += '\n'
    if args.output:
        with open(args.output, 'w') as f:
            f.write(text)
    else:
        out.write(text)


def _json(document):
    return json.dumps(document, indent=2, sort_keys=True, default=str)


def _check_emit(args, allowed):
    if args.emit is not None and args.emit not in allowed:
        raise InputException("--emit %s is not available for %s" % (
            args.emit, args.command))


def _classify(args, configuration, out):
    _check_emit(args, (JSON,))
    f = to_birat(args.function)
    g_degree, l_degree = configuration.g_degree(), configuration.l_degree()
    if args.bounds:
        values = _integers(args.bounds, '--bounds')
        if len(values) != 2:
            raise InputException("--bounds expects G,L")
        g_degree, l_degree = values
    bounds = ClassifyBounds(g_degree, l_degree,
                            configuration.classify_max_degree())
    mode = args.mode or configuration.mode()
    form = classify_full(f, bounds, mode)
    if form is None:
        document = {'f': f.to_text(), 'kind': None,
                    'bounds': bounds.as_dict()}
        text = "no form within bounds (g_degree=%d, l_degree=%d, " \
            "max_degree=%d)" % (bounds.g_degree, bounds.l_degree,
                                bounds.max_degree)
    else:
        verified = verify_form(f, form)
        document = form.as_dict()
        document['f'] = f.to_text()
        document['verify'] = 'ok' if verified else 'failed'
        text = '\n'.join([
            "kind=%s" % form.kind,
            "g=%s" % form.g.to_text(),
            "l1=%s" % form.l1.to_text('x1'),
            "l2=%s" % form.l2.to_text('x2'),
            "verify=%s" % document['verify']])
    _emit(_json(document) if args.emit == JSON else text, args, out)
    return EXIT_OK


def _decompose(args, configuration, out):
    _check_emit(args, (JSON,))
    f = to_unirat(args.function)
    decompositions = enumerate_decompositions(
        f, configuration.max_univariate_degree())
    if args.emit == JSON:
        text = _json({'f': f.to_text(),
                      'decompositions': [d.as_dict()
                                         for d in decompositions]})
    elif not decompositions:
        text = "%s is indecomposable" % f.to_text()
    else:
        text = '\n'.join("%s o %s" % (d.left.to_text(), d.right.to_text())
                         for d in decompositions)
    _emit(text, args, out)
    return EXIT_OK


def _dominate(args, configuration, out):
    _check_emit(args, (JSON,))
    f1 = to_unirat(args.first)
    f2 = to_unirat(args.second)
    domination = dominating_function(f1, f2,
                                     configuration.max_univariate_degree())
    if args.emit == JSON:
        text = _json(domination.as_dict())
    else:
        text = '\n'.join(["g=%s" % domination.g.to_text(),
                          "h1=%s" % domination.h1.to_text(),
                          "h2=%s" % domination.h2.to_text()])
    _emit(text, args, out)
    return EXIT_OK


def _lift(args, configuration, out):
    _check_emit(args, (JSON,))
    if (args.outer_g is None) == (args.inner_g is None):
        raise InputException("give exactly one of --outer-g, --inner-g")
    f = to_birat(args.function)
    side = OUTER if args.outer_g is not None else INNER
    g = to_unirat(args.outer_g if side == OUTER else args.inner_g)
    h = solve_bivariate_lift(f, g, side,
                             configuration.max_bivariate_unknowns())
    document = {'f': f.to_text(), 'g': g.to_text(), 'side': side,
                'h': None if h is None else h.to_text()}
    lines = ["%s lift of %s through %s: %s" % (
        side, f.to_text(), g.to_text(),
        'none' if h is None else h.to_text())]
    if args.family_n:
        first, second = lift_family(g, args.family_n)
        for family in (first, second):
            polys = [p.to_text() for p in family.polys]
            document['family%d' % family.variant] = polys
            lines.append("family %d:" % family.variant)
            lines.extend("  %s" % p for p in polys)
    _emit(_json(document) if args.emit == JSON else '\n'.join(lines),
          args, out)
    return EXIT_OK


def _curves(args, configuration, out):
    _check_emit(args, (JSON,))
    f = to_birat(args.function)
    curves = [curve(f, args.variant, pair) for pair in _pairs(args.pairs)]
    if args.emit == JSON:
        text = _json([{'pair': [scalar_to_text(v) for v in c.pair],
                       'defining': c.defining.to_text(),
                       'degree': c.degree,
                       'whole_plane': c.whole_plane} for c in curves])
    else:
        text = '\n'.join("(%s): %s" % (
            ', '.join(scalar_to_text(v) for v in c.pair),
            c.to_text()) for c in curves)
    _emit(text, args, out)
    return EXIT_OK


def _count(args, configuration, out):
    _check_emit(args, (JSON,))
    h = to_birat(args.function)
    seed = configuration.seed() if args.seed is None else args.seed
    first = _evaluation_set(args.set1, args.n, seed)
    second = _evaluation_set(args.set2, args.n, seed)
    workers = args.workers or configuration.workers()
    counter, _ = value_counter(h, first, second, workers)
    q = quadruples_from_counter(counter)
    bound = cs_lower_bound(h, first, second, quadruples=q)
    document = {'f': h.to_text(), 'image': len(counter), 'Q': q,
                'cs_bound': scalar_to_text(bound)}
    if args.emit == JSON:
        text = _json(document)
    else:
        text = '\n'.join("%s=%s" % (k, document[k])
                         for k in ('f', 'image', 'Q', 'cs_bound'))
    _emit(text, args, out)
    return EXIT_OK


def _grow(args, configuration, out):
    _check_emit(args, (CSV, JSON))
    f = to_birat(args.function)
    sizes = _integers(args.sizes, '--sizes')
    seed = configuration.seed() if args.seed is None else args.seed
    workers = args.workers or configuration.workers()
    report = run_growth(f, args.family1, args.family2, sizes, seed,
                        quadruples=not args.no_quadruples, workers=workers)
    if args.emit == CSV:
        text = report.as_csv()
    elif args.emit == JSON:
        text = report.as_json()
    else:
        lines = ["%6s %10s %12s %12s" % ('n', 'image', 'Q', 'cs_bound')]
        for row in report.rows:
            values = row.as_dict()
            lines.append("%6d %10d %12s %12s" % (
                row.size, row.image,
                '' if row.quadruples is None else row.quadruples,
                values['cs_bound'] or ''))
        lines.append("slope (approximate): %s" % (
            'n/a' if report.slope is None else "%.4f" % report.slope))
        text = '\n'.join(lines)
    _emit(text, args, out)
    return EXIT_OK


def _groebner(args, configuration, out):
    _check_emit(args, (JSON,))
    if not os.path.isfile(args.ideal_file):
        raise InputException("no ideal file %s" % args.ideal_file)
    with open(args.ideal_file) as f:
        ideal = parse_ideal(f.read())
    order = ideal.order
    if args.eliminate is not None or args.solve:
        order = LEX
    gb = buchberger(ideal.polys, order, ideal.variables)
    document = {'variables': list(ideal.variables), 'order': str(order),
                'basis': [g.to_text() for g in gb]}
    lines = ["basis (%s in %s):" % (order, ', '.join(ideal.variables))]
    lines.extend("  %s" % g.to_text() for g in gb)
    if args.eliminate is not None:
        kept = elimination_ideal(gb, args.eliminate)
        document['elimination'] = [g.to_text() for g in kept]
        lines.append("elimination ideal %d:" % args.eliminate)
        lines.extend("  %s" % g.to_text() for g in kept)
    if args.solve:
        solution = solve_zero_dim(gb)
        document['points'] = [[scalar_to_text(v) for v in p]
                              for p in solution.points]
        lines.append("points:")
        lines.extend("  (%s)" % ', '.join(scalar_to_text(v) for v in p)
                     for p in solution.points)
        if solution.has_residue():
            lines.append("  further points outside Q")
    _emit(_json(document) if args.emit == JSON else '\n'.join(lines),
          args, out)
    return EXIT_OK


def build_parser():
    common = _ArgumentParser(add_help=False)
    common.add_argument('--config', help='ini file overriding the defaults')
    common.add_argument('--workers', type=int,
                        help='processes for counting and growth sweeps')
    common.add_argument('--log-level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
    common.add_argument('--output', help='write results to this file')
    common.add_argument('--emit', choices=[CSV, JSON],
                        help='machine-readable output')

    parser = _ArgumentParser(
        prog='rational_expanders',
        description='Exact toolkit for bivariate rational functions and '
                    'their image growth on finite grids')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    p = commands.add_parser('classify', parents=[common],
                            help='search for a special form')
    p.add_argument('function')
    p.add_argument('--mode', choices=[REAL, COMPLEX])
    p.add_argument('--bounds', help='G,L: bounds on deg g and deg l1, l2')
    p.set_defaults(handler=_classify)

    p = commands.add_parser('decompose', parents=[common],
                            help='decompositions of a function of x')
    p.add_argument('function')
    p.set_defaults(handler=_decompose)

    p = commands.add_parser('dominate', parents=[common],
                            help='common left part of largest degree')
    p.add_argument('first')
    p.add_argument('second')
    p.set_defaults(handler=_dominate)

    p = commands.add_parser('lift', parents=[common],
                            help='lift a bivariate function through g')
    p.add_argument('function')
    p.add_argument('--outer-g')
    p.add_argument('--inner-g')
    p.add_argument('--family-n', type=int,
                   help='also print the coefficient families for degree n')
    p.set_defaults(handler=_lift)

    p = commands.add_parser('curves', parents=[common],
                            help='coincidence curves at parameter pairs')
    p.add_argument('function')
    p.add_argument('--variant', choices=VARIANTS, default=VARIANTS[0])
    p.add_argument('--pairs', required=True, help='"a,b;c,d;..."')
    p.set_defaults(handler=_curves)

    p = commands.add_parser('count', parents=[common],
                            help='image size and quadruple count')
    p.add_argument('function')
    p.add_argument('--set1', required=True,
                   help='"0,1,2" or a family such as ap:0,1')
    p.add_argument('--set2', required=True)
    p.add_argument('--n', type=int, help='size of family-generated sets')
    p.add_argument('--seed', type=int)
    p.set_defaults(handler=_count)

    p = commands.add_parser('grow', parents=[common],
                            help='image growth along a size sweep')
    p.add_argument('function')
    p.add_argument('--family1', required=True)
    p.add_argument('--family2', required=True)
    p.add_argument('--sizes', required=True, help='"4,8,16"')
    p.add_argument('--seed', type=int)
    p.add_argument('--no-quadruples', action='store_true')
    p.set_defaults(handler=_grow)

    p = commands.add_parser('groebner', parents=[common],
                            help='reduced Groebner basis of an ideal file')
    p.add_argument('ideal_file')
    p.add_argument('--eliminate', type=int)
    p.add_argument('--solve', action='store_true')
    p.set_defaults(handler=_groebner)
    return parser


def _configuration(path):
    from rational_expanders import default_config_file_path
    paths = [packaged_config_file_path()]
    if os.path.isfile(default_config_file_path):
        paths.append(default_config_file_path)
    paths.append(path)
    return ExpanderConfiguration.load(*paths)


def main(argv=None, out=None):
    '''
    Run one subcommand

    Returns
    -------
    int
        0 on success, 1 on input errors, 2 when a cap is exceeded
    '''
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(stream=sys.stderr)
        logging.getLogger().setLevel(args.log_level)
        configuration = _configuration(args.config)
        return args.handler(args, configuration, out)
    except CapExceededException as e:
        _logger.error("cap exceeded: %s" % e)
        return EXIT_CAP_EXCEEDED
    except InputException as e:
        _logger.error("input error: %s" % e)
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
