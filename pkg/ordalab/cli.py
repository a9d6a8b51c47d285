# coding=utf-8

"""
Command line interface: `ordalab <group> <verb> [options]`.

Maps are named by a fixture (see `ordalab thompson fixtures`) or given as a
path to a JSON map literal. Reports go to standard output; the exit status
is 0 when everything checked out, 1 when a certificate or axiom check
failed and 2 on bad input.
"""

import argparse
import json
import logging
import os
import sys

from ordalab.api import lab_factory
from ordalab.data import fixtures
from ordalab.data.exception_map import EXIT_ERROR
from ordalab.exceptions import BadInput, OrdalabError
from ordalab.modules.amalgam import Amalgam
from ordalab.modules.braid import BraidWord
from ordalab.modules.intervals import ClosedSet
from ordalab.modules.plmap import PLMap
from ordalab.modules.thompson import PeriodicMap
from ordalab.response import ERROR, Report
from ordalab.util import parse_rational

log = logging.getLogger(__name__)

TEXT = 'text'
STRUCTURED = 'structured'


def _read_literal(spec):
    """JSON from an inline literal or a file, with the location of any syntax error."""
    if spec.lstrip().startswith(('{', '[')):
        source, text = '<inline>', spec
    else:
        if not os.path.exists(spec):
            raise BadInput("%s is neither a fixture nor a file" % spec)
        source = spec
        try:
            with open(spec) as handle:
                text = handle.read()
        except (OSError, UnicodeDecodeError) as exc:
            raise BadInput("%s cannot be read: %s" % (spec, exc))
    try:
        return json.loads(text)
    except ValueError as exc:
        location = '%s:%s:%s' % (source, getattr(exc, 'lineno', '?'), getattr(exc, 'colno', '?'))
        raise BadInput("%s: %s" % (location, exc))


def load_map(spec):
    """A map from a fixture name, a JSON file or an inline JSON literal."""
    if spec in fixtures.FIXTURES:
        return fixtures.load(spec)
    literal = _read_literal(spec)
    if not isinstance(literal, dict):
        raise BadInput("%s does not hold a map literal" % spec)
    if literal.get('periodic'):
        return PeriodicMap.parse(literal)
    return PLMap.parse(literal)


def load_maps(specs):
    return [load_map(spec) for spec in _split(specs)]


def load_set(spec):
    return ClosedSet.parse(_read_literal(spec))


def load_amalgam(spec):
    if spec in fixtures.FIXTURES:
        value = fixtures.load(spec)
        if isinstance(value, Amalgam):
            return value
        raise BadInput("Fixture %s is not an amalgam" % spec)
    return Amalgam.parse(_read_literal(spec), resolve=lambda value: load_map(value) if isinstance(value, str)
                         else PLMap.parse(value))


def _split(text):
    return [item.strip() for item in text.split(',') if item.strip()] if text else []


def _rational(text):
    try:
        return parse_rational(text)
    except BadInput as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _rationals(text):
    return [_rational(item) for item in _split(text)]


def _braid(text):
    try:
        return BraidWord.parse(text)
    except BadInput as exc:
        raise argparse.ArgumentTypeError(str(exc))


# Handlers: each takes the parsed arguments and the lab and returns a Report.

def _map_eval(args, lab):
    return lab.map.evaluate(load_map(args.f), args.x)


def _map_compose(args, lab):
    return lab.map.compose(load_map(args.f), load_map(args.g))


def _map_inverse(args, lab):
    return lab.map.inverse(load_map(args.f))


def _map_power(args, lab):
    return lab.map.power(load_map(args.f), args.n)


def _map_conjugate(args, lab):
    return lab.map.conjugate(load_map(args.f), load_map(args.g))


def _map_reverse(args, lab):
    return lab.map.reverse(load_map(args.f))


def _map_equals(args, lab):
    return lab.map.equals(load_map(args.f), load_map(args.g))


def _map_fix(args, lab):
    return lab.map.fix(load_map(args.f))


def _sets_intersect(args, lab):
    return lab.sets.intersect(load_set(args.a), load_set(args.b))


def _sets_complement(args, lab):
    return lab.sets.complement(load_set(args.a))


def _sets_groupfix(args, lab):
    return lab.sets.groupfix(load_maps(args.gens))


def _sets_orbits(args, lab):
    return lab.sets.orbits(load_maps(args.gens))


def _sets_plt(args, lab):
    return lab.sets.plt(load_maps(args.gens))


def _pingpong_semigroup(args, lab):
    return lab.pingpong.semigroup(load_map(args.alpha), load_map(args.beta), args.a, args.b, args.depth)


def _pingpong_classify(args, lab):
    return lab.pingpong.classify(load_maps(args.gens), args.depth)


def _pingpong_freegroup(args, lab):
    return lab.pingpong.freegroup(load_map(args.alpha), load_map(args.beta), load_map(args.z), args.depth)


def _pingpong_fixcheck(args, lab):
    return lab.pingpong.fixcheck(load_maps(args.gens), load_map(args.z), args.depth)


def _pingpong_words(args, lab):
    return lab.pingpong.words(load_maps(args.gens), args.mode, args.depth, args.probe)


def _order_compare(args, lab):
    return lab.order.compare(load_map(args.f), load_map(args.g), args.priority)


def _order_harness(args, lab):
    return lab.order.harness(load_maps(args.gens), args.length, args.samples, args.priority, args.negative,
                             names=_split(args.gens))


def _order_convex(args, lab):
    return lab.order.convex(load_maps(args.gens), args.priority, args.length, names=_split(args.gens))


def _amalgam_intertwine(args, lab):
    return lab.amalgam.intertwine(load_map(args.h), load_map(args.c), args.points, args.t0, args.u0)


def _amalgam_glue(args, lab):
    return lab.amalgam.glue(load_amalgam(args.amalgam), args.points)


def _amalgam_reduce(args, lab):
    return lab.amalgam.reduce(load_amalgam(args.amalgam), args.word)


def _amalgam_eval(args, lab):
    return lab.amalgam.eval(load_amalgam(args.amalgam), args.word, args.x)


def _thompson_fixtures(args, lab):
    return lab.thompson.fixtures(fixtures.FIXTURES, args.name)


def _thompson_conjugator(args, lab):
    depth = lab.group_depth if args.depth is None else args.depth
    return lab.thompson.conjugator(load_maps(args.a_gens), load_maps(args.b_gens), load_maps(args.gens), depth,
                                   names=_split(args.gens))


def _braid_reduce(args, lab):
    return lab.braid.reduce(args.word)


def _braid_compare(args, lab):
    return lab.braid.compare(args.u, args.v)


def _braid_trivial(args, lab):
    return lab.braid.trivial(args.word)


def _braid_expsum(args, lab):
    return lab.braid.expsum(args.word)


def _braid_center(args, lab):
    return lab.braid.center(args.n)


def _braid_commutes(args, lab):
    return lab.braid.commutes(args.word, args.r)


def _braid_perm(args, lab):
    return lab.braid.perm(args.word)


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=[TEXT, STRUCTURED], default=TEXT, help='Report format.')
    common.add_argument('--seed', type=int, default=None, help='Seed for sampled checks.')
    common.add_argument('--depth', type=int, default=None, help='Word check or search depth.')
    common.add_argument('--budget', type=int, default=None, help='Step budget for rewriting and searches.')
    common.add_argument('--verbose', action='store_true', help='Log progress to standard error.')
    return common


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(prog='ordalab', description=__doc__.strip().splitlines()[0])
    groups = parser.add_subparsers(dest='group', metavar='group')
    groups.required = True

    def verb(group, name, handler, help_text):
        sub = group.add_parser(name, help=help_text, parents=[common])
        sub.set_defaults(handler=handler)
        return sub

    maps = groups.add_parser('map', help='Algebra of piecewise linear maps.').add_subparsers(dest='verb')
    maps.required = True
    sub = verb(maps, 'eval', _map_eval, 'Evaluate a map at a rational.')
    sub.add_argument('--f', required=True)
    sub.add_argument('--x', type=_rational, required=True)
    for name, handler, help_text in (('compose', _map_compose, 'f after g.'),
                                     ('conjugate', _map_conjugate, 'g f g^-1.'),
                                     ('equals', _map_equals, 'Structural equality.')):
        sub = verb(maps, name, handler, help_text)
        sub.add_argument('--f', required=True)
        sub.add_argument('--g', required=True)
    for name, handler, help_text in (('inverse', _map_inverse, 'Inverse map.'),
                                     ('reverse', _map_reverse, 'The map r -> -f(-r).'),
                                     ('fix', _map_fix, 'Exact fixed point set.')):
        sub = verb(maps, name, handler, help_text)
        sub.add_argument('--f', required=True)
    sub = verb(maps, 'power', _map_power, 'n-fold composite.')
    sub.add_argument('--f', required=True)
    sub.add_argument('--n', type=int, required=True)

    sets = groups.add_parser('sets', help='Fixed sets and their complements.').add_subparsers(dest='verb')
    sets.required = True
    sub = verb(sets, 'intersect', _sets_intersect, 'Intersect two closed sets.')
    sub.add_argument('--a', required=True, help='JSON list of [lo, hi] pairs, inline or a file.')
    sub.add_argument('--b', required=True)
    sub = verb(sets, 'complement', _sets_complement, 'Open complement of a closed set.')
    sub.add_argument('--a', required=True)
    for name, handler, help_text in (('groupfix', _sets_groupfix, 'Common fixed set of generators.'),
                                     ('orbits', _sets_orbits, 'Intervals without a global fixed point.'),
                                     ('plt', _sets_plt, 'No common fixed point inside (0, 1).')):
        sub = verb(sets, name, handler, help_text)
        sub.add_argument('--gens', required=True, help='Comma separated maps.')

    pingpong = groups.add_parser('pingpong', help='Free semigroup and free group certificates.') \
        .add_subparsers(dest='verb')
    pingpong.required = True
    sub = verb(pingpong, 'semigroup', _pingpong_semigroup, 'Free semigroup witness on [a, b].')
    sub.add_argument('--alpha', required=True)
    sub.add_argument('--beta', required=True)
    sub.add_argument('--a', type=_rational, required=True)
    sub.add_argument('--b', type=_rational, required=True)
    sub = verb(pingpong, 'classify', _pingpong_classify, 'Common fixed point or free semigroup.')
    sub.add_argument('--gens', required=True)
    sub = verb(pingpong, 'freegroup', _pingpong_freegroup, 'Free group witness for maps commuting with z.')
    sub.add_argument('--alpha', required=True)
    sub.add_argument('--beta', required=True)
    sub.add_argument('--z', required=True)
    sub = verb(pingpong, 'fixcheck', _pingpong_fixcheck, 'Common fixed points of a family commuting with z.')
    sub.add_argument('--gens', required=True)
    sub.add_argument('--z', required=True)
    sub = verb(pingpong, 'words', _pingpong_words, 'Exhaustive word distinctness check.')
    sub.add_argument('--gens', required=True)
    sub.add_argument('--mode', choices=['semigroup', 'group'], default='group')
    sub.add_argument('--probe', type=_rational, default=None)

    order = groups.add_parser('order', help='Left orders from the action on the line.').add_subparsers(dest='verb')
    order.required = True
    sub = verb(order, 'compare', _order_compare, 'Compare two maps.')
    sub.add_argument('--f', required=True)
    sub.add_argument('--g', required=True)
    sub.add_argument('--priority', type=_rationals, default=[])
    sub = verb(order, 'harness', _order_harness, 'Check the order axioms on short words.')
    sub.add_argument('--gens', required=True)
    sub.add_argument('--length', type=int, default=4)
    sub.add_argument('--samples', type=int, default=1000)
    sub.add_argument('--priority', type=_rationals, default=[])
    sub.add_argument('--negative', action='store_true', help='Drop the germ tie break (negative control).')
    sub = verb(order, 'convex', _order_convex, 'Convexity of the stabilizer of the priority points.')
    sub.add_argument('--gens', required=True)
    sub.add_argument('--priority', type=_rationals, default=[])
    sub.add_argument('--length', type=int, default=4)

    amalgam = groups.add_parser('amalgam', help='Glued actions of amalgams.').add_subparsers(dest='verb')
    amalgam.required = True
    sub = verb(amalgam, 'intertwine', _amalgam_intertwine, 'Intertwiner phi with phi h = c phi.')
    sub.add_argument('--h', required=True)
    sub.add_argument('--c', required=True)
    sub.add_argument('--t0', type=_rational, default=0)
    sub.add_argument('--u0', type=_rational, default=0)
    sub.add_argument('--points', type=_rationals, default=[0])
    sub = verb(amalgam, 'glue', _amalgam_glue, 'Images of the generators under the glued action.')
    sub.add_argument('--amalgam', required=True)
    sub.add_argument('--points', type=_rationals, default=[0])
    sub = verb(amalgam, 'reduce', _amalgam_reduce, 'Normal form of an amalgam word.')
    sub.add_argument('--amalgam', required=True)
    sub.add_argument('--word', required=True, help='For example "g:d^2 h:-3".')
    sub = verb(amalgam, 'eval', _amalgam_eval, 'Evaluate the glued action of a word.')
    sub.add_argument('--amalgam', required=True)
    sub.add_argument('--word', required=True)
    sub.add_argument('--x', type=_rational, required=True)

    thompson = groups.add_parser('thompson', help="Thompson's groups and the fixture registry.") \
        .add_subparsers(dest='verb')
    thompson.required = True
    sub = verb(thompson, 'fixtures', _thompson_fixtures, 'List fixtures or show one.')
    sub.add_argument('--name', default=None)
    sub = verb(thompson, 'conjugator', _thompson_conjugator, 'Conjugator making two families commute.')
    sub.add_argument('--a-gens', required=True)
    sub.add_argument('--b-gens', required=True)
    sub.add_argument('--gens', default='F.x0,F.x1')

    braid = groups.add_parser('braid', help='Braid words and their order.').add_subparsers(dest='verb')
    braid.required = True
    for name, handler, help_text in (('reduce', _braid_reduce, 'Handle reduction.'),
                                     ('trivial', _braid_trivial, 'Word problem.'),
                                     ('expsum', _braid_expsum, 'Exponent sum.'),
                                     ('perm', _braid_perm, 'Permutation of the strands.')):
        sub = verb(braid, name, handler, help_text)
        sub.add_argument('--word', type=_braid, required=True, help='For example "n=3 1 2 -1".')
    sub = verb(braid, 'compare', _braid_compare, 'Compare two braids.')
    sub.add_argument('--u', type=_braid, required=True)
    sub.add_argument('--v', type=_braid, required=True)
    sub = verb(braid, 'center', _braid_center, 'Generator of the center.')
    sub.add_argument('--n', type=int, required=True)
    sub = verb(braid, 'commutes', _braid_commutes, 'Whether a braid commutes with every sigma_i^r.')
    sub.add_argument('--word', type=_braid, required=True)
    sub.add_argument('--r', type=int, default=1)

    return parser


def render(report, form=TEXT):
    return report.to_xml() if form == STRUCTURED else str(report) + '\n'


def run(argv=None, out=None):
    """Run one command and return the exit status."""
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr,
                            format='%(asctime)s %(name)s %(levelname)s %(message)s')

    command = '%s %s' % (args.group, args.verb)
    inputs = list(argv if argv is not None else sys.argv[1:])
    try:
        lab = lab_factory(budget=args.budget, seed=args.seed)
    except OrdalabError as exc:
        out.write(render(Report(command, inputs, None, status=ERROR, code=exc.code, message=str(exc)), args.format))
        return EXIT_ERROR

    try:
        report = args.handler(args, lab)
    except OrdalabError as exc:
        log.debug("%s raised %r", command, exc)
        report = lab.failure(command, inputs, exc)
    out.write(render(report, args.format))
    return report.exit_status


def main():
    sys.exit(run())
