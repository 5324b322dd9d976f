import argparse
import os

FORMATS = ['json', 'csv', 'edges']

def _common(parser: argparse.ArgumentParser):
    parser.add_argument('--seed', default=None, type=int, help='Seed for every randomized search. Defaults to config seed or EXPANDER_SEED')
    parser.add_argument('--cap', default=None, type=int, help='Group enumeration cap')
    parser.add_argument('--dense-cap', dest='dense_cap', default=None, type=int, help='Largest graph solved with the dense eigensolver')
    parser.add_argument('--tol', default=None, type=float, help='Eigenvalue comparison tolerance')
    parser.add_argument('--out', default=None, type=str, help='Output directory')
    parser.add_argument('--format', dest='formats', action='append', choices=FORMATS, default=None, help='Output format, repeatable')

def build_parser() -> argparse.ArgumentParser:
    args = argparse.ArgumentParser(description='Explicit expander and Ramanujan Cayley graphs of matrix groups over finite fields')
    args.add_argument('-e', '--env', default=None, type=str, help='Filepath to .env if located elsewhere')
    args.add_argument('-c', '--config', default=None, type=str, help='Filename to your yaml config. For example: "default" refers to configs/default.yaml')
    args.add_argument('--log_level', default='INFO', type=str, choices=['DEBUG','INFO','WARNING','ERROR','CRITICAL'], help='Level of logs to show')
    args.add_argument('--log_dir', default=os.path.join(os.getcwd(), 'logs'), type=str, help='Storing folder for logs')
    args.add_argument('--silent', action='store_true', help='Suppress console outputs')

    commands = args.add_subparsers(dest='command', required=True)

    construct = commands.add_parser('construct', help='Build the generating set for (q, d, e) and write spec, generators and edge list')
    construct.add_argument('--q', required=True, type=int)
    construct.add_argument('--d', default=2, type=int)
    construct.add_argument('--e', default=1, type=int)
    _common(construct)

    verify = commands.add_parser('verify', help='Spectral verification of a construct artifact, an edge list, or parameters')
    verify.add_argument('path', nargs='?', default=None, help='Spec JSON written by construct, or an edge list')
    verify.add_argument('--q', default=None, type=int)
    verify.add_argument('--d', default=2, type=int)
    verify.add_argument('--e', default=1, type=int)
    _common(verify)

    survey = commands.add_parser('survey', help='Run the families listed in a survey config')
    survey.add_argument('survey_config', nargs='?', default=None, help='Name of a yaml config holding a survey list')
    _common(survey)

    regress = commands.add_parser('regress', help='Compare current results against golden files')
    regress.add_argument('--golden', default=None, type=str, help='Golden directory')
    regress.add_argument('--update', action='store_true', help='Rewrite golden files with current values')
    regress.add_argument('survey_config', nargs='?', default=None, help='Name of a yaml config holding the survey list to pin')
    _common(regress)

    family = commands.add_parser('family', help='Run one named family and print its row')
    family.add_argument('name', choices=['selberg', 'lsv', 'abcc', 'cover', 'product'])
    family.add_argument('--p', default=None, type=int)
    family.add_argument('--q', default=None, type=int)
    family.add_argument('--d', default=2, type=int)
    family.add_argument('--e', default=1, type=int)
    _common(family)

    return args

def parse_args(argv=None) -> argparse.Namespace:
    return build_parser().parse_args(argv)
