"""
The ``oodc`` command line.

Exit status is 0 on success, 1 if an error diagnostic was reported, 2 on
a usage error and 3 if an interpreted program failed at run time.
"""
import sys
import argparse

from . import Ast
from .version import __version__
from .Diagnostics import CompileError, InterpreterError, format_diagnostics, has_errors
from .TypeCheck import OO, BASE
from .Compiler import compile_stages
from .Emitter import emit
from .Interpreter import evaluate_program
from .Values import python_value
from .Misc import read_sources, write_source

EXIT_OK = 0
EXIT_ERRORS = 1
EXIT_USAGE = 2
EXIT_RUNTIME = 3


def make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('files', nargs='+', metavar='FILE', help='MJ-OO source files')
    common.add_argument('--no-oo', action='store_true',
        help='disable operator overloading and compile the plain language')
    common.add_argument('--stubs', metavar='DIR', default=None,
        help='directory of stub declarations (default: the bundled stubs)')
    common.add_argument('--warnings-as-errors', action='store_true',
        help='exit with status 1 if any warning is reported')
    common.add_argument('-v', '--verbose', action='store_true', help='print progress information')

    parser = argparse.ArgumentParser(prog='oodc',
        description='Operator-overloading compiler: translates MJ-OO into plain Java-compatible source.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    commands.add_parser('check', parents=[common], help='type-check only')

    desugar = commands.add_parser('desugar', parents=[common],
        help='write the plain translation to --out or standard output')
    desugar.add_argument('--out', metavar='DIR', default=None,
        help='directory to write translated files to')

    run = commands.add_parser('run', parents=[common], help='translate and interpret')
    run.add_argument('--entry', metavar='CLASS.METHOD', default=None,
        help='static method to run (default: the first static main())')
    run.add_argument('--stream', action='store_true',
        help='print output as it is produced rather than when the program ends')
    run.add_argument('--show-result', action='store_true',
        help="also print the entry method's return value")

    ast = commands.add_parser('emit-ast', parents=[common], help='dump syntax trees')
    ast.add_argument('--stage', choices=['parse', 'attribute', 'desugar'], default='parse',
        help='which tree to dump (default: parse)')
    return parser


def _stages(args, last):
    """Run the pipeline up to and including the stage called last."""
    sources = read_sources(args.files)
    state = {}
    mode = BASE if args.no_oo else OO
    for stage, product in compile_stages(sources, mode=mode, stubDir=args.stubs, verbose=args.verbose):
        state[stage] = product
        if stage == last:
            break
    return sources, state


def _report(args, state, stderr):
    """Print attribution warnings and notes; whether they should fail the run."""
    diagnostics = [d for a in state.get('attribute', []) for d in a.diagnostics]
    stderr.write(format_diagnostics(diagnostics))
    return has_errors(diagnostics, args.warnings_as_errors)


def command_check(args, stdout, stderr):
    sources, state = _stages(args, 'attribute')
    return EXIT_ERRORS if _report(args, state, stderr) else EXIT_OK


def command_desugar(args, stdout, stderr):
    sources, state = _stages(args, 'desugar')
    if _report(args, state, stderr):
        return EXIT_ERRORS
    for (fileId, text), unit in zip(sources, state['desugar']):
        if args.out is None:
            stdout.write(emit(unit))
        else:
            path = write_source(args.out, fileId, emit(unit))
            if args.verbose:
                print('Wrote', path)
    return EXIT_OK


def command_run(args, stdout, stderr):
    sources, state = _stages(args, 'desugar')
    if _report(args, state, stderr):
        return EXIT_ERRORS
    program = [decl for unit in state['desugar'] for decl in unit]
    try:
        result = evaluate_program(program, state['enter'], entry=args.entry,
            stream=stdout if args.stream else None, verbose=args.verbose)
    except InterpreterError as e:
        stderr.write(str(e) + '\n')
        return EXIT_RUNTIME
    if not args.stream:
        stdout.write(result.output)
    if args.show_result and result.value is not None:
        stdout.write('%s\n' % python_value(result.value))
    return EXIT_OK


def command_emit_ast(args, stdout, stderr):
    sources, state = _stages(args, args.stage)
    if args.stage == 'parse':
        units = state['parse']
    elif args.stage == 'attribute':
        units = [a.unit for a in state['attribute']]
    else:
        units = state['desugar']
    for (fileId, text), unit in zip(sources, units):
        stdout.write('// %s\n' % fileId)
        stdout.write(Ast.dump(unit))
    return EXIT_OK


COMMANDS = {
    'check': command_check,
    'desugar': command_desugar,
    'run': command_run,
    'emit-ast': command_emit_ast,
}


def run(argv, stdout=None, stderr=None):
    """
    Run the command line.

    Parameters
    ----------
    argv : list of str
        Arguments without the program name.
    stdout, stderr : file-like, optional
        Where output and diagnostics go; sys.stdout and sys.stderr by
        default.

    Returns
    -------
    int
        The exit status.
    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        return COMMANDS[args.command](args, stdout, stderr)
    except CompileError as e:
        stderr.write(format_diagnostics(e.diagnostics))
        return EXIT_ERRORS
    except (IOError, OSError) as e:
        stderr.write('oodc: %s\n' % e)
        return EXIT_USAGE
    except ValueError as e:
        stderr.write('oodc: %s\n' % e)
        return EXIT_USAGE


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
