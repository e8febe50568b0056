"""
Helpers shared by the tests: fixture programs and one-call compilation.
"""
import os

from oodc.Diagnostics import CompileError
from oodc.TypeCheck import OO, BASE
from oodc.Compiler import compile_sources
from oodc.Emitter import emit
from oodc.Interpreter import evaluate_program

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'fixtures')


def fixture_path(name):
    return os.path.join(FIXTURE_DIR, name)


def fixture_source(name):
    with open(fixture_path(name), encoding='utf-8') as f:
        return f.read()


def program(body, returnType='void', params='', classes=''):
    """
    Source of a class T with a single static method f, preceded by the
    given extra class declarations.
    """
    return '%s\nclass T {\n    static %s f(%s) {\n%s\n    }\n}\n' % (classes, returnType, params, body)


def compile_text(text, mode=OO, fileId='test.mj'):
    return compile_sources([(fileId, text)], mode=mode)


def attributed(text, mode=OO):
    """The attributed unit of text."""
    return compile_text(text, mode).attributions[0]


def desugared_text(text, mode=OO):
    return emit(compile_text(text, mode).desugared[0])


def error_codes(text, mode=OO):
    """The codes of the errors reported for text; an empty list if it compiles."""
    try:
        compile_text(text, mode)
    except CompileError as e:
        return e.codes
    return []


def run_text(text, entry=None, mode=OO):
    result = compile_text(text, mode)
    return evaluate_program(result.program, result.table, entry=entry)
