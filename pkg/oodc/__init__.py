from .Diagnostics import Span, Diagnostic, CompileError, InterpreterError, format_diagnostic
from .Tokens import tokenize
from .Parser import parse_unit, parse_source
from .ClassModel import build_class_table, lookup_applicable, most_specific, is_subtype, is_assignable
from .Stubs import load_stubs
from .TypeCheck import OO, BASE, attribute_unit
from .Desugar import desugar_unit
from .Emitter import emit
from .Interpreter import evaluate_program
from .Compiler import compile_sources

from .version import __version__
