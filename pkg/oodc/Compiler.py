from collections import namedtuple

from numpydoc.docscrape import FunctionDoc

from .Diagnostics import CompileError
from .Parser import parse_source
from .Stubs import load_stubs
from .ClassModel import build_class_table
from .TypeCheck import OO, attribute_unit
from .Desugar import desugar_unit
from .Misc import update_docstring

STAGES = ('parse', 'enter', 'attribute', 'desugar')


class CompilationResult(namedtuple("CompilationResult",
        ["fileIds", "units", "table", "attributions", "desugared", "diagnostics"])):
    """
    Everything produced by compiling a set of sources.

    Attributes
    ----------
    fileIds : list of str
    units : list of list of :class:`oodc.Ast.ClassDecl`
        Parsed units, one per source.
    table : :class:`oodc.ClassModel.ClassTable`
    attributions : list of :class:`oodc.TypeCheck.Attribution`
    desugared : list of list of :class:`oodc.Ast.ClassDecl`
        Plain units, one per source.
    diagnostics : list of Diagnostic
        Warnings and notes (errors raise CompileError instead).
    """
    __slots__ = ()

    @property
    def program(self):
        """All desugared classes as a single unit."""
        return [decl for unit in self.desugared for decl in unit]


def _each(function, items):
    """Apply function to every item, gathering the diagnostics of all that fail."""
    results, diagnostics = [], []
    for item in items:
        try:
            results.append(function(item))
        except CompileError as e:
            diagnostics.extend(e.diagnostics)
    if diagnostics:
        raise CompileError(diagnostics)
    return results


def compile_stages(sources, mode=OO, stubDir=None, verbose=False):
    """
    A generator which runs the compiler pipeline one stage at a time.

    Parameters
    ----------
    sources : list of (str, str)
        Pairs of file id and source text.
    mode : :class:`oodc.TypeCheck.Mode`, optional
        OO (the default) enables operator overloading; BASE compiles the
        sources as the plain language.
    stubDir : str, optional
        Directory of stub ``.mj`` files to use instead of the bundled
        stub library.
    verbose : bool, optional
        If True print progress information as each stage completes.

    Yields
    ------
    stage : str
        'parse', 'enter', 'attribute' or 'desugar', in that order.
    state : object
        The stage's product: the list of parsed units, the class table,
        the list of attributions or the list of desugared units.

    Raises
    ------
    CompileError
        From the first stage with errors.  Within a stage every unit is
        processed before raising, so the error collects the diagnostics
        of all of them.
    """
    fileIds = [fileId for fileId, text in sources]
    units = _each(lambda source: parse_source(source[1], source[0]), sources)
    if verbose:
        print('Parsed', len(units), 'files:', ', '.join(fileIds))
    yield 'parse', units

    stubs = load_stubs(stubDir, verbose=verbose)
    table = build_class_table(units, stubs, verbose=verbose)
    yield 'enter', table

    attributions = _each(lambda unit: attribute_unit(unit, table, mode, verbose=verbose), units)
    yield 'attribute', attributions

    desugared = [desugar_unit(a, verbose=verbose) for a in attributions]
    yield 'desugar', desugared


@update_docstring(Parameters=FunctionDoc(compile_stages)['Parameters'])
def compile_sources(sources, **kwargs):
    """
    Parse, attribute and desugar a set of sources.

    Parameters
    ----------
    %s

    Returns
    -------
    result : :class:`CompilationResult <oodc.Compiler.CompilationResult>`

    Raises
    ------
    CompileError
        If any stage reported an error.
    """
    state = {}
    for stage, product in compile_stages(sources, **kwargs):
        state[stage] = product
    diagnostics = [d for a in state['attribute'] for d in a.diagnostics]
    return CompilationResult([fileId for fileId, text in sources], state['parse'], state['enter'],
        state['attribute'], state['desugar'], diagnostics)
