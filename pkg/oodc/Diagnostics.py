from collections import namedtuple


class Span(namedtuple("Span", ["file", "offset", "line", "column", "length"])):
    """
    A region of a source file.

    Attributes
    ----------
    file : str
        Identifier of the source file, usually its path.
    offset : int
        Character offset of the first character of the region.
    line : int
        1-based line of the first character.
    column : int
        1-based column of the first character.
    length : int
        Number of characters covered.  Only the end-of-file token has a
        span of length zero.
    """
    __slots__ = ()

    @property
    def end(self):
        return self.offset + self.length

    def cover(self, other):
        """
        The smallest span containing both this span and other.

        Parameters
        ----------
        other : Span or None
            If None then this span is returned unchanged.

        Returns
        -------
        Span
        """
        if other is None:
            return self
        first = self if self.offset <= other.offset else other
        end = max(self.end, other.end)
        return Span(first.file, first.offset, first.line, first.column, end - first.offset)

    def contains(self, other):
        return (self.file == other.file and self.offset <= other.offset
                and other.end <= self.end)

    def __str__(self):
        return '%s:%i:%i' % (self.file, self.line, self.column)


SEVERITIES = ('error', 'warning', 'note')


class Diagnostic(namedtuple("Diagnostic", ["code", "severity", "span", "message"])):
    """
    A message about a source program.

    Attributes
    ----------
    code : str
        Stable identifier such as 'E130' or 'W050'.
    severity : {'error', 'warning', 'note'}
    span : Span
    message : str
    """
    __slots__ = ()

    @property
    def isError(self):
        return self.severity == 'error'

    def sort_key(self):
        return (self.span.file, self.span.line, self.span.column, self.code)

    def __str__(self):
        return format_diagnostic(self)


def error(code, span, message):
    return Diagnostic(code, 'error', span, message)


def warning(code, span, message):
    return Diagnostic(code, 'warning', span, message)


def note(code, span, message):
    return Diagnostic(code, 'note', span, message)


def format_diagnostic(d):
    """
    Render a diagnostic as a single line of the form
    ``file:line:col: severity[CODE]: message``.

    Parameters
    ----------
    d : Diagnostic

    Returns
    -------
    str
    """
    return '%s:%i:%i: %s[%s]: %s' % (d.span.file, d.span.line, d.span.column,
        d.severity, d.code, d.message)


def sort_diagnostics(diagnostics):
    """Sort diagnostics by (file, line, column, code), dropping exact repeats."""
    unique = []
    for d in sorted(diagnostics, key=Diagnostic.sort_key):
        if not unique or unique[-1] != d:
            unique.append(d)
    return unique


def format_diagnostics(diagnostics):
    """Format a list of diagnostics as text, one sorted line per diagnostic."""
    return ''.join(format_diagnostic(d) + '\n' for d in sort_diagnostics(diagnostics))


def has_errors(diagnostics, warningsAsErrors=False):
    for d in diagnostics:
        if d.severity == 'error' or (warningsAsErrors and d.severity == 'warning'):
            return True
    return False


class CompileError(Exception):
    """
    Raised when a compilation stage produced at least one error.

    Attributes
    ----------
    diagnostics : list of Diagnostic
        Everything the failing stage reported, including any warnings
        and notes.
    """
    def __init__(self, diagnostics):
        self.diagnostics = sort_diagnostics(diagnostics)
        super(CompileError, self).__init__(format_diagnostics(self.diagnostics).rstrip('\n'))

    @property
    def codes(self):
        return [d.code for d in self.diagnostics if d.isError]


class InterpreterError(RuntimeError):
    """
    A runtime error of an interpreted program.

    Attributes
    ----------
    code : str
        R001 null receiver, R002 index out of bounds, R003 division by
        zero, R004 missing native binding, R005 malformed number.
    span : Span or None
        The expression being evaluated, when known.
    """
    def __init__(self, code, message, span=None):
        self.code = code
        self.span = span
        self.message = message
        super(InterpreterError, self).__init__(message)

    def __str__(self):
        where = '%s: ' % (self.span,) if self.span is not None else ''
        return '%sruntime error[%s]: %s' % (where, self.code, self.message)
