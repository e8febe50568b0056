import re
from collections import namedtuple

from .Diagnostics import Span, CompileError, error

KEYWORDS = frozenset([
    'abstract', 'boolean', 'char', 'class', 'double', 'else', 'extends',
    'false', 'if', 'implements', 'int', 'interface', 'long', 'native',
    'new', 'null', 'public', 'return', 'static', 'this', 'true', 'void',
    'while'])

# longest first so that maximal munch falls out of the alternation order
OPERATORS = ['<=', '>=', '==', '!=', '&&', '||', '<<', '>>',
             '+', '-', '*', '/', '%', '&', '|', '^', '~', '!', '<', '>', '=',
             '(', ')', '{', '}', '[', ']', ';', ',', '.']

TOKEN_KINDS = ('keyword', 'identifier', 'int', 'long', 'double', 'string', 'operator', 'EOF')

_trivia = re.compile(r'(?:\s+|//[^\n]*|/\*(?:.|\n)*?\*/)*')
_token = re.compile(r'''
    (?P<double>\d+\.\d+)
  | (?P<long>\d+[lL])
  | (?P<int>\d+)
  | (?P<word>[A-Za-z_$][A-Za-z0-9_$]*)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<operator>%s)
''' % '|'.join(re.escape(op) for op in OPERATORS), re.VERBOSE)
_unterminatedString = re.compile(r'"(?:[^"\\\n]|\\.)*')


class Token(namedtuple("Token", ["kind", "lexeme", "span", "leading"])):
    """
    A lexical token.

    Attributes
    ----------
    kind : str
        One of TOKEN_KINDS.
    lexeme : str
        The exact source text of the token.
    span : Span
    leading : str
        The whitespace and comments between the previous token and this
        one, so that joining ``leading + lexeme`` over a token stream
        reproduces the source exactly.
    """
    __slots__ = ()

    def is_op(self, *lexemes):
        return self.kind == 'operator' and self.lexeme in lexemes

    def is_keyword(self, *lexemes):
        return self.kind == 'keyword' and self.lexeme in lexemes

    def __str__(self):
        if self.kind == 'EOF':
            return 'end of file'
        return "'%s'" % self.lexeme


class _Position(object):
    """Tracks line and column while scanning forward through the source."""
    def __init__(self, source, fileId):
        self.source = source
        self.fileId = fileId
        self.offset = 0
        self.line = 1
        self.column = 1

    def span(self, length):
        return Span(self.fileId, self.offset, self.line, self.column, length)

    def advance(self, text):
        newlines = text.count('\n')
        if newlines:
            self.line += newlines
            self.column = len(text) - text.rfind('\n')
        else:
            self.column += len(text)
        self.offset += len(text)


def tokenize(source, fileId='<input>'):
    """
    Split MJ-OO source text into tokens.

    Parameters
    ----------
    source : str
        The program text.
    fileId : str, optional
        Name recorded in every token span.

    Returns
    -------
    list of Token
        The token stream, always terminated by a single 'EOF' token.

    Raises
    ------
    CompileError
        With E001 for each unrecognized character, E002 for each
        unterminated string literal and E003 for an unterminated block
        comment.
    """
    pos = _Position(source, fileId)
    tokens = []
    diagnostics = []
    leading = ''

    while True:
        trivia = _trivia.match(source, pos.offset).group(0)
        leading += trivia
        pos.advance(trivia)

        if pos.offset >= len(source):
            break

        if source.startswith('/*', pos.offset):
            diagnostics.append(error('E003', pos.span(2), 'unterminated comment'))
            leading += source[pos.offset:]
            pos.advance(source[pos.offset:])
            break

        m = _token.match(source, pos.offset)
        if m is None:
            unterminated = _unterminatedString.match(source, pos.offset)
            if unterminated is not None:
                text = unterminated.group(0)
                diagnostics.append(error('E002', pos.span(len(text)), 'unterminated string literal'))
            else:
                text = source[pos.offset]
                diagnostics.append(error('E001', pos.span(1), "unrecognized character '%s'" % text))
            # keep skipped text as trivia so the stream still reproduces the input
            leading += text
            pos.advance(text)
            continue

        lexeme = m.group(0)
        kind = m.lastgroup
        if kind == 'word':
            kind = 'keyword' if lexeme in KEYWORDS else 'identifier'
        tokens.append(Token(kind, lexeme, pos.span(len(lexeme)), leading))
        leading = ''
        pos.advance(lexeme)

    tokens.append(Token('EOF', '', pos.span(0), leading))

    if diagnostics:
        raise CompileError(diagnostics)
    return tokens


def untokenize(tokens):
    """Reassemble source text from a token stream."""
    return ''.join(token.leading + token.lexeme for token in tokens)


def split_shift(token):
    """
    Split a '>>' token into two '>' tokens.  Used when '>>' closes two
    nested type-argument lists, as in ``Map<String, List<Foo>>``.
    """
    first = Token('operator', '>', token.span._replace(length=1), token.leading)
    secondSpan = token.span._replace(offset=token.span.offset + 1,
        column=token.span.column + 1, length=1)
    return first, Token('operator', '>', secondSpan, '')
