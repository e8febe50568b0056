from . import Ast
from .Ast import PRECEDENCE
from .Diagnostics import CompileError, error
from .Tokens import tokenize, split_shift

PRIMITIVE_TYPES = frozenset(['int', 'long', 'double', 'boolean', 'char'])
MODIFIERS = frozenset(['public', 'static', 'native', 'abstract'])
_CLOSERS = {'(': ')', '[': ']', '{': '}'}


class ParseError(Exception):
    def __init__(self, diagnostic):
        self.diagnostic = diagnostic
        super(ParseError, self).__init__(diagnostic.message)


class Parser(object):
    """
    Recursive-descent parser over a token stream.  Binary expressions
    are parsed by precedence climbing over ``Ast.PRECEDENCE``.

    Parameters
    ----------
    tokens : list of Token
        A token stream ending with an EOF token, as returned by
        :func:`oodc.Tokens.tokenize`.
    """
    def __init__(self, tokens):
        self.tokens = list(tokens)
        self.pos = 0

    ### token helpers

    @property
    def token(self):
        return self.tokens[self.pos]

    def peek(self, k=1):
        return self.tokens[min(self.pos + k, len(self.tokens) - 1)]

    def advance(self):
        token = self.tokens[self.pos]
        if token.kind != 'EOF':
            self.pos += 1
        return token

    def at_op(self, *lexemes):
        return self.token.is_op(*lexemes)

    def at_keyword(self, *lexemes):
        return self.token.is_keyword(*lexemes)

    def fail(self, expected):
        raise ParseError(error('E010', self.token.span,
            'unexpected %s; expected %s' % (self.token, expected)))

    def expect_op(self, lexeme):
        if not self.at_op(lexeme):
            self.fail("'%s'" % lexeme)
        return self.advance()

    def expect_keyword(self, lexeme):
        if not self.at_keyword(lexeme):
            self.fail("'%s'" % lexeme)
        return self.advance()

    def expect_identifier(self):
        if self.token.kind != 'identifier':
            self.fail('an identifier')
        return self.advance()

    def close(self, opener):
        """Consume the delimiter matching the token opener."""
        closer = _CLOSERS[opener.lexeme]
        if self.at_op(closer):
            return self.advance()
        if self.token.kind == 'EOF' or self.at_op(*_CLOSERS.values()):
            raise ParseError(error('E011', opener.span,
                "unbalanced delimiter: '%s' is not closed (found %s)" % (opener.lexeme, self.token)))
        self.fail("'%s'" % closer)

    def span_from(self, start):
        """Span from the start token to the last consumed token."""
        return start.span.cover(self.tokens[self.pos - 1].span)

    ### declarations

    def parse_unit(self):
        decls = []
        while self.token.kind != 'EOF':
            if self.at_op('}', ')', ']'):
                raise ParseError(error('E011', self.token.span,
                    'unbalanced delimiter: unmatched %s' % (self.token,)))
            decls.append(self.parse_class())
        return decls

    def parse_modifiers(self):
        modifiers = []
        while self.token.kind == 'keyword' and self.token.lexeme in MODIFIERS:
            modifiers.append(self.advance().lexeme)
        return modifiers

    def parse_class(self):
        start = self.token
        modifiers = self.parse_modifiers()
        if not self.at_keyword('class', 'interface'):
            self.fail("'class' or 'interface'")
        declKind = self.advance().lexeme
        name = self.expect_identifier().lexeme
        typeParams = self.parse_type_params()

        superclass, interfaces = None, []
        if declKind == 'class':
            if self.at_keyword('extends'):
                self.advance()
                superclass = self.parse_type()
            if self.at_keyword('implements'):
                self.advance()
                interfaces = self.parse_type_list()
        elif self.at_keyword('extends'):
            self.advance()
            interfaces = self.parse_type_list()

        opener = self.expect_op('{')
        members = []
        while not self.at_op('}'):
            if self.token.kind == 'EOF':
                self.close(opener)
            members.extend(self.parse_member(name))
        self.close(opener)
        return Ast.ClassDecl(declKind, modifiers, name, typeParams, superclass,
            interfaces, members, span=self.span_from(start))

    def parse_type_list(self):
        types = [self.parse_type()]
        while self.at_op(','):
            self.advance()
            types.append(self.parse_type())
        return types

    def parse_type_params(self):
        if not self.at_op('<'):
            return []
        opener = self.advance()
        params = []
        while True:
            start = self.token
            name = self.expect_identifier().lexeme
            bound = None
            if self.at_keyword('extends'):
                self.advance()
                bound = self.parse_type()
            params.append(Ast.TypeParam(name, bound, span=self.span_from(start)))
            if not self.at_op(','):
                break
            self.advance()
        self.close_angle(opener)
        return params

    def close_angle(self, opener):
        if self.at_op('>>'):
            first, second = split_shift(self.token)
            self.tokens[self.pos:self.pos+1] = [first, second]
        if not self.at_op('>'):
            self.fail("'>'")
        return self.advance()

    def parse_type(self):
        start = self.token
        if self.token.kind == 'keyword' and self.token.lexeme in PRIMITIVE_TYPES | set(['void']):
            name, args = self.advance().lexeme, []
        else:
            name = self.expect_identifier().lexeme
            args = []
            if self.at_op('<'):
                opener = self.advance()
                args = self.parse_type_list()
                self.close_angle(opener)
        isArray = False
        if self.at_op('[') and self.peek().is_op(']'):
            self.advance()
            self.advance()
            isArray = True
        return Ast.TypeRef(name, args, isArray, span=self.span_from(start))

    def parse_member(self, className):
        start = self.token
        modifiers = self.parse_modifiers()
        typeParams = self.parse_type_params()

        if self.token.kind == 'identifier' and self.token.lexeme == className and self.peek().is_op('('):
            self.advance()
            params = self.parse_params()
            body = self.parse_body()
            return [Ast.ConstructorDecl(modifiers, className, params, body, span=self.span_from(start))]

        returnType = self.parse_type()
        name = self.expect_identifier().lexeme
        if self.at_op('('):
            params = self.parse_params()
            body = self.parse_body()
            return [Ast.MethodDecl(modifiers, typeParams, returnType, name, params, body,
                span=self.span_from(start))]

        if typeParams:
            self.fail("'('")
        names = [name]
        while self.at_op(','):
            self.advance()
            names.append(self.expect_identifier().lexeme)
        self.expect_op(';')
        return [Ast.FieldDecl(modifiers, returnType, names, span=self.span_from(start))]

    def parse_params(self):
        opener = self.expect_op('(')
        params = []
        if not self.at_op(')'):
            while True:
                start = self.token
                typeRef = self.parse_type()
                name = self.expect_identifier().lexeme
                params.append(Ast.Param(typeRef, name, span=self.span_from(start)))
                if not self.at_op(','):
                    break
                self.advance()
        self.close(opener)
        return params

    def parse_body(self):
        if self.at_op(';'):
            self.advance()
            return None
        return self.parse_block()

    ### statements

    def parse_block(self):
        opener = self.expect_op('{')
        stmts = []
        while not self.at_op('}'):
            if self.token.kind == 'EOF':
                self.close(opener)
            stmts.append(self.parse_statement())
        self.close(opener)
        return Ast.Block(stmts, span=self.span_from(opener))

    def parse_statement(self):
        start = self.token
        if self.at_op('{'):
            return self.parse_block()

        if self.at_keyword('if'):
            self.advance()
            cond = self.parse_condition()
            then = self.parse_statement()
            orelse = None
            if self.at_keyword('else'):
                self.advance()
                orelse = self.parse_statement()
            return Ast.If(cond, then, orelse, span=self.span_from(start))

        if self.at_keyword('while'):
            self.advance()
            cond = self.parse_condition()
            body = self.parse_statement()
            return Ast.While(cond, body, span=self.span_from(start))

        if self.at_keyword('return'):
            self.advance()
            value = None
            if not self.at_op(';'):
                value = self.parse_expression()
            self.expect_op(';')
            return Ast.Return(value, span=self.span_from(start))

        if self.looks_like_declaration():
            typeRef = self.parse_type()
            name = self.expect_identifier().lexeme
            init = None
            if self.at_op('='):
                self.advance()
                init = self.parse_expression()
            self.expect_op(';')
            return Ast.LocalVar(typeRef, name, init, span=self.span_from(start))

        expr = self.parse_expression()
        self.expect_op(';')
        return Ast.ExprStmt(expr, span=self.span_from(start))

    def parse_condition(self):
        opener = self.expect_op('(')
        cond = self.parse_expression()
        self.close(opener)
        return cond

    def looks_like_declaration(self):
        """
        Whether the statement starting at the current token is a local
        variable declaration, i.e. a type followed by an identifier.
        Scans ahead without consuming or splitting tokens.
        """
        token = self.token
        if token.kind == 'keyword':
            return token.lexeme in PRIMITIVE_TYPES
        if token.kind != 'identifier':
            return False
        i = self.pos + 1
        if self.tokens[i].is_op('<'):
            depth = 1
            i += 1
            while depth > 0:
                t = self.tokens[i]
                if t.is_op('<'):
                    depth += 1
                elif t.is_op('>'):
                    depth -= 1
                elif t.is_op('>>'):
                    depth -= 2
                elif not (t.kind == 'identifier' or t.is_op(',', '[', ']')
                          or (t.kind == 'keyword' and t.lexeme in PRIMITIVE_TYPES)):
                    return False
                i += 1
            if depth < 0:
                return False
        if self.tokens[i].is_op('[') and self.tokens[i+1].is_op(']'):
            i += 2
        return self.tokens[i].kind == 'identifier'

    ### expressions

    def parse_expression(self):
        start = self.token
        target = self.parse_binary(min(PRECEDENCE.values()))
        if not self.at_op('='):
            return target

        equals = self.advance()
        value = self.parse_expression()
        span = self.span_from(start)
        inner = Ast.unparen(target)
        if isinstance(inner, Ast.Index) and inner is target:
            return Ast.IndexAssign(inner.target, inner.index, value, span=span, opSpan=equals.span)
        if isinstance(inner, (Ast.Name, Ast.FieldAccess)) and inner is target:
            return Ast.Assign(target, value, span=span, opSpan=equals.span)
        raise ParseError(error('E012', target.span, 'invalid assignment target'))

    def parse_binary(self, minPrecedence):
        start = self.token
        left = self.parse_unary()
        while self.token.kind == 'operator' and PRECEDENCE.get(self.token.lexeme, 0) >= minPrecedence:
            opToken = self.advance()
            right = self.parse_binary(PRECEDENCE[opToken.lexeme] + 1)
            left = Ast.Binary(opToken.lexeme, left, right, span=self.span_from(start),
                opSpan=opToken.span)
        return left

    def parse_unary(self):
        if self.at_op('-', '~', '!'):
            opToken = self.advance()
            operand = self.parse_unary()
            return Ast.Unary(opToken.lexeme, operand, span=self.span_from(opToken),
                opSpan=opToken.span)
        return self.parse_postfix()

    def parse_postfix(self):
        start = self.token
        expr = self.parse_primary()
        while True:
            if self.at_op('.'):
                self.advance()
                name = self.expect_identifier().lexeme
                if self.at_op('('):
                    args = self.parse_args()
                    expr = Ast.MethodCall(expr, name, args, span=self.span_from(start))
                else:
                    expr = Ast.FieldAccess(expr, name, span=self.span_from(start))
            elif self.at_op('['):
                opener = self.advance()
                index = self.parse_expression()
                self.close(opener)
                expr = Ast.Index(expr, index, span=self.span_from(start), opSpan=opener.span)
            else:
                return expr

    def parse_args(self):
        opener = self.expect_op('(')
        args = []
        if not self.at_op(')'):
            args.append(self.parse_expression())
            while self.at_op(','):
                self.advance()
                args.append(self.parse_expression())
        self.close(opener)
        return args

    def parse_primary(self):
        token = self.token
        if token.kind in ('int', 'long', 'double', 'string'):
            self.advance()
            return Ast.Literal(token.kind, token.lexeme, span=token.span)
        if token.is_keyword('true', 'false'):
            self.advance()
            return Ast.Literal('boolean', token.lexeme, span=token.span)
        if token.is_keyword('null'):
            self.advance()
            return Ast.Literal('null', token.lexeme, span=token.span)
        if token.is_keyword('this'):
            self.advance()
            return Ast.This(span=token.span)
        if token.is_keyword('new'):
            return self.parse_creator()
        if token.kind == 'identifier':
            self.advance()
            if self.at_op('('):
                args = self.parse_args()
                return Ast.MethodCall(None, token.lexeme, args, span=self.span_from(token))
            return Ast.Name(token.lexeme, span=token.span)
        if token.is_op('('):
            opener = self.advance()
            expr = self.parse_expression()
            self.close(opener)
            return Ast.Paren(expr, span=self.span_from(opener))
        self.fail('an expression')

    def parse_creator(self):
        start = self.advance()
        typeStart = self.token
        if self.token.kind == 'keyword' and self.token.lexeme in PRIMITIVE_TYPES:
            name, args = self.advance().lexeme, []
        else:
            name = self.expect_identifier().lexeme
            args = []
            if self.at_op('<'):
                opener = self.advance()
                args = self.parse_type_list()
                self.close_angle(opener)
        typeRef = Ast.TypeRef(name, args, False, span=self.span_from(typeStart))

        if self.at_op('['):
            opener = self.advance()
            size = self.parse_expression()
            self.close(opener)
            return Ast.NewArray(typeRef, size, span=self.span_from(start))
        if name in PRIMITIVE_TYPES:
            self.fail("'['")
        ctorArgs = self.parse_args()
        return Ast.New(typeRef, ctorArgs, span=self.span_from(start))


def parse_unit(tokens):
    """
    Parse a token stream into a compilation unit.

    Parameters
    ----------
    tokens : list of Token
        Token stream ending with EOF.

    Returns
    -------
    list of :class:`oodc.Ast.ClassDecl`

    Raises
    ------
    CompileError
        E010 for an unexpected token, E011 for an unbalanced delimiter
        and E012 for an invalid assignment target.
    """
    try:
        return Parser(tokens).parse_unit()
    except ParseError as e:
        raise CompileError([e.diagnostic])


def parse_source(source, fileId='<input>'):
    """Tokenize and parse source text into a compilation unit."""
    return parse_unit(tokenize(source, fileId))


def parse_expression(source, fileId='<input>'):
    """Parse a single expression, e.g. ``'a + b*c'``."""
    parser = Parser(tokenize(source, fileId))
    try:
        expr = parser.parse_expression()
        if parser.token.kind != 'EOF':
            parser.fail('end of expression')
    except ParseError as e:
        raise CompileError([e.diagnostic])
    return expr
