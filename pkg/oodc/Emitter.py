"""
Pretty-printing of trees back to MJ-OO source.
"""
from . import Ast
from .Ast import node_precedence, UNARY_PRECEDENCE, POSTFIX_PRECEDENCE, ASSIGN_PRECEDENCE

INDENT = '    '


def emit_type(ref):
    return str(ref)


def _type_params(params):
    if not params:
        return ''
    parts = []
    for p in params:
        parts.append(p.name if p.bound is None else '%s extends %s' % (p.name, emit_type(p.bound)))
    return '<%s>' % ', '.join(parts)


def _modifiers(modifiers):
    return ''.join(m + ' ' for m in modifiers)


def emit_expression(node, minPrecedence=0):
    """
    Source text of an expression, parenthesized if it binds less tightly
    than minPrecedence.
    """
    text = _expression(node)
    if node_precedence(node) < minPrecedence:
        return '(' + text + ')'
    return text


def _args(args):
    return ', '.join(emit_expression(a) for a in args)


def _postfix_target(node):
    return emit_expression(node, POSTFIX_PRECEDENCE)


def _expression(node):
    if isinstance(node, Ast.Literal):
        return node.text
    if isinstance(node, Ast.Name):
        return node.name
    if isinstance(node, Ast.This):
        return 'this'
    if isinstance(node, Ast.Paren):
        return '(' + emit_expression(node.expr) + ')'
    if isinstance(node, Ast.FieldAccess):
        return '%s.%s' % (_postfix_target(node.target), node.name)
    if isinstance(node, Ast.MethodCall):
        if node.target is None:
            return '%s(%s)' % (node.name, _args(node.args))
        return '%s.%s(%s)' % (_postfix_target(node.target), node.name, _args(node.args))
    if isinstance(node, Ast.New):
        return 'new %s(%s)' % (emit_type(node.typeRef), _args(node.args))
    if isinstance(node, Ast.NewArray):
        return 'new %s[%s]' % (emit_type(node.elementType), emit_expression(node.size))
    if isinstance(node, Ast.Index):
        return '%s[%s]' % (_postfix_target(node.target), emit_expression(node.index))
    if isinstance(node, Ast.IndexAssign):
        return '%s[%s] = %s' % (_postfix_target(node.target), emit_expression(node.index),
            emit_expression(node.value, ASSIGN_PRECEDENCE))
    if isinstance(node, Ast.Assign):
        return '%s = %s' % (_postfix_target(node.target), emit_expression(node.value, ASSIGN_PRECEDENCE))
    if isinstance(node, Ast.Unary):
        operand = emit_expression(node.operand, UNARY_PRECEDENCE)
        if node.op == '-' and operand.startswith('-'):
            return '- ' + operand
        return node.op + operand
    if isinstance(node, Ast.Binary):
        p = Ast.PRECEDENCE[node.op]
        # left-associative: the right operand must bind strictly tighter
        return '%s %s %s' % (emit_expression(node.left, p), node.op, emit_expression(node.right, p + 1))
    raise TypeError('cannot emit %s' % type(node).__name__)


def _ends_open(stmt):
    """Whether stmt ends in an if without else, which would capture a following else."""
    if isinstance(stmt, Ast.If):
        return stmt.orelse is None or _ends_open(stmt.orelse)
    if isinstance(stmt, Ast.While):
        return _ends_open(stmt.body)
    return False


class Emitter(object):
    """Accumulates the lines of one compilation unit."""
    def __init__(self):
        self.lines = []

    def line(self, depth, text):
        self.lines.append(INDENT*depth + text)

    def unit(self, unit):
        for i, decl in enumerate(unit):
            if i:
                self.lines.append('')
            self.class_decl(decl)

    def class_decl(self, decl):
        header = '%s%s %s%s' % (_modifiers(decl.modifiers), decl.declKind, decl.name,
            _type_params(decl.typeParams))
        if decl.declKind == 'interface':
            if decl.interfaces:
                header += ' extends ' + ', '.join(emit_type(t) for t in decl.interfaces)
        else:
            if decl.superclass is not None:
                header += ' extends ' + emit_type(decl.superclass)
            if decl.interfaces:
                header += ' implements ' + ', '.join(emit_type(t) for t in decl.interfaces)
        self.line(0, header + ' {')
        for i, member in enumerate(decl.members):
            if i:
                self.lines.append('')
            self.member(member, 1)
        self.line(0, '}')

    def member(self, member, depth):
        mods = _modifiers(member.modifiers)
        if isinstance(member, Ast.FieldDecl):
            self.line(depth, '%s%s %s;' % (mods, emit_type(member.typeRef), ', '.join(member.names)))
            return
        params = ', '.join('%s %s' % (emit_type(p.typeRef), p.name) for p in member.params)
        if isinstance(member, Ast.ConstructorDecl):
            header = '%s%s(%s)' % (mods, member.name, params)
        else:
            typeParams = _type_params(member.typeParams)
            header = '%s%s%s %s(%s)' % (mods, typeParams + ' ' if typeParams else '',
                emit_type(member.returnType), member.name, params)
        if member.body is None:
            self.line(depth, header + ';')
        else:
            self.block(member.body, depth, header + ' ')

    def block(self, block, depth, prefix=''):
        self.line(depth, prefix + '{')
        for stmt in block.stmts:
            self.statement(stmt, depth + 1)
        self.line(depth, '}')

    def nested(self, stmt, depth, prefix):
        """A statement in the branch of an if or the body of a while."""
        if isinstance(stmt, Ast.Block):
            self.block(stmt, depth, prefix + ' ')
        else:
            self.line(depth, prefix)
            self.statement(stmt, depth + 1)

    def statement(self, stmt, depth, prefix=''):
        if isinstance(stmt, Ast.Block):
            self.block(stmt, depth, prefix)
        elif isinstance(stmt, Ast.LocalVar):
            text = '%s %s' % (emit_type(stmt.typeRef), stmt.name)
            if stmt.init is not None:
                text += ' = ' + emit_expression(stmt.init)
            self.line(depth, prefix + text + ';')
        elif isinstance(stmt, Ast.ExprStmt):
            self.line(depth, prefix + emit_expression(stmt.expr) + ';')
        elif isinstance(stmt, Ast.Return):
            if stmt.value is None:
                self.line(depth, prefix + 'return;')
            else:
                self.line(depth, prefix + 'return ' + emit_expression(stmt.value) + ';')
        elif isinstance(stmt, Ast.While):
            self.nested(stmt.body, depth, prefix + 'while (%s)' % emit_expression(stmt.cond))
        elif isinstance(stmt, Ast.If):
            self.if_statement(stmt, depth, prefix)
        else:
            raise TypeError('cannot emit %s' % type(stmt).__name__)

    def if_statement(self, stmt, depth, prefix):
        then, orelse = stmt.then, stmt.orelse
        if orelse is not None and _ends_open(then):
            # braces keep the else with this if
            then = Ast.Block([then], span=then.span)
        self.nested(then, depth, prefix + 'if (%s)' % emit_expression(stmt.cond))
        if orelse is None:
            return
        if isinstance(then, Ast.Block):
            # continue on the closing brace line: "} else {"
            closing = self.lines.pop().lstrip()
            elsePrefix = closing + ' else'
        else:
            elsePrefix = 'else'
        if isinstance(orelse, Ast.If):
            self.if_statement(orelse, depth, elsePrefix + ' ')
        else:
            self.nested(orelse, depth, elsePrefix)


def emit(unit):
    """
    Render a compilation unit as source text.

    Parameters
    ----------
    unit : list of :class:`oodc.Ast.ClassDecl`
        A parsed or desugared unit.

    Returns
    -------
    str
        Deterministic text with four-space indentation, one statement
        per line, LF line endings and a final newline.  Parentheses are
        emitted only where the tree's nesting differs from what operator
        precedence and associativity would give.  Braces are added around
        an if-branch that ends in an open if when an else follows.
        Otherwise parsing the text yields a tree equal to unit.
    """
    emitter = Emitter()
    emitter.unit(unit)
    return '\n'.join(emitter.lines) + '\n'
