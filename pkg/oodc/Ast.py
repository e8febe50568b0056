"""
Abstract syntax tree of MJ-OO.

Every node lists its structural fields in ``_fields``.  Equality is
structural: spans, operator-token spans and attribution metadata
(``type``, ``resolution``, ``method``, ...) are ignored and parentheses
are transparent, so ``(a)`` equals ``a``.
"""

# binary operator precedence, higher binds tighter
PRECEDENCE = {
    '||': 2,
    '&&': 3,
    '|': 4,
    '^': 5,
    '&': 6,
    '==': 7, '!=': 7,
    '<': 8, '<=': 8, '>': 8, '>=': 8,
    '<<': 9, '>>': 9,
    '+': 10, '-': 10,
    '*': 11, '/': 11, '%': 11,
}
ASSIGN_PRECEDENCE = 1
UNARY_PRECEDENCE = 12
POSTFIX_PRECEDENCE = 13

BINARY_OPERATORS = frozenset(PRECEDENCE)
UNARY_OPERATORS = frozenset(['-', '~', '!'])
ARITHMETIC_OPERATORS = frozenset(['+', '-', '*', '/', '%', '&', '|', '^', '<<', '>>'])
RELATIONAL_OPERATORS = frozenset(['<', '<=', '>', '>='])
EQUALITY_OPERATORS = frozenset(['==', '!='])
LOGICAL_OPERATORS = frozenset(['&&', '||'])


class Node(object):
    """Base class of all tree nodes."""
    _fields = ()
    kind = 'node'

    def __init__(self, *args, **kwargs):
        if len(args) != len(self._fields):
            raise TypeError('%s takes %i fields (%i given)' % (type(self).__name__, len(self._fields), len(args)))
        for name, value in zip(self._fields, args):
            setattr(self, name, value)
        self.span = kwargs.pop('span', None)
        for name, value in kwargs.items():
            setattr(self, name, value)

    def fields(self):
        return [getattr(self, name) for name in self._fields]

    def replace(self, **changes):
        """
        A copy of this node with some fields replaced.  The span and any
        extra syntactic attributes (such as ``opSpan``) are kept while
        attribution metadata is dropped.
        """
        values = [changes.pop(name, getattr(self, name)) for name in self._fields]
        extra = dict((k, v) for k, v in vars(self).items()
                     if k not in self._fields and k in _SYNTACTIC_ATTRS)
        extra.update(changes)
        return type(self)(*values, **extra)

    def children(self):
        """Child nodes, in source order."""
        for value in self.fields():
            if isinstance(value, Node):
                yield value
            elif isinstance(value, (list, tuple)):
                for item in value:
                    if isinstance(item, Node):
                        yield item

    def __eq__(self, other):
        a, b = unparen(self), unparen(other)
        if a is not self or b is not other:
            return a == b
        if type(a) is not type(b):
            return False
        return a.fields() == b.fields()

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return '%s(%s)' % (type(self).__name__, ', '.join(repr(v) for v in self.fields()))


_SYNTACTIC_ATTRS = frozenset(['span', 'opSpan'])


def unparen(node):
    while isinstance(node, Paren):
        node = node.expr
    return node


def walk(node):
    """Yield node and all its descendants in pre-order."""
    stack = [node]
    while stack:
        n = stack.pop()
        yield n
        stack.extend(reversed(list(n.children())))


def walk_unit(unit):
    for decl in unit:
        for node in walk(decl):
            yield node


### Types written in source

class TypeRef(Node):
    """A type as written: a name, optional type arguments and '[]'."""
    _fields = ('name', 'args', 'isArray')
    kind = 'type'

    def __str__(self):
        s = self.name
        if self.args:
            s += '<%s>' % ', '.join(str(a) for a in self.args)
        return s + ('[]' if self.isArray else '')


class TypeParam(Node):
    _fields = ('name', 'bound')
    kind = 'type-parameter'


### Expressions

class Expr(Node):
    pass


class Literal(Expr):
    """A literal; literalKind is one of int, long, double, string, boolean, null."""
    _fields = ('literalKind', 'text')
    kind = 'literal'


class Name(Expr):
    _fields = ('name',)
    kind = 'name'


class This(Expr):
    kind = 'this'


class FieldAccess(Expr):
    _fields = ('target', 'name')
    kind = 'field-access'


class MethodCall(Expr):
    """``target.name(args)``; target is None for an unqualified call."""
    _fields = ('target', 'name', 'args')
    kind = 'method-call'


class New(Expr):
    _fields = ('typeRef', 'args')
    kind = 'constructor-call'


class NewArray(Expr):
    _fields = ('elementType', 'size')
    kind = 'array-creation'


class Binary(Expr):
    _fields = ('op', 'left', 'right')
    kind = 'binary'


class Unary(Expr):
    _fields = ('op', 'operand')
    kind = 'unary'


class Index(Expr):
    _fields = ('target', 'index')
    kind = 'index-read'


class IndexAssign(Expr):
    _fields = ('target', 'index', 'value')
    kind = 'index-write'


class Assign(Expr):
    _fields = ('target', 'value')
    kind = 'assign'


class Paren(Expr):
    _fields = ('expr',)
    kind = 'paren'


### Statements

class Stmt(Node):
    pass


class Block(Stmt):
    _fields = ('stmts',)
    kind = 'block'


class LocalVar(Stmt):
    _fields = ('typeRef', 'name', 'init')
    kind = 'local-variable'


class ExprStmt(Stmt):
    _fields = ('expr',)
    kind = 'expression-statement'


class If(Stmt):
    _fields = ('cond', 'then', 'orelse')
    kind = 'if'


class While(Stmt):
    _fields = ('cond', 'body')
    kind = 'while'


class Return(Stmt):
    _fields = ('value',)
    kind = 'return'


### Declarations

class Decl(Node):
    def has_modifier(self, modifier):
        return modifier in self.modifiers

    @property
    def isStatic(self):
        return 'static' in self.modifiers


class ClassDecl(Decl):
    """A class or interface; ``declKind`` is 'class' or 'interface'."""
    _fields = ('declKind', 'modifiers', 'name', 'typeParams', 'superclass', 'interfaces', 'members')

    @property
    def kind(self):
        return self.declKind


class FieldDecl(Decl):
    _fields = ('modifiers', 'typeRef', 'names')
    kind = 'field'


class Param(Node):
    _fields = ('typeRef', 'name')
    kind = 'parameter'


class MethodDecl(Decl):
    """A method; body is None for native and interface methods."""
    _fields = ('modifiers', 'typeParams', 'returnType', 'name', 'params', 'body')
    kind = 'method'


class ConstructorDecl(Decl):
    _fields = ('modifiers', 'name', 'params', 'body')
    kind = 'constructor'


def node_precedence(node):
    """The binding strength of the construct at the root of node."""
    if isinstance(node, Binary):
        return PRECEDENCE[node.op]
    if isinstance(node, Unary):
        return UNARY_PRECEDENCE
    if isinstance(node, (Assign, IndexAssign)):
        return ASSIGN_PRECEDENCE
    return POSTFIX_PRECEDENCE


class NodeVisitor(object):
    """Calls ``visit_<ClassName>`` for each node, or generic_visit."""
    def visit(self, node):
        method = getattr(self, 'visit_' + type(node).__name__, self.generic_visit)
        return method(node)

    def generic_visit(self, node):
        for child in node.children():
            self.visit(child)


class NodeTransformer(NodeVisitor):
    """
    Rebuilds a tree.  ``visit_<ClassName>`` methods return the
    replacement node; generic_visit rebuilds a node from its visited
    children and never mutates its input.
    """
    def generic_visit(self, node):
        changes = {}
        for name in node._fields:
            value = getattr(node, name)
            if isinstance(value, Node):
                changes[name] = self.visit(value)
            elif isinstance(value, list):
                changes[name] = [self.visit(v) if isinstance(v, Node) else v for v in value]
        return node.replace(**changes)

    def visit_unit(self, unit):
        return [self.visit(decl) for decl in unit]


def dump(node, indent='  '):
    """
    Render a tree, or a list of trees, as indented text for debugging.

    Parameters
    ----------
    node : Node or list of Node
    indent : str, optional
        The string used for one level of indentation.

    Returns
    -------
    str
    """
    lines = []

    def format_value(value, depth):
        if isinstance(value, Node):
            emit_node(value, depth)
        elif isinstance(value, list):
            if not value:
                lines[-1] += ' []'
            for item in value:
                format_value(item, depth)
        else:
            lines[-1] += ' ' + repr(value)

    def emit_node(n, depth):
        header = indent*depth + type(n).__name__
        if n.span is not None:
            header += ' @%i:%i' % (n.span.line, n.span.column)
        nodeType = getattr(n, 'type', None)
        if isinstance(n, Expr) and nodeType is not None:
            header += ' : %s' % nodeType
        lines.append(header)
        for name in n._fields:
            lines.append(indent*(depth+1) + name + ':')
            format_value(getattr(n, name), depth+2)

    for n in (node if isinstance(node, list) else [node]):
        emit_node(n, 0)
    return '\n'.join(lines) + '\n'
