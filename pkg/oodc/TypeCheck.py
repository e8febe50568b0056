"""
Attribution: typing of MJ-OO programs.

Every expression node of an attributed unit carries a ``type``.  Operator
nodes (binary, unary, index, assignment, and local variables with an
initializer) also carry a ``resolution``: Builtin when the plain language
rules type the node, or an overloaded form naming the method the operator
stands for.  The overloading rules are consulted only after the plain rules
have failed, so a program that is valid without them is typed identically
with them.
"""
import copy
from collections import namedtuple, OrderedDict

from . import Ast
from . import Types
from .Types import (NamedType, TypeVar, ArrayType, NullType, VoidType, ErrorType,
    INT, LONG, DOUBLE, BOOLEAN, STRING, NULL, VOID, ERROR,
    unboxed, is_string, binary_numeric_promotion, unary_numeric_promotion)
from .ClassModel import (AmbiguousMethodError, is_subtype, is_assignable, find_field,
    resolve_method, resolve_constructor)
from .Diagnostics import CompileError, error, warning, note

BINARY_METHODS = OrderedDict([
    ('+', 'add'),
    ('-', 'subtract'),
    ('*', 'multiply'),
    ('/', 'divide'),
    ('%', 'remainder'),
    ('&', 'and'),
    ('|', 'or'),
    ('^', 'xor'),
    ('<<', 'shiftLeft'),
    ('>>', 'shiftRight'),
])
UNARY_METHODS = OrderedDict([('-', 'negate'), ('~', 'not')])


class Mode(namedtuple("Mode", ["baseOnly"])):
    """
    Attribution mode.  With baseOnly the overloading rules are disabled
    and the checker behaves like the unextended language.
    """
    __slots__ = ()


OO = Mode(baseOnly=False)
BASE = Mode(baseOnly=True)


### operator resolutions

class _Resolution(object):
    __slots__ = ()
    isOverloaded = True

    def __eq__(self, other):
        return type(self) is type(other) and tuple(self) == tuple(other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((type(self).__name__, tuple(self)))


class Builtin(_Resolution, namedtuple("Builtin", [])):
    """The plain language rules typed the node."""
    __slots__ = ()
    isOverloaded = False


BUILTIN = Builtin()


class OverloadedBinary(_Resolution, namedtuple("OverloadedBinary", ["method"])):
    __slots__ = ()


class OverloadedUnary(_Resolution, namedtuple("OverloadedUnary", ["method"])):
    __slots__ = ()


class OverloadedCompare(_Resolution, namedtuple("OverloadedCompare", ["method", "relation"])):
    __slots__ = ()


class OverloadedIndexRead(_Resolution, namedtuple("OverloadedIndexRead", ["method"])):
    __slots__ = ()


class OverloadedIndexWrite(_Resolution, namedtuple("OverloadedIndexWrite", ["method"])):
    __slots__ = ()


class ValueOfConversion(_Resolution, namedtuple("ValueOfConversion", ["method", "targetType"])):
    """The assigned value is wrapped in the target type's static valueOf."""
    __slots__ = ()


class Typing(namedtuple("Typing", ["type", "resolution", "diagnostics"])):
    """
    Outcome of typing one operator node.  On failure type is the error
    type, resolution is None and diagnostics holds the error.
    """
    __slots__ = ()

    @property
    def ok(self):
        return self.resolution is not None


def _builtin(t):
    return Typing(t, BUILTIN, [])


def _failed(code, span, message):
    return Typing(ERROR, None, [error(code, span, message)])


def _not_applicable(span, message, operand):
    """E130, remembering operand when it is a class type."""
    if _is_receiver(operand) and unboxed(operand) is None:
        return Typing(ErrorType(ERROR.name, operand), None, [error('E130', span, message)])
    return _failed('E130', span, message)


def _operand_type(t):
    """The type an operator sees for an operand: the class operand of a failed operator if known."""
    if t.isError and t.operand is not None:
        return t.operand
    return t


def _types(*ts):
    return ', '.join(str(t) for t in ts)


def _is_receiver(t):
    """Overloading rules apply only to a receiver of reference or variable type."""
    return isinstance(t, (NamedType, TypeVar))


def _resolve_operator_method(recv, name, args, table, span):
    """(method, diagnostics); method is None when nothing applies."""
    try:
        return resolve_method(recv, name, args, table), []
    except AmbiguousMethodError as e:
        return None, [error('E120', span, "ambiguous call to '%s' on %s: %s"
            % (name, recv, ', '.join(str(m) for m in e.candidates)))]


### typing rules

def base_binary_type(op, lt, rt):
    """The plain-language type of ``lt op rt``, or None."""
    if op == '+' and (is_string(lt) or is_string(rt)):
        if isinstance(lt, VoidType) or isinstance(rt, VoidType):
            return None
        return STRING
    l, r = unboxed(lt), unboxed(rt)
    if l is None or r is None:
        return None
    if op in ('&', '|', '^') and l == BOOLEAN and r == BOOLEAN:
        return BOOLEAN
    if op in ('<<', '>>', '&', '|', '^'):
        if not (l.isIntegral and r.isIntegral):
            return None
        if op in ('<<', '>>'):
            return unary_numeric_promotion(l)
        return binary_numeric_promotion(l, r)
    if l.isNumeric and r.isNumeric:
        return binary_numeric_promotion(l, r)
    return None


def type_binary(op, lhs, rhs, table, mode, span=None):
    """
    Type a binary arithmetic, bitwise or shift operator.

    Parameters
    ----------
    op : str
        One of ``+ - * / % & | ^ << >>``.
    lhs, rhs : Type
        The operand types.
    table : :class:`oodc.ClassModel.ClassTable`
    mode : Mode
    span : Span, optional
        Location reported in diagnostics.

    Returns
    -------
    Typing
        Builtin with the standard result type when the plain rules
        apply.  Otherwise, if lhs is a reference or type variable, the
        method named by BINARY_METHODS resolved on lhs with argument rhs
        (OverloadedBinary, typed by the method's return type).  Fails
        with E130 when neither applies or E120 when the method is
        ambiguous.
    """
    lhs, rhs = _operand_type(lhs), _operand_type(rhs)
    if lhs.isError or rhs.isError:
        return Typing(ERROR, BUILTIN, [])
    t = base_binary_type(op, lhs, rhs)
    if t is not None:
        return _builtin(t)
    if not mode.baseOnly and _is_receiver(lhs):
        method, diagnostics = _resolve_operator_method(lhs, BINARY_METHODS[op], [rhs], table, span)
        if diagnostics:
            return Typing(ERROR, None, diagnostics)
        if method is not None:
            return Typing(method.returnType, OverloadedBinary(method), [])
    return _not_applicable(span, "operator '%s' not applicable to types %s" % (op, _types(lhs, rhs)), lhs)


def type_unary(op, operand, table, mode, span=None):
    """
    Type ``-e``, ``~e`` or ``!e``.  Outside the plain rules ``-``
    resolves ``negate()`` and ``~`` resolves ``not()`` on a reference
    operand; ``!`` is never overloaded.
    """
    operand = _operand_type(operand)
    if operand.isError:
        return Typing(ERROR, BUILTIN, [])
    u = unboxed(operand)
    if u is not None:
        if op == '-' and u.isNumeric:
            return _builtin(unary_numeric_promotion(u))
        if op == '~' and u.isIntegral:
            return _builtin(unary_numeric_promotion(u))
        if op == '!' and u == BOOLEAN:
            return _builtin(BOOLEAN)
    if not mode.baseOnly and op in UNARY_METHODS and _is_receiver(operand):
        method, diagnostics = _resolve_operator_method(operand, UNARY_METHODS[op], [], table, span)
        if diagnostics:
            return Typing(ERROR, None, diagnostics)
        if method is not None:
            return Typing(method.returnType, OverloadedUnary(method), [])
    return _not_applicable(span, "operator '%s' not applicable to type %s" % (op, operand), operand)


def type_compare(op, lhs, rhs, table, mode, span=None):
    """
    Type a relational operator ``< <= > >=``.  Numeric operands are
    compared directly; otherwise lhs must have an applicable
    ``compareTo(rhs)`` returning primitive int (E131 if it returns
    anything else).  The result is boolean either way.
    """
    lhs, rhs = _operand_type(lhs), _operand_type(rhs)
    if lhs.isError or rhs.isError:
        return Typing(BOOLEAN, BUILTIN, [])
    l, r = unboxed(lhs), unboxed(rhs)
    if l is not None and r is not None and l.isNumeric and r.isNumeric:
        return _builtin(BOOLEAN)
    if not mode.baseOnly and _is_receiver(lhs):
        method, diagnostics = _resolve_operator_method(lhs, 'compareTo', [rhs], table, span)
        if diagnostics:
            return Typing(ERROR, None, diagnostics)
        if method is not None:
            if method.returnType != INT:
                return _failed('E131', span, "compareTo of %s returns %s, not int"
                    % (lhs, method.returnType))
            return Typing(BOOLEAN, OverloadedCompare(method, op), [])
    return _failed('E130', span, "operator '%s' not applicable to types %s" % (op, _types(lhs, rhs)))


def type_equality(op, lhs, rhs, table, span=None):
    """``==`` and ``!=``, which are never overloaded."""
    if lhs.isError or rhs.isError:
        return _builtin(BOOLEAN)
    l, r = unboxed(lhs), unboxed(rhs)
    if l is not None and r is not None and (lhs.isPrimitive or rhs.isPrimitive):
        if (l.isNumeric and r.isNumeric) or (l == BOOLEAN and r == BOOLEAN):
            return _builtin(BOOLEAN)
    elif (lhs.isReference or isinstance(lhs, NullType)) and (rhs.isReference or isinstance(rhs, NullType)):
        if is_subtype(lhs, rhs, table) or is_subtype(rhs, lhs, table):
            return _builtin(BOOLEAN)
    return _failed('E130', span, "operator '%s' not applicable to types %s" % (op, _types(lhs, rhs)))


def type_logical(op, lhs, rhs, span=None):
    """``&&`` and ``||`` on booleans."""
    if lhs.isError or rhs.isError:
        return _builtin(BOOLEAN)
    if unboxed(lhs) == BOOLEAN and unboxed(rhs) == BOOLEAN:
        return _builtin(BOOLEAN)
    return _failed('E130', span, "operator '%s' not applicable to types %s" % (op, _types(lhs, rhs)))


def _literal_limit(bits, negated):
    """Largest literal magnitude of a signed type; 2**bits only directly after unary minus."""
    return 2**bits if negated else 2**bits - 1


def _array_index_ok(keyType):
    k = unboxed(keyType)
    return k is not None and k.isIntegral and unary_numeric_promotion(k) == INT


def type_index(isWrite, coll, key, value, table, mode, span=None):
    """
    Type ``coll[key]`` (read) or ``coll[key] = value`` (write).

    Parameters
    ----------
    isWrite : bool
    coll, key : Type
    value : Type or None
        Present exactly when isWrite.
    table : :class:`oodc.ClassModel.ClassTable`
    mode : Mode
    span : Span, optional

    Returns
    -------
    Typing
        Builtin for arrays indexed by int.  Otherwise a read resolves
        ``get(key)`` and a write resolves ``set(key, value)`` or, if set
        does not apply, ``put(key, value)``; the type is the method's
        return type.  When both set and put apply set is chosen and a
        W050 warning is attached.
    """
    if coll.isError or key.isError or (isWrite and value.isError):
        return Typing(ERROR, BUILTIN, [])
    if isinstance(coll, ArrayType):
        if not _array_index_ok(key):
            return _failed('E130', span, "operator '[]' not applicable to types %s" % _types(coll, key))
        if isWrite and not is_assignable(value, coll.element, table):
            return _failed('E130', span, "operator '[]=' not applicable to types %s" % _types(coll, key, value))
        return _builtin(coll.element)

    if not mode.baseOnly and _is_receiver(coll):
        if not isWrite:
            method, diagnostics = _resolve_operator_method(coll, 'get', [key], table, span)
            if diagnostics:
                return Typing(ERROR, None, diagnostics)
            if method is not None:
                return Typing(method.returnType, OverloadedIndexRead(method), [])
        else:
            setter, d1 = _resolve_operator_method(coll, 'set', [key, value], table, span)
            putter, d2 = _resolve_operator_method(coll, 'put', [key, value], table, span)
            if d1 and putter is None:
                return Typing(ERROR, None, d1)
            if d2 and setter is None:
                return Typing(ERROR, None, d2)
            if setter is not None:
                diagnostics = []
                if putter is not None:
                    diagnostics.append(warning('W050', span, "both 'set' and 'put' applicable; 'set' chosen"))
                return Typing(setter.returnType, OverloadedIndexWrite(setter), diagnostics)
            if putter is not None:
                return Typing(putter.returnType, OverloadedIndexWrite(putter), [])

    if isWrite:
        return _failed('E130', span, "operator '[]=' not applicable to types %s" % _types(coll, key, value))
    return _failed('E130', span, "operator '[]' not applicable to types %s" % _types(coll, key))


def type_assign(target, value, table, mode, span=None):
    """
    Type an assignment or initialization of a variable of type target
    with a value of type value.

    Plain assignability (subtyping, boxing, unboxing) gives Builtin.
    Otherwise, if target is a class type with an applicable static
    ``valueOf(value)`` whose result is assignable to target, the value
    is converted with it (ValueOfConversion).  E140 is reported when
    neither applies and E141 when the valueOf found is not static.
    """
    if target.isError or value.isError:
        return Typing(target, BUILTIN, [])
    if isinstance(value, VoidType):
        return _failed('E140', span, 'incompatible types: void cannot be converted to %s' % target)
    if is_assignable(value, target, table):
        return _builtin(target)
    if not mode.baseOnly and isinstance(target, NamedType):
        method, diagnostics = _resolve_operator_method(target, 'valueOf', [value], table, span)
        if diagnostics:
            return Typing(ERROR, None, diagnostics)
        if method is not None:
            if not method.isStatic:
                return _failed('E141', span, "valueOf(%s) of %s is not static" % (value, target.name))
            if is_assignable(method.returnType, target, table):
                return Typing(target, ValueOfConversion(method, target), [])
    return _failed('E140', span, 'incompatible types: %s cannot be converted to %s' % (value, target))


### attribution of whole units

class Attribution(namedtuple("Attribution", ["unit", "diagnostics", "mode"])):
    """
    An attributed compilation unit.

    Attributes
    ----------
    unit : list of :class:`oodc.Ast.ClassDecl`
        A copy of the input whose expression nodes carry ``type`` and
        whose operator nodes carry ``resolution``.
    diagnostics : list of Diagnostic
        Warnings and notes (errors raise instead).
    mode : Mode
    """
    __slots__ = ()


class _Scope(object):
    def __init__(self):
        self.frames = []

    def push(self):
        self.frames.append(OrderedDict())

    def pop(self):
        self.frames.pop()

    def declare(self, name, t):
        self.frames[-1][name] = t

    def lookup(self, name):
        for frame in reversed(self.frames):
            if name in frame:
                return frame[name]
        return None


class Attributor(Ast.NodeVisitor):
    """Types one compilation unit in place."""
    def __init__(self, table, mode, verbose=False):
        self.table = table
        self.mode = mode
        self.verbose = verbose
        self.diagnostics = []
        self.cls = None
        self.isStatic = False
        self.returnType = VOID
        self.typeScope = {}
        self.locals = _Scope()
        self.statementExpr = None
        self.negatedLiteral = None

    def report(self, diagnostics):
        self.diagnostics.extend(diagnostics)

    def fail(self, code, span, message):
        self.diagnostics.append(error(code, span, message))
        return ERROR

    ### types written in the source

    def resolve_type(self, ref, allowVoid=False):
        if ref.name == 'void':
            if allowVoid and not ref.isArray:
                return VOID
            return self.fail('E101', ref.span, "'void' is not allowed here")
        if ref.name in Types.PRIMITIVES:
            t = Types.primitive(ref.name)
        elif ref.name in self.typeScope:
            t = self.typeScope[ref.name]
            if ref.args:
                return self.fail('E102', ref.span, "type variable '%s' cannot have type arguments" % ref.name)
        elif ref.name in self.table:
            cls = self.table[ref.name]
            args = [self.resolve_type(a) for a in ref.args]
            if any(a.isError for a in args):
                return ERROR
            if len(args) != len(cls.typeParams) or any(a.isPrimitive for a in args):
                return self.fail('E102', ref.span, "'%s' expects %i reference type argument(s)"
                    % (ref.name, len(cls.typeParams)))
            mapping = dict(zip(cls.typeParams, args))
            for v, arg in zip(cls.typeParams, args):
                bound = Types.substitute(v.bound if v.bound is not None else Types.OBJECT, mapping)
                if not is_subtype(arg, bound, self.table):
                    return self.fail('E102', ref.span, "type argument %s is not within bound %s of '%s'"
                        % (arg, bound, v.name))
            t = NamedType(ref.name, args)
        else:
            return self.fail('E100', ref.span, "unknown type '%s'" % ref.name)
        return ArrayType(t) if ref.isArray else t

    ### declarations

    def visit_ClassDecl(self, decl):
        self.cls = self.table[decl.name]
        for i, member in enumerate(decl.members):
            sig = self.cls.memberSigs.get(i)
            if isinstance(member, (Ast.MethodDecl, Ast.ConstructorDecl)) and sig is not None:
                self.attribute_body(member, sig)
        self.cls = None

    def attribute_body(self, decl, sig):
        if decl.body is None:
            return
        self.isStatic = sig.isStatic
        self.typeScope = {} if sig.isStatic else dict((v.name, v) for v in self.cls.typeParams)
        self.typeScope.update((v.name, v) for v in sig.typeParams)
        self.returnType = VOID if sig.name == '<init>' else sig.returnType
        self.locals = _Scope()
        self.locals.push()
        for param, t in zip(decl.params, sig.paramTypes):
            self.locals.declare(param.name, t)
        self.visit(decl.body)
        self.locals.pop()

    ### statements

    def visit_Block(self, block):
        self.locals.push()
        for stmt in block.stmts:
            self.visit(stmt)
        self.locals.pop()

    def visit_LocalVar(self, stmt):
        t = self.resolve_type(stmt.typeRef)
        stmt.varType = t
        if self.locals.lookup(stmt.name) is not None:
            self.fail('E023', stmt.span, "variable '%s' is already defined" % stmt.name)
        if stmt.init is not None:
            valueType = self.visit(stmt.init)
            typing = type_assign(t, valueType, self.table, self.mode, stmt.init.span)
            self.report(typing.diagnostics)
            stmt.resolution = typing.resolution if typing.ok else BUILTIN
        self.locals.declare(stmt.name, t)

    def visit_ExprStmt(self, stmt):
        self.statementExpr = Ast.unparen(stmt.expr)
        self.visit(stmt.expr)
        self.statementExpr = None

    def check_condition(self, cond):
        t = self.visit(cond)
        if not t.isError and unboxed(t) != BOOLEAN:
            self.fail('E101', cond.span, 'condition must be boolean, found %s' % t)

    def visit_branch(self, stmt):
        self.locals.push()
        self.visit(stmt)
        self.locals.pop()

    def visit_If(self, stmt):
        self.check_condition(stmt.cond)
        self.visit_branch(stmt.then)
        if stmt.orelse is not None:
            self.visit_branch(stmt.orelse)

    def visit_While(self, stmt):
        self.check_condition(stmt.cond)
        self.visit_branch(stmt.body)

    def visit_Return(self, stmt):
        if stmt.value is None:
            if self.returnType != VOID:
                self.fail('E101', stmt.span, 'missing return value of type %s' % self.returnType)
            return
        t = self.visit(stmt.value)
        if self.returnType == VOID:
            self.fail('E101', stmt.span, 'cannot return a value from a void method')
        elif not is_assignable(t, self.returnType, self.table):
            self.fail('E101', stmt.value.span, 'incompatible return type: %s cannot be converted to %s'
                % (t, self.returnType))

    ### expressions

    def visit(self, node):
        result = super(Attributor, self).visit(node)
        if isinstance(node, Ast.Expr):
            node.type = result
        return result

    def visit_Literal(self, node):
        kind = node.literalKind
        if kind == 'int':
            if int(node.text) > _literal_limit(31, node is self.negatedLiteral):
                return self.fail('E101', node.span, 'integer number too large: %s' % node.text)
            return INT
        if kind == 'long':
            if int(node.text[:-1]) > _literal_limit(63, node is self.negatedLiteral):
                return self.fail('E101', node.span, 'long number too large: %s' % node.text)
            return LONG
        return {'double': DOUBLE, 'string': STRING, 'boolean': BOOLEAN, 'null': NULL}[kind]

    def is_class_name(self, expr):
        """Whether expr is a bare name that denotes a class rather than a variable."""
        return (isinstance(expr, Ast.Name) and self.locals.lookup(expr.name) is None
                and self.field_type(expr.name) is None and expr.name in self.table)

    def field_type(self, name):
        if self.cls is None:
            return None
        return find_field(self.cls.selfType, name, self.table)

    def visit_Name(self, node):
        t = self.locals.lookup(node.name)
        if t is not None:
            node.binding = 'local'
            return t
        t = self.field_type(node.name)
        if t is not None:
            node.binding = 'field'
            if self.isStatic:
                return self.fail('E104', node.span,
                    "non-static field '%s' cannot be referenced from a static context" % node.name)
            return t
        return self.fail('E100', node.span, "unknown name '%s'" % node.name)

    def visit_This(self, node):
        if self.isStatic:
            return self.fail('E104', node.span, "'this' cannot be used in a static context")
        return self.cls.selfType

    def visit_Paren(self, node):
        return self.visit(node.expr)

    def visit_FieldAccess(self, node):
        t = self.visit(node.target)
        if t.isError:
            return ERROR
        if isinstance(t, ArrayType) and node.name == 'length':
            return INT
        if not t.isReference:
            return self.fail('E104', node.span, "cannot access field '%s' of type %s" % (node.name, t))
        ft = find_field(t, node.name, self.table)
        if ft is None:
            return self.fail('E100', node.span, "unknown field '%s' in %s" % (node.name, t))
        return ft

    def visit_MethodCall(self, node):
        node.isStaticCall = False
        if node.target is None:
            recv = self.cls.selfType
            wantStatic = self.isStatic
        elif self.is_class_name(node.target):
            node.target.binding = 'class'
            node.target.type = NamedType(node.target.name)
            recv = NamedType(node.target.name)
            wantStatic = True
        else:
            recv = self.visit(node.target)
            wantStatic = False
        argTypes = [self.visit(a) for a in node.args]
        if recv.isError or any(a.isError for a in argTypes):
            return ERROR
        if not _is_receiver(recv) and not isinstance(recv, ArrayType):
            return self.fail('E104', node.span, "cannot call method '%s' on type %s" % (node.name, recv))

        try:
            method = resolve_method(recv, node.name, argTypes, self.table, wantStatic)
        except AmbiguousMethodError as e:
            return self.fail('E120', node.span, "ambiguous call to '%s' on %s: %s"
                % (node.name, recv, ', '.join(str(m) for m in e.candidates)))
        if method is None:
            return self.fail('E103', node.span, "no applicable method %s(%s) in %s"
                % (node.name, _types(*argTypes), recv))
        node.method = method
        node.isStaticCall = method.isStatic
        return method.returnType

    def visit_New(self, node):
        t = self.resolve_type(node.typeRef)
        argTypes = [self.visit(a) for a in node.args]
        if t.isError or any(a.isError for a in argTypes):
            return ERROR
        cls = self.table.get(t.name) if isinstance(t, NamedType) else None
        if cls is None or cls.isInterface or cls.isAbstract:
            return self.fail('E104', node.span, 'cannot instantiate %s' % t)
        try:
            ctor = resolve_constructor(t, argTypes, self.table)
        except AmbiguousMethodError:
            return self.fail('E120', node.span, 'ambiguous constructor call for %s' % t)
        if ctor is None:
            return self.fail('E103', node.span, 'no applicable constructor %s(%s)' % (t.name, _types(*argTypes)))
        node.method = ctor
        return t

    def visit_NewArray(self, node):
        element = self.resolve_type(node.elementType)
        size = self.visit(node.size)
        if element.isError:
            return ERROR
        if not size.isError and not _array_index_ok(size):
            self.fail('E101', node.size.span, 'array size must be int, found %s' % size)
        return ArrayType(element)

    def apply(self, node, typing):
        self.report(typing.diagnostics)
        node.resolution = typing.resolution if typing.ok else BUILTIN
        return typing.type

    def visit_Binary(self, node):
        lt = self.visit(node.left)
        rt = self.visit(node.right)
        span = getattr(node, 'opSpan', node.span)
        op = node.op
        if op in Ast.RELATIONAL_OPERATORS:
            typing = type_compare(op, lt, rt, self.table, self.mode, span)
        elif op in Ast.EQUALITY_OPERATORS:
            typing = type_equality(op, lt, rt, self.table, span)
        elif op in Ast.LOGICAL_OPERATORS:
            typing = type_logical(op, lt, rt, span)
        else:
            typing = type_binary(op, lt, rt, self.table, self.mode, span)
        return self.apply(node, typing)

    def visit_Unary(self, node):
        if node.op == '-' and type(node.operand) is Ast.Literal:
            self.negatedLiteral = node.operand
        t = self.visit(node.operand)
        span = getattr(node, 'opSpan', node.span)
        return self.apply(node, type_unary(node.op, t, self.table, self.mode, span))

    def visit_Index(self, node):
        coll = self.visit(node.target)
        key = self.visit(node.index)
        return self.apply(node, type_index(False, coll, key, None, self.table, self.mode, node.span))

    def visit_IndexAssign(self, node):
        isStatement = node is self.statementExpr
        coll = self.visit(node.target)
        key = self.visit(node.index)
        value = self.visit(node.value)
        t = self.apply(node, type_index(True, coll, key, value, self.table, self.mode, node.span))
        if node.resolution.isOverloaded and not isStatement:
            self.diagnostics.append(note('N060', node.span,
                "value of an overloaded index write is the result of '%s', not the assigned value"
                % node.resolution.method.name))
        return t

    def visit_Assign(self, node):
        target = Ast.unparen(node.target)
        if isinstance(target, Ast.Name) and self.is_class_name(target):
            self.fail('E100', target.span, "unknown name '%s'" % target.name)
            t = ERROR
        else:
            t = self.visit(node.target)
        value = self.visit(node.value)
        span = getattr(node, 'opSpan', node.span)
        return self.apply(node, type_assign(t, value, self.table, self.mode, span))


def attribute_unit(unit, table, mode=OO, verbose=False):
    """
    Type a compilation unit.

    Parameters
    ----------
    unit : list of :class:`oodc.Ast.ClassDecl`
        A parsed unit whose classes are in table.  It is not modified.
    table : :class:`oodc.ClassModel.ClassTable`
    mode : Mode, optional
        OO (the default) enables the overloading rules; BASE disables
        them.
    verbose : bool, optional
        If True print a line per class attributed.

    Returns
    -------
    Attribution

    Raises
    ------
    CompileError
        If any error was found.  Attribution continues past errors so
        that all of them are reported together.
    """
    unit = copy.deepcopy(unit)
    attributor = Attributor(table, mode, verbose)
    for decl in unit:
        if verbose:
            print('Attributing', decl.name, 'in', 'base' if mode.baseOnly else 'oo', 'mode')
        attributor.visit(decl)
    if any(d.isError for d in attributor.diagnostics):
        raise CompileError(attributor.diagnostics)
    return Attribution(unit, attributor.diagnostics, mode)


def operator_nodes(unit):
    """All nodes of an attributed unit that carry a resolution, in source order."""
    return [n for n in Ast.walk_unit(unit) if hasattr(n, 'resolution')]


def overloaded_nodes(unit):
    return [n for n in operator_nodes(unit) if n.resolution.isOverloaded]
