"""
A tree-walking interpreter for plain MJ-OO programs.

The interpreter verifies the translation rather than implementing the
overloading rules a second time: its input is attributed in base mode, so
a unit that still contains overloaded operators is rejected with the
base-mode diagnostics.
"""
import re
from collections import namedtuple, OrderedDict

from . import Ast
from .Types import (PrimitiveType, INT, LONG, DOUBLE, BOOLEAN, CHAR, STRING, VOID,
    unbox, unboxed, binary_numeric_promotion)
from .ClassModel import linearize
from .TypeCheck import BASE, attribute_unit
from .Diagnostics import InterpreterError
from .Natives import call_native
from .Values import (IntVal, LongVal, DoubleVal, BoolVal, StringVal, BigIntVal, ListVal, MapVal,
    ArrayVal, ObjectVal, NULL, TRUE, FALSE, wrap_int, wrap_long, truncating_divmod, double_op,
    format_double)

_ESCAPES = {'n': '\n', 't': '\t', 'r': '\r', 'b': '\b', 'f': '\f', '0': '\0',
            '"': '"', "'": "'", '\\': '\\'}


def unescape(lexeme):
    """The text of a string literal given its quoted source form."""
    return re.sub(r'\\(.)', lambda m: _ESCAPES.get(m.group(1), m.group(1)), lexeme[1:-1])


def default_value(t):
    """The initial value of a field, array element or uninitialized local of type t."""
    if t == INT or t == CHAR:
        return IntVal(0)
    if t == LONG:
        return LongVal(0)
    if t == DOUBLE:
        return DoubleVal(0.0)
    if t == BOOLEAN:
        return FALSE
    return NULL


class ProgramResult(namedtuple("ProgramResult", ["value", "output"])):
    """
    Outcome of running a program.

    Attributes
    ----------
    value : value or None
        What the entry method returned; None for a void method.
    output : str
        Everything printed with ``Out.println``.
    """
    __slots__ = ()


class _Return(Exception):
    def __init__(self, value):
        self.value = value


class Environment(object):
    """Lexical frames of local variables and the receiver of the running method."""
    def __init__(self, this=None, returnType=VOID):
        self.frames = [{}]
        self.this = this
        self.returnType = returnType

    def push(self):
        self.frames.append({})

    def pop(self):
        self.frames.pop()

    def declare(self, name, value):
        self.frames[-1][name] = value

    def lookup(self, name):
        for frame in reversed(self.frames):
            if name in frame:
                return frame[name]
        raise KeyError(name)

    def assign(self, name, value):
        for frame in reversed(self.frames):
            if name in frame:
                frame[name] = value
                return
        raise KeyError(name)


class Interpreter(object):
    """
    Executes the methods of one plain unit.

    Parameters
    ----------
    unit : list of :class:`oodc.Ast.ClassDecl`
        A unit with no overloaded operators, typically the output of
        :func:`oodc.Desugar.desugar_unit`.
    table : :class:`oodc.ClassModel.ClassTable`
        The class table the unit was compiled against.
    stream : file-like, optional
        If given, printed lines are also written to it as they happen.
    verbose : bool, optional
        If True print a line for each method entered from outside.

    Raises
    ------
    CompileError
        If unit does not type-check in base mode.
    """
    def __init__(self, unit, table, stream=None, verbose=False):
        self.table = table
        self.stream = stream
        self.verbose = verbose
        self.lines = []
        self.serial = 0
        self.unit = attribute_unit(unit, table, BASE).unit

        self.bodies = {}
        for decl in self.unit:
            cls = table[decl.name]
            for i, member in enumerate(decl.members):
                sig = cls.memberSigs.get(i)
                if sig is not None and member.body is not None:
                    self.bodies[sig] = ([p.name for p in member.params], member.body)
            for sig in cls.constructors:
                if sig not in self.bodies and cls.bodies.get(sig) is not None:
                    self.bodies[sig] = ([], cls.bodies[sig])

        objectClass = table.get('Object')
        toString = [m for m in objectClass.methods if m.name == 'toString'] if objectClass else []
        self.objectToString = toString[0] if toString else None

    ### output and strings

    @property
    def output(self):
        return ''.join(self.lines)

    def println(self, text):
        self.lines.append(text + '\n')
        if self.stream is not None:
            self.stream.write(text + '\n')

    def to_string(self, value):
        """String conversion as performed by ``+`` and ``Out.println``."""
        if value is NULL:
            return 'null'
        if isinstance(value, (IntVal, LongVal)):
            return str(value.value)
        if isinstance(value, DoubleVal):
            return format_double(value.value)
        if isinstance(value, BoolVal):
            return 'true' if value.value else 'false'
        if isinstance(value, StringVal):
            return value.text
        if isinstance(value, BigIntVal):
            return str(int(value.value))
        if self.objectToString is None:
            return self.default_string(value)
        result = self.invoke_virtual(self.objectToString, value, [])
        return self.to_string(result)

    def default_string(self, value):
        """What ``Object.toString`` gives for value."""
        if isinstance(value, ListVal):
            return '[%s]' % ', '.join(self.to_string(v) for v in value.items)
        if isinstance(value, MapVal):
            return '{%s}' % ', '.join('%s=%s' % (self.to_string(k), self.to_string(v))
                                      for k, v in value.entries.items())
        if isinstance(value, ObjectVal):
            return '%s@%x' % (value.className, value.serial)
        if isinstance(value, ArrayVal):
            return '%s[]@%x' % (value.elementType, value.serial)
        return self.to_string(value)

    ### objects

    def allocate(self, className):
        self.serial += 1
        fields = OrderedDict()
        for sup in reversed(linearize(self.table[className].selfType, self.table)):
            for name, t in self.table[sup.name].fields.items():
                fields[name] = default_value(t)
        return ObjectVal(className, fields, self.serial)

    def new_array(self, elementType, size, span):
        if size < 0:
            raise InterpreterError('R002', 'negative array size %i' % size, span)
        self.serial += 1
        array = ArrayVal(elementType, [default_value(elementType)]*size)
        array.serial = self.serial
        return array

    def construct(self, ctor, obj, args):
        cls = self.table[ctor.declaringClass]
        if cls.superclass is not None:
            sup = self.table[cls.superclass.name]
            noArgs = [c for c in sup.constructors if not c.paramTypes]
            if noArgs and not noArgs[0].isNative:
                self.construct(noArgs[0], obj, [])
        self.run_body(ctor, obj, args)

    ### calls

    def runtime_class(self, value):
        name = value.className
        return name if name in self.table else 'Object'

    def invoke_virtual(self, method, receiver, args, span=None):
        if receiver is NULL:
            raise InterpreterError('R001', "null receiver for '%s'" % method.name, span)
        impl = self.table.find_override(self.runtime_class(receiver), method)
        if impl is None:
            raise InterpreterError('R004', "no implementation of '%s' for %s"
                % (method, self.runtime_class(receiver)), span)
        return self.invoke(impl, receiver, args)

    def invoke(self, sig, receiver, args):
        if sig.isNative:
            return call_native(self, sig.qualifiedName, receiver, args)
        return self.run_body(sig, receiver, args)

    def run_body(self, sig, receiver, args):
        if sig not in self.bodies:
            raise InterpreterError('R004', "no body for '%s'" % sig.qualifiedName)
        names, body = self.bodies[sig]
        returnType = VOID if sig.name == '<init>' else sig.returnType
        env = Environment(receiver, returnType)
        for name, value in zip(names, args):
            env.declare(name, value)
        try:
            self.execute(body, env)
        except _Return as r:
            return r.value
        return None

    def call_static(self, qualifiedName, args):
        """
        Call a static method by name.

        Parameters
        ----------
        qualifiedName : str
            ``Class.method``; the first static method of that name and
            arity is called.
        args : list of values

        Returns
        -------
        value or None
        """
        className, name = qualifiedName.rsplit('.', 1)
        for sig in self.table[className].methods:
            if sig.name == name and sig.isStatic and len(sig.paramTypes) == len(args):
                if self.verbose:
                    print('Calling', sig.qualifiedName, 'with', len(args), 'arguments')
                return self.invoke(sig, None, [self.coerce(a, t) for a, t in zip(args, sig.paramTypes)])
        raise ValueError('no static method %s taking %i arguments' % (qualifiedName, len(args)))

    ### conversions

    def coerce(self, value, t):
        """Apply the widening, boxing or unboxing that assigning value to type t implies."""
        if value is None or t is None:
            return value
        if isinstance(t, PrimitiveType):
            if value is NULL:
                raise InterpreterError('R001', 'null cannot be converted to %s' % t)
            if t == INT or t == CHAR:
                return value if isinstance(value, IntVal) else IntVal(value.value)
            if t == LONG:
                return value if isinstance(value, LongVal) else LongVal(int(value.value))
            if t == DOUBLE:
                return value if isinstance(value, DoubleVal) else DoubleVal(float(value.value))
            return value
        primitive = unbox(t)
        if primitive is not None and value is not NULL:
            return self.coerce(value, primitive)
        return value

    def number(self, value, span):
        if value is NULL:
            raise InterpreterError('R001', 'null cannot be unboxed', span)
        return value.value

    def truth(self, value, span):
        return bool(self.number(value, span))

    ### statements

    def execute(self, stmt, env):
        getattr(self, 'exec_' + type(stmt).__name__)(stmt, env)

    def exec_Block(self, stmt, env):
        env.push()
        try:
            for s in stmt.stmts:
                self.execute(s, env)
        finally:
            env.pop()

    def exec_branch(self, stmt, env):
        env.push()
        try:
            self.execute(stmt, env)
        finally:
            env.pop()

    def exec_LocalVar(self, stmt, env):
        if stmt.init is None:
            value = default_value(stmt.varType)
        else:
            value = self.coerce(self.evaluate(stmt.init, env), stmt.varType)
        env.declare(stmt.name, value)

    def exec_ExprStmt(self, stmt, env):
        self.evaluate(stmt.expr, env)

    def exec_If(self, stmt, env):
        if self.truth(self.evaluate(stmt.cond, env), stmt.cond.span):
            self.exec_branch(stmt.then, env)
        elif stmt.orelse is not None:
            self.exec_branch(stmt.orelse, env)

    def exec_While(self, stmt, env):
        while self.truth(self.evaluate(stmt.cond, env), stmt.cond.span):
            self.exec_branch(stmt.body, env)

    def exec_Return(self, stmt, env):
        value = None
        if stmt.value is not None:
            value = self.coerce(self.evaluate(stmt.value, env), env.returnType)
        raise _Return(value)

    ### expressions

    def evaluate(self, node, env):
        return getattr(self, 'eval_' + type(node).__name__)(node, env)

    def eval_Literal(self, node, env):
        kind, text = node.literalKind, node.text
        if kind == 'int':
            return IntVal(wrap_int(int(text)))
        if kind == 'long':
            return LongVal(wrap_long(int(text[:-1])))
        if kind == 'double':
            return DoubleVal(float(text))
        if kind == 'string':
            return StringVal(unescape(text))
        if kind == 'boolean':
            return TRUE if text == 'true' else FALSE
        return NULL

    def eval_Name(self, node, env):
        if node.binding == 'local':
            return env.lookup(node.name)
        return env.this.fields[node.name]

    def eval_This(self, node, env):
        return env.this

    def eval_Paren(self, node, env):
        return self.evaluate(node.expr, env)

    def eval_FieldAccess(self, node, env):
        obj = self.evaluate(node.target, env)
        if obj is NULL:
            raise InterpreterError('R001', "null receiver for field '%s'" % node.name, node.span)
        if isinstance(obj, ArrayVal):
            return IntVal(len(obj.items))
        return obj.fields[node.name]

    def arguments(self, node, env):
        return [self.coerce(self.evaluate(a, env), t) for a, t in zip(node.args, node.method.paramTypes)]

    def eval_MethodCall(self, node, env):
        method = node.method
        if method.isStatic:
            target = node.target
            if target is not None and getattr(target, 'binding', None) != 'class':
                self.evaluate(target, env)
            return self.invoke(method.declared, None, self.arguments(node, env))
        receiver = env.this if node.target is None else self.evaluate(node.target, env)
        args = self.arguments(node, env)
        return self.invoke_virtual(method, receiver, args, node.span)

    def eval_New(self, node, env):
        ctor = node.method
        args = self.arguments(node, env)
        declared = ctor.declared
        if declared.isNative:
            return call_native(self, declared.qualifiedName, None, args)
        obj = self.allocate(declared.declaringClass)
        self.construct(declared, obj, args)
        return obj

    def eval_NewArray(self, node, env):
        size = self.number(self.evaluate(node.size, env), node.size.span)
        return self.new_array(node.type.element, size, node.span)

    def array_slot(self, node, env):
        array = self.evaluate(node.target, env)
        i = self.number(self.evaluate(node.index, env), node.index.span)
        if array is NULL:
            raise InterpreterError('R001', 'null array', node.span)
        if not 0 <= i < len(array.items):
            raise InterpreterError('R002', 'index %i out of bounds for length %i' % (i, len(array.items)),
                node.span)
        return array, i

    def eval_Index(self, node, env):
        array, i = self.array_slot(node, env)
        return array.items[i]

    def eval_IndexAssign(self, node, env):
        array, i = self.array_slot(node, env)
        value = self.coerce(self.evaluate(node.value, env), array.elementType)
        array.items[i] = value
        return value

    def eval_Assign(self, node, env):
        target = Ast.unparen(node.target)
        if isinstance(target, Ast.FieldAccess):
            obj = self.evaluate(target.target, env)
            value = self.coerce(self.evaluate(node.value, env), node.type)
            if obj is NULL:
                raise InterpreterError('R001', "null receiver for field '%s'" % target.name, node.span)
            obj.fields[target.name] = value
        else:
            value = self.coerce(self.evaluate(node.value, env), node.type)
            if target.binding == 'local':
                env.assign(target.name, value)
            else:
                env.this.fields[target.name] = value
        return value

    def eval_Unary(self, node, env):
        value = self.evaluate(node.operand, env)
        if node.op == '!':
            return BoolVal(not self.truth(value, node.span))
        x = self.number(value, node.span)
        t = node.type
        if t == DOUBLE:
            return DoubleVal(-float(x))
        wrap, make = (wrap_int, IntVal) if t == INT else (wrap_long, LongVal)
        return make(wrap(-x if node.op == '-' else ~x))

    def eval_Binary(self, node, env):
        op = node.op
        if op in Ast.LOGICAL_OPERATORS:
            left = self.truth(self.evaluate(node.left, env), node.left.span)
            if left == (op == '||'):
                return BoolVal(left)
            return BoolVal(self.truth(self.evaluate(node.right, env), node.right.span))

        a = self.evaluate(node.left, env)
        b = self.evaluate(node.right, env)
        if op in Ast.EQUALITY_OPERATORS:
            same = self.equal(node, a, b)
            return BoolVal(same if op == '==' else not same)
        if node.type == STRING:
            return StringVal(self.to_string(a) + self.to_string(b))
        if op in Ast.RELATIONAL_OPERATORS:
            return self.compare(node, a, b)
        return self.arithmetic(node, a, b)

    def promoted(self, node):
        return binary_numeric_promotion(unboxed(node.left.type), unboxed(node.right.type))

    def operands(self, t, a, b, span):
        x, y = self.number(a, span), self.number(b, span)
        if t == DOUBLE:
            return float(x), float(y)
        return int(x), int(y)

    def equal(self, node, a, b):
        lt, rt = node.left.type, node.right.type
        if lt.isPrimitive or rt.isPrimitive:
            if unboxed(lt) == BOOLEAN:
                return self.truth(a, node.span) == self.truth(b, node.span)
            x, y = self.operands(self.promoted(node), a, b, node.span)
            return x == y
        if a is b:
            return True
        if isinstance(a, ObjectVal) or isinstance(a, (ListVal, MapVal, ArrayVal)):
            return False
        return a == b

    def compare(self, node, a, b):
        x, y = self.operands(self.promoted(node), a, b, node.span)
        op = node.op
        if op == '<':
            return BoolVal(x < y)
        if op == '<=':
            return BoolVal(x <= y)
        if op == '>':
            return BoolVal(x > y)
        return BoolVal(x >= y)

    def arithmetic(self, node, a, b):
        op, t = node.op, node.type
        if t == BOOLEAN:
            x, y = self.truth(a, node.span), self.truth(b, node.span)
            return BoolVal({'&': x and y, '|': x or y, '^': x != y}[op])
        if t == DOUBLE:
            x, y = self.operands(DOUBLE, a, b, node.span)
            return DoubleVal(double_op(op, x, y))

        x, y = int(self.number(a, node.span)), int(self.number(b, node.span))
        wrap, make, bits = (wrap_int, IntVal, 31) if t == INT else (wrap_long, LongVal, 63)
        if op in ('/', '%'):
            if y == 0:
                raise InterpreterError('R003', 'division by zero', node.span)
            q, r = truncating_divmod(x, y)
            return make(wrap(q if op == '/' else r))
        if op == '<<':
            return make(wrap(x << (y & bits)))
        if op == '>>':
            return make(wrap(x >> (y & bits)))
        result = {'+': x + y, '-': x - y, '*': x * y, '&': x & y, '|': x | y, '^': x ^ y}[op]
        return make(wrap(result))


def _find_entry(unit, table):
    for decl in unit:
        for m in table[decl.name].methods:
            if m.name == 'main' and m.isStatic and not m.paramTypes:
                return m.qualifiedName
    raise ValueError('no static main() method in %s' % ', '.join(d.name for d in unit))


def evaluate_program(unit, table, entry=None, stream=None, verbose=False):
    """
    Run a plain program.

    Parameters
    ----------
    unit : list of :class:`oodc.Ast.ClassDecl`
        A unit that type-checks in base mode, such as the output of
        :func:`oodc.Desugar.desugar_unit`.
    table : :class:`oodc.ClassModel.ClassTable`
    entry : str, optional
        ``Class.method`` of a static method without parameters.  By
        default the first class of unit declaring a static ``main()`` is
        used.
    stream : file-like, optional
        Printed lines are also written here as they happen.
    verbose : bool, optional
        If True print which entry method is run.

    Returns
    -------
    ProgramResult

    Raises
    ------
    InterpreterError
        R001 null receiver, R002 index out of bounds, R003 integer
        division by zero, R004 missing native binding, R005 malformed
        BigInteger string.
    CompileError
        If unit does not type-check in base mode, e.g. because it still
        contains overloaded operators.
    ValueError
        If there is no entry method.
    """
    interpreter = Interpreter(unit, table, stream=stream, verbose=verbose)
    if entry is None:
        entry = _find_entry(unit, table)
    if verbose:
        print('Running', entry)
    value = interpreter.call_static(entry, [])
    return ProgramResult(value, interpreter.output)
