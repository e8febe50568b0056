"""
Built-in implementations of the ``native`` methods of the stub library.

Each binding is registered under the qualified name ``Class.method``
(``Class.<init>`` for constructors) and is called as
``binding(interpreter, receiver, args)``; receiver is None for static
methods and constructors.
"""
import re
import warnings

from .Diagnostics import InterpreterError
from .Values import (IntVal, LongVal, DoubleVal, BoolVal, StringVal, BigIntVal, ListVal, MapVal,
    NULL, TRUE, truncating_divmod)

NATIVES = {}


def native(qualifiedName):
    """Register the decorated function as the binding of qualifiedName."""
    def register(f):
        NATIVES[qualifiedName] = f
        return f
    return register


def call_native(interpreter, qualifiedName, receiver, args):
    """
    Run a native binding.

    Parameters
    ----------
    interpreter : :class:`oodc.Interpreter.Interpreter`
        Supplies captured output and string conversion.
    qualifiedName : str
        e.g. ``'BigInteger.add'``.
    receiver : value or None
    args : list of values

    Returns
    -------
    value
        None for void methods.

    Raises
    ------
    InterpreterError
        R004 if there is no binding for qualifiedName, or whatever
        runtime error the binding itself raises.
    """
    binding = NATIVES.get(qualifiedName)
    if binding is None:
        raise InterpreterError('R004', "no native binding for '%s'" % qualifiedName)
    return binding(interpreter, receiver, args)


def check_registry(table):
    """Warn about bindings whose method no stub declares native."""
    declared = set()
    for cls in table:
        for m in cls.methods + cls.constructors:
            if m.isNative:
                declared.add(m.qualifiedName)
    for name in sorted(set(NATIVES) - declared):
        warnings.warn("Native binding '%s' has no native stub declaration" % name)
    return sorted(declared - set(NATIVES))


### Object

@native('Object.<init>')
def object_init(interpreter, receiver, args):
    return interpreter.allocate('Object')


@native('Object.toString')
def object_to_string(interpreter, receiver, args):
    return StringVal(interpreter.default_string(receiver))


### wrappers

@native('Integer.valueOf')
def integer_value_of(interpreter, receiver, args):
    return IntVal(args[0].value)


@native('Long.valueOf')
def long_value_of(interpreter, receiver, args):
    return LongVal(args[0].value)


@native('Double.valueOf')
def double_value_of(interpreter, receiver, args):
    return DoubleVal(float(args[0].value))


@native('Boolean.valueOf')
def boolean_value_of(interpreter, receiver, args):
    return BoolVal(args[0].value)


### BigInteger

_BIG_INTEGER = re.compile(r'[+-]?[0-9]+\Z')


@native('BigInteger.<init>')
def big_integer_init(interpreter, receiver, args):
    text = args[0]
    if text is NULL:
        raise InterpreterError('R001', 'BigInteger(null)')
    if not _BIG_INTEGER.match(text.text):
        raise InterpreterError('R005', 'malformed BigInteger string %r' % text.text)
    return BigIntVal(int(text.text))


@native('BigInteger.valueOf')
def big_integer_value_of(interpreter, receiver, args):
    return BigIntVal(args[0].value)


def _operand(value):
    if value is NULL:
        raise InterpreterError('R001', 'null BigInteger argument')
    return value.value


def _binary(name, f):
    @native('BigInteger.' + name)
    def binding(interpreter, receiver, args):
        return BigIntVal(f(receiver.value, _operand(args[0])))
    binding.__name__ = 'big_integer_' + name
    return binding


def _divide(a, b):
    if b == 0:
        raise InterpreterError('R003', 'BigInteger divide by zero')
    return truncating_divmod(a, b)[0]


def _remainder(a, b):
    if b == 0:
        raise InterpreterError('R003', 'BigInteger divide by zero')
    return truncating_divmod(a, b)[1]


def _shift_left(a, n):
    return a << n if n >= 0 else a >> -n


_binary('add', lambda a, b: a + b)
_binary('subtract', lambda a, b: a - b)
_binary('multiply', lambda a, b: a * b)
_binary('divide', _divide)
_binary('remainder', _remainder)
_binary('and', lambda a, b: a & b)
_binary('or', lambda a, b: a | b)
_binary('xor', lambda a, b: a ^ b)
_binary('shiftLeft', _shift_left)
_binary('shiftRight', lambda a, n: _shift_left(a, -n))


@native('BigInteger.negate')
def big_integer_negate(interpreter, receiver, args):
    return BigIntVal(-receiver.value)


@native('BigInteger.not')
def big_integer_not(interpreter, receiver, args):
    return BigIntVal(~receiver.value)


@native('BigInteger.compareTo')
def big_integer_compare_to(interpreter, receiver, args):
    a, b = receiver.value, _operand(args[0])
    return IntVal((a > b) - (a < b))


@native('BigInteger.toString')
def big_integer_to_string(interpreter, receiver, args):
    return StringVal(str(int(receiver.value)))


### List

@native('List.<init>')
def list_init(interpreter, receiver, args):
    return ListVal()


def _position(items, index):
    i = index.value
    if not 0 <= i < len(items):
        raise InterpreterError('R002', 'index %i out of bounds for length %i' % (i, len(items)))
    return i


@native('List.get')
def list_get(interpreter, receiver, args):
    return receiver.items[_position(receiver.items, args[0])]


@native('List.set')
def list_set(interpreter, receiver, args):
    i = _position(receiver.items, args[0])
    previous = receiver.items[i]
    receiver.items[i] = args[1]
    return previous


@native('List.add')
def list_add(interpreter, receiver, args):
    receiver.items.append(args[0])
    return TRUE


@native('List.size')
def list_size(interpreter, receiver, args):
    return IntVal(len(receiver.items))


### Map

@native('Map.<init>')
def map_init(interpreter, receiver, args):
    return MapVal()


@native('Map.get')
def map_get(interpreter, receiver, args):
    return receiver.entries.get(args[0], NULL)


@native('Map.put')
def map_put(interpreter, receiver, args):
    previous = receiver.entries.get(args[0], NULL)
    receiver.entries[args[0]] = args[1]
    return previous


@native('Map.size')
def map_size(interpreter, receiver, args):
    return IntVal(len(receiver.entries))


### Out

@native('Out.println')
def out_println(interpreter, receiver, args):
    interpreter.println(interpreter.to_string(args[0]))
