"""
Runtime values of the interpreter and Java's fixed-width arithmetic.

Primitive and immutable values (ints, longs, doubles, booleans, strings,
big integers) are namedtuples compared by value; lists, maps, arrays and
objects are mutable and compared by identity.  A boxed Integer is
represented by the same IntVal as the int it holds.
"""
from collections import namedtuple, OrderedDict

import numpy as np
from mpmath.libmp import MPZ

INT_MASK = (1 << 32) - 1
LONG_MASK = (1 << 64) - 1


def wrap_int(x):
    """x reduced to a signed 32-bit integer (two's complement)."""
    return int(np.array([int(x) & INT_MASK], dtype=np.uint32).view(np.int32)[0])


def wrap_long(x):
    """x reduced to a signed 64-bit integer (two's complement)."""
    return int(np.array([int(x) & LONG_MASK], dtype=np.uint64).view(np.int64)[0])


def truncating_divmod(a, b):
    """
    Quotient rounded toward zero and the matching remainder, whose sign
    follows the dividend.  b must be nonzero.
    """
    q = abs(a) // abs(b)
    if (a < 0) != (b < 0):
        q = -q
    return q, a - b*q


def double_op(op, a, b):
    """IEEE-754 binary operation on two Python floats."""
    x, y = np.float64(a), np.float64(b)
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        if op == '+':
            r = x + y
        elif op == '-':
            r = x - y
        elif op == '*':
            r = x * y
        elif op == '/':
            r = np.divide(x, y)
        elif op == '%':
            r = np.fmod(x, y)
        else:
            raise ValueError('not a double operator: %s' % op)
    return float(r)


def format_double(x):
    """
    Render a double as Java's ``Double.toString`` does: decimal notation
    with at least one fractional digit for magnitudes in [1e-3, 1e7),
    computerized scientific notation (``1.0E20``) otherwise.
    """
    if np.isnan(x):
        return 'NaN'
    if np.isinf(x):
        return 'Infinity' if x > 0 else '-Infinity'
    if x == 0:
        return '-0.0' if np.signbit(x) else '0.0'
    if 1e-3 <= abs(x) < 1e7:
        s = repr(float(x))
        return s if '.' in s else s + '.0'
    mantissa, exponent = np.format_float_scientific(x, unique=True, trim='0').split('e')
    return '%sE%i' % (mantissa, int(exponent))


class _Value(object):
    __slots__ = ()

    def __eq__(self, other):
        return type(self) is type(other) and tuple(self) == tuple(other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((type(self).__name__, tuple(self)))


class IntVal(_Value, namedtuple("IntVal", ["value"])):
    __slots__ = ()
    className = 'Integer'


class LongVal(_Value, namedtuple("LongVal", ["value"])):
    __slots__ = ()
    className = 'Long'


class DoubleVal(_Value, namedtuple("DoubleVal", ["value"])):
    __slots__ = ()
    className = 'Double'


class BoolVal(_Value, namedtuple("BoolVal", ["value"])):
    __slots__ = ()
    className = 'Boolean'


class StringVal(_Value, namedtuple("StringVal", ["text"])):
    __slots__ = ()
    className = 'String'


class BigIntVal(_Value, namedtuple("BigIntVal", ["value"])):
    """An exact integer held as an ``mpmath.libmp.MPZ``."""
    __slots__ = ()
    className = 'BigInteger'

    def __new__(cls, value):
        return super(BigIntVal, cls).__new__(cls, MPZ(int(value)))


class NullVal(object):
    className = None

    def __repr__(self):
        return 'NULL'


NULL = NullVal()
TRUE = BoolVal(True)
FALSE = BoolVal(False)


class ListVal(object):
    className = 'List'

    def __init__(self, items=None):
        self.items = list(items) if items is not None else []

    def __repr__(self):
        return 'ListVal(%r)' % self.items


class MapVal(object):
    className = 'Map'

    def __init__(self, entries=None):
        self.entries = OrderedDict(entries) if entries is not None else OrderedDict()

    def __repr__(self):
        return 'MapVal(%r)' % list(self.entries.items())


class ArrayVal(object):
    """A fixed-length array; elementType is a :class:`oodc.Types.Type`."""
    className = 'Object'

    def __init__(self, elementType, items):
        self.elementType = elementType
        self.items = list(items)

    def __repr__(self):
        return 'ArrayVal(%s, %r)' % (self.elementType, self.items)


class ObjectVal(object):
    """
    An instance of a user class.  fields holds every field declared by
    the class and its superclasses; serial numbers allocations in order.
    """
    def __init__(self, className, fields, serial):
        self.className = className
        self.fields = fields
        self.serial = serial

    def __repr__(self):
        return '<ObjectVal %s@%x>' % (self.className, self.serial)


def python_value(value):
    """The plain Python counterpart of a value, for tests and the command line."""
    if isinstance(value, (IntVal, LongVal, BoolVal)):
        return value.value
    if isinstance(value, BigIntVal):
        return int(value.value)
    if isinstance(value, DoubleVal):
        return value.value
    if isinstance(value, StringVal):
        return value.text
    if isinstance(value, ListVal):
        return [python_value(v) for v in value.items]
    if value is NULL or value is None:
        return None
    return value
