"""
Semantic types of MJ-OO: primitives, named (class) types with type
arguments, type variables, arrays, and the null and void types.
"""

PRIMITIVES = ('boolean', 'char', 'int', 'long', 'double')
NUMERIC = ('char', 'int', 'long', 'double')
INTEGRAL = ('char', 'int', 'long')

# primitive widening, i.e. Java's primitive subtyping
WIDENS_TO = {
    'char': ('char', 'int', 'long', 'double'),
    'int': ('int', 'long', 'double'),
    'long': ('long', 'double'),
    'double': ('double',),
    'boolean': ('boolean',),
}

BOXES = {'int': 'Integer', 'long': 'Long', 'double': 'Double', 'boolean': 'Boolean'}
UNBOXES = dict((v, k) for k, v in BOXES.items())


class Type(object):
    isPrimitive = False
    isReference = False
    isError = False

    def _key(self):
        raise NotImplementedError('_key must be implemented in a subclass')

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def __repr__(self):
        return '<%s %s>' % (type(self).__name__, self)


class PrimitiveType(Type):
    isPrimitive = True

    def __init__(self, name):
        if name not in PRIMITIVES:
            raise ValueError('%s is not a primitive type' % name)
        self.name = name

    def _key(self):
        return self.name

    @property
    def isNumeric(self):
        return self.name in NUMERIC

    @property
    def isIntegral(self):
        return self.name in INTEGRAL

    def __str__(self):
        return self.name


class NamedType(Type):
    """A class or interface type, e.g. ``Map<String, Point>``."""
    isReference = True

    def __init__(self, name, args=()):
        self.name = name
        self.args = tuple(args)

    def _key(self):
        return (self.name, self.args)

    def __str__(self):
        if self.args:
            return '%s<%s>' % (self.name, ', '.join(str(a) for a in self.args))
        return self.name


class TypeVar(Type):
    """
    A type parameter of a class or method.  Identity is the pair
    (owner, name); the bound is attached after construction because it
    may mention the variable itself, as in ``TA extends MyNumber<TA, TM>``.
    """
    isReference = True

    def __init__(self, name, owner, bound=None):
        self.name = name
        self.owner = owner
        self.bound = bound

    def _key(self):
        return (self.owner, self.name)

    def __str__(self):
        return self.name


class ArrayType(Type):
    isReference = True

    def __init__(self, element):
        self.element = element

    def _key(self):
        return self.element

    def __str__(self):
        return '%s[]' % self.element


class _SpecialType(Type):
    def __init__(self, name):
        self.name = name

    def _key(self):
        return self.name

    def __str__(self):
        return self.name


class NullType(_SpecialType):
    pass


class VoidType(_SpecialType):
    pass


class ErrorType(_SpecialType):
    """
    The type of an expression that failed to type-check.  operand is the
    class type of the operand of an inapplicable operator, if any; all
    error types compare equal whatever their operand.
    """
    isError = True

    def __init__(self, name, operand=None):
        super(ErrorType, self).__init__(name)
        self.operand = operand


INT = PrimitiveType('int')
LONG = PrimitiveType('long')
DOUBLE = PrimitiveType('double')
BOOLEAN = PrimitiveType('boolean')
CHAR = PrimitiveType('char')
NULL = NullType('null')
VOID = VoidType('void')
ERROR = ErrorType('<error>')

OBJECT = NamedType('Object')
STRING = NamedType('String')


def primitive(name):
    return PrimitiveType(name)


def box(t):
    """The wrapper type of a primitive, or None if it has none."""
    if t.isPrimitive and t.name in BOXES:
        return NamedType(BOXES[t.name])
    return None


def unbox(t):
    """The primitive of a wrapper type, or None."""
    if isinstance(t, NamedType) and not t.args and t.name in UNBOXES:
        return PrimitiveType(UNBOXES[t.name])
    return None


def unboxed(t):
    """t itself if primitive, its primitive if it is a wrapper, else None."""
    if t.isPrimitive:
        return t
    return unbox(t)


def is_string(t):
    return t == STRING


def substitute(t, mapping):
    """
    Replace type variables in t according to mapping.

    Parameters
    ----------
    t : Type
    mapping : dict
        Maps TypeVar to Type.  Bounds of variables are not rewritten.

    Returns
    -------
    Type
    """
    if not mapping:
        return t
    if isinstance(t, TypeVar):
        return mapping.get(t, t)
    if isinstance(t, NamedType) and t.args:
        return NamedType(t.name, [substitute(a, mapping) for a in t.args])
    if isinstance(t, ArrayType):
        return ArrayType(substitute(t.element, mapping))
    return t


def mentions(t, variables):
    """Whether any of the type variables occurs in t."""
    if isinstance(t, TypeVar):
        return t in variables
    if isinstance(t, NamedType):
        return any(mentions(a, variables) for a in t.args)
    if isinstance(t, ArrayType):
        return mentions(t.element, variables)
    return False


def erasure(t):
    """The erased type: type variables become their bound's erasure."""
    if isinstance(t, TypeVar):
        return erasure(t.bound) if t.bound is not None else OBJECT
    if isinstance(t, NamedType):
        return NamedType(t.name)
    if isinstance(t, ArrayType):
        return ArrayType(erasure(t.element))
    return t


def binary_numeric_promotion(t1, t2):
    """The promoted type of two numeric primitives."""
    names = (t1.name, t2.name)
    if 'double' in names:
        return DOUBLE
    if 'long' in names:
        return LONG
    return INT


def unary_numeric_promotion(t):
    if t.name == 'char':
        return INT
    return t
