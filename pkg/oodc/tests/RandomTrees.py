"""
Random expression trees for round-trip tests of the emitter.
"""
from oodc import Ast

NAMES = ['a', 'b', 'c', 'xs', 'total']
METHODS = ['add', 'get', 'negate', 'size']
FIELDS = ['x', 'next']
BINARY = sorted(Ast.BINARY_OPERATORS)
UNARY = sorted(Ast.UNARY_OPERATORS)


def random_leaf(rng):
    r = rng.randint(5)
    if r == 0:
        return Ast.Literal('int', str(rng.randint(1000)))
    if r == 1:
        return Ast.Literal('double', '%i.%i' % (rng.randint(100), rng.randint(10)))
    if r == 2:
        return Ast.Literal('string', '"s%i"' % rng.randint(10))
    if r == 3:
        return Ast.This()
    return Ast.Name(NAMES[rng.randint(len(NAMES))])


def random_assignable(rng, depth):
    if depth > 0 and rng.randint(2):
        return Ast.FieldAccess(random_expression(rng, depth - 1), FIELDS[rng.randint(len(FIELDS))])
    return Ast.Name(NAMES[rng.randint(len(NAMES))])


def random_expression(rng, depth):
    """
    A random expression of at most the given depth.

    Parameters
    ----------
    rng : numpy.random.RandomState
    depth : int

    Returns
    -------
    :class:`oodc.Ast.Expr`
    """
    if depth == 0:
        return random_leaf(rng)
    sub = lambda: random_expression(rng, rng.randint(depth))
    r = rng.randint(10)
    if r <= 2:
        return Ast.Binary(BINARY[rng.randint(len(BINARY))], sub(), sub())
    if r == 3:
        return Ast.Unary(UNARY[rng.randint(len(UNARY))], sub())
    if r == 4:
        target = sub() if rng.randint(3) else None
        args = [sub() for i in range(rng.randint(3))]
        return Ast.MethodCall(target, METHODS[rng.randint(len(METHODS))], args)
    if r == 5:
        return Ast.FieldAccess(sub(), FIELDS[rng.randint(len(FIELDS))])
    if r == 6:
        return Ast.Index(sub(), sub())
    if r == 7:
        return Ast.IndexAssign(sub(), sub(), sub())
    if r == 8:
        return Ast.Assign(random_assignable(rng, depth - 1), sub())
    return Ast.New(Ast.TypeRef('Point', [], False), [sub() for i in range(rng.randint(3))])
