"""
Translation of overloaded operators into the method calls they stand for.
"""
from . import Ast
from .TypeCheck import (Attribution, BUILTIN, OverloadedBinary, OverloadedUnary, OverloadedCompare,
    OverloadedIndexRead, OverloadedIndexWrite, ValueOfConversion)


def _call(target, name, args, span):
    return Ast.MethodCall(target, name, args, span=span)


def _value_of(conversion, value):
    className = Ast.Name(conversion.targetType.name, span=value.span)
    return _call(className, 'valueOf', [value], value.span)


class Desugarer(Ast.NodeTransformer):
    """
    Rewrites an attributed tree bottom-up.  Children are rewritten before
    their parent, and every operand appears once in the replacement, so
    evaluation order is that of the source.
    """
    def __init__(self):
        self.rewrites = 0

    def rewritten(self, node):
        self.rewrites += 1
        return node

    def visit_Paren(self, node):
        inner = self.visit(node.expr)
        if isinstance(inner, Ast.MethodCall) and not isinstance(Ast.unparen(node.expr), Ast.MethodCall):
            # an operator became a call, which binds tightest
            return inner
        return node.replace(expr=inner)

    def visit_Binary(self, node):
        left = self.visit(node.left)
        right = self.visit(node.right)
        resolution = getattr(node, 'resolution', BUILTIN)
        if isinstance(resolution, OverloadedBinary):
            return self.rewritten(_call(left, resolution.method.name, [right], node.span))
        if isinstance(resolution, OverloadedCompare):
            opSpan = getattr(node, 'opSpan', node.span)
            compared = _call(left, 'compareTo', [right], node.span)
            zero = Ast.Literal('int', '0', span=opSpan)
            return self.rewritten(Ast.Binary(node.op, compared, zero, span=node.span, opSpan=opSpan))
        return node.replace(left=left, right=right)

    def visit_Unary(self, node):
        operand = self.visit(node.operand)
        resolution = getattr(node, 'resolution', BUILTIN)
        if isinstance(resolution, OverloadedUnary):
            return self.rewritten(_call(operand, resolution.method.name, [], node.span))
        return node.replace(operand=operand)

    def visit_Index(self, node):
        target = self.visit(node.target)
        index = self.visit(node.index)
        resolution = getattr(node, 'resolution', BUILTIN)
        if isinstance(resolution, OverloadedIndexRead):
            return self.rewritten(_call(target, resolution.method.name, [index], node.span))
        return node.replace(target=target, index=index)

    def visit_IndexAssign(self, node):
        target = self.visit(node.target)
        index = self.visit(node.index)
        value = self.visit(node.value)
        resolution = getattr(node, 'resolution', BUILTIN)
        if isinstance(resolution, OverloadedIndexWrite):
            return self.rewritten(_call(target, resolution.method.name, [index, value], node.span))
        return node.replace(target=target, index=index, value=value)

    def visit_Assign(self, node):
        target = self.visit(node.target)
        value = self.visit(node.value)
        resolution = getattr(node, 'resolution', BUILTIN)
        if isinstance(resolution, ValueOfConversion):
            value = self.rewritten(_value_of(resolution, value))
        return node.replace(target=target, value=value)

    def visit_LocalVar(self, node):
        if node.init is None:
            return node.replace()
        init = self.visit(node.init)
        resolution = getattr(node, 'resolution', BUILTIN)
        if isinstance(resolution, ValueOfConversion):
            init = self.rewritten(_value_of(resolution, init))
        return node.replace(init=init)


def desugar_unit(unit, verbose=False):
    """
    Replace every overloaded operator of an attributed unit by its
    explicit method-call form.

    Parameters
    ----------
    unit : Attribution or list of :class:`oodc.Ast.ClassDecl`
        The result of :func:`oodc.TypeCheck.attribute_unit`, or its unit.
    verbose : bool, optional
        If True print how many nodes were rewritten.

    Returns
    -------
    list of :class:`oodc.Ast.ClassDecl`
        A new unit without attribution metadata in which operator nodes
        remain only where the plain language rules apply.  The input is
        not modified.

    Notes
    -----
    ``e1 op e2`` becomes ``e1.m(e2)``, ``-e`` and ``~e`` become
    ``e.negate()`` and ``e.not()``, a comparison becomes
    ``e1.compareTo(e2) op 0``, ``e1[e2]`` becomes ``e1.get(e2)``,
    ``e1[e2] = e3`` becomes ``e1.set(e2, e3)`` or ``e1.put(e2, e3)`` and
    an assignment converted by valueOf has its right-hand side wrapped in
    ``T.valueOf(...)``.  No temporaries are introduced.
    """
    if isinstance(unit, Attribution):
        unit = unit.unit
    desugarer = Desugarer()
    result = desugarer.visit_unit(unit)
    if verbose:
        print('Desugared', desugarer.rewrites, 'overloaded operators')
    return result
