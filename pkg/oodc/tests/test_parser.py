from datetime import date

import numpy as np
import pytest

from oodc import Ast
from oodc.Ast import Binary, Unary, Name, Literal, MethodCall, Index, IndexAssign, Assign
from oodc.Diagnostics import CompileError
from oodc.Parser import parse_source, parse_expression
from oodc.tests.Fixtures import fixture_source

a, b, c, d = Name('a'), Name('b'), Name('c'), Name('d')


@pytest.mark.parametrize('source, expected', [
    pytest.param('a + b*c', Binary('+', a, Binary('*', b, c)), id='mul-over-add'),
    pytest.param('a - b - c', Binary('-', Binary('-', a, b), c), id='left-assoc'),
    pytest.param('-a + b*c', Binary('+', Unary('-', a), Binary('*', b, c)), id='unary'),
    pytest.param('a << b + c', Binary('<<', a, Binary('+', b, c)), id='shift-below-add'),
    pytest.param('a < b == c < d', Binary('==', Binary('<', a, b), Binary('<', c, d)), id='relational'),
    pytest.param('a & b ^ c | d', Binary('|', Binary('^', Binary('&', a, b), c), d), id='bitwise'),
    pytest.param('a || b && c', Binary('||', a, Binary('&&', b, c)), id='logical'),
    pytest.param('(a + b)*c', Binary('*', Binary('+', a, b), c), id='paren'),
    pytest.param('a = b = c', Assign(a, Assign(b, c)), id='assign-right-assoc'),
    pytest.param('a[b] = c', IndexAssign(a, b, c), id='index-write'),
    pytest.param('a[b][c]', Index(Index(a, b), c), id='index-read'),
    pytest.param('a.f(b).g()', MethodCall(MethodCall(a, 'f', [b]), 'g', []), id='calls'),
    pytest.param('- -a', Unary('-', Unary('-', a)), id='double-negation'),
])
def test_precedence(source, expected):
    assert parse_expression(source) == expected


def test_paren_is_kept():
    tree = parse_expression('(a)')
    assert isinstance(tree, Ast.Paren)
    assert tree == a


def test_literals():
    assert parse_expression('1') == Literal('int', '1')
    assert parse_expression('true') == Literal('boolean', 'true')
    assert parse_expression('null') == Literal('null', 'null')


def test_class_declaration():
    unit = parse_source('''
        public class Point implements MyNumber<Point, Double> {
            double x, y;
            public Point(double x, double y) { this.x = x; this.y = y; }
            public static native int f();
            <T extends Comparable<T>> T max(T a, T b) { return a; }
        }
        interface MyNumber<TA, TM> extends Other { TA add(TA o); }
    ''')
    point, number = unit
    assert point.kind == 'class' and number.kind == 'interface'
    assert str(point.interfaces[0]) == 'MyNumber<Point, Double>'
    field, ctor, native, generic = point.members
    assert field.names == ['x', 'y']
    assert isinstance(ctor, Ast.ConstructorDecl) and len(ctor.params) == 2
    assert native.modifiers == ['public', 'static', 'native'] and native.body is None
    assert generic.typeParams[0].name == 'T' and str(generic.typeParams[0].bound) == 'Comparable<T>'
    assert [str(i) for i in number.interfaces] == ['Other']


def test_nested_type_arguments():
    unit = parse_source('class A { Map<String, List<Integer>> m; }')
    assert str(unit[0].members[0].typeRef) == 'Map<String, List<Integer>>'


def test_local_declaration_versus_expression():
    unit = parse_source('class A { void f() { List<Integer> xs = null; a < b; xs[0] = 1; } }')
    local, comparison, write = unit[0].members[0].body.stmts
    assert isinstance(local, Ast.LocalVar) and str(local.typeRef) == 'List<Integer>'
    assert isinstance(comparison, Ast.ExprStmt)
    assert isinstance(write.expr, IndexAssign)


def test_operator_spans():
    tree = parse_expression('a  <= b')
    assert tree.opSpan.column == 4 and tree.opSpan.length == 2
    assert tree.span.column == 1 and tree.span.length == 7


@pytest.mark.parametrize('source, code', [
    pytest.param('class A { void f() { return 1 +; } }', 'E010', id='unexpected'),
    pytest.param('class A { void f() { f(1 } }', 'E011', id='unclosed-paren'),
    pytest.param('class A { void f() {', 'E011', id='unclosed-brace'),
    pytest.param('class A { } }', 'E011', id='stray-closer'),
    pytest.param('class A { void f() { a + b = c; } }', 'E012', id='bad-target'),
    pytest.param('class A { void f() { (a) = c; } }', 'E012', id='paren-target'),
])
def test_syntax_errors(source, code):
    with pytest.raises(CompileError) as excinfo:
        parse_source(source)
    assert excinfo.value.codes == [code]


def test_stray_closer_reported():
    with pytest.raises(CompileError) as excinfo:
        parse_source('class A {} }', 'a.mj')
    d, = excinfo.value.diagnostics
    assert d.code == 'E011'
    assert d.message == "unbalanced delimiter: unmatched '}'"
    assert (d.span.line, d.span.column) == (1, 12)


def test_dump():
    text = Ast.dump(parse_expression('a + 1'))
    assert text.splitlines()[0].startswith('Binary @1:1')
    assert "'+'" in text


LEVELS = [['||'], ['&&'], ['|'], ['^'], ['&'], ['==', '!='], ['<', '<=', '>', '>='],
    ['<<', '>>'], ['+', '-'], ['*', '/', '%']]
BINDING = dict((op, i) for i, level in enumerate(LEVELS) for op in level)


def shunting_yard(operands, operators):
    """Tree of operands[0] operators[0] operands[1] ... by operator-stack reduction."""
    output, stack = [operands[0]], []

    def reduce():
        right, left = output.pop(), output.pop()
        output.append(Binary(stack.pop(), left, right))

    for op, operand in zip(operators, operands[1:]):
        while stack and BINDING[stack[-1]] >= BINDING[op]:
            reduce()
        stack.append(op)
        output.append(operand)
    while stack:
        reduce()
    return output[0]


def test_precedence_oracle():
    today = date.today()
    rng = np.random.RandomState(today.year*today.month*today.day)
    operators = sorted(BINDING)
    for i in range(1000):
        n = rng.randint(7)
        operands, texts = [], []
        for j in range(n + 1):
            name = 'v%i' % j
            if rng.randint(4) == 0:
                operands.append(Unary('-', Name(name)))
                texts.append('-' + name)
            else:
                operands.append(Name(name))
                texts.append(name)
        ops = [operators[k] for k in rng.randint(len(operators), size=n)]
        source = texts[0] + ''.join(' %s %s' % pair for pair in zip(ops, texts[1:]))
        assert parse_expression(source) == shunting_yard(operands, ops), source


@pytest.mark.parametrize('name', ['comp.mj', 'comp_int.mj', 'point_demo.mj', 'intro.mj',
                                  'value_of.mj', 'side_effects.mj'])
def test_spans_nest(name):
    unit = parse_source(fixture_source(name), name)
    for node in Ast.walk_unit(unit):
        assert node.span is not None, repr(node)
        if getattr(node, 'opSpan', None) is not None:
            assert node.span.contains(node.opSpan), repr(node)
        for child in node.children():
            assert node.span.contains(child.span), (repr(node), repr(child))
