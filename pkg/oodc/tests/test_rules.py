"""
One positive and one negative program for every overloading rule.
Positive programs check the method an operator resolves to and the
translated statement; negative ones check the exact error reported.
"""
import pytest

from oodc.TypeCheck import OO, BASE, overloaded_nodes
from oodc.tests.Fixtures import program, attributed, desugared_text, error_codes, compile_text

CLASSES = '''
class Box {}
class Point {
    double x;
    Point(double x) { this.x = x; }
    Point add(Point o) { return new Point(x + o.x); }
}
class LongCompare { long compareTo(LongCompare o) { return 0L; } }
class InstanceValueOf { InstanceValueOf valueOf(int x) { return this; } }
interface Left {}
interface Right {}
class Both implements Left, Right {}
class Twice {
    Twice add(Left x) { return this; }
    Twice add(Right x) { return this; }
}
class Table {
    int set(int k, String v) { return 0; }
    int put(int k, String v) { return 1; }
}
'''

BIG2 = 'BigInteger a, BigInteger b'
BINARY = [('+', 'add'), ('-', 'subtract'), ('*', 'multiply'), ('/', 'divide'), ('%', 'remainder'),
          ('&', 'and'), ('|', 'or'), ('^', 'xor')]

POSITIVE = [pytest.param(BIG2, 'BigInteger', 'return a %s b;' % op, name, 'return a.%s(b);' % name,
                         id='binary-%s' % name) for op, name in BINARY] + [
    pytest.param('BigInteger a, int n', 'BigInteger', 'return a << n;', 'shiftLeft', 'return a.shiftLeft(n);',
        id='binary-shiftLeft'),
    pytest.param('BigInteger a, int n', 'BigInteger', 'return a >> n;', 'shiftRight', 'return a.shiftRight(n);',
        id='binary-shiftRight'),
    pytest.param('BigInteger a', 'BigInteger', 'return -a;', 'negate', 'return a.negate();', id='unary-negate'),
    pytest.param('BigInteger a', 'BigInteger', 'return ~a;', 'not', 'return a.not();', id='unary-not'),
] + [pytest.param(BIG2, 'boolean', 'return a %s b;' % op, 'compareTo', 'return a.compareTo(b) %s 0;' % op,
                  id='compare-%s' % op) for op in ['<', '<=', '>', '>=']] + [
    pytest.param('List<Point> xs, int i', 'Point', 'return xs[i];', 'get', 'return xs.get(i);',
        id='index-get-list'),
    pytest.param('Map<String, Point> m', 'Point', 'return m["k"];', 'get', 'return m.get("k");',
        id='index-get-map'),
    pytest.param('List<Point> xs, Point p', 'void', 'xs[0] = p;', 'set', 'xs.set(0, p);', id='index-set'),
    pytest.param('Map<String, Point> m, Point p', 'void', 'm["k"] = p;', 'put', 'm.put("k", p);',
        id='index-put'),
    pytest.param('', 'BigInteger', 'BigInteger a = 1;\nreturn a;', 'valueOf',
        'BigInteger a = BigInteger.valueOf(1);', id='valueOf-declaration'),
    pytest.param('BigInteger a', 'BigInteger', 'a = 5;\nreturn a;', 'valueOf',
        'a = BigInteger.valueOf(5);', id='valueOf-assignment'),
    pytest.param('Point p, Point q', 'Point', 'return p + q;', 'add', 'return p.add(q);',
        id='user-class-add'),
]


@pytest.mark.parametrize('params, returnType, body, methodName, expected', POSITIVE)
def test_rule_applies(params, returnType, body, methodName, expected):
    source = program(body, returnType, params, CLASSES)
    nodes = overloaded_nodes(attributed(source).unit)
    assert len(nodes) == 1
    assert nodes[0].resolution.method.name == methodName
    text = desugared_text(source)
    assert expected in text


@pytest.mark.parametrize('params, returnType, body, methodName, expected', POSITIVE)
def test_rule_disabled_without_overloading(params, returnType, body, methodName, expected):
    source = program(body, returnType, params, CLASSES)
    assert error_codes(source, BASE) != []


@pytest.mark.parametrize('params, returnType, body, methodName, expected', POSITIVE)
def test_translation_is_plain(params, returnType, body, methodName, expected):
    text = desugared_text(program(body, returnType, params, CLASSES))
    result = compile_text(text, BASE)
    assert result.diagnostics == []
    assert all(overloaded_nodes(a.unit) == [] for a in result.attributions)


NEGATIVE = [pytest.param('Box a, Box b', 'Box', 'return a %s b;' % op, 'E130', id='binary-%s' % name)
            for op, name in BINARY + [('<<', 'shiftLeft'), ('>>', 'shiftRight')]] + [
    pytest.param(BIG2, 'BigInteger', 'return a << b;', 'E130', id='shift-by-biginteger'),
    pytest.param('Box a', 'Box', 'return -a;', 'E130', id='unary-negate'),
    pytest.param('Box a', 'Box', 'return ~a;', 'E130', id='unary-not'),
    pytest.param('BigInteger a', 'boolean', 'return !a;', 'E130', id='unary-bang-never-overloaded'),
    pytest.param('Box a, Box b', 'boolean', 'return a < b;', 'E130', id='compare-no-method'),
    pytest.param('BigInteger a', 'boolean', 'return a <= 1;', 'E130', id='compare-wrong-argument'),
    pytest.param('LongCompare a, LongCompare b', 'boolean', 'return a > b;', 'E131', id='compare-not-int'),
    pytest.param('Box a', 'Box', 'return a[0];', 'E130', id='index-no-get'),
    pytest.param('List<Point> xs', 'Point', 'return xs["a"];', 'E130', id='index-wrong-key'),
    pytest.param('Map<String, Point> m', 'void', 'm["k"] = 1;', 'E130', id='index-write-wrong-value'),
    pytest.param('', 'void', 'String s = new Point(1.0);', 'E140', id='valueOf-missing'),
    pytest.param('', 'void', 'InstanceValueOf v = 1;', 'E141', id='valueOf-not-static'),
    pytest.param('Twice t, Both b', 'Twice', 'return t + b;', 'E120', id='ambiguous'),
    pytest.param('BigInteger a, BigInteger b', 'boolean', 'return a && b;', 'E130',
        id='logical-never-overloaded'),
]


@pytest.mark.parametrize('params, returnType, body, code', NEGATIVE)
def test_rule_rejects(params, returnType, body, code):
    assert error_codes(program(body, returnType, params, CLASSES)) == [code]


def test_set_preferred_over_put():
    source = program('tab[1] = "x";', 'void', 'Table tab', CLASSES)
    attribution = attributed(source)
    assert [d.code for d in attribution.diagnostics] == ['W050']
    assert overloaded_nodes(attribution.unit)[0].resolution.method.name == 'set'
    assert 'tab.set(1, "x");' in desugared_text(source)


def test_index_write_value_note():
    source = program('Point q = xs[0] = p;', 'void', 'List<Point> xs, Point p', CLASSES)
    attribution = attributed(source)
    assert [d.code for d in attribution.diagnostics] == ['N060']
    assert 'Point q = xs.set(0, p);' in desugared_text(source)
