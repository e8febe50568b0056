"""
Plain programs are unaffected by the overloading rules: they type the
same way in both modes, translate to themselves and compute the same
result.
"""
import pytest

from oodc.Emitter import emit
from oodc.TypeCheck import OO, BASE, operator_nodes
from oodc.Values import python_value
from oodc.tests.Fixtures import program, attributed, desugared_text, compile_text, run_text

CLASSES = '''
class Counter {
    int count;
    Counter next;
    void bump() { count = count + 1; }
}
'''

PLAIN = [
    pytest.param('return 1 + 2 * 3;', 'int', 7, id='arithmetic'),
    pytest.param('return (1 + 2) * 3;', 'int', 9, id='parentheses'),
    pytest.param('long a = 5; return a * 3 - 1;', 'long', 14, id='long'),
    pytest.param('double d = 2; return d / 4;', 'double', 0.5, id='double'),
    pytest.param('Integer a = 4; Integer b = 5; return a + b;', 'int', 9, id='boxed-arithmetic'),
    pytest.param('Integer a = 4; return -a;', 'int', -4, id='boxed-negation'),
    pytest.param('Long a = 4L; return a < 5;', 'boolean', True, id='boxed-compare'),
    pytest.param('Double d = 1.5; return d * 2;', 'double', 3.0, id='boxed-double'),
    pytest.param('int x = 6; return x << 2 >> 1;', 'int', 12, id='shifts'),
    pytest.param('return ~0 & 7 ^ 2 | 8;', 'int', 13, id='bitwise'),
    pytest.param('boolean p = true; return !p || p && false;', 'boolean', False, id='logical'),
    pytest.param('return true & false | true ^ false;', 'boolean', True, id='boolean-bitwise'),
    pytest.param('return "n" + 1 + 2;', 'String', 'n12', id='concatenation'),
    pytest.param('String s = "a"; s = s + "b"; return s;', 'String', 'ab', id='string-assignment'),
    pytest.param('int[] a = new int[4]; a[1] = 3; a[2] = a[1] + 1; return a[1] * a[2];', 'int', 12,
                 id='array-index'),
    pytest.param('Integer[] a = new Integer[1]; a[0] = 7; return a[0];', 'Integer', 7, id='boxed-array'),
    pytest.param('Counter c = new Counter(); c.bump(); c.bump(); return c.count;', 'int', 2, id='fields'),
    pytest.param('Counter c = new Counter(); c.next = new Counter(); c.next.count = 4; return c.next.count;',
                 'int', 4, id='field-assignment'),
    pytest.param('Counter c = null; return c == null;', 'boolean', True, id='null-compare'),
    pytest.param('int i = 0; int s = 0; while (i < 5) { if (i % 2 == 0) s = s + i; i = i + 1; } return s;',
                 'int', 6, id='loop'),
    pytest.param('BigInteger a = BigInteger.valueOf(3); return a.multiply(a).add(BigInteger.valueOf(1));',
                 'BigInteger', 10, id='explicit-biginteger'),
    pytest.param('BigInteger a = BigInteger.valueOf(3); return a.compareTo(BigInteger.valueOf(4)) < 0;',
                 'boolean', True, id='explicit-compare'),
    pytest.param('List<Integer> xs = new List<Integer>(); xs.add(2); xs.set(0, xs.get(0) * 5); return xs.get(0);',
                 'int', 10, id='explicit-list'),
    pytest.param('Map<String, Long> m = new Map<String, Long>(); m.put("k", 3L); return m.get("k") + m.size();',
                 'long', 4, id='explicit-map'),
    pytest.param('Object o = "text"; return o.toString();', 'String', 'text', id='object'),
]


@pytest.mark.parametrize('body, returnType, expected', PLAIN)
def test_modes_agree(body, returnType, expected):
    source = program(body, returnType, '', CLASSES)
    oo, base = attributed(source, OO), attributed(source, BASE)
    assert [n.resolution for n in operator_nodes(oo.unit)] == [n.resolution for n in operator_nodes(base.unit)]
    assert [getattr(n, 'type', None) for n in operator_nodes(oo.unit)] == \
        [getattr(n, 'type', None) for n in operator_nodes(base.unit)]


@pytest.mark.parametrize('body, returnType, expected', PLAIN)
def test_translation_is_identity(body, returnType, expected):
    source = program(body, returnType, '', CLASSES)
    result = compile_text(source)
    assert result.desugared[0] == result.units[0]
    assert desugared_text(source) == emit(result.units[0])


@pytest.mark.parametrize('body, returnType, expected', PLAIN)
def test_results_agree(body, returnType, expected):
    source = program(body, returnType, '', CLASSES)
    oo = python_value(run_text(source, 'T.f', OO).value)
    base = python_value(run_text(source, 'T.f', BASE).value)
    assert oo == base == expected
