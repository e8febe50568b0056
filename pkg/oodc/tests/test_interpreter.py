import re
import operator
import unittest
from datetime import date
from io import StringIO

import numpy as np
import pytest

from oodc.Diagnostics import CompileError, InterpreterError
from oodc.TypeCheck import BASE
from oodc.Interpreter import Interpreter, evaluate_program
from oodc.Natives import call_native, check_registry
from oodc.Emitter import emit
from oodc.Values import (BigIntVal, IntVal, StringVal, python_value, wrap_int, wrap_long,
    truncating_divmod, format_double)
from oodc.tests.Fixtures import fixture_source, program, compile_text, run_text


def run_body(body, returnType='int', classes=''):
    return run_text(program(body, returnType, '', classes), entry='T.f')


def value_of(body, returnType='int', classes=''):
    return python_value(run_body(body, returnType, classes).value)


class FixtureProgram(object):
    """Runs a fixture and checks its result and printed output."""
    fileName = None
    expectedValue = None
    expectedOutput = ''

    def setUp(self):
        self.result = run_text(fixture_source(self.fileName))

    def test_value(self):
        self.assertEqual(python_value(self.result.value), self.expectedValue)

    def test_output(self):
        self.assertEqual(self.result.output, self.expectedOutput)


class TestComp(FixtureProgram, unittest.TestCase):
    fileName = 'comp.mj'
    expectedValue = 5

    def test_value_kind(self):
        self.assertEqual(self.result.value, BigIntVal(5))


class TestCompInt(FixtureProgram, unittest.TestCase):
    fileName = 'comp_int.mj'
    expectedValue = 5

    def test_value_kind(self):
        self.assertEqual(self.result.value, IntVal(5))


class TestPointDemo(FixtureProgram, unittest.TestCase):
    fileName = 'point_demo.mj'
    expectedOutput = '(14.0,18.0)\n'


class TestIntro(FixtureProgram, unittest.TestCase):
    fileName = 'intro.mj'
    expectedOutput = '{7=17}\n'


class TestValueOf(FixtureProgram, unittest.TestCase):
    fileName = 'value_of.mj'
    expectedValue = 1


class TestSideEffects(FixtureProgram, unittest.TestCase):
    """Operands are evaluated left to right, each exactly once."""
    fileName = 'side_effects.mj'
    expectedOutput = ''.join(line + '\n' for line in
        ['a', 'b', 'c', 'd', '11', 'e', 'f', 'le', 'g', 'h', '[9]'])


def test_overloaded_unit_rejected():
    result = compile_text(fixture_source('comp.mj'))
    with pytest.raises(CompileError) as excinfo:
        evaluate_program(result.units[0], result.table)
    assert set(excinfo.value.codes) == set(['E130'])


def test_same_result_from_plain_source():
    result = compile_text(fixture_source('comp_int.mj'), BASE)
    assert evaluate_program(result.units[0], result.table).value == IntVal(5)


def test_stream():
    stream = StringIO()
    result = compile_text(fixture_source('point_demo.mj'))
    evaluate_program(result.program, result.table, stream=stream)
    assert stream.getvalue() == '(14.0,18.0)\n'


def test_missing_entry():
    with pytest.raises(ValueError):
        run_text(program('return 1;', 'int'))


@pytest.mark.parametrize('body, returnType, expected', [
    pytest.param('return 2147483647 + 1;', 'int', -2147483648, id='int-overflow'),
    pytest.param('return -2147483648;', 'int', -2147483648, id='int-min'),
    pytest.param('return 9223372036854775807L + 1L;', 'long', -9223372036854775808, id='long-overflow'),
    pytest.param('return 65536 * 65536;', 'int', 0, id='int-multiply-overflow'),
    pytest.param('return 65536L * 65536;', 'long', 4294967296, id='long-promotion'),
    pytest.param('return -7 / 2;', 'int', -3, id='divide-truncates'),
    pytest.param('return -7 % 2;', 'int', -1, id='remainder-follows-dividend'),
    pytest.param('return 7 % -2;', 'int', 1, id='remainder-negative-divisor'),
    pytest.param('return 1 << 33;', 'int', 2, id='shift-count-masked'),
    pytest.param('return 1L << 65;', 'long', 2, id='long-shift-count-masked'),
    pytest.param('return -8 >> 1;', 'int', -4, id='arithmetic-shift'),
    pytest.param('return ~5;', 'int', -6, id='complement'),
    pytest.param('return 6 & 3 | 8 ^ 1;', 'int', 11, id='bitwise'),
    pytest.param('return 7 / 2.0;', 'double', 3.5, id='double-promotion'),
    pytest.param('return 5.5 % 2;', 'double', 1.5, id='double-remainder'),
    pytest.param('return 0.1 + 0.2;', 'double', 0.30000000000000004, id='double-rounding'),
    pytest.param('return 1.0 / 0;', 'double', float('inf'), id='double-infinity'),
    pytest.param('return "a" + 1 + 2;', 'String', 'a12', id='concatenation-left'),
    pytest.param('return 1 + 2 + "a";', 'String', '3a', id='concatenation-right'),
    pytest.param('return "x" + null + true + 1.5 + 100.0;', 'String', 'xnulltrue1.5100.0', id='string-conversion'),
    pytest.param('return "ab" == "a" + "b";', 'boolean', True, id='string-equality'),
    pytest.param('Integer a = 1000; Integer b = 1000; return a == b;', 'boolean', True, id='boxed-equality'),
    pytest.param('Integer a = 3; return a * 2;', 'int', 6, id='unboxing'),
    pytest.param('int s = 0; int i = 1; while (i <= 10) { s = s + i; i = i + 1; } return s;', 'int', 55,
                 id='loop'),
    pytest.param('int[] a = new int[3]; a[0] = 4; a[2] = a[0] * 2; return a[0] + a[1] + a[2] + a.length;',
                 'int', 15, id='array'),
    pytest.param('long x = 3; x = x * 2; return x;', 'long', 6, id='widening-assignment'),
    pytest.param('if (1 > 2) return 1; else if (2 > 1) return 2; return 3;', 'int', 2, id='else-if'),
    pytest.param('BigInteger a = 10; BigInteger b = 98; return a * a > b;', 'boolean', True, id='overloaded-compare'),
    pytest.param('return new BigInteger("-12").toString();', 'String', '-12', id='biginteger-from-string'),
    pytest.param('BigInteger a = 2; return a << 100 >> 99;', 'BigInteger', 4, id='biginteger-shift'),
    pytest.param('BigInteger a = 2; return a << -1;', 'BigInteger', 1, id='biginteger-negative-shift'),
    pytest.param('BigInteger a = -7; BigInteger b = 2; return a % b;', 'BigInteger', -1,
                 id='biginteger-remainder'),
    pytest.param('BigInteger a = 12; BigInteger b = 5; return ~a & b;', 'BigInteger', 1, id='biginteger-bitwise'),
    pytest.param('List<Integer> xs = new List<Integer>(); xs.add(1); xs.add(2); return "" + xs;',
                 'String', '[1, 2]', id='list-string'),
    pytest.param('Map<String, Integer> m = new Map<String, Integer>(); m["a"] = 1; m["a"] = m["a"] + 1; '
                 'return m["a"];', 'int', 2, id='map-index'),
    pytest.param('List<String> xs = new List<String>(); xs.add("p"); return xs[0] = "q";', 'String', 'p',
                 id='set-returns-previous'),
])
def test_evaluation(body, returnType, expected):
    assert value_of(body, returnType) == expected


CLASSES = '''
class A {
    String name() { return "A"; }
    String greet() { return "I am " + name(); }
}
class B extends A {
    String name() { return "B"; }
}
class Base {
    int n;
    Base() { n = 10; }
}
class Derived extends Base {
    int m;
    Derived(int m) { this.m = m + n; }
}
class Cell {
    int v;
    BigInteger big;
}
class Box {}
class S {
    static boolean t(String s) { Out.println(s); return true; }
}
'''


@pytest.mark.parametrize('body, returnType, expected', [
    pytest.param('A x = new B(); return x.greet();', 'String', 'I am B', id='dynamic-dispatch'),
    pytest.param('return new Derived(5).m;', 'int', 15, id='superclass-constructor'),
    pytest.param('Cell c = new Cell(); return c.v;', 'int', 0, id='field-default'),
    pytest.param('Cell c = new Cell(); return c.big == null;', 'boolean', True, id='reference-default'),
    pytest.param('return new Box() == new Box();', 'boolean', False, id='identity'),
    pytest.param('Box b = new Box(); return b == b;', 'boolean', True, id='same-object'),
])
def test_objects(body, returnType, expected):
    assert value_of(body, returnType, CLASSES) == expected


def test_default_to_string():
    text = value_of('return "" + new Box();', 'String', CLASSES)
    assert re.match(r'Box@[0-9a-f]+\Z', text)


def test_short_circuit():
    result = run_body('boolean r = false && S.t("x"); boolean q = true || S.t("y"); return r || q;',
                      'boolean', CLASSES)
    assert result.value.value is True
    assert result.output == ''


@pytest.mark.parametrize('body, returnType, code', [
    pytest.param('BigInteger a = null; return a + a;', 'BigInteger', 'R001', id='null-receiver'),
    pytest.param('Integer a = null; int b = a; return b;', 'int', 'R001', id='null-unboxing'),
    pytest.param('return new BigInteger(null);', 'BigInteger', 'R001', id='null-biginteger-string'),
    pytest.param('List<Integer> xs = new List<Integer>(); return xs[0];', 'Integer', 'R002', id='list-index'),
    pytest.param('int[] a = new int[2]; return a[2];', 'int', 'R002', id='array-index'),
    pytest.param('int[] a = new int[0 - 1]; return 0;', 'int', 'R002', id='negative-array-size'),
    pytest.param('int z = 0; return 1 / z;', 'int', 'R003', id='int-division'),
    pytest.param('long z = 0; return 1L % z;', 'long', 'R003', id='long-remainder'),
    pytest.param('BigInteger z = 0; BigInteger one = 1; return one / z;', 'BigInteger', 'R003',
                 id='biginteger-division'),
    pytest.param('return new BigInteger("12a");', 'BigInteger', 'R005', id='malformed-biginteger'),
])
def test_runtime_errors(body, returnType, code):
    with pytest.raises(InterpreterError) as excinfo:
        run_body(body, returnType)
    assert excinfo.value.code == code
    assert 'runtime error[%s]' % code in str(excinfo.value)


def test_runtime_error_location():
    with pytest.raises(InterpreterError) as excinfo:
        run_body('BigInteger a = null; return a.add(a);', 'BigInteger')
    assert excinfo.value.span is not None
    assert str(excinfo.value).startswith('test.mj:4:')
    assert str(excinfo.value).endswith("runtime error[R001]: null receiver for 'add'")


def test_missing_native():
    result = compile_text(fixture_source('comp.mj'))
    interpreter = Interpreter(result.program, result.table)
    with pytest.raises(InterpreterError) as excinfo:
        call_native(interpreter, 'BigInteger.gcd', BigIntVal(4), [BigIntVal(6)])
    assert excinfo.value.code == 'R004'


def test_every_stub_native_bound():
    result = compile_text(fixture_source('comp.mj'))
    assert check_registry(result.table) == []


@pytest.mark.parametrize('x, expected', [
    pytest.param(1.0, '1.0', id='one'),
    pytest.param(100.0, '100.0', id='hundred'),
    pytest.param(0.001, '0.001', id='small-decimal'),
    pytest.param(123456.789, '123456.789', id='decimal'),
    pytest.param(1e7, '1.0E7', id='ten-million'),
    pytest.param(12345678.9, '1.23456789E7', id='large'),
    pytest.param(1e20, '1.0E20', id='huge'),
    pytest.param(1.5e-4, '1.5E-4', id='tiny'),
    pytest.param(-1.5e-4, '-1.5E-4', id='negative-tiny'),
    pytest.param(-0.0, '-0.0', id='negative-zero'),
    pytest.param(float('nan'), 'NaN', id='nan'),
    pytest.param(float('-inf'), '-Infinity', id='negative-infinity'),
])
def test_format_double(x, expected):
    assert format_double(x) == expected


def test_wrapping():
    assert wrap_int(2**31) == -2**31
    assert wrap_int(-2**31 - 1) == 2**31 - 1
    assert wrap_long(2**63) == -2**63
    assert wrap_long(-1) == -1
    assert truncating_divmod(-7, 2) == (-3, -1)
    assert truncating_divmod(7, -2) == (-3, 1)
    assert truncating_divmod(-7, -2) == (3, -1)


OPS = '''
class Ops {
    static BigInteger add(BigInteger a, BigInteger b) { return a + b; }
    static BigInteger sub(BigInteger a, BigInteger b) { return a - b; }
    static BigInteger mul(BigInteger a, BigInteger b) { return a * b; }
    static BigInteger quo(BigInteger a, BigInteger b) { return a / b; }
    static BigInteger rem(BigInteger a, BigInteger b) { return a % b; }
    static BigInteger band(BigInteger a, BigInteger b) { return a & b; }
    static BigInteger bor(BigInteger a, BigInteger b) { return a | b; }
    static BigInteger bxor(BigInteger a, BigInteger b) { return a ^ b; }
    static BigInteger neg(BigInteger a) { return -a; }
    static BigInteger inv(BigInteger a) { return ~a; }
    static BigInteger shl(BigInteger a, int n) { return a << n; }
    static BigInteger shr(BigInteger a, int n) { return a >> n; }
}
'''


def random_big(rng):
    """A random integer in [-2**80, 2**80]."""
    high = int(rng.randint(-2**20, 2**20))
    return high*2**60 + int(rng.randint(0, 2**30))*2**30 + int(rng.randint(0, 2**30))


def truncated(a, b):
    q = abs(a) // abs(b)
    return q if (a < 0) == (b < 0) else -q


@pytest.mark.slow
def test_random_biginteger_arithmetic():
    today = date.today()
    rng = np.random.RandomState(today.year*today.month*today.day)
    result = compile_text(OPS)
    interpreter = Interpreter(result.program, result.table)

    def call(name, *args):
        values = [BigIntVal(a) if not isinstance(a, IntVal) else a for a in args]
        return python_value(interpreter.call_static('Ops.' + name, values))

    for i in range(1000):
        a, b = random_big(rng), random_big(rng)
        n = int(rng.randint(0, 100))
        assert call('add', a, b) == a + b
        assert call('sub', a, b) == a - b
        assert call('mul', a, b) == a * b
        if b != 0:
            assert call('quo', a, b) == truncated(a, b)
            assert call('rem', a, b) == a - b*truncated(a, b)
        assert call('band', a, b) == a & b
        assert call('bor', a, b) == a | b
        assert call('bxor', a, b) == a ^ b
        assert call('neg', a) == -a
        assert call('inv', a) == ~a
        assert call('shl', a, IntVal(n)) == a << n
        assert call('shr', a, IntVal(n)) == a >> n


RELATIONS = '''
class Relations {
    static boolean lt(BigInteger a, BigInteger b) { return a < b; }
    static boolean le(BigInteger a, BigInteger b) { return a <= b; }
    static boolean gt(BigInteger a, BigInteger b) { return a > b; }
    static boolean ge(BigInteger a, BigInteger b) { return a >= b; }
}
'''


def random_pair(rng):
    """Mostly independent pairs, with equal, negated and adjacent ones mixed in."""
    a = random_big(rng)
    r = rng.randint(5)
    if r == 0:
        return a, a
    if r == 1:
        return a, -a
    if r == 2:
        return a, a + int(rng.randint(-1, 2))
    return a, random_big(rng)


@pytest.mark.parametrize('name, relation, translated', [
    pytest.param('lt', operator.lt, 'a.compareTo(b) < 0', id='less'),
    pytest.param('le', operator.le, 'a.compareTo(b) <= 0', id='at-most'),
    pytest.param('gt', operator.gt, 'a.compareTo(b) > 0', id='greater'),
    pytest.param('ge', operator.ge, 'a.compareTo(b) >= 0', id='at-least'),
])
def test_random_biginteger_comparison(name, relation, translated):
    today = date.today()
    rng = np.random.RandomState(today.year*today.month*today.day)
    result = compile_text(RELATIONS)
    assert 'return %s;' % translated in emit(result.desugared[0])
    interpreter = Interpreter(result.program, result.table)

    pairs = [random_pair(rng) for i in range(1000)]
    assert any(a == b for a, b in pairs) and any(a < 0 for a, b in pairs)
    for a, b in pairs:
        value = interpreter.call_static('Relations.' + name, [BigIntVal(a), BigIntVal(b)])
        assert python_value(value) == relation(a, b), (a, b)
