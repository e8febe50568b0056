from collections import namedtuple, OrderedDict

from . import Ast
from . import Types
from .Types import (NamedType, TypeVar, ArrayType, PrimitiveType, NullType, VoidType,
    OBJECT, ERROR, VOID, box, unbox, substitute, mentions, erasure)
from .Diagnostics import CompileError, error


class MethodSig(namedtuple("MethodSig", ["name", "typeParams", "paramTypes", "returnType",
        "isStatic", "declaringClass", "isNative", "origin"])):
    """
    A method or constructor signature.

    Attributes
    ----------
    name : str
        Method name; constructors are named '<init>'.
    typeParams : tuple of TypeVar
        The method's own type parameters (empty once instantiated).
    paramTypes : tuple of Type
    returnType : Type
    isStatic : bool
    declaringClass : str
    isNative : bool
        True for stub methods whose body is provided by the interpreter.
    origin : MethodSig or None
        For a signature produced by substituting type arguments, the
        declared signature it was produced from.
    """
    __slots__ = ()

    @property
    def declared(self):
        return self.origin if self.origin is not None else self

    @property
    def qualifiedName(self):
        return '%s.%s' % (self.declaringClass, self.name)

    @property
    def isGeneric(self):
        return bool(self.declared.typeParams)

    def instantiate(self, mapping):
        if not mapping:
            return self
        return self._replace(
            paramTypes=tuple(substitute(p, mapping) for p in self.paramTypes),
            returnType=substitute(self.returnType, mapping),
            origin=self.declared)

    def __str__(self):
        return '%s(%s):%s' % (self.name, ', '.join(str(p) for p in self.paramTypes), self.returnType)


class AmbiguousMethodError(Exception):
    """Raised by most_specific when no candidate is more specific than all others."""
    def __init__(self, candidates):
        self.candidates = list(candidates)
        super(AmbiguousMethodError, self).__init__(
            'ambiguous: %s' % ', '.join(str(m) for m in self.candidates))


class ClassSig(object):
    """
    Symbol-table entry of a class or interface.

    Attributes
    ----------
    name : str
    kind : {'class', 'interface'}
    typeParams : list of TypeVar
    superclass : NamedType or None
        None for interfaces and for the root class Object.
    interfaces : list of NamedType
    fields : OrderedDict
        Field name to Type.
    methods : list of MethodSig
    constructors : list of MethodSig
    isStub : bool
    decl : :class:`oodc.Ast.ClassDecl`
    bodies : dict
        Declared MethodSig (methods and constructors) to its body.
    memberSigs : dict
        Position of a method or constructor in ``decl.members`` to its
        declared MethodSig (None for a rejected duplicate).
    """
    def __init__(self, name, kind, decl, isStub):
        self.name = name
        self.kind = kind
        self.decl = decl
        self.isStub = isStub
        self.isAbstract = decl is not None and 'abstract' in decl.modifiers
        self.typeParams = []
        self.superclass = None
        self.interfaces = []
        self.fields = OrderedDict()
        self.methods = []
        self.constructors = []
        self.bodies = {}
        self.memberSigs = {}

    @property
    def isInterface(self):
        return self.kind == 'interface'

    @property
    def selfType(self):
        return NamedType(self.name, self.typeParams)

    def supertypes(self):
        if self.superclass is not None:
            yield self.superclass
        for i in self.interfaces:
            yield i

    def __repr__(self):
        return '<ClassSig %s %s>' % (self.kind, self.selfType)


class ClassTable(object):
    """
    All classes visible to a program, user classes and stubs alike.
    Immutable once :func:`build_class_table` has returned, which also
    fills ``overrides``, the implementation each class dispatches every
    inherited method to.
    """
    def __init__(self):
        self.classes = OrderedDict()
        self.overrides = {}

    def __contains__(self, name):
        return name in self.classes

    def __getitem__(self, name):
        return self.classes[name]

    def __iter__(self):
        return iter(self.classes.values())

    def __len__(self):
        return len(self.classes)

    def get(self, name, default=None):
        return self.classes.get(name, default)

    def names(self):
        return list(self.classes)

    def find_override(self, runtimeClass, method):
        """
        The declared method that a call to method dispatches to when the
        receiver's runtime class is runtimeClass.

        Parameters
        ----------
        runtimeClass : str
        method : MethodSig
            The statically resolved method, possibly instantiated.

        Returns
        -------
        MethodSig or None
            A declared signature, or None if runtimeClass has no
            implementation.
        """
        key = (runtimeClass, method.declared)
        if key in self.overrides:
            return self.overrides[key]
        return self._dispatch(runtimeClass, method.declared)

    def _dispatch(self, runtimeClass, declared):
        runtimeType = self[runtimeClass].selfType
        view = as_super(runtimeType, declared.declaringClass, self)
        if view is None:
            return None
        wanted = declared.instantiate(class_mapping(view, self))
        for sup in linearize(runtimeType, self):
            mapping = class_mapping(sup, self)
            for m in self[sup.name].methods:
                if m.name != declared.name or len(m.paramTypes) != len(declared.paramTypes):
                    continue
                if _same_parameters(m.instantiate(mapping), wanted):
                    if m.isNative or self[sup.name].bodies.get(m) is not None:
                        return m
        return None

    def _dispatch_map(self):
        """(runtime class name, declared method) to implementation, for every class."""
        overrides = {}
        for cls in self:
            if cls.isInterface:
                continue
            for sup in linearize(cls.selfType, self):
                for m in self[sup.name].methods:
                    overrides[cls.name, m] = self._dispatch(cls.name, m)
        return overrides


def _same_parameters(m, n):
    if m.typeParams or n.declared.typeParams:
        return [erasure(p) for p in m.paramTypes] == [erasure(p) for p in n.paramTypes]
    return tuple(m.paramTypes) == tuple(n.paramTypes)


### hierarchy queries

def class_mapping(t, table):
    """The substitution taking the class's type parameters to t's arguments."""
    cls = table.get(t.name)
    if cls is None or not t.args:
        return {}
    return dict(zip(cls.typeParams, t.args))


def direct_supertypes(t, table):
    """Direct supertypes of the named type t, with t's type arguments substituted."""
    cls = table.get(t.name)
    if cls is None:
        return []
    mapping = class_mapping(t, table)
    sups = [substitute(s, mapping) for s in cls.supertypes()]
    if cls.isInterface and t != OBJECT:
        sups.append(OBJECT)
    return sups


def linearize(t, table):
    """t followed by all its supertypes, breadth first, each once."""
    if isinstance(t, TypeVar):
        t = t.bound if t.bound is not None else OBJECT
        if isinstance(t, TypeVar):
            return linearize(t, table)
    if isinstance(t, ArrayType):
        t = OBJECT
    if not isinstance(t, NamedType) or t.name not in table:
        return []
    order, seen = [], set()
    queue = [t]
    while queue:
        current = queue.pop(0)
        if current.name in seen:
            continue
        seen.add(current.name)
        order.append(current)
        queue.extend(direct_supertypes(current, table))
    return order


def as_super(t, name, table):
    """
    View t as an instance of the class called name, e.g. Point as
    ``MyNumber<Point, Double>``.  Returns None if name is not a
    supertype of t.
    """
    for sup in linearize(t, table):
        if sup.name == name:
            return sup
    return None


def is_subtype(t1, t2, table):
    """
    Whether t1 is a subtype of t2.

    Parameters
    ----------
    t1, t2 : Type
    table : ClassTable

    Returns
    -------
    bool

    Notes
    -----
    Reflexive and transitive.  Primitives follow Java's widening order
    (char <: int <: long <: double), null is a subtype of every
    reference type, generic class types are invariant in their
    arguments, arrays of references are covariant and a type variable
    is a subtype of whatever its bound is a subtype of.
    """
    if t1 == t2 or t1.isError or t2.isError:
        return True
    if isinstance(t1, PrimitiveType):
        return isinstance(t2, PrimitiveType) and t2.name in Types.WIDENS_TO[t1.name]
    if isinstance(t2, PrimitiveType) or isinstance(t1, VoidType) or isinstance(t2, VoidType):
        return False
    if isinstance(t1, NullType):
        return t2.isReference
    if isinstance(t2, NullType):
        return False
    if t2 == OBJECT:
        return True
    if isinstance(t1, TypeVar):
        return is_subtype(t1.bound if t1.bound is not None else OBJECT, t2, table)
    if isinstance(t1, ArrayType):
        if not isinstance(t2, ArrayType):
            return False
        e1, e2 = t1.element, t2.element
        if e1.isPrimitive or e2.isPrimitive:
            return e1 == e2
        return is_subtype(e1, e2, table)
    if isinstance(t1, NamedType) and isinstance(t2, NamedType):
        sup = as_super(t1, t2.name, table)
        return sup is not None and sup.args == t2.args
    return False


def is_convertible(src, dst, table, allowBoxing=True):
    """
    Method-invocation and assignment conversion: subtyping, boxing then
    reference widening, or unboxing then primitive widening.  Widening
    followed by boxing (int to Double) is not a conversion.
    """
    if is_subtype(src, dst, table):
        return True
    if not allowBoxing:
        return False
    if src.isPrimitive:
        boxed = box(src)
        return boxed is not None and is_subtype(boxed, dst, table)
    unboxed = unbox(src)
    return unboxed is not None and is_subtype(unboxed, dst, table)


is_assignable = is_convertible


### member lookup

def find_field(t, name, table):
    """The type of field name of t, with type arguments substituted, or None."""
    for sup in linearize(t, table):
        cls = table[sup.name]
        if name in cls.fields:
            return substitute(cls.fields[name], class_mapping(sup, table))
    return None


def member_methods(t, name, table):
    """
    All methods called name visible on t, instantiated with t's type
    arguments.  A method overridden lower in the hierarchy is reported
    once, from the most derived class.
    """
    found = []
    seen = set()
    for sup in linearize(t, table):
        mapping = class_mapping(sup, table)
        for m in table[sup.name].methods:
            if m.name != name:
                continue
            inst = m.instantiate(mapping)
            key = tuple(erasure(p) for p in inst.paramTypes) if m.typeParams else inst.paramTypes
            if key in seen:
                continue
            seen.add(key)
            found.append(inst)
    return found


def _unify(params, args, variables, table, allowBoxing):
    """
    First-order unification of formal parameter types against actual
    argument types, solving for variables.  Boxing is allowed only where
    a variable meets a primitive argument.  Returns the substitution, or
    None if the variables cannot be solved consistently.
    """
    subst = {}

    def exact(p, a):
        if isinstance(p, TypeVar) and p in variables:
            if p in subst:
                return subst[p] == a
            if a.isPrimitive or isinstance(a, (NullType, VoidType)):
                return False
            subst[p] = a
            return True
        if isinstance(p, NamedType):
            return (isinstance(a, NamedType) and a.name == p.name and len(a.args) == len(p.args)
                    and all(exact(x, y) for x, y in zip(p.args, a.args)))
        if isinstance(p, ArrayType):
            return isinstance(a, ArrayType) and exact(p.element, a.element)
        return p == a

    def loose(p, a):
        if not mentions(p, variables):
            return True
        if a.isError:
            return True
        if isinstance(p, TypeVar):
            if a.isPrimitive:
                if not allowBoxing:
                    return False
                a = box(a)
                if a is None:
                    return False
            if isinstance(a, NullType):
                return True
            if p in subst:
                current = subst[p]
                if current == a or is_subtype(a, current, table):
                    return True
                if is_subtype(current, a, table):
                    subst[p] = a
                    return True
                return False
            subst[p] = a
            return True
        if isinstance(a, NullType):
            return True
        if isinstance(p, NamedType):
            if a.isPrimitive and allowBoxing:
                a = box(a)
            if a is None or a.isPrimitive:
                return False
            sup = as_super(a, p.name, table)
            return sup is not None and all(exact(x, y) for x, y in zip(p.args, sup.args))
        if isinstance(p, ArrayType):
            return isinstance(a, ArrayType) and exact(p.element, a.element)
        return False

    for p, a in zip(params, args):
        if not loose(p, a):
            return None
    return subst


def instantiate_call(method, argTypes, table, allowBoxing=True):
    """
    The method instantiated for a call with argTypes, or None when it is
    not applicable.
    """
    if len(method.paramTypes) != len(argTypes):
        return None
    inst = method
    variables = method.typeParams
    if variables:
        subst = _unify(method.paramTypes, argTypes, variables, table, allowBoxing)
        if subst is None or any(v not in subst for v in variables):
            return None
        for v in variables:
            bound = substitute(v.bound if v.bound is not None else OBJECT, subst)
            if not is_subtype(subst[v], bound, table):
                return None
        inst = method.instantiate(subst)._replace(typeParams=())
    for a, p in zip(argTypes, inst.paramTypes):
        if not is_convertible(a, p, table, allowBoxing):
            return None
    return inst


def _sort_key(m):
    return (m.declaringClass, str(m))


def lookup_applicable(recv, name, args, table, wantStatic=False, allowBoxing=True):
    """
    Find all methods of recv called name that accept arguments of the
    given types.

    Parameters
    ----------
    recv : Type
        Receiver type; a type variable is searched through its bound.
    name : str
    args : list of Type
    table : ClassTable
    wantStatic : bool, optional
        If True only static methods are returned.
    allowBoxing : bool, optional
        If False only identity and subtyping are accepted at each
        parameter.

    Returns
    -------
    list of MethodSig
        Applicable methods instantiated for this call, in a fixed order
        that does not depend on declaration order.  Empty if none apply.
    """
    applicable = []
    for m in member_methods(recv, name, table):
        if wantStatic and not m.isStatic:
            continue
        inst = instantiate_call(m, args, table, allowBoxing)
        if inst is not None:
            applicable.append(inst)
    return sorted(applicable, key=_sort_key)


def _more_specific(m, n, table):
    return all(is_subtype(p, q, table) for p, q in zip(m.paramTypes, n.paramTypes))


def most_specific(candidates, table):
    """
    The unique candidate whose parameter types are pointwise subtypes of
    every other candidate's.

    Parameters
    ----------
    candidates : list of MethodSig
        Methods all applicable to one argument list.
    table : ClassTable

    Returns
    -------
    MethodSig

    Raises
    ------
    AmbiguousMethodError
        If no single candidate is the most specific.
    """
    candidates = list(candidates)
    best = [m for m in candidates
            if all(_more_specific(m, n, table) for n in candidates if n is not m)]
    if len(best) != 1:
        raise AmbiguousMethodError(candidates)
    return best[0]


def resolve_method(recv, name, args, table, wantStatic=False):
    """
    Resolve a call as Java does: methods applicable by subtyping alone
    are preferred and boxing is tried only if there are none.

    Returns
    -------
    MethodSig or None

    Raises
    ------
    AmbiguousMethodError
    """
    for allowBoxing in (False, True):
        found = lookup_applicable(recv, name, args, table, wantStatic, allowBoxing)
        if found:
            return most_specific(found, table)
    return None


def resolve_constructor(t, args, table):
    """Resolve ``new t(args)``; returns None if no constructor applies."""
    cls = table[t.name]
    mapping = class_mapping(t, table)
    for allowBoxing in (False, True):
        found = []
        for c in cls.constructors:
            inst = instantiate_call(c.instantiate(mapping), args, table, allowBoxing)
            if inst is not None:
                found.append(inst)
        if found:
            return most_specific(sorted(found, key=_sort_key), table)
    return None


### construction

class _TableBuilder(object):
    def __init__(self, verbose):
        self.table = ClassTable()
        self.diagnostics = []
        self.verbose = verbose

    def report(self, code, span, message):
        self.diagnostics.append(error(code, span, message))

    def enter(self, decl, isStub):
        if decl.name in self.table:
            self.report('E020', decl.span, "duplicate class '%s'" % decl.name)
            return None
        cls = ClassSig(decl.name, decl.declKind, decl, isStub)
        cls.typeParams = self.declare_type_params(decl.typeParams, decl.name)
        self.table.classes[decl.name] = cls
        return cls

    def declare_type_params(self, params, owner):
        variables, names = [], set()
        for p in params:
            if p.name in names:
                self.report('E025', p.span, "duplicate type parameter '%s'" % p.name)
                continue
            names.add(p.name)
            variables.append(TypeVar(p.name, owner))
        return variables

    def bind_bounds(self, params, variables, scope):
        byName = dict((v.name, v) for v in variables)
        for p in params:
            v = byName.get(p.name)
            if v is None or v.bound is not None:
                continue
            v.bound = self.resolve(p.bound, scope) if p.bound is not None else OBJECT

    def resolve(self, ref, scope, allowVoid=False):
        """Resolve a TypeRef against type variables in scope and the class table."""
        if ref.name == 'void':
            if not allowVoid or ref.isArray:
                self.report('E101', ref.span, "'void' is not allowed here")
                return ERROR
            return VOID
        if ref.name in Types.PRIMITIVES:
            t = Types.primitive(ref.name)
        elif ref.name in scope:
            t = scope[ref.name]
            if ref.args:
                self.report('E102', ref.span, "type variable '%s' cannot have type arguments" % ref.name)
                return ERROR
        elif ref.name in self.table:
            cls = self.table[ref.name]
            args = [self.resolve(a, scope) for a in ref.args]
            if len(args) != len(cls.typeParams):
                self.report('E102', ref.span, "'%s' expects %i type argument(s), %i given"
                    % (ref.name, len(cls.typeParams), len(args)))
                return ERROR
            if any(a.isPrimitive for a in args):
                self.report('E102', ref.span, 'type arguments must be reference types')
                return ERROR
            t = NamedType(ref.name, args)
            self.pendingBounds.append((t, ref.span))
        else:
            self.report('E100', ref.span, "unknown type '%s'" % ref.name)
            return ERROR
        return ArrayType(t) if ref.isArray else t

    def resolve_supertype(self, ref, scope, wantInterface, owner):
        t = self.resolve(ref, scope)
        if t.isError:
            if ref.name not in self.table and ref.name not in scope:
                # resolve reported E100; a missing supertype is E021
                self.diagnostics.pop()
                self.report('E021', ref.span, "unknown supertype '%s'" % ref.name)
            return None
        if not isinstance(t, NamedType):
            self.report('E021', ref.span, "'%s' cannot be a supertype" % ref.name)
            return None
        if self.table[t.name].isInterface != wantInterface:
            self.report('E021', ref.span, "'%s' of '%s' must be %s" % (ref.name, owner,
                'an interface' if wantInterface else 'a class'))
            return None
        return t

    def headers(self, cls):
        decl = cls.decl
        scope = dict((v.name, v) for v in cls.typeParams)
        self.bind_bounds(decl.typeParams, cls.typeParams, scope)
        if cls.isInterface:
            cls.interfaces = [t for t in (self.resolve_supertype(r, scope, True, cls.name)
                for r in decl.interfaces) if t is not None]
        else:
            if decl.superclass is not None:
                cls.superclass = self.resolve_supertype(decl.superclass, scope, False, cls.name)
            if cls.superclass is None and cls.name != 'Object':
                cls.superclass = OBJECT if 'Object' in self.table else None
            cls.interfaces = [t for t in (self.resolve_supertype(r, scope, True, cls.name)
                for r in decl.interfaces) if t is not None]

    def break_cycles(self):
        state = {}
        for cls in self.table:
            if state.get(cls.name) is None:
                self.visit_hierarchy(cls, state, [])

    def visit_hierarchy(self, cls, state, path):
        state[cls.name] = 'active'
        path.append(cls.name)
        for sup in list(cls.supertypes()):
            if state.get(sup.name) == 'active':
                cycle = path[path.index(sup.name):]
                self.report('E022', cls.decl.span, 'inheritance cycle: %s' % ' -> '.join(cycle + [sup.name]))
                if cls.superclass == sup:
                    cls.superclass = OBJECT if cls.name != 'Object' else None
                else:
                    cls.interfaces = [i for i in cls.interfaces if i != sup]
            elif state.get(sup.name) is None and sup.name in self.table:
                self.visit_hierarchy(self.table[sup.name], state, path)
        path.pop()
        state[cls.name] = 'done'

    def members(self, cls):
        classScope = dict((v.name, v) for v in cls.typeParams)
        for i, member in enumerate(cls.decl.members):
            if isinstance(member, Ast.FieldDecl):
                if cls.isInterface:
                    self.report('E024', member.span, 'interfaces cannot declare fields')
                    continue
                t = self.resolve(member.typeRef, classScope)
                for name in member.names:
                    if name in cls.fields:
                        self.report('E023', member.span, "duplicate field '%s'" % name)
                    cls.fields[name] = t
            elif isinstance(member, Ast.MethodDecl):
                cls.memberSigs[i] = self.method(cls, member, classScope)
            elif isinstance(member, Ast.ConstructorDecl):
                cls.memberSigs[i] = self.constructor(cls, member, classScope)

    def check_body(self, cls, member, isNative):
        if cls.isInterface:
            if isinstance(member, Ast.ConstructorDecl):
                self.report('E024', member.span, 'interfaces cannot declare constructors')
            elif member.body is not None:
                self.report('E024', member.span, 'interface methods cannot have a body')
        elif isNative and member.body is not None:
            self.report('E024', member.span, "native method '%s' cannot have a body" % member.name)
        elif not isNative and member.body is None and 'abstract' not in member.modifiers:
            self.report('E024', member.span, "method '%s' needs a body" % member.name)

    def method(self, cls, decl, classScope):
        isStatic = 'static' in decl.modifiers
        owner = '%s.%s' % (cls.name, decl.name)
        variables = self.declare_type_params(decl.typeParams, owner)
        # static methods cannot see the class's type parameters
        scope = {} if isStatic else dict(classScope)
        scope.update((v.name, v) for v in variables)
        self.bind_bounds(decl.typeParams, variables, scope)
        paramTypes = tuple(self.resolve(p.typeRef, scope) for p in decl.params)
        returnType = self.resolve(decl.returnType, scope, allowVoid=True)
        isNative = 'native' in decl.modifiers
        self.check_body(cls, decl, isNative)
        self.check_params(decl)

        sig = MethodSig(decl.name, tuple(variables), paramTypes, returnType, isStatic,
            cls.name, isNative, None)
        erased = tuple(erasure(p) for p in paramTypes)
        for other in cls.methods:
            if other.name == sig.name and tuple(erasure(p) for p in other.paramTypes) == erased:
                self.report('E023', decl.span, "duplicate method '%s' in '%s'" % (sig, cls.name))
                return None
        cls.methods.append(sig)
        cls.bodies[sig] = decl.body
        return sig

    def constructor(self, cls, decl, classScope):
        paramTypes = tuple(self.resolve(p.typeRef, classScope) for p in decl.params)
        isNative = 'native' in decl.modifiers
        self.check_body(cls, decl, isNative)
        self.check_params(decl)
        sig = MethodSig('<init>', (), paramTypes, cls.selfType, False, cls.name, isNative, None)
        erased = tuple(erasure(p) for p in paramTypes)
        for other in cls.constructors:
            if tuple(erasure(p) for p in other.paramTypes) == erased:
                self.report('E023', decl.span, "duplicate constructor in '%s'" % cls.name)
                return None
        cls.constructors.append(sig)
        cls.bodies[sig] = decl.body
        return sig

    def check_params(self, decl):
        names = set()
        for p in decl.params:
            if p.name in names:
                self.report('E023', p.span, "duplicate parameter '%s'" % p.name)
            names.add(p.name)

    def default_constructor(self, cls):
        if cls.isInterface or cls.constructors or cls.isStub:
            return
        sig = MethodSig('<init>', (), (), cls.selfType, False, cls.name, False, None)
        cls.constructors.append(sig)
        cls.bodies[sig] = Ast.Block([], span=cls.decl.span)

    def check_bounds(self):
        for t, span in self.pendingBounds:
            cls = self.table[t.name]
            mapping = dict(zip(cls.typeParams, t.args))
            for v, arg in zip(cls.typeParams, t.args):
                bound = substitute(v.bound if v.bound is not None else OBJECT, mapping)
                if not is_subtype(arg, bound, self.table):
                    self.report('E102', span, "type argument %s is not within bound %s of '%s'"
                        % (arg, bound, v.name))

    def build(self, units, stubs):
        self.pendingBounds = []
        entered = []
        for decls, isStub in [(d, True) for d in stubs] + [(d, False) for d in units]:
            for decl in decls:
                cls = self.enter(decl, isStub)
                if cls is not None:
                    entered.append(cls)

        if self.verbose:
            print('Entered', len(entered), 'classes,', sum(c.isStub for c in entered), 'from stubs')

        for cls in entered:
            self.headers(cls)
        self.break_cycles()
        for cls in entered:
            self.members(cls)
            self.default_constructor(cls)
        self.check_bounds()
        return self.table


def build_class_table(units, stubs, verbose=False):
    """
    Build the class table of a program.

    Parameters
    ----------
    units : list of list of :class:`oodc.Ast.ClassDecl`
        Parsed user compilation units.
    stubs : list of list of :class:`oodc.Ast.ClassDecl`
        Parsed stub library units.
    verbose : bool, optional
        If True print a summary of the classes entered.

    Returns
    -------
    ClassTable

    Raises
    ------
    CompileError
        E020 duplicate class, E021 unknown supertype, E022 inheritance
        cycle, E023 duplicate member, E024 invalid member body, E025
        duplicate type parameter, E100 unknown type, E102 wrong type
        arguments.
    """
    builder = _TableBuilder(verbose)
    table = builder.build(units, stubs)
    if builder.diagnostics:
        raise CompileError(builder.diagnostics)
    table.overrides = table._dispatch_map()
    return table
