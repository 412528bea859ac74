"""A small expression language over the species catalog.

Grammar, loosest binding first::

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := primary "'"*
    primary := NAME | NAME '(' expr ')' | FUNC '(' expr ')' | '(' expr ')'
    FUNC    := 'inv' | 'log' | 'point'

``F(G)`` is composition, ``F'`` the derivative, ``log(F)`` is ``Omega(F)``.
The name ``E+`` is read as one token when the ``+`` directly follows ``E``
and is not itself followed by a letter or digit, so ``E(E+)`` and ``E+(X)``
mean what they look like, while ``E+X`` is a sum.  Put spaces around a
binary ``+`` after ``E`` to be safe (``E + X``).
"""

from dataclasses import dataclass

from . import catalog
from .series import cis_comp_inverse, cis_compose, cis_derivative, cis_mul, cis_point

FUNCTIONS = ("inv", "log", "point")


class ParseError(ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


# -- syntax tree ----------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Compose:
    outer: str
    inner: object


@dataclass(frozen=True)
class Derivative:
    arg: object


@dataclass(frozen=True)
class Point:
    arg: object


@dataclass(frozen=True)
class Inverse:
    arg: object


@dataclass(frozen=True)
class Log:
    arg: object


# -- lexer ----------------------------------------------------------------------

def tokenize(text):
    """List of (kind, value, offset); kinds are NAME, OP and END."""
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isalnum() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if (word == "E" and j < n and text[j] == "+"
                    and not (j + 1 < n and (text[j + 1].isalnum() or text[j + 1] == "_"))):
                word = "E+"
                j += 1
            tokens.append(("NAME", word, i))
            i = j
            continue
        if c in "+-*()'":
            tokens.append(("OP", c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(("END", None, n))
    return tokens


# -- parser ---------------------------------------------------------------------

class _Parser:
    def __init__(self, text, names):
        self.tokens = tokenize(text)
        self.pos = 0
        self.names = names

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value):
        kind, v, off = self.take()
        if v != value or kind != "OP":
            found = "end of input" if kind == "END" else repr(v)
            raise ParseError(f"expected {value!r}, found {found}", off)

    def parse(self):
        node = self.expr()
        kind, v, off = self.peek()
        if kind != "END":
            raise ParseError(f"unexpected {v!r}", off)
        return node

    def expr(self):
        node = self.term()
        while True:
            kind, v, _ = self.peek()
            if kind == "OP" and v in "+-":
                self.take()
                right = self.term()
                node = Add(node, right) if v == "+" else Sub(node, right)
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            kind, v, _ = self.peek()
            if kind == "OP" and v == "*":
                self.take()
                node = Mul(node, self.factor())
            else:
                return node

    def factor(self):
        node = self.primary()
        while True:
            kind, v, _ = self.peek()
            if kind == "OP" and v == "'":
                self.take()
                node = Derivative(node)
            else:
                return node

    def primary(self):
        kind, v, off = self.take()
        if kind == "OP" and v == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind != "NAME":
            found = "end of input" if kind == "END" else repr(v)
            raise ParseError(f"expected a species name or '(', found {found}", off)
        nxt = self.peek()
        called = nxt[0] == "OP" and nxt[1] == "("
        if v in FUNCTIONS:
            if not called:
                raise ParseError(f"{v} takes one argument: {v}(...)", off)
            self.take()
            arg = self.expr()
            self.expect(")")
            return {"inv": Inverse, "log": Log, "point": Point}[v](arg)
        name = catalog.ALIASES.get(v, v)
        if name not in self.names:
            raise ParseError(f"unknown species name {v!r}", off)
        if called:
            self.take()
            arg = self.expr()
            self.expect(")")
            return Compose(name, arg)
        return Atom(name)


def parse(text, names=None):
    return _Parser(text, names if names is not None else catalog.NAMES).parse()


# -- printer --------------------------------------------------------------------

def _prec(node):
    if isinstance(node, (Add, Sub)):
        return 1
    if isinstance(node, Mul):
        return 2
    return 3


def to_text(node):
    """Text that parses back to an equal tree."""
    if isinstance(node, Atom):
        return node.name
    if isinstance(node, (Add, Sub, Mul)):
        op = {Add: "+", Sub: "-", Mul: "*"}[type(node)]
        p = _prec(node)
        left = to_text(node.left)
        if _prec(node.left) < p:
            left = f"({left})"
        right = to_text(node.right)
        if _prec(node.right) <= p:
            right = f"({right})"
        return f"{left} {op} {right}"
    if isinstance(node, Compose):
        return f"{node.outer}({to_text(node.inner)})"
    if isinstance(node, Derivative):
        inner = to_text(node.arg)
        if _prec(node.arg) < 3:
            inner = f"({inner})"
        return inner + "'"
    name = {Point: "point", Inverse: "inv", Log: "log"}[type(node)]
    return f"{name}({to_text(node.arg)})"


# -- evaluation -----------------------------------------------------------------

def evaluate(node, max_degree=None, lookup=None):
    """Build the series for a parsed expression (or expression text).

    With ``max_degree`` the components up to that degree are forced, so
    precondition failures surface here rather than later.
    """
    if isinstance(node, str):
        node = parse(node)
    lookup = lookup or catalog.get
    series = _eval(node, lookup)
    if max_degree is not None:
        if max_degree < 0:
            raise ValueError("max_degree must be nonnegative")
        series.component(max_degree)
    return series


def _eval(node, lookup):
    if isinstance(node, Atom):
        return lookup(node.name)
    if isinstance(node, Add):
        return _eval(node.left, lookup) + _eval(node.right, lookup)
    if isinstance(node, Sub):
        return _eval(node.left, lookup) - _eval(node.right, lookup)
    if isinstance(node, Mul):
        return cis_mul(_eval(node.left, lookup), _eval(node.right, lookup))
    if isinstance(node, Compose):
        return cis_compose(lookup(node.outer), _eval(node.inner, lookup))
    if isinstance(node, Derivative):
        return cis_derivative(_eval(node.arg, lookup))
    if isinstance(node, Point):
        return cis_point(_eval(node.arg, lookup))
    if isinstance(node, Inverse):
        return cis_comp_inverse(_eval(node.arg, lookup))
    if isinstance(node, Log):
        return cis_compose(lookup("Omega"), _eval(node.arg, lookup))
    raise TypeError(f"not an expression node: {node!r}")
