#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Session scripts
===============

A session script is a sequence of ``;``-terminated statements::

    ring R = QQ[x,y];
    ideal I = (x^2, x*y);
    module M = coker [[x, y]] twists (0);
    reg I;
    powers I max_v=4;
    verify (x^2, y^3);

Declarations bind names (rings, ideals, modules); every ideal or module
belongs to the ring declared most recently before it. Names are resolved
and polynomials are checked at parse time, so semantic diagnostics carry
the position of the offending token.

.. autosummary::
    :toctree: generated/

    parse_session
    parse_polynomial
    render
    SessionScript
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, NamedTuple, Optional, Tuple, Union

from ..core.field import QQ, Fp, FieldSpec
from ..core.poly import Polynomial
from ..core.ring import PolynomialRing
from ..util.exceptions import FieldError, ParameterError, ScriptError

__all__ = [
    "Token",
    "RingDecl",
    "IdealDecl",
    "ModuleDecl",
    "Target",
    "Command",
    "SessionScript",
    "COMMANDS",
    "parse_session",
    "parse_polynomial",
    "parse_field",
    "render",
]

#: Command name -> (admissible options, target kind, grading arity)
COMMANDS: Dict[str, Tuple[Tuple[str, ...], str, int]] = {
    "reg": ((), "any", 1),
    "betti": ((), "any", 0),
    "koszul": (("bound",), "any", 1),
    "duality": ((), "any", 1),
    "verify": ((), "any", 1),
    "powers": (("max_v", "module"), "ideal", 1),
    "rees": ((), "ideal", 1),
    "linear-powers": (("budget",), "ideal", 1),
    "rho": (("v_max",), "any", 2),
}

_KEYWORDS = {"ring", "ideal", "module", "deg", "coker", "free", "quotient", "shift", "by", "twists"}


class Token(NamedTuple):
    type: str
    value: Any
    line: int
    column: int


_TOKENS = {
    "comment": r"\#[^\n]*",
    "name": r"[A-Za-z_][A-Za-z0-9_]*",
    "int": r"\d+",
    "lpar": r"\(",
    "rpar": r"\)",
    "lbrack": r"\[",
    "rbrack": r"\]",
    "pow": r"\^|\*\*",
    "mul": r"\*",
    "div": r"/",
    "plus": r"\+",
    "minus": r"-",
    "equal": r"=",
    "comma": r",",
    "semi": r";",
    "newline": r"\n",
    "skip": r"[ \t\r]+",
    "error": r".",
}
_REGEX = re.compile("|".join(f"(?P<{name}>{text})" for name, text in _TOKENS.items()))


def tokenize(text: str) -> Iterator[Token]:
    """Split script text into tokens with 1-based line and column."""
    line, start = 1, 0
    for mo in _REGEX.finditer(text):
        kind = str(mo.lastgroup)
        value: Any = mo.group()
        column = mo.start() - start + 1
        if kind == "newline":
            line += 1
            start = mo.end()
            continue
        if kind in ("skip", "comment"):
            continue
        if kind == "error":
            raise ScriptError("E_SYNTAX", f"unexpected character {value!r}", line, column)
        if kind == "int":
            value = int(value)
        yield Token(kind, value, line, column)
    yield Token("end", None, line, len(text) - start + 1)


# ----- statements -----
@dataclass
class RingDecl:
    name: str
    field: FieldSpec
    variables: Tuple[str, ...]
    degrees: Optional[Tuple[Tuple[int, ...], ...]] = None
    line: Optional[int] = field(default=None, compare=False)
    column: Optional[int] = field(default=None, compare=False)

    def ring(self) -> PolynomialRing:
        return PolynomialRing(self.field, self.variables, self.degrees)


@dataclass
class IdealDecl:
    name: str
    ring: str
    generators: Tuple[Polynomial, ...]
    line: Optional[int] = field(default=None, compare=False)
    column: Optional[int] = field(default=None, compare=False)


@dataclass
class Target:
    """A declared name, or an inline ideal of the active ring."""

    name: Optional[str] = None
    generators: Optional[Tuple[Polynomial, ...]] = None
    ring: Optional[str] = None
    kind: str = "ideal"


@dataclass
class ModuleDecl:
    """``coker`` (rows of a matrix whose columns are relations), ``free``,
    ``quotient`` of an ideal, or ``shift`` of another module."""

    name: str
    ring: str
    kind: str
    rows: Tuple[Tuple[Polynomial, ...], ...] = ()
    twists: Tuple[Tuple[int, ...], ...] = ()
    source: Optional[Target] = None
    amount: Tuple[int, ...] = ()
    line: Optional[int] = field(default=None, compare=False)
    column: Optional[int] = field(default=None, compare=False)


@dataclass
class Command:
    name: str
    target: Target
    options: Tuple[Tuple[str, Union[int, str]], ...] = ()
    line: Optional[int] = field(default=None, compare=False)
    column: Optional[int] = field(default=None, compare=False)

    def option(self, key: str, default: Any = None) -> Any:
        return dict(self.options).get(key, default)


Statement = Union[RingDecl, IdealDecl, ModuleDecl, Command]


@dataclass
class SessionScript:
    statements: List[Statement]

    def rings(self) -> Dict[str, PolynomialRing]:
        return {s.name: s.ring() for s in self.statements if isinstance(s, RingDecl)}

    def commands(self) -> List[Command]:
        return [s for s in self.statements if isinstance(s, Command)]

    def __len__(self) -> int:
        return len(self.statements)


# ----- parser -----
def parse_field(text: str) -> FieldSpec:
    """``'qq'``, ``'QQ'``, ``'fp32003'`` or ``'Fp(32003)'``."""
    t = text.strip().lower().replace("(", "").replace(")", "")
    if t == "qq":
        return QQ
    if t.startswith("fp") and t[2:].isdigit():
        return Fp(int(t[2:]))
    raise ParameterError(f"unknown field {text!r}")


class _Parser(object):
    def __init__(self, text: str, field_override: Optional[FieldSpec] = None):
        self.tokens = list(tokenize(text))
        self.pos = 0
        self.field_override = field_override
        self.rings: Dict[str, PolynomialRing] = {}
        self.kinds: Dict[str, str] = {}
        self.owner: Dict[str, str] = {}
        self.active: Optional[str] = None

    # ----- token helpers -----
    @property
    def token(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.type != "end":
            self.pos += 1
        return tok

    def error(self, code: str, message: str, tok: Optional[Token] = None) -> ScriptError:
        tok = tok or self.token
        return ScriptError(code, message, tok.line, tok.column)

    def expect(self, kind: str, value: Any = None) -> Token:
        tok = self.token
        if tok.type != kind or (value is not None and tok.value != value):
            want = value if value is not None else kind
            got = tok.value if tok.value is not None else tok.type
            raise self.error("E_SYNTAX", f"expected {want!r}, found {got!r}")
        return self.advance()

    def accept(self, kind: str, value: Any = None) -> Optional[Token]:
        tok = self.token
        if tok.type == kind and (value is None or tok.value == value):
            return self.advance()
        return None

    def fresh_name(self) -> Token:
        tok = self.expect("name")
        if tok.value in _KEYWORDS:
            raise self.error("E_SYNTAX", f"{tok.value!r} is a keyword", tok)
        if tok.value in self.kinds:
            raise self.error("E_REDECLARED", f"{tok.value!r} is already declared", tok)
        return tok

    def active_ring(self, tok: Token) -> PolynomialRing:
        if self.active is None:
            raise self.error("E_UNDECLARED", "no ring has been declared", tok)
        return self.rings[self.active]

    # ----- grammar -----
    def script(self) -> SessionScript:
        statements: List[Statement] = []
        while self.token.type != "end":
            statements.append(self.statement())
            self.expect("semi")
        return SessionScript(statements)

    def statement(self) -> Statement:
        tok = self.token
        if tok.type != "name":
            raise self.error("E_SYNTAX", "expected a declaration or a command")
        if tok.value == "ring":
            return self.ring_decl()
        if tok.value == "ideal":
            return self.ideal_decl()
        if tok.value == "module":
            return self.module_decl()
        return self.command()

    def ring_decl(self) -> RingDecl:
        start = self.advance()
        name = self.fresh_name()
        self.expect("equal")
        field_ = self.field_spec()
        self.expect("lbrack")
        names = [self.expect("name").value]
        while self.accept("comma"):
            names.append(self.expect("name").value)
        self.expect("rbrack")
        if len(set(names)) != len(names):
            raise self.error("E_SYNTAX", f"repeated variable in {names}", start)
        given: Dict[str, Tuple[int, ...]] = {}
        while self.accept("name", "deg"):
            var = self.expect("name")
            if var.value not in names:
                raise self.error("E_UNDECLARED", f"{var.value!r} is not a variable of {name.value}", var)
            self.expect("equal")
            given[var.value] = self.degree()
        degrees = None
        if given:
            arities = {len(d) for d in given.values()}
            if len(arities) != 1:
                raise self.error("E_ARITY", "degree clauses mix gradings of different arity", start)
            (arity,) = arities
            if arity == 2 and len(given) != len(names):
                raise self.error("E_ARITY", "every variable of a bigraded ring needs a degree", start)
            degrees = tuple(given.get(v, (1,)) for v in names)
        if self.field_override is not None:
            field_ = self.field_override
        decl = RingDecl(name.value, field_, tuple(names), degrees, start.line, start.column)
        try:
            ring = decl.ring()
        except ParameterError as exc:
            raise self.error("E_ARITY", str(exc), start)
        self.rings[name.value] = ring
        self.kinds[name.value] = "ring"
        self.active = name.value
        return decl

    def field_spec(self) -> FieldSpec:
        tok = self.expect("name")
        if tok.value == "QQ":
            return QQ
        if tok.value == "Fp":
            self.expect("lpar")
            p = self.expect("int")
            self.expect("rpar")
            try:
                return Fp(p.value)
            except (FieldError, ParameterError) as exc:
                raise self.error("E_SYNTAX", str(exc), p)
        raise self.error("E_SYNTAX", f"unknown field {tok.value!r}", tok)

    def signed_int(self) -> int:
        sign = -1 if self.accept("minus") else 1
        return sign * self.expect("int").value

    def degree(self) -> Tuple[int, ...]:
        if self.accept("lpar"):
            out = [self.signed_int()]
            while self.accept("comma"):
                out.append(self.signed_int())
            self.expect("rpar")
            return tuple(out)
        return (self.signed_int(),)

    def ideal_decl(self) -> IdealDecl:
        start = self.advance()
        name = self.fresh_name()
        self.expect("equal")
        ring = self.active_ring(start)
        gens = self.poly_list(ring)
        self.kinds[name.value] = "ideal"
        self.owner[name.value] = self.active
        return IdealDecl(name.value, self.active, gens, start.line, start.column)

    def poly_list(self, ring: PolynomialRing, homogeneous: bool = True) -> Tuple[Polynomial, ...]:
        self.expect("lpar")
        gens = []
        if not self.accept("rpar"):
            gens.append(self.homogeneous(ring, homogeneous))
            while self.accept("comma"):
                gens.append(self.homogeneous(ring, homogeneous))
            self.expect("rpar")
        return tuple(gens)

    def homogeneous(self, ring: PolynomialRing, required: bool = True) -> Polynomial:
        tok = self.token
        f = self.poly(ring)
        if required and not f.is_homogeneous():
            raise self.error("E_INHOMOGENEOUS", f"{f} is not homogeneous", tok)
        return f

    def module_decl(self) -> ModuleDecl:
        start = self.advance()
        name = self.fresh_name()
        self.expect("equal")
        ring = self.active_ring(start)
        kind = self.expect("name")
        decl = ModuleDecl(name.value, self.active, kind.value, line=start.line, column=start.column)
        if kind.value == "coker":
            self.expect("lbrack")
            rows = [self.poly_row(ring)]
            while self.accept("comma"):
                rows.append(self.poly_row(ring))
            self.expect("rbrack")
            if len({len(r) for r in rows}) != 1:
                raise self.error("E_SYNTAX", "matrix rows have different lengths", kind)
            decl.rows = tuple(rows)
            if self.accept("name", "twists"):
                decl.twists = self.degree_list(ring)
                if len(decl.twists) != len(rows):
                    raise self.error("E_ARITY", "one twist per matrix row is required", kind)
            else:
                decl.twists = (ring.zero_degree,) * len(rows)
            self.check_columns(decl, ring, kind)
        elif kind.value == "free":
            decl.twists = self.degree_list(ring)
        elif kind.value == "quotient":
            decl.source = self.target(ring, "ideal")
        elif kind.value == "shift":
            decl.source = self.target(ring, "any")
            self.expect("name", "by")
            decl.amount = self.degree()
            if len(decl.amount) != ring.arity:
                raise self.error("E_ARITY", f"shift {decl.amount} does not match the grading", kind)
        else:
            raise self.error("E_SYNTAX", f"unknown module form {kind.value!r}", kind)
        self.kinds[name.value] = "module"
        self.owner[name.value] = self.active
        return decl

    def poly_row(self, ring: PolynomialRing) -> Tuple[Polynomial, ...]:
        self.expect("lbrack")
        row = [self.poly(ring)]
        while self.accept("comma"):
            row.append(self.poly(ring))
        self.expect("rbrack")
        return tuple(row)

    def degree_list(self, ring: PolynomialRing) -> Tuple[Tuple[int, ...], ...]:
        self.expect("lpar")
        out = [self.degree()]
        while self.accept("comma"):
            out.append(self.degree())
        self.expect("rpar")
        for d in out:
            if len(d) != ring.arity:
                raise self.error("E_ARITY", f"twist {d} does not match the grading of {ring}")
        return tuple(out)

    def check_columns(self, decl: ModuleDecl, ring: PolynomialRing, tok: Token) -> None:
        for c in range(len(decl.rows[0])):
            degrees = set()
            for r, row in enumerate(decl.rows):
                f = row[c]
                if not f:
                    continue
                if not f.is_homogeneous():
                    raise self.error("E_INHOMOGENEOUS", f"entry {f} is not homogeneous", tok)
                degrees.add(tuple(a + b for a, b in zip(f.degree(), decl.twists[r])))
            if len(degrees) > 1:
                raise self.error("E_INHOMOGENEOUS", f"column {c + 1} is not homogeneous", tok)

    def target(self, ring: PolynomialRing, kind: str) -> Target:
        tok = self.token
        if tok.type == "lpar":
            return Target(generators=self.poly_list(ring), ring=self.active)
        name = self.expect("name")
        if name.value not in self.kinds or self.kinds[name.value] == "ring":
            raise self.error("E_UNDECLARED", f"{name.value!r} is not a declared ideal or module", name)
        found = self.kinds[name.value]
        if kind == "ideal" and found != "ideal":
            raise self.error("E_TYPE", f"{name.value!r} is a {found}, an ideal is required", name)
        return Target(name=name.value, ring=self.owner[name.value], kind=found)

    def command(self) -> Command:
        start = self.advance()
        name = start.value
        if name == "linear" and self.token.type == "minus":
            self.advance()
            self.expect("name", "powers")
            name = "linear-powers"
        if name not in COMMANDS:
            raise self.error("E_COMMAND", f"unknown command {name!r}", start)
        allowed, kind, arity = COMMANDS[name]
        ring = self.active_ring(start)
        target = self.target(ring, kind)
        target_ring = self.rings[target.ring]
        if arity and target_ring.arity != arity:
            raise self.error("E_ARITY", f"{name} needs a {'bi' if arity == 2 else 'Z-'}graded ring", start)
        options = []
        while self.token.type == "name":
            key = self.advance()
            if key.value not in allowed:
                raise self.error("E_OPTION", f"{name} does not accept option {key.value!r}", key)
            self.expect("equal")
            if key.value == "module":
                ref = self.expect("name")
                if self.kinds.get(ref.value) not in ("module", "ideal"):
                    raise self.error("E_UNDECLARED", f"{ref.value!r} is not a declared module", ref)
                options.append((key.value, ref.value))
            else:
                options.append((key.value, self.signed_int()))
        return Command(name, target, tuple(options), start.line, start.column)

    # ----- polynomials -----
    def poly(self, ring: PolynomialRing) -> Polynomial:
        negate = False
        if self.accept("minus"):
            negate = True
        else:
            self.accept("plus")
        f = self.term(ring)
        if negate:
            f = -f
        while self.token.type in ("plus", "minus"):
            op = self.advance()
            g = self.term(ring)
            f = f + g if op.type == "plus" else f - g
        return f

    def term(self, ring: PolynomialRing) -> Polynomial:
        f = self.factor(ring)
        while self.token.type in ("mul", "div"):
            op = self.advance()
            if op.type == "mul":
                f = f * self.factor(ring)
                continue
            tok = self.token
            g = self.factor(ring)
            if not g.is_constant() or not g:
                raise self.error("E_SYNTAX", "division by a nonzero constant only", tok)
            try:
                f = f.scale(ring.field.inv(g.terms[ring.one()]))
            except FieldError as exc:
                raise self.error("E_SYNTAX", str(exc), tok)
        return f

    def factor(self, ring: PolynomialRing) -> Polynomial:
        f = self.atom(ring)
        if self.accept("pow"):
            f = f ** self.expect("int").value
        return f

    def atom(self, ring: PolynomialRing) -> Polynomial:
        tok = self.token
        if tok.type == "int":
            self.advance()
            return Polynomial.constant(ring, tok.value)
        if tok.type == "name":
            self.advance()
            if tok.value not in ring.index:
                raise self.error("E_UNDECLARED", f"{tok.value!r} is not a variable of {ring}", tok)
            return ring.gens()[ring.index[tok.value]]
        if tok.type == "lpar":
            self.advance()
            f = self.poly(ring)
            self.expect("rpar")
            return f
        if tok.type == "minus":
            self.advance()
            return -self.atom(ring)
        raise self.error("E_SYNTAX", "expected a polynomial", tok)


def parse_session(text: str, field_override: Optional[FieldSpec] = None) -> SessionScript:
    """Parse a session script.

    Parameters
    ----------
    text : str
    field_override : FieldSpec, optional
        Replaces the coefficient field of every declared ring

    Returns
    -------
    SessionScript

    Raises
    ------
    ScriptError
        With one of the diagnostic codes ``E_SYNTAX``, ``E_UNDECLARED``,
        ``E_REDECLARED``, ``E_INHOMOGENEOUS``, ``E_ARITY``, ``E_COMMAND``,
        ``E_OPTION`` or ``E_TYPE``, and the line and column of the token

    Examples
    --------
    >>> len(parse_session("ring R = QQ[x,y]; ideal I = (x^2, x*y); reg I;"))
    3
    """
    return _Parser(text, field_override).script()


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    """Parse one polynomial in ``ring``.

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> str(parse_polynomial("(x + y)^2 - 2*x*y", R))
    'x^2 + y^2'
    """
    p = _Parser(text)
    f = p.poly(ring)
    p.expect("end")
    return f


# ----- rendering -----
def _degree_text(d: Tuple[int, ...]) -> str:
    return str(d[0]) if len(d) == 1 else "(" + ", ".join(str(c) for c in d) + ")"


def _polys_text(gens) -> str:
    return "(" + ", ".join(str(f) for f in gens) + ")"


def _target_text(t: Target) -> str:
    return t.name if t.name is not None else _polys_text(t.generators)


def render(script: SessionScript) -> str:
    """Canonical text of a script; parsing it gives an equal script."""
    lines = []
    for s in script.statements:
        if isinstance(s, RingDecl):
            text = f"ring {s.name} = {s.field}[{','.join(s.variables)}]"
            if s.degrees is not None:
                text += "".join(f" deg {v} = {_degree_text(d)}" for v, d in zip(s.variables, s.degrees))
        elif isinstance(s, IdealDecl):
            text = f"ideal {s.name} = {_polys_text(s.generators)}"
        elif isinstance(s, ModuleDecl):
            text = f"module {s.name} = {s.kind}"
            if s.kind == "coker":
                rows = ", ".join("[" + ", ".join(str(f) for f in r) + "]" for r in s.rows)
                twists = ", ".join(_degree_text(d) for d in s.twists)
                text += f" [{rows}] twists ({twists})"
            elif s.kind == "free":
                text += " (" + ", ".join(_degree_text(d) for d in s.twists) + ")"
            elif s.kind == "quotient":
                text += f" {_target_text(s.source)}"
            else:
                text += f" {_target_text(s.source)} by {_degree_text(s.amount)}"
        else:
            text = f"{s.name} {_target_text(s.target)}"
            text += "".join(f" {k}={v}" for k, v in s.options)
        lines.append(text + ";")
    return "\n".join(lines) + "\n"
