"""A small expression language over the kernel.

Grammar (EBNF):

    script  = { "let" IDENT "=" expr ";" } expr [ ";" ] ;
    expr    = term { ("+" | "-") term } ;
    term    = factor { "*" factor } ;
    factor  = "-" factor | atom ;
    atom    = NUMBER [ blade ]           (* juxtaposed coefficient *)
            | blade
            | IDENT "(" args ")"         (* call *)
            | IDENT                      (* variable *)
            | "(" expr ")" ;
    blade   = GEN { "^" GEN } ;          (* generator indices strictly ascending *)
    args    = [ arglist ] [ ";" arglist ] ;
    arglist = expr { "," expr } ;
    NUMBER  = DIGITS [ "/" DIGITS ] ;    (* exact rational, no spaces *)
    GEN     = "e0" .. "e7" ;             (* e0 is the scalar 1 *)

`*` is the geometric product and the only infix product; the octonionic
products are calls, so grouping is always explicit.  A semicolon inside
a call separates steering arguments from operands, as in
circU(u; A, B).  Blade literals mirror the canonical text form
("3/2 e1^e2"); a caret chain with out-of-order indices is rejected, use
`*` for general products.  Bindings are immutable; shadowing is an
error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .multivector import (
    Multivector,
    Singular,
    conjugation,
    grade_involution,
    grade_project,
    psi,
    reversion,
)
from .multivector import inverse as mv_inverse
from .genprod import (
    DEFAULT_FOLD,
    Degenerate,
    E7_CORRECTED,
    FoldConvention,
    ODOT_LEFT,
    bullet_left,
    bullet_right,
    circ_1u,
    circ_u,
    circ_uC,
    circ_uv,
    e_units,
    make_C,
    odot,
)
from .octonion import NotParavectorError, Octonion, circ


class ExprError(Exception):
    """Base for all diagnostics; renders as error[Kind]: msg at line:col."""

    kind = "Error"

    def __init__(self, msg: str, line: int, col: int):
        super().__init__(msg)
        self.msg = msg
        self.line = line
        self.col = col

    def diagnostic(self) -> str:
        return f"error[{self.kind}]: {self.msg} at {self.line}:{self.col}"


class ParseError(ExprError):
    kind = "SyntaxError"


class UnknownFunction(ExprError):
    kind = "UnknownFunction"


class ArityError(ExprError):
    kind = "ArityError"


class UnboundVariable(ExprError):
    kind = "UnboundVariable"


class TypeMismatch(ExprError):
    kind = "TypeMismatch"


class ShadowError(ExprError):
    kind = "Shadowing"


class EvalError(ExprError):
    """A kernel error (Singular, Degenerate, ...) tagged with its span."""

    def __init__(self, kind: str, msg: str, line: int, col: int):
        self.kind = kind
        super().__init__(msg, line, col)


# -- tokens ------------------------------------------------------------

_PUNCT = "+-*^(),;="


@dataclass(frozen=True)
class Token:
    kind: str  # number, ident, punct, end
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[Token]:
    toks = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "/":
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise ParseError("malformed rational literal", line, col)
                j = k
            toks.append(Token("number", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(Token("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if c in _PUNCT:
            toks.append(Token("punct", c, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {c!r}", line, col)
    toks.append(Token("end", "", line, col))
    return toks


# -- syntax tree -------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction | int
    line: int
    col: int


@dataclass(frozen=True)
class Blade:
    mask: int
    line: int
    col: int


@dataclass(frozen=True)
class Scaled:
    value: Fraction | int
    mask: int
    line: int
    col: int


@dataclass(frozen=True)
class Var:
    name: str
    line: int
    col: int


@dataclass(frozen=True)
class Unary:
    child: object
    line: int
    col: int


@dataclass(frozen=True)
class Binary:
    op: str
    left: object
    right: object
    line: int
    col: int


@dataclass(frozen=True)
class Call:
    name: str
    pre: tuple  # arguments before any semicolon
    post: tuple  # arguments after the semicolon, () when absent
    has_semi: bool
    line: int
    col: int


@dataclass(frozen=True)
class Script:
    lets: tuple  # (name, expr, line, col) records
    expr: object


_FUNCTIONS = frozenset(
    "circ bulL bulR odotL odotR circU circ1U circUV circUC makeC "
    "rev hat bar inv grade psi eunits".split()
)
_GEN_NAMES = frozenset(f"e{i}" for i in range(8))
_KEYWORDS = frozenset(("let",))


class _Parser:
    def __init__(self, toks: list[Token]):
        self.toks = toks
        self.pos = 0

    def peek(self) -> Token:
        return self.toks[self.pos]

    def next(self) -> Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.peek()
        if t.kind == "punct" and t.text == text:
            return self.next()
        shown = t.text if t.kind != "end" else "end of input"
        raise ParseError(f"expected {text!r}, found {shown!r}", t.line, t.col)

    def script(self) -> Script:
        lets = []
        while self.peek().kind == "ident" and self.peek().text == "let":
            self.next()
            name_tok = self.peek()
            if name_tok.kind != "ident":
                raise ParseError("expected a name after 'let'",
                                 name_tok.line, name_tok.col)
            if name_tok.text in _GEN_NAMES or name_tok.text in _FUNCTIONS \
                    or name_tok.text in _KEYWORDS:
                raise ParseError(f"{name_tok.text!r} is reserved",
                                 name_tok.line, name_tok.col)
            self.next()
            eq = self.peek()
            if not (eq.kind == "punct" and eq.text == "="):
                raise ParseError("expected '=' in let-binding", eq.line, eq.col)
            self.next()
            value = self.expr()
            self.expect(";")
            lets.append((name_tok.text, value, name_tok.line, name_tok.col))
        body = self.expr()
        if self.peek().kind == "punct" and self.peek().text == ";":
            self.next()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected trailing input {t.text!r}", t.line, t.col)
        return Script(tuple(lets), body)

    def expr(self):
        node = self.term()
        while True:
            t = self.peek()
            if t.kind == "punct" and t.text in "+-":
                self.next()
                rhs = self.term()
                node = Binary(t.text, node, rhs, t.line, t.col)
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            t = self.peek()
            if t.kind == "punct" and t.text == "*":
                self.next()
                rhs = self.factor()
                node = Binary("*", node, rhs, t.line, t.col)
            else:
                return node

    def factor(self):
        t = self.peek()
        if t.kind == "punct" and t.text == "-":
            self.next()
            return Unary(self.factor(), t.line, t.col)
        return self.atom()

    def atom(self):
        t = self.peek()
        if t.kind == "number":
            self.next()
            value = _parse_number(t)
            nxt = self.peek()
            if nxt.kind == "ident" and nxt.text in _GEN_NAMES:
                mask = self.blade()
                return Scaled(value, mask, t.line, t.col)
            return Num(value, t.line, t.col)
        if t.kind == "ident":
            if t.text in _GEN_NAMES:
                mask = self.blade()
                return Blade(mask, t.line, t.col)
            if t.text == "let":
                raise ParseError("let-bindings must precede the final expression",
                                 t.line, t.col)
            self.next()
            nxt = self.peek()
            if nxt.kind == "punct" and nxt.text == "(":
                return self.call(t)
            if t.text in _FUNCTIONS:
                raise ParseError(f"{t.text} is a function, expected '(' after it",
                                 nxt.line, nxt.col)
            return Var(t.text, t.line, t.col)
        if t.kind == "punct" and t.text == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        shown = t.text if t.kind != "end" else "end of input"
        raise ParseError(f"expected an expression, found {shown!r}", t.line, t.col)

    def blade(self) -> int:
        mask = 0
        last = -1
        while True:
            t = self.next()
            idx = int(t.text[1:])
            if idx == 0:
                if mask or last >= 0:
                    raise ParseError("e0 cannot appear inside a caret chain",
                                     t.line, t.col)
                nxt = self.peek()
                if nxt.kind == "punct" and nxt.text == "^":
                    raise ParseError("e0 cannot appear inside a caret chain",
                                     nxt.line, nxt.col)
                return 0
            if idx <= last:
                raise ParseError(
                    "caret chains must list generators in ascending order; "
                    "use * for general products", t.line, t.col)
            last = idx
            mask |= 1 << (idx - 1)
            nxt = self.peek()
            if nxt.kind == "punct" and nxt.text == "^":
                self.next()
                t2 = self.peek()
                if not (t2.kind == "ident" and t2.text in _GEN_NAMES):
                    raise ParseError("expected a generator after '^'",
                                     t2.line, t2.col)
                continue
            return mask

    def call(self, name_tok: Token) -> Call:
        if name_tok.text not in _FUNCTIONS:
            raise UnknownFunction(f"unknown function {name_tok.text!r}",
                                  name_tok.line, name_tok.col)
        self.expect("(")
        pre: list = []
        post: list = []
        has_semi = False
        target = pre
        t = self.peek()
        if not (t.kind == "punct" and t.text == ")"):
            while True:
                target.append(self.expr())
                t = self.peek()
                if t.kind == "punct" and t.text == ",":
                    self.next()
                    continue
                if t.kind == "punct" and t.text == ";":
                    if has_semi:
                        raise ParseError("only one ';' is allowed in a call",
                                         t.line, t.col)
                    self.next()
                    has_semi = True
                    target = post
                    continue
                break
        self.expect(")")
        return Call(name_tok.text, tuple(pre), tuple(post), has_semi,
                    name_tok.line, name_tok.col)


def _parse_number(t: Token):
    if "/" in t.text:
        num, den = t.text.split("/")
        if int(den) == 0:
            raise ParseError("zero denominator", t.line, t.col)
        return Fraction(int(num), int(den))
    return int(t.text)


def parse(text: str) -> Script:
    return _Parser(_tokenize(text)).script()


# -- evaluation --------------------------------------------------------


@dataclass
class Env:
    bindings: dict = field(default_factory=dict)
    fold: FoldConvention = DEFAULT_FOLD
    variant: str = ODOT_LEFT
    e7_rule: str = E7_CORRECTED


def _as_mv(x) -> Multivector:
    return x.to_multivector() if isinstance(x, Octonion) else x


def _need_octonion(value: Multivector, node, what: str) -> Octonion:
    try:
        return Octonion.from_multivector(value)
    except NotParavectorError:
        raise TypeMismatch(
            f"{what} must have only grade-0 and grade-1 parts, "
            f"got {value.to_text()}", node.line, node.col) from None


def _literal_int(node, what: str) -> int:
    neg = False
    while isinstance(node, Unary):
        neg = not neg
        node = node.child
    if isinstance(node, Num) and isinstance(node.value, int):
        return -node.value if neg else node.value
    raise TypeMismatch(f"{what} must be an integer literal",
                       node.line, node.col)


def _check_arity(call: Call, pre: int, post: int, semi: bool):
    want = f"{call.name} takes "
    if semi:
        want += f"{pre} steering argument(s), ';', then {post} operand(s)"
    else:
        want += f"{pre + post} argument(s)"
    if call.has_semi != semi or len(call.pre) != pre or len(call.post) != post:
        raise ArityError(want, call.line, call.col)


def _eval_call(call: Call, env: Env) -> Multivector:
    f = call.name
    try:
        if f == "psi":
            _check_arity(call, 0, 0, False)
            return psi()
        if f in ("rev", "hat", "bar", "inv"):
            _check_arity(call, 1, 0, False)
            x = _eval(call.pre[0], env)
            op = {"rev": reversion, "hat": grade_involution,
                  "bar": conjugation, "inv": mv_inverse}[f]
            return op(x)
        if f == "grade":
            _check_arity(call, 2, 0, False)
            x = _eval(call.pre[0], env)
            k = _literal_int(call.pre[1], "the grade")
            if not 0 <= k <= 7:
                raise TypeMismatch("the grade must lie in 0..7",
                                   call.pre[1].line, call.pre[1].col)
            return grade_project(x, k)
        if f == "circ":
            _check_arity(call, 2, 0, False)
            A = _need_octonion(_eval(call.pre[0], env), call.pre[0], "circ operand")
            B = _need_octonion(_eval(call.pre[1], env), call.pre[1], "circ operand")
            return circ(A, B).to_multivector()
        if f == "bulL":
            _check_arity(call, 2, 0, False)
            A = _need_octonion(_eval(call.pre[0], env), call.pre[0],
                               "the first bulL operand")
            u = _eval(call.pre[1], env)
            return bullet_left(A, u, env.fold).to_multivector()
        if f == "bulR":
            _check_arity(call, 2, 0, False)
            u = _eval(call.pre[0], env)
            A = _need_octonion(_eval(call.pre[1], env), call.pre[1],
                               "the second bulR operand")
            return bullet_right(u, A, env.fold).to_multivector()
        if f in ("odotL", "odotR"):
            _check_arity(call, 2, 0, False)
            x = _eval(call.pre[0], env)
            y = _eval(call.pre[1], env)
            variant = "left" if f == "odotL" else "right"
            return odot(x, y, variant, env.fold).to_multivector()
        if f == "makeC":
            _check_arity(call, 2, 0, False)
            u = _eval(call.pre[0], env)
            v = _eval(call.pre[1], env)
            return make_C(u, v, env.fold, env.variant).to_multivector()
        if f == "eunits":
            _check_arity(call, 2, 0, False)
            u = _eval(call.pre[0], env)
            a = _literal_int(call.pre[1], "the unit slot")
            if not 1 <= a <= 7:
                raise TypeMismatch("the unit slot must lie in 1..7",
                                   call.pre[1].line, call.pre[1].col)
            return e_units(u, env.e7_rule, env.fold)[a - 1].to_multivector()
        if f in ("circU", "circ1U"):
            _check_arity(call, 1, 2, True)
            u = _eval(call.pre[0], env)
            A = _need_octonion(_eval(call.post[0], env), call.post[0],
                               "a steered-product operand")
            B = _need_octonion(_eval(call.post[1], env), call.post[1],
                               "a steered-product operand")
            prod = circ_u if f == "circU" else circ_1u
            return prod(u, A, B, env.fold, env.variant).to_multivector()
        if f in ("circUV", "circUC"):
            _check_arity(call, 2, 2, True)
            u = _eval(call.pre[0], env)
            w = _eval(call.pre[1], env)
            A = _need_octonion(_eval(call.post[0], env), call.post[0],
                               "a steered-product operand")
            B = _need_octonion(_eval(call.post[1], env), call.post[1],
                               "a steered-product operand")
            prod = circ_uv if f == "circUV" else circ_uC
            return prod(u, w, A, B, env.fold, env.variant).to_multivector()
    except Singular as ex:
        raise EvalError("Singular", str(ex), call.line, call.col) from ex
    except Degenerate as ex:
        raise EvalError("Degenerate", str(ex), call.line, call.col) from ex
    raise UnknownFunction(f"unknown function {f!r}", call.line, call.col)


def _eval(node, env: Env) -> Multivector:
    if isinstance(node, Num):
        return Multivector.scalar(node.value)
    if isinstance(node, Blade):
        return Multivector.blade(node.mask, 1)
    if isinstance(node, Scaled):
        return Multivector.blade(node.mask, node.value)
    if isinstance(node, Var):
        try:
            return env.bindings[node.name]
        except KeyError:
            raise UnboundVariable(f"unbound variable {node.name!r}",
                                  node.line, node.col) from None
    if isinstance(node, Unary):
        return -_eval(node.child, env)
    if isinstance(node, Binary):
        left = _eval(node.left, env)
        right = _eval(node.right, env)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return left * right
    if isinstance(node, Call):
        return _eval_call(node, env)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(script: Script, env: Env | None = None) -> Multivector:
    """Run the let-bindings, then the final expression, in the given
    environment (a fresh default one when omitted)."""
    env = env or Env()
    for name, value_node, line, col in script.lets:
        if name in env.bindings:
            raise ShadowError(f"{name!r} is already bound", line, col)
        env.bindings[name] = _eval(value_node, env)
    return _eval(script.expr, env)


def run(text: str, env: Env | None = None) -> Multivector:
    return evaluate(parse(text), env)
