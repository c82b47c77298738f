"""The construction-script language: lexer, AST, and recursive-descent parser.

Grammar (frozen; see README for worked examples)::

    script  := stmt* EOF
    stmt    := "let" ID "=" expr ";"
             | "ample" ID "on" ID "=" ampexpr ";"
             | "report" kind args ";"
    expr    := atom | "Product" "(" ref "," ref ")"
             | "NCUnion" "(" ref "," ID ")"
             | "NonEquidimX2" "(" INT ")"
             | "EquidimX2" "(" INT "," INT ")"
             | "PerverseProduct" "(" ref "," ref ")"
    atom    := "P" "(" INT ")" | "P1xP1" | "BlowupP2" | "Curve" "(" INT ")"
    ref     := ID | atom
    kind    := "table" | "dependence" | "parity"
    args    := ID                     (table)
             | ID ID ID               (dependence: space, two selections)
             | ID ID ID INT INT       (parity: space, selections, k0, j0)
    ampexpr := unit ("*" unit)*       (Segre product across factors)
    unit    := "(" sum ")" | coefclass
    sum     := coefclass ("+" coefclass)*
    coefclass := INT? ID

Coefficients are positive integers written by juxtaposition (``2 e1``);
``*`` always means the Segre combination across product factors.  Every
diagnostic carries line/column and the offending token.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ScriptError

_SYMBOLS = "();,+*=."


@dataclass(frozen=True)
class Token:
    kind: str  # ID, INT, SYM, EOF
    text: str
    line: int
    col: int


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append(Token("SYM", ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and source[i].isdigit():
                i += 1
            text = source[start:i]
            tokens.append(Token("INT", text, line, col))
            col += len(text)
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (source[i].isalnum() or source[i] == "_"):
                i += 1
            text = source[start:i]
            tokens.append(Token("ID", text, line, col))
            col += len(text)
            continue
        raise ScriptError(f"unexpected character {ch!r}", line, col, ch)
    tokens.append(Token("EOF", "", line, col))
    return tokens


# ---------------------------------------------------------------- AST nodes

@dataclass(frozen=True)
class Node:
    line: int
    col: int


@dataclass(frozen=True)
class Name(Node):
    ident: str


@dataclass(frozen=True)
class AtomP(Node):
    n: int


@dataclass(frozen=True)
class AtomP1xP1(Node):
    pass


@dataclass(frozen=True)
class AtomBlowupP2(Node):
    pass


@dataclass(frozen=True)
class AtomCurve(Node):
    degree: int


@dataclass(frozen=True)
class ProductExpr(Node):
    first: Node
    second: Node


@dataclass(frozen=True)
class NCUnionExpr(Node):
    space: Node
    divisor: Name


@dataclass(frozen=True)
class NonEquidimExpr(Node):
    d2: int


@dataclass(frozen=True)
class EquidimExpr(Node):
    d2: int
    d_e: int


@dataclass(frozen=True)
class PerverseProductExpr(Node):
    first: Node
    second: Node


@dataclass(frozen=True)
class AmpTerm(Node):
    coeff: int
    cls: str


@dataclass(frozen=True)
class AmpSum(Node):
    terms: tuple[AmpTerm, ...]


@dataclass(frozen=True)
class AmpSegre(Node):
    factors: tuple[AmpSum, ...]


@dataclass(frozen=True)
class LetStmt(Node):
    name: str
    expr: Node


@dataclass(frozen=True)
class AmpleStmt(Node):
    name: str
    target: str
    selection: Node  # AmpSum or AmpSegre


@dataclass(frozen=True)
class ReportStmt(Node):
    kind: str
    target: Name
    selections: tuple[str, ...]
    position: tuple[int, int] | None  # (k0, j0) for parity reports


@dataclass(frozen=True)
class Script:
    statements: tuple[Node, ...]


_ATOM_KEYWORDS = {"P", "P1xP1", "BlowupP2", "Curve"}
_EXPR_KEYWORDS = _ATOM_KEYWORDS | {
    "Product", "NCUnion", "NonEquidimX2", "EquidimX2", "PerverseProduct"}
_REPORT_KINDS = {"table", "dependence", "parity"}


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ScriptError(message, tok.line, tok.col, tok.text or "<eof>")

    def expect_sym(self, sym: str) -> Token:
        tok = self.peek()
        if tok.kind != "SYM" or tok.text != sym:
            self.fail(f"expected {sym!r}")
        return self.advance()

    def expect_id(self, what: str = "identifier") -> Token:
        tok = self.peek()
        if tok.kind != "ID":
            self.fail(f"expected {what}")
        return self.advance()

    def expect_int(self) -> int:
        tok = self.peek()
        if tok.kind != "INT":
            self.fail("expected an integer")
        self.advance()
        return int(tok.text)

    def expect_keyword(self, word: str):
        tok = self.peek()
        if tok.kind != "ID" or tok.text != word:
            self.fail(f"expected {word!r}")
        return self.advance()

    # ----- expressions

    def parse_atom(self) -> Node:
        tok = self.advance()
        if tok.text == "P":
            self.expect_sym("(")
            n = self.expect_int()
            self.expect_sym(")")
            return AtomP(tok.line, tok.col, n)
        if tok.text == "P1xP1":
            return AtomP1xP1(tok.line, tok.col)
        if tok.text == "BlowupP2":
            return AtomBlowupP2(tok.line, tok.col)
        if tok.text == "Curve":
            self.expect_sym("(")
            d = self.expect_int()
            self.expect_sym(")")
            return AtomCurve(tok.line, tok.col, d)
        self.fail("expected a built-in atom", tok)

    def parse_ref(self) -> Node:
        tok = self.peek()
        if tok.kind != "ID":
            self.fail("expected a name or built-in atom")
        if tok.text in _ATOM_KEYWORDS:
            return self.parse_atom()
        self.advance()
        return Name(tok.line, tok.col, tok.text)

    def parse_expr(self) -> Node:
        tok = self.peek()
        if tok.kind != "ID" or tok.text not in _EXPR_KEYWORDS:
            self.fail("expected a construction expression")
        if tok.text in _ATOM_KEYWORDS:
            return self.parse_atom()
        self.advance()
        if tok.text == "Product":
            self.expect_sym("(")
            first = self.parse_ref()
            self.expect_sym(",")
            second = self.parse_ref()
            self.expect_sym(")")
            return ProductExpr(tok.line, tok.col, first, second)
        if tok.text == "NCUnion":
            self.expect_sym("(")
            space = self.parse_ref()
            self.expect_sym(",")
            div = self.expect_id("divisor name")
            self.expect_sym(")")
            return NCUnionExpr(tok.line, tok.col, space,
                               Name(div.line, div.col, div.text))
        if tok.text == "NonEquidimX2":
            self.expect_sym("(")
            d2 = self.expect_int()
            self.expect_sym(")")
            return NonEquidimExpr(tok.line, tok.col, d2)
        if tok.text == "EquidimX2":
            self.expect_sym("(")
            d2 = self.expect_int()
            self.expect_sym(",")
            de = self.expect_int()
            self.expect_sym(")")
            return EquidimExpr(tok.line, tok.col, d2, de)
        self.expect_sym("(")
        first = self.parse_ref()
        self.expect_sym(",")
        second = self.parse_ref()
        self.expect_sym(")")
        return PerverseProductExpr(tok.line, tok.col, first, second)

    # ----- ample expressions

    def parse_coefclass(self) -> AmpTerm:
        tok = self.peek()
        coeff = 1
        if tok.kind == "INT":
            coeff = self.expect_int()
        cls = self.expect_id("class name")
        return AmpTerm(cls.line, cls.col, coeff, cls.text)

    def parse_sum(self) -> AmpSum:
        first = self.parse_coefclass()
        terms = [first]
        while self.peek().kind == "SYM" and self.peek().text == "+":
            self.advance()
            terms.append(self.parse_coefclass())
        return AmpSum(first.line, first.col, tuple(terms))

    def parse_unit(self) -> AmpSum:
        tok = self.peek()
        if tok.kind == "SYM" and tok.text == "(":
            self.advance()
            inner = self.parse_sum()
            self.expect_sym(")")
            return inner
        term = self.parse_coefclass()
        return AmpSum(term.line, term.col, (term,))

    def parse_ampexpr(self) -> Node:
        first = self.parse_unit()
        if self.peek().kind == "SYM" and self.peek().text == "*":
            factors = [first]
            while self.peek().kind == "SYM" and self.peek().text == "*":
                self.advance()
                factors.append(self.parse_unit())
            return AmpSegre(first.line, first.col, tuple(factors))
        if self.peek().kind == "SYM" and self.peek().text == "+":
            # an unparenthesized sum that started with a bare unit
            terms = list(first.terms)
            while self.peek().kind == "SYM" and self.peek().text == "+":
                self.advance()
                terms.append(self.parse_coefclass())
            return AmpSum(first.line, first.col, tuple(terms))
        return first

    # ----- statements

    def parse_stmt(self) -> Node:
        tok = self.peek()
        if tok.kind != "ID":
            self.fail("expected a statement")
        if tok.text == "let":
            self.advance()
            name = self.expect_id("binding name")
            self.expect_sym("=")
            expr = self.parse_expr()
            self.expect_sym(";")
            return LetStmt(tok.line, tok.col, name.text, expr)
        if tok.text == "ample":
            self.advance()
            name = self.expect_id("selection name")
            self.expect_keyword("on")
            target = self.expect_id("target name")
            self.expect_sym("=")
            sel = self.parse_ampexpr()
            self.expect_sym(";")
            return AmpleStmt(tok.line, tok.col, name.text, target.text, sel)
        if tok.text == "report":
            self.advance()
            kind = self.expect_id("report kind")
            if kind.text not in _REPORT_KINDS:
                self.fail("report kind is one of table, dependence, parity", kind)
            target = self.expect_id("space name")
            tgt = Name(target.line, target.col, target.text)
            selections: tuple[str, ...] = ()
            position = None
            if kind.text in ("dependence", "parity"):
                a = self.expect_id("first selection name")
                b = self.expect_id("second selection name")
                selections = (a.text, b.text)
            if kind.text == "parity":
                k0 = self.expect_int()
                j0 = self.expect_int()
                position = (k0, j0)
            self.expect_sym(";")
            return ReportStmt(tok.line, tok.col, kind.text, tgt, selections, position)
        self.fail("statements start with let, ample, or report")

    def parse_script(self) -> Script:
        out = []
        while self.peek().kind != "EOF":
            out.append(self.parse_stmt())
        return Script(tuple(out))


def parse(source: str) -> Script:
    """Parse script text into an AST, raising ScriptError with line/column."""
    return _Parser(tokenize(source)).parse_script()
