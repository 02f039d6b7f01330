"""Pipeline-expression language: the textual key format.

Grammar:

    term := "scan" "(" SPEC "," term ")"
          | "add" "(" term "," term ")"
          | "img"
          | "key" "(" '"' KEYWORD '"' ")"
    SPEC := ("C"|"D"|"O"|"S") ("0".."7")

`img` is the plaintext, `key("...")` a keyword-derived carrier, `scan` a
pixel permutation and `add` pixel-wise modular addition. A pipeline is
decryptable iff it contains exactly one `img` leaf and every `add` mixes
that plaintext branch with a purely key-determined branch.
"""

from dataclasses import dataclass

from .carrier import KeywordError, keyword_bytes
from .grid_scan import ScanSpec

MAX_DEPTH = 64


class Img:
    """The plaintext leaf."""

    def __eq__(self, other):
        return isinstance(other, Img)

    def __hash__(self):
        return hash(Img)

    def __repr__(self):
        return "Img()"


@dataclass(frozen=True)
class Key:
    keyword: str


@dataclass(frozen=True)
class Scan:
    spec: ScanSpec
    child: "PipelineExpr"


@dataclass(frozen=True)
class Add:
    left: "PipelineExpr"
    right: "PipelineExpr"


PipelineExpr = Img | Key | Scan | Add


class PipelineSyntaxError(ValueError):
    """Malformed pipeline text; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"at position {position}: {message}")
        self.position = position


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, token):
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            raise PipelineSyntaxError(f"expected {token!r}", self.pos)
        self.pos += len(token)

    def term(self, depth=0):
        if depth > MAX_DEPTH:
            raise PipelineSyntaxError(
                f"expression nested deeper than {MAX_DEPTH}", self.pos
            )
        self.skip_ws()
        rest = self.text[self.pos:]
        if rest.startswith("img"):
            self.pos += 3
            return Img()
        if rest.startswith("scan"):
            self.pos += 4
            self.expect("(")
            spec = self.scan_spec()
            self.expect(",")
            child = self.term(depth + 1)
            self.expect(")")
            return Scan(spec, child)
        if rest.startswith("add"):
            self.pos += 3
            self.expect("(")
            left = self.term(depth + 1)
            self.expect(",")
            right = self.term(depth + 1)
            self.expect(")")
            return Add(left, right)
        if rest.startswith("key"):
            self.pos += 3
            self.expect("(")
            kw = self.keyword()
            self.expect(")")
            return Key(kw)
        raise PipelineSyntaxError(
            "expected one of 'scan', 'add', 'img', 'key'", self.pos
        )

    def scan_spec(self):
        self.skip_ws()
        start = self.pos
        spec = self.text[self.pos:self.pos + 2]
        try:
            parsed = ScanSpec.parse(spec)
        except ValueError as exc:
            raise PipelineSyntaxError(str(exc), start) from None
        self.pos += 2
        return parsed

    def keyword(self):
        self.skip_ws()
        self.expect('"')
        start = self.pos
        end = self.text.find('"', self.pos)
        if end < 0:
            raise PipelineSyntaxError("unterminated keyword string", start)
        kw = self.text[start:end]
        try:
            keyword_bytes(kw)
        except KeywordError as exc:
            raise PipelineSyntaxError(str(exc), start) from None
        self.pos = end + 1
        return kw


def parse_pipeline(text: str) -> PipelineExpr:
    """Parse pipeline text into an expression tree."""
    parser = _Parser(text)
    expr = parser.term()
    parser.skip_ws()
    if parser.pos != len(text):
        raise PipelineSyntaxError("unexpected trailing input", parser.pos)
    return expr


def format_pipeline(expr: PipelineExpr) -> str:
    """Canonical text form; parse_pipeline round-trips it."""
    match expr:
        case Img():
            return "img"
        case Key(keyword):
            return f'key("{keyword}")'
        case Scan(spec, child):
            return f"scan({spec}, {format_pipeline(child)})"
        case Add(left, right):
            return f"add({format_pipeline(left)}, {format_pipeline(right)})"
    raise TypeError(f"not a pipeline node: {expr!r}")


def count_img_leaves(expr: PipelineExpr) -> int:
    match expr:
        case Img():
            return 1
        case Key(_):
            return 0
        case Scan(_, child):
            return count_img_leaves(child)
        case Add(left, right):
            return count_img_leaves(left) + count_img_leaves(right)
    raise TypeError(f"not a pipeline node: {expr!r}")


def validate_decryptable(expr: PipelineExpr) -> list:
    """Diagnostics explaining why `expr` cannot be inverted; empty if it can.

    Decryptable means: exactly one plaintext leaf overall, and every add
    node keeps the plaintext on exactly one side.
    """
    diagnostics = []
    total = count_img_leaves(expr)
    if total == 0:
        diagnostics.append(
            "pipeline contains no 'img' leaf; it ignores the plaintext"
        )
    elif total > 1:
        diagnostics.append(
            f"pipeline contains {total} 'img' leaves; the plaintext must "
            "occur exactly once"
        )

    def walk(node):
        if isinstance(node, Scan):
            walk(node.child)
        elif isinstance(node, Add):
            if count_img_leaves(node.left) and count_img_leaves(node.right):
                diagnostics.append(
                    f"both operands of {format_pipeline(node)} contain the "
                    "plaintext; modular addition of two plaintext-dependent "
                    "images is not invertible"
                )
            walk(node.left)
            walk(node.right)

    walk(expr)
    return diagnostics
