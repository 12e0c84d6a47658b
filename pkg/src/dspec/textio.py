"""Text format for specifications, arguments and outcomes.

Rule files use one declaration per line: ``fact l.``, ``strict l <- body.``
or ``defeasible l <~ body.`` with ``%`` comments.  ``~`` is classical
negation, ``<~`` marks a defeasible rule, constants start lowercase and
variables uppercase.  The unicode spellings for negation and the strict
arrow are accepted on input only.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .arguments import Argument, make_argument
from .core import Atom, Constant, Literal, Rule, RuleKind, Specification, Term, Variable
from .errors import DspecError, SpecSyntaxError
from .specificity import ComparisonOutcome

_PUNCT = ("<-", "<~", "<", ">", "(", ")", "{", "}", ",", ".", ";", "~")
_ALIASES = {"¬": "~", "⟸": "<-"}


@dataclass(frozen=True)
class Token:
    kind: str  # "ident" | "var" | one of the punctuation spellings | "eof"
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch == "%":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch in _ALIASES:
            tokens.append(Token(_ALIASES[ch], _ALIASES[ch], line, col))
            i += 1
            col += 1
            continue
        if ch.isalpha():
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            word = text[start:i]
            kind = "var" if word[0].isupper() else "ident"
            tokens.append(Token(kind, word, line, col))
            col += len(word)
            continue
        for punct in _PUNCT:
            if text.startswith(punct, i):
                tokens.append(Token(punct, punct, line, col))
                i += len(punct)
                col += len(punct)
                break
        else:
            raise SpecSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def here(self) -> Token:
        return self.tokens[self.pos]

    def take(self, kind: str) -> Token:
        tok = self.here
        if tok.kind != kind:
            shown = tok.text or "end of input"
            raise SpecSyntaxError(f"expected {kind!r}, found {shown!r}", tok.line, tok.column)
        self.pos += 1
        return tok

    def accept(self, kind: str) -> Token | None:
        if self.here.kind == kind:
            return self.take(kind)
        return None

    def term(self) -> Term:
        tok = self.here
        if tok.kind == "ident":
            self.take("ident")
            return Constant(tok.text)
        if tok.kind == "var":
            self.take("var")
            return Variable(tok.text)
        raise SpecSyntaxError(f"expected a term, found {tok.text!r}", tok.line, tok.column)

    def literal(self) -> Literal:
        negated = self.accept("~") is not None
        name = self.take("ident")
        args: list[Term] = []
        if self.accept("("):
            args.append(self.term())
            while self.accept(","):
                args.append(self.term())
            self.take(")")
        return Literal(Atom(name.text, tuple(args)), negated)

    def body(self) -> tuple[Literal, ...]:
        lits = [self.literal()]
        while self.accept(","):
            lits.append(self.literal())
        return tuple(lits)


@dataclass(frozen=True)
class SpecDocument:
    """A parsed rule file: declarations in source order, with source
    positions for diagnostics.  Name and positions do not take part in
    equality, so parsing a rendered document gives back an equal one."""

    declarations: tuple[Rule, ...]
    name: str = field(default="", compare=False)
    positions: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    def to_specification(self) -> Specification:
        facts = frozenset(r for r in self.declarations if r.kind is RuleKind.FACT)
        general = frozenset(r for r in self.declarations if r.kind is RuleKind.STRICT)
        defeasible = frozenset(r for r in self.declarations if r.kind is RuleKind.DEFEASIBLE)
        return Specification(facts, general, defeasible)


def parse_document(text: str, name: str = "") -> SpecDocument:
    parser = _Parser(text)
    rules: list[Rule] = []
    positions: list[tuple[int, int]] = []
    while parser.here.kind != "eof":
        tok = parser.take("ident")
        if tok.text == "fact":
            head = parser.literal()
            parser.take(".")
            rules.append(Rule(head, (), RuleKind.FACT))
        elif tok.text == "strict":
            head = parser.literal()
            arrow = parser.take("<-")
            if parser.here.kind == ".":
                raise SpecSyntaxError(
                    "strict rule with empty body (use 'fact')", arrow.line, arrow.column
                )
            body = parser.body()
            parser.take(".")
            rules.append(Rule(head, body, RuleKind.STRICT))
        elif tok.text == "defeasible":
            head = parser.literal()
            parser.take("<~")
            body = parser.body()
            parser.take(".")
            rules.append(Rule(head, body, RuleKind.DEFEASIBLE))
        else:
            raise SpecSyntaxError(
                f"expected 'fact', 'strict' or 'defeasible', found {tok.text!r}",
                tok.line,
                tok.column,
            )
        positions.append((tok.line, tok.column))
    return SpecDocument(tuple(rules), name, tuple(positions))


def parse_spec(text: str, name: str = "") -> Specification:
    """Parse rule text into a specification (arity conflicts are load-time
    errors raised by the Specification constructor)."""
    return parse_document(text, name).to_specification()


def render_rule(rule: Rule) -> str:
    if rule.kind is RuleKind.FACT:
        return f"fact {rule.head}."
    if not rule.body:
        # expressible in memory only; the grammar reserves bodyless
        # declarations for facts, which live in a different rule set
        raise DspecError(f"no text form for a bodyless {rule.kind.value} rule: {rule}")
    return f"{rule.kind.value} {rule}."


def render_document(doc: SpecDocument) -> str:
    return "\n".join(render_rule(r) for r in doc.declarations) + "\n"


def render_spec(spec: Specification) -> str:
    """Canonical text: facts, then general, then defeasible, each sorted."""
    ordered = (
        sorted(spec.facts, key=Rule.key)
        + sorted(spec.general, key=Rule.key)
        + sorted(spec.defeasible, key=Rule.key)
    )
    return render_document(SpecDocument(tuple(ordered)))


def parse_argument(text: str, spec: Specification) -> Argument:
    """Parse ``<{rule; rule}, literal>`` and validate it against the spec."""
    parser = _Parser(text)
    parser.take("<")
    parser.take("{")
    support: list[Rule] = []
    if parser.here.kind != "}":
        while True:
            head = parser.literal()
            parser.take("<~")
            body = parser.body()
            support.append(Rule(head, body, RuleKind.DEFEASIBLE))
            if not parser.accept(";"):
                break
    parser.take("}")
    parser.take(",")
    conclusion = parser.literal()
    parser.take(">")
    parser.take("eof")
    return make_argument(spec, support, conclusion)


def render_argument(argument: Argument) -> str:
    return str(argument)


_OUTCOME_SYMBOLS = {
    ComparisonOutcome.MORE_SPECIFIC: "<",
    ComparisonOutcome.LESS_SPECIFIC: ">",
    ComparisonOutcome.EQUIVALENT: "~=",
    ComparisonOutcome.INCOMPARABLE: "##",
}
_SYMBOL_OUTCOMES = {v: k for k, v in _OUTCOME_SYMBOLS.items()}


def render_outcome(outcome: ComparisonOutcome, long: bool = False) -> str:
    symbol = _OUTCOME_SYMBOLS[outcome]
    return f"{symbol} {outcome.value}" if long else symbol


def parse_outcome(symbol: str) -> ComparisonOutcome:
    try:
        return _SYMBOL_OUTCOMES[symbol]
    except KeyError:
        raise ValueError(f"unknown outcome symbol {symbol!r}") from None
