"""Line-oriented problem-file format: parse, validate positions, serialize.

    algebra NAME
    dim INT
    basis ID ...                        # exactly dim distinct names
    bracket ID ID = term [+ term ...]   # omitted pairs bracket to zero
    subalgebra gen [; gen ...]          # gen := term [+ term ...]
    functional RAT [, RAT ...]          # one value per generator, in order
    config KEY VALUE                    # seed/trials/bound/symbolic/...

A term is RATIONAL * ID or a bare ID (coefficient 1); rationals are INT or
INT/POSINT.  '#' starts a comment.  Omitting the subalgebra means the
trivial one (m = 0); omitting the functional means f = 0.  All errors carry
(line, column, message).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LieAlgebra

Vector = tuple[Fraction, ...]


class ParseError(ValueError):
    def __init__(self, line: int, col: int, message: str):
        self.line = line
        self.col = col
        self.message = message
        super().__init__(f"line {line}, column {col}: {message}")


_TOKEN_RE = re.compile(r"""
    (?P<RATIONAL>-?\d+(?:/\d+)?)
  | (?P<ID>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<PUNCT>[*+;,=])
  | (?P<SPACE>[ \t]+)
  | (?P<BAD>.)
""", re.VERBOSE)

CONFIG_KEYS = {
    "seed": int,
    "trials": int,
    "bound": int,
    "symbolic": bool,
    "assume_exponential": bool,
}


@dataclass(frozen=True)
class Token:
    kind: str   # RATIONAL | ID | PUNCT | EOL
    text: str
    line: int
    col: int


def _tokenize_line(text: str, lineno: int) -> list[Token]:
    body = text.split("#", 1)[0]
    out = []
    for match in _TOKEN_RE.finditer(body):
        kind = match.lastgroup
        if kind == "SPACE":
            continue
        col = match.start() + 1
        if kind == "BAD":
            raise ParseError(lineno, col,
                             f"unexpected character {match.group()!r}")
        out.append(Token(kind, match.group(), lineno, col))
    return out


class _Line:
    """Cursor over one line's tokens with expectation-style errors."""

    def __init__(self, tokens: list[Token], lineno: int):
        self.tokens = tokens
        self.lineno = lineno
        self.pos = 0

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _end_col(self) -> int:
        if self.tokens:
            last = self.tokens[-1]
            return last.col + len(last.text)
        return 1

    def take(self, kind: str, expected: str, text: str | None = None) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError(self.lineno, self._end_col(),
                             f"expected {expected}, found end of line")
        if tok.kind != kind or (text is not None and tok.text != text):
            raise ParseError(tok.line, tok.col,
                             f"expected {expected}, found {tok.text!r}")
        self.pos += 1
        return tok

    def done(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise ParseError(tok.line, tok.col,
                             f"expected end of line, found {tok.text!r}")


@dataclass(frozen=True)
class ProblemFile:
    name: str
    algebra: LieAlgebra
    subalgebra_rows: tuple[Vector, ...]
    functional_vals: Vector
    config: dict = field(default_factory=dict)

    @property
    def m(self) -> int:
        return len(self.subalgebra_rows)


def _rational(tok: Token) -> Fraction:
    if "/" in tok.text:
        num, den = tok.text.split("/")
        if int(den) == 0:
            raise ParseError(tok.line, tok.col + len(num) + 1,
                             "denominator must be a positive integer")
        return Fraction(int(num), int(den))
    return Fraction(int(tok.text))


def _term(line: _Line, names: dict[str, int]) -> tuple[int, Fraction]:
    """One term: RATIONAL '*' ID, or a bare ID with coefficient 1."""
    tok = line.peek()
    if tok is not None and tok.kind == "RATIONAL":
        line.take("RATIONAL", "a rational coefficient")
        coeff = _rational(tok)
        line.take("PUNCT", "'*'", "*")
        ident = line.take("ID", "a basis name")
    else:
        ident = line.take("ID", "a term (coefficient * name, or a name)")
        coeff = Fraction(1)
    if ident.text not in names:
        raise ParseError(ident.line, ident.col,
                         f"unknown basis name {ident.text!r}")
    return names[ident.text], coeff


def _term_sum(line: _Line, names: dict[str, int], n: int) -> list[Fraction]:
    vec = [Fraction(0)] * n
    idx, coeff = _term(line, names)
    vec[idx] += coeff
    while True:
        tok = line.peek()
        if tok is None or tok.text != "+":
            break
        line.take("PUNCT", "'+'", "+")
        idx, coeff = _term(line, names)
        vec[idx] += coeff
    return vec


def parse(source: str) -> ProblemFile:
    lines = []
    for lineno, raw in enumerate(source.splitlines(), start=1):
        toks = _tokenize_line(raw, lineno)
        if toks:
            lines.append(_Line(toks, lineno))
    cursor = 0

    def next_line(expected: str) -> _Line:
        nonlocal cursor
        if cursor >= len(lines):
            lastno = lines[-1].lineno if lines else 1
            raise ParseError(lastno, 1, f"expected {expected}, "
                             "found end of file")
        line = lines[cursor]
        cursor += 1
        return line

    # --- header -----------------------------------------------------------
    line = next_line("'algebra'")
    line.take("ID", "'algebra'", "algebra")
    name = line.take("ID", "an algebra name").text
    line.done()

    line = next_line("'dim'")
    line.take("ID", "'dim'", "dim")
    dim_tok = line.take("RATIONAL", "a positive integer dimension")
    line.done()
    if "/" in dim_tok.text or int(dim_tok.text) < 1:
        raise ParseError(dim_tok.line, dim_tok.col,
                         "dimension must be a positive integer")
    n = int(dim_tok.text)

    line = next_line("'basis'")
    line.take("ID", "'basis'", "basis")
    basis: list[str] = []
    while line.peek() is not None:
        tok = line.take("ID", "a basis name")
        if tok.text in basis:
            raise ParseError(tok.line, tok.col,
                             f"duplicate basis name {tok.text!r}")
        basis.append(tok.text)
    if len(basis) != n:
        raise ParseError(line.lineno, 1,
                         f"basis lists {len(basis)} names for dim {n}")
    names = {nm: i for i, nm in enumerate(basis)}

    # --- statements -------------------------------------------------------
    table = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    seen_pairs: dict[frozenset, int] = {}
    sub_rows: list[list[Fraction]] | None = None
    functional: tuple[tuple[Fraction, ...], Token] | None = None
    config: dict = {}

    while cursor < len(lines):
        line = next_line("a statement")
        head = line.take(
            "ID", "'bracket', 'subalgebra', 'functional' or 'config'")
        if head.text == "bracket":
            if sub_rows is not None or functional is not None:
                raise ParseError(head.line, head.col,
                                 "bracket lines must precede the "
                                 "subalgebra and functional blocks")
            a = line.take("ID", "a basis name")
            b = line.take("ID", "a basis name")
            for tok in (a, b):
                if tok.text not in names:
                    raise ParseError(tok.line, tok.col,
                                     f"unknown basis name {tok.text!r}")
            if a.text == b.text:
                raise ParseError(b.line, b.col,
                                 "bracket of identical generators must be "
                                 "omitted (it is zero by antisymmetry)")
            key = frozenset((a.text, b.text))
            if key in seen_pairs:
                raise ParseError(a.line, a.col,
                                 f"duplicate bracket for pair "
                                 f"({a.text}, {b.text}); first given on "
                                 f"line {seen_pairs[key]}")
            seen_pairs[key] = a.line
            line.take("PUNCT", "'='", "=")
            vec = _term_sum(line, names, n)
            line.done()
            i, j = names[a.text], names[b.text]
            for k in range(n):
                table[i][j][k] = vec[k]
                table[j][i][k] = -vec[k]
        elif head.text == "subalgebra":
            if sub_rows is not None:
                raise ParseError(head.line, head.col,
                                 "duplicate subalgebra block")
            if functional is not None:
                raise ParseError(head.line, head.col,
                                 "subalgebra must precede the functional")
            sub_rows = [_term_sum(line, names, n)]
            while line.peek() is not None:
                line.take("PUNCT", "';'", ";")
                sub_rows.append(_term_sum(line, names, n))
            line.done()
        elif head.text == "functional":
            if functional is not None:
                raise ParseError(head.line, head.col,
                                 "duplicate functional block")
            if sub_rows is None:
                raise ParseError(head.line, head.col,
                                 "functional requires a subalgebra block")
            vals = [_rational(line.take("RATIONAL", "a rational value"))]
            while line.peek() is not None:
                line.take("PUNCT", "','", ",")
                vals.append(_rational(line.take("RATIONAL",
                                                "a rational value")))
            line.done()
            functional = (tuple(vals), head)
        elif head.text == "config":
            key_tok = line.take("ID", "a config key")
            if key_tok.text not in CONFIG_KEYS:
                known = ", ".join(sorted(CONFIG_KEYS))
                raise ParseError(key_tok.line, key_tok.col,
                                 f"unknown config key {key_tok.text!r} "
                                 f"(known: {known})")
            if key_tok.text in config:
                raise ParseError(key_tok.line, key_tok.col,
                                 f"duplicate config key {key_tok.text!r}")
            val_tok = line.peek()
            if val_tok is None:
                raise ParseError(line.lineno, line._end_col(),
                                 "expected a config value, found end of line")
            line.pos += 1
            line.done()
            config[key_tok.text] = _config_value(key_tok.text, val_tok)
        else:
            raise ParseError(head.line, head.col,
                             "expected 'bracket', 'subalgebra', 'functional' "
                             f"or 'config', found {head.text!r}")

    rows = tuple(tuple(r) for r in (sub_rows or []))
    if functional is not None:
        vals, head = functional
        if len(vals) != len(rows):
            raise ParseError(head.line, head.col,
                             f"functional has {len(vals)} values for "
                             f"{len(rows)} generators")
        f_vals = vals
    else:
        f_vals = (Fraction(0),) * len(rows)

    algebra = LieAlgebra(
        name=name, basis_names=tuple(basis),
        c=tuple(tuple(tuple(row) for row in plane) for plane in table))
    return ProblemFile(name=name, algebra=algebra, subalgebra_rows=rows,
                       functional_vals=f_vals, config=config)


def _config_value(key: str, tok: Token):
    want = CONFIG_KEYS[key]
    if want is bool:
        if tok.kind == "ID" and tok.text in ("true", "false"):
            return tok.text == "true"
        raise ParseError(tok.line, tok.col,
                         f"expected 'true' or 'false', found {tok.text!r}")
    if tok.kind != "RATIONAL" or "/" in tok.text:
        raise ParseError(tok.line, tok.col,
                         f"expected an integer, found {tok.text!r}")
    return int(tok.text)


def _format_rational(q: Fraction) -> str:
    return str(q)


def _format_combo(vec, basis_names) -> str:
    parts = []
    for k, coeff in enumerate(vec):
        if coeff == 0:
            continue
        if coeff == 1:
            parts.append(basis_names[k])
        else:
            parts.append(f"{_format_rational(coeff)} * {basis_names[k]}")
    return " + ".join(parts) if parts else f"0 * {basis_names[0]}"


def serialize(pf: ProblemFile) -> str:
    """Canonical text form; parse(serialize(pf)) == pf."""
    L = pf.algebra
    out = [f"algebra {pf.name}", f"dim {L.dim}",
           "basis " + " ".join(L.basis_names)]
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            if any(x != 0 for x in L.c[i][j]):
                combo = _format_combo(L.c[i][j], L.basis_names)
                out.append(f"bracket {L.basis_names[i]} "
                           f"{L.basis_names[j]} = {combo}")
    if pf.subalgebra_rows:
        gens = "; ".join(_format_combo(row, L.basis_names)
                         for row in pf.subalgebra_rows)
        out.append(f"subalgebra {gens}")
        out.append("functional " + ", ".join(_format_rational(v)
                                             for v in pf.functional_vals))
    for key in sorted(pf.config):
        value = pf.config[key]
        text = ("true" if value else "false") if isinstance(value, bool) \
            else str(value)
        out.append(f"config {key} {text}")
    return "\n".join(out) + "\n"


def parse_rational_list(text: str) -> tuple[Fraction, ...]:
    """Comma-separated rationals, e.g. '1,-2/3,0' (used for --point)."""
    items = [piece.strip() for piece in text.split(",")]
    out = []
    for piece in items:
        if not re.fullmatch(r"-?\d+(?:/\d+)?", piece or ""):
            raise ValueError(f"not a rational: {piece!r}")
        if "/" in piece:
            num, den = piece.split("/")
            if int(den) == 0:
                raise ValueError(f"zero denominator: {piece!r}")
            out.append(Fraction(int(num), int(den)))
        else:
            out.append(Fraction(int(piece)))
    return tuple(out)
