"""System files, point strings and result documents.

A system file starts with a variable declaration and lists one generator per
line::

    vars: x1 x2
    x1^2 + x2^2 - 4
    (x1 - 1)^2

Expressions use ``+ - * ^`` and parentheses.  Numbers are integers or
decimals; a number with an ``i`` suffix is imaginary, so ``(0+1i)`` is the
imaginary unit.  Multiplication must be written out.  Blank lines and lines
starting with ``#`` are ignored.
"""

import json
import re

import numpy as np

from .dual import PolynomialSystem
from .errors import ParseError
from .poly import Polynomial

MAX_EXPONENT = 2 ** 16

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?(?P<imag>i(?![A-Za-z0-9_]))?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)


def _tokenize(text, line):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
        if not m.group("ws"):
            kind = "num" if m.group("num") else "name" if m.group("name") else "op"
            out.append((kind, m.group(0), pos + 1))
        pos = m.end()
    out.append(("end", "", len(text) + 1))
    return out


class _ExprParser:
    # expr   := term (('+'|'-') term)*
    # term   := unary ('*' unary)*
    # unary  := ('+'|'-') unary | power
    # power  := atom ('^' integer)?
    # atom   := number | name | '(' expr ')'

    def __init__(self, text, variables, line):
        self.tokens = _tokenize(text, line)
        self.pos = 0
        self.vars = {v: i for i, v in enumerate(variables)}
        self.n = len(variables)
        self.line = line

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.line, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("num", "name") or tok[1] == "(":
                raise self.error("implicit multiplication is not allowed; write '*'")
            raise self.error(f"unexpected {tok[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[1] == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        if self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            p = self.unary()
            return -p if op == "-" else p
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num" or not tok[1].isdigit():
                raise self.error("exponent must be a non-negative integer", tok)
            k = int(tok[1])
            if k > MAX_EXPONENT:
                raise self.error(f"exponent {k} exceeds {MAX_EXPONENT}", tok)
            return base ** k
        return base

    def atom(self):
        tok = self.take()
        kind, text, _ = tok
        if kind == "num":
            if text.endswith("i"):
                return Polynomial.constant(complex(0, float(text[:-1])), self.n)
            return Polynomial.constant(float(text), self.n)
        if kind == "name":
            if text not in self.vars:
                raise self.error(f"unknown identifier {text!r}", tok)
            e = [0] * self.n
            e[self.vars[text]] = 1
            return Polynomial.monomial(tuple(e))
        if text == "(":
            p = self.expr()
            close = self.take()
            if close[1] != ")":
                if close[0] in ("num", "name") or close[1] == "(":
                    raise self.error("implicit multiplication is not allowed; write '*'", close)
                if close[0] == "end":
                    raise self.error("unexpected end of expression, expected ')'", close)
                raise self.error("expected ')'", close)
            return p
        if kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error(f"unexpected {text!r}", tok)


def parse_polynomial(text, variables, line=None):
    return _ExprParser(text, list(variables), line).parse()


def parse_system_with_names(text):
    """Parse a system file, returning ``(PolynomialSystem, variable names)``."""
    names = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if names is None:
            m = re.fullmatch(r"vars\s*:\s*(.*)", line)
            if not m:
                raise ParseError("expected a 'vars: x1 ... xn' header", lineno, 1)
            names = m.group(1).split()
            if not names:
                raise ParseError("no variables declared", lineno, 1)
            for v in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                    raise ParseError(f"bad variable name {v!r}", lineno, raw.find(v) + 1)
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable name", lineno, 1)
            continue
        p = parse_polynomial(raw, names, lineno)
        if p.is_zero():
            raise ParseError("the zero polynomial is not allowed as a generator", lineno, 1)
        gens.append(p)
    if names is None:
        raise ParseError("missing 'vars:' header")
    if not gens:
        raise ParseError("the system has no generators")
    return PolynomialSystem(tuple(gens)), names


def parse_system(text):
    return parse_system_with_names(text)[0]


def format_system(F, names=None):
    names = names or [f"x{i + 1}" for i in range(F.nvars)]
    lines = ["vars: " + " ".join(names)]
    lines.extend(f.to_string(names) for f in F)
    return "\n".join(lines) + "\n"


def parse_point(text):
    """Parse ``"1, 1.7320508"`` or ``"-1-3.4e-15i, 1+1e-14i"`` into a tuple of complex."""
    coords = []
    for i, part in enumerate(text.split(",")):
        s = re.sub(r"\s+", "", part)
        if not s:
            raise ParseError(f"empty coordinate at position {i + 1}")
        if re.search(r"[jJ]", s):
            raise ParseError(f"bad coordinate {part.strip()!r}; use 'i' for the imaginary unit")
        s = re.sub(r"(^|[+-])i$", r"\g<1>1i", s)
        try:
            c = complex(s.replace("i", "j"))
        except ValueError:
            raise ParseError(f"bad coordinate {part.strip()!r}") from None
        if not (np.isfinite(c.real) and np.isfinite(c.imag)):
            raise ParseError(f"non-finite coordinate {part.strip()!r}")
        coords.append(c)
    return tuple(coords)


def _round(x):
    # adding 0.0 folds -0.0 into 0.0
    return float(format(x, ".9g")) + 0.0


def complex_pair(c):
    return [_round(c.real), _round(c.imag)]


def canonical_phase(vectors):
    """Rescale each column so its largest-modulus entry is real and positive."""
    V = np.array(vectors, dtype=complex, copy=True)
    for j in range(V.shape[1]):
        col = V[:, j]
        if not col.size:
            continue
        k = int(np.argmax(np.abs(col)))
        if col[k] != 0:
            V[:, j] = col * (abs(col[k]) / col[k])
    return V


def _normalize(obj):
    if isinstance(obj, float):
        return _round(obj)
    if isinstance(obj, complex):
        return complex_pair(obj)
    if isinstance(obj, dict):
        return {str(k): _normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_normalize(v) for v in obj]
    return obj


def dump_json(doc):
    """Deterministic JSON: sorted keys and floats rounded to 9 significant digits."""
    return json.dumps(_normalize(doc), sort_keys=True, indent=2) + "\n"


def dump_text(doc, indent=0):
    doc = _normalize(doc)
    lines = []
    pad = "  " * indent
    for k in sorted(doc):
        v = doc[k]
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(dump_text(v, indent + 1).rstrip("\n"))
        else:
            lines.append(f"{pad}{k}: {json.dumps(v)}")
    return "\n".join(lines) + "\n"
