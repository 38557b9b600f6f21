"""Input front-end: defining polynomials and JSON normal matrices.

Two formats are accepted, distinguished by the first non-space character:

* a product of linear forms, factors juxtaposed or '*'-separated, e.g.
  ``xyz(x+y)(x+z)(y+z)`` or ``f = (x+y)(x-y)(x+z)(x-z)(y+z)(y-z)``.
  Variables are a letter followed by optional digits; coefficients are
  integers or ``p/q``.  Coordinates follow first-appearance order unless a
  bracketed header pins them, as in ``[x,y,z] y(y-z)(x-y)``.
* a JSON object ``{"variables": [...], "normals": [[...], ...],
  "labels": [...]}`` with integer or "p/q" string entries; only
  ``normals`` is required.

Every factor must be a nonzero linear form through the origin, and no two
factors may cut the same hyperplane; ``ParseError.kind`` says which rule
was violated.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .arrangement import Arrangement, _proportional, make_arrangement
from .errors import ParseError

_VAR_RE = re.compile(r"[A-Za-z][0-9]*\Z")
_HEADER_RE = re.compile(r"\s*\[([^\]]*)\]")
_NAME_EQ_RE = re.compile(r"\s*[A-Za-z][0-9]*\s*=")
_TOKEN_RE = re.compile(
    r"(?P<skip>[\s*]+)|(?P<var>[A-Za-z][0-9]*)|(?P<int>[0-9]+)|(?P<op>[-+/^()])"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError("syntax", "unexpected character %r" % text[pos])
        pos = m.end()
        kind = m.lastgroup
        if kind != "skip":
            out.append((kind, m.group()))
    return out


class _Tokens:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        if self.i < len(self.toks):
            return self.toks[self.i]
        return None, None

    def take(self):
        t = self.peek()
        self.i += 1
        return t


def _parse_number(ts: _Tokens) -> Fraction:
    kind, val = ts.take()
    if kind != "int":
        raise ParseError("syntax", "expected an integer")
    num = int(val)
    kind, val = ts.peek()
    if kind == "op" and val == "/":
        ts.take()
        kind, val = ts.take()
        if kind != "int":
            raise ParseError("syntax", "expected a denominator after '/'")
        den = int(val)
        if den == 0:
            raise ParseError("syntax", "zero denominator")
        return Fraction(num, den)
    return Fraction(num)


def _parse_linear(ts: _Tokens) -> tuple[dict[str, Fraction], Fraction]:
    """Sum of signed terms; returns (coefficients by variable, constant)."""
    coeffs: dict[str, Fraction] = {}
    const = Fraction(0)
    while True:
        sign = 1
        kind, val = ts.peek()
        if kind == "op" and val in "+-":
            ts.take()
            sign = -1 if val == "-" else 1
            kind, val = ts.peek()
        coeff = None
        if kind == "int":
            coeff = _parse_number(ts)
            kind, val = ts.peek()
        if kind == "var":
            ts.take()
            c = Fraction(1) if coeff is None else coeff
            coeffs[val] = coeffs.get(val, Fraction(0)) + sign * c
        elif coeff is not None:
            const += sign * coeff
        else:
            raise ParseError("syntax", "expected a coefficient or variable")
        kind, val = ts.peek()
        if not (kind == "op" and val in "+-"):
            return coeffs, const


def _parse_factor(ts: _Tokens) -> tuple[dict[str, Fraction], Fraction]:
    kind, val = ts.peek()
    if kind == "var":
        ts.take()
        return {val: Fraction(1)}, Fraction(0)
    if kind == "int":
        return {}, _parse_number(ts)
    if kind == "op" and val == "(":
        ts.take()
        coeffs, const = _parse_linear(ts)
        kind, val = ts.take()
        if not (kind == "op" and val == ")"):
            raise ParseError("syntax", "expected ')'")
        return coeffs, const
    ts.take()
    raise ParseError("syntax", "unexpected token %r" % (val,))


def render_linear_form(terms) -> str:
    """Render (name, coefficient) pairs as a compact linear form."""
    parts = []
    for name, c in terms:
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        a = abs(c)
        if a == 1:
            body = name
        elif a.denominator == 1:
            body = "%d%s" % (a.numerator, name)
        else:
            body = "%d/%d%s" % (a.numerator, a.denominator, name)
        parts.append(sign + body)
    return "".join(parts) if parts else "0"


def _parse_polynomial(text: str) -> Arrangement:
    varorder = None
    m = _HEADER_RE.match(text)
    if m:
        names = [s.strip() for s in m.group(1).split(",")]
        if not names or any(not _VAR_RE.match(s) for s in names):
            raise ParseError("syntax", "bad variable header %r" % m.group(0))
        if len(set(names)) != len(names):
            raise ParseError("syntax", "repeated variable in header")
        varorder = names
        text = text[m.end() :]
    m = _NAME_EQ_RE.match(text)
    if m:
        text = text[m.end() :]
    ts = _Tokens(_tokenize(text))
    factors: list[dict[str, Fraction]] = []
    while ts.peek()[0] is not None:
        coeffs, const = _parse_factor(ts)
        coeffs = {k: v for k, v in coeffs.items() if v}
        label = render_linear_form(coeffs.items())
        if const:
            if coeffs:
                sgn = "+" if const > 0 else ""
                msg = "factor %s%s%s is affine, not linear" % (label, sgn, const)
            else:
                msg = "factor %s is constant, not linear" % const
            raise ParseError("nonlinear", msg)
        if not coeffs:
            raise ParseError("zero_form", "a factor is identically zero")
        kind, val = ts.peek()
        power = 1
        if kind == "op" and val == "^":
            ts.take()
            kind, val = ts.take()
            if kind != "int" or int(val) < 1:
                raise ParseError("syntax", "exponent must be a positive integer")
            power = int(val)
        if power > 1:
            raise ParseError(
                "duplicate",
                "exponent %d repeats the hyperplane %s" % (power, label),
            )
        factors.append(coeffs)
    if not factors:
        raise ParseError("syntax", "no factors found")
    if varorder is None:
        varorder = []
        for coeffs in factors:
            for name in coeffs:
                if name not in varorder:
                    varorder.append(name)
    else:
        known = set(varorder)
        for coeffs in factors:
            for name in coeffs:
                if name not in known:
                    raise ParseError(
                        "syntax", "variable %r missing from header" % name
                    )
    rows = []
    labels = []
    for coeffs in factors:
        rows.append(tuple(coeffs.get(v, Fraction(0)) for v in varorder))
        labels.append(render_linear_form(coeffs.items()))
    _check_duplicates(rows, labels)
    return make_arrangement(rows, labels)


def _check_duplicates(rows, labels) -> None:
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if _proportional(rows[i], rows[j]):
                raise ParseError(
                    "duplicate",
                    "factors %s and %s cut the same hyperplane"
                    % (labels[i], labels[j]),
                )


def _json_entry(v) -> Fraction:
    if isinstance(v, bool):
        raise ParseError("syntax", "boolean is not a rational entry")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise ParseError("syntax", "bad rational entry %r" % v) from None
    raise ParseError("syntax", "entries must be integers or 'p/q' strings")


def _parse_json(text: str) -> Arrangement:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError("syntax", "invalid JSON: %s" % e) from None
    if not isinstance(data, dict):
        raise ParseError("syntax", "top level must be a JSON object")
    if "normals" not in data:
        raise ParseError("syntax", "missing 'normals'")
    raw = data["normals"]
    if not isinstance(raw, list) or not raw:
        raise ParseError("syntax", "'normals' must be a nonempty list of rows")
    rows = []
    for row in raw:
        if not isinstance(row, list):
            raise ParseError("syntax", "each normal must be a list")
        rows.append(tuple(_json_entry(v) for v in row))
    width = len(rows[0])
    if any(len(r) != width for r in rows) or width == 0:
        raise ParseError("syntax", "normals must form a nonempty rectangle")
    variables = data.get("variables")
    if variables is not None:
        if (
            not isinstance(variables, list)
            or len(variables) != width
            or any(not isinstance(s, str) for s in variables)
        ):
            raise ParseError("syntax", "'variables' must name every column")
    labels = data.get("labels")
    if labels is not None:
        if (
            not isinstance(labels, list)
            or len(labels) != len(rows)
            or any(not isinstance(s, str) for s in labels)
        ):
            raise ParseError("syntax", "'labels' must name every hyperplane")
    for i, row in enumerate(rows):
        if not any(row):
            raise ParseError("zero_form", "normal %d is the zero vector" % i)
    names = labels if labels is not None else ["H%d" % i for i in range(len(rows))]
    _check_duplicates(rows, names)
    return make_arrangement(rows, labels)


def parse_arrangement(text: str) -> Arrangement:
    """Parse either input format; see the module docstring."""
    s = text.strip()
    if not s:
        raise ParseError("syntax", "empty input")
    if s.startswith("{"):
        return _parse_json(s)
    return _parse_polynomial(s)
