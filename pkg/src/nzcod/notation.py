"""Compact text notation for design matrices.

File layout (UTF-8, ``#`` starts a comment):

    n k global_scale
    <row of n entry tokens>
    ... n rows ...

``global_scale`` is ``1``, ``s`` (1/sqrt(2)) or ``s^E`` (sqrt(2)**-E) and
multiplies every entry.  Entry tokens:

    0                     zero entry
    x3  s2  -x2*  jx1*    variable atoms (x- or s-named), sign/j/conjugate
    x{1,2}  -x{2,1}*      coordinate-interleaved atoms
    sx5  s^3x1  x5/2      sqrt(2)-power scales, prefix or /2 suffix
    (s1-s1*-s2-s2*)/2     parenthesized sums with per-term sign/j/scale
    -(s1+s1*+s2-s2*)/2    ... optionally negated as a whole

A scale prefix may also stand as its own word (``s x5``); everything else
is whitespace-separated, one matrix row per line.
"""

from __future__ import annotations

import re
from typing import Optional

from .design import DesignMatrix
from .dyadic import ComplexCoefficient, DyadicRootTwo
from .ringmat import RingMatrix
from .forms import (
    EntryForm,
    Part,
    RealCoordinate,
    ScaledInterleaved,
    ScaledVariable,
    Zero,
    classify_entry,
)


class NotationError(ValueError):
    def __init__(self, message: str, row: Optional[int] = None,
                 col: Optional[int] = None) -> None:
        where = ""
        if row is not None:
            where = f" at row {row + 1}" + (f", entry {col + 1}" if col is not None else "")
        super().__init__(message + where)
        self.row = row
        self.col = col


_SCALE_RE = re.compile(r"s\^(-?\d+)")
_VAR_RE = re.compile(r"[xs](\d+)")
_INTER_RE = re.compile(r"x\{(\d+),(\d+)\}")


class _EntryScanner:
    """Single-entry recursive-descent scanner over one glued token."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, pattern: re.Pattern) -> Optional[re.Match]:
        m = pattern.match(self.text, self.pos)
        if m:
            self.pos = m.end()
        return m

    def literal(self, s: str) -> bool:
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def fail(self, message: str):
        raise NotationError(f"{message} in token {self.text!r} (offset {self.pos})")

    # coefficient prefixes: '-', 'j', 's', 's^E' in any order
    def prefixes(self) -> ComplexCoefficient:
        coeff = ComplexCoefficient.real(DyadicRootTwo(1))
        while True:
            ch = self.peek()
            if ch == "-":
                self.pos += 1
                coeff = -coeff
            elif ch == "j":
                self.pos += 1
                coeff = coeff.mul_j()
            elif ch == "s":
                nxt = self.text[self.pos + 1: self.pos + 2]
                if nxt.isdigit():
                    return coeff  # variable atom like s3
                m = self.take(_SCALE_RE)
                if m:
                    coeff = coeff * ComplexCoefficient.real(
                        DyadicRootTwo.sqrt2_power(-int(m.group(1))))
                else:
                    self.pos += 1
                    coeff = coeff * ComplexCoefficient.real(
                        DyadicRootTwo.sqrt2_power(-1))
            else:
                return coeff

    def atom(self) -> EntryForm:
        m = self.take(_INTER_RE)
        if m:
            i, k = int(m.group(1)), int(m.group(2))
            conj = self.literal("*")
            if i < 1 or k < 1:
                self.fail("variable indices are 1-based")
            return EntryForm.interleaved(i, k, conj=conj)
        m = self.take(_VAR_RE)
        if m:
            conj = self.literal("*")
            if int(m.group(1)) < 1:
                self.fail("variable indices are 1-based")
            return EntryForm.variable(int(m.group(1)), conj=conj)
        self.fail("expected a variable or interleaved atom")

    def combo(self) -> EntryForm:
        form = EntryForm.zero()
        sign = 1
        while True:
            coeff = self.prefixes()
            if sign < 0:
                coeff = -coeff
            form = form + self.atom().scaled(coeff)
            ch = self.peek()
            if ch == "+":
                sign = 1
                self.pos += 1
            elif ch == "-":
                sign = -1
                self.pos += 1
            elif ch == ")":
                self.pos += 1
                return form
            else:
                self.fail("expected '+', '-' or ')'")

    def entry(self) -> EntryForm:
        coeff = self.prefixes()
        if self.peek() == "0":
            self.pos += 1
            if self.pos != len(self.text) or coeff != ComplexCoefficient.real(DyadicRootTwo(1)):
                self.fail("the zero entry takes no decoration")
            return EntryForm.zero()
        if self.literal("("):
            form = self.combo()
        else:
            form = self.atom()
        if self.literal("/2"):
            coeff = coeff * ComplexCoefficient.real(DyadicRootTwo(1, 0, 1))
        if self.pos != len(self.text):
            self.fail("trailing characters")
        return form.scaled(coeff)


_PREFIX_ONLY_RE = re.compile(r"-?(s(\^-?\d+)?)?j?$")


def _parse_row(words: list[str], row: int, n: int, k: int) -> list[EntryForm]:
    entries: list[EntryForm] = []
    queue = list(words)
    while queue:
        word = queue.pop(0)
        # a standalone scale/sign prefix glues onto the following word
        while queue and _PREFIX_ONLY_RE.fullmatch(word):
            word += queue.pop(0)
        try:
            form = _EntryScanner(word).entry()
        except NotationError as exc:
            raise NotationError(str(exc), row=row, col=len(entries)) from None
        if form.max_var() > k:
            raise NotationError(
                f"variable x{form.max_var()} exceeds the declared count {k}",
                row=row, col=len(entries))
        entries.append(form)
    if len(entries) != n:
        raise NotationError(f"expected {n} entries, found {len(entries)}", row=row)
    return entries


def _parse_scale(token: str) -> DyadicRootTwo:
    if token == "1":
        return DyadicRootTwo(1)
    if token == "s":
        return DyadicRootTwo.sqrt2_power(-1)
    m = _SCALE_RE.fullmatch(token)
    if m:
        return DyadicRootTwo.sqrt2_power(-int(m.group(1)))
    raise NotationError(f"bad global scale {token!r}")


def parse_design(text: str) -> DesignMatrix:
    """Parse a full design file (header line plus n matrix rows)."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise NotationError("empty design text")
    header = lines[0].split()
    if len(header) != 3:
        raise NotationError("header must be 'n k global_scale'")
    n, k = int(header[0]), int(header[1])
    scale = ComplexCoefficient.real(_parse_scale(header[2]))
    if len(lines) - 1 != n:
        raise NotationError(f"expected {n} matrix rows, found {len(lines) - 1}")
    grid = []
    for row, line in enumerate(lines[1:]):
        entries = _parse_row(line.split(), row, n, k)
        grid.append([form.scaled(scale) for form in entries])
    return DesignMatrix(n, k, grid)


def parse_matrix(text: str, n: int, k: int,
                 scale: DyadicRootTwo = DyadicRootTwo(1)) -> DesignMatrix:
    """Parse bare matrix rows (no header) with an explicit shape."""
    header = f"{n} {k} 1\n"
    d = parse_design(header + text)
    if scale != DyadicRootTwo(1):
        cc = ComplexCoefficient.real(scale)
        grid = [[form.scaled(cc) for form in row] for row in d.entries]
        return DesignMatrix(n, k, grid)
    return d


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------


def _scale_prefix(value: DyadicRootTwo) -> str:
    """Render +-sqrt(2)**(-p) as the token prefix '-', 's', 's^p'."""
    sp = value.as_signed_sqrt2_power()
    if sp is None:
        raise NotationError(f"coefficient {value} is outside the grammar")
    sign, q = sp
    p = -q
    out = "-" if sign < 0 else ""
    if p == 1:
        out += "s"
    elif p != 0:
        out += f"s^{p}"
    return out


def _coeff_terms(coeff: ComplexCoefficient, base: str) -> list[str]:
    """Render coeff * base as one or two signed tokens (real and j parts)."""
    out = []
    if not coeff.re.is_zero:
        out.append(_scale_prefix(coeff.re) + base)
    if not coeff.im.is_zero:
        prefix = _scale_prefix(coeff.im)
        body = "j" + base
        out.append(prefix + body if prefix != "-" else "-" + body)
    return out


def format_entry(form: EntryForm) -> str:
    cls = classify_entry(form)
    if isinstance(cls, Zero):
        return "0"
    if isinstance(cls, ScaledVariable):
        return _scale_prefix(cls.coeff) + f"x{cls.k}" + ("*" if cls.conjugated else "")
    if isinstance(cls, ScaledInterleaved):
        return (_scale_prefix(cls.coeff) + f"x{{{cls.i},{cls.k}}}"
                + ("*" if cls.conjugated else ""))
    # General linear combination: resolve per-variable coefficients of x_k
    # and conj(x_k) from the real-coordinate terms.
    half = ComplexCoefficient.real(DyadicRootTwo(1, 0, 1))
    tokens: list[str] = []
    for var in sorted({c.var for c in form.terms}):
        ci = form.coefficient(RealCoordinate(var, Part.I))
        cq = form.coefficient(RealCoordinate(var, Part.Q))
        minus_j_cq = -cq.mul_j()
        plain = (ci + minus_j_cq) * half
        conj = (ci - minus_j_cq) * half
        tokens.extend(_coeff_terms(plain, f"x{var}"))
        tokens.extend(_coeff_terms(conj, f"x{var}*"))
    if len(tokens) == 1:
        return tokens[0]
    joined = tokens[0]
    for tok in tokens[1:]:
        joined += tok if tok.startswith("-") else "+" + tok
    return f"({joined})"


def print_design(d: DesignMatrix) -> str:
    """Serialize with global scale 1; parse(print_design(d)) == d."""
    lines = [f"{d.n} {d.k} 1"]
    for row in d.entries:
        lines.append(" ".join(format_entry(form) for form in row))
    return "\n".join(lines) + "\n"


_CONST_TOKENS = {
    "0": DyadicRootTwo(0),
    "1": DyadicRootTwo(1),
    "-1": DyadicRootTwo(-1),
    "r2": DyadicRootTwo(0, 1, 0),
    "-r2": DyadicRootTwo(0, -1, 0),
}


def parse_constant(text: str) -> RingMatrix:
    """Parse a constant matrix file: header 'rows cols scale', then rows of
    tokens from {0, 1, -1, r2, -r2}, all multiplied by the global scale."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise NotationError("empty constant-matrix text")
    header = lines[0].split()
    if len(header) != 3:
        raise NotationError("header must be 'rows cols global_scale'")
    rows, cols = int(header[0]), int(header[1])
    scale = _parse_scale(header[2])
    if len(lines) - 1 != rows:
        raise NotationError(f"expected {rows} rows, found {len(lines) - 1}")
    grid = []
    for r, line in enumerate(lines[1:]):
        tokens = line.split()
        if len(tokens) != cols:
            raise NotationError(f"expected {cols} entries", row=r)
        row = []
        for c, tok in enumerate(tokens):
            if tok not in _CONST_TOKENS:
                raise NotationError(f"bad constant token {tok!r}", row=r, col=c)
            row.append(ComplexCoefficient.real(_CONST_TOKENS[tok] * scale))
        grid.append(row)
    return RingMatrix.from_coefficients(grid)


def format_grid(d: DesignMatrix) -> str:
    """Aligned human-readable grid of canonical entry tokens."""
    cells = [[format_entry(form) for form in row] for row in d.entries]
    widths = [max(len(cells[i][j]) for i in range(d.n)) for j in range(d.n)]
    return "\n".join(
        "  ".join(cell.rjust(widths[j]) for j, cell in enumerate(row))
        for row in cells
    ) + "\n"
