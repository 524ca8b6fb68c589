"""The ``.wsc`` weighted-complex text format.

::

    wsc v1
    # comment
    vertex a f=1 g=1/2
    vertex b f=-3 g=0.25
    simplex a b

The header must be the first non-blank, non-comment line.  Vertices are
declared before use and their declaration order is the vertex order.
``simplex`` lines list generators; the face closure is taken.  Weights are
integers, ``p/q`` fractions, or finite decimals, all read exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .chains import WeightPair
from .complex import SimplicialComplex, build_complex
from .errors import DuplicateVertex, UnknownVertex, UnsupportedVersion, WscSyntaxError

SUPPORTED_VERSIONS = ("v1",)

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
RATIONAL_RE = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?\Z")
DECIMAL_RE = re.compile(r"-?[0-9]+\.[0-9]+\Z")


@dataclass
class WscDocument:
    version: str = "v1"
    vertices: list[tuple[str, Fraction, Fraction]] = field(default_factory=list)
    simplices: list[tuple[str, ...]] = field(default_factory=list)

    def to_complex(self) -> tuple[SimplicialComplex, WeightPair]:
        names = [v[0] for v in self.vertices]
        K = build_complex(names, self.simplices)
        return K, WeightPair(tuple(v[1] for v in self.vertices),
                             tuple(v[2] for v in self.vertices))


def parse_rational(text: str) -> Fraction:
    if RATIONAL_RE.match(text):
        return Fraction(text)
    if DECIMAL_RE.match(text):
        # Fraction parses decimal strings exactly, without going through float
        return Fraction(text)
    raise ValueError(f"not a rational literal: {text!r}")


def _tokens(line: str):
    """Whitespace-separated tokens with their 1-based columns."""
    for m in re.finditer(r"\S+", line):
        yield m.group(), m.start() + 1


def parse_document(text: str | bytes) -> WscDocument:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise WscSyntaxError(f"input is not valid UTF-8 (byte {exc.start})") from None
    doc = WscDocument()
    seen_header = False
    declared: dict[str, int] = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw[:-1] if raw.endswith("\r") else raw
        if "#" in line:
            line = line[:line.index("#")]
        toks = list(_tokens(line))
        if not toks:
            continue
        (kw, col), rest = toks[0], toks[1:]
        if not seen_header:
            if kw != "wsc":
                raise WscSyntaxError("expected header 'wsc v1'", lineno, col)
            if len(rest) != 1:
                raise WscSyntaxError("header takes exactly one version tag", lineno, col)
            version, vcol = rest[0]
            if version not in SUPPORTED_VERSIONS:
                raise UnsupportedVersion(f"unsupported version {version!r}", lineno, vcol)
            doc.version = version
            seen_header = True
        elif kw == "vertex":
            doc.vertices.append(_vertex_line(rest, declared, lineno, col))
            declared[doc.vertices[-1][0]] = lineno
        elif kw == "simplex":
            if not rest:
                raise WscSyntaxError("simplex needs at least one vertex", lineno, col)
            names = []
            for name, ncol in rest:
                if not NAME_RE.match(name):
                    raise WscSyntaxError(f"bad vertex name {name!r}", lineno, ncol)
                if name not in declared:
                    raise UnknownVertex(f"undeclared vertex {name!r}", lineno, ncol)
                if name in names:
                    raise DuplicateVertex(f"vertex {name!r} repeated in simplex", lineno, ncol)
                names.append(name)
            doc.simplices.append(tuple(names))
        else:
            raise WscSyntaxError(f"unknown directive {kw!r}", lineno, col)
    if not seen_header:
        raise WscSyntaxError("missing header 'wsc v1'", 1, 1)
    return doc


def _vertex_line(rest, declared, lineno, col):
    if not rest:
        raise WscSyntaxError("vertex needs a name", lineno, col)
    name, ncol = rest[0]
    if not NAME_RE.match(name):
        raise WscSyntaxError(f"bad vertex name {name!r}", lineno, ncol)
    if name in declared:
        raise DuplicateVertex(f"vertex {name!r} already declared on line {declared[name]}",
                              lineno, ncol)
    weights = {}
    for tok, tcol in rest[1:]:
        key, eq, value = tok.partition("=")
        if not eq or key not in ("f", "g"):
            raise WscSyntaxError(f"expected f=<rational> or g=<rational>, got {tok!r}",
                                 lineno, tcol)
        if key in weights:
            raise WscSyntaxError(f"weight {key} given twice", lineno, tcol)
        try:
            weights[key] = parse_rational(value)
        except ValueError:
            raise WscSyntaxError(f"bad rational {value!r}", lineno, tcol + 2) from None
    for key in ("f", "g"):
        if key not in weights:
            raise WscSyntaxError(f"vertex {name!r} is missing weight {key}", lineno, ncol)
    return name, weights["f"], weights["g"]


def parse_wsc(text: str | bytes) -> tuple[SimplicialComplex, WeightPair]:
    return parse_document(text).to_complex()


def serialize_wsc(K: SimplicialComplex, weights: WeightPair) -> str:
    """Canonical text: vertices in order, then maximal faces sorted by size and rank."""
    lines = ["wsc v1"]
    for i, name in enumerate(K.vertices):
        lines.append(f"vertex {name} f={weights.f[i]} g={weights.g[i]}")
    for s in K.maximal_faces():
        lines.append("simplex " + " ".join(K.names(s)))
    return "\n".join(lines) + "\n"
