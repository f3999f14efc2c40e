"""Plain-text instance files: one ring, one module, named submodules/elements.

The format is line-oriented and whitespace-insensitive within lines::

    # comment
    ring Z/4
    module rank=2 relations=[(2,0),(0,2)]
    submodule N gens=[(1,0)]
    element m = (0,2)

Ring descriptors are ``Z/n``, ``GF(q) poly=[c0,...,1]`` (ascending
coefficients, monic) and ``product(D1, D2, ...)``.  Scalars are canonical
integer encodings; over ``GF(p^k)`` a scalar may also be written as a
coefficient list ``[c0,c1,...]``.  Parse errors carry line and column.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .modules import (
    DEFAULT_ELEMENT_BOUND,
    ModuleElement,
    ModulePresentation,
    Submodule,
    presented_module,
    submodule_generate,
)
from .rings import FiniteRing, RingConstructionError, make_gf, make_product, make_zn


class ParseError(ValueError):
    """Malformed instance text, with 1-based line/column location."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass
class InstanceFile:
    """A parsed and constructed instance: ring, module, named declarations."""

    ring: FiniteRing
    module: ModulePresentation
    submodules: dict[str, Submodule] = field(default_factory=dict)
    elements: dict[str, ModuleElement] = field(default_factory=dict)


class _Cursor:
    """Single-line character cursor with located errors."""

    def __init__(self, text: str, line_no: int):
        self.text = text
        self.line_no = line_no
        self.pos = 0

    def error(self, message: str, col: int | None = None):
        raise ParseError(message, self.line_no, (self.pos if col is None else col) + 1)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    @property
    def eol(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, token: str):
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            self.error(f"expected {token!r}")
        self.pos += len(token)

    def try_take(self, token: str) -> bool:
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        if self.pos == start:
            self.error("expected a name")
        return self.text[start:self.pos]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start:self.pos])


# -- ring descriptors ------------------------------------------------------------


def _parse_descriptor(cur: _Cursor) -> FiniteRing:
    cur.skip_ws()
    start = cur.pos
    try:
        if cur.try_take("Z/"):
            return make_zn(cur.integer())
        if cur.try_take("GF("):
            q = cur.integer()
            cur.take(")")
            p = _smallest_prime_factor(q)
            k = 0
            qq = q
            while qq > 1 and qq % p == 0:
                qq //= p
                k += 1
            if qq != 1 or k == 0:
                cur.error(f"{q} is not a prime power", start)
            if cur.try_take("poly="):
                coeffs = _parse_int_list(cur)
            elif k == 1:
                coeffs = [0, 1]
            else:
                cur.error(f"GF({q}) needs an explicit poly=[...] reduction polynomial",
                          start)
            return make_gf(p, k, coeffs)
        if cur.try_take("product("):
            factors = [_parse_descriptor(cur)]
            while cur.try_take(","):
                factors.append(_parse_descriptor(cur))
            cur.take(")")
            return make_product(factors)
    except RingConstructionError as exc:
        cur.error(str(exc), start)
    cur.error("unknown ring descriptor (expected Z/n, GF(q), or product(...))", start)


def _smallest_prime_factor(q: int) -> int:
    d = 2
    while d * d <= q:
        if q % d == 0:
            return d
        d += 1
    return q


def _parse_int_list(cur: _Cursor) -> list[int]:
    cur.take("[")
    out = []
    if not cur.try_take("]"):
        out.append(cur.integer())
        while cur.try_take(","):
            out.append(cur.integer())
        cur.take("]")
    return out


def parse_ring_descriptor(text: str) -> FiniteRing:
    """Parse a standalone ring descriptor string (used by corpus specs too)."""
    cur = _Cursor(text, 1)
    ring = _parse_descriptor(cur)
    if not cur.eol:
        cur.error("trailing text after ring descriptor")
    return ring


# -- vectors -----------------------------------------------------------------------


def _parse_scalar(cur: _Cursor, ring: FiniteRing) -> int:
    cur.skip_ws()
    start = cur.pos
    if cur.peek() == "[":
        coeffs = _parse_int_list(cur)
        p = getattr(ring, "char_p", None)
        k = getattr(ring, "degree_k", None)
        if p is None:
            cur.error("coefficient-list scalars are only defined over GF rings", start)
        if len(coeffs) > k:
            cur.error(f"coefficient list longer than field degree {k}", start)
        if any(not 0 <= c < p for c in coeffs):
            cur.error(f"coefficients must lie in 0..{p - 1}", start)
        code = 0
        for c in reversed(coeffs):
            code = code * p + c
        return code
    code = cur.integer()
    if not 0 <= code < ring.size:
        cur.error(f"scalar {code} out of range for {ring.descriptor} "
                  f"(valid encodings are 0..{ring.size - 1})", start)
    return code


def _parse_vector(cur: _Cursor, ring: FiniteRing, rank: int) -> tuple:
    cur.skip_ws()
    start = cur.pos
    cur.take("(")
    comps: list[int] = []
    if not cur.try_take(")"):
        comps.append(_parse_scalar(cur, ring))
        while cur.try_take(","):
            comps.append(_parse_scalar(cur, ring))
        cur.take(")")
    if len(comps) != rank:
        cur.error(f"vector has {len(comps)} components, module rank is {rank}", start)
    return tuple(comps)


def _parse_vector_list(cur: _Cursor, ring: FiniteRing, rank: int) -> list[tuple]:
    cur.take("[")
    out = []
    if not cur.try_take("]"):
        out.append(_parse_vector(cur, ring, rank))
        while cur.try_take(","):
            out.append(_parse_vector(cur, ring, rank))
        cur.take("]")
    return out


# -- instance files ----------------------------------------------------------------


def parse_instance(text: str,
                   element_bound: int = DEFAULT_ELEMENT_BOUND) -> InstanceFile:
    """Parse and build an instance file; malformed input raises :class:`ParseError`."""
    ring: FiniteRing | None = None
    module: ModulePresentation | None = None
    submodules: dict[str, Submodule] = {}
    elements: dict[str, ModuleElement] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        cur = _Cursor(line, line_no)
        keyword = cur.word()
        if keyword == "ring":
            if ring is not None:
                cur.error("duplicate ring line")
            ring = _parse_descriptor(cur)
        elif keyword == "module":
            if ring is None:
                cur.error("module line before ring line")
            if module is not None:
                cur.error("duplicate module line")
            cur.take("rank")
            cur.take("=")
            rank = cur.integer()
            cur.take("relations")
            cur.take("=")
            relations = _parse_vector_list(cur, ring, rank)
            module = presented_module(ring, rank, relations, element_bound)
        elif keyword in ("submodule", "element"):
            if module is None:
                cur.error(f"{keyword} line before module line")
            cur.skip_ws()
            name_col = cur.pos
            name = cur.word()
            if name in submodules or name in elements:
                cur.error(f"duplicate name {name!r}", name_col)
            if keyword == "submodule":
                cur.take("gens")
                cur.take("=")
                gens = _parse_vector_list(cur, ring, module.rank)
                submodules[name] = submodule_generate(module, gens)
            else:
                cur.take("=")
                vec = _parse_vector(cur, ring, module.rank)
                elements[name] = module.element(vec)
        else:
            cur.error(f"unknown declaration {keyword!r} "
                      "(expected ring, module, submodule, or element)", 0)
        if not cur.eol:
            cur.error("trailing text")

    if ring is None:
        raise ParseError("missing ring line", 1, 1)
    if module is None:
        raise ParseError("missing module line", 1, 1)
    return InstanceFile(ring, module, submodules, elements)


def format_vec(vec) -> str:
    return "(" + ",".join(str(c) for c in vec) + ")"


def format_vec_list(vecs) -> str:
    return "[" + ",".join(format_vec(v) for v in vecs) + "]"


def render_instance(inst: InstanceFile) -> str:
    """Canonical text for an instance (inverse of :func:`parse_instance`)."""
    lines = [f"ring {inst.ring.descriptor}"]
    lines.append(f"module rank={inst.module.rank} "
                 f"relations={format_vec_list(inst.module.relations)}")
    for name, sub in inst.submodules.items():
        lines.append(f"submodule {name} gens={format_vec_list(sub.generators)}")
    for name, el in inst.elements.items():
        lines.append(f"element {name} = {format_vec(el.rep)}")
    return "\n".join(lines) + "\n"
