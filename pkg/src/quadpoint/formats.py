"""Line-oriented text formats shared by the CLI and the test fixtures.

Matrix:         ``rows cols`` header, then one 0/1 string per row.
Form:           ``form <dim>``, ``g <dim bits>``, then the Gram rows.
Surface:        ``genus <n>``, then ``g <2n bits>``.
Word:           one token per line: ``twist <bits>``, ``square <bits>``,
                ``flip``, ``umap``.
Decomposition:  ``u <0|1>``, then one bit string per word vector.

Vectors are 1 x n matrices.  Structural problems raise FormatError;
semantic ones (a non-symmetric Gram, say) surface as ValueError from the
domain types.
"""

from __future__ import annotations

from .gf2 import BitMatrix, BitVector
from .mcg import FLIP, UMAP, SurfacePinkallForm, Token, square, twist
from .quadform import QuadraticForm


class FormatError(Exception):
    """The text does not match the documented format."""


def _lines(text: str) -> list[str]:
    lines = [ln.rstrip() for ln in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    return lines


def _bits(token: str, what: str) -> BitVector:
    try:
        return BitVector.from_string(token)
    except ValueError:
        raise FormatError(f"{what} must be a 0/1 string, got {token!r}") from None


def _int(token: str, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {token!r}") from None
    if value < 0:
        raise FormatError(f"{what} must be non-negative, got {value}")
    return value


def parse_matrix(text: str) -> BitMatrix:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty matrix text")
    header = lines[0].split()
    if len(header) != 2:
        raise FormatError(f"matrix header must be 'rows cols', got {lines[0]!r}")
    rows = _int(header[0], "row count")
    cols = _int(header[1], "column count")
    if len(lines) != 1 + rows:
        raise FormatError(f"expected {rows} matrix rows, got {len(lines) - 1}")
    data = []
    for ln in lines[1:]:
        v = _bits(ln, "matrix row")
        if v.length != cols:
            raise FormatError(f"matrix row of length {v.length}, expected {cols}")
        data.append(v.bits)
    return BitMatrix(rows, cols, tuple(data))


def dump_matrix(m: BitMatrix) -> str:
    return "\n".join([f"{m.rows} {m.cols}"] + m.to01_rows()) + "\n"


def parse_vector(text: str) -> BitVector:
    m = parse_matrix(text)
    if m.rows != 1:
        raise FormatError(f"a vector is a 1-row matrix, got {m.rows} rows")
    return m.row(0)


def parse_form(text: str) -> QuadraticForm:
    lines = _lines(text)
    if len(lines) < 2:
        raise FormatError("form text needs a 'form' line and a 'g' line")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "form":
        raise FormatError(f"expected 'form <dim>', got {lines[0]!r}")
    dim = _int(head[1], "dimension")
    gline = lines[1].split()
    if not gline or gline[0] != "g" or len(gline) > 2:
        raise FormatError(f"expected 'g <bits>', got {lines[1]!r}")
    g = _bits(gline[1] if len(gline) == 2 else "", "g values")
    if g.length != dim:
        raise FormatError(f"g values of length {g.length}, expected {dim}")
    if len(lines) != 2 + dim:
        raise FormatError(f"expected {dim} Gram rows, got {len(lines) - 2}")
    data = []
    for ln in lines[2:]:
        v = _bits(ln, "Gram row")
        if v.length != dim:
            raise FormatError(f"Gram row of length {v.length}, expected {dim}")
        data.append(v.bits)
    return QuadraticForm(dim, BitMatrix(dim, dim, tuple(data)), g)


def dump_form(f: QuadraticForm) -> str:
    lines = [f"form {f.dim}", f"g {f.basis_g.to01()}".rstrip()] + f.gram.to01_rows()
    return "\n".join(lines) + "\n"


def parse_surface(text: str) -> SurfacePinkallForm:
    lines = _lines(text)
    if len(lines) != 2:
        raise FormatError("surface text is exactly a 'genus' line and a 'g' line")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "genus":
        raise FormatError(f"expected 'genus <n>', got {lines[0]!r}")
    genus = _int(head[1], "genus")
    gline = lines[1].split()
    if not gline or gline[0] != "g" or len(gline) > 2:
        raise FormatError(f"expected 'g <bits>', got {lines[1]!r}")
    g = _bits(gline[1] if len(gline) == 2 else "", "g values")
    if g.length != 2 * genus:
        raise FormatError(f"g values of length {g.length}, expected {2 * genus}")
    return SurfacePinkallForm.from_g_values(genus, g)


def dump_surface(s: SurfacePinkallForm) -> str:
    return f"genus {s.genus}\n" + f"g {s.form.basis_g.to01()}".rstrip() + "\n"


def parse_word(text: str) -> list[Token]:
    tokens = []
    for ln in _lines(text):
        parts = ln.split()
        if not parts:
            continue
        kind = parts[0]
        if kind in ("twist", "square"):
            if len(parts) != 2:
                raise FormatError(f"expected '{kind} <bits>', got {ln!r}")
            maker = twist if kind == "twist" else square
            tokens.append(maker(_bits(parts[1], f"{kind} vector")))
        elif kind == "flip":
            if len(parts) != 1:
                raise FormatError(f"'flip' takes no argument, got {ln!r}")
            tokens.append(FLIP)
        elif kind == "umap":
            if len(parts) != 1:
                raise FormatError(f"'umap' takes no argument, got {ln!r}")
            tokens.append(UMAP)
        else:
            raise FormatError(f"unknown word token {kind!r}")
    return tokens


def dump_word(word) -> str:
    out = []
    for token in word:
        if token.vector is not None:
            out.append(f"{token.kind} {token.vector.to01()}")
        else:
            out.append(token.kind)
    return "\n".join(out) + ("\n" if out else "")


def parse_decomposition(text: str) -> tuple[int, list[BitVector]]:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty decomposition text")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "u" or head[1] not in ("0", "1"):
        raise FormatError(f"expected 'u <0|1>', got {lines[0]!r}")
    word = [_bits(ln, "word vector") for ln in lines[1:]]
    return int(head[1]), word


def dump_decomposition(u_flag: int, word) -> str:
    return "\n".join([f"u {u_flag}"] + [v.to01() for v in word]) + "\n"


def parse_inline_matrix(arg: str) -> BitMatrix:
    """Inline matrix syntax for CLI arguments: rows joined with '/'.

    A single run of bits is a 1 x n vector.
    """
    rows = arg.split("/")
    vectors = [_bits(r, "inline matrix row") for r in rows]
    if len({v.length for v in vectors}) > 1:
        raise FormatError("inline matrix rows of unequal length")
    return BitMatrix.from_rows(vectors)
