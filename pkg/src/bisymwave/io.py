"""File formats: mask text files, binary PGM (P5) images, CSV exports.

All floating-point text uses 17 significant digits, which round-trips IEEE
doubles exactly.
"""

from __future__ import annotations

import numpy as np

from .errors import ParseError
from .masks import FilterMask

FLOAT_FMT = "%.17g"
_MAGIC = "# bisymwave mask v1"


def write_mask(path, mask: FilterMask) -> None:
    lines = [_MAGIC]
    if mask.name:
        lines.append(f"name: {mask.name}")
    if mask.case:
        lines.append(f"case: {mask.case}")
    if mask.params:
        pairs = " ".join(f"{k}={FLOAT_FMT % v}" for k, v in mask.params)
        lines.append(f"params: {pairs}")
    lines.append(f"rows: {mask.rows}")
    lines.append(f"cols: {mask.cols}")
    lines.append(f"origin: {mask.origin[0]} {mask.origin[1]}")
    lines.append("coeffs:")
    for row in mask.coeffs:
        lines.append(" ".join(FLOAT_FMT % v for v in row))
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def read_mask(path) -> FilterMask:
    with open(path, "r", encoding="ascii") as fh:
        raw = [ln.rstrip("\n") for ln in fh]
    lines = [ln for ln in raw if ln.strip() and not ln.lstrip().startswith("#")]
    fields: dict[str, str] = {}
    i = 0
    while i < len(lines) and ":" in lines[i]:
        key, _, value = lines[i].partition(":")
        key = key.strip().lower()
        fields[key] = value.strip()
        i += 1
        if key == "coeffs":
            break
    if "rows" not in fields or "cols" not in fields or "coeffs" not in fields:
        raise ParseError(f"{path}: missing rows/cols/coeffs header")
    try:
        rows, cols = int(fields["rows"]), int(fields["cols"])
    except ValueError as exc:
        raise ParseError(f"{path}: bad rows/cols") from exc
    origin = (0, 0)
    if "origin" in fields:
        parts = fields["origin"].split()
        if len(parts) != 2:
            raise ParseError(f"{path}: origin needs two integers")
        try:
            origin = (int(parts[0]), int(parts[1]))
        except ValueError as exc:
            raise ParseError(f"{path}: bad origin") from exc
    body = lines[i:]
    if len(body) != rows:
        raise ParseError(f"{path}: expected {rows} coefficient rows, got {len(body)}")
    grid = []
    for ln in body:
        try:
            row = [float(tok) for tok in ln.split()]
        except ValueError as exc:
            raise ParseError(f"{path}: malformed coefficient row {ln!r}") from exc
        grid.append(row)
    widths = {len(r) for r in grid}
    if widths != {cols}:
        raise ParseError(f"{path}: ragged coefficient grid (widths {sorted(widths)})")
    arr = np.array(grid)
    if not np.isfinite(arr).all():
        raise ParseError(f"{path}: non-finite coefficients")
    params = ()
    if "params" in fields:
        try:
            params = tuple(
                (kv.split("=")[0], float(kv.split("=")[1]))
                for kv in fields["params"].split()
            )
        except (IndexError, ValueError) as exc:
            raise ParseError(f"{path}: malformed params") from exc
    return FilterMask(arr, origin=origin, name=fields.get("name", ""),
                      case=fields.get("case", ""), params=params)


# ---------------------------------------------------------------------------
# PGM (P5)
# ---------------------------------------------------------------------------

def read_pgm(path) -> tuple[np.ndarray, int]:
    """Binary PGM -> (pixels in [0,1], maxval). 1- or 2-byte samples."""
    with open(path, "rb") as fh:
        data = fh.read()
    pos = 0

    def next_token():
        nonlocal pos
        while pos < len(data):
            if data[pos:pos + 1].isspace():
                pos += 1
            elif data[pos:pos + 1] == b"#":
                while pos < len(data) and data[pos:pos + 1] not in (b"\n", b"\r"):
                    pos += 1
            else:
                break
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        if start == pos:
            raise ParseError(f"{path}: truncated header")
        return data[start:pos]

    if next_token() != b"P5":
        raise ParseError(f"{path}: not a binary PGM (P5)")
    try:
        width = int(next_token())
        height = int(next_token())
        maxval = int(next_token())
    except ValueError as exc:
        raise ParseError(f"{path}: malformed header") from exc
    if width < 1 or height < 1 or not 1 <= maxval <= 65535:
        raise ParseError(f"{path}: bad dimensions or maxval")
    pos += 1  # single whitespace after maxval
    depth = 1 if maxval < 256 else 2
    need = width * height * depth
    payload = data[pos:pos + need]
    if len(payload) != need:
        raise ParseError(f"{path}: payload has {len(payload)} bytes, expected {need}")
    dtype = np.uint8 if depth == 1 else np.dtype(">u2")
    raw = np.frombuffer(payload, dtype=dtype).reshape(height, width)
    if raw.max(initial=0) > maxval:
        raise ParseError(f"{path}: sample exceeds maxval")
    return raw.astype(float) / maxval, maxval


def write_pgm(path, pixels: np.ndarray, maxval: int = 255) -> None:
    """Reals in [0,1] -> binary PGM; values are clipped, then rounded."""
    if not 1 <= maxval <= 65535:
        raise ValueError("maxval must be in [1, 65535]")
    img = np.asarray(pixels, dtype=float)
    if img.ndim != 2:
        raise ValueError("pixels must be 2-D")
    quant = np.rint(np.clip(img, 0.0, 1.0) * maxval)
    dtype = np.uint8 if maxval < 256 else np.dtype(">u2")
    height, width = img.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{width} {height}\n{maxval}\n".encode("ascii"))
        fh.write(quant.astype(dtype).tobytes())


# ---------------------------------------------------------------------------
# CSV
# ---------------------------------------------------------------------------

def write_csv(path, header: list[str], rows) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_csv_cell(v) for v in row) + "\n")


def _csv_cell(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float):
        return FLOAT_FMT % value
    return str(value)


def read_csv_matrix(path) -> np.ndarray:
    """Read a long-format (i, j, value) CSV back into a dense matrix."""
    with open(path, "r", encoding="ascii") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or lines[0].split(",")[:2] != ["i", "j"]:
        raise ParseError(f"{path}: expected header 'i,j,value'")
    entries = []
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != 3:
            raise ParseError(f"{path}: malformed row {ln!r}")
        entries.append((int(parts[0]), int(parts[1]), float(parts[2])))
    if not entries:
        raise ParseError(f"{path}: empty matrix")
    n1 = max(e[0] for e in entries) + 1
    n2 = max(e[1] for e in entries) + 1
    out = np.zeros((n1, n2))
    for i, j, v in entries:
        out[i, j] = v
    return out


def write_csv_matrix(path, matrix: np.ndarray) -> None:
    rows = ((i, j, float(matrix[i, j]))
            for i in range(matrix.shape[0]) for j in range(matrix.shape[1]))
    write_csv(path, ["i", "j", "value"], rows)
