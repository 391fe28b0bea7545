"""Polynomial system files.

A system file declares the ring and lists one polynomial per line::

    # cyclic-3
    vars: x, y, z
    order: grevlex
    field: gf 32003
    x + y + z
    x*y + y*z + z*x
    x*y*z - 1

``order:`` and ``field:`` may be omitted and then fall back to the caller's
defaults. Everything after ``#`` on a line is a comment.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from algebra.context import ComputationContext
from algebra.errors import AlgebraError
from algebra.fields import field_from_descriptor
from algebra.orders import parse_order_kind
from algebra.polynomials import Polynomial

logger = logging.getLogger(__name__)

SYSTEM_SUFFIX = ".sys"

HEADER_RE = re.compile(r"^(?P<key>[A-Za-z]+)\s*:(?P<value>.*)$")
IDENTIFIER_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
INVALID_CHARACTER_RE = re.compile(r"[^0-9A-Za-z_\s+\-*^/()]")
HEADER_KEYS = ("vars", "order", "field")


class SystemParseError(ValueError):
    def __init__(self, message: str, *, line: int, column: int = 1):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}: {self.message}"


@dataclass(frozen=True)
class PolynomialSystem:
    ctx: ComputationContext
    polynomials: tuple[Polynomial, ...]
    name: str = ""

    def __len__(self) -> int:
        return len(self.polynomials)


def _strip_comment(raw: str) -> str:
    return raw.split("#", 1)[0].rstrip()


def _column_of(raw: str, fragment: str, start: int = 0) -> int:
    position = raw.find(fragment, start)
    return position + 1 if position >= 0 else 1


def _parse_vars(value: str, raw: str, lineno: int) -> list[str]:
    names = []
    offset = raw.index(":") + 1
    for piece in value.split(","):
        name = piece.strip()
        column = _column_of(raw, name, offset) if name else offset + 1
        if not IDENTIFIER_RE.fullmatch(name):
            raise SystemParseError(f"invalid variable name {name!r}", line=lineno, column=column)
        if name in names:
            raise SystemParseError(f"variable {name!r} declared twice", line=lineno, column=column)
        names.append(name)
    return names


def _check_polynomial_text(text: str, names: Sequence[str], lineno: int) -> None:
    bad = INVALID_CHARACTER_RE.search(text)
    if bad:
        raise SystemParseError(f"unexpected character {bad.group()!r}", line=lineno, column=bad.start() + 1)
    for match in IDENTIFIER_RE.finditer(text):
        if match.group() not in names:
            raise SystemParseError(
                f"unknown variable {match.group()!r}", line=lineno, column=match.start() + 1
            )


def parse_system(
    text: str,
    *,
    name: str = "",
    order: Optional[str] = None,
    field: Optional[str] = None,
    default_order: str = "grevlex",
    default_field: str = "q",
) -> PolynomialSystem:
    """Parse a system file; ``order``/``field`` override the file's own headers."""
    headers: dict[str, tuple[str, str, int]] = {}
    ctx: Optional[ComputationContext] = None
    polynomials: list[Polynomial] = []
    lines = text.splitlines()

    for lineno, raw in enumerate(lines, start=1):
        content = _strip_comment(raw)
        if not content.strip():
            continue
        header = HEADER_RE.match(content.strip())
        if header and header.group("key").lower() in HEADER_KEYS:
            key = header.group("key").lower()
            if ctx is not None:
                raise SystemParseError(f"'{key}:' must come before the polynomials", line=lineno)
            if key in headers:
                raise SystemParseError(f"'{key}:' declared twice", line=lineno)
            headers[key] = (header.group("value").strip(), content, lineno)
            continue
        if header:
            raise SystemParseError(
                f"unknown header {header.group('key')!r}; expected one of {', '.join(HEADER_KEYS)}",
                line=lineno,
            )
        if ctx is None:
            ctx = _build_context(headers, lineno, order, field, default_order, default_field)
        _check_polynomial_text(content, ctx.variable_names, lineno)
        try:
            poly = ctx.parse(content.strip())
        except AlgebraError as exc:
            raise SystemParseError(str(exc), line=lineno) from exc
        if poly.is_zero():
            raise SystemParseError("polynomial is zero", line=lineno)
        polynomials.append(poly)

    if ctx is None:
        raise SystemParseError("system has no polynomials", line=len(lines) + 1)
    logger.debug("parsed system %s: %d polynomials over %r", name or "-", len(polynomials), ctx)
    return PolynomialSystem(ctx=ctx, polynomials=tuple(polynomials), name=name)


def _build_context(
    headers: dict[str, tuple[str, str, int]],
    lineno: int,
    order: Optional[str],
    field: Optional[str],
    default_order: str,
    default_field: str,
) -> ComputationContext:
    if "vars" not in headers:
        raise SystemParseError("missing 'vars:' declaration before the first polynomial", line=lineno)
    value, raw, vars_line = headers["vars"]
    names = _parse_vars(value, raw, vars_line)

    order_value, field_value = order, field
    order_line = field_line = lineno
    order_column = field_column = 1
    if order_value is None:
        if "order" in headers:
            order_value, raw, order_line = headers["order"]
            order_column = _column_of(raw, order_value, raw.index(":") + 1)
        else:
            order_value = default_order
    if field_value is None:
        if "field" in headers:
            field_value, raw, field_line = headers["field"]
            field_column = _column_of(raw, field_value, raw.index(":") + 1)
        else:
            field_value = default_field

    try:
        kind = parse_order_kind(order_value)
    except AlgebraError as exc:
        raise SystemParseError(str(exc), line=order_line, column=order_column) from exc
    try:
        ring_field = field_from_descriptor(field_value)
    except AlgebraError as exc:
        raise SystemParseError(str(exc), line=field_line, column=field_column) from exc
    return ComputationContext.create(names, order=kind, field=ring_field)


def format_system(system: PolynomialSystem) -> str:
    """Render ``system`` back into system file text."""
    ctx = system.ctx
    lines = []
    if system.name:
        lines.append(f"# {system.name}")
    lines.append(f"vars: {', '.join(ctx.variable_names)}")
    lines.append(f"order: {ctx.order.kind.value}")
    lines.append(f"field: {ctx.field.descriptor}")
    lines.extend(ctx.format_polynomial(p) for p in system.polynomials)
    return "\n".join(lines) + "\n"


def bundled_systems(root: Path) -> dict[str, Path]:
    return {path.stem: path for path in sorted(Path(root).glob(f"*{SYSTEM_SUFFIX}"))}


def load_system(
    reference: str,
    root: Path,
    *,
    stdin_text: Optional[str] = None,
    **options,
) -> PolynomialSystem:
    """Load a system by bundled name, file path, or ``-`` for ``stdin_text``."""
    if reference == "-":
        if stdin_text is None:
            raise SystemParseError("no input on stdin", line=1)
        return parse_system(stdin_text, name="stdin", **options)
    bundled = bundled_systems(root)
    if reference in bundled:
        path = bundled[reference]
    else:
        path = Path(reference)
    if not path.is_file():
        known = ", ".join(bundled) or "none"
        raise FileNotFoundError(f"no system file or bundled system named {reference!r} (bundled: {known})")
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        column = exc.start - (data.rfind(b"\n", 0, exc.start) + 1) + 1
        raise SystemParseError(
            f"{path.name} is not valid UTF-8 (byte {exc.start})", line=line, column=column
        ) from exc
    return parse_system(text, name=path.stem, **options)
