"""Line-oriented input files.

Alphabet files:

    # priority system
    events: a b c
    sim: (a,c)
    ser: (c,a)
    inl:

Structure files use a `carrier:` line plus two relation sections — `r1:`/`r2:`
for raw relational structures, `prec:`/`wc:` for so-structures, `cmt:`/`wc:`
for gso-structures.  `#` starts a comment anywhere; missing sections mean the
empty relation.  Point names may contain dots, so structure output printed by
the CLI (occurrences like a.1) parses back in.
"""

from __future__ import annotations

import re

from .alphabet import GAlphabet, galphabet
from .errors import UnknownEvent
from .gsostruct import GsoStructure, gso_structure
from .relations import RelStructure, rel_structure
from .sostruct import SoStructure, so_structure

_NAME = re.compile(r"[\w.]+$")
_PAIR = re.compile(r"\(\s*([\w.]+)\s*,\s*([\w.]+)\s*\)")


def _sections(text: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise UnknownEvent(f"expected 'section: ...' but got {line!r}")
        name, body = line.split(":", 1)
        name = name.strip()
        out[name] = out.get(name, "") + " " + body
    return out


def _names(body: str) -> list[str]:
    names = body.split()
    for n in names:
        if not _NAME.match(n):
            raise UnknownEvent(f"bad name {n!r}")
    return names


def _pairs(body: str) -> set[tuple]:
    pairs = set(_PAIR.findall(body))
    leftover = _PAIR.sub("", body).strip()
    if leftover:
        raise UnknownEvent(f"unparsed relation text {leftover!r}")
    return pairs


def parse_alphabet(text: str, order: tuple | None = None) -> GAlphabet:
    sections = _sections(text)
    unknown = set(sections) - {"events", "sim", "ser", "inl"}
    if unknown:
        raise UnknownEvent(f"unknown alphabet sections {sorted(unknown)}")
    if "events" not in sections:
        raise UnknownEvent("alphabet file needs an 'events:' line")
    return galphabet(
        _names(sections["events"]),
        sim=_pairs(sections.get("sim", "")),
        ser=_pairs(sections.get("ser", "")),
        inl=_pairs(sections.get("inl", "")),
        order=order,
    )


def parse_structure(text: str) -> RelStructure | SoStructure | GsoStructure:
    """Typed by the sections present: r1/r2, prec/wc, or cmt/wc."""
    sections = _sections(text)
    if "carrier" not in sections:
        raise UnknownEvent("structure file needs a 'carrier:' line")
    carrier = _names(sections["carrier"])
    seen = set(carrier)

    def rel(name: str) -> set[tuple]:
        pairs = _pairs(sections.get(name, ""))
        for a, b in pairs:
            if a not in seen or b not in seen:
                raise UnknownEvent(f"{name}: pair ({a},{b}) mentions unknown points")
        return pairs

    keys = set(sections) - {"carrier"}
    if keys <= {"r1", "r2"}:
        return rel_structure(carrier, rel("r1"), rel("r2"))
    if keys <= {"prec", "wc"}:
        return so_structure(carrier, rel("prec"), rel("wc"))
    if keys <= {"cmt", "wc"}:
        return gso_structure(carrier, rel("cmt"), rel("wc"))
    raise UnknownEvent(f"cannot type structure file with sections {sorted(keys)}")


def load_alphabet(path: str, order: tuple | None = None) -> GAlphabet:
    with open(path, encoding="utf-8") as fh:
        return parse_alphabet(fh.read(), order=order)


def load_structure(path: str) -> RelStructure | SoStructure | GsoStructure:
    with open(path, encoding="utf-8") as fh:
        return parse_structure(fh.read())
