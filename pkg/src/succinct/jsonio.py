"""JSON documents, DOT export and plain-text tables for automata."""

from __future__ import annotations

import json
from typing import Any

import jsonschema

from .automata import Dfa, Nfa, Xfa
from .errors import InputError

TYPES = {"dfa": Dfa, "nfa": Nfa, "xfa": Xfa}

SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["type", "alphabet", "states", "initial", "final", "transitions"],
    "additionalProperties": False,
    "properties": {
        "type": {"enum": list(TYPES)},
        "alphabet": {
            "type": "array",
            "items": {"type": "string", "minLength": 1, "maxLength": 1},
            "uniqueItems": True,
        },
        "states": {"type": "integer", "minimum": 0},
        "initial": {"type": "array", "items": {"type": "integer"}, "uniqueItems": True},
        "final": {"type": "array", "items": {"type": "integer"}, "uniqueItems": True},
        "transitions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["from", "on", "to"],
                "additionalProperties": False,
                "properties": {
                    "from": {"type": "integer"},
                    "on": {"type": "string"},
                    "to": {"type": "array", "items": {"type": "integer"}, "uniqueItems": True},
                },
            },
        },
        "labels": {"type": "array", "items": {"type": "string"}},
    },
}

GENERATOR_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["elements"],
    "properties": {
        "elements": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {
                    "anyOf": [
                        {"type": "string"},
                        {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    ]
                },
            },
        }
    },
}

_validator = jsonschema.Draft202012Validator(SCHEMA)
_generator_validator = jsonschema.Draft202012Validator(GENERATOR_SCHEMA)


class DocumentError(InputError):
    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer


def _pointer(path) -> str:
    return "".join(f"/{p}" for p in path)


def _check_schema(validator, doc) -> None:
    errors = sorted(validator.iter_errors(doc), key=lambda e: (list(map(str, e.path)), e.message))
    if errors:
        e = errors[0]
        raise DocumentError(_pointer(e.path), e.message)


# -- automata ------------------------------------------------------------------

def kind_of(aut) -> str:
    for name, cls in TYPES.items():
        if type(aut) is cls:
            return name
    raise InputError(f"not an automaton: {type(aut).__name__}")


def to_json(aut) -> dict:
    kind = kind_of(aut)
    transitions = []
    for q in range(aut.state_count):
        for i, c in enumerate(aut.alphabet):
            if kind == "dfa":
                transitions.append({"from": q, "on": c, "to": [aut.delta[q][i]]})
            elif aut.delta[q][i]:
                transitions.append({"from": q, "on": c, "to": sorted(aut.delta[q][i])})
    doc = {
        "type": kind,
        "alphabet": list(aut.alphabet),
        "states": aut.state_count,
        "initial": [aut.initial] if kind == "dfa" else sorted(aut.initials),
        "final": sorted(aut.finals),
        "transitions": transitions,
    }
    if aut.labels is not None:
        doc["labels"] = list(aut.labels)
    return doc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def from_json(doc) -> Dfa | Nfa | Xfa:
    _check_schema(_validator, doc)
    kind = doc["type"]
    alphabet = doc["alphabet"]
    n = doc["states"]
    letter = {c: i for i, c in enumerate(alphabet)}
    for key in ("initial", "final"):
        for j, q in enumerate(doc[key]):
            if not 0 <= q < n:
                raise DocumentError(f"/{key}/{j}", f"state {q} out of range 0..{n - 1}")
    table: list[list[list[int] | None]] = [[None] * len(alphabet) for _ in range(n)]
    for j, t in enumerate(doc["transitions"]):
        here = f"/transitions/{j}"
        if not 0 <= t["from"] < n:
            raise DocumentError(f"{here}/from", f"state {t['from']} out of range")
        if t["on"] not in letter:
            raise DocumentError(f"{here}/on", f"symbol {t['on']!r} is not in the alphabet")
        for m, target in enumerate(t["to"]):
            if not 0 <= target < n:
                raise DocumentError(f"{here}/to/{m}", f"state {target} out of range")
        cell = table[t["from"]][letter[t["on"]]]
        if cell is not None:
            raise DocumentError(here, f"duplicate transition from {t['from']} on {t['on']!r}")
        if kind == "dfa" and len(t["to"]) != 1:
            raise DocumentError(f"{here}/to", "a dfa transition needs exactly one target")
        table[t["from"]][letter[t["on"]]] = list(t["to"])
    labels = doc.get("labels")
    if labels is not None and len(labels) != n:
        raise DocumentError("/labels", f"expected {n} labels, got {len(labels)}")
    labels = tuple(labels) if labels is not None else None
    if kind == "dfa":
        if len(doc["initial"]) != 1:
            raise DocumentError("/initial", "a dfa needs exactly one initial state")
        for q in range(n):
            for i, c in enumerate(alphabet):
                if table[q][i] is None:
                    raise DocumentError("/transitions", f"missing transition from {q} on {c!r}")
        delta = [[cell[0] for cell in row] for row in table]
        return Dfa(alphabet, n, doc["initial"][0], doc["final"], delta, labels=labels)
    delta = [[cell or [] for cell in row] for row in table]
    return TYPES[kind](alphabet, n, doc["initial"], doc["final"], delta, labels)


def load_automaton(path: str):
    return from_json(_load(path))


def load_generator(path: str) -> list:
    doc = _load(path)
    _check_schema(_generator_validator, doc)
    return doc["elements"]


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None


# -- DOT -----------------------------------------------------------------------

def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _edges(aut) -> list[tuple[int, int, str]]:
    kind = kind_of(aut)
    letters: dict[tuple[int, int], list[str]] = {}
    for q in range(aut.state_count):
        for i, c in enumerate(aut.alphabet):
            targets = [aut.delta[q][i]] if kind == "dfa" else sorted(aut.delta[q][i])
            for t in targets:
                letters.setdefault((q, t), []).append(c)
    return [(q, t, ",".join(cs)) for (q, t), cs in sorted(letters.items())]


def to_dot(aut, name: str = "automaton") -> str:
    kind = kind_of(aut)
    initials = [aut.initial] if kind == "dfa" else sorted(aut.initials)
    labels = aut.labels or tuple(str(q) for q in range(aut.state_count))
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;"]
    if kind == "xfa":
        lines.append('  label="GF(2)-weighted"; labelloc=t;')
    lines.append("  node [shape=circle];")
    for q in range(aut.state_count):
        shape = ", shape=doublecircle" if q in aut.finals else ""
        lines.append(f"  q{q} [label={_quote(labels[q])}{shape}];")
    for q in initials:
        lines.append(f'  start{q} [shape=none, label="", width=0, height=0];')
        lines.append(f"  start{q} -> q{q};")
    for q, t, cs in _edges(aut):
        lines.append(f"  q{q} -> q{t} [label={_quote(cs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- tables --------------------------------------------------------------------

def render_rows(header: list[str], rows: list[list[str]]) -> str:
    """Left-aligned fixed-column text, columns separated by two spaces."""
    widths = [max(len(r[j]) for r in [header, *rows]) for j in range(len(header))]
    out = []
    for r in [header, *rows]:
        out.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return "\n".join(out) + "\n"


def to_table(aut) -> str:
    kind = kind_of(aut)
    initials = {aut.initial} if kind == "dfa" else aut.initials
    labels = aut.labels or tuple(str(q) for q in range(aut.state_count))
    header = ["state", "label", "init", "final", *aut.alphabet]
    rows = []
    for q in range(aut.state_count):
        cells = []
        for i in range(len(aut.alphabet)):
            if kind == "dfa":
                cells.append(str(aut.delta[q][i]))
            else:
                cells.append("{" + ",".join(map(str, sorted(aut.delta[q][i]))) + "}")
        rows.append([str(q), labels[q], "*" if q in initials else "",
                     "*" if q in aut.finals else "", *cells])
    return f"type: {kind}\n" + render_rows(header, rows)
