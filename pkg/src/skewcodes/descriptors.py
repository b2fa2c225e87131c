"""Line-oriented descriptor files for fields, codes, words and messages.

Every file is versioned key: value text (comments start with '#'), with
element payloads carried as JSON.  Code, word and message files are tied to
their field by the sha256 prefix of the canonical field descriptor, so a
mismatched pair fails loudly instead of misparsing.  Round-trips are
bit-exact because all element constructors normalize.
"""

from __future__ import annotations

import json

from .codes import Code
from .fields import FiniteExtField, TowerField, finite_field, tower_field
from .group_algebra import GroupAlgebraElement

FIELD_FORMAT = "skewcodes-field v1"
CODE_FORMAT = "skewcodes-code v1"
WORD_FORMAT = "skewcodes-word v1"
MESSAGE_FORMAT = "skewcodes-message v1"


def parse_kv(text: str) -> dict:
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValueError(f"line {lineno}: expected 'key: value', got {raw!r}")
        key, _, value = line.partition(":")
        key = key.strip()
        if key in out:
            if not isinstance(out[key], list):
                out[key] = [out[key]]
            out[key].append(value.strip())
        else:
            out[key] = value.strip()
    return out


def field_from_descriptor(text: str):
    kv = parse_kv(text)
    if kv.get("format") != FIELD_FORMAT:
        raise ValueError(f"not a {FIELD_FORMAT} descriptor")
    backend = kv.get("backend")
    if backend == "finite":
        p = int(kv["p"])
        poly = tuple(int(c) for c in kv["poly"].split())
        degree = int(kv.get("degree", len(poly) - 1))
        if degree != len(poly) - 1:
            raise ValueError("degree does not match the defining polynomial")
        return finite_field(p, poly)
    if backend == "tower":
        e = int(kv["e"])
        radicals = []
        rad_text = kv.get("radicals", "").strip()
        if rad_text:
            for part in rad_text.split():
                n_s, _, a_s = part.partition(":")
                radicals.append((int(n_s), int(a_s)))
        base = kv.get("base", "cyclotomic")
        return tower_field(e, tuple(radicals), base)
    raise ValueError(f"unknown backend {backend!r}")


def field_to_descriptor(field) -> str:
    if not isinstance(field, (FiniteExtField, TowerField)):
        raise TypeError("only extension fields have descriptors")
    return field.to_descriptor()


def load_field(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return field_from_descriptor(fh.read())


def save_field(field, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(field_to_descriptor(field))


def code_to_text(code: Code) -> str:
    lines = [
        f"format: {CODE_FORMAT}",
        f"field-hash: {code.field.descriptor_hash()}",
        f"generators: {code.dim}",
    ]
    for i, g in enumerate(code.gens):
        lines.append(f"gen {i}: {json.dumps(g.to_obj())}")
    return "\n".join(lines) + "\n"


def code_from_text(field, text: str) -> Code:
    kv = parse_kv(text)
    if kv.get("format") != CODE_FORMAT:
        raise ValueError(f"not a {CODE_FORMAT} descriptor")
    if kv.get("field-hash") != field.descriptor_hash():
        raise ValueError("code descriptor was written for a different field")
    count = int(kv.get("generators", 0))
    gens = []
    for i in range(count):
        payload = kv.get(f"gen {i}")
        if payload is None:
            raise ValueError(f"missing generator {i}")
        gens.append(GroupAlgebraElement.from_obj(field, json.loads(payload)))
    return Code.from_generators(field, gens)


def word_to_text(word: GroupAlgebraElement) -> str:
    lines = [
        f"format: {WORD_FORMAT}",
        f"field-hash: {word.field.descriptor_hash()}",
        f"word: {json.dumps(word.to_obj())}",
    ]
    return "\n".join(lines) + "\n"


def word_from_text(field, text: str) -> GroupAlgebraElement:
    kv = parse_kv(text)
    if kv.get("format") != WORD_FORMAT:
        raise ValueError(f"not a {WORD_FORMAT} file")
    if kv.get("field-hash") != field.descriptor_hash():
        raise ValueError("word file was written for a different field")
    return GroupAlgebraElement.from_obj(field, json.loads(kv["word"]))


def message_to_text(field, symbols) -> str:
    payload = [field.element_to_obj(s) for s in symbols]
    lines = [
        f"format: {MESSAGE_FORMAT}",
        f"field-hash: {field.descriptor_hash()}",
        f"message: {json.dumps(payload)}",
    ]
    return "\n".join(lines) + "\n"


def message_from_text(field, text: str):
    kv = parse_kv(text)
    if kv.get("format") != MESSAGE_FORMAT:
        raise ValueError(f"not a {MESSAGE_FORMAT} file")
    if kv.get("field-hash") != field.descriptor_hash():
        raise ValueError("message file was written for a different field")
    return [field.element_from_obj(o) for o in json.loads(kv["message"])]
