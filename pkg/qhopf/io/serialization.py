"""Canonical JSON for core values and a reader for element text.

Every value is written as a dict with a ``"type"`` key; keys are sorted when
dumped, so equal values give byte-identical output.
"""

import json
from typing import Any, Dict, List, Tuple

from ..coefficients import ScalarQ
from ..errors import QHopfParseError
from ..quantum_group import AlgebraElement, Generator, Monomial
from ..sphere import BaseForm

_GENERATORS = {g.value: g for g in Generator}


def to_json(value: Any) -> Any:
    """Converts a core value (or containers of them) to plain JSON data."""
    if isinstance(value, ScalarQ):
        return {"type": "scalar", "value": value.to_text()}
    if isinstance(value, Monomial):
        return {"type": "monomial", "a_power": value.a_power, "k": value.k, "l": value.l}
    if isinstance(value, AlgebraElement):
        return {
            "type": "element",
            "terms": [
                {"a_power": m.a_power, "k": m.k, "l": m.l, "coeff": c.to_text()}
                for m, c in value.items()
            ],
        }
    if isinstance(value, BaseForm):
        return {
            "type": "form",
            "grade": value.grade,
            "slots": {
                slot: to_json(getattr(value, slot))
                for slot in ("f0", "x", "y", "p")
                if not getattr(value, slot).is_zero()
            },
        }
    if isinstance(value, dict):
        return {str(k): to_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json(v) for v in value]
    return value


def dumps(value: Any) -> str:
    return json.dumps(to_json(value), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _monomial(data: Any) -> Monomial:
    try:
        a_power, k, l = data
        return Monomial(int(a_power), int(k), int(l))
    except (TypeError, ValueError, AssertionError) as e:
        raise QHopfParseError(f"bad monomial {data!r}: {e}")


def from_json(data: Any) -> Any:
    """Inverse of ``to_json``; untyped containers are walked recursively."""
    if isinstance(data, list):
        return [from_json(v) for v in data]
    if not isinstance(data, dict):
        return data
    kind = data.get("type")
    if kind is None:
        return {k: from_json(v) for k, v in data.items()}
    try:
        if kind == "scalar":
            return ScalarQ.parse(data["value"])
        if kind == "monomial":
            return _monomial([data["a_power"], data["k"], data["l"]])
        if kind == "element":
            return AlgebraElement(
                {
                    _monomial([term["a_power"], term["k"], term["l"]]):
                    ScalarQ.parse(term["coeff"])
                    for term in data["terms"]
                }
            )
        if kind == "form":
            slots = {name: from_json(v) for name, v in data.get("slots", {}).items()}
            return BaseForm(int(data["grade"]), **slots)
    except KeyError as e:
        raise QHopfParseError(f"{kind} value is missing the field {e}")
    raise QHopfParseError(f"unknown value type {kind!r}")


def loads(text: str) -> Any:
    """Reads canonical JSON.

    Raises:
        QHopfParseError: with the line and column of malformed JSON.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise QHopfParseError(e.msg, line=e.lineno, column=e.colno)
    return from_json(data)


# element text: "(c1)*m1 + (c2)*m2", as printed by AlgebraElement.to_text


def _split_terms(text: str) -> List[Tuple[str, int]]:
    """Splits on top-level '+' signs; returns each term with its offset."""
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise QHopfParseError("unbalanced ')'", line=1, column=i + 1)
        elif ch == "+" and depth == 0:
            terms.append((text[start:i], start))
            start = i + 1
    if depth:
        raise QHopfParseError("unbalanced '('", line=1, column=len(text))
    terms.append((text[start:], start))
    return terms


def _word(text: str, offset: int) -> AlgebraElement:
    value = AlgebraElement.scalar(1)
    for token in text.split():
        if token == "1":
            continue
        name, _, power = token.partition("^")
        if name not in _GENERATORS:
            raise QHopfParseError(
                f"unknown generator {name!r}", line=1, column=offset + text.find(token) + 1
            )
        try:
            exponent = int(power) if power else 1
        except ValueError:
            raise QHopfParseError(
                f"bad exponent in {token!r}", line=1, column=offset + text.find(token) + 1
            )
        value = value * AlgebraElement.generator(_GENERATORS[name]) ** exponent
    return value


def parse_element(text: str) -> AlgebraElement:
    """Reads an element from its canonical text (or any sum of scaled words).

    Raises:
        QHopfParseError: with the column of the offending term.
    """
    text = text.strip()
    if text == "0":
        return AlgebraElement()
    total = AlgebraElement()
    for term, offset in _split_terms(text):
        body = term.lstrip()
        offset += len(term) - len(body)
        body = body.rstrip()
        if not body:
            raise QHopfParseError("empty term", line=1, column=offset + 1)
        coefficient = ScalarQ(1)
        if body.startswith("("):
            depth = 0
            for i, ch in enumerate(body):
                depth += {"(": 1, ")": -1}.get(ch, 0)
                if depth == 0:
                    break
            coefficient = ScalarQ.parse(body[1:i])
            offset += i + 1
            body = body[i + 1:]
            if body.startswith("*"):
                offset += 1
                body = body[1:]
        total = total + _word(body, offset).scale(coefficient)
    return total
