"""Proof documents: JSON tree records, indented text and bussproofs LaTeX."""

from __future__ import annotations

import json
from typing import Any

from .calculus import Annotation, Proof, Rule
from .syntax import parse, parse_sequent, render, render_sequent

_LIST_FIELDS = ("delta", "delta1", "delta2")


def to_document(t: Proof) -> dict[str, Any]:
    """Tree record ``{conclusion, rule, annotation, premises}`` with formulas as ASCII text."""
    ann: dict[str, Any] = {}
    a = t.annotation
    if a.principal is not None:
        ann["principal"] = render(a.principal)
    for name in _LIST_FIELDS:
        v = getattr(a, name)
        if v is not None:
            ann[name] = [render(f) for f in v]
    return {
        "conclusion": render_sequent(t.conclusion),
        "rule": t.rule.value,
        "annotation": ann,
        "premises": [to_document(p) for p in t.premises],
    }


def from_document(doc: dict[str, Any]) -> Proof:
    """Inverse of :func:`to_document`; raises ``ValueError`` on malformed records."""
    try:
        rule = Rule(doc["rule"])
        raw = doc.get("annotation") or {}
        fields: dict[str, Any] = {}
        if "principal" in raw:
            fields["principal"] = parse(raw["principal"])
        for name in _LIST_FIELDS:
            if name in raw:
                fields[name] = tuple(parse(x) for x in raw[name])
        return Proof(parse_sequent(doc["conclusion"]), rule,
                     tuple(from_document(p) for p in doc.get("premises", [])),
                     Annotation(**fields))
    except (KeyError, TypeError) as e:
        raise ValueError(f"malformed proof document: {e}") from None


def dumps(t: Proof) -> str:
    return json.dumps(to_document(t), indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Proof:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"proof document is not JSON: {e}") from None
    if isinstance(doc, dict) and "proof" in doc:
        doc = doc["proof"]  # a prover record wraps the proof document
    return from_document(doc)


def _annotation_text(a: Annotation, fmt: str) -> str:
    bits = []
    if a.principal is not None:
        bits.append(render(a.principal, fmt))
    for name in _LIST_FIELDS:
        v = getattr(a, name)
        if v is not None:
            bits.append(f"{name}={{{', '.join(render(f, fmt) for f in v)}}}")
    return " ".join(bits)


def to_text(t: Proof, fmt: str = "ascii") -> str:
    """Indented tree, conclusion first, premises nested below."""
    lines: list[str] = []

    def go(n: Proof, indent: int):
        ann = _annotation_text(n.annotation, fmt)
        tag = f"[{n.rule.value}{' ' + ann if ann else ''}]"
        lines.append("  " * indent + f"{render_sequent(n.conclusion, fmt)}   {tag}")
        for p in n.premises:
            go(p, indent + 1)

    go(t, 0)
    return "\n".join(lines) + "\n"


_LATEX_INF = {0: r"\AxiomC", 1: r"\UnaryInfC", 2: r"\BinaryInfC", 3: r"\TrinaryInfC"}


def _latex_rule(rule: Rule) -> str:
    return (rule.value.replace("&", r"\wedge ").replace("|", r"\vee ")
            .replace("->", r"\to ").replace("_", r"\_"))


def to_latex(t: Proof) -> str:
    """A ``prooftree`` environment for the bussproofs package, one inference per node."""
    lines = [r"\begin{prooftree}"]

    def go(n: Proof):
        for p in n.premises:
            go(p)
        seq = render_sequent(n.conclusion, "latex")
        if not n.premises:
            lines.append(r"\AxiomC{}")
            lines.append(rf"\RightLabel{{\scriptsize $({_latex_rule(n.rule)})$}}")
            lines.append(rf"\UnaryInfC{{${seq}$}}")
        else:
            lines.append(rf"\RightLabel{{\scriptsize $({_latex_rule(n.rule)})$}}")
            lines.append(rf"{_LATEX_INF[len(n.premises)]}{{${seq}$}}")

    go(t)
    lines.append(r"\end{prooftree}")
    return "\n".join(lines) + "\n"
