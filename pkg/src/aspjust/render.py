"""Text, JSON and DOT serializers.

JSON objects are written with a fixed key order and compact separators, and
every array is in a deterministic order, so equal inputs give equal bytes.
"""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from typing import Any, Iterable, TextIO

from .aba import ABAFramework, Argument, Extension
from .attack_trees import PLUS, AttackTree, AttackTreeNode
from .justify import (
    ATT,
    LABELLED,
    NEGATIVE,
    SUPP,
    JustLiteral,
    JustPair,
    Justification,
    PairSet,
    justification_graph,
    sorted_pairs,
)
from .program import AnswerSet, format_literal_set, lit

TEXT, JSON, DOT = "text", "json", "dot"
_SIGN_COLOR = {"+": "green", "-": "red"}
_ANSI = {"+": "\x1b[32m", "-": "\x1b[31m"}
_RESET = "\x1b[0m"


@dataclass
class RenderConfig:
    format: str = TEXT
    out: str | None = None
    color: bool = False

    def write(self, text: str):
        if not text.endswith("\n"):
            text += "\n"
        if self.out is None or self.out == "-":
            sys.stdout.write(text)
            return
        with open(self.out, "w", encoding="utf-8") as fh:
            fh.write(text)


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


# -- justifications ------------------------------------------------------------------

def _paint(text: str, sign: str | None, color: bool) -> str:
    if not color or sign is None:
        return text
    return _ANSI[sign] + text + _RESET


def _pair_text(p: JustPair, color: bool) -> str:
    return _paint(str(p), p.pair_sign, color)


def pairset_text(s: PairSet, color: bool = False) -> str:
    parts = [_paint(str(s.subject), s.subject.sign, color)]
    parts += [_pair_text(p, color) for p in sorted_pairs(s.pairs)]
    return "{" + ", ".join(parts) + "}"


def justification_text(j: Justification, color: bool = False) -> str:
    if j.polarity == NEGATIVE:
        if not j.sets:
            return "{}"
        return "{\n" + ",\n".join("  " + pairset_text(s, color) for s in j.sets) + "\n}"
    return pairset_text(j.sets[0], color)


def just_literal_to_dict(x: JustLiteral) -> dict:
    d = {"literal": str(x.literal)}
    if x.sign is not None:
        d["sign"] = x.sign
    if x.tag is not None:
        d["tag"] = x.tag
    return d


def just_literal_from_dict(d: dict) -> JustLiteral:
    return JustLiteral(lit(d["literal"]), d.get("sign"), d.get("tag"))


def pair_to_dict(p: JustPair) -> dict:
    d = {
        "kind": p.kind,
        "source": just_literal_to_dict(p.source),
        "target": just_literal_to_dict(p.target),
    }
    if p.pair_sign is not None:
        d["pair_sign"] = p.pair_sign
    return d


def pair_from_dict(d: dict) -> JustPair:
    return JustPair(
        d["kind"],
        just_literal_from_dict(d["source"]),
        just_literal_from_dict(d["target"]),
        d.get("pair_sign"),
    )


def justification_to_dict(j: Justification) -> dict:
    d = {
        "subject": just_literal_to_dict(j.subject),
        "polarity": j.polarity,
        "variant": j.variant,
        "sets": [[pair_to_dict(p) for p in sorted_pairs(s.pairs)] for s in j.sets],
    }
    # negative labelled sets each carry their own subject tag
    if j.variant == LABELLED and j.polarity == NEGATIVE:
        d["set_subjects"] = [just_literal_to_dict(s.subject) for s in j.sets]
    return d


def justification_from_dict(d: dict) -> Justification:
    subject = just_literal_from_dict(d["subject"])
    subjects = [just_literal_from_dict(x) for x in d.get("set_subjects", [])]
    sets = []
    for i, pairs in enumerate(d["sets"]):
        s_subject = subjects[i] if subjects else subject
        sets.append(PairSet(s_subject, frozenset(pair_from_dict(p) for p in pairs)))
    return Justification(subject, d["polarity"], d["variant"], tuple(sets))


def parse_justification_json(text: str) -> Justification:
    return justification_from_dict(json.loads(text))


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _graph_name(prefix: str, n: int) -> str:
    return f"{prefix}_{n}"


def justification_dot(j: Justification, name: str = "justification") -> str:
    """One digraph per pair set; an empty negative justification gives none."""
    out = []
    for n, g in enumerate(justification_graph(j), start=1):
        ids = {x: f"n{i}" for i, x in enumerate(g.nodes)}
        lines = [f"digraph {_graph_name(name, n)} {{", "  rankdir=BT;",
                 "  node [shape=ellipse];"]
        for x in g.nodes:
            attrs = [f"label={_dot_quote(str(x.literal) + (x.sign or ''))}"]
            if x.tag is not None:
                attrs.append(f"xlabel={_dot_quote(x.tag)}")
            if x.sign is not None:
                attrs.append(f"color={_SIGN_COLOR[x.sign]}")
            if x == g.subject:
                attrs.append("peripheries=2")
            lines.append(f"  {ids[x]} [{', '.join(attrs)}];")
        for p in g.edges:
            attrs = [f"style={'dotted' if p.kind == SUPP else 'solid'}",
                     f"label={_dot_quote(p.kind + (p.pair_sign or ''))}"]
            if p.pair_sign is not None:
                attrs.append(f"color={_SIGN_COLOR[p.pair_sign]}")
            lines.append(f"  {ids[p.source]} -> {ids[p.target]} [{', '.join(attrs)}];")
        lines.append("}")
        out.append("\n".join(lines))
    return "\n".join(out)


# -- attack trees ----------------------------------------------------------------------

def _node_label(f: ABAFramework | None, node: AttackTreeNode) -> str:
    if f is None:
        return f"{node.argument}{node.sign}"
    return f"{node.argument}{node.sign}: {f.argument(node.argument).conclusion}"


def tree_text(t: AttackTree, color: bool = False) -> str:
    lines = []

    def visit(node, depth):
        label = _paint(_node_label(t.framework, node), node.sign, color)
        lines.append("  " * depth + label + ("  (repeat)" if node.is_repeat else ""))
        for c in node.children:
            visit(c, depth + 1)

    visit(t.root, 0)
    return "\n".join(lines)


def tree_to_dict(t: AttackTree) -> dict:
    def node(n: AttackTreeNode) -> dict:
        d = {"argument": n.argument, "sign": n.sign,
             "children": [node(c) for c in n.children]}
        if n.is_repeat:
            d["repeat"] = True
        return d

    return {
        "extension": sorted(t.extension, key=lambda i: int(i[1:])),
        "choice": {k: v for k, v in t.choice},
        "root": node(t.root),
    }


def tree_from_dict(d: dict) -> AttackTree:
    def node(x: dict) -> AttackTreeNode:
        rep = (x["argument"], x["sign"]) if x.get("repeat") else None
        return AttackTreeNode(x["argument"], x["sign"],
                              tuple(node(c) for c in x["children"]), rep)

    return AttackTree(node(d["root"]), frozenset(d["extension"]),
                      tuple(sorted(d.get("choice", {}).items())))


def tree_dot(t: AttackTree, name: str = "attack_tree") -> str:
    """Tree edges point from attacker (child) to attacked (parent)."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    counter = [0]

    def visit(node, ancestors):
        nid = f"n{counter[0]}"
        counter[0] += 1
        attrs = [f"label={_dot_quote(_node_label(t.framework, node))}",
                 f"color={_SIGN_COLOR[node.sign]}"]
        if node.is_repeat:
            attrs.append("style=dashed")
        lines.append(f"  {nid} [{', '.join(attrs)}];")
        if node.is_repeat:
            back = ancestors.get(node.repeat_of)
            if back is not None:
                lines.append(f"  {nid} -> {back} [style=dashed, constraint=false, label=\"repeat\"];")
            return nid
        ancestors = {**ancestors, node.key: nid}
        for c in node.children:
            cid = visit(c, ancestors)
            lines.append(f"  {cid} -> {nid};")
        return nid

    visit(t.root, {})
    lines.append("}")
    return "\n".join(lines)


# -- solver-level items ----------------------------------------------------------------

def answer_sets_text(sets: Iterable[AnswerSet]) -> str:
    return "\n".join(f"[{i}] {s}" for i, s in enumerate(sets))


def answer_sets_to_dict(sets: Iterable[AnswerSet]) -> dict:
    return {"answer_sets": [[str(l) for l in sorted(s.literals)] for s in sets]}


def framework_text(f: ABAFramework) -> str:
    lines = ["rules:"]
    lines += [f"  {c}" for c in f.rules]
    lines.append("assumptions: " + format_literal_set(f.assumptions))
    lines.append("contraries:")
    lines += [f"  {a} -> {f.contrary(a)}" for a in sorted(f.assumptions)]
    return "\n".join(lines)


def framework_to_dict(f: ABAFramework) -> dict:
    return {
        "rules": [str(c) for c in f.rules],
        "assumptions": [str(a) for a in sorted(f.assumptions)],
        "contrary": {str(a): str(f.contrary(a)) for a in sorted(f.assumptions)},
        "language": [str(l) for l in sorted(f.language)],
    }


def arguments_text(args: Iterable[Argument]) -> str:
    return "\n".join(str(a) for a in args)


def argument_to_dict(a: Argument) -> dict:
    return {
        "id": a.id,
        "conclusion": str(a.conclusion),
        "ap": [str(x) for x in sorted(a.ap)],
        "fp": [str(x) for x in sorted(a.fp)],
        "kind": a.kind,
    }


def extensions_text(exts: Iterable[Extension], sets: Iterable[AnswerSet] = ()) -> str:
    sets = list(sets)
    lines = []
    for i, e in enumerate(exts):
        line = f"[{i}] {{{', '.join(e)}}}"
        if i < len(sets):
            line += f"  (answer set {sets[i]})"
        lines.append(line)
    return "\n".join(lines)


def extension_to_dict(e: Extension) -> dict:
    return {
        "members": list(e),
        "assumption_base": [str(x) for x in sorted(e.assumption_base)],
        "semantics": e.semantics,
    }


# -- entry points ----------------------------------------------------------------------

def export_text(item, cfg: RenderConfig | None = None) -> str:
    color = bool(cfg and cfg.color)
    if isinstance(item, Justification):
        return justification_text(item, color)
    if isinstance(item, AttackTree):
        return tree_text(item, color)
    if isinstance(item, ABAFramework):
        return framework_text(item)
    if isinstance(item, (list, tuple)):
        return "\n\n".join(export_text(x, cfg) for x in item)
    return str(item)


def _to_json_obj(item):
    if isinstance(item, Justification):
        return justification_to_dict(item)
    if isinstance(item, AttackTree):
        return tree_to_dict(item)
    if isinstance(item, ABAFramework):
        return framework_to_dict(item)
    if isinstance(item, Argument):
        return argument_to_dict(item)
    if isinstance(item, Extension):
        return extension_to_dict(item)
    if isinstance(item, AnswerSet):
        return [str(l) for l in sorted(item.literals)]
    if isinstance(item, (list, tuple)):
        return [_to_json_obj(x) for x in item]
    return item


def export_json(item, cfg: RenderConfig | None = None) -> str:
    return dumps(_to_json_obj(item))


def export_dot(item, cfg: RenderConfig | None = None) -> str:
    if isinstance(item, Justification):
        return justification_dot(item)
    if isinstance(item, AttackTree):
        return tree_dot(item)
    if isinstance(item, (list, tuple)):
        parts = []
        for n, x in enumerate(item, start=1):
            if isinstance(x, AttackTree):
                parts.append(tree_dot(x, f"attack_tree_{n}"))
            else:
                parts.append(justification_dot(x, f"justification{n}"))
        return "\n".join(p for p in parts if p)
    raise TypeError(f"cannot render {type(item).__name__} as DOT")


def render(item, cfg: RenderConfig) -> str:
    fn = {TEXT: export_text, JSON: export_json, DOT: export_dot}[cfg.format]
    return fn(item, cfg)


def write(item, cfg: RenderConfig, stream: TextIO | None = None):
    text = render(item, cfg)
    if stream is not None:
        stream.write(text if text.endswith("\n") else text + "\n")
    else:
        cfg.write(text)
