"""Shared test utilities: data paths, golden parsing, a random program corpus
and an answer-set oracle that does not use the package's solver."""
from __future__ import annotations

import itertools
import json
import random
import re
from functools import lru_cache
from pathlib import Path

from aspjust import Clause, JustLiteral, JustPair, Literal, LogicProgram, lit, load_program

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"


def program(name: str) -> LogicProgram:
    return load_program(DATA / name)


def golden(name: str) -> dict:
    return json.loads((GOLDEN / name).read_text())


# -- golden id canonicalization ---------------------------------------------------

def signature_of(entry) -> tuple:
    conc, ap, fp = entry
    return lit(conc), frozenset(map(lit, ap)), frozenset(map(lit, fp))


def id_map(f, arguments: dict) -> dict[str, str]:
    """Map the reference ids of a golden file to the framework's own ids."""
    ours = {a.signature: a.id for a in f.arguments}
    return {ref: ours[signature_of(entry)] for ref, entry in arguments.items()}


_LABELLED = re.compile(r"^(.*\S)([+-])\[(\w+)\]$")
_PAIR = re.compile(r"^(supp_rel|att_rel)([+-]?)\((.+), (.+)\)$")


def parse_jl(text: str, ids: dict | None = None) -> JustLiteral:
    m = _LABELLED.match(text.strip())
    if m is None:
        return JustLiteral(lit(text))
    tag = m.group(3)
    if ids and tag in ids:
        tag = ids[tag]
    return JustLiteral(lit(m.group(1)), m.group(2), tag)


def parse_pair(text: str, ids: dict | None = None) -> JustPair:
    m = _PAIR.match(text.strip())
    assert m, text
    return JustPair(m.group(1), parse_jl(m.group(3), ids), parse_jl(m.group(4), ids),
                    m.group(2) or None)


def parse_items(items, ids=None) -> frozenset:
    """A golden set: the subject literal plus pair strings."""
    out = set()
    for x in items:
        out.add(parse_pair(x, ids) if x.startswith(("supp_rel", "att_rel")) else parse_jl(x, ids))
    return frozenset(out)


def tree_shape(node, ids_back: dict | None = None):
    """Nested-list form of a tree: [label, child, child, ...]."""
    name = ids_back.get(node.argument, node.argument) if ids_back else node.argument
    label = f"{name}{node.sign}" + (" repeat" if node.is_repeat else "")
    return [label] + [tree_shape(c, ids_back) for c in node.children]


# -- random corpus -----------------------------------------------------------------

ATOMS = "abcdef"


def random_program(rng: random.Random, max_atoms=6, max_clauses=10, max_body=3) -> LogicProgram:
    atoms = ATOMS[: rng.randint(1, max_atoms)]

    def classical():
        return Literal(rng.choice(atoms), rng.random() < 0.3)

    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        body = []
        for _ in range(rng.randint(0, max_body)):
            l = classical()
            body.append(l.as_naf() if rng.random() < 0.55 else l)
        clauses.append(Clause(classical(), tuple(body)))
    return LogicProgram(tuple(clauses))


@lru_cache(maxsize=None)
def corpus(n: int = 500, seed: int = 20240611) -> tuple[LogicProgram, ...]:
    rng = random.Random(seed)
    return tuple(random_program(rng) for _ in range(n))


@lru_cache(maxsize=None)
def consistent_corpus(n: int = 500, seed: int = 20240611):
    """First ``n`` generated programs with a consistent answer set, paired with
    their oracle answer sets."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        p = random_program(rng)
        found, inconsistent = Oracle(p).answer_sets()
        if found and not inconsistent:
            out.append((p, found))
    return tuple(out)


# -- brute-force oracle --------------------------------------------------------------

class Oracle:
    """Answer sets by checking candidate sets directly with bitmasks.

    Candidates are every consistent subset of Lit_P (each atom positive,
    negative or absent) plus Lit_P itself; an inconsistent proper subset can
    never equal a reduct's answer set, which is either consistent or Lit_P.
    """

    def __init__(self, p: LogicProgram):
        atoms = sorted({c.head.atom for c in p.clauses}
                       | {b.atom for c in p.clauses for b in c.body})
        self.atoms = atoms
        self.lits = [Literal(a, neg) for a in atoms for neg in (False, True)]
        self.bit = {l: 1 << i for i, l in enumerate(self.lits)}
        self.full = (1 << len(self.lits)) - 1
        self.rules = []
        for c in p.clauses:
            pos = naf = 0
            for b in c.body:
                if b.naf:
                    naf |= self.bit[b.classical]
                else:
                    pos |= self.bit[b]
            self.rules.append((self.bit[c.head], pos, naf))

    def _least(self, s: int) -> int:
        kept = [(h, pos) for h, pos, naf in self.rules if not naf & s]
        model, changed = 0, True
        while changed:
            changed = False
            for h, pos in kept:
                if not h & model and pos & model == pos:
                    model |= h
                    changed = True
        for i in range(0, len(self.lits), 2):
            if model >> i & 3 == 3:
                return self.full
        return model

    def to_set(self, mask: int) -> frozenset[Literal]:
        return frozenset(l for l in self.lits if mask & self.bit[l])

    def candidates(self):
        for choice in itertools.product((0, 1, 2), repeat=len(self.atoms)):
            mask = 0
            for i, c in enumerate(choice):
                if c:
                    mask |= 1 << (2 * i + c - 1)
            yield mask

    def answer_sets(self) -> tuple[list[frozenset[Literal]], bool]:
        """(consistent answer sets, whether Lit_P is an answer set)."""
        found = [self.to_set(m) for m in self.candidates() if self._least(m) == m]
        inconsistent = self._least(self.full) == self.full
        return found, inconsistent


# -- minimal DOT reader ---------------------------------------------------------------

_DOT_TOKEN = re.compile(
    r'\s*(?:(?P<str>"(?:[^"\\]|\\.)*")|(?P<arrow>->|--)|(?P<id>[A-Za-z_][A-Za-z0-9_.]*|-?[0-9.]+)'
    r'|(?P<punct>[{}\[\];,=])|(?P<comment>//[^\n]*))'
)


def _dot_tokens(text):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _DOT_TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise SyntaxError(f"bad DOT input at {pos}: {text[pos:pos + 20]!r}")
        pos = m.end()
        if m.lastgroup == "comment":
            continue
        out.append((m.lastgroup, m.group(m.lastgroup)))
    return out


def parse_dot(text: str) -> list[dict]:
    """Parse a sequence of digraphs into {name, nodes, edges} dictionaries.

    Covers the subset of the DOT grammar: graph/node/edge statements, attribute
    lists and graph-level ``key=value`` statements.
    """
    toks = _dot_tokens(text)
    i = 0
    graphs = []

    def take(kind=None, value=None):
        nonlocal i
        if i >= len(toks):
            raise SyntaxError("unexpected end of DOT input")
        k, v = toks[i]
        if (kind and k != kind) or (value and v != value):
            raise SyntaxError(f"expected {value or kind}, got {v!r}")
        i += 1
        return v

    def peek():
        return toks[i] if i < len(toks) else (None, None)

    def unquote(v):
        return v[1:-1].replace('\\"', '"') if v.startswith('"') else v

    def attrs():
        out = {}
        take("punct", "[")
        while peek()[1] != "]":
            key = unquote(take())
            take("punct", "=")
            out[key] = unquote(take())
            if peek()[1] in (",", ";"):
                take()
        take("punct", "]")
        return out

    while i < len(toks):
        if take("id") != "digraph":
            raise SyntaxError("expected 'digraph'")
        name = unquote(take()) if peek()[1] != "{" else ""
        take("punct", "{")
        g = {"name": name, "nodes": {}, "edges": [], "attrs": {}}
        while peek()[1] != "}":
            first = unquote(take())
            if first in ("node", "edge", "graph") and peek()[1] == "[":
                attrs()
            elif peek()[1] == "=":
                take()
                g["attrs"][first] = unquote(take())
            elif peek()[0] == "arrow":
                if take() != "->":
                    raise SyntaxError("undirected edge in digraph")
                second = unquote(take())
                a = attrs() if peek()[1] == "[" else {}
                g["edges"].append((first, second, a))
            else:
                a = attrs() if peek()[1] == "[" else {}
                g["nodes"][first] = a
            if peek()[1] == ";":
                take()
        take("punct", "}")
        for s, t, _ in g["edges"]:
            if s not in g["nodes"] or t not in g["nodes"]:
                raise SyntaxError(f"edge {s}->{t} uses an undeclared node")
        graphs.append(g)
    return graphs
