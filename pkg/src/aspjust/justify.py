"""Basic and labelled justifications, and BABAS/LABAS justifications of literals.

A justification is a set of ``supp_rel`` / ``att_rel`` pairs between literals,
obtained by flattening Attack Trees. Positive justifications come from one
tree of one corresponding argument; negative ones collect every tree of every
argument for the literal.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .aba import ABAFramework, Argument, FACT, corresponding_arguments, \
    corresponding_stable_extension, translate
from .attack_trees import MINUS, PLUS, AttackTree, enumerate_attack_trees
from .errors import PolarityError, TreeConstructionError
from .program import AnswerSet, Literal, LogicProgram, ground_program, naf_completion

SUPP, ATT = "supp_rel", "att_rel"
POSITIVE, NEGATIVE = "positive", "negative"
BASIC, LABELLED = "basic", "labelled"
ASM = "asm"


def _tag_key(tag):
    if tag is None:
        return (0, 0)
    if tag == ASM:
        return (1, 0)
    if tag == FACT:
        return (2, 0)
    return (3, int(tag[1:]))


@dataclass(frozen=True)
class JustLiteral:
    """A literal as it occurs in a justification, optionally signed and tagged.

    ``tag`` is ``"asm"``, ``"fact"`` or an argument id such as ``"A10"``.
    """

    literal: Literal
    sign: str | None = None
    tag: str | None = None

    @property
    def labelled(self) -> bool:
        return self.sign is not None

    def strip(self) -> JustLiteral:
        return JustLiteral(self.literal)

    def sort_key(self):
        return self.literal, self.sign or "", _tag_key(self.tag)

    def __str__(self):
        if self.sign is None:
            return str(self.literal)
        return f"{self.literal}{self.sign}[{self.tag}]"


@dataclass(frozen=True)
class JustPair:
    kind: str
    source: JustLiteral
    target: JustLiteral
    pair_sign: str | None = None

    def strip(self) -> JustPair:
        return JustPair(self.kind, self.source.strip(), self.target.strip())

    def sort_key(self):
        return self.source.sort_key(), self.target.sort_key(), self.kind, self.pair_sign or ""

    def __str__(self):
        return f"{self.kind}{self.pair_sign or ''}({self.source}, {self.target})"


def sorted_pairs(pairs: Iterable[JustPair]) -> list[JustPair]:
    return sorted(pairs, key=JustPair.sort_key)


@dataclass(frozen=True)
class PairSet:
    """One member of a justification: the (labelled) subject plus its pairs."""

    subject: JustLiteral
    pairs: frozenset[JustPair]

    def items(self) -> frozenset:
        """The set as written mathematically, subject included."""
        return frozenset([self.subject]) | self.pairs

    def __str__(self):
        parts = [str(self.subject)] + [str(p) for p in sorted_pairs(self.pairs)]
        return "{" + ", ".join(parts) + "}"


@dataclass(frozen=True)
class Justification:
    subject: JustLiteral
    polarity: str
    variant: str
    sets: tuple[PairSet, ...]

    @property
    def positive(self) -> bool:
        return self.polarity == POSITIVE

    def as_sets(self) -> list[frozenset]:
        return [s.items() for s in self.sets]

    def __iter__(self) -> Iterator[PairSet]:
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def __str__(self):
        if self.positive:
            return str(self.sets[0])
        return "{" + ", ".join(str(s) for s in self.sets) + "}"


# -- flattening of single trees ---------------------------------------------------

def _framework(t: AttackTree, f: ABAFramework | None) -> ABAFramework:
    f = f or t.framework
    if f is None:
        raise TreeConstructionError("tree carries no framework; pass one explicitly")
    return f


def _is_fact_argument(a: Argument) -> bool:
    return not a.ap and a.fp == {a.conclusion}


def _node_shapes(t: AttackTree) -> set[tuple[str, str, tuple[str, ...]]]:
    # a node's pairs depend only on its argument, sign and child arguments;
    # repeat markers stand for an occurrence that is already counted
    return {
        (n.argument, n.sign, tuple(c.argument for c in n.children))
        for n in t.nodes()
        if not n.is_repeat
    }


@lru_cache(maxsize=1 << 16)
def _basic_pairs(f: ABAFramework, arg_id: str, kids: tuple[str, ...]) -> frozenset[JustPair]:
    a = f.argument(arg_id)
    conc = JustLiteral(a.conclusion)
    out = {JustPair(SUPP, JustLiteral(k), conc) for k in (a.ap | a.fp) - {a.conclusion}}
    for kid in kids:
        m = f.argument(kid).conclusion
        for k in a.ap:
            if k.classical == m:
                out.add(JustPair(ATT, JustLiteral(m), JustLiteral(k)))
    return frozenset(out)


@lru_cache(maxsize=1 << 16)
def _labelled_pairs(f: ABAFramework, arg_id: str, sign: str,
                    kids: tuple[str, ...]) -> frozenset[JustPair]:
    a = f.argument(arg_id)
    out = set()
    if sign == PLUS:
        conc = JustLiteral(a.conclusion, PLUS, a.id)
        for k in a.ap - {a.conclusion}:
            out.add(JustPair(SUPP, JustLiteral(k, PLUS, ASM), conc, PLUS))
        for k in a.fp - {a.conclusion}:
            out.add(JustPair(SUPP, JustLiteral(k, PLUS, FACT), conc, PLUS))
        for kid in kids:
            m = f.argument(kid)
            for k in a.ap:
                if k.classical == m.conclusion:
                    out.add(JustPair(ATT, JustLiteral(m.conclusion, MINUS, m.id),
                                     JustLiteral(k, PLUS, ASM), MINUS))
    elif len(kids) == 1:
        m = f.argument(kids[0])
        tag = FACT if _is_fact_argument(m) else m.id
        attacker = JustLiteral(m.conclusion, PLUS, tag)
        conc = JustLiteral(a.conclusion, MINUS, a.id)
        for k in a.ap:
            if k.classical != m.conclusion:
                continue
            attacked = JustLiteral(k, MINUS, ASM)
            if k != a.conclusion:
                out.add(JustPair(SUPP, attacked, conc, MINUS))
            out.add(JustPair(ATT, attacker, attacked, PLUS))
    return frozenset(out)


def basic_justification(t: AttackTree, f: ABAFramework | None = None) -> frozenset[JustPair]:
    f = _framework(t, f)
    shapes = {(arg, kids) for arg, _, kids in _node_shapes(t)}
    return frozenset().union(*(_basic_pairs(f, arg, kids) for arg, kids in shapes))


def labelled_justification(t: AttackTree, f: ABAFramework | None = None) -> frozenset[JustPair]:
    f = _framework(t, f)
    return frozenset().union(*(_labelled_pairs(f, *shape) for shape in _node_shapes(t)))


def naf_plus(j: Justification | PairSet) -> frozenset[Literal]:
    """Assumptions occurring with sign '+' and tag asm."""
    sets = j.sets if isinstance(j, Justification) else (j,)
    out = set()
    for s in sets:
        for x in (s.subject, *(l for p in s.pairs for l in (p.source, p.target))):
            if x.sign == PLUS and x.tag == ASM:
                out.add(x.literal)
    return frozenset(out)


# -- justifications of literals w.r.t. answer sets --------------------------------

@dataclass(frozen=True)
class _Context:
    program: LogicProgram
    framework: ABAFramework
    answer_set: AnswerSet
    extension: object


def _context(p: LogicProgram, s) -> _Context:
    p = ground_program(p)
    f = translate(p)
    if not isinstance(s, AnswerSet):
        s = naf_completion(p, s)
    return _Context(p, f, s, corresponding_stable_extension(f, s))


def _check_language(ctx: _Context, k: Literal):
    # raises LiteralNotInLanguageError
    ctx.framework.arguments_for(k)


def _positive_options(ctx: _Context, k: Literal, argument: str | None):
    _check_language(ctx, k)
    if k not in ctx.answer_set.with_naf:
        raise PolarityError(f"{k} is not in {ctx.answer_set}; ask for a negative justification")
    candidates = corresponding_arguments(ctx.framework, ctx.extension, k)
    if argument is not None:
        ctx.framework.argument(argument)
        candidates = [a for a in candidates if a.id == argument]
        if not candidates:
            raise TreeConstructionError(
                f"{argument} is not a corresponding argument of {k} in the stable extension"
            )
    return candidates


def _check_negative(ctx: _Context, k: Literal):
    _check_language(ctx, k)
    if k in ctx.answer_set.with_naf:
        raise PolarityError(f"{k} is in {ctx.answer_set}; ask for a positive justification")
    assert not (not k.naf and k in ctx.program.facts), "facts belong to every answer set"


def _positive_subject(ctx: _Context, k: Literal, a: Argument, variant: str) -> JustLiteral:
    if variant == BASIC:
        return JustLiteral(k)
    if k.naf:
        return JustLiteral(k, PLUS, ASM)
    if k in ctx.program.facts:
        return JustLiteral(k, PLUS, FACT)
    return JustLiteral(k, PLUS, a.id)


def _flatten(variant):
    return basic_justification if variant == BASIC else labelled_justification


def _positive_sets(ctx, k, argument, variant):
    flat = _flatten(variant)
    for a in _positive_options(ctx, k, argument):
        subject = _positive_subject(ctx, k, a, variant)
        for t in enumerate_attack_trees(ctx.framework, ctx.extension, a):
            yield PairSet(subject, flat(t, ctx.framework))


def _positive(p, s, k, argument, tree, variant) -> Justification:
    ctx = _context(p, s)
    if tree < 0:
        raise TreeConstructionError("tree index must be non-negative")
    a = _positive_options(ctx, k, argument)[0]
    trees = enumerate_attack_trees(ctx.framework, ctx.extension, a)
    if tree >= len(trees):
        raise TreeConstructionError(f"{a.id} has {len(trees)} positive Attack Tree(s), no index {tree}")
    chosen = PairSet(_positive_subject(ctx, k, a, variant),
                     _flatten(variant)(trees[tree], ctx.framework))
    return Justification(chosen.subject, POSITIVE, variant, (chosen,))


def _positive_all(p, s, k, argument, variant) -> list[Justification]:
    ctx = _context(p, s)
    out, seen = [], set()
    for ps in _positive_sets(ctx, k, argument, variant):
        if ps not in seen:
            seen.add(ps)
            out.append(Justification(ps.subject, POSITIVE, variant, (ps,)))
    return out


def _negative(p, s, k, variant) -> Justification:
    ctx = _context(p, s)
    _check_negative(ctx, k)
    flat = _flatten(variant)
    sets: dict[PairSet, None] = {}
    for a in ctx.framework.arguments_for(k):
        if variant == BASIC:
            subject = JustLiteral(k)
        else:
            subject = JustLiteral(k, MINUS, ASM if k.naf else a.id)
        for t in enumerate_attack_trees(ctx.framework, ctx.extension, a):
            sets.setdefault(PairSet(subject, flat(t, ctx.framework)))
    if variant == BASIC:
        subject = JustLiteral(k)
    else:
        subject = JustLiteral(k, MINUS, ASM if k.naf else None)
    return Justification(subject, NEGATIVE, variant, tuple(sets))


def babas_positive(p: LogicProgram, s, k: Literal, argument: str | None = None,
                   tree: int = 0) -> Justification:
    """A positive BABAS justification of ``k``.

    ``argument`` picks one corresponding argument (default: the first one in
    id order); ``tree`` indexes its positive Attack Trees.
    """
    return _positive(p, s, k, argument, tree, BASIC)


def babas_positive_all(p: LogicProgram, s, k: Literal,
                       argument: str | None = None) -> list[Justification]:
    return _positive_all(p, s, k, argument, BASIC)


def babas_negative(p: LogicProgram, s, k: Literal) -> Justification:
    return _negative(p, s, k, BASIC)


def labas_positive(p: LogicProgram, s, k: Literal, argument: str | None = None,
                   tree: int = 0) -> Justification:
    return _positive(p, s, k, argument, tree, LABELLED)


def labas_positive_all(p: LogicProgram, s, k: Literal,
                       argument: str | None = None) -> list[Justification]:
    return _positive_all(p, s, k, argument, LABELLED)


def labas_negative(p: LogicProgram, s, k: Literal) -> Justification:
    return _negative(p, s, k, LABELLED)


def justify(p: LogicProgram, s, k: Literal, method: str = "babas") -> Justification:
    """Positive or negative justification, whichever applies to ``k``."""
    ctx = _context(p, s)
    _check_language(ctx, k)
    positive = k in ctx.answer_set.with_naf
    if method == "babas":
        return babas_positive(p, s, k) if positive else babas_negative(p, s, k)
    if method == "labas":
        return labas_positive(p, s, k) if positive else labas_negative(p, s, k)
    raise ValueError(f"unknown method {method!r}")


def justify_all(p: LogicProgram, s, k: Literal, method: str = "babas") -> list[Justification]:
    """Every positive justification of ``k``, or the single negative one."""
    ctx = _context(p, s)
    _check_language(ctx, k)
    if k not in ctx.answer_set.with_naf:
        return [justify(p, s, k, method)]
    variant = {"babas": BASIC, "labas": LABELLED}.get(method)
    if variant is None:
        raise ValueError(f"unknown method {method!r}")
    return _positive_all(p, s, k, None, variant)


# -- graphs ------------------------------------------------------------------------

@dataclass(frozen=True)
class JustGraph:
    nodes: tuple[JustLiteral, ...]
    edges: tuple[JustPair, ...]
    subject: JustLiteral


def justification_graph(j: Justification) -> list[JustGraph]:
    """One graph per pair set; nodes are the subject and every literal in a pair."""
    graphs = []
    for s in j.sets:
        nodes = {s.subject}
        for pair in s.pairs:
            nodes.update((pair.source, pair.target))
        graphs.append(JustGraph(
            tuple(sorted(nodes, key=JustLiteral.sort_key)),
            tuple(sorted_pairs(s.pairs)),
            s.subject,
        ))
    return graphs
