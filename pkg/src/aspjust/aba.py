"""Translated ABA frameworks of logic programs.

Rules are the clauses, assumptions are the NAF literals, and the contrary of
``not l`` is ``l``. Arguments are enumerated by signature (conclusion,
assumption-premises, fact-premises) with one minimal witness derivation each.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple

from .errors import AspJustError, LiteralNotInLanguageError, UnknownArgumentError
from .program import AnswerSet, Clause, Literal, LogicProgram, format_literal_set

ASSUMPTION, RULE, FACT = "assumption", "rule", "fact"
_KIND_RANK = {ASSUMPTION: 0, RULE: 1, FACT: 2}

STABLE, ADMISSIBLE = "stable", "admissible"


@dataclass(frozen=True)
class Derivation:
    """A node of an argument's derivation tree.

    ``rule`` is the index of the rule that expands the node, or of the fact
    clause for fact leaves; assumption leaves have ``rule=None``.
    """

    literal: Literal
    children: tuple[Derivation, ...] = ()
    rule: int | None = None

    @property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)

    def leaves(self) -> Iterable[Literal]:
        if not self.children:
            yield self.literal
        for c in self.children:
            yield from c.leaves()

    def pretty(self, indent: int = 0) -> str:
        lines = ["  " * indent + str(self.literal)]
        lines += [c.pretty(indent + 1) for c in self.children]
        return "\n".join(lines)


@dataclass(frozen=True)
class Argument:
    index: int
    conclusion: Literal
    ap: frozenset[Literal]
    fp: frozenset[Literal]
    witness: Derivation

    @property
    def id(self) -> str:
        return f"A{self.index}"

    @property
    def kind(self) -> str:
        if not self.fp and self.ap == {self.conclusion}:
            return ASSUMPTION
        if not self.ap and self.fp == {self.conclusion}:
            return FACT
        return RULE

    @property
    def signature(self) -> tuple[Literal, frozenset[Literal], frozenset[Literal]]:
        return self.conclusion, self.ap, self.fp

    def __str__(self):
        return (
            f"{self.id}: ({format_literal_set(self.ap)}, "
            f"{format_literal_set(self.fp)}) |- {self.conclusion}"
        )


class Attack(NamedTuple):
    attacker: str
    attacked: str
    assumption: Literal


class AttackRelation:
    """The full attack graph, indexed both ways."""

    def __init__(self, edges: Iterable[Attack], order: dict[str, int]):
        self.edges = frozenset(edges)
        self._order = order
        self._attackers: dict[str, list[str]] = {}
        self._targets: dict[str, list[str]] = {}
        for e in self.edges:
            self._attackers.setdefault(e.attacked, []).append(e.attacker)
            self._targets.setdefault(e.attacker, []).append(e.attacked)
        for d in (self._attackers, self._targets):
            for k, v in d.items():
                d[k] = sorted(set(v), key=order.__getitem__)

    def attackers(self, argument_id: str) -> list[str]:
        return self._attackers.get(argument_id, [])

    def attacked_by(self, argument_id: str) -> list[str]:
        return self._targets.get(argument_id, [])

    def attacks(self, a: str, b: str) -> bool:
        return a in self._attackers.get(b, ())

    def sorted_edges(self) -> list[Attack]:
        o = self._order
        return sorted(self.edges, key=lambda e: (o[e.attacker], o[e.attacked], e.assumption))

    def __iter__(self):
        return iter(self.sorted_edges())

    def __len__(self):
        return len(self.edges)

    def __contains__(self, edge):
        return edge in self.edges


@dataclass(frozen=True)
class Extension:
    members: frozenset[str]
    assumption_base: frozenset[Literal]
    semantics: str = STABLE

    def __contains__(self, argument_id):
        return argument_id in self.members

    def __iter__(self):
        return iter(sorted(self.members, key=lambda i: int(i[1:])))

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True, eq=False)
class ABAFramework:
    program: LogicProgram

    @cached_property
    def rules(self) -> tuple[Clause, ...]:
        return self.program.clauses

    @cached_property
    def assumptions(self) -> frozenset[Literal]:
        return self.program.naf_literals

    @cached_property
    def language(self) -> frozenset[Literal]:
        return self.program.literals | self.program.naf_literals

    def contrary(self, assumption: Literal) -> Literal:
        if assumption not in self.assumptions:
            raise LiteralNotInLanguageError(assumption)
        return assumption.classical

    @cached_property
    def arguments(self) -> tuple[Argument, ...]:
        return tuple(_build_arguments(self))

    @cached_property
    def attacks(self) -> AttackRelation:
        return compute_attacks(self, self.arguments)

    @cached_property
    def _by_id(self) -> dict[str, Argument]:
        return {a.id: a for a in self.arguments}

    @cached_property
    def _by_conclusion(self) -> dict[Literal, list[Argument]]:
        out: dict[Literal, list[Argument]] = {}
        for a in self.arguments:
            out.setdefault(a.conclusion, []).append(a)
        return out

    def argument(self, argument_id: str) -> Argument:
        try:
            return self._by_id[argument_id]
        except KeyError:
            raise UnknownArgumentError(argument_id) from None

    def arguments_for(self, k: Literal) -> list[Argument]:
        """All arguments concluding ``k`` (empty when ``k`` is underivable)."""
        if k not in self.language:
            raise LiteralNotInLanguageError(k)
        return list(self._by_conclusion.get(k, ()))

    def order(self) -> dict[str, int]:
        return {a.id: a.index for a in self.arguments}


@lru_cache(maxsize=256)
def translate(p: LogicProgram) -> ABAFramework:
    if not p.is_ground:
        raise AspJustError("only ground programs can be translated")
    return ABAFramework(p)


def _build_arguments(f: ABAFramework) -> list[Argument]:
    """Least fixpoint over signatures, keeping a minimal witness per signature.

    Witness preference is (node count, rule index); an update only happens on a
    strict improvement, so the loop terminates.
    """
    best: dict[tuple, tuple[tuple[int, int], Derivation]] = {}
    by_conc: dict[Literal, list[tuple]] = {}

    def offer(sig, key, witness):
        old = best.get(sig)
        if old is None:
            by_conc.setdefault(sig[0], []).append(sig)
        elif key >= old[0]:
            return False
        best[sig] = (key, witness)
        return True

    for a in sorted(f.assumptions):
        offer((a, frozenset([a]), frozenset()), (1, -1), Derivation(a))
    for i, c in enumerate(f.rules):
        if c.is_fact:
            offer((c.head, frozenset(), frozenset([c.head])), (1, i), Derivation(c.head, (), i))

    changed = True
    while changed:
        changed = False
        for i, c in enumerate(f.rules):
            if c.is_fact:
                continue
            options = [list(by_conc.get(b, ())) for b in c.body]
            if not all(options):
                continue
            for combo in itertools.product(*options):
                ap = frozenset().union(*(s[1] for s in combo))
                fp = frozenset().union(*(s[2] for s in combo))
                children = tuple(best[s][1] for s in combo)
                size = 1 + sum(best[s][0][0] for s in combo)
                if offer((c.head, ap, fp), (size, i), Derivation(c.head, children, i)):
                    changed = True

    def sort_key(sig):
        conc, ap, fp = sig
        if not fp and ap == {conc}:
            kind = ASSUMPTION
        elif not ap and fp == {conc}:
            kind = FACT
        else:
            kind = RULE
        return _KIND_RANK[kind], conc, tuple(sorted(ap)), tuple(sorted(fp))

    sigs = sorted(best, key=sort_key)
    return [
        Argument(n, sig[0], sig[1], sig[2], best[sig][1])
        for n, sig in enumerate(sigs, start=1)
    ]


def enumerate_arguments(f: ABAFramework) -> list[Argument]:
    return list(f.arguments)


def compute_attacks(f: ABAFramework, args: Iterable[Argument]) -> AttackRelation:
    args = list(args)
    by_conc: dict[Literal, list[Argument]] = {}
    for a in args:
        by_conc.setdefault(a.conclusion, []).append(a)
    edges = [
        Attack(a.id, b.id, beta)
        for b in args
        for beta in b.ap
        for a in by_conc.get(f.contrary(beta), ())
    ]
    return AttackRelation(edges, {a.id: a.index for a in args})


def _members_for(f: ABAFramework, base: frozenset[Literal]) -> frozenset[str]:
    return frozenset(a.id for a in f.arguments if a.ap <= base)


def _lambda(f: ABAFramework, members: Iterable[str]) -> frozenset[Literal]:
    concluded = {f.argument(i).conclusion for i in members}
    return frozenset(b for b in f.assumptions if b.classical not in concluded)


def stable_extensions(f: ABAFramework) -> list[Extension]:
    """Stable extensions via fixpoints of assumption bases.

    A base D is accepted iff D equals the set of assumptions whose contrary no
    argument built on D concludes. Assumptions with an underivable contrary are
    in every such base; those whose contrary has a premise-free argument are in
    none, so only the rest are searched.
    """
    unconditional = {a.conclusion for a in f.arguments if not a.ap}
    derivable = {a.conclusion for a in f.arguments}
    fixed = frozenset(b for b in f.assumptions if b.classical not in derivable)
    free = sorted(
        b for b in f.assumptions
        if b.classical in derivable and b.classical not in unconditional
    )
    bit = {b: 1 << n for n, b in enumerate(free)}
    fixed_ok = [a for a in f.arguments if a.ap <= fixed]
    rest = []
    for a in f.arguments:
        if a.ap <= fixed:
            continue
        extra = a.ap - fixed
        if all(b in bit for b in extra):
            rest.append((sum(bit[b] for b in extra), a))
    contested = {b.classical: bit[b] for b in free}

    found = []
    for mask in range(1 << len(free)):
        concluded_mask = 0
        for a in fixed_ok:
            concluded_mask |= contested.get(a.conclusion, 0)
        for need, a in rest:
            if need & ~mask == 0:
                concluded_mask |= contested.get(a.conclusion, 0)
        # free assumptions in the base must be exactly the unattacked ones
        if concluded_mask ^ ((1 << len(free)) - 1) != mask:
            continue
        base = fixed | frozenset(b for b in free if mask & bit[b])
        found.append(Extension(_members_for(f, base), base, STABLE))

    def key(e):
        return sorted(f.argument(i).conclusion for i in e.members
                      if not f.argument(i).conclusion.naf)

    return sorted(found, key=key)


def is_stable(f: ABAFramework, members: Iterable[str]) -> bool:
    members = frozenset(members)
    return members == _members_for(f, _lambda(f, members))


def is_admissible(f: ABAFramework, members: Iterable[str]) -> bool:
    members = frozenset(members)
    for m in members:
        f.argument(m)
    att = f.attacks
    for b in members:
        for a in att.attackers(b):
            if a in members:
                return False
            if not any(d in members for d in att.attackers(a)):
                return False
    return True


def corresponding_stable_extension(f: ABAFramework, s: AnswerSet) -> Extension:
    members = _members_for(f, s.delta)
    if _lambda(f, members) != s.delta:
        raise AspJustError(
            f"arguments supported by Delta of {s} do not form a stable extension"
        )
    return Extension(members, s.delta, STABLE)


def corresponding_arguments(f: ABAFramework, e: Extension, k: Literal) -> list[Argument]:
    return [a for a in f.arguments_for(k) if a.id in e.members]
