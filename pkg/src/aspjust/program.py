"""Ground logic programs with classical negation and negation as failure.

Covers the answer-set machinery: reduct, least model of a NAF-free program,
answer-set checking and enumeration, and modus-ponens derivability.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import GroundingError, NotAnAnswerSetError

_ATOM_RE = re.compile(r"^([a-zA-Z][a-zA-Z0-9_]*)(?:\((.*)\))?$")


def split_atom(atom: str) -> tuple[str, tuple[str, ...]]:
    """Split a canonical atom string ``p(t1,t2)`` into predicate and terms."""
    m = _ATOM_RE.match(atom)
    if m is None:
        raise ValueError(f"malformed atom {atom!r}")
    args = tuple(m.group(2).split(",")) if m.group(2) is not None else ()
    return m.group(1), args


def is_variable(term: str) -> bool:
    return term[:1].isupper()


@dataclass(frozen=True, order=True)
class Literal:
    """A classical literal ``a`` / ``-a`` or a NAF literal ``not a`` / ``not -a``.

    Field order doubles as the canonical sort key (atom, negation, naf).
    """

    atom: str
    negated: bool = False
    naf: bool = False

    def __post_init__(self):
        if not self.atom:
            raise ValueError("atom name must be nonempty")

    @property
    def classical(self) -> Literal:
        """The corresponding classical literal (naf flag cleared)."""
        return Literal(self.atom, self.negated) if self.naf else self

    @property
    def complement(self) -> Literal:
        return Literal(self.atom, not self.negated, self.naf)

    def as_naf(self) -> Literal:
        if self.naf:
            raise ValueError(f"{self} is already a NAF literal")
        return Literal(self.atom, self.negated, True)

    @property
    def variables(self) -> frozenset[str]:
        _, terms = split_atom(self.atom)
        return frozenset(t for t in terms if is_variable(t))

    def __str__(self):
        text = ("-" if self.negated else "") + self.atom
        return "not " + text if self.naf else text

    def __repr__(self):
        return f"Literal({str(self)!r})"


def lit(text: str) -> Literal:
    """Shorthand constructor: ``lit("not -a")``."""
    text = text.strip()
    naf = False
    if text.startswith("not "):
        naf, text = True, text[4:].strip()
    negated = text.startswith("-")
    return Literal(text.lstrip("-").strip(), negated, naf)


@dataclass(frozen=True)
class Clause:
    head: Literal
    body: tuple[Literal, ...] = ()

    def __post_init__(self):
        if self.head.naf:
            raise ValueError("NAF literals cannot occur in clause heads")
        object.__setattr__(self, "body", tuple(self.body))

    @property
    def is_fact(self) -> bool:
        return not self.body

    @property
    def positive_body(self) -> tuple[Literal, ...]:
        return tuple(b for b in self.body if not b.naf)

    @property
    def naf_body(self) -> tuple[Literal, ...]:
        return tuple(b for b in self.body if b.naf)

    @property
    def variables(self) -> frozenset[str]:
        out = set(self.head.variables)
        for b in self.body:
            out |= b.variables
        return frozenset(out)

    def __str__(self):
        if not self.body:
            return f"{self.head}."
        return f"{self.head} :- {', '.join(map(str, self.body))}."


@dataclass(frozen=True)
class LogicProgram:
    """An ordered list of clauses plus the induced literal universes.

    ``declared_atoms`` lets a program carry atoms that no longer occur in its
    clauses, which is how a reduct keeps the literal universe of its source.
    """

    clauses: tuple[Clause, ...] = ()
    declared_atoms: frozenset[str] = field(default=frozenset())

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))
        object.__setattr__(self, "declared_atoms", frozenset(self.declared_atoms))

    @property
    def herbrand_base(self) -> frozenset[str]:
        atoms = set(self.declared_atoms)
        for c in self.clauses:
            atoms.add(c.head.atom)
            atoms.update(b.atom for b in c.body)
        return frozenset(atoms)

    @property
    def literals(self) -> frozenset[Literal]:
        """Lit_P: every atom of the Herbrand base and its classical negation."""
        return frozenset(
            Literal(a, neg) for a in self.herbrand_base for neg in (False, True)
        )

    @property
    def naf_literals(self) -> frozenset[Literal]:
        return frozenset(l.as_naf() for l in self.literals)

    @property
    def facts(self) -> frozenset[Literal]:
        return frozenset(c.head for c in self.clauses if c.is_fact)

    @property
    def heads(self) -> frozenset[Literal]:
        return frozenset(c.head for c in self.clauses)

    @property
    def is_ground(self) -> bool:
        return not any(c.variables for c in self.clauses)

    @property
    def has_naf(self) -> bool:
        return any(c.naf_body for c in self.clauses)

    def __len__(self):
        return len(self.clauses)

    def __iter__(self):
        return iter(self.clauses)

    def __str__(self):
        return "\n".join(map(str, self.clauses))


def sorted_literals(literals: Iterable[Literal]) -> list[Literal]:
    return sorted(literals)


def format_literal_set(literals: Iterable[Literal]) -> str:
    return "{" + ", ".join(map(str, sorted(literals))) + "}"


# -- grounding ---------------------------------------------------------------

def _substitute(literal: Literal, binding: dict[str, str]) -> Literal:
    pred, terms = split_atom(literal.atom)
    if not terms:
        return literal
    terms = tuple(binding.get(t, t) for t in terms)
    return Literal(f"{pred}({','.join(terms)})", literal.negated, literal.naf)


def program_constants(p: LogicProgram) -> list[str]:
    consts = set()
    for c in p.clauses:
        for l in (c.head, *c.body):
            consts.update(t for t in split_atom(l.atom)[1] if not is_variable(t))
    return sorted(consts)


def ground_program(p: LogicProgram) -> LogicProgram:
    """Instantiate every clause over all constants of the program.

    Naive Cartesian instantiation; ground clauses are deduplicated keeping the
    first occurrence. A program that is already ground is returned unchanged.
    """
    if p.is_ground:
        return p
    constants = program_constants(p)
    if not constants:
        raise GroundingError("program has variables but mentions no constants")
    out: dict[Clause, None] = {}
    for clause in p.clauses:
        variables = sorted(clause.variables)
        for values in itertools.product(constants, repeat=len(variables)):
            binding = dict(zip(variables, values))
            g = Clause(
                _substitute(clause.head, binding),
                tuple(_substitute(b, binding) for b in clause.body),
            )
            out.setdefault(g)
    return LogicProgram(tuple(out), p.declared_atoms)


# -- answer sets ---------------------------------------------------------------

def reduct(p: LogicProgram, s: Iterable[Literal]) -> LogicProgram:
    """Gelfond-Lifschitz reduct of ``p`` with respect to ``s``.

    The result keeps the Herbrand base of ``p`` so that the inconsistency
    condition of the least model still refers to Lit_P.
    """
    s = frozenset(s)
    kept = []
    for c in p.clauses:
        if any(b.classical in s for b in c.naf_body):
            continue
        kept.append(Clause(c.head, c.positive_body))
    return LogicProgram(tuple(kept), p.herbrand_base)


def least_answer_set_positive(p: LogicProgram) -> frozenset[Literal]:
    """Answer set of a NAF-free program: least closure, or Lit_P if contradictory."""
    if p.has_naf:
        raise ValueError("least_answer_set_positive requires a NAF-free program")
    model: set[Literal] = set()
    pending = list(p.clauses)
    changed = True
    while changed:
        changed = False
        rest = []
        for c in pending:
            if c.head in model:
                continue
            if all(b in model for b in c.body):
                model.add(c.head)
                changed = True
            else:
                rest.append(c)
        pending = rest
    if any(l.complement in model for l in model):
        return p.literals
    return frozenset(model)


def is_answer_set(p: LogicProgram, s: Iterable[Literal]) -> bool:
    s = frozenset(s)
    return s == least_answer_set_positive(reduct(p, s))


def is_consistent_set(s: Iterable[Literal]) -> bool:
    s = frozenset(s)
    return not any(l.complement in s for l in s)


@dataclass(frozen=True)
class AnswerSet:
    """An answer set S together with its satisfied NAF literals Delta_S."""

    literals: frozenset[Literal]
    delta: frozenset[Literal]

    @property
    def with_naf(self) -> frozenset[Literal]:
        """S_NAF = S united with Delta_S."""
        return self.literals | self.delta

    def __contains__(self, k):
        return k in self.literals or k in self.delta

    def __iter__(self):
        return iter(sorted(self.literals))

    def __len__(self):
        return len(self.literals)

    def __str__(self):
        return format_literal_set(self.literals)


def naf_completion(p: LogicProgram, s: Iterable[Literal]) -> AnswerSet:
    s = frozenset(s)
    if not is_answer_set(p, s):
        raise NotAnAnswerSetError(f"{format_literal_set(s)} is not an answer set")
    if not is_consistent_set(s):
        raise NotAnAnswerSetError("the inconsistent answer set Lit_P has no NAF completion")
    delta = frozenset(l.as_naf() for l in p.literals if l not in s)
    return AnswerSet(s, delta)


class Solutions(NamedTuple):
    answer_sets: list[AnswerSet]
    consistent: bool


def enumerate_answer_sets(p: LogicProgram) -> Solutions:
    """All consistent answer sets of a ground program, sorted, plus a consistency flag.

    Candidates range over subsets of clause heads: any member of an answer
    set heads a clause that survives the reduct.
    """
    if not p.is_ground:
        raise GroundingError("enumerate_answer_sets needs a ground program")
    heads = sorted(p.heads)
    found = []
    for r in range(len(heads) + 1):
        for combo in itertools.combinations(heads, r):
            cand = frozenset(combo)
            if not is_consistent_set(cand):
                continue
            if is_answer_set(p, cand):
                found.append(cand)
    found.sort(key=sorted)
    answer_sets = [naf_completion(p, s) for s in found]
    return Solutions(answer_sets, bool(answer_sets))


# -- modus ponens --------------------------------------------------------------

def mp_closure(p: LogicProgram, delta: Iterable[Literal]) -> frozenset[Literal]:
    """Everything derivable from P plus ``not l <-`` for each ``not l`` in delta.

    NAF literals are plain symbols here: a body ``not l`` holds only when it
    was itself derived, i.e. when it is in delta.
    """
    derived = set(delta)
    changed = True
    while changed:
        changed = False
        for c in p.clauses:
            if c.head not in derived and all(b in derived for b in c.body):
                derived.add(c.head)
                changed = True
    return frozenset(derived)


def derives_mp(p: LogicProgram, delta: Iterable[Literal], k: Literal) -> bool:
    return k in mp_closure(p, delta)
