"""Attack Trees of arguments with respect to a set of arguments.

Trees may be infinite. They are stored as regular trees: when a node's
(argument, sign) pair already occurs on the path from the root, the node is
emitted as a childless repeat marker pointing at that ancestor. Defender
choices for '-' nodes are fixed per argument, which makes every tree regular.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .aba import ABAFramework, Argument, Extension
from .errors import TreeConstructionError

PLUS, MINUS = "+", "-"
PROPONENT, OPPONENT = "proponent", "opponent"


@dataclass(frozen=True)
class AttackTreeNode:
    argument: str
    sign: str
    children: tuple[AttackTreeNode, ...] = ()
    repeat_of: tuple[str, str] | None = None

    @property
    def key(self) -> tuple[str, str]:
        return self.argument, self.sign

    @property
    def is_repeat(self) -> bool:
        return self.repeat_of is not None

    def walk(self) -> Iterator[AttackTreeNode]:
        yield self
        for c in self.children:
            yield from c.walk()


@dataclass(frozen=True)
class AttackTree:
    root: AttackTreeNode
    extension: frozenset[str]
    choice: tuple[tuple[str, str], ...] = field(default=(), compare=False)
    framework: ABAFramework | None = field(default=None, compare=False, repr=False)

    @property
    def positive(self) -> bool:
        return self.root.sign == PLUS

    @property
    def defender_choice(self) -> dict[str, str]:
        return dict(self.choice)

    def nodes(self) -> Iterator[AttackTreeNode]:
        """Every node object once, in preorder.

        Unfolded trees share identical subtrees, so shared objects are only
        visited the first time they are reached.
        """
        seen = set()
        stack = [self.root]
        while stack:
            node = stack.pop()
            if id(node) in seen:
                continue
            seen.add(id(node))
            yield node
            stack.extend(reversed(node.children))

    def __str__(self):
        return format_tree(self.root)


def format_tree(node, indent: int = 0) -> str:
    suffix = "  (repeat)" if node.repeat_of is not None else ""
    label = f"{node.argument}{node.sign}" if hasattr(node, "sign") else (
        f"{node.argument} [{node.status}]")
    lines = ["  " * indent + label + suffix]
    lines += [format_tree(c, indent + 1) for c in node.children]
    return "\n".join(lines)


class _NeedChoice(Exception):
    def __init__(self, argument, defenders):
        self.argument = argument
        self.defenders = defenders


def _members(x) -> frozenset[str]:
    if isinstance(x, Extension):
        return x.members
    return frozenset(a.id if isinstance(a, Argument) else a for a in x)


def _grow(f, members, arg_id, sign, choice, path, used):
    key = (arg_id, sign)
    if key in path:
        return AttackTreeNode(arg_id, sign, (), key)
    path = path | {key}
    attackers = f.attacks.attackers(arg_id)
    if sign == PLUS:
        kids = tuple(_grow(f, members, a, MINUS, choice, path, used) for a in attackers)
        return AttackTreeNode(arg_id, sign, kids)
    defenders = [a for a in attackers if a in members]
    if not defenders:
        return AttackTreeNode(arg_id, sign)
    if arg_id not in choice:
        raise _NeedChoice(arg_id, defenders)
    used[arg_id] = choice[arg_id]
    child = _grow(f, members, choice[arg_id], PLUS, choice, path, used)
    return AttackTreeNode(arg_id, sign, (child,))


def _check_choice(f, members, choice):
    for neg, defender in choice.items():
        f.argument(neg)
        f.argument(defender)
        if not f.attacks.attacks(defender, neg):
            raise TreeConstructionError(f"{defender} does not attack {neg}")
        if defender not in members:
            raise TreeConstructionError(f"{defender} is not in the reference set")


def _root_id(root) -> str:
    return root.id if isinstance(root, Argument) else root


def build_attack_tree(
    f: ABAFramework,
    x,
    root,
    choice: Mapping[str, str] | None = None,
) -> AttackTree:
    """Build the Attack Tree of ``root`` w.r.t. ``x`` under a defender choice.

    ``choice`` maps each '-' argument reached during construction to the
    attacker in ``x`` used as its only child. Arguments with no attacker in
    ``x`` need no entry (they become leaves).
    """
    members = _members(x)
    choice = dict(choice or {})
    _check_choice(f, members, choice)
    root_id = _root_id(root)
    f.argument(root_id)
    sign = PLUS if root_id in members else MINUS
    used: dict[str, str] = {}
    try:
        node = _grow(f, members, root_id, sign, choice, frozenset(), used)
    except _NeedChoice as e:
        raise TreeConstructionError(
            f"no defender chosen for {e.argument}; candidates: {', '.join(e.defenders)}"
        ) from None
    return AttackTree(node, members, tuple(sorted(used.items())), f)


def enumerate_attack_trees(f: ABAFramework, x, root) -> list[AttackTree]:
    """All trees of ``root`` w.r.t. ``x``, one per reachable defender choice."""
    members = _members(x)
    root_id = _root_id(root)
    f.argument(root_id)
    sign = PLUS if root_id in members else MINUS
    out: list[AttackTree] = []
    seen = set()

    def explore(choice):
        used: dict[str, str] = {}
        try:
            node = _grow(f, members, root_id, sign, choice, frozenset(), used)
        except _NeedChoice as e:
            for d in e.defenders:
                explore({**choice, e.argument: d})
            return
        tree = AttackTree(node, members, tuple(sorted(used.items())), f)
        if tree not in seen:
            seen.add(tree)
            out.append(tree)

    explore({})
    return out


def drop_root(f: ABAFramework, t: AttackTree) -> AttackTree:
    """The positive tree hanging below the root of a negative tree.

    Rebuilt rather than sliced, so repeat markers that pointed at the removed
    root get expanded properly.
    """
    if t.positive or not t.root.children:
        raise TreeConstructionError("drop_root needs a negative tree whose root has a child")
    return build_attack_tree(f, t.extension, t.root.children[0].argument, t.defender_choice)


def plus_arguments(t: AttackTree) -> frozenset[str]:
    return frozenset(n.argument for n in t.nodes() if n.sign == PLUS)


def minus_arguments(t: AttackTree) -> frozenset[str]:
    return frozenset(n.argument for n in t.nodes() if n.sign == MINUS)


def unfold(t: AttackTree, depth: int = 1) -> AttackTree:
    """Expand repeat markers, at most ``depth`` times along any root path.

    With a fixed defender choice the infinite subtree below a node depends only
    on its (argument, sign) pair, so a marker is replaced by the first
    non-repeat node with that pair. Equal expansions are shared, keeping the
    result polynomial in size. Markers left in place still stand for their
    pair, although in an unfolded tree that pair need not label an ancestor.
    """
    canon: dict[tuple[str, str], AttackTreeNode] = {}
    for n in t.nodes():
        if not n.is_repeat:
            canon.setdefault(n.key, n)
    memo: dict[tuple[int, int], AttackTreeNode] = {}

    def go(node, used):
        if node.is_repeat:
            if used >= depth:
                return node
            node, used = canon[node.repeat_of], used + 1
        state = (id(node), used)
        if state not in memo:
            kids = tuple(go(c, used) for c in node.children)
            memo[state] = AttackTreeNode(node.argument, node.sign, kids)
        return memo[state]

    return AttackTree(go(t.root, 0), t.extension, t.choice, t.framework)


# -- dispute trees ---------------------------------------------------------------

@dataclass(frozen=True)
class DisputeNode:
    argument: str
    status: str
    children: tuple[DisputeNode, ...] = ()
    repeat_of: tuple[str, str] | None = None

    def walk(self) -> Iterator[DisputeNode]:
        yield self
        for c in self.children:
            yield from c.walk()


@dataclass(frozen=True)
class DisputeTree:
    root: DisputeNode

    def nodes(self) -> Iterator[DisputeNode]:
        return self.root.walk()

    def __str__(self):
        return format_tree(self.root)


_STATUS = {PLUS: PROPONENT, MINUS: OPPONENT}


def _relabel(node: AttackTreeNode) -> DisputeNode:
    rep = None
    if node.repeat_of is not None:
        rep = (node.repeat_of[0], _STATUS[node.repeat_of[1]])
    return DisputeNode(
        node.argument, _STATUS[node.sign], tuple(_relabel(c) for c in node.children), rep
    )


def translate_dispute_tree(t: AttackTree) -> DisputeTree:
    return DisputeTree(_relabel(t.root))


def is_admissible_dispute_tree(dt: DisputeTree) -> bool:
    pro = {n.argument for n in dt.nodes() if n.status == PROPONENT}
    opp = {n.argument for n in dt.nodes() if n.status == OPPONENT}
    return not (pro & opp)


def is_dispute_tree(f: ABAFramework, dt: DisputeTree) -> bool:
    """Check the abstract dispute tree conditions on the regular representation.

    The root must be a proponent; proponents have every attacker as an
    opponent child; opponents have exactly one proponent child that attacks
    them. Repeat markers stand for their ancestor and are not re-checked.
    """
    if dt.root.status != PROPONENT:
        return False
    for n in dt.nodes():
        if n.repeat_of is not None:
            continue
        attackers = f.attacks.attackers(n.argument)
        if n.status == PROPONENT:
            kids = [(c.argument, c.status) for c in n.children]
            if sorted(kids) != sorted((a, OPPONENT) for a in attackers):
                return False
        else:
            if len(n.children) != 1:
                return False
            c = n.children[0]
            if c.status != PROPONENT or c.argument not in attackers:
                return False
    return True
