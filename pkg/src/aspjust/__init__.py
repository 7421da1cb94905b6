"""Argumentation-based justifications for answer set programs."""
from .aba import (
    ABAFramework,
    Argument,
    Attack,
    Extension,
    compute_attacks,
    corresponding_arguments,
    corresponding_stable_extension,
    enumerate_arguments,
    is_admissible,
    is_stable,
    stable_extensions,
    translate,
)
from .attack_trees import (
    AttackTree,
    AttackTreeNode,
    DisputeTree,
    build_attack_tree,
    drop_root,
    enumerate_attack_trees,
    is_admissible_dispute_tree,
    is_dispute_tree,
    minus_arguments,
    plus_arguments,
    translate_dispute_tree,
    unfold,
)
from .errors import (
    AspJustError,
    GroundingError,
    InconsistentProgramError,
    LiteralNotInLanguageError,
    NotAnAnswerSetError,
    ParseError,
    PolarityError,
    TreeConstructionError,
    UnknownArgumentError,
)
from .justify import (
    JustLiteral,
    JustPair,
    Justification,
    PairSet,
    babas_negative,
    babas_positive,
    babas_positive_all,
    basic_justification,
    justification_graph,
    justify,
    justify_all,
    labas_negative,
    labas_positive,
    labas_positive_all,
    labelled_justification,
    naf_plus,
)
from .program import (
    AnswerSet,
    Clause,
    Literal,
    LogicProgram,
    derives_mp,
    enumerate_answer_sets,
    ground_program,
    is_answer_set,
    lit,
    mp_closure,
    naf_completion,
    reduct,
)
from .render import RenderConfig, export_dot, export_json, export_text
from .syntax import load_program, parse_literal, parse_program

__version__ = "0.1.0"
