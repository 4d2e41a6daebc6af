#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

"""
Rules of the history-bounded parity game for a closed, firm and
negation-free root formula. Positions are expanded on the formula
directly and closure triples are carried alongside when present.
"""

from typing import List
from typing import Mapping
from typing import Optional
from typing import Tuple

from nomcheck.fra import Fra
from nomcheck.fra import representative_names
from nomcheck.fra import representative_successors
from nomcheck.game._bounds import well_bound
from nomcheck.game._position import ClosureTriple
from nomcheck.game._position import Player
from nomcheck.game._position import Position
from nomcheck.logic import And
from nomcheck.logic import BigAnd
from nomcheck.logic import BigOr
from nomcheck.logic import Box
from nomcheck.logic import Compare
from nomcheck.logic import Diamond
from nomcheck.logic import Eq
from nomcheck.logic import Fixpoint
from nomcheck.logic import Formula
from nomcheck.logic import Fresh
from nomcheck.logic import Junction
from nomcheck.logic import Modal
from nomcheck.logic import Neq
from nomcheck.logic import Not
from nomcheck.logic import Or
from nomcheck.logic import Quantifier
from nomcheck.logic import Var
from nomcheck.logic import rank
from nomcheck.logic import subst_values
from nomcheck.logic import unfold
from nomcheck.nominal import Name
from nomcheck.nominal import smallest_name_not_in
from nomcheck.nominal import support


# ========================================================================= #
# Ownership                                                                 #
# ========================================================================= #


def owner_of(phi: Formula) -> Player:
    if isinstance(phi, Eq):
        return Player.ATTACKER if (phi.left == phi.right) else Player.DEFENDER
    if isinstance(phi, Neq):
        return Player.DEFENDER if (phi.left == phi.right) else Player.ATTACKER
    if isinstance(phi, (Or, BigOr, Diamond)):
        return Player.DEFENDER
    if isinstance(phi, (And, BigAnd, Box)):
        return Player.ATTACKER
    # single successor, the choice of owner does not matter
    if isinstance(phi, (Fresh, Fixpoint)):
        return Player.DEFENDER
    if isinstance(phi, Var):
        raise RuntimeError(f'recursion variable {repr(phi.rec)} reached a game position, the root formula must be closed')
    if isinstance(phi, Not):
        raise RuntimeError(f'negation reached a game position, the root formula must be negation free: {phi}')
    raise TypeError(f'not a formula: {repr(phi)}')


def make_position(state: str, regs, history, formula: Formula, ranks: Mapping[str, int], triple: Optional[ClosureTriple] = None) -> Position:
    return Position(
        state=state,
        regs=regs,
        history=history,
        formula=formula,
        owner=owner_of(formula),
        rank=rank(formula, ranks),
        triple=triple,
    )


# ========================================================================= #
# Moves                                                                     #
# ========================================================================= #


def _names_for(pos: Position, quantifier: Quantifier) -> List[Name]:
    protected = support(quantifier) | pos.regs.range
    if isinstance(quantifier, Fresh):
        # a # phi, H, the registers are contained in H
        return [smallest_name_not_in(pos.history, protected)]
    return representative_names(pos.config, protected)


def expand_moves(pos: Position, n: int, fra: Fra, ranks: Mapping[str, int]) -> Tuple[Position, ...]:
    """
    Successors of `pos` in the game bounded by the grade `n`. Names are only
    instantiated with representatives, histories after modal steps are
    trimmed with `well_bound`. Duplicates are removed, order is deterministic.
    """
    phi, triple = pos.formula, pos.triple
    succs = []
    # leaves
    if isinstance(phi, Compare):
        pass
    # boolean
    elif isinstance(phi, Junction):
        for child, t_child in ((phi.left, _t_child(triple, 'left')), (phi.right, _t_child(triple, 'right'))):
            succs.append(make_position(pos.state, pos.regs, pos.history, child, ranks, t_child))
    # quantifiers
    elif isinstance(phi, Quantifier):
        for a in _names_for(pos, phi):
            child = subst_values(phi.body, {phi.var: a})
            t_child = None if (triple is None) else triple.bind(triple.psi.body, (triple.psi.var,), (a,))
            succs.append(make_position(pos.state, pos.regs, pos.history, child, ranks, t_child))
    # modalities
    elif isinstance(phi, Modal):
        if len(phi.label.args) != 1 or not isinstance(phi.label.args[0], Name):
            raise RuntimeError(f'modal label must carry exactly one name when checking against an automaton: {phi.label}')
        tag, (a,) = phi.label.tag, phi.label.args
        t_child = _t_child(triple, 'body')
        protected = support(phi) | pos.regs.range
        for (tag_, a_), cfg in representative_successors(fra, pos.config, protected):
            if tag_ != tag or a_ != a:
                continue
            history = well_bound(cfg.history, cfg.automaton_state, phi.body, n)
            succs.append(make_position(cfg.state, cfg.regs, history, phi.body, ranks, t_child))
    # recursion
    elif isinstance(phi, Fixpoint):
        t_child = None
        if triple is not None:
            if isinstance(triple.psi, Fixpoint):
                t_child = triple.enter_fixpoint(phi.args)
            else:
                t_child = triple.reenter(phi.args)
        succs.append(make_position(pos.state, pos.regs, pos.history, unfold(phi), ranks, t_child))
    else:
        owner_of(phi)
        raise TypeError(f'not a formula: {repr(phi)}')
    return tuple(dict.fromkeys(succs))


def _t_child(triple: Optional[ClosureTriple], attr: str) -> Optional[ClosureTriple]:
    if triple is None:
        return None
    return triple.descend(getattr(triple.psi, attr))


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
