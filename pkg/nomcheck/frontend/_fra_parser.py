#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict
from typing import FrozenSet
from typing import List
from typing import Optional
from typing import Union

from lark import Lark
from lark import Token
from lark import Tree
from lark.exceptions import UnexpectedInput

from nomcheck.fra import Fra
from nomcheck.fra import Transition
from nomcheck.fra import TransitionKind


log = logging.getLogger(__name__)


# ========================================================================= #
# Errors                                                                    #
# ========================================================================= #


class FraSyntaxError(ValueError):

    def __init__(self, msg: str, line: Optional[int] = None, column: Optional[int] = None):
        self.msg = msg
        self.line = line
        self.column = column
        super().__init__(msg if (line is None) else f'{msg} (line {line}, column {column})')


# ========================================================================= #
# Grammar                                                                   #
# ========================================================================= #


# registers 1
# tags o:1
# state q0 avail {}
# trans q0 o gfresh(1) q0
FRA_GRAMMAR = r"""
    start: _NL* (statement _NL+)*

    ?statement: registers
              | tags
              | state
              | trans

    registers: "registers" INT
    tags: "tags" tag*
    tag: ID ":" INT
    state: "state" ID "avail" "{" (INT ("," INT)*)? "}"
    trans: "trans" ID ID kind "(" INT ")" ID

    kind: READ | LFRESH | GFRESH

    READ: "read"
    LFRESH: "lfresh"
    GFRESH: "gfresh"
    ID: /[A-Za-z_][A-Za-z0-9_']*/
    COMMENT: /#[^\n]*/
    _NL: /\r?\n/

    %import common.INT
    %import common.WS_INLINE
    %ignore WS_INLINE
    %ignore COMMENT
"""


_KINDS = {
    'read': TransitionKind.READ,
    'lfresh': TransitionKind.LFRESH,
    'gfresh': TransitionKind.GFRESH,
}


@lru_cache()
def _fra_lark() -> Lark:
    return Lark(FRA_GRAMMAR, parser='lalr', propagate_positions=True)


# ========================================================================= #
# Parser                                                                    #
# ========================================================================= #


def _error(tok: Token, msg: str) -> FraSyntaxError:
    return FraSyntaxError(msg, tok.line, tok.column)


def parse_fra(text: str) -> Fra:
    """
    Read an automaton, one statement per line:

        registers R
        tags t:1 ...
        state q avail {i, ...}
        trans q t read(i) q'       # or lfresh(i), gfresh(i)

    Raises `FraSyntaxError` for malformed text and `FraValidationError`
    if the automaton breaks the availability conditions.
    """
    try:
        tree = _fra_lark().parse(text + '\n')
    except UnexpectedInput as e:
        line, column = getattr(e, 'line', None), getattr(e, 'column', None)
        if (line is not None) and (line < 0):
            line, column = None, None
        raise FraSyntaxError(f'invalid automaton: {str(e).strip().splitlines()[0]}', line, column) from e
    registers: Optional[int] = None
    tags: Dict[str, int] = {}
    avail: Dict[str, FrozenSet[int]] = {}
    transitions: List[Transition] = []
    for stmt in tree.children:
        assert isinstance(stmt, Tree), f'unexpected statement: {repr(stmt)}'
        kids = stmt.children
        if stmt.data == 'registers':
            if registers is not None:
                raise _error(kids[0], 'the number of registers is declared twice')
            registers = int(kids[0])
        elif stmt.data == 'tags':
            for decl in kids:
                name, arity = decl.children
                if name.value in tags:
                    raise _error(name, f'duplicate tag declaration: {repr(name.value)}')
                tags[name.value] = int(arity)
        elif stmt.data == 'state':
            name, *regs = kids
            if name.value in avail:
                raise _error(name, f'duplicate state declaration: {repr(name.value)}')
            avail[name.value] = frozenset(int(r) for r in regs)
        elif stmt.data == 'trans':
            source, tag, kind, register, target = kids
            (kind_tok,) = kind.children
            transitions.append(Transition(source.value, tag.value, _KINDS[kind_tok.value], int(register), target.value))
        else:
            raise RuntimeError(f'unsupported statement: {repr(stmt.data)}')
    if registers is None:
        raise FraSyntaxError('missing declaration of the number of registers, eg. `registers 1`')
    fra = Fra(registers=registers, avail=avail, tags=tags, transitions=tuple(transitions))
    log.debug(f'parsed automaton with {len(avail)} state(s) and {len(fra.transitions)} transition(s)')
    return fra.check()


def load_fra(path: Union[str, Path]) -> Fra:
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f'automaton file does not exist: {repr(str(path))}')
    return parse_fra(path.read_text())


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
