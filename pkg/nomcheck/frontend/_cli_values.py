#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import re
from typing import Dict
from typing import Optional
from typing import Sequence
from typing import Tuple
from typing import Union

from nomcheck.nominal import Name


_NAME_RE = re.compile(r'^#([0-9]+)$')


# ========================================================================= #
# Command Line Values                                                       #
# ========================================================================= #


def parse_name(text: str) -> Name:
    m = _NAME_RE.match(text.strip())
    if m is None:
        raise ValueError(f'invalid name: {repr(text)}, names are written as `#n` with a natural number `n`')
    return Name(int(m.group(1)))


def _items(text: Optional[Union[str, Sequence]]) -> Sequence[str]:
    if text is None:
        return ()
    # hydra may already hand over a list
    if not isinstance(text, str):
        return [str(x) for x in text]
    text = text.strip()
    return [] if (not text) else [x for x in text.split(',')]


def parse_names(text: Optional[Union[str, Sequence]]) -> Tuple[Name, ...]:
    """
    Parse a comma separated list of names, eg. `#0,#1`.
    """
    names = tuple(parse_name(x) for x in _items(text))
    if len(set(names)) != len(names):
        raise ValueError(f'names are listed more than once: {repr(text)}')
    return names


def parse_registers(text: Optional[Union[str, Sequence]]) -> Dict[int, Name]:
    """
    Parse a comma separated register assignment, eg. `1=#0,2=#3`.
    """
    regs = {}
    for item in _items(text):
        index, sep, name = item.partition('=')
        if not sep or not index.strip().isdigit():
            raise ValueError(f'invalid register assignment: {repr(item)}, expected `i=#n`')
        i = int(index)
        if i in regs:
            raise ValueError(f'register {i} is assigned twice: {repr(text)}')
        regs[i] = parse_name(name)
    return regs


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
