#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import pprint
import textwrap

from nomcheck.util.strings import colors as c


# ========================================================================= #
# Verdicts                                                                  #
# ========================================================================= #


def fmt_verdict(sat: bool, color: bool = True) -> str:
    text = 'SAT' if sat else 'UNSAT'
    if not color:
        return text
    return f'{c.lGRN if sat else c.lRED}{text}{c.RST}'


def fmt_table(rows, color: bool = True) -> str:
    """
    Align `(key, value)` rows into two columns.
    """
    rows = [(str(k), str(v)) for k, v in rows]
    w = max((len(k) for k, _ in rows), default=0)
    if color:
        return '\n'.join(f'{c.lYLW}{k:<{w}}{c.RST} : {v}' for k, v in rows)
    return '\n'.join(f'{k:<{w}} : {v}' for k, v in rows)


# ========================================================================= #
# Boxes                                                                     #
# ========================================================================= #


def make_box_str(text, header=None, width=100) -> str:
    """
    Draw `text` inside a box, non-string values are pretty printed.
    Used for the config summary at the start of a command line run.
    """
    inner = width - 4
    rule = f'# {"-" * inner} #'

    def rows(block: str):
        for line in block.splitlines():
            for part in (textwrap.wrap(line, inner, tabsize=4) or ['']):
                yield f'| {part:<{inner}} |'

    if not isinstance(text, str):
        text = pprint.pformat(text, width=inner)
    box = [rule]
    if header:
        box.extend(rows(header))
        box.append(rule)
    box.extend(rows(text))
    box.append(rule)
    return '\n' + '\n'.join(box) + '\n'


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
