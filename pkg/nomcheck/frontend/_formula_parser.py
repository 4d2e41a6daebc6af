#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

"""
Concrete syntax of formulas:

    phi := u = u | u != u | phi | phi | phi & phi | !phi
         | some x. phi | all x. phi | fresh x. phi
         | <tag:u,...> phi | [tag:u,...] phi
         | mu X. phi | nu X. phi | mu X(x,...). (phi)(u,...)
         | X | X(u,...) | (phi)

Names are written `#n`, value variables start lowercase and recursion
variables uppercase. `!` and modalities bind tightest, then `&`, then `|`.
Binders extend as far to the right as possible.
"""

from functools import lru_cache
from typing import Dict
from typing import FrozenSet
from typing import Mapping
from typing import Optional
from typing import Tuple
from typing import Union

from lark import Lark
from lark import Token
from lark import Tree
from lark.exceptions import UnexpectedInput

from nomcheck.logic import And
from nomcheck.logic import BigAnd
from nomcheck.logic import BigOr
from nomcheck.logic import Box
from nomcheck.logic import Diamond
from nomcheck.logic import Eq
from nomcheck.logic import Formula
from nomcheck.logic import FormulaError
from nomcheck.logic import Fresh
from nomcheck.logic import Label
from nomcheck.logic import Mu
from nomcheck.logic import Neq
from nomcheck.logic import Not
from nomcheck.logic import Nu
from nomcheck.logic import Or
from nomcheck.logic import Value
from nomcheck.logic import ValueVar
from nomcheck.logic import Var
from nomcheck.nominal import Name


# ========================================================================= #
# Errors                                                                    #
# ========================================================================= #


class FormulaSyntaxError(ValueError):

    def __init__(self, msg: str, line: Optional[int] = None, column: Optional[int] = None):
        self.msg = msg
        self.line = line
        self.column = column
        super().__init__(msg if (line is None) else f'{msg} (line {line}, column {column})')


# ========================================================================= #
# Grammar                                                                   #
# ========================================================================= #


# the `_b` rules may end in a binder, the others may not, so that a
# binder can only be the right-most operand of the text that follows it
FORMULA_GRAMMAR = r"""
    ?start: formula

    ?formula: disj_b

    ?disj_b: conj_b
           | disj "|" conj_b                   -> or_
    ?conj_b: unary_b
           | conj "&" unary_b                  -> and_
    ?unary_b: unary
            | tail
    ?tail: binder
         | "!" tail                            -> not_
         | "<" label ">" tail                  -> diamond
         | "[" label "]" tail                  -> box

    ?disj: conj
         | disj "|" conj                       -> or_
    ?conj: unary
         | conj "&" unary                      -> and_
    ?unary: atom
          | "!" unary                          -> not_
          | "<" label ">" unary                -> diamond
          | "[" label "]" unary                -> box

    binder: "some" ID "." formula              -> some_
          | "all" ID "." formula               -> all_
          | "fresh" ID "." formula             -> fresh_
          | (MU | NU) ID xparams "." formula   -> fix_open

    ?atom: value "=" value                     -> eq
         | value "!=" value                    -> neq
         | ID                                  -> var_bare
         | ID "(" uargs ")"                    -> var
         | (MU | NU) ID xparams "." "(" formula ")" "(" uargs ")"  -> fix_closed
         | "(" formula ")"

    label: ID (":" value ("," value)*)?
    xparams: ("(" (ID ("," ID)*)? ")")?
    uargs: (value ("," value)*)?

    ?value: NAME                               -> name
          | ID                                 -> valvar

    MU: "mu"
    NU: "nu"
    NAME: /#[0-9]+/
    ID: /[A-Za-z_][A-Za-z0-9_]*/

    %import common.WS
    %ignore WS
"""


@lru_cache()
def _formula_lark() -> Lark:
    return Lark(FORMULA_GRAMMAR, parser='lalr', propagate_positions=True)


# ========================================================================= #
# Tree Walker                                                               #
# ========================================================================= #


Node = Union[Tree, Token]


def _pos(node: Node) -> Tuple[Optional[int], Optional[int]]:
    if isinstance(node, Token):
        return node.line, node.column
    meta = getattr(node, 'meta', None)
    if (meta is None) or getattr(meta, 'empty', True):
        return None, None
    return meta.line, meta.column


def _error(node: Node, msg: str) -> FormulaError:
    return FormulaError(msg, *_pos(node))


class _FormulaBuilder(object):
    """
    Builds formulas from parse trees, checking scopes, the arities of
    recursion variables and tags, and the polarity of recursion variables.
    """

    def __init__(self, signature: Optional[Mapping[str, int]] = None):
        self._fixed = signature is not None
        self.signature: Dict[str, int] = dict(signature or {})

    def build(self, node: Node, values: FrozenSet[str] = frozenset(), recs: Optional[Dict[str, Tuple[int, int]]] = None, negs: int = 0) -> Formula:
        # recs maps recursion variables to their arity and the negation count at their binder
        recs = {} if (recs is None) else recs
        kind = node.type if isinstance(node, Token) else node.data
        kids = [] if isinstance(node, Token) else node.children
        # boolean
        if kind == 'or_':
            return Or(self.build(kids[0], values, recs, negs), self.build(kids[1], values, recs, negs))
        if kind == 'and_':
            return And(self.build(kids[0], values, recs, negs), self.build(kids[1], values, recs, negs))
        if kind == 'not_':
            return Not(self.build(kids[0], values, recs, negs + 1))
        # modalities
        if kind in ('diamond', 'box'):
            label = self._label(kids[0], values)
            body = self.build(kids[1], values, recs, negs)
            return Diamond(label, body) if (kind == 'diamond') else Box(label, body)
        # quantifiers
        if kind in ('some_', 'all_', 'fresh_'):
            var = self._value_binder(kids[0])
            body = self.build(kids[1], values | {var}, recs, negs)
            return {'some_': BigOr, 'all_': BigAnd, 'fresh_': Fresh}[kind](var, body)
        # recursion
        if kind in ('fix_open', 'fix_closed'):
            return self._fixpoint(kind, kids, values, recs, negs)
        if kind in ('var_bare', 'var', 'ID'):
            rec_tok = node if (kind == 'ID') else kids[0]
            args = self._values(kids[1], values) if (kind == 'var') else ()
            return self._var(rec_tok, args, recs, negs)
        # atoms
        if kind in ('eq', 'neq'):
            left, right = self._value(kids[0], values), self._value(kids[1], values)
            return Eq(left, right) if (kind == 'eq') else Neq(left, right)
        raise _error(node, f'unexpected syntax: {repr(kind)}')

    # --- values --- #

    def _value(self, node: Node, values: FrozenSet[str]) -> Value:
        if isinstance(node, Tree):
            (node,) = node.children
        if node.type == 'NAME':
            return Name(int(node.value[1:]))
        if not node.value[0].islower():
            raise _error(node, f'value variables start with a lowercase letter, got: {repr(node.value)}')
        if node.value not in values:
            raise _error(node, f'unbound value variable: {repr(node.value)}')
        return ValueVar(node.value)

    def _values(self, node: Tree, values: FrozenSet[str]) -> Tuple[Value, ...]:
        return tuple(self._value(kid, values) for kid in node.children)

    def _value_binder(self, tok: Token) -> str:
        if not tok.value[0].islower():
            raise _error(tok, f'value variables start with a lowercase letter, got: {repr(tok.value)}')
        return tok.value

    def _label(self, node: Tree, values: FrozenSet[str]) -> Label:
        tag_tok, *args = node.children
        label = Label(tag_tok.value, tuple(self._value(kid, values) for kid in args))
        arity = self.signature.get(label.tag)
        if arity is None:
            if self._fixed:
                raise _error(tag_tok, f'unknown tag: {repr(label.tag)}, declared tags are: {sorted(self.signature)}')
            self.signature[label.tag] = arity = len(label.args)
        if arity != len(label.args):
            raise _error(tag_tok, f'tag {repr(label.tag)} has arity {arity} but is applied to {len(label.args)} value(s)')
        return label

    # --- recursion --- #

    def _rec_name(self, tok: Token) -> str:
        if not tok.value[0].isupper():
            raise _error(tok, f'recursion variables start with an uppercase letter, got: {repr(tok.value)}')
        return tok.value

    def _fixpoint(self, kind: str, kids: list, values: FrozenSet[str], recs: Dict[str, Tuple[int, int]], negs: int) -> Formula:
        fix_tok, rec_tok, params_node, body_node = kids[:4]
        rec = self._rec_name(rec_tok)
        params = tuple(self._value_binder(tok) for tok in params_node.children)
        if len(set(params)) != len(params):
            raise _error(rec_tok, f'fixpoint {repr(rec)} binds a parameter twice: {params}')
        if kind == 'fix_open':
            if params:
                raise _error(rec_tok, f'fixpoint {repr(rec)} has parameters and must be applied, eg. `{fix_tok.value} {rec}({", ".join(params)}). (...)({", ".join(params)})`')
            args = ()
        else:
            args = self._values(kids[4], values)
            if len(args) != len(params):
                raise _error(rec_tok, f'fixpoint {repr(rec)} has {len(params)} parameter(s) but is applied to {len(args)} value(s)')
        body = self.build(body_node, values | frozenset(params), {**recs, rec: (len(params), negs)}, negs)
        cls = Mu if (fix_tok.value == 'mu') else Nu
        return cls(rec, params, body, args)

    def _var(self, tok: Token, args: Tuple[Value, ...], recs: Dict[str, Tuple[int, int]], negs: int) -> Var:
        rec = self._rec_name(tok)
        if rec not in recs:
            raise _error(tok, f'unbound recursion variable: {repr(rec)}')
        arity, bound_negs = recs[rec]
        if arity != len(args):
            raise _error(tok, f'recursion variable {repr(rec)} has arity {arity} but is applied to {len(args)} value(s)')
        if (negs - bound_negs) % 2 != 0:
            raise _error(tok, f'recursion variable {repr(rec)} occurs under an odd number of negations')
        return Var(rec, args)


# ========================================================================= #
# Parser                                                                    #
# ========================================================================= #


def parse_formula(text: str, signature: Optional[Mapping[str, int]] = None) -> Formula:
    """
    Parse a closed formula. If `signature` is given every tag must be
    declared with its arity, otherwise arities are fixed by their first use.
    Raises `FormulaSyntaxError` for malformed text and `FormulaError`
    for well-formed text that is not a valid formula.
    """
    try:
        tree = _formula_lark().parse(text)
    except UnexpectedInput as e:
        line, column = getattr(e, 'line', None), getattr(e, 'column', None)
        if (line is not None) and (line < 0):
            line, column = None, None
        raise FormulaSyntaxError(f'invalid formula {repr(text)}: {str(e).strip().splitlines()[0]}', line, column) from e
    return _FormulaBuilder(signature).build(tree)


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
