#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import logging
from typing import Dict
from typing import Mapping

import networkx as nx

from nomcheck.logic._measures import free_rec_vars
from nomcheck.logic._measures import subformulas
from nomcheck.logic._syntax import Fixpoint
from nomcheck.logic._syntax import Formula
from nomcheck.logic._syntax import Mu


log = logging.getLogger(__name__)


# ========================================================================= #
# Dependency Order                                                          #
# ========================================================================= #


def dependency_graph(phi: Formula) -> nx.DiGraph:
    """
    Directed graph over the bound recursion variables of `phi` with an
    edge `X -> Y` whenever `X` occurs free in the body of the binder of `Y`.
    Each node records its fixpoint kind under the `mu` attribute.
    """
    binders = [psi for psi in subformulas(phi) if isinstance(psi, Fixpoint)]
    recs = [psi.rec for psi in binders]
    if len(set(recs)) != len(recs):
        raise ValueError(f'alternation depth requires unique fixpoint binders, got: {recs}, normalize the formula first')
    graph = nx.DiGraph()
    for psi in binders:
        graph.add_node(psi.rec, mu=isinstance(psi, Mu))
    for psi in binders:
        for x in free_rec_vars(psi.body):
            if (x in graph) and (x != psi.rec):
                graph.add_edge(x, psi.rec)
    if not nx.is_directed_acyclic_graph(graph):
        raise ValueError(f'dependency order of {phi} is cyclic, normalize the formula first')
    return graph


def fixpoint_adepths(phi: Formula) -> Dict[str, int]:
    """
    Length of the longest chain `X = X1 <= X2 <= ...` in the dependency
    order starting at each bound variable, whose kinds alternate.
    """
    graph = nx.transitive_closure_dag(dependency_graph(phi))
    depths = {}

    def chain(x: str) -> int:
        if x not in depths:
            kind = graph.nodes[x]['mu']
            depths[x] = 1 + max((chain(y) for y in graph.successors(x) if graph.nodes[y]['mu'] != kind), default=0)
        return depths[x]

    for x in nx.topological_sort(graph):
        chain(x)
    return depths


def adepth_of(phi: Formula, rec: str) -> int:
    depths = fixpoint_adepths(phi)
    if rec not in depths:
        raise KeyError(f'{repr(rec)} is not a bound recursion variable of: {phi}')
    return depths[rec]


def alternation_depth(phi: Formula) -> int:
    return max(fixpoint_adepths(phi).values(), default=0)


# ========================================================================= #
# Ranks                                                                     #
# ========================================================================= #


def fixpoint_ranks(phi: Formula) -> Dict[str, int]:
    graph = dependency_graph(phi)
    ranks = {}
    for x, depth in fixpoint_adepths(phi).items():
        ranks[x] = 2 * (depth // 2) + (1 if graph.nodes[x]['mu'] else 0)
    log.debug(f'fixpoint ranks: {ranks}')
    return ranks


def rank(phi: Formula, ranks: Mapping[str, int]) -> int:
    """
    The priority of a position whose formula is `phi`, given the
    ranks of the root formula's binders from `fixpoint_ranks`.
    """
    if isinstance(phi, Fixpoint):
        return ranks[phi.rec]
    return 0


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
