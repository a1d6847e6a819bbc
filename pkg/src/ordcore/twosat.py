"""2-CNF satisfiability via implication graph and strongly connected components.

A literal is a pair (variable index, polarity).  Unit clauses are written as
duplicated-literal clauses (l, l).  The solver builds the implication graph
(clause a|b contributes ~a -> b and ~b -> a), computes SCCs with an iterative
Tarjan pass, and reads an assignment off the reverse topological order.
Linear in the number of clauses.
"""

from __future__ import annotations

from dataclasses import dataclass

Literal = tuple[int, bool]


class TwoSatError(ValueError):
    pass


@dataclass(frozen=True)
class TwoSatInstance:
    var_count: int
    clauses: tuple[tuple[Literal, Literal], ...]

    def __post_init__(self) -> None:
        for c in self.clauses:
            for var, _pol in c:
                if not 0 <= var < self.var_count:
                    raise TwoSatError(f"variable {var} out of range")


@dataclass(frozen=True)
class Assignment:
    values: tuple[bool, ...]


def _lit_node(lit: Literal) -> int:
    # node 2v for the positive literal of v, 2v+1 for the negative
    var, pol = lit
    return 2 * var + (0 if pol else 1)


def _neg_node(node: int) -> int:
    return node ^ 1


def solve(inst: TwoSatInstance) -> Assignment | None:
    """Some satisfying assignment, or None when unsatisfiable.

    Deterministic for a fixed clause order.  Variable v is set true iff the
    SCC of its positive literal is closer to the sinks of the condensation
    than the SCC of its negative literal.
    """
    n_nodes = 2 * inst.var_count
    adj: list[list[int]] = [[] for _ in range(n_nodes)]
    for a, b in inst.clauses:
        adj[_neg_node(_lit_node(a))].append(_lit_node(b))
        adj[_neg_node(_lit_node(b))].append(_lit_node(a))

    # iterative Tarjan; comp ids increase from the sinks upward
    index = [-1] * n_nodes
    low = [0] * n_nodes
    comp = [-1] * n_nodes
    on_stack = [False] * n_nodes
    stack: list[int] = []
    counter = 0
    comp_count = 0

    for root in range(n_nodes):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            node, ptr = work.pop()
            if ptr == 0:
                index[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack[node] = True
            elif low[adj[node][ptr - 1]] < low[node]:
                low[node] = low[adj[node][ptr - 1]]
            advanced = False
            while ptr < len(adj[node]):
                nxt = adj[node][ptr]
                if index[nxt] == -1:
                    work.append((node, ptr + 1))
                    work.append((nxt, 0))
                    advanced = True
                    break
                if on_stack[nxt] and index[nxt] < low[node]:
                    low[node] = index[nxt]
                ptr += 1
            if advanced:
                continue
            if low[node] == index[node]:
                while True:
                    top = stack.pop()
                    on_stack[top] = False
                    comp[top] = comp_count
                    if top == node:
                        break
                comp_count += 1

    values = []
    for v in range(inst.var_count):
        if comp[2 * v] == comp[2 * v + 1]:
            return None
        values.append(comp[2 * v] < comp[2 * v + 1])
    return Assignment(tuple(values))


def check(inst: TwoSatInstance, a: Assignment) -> bool:
    """True iff every clause contains a literal satisfied by a."""
    if len(a.values) != inst.var_count:
        raise TwoSatError(
            f"assignment length {len(a.values)} != variable count {inst.var_count}"
        )
    return all(
        a.values[va] == pa or a.values[vb] == pb for (va, pa), (vb, pb) in inst.clauses
    )
