"""Bundle expressions: a small AST, canonical printing, and expansion.

Presets (R, E10, E16, K) and homological shifts are complexes, not
bundles; ``expand`` refuses them and the derived layer handles them.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bundles import DEFAULT_K, DEFAULT_N, BundleSum, SchurBundle

BASES = ("U*", "U", "Q", "Uperp")
TAUTOLOGICAL = ("O",) + BASES
PRESETS = ("R", "E10", "E16", "K")


class ExpressionError(ValueError):
    pass


class ComplexExpressionError(ExpressionError):
    """Raised when a bundle is required but the expression is a complex."""


class Node:
    __slots__ = ()


@dataclass(frozen=True)
class Taut(Node):
    name: str


@dataclass(frozen=True)
class SchurOf(Node):
    weight: tuple[int, ...]
    base: str

    def __post_init__(self):
        w = self.weight
        if not w or any(w[i] < w[i + 1] for i in range(len(w) - 1)):
            raise ExpressionError(f"S{{...}} weight {list(w)} must be non-empty and non-increasing")


@dataclass(frozen=True)
class Wedge(Node):
    power: int
    base: str


@dataclass(frozen=True)
class Sym(Node):
    power: int
    base: str


@dataclass(frozen=True)
class Preset(Node):
    name: str


@dataclass(frozen=True)
class Sum(Node):
    items: tuple[Node, ...]


@dataclass(frozen=True)
class Tensor(Node):
    items: tuple[Node, ...]


@dataclass(frozen=True)
class Twist(Node):
    inner: Node
    t: int


@dataclass(frozen=True)
class Shift(Node):
    inner: Node
    m: int


def to_text(node: Node) -> str:
    """Canonical text; parsing it back gives an equal AST."""
    if isinstance(node, Taut):
        return node.name
    if isinstance(node, SchurOf):
        return "S{" + ",".join(str(x) for x in node.weight) + "}" + node.base
    if isinstance(node, Wedge):
        return f"W{node.power}{node.base}"
    if isinstance(node, Sym):
        return f"Sym{node.power}{node.base}"
    if isinstance(node, Preset):
        return node.name
    if isinstance(node, Sum):
        return " + ".join(_wrap(x, (Sum,)) for x in node.items)
    if isinstance(node, Tensor):
        return " * ".join(_wrap(x, (Sum, Tensor)) for x in node.items)
    if isinstance(node, Twist):
        return _wrap(node.inner, (Sum, Tensor, Twist, Shift)) + f"({node.t})"
    if isinstance(node, Shift):
        return _wrap(node.inner, (Sum, Tensor, Shift)) + f"[{node.m}]"
    raise TypeError(node)


def _wrap(node: Node, kinds) -> str:
    text = to_text(node)
    if isinstance(node, kinds):
        return f"({text})"
    # "U*" directly followed by "(" would read as a twist of U*
    return text


def _base_atom(base: str, weight: tuple[int, ...], k: int, n: int) -> BundleSum:
    rank = k if base in ("U", "U*") else n - k
    if len(weight) > rank:
        return BundleSum()  # e.g. W4 of a rank-3 bundle
    if len(weight) < rank:
        if weight[-1] < 0:
            raise ExpressionError(f"cannot pad weight {list(weight)} with negative tail")
        weight = weight + (0,) * (rank - len(weight))
    dual = tuple(-x for x in reversed(weight))
    zero_b, zero_c = (0,) * k, (0,) * (n - k)
    if base == "U*":
        atom = SchurBundle(weight, zero_c, k, n)
    elif base == "U":
        atom = SchurBundle(dual, zero_c, k, n)
    elif base == "Uperp":
        atom = SchurBundle(zero_b, weight, k, n)
    elif base == "Q":
        atom = SchurBundle(zero_b, dual, k, n)
    else:
        raise ExpressionError(f"unknown base {base!r}")
    return BundleSum.of(atom)


def expand(node: Node, k: int = DEFAULT_K, n: int = DEFAULT_N) -> BundleSum:
    """Expand an expression into a sum of Schur atoms on Gr(k, n)."""
    if isinstance(node, Taut):
        if node.name == "O":
            return BundleSum.of(SchurBundle.trivial(k, n))
        return _base_atom(node.name, (1,), k, n)
    if isinstance(node, SchurOf):
        return _base_atom(node.base, node.weight, k, n)
    if isinstance(node, Wedge):
        if node.power < 0:
            raise ExpressionError("negative exterior power")
        if node.power == 0:
            return BundleSum.of(SchurBundle.trivial(k, n))
        return _base_atom(node.base, (1,) * node.power, k, n)
    if isinstance(node, Sym):
        if node.power < 0:
            raise ExpressionError("negative symmetric power")
        return _base_atom(node.base, (node.power,), k, n)
    if isinstance(node, Sum):
        total = BundleSum()
        for x in node.items:
            total = total + expand(x, k, n)
        return total
    if isinstance(node, Tensor):
        total = BundleSum.of(SchurBundle.trivial(k, n))
        for x in node.items:
            total = total * expand(x, k, n)
        return total
    if isinstance(node, Twist):
        return expand(node.inner, k, n).twisted(node.t)
    if isinstance(node, (Preset, Shift)):
        raise ComplexExpressionError(f"{to_text(node)!r} is a complex, not a bundle")
    raise TypeError(node)


def atom_node(s: SchurBundle) -> Node:
    """Canonical expression for a single atom."""
    parts: list[Node] = []
    if any(s.b):
        parts.append(SchurOf(s.b, "U*"))
    if any(s.c):
        parts.append(SchurOf(s.c, "Uperp"))
    if not parts:
        return Taut("O")
    return parts[0] if len(parts) == 1 else Tensor(tuple(parts))


def sum_node(s: BundleSum) -> Node | None:
    items: list[Node] = []
    for a, m in s:
        items.extend([atom_node(a)] * m)
    if not items:
        return None
    return items[0] if len(items) == 1 else Sum(tuple(items))
