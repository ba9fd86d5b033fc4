"""Connect Four decompositions, (iterated) decomposition graphs and the
decomposition number d(Delta).
"""

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import comb

from .errors import SizeLimitExceeded, ValidationError
from .staircase import StandardSet, connect_four_sum, height, predecessors

DEFAULT_MAX_DIM = 4
DEFAULT_MAX_SIZE = 8


@dataclass(frozen=True)
class Decomposition:
    """A multiset of staircases in N^(n-1) whose Connect Four sum is the parent.

    ``parts`` holds (staircase, multiplicity) pairs sorted by
    ``StandardSet.sort_key``.
    """

    parent_dim: int
    parts: tuple

    @classmethod
    def from_parts(cls, parts, parent_dim):
        counts = Counter(parts)
        ordered = sorted(counts.items(), key=lambda kv: kv[0].sort_key())
        return cls(parent_dim, tuple(ordered))

    def expanded(self):
        return [p for p, m in self.parts for _ in range(m)]

    def __len__(self):
        return sum(m for _, m in self.parts)

    def key(self):
        return tuple((p.sort_key(), m) for p, m in self.parts)

    def total(self):
        return connect_four_sum(self.expanded(), self.parent_dim)

    def pretty(self):
        return "{" + ", ".join(p.pretty() for p in self.expanded()) + "}"

    def to_json(self):
        return {"parts": [[p.to_json(), m] for p, m in self.parts]}

    @classmethod
    def from_json(cls, obj, parent_dim):
        try:
            parts = []
            for ss, m in obj["parts"]:
                parts.extend([StandardSet.from_json(ss)] * int(m))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad decomposition JSON: {exc}") from None
        return cls.from_parts(parts, parent_dim)


def height_vector(delta):
    """Column heights v_Delta over q^n(Delta)."""
    return delta.columns


def _compositions(total, caps):
    """All tuples (c_1..c_k) with 0 <= c_j <= caps[j] summing to total."""
    if not caps:
        if total == 0:
            yield ()
        return
    rest = sum(caps[1:])
    for c in range(min(caps[0], total), max(0, total - rest) - 1, -1):
        for tail in _compositions(total - c, caps[1:]):
            yield (c,) + tail


@lru_cache(maxsize=4096)
def enumerate_decompositions(delta):
    """All decompositions of ``delta``, duplicate-free and canonically sorted.

    Columns of q^n(Delta) are visited by decreasing height (ties in lex
    order), so every predecessor column comes first.  At each column we pick
    which of the partially built parts receive it; parts with identical
    content are interchangeable and only their count matters.
    """
    n = delta.dim
    if n < 1:
        raise ValidationError("decompositions need dimension >= 1")
    cols = delta.columns
    order = sorted(cols, key=lambda c: (-cols[c], c))
    h = height(delta)
    results = []

    def dfs(k, parts):
        if k == len(order):
            results.append(
                Decomposition.from_parts([StandardSet(p, n - 1, check=False) for p in parts], n)
            )
            return
        col = order[k]
        need = cols[col]
        preds = [p for _, p in predecessors(col)]
        groups = {}
        for idx, part in enumerate(parts):
            if all(p in part for p in preds):
                groups.setdefault(part, []).append(idx)
        if sum(len(v) for v in groups.values()) < need:
            return
        keys = sorted(groups, key=lambda s: (len(s), sorted(s)))
        for counts in _compositions(need, [len(groups[g]) for g in keys]):
            nxt = list(parts)
            for g, cnt in zip(keys, counts):
                for idx in groups[g][:cnt]:
                    nxt[idx] = g | {col}
            dfs(k + 1, nxt)

    dfs(0, [frozenset()] * h)
    results.sort(key=Decomposition.key)
    return tuple(results)


@lru_cache(maxsize=None)
def decomposition_number(delta):
    """d(Delta): 1 in dimensions <= 2, otherwise the binomial-product recursion."""
    if delta.dim <= 2:
        return 1
    total = 0
    for dec in enumerate_decompositions(delta):
        term = 1
        for part, mult in dec.parts:
            term *= comb(decomposition_number(part) + mult - 1, mult)
        total += term
    return total


# -- iterated decomposition graphs -------------------------------------------


@dataclass
class StaircaseNode:
    label: float
    delta: StandardSet
    children: list = field(default_factory=list)


@dataclass
class DecompositionNode:
    label: float
    decomposition: Decomposition
    children: list = field(default_factory=list)


@dataclass
class IteratedDecompositionGraph:
    root: StaircaseNode
    truncated: bool = False

    def nodes(self):
        """All nodes in depth-first order."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def label_counts(self):
        return Counter(node.label for node in self.nodes())

    def decomposition_nodes(self, label):
        return [n for n in self.nodes() if isinstance(n, DecompositionNode) and n.label == label]

    def leaves(self):
        return [n for n in self.nodes() if not n.children]

    def to_json(self):
        return {"truncated": self.truncated, "tree": _node_json(self.root)}

    def to_dot(self):
        lines = ["digraph decomposition {", "  node [fontname=Helvetica];"]
        counter = [0]

        def visit(node):
            ident = f"n{counter[0]}"
            counter[0] += 1
            if isinstance(node, StaircaseNode):
                text = node.delta.pretty()
                shape = "box"
            else:
                text = node.decomposition.pretty()
                shape = "ellipse"
            label = _label_text(node.label)
            lines.append(f'  {ident} [shape={shape}, label="{text}\\n[{label}]"];')
            for child in node.children:
                lines.append(f"  {ident} -> {visit(child)};")
            return ident

        visit(self.root)
        lines.append("}")
        return "\n".join(lines) + "\n"


def _label_text(label):
    return str(int(label)) if float(label).is_integer() else str(label)


def _label_value(label):
    return int(label) if float(label).is_integer() else label


def _node_json(node):
    if isinstance(node, StaircaseNode):
        out = {"label": _label_value(node.label), "delta": node.delta.to_json()}
    else:
        out = {"label": _label_value(node.label), **node.decomposition.to_json()}
    out["children"] = [_node_json(c) for c in node.children]
    return out


def build_iterated_graph(delta, *, truncate=False, max_dim=DEFAULT_MAX_DIM, max_size=DEFAULT_MAX_SIZE):
    """The iterated decomposition graph, optionally truncated below label 2.

    Truncation drops every node of label <= 2, so decomposition nodes of
    label 2 1/2 become leaves.  For dimension <= 2 the truncated graph keeps
    only the root.
    """
    if delta.dim > max_dim:
        raise SizeLimitExceeded(f"dimension {delta.dim} exceeds the limit {max_dim}")
    if len(delta) > max_size:
        raise SizeLimitExceeded(f"staircase size {len(delta)} exceeds the limit {max_size}")
    if not delta.elements:
        raise ValidationError("the staircase must be nonempty")

    def stair(d):
        node = StaircaseNode(d.dim, d)
        if d.dim == 0 or (truncate and d.dim <= 2):
            return node
        for dec in enumerate_decompositions(d):
            dnode = DecompositionNode(d.dim - 0.5, dec)
            if not (truncate and d.dim - 1 <= 2):
                dnode.children = [stair(p) for p in dec.expanded()]
            node.children.append(dnode)
        return node

    return IteratedDecompositionGraph(stair(delta), truncated=truncate)


def count_admissible_subgraphs(graph):
    """Admissible subgraphs up to symmetry, counted on the tree itself.

    A staircase node picks one decomposition child; a decomposition node
    takes all its children, and h identical children with e admissible
    subgraphs each contribute the number of size-h multisets from e choices.
    """
    memo = {}

    def stair(node):
        if not node.children:
            return 1
        key = id(node)
        if key not in memo:
            memo[key] = sum(dec(d) for d in node.children)
        return memo[key]

    def dec(node):
        groups = {}
        for child in node.children:
            groups.setdefault(child.delta, []).append(child)
        total = 1
        for children in groups.values():
            e = stair(children[0])
            total *= comb(e + len(children) - 1, len(children))
        return total

    return stair(graph.root)


def enumerate_assemblies(delta):
    """Every way, up to symmetry, to build Delta from #Delta points.

    Each assembly is a nested tuple: a decomposition key plus, per distinct
    part, a sorted tuple of sub-assemblies.  Used as a brute-force check on
    the counting recursions.
    """
    return _assemblies(delta)


@lru_cache(maxsize=None)
def _assemblies(delta):
    if delta.dim == 0:
        return ((),)
    out = []
    for d in enumerate_decompositions(delta):
        per_part = []
        for part, mult in d.parts:
            subs = _assemblies(part)
            per_part.append(list(combinations_with_replacement(subs, mult)))
        for choice in product(*per_part):
            out.append((d.key(), choice))
    return tuple(out)


def assembly_leaf_count(assembly):
    """Number of points used by an assembly (equals #Delta)."""
    if assembly == ():
        return 1
    _, choice = assembly
    return sum(assembly_leaf_count(sub) for group in choice for sub in group)
