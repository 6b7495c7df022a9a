"""Stallings graphs of finitely generated subgroups of free groups.

Graphs are kept folded, trimmed to their core and with vertices numbered in
breadth-first order from the basepoint (vertex 0), scanning labels in the
order ``a1, A1, a2, A2, ...``.  Two graphs of the same subgroup are therefore
equal as Python objects.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .intlat import IntMatrix, cokernel
from .words import Word, letter_order, reduce

DEFAULT_MAX_VERTICES = 10**6


class GraphSizeError(RuntimeError):
    """Raised when a coset graph would exceed the vertex budget."""

    def __init__(self, order: int, bound: int):
        super().__init__(f"coset graph needs {order} vertices, bound is {bound}")
        self.order = order
        self.bound = bound


@dataclass(frozen=True)
class SubgroupGraph:
    """A folded core graph.

    ``out[v]`` maps a signed label to the endpoint of the edge leaving ``v``
    with that label (negative labels are reversed edges).
    """

    rank: int
    out: tuple[dict, ...]

    @property
    def num_vertices(self) -> int:
        return len(self.out)

    @property
    def num_edges(self) -> int:
        return sum(1 for adj in self.out for x in adj if x > 0)

    def edges(self) -> list[tuple[int, int, int]]:
        """Positively oriented edges ``(src, gen, dst)``, sorted."""
        return sorted((v, x, w) for v, adj in enumerate(self.out) for x, w in adj.items() if x > 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, SubgroupGraph) and self.rank == other.rank and self.edges() == other.edges() \
            and self.num_vertices == other.num_vertices

    def __hash__(self) -> int:
        return hash((self.rank, self.num_vertices, tuple(self.edges())))

    def dump(self) -> str:
        """One ``src gen dst`` line per edge; for debugging only."""
        return "\n".join(f"{s} {x} {d}" for s, x, d in self.edges())


# -- construction -----------------------------------------------------------

def _fold(n: int, edges: Iterable[tuple[int, int, int]]) -> tuple[int, list[tuple[int, int, int]]]:
    """Fold a labelled graph on vertices ``0..n-1``; returns the quotient."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = list(edges)
    changed = True
    while changed:
        changed = False
        table: dict[tuple[int, int], int] = {}
        for s, x, d in edges:
            s, d = find(s), find(d)
            for key, tgt in (((s, x), d), ((d, -x), s)):
                prev = table.get(key)
                if prev is None:
                    table[key] = tgt
                else:
                    a, b = find(prev), find(tgt)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
                        changed = True
    roots = sorted({find(v) for v in range(n)})
    index = {r: i for i, r in enumerate(roots)}
    folded = {(index[find(s)], x, index[find(d)]) for s, x, d in edges}
    return len(roots), sorted(folded)


def _adjacency(n: int, edges: Iterable[tuple[int, int, int]]) -> list[dict]:
    out: list[dict] = [dict() for _ in range(n)]
    for s, x, d in edges:
        out[s][x] = d
        out[d][-x] = s
    return out


def _trim(out: list[dict]) -> list[dict]:
    """Strip hanging trees: repeatedly delete degree one vertices other than 0."""
    alive = [True] * len(out)
    queue = deque(v for v in range(1, len(out)) if len(out[v]) == 1)
    while queue:
        v = queue.popleft()
        if not alive[v] or len(out[v]) != 1:
            continue
        (x, w), = out[v].items()
        alive[v] = False
        out[v] = {}
        del out[w][-x]
        if w != 0 and len(out[w]) == 1:
            queue.append(w)
    return [adj if alive[v] else None for v, adj in enumerate(out)]


def _canonical(rank: int, out: Sequence[Optional[dict]]) -> SubgroupGraph:
    order = letter_order(rank)
    number = {0: 0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for x in order:
            w = out[v].get(x)
            if w is not None and w not in number:
                number[w] = len(number)
                queue.append(w)
    new: list[dict] = [dict() for _ in number]
    for v, i in number.items():
        new[i] = {x: number[w] for x, w in out[v].items()}
    return SubgroupGraph(rank, tuple(new))


def graph_from_basis(words: Sequence[Word], rank: int) -> SubgroupGraph:
    """Stallings graph of the subgroup generated by ``words``."""
    n = 1
    edges = []
    for w in words:
        if w.rank != rank:
            raise ValueError(f"word of rank {w.rank} in a rank {rank} graph")
        if w.is_identity():
            continue
        prev = 0
        for pos, x in enumerate(w.letters):
            if pos == len(w) - 1:
                nxt = 0
            else:
                nxt = n
                n += 1
            if x > 0:
                edges.append((prev, x, nxt))
            else:
                edges.append((nxt, -x, prev))
            prev = nxt
    n, folded = _fold(n, edges)
    return _canonical(rank, _trim(_adjacency(n, folded)))


def member(g: SubgroupGraph, w: Word) -> bool:
    """True iff ``w`` reads a closed path at the basepoint."""
    if w.rank != g.rank:
        raise ValueError(f"word of rank {w.rank} against a rank {g.rank} graph")
    v = 0
    for x in w.letters:
        v = g.out[v].get(x)
        if v is None:
            return False
    return v == 0


def graph_rank(g: SubgroupGraph) -> int:
    return g.num_edges - g.num_vertices + 1


def index_of(g: SubgroupGraph) -> Optional[int]:
    """Index in the ambient free group, ``None`` when infinite."""
    full = 2 * g.rank
    if all(len(adj) == full for adj in g.out):
        return g.num_vertices
    return None


def _tree_paths(g: SubgroupGraph) -> tuple[list[tuple[int, ...]], set]:
    order = letter_order(g.rank)
    paths: list[Optional[tuple[int, ...]]] = [None] * g.num_vertices
    paths[0] = ()
    tree = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for x in order:
            w = g.out[v].get(x)
            if w is not None and paths[w] is None:
                paths[w] = paths[v] + (x,)
                tree.add((v, x, w) if x > 0 else (w, -x, v))
                queue.append(w)
    return paths, tree


def basis_of(g: SubgroupGraph) -> list[Word]:
    """Free basis read off a breadth-first spanning tree.

    One word per non-tree edge ``(src, gen, dst)``, listed in sorted edge
    order: path to ``src``, then ``gen``, then back from ``dst``.
    """
    paths, tree = _tree_paths(g)
    out = []
    for s, x, d in g.edges():
        if (s, x, d) in tree:
            continue
        back = tuple(-y for y in reversed(paths[d]))
        out.append(reduce(paths[s] + (x,) + back, g.rank))
    return out


# -- coset graphs over finite abelian groups --------------------------------

@dataclass(frozen=True)
class FiniteAbelianGroup:
    """``Z/d_1 + ... + Z/d_n`` with elements stored as coordinate tuples."""

    factors: tuple[int, ...]

    def __post_init__(self):
        if any(d < 2 for d in self.factors):
            raise ValueError(f"invariant factors must be >= 2, got {self.factors}")

    @property
    def order(self) -> int:
        out = 1
        for d in self.factors:
            out *= d
        return out

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.factors)

    def add(self, x, y) -> tuple[int, ...]:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.factors))

    def neg(self, x) -> tuple[int, ...]:
        return tuple((-a) % d for a, d in zip(x, self.factors))

    def element(self, coords: Sequence[int]) -> tuple[int, ...]:
        if len(coords) != len(self.factors):
            raise ValueError("coordinate count does not match the factors")
        return tuple(a % d for a, d in zip(coords, self.factors))

    def subgroup_order(self, gens: Sequence[Sequence[int]]) -> int:
        """Order of the subgroup generated by ``gens``.

        Equals ``|G| / |Z^n / (span(gens) + diag(d) Z^n)|``, read off a Smith form.
        """
        n = len(self.factors)
        if n == 0:
            return 1
        cols = [self.element(x) for x in gens]
        cols += [tuple(d if i == j else 0 for i in range(n)) for j, d in enumerate(self.factors)]
        quotient = cokernel(IntMatrix.from_columns(cols, n)).order()
        return self.order // quotient


def schreier_kernel_graph(
    rank: int,
    images: Sequence[Sequence[int]],
    group: FiniteAbelianGroup,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> SubgroupGraph:
    """Coset graph of the kernel of ``F_rank -> group``, generator ``i -> images[i-1]``.

    Only the image subgroup is enumerated, so the vertex count is the index of
    the kernel.  Raises :class:`GraphSizeError` before allocating when the image
    is larger than ``max_vertices``.
    """
    if len(images) != rank:
        raise ValueError(f"{len(images)} images for rank {rank}")
    imgs = [group.element(x) for x in images]
    order = group.subgroup_order(imgs)
    if order > max_vertices:
        raise GraphSizeError(order, max_vertices)
    number = {group.zero: 0}
    queue = deque([group.zero])
    out: list[dict] = [dict()]
    while queue:
        x = queue.popleft()
        v = number[x]
        for i, y in enumerate(imgs, start=1):
            z = group.add(x, y)
            if z not in number:
                number[z] = len(number)
                out.append(dict())
                queue.append(z)
            w = number[z]
            out[v][i] = w
            out[w][-i] = v
    return _canonical(rank, out)
