"""Permutation groups on 0..n-1: orbits, stabilizer chains, blocks.

The Schreier-Sims build is deterministic (no randomization): base points are
taken as the successive smallest moved points, and transversals are stored as
words over the strong generators.  Degrees here stay small (a few hundred),
so exactness and reproducibility win over raw speed.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import VertexPartition


class Perm:
    """Permutation as an image vector: point i maps to images[i]."""

    __slots__ = ("img",)

    def __init__(self, images):
        img = tuple(images)
        if sorted(img) != list(range(len(img))):
            raise ValueError("not a permutation of 0..n-1")
        self.img = img

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Perm":
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.img)

    def __call__(self, point: int) -> int:
        return self.img[point]

    def __mul__(self, other: "Perm") -> "Perm":
        """Apply self first, then other."""
        return Perm(other.img[x] for x in self.img)

    def inv(self) -> "Perm":
        out = [0] * len(self.img)
        for i, x in enumerate(self.img):
            out[x] = i
        return Perm(out)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.img))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def __repr__(self):
        return f"Perm({list(self.img)})"


def orbits(gens: list[Perm], n: int | None = None) -> VertexPartition:
    """Orbit cells, each sorted, ordered by their minimum element."""
    if n is None:
        if not gens:
            raise ValueError("need explicit n for an empty generator list")
        n = gens[0].degree
    if any(g.degree != n for g in gens):
        raise ValueError("generators have mismatched degrees")
    seen = [False] * n
    cells = []
    for start in range(n):
        if seen[start]:
            continue
        orb = [start]
        seen[start] = True
        i = 0
        while i < len(orb):
            pt = orb[i]
            i += 1
            for g in gens:
                q = g(pt)
                if not seen[q]:
                    seen[q] = True
                    orb.append(q)
        cells.append(tuple(sorted(orb)))
    return VertexPartition(tuple(cells), origin="orbits")


@dataclass
class _Level:
    point: int
    gen_idx: list[int]  # indices into the strong generator list
    orbit: dict[int, tuple[int, ...]]  # point -> transversal word over sgens


class Bsgs:
    """Base and strong generating set with transversal words."""

    def __init__(self, n: int, base: list[int], sgens: list[Perm], levels: list[_Level]):
        self.n = n
        self.base = base
        self.sgens = sgens
        self._sinvs = [g.inv() for g in sgens]
        self.levels = levels
        self.order = 1
        for lev in levels:
            self.order *= len(lev.orbit)

    def transversal(self, level: int, point: int) -> Perm:
        """Permutation mapping base[level] to point (composed from its word)."""
        word = self.levels[level].orbit[point]
        g = Perm.identity(self.n)
        for idx in word:
            g = g * self.sgens[idx]
        return g

    def _strip(self, g: Perm) -> tuple[Perm, int]:
        """Sift g through the chain; return (residue, level reached)."""
        for i, lev in enumerate(self.levels):
            target = g(lev.point)
            if target not in lev.orbit:
                return g, i
            # divide off the transversal: apply inverse word
            for idx in reversed(lev.orbit[target]):
                g = g * self._sinvs[idx]
        return g, len(self.levels)

    def contains(self, g: Perm) -> bool:
        if g.degree != self.n:
            return False
        res, _ = self._strip(g)
        return res.is_identity()

    def stabilizer_gens(self, depth: int = 1) -> list[Perm]:
        """Strong generators fixing the first `depth` base points."""
        fixed = self.base[:depth]
        return [g for g in self.sgens if all(g(b) == b for b in fixed)]


def _orbit_words(n: int, point: int, gens: list[Perm], gen_idx: list[int]):
    orbit = {point: ()}
    queue = [point]
    while queue:
        pt = queue.pop(0)
        word = orbit[pt]
        for idx in gen_idx:
            q = gens[idx](pt)
            if q not in orbit:
                orbit[q] = word + (idx,)
                queue.append(q)
    return orbit


def bsgs_build(gens: list[Perm], n: int | None = None, base_prefix=()) -> Bsgs:
    """Deterministic Schreier-Sims.  base_prefix forces leading base points
    (used for point stabilizers)."""
    if n is None:
        if not gens:
            raise ValueError("need explicit n for an empty generator list")
        n = gens[0].degree
    if any(g.degree != n for g in gens):
        raise ValueError("generators have mismatched degrees")

    sgens: list[Perm] = []
    sinvs: list[Perm] = []
    base: list[int] = [b for b in base_prefix]
    levels: list[_Level] = [_Level(b, [], {b: ()}) for b in base]

    def recompute(level: int) -> None:
        lev = levels[level]
        lev.orbit = _orbit_words(n, lev.point, sgens, lev.gen_idx)

    def strip(g: Perm, start: int) -> tuple[Perm, int]:
        for i in range(start, len(levels)):
            lev = levels[i]
            target = g(lev.point)
            if target not in lev.orbit:
                return g, i
            for idx in reversed(lev.orbit[target]):
                g = g * sinvs[idx]
        return g, len(levels)

    def add_generator(g: Perm, level: int) -> None:
        """Insert g (known to fix base[0..level-1]) as a strong generator.

        g joins every level whose base prefix it fixes, i.e. levels 0..level.
        """
        sgens.append(g)
        sinvs.append(g.inv())
        idx = len(sgens) - 1
        if level == len(levels):
            moved = min(p for p in range(n) if g(p) != p)
            base.append(moved)
            levels.append(_Level(moved, [], {moved: ()}))
        for i in range(len(levels)):
            if all(g(b) == b for b in base[:i]):
                levels[i].gen_idx.append(idx)
                recompute(i)

    for g in gens:
        if g.is_identity():
            continue
        res, lev = strip(g, 0)
        if not res.is_identity():
            add_generator(res, lev)

    # close each level under Schreier generators, deepest-first
    i = len(levels) - 1
    while i >= 0:
        lev = levels[i]
        clean = True
        for pt in sorted(lev.orbit):
            t_pt = None
            for idx in lev.gen_idx:
                gen = sgens[idx]
                if t_pt is None:
                    t_pt = _word_perm(n, lev.orbit[pt], sgens)
                image = gen(pt)
                t_img_inv = _word_perm(n, lev.orbit[image], sgens).inv()
                schreier = t_pt * gen * t_img_inv
                if schreier.is_identity():
                    continue
                res, j = strip(schreier, i + 1)
                if not res.is_identity():
                    add_generator(res, j)
                    clean = False
                    i = j
                    break
            if not clean:
                break
        if clean:
            i -= 1

    return Bsgs(n, base, sgens, levels)


def _word_perm(n: int, word: tuple[int, ...], sgens: list[Perm]) -> Perm:
    g = Perm.identity(n)
    for idx in word:
        g = g * sgens[idx]
    return g


def point_stabilizer(b: Bsgs, u: int) -> list[Perm]:
    """Generators of the stabilizer of u (base change so u leads the base)."""
    if b.base and b.base[0] == u:
        return b.stabilizer_gens(1)
    rebuilt = bsgs_build(b.sgens if b.sgens else [], n=b.n, base_prefix=(u,))
    return rebuilt.stabilizer_gens(1)


def tuple_orbit_size(gens: list[Perm], t: tuple[int, ...]) -> int:
    """Size of the orbit of t under the coordinatewise action."""
    if not gens:
        return 1
    start = tuple(t)
    seen = {start}
    queue = [start]
    while queue:
        cur = queue.pop(0)
        for g in gens:
            img = tuple(g(x) for x in cur)
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return len(seen)


@dataclass(frozen=True)
class BlockSystem:
    blocks: VertexPartition
    trivial: bool


def _minimal_block(gens: list[Perm], n: int, alpha: int, beta: int) -> tuple[tuple[int, ...], ...]:
    """Finest block system whose block containing alpha also contains beta."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> int:
        """Merge classes; return the representative that lost."""
        rx, ry = find(x), find(y)
        if rx == ry:
            return -1
        if rx > ry:
            rx, ry = ry, rx
        parent[ry] = rx
        return ry

    union(alpha, beta)
    queue = [beta]
    while queue:
        gamma = queue.pop(0)
        delta = find(gamma)
        for g in gens:
            loser = union(g(gamma), g(delta))
            if loser != -1:
                queue.append(loser)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(find(v), []).append(v)
    return tuple(tuple(sorted(c)) for c in sorted(classes.values()))


def minimal_blocks(gens: list[Perm], n: int | None = None) -> tuple[list[BlockSystem], bool]:
    """All minimal block systems through point 0, plus a primitivity flag.

    Requires a transitive action; primitive iff every minimal system is the
    one-block partition.
    """
    if n is None:
        if not gens:
            raise ValueError("need explicit n for an empty generator list")
        n = gens[0].degree
    orb = orbits(gens, n)
    if len(orb.cells) != 1:
        raise ValueError("minimal_blocks needs a transitive group")
    if n == 1:
        return [BlockSystem(VertexPartition(((0,),)), True)], True
    systems = []
    seen = set()
    primitive = True
    for beta in range(1, n):
        cells = _minimal_block(gens, n, 0, beta)
        trivial = len(cells) == 1
        if not trivial:
            primitive = False
        if cells not in seen:
            seen.add(cells)
            systems.append(BlockSystem(VertexPartition(cells, origin="user"), trivial))
    return systems, primitive


def action_restriction(gens: list[Perm], s) -> tuple[list[Perm], bool]:
    """Restrict to an invariant set s, relabeled 0..|s|-1 in ascending order.

    Returns the image generators and whether the restriction is faithful
    (kernel triviality tested by comparing group orders).
    """
    pts = sorted(s)
    pos = {p: i for i, p in enumerate(pts)}
    images = []
    for g in gens:
        img = [0] * len(pts)
        for p in pts:
            q = g(p)
            if q not in pos:
                raise ValueError(f"set not invariant: generator moves {p} to {q}")
            img[pos[p]] = pos[q]
        images.append(Perm(img))
    if not gens:
        return [], True
    full = bsgs_build(gens).order
    restricted = bsgs_build(images, n=len(pts)).order
    return images, full == restricted
