"""Seed quivers and their combinatorics.

Quivers are value types: every operation returns a new quiver.  Arrows
carry integer multiplicities.  Arrows joining two frozen vertices are
never stored, since seeds are only defined up to such arrows.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Optional

from .errors import FrozenVertex, Unclassifiable
from .words import Word


@dataclass(frozen=True)
class Vertex:
    id: int
    color: int
    column: int
    frozen: bool = False


class Quiver:
    """A finite quiver without loops or 2-cycles between mutable vertices.

    ``line_color``/``summit_color`` are set on bicolor subquivers so the
    saw-teeth classifier knows which color plays which role.
    """

    __slots__ = ("vertices", "arrows", "line_color", "summit_color")

    def __init__(
        self,
        vertices: Iterable[Vertex],
        arrows: Optional[dict[tuple[int, int], int]] = None,
        line_color: Optional[int] = None,
        summit_color: Optional[int] = None,
    ):
        self.vertices: dict[int, Vertex] = {v.id: v for v in vertices}
        self.arrows: dict[tuple[int, int], int] = {}
        self.line_color = line_color
        self.summit_color = summit_color
        if arrows:
            for (s, t), m in arrows.items():
                self._add(s, t, m)

    # -- construction helpers ---------------------------------------------

    def _add(self, s: int, t: int, mult: int = 1) -> None:
        if mult == 0:
            return
        if s == t:
            raise ValueError("loops are not allowed")
        if s not in self.vertices or t not in self.vertices:
            raise KeyError(f"arrow {s}->{t} uses an unknown vertex")
        if self.vertices[s].frozen and self.vertices[t].frozen:
            return
        self.arrows[(s, t)] = self.arrows.get((s, t), 0) + mult

    def copy(self) -> "Quiver":
        q = Quiver(self.vertices.values())
        q.arrows = dict(self.arrows)
        q.line_color = self.line_color
        q.summit_color = self.summit_color
        return q

    # -- queries ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Quiver)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )

    def __hash__(self):
        return hash((frozenset(self.vertices.items()), frozenset(self.arrows.items())))

    def mult(self, s: int, t: int) -> int:
        return self.arrows.get((s, t), 0)

    def has_arrow(self, s: int, t: int) -> bool:
        return (s, t) in self.arrows

    def arrows_into(self, k: int) -> list[tuple[int, int]]:
        """(source, multiplicity) pairs of arrows ending at k."""
        return [(s, m) for (s, t), m in self.arrows.items() if t == k]

    def arrows_out_of(self, k: int) -> list[tuple[int, int]]:
        """(target, multiplicity) pairs of arrows starting at k."""
        return [(t, m) for (s, t), m in self.arrows.items() if s == k]

    def neighbors(self, k: int) -> set[int]:
        out = {t for (s, t) in self.arrows if s == k}
        out |= {s for (s, t) in self.arrows if t == k}
        return out

    def ids_of_color(self, color: int) -> list[int]:
        return sorted(v.id for v in self.vertices.values() if v.color == color)

    def colors(self) -> list[int]:
        return sorted({v.color for v in self.vertices.values()})

    def skew_matrix(self) -> dict[tuple[int, int], int]:
        """Signed arrow-count matrix b[(i,j)] = #(i->j) - #(j->i)."""
        out: dict[tuple[int, int], int] = {}
        for (s, t), m in self.arrows.items():
            out[(s, t)] = out.get((s, t), 0) + m
            out[(t, s)] = out.get((t, s), 0) - m
        return out

    def __repr__(self) -> str:  # pragma: no cover
        return f"Quiver({len(self.vertices)} vertices, {sum(self.arrows.values())} arrows)"

    # -- transformations -----------------------------------------------------

    def restricted(self, keep: set[int]) -> "Quiver":
        """Subquiver on a vertex subset, keeping arrows inside it."""
        q = Quiver(v for v in self.vertices.values() if v.id in keep)
        for (s, t), m in self.arrows.items():
            if s in keep and t in keep:
                q._add(s, t, m)
        q.line_color = self.line_color
        q.summit_color = self.summit_color
        return q

    def without_vertices(self, drop: set[int]) -> "Quiver":
        return self.restricted(set(self.vertices) - set(drop))

    def with_frozen(self, frozen_ids: set[int]) -> "Quiver":
        """Mark vertices frozen; arrows between two frozen vertices drop."""
        verts = [replace(v, frozen=(v.id in frozen_ids)) for v in self.vertices.values()]
        q = Quiver(verts)
        for (s, t), m in self.arrows.items():
            q._add(s, t, m)
        return q

    def mutate(self, k: int) -> "Quiver":
        """Fomin-Zelevinsky mutation at a mutable vertex."""
        if k not in self.vertices:
            raise KeyError(f"no vertex {k}")
        if self.vertices[k].frozen:
            raise FrozenVertex(f"vertex {k} is frozen")
        ins = self.arrows_into(k)
        outs = self.arrows_out_of(k)
        new: dict[tuple[int, int], int] = {}
        for (s, t), m in self.arrows.items():
            if s == k or t == k:
                continue
            new[(s, t)] = new.get((s, t), 0) + m
        # compose paths through k
        for s, m1 in ins:
            for t, m2 in outs:
                if s != t:
                    new[(s, t)] = new.get((s, t), 0) + m1 * m2
        # reverse arrows at k
        for s, m in ins:
            new[(k, s)] = new.get((k, s), 0) + m
        for t, m in outs:
            new[(t, k)] = new.get((t, k), 0) + m
        # cancel two-cycles
        for (s, t) in list(new):
            if s < t and (t, s) in new:
                m = min(new[(s, t)], new[(t, s)])
                new[(s, t)] -= m
                new[(t, s)] -= m
        q = Quiver(self.vertices.values())
        for (s, t), m in new.items():
            q._add(s, t, m)
        return q

    def bicolor(self, c1: int, c2: int) -> "Quiver":
        """The (c1, c2)-bicolor subquiver; not symmetric in its arguments.

        Keeps the vertices of both colors, the arrows between two
        c1-vertices and the arrows joining the two colors in either
        direction, but not the arrows between two c2-vertices.
        """
        keep = {v.id for v in self.vertices.values() if v.color in (c1, c2)}
        q = Quiver(v for v in self.vertices.values() if v.id in keep)
        for (s, t), m in self.arrows.items():
            if s not in keep or t not in keep:
                continue
            cs, ct = self.vertices[s].color, self.vertices[t].color
            if cs == c2 and ct == c2:
                continue
            q._add(s, t, m)
        q.line_color = c1
        q.summit_color = c2
        return q


def build_gamma(word: Word) -> Quiver:
    """The combinatorial quiver of a word's initial seed.

    Vertices k = 1..l(w) sit on line i_k, column k.  Horizontal arrows
    run k -> k+ inside every color line.  An ordinary arrow j -> k (with
    j > k of a different color) exists when the colors are adjacent and
    j+ >= k+ > j > k, with multiplicity -a_{i_j, i_k}.
    """
    c = word.cartan
    L = len(word)
    q = Quiver(Vertex(k, word.color(k), k) for k in range(1, L + 1))
    for k in range(1, L + 1):
        kp = word.succ(k)
        if kp <= L:
            q._add(k, kp, 1)
    for j in range(2, L + 1):
        for k in range(1, j):
            ij, ik = word.color(j), word.color(k)
            if ij == ik or not c.adjacent(ij, ik):
                continue
            if word.succ(j) >= word.succ(k) > j:
                q._add(j, k, -c.a(ij, ik))
    return q


# ---------------------------------------------------------------------------
# saw-teeth classification


@dataclass(frozen=True)
class Tooth:
    """One tooth: the cycle left_end -> summit -> right_end -> ... -> left_end."""

    right_end: int
    summit: int
    left_end: int
    chain: tuple[int, ...]  # line vertices from right_end to left_end inclusive


@dataclass
class SawTeethReport:
    line_color: int
    summit_color: int
    valid: bool
    violation: Optional[str] = None
    initial_run: list[int] = field(default_factory=list)
    initial_barb: Optional[tuple[int, int]] = None  # (line source, summit target)
    teeth: list[Tooth] = field(default_factory=list)
    final_barb: Optional[tuple[int, int]] = None  # (summit source, line target)
    final_run: list[int] = field(default_factory=list)
    isolated: set[int] = field(default_factory=set)

    @property
    def pure(self) -> bool:
        return self.initial_barb is None


def classify_sawteeth(bq: Quiver) -> SawTeethReport:
    """Decompose a bicolor subquiver, or report the first violation.

    Violations are data, not errors: the report comes back with
    ``valid=False`` and a description.
    """
    c1, c2 = bq.line_color, bq.summit_color
    if c1 is None or c2 is None:
        raise ValueError("quiver was not produced by bicolor()")
    rep = SawTeethReport(c1, c2, valid=True)
    line = bq.ids_of_color(c1)
    jline = bq.ids_of_color(c2)

    def fail(msg: str) -> SawTeethReport:
        rep.valid = False
        rep.violation = msg
        return rep

    # inventory the arrows
    horizontals: set[tuple[int, int]] = set()
    out_at: dict[int, int] = {}  # line vertex -> summit target
    in_at: dict[int, int] = {}  # line vertex -> summit source
    in_j: dict[int, int] = {}  # summit -> line source of its incoming arrow
    out_j: dict[int, int] = {}  # summit -> line target of its outgoing arrow
    for (s, t), m in bq.arrows.items():
        if m != 1:
            return fail(f"arrow {s}->{t} has multiplicity {m}")
        cs, ct = bq.vertices[s].color, bq.vertices[t].color
        if cs == c1 and ct == c1:
            horizontals.add((s, t))
        elif cs == c1 and ct == c2:
            if s in out_at or t in in_j:
                return fail(f"vertex with two outgoing ordinary arrows near {s}->{t}")
            out_at[s] = t
            in_j[t] = s
        elif cs == c2 and ct == c1:
            if t in in_at or s in out_j:
                return fail(f"vertex with two incoming ordinary arrows near {s}->{t}")
            in_at[t] = s
            out_j[s] = t
        else:  # pragma: no cover
            return fail(f"arrow {s}->{t} escapes the bicolor pair")

    expected = {(a, b) for a, b in zip(line, line[1:])}
    if horizontals != expected:
        missing = expected - horizontals
        extra = horizontals - expected
        return fail(f"line arrows broken (missing {sorted(missing)}, extra {sorted(extra)})")

    rep.isolated = {j for j in jline if j not in in_j and j not in out_j}

    if not line:
        if in_at or out_at:
            return fail("cross arrows without a line")
        return rep

    crossed = sorted(set(in_at) | set(out_at))
    if not crossed:
        rep.initial_run = list(line)
        return rep

    x0 = crossed[0]
    pos = {k: idx for idx, k in enumerate(line)}
    rep.initial_run = line[: pos[x0] + 1]

    consumed_out: set[int] = set()
    consumed_in: set[int] = set()
    if x0 in out_at:
        rep.initial_barb = (x0, out_at[x0])
        consumed_out.add(x0)

    anchor = x0
    while True:
        if anchor not in in_at:
            break
        y = in_at[anchor]
        consumed_in.add(anchor)
        closer = in_j.get(y)  # line vertex with an arrow into y
        if closer is None or closer <= anchor or closer in consumed_out:
            # no matching left side: the arrow y -> anchor is a final barb
            rep.final_barb = (y, anchor)
            break
        interior = line[pos[anchor] + 1 : pos[closer]]
        dirty = [v for v in interior if v in in_at or v in out_at]
        if dirty:
            return fail(f"cross arrows {dirty} inside the tooth {anchor}..{closer}")
        rep.teeth.append(
            Tooth(anchor, y, closer, tuple(line[pos[anchor] : pos[closer] + 1]))
        )
        consumed_out.add(closer)
        anchor = closer

    rep.final_run = line[pos[anchor] :]

    # every cross arrow must have been used by the structure; in particular
    # nothing may follow a final barb
    leftover_in = set(in_at) - consumed_in
    leftover_out = set(out_at) - consumed_out
    if leftover_in or leftover_out:
        return fail(
            f"ordinary arrows outside the structure (in at {sorted(leftover_in)}, "
            f"out at {sorted(leftover_out)})"
        )
    if rep.initial_barb is not None and rep.final_barb is not None:
        b_t = rep.initial_barb[1]
        d_s = rep.final_barb[0]
        if jline.index(d_s) <= jline.index(b_t):
            return fail("final barb does not start beyond the initial barb target")
    return rep


def quiver_has_sawteeth(q: Quiver, cartan) -> bool:
    """Every ordered pair of adjacent colors classifies as valid."""
    cols = q.colors()
    for c1 in cols:
        for c2 in cols:
            if c1 == c2 or not cartan.adjacent(c1, c2):
                continue
            if not classify_sawteeth(q.bicolor(c1, c2)).valid:
                return False
    return True


# ---------------------------------------------------------------------------
# local configurations around a vertex about to be mutated


class ConfigLabel(Enum):
    ALPHA0 = "alpha0"
    ALPHA1 = "alpha1"
    ALPHA2 = "alpha2"
    BETA0 = "beta0"
    BETA1 = "beta1"
    BETA2 = "beta2"
    BETA3 = "beta3"
    BETA4 = "beta4"

    @property
    def is_initial(self) -> bool:
        return self.value.startswith("alpha")


# allowed follow-ups keyed by (label, previous vertex evicted after mutation)
CONFIG_TRANSITIONS: dict[tuple[ConfigLabel, bool], set[ConfigLabel]] = {
    (ConfigLabel.ALPHA0, True): {ConfigLabel.ALPHA0, ConfigLabel.ALPHA1, ConfigLabel.ALPHA2},
    (ConfigLabel.ALPHA0, False): {ConfigLabel.BETA0, ConfigLabel.BETA1, ConfigLabel.BETA2},
    (ConfigLabel.ALPHA1, True): {ConfigLabel.ALPHA1, ConfigLabel.ALPHA2},
    (ConfigLabel.ALPHA1, False): {ConfigLabel.BETA3, ConfigLabel.BETA4},
    (ConfigLabel.ALPHA2, True): {ConfigLabel.ALPHA0, ConfigLabel.ALPHA1, ConfigLabel.ALPHA2},
    (ConfigLabel.ALPHA2, False): {ConfigLabel.BETA0, ConfigLabel.BETA1, ConfigLabel.BETA2},
    (ConfigLabel.BETA0, False): {ConfigLabel.BETA0, ConfigLabel.BETA1, ConfigLabel.BETA2},
    (ConfigLabel.BETA1, False): {ConfigLabel.BETA3, ConfigLabel.BETA4},
    (ConfigLabel.BETA2, False): {ConfigLabel.BETA0, ConfigLabel.BETA1, ConfigLabel.BETA2},
    (ConfigLabel.BETA3, False): {ConfigLabel.BETA3, ConfigLabel.BETA4},
    (ConfigLabel.BETA4, False): {ConfigLabel.BETA0, ConfigLabel.BETA1, ConfigLabel.BETA2},
}


def classify_config(q: Quiver, k: int, other_color: int) -> ConfigLabel:
    """Label the arrow pattern around k relative to one adjacent color.

    The quiver is expected to be a cut view in which the line of k obeys
    the structure theory; anything else raises :class:`Unclassifiable`.
    """
    if k not in q.vertices:
        raise KeyError(f"no vertex {k}")
    ck = q.vertices[k].color
    line = q.ids_of_color(ck)
    idx = line.index(k)

    ins = [s for s, _ in q.arrows_into(k) if q.vertices[s].color == other_color]
    outs = [t for t, _ in q.arrows_out_of(k) if q.vertices[t].color == other_color]
    if outs:
        raise Unclassifiable(f"vertex {k} has an outgoing ordinary arrow toward {outs}")
    if len(ins) > 1:
        raise Unclassifiable(f"vertex {k} has several incoming ordinary arrows {ins}")

    k_next = line[idx + 1] if idx + 1 < len(line) else None
    first = idx == 0

    if first:
        if not ins:
            return ConfigLabel.ALPHA0
        j = ins[0]
        if k_next is not None and q.has_arrow(k_next, j):
            return ConfigLabel.ALPHA2
        return ConfigLabel.ALPHA1

    k_prev = line[idx - 1]
    if not ins:
        return ConfigLabel.BETA0
    j = ins[0]
    down = q.has_arrow(k_prev, j)
    up = k_next is not None and q.has_arrow(k_next, j)
    if down and up:
        return ConfigLabel.BETA4
    if down:
        return ConfigLabel.BETA3
    if up:
        return ConfigLabel.BETA2
    return ConfigLabel.BETA1


# ---------------------------------------------------------------------------
# DOT export


def to_dot(q: Quiver, name: str = "seed") -> str:
    """Graphviz source; one rank per color line, frozen vertices boxed."""
    lines = [f"digraph {name} {{", "  rankdir=RL;", "  node [shape=ellipse];"]
    for color in q.colors():
        ids = q.ids_of_color(color)
        row = "; ".join(f"v{k}" for k in ids)
        lines.append(f"  {{ rank=same; {row}; }}")
    for v in sorted(q.vertices.values(), key=lambda v: v.id):
        shape = "box" if v.frozen else "ellipse"
        lines.append(
            f'  v{v.id} [label="{v.id}", shape={shape}, color_line={v.color}, column={v.column}];'
        )
    for (s, t), m in sorted(q.arrows.items()):
        for _ in range(m):
            lines.append(f"  v{s} -> v{t};")
    lines.append("}")
    return "\n".join(lines)
