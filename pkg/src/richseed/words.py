"""Reduced-word combinatorics.

A word ``[i_L, ..., i_1]`` is indexed from the right: index 1 is the
first letter applied, index L the last.  The public API accepts letters
either in that application order or in display order (leftmost letter
written first); internally everything is stored in application order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotLessOrEqual, NotReduced
from .rootsys import (
    CartanData,
    Vec,
    WeylElement,
    element_of_word,
    identity_element,
    is_negative,
    longest_element,
    number_of_positive_roots,
    reflect_root,
    simple_reflection,
    simple_root,
)


class Word:
    """A reduced word with successor/predecessor bookkeeping.

    ``letters[k-1]`` is the color i_k.  Construction verifies
    reducedness by checking that the root sequence

        beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})

    stays positive, and raises :class:`NotReduced` with the offending
    prefix length otherwise.
    """

    __slots__ = ("cartan", "letters", "element", "betas", "_succ", "_pred", "_by_color")

    def __init__(self, cartan: CartanData, letters):
        letters = tuple(letters)
        for i in letters:
            if not 1 <= i <= cartan.rank:
                raise ValueError(f"letter {i} out of range 1..{cartan.rank}")
        self.cartan = cartan
        self.letters = letters

        betas = []
        x = identity_element(cartan)  # s_{i_1} ... s_{i_{k-1}} accumulated
        for k, i in enumerate(letters, start=1):
            beta = x.apply(simple_root(cartan, i))
            if is_negative(beta):
                raise NotReduced(k)
            betas.append(beta)
            x = x * simple_reflection(cartan, i)
        self.betas = tuple(betas)
        # x = s_{i_1} ... s_{i_L}; the represented element is the reverse
        # product s_{i_L} ... s_{i_1}.
        self.element = element_of_word(cartan, letters)

        by_color: dict[int, list[int]] = {}
        for k, i in enumerate(letters, start=1):
            by_color.setdefault(i, []).append(k)
        self._by_color = {i: tuple(ks) for i, ks in by_color.items()}

        L = len(letters)
        succ = [L + 1] * (L + 2)
        pred = [0] * (L + 2)
        last: dict[int, int] = {}
        for k, i in enumerate(letters, start=1):
            if i in last:
                succ[last[i]] = k
                pred[k] = last[i]
            last[i] = k
        self._succ = tuple(succ)
        self._pred = tuple(pred)

    # -- basic queries ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.cartan == other.cartan
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash((self.cartan, self.letters))

    def __repr__(self) -> str:  # pragma: no cover
        return f"Word({self.cartan.family}{self.cartan.rank}, {list(self.display)})"

    @property
    def display(self) -> tuple[int, ...]:
        """Letters in display order [i_L, ..., i_1]."""
        return tuple(reversed(self.letters))

    def color(self, k: int) -> int:
        return self.letters[k - 1]

    def succ(self, k: int) -> int:
        """Successor k+ (sentinel L+1)."""
        return self._succ[k] if k <= len(self.letters) else len(self.letters) + 1

    def pred(self, k: int) -> int:
        """Predecessor k- (sentinel 0)."""
        return self._pred[k] if 1 <= k <= len(self.letters) else 0

    def succ_iter(self, k: int, t: int) -> int:
        """t-fold successor; the sentinel L+1 is absorbing."""
        for _ in range(t):
            if k > len(self.letters):
                return len(self.letters) + 1
            k = self.succ(k)
        return k

    def pred_iter(self, k: int, t: int) -> int:
        """t-fold predecessor; the sentinel 0 is absorbing."""
        for _ in range(t):
            if k <= 0:
                return 0
            k = self.pred(k)
        return k

    def colors_used(self) -> tuple[int, ...]:
        return tuple(sorted(self._by_color))

    def positions_of_color(self, i: int) -> tuple[int, ...]:
        return self._by_color.get(i, ())

    def k_min(self, i: int) -> int:
        """Smallest index of color i (0 when the color is absent)."""
        ks = self._by_color.get(i)
        return ks[0] if ks else 0

    def k_max(self, i: int) -> int:
        """Largest index of color i (0 when the color is absent)."""
        ks = self._by_color.get(i)
        return ks[-1] if ks else 0

    def prefix_element(self, k: int) -> WeylElement:
        """Element of the rightmost k letters s_{i_k} ... s_{i_1}."""
        return element_of_word(self.cartan, self.letters[:k])


def make_word(cartan: CartanData, letters, order: str = "paper") -> Word:
    """Build a reduced :class:`Word` from letters.

    ``order="paper"`` reads the letters as displayed (leftmost first),
    ``order="indexed"`` as (i_1, ..., i_L).
    """
    letters = list(letters)
    if order == "paper":
        letters.reverse()
    elif order != "indexed":
        raise ValueError(f"unknown letter order {order!r}")
    return Word(cartan, letters)


def successor_structure(word: Word) -> dict[int, tuple[int, int, int, int]]:
    """Map k -> (k+, k-, k_min, k_max) with sentinels L+1 and 0."""
    out = {}
    for k in range(1, len(word) + 1):
        i = word.color(k)
        out[k] = (word.succ(k), word.pred(k), word.k_min(i), word.k_max(i))
    return out


def beta_sequence(word: Word) -> tuple[Vec, ...]:
    """Roots beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}), pairwise distinct."""
    return word.betas


# ---------------------------------------------------------------------------
# completions and subword representatives


def left_complete(word: Word) -> Word:
    """A reduced word of w0 whose rightmost l(w) letters equal the input.

    The missing left factor u = w0 w^{-1} is spelled out by repeatedly
    peeling its smallest right descent, which also proves the factor
    property.  Completions are not unique; this one is deterministic.
    """
    c = word.cartan
    u = longest_element(c) * word.element.inverse()
    extra: list[int] = []
    while not u.is_identity():
        d = u.right_descents()[0]
        extra.append(d)
        u = u * simple_reflection(c, d)
    return Word(c, word.letters + tuple(extra))


@dataclass(frozen=True)
class SubwordEmbedding:
    """Positions p_1 < ... < p_{l(v)} of the rightmost subword for v."""

    parent: Word
    positions: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.positions)

    @property
    def letters(self) -> tuple[int, ...]:
        """Colors (i_{p_1}, ..., i_{p_m}) in application order."""
        return tuple(self.parent.color(p) for p in self.positions)

    def subword(self) -> Word:
        return Word(self.parent.cartan, self.letters)

    def element(self) -> WeylElement:
        return element_of_word(self.parent.cartan, self.letters)


def rightmost_subword(v: WeylElement, word: Word) -> SubwordEmbedding:
    """Rightmost representative of v inside the word (positions pushed right).

    Scans indices in increasing order and takes a letter exactly when it
    is a right descent of the remaining element; this succeeds iff
    v <= w in the Bruhat order.
    """
    c = word.cartan
    y = v
    positions = []
    for t in range(1, len(word) + 1):
        if y.is_identity():
            break
        i = word.color(t)
        if y.is_right_descent(i):
            positions.append(t)
            y = y * simple_reflection(c, i)
    if not y.is_identity():
        raise NotLessOrEqual("element is not below the word in the Bruhat order")
    return SubwordEmbedding(word, tuple(positions))


def bruhat_le(v: WeylElement, word: Word) -> bool:
    try:
        rightmost_subword(v, word)
        return True
    except NotLessOrEqual:
        return False


def leftmost_subword(u: WeylElement, word: Word) -> tuple[int, ...]:
    """Leftmost representative of u inside the word (positions pushed left).

    Scans indices in decreasing order, taking a letter exactly when it
    is a left descent of the remaining element.  Returns the positions
    in increasing order.
    """
    c = word.cartan
    y = u
    positions = []
    for t in range(len(word), 0, -1):
        if y.is_identity():
            break
        i = word.color(t)
        si = simple_reflection(c, i)
        if (si * y).length < y.length:
            positions.append(t)
            y = si * y
    if not y.is_identity():
        raise NotLessOrEqual("element is not below the word in the Bruhat order")
    return tuple(reversed(positions))


# ---------------------------------------------------------------------------
# combinatorial numbers attached to a rightmost embedding


class ComboNumbers:
    """The index bookkeeping attached to (w-bar, rightmost v-bar).

    All maps use the 1-based indexation: k ranges over 1..l(w) and m
    over 1..l(v).  Values follow the conventions

    * ``f_min(k)``   smallest v-index of color i_k, sentinel l(v)+1 when
      the color does not occur in v-bar,
    * ``f(k)``       largest v-index j with p_j <= k of color i_k, else 0,
    * ``m_oplus(m)`` next v-index of the same color, sentinel l(w)+1,
    * ``alpha(k,m)`` number of v-indices j <= m of color i_k,
    * ``gamma(m)``   alpha(p_m, m),
    * ``beta(m)``    letters of color i_{p_m} right of p_m not used by v-bar,
    * ``xi(k,m)``    w-index of the first v-bar letter of color i_k
      strictly right of index p_m, sentinel l(w)+1 (p_0 = 0).
    """

    def __init__(self, word: Word, emb: SubwordEmbedding):
        if emb.parent != word:
            raise ValueError("embedding does not belong to this word")
        self.word = word
        self.emb = emb
        L = len(word)
        lv = len(emb)
        p = emb.positions
        pset = set(p)
        pcolor = [word.color(q) for q in p]  # color of v-index m at [m-1]

        self._f_min = {}
        self._f = {}
        for k in range(1, L + 1):
            ik = word.color(k)
            same = [m for m in range(1, lv + 1) if pcolor[m - 1] == ik]
            self._f_min[k] = same[0] if same else lv + 1
            below = [m for m in same if p[m - 1] <= k]
            self._f[k] = below[-1] if below else 0

        self._m_oplus = {}
        self._beta = {}
        self._gamma = {}
        for m in range(1, lv + 1):
            cm = pcolor[m - 1]
            later = [j for j in range(m + 1, lv + 1) if pcolor[j - 1] == cm]
            self._m_oplus[m] = later[0] if later else L + 1
            self._beta[m] = sum(
                1 for j in range(1, p[m - 1]) if word.color(j) == cm and j not in pset
            )
            self._gamma[m] = self.alpha(p[m - 1], m)

    @property
    def positions(self) -> tuple[int, ...]:
        return self.emb.positions

    def f_min(self, k: int) -> int:
        return self._f_min[k]

    def f(self, k: int) -> int:
        """f of a w-index; the sentinel L+1 maps to l(v)."""
        if k >= len(self.word) + 1:
            return len(self.emb)
        return self._f[k]

    def m_oplus(self, m: int) -> int:
        return self._m_oplus[m]

    def m_oplus_iter(self, m: int, t: int) -> int:
        """t-fold v-successor; any value beyond l(v) is absorbing."""
        lv = len(self.emb)
        for _ in range(t):
            if m > lv:
                return m
            m = self._m_oplus[m]
        return m

    def alpha(self, k: int, m: int) -> int:
        ik = self.word.color(k)
        return sum(
            1 for j in range(1, m + 1) if self.word.color(self.emb.positions[j - 1]) == ik
        )

    def gamma(self, m: int) -> int:
        return self._gamma[m]

    def beta(self, m: int) -> int:
        return self._beta[m]

    def xi(self, k: int, m: int) -> int:
        """First v-bar position of color i_k strictly right of p_m (p_0 = 0)."""
        ik = self.word.color(k)
        lower = self.emb.positions[m - 1] if m >= 1 else 0
        cands = [q for q in self.emb.positions if q > lower and self.word.color(q) == ik]
        return cands[0] if cands else len(self.word) + 1

    def v_index_of(self, k: int) -> int | None:
        """The v-index m with p_m = k, if any."""
        try:
            return self.emb.positions.index(k) + 1
        except ValueError:
            return None

    def deletion_bound(self, k: int, m: int) -> int:
        """(k_max)^{alpha(k,m)-}: summands of index beyond it are deleted."""
        kmax = self.word.k_max(self.word.color(k))
        return self.word.pred_iter(kmax, self.alpha(k, m))

    def table_row(self, k: int) -> dict:
        """One row of the notations table (None for the grayed cells)."""
        m = self.v_index_of(k)
        row = {
            "k": k,
            "m": m,
            "i_k": self.word.color(k),
            "f_min": self.f_min(k),
            "f": self.f(k),
            "m_oplus": self.m_oplus(m) if m else None,
            "beta": self.beta(m) if m else None,
            "gamma": self.gamma(m) if m else None,
        }
        return row


def combo_numbers(word: Word, emb: SubwordEmbedding) -> ComboNumbers:
    return ComboNumbers(word, emb)


# ---------------------------------------------------------------------------
# enumeration helpers (small ranks; used by verifiers and tests)


@lru_cache(maxsize=None)
def all_elements(c: CartanData) -> tuple[WeylElement, ...]:
    """Every element of the Weyl group, by breadth-first length order."""
    seen = {identity_element(c)}
    frontier = [identity_element(c)]
    order = [identity_element(c)]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, c.rank + 1):
                ws = w * simple_reflection(c, i)
                if ws not in seen and ws.length > w.length:
                    seen.add(ws)
                    nxt.append(ws)
                    order.append(ws)
        frontier = nxt
    return tuple(order)


def reduced_words(w: WeylElement) -> list[tuple[int, ...]]:
    """All reduced words of w, letters in application order."""
    c = w.cartan
    if w.is_identity():
        return [()]
    out = []
    for i in w.right_descents():
        for rest in reduced_words(w * simple_reflection(c, i)):
            out.append((i,) + rest)
    return out


def random_reduced_word(c: CartanData, length: int, rng) -> tuple[int, ...]:
    """A random reduced word of the given length (shorter if w0 is hit)."""
    w = identity_element(c)
    letters: list[int] = []
    r = number_of_positive_roots(c)
    for _ in range(min(length, r)):
        choices = [i for i in range(1, c.rank + 1) if not w.is_right_descent(i)]
        if not choices:
            break
        i = rng.choice(choices)
        # each right multiplication pushes the new letter to index 1,
        # so the picks read off the word from the left
        w = w * simple_reflection(c, i)
        letters.append(i)
    return tuple(reversed(letters))
