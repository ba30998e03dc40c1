"""The seed-computation algorithm and its verifiers.

A run starts from a word's initial seed, performs one batch of
mutations per letter of the rightmost subword for v (each batch clears
one more leading coordinate of every surviving vector), then discards
the tail summand of every line that was touched.  What survives is the
seed of the smaller category: l(w) - l(v) summands whose leading l(v)
coordinates all vanish, with frozen vertices marked.

Every step can be instrumented with the structural checks that the
method guarantees (cut-seed properties, branch consistency, tooth
shifts, configuration transitions); violations raise
:class:`InvariantViolation` since they falsify the run, not the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .deltavec import (
    DeltaVector,
    delta_tilde_from_combo,
    delta_via_xi,
    zero_delta,
)
from .errors import AmbiguousBranch, InvariantViolation, NoValidBranch
from .quiver import (
    CONFIG_TRANSITIONS,
    ConfigLabel,
    Quiver,
    Vertex,
    build_gamma,
    classify_config,
    classify_sawteeth,
)
from .rootsys import CartanData, WeylElement
from .words import (
    ComboNumbers,
    SubwordEmbedding,
    Word,
    combo_numbers,
    left_complete,
    rightmost_subword,
)


# ---------------------------------------------------------------------------
# mutation schedules


def schedule_tilde(word: Word, emb: SubwordEmbedding) -> list[list[int]]:
    """The combinatorial schedule, one ascending index batch per v-letter.

    Batch m walks the color line of p_m from (k_min)^{beta_m +} up to
    (k_max)^{gamma_m -}; it is empty when the upper bound falls below
    the lower one.
    """
    combo = combo_numbers(word, emb)
    batches = []
    for m in range(1, len(emb) + 1):
        pm = emb.positions[m - 1]
        color = word.color(pm)
        lo = word.succ_iter(word.k_min(color), combo.beta(m))
        hi = word.pred_iter(word.k_max(color), combo.gamma(m))
        if hi < lo or lo > len(word) or hi <= 0:
            batches.append([])
            continue
        line = word.positions_of_color(color)
        batches.append([k for k in line if lo <= k <= hi])
    return batches


# ---------------------------------------------------------------------------
# run state


@dataclass
class MutationRecord:
    step: int
    vertex: int
    candidate_in: tuple[int, ...]
    candidate_out: tuple[int, ...]
    chosen: str  # "in" or "out"
    before: tuple[int, ...]
    after: tuple[int, ...]
    evicted: bool
    green: Optional[bool] = None
    configs: dict[int, str] = field(default_factory=dict)
    arrows_added: list[tuple[int, int]] = field(default_factory=list)
    arrows_removed: list[tuple[int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "step": self.step,
            "vertex": self.vertex,
            "candidate_in": list(self.candidate_in),
            "candidate_out": list(self.candidate_out),
            "chosen": self.chosen,
            "before": list(self.before),
            "after": list(self.after),
            "evicted": self.evicted,
            "green": self.green,
            "configs": {str(color): label for color, label in self.configs.items()},
            "arrows_added": [list(a) for a in self.arrows_added],
            "arrows_removed": [list(a) for a in self.arrows_removed],
        }


@dataclass
class AlgState:
    word: Word
    embedding: SubwordEmbedding
    combo: ComboNumbers
    reference: Word  # completion of the rightmost subword
    module_word: Word  # completion of the input word
    deltas: dict[int, DeltaVector]
    quiver: Quiver
    framed: Quiver  # companion framed quiver (frames have negative ids)
    step: int = 0
    trace: list[MutationRecord] = field(default_factory=list)
    batches: list[list[int]] = field(default_factory=list)
    check: bool = True
    stats: dict = field(default_factory=dict)

    @property
    def lv(self) -> int:
        return len(self.embedding)

    @property
    def lw(self) -> int:
        return len(self.word)

    def delta_tilde(self, k: int) -> tuple[int, ...]:
        return self.deltas[k].truncated(self.lv)

    def clone(self) -> "AlgState":
        return AlgState(
            word=self.word,
            embedding=self.embedding,
            combo=self.combo,
            reference=self.reference,
            module_word=self.module_word,
            deltas=dict(self.deltas),
            quiver=self.quiver.copy(),
            framed=self.framed.copy(),
            step=self.step,
            trace=list(self.trace),
            batches=[list(b) for b in self.batches],
            check=self.check,
            stats=dict(self.stats),
        )


@dataclass
class CutSeedView:
    members: set[int]
    evicted: set[int]
    deleted: set[int]
    quiver: Quiver


@dataclass
class FinalSeed:
    cartan: CartanData
    word: Word
    embedding: SubwordEmbedding
    reference: Word
    summands: dict[int, DeltaVector]  # survivors only
    deleted: set[int]
    frozen: set[int]
    quiver: Quiver  # survivors, frozen marked, frozen-frozen arrows dropped
    pre_deletion_quiver: Quiver
    pre_deletion_deltas: dict[int, DeltaVector]
    schedule: list[list[int]]
    trace: list[MutationRecord]
    stats: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.summands)


# ---------------------------------------------------------------------------
# elementary moves


def deletion_bound(state: AlgState, k: int, m: Optional[int] = None) -> int:
    if m is None:
        m = state.step
    return state.combo.deletion_bound(k, m)


def cut_view(state: AlgState, step: Optional[int] = None) -> CutSeedView:
    """Members, evicted (vanishing truncation), deleted (index bound)."""
    m = state.step if step is None else step
    evicted, deleted, members = set(), set(), set()
    for k in range(1, state.lw + 1):
        if k > deletion_bound(state, k, m):
            deleted.add(k)
        elif not any(state.delta_tilde(k)):
            evicted.add(k)
        else:
            members.add(k)
    sub = state.quiver.restricted(members)
    return CutSeedView(members, evicted, deleted, sub)


def mutate_delta(state: AlgState, k: int) -> tuple[DeltaVector, DeltaVector, DeltaVector, str]:
    """The two exchange computations at k; exactly one must be valid.

    Returns (chosen, in-candidate, out-candidate, branch name).  The
    in-candidate replaces the vector by the sum over arrows into k minus
    itself, the out-candidate uses the arrows out of k.
    """
    if k not in state.quiver.vertices:
        raise KeyError(f"no vertex {k}")
    old = state.deltas[k]
    cand_in = zero_delta(state.reference) - old
    for s, m in state.quiver.arrows_into(k):
        if s > 0:
            cand_in = cand_in + state.deltas[s].scaled(m)
    cand_out = zero_delta(state.reference) - old
    for t, m in state.quiver.arrows_out_of(k):
        if t > 0:
            cand_out = cand_out + state.deltas[t].scaled(m)
    ok_in, ok_out = cand_in.is_nonnegative(), cand_out.is_nonnegative()
    if ok_in and ok_out and cand_in != cand_out:
        raise AmbiguousBranch(f"both exchange vectors are valid at vertex {k}")
    if not ok_in and not ok_out:
        raise NoValidBranch(f"no nonnegative exchange vector at vertex {k}")
    if ok_in:
        return cand_in, cand_in, cand_out, "in"
    return cand_out, cand_in, cand_out, "out"


def index_set_A(state: AlgState, m: int) -> list[int]:
    """Vertices to mutate in batch m: nonzero m-th coordinate, index
    at most (p_m line maximum) pulled back gamma_m times."""
    pm = state.embedding.positions[m - 1]
    color = state.word.color(pm)
    b_m = state.word.pred_iter(state.word.k_max(color), state.combo.gamma(m))
    return [
        i
        for i in range(1, min(b_m, state.lw) + 1)
        if state.deltas[i].coords[m - 1] != 0
    ]


def framed_quiver(q: Quiver) -> Quiver:
    """Companion with one frozen frame -k per vertex k and arrows -k -> k."""
    verts = list(q.vertices.values())
    frames = [Vertex(-v.id, v.color, v.column, frozen=True) for v in verts]
    fq = Quiver(verts + frames)
    for (s, t), m in q.arrows.items():
        fq._add(s, t, m)
    for v in verts:
        fq._add(-v.id, v.id, 1)
    return fq


def is_green(framed: Quiver, k: int) -> bool:
    """No arrow from k into any frame vertex."""
    return all(t > 0 for t, _ in framed.arrows_out_of(k))


def step_hat(state: AlgState) -> AlgState:
    """Apply one batch of the vector-driven schedule and advance the step."""
    if state.step >= state.lv:
        raise InvariantViolation("all batches have already been applied")
    st = state.clone()
    m = st.step + 1
    batch = index_set_A(st, m)
    st.batches.append(list(batch))

    pm = st.embedding.positions[m - 1]
    line_color = st.word.color(pm)
    before_cut = cut_view(st, st.step) if st.check else None
    evicted_during = False
    prev_labels: dict[int, ConfigLabel] = {}
    prev_evicted = False

    for k in batch:
        if st.check and st.word.color(k) != line_color:
            raise InvariantViolation(
                f"batch {m} touches vertex {k} of color {st.word.color(k)}, "
                f"expected color {line_color}"
            )
        configs: dict[int, str] = {}
        if st.check:
            cut_now = cut_view(st, st.step)
            labels = {}
            for oc in st.word.cartan.neighbors(line_color):
                if not any(
                    cut_now.quiver.vertices[v].color == oc for v in cut_now.quiver.vertices
                ):
                    continue
                label = classify_config(cut_now.quiver, k, oc)
                labels[oc] = label
                configs[oc] = label.value
            for oc, label in labels.items():
                if oc in prev_labels:
                    allowed = CONFIG_TRANSITIONS.get((prev_labels[oc], prev_evicted))
                    if allowed is not None and label not in allowed:
                        raise InvariantViolation(
                            f"configuration {prev_labels[oc].value} may not be followed "
                            f"by {label.value} (vertex {k}, color {oc}, "
                            f"eviction={prev_evicted})"
                        )
                elif not label.is_initial:
                    raise InvariantViolation(
                        f"first mutated vertex {k} is not in an initial configuration "
                        f"for color {oc} (got {label.value})"
                    )
            prev_labels = labels

        chosen, cand_in, cand_out, branch = mutate_delta(st, k)
        if st.check:
            _check_branch_formula(st, k, chosen)
        old = st.deltas[k]
        green = is_green(st.framed, k)
        new_quiver = st.quiver.mutate(k)
        added = sorted(set(new_quiver.arrows) - set(st.quiver.arrows))
        removed = sorted(set(st.quiver.arrows) - set(new_quiver.arrows))
        st.quiver = new_quiver
        st.framed = st.framed.mutate(k)
        st.deltas[k] = chosen
        evicted = not any(chosen.truncated(st.lv))
        evicted_during = evicted_during or evicted
        prev_evicted = evicted
        st.trace.append(
            MutationRecord(
                step=m,
                vertex=k,
                candidate_in=cand_in.coords,
                candidate_out=cand_out.coords,
                chosen=branch,
                before=old.coords,
                after=chosen.coords,
                evicted=evicted,
                green=green,
                configs=configs,
                arrows_added=added,
                arrows_removed=removed,
            )
        )

    st.step = m
    if st.check:
        check_induction(st)
        if batch and not evicted_during:
            _check_teeth_shift(before_cut, cut_view(st), st, line_color, batch)
            st.stats["teeth_shift_checks"] = st.stats.get("teeth_shift_checks", 0) + 1
    return st


def _check_branch_formula(state: AlgState, k: int, chosen: DeltaVector) -> None:
    """Inside the cut view, the chosen vector's truncation must equal
    (successor) + (predecessor, zero when absent) - (old)."""
    lv = state.lv
    kp = state.word.succ(k)
    km = state.word.pred(k)
    succ_part = state.deltas[kp].truncated(lv) if kp <= state.lw else (0,) * lv
    pred_part = state.deltas[km].truncated(lv) if km >= 1 else (0,) * lv
    old_part = state.deltas[k].truncated(lv)
    expected = tuple(a + b - c for a, b, c in zip(succ_part, pred_part, old_part))
    if chosen.truncated(lv) != expected:
        raise InvariantViolation(
            f"exchange at {k} does not match the line formula: "
            f"{chosen.truncated(lv)} != {expected}"
        )


def _check_teeth_shift(
    before: CutSeedView,
    after: CutSeedView,
    state: AlgState,
    line_color: int,
    batch: list[int],
) -> None:
    """After an eviction-free pass over a pure line, each tooth must move
    one notch toward the start, with the two boundary exceptions."""
    word = state.word
    members_before = [k for k in sorted(before.members) if word.color(k) == line_color]
    if not members_before or not batch:
        return
    pos = {k: i for i, k in enumerate(members_before)}

    def prev(k: int) -> Optional[int]:
        i = pos.get(k)
        if i is None or i == 0:
            return None
        return members_before[i - 1]

    newlast = batch[-1]
    first = members_before[0]
    for oc in word.cartan.neighbors(line_color):
        rep_before = classify_sawteeth(before.quiver.bicolor(line_color, oc))
        rep_after = classify_sawteeth(after.quiver.bicolor(line_color, oc))
        if not rep_before.valid or not rep_before.pure:
            raise InvariantViolation(
                f"line {line_color} was not pure before its pass (color {oc})"
            )
        if not rep_after.valid:
            raise InvariantViolation(
                f"line {line_color} lost the tooth structure after its pass "
                f"(color {oc}): {rep_after.violation}"
            )
        expected_teeth: list[tuple[int, int, int]] = []
        expected_barb: Optional[tuple[int, int]] = None
        for tooth in rep_before.teeth:
            if tooth.right_end == first:
                expected_barb = (prev(tooth.left_end), tooth.summit)
            else:
                expected_teeth.append(
                    (prev(tooth.right_end), tooth.summit, prev(tooth.left_end))
                )
        if rep_before.final_barb is not None:
            y, target = rep_before.final_barb
            if target != members_before[-1]:
                if prev(target) is None:
                    expected_barb = (newlast, y)
                else:
                    expected_teeth.append((prev(target), y, newlast))
        got_teeth = [(t.right_end, t.summit, t.left_end) for t in rep_after.teeth]
        if got_teeth != expected_teeth or rep_after.initial_barb != expected_barb:
            raise InvariantViolation(
                f"tooth shift failed on line {line_color} vs color {oc}: "
                f"teeth {got_teeth} != {expected_teeth} or barb "
                f"{rep_after.initial_barb} != {expected_barb}"
            )


def check_induction(state: AlgState) -> None:
    """The six structural checkpoints of the cut seed after each batch."""
    view = cut_view(state)
    word = state.word
    m = state.step
    lv = state.lv

    for k in view.members:
        tilde = state.delta_tilde(k)
        if any(tilde[:m]):
            raise InvariantViolation(
                f"member {k} keeps a nonzero coordinate among the first {m}"
            )
        expected = _expected_support(state, k, m)
        got = {j + 1 for j, a in enumerate(tilde) if a}
        if got != expected or any(a not in (0, 1) for a in tilde):
            raise InvariantViolation(
                f"member {k} has truncated support {sorted(got)}, expected "
                f"{sorted(expected)} at step {m}"
            )

    for k in view.members:
        kp = word.succ(k)
        if kp <= state.lw and kp in view.members:
            if not view.quiver.has_arrow(k, kp):
                raise InvariantViolation(f"missing line arrow {k}->{kp} at step {m}")

    for (s, t), _ in view.quiver.arrows.items():
        cs, ct = word.color(s), word.color(t)
        if cs == ct:
            if word.succ(s) != t:
                raise InvariantViolation(f"stray same-color arrow {s}->{t} at step {m}")
        elif not word.cartan.adjacent(cs, ct):
            raise InvariantViolation(
                f"arrow {s}->{t} joins non-adjacent colors {cs},{ct} at step {m}"
            )

    # along every line, the evicted summands precede all members
    for color in word.colors_used():
        seen_member = False
        for k in word.positions_of_color(color):
            if k in view.members:
                seen_member = True
            elif k in view.evicted and seen_member:
                raise InvariantViolation(
                    f"evicted summand {k} sits above a member on line {color} "
                    f"at step {m}"
                )

    cols = view.quiver.colors()
    for c1 in cols:
        for c2 in cols:
            if c1 == c2 or not word.cartan.adjacent(c1, c2):
                continue
            rep = classify_sawteeth(view.quiver.bicolor(c1, c2))
            if not rep.valid:
                raise InvariantViolation(
                    f"bicolor ({c1},{c2}) broken at step {m}: {rep.violation}"
                )

    if m < lv:
        next_color = word.color(state.embedding.positions[m])
        for oc in word.cartan.neighbors(next_color):
            if oc not in cols:
                continue
            rep = classify_sawteeth(view.quiver.bicolor(next_color, oc))
            if not rep.valid or not rep.pure:
                raise InvariantViolation(
                    f"next line {next_color} is not pure against {oc} at step {m}"
                )

    if m == lv and view.members:
        raise InvariantViolation(f"cut seed still has members {sorted(view.members)}")


def _expected_support(state: AlgState, k: int, m: int) -> set[int]:
    """Support predicted by the bookkeeping: the v-indices of color i_k in
    [f_min(k) advanced alpha(k,m) times, f(k advanced alpha(k,m) times)]."""
    combo = state.combo
    word = state.word
    lv = state.lv
    ik = word.color(k)
    a = combo.alpha(k, m)
    lo = combo.m_oplus_iter(combo.f_min(k), a)
    hi = combo.f(word.succ_iter(k, a))
    out = set()
    for j in range(1, lv + 1):
        if lo <= j <= hi and word.color(combo.positions[j - 1]) == ik:
            out.add(j)
    return out


# ---------------------------------------------------------------------------
# whole runs


def initial_state(
    cartan: CartanData,
    word: Word,
    v: WeylElement,
    completion: Optional[Word] = None,
    check: bool = True,
) -> AlgState:
    emb = rightmost_subword(v, word)
    combo = combo_numbers(word, emb)
    vbar = emb.subword()
    if completion is None:
        reference = left_complete(vbar)
    else:
        reference = completion
        _validate_completion(reference, vbar)
    module_word = left_complete(word)
    deltas = {
        k: delta_via_xi(module_word, k, reference) for k in range(1, len(word) + 1)
    }
    gamma = build_gamma(word)
    state = AlgState(
        word=word,
        embedding=emb,
        combo=combo,
        reference=reference,
        module_word=module_word,
        deltas=deltas,
        quiver=gamma,
        framed=framed_quiver(gamma),
        check=check,
    )
    if check:
        for k in range(1, len(word) + 1):
            expected = delta_tilde_from_combo(combo, k)
            if state.delta_tilde(k) != expected:
                raise InvariantViolation(
                    f"initial truncation of summand {k} disagrees with the "
                    f"combinatorial form: {state.delta_tilde(k)} != {expected}"
                )
        check_induction(state)
    return state


def _validate_completion(reference: Word, vbar: Word) -> None:
    from .rootsys import number_of_positive_roots

    r = number_of_positive_roots(vbar.cartan)
    if len(reference) != r:
        raise ValueError("completion must be a reduced word of w0")
    if reference.letters[: len(vbar)] != vbar.letters:
        raise ValueError("completion does not end with the subword for v")


def run(
    cartan: CartanData,
    word: Word,
    v: WeylElement,
    completion: Optional[Word] = None,
    check: bool = True,
) -> FinalSeed:
    """Execute every batch, delete the line tails, freeze, and package."""
    state = initial_state(cartan, word, v, completion, check)
    for _ in range(state.lv):
        state = step_hat(state)

    lw, lv = state.lw, state.lv
    deleted = {
        k for k in range(1, lw + 1) if k > state.combo.deletion_bound(k, lv)
    }
    survivors = [k for k in range(1, lw + 1) if k not in deleted]
    if len(survivors) != lw - lv:
        raise InvariantViolation(
            f"{len(survivors)} summands survive, expected {lw - lv}"
        )
    for k in survivors:
        if any(state.delta_tilde(k)):
            raise InvariantViolation(
                f"surviving summand {k} keeps nonzero leading coordinates"
            )

    pre_deletion = state.quiver.copy()
    trimmed = state.quiver.without_vertices(deleted)
    frozen = frozen_vertices_from(state, deleted, trimmed)
    final_quiver = trimmed.with_frozen(frozen)

    return FinalSeed(
        cartan=cartan,
        word=word,
        embedding=state.embedding,
        reference=state.reference,
        summands={k: state.deltas[k] for k in survivors},
        deleted=deleted,
        frozen=frozen,
        quiver=final_quiver,
        pre_deletion_quiver=pre_deletion,
        pre_deletion_deltas=dict(state.deltas),
        schedule=[list(b) for b in state.batches],
        trace=state.trace,
        stats=dict(state.stats),
    )


def frozen_vertices_from(state: AlgState, deleted: set[int], trimmed: Quiver) -> set[int]:
    """Non-mutable survivors.

    Three sources: neighbors of a deleted vertex (in the pre-deletion
    quiver), survivors isolated after deletion, and the surviving line
    tails (the original coefficients of untouched colors).
    """
    word = state.word
    frozen = set()
    for k in trimmed.vertices:
        if any(n in deleted for n in state.quiver.neighbors(k)):
            frozen.add(k)
        elif not trimmed.neighbors(k):
            frozen.add(k)
        elif k == word.k_max(word.color(k)):
            frozen.add(k)
    return frozen


def frozen_vertices(final: FinalSeed) -> set[int]:
    return set(final.frozen)


# ---------------------------------------------------------------------------
# cross-checks


def verify_equivalence(word: Word, emb: SubwordEmbedding) -> tuple[bool, list[dict]]:
    """Compare the combinatorial schedule with the vector-driven one."""
    tilde = schedule_tilde(word, emb)
    state = initial_state(word.cartan, word, emb.element(), check=False)
    report = []
    ok = True
    for m in range(1, len(emb) + 1):
        state = step_hat(state)
        hat = state.batches[m - 1]
        agree = hat == tilde[m - 1]
        ok = ok and agree
        if not agree:
            report.append({"m": m, "tilde": tilde[m - 1], "hat": hat})
    return ok, report


def green_report(word: Word, mutations: list[int]) -> list[dict]:
    """Replay a mutation sequence on the framed initial quiver.

    Returns one record per mutation with its green/red label; a red
    mutation is data for the caller, not an error.
    """
    fq = framed_quiver(build_gamma(word))
    out = []
    for n, k in enumerate(mutations, start=1):
        green = is_green(fq, k)
        out.append({"n": n, "vertex": k, "green": green})
        fq = fq.mutate(k)
    return out
