"""Local models of moduli spaces at closed points and what they decide.

A semistable dimension vector decomposes into stable ones; a representation
type records the decomposition together with how repeated stable summands are
grouped into isotypic slots.  Each type has a local setting: a smaller quiver
with one vertex per slot, 1 - <b_i, b_j> arrows (with 1 only on the diagonal)
and the slot multiplicities as its dimension vector.  Etale-locally the
moduli space looks like the weight-zero quotient of that setting, so singular
or smooth verdicts about settings transfer to the moduli space.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, product

from .quiver import (
    Arrow,
    DimVector,
    Quiver,
    ValidationError,
    Weight,
    box,
    box_size,
    check_dim_vector,
    check_weight,
    classify,
    dot,
    euler_form,
    normalize_weight,
    tits_form,
    vec_sub,
)
from .stability import (
    is_schur_root,
    is_semistable_dim,
    is_stable_dim,
)
from .toric import SmoothVerdict, toric_smooth


@dataclass(frozen=True)
class RepType:
    """Slots (b, c): a stable dimension vector and a multiplicity.  The same b
    may appear in several slots; slot order is canonical (sorted)."""
    slots: tuple[tuple[DimVector, int], ...]


@dataclass(frozen=True)
class LocalSetting:
    """Quiver and dimension vector of a representation type's local model."""
    quiver: Quiver
    mu: tuple[int, ...]


def _partitions(n: int, cap: int | None = None):
    if n == 0:
        yield ()
        return
    if cap is None:
        cap = n
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def rep_types(q: Quiver, a: DimVector, t: Weight, max_box: int = 10 ** 6) -> tuple[RepType, ...]:
    """All representation types of a for weight t: decompositions of a into
    stable dimension vectors, with multiplicities of a real-root summand fused
    into one slot and otherwise split according to integer partitions.  Empty
    exactly when a is not semistable."""
    a = check_dim_vector(q, a)
    t = check_weight(q, t)
    size = box_size(a)
    if size > max_box:
        raise ValidationError(
            f"dimension box has {size} points, above the cap of {max_box}; raise max_box to proceed"
        )
    if not is_semistable_dim(q, a, t):
        return ()
    stables = [b for b in box(a) if any(b) and is_stable_dim(q, b, t)]

    decomps: list[tuple[tuple[DimVector, int], ...]] = []

    def extend(idx: int, remaining: DimVector, picked: list[tuple[DimVector, int]]) -> None:
        if not any(remaining):
            decomps.append(tuple(picked))
            return
        if idx == len(stables):
            return
        extend(idx + 1, remaining, picked)
        b = stables[idx]
        rem = remaining
        c = 0
        while all(x >= y for x, y in zip(rem, b)):
            rem = vec_sub(rem, b)
            c += 1
            picked.append((b, c))
            extend(idx + 1, rem, picked)
            picked.pop()

    extend(0, a, [])

    types = set()
    for decomp in decomps:
        slot_choices = []
        for b, c in decomp:
            qb = tits_form(q, b)
            assert qb <= 1, f"stable vector {b} with Tits value {qb}"
            if qb == 1:
                slot_choices.append([((b, c),)])
            else:
                slot_choices.append([tuple((b, p) for p in parts) for parts in _partitions(c)])
        for combo in product(*slot_choices):
            types.add(RepType(tuple(sorted(chain.from_iterable(combo)))))
    return tuple(sorted(types, key=lambda rt: rt.slots))


def local_setting(q: Quiver, rt: RepType) -> LocalSetting:
    """The setting of a representation type: vertex i for slot i (1-based),
    delta_ij - <b_i, b_j> arrows from i to j, and the multiplicities as
    dimension vector."""
    betas = []
    mus = []
    for b, c in rt.slots:
        b = check_dim_vector(q, b)
        if c < 1:
            raise ValidationError(f"slot multiplicity must be positive: {c}")
        betas.append(b)
        mus.append(c)
    k = len(betas)
    vertices = tuple(str(i + 1) for i in range(k))
    arrows = []
    for i in range(k):
        for j in range(k):
            count = (1 if i == j else 0) - euler_form(q, betas[i], betas[j])
            if count < 0:
                raise ValidationError(
                    f"slots {i + 1} and {j + 1} have negative arrow count {count}; "
                    "the slots do not come from one semistable type"
                )
            for r in range(count):
                arrows.append(Arrow(f"x{i + 1}_{j + 1}_{r + 1}", vertices[i], vertices[j]))
    return LocalSetting(Quiver(vertices, tuple(arrows)), tuple(mus))


def setting_smooth(s: LocalSetting) -> SmoothVerdict:
    """Decide smoothness of a setting's weight-zero quotient.

    Rules, in order: no arrows gives a point; a single vertex with dimension n
    and k loops is smooth for n = 1, k <= 1 or (n, k) = (2, 2) and singular
    for n >= 3, k >= 2; with all multiplicities one the quotient is toric and
    cycle independence decides.  Anything else stays Unknown.
    """
    if not s.quiver.arrows:
        return SmoothVerdict("Smooth", "no-arrows", "the setting has no arrows, so the model is a point")
    if s.quiver.n_vertices == 1:
        n = s.mu[0]
        k = len(s.quiver.arrows)
        if n == 1 or k <= 1 or (n, k) == (2, 2):
            return SmoothVerdict("Smooth", "one-vertex", f"{k} loops in dimension {n}", (n, k))
        if n >= 3 and k >= 2:
            return SmoothVerdict("Singular", "one-vertex", f"{k} loops in dimension {n}", (n, k))
        return SmoothVerdict("Unknown", "one-vertex", f"{k} loops in dimension {n} not decided", (n, k))
    if all(m == 1 for m in s.mu):
        inner = toric_smooth(s.quiver, (0,) * s.quiver.n_vertices)
        return SmoothVerdict(inner.status, "multiplicity-one-cycles", inner.detail, inner.data)
    return SmoothVerdict("Unknown", "inconclusive", "no applicable smoothness rule")


def moduli_smooth(q: Quiver, a: DimVector, t: Weight, max_box: int = 10 ** 6) -> SmoothVerdict:
    """Smoothness of the moduli space through the local settings of all
    representation types.  Singular at any type dominates; otherwise any
    undecided type gives Unknown; Smooth needs every type smooth.  An empty
    moduli space is reported as Empty."""
    types = rep_types(q, a, t, max_box)
    if not types:
        return SmoothVerdict("Empty", "no-semistable", "the dimension vector is not semistable")
    first_unknown = None
    for i, rt in enumerate(types):
        v = setting_smooth(local_setting(q, rt))
        if v.status == "Singular":
            return SmoothVerdict(
                "Singular", "local-setting",
                f"representation type {i} has a singular local model: {v.detail}", (i,),
            )
        if v.status == "Unknown" and first_unknown is None:
            first_unknown = SmoothVerdict(
                "Unknown", "local-setting",
                f"representation type {i} is not decided: {v.detail}", (i,),
            )
    if first_unknown is not None:
        return first_unknown
    return SmoothVerdict(
        "Smooth", "local-setting", f"all {len(types)} representation types have smooth local models"
    )


# --- singular witnesses on wild quivers ---------------------------------------

@dataclass(frozen=True)
class SingularWitness:
    """A dimension vector and weight whose moduli space is provably singular:
    alpha = 3 * gamma for a stable Schur vector gamma of negative Tits value,
    so one representation type has a one-vertex setting with >= 2 loops in
    dimension 3."""
    gamma: DimVector
    theta: Weight
    alpha: DimVector
    rep_type: RepType
    setting: LocalSetting
    verdict: SmoothVerdict


def _support_connected(q: Quiver, b: DimVector) -> bool:
    support = {i for i, x in enumerate(b) if x}
    if not support:
        return False
    adj: dict[int, set[int]] = {i: set() for i in support}
    for arr in q.arrows:
        i, j = q.vertex_index(arr.source), q.vertex_index(arr.target)
        if i in support and j in support:
            adj[i].add(j)
            adj[j].add(i)
    start = min(support)
    seen = {start}
    stack = [start]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return seen == support


def _canonical_weight(q: Quiver, b: DimVector) -> Weight:
    """The antisymmetrized pairing against b; always orthogonal to b itself."""
    t = [0] * q.n_vertices
    for arr in q.arrows:
        i, j = q.vertex_index(arr.source), q.vertex_index(arr.target)
        t[j] += b[i]
        t[i] -= b[j]
    return tuple(t)


def _compositions_of(total: int, k: int):
    if k == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions_of(total - first, k - 1):
            yield (first,) + rest


def singular_witness(q: Quiver, max_total: int = 10, weight_bound: int = 3) -> SingularWitness:
    """Search a wild quiver for a certified singular moduli space.

    Scans nonzero dimension vectors by total size, then lexicographically,
    for a connected-support Schur vector gamma with negative Tits value that
    is stable for some weight; the antisymmetrized pairing is tried first,
    then all weights with entries up to weight_bound.  The witness dimension
    vector is 3 * gamma.
    """
    cls = classify(q)
    if cls.kind != "Wild":
        raise ValidationError(f"singular witness search needs a wild quiver, got {cls.kind}")
    n = q.n_vertices
    for total in range(1, max_total + 1):
        for gamma in _compositions_of(total, n):
            if tits_form(q, gamma) >= 0:
                continue
            if not _support_connected(q, gamma):
                continue
            if not is_schur_root(q, gamma):
                continue
            theta = None
            candidate = normalize_weight(_canonical_weight(q, gamma))
            if is_stable_dim(q, gamma, candidate):
                theta = candidate
            else:
                for w in product(range(-weight_bound, weight_bound + 1), repeat=n):
                    if dot(w, gamma) == 0 and is_stable_dim(q, gamma, w):
                        theta = normalize_weight(w)
                        break
            if theta is None:
                continue
            alpha = tuple(3 * x for x in gamma)
            assert is_semistable_dim(q, alpha, theta)
            rt = RepType(((gamma, 3),))
            setting = local_setting(q, rt)
            verdict = setting_smooth(setting)
            assert verdict.status == "Singular"
            return SingularWitness(gamma, theta, alpha, rt, setting, verdict)
    raise ValidationError(
        f"witness search exhausted: no suitable vector of total size <= {max_total}"
    )
