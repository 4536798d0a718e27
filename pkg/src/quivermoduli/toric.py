"""Torus-invariant sections of thin representation spaces.

With every vertex dimension equal to one, arrow matrices are scalars, the
group is a torus, and a monomial in the arrow coordinates is a relative
invariant exactly when its divergence (inflow minus outflow at each vertex)
equals the weight.  This module enumerates such monomials, presents the
section ring they span, and decides smoothness of the quotient through its
monomial cone structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .doubling import DoublingMap, lift_weight
from .linalg import (
    lattice_basis,
    lattice_reduce,
    nonneg_combination_exists,
    positive_functional,
    rank_rows,
)
from .quiver import (
    DimVector,
    Quiver,
    QuiverError,
    ValidationError,
    Weight,
    check_weight,
    vec_add,
)


class UnboundedFlowError(QuiverError):
    """Section enumeration requested on a quiver with an oriented cycle.

    Adding a cycle to any exponent vector preserves the divergence, so no
    divergence class has a finite monomial basis there.
    """


@dataclass(frozen=True)
class SmoothVerdict:
    """Outcome of a smoothness analysis.

    status is "Smooth", "Singular", "Unknown", or "Empty"; rule identifies
    the deciding criterion and data carries its certificate, both stable
    enough to appear in reports.
    """
    status: str
    rule: str
    detail: str = ""
    data: tuple = ()


@dataclass(frozen=True)
class FlowMonomial:
    """Monomial in arrow coordinates, one exponent per arrow in arrow order."""
    quiver: Quiver
    exponents: tuple[int, ...]

    def divergence(self) -> tuple[int, ...]:
        """Inflow minus outflow at each vertex; this is the weight for which
        the monomial is a relative invariant."""
        div = [0] * self.quiver.n_vertices
        for a, e in zip(self.quiver.arrows, self.exponents):
            div[self.quiver.vertex_index(a.target)] += e
            div[self.quiver.vertex_index(a.source)] -= e
        return tuple(div)

    def outflow(self, v: str) -> int:
        self.quiver.vertex_index(v)
        return sum(e for a, e in zip(self.quiver.arrows, self.exponents) if a.source == v)

    def inflow(self, v: str) -> int:
        self.quiver.vertex_index(v)
        return sum(e for a, e in zip(self.quiver.arrows, self.exponents) if a.target == v)

    def __mul__(self, other: FlowMonomial) -> FlowMonomial:
        if not isinstance(other, FlowMonomial):
            return NotImplemented
        if other.quiver != self.quiver:
            raise ValidationError("cannot multiply monomials on different quivers")
        return FlowMonomial(self.quiver, vec_add(self.exponents, other.exponents))


def flow_monomial(q: Quiver, exponents) -> FlowMonomial:
    """Build a FlowMonomial from an exponent sequence or {arrow id: exponent}
    mapping; omitted arrows get exponent zero."""
    if isinstance(exponents, dict):
        exps = [0] * len(q.arrows)
        for name, e in exponents.items():
            exps[q.arrow_index(name)] = int(e)
        exps = tuple(exps)
    else:
        exps = tuple(int(e) for e in exponents)
        if len(exps) != len(q.arrows):
            raise ValidationError(f"{len(exps)} exponents for {len(q.arrows)} arrows")
    if any(e < 0 for e in exps):
        raise ValidationError(f"exponents must be non-negative: {exps}")
    return FlowMonomial(q, exps)


def monomial_str(m: FlowMonomial) -> str:
    parts = []
    for a, e in zip(m.quiver.arrows, m.exponents):
        if e == 1:
            parts.append(a.name)
        elif e > 1:
            parts.append(f"{a.name}^{e}")
    return "*".join(parts) if parts else "1"


def lift_flow_monomial(m: FlowMonomial, d: DoublingMap, extra: int = 0) -> FlowMonomial:
    """Reinterpret m on the doubled quiver, giving the new arrow exponent
    `extra`.  A relative invariant of weight s on the source lifts to one of
    weight lift_weight(s, d, n) with n = m.outflow(doubled vertex) + extra.
    """
    if m.quiver != d.source:
        raise ValidationError("monomial does not live on the doubling's source")
    if extra < 0:
        raise ValidationError("exponent for the new arrow must be non-negative")
    return FlowMonomial(d.result, m.exponents + (extra,))


def lifted_weight(m: FlowMonomial, d: DoublingMap, sigma: Weight, extra: int = 0) -> Weight:
    """The weight of lift_flow_monomial(m, d, extra), given that m has
    divergence sigma on the source quiver."""
    sigma = check_weight(d.source, sigma)
    if m.divergence() != sigma:
        raise ValidationError("monomial does not have the stated weight")
    return lift_weight(sigma, d, m.outflow(d.vertex) + extra)


# --- cycles -------------------------------------------------------------------

def simple_cycles(q: Quiver) -> tuple[tuple[str, ...], ...]:
    """All oriented cycles without repeated vertices, at arrow level: parallel
    arrows give distinct cycles, a loop is a cycle of length one.  Each cycle
    is reported starting at its minimal vertex index, and the listing order is
    deterministic."""
    n = q.n_vertices
    out: list[list[int]] = [[] for _ in range(n)]
    for idx, a in enumerate(q.arrows):
        out[q.vertex_index(a.source)].append(idx)
    tgt = [q.vertex_index(a.target) for a in q.arrows]
    found: list[tuple[int, ...]] = []

    def walk(root: int, v: int, path: tuple[int, ...], on_path: frozenset[int]) -> None:
        for idx in out[v]:
            w = tgt[idx]
            if w == root:
                found.append(path + (idx,))
            elif w > root and w not in on_path:
                walk(root, w, path + (idx,), on_path | {w})

    for root in range(n):
        walk(root, root, (), frozenset({root}))
    return tuple(tuple(q.arrows[i].name for i in c) for c in found)


def _cycle_rows(q: Quiver, cycles) -> list[list[Fraction]]:
    rows = []
    for c in cycles:
        vec = [Fraction(0)] * len(q.arrows)
        for name in c:
            vec[q.arrow_index(name)] += 1
        rows.append(vec)
    return rows


# --- section enumeration ------------------------------------------------------

def _topological_order(q: Quiver) -> list[int]:
    n = q.n_vertices
    indeg = [0] * n
    for a in q.arrows:
        indeg[q.vertex_index(a.target)] += 1
    order: list[int] = []
    ready = [i for i in range(n) if indeg[i] == 0]
    while ready:
        v = min(ready)
        ready.remove(v)
        order.append(v)
        for a in q.arrows:
            if q.vertex_index(a.source) == v:
                j = q.vertex_index(a.target)
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
    if len(order) < n:
        raise UnboundedFlowError(
            "the quiver has an oriented cycle, so no divergence class has finitely many monomials"
        )
    return order


def _compositions(total: int, k: int):
    if k == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, k - 1):
            yield (first,) + rest


def flow_sections(q: Quiver, sigma: Weight, degree: int) -> tuple[FlowMonomial, ...]:
    """All monomials with divergence equal to degree * sigma, in lexicographic
    exponent order.  Only defined on quivers without oriented cycles; raises
    UnboundedFlowError otherwise."""
    sigma = check_weight(q, sigma)
    if degree < 0:
        raise ValidationError(f"degree must be non-negative, got {degree}")
    order = _topological_order(q)
    if degree * sum(sigma) != 0:
        return ()
    n = q.n_vertices
    out_arrows: list[list[int]] = [[] for _ in range(n)]
    for idx, a in enumerate(q.arrows):
        out_arrows[q.vertex_index(a.source)].append(idx)
    tgt = [q.vertex_index(a.target) for a in q.arrows]
    exps = [0] * len(q.arrows)
    found: list[tuple[int, ...]] = []

    def assign(pos: int, inflow: tuple[int, ...]) -> None:
        if pos == n:
            found.append(tuple(exps))
            return
        v = order[pos]
        need_out = inflow[v] - degree * sigma[v]
        if need_out < 0:
            return
        arrs = out_arrows[v]
        if not arrs:
            if need_out == 0:
                assign(pos + 1, inflow)
            return
        for combo in _compositions(need_out, len(arrs)):
            flow = list(inflow)
            for idx, e in zip(arrs, combo):
                exps[idx] = e
                flow[tgt[idx]] += e
            assign(pos + 1, tuple(flow))

    assign(0, (0,) * n)
    return tuple(FlowMonomial(q, e) for e in sorted(found))


# --- presentations ------------------------------------------------------------

@dataclass(frozen=True)
class Presentation:
    """Degree-one sections as generators, the binomial coincidences among
    their pairwise products as relations (index pairs into `generators`), and
    whether degree one generates all sections through the checked bound."""
    quiver: Quiver
    sigma: Weight
    generators: tuple[FlowMonomial, ...]
    relations: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    degree1_generates: bool


def presentation(q: Quiver, sigma: Weight, degree_bound: int = 2) -> Presentation:
    sigma = check_weight(q, sigma)
    if degree_bound < 2:
        raise ValidationError("degree bound must be at least 2")
    gens = flow_sections(q, sigma, 1)
    if not gens:
        raise ValidationError("no degree-one sections; nothing to present")
    gexps = [g.exponents for g in gens]

    by_sum: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for i in range(len(gens)):
        for j in range(i, len(gens)):
            by_sum.setdefault(vec_add(gexps[i], gexps[j]), []).append((i, j))
    relations = []
    for key in sorted(by_sum):
        group = by_sum[key]
        relations.extend((group[0], other) for other in group[1:])

    generates = True
    prev = set(gexps)
    for d in range(2, degree_bound + 1):
        prods = {vec_add(s, g) for s in prev for g in gexps}
        if prods != {m.exponents for m in flow_sections(q, sigma, d)}:
            generates = False
            break
        prev = prods
    return Presentation(q, sigma, tuple(gens), tuple(relations), generates)


# --- smoothness ---------------------------------------------------------------

def _fdot(phi, v) -> Fraction:
    return sum((p * x for p, x in zip(phi, v)), Fraction(0))


def _chart_analysis(gexps: list[tuple[int, ...]], chart: int) -> tuple[str, str]:
    """Analyze the affine chart where the given generator is inverted.

    The chart's coordinate monoid is generated by the differences of the other
    exponent vectors.  The chart is smooth exactly when that monoid splits as
    its unit lattice plus a free pointed part, so: find the invertible
    differences, pass to classes modulo the lattice they span, and test whether
    the minimal class generators are independent of each other and the units.
    """
    g = gexps[chart]
    diffs = sorted({
        tuple(h - x for h, x in zip(other, g))
        for i, other in enumerate(gexps) if i != chart
    })
    if not diffs:
        return "Smooth", "the chart has no coordinates"
    # v is invertible in the monoid exactly when -v is again a sum of diffs
    units = {v for v in diffs if nonneg_combination_exists(diffs, [-x for x in v])}
    basis = lattice_basis(sorted(units))
    torus = len(basis)
    pivots = [next(j for j, t in enumerate(row) if t) for row in basis]
    reps = sorted({lattice_reduce(basis, v) for v in diffs if v not in units})
    assert all(any(r) for r in reps)  # a non-unit never lies in the unit lattice

    def project(x) -> tuple[Fraction, ...]:
        # rational quotient by the unit span: zero the pivot coords, drop them
        y = [Fraction(t) for t in x]
        for row, p in zip(basis, pivots):
            f = y[p] / row[p]
            if f:
                y = [a - f * b for a, b in zip(y, row)]
        return tuple(t for j, t in enumerate(y) if j not in pivots)

    phi = positive_functional([project(r) for r in reps])
    assert phi is not None  # non-units stay pointed modulo the units
    weight = {r: _fdot(phi, project(r)) for r in reps}
    memo: dict[tuple[int, ...], bool] = {}

    def member(x: tuple[int, ...]) -> bool:
        # x canonical modulo units; is its class a sum of rep classes?
        # phi bounds the recursion depth
        if not any(x):
            return True
        cached = memo.get(x)
        if cached is not None:
            return cached
        wx = _fdot(phi, project(x))
        ans = False
        for r in reps:
            if weight[r] > wx:
                continue
            if member(lattice_reduce(basis, tuple(a - b for a, b in zip(x, r)))):
                ans = True
                break
        memo[x] = ans
        return ans

    hilbert = []
    for r in reps:
        decomposable = False
        for u in reps:
            y = lattice_reduce(basis, tuple(a - b for a, b in zip(r, u)))
            if any(y) and member(y):
                decomposable = True
                break
        if not decomposable:
            hilbert.append(r)
    rows = [[Fraction(t) for t in v] for v in hilbert]
    rows += [[Fraction(t) for t in row] for row in basis]
    rk = rank_rows(rows)
    if rk == len(hilbert) + torus:
        if torus:
            return "Smooth", (
                f"free on {len(hilbert)} monoid generators"
                f" over a rank-{torus} unit lattice"
            )
        return "Smooth", f"free on {len(hilbert)} monoid generators"
    return "Singular", (
        f"{len(hilbert)} minimal monoid generators of rank only {rk - torus}"
    )


def toric_smooth(q: Quiver, sigma: Weight, degree_bound: int = 2) -> SmoothVerdict:
    """Smoothness of the thin quotient at the given weight.

    Weight zero: the invariants are spanned by cycle monomials, and the
    quotient is an affine space exactly when the simple cycles are linearly
    independent.  Nonzero weight: every degree-one section gives a chart,
    analyzed through its coordinate monoid; Singular beats Unknown, and the
    first chart with the dominating status is reported.
    """
    sigma = check_weight(q, sigma)
    if not any(sigma):
        cycles = simple_cycles(q)
        r = rank_rows(_cycle_rows(q, cycles))
        if r == len(cycles):
            return SmoothVerdict(
                "Smooth", "affine-cycles",
                f"{len(cycles)} independent cycle monomials generate freely",
                (len(cycles), r),
            )
        return SmoothVerdict(
            "Singular", "affine-cycles",
            f"cycle monomials have rank {r} < {len(cycles)}",
            (len(cycles), r),
        )
    if sum(sigma) != 0:
        return SmoothVerdict(
            "Empty", "weight-sum",
            "total weight is nonzero, so there are no sections in any degree",
        )
    gens = flow_sections(q, sigma, 1)
    if not gens:
        return SmoothVerdict(
            "Unknown", "no-charts",
            "no degree-one sections; chart analysis needs a degree-one cover",
        )
    pres = presentation(q, sigma, degree_bound)
    if not pres.degree1_generates:
        return SmoothVerdict(
            "Unknown", "generation",
            f"degree-one sections do not generate through degree {degree_bound}",
        )
    gexps = [m.exponents for m in gens]
    first_unknown = None
    for ci, g in enumerate(gens):
        status, detail = _chart_analysis(gexps, ci)
        if status == "Singular":
            return SmoothVerdict(
                "Singular", "chart",
                f"chart {monomial_str(g)}: {detail}", (monomial_str(g),),
            )
        if status == "Unknown" and first_unknown is None:
            first_unknown = SmoothVerdict(
                "Unknown", "chart",
                f"chart {monomial_str(g)}: {detail}", (monomial_str(g),),
            )
    if first_unknown is not None:
        return first_unknown
    return SmoothVerdict(
        "Smooth", "chart", f"all {len(gens)} degree-one charts are smooth"
    )
