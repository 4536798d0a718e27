"""Vertex doubling and the representation-level calculus around it.

Doubling a vertex v splits it into a source copy "v-" and a sink copy "v+":
every arrow leaving v is re-rooted at v-, every arrow entering v is re-aimed
at v+, and one fresh arrow e: v- -> v+ is added.  Arrows keep their ids, so
the correspondence a -> a^v is the identity on names.  Iterating over every
vertex makes the quiver bipartite with all arrows going minus -> plus.

The maps between representation spaces:

    iota(x)  puts the identity on e and copies everything else;
    psi(y)   inverts e (requires det(y(e)) != 0) and contracts it away;
    phi(y)   is the polynomial variant using the adjugate instead of the
             inverse, defined for every y.

psi . iota = id, and phi is equivariant up to the scalar factor
det(g(v+)) / det(g(v-)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .linalg import Mat, adjugate, identity, mat_inv, mat_mul, mat_scale
from .quiver import (
    Arrow,
    DimVector,
    Quiver,
    ValidationError,
    Weight,
    check_dim_vector,
    check_weight,
)


@dataclass(frozen=True)
class DoublingMap:
    """Record of one vertex doubling.  Arrow names are preserved, so the
    arrow correspondence is name -> same name with redirected endpoints."""
    source: Quiver
    vertex: str
    minus: str
    plus: str
    e_arrow: str
    result: Quiver

    @property
    def arrow_map(self) -> dict[str, str]:
        return {a.name: a.name for a in self.source.arrows}


def double_vertex(q: Quiver, v: str) -> DoublingMap:
    iv = q.vertex_index(v)
    minus, plus = v + "-", v + "+"
    for fresh in (minus, plus):
        if fresh in q._vertex_index:
            raise ValidationError(f"vertex id {fresh!r} already exists; rename before doubling")
    e_name = "e_" + v
    if e_name in q._arrow_index:
        raise ValidationError(f"arrow id {e_name!r} already exists; rename before doubling")
    vertices = q.vertices[:iv] + (minus, plus) + q.vertices[iv + 1:]
    arrows = tuple(
        Arrow(
            a.name,
            minus if a.source == v else a.source,
            plus if a.target == v else a.target,
        )
        for a in q.arrows
    ) + (Arrow(e_name, minus, plus),)
    return DoublingMap(
        source=q, vertex=v, minus=minus, plus=plus, e_arrow=e_name,
        result=Quiver(vertices, arrows),
    )


def lift_dimension(a: DimVector, d: DoublingMap) -> DimVector:
    a = check_dim_vector(d.source, a)
    iv = d.source.vertex_index(d.vertex)
    return a[:iv] + (a[iv], a[iv]) + a[iv + 1:]


def lift_weight(t: Weight, d: DoublingMap, n: int) -> Weight:
    """Weight on the doubled quiver: -n on v-, old value plus n on v+."""
    t = check_weight(d.source, t)
    if n < 0:
        raise ValidationError(f"doubling weight shift n must be >= 0, got {n}")
    iv = d.source.vertex_index(d.vertex)
    return t[:iv] + (-n, t[iv] + n) + t[iv + 1:]


def is_balanced(b: DimVector, d: DoublingMap) -> bool:
    b = check_dim_vector(d.result, b)
    return b[d.result.vertex_index(d.minus)] == b[d.result.vertex_index(d.plus)]


def restrict_dimension(b: DimVector, d: DoublingMap) -> DimVector:
    """Inverse of lift_dimension on balanced vectors."""
    b = check_dim_vector(d.result, b)
    if not is_balanced(b, d):
        raise ValidationError("cannot restrict an unbalanced dimension vector")
    im = d.result.vertex_index(d.minus)
    return b[:im] + (b[im],) + b[im + 2:]


def sufficient_n(a: DimVector, t: Weight) -> int:
    """Smallest shift certified to exclude unbalanced semistable dimension
    vectors after doubling.

    A subdimension vector b with b(v-) > b(v+) pairs negatively with the
    shifted weight once n exceeds sum_i max(a(i) t(i), 0); the mirrored case
    b(v+) > b(v-) pairs positively once n exceeds sum_i max(-a(i) t(i), 0).
    Both directions must be excluded, so take one more than the larger sum.
    """
    if len(a) != len(t):
        raise ValidationError("dimension vector and weight have different lengths")
    pos = sum(max(x * y, 0) for x, y in zip(a, t))
    neg = sum(max(-x * y, 0) for x, y in zip(a, t))
    return 1 + max(pos, neg)


def bipartify(
    q: Quiver, a: DimVector, t: Weight, n: int | None = None
) -> tuple[Quiver, DimVector, Weight, list[DoublingMap]]:
    """Double every original vertex in order.  With n=None the shift is
    recomputed by sufficient_n from the current data at each step; passing an
    integer uses that fixed shift throughout."""
    a = check_dim_vector(q, a)
    t = check_weight(q, t)
    cur_q, cur_a, cur_t = q, a, t
    trail: list[DoublingMap] = []
    for v in q.vertices:
        d = double_vertex(cur_q, v)
        step_n = sufficient_n(cur_a, cur_t) if n is None else n
        cur_a = lift_dimension(cur_a, d)
        cur_t = lift_weight(cur_t, d, step_n)
        cur_q = d.result
        trail.append(d)
    return cur_q, cur_a, cur_t, trail


def doubling_to_dict(d: DoublingMap) -> dict:
    from .quiver import quiver_to_dict
    return {
        "source": quiver_to_dict(d.source),
        "vertex": d.vertex,
        "minus": d.minus,
        "plus": d.plus,
        "e": d.e_arrow,
        "arrow_map": d.arrow_map,
        "result": quiver_to_dict(d.result),
    }


# --- representations ----------------------------------------------------------

@dataclass(frozen=True)
class Representation:
    """Matrices over Q assigned to arrows; mats is aligned with quiver.arrows,
    the matrix for a: i -> j has shape dim(j) x dim(i)."""
    quiver: Quiver
    dim: DimVector
    mats: tuple[Mat, ...]

    def mat(self, arrow_name: str) -> Mat:
        return self.mats[self.quiver.arrow_index(arrow_name)]


def representation(q: Quiver, dim: DimVector, mats) -> Representation:
    dim = check_dim_vector(q, dim)
    mats = tuple(mats)
    if len(mats) != len(q.arrows):
        raise ValidationError("one matrix per arrow required")
    for a, m in zip(q.arrows, mats):
        want = (dim[q.vertex_index(a.target)], dim[q.vertex_index(a.source)])
        if (m.nrows, m.ncols) != want:
            raise ValidationError(
                f"matrix for arrow {a.name!r} has shape {m.nrows}x{m.ncols}, expected {want[0]}x{want[1]}"
            )
    return Representation(q, dim, mats)


@dataclass(frozen=True)
class GroupElement:
    """One invertible square block per vertex, aligned with quiver.vertices."""
    quiver: Quiver
    dim: DimVector
    blocks: tuple[Mat, ...]

    def block(self, v: str) -> Mat:
        return self.blocks[self.quiver.vertex_index(v)]


def group_element(q: Quiver, dim: DimVector, blocks) -> GroupElement:
    dim = check_dim_vector(q, dim)
    blocks = tuple(blocks)
    if len(blocks) != q.n_vertices:
        raise ValidationError("one block per vertex required")
    for v, m, n in zip(q.vertices, blocks, dim):
        if (m.nrows, m.ncols) != (n, n):
            raise ValidationError(f"block at {v!r} must be {n}x{n}")
        if linalg.det(m) == 0:
            raise linalg.SingularMatrixError(f"block at {v!r} is singular")
    return GroupElement(q, dim, blocks)


def act(g: GroupElement, x: Representation) -> Representation:
    """(g . x)(a) = g(target) x(a) g(source)^(-1)."""
    if g.quiver != x.quiver or g.dim != x.dim:
        raise ValidationError("group element and representation live on different data")
    q = x.quiver
    inv_blocks = tuple(mat_inv(b) for b in g.blocks)
    mats = tuple(
        mat_mul(mat_mul(g.blocks[q.vertex_index(a.target)], m), inv_blocks[q.vertex_index(a.source)])
        for a, m in zip(q.arrows, x.mats)
    )
    return Representation(q, x.dim, mats)


def iota(x: Representation, d: DoublingMap) -> Representation:
    """Copy x to the doubled quiver, identity on the new arrow e.  With
    dim(v) = 0 the e-matrix is the empty 0x0 matrix."""
    if x.quiver != d.source:
        raise ValidationError("representation does not live on the doubling's source")
    nv = x.dim[d.source.vertex_index(d.vertex)]
    return Representation(d.result, lift_dimension(x.dim, d), x.mats + (identity(nv),))


def phi(y: Representation, d: DoublingMap) -> Representation:
    """Contract the doubling using the adjugate of y(e); total on balanced y."""
    if y.quiver != d.result:
        raise ValidationError("representation does not live on the doubling's result")
    if not is_balanced(y.dim, d):
        raise ValidationError("phi needs matching dimensions at v- and v+")
    adj_e = adjugate(y.mat(d.e_arrow))
    mats = []
    for a, m in zip(d.source.arrows, y.mats):
        mats.append(mat_mul(m, adj_e) if a.source == d.vertex else m)
    return Representation(d.source, restrict_dimension(y.dim, d), tuple(mats))


def psi(y: Representation, d: DoublingMap) -> Representation:
    """Contract the doubling using the inverse of y(e); psi(iota(x)) = x."""
    if y.quiver != d.result:
        raise ValidationError("representation does not live on the doubling's result")
    if not is_balanced(y.dim, d):
        raise ValidationError("psi needs matching dimensions at v- and v+")
    inv_e = mat_inv(y.mat(d.e_arrow))
    mats = []
    for a, m in zip(d.source.arrows, y.mats):
        mats.append(mat_mul(m, inv_e) if a.source == d.vertex else m)
    return Representation(d.source, restrict_dimension(y.dim, d), tuple(mats))


def hom_dim(x: Representation, y: Representation) -> int:
    """dim Hom(x, y): kernel dimension of the linear system
    f(target) x(a) = y(a) f(source) over all arrows a, in the per-vertex
    blocks f(i) of shape ydim(i) x xdim(i)."""
    if x.quiver != y.quiver:
        raise ValidationError("representations live on different quivers")
    q = x.quiver
    offsets = []
    total = 0
    for i in range(q.n_vertices):
        offsets.append(total)
        total += y.dim[i] * x.dim[i]
    if total == 0:
        return 0
    rows: list[list[Fraction]] = []
    for a, xm, ym in zip(q.arrows, x.mats, y.mats):
        s, t = q.vertex_index(a.source), q.vertex_index(a.target)
        # equation block: f(t) x(a) - y(a) f(s) = 0, one row per (r, c)
        for r in range(y.dim[t]):
            for c in range(x.dim[s]):
                row = [Fraction(0)] * total
                for k in range(x.dim[t]):
                    row[offsets[t] + r * x.dim[t] + k] += xm.rows[k][c]
                for k in range(y.dim[s]):
                    row[offsets[s] + k * x.dim[s] + c] -= ym.rows[r][k]
                rows.append(row)
    return total - linalg.rank_rows(rows)
