"""Generic subrepresentations and numerical (semi)stability of dimension vectors.

generic_ext(b, d) is the minimal Ext dimension between representations of
dimensions b and d, attained on a dense open set; it is computed by the
recursion

    generic_ext(b, d) = max{ -<c, d> : c a generic subdimension of b }

where c is a generic subdimension of b exactly when generic_ext(c, b-c) = 0.
Both calls bottom out at zero vectors, and the recursion only ever descends
to strictly smaller first arguments, so memoization makes it total.

Semistability is the numerical test: t.a = 0 and t.c >= 0 for every generic
subdimension c of a; stability asks for strict inequality on proper nonzero
c.  verify_doubling checks, exhaustively below a lifted dimension vector,
that these notions transfer through a vertex doubling.
"""

from __future__ import annotations

from functools import lru_cache

from .doubling import (
    double_vertex,
    is_balanced,
    lift_dimension,
    lift_weight,
    restrict_dimension,
    sufficient_n,
)
from .quiver import (
    DimVector,
    Quiver,
    ValidationError,
    Weight,
    box,
    check_dim_vector,
    check_weight,
    dot,
    euler_form,
    vec_sub,
)


@lru_cache(maxsize=None)
def generic_subdims(q: Quiver, b: DimVector) -> tuple[DimVector, ...]:
    """Dimension vectors of subrepresentations present in every representation
    of dimension b, in lexicographic order.  Always contains 0 and b."""
    b = check_dim_vector(q, b)
    return tuple(c for c in box(b) if generic_ext(q, c, vec_sub(b, c)) == 0)


@lru_cache(maxsize=None)
def generic_ext(q: Quiver, b: DimVector, d: DimVector) -> int:
    b = check_dim_vector(q, b)
    d = check_dim_vector(q, d)
    if not any(b) or not any(d):
        return 0
    return max(-euler_form(q, c, d) for c in generic_subdims(q, b))


def generic_hom(q: Quiver, b: DimVector, d: DimVector) -> int:
    """Minimal Hom dimension; differs from generic_ext by the bilinear form."""
    return euler_form(q, b, d) + generic_ext(q, b, d)


def is_generic_subdim(q: Quiver, c: DimVector, b: DimVector) -> bool:
    c = check_dim_vector(q, c)
    b = check_dim_vector(q, b)
    if any(x > y for x, y in zip(c, b)):
        return False
    return generic_ext(q, c, vec_sub(b, c)) == 0


def is_schur_root(q: Quiver, b: DimVector) -> bool:
    """A nonzero b is a Schur root when the generic representation is
    indecomposable: no proper split b = c + (b - c) has both generic Ext
    spaces zero."""
    b = check_dim_vector(q, b)
    if not any(b):
        raise ValidationError("the zero vector is not a root")
    for c in box(b):
        if not any(c) or c == b:
            continue
        rest = vec_sub(b, c)
        if generic_ext(q, c, rest) == 0 and generic_ext(q, rest, c) == 0:
            return False
    return True


# --- numerical stability ------------------------------------------------------

def is_semistable_dim(q: Quiver, a: DimVector, t: Weight) -> bool:
    """t.a = 0 and t.c >= 0 for every generic subdimension c of a.  The zero
    vector is semistable."""
    a = check_dim_vector(q, a)
    t = check_weight(q, t)
    if dot(t, a) != 0:
        return False
    return all(dot(t, c) >= 0 for c in generic_subdims(q, a))


def is_stable_dim(q: Quiver, a: DimVector, t: Weight) -> bool:
    """Strict positivity on proper nonzero generic subdimensions; undefined
    for the zero vector."""
    a = check_dim_vector(q, a)
    t = check_weight(q, t)
    if not any(a):
        raise ValidationError("stability is undefined for the zero dimension vector")
    if dot(t, a) != 0:
        return False
    return all(dot(t, c) > 0 for c in generic_subdims(q, a) if any(c) and c != a)


def enumerate_semistable_dims(q: Quiver, a: DimVector, t: Weight) -> tuple[DimVector, ...]:
    """All semistable b <= a, in lexicographic order."""
    a = check_dim_vector(q, a)
    t = check_weight(q, t)
    return tuple(b for b in box(a) if is_semistable_dim(q, b, t))


def enumerate_stable_dims(q: Quiver, a: DimVector, t: Weight) -> tuple[DimVector, ...]:
    a = check_dim_vector(q, a)
    t = check_weight(q, t)
    return tuple(b for b in box(a) if any(b) and is_stable_dim(q, b, t))


def thin_rep_semistable(q: Quiver, a: DimVector, t: Weight, strict: bool = False) -> bool:
    """(Semi)stability of the concrete representation with spaces of dimension
    a(i) in {0, 1} and every arrow matrix equal to (1) where both ends are in
    the support.  Its subrepresentations are the arrow-closed support subsets,
    so the test is a finite scan."""
    a = check_dim_vector(q, a)
    t = check_weight(q, t)
    if any(x > 1 for x in a):
        raise ValidationError(f"thin dimension vectors have entries 0 or 1: {a}")
    if dot(t, a) != 0:
        return False
    support = [i for i, x in enumerate(a) if x]
    succ: list[list[int]] = [[] for _ in range(q.n_vertices)]
    for arr in q.arrows:
        i, j = q.vertex_index(arr.source), q.vertex_index(arr.target)
        if a[i] and a[j]:
            succ[i].append(j)
    for mask in range(1, 1 << len(support)):
        sub = [support[k] for k in range(len(support)) if mask >> k & 1]
        inside = set(sub)
        if any(j not in inside for i in sub for j in succ[i]):
            continue
        value = sum(t[i] for i in sub)
        if value < 0 or (strict and len(sub) < len(support) and value <= 0):
            return False
    return True


# --- doubling transfer --------------------------------------------------------

def verify_doubling(q: Quiver, a: DimVector, t: Weight, vertex: str, n: int | None = None) -> dict:
    """Exhaustive check below the lifted dimension vector that doubling one
    vertex preserves the stability theory.

    Every b <= lift of a on the doubled quiver must satisfy: if b is
    semistable for the lifted weight it is balanced, and for balanced b both
    semistability and stability agree with the restriction of b on the
    original quiver.  Returns a report dict; "ok" is True when both hold.
    """
    a = check_dim_vector(q, a)
    t = check_weight(q, t)
    d = double_vertex(q, vertex)
    if n is None:
        n = sufficient_n(a, t)
    av = lift_dimension(a, d)
    tv = lift_weight(t, d, n)
    unbalanced: list[DimVector] = []
    mismatched: list[DimVector] = []
    for b in box(av):
        ss = is_semistable_dim(d.result, b, tv)
        if not is_balanced(b, d):
            if ss:
                unbalanced.append(b)
            continue
        g = restrict_dimension(b, d)
        if ss != is_semistable_dim(q, g, t):
            mismatched.append(b)
        elif any(b) and is_stable_dim(d.result, b, tv) != is_stable_dim(q, g, t):
            mismatched.append(b)
    return {
        "vertex": vertex,
        "n": n,
        "ok": not unbalanced and not mismatched,
        "unbalanced_semistable": unbalanced,
        "transfer_mismatches": mismatched,
    }
