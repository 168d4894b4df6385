"""Hilbert basis of the monoid of nonnegative integer vectors orthogonal to a lattice kernel.

The monoid is ``{b in Z^n_+ : b != 0, b^T K = 0}``.  Since it sits inside the
nonnegative orthant, its Hilbert basis is exactly the set of componentwise
minimal nonzero elements; both the completion algorithm and the brute-force
oracle below rely on that.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Sequence

import numpy as np

from .exactmath import (
    IntMatrix,
    clear_denominators,
    hermite_normal_form,
    integer_kernel,
    rank,
    rref,
    solve_in_rowspan,
)
from .modelspec import LatticeBasis

Vector = tuple[int, ...]

BRUTE_FORCE_LIMIT = 10**8


class EmptyConeError(ValueError):
    """No nonzero nonnegative integer vector is orthogonal to the kernel."""


def grlex_key(v: Sequence[int]):
    # degree ascending, then lexicographically descending
    return (sum(v), tuple(-x for x in v))


@dataclass(frozen=True)
class HilbertBasisSet:
    vectors: tuple[Vector, ...]
    kernel: LatticeBasis

    @property
    def n(self) -> int:
        return self.kernel.n

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, j: int) -> Vector:
        return self.vectors[j]

    def zero_set(self, j: int) -> frozenset[int]:
        return frozenset(x for x, v in enumerate(self.vectors[j]) if v == 0)

    def as_set(self) -> set[Vector]:
        return set(self.vectors)


def _canonical(vectors, kernel: LatticeBasis) -> HilbertBasisSet:
    return HilbertBasisSet(tuple(sorted(set(vectors), key=grlex_key)), kernel)


def _dominates(t: Sequence[int], s: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(t, s))


def hilbert_basis(kernel: LatticeBasis, method: str = "primal") -> HilbertBasisSet:
    """Hilbert basis of ``{b in Z^n_+ : b != 0, b^T K = 0}`` in canonical graded-lex order.

    ``method="primal"`` (default) triangulates the cone and collects lattice
    points of the fundamental parallelepipeds; its cost is governed by the
    dimension of the row lattice.  ``method="completion"`` is the
    Contejean-Devie search, whose cost grows with the degree of the basis.
    """
    if method == "primal":
        return _primal_basis(kernel)
    if method == "completion":
        return _completion_basis(kernel)
    raise ValueError(f"unknown method {method!r}")


def _completion_basis(kernel: LatticeBasis) -> HilbertBasisSet:
    """Contejean-Devie completion.

    Candidates are grown one unit vector at a time, breadth first by degree.
    A candidate ``t`` with residual ``r = K^T t`` is only extended by ``e_i``
    when ``<r, K^T e_i> < 0``, i.e. when the step moves the residual towards
    zero; candidates dominating an already found solution are discarded.
    The search ends because the cone is pointed.
    """
    n = kernel.n
    dirs = kernel.directions()
    if not dirs:
        units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        return _canonical(units, kernel)
    # Gram matrix of the unit-vector images under t -> K^T t
    D = [[int(d[i]) for d in dirs] for i in range(n)]
    gram_py = [[sum(a * b for a, b in zip(D[i], D[j])) for j in range(n)] for i in range(n)]
    if max(abs(v) for r in gram_py for v in r) > 2**40:
        raise OverflowError("kernel entries too large for the int64 completion search")
    gram = np.array(gram_py, dtype=np.int64)

    found: list[np.ndarray] = []
    # each candidate carries g = (<r, K^T e_j>)_j instead of the residual r itself
    T = np.eye(n, dtype=np.int64)
    G = gram.copy()
    while len(T):
        # r = 0 iff <r, r> = sum_i t_i g_i = 0
        solved = np.einsum("ij,ij->i", T, G) == 0
        found.extend(T[solved])
        T, G = T[~solved], G[~solved]
        if not len(T):
            break
        rows, steps = np.nonzero(G < 0)
        T2 = T[rows].copy()
        T2[np.arange(len(rows)), steps] += 1
        G2 = G[rows] + gram[steps]
        T2, keep = np.unique(T2, axis=0, return_index=True)
        G2 = G2[keep]
        if found:
            S = np.array(found)
            dominated = np.zeros(len(T2), dtype=bool)
            for s in S:
                dominated |= np.all(T2 >= s, axis=1)
            T2, G2 = T2[~dominated], G2[~dominated]
        T, G = T2, G2

    if not found:
        raise EmptyConeError("the cone {b >= 0 : b^T K = 0} is {0}")
    return _canonical([tuple(int(x) for x in v) for v in found], kernel)


def row_lattice(kernel: LatticeBasis) -> list[Vector]:
    """Basis of the saturated lattice {b in Z^n : b^T K = 0}."""
    n = kernel.n
    dirs = kernel.directions()
    if not dirs:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return integer_kernel(IntMatrix.from_rows(dirs, n)).columns()


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def extreme_rays(inequalities: Sequence[Sequence[int]], dim: int) -> list[Vector]:
    """Extreme rays of the pointed cone {y in R^dim : <a, y> >= 0 for all a}.

    Double description: start from the simplicial cone of ``dim`` independent
    inequalities and add the others one at a time, combining adjacent rays
    across each new hyperplane (combinatorial adjacency test).  The
    inequalities must have full rank ``dim``.
    """
    ineqs = [tuple(a) for a in inequalities]
    chosen: list[int] = []
    for i, a in enumerate(ineqs):
        if rank([ineqs[j] for j in chosen] + [a]) > len(chosen):
            chosen.append(i)
        if len(chosen) == dim:
            break
    if len(chosen) < dim:
        raise ValueError("inequality system does not have full rank; cone is not pointed")
    # rays of {y : A_I y >= 0} are the columns of A_I^{-1}
    aug = [list(ineqs[i]) + [int(r == c) for c in range(dim)] for r, i in enumerate(chosen)]
    red, _ = rref(aug)
    inv_cols = [[red[r][dim + c] for r in range(dim)] for c in range(dim)]
    rays = [_reduce(clear_denominators(col)) for col in inv_cols]
    processed = list(chosen)

    def zero_mask(r):
        mask = 0
        for i in processed:
            if _dot(ineqs[i], r) == 0:
                mask |= 1 << i
        return mask

    for i, a in enumerate(ineqs):
        if i in chosen:
            continue
        zmask = [zero_mask(r) for r in rays]
        vals = [_dot(a, r) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        new = [rays[k] for k, v in enumerate(vals) if v >= 0]
        for p in pos:
            for q in neg:
                common = zmask[p] & zmask[q]
                if bin(common).count("1") < dim - 2:
                    continue
                if any(k != p and k != q and zmask[k] & common == common for k in range(len(rays))):
                    continue
                r = tuple(vals[p] * y - vals[q] * x for x, y in zip(rays[p], rays[q]))
                new.append(_reduce(r))
        rays = new
        processed.append(i)
    return rays


def _reduce(v: Sequence[int]) -> Vector:
    # divide by the gcd, keeping the direction
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def pulling_triangulation(rays: Sequence[Vector], facets_of) -> list[tuple[int, ...]]:
    """Pulling triangulation of a pointed cone given by its extreme rays.

    ``facets_of(F, k)`` must return the facets (as ray-index sets) of the
    ``k``-dimensional face ``F``.  Each face is coned from its smallest ray
    over the triangulations of the facets not containing that ray.
    """
    memo: dict[frozenset, list[tuple[int, ...]]] = {}

    def tri(F: frozenset, k: int) -> list[tuple[int, ...]]:
        if F in memo:
            return memo[F]
        if len(F) == k:
            out = [tuple(sorted(F))]
        else:
            r0 = min(F)
            out = []
            for G in facets_of(F, k):
                if r0 not in G:
                    out.extend((r0,) + s for s in tri(G, k - 1))
        memo[F] = out
        return out

    full = frozenset(range(len(rays)))
    return tri(full, rank(list(rays)))


def parallelepiped_points(V: Sequence[Sequence[int]]) -> list[Vector]:
    """Nonzero lattice points of the half-open parallelepiped spanned by the columns of V.

    V is k x k, nonsingular.  Coset representatives of Z^k / V Z^k are read
    off the diagonal of the Hermite form of the column lattice; each is moved
    into the parallelepiped by taking fractional parts of its coordinates.
    """
    k = len(V)
    cols = [tuple(V[i][j] for i in range(k)) for j in range(k)]
    H, _ = hermite_normal_form(IntMatrix.from_rows(cols, k))
    diag = [H[i, i] for i in range(k)]
    aug = [list(V[i]) + [int(i == c) for c in range(k)] for i in range(k)]
    red, piv = rref(aug)
    if len(piv) < k or piv[-1] >= k:
        raise ValueError("singular simplicial cone")
    inv = [row[k:] for row in red]
    out = []
    for z in itertools.product(*(range(d) for d in diag)):
        if not any(z):
            continue
        lam = [sum(inv[i][j] * z[j] for j in range(k)) for i in range(k)]
        frac = [x - (x.numerator // x.denominator) for x in lam]
        p = tuple(int(sum(frac[j] * cols[j][i] for j in range(k))) for i in range(k))
        if any(p):
            out.append(p)
    return out


def _primal_basis(kernel: LatticeBasis) -> HilbertBasisSet:
    n = kernel.n
    R = row_lattice(kernel)  # columns of an n x d lattice basis
    d = len(R)
    if d == 0:
        raise EmptyConeError("the row lattice is {0}")
    # inequality b_x >= 0 in lattice coordinates y, with b = sum_i y_i R_i
    ineqs = [tuple(R[i][x] for i in range(d)) for x in range(n)]
    rays_y = extreme_rays(ineqs, d)
    if not rays_y:
        raise EmptyConeError("the cone {b >= 0 : b^T K = 0} is {0}")
    rays = [tuple(sum(y[i] * R[i][x] for i in range(d)) for x in range(n)) for y in rays_y]

    zero_sets = [frozenset(k for k, r in enumerate(rays) if r[x] == 0) for x in range(n)]
    rank_memo: dict[frozenset, int] = {}

    def face_rank(F):
        if F not in rank_memo:
            rank_memo[F] = rank([rays[i] for i in sorted(F)]) if F else 0
        return rank_memo[F]

    def facets_of(F, k):
        found = set()
        for Z in zero_sets:
            G = F & Z
            if G != F and G not in found and face_rank(G) == k - 1:
                found.add(G)
        return sorted(found, key=sorted)

    simplices = pulling_triangulation(rays, facets_of)

    # coordinates in a basis W of the saturated lattice span(rays) & Z^n
    ortho = integer_kernel(IntMatrix.from_rows(rays, n)).columns()
    W = integer_kernel(IntMatrix.from_rows(ortho, n)).columns() if ortho else [
        tuple(int(i == j) for j in range(n)) for i in range(n)
    ]
    k = len(W)
    Wm = IntMatrix.from_columns(W, n)

    def coords(b):
        return tuple(int(x) for x in solve_in_rowspan(b, Wm.T))

    ray_coords = [coords(r) for r in rays]
    candidates = set(rays)
    for s in simplices:
        V = [[ray_coords[j][i] for j in s] for i in range(k)]
        for p in parallelepiped_points(V):
            candidates.add(tuple(sum(p[i] * W[i][x] for i in range(k)) for x in range(n)))
    return _canonical(_minimal_elements(list(candidates)), kernel)


def _minimal_elements(vectors: list[Vector]) -> list[Vector]:
    vectors = sorted(vectors, key=grlex_key)
    minimal: list[Vector] = []
    for v in vectors:
        if not any(_dominates(v, s) for s in minimal):
            minimal.append(v)
    return minimal


def brute_force_basis(kernel: LatticeBasis, bound: int) -> HilbertBasisSet:
    """Enumerate {0..bound}^n, keep vectors orthogonal to the kernel, drop the reducible ones.

    A vector ``v`` in the box is a sum of two nonzero monoid elements iff some
    other enumerated element ``u <= v`` exists (then ``v - u`` is also in the
    box and in the monoid), so the survivors are the minimal elements.
    """
    n = kernel.n
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if (bound + 1) ** n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"enumeration of {(bound + 1) ** n} vectors exceeds the guard {BRUTE_FORCE_LIMIT}")
    dirs = kernel.directions()
    if dirs:
        D = np.array(dirs, dtype=np.int64).T  # n x l
    else:
        D = np.zeros((n, 0), dtype=np.int64)

    hits: list[Vector] = []
    split = min(n, 3)
    tail = n - split
    if tail:
        grid = np.indices((bound + 1,) * tail, dtype=np.int64).reshape(tail, -1).T
    else:
        grid = np.zeros((1, 0), dtype=np.int64)
    tail_img = grid @ D[split:]
    for head in itertools.product(range(bound + 1), repeat=split):
        head_img = np.array(head, dtype=np.int64) @ D[:split]
        ok = np.all(tail_img + head_img == 0, axis=1)
        for row in grid[ok]:
            v = head + tuple(int(x) for x in row)
            if any(v):
                hits.append(v)
    if not hits:
        raise EmptyConeError("no nonzero vector in the enumeration box is orthogonal to the kernel")
    return _canonical(_minimal_elements(hits), kernel)


def decompose(b: Sequence[int], basis: HilbertBasisSet | Sequence[Sequence[int]]) -> dict[int, int] | None:
    """Write ``b`` as a nonnegative integer combination of basis vectors.

    Returns ``{index: multiplicity}`` or ``None``.  Exhaustive depth-first
    search, only trying basis vectors that fit under the remainder; vectors
    are tried in index order with nondecreasing index to avoid permutations.
    """
    vecs = list(basis.vectors if isinstance(basis, HilbertBasisSet) else basis)
    b = tuple(b)
    if vecs and len(b) != len(vecs[0]):
        raise ValueError("length mismatch")
    if not any(b):
        return {}
    if any(x < 0 for x in b):
        return None

    dead: set[tuple[Vector, int]] = set()

    def search(rem: Vector, start: int) -> dict[int, int] | None:
        if not any(rem):
            return {}
        if (rem, start) in dead:
            return None
        for j in range(start, len(vecs)):
            v = vecs[j]
            if not any(v) or not _dominates(rem, v):
                continue
            sub = search(tuple(a - c for a, c in zip(rem, v)), j)
            if sub is not None:
                sub[j] = sub.get(j, 0) + 1
                return sub
        dead.add((rem, start))
        return None

    return search(b, 0)


def redundant_elements(basis: HilbertBasisSet) -> set[int]:
    """Indices whose zero set is empty or is the intersection of other elements' zero sets."""
    n = basis.n
    zs = [basis.zero_set(j) for j in range(len(basis))]
    out = set()
    for j, S in enumerate(zs):
        if not S:
            out.add(j)
            continue
        supersets = [T for i, T in enumerate(zs) if i != j and T and S <= T]
        inter = frozenset(range(n))
        for T in supersets:
            inter &= T
        if supersets and inter == S:
            out.add(j)
    return out


def basis_to_json(basis: HilbertBasisSet) -> dict:
    return {
        "n": basis.n,
        "redundant": sorted(redundant_elements(basis)),
        "vectors": [list(v) for v in basis.vectors],
    }
