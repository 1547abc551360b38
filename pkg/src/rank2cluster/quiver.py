"""Generalized Kronecker quivers and their module computations.

K_{b,c} has sources v_1..v_b, sinks w_1..w_c, and exactly one arrow from
every source to every sink.  Modules are realized as explicit matrices
over a prime field; submodule Grassmannians are counted by direct
enumeration of row-echelon subspace tuples, and Euler characteristics are
recovered by interpolating the counting polynomial through enough primes
and reading off its value at q = 1.  A held-out prime checks every
interpolation, so a non-generic sample or a wrong degree bound surfaces as
an error instead of a silently wrong number.

All of this works for any finite acyclic quiver; nothing below is special
to K_{b,c} except the constructor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


class NotRigid(RuntimeError):
    """Generic sampling failed to certify endomorphism dimension 1."""


class NotPolynomial(RuntimeError):
    """Point counts failed the held-out prime check."""


class NotIntegral(RuntimeError):
    """Interpolated counting polynomial is non-integer at q = 1."""


@dataclass(frozen=True)
class Quiver:
    """Finite acyclic quiver with named vertices."""

    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str], ...]

    def __init__(self, vertices: Iterable[str], arrows: Iterable[tuple[str, str]]):
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "arrows", tuple((s, t) for s, t in arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex names must be distinct")
        for s, t in self.arrows:
            if s not in self.vertices or t not in self.vertices:
                raise ValueError(f"arrow ({s}, {t}) references unknown vertex")
        self._check_acyclic()

    def _check_acyclic(self):
        remaining = {v: 0 for v in self.vertices}
        for _, t in self.arrows:
            remaining[t] += 1
        queue = [v for v, deg in remaining.items() if deg == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for s, t in self.arrows:
                if s == v:
                    remaining[t] -= 1
                    if remaining[t] == 0:
                        queue.append(t)
        if seen != len(self.vertices):
            raise ValueError("quiver has an oriented cycle")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, vertex: str) -> int:
        try:
            return self.vertices.index(vertex)
        except ValueError:
            raise KeyError(f"unknown vertex {vertex!r}") from None

    def arrow_indices(self) -> list[tuple[int, int]]:
        return [(self.index(s), self.index(t)) for s, t in self.arrows]


def kronecker_quiver(b: int, c: int) -> Quiver:
    """K_{b,c}: vertices v1..vb then w1..wc, one arrow per (source, sink)."""
    if not isinstance(b, int) or not isinstance(c, int) or b < 1 or c < 1:
        raise ValueError("b and c must be positive integers")
    vertices = [f"v{i}" for i in range(1, b + 1)] + [f"w{j}" for j in range(1, c + 1)]
    arrows = [(f"v{i}", f"w{j}") for i in range(1, b + 1) for j in range(1, c + 1)]
    return Quiver(vertices, arrows)


def exchange_matrix(Q: Quiver) -> np.ndarray:
    """Skew-symmetric matrix b_ij = #(arrows i->j) - #(arrows j->i)."""
    B = np.zeros((Q.n, Q.n), dtype=np.int64)
    for s, t in Q.arrow_indices():
        B[s, t] += 1
        B[t, s] -= 1
    return B


def euler_matrix(Q: Quiver) -> np.ndarray:
    """C with C_ij = delta_ij - #(arrows i->j); the Euler form is d^T C e."""
    C = np.eye(Q.n, dtype=np.int64)
    for s, t in Q.arrow_indices():
        C[s, t] -= 1
    return C


def _as_dimvec(Q: Quiver, d: Sequence[int], allow_negative: bool = False) -> np.ndarray:
    arr = np.asarray(list(d), dtype=np.int64)
    if arr.shape != (Q.n,):
        raise ValueError(f"dimension vector has length {arr.shape}, quiver has {Q.n} vertices")
    if not allow_negative and (arr < 0).any():
        raise ValueError(f"dimension vector must be nonnegative: {tuple(int(x) for x in arr)}")
    return arr


def euler_form(Q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    dv = _as_dimvec(Q, d, allow_negative=True)
    ev = _as_dimvec(Q, e, allow_negative=True)
    return int(dv @ euler_matrix(Q) @ ev)


# ---------------------------------------------------------------------------
# Coxeter transformation on dimension vectors

_COXETER_CACHE: dict[Quiver, tuple[np.ndarray, np.ndarray]] = {}


def _fraction_inverse(M: np.ndarray) -> list[list[Fraction]]:
    n = M.shape[0]
    aug = [[Fraction(int(M[i, j])) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("Euler matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _coxeter_matrices(Q: Quiver) -> tuple[np.ndarray, np.ndarray]:
    got = _COXETER_CACHE.get(Q)
    if got is not None:
        return got
    C = euler_matrix(Q)
    inv_rows = _fraction_inverse(C)
    if any(x.denominator != 1 for row in inv_rows for x in row):
        raise ValueError("Euler matrix inverse is not integral")
    Cinv = np.array([[int(x) for x in row] for row in inv_rows], dtype=np.int64)
    # backward: dims of the inverse translate tau^{-1}, Phi = -C^{-T} C
    # forward: dims of tau itself, the matrix inverse of Phi
    phi_b = -(Cinv.T @ C)
    phi_f = -(Cinv @ C.T)
    _COXETER_CACHE[Q] = (phi_b, phi_f)
    return phi_b, phi_f


def coxeter_translate(Q: Quiver, d: Sequence[int], direction: str) -> tuple[int, ...]:
    """Dimension vector of tau^{-1}M ("backward") or tau M ("forward").

    Defined on transjective modules away from the ends of their orbits:
    backward needs a non-injective module, forward a non-projective one.
    Leaving the nonnegative orthant means that precondition was violated
    and raises ValueError.
    """
    if direction not in ("backward", "forward"):
        raise ValueError(f"direction must be 'backward' or 'forward', got {direction!r}")
    dv = _as_dimvec(Q, d)
    phi_b, phi_f = _coxeter_matrices(Q)
    out = (phi_b if direction == "backward" else phi_f) @ dv
    if (out < 0).any():
        kind = "injective" if direction == "backward" else "projective"
        raise ValueError(
            f"translate of {tuple(int(x) for x in dv)} left the nonnegative orthant "
            f"({tuple(int(x) for x in out)}); the module is {kind}"
        )
    return tuple(int(x) for x in out)


# ---------------------------------------------------------------------------
# explicit representations

def _is_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _first_primes(count: int) -> list[int]:
    out = []
    p = 2
    while len(out) < count:
        if _is_prime(p):
            out.append(p)
        p += 1
    return out


@dataclass(frozen=True, eq=False)
class Representation:
    """Matrices over F_p realizing a module: maps[a] has shape (dim t, dim s)."""

    quiver: Quiver
    p: int
    dims: tuple[int, ...]
    maps: tuple[np.ndarray, ...]

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"field characteristic must be prime, got {self.p}")
        dims = tuple(int(x) for x in self.dims)
        if len(dims) != self.quiver.n or any(x < 0 for x in dims):
            raise ValueError(f"bad dimension vector {dims}")
        object.__setattr__(self, "dims", dims)
        idx = self.quiver.arrow_indices()
        if len(self.maps) != len(idx):
            raise ValueError("one matrix per arrow required")
        frozen = []
        for a, (s, t) in enumerate(idx):
            m = np.asarray(self.maps[a], dtype=np.int64) % self.p
            if m.shape != (dims[t], dims[s]):
                raise ValueError(
                    f"arrow {self.quiver.arrows[a]} matrix has shape {m.shape}, "
                    f"expected {(dims[t], dims[s])}"
                )
            m.flags.writeable = False
            frozen.append(m)
        object.__setattr__(self, "maps", tuple(frozen))

    @property
    def total_dimension(self) -> int:
        return sum(self.dims)


def _paths_from(Q: Quiver, start: int) -> list[list[tuple[int, ...]]]:
    # per-vertex lists of paths (arrow index tuples) starting at `start`
    idx = Q.arrow_indices()
    buckets: list[list[tuple[int, ...]]] = [[] for _ in range(Q.n)]
    frontier = [((), start)]
    buckets[start].append(())
    while frontier:
        nxt = []
        for path, at in frontier:
            for a, (s, t) in enumerate(idx):
                if s == at:
                    ext = path + (a,)
                    buckets[t].append(ext)
                    nxt.append((ext, t))
        frontier = nxt
    return buckets


def _paths_into(Q: Quiver, end: int) -> list[list[tuple[int, ...]]]:
    idx = Q.arrow_indices()
    buckets: list[list[tuple[int, ...]]] = [[] for _ in range(Q.n)]
    frontier = [((), end)]
    buckets[end].append(())
    while frontier:
        nxt = []
        for path, at in frontier:
            for a, (s, t) in enumerate(idx):
                if t == at:
                    ext = (a,) + path
                    buckets[s].append(ext)
                    nxt.append((ext, s))
        frontier = nxt
    return buckets


def projective_dimension_vector(Q: Quiver, vertex: str) -> tuple[int, ...]:
    return tuple(len(b) for b in _paths_from(Q, Q.index(vertex)))


def injective_dimension_vector(Q: Quiver, vertex: str) -> tuple[int, ...]:
    return tuple(len(b) for b in _paths_into(Q, Q.index(vertex)))


def projective_module(Q: Quiver, vertex: str, p: int) -> Representation:
    """P_vertex with basis the paths starting at `vertex`; 0/1 matrices."""
    basis = _paths_from(Q, Q.index(vertex))
    dims = tuple(len(b) for b in basis)
    idx = Q.arrow_indices()
    maps = []
    for a, (s, t) in enumerate(idx):
        m = np.zeros((dims[t], dims[s]), dtype=np.int64)
        for col, path in enumerate(basis[s]):
            m[basis[t].index(path + (a,)), col] = 1
        maps.append(m)
    return Representation(Q, p, dims, tuple(maps))


def injective_module(Q: Quiver, vertex: str, p: int) -> Representation:
    """I_vertex with basis the paths ending at `vertex`.

    The arrow a: s -> t strips a leading traversal of a from each basis
    path when present and kills the path otherwise.
    """
    basis = _paths_into(Q, Q.index(vertex))
    dims = tuple(len(b) for b in basis)
    idx = Q.arrow_indices()
    maps = []
    for a, (s, t) in enumerate(idx):
        m = np.zeros((dims[t], dims[s]), dtype=np.int64)
        for col, path in enumerate(basis[s]):
            if path and path[0] == a:
                m[basis[t].index(path[1:]), col] = 1
        maps.append(m)
    return Representation(Q, p, dims, tuple(maps))


def simple_module(Q: Quiver, vertex: str, p: int) -> Representation:
    i = Q.index(vertex)
    dims = tuple(int(j == i) for j in range(Q.n))
    maps = tuple(
        np.zeros((dims[t], dims[s]), dtype=np.int64) for s, t in Q.arrow_indices()
    )
    return Representation(Q, p, dims, maps)


def direct_sum(M: Representation, N: Representation) -> Representation:
    if M.quiver != N.quiver or M.p != N.p:
        raise ValueError("direct summands must share a quiver and a field")
    dims = tuple(a + b for a, b in zip(M.dims, N.dims))
    maps = []
    for a, (s, t) in enumerate(M.quiver.arrow_indices()):
        m = np.zeros((dims[t], dims[s]), dtype=np.int64)
        m[: M.dims[t], : M.dims[s]] = M.maps[a]
        m[M.dims[t]:, M.dims[s]:] = N.maps[a]
        maps.append(m)
    return Representation(M.quiver, M.p, dims, tuple(maps))


# ---------------------------------------------------------------------------
# linear algebra over F_p

def _rank_mod_p(rows: np.ndarray, p: int) -> int:
    if rows.size == 0:
        return 0
    mat = rows % p
    m, n = mat.shape
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, m) if mat[r, col]), None)
        if pivot is None:
            continue
        mat[[rank, pivot]] = mat[[pivot, rank]]
        inv = pow(int(mat[rank, col]), p - 2, p)
        mat[rank] = (mat[rank] * inv) % p
        nz = [r for r in range(m) if r != rank and mat[r, col]]
        for r in nz:
            mat[r] = (mat[r] - mat[r, col] * mat[rank]) % p
        rank += 1
        if rank == m:
            break
    return rank


def hom_dimension(M: Representation, N: Representation) -> int:
    """dim_F_p Hom(M, N): nullity of the commuting-square linear system."""
    if M.quiver != N.quiver or M.p != N.p:
        raise ValueError("both modules must live over the same quiver and field")
    p = M.p
    offsets = []
    total = 0
    for i in range(M.quiver.n):
        offsets.append(total)
        total += N.dims[i] * M.dims[i]
    if total == 0:
        return 0
    rows = []
    for a, (s, t) in enumerate(M.quiver.arrow_indices()):
        Ma, Na = M.maps[a], N.maps[a]
        for r in range(N.dims[t]):
            for cs in range(M.dims[s]):
                row = np.zeros(total, dtype=np.int64)
                # (f_t @ M(a))[r, cs] term
                for c in range(M.dims[t]):
                    row[offsets[t] + r * M.dims[t] + c] += Ma[c, cs]
                # -(N(a) @ f_s)[r, cs] term
                for rr in range(N.dims[s]):
                    row[offsets[s] + rr * M.dims[s] + cs] -= Na[r, rr]
                rows.append(row)
    if not rows:
        return total
    rank = _rank_mod_p(np.array(rows), p)
    return total - rank


def generic_module(
    Q: Quiver,
    d: Sequence[int],
    p: int,
    trials: int = 20,
    seed: int = 0,
) -> Representation:
    """Random representation at d, accepted only with endomorphism dimension 1.

    Requires <d, d> = 1 (a real Schur root, as along transjective orbits);
    then End = 1 forces Ext^1 = 0, so the accepted sample is rigid and its
    Grassmannian counts are those of the unique rigid module at d.  Raises
    NotRigid when no sample within `trials` attempts is accepted.
    """
    dv = _as_dimvec(Q, d)
    if not _is_prime(p):
        raise ValueError(f"field characteristic must be prime, got {p}")
    form = euler_form(Q, dv, dv)
    if form != 1:
        raise ValueError(f"<d,d> = {form} != 1: {tuple(int(x) for x in dv)} is not a real Schur root")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = np.random.default_rng(np.random.SeedSequence([seed & 0xFFFFFFFFFFFFFFFF, p]))
    idx = Q.arrow_indices()
    for _ in range(trials):
        maps = tuple(
            rng.integers(0, p, size=(int(dv[t]), int(dv[s])), dtype=np.int64)
            for s, t in idx
        )
        M = Representation(Q, p, tuple(int(x) for x in dv), maps)
        if hom_dimension(M, M) == 1:
            return M
    raise NotRigid(
        f"no rigid sample at dims {tuple(int(x) for x in dv)} over F_{p} in {trials} trials"
    )


# ---------------------------------------------------------------------------
# submodule Grassmannians

@dataclass(frozen=True)
class GrassmannianCount:
    e: tuple[int, ...]
    prime: int
    count: int


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    value = Fraction(1)
    for i in range(1, k + 1):
        value *= Fraction(q ** (n - k + i) - 1, q ** i - 1)
    assert value.denominator == 1
    return int(value)


def _subspaces(p: int, d: int, k: int) -> list[tuple[np.ndarray, tuple[int, ...]]]:
    """All k-dimensional subspaces of F_p^d as (RREF basis, pivot columns)."""
    if k == 0:
        return [(np.zeros((0, d), dtype=np.int64), ())]
    out = []
    for pivots in itertools.combinations(range(d), k):
        free = [
            (r, c)
            for r in range(k)
            for c in range(pivots[r] + 1, d)
            if c not in pivots
        ]
        for values in itertools.product(range(p), repeat=len(free)):
            basis = np.zeros((k, d), dtype=np.int64)
            for r, c in zip(range(k), pivots):
                basis[r, c] = 1
            for (r, c), val in zip(free, values):
                basis[r, c] = val
            out.append((basis, pivots))
    return out


def _contained(vectors: np.ndarray, basis: np.ndarray, pivots: tuple[int, ...], p: int) -> bool:
    if vectors.shape[0] == 0:
        return True
    red = vectors % p
    for r, c in enumerate(pivots):
        red = (red - np.outer(red[:, c], basis[r])) % p
    return not red.any()


def count_submodules(M: Representation, e: Sequence[int]) -> GrassmannianCount:
    """Number of subrepresentation tuples of dimension vector e over F_p."""
    ev = tuple(int(x) for x in e)
    if len(ev) != M.quiver.n or any(x < 0 for x in ev):
        raise ValueError(f"bad dimension vector {ev}")
    if any(x > dmax for x, dmax in zip(ev, M.dims)):
        raise ValueError(f"e = {ev} exceeds module dimensions {M.dims}")
    p = M.p
    subs = [_subspaces(p, M.dims[i], ev[i]) for i in range(M.quiver.n)]
    idx = M.quiver.arrow_indices()
    # per-arrow containment tables, so the product loop is boolean-only
    tables = []
    for a, (s, t) in enumerate(idx):
        table = np.ones((len(subs[s]), len(subs[t])), dtype=bool)
        for i_s, (bs, _) in enumerate(subs[s]):
            if bs.shape[0] == 0:
                continue
            image = (M.maps[a] @ bs.T).T % p
            for i_t, (bt, pt) in enumerate(subs[t]):
                table[i_s, i_t] = _contained(image, bt, pt, p)
        tables.append(table)
    count = 0
    for choice in itertools.product(*[range(len(s)) for s in subs]):
        if all(tables[a][choice[s], choice[t]] for a, (s, t) in enumerate(idx)):
            count += 1
    return GrassmannianCount(ev, p, count)


# ---------------------------------------------------------------------------
# Euler characteristics via counting polynomials

@dataclass(frozen=True)
class ModuleSpec:
    """Symbolic module description resolvable at any prime.

    kinds: "projective" | "injective" | "simple" (vertex required),
    "generic" (dims required, must be a real Schur root at realization
    time), "sum" (parts required).
    """

    quiver: Quiver
    kind: str
    vertex: str | None = None
    dims: tuple[int, ...] | None = None
    parts: tuple["ModuleSpec", ...] | None = None

    def __post_init__(self):
        if self.kind in ("projective", "injective", "simple"):
            if self.vertex is None:
                raise ValueError(f"{self.kind} spec requires a vertex")
            self.quiver.index(self.vertex)
            if self.dims is not None or self.parts is not None:
                raise ValueError(f"{self.kind} spec takes only a vertex")
        elif self.kind == "generic":
            if self.dims is None:
                raise ValueError("generic spec requires dims")
            object.__setattr__(self, "dims", tuple(int(x) for x in self.dims))
            _as_dimvec(self.quiver, self.dims)
        elif self.kind == "sum":
            if not self.parts:
                raise ValueError("sum spec requires parts")
            object.__setattr__(self, "parts", tuple(self.parts))
            for part in self.parts:
                if part.quiver != self.quiver:
                    raise ValueError("sum parts must share the quiver")
        else:
            raise ValueError(f"unknown module kind {self.kind!r}")

    @property
    def dimension_vector(self) -> tuple[int, ...]:
        if self.kind == "projective":
            return projective_dimension_vector(self.quiver, self.vertex)
        if self.kind == "injective":
            return injective_dimension_vector(self.quiver, self.vertex)
        if self.kind == "simple":
            i = self.quiver.index(self.vertex)
            return tuple(int(j == i) for j in range(self.quiver.n))
        if self.kind == "generic":
            return self.dims
        return tuple(
            sum(part.dimension_vector[i] for part in self.parts)
            for i in range(self.quiver.n)
        )

    def realize(self, p: int, seed: int = 0, trials: int = 20) -> Representation:
        if self.kind == "projective":
            return projective_module(self.quiver, self.vertex, p)
        if self.kind == "injective":
            return injective_module(self.quiver, self.vertex, p)
        if self.kind == "simple":
            return simple_module(self.quiver, self.vertex, p)
        if self.kind == "generic":
            return generic_module(self.quiver, self.dims, p, trials=trials, seed=seed)
        total = self.parts[0].realize(p, seed, trials)
        for offset, part in enumerate(self.parts[1:], start=1):
            total = direct_sum(total, part.realize(p, seed + 7919 * offset, trials))
        return total


def _lagrange_eval(points: list[tuple[int, int]], x) -> Fraction:
    total = Fraction(0)
    for i, (xi, yi) in enumerate(points):
        term = Fraction(yi)
        for j, (xj, _) in enumerate(points):
            if i != j:
                term *= Fraction(x - xj, xi - xj)
        total += term
    return total


_CHI_CACHE: dict[tuple, dict[tuple[int, ...], int]] = {}

# primes to try for point counting; generic sampling may reject some
_PRIME_POOL_SIZE = 40


def chi_table(spec: ModuleSpec, seed: int = 0, trials: int = 20) -> dict[tuple[int, ...], int]:
    """Euler characteristic of Gr_e(M) for every e <= dim M.

    Counts points over D+2 primes per e, where D = sum e_i (d_i - e_i)
    bounds the degree of the counting polynomial; interpolates through the
    first D+1 counts, verifies the prediction at the held-out prime
    (NotPolynomial on mismatch), and evaluates at q = 1 (NotIntegral if
    that is not an integer).  Results are cached per (spec, seed, trials).
    """
    key = (spec, seed, trials)
    got = _CHI_CACHE.get(key)
    if got is not None:
        return got
    d = spec.dimension_vector
    all_e = list(itertools.product(*[range(x + 1) for x in d]))
    needed = sum((x * x) // 4 for x in d) + 2
    collected: list[tuple[int, dict[tuple[int, ...], int]]] = []
    rejected: list[int] = []
    for p in _first_primes(_PRIME_POOL_SIZE):
        if len(collected) == needed:
            break
        try:
            M = spec.realize(p, seed=seed, trials=trials)
        except NotRigid:
            rejected.append(p)
            continue
        counts = {e: count_submodules(M, e).count for e in all_e}
        collected.append((p, counts))
    if len(collected) < needed:
        raise NotRigid(
            f"needed {needed} primes for {spec.kind} at dims {d}, got "
            f"{len(collected)} (rejected: {rejected})"
        )
    table: dict[tuple[int, ...], int] = {}
    for e in all_e:
        degree = sum(ei * (di - ei) for ei, di in zip(e, d))
        nodes = [(p, counts[e]) for p, counts in collected[: degree + 1]]
        hold_p, hold_counts = collected[degree + 1]
        predicted = _lagrange_eval(nodes, hold_p)
        actual = hold_counts[e]
        if predicted != actual:
            raise NotPolynomial(
                f"holdout prime {hold_p} check failed for e={e}: interpolation "
                f"predicts {predicted}, count is {actual}"
            )
        at_one = _lagrange_eval(nodes, 1)
        if at_one.denominator != 1:
            raise NotIntegral(f"counting polynomial at q=1 is {at_one} for e={e}")
        table[e] = int(at_one)
    _CHI_CACHE[key] = table
    return table


def euler_characteristic(
    spec: ModuleSpec,
    e: Sequence[int],
    seed: int = 0,
    trials: int = 20,
) -> int:
    """chi(Gr_e(M)) for the module described by spec."""
    ev = tuple(int(x) for x in e)
    d = spec.dimension_vector
    if len(ev) != len(d) or any(x < 0 or x > dx for x, dx in zip(ev, d)):
        raise ValueError(f"e = {ev} is not between 0 and dim M = {d}")
    return chi_table(spec, seed=seed, trials=trials)[ev]
