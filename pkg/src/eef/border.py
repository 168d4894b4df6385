"""Closure of the family: exposed sets, membership of border densities, and limit paths.

Certificates are integer coefficient vectors over the rows of
``ensure_constant_row(M)``; the affine functional they define vanishes on the
exposed set and is at least 1 everywhere else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .exactmath import clear_denominators, solve_in_rowspan
from .family import (
    Density,
    check_implicit,
    density_theta,
    density_zeta,
    total_variation,
    trace_model,
)
from .hilbert import HilbertBasisSet
from .modelspec import ModelMatrix, StateSpace, ensure_constant_row, kernel_basis

LOG_TOL = 1e-9
DEFAULT_SCHEDULE = tuple(-(2.0**k) for k in range(41))


class ConvergenceError(RuntimeError):
    def __init__(self, beta: float, gap: float):
        self.beta = beta
        self.gap = gap
        super().__init__(f"no convergence by beta={beta:g}; last total-variation gap {gap:.3e}")


@dataclass(frozen=True)
class ExposedSet:
    states: frozenset[int]
    certificate: tuple[int, ...]
    generators: tuple[int, ...] = ()

    @property
    def improper(self) -> bool:
        return not any(self.certificate)

    def functional(self, M: ModelMatrix) -> tuple[int, ...]:
        """Values of the certificate functional at every state."""
        rows = ensure_constant_row(M).A.rows()
        if len(rows) != len(self.certificate):
            raise ValueError("certificate length does not match the model rows")
        return tuple(sum(c * r[x] for c, r in zip(self.certificate, rows)) for x in range(M.n))

    def verify(self, M: ModelMatrix) -> bool:
        f = self.functional(M)
        return all((v == 0) if x in self.states else (v >= 1) for x, v in enumerate(f))

    def to_json(self, M: ModelMatrix) -> dict:
        return {
            "certificate": list(self.certificate),
            "generators": list(self.generators),
            "states": [M.labels[x] for x in sorted(self.states)],
        }


@dataclass(frozen=True)
class GibbsPath:
    base_theta: tuple[float, ...]
    face: ExposedSet
    beta_schedule: tuple[float, ...] = DEFAULT_SCHEDULE

    def __post_init__(self):
        b = self.beta_schedule
        if any(x <= y for x, y in zip(b, b[1:])):
            raise ValueError("beta schedule must be strictly decreasing")


@dataclass(frozen=True)
class ClosureVerdict:
    kind: str  # "interior" | "border" | "outside"
    face: ExposedSet | None = None
    theta: tuple[float, ...] | None = field(default=None)

    @property
    def in_closure(self) -> bool:
        return self.kind != "outside"

    def to_json(self, M: ModelMatrix) -> dict:
        return {
            "face": self.face.to_json(M) if self.face is not None else None,
            "kind": self.kind,
            "theta": list(self.theta) if self.theta is not None else None,
        }


def _certificate(b: Sequence[int], M: ModelMatrix) -> tuple[int, ...]:
    Mc = ensure_constant_row(M)
    coef = solve_in_rowspan(b, Mc.A)
    if coef is None:
        raise ValueError("basis vector is not in the row span of the model; wrong basis for this model?")
    return clear_denominators(coef)


def exposed_sets_from_basis(basis: HilbertBasisSet, M: ModelMatrix) -> list[ExposedSet]:
    """One exposed set per basis element with a nonempty zero set, in basis order."""
    if basis.n != M.n:
        raise ValueError("basis and model have different state spaces")
    out = []
    for j, b in enumerate(basis.vectors):
        S = basis.zero_set(j)
        if S:
            out.append(ExposedSet(S, _certificate(b, M), (j,)))
    return out


def indicator_expansions(basis: HilbertBasisSet, M: ModelMatrix) -> list[tuple[Fraction, ...]]:
    """Coefficients of 1 - b_j over the rows of ``ensure_constant_row(M)``, per basis element.

    For a binary b_j this is the indicator function of its zero set.
    """
    A = ensure_constant_row(M).A
    return [solve_in_rowspan(tuple(1 - v for v in b), A) for b in basis.vectors]


def is_exposed(states: Iterable[int], faces: Sequence[ExposedSet], M: ModelMatrix) -> ExposedSet | None:
    """Decide whether ``states`` is exposed, given the exposed sets of the Hilbert basis.

    An exposed set equals the intersection of the basis zero sets containing
    it; the certificate is the sum of their certificates.  The full state
    space is returned as the improper face with a zero certificate.
    """
    S = frozenset(states)
    if not S:
        raise ValueError("empty set of states")
    width = ensure_constant_row(M).m
    inter = frozenset(range(M.n))
    cert = [0] * width
    gens: list[int] = []
    for F in faces:
        if S <= F.states:
            inter &= F.states
            cert = [a + b for a, b in zip(cert, F.certificate)]
            gens.extend(F.generators)
    if inter != S:
        return None
    return ExposedSet(S, tuple(cert), tuple(sorted(set(gens))))


def _fit_log_linear(p: Density, M: ModelMatrix) -> tuple[np.ndarray, float]:
    """Least-squares fit of log p = c + theta . T on the states; returns (theta, max residual)."""
    X = np.column_stack([np.ones(M.n), np.array(M.A.tolist(), dtype=float).T])
    y = np.log(np.array([float(v) for v in p.values]))
    sol, *_ = np.linalg.lstsq(X, y, rcond=None)
    resid = float(np.max(np.abs(X @ sol - y)))
    return sol[1:], resid


def _in_family(p: Density, M: ModelMatrix) -> tuple[bool, tuple[float, ...]]:
    """Membership of a full-support density in the family of M, plus a canonical parameter."""
    theta, resid = _fit_log_linear(p, M)
    if p.exact:
        ok = check_implicit(p, kernel_basis(M))
    else:
        ok = resid <= LOG_TOL
    return ok, tuple(float(t) for t in theta)


def extended_membership(
    q: Density, M: ModelMatrix, basis: HilbertBasisSet, faces: Sequence[ExposedSet] | None = None
) -> ClosureVerdict:
    """Classify ``q`` as interior, border (with its face) or outside the closure."""
    if q.n != M.n:
        raise ValueError("density and model have different state spaces")
    supp = q.support
    if not supp:
        raise ValueError("density has empty support")
    if len(supp) == M.n:
        ok, theta = _in_family(q, M)
        return ClosureVerdict("interior", None, theta) if ok else ClosureVerdict("outside")
    if faces is None:
        faces = exposed_sets_from_basis(basis, M)
    face = is_exposed(supp, faces, M)
    if face is None:
        return ClosureVerdict("outside")
    trace = trace_model(M, supp)
    ok, theta = _in_family(q.restrict(sorted(supp)), trace)
    return ClosureVerdict("border", face, theta) if ok else ClosureVerdict("outside")


def gibbs_density(M: ModelMatrix, path: GibbsPath, beta: float) -> Density:
    """p_beta proportional to exp(beta * f + theta . T), f the face certificate functional."""
    if not np.isfinite(beta):
        raise ValueError("beta must be finite")
    f = np.array(path.face.functional(M), dtype=float)
    s = beta * f + np.array(M.A.tolist(), dtype=float).T @ np.asarray(path.base_theta, dtype=float)
    mu = np.array(M.mu, dtype=float)
    w = np.exp(s - s.max()) * mu
    vals = w / w.sum() / mu
    return Density(M.statespace, tuple(float(v) for v in vals), False)


def limit_of_path(M: ModelMatrix, path: GibbsPath, tol: float = 1e-10, full_output: bool = False):
    """Follow the Gibbs path down the beta schedule until successive densities agree within ``tol``.

    Off-face states whose mass is below ``tol`` are then set to zero and the
    result renormalized.  With ``full_output`` returns ``(density, beta, gap)``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if path.face.improper:
        p = density_theta(M, path.base_theta)
        return (p, 0.0, 0.0) if full_output else p
    prev = None
    gap = float("inf")
    beta = path.beta_schedule[0]
    for beta in path.beta_schedule:
        p = gibbs_density(M, path, beta)
        if prev is not None:
            gap = total_variation(p, prev)
            if gap < tol:
                break
        prev = p
    else:
        raise ConvergenceError(beta, gap)
    mass = p.probabilities()
    vals = [0.0 if (x not in path.face.states and mass[x] < tol) else v for x, v in enumerate(p.values)]
    out = Density.from_values(M.statespace, vals, normalize=True)
    return (out, beta, gap) if full_output else out


def b_model_density(basis: HilbertBasisSet, mu: Sequence[int] | StateSpace, zeta: Sequence) -> Density:
    """Monomial density with the Hilbert basis vectors as exponent rows."""
    if len(zeta) != len(basis):
        raise ValueError(f"expected {len(basis)} parameters, got {len(zeta)}")
    return density_zeta(list(basis.vectors), mu, zeta)


def faces_to_json(faces: Sequence[ExposedSet], M: ModelMatrix) -> dict:
    return {"faces": [F.to_json(M) for F in faces]}
