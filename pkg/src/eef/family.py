"""Densities of the family in canonical and monomial parameterizations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

from .exactmath import IntMatrix, as_intmatrix
from .modelspec import LatticeBasis, ModelMatrix, StateSpace

FLOAT_NORM_TOL = 1e-12


class DegenerateDensityError(ValueError):
    """Every monomial vanishes, so no probability is defined."""


@dataclass(frozen=True)
class Density:
    """Density with respect to the reference measure of ``statespace``.

    ``values`` are Fractions when ``exact`` is true, floats otherwise.
    """

    statespace: StateSpace
    values: tuple
    exact: bool

    def __post_init__(self):
        if len(self.values) != self.statespace.n:
            raise ValueError("density length does not match the state space")
        if any(v < 0 for v in self.values):
            raise ValueError("density values must be nonnegative")

    @classmethod
    def from_values(cls, statespace: StateSpace, values: Iterable, normalize: bool = False) -> Density:
        vals = list(values)
        exact = all(isinstance(v, (int, Rational)) for v in vals)
        vals = [Fraction(v) for v in vals] if exact else [float(v) for v in vals]
        if normalize:
            total = sum(v * w for v, w in zip(vals, statespace.mu))
            if total == 0:
                raise DegenerateDensityError("all values are zero")
            vals = [v / total for v in vals]
        return cls(statespace, tuple(vals), exact)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(x for x, v in enumerate(self.values) if v > 0)

    def mass(self):
        return sum(v * w for v, w in zip(self.values, self.statespace.mu))

    def is_normalized(self) -> bool:
        if self.exact:
            return self.mass() == 1
        return abs(self.mass() - 1.0) <= FLOAT_NORM_TOL

    def probabilities(self) -> np.ndarray:
        """Point masses ``p(x) mu(x)`` as floats."""
        return np.array([float(v) * w for v, w in zip(self.values, self.statespace.mu)])

    def restrict(self, states: Sequence[int]) -> Density:
        states = sorted(states)
        return Density.from_values(self.statespace.restrict(states), [self.values[i] for i in states], normalize=True)

    def to_float(self) -> Density:
        return Density(self.statespace, tuple(float(v) for v in self.values), False)


def total_variation(p: Density, q: Density) -> float:
    return 0.5 * float(np.abs(p.probabilities() - q.probabilities()).sum())


def _exponents(M: ModelMatrix, theta: Sequence[float]) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (M.m,):
        raise ValueError(f"expected {M.m} canonical parameters, got {theta.shape[0] if theta.ndim else 0}")
    if not np.all(np.isfinite(theta)):
        raise ValueError("canonical parameters must be finite")
    return np.array(M.A.tolist(), dtype=float).T @ theta


def _log_sum_exp(s: np.ndarray, mu: Sequence[int]) -> float:
    top = float(np.max(s))
    return top + math.log(float(np.sum(np.exp(s - top) * np.asarray(mu, dtype=float))))


def log_partition(M: ModelMatrix, theta: Sequence[float]) -> float:
    """log sum_x exp(theta . T(x)) mu(x), with max-subtraction."""
    return _log_sum_exp(_exponents(M, theta), M.mu)


def density_theta(M: ModelMatrix, theta: Sequence[float]) -> Density:
    s = _exponents(M, theta)
    return Density(M.statespace, tuple(float(v) for v in np.exp(s - _log_sum_exp(s, M.mu))), False)


def monomial(zeta: Sequence, exponents: Sequence[int]):
    """prod_j zeta_j^e_j over the j with e_j > 0 (so 0^0 never arises)."""
    out = 1
    for z, e in zip(zeta, exponents):
        if e > 0:
            out *= z**e
    return out


def density_zeta(mono, mu: Sequence[int] | StateSpace, zeta: Sequence) -> Density:
    """Monomial density p(x) proportional to zeta^{mono(x)}, normalized against ``mu``.

    ``mu`` may be a :class:`StateSpace`, in which case its labels are kept.
    Exact when every ``zeta_j`` is rational.
    """
    mono = as_intmatrix(mono)
    if len(zeta) != mono.nrows:
        raise ValueError(f"expected {mono.nrows} monomial parameters, got {len(zeta)}")
    if any(v < 0 for r in mono.rows() for v in r):
        raise ValueError("monomial exponents must be nonnegative")
    if any(z < 0 for z in zeta):
        raise ValueError("monomial parameters must be nonnegative")
    exact = all(isinstance(z, (int, Rational)) for z in zeta)
    zeta = [Fraction(z) for z in zeta] if exact else [float(z) for z in zeta]
    raw = [monomial(zeta, mono.col(x)) for x in range(mono.ncols)]
    if not any(raw):
        raise DegenerateDensityError("every monomial vanishes; no probability is defined")
    if not isinstance(mu, StateSpace):
        mu = StateSpace(tuple(f"x{i + 1}" for i in range(mono.ncols)), tuple(mu))
    if mu.n != mono.ncols:
        raise ValueError("reference measure length does not match the monomial matrix")
    return Density.from_values(mu, raw, normalize=True)


def mean_parameters(M: ModelMatrix, p: Density) -> tuple:
    """eta_j = sum_x T_j(x) p(x) mu(x); exact for exact densities."""
    if p.n != M.n:
        raise ValueError("density and model have different state spaces")
    w = [v * mu for v, mu in zip(p.values, M.mu)]
    return tuple(sum(t * wx for t, wx in zip(row, w)) for row in M.A.rows())


def check_implicit(p: Density, kernel: LatticeBasis) -> bool:
    """Exact binomial equations prod p^{k+} == prod p^{k-} for every kernel direction k.

    The exponents are the kernel directions of the unweighted matrix (kernel
    columns times mu), which is what makes the equations hold on the family.
    """
    if not p.exact:
        raise ValueError("binomial equations are checked on exact densities only")
    for k in kernel.directions():
        lhs = monomial(p.values, [max(e, 0) for e in k])
        rhs = monomial(p.values, [max(-e, 0) for e in k])
        if lhs != rhs:
            return False
    return True


def trace_model(M: ModelMatrix, states: Iterable[int]) -> ModelMatrix:
    """Restriction of the model to the states in ``states`` (conditioning on that event)."""
    S = sorted(set(states))
    if not S:
        raise ValueError("trace on an empty set of states")
    if S[0] < 0 or S[-1] >= M.n:
        raise ValueError("state index out of range")
    A = IntMatrix.from_rows([[r[x] for x in S] for r in M.A.rows()], len(S))
    return ModelMatrix(M.statespace.restrict(S), A, M.row_names)
