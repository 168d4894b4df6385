"""Exponential families on a finite state space, described by an integer model matrix.

The model matrix is stored unweighted (entry ``(j, x)`` is ``T_j(x)``); the
reference measure enters only where orthogonality is defined, i.e. in
:func:`kernel_basis`.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Sequence

from .exactmath import IntMatrix, RatVector, integer_kernel, rational_nullspace, rref, solve_in_rowspan


@dataclass(frozen=True)
class StateSpace:
    labels: tuple[str, ...]
    mu: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.labels:
            raise ValueError("state space must have at least one state")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("state labels must be distinct")
        if not self.mu:
            object.__setattr__(self, "mu", (1,) * len(self.labels))
        if len(self.mu) != len(self.labels):
            raise ValueError("reference measure length does not match the number of states")
        if any(int(m) != m or m < 1 for m in self.mu):
            raise ValueError("reference measure must be positive integers")

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def restrict(self, states: Sequence[int]) -> StateSpace:
        return StateSpace(tuple(self.labels[i] for i in states), tuple(self.mu[i] for i in states))


@dataclass(frozen=True)
class ModelMatrix:
    statespace: StateSpace
    A: IntMatrix
    row_names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.A.ncols != self.statespace.n:
            raise ValueError(f"model matrix has {self.A.ncols} columns for {self.statespace.n} states")
        if not self.row_names:
            object.__setattr__(self, "row_names", tuple(f"T{j + 1}" for j in range(self.A.nrows)))
        if len(self.row_names) != self.A.nrows:
            raise ValueError("row name count does not match the number of rows")
        if len(set(self.row_names)) != len(self.row_names):
            raise ValueError("row names must be distinct")

    @classmethod
    def from_rows(cls, rows, labels=None, mu=None, row_names=None) -> ModelMatrix:
        A = IntMatrix.from_rows(rows)
        labels = tuple(labels) if labels is not None else tuple(f"x{i + 1}" for i in range(A.ncols))
        return cls(StateSpace(labels, tuple(mu) if mu is not None else ()), A, tuple(row_names or ()))

    @property
    def m(self) -> int:
        return self.A.nrows

    @property
    def n(self) -> int:
        return self.statespace.n

    @property
    def mu(self) -> tuple[int, ...]:
        return self.statespace.mu

    @property
    def labels(self) -> tuple[str, ...]:
        return self.statespace.labels

    def column(self, x: int) -> tuple[int, ...]:
        return self.A.col(x)

    def weighted(self) -> IntMatrix:
        """Constant-adjoined, mu-weighted matrix ``[T_j(x) mu(x)]`` with ``T_0 = 1``."""
        mu = self.mu
        rows = [mu] + [tuple(t * w for t, w in zip(r, mu)) for r in self.A.rows()]
        return IntMatrix.from_rows(rows, self.n)


@dataclass(frozen=True)
class LatticeBasis:
    """Integer kernel basis, stored as the columns of ``K``."""

    K: IntMatrix
    mu: tuple[int, ...]
    weighted: bool = True

    @property
    def n(self) -> int:
        return self.K.nrows

    @property
    def rank(self) -> int:
        return self.K.ncols

    def columns(self) -> list[tuple[int, ...]]:
        return self.K.columns()

    def directions(self) -> list[tuple[int, ...]]:
        """Kernel directions of the unweighted constant-adjoined matrix.

        For a weighted basis column ``w`` this is ``w * mu``; these are the
        exponents in the binomial equations and the vectors the B-model rows
        must be orthogonal to.
        """
        if not self.weighted:
            return self.columns()
        return [tuple(a * b for a, b in zip(w, self.mu)) for w in self.columns()]


def _ones_in_rowspan(A: IntMatrix) -> bool:
    return A.nrows > 0 and solve_in_rowspan((1,) * A.ncols, A) is not None


def ensure_constant_row(M: ModelMatrix) -> ModelMatrix:
    """Prepend an all-ones row named ``I`` unless the constant is already in the row span."""
    if _ones_in_rowspan(M.A):
        return M
    name = "I"
    while name in M.row_names:
        name += "'"
    A = IntMatrix.from_rows([(1,) * M.n] + M.A.rows(), M.n)
    return ModelMatrix(M.statespace, A, (name,) + M.row_names)


def nonnegative_shift(M: ModelMatrix) -> ModelMatrix:
    """Shift each row with negative entries by a multiple of the constant so it becomes >= 0."""
    if not _ones_in_rowspan(M.A):
        raise ValueError("constant vector is not in the row span; shifting would change the model")
    rows = []
    for r in M.A.rows():
        lo = min(r)
        rows.append(tuple(v - lo for v in r) if lo < 0 else r)
    return ModelMatrix(M.statespace, IntMatrix.from_rows(rows, M.n), M.row_names)


def kernel_basis(M: ModelMatrix) -> LatticeBasis:
    return LatticeBasis(integer_kernel(M.weighted()), M.mu, weighted=True)


def confounding_space(M: ModelMatrix) -> list[RatVector]:
    """Reduced echelon basis of {c : c^T A is constant over the states}."""
    m, n = M.m, M.n
    if m == 0:
        return []
    # unknowns (c_1..c_m, alpha); one equation per state: sum_j c_j A_j(x) - alpha = 0
    eqs = [list(M.column(x)) + [-1] for x in range(n)]
    null = rational_nullspace(eqs, m + 1)
    vecs = [v[:m] for v in null]
    red, _ = rref(vecs) if vecs else ([], [])
    return [tuple(r) for r in red]


# --- model file format -------------------------------------------------------

_HEADER = re.compile(r"^#\s*(rownames|labels|mu)\s*:\s*(.*)$", re.IGNORECASE)


class ModelFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _split(s: str) -> list[str]:
    return [t for t in re.split(r"[,\s]+", s.strip()) if t]


def parse_model(text: str) -> ModelMatrix:
    """Parse the plain-text model format.

    First non-comment line is ``m n``; then ``m`` lines of ``n`` integers.
    Optional ``# rownames:``, ``# labels:`` and ``# mu:`` headers may appear
    anywhere; other ``#`` lines are ignored.
    """
    headers: dict[str, tuple[list[str], int]] = {}
    data: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            mh = _HEADER.match(line)
            if mh:
                headers[mh.group(1).lower()] = (_split(mh.group(2)), lineno)
            continue
        data.append((lineno, _split(line)))
    if not data:
        raise ModelFormatError("missing 'm n' dimension line")
    lineno, dims = data[0]
    try:
        m, n = (int(t) for t in dims)
    except ValueError:
        raise ModelFormatError("expected two integers 'm n'", lineno) from None
    if m < 1 or n < 1:
        raise ModelFormatError("dimensions must be positive", lineno)
    rows = data[1:]
    if len(rows) != m:
        raise ModelFormatError(f"expected {m} matrix rows, found {len(rows)}", rows[-1][0] if rows else lineno)
    A = []
    for ln, toks in rows:
        if len(toks) != n:
            raise ModelFormatError(f"expected {n} entries, found {len(toks)}", ln)
        try:
            A.append([int(t) for t in toks])
        except ValueError:
            raise ModelFormatError("matrix entries must be integers", ln) from None

    def header(key, count, conv=str):
        if key not in headers:
            return None
        vals, ln = headers[key]
        if len(vals) != count:
            raise ModelFormatError(f"'{key}' header has {len(vals)} entries, expected {count}", ln)
        try:
            return [conv(v) for v in vals]
        except ValueError:
            raise ModelFormatError(f"bad value in '{key}' header", ln) from None

    labels = header("labels", n)
    row_names = header("rownames", m)
    mu = header("mu", n, int)
    try:
        return ModelMatrix.from_rows(A, labels=labels, mu=mu, row_names=row_names)
    except ValueError as exc:
        raise ModelFormatError(str(exc)) from None


def format_model(M: ModelMatrix) -> str:
    lines = [
        f"# rownames: {' '.join(M.row_names)}",
        f"# labels: {' '.join(M.labels)}",
    ]
    if any(w != 1 for w in M.mu):
        lines.append(f"# mu: {' '.join(map(str, M.mu))}")
    lines.append(f"{M.m} {M.n}")
    lines.extend(" ".join(map(str, r)) for r in M.A.rows())
    return "\n".join(lines) + "\n"


# --- worked examples ---------------------------------------------------------


def four_cycle() -> ModelMatrix:
    """Binary 4-cycle D-C-B-A-D on {+1,-1}^4, states ordered as (D, C, B, A) with + first."""
    states = list(itertools.product((1, -1), repeat=4))
    labels = tuple("".join("+" if s > 0 else "-" for s in st) for st in states)
    D, C, B, A = ([s[i] for s in states] for i in range(4))

    def prod(u, v):
        return [a * b for a, b in zip(u, v)]

    rows = [[1] * 16, D, C, B, A, prod(B, A), prod(C, B), prod(D, C), prod(D, A)]
    return ModelMatrix.from_rows(rows, labels=labels, row_names=("I", "D", "C", "B", "A", "BA", "CB", "DC", "DA"))


MARKOV_ROWS = ("1-X0", "X0", "N00", "N01", "N10", "N11")


def transition_counts(traj: Sequence[int]) -> dict[tuple[int, int], int]:
    counts = {(a, b): 0 for a in (0, 1) for b in (0, 1)}
    for a, b in zip(traj, traj[1:]):
        counts[(a, b)] += 1
    return counts


def markov_chain(steps: int) -> ModelMatrix:
    """Binary chain X_0..X_n: rows (1-X0, X0, N00, N01, N10, N11) over all 2^(n+1) trajectories."""
    if not 1 <= steps <= 12:
        raise ValueError("steps must be between 1 and 12")
    trajs = list(itertools.product((0, 1), repeat=steps + 1))
    cols = []
    for t in trajs:
        N = transition_counts(t)
        cols.append((1 - t[0], t[0], N[0, 0], N[0, 1], N[1, 0], N[1, 1]))
    labels = tuple("".join(map(str, t)) for t in trajs)
    A = IntMatrix.from_columns(cols, 6)
    return ModelMatrix(StateSpace(labels), A, MARKOV_ROWS)


def independence_2x2() -> ModelMatrix:
    """Two binary variables: constant, first-variable indicator, second-variable indicator."""
    return ModelMatrix.from_rows(
        [[1, 1, 1, 1], [0, 0, 1, 1], [0, 1, 0, 1]],
        labels=("00", "01", "10", "11"),
        row_names=("I", "X1", "X2"),
    )
