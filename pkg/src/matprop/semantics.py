"""Evaluation of terms to matrices and the canonical inverse direction.

`eval_term` is the strict monoidal evaluation: Seq goes to matrix product,
Par to block diagonal, generators to their matrices, and a scalar literal
to the 1x1 matrix holding it.  `decompose` rebuilds a canonical term from
any matrix, and since two terms denote the same morphism exactly when
their matrices coincide, `equal_terms` decides diagram equivalence by
evaluating both sides.  `normalize` is decompose-after-eval.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import matrices
from .errors import NotComparableError, RigMismatchError
from .matrices import Matrix
from .rigs import Rig, RigElement, RigHom
from .terms import (
    Delta, Eps, Eta, Id, Mu, Par, Scalar, Seq, Swap, Term,
    arity_of, delta_n, mu_n, par, perm_term, seq, seq_parts,
)


@dataclass(frozen=True)
class EvalContext:
    """Where to evaluate: a rig, plus an optional map taking the term's
    scalar literals into it (identity when absent)."""

    rig: Rig
    scalar_action: RigHom | None = None

    def scalar(self, v: RigElement) -> RigElement:
        if self.scalar_action is not None:
            return self.scalar_action(v)
        if v.rig is not self.rig:
            raise RigMismatchError(
                f"scalar from {v.rig.name} evaluated over {self.rig.name} "
                "without a scalar action"
            )
        return v


def _as_context(ctx) -> EvalContext:
    if isinstance(ctx, EvalContext):
        return ctx
    if isinstance(ctx, Rig):
        return EvalContext(ctx)
    raise TypeError(f"expected EvalContext or Rig, got {type(ctx).__name__}")


def eval_term(t: Term, ctx) -> Matrix:
    """The matrix denoted by t over the context's rig."""
    ctx = _as_context(ctx)
    arity_of(t)  # typecheck up front so errors carry subterm paths
    return _ev(t, ctx)


def _ev(t: Term, ctx: EvalContext) -> Matrix:
    rig = ctx.rig
    match t:
        case Seq(_, _):
            # fold the chain left to right so intermediates stay thin
            parts = list(seq_parts(t))
            out = _ev(parts[0], ctx)
            for p in parts[1:]:
                out = matrices.compose(_ev(p, ctx), out)
            return out
        case Par(f, g):
            return matrices.tensor(_ev(f, ctx), _ev(g, ctx))
        case Id(n):
            return matrices.identity(rig, n)
        case Swap():
            return matrices.symmetry(rig, 1, 1)
        case Mu():
            return matrices.generator_matrix("mu", rig)
        case Eta():
            return matrices.generator_matrix("eta", rig)
        case Delta():
            return matrices.generator_matrix("delta", rig)
        case Eps():
            return matrices.generator_matrix("eps", rig)
        case Scalar(v):
            if not isinstance(v, RigElement):
                raise TypeError(f"cannot evaluate symbolic scalar {v!r}")
            e = ctx.scalar(v)
            return Matrix(rig, 1, 1, (e.value,))
    raise TypeError(f"not a term: {t!r}")


def decompose(M: Matrix) -> Term:
    """The canonical split-scale-permute-merge term denoting M.

    Each input wire j is copied once per output, copy (j, i) passes
    through scalar M(i, j), a fixed riffle routes copy (j, i) to position
    (i, j), and each output wire i merges its dom-many copies.  Scalars
    are emitted even when 0 or 1 so the shape is uniform.
    """
    m, n = M.dom, M.cod
    rig = M.rig
    splits = par(*[delta_n(n) for _ in range(m)])
    scales = par(*[
        Scalar(RigElement(rig, M.entries[i * m + j]))
        for j in range(m)
        for i in range(n)
    ])
    route = perm_term(tuple(i * m + j for j in range(m) for i in range(n)))
    merges = par(*[mu_n(m) for _ in range(n)])
    stages = [s for s in (splits, scales, route, merges) if not isinstance(s, Id)]
    if not stages:
        return Id(m)
    return seq(*stages)


def equal_terms(s: Term, t: Term, ctx) -> bool:
    """Whether s and t denote the same matrix; sound and complete."""
    ctx = _as_context(ctx)
    sa, ta = arity_of(s), arity_of(t)
    if sa != ta:
        raise NotComparableError(
            f"arities differ: {sa.dom}->{sa.cod} vs {ta.dom}->{ta.cod}"
        )
    return eval_term(s, ctx) == eval_term(t, ctx)


def normalize(t: Term, ctx) -> Term:
    """The canonical term with the same denotation as t; idempotent."""
    return decompose(eval_term(t, _as_context(ctx)))
