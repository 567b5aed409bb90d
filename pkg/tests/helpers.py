"""Shared generators and independent oracles for the test suite.

The oracles here deliberately avoid the code paths they are used to
check: matrix products are summed with a bare triple loop over
RigElement arithmetic, tensor placement is recomputed from index
arithmetic, and permutation matrices are placed entry by entry.
"""

from __future__ import annotations

from matprop import (
    BOOL, F2, INT, NAT, NNRAT, RAT, RATFUNC,
    DELTA, EPS, ETA, MU, SWAP,
    Id, Matrix, Par, Relation, Scalar, Seq, Span, Term,
    arity_of, decompose, from_rows,
)

ALL_RIGS = (BOOL, NAT, INT, F2, RAT, NNRAT, RATFUNC)


def random_element(rng, rig):
    return rig.element(rig.sample(rng))


def random_matrix(rng, rig, dom=None, cod=None, max_side=4) -> Matrix:
    if dom is None:
        dom = rng.randint(0, max_side)
    if cod is None:
        cod = rng.randint(0, max_side)
    return Matrix(rig, dom, cod, tuple(rig.sample(rng) for _ in range(dom * cod)))


# ---------------------------------------------------------------------------
# oracles


def naive_compose(g: Matrix, f: Matrix) -> Matrix:
    """Sum-of-products by a bare triple loop over wrapped elements."""
    assert f.cod == g.dom and f.rig is g.rig
    rows = []
    for i in range(g.cod):
        row = []
        for j in range(f.dom):
            acc = f.rig.zero_element()
            for k in range(g.dom):
                acc = acc + g.entry(i, k) * f.entry(k, j)
            row.append(acc)
        rows.append(row)
    return from_rows(f.rig, rows, dom=f.dom)


def naive_tensor(f: Matrix, g: Matrix) -> Matrix:
    """Block placement recomputed from scratch with index arithmetic."""
    dom, cod = f.dom + g.dom, f.cod + g.cod
    rig = f.rig
    rows = []
    for i in range(cod):
        row = []
        for j in range(dom):
            if i < f.cod and j < f.dom:
                row.append(f.entry(i, j))
            elif i >= f.cod and j >= f.dom:
                row.append(g.entry(i - f.cod, j - f.dom))
            else:
                row.append(rig.zero_element())
        rows.append(row)
    return from_rows(rig, rows, dom=dom)


def permutation_matrix(rig, p) -> Matrix:
    """The matrix sending input wire j to output wire p[j]."""
    k = len(p)
    rows = [[rig.zero] * k for _ in range(k)]
    for j, i in enumerate(p):
        rows[i][j] = rig.one
    return from_rows(rig, rows, dom=k)


def poly_convolution(a, b):
    """Coefficient convolution, the reference for polynomial products."""
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


# ---------------------------------------------------------------------------
# random structured values


def random_relation(rng, max_side=5) -> Relation:
    m, n = rng.randint(0, max_side), rng.randint(0, max_side)
    pairs = set()
    for j in range(m):
        for i in range(n):
            if rng.random() < 0.4:
                pairs.add((j, i))
    return Relation(m, n, frozenset(pairs))


def random_span(rng, max_side=5, dom=None, cod=None, apex=None) -> Span:
    if dom is None:
        dom = rng.randint(0, max_side)
    if cod is None:
        cod = rng.randint(0, max_side)
    if apex is None:
        apex = rng.randint(0, max_side)
    if dom == 0 or cod == 0:
        apex = 0
    left = tuple(rng.randrange(dom) for _ in range(apex))
    right = tuple(rng.randrange(cod) for _ in range(apex))
    return Span(dom, cod, left, right)


# ---------------------------------------------------------------------------
# random well-typed terms


def _random_row(rng, rig, dom) -> Term:
    """Tile dom input wires (plus possibly some fresh ones) with atoms.

    Wire counts are kept from snowballing: once a row is wide, copies stop
    being offered, so deep terms stay within recursion-friendly sizes.
    """
    parts = []
    remaining = dom
    wide = dom > 6
    while remaining > 0:
        roll = rng.random()
        if wide:
            if remaining >= 2 and roll < 0.55:
                parts.append(MU)
                remaining -= 2
            elif roll < 0.85:
                parts.append(EPS)
                remaining -= 1
            else:
                parts.append(Id(1))
                remaining -= 1
            continue
        if remaining >= 2 and roll < 0.25:
            parts.append(MU if rng.random() < 0.5 else SWAP)
            remaining -= 2
        elif roll < 0.45:
            parts.append(DELTA)
            remaining -= 1
        elif roll < 0.6:
            parts.append(EPS)
            remaining -= 1
        elif roll < 0.75:
            parts.append(Scalar(random_element(rng, rig)))
            remaining -= 1
        else:
            parts.append(Id(1))
            remaining -= 1
    if rng.random() < 0.2 and not wide:
        parts.insert(rng.randint(0, len(parts)), ETA)
    if not parts:
        return ETA if rng.random() < 0.5 else Id(0)
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Par(p, out)
    return out


def random_term(rng, rig, dom=None, depth=4) -> Term:
    """A well-typed term with the given number of inputs."""
    if dom is None:
        dom = rng.randint(0, 4)
    if depth <= 0 or dom > 12:
        return _random_row(rng, rig, dom)
    roll = rng.random()
    if roll < 0.45:
        f = random_term(rng, rig, dom, depth - 1)
        g = random_term(rng, rig, arity_of(f).cod, depth - 1)
        return Seq(f, g)
    if roll < 0.7 and dom >= 1:
        k = rng.randint(0, dom)
        return Par(
            random_term(rng, rig, k, depth - 1),
            random_term(rng, rig, dom - k, depth - 1),
        )
    return _random_row(rng, rig, dom)


def random_term_with_arity(rng, rig, dom, cod, depth=3) -> Term:
    """A well-typed term with both endpoints fixed.  Falls back on the
    canonical term of a random matrix for small shapes, and on a
    merge-scale-copy funnel for large ones (decomposing a large matrix
    would produce an enormous swap network)."""
    for _ in range(40):
        t = random_term(rng, rig, dom, depth)
        if arity_of(t).cod == cod:
            return t
    if dom * cod <= 30:
        return decompose(random_matrix(rng, rig, dom=dom, cod=cod))
    from matprop import Scalar, mu_n, delta_n, seq

    return seq(mu_n(dom), Scalar(random_element(rng, rig)), delta_n(cod))
