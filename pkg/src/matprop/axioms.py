"""The axiom table behind the `axioms` command.

Three groups of checks, all exact:

  * the ten wire laws as matrix identities, built from generator matrices
    and matrix operations only;
  * the four scalar-action laws, evaluated on sampled scalar pairs;
  * the per-rig extras (idempotent collapse, char-two collapse, the
    negation/antipode identities) where the rig's flags enable them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import matrices
from .finite import antipode_checks, special_check
from .matrices import compose, generator_matrix, identity, symmetry, tensor
from .rigs import ADDITIVE_INVERSES, CHAR_TWO, IDEMPOTENT_ADD, Rig
from .semantics import eval_term
from .terms import DELTA, MU, Par, Scalar, Seq, seq


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    holds: bool


def bimonoid_matrix_checks(rig: Rig) -> list[AxiomCheck]:
    """The ten laws of the merge/copy structure on one wire, as matrix
    identities over the given rig."""
    mu = generator_matrix("mu", rig)
    eta = generator_matrix("eta", rig)
    delta = generator_matrix("delta", rig)
    eps = generator_matrix("eps", rig)
    i1 = identity(rig, 1)
    tau = symmetry(rig, 1, 1)

    middle = tensor(tensor(i1, tau), i1)
    checks = [
        ("assoc", compose(mu, tensor(i1, mu)), compose(mu, tensor(mu, i1))),
        ("unit", compose(mu, tensor(eta, i1)), i1),
        ("comm", compose(mu, tau), mu),
        ("coassoc", compose(tensor(i1, delta), delta), compose(tensor(delta, i1), delta)),
        ("counit", compose(tensor(eps, i1), delta), i1),
        ("cocomm", compose(tau, delta), delta),
        (
            "mult-compat",
            compose(delta, mu),
            compose(tensor(mu, mu), compose(middle, tensor(delta, delta))),
        ),
        ("unit-compat", compose(delta, eta), tensor(eta, eta)),
        ("counit-compat", compose(eps, mu), tensor(eps, eps)),
        ("zero-compat", compose(eps, eta), identity(rig, 0)),
    ]
    return [AxiomCheck(name, lhs == rhs) for name, lhs, rhs in checks]


def scalar_action_checks(rig: Rig, samples: int = 100, seed: int = 0) -> list[AxiomCheck]:
    """The four laws making scalars act like the rig itself, under
    evaluation, on sampled scalar pairs."""
    rng = random.Random(seed)
    one = rig.one_element()
    zero = rig.zero_element()

    sum_ok = prod_ok = True
    for _ in range(samples):
        r = rig.element(rig.sample(rng))
        s = rig.element(rig.sample(rng))
        lhs = eval_term(seq(DELTA, Par(Scalar(r), Scalar(s)), MU), rig)
        if lhs != eval_term(Scalar(r + s), rig):
            sum_ok = False
        if eval_term(Seq(Scalar(r), Scalar(s)), rig) != eval_term(Scalar(r * s), rig):
            prod_ok = False
    one_ok = eval_term(Scalar(one), rig) == identity(rig, 1)
    zero_ok = eval_term(Scalar(zero), rig) == compose(
        generator_matrix("eta", rig), generator_matrix("eps", rig)
    )
    return [
        AxiomCheck("scalar-sum", sum_ok),
        AxiomCheck("scalar-product", prod_ok),
        AxiomCheck("scalar-one", one_ok),
        AxiomCheck("scalar-zero", zero_ok),
    ]


def flag_checks(rig: Rig) -> list[AxiomCheck]:
    out = []
    if IDEMPOTENT_ADD in rig.flags:
        out.append(AxiomCheck("special", special_check(rig)))
    if CHAR_TWO in rig.flags:
        collapsed = eval_term(Seq(DELTA, MU), rig) == matrices.zeros(rig, 1, 1)
        out.append(AxiomCheck("char-two", collapsed))
    if ADDITIVE_INVERSES in rig.flags:
        out.append(AxiomCheck("antipode", antipode_checks(rig).ok))
    return out


def run_axiom_suite(rig: Rig, samples: int = 100, seed: int = 0) -> list[AxiomCheck]:
    return (
        bimonoid_matrix_checks(rig)
        + scalar_action_checks(rig, samples, seed)
        + flag_checks(rig)
    )
