"""Field-size thresholds that rule out vanishing minors and cycles violating
the full rank condition, and certificates tying a descriptor to them.

Every threshold ``t`` is an integer meant as the strict condition ``q > t``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from sympy import isprime, nextprime

from .construction import CodeDescriptor, mu as code_mu
from .dts import cyclefree_conditions, even_cycle_f_nonzero, no_difference_divisible, validate, within_set_valid


def _window_rows(n: int, k: int, mu: int) -> int:
    if n <= k:
        raise ValueError("need n > k")
    if mu < 0:
        raise ValueError("mu must be non-negative")
    return (mu + 1) * (n - k)


def q_bound_2x2(n: int, k: int, mu: int) -> int:
    return _window_rows(n, k, mu) * (k - 1) + 1


def n_bound_3x3(n: int, k: int, mu: int) -> tuple[int, int]:
    """(bound on the extension degree N for all 3x3 minors, q bound for 6-cycles)."""
    W = _window_rows(n, k, mu)
    return W * (k - 1), 2 * (k - 1) * (W - 1) + 1


def q_bound_odd_cycle(n: int, k: int, mu: int, ell: int) -> int:
    if ell % 2 == 0:
        raise ValueError("ell must be odd")
    if ell < 3:
        raise ValueError("ell must be at least 3")
    W = _window_rows(n, k, mu)
    return 2 * W * (ell - 1) * (k - 1) - 2 * (k - 1) * (ell - 1) + 1


def q_bound_even_cycle(n: int, k: int, mu: int, ell: int) -> int:
    """For ``k = 1`` the value drops below 2, i.e. no constraint on ``q``."""
    if ell % 2:
        raise ValueError("ell must be even")
    if ell < 2:
        raise ValueError("ell must be at least 2")
    W = _window_rows(n, k, mu)
    return (W - 1) * ((k - 1) * ell // 2 + (k - 2) * (ell - 2) // 2) + 1


@dataclass(frozen=True)
class PBound:
    P: int
    threshold: int  # q > threshold  <=>  q > exact
    exact: Fraction


def p_construction_threshold(n: int, k: int, mu: int, ell: int, P: int) -> Fraction:
    W = _window_rows(n, k, mu)
    return k * Fraction(P**W) * Fraction(P ** (2 * ell) - 1, P ** (2 * ell) - P ** (2 * ell - 1)) + 1


def p_construction_bound(n: int, k: int, mu: int, ell: int) -> PBound:
    """Smallest prime ``P > ell*k`` and the matching field-size threshold."""
    if ell < 2:
        raise ValueError("ell must be at least 2")
    P = int(nextprime(ell * k))
    exact = p_construction_threshold(n, k, mu, ell, P)
    return PBound(P, exact.numerator // exact.denominator, exact)


def max_cycle_rows(n: int, k: int, mu: int) -> int:
    """Largest ``ell`` a ``2*ell``-cycle can have inside the window."""
    return min((mu + 1) * (n - k), (mu + 1) * k)


# ---------------------------------------------------------------------------
# Certificates


@dataclass
class BoundEntry:
    theorem: str
    quantity: str  # "q" or "N"
    threshold: int
    side_conditions: list[tuple[str, bool]]
    satisfied: bool
    guarantee: str
    inputs: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "quantity": self.quantity,
            "threshold": self.threshold,
            "inputs": self.inputs,
            "side_conditions": [{"condition": c, "holds": ok} for c, ok in self.side_conditions],
            "satisfied": self.satisfied,
            "guarantee": self.guarantee,
        }


@dataclass
class BoundReport:
    n: int
    k: int
    mu: int
    q: int
    p: int
    N: int
    variant: str
    entries: list[BoundEntry]

    def entry(self, theorem: str) -> BoundEntry:
        for e in self.entries:
            if e.theorem == theorem:
                return e
        raise KeyError(theorem)

    def satisfied(self, theorem: str) -> bool:
        return self.entry(theorem).satisfied

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "mu": self.mu,
            "q": self.q,
            "p": self.p,
            "N": self.N,
            "variant": self.variant,
            "entries": [e.to_dict() for e in self.entries],
        }


def _entry(theorem, quantity, threshold, value, sides, guarantee, inputs) -> BoundEntry:
    ok = value > threshold and all(h for _, h in sides)
    return BoundEntry(theorem, quantity, threshold, sides, ok, guarantee, inputs)


def certify(desc: CodeDescriptor, ell_cap: int = 8) -> BoundReport:
    """Evaluate every applicable threshold against the descriptor's field.

    Even-length cycle entries need the exponent condition on the set
    collection; it is checked on realizable cycles for ``ell <= ell_cap`` and
    reported as failing beyond that.
    """
    n, k, F, dts = desc.n, desc.k, desc.field, desc.dts
    m = code_mu(dts, n, k)
    q, p, N = F.q, F.p, F.N
    W = (m + 1) * (n - k)
    alpha = ("alpha variant", desc.variant == "alpha")
    support_ok = (
        f"within-set differences distinct unless {n - k} does not divide the gap",
        within_set_valid(dts, n - k),
    )
    base_inputs = {"n": n, "k": k, "mu": m}
    entries: list[BoundEntry] = []

    t2 = q_bound_2x2(n, k, m)
    entries.append(
        _entry(
            "minors_2x2", "q", t2, q, [alpha, support_ok],
            "every 2x2 minor of the window with four nonzero entries is nonzero; no 4-cycle violates the FRC",
            base_inputs,
        )
    )
    nb, t6 = n_bound_3x3(n, k, m)
    entries.append(
        _entry(
            "minors_3x3", "N", nb, N,
            [alpha, support_ok, ("p > 2", p > 2), ("w >= 3", dts.w >= 3), ("(mu+1)(n-k) > 2", W > 2)],
            "every 3x3 minor of the window not forced to vanish by its zero pattern is nonzero",
            base_inputs,
        )
    )
    entries.append(
        _entry(
            "six_cycles", "q", t6, q, [alpha, support_ok, ("q odd", q % 2 == 1)],
            "no 6-cycle violates the FRC",
            base_inputs,
        )
    )
    e2, e3 = entries[0], entries[1]
    entries.append(
        BoundEntry(
            "distance_at_least_3", "q", t2,
            [("minors_2x2 satisfied", e2.satisfied), ("minors_3x3 satisfied", e3.satisfied)],
            e2.satisfied and e3.satisfied,
            "free distance at least 3 and no 4- or 6-cycle violates the FRC",
            base_inputs,
        )
    )

    lmax = max_cycle_rows(n, k, m)
    divisible_free = no_difference_divisible(dts, n - k)
    for ell in range(2, lmax + 1):
        inputs = dict(base_inputs, ell=ell)
        if ell % 2:
            entries.append(
                _entry(
                    f"odd_cycles_l{ell}", "q", q_bound_odd_cycle(n, k, m, ell), q,
                    [alpha, support_ok, ("p > 2", p > 2)],
                    f"no {2 * ell}-cycle violates the FRC",
                    inputs,
                )
            )
        else:
            if divisible_free and ell <= ell_cap:
                f_ok = even_cycle_f_nonzero(dts, n, k, ell).nonzero
            else:
                f_ok = False
            entries.append(
                _entry(
                    f"even_cycles_l{ell}", "q", q_bound_even_cycle(n, k, m, ell), q,
                    [
                        alpha,
                        support_ok,
                        (f"no within-set difference divisible by {n - k}", divisible_free),
                        ("exponent combination nonzero on realizable cycles", f_ok),
                    ],
                    f"no {2 * ell}-cycle violates the FRC",
                    inputs,
                )
            )

    if desc.variant == "alphaP":
        P = desc.P
        strict = validate(dts, "strict").valid
        starts = all(s[0] == 1 for s in dts.sets)
        for ell in range(2, lmax + 1):
            exact = p_construction_threshold(n, k, m, ell, P)
            entries.append(
                _entry(
                    f"p_construction_l{ell}", "q", exact.numerator // exact.denominator, q,
                    [
                        ("P prime", isprime(P)),
                        (f"P > ell*k = {ell * k}", P > ell * k),
                        ("strict difference triangle set", strict),
                        ("every set starts at 1", starts),
                    ],
                    f"no {2 * ell}-cycle violates the FRC",
                    dict(inputs, ell=ell, P=P),
                )
            )

    strict = validate(dts, "strict").valid
    entries.append(
        BoundEntry(
            "cycle_free", "q", 1,
            [("strict difference triangle set", strict),
             ("sets start at 1 and n-k divides no nonzero difference",
              strict and cyclefree_conditions(dts, n, k))],
            strict and cyclefree_conditions(dts, n, k),
            "the Tanner graph has no cycles at all, over every field",
            base_inputs,
        )
    )
    identical = all(s == dts.sets[0] for s in dts.sets)
    entries.append(
        BoundEntry(
            "identical_sets", "q", 1,
            [("all sets equal", identical), (f"no difference divisible by {n - k}", divisible_free)],
            identical and divisible_free,
            "no cycle of any length violates the FRC, over every field",
            base_inputs,
        )
    )
    return BoundReport(n, k, m, q, p, N, desc.variant, entries)
