"""Polycyclic group presentations: data model, validation, derived relations.

A presentation on generators ``g_1 .. g_n`` consists of relative orders
``r_1 .. r_n`` (a positive integer, or ``None`` for infinite) and three
families of rewrite rules, each sending a short left-hand side to a *tail*
in the higher generators:

==========  =========================================  ==========================
family      rule                                       defined for
==========  =========================================  ==========================
power       ``g_i^{r_i}    -> e-tail(i)``              finite ``r_i``
conj        ``g_j g_i      -> g_i . a-tail(i, j)``     ``i < j``
conjinv     ``g_j g_i^-1   -> g_i^-1 . b-tail(i, j)``  ``i < j``, ``r_i`` infinite
==========  =========================================  ==========================

A tail is an exponent word ``g_{i+1}^{t_{i+1}} ... g_n^{t_n}`` whose entries
obey ``0 <= t_k < r_k`` wherever ``r_k`` is finite.  Relations omitted from
the input default to the commuting form (tail ``g_j`` alone).

From these, :func:`derive_inverse_relations` computes the three inverse
families, bottom-up over the generator chain:

==========  ==============================================  =============================
family      rule                                            defined for
==========  ==============================================  =============================
c           ``g_j^-1 g_i    -> g_i . c-tail(i, j)``         ``i < j``, ``r_j`` infinite
d           ``g_j^-1 g_i^-1 -> g_i^-1 . d-tail(i, j)``      ``i < j``, both infinite
f           ``g_i^-1        -> g_i^{r_i - 1} . f-tail(i)``  finite ``r_i``
==========  ==============================================  =============================

Each derived tail is the collected inverse of the corresponding defining
tail, computed inside the sub-presentation on the higher generators; the
derivation proceeds mechanically even when the presentation is inconsistent
(detecting that is the consistency checker's job, not the deriver's).

Presentations are treated as immutable once validated; all functions here
return new objects instead of mutating.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import (
    BadIndex,
    CollectionBudgetExceeded,
    BudgetExceeded,
    ExponentOutOfRange,
    MissingRelation,
    NotNilpotentForm,
    WeightDivergence,
)

Order = int | None  # None encodes an infinite relative order
Runs = tuple[tuple[int, int], ...]  # ascending (generator, exponent) pairs


@dataclass(frozen=True)
class ExponentTail:
    """Exponent vector over generators ``start .. n``; lower indices are zero."""

    start: int
    exponents: tuple[int, ...]

    def entry(self, k: int) -> int:
        if k < self.start:
            return 0
        return self.exponents[k - self.start]

    def runs(self) -> Runs:
        return tuple(
            (self.start + off, e) for off, e in enumerate(self.exponents) if e != 0
        )

    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.exponents)


def tail_from_runs(start: int, n: int, runs) -> ExponentTail:
    exps = [0] * (n - start + 1)
    for k, e in runs:
        if not start <= k <= n:
            raise BadIndex(f"tail entry at g{k} outside {start}..{n}")
        exps[k - start] = e
    return ExponentTail(start, tuple(exps))


@dataclass
class DerivedTables:
    """The c/d/f tails computed by :func:`derive_inverse_relations`."""

    c_tails: dict[tuple[int, int], ExponentTail]
    d_tails: dict[tuple[int, int], ExponentTail]
    f_tails: dict[int, ExponentTail]


@dataclass
class WeightAssignment:
    """Minimal generator weights and their maximum ``d``."""

    weights: tuple[int, ...]
    d: int

    def weight(self, i: int) -> int:
        return self.weights[i - 1]


@dataclass(eq=False)
class GroupPresentation:
    n: int
    orders: tuple[Order, ...]
    power_tails: dict[int, ExponentTail]
    conj_tails: dict[tuple[int, int], ExponentTail]
    conjinv_tails: dict[tuple[int, int], ExponentTail]
    derived: DerivedTables | None = None
    # engine view of the rule tables, built lazily by the collector
    _rules: object = field(default=None, init=False, repr=False, compare=False)

    def order(self, i: int) -> Order:
        return self.orders[i - 1]

    def is_finite_order(self, i: int) -> bool:
        return self.orders[i - 1] is not None

    def __eq__(self, other):
        if not isinstance(other, GroupPresentation):
            return NotImplemented
        return (
            self.n == other.n
            and self.orders == other.orders
            and self.power_tails == other.power_tails
            and self.conj_tails == other.conj_tails
            and self.conjinv_tails == other.conjinv_tails
        )


def _as_tail(start: int, n: int, value) -> ExponentTail:
    if isinstance(value, ExponentTail):
        if value.start != start:
            return tail_from_runs(start, n, value.runs())
        if len(value.exponents) != n - start + 1:
            raise BadIndex(f"tail for start {start} has wrong length")
        return value
    return tail_from_runs(start, n, value)


def _check_tail_bounds(p_orders, tail: ExponentTail, owner: str):
    for k, e in tail.runs():
        r = p_orders[k - 1]
        if r is not None and not 0 <= e < r:
            raise ExponentOutOfRange(
                f"{owner}: exponent {e} at g{k} outside [0, {r})"
            )


def _default_commuting_tail(n: int, i: int, j: int, orders, power_tails) -> ExponentTail:
    # g_j alone, except that a generator of relative order 1 is replaced by
    # its own power tail (exponent 1 would violate the bound 0 <= t < 1)
    if orders[j - 1] == 1:
        e_tail = power_tails.get(j)
        runs = e_tail.runs() if e_tail is not None else ()
        return tail_from_runs(i + 1, n, runs)
    return tail_from_runs(i + 1, n, ((j, 1),))


def validate(
    n: int,
    orders=(),
    power_tails=None,
    conj_tails=None,
    conjinv_tails=None,
) -> GroupPresentation:
    """Validate raw presentation data and fill in the commuting defaults.

    Tails may be given as :class:`ExponentTail` values or as iterables of
    ``(generator, exponent)`` pairs.  The derived tables are *not* computed;
    see :func:`derive_inverse_relations` / :func:`ensure_derived`.
    """
    if n < 0:
        raise BadIndex(f"generator count must be nonnegative, got {n}")
    orders = tuple(orders) + (None,) * (n - len(orders))
    if len(orders) != n:
        raise BadIndex(f"got {len(orders)} orders for {n} generators")
    for i, r in enumerate(orders, start=1):
        if r is not None and (not isinstance(r, int) or r < 1):
            raise ExponentOutOfRange(f"relative order of g{i} must be >= 1, got {r!r}")

    power = {}
    for i, value in (power_tails or {}).items():
        if not 1 <= i <= n:
            raise BadIndex(f"power relation for unknown generator g{i}")
        if orders[i - 1] is None:
            raise MissingRelation(f"power tail given for g{i} of infinite order")
        power[i] = _as_tail(i + 1, n, value)
    for i, r in enumerate(orders, start=1):
        if r is not None and i not in power:
            power[i] = ExponentTail(i + 1, (0,) * (n - i))

    conj = {}
    for (i, j), value in (conj_tails or {}).items():
        if not (1 <= i < j <= n):
            raise BadIndex(f"conjugation relation for bad pair (g{i}, g{j})")
        conj[(i, j)] = _as_tail(i + 1, n, value)

    conjinv = {}
    for (i, j), value in (conjinv_tails or {}).items():
        if not (1 <= i < j <= n):
            raise BadIndex(f"inverse conjugation relation for bad pair (g{i}, g{j})")
        if orders[i - 1] is not None:
            raise MissingRelation(
                f"inverse conjugation tail given for g{i} of finite order"
            )
        conjinv[(i, j)] = _as_tail(i + 1, n, value)

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in conj:
                conj[(i, j)] = _default_commuting_tail(n, i, j, orders, power)
            if orders[i - 1] is None and (i, j) not in conjinv:
                conjinv[(i, j)] = _default_commuting_tail(n, i, j, orders, power)

    for i, tail in power.items():
        _check_tail_bounds(orders, tail, f"power tail of g{i}")
    for (i, j), tail in conj.items():
        _check_tail_bounds(orders, tail, f"conjugation tail of (g{i}, g{j})")
    for (i, j), tail in conjinv.items():
        _check_tail_bounds(orders, tail, f"inverse conjugation tail of (g{i}, g{j})")

    return GroupPresentation(
        n=n,
        orders=orders,
        power_tails=power,
        conj_tails=conj,
        conjinv_tails=conjinv,
    )


def derive_inverse_relations(p: GroupPresentation, budget: int | None = None) -> DerivedTables:
    """Compute the c/d/f tails, bottom-up over the generator chain.

    The tail for index ``i`` is the collected inverse of the defining tail,
    which only involves generators ``i+1 .. n``, so by the time ``i`` is
    processed all the tables that collection can touch are complete.
    """
    from . import collector

    if budget is None:
        budget = collector.DEFAULT_BUDGET
    rules = collector.rules_without_derived(p)
    n = p.n

    def inverted(runs: Runs) -> Runs:
        formal_inverse = [(g, -z) for g, z in reversed(runs)]
        try:
            return collector.collect_runs(rules, formal_inverse, budget)
        except BudgetExceeded as exc:
            raise CollectionBudgetExceeded(
                f"derivation of inverse relations exceeded budget {budget}"
            ) from exc

    c_tails: dict[tuple[int, int], ExponentTail] = {}
    d_tails: dict[tuple[int, int], ExponentTail] = {}
    f_tails: dict[int, ExponentTail] = {}
    for i in range(n, 0, -1):
        if p.orders[i - 1] is not None:
            runs = inverted(rules.e[i])
            f_tails[i] = tail_from_runs(i + 1, n, runs)
            rules.f[i] = runs
        for j in range(i + 1, n + 1):
            if p.orders[j - 1] is None:
                runs = inverted(rules.a[(i, j)])
                c_tails[(i, j)] = tail_from_runs(i + 1, n, runs)
                rules.c[(i, j)] = runs
            if p.orders[i - 1] is None and p.orders[j - 1] is None:
                runs = inverted(rules.b[(i, j)])
                d_tails[(i, j)] = tail_from_runs(i + 1, n, runs)
                rules.d[(i, j)] = runs
    return DerivedTables(c_tails=c_tails, d_tails=d_tails, f_tails=f_tails)


def ensure_derived(p: GroupPresentation, budget: int | None = None) -> GroupPresentation:
    """Return ``p`` with derived tables attached (computing them if absent)."""
    if p.derived is not None:
        return p
    return replace(p, derived=derive_inverse_relations(p, budget))


def is_nilpotent_form(p: GroupPresentation) -> bool:
    """True iff every conjugation tail is ``g_j`` times a tail in indices > j."""
    for family in (p.conj_tails, p.conjinv_tails):
        for (i, j), tail in family.items():
            if tail.entry(j) != 1:
                return False
            if any(k < j for k, _ in tail.runs()):
                return False
    return True


def compute_weights(p: GroupPresentation) -> WeightAssignment:
    """Least weight function: unit weights raised until every constraint holds.

    Constraints: ``w(k) >= w(i)`` for every nonzero power-tail entry
    ``e(i, k)``, and ``w(k) >= w(i) + w(j)`` for every nonzero conjugation
    tail entry at position ``k > j`` (the forced leading entry at ``k = j``
    carries no constraint).
    """
    if not is_nilpotent_form(p):
        raise NotNilpotentForm("weights are only defined for nilpotent-form presentations")
    n = p.n
    w = [1] * (n + 1)  # 1-based

    constraints: list[tuple[int, tuple[int, ...]]] = []  # (target k, source indices)
    for i, tail in p.power_tails.items():
        for k, e in tail.runs():
            constraints.append((k, (i,)))
    for family in (p.conj_tails, p.conjinv_tails):
        for (i, j), tail in family.items():
            for k, e in tail.runs():
                if k > j:
                    constraints.append((k, (i, j)))

    for _ in range(n + 1):
        changed = False
        for k, sources in constraints:
            need = sum(w[s] for s in sources)
            if w[k] < need:
                w[k] = need
                changed = True
        if not changed:
            return WeightAssignment(tuple(w[1:]), max(w[1:], default=1))
    raise WeightDivergence("weight fixpoint did not stabilise")
