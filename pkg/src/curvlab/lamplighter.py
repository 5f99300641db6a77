"""The lamplighter group L_2 = Z_2 wr Z and general A wr Z for finite A.

Elements are a finitely supported lamp configuration plus the lamplighter
position.  The composition law shifts the right factor's lamps by the left
factor's position, so that reading a generator word left to right matches the
walk-and-toggle story: ``t`` moves the lamplighter one step right and ``a``
(or a nontrivial element of A) acts on the lamp under the lamplighter.

Conventions pinned here and validated against the frozen escape-profile
regression: the conjugate t^i a t^-i toggles the lamp at index +i, and the
w_m dead-end family lights every lamp in [-m, m] with the lamplighter back
at the origin.
"""

from __future__ import annotations

from typing import Mapping, NamedTuple

from .core import GeneratorSet, GroupOracle, plain_decode, plain_encode

L2_ID = "L2"


class LampConfig(NamedTuple):
    """A lamplighter-group element: sorted tuple of lit lamp indices, plus position."""

    lamps: tuple[int, ...]
    pos: int


class WreathConfig(NamedTuple):
    """An A wr Z element: sorted (index, nontrivial state) pairs, plus position."""

    lamps: tuple[tuple[int, int], ...]
    pos: int


class FiniteGroupSpec(NamedTuple):
    """The lamp group A: multiplication table, identity index, per-element inverse."""

    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.table)


def cyclic_spec(n: int) -> FiniteGroupSpec:
    """Z_n as a lamp group; state k is labelled s{k}."""
    if n < 2:
        raise ValueError("lamp group must be nontrivial")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    inverse = tuple((-i) % n for i in range(n))
    labels = tuple(f"s{k}" for k in range(n))
    return FiniteGroupSpec(labels, table, 0, inverse)


# ---------------------------------------------------------------------------
# Word length.  With N lamps lit, rightmost lit index R (0 if none positive),
# leftmost lit index -L (L = 0 if none negative) and final position p, the
# length is N + min(2L + R + |p - R|, 2R + L + |p + L|): sweep one way, then
# the other, then walk to p.  Empty configurations cost |p|.


def lamp_walk_length(indices, pos: int) -> int:
    if not indices:
        return abs(pos)
    r = max(0, max(indices))
    l = max(0, -min(indices))
    return len(indices) + min(2 * l + r + abs(pos - r), 2 * r + l + abs(pos + l))


def ll_length(cfg: LampConfig) -> int:
    """Closed-form word length in L_2 over {a, t, t^-1}."""
    return lamp_walk_length(cfg.lamps, cfg.pos)


def wr_length(cfg: WreathConfig) -> int:
    """Closed-form word length in A wr Z; every nontrivial state has weight 1."""
    return lamp_walk_length(tuple(i for i, _ in cfg.lamps), cfg.pos)


# ---------------------------------------------------------------------------
# Arithmetic


def _l2_compose(x: LampConfig, y: LampConfig) -> LampConfig:
    lamps = set(x.lamps)
    lamps.symmetric_difference_update(i + x.pos for i in y.lamps)
    return LampConfig(tuple(sorted(lamps)), x.pos + y.pos)


def _l2_invert(x: LampConfig) -> LampConfig:
    return LampConfig(tuple(sorted(i - x.pos for i in x.lamps)), -x.pos)


def l2_oracle() -> GroupOracle:
    return GroupOracle(
        group_id=L2_ID,
        generator_set=GeneratorSet(("a", "t", "t^-1"), (0, 2, 1)),
        generators=(LampConfig((0,), 0), LampConfig((), 1), LampConfig((), -1)),
        identity=LampConfig((), 0),
        compose=_l2_compose,
        invert=_l2_invert,
        encode=lambda el: plain_encode(tuple(el)),
        decode=lambda b: LampConfig(*plain_decode(b)),
        closed_length=ll_length,
    )


def wreath_oracle(spec: FiniteGroupSpec, group_id: str) -> GroupOracle:
    """A wr Z with generating set (A minus identity) union {t, t^-1}."""
    mul = spec.table
    e = spec.identity

    def compose(x: WreathConfig, y: WreathConfig) -> WreathConfig:
        lamps = dict(x.lamps)
        for i, state in y.lamps:
            j = i + x.pos
            merged = mul[lamps[j]][state] if j in lamps else state
            if merged == e:
                lamps.pop(j, None)
            else:
                lamps[j] = merged
        return WreathConfig(tuple(sorted(lamps.items())), x.pos + y.pos)

    def invert(x: WreathConfig) -> WreathConfig:
        return WreathConfig(
            tuple(sorted((i - x.pos, spec.inverse[state]) for i, state in x.lamps)),
            -x.pos,
        )

    nontrivial = [k for k in range(spec.order) if k != e]
    labels = tuple(spec.labels[k] for k in nontrivial) + ("t", "t^-1")
    inverse_idx = tuple(nontrivial.index(spec.inverse[k]) for k in nontrivial) + (
        len(nontrivial) + 1,
        len(nontrivial),
    )
    gens = tuple(WreathConfig(((0, k),), 0) for k in nontrivial) + (
        WreathConfig((), 1),
        WreathConfig((), -1),
    )
    return GroupOracle(
        group_id=group_id,
        generator_set=GeneratorSet(labels, inverse_idx),
        generators=gens,
        identity=WreathConfig((), 0),
        compose=compose,
        invert=invert,
        encode=lambda el: plain_encode(tuple(el)),
        decode=lambda b: WreathConfig(*plain_decode(b)),
        closed_length=wr_length,
    )


def zn_wreath_oracle(n: int) -> GroupOracle:
    """Z_n wr Z, the rank-n lamplighter."""
    return wreath_oracle(cyclic_spec(n), f"W{n}")


# ---------------------------------------------------------------------------
# The dead-end family and geodesic spellings


def ll_make_dm(m: int) -> LampConfig:
    """Every lamp in [-m, m] lit, lamplighter back at the origin."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return LampConfig(tuple(range(-m, m + 1)), 0)


def ll_dm_tk(m: int, k: int) -> LampConfig:
    """The backtrack element d_m t^k."""
    return LampConfig(ll_make_dm(m).lamps, k)


def wr_make_dm(spec: FiniteGroupSpec, states: Mapping[int, int]) -> WreathConfig:
    """The d_m analogue in A wr Z: chosen nontrivial states on exactly [-m, m]."""
    if not states:
        raise ValueError("states must cover [-m, m] for some m >= 1")
    m = max(states)
    if m < 1 or sorted(states) != list(range(-m, m + 1)):
        raise ValueError("state indices must be exactly the interval [-m, m] with m >= 1")
    for i, state in states.items():
        if state == spec.identity:
            raise ValueError(f"state at index {i} is the identity of the lamp group")
        if not 0 <= state < spec.order:
            raise ValueError(f"state at index {i} is not an element of the lamp group")
    return WreathConfig(tuple(sorted(states.items())), 0)


def _walk_stops(indices, pos: int) -> list[int]:
    negs = sorted((i for i in indices if i < 0), reverse=True)
    nonnegs = sorted(i for i in indices if i >= 0)
    # Left-first is optimal when the final position is nonnegative, right-first
    # otherwise; ties agree, so the sign of pos decides.
    return negs + nonnegs if pos >= 0 else nonnegs + negs


def _geodesic(indices_to_label: Mapping[int, str], pos: int) -> tuple[str, ...]:
    word: list[str] = []
    cur = 0
    for stop in _walk_stops(tuple(indices_to_label), pos):
        word.extend(["t" if stop > cur else "t^-1"] * abs(stop - cur))
        cur = stop
        word.append(indices_to_label[stop])
    word.extend(["t" if pos > cur else "t^-1"] * abs(pos - cur))
    return tuple(word)


def ll_geodesic(cfg: LampConfig) -> tuple[str, ...]:
    """A geodesic generator word evaluating to cfg (left-first for pos >= 0)."""
    return _geodesic({i: "a" for i in cfg.lamps}, cfg.pos)


def wr_geodesic(spec: FiniteGroupSpec, cfg: WreathConfig) -> tuple[str, ...]:
    return _geodesic({i: spec.labels[state] for i, state in cfg.lamps}, cfg.pos)


class EmbedError(ValueError):
    """The word is not a geodesic prefix of any d_M."""


def ll_embed_in_dead_end(w: LampConfig) -> tuple[int, tuple[str, ...]]:
    """Smallest M with a geodesic spelling of w extending to one of d_M.

    Returns (M, u) where u is a generator word such that ll_geodesic(w) + u
    is a geodesic spelling of d_M, i.e. |w^-1 d_M| = |d_M| - |w|.

    Not every word admits such an M: a walk that passes an unlit lamp twice
    (lamps {0, 2}, back at 0, say) has spent both passes of the skipped
    position, and the shortfall |w^-1 d_M| - (|d_M| - |w|) is the same for
    every M beyond the word's span.  Such inputs raise :class:`EmbedError`;
    the search bound below is decisive because both sides of the equation
    grow by exactly 6 per unit of M once d_M's rim clears the word.
    """
    oracle = l2_oracle()
    w_len = ll_length(w)
    reach = max([abs(i) for i in w.lamps] + [abs(w.pos)], default=0)

    def deficit(m: int) -> int:
        target = ll_make_dm(m)
        rest = oracle.compose(oracle.invert(w), target)
        return ll_length(rest) - (ll_length(target) - w_len)

    top = reach + 3
    for m in range(1, top + 1):
        if deficit(m) == 0:
            return m, ll_geodesic(oracle.compose(oracle.invert(w), ll_make_dm(m)))
    if deficit(top) != deficit(top - 1):
        raise AssertionError("deficit did not stabilize; search bound too small")
    raise EmbedError(
        f"{w} is not a geodesic prefix of any d_M (stable length deficit {deficit(top)})"
    )
