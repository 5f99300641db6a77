"""Element literal grammar and the built-in group registry.

Group ids: Z<n>, F<n>, S3, L2, W<n> (Z_n wr Z), H2, Heis.

Literal forms (see parse_element):
    Z<n>     "(2,-3)"
    F<n>/S3  "a b a^-1"  or the generic word form "w: a b a^-1"
    L2       "L2{ -1,0,2 ; p=3 }", builders "d(3)", "d(5)*t^2"
    W<n>     "W3{ 1:2, 0:1 ; p=0 }"  (index:state pairs)
    H2       "H2{ 1:2, 2:1, -1:-2, -2:-1 ; shift=0 }", builders "g(2)",
             "h(3,2)", "u(2,pos)", "u(2,neg)"
    Heis     "Heis(1,2,3)" or "(1,2,3)"

Any group also accepts "w: <labels>", a whitespace-separated generator word
with ^-1 (or ^<k>) powers.  parse -> format -> parse is the identity on
canonical forms.
"""

from __future__ import annotations

import re

from .builtin import S3_WORDS, free_letter_label, make_free, make_s3, make_zn
from .core import Element, GroupOracle
from .heisenberg import HEIS_ID, MalcevTriple, heis_oracle
from .houghton import H2_ID, HoughtonElement, h2_g, h2_h, h2_oracle, h2_u
from .lamplighter import (
    L2_ID,
    LampConfig,
    WreathConfig,
    l2_oracle,
    ll_dm_tk,
    ll_make_dm,
    zn_wreath_oracle,
)


class ParseError(ValueError):
    def __init__(self, token: str, rule: str):
        self.token = token
        self.rule = rule
        super().__init__(f"cannot parse {token!r}: expected {rule}")


def get_group(group_id: str) -> GroupOracle:
    if group_id == "S3":
        return make_s3()
    if group_id == L2_ID:
        return l2_oracle()
    if group_id == H2_ID:
        return h2_oracle()
    if group_id == HEIS_ID:
        return heis_oracle()
    m = re.fullmatch(r"Z(\d+)", group_id)
    if m:
        return make_zn(int(m.group(1)))
    m = re.fullmatch(r"F(\d+)", group_id)
    if m:
        return make_free(int(m.group(1)))
    m = re.fullmatch(r"W(\d+)", group_id)
    if m:
        return zn_wreath_oracle(int(m.group(1)))
    raise ParseError(group_id, "a group id of the form Zn, Fn, S3, L2, Wn, H2 or Heis")


def _parse_word(oracle: GroupOracle, text: str) -> Element:
    out = oracle.identity
    for token in text.split():
        m = re.fullmatch(r"([^\^\s]+)(?:\^(-?\d+))?", token)
        if not m:
            raise ParseError(token, "a generator name with an optional ^<power>")
        name, power = m.group(1), int(m.group(2) or 1)
        try:
            gen = oracle.generator(name)
        except KeyError:
            # "t^-1" may itself be a label; retry the raw token
            try:
                gen = oracle.generator(token)
                power = 1
            except KeyError:
                raise ParseError(token, f"a generator of {oracle.group_id}") from None
        if power < 0:
            gen = oracle.invert(gen)
            power = -power
        for _ in range(power):
            out = oracle.compose(out, gen)
    return out


def _parse_int_list(text: str, token: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part.strip()) for part in text.split(",")]
    except ValueError:
        raise ParseError(token, "a comma-separated list of integers") from None


def parse_element(group_id: str, text: str) -> Element:
    oracle = get_group(group_id)
    text = text.strip()
    if text.startswith("w:"):
        return _parse_word(oracle, text[2:])

    if group_id.startswith("Z") and group_id != "Z":  # Z^n coordinate vector
        m = re.fullmatch(r"\((.*)\)", text)
        if not m:
            raise ParseError(text, '"(c1,...,cn)" coordinates')
        coords = _parse_int_list(m.group(1), text)
        n = len(oracle.identity)
        if len(coords) != n:
            raise ParseError(text, f"{n} coordinates for {group_id}")
        return tuple(coords)

    if group_id == L2_ID:
        m = re.fullmatch(r"d\((\d+)\)(?:\*t\^(-?\d+))?", text)
        if m:
            mval = int(m.group(1))
            return ll_dm_tk(mval, int(m.group(2))) if m.group(2) else ll_make_dm(mval)
        m = re.fullmatch(r"L2\{(.*);\s*p=(-?\d+)\s*\}", text)
        if not m:
            raise ParseError(text, '"L2{ i1,i2,... ; p=<pos> }" or "d(m)" or "d(m)*t^k"')
        lamps = _parse_int_list(m.group(1), text)
        if len(set(lamps)) != len(lamps):
            raise ParseError(text, "distinct lamp indices")
        return LampConfig(tuple(sorted(lamps)), int(m.group(2)))

    if group_id.startswith("W"):
        m = re.fullmatch(r"W\d*\{(.*);\s*p=(-?\d+)\s*\}", text)
        if not m:
            raise ParseError(text, '"W<n>{ index:state, ... ; p=<pos> }"')
        lamps = {}
        body = m.group(1).strip()
        # generators are the nontrivial lamp states plus t and t^-1
        n_states = len(oracle.generator_set.labels) - 2
        for pair in filter(None, (p.strip() for p in body.split(","))):
            pm = re.fullmatch(r"(-?\d+)\s*:\s*(\d+)", pair)
            if not pm:
                raise ParseError(pair, '"index:state"')
            idx, state = int(pm.group(1)), int(pm.group(2))
            if not 1 <= state <= n_states:
                raise ParseError(pair, f"a nontrivial state in 1..{n_states}")
            if idx in lamps:
                raise ParseError(pair, "distinct lamp indices")
            lamps[idx] = state
        return WreathConfig(tuple(sorted(lamps.items())), int(m.group(2)))

    if group_id == H2_ID:
        m = re.fullmatch(r"g\((\d+)\)", text)
        if m:
            return h2_g(int(m.group(1)))
        m = re.fullmatch(r"h\((\d+)\s*,\s*(\d+)\)", text)
        if m:
            return h2_h(int(m.group(1)), int(m.group(2)))
        m = re.fullmatch(r"u\((\d+)\s*,\s*(pos|neg)\)", text)
        if m:
            return h2_u(int(m.group(1)), m.group(2))
        m = re.fullmatch(r"H2\{(.*);\s*shift=(-?\d+)\s*\}", text)
        if not m:
            raise ParseError(
                text, '"H2{ p:q, ... ; shift=<n> }" or a builder g(k) / h(k,m) / u(l,pos|neg)'
            )
        moves = {}
        for pair in filter(None, (p.strip() for p in m.group(1).split(","))):
            pm = re.fullmatch(r"(-?\d+)\s*:\s*(-?\d+)", pair)
            if not pm:
                raise ParseError(pair, '"point:image"')
            src, dst = int(pm.group(1)), int(pm.group(2))
            if src == 0 or dst == 0:
                raise ParseError(pair, "nonzero bead indices")
            if src in moves:
                raise ParseError(pair, "distinct source points")
            moves[src] = dst
        el = HoughtonElement(int(m.group(2)), tuple(sorted(moves.items())))
        _validate_houghton(el, text)
        return el

    if group_id == HEIS_ID:
        m = re.fullmatch(r"(?:Heis)?\((-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\)", text)
        if not m:
            raise ParseError(text, '"Heis(A,B,C)"')
        return MalcevTriple(int(m.group(1)), int(m.group(2)), int(m.group(3)))

    # free groups and S3: whitespace-separated generator words
    return _parse_word(oracle, text)


def _validate_houghton(el: HoughtonElement, token: str) -> None:
    from .houghton import bead_shift

    srcs = [p for p, _ in el.moves]
    dsts = [q for _, q in el.moves]
    if len(set(dsts)) != len(dsts):
        raise ParseError(token, "an injective exception table")
    expected_dsts = {bead_shift(p, el.shift) for p in srcs}
    if expected_dsts != set(dsts):
        raise ParseError(
            token, "an exception table that is a bijection against the shift outside it"
        )
    for p, q in el.moves:
        if q == bead_shift(p, el.shift):
            raise ParseError(token, "a trimmed exception table (no entries matching the shift)")


def format_element(group_id: str, el: Element) -> str:
    if group_id.startswith("Z") and group_id not in (L2_ID,):
        return "(" + ",".join(str(c) for c in el) + ")"
    if group_id == L2_ID:
        lamps = ",".join(str(i) for i in el.lamps)
        return f"L2{{{lamps};p={el.pos}}}"
    if group_id.startswith("W"):
        lamps = ",".join(f"{i}:{s}" for i, s in el.lamps)
        return f"{group_id}{{{lamps};p={el.pos}}}"
    if group_id == H2_ID:
        moves = ",".join(f"{p}:{q}" for p, q in el.moves)
        return f"H2{{{moves};shift={el.shift}}}"
    if group_id == HEIS_ID:
        return f"Heis({el.a},{el.b},{el.c})"
    if group_id == "S3":
        return "w:" if el == 0 else "w: " + S3_WORDS[el]
    if group_id.startswith("F"):
        n = int(group_id[1:])
        if not el:
            return "w:"
        return "w: " + " ".join(free_letter_label(letter, n) for letter in el)
    raise ParseError(group_id, "a known group id")


def element_formatter(group_id: str):
    return lambda el: format_element(group_id, el)
