"""Fractional-part pairings and their induction/Adams identities."""

from fractions import Fraction

import pytest

from tamekit.characters import CharTable, VirtualChar
from tamekit.groups import PRESET_NAMES, preset
from tamekit.stickelberger import (d_char, pairing, pairing_table,
                                   star_pairing, verify_adams_identities,
                                   verify_induction_identities, xi_char,
                                   xi_star_char)


def _cyclic_rows(G, gen):
    T = CharTable.cyclic(G, gen)
    return T, [VirtualChar.irreducible(T, j) for j in range(T.k)]


def test_pairing_values_on_c3():
    G = preset("C3")
    T, rows = _cyclic_rows(G, 1)
    # row j sends the generator to zeta_3^j
    assert [pairing(rows[j], 1) for j in range(3)] == \
        [Fraction(0), Fraction(1, 3), Fraction(2, 3)]
    assert [star_pairing(rows[j], 1) for j in range(3)] == \
        [Fraction(0), Fraction(1, 3), Fraction(-1, 3)]


def test_pairing_at_identity_is_zero():
    for name in ("S3", "Q8", "F21"):
        T = CharTable.of(preset(name))
        for t in range(T.k):
            chi = VirtualChar.irreducible(T, t)
            assert pairing(chi, 0) == 0
            assert star_pairing(chi, 0) == 0


def test_pairing_is_additive():
    G = preset("F21")
    T = CharTable.of(G)
    s = next(g for g in range(G.n) if G.element_order(g) == 7)
    a = VirtualChar.irreducible(T, 3)
    b = VirtualChar.irreducible(T, 4).scale(-2)
    assert pairing(a + b, s) == pairing(a, s) + pairing(b, s)
    assert star_pairing(a + b, s) == star_pairing(a, s) + star_pairing(b, s)


def test_star_pairing_rejects_even_order():
    G = preset("S3")
    T = CharTable.of(G)
    t = G.names.index("(1 2)")
    with pytest.raises(ValueError):
        star_pairing(VirtualChar.irreducible(T, 0), t)


def test_star_window_is_symmetric():
    # pairing* of a character and of its conjugate are negatives
    G = preset("C7")
    T, rows = _cyclic_rows(G, 1)
    for j in range(1, 7):
        assert star_pairing(rows[j], 1) == -star_pairing(rows[7 - j], 1)
    assert star_pairing(rows[0], 1) == 0


def test_xi_and_d_character_pairings():
    # pairing against the xi elements, after restriction to <s>
    from tamekit.characters import restrict
    from tamekit.stickelberger import _cyclic_context

    G = preset("F21")
    T = CharTable.of(G)
    s = next(g for g in range(G.n) if G.element_order(g) == 7)
    sub, ctab = _cyclic_context(G, s)
    xi = xi_char(G, s)
    xis = xi_star_char(G, s)
    d = d_char(G, s)
    for t in range(T.k):
        chi = VirtualChar.irreducible(T, t)
        res = restrict(chi, sub, ctab)
        assert res.inner(xi) == pairing(chi, s)
        assert res.inner(xis) == star_pairing(chi, s)
        assert res.inner(d) == star_pairing(chi, s) - pairing(chi, s)


def test_induction_identities_all_presets():
    for name in PRESET_NAMES:
        G = preset(name)
        for s in range(G.n):
            rep = verify_induction_identities(G, s, label=name)
            assert rep["pass"], (name, s)


def test_adams_identities_odd_order_elements():
    for name in PRESET_NAMES:
        G = preset(name)
        for s in range(G.n):
            if G.element_order(s) % 2 == 0:
                continue
            rep = verify_adams_identities(G, s, label=name)
            assert rep["pass"], (name, s)


def test_adams_identities_reject_even_order():
    G = preset("S3")
    with pytest.raises(ValueError):
        verify_adams_identities(G, G.names.index("(1 2)"))


def test_pairing_table_report():
    import json
    G = preset("S3")
    s = G.names.index("(1 2 3)")
    rep = pairing_table(G, s, star=True, label="S3")
    assert rep["group"] == "S3"
    assert rep["element_order"] == 3
    assert len(rep["rows"]) == 3
    json.dumps(rep)
