"""Character tables, virtual characters, Adams operations, induction."""

import random
from fractions import Fraction

import pytest

from tamekit.characters import CharTable, VirtualChar, induce, restrict
from tamekit.cyclotomic import CycNum, zeta
from tamekit.groups import PRESET_NAMES, Subgroup, preset


def test_all_presets_certify():
    for name in PRESET_NAMES:
        cert = CharTable.of(preset(name)).certify()
        assert cert["pass"], name


def test_degree_multisets():
    expected = {"S3": [1, 1, 2], "A4": [1, 1, 1, 3], "Q8": [1, 1, 1, 1, 2],
                "D5": [1, 1, 2, 2], "F21": [1, 1, 1, 3, 3],
                "C9": [1] * 9}
    for name, degs in expected.items():
        assert sorted(CharTable.of(preset(name)).degrees) == degs


def test_s3_table_values():
    G = preset("S3")
    T = CharTable.of(G)
    j2 = T.class_of[G.names.index("(1 2)")]
    j3 = T.class_of[G.names.index("(1 2 3)")]
    two = next(t for t in range(T.k) if T.degrees[t] == 2)
    assert T.value(two, j2) == CycNum.from_rational(0)
    assert T.value(two, j3) == CycNum.from_rational(-1)
    tr = T.trivial_index()
    assert all(T.value(tr, j) == CycNum.from_rational(1) for j in range(T.k))


def test_a4_three_dimensional_character():
    G = preset("A4")
    T = CharTable.of(G)
    three = next(t for t in range(T.k) if T.degrees[t] == 3)
    dbl = T.class_of[G.names.index("(1 2)(3 4)")]
    cyc = T.class_of[G.names.index("(1 2 3)")]
    assert T.value(three, dbl) == CycNum.from_rational(-1)
    assert T.value(three, cyc) == CycNum.from_rational(0)


def test_q8_two_dimensional_character():
    G = preset("Q8")
    T = CharTable.of(G)
    two = next(t for t in range(T.k) if T.degrees[t] == 2)
    central = next(g for g in range(G.n) if G.element_order(g) == 2)
    assert T.value(two, T.class_of[central]) == CycNum.from_rational(-2)


def test_d5_rotation_values():
    G = preset("D5")
    T = CharTable.of(G)
    r = next(g for g in range(G.n) if G.element_order(g) == 5)
    j = T.class_of[r]
    twos = [t for t in range(T.k) if T.degrees[t] == 2]
    got = [T.value(t, j) for t in twos]
    # the two classes of rotations carry zeta^k + zeta^-k, k in {1, 2}
    for k in (1, 2):
        assert sum(v == zeta(5, k) + zeta(5, 5 - k) for v in got) == 1


def test_cyclic_table_power_ordering():
    G = preset("C5")
    T = CharTable.cyclic(G, 1)
    for j in range(5):
        for t in range(5):
            assert T.value(j, T.class_of[G.power(1, t)]) == zeta(5, (j * t) % 5)


def test_orthonormality_of_irreducibles():
    T = CharTable.of(preset("A4"))
    for i in range(T.k):
        for j in range(T.k):
            want = Fraction(1 if i == j else 0)
            assert VirtualChar.irreducible(T, i).inner(
                VirtualChar.irreducible(T, j)) == want


def test_regular_character_decomposition():
    G = preset("S3")
    T = CharTable.of(G)
    values = [CycNum.from_rational(G.n if j == T.class_of[0] else 0)
              for j in range(T.k)]
    reg = VirtualChar.from_values(T, values)
    for t in range(T.k):
        assert reg.inner(VirtualChar.irreducible(T, t)) == T.degrees[t]


def test_adams_on_linear_characters():
    G = preset("C9")
    T = CharTable.of(G)
    for t in range(T.k):
        chi = VirtualChar.irreducible(T, t)
        psi = chi.adams(2)
        for j in range(T.k):
            assert psi.value(j) == chi.value(T.power_class(j, 2))


def test_adams_composition_sampled():
    rng = random.Random(5)
    for name in ("S3", "Q8", "F21"):
        T = CharTable.of(preset(name))
        for _ in range(8):
            coeffs = {rng.randrange(T.k): Fraction(rng.randrange(-2, 3))
                      for _ in range(2)}
            vc = sum((VirtualChar.irreducible(T, t).scale(c)
                      for t, c in coeffs.items()),
                     VirtualChar.irreducible(T, 0).scale(0))
            a, b = rng.choice([1, 2, 3]), rng.choice([1, 2, 5])
            assert vc.adams(a).adams(b).values() == vc.adams(a * b).values()


def test_adams_fixes_trivial():
    T = CharTable.of(preset("A4"))
    tr = VirtualChar.irreducible(T, T.trivial_index())
    assert tr.adams(3).values() == tr.values()


def test_virtual_arithmetic():
    T = CharTable.of(preset("S3"))
    a = VirtualChar.irreducible(T, 0)
    b = VirtualChar.irreducible(T, 2)
    s = a + b
    assert s.degree() == a.degree() + b.degree()
    assert (s - b).values() == a.values()
    assert not (a - a).is_genuine() or (a - a).degree() == 0
    assert a.scale(3).degree() == 3 * a.degree()


def test_induction_of_trivial_is_permutation_character():
    G = preset("S3")
    T = CharTable.of(G)
    s = G.names.index("(1 2 3)")
    sub = Subgroup.cyclic(G, s)
    subT = CharTable.of(sub.group)
    ind = induce(VirtualChar.irreducible(subT, subT.trivial_index()), sub, T)
    # permutation character on two points: trivial + sign
    assert ind.value(T.class_of[0]).as_rational() == 2
    assert ind.inner(VirtualChar.irreducible(T, T.trivial_index())) == 1
    two = next(t for t in range(T.k) if T.degrees[t] == 2)
    assert ind.inner(VirtualChar.irreducible(T, two)) == 0


def test_induction_of_nontrivial_linear_gives_degree_two():
    G = preset("S3")
    T = CharTable.of(G)
    sub = Subgroup.cyclic(G, G.names.index("(1 2 3)"))
    subT = CharTable.of(sub.group)
    xi = next(t for t in range(subT.k) if t != subT.trivial_index())
    ind = induce(VirtualChar.irreducible(subT, xi), sub, T)
    two = next(t for t in range(T.k) if T.degrees[t] == 2)
    assert ind.values() == VirtualChar.irreducible(T, two).values()


def test_frobenius_reciprocity_all_cyclic_subgroups():
    for name in ("S3", "A4", "D5", "Q8", "F21"):
        G = preset(name)
        T = CharTable.of(G)
        seen = set()
        for s in range(G.n):
            key = frozenset(G.cyclic_subgroup(s))
            if key in seen:
                continue
            seen.add(key)
            sub = Subgroup.cyclic(G, s)
            subT = CharTable.of(sub.group)
            for i in range(subT.k):
                psi = VirtualChar.irreducible(subT, i)
                ind = induce(psi, sub, T)
                for t in range(T.k):
                    chi = VirtualChar.irreducible(T, t)
                    assert ind.inner(chi) == psi.inner(restrict(chi, sub, subT))


def test_restriction_values_match():
    G = preset("A4")
    T = CharTable.of(G)
    s = G.names.index("(1 2 3)")
    sub = Subgroup.cyclic(G, s)
    subT = CharTable.of(sub.group)
    three = next(t for t in range(T.k) if T.degrees[t] == 3)
    res = restrict(VirtualChar.irreducible(T, three), sub, subT)
    for i in range(sub.group.n):
        assert res.value(subT.class_of[i]) == \
            T.value(three, T.class_of[sub.to_parent[i]])


def test_to_dict_is_json_safe():
    import json
    for name in ("S3", "F21"):
        T = CharTable.of(preset(name))
        json.dumps(T.to_dict())
        json.dumps(T.certify())
