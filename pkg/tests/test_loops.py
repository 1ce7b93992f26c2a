from itertools import permutations, product

import pytest

from hopfloop.errors import FormatError, IndexOutOfRange, NoIdentity, NotAGroup, NotALoop
from hopfloop.fixtures import (
    cyclic_table,
    ip7_non_moufang_table,
    latin5_non_ip_table,
    symmetric_table,
)
from hopfloop.loops import (
    analyze_loop,
    chein_double,
    check_loop_identity,
    check_quasigroup,
    compose_perm,
    invert_perm,
    is_loop_automorphism,
    loop_automorphisms,
    parse_cayley,
    set_galois_bijective,
    table_from_rows,
)


def test_parse_text_and_json():
    t = parse_cayley(b"order 2\n0 1\n1 0\n")
    assert t.order == 2 and t.table == ((0, 1), (1, 0))
    t2 = parse_cayley('{"order": 2, "table": [[0, 1], [1, 0]], "name": "c2"}')
    assert t2.table == t.table and t2.name == "c2"


def test_parse_normalizes_identity_to_zero():
    # cyclic group of order 3 with its identity parked at index 2
    shifted = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    t = table_from_rows(shifted)
    assert t.identity == 0
    assert t.table == cyclic_table(3).table


def test_parse_errors():
    with pytest.raises(FormatError):
        parse_cayley("order x\n")
    with pytest.raises(FormatError):
        parse_cayley("order 2\n0 1\n")
    with pytest.raises(IndexOutOfRange):
        parse_cayley("order 2\n0 1\n1 5\n")
    with pytest.raises(NoIdentity):
        parse_cayley("order 2\n1 1\n1 1\n")
    with pytest.raises(FormatError):
        parse_cayley('{"order": 2}')


def test_parser_accepts_non_quasigroups():
    # identity lives at 1; the first input row repeats an element
    t = table_from_rows([[0, 0, 2], [0, 1, 2], [2, 2, 2]])
    rep = check_quasigroup(t)
    assert not rep.latin
    assert rep.witnesses["latin"][0] in ("row", "col")


def test_check_quasigroup_c2():
    rep = check_quasigroup(cyclic_table(2))
    assert rep.latin and rep.has_identity and rep.ip
    assert rep.inverse == (0, 1)


def test_repeated_row_magma():
    t = table_from_rows([[0, 1, 2], [1, 1, 1], [2, 1, 0]])
    rep = check_quasigroup(t)
    assert not rep.latin
    assert rep.witnesses["latin"] == ("row", 1)
    assert not set_galois_bijective(t, "t1")


def test_latin5_fixture_is_latin_but_not_ip():
    t = latin5_non_ip_table()
    rep = check_quasigroup(t)
    assert rep.latin and rep.has_identity and not rep.ip
    assert "ip" in rep.witnesses


def test_loop_identities_on_groups_and_m12(s3, m12):
    assert check_loop_identity(s3, "moufang") == (True, None)
    assert check_loop_identity(s3, "associative") == (True, None)
    ok, wit = check_loop_identity(m12, "moufang")
    assert ok and wit is None
    ok, wit = check_loop_identity(m12, "associative")
    assert not ok
    # independent lexicographic-first oracle over all triples
    tab = m12.table
    expected = next(
        (u, v, w)
        for u in range(12)
        for v in range(12)
        for w in range(12)
        if tab[tab[u][v]][w] != tab[u][tab[v][w]]
    )
    assert wit == expected


def test_ip7_fixture_properties():
    rep = analyze_loop(ip7_non_moufang_table())
    assert rep.latin and rep.ip and rep.flexible
    assert not rep.alternative and not rep.moufang and not rep.associative


def test_check_loop_identity_requires_loop():
    t = table_from_rows([[0, 1, 2], [1, 1, 1], [2, 1, 0]])
    with pytest.raises(NotALoop):
        check_loop_identity(t, "moufang")


def test_moufang_implies_flexible_alternative(m12):
    rep = analyze_loop(m12)
    assert rep.moufang and rep.flexible and rep.alternative


def test_set_galois_bijective_matches_latin_small_orders():
    # every identity table of order <= 3, by brute force
    for n in (1, 2, 3):
        for body in product(range(n), repeat=(n - 1) * (n - 1)):
            rows = [list(range(n))]
            it = iter(body)
            for i in range(1, n):
                rows.append([i] + [next(it) for _ in range(n - 1)])
            t = table_from_rows(rows)
            rep = check_quasigroup(t)
            both = set_galois_bijective(t, "t1") and set_galois_bijective(t, "t2")
            assert rep.latin == both


def test_chein_double_of_c2_is_group():
    doubled = chein_double(cyclic_table(2))
    rep = analyze_loop(doubled)
    assert doubled.order == 4
    assert rep.associative and rep.moufang and rep.ip


def test_chein_double_of_s3(s3, m12):
    rep = analyze_loop(m12)
    assert m12.order == 12
    assert rep.latin and rep.ip and rep.moufang and not rep.associative
    # identity of the double is the embedded identity of the group
    assert m12.table[0][5] == 5 and m12.table[7][0] == 7
    # frozen orientation: g * (h u) = (h g) u
    for g in range(6):
        for h in range(6):
            assert m12.table[g][h + 6] == s3.table[h][g] + 6


def test_chein_double_rejects_non_groups():
    with pytest.raises(NotAGroup):
        chein_double(latin5_non_ip_table())
    with pytest.raises(NotAGroup):
        chein_double(ip7_non_moufang_table())


def test_automorphisms_c2_trivial():
    assert loop_automorphisms(cyclic_table(2)) == [(0, 1)]


def test_automorphisms_s3_brute_force_oracle(s3):
    autos = loop_automorphisms(s3)
    oracle = [
        (0,) + rest
        for rest in permutations(range(1, 6))
        if is_loop_automorphism(s3, (0,) + rest)
    ]
    assert autos == sorted(oracle)
    assert len(autos) == 6


def _automorphisms_by_generator_images(t):
    """Independent strategy: pick generators greedily, try all image tuples,
    extend by products, then verify."""
    n = t.order
    gens = []
    span = {0}
    while len(span) < n:
        nxt = min(set(range(n)) - span)
        gens.append(nxt)
        changed = True
        span.add(nxt)
        while changed:
            changed = False
            for a in list(span):
                for b in list(span):
                    c = t.table[a][b]
                    if c not in span:
                        span.add(c)
                        changed = True
    found = []
    for images in product(range(n), repeat=len(gens)):
        sigma = {0: 0}
        for g, img in zip(gens, images):
            sigma[g] = img
        ok = True
        changed = True
        while changed and ok:
            changed = False
            for a in list(sigma):
                for b in list(sigma):
                    c = t.table[a][b]
                    img = t.table[sigma[a]][sigma[b]]
                    if c in sigma:
                        if sigma[c] != img:
                            ok = False
                            break
                    else:
                        sigma[c] = img
                        changed = True
                if not ok:
                    break
        if not ok or len(sigma) != n:
            continue
        cand = tuple(sigma[i] for i in range(n))
        if is_loop_automorphism(t, cand):
            found.append(cand)
    return sorted(found)


def test_automorphisms_m12_cross_check(m12):
    backtracked = loop_automorphisms(m12, strategy="backtrack")
    generated = _automorphisms_by_generator_images(m12)
    assert backtracked == generated
    assert len(backtracked) == 108


def test_automorphisms_form_a_group(m12):
    autos = loop_automorphisms(m12)
    auto_set = set(autos)
    sample = autos[:6] + autos[-6:]
    for a in sample:
        assert invert_perm(a) in auto_set
        for b in sample:
            assert compose_perm(a, b) in auto_set


def test_automorphism_strategies_agree_small(s3):
    assert loop_automorphisms(s3, strategy="bruteforce") == loop_automorphisms(s3, strategy="backtrack")


def test_loop_automorphisms_requires_loop():
    t = table_from_rows([[0, 1, 2], [1, 1, 1], [2, 1, 0]])
    with pytest.raises(NotALoop):
        loop_automorphisms(t)
