from fractions import Fraction

from greenrefl.combinatorics import partitions
from greenrefl.exact_arith import TRat
from greenrefl.symfunc import level_for, scalar_product
from greenrefl.wreath import (
    char_table,
    hall_littlewood,
    hl_data,
    kostka,
    kostka_matrix,
    z_series,
)

from test_symfunc import mn_character

P = lambda *comps: tuple(tuple(c) for c in comps)


# -- classical Kostka-Foulkes oracle (charge statistic) ------------------------


def ssyt_of_weight(shape, weight):
    """Semistandard tableaux of given shape and content, as row tuples."""
    rows = []

    def rec(partial, remaining):
        ri = len(partial)
        if ri == len(shape):
            if all(r == 0 for r in remaining):
                rows.append(tuple(partial))
            return
        rlen = shape[ri]
        above = partial[ri - 1] if ri else None

        def fill(row):
            pos = len(row)
            if pos == rlen:
                rem = list(remaining)
                ok = True
                for v in row:
                    rem[v] -= 1
                    if rem[v] < 0:
                        ok = False
                        break
                if ok:
                    rec(partial + [tuple(row)], tuple(rem))
                return
            lo = row[pos - 1] if pos else 0
            if above is not None:
                lo = max(lo, above[pos] + 1)
            for v in range(lo, len(weight)):
                fill(row + [v])

        fill([])

    rec([], tuple(weight))
    return rows


def charge(word):
    """Charge of a word with partition content (Lascoux-Schuetzenberger):
    extract standard subwords scanning right-to-left cyclically; within a
    standard subword the index grows by one whenever the next letter sits
    to the right of the previous one."""
    word = list(word)
    total = 0
    while word:
        n_letters = max(word) + 1
        taken = set()
        pos_list = []
        cur = len(word) - 1
        for target in range(n_letters):
            for _ in range(len(word)):
                if cur not in taken and word[cur] == target:
                    taken.add(cur)
                    pos_list.append(cur)
                    break
                cur = (cur - 1) % len(word)
            else:
                raise ValueError("content is not a partition")
            cur = (cur - 1) % len(word)
        idx = 0
        for a, b in zip(pos_list, pos_list[1:]):
            if b > a:
                idx += 1
            total += idx
        for i in sorted(taken, reverse=True):
            word.pop(i)
    return total


def kostka_foulkes_charge(lam, mu):
    """K_(lam,mu)(t) = sum over SSYT of shape lam, content mu of t^charge."""
    coeffs = {}
    for tab in ssyt_of_weight(lam, mu):
        word = []
        for row in reversed(tab):
            word.extend(row)
        c = charge(word)
        coeffs[c] = coeffs.get(c, 0) + 1
    return coeffs


# -- character tables -----------------------------------------------------------


def test_char_table_s3():
    table = char_table(1, 3)
    lv = table.level
    for lam in partitions(3):
        for mu in partitions(3):
            assert table.value(P(lam), P(mu)) == TRat.rational(
                mn_character(lam, mu), 1
            )
    assert table.value(P((2, 1)), P((1, 1, 1))) == TRat.rational(2, 1)
    assert table.value(P((2, 1)), P((2, 1))) == TRat.rational(0, 1)
    assert table.value(P((2, 1)), P((3,))) == TRat.rational(-1, 1)


def test_char_table_e2_n1():
    table = char_table(2, 1)
    a, b = P((1,), ()), P((), (1,))
    one = TRat.rational(1, 2)
    assert table.value(a, a) == one and table.value(a, b) == one
    assert table.value(b, a) == one and table.value(b, b) == -one


def test_trivial_character_row():
    for e, n in [(2, 2), (3, 2), (2, 3)]:
        table = char_table(e, n)
        triv = ((n,),) + ((),) * (e - 1)
        for beta in table.partitions:
            assert table.value(triv, beta) == table.level.one


def test_char_table_orthogonality():
    for e, n in [(1, 3), (2, 2), (3, 2), (4, 2)]:
        lv = level_for(e, n)
        chi = lv.char_table()
        size = lv.size
        # column orthogonality with centralizer orders
        for b1 in range(size):
            for b2 in range(size):
                acc = lv.zero_rat
                for a in range(size):
                    acc = acc + chi[a][b1] * chi[a][b2].conjugate()
                if b1 == b2:
                    assert acc == TRat.rational(
                        lv.z_int(lv.partitions[b1]), lv.E
                    )
                else:
                    assert acc.is_zero()


def test_z_series_examples():
    f = z_series(P((1,), ()))
    lv = level_for(2, 1)
    t = lv.t
    one = lv.one
    two = TRat.rational(2, 2)
    assert f == two / (one - t)
    f2 = z_series(P((1,), (1,)))
    four = TRat.rational(4, 2)
    assert f2 == four / ((one - t) * (one + t))
    lv1 = level_for(1, 1)
    assert z_series(P((1,))) == lv1.one / (lv1.one - lv1.t)


# -- Hall-Littlewood functions ---------------------------------------------------


def test_hl_top_class_is_schur():
    for e, n, r in [(1, 3, 1), (2, 2, 2), (3, 2, 2)]:
        lv = level_for(e, n)
        data = hl_data(lv, r)
        top = data.classes[0]
        for zi in top:
            alpha = data.order[zi]
            for c, v in enumerate(data.sp[zi]):
                expected = lv.one if lv.partitions[c] == alpha else lv.zero_rat
                assert v == expected
                assert data.sm[zi][c] == expected


def test_hl_specialization_at_zero():
    # P(x; 0) = s: every Schur coefficient is regular at t=0 and the value
    # at t=0 collapses to the unit vector
    for e, n, r in [(1, 3, 1), (2, 2, 2), (3, 3, 2)]:
        lv = level_for(e, n)
        data = hl_data(lv, r)
        for i, alpha in enumerate(data.order):
            for rows in (data.sp, data.sm):
                for c, v in enumerate(rows[i]):
                    val = v.eval_zero()
                    if lv.partitions[c] == alpha:
                        assert val.is_one()
                    else:
                        assert val.is_zero()


def test_hl_triangularity():
    # coefficient of s_beta in P_z vanishes unless beta is z or lies in a
    # strictly earlier... later class (beta strictly succeeds z in the order)
    for e, n, r in [(2, 2, 2), (3, 2, 2), (1, 4, 2)]:
        lv = level_for(e, n)
        data = hl_data(lv, r)
        class_of = {}
        for ci, cls in enumerate(data.classes):
            for zi in cls:
                class_of[data.order[zi]] = ci
        for i, alpha in enumerate(data.order):
            ca = class_of[alpha]
            for rows in (data.sp, data.sm):
                for c, v in enumerate(rows[i]):
                    beta = lv.partitions[c]
                    if v.is_zero():
                        continue
                    if beta == alpha:
                        assert v == lv.one
                    else:
                        assert class_of[beta] < ca, (alpha, beta)


def test_hl_orthogonality_and_duality():
    for e, n, r in [(2, 2, 2), (3, 2, 2), (2, 3, 1), (3, 3, 2)]:
        lv = level_for(e, n)
        data = hl_data(lv, r)
        class_of = {}
        for ci, cls in enumerate(data.classes):
            for zi in cls:
                class_of[zi] = ci
        size = len(data.order)
        # <P+_z, P-_z'> = 0 unless similar
        for i in range(size):
            for j in range(size):
                got = lv.scalar_from_p(data.pp[i], data.pm[j])
                if class_of[i] != class_of[j]:
                    assert got.is_zero(), (data.order[i], data.order[j])
        # <P+_z, Q-_z'> = delta and <Q+_z, P-_z'> = delta
        qm_p = [lv.p_coords_of_s_vector(v) for v in data.qm]
        qp_p = [lv.p_coords_of_s_vector(v) for v in data.qp]
        for i in range(size):
            for j in range(size):
                d1 = lv.scalar_from_p(data.pp[i], qm_p[j])
                d2 = lv.scalar_from_p(qp_p[i], data.pm[j])
                want = lv.one if i == j else lv.zero_rat
                assert d1 == want and d2 == want, (i, j)


def test_kostka_classical():
    # e = 1: Kostka matrix entries match the charge-statistic oracle
    for n, r in [(2, 1), (3, 1)]:
        lv = level_for(1, n)
        mat = kostka_matrix(lv, r, -1)
        order = [tuple(l.strip("()").split(";")) for l in mat.row_labels]
        data = hl_data(lv, r)
        for i, lam_t in enumerate(data.order):
            lam = lam_t[0]
            for j, mu_t in enumerate(data.order):
                mu = mu_t[0]
                expect = kostka_foulkes_charge(lam, mu)
                poly = mat.entries[i][j]
                assert poly.is_polynomial(), (lam, mu)
                got = {
                    d: c.to_fraction()
                    for d, c in enumerate(poly.num.coeffs)
                    if not c.is_zero()
                }
                assert got == {k: Fraction(v) for k, v in expect.items()}, (lam, mu)


def test_kostka_diagonal_blocks():
    for e, n, r, sign in [(2, 2, 2, -1), (3, 2, 2, +1), (3, 3, 2, -1)]:
        lv = level_for(e, n)
        mat = kostka_matrix(lv, r, sign)
        data = hl_data(lv, r)
        class_of = {}
        for ci, cls in enumerate(data.classes):
            for zi in cls:
                class_of[zi] = ci
        for i in range(len(data.order)):
            for j in range(len(data.order)):
                v = mat.entries[i][j]
                if i == j:
                    assert v == lv.one
                elif class_of[i] == class_of[j]:
                    assert v.is_zero()
                elif not v.is_zero():
                    assert class_of[j] < class_of[i]


def test_hall_littlewood_public():
    basis = hall_littlewood(2, 2, 2, +1)
    alpha = P((2,), ())
    assert basis.p_function(alpha)[alpha] == level_for(2, 2).one


def test_dual_cauchy_identity():
    # sum_L Q+_L(x) conj(P-_L(y)) = kernel = sum_a q_(a,-)(x) m_a(y),
    # in the (n, n) bidegree; same with P+ / Q- swapped
    from greenrefl.symfunc import SymPoly, VarSpace

    for e, n in [(1, 2), (2, 1), (2, 2)]:
        lv = level_for(e, n)
        data = hl_data(lv, 2)
        union = VarSpace(lv.space.m + lv.space.m)

        def build(rows, i):
            out = SymPoly.zero(lv.space)
            for c, v in enumerate(rows[i]):
                if not v.is_zero():
                    out = out + lv.schur(lv.partitions[c]).scale(v)
            return out

        kernel = SymPoly.zero(union)
        for alpha in lv.partitions:
            kernel = kernel + lv.q_product(alpha, -1).lift(union, 0) * lv.monomial(
                alpha
            ).lift(union, e)
        lhs1 = SymPoly.zero(union)
        lhs2 = SymPoly.zero(union)
        for i in range(len(data.order)):
            qp = build(data.qp, i).lift(union, 0)
            pm = build(data.sm, i).conjugate().lift(union, e)
            lhs1 = lhs1 + qp * pm
            pp = build(data.sp, i).lift(union, 0)
            qm = build(data.qm, i).conjugate().lift(union, e)
            lhs2 = lhs2 + pp * qm
        assert lhs1 == kernel, (e, n)
        assert lhs2 == kernel, (e, n)


def test_hl_cache_roundtrip(tmp_path, monkeypatch):
    import greenrefl.wreath as wreath_mod

    monkeypatch.setenv(wreath_mod.CACHE_ENV, str(tmp_path))
    lv = level_for(2, 2)
    fresh = wreath_mod._compute_hl(lv, 3)
    wreath_mod._store_cached_hl(fresh)
    files = list(tmp_path.iterdir())
    assert len(files) == 1 and files[0].name.endswith("_r3.json")
    loaded = wreath_mod._load_cached_hl(lv, 3)
    assert loaded.order == list(fresh.order) or tuple(loaded.order) == tuple(fresh.order)
    assert loaded.sp == fresh.sp and loaded.sm == fresh.sm
    assert loaded.qp == fresh.qp and loaded.qm == fresh.qm
    assert loaded.a_values == fresh.a_values
