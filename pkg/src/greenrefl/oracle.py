"""Brute-force verification oracle for G(e,p,n) and its twisted cosets.

Elements are monomial matrices stored as (perm, colors): w maps the basis
vector e_i to zeta^colors[i] * e_perm[i].  The oracle enumerates the group,
computes conjugacy classes, orbits on a coset, centralizer orders, and the
full character table by Dixon's method: the class-algebra structure
constants are simultaneously diagonalized over a prime field F_p with
p = 1 (mod exponent), and the eigenvalue data is lifted exactly to Q(zeta).

Everything here is independent of the symmetric-function machinery; it
exists to validate it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from math import gcd, isqrt

from .combinatorics import GroupParams
from .exact_arith import CycField

SIZE_CAP = 10 ** 6


def e_mul(w1, w2, e):
    x1, a1 = w1
    x2, a2 = w2
    perm = tuple(x1[i2] for i2 in x2)
    colors = tuple((a2[i] + a1[x2[i]]) % e for i in range(len(x2)))
    return perm, colors


def e_inv(w, e):
    x, a = w
    n = len(x)
    xi = [0] * n
    for i, j in enumerate(x):
        xi[j] = i
    colors = tuple((-a[xi[i]]) % e for i in range(n))
    return tuple(xi), colors


def element_order(w, e):
    n = len(w[0])
    identity = (tuple(range(n)), (0,) * n)
    cur = w
    order = 1
    while cur != identity:
        cur = e_mul(cur, w, e)
        order += 1
    return order


class BruteForceGroup:
    """Explicit model of W = G(e,p,n) (and the coset sigma^q W on demand)."""

    def __init__(self, params: GroupParams):
        if params.order > SIZE_CAP:
            raise ValueError(f"|W| = {params.order} exceeds the size cap {SIZE_CAP}")
        self.params = params
        e, p, n = params.e, params.p, params.n
        self.e = e
        self.n = n
        self.identity = (tuple(range(n)), (0,) * n)
        self.elements = [
            (perm, colors)
            for perm in permutations(range(n))
            for colors in product(range(e), repeat=n)
            if sum(colors) % p == 0
        ]
        self.index = {w: i for i, w in enumerate(self.elements)}
        gens = []
        for i in range(n - 1):
            perm = list(range(n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            gens.append((tuple(perm), (0,) * n))
        if p < e:
            gens.append((tuple(range(n)), (p,) + (0,) * (n - 1)))
        if n >= 2:
            colors = [0] * n
            colors[0], colors[1] = 1, e - 1
            perm = list(range(n))
            perm[0], perm[1] = 1, 0
            gens.append((tuple(perm), tuple(colors)))
        if not gens:
            gens.append((tuple(range(n)), (p % e,) + (0,) * (n - 1)))
        self.generators = [g for g in gens if sum(g[1]) % p == 0]
        self._classes = None
        self._coset_orbits = {}
        self._char_table = None

    @property
    def order(self):
        return len(self.elements)

    # -- conjugacy classes and coset orbits ---------------------------------

    def conjugacy_classes(self):
        if self._classes is None:
            self._classes = self._orbits(self.elements)
        return self._classes

    def coset_elements(self, q):
        e, p, n = self.e, self.params.p, self.n
        return [
            (perm, colors)
            for perm in permutations(range(n))
            for colors in product(range(e), repeat=n)
            if sum(colors) % p == q % p
        ]

    def coset_orbits(self, q):
        """W-orbits on the coset sigma^q W under conjugation."""
        if q not in self._coset_orbits:
            self._coset_orbits[q] = self._orbits(self.coset_elements(q))
        return self._coset_orbits[q]

    def _orbits(self, pool):
        e = self.e
        gen_pairs = [(g, e_inv(g, e)) for g in self.generators]
        remaining = set(pool)
        orbits = []
        for w in pool:
            if w not in remaining:
                continue
            orbit = {w}
            frontier = [w]
            while frontier:
                cur = frontier.pop()
                for g, gi in gen_pairs:
                    nxt = e_mul(g, e_mul(cur, gi, e), e)
                    if nxt not in orbit:
                        orbit.add(nxt)
                        frontier.append(nxt)
            remaining -= orbit
            orbits.append(sorted(orbit))
        orbits.sort(key=lambda o: o[0])
        return orbits

    def centralizer_order(self, w, q=None):
        pool = self.coset_orbits(q) if q is not None else self.conjugacy_classes()
        for orbit in pool:
            if w in orbit:
                return self.order // len(orbit)
        raise ValueError("element not in the requested coset")

    # -- canonical class representatives -------------------------------------

    def element_for_class_param(self, beta, b):
        """The coset element built from (beta, b): one cycle per part, its
        color at the leading index, except the first cycle which splits its
        color as (k - b, ..., b)."""
        e, n = self.e, self.n
        perm = list(range(n))
        colors = [0] * n
        pos = 0
        first = True
        for k, comp in enumerate(beta):
            for part in comp:
                idx = list(range(pos, pos + part))
                for i in range(part - 1):
                    perm[idx[i]] = idx[i + 1]
                perm[idx[-1]] = idx[0]
                if first:
                    colors[idx[0]] = (k - b) % e
                    colors[idx[-1]] = (colors[idx[-1]] + b) % e
                    first = False
                else:
                    colors[idx[0]] = k % e
                pos += part
        return tuple(perm), tuple(colors)

    def class_index_of(self, w, q=None):
        pool = self.coset_orbits(q) if q is not None else self.conjugacy_classes()
        for i, orbit in enumerate(pool):
            if w in orbit:
                return i
        raise ValueError("element not found")

    # -- Dixon character table ------------------------------------------------

    def exponent(self):
        m = 1
        for cls in self.conjugacy_classes():
            o = element_order(cls[0], self.e)
            m = m * o // gcd(m, o)
        return m

    def character_table(self):
        """Exact character table: rows are irreducible characters (in a
        deterministic but otherwise arbitrary order), columns follow
        ``conjugacy_classes``; values lie in Q(zeta_exponent)."""
        if self._char_table is None:
            self._char_table = _dixon(self)
        return self._char_table


def _find_prime(modulus, lower):
    """Smallest prime p = 1 (mod modulus) with p > lower."""
    k = max(1, (lower // modulus) + 1)
    while True:
        p = k * modulus + 1
        if p > lower and all(p % q for q in range(2, isqrt(p) + 1)):
            return p
        k += 1


def _kernel_mod_p(matrix, p):
    """Basis of the kernel of a square matrix over F_p."""
    k = len(matrix)
    a = [row[:] for row in matrix]
    piv_col_of_row = []
    row = 0
    for col in range(k):
        piv = None
        for r in range(row, k):
            if a[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = pow(a[row][col], p - 2, p)
        a[row] = [(x * inv) % p for x in a[row]]
        for r in range(k):
            if r != row and a[r][col] % p:
                f = a[r][col]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[row])]
        piv_col_of_row.append(col)
        row += 1
    pivots = set(piv_col_of_row)
    basis = []
    for col in range(k):
        if col in pivots:
            continue
        vec = [0] * k
        vec[col] = 1
        for r, pc in enumerate(piv_col_of_row):
            vec[pc] = (-a[r][col]) % p
        basis.append(vec)
    return basis


def _dixon(group):
    classes = group.conjugacy_classes()
    k = len(classes)
    reps = [cls[0] for cls in classes]
    sizes = [len(cls) for cls in classes]
    class_of = {}
    for i, cls in enumerate(classes):
        for w in cls:
            class_of[w] = i
    e = group.e
    inv_class = [class_of[e_inv(rep, e)] for rep in reps]

    # structure constants: M_i[j][l] = #{u in C_i : u^{-1} g_l in C_j}
    mats = []
    for i in range(k):
        mat = [[0] * k for _ in range(k)]
        for l, rep in enumerate(reps):
            for u in classes[i]:
                j = class_of[e_mul(e_inv(u, e), rep, e)]
                mat[j][l] += 1
        mats.append(mat)

    m = group.exponent()
    p = _find_prime(m, 2 * isqrt(group.order) + 1)

    # split the class algebra into one-dimensional common eigenspaces
    spaces = [[[1 if i == j else 0 for j in range(k)] for i in range(k)]]
    for mat in mats:
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            # restriction N of the matrix to the subspace: columns of N solve
            # M b_i = sum_j N[j][i] b_j;  set up the k x d system once
            d = len(basis)
            images = []
            for b in basis:
                img = [sum(mat[r][c] * b[c] for c in range(k)) % p for r in range(k)]
                images.append(img)
            # solve for coordinates of each image in the row space
            bt = [[basis[j][r] for j in range(d)] for r in range(k)]
            coords = _solve_mod_p(bt, [[img[r] for img in images] for r in range(k)], p)
            n_mat = [[coords[j][i] for i in range(d)] for j in range(d)]
            seen = 0
            for lam in range(p):
                shifted = [
                    [(n_mat[r][c] - (lam if r == c else 0)) % p for c in range(d)]
                    for r in range(d)
                ]
                ker = _kernel_mod_p(shifted, p)
                if ker:
                    sub = []
                    for coeffs in ker:
                        vec = [0] * k
                        for j, cf in enumerate(coeffs):
                            if cf:
                                for r in range(k):
                                    vec[r] = (vec[r] + cf * basis[j][r]) % p
                        sub.append(vec)
                    new_spaces.append(sub)
                    seen += len(ker)
                    if seen == d:
                        break
            if seen != d:
                raise ArithmeticError("class algebra failed to split")
        spaces = new_spaces

    rays = [space[0] for space in spaces]
    if len(rays) != k:
        raise ArithmeticError("wrong number of central characters")

    ident = class_of[group.identity]
    # normalize: the central character takes value |C_i| chi(g_i)/chi(1),
    # so the coordinate at the identity class is 1
    table_mod = []
    degrees = []
    for ray in rays:
        if ray[ident] % p == 0:
            raise ArithmeticError("degenerate ray")
        inv = pow(ray[ident], p - 2, p)
        w = [(x * inv) % p for x in ray]
        # chi(1)^2 = |G| / sum_j w_j w_{j*} / |C_j|
        denom = 0
        for j in range(k):
            denom = (denom + w[j] * w[inv_class[j]] * pow(sizes[j], p - 2, p)) % p
        val = (group.order % p) * pow(denom, p - 2, p) % p
        deg = None
        for cand in range(1, isqrt(group.order) + 1):
            if (cand * cand) % p == val:
                deg = cand
                break
        if deg is None:
            raise ArithmeticError("could not recover a character degree")
        degrees.append(deg)
        row = [
            (w[j] * deg % p) * pow(sizes[j], p - 2, p) % p for j in range(k)
        ]
        table_mod.append(row)

    # lift to Q(zeta_m): chi(g) = sum_l a_l zeta_o^l with
    # a_l = (1/o) sum_s chi^(g^s) z_o^(-l s) mod p, each a_l a small integer
    field = CycField(m)
    z = _element_of_order(m, p)
    orders = [element_order(rep, e) for rep in reps]
    power_class = []
    for rep, o in zip(reps, orders):
        pc = []
        cur = group.identity
        for _ in range(o):
            pc.append(class_of[cur])
            cur = e_mul(cur, rep, e)
        # pc[s] = class of rep^s with pc[0] the identity class
        power_class.append(pc)

    table = []
    for row_mod in table_mod:
        row = []
        for j in range(k):
            o = orders[j]
            zo = pow(z, m // o, p)
            inv_o = pow(o, p - 2, p)
            val = CycField(m).zero
            for l in range(o):
                acc = 0
                for s in range(o):
                    acc = (acc + row_mod[power_class[j][s]] * pow(zo, (-l * s) % o, p)) % p
                a_l = acc * inv_o % p
                if a_l > p // 2:
                    raise ArithmeticError("lifted multiplicity out of range")
                if a_l:
                    val = val + field.zeta((l * (m // o)) % m) * a_l
            row.append(val)
        table.append(row)
    return table


def _solve_mod_p(a, b, p):
    """Solve a x = b mod p for full-column-rank a (k x d), b (k x c)."""
    k, d = len(a), len(a[0])
    c = len(b[0])
    rows = [a[i][:] + b[i][:] for i in range(k)]
    r = 0
    piv_cols = []
    for col in range(d):
        piv = None
        for rr in range(r, k):
            if rows[rr][col] % p:
                piv = rr
                break
        if piv is None:
            raise ArithmeticError("singular system")
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for rr in range(k):
            if rr != r and rows[rr][col] % p:
                f = rows[rr][col]
                rows[rr] = [(x - f * y) % p for x, y in zip(rows[rr], rows[r])]
        piv_cols.append(col)
        r += 1
    return [rows[i][d:] for i in range(d)]


def _element_of_order(m, p):
    """An element of exact multiplicative order m in F_p (m | p-1)."""
    for g in range(2, p):
        x = pow(g, (p - 1) // m, p)
        if x == 1:
            continue
        ok = True
        for q in range(2, m + 1):
            if m % q == 0 and all(q % r for r in range(2, isqrt(q) + 1)):
                if pow(x, m // q, p) == 1:
                    ok = False
                    break
        if ok:
            return x
    raise ArithmeticError("no element of the requested order")


@dataclass
class GroupReport:
    """Summary data produced by the brute-force oracle."""

    params: GroupParams
    order: int
    class_count: int
    class_sizes: list
    centralizers: list
    coset_orbit_counts: dict = field(default_factory=dict)


def brute_force_oracle(params: GroupParams):
    group = BruteForceGroup(params)
    classes = group.conjugacy_classes()
    report = GroupReport(
        params=params,
        order=group.order,
        class_count=len(classes),
        class_sizes=[len(c) for c in classes],
        centralizers=[group.order // len(c) for c in classes],
    )
    report.coset_orbit_counts[params.q] = len(group.coset_orbits(params.q))
    return group, report
