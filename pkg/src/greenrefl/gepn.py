"""The twisted-coset layer for W = G(e,p,n).

Symmetric functions attached to the coset sigma^q W are p-tuples: the j-th
component lives in the contracted variables

    X_i^(k) = x_i^(k) x_i^(k+jd) ... x_i^(k+(h-1)jd),   0 <= k < j1*d,

(h the order of j mod p, j1 = gcd(j, p)), carries the root of unity
zeta^h and the deformation parameter t^h.  Components are stored as
coordinate vectors over the partitions of the corresponding sub-level, so
all computations reduce to the wreath-product machinery plus bookkeeping.

The coset character table is the transition matrix from tuple power sums
to tuple Schur functions; Kostka matrices come either from the transition
to tuple Hall-Littlewood functions or from the block assembly out of
sub-level Kostka matrices; and the Green-function suite packages

    Ktilde(+/-) = K(+/-)(t^(-1)) T,      T = diag(t^(a(z))),
    LambdaTilde = t^(-n) G(t) T^(-1) Lambda(t^(-1)) T,
    OmegaPrime  = G(t) sum_xi X(0)-row outer products / det(t id - w_xi),

and checks the factorization Ktilde- LambdaTilde tr(Ktilde+) = OmegaPrime
exactly.
"""

from __future__ import annotations


from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .combinatorics import (
    GroupParams,
    alpha_divide,
    alpha_truncate,
    class_multiplicity,
    delta,
    divide_condition,
    enumerate_class_params,
    ep_length,
    orbit_data,
    similarity_order,
)
from .exact_arith import CycField, TPoly, TRat
from .symfunc import BasisExpansion, Level
from .wreath import LabeledMatrix, hl_data

_ALGEBRAS = {}


def coset_algebra(params, r=2):
    key = (params, r)
    if key not in _ALGEBRAS:
        _ALGEBRAS[key] = CosetAlgebra(params, r)
    return _ALGEBRAS[key]


@dataclass(frozen=True)
class TupleFun:
    """A p-tuple of sub-level symmetric functions in coordinate form.

    comps maps a component index j to (basis, coeffs) where coeffs is the
    coordinate vector over the partitions of the sub-level at j.
    """

    params: GroupParams
    comps: dict

    def component(self, j):
        return self.comps.get(j)


class CosetAlgebra:
    """All data attached to (G(e,p,n), coset q, symbol shift r)."""

    def __init__(self, params, r=2):
        self.params = params
        self.r = r
        e, p, n, q = params.e, params.p, params.n, params.q
        self.field = CycField(e)
        sim = similarity_order(params, r)
        self.char_classes = sim.classes
        self.class_a_values = sim.a_values
        self.chars = [z for cls in sim.classes for z in cls]
        self.char_index = {z: i for i, z in enumerate(self.chars)}
        self.a_of = {}
        for cls, a in zip(sim.classes, sim.a_values):
            for z in cls:
                self.a_of[z] = a
        self.class_params = enumerate_class_params(params)
        self.class_index = {xi: i for i, xi in enumerate(self.class_params)}
        if len(self.chars) != len(self.class_params):
            raise ArithmeticError("character/class count mismatch")
        # sub-levels: j -> Level with zeta^h and n/h
        self.levels = {}
        self.h_of = {}
        for j in range(p):
            h = params.h_of(j)
            if n % h:
                continue
            ecols = params.j1_of(j) * params.d
            self.levels[j] = Level(e, h, ecols, n // h)
            self.h_of[j] = h
        self.zero = TRat(TPoly(self.field, ()), reduce=False)
        self.one = TRat.from_cyc(self.field.one)
        self.t = TRat.t(self.field)
        self._keys = None
        self._xmats = {}
        self._coset_table = None
        self._kostka = {}
        self._green = None
        self._lambda = None

    # -- roots of unity -------------------------------------------------------

    def zeta_pow(self, k):
        return self.field.zeta(k % self.params.e)

    def conjugation_permutation(self):
        """Index permutation induced by complex conjugation of the
        characters, located by matching conjugated table columns (the
        label arithmetic alone does not determine it: a stabilizer
        character can conjugate to itself).  Falls back to the identity
        when no exact match exists (possible for twisted cosets, where
        conjugate extensions may differ by a phase)."""
        table = self.coset_table()
        nclasses = len(self.class_params)
        k = len(self.chars)
        cols = [tuple(table[i][z] for i in range(nclasses)) for z in range(k)]
        index = {col: z for z, col in enumerate(cols)}
        perm = []
        for z in range(k):
            conj_col = tuple(v.conjugate() for v in cols[z])
            w = index.get(conj_col)
            if w is None:
                return list(range(k))
            perm.append(w)
        return perm

    def phi_value(self, z, j):
        """phi(tau^j) for the stabilizer character labelled z.phi."""
        return self.zeta_pow(z.phi * self.params.d * j)

    # -- tuple functions ------------------------------------------------------

    def tuple_schur(self, z):
        return self._tuple_from_units(z, "schur")

    def tuple_q(self, z, sign):
        return self._tuple_from_units(z, "qplus" if sign > 0 else "qminus")

    def tuple_monomial(self, z):
        return self._tuple_from_units(z, "monomial")

    def _tuple_from_units(self, z, basis):
        """Components phi(tau^j) sum_i zeta^(q i d) B_(theta^i(alpha)
        truncated), for B one of the classical bases of the sub-level."""
        params = self.params
        orbit, c = orbit_data(z.alpha, params.p)
        comps = {}
        for j, level in self.levels.items():
            if j % c:
                continue
            scale = TRat.from_cyc(self.phi_value(z, j))
            vec = [self.zero] * level.size
            for i in range(c):
                trunc = alpha_truncate(orbit[i], j, params)
                w = self.zeta_pow(params.q * i * params.d)
                idx = level.pindex[trunc]
                vec[idx] = vec[idx] + scale.scale_cyc(w)
            comps[j] = (basis, vec)
        return TupleFun(params, comps)

    def tuple_powersum(self, xi):
        """Components h^len * zeta^(-(delta+b) j d) p_(beta[j])."""
        params = self.params
        comps = {}
        for j, level in self.levels.items():
            if not divide_condition(xi.beta, j, params):
                continue
            divided = alpha_divide(xi.beta, j, params)
            h = self.h_of[j]
            coeff = self.zeta_pow(-(delta(xi.beta) + xi.b) * j * params.d) * (
                h ** ep_length(divided)
            )
            vec = [self.zero] * level.size
            vec[level.pindex[divided]] = TRat.from_cyc(coeff)
            comps[j] = ("powersum", vec)
        return TupleFun(params, comps)

    def tuple_hall_littlewood(self, z, sign):
        """Assembled from sub-level Hall-Littlewood functions, with the
        deformation parameter t^h in component j."""
        params = self.params
        orbit, c = orbit_data(z.alpha, params.p)
        comps = {}
        for j, level in self.levels.items():
            if j % c:
                continue
            data = hl_data(level, self.r)
            rows = data.sp if sign > 0 else data.sm
            h = self.h_of[j]
            scale = TRat.from_cyc(self.phi_value(z, j))
            vec = [self.zero] * level.size
            for i in range(c):
                trunc = alpha_truncate(orbit[i], j, params)
                w = scale.scale_cyc(self.zeta_pow(params.q * i * params.d))
                row = rows[data.index(trunc)]
                for cidx in range(level.size):
                    val = row[cidx]
                    if val.is_zero():
                        continue
                    if h != 1:
                        val = val.subst_power(h)
                    vec[cidx] = vec[cidx] + w * val
            comps[j] = ("schur", vec)
        return TupleFun(params, comps)

    # -- scalar product ---------------------------------------------------------

    def component_p_coords(self, fun, j):
        """Power-sum coordinates of component j.

        A component (basis, vec) stands for sum_g vec[g] B_g(X_j; t^h): the
        stored coefficients are already in terms of the global t, while the
        basis functions carry the sub-level parameter t^h.  Conversion to
        power sums is t-free for Schur/monomial bases, but t-dependent for
        the q bases, where the conversion output needs t -> t^h."""
        comp = fun.component(j)
        if comp is None:
            return None
        basis, vec = comp
        level = self.levels[j]
        if basis == "powersum":
            return vec
        if basis == "schur":
            return level.p_coords_of_s_vector(vec)
        mat = level.basis_matrix(basis)
        mvec = [
            _dot_col(vec, mat, col, self.zero) for col in range(level.size)
        ]
        pcoords = level.expand_mcoords(mvec, "powersum")
        h = self.h_of[j]
        if h != 1 and basis in ("qplus", "qminus"):
            pcoords = [c.subst_power(h) for c in pcoords]
        return pcoords

    def tuple_scalar(self, f, g):
        """(1/p) sum_j <f_j, g_j> with zeta^h and t^h at component j."""
        total = self.zero
        for j, level in self.levels.items():
            u = self.component_p_coords(f, j)
            v = self.component_p_coords(g, j)
            if u is None or v is None:
                continue
            h = self.h_of[j]
            total = total + level.scalar_from_p(u, v, subst=h)
        return total.scale_cyc(self.field.from_rational(Fraction(1, self.params.p)))

    # -- stacked Schur coordinates and transition matrices -----------------------

    def keys(self):
        if self._keys is None:
            self._keys = [
                (j, idx)
                for j in sorted(self.levels)
                for idx in range(self.levels[j].size)
            ]
        return self._keys

    def stack_schur(self, fun):
        """Stacked Schur coordinates of a tuple function."""
        out = []
        for j in sorted(self.levels):
            level = self.levels[j]
            comp = fun.component(j)
            if comp is None:
                out.extend([self.zero] * level.size)
                continue
            basis, vec = comp
            if basis == "schur":
                out.extend(vec)
            elif basis == "powersum":
                # p_gamma = sum_delta chi[delta][gamma] s_delta (t-free)
                chi = level.char_table()
                svec = [self.zero] * level.size
                for gidx, cval in enumerate(vec):
                    if cval.is_zero():
                        continue
                    for didx in range(level.size):
                        w = chi[didx][gidx]
                        if not w.is_zero():
                            svec[didx] = svec[didx] + cval * w
                out.extend(svec)
            else:
                conv = level.convert(BasisExpansion(level, basis, tuple(vec)), "schur")
                out.extend(conv.coeffs)
        return out

    def _x_matrix(self, which):
        """Transition matrix M(Bp, B?) with rows indexed by class params:
        which is 's' (tuple Schur), '+' or '-' (tuple Hall-Littlewood)."""
        if which not in self._xmats:
            if which == "s":
                basis_rows = [self.stack_schur(self.tuple_schur(z)) for z in self.chars]
            else:
                sign = 1 if which == "+" else -1
                basis_rows = [
                    self.stack_schur(self.tuple_hall_littlewood(z, sign))
                    for z in self.chars
                ]
            p_rows = [
                self.stack_schur(self.tuple_powersum(xi)) for xi in self.class_params
            ]
            a_mat = [list(col) for col in zip(*basis_rows)]       # keys x chars
            b_mat = [list(col) for col in zip(*p_rows)]           # keys x classes
            xt = linalg.solve(a_mat, b_mat)                       # chars x classes
            self._xmats[which] = [list(row) for row in zip(*xt)]  # classes x chars
        return self._xmats[which]

    def x_plus(self):
        return self._x_matrix("+")

    def x_minus(self):
        return self._x_matrix("-")

    # -- the coset character table ------------------------------------------------

    def coset_table(self):
        """X(0): rows class params, columns char params, values in Z[zeta]."""
        if self._coset_table is None:
            xs = self._x_matrix("s")
            table = []
            for row in xs:
                crow = []
                for v in row:
                    if not v.is_constant():
                        raise ArithmeticError("non-constant coset table entry")
                    crow.append(v.to_cyc())
                table.append(crow)
            self._coset_table = table
        return self._coset_table

    def z_integer(self, xi):
        """|Z_W(w_xi)| = (r_beta / p) z_beta."""
        level0 = self.levels[0]
        r_beta = class_multiplicity(xi.beta, self.params)
        z_full = level0.z_int(xi.beta)
        num = r_beta * z_full
        if num % self.params.p:
            raise ArithmeticError("centralizer order is not integral")
        return num // self.params.p

    def z_coset_series(self, xi):
        """z_(beta,b)(t) = |Z_W(w)| / prod (1 - zeta^k t^part)."""
        level0 = self.levels[0]
        zt = level0.z_series(xi.beta)
        frac = Fraction(class_multiplicity(xi.beta, self.params), self.params.p)
        return zt.scale_cyc(self.field.from_rational(frac))

    def orthogonality_holds(self):
        """(4.1.2): sum_xi X[xi,z] conj(X[xi,z']) / z_xi = delta."""
        table = self.coset_table()
        zs = [self.z_integer(xi) for xi in self.class_params]
        k = len(self.chars)
        for a in range(k):
            for b in range(k):
                acc = self.field.zero
                for i in range(len(self.class_params)):
                    acc = acc + table[i][a] * table[i][b].conjugate() * Fraction(
                        1, zs[i]
                    )
                want = self.field.one if a == b else self.field.zero
                if acc != want:
                    return False
        return True

    # -- Kostka matrices -------------------------------------------------------------

    def kostka_direct(self, sign):
        """M(Bs, BP(sign)) by the stacked linear solve."""
        key = ("direct", sign)
        if key not in self._kostka:
            basis_rows = [
                self.stack_schur(self.tuple_hall_littlewood(z, sign))
                for z in self.chars
            ]
            s_rows = [self.stack_schur(self.tuple_schur(z)) for z in self.chars]
            a_mat = [list(col) for col in zip(*basis_rows)]
            b_mat = [list(col) for col in zip(*s_rows)]
            kt = linalg.solve(a_mat, b_mat)
            self._kostka[key] = [list(row) for row in zip(*kt)]
        return self._kostka[key]

    def kostka_assembled(self, sign):
        """The block assembly from sub-level Kostka matrices: for
        z = (alpha, phi_f), z' = (alpha', phi'_g) with orbit sizes c, c',

          K[z,z'] = (c/p) sum_(i < p/c') zeta^(d c' i (f-g)) L^(c' i)

        where L^j sums zeta^(-q i' d) K_(level j)[alpha{j}, theta^i'(alpha'){j}]
        (parameter t^h) over the orbit of alpha', and vanishes unless the
        truncations exist at j."""
        key = ("assembled", sign)
        if key not in self._kostka:
            params = self.params
            p, d, q = params.p, params.d, params.q
            base = {}
            for j, level in self.levels.items():
                data = hl_data(level, self.r)
                kmat = _kostka_by_partition(level, data, sign)
                base[j] = (data, kmat)
            size = len(self.chars)
            out = [[self.zero] * size for _ in range(size)]
            for zi, z in enumerate(self.chars):
                orbit_z, c = orbit_data(z.alpha, params.p)
                for wi, w in enumerate(self.chars):
                    orbit_w, cw = orbit_data(w.alpha, params.p)
                    acc = self.zero
                    for i in range(p // cw):
                        j = cw * i
                        if j % c or j not in self.levels:
                            continue
                        h = self.h_of[j]
                        level = self.levels[j]
                        kmat = base[j][1]
                        trunc_z = alpha_truncate(z.alpha, j, params)
                        lval = self.zero
                        for ip in range(cw):
                            trunc_w = alpha_truncate(orbit_w[ip], j, params)
                            entry = kmat[(trunc_z, trunc_w)]
                            if entry.is_zero():
                                continue
                            if h != 1:
                                entry = entry.subst_power(h)
                            lval = lval + entry.scale_cyc(
                                self.zeta_pow(-q * ip * d)
                            )
                        if lval.is_zero():
                            continue
                        phase = self.zeta_pow(d * cw * i * (z.phi - w.phi))
                        acc = acc + lval.scale_cyc(phase)
                    out[zi][wi] = acc.scale_cyc(self.field.from_rational(Fraction(c, p)))
            self._kostka[key] = out
        return self._kostka[key]

    # -- Lambda and the Green suite ----------------------------------------------------

    def z_diagonal(self):
        return [self.z_coset_series(xi) for xi in self.class_params]

    def lambda_matrix(self):
        """Lambda(t) from conj(X-) Lambda tr(X+) = Z(t)."""
        if self._lambda is None:
            xm = self.x_minus()
            xp = self.x_plus()
            zdiag = self.z_diagonal()
            k = len(self.chars)
            xm_conj = [[v.conjugate() for v in row] for row in xm]
            zmat = [
                [zdiag[i] if i == j else self.zero for j in range(k)]
                for i in range(k)
            ]
            w = linalg.solve(xm_conj, zmat)          # w = Lambda tr(X+)
            lam_t = linalg.solve([list(r) for r in xp], [list(r) for r in zip(*w)])
            self._lambda = [list(row) for row in zip(*lam_t)]
        return self._lambda

    def n_star(self):
        params = self.params
        return params.e * params.n * (params.n - 1) // 2 + params.n * (params.d - 1)

    def g_poly(self):
        """G(t) = t^(N*) (zeta^(qd) t^(dn) - 1) prod_(i<n) (t^(ei) - 1)."""
        params = self.params
        field = self.field
        out = TRat(TPoly.t_power(field, self.n_star()), reduce=False)
        lead = TRat(
            TPoly.t_power(field, params.d * params.n,
                          field.zeta((params.q * params.d) % params.e))
        ) - self.one
        out = out * lead
        for i in range(1, params.n):
            out = out * (TRat(TPoly.t_power(field, params.e * i)) - self.one)
        return out

    def det_poly(self, beta):
        """det(t id - w) = prod over parts (t^part - zeta^k)."""
        field = self.field
        poly = TPoly.constant(field.one)
        for k, comp in enumerate(beta):
            for part in comp:
                factor = TPoly(
                    field,
                    [-field.zeta(k % field.e)]
                    + [field.zero] * (part - 1)
                    + [field.one],
                )
                poly = poly * factor
        return poly

    def det_of_class(self, beta):
        """det_M(w_beta(b)) = (-1)^(n - length) zeta^(delta(beta))."""
        sign = (-1) ** (self.params.n - ep_length(beta))
        return self.field.zeta(delta(beta) % self.params.e) * sign

    def omega_prime(self):
        """O'[z,z'] = G(t) sum_xi X[xi,z] conj(X[xi,z']) / (z_xi det_xi)."""
        table = self.coset_table()
        g = self.g_poly()
        k = len(self.chars)
        out = [[self.zero] * k for _ in range(k)]
        for i, xi in enumerate(self.class_params):
            weight = g.scale_cyc(self.field.from_rational(
                Fraction(1, self.z_integer(xi))
            )) * TRat(TPoly.constant(self.field.one), self.det_poly(xi.beta))
            row = table[i]
            conj_row = [v.conjugate() for v in row]
            for a in range(k):
                if row[a].is_zero():
                    continue
                wa = weight.scale_cyc(row[a])
                for b in range(k):
                    if conj_row[b].is_zero():
                        continue
                    out[a][b] = out[a][b] + wa.scale_cyc(conj_row[b])
        return out

    def fake_degree(self, z):
        """R_q(chi~^z) by the class sum; a polynomial for q = 0."""
        params = self.params
        table = self.coset_table()
        zi = self.char_index[z]
        lead = TRat(
            TPoly.t_power(self.field, params.d * params.n,
                          self.field.zeta((params.q * params.d) % params.e))
        ) - self.one
        for i in range(1, params.n):
            lead = lead * (TRat(TPoly.t_power(self.field, params.e * i)) - self.one)
        acc = self.zero
        for i, xi in enumerate(self.class_params):
            val = table[i][zi]
            if val.is_zero():
                continue
            num = self.det_of_class(xi.beta) * val * Fraction(1, self.z_integer(xi))
            acc = acc + TRat(TPoly.constant(num), self.det_poly(xi.beta))
        return lead * acc

    def green(self):
        if self._green is None:
            self._green = self._compute_green()
        return self._green

    def _compute_green(self):
        k = len(self.chars)
        a_diag = [self.a_of[z] for z in self.chars]
        kostka = {s: self.kostka_assembled(s) for s in (+1, -1)}
        t = self.t

        def t_pow(a):
            return TRat(TPoly.t_power(self.field, a), reduce=False)

        ktilde = {}
        for s in (+1, -1):
            mat = []
            for i in range(k):
                row = []
                for j in range(k):
                    v = kostka[s][i][j]
                    if v.is_zero():
                        row.append(v)
                    else:
                        row.append(v.subst_tinv() * t_pow(a_diag[j]))
                mat.append(row)
            ktilde[s] = mat
        lam = self.lambda_matrix()
        # block-diagonality on similarity classes is asserted, not assumed
        blocks = [len(cls) for cls in self.char_classes]
        starts = []
        pos = 0
        for b in blocks:
            starts.append(pos)
            pos += b
        block_of = {}
        for bi, (s0, b) in enumerate(zip(starts, blocks)):
            for i in range(s0, s0 + b):
                block_of[i] = bi
        for i in range(k):
            for j in range(k):
                if block_of[i] != block_of[j] and not lam[i][j].is_zero():
                    raise ArithmeticError(
                        "Lambda is not block diagonal on similarity classes"
                    )
        gfac = self.g_poly() * TRat(
            TPoly.t_power(self.field, self.params.n), reduce=False
        ).inverse()
        lam_tilde = []
        for i in range(k):
            row = []
            for j in range(k):
                v = lam[i][j]
                if v.is_zero():
                    row.append(v)
                else:
                    # T^(-1) Lambda(t^(-1)) T^(-1), then t^(-n) G(t)
                    w = v.subst_tinv() / t_pow(a_diag[i] + a_diag[j])
                    row.append(w * gfac)
            lam_tilde.append(row)
        omega = self.omega_prime()
        product = linalg.mat_mul(
            linalg.mat_mul(ktilde[-1], lam_tilde),
            [list(col) for col in zip(*ktilde[+1])],
        )
        residual_zero = all(
            (product[i][j] - omega[i][j]).is_zero() for i in range(k) for j in range(k)
        )
        labels = [z.label() for z in self.chars]
        # symmetric presentation: columns relabeled by character conjugation
        # (this is the form the reference tables display)
        sigma = self.conjugation_permutation()
        lam_sym = [[lam_tilde[i][sigma[j]] for j in range(k)] for i in range(k)]
        return GreenSuite(
            params=self.params,
            r=self.r,
            char_params=list(self.chars),
            labels=labels,
            blocks=blocks,
            a_diag=a_diag,
            ktilde_minus=LabeledMatrix(labels, labels, ktilde[-1], blocks, blocks),
            ktilde_plus=LabeledMatrix(labels, labels, ktilde[+1], blocks, blocks),
            lambda_tilde=LabeledMatrix(labels, labels, lam_tilde, blocks, blocks),
            lambda_symmetric=LabeledMatrix(labels, labels, lam_sym, blocks, blocks),
            omega_prime=LabeledMatrix(labels, labels, omega, blocks, blocks),
            residual_zero=residual_zero,
        )


def _dot_col(vec, mat, col, zero):
    acc = zero
    for i, v in enumerate(vec):
        if not v.is_zero():
            w = mat[i][col]
            if not w.is_zero():
                acc = acc + v * w
    return acc


def _kostka_by_partition(level, data, sign):
    """Sub-level Kostka entries keyed by (row partition, column partition)."""
    size = len(data.order)
    perm = [level.pindex[alpha] for alpha in data.order]
    rows = data.sp if sign > 0 else data.sm
    u = [[rows[i][perm[j]] for j in range(size)] for i in range(size)]
    k = linalg.invert(u)
    out = {}
    for i, ai in enumerate(data.order):
        for j, aj in enumerate(data.order):
            out[(ai, aj)] = k[i][j]
    return out


@dataclass
class GreenSuite:
    """The Green-function data of one (e,p,n,q,r)."""

    params: GroupParams
    r: int
    char_params: list
    labels: list
    blocks: list
    a_diag: list
    ktilde_minus: LabeledMatrix
    ktilde_plus: LabeledMatrix
    lambda_tilde: LabeledMatrix
    lambda_symmetric: LabeledMatrix
    omega_prime: LabeledMatrix
    residual_zero: bool

    def to_json(self):
        return {
            "e": self.params.e,
            "p": self.params.p,
            "n": self.params.n,
            "q": self.params.q,
            "r": self.r,
            "blocks": self.blocks,
            "a_values": self.a_diag,
            "ktilde_minus": self.ktilde_minus.to_json(),
            "ktilde_plus": self.ktilde_plus.to_json(),
            "lambda_tilde": self.lambda_tilde.to_json(),
            "lambda_symmetric": self.lambda_symmetric.to_json(),
            "omega_prime": self.omega_prime.to_json(),
            "residual_zero": self.residual_zero,
        }


@dataclass
class CosetTable:
    """Character table of the coset: rows chars, columns class params."""

    params: GroupParams
    rows: list             # CharParam
    cols: list             # ClassParam
    entries: list          # CycNum, entries[char][class]

    def matrix(self):
        return LabeledMatrix(
            [z.label() for z in self.rows],
            [xi.label() for xi in self.cols],
            [[TRat.from_cyc(v) for v in row] for row in self.entries],
        )


@dataclass
class ZCoset:
    beta: tuple
    b: int
    centralizer: int
    value: TRat


# ---------------------------------------------------------------------------
# public operations


def xj_variables(j, params, m=None):
    """The contracted variables at component j: maps (k, i) to the tuple of
    (color, index) factors x_i^(color) making up X_i^(k)."""
    if not 0 <= j < params.p:
        raise ValueError("component index out of range")
    h = params.h_of(j)
    ncols = params.j1_of(j) * params.d
    m = m if m is not None else (params.n,) * params.e
    out = {}
    for k in range(ncols):
        for i in range(m[k]):
            out[(k, i)] = tuple(
                ((k + s * j * params.d) % params.e, i) for s in range(h)
            )
    return out


def tuple_schur(z, params, r=2):
    return coset_algebra(params, r).tuple_schur(z)


def tuple_powersum(xi, params, r=2):
    return coset_algebra(params, r).tuple_powersum(xi)


def tuple_q_m(z, params, which, r=2):
    alg = coset_algebra(params, r)
    if which == "m":
        return alg.tuple_monomial(z)
    if which in ("q+", "qplus", "+"):
        return alg.tuple_q(z, +1)
    if which in ("q-", "qminus", "-"):
        return alg.tuple_q(z, -1)
    raise ValueError(f"unknown tuple family {which!r}")


def tuple_hall_littlewood(z, params, r=2, sign=+1):
    return coset_algebra(params, r).tuple_hall_littlewood(z, sign)


def coset_char_table(params, r=2):
    alg = coset_algebra(params, r)
    table = alg.coset_table()
    entries = [list(col) for col in zip(*table)]      # chars x classes
    return CosetTable(params, list(alg.chars), list(alg.class_params), entries)


def z_coset(xi, params, r=2):
    alg = coset_algebra(params, r)
    return ZCoset(
        beta=xi.beta,
        b=xi.b,
        centralizer=alg.z_integer(xi),
        value=alg.z_coset_series(xi),
    )


def kostka_gepn(params, r=2, sign=-1):
    alg = coset_algebra(params, r)
    mat = alg.kostka_assembled(sign)
    labels = [z.label() for z in alg.chars]
    blocks = [len(cls) for cls in alg.char_classes]
    return LabeledMatrix(labels, labels, mat, blocks, blocks)


def green_suite(params, r=2):
    return coset_algebra(params, r).green()


def fake_degrees(params, r=2):
    alg = coset_algebra(params, r)
    return {z: alg.fake_degree(z) for z in alg.chars}
