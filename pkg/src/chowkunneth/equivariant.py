"""Bounded-degree parameter models for group actions.

A group contributes a graded polynomial parameter ring (one generator
per character or Chern class); the model of an action is the base ring
with coefficients in the parameter ring, truncated so that parameter
monomials above a chosen even bound N are discarded. Projector families
lift into such models, compose with overflow dropped, and restrict back
to the base by sending every parameter generator to zero. All verified
identities are exact degreewise up to the bound.
"""

from fractions import Fraction

from .correspondences import CorrespondenceClass, diagonal
from .errors import RingMismatch, UnsupportedAction
from .kunneth import ProjectorSet


# -- groups and parameter rings ---------------------------------------------


class GroupSpec:
    """A multiplicative torus of a given rank, or a general linear
    group of a given size."""

    __slots__ = ("kind", "size")

    KINDS = ("multiplicative_torus", "general_linear")

    def __init__(self, kind, size):
        if kind not in self.KINDS:
            raise ValueError(f"unknown group kind {kind!r}")
        size = int(size)
        if size < 1:
            raise ValueError("group size must be >= 1")
        self.kind = kind
        self.size = size

    def generators(self):
        """Parameter generators as (name, degree) pairs."""
        if self.kind == "multiplicative_torus":
            if self.size == 1:
                return (("t", 2),)
            return tuple((f"t{i}", 2) for i in range(1, self.size + 1))
        return tuple((f"c{i}", 2 * i) for i in range(1, self.size + 1))

    def __eq__(self, other):
        if not isinstance(other, GroupSpec):
            return NotImplemented
        return self.kind == other.kind and self.size == other.size

    def __hash__(self):
        return hash((self.kind, self.size))

    def __repr__(self):
        return f"GroupSpec({self.kind!r}, {self.size})"


def torus_group(rank=1):
    return GroupSpec("multiplicative_torus", rank)


def general_linear_group(n):
    return GroupSpec("general_linear", n)


class TruncatedPolyRing:
    """Polynomial ring on weighted generators with every monomial of
    degree above the bound discarded. Monomials are exponent tuples;
    the basis is ordered by degree, then by exponents largest-first."""

    __slots__ = ("gens", "bound", "basis", "label_index", "_monos")

    def __init__(self, gens, bound):
        bound = int(bound)
        if bound < 0 or bound % 2:
            raise ValueError("the truncation bound must be an even integer >= 0")
        self.gens = tuple((str(n), int(d)) for n, d in gens)
        self.bound = bound
        monos = [()]
        for _, d in self.gens:
            monos = [
                m + (e,)
                for m in monos
                for e in range(
                    (bound - sum(x * g for x, (_, g) in zip(m, self.gens))) // d + 1
                )
            ]
        monos = [tuple(m) for m in monos]
        monos.sort(key=lambda m: (self.mono_degree(m), tuple(-e for e in m)))
        self._monos = tuple(monos)
        self.basis = tuple((self.mono_label(m), self.mono_degree(m)) for m in monos)
        self.label_index = {lab: i for i, (lab, _) in enumerate(self.basis)}

    @property
    def unit_mono(self):
        return (0,) * len(self.gens)

    def monomials(self):
        return self._monos

    def mono_degree(self, exps):
        return sum(e * d for e, (_, d) in zip(exps, self.gens))

    def mono_label(self, exps):
        parts = []
        for e, (name, _) in zip(exps, self.gens):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return " ".join(parts) if parts else "1"

    def multiply_mono(self, a, b):
        """Product monomial, or None when it overflows the bound."""
        out = tuple(x + y for x, y in zip(a, b))
        if self.mono_degree(out) > self.bound:
            return None
        return out

    def degrees(self):
        return tuple(sorted({d for _, d in self.basis}))

    def rank(self, degree):
        return sum(1 for _, d in self.basis if d == degree)

    def betti(self):
        out = {}
        for _, d in self.basis:
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))

    def __eq__(self, other):
        if not isinstance(other, TruncatedPolyRing):
            return NotImplemented
        return self.gens == other.gens and self.bound == other.bound

    def __repr__(self):
        names = ", ".join(n for n, _ in self.gens)
        return f"<TruncatedPolyRing [{names}] bound={self.bound} rank={len(self.basis)}>"


def bg_ring(G, N):
    """The parameter ring of the group, truncated at even degree N."""
    return TruncatedPolyRing(G.generators(), N)


# -- action models -----------------------------------------------------------


class EquivariantModel:
    """The base ring with parameter-ring coefficients, truncated.

    Two kinds are supported: `trivial`, where the parameters never mix
    with the base (the pairing of base classes is scalar), and
    `projective_torus`, where a rank-one torus acts on a projective
    space through integer weights and the hyperplane class satisfies
    the product relation over (h + weight * t), making the pairing of
    base classes genuinely polynomial in t.
    """

    __slots__ = ("base", "group", "N", "kind", "weights", "bg",
                 "_integrals", "_duals")

    def __init__(self, base, group, N, kind="trivial", weights=None):
        N = int(N)
        if N < 0 or N % 2:
            raise ValueError("the truncation bound must be an even integer >= 0")
        if kind not in ("trivial", "projective_torus"):
            raise ValueError(f"unknown model kind {kind!r}")
        self.base = base
        self.group = group
        self.N = N
        self.kind = kind
        self.weights = None if weights is None else tuple(int(w) for w in weights)
        self.bg = bg_ring(group, N)
        self._integrals = None
        self._duals = None

    # -- parameter bookkeeping ------------------------------------------

    @property
    def unit_mono(self):
        return self.bg.unit_mono

    def mono_degree(self, exps):
        return self.bg.mono_degree(exps)

    def mono_label(self, exps):
        return self.bg.mono_label(exps)

    def multiply_mono(self, a, b):
        return self.bg.multiply_mono(a, b)

    # -- the weighted hyperplane relation --------------------------------

    def _integral_table(self):
        """For the weighted model: the pushforward of h^q to the
        parameter ring, as {t-exponent: coefficient}, for q up to
        2(m-1). Computed by reducing h^q with the defining relation and
        reading off the h^(m-1) coefficient."""
        if self._integrals is None:
            m = len(self.weights)
            e = [Fraction(1)]
            for w in self.weights:
                e = [a + Fraction(w) * b for a, b in
                     zip(e + [Fraction(0)], [Fraction(0)] + e)]
            # e[i] = elementary symmetric polynomial of the weights
            # relation: h^m = -(e1 t h^(m-1) + e2 t^2 h^(m-2) + ... + em t^m)
            # state: coefficients of h^q as {(t_exp, h_exp): coeff}
            state = {(0, 0): Fraction(1)}
            table = []
            for q in range(0, 2 * m - 1):
                table.append({
                    t: c for (t, hdeg), c in state.items() if hdeg == m - 1 and c != 0
                })
                nxt = {}
                for (t, hdeg), c in state.items():
                    if hdeg + 1 < m:
                        key = (t, hdeg + 1)
                        nxt[key] = nxt.get(key, Fraction(0)) + c
                    else:
                        for i in range(1, m + 1):
                            key = (t + i, m - i)
                            nxt[key] = nxt.get(key, Fraction(0)) - c * e[i]
                state = {k: v for k, v in nxt.items() if v != 0}
            self._integrals = table
        return self._integrals

    def _dual_table(self):
        """For the weighted model: the parameter-valued dual classes.
        Row k is the class dual to h^k, as {(t_exp, h_exp): coeff}, so
        that the pushforward of h^a times row k is exactly delta(a, k).
        Solved by back-substitution on the anti-triangular pushforward
        matrix, ascending in a."""
        if self._duals is None:
            m = len(self.weights)
            table = self._integral_table()
            duals = []
            for k in range(m):
                p = {}
                for a in range(m):
                    b = m - 1 - a
                    acc = Fraction(1) if a == k else Fraction(0)
                    known = {}
                    for b2 in range(b + 1, m):
                        for t2, c2 in p.get(b2, {}).items():
                            for t1, c1 in table[a + b2].items():
                                known[t1 + t2] = known.get(t1 + t2, Fraction(0)) + c1 * c2
                    # table[a+b] has leading entry {0: 1} since a+b = m-1
                    res = {0: acc}
                    for t, c in known.items():
                        res[t] = res.get(t, Fraction(0)) - c
                    row = {t: c for t, c in res.items() if c != 0}
                    if row:
                        p[b] = row
                duals.append(p)
            self._duals = duals
        return self._duals

    # -- the degreewise pairing ------------------------------------------

    def pair_poly(self, j, k):
        """Parameter-valued pairing of base basis classes j and k: the
        equivariant pushforward of their product, as {monomial: coeff},
        truncated at the bound."""
        if self.kind == "trivial":
            v = self.base.pair_basis(j, k)
            return {self.unit_mono: v} if v != 0 else {}
        q = self.base.basis[j][1] // 2 + self.base.basis[k][1] // 2
        table = self._integral_table()
        if q >= len(table):
            return {}
        return {
            (t,): c for t, c in table[q].items() if 2 * t <= self.N
        }

    # -- structural data ---------------------------------------------------

    def rank(self, degree):
        """Rank of the model in a total degree (base plus parameters)."""
        total = 0
        for mono in self.bg.monomials():
            rest = degree - self.mono_degree(mono)
            if rest >= 0:
                total += self.base.rank(rest)
        return total

    def basis_in_degree(self, degree):
        """Labels of the model basis in a total degree, parameter-free
        classes first."""
        out = []
        for mono in sorted(
            self.bg.monomials(), key=lambda m: (self.mono_degree(m), m)
        ):
            rest = degree - self.mono_degree(mono)
            if rest < 0:
                continue
            mlab = self.mono_label(mono)
            for i in self.base.degree_indices(rest):
                blab = self.base.basis[i][0]
                if mlab == "1":
                    out.append(blab)
                elif blab == "1":
                    out.append(mlab)
                else:
                    out.append(f"{blab} {mlab}")
        return out

    def diagonal(self):
        """The model's diagonal: for the trivial kind the base diagonal
        with unit parameter; for the weighted kind the sum over k of
        (dual row k) x h^k."""
        if self.kind == "trivial":
            terms = {}
            for (i, j), c in diagonal(self.base).terms.items():
                terms[(i, j, self.unit_mono)] = c
            return EquivariantCorrespondence(self, 0, terms)
        duals = self._dual_table()
        terms = {}
        for k in range(len(self.weights)):
            for b, poly in duals[k].items():
                for t, c in poly.items():
                    key = (b, k, (t,))
                    terms[key] = terms.get(key, Fraction(0)) + c
        return EquivariantCorrespondence(self, 0, terms)

    def __eq__(self, other):
        if not isinstance(other, EquivariantModel):
            return NotImplemented
        return (
            self.base == other.base
            and self.group == other.group
            and self.N == other.N
            and self.kind == other.kind
            and self.weights == other.weights
        )

    def __repr__(self):
        tail = f" weights={list(self.weights)}" if self.weights else ""
        return (
            f"<EquivariantModel {self.kind} dim={self.base.dim} "
            f"N={self.N}{tail}>"
        )


def equivariant_trivial_action(X, G, N):
    """The model of an action whose basis classes are all invariant:
    base classes and parameters never mix."""
    return EquivariantModel(X, G, N, kind="trivial")


def equivariant_projective_torus(weights, N):
    """A rank-one torus acting on the projective space of a
    representation with the given integer weights. The base is the
    ordinary projective space of dimension len(weights) - 1; the
    parameter t enters the pairing through the relation
    product(h + weight_i * t) = 0."""
    from .spaces import projective_space

    weights = tuple(int(w) for w in weights)
    if not weights:
        raise ValueError("at least one weight is required")
    base = projective_space(len(weights) - 1)
    return EquivariantModel(
        base, torus_group(1), N, kind="projective_torus", weights=weights
    )


# -- parameter-valued correspondences ----------------------------------------


class EquivariantCorrespondence:
    """Sparse self-correspondence of the model's base with parameter
    monomial coefficients: terms (i, j, monomial) -> coefficient,
    homogeneous of total degree 2*(dim + shift). Terms whose monomial
    overflows the bound are dropped on construction (truncation)."""

    __slots__ = ("model", "shift", "coeffs")

    def __init__(self, model, shift, coeffs):
        self.model = model
        self.shift = int(shift)
        base = model.base
        degree = 2 * (base.dim + self.shift)
        clean = {}
        for (i, j, mono), c in coeffs.items():
            c = Fraction(c)
            if c == 0:
                continue
            mono = tuple(mono)
            mdeg = model.mono_degree(mono)
            if mdeg > model.N:
                continue
            if base.basis[i][1] + base.basis[j][1] + mdeg != degree:
                raise ValueError(
                    f"term ({base.basis[i][0]}, {base.basis[j][0]}, "
                    f"{model.mono_label(mono)}) has degree "
                    f"{base.basis[i][1] + base.basis[j][1] + mdeg}, expected {degree}"
                )
            clean[(i, j, mono)] = c
        self.coeffs = clean

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, EquivariantCorrespondence):
            return NotImplemented
        return (
            self.model == other.model
            and self.shift == other.shift
            and self.coeffs == other.coeffs
        )

    def _compat(self, other):
        if self.model != other.model:
            raise RingMismatch("correspondences live over different models")
        if self.shift != other.shift:
            raise RingMismatch("degree shifts differ")

    def __add__(self, other):
        self._compat(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + c
        return EquivariantCorrespondence(self.model, self.shift, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, r):
        r = Fraction(r)
        return EquivariantCorrespondence(
            self.model, self.shift, {k: r * c for k, c in self.coeffs.items()}
        )

    def label_terms(self):
        base = self.model.base
        out = []
        for (i, j, mono), c in sorted(self.coeffs.items()):
            out.append(
                (base.basis[i][0], base.basis[j][0], self.model.mono_label(mono), c)
            )
        return out

    def __repr__(self):
        if not self.coeffs:
            return "<0 equivariant corr>"
        parts = []
        for lx, ly, lm, c in self.label_terms():
            head = "" if c == 1 else f"({c})*"
            mono = "" if lm == "1" else f" {lm}"
            parts.append(f"{head}{lx} x {ly}{mono}")
        return " + ".join(parts)

    def compose(self, other):
        """Composition with self applied first; the middle factor is
        contracted with the parameter-valued pairing and monomials
        overflowing the bound are dropped."""
        self._compat(other)
        model = self.model
        g_by_k = {}
        for (k, l, m2), cg in other.coeffs.items():
            g_by_k.setdefault(k, []).append((l, m2, cg))
        out = {}
        pair_cache = {}
        for (i, j, m1), cf in self.coeffs.items():
            for k in range(len(model.base.basis)):
                if (j, k) not in pair_cache:
                    pair_cache[(j, k)] = model.pair_poly(j, k)
                poly = pair_cache[(j, k)]
                if not poly:
                    continue
                rows = g_by_k.get(k)
                if not rows:
                    continue
                for mp, vp in poly.items():
                    m1p = model.multiply_mono(m1, mp)
                    if m1p is None:
                        continue
                    for l, m2, cg in rows:
                        mono = model.multiply_mono(m1p, m2)
                        if mono is None:
                            continue
                        key = (i, l, mono)
                        out[key] = out.get(key, Fraction(0)) + cf * vp * cg
        return EquivariantCorrespondence(model, self.shift + other.shift, out)

    def act(self, alpha):
        """Action on a base class with scalar coefficients; the result
        has parameter-valued coefficients {(index, monomial): coeff}."""
        model = self.model
        if alpha.ring != model.base:
            raise RingMismatch("class does not live over the model's base")
        out = {}
        for (i, j, mono), c in self.coeffs.items():
            for a, ca in alpha.coeffs.items():
                poly = model.pair_poly(a, i)
                for mp, vp in poly.items():
                    m = model.multiply_mono(mono, mp)
                    if m is None:
                        continue
                    key = (j, m)
                    val = out.get(key, Fraction(0)) + c * ca * vp
                    if val == 0:
                        out.pop(key, None)
                    else:
                        out[key] = val
        return out

    def restrict(self):
        """Ordinary correspondence on the base: every parameter
        generator goes to zero, keeping only unit-monomial terms."""
        unit = self.model.unit_mono
        terms = {}
        for (i, j, mono), c in self.coeffs.items():
            if mono == unit:
                terms[(i, j)] = c
        return CorrespondenceClass(
            self.model.base, self.model.base, self.shift, terms
        )


class EquivariantProjectorFamily:
    """Lifted projectors: a map index -> parameter-valued
    self-correspondence over one model."""

    __slots__ = ("model", "projectors", "complete", "remainder_indices", "report")

    def __init__(self, model, projectors, complete=False,
                 remainder_indices=(), report=None):
        self.model = model
        projs = {}
        for i in sorted(projectors):
            p = projectors[i]
            if p.model != model:
                raise RingMismatch("family members must live over the family's model")
            if p.shift != 0:
                raise ValueError("family members must have degree shift 0")
            projs[int(i)] = p
        self.projectors = projs
        self.complete = bool(complete)
        self.remainder_indices = frozenset(int(i) for i in remainder_indices)
        self.report = report

    def indices(self):
        return tuple(sorted(self.projectors))

    def member(self, i):
        return self.projectors[i]

    def total(self):
        out = EquivariantCorrespondence(self.model, 0, {})
        for i in self.indices():
            out = out + self.projectors[i]
        return out

    def restrict(self):
        """Ordinary projector set on the base (parameters to zero)."""
        return ProjectorSet(
            self.model.base,
            {i: p.restrict() for i, p in self.projectors.items()},
            complete=self.complete,
            remainder_indices=self.remainder_indices,
        )

    def __repr__(self):
        return (
            f"<EquivariantProjectorFamily indices={list(self.indices())} "
            f"N={self.model.N}>"
        )


# -- lifting, verification, stabilization ------------------------------------


def _standard_weighted_family(model):
    """The lifted family for a weighted projective model: index 2k maps
    to (dual row k) x h^k."""
    m = len(model.weights)
    duals = model._dual_table()
    projs = {}
    for k in range(m):
        terms = {}
        for b, poly in duals[k].items():
            for t, c in poly.items():
                terms[(b, k, (t,))] = c
        projs[2 * k] = EquivariantCorrespondence(model, 0, terms)
    return projs


def lift_projectors(P, G, N, model=None):
    """Lift a projector set into a truncated model.

    With no model (or a trivial-action model), every member lifts with
    unit parameter coefficient. A projective-torus model is accepted
    only when the set being lifted is the standard decomposition of the
    model's base projective space; the lift then replaces each member
    by the parameter-corrected dual row, which stays exactly idempotent
    and orthogonal in the truncation. Anything else raises
    UnsupportedAction.
    """
    if model is None:
        model = equivariant_trivial_action(P.ring, G, N)
    if model.group != G:
        raise RingMismatch("model was built for a different group")
    if model.N != int(N):
        raise RingMismatch("model was built for a different truncation bound")
    if P.ring != model.base:
        raise RingMismatch("projector set does not live over the model's base")
    if model.kind == "trivial":
        projs = {}
        for i, p in P.projectors.items():
            terms = {
                (a, b, model.unit_mono): c for (a, b), c in p.terms.items()
            }
            projs[i] = EquivariantCorrespondence(model, 0, terms)
        return EquivariantProjectorFamily(
            model, projs, complete=P.complete,
            remainder_indices=P.remainder_indices,
        )
    if model.kind == "projective_torus":
        standard = _standard_weighted_family(model)
        expected = {
            i: c for i, c in
            ((i, c.restrict()) for i, c in standard.items())
            if not c.is_zero()
        }
        actual = {i: p for i, p in P.projectors.items() if not p.is_zero()}
        if actual != expected:
            raise UnsupportedAction(
                "a projective-torus model only lifts the standard projector "
                "set of its base projective space"
            )
        projs = dict(standard)
        for i, p in P.projectors.items():
            if i not in projs and p.is_zero():
                projs[i] = EquivariantCorrespondence(model, 0, {})
        return EquivariantProjectorFamily(
            model, projs, complete=P.complete,
            remainder_indices=P.remainder_indices,
        )
    raise UnsupportedAction(f"unsupported model kind {model.kind!r}")


def _eq_corr_residual(c):
    return [[lx, ly, lm, str(v)] for lx, ly, lm, v in c.label_terms()]


def _eq_entry(check, indices, residual):
    entry = {"check": check, "indices": list(indices), "pass": residual.is_zero()}
    if not entry["pass"]:
        entry["residual_class"] = _eq_corr_residual(residual)
    return entry


def verify_equivariant(F, jobs=None):
    """Exact verification of a lifted family inside its truncation:
    idempotence, orthogonality, completeness against the model's
    diagonal (when claimed), and graded action on base basis classes
    indexed by base degree. Same report schema as the ordinary
    verification."""
    from concurrent.futures import ThreadPoolExecutor

    model = F.model
    base = model.base
    idx = F.indices()
    entries = []
    for i in idx:
        p = F.projectors[i]
        entries.append(_eq_entry("idempotence", (i,), p.compose(p) - p))
    pairs = [(i, j) for i in idx for j in idx if i != j]

    def orthogonality(pair):
        i, j = pair
        return _eq_entry(
            "orthogonality", pair, F.projectors[i].compose(F.projectors[j])
        )

    if jobs is not None and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            entries.extend(pool.map(orthogonality, pairs))
    else:
        entries.extend(orthogonality(pair) for pair in pairs)
    if F.complete:
        entries.append(_eq_entry("completeness", idx, F.total() - model.diagonal()))
    unit = model.unit_mono
    for i in idx:
        p = F.projectors[i]
        for k in range(len(base.basis)):
            e = base.basis_vector(k)
            got = p.act(e)
            want = {(k, unit): Fraction(1)} if base.basis[k][1] == i else {}
            ok = got == want
            entry = {
                "check": "graded_action",
                "indices": [i],
                "basis_class": base.basis[k][0],
                "pass": ok,
            }
            if not ok:
                residual = dict(got)
                for key, c in want.items():
                    v = residual.get(key, Fraction(0)) - c
                    if v == 0:
                        residual.pop(key, None)
                    else:
                        residual[key] = v
                entry["residual_class"] = [
                    [base.basis[j][0], model.mono_label(m), str(c)]
                    for (j, m), c in sorted(residual.items())
                ]
            entries.append(entry)
    F.report = entries
    return entries


def compare_lifted_coefficients(F1, F2, D):
    """Whether two lifted families agree on every coefficient whose
    parameter monomial has degree at most D. The families may live at
    different truncation bounds."""
    if F1.indices() != F2.indices():
        return False

    def filtered(F, p):
        return {
            (i, j, mono): c
            for (i, j, mono), c in F.projectors[p].coeffs.items()
            if F.model.mono_degree(mono) <= D
        }

    return all(filtered(F1, p) == filtered(F2, p) for p in F1.indices())


def stabilization_check(X, G, P, D, N1, N2):
    """Whether the lift of P is independent of the truncation bound in
    parameter degrees up to D: lifts at bounds N1 and N2 must agree on
    every coefficient of parameter degree <= D. Requires D <= N1 <= N2."""
    if P.ring != X:
        raise RingMismatch("projector set does not live over the given ring")
    if not 0 <= D <= N1 <= N2:
        raise ValueError("bounds must satisfy 0 <= D <= N1 <= N2")
    F1 = lift_projectors(P, G, N1)
    F2 = lift_projectors(P, G, N2)
    return compare_lifted_coefficients(F1, F2, D)


def bottom_weight_restriction(q, P):
    """Transport a projector set along a graded ring surjection, member
    by member (each factor of each term mapped through q). Completeness
    is kept exactly when the diagonal maps to the target's diagonal.

    For an equivariant family, pass its model as `q`: the surjection is
    then the model's own restriction (every parameter generator to
    zero) and the result is the family's base projector set.
    """
    from .correspondences import map_correspondence
    from .graded_ring import RingMap

    if isinstance(P, EquivariantProjectorFamily):
        if not isinstance(q, EquivariantModel) or q != P.model:
            raise UnsupportedAction(
                "an equivariant family restricts only along its own model's "
                "parameter-annihilation surjection; pass the model itself"
            )
        return P.restrict()
    if not isinstance(q, RingMap):
        raise TypeError("q must be a ring map (or the family's model)")
    if P.ring != q.source:
        raise RingMismatch("projector set does not live over the map's source")
    target = q.target
    projs = {i: map_correspondence(q, q, p) for i, p in P.projectors.items()}
    complete = False
    if P.complete:
        complete = map_correspondence(q, q, diagonal(P.ring)) == diagonal(target)
    return ProjectorSet(
        target, projs, complete=complete,
        remainder_indices=P.remainder_indices,
    )
