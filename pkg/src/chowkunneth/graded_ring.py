"""Finite graded basis rings with exact rational structure constants.

A ring here is the cohomology (or Chow) ring of a smooth projective
variety presented by a finite homogeneous basis: labels with degrees,
a full multiplication table, and a top-degree integration functional.
Poincare duality is an axiom, not a theorem: construction fails unless
every complementary pairing block is invertible over Q.

All coefficients are `fractions.Fraction`; nothing here ever touches a
float.
"""

from fractions import Fraction

from . import linalg
from .errors import DegeneratePairing, RingAxiomError, RingMismatch

CHECK_NAMES = (
    "basis_shape",
    "grading",
    "unit",
    "graded_commutativity",
    "associativity",
    "integration_support",
    "pairing_nondegeneracy",
)


def _coerce_coeffs(coeffs):
    out = {}
    for k, v in coeffs.items():
        f = Fraction(v)
        if f != 0:
            out[k] = f
    return out


class ClassVector:
    """A homogeneous class: rational coefficients over one degree's basis."""

    __slots__ = ("ring", "degree", "coeffs")

    def __init__(self, ring, degree, coeffs):
        self.ring = ring
        self.degree = degree
        self.coeffs = _coerce_coeffs(coeffs)
        for i in self.coeffs:
            if ring.basis[i][1] != degree:
                raise ValueError(
                    f"coefficient on basis index {i} of degree {ring.basis[i][1]}, "
                    f"expected degree {degree}"
                )

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, ClassVector):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self.coeffs.items()))))

    def _check_compat(self, other):
        if self.ring is not other.ring and self.ring != other.ring:
            raise RingMismatch("classes live over different rings")

    def __add__(self, other):
        self._check_compat(other)
        if self.degree != other.degree:
            raise ValueError("cannot add classes of different degrees")
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, Fraction(0)) + c
        return ClassVector(self.ring, self.degree, out)

    def __neg__(self):
        return ClassVector(self.ring, self.degree, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, r):
        r = Fraction(r)
        return ClassVector(self.ring, self.degree, {i: r * c for i, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, ClassVector):
            return self.ring.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def integrate(self):
        return self.ring.integrate(self)

    def label_dict(self):
        basis = self.ring.basis
        return {basis[i][0]: c for i, c in sorted(self.coeffs.items())}

    def __repr__(self):
        if not self.coeffs:
            return f"<0 in degree {self.degree}>"
        parts = []
        for i, c in sorted(self.coeffs.items()):
            label = self.ring.basis[i][0]
            parts.append(label if c == 1 else f"({c})*{label}")
        return " + ".join(parts)


class PairingMatrix:
    """Integrals of products between one degree and its complement."""

    __slots__ = ("row_degree", "col_degree", "row_labels", "col_labels", "entries")

    def __init__(self, row_degree, col_degree, row_labels, col_labels, entries):
        self.row_degree = row_degree
        self.col_degree = col_degree
        self.row_labels = tuple(row_labels)
        self.col_labels = tuple(col_labels)
        self.entries = linalg.mat(entries)

    def __eq__(self, other):
        if not isinstance(other, PairingMatrix):
            return NotImplemented
        return (
            self.row_degree == other.row_degree
            and self.row_labels == other.row_labels
            and self.col_labels == other.col_labels
            and self.entries == other.entries
        )

    def __repr__(self):
        return (
            f"PairingMatrix(deg {self.row_degree} x deg {self.col_degree}, "
            f"{len(self.row_labels)}x{len(self.col_labels)})"
        )


def run_ring_checks(dim, basis, structure, integration):
    """Yield (check_name, ok, detail) for every graded ring axiom.

    Pure function of the raw data, so the CLI can report all checks even
    when some fail; the constructor raises on the first failure instead.
    """
    n = len(basis)
    top = 2 * dim

    ok_shape = True
    detail = ""
    labels = [b[0] for b in basis]
    if len(set(labels)) != n:
        ok_shape, detail = False, "duplicate basis labels"
    elif any(not isinstance(b[0], str) or not b[0] for b in basis):
        ok_shape, detail = False, "basis labels must be nonempty strings"
    elif any(d < 0 or d > top for _, d in basis):
        ok_shape, detail = False, f"basis degrees must lie in [0, {top}]"
    elif sum(1 for _, d in basis if d == 0) != 1:
        ok_shape, detail = False, "degree 0 must have rank exactly 1"
    yield ("basis_shape", ok_shape, detail)
    if not ok_shape:
        return

    deg = [b[1] for b in basis]

    ok, detail = True, ""
    for (i, j), prod in structure.items():
        target = deg[i] + deg[j]
        for k, c in prod.items():
            if c == 0:
                continue
            if target > top or deg[k] != target:
                ok = False
                detail = (
                    f"product {labels[i]}*{labels[j]} has a degree-{deg[k]} term, "
                    f"expected degree {target}"
                )
                break
        if not ok:
            break
    yield ("grading", ok, detail)
    if not ok:
        return

    def prod(i, j):
        return structure.get((i, j), {})

    unit = next(i for i in range(n) if deg[i] == 0)
    ok, detail = True, ""
    for j in range(n):
        left = prod(unit, j)
        right = prod(j, unit)
        want = {j: Fraction(1)}
        if left != want or right != want:
            ok, detail = False, f"unit does not act as identity on {labels[j]}"
            break
    yield ("unit", ok, detail)
    if not ok:
        return

    ok, detail = True, ""
    for i in range(n):
        for j in range(i, n):
            sign = -1 if (deg[i] % 2 and deg[j] % 2) else 1
            a, b = prod(i, j), prod(j, i)
            if {k: sign * c for k, c in b.items()} != a:
                ok = False
                detail = f"graded commutativity fails on {labels[i]}, {labels[j]}"
                break
        if not ok:
            break
    yield ("graded_commutativity", ok, detail)
    if not ok:
        return

    def mul_vec(vec, k):
        out = {}
        for m, c in vec.items():
            for t, s in prod(m, k).items():
                out[t] = out.get(t, Fraction(0)) + c * s
        return {t: c for t, c in out.items() if c != 0}

    def mul_vec_left(k, vec):
        out = {}
        for m, c in vec.items():
            for t, s in prod(k, m).items():
                out[t] = out.get(t, Fraction(0)) + c * s
        return {t: c for t, c in out.items() if c != 0}

    ok, detail = True, ""
    for i in range(n):
        for j in range(n):
            ij = prod(i, j)
            if deg[i] + deg[j] > top:
                continue
            for k in range(n):
                if deg[i] + deg[j] + deg[k] > top:
                    continue
                left = mul_vec(ij, k)
                right = mul_vec_left(i, prod(j, k))
                if left != right:
                    ok = False
                    detail = f"associativity fails on ({labels[i]}, {labels[j]}, {labels[k]})"
                    break
            if not ok:
                break
        if not ok:
            break
    yield ("associativity", ok, detail)
    if not ok:
        return

    ok, detail = True, ""
    for i, c in integration.items():
        if deg[i] != top and c != 0:
            ok, detail = False, f"integration supported on degree {deg[i]} class {labels[i]}"
            break
    yield ("integration_support", ok, detail)
    if not ok:
        return

    by_degree = {}
    for i, d in enumerate(deg):
        by_degree.setdefault(d, []).append(i)

    def integral(i, j):
        total = Fraction(0)
        for k, c in prod(i, j).items():
            total += c * integration.get(k, Fraction(0))
        return total

    ok, detail = True, ""
    seen = set()
    for p, rows in sorted(by_degree.items()):
        q = top - p
        if p in seen or q in seen:
            continue
        seen.add(p)
        cols = by_degree.get(q, [])
        if len(rows) != len(cols):
            ok = False
            detail = f"rank {len(rows)} in degree {p} vs rank {len(cols)} in degree {q}"
            break
        m = [[integral(i, j) for j in cols] for i in rows]
        if linalg.inverse(linalg.mat(m)) is None:
            ok, detail = False, f"pairing block between degrees {p} and {q} is singular"
            break
    missing = [q for q in by_degree if top - q not in by_degree]
    if ok and missing:
        ok = False
        detail = f"degree {missing[0]} has no complementary degree {top - missing[0]}"
    yield ("pairing_nondegeneracy", ok, detail)


class GradedBasisRing:
    """Immutable graded ring with basis, products, integration, pairing.

    Parameters
    ----------
    dim : complex dimension; cohomological degrees run 0..2*dim.
    basis : sequence of (label, degree) pairs; emission order is the
        stable basis order.
    structure : {(i, j): {k: Fraction}} full multiplication table on
        basis indices (missing pairs multiply to zero).
    integration : {i: Fraction} functional on the top-degree basis.
    space : optional serializable description of how the ring was built.
    """

    def __init__(self, dim, basis, structure, integration, space=None):
        self.dim = int(dim)
        self.basis = tuple((str(l), int(d)) for l, d in basis)
        self.structure = {
            (i, j): {k: Fraction(c) for k, c in prod.items() if Fraction(c) != 0}
            for (i, j), prod in structure.items()
        }
        self.structure = {ij: p for ij, p in self.structure.items() if p}
        self.integration = {
            i: Fraction(c) for i, c in integration.items() if Fraction(c) != 0
        }
        self.space = space

        for name, ok, detail in run_ring_checks(
            self.dim, self.basis, self.structure, self.integration
        ):
            if not ok:
                if name == "pairing_nondegeneracy":
                    raise DegeneratePairing(detail)
                raise RingAxiomError(name, detail)

        self.label_index = {l: i for i, (l, _) in enumerate(self.basis)}
        self._by_degree = {}
        for i, (_, d) in enumerate(self.basis):
            self._by_degree.setdefault(d, []).append(i)
        self._by_degree = {d: tuple(v) for d, v in self._by_degree.items()}
        self.parity = any(d % 2 for _, d in self.basis)
        self._pairing_cache = {}
        self._dual_cache = {}
        self._pair_values = None

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, GradedBasisRing):
            return NotImplemented
        if self is other:
            return True
        return (
            self.dim == other.dim
            and self.basis == other.basis
            and self.structure == other.structure
            and self.integration == other.integration
        )

    def __hash__(self):
        return hash((self.dim, self.basis))

    def __repr__(self):
        kind = self.space.get("kind") if isinstance(self.space, dict) else None
        tag = f" {kind}" if kind else ""
        return f"<GradedBasisRing{tag} dim={self.dim} rank={len(self.basis)}>"

    # -- basic queries ----------------------------------------------------

    @property
    def top_degree(self):
        return 2 * self.dim

    def degrees(self):
        return tuple(sorted(self._by_degree))

    def rank(self, degree):
        return len(self._by_degree.get(degree, ()))

    def degree_indices(self, degree):
        return self._by_degree.get(degree, ())

    def betti(self):
        return {d: len(ix) for d, ix in sorted(self._by_degree.items())}

    # -- class construction -----------------------------------------------

    def zero(self, degree):
        return ClassVector(self, degree, {})

    def basis_class(self, label):
        i = self.label_index[label]
        return ClassVector(self, self.basis[i][1], {i: Fraction(1)})

    def basis_vector(self, i):
        return ClassVector(self, self.basis[i][1], {i: Fraction(1)})

    def unit(self):
        (i,) = self.degree_indices(0)
        return ClassVector(self, 0, {i: Fraction(1)})

    def from_label_dict(self, coeffs, degree=None):
        """Build a class from {label: coefficient}; degree inferred when
        omitted (all labels must share one degree)."""
        idx = {}
        degs = set()
        for label, c in coeffs.items():
            if label not in self.label_index:
                raise KeyError(f"unknown basis label {label!r}")
            i = self.label_index[label]
            if Fraction(c) != 0:
                idx[i] = Fraction(c)
                degs.add(self.basis[i][1])
        if degree is None:
            if len(degs) > 1:
                raise ValueError("class is not homogeneous")
            degree = degs.pop() if degs else 0
        return ClassVector(self, degree, idx)

    # -- ring operations ---------------------------------------------------

    def multiply(self, a, b):
        if a.ring is not self and a.ring != self:
            raise RingMismatch("left factor lives over a different ring")
        if b.ring is not self and b.ring != self:
            raise RingMismatch("right factor lives over a different ring")
        degree = a.degree + b.degree
        out = {}
        for i, ca in a.coeffs.items():
            for j, cb in b.coeffs.items():
                prod = self.structure.get((i, j))
                if not prod:
                    continue
                c = ca * cb
                for k, s in prod.items():
                    out[k] = out.get(k, Fraction(0)) + c * s
        return ClassVector(self, degree, out)

    def integrate(self, a):
        if a.ring is not self and a.ring != self:
            raise RingMismatch("class lives over a different ring")
        if a.degree != self.top_degree:
            return Fraction(0)
        return sum(
            (c * self.integration.get(i, Fraction(0)) for i, c in a.coeffs.items()),
            Fraction(0),
        )

    def pair_basis(self, i, j):
        """Integral of e_i * e_j (cached across all complementary pairs)."""
        if self._pair_values is None:
            table = {}
            top = self.top_degree
            for (a, b), prod in self.structure.items():
                if self.basis[a][1] + self.basis[b][1] != top:
                    continue
                val = sum(
                    (c * self.integration.get(k, Fraction(0)) for k, c in prod.items()),
                    Fraction(0),
                )
                if val != 0:
                    table[(a, b)] = val
            self._pair_values = table
        return self._pair_values.get((i, j), Fraction(0))

    def pairing_partners(self, j):
        """All (k, value) with nonzero integral of e_j * e_k."""
        if not hasattr(self, "_partners"):
            self.pair_basis(0, 0)
            partners = {}
            for (a, b), val in self._pair_values.items():
                partners.setdefault(a, []).append((b, val))
            self._partners = {a: tuple(v) for a, v in partners.items()}
        return self._partners.get(j, ())

    def pairing_matrix(self, p):
        """Pairing block between degree p and degree 2*dim - p.

        Raises DegeneratePairing if the block is singular (it cannot be,
        for a ring that passed construction, unless p has no basis)."""
        if p in self._pairing_cache:
            return self._pairing_cache[p]
        q = self.top_degree - p
        rows = self.degree_indices(p)
        cols = self.degree_indices(q)
        if len(rows) != len(cols):
            raise DegeneratePairing(
                f"rank {len(rows)} in degree {p} vs rank {len(cols)} in degree {q}"
            )
        entries = [[self.pair_basis(i, j) for j in cols] for i in rows]
        pm = PairingMatrix(
            p,
            q,
            [self.basis[i][0] for i in rows],
            [self.basis[j][0] for j in cols],
            entries,
        )
        if rows and linalg.inverse(pm.entries) is None:
            raise DegeneratePairing(f"pairing block between degrees {p} and {q} is singular")
        self._pairing_cache[p] = pm
        return pm

    def dual_basis(self, p):
        """Classes (ê_j) in degree 2*dim - p with ∫ e_i · ê_j = δ_ij,
        indexed like the degree-p basis."""
        if p in self._dual_cache:
            return self._dual_cache[p]
        pm = self.pairing_matrix(p)
        cols = self.degree_indices(self.top_degree - p)
        inv = linalg.inverse(pm.entries)
        if inv is None:
            raise DegeneratePairing(f"pairing block in degree {p} is singular")
        duals = tuple(
            ClassVector(
                self,
                self.top_degree - p,
                {cols[k]: inv[k][j] for k in range(len(cols))},
            )
            for j in range(len(pm.row_labels))
        )
        self._dual_cache[p] = duals
        return duals

    def point(self):
        """The degree-2*dim class integrating to 1."""
        return self.dual_basis(0)[0]

    def check_report(self):
        """Re-run every construction axiom; list of (check, ok, detail)."""
        return list(
            run_ring_checks(self.dim, self.basis, self.structure, self.integration)
        )


class RingMap:
    """Degree-preserving ring homomorphism given on basis classes.

    `images` maps each source basis index to a ClassVector over the
    target. Construction checks unitality, degree preservation and
    multiplicativity on every basis pair; surjectivity is checked when
    `require_surjective` is set (bottom-weight restrictions need it,
    ambient restriction maps do not). With `strict=False`,
    multiplicativity is not enforced on pairs whose factors BOTH map to
    zero — the contract of quotient maps that collapse a middle block
    whose internal products land in surviving degrees; callers of such
    maps re-verify the transported structures directly.
    """

    def __init__(self, source, target, images, require_surjective=False, strict=True):
        from .errors import NotRingMap

        self.source = source
        self.target = target
        self.images = tuple(images)
        if len(self.images) != len(source.basis):
            raise NotRingMap("one image per source basis class is required")
        for i, v in enumerate(self.images):
            if v.ring != target:
                raise NotRingMap("images must live over the target ring")
            if v.degree != source.basis[i][1]:
                raise NotRingMap(
                    f"image of {source.basis[i][0]} has degree {v.degree}, "
                    f"expected {source.basis[i][1]}"
                )
        unit_i = source.degree_indices(0)[0]
        if self.images[unit_i] != target.unit():
            raise NotRingMap("unit must map to unit")
        for i in range(len(source.basis)):
            ei = source.basis_class(source.basis[i][0])
            for j in range(len(source.basis)):
                if not strict and self.images[i].is_zero() and self.images[j].is_zero():
                    continue
                ej = source.basis_class(source.basis[j][0])
                lhs = self.apply(source.multiply(ei, ej))
                rhs = target.multiply(self.images[i], self.images[j])
                if lhs != rhs:
                    raise NotRingMap(
                        f"not multiplicative on "
                        f"({source.basis[i][0]}, {source.basis[j][0]})"
                    )
        if require_surjective:
            for d in target.degrees():
                cols = target.degree_indices(d)
                rows = []
                for i in range(len(source.basis)):
                    if source.basis[i][1] == d:
                        v = self.images[i]
                        rows.append([v.coeffs.get(c, Fraction(0)) for c in cols])
                if linalg.rank(linalg.mat(rows) if rows else ()) != len(cols):
                    raise NotRingMap(f"not surjective in degree {d}")

    def apply(self, v):
        if v.ring != self.source:
            raise RingMismatch("class does not live over the map's source")
        out = {}
        for i, c in v.coeffs.items():
            for k, s in self.images[i].coeffs.items():
                out[k] = out.get(k, Fraction(0)) + c * s
        return ClassVector(self.target, v.degree, out)


def tensor_ring(factors, space=None):
    """Graded tensor product of basis rings, with Koszul signs.

    Basis classes are all tuples of factor basis classes, labelled by
    joining the factor labels with " # ", ordered by total degree and
    then by the factor index tuple. The returned ring carries
    `tensor_factors` and `tensor_index` (tuple of factor indices ->
    global index) for callers that need to address pure tensors.
    """
    factors = tuple(factors)
    if not factors:
        raise ValueError("tensor product needs at least one factor")

    tuples = [()]
    for f in factors:
        tuples = [t + (i,) for t in tuples for i in range(len(f.basis))]

    def tup_degree(t):
        return sum(f.basis[i][1] for f, i in zip(factors, t))

    tuples.sort(key=lambda t: (tup_degree(t), t))
    index = {t: g for g, t in enumerate(tuples)}
    basis = [
        (" # ".join(f.basis[i][0] for f, i in zip(factors, t)), tup_degree(t))
        for t in tuples
    ]

    def koszul(left, right):
        exp = 0
        for i in range(len(factors)):
            di = factors[i].basis[right[i]][1]
            if di % 2 == 0:
                continue
            for j in range(i + 1, len(factors)):
                exp += factors[j].basis[left[j]][1]
        return -1 if exp % 2 else 1

    dim = sum(f.dim for f in factors)
    structure = {}
    for ta in tuples:
        da = tup_degree(ta)
        for tb in tuples:
            if da + tup_degree(tb) > 2 * dim:
                continue
            sign = koszul(ta, tb)
            terms = [((), Fraction(sign))]
            for f, i, j in zip(factors, ta, tb):
                prod = f.structure.get((i, j))
                if not prod:
                    terms = []
                    break
                terms = [(t + (k,), c * s) for t, c in terms for k, s in prod.items()]
            if terms:
                structure[(index[ta], index[tb])] = {
                    index[t]: c for t, c in terms
                }

    integration = {}
    for t in tuples:
        if tup_degree(t) != 2 * dim:
            continue
        val = Fraction(1)
        for f, i in zip(factors, t):
            val *= f.integration.get(i, Fraction(0))
        if val != 0:
            integration[index[t]] = val

    ring = GradedBasisRing(dim, basis, structure, integration, space=space)
    ring.tensor_factors = factors
    ring.tensor_index = index
    return ring


def tensor_class(ring, parts):
    """Pure tensor of one class per factor, as a class of a tensor ring."""
    factors = ring.tensor_factors
    if len(parts) != len(factors):
        raise ValueError("one class per tensor factor is required")
    for v, f in zip(parts, factors):
        if v.ring != f:
            raise RingMismatch("tensor part lives over the wrong factor")
    terms = [((), Fraction(1))]
    for v in parts:
        terms = [(t + (i,), c0 * c) for t, c0 in terms for i, c in v.coeffs.items()]
    degree = sum(v.degree for v in parts)
    return ClassVector(
        ring, degree, {ring.tensor_index[t]: c for t, c in terms}
    )
