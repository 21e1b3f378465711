"""Constructors for cohomology rings of standard varieties.

Each constructor assembles exact structure constants and hands them to
GradedBasisRing, whose axiom checks re-validate every table after
construction. Constructed rings carry a serializable `space`
description, and construction is cached on that description, so equal
descriptions yield the same ring object.

Also houses the closed-form dimension formulas and the
primitive-killing surjection used by bottom-weight restriction.
"""

import json
from fractions import Fraction
from math import comb

from . import linalg, schubert
from .errors import InvalidSpec, NonLefschetzRange, DegeneratePairing
from .graded_ring import ClassVector, GradedBasisRing, RingMap, tensor_ring

_CACHE = {}


def canonical_spec_key(spec):
    return json.dumps(spec, sort_keys=True, ensure_ascii=False)


def build_space(spec):
    """Build (with caching) the ring described by a space description."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise InvalidSpec("space description must be an object with a 'kind' field")
    key = canonical_spec_key(spec)
    if key in _CACHE:
        return _CACHE[key]
    kind = spec["kind"]
    builders = {
        "projective_space": _build_projective,
        "grassmannian": _build_grassmannian,
        "product": _build_product,
        "ci_model": _build_ci_model,
        "blowup": _build_blowup,
        "plane_curve_family": _build_plane_curve_family,
    }
    if kind not in builders:
        raise InvalidSpec(f"unknown space kind {kind!r}")
    ring = builders[kind](spec)
    _CACHE[key] = ring
    return ring


def _require_field(spec, field):
    if field not in spec:
        raise InvalidSpec(f"{spec.get('kind')}: missing field {field!r}")
    return spec[field]


def _require_int(spec, field, minimum=None):
    if field not in spec:
        raise InvalidSpec(f"{spec.get('kind')}: missing field {field!r}")
    v = spec[field]
    if not isinstance(v, int) or isinstance(v, bool):
        raise InvalidSpec(f"{spec.get('kind')}: field {field!r} must be an integer")
    if minimum is not None and v < minimum:
        raise InvalidSpec(f"{spec.get('kind')}: field {field!r} must be >= {minimum}")
    return v


def _coeff_dict(raw, where, allow_empty=False):
    if not isinstance(raw, dict) or (not raw and not allow_empty):
        raise InvalidSpec(f"{where}: expected a nonempty object of label -> coefficient")
    out = {}
    for label, val in raw.items():
        try:
            out[label] = Fraction(str(val))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidSpec(f"{where}: bad coefficient for {label!r}: {val!r}") from exc
    return out


# -- projective space ---------------------------------------------------------


def projective_space(n):
    return build_space({"kind": "projective_space", "n": int(n)})


def _build_projective(spec):
    n = _require_int(spec, "n", minimum=0)
    basis = [("1", 0)]
    for k in range(1, n + 1):
        basis.append(("h" if k == 1 else f"h^{k}", 2 * k))
    one = Fraction(1)
    structure = {}
    for i in range(n + 1):
        for j in range(n + 1 - i):
            structure[(i, j)] = {i + j: one}
    return GradedBasisRing(n, basis, structure, {n: one} if n >= 0 else {}, space=spec)


# -- grassmannian -------------------------------------------------------------


def grassmannian(k, n):
    return build_space({"kind": "grassmannian", "k": int(k), "n": int(n)})


def _build_grassmannian(spec):
    k = _require_int(spec, "k", minimum=1)
    n = _require_int(spec, "n", minimum=2)
    if not 0 < k < n:
        raise InvalidSpec("grassmannian requires 0 < k < n")
    cols = n - k
    parts = schubert.partitions_in_box(k, cols)
    index = {lam: i for i, lam in enumerate(parts)}
    basis = [(schubert.partition_label(lam), 2 * sum(lam)) for lam in parts]
    dim = k * cols
    one = Fraction(1)
    structure = {}
    for a, lam in enumerate(parts):
        for b, mu in enumerate(parts):
            if sum(lam) + sum(mu) > dim:
                continue
            prod = schubert.multiply_partitions(lam, mu, k, cols)
            if prod:
                structure[(a, b)] = {index[nu]: Fraction(c) for nu, c in prod.items()}
    box = tuple([cols] * k)
    return GradedBasisRing(dim, basis, structure, {index[box]: one}, space=spec)


# -- products -----------------------------------------------------------------


def product_space(*factors):
    specs = []
    for f in factors:
        if isinstance(f, GradedBasisRing):
            if not isinstance(f.space, dict):
                raise InvalidSpec("product factors must carry a space description")
            specs.append(f.space)
        else:
            specs.append(f)
    return build_space({"kind": "product", "factors": specs})


def _build_product(spec):
    raw = spec.get("factors")
    if not isinstance(raw, list) or not raw:
        raise InvalidSpec("product: 'factors' must be a nonempty list")
    factors = [build_space(s) for s in raw]
    return tensor_ring(factors, space=spec)


# -- complete-intersection (Lefschetz truncation) model -----------------------


def ci_model(ambient, xi, middle_rank, middle_pairing=None):
    """Ring of a complete intersection cut out of `ambient` by a class
    with fundamental class `xi`, with `middle_rank` abstract primitive
    middle classes (see the builder for the full contract)."""
    if isinstance(ambient, GradedBasisRing):
        if not isinstance(ambient.space, dict):
            raise InvalidSpec("ci_model ambient must carry a space description")
        amb_spec = ambient.space
    else:
        amb_spec = ambient
    if hasattr(xi, "coeffs"):
        xi_raw = {xi.ring.basis[i][0]: str(c) for i, c in sorted(xi.coeffs.items())}
    else:
        xi_raw = {str(l): str(Fraction(str(v))) for l, v in xi.items()}
    spec = {
        "kind": "ci_model",
        "ambient": amb_spec,
        "fundamental_class_expr": xi_raw,
        "middle_rank": int(middle_rank),
    }
    if middle_pairing is not None:
        spec["middle_pairing"] = [[str(Fraction(str(v))) for v in row] for row in middle_pairing]
    return build_space(spec)


def hypersurface_model(n, d, middle_rank):
    """Degree-d hypersurface in P^n as a ci_model."""
    return ci_model({"kind": "projective_space", "n": int(n)}, {"h": int(d)}, middle_rank)


def _default_middle_pairing(rank, odd):
    z, one = Fraction(0), Fraction(1)
    if not odd:
        return [[one if i == j else z for j in range(rank)] for i in range(rank)]
    if rank % 2:
        raise DegeneratePairing(
            "an antisymmetric middle pairing needs even rank; got rank "
            f"{rank} with no pairing supplied"
        )
    m = [[z] * rank for _ in range(rank)]
    for i in range(rank // 2):
        m[2 * i][2 * i + 1] = one
        m[2 * i + 1][2 * i] = -one
    return m


def _build_ci_model(spec):
    amb = build_space(_require_field(spec, "ambient"))
    if any(deg % 2 for _, deg in amb.basis):
        raise InvalidSpec("ci_model ambient must have even cohomology only")
    xi = amb.from_label_dict(
        _coeff_dict(
            _require_field(spec, "fundamental_class_expr"),
            "ci_model fundamental_class_expr",
        )
    )
    if xi.is_zero() or xi.degree % 2 or xi.degree == 0:
        raise InvalidSpec(
            "ci_model fundamental_class_expr must be homogeneous of positive even degree"
        )
    s = xi.degree // 2
    d = amb.dim - s
    if d < 1:
        raise InvalidSpec("ci_model requires ambient dimension > codimension")
    top = 2 * d
    k_prim = _require_int(spec, "middle_rank", minimum=0)

    def amb_class(i):
        return amb.basis_class(amb.basis[i][0])

    def pair_xi(i, j):
        return amb.integrate(amb.multiply(amb.multiply(amb_class(i), amb_class(j)), xi))

    # Lefschetz-range check: restriction must stay injective at and below
    # the middle, i.e. the xi-twisted ambient pairing has full row rank.
    for t in range(0, d + 1):
        rows = amb.degree_indices(t)
        if not rows:
            continue
        cols = amb.degree_indices(top - t)
        m = linalg.mat([[pair_xi(i, j) for j in cols] for i in rows])
        if linalg.rank(m) != len(rows):
            raise NonLefschetzRange(
                f"xi-twisted ambient pairing drops rank in degree {t}"
            )

    odd_middle = bool(d % 2)
    if "middle_pairing" in spec:
        rawp = spec["middle_pairing"]
        if (
            not isinstance(rawp, list)
            or len(rawp) != k_prim
            or any(not isinstance(r, list) or len(r) != k_prim for r in rawp)
        ):
            raise InvalidSpec("middle_pairing must be a middle_rank x middle_rank matrix")
        prim_pairing = [[Fraction(str(v)) for v in row] for row in rawp]
        for i in range(k_prim):
            for j in range(k_prim):
                want = -prim_pairing[j][i] if odd_middle else prim_pairing[j][i]
                if prim_pairing[i][j] != want:
                    kind = "antisymmetric" if odd_middle else "symmetric"
                    raise InvalidSpec(f"middle_pairing must be {kind}")
        if k_prim and linalg.inverse(linalg.mat(prim_pairing)) is None:
            raise DegeneratePairing("supplied middle pairing is singular")
    else:
        prim_pairing = _default_middle_pairing(k_prim, odd_middle)

    # Basis layout: ambient classes survive through degree d (labels kept),
    # primitives sit in the middle, degrees above d are duals of the
    # complementary ambient classes (label = ambient label + "*").
    basis = []
    amb_to_x = {}
    dual_to_x = {}
    prim_to_x = {}
    for t in range(0, top + 1):
        if t <= d:
            for i in amb.degree_indices(t):
                amb_to_x[i] = len(basis)
                basis.append((amb.basis[i][0], t))
        if t == d:
            for p in range(k_prim):
                prim_to_x[p] = len(basis)
                basis.append((f"m{p + 1}", d))
        if t > d:
            for i in amb.degree_indices(top - t):
                dual_to_x[i] = len(basis)
                basis.append((amb.basis[i][0] + "*", t))

    nx = len(basis)
    point_index = dual_to_x[amb.degree_indices(0)[0]]
    kind_of = {}
    for i, x in amb_to_x.items():
        kind_of[x] = ("amb", i)
    for i, x in dual_to_x.items():
        kind_of[x] = ("dual", i)
    for p, x in prim_to_x.items():
        kind_of[x] = ("prim", p)

    structure = {}
    for a in range(nx):
        ka, pa = kind_of[a]
        da = basis[a][1]
        for b in range(nx):
            kb, pb = kind_of[b]
            db = basis[b][1]
            total = da + db
            if total > top:
                continue
            out = {}
            if ka == "amb" and kb == "amb":
                prod = amb.multiply(amb_class(pa), amb_class(pb))
                if total <= d:
                    out = {amb_to_x[i]: c for i, c in prod.coeffs.items()}
                else:
                    for i in amb.degree_indices(top - total):
                        c = amb.integrate(amb.multiply(amb.multiply(amb_class(i), prod), xi))
                        if c != 0:
                            out[dual_to_x[i]] = c
            elif ka == "amb" and kb == "dual":
                for i in amb.degree_indices(top - total):
                    prod = amb.multiply(amb_class(i), amb_class(pa))
                    c = prod.coeffs.get(pb, Fraction(0))
                    if c != 0:
                        out[dual_to_x[i]] = c
            elif ka == "dual" and kb == "amb":
                for i in amb.degree_indices(top - total):
                    prod = amb.multiply(amb_class(i), amb_class(pb))
                    c = prod.coeffs.get(pa, Fraction(0))
                    if c != 0:
                        out[dual_to_x[i]] = c
            elif ka == "prim" and kb == "prim":
                c = prim_pairing[pa][pb]
                if c != 0:
                    out[point_index] = c
            elif ka == "prim" and kb == "amb" and db == 0:
                out = {a: Fraction(1)}
            elif kb == "prim" and ka == "amb" and da == 0:
                out = {b: Fraction(1)}
            # every other mixed product vanishes (primitives against
            # positive-degree restricted or dual classes; dual against dual
            # would overflow except at impossible degrees)
            if out:
                structure[(a, b)] = out

    ring = GradedBasisRing(d, basis, structure, {point_index: Fraction(1)}, space=spec)

    images = []
    for i in range(len(amb.basis)):
        t = amb.basis[i][1]
        if t <= d:
            images.append(ring.basis_class(ring.basis[amb_to_x[i]][0]))
        else:
            coeffs = {}
            for jx in amb.degree_indices(top - t):
                c = pair_xi(jx, i)
                if c != 0:
                    coeffs[dual_to_x[jx]] = c
            images.append(ClassVector(ring, t, coeffs))
    ring.restrict_map = RingMap(amb, ring, images)
    ring.ci_ambient = amb
    ring.ci_xi = xi
    ring.ci_primitive_indices = tuple(prim_to_x[p] for p in range(k_prim))
    return ring


# -- blow-ups -----------------------------------------------------------------


def blowup(base, center, codim, pushforward, normal_chern=None):
    """Blow-up of `base` along `center` of codimension `codim`.

    `pushforward` maps every center basis label to the label-coefficient
    dict of its image class in the base (degree shifted up by 2*codim).
    `normal_chern` maps j (as int or str) to the label-coefficient dict
    of the j-th Chern class of the center's normal bundle; classes
    c_1..c_{codim-1} are required, plus c_codim when codim >= 3.
    """

    def spec_of(r):
        if isinstance(r, GradedBasisRing):
            if not isinstance(r.space, dict):
                raise InvalidSpec("blowup inputs must carry space descriptions")
            return r.space
        return r

    spec = {
        "kind": "blowup",
        "base": spec_of(base),
        "center": spec_of(center),
        "codim": int(codim),
        "center_pushforward_expr": {
            str(z): {str(l): str(Fraction(str(v))) for l, v in img.items()}
            for z, img in pushforward.items()
        },
        "normal_chern": {
            str(j): {str(l): str(Fraction(str(v))) for l, v in cls.items()}
            for j, cls in (normal_chern or {}).items()
        },
    }
    return build_space(spec)


def _build_blowup(spec):
    base = build_space(_require_field(spec, "base"))
    center = build_space(_require_field(spec, "center"))
    c = _require_int(spec, "codim", minimum=1)
    if c == 1:
        return base
    if any(deg % 2 for _, deg in base.basis) or any(deg % 2 for _, deg in center.basis):
        raise InvalidSpec("blowup requires base and center with even cohomology only")
    d = base.dim
    if center.dim != d - c:
        raise InvalidSpec(
            f"center dimension {center.dim} incompatible with codimension {c} in dimension {d}"
        )

    raw_push = spec.get("center_pushforward_expr")
    if not isinstance(raw_push, dict):
        raise InvalidSpec(
            "blowup: 'center_pushforward_expr' must map center labels to base classes"
        )
    push = {}
    for zi, (zl, zdeg) in enumerate(center.basis):
        if zl not in raw_push:
            raise InvalidSpec(f"blowup: pushforward missing center class {zl!r}")
        img = base.from_label_dict(_coeff_dict(raw_push[zl], f"pushforward of {zl!r}"))
        if not img.is_zero() and img.degree != zdeg + 2 * c:
            raise InvalidSpec(
                f"blowup: pushforward of {zl!r} must have degree {zdeg + 2 * c}"
            )
        push[zi] = img
    extra = set(raw_push) - {l for l, _ in center.basis}
    if extra:
        raise InvalidSpec(f"blowup: pushforward names unknown center classes {sorted(extra)}")

    need = list(range(1, c)) + ([c] if c >= 3 else [])
    raw_chern = spec.get("normal_chern") or {}
    chern = {0: center.unit()}
    for j in need:
        rawj = raw_chern.get(str(j), raw_chern.get(j))
        if rawj is None:
            raise InvalidSpec(f"blowup: normal_chern missing c_{j}")
        cls = center.from_label_dict(
            _coeff_dict(rawj, f"normal_chern c_{j}", allow_empty=True), degree=2 * j
        )
        chern[j] = cls

    def push_linear(v):
        out = {}
        for zi, coeff in v.coeffs.items():
            for bi, cb in push[zi].coeffs.items():
                out[bi] = out.get(bi, Fraction(0)) + coeff * cb
        return out  # base-index dict

    # i^* by pairing adjunction against the center's own duality.
    def i_upper_star(x):
        t = x.degree
        td = 2 * center.dim - t
        rows = center.degree_indices(td)
        if t > 2 * center.dim or not rows:
            return center.zero(max(t, 0))
        duals = center.dual_basis(td)
        out = center.zero(t)
        for pos, zi in enumerate(rows):
            val = base.integrate(base.multiply(x, push[zi]))
            if val != 0:
                out = out + duals[pos].scale(val)
        return out

    # Basis: per degree, base classes then exceptional classes (z, j).
    entries = []
    for bi, (bl, bdeg) in enumerate(base.basis):
        entries.append((bdeg, 0, bi, ("base", bi)))
    for j in range(1, c):
        for zi, (zl, zdeg) in enumerate(center.basis):
            entries.append((zdeg + 2 * j, j, zi, ("exc", zi, j)))
    entries.sort(key=lambda e: (e[0], e[1], e[2]))
    basis = []
    base_to_bl = {}
    exc_to_bl = {}
    for deg, _, _, tag in entries:
        if tag[0] == "base":
            base_to_bl[tag[1]] = len(basis)
            basis.append((base.basis[tag[1]][0], deg))
        else:
            _, zi, j = tag
            zl = center.basis[zi][0]
            basis.append((f"{zl} E" if j == 1 else f"{zl} E^{j}", deg))
            exc_to_bl[(zi, j)] = len(basis) - 1

    def embed_base(v):
        return {base_to_bl[i]: cc for i, cc in v.coeffs.items()}

    def push_fn(v, p):
        """j_*(g^* v · zeta^p) expanded over the blow-up basis."""
        out = {}
        if v.is_zero():
            return out
        if p <= c - 2:
            sign = Fraction(-1) ** p
            for zi, coeff in v.coeffs.items():
                idx = exc_to_bl[(zi, p + 1)]
                out[idx] = out.get(idx, Fraction(0)) + sign * coeff
            return out
        if p == c - 1:
            out = {}
            for bi, cb in push_linear(v).items():
                out[base_to_bl[bi]] = out.get(base_to_bl[bi], Fraction(0)) + cb
            for i in range(1, c):
                sub = push_fn(center.multiply(v, chern[i]), c - 1 - i)
                for idx, cc in sub.items():
                    out[idx] = out.get(idx, Fraction(0)) - cc
            return out
        out = {}
        for i in range(1, c + 1):
            if i not in chern:
                raise InvalidSpec(f"blowup: normal_chern missing c_{i}")
            sub = push_fn(center.multiply(v, chern[i]), p - i)
            for idx, cc in sub.items():
                out[idx] = out.get(idx, Fraction(0)) - cc
        return out

    nb = len(basis)
    tags = [None] * nb
    for bi, x in base_to_bl.items():
        tags[x] = ("base", bi)
    for (zi, j), x in exc_to_bl.items():
        tags[x] = ("exc", zi, j)

    structure = {}
    for a in range(nb):
        for b in range(nb):
            da, db = basis[a][1], basis[b][1]
            if da + db > 2 * d:
                continue
            out = {}
            a_tag = tags[a]
            b_tag = tags[b]
            if a_tag[0] == "base" and b_tag[0] == "base":
                prod = base.multiply(
                    base.basis_class(base.basis[a_tag[1]][0]),
                    base.basis_class(base.basis[b_tag[1]][0]),
                )
                out = embed_base(prod)
            elif a_tag[0] == "base" or b_tag[0] == "base":
                if a_tag[0] == "base":
                    bi, (zi, j) = a_tag[1], (b_tag[1], b_tag[2])
                else:
                    bi, (zi, j) = b_tag[1], (a_tag[1], a_tag[2])
                pulled = i_upper_star(base.basis_class(base.basis[bi][0]))
                w = center.multiply(pulled, center.basis_class(center.basis[zi][0]))
                for zk, cc in w.coeffs.items():
                    idx = exc_to_bl[(zk, j)]
                    out[idx] = out.get(idx, Fraction(0)) + cc
            else:
                zi, j = a_tag[1], a_tag[2]
                wi, k = b_tag[1], b_tag[2]
                prod = center.multiply(
                    center.basis_class(center.basis[zi][0]),
                    center.basis_class(center.basis[wi][0]),
                )
                sign = Fraction(-1) ** (j + k - 1)
                for idx, cc in push_fn(prod, j + k - 1).items():
                    out[idx] = out.get(idx, Fraction(0)) + sign * cc
            out = {idx: cc for idx, cc in out.items() if cc != 0}
            if out:
                structure[(a, b)] = out

    integration = {}
    for bi, cc in base.integration.items():
        integration[base_to_bl[bi]] = cc
    ring = GradedBasisRing(d, basis, structure, integration, space=spec)
    ring.blowup_base = base
    ring.blowup_center = center
    return ring


# -- universal plane curve ----------------------------------------------------


def plane_curve_family(d, middle_rank=0):
    return build_space(
        {"kind": "plane_curve_family", "d": int(d), "middle_rank": int(middle_rank)}
    )


def _build_plane_curve_family(spec):
    d = _require_int(spec, "d", minimum=1)
    middle_rank = spec.get("middle_rank", 0)
    if not isinstance(middle_rank, int) or middle_rank < 0:
        raise InvalidSpec("plane_curve_family: middle_rank must be a nonnegative integer")
    n_param = d * (d + 3) // 2
    ambient_spec = {
        "kind": "product",
        "factors": [
            {"kind": "projective_space", "n": 2},
            {"kind": "projective_space", "n": n_param},
        ],
    }
    ci_spec = {
        "kind": "ci_model",
        "ambient": ambient_spec,
        "fundamental_class_expr": {"h # 1": str(d), "1 # h": "1"},
        "middle_rank": middle_rank,
    }
    inner = build_space(ci_spec)
    # Same ring data, reported under the family's own description.
    ring = GradedBasisRing(
        inner.dim, inner.basis, inner.structure, inner.integration, space=spec
    )
    ring.restrict_map = inner.restrict_map
    ring.ci_ambient = inner.ci_ambient
    ring.ci_xi = inner.ci_xi
    ring.ci_primitive_indices = inner.ci_primitive_indices
    return ring


# -- primitive-killing surjection ---------------------------------------------


def kill_primitive_middle(ring):
    """The surjection collapsing a ci_model's primitive middle classes.

    Returns (target ring, map). For rings without primitive middle
    classes the map is the identity. The map is multiplicative away
    from pairs of killed classes (their products hit the point class,
    which survives); projector transport along it is re-verified by the
    caller, which is the operative correctness check.
    """
    prim = getattr(ring, "ci_primitive_indices", ())
    if not prim:
        images = [ring.basis_class(l) for l, _ in ring.basis]
        return ring, RingMap(ring, ring, images)
    spec = dict(ring.space)
    if spec.get("kind") not in ("ci_model", "plane_curve_family"):
        raise InvalidSpec("kill_primitive_middle needs a ci_model-backed ring")
    spec["middle_rank"] = 0
    spec.pop("middle_pairing", None)
    target = build_space(spec)
    prim_set = set(prim)
    images = []
    for i, (label, deg) in enumerate(ring.basis):
        if i in prim_set:
            images.append(target.zero(deg))
        else:
            images.append(target.basis_class(label))
    q = RingMap(ring, target, images, require_surjective=True, strict=False)
    return target, q


# -- closed-form dimension formulas -------------------------------------------


def fano_delta(n, degrees, r):
    """The printed lower-bound formula for the dimension of the Fano
    scheme of r-planes on a complete intersection of the given degrees
    in P^n; the binomial term reads the largest degree only."""
    degrees = tuple(sorted(int(x) for x in degrees))
    if not degrees or any(x < 1 for x in degrees):
        raise InvalidSpec("degrees must be a nonempty list of positive integers")
    n, r = int(n), int(r)
    s = len(degrees)
    dmax = degrees[-1]
    return min((r + 1) * (n - r) - comb(dmax + r, r), n - 2 * r - s)


def fano_delta_notes(n, degrees, r):
    """Caveats accompanying fano_delta, as printable warning strings."""
    degrees = tuple(sorted(int(x) for x in degrees))
    notes = []
    if len(degrees) > 1:
        notes.append(
            "warning: multidegree input — the formula's binomial term uses only the "
            "largest degree as printed; a per-degree sum is NOT assumed"
        )
    if (int(n), degrees, int(r)) == (4, (3,), 1):
        notes.append(
            "warning: for lines on a cubic threefold the printed formula gives 1, "
            "while the classical Fano surface of lines is 2-dimensional; the printed "
            "value is reported unchanged"
        )
    return notes


def rep_variety_dim(g, n):
    """Dimension of the representation variety of a genus-g surface
    group into GL(n): (2g-1)n^2+1 for g>1, n^2+n for g=1."""
    g, n = int(g), int(n)
    if g < 1 or n < 1:
        raise InvalidSpec("rep_variety_dim requires g >= 1 and n >= 1")
    if g == 1:
        return n * n + n
    return (2 * g - 1) * n * n + 1


def barth_range(n, d):
    """Largest degree through which the cohomology of a d-dimensional
    subvariety of P^n is pinned to the ambient one: 2d - n."""
    n, d = int(n), int(d)
    if d > n:
        raise InvalidSpec("barth_range requires d <= n")
    return 2 * d - n
