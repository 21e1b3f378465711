"""Construction and verification of graded projector decompositions.

A projector set splits the diagonal of a space into orthogonal
idempotent self-correspondences, one per cohomological degree, each
acting as the identity on its own degree and as zero elsewhere. The
constructors here build such sets from nondegenerate pairing blocks,
from closed-form hyperplane powers on hypersurface models, and from
products of existing sets; `verify_ck` re-checks every defining
identity in exact arithmetic.
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .correspondences import (
    CorrespondenceClass,
    act,
    compose,
    diagonal,
    exterior_product,
    from_pair,
    transpose,
    zero_correspondence,
)
from .errors import (
    IncompleteInput,
    NotIdempotent,
    OddRankObstruction,
    PreconditionViolated,
    RingMismatch,
)
from .graded_ring import tensor_ring


class ProjectorSet:
    """A family of degree-shift-0 self-correspondences indexed by
    cohomological degree.

    `complete` is a claim (sum equals the diagonal) recorded by the
    constructor, not inferred; `remainder_indices` marks the indices
    whose members were produced by subtracting the rest from the
    diagonal; `report` holds the latest verification result.
    """

    __slots__ = ("ring", "projectors", "complete", "remainder_indices", "report")

    def __init__(self, ring, projectors, complete=False,
                 remainder_indices=(), report=None):
        self.ring = ring
        top = 2 * ring.dim
        projs = {}
        for i in sorted(projectors):
            p = projectors[i]
            i = int(i)
            if not 0 <= i <= top:
                raise ValueError(f"index {i} outside [0, {top}]")
            if p.source != ring or p.target != ring:
                raise RingMismatch(
                    "projector members must be self-correspondences of the set's ring"
                )
            if p.shift != 0:
                raise ValueError(
                    f"member at index {i} has degree shift {p.shift}, expected 0"
                )
            projs[i] = p
        self.projectors = projs
        self.complete = bool(complete)
        self.remainder_indices = frozenset(int(i) for i in remainder_indices)
        self.report = report

    def indices(self):
        return tuple(sorted(self.projectors))

    def member(self, i):
        return self.projectors[i]

    def total(self):
        out = zero_correspondence(self.ring, self.ring, 0)
        for i in self.indices():
            out = out + self.projectors[i]
        return out

    def __eq__(self, other):
        if not isinstance(other, ProjectorSet):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.projectors == other.projectors
            and self.complete == other.complete
            and self.remainder_indices == other.remainder_indices
        )

    def __repr__(self):
        flags = []
        if self.complete:
            flags.append("complete")
        if self.remainder_indices:
            flags.append(f"remainder={sorted(self.remainder_indices)}")
        tail = " " + " ".join(flags) if flags else ""
        return f"<ProjectorSet indices={list(self.indices())}{tail}>"


def coevaluation_projector(X, p):
    """The projector onto degree p: sum over the degree-p basis of
    (dual class) x (basis class). Basis-independent; acts as the
    identity on degree p and as zero elsewhere."""
    terms = {}
    idx = X.degree_indices(p)
    duals = X.dual_basis(p)
    for pos, i in enumerate(idx):
        for j, c in duals[pos].coeffs.items():
            key = (j, i)
            terms[key] = terms.get(key, Fraction(0)) + c
    return CorrespondenceClass(X, X, 0, terms)


def algebraic_projectors(X, m=None, algebraic_degrees=None):
    """Projectors for every even degree up to the cutoff `m` (default:
    the dimension), mirrored to the complementary range by transpose.

    Each requested degree must carry a nondegenerate pairing block
    (guaranteed for validly constructed rings); odd degrees up to the
    cutoff must have rank zero, else OddRankObstruction. The optional
    `algebraic_degrees` restricts which even degrees are split off,
    producing a partial (incomplete) set. The result is passed through
    `gram_schmidt_orthogonalize` and marked complete exactly when the
    members sum to the diagonal.
    """
    d = X.dim
    top = 2 * d
    if m is None:
        m = d
    for t in X.degrees():
        if t % 2 and t <= m and X.rank(t) > 0:
            raise OddRankObstruction(
                f"degree {t} has rank {X.rank(t)} but lies below the cutoff {m}"
            )
    if algebraic_degrees is None:
        wanted = [t for t in X.degrees() if t % 2 == 0 and t <= m]
    else:
        wanted = []
        for t in algebraic_degrees:
            t = int(t)
            if t % 2:
                raise ValueError(f"requested degree {t} is odd")
            if not 0 <= t <= top:
                raise ValueError(f"requested degree {t} outside [0, {top}]")
            if t <= m:
                wanted.append(t)
    projs = {}
    for t in sorted(wanted):
        if t in projs or X.rank(t) == 0:
            continue
        lower = min(t, top - t)
        pi = coevaluation_projector(X, lower)
        projs[lower] = pi
        if top - lower != lower:
            projs[top - lower] = transpose(pi)
    order = sorted(projs)
    ortho = gram_schmidt_orthogonalize([projs[i] for i in order])
    projs = dict(zip(order, ortho))
    total = zero_correspondence(X, X, 0)
    for p in projs.values():
        total = total + p
    return ProjectorSet(X, projs, complete=(total == diagonal(X)))


def remainder_projector(X, partial):
    """The diagonal minus the members of `partial`. Requires the
    members to be pairwise orthogonal idempotents (PreconditionViolated
    otherwise), which makes the remainder an idempotent orthogonal to
    all of them."""
    if partial.ring != X:
        raise RingMismatch("partial set lives over a different ring")
    idx = partial.indices()
    for i in idx:
        p = partial.projectors[i]
        if compose(p, p) != p:
            raise PreconditionViolated(f"member at index {i} is not idempotent")
    for i in idx:
        for j in idx:
            if i != j and not compose(
                partial.projectors[i], partial.projectors[j]
            ).is_zero():
                raise PreconditionViolated(
                    f"members at indices {i} and {j} are not orthogonal"
                )
    rem = diagonal(X)
    for i in idx:
        rem = rem - partial.projectors[i]
    return rem


def full_projectors(X):
    """The complete decomposition: algebraic projectors for all degrees
    strictly below the middle (and their mirrors), with the middle
    produced as the remainder. The middle index is always present, even
    when its projector is zero."""
    d = X.dim
    partial = (
        algebraic_projectors(X, m=d - 1) if d > 0 else ProjectorSet(X, {})
    )
    rem = remainder_projector(X, partial)
    projs = dict(partial.projectors)
    projs[d] = rem
    return ProjectorSet(X, projs, complete=True, remainder_indices={d})


def hypersurface_projectors(n, d, middle_rank):
    """Closed-form decomposition for a degree-d hypersurface model in
    P^n: away from the middle, the projector in degree 2r is
    (1/d) * H^(n-1-r) x H^r for the restricted hyperplane class H; the
    middle is the remainder."""
    from .spaces import hypersurface_model

    X = hypersurface_model(n, d, middle_rank)
    dim = n - 1
    amb = X.ci_ambient
    H = X.restrict_map.apply(amb.basis_class("h" if n >= 1 else "1"))
    powers = [X.unit()]
    for _ in range(dim):
        powers.append(X.multiply(powers[-1], H))
    projs = {}
    for r in range(dim + 1):
        if 2 * r == dim:
            continue
        projs[2 * r] = from_pair(powers[dim - r], powers[r]).scale(Fraction(1, d))
    partial = ProjectorSet(X, projs)
    projs[dim] = remainder_projector(X, partial)
    return ProjectorSet(X, projs, complete=True, remainder_indices={dim})


def product_projectors(PX, PY, product_ring=None):
    """Projectors on the product: the index-i member is the sum over
    p + q = i of the exterior products of the factors' members. Both
    inputs must claim completeness (IncompleteInput otherwise); the
    result is complete. Zero sums are omitted."""
    if not PX.complete:
        raise IncompleteInput("left factor set does not claim completeness")
    if not PY.complete:
        raise IncompleteInput("right factor set does not claim completeness")
    XY = product_ring if product_ring is not None else tensor_ring((PX.ring, PY.ring))
    if getattr(XY, "tensor_factors", None) != (PX.ring, PY.ring):
        raise RingMismatch("product ring does not have the two input rings as factors")
    sums = {}
    for p, fp in PX.projectors.items():
        for q, gq in PY.projectors.items():
            term = exterior_product(fp, gq, XY, XY)
            i = p + q
            sums[i] = sums[i] + term if i in sums else term
    projs = {i: c for i, c in sums.items() if not c.is_zero()}
    return ProjectorSet(XY, projs, complete=True)


def gram_schmidt_orthogonalize(projectors):
    """Successively replace each idempotent by its two-sided correction
    against the sum of the already-processed ones: with A the diagonal
    minus that sum, the member becomes A-then-member-then-A. Inputs that
    are not idempotent raise NotIdempotent, as does a correction step
    that fails to produce an idempotent; an already pairwise-orthogonal
    family is returned unchanged. Orthogonality of the output is then
    automatic: each corrected member annihilates the running sum on
    both sides."""
    projs = list(projectors)
    if not projs:
        return []
    X = projs[0].source
    for k, p in enumerate(projs):
        if p.source != X or p.target != X:
            raise RingMismatch("all members must be self-correspondences of one ring")
        if p.shift != 0:
            raise ValueError(f"member at position {k} has nonzero degree shift")
        if compose(p, p) != p:
            raise NotIdempotent(f"input at position {k} is not idempotent")
    delta = diagonal(X)
    out = []
    running = zero_correspondence(X, X, 0)
    for k, p in enumerate(projs):
        complement = delta - running
        corrected = compose(compose(complement, p), complement)
        if compose(corrected, corrected) != corrected:
            raise NotIdempotent(
                f"correction at position {k} did not produce an idempotent"
            )
        out.append(corrected)
        running = running + corrected
    return out


# -- verification -----------------------------------------------------------


def _corr_residual(c):
    return [[lx, ly, str(v)] for lx, ly, v in c.label_terms()]


def _class_residual(v):
    return [[label, str(c)] for label, c in sorted(v.label_dict().items())]


def _corr_entry(check, indices, residual):
    entry = {"check": check, "indices": list(indices), "pass": residual.is_zero()}
    if not entry["pass"]:
        entry["residual_class"] = _corr_residual(residual)
    return entry


def verify_ck(P, jobs=None):
    """Exact verification of a projector set. Checks, in order:
    idempotence of each member, orthogonality of every ordered pair,
    completeness (only when the set claims it), and the graded action
    of each member on every basis class. Returns the report (a list of
    entries {check, indices, pass, residual_class?}) and stores it on
    the set. `jobs` > 1 evaluates the orthogonality grid concurrently
    with identical output."""
    X = P.ring
    idx = P.indices()
    entries = []
    for i in idx:
        p = P.projectors[i]
        entries.append(_corr_entry("idempotence", (i,), compose(p, p) - p))
    pairs = [(i, j) for i in idx for j in idx if i != j]

    def orthogonality(pair):
        i, j = pair
        return _corr_entry(
            "orthogonality", pair, compose(P.projectors[i], P.projectors[j])
        )

    if jobs is not None and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            entries.extend(pool.map(orthogonality, pairs))
    else:
        entries.extend(orthogonality(pair) for pair in pairs)
    if P.complete:
        entries.append(_corr_entry("completeness", idx, P.total() - diagonal(X)))
    for i in idx:
        p = P.projectors[i]
        for k in range(len(X.basis)):
            e = X.basis_vector(k)
            got = act(p, e)
            want = e if X.basis[k][1] == i else X.zero(e.degree)
            residual = got - want
            entry = {
                "check": "graded_action",
                "indices": [i],
                "basis_class": X.basis[k][0],
                "pass": residual.is_zero(),
            }
            if not entry["pass"]:
                entry["residual_class"] = _class_residual(residual)
            entries.append(entry)
    P.report = entries
    return entries


def report_passes(report):
    return all(entry["pass"] for entry in report)


def failing_checks(report):
    """The distinct check names that failed, in report order."""
    seen = []
    for entry in report:
        if not entry["pass"] and entry["check"] not in seen:
            seen.append(entry["check"])
    return seen


# -- motives ----------------------------------------------------------------


class MotiveObject:
    """A triple (ring, idempotent self-correspondence, twist)."""

    __slots__ = ("ring", "projector", "twist")

    def __init__(self, ring, projector, twist=0):
        if projector.source != ring or projector.target != ring:
            raise RingMismatch("motive projector must be a self-correspondence")
        if projector.shift != 0:
            raise ValueError("motive projector must have degree shift 0")
        if compose(projector, projector) != projector:
            raise NotIdempotent("motive projector is not idempotent")
        self.ring = ring
        self.projector = projector
        self.twist = int(twist)

    def __eq__(self, other):
        if not isinstance(other, MotiveObject):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.projector == other.projector
            and self.twist == other.twist
        )

    def __repr__(self):
        return f"<MotiveObject dim={self.ring.dim} twist={self.twist}>"


def motive_of_space(X, twist=0):
    return MotiveObject(X, diagonal(X), twist)


def tensor_motives(M, N):
    XY = tensor_ring((M.ring, N.ring))
    return MotiveObject(
        XY, exterior_product(M.projector, N.projector, XY, XY), M.twist + N.twist
    )


def tate_twist(M, r):
    """Twist by r: tensoring with the inverse r-th power of the
    Lefschetz motive, under the identification with the point factor
    dropped."""
    return MotiveObject(M.ring, M.projector, M.twist + int(r))


def lefschetz_motive():
    from .spaces import projective_space

    pt = projective_space(0)
    return MotiveObject(pt, diagonal(pt), -1)


def unit_motive():
    from .spaces import projective_space

    pt = projective_space(0)
    return MotiveObject(pt, diagonal(pt), 0)


def is_morphism(f, M, N):
    """Whether f defines a morphism of motives: the degree shift must
    equal the twist difference and f must absorb the two projectors
    (source projector composed in, target projector composed out)."""
    if f.source != M.ring or f.target != N.ring:
        raise RingMismatch("correspondence does not connect the two motives' rings")
    if f.shift != N.twist - M.twist:
        return False
    return compose(M.projector, f) == f and compose(f, N.projector) == f
