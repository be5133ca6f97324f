"""Fake weighted projective planes via degree and generator matrices.

A plane of Picard number one is encoded either by a *generator matrix*, an
integer 2x3 matrix whose primitive, pairwise distinct columns positively
span the plane, or dually by a *degree matrix*: the induced grading map
``Z^3 -> K = Z + Z/mu`` recorded as three columns ``(u_i, eta_i)`` with
``mu * u`` the fake weight vector.  Any two columns of a degree matrix
generate ``K``.

The canonical self-intersection degree is ``(w0+w1+w2)^2 / (w0*w1*w2)`` for
the fake weight vector ``w``; it is an integer exactly when ``w`` solves the
squared Markov type equation with parameter equal to the degree.  The planes
of integral degree fall into 24 series indexed by ``(degree, mu, eta)``;
:func:`classify` enumerates them below a norm bound, with the sporadic
isomorphisms among small members deduplicated by the canonical adjusted
form of :func:`adjust`.

Singularity data at the three toric fixed points (local class group order,
local Gorenstein index, T-singularity test and the exceptional curve count
of the minimal resolution) are computed exactly, by two independent routes
where the callers want cross-checks: group arithmetic in ``K`` and lattice
geometry of the fan cones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import gcd
from typing import Iterable, Sequence

from . import abelian, markov
from .abelian import KAutomorphism, KContext, KElement

Triple = tuple[int, int, int]

#: eta values of the adjusted degree matrices in each series family,
#: keyed by (degree, mu).  mu = 1 families carry no torsion data.
SERIES_ETAS: dict[tuple[int, int], tuple[int, ...]] = {
    (9, 1): (0,),
    (8, 1): (0,),
    (6, 1): (0,),
    (5, 1): (0,),
    (4, 2): (1,),
    (3, 3): (2,),
    (3, 2): (1,),
    (2, 4): (1, 3),
    (2, 3): (1, 2),
    (1, 9): (2, 5, 8),
    (1, 8): (1, 3, 5, 7),
    (1, 6): (1, 5),
    (1, 5): (1, 2, 3, 4),
}

#: (degree, mu) pairs carrying at least one series, in canonical order.
SERIES_FAMILIES = tuple(sorted(SERIES_ETAS, key=lambda t: (-t[0], t[1])))


@dataclass(frozen=True, order=True)
class SeriesId:
    a: int
    mu: int
    eta: int

    def __str__(self):
        return f"{self.a}-{self.mu}-{self.eta}"

    @classmethod
    def parse(cls, text: str) -> "SeriesId":
        a, mu, eta = (int(part) for part in text.split("-"))
        return cls(a, mu, eta)


@dataclass(frozen=True, order=True)
class DegreeMatrix:
    """Grading data ``(u_i, eta_i)`` of a plane with ``Cl = Z + Z/mu``."""

    mu: int
    u: Triple
    eta: Triple

    def __post_init__(self):
        if self.mu < 1:
            raise ValueError(f"torsion order must be positive, got {self.mu}")
        if len(self.u) != 3 or len(self.eta) != 3:
            raise ValueError("a degree matrix has exactly three columns")
        if any(x <= 0 for x in self.u):
            raise ValueError(f"free parts must be positive, got {self.u}")
        if any(not 0 <= e < self.mu for e in self.eta):
            raise ValueError(f"torsion parts must be reduced mod {self.mu}, got {self.eta}")
        ctx = self.context
        cols = self.columns
        for i in range(3):
            for j in range(i + 1, 3):
                if not abelian.pair_generates(cols[i], cols[j], ctx):
                    raise ValueError(
                        f"columns {i},{j} of (mu={self.mu}, u={self.u}, eta={self.eta})"
                        " fail to generate the class group"
                    )

    @property
    def context(self) -> KContext:
        return KContext(self.mu)

    @property
    def columns(self) -> tuple[KElement, KElement, KElement]:
        return tuple(KElement(self.u[i], self.eta[i]) for i in range(3))

    def permuted(self, perm: Sequence[int]) -> "DegreeMatrix":
        return DegreeMatrix(
            self.mu,
            tuple(self.u[i] for i in perm),
            tuple(self.eta[i] for i in perm),
        )

    def to_json_obj(self) -> dict:
        return {
            "mu": self.mu,
            "u": [str(x) for x in self.u],
            "eta": list(self.eta),
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "DegreeMatrix":
        mu = int(obj["mu"])
        u = tuple(int(x) for x in obj["u"])
        eta = tuple(int(x) for x in obj.get("eta", (0, 0, 0)))
        return cls(mu, u, tuple(e % mu for e in eta))


@dataclass(frozen=True, order=True)
class GeneratorMatrix:
    """2x3 integer matrix with primitive columns positively spanning Q^2."""

    rows: tuple[tuple[int, int, int], tuple[int, int, int]]

    def __post_init__(self):
        abelian.validate_generator_matrix(self.rows)

    def column(self, j: int) -> tuple[int, int]:
        return (self.rows[0][j], self.rows[1][j])

    @property
    def columns(self):
        return tuple(self.column(j) for j in range(3))

    def cone_of_fixed_point(self, k: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Generators of the fan cone carrying the k-th toric fixed point."""
        j1, j2 = (j for j in range(3) if j != k)
        return self.column(j1), self.column(j2)


def fake_weights_of_generator(p: GeneratorMatrix) -> Triple:
    """Absolute 2x2 minors ``w_i = |det(v_j ; j != i)|``."""
    return abelian.validate_generator_matrix(p.rows)


def fake_weights_of_degree_matrix(q: DegreeMatrix) -> Triple:
    return tuple(q.mu * x for x in q.u)


def degree(weights) -> Fraction:
    """Canonical self-intersection ``(w0+w1+w2)^2 / (w0 w1 w2)``, exact."""
    w0, w1, w2 = weights
    if w0 <= 0 or w1 <= 0 or w2 <= 0:
        raise ValueError(f"weights must be positive, got {weights}")
    return Fraction((w0 + w1 + w2) ** 2, w0 * w1 * w2)


def integral_degree(q: DegreeMatrix) -> int:
    d = degree(fake_weights_of_degree_matrix(q))
    if d.denominator != 1:
        raise ValueError(f"degree {d} of {q} is not integral")
    return d.numerator


def anticanonical_class(q: DegreeMatrix) -> KElement:
    """Sum of the three columns in ``K``; the anticanonical divisor class."""
    ctx = q.context
    total = ctx.zero()
    for col in q.columns:
        total = ctx.add(total, col)
    return total


def local_class_group_order(q: DegreeMatrix, k: int) -> int:
    """Order ``mu * u_k`` of the local class group at the k-th fixed point."""
    return q.mu * q.u[k]


def local_gorenstein_index(q: DegreeMatrix, k: int) -> int:
    """Order of the canonical class in the local class group at ``z(k)``.

    This is the least ``n >= 1`` with ``n * w_Z`` in the subgroup generated
    by the k-th column.
    """
    return abelian.k_membership_multiple(anticanonical_class(q), q.columns[k], q.context)


def is_t_singular(q: DegreeMatrix, k: int) -> tuple[bool, int | None]:
    """T-singularity test at ``z(k)``: the index squared divides the order.

    Returns ``(flag, d)`` where ``d = cl / iota^2`` when the test holds.
    """
    iota = local_gorenstein_index(q, k)
    cl = local_class_group_order(q, k)
    if cl % (iota * iota) == 0:
        return True, cl // (iota * iota)
    return False, None


def t_singular_chart(iota: int, d: int, b: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Affine chart matrix ``[[iota, iota], [d*iota + b, b]]`` of a
    T-singularity with the given index and ``cl = d * iota^2``.

    Requires ``gcd(b, iota) = 1`` so the columns are primitive.
    """
    if iota < 1 or d < 1:
        raise ValueError("chart parameters must be positive")
    if gcd(b, iota) != 1:
        raise ValueError(f"gcd({b}, {iota}) != 1: chart columns would be imprimitive")
    return ((iota, iota), (d * iota + b, b))


def cone_gorenstein_index(v: tuple[int, int], vp: tuple[int, int]) -> int:
    """Gorenstein index of the fixed point of the cone spanned by v, vp.

    For primitive generators ``(a, c)`` and ``(b, d)`` the index is
    ``|a*d - b*c| / gcd(c - d, b - a)``; this is the lattice-geometry route,
    independent of the class-group computation.
    """
    a, c = v
    b, d = vp
    det = a * d - b * c
    if det == 0:
        raise ValueError(f"vectors {v}, {vp} are collinear")
    if gcd(a, c) != 1 or gcd(b, d) != 1:
        raise ValueError("cone generators must be primitive")
    denom = gcd(c - d, b - a)
    if abs(det) % denom:
        raise AssertionError("Gorenstein index formula produced a non-integer")
    return abs(det) // denom


def _hirzebruch_jung_length(m: int, k: int) -> int:
    """Length of the negative continued fraction expansion of m/k."""
    count = 0
    while k > 0:
        b = -(-m // k)
        m, k = k, b * k - m
        count += 1
    if m != 1:
        raise AssertionError("continued fraction expansion did not terminate at 1")
    return count


def resolution_curve_count(v: tuple[int, int], vp: tuple[int, int]) -> int:
    """Number of exceptional curves of the minimal resolution of the cone.

    The cone is moved to the standard position ``cone(e1, (t, m))`` with
    ``0 <= t < m``; the singularity is then the cyclic quotient of order
    ``m`` and weight ``k = m - t``, whose minimal resolution has as many
    exceptional curves as the continued fraction expansion of ``m/k`` has
    steps.  Zero for a smooth cone.
    """
    a, c = v
    b, d = vp
    m = abs(a * d - b * c)
    if m == 0:
        raise ValueError(f"vectors {v}, {vp} are collinear")
    if m == 1:
        return 0
    if gcd(a, c) != 1 or gcd(b, d) != 1:
        raise ValueError("cone generators must be primitive")
    # unimodular map sending v to (1, 0)
    s, r = _bezout(a, c)
    x = s * b + r * d
    y = -c * b + a * d
    if y < 0:
        y = -y
    if y != m:
        raise AssertionError("normalization lost the cone determinant")
    t = x % m
    k = (m - t) % m
    if k == 0 or gcd(k, m) != 1:
        raise AssertionError(f"normalized cone type ({m}, {k}) is not reduced")
    return _hirzebruch_jung_length(m, k)


def _bezout(a: int, c: int) -> tuple[int, int]:
    """Coefficients ``(s, r)`` with ``s*a + r*c == 1`` for coprime a, c."""
    old_r, r = a, c
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t
    if old_r == 1:
        return old_s, old_t
    if old_r == -1:
        return -old_s, -old_t
    raise ValueError(f"{a} and {c} are not coprime")


# ---------------------------------------------------------------------------
# Correspondence between degree and generator matrices
# ---------------------------------------------------------------------------


def generator_of(q: DegreeMatrix) -> GeneratorMatrix:
    """A corresponding generator matrix, canonical via row Hermite form.

    Its columns are a basis problem: the transpose spans the kernel of the
    grading map, so column ``j`` of the result pairs with column ``j`` of
    ``q`` and per-fixed-point data line up.
    """
    basis = abelian.kernel_basis(q.columns, q.context)
    rows = abelian.transpose(basis)
    p = GeneratorMatrix((tuple(rows[0]), tuple(rows[1])))
    if not corresponds(q, p):
        raise AssertionError(f"kernel basis of {q} fails the correspondence test")
    return p


def annihilates(q: DegreeMatrix, rows: Iterable[Sequence[int]]) -> bool:
    """Whether ``sum_i row[i] * q_i == 0`` in ``K`` for every given row."""
    ctx = q.context
    for row in rows:
        total = ctx.zero()
        for coeff, col in zip(row, q.columns):
            total = ctx.add(total, ctx.scale(coeff, col))
        if total != ctx.zero():
            return False
    return True


def corresponds(q: DegreeMatrix, p: GeneratorMatrix) -> bool:
    """Correspondence test: same fake weights and ``q`` annihilates ``p``.

    For matrices sharing the fake weight vector, annihilation of both rows
    already forces the cokernel projection to agree with ``q`` up to
    automorphism, so this is an if-and-only-if test.
    """
    if fake_weights_of_generator(p) != fake_weights_of_degree_matrix(q):
        return False
    return annihilates(q, p.rows)


# ---------------------------------------------------------------------------
# Adjusted form, isomorphism, classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdjustTransform:
    """Column order and automorphism carrying a matrix to its adjusted form."""

    perm: tuple[int, int, int]
    phi: KAutomorphism


def _normalize_second_row(u: Triple, eta: Triple, ctx: KContext) -> tuple[Triple, KAutomorphism]:
    """Positive automorphism turning the torsion row into ``(0, 1, eta)``."""
    mu = ctx.mu
    if mu == 1:
        return (0, 0, 0), KAutomorphism(1, 0, 0)
    if gcd(u[0], mu) != 1:
        raise ValueError(f"leading free part {u[0]} is not coprime to mu={mu}")
    shift = (-eta[0] * ctx.inverse(u[0] % mu)) % mu
    shifted = tuple((eta[i] + shift * u[i]) % mu for i in range(3))
    if gcd(shifted[1], mu) != 1:
        raise ValueError(f"second torsion entry {shifted[1]} is not a unit mod {mu}")
    scale = ctx.inverse(shifted[1])
    final = tuple((scale * e) % mu for e in shifted)
    return final, KAutomorphism(1, (scale * shift) % mu, scale)


def adjust(q: DegreeMatrix) -> tuple[DegreeMatrix, AdjustTransform]:
    """Canonical adjusted representative of the isomorphism class of ``q``.

    The columns are permuted so the fake weight vector is arranged for its
    reduced equation class, then the torsion row is normalized to
    ``(0, 1, eta)`` by a positive automorphism.  When equal weights leave
    several admissible column orders, the candidate with the smallest
    ``eta`` wins; this resolves the sporadic coincidences among small
    series members, so equality of adjusted matrices is equivalent to
    isomorphism of the planes.
    """
    a = integral_degree(q)
    reduced_a = q.mu * a
    perms = markov.admissible_arrangements(q.u, reduced_a)
    best = None
    for perm in perms:
        u_p = tuple(q.u[i] for i in perm)
        eta_p = tuple(q.eta[i] for i in perm)
        eta_n, phi = _normalize_second_row(u_p, eta_p, q.context)
        candidate = (eta_n[2], perm)
        if best is None or candidate < best[0]:
            best = (candidate, DegreeMatrix(q.mu, u_p, eta_n), AdjustTransform(perm, phi))
    return best[1], best[2]


def is_adjusted(q: DegreeMatrix) -> bool:
    adjusted, _ = adjust(q)
    return adjusted == q


def isomorphism_witness(q1: DegreeMatrix, q2: DegreeMatrix):
    """A pair ``(phi, perm)`` with ``phi(q1)`` a column permutation of
    ``q2``, or ``None`` when the planes are not isomorphic.

    Only positivity-preserving automorphisms can match positive free parts,
    so the search space is ``mu * phi(mu)`` maps times six permutations.
    """
    if q1.mu != q2.mu:
        return None
    if sorted(q1.u) != sorted(q2.u):
        return None
    ctx = q1.context
    cols1 = q1.columns
    cols2 = q2.columns
    for phi in abelian.automorphisms(ctx, positive_only=True):
        image = [abelian.apply_automorphism(phi, col, ctx) for col in cols1]
        for perm in permutations(range(3)):
            if tuple(image[perm[j]] for j in range(3)) == cols2:
                return phi, perm
    return None


def is_isomorphic(q1: DegreeMatrix, q2: DegreeMatrix) -> bool:
    return isomorphism_witness(q1, q2) is not None


@dataclass(frozen=True)
class ClassifiedPlane:
    """One isomorphism class from the classification.

    ``series`` is the canonical label; ``all_series`` collects every series
    label whose member at this weight vector is isomorphic to it (more than
    one only for the three sporadic coincidence sets).
    """

    series: SeriesId
    matrix: DegreeMatrix
    all_series: tuple[SeriesId, ...]

    @property
    def weights(self) -> Triple:
        return fake_weights_of_degree_matrix(self.matrix)

    @property
    def norm(self) -> int:
        return sum(self.weights)


def classify(a: int, norm_bound: int) -> list[ClassifiedPlane]:
    """All planes of integral degree ``a`` with fake weight norm <= bound.

    One entry per isomorphism class, keyed by the canonical adjusted degree
    matrix; the per-node eta lists are deduplicated through :func:`adjust`
    and the grouping is re-verified against the isomorphism search.
    """
    if a < 1:
        raise ValueError(f"degree must be a positive integer, got {a}")
    out: list[ClassifiedPlane] = []
    for (deg, mu) in SERIES_FAMILIES:
        if deg != a:
            continue
        etas = SERIES_ETAS[(deg, mu)]
        tree = markov.enumerate_tree(mu * a, norm_bound // mu)
        for u_sorted in tree.nodes:
            u_arr, _ = markov.arrange(u_sorted, mu * a)
            second = (0, 1 % mu, 0)
            groups: dict[DegreeMatrix, list[int]] = {}
            for eta in etas:
                q = DegreeMatrix(mu, u_arr, (second[0], second[1], eta % mu))
                canonical, _ = adjust(q)
                groups.setdefault(canonical, []).append(eta)
            canon_list = sorted(groups)
            for canonical in canon_list:
                merged = groups[canonical]
                for eta in merged:
                    q = DegreeMatrix(mu, u_arr, (second[0], second[1], eta % mu))
                    if not is_isomorphic(q, canonical):
                        raise AssertionError(f"adjusted merge of eta={eta} at {u_arr} is wrong")
                for other in canon_list:
                    if other != canonical and is_isomorphic(other, canonical):
                        raise AssertionError(f"missed isomorphism between {other} and {canonical}")
                if integral_degree(canonical) != a:
                    raise AssertionError(f"classified matrix {canonical} has wrong degree")
                out.append(
                    ClassifiedPlane(
                        series=series_id(canonical),
                        matrix=canonical,
                        all_series=tuple(SeriesId(a, mu, e) for e in sorted(merged)),
                    )
                )
    out.sort(key=lambda c: (c.norm, c.matrix.u, c.matrix.eta, c.matrix.mu))
    return out


def series_id(q: DegreeMatrix) -> SeriesId:
    """Series label ``degree-mu-eta`` of an adjusted degree matrix."""
    adjusted, _ = adjust(q)
    if adjusted != q:
        raise ValueError(f"{q} is not in adjusted form")
    a = integral_degree(q)
    eta = q.eta[2] if q.mu > 1 else 0
    sid = SeriesId(a, q.mu, eta)
    if (a, q.mu) not in SERIES_ETAS or eta not in SERIES_ETAS[(a, q.mu)]:
        raise AssertionError(f"adjusted matrix {q} maps to unknown series {sid}")
    return sid


# ---------------------------------------------------------------------------
# Singularity reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SingularityReport:
    """Per-fixed-point singularity data of a plane of integral degree."""

    matrix: DegreeMatrix
    cl: Triple
    iota: Triple
    is_t: tuple[bool, bool, bool]
    d: tuple[int | None, int | None, int | None]
    res_curves: Triple

    def to_json_obj(self) -> dict:
        return {
            "cl": [str(x) for x in self.cl],
            "iota": [str(x) for x in self.iota],
            "isT": list(self.is_t),
            "d": [None if x is None else str(x) for x in self.d],
            "resCurves": list(self.res_curves),
        }


def singularity_report(q: DegreeMatrix) -> SingularityReport:
    p = generator_of(q)
    cl = tuple(local_class_group_order(q, k) for k in range(3))
    iota = tuple(local_gorenstein_index(q, k) for k in range(3))
    flags = []
    ds = []
    for k in range(3):
        flag, d = is_t_singular(q, k)
        flags.append(flag)
        ds.append(d)
    curves = tuple(resolution_curve_count(*p.cone_of_fixed_point(k)) for k in range(3))
    return SingularityReport(
        matrix=q,
        cl=cl,
        iota=iota,
        is_t=tuple(flags),
        d=tuple(ds),
        res_curves=curves,
    )


def plane_json_obj(c: ClassifiedPlane, with_report: bool = False) -> dict:
    obj = {
        "series": str(c.series),
        "mu": c.matrix.mu,
        "u": [str(x) for x in c.matrix.u],
        "eta": list(c.matrix.eta),
        "weights": [str(w) for w in c.weights],
        "degree": str(integral_degree(c.matrix)),
    }
    if len(c.all_series) > 1:
        obj["mergedSeries"] = [str(s) for s in c.all_series]
    if with_report:
        obj["report"] = singularity_report(c.matrix).to_json_obj()
    return obj


def report_markdown(reports: Sequence[SingularityReport]) -> str:
    """Markdown table of singularity data, one row per plane."""
    header = "| ID | Cl(Z) | Q | w_Z | (iota_0,iota_1,iota_2) | T | res curves |"
    sep = "|---|---|---|---|---|---|---|"
    lines = [header, sep]
    for rep in reports:
        q = rep.matrix
        sid = str(series_id(q)) if _has_series(q) else "-"
        group = "Z" if q.mu == 1 else f"Z + Z/{q.mu}"
        qtxt = "[{},{},{}]".format(*q.u)
        if q.mu > 1:
            qtxt += "/[{},{},{}]".format(*q.eta)
        wz = anticanonical_class(q)
        wz_txt = f"({wz.free}, {wz.tors})" if q.mu > 1 else f"({wz.free})"
        iota = "({},{},{})".format(*rep.iota)
        signs = "({},{},{})".format(*["+" if f else "-" for f in rep.is_t])
        curves = "({},{},{})".format(*rep.res_curves)
        lines.append(f"| {sid} | {group} | {qtxt} | {wz_txt} | {iota} | {signs} | {curves} |")
    return "\n".join(lines) + "\n"


def _has_series(q: DegreeMatrix) -> bool:
    try:
        series_id(q)
        return True
    except (ValueError, AssertionError):
        return False
