"""Structures: the data model for one algebra A given by structure constants,
individual axiom checks, and classification along the hierarchy
semibialgebra -> VN-core -> unital VN-core / very weak Hopf -> Hopf.

Every check is an exact matrix identity: PASS means the two sides are
bit-identical, FAIL carries the first differing basis column as witness,
SKIP means a map the axiom mentions is absent.
"""

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .errors import FieldMismatch, MissingMap, ShapeError
from .linmap import LinMap, chain, compose, identity, solve, swap, tensor

AXIOM_IDS = (
    "assoc", "coassoc", "compat", "unit", "counit",
    "vn_core", "unital_core",
    "vwh_left", "vwh_right", "vwh_s",
    "antipode", "antihom",
    "drinfeld_alpha", "drinfeld_beta", "quasi_left", "quasi_right",
    "s_squared", "alpha_invertible", "beta_invertible",
)

LABELS = (
    "semibialgebra", "vn_core", "unital_vn_core", "very_weak_bialgebra",
    "very_weak_hopf", "hopf", "quasi_vn_core",
)


@dataclass(frozen=True)
class Witness:
    input_label: str
    input_index: Optional[int]
    lhs: tuple
    rhs: tuple


@dataclass(frozen=True)
class CheckResult:
    verdict: str  # "PASS" | "FAIL" | "SKIP"
    witness: Optional[Witness] = None
    reason: Optional[str] = None
    note: Optional[str] = None

    def __post_init__(self):
        if self.verdict == "FAIL":
            assert self.witness is not None
        if self.verdict == "SKIP":
            assert self.reason


PASS = CheckResult("PASS")


@dataclass(frozen=True)
class Structure:
    """A structure-constant presentation of (A, mu, delta, ...)."""

    field: object
    n: int
    mu: LinMap          # A(x)A -> A
    delta: LinMap       # A -> A(x)A
    eta: Optional[LinMap] = None    # I -> A
    eps: Optional[LinMap] = None    # A -> I
    S: Optional[LinMap] = None      # A -> A
    alpha: Optional[LinMap] = None  # I -> A
    beta: Optional[LinMap] = None   # I -> A
    name: str = ""
    basis: Optional[tuple] = None

    def basis_label(self, i):
        if self.basis is not None:
            return self.basis[i]
        return f"b{i}"

    def maps(self):
        out = {"mu": self.mu, "delta": self.delta}
        for key in ("eta", "eps", "S", "alpha", "beta"):
            m = getattr(self, key)
            if m is not None:
                out[key] = m
        return out


def build_structure(field, n, mu, delta, eta=None, eps=None, S=None,
                    alpha=None, beta=None, name="", basis=None):
    """Validate shapes and assemble a Structure; no axioms are checked."""
    ranks = {"mu": (mu, 2, 1), "delta": (delta, 1, 2), "eta": (eta, 0, 1),
             "eps": (eps, 1, 0), "S": (S, 1, 1), "alpha": (alpha, 0, 1),
             "beta": (beta, 0, 1)}
    for key, (m, src, tgt) in ranks.items():
        if m is None:
            continue
        if m.n != n:
            raise ShapeError(f"{key}: base dim {m.n}, structure has {n}")
        if m.field != field:
            raise FieldMismatch(f"{key} is over {m.field!r}, not {field!r}")
        if (m.src_rank, m.tgt_rank) != (src, tgt):
            raise ShapeError(
                f"{key}: rank {m.src_rank}->{m.tgt_rank}, expected {src}->{tgt}")
    if basis is not None:
        basis = tuple(basis)
        if len(basis) != n:
            raise ShapeError(f"basis has {len(basis)} labels for dim {n}")
    return Structure(field=field, n=n, mu=mu, delta=delta, eta=eta, eps=eps,
                     S=S, alpha=alpha, beta=beta, name=name, basis=basis)


def mu3(s):
    """mu(mu (x) 1), the canonical triple product."""
    return compose(s.mu, tensor(s.mu, _id(s)))


def delta3(s):
    """(delta (x) 1) delta, the canonical triple coproduct."""
    return compose(tensor(s.delta, _id(s)), s.delta)


def _id(s, p=1):
    return identity(s.field, s.n, p)


def _c(s):
    return swap(s.field, s.n)


def compute_t(s):
    """t = (1 (x) eps.mu)(c (x) 1)(1 (x) delta.eta) : A -> A."""
    if s.eta is None or s.eps is None:
        raise MissingMap("t needs both unit and counit")
    delta_eta = compose(s.delta, s.eta)
    eps_mu = compose(s.eps, s.mu)
    return chain(tensor(_id(s), eps_mu),
                 tensor(_c(s), _id(s)),
                 tensor(_id(s), delta_eta))


def compute_r(s):
    """r = (eps.mu (x) 1)(1 (x) c)(delta.eta (x) 1) : A -> A (symmetric c)."""
    if s.eta is None or s.eps is None:
        raise MissingMap("r needs both unit and counit")
    delta_eta = compose(s.delta, s.eta)
    eps_mu = compose(s.eps, s.mu)
    return chain(tensor(eps_mu, _id(s)),
                 tensor(_id(s), _c(s)),
                 tensor(delta_eta, _id(s)))


def _input_label(s, j, src_rank):
    if src_rank == 0:
        return "1"
    digits = []
    for _ in range(src_rank):
        digits.append(j % s.n)
        j //= s.n
    return "(x)".join(s.basis_label(d) for d in reversed(digits))


def compare_maps(s, lhs, rhs):
    """None if equal, else a Witness for the first differing column."""
    if lhs == rhs:
        return None
    for j in range(lhs.cols):
        lc, rc = lhs.column(j), rhs.column(j)
        if lc != rc:
            return Witness(input_label=_input_label(s, j, lhs.src_rank),
                           input_index=j, lhs=tuple(lc), rhs=tuple(rc))
    # shapes differ
    return Witness(input_label="(shape)", input_index=None,
                   lhs=(lhs.tgt_rank, lhs.src_rank),
                   rhs=(rhs.tgt_rank, rhs.src_rank))


def _verdict(s, pairs):
    """PASS iff every (lhs, rhs) pair agrees; FAIL carries the first witness."""
    for lhs, rhs in pairs:
        w = compare_maps(s, lhs, rhs)
        if w is not None:
            return CheckResult("FAIL", witness=w)
    return PASS


def _skip(*missing):
    return CheckResult("SKIP", reason=f"{', '.join(missing)} absent")


def _missing(s, *keys):
    return [k for k in keys if getattr(s, k) is None]


def _check_assoc(s):
    lhs = compose(s.mu, tensor(_id(s), s.mu))
    rhs = compose(s.mu, tensor(s.mu, _id(s)))
    return _verdict(s, [(lhs, rhs)])


def _check_coassoc(s):
    lhs = compose(tensor(_id(s), s.delta), s.delta)
    rhs = compose(tensor(s.delta, _id(s)), s.delta)
    return _verdict(s, [(lhs, rhs)])


def _check_compat(s):
    lhs = compose(s.delta, s.mu)
    rhs = chain(tensor(s.mu, s.mu),
                tensor(_id(s), tensor(_c(s), _id(s))),
                tensor(s.delta, s.delta))
    return _verdict(s, [(lhs, rhs)])


def _check_unit(s):
    if (m := _missing(s, "eta")):
        return _skip(*m)
    left = compose(s.mu, tensor(s.eta, _id(s)))
    right = compose(s.mu, tensor(_id(s), s.eta))
    return _verdict(s, [(left, _id(s)), (right, _id(s))])


def _check_counit(s):
    if (m := _missing(s, "eps")):
        return _skip(*m)
    left = compose(tensor(s.eps, _id(s)), s.delta)
    right = compose(tensor(_id(s), s.eps), s.delta)
    return _verdict(s, [(left, _id(s)), (right, _id(s))])


def _check_vn_core(s):
    if (m := _missing(s, "S")):
        return _skip(*m)
    lhs = chain(mu3(s), tensor(_id(s), tensor(s.S, _id(s))), delta3(s))
    return _verdict(s, [(lhs, _id(s))])


def _check_unital_core(s):
    if (m := _missing(s, "S", "eta")):
        return _skip(*m)
    lhs = tensor(_id(s), s.eta)
    rhs = chain(tensor(_id(s), s.mu),
                tensor(_id(s), tensor(s.S, _id(s))),
                delta3(s))
    return _verdict(s, [(lhs, rhs)])


def _check_vwh_left(s):
    if (m := _missing(s, "S", "eta", "eps")):
        return _skip(*m)
    lhs = chain(s.mu, tensor(s.S, _id(s)), s.delta)
    return _verdict(s, [(lhs, compute_t(s))])


def _check_vwh_right(s):
    if (m := _missing(s, "S", "eta", "eps")):
        return _skip(*m)
    lhs = chain(s.mu, tensor(_id(s), s.S), s.delta)
    return _verdict(s, [(lhs, compute_r(s))])


def _check_vwh_s(s):
    if (m := _missing(s, "S")):
        return _skip(*m)
    lhs = chain(mu3(s), tensor(s.S, tensor(_id(s), s.S)), delta3(s))
    return _verdict(s, [(lhs, s.S)])


def _check_antipode(s):
    if (m := _missing(s, "S", "eta", "eps")):
        return _skip(*m)
    eta_eps = compose(s.eta, s.eps)
    left = chain(s.mu, tensor(s.S, _id(s)), s.delta)
    right = chain(s.mu, tensor(_id(s), s.S), s.delta)
    return _verdict(s, [(left, eta_eps), (right, eta_eps)])


def _check_antihom(s):
    if (m := _missing(s, "S")):
        return _skip(*m)
    lhs = compose(s.S, s.mu)
    rhs = chain(s.mu, _c(s), tensor(s.S, s.S))
    pairs = [(lhs, rhs)]
    if s.eta is not None:
        pairs.append((compose(s.S, s.eta), s.eta))
    return _verdict(s, pairs)


def _check_drinfeld_alpha(s):
    if (m := _missing(s, "S", "alpha", "eps")):
        return _skip(*m)
    lhs = chain(mu3(s), tensor(s.S, tensor(s.alpha, _id(s))), s.delta)
    rhs = compose(s.alpha, s.eps)
    return _verdict(s, [(lhs, rhs)])


def _check_drinfeld_beta(s):
    if (m := _missing(s, "S", "beta", "eps")):
        return _skip(*m)
    lhs = chain(mu3(s), tensor(_id(s), tensor(s.beta, s.S)), s.delta)
    rhs = compose(s.beta, s.eps)
    return _verdict(s, [(lhs, rhs)])


def _check_quasi_left(s):
    if (m := _missing(s, "S")):
        return _skip(*m)
    lhs = chain(mu3(s), tensor(_id(s), tensor(s.S, _id(s))),
                tensor(s.delta, _id(s)), s.delta)
    return _verdict(s, [(lhs, _id(s))])


def _check_quasi_right(s):
    if (m := _missing(s, "S")):
        return _skip(*m)
    lhs = chain(mu3(s), tensor(_id(s), tensor(s.S, _id(s))),
                tensor(_id(s), s.delta), s.delta)
    return _verdict(s, [(lhs, _id(s))])


def _check_s_squared(s):
    if (m := _missing(s, "S")):
        return _skip(*m)
    return _verdict(s, [(compose(s.S, s.S), _id(s))])


def _check_element_invertible(s, key):
    elt = getattr(s, key)
    if elt is None or s.eta is None:
        return _skip(*_missing(s, key, "eta"))
    a = elt.column(0)
    unit = s.eta.column(0)
    n, f = s.n, s.field
    # left/right multiplication by the element, stacked into one system
    lrows = [[sum((s.mu.entry(k, i * n + j) * a[i] for i in range(n)),
                  start=f.zero) for j in range(n)] for k in range(n)]
    rrows = [[sum((s.mu.entry(k, i * n + j) * a[j] for j in range(n)),
                  start=f.zero) for i in range(n)] for k in range(n)]
    v = solve(f, lrows + rrows, unit + unit)
    if v is None:
        w = Witness(input_label=f"{key}: no v with {key}*v = v*{key} = unit",
                    input_index=None, lhs=tuple(a), rhs=tuple(unit))
        return CheckResult("FAIL", witness=w)
    return PASS


_CHECKS = {
    "assoc": _check_assoc,
    "coassoc": _check_coassoc,
    "compat": _check_compat,
    "unit": _check_unit,
    "counit": _check_counit,
    "vn_core": _check_vn_core,
    "unital_core": _check_unital_core,
    "vwh_left": _check_vwh_left,
    "vwh_right": _check_vwh_right,
    "vwh_s": _check_vwh_s,
    "antipode": _check_antipode,
    "antihom": _check_antihom,
    "drinfeld_alpha": _check_drinfeld_alpha,
    "drinfeld_beta": _check_drinfeld_beta,
    "quasi_left": _check_quasi_left,
    "quasi_right": _check_quasi_right,
    "s_squared": _check_s_squared,
    "alpha_invertible": lambda s: _check_element_invertible(s, "alpha"),
    "beta_invertible": lambda s: _check_element_invertible(s, "beta"),
}


def check_axiom(s, axiom):
    if axiom not in _CHECKS:
        raise KeyError(f"unknown axiom id {axiom!r}")
    return _CHECKS[axiom](s)


def derive_labels(checks):
    ok = lambda a: checks[a].verdict == "PASS"
    labels = []
    semibi = ok("assoc") and ok("coassoc") and ok("compat")
    if semibi:
        labels.append("semibialgebra")
    core = semibi and ok("vn_core")
    if core:
        labels.append("vn_core")
    if core and ok("unit") and ok("unital_core"):
        labels.append("unital_vn_core")
    vwb = semibi and ok("unit") and ok("counit")
    if vwb:
        labels.append("very_weak_bialgebra")
    if vwb and ok("vwh_left") and ok("vwh_right") and ok("vwh_s"):
        labels.append("very_weak_hopf")
    if vwb and ok("antipode"):
        labels.append("hopf")
    if (ok("assoc") and ok("unit") and ok("counit") and ok("drinfeld_alpha")
            and ok("drinfeld_beta") and ok("quasi_left") and ok("quasi_right")):
        labels.append("quasi_vn_core")
    return labels


@dataclass
class AxiomReport:
    structure: str
    checks: dict = dc_field(default_factory=dict)
    labels: list = dc_field(default_factory=list)


def classify(s):
    """Run every axiom check and derive the classification labels."""
    checks = {a: check_axiom(s, a) for a in AXIOM_IDS}
    return AxiomReport(structure=s.name or "(unnamed)", checks=checks,
                       labels=derive_labels(checks))
