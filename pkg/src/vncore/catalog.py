"""Constructors for the concrete structures the checks run on: semigroup
cores, group algebras, Sweedler's 4-dimensional algebra, discrete groupoid
algebras, the unit completion A (+) k, and comultiplication twists.
"""

import itertools
import random
from dataclasses import dataclass, replace

from .errors import (BadTwist, MissingMap, NotAGroup, NotHopf, NotVNRegular)
from .field import QQ
from .linmap import LinMap, chain, compose, identity, solve, swap, tensor
from .structures import (CheckResult, PASS, Witness, build_structure,
                         check_axiom, classify)

CATALOG_NAMES = ("trivial", "z2", "z3", "s3", "klein4", "sweedler",
                 "leftzero2", "rectband22", "groupoid2", "z3_bad_s")

# frozen seed for the klein4 twist search (see find_twist_data)
TWIST_SEED = 7041


@dataclass(frozen=True)
class SemigroupTable:
    size: int
    table: tuple      # m x m Cayley table, entries in [0, m)
    s_table: tuple    # pseudo-inverse map [0, m) -> [0, m)

    def __post_init__(self):
        m = self.size
        for row in self.table:
            for v in row:
                if not 0 <= v < m:
                    raise ValueError(f"table entry {v} out of range")
        for v in self.s_table:
            if not 0 <= v < m:
                raise ValueError(f"s_table entry {v} out of range")


def check_vn_regular(t):
    """PASS iff the table is associative and a * S(a) * a = a for all a."""
    m, tab = t.size, t.table
    for a in range(m):
        for b in range(m):
            for c in range(m):
                if tab[tab[a][b]][c] != tab[a][tab[b][c]]:
                    w = Witness(input_label=f"(({a}*{b})*{c}, {a}*({b}*{c}))",
                                input_index=None,
                                lhs=(tab[tab[a][b]][c],),
                                rhs=(tab[a][tab[b][c]],))
                    return CheckResult("FAIL", witness=w)
    for a in range(m):
        got = tab[tab[a][t.s_table[a]]][a]
        if got != a:
            w = Witness(input_label=f"a={a}", input_index=a,
                        lhs=(got,), rhs=(a,))
            return CheckResult("FAIL", witness=w)
    return PASS


def _identity_element(t):
    for e in range(t.size):
        if all(t.table[e][x] == x and t.table[x][e] == x
               for x in range(t.size)):
            return e
    return None


def semigroup_core(t, field=QQ, name="", basis=None):
    """Linearize a VN-regular semigroup: diagonal delta, eps = 1 on basis."""
    res = check_vn_regular(t)
    if res.verdict != "PASS":
        raise NotVNRegular(f"not a VN-regular semigroup: {res.witness}")
    n = t.size
    mu = [0] * (n * n * n)
    for i in range(n):
        for j in range(n):
            mu[t.table[i][j] * n * n + i * n + j] = 1
    delta = [0] * (n * n * n)
    for k in range(n):
        delta[(k * n + k) * n + k] = 1
    smat = [0] * (n * n)
    for i in range(n):
        smat[t.s_table[i] * n + i] = 1
    eta = None
    e = _identity_element(t)
    if e is not None:
        eta = LinMap.from_entries(field, n, 0, 1,
                                  [1 if i == e else 0 for i in range(n)])
    return build_structure(
        field, n,
        mu=LinMap.from_entries(field, n, 2, 1, mu),
        delta=LinMap.from_entries(field, n, 1, 2, delta),
        eta=eta,
        eps=LinMap.from_entries(field, n, 1, 0, [1] * n),
        S=LinMap.from_entries(field, n, 1, 1, smat),
        name=name, basis=basis)


def _group_inverses(table):
    m = len(table)
    e = None
    for cand in range(m):
        if all(table[cand][x] == x and table[x][cand] == x for x in range(m)):
            e = cand
            break
    if e is None:
        raise NotAGroup("no identity element")
    inv = []
    for a in range(m):
        ia = next((b for b in range(m)
                   if table[a][b] == e and table[b][a] == e), None)
        if ia is None:
            raise NotAGroup(f"element {a} has no inverse")
        inv.append(ia)
    return e, tuple(inv)


def group_algebra(table, field=QQ, name="", basis=None):
    """Group algebra with grouplike delta, S = linearized inversion."""
    m = len(table)
    for a in range(m):
        for b in range(m):
            for c in range(m):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise NotAGroup("table is not associative")
    _, inv = _group_inverses(table)
    t = SemigroupTable(m, tuple(tuple(r) for r in table), inv)
    return semigroup_core(t, field=field, name=name, basis=basis)


def cyclic_table(m):
    return tuple(tuple((i + j) % m for j in range(m)) for i in range(m))


def klein4_table():
    # (Z/2)^2 with index 2a + b
    def mul(i, j):
        return ((i >> 1) ^ (j >> 1)) << 1 | ((i & 1) ^ (j & 1))
    return tuple(tuple(mul(i, j) for j in range(4)) for i in range(4))


def s3_table():
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    def mul(p, q):
        return tuple(p[q[x]] for x in range(3))
    return tuple(tuple(index[mul(p, q)] for q in perms) for p in perms)


def leftzero2_table():
    return SemigroupTable(2, ((0, 0), (1, 1)), (0, 1))


def rectband22_table():
    # pairs (a, b) with (a,b)(c,d) = (a,d); index 2a + b
    tab = tuple(tuple(2 * (i // 2) + (j % 2) for j in range(4))
                for i in range(4))
    return SemigroupTable(4, tab, tuple(range(4)))


def sweedler(field=QQ):
    """The 4-dimensional algebra on {1, g, x, gx} with g^2 = 1, x^2 = 0,
    xg = -gx, grouplike g, skew-primitive x, S(x) = -gx."""
    n = 4
    one = [(0, 1)]
    prod = {
        (0, 0): one, (0, 1): [(1, 1)], (0, 2): [(2, 1)], (0, 3): [(3, 1)],
        (1, 0): [(1, 1)], (1, 1): one, (1, 2): [(3, 1)], (1, 3): [(2, 1)],
        (2, 0): [(2, 1)], (2, 1): [(3, -1)], (2, 2): [], (2, 3): [],
        (3, 0): [(3, 1)], (3, 1): [(2, -1)], (3, 2): [], (3, 3): [],
    }
    mu = [0] * (n * n * n)
    for (i, j), terms in prod.items():
        for k, c in terms:
            mu[k * n * n + i * n + j] = c
    cop = {
        0: [(0, 0, 1)],
        1: [(1, 1, 1)],
        2: [(2, 0, 1), (1, 2, 1)],
        3: [(3, 1, 1), (0, 3, 1)],
    }
    delta = [0] * (n * n * n)
    for k, terms in cop.items():
        for i1, i2, c in terms:
            delta[(i1 * n + i2) * n + k] = c
    smat = [0] * (n * n)
    for i, (j, c) in enumerate([(0, 1), (1, 1), (3, -1), (2, 1)]):
        smat[j * n + i] = c
    return build_structure(
        field, n,
        mu=LinMap.from_entries(field, n, 2, 1, mu),
        delta=LinMap.from_entries(field, n, 1, 2, delta),
        eta=LinMap.from_entries(field, n, 0, 1, [1, 0, 0, 0]),
        eps=LinMap.from_entries(field, n, 1, 0, [1, 1, 0, 0]),
        S=LinMap.from_entries(field, n, 1, 1, smat),
        name="sweedler", basis=("1", "g", "x", "gx"))


def groupoid_algebra(num_objects, field=QQ, name=None):
    """Discrete groupoid: mu(e_i (x) e_j) = [i = j] e_i, eta = sum e_i."""
    n = num_objects
    mu = [0] * (n * n * n)
    delta = [0] * (n * n * n)
    for i in range(n):
        mu[i * n * n + i * n + i] = 1
        delta[(i * n + i) * n + i] = 1
    return build_structure(
        field, n,
        mu=LinMap.from_entries(field, n, 2, 1, mu),
        delta=LinMap.from_entries(field, n, 1, 2, delta),
        eta=LinMap.from_entries(field, n, 0, 1, [1] * n),
        eps=LinMap.from_entries(field, n, 1, 0, [1] * n),
        S=identity(field, n, 1),
        name=name or f"groupoid{n}")


def unitalize(s):
    """Adjoin a fresh two-sided unit u with delta(u) = u (x) u, S(u) = u.

    Always adjoins, even if s already has a unit.  The counit extends by
    eps(u) = 1 when present, else stays absent.
    """
    if s.S is None:
        raise MissingMap("unitalize needs S")
    n, N, f = s.n, s.n + 1, s.field
    mu = [f.zero] * (N * N * N)
    for k in range(n):
        for i in range(n):
            for j in range(n):
                mu[k * N * N + i * N + j] = s.mu.entry(k, i * n + j)
    for x in range(N):
        mu[x * N * N + n * N + x] = f.one  # u * x = x
        if x < n:
            mu[x * N * N + x * N + n] = f.one  # x * u = x
    delta = [f.zero] * (N * N * N)
    for j in range(n):
        for i1 in range(n):
            for i2 in range(n):
                delta[(i1 * N + i2) * N + j] = s.delta.entry(i1 * n + i2, j)
    delta[(n * N + n) * N + n] = f.one
    smat = [f.zero] * (N * N)
    for i in range(n):
        for j in range(n):
            smat[j * N + i] = s.S.entry(j, i)
    smat[n * N + n] = f.one
    eps = None
    if s.eps is not None:
        eps = LinMap.from_entries(f, N, 1, 0,
                                  [s.eps.entry(0, i) for i in range(n)]
                                  + [f.one])
    basis = None
    if s.basis is not None:
        basis = tuple(s.basis) + ("u",)
    return build_structure(
        f, N,
        mu=LinMap.from_entries(f, N, 2, 1, mu),
        delta=LinMap.from_entries(f, N, 1, 2, delta),
        eta=LinMap.from_entries(f, N, 0, 1, [f.zero] * n + [f.one]),
        eps=eps,
        S=LinMap.from_entries(f, N, 1, 1, smat),
        name=f"{s.name}+k", basis=basis)


@dataclass(frozen=True)
class TwistData:
    F: LinMap       # invertible element of A (x) A, rank 0 -> 2
    F_inv: LinMap   # its inverse, rank 0 -> 2


def _mu2(s):
    """The algebra product on A (x) A: (mu (x) mu)(1 (x) c (x) 1)."""
    i1 = identity(s.field, s.n, 1)
    return compose(tensor(s.mu, s.mu),
                   tensor(i1, tensor(swap(s.field, s.n), i1)))


def _prod2(m2, u, w):
    return compose(m2, tensor(u, w))


def invert_in_tensor_square(s, F):
    """Two-sided inverse of F in the algebra A (x) A, or None."""
    m2 = _mu2(s)
    id2 = identity(s.field, s.n, 2)
    left = compose(m2, tensor(F, id2))
    right = compose(m2, tensor(id2, F))
    uu = tensor(s.eta, s.eta)
    rows = [[left.entry(i, j) for j in range(left.cols)]
            for i in range(left.rows)]
    rows += [[right.entry(i, j) for j in range(right.cols)]
             for i in range(right.rows)]
    rhs = uu.column(0) + uu.column(0)
    v = solve(s.field, rows, rhs)
    if v is None:
        return None
    return LinMap.from_entries(s.field, s.n, 0, 2, v)


def twist(s, td):
    """Conjugate delta by F, yielding delta_F(x) = F delta(x) F^-1 together
    with the companion elements alpha = mu(S (x) 1)F^-1, beta = mu(1 (x) S)F.

    The result's associativity, unit, counit and both Drinfel'd axioms are
    re-verified, never assumed.
    """
    report = classify(s)
    if "hopf" not in report.labels:
        raise NotHopf(f"{s.name or 'structure'} is not a Hopf algebra")
    F, F_inv = td.F, td.F_inv
    m2 = _mu2(s)
    uu = tensor(s.eta, s.eta)
    if _prod2(m2, F, F_inv) != uu or _prod2(m2, F_inv, F) != uu:
        raise BadTwist("F_inv is not a two-sided inverse of F")
    i1 = identity(s.field, s.n, 1)
    if compose(tensor(s.eps, i1), F) != s.eta or \
            compose(tensor(i1, s.eps), F) != s.eta:
        raise BadTwist("F is not counit-normalized")
    n, f = s.n, s.field
    cols = []
    for j in range(n):
        dcol = LinMap.from_entries(f, n, 0, 2, s.delta.column(j))
        cols.append(_prod2(m2, F, _prod2(m2, dcol, F_inv)).column(0))
    delta_f = LinMap.from_entries(
        f, n, 1, 2,
        [cols[j][i] for i in range(n * n) for j in range(n)])
    alpha = chain(s.mu, tensor(s.S, i1), F_inv)
    beta = chain(s.mu, tensor(i1, s.S), F)
    out = replace(s, delta=delta_f, alpha=alpha, beta=beta,
                  name=f"{s.name}_twist")
    bad = [a for a in ("assoc", "unit", "counit",
                       "drinfeld_alpha", "drinfeld_beta")
           if check_axiom(out, a).verdict != "PASS"]
    if bad:
        raise BadTwist(f"twist result fails re-verification: {bad}")
    return out


def find_twist_data(s, seed=TWIST_SEED, max_tries=64, lo=-2, hi=2):
    """Seeded search for a counit-normalized invertible F on a group algebra.

    Entries are drawn from [lo, hi]; the normalization rows/columns are
    fixed up constructively, then invertibility of F and of the companion
    elements alpha, beta is checked exactly.  Deterministic for a given seed.
    """
    rng = random.Random(seed)
    n, f = s.n, s.field
    for _ in range(max_tries):
        b = [[rng.randint(lo, hi) for _ in range(n - 1)] for _ in range(n - 1)]
        c = [[0] * n for _ in range(n)]
        total = 0
        for i in range(1, n):
            for j in range(1, n):
                c[i][j] = b[i - 1][j - 1]
                total += b[i - 1][j - 1]
            c[i][0] = -sum(c[i][1:])
        for j in range(1, n):
            c[0][j] = -sum(c[i][j] for i in range(1, n))
        c[0][0] = 1 + total
        F = LinMap.from_entries(f, n, 0, 2,
                                [c[i][j] for i in range(n) for j in range(n)])
        F_inv = invert_in_tensor_square(s, F)
        if F_inv is None:
            continue
        td = TwistData(F=F, F_inv=F_inv)
        try:
            out = twist(s, td)
        except BadTwist:
            continue
        if check_axiom(out, "alpha_invertible").verdict != "PASS":
            continue
        if check_axiom(out, "beta_invertible").verdict != "PASS":
            continue
        return td
    raise BadTwist(f"no usable twist found in {max_tries} seeded tries")


def trivial_twist_data(s):
    uu = tensor(s.eta, s.eta)
    return TwistData(F=uu, F_inv=uu)


def _make_z3_bad_s():
    s = group_algebra(cyclic_table(3), name="z3_bad_s")
    return replace(s, S=identity(s.field, 3, 1))


_CONSTRUCTORS = {
    "trivial": lambda: group_algebra(((0,),), name="trivial"),
    "z2": lambda: group_algebra(cyclic_table(2), name="z2",
                                basis=("e", "g")),
    "z3": lambda: group_algebra(cyclic_table(3), name="z3"),
    "s3": lambda: group_algebra(s3_table(), name="s3"),
    "klein4": lambda: group_algebra(klein4_table(), name="klein4"),
    "sweedler": sweedler,
    "leftzero2": lambda: semigroup_core(leftzero2_table(), name="leftzero2"),
    "rectband22": lambda: semigroup_core(rectband22_table(),
                                         name="rectband22"),
    "groupoid2": lambda: groupoid_algebra(2),
    "z3_bad_s": _make_z3_bad_s,
}


def make(name):
    try:
        return _CONSTRUCTORS[name]()
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}") from None
