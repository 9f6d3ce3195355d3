"""Linear maps between tensor powers of a base space A.

A map A^{x p} -> A^{x q} over base dimension n is an n^q x n^p matrix.
Rank 0 is the ground field (dimension 1).  The basis of A^{x p} is ordered
lexicographically in the factor indices with the leftmost factor most
significant: (i_1, ..., i_p) sits at position sum i_k * n^(p-k).

Internally a matrix is a flat list of integer numerators over one common
positive denominator (always 1 over F_p), so the hot products run through
the integer kernels.  Entries surface as `Fraction`s over Q and residue
ints over F_p.
"""

from fractions import Fraction
from math import gcd, lcm

from . import kernels
from .errors import BadLegs, DimMismatch, RankMismatch, ShapeError
from .field import PrimeField, check_same_field


class LinMap:

    __slots__ = ("field", "n", "src_rank", "tgt_rank", "nums", "den")

    def __init__(self, field, n, src_rank, tgt_rank, nums, den=1):
        if n < 1 or src_rank < 0 or tgt_rank < 0:
            raise ShapeError(f"bad shape n={n} ranks {src_rank}->{tgt_rank}")
        rows, cols = n ** tgt_rank, n ** src_rank
        if len(nums) != rows * cols:
            raise ShapeError(
                f"matrix has {len(nums)} entries, expected {rows}x{cols}")
        self.field = field
        self.n = n
        self.src_rank = src_rank
        self.tgt_rank = tgt_rank
        self.nums, self.den = _reduce(field, nums, den)

    @property
    def rows(self):
        return self.n ** self.tgt_rank

    @property
    def cols(self):
        return self.n ** self.src_rank

    @classmethod
    def from_entries(cls, field, n, src_rank, tgt_rank, entries):
        """Build from a flat row-major list of field scalars."""
        vals = [field.coerce(e) for e in entries]
        if isinstance(field, PrimeField):
            return cls(field, n, src_rank, tgt_rank, vals, 1)
        den = lcm(*[v.denominator for v in vals]) if vals else 1
        nums = [v.numerator * (den // v.denominator) for v in vals]
        return cls(field, n, src_rank, tgt_rank, nums, den)

    @classmethod
    def zero(cls, field, n, src_rank, tgt_rank):
        size = n ** tgt_rank * n ** src_rank
        return cls(field, n, src_rank, tgt_rank, [0] * size, 1)

    def entry(self, i, j):
        num = self.nums[i * self.cols + j]
        if isinstance(self.field, PrimeField):
            return num
        return Fraction(num, self.den)

    def entries(self):
        if isinstance(self.field, PrimeField):
            return list(self.nums)
        d = self.den
        return [Fraction(v, d) for v in self.nums]

    def column(self, j):
        return [self.entry(i, j) for i in range(self.rows)]

    def is_zero(self):
        return not any(self.nums)

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.field == other.field and self.n == other.n
                and self.src_rank == other.src_rank
                and self.tgt_rank == other.tgt_rank
                and self.den == other.den and self.nums == other.nums)

    def __hash__(self):
        return hash((self.n, self.src_rank, self.tgt_rank, self.den,
                     tuple(self.nums)))

    def __add__(self, other):
        _check_compat(self, other)
        if (self.src_rank, self.tgt_rank) != (other.src_rank, other.tgt_rank):
            raise RankMismatch("addition needs equal ranks")
        if isinstance(self.field, PrimeField):
            nums = [a + b for a, b in zip(self.nums, other.nums)]
            return LinMap(self.field, self.n, self.src_rank, self.tgt_rank,
                          nums, 1)
        da, db = self.den, other.den
        nums = [a * db + b * da for a, b in zip(self.nums, other.nums)]
        return LinMap(self.field, self.n, self.src_rank, self.tgt_rank,
                      nums, da * db)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        c = self.field.coerce(c)
        if isinstance(self.field, PrimeField):
            nums = [c * v for v in self.nums]
            return LinMap(self.field, self.n, self.src_rank, self.tgt_rank,
                          nums, 1)
        nums = [c.numerator * v for v in self.nums]
        return LinMap(self.field, self.n, self.src_rank, self.tgt_rank,
                      nums, self.den * c.denominator)

    def __repr__(self):
        return (f"LinMap(n={self.n}, {self.src_rank}->{self.tgt_rank}, "
                f"{self.rows}x{self.cols} over {self.field!r})")


def _reduce(field, nums, den):
    if isinstance(field, PrimeField):
        p = field.p
        inv = pow(den % p, -1, p) if den != 1 else 1
        return [v * inv % p for v in nums], 1
    if den < 0:
        nums, den = [-v for v in nums], -den
    g = den
    for v in nums:
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        nums = [v // g for v in nums]
        den //= g
    if not any(nums):
        den = 1
    return nums, den


def _check_compat(a, b):
    check_same_field(a.field, b.field)
    if a.n != b.n:
        raise DimMismatch(f"base dims differ: {a.n} vs {b.n}")


def compose(g, f):
    """g after f (right-to-left, as in ordinary composition)."""
    _check_compat(g, f)
    if f.tgt_rank != g.src_rank:
        raise RankMismatch(
            f"cannot compose: inner ranks {f.tgt_rank} vs {g.src_rank}")
    nums = kernels.matmul(g.nums, f.nums, g.rows, g.cols, f.cols)
    return LinMap(g.field, g.n, f.src_rank, g.tgt_rank, nums, g.den * f.den)


def chain(*maps):
    """Compose a sequence right-to-left: chain(h, g, f) = h o g o f."""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = compose(m, out)
    return out


def tensor(f, g):
    """Monoidal product f (x) g; ranks add, f is the leftmost factor."""
    _check_compat(f, g)
    nums = kernels.kron(f.nums, g.nums, f.rows, f.cols, g.rows, g.cols)
    return LinMap(f.field, f.n, f.src_rank + g.src_rank,
                  f.tgt_rank + g.tgt_rank, nums, f.den * g.den)


def tensor_all(*maps):
    out = maps[0]
    for m in maps[1:]:
        out = tensor(out, m)
    return out


def identity(field, n, p):
    """Identity on A^{x p} (p = 0 gives the 1x1 identity on the ground field)."""
    size = n ** p
    nums = [0] * (size * size)
    for i in range(size):
        nums[i * size + i] = 1
    return LinMap(field, n, p, p, nums, 1)


def swap(field, n):
    """The symmetry c on A (x) A: e_i (x) e_j -> e_j (x) e_i."""
    size = n * n
    nums = [0] * (size * size)
    for i in range(n):
        for j in range(n):
            nums[(j * n + i) * size + (i * n + j)] = 1
    return LinMap(field, n, 2, 2, nums, 1)


def place_on_legs(f, legs, p):
    """Let a 2->2 map act on factors (i, j) of A^{x p}, identity elsewhere.

    Realized as P^-1 o (f (x) 1^{x(p-2)}) o P where P is a composite of
    adjacent swaps bringing legs i and j to positions 1 and 2.
    """
    i, j = legs
    if f.src_rank != 2 or f.tgt_rank != 2:
        raise RankMismatch("place_on_legs needs a 2->2 map")
    if not (1 <= i < j <= p):
        raise BadLegs(f"bad legs ({i}, {j}) for rank {p}")
    field, n = f.field, f.n
    order = list(range(1, p + 1))
    transpositions = []  # positions k meaning swap factors k, k+1
    # bubble leg i to the front, then leg j to second place
    pos = order.index(i)
    while pos > 0:
        transpositions.append(pos)
        order[pos - 1], order[pos] = order[pos], order[pos - 1]
        pos -= 1
    pos = order.index(j)
    while pos > 1:
        transpositions.append(pos)
        order[pos - 1], order[pos] = order[pos], order[pos - 1]
        pos -= 1

    c = swap(field, n)
    perm = identity(field, n, p)
    for k in transpositions:
        step = c
        if k - 1 > 0:
            step = tensor(identity(field, n, k - 1), step)
        if p - k - 1 > 0:
            step = tensor(step, identity(field, n, p - k - 1))
        perm = compose(step, perm)

    body = f
    if p > 2:
        body = tensor(f, identity(field, n, p - 2))
    # adjacent swaps are involutions, so the inverse is the reverse composite
    perm_inv = identity(field, n, p)
    for k in reversed(transpositions):
        step = c
        if k - 1 > 0:
            step = tensor(identity(field, n, k - 1), step)
        if p - k - 1 > 0:
            step = tensor(step, identity(field, n, p - k - 1))
        perm_inv = compose(step, perm_inv)
    return chain(perm_inv, body, perm)


def solve(field, rows, rhs):
    """Solve the linear system rows * v = rhs exactly; None if inconsistent.

    `rows` is a list of equations (lists of scalars), possibly more
    equations than unknowns.  Returns one solution (free variables set to
    zero).
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    a = [[field.coerce(x) for x in r] for r in rows]
    b = [field.coerce(x) for x in rhs]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, m) if not field.eq(a[i][c], field.zero)),
                  None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        b[r], b[pr] = b[pr], b[r]
        inv = field.inv(a[r][c])
        a[r] = [field.mul(x, inv) for x in a[r]]
        b[r] = field.mul(b[r], inv)
        for i in range(m):
            if i != r and not field.eq(a[i][c], field.zero):
                factor = a[i][c]
                a[i] = [field.sub(x, field.mul(factor, y))
                        for x, y in zip(a[i], a[r])]
                b[i] = field.sub(b[i], field.mul(factor, b[r]))
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if not field.eq(b[i], field.zero):
            return None
    v = [field.zero] * ncols
    for i, c in enumerate(pivots):
        v[c] = b[i]
    return v
