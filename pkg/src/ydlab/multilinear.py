"""Dense exact tensors, sparse linear maps and fraction-free linear solving.

Conventions used everywhere in the package:

* a tensor of shape (d1, ..., dn) is stored row-major; the flat index of
  (i1, ..., in) is ((i1*d2 + i2)*d3 + ...)*dn + in.
* working vectors are sparse dicts {flat index: Scalar} holding only nonzero
  entries; Tensor is the dense, hashable, serializable form.
* legs are numbered from 0 in code.  The leg embedding E_12, E_13, E_23 of
  the usual notation is leg_embed(E, (0, 1)), (0, 2), (1, 2).
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from ydlab.scalar import ONE, ZERO, Scalar, coerce


def size_of(shape):
    n = 1
    for d in shape:
        n *= d
    return n


def ravel(index, shape):
    k = 0
    for i, d in zip(index, shape):
        k = k * d + i
    return k


def unravel(k, shape):
    out = []
    for d in reversed(shape):
        k, r = divmod(k, d)
        out.append(r)
    return tuple(reversed(out))


# sparse vectors ------------------------------------------------------------

def vec(pairs):
    """Sparse vector from (index, coefficient) pairs, summing repeats."""
    out = {}
    for k, c in pairs:
        c = out.get(k, ZERO) + c
        if c:
            out[k] = c
        else:
            out.pop(k, None)
    return out


def basis_vec(k):
    return {k: ONE}


def add_into(out, x, c=ONE):
    """out += c*x in place."""
    one = c == ONE
    for k, v in x.items():
        w = out.get(k)
        v = v if one else c * v
        w = v if w is None else w + v
        if w:
            out[k] = w
        else:
            del out[k]
    return out


def vadd(x, y):
    return add_into(dict(x), y)


def vsub(x, y):
    return add_into(dict(x), y, -ONE)


def vscale(c, x):
    c = coerce(c)
    if not c:
        return {}
    return {k: c * v for k, v in x.items()}


def vkron(x, y, dim_y):
    """x (x) y for sparse vectors, y living in a space of dimension dim_y."""
    out = {}
    for i, a in x.items():
        base = i * dim_y
        for j, b in y.items():
            out[base + j] = a * b
    return out


def vconj(x):
    return {k: v.conjugate() for k, v in x.items()}


# tensors -------------------------------------------------------------------

class Tensor:
    """Dense exact tensor: a shape and a row-major tuple of Scalars."""

    __slots__ = ("shape", "entries", "_sparse")

    def __init__(self, shape, entries):
        shape = tuple(int(d) for d in shape)
        entries = tuple(coerce(e) if not isinstance(e, Scalar) else e for e in entries)
        if any(d < 1 for d in shape):
            raise ValueError("extents must be positive: %r" % (shape,))
        if len(entries) != size_of(shape):
            raise ValueError("entry count %d does not match shape %r" % (len(entries), shape))
        self.shape = shape
        self.entries = entries
        self._sparse = None

    @classmethod
    def from_sparse(cls, shape, x):
        entries = [ZERO] * size_of(shape)
        for k, v in x.items():
            entries[k] = v
        return cls(shape, entries)

    @classmethod
    def zeros(cls, shape):
        return cls(shape, [ZERO] * size_of(shape))

    @classmethod
    def basis(cls, shape, index):
        return cls.from_sparse(shape, {ravel(index, shape): ONE})

    def sparse(self):
        if self._sparse is None:
            self._sparse = {k: v for k, v in enumerate(self.entries) if v}
        return dict(self._sparse)

    @property
    def size(self):
        return len(self.entries)

    def __getitem__(self, index):
        if isinstance(index, int):
            index = (index,)
        return self.entries[ravel(index, self.shape)]

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Tensor(self.shape, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Tensor(self.shape, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Tensor(self.shape, [-a for a in self.entries])

    def scale(self, c):
        c = coerce(c)
        return Tensor(self.shape, [c * a for a in self.entries])

    def reshape(self, shape):
        return Tensor(shape, self.entries)

    def serialize(self):
        head = "shape " + " ".join(str(d) for d in self.shape)
        return head + "\n" + " ".join(str(e) for e in self.entries)

    @classmethod
    def deserialize(cls, text):
        head, _, body = text.strip().partition("\n")
        shape = [int(t) for t in head.split()[1:]]
        return cls(shape, [Scalar.parse(t) for t in body.split()])

    def __repr__(self):
        nz = ", ".join("%s: %s" % (unravel(k, self.shape), v) for k, v in sorted(self.sparse().items()))
        return "Tensor(%r, {%s})" % (self.shape, nz)


def tensor_product(a, b):
    """a (x) b: shapes concatenate, entries multiply."""
    x = vkron(a.sparse(), b.sparse(), b.size)
    return Tensor.from_sparse(a.shape + b.shape, x)


def permute_legs(t, perm):
    """New tensor whose leg i is leg perm[i] of t."""
    perm = tuple(perm)
    if sorted(perm) != list(range(len(t.shape))):
        raise ValueError("not a permutation of the legs: %r" % (perm,))
    shape = tuple(t.shape[p] for p in perm)
    out = {}
    for k, v in t.sparse().items():
        idx = unravel(k, t.shape)
        out[ravel(tuple(idx[p] for p in perm), shape)] = v
    return Tensor.from_sparse(shape, out)


def flip(t, i=0, j=1):
    """Swap legs i and j."""
    n = len(t.shape)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError("leg index out of range")
    perm = list(range(n))
    perm[i], perm[j] = perm[j], perm[i]
    return permute_legs(t, perm)


def leg_embed(t, legs, ambient_shape, fill=()):
    """Place t on the given legs of an ambient tensor space.

    The remaining legs are filled, in increasing order, with the 1-leg
    tensors in `fill` (typically the units of the ambient algebras).
    """
    legs = tuple(legs)
    ambient_shape = tuple(ambient_shape)
    if any(b <= a for a, b in zip(legs, legs[1:])):
        raise ValueError("legs must be strictly increasing")
    if len(legs) != len(t.shape) or any(ambient_shape[l] != d for l, d in zip(legs, t.shape)):
        raise ValueError("shape mismatch between tensor and ambient legs")
    rest = [l for l in range(len(ambient_shape)) if l not in legs]
    fill = list(fill)
    if len(fill) != len(rest):
        raise ValueError("need one fill tensor per remaining leg")
    for l, f in zip(rest, fill):
        if f.shape != (ambient_shape[l],):
            raise ValueError("fill tensor has wrong extent for leg %d" % l)
    full = reduce(tensor_product, fill, t)
    order = list(legs) + rest
    # full has legs in `order`; invert that arrangement
    inverse = [order.index(l) for l in range(len(ambient_shape))]
    return permute_legs(full, inverse)


# linear maps ---------------------------------------------------------------

class LinearMap:
    """A linear map given by the sparse images of the domain basis vectors."""

    __slots__ = ("domain_shape", "codomain_shape", "cols")

    def __init__(self, domain_shape, codomain_shape, cols):
        if isinstance(domain_shape, int):
            domain_shape = (domain_shape,)
        if isinstance(codomain_shape, int):
            codomain_shape = (codomain_shape,)
        self.domain_shape = tuple(domain_shape)
        self.codomain_shape = tuple(codomain_shape)
        cols = [{k: v for k, v in c.items() if v} for c in cols]
        if len(cols) != size_of(self.domain_shape):
            raise ValueError("need one column per domain basis vector")
        self.cols = cols

    @property
    def n_in(self):
        return len(self.cols)

    @property
    def n_out(self):
        return size_of(self.codomain_shape)

    @classmethod
    def from_function(cls, domain_shape, codomain_shape, f):
        n = size_of(domain_shape if not isinstance(domain_shape, int) else (domain_shape,))
        return cls(domain_shape, codomain_shape, [f(i) for i in range(n)])

    @classmethod
    def identity(cls, shape):
        n = size_of(shape if not isinstance(shape, int) else (shape,))
        return cls(shape, shape, [{i: ONE} for i in range(n)])

    @classmethod
    def from_matrix(cls, rows, domain_shape=None, codomain_shape=None):
        """From a nested list, rows indexed by output."""
        n_out = len(rows)
        n_in = len(rows[0]) if rows else 0
        cols = [{} for _ in range(n_in)]
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                v = coerce(v)
                if v:
                    cols[j][i] = v
        return cls(domain_shape or (n_in,), codomain_shape or (n_out,), cols)

    @property
    def matrix(self):
        """Dense matrix as a Tensor of shape (codomain size, domain size)."""
        n_out, n_in = self.n_out, self.n_in
        entries = [ZERO] * (n_out * n_in)
        for j, c in enumerate(self.cols):
            for i, v in c.items():
                entries[i * n_in + j] = v
        return Tensor((n_out, n_in), entries)

    def rows(self):
        rows = [dict() for _ in range(self.n_out)]
        for j, c in enumerate(self.cols):
            for i, v in c.items():
                rows[i][j] = v
        return rows

    def __call__(self, x):
        if isinstance(x, Tensor):
            return Tensor.from_sparse(self.codomain_shape, self(x.sparse()))
        out = {}
        cols = self.cols
        for k, c in x.items():
            add_into(out, cols[k], c)
        return out

    def __matmul__(self, other):
        """Composition self o other."""
        if other.codomain_shape != self.domain_shape and other.n_out != self.n_in:
            raise ValueError("composition shape mismatch")
        return LinearMap(other.domain_shape, self.codomain_shape, [self(c) for c in other.cols])

    def __add__(self, other):
        return LinearMap(self.domain_shape, self.codomain_shape,
                         [vadd(a, b) for a, b in zip(self.cols, other.cols)])

    def __sub__(self, other):
        return LinearMap(self.domain_shape, self.codomain_shape,
                         [vsub(a, b) for a, b in zip(self.cols, other.cols)])

    def __eq__(self, other):
        return (isinstance(other, LinearMap) and self.n_in == other.n_in and self.n_out == other.n_out
                and self.cols == other.cols)

    __hash__ = None

    def transpose(self):
        return LinearMap(self.codomain_shape, self.domain_shape, self.rows())

    def kron(self, other):
        """self (x) other acting on the concatenated legs."""
        n2 = other.n_out
        cols = [vkron(a, b, n2) for a in self.cols for b in other.cols]
        return LinearMap(self.domain_shape + other.domain_shape,
                         self.codomain_shape + other.codomain_shape, cols)

    def rank(self):
        return len(_echelon(self.rows(), self.n_in)[0])

    def is_bijective(self):
        return self.n_in == self.n_out and self.rank() == self.n_in

    def inverse(self):
        """Exact inverse; raises ValueError when singular."""
        if self.n_in != self.n_out:
            raise ValueError("non-square map has no inverse")
        n = self.n_in
        rows = self.rows()
        for i, r in enumerate(rows):
            r[n + i] = ONE
        piv, _, _ = _echelon(rows, n)
        if len(piv) != n:
            raise ValueError("singular map")
        cols = [dict() for _ in range(n)]
        for col, row in piv:
            p = row[col]
            for k, v in row.items():
                if k >= n:
                    cols[k - n][col] = _to_scalar(_gdiv(v, p))
        return LinearMap(self.codomain_shape, self.domain_shape, cols)

    def kernel(self):
        piv, free, _ = _echelon(self.rows(), self.n_in)
        return _kernel_basis(piv, free, self.n_in)

    def __repr__(self):
        return "LinearMap(%r -> %r)" % (self.domain_shape, self.codomain_shape)


def kron_maps(*maps):
    return reduce(lambda a, b: a.kron(b), maps)


def on_legs(shape, leg_maps):
    """Apply a family of per-leg maps; leg_maps is a dict leg -> LinearMap.

    Legs without a map are left untouched.  Output leg extents come from the
    maps' codomains (a map may send one leg to several legs).
    """
    maps = []
    for l, d in enumerate(shape):
        maps.append(leg_maps.get(l) or LinearMap.identity((d,)))
    return kron_maps(*maps)


# fraction-free elimination ------------------------------------------------
#
# Rows are scaled to Gaussian integers (pairs of ints) and reduced with
# cross-multiplication followed by removal of the integer content, so no
# rational arithmetic happens inside the elimination loop.

def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gdiv(a, b):
    """Exact quotient a / b of Gaussian integers as a Scalar-compatible pair."""
    n = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    return (Fraction(re, n), Fraction(im, n))


def _to_scalar(pair):
    return Scalar._raw(pair[0], pair[1])


def _integral_row(row):
    den = 1
    for v in row.values():
        for part in (v.re, v.im):
            if isinstance(part, Fraction):
                den = lcm(den, part.denominator)
    out = {}
    for k, v in row.items():
        out[k] = (int(v.re * den), int(v.im * den))
    return _primitive(out)


def _primitive(row):
    g = 0
    for a, b in row.values():
        g = gcd(g, a, b)
        if g == 1:
            return row
    if g > 1:
        row = {k: (a // g, b // g) for k, (a, b) in row.items()}
    return row


def _echelon(rows, ncols):
    """Reduced echelon form over Z[i].

    Returns (pivots, free, leftover): pivots is a list of (column, row) with
    each pivot column cleared from every other row, free lists the non-pivot
    columns among the first ncols, leftover holds the remaining nonzero rows.  Columns >= ncols are carried
    along (augmented part) but never pivoted on.
    """
    work = [_integral_row(r) for r in rows if r]
    by_col = {}
    for idx, r in enumerate(work):
        for k in r:
            by_col.setdefault(k, set()).add(idx)
    alive = set(range(len(work)))
    pivots = []
    free = []
    for col in range(ncols):
        cand = [i for i in by_col.get(col, ()) if i in alive]
        if not cand:
            free.append(col)
            continue
        p = min(cand, key=lambda i: (len(work[i]), i))
        alive.discard(p)
        prow = work[p]
        pv = prow[col]
        targets = [i for i in by_col.get(col, ()) if i != p]
        for i in targets:
            row = work[i]
            c = row.get(col)
            if c is None:
                continue
            new = {}
            for k, v in row.items():
                new[k] = _gmul(pv, v)
            for k, v in prow.items():
                t = _gmul(c, v)
                w = new.get(k)
                if w is None:
                    new[k] = (-t[0], -t[1])
                else:
                    w = (w[0] - t[0], w[1] - t[1])
                    if w == (0, 0):
                        del new[k]
                    else:
                        new[k] = w
            new.pop(col, None)
            new = _primitive(new)
            for k in row:
                if k not in new:
                    by_col[k].discard(i)
            for k in new:
                if k not in row:
                    by_col.setdefault(k, set()).add(i)
            work[i] = new
            if not new:
                alive.discard(i)
        pivots.append((col, p))
    # rows that never became pivots only carry augmented columns now
    leftover = [work[i] for i in sorted(alive) if work[i]]
    return [(col, work[p]) for col, p in pivots], free, leftover


def _kernel_basis(piv, free, ncols):
    basis = []
    for f in free:
        x = {f: ONE}
        for col, row in piv:
            v = row.get(f)
            if v is not None:
                q = _gdiv(v, row[col])
                x[col] = -_to_scalar(q)
        basis.append(x)
    return basis


class NoSolution:
    """The system is inconsistent."""

    def __repr__(self):
        return "NoSolution()"

    def __bool__(self):
        return False


class NonUnique:
    """The system is consistent but the map has a kernel."""

    def __init__(self, particular, kernel):
        self.particular = particular
        self.kernel = kernel

    def __repr__(self):
        return "NonUnique(kernel dimension %d)" % len(self.kernel)

    def __bool__(self):
        return False


def solve_exact(A, b):
    """Solve A x = b exactly.

    Returns a Tensor shaped like A's domain, NoSolution, or NonUnique (with a
    particular solution and a kernel basis, both Tensors).
    """
    if isinstance(b, Tensor):
        if b.size != A.n_out:
            raise ValueError("right-hand side has the wrong size")
        b = b.sparse()
    n = A.n_in
    rows = A.rows()
    for i, v in b.items():
        rows[i][n] = v
    piv, free, leftover = _echelon(rows, n)
    for r in leftover:
        if any(k >= n for k in r):
            return NoSolution()
    x = {}
    for col, row in piv:
        v = row.get(n)
        if v is not None:
            x[col] = _to_scalar(_gdiv(v, row[col]))
    sol = Tensor.from_sparse(A.domain_shape, x)
    if free:
        kern = [Tensor.from_sparse(A.domain_shape, k) for k in _kernel_basis(piv, free, n)]
        return NonUnique(sol, kern)
    return sol


# sparse multi-leg helpers ------------------------------------------------------

def map_legs(x, shape, leg_maps):
    """Apply per-leg linear maps to a sparse vector on a multi-leg space.

    leg_maps: {leg: LinearMap}; a map may change the extent of its leg or
    replace it by several legs (its codomain shape).  Returns (vector, shape).
    """
    shape = tuple(shape)
    out_shape = []
    for l, d in enumerate(shape):
        m = leg_maps.get(l)
        out_shape.extend(m.codomain_shape if m is not None else (d,))
    out_shape = tuple(out_shape)
    images = {}
    for l, m in leg_maps.items():
        images[l] = [[(unravel(k, m.codomain_shape), v) for k, v in col.items()] for col in m.cols]
    out = {}
    for k, c in x.items():
        idx = unravel(k, shape)
        terms = [((), c)]
        for l, i in enumerate(idx):
            img = images.get(l)
            if img is None:
                terms = [(t + (i,), v) for t, v in terms]
            else:
                terms = [(t + s, v * w) for t, v in terms for s, w in img[i]]
            if not terms:
                break
        for t, v in terms:
            key = ravel(t, out_shape)
            w = out.get(key)
            w = v if w is None else w + v
            if w:
                out[key] = w
            else:
                del out[key]
    return out, out_shape


def permute_vec(x, shape, perm):
    """Sparse analogue of permute_legs: new leg i is old leg perm[i]."""
    new_shape = tuple(shape[p] for p in perm)
    out = {}
    for k, v in x.items():
        idx = unravel(k, shape)
        out[ravel(tuple(idx[p] for p in perm), new_shape)] = v
    return out, new_shape


def embed_vec(x, sub_shape, legs, ambient_shape, fills):
    """Sparse leg embedding: x sits on `legs`, fills (sparse) on the others."""
    rest = [l for l in range(len(ambient_shape)) if l not in legs]
    fill_terms = [((), ONE)]
    for f in fills:
        fill_terms = [(t + (i,), v * w) for t, v in fill_terms for i, w in f.items()]
    out = {}
    for k, c in x.items():
        sub = unravel(k, sub_shape)
        for t, v in fill_terms:
            full = [0] * len(ambient_shape)
            for l, i in zip(legs, sub):
                full[l] = i
            for l, i in zip(rest, t):
                full[l] = i
            key = ravel(full, ambient_shape)
            w = out.get(key)
            w = c * v if w is None else w + c * v
            if w:
                out[key] = w
            else:
                del out[key]
    return out


def contract_leg(x, shape, leg, functional):
    """Apply a linear functional {index: value} to one leg."""
    new_shape = tuple(d for l, d in enumerate(shape) if l != leg)
    out = {}
    for k, c in x.items():
        idx = unravel(k, shape)
        f = functional.get(idx[leg])
        if f is None:
            continue
        key = ravel(idx[:leg] + idx[leg + 1:], new_shape)
        w = out.get(key)
        w = c * f if w is None else w + c * f
        if w:
            out[key] = w
        else:
            del out[key]
    return out, new_shape


def apply_on_legs(x, shape, legs, lmap):
    """Apply lmap to the legs `legs` (in that order) of a multi-leg vector.

    lmap's domain must be the tuple of those extents.  When the codomain has
    as many legs, output leg i goes back to position legs[i]; otherwise the
    codomain legs are inserted where min(legs) was.  Returns (vector, shape).
    """
    shape = tuple(shape)
    legs = tuple(legs)
    rest = [l for l in range(len(shape)) if l not in legs]
    y, pshape = permute_vec(x, shape, list(legs) + rest)
    k = len(legs)
    merged = (size_of(pshape[:k]),) + pshape[k:]
    flat = LinearMap(merged[0], lmap.codomain_shape, lmap.cols)
    z, zshape = map_legs(y, merged, {0: flat})
    m = len(lmap.codomain_shape)
    n_out = m + len(rest)
    if m == k:
        slots = {l: i for i, l in enumerate(legs)}
        order, r = [], 0
        for pos in range(n_out):
            if pos in slots:
                order.append(slots[pos])
            else:
                order.append(m + r)
                r += 1
    else:
        first = min(legs)
        before = [i for i, l in enumerate(rest) if l < first]
        after = [i for i, l in enumerate(rest) if l > first]
        order = [m + i for i in before] + list(range(m)) + [m + i for i in after]
    return permute_vec(z, zshape, order)


def map_from_vectors(domain_shape, codomain_shape, f):
    """LinearMap whose column k is f(k) (a sparse vector)."""
    return LinearMap(domain_shape, codomain_shape, [f(k) for k in range(size_of(
        domain_shape if not isinstance(domain_shape, int) else (domain_shape,)))])


def left_inverse(M):
    """A LinearMap L with L o M = id; raises ValueError unless M is injective.

    L reads off coordinates from a set of independent rows of M, so L(y) is the
    preimage of y whenever y lies in the image (callers check membership).
    """
    piv, _, _ = _echelon([dict(c) for c in M.cols], M.n_out)
    if len(piv) != M.n_in:
        raise ValueError("map is not injective (rank %d < %d)" % (len(piv), M.n_in))
    chosen = sorted(col for col, _ in piv)
    rows = M.rows()
    sub = LinearMap(M.n_in, len(chosen), [{} for _ in range(M.n_in)])
    for r, i in enumerate(chosen):
        for j, v in rows[i].items():
            sub.cols[j][r] = v
    inv = sub.inverse()
    cols = [{} for _ in range(M.n_out)]
    for r, i in enumerate(chosen):
        cols[i] = inv.cols[r]
    return LinearMap(M.codomain_shape, M.domain_shape, cols)
