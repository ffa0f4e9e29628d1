"""Finite groups, subgroups, coset spaces, irreducible representations and duals.

Measure conventions used throughout: Haar on G gives every element weight
1/|G|, the subgroup H gets 1/|H|, and the quotient G/H carries the unique
normalized invariant measure with weight 1/[G:H] per left coset.
"""

from dataclasses import dataclass, field

import numpy as np

from .jacobi import hermitian_eigh

# a projection counts as nonzero (its class enters the dual) above this
PROJECTION_THRESHOLD = 1e-8
ASSOC_FULL_LIMIT = 64
ASSOC_SAMPLES = 20000


class GroupError(ValueError):
    """Structured error for invalid group data; message names the violated axiom."""


@dataclass
class FiniteGroup:
    name: str
    cayley: np.ndarray      # (order, order) int, entry [a, b] = index of a*b
    identity: int
    inverse: np.ndarray     # (order,) int

    @property
    def order(self):
        return self.cayley.shape[0]

    def mul(self, a, b):
        return int(self.cayley[a, b])

    def inv(self, a):
        return int(self.inverse[a])


def finite_group(name, cayley, rng=None):
    """Validate a multiplication table and build a FiniteGroup.

    Raises GroupError naming the first violated axiom.  Associativity is
    checked on all triples up to order 64 and on random samples above.
    """
    cayley = np.asarray(cayley, dtype=int)
    n = cayley.shape[0]
    if cayley.ndim != 2 or cayley.shape != (n, n) or n == 0:
        raise GroupError("cayley table is not a nonempty square matrix")
    if cayley.min() < 0 or cayley.max() >= n:
        raise GroupError(f"cayley entries must lie in [0, {n - 1}]")

    expect = np.arange(n)
    bad = np.nonzero((np.sort(cayley, axis=1) != expect[None, :]).any(axis=1))[0]
    if bad.size:
        raise GroupError(f"not a Latin square (row {bad[0]} has a repeated entry)")
    bad = np.nonzero((np.sort(cayley, axis=0) != expect[:, None]).any(axis=0))[0]
    if bad.size:
        raise GroupError(f"not a Latin square (column {bad[0]} has a repeated entry)")

    identity = None
    for e in range(n):
        if (cayley[e] == expect).all() and (cayley[:, e] == expect).all():
            identity = e
            break
    if identity is None:
        raise GroupError("no identity element")

    if n <= ASSOC_FULL_LIMIT:
        left = cayley[cayley, :]         # [a,b,c] -> (a*b)*c
        right = cayley[:, cayley]        # [a,b,c] -> a*(b*c)
        if not (left == right).all():
            a, b, c = np.argwhere(left != right)[0]
            raise GroupError(f"not associative at triple ({a}, {b}, {c})")
    else:
        rng = rng or np.random.default_rng(0)
        abc = rng.integers(0, n, size=(ASSOC_SAMPLES, 3))
        a, b, c = abc[:, 0], abc[:, 1], abc[:, 2]
        if not (cayley[cayley[a, b], c] == cayley[a, cayley[b, c]]).all():
            raise GroupError("not associative (sampled triples)")

    inverse = np.empty(n, dtype=int)
    for a in range(n):
        b = int(np.nonzero(cayley[a] == identity)[0][0])
        if cayley[b, a] != identity:
            raise GroupError(f"element {a} has no two-sided inverse")
        inverse[a] = b

    return FiniteGroup(name=name, cayley=cayley, identity=identity, inverse=inverse)


@dataclass
class Subgroup:
    group: FiniteGroup
    elements: tuple

    @property
    def order(self):
        return len(self.elements)


def subgroup(group, elements):
    """Validate closure of an element set and build a Subgroup."""
    elements = tuple(sorted(set(int(e) for e in elements)))
    if not elements:
        raise GroupError("subgroup is empty")
    if any(e < 0 or e >= group.order for e in elements):
        raise GroupError("subgroup element out of range")
    if group.identity not in elements:
        raise GroupError("subgroup does not contain the identity")
    members = set(elements)
    for a in elements:
        if group.inv(a) not in members:
            raise GroupError(f"subgroup not closed under inversion (element {a})")
        for b in elements:
            if group.mul(a, b) not in members:
                raise GroupError(f"subgroup not closed under product ({a}, {b})")
    return Subgroup(group=group, elements=elements)


@dataclass
class CosetSpace:
    group: FiniteGroup
    subgroup: Subgroup
    representatives: tuple      # minimal element index per coset, ordered by it
    coset_of: np.ndarray        # (order,) group element -> coset index

    @property
    def n_cosets(self):
        return len(self.representatives)

    @property
    def weight(self):
        return 1.0 / self.n_cosets


def coset_space(group, sub):
    """Partition G into left cosets xH with minimal-index representatives."""
    if sub.group is not group:
        raise GroupError("subgroup belongs to a different group")
    n = group.order
    coset_of = -np.ones(n, dtype=int)
    reps = []
    for g in range(n):
        if coset_of[g] >= 0:
            continue
        members = sorted(int(group.cayley[g, h]) for h in sub.elements)
        idx = len(reps)
        for m in members:
            if coset_of[m] >= 0:
                raise GroupError("left cosets do not partition the group")
            coset_of[m] = idx
        reps.append(members[0])
    if len(reps) * sub.order != n:
        raise GroupError("subgroup order does not divide the group order")
    return CosetSpace(group=group, subgroup=sub,
                      representatives=tuple(reps), coset_of=coset_of)


def average_over_subgroup(space, values_on_group):
    """T_H: average a function on G over right H-translates, one value per coset."""
    values = np.asarray(values_on_group)
    if values.shape != (space.group.order,):
        raise GroupError("expected one value per group element")
    cay = space.group.cayley
    hs = list(space.subgroup.elements)
    out = np.empty(space.n_cosets, dtype=complex)
    for i, rep in enumerate(space.representatives):
        out[i] = values[cay[rep, hs]].mean()
    return out


@dataclass
class Irrep:
    label: str
    dim: int
    matrices: np.ndarray            # (order, dim, dim) complex unitary
    character: np.ndarray = field(default=None)

    def __post_init__(self):
        self.matrices = np.asarray(self.matrices, dtype=complex)
        if self.character is None:
            self.character = np.einsum("gii->g", self.matrices)


@dataclass
class IrrepReport:
    label: str
    hom_residual: float
    unitarity_residual: float
    irreducibility_sum: float
    passed: bool
    message: str = ""


def verify_irrep(group, rho, tol=1e-10):
    """Check homomorphism, unitarity and the character-norm irreducibility test."""
    n = group.order
    mats = rho.matrices
    if mats.shape[0] != n or mats.shape[1] != mats.shape[2]:
        return IrrepReport(rho.label, np.inf, np.inf, np.nan, False,
                           "matrix count or dimensions do not match the group")
    prod = np.einsum("aij,bjk->abik", mats, mats)
    hom = np.abs(prod - mats[group.cayley]).max()
    gram = np.einsum("gij,gkj->gik", mats, mats.conj())
    unit = np.abs(gram - np.eye(rho.dim)).max()
    irr = float(np.mean(np.abs(rho.character) ** 2))
    passed = hom <= tol and unit <= tol and abs(irr - 1.0) <= tol
    return IrrepReport(rho.label, float(hom), float(unit), irr, passed)


def irrep_from_generators(label, group, images):
    """Expand generator images into per-element matrices over the Cayley table.

    `images` maps generator element index -> unitary matrix.  Elements are
    reached by breadth-first words in the generators.
    """
    n = group.order
    if not images:
        if n != 1:
            raise GroupError(f"irrep {label}: no generators given")
        dim = 1
        return Irrep(label=label, dim=dim, matrices=np.eye(1, dtype=complex)[None])
    gens = {int(g): np.asarray(m, dtype=complex) for g, m in images.items()}
    dim = next(iter(gens.values())).shape[0]
    mats = [None] * n
    mats[group.identity] = np.eye(dim, dtype=complex)
    frontier = [group.identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s, ms in gens.items():
                t = group.mul(g, s)
                if mats[t] is None:
                    mats[t] = mats[g] @ ms
                    nxt.append(t)
        frontier = nxt
    if any(m is None for m in mats):
        raise GroupError(f"irrep {label}: generators do not generate the group")
    return Irrep(label=label, dim=dim, matrices=np.array(mats))


@dataclass
class HProjection:
    irrep: Irrep
    matrix: np.ndarray
    rank: int


def h_projection(sub, rho, tol=PROJECTION_THRESHOLD):
    """Average the representation over H; an orthogonal projection."""
    mats = rho.matrices[list(sub.elements)]
    t = mats.mean(axis=0)
    w, _ = hermitian_eigh((t + t.conj().T) / 2.0)
    rank = int(np.sum(w > 0.5))
    return HProjection(irrep=rho, matrix=t, rank=rank)


@dataclass
class DualClass:
    """One dual class: a basis-adapted irrep whose H-projection is diag(1..1,0..0)."""
    irrep: Irrep
    projection: np.ndarray   # exact 0/1 diagonal, shape (dim, dim)
    rank: int
    gammas: np.ndarray       # (n_cosets, dim, dim): irrep(rep(xH)) @ projection

    @property
    def label(self):
        return self.irrep.label

    @property
    def dim(self):
        return self.irrep.dim


@dataclass
class DualObject:
    space: CosetSpace
    classes: tuple

    @property
    def labels(self):
        return [c.label for c in self.classes]


def dual_object(space, catalog, tol=PROJECTION_THRESHOLD):
    """Select the classes with nonzero H-projection and adapt their bases.

    The catalog must be complete (sum of squared dimensions equals |G|).
    Each retained irrep is conjugated by a unitary so the projection becomes
    exactly diagonal with ones first; the dimension identity
    sum(d * rank) == [G:H] is enforced.
    """
    group = space.group
    total = sum(r.dim ** 2 for r in catalog)
    if total != group.order:
        raise GroupError(
            f"irrep catalog incomplete: sum of squared dimensions is {total}, "
            f"expected |G| = {group.order}")
    reps = list(space.representatives)
    classes = []
    for rho in sorted(catalog, key=lambda r: (r.dim, r.label)):
        proj = h_projection(space.subgroup, rho, tol)
        if np.linalg.norm(proj.matrix) <= tol:
            continue
        w, basis = hermitian_eigh(proj.matrix)
        if np.abs(w - np.round(w)).max() > 1e-8:
            raise GroupError(f"projection for {rho.label} is not idempotent")
        k = proj.rank
        adapted = np.einsum("ji,gjk,kl->gil", basis.conj(), rho.matrices, basis)
        t_exact = np.zeros((rho.dim, rho.dim), dtype=complex)
        t_exact[np.arange(k), np.arange(k)] = 1.0
        gammas = adapted[reps] @ t_exact
        classes.append(DualClass(
            irrep=Irrep(label=rho.label, dim=rho.dim, matrices=adapted),
            projection=t_exact, rank=k, gammas=gammas))
    counted = sum(c.dim * c.rank for c in classes)
    if counted != space.n_cosets:
        raise GroupError(
            f"dimension identity failed: sum d*rank = {counted}, "
            f"expected [G:H] = {space.n_cosets}")
    return DualObject(space=space, classes=tuple(classes))


def gamma(dual_class, x):
    """Coefficient matrix at coset x: irrep(representative) @ projection."""
    return dual_class.gammas[x]


def is_normal(space):
    """True if the subgroup is normal in the group."""
    g = space.group
    members = set(space.subgroup.elements)
    for x in range(g.order):
        xi = g.inv(x)
        for h in space.subgroup.elements:
            if g.mul(g.mul(x, h), xi) not in members:
                return False
    return True
