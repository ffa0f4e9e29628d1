"""Built-in group catalog: cyclic Z2..Z24, dihedral D2..D12, S3, S4, Q8.

Irreps are generated from unitary generator images expanded by words over the
Cayley table.  Every entry also carries named subgroups and a default
symmetric, conjugation-closed generating set for Cayley Laplacians.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .groups import FiniteGroup, finite_group, irrep_from_generators, subgroup

CYCLIC_MAX = 24
DIHEDRAL_MAX = 12


@dataclass
class CatalogEntry:
    group: FiniteGroup
    subgroups: dict            # name -> Subgroup
    irreps: tuple
    laplacian_generators: tuple


class UnknownGroupError(KeyError):
    pass


def available_groups():
    names = [f"Z{n}" for n in range(2, CYCLIC_MAX + 1)]
    names += [f"D{n}" for n in range(2, DIHEDRAL_MAX + 1)]
    names += ["S3", "S4", "Q8"]
    return names


@lru_cache(maxsize=None)
def load_entry(name):
    if name.startswith("Z") and name[1:].isdigit():
        n = int(name[1:])
        if 2 <= n <= CYCLIC_MAX:
            return _cyclic(n)
    if name.startswith("D") and name[1:].isdigit():
        n = int(name[1:])
        if 2 <= n <= DIHEDRAL_MAX:
            return _dihedral(n)
    if name == "S3":
        return _symmetric(3)
    if name == "S4":
        return _symmetric(4)
    if name == "Q8":
        return _quaternion()
    raise UnknownGroupError(f"unknown group {name!r}")


def resolve_subgroup(entry, name):
    try:
        return entry.subgroups[name]
    except KeyError:
        raise UnknownGroupError(
            f"group {entry.group.name} has no subgroup named {name!r}; "
            f"available: {', '.join(entry.subgroups)}") from None


# ---------------------------------------------------------------------------


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _cyclic(n):
    cayley = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    group = finite_group(f"Z{n}", cayley)
    irreps = []
    for k in range(n):
        image = np.array([[np.exp(2j * np.pi * k / n)]])
        irreps.append(irrep_from_generators(f"chi{k:02d}", group, {1: image}))
    subs = {"e": subgroup(group, [0])}
    for d in _divisors(n):
        if d > 1:
            step = n // d
            subs[f"Z{d}"] = subgroup(group, list(range(0, n, step)))
    gens = (1,) if n == 2 else (1, n - 1)
    return CatalogEntry(group, subs, tuple(irreps), gens)


def _dihedral(n):
    # element (a, b) = r^a s^b at index b * n + a; s r s = r^{-1}
    order = 2 * n
    cayley = np.empty((order, order), dtype=int)
    for a1 in range(n):
        for b1 in range(2):
            for a2 in range(n):
                for b2 in range(2):
                    a = (a1 + (a2 if b1 == 0 else -a2)) % n
                    b = (b1 + b2) % 2
                    cayley[b1 * n + a1, b2 * n + a2] = b * n + a
    group = finite_group(f"D{n}", cayley)
    r, s = 1, n

    def one_dim(label, rv, sv):
        return irrep_from_generators(label, group, {r: np.array([[rv]]),
                                                    s: np.array([[sv]])})

    irreps = [one_dim("A1", 1.0, 1.0), one_dim("A2", 1.0, -1.0)]
    if n % 2 == 0:
        irreps += [one_dim("B1", -1.0, 1.0), one_dim("B2", -1.0, -1.0)]
    flip = np.array([[1.0, 0.0], [0.0, -1.0]])
    for k in range(1, (n - 1) // 2 + 1):
        th = 2.0 * np.pi * k / n
        rot = np.array([[np.cos(th), -np.sin(th)], [np.sin(th), np.cos(th)]])
        irreps.append(irrep_from_generators(f"E{k}", group, {r: rot, s: flip}))

    subs = {"e": subgroup(group, [0])}
    for d in _divisors(n):
        if d > 1:
            subs[f"Z{d}r"] = subgroup(group, list(range(0, n, n // d)))
    subs["Z2s"] = subgroup(group, [0, s])
    subs[f"D{n}"] = subgroup(group, range(order))
    reflections = tuple(range(n, 2 * n))
    return CatalogEntry(group, subs, tuple(irreps), reflections)


def _perm_matrix(p):
    m = np.zeros((len(p), len(p)))
    for j, pj in enumerate(p):
        m[pj, j] = 1.0
    return m


def _sum_zero_basis(n):
    """Orthonormal basis of the sum-zero subspace of R^n, as columns."""
    cols = []
    for k in range(1, n):
        v = np.zeros(n)
        v[:k] = 1.0
        v[k] = -k
        cols.append(v / np.linalg.norm(v))
    return np.column_stack(cols)


def _standard_matrix(p):
    """Standard (n-1)-dimensional orthogonal matrix of a permutation."""
    q = _sum_zero_basis(len(p))
    return q.T @ _perm_matrix(p) @ q


def _parity(p):
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def _symmetric(n):
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):
        return tuple(p[q[i]] for i in range(n))

    cayley = np.array([[index[compose(p, q)] for q in perms] for p in perms])
    group = finite_group(f"S{n}", cayley)

    t = index[(1, 0) + tuple(range(2, n))]            # transposition (0 1)
    c = index[tuple(range(1, n)) + (0,)]              # n-cycle

    def gen_images(fn):
        return {t: fn(perms[t]), c: fn(perms[c])}

    irreps = [
        irrep_from_generators("trivial", group, gen_images(lambda p: np.eye(1))),
        irrep_from_generators("sign", group,
                              gen_images(lambda p: np.array([[float(_parity(p))]]))),
        irrep_from_generators("std", group, gen_images(_standard_matrix)),
    ]
    if n == 4:
        irreps.append(irrep_from_generators(
            "std_sign", group,
            gen_images(lambda p: _parity(p) * _standard_matrix(p))))
        # degree-2 irrep through the action on the three pairings of {0,1,2,3}
        pairings = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]

        def pairing_action(p):
            moved = []
            for pr in pairings:
                im = tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in pr))
                moved.append(pairings.index(im))
            return _standard_matrix(tuple(moved))

        irreps.append(irrep_from_generators("deg2", group, gen_images(pairing_action)))

    subs = {"e": subgroup(group, [0])}
    transpositions = [i for i, p in enumerate(perms)
                      if sum(p[j] != j for j in range(n)) == 2]
    if n == 3:
        for nick, tr in zip("abc", transpositions):
            subs[f"Z2{nick}"] = subgroup(group, [0, tr])
        subs["Z3"] = subgroup(group, [i for i, p in enumerate(perms) if _parity(p) == 1])
    if n == 4:
        subs["Z2"] = subgroup(group, [0, transpositions[0]])
        three_cycle = index[(1, 2, 0, 3)]
        subs["Z3"] = _generated(group, [three_cycle])
        subs["Z4"] = _generated(group, [c])
        double = [i for i, p in enumerate(perms)
                  if all(p[j] != j for j in range(n)) and _parity(p) == 1
                  and index[compose(p, p)] == 0]
        subs["V4"] = subgroup(group, [0] + double)
        subs["S3"] = subgroup(group, [i for i, p in enumerate(perms) if p[3] == 3])
        subs["A4"] = subgroup(group, [i for i, p in enumerate(perms) if _parity(p) == 1])
    subs[f"S{n}"] = subgroup(group, range(len(perms)))
    return CatalogEntry(group, subs, tuple(irreps), tuple(transpositions))


def _generated(group, gens):
    members = {group.identity}
    frontier = list(gens)
    while frontier:
        nxt = []
        for g in frontier:
            if g not in members:
                members.add(g)
                nxt.extend(int(group.cayley[g, s]) for s in gens)
                nxt.extend(int(group.cayley[s, g]) for s in gens)
        frontier = nxt
    return subgroup(group, sorted(members))


def _quaternion():
    # elements: +1 -1 +i -i +j -j +k -k at indices 0..7
    units = ["1", "i", "j", "k"]
    mult = {("1", u): (1, u) for u in units}
    mult.update({(u, "1"): (1, u) for u in units})
    for u in "ijk":
        mult[(u, u)] = (-1, "1")
    mult[("i", "j")] = (1, "k")
    mult[("j", "i")] = (-1, "k")
    mult[("j", "k")] = (1, "i")
    mult[("k", "j")] = (-1, "i")
    mult[("k", "i")] = (1, "j")
    mult[("i", "k")] = (-1, "j")

    def idx(sign, unit):
        return 2 * units.index(unit) + (0 if sign > 0 else 1)

    cayley = np.empty((8, 8), dtype=int)
    for a in range(8):
        for b in range(8):
            sa, ua = (1 if a % 2 == 0 else -1), units[a // 2]
            sb, ub = (1 if b % 2 == 0 else -1), units[b // 2]
            s, u = mult[(ua, ub)]
            cayley[a, b] = idx(sa * sb * s, u)
    group = finite_group("Q8", cayley)
    i_el, j_el = 2, 4

    def one_dim(label, iv, jv):
        return irrep_from_generators(label, group, {i_el: np.array([[iv]]),
                                                    j_el: np.array([[jv]])})

    spin = irrep_from_generators("spin", group, {
        i_el: np.array([[1j, 0.0], [0.0, -1j]]),
        j_el: np.array([[0.0, 1.0], [-1.0, 0.0]]),
    })
    irreps = (one_dim("trivial", 1.0, 1.0), one_dim("ker_i", 1.0, -1.0),
              one_dim("ker_j", -1.0, 1.0), one_dim("ker_k", -1.0, -1.0), spin)
    subs = {
        "e": subgroup(group, [0]),
        "Z2": subgroup(group, [0, 1]),
        "Z4i": subgroup(group, [0, 1, 2, 3]),
        "Z4j": subgroup(group, [0, 1, 4, 5]),
        "Z4k": subgroup(group, [0, 1, 6, 7]),
        "Q8": subgroup(group, range(8)),
    }
    return CatalogEntry(group, subs, irreps, tuple(range(2, 8)))
