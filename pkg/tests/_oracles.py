"""Independent reference computations shared by several test files."""

import itertools
import random

from contrakit.coeff import prime_field
from contrakit.ideals import Ideal, eliminate
from contrakit.poly import PolyRing


def random_small_ideal(rng, p, nvars=3, max_deg=2, ngens=None):
    F = prime_field(p)
    names = ["x", "y", "z"][:nvars]
    R = PolyRing(F, names)
    monos = [e for e in itertools.product(range(max_deg + 1), repeat=nvars) if sum(e) <= max_deg]
    gens = []
    for _ in range(ngens or rng.randint(1, 3)):
        terms = {}
        for e in rng.sample(monos, rng.randint(1, 4)):
            c = rng.randrange(1, p)
            terms[e] = F(c)
        gens.append(R.zero + sum((R.monomial(e, c) for e, c in terms.items()), R.zero))
    return Ideal(R, gens)


def points(ideal):
    R = ideal.ring
    F = R.field
    out = set()
    for pt in itertools.product(range(F.p), repeat=R.n):
        env = {n: F(v) for n, v in zip(R.names, pt)}
        if all(g.evaluate(env) == F.zero for g in ideal.gens):
            out.add(pt)
    return out


def elimination_mismatches(ideal, drop):
    """Compare eliminate() with projection of the finite point set.

    Returns a list of human-readable mismatch descriptions (empty if all agree).
    With the field equations added the ideal is radical and all of its points
    are rational, so the eliminated ideal cuts out exactly the projection.
    Without them only projection-into-variety is guaranteed.
    """
    R = ideal.ring
    p = R.field.p
    keep = [i for i, n in enumerate(R.names) if n not in drop]
    proj = {tuple(pt[i] for i in keep) for pt in points(ideal)}
    problems = []

    E = eliminate(ideal, drop)
    on_e = points(E)
    if not proj <= on_e:
        problems.append(f"projection escapes eliminate({ideal}): {sorted(proj - on_e)[:3]}")

    field_eqs = [R.var(n) ** p - R.var(n) for n in R.names]
    Ef = eliminate(Ideal(R, list(ideal.gens) + field_eqs), drop)
    on_ef = points(Ef)
    if on_ef != proj:
        problems.append(f"with field equations: {sorted(on_ef ^ proj)[:3]} differ for {ideal}")
    return problems


def run_elimination_oracle(count=50, primes=(5, 7), seed=20240611):
    mismatches = []
    checked = 0
    for p in primes:
        rng = random.Random(seed + p)
        for _ in range(count):
            nv = rng.randint(2, 3)
            I = random_small_ideal(rng, p, nvars=nv)
            drop = [I.ring.names[0]] if rng.random() < 0.7 or nv == 2 else list(I.ring.names[:2])
            mismatches += elimination_mismatches(I, drop)
            checked += 1
    return checked, mismatches


def sl2_relation_by_substitution():
    """ad - bc - 1 with a = p1 + s*M1, d = p1 - s*M1, b = p2 + s*M2, c = s*M2 - p2, then s^2 -> t."""
    R = PolyRing("QQ", ["s", "t", "p1", "p2", "M1", "M2"])
    s = R.var("s")
    a = R("p1") + s * R("M1")
    d = R("p1") - s * R("M1")
    b = R("p2") + s * R("M2")
    c = s * R("M2") - R("p2")
    rel = a * d - b * c - 1
    out = R.zero
    for e, coef in rel.terms.items():
        k = e[0]
        assert k % 2 == 0
        out = out + R.monomial((0, k // 2) + e[2:], coef)
    return PolyRing("QQ", ["t", "p1", "p2", "M1", "M2"]), out
