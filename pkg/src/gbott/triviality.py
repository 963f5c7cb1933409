"""Deciders for rational and integral triviality of a tower's cohomology.

A tower is Q-trivial (Z-trivial) when its cohomology ring with rational
(integer) coefficients is isomorphic to that of the product of
projective spaces with the same fiber dimensions.

Q-triviality is decided stage by stage: the stage bundle must satisfy

    (n_i+1)^k c_k(xi_i) = binom(n_i+1, k) c_1(xi_i)^k   in the ring,

for k = 1..n_i+1, reading c_(n_i+1) = 0 so the last instance is
c_1(xi_i)^(n_i+1) = 0.  When all stages pass, the classes

    z_i = primitive integer vector on the line of (n_i+1) x_i + c_1(xi_i)

satisfy z_i^(n_i+1) = 0 and generate; writing z_i = r_i (x_i +
c_1(xi_i)/(n_i+1)) defines the positive integer scale r_i.  Z-triviality
holds exactly when every r_i = 1 (equivalently n_i+1 divides every
coefficient of c_1(xi_i)): then the transition from x to z is triangular
with unit diagonal, hence unimodular, and the z_i present the product
ring.  This divisibility criterion is cross-checked against the
brute-force search in gbott.isosearch by the test suite.

Every Q-trivial tower can be reordered, by conjugating with an
admissible permutation, so that all n_i = 1 stages come first and no
stage is twisted over a stage with fiber dimension > 1; `decompose`
produces that form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cohomology import CohomRing
from .errors import (
    InadmissiblePermutation,
    InternalConsistencyError,
    PreconditionError,
)
from .poly import Polynomial, default_names
from .tower import Permutation, TowerSpec, permute


@dataclass(frozen=True)
class Degree2Class:
    """An integer vector (b_1, ..., b_h) standing for sum b_j x_j."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(b) for b in self.coeffs))

    @property
    def is_primitive(self) -> bool:
        return math.gcd(*self.coeffs) == 1 if self.coeffs else False

    def to_polynomial(self) -> Polynomial:
        return Polynomial.linear(self.coeffs)

    def serialize(self, names=None) -> str:
        return self.to_polynomial().serialize(names)


@dataclass(frozen=True)
class GeneratorCandidate:
    """The canonical degree-2 generator candidate of one stage: the
    primitive vector with positive x_i-coefficient on the line spanned
    by (n_i+1) x_i + c_1(xi_i), together with its scale r_i."""

    stage: int
    scale: int
    vector: Degree2Class


@dataclass(frozen=True)
class StageDiagnostic:
    """Per-stage outcome: the first k whose Chern identity fails, or the
    stage's generator candidate when all identities hold."""

    stage: int
    fiber_dim: int
    violated_k: int | None = None
    candidate: GeneratorCandidate | None = None

    @property
    def passed(self) -> bool:
        return self.violated_k is None


@dataclass(frozen=True)
class Decomposition:
    """Reordering of a Q-trivial tower with all n = 1 stages leading."""

    permutation: Permutation
    reordered: TowerSpec
    bott_height: int
    base: TowerSpec
    fiber_dims: tuple[int, ...]


@dataclass(frozen=True)
class TrivialityReport:
    q_trivial: bool
    z_trivial: bool
    total_chern_trivial: bool
    per_stage: tuple[StageDiagnostic, ...]
    decomposition: Decomposition | None = None

    def __post_init__(self):
        if self.z_trivial and not self.q_trivial:
            raise InternalConsistencyError("z_trivial without q_trivial")
        if self.total_chern_trivial and not self.q_trivial:
            raise InternalConsistencyError("total_chern_trivial without q_trivial")

    def to_dict(self) -> dict:
        out = {
            "q_trivial": self.q_trivial,
            "z_trivial": self.z_trivial,
            "total_chern_trivial": self.total_chern_trivial,
            "stages": [],
        }
        for d in self.per_stage:
            entry = {"stage": d.stage, "fiber_dim": d.fiber_dim}
            if d.violated_k is not None:
                entry["violated_k"] = d.violated_k
            if d.candidate is not None:
                entry["candidate"] = list(d.candidate.vector.coeffs)
                entry["scale"] = d.candidate.scale
            out["stages"].append(entry)
        if self.decomposition is not None:
            out["decomposition"] = {
                "permutation": list(self.decomposition.permutation.images),
                "bott_height": self.decomposition.bott_height,
                "fiber_dims": list(self.decomposition.fiber_dims),
            }
        return out

    def to_text(self, names=None) -> str:
        names = tuple(names) if names is not None else default_names(
            len(self.per_stage)
        )
        lines = [
            f"q_trivial: {_yn(self.q_trivial)}",
            f"z_trivial: {_yn(self.z_trivial)}",
            f"total_chern_trivial: {_yn(self.total_chern_trivial)}",
        ]
        for d in self.per_stage:
            if d.violated_k is not None:
                lines.append(
                    f"  stage {d.stage}: Chern identity fails at k={d.violated_k}"
                )
            elif d.candidate is not None:
                vec = d.candidate.vector.serialize(names)
                lines.append(
                    f"  stage {d.stage}: candidate z{d.stage} = {vec}"
                    f" (scale r{d.stage} = {d.candidate.scale})"
                )
        if self.decomposition is not None:
            dec = self.decomposition
            perm = ", ".join(str(i) for i in dec.permutation.images)
            lines.append(
                f"decomposition: stage order ({perm}); "
                f"base Bott tower of height {dec.bott_height}; "
                f"fiber dims {list(dec.fiber_dims)}"
            )
        return "\n".join(lines)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


# -- per-stage analysis ------------------------------------------------------


def _first_violated_k(ring: CohomRing, stage: int) -> int | None:
    """Smallest k in 1..n+1 where (n+1)^k c_k != binom(n+1,k) c_1^k in
    the ring, or None if the stage passes all identities."""
    n = ring.tower.dims[stage - 1]
    cd = ring.chern[stage - 1]
    c1 = cd.classes[1]
    c1_power = Polynomial.one(ring.nvars)
    for k in range(1, n + 2):
        c1_power = c1_power * c1
        delta = ((n + 1) ** k) * cd.c(k) - math.comb(n + 1, k) * c1_power
        if not delta.is_zero and not ring.is_zero(delta):
            return k
    return None


def _candidate(ring: CohomRing, stage: int) -> GeneratorCandidate:
    n = ring.tower.dims[stage - 1]
    c1 = ring.chern[stage - 1].classes[1]
    vec = list(c1.linear_coefficients())
    vec[stage - 1] += n + 1
    g = math.gcd(*vec)
    prim = tuple(b // g for b in vec)
    return GeneratorCandidate(
        stage=stage, scale=(n + 1) // g, vector=Degree2Class(prim)
    )


def stage_diagnostics(t: TowerSpec, ring: CohomRing | None = None) -> tuple[StageDiagnostic, ...]:
    """For each stage, the first violated Chern identity or, when the
    stage passes, its generator candidate."""
    ring = ring or CohomRing(t)
    out = []
    for i in range(1, t.height + 1):
        k = _first_violated_k(ring, i)
        if k is not None:
            out.append(StageDiagnostic(stage=i, fiber_dim=t.dims[i - 1], violated_k=k))
        else:
            cand = _candidate(ring, i)
            if __debug__:
                power = cand.vector.to_polynomial() ** (t.dims[i - 1] + 1)
                assert ring.is_zero(power), "candidate power fails to vanish"
            out.append(
                StageDiagnostic(
                    stage=i, fiber_dim=t.dims[i - 1], candidate=cand
                )
            )
    return tuple(out)


# -- deciders ----------------------------------------------------------------


def is_q_trivial(t: TowerSpec, ring: CohomRing | None = None) -> bool:
    """Rational triviality via the per-stage Chern identities."""
    ring = ring or CohomRing(t)
    return all(_first_violated_k(ring, i) is None for i in range(1, t.height + 1))


def is_total_chern_trivial(t: TowerSpec, ring: CohomRing | None = None) -> bool:
    """True iff every c_k(xi_i), k >= 1, is zero in the ring."""
    ring = ring or CohomRing(t)
    for cd in ring.chern:
        for c in cd.classes[1:]:
            if not c.is_zero and not ring.is_zero(c):
                return False
    return True


def generator_candidates(t: TowerSpec, ring: CohomRing | None = None) -> tuple[GeneratorCandidate, ...]:
    """The canonical degree-2 generators of a Q-trivial tower."""
    ring = ring or CohomRing(t)
    if not is_q_trivial(t, ring):
        raise PreconditionError("generator_candidates requires a Q-trivial tower")
    return tuple(_candidate(ring, i) for i in range(1, t.height + 1))


def is_z_trivial(t: TowerSpec, ring: CohomRing | None = None) -> bool:
    """Integral triviality: Q-trivial and every candidate scale r_i = 1."""
    ring = ring or CohomRing(t)
    if not is_q_trivial(t, ring):
        return False
    return all(
        _candidate(ring, i).scale == 1 for i in range(1, t.height + 1)
    )


def bott_q_trivial(t: TowerSpec, ring: CohomRing | None = None) -> bool:
    """For towers with every fiber a line (all n_i = 1): Q-triviality is
    equivalent to c_1(xi_i)^2 = 0 for every stage."""
    if any(n != 1 for n in t.dims):
        raise PreconditionError("bott_q_trivial requires all fiber dimensions 1")
    ring = ring or CohomRing(t)
    for cd in ring.chern:
        c1 = cd.classes[1]
        if not ring.is_zero(c1 * c1):
            return False
    return True


# -- decomposition -----------------------------------------------------------


def decompose(t: TowerSpec, ring: CohomRing | None = None) -> Decomposition:
    """Reorder a Q-trivial tower so all n_i = 1 stages lead, in their
    original relative order, followed by the n_i > 1 stages in theirs.

    On the result, every column belonging to a stage with fiber
    dimension > 1 is zero below its own block; a failure of that check
    (or of the permutation's admissibility) would contradict what
    Q-triviality guarantees and raises InternalConsistencyError.
    """
    ring = ring or CohomRing(t)
    if not is_q_trivial(t, ring):
        raise PreconditionError("decompose requires a Q-trivial tower")
    order = [i for i in range(1, t.height + 1) if t.dims[i - 1] == 1]
    order += [i for i in range(1, t.height + 1) if t.dims[i - 1] > 1]
    images = [0] * t.height
    for new_pos, old_i in enumerate(order, start=1):
        images[old_i - 1] = new_pos
    sigma = Permutation(tuple(images))
    try:
        reordered = permute(t, sigma)
    except InadmissiblePermutation as exc:
        raise InternalConsistencyError(
            f"Q-trivial tower resisted reordering: {exc}"
        ) from exc
    for i, stage in enumerate(reordered.stages, start=1):
        for k in range(1, i):
            if reordered.dims[k - 1] > 1 and any(
                row[k - 1] != 0 for row in stage.coeffs
            ):
                raise InternalConsistencyError(
                    f"reordered stage {i} still twisted over wide stage {k}"
                )
    r = sum(1 for n in t.dims if n == 1)
    base = TowerSpec(tuple(reordered.stages[:r]))
    return Decomposition(
        permutation=sigma,
        reordered=reordered,
        bott_height=r,
        base=base,
        fiber_dims=tuple(n for n in reordered.dims[r:]),
    )


# -- aggregate ---------------------------------------------------------------


def full_report(t: TowerSpec) -> TrivialityReport:
    """One-pass aggregate: all flags, per-stage diagnostics, and the
    decomposition when the tower is Q-trivial."""
    ring = CohomRing(t)
    per_stage = stage_diagnostics(t, ring)
    q = all(d.passed for d in per_stage)
    z = q and all(d.candidate.scale == 1 for d in per_stage)
    chern = is_total_chern_trivial(t, ring)
    dec = decompose(t, ring) if q else None
    return TrivialityReport(
        q_trivial=q,
        z_trivial=z,
        total_chern_trivial=chern,
        per_stage=per_stage,
        decomposition=dec,
    )
