"""The lockstep mutation pipeline and the Koszul-duality pair check.

A certified pair — silting collection on one side, simple-minded
collection on the other — can be walked through mutations in lockstep:
mutating both sides at the same index and re-verifying the
orthogonality pattern after every step keeps the certificate trail
intact.  ``wt_pipeline`` drives that walk starting from the standard
pair of an algebra.

``koszul_pair_check`` compares the two sides' dg endomorphism algebras
through Koszul duality: each side's dual (computed directly from its
simple dg modules when they exist, otherwise through a formality
witness) must have the cohomology of the opposite side, up to a bounded
isomorphism search on the cohomology algebras.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from ..core.algebras import PathAlgebra
from ..core.modules import minimal_projective_resolution, simple_module
from ..dg import (
    DGAlgebra,
    GradedAlgebraMap,
    cohomology_algebra,
    dg_end,
    find_formality_witness,
    koszul_dual,
    verify_dg_quasi_iso,
)
from ..errors import (
    IdempotentLiftMissing,
    Inconclusive,
    MutationNotVerified,
    PatternFailed,
    SimpleNotOneDimensional,
    StepFailed,
    TruncationUnsound,
)
from ..homotopy.complexes import ProjComplex, single_projective
from ..homotopy.mutation import silting_mutate, smc_mutate
from .checks import CheckReport, CorrespondenceCertificate, _Reporter, check_pattern

#: Largest vertex count the graded isomorphism search will enumerate
#: bijections for (factorial growth beyond this is pointless).
ISO_SEARCH_MAX_VERTICES = 6

#: Default resolution length when building the standard pair.
RESOLUTION_BOUND = 12


def standard_pair(
    algebra: PathAlgebra, resolution_bound: int = RESOLUTION_BOUND
) -> tuple[list[ProjComplex], list[ProjComplex]]:
    """The standard certified pair of an algebra: projective stalks on
    the silting side, resolved simples on the simple-minded side."""
    silting = [
        single_projective(algebra, v, 0, label=f"P({v})")
        for v in algebra.quiver.vertices
    ]
    smc = []
    for v in algebra.quiver.vertices:
        res = minimal_projective_resolution(
            simple_module(algebra, v), resolution_bound
        )
        smc.append(res.copy(label=f"res({v})"))
    return silting, smc


def lockstep_mutations(
    silting: Sequence[ProjComplex],
    smc: Sequence[ProjComplex],
    script: Sequence[tuple[int, str]],
    seed: int = 0,
    verify: bool = True,
) -> list[tuple[list[ProjComplex], list[ProjComplex]]]:
    """Apply a mutation script to both sides of a pair in lockstep.

    Script entries are (index, side) with 1-based indices and side
    ``left`` or ``right``; the trail returned starts at the input pair,
    so it has one more entry than the script.
    """
    silting = list(silting)
    smc = list(smc)
    trail = [(list(silting), list(smc))]
    for step, (index, side) in enumerate(script, start=1):
        if side not in {"left", "right"}:
            raise ValueError(f"step {step}: side must be 'left' or 'right', not {side!r}")
        if not 1 <= index <= len(silting):
            raise ValueError(
                f"step {step}: index {index} out of range 1..{len(silting)}"
            )
        silting = silting_mutate(silting, index - 1, side)
        smc = smc_mutate(smc, index - 1, side, verify=verify, seed=seed)
        trail.append((list(silting), list(smc)))
    return trail


@dataclass
class PipelineResult:
    """Final pair plus the certificate trail, one certificate per
    pattern check (the starting pair included)."""

    silting: list[ProjComplex]
    smc: list[ProjComplex]
    pairs: list[tuple[list[ProjComplex], list[ProjComplex]]]
    certificates: list[CorrespondenceCertificate]


def wt_pipeline(
    algebra: PathAlgebra,
    script: Sequence[tuple[int, str]],
    seed: int = 0,
    depth: int = 3,
) -> PipelineResult:
    """Walk the standard pair of an algebra through a mutation script.

    The orthogonality pattern is re-verified after every step, the
    starting pair included; any verification failure aborts with
    StepFailed naming the step (0 = the standard pair itself).
    """
    silting, smc = standard_pair(algebra)
    pairs = [(list(silting), list(smc))]
    certificates = []
    try:
        certificates.append(check_pattern(silting, smc, seed=seed, depth=depth))
    except PatternFailed as exc:
        raise StepFailed(
            f"standard pair fails its pattern check: {exc}", step=0
        ) from exc

    for step, (index, side) in enumerate(script, start=1):
        if side not in {"left", "right"}:
            raise ValueError(f"step {step}: side must be 'left' or 'right', not {side!r}")
        if not 1 <= index <= len(silting):
            raise ValueError(
                f"step {step}: index {index} out of range 1..{len(silting)}"
            )
        try:
            silting = silting_mutate(silting, index - 1, side)
            smc = smc_mutate(smc, index - 1, side, verify=True, seed=seed)
            certificates.append(check_pattern(silting, smc, seed=seed, depth=depth))
        except MutationNotVerified as exc:
            raise StepFailed(
                f"step {step} ({side} mutation at index {index}): mutated "
                f"collection failed re-verification",
                step=step,
                report=exc.report,
            ) from exc
        except PatternFailed as exc:
            raise StepFailed(
                f"step {step} ({side} mutation at index {index}): pattern "
                f"check failed: {exc}",
                step=step,
            ) from exc
        except Inconclusive as exc:
            raise StepFailed(
                f"step {step} ({side} mutation at index {index}): "
                f"verification inconclusive: {exc}",
                step=step,
            ) from exc
        pairs.append((list(silting), list(smc)))
    return PipelineResult(
        silting=list(silting), smc=list(smc), pairs=pairs, certificates=certificates
    )


# ---------------------------------------------------------------------------
# Koszul duality between the two sides
# ---------------------------------------------------------------------------


def _koszul_dual_route(
    E: DGAlgebra, window: tuple[int, int], budget: int
) -> tuple[DGAlgebra | None, str]:
    """Compute a Koszul dual of E, directly when its simple dg modules
    exist, else through a formality witness; (None, reason) if neither
    route lands."""
    try:
        return koszul_dual(E, window=window), "direct"
    except (SimpleNotOneDimensional, IdempotentLiftMissing):
        pass
    except TruncationUnsound as exc:
        return None, f"resolutions do not close within the window ({exc})"
    witness = find_formality_witness(E, budget=budget)
    if witness is None:
        return None, "no formality witness found within the search budget"
    try:
        return koszul_dual(witness.source, window=window), "formality"
    except (SimpleNotOneDimensional, IdempotentLiftMissing) as exc:
        return None, f"cohomology algebra has no usable simples ({exc})"
    except TruncationUnsound as exc:
        return None, f"resolutions do not close within the window ({exc})"


def _blockwise_buckets(h: DGAlgebra) -> dict[tuple[int, str, str], list[int]] | None:
    """Basis indices grouped by (degree, left idempotent, right
    idempotent), or None when some element is not block-pure."""
    buckets: dict[tuple[int, str, str], list[int]] = {}
    for i in range(h.dimension):
        block = h.block_of(i)
        if block is None:
            return None
        buckets.setdefault((h.degrees[i], block[0], block[1]), []).append(i)
    return buckets


def _propagate_scalars(
    h1: DGAlgebra,
    h2: DGAlgebra,
    img: dict[int, int],
    lam: dict[int, object],
) -> bool:
    """Best-effort solve of the multiplicativity constraints for the
    per-element scalars of a block-matched candidate map.

    Works entirely with one-dimensional blocks, so every product has at
    most one term.  Returns False on a constraint that already cannot
    hold; leftover scalars stay undetermined for the caller to default.
    """
    changed = True
    while changed:
        changed = False
        for (i, j), coords in h1.products.items():
            ti, tj = img[i], img[j]
            target = h2.products.get((ti, tj), {})
            if not coords:
                if target:
                    return False
                continue
            if not target:
                return False
            (k, c), = coords.items()
            (k2, c2), = target.items()
            if img[k] != k2:
                return False
            li, lj, lk = lam.get(i), lam.get(j), lam.get(k)
            if li is not None and lj is not None:
                value = li * lj * c2 / c
                if lk is None:
                    lam[k] = value
                    changed = True
                elif lk != value:
                    return False
            elif lk is not None and li is not None and lj is None:
                lam[j] = c * lk / (li * c2)
                changed = True
            elif lk is not None and lj is not None and li is None:
                lam[i] = c * lk / (lj * c2)
                changed = True
    return True


def graded_algebra_isomorphism(
    h1: DGAlgebra, h2: DGAlgebra
) -> GradedAlgebraMap | None:
    """Bounded isomorphism search between two graded algebras.

    Enumerates bijections of the idempotents, matches one-dimensional
    blocks degreewise, and solves for the connecting scalars by
    propagation; every candidate is fully verified before being
    returned.  None means no isomorphism was found within the bounds,
    not that none exists.
    """
    if h1.graded_dims() != h2.graded_dims():
        return None
    names1 = sorted(h1.idempotents)
    names2 = sorted(h2.idempotents)
    if len(names1) != len(names2) or len(names1) > ISO_SEARCH_MAX_VERTICES:
        return None
    buckets1 = _blockwise_buckets(h1)
    buckets2 = _blockwise_buckets(h2)
    if buckets1 is None or buckets2 is None:
        return None
    if any(len(b) > 1 for b in buckets1.values()) or any(
        len(b) > 1 for b in buckets2.values()
    ):
        return None

    one = h1.field.one
    for perm in permutations(names2):
        sigma = dict(zip(names1, perm))
        if any(
            len(buckets2.get((n, sigma[u], sigma[w]), [])) != len(members)
            for (n, u, w), members in buckets1.items()
        ):
            continue
        img: dict[int, int] = {}
        for (n, u, w), members in buckets1.items():
            img[members[0]] = buckets2[(n, sigma[u], sigma[w])][0]
        if len(set(img.values())) != len(img) or len(img) != h1.dimension:
            continue

        lam: dict[int, object] = {}
        consistent = True
        for name in names1:
            (i, c), = h1.idempotents[name].items()
            (i2, c2), = h2.idempotents[sigma[name]].items()
            if img[i] != i2:
                consistent = False
                break
            lam[i] = c2 / c
        if not consistent:
            continue
        if not _propagate_scalars(h1, h2, img, lam):
            continue
        images = [{img[i]: lam.get(i, one)} for i in range(h1.dimension)]
        candidate = GradedAlgebraMap(h1, h2, images)
        if verify_dg_quasi_iso(candidate):
            return candidate
    return None


def koszul_pair_check(
    silting: Sequence[ProjComplex],
    smc: Sequence[ProjComplex],
    window: tuple[int, int] = (-5, 5),
    budget: int = 64,
) -> CheckReport:
    """Check that the two sides of a pair are Koszul dual to each other.

    For each side, the dg endomorphism algebra's Koszul dual must have
    the cohomology of the opposite side's dg endomorphism algebra: equal
    cohomology dimensions (a hard condition) and an isomorphism of
    cohomology algebras found by the bounded search (pass when found,
    not-certified when the search comes back empty).
    """
    rep = _Reporter("koszul duality")
    E = dg_end(list(silting), provenance="dg end of the silting collection")
    F = dg_end(list(smc), provenance="dg end of the simple-minded collection")

    for label, source, opposite in (
        ("dual of the silting side", E, F),
        ("dual of the simple side", F, E),
    ):
        dual, route = _koszul_dual_route(source, window, budget)
        if dual is None:
            rep.soft(f"{label} computed", False, route)
            continue
        rep.hard(f"{label} computed", True, f"route: {route}")
        dual_h = dual.cohomology_dims()
        opp_h = opposite.cohomology_dims()
        rep.hard(
            f"{label} has the opposite side's cohomology dimensions",
            dual_h == opp_h,
            f"{_dims_text(dual_h)} versus {_dims_text(opp_h)}",
        )
        if dual_h != opp_h:
            continue
        iso = graded_algebra_isomorphism(
            cohomology_algebra(dual), cohomology_algebra(opposite)
        )
        rep.soft(
            f"{label} cohomology algebra matches the opposite side",
            iso is not None,
            "isomorphism verified" if iso is not None else
            "no isomorphism found within the bounded search",
        )
    return rep.report()


def _dims_text(dims: dict[int, int]) -> str:
    if not dims:
        return "{}"
    return "{" + ", ".join(f"{n}: {dims[n]}" for n in sorted(dims)) + "}"
