"""Exhaustive maximal-energy search over connected unicyclic graphs.

Energies come from exact root isolation of the characteristic polynomial,
so every candidate carries a rigorous enclosure.  Cospectral graphs share
one energy computation.  Before ranking, any two distinct spectra whose
enclosures overlap are refined down to radius 1e-12; enclosures that still
overlap are flagged as ties instead of being ordered silently.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .charpoly import charpoly
from .enumeration import UnicyclicCode, unicyclic_graphs
from .polynomials import IntPolynomial
from .roots import EnergyValue, energy_of_poly

_TIE_RADIUS = 1e-12


@dataclass(frozen=True)
class RankedEntry:
    rank: int
    code: UnicyclicCode
    energy: EnergyValue
    tied: bool


def _energy_worker(coeffs: tuple[int, ...], tol: float) -> EnergyValue:
    return energy_of_poly(IntPolynomial(coeffs), tol)


def max_energy_search(
    n: int, top_k: int = 5, tol: float = 1e-7, jobs: int = 1
) -> list[RankedEntry]:
    """Top-k unicyclic graphs on n vertices by energy, ties flagged."""
    if top_k < 1:
        raise ValueError("top_k must be at least 1")
    items = list(unicyclic_graphs(n))
    poly_of_code: dict[UnicyclicCode, tuple[int, ...]] = {}
    distinct: dict[tuple[int, ...], EnergyValue] = {}
    for code, graph in items:
        coeffs = charpoly(graph).coeffs
        poly_of_code[code] = coeffs
        distinct.setdefault(coeffs, None)

    polys = sorted(distinct)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            energies = list(pool.map(_energy_worker, polys, [tol] * len(polys)))
    else:
        energies = [_energy_worker(coeffs, tol) for coeffs in polys]
    for coeffs, energy in zip(polys, energies):
        distinct[coeffs] = energy

    entries = [
        (code, poly_of_code[code], distinct[poly_of_code[code]]) for code, _ in items
    ]
    entries.sort(key=lambda e: (-e[2].value, e[1], e[0].cycle_len, e[0].trees))

    # refine neighbouring entries with different spectra until separated
    refined: dict[tuple[int, ...], EnergyValue] = {}

    def refined_energy(coeffs: tuple[int, ...]) -> EnergyValue:
        if coeffs not in refined:
            refined[coeffs] = _energy_worker(coeffs, _TIE_RADIUS)
        return refined[coeffs]

    for i in range(min(top_k + 1, len(entries)) - 1):
        code_a, poly_a, ea = entries[i]
        code_b, poly_b, eb = entries[i + 1]
        if poly_a == poly_b:
            continue
        if _overlap(ea, eb):
            ea = refined_energy(poly_a)
            eb = refined_energy(poly_b)
            entries[i] = (code_a, poly_a, ea)
            entries[i + 1] = (code_b, poly_b, eb)
    entries.sort(key=lambda e: (-e[2].value, e[1], e[0].cycle_len, e[0].trees))

    out: list[RankedEntry] = []
    limit = min(top_k, len(entries))
    for i in range(limit):
        code, poly, energy = entries[i]
        tied = False
        for j in (i - 1, i + 1):
            if 0 <= j < len(entries):
                other_poly, other_energy = entries[j][1], entries[j][2]
                if other_poly == poly or _overlap(energy, other_energy):
                    tied = True
        out.append(RankedEntry(i + 1, code, energy, tied))
    return out


def _overlap(a: EnergyValue, b: EnergyValue) -> bool:
    return abs(a.value - b.value) <= a.radius + b.radius
