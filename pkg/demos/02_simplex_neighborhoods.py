"""Simplices, their layers, and discrete neighborhoods of a vertex.

Run with: python3 demos/02_simplex_neighborhoods.py
"""

from chainendo import analysis, simplex
from chainendo.core import format_compact
from chainendo.simplex import LayerId, SimplexSpec


def main():
    spec = SimplexSpec(4, (1, 2, 3))
    els = simplex.enumerate_simplex(spec)
    print(f"Simplex on vertices {spec.vertices} over a chain of {spec.n}:")
    print(" ", ", ".join(format_compact(e) for e in els))
    print(f"  order {len(els)} = C(n + k - 1, k - 1)")

    print("\nLayers of the greatest vertex (multiplicity of the value 3):")
    for s in range(spec.n + 1):
        block = simplex.layer(LayerId(spec, 2, s))
        labels = ", ".join(format_compact(e) for e in block) or "(empty)"
        print(f"  s={s}: {labels}")

    print("\nDiscrete neighborhoods of the least vertex, radius by radius:")
    scan = simplex.min_semiring_radius(spec, 0)
    for t, ok in enumerate(scan.closed, start=1):
        hood = simplex.discrete_neighborhood(spec, 0, t)
        verdict = "subsemiring" if ok else "NOT closed"
        print(f"  t={t}: {len(hood):2d} members, {verdict}")
    print(f"  least closed radius: {scan.least}")
    print(f"  closed prefix: radii 1..{scan.semiring_prefix}")
    print("  radius 1 is closed for every vertex of every simplex;")
    print("  larger radii can fail and then recover, as t=3 shows here.")

    print("\nCollapse test inside the least vertex's fixing block:")
    for text in ("1_4", "1_3 2", "1_3 3", "1_2 2_2"):
        alpha = next(e for e in els if format_compact(e) == text)
        verdict = simplex.nilpotent_in_neighborhood(spec, alpha)
        print(f"  {text:<8} collapses onto const 1: {verdict}")

    internal = SimplexSpec(6, (2, 3))
    hood2 = simplex.discrete_neighborhood(internal, 0, 2)
    ok, _ = analysis.is_subsemiring(hood2)
    print(
        f"\nInternal simplex {internal.vertices} over {internal.n}: "
        f"radius-2 neighborhood closed: {ok}"
    )


if __name__ == "__main__":
    main()
