"""Deterministic pictures: the element pyramid, plain and by region.

Run with: python3 demos/06_diagrams.py [out.svg]
"""

import sys

from chainendo import diagram
from chainendo.triangle import TriangleSpec


def main():
    small = TriangleSpec(4, 1, 2, 3)
    print("All fifteen members of the smallest proper triangle:")
    print(diagram.render_ascii(small))

    big = TriangleSpec(6, 1, 3, 4)
    print("The same layout at n = 6, one letter per region:")
    print(diagram.render_ascii(big, color_by="region"))
    print("A=down-collapsing  B=middle  C=up-collapsing  p/q=parallelograms")
    print("l/r=corner triangles  E=right identities")

    if len(sys.argv) > 1:
        path = sys.argv[1]
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(diagram.render_svg(big, color_by="region"))
        print(f"\nwrote {path}")
    else:
        text = diagram.render_svg(big, color_by="region")
        print(f"\nSVG output is {len(text)} bytes; pass a filename to save it.")
    print("Both renderers are byte-deterministic: same spec, same bytes.")


if __name__ == "__main__":
    main()
