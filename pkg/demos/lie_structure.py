"""Structure theory of the triple-line algebra.

The vector fields killing z0^3 are the traceless matrices with zero first row.
This script shows the pieces that make that algebra non-reductive: its
radical is a 2-dimensional abelian ideal, the center is trivial, and the
quotient is sl(2).

    python demos/lie_structure.py
"""

from __future__ import annotations

from cubicpoisson import annihilator, center, derived_series, killing_form, parse, radical, rank


def show(label, algebra) -> None:
    print(f"{label}: dimension {algebra.dim}")
    for b in algebra.basis:
        print("   ", [[str(x) for x in row] for row in b.rows])


def main() -> None:
    g = annihilator(parse("z0^3"))
    show("g", g)
    show("radical", radical(g))
    show("center", center(g))
    print("derived series dimensions:", [s.dim for s in derived_series(g)])
    K = killing_form(g)
    print("Killing form rank:", rank(K))
    print("g / radical has dimension", g.dim - radical(g).dim, "and nondegenerate Killing form, so it is sl(2)")


if __name__ == "__main__":
    main()
