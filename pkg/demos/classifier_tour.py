"""Classify disguised cubics.

Each normal form is hit with a random rational change of coordinates, which
scrambles its coefficients, and then classified again.  The singular data
(Tjurina numbers, rational singular points) explains the answer.

    python demos/classifier_tour.py
"""

from __future__ import annotations

import random
from fractions import Fraction

from cubicpoisson import CurveType, Matrix, classify, normal_form, singular_data


def random_change_of_coordinates(rng: random.Random) -> Matrix:
    while True:
        g = Matrix([[Fraction(rng.randint(-3, 3), rng.choice([1, 2])) for _ in range(3)] for _ in range(3)])
        if g.det() != 0:
            return g


def main(seed: int = 7) -> None:
    rng = random.Random(seed)
    for t in CurveType:
        f = normal_form(t).apply_transform(random_change_of_coordinates(rng))
        data = singular_data(f)
        print(f"{t.value}")
        print(f"  disguised: {f}")
        print(f"  classified as {classify(f).value}", end="")
        if data.reduced:
            print(f"; Tjurina numbers {list(data.tjurina_numbers)}")
        else:
            print(f"; repeated factor of degree {data.repeated_factor_degree}")
        for p in data.rational_singular_points:
            coords = ":".join(str(x) for x in p.coordinates)
            print(f"  singular point [{coords}], multiplicity {p.multiplicity}")


if __name__ == "__main__":
    main()
