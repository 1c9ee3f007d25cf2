"""Walk through the nine plane cubics and print the automorphism algebra of each.

For every normal form we compute the traceless linear vector fields that kill
the cubic (strict mode) and those that only preserve the curve (divisor mode),
then ask whether each algebra is reductive.

    python demos/nine_cubics.py
"""

from __future__ import annotations

from cubicpoisson import CurveType, analyze, normal_form


def main() -> None:
    print(f"{'#':>3}  {'type':<22} {'strict':>6} {'divisor':>7}  verdict (strict / divisor)")
    for t in CurveType:
        report = analyze(normal_form(t))
        strict, divisor = report.mode("strict"), report.mode("divisor")
        print(
            f"{t.index:>3}  {t.value:<22} {strict.algebra.dim:>6} {divisor.algebra.dim:>7}  "
            f"{strict.obstruction} / {divisor.obstruction}"
        )

    # The interesting case: three concurrent lines.  The strict algebra is
    # abelian, the curve-preserving one is not.
    report = analyze("z0*z1*(z0 + z1)")
    print()
    print(report.to_text())


if __name__ == "__main__":
    main()
