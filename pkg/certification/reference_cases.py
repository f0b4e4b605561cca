"""Degree-5 reference data, stored as exact fractions.

    MAXIMAL_INFEASIBLE_VECTORS    the fourteen sorted vectors just outside the
                                  drawable rows; each must certify as infeasible
    REMAINING_CASES               the (phi_tau) sequences whose open system is
                                  nonempty, with their bounding boxes and omega
                                  bounds as printed
    FEASIBLE_CASES                one (x_plus, x_minus) pair per drawable row,
                                  with the permutation tau that produced them

    Printed omega bounds are kept as decimal strings. Rows e, f and g print
    their two omega bounds in reverse order; compare them as sorted pairs.
    Row XI of the feasible pairs prints beta_4 of x_plus as 2365/32, which breaks
    the angle sum; the stored value 2565/32 restores it (see MISPRINTS).

    To test this module run: uv run -m certification.reference_cases
"""

from dataclasses import dataclass
from fractions import Fraction

from .reduced_system import Box

D = 5
GAMMA_4 = 2 * D - 1


def _fractions(text: str) -> tuple[Fraction, ...]:
    return tuple(Fraction(part.strip()) for part in text.split(","))


def _box(beta_plus: str, gamma_plus: str, beta_minus: str, gamma_minus: str) -> Box:
    upper = _fractions(beta_plus) + _fractions(gamma_plus)
    lower = _fractions(beta_minus) + _fractions(gamma_minus)
    return Box.from_bounds(D, lower, upper)


@dataclass(frozen=True)
class PrintedBounds:
    """Printed omega bounds (as printed, possibly reversed)."""
    first: str
    second: str

    def sorted_pair(self) -> tuple[Fraction, Fraction]:
        a, b = Fraction(self.first), Fraction(self.second)
        return (min(a, b), max(a, b))

    @property
    def transposed(self) -> bool:
        return Fraction(self.first) > Fraction(self.second)


@dataclass(frozen=True)
class SplitPiece:
    """One piece of a split case; box only where it was printed."""
    printed: PrintedBounds
    box: Box | None = None


@dataclass(frozen=True)
class RemainingCase:
    """A (phi, tau) orbit whose open system is nonempty."""
    label: str
    sequence: tuple[Fraction, ...]
    box: Box
    printed: PrintedBounds
    cut: tuple[int, tuple[Fraction, ...]] | None = None
    pieces: tuple[SplitPiece, ...] = ()

    @property
    def vector(self) -> tuple[Fraction, ...]:
        return tuple(sorted(self.sequence, reverse=True))


@dataclass(frozen=True)
class FeasibleCase:
    """A drawable extremal vector with a pair of closure points of opposite omega sign."""
    name: str
    phi: tuple[Fraction, ...]
    tau: tuple[int, ...]
    x_plus: tuple[Fraction, ...]
    x_minus: tuple[Fraction, ...]


# ============================================================================
# MAXIMAL INFEASIBLE VECTORS
# ============================================================================

MAXIMAL_INFEASIBLE_VECTORS: tuple[tuple[Fraction, ...], ...] = tuple(
    _fractions(v)
    for v in (
        "180, 120, 120, 120, 31.875",
        "180, 120, 120, 105, 37.5",
        "180, 120, 120, 97.5, 45.9375",
        "180, 120, 120, 93.75, 46.875",
        "180, 120, 120, 91.875, 48.75",
        "180, 120, 120, 60, 60",
        "180, 120, 105, 105, 52.5",
        "180, 120, 105, 91.875, 60",
        "180, 120, 97.5, 97.5, 60",
        "180, 105, 105, 105, 60",
        "180, 105, 93.75, 91.875, 90.9375",
        "180, 105, 91.875, 91.875, 91.875",
        "180, 97.5, 97.5, 93.75, 93.75",
        "180, 97.5, 97.5, 97.5, 90.46875",
    )
)


# ============================================================================
# REMAINING CASES
# ============================================================================

REMAINING_CASES: dict[str, RemainingCase] = {
    case.label: case
    for case in (
        RemainingCase(
            "a",
            _fractions("120, 120, 120, 31.875, 180"),
            _box(
                "975/16, 975/16, 975/16, 255/8, 90",
                "4185/64, 1055/16, 1935/28, 1095/14, 465/56",
                "1575/32, 385/8, 585/14, 165/7, 9615/112",
                "465/8, 465/8, 465/8, 465/8, 0",
            ),
            PrintedBounds("0.04019886771016", "0.352662021312439"),
        ),
        RemainingCase(
            "b",
            _fractions("105, 120, 120, 37.5, 180"),
            _box(
                "45, 60, 60, 75/2, 90",
                "1125/16, 255/4, 465/7, 510/7, 45/14",
                "315/8, 105/2, 330/7, 240/7, 2475/28",
                "135/2, 60, 60, 60, 0",
            ),
            PrintedBounds("0.16628181995631", "0.322844500932659"),
        ),
        RemainingCase(
            "c",
            _fractions("97.5, 120, 120, 45.9375, 180"),
            _box(
                "375/8, 1035/16, 1995/32, 735/16, 90",
                "9945/128, 2095/32, 3735/56, 2055/28, 1425/112",
                "1575/64, 785/16, 1305/28, 465/14, 18735/224",
                "1065/16, 405/8, 885/16, 885/16, 0",
            ),
            PrintedBounds("-0.04784331869952", "0.41994431818384"),
            cut=(GAMMA_4, (Fraction(7), Fraction(11))),
            pieces=(
                SplitPiece(
                    PrintedBounds("0.03993726639257", "0.41994431818384"),
                    _box(
                        "375/8, 1035/16, 1995/32, 735/16, 90",
                        "9945/128, 2095/32, 3735/56, 1078/15, 7",
                        "1575/64, 785/16, 1305/28, 544/15, 21503/256",
                        "1065/16, 405/8, 885/16, 885/16, 0",
                    ),
                ),
                SplitPiece(PrintedBounds("0.01183838535761", "0.23617122360425")),
                SplitPiece(PrintedBounds("0.00422323812900", "0.09377125077374")),
            ),
        ),
        RemainingCase(
            "d",
            _fractions("93.75, 120, 120, 46.875, 180"),
            _box(
                "165/4, 255/4, 495/8, 375/8, 90",
                "5025/64, 1035/16, 1845/28, 1005/14, 585/56",
                "735/32, 405/8, 675/14, 255/7, 9495/112",
                "555/8, 105/2, 225/4, 225/4, 0",
            ),
            PrintedBounds("-0.00626089365276", "0.38064127480888"),
            cut=(GAMMA_4, (Fraction(5),)),
            pieces=(
                SplitPiece(PrintedBounds("0.075681007375979", "0.38064127480888")),
                SplitPiece(PrintedBounds("0.01953883026443", "0.25021013905337")),
            ),
        ),
        RemainingCase(
            "e",
            _fractions("91.875, 120, 120, 48.75, 180"),
            _box(
                "165/4, 1035/16, 1995/32, 195/4, 90",
                "2565/32, 65, 1845/28, 1005/14, 345/28",
                "315/16, 50, 675/14, 255/7, 4695/56",
                "555/8, 405/8, 885/16, 885/16, 0",
            ),
            PrintedBounds("0.39692841575826", "-0.05161138747194"),
            cut=(GAMMA_4, (Fraction(7), Fraction(10))),
            pieces=(
                SplitPiece(PrintedBounds("0.027606528320338", "0.39692841575826")),
                SplitPiece(PrintedBounds("0.01976589000208", "0.21354032967021")),
                SplitPiece(PrintedBounds("0.00062581827947", "0.11990580211028")),
            ),
        ),
        RemainingCase(
            "f",
            _fractions("105, 120, 105, 52.5, 180"),
            _box(
                "45, 60, 60, 105/2, 90",
                "1155/16, 265/4, 495/7, 465/7, 75/14",
                "285/8, 95/2, 270/7, 330/7, 2445/28",
                "135/2, 60, 60, 45, 0",
            ),
            PrintedBounds("0.42073914509770", "0.12567774999668"),
        ),
        RemainingCase(
            "g",
            _fractions("105, 105, 120, 52.5, 180"),
            _box(
                "45, 60, 135/2, 105/2, 90",
                "1215/16, 285/4, 450/7, 480/7, 135/14",
                "225/8, 75/2, 360/7, 300/7, 2385/28",
                "135/2, 60, 45, 105/2, 0",
            ),
            PrintedBounds("0.44884628439700", "0.02302084943542"),
        ),
        RemainingCase(
            "h",
            _fractions("91.875, 120, 105, 60, 180"),
            _box(
                "135/4, 975/16, 1935/32, 60, 90",
                "315/4, 525/8, 1935/28, 885/14, 45/7",
                "45/2, 195/4, 585/14, 375/7, 1215/14",
                "585/8, 465/8, 945/16, 705/16, 0",
            ),
            PrintedBounds("0.07059309513054", "0.365922064215845"),
        ),
        RemainingCase(
            "i",
            _fractions("60, 120, 91.875, 105, 180"),
            _box(
                "45/14, 1725/28, 3405/56, 75, 1215/16",
                "90, 60, 1005/16, 75/2, 135/4",
                "0, 915/16, 435/8, 285/4, 585/8",
                "2475/28, 795/14, 1635/28, 30, 225/8",
            ),
            PrintedBounds("-0.260537672566709", "-0.127529352077151"),
        ),
        RemainingCase(
            "j",
            _fractions("91.875, 105, 120, 60, 180"),
            _box(
                "135/4, 975/16, 2175/32, 60, 90",
                "165/2, 565/8, 1755/28, 915/14, 75/7",
                "15, 155/4, 765/14, 345/7, 1185/14",
                "585/8, 465/8, 705/16, 825/16, 0",
            ),
            PrintedBounds("-0.040708347750012", "0.38984862337978"),
            cut=(GAMMA_4, (Fraction(7),)),
            pieces=(
                SplitPiece(PrintedBounds("0.01134976797036", "0.38984862337978")),
                SplitPiece(PrintedBounds("0.00159668015617", "0.167983216625798")),
            ),
        ),
        RemainingCase(
            "k",
            _fractions("97.5, 97.5, 120, 60, 180"),
            _box(
                "30, 45, 255/4, 60, 90",
                "315/4, 145/2, 855/14, 435/7, 30/7",
                "45/2, 35, 405/7, 390/7, 615/7",
                "75, 135/2, 105/2, 225/4, 0",
            ),
            PrintedBounds("0.099362774740883", "0.274610072620768"),
        ),
        RemainingCase(
            "l",
            _fractions("90.9375, 105, 93.75, 91.875, 180"),
            _box(
                "405/16, 195/4, 495/8, 1185/16, 2595/32",
                "315/4, 1095/16, 495/8, 75/2, 165/8",
                "45/2, 345/8, 225/4, 285/4, 1275/16",
                "2475/32, 525/8, 225/4, 255/8, 285/16",
            ),
            PrintedBounds("0.03013991922475", "0.14994363475076"),
        ),
        RemainingCase(
            "m",
            _fractions("90.9375, 93.75, 105, 91.875, 180"),
            _box(
                "315/16, 75/2, 495/8, 1095/16, 2505/32",
                "1305/16, 1185/16, 495/8, 195/4, 105/4",
                "135/8, 255/8, 225/4, 525/8, 615/8",
                "2565/32, 285/4, 225/4, 345/8, 375/16",
            ),
            PrintedBounds("-0.16587845769802", "-0.04621984365605"),
        ),
        # there is no row "n"
        RemainingCase(
            "o",
            _fractions("97.5, 97.5, 97.5, 90.46875, 180"),
            _box(
                "435/16, 315/8, 975/16, 2295/32, 645/8",
                "4935/64, 2295/32, 975/16, 315/8, 645/32",
                "825/32, 585/16, 465/8, 1125/16, 5115/64",
                "2445/32, 1125/16, 465/8, 585/16, 75/4",
            ),
            PrintedBounds("0.02710311900070", "0.08854800480938"),
        ),
    )
}

# cuts keyed by the phi_tau sequence they apply to
REFERENCE_CUTS: dict[tuple[Fraction, ...], tuple[int, tuple[Fraction, ...]]] = {
    case.sequence: case.cut for case in REMAINING_CASES.values() if case.cut is not None
}


# ============================================================================
# FEASIBLE PAIRS
# ============================================================================

def _pair(betas: str, gammas: str) -> tuple[Fraction, ...]:
    return _fractions(betas) + _fractions(gammas)


FEASIBLE_CASES: dict[str, FeasibleCase] = {
    case.name: case
    for case in (
        FeasibleCase(
            "I", _fractions("180, 120, 120, 120, 33.75"), (1, 2, 3, 4, 0),
            _pair("60, 60, 60, 105/4, 345/4", "60, 60, 60, 60, 15/2"),
            _pair("1545/28, 705/14, 285/7, 150/7, 4695/56", "3495/56, 1815/28, 975/14, 555/7, 345/28"),
        ),
        FeasibleCase(
            "II", _fractions("180, 120, 120, 105, 45"), (3, 1, 2, 4, 0),
            _pair("45, 60, 60, 30, 165/2", "135/2, 60, 60, 60, 15"),
            _pair("285/7, 360/7, 300/7, 180/7, 1125/14", "975/14, 450/7, 480/7, 540/7, 135/7"),
        ),
        FeasibleCase(
            "III", _fractions("180, 120, 120, 97.5, 46.875"), (3, 1, 2, 4, 0),
            _pair("75/2, 60, 60, 375/8, 90", "285/4, 60, 60, 435/8, 0"),
            _pair("1905/56, 1485/28, 645/14, 225/7, 9255/112", "8175/112, 3555/56, 1875/28, 1035/14, 825/56"),
        ),
        FeasibleCase(
            "IV", _fractions("180, 120, 120, 93.75, 48.75"), (3, 1, 2, 4, 0),
            _pair("135/4, 60, 60, 191/4, 179/2", "585/8, 60, 60, 439/8, 1"),
            _pair("855/28, 375/7, 330/7, 240/7, 4635/56", "4185/56, 885/14, 465/7, 510/7, 405/28"),
        ),
        FeasibleCase(
            "V", _fractions("180, 120, 120, 90, 52.5"), (3, 1, 2, 4, 0),
            _pair("30, 60, 60, 103/2, 179/2", "75, 60, 60, 53, 1"),
            _pair("375/14, 375/7, 330/7, 240/7, 2265/28", "2145/28, 885/14, 465/7, 510/7, 255/14"),
        ),
        FeasibleCase(
            "VI", _fractions("180, 120, 105, 93.75, 60"), (3, 2, 1, 4, 0),
            _pair("105/4, 45, 60, 195/4, 675/8", "615/8, 135/2, 60, 60, 45/4"),
            _pair("345/14, 585/14, 375/7, 330/7, 585/7", "2175/28, 1935/28, 885/14, 465/7, 90/7"),
        ),
        FeasibleCase(
            "VII", _fractions("180, 120, 90, 90, 90"), (2, 1, 3, 4, 0),
            _pair("15, 60, 60, 75, 165/2", "165/2, 60, 60, 30, 15"),
            _pair("15, 45, 30, 60, 75", "165/2, 135/2, 75, 60, 30"),
        ),
        FeasibleCase(
            "VIII", _fractions("180, 105, 97.5, 90, 90"), (3, 1, 2, 4, 0),
            _pair("75/4, 45, 60, 285/4, 645/8", "645/8, 135/2, 60, 75/2, 75/4"),
            _pair("75/4, 75/2, 45, 255/4, 615/8", "645/8, 285/4, 135/2, 105/2, 105/4"),
        ),
        FeasibleCase(
            "IX", _fractions("180, 105, 93.75, 93.75, 90"), (4, 1, 2, 3, 0),
            _pair("165/8, 45, 60, 585/8, 1275/16", "1275/16, 135/2, 60, 135/4, 165/8"),
            _pair("165/8, 165/4, 105/2, 555/8, 1245/16", "1275/16, 555/8, 255/4, 165/4, 195/8"),
        ),
        FeasibleCase(
            "X", _fractions("180, 105, 93.75, 91.875, 91.875"), (3, 1, 2, 4, 0),
            _pair("45/2, 45, 60, 585/8, 645/8", "315/4, 135/2, 60, 135/4, 75/4"),
            _pair("45/2, 165/4, 105/2, 555/8, 315/4", "315/4, 555/8, 255/4, 165/4, 45/2"),
        ),
        FeasibleCase(
            "XI", _fractions("180, 97.5, 97.5, 97.5, 90.9375"), (1, 2, 3, 4, 0),
            _pair("405/16, 75/2, 60, 285/4, 2565/32", "2475/32, 285/4, 60, 75/2, 315/16"),
            _pair("405/16, 285/8, 225/4, 555/8, 2535/32", "2475/32, 1155/16, 495/8, 165/4, 345/16"),
        ),
    )
}

# (case, coordinate index, printed value, stored value)
MISPRINTS: tuple[tuple[str, int, Fraction, Fraction], ...] = (
    ("XI", 4, Fraction(2365, 32), Fraction(2565, 32)),
)


def printed_feasible_case(name: str) -> FeasibleCase:
    """The feasible case with its x_plus exactly as printed (misprints restored)."""
    case = FEASIBLE_CASES[name]
    x_plus = list(case.x_plus)
    for row, index, printed, _ in MISPRINTS:
        if row == name:
            x_plus[index] = printed
    return FeasibleCase(case.name, case.phi, case.tau, tuple(x_plus), case.x_minus)


if __name__ == "__main__":
    print(f"{len(MAXIMAL_INFEASIBLE_VECTORS)} maximal infeasible vectors")
    for label, case in REMAINING_CASES.items():
        lo, hi = case.printed.sorted_pair()
        flag = " (printed reversed)" if case.printed.transposed else ""
        print(f"  ({label}) {tuple(str(v) for v in case.sequence)}: [{float(lo)}, {float(hi)}]{flag}")
    for name, case in FEASIBLE_CASES.items():
        print(f"  {name}: tau={case.tau}")
