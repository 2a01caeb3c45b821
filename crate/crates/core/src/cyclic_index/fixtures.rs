//! The specific sign matrices the order-4 and order-8 results revolve
//! around.

use super::SkewSignMatrix;
use crate::tournament::Tournament;

fn parse(rows: &[&str]) -> SkewSignMatrix {
    SkewSignMatrix::from_row_strings(rows).expect("fixture is a valid sign matrix")
}

/// `D_4`, cyclic index 8.
pub fn d4() -> SkewSignMatrix {
    SkewSignMatrix::from_fn(4, |_, _| true).unwrap()
}

/// The other order-4 class with first row `+1`; cyclic index -24.
pub fn trace4_alternative() -> SkewSignMatrix {
    parse(&["0+++", "-0+-", "--0+", "-+-0"])
}

/// `D_8`, cyclic index 2176.
pub fn d8() -> SkewSignMatrix {
    SkewSignMatrix::from_fn(8, |_, _| true).unwrap()
}

/// The second order-8 maximizer, not sign-equivalent to `D_8`.
pub fn d8_prime() -> SkewSignMatrix {
    parse(&[
        "0+++ ++++",
        "-0+- ++++",
        "--0- ++++",
        "-++0 ----",
        "---+ 0++-",
        "---+ -0++",
        "---+ --0+",
        "---+ +--0",
    ])
}

/// A sign-equivalent form of `D'_8` whose tournament is two copies of C^4
/// with every edge directed from the first copy to the second.
pub fn d8_double_prime() -> SkewSignMatrix {
    parse(&[
        "0++- ++++",
        "-0++ ++++",
        "--0+ ++++",
        "+--0 ++++",
        "---- 0++-",
        "---- -0++",
        "---- --0+",
        "---- +--0",
    ])
}

/// The 8-vertex tournament with tournament matrix `(J_8 + D''_8) / 2`.
pub fn two_c4_tournament() -> Tournament {
    d8_double_prime().to_tournament()
}

#[derive(Debug, Clone)]
pub struct Fixtures {
    pub d4: SkewSignMatrix,
    pub d8: SkewSignMatrix,
    pub d8_prime: SkewSignMatrix,
    pub d8_double_prime: SkewSignMatrix,
    pub two_c4_tournament: Tournament,
}

pub fn fixtures() -> Fixtures {
    Fixtures {
        d4: d4(),
        d8: d8(),
        d8_prime: d8_prime(),
        d8_double_prime: d8_double_prime(),
        two_c4_tournament: two_c4_tournament(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::four_profile;

    #[test]
    fn displayed_rows() {
        let f = fixtures();
        assert_eq!(f.d8_prime.row_strings()[0], "0+++++++");
        assert_eq!(f.d8_prime.row_strings()[3], "-++0----");
        // the lower-right block of D''_8 repeats the C^4 pattern of the upper-left one
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(f.d8_double_prime.get(i + 4, j + 4), f.d8_double_prime.get(i, j));
            }
        }
    }

    #[test]
    fn two_c4_structure() {
        let t = two_c4_tournament();
        for i in 0..4 {
            for j in 4..8 {
                assert!(t.beats(i, j));
            }
        }
        // both halves are Hamiltonian 4-vertex tournaments
        for half in [[0, 1, 2, 3], [4, 5, 6, 7]] {
            let sub = t.induced(&half).unwrap();
            assert_eq!(four_profile(&sub).unwrap().c4, 1);
        }
        assert!(four_profile(&t).unwrap().c4 >= 2);
    }
}
