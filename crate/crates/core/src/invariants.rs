//! Exact characteristic-number algebra on (e, sigma) and the geography
//! region predicates in (c1^2, chi_h) coordinates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Euler characteristic and signature of a (possibly open or intermediate)
/// 4-manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharNumbers {
    pub e: i64,
    pub sigma: i64,
}

impl CharNumbers {
    pub const ZERO: CharNumbers = CharNumbers { e: 0, sigma: 0 };

    pub const fn new(e: i64, sigma: i64) -> Self {
        CharNumbers { e, sigma }
    }

    /// Constructor for closed symplectic targets: rejects odd parity.
    pub fn closed(e: i64, sigma: i64) -> Result<Self> {
        let x = CharNumbers { e, sigma };
        if x.symplectic_parity() {
            Ok(x)
        } else {
            Err(Error::ParityViolation { e, sigma })
        }
    }

    pub fn symplectic_parity(&self) -> bool {
        (self.e + self.sigma).rem_euclid(4) == 0
    }

    pub fn c1sq(&self) -> i64 {
        2 * self.e + 3 * self.sigma
    }

    /// Holomorphic Euler characteristic. Only meaningful with symplectic parity;
    /// returns `None` when e + sigma is not divisible by 4.
    pub fn chi_h(&self) -> Option<i64> {
        self.symplectic_parity().then(|| (self.e + self.sigma) / 4)
    }

    /// Labels (m, n) of the homeomorphism type m CP^2 # n (-CP^2) for a simply
    /// connected manifold with these numbers: b+ = m, b- = n.
    pub fn cp2_label(&self) -> (i64, i64) {
        let b2 = self.e - 2;
        ((b2 + self.sigma) / 2, (b2 - self.sigma) / 2)
    }

    /// Inverse of [`cp2_label`](Self::cp2_label): e = 2 + m + n, sigma = m - n.
    pub fn from_cp2_label(m: i64, n: i64) -> Self {
        CharNumbers { e: 2 + m + n, sigma: m - n }
    }
}

impl std::ops::Add for CharNumbers {
    type Output = CharNumbers;
    fn add(self, rhs: CharNumbers) -> CharNumbers {
        CharNumbers { e: self.e + rhs.e, sigma: self.sigma + rhs.sigma }
    }
}

impl std::fmt::Display for CharNumbers {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(e={}, sigma={})", self.e, self.sigma)
    }
}

pub fn char_from_e_sigma(e: i64, sigma: i64) -> CharNumbers {
    CharNumbers::new(e, sigma)
}

/// sigma = c - 8 chi, e = 4 chi - sigma.
pub fn char_from_c_chi(c: i64, chi: i64) -> CharNumbers {
    let sigma = c - 8 * chi;
    CharNumbers::new(4 * chi - sigma, sigma)
}

pub fn in_geography_cone(c: i64, chi: i64) -> bool {
    0 <= c && c <= 8 * chi - 2
}

/// Pairs inside the cone for which no minimal construction is known.
pub const EXCEPTIONS: [(i64, i64); 4] = [(5, 1), (9, 2), (11, 2), (13, 2)];

pub fn is_exception(c: i64, chi: i64) -> bool {
    EXCEPTIONS.contains(&(c, chi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn e_sigma_examples() {
        let b = char_from_e_sigma(6, -2);
        assert_eq!((b.c1sq(), b.chi_h()), (6, Some(1)));
        let z = char_from_e_sigma(0, 0);
        assert_eq!((z.c1sq(), z.chi_h()), (0, Some(0)));
        let x = char_from_e_sigma(22, -14);
        assert_eq!((x.c1sq(), x.chi_h()), (2, Some(2)));
        assert_eq!(x.cp2_label(), (3, 17));
    }

    #[test]
    fn parity_is_a_flag_not_an_error() {
        let open = char_from_e_sigma(-4, 1);
        assert!(!open.symplectic_parity());
        assert_eq!(open.chi_h(), None);
        assert!(CharNumbers::closed(-4, 1).is_err());
        assert!(CharNumbers::closed(6, -2).is_ok());
    }

    #[test]
    fn c_chi_examples() {
        assert_eq!(char_from_c_chi(78, 11), CharNumbers::new(54, -10));
        assert_eq!(char_from_c_chi(0, 0), CharNumbers::new(0, 0));
        assert_eq!(char_from_c_chi(364, 45), CharNumbers::new(176, 4));
    }

    #[test]
    fn cone_and_exceptions() {
        assert!(in_geography_cone(2, 2));
        assert!(!in_geography_cone(8 * 3 - 1, 3));
        assert!(in_geography_cone(0, 1));
        assert!(is_exception(5, 1));
        assert!(is_exception(11, 2));
        assert!(!is_exception(7, 2));
        for (c, chi) in EXCEPTIONS {
            assert!(in_geography_cone(c, chi));
        }
    }

    #[test]
    fn cp2_label_round_trip() {
        let x = CharNumbers::from_cp2_label(1, 4);
        assert_eq!(x, CharNumbers::new(7, -3));
        assert_eq!((x.c1sq(), x.chi_h()), (5, Some(1)));
        assert_eq!(x.cp2_label(), (1, 4));
    }

    proptest! {
        #[test]
        fn c_chi_round_trip(e in -500i64..500, k in -200i64..200) {
            // sigma chosen so that e + sigma = 4k
            let x = CharNumbers::new(e, 4 * k - e);
            prop_assert!(x.symplectic_parity());
            let back = char_from_c_chi(x.c1sq(), x.chi_h().unwrap());
            prop_assert_eq!(back, x);
        }

        #[test]
        fn cone_monotone_in_chi(c in -10i64..200, chi in -5i64..30) {
            if in_geography_cone(c, chi) {
                prop_assert!(in_geography_cone(c, chi + 1));
            }
        }

        #[test]
        fn derived_numbers_exact(c in 0i64..400, chi in 0i64..60) {
            let x = char_from_c_chi(c, chi);
            prop_assert_eq!(x.c1sq(), c);
            prop_assert_eq!(x.chi_h(), Some(chi));
        }
    }
}
