use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Block counts of an even-c construction: `b` copies of B (one of them
/// inside B_g when `g > 0`), `c` of C, `d` of D, genus `g`, and `k` for the
/// elliptic piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Decomposition {
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub g: u32,
    pub k: u32,
}

impl Decomposition {
    pub fn m(&self) -> i64 {
        i64::from(self.d) + 2 * i64::from(self.c) + 3 * i64::from(self.b) + 4 * i64::from(self.g)
    }

    pub fn n(&self) -> i64 {
        i64::from(self.b + self.c + self.d + self.k + self.g)
    }

    /// No B, C or D pieces: only the elliptic part.
    pub fn is_blockless(&self) -> bool {
        self.b + self.c + self.d == 0
    }

    pub fn tuple(&self) -> (u32, u32, u32, u32, u32) {
        (self.b, self.c, self.d, self.g, self.k)
    }

    /// (e, sigma) implied by the block counts.
    pub fn char_numbers(&self) -> (i64, i64) {
        let (b, c, d, g, k) =
            (i64::from(self.b), i64::from(self.c), i64::from(self.d), i64::from(self.g), i64::from(self.k));
        (6 * b + 4 * g + 8 * c + 10 * d + 12 * k, -2 * b - 4 * c - 6 * d - 8 * k)
    }
}

impl std::fmt::Display for Decomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "b={} c={} d={} g={} k={}", self.b, self.c, self.d, self.g, self.k)
    }
}

/// Nonnegative (b, c, d, g, k) with m = d + 2c + 3b + 4g, n = b + c + d + k + g
/// and b >= 1 whenever g > 0, for 0 <= m <= 4n - 1.
pub fn arith_decompose(m: i64, n: i64) -> Result<Decomposition> {
    if n < 1 || m < 0 || m > 4 * n - 1 {
        return Err(Error::Precondition(format!("need n >= 1 and 0 <= m <= 4n - 1, got (m, n) = ({m}, {n})")));
    }
    let tuple = if m == 0 {
        (0, 0, 0, 0, n)
    } else {
        let l = (n - m).max(0);
        let nl = n - l;
        let r = 4 * nl - m - 1;
        let (s, delta) = (r / 3, r % 3);
        match (delta, s) {
            (0, _) => (1, 0, s, nl - s - 1, l),
            (1, s) if s >= 1 => (1, 0, s - 1, nl - s - 1, l + 1),
            (1, _) if nl >= 2 => (2, 0, 0, nl - 2, l),
            (1, _) => (0, 1, 0, 0, l),
            (2, s) if s >= 2 => (1, 0, s - 2, nl - s - 1, l + 2),
            (2, 1) if nl >= 3 => (2, 0, 0, nl - 3, l + 1),
            (2, 1) => (0, 1, 0, 0, l + 1),
            (2, _) if nl >= 2 => (1, 1, 0, nl - 2, l),
            _ => (0, 0, 1, 0, l),
        }
    };
    let (b, c, d, g, k) = tuple;
    let conv = |v: i64| u32::try_from(v).expect("decomposition entries are nonnegative");
    let dec = Decomposition { b: conv(b), c: conv(c), d: conv(d), g: conv(g), k: conv(k) };
    assert!(dec.m() == m && dec.n() == n && (dec.g == 0 || dec.b >= 1), "decomposition of ({m}, {n}) failed: {dec}");
    Ok(dec)
}
