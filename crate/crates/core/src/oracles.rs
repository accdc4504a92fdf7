//! Closed-form EOD answers for paths, cycles, grids and tori.
//!
//! Each oracle refuses inputs outside the domain its result is stated for;
//! callers fall back to the exact solver there.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleAnswer {
    pub value: bool,
    /// The result the answer rests on.
    pub source: &'static str,
}

impl fmt::Display for OracleAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.value, self.source)
    }
}

fn answer(value: bool, source: &'static str) -> Result<OracleAnswer> {
    Ok(OracleAnswer { value, source })
}

/// `P_n` is an EOD-graph iff `n mod 4 != 1`.
pub fn path_eod(n: usize) -> Result<OracleAnswer> {
    if n == 0 {
        return Err(Error::argument("path order must be at least 1"));
    }
    answer(n % 4 != 1, "paths: n mod 4 != 1")
}

/// `C_n` is an EOD-graph iff `n mod 4 = 0`.
pub fn cycle_eod(n: usize) -> Result<OracleAnswer> {
    if n < 3 {
        return Err(Error::argument(format!("cycle order must be at least 3, got {n}")));
    }
    answer(n % 4 == 0, "cycles: n mod 4 = 0")
}

/// `P_r □ P_t` for `t >= r >= 3`: EOD iff `r` is even and
/// `t mod (r+1)` is one of `1`, `r-2`, `r`.
pub fn grid_eod(r: usize, t: usize) -> Result<OracleAnswer> {
    if !(3 <= r && r <= t) {
        return Err(Error::Domain(format!(
            "grid result covers t >= r >= 3; got r={r}, t={t}"
        )));
    }
    let x = t % (r + 1);
    answer(r % 2 == 0 && (x == 1 || x == r - 2 || x == r), "grid theorem")
}

/// `C_r □ C_t` has an EOD-set parallel with respect to some factor iff both
/// `r` and `t` are multiples of 4.
pub fn torus_parallel_eod(r: usize, t: usize) -> Result<OracleAnswer> {
    if r < 3 || t < 3 {
        return Err(Error::argument(format!("cycle orders must be at least 3; got r={r}, t={t}")));
    }
    answer(r % 4 == 0 && t % 4 == 0, "parallel torus theorem")
}

/// `C_4 □ C_t` is an EOD-graph iff `t mod 4 = 0`.
pub fn c4_torus_eod(t: usize) -> Result<OracleAnswer> {
    if t < 4 {
        return Err(Error::Domain(format!("C4 torus result covers t >= 4; got {t}")));
    }
    answer(t % 4 == 0, "C4 torus proposition")
}

/// `C_r □ C_t` where a proven result decides it: no EOD-set when the smaller
/// cycle has order 3, 5, 6 or 7; the `C_4` case; and an EOD-set whenever both
/// orders are multiples of 4. Everything else is open.
pub fn torus_eod(r: usize, t: usize) -> Result<OracleAnswer> {
    if r < 3 || t < 3 {
        return Err(Error::argument(format!("cycle orders must be at least 3; got r={r}, t={t}")));
    }
    let (small, large) = (r.min(t), r.max(t));
    if matches!(small, 3 | 5 | 6 | 7) {
        return answer(false, "tori with a short cycle of order 3, 5, 6 or 7");
    }
    if small == 4 {
        return c4_torus_eod(large);
    }
    if small % 4 == 0 && large % 4 == 0 {
        return torus_parallel_eod(r, t);
    }
    Err(Error::Domain(format!("C_{r} □ C_{t} is not settled by a proven result")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths_and_cycles() {
        assert!(path_eod(4).unwrap().value);
        assert!(!path_eod(5).unwrap().value);
        assert!(path_eod(2).unwrap().value);
        assert!(cycle_eod(8).unwrap().value);
        assert!(!cycle_eod(6).unwrap().value);
        assert!(cycle_eod(4).unwrap().value);
        assert!(matches!(cycle_eod(2), Err(Error::Argument(_))));
    }

    #[test]
    fn grids() {
        assert!(grid_eod(4, 9).unwrap().value);
        assert!(!grid_eod(3, 7).unwrap().value);
        assert!(!grid_eod(4, 5).unwrap().value);
        assert!(matches!(grid_eod(2, 5), Err(Error::Domain(_))));
        assert!(matches!(grid_eod(5, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn tori() {
        assert!(torus_parallel_eod(4, 8).unwrap().value);
        assert!(!torus_parallel_eod(4, 6).unwrap().value);
        assert!(torus_parallel_eod(8, 12).unwrap().value);
        assert!(c4_torus_eod(8).unwrap().value);
        assert!(!c4_torus_eod(10).unwrap().value);
        assert!(c4_torus_eod(12).unwrap().value);
    }

    #[test]
    fn settled_tori() {
        for (r, t) in [(3, 3), (3, 4), (3, 5), (5, 5), (6, 6), (9, 7)] {
            assert!(!torus_eod(r, t).unwrap().value, "({r},{t})");
        }
        assert!(torus_eod(4, 8).unwrap().value);
        assert!(!torus_eod(10, 4).unwrap().value);
        assert!(torus_eod(8, 12).unwrap().value);
        assert!(matches!(torus_eod(9, 10), Err(Error::Domain(_))));
    }

    #[test]
    fn display() {
        assert_eq!(path_eod(5).unwrap().to_string(), "false (paths: n mod 4 != 1)");
    }
}
