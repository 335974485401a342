//! Closed-form Turán values for paths and linear forests.
//!
//! Two bracket functions do most of the work here. The clique-sum bracket
//! `[n,m,l]` is `C(m-1,2) + t*C(l-1,2) + C(r,2)` for the unique decomposition
//! `n = (m-1) + t(l-1) + r` with `0 <= r < l-1`, and plain `C(n,2)` when
//! `n <= m-1`. The star-join bracket `[n,s]` is `C(s-1,2) + (s-1)(n-s+1)`,
//! the edge count of `K_{s-1}` joined to an independent set.
//!
//! All arithmetic is exact in integers; `C(0,2) = C(1,2) = 0`.

use crate::error::{Error, Result};
use crate::forest::PathForest;
use std::fmt;

/// Upper bound on formula arguments, so every intermediate fits in `u64`.
const MAX_FORMULA_N: u64 = 1_000_000;

/// `a * (a-1) / 2`.
#[inline]
pub fn choose2(a: u64) -> u64 {
    debug_assert!(a <= u32::MAX as u64);
    a * a.saturating_sub(1) / 2
}

fn check_size(label: &str, v: u64) -> Result<()> {
    if v > MAX_FORMULA_N {
        Err(Error::InvalidArgument(format!(
            "{label}={v} exceeds supported range {MAX_FORMULA_N}"
        )))
    } else {
        Ok(())
    }
}

/// The decomposition behind the clique-sum bracket.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BracketDecomposition {
    pub n: u64,
    pub m: u64,
    pub ell: u64,
    /// Quotient of `n - (m-1)` by `ell - 1`; 0 in the small case.
    pub t: u64,
    /// Remainder, `0 <= r < ell - 1`; 0 in the small case.
    pub r: u64,
    /// True when `n <= m-1`, where the bracket is just `C(n,2)`.
    pub small_case: bool,
}

/// Decomposes `n = (m-1) + t(ell-1) + r`. Requires `m >= ell >= 3`.
pub fn bracket_decompose(n: u64, m: u64, ell: u64) -> Result<BracketDecomposition> {
    if ell < 3 || m < ell {
        return Err(Error::InvalidArgument(format!(
            "bracket needs m >= ell >= 3, got m={m}, ell={ell}"
        )));
    }
    check_size("n", n)?;
    if n <= m - 1 {
        return Ok(BracketDecomposition {
            n,
            m,
            ell,
            t: 0,
            r: 0,
            small_case: true,
        });
    }
    let rest = n - (m - 1);
    Ok(BracketDecomposition {
        n,
        m,
        ell,
        t: rest / (ell - 1),
        r: rest % (ell - 1),
        small_case: false,
    })
}

/// The clique-sum bracket `[n, m, ell]`.
pub fn bracket_nml(n: u64, m: u64, ell: u64) -> Result<u64> {
    let d = bracket_decompose(n, m, ell)?;
    Ok(if d.small_case {
        choose2(n)
    } else {
        choose2(m - 1) + d.t * choose2(ell - 1) + choose2(d.r)
    })
}

/// The star-join bracket `[n, s] = C(s-1,2) + (s-1)(n-s+1)`. Requires `n >= s >= 1`.
pub fn bracket_star(n: u64, s: u64) -> Result<u64> {
    if s < 1 {
        return Err(Error::InvalidArgument("bracket [n,s] needs s >= 1".into()));
    }
    check_size("n", n)?;
    if n < s {
        return Err(Error::Domain(format!("bracket [n,s] needs n >= s, got n={n}, s={s}")));
    }
    Ok(choose2(s - 1) + (s - 1) * (n - s + 1))
}

/// `[n, s]` with `s = sum floor(k_i/2)` taken from a forest.
pub fn bracket_ns(n: u64, forest: &PathForest) -> Result<u64> {
    bracket_star(n, forest.half_sum() as u64)
}

/// Which term of a Turán maximum wins.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Branch {
    /// The clique-sum bracket over the first `paths` path orders.
    CliqueSum { paths: usize },
    /// The star-join bracket (plus its parity constant where one applies).
    StarJoin,
    /// The `5n - 14` form of the star-join term in the 2P7 value.
    Linear,
    /// The `C(k-2,2) + (n-k+2)` term for connected path-free hosts.
    CliqueExt,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::CliqueSum { paths } => write!(f, "clique-sum(j={paths})"),
            Branch::StarJoin => write!(f, "star-join"),
            Branch::Linear => write!(f, "linear"),
            Branch::CliqueExt => write!(f, "clique-ext"),
        }
    }
}

/// A computed extremal value together with the argument of the max.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TuranValue {
    pub value: u64,
    /// First term attaining the max, in the evaluator's term order.
    pub argmax: Branch,
    /// Set when two or more terms attain the max.
    pub tie: bool,
}

fn max_of_terms(terms: &[(Branch, u64)]) -> TuranValue {
    debug_assert!(!terms.is_empty());
    let value = terms.iter().map(|&(_, v)| v).max().unwrap();
    let winners: Vec<Branch> = terms
        .iter()
        .filter(|&&(_, v)| v == value)
        .map(|&(b, _)| b)
        .collect();
    TuranValue {
        value,
        argmax: winners[0],
        tie: winners.len() > 1,
    }
}

/// `ex(n, P_k) = [n, k, k]`. For `k >= 3` the result is cross-checked against
/// the `(n(k-2) + r(r-k+1))/2` closed form with `r = n mod (k-1)`.
pub fn ex_path(n: u64, k: u64) -> Result<TuranValue> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("ex_path needs k >= 2, got {k}")));
    }
    check_size("n", n)?;
    if k == 2 {
        // P2-free means edgeless.
        return Ok(TuranValue {
            value: 0,
            argmax: Branch::CliqueSum { paths: 1 },
            tie: false,
        });
    }
    let value = bracket_nml(n, k, k)?;
    let kk = k - 1;
    let r = n % kk;
    let closed = (n as i128 * (kk - 1) as i128 + r as i128 * (r as i128 - kk as i128)) / 2;
    if closed != value as i128 {
        return Err(Error::Inconsistency(format!(
            "path bracket {value} disagrees with closed form {closed} at n={n}, k={k}"
        )));
    }
    Ok(TuranValue {
        value,
        argmax: Branch::CliqueSum { paths: 1 },
        tie: false,
    })
}

/// Largest edge count of a connected P_k-free graph:
/// `max{ C(k-2,2) + (n-k+2), [n, floor(k/2)] + c }`, `c = k mod 2`.
pub fn ex_connected_path(n: u64, k: u64) -> Result<TuranValue> {
    if k < 4 || n < k {
        return Err(Error::Domain(format!(
            "connected bound needs n >= k >= 4, got n={n}, k={k}"
        )));
    }
    check_size("n", n)?;
    let clique_ext = choose2(k - 2) + (n - k + 2);
    let star = bracket_star(n, k / 2)? + k % 2;
    Ok(max_of_terms(&[
        (Branch::CliqueExt, clique_ext),
        (Branch::StarJoin, star),
    ]))
}

/// Threshold above which the large-n value for `k` disjoint `P_ell` is known
/// to hold: `2*ell + 2*k*ell*(ceil(ell/2)+1)*C(ell, floor(ell/2))`.
pub fn kpl_threshold(k: u64, ell: u64) -> Result<u128> {
    check_size("k", k)?;
    check_size("ell", ell)?;
    let mut binom: u128 = 1;
    for i in 1..=(ell / 2) as u128 {
        binom = binom
            .checked_mul(ell as u128 - i + 1)
            .ok_or(Error::Overflow("kpl_threshold"))?
            / i;
    }
    let factor = 2u128 * k as u128 * ell as u128 * (ell.div_ceil(2) as u128 + 1);
    factor
        .checked_mul(binom)
        .and_then(|v| v.checked_add(2 * ell as u128))
        .ok_or(Error::Overflow("kpl_threshold"))
}

/// A large-n Turán value plus the range where it is guaranteed.
#[derive(Clone, Debug)]
pub struct KplValue {
    pub turan: TuranValue,
    pub threshold: u128,
    /// True when `n` is at or above the threshold.
    pub valid_for_n: bool,
}

/// The large-n value for `k` disjoint copies of `P_ell`:
/// `[n, k*floor(ell/2)] + c` with `c = ell mod 2`.
pub fn ex_kpl_large_n(n: u64, k: u64, ell: u64) -> Result<KplValue> {
    if k < 2 || ell < 4 {
        return Err(Error::Domain(format!(
            "large-n form needs k >= 2 and ell >= 4, got k={k}, ell={ell}"
        )));
    }
    let s = k * (ell / 2);
    let value = bracket_star(n, s)? + ell % 2;
    let threshold = kpl_threshold(k, ell)?;
    Ok(KplValue {
        turan: TuranValue {
            value,
            argmax: Branch::StarJoin,
            tie: false,
        },
        threshold,
        valid_for_n: n as u128 >= threshold,
    })
}

/// Evaluation mode for [`ex_forest`]: the proven statement for forests with at
/// most one odd order, or the conjectured general form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ForestMode {
    Theorem7,
    Conjecture,
}

/// Turán value of a linear forest as a max of clique-sum brackets plus the
/// star-join term:
/// `max{ [n,k1,k1], [n,k1+k2,k2], ..., [n, sum k_i, k_m], [n, sum floor(k_i/2)] (+c) }`.
///
/// In `Theorem7` mode (at most one odd order, all orders >= 3, `n >= sum k_i`)
/// the star term carries no constant and the value is exact. In `Conjecture`
/// mode (`k_1 > 3`, all orders >= 3) the star term adds `c = 1` when every
/// order is odd; callers should label those values as conjectural.
pub fn ex_forest(n: u64, forest: &PathForest, mode: ForestMode) -> Result<TuranValue> {
    let orders = forest.orders();
    if let Some(&k) = orders.iter().find(|&&k| k < 3) {
        return Err(Error::Domain(format!(
            "forest evaluator needs every order >= 3, got {k}"
        )));
    }
    let c = match mode {
        ForestMode::Theorem7 => {
            if forest.odd_count() > 1 {
                return Err(Error::Domain(format!(
                    "theorem-7 mode needs at most one odd order, got {}",
                    forest.odd_count()
                )));
            }
            if n < forest.total_vertices() as u64 {
                return Err(Error::Domain(format!(
                    "theorem-7 mode needs n >= sum of orders = {}, got n={n}",
                    forest.total_vertices()
                )));
            }
            0
        }
        ForestMode::Conjecture => {
            if orders[0] <= 3 {
                return Err(Error::Domain(
                    "conjecture mode needs the largest order k1 > 3".into(),
                ));
            }
            if n < forest.half_sum() as u64 {
                return Err(Error::Domain(format!(
                    "conjecture mode needs n >= sum floor(k_i/2) = {}, got n={n}",
                    forest.half_sum()
                )));
            }
            u64::from(forest.all_odd())
        }
    };
    let mut terms = Vec::with_capacity(orders.len() + 1);
    let mut prefix = 0u64;
    for (j, &k) in orders.iter().enumerate() {
        prefix += k as u64;
        terms.push((
            Branch::CliqueSum { paths: j + 1 },
            bracket_nml(n, prefix, k as u64)?,
        ));
    }
    terms.push((Branch::StarJoin, bracket_ns(n, forest)? + c));
    Ok(max_of_terms(&terms))
}

/// `ex(n, 2P_7) = max{ [n,14,7], 5n - 14 }` for `n >= 14`.
pub fn ex_2p7(n: u64) -> Result<TuranValue> {
    if n < 14 {
        return Err(Error::Domain(format!("2P7 value needs n >= 14, got {n}")));
    }
    check_size("n", n)?;
    let bracket = bracket_nml(n, 14, 7)?;
    let linear = 5 * n - 14;
    Ok(max_of_terms(&[
        (Branch::CliqueSum { paths: 2 }, bracket),
        (Branch::Linear, linear),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_nml_values() {
        assert_eq!(bracket_nml(13, 14, 7).unwrap(), 78); // small case: C(13,2)
        assert_eq!(bracket_nml(22, 14, 7).unwrap(), 96); // t=1, r=3: 78+15+3
        assert_eq!(bracket_nml(9, 7, 7).unwrap(), 18); // t=0, r=3: 15+3
        let d = bracket_decompose(22, 14, 7).unwrap();
        assert_eq!((d.t, d.r, d.small_case), (1, 3, false));
        assert_eq!(22, (d.m - 1) + d.t * (d.ell - 1) + d.r);
    }

    #[test]
    fn bracket_argument_errors() {
        assert!(bracket_nml(10, 7, 2).is_err());
        assert!(bracket_nml(10, 3, 7).is_err());
        assert!(matches!(bracket_star(5, 6), Err(Error::Domain(_))));
    }

    #[test]
    fn bracket_star_values() {
        let f77 = PathForest::new([7, 7]).unwrap();
        assert_eq!(bracket_ns(7, &f77).unwrap(), 20); // s=6: 10 + 5*2
        let f43 = PathForest::new([4, 3]).unwrap();
        assert_eq!(bracket_ns(7, &f43).unwrap(), 11); // s=3: 1 + 2*5

        // For [7,7] the star bracket plus one is exactly the 5n-14 line.
        for n in 7..=60 {
            assert_eq!(bracket_ns(n, &f77).unwrap() + 1, 5 * n - 14);
        }
    }

    #[test]
    fn ex_path_values() {
        assert_eq!(ex_path(7, 7).unwrap().value, 15); // K6 u K1
        assert_eq!(ex_path(6, 4).unwrap().value, 6); // 2K3
        assert_eq!(ex_path(10, 2).unwrap().value, 0);
    }

    #[test]
    fn ex_path_closed_form_agreement() {
        // Corollary form (n(k-1)+r(r-k))/2 for ex(n, P_{k+1}), r = n mod k.
        for k in 2u64..=12 {
            for n in k + 1..=60 {
                let r = n % k;
                let closed = (n as i128 * (k - 1) as i128 + r as i128 * (r as i128 - k as i128)) / 2;
                assert_eq!(bracket_nml(n, k + 1, k + 1).unwrap() as i128, closed);
            }
        }
    }

    #[test]
    fn ex_path_degree_bound_and_equality() {
        // e <= (k-2)n/2 with equality exactly when (k-1) | n.
        for k in 2u64..=12 {
            for n in k..=60 {
                let v = ex_path(n, k).unwrap().value;
                assert!(2 * v <= (k - 2) * n, "bound fails at n={n}, k={k}");
                let divides = n % (k - 1) == 0;
                assert_eq!(2 * v == (k - 2) * n, divides, "equality case at n={n}, k={k}");
            }
        }
    }

    #[test]
    fn ex_connected_path_values() {
        let a = ex_connected_path(14, 13).unwrap();
        assert_eq!((a.value, a.argmax), (58, Branch::CliqueExt));
        let b = ex_connected_path(13, 13).unwrap();
        assert_eq!(b.value, 57);
        assert!(ex_connected_path(10, 13).is_err());
        assert!(ex_connected_path(5, 3).is_err());
    }

    #[test]
    fn kpl_threshold_and_value() {
        assert_eq!(kpl_threshold(2, 7).unwrap(), 4914); // 14 + 28*5*35
        let v = ex_kpl_large_n(5000, 2, 7).unwrap();
        assert_eq!(v.turan.value, 24986); // 5*5000 - 14
        assert!(v.valid_for_n);
        let w = ex_kpl_large_n(100, 2, 7).unwrap();
        assert!(!w.valid_for_n);
        assert_eq!(w.turan.value, 5 * 100 - 14);
    }

    #[test]
    fn kpl_matches_2p7_from_22() {
        for n in 22..=200 {
            let kpl = ex_kpl_large_n(n, 2, 7).unwrap().turan.value;
            assert_eq!(kpl, ex_2p7(n).unwrap().value);
        }
    }

    #[test]
    fn ex_forest_values() {
        let f43 = PathForest::new([4, 3]).unwrap();
        let v = ex_forest(7, &f43, ForestMode::Theorem7).unwrap();
        assert_eq!(v.value, 15); // max{6, 15, 11}
        assert_eq!(v.argmax, Branch::CliqueSum { paths: 2 });

        let f44 = PathForest::new([4, 4]).unwrap();
        let w = ex_forest(8, &f44, ForestMode::Theorem7).unwrap();
        assert_eq!(w.value, 21); // max{7, 21, 18}
    }

    #[test]
    fn ex_forest_mode_preconditions() {
        let f77 = PathForest::new([7, 7]).unwrap();
        assert!(matches!(
            ex_forest(20, &f77, ForestMode::Theorem7),
            Err(Error::Domain(_))
        )); // two odd orders
        let f33 = PathForest::new([3, 3]).unwrap();
        assert!(matches!(
            ex_forest(20, &f33, ForestMode::Conjecture),
            Err(Error::Domain(_))
        )); // k1 = 3
        let f32 = PathForest::new([3, 2]).unwrap();
        assert!(ex_forest(20, &f32, ForestMode::Theorem7).is_err()); // order 2
        let f43 = PathForest::new([4, 3]).unwrap();
        assert!(ex_forest(6, &f43, ForestMode::Theorem7).is_err()); // n < 7
    }

    #[test]
    fn conjecture_for_7_7_matches_2p7() {
        let f77 = PathForest::new([7, 7]).unwrap();
        for n in 14..=200 {
            let c = ex_forest(n, &f77, ForestMode::Conjecture).unwrap();
            let t = ex_2p7(n).unwrap();
            assert_eq!(c.value, t.value, "mismatch at n={n}");
        }
    }

    #[test]
    fn ex_2p7_crossover() {
        let a = ex_2p7(14).unwrap();
        assert_eq!((a.value, a.argmax, a.tie), (78, Branch::CliqueSum { paths: 2 }, false));
        let b = ex_2p7(22).unwrap();
        assert_eq!((b.value, b.tie), (96, true));
        let c = ex_2p7(30).unwrap();
        assert_eq!((c.value, c.argmax, c.tie), (136, Branch::Linear, false));
        assert!(ex_2p7(13).is_err());
    }

    #[test]
    fn lemma_grids_spot_checks() {
        // Full grids run in the acceptance suite; keep a fast slice here.
        for k2 in 3u64..=5 {
            for k1 in k2..=5 {
                for n1 in k1..=25 {
                    for n2 in 0..=25 {
                        let lhs = bracket_nml(n1, k1 + k2, k2).unwrap()
                            + bracket_nml(n2, k2, k2).unwrap();
                        let rhs = bracket_nml(n1 + n2, k1 + k2, k2).unwrap();
                        assert!(lhs <= rhs, "lemma 1 fails at {k1},{k2},{n1},{n2}");
                    }
                }
                let s = k1 / 2 + k2 / 2;
                for n1 in k1 + k2..=30 {
                    for n2 in 1..=(40 - n1) {
                        let lhs =
                            bracket_star(n1, s).unwrap() + bracket_nml(n2, k2, k2).unwrap();
                        let rhs = bracket_star(n1 + n2, s).unwrap();
                        assert!(lhs < rhs, "lemma 2 fails at {k1},{k2},{n1},{n2}");
                    }
                }
            }
        }
    }

    #[test]
    fn abstract_closed_form_small_range() {
        for n in 14u64..=60 {
            let r = (n - 13) % 6;
            let rr = r as i128;
            let closed = (5 * n as i128 + 91 + rr * (rr - 6)) / 2;
            assert_eq!(bracket_nml(n, 14, 7).unwrap() as i128, closed);
        }
    }
}
