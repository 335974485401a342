//! Linear forests: multisets of path orders, the forbidden patterns
//! throughout this crate.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// A disjoint union of paths `P_{k_1} u ... u P_{k_m}`, stored as orders
/// (vertex counts) sorted non-increasing, each at least 2.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PathForest {
    orders: Vec<u32>,
}

impl PathForest {
    /// Builds a forest from path orders in any order. Rejects empty input and
    /// orders below 2 (a path needs at least one edge... a `P_2`).
    pub fn new<I: IntoIterator<Item = u32>>(orders: I) -> Result<PathForest> {
        let mut orders: Vec<u32> = orders.into_iter().collect();
        if orders.is_empty() {
            return Err(Error::InvalidArgument("forest needs at least one path".into()));
        }
        if let Some(&k) = orders.iter().find(|&&k| k < 2) {
            return Err(Error::InvalidArgument(format!(
                "path order {k} < 2 is not a path"
            )));
        }
        orders.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PathForest { orders })
    }

    pub fn single(k: u32) -> Result<PathForest> {
        PathForest::new([k])
    }

    /// Orders, sorted non-increasing.
    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn path_count(&self) -> usize {
        self.orders.len()
    }

    /// Total vertex demand `sum k_i`.
    pub fn total_vertices(&self) -> u32 {
        self.orders.iter().sum()
    }

    /// `sum floor(k_i / 2)`, the `s` of the star-join bound.
    pub fn half_sum(&self) -> u32 {
        self.orders.iter().map(|k| k / 2).sum()
    }

    pub fn all_odd(&self) -> bool {
        self.orders.iter().all(|k| k % 2 == 1)
    }

    pub fn odd_count(&self) -> usize {
        self.orders.iter().filter(|&&k| k % 2 == 1).count()
    }
}

impl fmt::Display for PathForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.orders.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl FromStr for PathForest {
    type Err = Error;

    /// Parses `"k1,k2,..."`. Duplicates allowed; sorted internally.
    fn from_str(s: &str) -> Result<PathForest> {
        let orders: Vec<u32> = s
            .split(',')
            .map(|p| {
                p.trim().parse::<u32>().map_err(|_| {
                    Error::InvalidArgument(format!("bad path order {:?} in forest", p.trim()))
                })
            })
            .collect::<Result<_>>()?;
        PathForest::new(orders)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_are_sorted_non_increasing() {
        let f = PathForest::new([3, 7, 4]).unwrap();
        assert_eq!(f.orders(), &[7, 4, 3]);
        assert_eq!(f.total_vertices(), 14);
        assert_eq!(f.half_sum(), 3 + 2 + 1);
    }

    #[test]
    fn parses_from_string() {
        let f: PathForest = "7,7".parse().unwrap();
        assert_eq!(f.orders(), &[7, 7]);
        assert!(f.all_odd());
        assert!("7,1".parse::<PathForest>().is_err());
        assert!("".parse::<PathForest>().is_err());
        assert!("7,x".parse::<PathForest>().is_err());
    }

    #[test]
    fn odd_counting() {
        assert_eq!(PathForest::new([4, 3]).unwrap().odd_count(), 1);
        assert!(!PathForest::new([4, 4]).unwrap().all_odd());
        assert!(PathForest::new([7, 7]).unwrap().all_odd());
    }
}
