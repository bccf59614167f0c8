use std::collections::{BTreeMap, BTreeSet};

use super::{FunctionTable, TableView};

/// The set of elements occurring an odd number of times in `tuple`.
pub fn oddsupp(tuple: &[u32]) -> BTreeSet<u32> {
    let mask = oddsupp_mask(tuple);
    (0..64).filter(|a| mask >> a & 1 == 1).collect()
}

/// `oddsupp` as a bit set over elements `0..64`.
pub fn oddsupp_mask(tuple: &[u32]) -> u64 {
    tuple.iter().fold(0, |acc, &a| acc ^ (1u64 << a))
}

/// The sets `S` of size `n, n-2, n-4, ...` over `A = 0..k`, as bit masks in
/// increasing order. These are exactly the values `oddsupp` takes on `A^n`.
pub fn admissible_oddsupp_sets(k: usize, n: usize) -> Vec<u64> {
    assert!(k <= 20, "subset enumeration limited to k <= 20");
    (0u64..1 << k)
        .filter(|s| {
            let size = s.count_ones() as usize;
            size <= n && (n - size).is_multiple_of(2)
        })
        .collect()
}

/// The function `f*` on oddsupp classes realized in the defined domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddSuppProfile {
    classes: BTreeMap<u64, u32>,
}

impl OddSuppProfile {
    /// Value of `f*` at a set given as a bit mask.
    pub fn get_mask(&self, mask: u64) -> Option<u32> {
        self.classes.get(&mask).copied()
    }

    pub fn get(&self, set: &BTreeSet<u32>) -> Option<u32> {
        self.get_mask(set.iter().fold(0, |acc, &a| acc | 1 << a))
    }

    /// `(set, value)` pairs ordered by bit mask.
    pub fn entries(&self) -> impl Iterator<Item = (BTreeSet<u32>, u32)> + '_ {
        self.classes
            .iter()
            .map(|(&m, &v)| ((0..64).filter(|a| m >> a & 1 == 1).collect(), v))
    }

    pub fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.classes.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Decides whether the table factors through `oddsupp` on its defined domain
/// by checking that each oddsupp class carries a single value.
pub fn is_determined_by_oddsupp<T: TableView>(t: &T) -> Option<OddSuppProfile> {
    let (k, n) = (t.domain_size(), t.arity());
    let len = k.pow(n as u32);
    let mut classes = BTreeMap::new();
    let mut tuple = vec![0u32; n];
    for idx in 0..len {
        if let Some(v) = t.value(idx) {
            let mask = oddsupp_mask(&tuple);
            match classes.insert(mask, v) {
                Some(prev) if prev != v => return None,
                _ => {}
            }
        }
        super::advance(&mut tuple, k as u32);
    }
    Some(OddSuppProfile { classes })
}

/// Oddsupp determination via the two-condition characterization: total
/// symmetry, and `f_{2<-1}` not depending on `x_1`.
pub fn fact_determined_by_oddsupp(t: &FunctionTable) -> bool {
    let n = t.n();
    if n <= 1 {
        return true;
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let symmetric = [swap, cycle]
        .iter()
        .all(|sigma| t.simple_minor(sigma, n).expect("valid permutation") == *t);
    symmetric
        && !t
            .identification_minor(1, 0)
            .expect("n >= 2")
            .essential_variables()
            .contains(&0)
}
