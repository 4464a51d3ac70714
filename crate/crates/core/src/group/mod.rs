//! Finite groups materialized as Cayley tables.
//!
//! Every group stores its identity at index 0. Cochains, monomials and the
//! exponent machinery only ever talk to groups through [`GroupTable`] lookups.

mod build;
mod builtin;
mod subgroup;

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

pub use build::{direct_product, from_permutations, from_permutations_capped, make_cyclic, quotient, DEFAULT_CLOSURE_CAP};
pub use builtin::{builtin_group, cyclic_quotients, BUILTIN_GROUPS};
pub use subgroup::{is_exact_factorization, Subgroup};

/// Index of an element inside one particular [`GroupTable`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct ElemId(pub usize);

impl ElemId {
    pub const IDENTITY: ElemId = ElemId(0);

    pub fn index(self) -> usize {
        self.0
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for ElemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Default largest group accepted by [`GroupTable::from_table`].
pub const DEFAULT_ORDER_CAP: usize = 128;

#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
    names: Vec<String>,
}

impl GroupTable {
    /// Validates a full multiplication table: identity at 0, every row and
    /// column a permutation, associativity over all triples.
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<GroupTable> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if n > DEFAULT_ORDER_CAP {
            return Err(Error::CapExceeded { order: n, cap: DEFAULT_ORDER_CAP });
        }
        let mut mult = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!("row {i} has length {}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidGroup(format!("entry {bad} out of range in row {i}")));
            }
            mult.extend_from_slice(row);
        }
        let names = match names {
            Some(names) if names.len() != n => {
                return Err(Error::InvalidGroup(format!("{} names for {n} elements", names.len())))
            }
            Some(names) => names,
            None => default_names(n),
        };
        let group = GroupTable::from_parts(n, mult, names)?;
        group.check_associative()?;
        Ok(group)
    }

    /// Builds the table without the associativity scan. Rows, columns and the
    /// identity are still checked.
    pub(crate) fn from_parts(n: usize, mult: Vec<usize>, names: Vec<String>) -> Result<GroupTable> {
        for i in 0..n {
            if mult[i] != i || mult[i * n] != i {
                return Err(Error::InvalidGroup("index 0 is not the identity".into()));
            }
        }
        let mut seen = vec![0usize; n];
        for i in 0..n {
            for j in 0..n {
                let v = mult[i * n + j];
                if seen[v] == i * 2 + 1 {
                    return Err(Error::InvalidGroup(format!("row {i} is not a permutation")));
                }
                seen[v] = i * 2 + 1;
            }
        }
        for j in 0..n {
            let mut hit = vec![false; n];
            for i in 0..n {
                let v = mult[i * n + j];
                if hit[v] {
                    return Err(Error::InvalidGroup(format!("column {j} is not a permutation")));
                }
                hit[v] = true;
            }
        }
        let inv = (0..n)
            .map(|i| (0..n).find(|&j| mult[i * n + j] == 0).expect("row is a permutation"))
            .collect();
        Ok(GroupTable { order: n, mult, inv, names })
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mult[a * n + b];
                for c in 0..n {
                    if self.mult[ab * n + c] != self.mult[a * n + self.mult[b * n + c]] {
                        return Err(Error::InvalidGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        ElemId(self.mult[a.0 * self.order + b.0])
    }

    #[inline]
    pub fn inv(&self, a: ElemId) -> ElemId {
        ElemId(self.inv[a.0])
    }

    /// `x⁻¹ g x`.
    #[inline]
    pub fn conj(&self, g: ElemId, x: ElemId) -> ElemId {
        self.mul(self.mul(self.inv(x), g), x)
    }

    pub fn pow(&self, g: ElemId, k: u64) -> ElemId {
        let mut acc = ElemId::IDENTITY;
        for _ in 0..k {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> + Clone {
        (0..self.order).map(ElemId)
    }

    pub fn name(&self, g: ElemId) -> &str {
        &self.names[g.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn find_name(&self, name: &str) -> Option<ElemId> {
        self.names.iter().position(|n| n == name).map(ElemId)
    }

    /// Least `k >= 1` with `g^k = e`.
    pub fn element_order(&self, g: ElemId) -> u64 {
        let mut k = 1;
        let mut acc = g;
        while !acc.is_identity() {
            acc = self.mul(acc, g);
            k += 1;
        }
        k
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        self.elements().map(|g| self.element_order(g)).fold(1, |a, b| a.lcm(&b))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Row-major table of indices, as written to group files.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.mult.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn element_orders(&self) -> Vec<u64> {
        self.elements().map(|g| self.element_order(g)).collect()
    }

    /// Sorted multiset of element orders; a cheap isomorphism fingerprint.
    pub fn order_profile(&self) -> Vec<u64> {
        let mut v = self.element_orders();
        v.sort_unstable();
        v
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable").field("order", &self.order).field("names", &self.names).finish()
    }
}

fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_broken_tables() {
        assert!(GroupTable::from_table(vec![], None).is_err());
        // identity not at 0
        assert!(GroupTable::from_table(vec![vec![1, 0], vec![0, 1]], None).is_err());
        // repeated entry in a row
        assert!(GroupTable::from_table(vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]], None).is_err());
        // Latin square that is not associative (loop of order 5)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(GroupTable::from_table(loop5, None), Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn table_round_trip() {
        let g = make_cyclic(5);
        let h = GroupTable::from_table(g.table_rows(), Some(g.names().to_vec())).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn orders_and_exponent() {
        let c4 = make_cyclic(4);
        assert_eq!(c4.element_order(ElemId(1)), 4);
        assert_eq!(c4.element_order(ElemId::IDENTITY), 1);
        assert_eq!(c4.exponent(), 4);
        let s3 = builtin_group("s3").unwrap();
        assert_eq!(s3.exponent(), 6);
        let three_cycle = s3.elements().find(|&g| s3.element_order(g) == 3).unwrap();
        assert_eq!(s3.element_order(three_cycle), 3);
        assert_eq!(builtin_group("d4").unwrap().exponent(), 4);
        assert_eq!(builtin_group("c2xc2").unwrap().exponent(), 2);
    }
}
