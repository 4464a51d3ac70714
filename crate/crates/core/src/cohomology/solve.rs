//! Exact coboundary equations `df = target` through Smith normal form.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;

use super::cochain::{Cochain, Cochain1, Cochain2, Cochain3};
use super::snf::{smith_normal_form, RowLog, SmithForm};
use crate::error::{Error, Result};
use crate::group::{ElemId, GroupTable, Subgroup};
use crate::phase::Phase;

pub const DEFAULT_SOLVER_CAP: usize = 12;

/// Outcome of a coboundary equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoboundaryCertificate<W> {
    /// A cochain whose coboundary equals the target (re-verified).
    Witness(W),
    /// Row of the reduced system that has no solution, with its value.
    Obstruction { row: usize, value: Phase },
}

impl<W> CoboundaryCertificate<W> {
    pub fn is_witness(&self) -> bool {
        matches!(self, CoboundaryCertificate::Witness(_))
    }

    pub fn witness(self) -> Option<W> {
        match self {
            CoboundaryCertificate::Witness(w) => Some(w),
            CoboundaryCertificate::Obstruction { .. } => None,
        }
    }
}

fn tuples<const K: usize>(n: usize) -> Vec<[ElemId; K]> {
    let count = (n - 1).pow(K as u32);
    (0..count)
        .map(|mut idx| {
            let mut t = [ElemId::IDENTITY; K];
            for slot in t.iter_mut().rev() {
                *slot = ElemId(idx % (n - 1) + 1);
                idx /= n - 1;
            }
            t
        })
        .collect()
}

fn column<const K: usize>(n: usize, args: [ElemId; K]) -> Option<usize> {
    if args.iter().any(|a| a.is_identity()) {
        return None;
    }
    Some(args.iter().fold(0, |acc, a| acc * (n - 1) + a.0 - 1))
}

/// The coboundary `C^K → C^{K+1}` on normalized coordinates, reduced once and
/// reusable for any number of targets.
pub struct CoboundarySolver<const K: usize, const L: usize> {
    group: Arc<GroupTable>,
    rows: Vec<[ElemId; L]>,
    cols: Vec<[ElemId; K]>,
    smith: SmithForm,
    log: RowLog,
}

pub type Solver1 = CoboundarySolver<1, 2>;
pub type Solver2 = CoboundarySolver<2, 3>;

impl<const K: usize, const L: usize> CoboundarySolver<K, L> {
    fn build(group: &Arc<GroupTable>, cap: usize, row_of: impl Fn(&GroupTable, [ElemId; L]) -> Vec<([ElemId; K], i64)>) -> Result<Self> {
        let n = group.order();
        if n > cap {
            return Err(Error::CapExceeded { order: n, cap });
        }
        let rows = tuples::<L>(n);
        let cols = tuples::<K>(n);
        let matrix: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|&r| {
                let mut line = vec![0i64; cols.len()];
                for (args, c) in row_of(group, r) {
                    if let Some(j) = column(n, args) {
                        line[j] += c;
                    }
                }
                line.into_iter().map(BigInt::from).collect()
            })
            .collect();
        let mut log = RowLog::default();
        let smith = if cols.is_empty() || rows.is_empty() {
            smith_normal_form(Vec::new(), cols.len(), &mut log)
        } else {
            smith_normal_form(matrix, cols.len(), &mut log)
        };
        Ok(CoboundarySolver { group: group.clone(), rows, cols, smith, log })
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    /// Nontrivial invariant factors of the coboundary matrix.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.smith.torsion()
    }

    fn solve_raw(&self, target: &Cochain<L>) -> Result<CoboundaryCertificate<Vec<Phase>>> {
        if *target.group().as_ref() != *self.group {
            return Err(Error::GroupMismatch);
        }
        let mut w: Vec<Phase> = self.rows.iter().map(|&r| target.get(r)).collect();
        if self.rows.is_empty() {
            return Ok(CoboundaryCertificate::Witness(vec![Phase::ZERO; self.cols.len()]));
        }
        self.log.replay(&mut w);
        let rank = self.smith.rank();
        if let Some(row) = (rank..w.len()).find(|&i| !w[i].is_zero()) {
            return Ok(CoboundaryCertificate::Obstruction { row, value: w[row] });
        }
        let mut s = vec![Phase::ZERO; self.cols.len()];
        for i in 0..rank {
            s[i] = w[i].div(self.smith.diag_u64(i));
        }
        Ok(CoboundaryCertificate::Witness(self.smith.apply_v_phases(&s)))
    }
}

impl Solver1 {
    pub fn new(group: &Arc<GroupTable>, cap: usize) -> Result<Self> {
        Self::build(group, cap, |g, [x, y]| vec![([x], 1), ([y], 1), ([g.mul(x, y)], -1)])
    }

    pub fn solve(&self, target: &Cochain2) -> Result<CoboundaryCertificate<Cochain1>> {
        Ok(match self.solve_raw(target)? {
            CoboundaryCertificate::Witness(t) => {
                let f = Cochain1::from_entries(&self.group, self.cols.iter().copied().zip(t))?;
                if f.coboundary() != *target {
                    return Err(Error::Solver("witness fails verification".into()));
                }
                CoboundaryCertificate::Witness(f)
            }
            CoboundaryCertificate::Obstruction { row, value } => CoboundaryCertificate::Obstruction { row, value },
        })
    }
}

impl Solver2 {
    pub fn new(group: &Arc<GroupTable>, cap: usize) -> Result<Self> {
        Self::build(group, cap, |g, [x, y, z]| {
            vec![([y, z], 1), ([g.mul(x, y), z], -1), ([x, g.mul(y, z)], 1), ([x, y], -1)]
        })
    }

    pub fn solve(&self, target: &Cochain3) -> Result<CoboundaryCertificate<Cochain2>> {
        Ok(match self.solve_raw(target)? {
            CoboundaryCertificate::Witness(t) => {
                let f = Cochain2::from_entries(&self.group, self.cols.iter().copied().zip(t))?;
                if f.coboundary() != *target {
                    return Err(Error::Solver("witness fails verification".into()));
                }
                CoboundaryCertificate::Witness(f)
            }
            CoboundaryCertificate::Obstruction { row, value } => CoboundaryCertificate::Obstruction { row, value },
        })
    }

    /// Order of the class of `omega` in `H^3(G, k^×)`.
    pub fn class_order(&self, omega: &Cochain3) -> Result<u64> {
        omega.ensure_cocycle()?;
        let n = self.group.order() as u64;
        for k in (1..=n).filter(|&k| n.is_multiple_of(k)) {
            if self.solve(&omega.scale(k as i64))?.is_witness() {
                return Ok(k);
            }
        }
        Err(Error::Solver("class order does not divide the group order".into()))
    }
}

pub fn solve_coboundary1(target: &Cochain2, cap: usize) -> Result<CoboundaryCertificate<Cochain1>> {
    Solver1::new(target.group(), cap)?.solve(target)
}

pub fn solve_coboundary2(target: &Cochain3, cap: usize) -> Result<CoboundaryCertificate<Cochain2>> {
    Solver2::new(target.group(), cap)?.solve(target)
}

pub fn class_order(omega: &Cochain3, cap: usize) -> Result<u64> {
    Solver2::new(omega.group(), cap)?.class_order(omega)
}

/// Class order of `ω|⟨g⟩`: the order of `Σ_{j=1}^{|g|-1} ω(g, g^j, g)`.
pub fn cyclic_class_order(omega: &Cochain3, g: ElemId) -> u64 {
    let grp = omega.group();
    let m = grp.element_order(g);
    let mut acc = Phase::ZERO;
    let mut gj = g;
    for _ in 1..m {
        acc += omega.get([g, gj, g]);
        gj = grp.mul(gj, g);
    }
    acc.order()
}

/// Cohomologous representative whose restriction to every cyclic subgroup
/// takes values in `(1/N)Z/Z`, `N = exp G`.
///
/// For each cyclic subgroup `H = ⟨g⟩` the solver finds `f^H` with
/// `N·ω|_H = d f^H`; these are glued into `f(x, y) = f^{⟨x⟩}(x, y)` for
/// `y ∈ ⟨x⟩` and `0` otherwise, and the result is `ω − d(f/N)`.
pub fn normalize_cocycle(omega: &Cochain3, cap: usize) -> Result<(Cochain3, Cochain2)> {
    omega.ensure_cocycle()?;
    let group = omega.group();
    let big_n = group.exponent();
    let mut seen = BTreeSet::new();
    let mut f = vec![Phase::ZERO; group.order() * group.order()];
    let mut local_witness: Vec<Option<(Subgroup, Cochain2)>> = Vec::new();
    let mut owner = vec![usize::MAX; group.order()];
    for g in group.elements() {
        let sub = Subgroup::generated(group, [g]);
        let key: Vec<usize> = sub.members().iter().map(|m| m.0).collect();
        if !seen.insert(key.clone()) {
            owner[g.0] = local_witness.iter().position(|w| {
                w.as_ref().is_some_and(|(s, _)| s.members().iter().map(|m| m.0).collect::<Vec<_>>() == key)
            })
            .expect("subgroup was recorded");
            continue;
        }
        let restricted = omega.restrict(&sub)?;
        let witness = Solver2::new(sub.group(), cap.max(sub.order()))?
            .solve(&restricted.scale(big_n as i64))?
            .witness()
            .ok_or_else(|| Error::Solver("N·ω is not a coboundary on a cyclic subgroup".into()))?;
        owner[g.0] = local_witness.len();
        local_witness.push(Some((sub, witness)));
    }
    for x in group.elements() {
        let (sub, w) = local_witness[owner[x.0]].as_ref().expect("present");
        let lx = sub.localize(x).expect("x generates its subgroup");
        for y in group.elements() {
            if let Some(ly) = sub.localize(y) {
                f[x.0 * group.order() + y.0] = w.get([lx, ly]);
            }
        }
    }
    let n = group.order();
    let f = Cochain2::from_fn(group, |[x, y]| f[x.0 * n + y.0])?;
    let tilde = omega.sub(&f.div(big_n).coboundary())?;
    Ok((tilde, f))
}

/// `gcd`-free helper used by callers: all divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|&d| n.is_multiple_of(d)).collect()
}

/// Least common multiple of a list, `1` for the empty list.
pub fn lcm_all(values: impl IntoIterator<Item = u64>) -> u64 {
    values.into_iter().fold(1, |a, b| a.lcm(&b))
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::cohomology::cochain::cyclic_standard_cocycle;
    use crate::group::{builtin_group, cyclic_quotients, make_cyclic};

    #[test]
    fn coboundaries_are_recognized() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for name in ["c2", "c4", "s3", "c2xc2", "c6"] {
            let g = Arc::new(builtin_group(name).unwrap());
            let solver = Solver2::new(&g, DEFAULT_SOLVER_CAP).unwrap();
            for _ in 0..3 {
                let t = Cochain2::random(&g, 2 * g.order() as u64, &mut rng);
                let target = t.coboundary();
                let w = solver.solve(&target).unwrap().witness().expect("coboundary");
                assert_eq!(w.coboundary(), target);
            }
        }
    }

    #[test]
    fn one_cochain_solver() {
        let g = Arc::new(builtin_group("s3").unwrap());
        let f = Cochain1::from_fn(&g, |[x]| Phase::new(x.0 as i64 * x.0 as i64 % 5, 7)).unwrap();
        let w = solve_coboundary1(&f.coboundary(), 12).unwrap().witness().unwrap();
        assert_eq!(w.coboundary(), f.coboundary());
        // a symmetric 2-cocycle on C2 with nontrivial class in Ext: τ(a,a) = 1/2
        // is the coboundary of f(a) = 1/4
        let c2 = Arc::new(make_cyclic(2));
        let t = Cochain2::from_entries(&c2, [([ElemId(1), ElemId(1)], Phase::new(1, 2))]).unwrap();
        assert!(solve_coboundary1(&t, 12).unwrap().is_witness());
    }

    #[test]
    fn cyclic_class_orders_match_closed_form() {
        for n in 1..=9usize {
            let g = Arc::new(make_cyclic(n));
            let solver = Solver2::new(&g, DEFAULT_SOLVER_CAP).unwrap();
            for k in 0..n {
                let w = cyclic_standard_cocycle(&g, Phase::new(k as i64, n as i64)).unwrap();
                let expect = (n / n.gcd(&k)) as u64;
                assert_eq!(solver.class_order(&w).unwrap(), expect, "n={n} k={k}");
                if n > 1 {
                    assert_eq!(cyclic_class_order(&w, ElemId(1)), expect);
                }
            }
        }
    }

    #[test]
    fn obstruction_for_nontrivial_class() {
        let c2 = Arc::new(make_cyclic(2));
        let w = cyclic_standard_cocycle(&c2, Phase::new(1, 2)).unwrap();
        match solve_coboundary2(&w, 12).unwrap() {
            CoboundaryCertificate::Obstruction { value, .. } => assert!(!value.is_zero()),
            CoboundaryCertificate::Witness(_) => panic!("nontrivial class solved"),
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Arc::new(make_cyclic(13));
        assert!(matches!(Solver2::new(&g, 12), Err(Error::CapExceeded { order: 13, cap: 12 })));
    }

    #[test]
    fn normalization_preserves_class_and_shrinks_denominators() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let d4 = Arc::new(builtin_group("d4").unwrap());
        let c2 = Arc::new(make_cyclic(2));
        let base = cyclic_standard_cocycle(&c2, Phase::new(1, 2)).unwrap();
        for proj in cyclic_quotients(&d4, 2) {
            let w = base.inflate(&d4, &proj).unwrap();
            let noisy = w.add(&Cochain2::random(&d4, 16, &mut rng).coboundary()).unwrap();
            let (tilde, f) = normalize_cocycle(&noisy, 12).unwrap();
            assert!(tilde.is_cocycle());
            let diff = noisy.sub(&tilde).unwrap();
            assert_eq!(diff, f.div(d4.exponent()).coboundary());
            let big_n = d4.exponent() as i64;
            for g in d4.elements() {
                assert!(tilde.get([g, d4.inv(g), g]).times(big_n).is_zero());
            }
        }
    }

    #[test]
    fn normalization_removes_coboundary_noise() {
        // τ(a, a²) = 1/6 pushes ω(a, a², a) to order 6 on C3
        let c3 = Arc::new(make_cyclic(3));
        let w = cyclic_standard_cocycle(&c3, Phase::new(1, 3)).unwrap();
        let tau = Cochain2::from_entries(&c3, [([ElemId(1), ElemId(2)], Phase::new(1, 6))]).unwrap();
        let noisy = w.add(&tau.coboundary()).unwrap();
        assert_eq!(noisy.get([ElemId(1), ElemId(2), ElemId(1)]).order(), 6);
        let (tilde, _) = normalize_cocycle(&noisy, 12).unwrap();
        for g in c3.elements() {
            assert!(3 % tilde.get([g, c3.inv(g), g]).order() == 0);
        }
        assert!(solve_coboundary2(&tilde.sub(&noisy).unwrap(), 12).unwrap().is_witness());
    }
}
