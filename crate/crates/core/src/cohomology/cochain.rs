use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{ElemId, GroupTable, Subgroup};
use crate::phase::Phase;

/// A normalized phase-valued function on `G^K`: its value is `0` whenever
/// some argument is the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain<const K: usize> {
    group: Arc<GroupTable>,
    values: Vec<Phase>,
}

pub type Cochain1 = Cochain<1>;
pub type Cochain2 = Cochain<2>;
pub type Cochain3 = Cochain<3>;

impl<const K: usize> Cochain<K> {
    pub fn zero(group: &Arc<GroupTable>) -> Self {
        Cochain { group: group.clone(), values: vec![Phase::ZERO; group.order().pow(K as u32)] }
    }

    /// Tabulates `f`, rejecting values that break normalization.
    pub fn from_fn(group: &Arc<GroupTable>, mut f: impl FnMut([ElemId; K]) -> Phase) -> Result<Self> {
        let mut c = Self::zero(group);
        for idx in 0..c.values.len() {
            let args = c.unflatten(idx);
            let v = f(args);
            if !v.is_zero() && args.iter().any(|a| a.is_identity()) {
                return Err(Error::NotNormalized(args.iter().map(|a| a.0).collect()));
            }
            c.values[idx] = v;
        }
        Ok(c)
    }

    /// Sparse construction; unspecified tuples are `0`.
    pub fn from_entries(
        group: &Arc<GroupTable>,
        entries: impl IntoIterator<Item = ([ElemId; K], Phase)>,
    ) -> Result<Self> {
        let mut c = Self::zero(group);
        for (args, v) in entries {
            if args.iter().any(|a| a.0 >= group.order()) {
                return Err(Error::Parse(format!("argument out of range in {args:?}")));
            }
            if !v.is_zero() && args.iter().any(|a| a.is_identity()) {
                return Err(Error::NotNormalized(args.iter().map(|a| a.0).collect()));
            }
            let i = c.flatten(args);
            c.values[i] = v;
        }
        Ok(c)
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    #[inline]
    fn flatten(&self, args: [ElemId; K]) -> usize {
        let n = self.group.order();
        args.iter().fold(0, |acc, a| acc * n + a.0)
    }

    fn unflatten(&self, mut idx: usize) -> [ElemId; K] {
        let n = self.group.order();
        let mut args = [ElemId::IDENTITY; K];
        for slot in args.iter_mut().rev() {
            *slot = ElemId(idx % n);
            idx /= n;
        }
        args
    }

    #[inline]
    pub fn get(&self, args: [ElemId; K]) -> Phase {
        self.values[self.flatten(args)]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Nonzero values in lexicographic argument order.
    pub fn entries(&self) -> impl Iterator<Item = ([ElemId; K], Phase)> + '_ {
        self.values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, &v)| (self.unflatten(i), v))
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| a + b).collect();
        Ok(Cochain { group: self.group.clone(), values })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| a - b).collect();
        Ok(Cochain { group: self.group.clone(), values })
    }

    /// Pointwise `k`-th power.
    pub fn scale(&self, k: i64) -> Self {
        Cochain { group: self.group.clone(), values: self.values.iter().map(|v| v.times(k)).collect() }
    }

    /// Pointwise `n`-th root, using the representative `q/n`.
    pub fn div(&self, n: u64) -> Self {
        Cochain { group: self.group.clone(), values: self.values.iter().map(|v| v.div(n)).collect() }
    }

    /// Restriction along the embedding of `sub`; the result lives on `sub.group()`.
    pub fn restrict(&self, sub: &Subgroup) -> Result<Self> {
        if *sub.parent().as_ref() != *self.group {
            return Err(Error::GroupMismatch);
        }
        let local = sub.group();
        let mut out = Self::zero(local);
        for idx in 0..out.values.len() {
            let mut args = out.unflatten(idx);
            for a in args.iter_mut() {
                *a = sub.embed(*a);
            }
            out.values[idx] = self.get(args);
        }
        Ok(out)
    }

    /// Pullback `c ∘ (proj × … × proj)` along a surjective homomorphism
    /// `target → self.group()`.
    pub fn inflate(&self, target: &Arc<GroupTable>, proj: &[ElemId]) -> Result<Self> {
        check_surjective_hom(target, &self.group, proj)?;
        let mut out = Self::zero(target);
        for idx in 0..out.values.len() {
            let mut args = out.unflatten(idx);
            for a in args.iter_mut() {
                *a = proj[a.0];
            }
            out.values[idx] = self.get(args);
        }
        Ok(out)
    }

    /// Largest denominator among the values.
    pub fn max_denominator(&self) -> u64 {
        self.values.iter().map(|v| v.order()).max().unwrap_or(1)
    }
}

fn check_surjective_hom(source: &GroupTable, target: &GroupTable, proj: &[ElemId]) -> Result<()> {
    if proj.len() != source.order() || proj.iter().any(|p| p.0 >= target.order()) {
        return Err(Error::NotHomomorphism("projection has the wrong shape".into()));
    }
    for a in source.elements() {
        for b in source.elements() {
            if proj[source.mul(a, b).0] != target.mul(proj[a.0], proj[b.0]) {
                return Err(Error::NotHomomorphism(format!("fails at ({}, {})", a.0, b.0)));
            }
        }
    }
    let mut hit = vec![false; target.order()];
    proj.iter().for_each(|p| hit[p.0] = true);
    if hit.contains(&false) {
        return Err(Error::NotHomomorphism("projection is not surjective".into()));
    }
    Ok(())
}

impl Cochain<1> {
    /// `(df)(x, y) = f(x) + f(y) − f(xy)`.
    pub fn coboundary(&self) -> Cochain<2> {
        let g = &self.group;
        Cochain::from_fn(g, |[x, y]| self.get([x]) + self.get([y]) - self.get([g.mul(x, y)]))
            .expect("coboundary of a normalized cochain is normalized")
    }

    /// Whether `f` is a character, i.e. `df = 0`.
    pub fn is_homomorphism(&self) -> bool {
        let g = &self.group;
        g.elements().all(|x| g.elements().all(|y| self.get([g.mul(x, y)]) == self.get([x]) + self.get([y])))
    }
}

impl Cochain<2> {
    /// `(dτ)(x, y, z) = τ(y, z) − τ(xy, z) + τ(x, yz) − τ(x, y)`.
    pub fn coboundary(&self) -> Cochain<3> {
        let g = &self.group;
        Cochain::from_fn(g, |[x, y, z]| {
            self.get([y, z]) - self.get([g.mul(x, y), z]) + self.get([x, g.mul(y, z)]) - self.get([x, y])
        })
        .expect("coboundary of a normalized cochain is normalized")
    }

    /// Random normalized 2-cochain with values in `(1/den)Z/Z`.
    pub fn random<R: Rng>(group: &Arc<GroupTable>, den: u64, rng: &mut R) -> Self {
        Cochain::from_fn(group, |[x, y]| {
            if x.is_identity() || y.is_identity() {
                Phase::ZERO
            } else {
                Phase::new(rng.gen_range(0..den as i64), den as i64)
            }
        })
        .expect("identity arguments are skipped")
    }
}

impl Cochain<3> {
    /// First quadruple `(x, y, z, w)` where
    /// `ω(y,z,w) − ω(xy,z,w) + ω(x,yz,w) − ω(x,y,zw) + ω(x,y,z) ≠ 0`.
    pub fn cocycle_defect(&self) -> Option<[usize; 4]> {
        let g = &self.group;
        let n = g.order();
        // arguments equal to e never contribute for a normalized cochain
        for x in 1..n {
            let x = ElemId(x);
            for y in 1..n {
                let y = ElemId(y);
                let xy = g.mul(x, y);
                for z in 1..n {
                    let z = ElemId(z);
                    let yz = g.mul(y, z);
                    let xyz = self.get([x, y, z]);
                    for w in 1..n {
                        let w = ElemId(w);
                        let d = self.get([y, z, w]) - self.get([xy, z, w]) + self.get([x, yz, w])
                            - self.get([x, y, g.mul(z, w)])
                            + xyz;
                        if !d.is_zero() {
                            return Some([x.0, y.0, z.0, w.0]);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_cocycle(&self) -> bool {
        self.cocycle_defect().is_none()
    }

    pub fn ensure_cocycle(&self) -> Result<()> {
        match self.cocycle_defect() {
            None => Ok(()),
            Some(at) => Err(Error::NotCocycle(at)),
        }
    }
}

impl<const K: usize> fmt::Debug for Cochain<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self
            .entries()
            .map(|(args, v)| {
                let names: Vec<&str> = args.iter().map(|&a| self.group.name(a)).collect();
                format!("({}) = {v}", names.join(","))
            })
            .collect();
        write!(f, "Cochain<{K}>[{}]", entries.join("; "))
    }
}

/// `ω(a^i, a^j, a^l) = ζ·l·⌊(i+j)/n⌋` on `make_cyclic(n)`.
pub fn cyclic_standard_cocycle(group: &Arc<GroupTable>, zeta: Phase) -> Result<Cochain3> {
    let n = group.order();
    let standard = group
        .elements()
        .all(|i| group.elements().all(|j| group.mul(i, j).0 == (i.0 + j.0) % n));
    if !standard {
        return Err(Error::Precondition("group is not indexed as make_cyclic(n)".into()));
    }
    if !zeta.times(n as i64).is_zero() {
        return Err(Error::NotRootOfUnity(zeta, n));
    }
    Cochain::from_fn(group, |[i, j, l]| {
        if i.0 + j.0 >= n {
            zeta.times(l.0 as i64)
        } else {
            Phase::ZERO
        }
    })
}
