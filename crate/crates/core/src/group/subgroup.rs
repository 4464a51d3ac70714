use std::sync::Arc;

use super::{ElemId, GroupTable};
use crate::error::{Error, Result};

/// A subgroup together with its own Cayley table. Member `i` of the sorted
/// member list is element `i` of [`Subgroup::group`], so the identity stays at
/// index 0 on both sides.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: Arc<GroupTable>,
    members: Vec<ElemId>,
    local: Vec<Option<usize>>,
    group: Arc<GroupTable>,
}

impl Subgroup {
    /// Smallest subgroup containing `gens`.
    pub fn generated(parent: &Arc<GroupTable>, gens: impl IntoIterator<Item = ElemId>) -> Subgroup {
        let mut inside = vec![false; parent.order()];
        inside[0] = true;
        let mut members = vec![ElemId::IDENTITY];
        let gens: Vec<ElemId> = gens.into_iter().collect();
        let mut i = 0;
        while i < members.len() {
            let h = members[i];
            for &s in &gens {
                let p = parent.mul(h, s);
                if !inside[p.0] {
                    inside[p.0] = true;
                    members.push(p);
                }
            }
            i += 1;
        }
        Self::from_sorted(parent, members)
    }

    /// Checks closure of an explicit member set.
    pub fn from_members(parent: &Arc<GroupTable>, members: impl IntoIterator<Item = ElemId>) -> Result<Subgroup> {
        let mut members: Vec<ElemId> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        let mut inside = vec![false; parent.order()];
        for &m in &members {
            if m.0 >= parent.order() {
                return Err(Error::InvalidGroup(format!("element {m} out of range")));
            }
            inside[m.0] = true;
        }
        if !inside[0] {
            return Err(Error::InvalidGroup("subgroup misses the identity".into()));
        }
        for &a in &members {
            if !inside[parent.inv(a).0] || members.iter().any(|&b| !inside[parent.mul(a, b).0]) {
                return Err(Error::InvalidGroup("member set is not closed".into()));
            }
        }
        Ok(Self::from_sorted(parent, members))
    }

    fn from_sorted(parent: &Arc<GroupTable>, mut members: Vec<ElemId>) -> Subgroup {
        members.sort_unstable();
        let mut local = vec![None; parent.order()];
        for (i, m) in members.iter().enumerate() {
            local[m.0] = Some(i);
        }
        let k = members.len();
        let mut mult = Vec::with_capacity(k * k);
        for &a in &members {
            for &b in &members {
                mult.push(local[parent.mul(a, b).0].expect("subgroup is closed"));
            }
        }
        let names = members.iter().map(|&m| parent.name(m).to_string()).collect();
        let group = GroupTable::from_parts(k, mult, names).expect("subgroup table is valid");
        Subgroup { parent: parent.clone(), members, local, group: Arc::new(group) }
    }

    pub fn parent(&self) -> &Arc<GroupTable> {
        &self.parent
    }

    /// The subgroup as a group in its own right.
    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn members(&self) -> &[ElemId] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.members.len()
    }

    pub fn contains(&self, g: ElemId) -> bool {
        self.local[g.0].is_some()
    }

    /// Parent element of a local index.
    pub fn embed(&self, local: ElemId) -> ElemId {
        self.members[local.0]
    }

    /// Local index of a parent element, if it is a member.
    pub fn localize(&self, g: ElemId) -> Option<ElemId> {
        self.local[g.0].map(ElemId)
    }

    pub fn is_normal(&self) -> bool {
        self.parent
            .elements()
            .all(|x| self.members.iter().all(|&h| self.contains(self.parent.conj(h, x))))
    }

    pub fn intersection_is_trivial(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| m.is_identity() || !other.contains(m))
    }

    /// Whether the set product `self · other` is the whole parent.
    pub fn product_covers(&self, other: &Subgroup) -> bool {
        let mut hit = vec![false; self.parent.order()];
        for &a in &self.members {
            for &b in &other.members {
                hit[self.parent.mul(a, b).0] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }
}

/// `|F|·|Γ| = |G|` and `F ∩ Γ = {e}`.
pub fn is_exact_factorization(group: &GroupTable, f: &Subgroup, gamma: &Subgroup) -> bool {
    f.order() * gamma.order() == group.order() && f.intersection_is_trivial(gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_group, make_cyclic};

    #[test]
    fn generated_subgroups() {
        let c6 = Arc::new(make_cyclic(6));
        assert_eq!(Subgroup::generated(&c6, []).members(), &[ElemId(0)]);
        let h = Subgroup::generated(&c6, [ElemId(2)]);
        assert_eq!(h.members(), &[ElemId(0), ElemId(2), ElemId(4)]);
        assert_eq!(h.group().order_profile(), make_cyclic(3).order_profile());
        let s3 = Arc::new(builtin_group("s3").unwrap());
        let t = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
        assert_eq!(Subgroup::generated(&s3, [t]).order(), 2);
    }

    #[test]
    fn explicit_members() {
        let c6 = Arc::new(make_cyclic(6));
        assert!(Subgroup::from_members(&c6, [ElemId(0), ElemId(3)]).is_ok());
        assert!(Subgroup::from_members(&c6, [ElemId(0), ElemId(2)]).is_err());
        assert!(Subgroup::from_members(&c6, [ElemId(3)]).is_err());
    }

    #[test]
    fn exact_factorizations() {
        let c6 = Arc::new(make_cyclic(6));
        let f = Subgroup::generated(&c6, [ElemId(3)]);
        let g = Subgroup::generated(&c6, [ElemId(2)]);
        assert!(is_exact_factorization(&c6, &f, &g));
        let c4 = Arc::new(make_cyclic(4));
        let sq = Subgroup::generated(&c4, [ElemId(2)]);
        assert!(!is_exact_factorization(&c4, &sq, &sq));
        let s3 = Arc::new(builtin_group("s3").unwrap());
        let t = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
        let c = s3.elements().find(|&g| s3.element_order(g) == 3).unwrap();
        let (ft, gc) = (Subgroup::generated(&s3, [t]), Subgroup::generated(&s3, [c]));
        assert!(is_exact_factorization(&s3, &ft, &gc));
        assert!(ft.product_covers(&gc));
    }
}
