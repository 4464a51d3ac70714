use std::collections::{HashMap, VecDeque};

use super::{ElemId, GroupTable, Subgroup};
use crate::error::{Error, Result};

pub const DEFAULT_CLOSURE_CAP: usize = 100_000;

/// `C_n` with generator `a` at index 1 and `a^i` at index `i`.
pub fn make_cyclic(n: usize) -> GroupTable {
    assert!(n >= 1, "cyclic group of order 0");
    let mult = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    let names = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{i}"),
        })
        .collect();
    GroupTable::from_parts(n, mult, names).expect("cyclic table is valid")
}

pub fn from_permutations(generators: &[Vec<usize>]) -> Result<GroupTable> {
    from_permutations_capped(generators, DEFAULT_CLOSURE_CAP)
}

/// Breadth-first closure of the generators under composition, starting from
/// the identity and trying generators in the order given. Permutations act on
/// the right: `(p·q)(i) = q(p(i))`.
pub fn from_permutations_capped(generators: &[Vec<usize>], cap: usize) -> Result<GroupTable> {
    let degree = generators.first().map_or(0, Vec::len);
    for (k, g) in generators.iter().enumerate() {
        if g.len() != degree || !is_bijection(g) {
            return Err(Error::NotAPermutation(k, degree));
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in generators {
            let p = compose(&elements[i], g);
            if !index.contains_key(&p) {
                if elements.len() == cap {
                    return Err(Error::GroupTooLarge(cap));
                }
                index.insert(p.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(p);
            }
        }
    }
    let n = elements.len();
    if n > super::DEFAULT_ORDER_CAP {
        return Err(Error::CapExceeded { order: n, cap: super::DEFAULT_ORDER_CAP });
    }
    let mut mult = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            mult.push(index[&compose(a, b)]);
        }
    }
    let names = elements.iter().map(|p| cycle_notation(p)).collect();
    GroupTable::from_parts(n, mult, names)
}

fn is_bijection(p: &[usize]) -> bool {
    let mut hit = vec![false; p.len()];
    p.iter().all(|&v| v < p.len() && !std::mem::replace(&mut hit[v], true))
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    p.iter().map(|&i| q[i]).collect()
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut i = p[start];
        while i != start {
            seen[i] = true;
            cycle.push(i);
            i = p[i];
        }
        let body: Vec<String> = cycle.iter().map(usize::to_string).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

/// `A × B` with `(a, b)` at index `a·|B| + b`.
pub fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut mult = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let x = a.mul(ElemId(i / nb), ElemId(j / nb));
            let y = b.mul(ElemId(i % nb), ElemId(j % nb));
            mult.push(x.0 * nb + y.0);
        }
    }
    let names = (0..n)
        .map(|i| {
            if i == 0 {
                "e".to_string()
            } else {
                format!("({},{})", a.name(ElemId(i / nb)), b.name(ElemId(i % nb)))
            }
        })
        .collect();
    GroupTable::from_parts(n, mult, names).expect("product of groups is a group")
}

/// `G/N` together with the projection `G → G/N`. Cosets are indexed in order
/// of their smallest representative, so the identity coset is index 0.
pub fn quotient(group: &GroupTable, normal: &Subgroup) -> Result<(GroupTable, Vec<ElemId>)> {
    if !normal.is_normal() {
        return Err(Error::NotNormal);
    }
    let n = group.order();
    let mut proj = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for g in group.elements() {
        if proj[g.0] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(g);
        for &h in normal.members() {
            proj[group.mul(g, h).0] = c;
        }
    }
    let m = reps.len();
    let mut mult = Vec::with_capacity(m * m);
    for &r in &reps {
        for &s in &reps {
            mult.push(proj[group.mul(r, s).0]);
        }
    }
    let names = reps
        .iter()
        .enumerate()
        .map(|(i, &r)| if i == 0 { "e".to_string() } else { format!("[{}]", group.name(r)) })
        .collect();
    let q = GroupTable::from_parts(m, mult, names)?;
    Ok((q, proj.into_iter().map(ElemId).collect()))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::group::builtin_group;

    #[test]
    fn cyclic_arithmetic() {
        let c1 = make_cyclic(1);
        assert_eq!(c1.order(), 1);
        assert_eq!(c1.exponent(), 1);
        let c3 = make_cyclic(3);
        assert_eq!(c3.mul(ElemId(1), ElemId(2)), ElemId(0));
    }

    #[test]
    fn permutation_closure() {
        let s3 = from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(from_permutations(&[vec![0, 1, 2]]).unwrap().order(), 1);
        let c4 = from_permutations(&[vec![1, 2, 3, 0]]).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.order_profile(), make_cyclic(4).order_profile());
        assert!(matches!(from_permutations(&[vec![0, 0, 1]]), Err(Error::NotAPermutation(0, 3))));
        assert!(matches!(
            from_permutations_capped(&[vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]], 50),
            Err(Error::GroupTooLarge(50))
        ));
    }

    #[test]
    fn regular_representation_of_cyclic_group() {
        for n in 1..=9 {
            let shift: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            let g = from_permutations(&[shift]).unwrap();
            assert_eq!(g.order_profile(), make_cyclic(n).order_profile());
        }
    }

    #[test]
    fn products() {
        let k4 = direct_product(&make_cyclic(2), &make_cyclic(2));
        assert_eq!(k4.exponent(), 2);
        let c3c3 = direct_product(&make_cyclic(3), &make_cyclic(3));
        assert_eq!(c3c3.order(), 9);
        assert!(c3c3.elements().skip(1).all(|g| c3c3.element_order(g) == 3));
        let c2c3 = direct_product(&make_cyclic(2), &make_cyclic(3));
        assert_eq!(c2c3.element_orders(), vec![1, 3, 3, 2, 6, 6]);
        assert_eq!(c2c3.order_profile(), make_cyclic(6).order_profile());
    }

    #[test]
    fn quotients() {
        let s3 = Arc::new(builtin_group("s3").unwrap());
        let whole = Subgroup::generated(&s3, s3.elements());
        let (q, _) = quotient(&s3, &whole).unwrap();
        assert_eq!(q.order(), 1);
        let trivial = Subgroup::generated(&s3, []);
        let (q, proj) = quotient(&s3, &trivial).unwrap();
        assert_eq!(q.order_profile(), s3.order_profile());
        assert!(proj.iter().enumerate().all(|(i, p)| p.0 == i));
        let rot = s3.elements().find(|&g| s3.element_order(g) == 3).unwrap();
        let c3 = Subgroup::generated(&s3, [rot]);
        let (q, proj) = quotient(&s3, &c3).unwrap();
        assert_eq!(q.order(), 2);
        for a in s3.elements() {
            for b in s3.elements() {
                assert_eq!(proj[s3.mul(a, b).0], q.mul(proj[a.0], proj[b.0]));
            }
        }
        let flip = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
        let c2 = Subgroup::generated(&s3, [flip]);
        assert!(matches!(quotient(&s3, &c2), Err(Error::NotNormal)));
    }
}
