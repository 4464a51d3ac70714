//! Named groups used by the corpus and the command line.

use std::sync::Arc;

use num_integer::Integer;

use super::{direct_product, from_permutations, make_cyclic, quotient, ElemId, GroupTable, Subgroup};
use crate::error::{Error, Result};

pub const BUILTIN_GROUPS: &[&str] =
    &["c<n>", "cyclic:<n>", "c<a>xc<b>[xc<c>...]", "s3", "d4", "frob21", "heis27", "es32"];

/// Resolves a builtin group name such as `c6`, `c2xc4`, `s3` or `heis27`.
pub fn builtin_group(name: &str) -> Result<GroupTable> {
    let name = name.trim().to_ascii_lowercase();
    let unknown = || Error::Parse(format!("unknown builtin group `{name}`"));
    match name.as_str() {
        // dihedral group of order 6 acting on a triangle
        "s3" => from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]]),
        // symmetries of the square with vertices 0..3
        "d4" => from_permutations(&[vec![1, 2, 3, 0], vec![2, 1, 0, 3]]),
        // x ↦ x+1 and x ↦ 2x on Z/7
        "frob21" => from_permutations(&[vec![1, 2, 3, 4, 5, 6, 0], vec![0, 2, 4, 6, 1, 3, 5]]),
        "heis27" => from_permutations(&heisenberg_generators()),
        "es32" => extraspecial_32(),
        _ => {
            if let Some(n) = name.strip_prefix("cyclic:") {
                return parse_order(n).map(make_cyclic).ok_or_else(unknown);
            }
            let factors: Option<Vec<usize>> =
                name.split('x').map(|f| f.strip_prefix('c').and_then(parse_order)).collect();
            let factors = factors.ok_or_else(unknown)?;
            let mut iter = factors.into_iter();
            let first = make_cyclic(iter.next().ok_or_else(unknown)?);
            Ok(iter.fold(first, |acc, n| direct_product(&acc, &make_cyclic(n))))
        }
    }
}

fn parse_order(s: &str) -> Option<usize> {
    s.parse().ok().filter(|&n| (1..=super::DEFAULT_ORDER_CAP).contains(&n))
}

/// Affine maps of `(Z/3)²` generated by two translations and the shear
/// `(x, y) ↦ (x + y, y)`; point `(x, y)` has index `3x + y`.
fn heisenberg_generators() -> Vec<Vec<usize>> {
    let map = |f: &dyn Fn(usize, usize) -> (usize, usize)| -> Vec<usize> {
        (0..9)
            .map(|i| {
                let (x, y) = f(i / 3, i % 3);
                3 * (x % 3) + y % 3
            })
            .collect()
    };
    vec![map(&|x, y| (x + 1, y)), map(&|x, y| (x, y + 1)), map(&|x, y| (x + y, y))]
}

/// Central product `D4 ∘ D4`, the extraspecial group `2^{1+4}_+`.
fn extraspecial_32() -> Result<GroupTable> {
    let d4 = builtin_group("d4")?;
    let z = d4
        .elements()
        .find(|&g| !g.is_identity() && d4.elements().all(|x| d4.mul(g, x) == d4.mul(x, g)))
        .expect("D4 has a nontrivial center");
    let prod = Arc::new(direct_product(&d4, &d4));
    let zz = ElemId(z.0 * d4.order() + z.0);
    let center = Subgroup::generated(&prod, [zz]);
    Ok(quotient(&prod, &center)?.0)
}

/// All surjective homomorphisms `G → C_q`, each given as the image list in
/// `make_cyclic(q)` indexing. The order is deterministic: assignments of
/// images to a greedy generating set, enumerated lexicographically.
pub fn cyclic_quotients(group: &GroupTable, q: usize) -> Vec<Vec<ElemId>> {
    let gens = greedy_generators(group);
    let mut out = Vec::new();
    let mut images = vec![0usize; gens.len()];
    loop {
        if let Some(map) = extend_to_hom(group, &gens, &images, q) {
            let surjective = map.iter().fold(q, |acc, &v| acc.gcd(&v)) == 1;
            if surjective {
                out.push(map.into_iter().map(ElemId).collect());
            }
        }
        // next assignment
        let mut k = gens.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            images[k] += 1;
            if images[k] < q {
                break;
            }
            images[k] = 0;
        }
    }
}

fn greedy_generators(group: &GroupTable) -> Vec<ElemId> {
    let g = Arc::new(group.clone());
    let mut gens = Vec::new();
    let mut current = Subgroup::generated(&g, []);
    for x in group.elements() {
        if !current.contains(x) {
            gens.push(x);
            current = Subgroup::generated(&g, gens.iter().copied());
        }
    }
    gens
}

fn extend_to_hom(group: &GroupTable, gens: &[ElemId], images: &[usize], q: usize) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; group.order()];
    map[0] = 0;
    let mut queue = vec![ElemId::IDENTITY];
    while let Some(h) = queue.pop() {
        for (s, &img) in gens.iter().zip(images) {
            let p = group.mul(h, *s);
            let v = (map[h.0] + img) % q;
            if map[p.0] == usize::MAX {
                map[p.0] = v;
                queue.push(p);
            } else if map[p.0] != v {
                return None;
            }
        }
    }
    let hom = group
        .elements()
        .all(|a| group.elements().all(|b| map[group.mul(a, b).0] == (map[a.0] + map[b.0]) % q));
    hom.then_some(map)
}
