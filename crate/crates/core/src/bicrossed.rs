//! Matched pairs `(F, Γ)`, the bicrossed product `F ⋈ Γ` and the 3-cocycles
//! `ω(σ, τ)` attached to extension data.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

use crate::cohomology::snf::smith_normal_form;
use crate::cohomology::{Cochain3, Solver2};
use crate::error::{Error, Result};
use crate::exponent::exponent_via_pi;
use crate::group::{make_cyclic, ElemId, GroupTable, Subgroup};
use crate::phase::Phase;

/// Compatible actions `▷ : Γ × F → F` and `◁ : Γ × F → Γ`, both stored as
/// `|Γ| × |F|` tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    f: Arc<GroupTable>,
    gamma: Arc<GroupTable>,
    act_on_f: Vec<Vec<usize>>,
    act_on_gamma: Vec<Vec<usize>>,
}

/// `F ⋈ Γ` with `(x, g)` stored at index `x·|Γ| + g`.
#[derive(Clone, Debug)]
pub struct Bicrossed {
    pub pair: MatchedPair,
    pub group: Arc<GroupTable>,
    pub f_sub: Subgroup,
    pub gamma_sub: Subgroup,
}

impl MatchedPair {
    pub fn new(
        f: Arc<GroupTable>,
        gamma: Arc<GroupTable>,
        act_on_f: Vec<Vec<usize>>,
        act_on_gamma: Vec<Vec<usize>>,
    ) -> Result<MatchedPair> {
        let (nf, ng) = (f.order(), gamma.order());
        let shape_ok = |t: &Vec<Vec<usize>>, bound: usize| {
            t.len() == ng && t.iter().all(|r| r.len() == nf && r.iter().all(|&v| v < bound))
        };
        if !shape_ok(&act_on_f, nf) || !shape_ok(&act_on_gamma, ng) {
            return Err(Error::MatchedPair(format!("action tables must be {ng}×{nf} with entries in range")));
        }
        for g in 0..ng {
            if act_on_f[g][0] != 0 || act_on_gamma[g][0] != g {
                return Err(Error::MatchedPair("actions must fix the identity of F and act trivially by e".into()));
            }
        }
        for x in 0..nf {
            if act_on_f[0][x] != x || act_on_gamma[0][x] != 0 {
                return Err(Error::MatchedPair("e ▷ x must be x and e ◁ x must be e".into()));
            }
        }
        let mp = MatchedPair { f, gamma, act_on_f, act_on_gamma };
        mp.build()?;
        Ok(mp)
    }

    pub fn trivial(f: Arc<GroupTable>, gamma: Arc<GroupTable>) -> MatchedPair {
        let (nf, ng) = (f.order(), gamma.order());
        let act_on_f = vec![(0..nf).collect(); ng];
        let act_on_gamma = (0..ng).map(|g| vec![g; nf]).collect();
        MatchedPair { f, gamma, act_on_f, act_on_gamma }
    }

    /// `F = C₂`, `Γ = C₃`, `▷` trivial and `c ◁ t = c⁻¹`; the product is `S₃`.
    pub fn s3() -> MatchedPair {
        let f = Arc::new(make_cyclic(2));
        let gamma = Arc::new(make_cyclic(3));
        let act_on_f = vec![vec![0, 1]; 3];
        let act_on_gamma = (0..3).map(|g| vec![g, (3 - g) % 3]).collect();
        MatchedPair::new(f, gamma, act_on_f, act_on_gamma).expect("S3 pair is valid")
    }

    pub fn f(&self) -> &Arc<GroupTable> {
        &self.f
    }

    pub fn gamma(&self) -> &Arc<GroupTable> {
        &self.gamma
    }

    pub fn act_on_f(&self) -> &[Vec<usize>] {
        &self.act_on_f
    }

    pub fn act_on_gamma(&self) -> &[Vec<usize>] {
        &self.act_on_gamma
    }

    /// `g ▷ x`
    pub fn left(&self, g: ElemId, x: ElemId) -> ElemId {
        ElemId(self.act_on_f[g.0][x.0])
    }

    /// `g ◁ x`
    pub fn right(&self, g: ElemId, x: ElemId) -> ElemId {
        ElemId(self.act_on_gamma[g.0][x.0])
    }

    /// `(x, g)(x', g') = (x·(g ▷ x'), (g ◁ x')·g')`, with associativity
    /// checked on all triples.
    pub fn build(&self) -> Result<Bicrossed> {
        let (f, gm) = (&self.f, &self.gamma);
        let ng = gm.order();
        let n = f.order() * ng;
        let split = |i: usize| (ElemId(i / ng), ElemId(i % ng));
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                let (x, g) = split(a);
                (0..n)
                    .map(|b| {
                        let (x2, g2) = split(b);
                        let nx = f.mul(x, self.left(g, x2));
                        let ngm = gm.mul(self.right(g, x2), g2);
                        nx.0 * ng + ngm.0
                    })
                    .collect()
            })
            .collect();
        let names = (0..n)
            .map(|i| {
                let (x, g) = split(i);
                match (x.is_identity(), g.is_identity()) {
                    (true, true) => "e".to_string(),
                    (false, true) => f.name(x).to_string(),
                    (true, false) => gm.name(g).to_string(),
                    (false, false) => format!("({},{})", f.name(x), gm.name(g)),
                }
            })
            .collect();
        let group = Arc::new(
            GroupTable::from_table(table, Some(names))
                .map_err(|e| Error::MatchedPair(format!("actions are not compatible: {e}")))?,
        );
        let f_sub = Subgroup::from_members(&group, f.elements().map(|x| ElemId(x.0 * ng)))?;
        let gamma_sub = Subgroup::from_members(&group, gm.elements().map(|g| ElemId(g.0)))?;
        Ok(Bicrossed { pair: self.clone(), group, f_sub, gamma_sub })
    }
}

/// Normalized tables `σ_g(x, x')` and `τ_x(g, g')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionDatum {
    nf: usize,
    ng: usize,
    sigma: Vec<Phase>,
    tau: Vec<Phase>,
}

impl ExtensionDatum {
    pub fn zero(nf: usize, ng: usize) -> ExtensionDatum {
        ExtensionDatum { nf, ng, sigma: vec![Phase::ZERO; nf * nf * ng], tau: vec![Phase::ZERO; ng * ng * nf] }
    }

    /// Sparse construction; `sigma` entries are `[x, x', g]`, `tau`
    /// entries `[g, g', x]`.
    pub fn from_entries(
        nf: usize,
        ng: usize,
        sigma: impl IntoIterator<Item = ([usize; 3], Phase)>,
        tau: impl IntoIterator<Item = ([usize; 3], Phase)>,
    ) -> Result<ExtensionDatum> {
        let mut d = Self::zero(nf, ng);
        for ([x, x2, g], p) in sigma {
            if x >= nf || x2 >= nf || g >= ng {
                return Err(Error::IncompatibleDatum(format!("sigma index [{x},{x2},{g}] out of range")));
            }
            if !p.is_zero() && (x == 0 || x2 == 0) {
                return Err(Error::NotNormalized(vec![x, x2, g]));
            }
            d.sigma[(x * nf + x2) * ng + g] = p;
        }
        for ([g, g2, x], p) in tau {
            if g >= ng || g2 >= ng || x >= nf {
                return Err(Error::IncompatibleDatum(format!("tau index [{g},{g2},{x}] out of range")));
            }
            if !p.is_zero() && (g == 0 || g2 == 0) {
                return Err(Error::NotNormalized(vec![g, g2, x]));
            }
            d.tau[(g * ng + g2) * nf + x] = p;
        }
        Ok(d)
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.nf, self.ng)
    }

    /// `σ_g(x, x')`
    pub fn sigma(&self, x: ElemId, x2: ElemId, g: ElemId) -> Phase {
        self.sigma[(x.0 * self.nf + x2.0) * self.ng + g.0]
    }

    /// `τ_x(g, g')`
    pub fn tau(&self, g: ElemId, g2: ElemId, x: ElemId) -> Phase {
        self.tau[(g.0 * self.ng + g2.0) * self.nf + x.0]
    }

    pub fn sigma_entries(&self) -> impl Iterator<Item = ([usize; 3], Phase)> + '_ {
        let (nf, ng) = (self.nf, self.ng);
        self.sigma.iter().enumerate().filter(|(_, p)| !p.is_zero()).map(move |(i, &p)| ([i / (nf * ng), i / ng % nf, i % ng], p))
    }

    pub fn tau_entries(&self) -> impl Iterator<Item = ([usize; 3], Phase)> + '_ {
        let (nf, ng) = (self.nf, self.ng);
        self.tau.iter().enumerate().filter(|(_, p)| !p.is_zero()).map(move |(i, &p)| ([i / (ng * nf), i / nf % ng, i % nf], p))
    }

    pub fn is_zero(&self) -> bool {
        self.sigma.iter().chain(&self.tau).all(|p| p.is_zero())
    }
}

/// `ω(xg, x'g', x''g'') = τ_{x''}(g ◁ x', g') + σ_g(x', g' ▷ x'')`.
///
/// Data with `σ_e ≠ 0` or `τ_e ≠ 0` are refused: they make `ω` nontrivial on
/// `F`, respectively non-normalized on `Γ`.
pub fn omega_from_sigma_tau(bic: &Bicrossed, datum: &ExtensionDatum) -> Result<Cochain3> {
    let mp = &bic.pair;
    let (nf, ng) = (mp.f.order(), mp.gamma.order());
    if datum.dims() != (nf, ng) {
        return Err(Error::IncompatibleDatum("datum dimensions do not match the pair".into()));
    }
    let e = ElemId::IDENTITY;
    if mp.f.elements().any(|x| mp.f.elements().any(|x2| !datum.sigma(x, x2, e).is_zero())) {
        return Err(Error::IncompatibleDatum("σ_e must vanish".into()));
    }
    if mp.gamma.elements().any(|g| mp.gamma.elements().any(|g2| !datum.tau(g, g2, e).is_zero())) {
        return Err(Error::IncompatibleDatum("τ_e must vanish".into()));
    }
    let split = |i: ElemId| (ElemId(i.0 / ng), ElemId(i.0 % ng));
    let w = Cochain3::from_fn(&bic.group, |[a, b, c]| {
        let (_, g) = split(a);
        let (x2, g2) = split(b);
        let (x3, _) = split(c);
        datum.tau(mp.right(g, x2), g2, x3) + datum.sigma(x2, mp.left(g2, x3), g)
    })
    .map_err(|e| Error::IncompatibleDatum(format!("ω(σ,τ) is not normalized: {e}")))?;
    if let Some(at) = w.cocycle_defect() {
        return Err(Error::IncompatibleDatum(format!("ω(σ,τ) is not a 3-cocycle (defect at {at:?})")));
    }
    Ok(w)
}

/// For coprime `|F|`, `|Γ|`: `ω(σ,τ)` is a coboundary and the exponent of
/// the twisted double equals `exp G`.
pub fn coprime_split_check(bic: &Bicrossed, datum: &ExtensionDatum, cap: usize) -> Result<bool> {
    let (nf, ng) = (bic.pair.f.order(), bic.pair.gamma.order());
    if nf.gcd(&ng) != 1 {
        return Err(Error::Precondition(format!("|F| = {nf} and |Γ| = {ng} are not coprime")));
    }
    let w = omega_from_sigma_tau(bic, datum)?;
    let trivial = Solver2::new(&bic.group, cap)?.solve(&w)?.is_witness();
    Ok(trivial && exponent_via_pi(&w)? == bic.group.exponent())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Var {
    Sigma(usize, usize, usize),
    Tau(usize, usize, usize),
}

/// All data with values in `(1/m)Z/Z` whose `ω(σ,τ)` is a cocycle, as a
/// subgroup of `(Z/m)^k` given by generators with their periods.
#[derive(Clone, Debug)]
pub struct DatumLattice {
    nf: usize,
    ng: usize,
    modulus: u64,
    vars: Vec<Var>,
    gens: Vec<(Vec<u64>, u64)>,
}

impl DatumLattice {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of distinct data, saturating.
    pub fn size(&self) -> u128 {
        self.gens.iter().fold(1u128, |acc, (_, p)| acc.saturating_mul(*p as u128))
    }

    /// Datum for coefficients `c_i ∈ [0, period_i)`.
    pub fn datum(&self, coeffs: &[u64]) -> ExtensionDatum {
        let m = self.modulus;
        let mut u = vec![0u64; self.vars.len()];
        for ((v, _), &c) in self.gens.iter().zip(coeffs) {
            for (ui, vi) in u.iter_mut().zip(v) {
                *ui = (*ui + vi * c) % m;
            }
        }
        let mut d = ExtensionDatum::zero(self.nf, self.ng);
        for (var, ui) in self.vars.iter().zip(u) {
            let p = Phase::new(ui as i64, m as i64);
            match *var {
                Var::Sigma(x, x2, g) => d.sigma[(x * self.nf + x2) * self.ng + g] = p,
                Var::Tau(g, g2, x) => d.tau[(g * self.ng + g2) * self.nf + x] = p,
            }
        }
        d
    }

    /// Every element when there are at most `limit` of them.
    pub fn enumerate(&self, limit: u128) -> Option<Vec<ExtensionDatum>> {
        if self.size() > limit {
            return None;
        }
        let mut out = Vec::new();
        let mut c = vec![0u64; self.gens.len()];
        loop {
            out.push(self.datum(&c));
            let mut k = c.len();
            loop {
                if k == 0 {
                    return Some(out);
                }
                k -= 1;
                c[k] += 1;
                if c[k] < self.gens[k].1 {
                    break;
                }
                c[k] = 0;
            }
        }
    }

    pub fn sample<R: Rng>(&self, rng: &mut R, count: usize) -> Vec<ExtensionDatum> {
        (0..count)
            .map(|_| {
                let c: Vec<u64> = self.gens.iter().map(|(_, p)| rng.gen_range(0..*p)).collect();
                self.datum(&c)
            })
            .collect()
    }
}

/// Solves the linear cocycle condition on `ω(σ,τ)` modulo `m` by Smith
/// normal form.
pub fn accepted_data_lattice(bic: &Bicrossed, m: u64) -> Result<DatumLattice> {
    let mp = &bic.pair;
    let (nf, ng) = (mp.f.order(), mp.gamma.order());
    let mut vars = Vec::new();
    let mut sigma_idx = vec![usize::MAX; nf * nf * ng];
    let mut tau_idx = vec![usize::MAX; ng * ng * nf];
    for x in 1..nf {
        for x2 in 1..nf {
            for g in 1..ng {
                sigma_idx[(x * nf + x2) * ng + g] = vars.len();
                vars.push(Var::Sigma(x, x2, g));
            }
        }
    }
    for g in 1..ng {
        for g2 in 1..ng {
            for x in 1..nf {
                tau_idx[(g * ng + g2) * nf + x] = vars.len();
                vars.push(Var::Tau(g, g2, x));
            }
        }
    }
    let k = vars.len();
    let grp = &bic.group;
    let n = grp.order();
    let split = |i: ElemId| (ElemId(i.0 / ng), ElemId(i.0 % ng));
    // ω(a, b, c) as at most two variables
    let form = |a: ElemId, b: ElemId, c: ElemId| -> [usize; 2] {
        let (_, g) = split(a);
        let (x2, g2) = split(b);
        let (x3, _) = split(c);
        let t = tau_idx[(mp.right(g, x2).0 * ng + g2.0) * nf + x3.0];
        let s = sigma_idx[(x2.0 * nf + mp.left(g2, x3).0) * ng + g.0];
        [t, s]
    };
    let mut rows = Vec::new();
    for a in 1..n {
        for b in 1..n {
            for c in 1..n {
                for d in 1..n {
                    let [a, b, c, d] = [a, b, c, d].map(ElemId);
                    let mut row = vec![0i64; k];
                    let terms = [
                        (form(b, c, d), 1),
                        (form(grp.mul(a, b), c, d), -1),
                        (form(a, grp.mul(b, c), d), 1),
                        (form(a, b, grp.mul(c, d)), -1),
                        (form(a, b, c), 1),
                    ];
                    for (vs, sgn) in terms {
                        for v in vs {
                            if v != usize::MAX {
                                row[v] += sgn;
                            }
                        }
                    }
                    if row.iter().any(|&r| r != 0) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    rows.sort();
    rows.dedup();
    let gens = if k == 0 {
        Vec::new()
    } else {
        let matrix: Vec<Vec<BigInt>> = rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        let smith = smith_normal_form(matrix, k, &mut ());
        let mb = BigInt::from(m);
        (0..k)
            .map(|i| {
                let (step, period) = if i < smith.rank() {
                    let g = smith.diag[i].gcd(&mb).to_u64().expect("gcd fits");
                    (m / g, g)
                } else {
                    (1, m)
                };
                let col: Vec<u64> = (0..k)
                    .map(|r| {
                        let v = (&smith.v[r][i] * BigInt::from(step)).mod_floor(&mb);
                        v.to_u64().expect("reduced mod m")
                    })
                    .collect();
                (col, period)
            })
            .filter(|(_, p)| *p > 1)
            .collect()
    };
    Ok(DatumLattice { nf, ng, modulus: m, vars, gens })
}

pub const BUILTIN_PAIRS: &[&str] = &["s3", "c6", "d4", "d4c", "c2xc4", "c2xc2xc2"];

/// A named matched pair together with the builtin names of `F` and `Γ`.
/// `d4` is the first non-abelian pair on `C₂ × (C₂ × C₂)`, `d4c` the first
/// on `C₂ × C₄`.
pub fn builtin_pair(name: &str) -> Result<(MatchedPair, &'static str, &'static str)> {
    let c = |n| Arc::new(make_cyclic(n));
    let first_nonabelian = |f: Arc<GroupTable>, g: Arc<GroupTable>| {
        search_matched_pairs(&f, &g)
            .into_iter()
            .find(|mp| mp.build().is_ok_and(|b| !b.group.is_abelian()))
            .expect("a non-abelian pair exists")
    };
    let klein = || Arc::new(crate::group::direct_product(&make_cyclic(2), &make_cyclic(2)));
    Ok(match name {
        "s3" => (MatchedPair::s3(), "c2", "c3"),
        "c6" => (MatchedPair::trivial(c(2), c(3)), "c2", "c3"),
        "d4" => (first_nonabelian(c(2), klein()), "c2", "c2xc2"),
        "d4c" => (first_nonabelian(c(2), c(4)), "c2", "c4"),
        "c2xc4" => (MatchedPair::trivial(c(2), c(4)), "c2", "c4"),
        "c2xc2xc2" => (MatchedPair::trivial(c(2), klein()), "c2", "c2xc2"),
        _ => return Err(Error::Parse(format!("unknown builtin matched pair `{name}`"))),
    })
}

/// Every matched pair of `F` and `Γ` whose actions are bijective on each
/// side, found by exhaustive search. Intended for orders up to 8.
pub fn search_matched_pairs(f: &Arc<GroupTable>, gamma: &Arc<GroupTable>) -> Vec<MatchedPair> {
    let (nf, ng) = (f.order(), gamma.order());
    let perms_f = fixed_identity_perms(nf);
    let perms_g = fixed_identity_perms(ng);
    let mut out = Vec::new();
    let mut choice_f = vec![0usize; ng.saturating_sub(1)];
    loop {
        let mut choice_g = vec![0usize; nf.saturating_sub(1)];
        loop {
            let mut act_on_f = vec![(0..nf).collect::<Vec<_>>()];
            act_on_f.extend(choice_f.iter().map(|&c| perms_f[c].clone()));
            // act_on_gamma[g][x] = perm_x(g)
            let act_on_gamma: Vec<Vec<usize>> = (0..ng)
                .map(|g| (0..nf).map(|x| if x == 0 { g } else { perms_g[choice_g[x - 1]][g] }).collect())
                .collect();
            if let Ok(mp) = MatchedPair::new(f.clone(), gamma.clone(), act_on_f, act_on_gamma) {
                out.push(mp);
            }
            if !advance(&mut choice_g, perms_g.len()) {
                break;
            }
        }
        if !advance(&mut choice_f, perms_f.len()) {
            break;
        }
    }
    out
}

fn advance(c: &mut [usize], radix: usize) -> bool {
    for slot in c.iter_mut().rev() {
        *slot += 1;
        if *slot < radix {
            return true;
        }
        *slot = 0;
    }
    false
}

/// Permutations of `0..n` fixing `0`, lexicographic.
fn fixed_identity_perms(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, n, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; n];
    if n > 0 {
        used[0] = true;
    }
    rec(&mut vec![0], &mut used, n, &mut out);
    out
}
