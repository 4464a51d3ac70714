use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::context::DoubleContext;
use crate::error::{Error, Result};
use crate::group::ElemId;
use crate::phase::Phase;

/// Largest tensor degree a monomial may have.
pub const MAX_DEGREE: usize = 4;

pub type Tuple = [ElemId; MAX_DEGREE];

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Term {
    part: u64,
    phase: Phase,
}

/// An element `Σ_ḡ c_ḡ · (e_{g_1}#x_1 ⊗ … ⊗ e_{g_d}#x_d)` of `D^ω(G)^{⊗d}`
/// with at most one group part `x̄` per grade tuple `ḡ`. Missing grades have
/// coefficient zero; the empty monomial is the zero element.
#[derive(Clone)]
pub struct Monomial {
    ctx: Arc<DoubleContext>,
    degree: usize,
    terms: BTreeMap<u64, Term>,
}

/// Human-readable form of one term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialRecord {
    pub grade: Vec<String>,
    pub part: Vec<String>,
    pub phase: String,
}

impl Monomial {
    fn check_degree(degree: usize) -> Result<()> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::Precondition(format!("tensor degree {degree} outside 1..={MAX_DEGREE}")));
        }
        Ok(())
    }

    pub fn zero(ctx: &Arc<DoubleContext>, degree: usize) -> Result<Monomial> {
        Self::check_degree(degree)?;
        Ok(Monomial { ctx: ctx.clone(), degree, terms: BTreeMap::new() })
    }

    /// Builds a monomial by visiting every grade tuple.
    pub fn from_fn(
        ctx: &Arc<DoubleContext>,
        degree: usize,
        mut f: impl FnMut(&[ElemId]) -> Option<(Tuple, Phase)>,
    ) -> Result<Monomial> {
        let mut m = Self::zero(ctx, degree)?;
        let n = ctx.group().order() as u64;
        for code in 0..n.pow(degree as u32) {
            let g = m.decode(code);
            if let Some((x, p)) = f(&g[..degree]) {
                let part = m.encode(&x[..degree]);
                m.terms.insert(code, Term { part, phase: p });
            }
        }
        Ok(m)
    }

    /// Explicit term list; a repeated grade is an error.
    pub fn from_terms(
        ctx: &Arc<DoubleContext>,
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<ElemId>, Vec<ElemId>, Phase)>,
    ) -> Result<Monomial> {
        let mut m = Self::zero(ctx, degree)?;
        let n = ctx.group().order();
        for (g, x, p) in terms {
            if g.len() != degree || x.len() != degree || g.iter().chain(&x).any(|e| e.0 >= n) {
                return Err(Error::MonomialMismatch);
            }
            let (gc, xc) = (m.encode(&g), m.encode(&x));
            m.insert(gc, Term { part: xc, phase: p })?;
        }
        Ok(m)
    }

    pub fn identity(ctx: &Arc<DoubleContext>, degree: usize) -> Result<Monomial> {
        Self::from_fn(ctx, degree, |_| Some(([ElemId::IDENTITY; MAX_DEGREE], Phase::ZERO)))
    }

    /// The basis element `e_g # x`.
    pub fn basis(ctx: &Arc<DoubleContext>, g: ElemId, x: ElemId) -> Monomial {
        Self::from_terms(ctx, 1, [(vec![g], vec![x], Phase::ZERO)]).expect("valid basis element")
    }

    pub fn context(&self) -> &Arc<DoubleContext> {
        &self.ctx
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    fn encode(&self, t: &[ElemId]) -> u64 {
        let n = self.ctx.group().order() as u64;
        t.iter().fold(0, |acc, e| acc * n + e.0 as u64)
    }

    #[inline]
    fn decode(&self, mut code: u64) -> Tuple {
        let n = self.ctx.group().order() as u64;
        let mut t = [ElemId::IDENTITY; MAX_DEGREE];
        for slot in t[..self.degree].iter_mut().rev() {
            *slot = ElemId((code % n) as usize);
            code /= n;
        }
        t
    }

    fn insert(&mut self, grade: u64, term: Term) -> Result<()> {
        match self.terms.entry(grade) {
            Entry::Vacant(v) => {
                v.insert(term);
                Ok(())
            }
            Entry::Occupied(_) => {
                let g = self.decode(grade);
                let names: Vec<&str> = g[..self.degree].iter().map(|&e| self.ctx.group().name(e)).collect();
                Err(Error::LeavesMonomialClass(format!("two terms at grade ({})", names.join(","))))
            }
        }
    }

    /// Terms as `(grade, part, phase)` in grade order.
    pub fn terms(&self) -> impl Iterator<Item = (Tuple, Tuple, Phase)> + '_ {
        self.terms.iter().map(|(&g, t)| (self.decode(g), self.decode(t.part), t.phase))
    }

    pub fn get(&self, grade: &[ElemId]) -> Option<(Tuple, Phase)> {
        self.terms.get(&self.encode(grade)).map(|t| (self.decode(t.part), t.phase))
    }

    fn compatible(&self, other: &Monomial) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) && self.degree == other.degree {
            Ok(())
        } else {
            Err(Error::MonomialMismatch)
        }
    }

    /// Product in `D^ω(G)^{⊗d}`: `(e_g#x)(e_h#y) = δ_{g,xhx⁻¹} θ_g(x,y) e_g#xy`
    /// in every tensor slot.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.compatible(other)?;
        let grp = self.ctx.group();
        let d = self.degree;
        let mut out = Monomial { ctx: self.ctx.clone(), degree: d, terms: BTreeMap::new() };
        for (&gc, t) in &self.terms {
            let g = self.decode(gc);
            let x = self.decode(t.part);
            let mut h = [ElemId::IDENTITY; MAX_DEGREE];
            for i in 0..d {
                h[i] = grp.conj(g[i], x[i]);
            }
            let Some(u) = other.terms.get(&self.encode(&h[..d])) else { continue };
            let y = self.decode(u.part);
            let mut xy = [ElemId::IDENTITY; MAX_DEGREE];
            let mut phase = t.phase + u.phase;
            for i in 0..d {
                xy[i] = grp.mul(x[i], y[i]);
                phase += self.ctx.theta(g[i], x[i], y[i]);
            }
            let part = self.encode(&xy[..d]);
            out.terms.insert(gc, Term { part, phase });
        }
        Ok(out)
    }

    pub fn pow(&self, n: u64) -> Monomial {
        let mut acc = Self::identity(&self.ctx, self.degree).expect("degree already validated");
        for _ in 0..n {
            acc = acc.mul(self).expect("same context");
        }
        acc
    }

    /// Whether this is the unit of `D^ω(G)^{⊗d}`.
    pub fn is_identity(&self) -> bool {
        let n = self.ctx.group().order() as u64;
        self.terms.len() as u64 == n.pow(self.degree as u32)
            && self.terms.values().all(|t| t.part == 0 && t.phase.is_zero())
    }

    /// Least `k ≤ bound` with `self^k = 1`.
    pub fn order(&self, bound: u64) -> Result<u64> {
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_identity() {
                return Ok(k);
            }
            acc = acc.mul(self)?;
        }
        Err(Error::BoundExceeded(bound))
    }

    /// Two-sided inverse; fails when the element is not invertible inside the
    /// monomial class.
    pub fn inverse(&self) -> Result<Monomial> {
        let grp = self.ctx.group();
        let d = self.degree;
        let mut out = Monomial { ctx: self.ctx.clone(), degree: d, terms: BTreeMap::new() };
        for (&gc, t) in &self.terms {
            let g = self.decode(gc);
            let x = self.decode(t.part);
            let mut h = [ElemId::IDENTITY; MAX_DEGREE];
            let mut xi = [ElemId::IDENTITY; MAX_DEGREE];
            let mut phase = -t.phase;
            for i in 0..d {
                h[i] = grp.conj(g[i], x[i]);
                xi[i] = grp.inv(x[i]);
                phase -= self.ctx.theta(g[i], x[i], xi[i]);
            }
            let (hc, part) = (self.encode(&h[..d]), self.encode(&xi[..d]));
            out.insert(hc, Term { part, phase })?;
        }
        let one = Self::identity(&self.ctx, d)?;
        if self.mul(&out)? != one || out.mul(self)? != one {
            return Err(Error::LeavesMonomialClass("element is not invertible".into()));
        }
        Ok(out)
    }

    /// `Δ` applied to the tensor factor at `slot` (0-based).
    pub fn delta_at(&self, slot: usize) -> Result<Monomial> {
        if slot >= self.degree {
            return Err(Error::Precondition(format!("slot {slot} outside degree {}", self.degree)));
        }
        let d = self.degree + 1;
        Self::check_degree(d)?;
        let grp = self.ctx.group();
        let mut out = Monomial { ctx: self.ctx.clone(), degree: d, terms: BTreeMap::new() };
        for (&gc, t) in &self.terms {
            let g = self.decode(gc);
            let x = self.decode(t.part);
            for s in grp.elements() {
                let tt = grp.mul(grp.inv(s), g[slot]);
                let mut ng = [ElemId::IDENTITY; MAX_DEGREE];
                let mut nx = [ElemId::IDENTITY; MAX_DEGREE];
                let mut j = 0;
                for i in 0..self.degree {
                    if i == slot {
                        ng[j] = s;
                        ng[j + 1] = tt;
                        nx[j] = x[i];
                        nx[j + 1] = x[i];
                        j += 2;
                    } else {
                        ng[j] = g[i];
                        nx[j] = x[i];
                        j += 1;
                    }
                }
                let phase = t.phase + self.ctx.gamma(x[slot], s, tt);
                let (code, part) = (out.encode(&ng[..d]), out.encode(&nx[..d]));
                out.terms.insert(code, Term { part, phase });
            }
        }
        Ok(out)
    }

    /// The antipode `S(e_g#x) = [−θ_{g⁻¹}(x,x⁻¹) − γ_x(g,g⁻¹)] e_{x⁻¹g⁻¹x}#x⁻¹`
    /// applied to the tensor factor at `slot`.
    pub fn antipode_at(&self, slot: usize) -> Result<Monomial> {
        if slot >= self.degree {
            return Err(Error::Precondition(format!("slot {slot} outside degree {}", self.degree)));
        }
        let grp = self.ctx.group();
        let d = self.degree;
        let mut out = Monomial { ctx: self.ctx.clone(), degree: d, terms: BTreeMap::new() };
        for (&gc, t) in &self.terms {
            let mut g = self.decode(gc);
            let mut x = self.decode(t.part);
            let (gs, xs) = (g[slot], x[slot]);
            let (gi, xi) = (grp.inv(gs), grp.inv(xs));
            let phase = t.phase - self.ctx.theta(gi, xs, xi) - self.ctx.gamma(xs, gs, gi);
            g[slot] = grp.conj(gi, xs);
            x[slot] = xi;
            let (code, part) = (self.encode(&g[..d]), self.encode(&x[..d]));
            out.insert(code, Term { part, phase })?;
        }
        Ok(out)
    }

    pub fn antipode(&self) -> Result<Monomial> {
        self.require_degree(1)?;
        self.antipode_at(0)
    }

    fn require_degree(&self, d: usize) -> Result<()> {
        if self.degree == d {
            Ok(())
        } else {
            Err(Error::Precondition(format!("expected degree {d}, found {}", self.degree)))
        }
    }

    /// `ε(e_g#x) = δ_{g,e}`; `None` stands for the scalar zero.
    pub fn counit(&self) -> Result<Option<Phase>> {
        self.require_degree(1)?;
        Ok(self.terms.get(&0).map(|t| t.phase))
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &Monomial) -> Result<Monomial> {
        if !Arc::ptr_eq(&self.ctx, &other.ctx) {
            return Err(Error::MonomialMismatch);
        }
        let d = self.degree + other.degree;
        Self::check_degree(d)?;
        let shift = (self.ctx.group().order() as u64).pow(other.degree as u32);
        let mut out = Monomial { ctx: self.ctx.clone(), degree: d, terms: BTreeMap::new() };
        for (&ga, ta) in &self.terms {
            for (&gb, tb) in &other.terms {
                out.terms.insert(ga * shift + gb, Term { part: ta.part * shift + tb.part, phase: ta.phase + tb.phase });
            }
        }
        Ok(out)
    }

    /// Reorders tensor factors: factor `i` of the result is factor `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Monomial> {
        let d = self.degree;
        let mut seen = vec![false; d];
        if perm.len() != d || perm.iter().any(|&p| p >= d || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Precondition("not a permutation of the tensor factors".into()));
        }
        let mut out = Monomial { ctx: self.ctx.clone(), degree: d, terms: BTreeMap::new() };
        for (&gc, t) in &self.terms {
            let (g, x) = (self.decode(gc), self.decode(t.part));
            let mut ng = [ElemId::IDENTITY; MAX_DEGREE];
            let mut nx = [ElemId::IDENTITY; MAX_DEGREE];
            for i in 0..d {
                ng[i] = g[perm[i]];
                nx[i] = x[perm[i]];
            }
            let (code, part) = (self.encode(&ng[..d]), self.encode(&nx[..d]));
            out.terms.insert(code, Term { part, phase: t.phase });
        }
        Ok(out)
    }

    /// Multiplies every coefficient by the scalar `p`.
    pub fn scale(&self, p: Phase) -> Monomial {
        let mut out = self.clone();
        out.terms.values_mut().for_each(|t| t.phase += p);
        out
    }

    /// `self + other` when the grades are disjoint.
    pub fn add_disjoint(&mut self, other: &Monomial) -> Result<()> {
        self.compatible(other)?;
        for (&g, &t) in &other.terms {
            self.insert(g, t)?;
        }
        Ok(())
    }

    /// Splits every term into single-term degree-one factors, the coefficient
    /// carried by the first factor.
    pub fn factors(&self) -> impl Iterator<Item = Vec<Monomial>> + '_ {
        self.terms().map(move |(g, x, p)| {
            (0..self.degree)
                .map(|i| {
                    let phase = if i == 0 { p } else { Phase::ZERO };
                    Monomial::from_terms(&self.ctx, 1, [(vec![g[i]], vec![x[i]], phase)]).expect("single term")
                })
                .collect()
        })
    }

    /// Applies `f` to the factors of every term and adds up the results,
    /// which must land on pairwise distinct grades.
    pub fn contract(&self, out_degree: usize, mut f: impl FnMut(&[Monomial]) -> Result<Monomial>) -> Result<Monomial> {
        let mut acc = Self::zero(&self.ctx, out_degree)?;
        for fs in self.factors() {
            acc.add_disjoint(&f(&fs)?)?;
        }
        Ok(acc)
    }

    /// `m` (or `m ∘ flip` when `reversed`) on a degree-two monomial.
    pub fn multiply_out(&self, reversed: bool) -> Result<Monomial> {
        self.require_degree(2)?;
        self.contract(1, |f| if reversed { f[1].mul(&f[0]) } else { f[0].mul(&f[1]) })
    }

    /// Whether `a = Σ_g f(g) e_g # x` with `γ_x = df`, i.e. `Δ(a) = a ⊗ a`.
    pub fn is_group_like(&self) -> bool {
        if self.degree != 1 {
            return false;
        }
        let grp = self.ctx.group();
        let n = grp.order();
        if self.terms.len() != n {
            return false;
        }
        let x = self.terms[&0].part;
        if self.terms.values().any(|t| t.part != x) {
            return false;
        }
        let x = ElemId(x as usize);
        let f = |g: ElemId| self.terms[&(g.0 as u64)].phase;
        grp.elements().all(|s| grp.elements().all(|t| f(s) + f(t) - f(grp.mul(s, t)) == self.ctx.gamma(x, s, t)))
    }

    pub fn to_records(&self) -> Vec<MonomialRecord> {
        let grp = self.ctx.group();
        let names = |t: &Tuple| t[..self.degree].iter().map(|&e| grp.name(e).to_string()).collect();
        self.terms()
            .map(|(g, x, p)| MonomialRecord { grade: names(&g), part: names(&x), phase: p.to_string() })
            .collect()
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) && self.degree == other.degree && self.terms == other.terms
    }
}

impl Eq for Monomial {}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .to_records()
            .into_iter()
            .map(|r| {
                let factors: Vec<String> =
                    r.grade.iter().zip(&r.part).map(|(g, x)| format!("e_{g}#{x}")).collect();
                format!("[{}]{}", r.phase, factors.join("⊗"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{cyclic_standard_cocycle, Cochain3};
    use crate::group::{builtin_group, make_cyclic};

    fn ctx(name: &str, zeta: Option<Phase>) -> Arc<DoubleContext> {
        let g = Arc::new(builtin_group(name).unwrap());
        let w = match zeta {
            Some(z) => cyclic_standard_cocycle(&g, z).unwrap(),
            None => Cochain3::zero(&g),
        };
        DoubleContext::new(w).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let c = ctx("c3", Some(Phase::new(1, 3)));
        let one = Monomial::identity(&c, 1).unwrap();
        for g in c.group().elements() {
            for x in c.group().elements() {
                let b = Monomial::basis(&c, g, x);
                assert_eq!(one.mul(&b).unwrap(), b);
                assert_eq!(b.mul(&one).unwrap(), b);
            }
        }
        assert_eq!(one.pow(0), one);
        assert_eq!(one.order(1).unwrap(), 1);
    }

    #[test]
    fn delta_gate_and_untwisted_product() {
        let c = ctx("c3", None);
        let a = ElemId(1);
        let p = Monomial::basis(&c, a, a).mul(&Monomial::basis(&c, a, a)).unwrap();
        assert_eq!(p, Monomial::basis(&c, a, ElemId(2)));
        let s3 = ctx("s3", None);
        let grp = s3.group().clone();
        for g in grp.elements() {
            for x in grp.elements() {
                for h in grp.elements() {
                    let prod = Monomial::basis(&s3, g, x).mul(&Monomial::basis(&s3, h, ElemId(0))).unwrap();
                    let gate = g == grp.mul(grp.mul(x, h), grp.inv(x));
                    assert_eq!(prod.is_zero(), !gate);
                }
            }
        }
    }

    #[test]
    fn antipode_on_grade_only_elements() {
        let c = ctx("c4", Some(Phase::new(1, 4)));
        for g in c.group().elements() {
            let s = Monomial::basis(&c, g, ElemId(0)).antipode().unwrap();
            assert_eq!(s, Monomial::basis(&c, c.group().inv(g), ElemId(0)));
        }
        let one = Monomial::identity(&c, 1).unwrap();
        assert_eq!(one.antipode().unwrap(), one);
    }

    #[test]
    fn collisions_are_errors() {
        let c = ctx("c2", None);
        let r = Monomial::from_terms(
            &c,
            1,
            [(vec![ElemId(1)], vec![ElemId(0)], Phase::ZERO), (vec![ElemId(1)], vec![ElemId(1)], Phase::ZERO)],
        );
        assert!(matches!(r, Err(Error::LeavesMonomialClass(_))));
    }

    #[test]
    fn delta_of_basis_element() {
        let c = ctx("c3", Some(Phase::new(1, 3)));
        let a = ElemId(1);
        let d = Monomial::basis(&c, a, a).delta_at(0).unwrap();
        let grades: Vec<[usize; 2]> = d.terms().map(|(g, _, _)| [g[0].0, g[1].0]).collect();
        assert_eq!(grades, vec![[0, 1], [1, 0], [2, 2]]);
        for (g, x, p) in d.terms() {
            assert_eq!([x[0], x[1]], [a, a]);
            assert_eq!(p, c.gamma(a, g[0], g[1]));
        }
        let one = Monomial::identity(&c, 1).unwrap();
        assert_eq!(one.delta_at(0).unwrap(), Monomial::identity(&c, 2).unwrap());
        let trivial = ctx("c3", None);
        assert!(Monomial::basis(&trivial, a, a).delta_at(0).unwrap().terms().all(|(_, _, p)| p.is_zero()));
    }

    #[test]
    fn counit_values() {
        let c = ctx("c3", Some(Phase::new(1, 3)));
        assert_eq!(Monomial::identity(&c, 1).unwrap().counit().unwrap(), Some(Phase::ZERO));
        assert_eq!(Monomial::basis(&c, ElemId(1), ElemId(2)).counit().unwrap(), None);
    }

    #[test]
    fn tensor_and_flip() {
        let g = Arc::new(make_cyclic(2));
        let c = DoubleContext::new(Cochain3::zero(&g)).unwrap();
        let a = Monomial::basis(&c, ElemId(1), ElemId(0));
        let b = Monomial::basis(&c, ElemId(0), ElemId(1));
        let ab = a.tensor(&b).unwrap();
        assert_eq!(ab.permute(&[1, 0]).unwrap(), b.tensor(&a).unwrap());
        assert_eq!(ab.factors().next().unwrap(), vec![a, b]);
    }
}
