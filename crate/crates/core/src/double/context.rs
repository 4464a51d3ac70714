use std::sync::Arc;

use crate::cohomology::Cochain3;
use crate::error::Result;
use crate::group::{ElemId, GroupTable};
use crate::phase::Phase;

/// A 3-cocycle together with the tabulated structure constants of its
/// twisted double.
pub struct DoubleContext {
    group: Arc<GroupTable>,
    omega: Cochain3,
    theta: Vec<Phase>,
    gamma: Vec<Phase>,
}

/// `θ_g(x, y) = ω(g,x,y) + ω(x,y,(xy)⁻¹g(xy)) − ω(x, x⁻¹gx, y)`.
pub fn theta(omega: &Cochain3, g: ElemId, x: ElemId, y: ElemId) -> Phase {
    let grp = omega.group();
    let xy = grp.mul(x, y);
    omega.get([g, x, y]) + omega.get([x, y, grp.conj(g, xy)]) - omega.get([x, grp.conj(g, x), y])
}

/// `γ_x(s, t) = ω(s,t,x) + ω(x, x⁻¹sx, x⁻¹tx) − ω(s, x, x⁻¹tx)`.
pub fn gamma(omega: &Cochain3, x: ElemId, s: ElemId, t: ElemId) -> Phase {
    let grp = omega.group();
    let tx = grp.conj(t, x);
    omega.get([s, t, x]) + omega.get([x, grp.conj(s, x), tx]) - omega.get([s, x, tx])
}

impl DoubleContext {
    pub fn new(omega: Cochain3) -> Result<Arc<DoubleContext>> {
        omega.ensure_cocycle()?;
        Ok(Arc::new(Self::tabulate(omega)))
    }

    fn tabulate(omega: Cochain3) -> DoubleContext {
        let group = omega.group().clone();
        let n = group.order();
        let mut theta_t = Vec::with_capacity(n * n * n);
        let mut gamma_t = Vec::with_capacity(n * n * n);
        for a in group.elements() {
            for b in group.elements() {
                for c in group.elements() {
                    theta_t.push(theta(&omega, a, b, c));
                    gamma_t.push(gamma(&omega, a, b, c));
                }
            }
        }
        DoubleContext { group, omega, theta: theta_t, gamma: gamma_t }
    }

    /// Same cocycle with `θ_g(x, y)` shifted by `delta`. Only meant for
    /// fault-injection tests; the result is not a quasi-Hopf algebra.
    #[doc(hidden)]
    pub fn corrupt_theta(omega: Cochain3, g: ElemId, x: ElemId, y: ElemId, delta: Phase) -> Arc<DoubleContext> {
        let mut ctx = Self::tabulate(omega);
        let n = ctx.group.order();
        ctx.theta[(g.0 * n + x.0) * n + y.0] += delta;
        Arc::new(ctx)
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn omega(&self) -> &Cochain3 {
        &self.omega
    }

    #[inline]
    pub fn theta(&self, g: ElemId, x: ElemId, y: ElemId) -> Phase {
        let n = self.group.order();
        self.theta[(g.0 * n + x.0) * n + y.0]
    }

    #[inline]
    pub fn gamma(&self, x: ElemId, s: ElemId, t: ElemId) -> Phase {
        let n = self.group.order();
        self.gamma[(x.0 * n + s.0) * n + t.0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::cyclic_standard_cocycle;
    use crate::group::make_cyclic;

    fn c3_ctx() -> Arc<DoubleContext> {
        let g = Arc::new(make_cyclic(3));
        DoubleContext::new(cyclic_standard_cocycle(&g, Phase::new(1, 3)).unwrap()).unwrap()
    }

    #[test]
    fn theta_on_c3() {
        let ctx = c3_ctx();
        let (a, a2) = (ElemId(1), ElemId(2));
        // ω(a²,a²,a²) + ω(a²,a²,a) − ω(a²,a²,a²) with q₂₂ = 1
        let w = ctx.omega();
        assert_eq!(w.get([a2, a2, a2]), Phase::new(2, 3));
        assert_eq!(w.get([a2, a2, a]), Phase::new(1, 3));
        assert_eq!(ctx.theta(a, a2, a2), w.get([a, a2, a2]) + w.get([a2, a2, a]) - w.get([a2, a, a2]));
        assert_eq!(ctx.theta(a, a2, a2), Phase::new(1, 3));
        for g in ctx.group().elements() {
            for y in ctx.group().elements() {
                assert!(ctx.theta(g, ElemId(0), y).is_zero());
                assert!(ctx.gamma(ElemId(0), g, y).is_zero());
            }
        }
    }

    #[test]
    fn gamma_on_c3() {
        let ctx = c3_ctx();
        let (a, a2) = (ElemId(1), ElemId(2));
        assert!(ctx.gamma(a, a, a).is_zero());
        // abelian: γ_a(s,t) = ω(s,t,a) + ω(a,s,t) − ω(s,a,t)
        let w = ctx.omega();
        assert_eq!(ctx.gamma(a, a2, a2), w.get([a2, a2, a]) + w.get([a, a2, a2]) - w.get([a2, a, a2]));
    }
}
