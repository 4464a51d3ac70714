use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::context::DoubleContext;
use super::monomial::{Monomial, MAX_DEGREE};
use crate::error::{Error, Result};
use crate::group::ElemId;
use crate::phase::Phase;

/// The distinguished elements of `D^ω(G)` and its tensor powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CanonicalKind {
    Beta,
    /// Drinfeld element.
    U,
    /// Ribbon element.
    V,
    VInv,
    Phi,
    PhiInv,
    R,
    R21,
    /// Monodromy `R₂₁R`, written down directly.
    R21R,
    /// `1 # x`.
    Group(ElemId),
    Identity(usize),
}

impl fmt::Display for CanonicalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalKind::Beta => write!(f, "beta"),
            CanonicalKind::U => write!(f, "u"),
            CanonicalKind::V => write!(f, "v"),
            CanonicalKind::VInv => write!(f, "v_inv"),
            CanonicalKind::Phi => write!(f, "phi"),
            CanonicalKind::PhiInv => write!(f, "phi_inv"),
            CanonicalKind::R => write!(f, "R"),
            CanonicalKind::R21 => write!(f, "R21"),
            CanonicalKind::R21R => write!(f, "R21R"),
            CanonicalKind::Group(x) => write!(f, "group:{}", x.0),
            CanonicalKind::Identity(d) => write!(f, "identity:{d}"),
        }
    }
}

impl FromStr for CanonicalKind {
    type Err = Error;

    /// Accepts the names printed by `Display`; `group:` takes an element index.
    fn from_str(s: &str) -> Result<Self> {
        let parse_index = |v: &str| v.parse::<usize>().map_err(|_| Error::Parse(format!("bad index in {s:?}")));
        Ok(match s {
            "beta" => CanonicalKind::Beta,
            "u" => CanonicalKind::U,
            "v" => CanonicalKind::V,
            "v_inv" => CanonicalKind::VInv,
            "phi" => CanonicalKind::Phi,
            "phi_inv" => CanonicalKind::PhiInv,
            "R" => CanonicalKind::R,
            "R21" => CanonicalKind::R21,
            "R21R" => CanonicalKind::R21R,
            _ => {
                if let Some(v) = s.strip_prefix("group:") {
                    CanonicalKind::Group(ElemId(parse_index(v)?))
                } else if let Some(v) = s.strip_prefix("identity:") {
                    CanonicalKind::Identity(parse_index(v)?)
                } else {
                    return Err(Error::Parse(format!("unknown canonical element {s:?}")));
                }
            }
        })
    }
}

fn tuple(xs: &[ElemId]) -> [ElemId; MAX_DEGREE] {
    let mut t = [ElemId::IDENTITY; MAX_DEGREE];
    t[..xs.len()].copy_from_slice(xs);
    t
}

pub fn canonical_element(ctx: &Arc<DoubleContext>, kind: CanonicalKind) -> Result<Monomial> {
    let grp = ctx.group().clone();
    let w = ctx.omega();
    let e = ElemId::IDENTITY;
    // ω(g, g⁻¹, g)
    let b = |g: ElemId| w.get([g, grp.inv(g), g]);
    match kind {
        CanonicalKind::Beta => Monomial::from_fn(ctx, 1, |g| Some((tuple(&[e]), b(g[0])))),
        CanonicalKind::U => Monomial::from_fn(ctx, 1, |g| Some((tuple(&[grp.inv(g[0])]), -b(g[0]).times(2)))),
        CanonicalKind::V => Monomial::from_fn(ctx, 1, |g| Some((tuple(&[grp.inv(g[0])]), -b(g[0])))),
        CanonicalKind::VInv => Monomial::from_fn(ctx, 1, |g| Some((tuple(&[g[0]]), Phase::ZERO))),
        CanonicalKind::Phi => Monomial::from_fn(ctx, 3, |g| Some((tuple(&[e, e, e]), -w.get([g[0], g[1], g[2]])))),
        CanonicalKind::PhiInv => Monomial::from_fn(ctx, 3, |g| Some((tuple(&[e, e, e]), w.get([g[0], g[1], g[2]])))),
        CanonicalKind::R => Monomial::from_fn(ctx, 2, |g| Some((tuple(&[e, g[0]]), Phase::ZERO))),
        CanonicalKind::R21 => Monomial::from_fn(ctx, 2, |g| Some((tuple(&[g[1], e]), Phase::ZERO))),
        CanonicalKind::R21R => {
            Monomial::from_fn(ctx, 2, |g| Some((tuple(&[g[1], grp.conj(g[0], g[1])]), Phase::ZERO)))
        }
        CanonicalKind::Group(x) => {
            if x.0 >= grp.order() {
                return Err(Error::Precondition(format!("element {} out of range", x.0)));
            }
            Monomial::from_fn(ctx, 1, |_| Some((tuple(&[x]), Phase::ZERO)))
        }
        CanonicalKind::Identity(d) => Monomial::identity(ctx, d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{cyclic_standard_cocycle, Cochain3};
    use crate::group::{builtin_group, make_cyclic};

    fn c3() -> Arc<DoubleContext> {
        let g = Arc::new(make_cyclic(3));
        DoubleContext::new(cyclic_standard_cocycle(&g, Phase::new(1, 3)).unwrap()).unwrap()
    }

    #[test]
    fn beta_on_c3() {
        let ctx = c3();
        let beta = canonical_element(&ctx, CanonicalKind::Beta).unwrap();
        let phases: Vec<Phase> = beta.terms().map(|(_, _, p)| p).collect();
        // ω(a, a², a) = ζ·1·q₁₂ = 1/3, ω(a², a, a²) = ζ·2·q₂₁ = 2/3
        assert_eq!(phases, vec![Phase::ZERO, Phase::new(1, 3), Phase::new(2, 3)]);
        assert_eq!(beta.order(10).unwrap(), 3);
        assert!(beta.pow(3).is_identity());
    }

    #[test]
    fn v_on_c3() {
        let ctx = c3();
        let v = canonical_element(&ctx, CanonicalKind::V).unwrap();
        let got: Vec<(usize, Phase)> = v.terms().map(|(_, x, p)| (x[0].0, p)).collect();
        assert_eq!(got, vec![(0, Phase::ZERO), (2, Phase::new(2, 3)), (1, Phase::new(1, 3))]);
        let vi = canonical_element(&ctx, CanonicalKind::VInv).unwrap();
        assert!(v.mul(&vi).unwrap().is_identity());
        assert!(vi.mul(&v).unwrap().is_identity());
        assert_eq!(v.antipode().unwrap(), v);
        assert_eq!(v.counit().unwrap(), Some(Phase::ZERO));
        assert!(!v.pow(3).is_group_like());
        assert!(v.pow(9).is_group_like());
    }

    #[test]
    fn trivial_cocycle_elements() {
        let g = Arc::new(builtin_group("s3").unwrap());
        let ctx = DoubleContext::new(Cochain3::zero(&g)).unwrap();
        let beta = canonical_element(&ctx, CanonicalKind::Beta).unwrap();
        assert!(beta.is_identity());
        for x in g.elements() {
            assert!(canonical_element(&ctx, CanonicalKind::Group(x)).unwrap().is_group_like());
        }
        let v = canonical_element(&ctx, CanonicalKind::V).unwrap();
        assert!(v.pow(g.exponent()).is_group_like());
    }

    #[test]
    fn monodromy_direct_and_as_product() {
        let ctx = c3();
        let r = canonical_element(&ctx, CanonicalKind::R).unwrap();
        let r21 = canonical_element(&ctx, CanonicalKind::R21).unwrap();
        assert_eq!(r.permute(&[1, 0]).unwrap(), r21);
        let direct = canonical_element(&ctx, CanonicalKind::R21R).unwrap();
        assert_eq!(r21.mul(&r).unwrap(), direct);
        assert_eq!(direct.order(9).unwrap(), 9);
    }

    #[test]
    fn kind_names_round_trip() {
        for k in [
            CanonicalKind::Beta,
            CanonicalKind::U,
            CanonicalKind::V,
            CanonicalKind::VInv,
            CanonicalKind::Phi,
            CanonicalKind::PhiInv,
            CanonicalKind::R,
            CanonicalKind::R21,
            CanonicalKind::R21R,
            CanonicalKind::Group(ElemId(2)),
            CanonicalKind::Identity(3),
        ] {
            assert_eq!(k.to_string().parse::<CanonicalKind>().unwrap(), k);
        }
        assert!("gamma".parse::<CanonicalKind>().is_err());
    }
}
