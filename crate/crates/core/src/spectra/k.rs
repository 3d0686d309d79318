use crate::error::{Error, Result};
use crate::homotopy::{abelianization, component, edge_path_group, homology, pi0, AbelianGroup, PresentedGroup};
use crate::scat::{diag_nerve_iso, SimplicialCategory};

pub const HOMOLOGY_CAVEAT: &str = "homology approximation, not K_i";

/// `K₀`, `K₁` and the homology of the basepoint component, read off
/// `diag N•iso C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KReport {
    pub components: usize,
    pub basepoint_class: u32,
    pub k1: PresentedGroup,
    pub k1_abelian: AbelianGroup,
    /// `|K₁|` when at most `order_bound`
    pub k1_order: Option<usize>,
    pub order_bound: usize,
    /// `H₁` of the basepoint component
    pub h1: AbelianGroup,
    /// `(i, H_i)` for `2 ≤ i ≤ k`
    pub homology: Vec<(usize, AbelianGroup)>,
    pub caveat: &'static str,
}

impl KReport {
    /// Abelianized `K₁` agrees with `H₁`.
    pub fn is_consistent(&self) -> bool {
        self.k1_abelian == self.h1
    }
}

pub fn k_groups(c: &SimplicialCategory, k: usize, order_bound: usize) -> Result<KReport> {
    let y = diag_nerve_iso(c)?;
    let top = k.max(1);
    if y.bound() < top + 1 {
        return Err(Error::Uncertified { degree: top, bound: y.bound() });
    }
    let bp = y.basepoint().ok_or_else(|| Error::invalid("K-groups need a pointed category"))?;
    let comps = pi0(&y);
    let class = comps.of_vertex[bp as usize];
    let part = component(&y, &comps, class)?;
    let k1 = edge_path_group(&y, bp)?;
    let homology = (2..=k).map(|i| homology(&part, i).map(|h| (i, h))).collect::<Result<Vec<_>>>()?;
    Ok(KReport {
        components: comps.count,
        basepoint_class: class,
        k1_abelian: abelianization(&k1),
        k1_order: k1.bounded_order(order_bound)?,
        order_bound,
        h1: crate::homotopy::homology(&part, 1)?,
        k1,
        homology,
        caveat: HOMOLOGY_CAVEAT,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::FinCategory;

    #[test]
    fn cyclic_group_of_order_two() {
        let c = SimplicialCategory::constant(FinCategory::cyclic_group(2), 4).pointed_at(0).unwrap();
        let r = k_groups(&c, 3, 64).unwrap();
        assert_eq!(r.components, 1);
        assert_eq!(r.k1_order, Some(2));
        assert_eq!(r.k1_abelian, AbelianGroup::cyclic(2));
        assert_eq!(r.homology, vec![(2, AbelianGroup::trivial()), (3, AbelianGroup::cyclic(2))]);
        assert!(r.is_consistent());
    }

    #[test]
    fn terminal_and_s0() {
        let t = SimplicialCategory::terminal(3).pointed_at(0).unwrap();
        let r = k_groups(&t, 2, 64).unwrap();
        assert_eq!((r.components, r.k1_order), (1, Some(1)));
        assert!(r.homology.iter().all(|(_, h)| h.is_trivial()));
        let r = k_groups(&SimplicialCategory::s0(3), 2, 64).unwrap();
        assert_eq!((r.components, r.k1_order), (2, Some(1)));
        assert!(r.is_consistent());
    }

    #[test]
    fn degree_past_the_bound() {
        let c = SimplicialCategory::s0(2);
        assert!(matches!(k_groups(&c, 2, 8), Err(Error::Uncertified { .. })));
    }
}
