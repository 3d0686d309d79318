use std::sync::Arc;

use crate::cat::{fundamental_groupoid_of, induced_functor, FinCategory, Groupoid};
use crate::error::{Error, Result};
use crate::scat::category::{SimplicialCategory, SimplicialFunctor};
use crate::sset::{
    d_star_map, d_star_on, dec_map, dec_on, BidegreeShape, BisimplicialMap, BisimplicialSet, SimplicialMap, SimplicialSet,
};

/// Which left adjoint `sSet -> sCat` is used for tensors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RhoChoice {
    #[default]
    PiDec,
    PiDStar,
}

impl RhoChoice {
    pub fn name(self) -> &'static str {
        match self {
            RhoChoice::PiDec => "dec",
            RhoChoice::PiDStar => "dstar",
        }
    }
}

impl std::str::FromStr for RhoChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dec" | "pi_dec" => Ok(RhoChoice::PiDec),
            "dstar" | "pi_dstar" => Ok(RhoChoice::PiDStar),
            _ => Err(Error::invalid(format!("unknown rho choice {s:?}"))),
        }
    }
}

/// `π` applied row by row, keeping the rows and materialized groupoids so
/// that maps can be pushed through.
#[derive(Debug, Clone)]
pub struct PiLevelwise {
    pub category: Arc<SimplicialCategory>,
    pub rows: Vec<Arc<SimplicialSet>>,
    pub groupoids: Vec<Groupoid>,
}

/// Number of levels a shape supports: rows need bidegrees up to `p = 2`.
pub fn pi_bound(shape: &BidegreeShape) -> Option<usize> {
    if !shape.contains(2, 0) {
        return None;
    }
    shape.max_q(2)
}

/// Level `n` is the fundamental groupoid of the row `q = n`; vertical
/// operators induce the structure functors.
pub fn pi_levelwise_full(b: &BisimplicialSet, closure_bound: usize) -> Result<PiLevelwise> {
    let levels = pi_bound(b.shape()).ok_or(Error::InsufficientShape("rows with 2-simplices"))?;
    let mut rows = Vec::with_capacity(levels + 1);
    let mut groupoids = Vec::with_capacity(levels + 1);
    for q in 0..=levels {
        let row = Arc::new(b.row(q)?.truncate(2)?);
        let g = fundamental_groupoid_of(&row, closure_bound).map_err(|e| e.with_context(format!("row {q}")))?;
        rows.push(row);
        groupoids.push(g);
    }
    let cats: Vec<Arc<FinCategory>> = groupoids.iter().map(|g| Arc::new(g.category.clone())).collect();
    let vmap = |q: usize, to: usize, f: &dyn Fn(usize, u32) -> u32| -> Result<SimplicialMap> {
        let comps = (0..=2).map(|p| (0..b.size(p, q) as u32).map(|x| f(p, x)).collect()).collect();
        SimplicialMap::new_unchecked(rows[q].clone(), rows[to].clone(), comps)
    };
    let category = SimplicialCategory::from_fn(
        levels,
        |n| Ok(cats[n].clone()),
        |n, i, _, _| {
            let m = vmap(n, n - 1, &|p, x| b.vface(p, n, i, x))?;
            induced_functor(&m, &groupoids[n], &cats[n], &groupoids[n - 1], &cats[n - 1])
        },
        |n, j, _, _| {
            let m = vmap(n, n + 1, &|p, x| b.vdegen(p, n, j, x))?;
            induced_functor(&m, &groupoids[n], &cats[n], &groupoids[n + 1], &cats[n + 1])
        },
    )?;
    let category = category.with_basepoint(b.basepoint().map(|v| {
        (0..=levels).map(|q| (0..q).fold(v, |x, k| b.vdegen(0, k, 0, x))).collect()
    }))?;
    Ok(PiLevelwise { category: Arc::new(category), rows, groupoids })
}

pub fn pi_levelwise(b: &BisimplicialSet, closure_bound: usize) -> Result<SimplicialCategory> {
    Ok(Arc::try_unwrap(pi_levelwise_full(b, closure_bound)?.category).unwrap_or_else(|a| (*a).clone()))
}

/// `π•(f)` for a bisimplicial map between the inputs of `source` and `target`.
pub fn pi_levelwise_map(f: &BisimplicialMap, source: &PiLevelwise, target: &PiLevelwise) -> Result<SimplicialFunctor> {
    let levels = source.category.bound();
    if target.category.bound() < levels {
        return Err(Error::BoundMismatch { left: levels, right: target.category.bound() });
    }
    let functors = (0..=levels)
        .map(|q| {
            let m = f.row(q, &source.rows[q], &target.rows[q])?;
            induced_functor(&m, &source.groupoids[q], source.category.level(q), &target.groupoids[q], target.category.level(q))
        })
        .collect::<Result<Vec<_>>>()?;
    SimplicialFunctor::new_unchecked(source.category.clone(), target.category.clone(), functors)
}

/// Shape used for `ρ X` with `levels + 1` levels: rows `q <= levels`, `p <= 2`.
pub fn rho_shape(levels: usize) -> BidegreeShape {
    BidegreeShape::rectangle(2, levels)
}

/// The bisimplicial set behind `ρ X` on the given number of levels; the
/// input needs bound `levels + 3`.
pub fn rho_input(x: &SimplicialSet, rho: RhoChoice, levels: usize) -> Result<BisimplicialSet> {
    if x.bound() < levels + 3 {
        return Err(Error::BoundTooSmall { bound: x.bound(), reason: format!("{} levels of rho need bound {}", levels + 1, levels + 3) });
    }
    let x = x.truncate(levels + 3)?;
    let shape = rho_shape(levels);
    match rho {
        RhoChoice::PiDec => dec_on(&x, &shape),
        RhoChoice::PiDStar => d_star_on(&x, &shape),
    }
}

/// `ρ X` with levels `0..=levels`.
pub fn rho(x: &SimplicialSet, rho: RhoChoice, levels: usize, closure_bound: usize) -> Result<PiLevelwise> {
    pi_levelwise_full(&rho_input(x, rho, levels)?, closure_bound)
}

/// `ρ f` between already computed `ρ` of the source and target.
pub fn rho_map(f: &SimplicialMap, choice: RhoChoice, source: &PiLevelwise, target: &PiLevelwise) -> Result<SimplicialFunctor> {
    let levels = source.category.bound();
    let sx = Arc::new(f.source().truncate(levels + 3)?);
    let tx = Arc::new(f.target().truncate(levels + 3)?);
    let g = SimplicialMap::new_unchecked(sx, tx, f.components()[..=levels + 3].to_vec())?;
    let shape = rho_shape(levels);
    let b = match choice {
        RhoChoice::PiDec => dec_map(&g, Some(&shape))?,
        RhoChoice::PiDStar => d_star_map(&g, Some(&shape))?,
    };
    pi_levelwise_map(&b, source, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::FinCategory;
    use crate::sset::{box_product, d_star, dec};
    use crate::sset::standard::{delta, point, sphere};

    #[test]
    fn pi_of_dstar_interval() {
        let b = d_star(&delta(1, 6).unwrap()).unwrap();
        let c = pi_levelwise(&b, 1000).unwrap();
        assert!(c.audit().is_empty());
        for n in 0..=c.bound() {
            let l = c.level(n);
            // (n + 2) disjoint chaotic groupoids on 2 objects
            assert_eq!(l.object_count(), 2 * (n + 2));
            assert_eq!(l.morphism_count(), 4 * (n + 2));
            assert!(l.is_groupoid());
        }
    }

    #[test]
    fn pi_of_dec_circle_has_one_component_less_than_objects() {
        let b = dec(&sphere(1, 6).unwrap()).unwrap();
        let c = pi_levelwise(&b, 1000).unwrap();
        assert!(c.audit().is_empty());
        for q in 0..=c.bound() {
            let l = c.level(q);
            assert_eq!(l.object_count(), q + 2);
            assert!(l.is_groupoid());
            // one chaotic pair plus q singletons
            assert_eq!(l.morphism_count(), q + 4);
        }
    }

    #[test]
    fn pi_of_point_is_terminal() {
        let p = point(3).unwrap();
        let c = pi_levelwise(&box_product(&p, &p).unwrap(), 10).unwrap();
        assert_eq!(c, SimplicialCategory::terminal(3));
        let r = rho(&point(4).unwrap(), RhoChoice::PiDec, 1, 10).unwrap();
        assert!(r.category.levels().iter().all(|l| **l == FinCategory::terminal()));
    }
}
