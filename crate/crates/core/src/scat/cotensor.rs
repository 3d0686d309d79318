use std::collections::HashMap;
use std::sync::Arc;

use crate::cat::{enumerate_transformations_where, FinCategory, Functor};
use crate::error::{Error, Result};
use crate::scat::category::{SimplicialCategory, SimplicialFunctor};
use crate::scat::enumerate::enumerate_simplicial_functors_fixing;
use crate::scat::pi::{rho, rho_map, RhoChoice};
use crate::scat::tensor::{tensor_levels, vertex_map};
use crate::sset::standard::{delta, sphere};
use crate::sset::colimit::vertices_of;
use crate::sset::{map_by_vertices, SimplicialMap, SimplicialSet};

/// A simplicial set viewed as a simplicial category with discrete levels.
pub fn discrete_scat(x: &SimplicialSet) -> Result<SimplicialCategory> {
    let levels: Vec<Arc<FinCategory>> = (0..=x.bound()).map(|m| Arc::new(FinCategory::discrete(x.size(m)))).collect();
    SimplicialCategory::from_fn(
        x.bound(),
        |m| Ok(levels[m].clone()),
        |m, i, s, t| {
            let map: Vec<u32> = (0..x.size(m) as u32).map(|y| x.face(m, i, y)).collect();
            Functor::new_unchecked(s.clone(), t.clone(), map.clone(), map)
        },
        |m, j, s, t| {
            let map: Vec<u32> = (0..x.size(m) as u32).map(|y| x.degen(m, j, y)).collect();
            Functor::new_unchecked(s.clone(), t.clone(), map.clone(), map)
        },
    )
}

/// A simplicial natural transformation: components per level, indexed by
/// source object.
type Components = Vec<Vec<u32>>;

/// One level `n` of the internal hom: simplicial functors out of
/// `ρX × Δⁿ` and the simplicial natural transformations between them.
struct HomLevel {
    source: Arc<SimplicialCategory>,
    /// `|Δⁿ_m|` per level `m`.
    simplices: Vec<u32>,
    functors: Vec<SimplicialFunctor>,
    functor_index: HashMap<Vec<Vec<u32>>, u32>,
    morphisms: Vec<(u32, u32, Components)>,
    morphism_index: HashMap<(u32, u32, Components), u32>,
    category: Arc<FinCategory>,
}

fn functor_key(f: &SimplicialFunctor) -> Vec<Vec<u32>> {
    f.levels().iter().flat_map(|l| [l.object_map().to_vec(), l.morphism_map().to_vec()]).collect()
}

/// Simplicial transformations `F => G`, with components fixed to identities
/// on the objects where `fixed` holds.
fn transformations(
    f: &SimplicialFunctor,
    g: &SimplicialFunctor,
    fixed: &dyn Fn(usize, u32) -> bool,
    cap: usize,
) -> Result<Vec<Components>> {
    let (p, c) = (f.source(), f.target());
    let mut out = Vec::new();
    let mut stack: Components = Vec::new();
    fn go(
        p: &SimplicialCategory,
        c: &SimplicialCategory,
        f: &SimplicialFunctor,
        g: &SimplicialFunctor,
        fixed: &dyn Fn(usize, u32) -> bool,
        cap: usize,
        stack: &mut Components,
        out: &mut Vec<Components>,
    ) -> Result<()> {
        let m = stack.len();
        if m == p.bound() + 1 {
            if out.len() >= cap {
                return Err(Error::CapExceeded { cap });
            }
            out.push(stack.clone());
            return Ok(());
        }
        let prev = stack.last().cloned();
        let ok = |o: u32, a: u32| {
            if fixed(m, o) && !c.level(m).is_identity(a) {
                return false;
            }
            let Some(prev) = &prev else { return true };
            (0..=m).all(|i| c.face(m, i).on_morphism(a) == prev[p.face(m, i).on_object(o) as usize])
        };
        for comps in enumerate_transformations_where(f.level(m), g.level(m), &ok, cap)? {
            // degeneracies out of level m - 1
            let degenerate_ok = match &prev {
                None => true,
                Some(prev) => (0..m).all(|j| {
                    (0..p.level(m - 1).object_count() as u32)
                        .all(|o| c.degen(m - 1, j).on_morphism(prev[o as usize]) == comps[p.degen(m - 1, j).on_object(o) as usize])
                }),
            };
            if degenerate_ok {
                stack.push(comps);
                go(p, c, f, g, fixed, cap, stack, out)?;
                stack.pop();
            }
        }
        Ok(())
    }
    go(p, c, f, g, fixed, cap, &mut stack, &mut out)?;
    Ok(out)
}

fn hom_level(
    rho_x: &Arc<SimplicialCategory>,
    x0: &[u32],
    c: &Arc<SimplicialCategory>,
    n: usize,
    cap: usize,
) -> Result<HomLevel> {
    let bound = c.bound();
    let dn = delta(n, bound)?;
    let source = Arc::new(rho_x.product(&discrete_scat(&dn)?)?);
    let simplices: Vec<u32> = (0..=bound).map(|m| dn.size(m) as u32).collect();
    let cb = c.basepoint().ok_or_else(|| Error::invalid("cotensor needs a pointed simplicial category"))?.to_vec();
    let at_base = |m: usize, o: u32| o / simplices[m] == x0[m];
    let fixed = |m: usize, o: u32| if at_base(m, o) { Some(cb[m]) } else { None };
    let functors = enumerate_simplicial_functors_fixing(&source, c, &fixed, cap)?;
    let functor_index: HashMap<Vec<Vec<u32>>, u32> = functors.iter().enumerate().map(|(i, f)| (functor_key(f), i as u32)).collect();
    let mut morphisms = Vec::new();
    for (a, f) in functors.iter().enumerate() {
        for (b, g) in functors.iter().enumerate() {
            for comps in transformations(f, g, &at_base, cap)? {
                morphisms.push((a as u32, b as u32, comps));
                if morphisms.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
            }
        }
    }
    let morphism_index: HashMap<(u32, u32, Components), u32> =
        morphisms.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
    let identity: Vec<u32> = functors
        .iter()
        .enumerate()
        .map(|(a, f)| {
            let comps = (0..=bound)
                .map(|m| (0..source.level(m).object_count() as u32).map(|o| c.level(m).identity(f.level(m).on_object(o))).collect())
                .collect();
            morphism_index[&(a as u32, a as u32, comps)]
        })
        .collect();
    let category = FinCategory::from_fn(
        functors.len(),
        morphisms.iter().map(|m| m.0).collect(),
        morphisms.iter().map(|m| m.1).collect(),
        identity,
        |g, f| {
            let (a, _, fc) = &morphisms[f as usize];
            let (_, b, gc) = &morphisms[g as usize];
            let comps = fc
                .iter()
                .zip(gc)
                .enumerate()
                .map(|(m, (x, y))| x.iter().zip(y).map(|(&x, &y)| c.level(m).compose(y, x)).collect())
                .collect();
            morphism_index[&(*a, *b, comps)]
        },
    )?;
    Ok(HomLevel { source, simplices, functors, functor_index, morphisms, morphism_index, category: Arc::new(category) })
}

/// The functor `hom_n -> hom_k` given by precomposition with `id × φ` for
/// a simplicial map `φ : Δᵏ -> Δⁿ`.
fn precompose(from: &HomLevel, to: &HomLevel, phi: &SimplicialMap, c: &Arc<SimplicialCategory>) -> Result<Functor> {
    let bound = c.bound();
    let pull_object = |m: usize, o: u32| (o / to.simplices[m]) * from.simplices[m] + phi.apply(m, o % to.simplices[m]);
    let objects = from
        .functors
        .iter()
        .map(|f| {
            let levels = (0..=bound)
                .map(|m| {
                    let src = to.source.level(m);
                    // discrete factor: morphism index equals object index
                    let objects = (0..src.object_count() as u32).map(|o| f.level(m).on_object(pull_object(m, o))).collect();
                    let morphisms = (0..src.morphism_count() as u32).map(|x| f.level(m).on_morphism(pull_object(m, x))).collect();
                    Functor::new_unchecked(src.clone(), c.level(m).clone(), objects, morphisms)
                })
                .collect::<Result<Vec<_>>>()?;
            let g = SimplicialFunctor::new_unchecked(to.source.clone(), c.clone(), levels)?;
            to.functor_index.get(&functor_key(&g)).copied().ok_or_else(|| Error::invalid("precomposite is not in the hom level"))
        })
        .collect::<Result<Vec<u32>>>()?;
    let morphisms = from
        .morphisms
        .iter()
        .map(|(a, b, comps)| {
            let pulled: Components = (0..=bound)
                .map(|m| (0..to.source.level(m).object_count() as u32).map(|o| comps[m][pull_object(m, o) as usize]).collect())
                .collect();
            to.morphism_index
                .get(&(objects[*a as usize], objects[*b as usize], pulled))
                .copied()
                .ok_or_else(|| Error::invalid("precomposite transformation is not in the hom level"))
        })
        .collect::<Result<Vec<u32>>>()?;
    Functor::new_unchecked(from.category.clone(), to.category.clone(), objects, morphisms)
}

/// `C^X` for pointed `C` and `X`: level `n` is the category of simplicial
/// functors `ρX × Δⁿ -> C` sending `{x₀} × Δⁿ` to the basepoint, with
/// transformations that are identities there.
pub fn cotensor(c: &SimplicialCategory, x: &SimplicialSet, choice: RhoChoice, closure_bound: usize, cap: usize) -> Result<SimplicialCategory> {
    let xb = x.basepoint().ok_or_else(|| Error::invalid("cotensor needs a pointed simplicial set"))?;
    let levels = tensor_levels(c, x)?;
    let c = Arc::new(c.truncate(levels)?);
    let x = Arc::new(x.clone());
    let r = rho(&x, choice, levels, closure_bound)?;
    let v = vertex_map(&x, xb)?;
    let r0 = rho(v.source(), choice, levels, closure_bound)?;
    let rv = rho_map(&v, choice, &r0, &r)?;
    let x0: Vec<u32> = (0..=levels).map(|m| rv.level(m).on_object(0)).collect();
    let homs = (0..=levels).map(|n| hom_level(&r.category, &x0, &c, n, cap)).collect::<Result<Vec<_>>>()?;
    let deltas = (0..=levels + 1).map(|n| delta(n, levels).map(Arc::new)).collect::<Result<Vec<_>>>()?;
    let coface = |n: usize, i: usize| -> Result<SimplicialMap> {
        let vm: Vec<u32> = (0..n as u32).map(|v| if v < i as u32 { v } else { v + 1 }).collect();
        map_by_vertices(&deltas[n - 1], &deltas[n], &vm)
    };
    let codegen = |n: usize, j: usize| -> Result<SimplicialMap> {
        let vm: Vec<u32> = (0..n as u32 + 2).map(|v| if v <= j as u32 { v } else { v - 1 }).collect();
        map_by_vertices(&deltas[n + 1], &deltas[n], &vm)
    };
    let out = SimplicialCategory::from_fn(
        levels,
        |n| Ok(homs[n].category.clone()),
        |n, i, _, _| precompose(&homs[n], &homs[n - 1], &coface(n, i)?, &c),
        |n, j, _, _| precompose(&homs[n], &homs[n + 1], &codegen(n, j)?, &c),
    )?;
    // the constant functor at the basepoint
    let bp = (0..=levels)
        .map(|n| {
            let h = &homs[n];
            let levels_f = (0..=levels)
                .map(|m| Functor::constant(h.source.level(m).clone(), c.level(m).clone(), c.basepoint_at(m).unwrap()))
                .collect::<Vec<_>>();
            let f = SimplicialFunctor::new_unchecked(h.source.clone(), c.clone(), levels_f)?;
            h.functor_index.get(&functor_key(&f)).copied().ok_or_else(|| Error::invalid("constant functor missing"))
        })
        .collect::<Result<Vec<u32>>>()?;
    out.with_basepoint(Some(bp))
}

/// `Ω C`, the pointed cotensor by `S¹ = Δ¹/∂Δ¹` (ρ = π•Dec).
pub fn omega(c: &SimplicialCategory, closure_bound: usize, cap: usize) -> Result<SimplicialCategory> {
    cotensor(c, &sphere(1, c.bound() + 3)?, RhoChoice::PiDec, closure_bound, cap)
}

/// Evaluation `C^(S⁰) -> C` at the non-base vertex and the top simplex,
/// for checking that the cotensor by `Δ⁰₊` is the identity.
pub fn evaluate_at_vertex(
    cot: &Arc<SimplicialCategory>,
    c: &Arc<SimplicialCategory>,
    x: &Arc<SimplicialSet>,
    v: u32,
    choice: RhoChoice,
    closure_bound: usize,
    cap: usize,
) -> Result<SimplicialFunctor> {
    let levels = cot.bound();
    let c = Arc::new(c.truncate(levels)?);
    let r = rho(x, choice, levels, closure_bound)?;
    let vm = vertex_map(x, v)?;
    let r0 = rho(vm.source(), choice, levels, closure_bound)?;
    let rv = rho_map(&vm, choice, &r0, &r)?;
    let xb = vertex_map(x, x.basepoint().ok_or_else(|| Error::invalid("unpointed"))?)?;
    let rb = rho_map(&xb, choice, &r0, &r)?;
    let x0: Vec<u32> = (0..=levels).map(|m| rb.level(m).on_object(0)).collect();
    let functors = (0..=levels)
        .map(|n| {
            let h = hom_level(&r.category, &x0, &c, n, cap)?;
            let dn = delta(n, levels)?;
            let top = (0..dn.size(n) as u32)
                .find(|&s| vertices_of(&dn, n, s) == (0..=n as u32).collect::<Vec<_>>())
                .ok_or_else(|| Error::invalid("no top simplex"))?;
            let o = rv.level(n).on_object(0) * h.simplices[n] + top;
            let objects = h.functors.iter().map(|f| f.level(n).on_object(o)).collect();
            let morphisms = h.morphisms.iter().map(|(_, _, comps)| comps[n][o as usize]).collect();
            Functor::new_unchecked(cot.level(n).clone(), c.level(n).clone(), objects, morphisms)
        })
        .collect::<Result<Vec<_>>>()?;
    SimplicialFunctor::new_unchecked(cot.clone(), c, functors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homotopy::pi0;
    use crate::scat::nerve::diag_nerve_iso;
    use crate::scat::tensor::{is_isomorphism, suspend};
    use crate::sset::standard::two_point;

    const CB: usize = 10_000;
    const CAP: usize = 1_000_000;

    #[test]
    fn cotensor_by_s0_is_identity() {
        let c = Arc::new(SimplicialCategory::constant(FinCategory::chaotic(2), 2).pointed_at(0).unwrap());
        let x = Arc::new(two_point(5).unwrap());
        let cot = Arc::new(cotensor(&c, &x, RhoChoice::PiDec, CB, CAP).unwrap());
        assert!(cot.audit().is_empty());
        let ev = evaluate_at_vertex(&cot, &c, &x, 1, RhoChoice::PiDec, CB, CAP).unwrap();
        assert!(is_isomorphism(&ev));
    }

    #[test]
    fn cotensor_of_terminal_is_terminal() {
        let t = SimplicialCategory::terminal(2);
        let cot = cotensor(&t, &sphere(1, 5).unwrap(), RhoChoice::PiDec, CB, CAP).unwrap();
        assert_eq!(cot, t);
    }

    #[test]
    fn loops_on_suspended_s0() {
        let s = suspend(&SimplicialCategory::s0(3), CB).unwrap().category;
        let o = omega(&s, CB, CAP).unwrap();
        assert!(o.audit().is_empty());
        let d = diag_nerve_iso(&o).unwrap();
        // more than one component; the bounded count itself is 2 at bounds 2 to 4
        assert!(pi0(&d).count > 1);
    }
}
