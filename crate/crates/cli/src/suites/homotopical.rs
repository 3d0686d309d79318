use std::sync::Arc;

use scatbench_core::cat::{FinCategory, Functor};
use scatbench_core::homotopy::{homology_all, reduced_homology_all, weak_equivalence_probe, AbelianGroup};
use scatbench_core::scat::{
    colimit_of_hom_counts, colimit_scat, count_simplicial_functors, diag_nerve_iso, diag_nerve_iso_map,
    enumerate_simplicial_functors, is_isomorphism, nerve_iso_levelwise, rho, rho_map, smash, suspend, suspend_n,
    wbar_nerve_iso, RhoChoice, ScatDiagram, SimplicialCategory, SimplicialFunctor,
};
use scatbench_core::sset::standard::{boundary, delta, horn, sphere, two_point};
use scatbench_core::sset::{count_maps, diag, map_by_vertices, wbar, SimplicialSet};
use scatbench_core::Result;

use crate::corpus::{self, bound};
use crate::document::Config;
use crate::report::{CheckSpec, Outcome, Provenance};

fn upto(h: Vec<AbelianGroup>, k: usize) -> Vec<AbelianGroup> {
    h.into_iter().take(k + 1).collect()
}

fn levels(c: &Config) -> usize {
    c.degree + 1
}

pub fn acyclic_cofibrations() -> Vec<CheckSpec> {
    let mut out = Vec::new();
    for n in 1..=2usize {
        for i in 0..=n {
            out.push(CheckSpec::new(
                format!("acyclic-cofibrations/horn-{n}-{i}"),
                format!("diag N iso of pi d*(Lambda^{n}_{i} -> Delta^{n})"),
                Provenance::Theorem,
                move |c| {
                    let l = levels(c);
                    let h = Arc::new(horn(n, i, l + 3)?);
                    let d = Arc::new(delta(n, l + 3)?);
                    let j = map_by_vertices(&h, &d, &(0..=n as u32).collect::<Vec<_>>())?;
                    let (rs, rt) = (rho(&h, RhoChoice::PiDStar, l, c.closure_bound)?, rho(&d, RhoChoice::PiDStar, l, c.closure_bound)?);
                    let f = diag_nerve_iso_map(&rho_map(&j, RhoChoice::PiDStar, &rs, &rt)?)?;
                    let v = weak_equivalence_probe(&f, c.degree);
                    Ok(Outcome::holds(&format!("confirmed up to degree {}", c.degree), v == scatbench_core::homotopy::ProbeVerdict::ConfirmedUpTo(c.degree), v.to_string()))
                },
            ));
        }
    }
    out
}

pub fn diag_wbar() -> Vec<CheckSpec> {
    let mut out = Vec::new();
    for (name, make) in corpus::bisimplicial_sets() {
        out.push(CheckSpec::new(format!("diag-wbar/{name}"), name, Provenance::Theorem, move |c| {
            let b = make(c)?;
            Ok(Outcome::compare(upto(homology_all(&diag(&b)?)?, c.degree), upto(homology_all(&wbar(&b)?)?, c.degree)))
        }));
    }
    for (name, make) in corpus::simplicial_categories() {
        out.push(CheckSpec::new(format!("diag-wbar/nerve-iso-levelwise/{name}"), format!("N iso levelwise of {name}"), Provenance::Theorem, move |c| {
            let s = make(c)?;
            let b = nerve_iso_levelwise(&s, s.bound())?;
            Ok(Outcome::compare(upto(homology_all(&diag(&b)?)?, c.degree), upto(homology_all(&wbar(&b)?)?, c.degree)))
        }));
    }
    out
}

/// Targets for the hom-count bijections, at two levels.
pub fn adjunction_targets(closure_bound: usize) -> Result<Vec<(&'static str, Arc<SimplicialCategory>)>> {
    const L: usize = 2;
    Ok(vec![
        ("const-chaotic-2", Arc::new(SimplicialCategory::constant(FinCategory::chaotic(2), L))),
        ("const-cyclic-2", Arc::new(SimplicialCategory::constant(FinCategory::cyclic_group(2), L))),
        ("const-ordinal-1", Arc::new(SimplicialCategory::constant(FinCategory::ordinal(1), L))),
        ("s0", Arc::new(SimplicialCategory::s0(L))),
        ("suspension-1-s0", suspend(&SimplicialCategory::s0(L), closure_bound)?.category),
    ])
}

pub fn unit() -> Vec<CheckSpec> {
    type Space = fn(usize) -> Result<SimplicialSet>;
    let spaces: Vec<(&str, Space)> = vec![
        ("boundary-2", |b| boundary(2, b)),
        ("delta-0", |b| delta(0, b)),
        ("delta-1", |b| delta(1, b)),
        ("sphere-1", |b| sphere(1, b)),
    ];
    let mut out = Vec::new();
    for (name, make) in spaces {
        out.push(CheckSpec::new(format!("unit/homology/{name}"), format!("diag N iso pi Dec {name}"), Provenance::Theorem, move |c| {
            let l = levels(c);
            let y = make(l + 3)?;
            let r = rho(&y, RhoChoice::PiDec, l, c.closure_bound)?;
            let lhs = upto(homology_all(&diag_nerve_iso(&r.category)?)?, c.degree);
            let rhs = upto(homology_all(&y)?, c.degree);
            Ok(Outcome::compare(rhs, lhs))
        }));
    }
    let sources: Vec<(&str, Space)> = vec![
        ("boundary-1", |b| boundary(1, b)),
        ("delta-0", |b| delta(0, b)),
        ("delta-1", |b| delta(1, b)),
    ];
    for (xname, make) in sources {
        for (k, side) in [(RhoChoice::PiDec, "dec-wbar"), (RhoChoice::PiDStar, "dstar-diag")] {
            out.push(CheckSpec::new(format!("unit/hom-counts/{side}/{xname}"), format!("{xname} against the adjunction targets"), Provenance::Theorem, move |c| {
                const L: usize = 2;
                let x = make(L + 3)?;
                let p = Arc::new((*rho(&x, k, L, c.closure_bound)?.category).clone());
                let xt = x.truncate(L)?;
                let mut left = Vec::new();
                let mut right = Vec::new();
                for (_, t) in adjunction_targets(c.closure_bound)? {
                    left.push(count_simplicial_functors(&p, &t, false, c.cap)?);
                    let y = if k == RhoChoice::PiDec { wbar_nerve_iso(&t)? } else { diag_nerve_iso(&t)? };
                    right.push(count_maps(&xt, &y, false, c.cap)?);
                }
                Ok(Outcome::compare(right, left))
            }));
        }
    }
    out
}

fn sphere_homology(n: usize, k: usize) -> Vec<AbelianGroup> {
    (0..=k).map(|i| if i == n { AbelianGroup::free(1) } else { AbelianGroup::trivial() }).collect()
}

pub fn suspension_ladder() -> Vec<CheckSpec> {
    let mut out = Vec::new();
    for n in 0..=2usize {
        out.push(CheckSpec::new(format!("suspension-ladder/sigma-{n}-s0"), format!("reduced homology of diag N iso Sigma^{n} S0"), Provenance::Theorem, move |c| {
            let s = suspend_n(&SimplicialCategory::s0(bound(c)), n, c.closure_bound)?;
            let h = upto(reduced_homology_all(&diag_nerve_iso(&s)?)?, c.degree);
            Ok(Outcome::compare(sphere_homology(n, c.degree), h))
        }));
    }
    for (name, make) in corpus::pointed_simplicial_categories() {
        out.push(CheckSpec::new(format!("suspension-ladder/smash-s0/{name}"), format!("{name} smash S0"), Provenance::ByDefinition, move |c| {
            let cat = Arc::new(make(c)?);
            let x = Arc::new(two_point(cat.bound() + 3)?);
            let s = smash(&cat, &x, RhoChoice::PiDec, c.closure_bound)?;
            let f = s.at_vertex(&cat, &x, 1, RhoChoice::PiDec, c.closure_bound)?;
            Ok(Outcome::holds("c -> [(c, x1)] is an isomorphism", is_isomorphism(&f), format!("{} levels checked", cat.bound() + 1)))
        }));
    }
    out.push(CheckSpec::new("suspension-ladder/dstar-s0", "pi d* S0 against S0scat", Provenance::ByDefinition, |c| {
        let l = bound(c);
        let r = rho(&two_point(l + 3)?, RhoChoice::PiDStar, l, c.closure_bound)?;
        let s0 = Arc::new(SimplicialCategory::s0(l).with_basepoint(None)?);
        let isos = enumerate_simplicial_functors(&s0, &r.category, false, c.cap)?.into_iter().filter(is_isomorphism).count();
        Ok(Outcome::holds("an isomorphism exists", isos > 0, format!("{isos} isomorphisms")))
    }));
    out
}

/// A levelwise functor between constant simplicial categories.
fn constant_functor(f: &Functor, bound: usize) -> Result<SimplicialFunctor> {
    let s = Arc::new(SimplicialCategory::constant((**f.source()).clone(), bound));
    let t = Arc::new(SimplicialCategory::constant((**f.target()).clone(), bound));
    let levels = (0..=bound)
        .map(|n| Functor::new(s.level(n).clone(), t.level(n).clone(), f.object_map().to_vec(), f.morphism_map().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    SimplicialFunctor::new(s, t, levels)
}

fn chaotic_inclusion(m: usize, n: usize) -> Result<Functor> {
    let (s, t) = (Arc::new(FinCategory::chaotic(m)), Arc::new(FinCategory::chaotic(n)));
    let morphisms = (0..m as u32).flat_map(|a| (0..m as u32).map(move |b| a * n as u32 + b)).collect();
    Functor::new(s, t, (0..m as u32).collect(), morphisms)
}

type Chain = (Vec<Arc<SimplicialCategory>>, Vec<SimplicialFunctor>);

fn constant_chain(l: usize) -> Result<Chain> {
    let fs = vec![constant_functor(&chaotic_inclusion(1, 2)?, l)?, constant_functor(&chaotic_inclusion(2, 3)?, l)?];
    let objects = vec![fs[0].source().clone(), fs[0].target().clone(), fs[1].target().clone()];
    Ok((objects, fs))
}

fn simplex_chain(l: usize, cb: usize) -> Result<Chain> {
    let xs = (0..=2).map(|n| delta(n, l + 3).map(Arc::new)).collect::<Result<Vec<_>>>()?;
    let rs = xs.iter().map(|x| rho(x, RhoChoice::PiDec, l, cb)).collect::<Result<Vec<_>>>()?;
    let mut fs = Vec::new();
    for k in 0..2 {
        let j = map_by_vertices(&xs[k], &xs[k + 1], &(0..=k as u32).collect::<Vec<_>>())?;
        fs.push(rho_map(&j, RhoChoice::PiDec, &rs[k], &rs[k + 1])?);
    }
    Ok((rs.iter().map(|r| r.category.clone()).collect(), fs))
}

pub fn directed_colimit() -> Vec<CheckSpec> {
    type MakeChain = fn(&Config) -> Result<Chain>;
    // (name, largest n, chain); homs from pi d*Delta^2 into the simplex
    // chain run past the default enumeration cap
    let chains: Vec<(&str, usize, MakeChain)> = vec![
        ("constant-chaotic", 2, |_| constant_chain(2)),
        ("pi-dec-simplices", 1, |c| simplex_chain(2, c.closure_bound)),
    ];
    let mut out = Vec::new();
    for (cname, top, make) in chains {
        for n in 0..=top {
            out.push(CheckSpec::new(format!("directed-colimit/{cname}/pi-dstar-delta-{n}"), format!("homs from pi d* Delta^{n} along {cname}"), Provenance::Theorem, move |c| {
                const L: usize = 2;
                let (objects, fs) = make(c)?;
                if !fs.iter().all(SimplicialFunctor::is_injective) {
                    return Ok(Outcome::holds("levelwise inclusions", false, "a transition functor is not injective".into()));
                }
                let a = rho(&delta(n, L + 3)?, RhoChoice::PiDStar, L, c.closure_bound)?.category;
                let arrows = fs.iter().enumerate().map(|(k, f)| (k, k + 1, f.clone())).collect();
                let colim = colimit_scat(&ScatDiagram { objects: objects.clone(), arrows }, c.closure_bound)?;
                let direct = count_simplicial_functors(&a, &colim.category, false, c.cap)?;
                let glued = colimit_of_hom_counts(&a, &objects, &fs, c.cap)?;
                Ok(Outcome::compare(glued, direct))
            }));
        }
    }
    out
}
