use std::sync::Arc;

use scatbench_core::cat::FinCategory;
use scatbench_core::homotopy::AbelianGroup;
use scatbench_core::scat::SimplicialCategory;
use scatbench_core::spectra::{
    constant_structure, is_degreewise_bijection, k_groups, mapping_space, omega_spectrum_probe, sigma_infinity, LevelVerdict,
};
use scatbench_core::sset::standard::{point, two_point};

use crate::corpus::{self, bound};
use crate::report::{CheckSpec, Outcome, Provenance};

pub fn mapping_space_suite() -> Vec<CheckSpec> {
    let mut out = Vec::new();
    for (name, make) in corpus::pointed_simplicial_categories() {
        out.push(CheckSpec::new(format!("mapping-space/s0/{name}"), format!("Map(S0, diag N iso {name})"), Provenance::Theorem, move |c| {
            let cat = make(c)?;
            let s0 = two_point(cat.bound())?;
            let m = mapping_space(&s0, &cat, cat.bound())?;
            let ev = m.evaluate_at(&s0, 1)?;
            Ok(Outcome::holds(
                "evaluation at (x1, top simplex) is bijective in every degree",
                is_degreewise_bijection(&ev) && ev.violation().is_none(),
                format!("sizes {:?} vs {:?}", m.space.sizes(), ev.target().sizes()),
            ))
        }));
    }
    out.push(CheckSpec::new("mapping-space/point/s0", "Map(point, diag N iso S0scat)", Provenance::ByDefinition, |c| {
        let b = bound(c);
        let m = mapping_space(&point(b)?, &SimplicialCategory::s0(b), b)?;
        Ok(Outcome::compare(vec![1; b + 1], m.space.sizes().to_vec()))
    }));
    out.push(CheckSpec::new("mapping-space/s0/s0-degree-0", "|Map(S0, S0scat)_0|", Provenance::Oracle, |c| {
        let b = bound(c);
        let m = mapping_space(&two_point(b)?, &SimplicialCategory::s0(b), 0)?;
        Ok(Outcome::compare(2, m.space.size(0)))
    }));
    out
}

pub fn k_theory() -> Vec<CheckSpec> {
    vec![
        CheckSpec::new("k-theory/cyclic-2", "one-object groupoid Z/2 at bound 4", Provenance::Oracle, |c| {
            let z2 = SimplicialCategory::constant(FinCategory::cyclic_group(2), 4).pointed_at(0)?;
            let r = k_groups(&z2, 3, c.closure_bound)?;
            let h3 = r.homology.iter().find(|(i, _)| *i == 3).map(|(_, h)| h.clone());
            Ok(Outcome::compare(
                (1usize, Some(2usize), AbelianGroup::cyclic(2), Some(AbelianGroup::cyclic(2)), true),
                (r.components, r.k1_order, r.k1_abelian.clone(), h3, r.is_consistent()),
            ))
        }),
        CheckSpec::new("k-theory/s0", "S0scat", Provenance::Oracle, |c| {
            let r = k_groups(&SimplicialCategory::s0(bound(c)), c.degree, c.closure_bound)?;
            Ok(Outcome::compare((2usize, Some(1usize), true), (r.components, r.k1_order, r.is_consistent())))
        }),
        CheckSpec::new("k-theory/terminal", "terminal", Provenance::ByDefinition, |c| {
            let t = SimplicialCategory::terminal(bound(c)).pointed_at(0)?;
            let r = k_groups(&t, c.degree, c.closure_bound)?;
            let trivial = r.homology.iter().all(|(_, h)| h.is_trivial());
            Ok(Outcome::compare((1usize, Some(1usize), true), (r.components, r.k1_order, trivial)))
        }),
    ]
}

fn verdicts(r: &scatbench_core::spectra::OmegaProbeReport) -> Vec<String> {
    r.levels.iter().map(|l| l.verdict.to_string()).collect()
}

pub fn omega_probe() -> Vec<CheckSpec> {
    vec![
        CheckSpec::new("omega-probe/sigma-infinity-s0", "Sigma^infinity S0scat, length 2", Provenance::Oracle, |c| {
            let s = sigma_infinity(&SimplicialCategory::s0(bound(c)), 2, c.closure_bound)?;
            let r = omega_spectrum_probe(&s, 1);
            let ok = matches!(r.levels[0].verdict, LevelVerdict::Refuted(_));
            Ok(Outcome::holds("refuted at level 0", ok, verdicts(&r).join("; ")))
        }),
        CheckSpec::new("omega-probe/terminal", "terminal spectrum, length 3", Provenance::ByDefinition, |c| {
            let t = SimplicialCategory::terminal(bound(c)).pointed_at(0)?;
            let r = omega_spectrum_probe(&sigma_infinity(&t, 3, c.closure_bound)?, 1);
            Ok(Outcome::holds("confirmed at every level", r.overall == LevelVerdict::Confirmed, verdicts(&r).join("; ")))
        }),
        CheckSpec::new("omega-probe/junction", "levels terminal, S0scat, terminal", Provenance::ByDefinition, |c| {
            let b = bound(c);
            let t = Arc::new(SimplicialCategory::terminal(b).pointed_at(0)?);
            let s = constant_structure(vec![t.clone(), Arc::new(SimplicialCategory::s0(b)), t], c.closure_bound)?;
            let r = omega_spectrum_probe(&s, 1);
            let ok = r.levels[0].verdict == LevelVerdict::Confirmed && matches!(r.levels[1].verdict, LevelVerdict::Refuted(_));
            Ok(Outcome::holds("confirmed at level 0, refuted at level 1", ok, verdicts(&r).join("; ")))
        }),
    ]
}
