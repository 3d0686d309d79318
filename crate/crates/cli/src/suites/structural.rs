use std::sync::Arc;

use scatbench_core::cat::{enumerate_functors, equalizer_cat, fundamental_groupoid_of, nerve, nerve_map, pushout_cat, FinCategory, Functor};
use scatbench_core::homotopy::{homology_all, reduced_homology_all};
use scatbench_core::scat::{equalizer_scat, pushout_scat, rho, rho_map, RhoChoice, SimplicialCategory, SimplicialFunctor};
use scatbench_core::sset::csigma::boundary_simplices;
use scatbench_core::sset::standard::{boundary, delta, point};
use scatbench_core::sset::{c_sigma, map_by_vertices, pushout_sset, SimplicialSet};
use scatbench_core::Result;

use crate::corpus::{self, bound};
use crate::report::{CheckSpec, Outcome, Provenance};

fn first<T: ToString>(v: Vec<T>) -> Outcome {
    let computed = v.first().map_or_else(|| "no violations".to_string(), ToString::to_string);
    Outcome::holds("no violations", v.is_empty(), computed)
}

pub fn identities() -> Vec<CheckSpec> {
    let mut out = Vec::new();
    for (name, make) in corpus::simplicial_sets() {
        out.push(CheckSpec::new(format!("sset/{name}"), name, Provenance::ByDefinition, move |c| Ok(first(make(c)?.audit()))));
        out.push(CheckSpec::new(format!("sset/{name}/dec"), format!("Dec {name}"), Provenance::ByDefinition, move |c| {
            let x = make(&crate::document::Config { bound: bound(c) + 2, ..*c })?;
            Ok(first(scatbench_core::sset::dec(&x)?.audit()))
        }));
        out.push(CheckSpec::new(format!("sset/{name}/dstar"), format!("d* {name}"), Provenance::ByDefinition, move |c| {
            Ok(first(scatbench_core::sset::d_star(&make(c)?)?.audit()))
        }));
    }
    for (name, make) in corpus::bisimplicial_sets() {
        out.push(CheckSpec::new(format!("biset/{name}"), name, Provenance::ByDefinition, move |c| Ok(first(make(c)?.audit()))));
        out.push(CheckSpec::new(format!("biset/{name}/diag"), format!("diag {name}"), Provenance::ByDefinition, move |c| {
            Ok(first(scatbench_core::sset::diag(&make(c)?)?.audit()))
        }));
        out.push(CheckSpec::new(format!("biset/{name}/wbar"), format!("wbar {name}"), Provenance::ByDefinition, move |c| {
            Ok(first(scatbench_core::sset::wbar(&make(c)?)?.audit()))
        }));
    }
    for (name, make) in corpus::categories() {
        out.push(CheckSpec::new(format!("category/{name}"), name, Provenance::ByDefinition, move |c| Ok(first(make(c)?.audit()))));
        out.push(CheckSpec::new(format!("category/{name}/nerve"), format!("N {name}"), Provenance::ByDefinition, move |c| {
            Ok(first(nerve(&make(c)?, bound(c))?.audit()))
        }));
    }
    for (name, make) in corpus::simplicial_categories() {
        out.push(CheckSpec::new(format!("scat/{name}"), name, Provenance::ByDefinition, move |c| Ok(first(make(c)?.audit()))));
        out.push(CheckSpec::new(format!("scat/{name}/nerve-iso-levelwise"), format!("N iso {name}"), Provenance::ByDefinition, move |c| {
            let s = make(c)?;
            Ok(first(scatbench_core::scat::nerve_iso_levelwise(&s, s.bound())?.audit()))
        }));
    }
    out
}

/// Every hom-set of a groupoid has exactly one element and there is an
/// object.
fn is_contractible_groupoid(c: &FinCategory) -> bool {
    let n = c.object_count() as u32;
    n > 0 && (0..n).all(|a| (0..n).all(|b| c.hom(a, b).len() == 1))
}

pub fn c_sigma_contractibility() -> Vec<CheckSpec> {
    let mut out = Vec::new();
    for n in 1..=3usize {
        let Ok(sigmas) = boundary_simplices(n, 3) else { continue };
        for (deg, idx) in sigmas {
            out.push(CheckSpec::new(
                format!("c-sigma/n{n}/deg{deg}/simplex{idx:03}"),
                format!("C^sigma for simplex {idx} of degree {deg} in the boundary of Delta^{n}"),
                Provenance::Theorem,
                move |c| {
                    let b = bound(c);
                    let (x, _) = c_sigma(n, (deg, idx), b)?;
                    let h = reduced_homology_all(&x)?;
                    let acyclic = h.iter().take(c.degree + 1).all(|g| g.is_trivial());
                    let g = fundamental_groupoid_of(&x, c.closure_bound)?;
                    let point_like = is_contractible_groupoid(&g.category);
                    Ok(Outcome::holds(
                        "reduced H_i = 0 for i <= 2 and pi(C^sigma) equivalent to a point",
                        acyclic && point_like,
                        format!("reduced homology {h:?}; groupoid with {} objects, {} morphisms", g.category.object_count(), g.category.morphism_count()),
                    ))
                },
            ));
        }
    }
    out
}

/// Inclusion of the full subcategory on `keep`.
pub fn full_inclusion(b: &Arc<FinCategory>, keep: &[u32]) -> Result<Functor> {
    let objects: Vec<bool> = (0..b.object_count() as u32).map(|o| keep.contains(&o)).collect();
    let morphisms: Vec<bool> = (0..b.morphism_count() as u32)
        .map(|m| objects[b.src(m) as usize] && objects[b.tgt(m) as usize])
        .collect();
    let (sub, obj, mor) = b.subcategory(&objects, &morphisms)?;
    Functor::new(Arc::new(sub), b.clone(), obj, mor)
}

pub type PushoutLegs = fn() -> Result<(Functor, Functor)>;

/// Fully faithful inclusions `A -> B` of groupoids on at most four objects
/// and functors `A -> C` into groupoids with at most eight morphisms.
pub fn groupoid_pushout_family() -> Vec<(String, PushoutLegs)> {
    fn leg(b: FinCategory, keep: &[u32], c: FinCategory, pick: usize) -> Result<(Functor, Functor)> {
        let f = full_inclusion(&Arc::new(b), keep)?;
        let fs = enumerate_functors(f.source(), &Arc::new(c), 100_000)?;
        let g = fs[pick.min(fs.len() - 1)].clone();
        Ok((f, g))
    }
    use FinCategory as F;
    fn z2c2() -> FinCategory {
        FinCategory::cyclic_group(2).product(&FinCategory::chaotic(2))
    }
    vec![
        ("chaotic-2 over point into cyclic-2".into(), || leg(F::chaotic(2), &[0], F::cyclic_group(2), 0)),
        ("chaotic-3 over chaotic-2 into point".into(), || leg(F::chaotic(3), &[0, 1], F::terminal(), 0)),
        ("chaotic-3 over chaotic-2 into cyclic-2".into(), || leg(F::chaotic(3), &[0, 1], F::cyclic_group(2), 1)),
        ("chaotic-4 over chaotic-2 into chaotic-2 swap".into(), || leg(F::chaotic(4), &[1, 3], F::chaotic(2), usize::MAX)),
        ("chaotic-4 over point into cyclic-3".into(), || leg(F::chaotic(4), &[2], F::cyclic_group(3), 0)),
        ("cyclic-2 x chaotic-2 over cyclic-2 into cyclic-4".into(), || leg(z2c2(), &[0], F::cyclic_group(4), 1)),
        ("cyclic-2 x chaotic-2 over cyclic-2 into point".into(), || leg(z2c2(), &[1], F::terminal(), 0)),
        ("cyclic-2 x chaotic-2 over cyclic-2 into cyclic-2".into(), || leg(z2c2(), &[0], F::cyclic_group(2), usize::MAX)),
        ("discrete-2 + chaotic-2 over discrete-2 into point".into(), || {
            leg(F::coproduct(&[&F::discrete(2), &F::chaotic(2)]).0, &[0, 1], F::terminal(), 0)
        }),
        ("chaotic-2 + chaotic-2 over two points into chaotic-2".into(), || {
            leg(F::coproduct(&[&F::chaotic(2), &F::chaotic(2)]).0, &[0, 2], F::chaotic(2), usize::MAX)
        }),
        ("chaotic-3 over point into cyclic-2 x chaotic-2".into(), || leg(F::chaotic(3), &[0], z2c2(), usize::MAX)),
        ("cyclic-3 + point over point into cyclic-2".into(), || {
            leg(F::coproduct(&[&F::cyclic_group(3), &F::terminal()]).0, &[3], F::cyclic_group(2), 0)
        }),
    ]
}

pub fn niso_pushout() -> Vec<CheckSpec> {
    let mut out = Vec::new();
    for (k, (label, make)) in groupoid_pushout_family().into_iter().enumerate() {
        out.push(CheckSpec::new(format!("niso-pushout/{k:02}"), label, Provenance::Theorem, move |c| {
            let (f, g) = make()?;
            let b = bound(c);
            let (p, _, _) = pushout_cat(&f, &g, c.closure_bound)?;
            let lhs = homology_all(&nerve(&p, b)?)?;
            let na = Arc::new(nerve(f.source(), b)?);
            let nf = nerve_map(&f, na.clone(), Arc::new(nerve(f.target(), b)?))?;
            let ng = nerve_map(&g, na, Arc::new(nerve(g.target(), b)?))?;
            let (q, _, _) = pushout_sset(&nf, &ng)?;
            let rhs = homology_all(&q)?;
            let k = c.degree + 1;
            Ok(Outcome::compare(rhs[..k].to_vec(), lhs[..k].to_vec()))
        }));
    }
    out
}

/// `C -> D` recovered as the equalizer of the two maps `D -> D ⊔_C D`.
fn recovers(f: &Functor, closure_bound: usize) -> Result<Outcome> {
    let (_, i1, i2) = pushout_cat(f, f, closure_bound)?;
    let (e, inc) = equalizer_cat(&i1, &i2)?;
    let image = |objs: &[u32], mors: &[u32]| {
        let mut o = objs.to_vec();
        let mut m = mors.to_vec();
        o.sort_unstable();
        m.sort_unstable();
        (o, m)
    };
    let want = image(f.object_map(), f.morphism_map());
    let got = image(inc.object_map(), inc.morphism_map());
    Ok(Outcome::holds(
        "equalizer is the image of C",
        f.is_injective() && want == got && e.morphism_count() == f.source().morphism_count(),
        format!("image {want:?}, equalizer {got:?}"),
    ))
}

fn recovers_levelwise(f: &SimplicialFunctor, closure_bound: usize) -> Result<Outcome> {
    let (_, i1, i2) = pushout_scat(f, f, closure_bound)?;
    let (e, inc) = equalizer_scat(&i1, &i2)?;
    let mut ok = f.is_injective() && e.audit().is_empty();
    let mut detail = Vec::new();
    for n in 0..=f.source().bound() {
        let sorted = |v: &[u32]| {
            let mut v = v.to_vec();
            v.sort_unstable();
            v
        };
        let same = sorted(f.level(n).object_map()) == sorted(inc.level(n).object_map())
            && sorted(f.level(n).morphism_map()) == sorted(inc.level(n).morphism_map());
        ok &= same;
        detail.push(format!("level {n}: {}", if same { "recovered" } else { "differs" }));
    }
    Ok(Outcome::holds("equalizer is the image of C at every level", ok, detail.join(", ")))
}

fn rho_inclusion(x: SimplicialSet, y: SimplicialSet, vertices: Vec<u32>, c: &crate::document::Config) -> Result<SimplicialFunctor> {
    let (x, y) = (Arc::new(x), Arc::new(y));
    let j = map_by_vertices(&x, &y, &vertices)?;
    let levels = bound(c);
    let (rx, ry) = (rho(&x, RhoChoice::PiDec, levels, c.closure_bound)?, rho(&y, RhoChoice::PiDec, levels, c.closure_bound)?);
    rho_map(&j, RhoChoice::PiDec, &rx, &ry)
}

pub fn effective_mono() -> Vec<CheckSpec> {
    use FinCategory as F;
    type CatCase = fn() -> Result<Functor>;
    let cats: Vec<(&str, CatCase)> = vec![
        ("chaotic-2 in chaotic-3", || full_inclusion(&Arc::new(F::chaotic(3)), &[0, 1])),
        ("discrete-2 in ordinal-1", || {
            let t = Arc::new(F::ordinal(1));
            Functor::new(Arc::new(F::discrete(2)), t.clone(), vec![0, 1], vec![t.identity(0), t.identity(1)])
        }),
        ("ordinal-1 in ordinal-2", || full_inclusion(&Arc::new(F::ordinal(2)), &[0, 1])),
        ("point in chaotic-2", || full_inclusion(&Arc::new(F::chaotic(2)), &[0])),
        ("point in ordinal-1", || full_inclusion(&Arc::new(F::ordinal(1)), &[1])),
        ("point in poset-v", || full_inclusion(&Arc::new(F::poset(3, &[(0, 1), (0, 2)])?), &[1])),
    ];
    let mut out = Vec::new();
    for (label, make) in cats {
        out.push(CheckSpec::new(format!("effective-mono/category/{label}"), label, Provenance::Theorem, move |c| {
            recovers(&make()?, c.closure_bound)
        }));
    }
    type ScatCase = fn(&crate::document::Config) -> Result<SimplicialFunctor>;
    let scats: Vec<(&str, ScatCase)> = vec![
        ("pi-dec of a point in Delta^1", |c| rho_inclusion(point(bound(c) + 3)?, delta(1, bound(c) + 3)?, vec![1], c)),
        ("pi-dec of the boundary of Delta^1 in Delta^1", |c| {
            rho_inclusion(boundary(1, bound(c) + 3)?, delta(1, bound(c) + 3)?, vec![0, 1], c)
        }),
        ("pi-dec of Delta^1 in Delta^2", |c| rho_inclusion(delta(1, bound(c) + 3)?, delta(2, bound(c) + 3)?, vec![0, 2], c)),
        ("constant chaotic-2 in chaotic-3", |c| {
            let f = full_inclusion(&Arc::new(F::chaotic(3)), &[1, 2])?;
            let (s, t) = (Arc::new(SimplicialCategory::constant((**f.source()).clone(), bound(c))), Arc::new(SimplicialCategory::constant((**f.target()).clone(), bound(c))));
            let levels = (0..=bound(c))
                .map(|n| Functor::new(s.level(n).clone(), t.level(n).clone(), f.object_map().to_vec(), f.morphism_map().to_vec()))
                .collect::<Result<Vec<_>>>()?;
            SimplicialFunctor::new(s, t, levels)
        }),
    ];
    for (label, make) in scats {
        out.push(CheckSpec::new(format!("effective-mono/levelwise/{label}"), label, Provenance::Theorem, move |c| {
            recovers_levelwise(&make(c)?, c.closure_bound)
        }));
    }
    out
}
