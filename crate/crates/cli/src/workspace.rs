//! Resolution of a document into built objects.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use scatbench_core::cat::{fundamental_groupoid_of, nerve, nerve_iso, FinCategory, Functor};
use scatbench_core::scat::{
    diag_nerve_iso, nerve_iso_levelwise, pi_levelwise, rho, smash, suspend_n, wbar_nerve_iso, SimplicialCategory,
    SimplicialFunctor,
};
use scatbench_core::spectra::{constant_structure, sigma_infinity, SpectrumObject};
use scatbench_core::sset::standard::{boundary, delta, discrete, horn, point, sphere, two_point};
use scatbench_core::sset::{
    box_product, c_sigma, d_star, dec, diag, map_by_vertices, wbar, BidegreeShape, BisimplicialSet, SimplicialMap,
    SimplicialSet,
};
use scatbench_core::Error as CoreError;

use crate::document::{
    BisetTables, CategoryTable, Config, Construction, FunctorTable, MapDefinition, ScatTables, SsetTables,
    WorkbenchDocument,
};

#[derive(Debug, Clone)]
pub enum Value {
    Sset(Arc<SimplicialSet>),
    Biset(Arc<BisimplicialSet>),
    Category(Arc<FinCategory>),
    Scat(Arc<SimplicialCategory>),
    Spectrum(Arc<SpectrumObject>),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Sset(_) => "simplicial set",
            Value::Biset(_) => "bisimplicial set",
            Value::Category(_) => "category",
            Value::Scat(_) => "simplicial category",
            Value::Spectrum(_) => "spectrum",
        }
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum LoadError {
    #[error("{0}")]
    Parse(#[from] crate::document::ParseError),
    #[error("{entity}: unknown reference `{reference}`")]
    Unresolved { entity: String, reference: String },
    #[error("reference cycle through `{0}`")]
    Cycle(String),
    #[error("name `{0}` is declared twice")]
    Duplicate(String),
    #[error("{entity}: `{reference}` is a {found}, expected a {expected}")]
    WrongKind { entity: String, reference: String, expected: &'static str, found: &'static str },
    #[error("{entity}: audit failed: {witness}")]
    Audit { entity: String, witness: String },
    #[error("{entity}: {error}")]
    Core { entity: String, error: CoreError },
}

impl LoadError {
    /// A closure bound or enumeration cap stopped the construction.
    pub fn is_resource(&self) -> bool {
        matches!(self, LoadError::Core { error: CoreError::BoundExceeded { .. } | CoreError::CapExceeded { .. }, .. })
    }
}

pub struct Workspace {
    pub config: Config,
    values: BTreeMap<String, Value>,
    maps: BTreeMap<String, SimplicialMap>,
}

impl Workspace {
    /// Builds every entity and map, auditing each.
    pub fn load(doc: &WorkbenchDocument) -> Result<Self, LoadError> {
        let mut specs = HashMap::new();
        for e in &doc.entities {
            if specs.insert(e.name.clone(), &e.construction).is_some() {
                return Err(LoadError::Duplicate(e.name.clone()));
            }
        }
        let mut r = Resolver { config: doc.config, specs, done: HashMap::new(), active: HashSet::new() };
        for e in &doc.entities {
            r.resolve(&e.name, &e.name)?;
        }
        let mut maps = BTreeMap::new();
        for m in &doc.maps {
            if maps.contains_key(&m.name) || r.done.contains_key(&m.name) {
                return Err(LoadError::Duplicate(m.name.clone()));
            }
            let s = r.sset(&m.name, &m.source)?;
            let t = r.sset(&m.name, &m.target)?;
            let core = |error| LoadError::Core { entity: m.name.clone(), error };
            let f = match &m.definition {
                MapDefinition::Components(c) => SimplicialMap::new(s, t, c.clone()).map_err(core)?,
                MapDefinition::ByVertices(v) => map_by_vertices(&s, &t, v).map_err(core)?,
            };
            maps.insert(m.name.clone(), f);
        }
        Ok(Workspace { config: doc.config, values: r.done.into_iter().collect(), maps })
    }

    /// One construction on its own; references are not allowed.
    pub fn build_standalone(c: &Construction, config: Config) -> Result<Value, LoadError> {
        let mut r = Resolver { config, specs: HashMap::new(), done: HashMap::new(), active: HashSet::new() };
        r.build("input", c)
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.values.get(name)
    }

    pub fn map(&self, name: &str) -> Option<&SimplicialMap> {
        self.maps.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.values.keys()
    }

    pub fn values(&self) -> impl Iterator<Item = (&String, &Value)> {
        self.values.iter()
    }
}

struct Resolver<'a> {
    config: Config,
    specs: HashMap<String, &'a Construction>,
    done: HashMap<String, Value>,
    active: HashSet<String>,
}

impl Resolver<'_> {
    fn resolve(&mut self, from: &str, name: &str) -> Result<Value, LoadError> {
        if let Some(v) = self.done.get(name) {
            return Ok(v.clone());
        }
        let spec = *self
            .specs
            .get(name)
            .ok_or_else(|| LoadError::Unresolved { entity: from.to_string(), reference: name.to_string() })?;
        if !self.active.insert(name.to_string()) {
            return Err(LoadError::Cycle(name.to_string()));
        }
        let v = self.build(name, spec)?;
        audit(name, &v)?;
        self.active.remove(name);
        self.done.insert(name.to_string(), v.clone());
        Ok(v)
    }

    fn sset(&mut self, from: &str, name: &str) -> Result<Arc<SimplicialSet>, LoadError> {
        match self.resolve(from, name)? {
            Value::Sset(x) => Ok(x),
            v => Err(wrong(from, name, "simplicial set", &v)),
        }
    }

    fn biset(&mut self, from: &str, name: &str) -> Result<Arc<BisimplicialSet>, LoadError> {
        match self.resolve(from, name)? {
            Value::Biset(x) => Ok(x),
            v => Err(wrong(from, name, "bisimplicial set", &v)),
        }
    }

    fn category(&mut self, from: &str, name: &str) -> Result<Arc<FinCategory>, LoadError> {
        match self.resolve(from, name)? {
            Value::Category(x) => Ok(x),
            v => Err(wrong(from, name, "category", &v)),
        }
    }

    fn scat(&mut self, from: &str, name: &str) -> Result<Arc<SimplicialCategory>, LoadError> {
        match self.resolve(from, name)? {
            Value::Scat(x) => Ok(x),
            v => Err(wrong(from, name, "simplicial category", &v)),
        }
    }

    fn build(&mut self, name: &str, c: &Construction) -> Result<Value, LoadError> {
        let core = |error| LoadError::Core { entity: name.to_string(), error };
        let cb = self.config.closure_bound;
        let sset = |r: scatbench_core::Result<SimplicialSet>| r.map(|x| Value::Sset(Arc::new(x))).map_err(core);
        let scat = |r: scatbench_core::Result<SimplicialCategory>| r.map(|x| Value::Scat(Arc::new(x))).map_err(core);
        let biset = |r: scatbench_core::Result<BisimplicialSet>| r.map(|x| Value::Biset(Arc::new(x))).map_err(core);
        let cat = |x: FinCategory| Ok(Value::Category(Arc::new(x)));
        match c {
            Construction::Delta { n, bound } => sset(delta(*n, *bound)),
            Construction::Boundary { n, bound } => sset(boundary(*n, *bound)),
            Construction::Horn { n, i, bound } => sset(horn(*n, *i, *bound)),
            Construction::Sphere { n, bound } => sset(sphere(*n, *bound)),
            Construction::Point { bound } => sset(point(*bound)),
            Construction::TwoPoint { bound } => sset(two_point(*bound)),
            Construction::DiscreteSet { points, bound } => sset(discrete(*points, *bound)),
            Construction::SimplicialTables(t) => sset(sset_from_tables(t)),
            Construction::Nerve { of, bound } => {
                let c = self.category(name, of)?;
                sset(nerve(&c, *bound))
            }
            Construction::NerveIso { of, bound } => {
                let c = self.category(name, of)?;
                sset(nerve_iso(&c, *bound))
            }
            Construction::Diag { of } => {
                let b = self.biset(name, of)?;
                sset(diag(&b))
            }
            Construction::Wbar { of } => {
                let b = self.biset(name, of)?;
                sset(wbar(&b))
            }
            Construction::DiagNerveIso { of } => {
                let c = self.scat(name, of)?;
                sset(diag_nerve_iso(&c))
            }
            Construction::WbarNerveIso { of } => {
                let c = self.scat(name, of)?;
                sset(wbar_nerve_iso(&c))
            }
            Construction::CSigma { n, degree, index, bound } => {
                sset(c_sigma(*n, (*degree, *index), *bound).map(|(x, _)| (*x).clone()))
            }
            Construction::Truncate { of, bound } => match self.resolve(name, of)? {
                Value::Sset(x) => sset(x.truncate(*bound)),
                Value::Scat(x) => scat(x.truncate(*bound)),
                v => Err(wrong(name, of, "simplicial set or simplicial category", &v)),
            },
            Construction::Dec { of } => {
                let x = self.sset(name, of)?;
                biset(dec(&x))
            }
            Construction::Dstar { of } => {
                let x = self.sset(name, of)?;
                biset(d_star(&x))
            }
            Construction::BoxProduct { left, right } => {
                let (a, b) = (self.sset(name, left)?, self.sset(name, right)?);
                biset(box_product(&a, &b))
            }
            Construction::NerveIsoLevelwise { of } => {
                let c = self.scat(name, of)?;
                biset(nerve_iso_levelwise(&c, c.bound()))
            }
            Construction::BisimplicialTables(t) => biset(biset_from_tables(t)),
            Construction::Discrete { objects } => cat(FinCategory::discrete(*objects)),
            Construction::Chaotic { objects } => cat(FinCategory::chaotic(*objects)),
            Construction::CyclicGroup { order } => cat(FinCategory::cyclic_group(*order)),
            Construction::Ordinal { n } => cat(FinCategory::ordinal(*n)),
            Construction::Poset { objects, relation } => FinCategory::poset(*objects, relation).map_err(core).and_then(cat),
            Construction::CategoryTable(t) => category_from_table(t).map_err(core).and_then(cat),
            Construction::FundamentalGroupoid { of } => {
                let x = self.sset(name, of)?;
                fundamental_groupoid_of(&x, cb).map(|g| g.category).map_err(core).and_then(cat)
            }
            Construction::Constant { category, bound, basepoint } => {
                let c = self.category(name, category)?;
                let s = SimplicialCategory::constant((*c).clone(), *bound);
                scat(match basepoint {
                    Some(o) => s.pointed_at(*o),
                    None => Ok(s),
                })
            }
            Construction::S0 { bound } => scat(Ok(SimplicialCategory::s0(*bound))),
            Construction::Terminal { bound } => scat(SimplicialCategory::terminal(*bound).pointed_at(0)),
            Construction::PiLevelwise { of } => {
                let b = self.biset(name, of)?;
                scat(pi_levelwise(&b, cb))
            }
            Construction::Rho { of, rho: choice, levels } => {
                let x = self.sset(name, of)?;
                scat(rho(&x, (*choice).into(), *levels, cb).map(|r| (*r.category).clone()))
            }
            Construction::Suspension { of, times } => {
                let c = self.scat(name, of)?;
                scat(suspend_n(&c, *times, cb).map(|s| (*s).clone()))
            }
            Construction::Smash { of, with, rho: choice } => {
                let c = self.scat(name, of)?;
                let x = self.sset(name, with)?;
                scat(smash(&c, &x, (*choice).into(), cb).map(|s| (*s.category).clone()))
            }
            Construction::ScatTables(t) => scat(scat_from_tables(t)),
            Construction::SigmaInfinity { of, length } => {
                let c = self.scat(name, of)?;
                sigma_infinity(&c, *length, cb).map(|s| Value::Spectrum(Arc::new(s))).map_err(core)
            }
            Construction::ConstantStructure { levels } => {
                let ls = levels.iter().map(|l| self.scat(name, l)).collect::<Result<Vec<_>, _>>()?;
                constant_structure(ls, cb).map(|s| Value::Spectrum(Arc::new(s))).map_err(core)
            }
            Construction::Spectrum { levels, structure } => {
                let ls = levels.iter().map(|l| self.scat(name, l)).collect::<Result<Vec<_>, _>>()?;
                spectrum_from_tables(ls, structure, cb).map(|s| Value::Spectrum(Arc::new(s))).map_err(core)
            }
        }
    }
}

fn wrong(entity: &str, reference: &str, expected: &'static str, found: &Value) -> LoadError {
    LoadError::WrongKind { entity: entity.to_string(), reference: reference.to_string(), expected, found: found.kind() }
}

/// Runs the identity audits; the first violation is the witness.
fn audit(name: &str, v: &Value) -> Result<(), LoadError> {
    let witness = match v {
        Value::Sset(x) => x.audit().first().map(|w| w.to_string()),
        Value::Biset(x) => x.audit().first().map(|w| w.to_string()),
        Value::Category(x) => x.audit().first().map(|w| w.to_string()),
        Value::Scat(x) => x.audit().first().map(|w| w.to_string()),
        Value::Spectrum(_) => None,
    };
    match witness {
        Some(witness) => Err(LoadError::Audit { entity: name.to_string(), witness }),
        None => Ok(()),
    }
}

fn sset_from_tables(t: &SsetTables) -> scatbench_core::Result<SimplicialSet> {
    SimplicialSet::from_tables(t.bound, t.sizes.clone(), t.faces.clone(), t.degens.clone(), t.basepoint)
}

pub fn sset_tables(x: &SimplicialSet) -> SsetTables {
    let bound = x.bound();
    let faces = (0..=bound)
        .map(|n| if n == 0 { Vec::new() } else { (0..=n).map(|i| (0..x.size(n) as u32).map(|s| x.face(n, i, s)).collect()).collect() })
        .collect();
    let degens = (0..=bound)
        .map(|n| if n == bound { Vec::new() } else { (0..=n).map(|j| (0..x.size(n) as u32).map(|s| x.degen(n, j, s)).collect()).collect() })
        .collect();
    SsetTables { bound, sizes: x.sizes().to_vec(), faces, degens, basepoint: x.basepoint() }
}

fn biset_from_tables(t: &BisetTables) -> scatbench_core::Result<BisimplicialSet> {
    let shape = BidegreeShape::from_row_maxima(t.shape.clone())?;
    let size = |p: usize, q: usize| t.sizes.get(p).and_then(|r| r.get(q)).copied();
    for (p, q) in shape.cells() {
        let n = size(p, q).ok_or_else(|| CoreError::Invalid(format!("missing size at ({p}, {q})")))?;
        let count = |tab: &Vec<Vec<Vec<Vec<u32>>>>, want: usize, what: &str| -> scatbench_core::Result<()> {
            let maps = tab.get(p).and_then(|r| r.get(q)).ok_or_else(|| CoreError::Invalid(format!("missing {what} at ({p}, {q})")))?;
            if maps.len() != want || maps.iter().any(|m| m.len() != n) {
                return Err(CoreError::Invalid(format!("{what} at ({p}, {q}) have the wrong shape")));
            }
            Ok(())
        };
        count(&t.hfaces, if p > 0 { p + 1 } else { 0 }, "horizontal faces")?;
        count(&t.hdegens, if shape.contains(p + 1, q) { p + 1 } else { 0 }, "horizontal degeneracies")?;
        count(&t.vfaces, if q > 0 { q + 1 } else { 0 }, "vertical faces")?;
        count(&t.vdegens, if shape.contains(p, q + 1) { q + 1 } else { 0 }, "vertical degeneracies")?;
    }
    let b = BisimplicialSet::from_index_maps(
        shape,
        |p, q| t.sizes[p][q],
        |p, q, i, x| t.hfaces[p][q][i][x as usize],
        |p, q, j, x| t.hdegens[p][q][j][x as usize],
        |p, q, i, x| t.vfaces[p][q][i][x as usize],
        |p, q, j, x| t.vdegens[p][q][j][x as usize],
    )?;
    b.with_basepoint(t.basepoint)
}

pub fn biset_tables(b: &BisimplicialSet) -> BisetTables {
    let shape = b.shape();
    let rows: Vec<usize> = (0..=shape.max_p()).map(|p| shape.max_q(p).expect("row in shape")).collect();
    let table = |count: &dyn Fn(usize, usize) -> usize, f: &dyn Fn(usize, usize, usize, u32) -> u32| -> Vec<Vec<Vec<Vec<u32>>>> {
        rows.iter()
            .enumerate()
            .map(|(p, &qm)| {
                (0..=qm)
                    .map(|q| (0..count(p, q)).map(|i| (0..b.size(p, q) as u32).map(|x| f(p, q, i, x)).collect()).collect())
                    .collect()
            })
            .collect()
    };
    BisetTables {
        shape: rows.clone(),
        sizes: rows.iter().enumerate().map(|(p, &qm)| (0..=qm).map(|q| b.size(p, q)).collect()).collect(),
        hfaces: table(&|p, _| if p > 0 { p + 1 } else { 0 }, &|p, q, i, x| b.hface(p, q, i, x)),
        hdegens: table(&|p, q| if shape.contains(p + 1, q) { p + 1 } else { 0 }, &|p, q, j, x| b.hdegen(p, q, j, x)),
        vfaces: table(&|_, q| if q > 0 { q + 1 } else { 0 }, &|p, q, i, x| b.vface(p, q, i, x)),
        vdegens: table(&|p, q| if shape.contains(p, q + 1) { q + 1 } else { 0 }, &|p, q, j, x| b.vdegen(p, q, j, x)),
        basepoint: b.basepoint(),
    }
}

fn category_from_table(t: &CategoryTable) -> scatbench_core::Result<FinCategory> {
    FinCategory::from_triples(t.objects, t.sources.clone(), t.targets.clone(), t.identities.clone(), &t.composition)
}

pub fn category_table(c: &FinCategory) -> CategoryTable {
    let composition = c
        .composition_triples()
        .into_iter()
        .filter(|&(g, f, _)| !c.is_identity(g) && !c.is_identity(f))
        .collect();
    CategoryTable {
        objects: c.object_count(),
        sources: c.sources().to_vec(),
        targets: c.targets().to_vec(),
        identities: c.identities().to_vec(),
        composition,
    }
}

fn functor_table(f: &Functor) -> FunctorTable {
    FunctorTable { objects: f.object_map().to_vec(), morphisms: f.morphism_map().to_vec() }
}

fn functor_from_table(s: &Arc<FinCategory>, t: &Arc<FinCategory>, f: &FunctorTable) -> scatbench_core::Result<Functor> {
    Functor::new(s.clone(), t.clone(), f.objects.clone(), f.morphisms.clone())
}

fn scat_from_tables(t: &ScatTables) -> scatbench_core::Result<SimplicialCategory> {
    let levels = t.levels.iter().map(|l| category_from_table(l).map(Arc::new)).collect::<scatbench_core::Result<Vec<_>>>()?;
    let bound = levels.len().saturating_sub(1);
    let get = |n: usize, k: usize, target: usize, tabs: &Vec<Vec<FunctorTable>>| -> scatbench_core::Result<Functor> {
        let tab = tabs.get(n).and_then(|r| r.get(k)).ok_or_else(|| CoreError::Invalid(format!("missing structure functor at level {n}")))?;
        let target = levels.get(target).ok_or_else(|| CoreError::Invalid("structure functor past the bound".into()))?;
        functor_from_table(&levels[n], target, tab)
    };
    let mut faces = Vec::with_capacity(bound + 1);
    let mut degens = Vec::with_capacity(bound + 1);
    for n in 0..=bound {
        let nf = t.faces.get(n).map_or(0, Vec::len);
        let nd = t.degens.get(n).map_or(0, Vec::len);
        faces.push((0..nf).map(|i| get(n, i, n.wrapping_sub(1), &t.faces)).collect::<scatbench_core::Result<Vec<_>>>()?);
        degens.push((0..nd).map(|j| get(n, j, n + 1, &t.degens)).collect::<scatbench_core::Result<Vec<_>>>()?);
    }
    SimplicialCategory::new(levels, faces, degens, t.basepoint.clone())
}

pub fn scat_tables(c: &SimplicialCategory) -> ScatTables {
    let bound = c.bound();
    ScatTables {
        levels: c.levels().iter().map(|l| category_table(l)).collect(),
        faces: (0..=bound).map(|n| if n == 0 { Vec::new() } else { (0..=n).map(|i| functor_table(c.face(n, i))).collect() }).collect(),
        degens: (0..=bound).map(|n| if n == bound { Vec::new() } else { (0..=n).map(|j| functor_table(c.degen(n, j))).collect() }).collect(),
        basepoint: c.basepoint().map(<[u32]>::to_vec),
    }
}

fn spectrum_from_tables(
    levels: Vec<Arc<SimplicialCategory>>,
    structure: &[Vec<FunctorTable>],
    closure_bound: usize,
) -> scatbench_core::Result<SpectrumObject> {
    if structure.len() + 1 != levels.len() {
        return Err(CoreError::Invalid("a spectrum of length N needs N - 1 structure functors".into()));
    }
    let mut sigma = Vec::with_capacity(structure.len());
    for (n, tabs) in structure.iter().enumerate() {
        let s = scatbench_core::scat::suspend(&levels[n], closure_bound)?.category;
        if tabs.len() != s.bound() + 1 {
            return Err(CoreError::Invalid(format!("structure functor {n} needs one table per level")));
        }
        let fs = tabs
            .iter()
            .enumerate()
            .map(|(k, t)| functor_from_table(s.level(k), levels[n + 1].level(k), t))
            .collect::<scatbench_core::Result<Vec<_>>>()?;
        sigma.push(SimplicialFunctor::new(s, levels[n + 1].clone(), fs)?);
    }
    SpectrumObject::new(levels, sigma, closure_bound)
}

/// Structure functor tables of a spectrum, level by level.
pub fn spectrum_structure_tables(s: &SpectrumObject) -> Vec<Vec<FunctorTable>> {
    (0..s.len() - 1).map(|n| s.structure(n).levels().iter().map(functor_table).collect()).collect()
}
