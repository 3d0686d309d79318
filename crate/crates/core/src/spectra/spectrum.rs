use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::homotopy::{edge_path_group, pi0};
use crate::scat::{constant_at_basepoint, diag_nerve_iso, suspend, SimplicialCategory, SimplicialFunctor};

/// Levels `D⁰ … D^{N-1}` with structure functors `σⁿ : ΣDⁿ -> Dⁿ⁺¹`.
#[derive(Debug, Clone)]
pub struct SpectrumObject {
    levels: Vec<Arc<SimplicialCategory>>,
    suspensions: Vec<Arc<SimplicialCategory>>,
    structure: Vec<SimplicialFunctor>,
}

impl SpectrumObject {
    /// Checks that every `σⁿ` is a pointed simplicial functor from the
    /// suspension of level `n` to level `n + 1`.
    pub fn new(levels: Vec<Arc<SimplicialCategory>>, structure: Vec<SimplicialFunctor>, closure_bound: usize) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::SpectrumTooShort(0));
        }
        if structure.len() + 1 != levels.len() {
            return Err(Error::invalid("a spectrum of length N needs N - 1 structure functors"));
        }
        if let Some(n) = levels.iter().position(|l| !l.is_pointed()) {
            return Err(Error::invalid(format!("level {n} is not pointed")));
        }
        let suspensions = levels[..levels.len() - 1]
            .iter()
            .map(|l| suspend(l, closure_bound).map(|s| s.category))
            .collect::<Result<Vec<_>>>()?;
        for (n, s) in structure.iter().enumerate() {
            if **s.source() != *suspensions[n] || **s.target() != *levels[n + 1] {
                return Err(Error::invalid(format!("structure functor {n} has the wrong ends")));
            }
            if let Some(v) = s.violation() {
                return Err(Error::invalid(format!("structure functor {n}: {v}")));
            }
            if !s.preserves_basepoint() {
                return Err(Error::invalid(format!("structure functor {n} is not pointed")));
            }
        }
        Ok(SpectrumObject { levels, suspensions, structure })
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn level(&self, n: usize) -> &Arc<SimplicialCategory> {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[Arc<SimplicialCategory>] {
        &self.levels
    }

    pub fn suspension(&self, n: usize) -> &Arc<SimplicialCategory> {
        &self.suspensions[n]
    }

    pub fn structure(&self, n: usize) -> &SimplicialFunctor {
        &self.structure[n]
    }
}

/// `Σ^∞ C = (C, ΣC, ΣΣC, …)` with identity structure functors.
pub fn sigma_infinity(c: &SimplicialCategory, length: usize, closure_bound: usize) -> Result<SpectrumObject> {
    if length == 0 {
        return Err(Error::SpectrumTooShort(0));
    }
    if !c.is_pointed() {
        return Err(Error::invalid("suspension spectra need a pointed category"));
    }
    let mut levels = vec![Arc::new(c.clone())];
    for _ in 1..length {
        let s = suspend(levels.last().expect("nonempty"), closure_bound)?;
        levels.push(s.category);
    }
    let structure = levels[1..].iter().map(|l| SimplicialFunctor::identity(l.clone())).collect();
    let suspensions = levels[1..].to_vec();
    Ok(SpectrumObject { levels, suspensions, structure })
}

/// Levels given, structure functors constant at the basepoint.
pub fn constant_structure(levels: Vec<Arc<SimplicialCategory>>, closure_bound: usize) -> Result<SpectrumObject> {
    let mut structure = Vec::with_capacity(levels.len().saturating_sub(1));
    for n in 0..levels.len().saturating_sub(1) {
        let s = suspend(&levels[n], closure_bound)?.category;
        structure.push(constant_at_basepoint(s, levels[n + 1].clone())?);
    }
    SpectrumObject::new(levels, structure, closure_bound)
}

/// `(s₋X)ₙ = Xₙ₊₁`.
pub fn shift(s: &SpectrumObject) -> Result<SpectrumObject> {
    if s.len() < 2 {
        return Err(Error::SpectrumTooShort(s.len()));
    }
    Ok(SpectrumObject {
        levels: s.levels[1..].to_vec(),
        suspensions: s.suspensions[1..].to_vec(),
        structure: s.structure[1..].to_vec(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelVerdict {
    Confirmed,
    Refuted(String),
    Inconclusive(String),
}

impl fmt::Display for LevelVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelVerdict::Confirmed => write!(f, "confirmed"),
            LevelVerdict::Refuted(w) => write!(f, "refuted: {w}"),
            LevelVerdict::Inconclusive(r) => write!(f, "inconclusive: {r}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelComparison {
    pub level: usize,
    pub components: Option<usize>,
    /// order of `π₁` at the basepoint of the next level, `None` past the
    /// enumeration bound
    pub loop_classes: Option<usize>,
    pub enumeration_bound: usize,
    pub verdict: LevelVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaProbeReport {
    pub levels: Vec<LevelComparison>,
    pub overall: LevelVerdict,
}

/// Compares `|π₀ diag N•iso Dⁿ|` with the number of loop classes at the
/// basepoint of `diag N•iso Dⁿ⁺¹`, for each `n`. Levels must reach degree
/// `max(k + 1, 2)`; shorter ones are inconclusive.
pub fn omega_spectrum_probe(s: &SpectrumObject, k: usize) -> OmegaProbeReport {
    let need = (k + 1).max(2);
    let levels: Vec<LevelComparison> = (0..s.len().saturating_sub(1))
        .into_par_iter()
        .map(|n| compare_level(s, n, need))
        .collect();
    let overall = if let Some(r) = levels.iter().find(|l| matches!(l.verdict, LevelVerdict::Refuted(_))) {
        LevelVerdict::Refuted(format!("level {}", r.level))
    } else if let Some(r) = levels.iter().find(|l| matches!(l.verdict, LevelVerdict::Inconclusive(_))) {
        LevelVerdict::Inconclusive(format!("level {}", r.level))
    } else {
        LevelVerdict::Confirmed
    };
    OmegaProbeReport { levels, overall }
}

fn compare_level(s: &SpectrumObject, n: usize, need: usize) -> LevelComparison {
    let mut out = LevelComparison { level: n, components: None, loop_classes: None, enumeration_bound: 0, verdict: LevelVerdict::Confirmed };
    let (a, b) = (s.level(n), s.level(n + 1));
    if a.bound() < need || b.bound() < need {
        out.verdict = LevelVerdict::Inconclusive(format!("levels certified below degree {need}"));
        return out;
    }
    let run = || -> Result<(usize, Option<usize>, usize)> {
        let p0 = pi0(&diag_nerve_iso(a)?).count;
        let y = diag_nerve_iso(b)?;
        let bp = y.basepoint().ok_or_else(|| Error::invalid("unpointed level"))?;
        let g = edge_path_group(&y, bp)?;
        let limit = (2 * p0).max(32);
        Ok((p0, g.bounded_order(limit)?, limit))
    };
    match run() {
        Err(e) => out.verdict = LevelVerdict::Inconclusive(e.to_string()),
        Ok((p0, order, limit)) => {
            out.components = Some(p0);
            out.loop_classes = order;
            out.enumeration_bound = limit;
            out.verdict = match order {
                Some(o) if o == p0 => LevelVerdict::Confirmed,
                Some(o) => LevelVerdict::Refuted(format!("{p0} components vs {o} loop classes")),
                None => LevelVerdict::Refuted(format!("{p0} components vs more than {limit} loop classes")),
            };
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homotopy::reduced_homology_all;
    use crate::homotopy::AbelianGroup;

    const CB: usize = 10_000;

    #[test]
    fn suspension_spectrum_levels() {
        let s = sigma_infinity(&SimplicialCategory::s0(3), 3, CB).unwrap();
        assert_eq!(**s.level(0), SimplicialCategory::s0(3));
        for n in 0..2 {
            assert_eq!(*s.level(n + 1), suspend(s.level(n), CB).unwrap().category);
        }
        for n in 0..3 {
            let h = reduced_homology_all(&diag_nerve_iso(s.level(n)).unwrap()).unwrap();
            for (i, g) in h.iter().enumerate().take(3) {
                let want = if i == n { AbelianGroup::free(1) } else { AbelianGroup::trivial() };
                assert_eq!(*g, want, "level {n} degree {i}");
            }
        }
    }

    #[test]
    fn shifting() {
        let s = sigma_infinity(&SimplicialCategory::s0(2), 4, CB).unwrap();
        let t = shift(&s).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(*t.level(0), suspend(&SimplicialCategory::s0(2), CB).unwrap().category);
        let tt = shift(&t).unwrap();
        assert_eq!(tt.levels(), &s.levels()[2..]);
        assert!(matches!(shift(&shift(&tt).unwrap()), Err(Error::SpectrumTooShort(1))));
    }

    #[test]
    fn probe_controls() {
        let s = sigma_infinity(&SimplicialCategory::s0(3), 2, CB).unwrap();
        let r = omega_spectrum_probe(&s, 1);
        assert!(matches!(r.levels[0].verdict, LevelVerdict::Refuted(_)));
        assert_eq!(r.levels[0].components, Some(2));
        assert_eq!(r.levels[0].loop_classes, None);

        let t = SimplicialCategory::terminal(3).pointed_at(0).unwrap();
        let r = omega_spectrum_probe(&sigma_infinity(&t, 3, CB).unwrap(), 1);
        assert_eq!(r.overall, LevelVerdict::Confirmed);
        assert_eq!(r.levels.len(), 2);

        let mixed = constant_structure(vec![Arc::new(t.clone()), Arc::new(SimplicialCategory::s0(3)), Arc::new(t)], CB).unwrap();
        let r = omega_spectrum_probe(&mixed, 1);
        assert_eq!(r.levels[0].verdict, LevelVerdict::Confirmed);
        assert!(matches!(r.levels[1].verdict, LevelVerdict::Refuted(_)));
    }
}
