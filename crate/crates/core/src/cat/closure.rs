//! Bounded word closure for presented categories.
//!
//! Morphisms out of each object are enumerated as classes of paths. Every
//! class gets an edge for each generator leaving its endpoint, and every
//! relation is imposed at every class; identifications propagate along the
//! edges. Enumeration stops with [`Error::BoundExceeded`] once the number of
//! live classes passes a multiple of the bound.

use crate::cat::category::FinCategory;
use crate::error::{Error, Result};

/// A relation `lhs = rhs` between paths starting at `start`; words are in
/// path order (first letter applied first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub start: u32,
    pub lhs: Vec<u32>,
    pub rhs: Vec<u32>,
}

/// Objects, generating arrows `(src, tgt)` and relations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CategoryPresentation {
    pub objects: usize,
    pub generators: Vec<(u32, u32)>,
    pub relations: Vec<Relation>,
}

/// The closed category with the morphism of each generator and a path word
/// for each morphism.
#[derive(Debug, Clone)]
pub struct ClosedCategory {
    pub category: FinCategory,
    pub generator_morphism: Vec<u32>,
    pub words: Vec<Vec<u32>>,
}

impl CategoryPresentation {
    /// Endpoint of `word` read from `start`, if it is composable.
    pub fn endpoint(&self, start: u32, word: &[u32]) -> Option<u32> {
        let mut at = start;
        for &g in word {
            let &(s, t) = self.generators.get(g as usize)?;
            if s != at {
                return None;
            }
            at = t;
        }
        Some(at)
    }

    pub fn validate(&self) -> Result<()> {
        for &(s, t) in &self.generators {
            if s as usize >= self.objects || t as usize >= self.objects {
                return Err(Error::invalid("generator endpoint is not an object"));
            }
        }
        for (k, r) in self.relations.iter().enumerate() {
            if r.start as usize >= self.objects {
                return Err(Error::invalid(format!("relation {k} starts outside the objects")));
            }
            match (self.endpoint(r.start, &r.lhs), self.endpoint(r.start, &r.rhs)) {
                (Some(a), Some(b)) if a == b => {}
                _ => return Err(Error::invalid(format!("relation {k} has sides that are not parallel paths"))),
            }
        }
        Ok(())
    }
}

const UNDEFINED: u32 = u32::MAX;

struct Table<'a> {
    p: &'a CategoryPresentation,
    start: Vec<u32>,
    end: Vec<u32>,
    // creation edge: (parent, letter)
    made_from: Vec<(u32, u32)>,
    next: Vec<Vec<u32>>,
    parent: Vec<u32>,
    live: usize,
    limit: usize,
    bound: usize,
    queue: Vec<(u32, u32)>,
}

impl<'a> Table<'a> {
    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = x;
        while self.parent[c as usize] != r {
            let n = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = n;
        }
        r
    }

    fn add_node(&mut self, start: u32, end: u32, from: (u32, u32)) -> Result<u32> {
        self.live += 1;
        if self.live > self.limit {
            return Err(Error::BoundExceeded { bound: self.bound, context: None });
        }
        let id = self.start.len() as u32;
        self.start.push(start);
        self.end.push(end);
        self.made_from.push(from);
        self.next.push(vec![UNDEFINED; self.p.generators.len()]);
        self.parent.push(id);
        Ok(id)
    }

    fn step(&mut self, x: u32, g: u32) -> Result<u32> {
        let x = self.find(x);
        let y = self.next[x as usize][g as usize];
        if y != UNDEFINED {
            return Ok(self.find(y));
        }
        let y = self.add_node(self.start[x as usize], self.p.generators[g as usize].1, (x, g))?;
        self.next[x as usize][g as usize] = y;
        Ok(y)
    }

    fn trace(&mut self, mut x: u32, word: &[u32]) -> Result<u32> {
        for &g in word {
            x = self.step(x, g)?;
        }
        Ok(x)
    }

    fn coincide(&mut self, a: u32, b: u32) {
        self.queue.push((a, b));
        while let Some((a, b)) = self.queue.pop() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            let (keep, drop) = if a < b { (a, b) } else { (b, a) };
            self.parent[drop as usize] = keep;
            self.live -= 1;
            let dropped = std::mem::take(&mut self.next[drop as usize]);
            for (g, &y) in dropped.iter().enumerate() {
                if y == UNDEFINED {
                    continue;
                }
                let z = self.next[keep as usize][g];
                if z == UNDEFINED {
                    self.next[keep as usize][g] = y;
                } else {
                    self.queue.push((z, y));
                }
            }
        }
    }
}

/// Closes the presentation, failing when more than `bound` morphisms appear.
pub fn close_presentation(p: &CategoryPresentation, bound: usize) -> Result<ClosedCategory> {
    p.validate()?;
    let mut out_gens = vec![Vec::new(); p.objects];
    for (g, &(s, _)) in p.generators.iter().enumerate() {
        out_gens[s as usize].push(g as u32);
    }
    let mut rels_at = vec![Vec::new(); p.objects];
    for r in &p.relations {
        rels_at[r.start as usize].push(r);
    }
    let mut t = Table {
        p,
        start: Vec::new(),
        end: Vec::new(),
        made_from: Vec::new(),
        next: Vec::new(),
        parent: Vec::new(),
        live: 0,
        limit: bound.saturating_mul(4).max(bound + 64),
        bound,
        queue: Vec::new(),
    };
    for o in 0..p.objects as u32 {
        t.add_node(o, o, (UNDEFINED, UNDEFINED))?;
    }
    let mut i = 0u32;
    while (i as usize) < t.start.len() {
        if t.find(i) != i {
            i += 1;
            continue;
        }
        let end = t.end[i as usize] as usize;
        for &g in &out_gens[end] {
            t.step(i, g)?;
        }
        for r in &rels_at[end] {
            if t.find(i) != i {
                break;
            }
            let a = t.trace(i, &r.lhs)?;
            let b = t.trace(i, &r.rhs)?;
            t.coincide(a, b);
        }
        i += 1;
    }
    if t.live > bound {
        return Err(Error::BoundExceeded { bound, context: None });
    }
    // number the live classes in creation order
    let n = t.start.len();
    let mut number = vec![UNDEFINED; n];
    let mut reps = Vec::new();
    for x in 0..n as u32 {
        if t.find(x) == x {
            number[x as usize] = reps.len() as u32;
            reps.push(x);
        }
    }
    let word_of = |t: &Table, mut x: u32| {
        let mut w = Vec::new();
        while t.made_from[x as usize].0 != UNDEFINED {
            let (par, g) = t.made_from[x as usize];
            w.push(g);
            x = par;
        }
        w.reverse();
        w
    };
    let words: Vec<Vec<u32>> = reps.iter().map(|&x| word_of(&t, x)).collect();
    let src: Vec<u32> = reps.iter().map(|&x| t.start[x as usize]).collect();
    let tgt: Vec<u32> = reps.iter().map(|&x| t.end[x as usize]).collect();
    let identity: Vec<u32> = (0..p.objects as u32).map(|o| number[t.find(o) as usize]).collect();
    // right action table on classes
    let mut act = vec![vec![UNDEFINED; p.generators.len()]; reps.len()];
    for (k, &x) in reps.iter().enumerate() {
        for g in 0..p.generators.len() {
            let y = t.next[x as usize][g];
            if y != UNDEFINED {
                act[k][g] = number[t.find(y) as usize];
            }
        }
    }
    let generator_morphism: Vec<u32> = (0..p.generators.len()).map(|g| act[identity[p.generators[g].0 as usize] as usize][g]).collect();
    let category = FinCategory::from_fn(p.objects, src, tgt, identity, |g, f| {
        words[g as usize].iter().fold(f, |x, &letter| act[x as usize][letter as usize])
    })?;
    Ok(ClosedCategory { category, generator_morphism, words })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_close() {
        for n in 1..6u32 {
            let p = CategoryPresentation {
                objects: 1,
                generators: vec![(0, 0)],
                relations: vec![Relation { start: 0, lhs: vec![0; n as usize], rhs: vec![] }],
            };
            let c = close_presentation(&p, 100).unwrap();
            assert_eq!(c.category.morphism_count(), n as usize);
            assert!(c.category.audit().is_empty());
            assert!(c.category.is_groupoid());
        }
    }

    #[test]
    fn free_monoid_exceeds() {
        let p = CategoryPresentation { objects: 1, generators: vec![(0, 0)], relations: vec![] };
        assert!(matches!(close_presentation(&p, 50), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn symmetric_group_and_idempotent() {
        // S3 = <a, b | a^2, b^2, (ab)^3>, with inverses unnecessary in a finite monoid
        let p = CategoryPresentation {
            objects: 1,
            generators: vec![(0, 0), (0, 0)],
            relations: vec![
                Relation { start: 0, lhs: vec![0, 0], rhs: vec![] },
                Relation { start: 0, lhs: vec![1, 1], rhs: vec![] },
                Relation { start: 0, lhs: vec![0, 1, 0, 1, 0, 1], rhs: vec![] },
            ],
        };
        let c = close_presentation(&p, 100).unwrap();
        assert_eq!(c.category.morphism_count(), 6);
        assert!(c.category.audit().is_empty());
        let p = CategoryPresentation {
            objects: 1,
            generators: vec![(0, 0)],
            relations: vec![Relation { start: 0, lhs: vec![0, 0], rhs: vec![0] }],
        };
        let c = close_presentation(&p, 100).unwrap();
        assert_eq!(c.category.morphism_count(), 2);
        assert!(!c.category.is_groupoid());
    }

    #[test]
    fn free_category_on_a_path() {
        // 0 -> 1 -> 2 has 6 morphisms
        let p = CategoryPresentation { objects: 3, generators: vec![(0, 1), (1, 2)], relations: vec![] };
        let c = close_presentation(&p, 100).unwrap();
        assert_eq!(c.category.morphism_count(), 6);
        assert_eq!(c.category.hom(0, 2).len(), 1);
        assert!(c.category.audit().is_empty());
    }
}
