use std::collections::VecDeque;
use std::sync::Arc;

use crate::cat::category::FinCategory;
use crate::cat::closure::{close_presentation, CategoryPresentation, Relation};
use crate::cat::functor::Functor;
use crate::error::{Error, Result};
use crate::homotopy::groups::free_reduce;
use crate::sset::{SimplicialMap, SimplicialSet};

/// A relation between words in the generators and their inverses; letters
/// are `g + 1` and `-(g + 1)`, read in path order from `start`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupoidRelation {
    pub start: u32,
    pub lhs: Vec<i32>,
    pub rhs: Vec<i32>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PresentedGroupoid {
    pub objects: usize,
    pub generators: Vec<(u32, u32)>,
    pub relations: Vec<GroupoidRelation>,
}

impl PresentedGroupoid {
    fn letter_ends(&self, l: i32) -> Option<(u32, u32)> {
        let g = l.unsigned_abs().checked_sub(1)? as usize;
        let &(s, t) = self.generators.get(g)?;
        Some(if l > 0 { (s, t) } else { (t, s) })
    }

    pub fn endpoint(&self, start: u32, word: &[i32]) -> Option<u32> {
        let mut at = start;
        for &l in word {
            let (s, t) = self.letter_ends(l)?;
            if s != at {
                return None;
            }
            at = t;
        }
        Some(at)
    }

    pub fn validate(&self) -> Result<()> {
        if self.generators.iter().any(|&(s, t)| s as usize >= self.objects || t as usize >= self.objects) {
            return Err(Error::invalid("generator endpoint is not an object"));
        }
        for (k, r) in self.relations.iter().enumerate() {
            match (self.endpoint(r.start, &r.lhs), self.endpoint(r.start, &r.rhs)) {
                (Some(a), Some(b)) if a == b && (r.start as usize) < self.objects => {}
                _ => return Err(Error::invalid(format!("relation {k} has sides that are not parallel paths"))),
            }
        }
        Ok(())
    }
}

/// A materialized groupoid with the morphism named by each generator, the
/// inverse of each morphism and a word for each morphism.
#[derive(Debug, Clone)]
pub struct Groupoid {
    pub category: FinCategory,
    pub generator_morphism: Vec<u32>,
    pub inverses: Vec<u32>,
    pub words: Vec<Vec<i32>>,
}

impl Groupoid {
    /// Evaluates a word from `start`, given the image of every generator.
    pub fn evaluate(&self, start: u32, word: &[i32]) -> u32 {
        eval_word(&self.category, &self.inverses, start, word, |g| self.generator_morphism[g])
    }
}

/// Composes the images of the letters of `word` in a groupoid.
pub fn eval_word(c: &FinCategory, inverses: &[u32], start: u32, word: &[i32], image: impl Fn(usize) -> u32) -> u32 {
    let mut acc = c.identity(start);
    for &l in word {
        let m = image(l.unsigned_abs() as usize - 1);
        let m = if l > 0 { m } else { inverses[m as usize] };
        acc = c.compose(m, acc);
    }
    acc
}

fn invert(word: &[i32]) -> Vec<i32> {
    word.iter().rev().map(|&l| -l).collect()
}

/// Edge-generated groupoid of `X`: objects `X₀`, one generator `d₁e -> d₀e`
/// per 1-simplex, the identity relation for degenerate edges and
/// `[d₂l][d₀l] = [d₁l]` per nondegenerate 2-simplex. Relations of degenerate
/// 2-simplices follow from the identity relations and are omitted.
pub fn fundamental_groupoid(x: &SimplicialSet) -> Result<PresentedGroupoid> {
    if x.bound() < 2 {
        return Err(Error::BoundTooSmall { bound: x.bound(), reason: "relations need 2-simplices".into() });
    }
    let generators = (0..x.size(1) as u32).map(|e| (x.face(1, 1, e), x.face(1, 0, e))).collect();
    let mut relations = Vec::new();
    for e in 0..x.size(1) as u32 {
        if x.is_degenerate(1, e) {
            relations.push(GroupoidRelation { start: x.face(1, 1, e), lhs: vec![e as i32 + 1], rhs: vec![] });
        }
    }
    for l in x.nondegenerate(2) {
        let letter = |i: usize| x.face(2, i, l) as i32 + 1;
        relations.push(GroupoidRelation { start: x.act(2, l, &[0]), lhs: vec![letter(2), letter(0)], rhs: vec![letter(1)] });
    }
    Ok(PresentedGroupoid { objects: x.size(0), generators, relations })
}

/// Materializes a presented groupoid with at most `bound` morphisms.
///
/// Each connected component is reduced along a breadth-first spanning tree
/// to a presentation of its vertex group, which is closed by word closure.
/// The component then has one morphism `a -> b` per group element `g`, read
/// as the path `p(a)⁻¹ g p(b)` through the root.
pub fn materialize_groupoid(p: &PresentedGroupoid, bound: usize) -> Result<Groupoid> {
    p.validate()?;
    let n = p.objects;
    let mut adjacency = vec![Vec::new(); n];
    for (g, &(s, t)) in p.generators.iter().enumerate() {
        adjacency[s as usize].push(g as i32 + 1);
        adjacency[t as usize].push(-(g as i32 + 1));
    }
    // spanning forest: tree path from the component root to every object
    let mut component = vec![u32::MAX; n];
    let mut path: Vec<Vec<i32>> = vec![Vec::new(); n];
    let mut tree = vec![false; p.generators.len()];
    let mut members: Vec<Vec<u32>> = Vec::new();
    for root in 0..n {
        if component[root] != u32::MAX {
            continue;
        }
        let c = members.len() as u32;
        members.push(vec![root as u32]);
        component[root] = c;
        let mut queue = VecDeque::from([root as u32]);
        while let Some(a) = queue.pop_front() {
            for &l in &adjacency[a as usize] {
                let (_, b) = p.letter_ends(l).expect("validated");
                if component[b as usize] == u32::MAX {
                    component[b as usize] = c;
                    tree[l.unsigned_abs() as usize - 1] = true;
                    let mut w = path[a as usize].clone();
                    w.push(l);
                    path[b as usize] = w;
                    members[c as usize].push(b);
                    queue.push_back(b);
                }
            }
        }
    }
    for m in &mut members {
        m.sort_unstable();
    }
    // vertex group generators: the off-tree generators of each component
    let mut group_letter = vec![0i32; p.generators.len()];
    let mut group_gens: Vec<Vec<usize>> = vec![Vec::new(); members.len()];
    for (g, &(s, _)) in p.generators.iter().enumerate() {
        if !tree[g] {
            let c = component[s as usize] as usize;
            group_gens[c].push(g);
            group_letter[g] = group_gens[c].len() as i32;
        }
    }
    let image = |w: &[i32]| -> Vec<i32> {
        w.iter()
            .filter_map(|&l| {
                let k = group_letter[l.unsigned_abs() as usize - 1];
                (k != 0).then_some(if l > 0 { k } else { -k })
            })
            .collect()
    };
    let mut relators: Vec<Vec<Vec<i32>>> = vec![Vec::new(); members.len()];
    for r in &p.relations {
        let mut w = image(&r.lhs);
        w.extend(invert(&image(&r.rhs)));
        let w = free_reduce(&w);
        if !w.is_empty() {
            relators[component[r.start as usize] as usize].push(w);
        }
    }
    let total_pairs: usize = members.iter().map(|m| m.len() * m.len()).sum();
    if total_pairs > bound {
        return Err(Error::BoundExceeded { bound, context: Some("more object pairs than the bound".into()) });
    }
    // close each vertex group
    let mut groups = Vec::with_capacity(members.len());
    for (c, m) in members.iter().enumerate() {
        let room = (bound - total_pairs) / (m.len() * m.len()) + 1;
        let g = vertex_group(group_gens[c].len(), &relators[c], room)
            .map_err(|e| e.with_context(format!("vertex group at object {}", m[0])))?;
        groups.push(g);
    }
    // assemble
    let mut offset = vec![0u32; members.len()];
    let mut total = 0u32;
    for (c, m) in members.iter().enumerate() {
        offset[c] = total;
        total += (m.len() * m.len() * groups[c].category.morphism_count()) as u32;
    }
    if total as usize > bound {
        return Err(Error::BoundExceeded { bound, context: None });
    }
    let mut pos = vec![0u32; n];
    for m in &members {
        for (i, &o) in m.iter().enumerate() {
            pos[o as usize] = i as u32;
        }
    }
    let mut src = Vec::with_capacity(total as usize);
    let mut tgt = Vec::with_capacity(total as usize);
    let mut owner = Vec::with_capacity(total as usize);
    for (c, m) in members.iter().enumerate() {
        let order = groups[c].category.morphism_count();
        for &a in m {
            for &b in m {
                for _ in 0..order {
                    src.push(a);
                    tgt.push(b);
                    owner.push(c as u32);
                }
            }
        }
    }
    let index = |c: usize, a: u32, b: u32, g: u32| -> u32 {
        let k = members[c].len() as u32;
        let order = groups[c].category.morphism_count() as u32;
        offset[c] + (pos[a as usize] * k + pos[b as usize]) * order + g
    };
    let decode = |m: u32| -> (usize, u32) {
        let c = owner[m as usize] as usize;
        let order = groups[c].category.morphism_count() as u32;
        (c, (m - offset[c]) % order)
    };
    let identity: Vec<u32> =
        (0..n as u32).map(|o| { let c = component[o as usize] as usize; index(c, o, o, groups[c].identity) }).collect();
    let category = FinCategory::from_fn(n, src.clone(), tgt.clone(), identity, |h, f| {
        let (c, x) = decode(f);
        let (_, y) = decode(h);
        // path order: x then y
        index(c, src[f as usize], tgt[h as usize], groups[c].category.compose(y, x))
    })?;
    let generator_morphism: Vec<u32> = p
        .generators
        .iter()
        .enumerate()
        .map(|(g, &(s, t))| {
            let c = component[s as usize] as usize;
            let elem = groups[c].element(&image(&[g as i32 + 1]));
            index(c, s, t, elem)
        })
        .collect();
    let inverses: Vec<u32> = (0..total)
        .map(|m| {
            let (c, x) = decode(m);
            index(c, tgt[m as usize], src[m as usize], groups[c].inverse[x as usize])
        })
        .collect();
    // words in the original generators
    let expand = |c: usize, w: &[i32]| -> Vec<i32> {
        let mut out = Vec::new();
        for &l in w {
            let g = group_gens[c][l.unsigned_abs() as usize - 1];
            let (s, t) = p.generators[g];
            let mut loop_word = path[s as usize].clone();
            loop_word.push(g as i32 + 1);
            loop_word.extend(invert(&path[t as usize]));
            out.extend(if l > 0 { loop_word } else { invert(&loop_word) });
        }
        out
    };
    let words: Vec<Vec<i32>> = (0..total)
        .map(|m| {
            let (c, x) = decode(m);
            let mut w = invert(&path[src[m as usize] as usize]);
            w.extend(expand(c, &groups[c].words[x as usize]));
            w.extend(path[tgt[m as usize] as usize].iter().copied());
            free_reduce(&w)
        })
        .collect();
    Ok(Groupoid { category, generator_morphism, inverses, words })
}

/// A closed finite group with signed words per element.
struct VertexGroup {
    category: FinCategory,
    identity: u32,
    inverse: Vec<u32>,
    words: Vec<Vec<i32>>,
    letter_morphism: Vec<u32>,
}

impl VertexGroup {
    fn element(&self, w: &[i32]) -> u32 {
        w.iter().fold(self.identity, |acc, &l| {
            let k = l.unsigned_abs() as usize - 1;
            let m = self.letter_morphism[2 * k + usize::from(l < 0)];
            self.category.compose(m, acc)
        })
    }
}

fn vertex_group(generators: usize, relators: &[Vec<i32>], bound: usize) -> Result<VertexGroup> {
    // letter 2k is x_k, letter 2k + 1 its inverse
    let to_letters = |w: &[i32]| -> Vec<u32> {
        w.iter().map(|&l| 2 * (l.unsigned_abs() - 1) + u32::from(l < 0)).collect()
    };
    let mut relations = Vec::new();
    for k in 0..generators as u32 {
        relations.push(Relation { start: 0, lhs: vec![2 * k, 2 * k + 1], rhs: vec![] });
        relations.push(Relation { start: 0, lhs: vec![2 * k + 1, 2 * k], rhs: vec![] });
    }
    for r in relators {
        relations.push(Relation { start: 0, lhs: to_letters(r), rhs: vec![] });
    }
    let pres = CategoryPresentation { objects: 1, generators: vec![(0, 0); 2 * generators], relations };
    let closed = close_presentation(&pres, bound)?;
    let c = closed.category;
    let identity = c.identity(0);
    let inverse = (0..c.morphism_count() as u32).map(|m| c.inverse(m).expect("closed group")).collect();
    let words = closed
        .words
        .iter()
        .map(|w| w.iter().map(|&l| { let k = (l / 2) as i32 + 1; if l % 2 == 0 { k } else { -k } }).collect())
        .collect();
    Ok(VertexGroup { category: c, identity, inverse, words, letter_morphism: closed.generator_morphism })
}

/// Order of the group `<x_1..x_k | relators>` when it has at most `bound`
/// elements.
pub fn group_order(generators: usize, relators: &[Vec<i32>], bound: usize) -> Result<usize> {
    Ok(vertex_group(generators, relators, bound)?.category.morphism_count())
}

/// `π(X)` materialized.
pub fn fundamental_groupoid_of(x: &SimplicialSet, bound: usize) -> Result<Groupoid> {
    materialize_groupoid(&fundamental_groupoid(x)?, bound)
}

/// The functor `π(f)` between materialized fundamental groupoids.
pub fn induced_functor(
    f: &SimplicialMap,
    source: &Groupoid,
    source_cat: &Arc<FinCategory>,
    target: &Groupoid,
    target_cat: &Arc<FinCategory>,
) -> Result<Functor> {
    let c = &source.category;
    let objects = f.components()[0].clone();
    let morphisms = (0..c.morphism_count() as u32)
        .map(|m| {
            eval_word(&target.category, &target.inverses, objects[c.src(m) as usize], &source.words[m as usize], |e| {
                target.generator_morphism[f.apply(1, e as u32) as usize]
            })
        })
        .collect();
    Functor::new_unchecked(source_cat.clone(), target_cat.clone(), objects, morphisms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::functor::check_equivalence;
    use crate::sset::standard::{boundary, delta, horn};

    #[test]
    fn simplices_give_chaotic_groupoids() {
        for n in 0..=3 {
            let g = fundamental_groupoid_of(&delta(n, 2).unwrap(), 1000).unwrap();
            assert_eq!(g.category.object_count(), n + 1);
            assert_eq!(g.category.morphism_count(), (n + 1) * (n + 1));
            assert!(g.category.audit().is_empty());
            assert!(g.category.is_groupoid());
        }
    }

    #[test]
    fn circle_exceeds_and_horn_is_contractible() {
        let e = fundamental_groupoid_of(&boundary(2, 2).unwrap(), 64).unwrap_err();
        assert!(matches!(e, Error::BoundExceeded { .. }));
        let h = fundamental_groupoid_of(&horn(2, 0, 2).unwrap(), 64).unwrap();
        assert_eq!(h.category.morphism_count(), 9);
    }

    #[test]
    fn generator_words_evaluate_back() {
        let x = delta(2, 2).unwrap();
        let g = fundamental_groupoid_of(&x, 100).unwrap();
        for m in 0..g.category.morphism_count() as u32 {
            assert_eq!(g.evaluate(g.category.src(m), &g.words[m as usize]), m);
        }
        // degenerate edges are identities
        for v in 0..3 {
            let e = x.degen(0, 0, v);
            assert_eq!(g.generator_morphism[e as usize], g.category.identity(v));
        }
    }

    #[test]
    fn finite_vertex_group() {
        // one object, a loop t with t³ = id
        let p = PresentedGroupoid {
            objects: 2,
            generators: vec![(0, 0), (0, 1)],
            relations: vec![GroupoidRelation { start: 0, lhs: vec![1, 1, 1], rhs: vec![] }],
        };
        let g = materialize_groupoid(&p, 100).unwrap();
        assert_eq!(g.category.morphism_count(), 12);
        assert!(g.category.audit().is_empty());
        for m in 0..12u32 {
            assert_eq!(g.evaluate(g.category.src(m), &g.words[m as usize]), m);
        }
        let trivial = materialize_groupoid(&PresentedGroupoid { objects: 1, ..Default::default() }, 10).unwrap();
        assert_eq!(trivial.category.morphism_count(), 1);
    }

    #[test]
    fn induced_functor_of_horn_inclusion_is_equivalence() {
        use crate::sset::colimit::map_by_vertices;
        let h = Arc::new(horn(2, 1, 2).unwrap());
        let d = Arc::new(delta(2, 2).unwrap());
        let j = map_by_vertices(&h, &d, &[0, 1, 2]).unwrap();
        let (gh, gd) = (fundamental_groupoid_of(&h, 100).unwrap(), fundamental_groupoid_of(&d, 100).unwrap());
        let (ch, cd) = (Arc::new(gh.category.clone()), Arc::new(gd.category.clone()));
        let f = induced_functor(&j, &gh, &ch, &gd, &cd).unwrap();
        assert!(f.violation().is_none());
        assert!(check_equivalence(&f).holds());
    }
}
