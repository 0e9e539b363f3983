//! Explicit finite groupoids: enumeration targets for functor counting.

use crate::error::{Error, Result};
use crate::group::LabelGroup;

/// A finite groupoid with explicit arrow sets and composition table.
///
/// Composition is `compose(second, first)` = second after first. All axioms
/// (associativity where defined, neutral identities, two-sided inverses) are
/// checked exhaustively at construction.
#[derive(Clone, Debug)]
pub struct FiniteGroupoid {
    objects: Vec<String>,
    arrows: Vec<FgArrow>,
    /// `compose[a2][a1]`: Some(result) when dst(a1) == src(a2).
    compose: Vec<Vec<Option<usize>>>,
    identities: Vec<usize>,
    inverses: Vec<usize>,
    /// hom[src][dst]: arrow indices in construction order.
    hom: Vec<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug)]
pub struct FgArrow {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

impl FiniteGroupoid {
    pub fn new(
        objects: Vec<String>,
        arrows: Vec<FgArrow>,
        compose_pairs: impl Fn(usize, usize) -> usize,
    ) -> Result<FiniteGroupoid> {
        let n_obj = objects.len();
        if n_obj == 0 {
            return Err(Error::Argument("a groupoid needs at least one object".into()));
        }
        let n = arrows.len();
        for a in &arrows {
            if a.src >= n_obj || a.dst >= n_obj {
                return Err(Error::Validation(format!("arrow {} has bad endpoints", a.name)));
            }
        }

        let mut compose = vec![vec![None; n]; n];
        for a1 in 0..n {
            for a2 in 0..n {
                if arrows[a1].dst == arrows[a2].src {
                    let r = compose_pairs(a2, a1);
                    if r >= n {
                        return Err(Error::Validation("composition result out of range".into()));
                    }
                    if arrows[r].src != arrows[a1].src || arrows[r].dst != arrows[a2].dst {
                        return Err(Error::Validation(format!(
                            "composite of {} and {} has wrong endpoints",
                            arrows[a1].name, arrows[a2].name
                        )));
                    }
                    compose[a2][a1] = Some(r);
                }
            }
        }

        // identities: for each object, an arrow neutral on both sides.
        let mut identities = vec![usize::MAX; n_obj];
        for x in 0..n_obj {
            let candidates: Vec<usize> = (0..n)
                .filter(|&e| arrows[e].src == x && arrows[e].dst == x)
                .filter(|&e| {
                    (0..n).all(|a| {
                        let left_ok = if arrows[a].dst == x {
                            compose[e][a] == Some(a)
                        } else {
                            true
                        };
                        let right_ok = if arrows[a].src == x {
                            compose[a][e] == Some(a)
                        } else {
                            true
                        };
                        left_ok && right_ok
                    })
                })
                .collect();
            match candidates.first() {
                Some(&e) => identities[x] = e,
                None => {
                    return Err(Error::Validation(format!(
                        "object {} has no identity arrow",
                        objects[x]
                    )))
                }
            }
        }

        // inverses
        let mut inverses = vec![usize::MAX; n];
        for a in 0..n {
            let (s, d) = (arrows[a].src, arrows[a].dst);
            match (0..n).find(|&b| {
                arrows[b].src == d
                    && arrows[b].dst == s
                    && compose[b][a] == Some(identities[s])
                    && compose[a][b] == Some(identities[d])
            }) {
                Some(b) => inverses[a] = b,
                None => {
                    return Err(Error::Validation(format!(
                        "arrow {} has no inverse",
                        arrows[a].name
                    )))
                }
            }
        }

        // associativity on all composable triples
        for a in 0..n {
            for b in 0..n {
                if arrows[a].dst != arrows[b].src {
                    continue;
                }
                let ba = compose[b][a].unwrap();
                for c in 0..n {
                    if arrows[b].dst != arrows[c].src {
                        continue;
                    }
                    let cb = compose[c][b].unwrap();
                    if compose[c][ba] != compose[cb][a] {
                        return Err(Error::Validation(format!(
                            "associativity fails at ({}, {}, {})",
                            arrows[a].name, arrows[b].name, arrows[c].name
                        )));
                    }
                }
            }
        }

        let mut hom = vec![vec![Vec::new(); n_obj]; n_obj];
        for (i, a) in arrows.iter().enumerate() {
            hom[a.src][a.dst].push(i);
        }

        Ok(FiniteGroupoid { objects, arrows, compose, identities, inverses, hom })
    }

    /// The one-object groupoid of a finite group.
    pub fn from_group(g: &LabelGroup) -> FiniteGroupoid {
        let arrows = (0..g.order())
            .map(|a| FgArrow { name: g.name(a).to_string(), src: 0, dst: 0 })
            .collect();
        let table: Vec<Vec<usize>> = g.table().to_vec();
        FiniteGroupoid::new(vec!["*".into()], arrows, move |a2, a1| table[a2][a1])
            .expect("group gives a groupoid")
    }

    /// The codiscrete groupoid on `n` objects with hom-sets a copy of `g`:
    /// arrows (x, s, y) composing by the group law.
    pub fn codiscrete_over_group(n: usize, g: &LabelGroup) -> Result<FiniteGroupoid> {
        if n == 0 {
            return Err(Error::Argument("need at least one object".into()));
        }
        let m = g.order();
        let objects = (0..n).map(|i| format!("x{i}")).collect();
        let mut arrows = Vec::with_capacity(n * n * m);
        for x in 0..n {
            for y in 0..n {
                for s in 0..m {
                    arrows.push(FgArrow {
                        name: format!("x{x}-{}-x{y}", g.name(s)),
                        src: x,
                        dst: y,
                    });
                }
            }
        }
        let m_ = m;
        let n_ = n;
        let table: Vec<Vec<usize>> = g.table().to_vec();
        let decode = move |a: usize| -> (usize, usize, usize) {
            (a / (n_ * m_), (a / m_) % n_, a % m_)
        };
        FiniteGroupoid::new(objects, arrows, move |a2, a1| {
            let (x, _y, s) = decode(a1);
            let (_y2, z, t) = decode(a2);
            (x * n_ + z) * m_ + table[t][s]
        })
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow(&self, a: usize) -> &FgArrow {
        &self.arrows[a]
    }

    pub fn hom(&self, src: usize, dst: usize) -> &[usize] {
        &self.hom[src][dst]
    }

    /// Arrows with the given source, any target, in index order.
    pub fn arrows_from(&self, src: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].src == src).collect()
    }

    pub fn identity(&self, obj: usize) -> usize {
        self.identities[obj]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// second ∘ first; panics on non-composable input.
    pub fn compose(&self, second: usize, first: usize) -> usize {
        self.compose[second][first].expect("arrows not composable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_as_one_object_groupoid() {
        let z4 = LabelGroup::cyclic(4).unwrap();
        let g = FiniteGroupoid::from_group(&z4);
        assert_eq!(g.object_count(), 1);
        assert_eq!(g.arrow_count(), 4);
        assert_eq!(g.compose(1, 3), 0);
        assert_eq!(g.inverse(3), 1);
    }

    #[test]
    fn codiscrete_over_group_axioms() {
        let z2 = LabelGroup::cyclic(2).unwrap();
        let g = FiniteGroupoid::codiscrete_over_group(2, &z2).unwrap();
        assert_eq!(g.object_count(), 2);
        assert_eq!(g.arrow_count(), 8);
        assert_eq!(g.hom(0, 1).len(), 2);
    }

    #[test]
    fn broken_composition_rejected() {
        // Two objects, arrows: identities plus a single x->y arrow with no
        // inverse.
        let objects = vec!["x".into(), "y".into()];
        let arrows = vec![
            FgArrow { name: "idx".into(), src: 0, dst: 0 },
            FgArrow { name: "idy".into(), src: 1, dst: 1 },
            FgArrow { name: "f".into(), src: 0, dst: 1 },
        ];
        let r = FiniteGroupoid::new(objects, arrows, |a2, a1| match (a2, a1) {
            (0, 0) => 0,
            (1, 1) => 1,
            (2, 0) => 2,
            (1, 2) => 2,
            _ => 0,
        });
        // f has no inverse arrow, so construction must fail.
        assert!(r.is_err());
    }
}
