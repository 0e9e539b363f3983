//! Presentation simplification: spanning-forest contraction and Tietze
//! generator elimination.
//!
//! Both moves preserve the presented groupoid up to equivalence, hence
//! preserve natural-isomorphism class counts of functors into every target.
//! They make class counting on barycentrically subdivided complexes feasible,
//! where direct enumeration is astronomically large.

use crate::error::Result;
use crate::groupoid::PresentedGroupoid;
use crate::word::{Letter, Sign, Word};

/// Contracts a maximal forest chosen among the generators accepted by
/// `allowed`, merging objects along contracted edges and deleting their
/// letters from all relations.
///
/// Returns the contracted presentation together with, for each original
/// generator, its index in the new presentation (None for forest edges).
pub fn contract_forest(
    g: &PresentedGroupoid,
    allowed: impl Fn(usize) -> bool,
) -> Result<(PresentedGroupoid, Vec<Option<usize>>)> {
    let n_obj = g.object_count();

    // union-find over objects
    let mut parent: Vec<usize> = (0..n_obj).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }

    let mut in_forest = vec![false; g.generator_count()];
    for (i, gen) in g.generators().iter().enumerate() {
        if !allowed(i) {
            continue;
        }
        let (a, b) = (find(&mut parent, gen.src), find(&mut parent, gen.dst));
        if a != b {
            in_forest[i] = true;
            // merge toward the smaller representative for determinism
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            parent[hi] = lo;
        }
    }

    // representative objects keep their names, in original order
    let reps: Vec<usize> =
        (0..n_obj).filter(|&x| find(&mut parent, x) == x).collect();
    let rep_index: Vec<usize> = {
        let mut v = vec![usize::MAX; n_obj];
        for (new, &old) in reps.iter().enumerate() {
            v[old] = new;
        }
        (0..n_obj).map(|x| v[find(&mut parent, x)]).collect()
    };

    let mut out =
        PresentedGroupoid::new(reps.iter().map(|&x| g.objects()[x].clone()).collect())?;
    let mut gen_map: Vec<Option<usize>> = vec![None; g.generator_count()];
    for (i, gen) in g.generators().iter().enumerate() {
        if in_forest[i] {
            continue;
        }
        let idx = out.add_generator(gen.name.clone(), rep_index[gen.src], rep_index[gen.dst])?;
        gen_map[i] = Some(idx);
    }

    let rewrite = |w: &Word| -> Word {
        let letters: Vec<Letter> = w
            .letters
            .iter()
            .filter_map(|l| gen_map[l.gen].map(|ng| Letter { gen: ng, sign: l.sign }))
            .collect();
        Word { src: rep_index[w.src], dst: rep_index[w.dst], letters }
    };

    for r in g.relations() {
        let lhs = rewrite(&r.lhs).reduced();
        let rhs = rewrite(&r.rhs).reduced();
        if lhs == rhs {
            continue;
        }
        out.add_relation(lhs, rhs)?;
    }
    Ok((out, gen_map))
}

/// Loop-word form of the relations: `lhs . rhs^{-1}` anchored at the source.
fn loop_words(g: &PresentedGroupoid) -> Vec<Word> {
    g.relations()
        .iter()
        .map(|r| r.lhs.then(&r.rhs.inverse()).reduced())
        .filter(|w| !w.is_identity())
        .collect()
}

/// Repeatedly eliminates a generator that occurs exactly once in some
/// relation, substituting its solved word everywhere. Stops when no candidate
/// remains or the presentation stops shrinking.
pub fn tietze_eliminate(g: &PresentedGroupoid) -> Result<PresentedGroupoid> {
    const GROWTH_BUDGET: usize = 200_000;

    let mut words = loop_words(g);
    let mut alive: Vec<bool> = vec![true; g.generator_count()];

    loop {
        dedupe(&mut words);
        // candidate: (relation index, position of the unique occurrence),
        // shortest relation first, then lowest generator index
        let mut best: Option<(usize, usize)> = None;
        for (ri, w) in words.iter().enumerate() {
            for (pos, l) in w.letters.iter().enumerate() {
                if w.occurrences(l.gen) == 1 {
                    let better = match best {
                        None => true,
                        Some((bri, bpos)) => {
                            let (bw, bl) = (&words[bri], words[bri].letters[bpos]);
                            (w.letters.len(), l.gen) < (bw.letters.len(), bl.gen)
                        }
                    };
                    if better {
                        best = Some((ri, pos));
                    }
                }
            }
        }
        let (ri, pos) = match best {
            Some(b) => b,
            None => break,
        };

        let w = words.swap_remove(ri);
        let target = w.letters[pos];
        // w = P x^e Q = identity  =>  x^e = P^{-1} Q^{-1} (path order)
        let p = &w.letters[..pos];
        let q = &w.letters[pos + 1..];
        let inv = |ls: &[Letter]| -> Vec<Letter> {
            ls.iter().rev().map(|l| l.inverse()).collect()
        };
        let mut solved: Vec<Letter> = inv(p);
        solved.extend(inv(q));
        let replacement: Vec<Letter> = match target.sign {
            Sign::Pos => solved,
            Sign::Neg => solved.iter().rev().map(|l| l.inverse()).collect(),
        };

        let total_len: usize = words.iter().map(|x| x.letters.len()).sum();
        if total_len.saturating_mul(replacement.len().max(1)) > GROWTH_BUDGET {
            // restore and stop: simplification is best-effort
            words.push(w);
            break;
        }

        alive[target.gen] = false;
        for word in &mut words {
            let mut letters = Vec::with_capacity(word.letters.len());
            for &l in &word.letters {
                if l.gen == target.gen {
                    match l.sign {
                        Sign::Pos => letters.extend_from_slice(&replacement),
                        Sign::Neg => {
                            letters.extend(replacement.iter().rev().map(|x| x.inverse()))
                        }
                    }
                } else {
                    letters.push(l);
                }
            }
            *word = Word { src: word.src, dst: word.dst, letters }.reduced();
        }
        words.retain(|x| !x.is_identity());
    }

    // compact into a fresh presentation
    let mut out = PresentedGroupoid::new(g.objects().to_vec())?;
    let mut gen_map = vec![usize::MAX; g.generator_count()];
    for (i, gen) in g.generators().iter().enumerate() {
        if alive[i] {
            gen_map[i] = out.add_generator(gen.name.clone(), gen.src, gen.dst)?;
        }
    }
    for w in words {
        let letters: Vec<Letter> =
            w.letters.iter().map(|l| Letter { gen: gen_map[l.gen], sign: l.sign }).collect();
        debug_assert!(letters.iter().all(|l| l.gen != usize::MAX));
        let lhs = Word { src: w.src, dst: w.dst, letters };
        out.add_relation(lhs, Word::identity(w.src))?;
    }
    Ok(out)
}

fn dedupe(words: &mut Vec<Word>) {
    let mut keys: Vec<Word> = Vec::new();
    words.retain(|w| {
        let inv = w.inverse();
        if keys.contains(w) || keys.contains(&inv) {
            false
        } else {
            keys.push(w.clone());
            true
        }
    });
}

/// Full simplification pipeline: contract a maximal spanning forest over all
/// generators, then eliminate generators via single-occurrence relations.
pub fn simplify(g: &PresentedGroupoid) -> Result<PresentedGroupoid> {
    let (contracted, _) = contract_forest(g, |_| true)?;
    tietze_eliminate(&contracted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::FiniteGroupoid;
    use crate::group::LabelGroup;
    use crate::groupoid::count_iso_classes;

    fn path_groupoid() -> PresentedGroupoid {
        // x --e--> y --f--> z with one relation making a loop trivial
        let mut g =
            PresentedGroupoid::new(vec!["x".into(), "y".into(), "z".into()]).unwrap();
        g.add_generator("e", 0, 1).unwrap();
        g.add_generator("f", 1, 2).unwrap();
        g.add_generator("h", 0, 2).unwrap();
        let ef = g.word(&[Letter::pos(0), Letter::pos(1)]).unwrap();
        let h = g.word(&[Letter::pos(2)]).unwrap();
        g.add_relation(ef, h).unwrap();
        g
    }

    #[test]
    fn contraction_merges_objects_and_drops_forest_letters() {
        let g = path_groupoid();
        let (c, map) = contract_forest(&g, |_| true).unwrap();
        assert_eq!(c.object_count(), 1);
        // two of the three generators are in the forest
        assert_eq!(map.iter().filter(|m| m.is_none()).count(), 2);
        assert_eq!(c.generator_count(), 1);
    }

    #[test]
    fn tietze_eliminates_solved_generators() {
        let g = path_groupoid();
        let s = simplify(&g).unwrap();
        // the relation solves the leftover loop: everything collapses
        assert_eq!(s.generator_count(), 0);
        assert_eq!(s.relations().len(), 0);
    }

    #[test]
    fn simplification_preserves_iso_class_counts() {
        let g = path_groupoid();
        let s = simplify(&g).unwrap();
        for grp in [
            LabelGroup::cyclic(2).unwrap(),
            LabelGroup::cyclic(3).unwrap(),
            LabelGroup::symmetric(3).unwrap(),
        ] {
            let h = FiniteGroupoid::from_group(&grp);
            assert_eq!(
                count_iso_classes(&g, &h, 1 << 24).unwrap(),
                count_iso_classes(&s, &h, 1 << 24).unwrap(),
            );
        }
        let two_obj =
            FiniteGroupoid::codiscrete_over_group(2, &LabelGroup::cyclic(2).unwrap()).unwrap();
        assert_eq!(
            count_iso_classes(&g, &two_obj, 1 << 24).unwrap(),
            count_iso_classes(&s, &two_obj, 1 << 24).unwrap(),
        );
    }
}
