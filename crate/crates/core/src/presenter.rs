//! Strict 2-pushout presenters built from cospans via bridge arrows, curve
//! presenters with peripheral gluing relations, and counting-level checks
//! that representation counting sends pushouts to fiber products.

use crate::error::{Error, Result};
use crate::finite::FiniteGroupoid;
use crate::group::LabelGroup;
use crate::groupoid::{
    count_iso_classes, enumerate_functors, FunctorAssignment, PresentedGroupoid,
};
use crate::simplify::{contract_forest, simplify, tietze_eliminate};
use crate::word::{Letter, Sign, Word};

/// A functor given on generators: object map plus an image word per
/// generator. Images of relations must agree after free reduction (the
/// cospans used here have relation-free middles, where this is complete).
#[derive(Clone, Debug)]
pub struct GenFunctor {
    pub objects: Vec<usize>,
    pub gen_images: Vec<Word>,
}

impl GenFunctor {
    pub fn new(
        source: &PresentedGroupoid,
        target: &PresentedGroupoid,
        objects: Vec<usize>,
        gen_images: Vec<Vec<Letter>>,
    ) -> Result<GenFunctor> {
        if objects.len() != source.object_count() || gen_images.len() != source.generator_count()
        {
            return Err(Error::InvalidAssignment(
                "functor must cover all objects and generators".into(),
            ));
        }
        if objects.iter().any(|&o| o >= target.object_count()) {
            return Err(Error::InvalidAssignment("object image out of range".into()));
        }
        let mut images = Vec::with_capacity(gen_images.len());
        for (gi, letters) in gen_images.iter().enumerate() {
            let g = &source.generators()[gi];
            let w = if letters.is_empty() {
                if objects[g.src] != objects[g.dst] {
                    return Err(Error::InvalidAssignment(format!(
                        "generator {} maps to an identity word but its endpoints differ",
                        g.name
                    )));
                }
                Word::identity(objects[g.src])
            } else {
                target.word(letters)?
            };
            if w.src != objects[g.src] || w.dst != objects[g.dst] {
                return Err(Error::InvalidAssignment(format!(
                    "image of generator {} does not match the object map",
                    g.name
                )));
            }
            images.push(w);
        }
        let f = GenFunctor { objects, gen_images: images };
        for r in source.relations() {
            let lhs = f.map_word(&r.lhs).reduced();
            let rhs = f.map_word(&r.rhs).reduced();
            if lhs != rhs {
                return Err(Error::Validation(
                    "functor does not preserve a relation on the nose".into(),
                ));
            }
        }
        Ok(f)
    }

    /// Image of a word, letter by letter.
    pub fn map_word(&self, w: &Word) -> Word {
        let mut letters = Vec::new();
        for l in &w.letters {
            let img = &self.gen_images[l.gen];
            match l.sign {
                Sign::Pos => letters.extend_from_slice(&img.letters),
                Sign::Neg => letters.extend(img.letters.iter().rev().map(|x| x.inverse())),
            }
        }
        Word { src: self.objects[w.src], dst: self.objects[w.dst], letters }
    }
}

/// A cospan of presented groupoids, the input of the 2-pushout.
#[derive(Clone, Debug)]
pub struct Cospan {
    pub left: PresentedGroupoid,
    pub middle: PresentedGroupoid,
    pub right: PresentedGroupoid,
    pub into_left: GenFunctor,
    pub into_right: GenFunctor,
}

/// The strict 2-pushout model: objects and generators of both feet, one
/// invertible bridge generator per object of the middle, and one bridge
/// relation per generator of the middle.
#[derive(Clone, Debug)]
pub struct PushoutPresenter {
    pub groupoid: PresentedGroupoid,
    /// left object index -> pushout object
    pub left_objects: Vec<usize>,
    /// right object index -> pushout object
    pub right_objects: Vec<usize>,
    /// left generator index -> pushout generator
    pub left_gens: Vec<usize>,
    /// right generator index -> pushout generator
    pub right_gens: Vec<usize>,
    /// middle object index -> bridge generator
    pub bridges: Vec<usize>,
}

/// Builds the strict pushout of a cospan. Object and generator names of the
/// two feet must be disjoint; bridges are named `glue[<middle object>]`.
pub fn build_pushout(c: &Cospan) -> Result<PushoutPresenter> {
    let mut g = PresentedGroupoid::new(Vec::new())?;
    let mut left_objects = Vec::with_capacity(c.left.object_count());
    for name in c.left.objects() {
        if c.right.object_index(name).is_some() {
            return Err(Error::Validation(format!(
                "object name {name} appears on both feet of the cospan"
            )));
        }
        left_objects.push(g.add_object(name.clone()));
    }
    let mut right_objects = Vec::with_capacity(c.right.object_count());
    for name in c.right.objects() {
        right_objects.push(g.add_object(name.clone()));
    }

    let mut left_gens = Vec::with_capacity(c.left.generator_count());
    for gen in c.left.generators() {
        if c.right.generator_index(&gen.name).is_some() {
            return Err(Error::Validation(format!(
                "generator name {} appears on both feet of the cospan",
                gen.name
            )));
        }
        left_gens.push(g.add_generator(
            gen.name.clone(),
            left_objects[gen.src],
            left_objects[gen.dst],
        )?);
    }
    let mut right_gens = Vec::with_capacity(c.right.generator_count());
    for gen in c.right.generators() {
        right_gens.push(g.add_generator(
            gen.name.clone(),
            right_objects[gen.src],
            right_objects[gen.dst],
        )?);
    }

    let remap = |w: &Word, objects: &[usize], gens: &[usize]| -> Word {
        Word {
            src: objects[w.src],
            dst: objects[w.dst],
            letters: w
                .letters
                .iter()
                .map(|l| Letter { gen: gens[l.gen], sign: l.sign })
                .collect(),
        }
    };
    for r in c.left.relations() {
        g.add_relation(
            remap(&r.lhs, &left_objects, &left_gens),
            remap(&r.rhs, &left_objects, &left_gens),
        )?;
    }
    for r in c.right.relations() {
        g.add_relation(
            remap(&r.lhs, &right_objects, &right_gens),
            remap(&r.rhs, &right_objects, &right_gens),
        )?;
    }

    let mut bridges = Vec::with_capacity(c.middle.object_count());
    for (b, name) in c.middle.objects().iter().enumerate() {
        let src = left_objects[c.into_left.objects[b]];
        let dst = right_objects[c.into_right.objects[b]];
        bridges.push(g.add_generator(format!("glue[{name}]"), src, dst)?);
    }
    // bridge relation for u: b -> b': glue[b'] . i(u) = j(u) . glue[b]
    for (ui, u) in c.middle.generators().iter().enumerate() {
        let iu = remap(&c.into_left.gen_images[ui], &left_objects, &left_gens);
        let ju = remap(&c.into_right.gen_images[ui], &right_objects, &right_gens);
        let bridge_word = |b: usize| -> Word {
            let gen = &g.generators()[bridges[b]];
            Word { src: gen.src, dst: gen.dst, letters: vec![Letter::pos(bridges[b])] }
        };
        let lhs = iu.then(&bridge_word(u.dst));
        let rhs = bridge_word(u.src).then(&ju);
        g.add_relation(lhs, rhs)?;
    }

    Ok(PushoutPresenter {
        groupoid: g,
        left_objects,
        right_objects,
        left_gens,
        right_gens,
        bridges,
    })
}

/// Contracts the bridge generators (a Tietze pass): merges each bridge's
/// endpoints and deletes the bridge letters, then eliminates generators
/// solvable from single-occurrence relations. Iso-class counts into every
/// target are preserved.
pub fn contract_bridges(p: &PushoutPresenter) -> Result<PresentedGroupoid> {
    let bridge_set: Vec<bool> = {
        let mut v = vec![false; p.groupoid.generator_count()];
        for &b in &p.bridges {
            v[b] = true;
        }
        v
    };
    let (contracted, _) = contract_forest(&p.groupoid, |g| bridge_set[g])?;
    tietze_eliminate(&contracted)
}

/// Report of the counting-level pushout universal property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushoutCheckReport {
    pub pushout_classes: usize,
    pub cocone_classes: usize,
    pub equal: bool,
}

/// Compares iso-class counts of functors out of the pushout with iso-class
/// counts of the cocone groupoid (pairs of functors on the feet plus a
/// connecting natural isomorphism).
pub fn rep_fiber_product_check(
    c: &Cospan,
    target: &FiniteGroupoid,
    cap: u64,
) -> Result<PushoutCheckReport> {
    let p = build_pushout(c)?;
    // simplification preserves iso-class counts and keeps enumeration small
    let reduced = simplify(&p.groupoid)?;
    let pushout_classes = count_iso_classes(&reduced, target, cap)?;
    let cocone_classes = fiber_product_classes(
        &c.left,
        &c.right,
        &c.middle,
        &c.into_left,
        &c.into_right,
        target,
        cap,
    )?;
    Ok(PushoutCheckReport {
        pushout_classes,
        cocone_classes,
        equal: pushout_classes == cocone_classes,
    })
}

/// Iso-class count of the 2-fiber product of functor groupoids: triples
/// (F_L, F_R, eta) with eta: F_L . to_left => F_R . to_right a natural
/// isomorphism over the middle, modulo compatible pairs of natural
/// isomorphisms on the feet.
pub fn fiber_product_classes(
    left: &PresentedGroupoid,
    right: &PresentedGroupoid,
    middle: &PresentedGroupoid,
    to_left: &GenFunctor,
    to_right: &GenFunctor,
    target: &FiniteGroupoid,
    cap: u64,
) -> Result<usize> {
    use std::collections::BTreeMap;

    let lefts = enumerate_functors(left, target, cap)?;
    let rights = enumerate_functors(right, target, cap)?;
    let left_index: BTreeMap<&FunctorAssignment, usize> =
        lefts.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let right_index: BTreeMap<&FunctorAssignment, usize> =
        rights.iter().enumerate().map(|(i, f)| (f, i)).collect();

    type Triple = (usize, usize, Vec<usize>);
    let mut triples: Vec<Triple> = Vec::new();
    let mut work: u128 = 0;
    for (li, fl) in lefts.iter().enumerate() {
        for (ri, fr) in rights.iter().enumerate() {
            // eta_b: F_L(to_left(b)) -> F_R(to_right(b)) for middle objects b
            let choices: Vec<Vec<usize>> = (0..middle.object_count())
                .map(|b| {
                    let s = fl.objects[to_left.objects[b]];
                    let d = fr.objects[to_right.objects[b]];
                    target.hom(s, d).to_vec()
                })
                .collect();
            if choices.iter().any(|c| c.is_empty()) {
                continue;
            }
            let mut pick = vec![0usize; choices.len()];
            loop {
                work += 1;
                if work > cap as u128 {
                    return Err(Error::SizeExceeded { required: work, cap });
                }
                let eta: Vec<usize> = pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
                let natural = middle.generators().iter().enumerate().all(|(ui, u)| {
                    let lu = fl.eval_word(target, &to_left.gen_images[ui]);
                    let ru = fr.eval_word(target, &to_right.gen_images[ui]);
                    target.compose(ru, eta[u.src]) == target.compose(eta[u.dst], lu)
                });
                if natural {
                    triples.push((li, ri, eta));
                }
                // with no middle objects the single empty eta is visited once
                if !advance(&mut pick, &choices) {
                    break;
                }
            }
        }
    }

    // orbits under pairs of natural isomorphisms on the feet
    let index: BTreeMap<Triple, usize> =
        triples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let mut orbit = vec![usize::MAX; triples.len()];
    let mut count = 0usize;
    for start in 0..triples.len() {
        if orbit[start] != usize::MAX {
            continue;
        }
        count += 1;
        orbit[start] = start;
        let mut queue = vec![start];
        while let Some(ti) = queue.pop() {
            let (li, ri, eta) = triples[ti].clone();
            let fl = &lefts[li];
            let fr = &rights[ri];
            // single-object moves on either foot generate all compatible
            // pairs of natural isomorphisms
            let push = |key: Triple, queue: &mut Vec<usize>, orbit: &mut Vec<usize>| {
                if let Some(&i) = index.get(&key) {
                    if orbit[i] == usize::MAX {
                        orbit[i] = start;
                        queue.push(i);
                    }
                }
            };
            for (x, &flx) in fl.objects.iter().enumerate() {
                for a in target.arrows_from(flx) {
                    work += 1;
                    if work > cap as u128 {
                        return Err(Error::SizeExceeded { required: work, cap });
                    }
                    let mut alpha: Vec<usize> =
                        fl.objects.iter().map(|&o| target.identity(o)).collect();
                    alpha[x] = a;
                    let fl2 = transform(left, target, fl, &alpha);
                    let li2 = *left_index.get(&fl2).expect("transform is a functor");
                    // eta' = eta . alpha^{-1} over each middle object
                    let eta2: Vec<usize> = (0..middle.object_count())
                        .map(|b| {
                            let al = alpha[to_left.objects[b]];
                            target.compose(eta[b], target.inverse(al))
                        })
                        .collect();
                    push((li2, ri, eta2), &mut queue, &mut orbit);
                }
            }
            for (y, &fry) in fr.objects.iter().enumerate() {
                for c in target.arrows_from(fry) {
                    work += 1;
                    if work > cap as u128 {
                        return Err(Error::SizeExceeded { required: work, cap });
                    }
                    let mut gamma: Vec<usize> =
                        fr.objects.iter().map(|&o| target.identity(o)).collect();
                    gamma[y] = c;
                    let fr2 = transform(right, target, fr, &gamma);
                    let ri2 = *right_index.get(&fr2).expect("transform is a functor");
                    // eta' = gamma . eta over each middle object
                    let eta2: Vec<usize> = (0..middle.object_count())
                        .map(|b| target.compose(gamma[to_right.objects[b]], eta[b]))
                        .collect();
                    push((li, ri2, eta2), &mut queue, &mut orbit);
                }
            }
        }
    }
    Ok(count)
}

fn advance(pick: &mut [usize], choices: &[Vec<usize>]) -> bool {
    let mut i = pick.len();
    loop {
        if i == 0 {
            return false;
        }
        i -= 1;
        pick[i] += 1;
        if pick[i] < choices[i].len() {
            return true;
        }
        pick[i] = 0;
    }
}

fn transform(
    src: &PresentedGroupoid,
    target: &FiniteGroupoid,
    f: &FunctorAssignment,
    eta: &[usize],
) -> FunctorAssignment {
    let objects: Vec<usize> = eta.iter().map(|&a| target.arrow(a).dst).collect();
    let gens = src
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let conj = target.compose(eta[g.dst], f.gens[i]);
            target.compose(conj, target.inverse(eta[g.src]))
        })
        .collect();
    FunctorAssignment { objects, gens }
}

/// One puncture of a curve spec: pole order, Kummer level, the Stokes group
/// shared by that puncture's overlaps, and the chosen transition elements.
#[derive(Clone, Debug)]
pub struct PunctureSpec {
    pub pole_order: usize,
    pub level: usize,
    pub group: LabelGroup,
    pub transitions: Vec<usize>,
}

impl PunctureSpec {
    /// Sector count 2 n (k - 1).
    pub fn sector_count(&self) -> usize {
        2 * self.level * (self.pole_order - 1)
    }
}

/// Input of the curve presenter: a one-object interior presentation, the
/// punctures, and a peripheral loop word per puncture.
#[derive(Clone, Debug)]
pub struct CurveSpec {
    pub interior: PresentedGroupoid,
    pub punctures: Vec<PunctureSpec>,
    pub peripherals: Vec<Word>,
}

impl CurveSpec {
    pub fn validate(&self) -> Result<()> {
        if self.interior.object_count() != 1 {
            return Err(Error::Validation("interior must have a single object".into()));
        }
        if self.peripherals.len() != self.punctures.len() {
            return Err(Error::Validation("one peripheral word per puncture required".into()));
        }
        for (i, p) in self.punctures.iter().enumerate() {
            if p.pole_order < 2 {
                return Err(Error::Argument(format!("puncture {i}: pole order must be >= 2")));
            }
            if p.level < 1 {
                return Err(Error::Argument(format!("puncture {i}: level must be >= 1")));
            }
            if p.transitions.len() != p.sector_count() {
                return Err(Error::Validation(format!(
                    "puncture {i}: {} transition elements given, sector count is {}",
                    p.transitions.len(),
                    p.sector_count()
                )));
            }
            if p.transitions.iter().any(|&u| u >= p.group.order()) {
                return Err(Error::Validation(format!(
                    "puncture {i}: transition element out of range"
                )));
            }
        }
        for (i, d) in self.peripherals.iter().enumerate() {
            if d.src != 0 || d.dst != 0 {
                return Err(Error::Validation(format!(
                    "peripheral word {i} is not a loop at the interior object"
                )));
            }
            if d.letters.iter().any(|l| l.gen >= self.interior.generator_count()) {
                return Err(Error::Validation(format!(
                    "peripheral word {i} uses an unknown interior generator"
                )));
            }
        }
        Ok(())
    }
}

/// The assembled curve presenter with bookkeeping for tests and reports.
#[derive(Clone, Debug)]
pub struct CurvePresenter {
    pub pushout: PushoutPresenter,
    /// peripheral words rewritten over the pushout's generators
    pub peripherals: Vec<Word>,
    /// per puncture: pushout generator indices of s_{i,a}(u), indexed by
    /// sector then group element
    pub stokes_gens: Vec<Vec<Vec<usize>>>,
}

/// Builds the skeletal curve presenter: the interior presentation glued to
/// one collar skeleton per puncture along bridges, with the gluing relation
/// identifying each peripheral loop with the cyclic word of Stokes
/// generators at the chosen transition elements.
///
/// Collar relations per puncture (e denotes the group identity):
/// s_a(v) . s_a(e)^{-1} . s_a(w) = s_a(v w), s_{a+1}(u) . s_a(e) =
/// s_{a+1}(e) . s_a(u), and the trivial-label full cycle is the identity.
/// Each overlap then contributes one copy of the Stokes group, and every
/// functor sends the peripheral loop to a conjugate of the image of the
/// product of the transitions.
pub fn build_curve_presenter(spec: &CurveSpec) -> Result<CurvePresenter> {
    spec.validate()?;

    // middle: one object and one loop per puncture
    let mut middle = PresentedGroupoid::new(Vec::new())?;
    for i in 0..spec.punctures.len() {
        middle.add_object(format!("peri{i}"));
    }
    for i in 0..spec.punctures.len() {
        middle.add_generator(format!("loop{i}"), i, i)?;
    }

    // right foot: disjoint collar skeletons
    let mut collar = PresentedGroupoid::new(Vec::new())?;
    let mut sector_objects: Vec<Vec<usize>> = Vec::new();
    let mut stokes: Vec<Vec<Vec<usize>>> = Vec::new();
    for (i, p) in spec.punctures.iter().enumerate() {
        let l = p.sector_count();
        let objs: Vec<usize> = (0..l).map(|a| collar.add_object(format!("p{i}s{a}"))).collect();
        let mut gens: Vec<Vec<usize>> = Vec::with_capacity(l);
        for a in 0..l {
            let mut per_elem = Vec::with_capacity(p.group.order());
            for u in 0..p.group.order() {
                per_elem.push(collar.add_generator(
                    format!("s{i}_{a}[{}]", p.group.name(u)),
                    objs[a],
                    objs[(a + 1) % l],
                )?);
            }
            gens.push(per_elem);
        }
        let e = p.group.identity();
        // group law within each overlap
        for a in 0..l {
            for v in 0..p.group.order() {
                for w in 0..p.group.order() {
                    let lhs = collar.word(&[
                        Letter::pos(gens[a][w]),
                        Letter::neg(gens[a][e]),
                        Letter::pos(gens[a][v]),
                    ])?;
                    let rhs = collar.word(&[Letter::pos(gens[a][p.group.mul(v, w)])])?;
                    collar.add_relation(lhs, rhs)?;
                }
            }
        }
        // consecutive overlaps agree on where a label sits
        for a in 0..l {
            let b = (a + 1) % l;
            for u in 0..p.group.order() {
                let lhs = collar.word(&[Letter::pos(gens[a][e]), Letter::pos(gens[b][u])])?;
                let rhs = collar.word(&[Letter::pos(gens[a][u]), Letter::pos(gens[b][e])])?;
                collar.add_relation(lhs, rhs)?;
            }
        }
        // the trivial-label full cycle is the identity
        let cycle: Vec<Letter> = (0..l).map(|a| Letter::pos(gens[a][e])).collect();
        let lhs = collar.word(&cycle)?;
        collar.add_relation(lhs, Word::identity(objs[0]))?;

        sector_objects.push(objs);
        stokes.push(gens);
    }

    // legs of the cospan
    let into_left = GenFunctor::new(
        &middle,
        &spec.interior,
        vec![0; spec.punctures.len()],
        spec.peripherals.iter().map(|w| w.letters.clone()).collect(),
    )?;
    let into_right = GenFunctor::new(
        &middle,
        &collar,
        (0..spec.punctures.len()).map(|i| sector_objects[i][0]).collect(),
        (0..spec.punctures.len())
            .map(|i| {
                let p = &spec.punctures[i];
                (0..p.sector_count())
                    .map(|a| Letter::pos(stokes[i][a][p.transitions[a]]))
                    .collect()
            })
            .collect(),
    )?;

    let cospan =
        Cospan { left: spec.interior.clone(), middle, right: collar, into_left, into_right };
    let pushout = build_pushout(&cospan)?;

    let stokes_gens = stokes
        .iter()
        .map(|per_a| {
            per_a
                .iter()
                .map(|per_u| per_u.iter().map(|&g| pushout.right_gens[g]).collect())
                .collect()
        })
        .collect();
    let peripherals = spec
        .peripherals
        .iter()
        .map(|w| Word {
            src: pushout.left_objects[0],
            dst: pushout.left_objects[0],
            letters: w
                .letters
                .iter()
                .map(|l| Letter { gen: pushout.left_gens[l.gen], sign: l.sign })
                .collect(),
        })
        .collect();
    Ok(CurvePresenter { pushout, peripherals, stokes_gens })
}

/// A two-chart cover of a curve spec: each chart is a curve spec over a
/// subset of the global punctures, plus a common puncture-free overlap
/// presenter with functors into both chart interiors.
#[derive(Clone, Debug)]
pub struct CoverSplit {
    pub chart1: CurveSpec,
    pub chart1_punctures: Vec<usize>,
    pub chart2: CurveSpec,
    pub chart2_punctures: Vec<usize>,
    pub overlap: PresentedGroupoid,
    pub into1: GenFunctor,
    pub into2: GenFunctor,
}

/// Comparison of a global curve presenter against the fiber product of two
/// chart presenters over their overlap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanKampenReport {
    pub global_classes: usize,
    pub glued_classes: usize,
    pub equal: bool,
}

pub fn van_kampen_split(
    global: &CurveSpec,
    split: &CoverSplit,
    target: &FiniteGroupoid,
    cap: u64,
) -> Result<VanKampenReport> {
    // charts must partition the global punctures and agree on their data
    let mut covered: Vec<usize> = split
        .chart1_punctures
        .iter()
        .chain(split.chart2_punctures.iter())
        .copied()
        .collect();
    covered.sort_unstable();
    let expected: Vec<usize> = (0..global.punctures.len()).collect();
    if covered != expected {
        return Err(Error::Validation(
            "charts must split the global punctures without overlap".into(),
        ));
    }
    for (chart, indices) in [
        (&split.chart1, &split.chart1_punctures),
        (&split.chart2, &split.chart2_punctures),
    ] {
        if chart.punctures.len() != indices.len() {
            return Err(Error::Validation("chart puncture count mismatch".into()));
        }
        for (local, &global_ix) in indices.iter().enumerate() {
            let a = &chart.punctures[local];
            let b = &global.punctures[global_ix];
            if a.pole_order != b.pole_order
                || a.level != b.level
                || a.group != b.group
                || a.transitions != b.transitions
            {
                return Err(Error::Validation(format!(
                    "shared puncture data mismatch at global puncture {global_ix}"
                )));
            }
        }
    }

    let global_presenter = build_curve_presenter(global)?;
    let global_reduced = simplify(&global_presenter.pushout.groupoid)?;
    let global_classes = count_iso_classes(&global_reduced, target, cap)?;

    let p1 = build_curve_presenter(&split.chart1)?;
    let p2 = build_curve_presenter(&split.chart2)?;
    // overlap functors into the chart presenters, through the interior leg
    let lift = |f: &GenFunctor, p: &CurvePresenter| -> Result<GenFunctor> {
        GenFunctor::new(
            &split.overlap,
            &p.pushout.groupoid,
            f.objects.iter().map(|&o| p.pushout.left_objects[o]).collect(),
            f.gen_images
                .iter()
                .map(|w| {
                    w.letters
                        .iter()
                        .map(|l| Letter { gen: p.pushout.left_gens[l.gen], sign: l.sign })
                        .collect()
                })
                .collect(),
        )
    };
    let f1 = lift(&split.into1, &p1)?;
    let f2 = lift(&split.into2, &p2)?;
    let glued_classes = fiber_product_classes(
        &p1.pushout.groupoid,
        &p2.pushout.groupoid,
        &split.overlap,
        &f1,
        &f2,
        target,
        cap,
    )?;
    Ok(VanKampenReport { global_classes, glued_classes, equal: global_classes == glued_classes })
}
