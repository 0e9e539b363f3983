//! Finitely presented groupoids and functor enumeration into finite targets.
//!
//! All decision procedures route through exhaustive functor enumeration into
//! finite groupoids; no general word-problem machinery is attempted.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::finite::FiniteGroupoid;
use crate::word::{Letter, Sign, Word};

/// An arrow generator of a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

/// A relation: two composable words with equal endpoints, stored reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

/// A groupoid presented by objects, arrow generators, and relation words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedGroupoid {
    objects: Vec<String>,
    generators: Vec<Generator>,
    relations: Vec<Relation>,
}

impl PresentedGroupoid {
    pub fn new(objects: Vec<String>) -> Result<PresentedGroupoid> {
        let mut sorted = objects.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != objects.len() {
            return Err(Error::Validation("duplicate object names".into()));
        }
        Ok(PresentedGroupoid { objects, generators: Vec::new(), relations: Vec::new() })
    }

    pub fn add_object(&mut self, name: impl Into<String>) -> usize {
        let name = name.into();
        assert!(
            !self.objects.contains(&name),
            "duplicate object name {name}"
        );
        self.objects.push(name);
        self.objects.len() - 1
    }

    pub fn add_generator(
        &mut self,
        name: impl Into<String>,
        src: usize,
        dst: usize,
    ) -> Result<usize> {
        let name = name.into();
        if src >= self.objects.len() || dst >= self.objects.len() {
            return Err(Error::Validation(format!(
                "generator {name} references an undeclared object"
            )));
        }
        if self.generators.iter().any(|g| g.name == name) {
            return Err(Error::Validation(format!("duplicate generator name {name}")));
        }
        self.generators.push(Generator { name, src, dst });
        Ok(self.generators.len() - 1)
    }

    /// Builds a composable word from signed letters, checking the endpoint
    /// chain. Empty slices need [`Word::identity`] with an explicit object.
    pub fn word(&self, letters: &[Letter]) -> Result<Word> {
        let first = match letters.first() {
            Some(l) => l,
            None => {
                return Err(Error::Composition(
                    "empty word needs an explicit object; use Word::identity".into(),
                ))
            }
        };
        let mut at = self.letter_src(*first)?;
        let src = at;
        for &l in letters {
            let (s, d) = (self.letter_src(l)?, self.letter_dst(l));
            if s != at {
                return Err(Error::Composition(format!(
                    "letter {} starts at {} but the path is at {}",
                    self.letter_display(l),
                    self.objects[s],
                    self.objects[at]
                )));
            }
            at = d;
        }
        Ok(Word { src, dst: at, letters: letters.to_vec() })
    }

    fn letter_src(&self, l: Letter) -> Result<usize> {
        let g = self
            .generators
            .get(l.gen)
            .ok_or_else(|| Error::Composition(format!("unknown generator index {}", l.gen)))?;
        Ok(match l.sign {
            Sign::Pos => g.src,
            Sign::Neg => g.dst,
        })
    }

    fn letter_dst(&self, l: Letter) -> usize {
        let g = &self.generators[l.gen];
        match l.sign {
            Sign::Pos => g.dst,
            Sign::Neg => g.src,
        }
    }

    fn letter_display(&self, l: Letter) -> String {
        match l.sign {
            Sign::Pos => self.generators[l.gen].name.clone(),
            Sign::Neg => format!("-{}", self.generators[l.gen].name),
        }
    }

    /// Free reduction of a composable word; endpoints are preserved and the
    /// operation is a retraction (idempotent).
    pub fn reduce(&self, w: &Word) -> Word {
        w.reduced()
    }

    /// Adds the relation `lhs = rhs`; both sides must be composable with the
    /// same endpoints. Words are stored reduced.
    pub fn add_relation(&mut self, lhs: Word, rhs: Word) -> Result<usize> {
        if lhs.src != rhs.src || lhs.dst != rhs.dst {
            return Err(Error::Validation(format!(
                "relation sides have different endpoints: {}->{} vs {}->{}",
                self.objects[lhs.src], self.objects[lhs.dst], self.objects[rhs.src],
                self.objects[rhs.dst]
            )));
        }
        for w in [&lhs, &rhs] {
            for &l in &w.letters {
                if l.gen >= self.generators.len() {
                    return Err(Error::Validation("relation uses unknown generator".into()));
                }
            }
            // endpoints recorded on the word must match the letter chain
            if !w.letters.is_empty() {
                let rebuilt = self.word(&w.letters)?;
                if rebuilt.src != w.src || rebuilt.dst != w.dst {
                    return Err(Error::Validation("relation word endpoints inconsistent".into()));
                }
            }
        }
        self.relations.push(Relation { lhs: lhs.reduced(), rhs: rhs.reduced() });
        Ok(self.relations.len() - 1)
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Connected components of the underlying generator graph, as an
    /// object -> component-id map (components numbered by least object).
    pub fn components(&self) -> Vec<usize> {
        let n = self.objects.len();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = next;
            next += 1;
            let mut stack = vec![start];
            comp[start] = id;
            while let Some(x) = stack.pop() {
                for g in &self.generators {
                    for (a, b) in [(g.src, g.dst), (g.dst, g.src)] {
                        if a == x && comp[b] == usize::MAX {
                            comp[b] = id;
                            stack.push(b);
                        }
                    }
                }
            }
        }
        comp
    }
}

/// A functor out of a presentation, given on objects and generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FunctorAssignment {
    /// source object index -> target object index
    pub objects: Vec<usize>,
    /// source generator index -> target arrow index
    pub gens: Vec<usize>,
}

impl FunctorAssignment {
    /// Image of a word under the assignment: the composite arrow in `dst`.
    pub fn eval_word(&self, dst: &FiniteGroupoid, w: &Word) -> usize {
        let mut acc = dst.identity(self.objects[w.src]);
        for &l in &w.letters {
            let arrow = match l.sign {
                Sign::Pos => self.gens[l.gen],
                Sign::Neg => dst.inverse(self.gens[l.gen]),
            };
            acc = dst.compose(arrow, acc);
        }
        acc
    }
}

/// Endpoint-validates an assignment, then checks that every relation maps to
/// equal composites in `dst`.
pub fn check_functor(
    src: &PresentedGroupoid,
    dst: &FiniteGroupoid,
    assignment: &FunctorAssignment,
) -> Result<bool> {
    if assignment.objects.len() != src.object_count()
        || assignment.gens.len() != src.generator_count()
    {
        return Err(Error::InvalidAssignment(
            "assignment must cover all objects and generators".into(),
        ));
    }
    for &o in &assignment.objects {
        if o >= dst.object_count() {
            return Err(Error::InvalidAssignment("object image out of range".into()));
        }
    }
    for (i, g) in src.generators().iter().enumerate() {
        let a = assignment.gens[i];
        if a >= dst.arrow_count() {
            return Err(Error::InvalidAssignment("generator image out of range".into()));
        }
        let arrow = dst.arrow(a);
        if arrow.src != assignment.objects[g.src] || arrow.dst != assignment.objects[g.dst] {
            return Err(Error::InvalidAssignment(format!(
                "image of generator {} does not match the object map endpoints",
                g.name
            )));
        }
    }
    Ok(src
        .relations()
        .iter()
        .all(|r| assignment.eval_word(dst, &r.lhs) == assignment.eval_word(dst, &r.rhs)))
}

/// Exactly the assignments passing [`check_functor`], in deterministic order:
/// object maps lexicographically, then generator arrows in target construction
/// order. The full search-space size is bounded by `cap` up front.
pub fn enumerate_functors(
    src: &PresentedGroupoid,
    dst: &FiniteGroupoid,
    cap: u64,
) -> Result<Vec<FunctorAssignment>> {
    let n_obj = src.object_count();
    let n_gen = src.generator_count();

    // search-space accounting
    let obj_maps = (dst.object_count() as u128)
        .checked_pow(n_obj as u32)
        .ok_or(Error::SizeExceeded { required: u128::MAX, cap })?;
    if obj_maps > cap as u128 {
        return Err(Error::SizeExceeded { required: obj_maps, cap });
    }

    let mut total: u128 = 0;
    let mut object_map = vec![0usize; n_obj];
    loop {
        let mut leaves: u128 = 1;
        for g in src.generators() {
            let h = dst.hom(object_map[g.src], object_map[g.dst]).len() as u128;
            leaves = leaves.saturating_mul(h);
            if leaves == 0 {
                break;
            }
        }
        total = total.saturating_add(leaves.max(1));
        if total > cap as u128 {
            return Err(Error::SizeExceeded { required: total, cap });
        }
        if !next_object_map(&mut object_map, dst.object_count()) {
            break;
        }
    }

    // relation readiness: a relation can be checked once every generator it
    // mentions has been assigned.
    let ready_at: Vec<Vec<usize>> = {
        let mut v = vec![Vec::new(); n_gen + 1];
        for (ri, r) in src.relations().iter().enumerate() {
            let max_gen = r
                .lhs
                .letters
                .iter()
                .chain(r.rhs.letters.iter())
                .map(|l| l.gen)
                .max();
            match max_gen {
                Some(m) => v[m + 1].push(ri),
                None => v[0].push(ri),
            }
        }
        v
    };

    let mut out = Vec::new();
    let mut object_map = vec![0usize; n_obj];
    loop {
        // relations mentioning no generators: identity-vs-identity, always ok
        let zero_ok = ready_at[0].iter().all(|&ri| {
            let r = &src.relations()[ri];
            r.lhs.src == r.rhs.src && r.lhs.dst == r.rhs.dst
        });
        if zero_ok {
            let mut assignment =
                FunctorAssignment { objects: object_map.clone(), gens: vec![usize::MAX; n_gen] };
            backtrack(src, dst, &ready_at, &mut assignment, 0, &mut out);
        }
        if !next_object_map(&mut object_map, dst.object_count()) {
            break;
        }
    }
    Ok(out)
}

fn next_object_map(map: &mut [usize], base: usize) -> bool {
    for i in (0..map.len()).rev() {
        map[i] += 1;
        if map[i] < base {
            return true;
        }
        map[i] = 0;
    }
    !map.is_empty() && false
}

fn backtrack(
    src: &PresentedGroupoid,
    dst: &FiniteGroupoid,
    ready_at: &[Vec<usize>],
    assignment: &mut FunctorAssignment,
    depth: usize,
    out: &mut Vec<FunctorAssignment>,
) {
    if depth == src.generator_count() {
        out.push(assignment.clone());
        return;
    }
    let g = &src.generators()[depth];
    let candidates: Vec<usize> =
        dst.hom(assignment.objects[g.src], assignment.objects[g.dst]).to_vec();
    for a in candidates {
        assignment.gens[depth] = a;
        let ok = ready_at[depth + 1].iter().all(|&ri| {
            let r = &src.relations()[ri];
            assignment.eval_word(dst, &r.lhs) == assignment.eval_word(dst, &r.rhs)
        });
        if ok {
            backtrack(src, dst, ready_at, assignment, depth + 1, out);
        }
    }
    assignment.gens[depth] = usize::MAX;
}

/// Orbits of functors under natural isomorphism, as index sets into the
/// enumeration of [`enumerate_functors`], each sorted, listed by least member.
pub fn iso_class_orbits(
    src: &PresentedGroupoid,
    dst: &FiniteGroupoid,
    cap: u64,
) -> Result<Vec<Vec<usize>>> {
    let functors = enumerate_functors(src, dst, cap)?;
    let index: BTreeMap<FunctorAssignment, usize> =
        functors.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();

    let mut orbit = vec![usize::MAX; functors.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut work: u128 = 0;
    for start in 0..functors.len() {
        if orbit[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![start];
        orbit[start] = id;
        let mut queue = vec![start];
        while let Some(fi) = queue.pop() {
            let f = &functors[fi];
            // every natural family is a composite of moves that change one
            // object image, so single-object moves generate the orbit
            for (x, &fx) in f.objects.iter().enumerate() {
                for a in dst.arrows_from(fx) {
                    work += 1;
                    if work > cap as u128 {
                        return Err(Error::SizeExceeded { required: work, cap });
                    }
                    let mut eta: Vec<usize> =
                        f.objects.iter().map(|&o| dst.identity(o)).collect();
                    eta[x] = a;
                    let g = transform_by_natural_iso(src, dst, f, &eta);
                    let gi =
                        *index.get(&g).expect("natural transform of a functor is a functor");
                    if orbit[gi] == usize::MAX {
                        orbit[gi] = id;
                        members.push(gi);
                        queue.push(gi);
                    }
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    Ok(orbits)
}

fn transform_by_natural_iso(
    src: &PresentedGroupoid,
    dst: &FiniteGroupoid,
    f: &FunctorAssignment,
    eta: &[usize],
) -> FunctorAssignment {
    let objects: Vec<usize> = eta.iter().map(|&a| dst.arrow(a).dst).collect();
    let gens = src
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let conj = dst.compose(eta[g.dst], f.gens[i]);
            dst.compose(conj, dst.inverse(eta[g.src]))
        })
        .collect();
    FunctorAssignment { objects, gens }
}

/// |π₀| of the hom-groupoid: the number of natural-isomorphism classes of
/// functors `src -> dst`.
pub fn count_iso_classes(
    src: &PresentedGroupoid,
    dst: &FiniteGroupoid,
    cap: u64,
) -> Result<usize> {
    Ok(iso_class_orbits(src, dst, cap)?.len())
}
