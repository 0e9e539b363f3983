//! Equivariant cocycles (u_e, c_g(v)) for a finite cellular action, homotopy
//! fixed point counting, and the visible descent comparison against the
//! quotient complex.
//!
//! The defining equations, for a deck element g and an oriented edge
//! e: v -> w with labels acted on by g:
//!
//! * edge equivariance: u_{g.e} = c_g(w) * g(u_e) * c_g(v)^{-1}
//! * coherence: c_{gh}(v) = c_g(h.v) * g(c_h(v)), with c_1(v) = 1
//! * vertex gauge: u'_e = h_w u_e h_v^{-1} and c'_g(v) = h_{g.v} c_g(v) g(h_v)^{-1}
//!
//! The coherence and gauge formulas are the ones forced by the fixed-point
//! law phi_{gh} = phi_g . g(phi_h); they make equivariant class counts match
//! plain class counts on the quotient for free actions.

use crate::cocycle::{Cocycle, CocycleSystem, GaugeTransform};
use crate::complex::CellularAction;
use crate::error::{Error, Result};
use crate::group::{GroupHom, LabelGroup};
use crate::stratum::StratumGroups;

/// Per deck element and per stratum, an automorphism of the label group.
#[derive(Clone, Debug)]
pub struct LabelAction {
    autos: Vec<Vec<GroupHom>>,
    trivial: bool,
}

impl LabelAction {
    /// Every deck element acts as the identity on every label group.
    pub fn trivial(deck_order: usize, groups: &StratumGroups, strata: usize) -> LabelAction {
        let autos = (0..deck_order)
            .map(|_| (0..strata).map(|s| GroupHom::identity(groups.group(s))).collect())
            .collect();
        LabelAction { autos, trivial: true }
    }

    /// Explicit automorphism families, checked to form an action.
    pub fn new(
        action: &CellularAction,
        groups: &StratumGroups,
        strata: usize,
        autos: Vec<Vec<GroupHom>>,
    ) -> Result<LabelAction> {
        let deck = action.deck();
        if autos.len() != deck.order() || autos.iter().any(|a| a.len() != strata) {
            return Err(Error::Validation(
                "need one automorphism per deck element per stratum".into(),
            ));
        }
        for s in 0..strata {
            let id = GroupHom::identity(groups.group(s));
            if autos[deck.identity()][s] != id {
                return Err(Error::Validation("identity element must act trivially".into()));
            }
            for g in 0..deck.order() {
                for h in 0..deck.order() {
                    let gh = deck.mul(g, h);
                    if autos[gh][s] != autos[g][s].compose(&autos[h][s]) {
                        return Err(Error::Validation(format!(
                            "label action fails the action law at ({}, {})",
                            deck.name(g),
                            deck.name(h)
                        )));
                    }
                }
            }
        }
        let trivial = autos.iter().all(|per_elem| {
            per_elem
                .iter()
                .enumerate()
                .all(|(s, a)| *a == GroupHom::identity(groups.group(s)))
        });
        Ok(LabelAction { autos, trivial })
    }

    pub fn apply(&self, g: usize, stratum: usize, x: usize) -> usize {
        self.autos[g][stratum].apply(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial
    }
}

/// A cocycle with vertex coherence data: `coherence[g][v]` lives in the group
/// of the stratum of vertex v.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct EquivariantCocycle {
    pub base: Cocycle,
    pub coherence: Vec<Vec<usize>>,
}

/// First failing constraint, when a check fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivariantWitness {
    /// base assignment violates a face relation
    Face { face: usize },
    /// edge equivariance fails for (deck element, edge)
    Edge { g: usize, edge: usize },
    /// vertex coherence fails for (g, h, vertex)
    Coherence { g: usize, h: usize, vertex: usize },
}

/// The cocycle system together with a cellular action and a label action.
pub struct EquivariantSystem<'a> {
    sys: &'a CocycleSystem<'a>,
    action: &'a CellularAction,
    labels: &'a LabelAction,
}

impl<'a> EquivariantSystem<'a> {
    pub fn new(
        sys: &'a CocycleSystem<'a>,
        action: &'a CellularAction,
        labels: &'a LabelAction,
    ) -> EquivariantSystem<'a> {
        EquivariantSystem { sys, action, labels }
    }

    fn vertex_stratum(&self, v: usize) -> usize {
        self.sys.complex().vertices()[v].stratum
    }

    /// True iff both equation families hold; otherwise the first witness in
    /// deterministic order.
    pub fn check(
        &self,
        ec: &EquivariantCocycle,
    ) -> Result<std::result::Result<(), EquivariantWitness>> {
        let deck = self.action.deck();
        let complex = self.sys.complex();
        if ec.coherence.len() != deck.order()
            || ec.coherence.iter().any(|c| c.len() != complex.vertices().len())
        {
            return Err(Error::Validation(
                "coherence data must cover every (deck element, vertex) pair".into(),
            ));
        }
        if let Err(v) = self.sys.validate(&ec.base.labels)? {
            return Ok(Err(EquivariantWitness::Face { face: v[0].face }));
        }
        for g in 0..deck.order() {
            for e in 0..complex.edges().len() {
                if !self.edge_equation_holds(&ec.base, &ec.coherence[g], g, e) {
                    return Ok(Err(EquivariantWitness::Edge { g, edge: e }));
                }
            }
        }
        for g in 0..deck.order() {
            for h in 0..deck.order() {
                for v in 0..complex.vertices().len() {
                    if !self.coherence_holds(&ec.coherence, g, h, v) {
                        return Ok(Err(EquivariantWitness::Coherence { g, h, vertex: v }));
                    }
                }
            }
        }
        Ok(Ok(()))
    }

    /// u_{g.e} = c_g(w) * g(u_e) * c_g(v)^{-1}, with c_g the coherence
    /// vector of the single deck element g.
    fn edge_equation_holds(&self, base: &Cocycle, c_g: &[usize], g: usize, e: usize) -> bool {
        let complex = self.sys.complex();
        let edge = &complex.edges()[e];
        let s_e = edge.stratum;
        let grp = self.sys.groups().group(s_e);
        let lhs = base.labels[self.action.edge(g, e)];
        let cw = self.sys.groups().res_apply(self.vertex_stratum(edge.dst), s_e, c_g[edge.dst]);
        let cv = self.sys.groups().res_apply(self.vertex_stratum(edge.src), s_e, c_g[edge.src]);
        let acted = self.labels.apply(g, s_e, base.labels[e]);
        lhs == grp.mul(grp.mul(cw, acted), grp.inv(cv))
    }

    fn coherence_holds(&self, coherence: &[Vec<usize>], g: usize, h: usize, v: usize) -> bool {
        let deck = self.action.deck();
        let s_v = self.vertex_stratum(v);
        let grp = self.sys.groups().group(s_v);
        let gh = deck.mul(g, h);
        let lhs = coherence[gh][v];
        let hv = self.action.vertex(h, v);
        let rhs = grp.mul(coherence[g][hv], self.labels.apply(g, s_v, coherence[h][v]));
        lhs == rhs && coherence[deck.identity()][v] == grp.identity()
    }

    /// All pairs (u, c) satisfying both equation families, in deterministic
    /// order. Coherence vectors per deck element are solved by transporting a
    /// root choice along a spanning forest and verifying the leftover edges.
    pub fn enumerate(&self, cap: u64) -> Result<Vec<EquivariantCocycle>> {
        let deck = self.action.deck();
        let complex = self.sys.complex();
        let n_v = complex.vertices().len();
        let cocycles = self.sys.enumerate(cap)?;
        let forest = self.sys.spanning_forest();

        let mut out = Vec::new();
        let mut work: u128 = 0;
        for u in &cocycles {
            // per deck element, candidate coherence vectors
            let mut candidates: Vec<Vec<Vec<usize>>> = Vec::with_capacity(deck.order());
            for g in 0..deck.order() {
                if g == deck.identity() {
                    candidates.push(vec![(0..n_v)
                        .map(|v| self.sys.groups().group(self.vertex_stratum(v)).identity())
                        .collect()]);
                    continue;
                }
                candidates.push(self.solve_coherence_vectors(u, g, &forest, cap, &mut work)?);
            }
            if candidates.iter().any(|c| c.is_empty()) {
                continue;
            }
            // couple the per-element candidates through the coherence law
            let mut pick = vec![0usize; deck.order()];
            loop {
                work += 1;
                if work > cap as u128 {
                    return Err(Error::SizeExceeded { required: work, cap });
                }
                let coherence: Vec<Vec<usize>> =
                    pick.iter().zip(&candidates).map(|(&i, c)| c[i].clone()).collect();
                let coherent = (0..deck.order()).all(|g| {
                    (0..deck.order())
                        .all(|h| (0..n_v).all(|v| self.coherence_holds(&coherence, g, h, v)))
                });
                if coherent {
                    out.push(EquivariantCocycle { base: u.clone(), coherence });
                }
                let mut i = pick.len();
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    pick[i] += 1;
                    if pick[i] < candidates[i].len() {
                        break;
                    }
                    pick[i] = 0;
                }
                if pick.iter().all(|&x| x == 0) {
                    break;
                }
            }
        }
        Ok(out)
    }

    /// Coherence vectors c_g(-) solving edge equivariance for a fixed g:
    /// choose c_g at each forest root, transport along forest edges, verify
    /// everywhere.
    fn solve_coherence_vectors(
        &self,
        u: &Cocycle,
        g: usize,
        forest: &[usize],
        cap: u64,
        work: &mut u128,
    ) -> Result<Vec<Vec<usize>>> {
        let complex = self.sys.complex();
        let n_v = complex.vertices().len();
        // vertex -> component root (least vertex), via the forest
        let mut comp: Vec<usize> = (0..n_v).collect();
        loop {
            let mut changed = false;
            for &ei in forest {
                let e = &complex.edges()[ei];
                let m = comp[e.src].min(comp[e.dst]);
                if comp[e.src] != m || comp[e.dst] != m {
                    comp[e.src] = m;
                    comp[e.dst] = m;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let roots: Vec<usize> = {
            let mut r: Vec<usize> = comp;
            r.sort_unstable();
            r.dedup();
            r
        };

        let root_orders: Vec<usize> = roots
            .iter()
            .map(|&v| self.sys.groups().group(self.vertex_stratum(v)).order())
            .collect();
        let mut pick = vec![0usize; roots.len()];
        let mut found = Vec::new();
        loop {
            *work += 1;
            if *work > cap as u128 {
                return Err(Error::SizeExceeded { required: *work, cap });
            }
            if let Some(c) = self.transport(u, g, forest, &roots, &pick) {
                let all_edges_ok =
                    (0..complex.edges().len()).all(|e| self.edge_equation_holds(u, &c, g, e));
                if all_edges_ok {
                    found.push(c);
                }
            }
            let mut i = pick.len();
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                pick[i] += 1;
                if pick[i] < root_orders[i] {
                    break;
                }
                pick[i] = 0;
            }
            if pick.iter().all(|&x| x == 0) {
                break;
            }
        }
        Ok(found)
    }

    fn transport(
        &self,
        u: &Cocycle,
        g: usize,
        forest: &[usize],
        roots: &[usize],
        pick: &[usize],
    ) -> Option<Vec<usize>> {
        let complex = self.sys.complex();
        let n_v = complex.vertices().len();
        let mut c = vec![usize::MAX; n_v];
        for (ri, &root) in roots.iter().enumerate() {
            c[root] = pick[ri];
        }
        let mut settled = roots.to_vec();
        while let Some(v) = settled.pop() {
            for &ei in forest {
                let edge = &complex.edges()[ei];
                let s_e = edge.stratum;
                let grp = self.sys.groups().group(s_e);
                let acted = self.labels.apply(g, s_e, u.labels[ei]);
                let lhs = u.labels[self.action.edge(g, ei)];
                if edge.src == v && c[edge.dst] == usize::MAX {
                    // c_w = u_{g.e} * c_v * g(u_e)^{-1}
                    let cv = self.sys.groups().res_apply(self.vertex_stratum(v), s_e, c[v]);
                    let cw = grp.mul(grp.mul(lhs, cv), grp.inv(acted));
                    {
                        let x = self.sys.groups().res_preimage(self.vertex_stratum(edge.dst), s_e, cw)?;
                        c[edge.dst] = x;
                        settled.push(edge.dst);
                    }
                } else if edge.dst == v && c[edge.src] == usize::MAX {
                    // c_v = u_{g.e}^{-1} * c_w * g(u_e)
                    let cw = self.sys.groups().res_apply(self.vertex_stratum(v), s_e, c[v]);
                    let cv = grp.mul(grp.mul(grp.inv(lhs), cw), acted);
                    {
                        let x = self.sys.groups().res_preimage(self.vertex_stratum(edge.src), s_e, cv)?;
                        c[edge.src] = x;
                        settled.push(edge.src);
                    }
                }
            }
        }
        debug_assert!(c.iter().all(|&x| x != usize::MAX));
        Some(c)
    }

    /// Gauge action on equivariant cocycles:
    /// u'_e = h_w u_e h_v^{-1}, c'_g(v) = h_{g.v} c_g(v) g(h_v)^{-1}.
    pub fn gauge_apply(&self, ec: &EquivariantCocycle, h: &GaugeTransform) -> EquivariantCocycle {
        let deck = self.action.deck();
        let base = self.sys.gauge_apply(&ec.base, h);
        let coherence = (0..deck.order())
            .map(|g| {
                (0..self.sys.complex().vertices().len())
                    .map(|v| {
                        let s_v = self.vertex_stratum(v);
                        let grp = self.sys.groups().group(s_v);
                        let hg = h.values[self.action.vertex(g, v)];
                        let acted = self.labels.apply(g, s_v, h.values[v]);
                        grp.mul(grp.mul(hg, ec.coherence[g][v]), grp.inv(acted))
                    })
                    .collect()
            })
            .collect();
        EquivariantCocycle { base, coherence }
    }

    /// Orbits of equivariant cocycles under vertex gauges, listed by least
    /// member index.
    pub fn orbits(&self, ecs: &[EquivariantCocycle], cap: u64) -> Result<Vec<Vec<usize>>> {
        use std::collections::BTreeMap;
        let complex = self.sys.complex();
        let gauge_size = complex.vertices().iter().fold(1u128, |acc, v| {
            acc.saturating_mul(self.sys.groups().group(v.stratum).order() as u128)
        });
        if gauge_size > cap as u128 {
            return Err(Error::SizeExceeded { required: gauge_size, cap });
        }
        let index: BTreeMap<&EquivariantCocycle, usize> =
            ecs.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut assigned = vec![usize::MAX; ecs.len()];
        let mut orbits = Vec::new();
        for start in 0..ecs.len() {
            if assigned[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut members = Vec::new();
            let mut seen: BTreeMap<EquivariantCocycle, ()> = BTreeMap::new();
            seen.insert(ecs[start].clone(), ());
            let mut queue = vec![ecs[start].clone()];
            while let Some(ec) = queue.pop() {
                if let Some(&i) = index.get(&ec) {
                    if assigned[i] == usize::MAX {
                        assigned[i] = id;
                        members.push(i);
                    }
                }
                for v in 0..complex.vertices().len() {
                    let order = self.sys.groups().group(self.vertex_stratum(v)).order();
                    for x in 1..order {
                        let mut h = GaugeTransform {
                            values: (0..complex.vertices().len())
                                .map(|w| {
                                    self.sys.groups().group(self.vertex_stratum(w)).identity()
                                })
                                .collect(),
                        };
                        h.values[v] = x;
                        let moved = self.gauge_apply(&ec, &h);
                        if !seen.contains_key(&moved) {
                            seen.insert(moved.clone(), ());
                            queue.push(moved);
                        }
                    }
                }
            }
            members.sort_unstable();
            orbits.push(members);
        }
        Ok(orbits)
    }
}

/// A strict action of a finite group on an explicit finite groupoid:
/// per deck element, compatible permutations of objects and arrows.
#[derive(Clone, Debug)]
pub struct GroupoidAction {
    deck: LabelGroup,
    objects: Vec<Vec<usize>>,
    arrows: Vec<Vec<usize>>,
}

impl GroupoidAction {
    pub fn new(
        groupoid: &crate::finite::FiniteGroupoid,
        deck: LabelGroup,
        objects: Vec<Vec<usize>>,
        arrows: Vec<Vec<usize>>,
    ) -> Result<GroupoidAction> {
        let n = deck.order();
        if objects.len() != n || arrows.len() != n {
            return Err(Error::Validation("one map per deck element required".into()));
        }
        let e = deck.identity();
        if objects[e] != (0..groupoid.object_count()).collect::<Vec<_>>()
            || arrows[e] != (0..groupoid.arrow_count()).collect::<Vec<_>>()
        {
            return Err(Error::Validation("identity element must act trivially".into()));
        }
        for g in 0..n {
            if objects[g].len() != groupoid.object_count()
                || arrows[g].len() != groupoid.arrow_count()
            {
                return Err(Error::Validation("action maps have wrong lengths".into()));
            }
            // functorial on endpoints, identities, and composition
            for a in 0..groupoid.arrow_count() {
                let im = arrows[g][a];
                if groupoid.arrow(im).src != objects[g][groupoid.arrow(a).src]
                    || groupoid.arrow(im).dst != objects[g][groupoid.arrow(a).dst]
                {
                    return Err(Error::Validation("action breaks arrow endpoints".into()));
                }
            }
            for x in 0..groupoid.object_count() {
                if arrows[g][groupoid.identity(x)] != groupoid.identity(objects[g][x]) {
                    return Err(Error::Validation("action breaks identities".into()));
                }
            }
            for a in 0..groupoid.arrow_count() {
                for b in 0..groupoid.arrow_count() {
                    if groupoid.arrow(a).dst == groupoid.arrow(b).src {
                        let lhs = arrows[g][groupoid.compose(b, a)];
                        let rhs = groupoid.compose(arrows[g][b], arrows[g][a]);
                        if lhs != rhs {
                            return Err(Error::Validation("action breaks composition".into()));
                        }
                    }
                }
            }
            for h in 0..n {
                let gh = deck.mul(g, h);
                for x in 0..groupoid.object_count() {
                    if objects[gh][x] != objects[g][objects[h][x]] {
                        return Err(Error::Validation("object maps are not an action".into()));
                    }
                }
                for a in 0..groupoid.arrow_count() {
                    if arrows[gh][a] != arrows[g][arrows[h][a]] {
                        return Err(Error::Validation("arrow maps are not an action".into()));
                    }
                }
            }
        }
        Ok(GroupoidAction { deck, objects, arrows })
    }

    pub fn deck(&self) -> &LabelGroup {
        &self.deck
    }

    pub fn object(&self, g: usize, x: usize) -> usize {
        self.objects[g][x]
    }

    pub fn arrow(&self, g: usize, a: usize) -> usize {
        self.arrows[g][a]
    }
}

/// A homotopy fixed point: an object with isomorphisms phi_g: g.x -> x
/// satisfying phi_1 = id and phi_{gh} = phi_g . g(phi_h), both enforced at
/// construction by exhaustive (g, h) loops.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HfpObject {
    pub object: usize,
    /// per deck element, the arrow phi_g: g.x -> x
    pub phi: Vec<usize>,
}

impl HfpObject {
    pub fn verified(
        groupoid: &crate::finite::FiniteGroupoid,
        action: &GroupoidAction,
        object: usize,
        phi: Vec<usize>,
    ) -> Result<HfpObject> {
        let deck = action.deck();
        if phi.len() != deck.order() {
            return Err(Error::Validation("one coherence arrow per deck element".into()));
        }
        for g in 0..deck.order() {
            let a = groupoid.arrow(phi[g]);
            if a.src != action.object(g, object) || a.dst != object {
                return Err(Error::Validation(format!(
                    "phi_{} does not run from g.x to x",
                    deck.name(g)
                )));
            }
        }
        if phi[deck.identity()] != groupoid.identity(object) {
            return Err(Error::Validation("phi at the identity must be the identity".into()));
        }
        for g in 0..deck.order() {
            for h in 0..deck.order() {
                let gh = deck.mul(g, h);
                // phi_{gh} = phi_g . g(phi_h)
                let rhs = groupoid.compose(phi[g], action.arrow(g, phi[h]));
                if phi[gh] != rhs {
                    return Err(Error::Validation(format!(
                        "coherence fails at ({}, {})",
                        deck.name(g),
                        deck.name(h)
                    )));
                }
            }
        }
        Ok(HfpObject { object, phi })
    }
}

/// All homotopy fixed points of the action, in deterministic order.
pub fn enumerate_hfp(
    groupoid: &crate::finite::FiniteGroupoid,
    action: &GroupoidAction,
    cap: u64,
) -> Result<Vec<HfpObject>> {
    let deck = action.deck();
    let mut out = Vec::new();
    let mut work: u128 = 0;
    for x in 0..groupoid.object_count() {
        let choices: Vec<Vec<usize>> = (0..deck.order())
            .map(|g| groupoid.hom(action.object(g, x), x).to_vec())
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
            let phi: Vec<usize> = pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            if let Ok(h) = HfpObject::verified(groupoid, action, x, phi) {
                out.push(h);
            }
            let mut i = pick.len();
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                pick[i] += 1;
                if pick[i] < choices[i].len() {
                    break;
                }
                pick[i] = 0;
            }
            if pick.iter().all(|&p| p == 0) {
                break;
            }
        }
    }
    Ok(out)
}

/// Number of isomorphism classes of homotopy fixed points: morphisms are
/// arrows f: x -> x' with f . phi_g = phi'_g . g(f) for every g.
pub fn hfp_iso_classes(
    groupoid: &crate::finite::FiniteGroupoid,
    action: &GroupoidAction,
    points: &[HfpObject],
    cap: u64,
) -> Result<usize> {
    let deck = action.deck();
    let mut orbit = vec![usize::MAX; points.len()];
    let mut count = 0usize;
    let mut work: u128 = 0;
    for i in 0..points.len() {
        if orbit[i] != usize::MAX {
            continue;
        }
        count += 1;
        orbit[i] = i;
        for j in 0..points.len() {
            if orbit[j] != usize::MAX {
                continue;
            }
            let (a, b) = (&points[i], &points[j]);
            let connected = groupoid.hom(a.object, b.object).iter().any(|&f| {
                work += 1;
                (0..deck.order()).all(|g| {
                    groupoid.compose(f, a.phi[g])
                        == groupoid.compose(b.phi[g], action.arrow(g, f))
                })
            });
            if work > cap as u128 {
                return Err(Error::SizeExceeded { required: work, cap });
            }
            if connected {
                orbit[j] = i;
            }
        }
    }
    Ok(count)
}

/// The visible descent report: equivariant classes upstairs vs plain classes
/// on the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentReport {
    pub upstairs_hfp: usize,
    pub downstairs: usize,
    pub equal: bool,
}

/// Counts equivariant gauge classes upstairs and plain gauge classes on the
/// quotient of a free action, and compares. Label actions must be trivial:
/// otherwise the quotient carries no well-defined coefficient data.
pub fn descent_compare(
    sys: &CocycleSystem,
    action: &CellularAction,
    labels: &LabelAction,
    cap: u64,
) -> Result<DescentReport> {
    if !labels.is_trivial() {
        return Err(Error::Unsupported(
            "descent comparison requires a trivial label action".into(),
        ));
    }
    let (quotient, _) = action.quotient(sys.complex())?;

    let eq_sys = EquivariantSystem::new(sys, action, labels);
    let upstairs = eq_sys.orbits(&eq_sys.enumerate(cap)?, cap)?.len();

    let q_sys = CocycleSystem::new(&quotient, sys.groups());
    let down_cocycles = q_sys.enumerate(cap)?;
    let downstairs = q_sys.gauge_orbits(&down_cocycles, cap)?.len();

    Ok(DescentReport { upstairs_hfp: upstairs, downstairs, equal: upstairs == downstairs })
}
