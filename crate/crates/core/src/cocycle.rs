//! Edge-labeled Stokes cocycles on a stratified 2-complex: validation against
//! 2-cell relations, exhaustive enumeration, vertex gauge orbits, spanning
//! tree normal forms, and pullback along subdivision.

use crate::complex::{EdgeOrigin, StratComplex2, SubdivisionMap};
use crate::error::{Error, Result};
use crate::finite::FiniteGroupoid;
use crate::groupoid::count_iso_classes;
use crate::simplify::simplify;
use crate::stratum::StratumGroups;
use crate::word::Sign;

/// An edge-label assignment: `labels[e]` is an element of the group on the
/// stratum of edge `e`. Orientation reversal uses the inverse label.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Cocycle {
    pub labels: Vec<usize>,
}

/// A vertex gauge: `values[v]` in the group on the stratum of vertex `v`,
/// acting by u_e -> h_{t(e)} u_e h_{s(e)}^{-1} through the restriction maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaugeTransform {
    pub values: Vec<usize>,
}

/// A face whose boundary product is not the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceViolation {
    pub face: usize,
    pub product: usize,
}

/// A gauge orbit among an enumerated cocycle list.
#[derive(Clone, Debug)]
pub struct GaugeOrbit {
    /// indices into the input cocycle list, ascending
    pub members: Vec<usize>,
    pub representative: Cocycle,
}

/// A complex together with the label groups on its strata.
pub struct CocycleSystem<'a> {
    complex: &'a StratComplex2,
    groups: &'a StratumGroups,
}

impl<'a> CocycleSystem<'a> {
    pub fn new(complex: &'a StratComplex2, groups: &'a StratumGroups) -> CocycleSystem<'a> {
        CocycleSystem { complex, groups }
    }

    pub fn complex(&self) -> &StratComplex2 {
        self.complex
    }

    pub fn groups(&self) -> &StratumGroups {
        self.groups
    }

    fn edge_stratum(&self, e: usize) -> usize {
        self.complex.edges()[e].stratum
    }

    fn vertex_stratum(&self, v: usize) -> usize {
        self.complex.vertices()[v].stratum
    }

    /// Boundary product of a face: u_{e_m}^{eps_m} ... u_{e_1}^{eps_1},
    /// evaluated in the face's stratum group through restrictions.
    pub fn face_product(&self, labels: &[usize], face: usize) -> usize {
        let f = &self.complex.faces()[face];
        let g = self.groups.group(f.stratum);
        let mut acc = g.identity();
        for l in &f.boundary {
            let raw = self.groups.res_apply(self.edge_stratum(l.gen), f.stratum, labels[l.gen]);
            let x = match l.sign {
                Sign::Pos => raw,
                Sign::Neg => g.inv(raw),
            };
            acc = g.mul(x, acc);
        }
        acc
    }

    /// Certifies an assignment as a cocycle or lists the violated faces.
    pub fn validate(
        &self,
        labels: &[usize],
    ) -> Result<std::result::Result<Cocycle, Vec<FaceViolation>>> {
        if labels.len() != self.complex.edges().len() {
            return Err(Error::Validation(format!(
                "assignment covers {} of {} edges",
                labels.len(),
                self.complex.edges().len()
            )));
        }
        for (e, &x) in labels.iter().enumerate() {
            if x >= self.groups.group(self.edge_stratum(e)).order() {
                return Err(Error::Validation(format!(
                    "label on edge {} is out of range",
                    self.complex.edges()[e].name
                )));
            }
        }
        let mut violations = Vec::new();
        for fi in 0..self.complex.faces().len() {
            let p = self.face_product(labels, fi);
            let g = self.groups.group(self.complex.faces()[fi].stratum);
            if p != g.identity() {
                violations.push(FaceViolation { face: fi, product: p });
            }
        }
        if violations.is_empty() {
            Ok(Ok(Cocycle { labels: labels.to_vec() }))
        } else {
            Ok(Err(violations))
        }
    }

    /// All valid cocycles in lexicographic label order. The full assignment
    /// space is bounded by `cap` before enumeration starts.
    pub fn enumerate(&self, cap: u64) -> Result<Vec<Cocycle>> {
        let n_edges = self.complex.edges().len();
        let mut space: u128 = 1;
        for e in 0..n_edges {
            space = space.saturating_mul(self.groups.group(self.edge_stratum(e)).order() as u128);
        }
        if space > cap as u128 {
            return Err(Error::SizeExceeded { required: space, cap });
        }

        // a face becomes checkable once its highest edge is assigned
        let mut ready_at: Vec<Vec<usize>> = vec![Vec::new(); n_edges + 1];
        for (fi, f) in self.complex.faces().iter().enumerate() {
            let m = f.boundary.iter().map(|l| l.gen).max().unwrap_or(0);
            ready_at[m + 1].push(fi);
        }

        let mut out = Vec::new();
        let mut labels = vec![0usize; n_edges];
        self.enumerate_rec(&mut labels, 0, &ready_at, &mut out);
        Ok(out)
    }

    fn enumerate_rec(
        &self,
        labels: &mut Vec<usize>,
        depth: usize,
        ready_at: &[Vec<usize>],
        out: &mut Vec<Cocycle>,
    ) {
        if depth == labels.len() {
            out.push(Cocycle { labels: labels.clone() });
            return;
        }
        let order = self.groups.group(self.edge_stratum(depth)).order();
        for x in 0..order {
            labels[depth] = x;
            let ok = ready_at[depth + 1].iter().all(|&fi| {
                let g = self.groups.group(self.complex.faces()[fi].stratum);
                self.face_product(labels, fi) == g.identity()
            });
            if ok {
                self.enumerate_rec(labels, depth + 1, ready_at, out);
            }
        }
        labels[depth] = 0;
    }

    /// Applies a vertex gauge; the result of a valid cocycle is again valid.
    pub fn gauge_apply(&self, c: &Cocycle, h: &GaugeTransform) -> Cocycle {
        let labels = self
            .complex
            .edges()
            .iter()
            .enumerate()
            .map(|(ei, e)| {
                let g = self.groups.group(e.stratum);
                let ht = self.groups.res_apply(self.vertex_stratum(e.dst), e.stratum, h.values[e.dst]);
                let hs = self.groups.res_apply(self.vertex_stratum(e.src), e.stratum, h.values[e.src]);
                g.mul(g.mul(ht, c.labels[ei]), g.inv(hs))
            })
            .collect();
        Cocycle { labels }
    }

    fn gauge_group_size(&self) -> u128 {
        self.complex
            .vertices()
            .iter()
            .fold(1u128, |acc, v| acc.saturating_mul(self.groups.group(v.stratum).order() as u128))
    }

    /// Partitions cocycles into gauge orbits. Orbits are listed by least
    /// member index; the representative is the lexicographic minimum over the
    /// orbit after tree normalization (falling back to the plain minimum when
    /// no tree-trivial member exists in a nonuniform system).
    pub fn gauge_orbits(&self, cocycles: &[Cocycle], cap: u64) -> Result<Vec<GaugeOrbit>> {
        if self.gauge_group_size() > cap as u128 {
            return Err(Error::SizeExceeded { required: self.gauge_group_size(), cap });
        }
        use std::collections::BTreeMap;
        let index: BTreeMap<&[usize], usize> =
            cocycles.iter().enumerate().map(|(i, c)| (c.labels.as_slice(), i)).collect();

        let tree = self.spanning_forest();
        let mut assigned = vec![usize::MAX; cocycles.len()];
        let mut orbits = Vec::new();
        for start in 0..cocycles.len() {
            if assigned[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            // BFS closure over single-vertex gauge moves
            let mut seen: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
            let mut members = Vec::new();
            let mut best: Option<Vec<usize>> = None;
            let mut queue = vec![cocycles[start].labels.clone()];
            seen.insert(queue[0].clone(), ());
            while let Some(labels) = queue.pop() {
                if let Some(&i) = index.get(labels.as_slice()) {
                    if assigned[i] == usize::MAX {
                        assigned[i] = id;
                        members.push(i);
                    }
                }
                let tree_trivial = tree.iter().all(|&e| {
                    let g = self.groups.group(self.edge_stratum(e));
                    labels[e] == g.identity()
                });
                if tree_trivial {
                    match &best {
                        Some(b) if *b <= labels => {}
                        _ => best = Some(labels.clone()),
                    }
                }
                let c = Cocycle { labels };
                for v in 0..self.complex.vertices().len() {
                    let order = self.groups.group(self.vertex_stratum(v)).order();
                    for x in 1..order {
                        let mut h = GaugeTransform {
                            values: (0..self.complex.vertices().len())
                                .map(|w| self.groups.group(self.vertex_stratum(w)).identity())
                                .collect(),
                        };
                        h.values[v] = x;
                        let moved = self.gauge_apply(&c, &h);
                        if !seen.contains_key(&moved.labels) {
                            seen.insert(moved.labels.clone(), ());
                            queue.push(moved.labels);
                        }
                    }
                }
            }
            members.sort_unstable();
            let representative = match best {
                Some(labels) => Cocycle { labels },
                None => {
                    let min = seen.keys().next().expect("orbit is nonempty").clone();
                    Cocycle { labels: min }
                }
            };
            orbits.push(GaugeOrbit { members, representative });
        }
        Ok(orbits)
    }

    /// Deterministic spanning forest: edges in declaration order, each taken
    /// when it joins two components. On the standard cycle this leaves the
    /// last edge as the residue carrier.
    pub(crate) fn spanning_forest(&self) -> Vec<usize> {
        let n = self.complex.vertices().len();
        let mut parent: Vec<usize> = (0..n).collect();
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
        let mut tree = Vec::new();
        for (ei, e) in self.complex.edges().iter().enumerate() {
            let (a, b) = (find(&mut parent, e.src), find(&mut parent, e.dst));
            if a != b {
                parent[a.max(b)] = a.min(b);
                tree.push(ei);
            }
        }
        tree
    }

    /// Gauge-equivalent cocycle with identity labels on a deterministic
    /// spanning forest; returns the gauge that realizes it. Requires a
    /// uniform label-group system (otherwise use [`Self::gauge_orbits`]).
    pub fn tree_normalize(&self, c: &Cocycle) -> Result<(Cocycle, GaugeTransform)> {
        if !self.groups.is_uniform() {
            return Err(Error::Unsupported(
                "tree normalization needs a single shared label group".into(),
            ));
        }
        let g = self.groups.group(0);
        let n = self.complex.vertices().len();
        let forest = self.spanning_forest();
        let mut values = vec![usize::MAX; n];
        for root in 0..n {
            if values[root] != usize::MAX {
                continue;
            }
            values[root] = g.identity();
            let mut frontier = vec![root];
            while let Some(v) = frontier.pop() {
                for &ei in &forest {
                    let e = &self.complex.edges()[ei];
                    if e.src == v && values[e.dst] == usize::MAX {
                        // h_w u_e h_v^{-1} = id  =>  h_w = h_v u_e^{-1}
                        values[e.dst] = g.mul(values[v], g.inv(c.labels[ei]));
                        frontier.push(e.dst);
                    } else if e.dst == v && values[e.src] == usize::MAX {
                        values[e.src] = g.mul(values[v], c.labels[ei]);
                        frontier.push(e.src);
                    }
                }
            }
        }
        let gauge = GaugeTransform { values };
        Ok((self.gauge_apply(c, &gauge), gauge))
    }

    /// Number of gauge classes of cocycles.
    ///
    /// For uniform systems this counts natural-isomorphism classes of functors
    /// from the (simplified) skeleton groupoid into B(G), which agrees with a
    /// direct enumerate-and-partition but stays feasible after subdivision.
    pub fn class_count(&self, cap: u64) -> Result<usize> {
        if self.groups.is_uniform() {
            let skeleton = self.complex.skeleton_groupoid();
            let small = simplify(&skeleton)?;
            let target = FiniteGroupoid::from_group(self.groups.group(0));
            count_iso_classes(&small, &target, cap)
        } else {
            let cocycles = self.enumerate(cap)?;
            Ok(self.gauge_orbits(&cocycles, cap)?.len())
        }
    }
}

/// A cellular refinement map along which cocycles pull back.
pub enum CellMap {
    /// The identity map of a complex.
    Identity,
    /// A barycentric subdivision with its refinement data.
    Subdivision(SubdivisionMap),
}

/// Pulls a cocycle back along a cell map. The identity map returns the
/// cocycle unchanged; subdivisions split labels as in
/// [`pullback_cocycle`].
pub fn pullback(
    base: &CocycleSystem,
    refined: &CocycleSystem,
    map: &CellMap,
    c: &Cocycle,
) -> Result<Cocycle> {
    match map {
        CellMap::Identity => {
            if refined.complex().edges().len() != base.complex().edges().len() {
                return Err(Error::Validation(
                    "identity cell map needs identical complexes".into(),
                ));
            }
            match refined.validate(&c.labels)? {
                Ok(c) => Ok(c),
                Err(_) => Err(Error::Validation("cocycle invalid on the target".into())),
            }
        }
        CellMap::Subdivision(m) => pullback_cocycle(base, refined, m, c),
    }
}

/// Pulls a cocycle back along a barycentric subdivision: half-edges receive
/// (u_e, identity), and spoke labels are transported around each face so that
/// every cone triangle relation holds.
pub fn pullback_cocycle(
    base: &CocycleSystem,
    subdivided: &CocycleSystem,
    map: &SubdivisionMap,
    c: &Cocycle,
) -> Result<Cocycle> {
    let kc = subdivided.complex();
    let mut labels = vec![usize::MAX; kc.edges().len()];
    for (ei, origin) in map.edge_origin.iter().enumerate() {
        if let EdgeOrigin::Half { edge, second } = origin {
            let g = base.groups().group(base.complex().edges()[*edge].stratum);
            labels[ei] = if *second { g.identity() } else { c.labels[*edge] };
        }
    }
    for (fi, layout) in map.layouts.iter().enumerate() {
        let f = &base.complex().faces()[fi];
        let g = base.groups().group(f.stratum);
        let mut acc = g.identity();
        for (j, &spoke) in layout.spokes.iter().enumerate() {
            labels[spoke] = acc;
            let b = layout.sub_boundary[j];
            let e_str = kc.edges()[b.gen].stratum;
            let raw = subdivided.groups().res_apply(e_str, f.stratum, labels[b.gen]);
            let x = match b.sign {
                Sign::Pos => raw,
                Sign::Neg => g.inv(raw),
            };
            acc = g.mul(acc, g.inv(x));
        }
    }
    if labels.contains(&usize::MAX) {
        return Err(Error::Validation("subdivision map does not cover all edges".into()));
    }
    match subdivided.validate(&labels)? {
        Ok(c) => Ok(c),
        Err(violations) => Err(Error::Validation(format!(
            "pullback violated {} face relations",
            violations.len()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::LabelGroup;

    fn uniform(complex: &StratComplex2, g: LabelGroup) -> StratumGroups {
        StratumGroups::uniform(complex.poset(), g)
    }

    #[test]
    fn triangle_validation_over_z3() {
        let t = StratComplex2::triangle();
        let groups = uniform(&t, LabelGroup::cyclic(3).unwrap());
        let sys = CocycleSystem::new(&t, &groups);
        // boundary e01 e12 e02^{-1}: valid iff u02 = u12 + u01
        let (u01, u12) = (1usize, 1usize);
        assert!(sys.validate(&[u01, u12, 2]).unwrap().is_ok());
        let bad = sys.validate(&[u01, u12, 0]).unwrap();
        let violations = bad.unwrap_err();
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].face, 0);
    }

    #[test]
    fn face_free_complexes_accept_everything() {
        let c = StratComplex2::cycle(3).unwrap();
        let groups = uniform(&c, LabelGroup::cyclic(2).unwrap());
        let sys = CocycleSystem::new(&c, &groups);
        assert!(sys.validate(&[1, 0, 1]).unwrap().is_ok());
        // incomplete assignments and out-of-range labels are input errors
        assert!(sys.validate(&[1, 0]).is_err());
        assert!(sys.validate(&[1, 0, 2]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let z2 = LabelGroup::cyclic(2).unwrap();

        let c4 = StratComplex2::cycle(4).unwrap();
        let groups = uniform(&c4, z2.clone());
        assert_eq!(CocycleSystem::new(&c4, &groups).enumerate(1 << 20).unwrap().len(), 16);

        let t = StratComplex2::triangle();
        let groups = uniform(&t, z2.clone());
        assert_eq!(CocycleSystem::new(&t, &groups).enumerate(1 << 20).unwrap().len(), 4);

        // torus (1,1): cocycles = commuting pairs = all 4 over Z/2
        let t11 = StratComplex2::torus_chambers(&[1, 1]).unwrap();
        let groups = uniform(&t11, z2);
        assert_eq!(CocycleSystem::new(&t11, &groups).enumerate(1 << 20).unwrap().len(), 4);

        // and 2-cell pruning agrees with the nonabelian count on S3:
        // commuting pairs of S3 = sum over g of |centralizer(g)| = 6*1+2*3+3*2? no:
        // pairs (a,b) with ab=ba; direct count below.
        let s3 = LabelGroup::symmetric(3).unwrap();
        let mut commuting = 0;
        for a in 0..6 {
            for b in 0..6 {
                if s3.mul(a, b) == s3.mul(b, a) {
                    commuting += 1;
                }
            }
        }
        let groups = uniform(&t11, s3);
        assert_eq!(
            CocycleSystem::new(&t11, &groups).enumerate(1 << 20).unwrap().len(),
            commuting
        );
    }

    #[test]
    fn gauge_orbit_counts() {
        let z2 = LabelGroup::cyclic(2).unwrap();
        let c4 = StratComplex2::cycle(4).unwrap();
        let groups = uniform(&c4, z2);
        let sys = CocycleSystem::new(&c4, &groups);
        let all = sys.enumerate(1 << 20).unwrap();
        let orbits = sys.gauge_orbits(&all, 1 << 20).unwrap();
        assert_eq!(orbits.len(), 2);

        // l-cycle over S3: orbits = conjugacy classes = 3 (l = 3)
        let s3 = LabelGroup::symmetric(3).unwrap();
        let c3 = StratComplex2::cycle(3).unwrap();
        let groups = uniform(&c3, s3.clone());
        let sys = CocycleSystem::new(&c3, &groups);
        let all = sys.enumerate(1 << 22).unwrap();
        assert_eq!(sys.gauge_orbits(&all, 1 << 22).unwrap().len(), s3.conjugacy_classes().len());

        // triangle over any G: one orbit
        for g in [LabelGroup::cyclic(5).unwrap(), LabelGroup::symmetric(3).unwrap()] {
            let t = StratComplex2::triangle();
            let groups = uniform(&t, g);
            let sys = CocycleSystem::new(&t, &groups);
            let all = sys.enumerate(1 << 22).unwrap();
            assert_eq!(sys.gauge_orbits(&all, 1 << 22).unwrap().len(), 1);
        }
    }

    #[test]
    fn asymmetric_torus_counts_match_and_survive_subdivision() {
        // pi_1 of the torus is rank two whatever the wall counts, so class
        // counts agree across (1,2), (2,1), and their subdivisions
        let z2 = LabelGroup::cyclic(2).unwrap();
        let expected = 4; // commuting pairs in an abelian group of order 2
        for walls in [[1usize, 2], [2, 1]] {
            let t = StratComplex2::torus_chambers(&walls).unwrap();
            let groups = uniform(&t, z2.clone());
            assert_eq!(CocycleSystem::new(&t, &groups).class_count(1 << 26).unwrap(), expected);
            let (s, _) = t.barycentric_subdivide();
            let s_groups = StratumGroups::uniform(s.poset(), z2.clone());
            assert_eq!(
                CocycleSystem::new(&s, &s_groups).class_count(1 << 26).unwrap(),
                expected
            );
        }
    }

    #[test]
    fn cycle_orbit_count_is_length_independent() {
        // l-cycle over G: always the conjugacy class count of G
        let s3 = LabelGroup::symmetric(3).unwrap();
        let classes = s3.conjugacy_classes().len();
        for l in [2usize, 3, 4, 8] {
            let c = StratComplex2::cycle(l).unwrap();
            let groups = uniform(&c, s3.clone());
            let sys = CocycleSystem::new(&c, &groups);
            assert_eq!(sys.class_count(1 << 26).unwrap(), classes, "l = {l}");
        }
        let z5 = LabelGroup::cyclic(5).unwrap();
        for l in [2usize, 8] {
            let c = StratComplex2::cycle(l).unwrap();
            let groups = uniform(&c, z5.clone());
            let sys = CocycleSystem::new(&c, &groups);
            assert_eq!(sys.class_count(1 << 26).unwrap(), 5, "l = {l}");
        }
    }

    #[test]
    fn gauge_preserves_validity_exhaustively() {
        // all valid cocycles x all gauges on a small complex stay valid
        let t = StratComplex2::triangle();
        let z3 = LabelGroup::cyclic(3).unwrap();
        let groups = uniform(&t, z3.clone());
        let sys = CocycleSystem::new(&t, &groups);
        let all = sys.enumerate(1 << 20).unwrap();
        for c in &all {
            let mut h = vec![0usize; 3];
            loop {
                let moved = sys.gauge_apply(c, &GaugeTransform { values: h.clone() });
                assert!(sys.validate(&moved.labels).unwrap().is_ok());
                let mut i = h.len();
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    h[i] += 1;
                    if h[i] < 3 {
                        break;
                    }
                    h[i] = 0;
                }
                if h.iter().all(|&x| x == 0) {
                    break;
                }
            }
        }
    }

    #[test]
    fn tree_normalize_folds_holonomy() {
        let c4 = StratComplex2::cycle(4).unwrap();
        let z5 = LabelGroup::cyclic(5).unwrap();
        let groups = uniform(&c4, z5);
        let sys = CocycleSystem::new(&c4, &groups);
        let c = Cocycle { labels: vec![1, 2, 3, 4] };
        let (n, gauge) = sys.tree_normalize(&c).unwrap();
        // the gauge really sends c to n
        assert_eq!(sys.gauge_apply(&c, &gauge), n);
        // three tree edges trivial, the residue carries 1+2+3+4 = 0 mod 5
        assert_eq!(n.labels.iter().filter(|&&x| x != 0).count(), 0);

        let c = Cocycle { labels: vec![1, 2, 3, 3] };
        let (n, _) = sys.tree_normalize(&c).unwrap();
        let residues: Vec<usize> = n.labels.iter().copied().filter(|&x| x != 0).collect();
        assert_eq!(residues, vec![(1 + 2 + 3 + 3) % 5]);

        // already tree-trivial cocycle is unchanged
        let c = Cocycle { labels: vec![0, 0, 0, 2] };
        let (n, _) = sys.tree_normalize(&c).unwrap();
        assert_eq!(n, c);

        // triangle: everything normalizes to the identity cocycle
        let t = StratComplex2::triangle();
        let z3 = LabelGroup::cyclic(3).unwrap();
        let groups = uniform(&t, z3);
        let sys = CocycleSystem::new(&t, &groups);
        let c = Cocycle { labels: vec![1, 1, 2] };
        let (n, _) = sys.tree_normalize(&c).unwrap();
        assert_eq!(n.labels, vec![0, 0, 0]);
    }

    #[test]
    fn pullback_preserves_holonomy_and_validity() {
        let c4 = StratComplex2::cycle(4).unwrap();
        let z5 = LabelGroup::cyclic(5).unwrap();
        let groups = uniform(&c4, z5.clone());
        let sys = CocycleSystem::new(&c4, &groups);
        let (sub, map) = c4.barycentric_subdivide();
        let sub_groups = StratumGroups::uniform(sub.poset(), z5);
        let sub_sys = CocycleSystem::new(&sub, &sub_groups);

        let c = Cocycle { labels: vec![1, 2, 3, 4] };
        let p = pullback_cocycle(&sys, &sub_sys, &map, &c).unwrap();
        // halves carry (u, 0)
        assert_eq!(p.labels, vec![1, 0, 2, 0, 3, 0, 4, 0]);
        let (n, _) = sub_sys.tree_normalize(&p).unwrap();
        let residues: Vec<usize> = n.labels.into_iter().filter(|&x| x != 0).collect();
        assert_eq!(residues, vec![0usize; 0]); // 1+2+3+4 = 0 mod 5

        // pullback of the trivial cocycle is trivial
        let c = Cocycle { labels: vec![0; 4] };
        let p = pullback_cocycle(&sys, &sub_sys, &map, &c).unwrap();
        assert!(p.labels.iter().all(|&x| x == 0));

        // with faces: triangle over S3, every cocycle pulls back validly
        let t = StratComplex2::triangle();
        let s3 = LabelGroup::symmetric(3).unwrap();
        let groups = uniform(&t, s3.clone());
        let sys = CocycleSystem::new(&t, &groups);
        let (sub, map) = t.barycentric_subdivide();
        let sub_groups = StratumGroups::uniform(sub.poset(), s3);
        let sub_sys = CocycleSystem::new(&sub, &sub_groups);
        for c in sys.enumerate(1 << 22).unwrap() {
            pullback_cocycle(&sys, &sub_sys, &map, &c).unwrap();
        }
    }

    #[test]
    fn pullback_along_identity_is_identity() {
        let c4 = StratComplex2::cycle(4).unwrap();
        let z3 = LabelGroup::cyclic(3).unwrap();
        let groups = uniform(&c4, z3);
        let sys = CocycleSystem::new(&c4, &groups);
        let c = Cocycle { labels: vec![1, 0, 2, 1] };
        let p = pullback(&sys, &sys, &CellMap::Identity, &c).unwrap();
        assert_eq!(p, c);
    }

    #[test]
    fn class_count_agrees_with_direct_partition() {
        for (complex, group) in [
            (StratComplex2::cycle(4).unwrap(), LabelGroup::cyclic(2).unwrap()),
            (StratComplex2::cycle(3).unwrap(), LabelGroup::symmetric(3).unwrap()),
            (StratComplex2::triangle(), LabelGroup::cyclic(3).unwrap()),
            (StratComplex2::torus_chambers(&[1, 1]).unwrap(), LabelGroup::cyclic(3).unwrap()),
            (StratComplex2::torus_chambers(&[2, 2]).unwrap(), LabelGroup::cyclic(2).unwrap()),
        ] {
            let groups = uniform(&complex, group);
            let sys = CocycleSystem::new(&complex, &groups);
            let all = sys.enumerate(1 << 24).unwrap();
            let direct = sys.gauge_orbits(&all, 1 << 24).unwrap().len();
            assert_eq!(sys.class_count(1 << 24).unwrap(), direct);
        }
    }

    #[test]
    fn class_counts_do_not_depend_on_edge_orientation() {
        use crate::complex::{Edge, Face, Vertex};
        use crate::word::Letter;
        // torus (1,1) with the vertical loop reversed: same gauge classes
        let standard = StratComplex2::torus_chambers(&[1, 1]).unwrap();
        let poset = standard.poset().clone();
        let reversed = StratComplex2::new(
            poset,
            vec![Vertex { name: "c0_0".into(), stratum: 0 }],
            vec![
                Edge { name: "h0_0".into(), src: 0, dst: 0, stratum: 0 },
                Edge { name: "w0_0".into(), src: 0, dst: 0, stratum: 0 },
            ],
            vec![Face {
                name: "f0_0".into(),
                // w reversed as a generator: flip its two signed occurrences
                boundary: vec![
                    Letter::pos(0),
                    Letter::neg(1),
                    Letter::neg(0),
                    Letter::pos(1),
                ],
                stratum: 0,
            }],
        )
        .unwrap();
        for g in [LabelGroup::cyclic(3).unwrap(), LabelGroup::symmetric(3).unwrap()] {
            let a = uniform(&standard, g.clone());
            let b = uniform(&reversed, g);
            assert_eq!(
                CocycleSystem::new(&standard, &a).class_count(1 << 24).unwrap(),
                CocycleSystem::new(&reversed, &b).class_count(1 << 24).unwrap(),
            );
        }

        // 4-cycle with one edge reversed
        let c4 = StratComplex2::cycle(4).unwrap();
        let mut edges = c4.edges().to_vec();
        edges[2] = Edge { name: edges[2].name.clone(), src: edges[2].dst, dst: edges[2].src, stratum: 0 };
        let flipped =
            StratComplex2::new(c4.poset().clone(), c4.vertices().to_vec(), edges, vec![]).unwrap();
        for g in [LabelGroup::cyclic(5).unwrap(), LabelGroup::symmetric(3).unwrap()] {
            let a = uniform(&c4, g.clone());
            let b = uniform(&flipped, g);
            assert_eq!(
                CocycleSystem::new(&c4, &a).class_count(1 << 24).unwrap(),
                CocycleSystem::new(&flipped, &b).class_count(1 << 24).unwrap(),
            );
        }
    }

    #[test]
    fn opposite_cocycle_convention_gives_equal_orbit_counts() {
        // dual convention: face products taken in path order and gauges
        // acting by u -> h_s u h_t^{-1}; label inversion exchanges the two,
        // so orbit counts agree. Checked directly on nonabelian labels.
        let complex = StratComplex2::torus_chambers(&[1, 1]).unwrap();
        let s3 = LabelGroup::symmetric(3).unwrap();
        let groups = uniform(&complex, s3.clone());
        let sys = CocycleSystem::new(&complex, &groups);

        // solutions of the opposite-order face relation
        let mut opposite: Vec<Vec<usize>> = Vec::new();
        for a in 0..6 {
            for b in 0..6 {
                let labels = vec![a, b];
                let ok = complex.faces().iter().all(|f| {
                    let mut acc = s3.identity();
                    for l in &f.boundary {
                        let x = match l.sign {
                            Sign::Pos => labels[l.gen],
                            Sign::Neg => s3.inv(labels[l.gen]),
                        };
                        acc = s3.mul(acc, x); // path order
                    }
                    acc == s3.identity()
                });
                if ok {
                    opposite.push(labels);
                }
            }
        }
        // orbits under the transposed gauge action
        let mut orbit = vec![usize::MAX; opposite.len()];
        let mut count = 0;
        for i in 0..opposite.len() {
            if orbit[i] != usize::MAX {
                continue;
            }
            count += 1;
            let mut queue = vec![opposite[i].clone()];
            orbit[i] = i;
            while let Some(u) = queue.pop() {
                for h in 0..6 {
                    let moved: Vec<usize> = complex
                        .edges()
                        .iter()
                        .enumerate()
                        .map(|(ei, _)| s3.mul(s3.mul(h, u[ei]), s3.inv(h)))
                        .collect();
                    if let Some(j) = opposite.iter().position(|x| *x == moved) {
                        if orbit[j] == usize::MAX {
                            orbit[j] = i;
                            queue.push(moved);
                        }
                    }
                }
            }
        }
        let standard = sys.gauge_orbits(&sys.enumerate(1 << 24).unwrap(), 1 << 24).unwrap();
        assert_eq!(count, standard.len());
    }

    #[test]
    fn nonuniform_class_count_falls_back_to_direct_partition() {
        use std::collections::BTreeMap;
        use crate::complex::{Edge, Vertex};
        use crate::stratum::StratumPoset;

        // face-free 2-cycle with Z/2 vertices restricting into Z/4 edges
        let poset = StratumPoset::new(vec!["v".into(), "e".into()], &[(0, 1)]).unwrap();
        let z2 = LabelGroup::cyclic(2).unwrap();
        let z4 = LabelGroup::cyclic(4).unwrap();
        let mut maps = BTreeMap::new();
        maps.insert((0usize, 1usize), vec![0usize, 2]);
        let groups = StratumGroups::new(&poset, vec![z2, z4], maps).unwrap();
        let complex = StratComplex2::new(
            poset,
            vec![
                Vertex { name: "a".into(), stratum: 0 },
                Vertex { name: "b".into(), stratum: 0 },
            ],
            vec![
                Edge { name: "e0".into(), src: 0, dst: 1, stratum: 1 },
                Edge { name: "e1".into(), src: 1, dst: 0, stratum: 1 },
            ],
            vec![],
        )
        .unwrap();
        let sys = CocycleSystem::new(&complex, &groups);
        let all = sys.enumerate(1 << 20).unwrap();
        let direct = sys.gauge_orbits(&all, 1 << 20).unwrap().len();
        assert_eq!(sys.class_count(1 << 20).unwrap(), direct);
        // gauges only reach 2Z/4, so the holonomy classes refine mod 2
        assert_eq!(all.len(), 16);
        assert_eq!(direct, 8);
    }

    #[test]
    fn cap_is_enforced() {
        let c8 = StratComplex2::cycle(8).unwrap();
        let s3 = LabelGroup::symmetric(3).unwrap();
        let groups = uniform(&c8, s3);
        let sys = CocycleSystem::new(&c8, &groups);
        assert!(matches!(sys.enumerate(1000), Err(Error::SizeExceeded { .. })));
    }

    #[test]
    fn nonuniform_restrictions_enter_face_products() {
        use std::collections::BTreeMap;
        use crate::complex::{Edge, Face, Vertex};
        use crate::stratum::StratumPoset;
        use crate::word::Letter;

        // one vertex stratum "v" mapping into an edge/face stratum "e":
        // Z/2 -> Z/4 via 1 -> 2. Triangle with all edges on "e", vertices on "v".
        let poset = StratumPoset::new(vec!["v".into(), "e".into()], &[(0, 1)]).unwrap();
        let z2 = LabelGroup::cyclic(2).unwrap();
        let z4 = LabelGroup::cyclic(4).unwrap();
        let mut maps = BTreeMap::new();
        maps.insert((0usize, 1usize), vec![0usize, 2]);
        let groups = StratumGroups::new(&poset, vec![z2, z4], maps).unwrap();

        let complex = StratComplex2::new(
            poset,
            vec![
                Vertex { name: "a".into(), stratum: 0 },
                Vertex { name: "b".into(), stratum: 0 },
                Vertex { name: "c".into(), stratum: 0 },
            ],
            vec![
                Edge { name: "ab".into(), src: 0, dst: 1, stratum: 1 },
                Edge { name: "bc".into(), src: 1, dst: 2, stratum: 1 },
                Edge { name: "ac".into(), src: 0, dst: 2, stratum: 1 },
            ],
            vec![Face {
                name: "t".into(),
                boundary: vec![Letter::pos(0), Letter::pos(1), Letter::neg(2)],
                stratum: 1,
            }],
        )
        .unwrap();
        let sys = CocycleSystem::new(&complex, &groups);
        // valid: u_ac = u_bc + u_ab over Z/4
        assert!(sys.validate(&[1, 2, 3]).unwrap().is_ok());
        // gauge by the vertex group lands in 2Z/4 via the restriction
        let c = Cocycle { labels: vec![1, 2, 3] };
        let h = GaugeTransform { values: vec![1, 0, 0] };
        let moved = sys.gauge_apply(&c, &h);
        // u_ab gains -res(1) = -2 at its source, u_ac the same
        assert_eq!(moved.labels, vec![(1 + 4 - 2) % 4, 2, (3 + 4 - 2) % 4]);
        assert!(sys.validate(&moved.labels).unwrap().is_ok());
    }
}
