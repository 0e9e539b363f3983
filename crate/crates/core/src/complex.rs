//! Stratified 2-complexes: cells with stratum labels and boundary words,
//! standard builders, barycentric subdivision, and cellular group actions.

use crate::error::{Error, Result};
use crate::group::LabelGroup;
use crate::groupoid::PresentedGroupoid;
use crate::stratum::StratumPoset;
use crate::word::{Letter, Sign, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    pub stratum: usize,
}

/// An oriented edge; reversal is handled by signs in boundary words, never by
/// duplicating edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub src: usize,
    pub dst: usize,
    pub stratum: usize,
}

/// A polygonal 2-cell with an explicit closed boundary word over signed edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub name: String,
    pub boundary: Vec<Letter>,
    pub stratum: usize,
}

/// A stratified 2-complex. Stratum labels respect the closure order: vertex
/// strata restrict into incident edge strata, and edge strata into incident
/// face strata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratComplex2 {
    poset: StratumPoset,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
}

impl StratComplex2 {
    pub fn new(
        poset: StratumPoset,
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
        faces: Vec<Face>,
    ) -> Result<StratComplex2> {
        for (kind, names) in [
            ("vertex", vertices.iter().map(|v| &v.name).collect::<Vec<_>>()),
            ("edge", edges.iter().map(|e| &e.name).collect()),
            ("face", faces.iter().map(|f| &f.name).collect()),
        ] {
            let mut sorted = names.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != names.len() {
                return Err(Error::Validation(format!("duplicate {kind} names")));
            }
        }
        for v in &vertices {
            if v.stratum >= poset.len() {
                return Err(Error::Validation(format!("vertex {} has unknown stratum", v.name)));
            }
        }
        for e in &edges {
            if e.src >= vertices.len() || e.dst >= vertices.len() {
                return Err(Error::Validation(format!("edge {} has bad endpoints", e.name)));
            }
            if e.stratum >= poset.len() {
                return Err(Error::Validation(format!("edge {} has unknown stratum", e.name)));
            }
            for v in [e.src, e.dst] {
                if !poset.leq(vertices[v].stratum, e.stratum) {
                    return Err(Error::Validation(format!(
                        "edge {} has stratum below its endpoint {}",
                        e.name, vertices[v].name
                    )));
                }
            }
        }
        for f in &faces {
            if f.stratum >= poset.len() {
                return Err(Error::Validation(format!("face {} has unknown stratum", f.name)));
            }
            if f.boundary.is_empty() {
                return Err(Error::Validation(format!("face {} has empty boundary", f.name)));
            }
            let mut at = None;
            let mut start = None;
            for l in &f.boundary {
                let e = edges.get(l.gen).ok_or_else(|| {
                    Error::Validation(format!("face {} references unknown edge", f.name))
                })?;
                let (s, d) = match l.sign {
                    Sign::Pos => (e.src, e.dst),
                    Sign::Neg => (e.dst, e.src),
                };
                if let Some(prev) = at {
                    if prev != s {
                        return Err(Error::Validation(format!(
                            "face {} boundary is not composable",
                            f.name
                        )));
                    }
                } else {
                    start = Some(s);
                }
                at = Some(d);
                if !poset.leq(e.stratum, f.stratum) {
                    return Err(Error::Validation(format!(
                        "face {} has stratum below its boundary edge {}",
                        f.name, e.name
                    )));
                }
            }
            if at != start {
                return Err(Error::Validation(format!(
                    "face {} boundary is not a closed loop",
                    f.name
                )));
            }
        }
        Ok(StratComplex2 { poset, vertices, edges, faces })
    }

    pub fn poset(&self) -> &StratumPoset {
        &self.poset
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    /// Start vertex of a face's boundary loop.
    pub fn face_base(&self, f: usize) -> usize {
        let l = self.faces[f].boundary[0];
        match l.sign {
            Sign::Pos => self.edges[l.gen].src,
            Sign::Neg => self.edges[l.gen].dst,
        }
    }

    /// The cyclic graph on `l` vertices with one stratum: vertices are sector
    /// boxes, oriented edges a -> a+1 are the overlaps, no faces.
    pub fn cycle(l: usize) -> Result<StratComplex2> {
        if l == 0 {
            return Err(Error::Argument("cycle length must be >= 1".into()));
        }
        let poset = StratumPoset::single("s");
        let vertices =
            (0..l).map(|a| Vertex { name: format!("v{a}"), stratum: 0 }).collect();
        let edges = (0..l)
            .map(|a| Edge { name: format!("e{a}"), src: a, dst: (a + 1) % l, stratum: 0 })
            .collect();
        StratComplex2::new(poset, vertices, edges, Vec::new())
    }

    /// Cycle with caller-supplied per-cell strata.
    pub fn cycle_with_strata(
        poset: StratumPoset,
        vertex_strata: &[usize],
        edge_strata: &[usize],
    ) -> Result<StratComplex2> {
        let l = vertex_strata.len();
        if l == 0 || edge_strata.len() != l {
            return Err(Error::Argument(
                "cycle needs equal, nonzero vertex and edge stratum lists".into(),
            ));
        }
        let vertices = (0..l)
            .map(|a| Vertex { name: format!("v{a}"), stratum: vertex_strata[a] })
            .collect();
        let edges = (0..l)
            .map(|a| Edge {
                name: format!("e{a}"),
                src: a,
                dst: (a + 1) % l,
                stratum: edge_strata[a],
            })
            .collect();
        StratComplex2::new(poset, vertices, edges, Vec::new())
    }

    /// A single 2-simplex: e01, e12, e02 with the relation-bearing face.
    pub fn triangle() -> StratComplex2 {
        let poset = StratumPoset::single("s");
        let vertices = (0..3)
            .map(|a| Vertex { name: format!("v{a}"), stratum: 0 })
            .collect();
        let edges = vec![
            Edge { name: "e01".into(), src: 0, dst: 1, stratum: 0 },
            Edge { name: "e12".into(), src: 1, dst: 2, stratum: 0 },
            Edge { name: "e02".into(), src: 0, dst: 2, stratum: 0 },
        ];
        let faces = vec![Face {
            name: "t".into(),
            boundary: vec![Letter::pos(0), Letter::pos(1), Letter::neg(2)],
            stratum: 0,
        }];
        StratComplex2::new(poset, vertices, edges, faces).expect("triangle is valid")
    }

    /// Cone over the `l`-cycle: the cycle plus an apex, spokes, and one
    /// triangle per cycle edge. Simply connected.
    pub fn cone(l: usize) -> Result<StratComplex2> {
        if l == 0 {
            return Err(Error::Argument("cone base must be >= 1".into()));
        }
        let poset = StratumPoset::single("s");
        let mut vertices: Vec<Vertex> =
            (0..l).map(|a| Vertex { name: format!("v{a}"), stratum: 0 }).collect();
        vertices.push(Vertex { name: "apex".into(), stratum: 0 });
        let apex = l;
        let mut edges: Vec<Edge> = (0..l)
            .map(|a| Edge { name: format!("e{a}"), src: a, dst: (a + 1) % l, stratum: 0 })
            .collect();
        for a in 0..l {
            edges.push(Edge { name: format!("sp{a}"), src: a, dst: apex, stratum: 0 });
        }
        let faces = (0..l)
            .map(|a| Face {
                name: format!("t{a}"),
                boundary: vec![
                    Letter::pos(a),
                    Letter::pos(l + (a + 1) % l),
                    Letter::neg(l + a),
                ],
                stratum: 0,
            })
            .collect();
        StratComplex2::new(poset, vertices, edges, faces)
    }

    /// Product chamber decomposition of the angular torus as a stratified
    /// 2-complex: chambers are vertices of the dual complex, wall crossings
    /// are edges, codimension-2 corners are square commutation faces.
    ///
    /// `walls[i]` counts the walls in angular direction i; only rank <= 2 is
    /// supported (higher cells impose no further relations). For a single
    /// direction this is exactly [`StratComplex2::cycle`].
    pub fn torus_chambers(walls: &[usize]) -> Result<StratComplex2> {
        match walls {
            [] => Err(Error::Argument("need at least one wall direction".into())),
            [l] => StratComplex2::cycle(*l),
            [m, n] => {
                let (m, n) = (*m, *n);
                if m == 0 || n == 0 {
                    return Err(Error::Argument("each direction needs >= 1 wall".into()));
                }
                let poset = StratumPoset::single("s");
                let vid = |i: usize, j: usize| (i % m) * n + (j % n);
                let vertices = (0..m * n)
                    .map(|x| Vertex { name: format!("c{}_{}", x / n, x % n), stratum: 0 })
                    .collect();
                // horizontal crossings first, then vertical
                let mut edges = Vec::with_capacity(2 * m * n);
                for i in 0..m {
                    for j in 0..n {
                        edges.push(Edge {
                            name: format!("h{i}_{j}"),
                            src: vid(i, j),
                            dst: vid(i + 1, j),
                            stratum: 0,
                        });
                    }
                }
                for i in 0..m {
                    for j in 0..n {
                        edges.push(Edge {
                            name: format!("w{i}_{j}"),
                            src: vid(i, j),
                            dst: vid(i, j + 1),
                            stratum: 0,
                        });
                    }
                }
                let h = |i: usize, j: usize| (i % m) * n + (j % n);
                let w = |i: usize, j: usize| m * n + (i % m) * n + (j % n);
                let faces = (0..m)
                    .flat_map(|i| {
                        (0..n).map(move |j| (i, j))
                    })
                    .map(|(i, j)| Face {
                        name: format!("f{i}_{j}"),
                        boundary: vec![
                            Letter::pos(h(i, j)),
                            Letter::pos(w(i + 1, j)),
                            Letter::neg(h(i, j + 1)),
                            Letter::neg(w(i, j)),
                        ],
                        stratum: 0,
                    })
                    .collect();
                StratComplex2::new(poset, vertices, edges, faces)
            }
            _ => Err(Error::Unsupported(format!(
                "torus chamber complexes are built only for rank <= 2 (got {})",
                walls.len()
            ))),
        }
    }

    /// Edge-path groupoid of the 2-skeleton: objects are vertices, generators
    /// are oriented edges, and each face contributes the relation equating its
    /// boundary word with the identity.
    pub fn skeleton_groupoid(&self) -> PresentedGroupoid {
        let mut g = PresentedGroupoid::new(
            self.vertices.iter().map(|v| v.name.clone()).collect(),
        )
        .expect("vertex names are unique");
        for e in &self.edges {
            g.add_generator(e.name.clone(), e.src, e.dst).expect("edge names are unique");
        }
        for (fi, f) in self.faces.iter().enumerate() {
            let w = g.word(&f.boundary).expect("validated boundary");
            let base = self.face_base(fi);
            g.add_relation(w, Word::identity(base)).expect("closed boundary");
        }
        g
    }

    /// Barycentric subdivision: edges split at midpoints, faces replaced by
    /// the cone triangulation from a barycenter. Strata are inherited from
    /// the subdivided cell.
    pub fn barycentric_subdivide(&self) -> (StratComplex2, SubdivisionMap) {
        let mut vertices: Vec<Vertex> = self.vertices.clone();
        let mut vertex_origin: Vec<VertexOrigin> =
            (0..self.vertices.len()).map(VertexOrigin::Old).collect();

        let mut mid = Vec::with_capacity(self.edges.len());
        for (ei, e) in self.edges.iter().enumerate() {
            mid.push(vertices.len());
            vertices.push(Vertex { name: format!("{}|m", e.name), stratum: e.stratum });
            vertex_origin.push(VertexOrigin::EdgeMid(ei));
        }
        let mut bar = Vec::with_capacity(self.faces.len());
        for (fi, f) in self.faces.iter().enumerate() {
            bar.push(vertices.len());
            vertices.push(Vertex { name: format!("{}|b", f.name), stratum: f.stratum });
            vertex_origin.push(VertexOrigin::FaceBar(fi));
        }

        let mut edges: Vec<Edge> = Vec::new();
        let mut edge_origin: Vec<EdgeOrigin> = Vec::new();
        let mut halves = Vec::with_capacity(self.edges.len());
        for (ei, e) in self.edges.iter().enumerate() {
            let h0 = edges.len();
            edges.push(Edge {
                name: format!("{}|0", e.name),
                src: e.src,
                dst: mid[ei],
                stratum: e.stratum,
            });
            edge_origin.push(EdgeOrigin::Half { edge: ei, second: false });
            edges.push(Edge {
                name: format!("{}|1", e.name),
                src: mid[ei],
                dst: e.dst,
                stratum: e.stratum,
            });
            edge_origin.push(EdgeOrigin::Half { edge: ei, second: true });
            halves.push((h0, h0 + 1));
        }

        let mut faces: Vec<Face> = Vec::new();
        let mut face_origin: Vec<usize> = Vec::new();
        let mut layouts: Vec<FaceLayout> = Vec::new();
        for (fi, f) in self.faces.iter().enumerate() {
            // subdivided boundary: two signed half-edges per original letter
            let mut sub_boundary: Vec<Letter> = Vec::with_capacity(2 * f.boundary.len());
            let mut corners: Vec<usize> = Vec::with_capacity(2 * f.boundary.len());
            let mut at = self.face_base(fi);
            for l in &f.boundary {
                let (h0, h1) = halves[l.gen];
                match l.sign {
                    Sign::Pos => {
                        corners.push(at);
                        sub_boundary.push(Letter::pos(h0));
                        corners.push(mid[l.gen]);
                        sub_boundary.push(Letter::pos(h1));
                        at = self.edges[l.gen].dst;
                    }
                    Sign::Neg => {
                        corners.push(at);
                        sub_boundary.push(Letter::neg(h1));
                        corners.push(mid[l.gen]);
                        sub_boundary.push(Letter::neg(h0));
                        at = self.edges[l.gen].src;
                    }
                }
            }

            let positions = sub_boundary.len();
            let mut spokes = Vec::with_capacity(positions);
            for j in 0..positions {
                spokes.push(edges.len());
                edges.push(Edge {
                    name: format!("{}|s{j}", f.name),
                    src: corners[j],
                    dst: bar[fi],
                    stratum: f.stratum,
                });
                edge_origin.push(EdgeOrigin::Spoke { face: fi, position: j });
            }
            for j in 0..positions {
                faces.push(Face {
                    name: format!("{}|t{j}", f.name),
                    boundary: vec![
                        sub_boundary[j],
                        Letter::pos(spokes[(j + 1) % positions]),
                        Letter::neg(spokes[j]),
                    ],
                    stratum: f.stratum,
                });
                face_origin.push(fi);
            }
            layouts.push(FaceLayout { sub_boundary, spokes });
        }

        let complex = StratComplex2::new(self.poset.clone(), vertices, edges, faces)
            .expect("subdivision of a valid complex is valid");
        let map = SubdivisionMap { vertex_origin, edge_origin, face_origin, layouts };
        (complex, map)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexOrigin {
    Old(usize),
    EdgeMid(usize),
    FaceBar(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeOrigin {
    Half { edge: usize, second: bool },
    Spoke { face: usize, position: usize },
}

/// Per-face layout of a subdivision: the subdivided boundary letters and the
/// spoke edges in boundary-position order.
#[derive(Clone, Debug)]
pub struct FaceLayout {
    pub sub_boundary: Vec<Letter>,
    pub spokes: Vec<usize>,
}

/// Refinement map of a barycentric subdivision.
#[derive(Clone, Debug)]
pub struct SubdivisionMap {
    pub vertex_origin: Vec<VertexOrigin>,
    pub edge_origin: Vec<EdgeOrigin>,
    pub face_origin: Vec<usize>,
    pub layouts: Vec<FaceLayout>,
}

/// A finite group acting cellularly: per element, permutations of vertices,
/// edges (orientation-compatible), and faces, preserving strata and boundary
/// words (up to cyclic rotation of the loop).
#[derive(Clone, Debug)]
pub struct CellularAction {
    deck: LabelGroup,
    vperm: Vec<Vec<usize>>,
    eperm: Vec<Vec<usize>>,
    fperm: Vec<Vec<usize>>,
}

impl CellularAction {
    pub fn new(
        complex: &StratComplex2,
        deck: LabelGroup,
        vperm: Vec<Vec<usize>>,
        eperm: Vec<Vec<usize>>,
        fperm: Vec<Vec<usize>>,
    ) -> Result<CellularAction> {
        let n = deck.order();
        if vperm.len() != n || eperm.len() != n || fperm.len() != n {
            return Err(Error::Validation("one permutation per deck element required".into()));
        }
        let check_perm = |p: &[usize], len: usize, what: &str| -> Result<()> {
            if p.len() != len {
                return Err(Error::Validation(format!("{what} permutation has wrong length")));
            }
            let mut seen = vec![false; len];
            for &x in p {
                if x >= len || seen[x] {
                    return Err(Error::Validation(format!("{what} map is not a permutation")));
                }
                seen[x] = true;
            }
            Ok(())
        };
        for g in 0..n {
            check_perm(&vperm[g], complex.vertices().len(), "vertex")?;
            check_perm(&eperm[g], complex.edges().len(), "edge")?;
            check_perm(&fperm[g], complex.faces().len(), "face")?;
        }
        let e = deck.identity();
        for (len, perm) in [
            (complex.vertices().len(), &vperm[e]),
            (complex.edges().len(), &eperm[e]),
            (complex.faces().len(), &fperm[e]),
        ] {
            if *perm != (0..len).collect::<Vec<_>>() {
                return Err(Error::Validation("identity element must act trivially".into()));
            }
        }
        for g in 0..n {
            for h in 0..n {
                let gh = deck.mul(g, h);
                for (pg, ph, pgh) in [
                    (&vperm[g], &vperm[h], &vperm[gh]),
                    (&eperm[g], &eperm[h], &eperm[gh]),
                    (&fperm[g], &fperm[h], &fperm[gh]),
                ] {
                    for x in 0..pg.len().min(ph.len()) {
                        if pgh[x] != pg[ph[x]] {
                            return Err(Error::Validation(format!(
                                "action is not a homomorphism at deck pair ({}, {})",
                                deck.name(g),
                                deck.name(h)
                            )));
                        }
                    }
                }
            }
        }
        for g in 0..n {
            for (vi, v) in complex.vertices().iter().enumerate() {
                if complex.vertices()[vperm[g][vi]].stratum != v.stratum {
                    return Err(Error::Validation("action does not preserve vertex strata".into()));
                }
            }
            for (ei, e) in complex.edges().iter().enumerate() {
                let im = &complex.edges()[eperm[g][ei]];
                if im.stratum != e.stratum {
                    return Err(Error::Validation("action does not preserve edge strata".into()));
                }
                if im.src != vperm[g][e.src] || im.dst != vperm[g][e.dst] {
                    return Err(Error::Validation(format!(
                        "action is not orientation-compatible on edge {}",
                        e.name
                    )));
                }
            }
            for (fi, f) in complex.faces().iter().enumerate() {
                let im = &complex.faces()[fperm[g][fi]];
                if im.stratum != f.stratum {
                    return Err(Error::Validation("action does not preserve face strata".into()));
                }
                let mapped: Vec<Letter> = f
                    .boundary
                    .iter()
                    .map(|l| Letter { gen: eperm[g][l.gen], sign: l.sign })
                    .collect();
                let target = &im.boundary;
                let m = target.len();
                let rotation_match = mapped.len() == m
                    && (0..m).any(|r| (0..m).all(|j| target[(j + r) % m] == mapped[j]));
                if !rotation_match {
                    return Err(Error::Validation(format!(
                        "action does not send boundary of {} to boundary of {}",
                        f.name, im.name
                    )));
                }
            }
        }
        Ok(CellularAction { deck, vperm, eperm, fperm })
    }

    /// Trivial action of the trivial group.
    pub fn identity(complex: &StratComplex2) -> CellularAction {
        let deck = LabelGroup::trivial();
        CellularAction::new(
            complex,
            deck,
            vec![(0..complex.vertices().len()).collect()],
            vec![(0..complex.edges().len()).collect()],
            vec![(0..complex.faces().len()).collect()],
        )
        .expect("identity action is valid")
    }

    /// Rotation of the standard `l`-cycle by multiples of l/n; deck group Z/n.
    pub fn cycle_rotation(complex: &StratComplex2, n: usize) -> Result<CellularAction> {
        let l = complex.vertices().len();
        if n == 0 || !l.is_multiple_of(n) {
            return Err(Error::Argument(format!("{n} must divide the cycle length {l}")));
        }
        if complex.edges().len() != l || !complex.faces().is_empty() {
            return Err(Error::Argument("cycle_rotation expects a standard cycle".into()));
        }
        let step = l / n;
        let deck = LabelGroup::cyclic(n)?;
        let perms: Vec<Vec<usize>> = (0..n)
            .map(|j| (0..l).map(|a| (a + j * step) % l).collect())
            .collect();
        CellularAction::new(complex, deck, perms.clone(), perms, vec![Vec::new(); n])
    }

    /// Rotation of the (m1, m2) torus chamber complex by (m1/n1, m2/n2) steps;
    /// deck group Z/n1 x Z/n2.
    pub fn torus_rotation(
        complex: &StratComplex2,
        dims: (usize, usize),
        orders: (usize, usize),
    ) -> Result<CellularAction> {
        let (m1, m2) = dims;
        let (n1, n2) = orders;
        if n1 == 0 || n2 == 0 || m1 % n1 != 0 || m2 % n2 != 0 {
            return Err(Error::Argument("rotation orders must divide the wall counts".into()));
        }
        if complex.vertices().len() != m1 * m2
            || complex.edges().len() != 2 * m1 * m2
            || complex.faces().len() != m1 * m2
        {
            return Err(Error::Argument("torus_rotation expects a torus chamber complex".into()));
        }
        let deck = LabelGroup::direct_product(
            &LabelGroup::cyclic(n1)?,
            &LabelGroup::cyclic(n2)?,
        )?;
        let (s1, s2) = (m1 / n1, m2 / n2);
        let cell = |i: usize, j: usize| (i % m1) * m2 + (j % m2);
        let mut vperm = Vec::with_capacity(deck.order());
        let mut eperm = Vec::with_capacity(deck.order());
        let mut fperm = Vec::with_capacity(deck.order());
        for a in 0..n1 {
            for b in 0..n2 {
                let (da, db) = (a * s1, b * s2);
                let vp: Vec<usize> = (0..m1 * m2)
                    .map(|x| cell(x / m2 + da, x % m2 + db))
                    .collect();
                let ep: Vec<usize> = (0..2 * m1 * m2)
                    .map(|x| {
                        if x < m1 * m2 {
                            cell(x / m2 + da, x % m2 + db)
                        } else {
                            let y = x - m1 * m2;
                            m1 * m2 + cell(y / m2 + da, y % m2 + db)
                        }
                    })
                    .collect();
                let fp = vp.clone();
                vperm.push(vp);
                eperm.push(ep);
                fperm.push(fp);
            }
        }
        CellularAction::new(complex, deck, vperm, eperm, fperm)
    }

    pub fn deck(&self) -> &LabelGroup {
        &self.deck
    }

    pub fn vertex(&self, g: usize, v: usize) -> usize {
        self.vperm[g][v]
    }

    pub fn edge(&self, g: usize, e: usize) -> usize {
        self.eperm[g][e]
    }

    pub fn face(&self, g: usize, f: usize) -> usize {
        self.fperm[g][f]
    }

    /// Cells fixed by some non-identity element; empty iff the action is free.
    pub fn fixed_cells(&self, complex: &StratComplex2) -> Vec<String> {
        let mut out = Vec::new();
        for g in 0..self.deck.order() {
            if g == self.deck.identity() {
                continue;
            }
            for (vi, v) in complex.vertices().iter().enumerate() {
                if self.vperm[g][vi] == vi {
                    out.push(format!("vertex {}", v.name));
                }
            }
            for (ei, e) in complex.edges().iter().enumerate() {
                if self.eperm[g][ei] == ei {
                    out.push(format!("edge {}", e.name));
                }
            }
            for (fi, f) in complex.faces().iter().enumerate() {
                if self.fperm[g][fi] == fi {
                    out.push(format!("face {}", f.name));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Orbit complex of a free action, with the projection map on cells.
    pub fn quotient(&self, complex: &StratComplex2) -> Result<(StratComplex2, QuotientMap)> {
        let fixed = self.fixed_cells(complex);
        if !fixed.is_empty() {
            return Err(Error::NotFree(fixed));
        }
        let orbit_of = |perms: &Vec<Vec<usize>>, len: usize| -> (Vec<usize>, Vec<usize>) {
            // representative = least index in orbit
            let mut rep = vec![usize::MAX; len];
            let mut reps = Vec::new();
            for x in 0..len {
                if rep[x] != usize::MAX {
                    continue;
                }
                let mut orbit: Vec<usize> =
                    (0..self.deck.order()).map(|g| perms[g][x]).collect();
                orbit.sort_unstable();
                orbit.dedup();
                let id = reps.len();
                reps.push(x);
                for &y in &orbit {
                    rep[y] = id;
                }
            }
            (rep, reps)
        };
        let (v_orbit, v_reps) = orbit_of(&self.vperm, complex.vertices().len());
        let (e_orbit, e_reps) = orbit_of(&self.eperm, complex.edges().len());
        let (f_orbit, f_reps) = orbit_of(&self.fperm, complex.faces().len());

        let vertices: Vec<Vertex> = v_reps
            .iter()
            .map(|&v| complex.vertices()[v].clone())
            .collect();
        let edges: Vec<Edge> = e_reps
            .iter()
            .map(|&e| {
                let old = &complex.edges()[e];
                Edge {
                    name: old.name.clone(),
                    src: v_orbit[old.src],
                    dst: v_orbit[old.dst],
                    stratum: old.stratum,
                }
            })
            .collect();
        let faces: Vec<Face> = f_reps
            .iter()
            .map(|&f| {
                let old = &complex.faces()[f];
                Face {
                    name: old.name.clone(),
                    boundary: old
                        .boundary
                        .iter()
                        .map(|l| Letter { gen: e_orbit[l.gen], sign: l.sign })
                        .collect(),
                    stratum: old.stratum,
                }
            })
            .collect();
        let q = StratComplex2::new(complex.poset().clone(), vertices, edges, faces)?;
        Ok((q, QuotientMap { vertex: v_orbit, edge: e_orbit, face: f_orbit }))
    }
}

/// Projection of cells onto their orbits.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub vertex: Vec<usize>,
    pub edge: Vec<usize>,
    pub face: Vec<usize>,
}
