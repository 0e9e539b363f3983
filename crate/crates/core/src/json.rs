//! JSON encodings of the domain objects with stable field order.
//!
//! Signed references to generators or edges are encoded as id strings with a
//! leading `-` for the inverse; plain ids must therefore not start with `-`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{CellularAction, Edge, Face, StratComplex2, Vertex};
use crate::error::{Error, Result};
use crate::finite::FiniteGroupoid;
use crate::group::LabelGroup;
use crate::groupoid::PresentedGroupoid;
use crate::presenter::{Cospan, CurveSpec, GenFunctor, PunctureSpec};
use crate::stratum::StratumPoset;
use crate::unipotent::UnipotentGroup;
use crate::word::{Letter, Sign, Word};

fn parse_err(what: &str, e: serde_json::Error) -> Error {
    Error::Parse(format!("{what}: {e}"))
}

// ---------------------------------------------------------------------------
// groups

#[derive(Serialize, Deserialize)]
pub struct GroupDoc {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<Vec<u8>>>,
}

pub fn group_to_doc(g: &LabelGroup) -> GroupDoc {
    GroupDoc {
        elements: g.names().to_vec(),
        table: g.table().to_vec(),
        identity: g.identity(),
        matrices: None,
    }
}

/// Matrix groups additionally emit their matrix realization for audit.
pub fn unipotent_to_doc(u: &UnipotentGroup) -> GroupDoc {
    let mut doc = group_to_doc(&u.group);
    doc.matrices = Some(u.elements.iter().map(|e| e.matrix.clone()).collect());
    doc
}

pub fn parse_group(text: &str) -> Result<LabelGroup> {
    let doc: GroupDoc = serde_json::from_str(text).map_err(|e| parse_err("group", e))?;
    let g = LabelGroup::from_table(doc.elements, doc.table)?;
    if g.identity() != doc.identity {
        return Err(Error::Validation(format!(
            "declared identity {} does not match the table (found {})",
            doc.identity,
            g.identity()
        )));
    }
    Ok(g)
}

pub fn group_to_json(g: &LabelGroup) -> String {
    serde_json::to_string_pretty(&group_to_doc(g)).expect("group serializes")
}

// ---------------------------------------------------------------------------
// stratified complexes

#[derive(Serialize, Deserialize)]
pub struct ComplexDoc {
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
    pub faces: Vec<FaceDoc>,
    pub poset: Vec<(String, String)>,
}

#[derive(Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: String,
    pub stratum: String,
}

#[derive(Serialize, Deserialize)]
pub struct EdgeDoc {
    pub id: String,
    pub src: String,
    pub dst: String,
    pub stratum: String,
}

#[derive(Serialize, Deserialize)]
pub struct FaceDoc {
    pub id: String,
    pub boundary: Vec<String>,
    pub stratum: String,
}

pub fn complex_to_doc(k: &StratComplex2) -> ComplexDoc {
    let stratum = |s: usize| k.poset().names()[s].clone();
    ComplexDoc {
        vertices: k
            .vertices()
            .iter()
            .map(|v| VertexDoc { id: v.name.clone(), stratum: stratum(v.stratum) })
            .collect(),
        edges: k
            .edges()
            .iter()
            .map(|e| EdgeDoc {
                id: e.name.clone(),
                src: k.vertices()[e.src].name.clone(),
                dst: k.vertices()[e.dst].name.clone(),
                stratum: stratum(e.stratum),
            })
            .collect(),
        faces: k
            .faces()
            .iter()
            .map(|f| FaceDoc {
                id: f.name.clone(),
                boundary: f
                    .boundary
                    .iter()
                    .map(|l| {
                        let name = &k.edges()[l.gen].name;
                        match l.sign {
                            Sign::Pos => name.clone(),
                            Sign::Neg => format!("-{name}"),
                        }
                    })
                    .collect(),
                stratum: stratum(f.stratum),
            })
            .collect(),
        poset: k
            .poset()
            .strict_pairs()
            .into_iter()
            .map(|(a, b)| (k.poset().names()[a].clone(), k.poset().names()[b].clone()))
            .collect(),
    }
}

pub fn complex_to_json(k: &StratComplex2) -> String {
    serde_json::to_string_pretty(&complex_to_doc(k)).expect("complex serializes")
}

fn signed_name(s: &str) -> (String, Sign) {
    match s.strip_prefix('-') {
        Some(rest) => (rest.to_string(), Sign::Neg),
        None => (s.to_string(), Sign::Pos),
    }
}

pub fn parse_complex(text: &str) -> Result<StratComplex2> {
    let doc: ComplexDoc = serde_json::from_str(text).map_err(|e| parse_err("complex", e))?;

    let mut stratum_names: Vec<String> = Vec::new();
    let mut note = |name: &str| {
        if !stratum_names.iter().any(|s| s == name) {
            stratum_names.push(name.to_string());
        }
    };
    for v in &doc.vertices {
        note(&v.stratum);
    }
    for e in &doc.edges {
        note(&e.stratum);
    }
    for f in &doc.faces {
        note(&f.stratum);
    }
    for (a, b) in &doc.poset {
        note(a);
        note(b);
    }
    let stratum_ix = |name: &str, names: &[String]| -> Result<usize> {
        names
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::Validation(format!("unknown stratum {name}")))
    };
    let pairs: Vec<(usize, usize)> = doc
        .poset
        .iter()
        .map(|(a, b)| {
            Ok((stratum_ix(a, &stratum_names)?, stratum_ix(b, &stratum_names)?))
        })
        .collect::<Result<_>>()?;
    let poset = StratumPoset::new(stratum_names.clone(), &pairs)?;

    let vertices: Vec<Vertex> = doc
        .vertices
        .iter()
        .map(|v| {
            Ok(Vertex { name: v.id.clone(), stratum: stratum_ix(&v.stratum, &stratum_names)? })
        })
        .collect::<Result<_>>()?;
    let vertex_ix = |name: &str| -> Result<usize> {
        vertices
            .iter()
            .position(|v| v.name == name)
            .ok_or_else(|| Error::Validation(format!("unknown vertex {name}")))
    };
    let edges: Vec<Edge> = doc
        .edges
        .iter()
        .map(|e| {
            if e.id.starts_with('-') {
                return Err(Error::Validation(format!("edge id {} may not start with '-'", e.id)));
            }
            Ok(Edge {
                name: e.id.clone(),
                src: vertex_ix(&e.src)?,
                dst: vertex_ix(&e.dst)?,
                stratum: stratum_ix(&e.stratum, &stratum_names)?,
            })
        })
        .collect::<Result<_>>()?;
    let edge_ix = |name: &str| -> Result<usize> {
        edges
            .iter()
            .position(|e| e.name == name)
            .ok_or_else(|| Error::Validation(format!("unknown edge {name}")))
    };
    let faces: Vec<Face> = doc
        .faces
        .iter()
        .map(|f| {
            let boundary = f
                .boundary
                .iter()
                .map(|s| {
                    let (name, sign) = signed_name(s);
                    Ok(Letter { gen: edge_ix(&name)?, sign })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Face {
                name: f.id.clone(),
                boundary,
                stratum: stratum_ix(&f.stratum, &stratum_names)?,
            })
        })
        .collect::<Result<_>>()?;
    StratComplex2::new(poset, vertices, edges, faces)
}

// ---------------------------------------------------------------------------
// presented groupoids

#[derive(Serialize, Deserialize)]
pub struct GroupoidDoc {
    pub objects: Vec<String>,
    pub generators: Vec<GeneratorDoc>,
    pub relations: Vec<(Vec<String>, Vec<String>)>,
}

#[derive(Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub id: String,
    pub src: String,
    pub dst: String,
}

pub fn groupoid_to_doc(g: &PresentedGroupoid) -> GroupoidDoc {
    let signed = |w: &Word| -> Vec<String> {
        w.letters
            .iter()
            .map(|l| {
                let name = &g.generators()[l.gen].name;
                match l.sign {
                    Sign::Pos => name.clone(),
                    Sign::Neg => format!("-{name}"),
                }
            })
            .collect()
    };
    GroupoidDoc {
        objects: g.objects().to_vec(),
        generators: g
            .generators()
            .iter()
            .map(|gen| GeneratorDoc {
                id: gen.name.clone(),
                src: g.objects()[gen.src].clone(),
                dst: g.objects()[gen.dst].clone(),
            })
            .collect(),
        relations: g.relations().iter().map(|r| (signed(&r.lhs), signed(&r.rhs))).collect(),
    }
}

pub fn groupoid_to_json(g: &PresentedGroupoid) -> String {
    serde_json::to_string_pretty(&groupoid_to_doc(g)).expect("groupoid serializes")
}

pub fn groupoid_from_doc(doc: &GroupoidDoc) -> Result<PresentedGroupoid> {
    let mut g = PresentedGroupoid::new(doc.objects.clone())?;
    for gen in &doc.generators {
        if gen.id.starts_with('-') {
            return Err(Error::Validation(format!(
                "generator id {} may not start with '-'",
                gen.id
            )));
        }
        let src = g
            .object_index(&gen.src)
            .ok_or_else(|| Error::Validation(format!("unknown object {}", gen.src)))?;
        let dst = g
            .object_index(&gen.dst)
            .ok_or_else(|| Error::Validation(format!("unknown object {}", gen.dst)))?;
        g.add_generator(gen.id.clone(), src, dst)?;
    }
    for (lhs, rhs) in &doc.relations {
        let lhs_w = word_from_signed(&g, lhs, rhs)?;
        let rhs_w = if rhs.is_empty() {
            Word::identity(lhs_w.src)
        } else {
            word_from_signed(&g, rhs, lhs)?
        };
        g.add_relation(lhs_w, rhs_w)?;
    }
    Ok(g)
}

fn word_from_signed<S: AsRef<str>>(
    g: &PresentedGroupoid,
    names: &[S],
    anchor_side: &[S],
) -> Result<Word> {
    let letters = names
        .iter()
        .map(|s| {
            let (name, sign) = signed_name(s.as_ref());
            let gen = g
                .generator_index(&name)
                .ok_or_else(|| Error::Validation(format!("unknown generator {name}")))?;
            Ok(Letter { gen, sign })
        })
        .collect::<Result<Vec<_>>>()?;
    if letters.is_empty() {
        // infer the anchor object from the other side of the relation
        let other = anchor_side
            .iter()
            .map(|s| {
                let (name, sign) = signed_name(s.as_ref());
                let gen = g
                    .generator_index(&name)
                    .ok_or_else(|| Error::Validation(format!("unknown generator {name}")))?;
                Ok(Letter { gen, sign })
            })
            .collect::<Result<Vec<_>>>()?;
        if other.is_empty() {
            return Err(Error::Validation(
                "a relation with two empty sides cannot infer its object".into(),
            ));
        }
        let w = g.word(&other)?;
        return Ok(Word::identity(w.src));
    }
    g.word(&letters)
}

pub fn parse_groupoid(text: &str) -> Result<PresentedGroupoid> {
    let doc: GroupoidDoc = serde_json::from_str(text).map_err(|e| parse_err("groupoid", e))?;
    groupoid_from_doc(&doc)
}

// ---------------------------------------------------------------------------
// cellular actions

#[derive(Serialize, Deserialize)]
pub struct ActionDoc {
    pub deck: GroupDoc,
    /// per deck element name, vertex id -> image vertex id
    pub vertex_maps: BTreeMap<String, BTreeMap<String, String>>,
    pub edge_maps: BTreeMap<String, BTreeMap<String, String>>,
    pub face_maps: BTreeMap<String, BTreeMap<String, String>>,
}

pub fn parse_action(text: &str, complex: &StratComplex2) -> Result<CellularAction> {
    let doc: ActionDoc = serde_json::from_str(text).map_err(|e| parse_err("action", e))?;
    let deck = LabelGroup::from_table(doc.deck.elements, doc.deck.table)?;

    let perm_for = |maps: &BTreeMap<String, BTreeMap<String, String>>,
                    elem: &str,
                    names: Vec<&str>,
                    what: &str|
     -> Result<Vec<usize>> {
        let lookup = |n: &str| -> Result<usize> {
            names
                .iter()
                .position(|x| *x == n)
                .ok_or_else(|| Error::Validation(format!("unknown {what} {n}")))
        };
        match maps.get(elem) {
            None => Ok((0..names.len()).collect()),
            Some(m) => {
                let mut perm: Vec<usize> = (0..names.len()).collect();
                for (from, to) in m {
                    perm[lookup(from)?] = lookup(to)?;
                }
                Ok(perm)
            }
        }
    };

    let vertex_names: Vec<&str> = complex.vertices().iter().map(|v| v.name.as_str()).collect();
    let edge_names: Vec<&str> = complex.edges().iter().map(|e| e.name.as_str()).collect();
    let face_names: Vec<&str> = complex.faces().iter().map(|f| f.name.as_str()).collect();

    let mut vperm = Vec::with_capacity(deck.order());
    let mut eperm = Vec::with_capacity(deck.order());
    let mut fperm = Vec::with_capacity(deck.order());
    for g in 0..deck.order() {
        let name = deck.name(g).to_string();
        vperm.push(perm_for(&doc.vertex_maps, &name, vertex_names.clone(), "vertex")?);
        eperm.push(perm_for(&doc.edge_maps, &name, edge_names.clone(), "edge")?);
        fperm.push(perm_for(&doc.face_maps, &name, face_names.clone(), "face")?);
    }
    CellularAction::new(complex, deck, vperm, eperm, fperm)
}

pub fn action_to_json(complex: &StratComplex2, action: &CellularAction) -> String {
    let deck = action.deck();
    let map_of = |images: Vec<usize>, names: Vec<&str>| -> BTreeMap<String, String> {
        images
            .iter()
            .enumerate()
            .filter(|(i, &to)| *i != to)
            .map(|(i, &to)| (names[i].to_string(), names[to].to_string()))
            .collect()
    };
    let mut vertex_maps = BTreeMap::new();
    let mut edge_maps = BTreeMap::new();
    let mut face_maps = BTreeMap::new();
    for g in 0..deck.order() {
        let name = deck.name(g).to_string();
        vertex_maps.insert(
            name.clone(),
            map_of(
                (0..complex.vertices().len()).map(|v| action.vertex(g, v)).collect(),
                complex.vertices().iter().map(|v| v.name.as_str()).collect(),
            ),
        );
        edge_maps.insert(
            name.clone(),
            map_of(
                (0..complex.edges().len()).map(|e| action.edge(g, e)).collect(),
                complex.edges().iter().map(|e| e.name.as_str()).collect(),
            ),
        );
        face_maps.insert(
            name,
            map_of(
                (0..complex.faces().len()).map(|f| action.face(g, f)).collect(),
                complex.faces().iter().map(|f| f.name.as_str()).collect(),
            ),
        );
    }
    let doc = ActionDoc { deck: group_to_doc(deck), vertex_maps, edge_maps, face_maps };
    serde_json::to_string_pretty(&doc).expect("action serializes")
}

// ---------------------------------------------------------------------------
// cospans and functors

#[derive(Serialize, Deserialize)]
pub struct FunctorDoc {
    /// source object -> target object
    pub objects: BTreeMap<String, String>,
    /// source generator -> signed word in target generators
    pub generators: BTreeMap<String, Vec<String>>,
}

#[derive(Serialize, Deserialize)]
pub struct CospanDoc {
    pub left: GroupoidDoc,
    pub middle: GroupoidDoc,
    pub right: GroupoidDoc,
    pub into_left: FunctorDoc,
    pub into_right: FunctorDoc,
}

fn functor_from_doc(
    doc: &FunctorDoc,
    source: &PresentedGroupoid,
    target: &PresentedGroupoid,
) -> Result<GenFunctor> {
    let objects = source
        .objects()
        .iter()
        .map(|o| {
            let image = doc
                .objects
                .get(o)
                .ok_or_else(|| Error::Validation(format!("functor misses object {o}")))?;
            target
                .object_index(image)
                .ok_or_else(|| Error::Validation(format!("unknown target object {image}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let gen_images = source
        .generators()
        .iter()
        .map(|gen| {
            let word = doc
                .generators
                .get(&gen.name)
                .ok_or_else(|| Error::Validation(format!("functor misses generator {}", gen.name)))?;
            word.iter()
                .map(|s| {
                    let (name, sign) = signed_name(s);
                    let ix = target.generator_index(&name).ok_or_else(|| {
                        Error::Validation(format!("unknown target generator {name}"))
                    })?;
                    Ok(Letter { gen: ix, sign })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    GenFunctor::new(source, target, objects, gen_images)
}

pub fn parse_cospan(text: &str) -> Result<Cospan> {
    let doc: CospanDoc = serde_json::from_str(text).map_err(|e| parse_err("cospan", e))?;
    let left = groupoid_from_doc(&doc.left)?;
    let middle = groupoid_from_doc(&doc.middle)?;
    let right = groupoid_from_doc(&doc.right)?;
    let into_left = functor_from_doc(&doc.into_left, &middle, &left)?;
    let into_right = functor_from_doc(&doc.into_right, &middle, &right)?;
    Ok(Cospan { left, middle, right, into_left, into_right })
}

// ---------------------------------------------------------------------------
// enumeration targets

/// Targets are either a one-object group groupoid or a codiscrete groupoid
/// over a group.
#[derive(Serialize, Deserialize)]
pub enum TargetDoc {
    #[serde(rename = "one_object_group")]
    OneObjectGroup(GroupDoc),
    #[serde(rename = "codiscrete_over_group")]
    CodiscreteOverGroup { objects: usize, group: GroupDoc },
}

pub fn parse_target(text: &str) -> Result<FiniteGroupoid> {
    let doc: TargetDoc = serde_json::from_str(text).map_err(|e| parse_err("target", e))?;
    match doc {
        TargetDoc::OneObjectGroup(g) => {
            let g = LabelGroup::from_table(g.elements, g.table)?;
            Ok(FiniteGroupoid::from_group(&g))
        }
        TargetDoc::CodiscreteOverGroup { objects, group } => {
            let g = LabelGroup::from_table(group.elements, group.table)?;
            FiniteGroupoid::codiscrete_over_group(objects, &g)
        }
    }
}

// ---------------------------------------------------------------------------
// curve specs

#[derive(Serialize, Deserialize)]
pub struct CurveSpecDoc {
    pub interior: GroupoidDoc,
    pub punctures: Vec<PunctureDoc>,
}

#[derive(Serialize, Deserialize)]
pub struct PunctureDoc {
    pub pole_order: usize,
    pub level: usize,
    pub group: GroupDoc,
    /// transition element names, one per sector overlap
    pub transitions: Vec<String>,
    /// signed word in interior generators
    pub peripheral: Vec<String>,
}

pub fn parse_curve_spec(text: &str) -> Result<CurveSpec> {
    let doc: CurveSpecDoc = serde_json::from_str(text).map_err(|e| parse_err("curve spec", e))?;
    let interior = groupoid_from_doc(&doc.interior)?;
    let mut punctures = Vec::with_capacity(doc.punctures.len());
    let mut peripherals = Vec::with_capacity(doc.punctures.len());
    for p in &doc.punctures {
        let group = LabelGroup::from_table(p.group.elements.clone(), p.group.table.clone())?;
        let transitions = p
            .transitions
            .iter()
            .map(|n| {
                group
                    .element_by_name(n)
                    .ok_or_else(|| Error::Validation(format!("unknown group element {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        punctures.push(PunctureSpec {
            pole_order: p.pole_order,
            level: p.level,
            group,
            transitions,
        });
        let letters = p
            .peripheral
            .iter()
            .map(|s| {
                let (name, sign) = signed_name(s);
                let gen = interior
                    .generator_index(&name)
                    .ok_or_else(|| Error::Validation(format!("unknown interior generator {name}")))?;
                Ok(Letter { gen, sign })
            })
            .collect::<Result<Vec<_>>>()?;
        let w = if letters.is_empty() { Word::identity(0) } else { interior.word(&letters)? };
        peripherals.push(w);
    }
    Ok(CurveSpec { interior, punctures, peripherals })
}
