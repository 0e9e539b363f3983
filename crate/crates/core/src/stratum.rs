//! Stratum posets and the assignment of label groups to strata.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::group::{GroupHom, LabelGroup};

/// A finite poset of stratum ids under specialization. `leq(a, b)` means the
/// group on `a` restricts into the group on `b`: cells labeled `a` may bound
/// cells labeled `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumPoset {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl StratumPoset {
    /// Builds the reflexive-transitive closure of the given pairs and checks
    /// antisymmetry.
    pub fn new(names: Vec<String>, pairs: &[(usize, usize)]) -> Result<StratumPoset> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Argument("poset needs at least one stratum".into()));
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n {
            return Err(Error::Validation("duplicate stratum names".into()));
        }
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Validation("poset pair out of range".into()));
            }
            leq[a][b] = true;
        }
        // transitive closure
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::Validation(format!(
                        "poset is not antisymmetric: {} and {}",
                        names[i], names[j]
                    )));
                }
            }
        }
        Ok(StratumPoset { names, leq })
    }

    /// The one-stratum poset.
    pub fn single(name: impl Into<String>) -> StratumPoset {
        StratumPoset::new(vec![name.into()], &[]).expect("single stratum")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Covering pairs (a, b) with a < b, for serialization.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.leq[a][b] {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Label groups on strata plus injective restriction homomorphisms along
/// specialization, with functoriality verified.
#[derive(Clone, Debug)]
pub struct StratumGroups {
    groups: Vec<LabelGroup>,
    res: BTreeMap<(usize, usize), GroupHom>,
    uniform: bool,
}

impl StratumGroups {
    /// The same group on every stratum with identity restrictions.
    pub fn uniform(poset: &StratumPoset, g: LabelGroup) -> StratumGroups {
        StratumGroups {
            groups: vec![g; poset.len()],
            res: BTreeMap::new(),
            uniform: true,
        }
    }

    /// Explicit groups and restriction maps. A map is required for every
    /// comparable pair of distinct strata; identity strata use identity maps.
    pub fn new(
        poset: &StratumPoset,
        groups: Vec<LabelGroup>,
        res_maps: BTreeMap<(usize, usize), Vec<usize>>,
    ) -> Result<StratumGroups> {
        if groups.len() != poset.len() {
            return Err(Error::Validation("one group per stratum required".into()));
        }
        let mut res = BTreeMap::new();
        for a in 0..poset.len() {
            for b in 0..poset.len() {
                if a == b || !poset.leq(a, b) {
                    continue;
                }
                let raw = res_maps.get(&(a, b)).ok_or_else(|| {
                    Error::Validation(format!("missing restriction map for pair ({a}, {b})"))
                })?;
                let hom = GroupHom::verified(&groups[a], &groups[b], raw.clone())?;
                if !hom.is_injective() {
                    return Err(Error::Validation(format!(
                        "restriction map ({a}, {b}) is not injective"
                    )));
                }
                res.insert((a, b), hom);
            }
        }
        // functoriality of composites
        for a in 0..poset.len() {
            for b in 0..poset.len() {
                for c in 0..poset.len() {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    if poset.leq(a, b) && poset.leq(b, c) {
                        let ab = &res[&(a, b)];
                        let bc = &res[&(b, c)];
                        let ac = &res[&(a, c)];
                        if bc.compose(ab) != *ac {
                            return Err(Error::Validation(format!(
                                "restriction maps are not functorial on {a} <= {b} <= {c}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(StratumGroups { groups, res, uniform: false })
    }

    pub fn group(&self, stratum: usize) -> &LabelGroup {
        &self.groups[stratum]
    }

    /// All strata carry literally the same group with identity restrictions.
    pub fn is_uniform(&self) -> bool {
        self.uniform || (self.res.is_empty() && self.groups.windows(2).all(|w| w[0] == w[1]))
    }

    /// Restriction of an element along `a` ⪯ `b`.
    pub fn res_apply(&self, a: usize, b: usize, x: usize) -> usize {
        if a == b || self.uniform {
            x
        } else {
            self.res[&(a, b)].apply(x)
        }
    }

    /// Preimage along the (injective) restriction, if it exists.
    pub fn res_preimage(&self, a: usize, b: usize, y: usize) -> Option<usize> {
        if a == b || self.uniform {
            Some(y)
        } else {
            self.res[&(a, b)].preimage(y)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_antisymmetry() {
        let p = StratumPoset::new(
            vec!["a".into(), "b".into(), "c".into()],
            &[(0, 1), (1, 2)],
        )
        .unwrap();
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));

        let cyclic = StratumPoset::new(vec!["a".into(), "b".into()], &[(0, 1), (1, 0)]);
        assert!(cyclic.is_err());
    }

    #[test]
    fn restriction_maps_validated() {
        let p = StratumPoset::new(vec!["v".into(), "e".into()], &[(0, 1)]).unwrap();
        let z2 = LabelGroup::cyclic(2).unwrap();
        let z4 = LabelGroup::cyclic(4).unwrap();
        // 1 -> 2 embeds Z/2 into Z/4
        let mut maps = BTreeMap::new();
        maps.insert((0usize, 1usize), vec![0usize, 2]);
        let sg = StratumGroups::new(&p, vec![z2.clone(), z4.clone()], maps).unwrap();
        assert_eq!(sg.res_apply(0, 1, 1), 2);
        assert_eq!(sg.res_preimage(0, 1, 2), Some(1));
        assert_eq!(sg.res_preimage(0, 1, 1), None);

        // non-injective map rejected
        let mut bad = BTreeMap::new();
        bad.insert((0usize, 1usize), vec![0usize, 0]);
        assert!(StratumGroups::new(&p, vec![z2, z4], bad).is_err());
    }
}
