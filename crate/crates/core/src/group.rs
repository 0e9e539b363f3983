//! Finite label groups with explicit multiplication tables.
//!
//! Convention: `mul(a, b)` is the product `a * b`, applied right-to-left when
//! elements act (b first). This matches arrow composition elsewhere in the
//! crate: `compose(second, first)`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A finite group given by its multiplication table.
///
/// Axioms are verified exhaustively at construction; construction rejects
/// tables with more than [`LabelGroup::MAX_ORDER`] elements.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LabelGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl LabelGroup {
    pub const MAX_ORDER: usize = 10_000;

    /// Builds and audits a group from element names and a multiplication table.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<LabelGroup> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Argument("a group needs at least one element".into()));
        }
        if n > Self::MAX_ORDER {
            return Err(Error::SizeExceeded { required: n as u128, cap: Self::MAX_ORDER as u64 });
        }
        {
            let mut sorted = names.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != n {
                return Err(Error::Validation("duplicate element names".into()));
            }
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::Validation("multiplication table is not n x n".into()));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::Validation("table entry out of range".into()));
        }

        // Identity: the unique e with e*x = x*e = x for all x.
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::Validation("no identity element".into()))?;

        // Inverses.
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity) {
                Some(b) => inverse[a] = b,
                None => {
                    return Err(Error::Validation(format!(
                        "element {} has no two-sided inverse",
                        names[a]
                    )))
                }
            }
        }

        let g = LabelGroup { names, table, identity, inverse };
        g.verify_associativity()?;
        Ok(g)
    }

    /// Associativity audit. Fully cubic for small orders; for larger tables we
    /// use Light's test against a generating set, which is equivalent given
    /// closure.
    fn verify_associativity(&self) -> Result<()> {
        let n = self.order();
        if n <= 300 {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.table[a][b];
                    for c in 0..n {
                        if self.table[ab][c] != self.table[a][self.table[b][c]] {
                            return Err(Error::Validation(format!(
                                "associativity fails at ({}, {}, {})",
                                self.names[a], self.names[b], self.names[c]
                            )));
                        }
                    }
                }
            }
            return Ok(());
        }
        let gens = self.greedy_generating_set();
        for &a in &gens {
            for b in 0..n {
                let ab = self.table[a][b];
                for c in 0..n {
                    if self.table[ab][c] != self.table[a][self.table[b][c]] {
                        return Err(Error::Validation(format!(
                            "associativity fails at ({}, {}, {})",
                            self.names[a], self.names[b], self.names[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn greedy_generating_set(&self) -> Vec<usize> {
        let n = self.order();
        let mut gens = Vec::new();
        let mut reached = vec![false; n];
        reached[self.identity] = true;
        let mut count = 1;
        while count < n {
            let next = (0..n).find(|&x| !reached[x]).unwrap();
            gens.push(next);
            // close under multiplication by the new generator
            let mut frontier: Vec<usize> =
                (0..n).filter(|&x| reached[x]).collect();
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    for y in [self.table[g][x], self.table[x][g]] {
                        if !reached[y] {
                            reached[y] = true;
                            count += 1;
                            frontier.push(y);
                        }
                    }
                }
            }
        }
        gens
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Conjugacy classes, listed by their least representative.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..n)
                .map(|h| self.mul(self.mul(h, a), self.inv(h)))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                seen[x] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// The additive cyclic group Z/m with elements named "0".."m-1".
    pub fn cyclic(m: usize) -> Result<LabelGroup> {
        if m == 0 {
            return Err(Error::Argument("cyclic group needs m >= 1".into()));
        }
        let names = (0..m).map(|i| i.to_string()).collect();
        let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        LabelGroup::from_table(names, table)
    }

    /// The trivial group.
    pub fn trivial() -> LabelGroup {
        LabelGroup::cyclic(1).expect("trivial group")
    }

    /// The symmetric group on `n` points (n <= 5), elements named by one-line
    /// notation; composition (s*t)(i) = s(t(i)).
    pub fn symmetric(n: usize) -> Result<LabelGroup> {
        if n == 0 || n > 5 {
            return Err(Error::Argument("symmetric group supported for 1 <= n <= 5".into()));
        }
        let perms = permutations(n);
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let names = perms
            .iter()
            .map(|p| p.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| {
                        let st: Vec<usize> = (0..n).map(|i| s[t[i]]).collect();
                        index_of(&st)
                    })
                    .collect()
            })
            .collect();
        LabelGroup::from_table(names, table)
    }

    /// GL_r over the prime field F_p, for r <= 2 and p in {2, 3}: the
    /// one-object target realizing rank-r torsorial representations at desk
    /// scale. Elements are named by their row-major entries.
    pub fn general_linear(r: usize, p: u32) -> Result<LabelGroup> {
        if !(1..=2).contains(&r) {
            return Err(Error::Argument("general_linear supports rank 1 and 2".into()));
        }
        if !matches!(p, 2 | 3) {
            return Err(Error::Argument("general_linear supports p = 2 or 3".into()));
        }
        let pu = p as usize;
        let cells = r * r;
        let det = |m: &[usize]| -> usize {
            match r {
                1 => m[0] % pu,
                _ => (m[0] * m[3] + pu * pu - (m[1] * m[2]) % (pu * pu)) % pu,
            }
        };
        let mut mats: Vec<Vec<usize>> = Vec::new();
        let mut m = vec![0usize; cells];
        loop {
            if det(&m) != 0 {
                mats.push(m.clone());
            }
            let mut i = cells;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                m[i] += 1;
                if m[i] < pu {
                    break;
                }
                m[i] = 0;
            }
            if m.iter().all(|&x| x == 0) {
                break;
            }
        }
        let names: Vec<String> = mats
            .iter()
            .map(|m| format!("m{}", m.iter().map(|x| x.to_string()).collect::<String>()))
            .collect();
        let index_of = |m: &[usize]| mats.iter().position(|x| x == m).unwrap();
        let table = mats
            .iter()
            .map(|a| {
                mats.iter()
                    .map(|b| {
                        let mut c = vec![0usize; cells];
                        for i in 0..r {
                            for j in 0..r {
                                let mut acc = 0;
                                for l in 0..r {
                                    acc += a[i * r + l] * b[l * r + j];
                                }
                                c[i * r + j] = acc % pu;
                            }
                        }
                        index_of(&c)
                    })
                    .collect()
            })
            .collect();
        LabelGroup::from_table(names, table)
    }

    /// Direct product, elements named "a|b".
    pub fn direct_product(a: &LabelGroup, b: &LabelGroup) -> Result<LabelGroup> {
        let na = a.order();
        let nb = b.order();
        let mut names = Vec::with_capacity(na * nb);
        for i in 0..na {
            for j in 0..nb {
                names.push(format!("{}|{}", a.name(i), b.name(j)));
            }
        }
        let idx = |i: usize, j: usize| i * nb + j;
        let mut table = vec![vec![0; na * nb]; na * nb];
        for i in 0..na {
            for j in 0..nb {
                for k in 0..na {
                    for l in 0..nb {
                        table[idx(i, j)][idx(k, l)] = idx(a.mul(i, k), b.mul(j, l));
                    }
                }
            }
        }
        LabelGroup::from_table(names, table)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// A verified map of groups, stored as an element-index table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupHom {
    map: Vec<usize>,
}

impl GroupHom {
    /// Checks the homomorphism property exhaustively; on failure reports a
    /// witness pair.
    pub fn verified(dom: &LabelGroup, cod: &LabelGroup, map: Vec<usize>) -> Result<GroupHom> {
        if map.len() != dom.order() {
            return Err(Error::Validation("homomorphism map has wrong length".into()));
        }
        if map.iter().any(|&x| x >= cod.order()) {
            return Err(Error::Validation("homomorphism image out of range".into()));
        }
        for a in 0..dom.order() {
            for b in 0..dom.order() {
                if map[dom.mul(a, b)] != cod.mul(map[a], map[b]) {
                    return Err(Error::NotHomomorphism {
                        reason: "map does not respect multiplication".into(),
                        witness_a: dom.name(a).to_string(),
                        witness_b: dom.name(b).to_string(),
                    });
                }
            }
        }
        Ok(GroupHom { map })
    }

    /// A verified automorphism built from a permutation of the elements.
    pub fn automorphism(g: &LabelGroup, map: Vec<usize>) -> Result<GroupHom> {
        let hom = GroupHom::verified(g, g, map)?;
        if !hom.is_injective() {
            return Err(Error::Validation("automorphism map is not bijective".into()));
        }
        Ok(hom)
    }

    pub fn identity(g: &LabelGroup) -> GroupHom {
        GroupHom { map: (0..g.order()).collect() }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.map.len().max(self.map.iter().copied().max().map_or(0, |m| m + 1))];
        for &x in &self.map {
            if seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    /// Preimage of a codomain element, if any (unique when injective).
    pub fn preimage(&self, y: usize) -> Option<usize> {
        self.map.iter().position(|&x| x == y)
    }

    pub fn compose(&self, inner: &GroupHom) -> GroupHom {
        GroupHom { map: inner.map.iter().map(|&x| self.map[x]).collect() }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}
