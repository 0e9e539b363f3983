//! Block-unipotent matrix groups over prime fields, built from a Stokes
//! preorder on a finite index set.
//!
//! The group on a stratum is the kernel of the map from filtration-preserving
//! automorphisms to graded automorphisms: matrices with identity diagonal
//! blocks and free entries in block (q', q) exactly when q' is strictly below
//! q in the preorder.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::group::LabelGroup;

/// A finite index set with a preorder per stratum and a dimension per index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreorderedIndex {
    labels: Vec<String>,
    dims: Vec<usize>,
    leq: Vec<Vec<bool>>,
}

impl PreorderedIndex {
    /// Reflexive-transitive closure of the given pairs. Preorders may have
    /// equivalent distinct indices; only the asymmetric part contributes
    /// matrix entries.
    pub fn new(labels: Vec<String>, dims: Vec<usize>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Argument("index set must be nonempty".into()));
        }
        if dims.len() != n || dims.contains(&0) {
            return Err(Error::Validation("each index needs a dimension >= 1".into()));
        }
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Validation("preorder pair out of range".into()));
            }
            leq[a][b] = true;
        }
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
        Ok(PreorderedIndex { labels, dims, leq })
    }

    /// Total order q_0 < q_1 < ... with the given dimensions.
    pub fn chain(dims: &[usize]) -> Result<Self> {
        let labels = (0..dims.len()).map(|i| format!("q{i}")).collect();
        let pairs: Vec<(usize, usize)> =
            (0..dims.len().saturating_sub(1)).map(|i| (i, i + 1)).collect();
        PreorderedIndex::new(labels, dims.to_vec(), &pairs)
    }

    /// No relations between distinct indices.
    pub fn antichain(dims: &[usize]) -> Result<Self> {
        let labels = (0..dims.len()).map(|i| format!("q{i}")).collect();
        PreorderedIndex::new(labels, dims.to_vec(), &[])
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Strictly below: comparable one way only.
    pub fn strict(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b] && !self.leq[b][a]
    }

    /// Number of free matrix entries: sum of dim products over strict pairs.
    pub fn free_entry_count(&self) -> usize {
        let n = self.len();
        let mut total = 0;
        for target in 0..n {
            for source in 0..n {
                if self.strict(target, source) {
                    total += self.dims[target] * self.dims[source];
                }
            }
        }
        total
    }
}

/// An element of the unipotent group together with its matrix realization.
#[derive(Clone, Debug)]
pub struct UnipotentElement {
    /// row-major d x d entries over F_p
    pub matrix: Vec<u8>,
}

/// The built group plus its matrix realization for audit.
#[derive(Clone, Debug)]
pub struct UnipotentGroup {
    pub group: LabelGroup,
    pub elements: Vec<UnipotentElement>,
    pub dim: usize,
    pub prime: u32,
}

/// Builds the Stokes group of a preordered index set over F_p.
///
/// Entries in block (q', q) are free exactly when q' is strictly below q;
/// multiplication is matrix multiplication mod p.
pub fn build_unipotent_stokes_group(idx: &PreorderedIndex, p: u32) -> Result<UnipotentGroup> {
    if !matches!(p, 2 | 3 | 5) {
        return Err(Error::Argument(format!("p must be one of 2, 3, 5; got {p}")));
    }
    let d = idx.total_dim();
    if d > 6 {
        return Err(Error::Argument(format!("total dimension {d} exceeds the supported 6")));
    }

    let k = idx.free_entry_count();
    let order = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if order > LabelGroup::MAX_ORDER as u128 {
        return Err(Error::SizeExceeded { required: order, cap: LabelGroup::MAX_ORDER as u64 });
    }
    let order = order as usize;

    // block offsets: rows/cols of index q occupy [offset[q], offset[q]+dim[q])
    let mut offsets = Vec::with_capacity(idx.len());
    let mut acc = 0;
    for &dim in idx.dims() {
        offsets.push(acc);
        acc += dim;
    }

    // row-major positions of the free entries; (row block, col block) strict
    let mut free_positions: Vec<(usize, usize)> = Vec::with_capacity(k);
    for qt in 0..idx.len() {
        for qs in 0..idx.len() {
            if !idx.strict(qt, qs) {
                continue;
            }
            for r in 0..idx.dims()[qt] {
                for c in 0..idx.dims()[qs] {
                    free_positions.push((offsets[qt] + r, offsets[qs] + c));
                }
            }
        }
    }
    free_positions.sort_unstable();

    let make_matrix = |digits: &[u8]| -> Vec<u8> {
        let mut m = vec![0u8; d * d];
        for i in 0..d {
            m[i * d + i] = 1;
        }
        for (&(r, c), &v) in free_positions.iter().zip(digits) {
            m[r * d + c] = v;
        }
        m
    };

    // enumerate digit vectors in odometer order; identity first
    let mut elements = Vec::with_capacity(order);
    let mut names = Vec::with_capacity(order);
    let mut index_of: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    let mut digits = vec![0u8; k];
    loop {
        let m = make_matrix(&digits);
        let name = if k == 0 {
            "u".to_string()
        } else {
            format!("u{}", digits.iter().map(|d| d.to_string()).collect::<String>())
        };
        index_of.insert(m.clone(), elements.len());
        elements.push(UnipotentElement { matrix: m });
        names.push(name);
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            digits[i] += 1;
            if (digits[i] as u32) < p {
                break;
            }
            digits[i] = 0;
        }
        if digits.iter().all(|&x| x == 0) {
            break;
        }
    }
    debug_assert_eq!(elements.len(), order);

    let mul_mat = |a: &[u8], b: &[u8]| -> Vec<u8> {
        let mut out = vec![0u8; d * d];
        for i in 0..d {
            for l in 0..d {
                let ail = a[i * d + l] as u32;
                if ail == 0 {
                    continue;
                }
                for j in 0..d {
                    let cur = out[i * d + j] as u32 + ail * b[l * d + j] as u32;
                    out[i * d + j] = (cur % p) as u8;
                }
            }
        }
        out
    };

    let mut table = vec![vec![0usize; order]; order];
    for a in 0..order {
        for b in 0..order {
            let m = mul_mat(&elements[a].matrix, &elements[b].matrix);
            let r = index_of.get(&m).copied().ok_or_else(|| {
                Error::Validation("product left the block-unipotent pattern".into())
            })?;
            table[a][b] = r;
        }
    }

    let group = LabelGroup::from_table(names, table)?;
    Ok(UnipotentGroup { group, elements, dim: d, prime: p })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_step_chain_over_f2_has_order_two() {
        let idx = PreorderedIndex::chain(&[1, 1]).unwrap();
        let u = build_unipotent_stokes_group(&idx, 2).unwrap();
        assert_eq!(u.group.order(), 2);
        // elements are I and I + E_{01}
        assert_eq!(u.elements[0].matrix, vec![1, 0, 0, 1]);
        assert_eq!(u.elements[1].matrix, vec![1, 1, 0, 1]);
    }

    #[test]
    fn incomparable_indices_give_the_trivial_group() {
        let idx = PreorderedIndex::antichain(&[1, 1]).unwrap();
        let u = build_unipotent_stokes_group(&idx, 3).unwrap();
        assert_eq!(u.group.order(), 1);
    }

    #[test]
    fn three_step_chain_over_f2_is_heisenberg() {
        let idx = PreorderedIndex::chain(&[1, 1, 1]).unwrap();
        let u = build_unipotent_stokes_group(&idx, 2).unwrap();
        assert_eq!(u.group.order(), 8);
        // noncommutative: upper-triangular 3x3 unipotent over F2
        let g = &u.group;
        let noncomm = (0..8).any(|a| (0..8).any(|b| g.mul(a, b) != g.mul(b, a)));
        assert!(noncomm);
    }

    #[test]
    fn order_formula_for_chains() {
        for p in [2u32, 3] {
            for d in 1..=4usize {
                let idx = PreorderedIndex::chain(&vec![1; d]).unwrap();
                let u = build_unipotent_stokes_group(&idx, p).unwrap();
                let expected = (p as usize).pow((d * (d - 1) / 2) as u32);
                assert_eq!(u.group.order(), expected, "chain d={d} p={p}");
            }
        }
    }

    #[test]
    fn weighted_dims_count_entries() {
        // chain q0 < q1 with dims (1, 2): one strict pair, 1*2 entries
        let idx = PreorderedIndex::chain(&[1, 2]).unwrap();
        assert_eq!(idx.free_entry_count(), 2);
        let u = build_unipotent_stokes_group(&idx, 3).unwrap();
        assert_eq!(u.group.order(), 9);
    }

    #[test]
    fn equivalent_distinct_indices_contribute_nothing() {
        // a <= b and b <= a: no asymmetric pair, trivial group
        let idx = PreorderedIndex::new(
            vec!["a".into(), "b".into()],
            vec![1, 1],
            &[(0, 1), (1, 0)],
        )
        .unwrap();
        assert_eq!(idx.free_entry_count(), 0);
        let u = build_unipotent_stokes_group(&idx, 2).unwrap();
        assert_eq!(u.group.order(), 1);
    }

    #[test]
    fn non_prime_and_oversized_inputs_rejected() {
        let idx = PreorderedIndex::chain(&[1, 1]).unwrap();
        assert!(build_unipotent_stokes_group(&idx, 4).is_err());
        let big = PreorderedIndex::chain(&[1; 7]).unwrap();
        assert!(build_unipotent_stokes_group(&big, 2).is_err());
        // order 5^(6*5/2) is far beyond the element cap
        let six = PreorderedIndex::chain(&[1; 6]).unwrap();
        assert!(matches!(
            build_unipotent_stokes_group(&six, 5),
            Err(Error::SizeExceeded { .. })
        ));
    }
}
