//! Exact linear algebra over cyclotomic fields: sparse echelon elimination
//! with recorded dependence coefficients, and dense fraction-free
//! (Bareiss-style) rank and determinant.

use crate::cyclo::CycloNumber;
use std::collections::HashMap;

/// Sparse vector: (key, coefficient) pairs sorted by key, no zero entries.
pub type SparseVec<K> = Vec<(K, CycloNumber)>;

/// v := v + c * w, merge-style. Both inputs sorted; output sorted.
pub fn axpy<K: Ord + Clone>(v: &SparseVec<K>, c: &CycloNumber, w: &SparseVec<K>) -> SparseVec<K> {
    if c.is_zero() {
        return v.clone();
    }
    let mut out = Vec::with_capacity(v.len() + w.len());
    let mut i = 0;
    let mut j = 0;
    while i < v.len() || j < w.len() {
        let take_v = j >= w.len() || (i < v.len() && v[i].0 <= w[j].0);
        let take_w = i >= v.len() || (j < w.len() && w[j].0 <= v[i].0);
        if take_v && take_w {
            let x = v[i].1.add(&c.mul(&w[j].1));
            if !x.is_zero() {
                out.push((v[i].0.clone(), x));
            }
            i += 1;
            j += 1;
        } else if take_v {
            out.push(v[i].clone());
            i += 1;
        } else {
            out.push((w[j].0.clone(), c.mul(&w[j].1)));
            j += 1;
        }
    }
    out
}

pub fn scale<K: Clone>(v: &SparseVec<K>, c: &CycloNumber) -> SparseVec<K> {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(k, x)| (k.clone(), c.mul(x))).collect()
}

/// Collect unsorted (key, coeff) terms into a sorted, zero-free sparse vector.
pub fn collect_terms<K: Ord + Clone>(mut terms: Vec<(K, CycloNumber)>) -> SparseVec<K> {
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out: SparseVec<K> = Vec::with_capacity(terms.len());
    for (k, c) in terms {
        match out.last_mut() {
            Some((lk, lc)) if *lk == k => {
                *lc = lc.add(&c);
            }
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// Outcome of offering a vector to the eliminator.
pub enum Offer {
    /// The vector was independent; it became pivot number `pivot`.
    Added { pivot: usize },
    /// The vector was dependent: it equals the recorded combination of earlier
    /// pivots (coefficients are over the *original* offered pivot vectors).
    Dependent { combination: Vec<(usize, CycloNumber)> },
}

/// Incremental sparse Gaussian eliminator. Pivots are kept normalized with
/// leading coefficient 1 and distinct leading keys, so reduction walks the
/// leading keys only.
pub struct Eliminator<K: Ord + Clone + std::hash::Hash> {
    pivots: Vec<SparseVec<K>>,
    lead_scale: Vec<CycloNumber>,
    by_lead: HashMap<K, usize>,
}

impl<K: Ord + Clone + std::hash::Hash> Default for Eliminator<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone + std::hash::Hash> Eliminator<K> {
    pub fn new() -> Self {
        Eliminator { pivots: Vec::new(), lead_scale: Vec::new(), by_lead: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce v against the pivots. Returns the residual and the coefficients
    /// used per pivot (over the normalized pivot vectors).
    fn reduce(&self, mut v: SparseVec<K>) -> (SparseVec<K>, Vec<(usize, CycloNumber)>) {
        let mut used: Vec<(usize, CycloNumber)> = Vec::new();
        loop {
            let Some((lead, coeff)) = v.first().cloned() else {
                return (v, used);
            };
            let Some(&p) = self.by_lead.get(&lead) else {
                return (v, used);
            };
            let c = coeff.neg();
            v = axpy(&v, &c, &self.pivots[p]);
            used.push((p, coeff));
        }
    }

    /// Offer a vector; if independent it becomes a pivot. Dependence
    /// coefficients are normalized to be over the original offered vectors.
    pub fn offer(&mut self, v: SparseVec<K>) -> Offer {
        let (residual, used) = self.reduce(v);
        if residual.is_empty() {
            let combination = used
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| {
                    let unscaled = c.mul(&self.lead_scale[p].inv().expect("pivot leads are nonzero"));
                    (p, unscaled)
                })
                .collect();
            return Offer::Dependent { combination };
        }
        let lead_coeff = residual[0].1.clone();
        let inv = lead_coeff.inv().expect("leading coefficient is nonzero");
        let normalized = scale(&residual, &inv);
        let idx = self.pivots.len();
        self.by_lead.insert(normalized[0].0.clone(), idx);
        self.pivots.push(normalized);
        self.lead_scale.push(lead_coeff);
        Offer::Added { pivot: idx }
    }

    /// Offer without recording coefficients (rank-only use).
    pub fn offer_rank_only(&mut self, v: SparseVec<K>) -> bool {
        matches!(self.offer(v), Offer::Added { .. })
    }
}

/// Dense matrix over the cyclotomic field, row major.
#[derive(Debug, Clone)]
pub struct DenseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<CycloNumber>,
}

impl DenseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![CycloNumber::zero(); rows * cols] }
    }

    pub fn at(&self, r: usize, c: usize) -> &CycloNumber {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycloNumber) {
        self.data[r * self.cols + c] = v;
    }

    /// Rank by fraction-free (Bareiss) elimination. Row contents are first
    /// scaled to clear denominators, which preserves rank; thereafter all
    /// divisions are exact in the subring generated by the entries.
    pub fn rank_fraction_free(&self) -> usize {
        let mut m = self.clone();
        for r in 0..m.rows {
            let mut lcm = num_bigint::BigInt::from(1);
            for c in 0..m.cols {
                for q in m.at(r, c).coeffs() {
                    lcm = num_integer::Integer::lcm(&lcm, q.denom());
                }
            }
            if !num_traits::One::is_one(&lcm) {
                let f = CycloNumber::from_rational(num_rational::BigRational::from_integer(lcm));
                for c in 0..m.cols {
                    let v = m.at(r, c).mul(&f);
                    m.set(r, c, v);
                }
            }
        }
        let mut rank = 0;
        let mut prev = CycloNumber::one();
        let mut row = 0;
        for col in 0..m.cols {
            let Some(p) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(row * m.cols + c, p * m.cols + c);
                }
            }
            let pivot = m.at(row, col).clone();
            let prev_inv = prev.inv().expect("previous pivot nonzero");
            for r in row + 1..m.rows {
                let factor = m.at(r, col).clone();
                for c in col..m.cols {
                    // a'_{rc} = (pivot*a_{rc} - factor*a_{row,c}) / prev
                    let v = pivot.mul(m.at(r, c)).sub(&factor.mul(m.at(row, c))).mul(&prev_inv);
                    m.set(r, c, v);
                }
            }
            prev = pivot;
            row += 1;
            rank += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    /// Exact determinant (square matrices), via fraction-free elimination with
    /// rational bookkeeping for the row scalings.
    pub fn determinant(&self) -> CycloNumber {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return CycloNumber::one();
        }
        let mut m = self.clone();
        let mut det_scale = CycloNumber::one();
        let mut sign = false;
        let mut prev = CycloNumber::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return CycloNumber::zero();
            };
            if p != col {
                sign = !sign;
                for c in 0..n {
                    m.data.swap(col * n + c, p * n + c);
                }
            }
            let pivot = m.at(col, col).clone();
            let prev_inv = prev.inv().expect("previous pivot nonzero");
            for r in col + 1..n {
                let factor = m.at(r, col).clone();
                for c in col..n {
                    let v = pivot.mul(m.at(r, c)).sub(&factor.mul(m.at(col, c))).mul(&prev_inv);
                    m.set(r, c, v);
                }
            }
            prev = pivot;
            let _ = &mut det_scale;
        }
        // In Bareiss form the last pivot is the determinant up to sign.
        let d = m.at(n - 1, n - 1).clone();
        if sign {
            d.neg()
        } else {
            d
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CycloNumber as C;

    fn ci(i: i64) -> C {
        C::from_integer(i)
    }

    #[test]
    fn axpy_merges_and_drops_zeros() {
        let v: SparseVec<u32> = vec![(0, ci(1)), (2, ci(3))];
        let w: SparseVec<u32> = vec![(0, ci(1)), (1, ci(5))];
        let r = axpy(&v, &ci(-1), &w);
        assert_eq!(r, vec![(1, ci(-5)), (2, ci(3))]);
    }

    #[test]
    fn eliminator_rank_and_dependence() {
        let mut e: Eliminator<u32> = Eliminator::new();
        assert!(matches!(e.offer(vec![(0, ci(2)), (1, ci(4))]), Offer::Added { pivot: 0 }));
        assert!(matches!(e.offer(vec![(1, ci(1))]), Offer::Added { pivot: 1 }));
        // (0,1) coordinates: [2,4] and [0,1]. Vector [4, 9] = 2*v0 + 1*v1.
        match e.offer(vec![(0, ci(4)), (1, ci(9))]) {
            Offer::Dependent { combination } => {
                let mut got = combination;
                got.sort_by_key(|(p, _)| *p);
                assert_eq!(got, vec![(0, ci(2)), (1, ci(1))]);
            }
            _ => panic!("expected dependence"),
        }
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn dense_rank_and_det() {
        let mut m = DenseMatrix::zero(3, 3);
        let vals = [[1, 2, 3], [4, 5, 6], [7, 8, 9]];
        for r in 0..3 {
            for c in 0..3 {
                m.set(r, c, ci(vals[r][c]));
            }
        }
        assert_eq!(m.rank_fraction_free(), 2);
        assert!(m.determinant().is_zero());

        let mut id = DenseMatrix::zero(3, 3);
        for r in 0..3 {
            id.set(r, r, ci(1));
        }
        assert_eq!(id.rank_fraction_free(), 3);
        assert!(id.determinant().is_one());

        let mut m2 = DenseMatrix::zero(2, 2);
        m2.set(0, 0, C::root_of_unity(3, 1));
        m2.set(0, 1, ci(1));
        m2.set(1, 0, ci(1));
        m2.set(1, 1, C::root_of_unity(3, 2));
        // det = z3*z3^2 - 1 = 1 - 1 = 0
        assert!(m2.determinant().is_zero());
        assert_eq!(m2.rank_fraction_free(), 1);
    }
}
