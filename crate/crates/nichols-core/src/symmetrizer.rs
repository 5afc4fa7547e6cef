//! The braid group action on tensor powers, the Matsumoto section, and the
//! quantum symmetrizer Q_n.
//!
//! Q_n = sum over S_n of the Matsumoto lifts. Applying it term by term costs
//! n! braiding passes; instead we use the left-coset factorization
//! Q_n = R'_n ∘ (Q_{n-1} ⊗ id), where R'_n is the sum over the n minimal
//! left-coset representatives of S_{n-1} in S_n. Correctness of the
//! factorization is pinned to the brute-force sum in tests for n <= 5.

use crate::braided::{word_grade, BraidedVectorSpace, Grade};
use crate::cyclo::CycloNumber;
use crate::linalg::{collect_terms, DenseMatrix, Eliminator, SparseVec};
use crate::perm::Perm;
use crate::{Budget, Error, Result};
use std::collections::BTreeMap;

/// A basis word of V^{⊗n}: the sequence of basis-letter indices.
pub type Word = Vec<u16>;

/// Sparse element of V^{⊗n}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorVector {
    pub degree: usize,
    /// Sorted by word, no zero coefficients.
    pub terms: SparseVec<Word>,
}

impl TensorVector {
    pub fn zero(degree: usize) -> Self {
        TensorVector { degree, terms: Vec::new() }
    }

    pub fn basis_word(word: Word) -> Self {
        TensorVector { degree: word.len(), terms: vec![(word, CycloNumber::one())] }
    }

    pub fn from_terms(degree: usize, terms: Vec<(Word, CycloNumber)>) -> Self {
        debug_assert!(terms.iter().all(|(w, _)| w.len() == degree));
        TensorVector { degree, terms: collect_terms(terms) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &TensorVector) -> TensorVector {
        debug_assert_eq!(self.degree, other.degree);
        TensorVector {
            degree: self.degree,
            terms: crate::linalg::axpy(&self.terms, &CycloNumber::one(), &other.terms),
        }
    }

    pub fn sub(&self, other: &TensorVector) -> TensorVector {
        debug_assert_eq!(self.degree, other.degree);
        TensorVector {
            degree: self.degree,
            terms: crate::linalg::axpy(&self.terms, &CycloNumber::from_integer(-1), &other.terms),
        }
    }

    pub fn scale(&self, c: &CycloNumber) -> TensorVector {
        TensorVector { degree: self.degree, terms: crate::linalg::scale(&self.terms, c) }
    }

    /// Concatenation product in the tensor algebra.
    pub fn product(&self, other: &TensorVector) -> TensorVector {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                terms.push((w, c1.mul(c2)));
            }
        }
        TensorVector::from_terms(self.degree + other.degree, terms)
    }
}

/// A braid word: signed generator indices (±i, 1 <= i <= strands-1), applied
/// left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            let a = l.unsigned_abs() as usize;
            if l == 0 || a + 1 > strands {
                return Err(Error::Input(format!("braid letter {l} out of range for {strands} strands")));
            }
        }
        Ok(BraidWord { strands, letters })
    }
}

/// The Matsumoto lift of a permutation: one fixed reduced word in staircase
/// form, of length equal to the inversion number.
pub fn matsumoto_lift(w: &Perm) -> BraidWord {
    let n = w.degree();
    let mut v: Vec<u16> = w.0.clone();
    let mut letters = Vec::with_capacity(w.inversions());
    for target in 0..n {
        let j = (target..n).find(|&k| v[k] == target as u16).expect("permutation image");
        for k in (target + 1..=j).rev() {
            v.swap(k - 1, k);
            letters.push(k as i32);
        }
    }
    debug_assert!(v.iter().enumerate().all(|(i, &x)| i as u16 == x));
    BraidWord { strands: n, letters }
}

/// Apply the braid generator ±i (1-based, acting on tensorands i, i+1) to a
/// tensor vector.
pub fn apply_gen(v: &BraidedVectorSpace, i: usize, inverse: bool, t: &TensorVector) -> TensorVector {
    debug_assert!(i >= 1 && i < t.degree.max(1));
    let pos = i - 1;
    if v.is_monomial() {
        let mut terms: Vec<(Word, CycloNumber)> = Vec::with_capacity(t.terms.len());
        for (w, c) in &t.terms {
            let (a, b) = (w[pos] as usize, w[pos + 1] as usize);
            let ((x, y), s) =
                if inverse { v.braid_monomial_inv(a, b) } else { v.braid_monomial(a, b) };
            let mut nw = w.clone();
            nw[pos] = x as u16;
            nw[pos + 1] = y as u16;
            terms.push((nw, c.mul(&s)));
        }
        TensorVector::from_terms(t.degree, terms)
    } else {
        let mut terms: Vec<(Word, CycloNumber)> = Vec::new();
        for (w, c) in &t.terms {
            let (a, b) = (w[pos] as usize, w[pos + 1] as usize);
            let image = if inverse {
                braiding_apply_inv_general(v, a, b)
            } else {
                v.braiding_apply(a, b).expect("indices in range")
            };
            for ((x, y), s) in image {
                let mut nw = w.clone();
                nw[pos] = x as u16;
                nw[pos + 1] = y as u16;
                terms.push((nw, c.mul(&s)));
            }
        }
        TensorVector::from_terms(t.degree, terms)
    }
}

/// Inverse braiding on a basis pair for matrix-cocycle braidings, by solving
/// against the forward images of all pairs in the same block.
fn braiding_apply_inv_general(
    v: &BraidedVectorSpace,
    a: usize,
    b: usize,
) -> Vec<((usize, usize), CycloNumber)> {
    // c is invertible; find the preimage column of e_a ⊗ e_b by Gaussian
    // elimination on the full braiding matrix. Cached per space would be
    // better, but the general path only runs on small fixtures.
    let d = v.dim();
    let m = v.braiding_matrix().expect("valid space");
    // solve m * x = e_{a*d+b}
    let nn = d * d;
    let mut aug = m;
    let target = a * d + b;
    let mut rhs = vec![CycloNumber::zero(); nn];
    rhs[target] = CycloNumber::one();
    // forward elimination with partial pivoting over the field
    let mut perm_rows: Vec<usize> = (0..nn).collect();
    let mut x = vec![CycloNumber::zero(); nn];
    let mut row = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..nn {
        let Some(p) = (row..nn).find(|&r| !aug.at(perm_rows[r], col).is_zero()) else {
            continue;
        };
        perm_rows.swap(row, p);
        let inv = aug.at(perm_rows[row], col).inv().expect("pivot nonzero");
        for r in row + 1..nn {
            let f = aug.at(perm_rows[r], col).mul(&inv);
            if f.is_zero() {
                continue;
            }
            for c in col..nn {
                let val = aug.at(perm_rows[r], c).sub(&f.mul(aug.at(perm_rows[row], c)));
                aug.set(perm_rows[r], c, val);
            }
            let nr = rhs[perm_rows[r]].sub(&f.mul(&rhs[perm_rows[row]]));
            rhs[perm_rows[r]] = nr;
        }
        pivot_cols.push(col);
        row += 1;
        if row == nn {
            break;
        }
    }
    assert_eq!(row, nn, "braiding matrix is invertible");
    for (r, &col) in pivot_cols.iter().enumerate().rev() {
        let mut acc = rhs[perm_rows[r]].clone();
        for c in col + 1..nn {
            if !aug.at(perm_rows[r], c).is_zero() && !x[c].is_zero() {
                acc = acc.sub(&aug.at(perm_rows[r], c).mul(&x[c]));
            }
        }
        x[col] = acc.mul(&aug.at(perm_rows[r], col).inv().expect("pivot"));
    }
    (0..nn)
        .filter(|&k| !x[k].is_zero())
        .map(|k| ((k / d, k % d), x[k].clone()))
        .collect()
}

/// Apply a braid word (letters left to right) to a tensor vector.
pub fn apply_braid_word(v: &BraidedVectorSpace, w: &BraidWord, t: &TensorVector) -> Result<TensorVector> {
    if w.strands != t.degree {
        return Err(Error::Input(format!(
            "braid word on {} strands applied to a degree-{} tensor",
            w.strands, t.degree
        )));
    }
    let mut acc = t.clone();
    for &l in &w.letters {
        acc = apply_gen(v, l.unsigned_abs() as usize, l < 0, &acc);
    }
    Ok(acc)
}

/// Quantum symmetrizer Q_n applied to a degree-n tensor, via the coset
/// factorization: n-1 stages, stage m applying id + ς_{m-1} + ς_{m-1}ς_{m-2}
/// + ... + ς_{m-1}...ς_1 (each ς applied first-to-last as written here from
/// the left factor inward).
pub fn quantum_symmetrizer_apply(v: &BraidedVectorSpace, n: usize, t: &TensorVector) -> Result<TensorVector> {
    if t.degree != n {
        return Err(Error::Input(format!("degree mismatch: tensor degree {} vs n = {n}", t.degree)));
    }
    let mut acc = t.clone();
    for m in 2..=n {
        let mut total = acc.clone();
        let mut cascade = acc;
        for k in (1..m).rev() {
            cascade = apply_gen(v, k, false, &cascade);
            total = total.add(&cascade);
        }
        acc = total;
    }
    Ok(acc)
}

/// Brute-force Q_n as the literal sum over all n! Matsumoto lifts; the oracle
/// for the factorized application.
pub fn brute_force_symmetrizer_apply(
    v: &BraidedVectorSpace,
    n: usize,
    t: &TensorVector,
) -> Result<TensorVector> {
    if t.degree != n {
        return Err(Error::Input("degree mismatch".into()));
    }
    let mut acc = TensorVector::zero(n);
    let mut perm: Vec<u16> = (0..n as u16).collect();
    loop {
        let w = matsumoto_lift(&Perm(perm.clone()));
        acc = acc.add(&apply_braid_word(v, &w, t)?);
        // next permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    Ok(acc)
}

/// t ∈ J^n(V) = ker Q_n?
pub fn ideal_membership(v: &BraidedVectorSpace, t: &TensorVector) -> Result<bool> {
    Ok(quantum_symmetrizer_apply(v, t.degree, t)?.is_zero())
}

/// Braided adjoint ad_c(x)(y) = x·y − mult(c(x ⊗ y)) for x of tensor degree 1.
pub fn adjoint_apply(v: &BraidedVectorSpace, x: &TensorVector, y: &TensorVector) -> Result<TensorVector> {
    if x.degree != 1 {
        return Err(Error::Domain(format!("adjoint needs a degree-1 left argument, got degree {}", x.degree)));
    }
    let lhs = x.product(y);
    if y.degree == 0 {
        // c(x ⊗ 1) = 1 ⊗ x, so ad_c(x)(1) = x - x = 0... but deg-0 y means y
        // is a scalar; ad_c(x)(c) = xc - cx = 0.
        return Ok(TensorVector::zero(1).scale(&CycloNumber::zero()));
    }
    // mult c(x ⊗ y): move the first letter past all of y
    let word = BraidWord::new(y.degree + 1, (1..=y.degree as i32).collect())?;
    let braided = apply_braid_word(v, &word, &lhs)?;
    Ok(lhs.sub(&braided))
}

/// Iterated braided adjoint ad_c(x_i)^power(x_j) as an explicit tensor.
pub fn adjoint_power(v: &BraidedVectorSpace, i: usize, j: usize, power: usize) -> Result<TensorVector> {
    let x = TensorVector::basis_word(vec![i as u16]);
    let mut acc = TensorVector::basis_word(vec![j as u16]);
    for _ in 0..power {
        acc = adjoint_apply(v, &x, &acc)?;
    }
    Ok(acc)
}

/// Enumerate all degree-n words grouped by grade.
pub fn words_by_grade(v: &BraidedVectorSpace, n: usize) -> BTreeMap<Grade, Vec<Word>> {
    let d = v.dim() as u16;
    let mut map: BTreeMap<Grade, Vec<Word>> = BTreeMap::new();
    let mut word: Word = vec![0; n];
    loop {
        map.entry(word_grade(v, &word)).or_default().push(word.clone());
        let mut k = n;
        loop {
            if k == 0 {
                return map;
            }
            k -= 1;
            word[k] += 1;
            if word[k] < d {
                break;
            }
            word[k] = 0;
        }
    }
}

/// Rank of Q_n on V^{⊗n} (= dim B^n(V)), by per-grade dense fraction-free
/// elimination. Memory-bounded by the budget; at scale prefer
/// [`SymmetrizerChain`] or the recursion engine in the `nichols` module.
pub fn symmetrizer_rank(v: &BraidedVectorSpace, n: usize, budget: &Budget) -> Result<usize> {
    if n == 0 {
        return Ok(1);
    }
    let total_words = (v.dim() as u128).checked_pow(n as u32).ok_or_else(|| {
        Error::Budget("dim(V)^n overflows; use the recursion engine (nichols module)".into())
    })?;
    budget.check_entries(total_words.min(u64::MAX as u128) as u64, "symmetrizer_rank word count")?;
    let blocks = words_by_grade(v, n);
    let mut rank = 0;
    for (_, words) in blocks {
        budget.check_time("symmetrizer_rank")?;
        let k = words.len();
        budget.check_entries(
            (k as u64).saturating_mul(k as u64),
            "symmetrizer_rank block (use the recursion engine in the nichols module)",
        )?;
        let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut m = DenseMatrix::zero(k, k);
        for (r, w) in words.iter().enumerate() {
            let image = quantum_symmetrizer_apply(v, n, &TensorVector::basis_word(w.clone()))?;
            for (iw, c) in image.terms {
                let col = *index.get(&iw).expect("grade preserved by the symmetrizer");
                m.set(r, col, c);
            }
        }
        rank += m.rank_fraction_free();
    }
    Ok(rank)
}

/// Degree-by-degree symmetrizer ranks via chained image bases.
///
/// im Q_n = R'_n(im Q_{n-1} ⊗ V), so once words W with {Q_{n-1}(w)} spanning
/// im Q_{n-1} are known, the vectors Q_n(w·x_j) for w ∈ W span im Q_n. Rank
/// is then read off a small elimination instead of dim(V)^n columns. The
/// chain is independent of the Nichols recursion engine; it only uses the
/// symmetrizer.
pub struct SymmetrizerChain<'a> {
    v: &'a BraidedVectorSpace,
    /// ranks[n] = rank Q_n, for all advanced degrees.
    pub ranks: Vec<usize>,
    /// words whose Q_n-images form a basis of im Q_n at the last degree
    pivot_words: Vec<Word>,
}

impl<'a> SymmetrizerChain<'a> {
    pub fn new(v: &'a BraidedVectorSpace) -> Self {
        SymmetrizerChain { v, ranks: vec![1], pivot_words: vec![vec![]] }
    }

    pub fn degree(&self) -> usize {
        self.ranks.len() - 1
    }

    /// Advance one degree and return rank Q_{degree+1}.
    pub fn advance(&mut self, budget: &Budget) -> Result<usize> {
        let n = self.degree() + 1;
        let dim = self.v.dim() as u16;
        let mut eliminator: Eliminator<Word> = Eliminator::new();
        let mut pivots: Vec<Word> = Vec::new();
        let mut entries: u64 = 0;
        for parent in &self.pivot_words {
            budget.check_time("symmetrizer chain")?;
            for letter in 0..dim {
                let mut w = parent.clone();
                w.push(letter);
                let image = quantum_symmetrizer_apply(self.v, n, &TensorVector::basis_word(w.clone()))?;
                entries = entries.saturating_add(image.terms.len() as u64);
                budget.check_entries(entries, "symmetrizer chain")?;
                if eliminator.offer_rank_only(image.terms) {
                    pivots.push(w);
                }
            }
        }
        self.ranks.push(pivots.len());
        self.pivot_words = pivots;
        Ok(*self.ranks.last().unwrap())
    }

    /// Advance until `n_max` (inclusive) and return the rank sequence.
    pub fn ranks_up_to(&mut self, n_max: usize, budget: &Budget) -> Result<Vec<usize>> {
        while self.degree() < n_max {
            self.advance(budget)?;
        }
        Ok(self.ranks[..=n_max].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::{DiagonalBraiding, RackCocycle};
    use crate::racks::conjugacy_class_rack;

    fn zeta(n: u64, k: i64) -> CycloNumber {
        CycloNumber::root_of_unity(n, k)
    }

    fn rank1(q: CycloNumber) -> BraidedVectorSpace {
        BraidedVectorSpace::diagonal(DiagonalBraiding::new(vec![vec![q]]).unwrap())
    }

    fn o2_3_minus() -> BraidedVectorSpace {
        let rack = conjugacy_class_rack(&["(1 2)", "(2 3)"], "(1 2)", 1000, 100).unwrap();
        let c = RackCocycle::constant(&rack, CycloNumber::from_integer(-1)).unwrap();
        BraidedVectorSpace::rack_type(rack, c).unwrap()
    }

    #[test]
    fn matsumoto_basics() {
        let id = Perm::identity(4);
        assert!(matsumoto_lift(&id).letters.is_empty());
        let s1 = Perm(vec![1, 0, 2]);
        assert_eq!(matsumoto_lift(&s1).letters, vec![1]);
        let longest = Perm(vec![2, 1, 0]);
        assert_eq!(matsumoto_lift(&longest).letters.len(), 3);
        // word length = inversion number, for all of S_4
        let mut perm: Vec<u16> = vec![0, 1, 2, 3];
        loop {
            let p = Perm(perm.clone());
            assert_eq!(matsumoto_lift(&p).letters.len(), p.inversions());
            let Some(i) = (0..3).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
            let j = (i + 1..4).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
    }

    #[test]
    fn braid_word_application() {
        let v = rank1(zeta(5, 1));
        let t = TensorVector::basis_word(vec![0, 0]);
        // empty word: unchanged
        let e = BraidWord::new(2, vec![]).unwrap();
        assert_eq!(apply_braid_word(&v, &e, &t).unwrap(), t);
        // one generator: q * (x ⊗ x)
        let w = BraidWord::new(2, vec![1]).unwrap();
        assert_eq!(apply_braid_word(&v, &w, &t).unwrap(), t.scale(&zeta(5, 1)));
        // word then inverse word: identity
        let v3 = o2_3_minus();
        let t3 = TensorVector::from_terms(
            3,
            vec![
                (vec![0, 1, 2], CycloNumber::one()),
                (vec![2, 2, 0], zeta(3, 1)),
                (vec![1, 0, 1], CycloNumber::from_integer(-2)),
            ],
        );
        let w = BraidWord::new(3, vec![1, 2, 1, 2]).unwrap();
        let winv = BraidWord::new(3, vec![-2, -1, -2, -1]).unwrap();
        let round = apply_braid_word(&v3, &winv, &apply_braid_word(&v3, &w, &t3).unwrap()).unwrap();
        assert_eq!(round, t3);
        // degree mismatch
        assert!(apply_braid_word(&v3, &BraidWord::new(2, vec![1]).unwrap(), &t3).is_err());
    }

    #[test]
    fn braid_relations_hold_on_vectors() {
        let v = o2_3_minus();
        let t = TensorVector::from_terms(
            3,
            vec![(vec![0, 1, 2], CycloNumber::one()), (vec![1, 1, 0], CycloNumber::from_integer(3))],
        );
        let w121 = BraidWord::new(3, vec![1, 2, 1]).unwrap();
        let w212 = BraidWord::new(3, vec![2, 1, 2]).unwrap();
        assert_eq!(apply_braid_word(&v, &w121, &t).unwrap(), apply_braid_word(&v, &w212, &t).unwrap());
    }

    #[test]
    fn rack_braiding_on_transpositions() {
        let v = o2_3_minus();
        // basis order: labels sorted; find (12), (13), (23)
        let l = v.basis_labels();
        let i12 = l.iter().position(|s| s == "x(1 2)").unwrap() as u16;
        let i13 = l.iter().position(|s| s == "x(1 3)").unwrap() as u16;
        let i23 = l.iter().position(|s| s == "x(2 3)").unwrap() as u16;
        let t = TensorVector::basis_word(vec![i12, i13]);
        let w = BraidWord::new(2, vec![1]).unwrap();
        let r = apply_braid_word(&v, &w, &t).unwrap();
        assert_eq!(r.terms, vec![(vec![i23, i12], CycloNumber::from_integer(-1))]);
    }

    #[test]
    fn symmetrizer_small_cases() {
        // n=2, q_11 = -1: Q_2(x⊗x) = 0
        let v = rank1(CycloNumber::from_integer(-1));
        let t = TensorVector::basis_word(vec![0, 0]);
        assert!(quantum_symmetrizer_apply(&v, 2, &t).unwrap().is_zero());
        assert!(ideal_membership(&v, &t).unwrap());
        // generic q: Q_2(x⊗x) = (1+q) x⊗x
        let v5 = rank1(zeta(5, 1));
        let r = quantum_symmetrizer_apply(&v5, 2, &t).unwrap();
        assert_eq!(r, t.scale(&CycloNumber::one().add(&zeta(5, 1))));
        // n=3, q = zeta_3: Q_3(x⊗x⊗x) = (1+q)(1+q+q^2) x^3 = 0
        let v3 = rank1(zeta(3, 1));
        let t3 = TensorVector::basis_word(vec![0, 0, 0]);
        assert!(quantum_symmetrizer_apply(&v3, 3, &t3).unwrap().is_zero());
        let b3 = brute_force_symmetrizer_apply(&v3, 3, &t3).unwrap();
        assert!(b3.is_zero());
    }

    #[test]
    fn factorized_equals_brute_force() {
        let spaces = vec![
            rank1(zeta(3, 1)),
            o2_3_minus(),
            BraidedVectorSpace::diagonal(
                DiagonalBraiding::new(vec![
                    vec![zeta(4, 1), zeta(4, 3)],
                    vec![zeta(4, 2), CycloNumber::from_integer(-1)],
                ])
                .unwrap(),
            ),
        ];
        for v in &spaces {
            for n in 2..=4 {
                // a deterministic "random" vector touching several words
                let mut terms = Vec::new();
                let d = v.dim() as u16;
                let mut word: Word = vec![0; n];
                let mut c = 1i64;
                for step in 0..5usize {
                    for (k, w) in word.iter_mut().enumerate() {
                        *w = ((step * 7 + k * 3 + 1) as u16) % d;
                    }
                    terms.push((word.clone(), CycloNumber::from_integer(c)));
                    c += 2;
                }
                let t = TensorVector::from_terms(n, terms);
                let fast = quantum_symmetrizer_apply(v, n, &t).unwrap();
                let slow = brute_force_symmetrizer_apply(v, n, &t).unwrap();
                assert_eq!(fast, slow, "factorized vs brute force at n = {n}");
            }
        }
    }

    #[test]
    fn ranks_rank1() {
        let v = rank1(zeta(3, 1));
        let b = Budget::unlimited();
        // ranks 1,1,1,0 for n=0..3
        assert_eq!(symmetrizer_rank(&v, 0, &b).unwrap(), 1);
        assert_eq!(symmetrizer_rank(&v, 1, &b).unwrap(), 1);
        assert_eq!(symmetrizer_rank(&v, 2, &b).unwrap(), 1);
        assert_eq!(symmetrizer_rank(&v, 3, &b).unwrap(), 0);
    }

    #[test]
    fn ranks_o23() {
        let v = o2_3_minus();
        let b = Budget::unlimited();
        // rank at n=2 is 4, so dim J^2 = 9 - 4 = 5
        assert_eq!(symmetrizer_rank(&v, 2, &b).unwrap(), 4);
        // chained mode agrees with the direct mode
        let mut chain = SymmetrizerChain::new(&v);
        let ranks = chain.ranks_up_to(5, &b).unwrap();
        let direct: Vec<usize> = (0..=5).map(|n| symmetrizer_rank(&v, n, &b).unwrap()).collect();
        assert_eq!(ranks, direct);
        // full series of B(O_2^3, -1): 1,3,4,3,1 then 0
        assert_eq!(ranks, vec![1, 3, 4, 3, 1, 0]);
    }

    #[test]
    fn multidegree_blocks_are_preserved() {
        let v = BraidedVectorSpace::diagonal(
            DiagonalBraiding::new(vec![
                vec![zeta(3, 1), zeta(5, 2)],
                vec![zeta(5, 3), zeta(3, 2)],
            ])
            .unwrap(),
        );
        let t = TensorVector::basis_word(vec![0, 1, 0]);
        let img = quantum_symmetrizer_apply(&v, 3, &t).unwrap();
        let g = word_grade(&v, &vec![0, 1, 0]);
        for (w, _) in &img.terms {
            assert_eq!(word_grade(&v, w), g);
        }
    }

    #[test]
    fn adjoint_examples() {
        // diagonal: ad(x_1)(x_2) = x_1 x_2 - q_12 x_2 x_1
        let q12 = zeta(3, 1);
        let v = BraidedVectorSpace::diagonal(
            DiagonalBraiding::new(vec![
                vec![CycloNumber::from_integer(-1), q12.clone()],
                vec![zeta(3, 2), CycloNumber::from_integer(-1)],
            ])
            .unwrap(),
        );
        let x1 = TensorVector::basis_word(vec![0]);
        let x2 = TensorVector::basis_word(vec![1]);
        let ad = adjoint_apply(&v, &x1, &x2).unwrap();
        let expected = TensorVector::from_terms(
            2,
            vec![(vec![0, 1], CycloNumber::one()), (vec![1, 0], q12.neg())],
        );
        assert_eq!(ad, expected);
        // ad(x_1)(x_1) = (1 - q_11) x_1 x_1
        let ad11 = adjoint_apply(&v, &x1, &x1).unwrap();
        assert_eq!(
            ad11,
            TensorVector::basis_word(vec![0, 0]).scale(&CycloNumber::one().sub(&CycloNumber::from_integer(-1)))
        );
        // q_12 q_21 = 1 here, so ad(x_1)(x_2) ∈ J^2
        assert!(ideal_membership(&v, &ad).unwrap());
        // degree error
        assert!(adjoint_apply(&v, &ad, &x1).is_err());
    }

    #[test]
    fn grade_blocks_cover_all_words() {
        let v = o2_3_minus();
        let blocks = words_by_grade(&v, 3);
        let total: usize = blocks.values().map(|ws| ws.len()).sum();
        assert_eq!(total, 27);
    }
}
