//! Braided vector spaces of diagonal and rack type, their validation, and
//! realizations as Yetter-Drinfeld data.

use crate::cyclo::CycloNumber;
use crate::linalg::DenseMatrix;
use crate::perm::Perm;
use crate::racks::Rack;
use crate::{Error, Result};

/// Diagonal braiding c(x_i ⊗ x_j) = q_ij x_j ⊗ x_i.
#[derive(Debug, Clone)]
pub struct DiagonalBraiding {
    pub theta: usize,
    pub q: Vec<Vec<CycloNumber>>,
}

impl DiagonalBraiding {
    /// Validates that every entry is a nonzero root of unity. (The q_ii != 1
    /// requirement is enforced at the Nichols-engine boundary, not here.)
    pub fn new(q: Vec<Vec<CycloNumber>>) -> Result<Self> {
        let theta = q.len();
        if theta == 0 || q.iter().any(|row| row.len() != theta) {
            return Err(Error::Input("braiding matrix must be square and nonempty".into()));
        }
        for (i, row) in q.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_root_of_unity() {
                    return Err(Error::Input(format!("q[{i}][{j}] = {v} is not a root of unity")));
                }
            }
        }
        Ok(DiagonalBraiding { theta, q })
    }

    /// Evaluate the bicharacter q(a, b) = prod q_kl^(a_k b_l) on Z^theta
    /// degrees.
    pub fn bicharacter(&self, a: &[i64], b: &[i64]) -> CycloNumber {
        let mut acc = CycloNumber::one();
        for (k, &ak) in a.iter().enumerate() {
            if ak == 0 {
                continue;
            }
            for (l, &bl) in b.iter().enumerate() {
                if bl == 0 {
                    continue;
                }
                acc = acc.mul(&self.q[k][l].pow(ak * bl).expect("roots of unity are invertible"));
            }
        }
        acc
    }

    /// Twist-equivalence invariants: the q_ii and the products q_ij q_ji for
    /// i < j. Braidings sharing these have isomorphic Nichols algebras.
    pub fn twist_class_key(&self) -> Vec<CycloNumber> {
        let mut key = Vec::new();
        for i in 0..self.theta {
            key.push(self.q[i][i].clone());
        }
        for i in 0..self.theta {
            for j in i + 1..self.theta {
                key.push(self.q[i][j].mul(&self.q[j][i]));
            }
        }
        key
    }
}

/// A 2-cocycle on a rack relative to an ordered decomposition into subracks.
/// Scalar cocycles are the 1x1 case; the data model allows matrix values.
#[derive(Debug, Clone)]
pub struct RackCocycle {
    /// Ordered disjoint family (X_k) covering X.
    pub decomposition: Vec<Vec<usize>>,
    /// Fiber dimensions n_k.
    pub degrees: Vec<usize>,
    /// values[k] maps (i in X, position of j within X_k) to an invertible
    /// n_k x n_k matrix; flattened as (i * |X_k| + pos) * n_k^2 row-major
    /// blocks.
    pub values: Vec<Vec<CycloNumber>>,
}

impl RackCocycle {
    /// Principal scalar cocycle with constant value `q` on the whole rack.
    pub fn constant(rack: &Rack, q: CycloNumber) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::Input("cocycle values must be nonzero".into()));
        }
        let n = rack.size();
        Ok(RackCocycle {
            decomposition: vec![(0..n).collect()],
            degrees: vec![1],
            values: vec![vec![q; n * n]],
        })
    }

    /// Principal scalar cocycle from a full |X| x |X| table.
    pub fn scalar_table(rack: &Rack, table: Vec<Vec<CycloNumber>>) -> Result<Self> {
        let n = rack.size();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::Input(format!("cocycle table must be {n}x{n}")));
        }
        let mut values = vec![CycloNumber::zero(); n * n];
        for (i, row) in table.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                if v.is_zero() {
                    return Err(Error::Input(format!("cocycle value q({i},{j}) is zero")));
                }
                values[i * n + j] = v;
            }
        }
        Ok(RackCocycle { decomposition: vec![(0..n).collect()], degrees: vec![1], values: vec![values] })
    }

    pub fn is_scalar(&self) -> bool {
        self.degrees.iter().all(|&d| d == 1)
    }

    /// Scalar value q(i, j) for principal scalar cocycles.
    pub fn scalar(&self, n: usize, i: usize, j: usize) -> &CycloNumber {
        debug_assert!(self.is_scalar() && self.decomposition.len() == 1);
        &self.values[0][i * n + j]
    }

    /// Component index k with j in X_k, and j's position within X_k.
    pub fn locate(&self, j: usize) -> (usize, usize) {
        for (k, part) in self.decomposition.iter().enumerate() {
            if let Some(pos) = part.iter().position(|&e| e == j) {
                return (k, pos);
            }
        }
        panic!("element {j} not covered by the decomposition");
    }

    /// The matrix q_k(i, j) (j in X_k), row-major n_k x n_k.
    pub fn matrix(&self, i: usize, j: usize) -> (usize, &[CycloNumber]) {
        let (k, pos) = self.locate(j);
        let nk = self.degrees[k];
        let xk = self.decomposition[k].len();
        let base = (i * xk + pos) * nk * nk;
        (k, &self.values[k][base..base + nk * nk])
    }
}

/// First violated instance of the rack 2-cocycle identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleViolation {
    pub i: usize,
    pub j: usize,
    pub h: usize,
}

/// Check decomposition stability and the 2-cocycle identity
/// q_k(i, j▷h) q_k(j, h) = q_k(i▷j, i▷h) q_k(i, h) for all i, j in X, h in
/// X_k. Returns the first violated instance.
pub fn check_cocycle(rack: &Rack, cocycle: &RackCocycle) -> Result<Option<CocycleViolation>> {
    let n = rack.size();
    let mut covered = vec![false; n];
    for part in &cocycle.decomposition {
        for &e in part {
            if e >= n || covered[e] {
                return Err(Error::Input("decomposition must be a partition of the rack".into()));
            }
            covered[e] = true;
        }
    }
    if covered.iter().any(|&c| !c) {
        return Err(Error::Input("decomposition must cover the rack".into()));
    }
    // X_l ▷ X_k = X_k
    for part_l in &cocycle.decomposition {
        for part_k in &cocycle.decomposition {
            for &x in part_l {
                for &y in part_k {
                    if !part_k.contains(&rack.apply(x, y)) {
                        return Err(Error::Input(
                            "decomposition parts are not mutually stable subracks".into(),
                        ));
                    }
                }
            }
        }
    }
    if cocycle.is_scalar() && cocycle.decomposition.len() == 1 {
        for i in 0..n {
            for j in 0..n {
                for h in 0..n {
                    let lhs = cocycle.scalar(n, i, rack.apply(j, h)).mul(cocycle.scalar(n, j, h));
                    let rhs =
                        cocycle.scalar(n, rack.apply(i, j), rack.apply(i, h)).mul(cocycle.scalar(n, i, h));
                    if lhs != rhs {
                        return Ok(Some(CocycleViolation { i, j, h }));
                    }
                }
            }
        }
        return Ok(None);
    }
    // matrix case: compare products of matrices
    for i in 0..n {
        for j in 0..n {
            for (k, part) in cocycle.decomposition.iter().enumerate() {
                let nk = cocycle.degrees[k];
                for &h in part {
                    let (_, a) = cocycle.matrix(i, rack.apply(j, h));
                    let (_, b) = cocycle.matrix(j, h);
                    let (_, c) = cocycle.matrix(rack.apply(i, j), rack.apply(i, h));
                    let (_, d) = cocycle.matrix(i, h);
                    let ab = mat_mul(a, b, nk);
                    let cd = mat_mul(c, d, nk);
                    if ab != cd {
                        return Ok(Some(CocycleViolation { i, j, h }));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn mat_mul(a: &[CycloNumber], b: &[CycloNumber], n: usize) -> Vec<CycloNumber> {
    let mut out = vec![CycloNumber::zero(); n * n];
    for r in 0..n {
        for k in 0..n {
            if a[r * n + k].is_zero() {
                continue;
            }
            for c in 0..n {
                out[r * n + c] = out[r * n + c].add(&a[r * n + k].mul(&b[k * n + c]));
            }
        }
    }
    out
}

/// A basis label of a braided vector space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisLabel {
    /// x_i of a diagonal braiding.
    Diagonal(usize),
    /// (rack element, fiber index) of a rack-type braiding.
    Rack(usize, usize),
}

/// A braided vector space of diagonal or rack type.
#[derive(Debug, Clone)]
pub struct BraidedVectorSpace {
    kind: Kind,
    basis: Vec<BasisLabel>,
    labels: Vec<String>,
}

#[derive(Debug, Clone)]
enum Kind {
    Diagonal(DiagonalBraiding),
    Rack { rack: Rack, cocycle: RackCocycle },
}

impl BraidedVectorSpace {
    pub fn diagonal(d: DiagonalBraiding) -> Self {
        let basis = (0..d.theta).map(BasisLabel::Diagonal).collect();
        let labels = (0..d.theta).map(|i| format!("x{}", i + 1)).collect();
        BraidedVectorSpace { kind: Kind::Diagonal(d), basis, labels }
    }

    /// Rack-type space V = ⊕_k kX_k ⊗ k^{n_k}; the cocycle identity is
    /// validated here.
    pub fn rack_type(rack: Rack, cocycle: RackCocycle) -> Result<Self> {
        if let Some(v) = check_cocycle(&rack, &cocycle)? {
            return Err(Error::Input(format!(
                "cocycle identity fails at (i, j, h) = ({}, {}, {})",
                v.i, v.j, v.h
            )));
        }
        let mut basis = Vec::new();
        let mut labels = Vec::new();
        // basis ordered by rack element, then fiber index
        for e in 0..rack.size() {
            let (k, _) = cocycle.locate(e);
            for f in 0..cocycle.degrees[k] {
                basis.push(BasisLabel::Rack(e, f));
                if cocycle.degrees[k] == 1 {
                    labels.push(format!("x{}", rack.label(e)));
                } else {
                    labels.push(format!("x{}[{f}]", rack.label(e)));
                }
            }
        }
        Ok(BraidedVectorSpace { kind: Kind::Rack { rack, cocycle }, basis, labels })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn as_diagonal(&self) -> Option<&DiagonalBraiding> {
        match &self.kind {
            Kind::Diagonal(d) => Some(d),
            _ => None,
        }
    }

    pub fn as_rack(&self) -> Option<(&Rack, &RackCocycle)> {
        match &self.kind {
            Kind::Rack { rack, cocycle } => Some((rack, cocycle)),
            _ => None,
        }
    }

    /// True when c maps every basis pair to a scalar multiple of a single
    /// basis pair (diagonal, or rack type with scalar cocycle).
    pub fn is_monomial(&self) -> bool {
        match &self.kind {
            Kind::Diagonal(_) => true,
            Kind::Rack { cocycle, .. } => cocycle.is_scalar(),
        }
    }

    /// c(e_a ⊗ e_b) for monomial braidings: a single term ((a', b'), scalar).
    pub fn braid_monomial(&self, a: usize, b: usize) -> ((usize, usize), CycloNumber) {
        match &self.kind {
            Kind::Diagonal(d) => ((b, a), d.q[a][b].clone()),
            Kind::Rack { rack, cocycle } => {
                debug_assert!(cocycle.is_scalar());
                let (BasisLabel::Rack(i, _), BasisLabel::Rack(j, _)) = (&self.basis[a], &self.basis[b])
                else {
                    unreachable!()
                };
                let n = rack.size();
                ((rack.apply(*i, *j), a), cocycle.scalar(n, *i, *j).clone())
            }
        }
    }

    /// Inverse braiding for monomial braidings.
    pub fn braid_monomial_inv(&self, a: usize, b: usize) -> ((usize, usize), CycloNumber) {
        match &self.kind {
            Kind::Diagonal(d) => ((b, a), d.q[b][a].inv().expect("roots of unity are invertible")),
            Kind::Rack { rack, cocycle } => {
                // c(x_i ⊗ x_j) = q(i,j) x_{i▷j} ⊗ x_i; invert (a, b) = (i▷j, i)
                let BasisLabel::Rack(ra, _) = self.basis[a] else { unreachable!() };
                let BasisLabel::Rack(i, _) = self.basis[b] else { unreachable!() };
                let n = rack.size();
                let j = (0..n).position(|y| rack.apply(i, y) == ra).expect("translations are bijective");
                ((i, j), cocycle.scalar(n, i, j).inv().expect("cocycle values are invertible"))
            }
        }
    }

    /// c(e_a ⊗ e_b) as an exact linear combination of basis pairs.
    pub fn braiding_apply(&self, a: usize, b: usize) -> Result<Vec<((usize, usize), CycloNumber)>> {
        if a >= self.dim() || b >= self.dim() {
            return Err(Error::Input(format!("basis index out of range: ({a}, {b})")));
        }
        match &self.kind {
            Kind::Diagonal(_) => {
                let (pair, c) = self.braid_monomial(a, b);
                Ok(vec![(pair, c)])
            }
            Kind::Rack { rack, cocycle } => {
                let BasisLabel::Rack(i, vfib) = self.basis[a] else { unreachable!() };
                let BasisLabel::Rack(j, wfib) = self.basis[b] else { unreachable!() };
                let (k, mat) = cocycle.matrix(i, j);
                let nk = cocycle.degrees[k];
                let target = rack.apply(i, j);
                let mut out = Vec::new();
                for row in 0..nk {
                    let c = mat[row * nk + wfib].clone();
                    if c.is_zero() {
                        continue;
                    }
                    let left = self.basis_index(target, row);
                    let right = self.basis_index(i, vfib);
                    out.push(((left, right), c));
                }
                Ok(out)
            }
        }
    }

    fn basis_index(&self, element: usize, fiber: usize) -> usize {
        self.basis
            .iter()
            .position(|l| matches!(l, BasisLabel::Rack(e, f) if *e == element && *f == fiber))
            .expect("basis label exists")
    }

    /// The full dim^2 x dim^2 matrix of c, row-major over pairs (a, b) with
    /// index a*dim + b.
    pub fn braiding_matrix(&self) -> Result<DenseMatrix> {
        let d = self.dim();
        let mut m = DenseMatrix::zero(d * d, d * d);
        for a in 0..d {
            for b in 0..d {
                for ((x, y), c) in self.braiding_apply(a, b)? {
                    m.set(x * d + y, a * d + b, c);
                }
            }
        }
        Ok(m)
    }

    /// Grading of a letter used to split tensor blocks: the letter index for
    /// diagonal type, the inner translation phi_x for rack type.
    pub fn letter_grade(&self, a: usize) -> LetterGrade {
        match &self.kind {
            Kind::Diagonal(_) => LetterGrade::Letter(a),
            Kind::Rack { rack, .. } => {
                let BasisLabel::Rack(i, _) = self.basis[a] else { unreachable!() };
                LetterGrade::Translation(Perm(
                    (0..rack.size()).map(|y| rack.apply(i, y) as u16).collect(),
                ))
            }
        }
    }
}

/// Grade contribution of one tensor letter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LetterGrade {
    Letter(usize),
    Translation(Perm),
}

/// Total grade of a word; preserved by the braid group action.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Grade {
    /// Multidegree in N^theta (diagonal type).
    Multi(Vec<u16>),
    /// Composite inner translation (rack type).
    Inner(Perm),
}

pub fn word_grade(v: &BraidedVectorSpace, word: &[u16]) -> Grade {
    match v.letter_grade(0) {
        LetterGrade::Letter(_) => {
            let mut counts = vec![0u16; v.dim()];
            for &l in word {
                counts[l as usize] += 1;
            }
            Grade::Multi(counts)
        }
        LetterGrade::Translation(id_like) => {
            let mut acc = Perm::identity(id_like.degree());
            for &l in word {
                let LetterGrade::Translation(p) = v.letter_grade(l as usize) else { unreachable!() };
                acc = acc.compose(&p);
            }
            Grade::Inner(acc)
        }
    }
}

/// Compose a grade with one more letter on the right.
pub fn grade_push(v: &BraidedVectorSpace, g: &Grade, letter: usize) -> Grade {
    match g {
        Grade::Multi(counts) => {
            let mut c = counts.clone();
            c[letter] += 1;
            Grade::Multi(c)
        }
        Grade::Inner(p) => {
            let LetterGrade::Translation(q) = v.letter_grade(letter) else { unreachable!() };
            Grade::Inner(p.compose(&q))
        }
    }
}

pub fn grade_unit(v: &BraidedVectorSpace) -> Grade {
    match v.letter_grade(0) {
        LetterGrade::Letter(_) => Grade::Multi(vec![0; v.dim()]),
        LetterGrade::Translation(p) => Grade::Inner(Perm::identity(p.degree())),
    }
}

/// First counterexample to the braid equation, as a basis triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidViolation {
    pub triple: (usize, usize, usize),
}

/// Exhaustively check (c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c) on basis
/// triples.
pub fn check_braid_equation(v: &BraidedVectorSpace) -> Result<Option<BraidViolation>> {
    let d = v.dim();
    type Terms = Vec<((usize, usize, usize), CycloNumber)>;
    let c12 = |terms: &Terms| -> Result<Terms> {
        let mut out = Vec::new();
        for ((a, b, cc), coeff) in terms {
            for ((x, y), s) in v.braiding_apply(*a, *b)? {
                out.push(((x, y, *cc), coeff.mul(&s)));
            }
        }
        Ok(out)
    };
    let c23 = |terms: &Terms| -> Result<Terms> {
        let mut out = Vec::new();
        for ((a, b, cc), coeff) in terms {
            for ((x, y), s) in v.braiding_apply(*b, *cc)? {
                out.push(((*a, x, y), coeff.mul(&s)));
            }
        }
        Ok(out)
    };
    let normalize = |mut terms: Terms| -> Terms {
        terms.sort_by(|p, q| p.0.cmp(&q.0));
        let mut merged: Terms = Vec::new();
        for (k, c) in terms {
            match merged.last_mut() {
                Some((lk, lc)) if *lk == k => *lc = lc.add(&c),
                _ => merged.push((k, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        merged
    };
    for a in 0..d {
        for b in 0..d {
            for cc in 0..d {
                let start: Terms = vec![((a, b, cc), CycloNumber::one())];
                let lhs = c12(&c23(&c12(&start)?)?)?;
                let rhs = c23(&c12(&c23(&start)?)?)?;
                if normalize(lhs) != normalize(rhs) {
                    return Ok(Some(BraidViolation { triple: (a, b, cc) }));
                }
            }
        }
    }
    Ok(None)
}

/// A Yetter-Drinfeld datum of diagonal type over a finite abelian group given
/// by invariant factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YdDatumDiagonal {
    /// Invariant factors (m_1, ..., m_r) of Γ.
    pub group: Vec<u64>,
    /// Elements g_i as exponent vectors.
    pub elements: Vec<Vec<u64>>,
    /// Characters χ_i as exponent vectors on the invariant factors.
    pub characters: Vec<Vec<u64>>,
}

impl YdDatumDiagonal {
    /// χ_j(g_i) as an exact root of unity.
    pub fn pairing(&self, i: usize, j: usize) -> CycloNumber {
        character_value(&self.group, &self.elements[i], &self.characters[j])
    }

    pub fn theta(&self) -> usize {
        self.elements.len()
    }

    pub fn group_order(&self) -> u64 {
        self.group.iter().product()
    }

    /// Check χ_j(g_i) = q_ij for a target matrix.
    pub fn matches(&self, q: &DiagonalBraiding) -> bool {
        if q.theta != self.theta() {
            return false;
        }
        (0..q.theta).all(|i| (0..q.theta).all(|j| self.pairing(i, j) == q.q[i][j]))
    }
}

/// Value of the character with exponent vector `chi` at a group element.
pub fn character_value(group: &[u64], g: &[u64], chi: &[u64]) -> CycloNumber {
    let l: u64 = group.iter().fold(1u64, |acc, &m| num_integer::lcm(acc, m));
    let mut exponent: u64 = 0;
    for (k, &m) in group.iter().enumerate() {
        exponent = (exponent + (l / m) * ((g[k] * chi[k]) % m)) % l;
    }
    CycloNumber::root_of_unity(l, exponent as i64)
}

/// All realizations ((g_i), (χ_i)) of a diagonal matrix over Γ: solves
/// χ_j(g_i) = q_ij exhaustively. The search is capped; exceeding the cap is
/// an error, not a silent truncation.
pub fn realize_diagonal_over_group(
    q: &DiagonalBraiding,
    group: &[u64],
    cap: u64,
) -> Result<Vec<YdDatumDiagonal>> {
    if group.is_empty() || group.iter().any(|&m| m == 0) {
        return Err(Error::Input("group invariant factors must be positive".into()));
    }
    let order: u64 = group.iter().product();
    let theta = q.theta;
    let l: u64 = group.iter().fold(1u64, |acc, &m| num_integer::lcm(acc, m));
    // quick order check: every q_ij must be an L-th root of unity
    for row in &q.q {
        for v in row {
            match v.order_as_root_of_unity() {
                Some(o) if l % o == 0 => {}
                _ => return Ok(Vec::new()),
            }
        }
    }
    let mut elements: Vec<Vec<u64>> = vec![vec![]];
    for &m in group {
        let mut next = Vec::with_capacity(elements.len() * m as usize);
        for e in &elements {
            for r in 0..m {
                let mut w = e.clone();
                w.push(r);
                next.push(w);
            }
        }
        elements = next;
    }
    // character candidates per column j, given a choice of (g_i)
    let total_g_tuples = (order as u128).pow(theta as u32);
    let search_size = total_g_tuples.saturating_mul((order as u128).saturating_mul(theta as u128));
    if search_size > cap as u128 {
        return Err(Error::Budget(format!(
            "realization search of {search_size} candidate evaluations exceeds cap {cap}"
        )));
    }
    let mut solutions = Vec::new();
    let mut g_choice: Vec<usize> = vec![0; theta];
    loop {
        // collect per-column character candidates
        let mut per_column: Vec<Vec<&Vec<u64>>> = Vec::with_capacity(theta);
        let mut feasible = true;
        for j in 0..theta {
            let candidates: Vec<&Vec<u64>> = elements
                .iter()
                .filter(|chi| {
                    (0..theta).all(|i| {
                        character_value(group, &elements[g_choice[i]], chi) == q.q[i][j]
                    })
                })
                .collect();
            if candidates.is_empty() {
                feasible = false;
                break;
            }
            per_column.push(candidates);
        }
        if feasible {
            // emit the cartesian product of per-column candidates
            let mut idx = vec![0usize; theta];
            loop {
                let datum = YdDatumDiagonal {
                    group: group.to_vec(),
                    elements: g_choice.iter().map(|&gi| elements[gi].clone()).collect(),
                    characters: (0..theta).map(|j| per_column[j][idx[j]].clone()).collect(),
                };
                solutions.push(datum);
                if solutions.len() as u64 > cap {
                    return Err(Error::Budget(format!("more than {cap} realizations; raise the cap")));
                }
                let mut k = 0;
                loop {
                    if k == theta {
                        break;
                    }
                    idx[k] += 1;
                    if idx[k] < per_column[k].len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == theta {
                    break;
                }
            }
        }
        // next (g_i) tuple
        let mut k = 0;
        loop {
            if k == theta {
                break;
            }
            g_choice[k] += 1;
            if g_choice[k] < elements.len() {
                break;
            }
            g_choice[k] = 0;
            k += 1;
        }
        if k == theta {
            break;
        }
    }
    Ok(solutions)
}

/// A Yetter-Drinfeld datum of rack type: a group acting on the rack, an
/// equivariant map g, and a family of 1-cocycles χ_i : G → k^×.
#[derive(Debug, Clone)]
pub struct YdDatumRack {
    pub rack: Rack,
    /// Scalar 2-cocycle values q(i, j).
    pub q: Vec<Vec<CycloNumber>>,
    /// Enumerated group elements; index 0 is the identity.
    pub group: Vec<Perm>,
    /// action[t][i] = t · i for t a group index, i a rack element.
    pub action: Vec<Vec<usize>>,
    /// g_map[i] = index in `group` of g_i.
    pub g_map: Vec<usize>,
    /// chi[i][t] = χ_i(t).
    pub chi: Vec<Vec<CycloNumber>>,
}

/// Per-condition validation report for a rack YD-datum.
#[derive(Debug, Clone, serde::Serialize)]
pub struct YdRackReport {
    pub action_axioms: bool,
    pub equivariance: bool,
    pub one_cocycle: bool,
    pub action_matches_rack: bool,
    pub pairing_matches_cocycle: bool,
    pub failures: Vec<String>,
}

impl YdRackReport {
    pub fn all_pass(&self) -> bool {
        self.action_axioms
            && self.equivariance
            && self.one_cocycle
            && self.action_matches_rack
            && self.pairing_matches_cocycle
    }
}

/// Validate a rack YD-datum: action axioms, equivariance of g, the 1-cocycle
/// identity χ_i(ht) = χ_i(t) χ_{t·i}(h), and the compatibility equations
/// g_i · j = i ▷ j and χ_i(g_j) = q_ij.
pub fn validate_yd_rack_datum(d: &YdDatumRack) -> YdRackReport {
    let n = d.rack.size();
    let gsize = d.group.len();
    let mut failures = Vec::new();
    let index_of = |p: &Perm| d.group.iter().position(|q| q == p);

    let mut action_axioms = d.action.len() == gsize && d.action.iter().all(|row| row.len() == n);
    if action_axioms {
        // identity acts trivially; action is a homomorphism
        if let Some(id_idx) = d.group.iter().position(|p| p.is_identity()) {
            if (0..n).any(|i| d.action[id_idx][i] != i) {
                action_axioms = false;
                failures.push("identity does not act trivially".into());
            }
        }
        'outer: for (s_idx, s) in d.group.iter().enumerate() {
            for (t_idx, t) in d.group.iter().enumerate() {
                let st = s.compose(t);
                let Some(st_idx) = index_of(&st) else {
                    action_axioms = false;
                    failures.push("group is not closed under composition".into());
                    break 'outer;
                };
                for i in 0..n {
                    if d.action[st_idx][i] != d.action[s_idx][d.action[t_idx][i]] {
                        action_axioms = false;
                        failures.push(format!("action not that of a group: (st)·{i} ≠ s·(t·{i})"));
                        break 'outer;
                    }
                }
            }
        }
    } else {
        failures.push("action table has wrong shape".into());
    }

    // equivariance: g_{t·i} = t g_i t^{-1}
    let mut equivariance = true;
    'eq: for (t_idx, t) in d.group.iter().enumerate() {
        for i in 0..n {
            let lhs = &d.group[d.g_map[d.action[t_idx][i]]];
            let rhs = t.conjugate(&d.group[d.g_map[i]]);
            if *lhs != rhs {
                equivariance = false;
                failures.push(format!("g is not equivariant at (t={t_idx}, i={i})"));
                break 'eq;
            }
        }
    }

    // 1-cocycle identity
    let mut one_cocycle = true;
    'oc: for i in 0..n {
        for (h_idx, h) in d.group.iter().enumerate() {
            for (t_idx, t) in d.group.iter().enumerate() {
                let ht = h.compose(t);
                let Some(ht_idx) = index_of(&ht) else {
                    one_cocycle = false;
                    break 'oc;
                };
                let lhs = &d.chi[i][ht_idx];
                let rhs = d.chi[i][t_idx].mul(&d.chi[d.action[t_idx][i]][h_idx]);
                if *lhs != rhs {
                    one_cocycle = false;
                    failures.push(format!("1-cocycle identity fails at (i={i}, h={h_idx}, t={t_idx})"));
                    break 'oc;
                }
            }
        }
    }

    // g_i · j = i ▷ j
    let mut action_matches_rack = true;
    for i in 0..n {
        for j in 0..n {
            if d.action[d.g_map[i]][j] != d.rack.apply(i, j) {
                action_matches_rack = false;
                failures.push(format!("g_{i} · {j} ≠ {i} ▷ {j}"));
            }
        }
    }

    // χ_i(g_j) = q_ij
    let mut pairing_matches_cocycle = true;
    for i in 0..n {
        for j in 0..n {
            if d.chi[i][d.g_map[j]] != d.q[i][j] {
                pairing_matches_cocycle = false;
                failures.push(format!("χ_{i}(g_{j}) ≠ q({i},{j})"));
            }
        }
    }

    YdRackReport {
        action_axioms,
        equivariance,
        one_cocycle,
        action_matches_rack,
        pairing_matches_cocycle,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::racks::conjugacy_class_rack;

    fn zeta(n: u64, k: i64) -> CycloNumber {
        CycloNumber::root_of_unity(n, k)
    }

    fn o2_3() -> Rack {
        conjugacy_class_rack(&["(1 2)", "(2 3)"], "(1 2)", 1000, 100).unwrap()
    }

    #[test]
    fn diagonal_braiding_apply() {
        let q = vec![
            vec![zeta(3, 1), zeta(3, 1)],
            vec![CycloNumber::one(), CycloNumber::from_integer(-1)],
        ];
        let d = DiagonalBraiding::new(q).unwrap();
        let v = BraidedVectorSpace::diagonal(d);
        // c(x_1 ⊗ x_2) = q_12 x_2 ⊗ x_1
        let t = v.braiding_apply(0, 1).unwrap();
        assert_eq!(t, vec![((1, 0), zeta(3, 1))]);
        // q_22 = -1: c(x_2 ⊗ x_2) = -x_2 ⊗ x_2
        let t = v.braiding_apply(1, 1).unwrap();
        assert_eq!(t, vec![((1, 1), CycloNumber::from_integer(-1))]);
        assert!(v.braiding_apply(0, 5).is_err());
        assert!(check_braid_equation(&v).unwrap().is_none());
    }

    #[test]
    fn non_root_entries_rejected() {
        let q = vec![vec![CycloNumber::from_integer(2)]];
        assert!(DiagonalBraiding::new(q).is_err());
    }

    #[test]
    fn rack_braiding_and_cocycles() {
        let rack = o2_3();
        let minus = RackCocycle::constant(&rack, CycloNumber::from_integer(-1)).unwrap();
        assert!(check_cocycle(&rack, &minus).unwrap().is_none());
        let v = BraidedVectorSpace::rack_type(rack.clone(), minus).unwrap();
        assert_eq!(v.dim(), 3);
        // c(x_(12) ⊗ x_(13)) = -x_(23) ⊗ x_(12)
        let i12 = rack.labels().iter().position(|l| l == "(1 2)").unwrap();
        let i13 = rack.labels().iter().position(|l| l == "(1 3)").unwrap();
        let i23 = rack.labels().iter().position(|l| l == "(2 3)").unwrap();
        let t = v.braiding_apply(i12, i13).unwrap();
        assert_eq!(t, vec![((i23, i12), CycloNumber::from_integer(-1))]);
        assert!(check_braid_equation(&v).unwrap().is_none());
        // inverse braiding undoes it
        let ((x, y), c) = v.braid_monomial(i12, i13);
        let ((a, b), cinv) = v.braid_monomial_inv(x, y);
        assert_eq!((a, b), (i12, i13));
        assert!(c.mul(&cinv).is_one());
        // braiding matrix invertible
        assert!(!v.braiding_matrix().unwrap().determinant().is_zero());
    }

    #[test]
    fn constant_cocycles_always_pass() {
        let rack = o2_3();
        for (n, k) in [(1, 0), (3, 1), (4, 1), (5, 2)] {
            let c = RackCocycle::constant(&rack, zeta(n, k)).unwrap();
            assert!(check_cocycle(&rack, &c).unwrap().is_none());
        }
    }

    #[test]
    fn corrupted_cocycle_detected() {
        let rack = o2_3();
        let mut table = vec![vec![CycloNumber::from_integer(-1); 3]; 3];
        table[0][1] = CycloNumber::one();
        let c = RackCocycle::scalar_table(&rack, table).unwrap();
        let violation = check_cocycle(&rack, &c).unwrap();
        assert!(violation.is_some());
        // and the braided space constructor refuses it
        assert!(BraidedVectorSpace::rack_type(rack, c).is_err());
    }

    #[test]
    fn realize_over_z2() {
        let m1 = CycloNumber::from_integer(-1);
        let q = DiagonalBraiding::new(vec![vec![m1.clone(), m1.clone()], vec![m1.clone(), m1.clone()]])
            .unwrap();
        let sols = realize_diagonal_over_group(&q, &[2], 1_000_000).unwrap();
        assert_eq!(sols.len(), 1);
        assert!(sols[0].matches(&q));
        // q = [[-1]] over Z_3 is unsolvable
        let q1 = DiagonalBraiding::new(vec![vec![m1.clone()]]).unwrap();
        assert!(realize_diagonal_over_group(&q1, &[3], 1_000_000).unwrap().is_empty());
        // q = [[1]] over Z_2: the solver does not reject q_ii = 1 and returns
        // every trivial-character pair, among others
        let q2 = DiagonalBraiding::new(vec![vec![CycloNumber::one()]]).unwrap();
        let sols2 = realize_diagonal_over_group(&q2, &[2], 1_000_000).unwrap();
        assert!(sols2.len() >= 2);
        assert!(sols2.iter().any(|s| s.characters[0] == vec![0]));
        // cap errors are reported, not truncated
        assert!(matches!(
            realize_diagonal_over_group(&q, &[2], 3),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn realizations_reproduce_q() {
        let q = DiagonalBraiding::new(vec![
            vec![zeta(3, 1), CycloNumber::one()],
            vec![zeta(3, 2), zeta(3, 1)],
        ])
        .unwrap();
        let sols = realize_diagonal_over_group(&q, &[3, 3], 10_000_000).unwrap();
        assert!(!sols.is_empty());
        for s in &sols {
            assert!(s.matches(&q));
        }
    }
}
