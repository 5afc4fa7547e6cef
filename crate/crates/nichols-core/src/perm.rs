//! Permutations, cycle-notation parsing, and breadth-first group closure.

use crate::{Error, Result};
use std::collections::{HashSet, VecDeque};

/// A permutation of {0, ..., n-1}, stored as the image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u16>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u16).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// Composition: (self * other)(x) = self(other(x)); `other` acts first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img as usize] = i as u16;
        }
        Perm(inv)
    }

    /// Conjugation self ▷ other = self * other * self^{-1}.
    pub fn conjugate(&self, other: &Perm) -> Perm {
        self.compose(other).compose(&self.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u16 == x)
    }

    /// Pad to a larger degree, fixing the new points.
    pub fn extended(&self, n: usize) -> Perm {
        assert!(n >= self.degree());
        let mut v = self.0.clone();
        v.extend(self.degree() as u16..n as u16);
        Perm(v)
    }

    /// Number of inversions (Coxeter length in S_n).
    pub fn inversions(&self) -> usize {
        let v = &self.0;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Cycle lengths >= 2, sorted; handy as an isomorphism invariant.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.0.len()];
        let mut lens = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            if len > 1 {
                lens.push(len);
            }
        }
        lens.sort_unstable();
        lens
    }

    /// Render in one-based disjoint cycle notation; identity prints as "()".
    pub fn to_cycle_string(&self) -> String {
        let mut seen = vec![false; self.0.len()];
        let mut out = String::new();
        for s in 0..self.0.len() {
            if seen[s] || self.apply(s) == s {
                seen[s] = true;
                continue;
            }
            out.push('(');
            let mut x = s;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&(x + 1).to_string());
                first = false;
                x = self.apply(x);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Parse one-based disjoint cycle notation like "(1 2)(3 4 5)"; "()" is the
/// identity. `min_degree` pads the result to at least that many points.
pub fn parse_cycles(s: &str, min_degree: usize) -> Result<Perm> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Input("empty permutation string".into()));
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&ch) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
            continue;
        }
        if ch != '(' {
            return Err(Error::Input(format!("expected '(' in permutation {s:?}")));
        }
        chars.next();
        let mut body = String::new();
        let mut closed = false;
        for c in chars.by_ref() {
            if c == ')' {
                closed = true;
                break;
            }
            body.push(c);
        }
        if !closed {
            return Err(Error::Input(format!("unclosed cycle in permutation {s:?}")));
        }
        let points: Vec<usize> = body
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Input(format!("bad point {t:?} in permutation {s:?}")))
            })
            .collect::<Result<_>>()?;
        if points.iter().any(|&p| p == 0) {
            return Err(Error::Input(format!("points are one-based in permutation {s:?}")));
        }
        if !points.is_empty() {
            cycles.push(points);
        }
    }
    let degree = cycles.iter().flatten().copied().max().unwrap_or(0).max(min_degree);
    let mut images: Vec<u16> = (0..degree as u16).collect();
    let mut touched = vec![false; degree];
    for cycle in &cycles {
        for w in 0..cycle.len() {
            let from = cycle[w] - 1;
            let to = cycle[(w + 1) % cycle.len()] - 1;
            if touched[from] {
                return Err(Error::Input(format!("cycles are not disjoint in permutation {s:?}")));
            }
            touched[from] = true;
            images[from] = to as u16;
        }
    }
    Ok(Perm(images))
}

/// Breadth-first closure of a generating set; errors out past `cap` elements.
pub fn enumerate_group(gens: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let degree = gens.iter().map(|g| g.degree()).max().unwrap_or(1);
    let gens: Vec<Perm> = gens.iter().map(|g| g.extended(degree)).collect();
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut order: Vec<Perm> = Vec::new();
    let mut queue: VecDeque<Perm> = VecDeque::new();
    seen.insert(id.clone());
    order.push(id.clone());
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for gen in &gens {
            let h = gen.compose(&g);
            if seen.insert(h.clone()) {
                if seen.len() > cap {
                    return Err(Error::Budget(format!("group closure exceeded cap of {cap} elements")));
                }
                order.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = parse_cycles("(1 2)", 0).unwrap();
        assert_eq!(p.0, vec![1, 0]);
        let q = parse_cycles("(1 2)(3 4 5)", 0).unwrap();
        assert_eq!(q.to_cycle_string(), "(1 2)(3 4 5)");
        assert_eq!(parse_cycles("()", 3).unwrap(), Perm::identity(3));
        assert!(parse_cycles("(1 2)(2 3)", 0).is_err());
        assert!(parse_cycles("(0 1)", 0).is_err());
        assert!(parse_cycles("(1 2", 0).is_err());
    }

    #[test]
    fn compose_and_conjugate() {
        let a = parse_cycles("(1 2)", 3).unwrap();
        let b = parse_cycles("(1 3)", 3).unwrap();
        // (1 2) ▷ (1 3) = (2 3)
        assert_eq!(a.conjugate(&b).to_cycle_string(), "(2 3)");
        assert!(a.compose(&a).is_identity());
        assert_eq!(a.inversions(), 1);
    }

    #[test]
    fn s4_closure() {
        let gens = vec![parse_cycles("(1 2)", 4).unwrap(), parse_cycles("(1 2 3 4)", 0).unwrap()];
        let g = enumerate_group(&gens, 100).unwrap();
        assert_eq!(g.len(), 24);
        assert!(enumerate_group(&gens, 10).is_err());
    }
}
