//! Finite pointed sets, smash products, and column-sparse matrices.
//!
//! A pointed set of size n is `{*, 1, .., n}`; the base point is encoded as
//! 0 wherever points travel as plain indices. Matrix entries live in an
//! iterated smash product and are stored as flat tuples ([`Word`]); the
//! associator between different bracketings is then literal equality, and
//! multiplying entries is concatenation.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BasedSetError {
    #[error("row {row} in column {col} is outside 1..={dim}")]
    RowOutOfRange { row: usize, col: usize, dim: usize },
    #[error("column {col} listed twice; a column holds at most one entry")]
    DuplicateColumn { col: usize },
    #[error("column index {col} outside 1..={dim}")]
    ColOutOfRange { col: usize, dim: usize },
}

/// Finite pointed set. Non-base points are `1..=size` and carry labels;
/// the base point is implicit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasedSet {
    labels: Vec<String>,
}

impl BasedSet {
    pub fn new(labels: Vec<String>) -> Self {
        BasedSet { labels }
    }

    pub fn of_size(n: usize) -> Self {
        BasedSet {
            labels: (1..=n).map(|i| i.to_string()).collect(),
        }
    }

    /// Number of non-base points.
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        assert!(i >= 1 && i <= self.size(), "no point {i}");
        &self.labels[i - 1]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// Smash product: non-base points are tuples of non-base points, ordered
/// with the leftmost factor most significant; anything with a base
/// coordinate collapses to the base point, so none is listed.
pub fn smash(factors: &[&BasedSet]) -> BasedSet {
    let mut labels = vec![String::new()];
    for f in factors {
        let mut next = Vec::with_capacity(labels.len() * f.size());
        for prefix in &labels {
            for i in 1..=f.size() {
                if prefix.is_empty() {
                    next.push(f.label(i).to_string());
                } else {
                    next.push(format!("{prefix},{}", f.label(i)));
                }
            }
        }
        labels = next;
    }
    BasedSet::new(labels.into_iter().map(|l| format!("({l})")).collect())
}

/// Based map between pointed sets, as images of the non-base points
/// (0 = base point).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasedMap {
    source: usize,
    target: usize,
    image: Vec<usize>,
}

impl BasedMap {
    pub fn new(source: usize, target: usize, image: Vec<usize>) -> Self {
        assert_eq!(image.len(), source, "need one image per non-base point");
        assert!(
            image.iter().all(|&v| v <= target),
            "image value outside 0..={target}"
        );
        BasedMap {
            source,
            target,
            image,
        }
    }

    pub fn identity(n: usize) -> Self {
        BasedMap::new(n, n, (1..=n).collect())
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Image of a point; fixes the base point.
    pub fn apply(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        assert!(i <= self.source, "no point {i}");
        self.image[i - 1]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &BasedMap) -> BasedMap {
        assert_eq!(other.target, self.source, "composition mismatch");
        BasedMap::new(
            other.source,
            self.target,
            other.image.iter().map(|&v| self.apply(v)).collect(),
        )
    }

    pub fn preimage(&self, t: usize) -> Vec<usize> {
        (1..=self.source).filter(|&s| self.apply(s) == t).collect()
    }

    /// All based maps source -> target, in lexicographic image order.
    pub fn all(source: usize, target: usize) -> Vec<BasedMap> {
        let count = (target + 1).pow(source as u32);
        (0..count)
            .map(|mut code| {
                let image = (0..source)
                    .map(|_| {
                        let v = code % (target + 1);
                        code /= target + 1;
                        v
                    })
                    .collect();
                BasedMap::new(source, target, image)
            })
            .collect()
    }
}

/// Flat tuple in an iterated smash product of entry sets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word<L>(pub Vec<L>);

impl<L: Clone> Word<L> {
    pub fn atom(l: L) -> Self {
        Word(vec![l])
    }

    pub fn concat(&self, other: &Word<L>) -> Word<L> {
        let mut w = self.0.clone();
        w.extend(other.0.iter().cloned());
        Word(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Rotate the last coordinate to the front.
    pub fn rotate_last_to_front(&self) -> Word<L> {
        let mut w = self.0.clone();
        if let Some(last) = w.pop() {
            w.insert(0, last);
        }
        Word(w)
    }
}

impl<L: fmt::Debug> fmt::Debug for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l:?}")?;
        }
        write!(f, ")")
    }
}

/// n×n matrix over a pointed set with at most one non-base entry per
/// column. `cols[t-1] = Some((s, x))` means entry (row s, column t) is x;
/// `None` is an all-base column. The representation makes a second entry in
/// a column unrepresentable rather than checked after the fact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BasedMatrix<L> {
    dim: usize,
    cols: Vec<Option<(usize, Word<L>)>>,
}

impl<L: Clone + Eq> BasedMatrix<L> {
    pub fn new(dim: usize, cols: Vec<Option<(usize, Word<L>)>>) -> Result<Self, BasedSetError> {
        assert_eq!(cols.len(), dim, "need one column slot per column");
        for (c, col) in cols.iter().enumerate() {
            if let Some((s, _)) = col {
                if *s == 0 || *s > dim {
                    return Err(BasedSetError::RowOutOfRange {
                        row: *s,
                        col: c + 1,
                        dim,
                    });
                }
            }
        }
        Ok(BasedMatrix { dim, cols })
    }

    pub fn all_base(dim: usize) -> Self {
        BasedMatrix {
            dim,
            cols: vec![None; dim],
        }
    }

    /// Build from sparse (row, col, entry) triples.
    pub fn from_entries(
        dim: usize,
        entries: &[(usize, usize, Word<L>)],
    ) -> Result<Self, BasedSetError> {
        let mut cols: Vec<Option<(usize, Word<L>)>> = vec![None; dim];
        for (s, t, x) in entries {
            if *t == 0 || *t > dim {
                return Err(BasedSetError::ColOutOfRange { col: *t, dim });
            }
            if cols[t - 1].is_some() {
                return Err(BasedSetError::DuplicateColumn { col: *t });
            }
            if *s == 0 || *s > dim {
                return Err(BasedSetError::RowOutOfRange {
                    row: *s,
                    col: *t,
                    dim,
                });
            }
            cols[t - 1] = Some((*s, x.clone()));
        }
        Ok(BasedMatrix { dim, cols })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn col(&self, t: usize) -> Option<&(usize, Word<L>)> {
        assert!(t >= 1 && t <= self.dim, "no column {t}");
        self.cols[t - 1].as_ref()
    }

    pub fn entry(&self, s: usize, t: usize) -> Option<&Word<L>> {
        match self.col(t) {
            Some((row, x)) if *row == s => Some(x),
            _ => None,
        }
    }

    /// Matrix product `self · other`: column t of the product holds
    /// (s, x·y) exactly when column t of `other` holds (u, y) and column u
    /// of `self` holds (s, x).
    pub fn product(&self, other: &BasedMatrix<L>) -> BasedMatrix<L> {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let cols = (1..=self.dim)
            .map(|t| {
                let (u, y) = other.col(t)?;
                let (s, x) = self.col(*u)?;
                Some((*s, x.concat(y)))
            })
            .collect();
        BasedMatrix {
            dim: self.dim,
            cols,
        }
    }

    /// Block sum acting on `{1, .., n+m}`.
    pub fn block_sum(&self, other: &BasedMatrix<L>) -> BasedMatrix<L> {
        let n = self.dim;
        let mut cols = self.cols.clone();
        cols.extend(
            other
                .cols
                .iter()
                .map(|c| c.as_ref().map(|(s, x)| (s + n, x.clone()))),
        );
        BasedMatrix {
            dim: n + other.dim,
            cols,
        }
    }

    /// Apply a based map to every entry; `None` sends the entry to the base
    /// point and clears the column.
    pub fn map_entries<M: Clone + Eq>(
        &self,
        f: impl Fn(&Word<L>) -> Option<Word<M>>,
    ) -> BasedMatrix<M> {
        let cols = self
            .cols
            .iter()
            .map(|c| {
                let (s, x) = c.as_ref()?;
                Some((*s, f(x)?))
            })
            .collect();
        BasedMatrix {
            dim: self.dim,
            cols,
        }
    }

    /// Non-base entries as (row, col, entry) triples in column order.
    pub fn entries(&self) -> Vec<(usize, usize, &Word<L>)> {
        self.cols
            .iter()
            .enumerate()
            .filter_map(|(t, c)| c.as_ref().map(|(s, x)| (*s, t + 1, x)))
            .collect()
    }
}

impl<L: fmt::Debug> fmt::Debug for BasedMatrix<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}x{}:", self.dim, self.dim)?;
        for (t, c) in self.cols.iter().enumerate() {
            if let Some((s, x)) = c {
                write!(f, " ({s},{},{x:?})", t + 1)?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::injcat::Permutation;

    fn w(s: &str) -> Word<&'static str> {
        Word(vec![Box::leak(s.to_string().into_boxed_str()) as &str])
    }

    #[test]
    fn smash_collapses_base_coordinates() {
        let x = BasedSet::new(vec!["a".into(), "b".into()]);
        let y = BasedSet::new(vec!["c".into()]);
        let sm = smash(&[&x, &y]);
        assert_eq!(sm.labels(), &["(a,c)".to_string(), "(b,c)".to_string()]);
        // size law |X∧Y| = |X||Y| on non-base points
        let z = BasedSet::of_size(3);
        assert_eq!(smash(&[&x, &z]).size(), 6);
        assert_eq!(smash(&[&x]).size(), 2);
        assert_eq!(smash(&[]).size(), 1); // empty smash is the 0-sphere
    }

    #[test]
    fn smash_unit_and_associativity_on_sizes() {
        let s0 = BasedSet::of_size(1);
        let x = BasedSet::of_size(4);
        let y = BasedSet::of_size(2);
        let z = BasedSet::of_size(3);
        assert_eq!(smash(&[&x, &s0]).size(), x.size());
        assert_eq!(smash(&[&s0, &x]).size(), x.size());
        assert_eq!(
            smash(&[&smash(&[&x, &y]), &z]).size(),
            smash(&[&x, &smash(&[&y, &z])]).size()
        );
    }

    #[test]
    fn matrix_rejects_bad_data() {
        assert_eq!(
            BasedMatrix::new(2, vec![Some((3, w("a"))), None]),
            Err(BasedSetError::RowOutOfRange {
                row: 3,
                col: 1,
                dim: 2
            })
        );
        assert_eq!(
            BasedMatrix::from_entries(2, &[(1, 1, w("a")), (2, 1, w("b"))]),
            Err(BasedSetError::DuplicateColumn { col: 1 })
        );
    }

    #[test]
    fn product_column_rule() {
        // A holds (1,2,x) and (2,1,y); B holds (2,2,z).
        let a = BasedMatrix::from_entries(2, &[(1, 2, w("x")), (2, 1, w("y"))]).unwrap();
        let b = BasedMatrix::from_entries(2, &[(2, 2, w("z"))]).unwrap();
        let ab = a.product(&b);
        // column 2 of B holds (2, z); column 2 of A holds (1, x): entry (1, 2, xz)
        assert_eq!(ab.entry(1, 2), Some(&w("x").concat(&w("z"))));
        assert_eq!(ab.col(1), None);
        // all-base columns propagate
        let zero: BasedMatrix<&str> = BasedMatrix::all_base(2);
        assert_eq!(a.product(&zero), zero);
        assert_eq!(zero.product(&a), zero);
    }

    /// Permutation matrices multiply like the permutations themselves.
    #[test]
    fn permutation_matrices_compose() {
        fn perm_matrix(p: &Permutation) -> BasedMatrix<&'static str> {
            let entries: Vec<_> = (1..=p.degree()).map(|t| (p.apply(t), t, w("e"))).collect();
            BasedMatrix::from_entries(p.degree(), &entries).unwrap()
        }
        for p in Permutation::all(3) {
            for q in Permutation::all(3) {
                let pq = perm_matrix(&p).product(&perm_matrix(&q));
                let composed = p.compose(&q);
                for t in 1..=3 {
                    let (s, x) = pq.col(t).unwrap();
                    assert_eq!(*s, composed.apply(t));
                    assert_eq!(x.len(), 2);
                }
            }
        }
    }

    #[test]
    fn product_is_associative_with_flat_entries() {
        let a = BasedMatrix::from_entries(3, &[(2, 1, w("a")), (1, 3, w("b"))]).unwrap();
        let b = BasedMatrix::from_entries(3, &[(1, 2, w("c")), (3, 1, w("d"))]).unwrap();
        let c = BasedMatrix::from_entries(3, &[(2, 2, w("e")), (1, 1, w("f"))]).unwrap();
        assert_eq!(a.product(&b).product(&c), a.product(&b.product(&c)));
    }

    #[test]
    fn block_sum_is_blockwise() {
        let a = BasedMatrix::from_entries(2, &[(1, 2, w("x"))]).unwrap();
        let b = BasedMatrix::from_entries(1, &[(1, 1, w("y"))]).unwrap();
        let s = a.block_sum(&b);
        assert_eq!(s.dim(), 3);
        assert_eq!(s.entry(1, 2), Some(&w("x")));
        assert_eq!(s.entry(3, 3), Some(&w("y")));
        // block sum multiplies blockwise
        let a2 = BasedMatrix::from_entries(2, &[(2, 1, w("p"))]).unwrap();
        let b2 = BasedMatrix::from_entries(1, &[(1, 1, w("q"))]).unwrap();
        assert_eq!(
            a.block_sum(&b).product(&a2.block_sum(&b2)),
            a.product(&a2).block_sum(&b.product(&b2))
        );
    }

    #[test]
    fn map_entries_can_clear_columns() {
        let a = BasedMatrix::from_entries(2, &[(1, 1, w("x")), (2, 2, w("y"))]).unwrap();
        let mapped = a.map_entries(|e| if e == &w("x") { None } else { Some(e.clone()) });
        assert_eq!(mapped.col(1), None);
        assert_eq!(mapped.entry(2, 2), Some(&w("y")));
    }

    #[test]
    fn based_map_composition_fixes_base() {
        let f = BasedMap::new(2, 3, vec![0, 2]);
        let g = BasedMap::new(3, 1, vec![1, 0, 1]);
        let gf = g.compose(&f);
        assert_eq!(gf.apply(1), 0);
        assert_eq!(gf.apply(2), 0);
        assert_eq!(gf.apply(0), 0);
        assert_eq!(BasedMap::all(2, 2).len(), 9);
    }
}
