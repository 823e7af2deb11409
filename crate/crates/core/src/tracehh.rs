//! Traces of matrix tuples, additive bases of finite rings, and Hochschild
//! complexes with the rank-one trace between them.
//!
//! A [`MatrixTuple`] is a cyclic-bar style simplex of column-sparse based
//! matrices. Its trace is a [`BeClass`] over entry words, computed from the
//! closed column chains: a chain names the column of each level's entry,
//! and requires the row of level i's entry to equal the column of level
//! i-1, cyclically. Each coordinate determines the whole chain, so the
//! level projections from the chain set are injective, and factorizing
//! them against a chosen enumeration of the chains yields the permutation
//! tuple of the class. The class does not depend on the enumeration, which
//! the tests check by brute force.
//!
//! [`AdditiveBasis`] splits a finite commutative group into independent
//! cyclic summands with a verified decompose table; on top of it
//! [`HhComplex`] builds the Hochschild complex of a finite ring with exact
//! integer coefficients, and [`linear_trace`] is the chain map from the
//! complex of a matrix ring down to the complex of its scalars that matches
//! entries along closed index chains.

use crate::abelian::{
    ab_group, snf, AbGroup, BoundaryMap, ChainComplex, IntegerMatrix, Presentation, SparseCol,
};
use crate::barcons::{FiniteMonoid, FiniteRing};
use crate::basedsets::{BasedMatrix, Word};
use crate::injcat::{factorize, Injection};
use crate::operad::BeClass;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::VecDeque;

/// Identity based matrix: empty words on the diagonal.
pub fn identity_matrix<L: Clone + Eq>(dim: usize) -> BasedMatrix<L> {
    let cols = (1..=dim).map(|t| Some((t, Word(Vec::new())))).collect();
    BasedMatrix::new(dim, cols).expect("diagonal is in range")
}

/// Cyclic-bar style simplex of based matrices of a common dimension: degree
/// k holds k+1 matrices. The inner faces replace adjacent matrices by their
/// product; the wrap-around face multiplies the last into the first;
/// degeneracies insert an identity; the cyclic operator rotates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixTuple<L> {
    mats: Vec<BasedMatrix<L>>,
}

impl<L: Clone + Eq> MatrixTuple<L> {
    pub fn new(mats: Vec<BasedMatrix<L>>) -> Self {
        assert!(!mats.is_empty(), "a tuple has at least one level");
        let dim = mats[0].dim();
        assert!(mats.iter().all(|m| m.dim() == dim), "dimension mismatch");
        MatrixTuple { mats }
    }

    pub fn degree(&self) -> usize {
        self.mats.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.mats[0].dim()
    }

    pub fn matrices(&self) -> &[BasedMatrix<L>] {
        &self.mats
    }

    pub fn face(&self, i: usize) -> MatrixTuple<L> {
        let k = self.degree();
        assert!(k >= 1 && i <= k);
        let mut mats = Vec::with_capacity(k);
        if i == k {
            mats.push(self.mats[k].product(&self.mats[0]));
            mats.extend_from_slice(&self.mats[1..k]);
        } else {
            mats.extend_from_slice(&self.mats[..i]);
            mats.push(self.mats[i].product(&self.mats[i + 1]));
            mats.extend_from_slice(&self.mats[i + 2..]);
        }
        MatrixTuple { mats }
    }

    pub fn degeneracy(&self, i: usize) -> MatrixTuple<L> {
        let k = self.degree();
        assert!(i <= k);
        let mut mats = self.mats.clone();
        mats.insert(i + 1, identity_matrix(self.dim()));
        MatrixTuple { mats }
    }

    pub fn cyclic(&self) -> MatrixTuple<L> {
        let mut mats = self.mats.clone();
        mats.rotate_right(1);
        MatrixTuple { mats }
    }

    pub fn block_sum(&self, other: &MatrixTuple<L>) -> MatrixTuple<L> {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        MatrixTuple {
            mats: self
                .mats
                .iter()
                .zip(&other.mats)
                .map(|(a, b)| a.block_sum(b))
                .collect(),
        }
    }

    /// Apply a based map to every letter; a killed letter clears the whole
    /// column that carries it.
    pub fn map_atoms<M: Clone + Eq>(&self, f: impl Fn(&L) -> Option<M>) -> MatrixTuple<M> {
        MatrixTuple {
            mats: self
                .mats
                .iter()
                .map(|m| {
                    m.map_entries(|w| w.0.iter().map(&f).collect::<Option<Vec<M>>>().map(Word))
                })
                .collect(),
        }
    }
}

/// Closed column chains of a tuple: `(s_0, ..., s_k)` with the entry of
/// level i sitting in column s_i, row s_{i-1}, indices cyclic. The whole
/// chain is determined by s_0 (level 0 yields s_k, then level i yields
/// s_{i-1} from s_i), so listing by increasing s_0 is the lexicographic
/// enumeration.
pub fn chains<L: Clone + Eq>(tuple: &MatrixTuple<L>) -> Vec<Vec<usize>> {
    let k = tuple.degree();
    let mats = tuple.matrices();
    let mut out = Vec::new();
    'start: for s0 in 1..=tuple.dim() {
        let mut chain = vec![0; k + 1];
        chain[0] = s0;
        let mut cur = match mats[0].col(s0) {
            Some((row, _)) => *row,
            None => continue 'start,
        };
        for i in (1..=k).rev() {
            chain[i] = cur;
            cur = match mats[i].col(cur) {
                Some((row, _)) => *row,
                None => continue 'start,
            };
        }
        if cur == s0 {
            out.push(chain);
        }
    }
    out
}

fn trace_over_enumeration<L: Clone + Eq>(
    tuple: &MatrixTuple<L>,
    enumeration: &[Vec<usize>],
) -> BeClass<Word<L>> {
    let k = tuple.degree();
    let n = tuple.dim();
    let mut perms = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let image: Vec<usize> = enumeration.iter().map(|c| c[i]).collect();
        let proj = Injection::new(n, image)
            .expect("chains are determined by each coordinate, so projections are injective");
        perms.push(factorize(&proj).1);
    }
    let entries = enumeration
        .iter()
        .map(|c| {
            let mut w = Word(Vec::new());
            for (i, m) in tuple.matrices().iter().enumerate() {
                w = w.concat(&m.col(c[i]).expect("chain steps hit entries").1);
            }
            Some(w)
        })
        .collect();
    BeClass::from_raw(perms, entries)
}

/// Trace of a matrix tuple: the class of the chain permutations with the
/// concatenated entry words along each chain.
pub fn multitrace<L: Clone + Eq>(tuple: &MatrixTuple<L>) -> BeClass<Word<L>> {
    trace_over_enumeration(tuple, &chains(tuple))
}

/// Same trace computed over a caller-chosen enumeration of the chains;
/// `order[c]` picks the position-c chain out of the canonical list. The
/// result never depends on the ordering.
pub fn multitrace_with_ordering<L: Clone + Eq>(
    tuple: &MatrixTuple<L>,
    order: &[usize],
) -> BeClass<Word<L>> {
    let canonical = chains(tuple);
    assert_eq!(order.len(), canonical.len(), "not a permutation of chains");
    let mut seen = vec![false; canonical.len()];
    let reordered: Vec<Vec<usize>> = order
        .iter()
        .map(|&c| {
            assert!(!seen[c], "not a permutation of chains");
            seen[c] = true;
            canonical[c].clone()
        })
        .collect();
    trace_over_enumeration(tuple, &reordered)
}

/// Face on trace classes when every level contributed a single letter: the
/// wrap-around face moves the last letter of each entry word to the front,
/// every other face keeps the words.
pub fn class_face_atoms<L: Clone>(c: &BeClass<Word<L>>, i: usize) -> BeClass<Word<L>> {
    if i == c.degree() {
        c.face_with(i, Word::rotate_last_to_front)
    } else {
        c.face(i)
    }
}

/// Cyclic operator on trace classes under the same single-letter reading.
pub fn class_cyclic_atoms<L: Clone>(c: &BeClass<Word<L>>) -> BeClass<Word<L>> {
    c.cyclic_with(Word::rotate_last_to_front)
}

// ---------------------------------------------------------------------------
// additive bases

/// Decomposition of a finite commutative group into independent cyclic
/// summands: elements `0..size` get unique coordinates against generators
/// of known orders. The table is verified on construction.
#[derive(Clone, Debug)]
pub struct AdditiveBasis {
    generators: Vec<usize>,
    orders: Vec<u64>,
    coords: Vec<Vec<u64>>,
}

impl AdditiveBasis {
    pub fn compute(add: &FiniteMonoid) -> AdditiveBasis {
        assert!(
            add.is_commutative() && add.is_group(),
            "additive structure must be a commutative group"
        );
        let n = add.size();
        let zero = add.unit();

        // greedy generating set with representative coordinates by search
        let mut gens: Vec<usize> = Vec::new();
        let mut rep: Vec<Option<Vec<i64>>> = vec![None; n];
        rep[zero] = Some(Vec::new());
        while let Some(g) = (0..n).find(|&z| rep[z].is_none()) {
            gens.push(g);
            let d = gens.len();
            rep = vec![None; n];
            rep[zero] = Some(vec![0; d]);
            let mut queue = VecDeque::from([zero]);
            while let Some(z) = queue.pop_front() {
                let base = rep[z].clone().unwrap();
                for (i, &gi) in gens.iter().enumerate() {
                    let w = add.mul(z, gi);
                    if rep[w].is_none() {
                        let mut c = base.clone();
                        c[i] += 1;
                        rep[w] = Some(c);
                        queue.push_back(w);
                    }
                }
            }
        }
        let d = gens.len();
        let rep: Vec<Vec<i64>> = (0..n).map(|z| rep[z].take().unwrap()).collect();
        let raw_order = |g: usize| -> i64 {
            let mut m = 1;
            let mut acc = g;
            while acc != zero {
                acc = add.mul(acc, g);
                m += 1;
            }
            m
        };

        // the full relation lattice of the chosen generators: walking one
        // generator away from any element relates the two representative
        // coordinate vectors; generator orders close it up
        let mut rel = IntegerMatrix::zero(d, n * d + d);
        let mut col = 0;
        for z in 0..n {
            for i in 0..d {
                let w = add.mul(z, gens[i]);
                for j in 0..d {
                    let mut v = rep[z][j] - rep[w][j];
                    if j == i {
                        v += 1;
                    }
                    rel.set(j, col, BigInt::from(v));
                }
                col += 1;
            }
        }
        for (i, &g) in gens.iter().enumerate() {
            rel.set(i, col, BigInt::from(raw_order(g)));
            col += 1;
        }

        // diagonalize; the inverse row transform names the independent
        // generators, trivial factors drop out
        let s = snf(&rel);
        let diag = s.diagonal();
        let scale = |g: usize, e: &BigInt| -> usize {
            let m = BigInt::from(raw_order(g));
            let e = e.mod_floor(&m).to_u64().unwrap();
            let mut acc = zero;
            for _ in 0..e {
                acc = add.mul(acc, g);
            }
            acc
        };
        let mut generators = Vec::new();
        let mut orders = Vec::new();
        let mut kept = Vec::new();
        for j in 0..d {
            let order = diag[j].to_u64().expect("finite group has finite orders");
            assert!(order >= 1, "relation lattice of a finite group has full rank");
            if order == 1 {
                continue;
            }
            let mut f = zero;
            for i in 0..d {
                f = add.mul(f, scale(gens[i], s.u_inv.get(i, j)));
            }
            generators.push(f);
            orders.push(order);
            kept.push(j);
        }
        let coords: Vec<Vec<u64>> = (0..n)
            .map(|z| {
                kept.iter()
                    .zip(&orders)
                    .map(|(&j, &order)| {
                        let mut y = BigInt::zero();
                        for i in 0..d {
                            y += s.u.get(j, i) * BigInt::from(rep[z][i]);
                        }
                        y.mod_floor(&BigInt::from(order)).to_u64().unwrap()
                    })
                    .collect()
            })
            .collect();

        let basis = AdditiveBasis {
            generators,
            orders,
            coords,
        };
        basis.verify(add);
        basis
    }

    /// Basis of an n x n matrix ring over a based ring: one copy of the
    /// scalar basis per matrix position, in the row-major digit encoding
    /// used by the matrix ring constructor.
    pub fn for_matrix_ring(base: &FiniteRing, inner: &AdditiveBasis, n: usize) -> AdditiveBasis {
        let r = base.size();
        let count = r.pow((n * n) as u32);
        let d_in = inner.dim();
        let mut generators = Vec::new();
        let mut orders = Vec::new();
        for pos in 0..n * n {
            for c in 0..d_in {
                let mut digits = vec![base.zero(); n * n];
                digits[pos] = inner.generators[c];
                generators.push(digits.iter().rev().fold(0, |acc, &v| acc * r + v));
                orders.push(inner.orders[c]);
            }
        }
        let coords = (0..count)
            .map(|x| {
                let mut v = Vec::with_capacity(n * n * d_in);
                for pos in 0..n * n {
                    let digit = (x / r.pow(pos as u32)) % r;
                    v.extend_from_slice(&inner.coords[digit]);
                }
                v
            })
            .collect();
        AdditiveBasis {
            generators,
            orders,
            coords,
        }
    }

    fn verify(&self, add: &FiniteMonoid) {
        let mut seen = std::collections::HashSet::new();
        for z in 0..add.size() {
            assert!(
                seen.insert(&self.coords[z]),
                "coordinates are not injective"
            );
            assert_eq!(self.compose(add, &self.coords[z]), z, "decompose broken");
        }
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generator(&self, j: usize) -> usize {
        self.generators[j]
    }

    pub fn order(&self, j: usize) -> u64 {
        self.orders[j]
    }

    pub fn decompose(&self, z: usize) -> &[u64] {
        &self.coords[z]
    }

    pub fn compose(&self, add: &FiniteMonoid, coords: &[u64]) -> usize {
        let mut acc = add.unit();
        for (j, &c) in coords.iter().enumerate() {
            for _ in 0..c {
                acc = add.mul(acc, self.generators[j]);
            }
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Hochschild complexes

/// The Hochschild complex of a finite ring over its additive basis: degree
/// k is the (k+1)-fold tensor power presented on basis tuples, with the
/// order of a tuple the gcd of the slot orders. Faces multiply adjacent
/// slots (the last wraps around) and re-expand in the basis.
pub struct HhComplex {
    ring: FiniteRing,
    basis: AdditiveBasis,
}

impl HhComplex {
    pub fn new(ring: &FiniteRing) -> HhComplex {
        let basis = AdditiveBasis::compute(ring.additive_monoid());
        HhComplex {
            ring: ring.clone(),
            basis,
        }
    }

    pub fn with_basis(ring: &FiniteRing, basis: AdditiveBasis) -> HhComplex {
        assert_eq!(basis.coords.len(), ring.size(), "basis for a different ring");
        HhComplex {
            ring: ring.clone(),
            basis,
        }
    }

    pub fn basis(&self) -> &AdditiveBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn generators(&self, k: usize) -> usize {
        self.dim().pow((k + 1) as u32)
    }

    fn decode(&self, x: usize, len: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(len);
        let mut rest = x;
        for _ in 0..len {
            out.push(rest % self.dim());
            rest /= self.dim();
        }
        out
    }

    fn encode(&self, tuple: &[usize]) -> usize {
        tuple.iter().rev().fold(0, |acc, &c| acc * self.dim() + c)
    }

    /// Expansion of a ring element in basis coordinates as (slot value,
    /// coefficient) pairs.
    fn expand(&self, z: usize) -> Vec<(usize, u64)> {
        self.basis
            .decompose(z)
            .iter()
            .enumerate()
            .filter(|(_, &l)| l != 0)
            .map(|(c, &l)| (c, l))
            .collect()
    }

    pub fn face_map(&self, k: usize, i: usize) -> BoundaryMap {
        assert!(k >= 1 && i <= k);
        let rows = self.generators(k - 1);
        let cols = (0..self.generators(k))
            .map(|x| {
                let tup = self.decode(x, k + 1);
                let (slot, a, b) = if i == k {
                    (0, tup[k], tup[0])
                } else {
                    (i, tup[i], tup[i + 1])
                };
                let z = self
                    .ring
                    .mul(self.basis.generator(a), self.basis.generator(b));
                let mut rest: Vec<usize> = if i == k {
                    // merged product leads, then the untouched middle
                    let mut v = vec![0];
                    v.extend_from_slice(&tup[1..k]);
                    v
                } else {
                    let mut v = Vec::with_capacity(k);
                    v.extend_from_slice(&tup[..=i]);
                    v.extend_from_slice(&tup[i + 2..]);
                    v
                };
                let mut col: SparseCol = self
                    .expand(z)
                    .into_iter()
                    .map(|(c, l)| {
                        rest[slot] = c;
                        (self.encode(&rest), BigInt::from(l))
                    })
                    .collect();
                col.sort_by_key(|&(r, _)| r);
                col
            })
            .collect();
        BoundaryMap { rows, cols }
    }

    pub fn degeneracy_map(&self, k: usize, i: usize) -> BoundaryMap {
        assert!(i <= k);
        let one = self.expand(self.ring.one());
        let rows = self.generators(k + 1);
        let cols = (0..self.generators(k))
            .map(|x| {
                let tup = self.decode(x, k + 1);
                let mut col: SparseCol = one
                    .iter()
                    .map(|&(c, l)| {
                        let mut v = Vec::with_capacity(k + 2);
                        v.extend_from_slice(&tup[..=i]);
                        v.push(c);
                        v.extend_from_slice(&tup[i + 1..]);
                        (self.encode(&v), BigInt::from(l))
                    })
                    .collect();
                col.sort_by_key(|&(r, _)| r);
                col
            })
            .collect();
        BoundaryMap { rows, cols }
    }

    pub fn cyclic_map(&self, k: usize) -> BoundaryMap {
        let rows = self.generators(k);
        let cols = (0..self.generators(k))
            .map(|x| {
                let mut tup = self.decode(x, k + 1);
                tup.rotate_right(1);
                vec![(self.encode(&tup), BigInt::one())]
            })
            .collect();
        BoundaryMap { rows, cols }
    }

    /// Alternating sum of the faces.
    pub fn boundary(&self, k: usize) -> BoundaryMap {
        let rows = self.generators(k - 1);
        let mut acc: Vec<std::collections::BTreeMap<usize, BigInt>> =
            vec![std::collections::BTreeMap::new(); self.generators(k)];
        for i in 0..=k {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let f = self.face_map(k, i);
            for (x, col) in f.cols.iter().enumerate() {
                for (r, v) in col {
                    *acc[x].entry(*r).or_insert_with(BigInt::zero) += sign * v;
                }
            }
        }
        BoundaryMap {
            rows,
            cols: acc
                .into_iter()
                .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        }
    }

    pub fn group(&self, k: usize) -> Presentation {
        let gens = self.generators(k);
        let relations = (0..gens)
            .map(|x| {
                let tup = self.decode(x, k + 1);
                let order = tup
                    .iter()
                    .map(|&c| self.basis.order(c))
                    .fold(0u64, |a, b| a.gcd(&b));
                vec![(x, BigInt::from(order))]
            })
            .collect();
        Presentation {
            generators: gens,
            relations,
        }
    }

    /// Chain complex carrying degrees 0..=n+1, so homology is available for
    /// all degrees <= n.
    pub fn chain_complex(&self, n: usize) -> ChainComplex {
        let groups = (0..=n + 1).map(|k| self.group(k)).collect();
        let mut boundaries = vec![BoundaryMap::zero(0, self.generators(0))];
        for k in 1..=n + 1 {
            boundaries.push(self.boundary(k));
        }
        ChainComplex { groups, boundaries }
    }
}

/// Degree-k trace from the Hochschild generators of an n x n matrix ring
/// (matrix-position basis over a scalar basis of dimension `inner_dim`)
/// down to the scalar generators: a tuple of elementary tensors survives
/// exactly when the positions close into a cycle, in which case the scalar
/// parts pass through with coefficient one.
pub fn linear_trace(inner_dim: usize, n: usize, k: usize) -> BoundaryMap {
    let dm = n * n * inner_dim;
    let decode = |x: usize| -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(k + 1);
        let mut rest = x;
        for _ in 0..=k {
            let idx = rest % dm;
            rest /= dm;
            let pos = idx / inner_dim;
            out.push((pos / n, pos % n, idx % inner_dim));
        }
        out
    };
    let rows = inner_dim.pow((k + 1) as u32);
    let cols = (0..dm.pow((k + 1) as u32))
        .map(|x| {
            let parts = decode(x);
            let closes = (0..=k).all(|i| parts[i].1 == parts[(i + 1) % (k + 1)].0);
            if closes {
                let target = parts
                    .iter()
                    .rev()
                    .fold(0, |acc, &(_, _, c)| acc * inner_dim + c);
                vec![(target, BigInt::one())]
            } else {
                Vec::new()
            }
        })
        .collect();
    BoundaryMap { rows, cols }
}

/// Chain map from the unnormalized complex of the multiplicative cyclic
/// bar construction into the Hochschild complex: a tuple of ring elements
/// expands multilinearly over the basis.
pub fn bcy_to_hh(hh: &HhComplex, k: usize) -> BoundaryMap {
    let r = hh.ring.size();
    let rows = hh.generators(k);
    let cols = (0..r.pow((k + 1) as u32))
        .map(|x| {
            let mut tuple = Vec::with_capacity(k + 1);
            let mut rest = x;
            for _ in 0..=k {
                tuple.push(rest % r);
                rest /= r;
            }
            // cartesian product of the slot expansions
            let mut acc: Vec<(Vec<usize>, BigInt)> = vec![(Vec::new(), BigInt::one())];
            for &z in &tuple {
                let exp = hh.expand(z);
                let mut next = Vec::with_capacity(acc.len() * exp.len());
                for (prefix, coeff) in &acc {
                    for &(c, l) in &exp {
                        let mut p = prefix.clone();
                        p.push(c);
                        next.push((p, coeff * l));
                    }
                }
                acc = next;
            }
            let mut col: SparseCol = acc
                .into_iter()
                .map(|(tup, coeff)| (hh.encode(&tup), coeff))
                .collect();
            col.sort_by_key(|&(row, _)| row);
            col
        })
        .collect();
    BoundaryMap { rows, cols }
}

/// Zeroth Hochschild homology computed without the complex: the ring
/// modulo additive relations and all commutators.
pub fn hh0_from_commutators(ring: &FiniteRing, basis: &AdditiveBasis) -> AbGroup {
    let d = basis.dim();
    let mut relations: Vec<SparseCol> = (0..d)
        .map(|j| vec![(j, BigInt::from(basis.order(j)))])
        .collect();
    for a in 0..ring.size() {
        for b in 0..ring.size() {
            let ab = basis.decompose(ring.mul(a, b));
            let ba = basis.decompose(ring.mul(b, a));
            let col: SparseCol = (0..d)
                .map(|j| (j, BigInt::from(ab[j]) - BigInt::from(ba[j])))
                .filter(|(_, v)| !v.is_zero())
                .collect();
            if !col.is_empty() {
                relations.push(col);
            }
        }
    }
    ab_group(&Presentation {
        generators: d,
        relations,
    })
}

/// Trace maps in degrees 0..=i_max pushed to homology, from the Hochschild
/// complex of the n x n matrices over `base` to that of `base` itself.
pub fn morita_maps(
    base: &FiniteRing,
    n: usize,
    i_max: usize,
) -> Result<Vec<crate::abelian::InducedMap>, crate::barcons::TableError> {
    let inner = AdditiveBasis::compute(base.additive_monoid());
    let mring = base.matrix_ring(n)?;
    let mbasis = AdditiveBasis::for_matrix_ring(base, &inner, n);
    let hh_m = HhComplex::with_basis(&mring, mbasis);
    let hh_r = HhComplex::with_basis(base, inner);
    let cm = hh_m.chain_complex(i_max);
    let cr = hh_r.chain_complex(i_max);
    let mut out = Vec::with_capacity(i_max + 1);
    for i in 0..=i_max {
        let t = linear_trace(hh_r.dim(), n, i);
        out.push(
            crate::abelian::induced_on_homology(&cm, &cr, &t, i)
                .expect("trace maps cycles to cycles"),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{homology, ColumnEchelon};
    use crate::builtins;
    use crate::injcat::Permutation;

    type Atom = (usize, usize, usize); // (level, row, col)

    fn atom_matrix(dim: usize, level: usize, entries: &[(usize, usize)]) -> BasedMatrix<Atom> {
        let triples: Vec<(usize, usize, Word<Atom>)> = entries
            .iter()
            .map(|&(s, t)| (s, t, Word::atom((level, s, t))))
            .collect();
        BasedMatrix::from_entries(dim, &triples).unwrap()
    }

    #[test]
    fn anti_diagonal_worked_example() {
        // both levels hold the 2x2 anti-diagonal matrix
        let a0 = atom_matrix(2, 0, &[(2, 1), (1, 2)]);
        let a1 = atom_matrix(2, 1, &[(2, 1), (1, 2)]);
        let t = MatrixTuple::new(vec![a0, a1]);
        assert_eq!(chains(&t), vec![vec![1, 2], vec![2, 1]]);
        let c = multitrace(&t);
        assert_eq!(c.degree(), 1);
        assert_eq!(c.arity(), 2);
        assert_eq!(c.perms()[0], Permutation::identity(2));
        assert_eq!(c.perms()[1], Permutation::from_image(vec![2, 1]).unwrap());
        assert_eq!(c.entries()[0], Word(vec![(0, 2, 1), (1, 1, 2)]));
        assert_eq!(c.entries()[1], Word(vec![(0, 1, 2), (1, 2, 1)]));
    }

    #[test]
    fn trace_is_enumeration_independent() {
        let a0 = atom_matrix(3, 0, &[(2, 1), (3, 2), (1, 3)]);
        let a1 = atom_matrix(3, 1, &[(1, 2), (2, 3), (3, 1)]);
        let t = MatrixTuple::new(vec![a0, a1]);
        let m = chains(&t).len();
        assert_eq!(m, 3);
        let base = multitrace(&t);
        let orders = [
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ];
        for ord in orders {
            assert_eq!(multitrace_with_ordering(&t, &ord), base, "{ord:?}");
        }
    }

    /// All 2x2 single-atom matrices: every column independently empty or
    /// carrying one of two rows.
    fn all_single_atom(dim: usize, level: usize) -> Vec<BasedMatrix<Atom>> {
        let mut out = Vec::new();
        let choices = dim + 1; // none, or a row
        for code in 0..choices.pow(dim as u32) {
            let mut entries = Vec::new();
            let mut rest = code;
            for t in 1..=dim {
                let c = rest % choices;
                rest /= choices;
                if c > 0 {
                    entries.push((c, t));
                }
            }
            out.push(atom_matrix(dim, level, &entries));
        }
        out
    }

    #[test]
    fn trace_commutes_with_faces_and_cyclic_exhaustively() {
        // degree 1, dimension 2: all pairs of single-atom matrices
        let level0 = all_single_atom(2, 0);
        let level1 = all_single_atom(2, 1);
        for a0 in &level0 {
            for a1 in &level1 {
                let t = MatrixTuple::new(vec![a0.clone(), a1.clone()]);
                let c = multitrace(&t);
                for i in 0..=1 {
                    assert_eq!(
                        multitrace(&t.face(i)),
                        class_face_atoms(&c, i),
                        "face {i} of {t:?}"
                    );
                }
                assert_eq!(
                    multitrace(&t.cyclic()),
                    class_cyclic_atoms(&c),
                    "cyclic of {t:?}"
                );
                for i in 0..=1 {
                    let s = t.degeneracy(i);
                    // inserted identity levels contribute empty segments,
                    // so the degenerate trace has the same entry words
                    let cs = multitrace(&s);
                    assert_eq!(cs.degree(), 2);
                    assert_eq!(cs, c.degeneracy(i), "degeneracy {i} of {t:?}");
                }
            }
        }
    }

    #[test]
    fn trace_is_a_block_sum_homomorphism() {
        let a = MatrixTuple::new(vec![
            atom_matrix(2, 0, &[(2, 1), (1, 2)]),
            atom_matrix(2, 1, &[(2, 1), (1, 2)]),
        ]);
        let b = MatrixTuple::new(vec![
            atom_matrix(3, 0, &[(1, 1), (3, 2)]),
            atom_matrix(3, 1, &[(1, 1), (2, 3)]),
        ]);
        assert_eq!(
            multitrace(&a.block_sum(&b)),
            multitrace(&a).multiply(&multitrace(&b))
        );
    }

    #[test]
    fn trace_is_natural_in_entry_maps() {
        let t = MatrixTuple::new(vec![
            atom_matrix(2, 0, &[(2, 1), (1, 2)]),
            atom_matrix(2, 1, &[(2, 1), (1, 2)]),
        ]);
        // kill every atom that touches column 1 at level 0
        let f = |a: &Atom| -> Option<Atom> {
            if *a == (0, 2, 1) {
                None
            } else {
                Some(*a)
            }
        };
        let lhs = multitrace(&t.map_atoms(f));
        let rhs = multitrace(&t).map_entries(|_, w| {
            w.0.iter().map(f).collect::<Option<Vec<Atom>>>().map(Word)
        });
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn additive_basis_of_cyclic_and_klein_groups() {
        let b = AdditiveBasis::compute(&builtins::cyclic_group(12));
        assert_eq!(b.dim(), 1);
        assert_eq!(b.order(0), 12);
        let klein = builtins::f2x();
        let b = AdditiveBasis::compute(klein.additive_monoid());
        assert_eq!(b.dim(), 2);
        assert_eq!((b.order(0), b.order(1)), (2, 2));
    }

    #[test]
    fn matrix_ring_basis_agrees_with_direct_computation() {
        let z4 = builtins::z4();
        let inner = AdditiveBasis::compute(z4.additive_monoid());
        let m = z4.matrix_ring(2).unwrap();
        let fast = AdditiveBasis::for_matrix_ring(&z4, &inner, 2);
        fast.verify(m.additive_monoid());
        let direct = AdditiveBasis::compute(m.additive_monoid());
        assert_eq!(fast.dim(), direct.dim());
        let mut fast_orders = fast.orders.clone();
        let mut direct_orders = direct.orders.clone();
        fast_orders.sort_unstable();
        direct_orders.sort_unstable();
        assert_eq!(fast_orders, direct_orders);
    }

    fn hh_golden(ring: &FiniteRing, want: &[AbGroup]) {
        let hh = HhComplex::new(ring);
        let c = hh.chain_complex(want.len() - 1);
        c.check_dd_zero().unwrap();
        for (i, w) in want.iter().enumerate() {
            assert_eq!(homology(&c, i).unwrap(), *w, "degree {i} of {}", ring.name());
        }
    }

    #[test]
    fn hochschild_golden_tables() {
        hh_golden(
            &builtins::z2(),
            &[
                AbGroup::torsion_i64(&[2]),
                AbGroup::free(0),
                AbGroup::free(0),
            ],
        );
        hh_golden(
            &builtins::z4(),
            &[
                AbGroup::torsion_i64(&[4]),
                AbGroup::free(0),
                AbGroup::free(0),
            ],
        );
        // dual numbers: the degree-1 cycles 1@x and x@x both survive, so
        // the group of differentials has two independent order-2 classes
        let hh = HhComplex::new(&builtins::f2x());
        let c = hh.chain_complex(1);
        assert_eq!(homology(&c, 0).unwrap(), AbGroup::torsion_i64(&[2, 2]));
        assert_eq!(homology(&c, 1).unwrap(), AbGroup::torsion_i64(&[2, 2]));
    }

    #[test]
    fn hochschild_face_identities_hold_modulo_relations() {
        let hh = HhComplex::new(&builtins::f2x());
        for k in 2..=3 {
            let rel = ColumnEchelon::from_columns(
                hh.generators(k - 1),
                hh.group(k - 1).relations.into_iter(),
            );
            for j in 1..=k {
                for i in 0..j {
                    let a = hh.face_map(k, j);
                    let b = hh.face_map(k - 1, i);
                    let c = hh.face_map(k, i);
                    let d = hh.face_map(k - 1, j - 1);
                    for x in 0..hh.generators(k) {
                        let lhs = b.apply(&a.cols[x]);
                        let rhs = d.apply(&c.cols[x]);
                        let diff = crate::abelian::sparse_axpy(
                            &lhs,
                            &BigInt::from(-1),
                            &rhs,
                        );
                        assert!(
                            diff.is_empty() || rel.contains(&diff),
                            "d_{i} d_{j} mismatch at {x} in degree {k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hh0_paths_agree() {
        for ring in [builtins::z2(), builtins::z4(), builtins::f2x(), builtins::m2z2()] {
            let hh = HhComplex::new(&ring);
            let c = hh.chain_complex(0);
            let via_complex = homology(&c, 0).unwrap();
            let via_commutators = hh0_from_commutators(&ring, hh.basis());
            assert_eq!(via_complex, via_commutators, "{}", ring.name());
        }
        // the matrix algebra abelianizes to the scalars
        let hh = HhComplex::new(&builtins::m2z2());
        let c = hh.chain_complex(0);
        assert_eq!(homology(&c, 0).unwrap(), AbGroup::torsion_i64(&[2]));
    }

    #[test]
    fn bcy_to_hh_is_a_chain_map_mod_relations() {
        use crate::barcons::cyclic_bar;
        use crate::simplicial::{chain_complex, ComplexMode};
        let ring = builtins::f2x();
        let hh = HhComplex::new(&ring);
        let bcy = cyclic_bar(ring.multiplicative_monoid(), 3);
        let full = chain_complex(&bcy, 2, ComplexMode::Full).unwrap();
        for k in 1..=2 {
            let rel = ColumnEchelon::from_columns(
                hh.generators(k - 1),
                hh.group(k - 1).relations.into_iter(),
            );
            let top = bcy_to_hh(&hh, k);
            let bottom = bcy_to_hh(&hh, k - 1);
            let d_src = &full.boundaries[k];
            let d_tgt = hh.boundary(k);
            for x in 0..full.groups[k].generators {
                let lhs = d_tgt.apply(&top.cols[x]);
                let rhs = bottom.apply(&d_src.cols[x]);
                let diff = crate::abelian::sparse_axpy(&lhs, &BigInt::from(-1), &rhs);
                assert!(
                    diff.is_empty() || rel.contains(&diff),
                    "square fails at {x} in degree {k}"
                );
            }
        }
    }

    #[test]
    fn morita_trace_is_iso_for_z2_in_low_degrees() {
        let maps = morita_maps(&builtins::z2(), 2, 1).unwrap();
        for (i, m) in maps.iter().enumerate() {
            assert!(m.is_iso(), "degree {i}: {} -> {}", m.source, m.target);
        }
        assert_eq!(maps[0].source, AbGroup::torsion_i64(&[2]));
    }
}
