//! Finite monoids and rings given by explicit multiplication tables, and
//! the simplicial sets built from them.
//!
//! The bar construction of a monoid G has k-simplices G^k; the cyclic bar
//! construction has k-simplices G^{k+1}, with faces multiplying adjacent
//! entries (the last face of the cyclic version wraps around), degeneracies
//! inserting the unit, and the cyclic operator rotating. Tuples are encoded
//! little-endian: coordinate 0 is the lowest digit.
//!
//! For a commutative group G the cyclic bar construction splits as
//! G x (bar G) via `(g0,...,gk) -> (g0...gk, (g1,...,gk))`; the splitting
//! genuinely needs inverses, so [`cyclic_bar_split`] refuses non-groups.

use crate::simplicial::{Carrier, ConstantCarrier, LevelMap, ProductCarrier, SimplicialSet};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("element {0} is out of range")]
    OutOfRange(usize),
    #[error("table row count {rows} does not match {size} elements")]
    BadShape { rows: usize, size: usize },
    #[error("no two-sided unit")]
    NoUnit,
    #[error("multiplication not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("addition not commutative at ({0}, {1})")]
    AddNotCommutative(usize, usize),
    #[error("element {0} has no additive inverse")]
    NoNegation(usize),
    #[error("distributivity fails at ({0}, {1}, {2})")]
    NotDistributive(usize, usize, usize),
    #[error("matrix ring on {elements} elements and rank {n} exceeds the size guard")]
    TooLarge { elements: usize, n: usize },
}

/// Finite monoid on elements `0..size` with a validated multiplication
/// table; element 0 need not be the unit.
#[derive(Clone, Debug)]
pub struct FiniteMonoid {
    size: usize,
    unit: usize,
    mul: Vec<usize>, // row-major: mul[a * size + b]
    labels: Vec<String>,
    name: String,
}

impl FiniteMonoid {
    pub fn new(
        name: &str,
        labels: Vec<String>,
        mul_table: &[Vec<usize>],
    ) -> Result<Self, TableError> {
        let size = labels.len();
        if mul_table.len() != size {
            return Err(TableError::BadShape {
                rows: mul_table.len(),
                size,
            });
        }
        let mut mul = Vec::with_capacity(size * size);
        for row in mul_table {
            if row.len() != size {
                return Err(TableError::BadShape {
                    rows: row.len(),
                    size,
                });
            }
            for &v in row {
                if v >= size {
                    return Err(TableError::OutOfRange(v));
                }
                mul.push(v);
            }
        }
        let at = |a: usize, b: usize| mul[a * size + b];
        let unit = (0..size)
            .find(|&e| (0..size).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or(TableError::NoUnit)?;
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(TableError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(FiniteMonoid {
            size,
            unit,
            mul,
            labels,
            name: name.to_string(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn product<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.unit, |a, b| self.mul(a, b))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Every element invertible. For finite monoids this is equivalent to
    /// both cancellation laws, but we check inverses directly.
    pub fn is_group(&self) -> bool {
        (0..self.size).all(|a| self.inverse(a).is_some())
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.size).find(|&b| self.mul(a, b) == self.unit && self.mul(b, a) == self.unit)
    }

    /// Submonoid of invertible elements, with labels carried over.
    pub fn units(&self) -> FiniteMonoid {
        let invertible: Vec<usize> = (0..self.size)
            .filter(|&a| self.inverse(a).is_some())
            .collect();
        let index_of: std::collections::HashMap<usize, usize> = invertible
            .iter()
            .enumerate()
            .map(|(i, &a)| (a, i))
            .collect();
        let table: Vec<Vec<usize>> = invertible
            .iter()
            .map(|&a| {
                invertible
                    .iter()
                    .map(|&b| index_of[&self.mul(a, b)])
                    .collect()
            })
            .collect();
        let labels = invertible
            .iter()
            .map(|&a| self.labels[a].clone())
            .collect();
        FiniteMonoid::new(&format!("units({})", self.name), labels, &table)
            .expect("units of a monoid form a group")
    }
}

/// Finite ring: a commutative additive group and a multiplicative monoid on
/// the same elements, linked by distributivity.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    add: FiniteMonoid,
    mul: FiniteMonoid,
    neg: Vec<usize>,
}

impl FiniteRing {
    pub fn new(
        name: &str,
        labels: Vec<String>,
        add_table: &[Vec<usize>],
        mul_table: &[Vec<usize>],
    ) -> Result<Self, TableError> {
        let add = FiniteMonoid::new(&format!("{name}.add"), labels.clone(), add_table)?;
        let mul = FiniteMonoid::new(name, labels, mul_table)?;
        let size = add.size();
        for a in 0..size {
            for b in 0..size {
                if add.mul(a, b) != add.mul(b, a) {
                    return Err(TableError::AddNotCommutative(a, b));
                }
            }
        }
        let mut neg = Vec::with_capacity(size);
        for a in 0..size {
            neg.push(add.inverse(a).ok_or(TableError::NoNegation(a))?);
        }
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    let bc = add.mul(b, c);
                    if mul.mul(a, bc) != add.mul(mul.mul(a, b), mul.mul(a, c))
                        || mul.mul(bc, a) != add.mul(mul.mul(b, a), mul.mul(c, a))
                    {
                        return Err(TableError::NotDistributive(a, b, c));
                    }
                }
            }
        }
        Ok(FiniteRing { add, mul, neg })
    }

    pub fn size(&self) -> usize {
        self.add.size()
    }

    pub fn name(&self) -> &str {
        self.mul.name()
    }

    pub fn label(&self, a: usize) -> &str {
        self.mul.label(a)
    }

    pub fn zero(&self) -> usize {
        self.add.unit()
    }

    pub fn one(&self) -> usize {
        self.mul.unit()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.mul(a, b)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.mul(a, b)
    }

    pub fn additive_monoid(&self) -> &FiniteMonoid {
        &self.add
    }

    pub fn multiplicative_monoid(&self) -> &FiniteMonoid {
        &self.mul
    }

    /// Group of multiplicatively invertible elements.
    pub fn units(&self) -> FiniteMonoid {
        self.mul.units()
    }

    /// Ring of n x n matrices, entries row-major in the element encoding:
    /// a matrix is a base-|R| number whose digit `i*n + j` is the (i,j)
    /// entry. Guarded so the element count |R|^(n^2) stays below 2^20.
    pub fn matrix_ring(&self, n: usize) -> Result<FiniteRing, TableError> {
        let r = self.size();
        let count = r
            .checked_pow((n * n) as u32)
            .filter(|&c| c <= 1 << 20)
            .ok_or(TableError::TooLarge {
                elements: r,
                n,
            })?;
        if count > 1 << 20 {
            return Err(TableError::TooLarge { elements: r, n });
        }
        let decode = |x: usize| -> Vec<usize> {
            let mut digits = Vec::with_capacity(n * n);
            let mut rest = x;
            for _ in 0..n * n {
                digits.push(rest % r);
                rest /= r;
            }
            digits
        };
        let encode = |m: &[usize]| -> usize {
            m.iter().rev().fold(0, |acc, &d| acc * r + d)
        };
        let labels: Vec<String> = (0..count)
            .map(|x| {
                let m = decode(x);
                let rows: Vec<String> = (0..n)
                    .map(|i| {
                        let row: Vec<&str> =
                            (0..n).map(|j| self.label(m[i * n + j])).collect();
                        row.join(",")
                    })
                    .collect();
                format!("[{}]", rows.join(";"))
            })
            .collect();
        let mut add_table = vec![vec![0; count]; count];
        let mut mul_table = vec![vec![0; count]; count];
        for x in 0..count {
            let mx = decode(x);
            for y in 0..count {
                let my = decode(y);
                let sum: Vec<usize> = mx
                    .iter()
                    .zip(&my)
                    .map(|(&a, &b)| self.add(a, b))
                    .collect();
                add_table[x][y] = encode(&sum);
                let mut prod = vec![self.zero(); n * n];
                for i in 0..n {
                    for j in 0..n {
                        let mut acc = self.zero();
                        for k in 0..n {
                            acc = self.add(acc, self.mul(mx[i * n + k], my[k * n + j]));
                        }
                        prod[i * n + j] = acc;
                    }
                }
                mul_table[x][y] = encode(&prod);
            }
        }
        FiniteRing::new(
            &format!("M{}({})", n, self.name()),
            labels,
            &add_table,
            &mul_table,
        )
    }

    /// Matrix entry (i, j) of the encoded matrix `x`.
    pub fn matrix_entry(&self, n: usize, x: usize, i: usize, j: usize) -> usize {
        let r = self.size();
        (x / r.pow((i * n + j) as u32)) % r
    }
}

// ---------------------------------------------------------------------------
// tuple codecs shared by the bar carriers

fn decode_tuple(mut x: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % base);
        x /= base;
    }
    out
}

fn encode_tuple(digits: &[usize], base: usize) -> usize {
    digits.iter().rev().fold(0, |acc, &d| acc * base + d)
}

/// Bar construction: degree k is G^k, faces multiply neighbours (outer
/// faces drop an end), degeneracies insert the unit.
pub struct BarCarrier {
    monoid: FiniteMonoid,
}

impl Carrier for BarCarrier {
    fn size(&self, k: usize) -> usize {
        self.monoid.size().pow(k as u32)
    }

    fn face(&self, k: usize, i: usize, x: usize) -> usize {
        let g = decode_tuple(x, self.monoid.size(), k);
        let mut out = Vec::with_capacity(k - 1);
        if i == 0 {
            out.extend_from_slice(&g[1..]);
        } else if i == k {
            out.extend_from_slice(&g[..k - 1]);
        } else {
            out.extend_from_slice(&g[..i - 1]);
            out.push(self.monoid.mul(g[i - 1], g[i]));
            out.extend_from_slice(&g[i + 1..]);
        }
        encode_tuple(&out, self.monoid.size())
    }

    fn degeneracy(&self, k: usize, i: usize, x: usize) -> usize {
        let g = decode_tuple(x, self.monoid.size(), k);
        let mut out = Vec::with_capacity(k + 1);
        out.extend_from_slice(&g[..i]);
        out.push(self.monoid.unit());
        out.extend_from_slice(&g[i..]);
        encode_tuple(&out, self.monoid.size())
    }

    fn label(&self, k: usize, x: usize) -> String {
        let g = decode_tuple(x, self.monoid.size(), k);
        let parts: Vec<&str> = g.iter().map(|&a| self.monoid.label(a)).collect();
        format!("[{}]", parts.join("|"))
    }
}

/// Cyclic bar construction: degree k is G^{k+1}. The last face wraps the
/// final entry around onto the first, the cyclic operator rotates the tuple
/// one step to the right.
pub struct CyclicBarCarrier {
    monoid: FiniteMonoid,
}

impl Carrier for CyclicBarCarrier {
    fn size(&self, k: usize) -> usize {
        self.monoid.size().pow((k + 1) as u32)
    }

    fn face(&self, k: usize, i: usize, x: usize) -> usize {
        let g = decode_tuple(x, self.monoid.size(), k + 1);
        let mut out = Vec::with_capacity(k);
        if i == k {
            out.push(self.monoid.mul(g[k], g[0]));
            out.extend_from_slice(&g[1..k]);
        } else {
            out.extend_from_slice(&g[..i]);
            out.push(self.monoid.mul(g[i], g[i + 1]));
            out.extend_from_slice(&g[i + 2..]);
        }
        encode_tuple(&out, self.monoid.size())
    }

    fn degeneracy(&self, k: usize, i: usize, x: usize) -> usize {
        let g = decode_tuple(x, self.monoid.size(), k + 1);
        let mut out = Vec::with_capacity(k + 2);
        out.extend_from_slice(&g[..i + 1]);
        out.push(self.monoid.unit());
        out.extend_from_slice(&g[i + 1..]);
        encode_tuple(&out, self.monoid.size())
    }

    fn cyclic(&self, k: usize, x: usize) -> usize {
        let mut g = decode_tuple(x, self.monoid.size(), k + 1);
        g.rotate_right(1);
        encode_tuple(&g, self.monoid.size())
    }

    fn is_cyclic(&self) -> bool {
        true
    }

    fn label(&self, k: usize, x: usize) -> String {
        let g = decode_tuple(x, self.monoid.size(), k + 1);
        let parts: Vec<&str> = g.iter().map(|&a| self.monoid.label(a)).collect();
        format!("({})", parts.join("|"))
    }
}

pub fn bar(monoid: &FiniteMonoid, truncation: usize) -> SimplicialSet {
    SimplicialSet::with_truncation(
        Arc::new(BarCarrier {
            monoid: monoid.clone(),
        }),
        truncation,
    )
}

pub fn cyclic_bar(monoid: &FiniteMonoid, truncation: usize) -> SimplicialSet {
    SimplicialSet::with_truncation(
        Arc::new(CyclicBarCarrier {
            monoid: monoid.clone(),
        }),
        truncation,
    )
}

/// Constant simplicial set on the underlying set of G.
pub fn constant(monoid: &FiniteMonoid, truncation: usize) -> SimplicialSet {
    SimplicialSet::with_truncation(
        Arc::new(ConstantCarrier {
            labels: (0..monoid.size())
                .map(|a| monoid.label(a).to_string())
                .collect(),
            basepoint: None,
        }),
        truncation,
    )
}

/// G x (bar G) with the product structure.
pub fn group_times_bar(monoid: &FiniteMonoid, truncation: usize) -> SimplicialSet {
    SimplicialSet::with_truncation(
        Arc::new(ProductCarrier {
            a: Arc::new(ConstantCarrier {
                labels: (0..monoid.size())
                    .map(|a| monoid.label(a).to_string())
                    .collect(),
                basepoint: None,
            }),
            b: Arc::new(BarCarrier {
                monoid: monoid.clone(),
            }),
        }),
        truncation,
    )
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SplitError {
    #[error("splitting needs a commutative monoid")]
    NotCommutative,
    #[error("splitting needs inverses; the monoid is not a group")]
    NotGroup,
}

/// Multiply out a cyclic bar simplex. For commutative monoids this is
/// constant on faces, degeneracies, and rotations, and retracts the
/// degree-k inclusion g -> (g, 1, ..., 1); anything else is refused
/// because the map fails to be simplicial.
pub fn split_r(monoid: &FiniteMonoid, simplex: &[usize]) -> Result<usize, SplitError> {
    if !monoid.is_commutative() {
        return Err(SplitError::NotCommutative);
    }
    Ok(monoid.product(simplex.iter().copied()))
}

/// The levelwise map `(g0,...,gk) -> (g0...gk, (g1,...,gk))` from the
/// cyclic bar construction to G x (bar G), together with its inverse
/// `(p, (g1,...,gk)) -> (p (g1...gk)^{-1}, g1, ..., gk)`. Simplicial in
/// both directions only when G is a commutative group, so anything else is
/// refused.
pub fn cyclic_bar_split(
    monoid: &FiniteMonoid,
    truncation: usize,
) -> Result<(LevelMap, LevelMap), SplitError> {
    if !monoid.is_commutative() {
        return Err(SplitError::NotCommutative);
    }
    if !monoid.is_group() {
        return Err(SplitError::NotGroup);
    }
    let n = monoid.size();
    let mut forward = Vec::with_capacity(truncation + 1);
    let mut backward = Vec::with_capacity(truncation + 1);
    for k in 0..=truncation {
        let mut fwd = Vec::with_capacity(n.pow((k + 1) as u32));
        for x in 0..n.pow((k + 1) as u32) {
            let g = decode_tuple(x, n, k + 1);
            let total = monoid.product(g.iter().copied());
            let tail = encode_tuple(&g[1..], n);
            fwd.push(total * n.pow(k as u32) + tail);
        }
        forward.push(fwd);
        let mut bwd = Vec::with_capacity(n.pow((k + 1) as u32));
        for y in 0..n.pow((k + 1) as u32) {
            let p = y / n.pow(k as u32);
            let tail = decode_tuple(y % n.pow(k as u32), n, k);
            let rest = monoid.product(tail.iter().copied());
            let g0 = monoid
                .mul(p, monoid.inverse(rest).expect("group checked above"));
            let mut g = Vec::with_capacity(k + 1);
            g.push(g0);
            g.extend_from_slice(&tail);
            bwd.push(encode_tuple(&g, n));
        }
        backward.push(bwd);
    }
    Ok((LevelMap { degrees: forward }, LevelMap { degrees: backward }))
}
