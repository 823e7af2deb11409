//! Simplicial and cyclic sets with enumerated degrees.
//!
//! A [`Carrier`] names the simplices of each degree by indices `0..size(k)`
//! and implements the structure operators on those indices. A
//! [`SimplicialSet`] wraps a carrier with an explicit truncation degree (the
//! highest degree whose simplices we promise to enumerate) and caches
//! degeneracy information per degree.
//!
//! Chain complexes are extracted in two flavours: `Normalized` (one
//! generator per nondegenerate simplex, degenerate faces dropped) and `Full`
//! (one generator per simplex). Both give the same homology; the normalized
//! one is far smaller and is the default everywhere.
//!
//! The standard simplicial circle and its variants live here too, with
//! their cyclic structure: degree `k` of the circle has a basepoint `u0`
//! and simplices `u1..uk`, and the cyclic operator rotates all `k+1` of
//! them. The disjoint-basepoint variant keeps an extra fixed point `*`.

use crate::abelian::{BoundaryMap, ChainComplex, Presentation, SparseCol};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("degree {degree} exceeds truncation {truncation}")]
pub struct TruncationError {
    pub degree: usize,
    pub truncation: usize,
}

/// Indexed simplices plus structure operators. `face` and `degeneracy` are
/// only called with `k` within the wrapping set's truncation, `i` within the
/// simplicial range for that degree and `x < size(k)`.
pub trait Carrier: Send + Sync {
    fn size(&self, k: usize) -> usize;
    /// d_i: degree k -> k-1, for k >= 1 and 0 <= i <= k.
    fn face(&self, k: usize, i: usize, x: usize) -> usize;
    /// s_i: degree k -> k+1, for 0 <= i <= k.
    fn degeneracy(&self, k: usize, i: usize, x: usize) -> usize;
    /// t_k: degree k -> k, of order k+1. Only called when `is_cyclic`.
    fn cyclic(&self, _k: usize, _x: usize) -> usize {
        panic!("carrier has no cyclic structure")
    }
    fn is_cyclic(&self) -> bool {
        false
    }
    /// Degreewise basepoint for carriers of based sets.
    fn basepoint(&self, _k: usize) -> Option<usize> {
        None
    }
    fn label(&self, _k: usize, x: usize) -> String {
        format!("#{x}")
    }
}

pub const DEFAULT_TRUNCATION: usize = 5;

struct DegreeInfo {
    size: usize,
    degenerate: Vec<bool>,
    nondegenerate: Vec<usize>,
    /// position in `nondegenerate`, None for degenerate simplices
    position: Vec<Option<usize>>,
}

#[derive(Clone)]
pub struct SimplicialSet {
    carrier: Arc<dyn Carrier>,
    truncation: usize,
    cache: Arc<Mutex<HashMap<usize, Arc<DegreeInfo>>>>,
}

impl fmt::Debug for SimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialSet(truncation {})", self.truncation)
    }
}

impl SimplicialSet {
    pub fn new(carrier: Arc<dyn Carrier>) -> Self {
        SimplicialSet::with_truncation(carrier, DEFAULT_TRUNCATION)
    }

    pub fn with_truncation(carrier: Arc<dyn Carrier>, truncation: usize) -> Self {
        SimplicialSet {
            carrier,
            truncation,
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    fn in_range(&self, degree: usize) -> Result<(), TruncationError> {
        if degree > self.truncation {
            Err(TruncationError {
                degree,
                truncation: self.truncation,
            })
        } else {
            Ok(())
        }
    }

    pub fn size(&self, k: usize) -> Result<usize, TruncationError> {
        self.in_range(k)?;
        Ok(self.carrier.size(k))
    }

    pub fn face(&self, k: usize, i: usize, x: usize) -> usize {
        debug_assert!(k >= 1 && k <= self.truncation && i <= k);
        debug_assert!(x < self.carrier.size(k));
        let y = self.carrier.face(k, i, x);
        debug_assert!(y < self.carrier.size(k - 1));
        y
    }

    pub fn degeneracy(&self, k: usize, i: usize, x: usize) -> usize {
        debug_assert!(k + 1 <= self.truncation && i <= k);
        debug_assert!(x < self.carrier.size(k));
        let y = self.carrier.degeneracy(k, i, x);
        debug_assert!(y < self.carrier.size(k + 1));
        y
    }

    pub fn cyclic(&self, k: usize, x: usize) -> usize {
        debug_assert!(k <= self.truncation && x < self.carrier.size(k));
        let y = self.carrier.cyclic(k, x);
        debug_assert!(y < self.carrier.size(k));
        y
    }

    pub fn is_cyclic(&self) -> bool {
        self.carrier.is_cyclic()
    }

    pub fn basepoint(&self, k: usize) -> Option<usize> {
        self.carrier.basepoint(k)
    }

    pub fn label(&self, k: usize, x: usize) -> String {
        self.carrier.label(k, x)
    }

    fn degree_info(&self, k: usize) -> Arc<DegreeInfo> {
        let mut cache = self.cache.lock().unwrap();
        if let Some(info) = cache.get(&k) {
            return Arc::clone(info);
        }
        let size = self.carrier.size(k);
        // x is degenerate iff x = s_i(d_i(x)) for some i < k
        let degenerate: Vec<bool> = (0..size)
            .map(|x| {
                (0..k).any(|i| {
                    let y = self.carrier.face(k, i, x);
                    self.carrier.degeneracy(k - 1, i, y) == x
                })
            })
            .collect();
        let nondegenerate: Vec<usize> =
            (0..size).filter(|&x| !degenerate[x]).collect();
        let mut position = vec![None; size];
        for (p, &x) in nondegenerate.iter().enumerate() {
            position[x] = Some(p);
        }
        let info = Arc::new(DegreeInfo {
            size,
            degenerate,
            nondegenerate,
            position,
        });
        cache.insert(k, Arc::clone(&info));
        info
    }

    pub fn is_degenerate(&self, k: usize, x: usize) -> bool {
        self.degree_info(k).degenerate[x]
    }

    pub fn nondegenerate(&self, k: usize) -> Result<Vec<usize>, TruncationError> {
        self.in_range(k)?;
        Ok(self.degree_info(k).nondegenerate.clone())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ComplexMode {
    Normalized,
    Full,
}

/// Chain complex of the simplicial set with integral coefficients, carrying
/// degrees 0..=n+1 so that homology is available for all degrees <= n.
pub fn chain_complex(
    x: &SimplicialSet,
    n: usize,
    mode: ComplexMode,
) -> Result<ChainComplex, TruncationError> {
    let top = n + 1;
    if top > x.truncation() {
        return Err(TruncationError {
            degree: top,
            truncation: x.truncation(),
        });
    }
    let basis: Vec<Vec<usize>> = (0..=top)
        .map(|k| match mode {
            ComplexMode::Normalized => x.degree_info(k).nondegenerate.clone(),
            ComplexMode::Full => (0..x.degree_info(k).size).collect(),
        })
        .collect();
    let groups: Vec<Presentation> = basis.iter().map(|b| Presentation::free(b.len())).collect();

    let mut boundaries = vec![BoundaryMap::zero(0, basis[0].len())];
    for k in 1..=top {
        let info = x.degree_info(k - 1);
        let mut cols = Vec::with_capacity(basis[k].len());
        for &simplex in &basis[k] {
            let mut acc: HashMap<usize, BigInt> = HashMap::new();
            for i in 0..=k {
                let y = x.face(k, i, simplex);
                let row = match mode {
                    ComplexMode::Normalized => match info.position[y] {
                        Some(p) => p,
                        None => continue,
                    },
                    ComplexMode::Full => y,
                };
                let sign = if i % 2 == 0 { 1 } else { -1 };
                *acc.entry(row).or_insert_with(BigInt::zero) += sign;
            }
            let mut col: SparseCol = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            col.sort_by_key(|&(r, _)| r);
            cols.push(col);
        }
        boundaries.push(BoundaryMap {
            rows: basis[k - 1].len(),
            cols,
        });
    }
    Ok(ChainComplex { groups, boundaries })
}

/// A simplicial map recorded levelwise on simplex indices: `degrees[k][x]`
/// is the image of simplex `x` of degree `k`.
#[derive(Clone, Debug)]
pub struct LevelMap {
    pub degrees: Vec<Vec<usize>>,
}

impl LevelMap {
    pub fn from_fn(
        src: &SimplicialSet,
        up_to: usize,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<LevelMap, TruncationError> {
        let mut degrees = Vec::with_capacity(up_to + 1);
        for k in 0..=up_to {
            degrees.push((0..src.size(k)?).map(|x| f(k, x)).collect());
        }
        Ok(LevelMap { degrees })
    }

    pub fn apply(&self, k: usize, x: usize) -> usize {
        self.degrees[k][x]
    }
}

/// Check that a level map commutes with faces and degeneracies for all
/// degrees <= k_max, returning a description of the first failure.
pub fn check_simplicial_map(
    src: &SimplicialSet,
    tgt: &SimplicialSet,
    map: &LevelMap,
    k_max: usize,
) -> Result<(), String> {
    for k in 0..=k_max {
        let size = src.size(k).map_err(|e| e.to_string())?;
        for x in 0..size {
            if k >= 1 {
                for i in 0..=k {
                    let lhs = map.apply(k - 1, src.face(k, i, x));
                    let rhs = tgt.face(k, i, map.apply(k, x));
                    if lhs != rhs {
                        return Err(format!(
                            "face {i} of {} in degree {k} not preserved",
                            src.label(k, x)
                        ));
                    }
                }
            }
            if k + 1 <= k_max {
                for i in 0..=k {
                    let lhs = map.apply(k + 1, src.degeneracy(k, i, x));
                    let rhs = tgt.degeneracy(k, i, map.apply(k, x));
                    if lhs != rhs {
                        return Err(format!(
                            "degeneracy {i} of {} in degree {k} not preserved",
                            src.label(k, x)
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Chain map of a level map in one degree, over the bases used by
/// [`chain_complex`]. In normalized mode, images that are degenerate in the
/// target are sent to zero.
pub fn chain_map(
    src: &SimplicialSet,
    tgt: &SimplicialSet,
    map: &LevelMap,
    degree: usize,
    mode: ComplexMode,
) -> BoundaryMap {
    let src_info = src.degree_info(degree);
    let tgt_info = tgt.degree_info(degree);
    let (src_basis, rows): (Vec<usize>, usize) = match mode {
        ComplexMode::Normalized => (src_info.nondegenerate.clone(), tgt_info.nondegenerate.len()),
        ComplexMode::Full => ((0..src_info.size).collect(), tgt_info.size),
    };
    let cols = src_basis
        .iter()
        .map(|&x| {
            let y = map.apply(degree, x);
            let row = match mode {
                ComplexMode::Normalized => tgt_info.position[y],
                ComplexMode::Full => Some(y),
            };
            match row {
                Some(r) => vec![(r, BigInt::from(1))],
                None => Vec::new(),
            }
        })
        .collect();
    BoundaryMap { rows, cols }
}

// ---------------------------------------------------------------------------
// identity checkers

/// Exhaustively check the simplicial identities on all simplices of degree
/// <= k_max. Degeneracy checks stop one degree early so that no operator
/// leaves the truncation range.
pub fn check_simplicial_identities(x: &SimplicialSet, k_max: usize) -> Result<(), String> {
    let fail = |law: &str, k: usize, s: usize| {
        Err(format!("{law} fails on {} in degree {k}", x.label(k, s)))
    };
    for k in 0..=k_max {
        let size = x.size(k).map_err(|e| e.to_string())?;
        for s in 0..size {
            // d_i d_j = d_{j-1} d_i for i < j
            if k >= 2 {
                for j in 1..=k {
                    for i in 0..j {
                        if x.face(k - 1, i, x.face(k, j, s))
                            != x.face(k - 1, j - 1, x.face(k, i, s))
                        {
                            return fail("d_i d_j = d_(j-1) d_i", k, s);
                        }
                    }
                }
            }
            // s_i s_j = s_{j+1} s_i for i <= j
            if k + 2 <= x.truncation() {
                for j in 0..=k {
                    for i in 0..=j {
                        if x.degeneracy(k + 1, i, x.degeneracy(k, j, s))
                            != x.degeneracy(k + 1, j + 1, x.degeneracy(k, i, s))
                        {
                            return fail("s_i s_j = s_(j+1) s_i", k, s);
                        }
                    }
                }
            }
            // d_i s_j mixed identities
            if k + 1 <= x.truncation() {
                for j in 0..=k {
                    let sj = x.degeneracy(k, j, s);
                    for i in 0..=k + 1 {
                        let got = x.face(k + 1, i, sj);
                        if i == j || i == j + 1 {
                            if got != s {
                                return fail("d_i s_i = id = d_(i+1) s_i", k, s);
                            }
                        } else if i < j {
                            if k == 0 || got != x.degeneracy(k - 1, j - 1, x.face(k, i, s)) {
                                return fail("d_i s_j = s_(j-1) d_i", k, s);
                            }
                        } else if k == 0 || got != x.degeneracy(k - 1, j, x.face(k, i - 1, s)) {
                            return fail("d_i s_j = s_j d_(i-1)", k, s);
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Exhaustively check the cyclic identities on all simplices of degree
/// <= k_max: t has order k+1 and braids past faces and degeneracies.
pub fn check_cyclic_identities(x: &SimplicialSet, k_max: usize) -> Result<(), String> {
    if !x.is_cyclic() {
        return Err("carrier has no cyclic structure".to_string());
    }
    let fail = |law: &str, k: usize, s: usize| {
        Err(format!("{law} fails on {} in degree {k}", x.label(k, s)))
    };
    for k in 0..=k_max {
        let size = x.size(k).map_err(|e| e.to_string())?;
        for s in 0..size {
            let ts = x.cyclic(k, s);
            let mut power = s;
            for _ in 0..=k {
                power = x.cyclic(k, power);
            }
            if power != s {
                return fail("t^(k+1) = id", k, s);
            }
            if k >= 1 {
                if x.face(k, 0, ts) != x.face(k, k, s) {
                    return fail("d_0 t = d_k", k, s);
                }
                for i in 1..=k {
                    if x.face(k, i, ts) != x.cyclic(k - 1, x.face(k, i - 1, s)) {
                        return fail("d_i t = t d_(i-1)", k, s);
                    }
                }
            }
            if k + 1 <= x.truncation() {
                let expect = x.cyclic(k + 1, x.cyclic(k + 1, x.degeneracy(k, k, s)));
                if x.degeneracy(k, 0, ts) != expect {
                    return fail("s_0 t = t^2 s_k", k, s);
                }
                for i in 1..=k {
                    if x.degeneracy(k, i, ts) != x.cyclic(k + 1, x.degeneracy(k, i - 1, s)) {
                        return fail("s_i t = t s_(i-1)", k, s);
                    }
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// circle models

/// Simplicial circle: degree k is `{u0, ..., uk}` with `u0` the basepoint.
/// Faces collapse the ends onto the basepoint; the cyclic operator is the
/// full rotation `uj -> u(j+1 mod k+1)`.
pub struct CircleCarrier;

/// d_i on the circle coordinate j in degree k (0 means basepoint).
fn circle_face(k: usize, i: usize, j: usize) -> usize {
    if j == 0 {
        0
    } else if i < j {
        j - 1
    } else if j == k {
        0
    } else {
        j
    }
}

fn circle_degeneracy(i: usize, j: usize) -> usize {
    if j == 0 {
        0
    } else if i < j {
        j + 1
    } else {
        j
    }
}

impl Carrier for CircleCarrier {
    fn size(&self, k: usize) -> usize {
        k + 1
    }
    fn face(&self, k: usize, i: usize, x: usize) -> usize {
        circle_face(k, i, x)
    }
    fn degeneracy(&self, _k: usize, i: usize, x: usize) -> usize {
        circle_degeneracy(i, x)
    }
    fn cyclic(&self, k: usize, x: usize) -> usize {
        (x + 1) % (k + 1)
    }
    fn is_cyclic(&self) -> bool {
        true
    }
    fn basepoint(&self, _k: usize) -> Option<usize> {
        Some(0)
    }
    fn label(&self, _k: usize, x: usize) -> String {
        if x == 0 {
            "*".to_string()
        } else {
            format!("u{x}")
        }
    }
}

/// Circle with a disjoint basepoint: degree k is `{*, u0, ..., uk}` where
/// `*` (index 0) is fixed by every operator and the `uj` (index j+1) carry
/// the circle structure. Unlike the plain circle, `u0` here is an honest
/// element, so the degreewise sets have k+2 points.
pub struct CirclePlusCarrier;

impl Carrier for CirclePlusCarrier {
    fn size(&self, k: usize) -> usize {
        k + 2
    }
    fn face(&self, k: usize, i: usize, x: usize) -> usize {
        if x == 0 {
            0
        } else {
            circle_face(k, i, x - 1) + 1
        }
    }
    fn degeneracy(&self, _k: usize, i: usize, x: usize) -> usize {
        if x == 0 {
            0
        } else {
            circle_degeneracy(i, x - 1) + 1
        }
    }
    fn cyclic(&self, k: usize, x: usize) -> usize {
        if x == 0 {
            0
        } else {
            (x % (k + 1)) + 1
        }
    }
    fn is_cyclic(&self) -> bool {
        true
    }
    fn basepoint(&self, _k: usize) -> Option<usize> {
        Some(0)
    }
    fn label(&self, _k: usize, x: usize) -> String {
        if x == 0 {
            "*".to_string()
        } else {
            format!("u{}", x - 1)
        }
    }
}

/// Two-point based set `{*, e}`, constant in every degree.
pub struct SphereZeroCarrier;

impl Carrier for SphereZeroCarrier {
    fn size(&self, _k: usize) -> usize {
        2
    }
    fn face(&self, _k: usize, _i: usize, x: usize) -> usize {
        x
    }
    fn degeneracy(&self, _k: usize, _i: usize, x: usize) -> usize {
        x
    }
    fn cyclic(&self, _k: usize, x: usize) -> usize {
        x
    }
    fn is_cyclic(&self) -> bool {
        true
    }
    fn basepoint(&self, _k: usize) -> Option<usize> {
        Some(0)
    }
    fn label(&self, _k: usize, x: usize) -> String {
        if x == 0 { "*".to_string() } else { "e".to_string() }
    }
}

/// Constant simplicial set on a fixed list of labels; all operators are the
/// identity (which makes it cyclic for free).
pub struct ConstantCarrier {
    pub labels: Vec<String>,
    pub basepoint: Option<usize>,
}

impl Carrier for ConstantCarrier {
    fn size(&self, _k: usize) -> usize {
        self.labels.len()
    }
    fn face(&self, _k: usize, _i: usize, x: usize) -> usize {
        x
    }
    fn degeneracy(&self, _k: usize, _i: usize, x: usize) -> usize {
        x
    }
    fn cyclic(&self, _k: usize, x: usize) -> usize {
        x
    }
    fn is_cyclic(&self) -> bool {
        true
    }
    fn basepoint(&self, _k: usize) -> Option<usize> {
        self.basepoint
    }
    fn label(&self, _k: usize, x: usize) -> String {
        self.labels[x].clone()
    }
}

/// Degreewise product; simplex `x` encodes the pair
/// `(x / size_b(k), x % size_b(k))`.
pub struct ProductCarrier {
    pub a: Arc<dyn Carrier>,
    pub b: Arc<dyn Carrier>,
}

impl ProductCarrier {
    fn split(&self, k: usize, x: usize) -> (usize, usize) {
        let nb = self.b.size(k);
        (x / nb, x % nb)
    }

    fn join(&self, k: usize, xa: usize, xb: usize) -> usize {
        xa * self.b.size(k) + xb
    }
}

impl Carrier for ProductCarrier {
    fn size(&self, k: usize) -> usize {
        self.a.size(k) * self.b.size(k)
    }
    fn face(&self, k: usize, i: usize, x: usize) -> usize {
        let (xa, xb) = self.split(k, x);
        self.join(k - 1, self.a.face(k, i, xa), self.b.face(k, i, xb))
    }
    fn degeneracy(&self, k: usize, i: usize, x: usize) -> usize {
        let (xa, xb) = self.split(k, x);
        self.join(
            k + 1,
            self.a.degeneracy(k, i, xa),
            self.b.degeneracy(k, i, xb),
        )
    }
    fn cyclic(&self, k: usize, x: usize) -> usize {
        let (xa, xb) = self.split(k, x);
        self.join(k, self.a.cyclic(k, xa), self.b.cyclic(k, xb))
    }
    fn is_cyclic(&self) -> bool {
        self.a.is_cyclic() && self.b.is_cyclic()
    }
    fn basepoint(&self, k: usize) -> Option<usize> {
        match (self.a.basepoint(k), self.b.basepoint(k)) {
            (Some(pa), Some(pb)) => Some(self.join(k, pa, pb)),
            _ => None,
        }
    }
    fn label(&self, k: usize, x: usize) -> String {
        let (xa, xb) = self.split(k, x);
        format!("({},{})", self.a.label(k, xa), self.b.label(k, xb))
    }
}

pub fn circle(truncation: usize) -> SimplicialSet {
    SimplicialSet::with_truncation(Arc::new(CircleCarrier), truncation)
}

pub fn circle_plus(truncation: usize) -> SimplicialSet {
    SimplicialSet::with_truncation(Arc::new(CirclePlusCarrier), truncation)
}

pub fn sphere_zero(truncation: usize) -> SimplicialSet {
    SimplicialSet::with_truncation(Arc::new(SphereZeroCarrier), truncation)
}
