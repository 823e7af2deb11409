//! Exact integer linear algebra for finitely presented abelian groups.
//!
//! Everything runs over arbitrary-precision integers; there is no modular
//! shortcut and no floating point. Two engines share the work:
//!
//! * [`snf`] — dense Smith normal form `U·M·V = S` with all four transforms
//!   (`U`, `V` and their inverses) tracked, minimal-absolute-value pivoting.
//! * [`ColumnEchelon`] — an incremental sparse column echelon form over the
//!   integers. It answers lattice questions (span bases, membership with
//!   coefficients, kernels via row stacking) without densifying, which keeps
//!   chain complexes with thousands of sparse columns tractable.
//!
//! A group is presented as free generators modulo the span of relation
//! columns ([`Presentation`]); its canonical form ([`AbGroup`]) is a free
//! rank plus the torsion divisibility chain. Homology of a [`ChainComplex`]
//! whose degreewise groups may themselves carry relations is computed as
//! cycles-with-relations modulo boundaries-plus-relations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AbelianError {
    #[error("degree {degree} not available; complex supports homology below degree {limit}")]
    Truncation { degree: usize, limit: usize },
    #[error("boundary column {column} in degree {degree} is not a cycle in the target")]
    BoundaryNotCycle { degree: usize, column: usize },
    #[error("chain map image of cycle {column} in degree {degree} is not a cycle")]
    ImageNotCycle { degree: usize, column: usize },
}

// ---------------------------------------------------------------------------
// dense matrices

/// Dense integer matrix, row-major, arbitrary precision.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntegerMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntegerMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntegerMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == IntegerMatrix::identity(self.rows)
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn column(&self, c: usize) -> SparseCol {
        (0..self.rows)
            .filter(|&r| !self.get(r, c).is_zero())
            .map(|r| (r, self.get(r, c).clone()))
            .collect()
    }

    pub fn columns(&self) -> Vec<SparseCol> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c).clone();
            self.set(r, c, v);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -self.get(r, c).clone();
            self.set(r, c, v);
        }
    }

    /// row a += q * row b
    fn row_add_mul(&mut self, a: usize, b: usize, q: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(b, c);
            if !v.is_zero() {
                let new = self.get(a, c) + q * v;
                self.set(a, c, new);
            }
        }
    }

    /// col a += q * col b
    fn col_add_mul(&mut self, a: usize, b: usize, q: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, b);
            if !v.is_zero() {
                let new = self.get(r, a) + q * v;
                self.set(r, a, new);
            }
        }
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Smith normal form

/// `u * m * v = s` with `s` diagonal, each diagonal entry non-negative and
/// dividing the next, and `u`, `v` integrally invertible (inverses included,
/// which certifies determinant ±1).
pub struct Snf {
    pub s: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub v_inv: IntegerMatrix,
    pub rank: usize,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<BigInt> {
        self.s.diagonal()
    }
}

pub fn snf(m: &IntegerMatrix) -> Snf {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut u_inv = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);
    let mut v_inv = IntegerMatrix::identity(cols);

    // elementary operations, mirrored into the transforms
    macro_rules! swap_rows {
        ($a:expr, $b:expr) => {{
            s.swap_rows($a, $b);
            u.swap_rows($a, $b);
            u_inv.swap_cols($a, $b);
        }};
    }
    macro_rules! swap_cols {
        ($a:expr, $b:expr) => {{
            s.swap_cols($a, $b);
            v.swap_cols($a, $b);
            v_inv.swap_rows($a, $b);
        }};
    }
    macro_rules! negate_row {
        ($a:expr) => {{
            s.negate_row($a);
            u.negate_row($a);
            u_inv.negate_col($a);
        }};
    }
    macro_rules! row_add {
        // row a += q * row b
        ($a:expr, $b:expr, $q:expr) => {{
            let q: BigInt = $q;
            s.row_add_mul($a, $b, &q);
            u.row_add_mul($a, $b, &q);
            u_inv.col_add_mul($b, $a, &(-q));
        }};
    }
    macro_rules! col_add {
        // col a += q * col b
        ($a:expr, $b:expr, $q:expr) => {{
            let q: BigInt = $q;
            s.col_add_mul($a, $b, &q);
            v.col_add_mul($a, $b, &q);
            v_inv.row_add_mul($b, $a, &(-q));
        }};
    }

    let mut rank = 0;
    for t in 0..rows.min(cols) {
        // minimal |entry| pivot over the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if !s.get(r, c).is_zero()
                    && pivot.is_none_or(|(pr, pc)| s.get(r, c).abs() < s.get(pr, pc).abs())
                {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else {
            break;
        };
        swap_rows!(t, pr);
        swap_cols!(t, pc);

        'reduce: loop {
            if s.get(t, t).is_negative() {
                negate_row!(t);
            }
            for r in t + 1..rows {
                if s.get(r, t).is_zero() {
                    continue;
                }
                let q = s.get(r, t).div_floor(s.get(t, t));
                if !q.is_zero() {
                    row_add!(r, t, -q);
                }
                if !s.get(r, t).is_zero() {
                    // remainder beats the pivot; promote it
                    swap_rows!(t, r);
                    continue 'reduce;
                }
            }
            for c in t + 1..cols {
                if s.get(t, c).is_zero() {
                    continue;
                }
                let q = s.get(t, c).div_floor(s.get(t, t));
                if !q.is_zero() {
                    col_add!(c, t, -q);
                }
                if !s.get(t, c).is_zero() {
                    swap_cols!(t, c);
                    continue 'reduce;
                }
            }
            // enforce the divisibility chain: the pivot must divide the
            // whole trailing block
            for r in t + 1..rows {
                for c in t + 1..cols {
                    if !s.get(r, c).mod_floor(s.get(t, t)).is_zero() {
                        row_add!(t, r, BigInt::one());
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        rank += 1;
    }

    Snf {
        s,
        u,
        v,
        u_inv,
        v_inv,
        rank,
    }
}

// ---------------------------------------------------------------------------
// sparse columns and echelon lattices

/// Sparse column: (row, value) pairs, rows strictly increasing, values
/// nonzero.
pub type SparseCol = Vec<(usize, BigInt)>;

pub fn sparse_from_i64(entries: &[(usize, i64)]) -> SparseCol {
    let mut v: SparseCol = entries
        .iter()
        .filter(|(_, x)| *x != 0)
        .map(|&(r, x)| (r, BigInt::from(x)))
        .collect();
    v.sort_by_key(|&(r, _)| r);
    v
}

/// `a + q * b`, merging sorted sparse columns.
pub fn sparse_axpy(a: &SparseCol, q: &BigInt, b: &SparseCol) -> SparseCol {
    if q.is_zero() {
        return a.clone();
    }
    let mut out = SparseCol::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, q * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + q * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_scale(a: &SparseCol, q: &BigInt) -> SparseCol {
    if q.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(r, v)| (*r, q * v)).collect()
}

/// Integer column echelon form, built incrementally. Basis columns have
/// strictly increasing leading rows, so the spanned lattice supports exact
/// membership tests and unique coefficient recovery by forward substitution.
pub struct ColumnEchelon {
    dim: usize,
    cols: Vec<SparseCol>, // sorted by leading row
}

impl ColumnEchelon {
    pub fn new(dim: usize) -> Self {
        ColumnEchelon {
            dim,
            cols: Vec::new(),
        }
    }

    pub fn from_columns<I: IntoIterator<Item = SparseCol>>(dim: usize, cols: I) -> Self {
        let mut e = ColumnEchelon::new(dim);
        for c in cols {
            e.insert(c);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.cols.len()
    }

    pub fn basis(&self) -> &[SparseCol] {
        &self.cols
    }

    fn position_of_pivot(&self, row: usize) -> Result<usize, usize> {
        self.cols.binary_search_by_key(&row, |c| c[0].0)
    }

    /// Add a column to the spanned lattice. Returns true when the rank grew.
    pub fn insert(&mut self, mut v: SparseCol) -> bool {
        debug_assert!(v.iter().all(|(r, x)| *r < self.dim && !x.is_zero()));
        loop {
            let Some((row, lead)) = v.first().cloned() else {
                return false;
            };
            match self.position_of_pivot(row) {
                Err(pos) => {
                    if lead.is_negative() {
                        v = sparse_scale(&v, &BigInt::from(-1));
                    }
                    self.cols.insert(pos, v);
                    return true;
                }
                Ok(pos) => {
                    let b_lead = self.cols[pos][0].1.clone();
                    if lead.mod_floor(&b_lead).is_zero() {
                        let q = -lead / &b_lead;
                        v = sparse_axpy(&v, &BigInt::one(), &sparse_scale(&self.cols[pos], &q));
                    } else {
                        // replace the basis column by the gcd combination and
                        // keep reducing the leftover
                        let e = b_lead.extended_gcd(&lead);
                        let (g, x, y) = (e.gcd, e.x, e.y);
                        let new_b = sparse_axpy(&sparse_scale(&self.cols[pos], &x), &y, &v);
                        let leftover = sparse_axpy(
                            &sparse_scale(&v, &(&b_lead / &g)),
                            &(-(&lead / &g)),
                            &self.cols[pos],
                        );
                        debug_assert_eq!(new_b[0].0, row);
                        self.cols[pos] = new_b;
                        v = leftover;
                    }
                }
            }
        }
    }

    /// Coefficients expressing `target` over the basis columns, or None if
    /// it is outside the lattice.
    pub fn express(&self, target: &SparseCol) -> Option<Vec<BigInt>> {
        let mut coeffs = vec![BigInt::zero(); self.cols.len()];
        let mut t = target.clone();
        while let Some((row, lead)) = t.first().cloned() {
            let pos = self.position_of_pivot(row).ok()?;
            let (q, r) = lead.div_mod_floor(&self.cols[pos][0].1);
            if !r.is_zero() {
                return None;
            }
            t = sparse_axpy(&t, &(-&q), &self.cols[pos]);
            coeffs[pos] = q;
        }
        Some(coeffs)
    }

    pub fn contains(&self, target: &SparseCol) -> bool {
        self.express(target).is_some()
    }
}

/// Basis of the lattice `{x : M·x ∈ span(rels)}` for `M` with `rows` rows
/// given by sparse columns. Computed by echelonizing the columns of `M`
/// stacked over an identity block, together with the relation columns
/// stacked over zero; basis vectors whose leading row lies in the identity
/// block have zero image, and their lower parts are the answer.
pub fn preimage_lattice(rows: usize, m_cols: &[SparseCol], rels: &[SparseCol]) -> Vec<SparseCol> {
    let n = m_cols.len();
    let mut ech = ColumnEchelon::new(rows + n);
    for (j, col) in m_cols.iter().enumerate() {
        let mut stacked = col.clone();
        stacked.push((rows + j, BigInt::one()));
        ech.insert(stacked);
    }
    for r in rels {
        ech.insert(r.clone());
    }
    ech.basis()
        .iter()
        .filter(|c| c[0].0 >= rows)
        .map(|c| c.iter().map(|(r, v)| (r - rows, v.clone())).collect())
        .collect()
}

// ---------------------------------------------------------------------------
// presentations and canonical forms

/// Free abelian group on `generators` modulo the span of the relation
/// columns.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: usize,
    pub relations: Vec<SparseCol>,
}

impl Presentation {
    pub fn free(generators: usize) -> Self {
        Presentation {
            generators,
            relations: Vec::new(),
        }
    }

    pub fn cyclic(order: i64) -> Self {
        Presentation {
            generators: 1,
            relations: vec![sparse_from_i64(&[(0, order)])],
        }
    }
}

/// Canonical form: free rank plus torsion coefficients, each dividing the
/// next, each at least 2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbGroup {
    pub fn free(rank: usize) -> Self {
        AbGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn torsion_i64(torsion: &[i64]) -> Self {
        AbGroup {
            rank: 0,
            torsion: torsion.iter().map(|&t| BigInt::from(t)).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Number of elements, None when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.rank > 0 {
            None
        } else {
            Some(self.torsion.iter().product())
        }
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Canonical form of a presentation via Smith normal form of the relation
/// matrix.
pub fn ab_group(p: &Presentation) -> AbGroup {
    let mut rel = IntegerMatrix::zero(p.generators, p.relations.len());
    for (j, col) in p.relations.iter().enumerate() {
        for (r, v) in col {
            rel.set(*r, j, v.clone());
        }
    }
    let d = snf(&rel);
    let mut torsion = Vec::new();
    for t in d.diagonal() {
        if t > BigInt::one() {
            torsion.push(t);
        }
    }
    AbGroup {
        rank: p.generators - d.rank,
        torsion,
    }
}

/// Presentation of `A ⊗ B` from presentations of the factors: generator
/// pairs, with each relation of one side paired against every generator of
/// the other.
pub fn tensor_presentations(a: &Presentation, b: &Presentation) -> Presentation {
    let gens = a.generators * b.generators;
    let idx = |i: usize, j: usize| i * b.generators + j;
    let mut relations = Vec::new();
    for col in &a.relations {
        for j in 0..b.generators {
            relations.push(col.iter().map(|(i, v)| (idx(*i, j), v.clone())).collect());
        }
    }
    for col in &b.relations {
        for i in 0..a.generators {
            relations.push(col.iter().map(|(j, v)| (idx(i, *j), v.clone())).collect());
        }
    }
    Presentation {
        generators: gens,
        relations,
    }
}

// ---------------------------------------------------------------------------
// chain complexes

/// Chain complex of finitely presented abelian groups. `boundaries[k]` maps
/// degree k to degree k−1 (with `boundaries[0]` mapping to the zero group);
/// composites of consecutive boundaries need only vanish modulo the
/// degreewise relations.
#[derive(Clone)]
pub struct ChainComplex {
    pub groups: Vec<Presentation>,
    pub boundaries: Vec<BoundaryMap>,
}

/// Sparse column-major matrix of a boundary or chain map.
#[derive(Clone, Debug)]
pub struct BoundaryMap {
    pub rows: usize,
    pub cols: Vec<SparseCol>,
}

impl BoundaryMap {
    pub fn zero(rows: usize, cols: usize) -> Self {
        BoundaryMap {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    pub fn apply(&self, x: &SparseCol) -> SparseCol {
        let mut out = Vec::new();
        for (g, c) in x {
            out = sparse_axpy(&out, c, &self.cols[*g]);
        }
        out
    }

    /// Matrix composition: column j of the result is `self` applied to
    /// column j of `other`.
    pub fn compose(&self, other: &BoundaryMap) -> BoundaryMap {
        assert_eq!(self.cols.len(), other.rows, "composition shape mismatch");
        BoundaryMap {
            rows: self.rows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn to_dense(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zero(self.rows, self.cols.len());
        for (j, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, j, v.clone());
            }
        }
        m
    }
}

impl ChainComplex {
    /// Highest degree for which homology can be computed.
    pub fn top_homology_degree(&self) -> usize {
        self.groups.len().saturating_sub(2)
    }

    /// Check shape consistency and that consecutive boundaries compose to
    /// zero modulo the target relations. Returns the first offending
    /// (degree, column) otherwise.
    pub fn check_dd_zero(&self) -> Result<(), (usize, usize)> {
        for k in 2..self.boundaries.len() {
            let rel_ech = ColumnEchelon::from_columns(
                self.groups[k - 2].generators,
                self.groups[k - 2].relations.iter().cloned(),
            );
            for (j, col) in self.boundaries[k].cols.iter().enumerate() {
                let dd = self.boundaries[k - 1].apply(col);
                if !dd.is_empty() && !rel_ech.contains(&dd) {
                    return Err((k, j));
                }
            }
        }
        Ok(())
    }
}

/// Cycles, their canonical quotient, and the data needed to push classes
/// through chain maps.
pub struct HomologyData {
    pub group: AbGroup,
    /// Lattice basis of the cycles, in chain coordinates, echelon by
    /// leading row.
    pub cycle_basis: Vec<SparseCol>,
    /// Boundary-plus-relation columns expressed over `cycle_basis`.
    pub quotient_relations: Vec<SparseCol>,
}

pub fn homology(c: &ChainComplex, degree: usize) -> Result<AbGroup, AbelianError> {
    homology_data(c, degree).map(|d| d.group)
}

pub fn homology_data(c: &ChainComplex, degree: usize) -> Result<HomologyData, AbelianError> {
    if degree + 1 >= c.boundaries.len() {
        return Err(AbelianError::Truncation {
            degree,
            limit: c.top_homology_degree() + 1,
        });
    }
    let n = c.groups[degree].generators;

    // cycles: everything whose boundary lies in the relation lattice below
    let cycle_basis: Vec<SparseCol> = if degree == 0 {
        (0..n).map(|g| vec![(g, BigInt::one())]).collect()
    } else {
        preimage_lattice(
            c.groups[degree - 1].generators,
            &c.boundaries[degree].cols,
            &c.groups[degree - 1].relations,
        )
    };
    let z_ech = ColumnEchelon::from_columns(n, cycle_basis.iter().cloned());
    debug_assert_eq!(z_ech.rank(), cycle_basis.len());

    // boundaries plus own relations, reduced to a basis first
    let mut b_ech = ColumnEchelon::new(n);
    for col in &c.boundaries[degree + 1].cols {
        b_ech.insert(col.clone());
    }
    for col in &c.groups[degree].relations {
        b_ech.insert(col.clone());
    }

    let mut quotient_relations = Vec::new();
    for (j, b) in b_ech.basis().iter().enumerate() {
        let coeffs = z_ech
            .express(b)
            .ok_or(AbelianError::BoundaryNotCycle { degree, column: j })?;
        quotient_relations.push(
            coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v))
                .collect(),
        );
    }

    let group = ab_group(&Presentation {
        generators: z_ech.rank(),
        relations: quotient_relations.clone(),
    });
    Ok(HomologyData {
        group,
        cycle_basis: z_ech.basis().to_vec(),
        quotient_relations,
    })
}

// ---------------------------------------------------------------------------
// induced maps on homology

/// A degreewise chain map pushed to homology in one degree.
pub struct InducedMap {
    pub source: AbGroup,
    pub target: AbGroup,
    /// Matrix over the cycle bases of source and target.
    pub matrix: IntegerMatrix,
    pub kernel_trivial: bool,
    pub cokernel: AbGroup,
}

impl InducedMap {
    pub fn is_iso(&self) -> bool {
        self.kernel_trivial && self.cokernel.is_trivial()
    }
}

/// Push a chain map (given in degree `degree` by columns over the source
/// generators) to homology. The map must be a chain map modulo relations;
/// only the cycle condition is re-checked here.
pub fn induced_on_homology(
    src: &ChainComplex,
    tgt: &ChainComplex,
    map_cols: &BoundaryMap,
    degree: usize,
) -> Result<InducedMap, AbelianError> {
    let hd_src = homology_data(src, degree)?;
    let hd_tgt = homology_data(tgt, degree)?;
    let tgt_zech = ColumnEchelon::from_columns(
        tgt.groups[degree].generators,
        hd_tgt.cycle_basis.iter().cloned(),
    );

    let q_src = hd_src.cycle_basis.len();
    let q_tgt = hd_tgt.cycle_basis.len();
    let mut matrix = IntegerMatrix::zero(q_tgt, q_src);
    let mut phi_cols: Vec<SparseCol> = Vec::new();
    for (j, z) in hd_src.cycle_basis.iter().enumerate() {
        let image = map_cols.apply(z);
        let coeffs = tgt_zech
            .express(&image)
            .ok_or(AbelianError::ImageNotCycle { degree, column: j })?;
        let col: SparseCol = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .collect();
        for (r, v) in &col {
            matrix.set(*r, j, v.clone());
        }
        phi_cols.push(col);
    }

    // cokernel: target homology modulo the image
    let mut coker_rels = hd_tgt.quotient_relations.clone();
    coker_rels.extend(phi_cols.iter().cloned());
    let cokernel = ab_group(&Presentation {
        generators: q_tgt,
        relations: coker_rels,
    });

    // kernel: classes mapping into the target boundary lattice
    let pre = preimage_lattice(q_tgt, &phi_cols, &hd_tgt.quotient_relations);
    let src_rel_ech = ColumnEchelon::from_columns(q_src, hd_src.quotient_relations.iter().cloned());
    let kernel_trivial = pre.iter().all(|k| src_rel_ech.contains(k));

    Ok(InducedMap {
        source: hd_src.group,
        target: hd_tgt.group,
        matrix,
        kernel_trivial,
        cokernel,
    })
}
