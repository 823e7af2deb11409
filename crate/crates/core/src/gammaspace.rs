//! Commutative monoids as functors on based sets, their degreewise
//! evaluation on based simplicial sets, sum-diagram categories, and group
//! completion.
//!
//! The value of a monoid `M` on a based set `S` is the set of tuples of
//! monoid elements indexed by the non-base points of `S`. A based map
//! pushes a tuple forward by multiplying each fiber; target points hit by
//! nothing receive the unit, and whatever lands on the basepoint is
//! discarded. Applied degreewise to the based circle this recovers the bar
//! construction, and on the circle with disjoint basepoint the cyclic bar
//! construction together with its splitting over a commutative monoid.
//!
//! A [`SumDiagram`] over a set of leaves rectifies tuples of finite sets
//! into a diagram of explicit disjoint unions: a size per leaf and, for
//! every subset with at least two leaves, injections of the member sets
//! that jointly cover the subset total. Arrangements for different subsets
//! are independent, so object counts multiply; morphisms are determined by
//! their leaf components, which [`SumDiagram::hom_count_brute`] certifies
//! by exhaustive search.

use crate::abelian::{ab_group, AbGroup, Presentation, SparseCol};
use crate::barcons::FiniteMonoid;
use crate::basedsets::{BasedMap, BasedSet};
use crate::injcat::{Injection, Permutation};
use crate::simplicial::{Carrier, SimplicialSet};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GammaError {
    #[error("monoid {name} is not commutative")]
    NotCommutative { name: String },
    #[error("enumeration of {objects} objects exceeds the limit {limit}")]
    TooLarge { objects: u128, limit: u128 },
}

// ---------------------------------------------------------------------------
// evaluation on based sets

/// A commutative monoid viewed as a functor on based sets. Values are
/// encoded least significant digit first: the element at non-base point
/// `i` of the set sits at digit `i - 1`.
#[derive(Clone, Debug)]
pub struct GammaSpace {
    monoid: FiniteMonoid,
}

impl GammaSpace {
    pub fn new(monoid: &FiniteMonoid) -> Result<Self, GammaError> {
        if !monoid.is_commutative() {
            return Err(GammaError::NotCommutative {
                name: monoid.name().to_string(),
            });
        }
        Ok(GammaSpace {
            monoid: monoid.clone(),
        })
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    /// Number of values on a based set with `points` non-base points.
    pub fn size_on(&self, points: usize) -> usize {
        self.monoid.size().pow(points as u32)
    }

    pub fn eval_size(&self, s: &BasedSet) -> usize {
        self.size_on(s.size())
    }

    pub fn decode(&self, points: usize, x: usize) -> Vec<usize> {
        let n = self.monoid.size();
        assert!(x < self.size_on(points), "value {x} out of range");
        let mut digits = Vec::with_capacity(points);
        let mut rest = x;
        for _ in 0..points {
            digits.push(rest % n);
            rest /= n;
        }
        digits
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        let n = self.monoid.size();
        let mut x = 0;
        for &g in tuple.iter().rev() {
            assert!(g < n, "element {g} out of range");
            x = x * n + g;
        }
        x
    }

    /// Push a value forward along a based map: each target point collects
    /// the product over its fiber, in ascending source order.
    pub fn induced(&self, alpha: &BasedMap, x: usize) -> usize {
        let digits = self.decode(alpha.source(), x);
        let mut out = vec![self.monoid.unit(); alpha.target()];
        for s in 1..=alpha.source() {
            let t = alpha.apply(s);
            if t != 0 {
                out[t - 1] = self.monoid.mul(out[t - 1], digits[s - 1]);
            }
        }
        self.encode(&out)
    }
}

/// Whether the value on a wedge of two based sets maps bijectively onto
/// the product of the values on the factors under the two collapse maps.
pub fn check_special(
    monoid: &FiniteMonoid,
    s: &BasedSet,
    t: &BasedSet,
) -> Result<bool, GammaError> {
    let gamma = GammaSpace::new(monoid)?;
    let (sp, tp) = (s.size(), t.size());
    let first = collapse_first(sp, tp);
    let second = collapse_second(sp, tp);
    let mut seen = vec![false; gamma.size_on(sp) * gamma.size_on(tp)];
    for x in 0..gamma.size_on(sp + tp) {
        let pair =
            gamma.induced(&first, x) * gamma.size_on(tp) + gamma.induced(&second, x);
        if seen[pair] {
            return Ok(false);
        }
        seen[pair] = true;
    }
    Ok(seen.iter().all(|&b| b))
}

/// Collapse a wedge (points of the first factor listed first) onto its
/// first factor, sending the second factor to the basepoint.
pub fn collapse_first(s_points: usize, t_points: usize) -> BasedMap {
    let image = (1..=s_points)
        .chain(std::iter::repeat(0).take(t_points))
        .collect();
    BasedMap::new(s_points + t_points, s_points, image)
}

/// Collapse a wedge onto its second factor.
pub fn collapse_second(s_points: usize, t_points: usize) -> BasedMap {
    let image = std::iter::repeat(0)
        .take(s_points)
        .chain(1..=t_points)
        .collect();
    BasedMap::new(s_points + t_points, t_points, image)
}

/// Group-likeness of the evaluation: every collapse-pair bijection has a
/// compatible inverse exactly when every element is invertible.
pub fn is_very_special(monoid: &FiniteMonoid) -> bool {
    monoid.is_commutative() && monoid.is_group()
}

/// Grothendieck group of a commutative monoid: one generator per element,
/// one relation `x + y - xy` per unordered pair, in canonical form.
pub fn group_completion(monoid: &FiniteMonoid) -> Result<AbGroup, GammaError> {
    if !monoid.is_commutative() {
        return Err(GammaError::NotCommutative {
            name: monoid.name().to_string(),
        });
    }
    let n = monoid.size();
    let mut relations: Vec<SparseCol> = Vec::new();
    for x in 0..n {
        for y in x..n {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            *acc.entry(x).or_default() += 1;
            *acc.entry(y).or_default() += 1;
            *acc.entry(monoid.mul(x, y)).or_default() -= 1;
            let col: SparseCol =
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            if !col.is_empty() {
                relations.push(col);
            }
        }
    }
    Ok(ab_group(&Presentation {
        generators: n,
        relations,
    }))
}

// ---------------------------------------------------------------------------
// evaluation on simplicial sets

struct GammaCarrier {
    monoid: FiniteMonoid,
    base: SimplicialSet,
    /// Rotations only descend when the base rotation fixes the basepoint;
    /// otherwise the pushed operator forgets coordinates and t^(k+1) != id.
    cyclic: bool,
}

impl GammaCarrier {
    /// Non-base simplices of the base at degree k; the base keeps its
    /// basepoint at index 0 in every degree.
    fn points(&self, k: usize) -> usize {
        self.base
            .size(k)
            .expect("base truncated below the evaluation degree")
            - 1
    }

    fn push(
        &self,
        k: usize,
        x: usize,
        target_points: usize,
        op: impl Fn(usize) -> usize,
    ) -> usize {
        let n = self.monoid.size();
        let mut out = vec![self.monoid.unit(); target_points];
        let mut rest = x;
        for p in 1..=self.points(k) {
            let digit = rest % n;
            rest /= n;
            let q = op(p);
            if q != 0 {
                out[q - 1] = self.monoid.mul(out[q - 1], digit);
            }
        }
        let mut y = 0;
        for &g in out.iter().rev() {
            y = y * n + g;
        }
        y
    }
}

impl Carrier for GammaCarrier {
    fn size(&self, k: usize) -> usize {
        self.monoid.size().pow(self.points(k) as u32)
    }

    fn face(&self, k: usize, i: usize, x: usize) -> usize {
        self.push(k, x, self.points(k - 1), |p| self.base.face(k, i, p))
    }

    fn degeneracy(&self, k: usize, i: usize, x: usize) -> usize {
        self.push(k, x, self.points(k + 1), |p| self.base.degeneracy(k, i, p))
    }

    fn cyclic(&self, k: usize, x: usize) -> usize {
        self.push(k, x, self.points(k), |p| self.base.cyclic(k, p))
    }

    fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    fn basepoint(&self, k: usize) -> Option<usize> {
        let n = self.monoid.size();
        let mut y = 0;
        for _ in 0..self.points(k) {
            y = y * n + self.monoid.unit();
        }
        Some(y)
    }

    fn label(&self, k: usize, x: usize) -> String {
        let n = self.monoid.size();
        let mut rest = x;
        let mut parts = Vec::with_capacity(self.points(k));
        for _ in 0..self.points(k) {
            parts.push(self.monoid.label(rest % n).to_string());
            rest /= n;
        }
        format!("({})", parts.join(","))
    }
}

/// Degreewise evaluation of a commutative monoid on a based simplicial set
/// (basepoint at index 0 in every degree). Cyclic when the base is cyclic
/// with a basepoint-fixing rotation.
pub fn gamma_on_simplicial(
    monoid: &FiniteMonoid,
    base: &SimplicialSet,
    truncation: usize,
) -> Result<SimplicialSet, GammaError> {
    if !monoid.is_commutative() {
        return Err(GammaError::NotCommutative {
            name: monoid.name().to_string(),
        });
    }
    assert!(
        truncation <= base.truncation(),
        "base truncated at {} but evaluation wants {truncation}",
        base.truncation()
    );
    for k in 0..=truncation {
        assert_eq!(
            base.basepoint(k),
            Some(0),
            "base must carry its basepoint at index 0 in degree {k}"
        );
    }
    let cyclic = base.is_cyclic() && (0..=truncation).all(|k| base.cyclic(k, 0) == 0);
    Ok(SimplicialSet::with_truncation(
        Arc::new(GammaCarrier {
            monoid: monoid.clone(),
            base: base.clone(),
            cyclic,
        }),
        truncation,
    ))
}

// ---------------------------------------------------------------------------
// sum diagrams

fn mask_bits(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize)
        .filter(|&b| mask >> b & 1 == 1)
        .collect()
}

/// Explicit disjoint unions over a finite set of leaves: a size per leaf
/// and, for every subset `mask` with at least two bits, one injection per
/// member leaf (ascending), pairwise disjoint and jointly covering
/// `1..=total` where `total` is the sum of the member sizes. Singleton
/// subsets carry identities and the empty subset is empty, so structure
/// maps between nested subsets assemble uniquely from these blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SumDiagram {
    sizes: Vec<usize>,
    arrangements: BTreeMap<usize, Vec<Injection>>,
}

impl SumDiagram {
    pub fn leaves(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn subset_size(&self, mask: usize) -> usize {
        mask_bits(mask).into_iter().map(|b| self.sizes[b]).sum()
    }

    /// Structure injection of a member leaf into a subset containing it.
    pub fn leaf_into(&self, leaf: usize, mask: usize) -> Injection {
        assert!(mask >> leaf & 1 == 1, "leaf {leaf} not in subset {mask:b}");
        if mask == 1 << leaf {
            return Injection::new(self.sizes[leaf], (1..=self.sizes[leaf]).collect())
                .unwrap();
        }
        let pos = mask_bits(mask)
            .into_iter()
            .position(|b| b == leaf)
            .unwrap();
        self.arrangements[&mask][pos].clone()
    }

    /// Structure injection of a subset into a larger subset, assembled
    /// block by block; nested embeddings compose by construction.
    pub fn embedding(&self, sub: usize, sup: usize) -> Injection {
        assert_eq!(sub & sup, sub, "subset {sub:b} not contained in {sup:b}");
        let mut image = vec![0; self.subset_size(sub)];
        for b in mask_bits(sub) {
            let into_sub = self.leaf_into(b, sub);
            let into_sup = self.leaf_into(b, sup);
            for i in 1..=self.sizes[b] {
                image[into_sub.apply(i) - 1] = into_sup.apply(i);
            }
        }
        Injection::new(self.subset_size(sup), image).unwrap()
    }

    /// Push forward along a based map of leaf sets: target leaf `t`
    /// collects the source leaves mapping to it, with the subset total as
    /// its size and the corresponding embeddings as structure; leaves sent
    /// to the basepoint are dropped.
    pub fn alpha_lower(&self, alpha: &BasedMap) -> SumDiagram {
        assert_eq!(alpha.source(), self.leaves(), "leaf count mismatch");
        let n = alpha.target();
        let fiber: Vec<usize> = (1..=n)
            .map(|t| {
                (0..self.leaves())
                    .filter(|&s| alpha.apply(s + 1) == t)
                    .fold(0, |acc, s| acc | 1 << s)
            })
            .collect();
        let sizes: Vec<usize> = fiber.iter().map(|&m| self.subset_size(m)).collect();
        let mut arrangements = BTreeMap::new();
        for tmask in 0..1usize << n {
            if tmask.count_ones() < 2 {
                continue;
            }
            let sup = mask_bits(tmask)
                .into_iter()
                .fold(0, |acc, t| acc | fiber[t]);
            let total = self.subset_size(sup);
            let fams: Vec<Injection> = mask_bits(tmask)
                .into_iter()
                .map(|t| {
                    let e = self.embedding(fiber[t], sup);
                    Injection::new(total, e.image().to_vec()).unwrap()
                })
                .collect();
            arrangements.insert(tmask, fams);
        }
        SumDiagram {
            sizes,
            arrangements,
        }
    }

    /// Assemble the family of subset maps into `other` from one injection
    /// per leaf. The value on a subset is forced block by block; returns
    /// None when some assembled map fails injectivity or some naturality
    /// square with an embedding fails (neither happens for well-formed
    /// diagrams, which `hom_count_brute` certifies independently).
    pub fn extend_leaf_maps(
        &self,
        other: &SumDiagram,
        leaf_maps: &[Injection],
    ) -> Option<BTreeMap<usize, Injection>> {
        let leaves = self.leaves();
        assert_eq!(other.leaves(), leaves, "leaf count mismatch");
        assert_eq!(leaf_maps.len(), leaves, "one injection per leaf");
        for s in 0..leaves {
            if leaf_maps[s].source() != self.sizes[s]
                || leaf_maps[s].target() != other.sizes[s]
            {
                return None;
            }
        }
        let mut out: BTreeMap<usize, Injection> = BTreeMap::new();
        for mask in 1..1usize << leaves {
            let f = if mask.count_ones() == 1 {
                leaf_maps[mask.trailing_zeros() as usize].clone()
            } else {
                let mut image = vec![0; self.subset_size(mask)];
                for b in mask_bits(mask) {
                    let src = self.leaf_into(b, mask);
                    let tgt = other.leaf_into(b, mask);
                    for i in 1..=self.sizes[b] {
                        image[src.apply(i) - 1] = tgt.apply(leaf_maps[b].apply(i));
                    }
                }
                match Injection::new(other.subset_size(mask), image) {
                    Ok(f) => f,
                    Err(_) => return None,
                }
            };
            out.insert(mask, f);
        }
        for (&sup, f_sup) in &out {
            for (&sub, f_sub) in &out {
                if sub & sup != sub || sub == sup {
                    continue;
                }
                let left = f_sup.compose(&self.embedding(sub, sup));
                let right = other.embedding(sub, sup).compose(f_sub);
                if left != right {
                    return None;
                }
            }
        }
        Some(out)
    }

    /// Number of diagram morphisms into `other`, counted by extending
    /// every tuple of leaf injections.
    pub fn hom_count(&self, other: &SumDiagram) -> u128 {
        let leaves = self.leaves();
        assert_eq!(other.leaves(), leaves, "leaf count mismatch");
        let per_leaf: Vec<Vec<Injection>> = (0..leaves)
            .map(|s| all_injections(self.sizes[s], other.sizes[s]))
            .collect();
        if per_leaf.iter().any(|o| o.is_empty()) {
            return 0;
        }
        let mut count = 0u128;
        let mut idx = vec![0usize; leaves];
        loop {
            let choice: Vec<Injection> = idx
                .iter()
                .enumerate()
                .map(|(s, &i)| per_leaf[s][i].clone())
                .collect();
            if self.extend_leaf_maps(other, &choice).is_some() {
                count += 1;
            }
            let mut j = 0;
            loop {
                if j == leaves {
                    return count;
                }
                idx[j] += 1;
                if idx[j] < per_leaf[j].len() {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
        }
    }

    /// Count morphisms by enumerating an injection for every nonempty
    /// subset independently and filtering by all naturality squares.
    /// Exponential; refuses when the raw family count exceeds `limit`.
    pub fn hom_count_brute(
        &self,
        other: &SumDiagram,
        limit: u128,
    ) -> Result<u128, GammaError> {
        let leaves = self.leaves();
        assert_eq!(other.leaves(), leaves, "leaf count mismatch");
        let masks: Vec<usize> = (1..1usize << leaves).collect();
        let options: Vec<Vec<Injection>> = masks
            .iter()
            .map(|&m| all_injections(self.subset_size(m), other.subset_size(m)))
            .collect();
        let mut raw: u128 = 1;
        for o in &options {
            raw = raw.saturating_mul(o.len() as u128);
        }
        if raw > limit {
            return Err(GammaError::TooLarge {
                objects: raw,
                limit,
            });
        }
        if options.iter().any(|o| o.is_empty()) {
            return Ok(0);
        }
        let mut count = 0u128;
        let mut idx = vec![0usize; masks.len()];
        'families: loop {
            let natural = masks.iter().enumerate().all(|(a, &sup)| {
                masks.iter().enumerate().all(|(b, &sub)| {
                    if sub & sup != sub || sub == sup {
                        return true;
                    }
                    let left =
                        options[a][idx[a]].compose(&self.embedding(sub, sup));
                    let right =
                        other.embedding(sub, sup).compose(&options[b][idx[b]]);
                    left == right
                })
            });
            if natural {
                count += 1;
            }
            let mut j = 0;
            loop {
                if j == masks.len() {
                    break 'families;
                }
                idx[j] += 1;
                if idx[j] < options[j].len() {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
        }
        Ok(count)
    }
}

/// Diagram with the given leaf sizes whose every subset concatenates its
/// member blocks in the given total order of leaves.
pub fn section_from_ordering(order: &[usize], sizes: &[usize]) -> SumDiagram {
    let leaves = sizes.len();
    assert_eq!(order.len(), leaves, "order must list every leaf");
    let mut seen = vec![false; leaves];
    for &s in order {
        assert!(s < leaves && !seen[s], "order must list every leaf once");
        seen[s] = true;
    }
    let mut arrangements = BTreeMap::new();
    for mask in 0..1usize << leaves {
        if mask.count_ones() < 2 {
            continue;
        }
        let total: usize = mask_bits(mask).into_iter().map(|b| sizes[b]).sum();
        let mut offset_of = vec![0usize; leaves];
        let mut off = 0;
        for &s in order {
            if mask >> s & 1 == 1 {
                offset_of[s] = off;
                off += sizes[s];
            }
        }
        let fams: Vec<Injection> = mask_bits(mask)
            .into_iter()
            .map(|b| {
                Injection::new(total, (1..=sizes[b]).map(|i| offset_of[b] + i).collect())
                    .unwrap()
            })
            .collect();
        arrangements.insert(mask, fams);
    }
    SumDiagram {
        sizes: sizes.to_vec(),
        arrangements,
    }
}

/// Injections counted without enumeration: target!/(target-source)!.
pub fn inj_count(source: usize, target: usize) -> u128 {
    if source > target {
        return 0;
    }
    (0..source).map(|i| (target - i) as u128).product()
}

/// All injections from `1..=source` to `1..=target`, lexicographic by image.
pub fn all_injections(source: usize, target: usize) -> Vec<Injection> {
    fn go(
        source: usize,
        target: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Injection>,
    ) {
        if image.len() == source {
            out.push(Injection::new(target, image.clone()).unwrap());
            return;
        }
        for v in 1..=target {
            if !used[v] {
                used[v] = true;
                image.push(v);
                go(source, target, image, used, out);
                image.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(
        source,
        target,
        &mut Vec::with_capacity(source),
        &mut vec![false; target + 1],
        &mut out,
    );
    out
}

/// Number of diagrams with the given leaf sizes: arrangements for distinct
/// subsets are independent, one factorial factor per subset of two or more
/// leaves.
pub fn diagram_count(sizes: &[usize]) -> u128 {
    let leaves = sizes.len();
    let mut count: u128 = 1;
    for mask in 0..1usize << leaves {
        if mask.count_ones() < 2 {
            continue;
        }
        let total: usize = mask_bits(mask).into_iter().map(|b| sizes[b]).sum();
        count = count.saturating_mul((1..=total as u128).product::<u128>());
    }
    count
}

fn arrangement_from_permutation(
    sizes: &[usize],
    bits: &[usize],
    perm: &Permutation,
) -> Vec<Injection> {
    let total: usize = bits.iter().map(|&b| sizes[b]).sum();
    let mut fams = Vec::with_capacity(bits.len());
    let mut offset = 0;
    for &b in bits {
        let image: Vec<usize> = (1..=sizes[b]).map(|i| perm.apply(offset + i)).collect();
        fams.push(Injection::new(total, image).unwrap());
        offset += sizes[b];
    }
    fams
}

/// All diagrams on `leaves` leaves with every leaf size at most `bound`.
/// Fails without materializing when the total would exceed `limit`.
pub fn enumerate_sum_diagrams(
    leaves: usize,
    bound: usize,
    limit: u128,
) -> Result<Vec<SumDiagram>, GammaError> {
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    let mut total: u128 = 0;
    let mut sizes = vec![0usize; leaves];
    loop {
        total = total.saturating_add(diagram_count(&sizes));
        tuples.push(sizes.clone());
        let mut j = 0;
        loop {
            if j == leaves {
                break;
            }
            sizes[j] += 1;
            if sizes[j] <= bound {
                break;
            }
            sizes[j] = 0;
            j += 1;
        }
        if j == leaves {
            break;
        }
    }
    if total > limit {
        return Err(GammaError::TooLarge {
            objects: total,
            limit,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    for sizes in tuples {
        let masks: Vec<usize> =
            (0..1usize << leaves).filter(|m| m.count_ones() >= 2).collect();
        let options: Vec<Vec<Vec<Injection>>> = masks
            .iter()
            .map(|&m| {
                let bits = mask_bits(m);
                let total: usize = bits.iter().map(|&b| sizes[b]).sum();
                Permutation::all(total)
                    .iter()
                    .map(|p| arrangement_from_permutation(&sizes, &bits, p))
                    .collect()
            })
            .collect();
        let mut idx = vec![0usize; masks.len()];
        'objects: loop {
            let arrangements: BTreeMap<usize, Vec<Injection>> = masks
                .iter()
                .zip(&idx)
                .map(|(&m, &i)| {
                    let pos = masks.iter().position(|&x| x == m).unwrap();
                    (m, options[pos][i].clone())
                })
                .collect();
            out.push(SumDiagram {
                sizes: sizes.clone(),
                arrangements,
            });
            let mut j = 0;
            loop {
                if j == masks.len() {
                    break 'objects;
                }
                idx[j] += 1;
                if idx[j] < options[j].len() {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::barcons::{bar, constant, cyclic_bar, cyclic_bar_split, split_r};
    use crate::builtins;
    use crate::simplicial::{circle, circle_plus, sphere_zero};

    fn klein() -> FiniteMonoid {
        let table: Vec<Vec<usize>> =
            (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        FiniteMonoid::new(
            "klein",
            vec!["1".into(), "a".into(), "b".into(), "ab".into()],
            &table,
        )
        .unwrap()
    }

    fn idem() -> FiniteMonoid {
        FiniteMonoid::new(
            "idem",
            vec!["1".into(), "a".into()],
            &[vec![0, 1], vec![1, 1]],
        )
        .unwrap()
    }

    #[test]
    fn evaluation_multiplies_fibers_and_discards_base_bound_points() {
        let g = GammaSpace::new(&builtins::cyclic_group(3)).unwrap();
        // collapsing both points of a two point set multiplies
        let collapse = BasedMap::new(2, 1, vec![1, 1]);
        for a in 0..3 {
            for b in 0..3 {
                let x = g.encode(&[a, b]);
                assert_eq!(g.induced(&collapse, x), (a + b) % 3);
            }
        }
        // a point sent to the basepoint is discarded, untouched points
        // receive the unit
        let drop_first = BasedMap::new(2, 2, vec![0, 2]);
        for a in 0..3 {
            for b in 0..3 {
                let x = g.encode(&[a, b]);
                assert_eq!(g.induced(&drop_first, x), g.encode(&[0, b]));
            }
        }
        // a one point set evaluates to the monoid itself
        assert_eq!(g.eval_size(&BasedSet::of_size(1)), 3);
        let s3 = builtins::gl2z2();
        assert!(matches!(
            GammaSpace::new(&s3),
            Err(GammaError::NotCommutative { .. })
        ));
    }

    #[test]
    fn evaluation_is_functorial_on_small_based_sets() {
        for m in [builtins::cyclic_group(2), builtins::cyclic_group(3), idem()] {
            let g = GammaSpace::new(&m).unwrap();
            for src in 0..=3usize {
                for x in 0..g.size_on(src) {
                    assert_eq!(g.induced(&BasedMap::identity(src), x), x);
                }
                for mid in 0..=3usize {
                    for tgt in 0..=3usize {
                        for alpha in BasedMap::all(src, mid) {
                            for beta in BasedMap::all(mid, tgt) {
                                let both = beta.compose(&alpha);
                                for x in 0..g.size_on(src) {
                                    assert_eq!(
                                        g.induced(&beta, g.induced(&alpha, x)),
                                        g.induced(&both, x)
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn circle_evaluations_recover_the_bar_constructions() {
        for m in [builtins::cyclic_group(2), builtins::cyclic_group(3)] {
            let plus = gamma_on_simplicial(&m, &circle_plus(5), 5).unwrap();
            let bcy = cyclic_bar(&m, 5);
            assert!(plus.is_cyclic());
            let reduced = gamma_on_simplicial(&m, &circle(5), 5).unwrap();
            // the circle rotation moves the basepoint, so no rotation descends
            assert!(!reduced.is_cyclic());
            let b = bar(&m, 5);
            let fixed = gamma_on_simplicial(&m, &sphere_zero(5), 5).unwrap();
            let c = constant(&m, 5);
            for (left, right) in [(&plus, &bcy), (&reduced, &b), (&fixed, &c)] {
                for k in 0..=4usize {
                    assert_eq!(left.size(k).unwrap(), right.size(k).unwrap());
                    for x in 0..left.size(k).unwrap() {
                        for i in 0..=k {
                            if k >= 1 {
                                assert_eq!(left.face(k, i, x), right.face(k, i, x));
                            }
                            assert_eq!(
                                left.degeneracy(k, i, x),
                                right.degeneracy(k, i, x)
                            );
                        }
                        if left.is_cyclic() && right.is_cyclic() {
                            assert_eq!(left.cyclic(k, x), right.cyclic(k, x));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn circle_collapses_realize_the_splitting() {
        let m = builtins::cyclic_group(2);
        let g = GammaSpace::new(&m).unwrap();
        let n = m.size();
        let (fwd, _) = cyclic_bar_split(&m, 4).unwrap();
        for k in 0..=4usize {
            let points = k + 1;
            // the added basepoint collapse: every coordinate multiplies in
            let to_point = BasedMap::new(points, 1, vec![1; points]);
            // collapsing the extra point into the circle drops the head
            let drop_head = BasedMap::new(points, k, (0..=k).collect());
            // the fixed point inclusion hits the head coordinate
            let include = BasedMap::new(1, points, vec![1]);
            for x in 0..g.size_on(points) {
                let total = g.induced(&to_point, x);
                let tail = g.induced(&drop_head, x);
                assert_eq!(fwd.apply(k, x), total * n.pow(k as u32) + tail);
                assert_eq!(
                    split_r(&m, &g.decode(points, x)).unwrap(),
                    total
                );
            }
            for v in 0..n {
                assert_eq!(g.induced(&to_point, g.induced(&include, v)), v);
            }
        }
    }

    #[test]
    fn wedge_collapses_are_bijective_and_group_likeness_is_invertibility() {
        for m in [
            builtins::cyclic_group(2),
            builtins::cyclic_group(3),
            builtins::cyclic_group(4),
            klein(),
            idem(),
        ] {
            for sp in 0..=3usize {
                for tp in 0..=3usize {
                    let s = BasedSet::of_size(sp);
                    let t = BasedSet::of_size(tp);
                    assert_eq!(check_special(&m, &s, &t), Ok(true));
                }
            }
        }
        assert!(is_very_special(&builtins::cyclic_group(2)));
        assert!(is_very_special(&klein()));
        assert!(!is_very_special(&idem()));
        assert!(!is_very_special(&builtins::gl2z2()));
    }

    #[test]
    fn group_completion_in_canonical_form() {
        assert_eq!(
            group_completion(&builtins::cyclic_group(3)).unwrap(),
            AbGroup::torsion_i64(&[3])
        );
        assert_eq!(
            group_completion(&builtins::cyclic_group(4)).unwrap(),
            AbGroup::torsion_i64(&[4])
        );
        assert_eq!(
            group_completion(&klein()).unwrap(),
            AbGroup::torsion_i64(&[2, 2])
        );
        // an idempotent becomes invertible, hence trivial
        assert!(group_completion(&idem()).unwrap().is_trivial());
        assert!(group_completion(&builtins::gl2z2()).is_err());
    }

    #[test]
    fn diagram_enumeration_matches_counting() {
        let limit = 1 << 20;
        // one leaf: no subsets with two members, one diagram per size
        assert_eq!(enumerate_sum_diagrams(1, 2, limit).unwrap().len(), 3);
        // two leaves of size one: the two arrangements of the pair
        let two = enumerate_sum_diagrams(2, 1, limit).unwrap();
        assert_eq!(
            two.iter().filter(|d| d.sizes() == [1, 1]).count(),
            2
        );
        // all zero sizes: exactly one empty diagram
        for leaves in 0..=3usize {
            assert_eq!(enumerate_sum_diagrams(leaves, 0, limit).unwrap().len(), 1);
        }
        for d in enumerate_sum_diagrams(2, 2, limit).unwrap().iter() {
            assert_eq!(diagram_count(d.sizes()) as usize, {
                enumerate_sum_diagrams(2, 2, limit)
                    .unwrap()
                    .iter()
                    .filter(|e| e.sizes() == d.sizes())
                    .count()
            });
        }
        // counts multiply over subsets, so three leaves of size two are
        // out of reach by design
        assert_eq!(diagram_count(&[2, 2, 2]), 24 * 24 * 24 * 720);
        assert!(matches!(
            enumerate_sum_diagrams(3, 2, limit),
            Err(GammaError::TooLarge { .. })
        ));
    }

    #[test]
    fn arrangements_cover_and_embeddings_compose() {
        for d in enumerate_sum_diagrams(3, 1, 1 << 20).unwrap() {
            for mask in 1..8usize {
                let mut hit = vec![0usize; d.subset_size(mask)];
                for b in mask_bits(mask) {
                    let inj = d.leaf_into(b, mask);
                    for i in 1..=d.sizes()[b] {
                        hit[inj.apply(i) - 1] += 1;
                    }
                }
                assert!(hit.iter().all(|&c| c == 1), "blocks must partition");
                for sub in 1..8usize {
                    if sub & mask != sub {
                        continue;
                    }
                    for mid in 1..8usize {
                        if sub & mid == sub && mid & mask == mid {
                            assert_eq!(
                                d.embedding(sub, mask),
                                d.embedding(mid, mask).compose(&d.embedding(sub, mid))
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pushforward_respects_identities_and_composition() {
        let limit = 1 << 20;
        let diagrams = enumerate_sum_diagrams(2, 2, limit).unwrap();
        for d in &diagrams {
            assert_eq!(&d.alpha_lower(&BasedMap::identity(2)), d);
            for alpha in BasedMap::all(2, 2) {
                for beta in BasedMap::all(2, 1) {
                    assert_eq!(
                        d.alpha_lower(&alpha).alpha_lower(&beta),
                        d.alpha_lower(&beta.compose(&alpha))
                    );
                }
            }
        }
        for d in enumerate_sum_diagrams(3, 1, limit).unwrap() {
            assert_eq!(d.alpha_lower(&BasedMap::identity(3)), d);
            for alpha in BasedMap::all(3, 2) {
                for beta in BasedMap::all(2, 2) {
                    assert_eq!(
                        d.alpha_lower(&alpha).alpha_lower(&beta),
                        d.alpha_lower(&beta.compose(&alpha))
                    );
                }
            }
        }
        // collapsing every leaf to a point leaves the full subset total
        let d = section_from_ordering(&[1, 0], &[1, 2]);
        let collapsed = d.alpha_lower(&BasedMap::new(2, 1, vec![1, 1]));
        assert_eq!(collapsed.sizes(), [3]);
        assert_eq!(collapsed.subset_size(1), d.subset_size(0b11));
    }

    #[test]
    fn sections_split_the_size_projection() {
        let a = section_from_ordering(&[0, 1], &[1, 1]);
        assert_eq!(a.leaf_into(0, 0b11).image(), &[1]);
        assert_eq!(a.leaf_into(1, 0b11).image(), &[2]);
        let b = section_from_ordering(&[1, 0], &[1, 1]);
        assert_eq!(b.leaf_into(0, 0b11).image(), &[2]);
        assert_eq!(b.leaf_into(1, 0b11).image(), &[1]);
        // the two arrangements above are the whole groupoid of that size
        let two = enumerate_sum_diagrams(2, 1, 1 << 20).unwrap();
        assert!(two.contains(&a) && two.contains(&b));
        for sizes in [[0usize, 2, 1], [1, 2, 3], [2, 0, 2]] {
            for order in [[0usize, 1, 2], [2, 0, 1], [1, 2, 0]] {
                let d = section_from_ordering(&order, &sizes);
                assert_eq!(d.sizes(), sizes);
                // blocks concatenate in order: offsets are partial sums
                let mut off = 0;
                for &s in &order {
                    let inj = d.leaf_into(s, 0b111);
                    let want: Vec<usize> = (off + 1..=off + sizes[s]).collect();
                    assert_eq!(inj.image(), want);
                    off += sizes[s];
                }
            }
        }
    }

    #[test]
    fn morphism_counts_factor_through_leaf_sizes() {
        let limit = 1 << 24;
        let small = enumerate_sum_diagrams(2, 1, limit).unwrap();
        for a in &small {
            for b in &small {
                let fast = a.hom_count(b);
                let expected: u128 = (0..2)
                    .map(|s| inj_count(a.sizes()[s], b.sizes()[s]))
                    .product();
                assert_eq!(fast, expected);
                assert_eq!(a.hom_count_brute(b, limit).unwrap(), fast);
            }
        }
        let p = section_from_ordering(&[0, 1], &[1, 2]);
        let q = section_from_ordering(&[1, 0], &[2, 2]);
        assert_eq!(p.hom_count(&q), inj_count(1, 2) * inj_count(2, 2));
        assert_eq!(p.hom_count_brute(&q, limit).unwrap(), p.hom_count(&q));
        assert_eq!(q.hom_count(&p), 0);
        assert!(matches!(
            p.hom_count_brute(&q, 10),
            Err(GammaError::TooLarge { .. })
        ));
    }
}
