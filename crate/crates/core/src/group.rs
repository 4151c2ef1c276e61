//! Finite groups, group actions, and invariant measures.
//!
//! Groups are encoded as Cayley tables over contiguous element indices
//! `0..order`; products are O(1) lookups and every axiom is mechanically
//! checkable. Actions are lookup tables `G × X → X`. For finite groups the
//! left and right Haar measures coincide with counting measure; the
//! [`Side`] tag keeps the left/right bookkeeping explicit in signatures.

use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;

/// Beyond this order, associativity is spot-checked on random triples
/// instead of scanned exhaustively (the scan is O(order³)).
pub const EXHAUSTIVE_SCAN_CAP: usize = 5040;

/// Number of random triples checked when the exhaustive scan is skipped.
const RANDOM_TRIPLES: usize = 10_000;

/// Hard cap for the symmetric-group builder (factorial growth).
const SYMMETRIC_MAX: usize = 6;

/// A finite group presented by its Cayley table.
///
/// Elements are the indices `0..order`; `cayley[g][h]` is the index of the
/// product `gh`. The structure also caches the identity, the inverse table,
/// and a small generating set used to shrink linear-algebra constraint
/// stacks downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Cyclic group `Z_n` with addition mod `n`.
    pub fn cyclic(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameter("cyclic group order must be at least 1"));
        }
        let mut cayley = vec![0usize; n * n];
        for g in 0..n {
            for h in 0..n {
                cayley[g * n + h] = (g + h) % n;
            }
        }
        let inverse = (0..n).map(|g| (n - g) % n).collect();
        let generators = if n > 1 { vec![1] } else { Vec::new() };
        Ok(FiniteGroup { order: n, cayley, identity: 0, inverse, generators })
    }

    /// Symmetric group `S_n` on `n` letters, `n ≤ 6`.
    ///
    /// Elements are all permutations in lexicographic one-line order, so
    /// index 0 is the identity. The product is composition:
    /// `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameter("symmetric group degree must be at least 1"));
        }
        if n > SYMMETRIC_MAX {
            return Err(Error::SizeLimit { requested: n, max: SYMMETRIC_MAX });
        }
        let perms = all_permutations(n);
        let order = perms.len();
        let mut cayley = vec![0usize; order * order];
        let mut work = vec![0usize; n];
        for (gi, g) in perms.iter().enumerate() {
            for (hi, h) in perms.iter().enumerate() {
                for i in 0..n {
                    work[i] = g[h[i]];
                }
                cayley[gi * order + hi] = perm_rank(&work);
            }
        }
        let mut inverse = vec![0usize; order];
        for (gi, g) in perms.iter().enumerate() {
            for i in 0..n {
                work[g[i]] = i;
            }
            inverse[gi] = perm_rank(&work);
        }
        let generators = match n {
            1 => Vec::new(),
            _ => {
                // A transposition and an n-cycle generate S_n.
                let mut t: Vec<usize> = (0..n).collect();
                t.swap(0, 1);
                let c: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
                let mut gens = vec![perm_rank(&t)];
                let c_rank = perm_rank(&c);
                if c_rank != gens[0] {
                    gens.push(c_rank);
                }
                gens
            }
        };
        Ok(FiniteGroup { order, cayley, identity: 0, inverse, generators })
    }

    /// Builds a group from a user-supplied product table, validating every
    /// group axiom. Errors carry the position of the first failure.
    pub fn from_cayley(table: &[Vec<usize>]) -> Result<Self, Error> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidParameter("cayley table must be nonempty"));
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(Error::TableNotSquare { row, len: r.len(), expected: order });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(Error::EntryOutOfRange { row, col, value, order });
                }
            }
        }
        let mut cayley = vec![0usize; order * order];
        for (row, r) in table.iter().enumerate() {
            cayley[row * order..(row + 1) * order].copy_from_slice(r);
        }

        check_latin(&cayley, order)?;
        let identity = find_identity(&cayley, order)?;
        let inverse = find_inverses(&cayley, order, identity)?;
        check_associativity(&cayley, order)?;

        let generators = greedy_generators(&cayley, order, identity);
        Ok(FiniteGroup { order, cayley, identity, inverse, generators })
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Index of the identity element.
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Product `gh`.
    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.cayley[g * self.order + h]
    }

    /// Inverse `g⁻¹`.
    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// Iterator over all element indices.
    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    /// A generating set of the group. Empty exactly for the trivial group.
    ///
    /// Commuting with the operators of a generating set is equivalent to
    /// commuting with the whole family, so commutant solves only stack
    /// these elements.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Re-checks every group axiom against the stored tables.
    ///
    /// Latin-square, identity, and inverse checks are always exhaustive;
    /// associativity is exhaustive up to order [`EXHAUSTIVE_SCAN_CAP`] and
    /// spot-checked on 10⁴ deterministic random triples beyond that.
    pub fn validate(&self) -> Result<(), Error> {
        check_latin(&self.cayley, self.order)?;
        for h in 0..self.order {
            if self.mul(self.identity, h) != h || self.mul(h, self.identity) != h {
                return Err(Error::NoIdentity);
            }
        }
        for g in 0..self.order {
            let gi = self.inverse[g];
            if self.mul(g, gi) != self.identity || self.mul(gi, g) != self.identity {
                return Err(Error::NoInverse { element: g });
            }
        }
        check_associativity(&self.cayley, self.order)
    }
}

/// Generates all permutations of `0..n` in lexicographic order.
fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    out
}

/// Lexicographic rank of a permutation (Lehmer code).
fn perm_rank(p: &[usize]) -> usize {
    let n = p.len();
    let mut fact = 1usize;
    let mut facts = vec![1usize; n];
    for (i, slot) in facts.iter_mut().enumerate().skip(1) {
        fact *= i;
        *slot = fact;
    }
    let mut rank = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank += smaller * facts[n - 1 - i];
    }
    rank
}

fn check_latin(cayley: &[usize], order: usize) -> Result<(), Error> {
    let mut seen = vec![false; order];
    for row in 0..order {
        seen.iter_mut().for_each(|s| *s = false);
        for col in 0..order {
            let v = cayley[row * order + col];
            if seen[v] {
                return Err(Error::RowNotPermutation { row });
            }
            seen[v] = true;
        }
    }
    for col in 0..order {
        seen.iter_mut().for_each(|s| *s = false);
        for row in 0..order {
            let v = cayley[row * order + col];
            if seen[v] {
                return Err(Error::ColumnNotPermutation { col });
            }
            seen[v] = true;
        }
    }
    Ok(())
}

fn find_identity(cayley: &[usize], order: usize) -> Result<usize, Error> {
    let e = (0..order)
        .find(|&g| (0..order).all(|h| cayley[g * order + h] == h))
        .ok_or(Error::NoIdentity)?;
    if (0..order).all(|g| cayley[g * order + e] == g) {
        Ok(e)
    } else {
        Err(Error::NoIdentity)
    }
}

fn find_inverses(cayley: &[usize], order: usize, identity: usize) -> Result<Vec<usize>, Error> {
    let mut inverse = vec![0usize; order];
    for g in 0..order {
        let h = (0..order)
            .find(|&h| cayley[g * order + h] == identity)
            .ok_or(Error::NoInverse { element: g })?;
        if cayley[h * order + g] != identity {
            return Err(Error::NoInverse { element: g });
        }
        inverse[g] = h;
    }
    Ok(inverse)
}

fn check_associativity(cayley: &[usize], order: usize) -> Result<(), Error> {
    let mul = |g: usize, h: usize| cayley[g * order + h];
    if order <= EXHAUSTIVE_SCAN_CAP {
        for g in 0..order {
            for h in 0..order {
                let gh = mul(g, h);
                for k in 0..order {
                    if mul(gh, k) != mul(g, mul(h, k)) {
                        return Err(Error::NotAssociative { g, h, k });
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_CA11);
        for _ in 0..RANDOM_TRIPLES {
            let g = (rng.next_u64() % order as u64) as usize;
            let h = (rng.next_u64() % order as u64) as usize;
            let k = (rng.next_u64() % order as u64) as usize;
            if mul(mul(g, h), k) != mul(g, mul(h, k)) {
                return Err(Error::NotAssociative { g, h, k });
            }
        }
    }
    Ok(())
}

/// Greedy generating set: repeatedly adjoin the smallest element outside
/// the subgroup generated so far. Yields at most log₂(order) generators.
fn greedy_generators(cayley: &[usize], order: usize, identity: usize) -> Vec<usize> {
    let mul = |g: usize, h: usize| cayley[g * order + h];
    let mut gens: Vec<usize> = Vec::new();
    let mut in_closure = vec![false; order];
    in_closure[identity] = true;
    let mut closure_size = 1;
    while closure_size < order {
        let g = (0..order).find(|&x| !in_closure[x]).expect("closure incomplete");
        gens.push(g);
        let mut stack: Vec<usize> = (0..order).filter(|&x| in_closure[x]).collect();
        while let Some(x) = stack.pop() {
            for &s in &gens {
                let y = mul(x, s);
                if !in_closure[y] {
                    in_closure[y] = true;
                    closure_size += 1;
                    stack.push(y);
                }
            }
        }
    }
    gens
}

/// Left/right tag for invariant measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A nonnegative weight per point, invariant under a group action.
///
/// Finite groups are unimodular, so one counting measure serves as both the
/// left and the right Haar measure; the side tag records which role the
/// measure plays in a given signature.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantMeasure {
    weights: Vec<f64>,
    side: Side,
}

impl InvariantMeasure {
    /// Counting measure: weight 1 per point (unnormalized Haar).
    pub fn counting(size: usize, side: Side) -> Result<Self, Error> {
        if size == 0 {
            return Err(Error::InvalidParameter("measure must have at least one point"));
        }
        Ok(InvariantMeasure { weights: vec![1.0; size], side })
    }

    /// Measure with explicit weights, which must be finite and nonnegative.
    pub fn from_weights(weights: Vec<f64>, side: Side) -> Result<Self, Error> {
        if weights.is_empty() {
            return Err(Error::InvalidParameter("measure must have at least one point"));
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidParameter("measure weights must be finite and nonnegative"));
        }
        Ok(InvariantMeasure { weights, side })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    #[inline]
    pub fn weight(&self, x: usize) -> f64 {
        self.weights[x]
    }

    /// Total mass `Σ_x w(x)`.
    pub fn total(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Checks invariance under every element of the action: `w(g·x) = w(x)`.
    ///
    /// This is equivalent to `Σ_x w(x)·f(g·x) = Σ_x w(x)·f(x)` for all `f`.
    pub fn invariant_under(&self, action: &GAction) -> Result<(), Error> {
        if self.len() != action.num_points() {
            return Err(Error::DimensionMismatch {
                expected: action.num_points(),
                found: self.len(),
            });
        }
        for g in action.group().elements() {
            for x in 0..action.num_points() {
                let wx = self.weights[x];
                let wgx = self.weights[action.apply(g, x)];
                if (wx - wgx).abs() > 1e-12 * wx.abs().max(1.0) {
                    return Err(Error::MeasureNotInvariant { element: g });
                }
            }
        }
        Ok(())
    }
}

/// A left action of a finite group on a finite point set.
///
/// `table[g][x]` is the index of `g·x`. Every element must act by a
/// permutation (hidden layers are invertible maps), the identity must act
/// trivially, and `g·(h·x) = (gh)·x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GAction {
    group: alloc::sync::Arc<FiniteGroup>,
    num_points: usize,
    table: Vec<usize>,
    origin: usize,
}

impl GAction {
    /// Left translation action of the group on itself (`g·x = gx`),
    /// transitive with origin at the identity.
    pub fn regular(group: alloc::sync::Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let table = group.cayley.clone();
        let origin = group.identity();
        GAction { group, num_points: n, table, origin }
    }

    /// Action in which every element fixes every point.
    pub fn trivial(group: alloc::sync::Arc<FiniteGroup>, num_points: usize) -> Result<Self, Error> {
        if num_points == 0 {
            return Err(Error::InvalidParameter("action must have at least one point"));
        }
        let mut table = vec![0usize; group.order() * num_points];
        for g in 0..group.order() {
            for x in 0..num_points {
                table[g * num_points + x] = x;
            }
        }
        Ok(GAction { group, num_points, table, origin: 0 })
    }

    /// Builds an action from an explicit table, validating the action laws.
    pub fn new(
        group: alloc::sync::Arc<FiniteGroup>,
        num_points: usize,
        table: &[Vec<usize>],
        origin: usize,
    ) -> Result<Self, Error> {
        if num_points == 0 {
            return Err(Error::InvalidParameter("action must have at least one point"));
        }
        if origin >= num_points {
            return Err(Error::InvalidParameter("action origin must be a point index"));
        }
        if table.len() != group.order() {
            return Err(Error::DimensionMismatch { expected: group.order(), found: table.len() });
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != num_points {
                return Err(Error::TableNotSquare { row, len: r.len(), expected: num_points });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= num_points {
                    return Err(Error::EntryOutOfRange { row, col, value, order: num_points });
                }
            }
        }
        let mut flat = vec![0usize; group.order() * num_points];
        for (row, r) in table.iter().enumerate() {
            flat[row * num_points..(row + 1) * num_points].copy_from_slice(r);
        }
        let action = GAction { group, num_points, table: flat, origin };
        action.validate()?;
        Ok(action)
    }

    pub fn group(&self) -> &alloc::sync::Arc<FiniteGroup> {
        &self.group
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    /// The fixed origin point (meaningful when the action is transitive).
    pub fn origin(&self) -> usize {
        self.origin
    }

    /// The point `g·x`.
    #[inline]
    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.table[g * self.num_points + x]
    }

    /// Re-checks the action laws: trivial identity, per-element
    /// permutations, and left compatibility `g·(h·x) = (gh)·x`.
    pub fn validate(&self) -> Result<(), Error> {
        let e = self.group.identity();
        for x in 0..self.num_points {
            if self.apply(e, x) != x {
                return Err(Error::IdentityActsNontrivially { point: x });
            }
        }
        let mut seen = vec![false; self.num_points];
        for g in self.group.elements() {
            seen.iter_mut().for_each(|s| *s = false);
            for x in 0..self.num_points {
                let y = self.apply(g, x);
                if seen[y] {
                    return Err(Error::ActionNotPermutation { element: g });
                }
                seen[y] = true;
            }
        }
        for g in self.group.elements() {
            for h in self.group.elements() {
                let gh = self.group.mul(g, h);
                for x in 0..self.num_points {
                    if self.apply(g, self.apply(h, x)) != self.apply(gh, x) {
                        return Err(Error::ActionIncompatible { g, h, point: x });
                    }
                }
            }
        }
        Ok(())
    }
}
