//! ∇-graphs, R-classes, Betti elements and minimal presentations.
//!
//! The ∇-graph of an element has its factorizations as vertices, two being
//! adjacent when their dot product is nonzero (they share an atom). Its
//! connected components are the R-classes; elements with a disconnected
//! graph are the Betti elements, and a minimal presentation is obtained by
//! joining one representative of each R-class with a star tree, over every
//! Betti element.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::Result;
use crate::kernel::IntVector;
use crate::monoid::affine::AffineSemigroup;
use crate::monoid::numerical::NumericalSemigroup;
use crate::monoid::{Factorization, PresentationPair};

/// Connected components of the ∇-graph on a set of factorizations: two
/// vertices are joined when their exponent vectors have nonzero dot
/// product. Components and their members are sorted lexicographically.
///
/// Vertices sharing an atom form a clique, so the components come from a
/// union-find pass per atom rather than pairwise dot products.
pub fn nabla_components(fiber: &[Factorization]) -> Vec<Vec<Factorization>> {
    let n = fiber.len();
    let e = fiber.first().map_or(0, |z| z.exponents().len());
    let mut parent: Vec<usize> = (0..n).collect();

    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }

    for atom in 0..e {
        let mut anchor: Option<usize> = None;
        for (i, z) in fiber.iter().enumerate() {
            if z.exponents().get(atom).is_zero() {
                continue;
            }
            match anchor {
                None => anchor = Some(i),
                Some(a) => {
                    let (ra, ri) = (find(&mut parent, a), find(&mut parent, i));
                    if ra != ri {
                        parent[ra] = ri;
                    }
                }
            }
        }
    }

    let mut classes: Vec<Vec<Factorization>> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        match roots.iter().position(|&x| x == r) {
            Some(k) => classes[k].push(fiber[i].clone()),
            None => {
                roots.push(r);
                classes.push(vec![fiber[i].clone()]);
            }
        }
    }
    for class in &mut classes {
        class.sort();
    }
    classes.sort();
    classes
}

/// Star-tree pairs joining the R-classes: the root is the class holding the
/// lexicographically smallest factorization, each class is represented by
/// its lexicographic minimum.
fn star_pairs(classes: &[Vec<Factorization>]) -> Vec<PresentationPair> {
    if classes.len() < 2 {
        return Vec::new();
    }
    // classes are sorted, so the first one contains the global minimum
    let root = classes[0][0].clone();
    classes[1..]
        .iter()
        .map(|class| PresentationPair::new(root.clone(), class[0].clone()))
        .collect()
}

impl AffineSemigroup {
    /// R-classes of `Z(m)`: the vertex sets of the connected components of
    /// the ∇-graph of `m`.
    pub fn r_classes(&self, m: &IntVector) -> Result<Vec<Vec<Factorization>>> {
        Ok(nabla_components(&self.factorizations(m)?))
    }

    /// The Betti elements: elements whose ∇-graph is disconnected. The
    /// candidates are the images `φ(x^+)` of the Graver basis elements,
    /// which carry every presentation relation.
    pub fn betti_elements(&self) -> Result<&[IntVector]> {
        if let Some(b) = self.betti.get() {
            return Ok(b);
        }
        let mut candidates: BTreeSet<IntVector> = BTreeSet::new();
        for x in self.graver()? {
            candidates.insert(self.apply(&x.positive_part())?);
        }
        let mut betti = Vec::new();
        for c in candidates {
            if self.r_classes(&c)?.len() > 1 {
                betti.push(c);
            }
        }
        Ok(self.betti.get_or_init(|| betti))
    }

    /// A minimal presentation: for every Betti element, star-tree pairs
    /// joining its R-classes. Its cardinality is the sum over Betti
    /// elements of (number of R-classes − 1).
    pub fn minimal_presentation(&self) -> Result<Vec<PresentationPair>> {
        let mut pairs = Vec::new();
        for b in self.betti_elements()? {
            pairs.extend(star_pairs(&self.r_classes(b)?));
        }
        pairs.sort();
        Ok(pairs)
    }

    /// The minimal generating system of `ker φ` as a monoid: the pairs
    /// `(x^+, x^-)` and `(x^-, x^+)` for Graver basis elements `x`,
    /// together with the diagonal pairs `(e_i, e_i)`.
    pub fn kernel_generating_pairs(&self) -> Result<Vec<PresentationPair>> {
        let e = self.atom_count()?;
        let mut pairs = Vec::new();
        for x in self.graver()? {
            let plus = Factorization::new(x.positive_part());
            let minus = Factorization::new(x.negative_part());
            pairs.push(PresentationPair::new(plus.clone(), minus.clone()));
            pairs.push(PresentationPair::new(minus, plus));
        }
        for i in 0..e {
            let unit = Factorization::new(IntVector::unit(e, i));
            pairs.push(PresentationPair::new(unit.clone(), unit));
        }
        pairs.sort();
        Ok(pairs)
    }

    /// Elements admitting two factorizations that form a generating pair of
    /// `ker φ`: the images of the Graver positive parts plus the atoms.
    pub fn primitive_elements(&self) -> Result<Vec<IntVector>> {
        let mut out: BTreeSet<IntVector> = self.minimal_generators()?.iter().cloned().collect();
        for x in self.graver()? {
            out.insert(self.apply(&x.positive_part())?);
        }
        Ok(out.into_iter().collect())
    }
}

impl NumericalSemigroup {
    pub fn r_classes(&self, m: u64) -> Vec<Vec<Factorization>> {
        nabla_components(&self.factorizations(m))
    }

    /// Betti elements through the Apéry set of the multiplicity: every
    /// Betti element has the form `m_i + w` with `i ≥ 2` and `w` a nonzero
    /// element of `Ap(S, m_1)`.
    pub fn betti_elements(&self) -> Vec<u64> {
        let mut candidates: BTreeSet<u64> = BTreeSet::new();
        for &mi in &self.generators()[1..] {
            for &w in self.apery_by_residue() {
                if w != 0 {
                    candidates.insert(mi + w);
                }
            }
        }
        candidates
            .into_iter()
            .filter(|&c| self.r_classes(c).len() > 1)
            .collect()
    }

    pub fn minimal_presentation(&self) -> Vec<PresentationPair> {
        let mut pairs = Vec::new();
        for b in self.betti_elements() {
            pairs.extend(star_pairs(&self.r_classes(b)));
        }
        pairs.sort();
        pairs
    }
}
