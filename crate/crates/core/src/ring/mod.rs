//! Finite commutative rings with unity, stored as Cayley tables.

mod build;
mod spec;
mod table;

use std::fmt;

pub use build::{build_ring, build_ring_with};
pub use spec::{parse_ring_spec, Monomial, RingSpec};
pub use table::{load_table_ring, parse_table_ring};

pub(crate) use spec::prime_power;

use crate::bitset::ElementSet;
use crate::error::BuildError;

/// Element index into a [`FiniteRing`].
pub type Elem = usize;

/// A finite commutative ring with unity given by its addition and
/// multiplication tables over the element indices `0..order`.
#[derive(Clone)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: Elem,
    one: Elem,
    labels: Vec<String>,
    spec: Option<RingSpec>,
    description: String,
    /// Orders of the direct factors when the element indices follow a
    /// mixed-radix product layout (first factor most significant).
    layout: Option<Vec<usize>>,
}

impl FiniteRing {
    /// Builds a ring from raw tables. Tables are row-major `order × order`.
    /// Axioms are verified when `check_axioms` is set.
    pub fn from_tables(
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: Elem,
        one: Elem,
        labels: Vec<String>,
        description: impl Into<String>,
        check_axioms: bool,
    ) -> Result<FiniteRing, BuildError> {
        let order = labels.len();
        assert_eq!(add.len(), order * order, "addition table shape");
        assert_eq!(mul.len(), order * order, "multiplication table shape");
        if let Some(bad) = add.iter().chain(&mul).position(|&v| v as usize >= order) {
            let (i, j) = ((bad % (order * order)) / order, bad % order);
            return Err(BuildError::Axiom {
                axiom: "closure",
                witness: vec![i, j],
            });
        }
        if zero >= order || one >= order {
            return Err(BuildError::Axiom {
                axiom: "zero/one in range",
                witness: vec![zero, one],
            });
        }
        let mut neg = vec![u32::MAX; order];
        for a in 0..order {
            if let Some(b) = (0..order).find(|&b| add[a * order + b] as usize == zero) {
                neg[a] = b as u32;
            }
        }
        let ring = FiniteRing {
            order,
            add,
            mul,
            neg,
            zero,
            one,
            labels,
            spec: None,
            description: description.into(),
            layout: None,
        };
        if check_axioms {
            ring.check_axioms()?;
        } else if ring.neg.contains(&u32::MAX) {
            return Err(BuildError::Axiom {
                axiom: "additive inverse",
                witness: vec![ring.neg.iter().position(|&v| v == u32::MAX).unwrap()],
            });
        }
        Ok(ring)
    }

    pub(crate) fn with_spec(mut self, spec: RingSpec) -> Self {
        self.description = spec.to_string();
        self.spec = Some(spec);
        self
    }

    pub(crate) fn with_layout(mut self, layout: Vec<usize>) -> Self {
        self.layout = Some(layout);
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> Elem {
        self.one
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.order + b] as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b] as Elem
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a] as Elem
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Element with the given label, if any.
    pub fn element_by_label(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    /// The originating spec, with nested products flattened.
    pub fn spec(&self) -> Option<&RingSpec> {
        self.spec.as_ref()
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// Factor orders of a constructed product ring.
    pub fn product_layout(&self) -> Option<&[usize]> {
        self.layout.as_deref()
    }

    /// Element of a constructed product ring from its component indices.
    pub fn element_from_components(&self, comps: &[usize]) -> Option<Elem> {
        let layout = self.layout.as_ref()?;
        if comps.len() != layout.len() || comps.iter().zip(layout).any(|(c, o)| c >= o) {
            return None;
        }
        Some(comps.iter().zip(layout).fold(0, |acc, (c, o)| acc * o + c))
    }

    pub fn components_of(&self, mut a: Elem) -> Option<Vec<usize>> {
        let layout = self.layout.as_ref()?;
        let mut comps = vec![0; layout.len()];
        for (slot, o) in comps.iter_mut().zip(layout).rev() {
            *slot = a % o;
            a /= o;
        }
        Some(comps)
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.elements().any(|b| self.mul(a, b) == self.one)
    }

    /// The group of units `U(R)`.
    pub fn units(&self) -> ElementSet {
        ElementSet::from_members(self.order, self.elements().filter(|&a| self.is_unit(a)))
    }

    /// Idempotents `e` with `e² = e`.
    pub fn idempotents(&self) -> Vec<Elem> {
        self.elements().filter(|&e| self.mul(e, e) == e).collect()
    }

    /// `a^k` with `a^0 = 1`.
    pub fn pow(&self, a: Elem, k: u32) -> Elem {
        (0..k).fold(self.one, |acc, _| self.mul(acc, a))
    }

    /// Exhaustively verifies the commutative-ring-with-unity axioms.
    pub fn check_axioms(&self) -> Result<(), BuildError> {
        let n = self.order;
        let fail = |axiom, witness: Vec<usize>| Err(BuildError::Axiom { axiom, witness });
        if self.zero == self.one {
            return fail("one != zero", vec![self.zero]);
        }
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail("additive identity", vec![a]);
            }
            if self.mul(a, self.one) != a {
                return fail("multiplicative identity", vec![a]);
            }
            if self.neg[a] == u32::MAX {
                return fail("additive inverse", vec![a]);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", vec![a, b]);
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplicative commutativity", vec![a, b]);
                }
            }
        }
        let triples = || (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))));
        if let Some((a, b, c)) =
            triples().find(|&(a, b, c)| self.add(self.add(a, b), c) != self.add(a, self.add(b, c)))
        {
            return fail("additive associativity", vec![a, b, c]);
        }
        if let Some((a, b, c)) =
            triples().find(|&(a, b, c)| self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)))
        {
            return fail("multiplicative associativity", vec![a, b, c]);
        }
        if let Some((a, b, c)) = triples()
            .find(|&(a, b, c)| self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)))
        {
            return fail("distributivity", vec![a, b, c]);
        }
        Ok(())
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("description", &self.description)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}
