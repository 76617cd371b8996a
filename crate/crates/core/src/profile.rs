//! Local-ring invariants and the decomposition into local factors.

use itertools::Itertools;
use serde::Serialize;

use crate::ideal::IdealLattice;
use crate::ring::{Elem, FiniteRing};

/// Invariants of a local ring `(R, M)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LocalInvariants {
    /// Lattice index of `M`.
    pub maximal_ideal: usize,
    /// `|R/M|`.
    pub residue_order: usize,
    /// Nilpotency index of `M`; 1 exactly for fields.
    pub eta: u32,
    /// Size of a minimal generating set of `M`; 0 for fields.
    pub min_gen: usize,
    pub is_pir: bool,
    /// Some `x, y` with `<x, y> = M` and `x² = y² = 0`.
    pub has_nil_pair: bool,
    /// As above with additionally `xy = 0`.
    pub has_nil_pair_xy_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LocalProfile {
    pub is_local: bool,
    /// Present only for local rings.
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub local: Option<LocalInvariants>,
}

impl LocalProfile {
    pub fn is_field(&self) -> bool {
        self.local.as_ref().is_some_and(|l| l.eta == 1)
    }
}

pub fn local_profile(r: &FiniteRing, lattice: &IdealLattice) -> LocalProfile {
    let maximals = lattice.maximal_indices();
    let [m] = maximals[..] else {
        return LocalProfile { is_local: false, local: None };
    };
    let zero = lattice.zero_index();
    let m_ideal = lattice.ideal(m);
    let residue_order = r.order() / m_ideal.len();

    let mut eta = 1;
    let mut power = m;
    while power != zero {
        power = lattice.product(r, power, m);
        eta += 1;
    }

    let min_gen = minimal_generator_count(lattice, m);
    let is_pir = (0..lattice.len()).all(|i| lattice.is_principal(i));

    let (has_nil_pair, has_nil_pair_xy_zero) = if m == zero {
        (false, false)
    } else {
        let square_zero: Vec<Elem> = m_ideal
            .members()
            .iter()
            .filter(|&x| r.mul(x, x) == r.zero())
            .collect();
        let mut nil = false;
        let mut nil_xy = false;
        'search: for (i, &x) in square_zero.iter().enumerate() {
            for &y in &square_zero[i..] {
                if lattice.sum(lattice.principal_index(x), lattice.principal_index(y)) == m {
                    nil = true;
                    if r.mul(x, y) == r.zero() {
                        nil_xy = true;
                        break 'search;
                    }
                }
            }
        }
        (nil, nil_xy)
    };

    LocalProfile {
        is_local: true,
        local: Some(LocalInvariants {
            maximal_ideal: m,
            residue_order,
            eta,
            min_gen,
            is_pir,
            has_nil_pair,
            has_nil_pair_xy_zero,
        }),
    }
}

/// Least `k` such that `k` elements generate the ideal `target`.
///
/// Two elements generating the same principal ideal are interchangeable in a
/// generating set, so the search runs over subsets of the distinct nonzero
/// principal ideals contained in `target`, smallest subsets first.
pub(crate) fn minimal_generator_count(lattice: &IdealLattice, target: usize) -> usize {
    if target == lattice.zero_index() {
        return 0;
    }
    let inside: Vec<usize> = (1..lattice.len())
        .filter(|&i| lattice.is_principal(i) && lattice.ideal(i).is_subset(lattice.ideal(target)))
        .collect();
    (1..=inside.len())
        .find(|&k| {
            inside
                .iter()
                .combinations(k)
                .any(|c| c.iter().fold(lattice.zero_index(), |acc, &&i| lattice.sum(acc, i)) == target)
        })
        .expect("the target is the sum of all its principal subideals")
}

/// Splits `R` along a complete set of primitive orthogonal idempotents into
/// local factors `e_i R`. Returns `[R]` when `R` is local.
pub fn decompose_local(r: &FiniteRing) -> Vec<FiniteRing> {
    let idem = r.idempotents();
    let primitive: Vec<Elem> = idem
        .iter()
        .copied()
        .filter(|&e| {
            e != r.zero()
                && idem
                    .iter()
                    .all(|&f| f == r.zero() || f == e || r.mul(f, e) != f)
        })
        .collect();
    if primitive.len() <= 1 {
        return vec![r.clone()];
    }
    primitive.iter().map(|&e| corner_ring(r, e)).collect()
}

/// The ring `eR` with unity `e`.
fn corner_ring(r: &FiniteRing, e: Elem) -> FiniteRing {
    let mut members: Vec<Elem> = r.elements().map(|x| r.mul(e, x)).collect();
    members.sort_unstable();
    members.dedup();
    let local = |x: Elem| members.binary_search(&x).expect("eR is closed") as u32;
    let n = members.len();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for &a in &members {
        for &b in &members {
            add.push(local(r.add(a, b)));
            mul.push(local(r.mul(a, b)));
        }
    }
    let labels = members.iter().map(|&x| r.label(x).to_string()).collect();
    let desc = format!("{} . {}", r.label(e), r.description());
    FiniteRing::from_tables(
        add,
        mul,
        local(r.zero()) as usize,
        local(e) as usize,
        labels,
        desc,
        n <= 64,
    )
    .expect("a corner ring of a commutative ring is a ring")
}
